//! Finite fields, matrices and polynomial factorization.
use greenring::poly::{factor_poly, minpoly, Poly};
use greenring::{FieldSpec, Matrix};

fn main() -> greenring::Result<()> {
    // GF(9) = GF(3)[x]/(x^2 + 1); the element `x` is encoded as 3
    let f = FieldSpec::new(3, 2, Some(&[1, 0, 1]))?;
    let w = f.primitive();
    println!("GF(9): primitive element {w}, order {}", f.order());
    println!("x * x = {} (that is -1)", f.mul(3, 3));
    println!("frobenius(x) = {}", f.frobenius(3));

    // a 4x4 matrix of rank 3 over GF(2)
    let f2 = FieldSpec::prime(2)?;
    let a = Matrix::from_rows(
        &f2,
        &[vec![1, 0, 1, 1], vec![0, 1, 1, 0], vec![1, 1, 0, 1], vec![0, 0, 0, 1]],
    )?;
    println!("rank {} (bit-packed storage over GF(2))", a.rank());
    let ns = a.nullspace();
    println!("left nullspace has {} row(s); v·A = 0: {}", ns.rows(), ns.mul(&a)?.is_zero());

    // x^8 - x over GF(3) splits into all monic irreducibles of degree 1 and 2
    let f3 = FieldSpec::prime(3)?;
    let mut c = vec![0; 10];
    c[9] = 1;
    c[1] = f3.neg(1);
    let x9 = Poly::new(&f3, c);
    for (g, e) in factor_poly(&x9)? {
        println!("  {} ^{e}", g.render());
    }

    let m = Matrix::from_rows(&f3, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]])?;
    println!("minimal polynomial of the companion matrix: {}", minpoly(&m)?.render());
    Ok(())
}
