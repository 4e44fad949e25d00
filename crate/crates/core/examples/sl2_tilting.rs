//! The symbolic SL(2, p^n) calculus and its matrix cross-check.
use greenring::algtest::Budgets;
use greenring::meataxe::Options;
use greenring::sl2tilt::{self, CharPoly};

fn main() -> greenring::Result<()> {
    let p = 5;
    println!("Steinberg digits of 17 at p=5: {:?}", sl2tilt::steinberg_decompose(17, p, 2)?);
    for (l, m) in [(1, 1), (4, 1), (3, 3), (4, 4)] {
        let s = sl2tilt::fundamental_tensor(l, m, p)?;
        println!("L({l}) ⊗ L({m}) = {s}   (dim {})", s.dim());
    }
    let t = CharPoly::tilting(7, p);
    println!("char T(7): dim {}, palindromic {}", t.dim(), t.is_palindromic());

    let r = sl2tilt::threeistwo_rewrite(p)?;
    println!("T({p}) ⊗ L({}) = {}", p - 1, r.rhs);

    for (p, n) in [(3, 2), (3, 3), (5, 2), (7, 2)] {
        let c = sl2tilt::v1_closure(p, n, 1 << 16)?;
        println!("SL(2,{}^{}): closed {}, {} classes", p, n, c.closed, c.classes.len());
    }

    let c = sl2tilt::v1_closure(3, 2, 1 << 16)?;
    let x = sl2tilt::crosscheck(&c, &Budgets::default(), &Options::default())?;
    println!("SL(2,9) matrix cross-check: pass {}", x.pass());
    for (i, w) in &x.matched {
        println!("  matrix class {i} ≅ {w}");
    }
    Ok(())
}
