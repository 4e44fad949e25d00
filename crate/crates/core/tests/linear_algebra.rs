use greenring::poly::{factor_poly, Poly};
use greenring::{FieldSpec, Matrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::prime(2).unwrap(),
        FieldSpec::prime(3).unwrap(),
        FieldSpec::prime(5).unwrap(),
        FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap(),
        FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap(),
    ]
}

fn random_matrix(f: &FieldSpec, r: usize, c: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let q = f.order() as u16;
    Matrix::from_fn(f, r, c, |_, _| rng.gen_range(0..q))
}

/// Naive product straight from the field operations.
fn naive_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field();
    Matrix::from_fn(f, a.rows(), b.cols(), |i, j| {
        (0..a.cols()).fold(0, |acc, k| f.add(acc, f.mul(a.get(i, k), b.get(k, j))))
    })
}

#[test]
fn gf4_tables() {
    // GF(4) = GF(2)[x]/(x^2+x+1): x*x = x+1, encoded 2*2 = 3
    let f = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
    assert_eq!(f.mul(2, 2), 3);
    assert_eq!(f.mul(2, 3), 1);
    assert_eq!(f.add(2, 3), 1);
}

#[test]
fn field_axioms_exhaustive() {
    for f in fields() {
        let q = f.order() as u16;
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            // a^q = a
            assert_eq!(f.pow(a, q as u64), a);
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn primitive_element_has_full_order() {
    for f in fields() {
        let w = f.primitive();
        let q = f.order() as u64;
        let order = (1..q).find(|&e| f.pow(w, e) == 1).unwrap();
        assert_eq!(order, q - 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_matches_naive(seed in any::<u64>(), fi in 0usize..5, r in 1usize..9, k in 1usize..70, c in 1usize..9) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(f, r, k, &mut rng);
        let b = random_matrix(f, k, c, &mut rng);
        prop_assert_eq!(a.mul(&b).unwrap(), naive_mul(&a, &b));
    }

    #[test]
    fn rank_nullity(seed in any::<u64>(), fi in 0usize..5, r in 1usize..12, c in 1usize..12) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(f, r, c, &mut rng);
        let ns = a.nullspace();
        prop_assert_eq!(a.rank() + ns.rows(), r);
        if ns.rows() > 0 {
            prop_assert!(ns.mul(&a).unwrap().is_zero());
            prop_assert_eq!(ns.rank(), ns.rows());
        }
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), fi in 0usize..5, n in 1usize..10) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(f, n, n, &mut rng);
        match a.inverse() {
            Ok(b) => {
                prop_assert_eq!(naive_mul(&a, &b), Matrix::identity(f, n));
                prop_assert_eq!(naive_mul(&b, &a), Matrix::identity(f, n));
            }
            Err(_) => prop_assert!(a.rank() < n),
        }
    }

    #[test]
    fn factorization_multiplies_back(seed in any::<u64>(), fi in 0usize..5, deg in 1usize..12) {
        let f = &fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = f.order() as u16;
        let mut c: Vec<u16> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
        c.push(1);
        let p = Poly::new(f, c);
        let fac = factor_poly(&p).unwrap();
        let mut prod = Poly::one(f);
        for (g, e) in &fac {
            prop_assert_eq!(g.lead(), 1);
            for _ in 0..*e {
                prod = prod.mul(g);
            }
            // small factors: confirm irreducibility by trial division
            if g.degree().unwrap() <= 3 {
                prop_assert!(no_small_divisor(g));
            }
        }
        prop_assert_eq!(prod, p);
    }
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn no_small_divisor(g: &Poly) -> bool {
    let f = g.field();
    let q = f.order() as u16;
    let d = g.degree().unwrap();
    for k in 1..=d / 2 {
        let count = (q as usize).pow(k as u32);
        for idx in 0..count {
            let mut c = Vec::with_capacity(k + 1);
            let mut x = idx;
            for _ in 0..k {
                c.push((x % q as usize) as u16);
                x /= q as usize;
            }
            c.push(1);
            if g.rem(&Poly::new(f, c)).is_zero() {
                return false;
            }
        }
    }
    true
}
