use std::collections::BTreeMap;

use greenring::sl2tilt::{self, FormalSum, Symbol, TiltingWord};
use proptest::prelude::*;

/// Characters as weight -> multiplicity maps, computed independently of the
/// library's own character type.
type Ch = BTreeMap<i64, i64>;

fn weyl(l: u32) -> Ch {
    (0..=l as i64).map(|i| (l as i64 - 2 * i, 1)).collect()
}

fn add(a: &Ch, b: &Ch) -> Ch {
    let mut out = a.clone();
    for (w, c) in b {
        *out.entry(*w).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn mul(a: &Ch, b: &Ch) -> Ch {
    let mut out = Ch::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            *out.entry(wa + wb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn twist(a: &Ch, k: i64) -> Ch {
    a.iter().map(|(w, c)| (w * k, *c)).collect()
}

fn symbol(s: Symbol, p: u32) -> Ch {
    match s {
        Symbol::L(a) => weyl(a),
        Symbol::T(b) if b == 2 * p - 1 => mul(&weyl(p - 1), &twist(&weyl(1), p as i64)),
        // T(b) for p <= b <= 2p-2 has Weyl factors b and 2p-2-b
        Symbol::T(b) => add(&weyl(b), &weyl(2 * p - 2 - b)),
    }
}

fn word(w: &TiltingWord) -> Ch {
    let mut out: Ch = [(0, 1)].into_iter().collect();
    let mut scale = 1i64;
    for s in &w.factors {
        out = mul(&out, &twist(&symbol(*s, w.p), scale));
        scale *= w.p as i64;
    }
    out
}

fn sum(s: &FormalSum) -> Ch {
    s.terms.iter().fold(Ch::new(), |acc, (w, &k)| {
        let c: Ch = word(w).into_iter().map(|(x, y)| (x, y * k as i64)).collect();
        add(&acc, &c)
    })
}

#[test]
fn fundamental_products_have_product_characters() {
    for p in [3u32, 5, 7, 11, 13] {
        for l in 0..p {
            for m in 0..=l {
                let s = sl2tilt::fundamental_tensor(l, m, p).unwrap();
                assert_eq!(sum(&s), mul(&weyl(l), &weyl(m)), "p={p} L({l})⊗L({m})");
            }
        }
        let s = sl2tilt::fundamental_tensor(p - 1, 1, p).unwrap();
        assert_eq!(s.to_string(), format!("T({p})"));
    }
}

#[test]
fn rewrite_of_tp_times_top_simple() {
    for p in [3u32, 5, 7, 11] {
        let r = sl2tilt::threeistwo_rewrite(p).unwrap();
        let lhs = mul(&symbol(Symbol::T(p), p), &weyl(p - 1));
        assert_eq!(sum(&r.rhs), lhs, "p={p}");
    }
}

#[test]
fn one_times_pair_branches() {
    for p in [3u32, 5, 7, 11] {
        for l in 0..p {
            for m in 0..p {
                let s = sl2tilt::one_times_pair(l, m, p).unwrap();
                assert_eq!(s.b.is_some(), l == p - 1 && m == p - 1, "p={p} ({l},{m})");
                if let Some(b) = s.b {
                    assert_eq!(b, p - 1);
                }
                let mut got = Ch::new();
                for &((i, j), k) in &s.a {
                    let c = mul(&weyl(i), &weyl(j));
                    for _ in 0..k {
                        got = add(&got, &c);
                    }
                }
                if let Some(b) = s.b {
                    got = add(&got, &mul(&weyl(b), &twist(&weyl(1), p as i64)));
                }
                assert_eq!(got, mul(&weyl(1), &mul(&weyl(l), &weyl(m))));
            }
        }
    }
}

#[test]
fn closures_of_the_natural_module_finish() {
    for (p, n) in [(3, 2), (3, 3), (5, 2), (7, 2)] {
        let c = sl2tilt::v1_closure(p, n, 1 << 16).unwrap();
        assert!(c.closed);
        // the natural module and the trivial module are both classes
        assert!(c.classes.contains(&TiltingWord::simple(1, p, n).unwrap()));
        assert!(c.classes.contains(&TiltingWord::trivial(p, n)));
        // twisting permutes the saturated class set
        for w in &c.saturated {
            assert!(c.saturated.contains(&w.rotate(1)));
        }
    }
}

#[test]
fn small_budget_is_reported() {
    assert!(matches!(
        sl2tilt::v1_closure(5, 2, 4),
        Err(greenring::Error::BudgetExceeded(_))
    ));
}

#[test]
fn v1_tensor_twist_is_simple_on_matrices() {
    // V1 ⊗ V1^σ = L(1 + 3) by Steinberg
    let v1 = sl2tilt::realize_on_matrices(3, 2).unwrap();
    let t = v1.tensor(&v1.frobenius_twist()).unwrap();
    let opts = greenring::meataxe::Options::default();
    let f = greenring::meataxe::chop(&t, &opts).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].0.dim(), 4);
}

proptest! {
    #[test]
    fn steinberg_digits_reassemble(p in prop::sample::select(vec![3u32, 5, 7, 11]), n in 1usize..5, seed in any::<u64>()) {
        let q = (p as u64).pow(n as u32);
        let lambda = seed % q;
        let d = sl2tilt::steinberg_decompose(lambda, p, n).unwrap();
        prop_assert_eq!(d.len(), n);
        prop_assert!(d.iter().all(|&x| x < p));
        let back: u64 = d.iter().rev().fold(0, |acc, &x| acc * p as u64 + x as u64);
        prop_assert_eq!(back, lambda);
        // dim L(λ) = Π (d_i + 1)
        let w = TiltingWord::simple(lambda, p, n).unwrap();
        prop_assert_eq!(w.dim() as u64, d.iter().map(|&x| x as u64 + 1).product::<u64>());
    }

    #[test]
    fn greedy_tilting_split_preserves_characters(p in prop::sample::select(vec![3u32, 5, 7]), a in 0u32..20, b in 0u32..20) {
        let (a, b) = (a % (2 * p), b % (2 * p));
        let ca = symbol(if a < p { Symbol::L(a) } else { Symbol::T(a) }, p);
        let cb = symbol(if b < p { Symbol::L(b) } else { Symbol::T(b) }, p);
        let want = mul(&ca, &cb);
        let lib = sl2tilt::CharPoly::tilting(a, p).mul(&sl2tilt::CharPoly::tilting(b, p));
        let s = sl2tilt::tilting_decompose_by_char(&lib, p).unwrap();
        prop_assert_eq!(sum(&s), want);
    }
}
