use greenring::homalg::{self, Pims};
use greenring::meataxe::{self, Options};
use greenring::{fixtures, FieldSpec, Matrix, ModuleRep, SubgroupSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_invertible(f: &FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let q = f.order() as u16;
        let m = Matrix::from_fn(f, n, n, |_, _| rng.gen_range(0..q));
        if m.is_invertible() {
            return m;
        }
    }
}

/// `x` is a module map `M -> N` (row vectors): `a_g x = x b_g` for all `g`.
fn intertwines(m: &ModuleRep, n: &ModuleRep, x: &Matrix) -> bool {
    m.action()
        .iter()
        .zip(n.action())
        .all(|(a, b)| a.mul(x).unwrap() == x.mul(b).unwrap())
}

/// Rows of `basis` span a submodule.
fn is_submodule(m: &ModuleRep, basis: &Matrix) -> bool {
    let r = basis.rank();
    m.action().iter().all(|g| basis.vstack(&basis.mul(g).unwrap()).unwrap().rank() == r)
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c3c3_all() -> (greenring::Group, greenring::group::Elements) {
    let g = fixtures::c3c3();
    let el = g.enumerate(&SubgroupSpec::all_generators(2), 100).unwrap();
    (g, el)
}

#[test]
fn perm_module_of_klein_four_is_free_and_indecomposable() {
    let g = fixtures::v4();
    let el = g.enumerate(&SubgroupSpec::all_generators(2), 10).unwrap();
    let m = fixtures::perm_module(&g, 2).unwrap();
    assert!(meataxe::is_projective(&m, &el).unwrap());
    assert!(meataxe::is_indecomposable(&m, &Options::default()).unwrap());
}

#[test]
fn decomposition_recovers_a_known_sum() {
    let m2 = fixtures::m2_c3c3();
    let k = ModuleRep::trivial(m2.group(), m2.field(), 1);
    let big = m2.direct_sum(&k).unwrap().direct_sum(&m2).unwrap();
    let opts = Options::default();
    let d = meataxe::decompose(&big, &opts).unwrap();
    assert_eq!(d.shape(), vec![(1, 1), (3, 2)]);
    assert_eq!(d.total_dim(), 7);
    for s in &d.summands {
        for b in &s.bases {
            assert!(is_submodule(&big, b));
        }
    }
    let all: Matrix = d.summands.iter().flat_map(|s| s.bases.iter()).fold(Matrix::zero(big.field(), 0, 7), |mut a, b| {
        a.push_rows(b);
        a
    });
    assert_eq!(all.rank(), 7);
}

#[test]
fn jennings_layers_match_monomial_counts() {
    for p in [3u32, 5] {
        let g = if p == 3 { fixtures::c3c3() } else { fixtures::c5c5() };
        let el = g.enumerate(&SubgroupSpec::all_generators(2), 100).unwrap();
        let jb = homalg::jennings(&el, &FieldSpec::prime(p).unwrap()).unwrap();
        // x^a y^b with a, b < p has weight a + b
        let p = p as usize;
        let want: Vec<usize> = (0..2 * p - 1).map(|w| (0..p).filter(|a| w >= *a && w - a < p).count()).collect();
        assert_eq!(jb.layer_dims(), want);
    }
    // C9 is uniserial: nine layers of dimension one
    let el = fixtures::c9().enumerate(&SubgroupSpec::all_generators(1), 100).unwrap();
    let jb = homalg::jennings(&el, &FieldSpec::prime(3).unwrap()).unwrap();
    assert_eq!(jb.layer_dims(), vec![1; 9]);
}

#[test]
fn syzygies_of_trivial_follow_the_betti_numbers() {
    // the minimal resolution of k over C_p x C_p has rank n+1 in degree n
    let (g, el) = c3c3_all();
    let k = ModuleRep::trivial(&g, &FieldSpec::prime(3).unwrap(), 1);
    let pims = Pims::PGroup(el);
    let opts = Options::default();
    for n in 1..=4i32 {
        let mut want: i64 = if n % 2 == 0 { 1 } else { -1 };
        for i in 0..n {
            let sign = if (n - 1 - i) % 2 == 0 { 1 } else { -1 };
            want += sign * (i as i64 + 1) * 9;
        }
        assert_eq!(homalg::omega(&k, n, &pims, &opts).unwrap().module.dim() as i64, want, "n = {n}");
        assert_eq!(homalg::omega(&k, -n, &pims, &opts).unwrap().module.dim() as i64, want, "n = -{n}");
    }
}

#[test]
fn omega_inverts() {
    let (_, el) = c3c3_all();
    let pims = Pims::PGroup(el);
    let opts = Options::default();
    let m2 = fixtures::m2_c3c3();
    let up = homalg::omega(&m2, 1, &pims, &opts).unwrap().module;
    let back = homalg::omega(&up, -1, &pims, &opts).unwrap().module;
    let x = meataxe::iso_test(&m2, &back, &opts).unwrap().expect("isomorphic");
    assert!(intertwines(&m2, &back, &x) && x.is_invertible());
}

#[test]
fn radical_and_socle_series_of_m3() {
    let (g, _) = c3c3_all();
    let m3 = homalg::quotient_mod_radpower(&g, &SubgroupSpec::all_generators(2), &FieldSpec::prime(3).unwrap(), 3).unwrap();
    let opts = Options::default();
    assert_eq!(homalg::radical_series(&m3, true, &opts).unwrap().layers, vec![1, 2, 3]);
    assert_eq!(homalg::radical_series(&m3, false, &opts).unwrap().layers, vec![1, 2, 3]);
    // the socle of kP/rad^3 is rad^2/rad^3 (dimension 3)
    assert_eq!(homalg::socle_series(&m3, &opts).unwrap().layers[0], 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn iso_test_sees_through_base_change(seed in any::<u64>(), which in 0usize..3) {
        let m = match which {
            0 => fixtures::m2_c3c3(),
            1 => fixtures::sl3_2(),
            _ => fixtures::sl2_9(),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_invertible(m.field(), m.dim(), &mut rng);
        let n = m.change_basis(&b).unwrap();
        let opts = Options::with_seed(seed);
        let x = meataxe::iso_test(&m, &n, &opts).unwrap();
        prop_assert!(x.is_some());
        let x = x.unwrap();
        prop_assert!(x.is_invertible() && intertwines(&m, &n, &x));
        prop_assert_eq!(meataxe::fingerprint(&m, &opts).unwrap(), meataxe::fingerprint(&n, &opts).unwrap());
    }

    #[test]
    fn decompose_is_basis_independent(seed in any::<u64>()) {
        let m2 = fixtures::m2_c3c3();
        let t = m2.tensor(&m2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_invertible(t.field(), t.dim(), &mut rng);
        let opts = Options::with_seed(seed);
        let d1 = meataxe::decompose(&t, &opts).unwrap();
        let d2 = meataxe::decompose(&t.change_basis(&b).unwrap(), &opts).unwrap();
        prop_assert_eq!(d1.shape(), d2.shape());
        let f1: Vec<_> = d1.summands.iter().map(|s| s.fingerprint.clone()).collect();
        let f2: Vec<_> = d2.summands.iter().map(|s| s.fingerprint.clone()).collect();
        prop_assert_eq!(f1, f2);
    }

    #[test]
    fn constructions_have_the_right_dimensions(i in 1usize..3, which in 0usize..2) {
        let m = if which == 0 { fixtures::m2_c3c3() } else { fixtures::sl2_9() };
        let n = m.dim();
        prop_assert_eq!(m.sym_power(i).unwrap().dim(), binom(n + i - 1, i));
        prop_assert_eq!(m.ext_square().unwrap().dim(), binom(n, 2));
        prop_assert_eq!(m.tensor(&m.dual()).unwrap().dim(), n * n);
        let dd = m.dual().dual();
        prop_assert_eq!(dd.action(), m.action());
        prop_assert_eq!(m.direct_sum(&m).unwrap().dim(), 2 * n);
    }
}
