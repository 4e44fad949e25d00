use greenring::algtest::{self, Budgets, Periodicity, ShiftBudget, VerdictKind};
use greenring::homalg::{self, Pims};
use greenring::meataxe::{self, Options};
use greenring::{fixtures, sl2tilt, FieldSpec, Group, Matrix, ModuleRep, SubgroupSpec};

fn all(g: &Group) -> greenring::group::Elements {
    g.enumerate(&SubgroupSpec::all_generators(g.ngens), 1000).unwrap()
}

fn jordan(f: &FieldSpec, n: usize) -> Matrix {
    Matrix::from_fn(f, n, n, |i, j| u16::from(i == j || j == i + 1))
}

/// Jordan block `J_n` of the first factor of `C_p x C_p`, inflated.
fn inflated_jordan(g: &Group, p: u32, n: usize) -> ModuleRep {
    let f = FieldSpec::prime(p).unwrap();
    ModuleRep::new(g, &f, vec![jordan(&f, n), Matrix::identity(&f, n)]).unwrap()
}

/// `J_a ⊗ J_b` over `C_p` for `a + b <= p + 1`: blocks `a+b-1, a+b-3, ...`.
fn clebsch_gordan(a: usize, b: usize) -> Vec<usize> {
    let (a, b) = (a.max(b), a.min(b));
    let mut v: Vec<usize> = (0..b).map(|i| a + b - 1 - 2 * i).collect();
    v.sort();
    v
}

#[test]
fn closed_state_survives_a_full_resweep() {
    let v1 = fixtures::sl2_9();
    let sylow = v1.group().enumerate(&sl2tilt::sylow_words(2), 100).unwrap();
    let opts = Options::default();
    let (st, v) = algtest::tensor_closure(&v1, &sylow, &Budgets::default(), &opts).unwrap();
    assert_eq!(v.kind, VerdictKind::Algebraic);
    for e in &st.registry {
        assert!(!meataxe::is_projective(&e.module, &sylow).unwrap());
        let d = meataxe::decompose(&e.module.tensor(&v1).unwrap(), &opts).unwrap();
        for s in &d.summands {
            if meataxe::is_projective(&s.module, &sylow).unwrap() {
                continue;
            }
            let found = st
                .registry
                .iter()
                .any(|r| r.module.dim() == s.module.dim() && meataxe::iso_test(&r.module, &s.module, &opts).unwrap().is_some());
            assert!(found, "summand of dim {} escaped the registry", s.module.dim());
        }
    }
}

#[test]
fn registry_grows_monotonically_with_depth() {
    let m2 = fixtures::m2_c3c3();
    let el = all(m2.group());
    let opts = Options::default();
    let run = |depth| {
        let b = Budgets { max_classes: 64, max_dim: 512, max_depth: depth };
        algtest::tensor_closure(&m2, &el, &b, &opts).unwrap().0
    };
    let (small, big) = (run(4), run(5));
    assert!(big.registry.len() > small.registry.len());
    for e in &small.registry {
        assert!(big
            .registry
            .iter()
            .any(|r| r.fingerprint == e.fingerprint && meataxe::iso_test(&r.module, &e.module, &opts).unwrap().is_some()));
        assert!(!meataxe::is_projective(&e.module, &el).unwrap());
    }
}

#[test]
fn klein_four_test_cases() {
    let opts = Options::default();
    let g = fixtures::v4();
    let words = SubgroupSpec::all_generators(2);
    let reg = fixtures::perm_module(&g, 2).unwrap();
    assert_eq!(algtest::v4_test(&reg, &words, false, &opts).unwrap().kind, VerdictKind::Inconclusive);

    let k = ModuleRep::trivial(&g, &FieldSpec::prime(2).unwrap(), 1);
    let om = homalg::omega(&k, 1, &Pims::PGroup(all(&g)), &opts).unwrap().module;
    let v = algtest::v4_test(&om, &words, false, &opts).unwrap();
    assert_eq!(v.kind, VerdictKind::NonAlgebraicEvidence);
    assert_eq!(v.witness.as_deref(), Some("summand of dimension 3 ≅ Ω^1(k)"));

    // the other class of transvection Klein fours gives the dual shift
    // generators are x12, x13, x21, x32; x23 = [x21, x13]
    let other = SubgroupSpec::new(vec![vec![(1, 1)], vec![(2, 1), (1, 1), (2, 1), (1, 1)]]);
    let sl = fixtures::sl3_2();
    let v = algtest::v4_test(&sl, &fixtures::sl3_2_v4(), false, &opts).unwrap();
    assert_eq!(v.witness.as_deref(), Some("summand of dimension 3 ≅ Ω^-1(k)"));
    let v = algtest::v4_test(&sl, &other, false, &opts).unwrap();
    assert_eq!(v.witness.as_deref(), Some("summand of dimension 3 ≅ Ω^1(k)"));
    // a cyclic subgroup of order 4 is rejected
    let c4 = SubgroupSpec::new(vec![vec![(0, 1), (3, 1)]]);
    assert!(algtest::v4_test(&sl, &c4, false, &opts).is_err());
}

#[test]
fn tensor_square_rule_on_an_inflated_jordan_block() {
    // over C5 x C5 inflate J_3 from the first factor: J3 ⊗ J3 = J1 ⊕ J3 ⊕ J5,
    // and J5 is the permutation module on the cosets of the second factor
    let g = fixtures::c5c5();
    let m = inflated_jordan(&g, 5, 3);
    let opts = Options::default();
    let d = meataxe::decompose(&m.tensor(&m).unwrap(), &opts).unwrap();
    let dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
    assert_eq!(dims, clebsch_gordan(3, 3));
    let v = algtest::mplus_check(&m, &[], &all(&g), &Budgets::default(), &opts).unwrap().expect("fires");
    assert_eq!(v.kind, VerdictKind::Algebraic);
    assert_eq!(v.reason, "tensor-square-splits");

    // J2 ⊗ J2 = J1 ⊕ J3 does not contain J2
    let j2 = inflated_jordan(&g, 5, 2);
    assert!(algtest::mplus_check(&j2, &[], &all(&g), &Budgets::default(), &opts).unwrap().is_none());
}

#[test]
fn periodic_pair_does_not_fire_the_shift_rule() {
    // k[P/Q] for Q the second factor of C3 x C3 is the inflated J3: periodic
    let g = fixtures::c3c3();
    let el = all(&g);
    let pims = Pims::PGroup(el.clone());
    let opts = Options::default();
    let a = inflated_jordan(&g, 3, 3);
    let oa = homalg::omega(&a, 1, &pims, &opts).unwrap().module;
    assert!(matches!(algtest::periodicity_probe(&a, &pims, 6, &opts).unwrap(), Periodicity::Periodic(_)));
    let (st, _) = algtest::tensor_closure(&a.direct_sum(&oa).unwrap(), &el, &Budgets::default(), &opts).unwrap();
    assert!(st.registry.len() >= 2);
    assert!(algtest::omega_shift_rule(&st, &pims, &ShiftBudget::default(), &opts).unwrap().is_none());
}

#[test]
fn heart_tensor_rule() {
    let g = fixtures::c3c3();
    let f = FieldSpec::prime(3).unwrap();
    let e = homalg::heart(&g, &SubgroupSpec::all_generators(2), &f).unwrap();
    let n = inflated_jordan(&g, 3, 2);
    let opts = Options::default();
    let en = e.tensor(&n).unwrap();
    let d = meataxe::decompose(&en, &opts).unwrap();
    let flagged: Vec<usize> = d
        .summands
        .iter()
        .filter(|s| s.module.dim() % 3 != 0)
        .filter(|s| algtest::heart_rules(&s.module, &[n.clone()], &opts).unwrap().is_some())
        .map(|s| s.module.dim())
        .collect();
    assert!(!flagged.is_empty(), "shape {:?}", d.shape());
    let k = ModuleRep::trivial(&g, &f, 1);
    assert!(algtest::heart_rules(&k, &[n], &opts).unwrap().is_none());
}

#[test]
fn reports_are_deterministic() {
    let m2 = fixtures::m2_c3c3();
    let el = all(m2.group());
    let b = Budgets { max_classes: 64, max_dim: 512, max_depth: 5 };
    let json = |seed| {
        let opts = Options::with_seed(seed);
        let (st, v) = algtest::tensor_closure(&m2, &el, &b, &opts).unwrap();
        algtest::Report::new("m2", &opts, &st, &v, vec![]).to_json()
    };
    assert_eq!(json(3), json(3));
}
