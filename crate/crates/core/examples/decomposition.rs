//! Composition factors, indecomposable summands, isomorphism certificates
//! and projectivity.
use greenring::meataxe::{self, Options};
use greenring::{fixtures, SubgroupSpec};

fn main() -> greenring::Result<()> {
    let opts = Options::with_seed(7);

    let p3 = fixtures::perm_module(&fixtures::m11(), 3)?;
    let d = meataxe::decompose(&p3, &opts)?;
    println!("M11 on 11 points over GF(3): summands {:?}", d.shape());
    for s in &d.summands {
        let dual = meataxe::iso_test(&s.module, &s.module.dual(), &opts)?.is_some();
        println!("  dim {:>2}: self-dual {dual}, fingerprint {:?}", s.module.dim(), s.fingerprint);
    }

    let p2 = fixtures::perm_module(&fixtures::m11_55(), 2)?;
    println!("M11 on 55 points over GF(2): {:?}", meataxe::decompose(&p2, &opts)?.shape());

    let a8 = fixtures::perm_module(&fixtures::a8(), 2)?;
    let factors: Vec<_> = meataxe::chop(&a8, &opts)?.iter().map(|(m, k)| (m.dim(), *k)).collect();
    println!("A8 on 8 points over GF(2): composition factors {factors:?}");

    // kP for P = C3 x C3 is projective; M2 is not
    let g = fixtures::c3c3();
    let el = g.enumerate(&SubgroupSpec::all_generators(2), 100)?;
    let reg = fixtures::perm_module(&g, 3)?;
    println!("kP projective: {}", meataxe::is_projective(&reg, &el)?);
    println!("M2 projective: {}", meataxe::is_projective(&fixtures::m2_c3c3(), &el)?);

    let m = fixtures::m2_c3c3();
    let big = m.tensor(&m)?.direct_sum(&reg)?;
    let d = meataxe::decompose_with(&big, &opts, Some(&el))?;
    for s in &d.summands {
        println!("  M2⊗M2 ⊕ kP: dim {} x{} free={}", s.module.dim(), s.multiplicity, s.free);
    }
    Ok(())
}
