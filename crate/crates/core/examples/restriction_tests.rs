//! Restriction-based tests: the Klein-four test on SL(3,2), the heart rules
//! over C3 x C3 and the rule registry.
use greenring::algtest;
use greenring::homalg;
use greenring::meataxe::{self, Options};
use greenring::{fixtures, FieldSpec, SubgroupSpec};

fn main() -> greenring::Result<()> {
    let opts = Options::default();

    let v = algtest::v4_test(&fixtures::sl3_2(), &fixtures::sl3_2_v4(), false, &opts)?;
    println!("SL(3,2) natural module: {:?}, {}", v.kind, v.witness.unwrap_or_default());

    // A8 on 8 points: k | M6 | k, and M6 splits over SL(3,2)
    let p = fixtures::perm_module(&fixtures::a8(), 2)?;
    let layers = homalg::radical_series(&p, false, &opts)?.layers;
    println!("A8 permutation module radical layers {layers:?}");
    let m6 = meataxe::chop(&p, &opts)?.into_iter().find(|(m, _)| m.dim() == 6).map(|x| x.0);
    if let Some(m6) = m6 {
        let d = meataxe::decompose(&m6.restrict(&fixtures::a8_sl32())?, &opts)?;
        println!("M6 on SL(3,2): {:?}", d.shape());
    }

    let g = fixtures::c3c3();
    let h = homalg::heart(&g, &SubgroupSpec::all_generators(2), &FieldSpec::prime(3)?)?;
    if let Some(v) = algtest::heart_rules(&h, &[], &opts)? {
        println!("heart of kP: {:?} [{}]", v.kind, v.reason);
    }

    for r in algtest::rule_registry() {
        println!("{:<24} {:?}: {}", r.id, r.verdict, r.predicate);
    }
    Ok(())
}
