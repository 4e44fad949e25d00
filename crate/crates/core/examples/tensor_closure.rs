//! Tensor closures and the algebraicity rules: M2 over C3 x C3 grows
//! without closing, and the Ω-shift rule finds a syzygy pair inside it.
use greenring::algtest::{self, Budgets, ShiftBudget};
use greenring::homalg::Pims;
use greenring::meataxe::Options;
use greenring::{fixtures, SubgroupSpec};

fn main() -> greenring::Result<()> {
    let opts = Options::default();
    let g = fixtures::c3c3();
    let el = g.enumerate(&SubgroupSpec::all_generators(2), 100)?;

    // a closure that finishes: the trivial module
    let k = greenring::ModuleRep::trivial(&g, &greenring::FieldSpec::prime(3)?, 1);
    let (st, v) = algtest::tensor_closure(&k, &el, &Budgets::default(), &opts)?;
    println!("k: {:?}, {} class(es)", v.kind, st.registry.len());

    let budgets = Budgets {
        max_classes: 64,
        max_dim: 512,
        max_depth: 8,
    };
    let m2 = fixtures::m2_c3c3();
    let (st, v) = algtest::tensor_closure(&m2, &el, &budgets, &opts)?;
    println!("M2: {:?} ({})", v.kind, v.witness.as_deref().unwrap_or(""));
    for row in st.summary() {
        println!("  depth {:>2}  dim {:>3}  radical layers {:?}", row.depth, row.dim, row.fingerprint.radical);
    }
    if let Some(v) = algtest::omega_shift_rule(&st, &Pims::PGroup(el), &ShiftBudget::default(), &opts)? {
        println!("{:?}: {}", v.kind, v.witness.unwrap_or_default());
        println!("  [{}] {}", v.reason, v.citation);
    }
    let report = algtest::Report::new("m2_c3c3", &opts, &st, &v, vec![]);
    println!("{} bytes of JSON report", report.to_json().len());
    Ok(())
}
