//! Jennings layers, Heller shifts and the heart of `kP`.
use greenring::homalg::{self, Pims};
use greenring::meataxe::{self, Options};
use greenring::{fixtures, FieldSpec, SubgroupSpec};

fn main() -> greenring::Result<()> {
    let opts = Options::default();
    for (g, p) in [(fixtures::c3c3(), 3), (fixtures::c5c5(), 5), (fixtures::c9(), 3)] {
        let el = g.enumerate(&SubgroupSpec::all_generators(g.ngens), 1000)?;
        let jb = homalg::jennings(&el, &FieldSpec::prime(p)?)?;
        println!("{}: Jennings layers {:?}", g.name, jb.layer_dims());
    }

    let g = fixtures::c3c3();
    let f = FieldSpec::prime(3)?;
    let all = SubgroupSpec::all_generators(2);
    let el = g.enumerate(&all, 100)?;
    let pims = Pims::PGroup(el);
    let m2 = fixtures::m2_c3c3();
    for n in [-2, -1, 1, 2, 3] {
        let om = homalg::omega(&m2, n, &pims, &opts)?;
        println!("Ω^{n}(M2): dim {}", om.module.dim());
    }
    // Ω(M2)* is the next quotient kP / rad^3
    let m3 = homalg::quotient_mod_radpower(&g, &all, &f, 3)?;
    let shifted = homalg::omega(&m2, 1, &pims, &opts)?.module.dual();
    println!("M3 ≅ Ω(M2)*: {}", meataxe::iso_test(&m3, &shifted, &opts)?.is_some());

    let h = homalg::heart(&g, &all, &f)?;
    println!(
        "heart: dim {}, indecomposable {}, self-dual {}",
        h.dim(),
        meataxe::is_indecomposable(&h, &opts)?,
        meataxe::iso_test(&h, &h.dual(), &opts)?.is_some()
    );
    Ok(())
}
