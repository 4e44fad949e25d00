//! Building modules: permutation modules, tensor products, duals, symmetric
//! powers, restriction along subgroup words and the text formats.
use greenring::meataxe::{self, Options};
use greenring::{fixtures, io, ModuleRep};

fn main() -> greenring::Result<()> {
    let g = fixtures::a8();
    let perm = fixtures::perm_module(&g, 2)?;
    println!("{} on 8 points over GF(2): dim {}, {} generators", g.name, perm.dim(), perm.ngens());

    let sl = perm.restrict(&fixtures::a8_sl32())?;
    println!("restricted to SL(3,2): {} generators", sl.ngens());

    let m2 = fixtures::m2_c3c3();
    let opts = Options::default();
    for i in 1..=2 {
        let s = m2.sym_power(i)?;
        println!("S^{i}(M2): dim {}", s.dim());
    }
    let t = m2.tensor(&m2.dual())?;
    println!("M2 ⊗ M2*: dim {}, summands {:?}", t.dim(), meataxe::decompose(&t, &opts)?.shape());
    println!("Λ²(M2): dim {}", m2.ext_square()?.dim());

    let v1 = fixtures::sl2_9();
    let tw = v1.frobenius_twist();
    println!("V1 ⊗ V1^σ for SL(2,9): irreducible = {}", meataxe::chop(&v1.tensor(&tw)?, &opts)?.len() == 1);

    // serialize and read back
    let text = io::write_module(&m2);
    let back: ModuleRep = io::parse_module(&text, Some(m2.group()))?;
    println!("round trip preserves the action: {}", back.action() == m2.action());
    print!("{text}");
    Ok(())
}
