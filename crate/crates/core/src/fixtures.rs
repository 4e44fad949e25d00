//! The groups and modules shipped in `fixtures/`, compiled in.

use crate::error::Result;
use crate::field::FieldSpec;
use crate::group::{Group, GroupSpec, SubgroupSpec};
use crate::io;
use crate::module::ModuleRep;

/// `(file name, contents)` of every fixture.
pub const FILES: &[(&str, &str)] = &[
    ("c3c3.perm", include_str!("../fixtures/c3c3.perm")),
    ("c5c5.perm", include_str!("../fixtures/c5c5.perm")),
    ("c9.perm", include_str!("../fixtures/c9.perm")),
    ("v4.perm", include_str!("../fixtures/v4.perm")),
    ("a8.perm", include_str!("../fixtures/a8.perm")),
    ("a8_sl32.words", include_str!("../fixtures/a8_sl32.words")),
    ("a10.perm", include_str!("../fixtures/a10.perm")),
    ("a10_c5c5.words", include_str!("../fixtures/a10_c5c5.words")),
    ("m11.perm", include_str!("../fixtures/m11.perm")),
    ("m11_55.perm", include_str!("../fixtures/m11_55.perm")),
    ("sl3_2.mod", include_str!("../fixtures/sl3_2.mod")),
    ("sl3_2_v4.words", include_str!("../fixtures/sl3_2_v4.words")),
    ("sl2_9.mod", include_str!("../fixtures/sl2_9.mod")),
    ("m2_c3c3.mod", include_str!("../fixtures/m2_c3c3.mod")),
];

fn text(name: &str) -> &'static str {
    FILES.iter().find(|f| f.0 == name).map(|f| f.1).expect("fixture is compiled in")
}

fn perm(name: &str, file: &str) -> Group {
    io::parse_perm_group(name, text(file)).expect("fixture parses")
}

fn words(file: &str) -> SubgroupSpec {
    io::parse_words(text(file)).expect("fixture parses")
}

/// Module bundle whose group is generated by its own matrices.
fn matrix_module(name: &str, file: &str) -> ModuleRep {
    let m = io::parse_module(text(file), None).expect("fixture parses");
    let g = GroupSpec::from_matrices(name, m.action().to_vec()).expect("invertible generators");
    m.with_group(&g).expect("same generator count")
}

pub fn c3c3() -> Group {
    perm("C3xC3", "c3c3.perm")
}

pub fn c5c5() -> Group {
    perm("C5xC5", "c5c5.perm")
}

pub fn c9() -> Group {
    perm("C9", "c9.perm")
}

pub fn v4() -> Group {
    perm("V4", "v4.perm")
}

/// `Alt(8)`; generators 3-5 span a copy of `SL(3,2)`.
pub fn a8() -> Group {
    perm("A8", "a8.perm")
}

pub fn a8_sl32() -> SubgroupSpec {
    words("a8_sl32.words")
}

/// `Alt(10)`; generators 3-4 span a `C5 x C5`.
pub fn a10() -> Group {
    perm("A10", "a10.perm")
}

pub fn a10_c5c5() -> SubgroupSpec {
    words("a10_c5c5.words")
}

pub fn m11() -> Group {
    perm("M11", "m11.perm")
}

pub fn m11_55() -> Group {
    perm("M11", "m11_55.perm")
}

/// Natural module of `SL(3,2)` over GF(2).
pub fn sl3_2() -> ModuleRep {
    matrix_module("SL3(2)", "sl3_2.mod")
}

/// A Klein four subgroup of transvections in [`sl3_2`].
pub fn sl3_2_v4() -> SubgroupSpec {
    words("sl3_2_v4.words")
}

/// Natural module of `SL(2,9)` over GF(9).
pub fn sl2_9() -> ModuleRep {
    matrix_module("SL2(9)", "sl2_9.mod")
}

/// `M_2 = kP / rad^2 kP` for `P = C3 x C3`, on [`c3c3`].
pub fn m2_c3c3() -> ModuleRep {
    io::parse_module(text("m2_c3c3.mod"), Some(&c3c3())).expect("fixture parses")
}

/// The permutation module of `g` over GF(`p`).
pub fn perm_module(g: &Group, p: u32) -> Result<ModuleRep> {
    ModuleRep::perm_module(g, &FieldSpec::prime(p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        assert_eq!(c3c3().order(100).unwrap(), 9);
        assert_eq!(c9().order(100).unwrap(), 9);
        assert_eq!(v4().order(100).unwrap(), 4);
        assert_eq!(sl3_2().group().order(1000).unwrap(), 168);
        assert_eq!(a8().enumerate(&a8_sl32(), 1000).unwrap().len(), 168);
        assert_eq!(a10().enumerate(&a10_c5c5(), 1000).unwrap().len(), 25);
        assert_eq!(m2_c3c3().dim(), 3);
        assert_eq!(sl2_9().dim(), 2);
    }
}
