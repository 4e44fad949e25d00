//! kG-modules as one invertible matrix per group generator, with the
//! functorial constructions: tensor, dual, direct sum, restriction,
//! symmetric and exterior squares, Frobenius twist and permutation modules.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::group::{eval_word, Group, GroupSpec, Realization, SubgroupSpec, Word};
use crate::matrix::{Matrix, SemiEchelon};

/// A module: vectors are rows, generator `g` acts by `v -> v * action[g]`.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    field: FieldSpec,
    dim: usize,
    action: Vec<Matrix>,
    group: Group,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.action == other.action
            && same_group(&self.group, &other.group)
    }
}

fn same_group(a: &Group, b: &Group) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl ModuleRep {
    /// Validates shapes and invertibility; relations are trusted.
    pub fn new(group: &Group, field: &FieldSpec, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != group.ngens {
            return Err(Error::SizeMismatch(format!(
                "{} matrices for {} generators",
                action.len(),
                group.ngens
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        for m in &action {
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::SizeMismatch("action matrix shape".into()));
            }
            if !m.is_invertible() {
                return Err(Error::Singular);
            }
        }
        Ok(Self::new_unchecked(group, field, dim, action))
    }

    pub(crate) fn new_unchecked(group: &Group, field: &FieldSpec, dim: usize, action: Vec<Matrix>) -> Self {
        ModuleRep {
            field: field.clone(),
            dim,
            action,
            group: group.clone(),
        }
    }

    /// Trivial module of dimension `n`.
    pub fn trivial(group: &Group, field: &FieldSpec, n: usize) -> Self {
        let action = (0..group.ngens).map(|_| Matrix::identity(field, n)).collect();
        Self::new_unchecked(group, field, n, action)
    }

    /// The zero module.
    pub fn zero(group: &Group, field: &FieldSpec) -> Self {
        Self::trivial(group, field, 0)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Matrix] {
        &self.action
    }
    pub fn group(&self) -> &Group {
        &self.group
    }
    pub fn ngens(&self) -> usize {
        self.action.len()
    }

    fn check_compatible(&self, other: &ModuleRep) -> Result<()> {
        if !same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Same matrices, reinterpreted over another (equal) group handle.
    pub fn with_group(&self, group: &Group) -> Result<Self> {
        if group.ngens != self.ngens() {
            return Err(Error::GroupMismatch);
        }
        Ok(Self::new_unchecked(group, &self.field, self.dim, self.action.clone()))
    }

    pub fn inverses(&self) -> Vec<Matrix> {
        self.action
            .iter()
            .map(|m| m.inverse().expect("action matrices are invertible"))
            .collect()
    }

    /// Matrix of a word.
    pub fn eval(&self, w: &Word) -> Result<Matrix> {
        for &(g, _) in w {
            if g >= self.ngens() {
                return Err(Error::BadWord {
                    index: g,
                    ngens: self.ngens(),
                });
            }
        }
        let inv = if w.iter().any(|&(_, e)| e < 0) {
            self.inverses()
        } else {
            self.action.clone()
        };
        Ok(eval_word(w, &self.action, &inv, &self.field, self.dim))
    }

    /// Checks that every word acts as the identity.
    pub fn check_words(&self, relations: &[Word]) -> Result<bool> {
        let id = Matrix::identity(&self.field, self.dim);
        for r in relations {
            if self.eval(r)? != id {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn tensor(&self, other: &ModuleRep) -> Result<ModuleRep> {
        self.check_compatible(other)?;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.kron(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(
            &self.group,
            &self.field,
            self.dim * other.dim,
            action,
        ))
    }

    pub fn dual(&self) -> ModuleRep {
        let action = self.inverses().iter().map(|m| m.transpose()).collect();
        Self::new_unchecked(&self.group, &self.field, self.dim, action)
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep> {
        self.check_compatible(other)?;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.block_diag(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(
            &self.group,
            &self.field,
            self.dim + other.dim,
            action,
        ))
    }

    /// Restriction along subgroup words; the result lives over a fresh
    /// group with one generator per word. A realization of the ambient
    /// group is carried over when present.
    pub fn restrict(&self, h: &SubgroupSpec) -> Result<ModuleRep> {
        h.validate(self.ngens())?;
        let group = restricted_group(&self.group, h)?;
        self.restrict_to(h, &group)
    }

    /// Restriction onto a caller-supplied group handle for the subgroup, so
    /// that several restrictions share one group.
    pub fn restrict_to(&self, h: &SubgroupSpec, group: &Group) -> Result<ModuleRep> {
        h.validate(self.ngens())?;
        if group.ngens != h.words.len() {
            return Err(Error::GroupMismatch);
        }
        let inv = self.inverses();
        let action = h
            .words
            .iter()
            .map(|w| eval_word(w, &self.action, &inv, &self.field, self.dim))
            .collect();
        Ok(Self::new_unchecked(group, &self.field, self.dim, action))
    }

    /// Symmetric power `S^i`, basis the non-decreasing index tuples in
    /// lexicographic order. Requires `1 <= i < p`.
    pub fn sym_power(&self, i: usize) -> Result<ModuleRep> {
        let p = self.field.p() as usize;
        if i >= p {
            return Err(Error::ExponentTooLarge { i, p: p as u32 });
        }
        if i == 0 {
            return Ok(Self::trivial(&self.group, &self.field, 1));
        }
        let basis = monomials(self.dim, i);
        let index: HashMap<Vec<usize>, usize> =
            basis.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        let f = &self.field;
        let action = self
            .action
            .iter()
            .map(|g| {
                let mut out = Matrix::zero(f, basis.len(), basis.len());
                for (r, mono) in basis.iter().enumerate() {
                    // expand prod_j (e_{mono[j]} g)
                    let mut poly: HashMap<Vec<usize>, Elem> = HashMap::new();
                    poly.insert(Vec::new(), 1);
                    for &a in mono {
                        let mut next: HashMap<Vec<usize>, Elem> = HashMap::new();
                        for (m, c) in &poly {
                            for b in 0..self.dim {
                                let x = g.get(a, b);
                                if x == 0 {
                                    continue;
                                }
                                let mut nm = m.clone();
                                let pos = nm.partition_point(|&y| y <= b);
                                nm.insert(pos, b);
                                let e = next.entry(nm).or_insert(0);
                                *e = f.add(*e, f.mul(*c, x));
                            }
                        }
                        poly = next;
                    }
                    for (m, c) in poly {
                        if c != 0 {
                            out.set(r, index[&m], c);
                        }
                    }
                }
                out
            })
            .collect();
        Ok(Self::new_unchecked(&self.group, f, basis.len(), action))
    }

    /// Exterior square with basis `e_i ^ e_j`, `i < j`, lexicographic.
    pub fn ext_square(&self) -> Result<ModuleRep> {
        let n = self.dim;
        if n < 2 {
            return Err(Error::BadDimension(n));
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let f = &self.field;
        let action = self
            .action
            .iter()
            .map(|g| {
                Matrix::from_fn(f, pairs.len(), pairs.len(), |r, c| {
                    let (i, j) = pairs[r];
                    let (a, b) = pairs[c];
                    f.sub(
                        f.mul(g.get(i, a), g.get(j, b)),
                        f.mul(g.get(i, b), g.get(j, a)),
                    )
                })
            })
            .collect();
        Ok(Self::new_unchecked(&self.group, f, pairs.len(), action))
    }

    pub fn frobenius_twist(&self) -> ModuleRep {
        let action = self.action.iter().map(|m| m.frobenius()).collect();
        Self::new_unchecked(&self.group, &self.field, self.dim, action)
    }

    /// Permutation module of a permutation-realized group.
    pub fn perm_module(group: &Group, field: &FieldSpec) -> Result<ModuleRep> {
        match &group.realization {
            Some(Realization::Perms { degree, gens }) => {
                let action = gens
                    .iter()
                    .map(|g| Matrix::from_fn(field, *degree, *degree, |i, j| (g[i] == j) as Elem))
                    .collect();
                Ok(Self::new_unchecked(group, field, *degree, action))
            }
            _ => Err(Error::NoRealization),
        }
    }

    /// Submodule spanned by the rows of `basis` (assumed invariant), in that basis.
    pub fn submodule(&self, basis: &Matrix) -> Result<ModuleRep> {
        let k = basis.rows();
        let action = self
            .action
            .iter()
            .map(|g| {
                let img = basis.mul_unchecked(g);
                basis
                    .solve_left(&img)
                    .ok_or_else(|| Error::SizeMismatch("subspace is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(&self.group, &self.field, k, action))
    }

    /// Quotient by the invariant subspace spanned by the rows of `basis`.
    /// Also returns the complement rows used as the quotient basis.
    pub fn quotient(&self, basis: &Matrix) -> Result<(ModuleRep, Matrix)> {
        let mut se = SemiEchelon::from_rows(basis);
        let sub_dim = se.len();
        let f = &self.field;
        for i in 0..self.dim {
            se.insert(&Matrix::unit_vector(f, self.dim, i));
        }
        // the stored (reduced) rows, not the raw unit vectors: `reduce`
        // returns coordinates against these
        let q = self.dim - sub_dim;
        let comp = Matrix::from_fn(f, q, self.dim, |r, c| se.basis().get(sub_dim + r, c));
        let action = self
            .action
            .iter()
            .map(|g| {
                let img = comp.mul_unchecked(g);
                let mut out = Matrix::zero(f, q, q);
                for r in 0..q {
                    let mut v = img.row_matrix(r);
                    let coeffs = se.reduce(&mut v);
                    debug_assert!(v.is_zero());
                    for c in 0..q {
                        out.set(r, c, coeffs[sub_dim + c]);
                    }
                }
                out
            })
            .collect();
        Ok((Self::new_unchecked(&self.group, f, q, action), comp))
    }

    /// Same module in a new basis: rows of `b` (invertible) become the basis.
    pub fn change_basis(&self, b: &Matrix) -> Result<ModuleRep> {
        let binv = b.inverse()?;
        let action = self
            .action
            .iter()
            .map(|g| b.mul_unchecked(g).mul_unchecked(&binv))
            .collect();
        Ok(Self::new_unchecked(&self.group, &self.field, self.dim, action))
    }

    /// Direct sum of `n` copies.
    pub fn power_sum(&self, n: usize) -> ModuleRep {
        let mut acc = ModuleRep::zero(&self.group, &self.field);
        for _ in 0..n {
            acc = acc.direct_sum(self).expect("same group");
        }
        acc
    }
}

/// The group handle produced by [`ModuleRep::restrict`].
pub fn restricted_group(group: &Group, h: &SubgroupSpec) -> Result<Group> {
    h.validate(group.ngens)?;
    if h.words == SubgroupSpec::all_generators(group.ngens).words {
        return Ok(group.clone());
    }
    let realization = match &group.realization {
        None => None,
        Some(Realization::Perms { degree, gens }) => {
            let invs: Vec<Vec<usize>> = gens.iter().map(|g| crate::group::invert_perm(g)).collect();
            let sub = h
                .words
                .iter()
                .map(|w| {
                    let mut acc: Vec<usize> = (0..*degree).collect();
                    for &(g, e) in w {
                        let base = if e >= 0 { &gens[g] } else { &invs[g] };
                        for _ in 0..e.unsigned_abs() {
                            acc = crate::group::compose_perm(&acc, base);
                        }
                    }
                    acc
                })
                .collect();
            Some(Realization::Perms {
                degree: *degree,
                gens: sub,
            })
        }
        Some(Realization::Matrices(ms)) => {
            let f = ms[0].field();
            let n = ms[0].rows();
            let invs: Vec<Matrix> = ms.iter().map(|m| m.inverse()).collect::<Result<_>>()?;
            Some(Realization::Matrices(
                h.words.iter().map(|w| eval_word(w, ms, &invs, f, n)).collect(),
            ))
        }
    };
    Ok(Arc::new(GroupSpec {
        name: format!("{}|{:?}", group.name, h.words),
        ngens: h.words.len(),
        realization,
    }))
}

/// Non-decreasing index tuples of length `i` over `0..n`, lexicographic.
pub fn monomials(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, i: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for a in start..n {
            cur.push(a);
            rec(n, i, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, i, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::perm_from_cycles;

    fn c3c3() -> (Group, FieldSpec) {
        let g = GroupSpec::from_perms(
            "C3xC3",
            9,
            vec![
                perm_from_cycles(9, "(1,2,3)(4,5,6)(7,8,9)").unwrap(),
                perm_from_cycles(9, "(1,4,7)(2,5,8)(3,6,9)").unwrap(),
            ],
        )
        .unwrap();
        (g, FieldSpec::prime(3).unwrap())
    }

    #[test]
    fn tensor_with_trivial_is_identity_map() {
        let (g, f) = c3c3();
        let m = ModuleRep::perm_module(&g, &f).unwrap();
        let k = ModuleRep::trivial(&g, &f, 1);
        assert_eq!(k.tensor(&m).unwrap(), m);
        assert_eq!(m.tensor(&k).unwrap().dim(), 9);
    }

    #[test]
    fn dual_is_involution() {
        let (g, f) = c3c3();
        let m = ModuleRep::perm_module(&g, &f).unwrap();
        assert_eq!(m.dual().dual(), m);
        let k = ModuleRep::trivial(&g, &f, 1);
        assert_eq!(k.dual(), k);
    }

    #[test]
    fn sums_and_dims() {
        let (g, f) = c3c3();
        let k = ModuleRep::trivial(&g, &f, 1);
        let kk = k.direct_sum(&k).unwrap();
        assert_eq!(kk, ModuleRep::trivial(&g, &f, 2));
        let m = ModuleRep::perm_module(&g, &f).unwrap();
        assert_eq!(m.sym_power(2).unwrap().dim(), 45);
        assert_eq!(m.ext_square().unwrap().dim(), 36);
        assert_eq!(
            m.sym_power(3).unwrap_err(),
            Error::ExponentTooLarge { i: 3, p: 3 }
        );
        assert_eq!(m.sym_power(1).unwrap(), m);
    }

    #[test]
    fn restrict_identity_words() {
        let (g, f) = c3c3();
        let m = ModuleRep::perm_module(&g, &f).unwrap();
        let r = m.restrict(&SubgroupSpec::all_generators(2)).unwrap();
        assert_eq!(r.action(), m.action());
    }

    #[test]
    fn ext_square_of_two_dim_is_determinant() {
        let f = FieldSpec::prime(5).unwrap();
        let g = GroupSpec::abstract_group("G", 1);
        let a = Matrix::from_rows(&f, &[vec![2, 1], vec![3, 3]]).unwrap();
        let m = ModuleRep::new(&g, &f, vec![a]).unwrap();
        let l = m.ext_square().unwrap();
        assert_eq!(l.action()[0].get(0, 0), f.sub(f.mul(2, 3), f.mul(1, 3)));
    }

    #[test]
    fn quotient_and_submodule() {
        let (g, f) = c3c3();
        let m = ModuleRep::perm_module(&g, &f).unwrap();
        let ones = Matrix::from_fn(&f, 1, 9, |_, _| 1);
        let s = m.submodule(&ones).unwrap();
        assert_eq!(s, ModuleRep::trivial(&g, &f, 1));
        let (q, _) = m.quotient(&ones).unwrap();
        assert_eq!(q.dim(), 8);
    }

    // comp·g - Q·comp must lie in the submodule; the all-ones vector reduces
    // every later unit vector, so raw unit vectors would not do as comp
    #[test]
    fn quotient_intertwines_projection() {
        let (g, f) = c3c3();
        let m = ModuleRep::perm_module(&g, &f).unwrap();
        let ones = Matrix::from_fn(&f, 1, 9, |_, _| 1);
        let (q, comp) = m.quotient(&ones).unwrap();
        let sub = SemiEchelon::from_rows(&ones);
        for (a, b) in m.action().iter().zip(q.action()) {
            let d = comp.mul(a).unwrap().sub(&b.mul(&comp).unwrap()).unwrap();
            assert!((0..d.rows()).all(|i| sub.contains(&d.row_matrix(i))));
        }
        assert_eq!(q.dual().dual(), q);
    }
}
