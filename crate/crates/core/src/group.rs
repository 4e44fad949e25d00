//! Abstract groups given by generators, optional concrete realizations,
//! generator words and element enumeration.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::matrix::Matrix;

/// A word in the generators: `(generator index, exponent)` pairs, evaluated
/// left to right.
pub type Word = Vec<(usize, i32)>;

/// Concrete realization used to tell group elements apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    /// Permutations on `0..degree`; `images[i]` is the image of point `i`.
    Perms { degree: usize, gens: Vec<Vec<usize>> },
    Matrices(Vec<Matrix>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub ngens: usize,
    pub realization: Option<Realization>,
}

pub type Group = Arc<GroupSpec>;

/// Subgroup given by words in the ambient generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub words: Vec<Word>,
}

impl SubgroupSpec {
    pub fn new(words: Vec<Word>) -> Self {
        SubgroupSpec { words }
    }

    /// The subgroup generated by single generators `idx`.
    pub fn from_generators(idx: &[usize]) -> Self {
        SubgroupSpec {
            words: idx.iter().map(|&i| vec![(i, 1)]).collect(),
        }
    }

    /// Identity words: each generator on its own.
    pub fn all_generators(ngens: usize) -> Self {
        Self::from_generators(&(0..ngens).collect::<Vec<_>>())
    }

    pub fn validate(&self, ngens: usize) -> Result<()> {
        for w in &self.words {
            for &(i, _) in w {
                if i >= ngens {
                    return Err(Error::BadWord { index: i, ngens });
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    // apply a then b
    a.iter().map(|&x| b[x]).collect()
}

pub(crate) fn invert_perm(a: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// A concrete group element used for enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Concrete {
    Perm(Vec<usize>),
    Mat(Vec<Elem>),
}

impl GroupSpec {
    pub fn new(name: &str, ngens: usize, realization: Option<Realization>) -> Result<Group> {
        if let Some(r) = &realization {
            match r {
                Realization::Perms { degree, gens } => {
                    if gens.len() != ngens {
                        return Err(Error::SizeMismatch("generator count".into()));
                    }
                    for g in gens {
                        let mut seen = vec![false; *degree];
                        if g.len() != *degree {
                            return Err(Error::SizeMismatch("permutation degree".into()));
                        }
                        for &x in g {
                            if x >= *degree || seen[x] {
                                return Err(Error::SizeMismatch("not a bijection".into()));
                            }
                            seen[x] = true;
                        }
                    }
                }
                Realization::Matrices(ms) => {
                    if ms.len() != ngens {
                        return Err(Error::SizeMismatch("generator count".into()));
                    }
                    let n = ms.first().map_or(0, |m| m.rows());
                    if ms.iter().any(|m| m.rows() != n || !m.is_invertible()) {
                        return Err(Error::Singular);
                    }
                }
            }
        }
        Ok(Arc::new(GroupSpec {
            name: name.to_string(),
            ngens,
            realization,
        }))
    }

    /// Group given by permutation generators (0-based images).
    pub fn from_perms(name: &str, degree: usize, gens: Vec<Vec<usize>>) -> Result<Group> {
        Self::new(name, gens.len(), Some(Realization::Perms { degree, gens }))
    }

    pub fn from_matrices(name: &str, gens: Vec<Matrix>) -> Result<Group> {
        Self::new(name, gens.len(), Some(Realization::Matrices(gens)))
    }

    /// Abstract group with no realization.
    pub fn abstract_group(name: &str, ngens: usize) -> Group {
        Arc::new(GroupSpec {
            name: name.to_string(),
            ngens,
            realization: None,
        })
    }

    fn concrete_gens(&self) -> Result<(Vec<Concrete>, Vec<Concrete>)> {
        match &self.realization {
            None => Err(Error::NoRealization),
            Some(Realization::Perms { gens, .. }) => Ok((
                gens.iter().map(|g| Concrete::Perm(g.clone())).collect(),
                gens.iter().map(|g| Concrete::Perm(invert_perm(g))).collect(),
            )),
            Some(Realization::Matrices(ms)) => {
                let mut fwd = Vec::new();
                let mut inv = Vec::new();
                for m in ms {
                    fwd.push(Concrete::Mat(m.to_rows().concat()));
                    inv.push(Concrete::Mat(m.inverse()?.to_rows().concat()));
                }
                Ok((fwd, inv))
            }
        }
    }

    fn compose(&self, a: &Concrete, b: &Concrete) -> Concrete {
        match (a, b, &self.realization) {
            (Concrete::Perm(x), Concrete::Perm(y), _) => Concrete::Perm(compose_perm(x, y)),
            (Concrete::Mat(x), Concrete::Mat(y), Some(Realization::Matrices(ms))) => {
                let f = ms[0].field();
                let n = ms[0].rows();
                let mx = Matrix::from_fn(f, n, n, |i, j| x[i * n + j]);
                let my = Matrix::from_fn(f, n, n, |i, j| y[i * n + j]);
                Concrete::Mat(mx.mul_unchecked(&my).to_rows().concat())
            }
            _ => unreachable!(),
        }
    }

    fn identity_concrete(&self) -> Result<Concrete> {
        match &self.realization {
            None => Err(Error::NoRealization),
            Some(Realization::Perms { degree, .. }) => Ok(Concrete::Perm((0..*degree).collect())),
            Some(Realization::Matrices(ms)) => {
                let n = ms[0].rows();
                Ok(Concrete::Mat(Matrix::identity(ms[0].field(), n).to_rows().concat()))
            }
        }
    }

    fn eval_concrete(&self, w: &Word, fwd: &[Concrete], inv: &[Concrete]) -> Result<Concrete> {
        let mut acc = self.identity_concrete()?;
        for &(g, e) in w {
            if g >= self.ngens {
                return Err(Error::BadWord {
                    index: g,
                    ngens: self.ngens,
                });
            }
            let base = if e >= 0 { &fwd[g] } else { &inv[g] };
            for _ in 0..e.unsigned_abs() {
                acc = self.compose(&acc, base);
            }
        }
        Ok(acc)
    }

    /// Enumerates the subgroup generated by `sub` (breadth-first closure),
    /// failing once more than `cap` elements are found.
    pub fn enumerate(&self, sub: &SubgroupSpec, cap: usize) -> Result<Elements> {
        sub.validate(self.ngens)?;
        let (fwd, inv) = self.concrete_gens()?;
        let gens: Vec<Concrete> = sub
            .words
            .iter()
            .map(|w| self.eval_concrete(w, &fwd, &inv))
            .collect::<Result<_>>()?;
        let id = self.identity_concrete()?;
        let mut index: HashMap<Concrete, usize> = HashMap::new();
        let mut elems = vec![id.clone()];
        let mut tree = vec![None];
        let mut mult: Vec<Vec<usize>> = Vec::new();
        index.insert(id, 0);
        let mut head = 0;
        while head < elems.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (j, g) in gens.iter().enumerate() {
                let x = self.compose(&elems[head], g);
                match index.get(&x) {
                    Some(&i) => row.push(i),
                    None => {
                        if elems.len() >= cap {
                            return Err(Error::OrderCapExceeded(cap));
                        }
                        row.push(elems.len());
                        index.insert(x.clone(), elems.len());
                        elems.push(x);
                        tree.push(Some((head, j)));
                    }
                }
            }
            mult.push(row);
            head += 1;
        }
        Ok(Elements {
            generators: sub.words.clone(),
            tree,
            mult,
            perms: elems
                .into_iter()
                .map(|c| match c {
                    Concrete::Perm(p) => Some(p),
                    _ => None,
                })
                .collect(),
        })
    }

    /// Order of the whole group by enumeration.
    pub fn order(&self, cap: usize) -> Result<usize> {
        Ok(self
            .enumerate(&SubgroupSpec::all_generators(self.ngens), cap)?
            .len())
    }
}

/// Enumerated elements of a subgroup. Element 0 is the identity; element
/// `i > 0` equals `element(parent) * generator(j)` for `tree[i] = Some((parent, j))`.
#[derive(Clone, Debug)]
pub struct Elements {
    pub generators: Vec<Word>,
    pub tree: Vec<Option<(usize, usize)>>,
    /// `mult[i][j]`: index of `element(i) * generator(j)`
    pub mult: Vec<Vec<usize>>,
    perms: Vec<Option<Vec<usize>>>,
}

impl Elements {
    pub fn len(&self) -> usize {
        self.tree.len()
    }
    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    /// Generator indices (into `generators`) whose product is element `i`.
    pub fn path(&self, mut i: usize) -> Vec<usize> {
        let mut parts = Vec::new();
        while let Some((parent, j)) = self.tree[i] {
            parts.push(j);
            i = parent;
        }
        parts.reverse();
        parts
    }

    /// Index of `element(x) * element(y)`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.path(y).into_iter().fold(x, |acc, j| self.mult[acc][j])
    }

    /// Right multiplication by element `y` as a permutation of indices.
    pub fn right_mult(&self, y: usize) -> Vec<usize> {
        let path = self.path(y);
        (0..self.len())
            .map(|x| path.iter().fold(x, |acc, &j| self.mult[acc][j]))
            .collect()
    }

    pub fn order_of(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn inverse(&self, x: usize) -> usize {
        let mut y = x;
        let mut prev = 0;
        while y != 0 {
            prev = y;
            y = self.mul(y, x);
        }
        prev
    }

    /// Word (in the ambient generators) for element `i`.
    pub fn word(&self, mut i: usize) -> Word {
        let mut parts = Vec::new();
        while let Some((parent, j)) = self.tree[i] {
            parts.push(j);
            i = parent;
        }
        parts
            .iter()
            .rev()
            .flat_map(|&j| self.generators[j].iter().copied())
            .collect()
    }

    /// Permutation images for element `i` when the realization is by permutations.
    pub fn perm(&self, i: usize) -> Option<&[usize]> {
        self.perms[i].as_deref()
    }

    /// Evaluates every element on a list of matrices for the subgroup generators.
    pub fn matrices(&self, gen_mats: &[Matrix]) -> Vec<Matrix> {
        let f = gen_mats[0].field();
        let n = gen_mats[0].rows();
        let mut out: Vec<Matrix> = Vec::with_capacity(self.len());
        out.push(Matrix::identity(f, n));
        for i in 1..self.len() {
            let (parent, j) = self.tree[i].unwrap();
            let m = out[parent].mul_unchecked(&gen_mats[j]);
            out.push(m);
        }
        out
    }

    /// Sum of all element matrices (the norm element).
    pub fn norm(&self, gen_mats: &[Matrix]) -> Matrix {
        let mats = self.matrices(gen_mats);
        let mut acc = Matrix::zero(gen_mats[0].field(), gen_mats[0].rows(), gen_mats[0].cols());
        for m in &mats {
            acc.axpy(1, m);
        }
        acc
    }
}

/// Parses cycle notation such as `(1,2,3)(4,5)` (1-based) into 0-based images.
pub fn perm_from_cycles(degree: usize, cycles: &str) -> Result<Vec<usize>> {
    let mut img: Vec<usize> = (0..degree).collect();
    for cyc in cycles.split(')').map(|s| s.trim().trim_start_matches('(')) {
        if cyc.is_empty() {
            continue;
        }
        let pts: Vec<usize> = cyc
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse {
                line: 0,
                msg: e.to_string(),
            })?;
        for (i, &x) in pts.iter().enumerate() {
            let y = pts[(i + 1) % pts.len()];
            if x == 0 || y == 0 || x > degree || y > degree {
                return Err(Error::OutOfRange(x.max(y)));
            }
            img[x - 1] = y - 1;
        }
    }
    Ok(img)
}

/// Matrices realizing a word given generator matrices and their inverses.
pub fn eval_word(w: &Word, gens: &[Matrix], inverses: &[Matrix], field: &FieldSpec, n: usize) -> Matrix {
    let mut acc = Matrix::identity(field, n);
    for &(g, e) in w {
        let base = if e >= 0 { &gens[g] } else { &inverses[g] };
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_unchecked(base);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_group_orders() {
        let a8 = GroupSpec::from_perms(
            "A8",
            8,
            vec![
                perm_from_cycles(8, "(1,2,3)").unwrap(),
                perm_from_cycles(8, "(2,3,4,5,6,7,8)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a8.order(100000).unwrap(), 20160);
    }

    #[test]
    fn words_evaluate_to_elements() {
        let g = GroupSpec::from_perms(
            "S3",
            3,
            vec![
                perm_from_cycles(3, "(1,2)").unwrap(),
                perm_from_cycles(3, "(1,2,3)").unwrap(),
            ],
        )
        .unwrap();
        let el = g.enumerate(&SubgroupSpec::all_generators(2), 100).unwrap();
        assert_eq!(el.len(), 6);
        let w = el.word(5);
        let (fwd, inv) = g.concrete_gens().unwrap();
        let c = g.eval_concrete(&w, &fwd, &inv).unwrap();
        assert_eq!(c, Concrete::Perm(el.perm(5).unwrap().to_vec()));
    }

    #[test]
    fn bad_words_rejected() {
        let g = GroupSpec::abstract_group("X", 2);
        assert_eq!(
            SubgroupSpec::new(vec![vec![(2, 1)]]).validate(g.ngens),
            Err(Error::BadWord { index: 2, ngens: 2 })
        );
        assert_eq!(
            g.enumerate(&SubgroupSpec::all_generators(2), 10).unwrap_err(),
            Error::NoRealization
        );
    }
}
