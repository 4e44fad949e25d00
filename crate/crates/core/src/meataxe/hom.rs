//! Homomorphism spaces by spinning.
//!
//! The source is spun up from standard basis seeds; the unknowns are the
//! images of the seeds, and every linear relation met while spinning cuts
//! the candidate space down. Cost is governed by the number of surviving
//! candidates rather than by the `m*n` unknowns of the stacked commutation
//! system.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::matrix::{Matrix, SemiEchelon};
use crate::module::ModuleRep;

/// `Hom(M, N)` for actions `a` on `M` (dim `m`) and `b` on `N` (dim `n`):
/// all `X` with `a[g] * X = X * b[g]`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    /// inverse of the spun basis of the source
    einv: Matrix,
    /// `imgs[c]` has row `t` equal to the image of spun basis vector `t`
    imgs: Vec<Matrix>,
    cols: usize,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.imgs.len()
    }

    /// The homomorphism with coordinates `coeffs` in the internal basis.
    pub fn element(&self, coeffs: &[Elem]) -> Matrix {
        let f = self.einv.field();
        let mut acc = Matrix::zero(f, self.einv.rows(), self.cols);
        for (c, im) in coeffs.iter().zip(&self.imgs) {
            if *c != 0 {
                acc.axpy(*c, im);
            }
        }
        self.einv.mul_unchecked(&acc)
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.imgs.iter().map(|im| self.einv.mul_unchecked(im)).collect()
    }
}

pub(crate) fn hom_space(f: &FieldSpec, a: &[Matrix], m: usize, b: &[Matrix], n: usize) -> HomSpace {
    let f = f.clone();
    let mut span = SemiEchelon::new(&f, m);
    // img[t]: k x n, row c = image of spun vector t under candidate c
    let mut img: Vec<Matrix> = Vec::new();
    let mut k = 0usize;
    let mut head = 0;
    for i in 0..m {
        if span.len() == m {
            break;
        }
        let mut v = Matrix::unit_vector(&f, m, i);
        span.reduce(&mut v);
        if v.leading_col(0).is_none() {
            continue;
        }
        // fresh unknowns: the image of the new seed is free
        for im in img.iter_mut() {
            im.push_rows(&Matrix::zero(&f, n, n));
        }
        let mut seed_img = Matrix::zero(&f, k, n);
        seed_img.push_rows(&Matrix::identity(&f, n));
        k += n;
        span.insert_reduced(v);
        img.push(seed_img);
        while head < span.len() {
            let v = span.basis().row_matrix(head);
            for (ag, bg) in a.iter().zip(b) {
                let mut w = v.mul_unchecked(ag);
                let mut wi = img[head].mul_unchecked(bg);
                let coeffs = span.reduce(&mut w);
                for (t, c) in coeffs.into_iter().enumerate() {
                    if c != 0 {
                        wi.axpy(f.neg(c), &img[t]);
                    }
                }
                match w.leading_col(0) {
                    Some(c) => {
                        let inv = f.inv(w.get(0, c));
                        img.push(wi.scaled(inv));
                        span.insert_reduced(w);
                    }
                    None => {
                        if !wi.is_zero() {
                            let kk = wi.nullspace();
                            k = kk.rows();
                            for im in img.iter_mut() {
                                *im = kk.mul_unchecked(im);
                            }
                        }
                    }
                }
            }
            head += 1;
        }
    }
    let e = span.basis().clone();
    let einv = e.inverse().unwrap_or_else(|_| Matrix::zero(&f, m, m));
    let imgs = (0..k)
        .map(|c| {
            let mut x = Matrix::zero(&f, m, n);
            for (t, im) in img.iter().enumerate() {
                x.copy_row_from(t, im, c);
            }
            x
        })
        .collect();
    HomSpace { einv, imgs, cols: n }
}

fn check_pair(m: &ModuleRep, n: &ModuleRep) -> Result<()> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    if m.ngens() != n.ngens() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

/// Basis of `Hom_kG(M, N)`.
pub fn hom(m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    check_pair(m, n)?;
    Ok(hom_space(m.field(), m.action(), m.dim(), n.action(), n.dim()))
}

/// Canonical (reduced echelon, flattened row-major) basis of a space of
/// `r x c` matrices.
pub(crate) fn canonical(ms: &[Matrix], r: usize, c: usize) -> Vec<Matrix> {
    let Some(first) = ms.first() else {
        return vec![];
    };
    let f = first.field();
    let flat = Matrix::from_fn(f, ms.len(), r * c, |i, j| ms[i].get(j / c, j % c));
    let rs = flat.row_space();
    (0..rs.rows())
        .map(|i| Matrix::from_fn(f, r, c, |a, b| rs.get(i, a * c + b)))
        .collect()
}

/// All matrices commuting with every matrix in `ms`, as a canonical echelon
/// basis of the flattened solution space.
pub fn commutant(ms: &[Matrix]) -> Result<Vec<Matrix>> {
    let Some(first) = ms.first() else {
        return Err(Error::SizeMismatch("no matrices".into()));
    };
    let n = first.rows();
    for x in ms {
        if !x.is_square() || x.rows() != n {
            return Err(Error::SizeMismatch("commutant needs square matrices of one size".into()));
        }
        if x.field() != first.field() {
            return Err(Error::FieldMismatch);
        }
    }
    let h = hom_space(first.field(), ms, n, ms, n);
    Ok(canonical(&h.basis(), n, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{perm_from_cycles, GroupSpec};

    /// Solution space of `A X = X B` from the stacked linear system.
    fn sylvester(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
        let f = a[0].field().clone();
        let (m, n) = (a[0].rows(), b[0].rows());
        let mut sys = Matrix::zero(&f, m * n, 0);
        for (ag, bg) in a.iter().zip(b) {
            let mut blk = Matrix::zero(&f, m * n, m * n);
            for i in 0..m {
                for j in 0..n {
                    let eq = i * n + j;
                    for l in 0..m {
                        let u = l * n + j;
                        blk.set(u, eq, f.add(blk.get(u, eq), ag.get(i, l)));
                    }
                    for l in 0..n {
                        let u = i * n + l;
                        blk.set(u, eq, f.sub(blk.get(u, eq), bg.get(l, j)));
                    }
                }
            }
            sys = sys.hstack(&blk).unwrap();
        }
        let ns = sys.nullspace();
        (0..ns.rows())
            .map(|r| Matrix::from_fn(&f, m, n, |i, j| ns.get(r, i * n + j)))
            .collect()
    }

    fn v4_regular() -> ModuleRep {
        let g = GroupSpec::from_perms(
            "V4",
            4,
            vec![
                perm_from_cycles(4, "(1,2)(3,4)").unwrap(),
                perm_from_cycles(4, "(1,3)(2,4)").unwrap(),
            ],
        )
        .unwrap();
        ModuleRep::perm_module(&g, &FieldSpec::prime(2).unwrap()).unwrap()
    }

    #[test]
    fn identity_commutant_is_full() {
        let f = FieldSpec::prime(3).unwrap();
        assert_eq!(commutant(&[Matrix::identity(&f, 3)]).unwrap().len(), 9);
    }

    #[test]
    fn regular_v4_endomorphisms() {
        let m = v4_regular();
        let e = commutant(m.action()).unwrap();
        assert_eq!(e, sylvester(m.action(), m.action()));
        assert_eq!(e.len(), 4);
    }

    #[test]
    fn mixed_hom_matches_stacked_system() {
        let f = FieldSpec::prime(3).unwrap();
        let g = GroupSpec::abstract_group("C3", 1);
        let j2 = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let j3 = Matrix::from_rows(&f, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        let m = ModuleRep::new(&g, &f, vec![j2]).unwrap();
        let n = ModuleRep::new(&g, &f, vec![j3]).unwrap();
        for (x, y) in [(&m, &n), (&n, &m), (&n, &n)] {
            let h = hom(x, y).unwrap();
            let want = sylvester(x.action(), y.action());
            assert_eq!(canonical(&h.basis(), x.dim(), y.dim()), want);
            for b in h.basis() {
                assert_eq!(x.action()[0].mul(&b).unwrap(), b.mul(&y.action()[0]).unwrap());
            }
        }
    }
}
