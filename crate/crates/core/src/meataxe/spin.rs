//! Spinning, invariant subspaces and composition series for an arbitrary
//! set of matrices acting on row vectors. The matrices need not be
//! invertible, so the same code chops group modules and modules over
//! endomorphism algebras.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{Matrix, SemiEchelon};
use crate::poly::{factor_poly_seeded, minpoly};

/// Closure of the rows of `seeds` under all of `gens`.
pub(crate) fn spin(gens: &[Matrix], seeds: &Matrix) -> SemiEchelon {
    let n = seeds.cols();
    let mut span = SemiEchelon::new(seeds.field(), n);
    for i in 0..seeds.rows() {
        span.insert(&seeds.row_matrix(i));
    }
    let mut head = 0;
    while head < span.len() && span.len() < n {
        let v = span.basis().row_matrix(head);
        for g in gens {
            span.insert(&v.mul_unchecked(g));
            if span.len() == n {
                break;
            }
        }
        head += 1;
    }
    span
}

/// A generating set of the module: standard basis vectors, skipping those
/// already inside the span of the previous ones.
pub(crate) fn module_generators(gens: &[Matrix], f: &FieldSpec, n: usize) -> Matrix {
    let mut seeds = Matrix::zero(f, 0, n);
    let mut span = SemiEchelon::new(f, n);
    for i in 0..n {
        if span.len() == n {
            break;
        }
        let e = Matrix::unit_vector(f, n, i);
        if span.contains(&e) {
            continue;
        }
        seeds.push_rows(&e);
        let grown = spin(gens, &span.basis().vstack(&e).unwrap());
        span = grown;
    }
    seeds
}

/// Action on an invariant subspace, in the subspace's echelon basis.
pub(crate) fn sub_action(gens: &[Matrix], sub: &SemiEchelon) -> Vec<Matrix> {
    let b = sub.basis();
    let s = b.rows();
    gens.iter()
        .map(|g| {
            let img = b.mul_unchecked(g);
            let mut out = Matrix::zero(b.field(), s, s);
            for r in 0..s {
                let mut v = img.row_matrix(r);
                let c = sub.reduce(&mut v);
                debug_assert!(v.is_zero(), "subspace is not invariant");
                for (j, x) in c.into_iter().enumerate() {
                    out.set(r, j, x);
                }
            }
            out
        })
        .collect()
}

/// Unit vectors at the non-pivot columns of `sub`: a basis of a complement.
pub(crate) fn complement_rows(sub: &SemiEchelon, n: usize) -> Matrix {
    let f = sub.basis().field();
    let mut is_piv = vec![false; n];
    for &p in sub.pivots() {
        is_piv[p] = true;
    }
    let cols: Vec<usize> = (0..n).filter(|&c| !is_piv[c]).collect();
    Matrix::from_fn(f, cols.len(), n, |i, j| (cols[i] == j) as u16)
}

/// Action on the quotient by an invariant subspace, in the basis given by
/// [`complement_rows`].
pub(crate) fn quotient_action(gens: &[Matrix], sub: &SemiEchelon, n: usize) -> Vec<Matrix> {
    let f = sub.basis().field().clone();
    let mut is_piv = vec![false; n];
    for &p in sub.pivots() {
        is_piv[p] = true;
    }
    let cols: Vec<usize> = (0..n).filter(|&c| !is_piv[c]).collect();
    let q = cols.len();
    gens.iter()
        .map(|g| {
            let mut out = Matrix::zero(&f, q, q);
            for (r, &c) in cols.iter().enumerate() {
                let mut v = g.row_matrix(c);
                sub.reduce(&mut v);
                for (j, &cj) in cols.iter().enumerate() {
                    out.set(r, j, v.get(0, cj));
                }
            }
            out
        })
        .collect()
}

/// Random elements of the algebra generated by `gens`.
pub(crate) struct RandomAlgebra<'a> {
    gens: &'a [Matrix],
    cur: Matrix,
}

impl<'a> RandomAlgebra<'a> {
    pub(crate) fn new(gens: &'a [Matrix], rng: &mut ChaCha8Rng) -> Self {
        let cur = gens[rng.gen_range(0..gens.len())].clone();
        RandomAlgebra { gens, cur }
    }

    pub(crate) fn next(&mut self, rng: &mut ChaCha8Rng) -> Matrix {
        let f = self.cur.field().clone();
        let i = rng.gen_range(0..self.gens.len());
        let j = rng.gen_range(0..self.gens.len());
        let c = rng.gen_range(1..f.order()) as u16;
        let mut next = self.cur.mul_unchecked(&self.gens[i]);
        next.axpy(c, &self.gens[j]);
        if next.is_zero() {
            next = self.gens[j].clone();
        }
        self.cur = next;
        // a random scalar shift keeps the sample away from the nilpotent cone
        let mut out = self.cur.clone();
        let s = rng.gen_range(0..f.order()) as u16;
        for d in 0..out.rows() {
            out.set(d, d, f.add(out.get(d, d), s));
        }
        out
    }
}

/// Outcome of a search for an invariant subspace.
pub(crate) enum Split {
    Proper(SemiEchelon),
    Irreducible,
}

/// Common fixed vectors of all generators.
fn fixed_points(gens: &[Matrix], f: &FieldSpec, n: usize) -> Matrix {
    let id = Matrix::identity(f, n);
    let mut stacked = Matrix::zero(f, n, 0);
    for g in gens {
        stacked = stacked.hstack(&g.sub(&id).unwrap()).unwrap();
    }
    stacked.nullspace()
}

fn is_scalar(g: &Matrix) -> bool {
    let d = g.get(0, 0);
    (0..g.rows()).all(|r| (0..g.cols()).all(|c| g.get(r, c) == if r == c { d } else { 0 }))
}

/// Finds a proper nonzero invariant subspace or certifies irreducibility
/// with the Norton/Holt–Rees criterion (kernel vector spin plus the dual
/// spin under transposes).
pub(crate) fn find_submodule(
    gens: &[Matrix],
    f: &FieldSpec,
    n: usize,
    rng: &mut ChaCha8Rng,
    trials: usize,
) -> Result<Split> {
    if n <= 1 {
        return Ok(Split::Irreducible);
    }
    // scalars leave every subspace invariant and only dilute the random walk
    let mut kept: Vec<&Matrix> = Vec::new();
    for g in gens {
        if !is_scalar(g) && !kept.contains(&g) {
            kept.push(g);
        }
    }
    let gens: Vec<Matrix> = kept.into_iter().cloned().collect();
    let gens = &gens[..];
    if gens.is_empty() {
        return Ok(Split::Proper(SemiEchelon::from_rows(&Matrix::unit_vector(f, n, 0))));
    }
    let fix = fixed_points(gens, f, n);
    if fix.rows() > 0 {
        let v = if fix.rows() < n { fix } else { Matrix::unit_vector(f, n, 0) };
        return Ok(Split::Proper(SemiEchelon::from_rows(&v)));
    }
    let gens_t: Vec<Matrix> = gens.iter().map(|g| g.transpose()).collect();
    let mut alg = RandomAlgebra::new(gens, rng);
    for _ in 0..trials {
        let a = alg.next(rng);
        let mp = minpoly(&a)?;
        let seed = rng.gen();
        for (fac, _) in factor_poly_seeded(&mp, seed)? {
            let b = fac.eval_matrix(&a)?;
            let ker = b.nullspace();
            if ker.rows() == 0 {
                continue;
            }
            let s = spin(gens, &ker.row_matrix(0));
            if s.len() < n {
                return Ok(Split::Proper(s));
            }
            if ker.rows() == fac.degree().unwrap_or(0) {
                let kt = b.transpose().nullspace();
                let st = spin(&gens_t, &kt.row_matrix(0));
                if st.len() < n {
                    // annihilator of an invariant subspace of the transposed action
                    let ann = st.basis().transpose().nullspace();
                    return Ok(Split::Proper(SemiEchelon::from_rows(&ann)));
                }
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::CertificationFailed(trials))
}

/// A composition series in an adapted basis: the first `dims[0]` rows of
/// `basis` span the bottom factor, the next `dims[1]` rows the next, and so on.
#[derive(Clone, Debug)]
pub(crate) struct Flag {
    pub basis: Matrix,
    pub dims: Vec<usize>,
    pub factors: Vec<Vec<Matrix>>,
}

pub(crate) fn composition_flag(
    gens: &[Matrix],
    f: &FieldSpec,
    n: usize,
    rng: &mut ChaCha8Rng,
    trials: usize,
) -> Result<Flag> {
    if n == 0 {
        return Ok(Flag {
            basis: Matrix::zero(f, 0, 0),
            dims: vec![],
            factors: vec![],
        });
    }
    match find_submodule(gens, f, n, rng, trials)? {
        Split::Irreducible => Ok(Flag {
            basis: Matrix::identity(f, n),
            dims: vec![n],
            factors: vec![gens.to_vec()],
        }),
        Split::Proper(sub) => {
            let s = sub.len();
            let lower = composition_flag(&sub_action(gens, &sub), f, s, rng, trials)?;
            let upper = composition_flag(&quotient_action(gens, &sub, n), f, n - s, rng, trials)?;
            let comp = complement_rows(&sub, n);
            let mut basis = lower.basis.mul_unchecked(sub.basis());
            basis.push_rows(&upper.basis.mul_unchecked(&comp));
            let mut dims = lower.dims;
            dims.extend(upper.dims);
            let mut factors = lower.factors;
            factors.extend(upper.factors);
            Ok(Flag {
                basis,
                dims,
                factors,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(0)
    }

    #[test]
    fn jordan_block_has_full_flag() {
        let f = FieldSpec::prime(3).unwrap();
        let j = Matrix::from_fn(&f, 3, 3, |i, k| (i == k || k == i + 1) as u16);
        let flag = composition_flag(&[j], &f, 3, &mut rng(), 64).unwrap();
        assert_eq!(flag.dims, vec![1, 1, 1]);
        assert!(flag.basis.is_invertible());
    }

    #[test]
    fn companion_of_irreducible_is_irreducible() {
        let f = FieldSpec::prime(2).unwrap();
        // x^3 + x + 1 is irreducible over GF(2)
        let c = crate::poly::companion(&crate::poly::Poly::new(&f, vec![1, 1, 0, 1]));
        let flag = composition_flag(&[c], &f, 3, &mut rng(), 64).unwrap();
        assert_eq!(flag.dims, vec![3]);
    }

    #[test]
    fn quotient_action_is_consistent() {
        let f = FieldSpec::prime(5).unwrap();
        let g = Matrix::from_rows(&f, &[vec![1, 2, 0], vec![0, 1, 3], vec![0, 0, 1]]).unwrap();
        let sub = spin(&[g.clone()], &Matrix::unit_vector(&f, 3, 2));
        assert_eq!(sub.len(), 1);
        let q = quotient_action(&[g], &sub, 3);
        assert_eq!(q[0], Matrix::from_rows(&f, &[vec![1, 2], vec![0, 1]]).unwrap());
    }
}
