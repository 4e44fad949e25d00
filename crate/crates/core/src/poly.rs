//! Univariate polynomials over a [`FieldSpec`], minimal polynomials of
//! matrices and complete factorization (squarefree, distinct-degree,
//! equal-degree).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::matrix::Matrix;

/// Polynomial with coefficients stored constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self::new(field, vec![])
    }
    pub fn one(field: &FieldSpec) -> Self {
        Self::new(field, vec![1])
    }
    /// The monomial `x`.
    pub fn x(field: &FieldSpec) -> Self {
        Self::new(field, vec![0, 1])
    }
    /// `x - a`.
    pub fn linear(field: &FieldSpec, a: Elem) -> Self {
        Self::new(field, vec![field.neg(a), 1])
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn lead(&self) -> Elem {
        *self.coeffs.last().unwrap_or(&0)
    }
    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead());
        let c = self.coeffs.iter().map(|&x| self.field.mul(x, inv)).collect();
        Poly::new(&self.field, c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let f = &self.field;
        let c = (0..n)
            .map(|i| {
                f.add(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *o.coeffs.get(i).unwrap_or(&0),
                )
            })
            .collect();
        Poly::new(f, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut c = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                f.axpy(&mut c[i..i + o.coeffs.len()], a, &o.coeffs);
            }
        }
        Poly::new(f, c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = &self.field;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut q = vec![0; r.len() - dd];
        let inv = f.inv(d.lead());
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c != 0 {
                q[i - dd] = c;
                let nc = f.neg(c);
                f.axpy(&mut r[i - dd..=i], nc, &d.coeffs);
            }
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lead());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, f.from_int(i as i64)))
            .collect();
        Poly::new(f, c)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut result = Poly::one(&self.field).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Result<Matrix> {
        if !m.is_square() {
            return Err(Error::NotSquare);
        }
        if m.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let n = m.rows();
        let mut acc = Matrix::zero(&self.field, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(m);
            if c != 0 {
                for i in 0..n {
                    acc.set(i, i, self.field.add(acc.get(i, i), c));
                }
            }
        }
        Ok(acc)
    }

    /// Canonical sort key: degree, then coefficients from the top down.
    pub fn sort_key(&self) -> (usize, Vec<Elem>) {
        (
            self.coeffs.len(),
            self.coeffs.iter().rev().copied().collect(),
        )
    }

    /// Human-readable rendering such as `x^2 + 2x + 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            parts.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        parts.join(" + ")
    }
}

/// Order polynomial of the row vector `v` under `m`: the monic least-degree
/// `f` with `v * f(m) = 0`.
pub fn order_poly(m: &Matrix, v: &Matrix) -> Poly {
    let f = m.field().clone();
    let n = m.rows();
    // rows kept in semi-echelon form, each tagged with its polynomial
    let mut rows = Matrix::zero(&f, 0, n);
    let mut pivots: Vec<usize> = Vec::new();
    let mut tags: Vec<Vec<Elem>> = Vec::new();
    let mut w = v.clone();
    let mut deg = 0;
    loop {
        let mut tag = vec![0; deg + 1];
        tag[deg] = 1;
        let mut r = w.clone();
        for (i, &c) in pivots.iter().enumerate() {
            let x = r.get(0, c);
            if x != 0 {
                let nx = f.neg(x);
                r.row_axpy(0, nx, &rows, i);
                let t = &tags[i];
                f.axpy(&mut tag[..t.len()], nx, t);
            }
        }
        match r.leading_col(0) {
            None => return Poly::new(&f, tag),
            Some(c) => {
                let inv = f.inv(r.get(0, c));
                r.scale_row(0, inv);
                f.scale(&mut tag, inv);
                rows.push_rows(&r);
                pivots.push(c);
                tags.push(tag);
            }
        }
        w = w.mul_unchecked(m);
        deg += 1;
    }
}

/// Minimal polynomial via Krylov spinning of standard basis vectors taken in
/// index order, skipping those already inside the spun invariant subspace.
pub fn minpoly(m: &Matrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let f = m.field().clone();
    let n = m.rows();
    let mut result = Poly::one(&f);
    let mut span = crate::matrix::SemiEchelon::new(&f, n);
    for i in 0..n {
        if span.len() == n {
            break;
        }
        let e = Matrix::unit_vector(&f, n, i);
        if span.contains(&e) {
            continue;
        }
        let op = order_poly(m, &e);
        let mut w = e;
        for _ in 0..op.degree().unwrap_or(0) {
            span.insert(&w);
            w = w.mul_unchecked(m);
        }
        let g = result.gcd(&op);
        result = result.mul(&op).div_rem(&g).0.monic();
    }
    Ok(result)
}

/// Square-free factorization: pairs `(g, e)` with `f = lead * prod g^e`.
fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let fld = f.field().clone();
    let p = fld.p() as usize;
    let mut out = Vec::new();
    let f = f.monic();
    if f.degree() == Some(0) {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        // f = g(x^p): take p-th roots of coefficients
        let root = pth_root(&f);
        for (g, e) in squarefree(&root) {
            out.push((g, e * p));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if !z.is_one() {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if !c.is_one() {
        let root = pth_root(&c);
        for (g, e) in squarefree(&root) {
            out.push((g, e * p));
        }
    }
    out
}

fn pth_root(f: &Poly) -> Poly {
    let fld = f.field();
    let p = fld.p() as usize;
    let k = fld.k();
    let c: Vec<Elem> = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&a| {
            // inverse Frobenius = Frobenius^(k-1)
            let mut x = a;
            for _ in 1..k {
                x = fld.frobenius(x);
            }
            x
        })
        .collect();
    Poly::new(fld, c)
}

/// Splits a squarefree monic `f` into `(g, d)` where `g` is the product of its
/// irreducible factors of degree `d`.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let fld = f.field().clone();
    let q = fld.order() as u128;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly::x(&fld);
    let mut h = x.clone();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            out.push((rest.monic(), deg));
            break;
        }
        h = h.pow_mod(q, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of degree-`d` irreducibles.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let deg = f.degree().unwrap();
    if deg == d {
        return vec![f.monic()];
    }
    let fld = f.field().clone();
    let q = fld.order() as u128;
    loop {
        let a = Poly::new(
            &fld,
            (0..deg).map(|_| rng.gen_range(0..q as u32) as Elem).collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            let e = (q.pow(d as u32) - 1) / 2;
            a.pow_mod(e, f).sub(&Poly::one(&fld))
        } else {
            // trace map a + a^2 + ... + a^(2^(k d - 1))
            let steps = fld.k() as usize * d;
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..steps {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        };
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let h = f.div_rem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
    }
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by `(degree, coefficients)`. The randomized stage is seeded;
/// the output is independent of the seed.
pub fn factor_poly_seeded(f: &Poly, seed: u64) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (g, e) in squarefree(f) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, &mut rng) {
                match out.iter_mut().find(|(p, _)| *p == irr) {
                    Some(entry) => entry.1 += e,
                    None => out.push((irr, e)),
                }
            }
        }
    }
    out.sort_by_key(|a| a.0.sort_key());
    Ok(out)
}

/// [`factor_poly_seeded`] with the default seed 0.
pub fn factor_poly(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    factor_poly_seeded(f, 0)
}

/// Companion matrix of a monic polynomial, acting on row vectors so that
/// `e_i -> e_{i+1}` and the last row holds `-c_0, ..., -c_{d-1}`.
pub fn companion(f: &Poly) -> Matrix {
    let fld = f.field();
    let d = f.degree().unwrap_or(0);
    let c = f.monic();
    Matrix::from_fn(fld, d, d, |i, j| {
        if i + 1 < d {
            (j == i + 1) as Elem
        } else {
            fld.neg(c.coeffs()[j])
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    /// Brute-force enumeration of monic irreducibles of degree `d` over GF(p).
    fn brute_irreducibles(fld: &FieldSpec, d: usize) -> Vec<Poly> {
        let q = fld.order() as usize;
        let mut out = Vec::new();
        for n in 0..q.pow(d as u32) {
            let mut c: Vec<Elem> = (0..d).map(|i| ((n / q.pow(i as u32)) % q) as Elem).collect();
            c.push(1);
            let f = Poly::new(fld, c);
            let reducible = (1..=d / 2).any(|e| {
                (0..q.pow(e as u32)).any(|m| {
                    let mut g: Vec<Elem> =
                        (0..e).map(|i| ((m / q.pow(i as u32)) % q) as Elem).collect();
                    g.push(1);
                    f.rem(&Poly::new(fld, g)).is_zero()
                })
            });
            if !reducible {
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn factor_examples() {
        let f5 = gf(5);
        let f = Poly::new(&f5, vec![4, 0, 1]);
        let fac = factor_poly(&f).unwrap();
        assert_eq!(
            fac,
            vec![
                (Poly::new(&f5, vec![1, 1]), 1),
                (Poly::new(&f5, vec![4, 1]), 1)
            ]
        );
        let f3 = gf(3);
        let g = Poly::new(&f3, vec![1, 0, 1]);
        assert_eq!(factor_poly(&g).unwrap(), vec![(g.clone(), 1)]);
    }

    #[test]
    fn x9_minus_x_over_gf3() {
        let f3 = gf(3);
        let mut c = vec![0; 10];
        c[9] = 1;
        c[1] = 2;
        let f = Poly::new(&f3, c);
        let fac = factor_poly(&f).unwrap();
        let mut expected: Vec<(Poly, usize)> = brute_irreducibles(&f3, 1)
            .into_iter()
            .chain(brute_irreducibles(&f3, 2))
            .map(|g| (g, 1))
            .collect();
        expected.sort_by_key(|a| a.0.sort_key());
        assert_eq!(expected.len(), 6);
        assert_eq!(fac, expected);
        let rendered: Vec<String> = fac.iter().map(|(g, _)| g.render()).collect();
        assert_eq!(
            rendered,
            vec!["x", "x + 1", "x + 2", "x^2 + 1", "x^2 + x + 2", "x^2 + 2x + 2"]
        );
    }

    #[test]
    fn factor_with_multiplicity_and_pth_powers() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
            let fld = FieldSpec::new(p, k, None).unwrap();
            let a = Poly::new(&fld, vec![1, 1]);
            let b = Poly::new(&fld, vec![1, 0, 1]);
            let f = a.mul(&a).mul(&a).mul(&b).mul(&b);
            let fac = factor_poly(&f).unwrap();
            let prod = fac.iter().fold(Poly::one(&fld), |acc, (g, e)| {
                (0..*e).fold(acc, |acc, _| acc.mul(g))
            });
            assert_eq!(prod, f);
        }
    }

    #[test]
    fn zero_poly_errors() {
        assert_eq!(factor_poly(&Poly::zero(&gf(3))).unwrap_err(), Error::ZeroPoly);
    }

    #[test]
    fn minpoly_examples() {
        let f = gf(5);
        assert_eq!(
            minpoly(&Matrix::identity(&f, 3)).unwrap(),
            Poly::new(&f, vec![4, 1])
        );
        let j = Matrix::from_rows(&f, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(minpoly(&j).unwrap(), Poly::new(&f, vec![0, 0, 1]));
        let g = Poly::new(&f, vec![2, 3, 0, 1]);
        assert_eq!(minpoly(&companion(&g)).unwrap(), g);
    }

    #[test]
    fn eval_matrix_scalar_coeffs() {
        let f = gf(7);
        let m = Matrix::from_rows(&f, &[vec![1, 2], vec![3, 4]]).unwrap();
        let p = Poly::new(&f, vec![5, 3, 2]);
        let direct = Matrix::scalar(&f, 2, 5)
            .add(&m.scaled(3))
            .unwrap()
            .add(&m.mul(&m).unwrap().scaled(2))
            .unwrap();
        assert_eq!(p.eval_matrix(&m).unwrap(), direct);
    }
}
