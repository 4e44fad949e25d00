//! Small finite fields GF(p^k).
//!
//! Elements are integers in `[0, p^k)` whose base-p digits are the
//! coefficients (constant term first) of a polynomial reduced modulo the
//! declared defining polynomial. Multiplication goes through log tables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Field element, encoded in base p.
pub type Elem = u16;

const MAX_ORDER: u32 = 65536;
const ADD_TABLE_LIMIT: u32 = 1024;

struct Tables {
    /// `exp[i] = g^i` for `i` in `0..2(q-1)`, so sums of logs need no reduction.
    exp: Vec<Elem>,
    /// `log[x]` for `x != 0`.
    log: Vec<u32>,
    /// Full addition table for small extension fields.
    add: Option<Vec<Elem>>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    frob: Vec<Elem>,
}

/// A finite field GF(p^k) together with its arithmetic tables.
///
/// Cloning is cheap; equality compares `(p, k, defining polynomial)`.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    poly: Vec<u32>,
    tables: Arc<Tables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.poly == other.poly
    }
}
impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.p, self.k, self.poly)
        }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomial helpers over GF(p), coefficients constant term first.

fn poly_rem_p(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let c = (r[r.len() - 1] * lead_inv) % p;
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - c * mi % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn digits(mut n: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Trial division by every monic polynomial of degree `1..=k/2`.
fn is_irreducible_p(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k <= 1 {
        return k == 1;
    }
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for n in 0..count {
            let mut g = digits(n, p, d);
            g.push(1);
            if poly_rem_p(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `k` over GF(p) whose lower coefficients,
/// read as a base-p number with `c_{k-1}` most significant, are least.
pub fn default_poly(p: u32, k: u32) -> Result<Vec<u32>> {
    if !is_prime(p) || p > 251 {
        return Err(Error::NotPrime(p));
    }
    let count = (p as u64).pow(k);
    if count > MAX_ORDER as u64 {
        return Err(Error::SizeOverflow { p, k });
    }
    for n in 0..count as u32 {
        let mut f = digits(n, p, k as usize);
        f.push(1);
        if is_irreducible_p(&f, p) {
            return Ok(f);
        }
    }
    Err(Error::ReduciblePoly)
}

impl FieldSpec {
    /// Builds GF(p^k). `poly` lists `k+1` coefficients, constant term first;
    /// when absent for `k > 1` the default defining polynomial is used.
    pub fn new(p: u32, k: u32, poly: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) || p > 251 {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ReduciblePoly);
        }
        let q64 = (p as u64).pow(k);
        if q64 > MAX_ORDER as u64 {
            return Err(Error::SizeOverflow { p, k });
        }
        let q = q64 as u32;
        let poly = if k == 1 {
            match poly {
                Some(f) if f.len() == 2 && f[1] == 1 && f[0] < p => f.to_vec(),
                Some(_) => return Err(Error::ReduciblePoly),
                None => vec![0, 1],
            }
        } else {
            match poly {
                Some(f) => {
                    if f.len() != k as usize + 1
                        || f[k as usize] != 1
                        || f.iter().any(|&c| c >= p)
                        || !is_irreducible_p(f, p)
                    {
                        return Err(Error::ReduciblePoly);
                    }
                    f.to_vec()
                }
                None => default_poly(p, k)?,
            }
        };
        let tables = build_tables(p, k, q, &poly);
        Ok(FieldSpec {
            p,
            k,
            q,
            poly: if k == 1 { vec![0, 1] } else { poly },
            tables: Arc::new(tables),
        })
    }

    /// Prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    /// Field order `p^k`.
    pub fn order(&self) -> u32 {
        self.q
    }
    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }
    /// Defining polynomial coefficients, constant term first.
    pub fn poly(&self) -> &[u32] {
        &self.poly
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            let s = a as u32 + b as u32;
            (if s >= self.p { s - self.p } else { s }) as Elem
        } else if let Some(t) = &self.tables.add {
            t[a as usize * self.q as usize + b as usize]
        } else {
            self.add_digits(a, b)
        }
    }

    fn add_digits(&self, a: Elem, b: Elem) -> Elem {
        let (mut a, mut b) = (a as u32, b as u32);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.tables.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.k == 1 {
            return ((a as u32 * b as u32) % self.p) as Elem;
        }
        let t = &self.tables;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        self.tables.inv[a as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &self.tables;
        let l = (t.log[a as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        t.exp[l as usize]
    }

    /// The Frobenius map `x -> x^p`.
    #[inline]
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.tables.frob[a as usize]
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    /// A fixed primitive element (generator of the multiplicative group).
    pub fn primitive(&self) -> Elem {
        self.tables.exp[1]
    }

    /// Multiplication-by-`c` lookup table, used by row kernels.
    pub(crate) fn mul_table(&self, c: Elem) -> Vec<Elem> {
        (0..self.q).map(|x| self.mul(c, x as Elem)).collect()
    }

    pub(crate) fn add_table(&self) -> Option<&[Elem]> {
        self.tables.add.as_deref()
    }

    /// `dst[i] += c * src[i]`.
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        if c == 0 {
            return;
        }
        if self.k == 1 {
            let p = self.p;
            if c == 1 {
                for (d, &s) in dst.iter_mut().zip(src) {
                    let v = *d as u32 + s as u32;
                    *d = (if v >= p { v - p } else { v }) as Elem;
                }
            } else {
                let c = c as u32;
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = ((*d as u32 + c * s as u32) % p) as Elem;
                }
            }
        } else {
            let mt = self.mul_table(c);
            match self.add_table() {
                Some(at) => {
                    let q = self.q as usize;
                    for (d, &s) in dst.iter_mut().zip(src) {
                        *d = at[*d as usize * q + mt[s as usize] as usize];
                    }
                }
                None => {
                    for (d, &s) in dst.iter_mut().zip(src) {
                        *d = self.add_digits(*d, mt[s as usize]);
                    }
                }
            }
        }
    }

    /// `v[i] *= c`.
    pub fn scale(&self, v: &mut [Elem], c: Elem) {
        if c == 1 {
            return;
        }
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }
}

/// Multiplies two field elements given as digit vectors modulo `poly`.
fn mul_raw(a: u32, b: u32, p: u32, poly: &[u32]) -> u32 {
    let k = poly.len() - 1;
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let mut prod = vec![0u32; 2 * k];
    for i in 0..k {
        for j in 0..k {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let r = poly_rem_p(&prod, poly, p);
    r.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn build_tables(p: u32, k: u32, q: u32, poly: &[u32]) -> Tables {
    let mulf = |a: u32, b: u32| -> u32 {
        if k == 1 {
            a * b % p
        } else {
            mul_raw(a, b, p, poly)
        }
    };
    // Primitive element search: smallest g whose order is q-1.
    let n = q - 1;
    let mut prime_factors = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            prime_factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_factors.push(m);
    }
    let pow_raw = |g: u32, mut e: u32| -> u32 {
        let mut r = 1;
        let mut b = g;
        while e > 0 {
            if e & 1 == 1 {
                r = mulf(r, b);
            }
            b = mulf(b, b);
            e >>= 1;
        }
        r
    };
    let gen = (1..q)
        .find(|&g| prime_factors.iter().all(|&f| pow_raw(g, n / f) != 1))
        .unwrap_or(1);
    let mut exp = vec![0 as Elem; 2 * n as usize];
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..n {
        exp[i as usize] = x as Elem;
        exp[(i + n) as usize] = x as Elem;
        log[x as usize] = i;
        x = mulf(x, gen);
    }
    let add_digits = |a: u32, b: u32| -> u32 {
        let da = digits(a, p, k as usize);
        let db = digits(b, p, k as usize);
        da.iter()
            .zip(&db)
            .rev()
            .fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    };
    let neg: Vec<Elem> = (0..q)
        .map(|a| {
            digits(a, p, k as usize)
                .iter()
                .rev()
                .fold(0, |acc, &x| acc * p + (p - x) % p) as Elem
        })
        .collect();
    let add = if k > 1 && q <= ADD_TABLE_LIMIT {
        let mut t = vec![0 as Elem; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                t[(a * q + b) as usize] = add_digits(a, b) as Elem;
            }
        }
        Some(t)
    } else {
        None
    };
    let mut inv = vec![0 as Elem; q as usize];
    for a in 1..q {
        let l = log[a as usize];
        inv[a as usize] = exp[((n - l) % n) as usize];
    }
    let frob: Vec<Elem> = (0..q)
        .map(|a| {
            if a == 0 {
                0
            } else {
                exp[((log[a as usize] as u64 * p as u64) % n as u64) as usize]
            }
        })
        .collect();
    Tables {
        exp,
        log,
        add,
        neg,
        inv,
        frob,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f2 = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f2.order(), 2);
        let f9 = FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f9.order(), 9);
        let f4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f4.order(), 4);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldSpec::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(
            FieldSpec::new(3, 2, Some(&[2, 0, 1])).unwrap_err(),
            Error::ReduciblePoly
        );
        assert!(matches!(
            FieldSpec::new(2, 17, None).unwrap_err(),
            Error::SizeOverflow { .. }
        ));
    }

    #[test]
    fn default_polys() {
        assert_eq!(default_poly(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(default_poly(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(default_poly(2, 3).unwrap(), vec![1, 1, 0, 1]);
    }

    #[test]
    fn field_axioms_small() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (3, 3), (5, 2)] {
            let f = FieldSpec::new(p, k, None).unwrap();
            let q = f.order() as Elem;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    let c = (a + b) % q;
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn frobenius_k_times_is_identity() {
        for (p, k) in [(2, 4), (3, 2), (3, 3), (7, 2)] {
            let f = FieldSpec::new(p, k, None).unwrap();
            for a in 0..f.order() as Elem {
                let mut x = a;
                for _ in 0..k {
                    x = f.frobenius(x);
                }
                assert_eq!(x, a);
                assert_eq!(f.frobenius(a), f.pow(a, p as u64));
            }
        }
    }

    #[test]
    fn large_field_digit_add() {
        let f = FieldSpec::new(2, 12, None).unwrap();
        assert!(f.add_table().is_none());
        assert_eq!(f.add(5, 3), 6);
        let a = 1234;
        assert_eq!(f.mul(a, f.inv(a)), 1);
    }
}
