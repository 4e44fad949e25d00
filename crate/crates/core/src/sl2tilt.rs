//! Symbolic tensor products for `SL₂(q)`, `q = p^n`, `p` odd: Steinberg
//! digits, Weyl and tilting characters, products of fundamental modules and
//! the finite closure of the natural module under tensoring.
//!
//! Everything is validated against characters: a decomposition whose
//! character differs from the product of the input characters is an error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::group::{GroupSpec, SubgroupSpec};
use crate::matrix::Matrix;
use crate::meataxe::{self, Options};
use crate::module::ModuleRep;

fn check_p(p: u32) -> Result<()> {
    let prime = p >= 3 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if !prime {
        return Err(Error::OutOfRange(p as usize));
    }
    Ok(())
}

/// Laurent polynomial in `v` with integer coefficients, keyed by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CharPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl CharPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `χ(λ) = v^λ + v^{λ-2} + … + v^{-λ}`.
    pub fn weyl(lambda: u32) -> Self {
        let l = lambda as i64;
        let mut c = CharPoly::zero();
        for w in (-l..=l).step_by(2) {
            c.coeffs.insert(w, 1);
        }
        c
    }

    /// Character of the indecomposable tilting module `T(m)`.
    pub fn tilting(m: u32, p: u32) -> Self {
        if m < p {
            return Self::weyl(m);
        }
        if m <= 2 * p - 2 {
            return Self::weyl(m).add(&Self::weyl(2 * p - 2 - m));
        }
        // T(p-1+a+pb) = T(p-1+a) ⊗ T(b)^σ
        let a = (m - (p - 1)) % p;
        let b = (m - (p - 1)) / p;
        Self::tilting(p - 1 + a, p).mul(&Self::tilting(b, p).frobenius(p as i64))
    }

    pub fn coeff(&self, w: i64) -> i64 {
        self.coeffs.get(&w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn put(&mut self, w: i64, c: i64) {
        if c == 0 {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
    }

    pub fn add(&self, other: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.put(w, out.coeff(w) + c);
        }
        out
    }

    pub fn scaled(&self, k: i64) -> CharPoly {
        let mut out = CharPoly::zero();
        for (w, c) in self.terms() {
            out.put(w, c * k);
        }
        out
    }

    pub fn sub(&self, other: &CharPoly) -> CharPoly {
        self.add(&other.scaled(-1))
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.put(a + b, out.coeff(a + b) + x * y);
            }
        }
        out
    }

    /// `v ↦ v^k`.
    pub fn frobenius(&self, k: i64) -> CharPoly {
        CharPoly {
            coeffs: self.coeffs.iter().map(|(&w, &c)| (w * k, c)).collect(),
        }
    }

    /// Value at `v = 1`.
    pub fn dim(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.terms().all(|(w, c)| self.coeff(-w) == c)
    }

    pub fn top_weight(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }
}

/// One tensor factor at a single twist level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Symbol {
    /// `L(a)`, `0 <= a <= p-1`
    L(u32),
    /// `T(b)`, `p <= b <= 2p-1`
    T(u32),
}

impl Symbol {
    pub fn char_poly(&self, p: u32) -> CharPoly {
        match *self {
            Symbol::L(a) => CharPoly::weyl(a),
            Symbol::T(b) if b == 2 * p - 1 => CharPoly::weyl(b),
            Symbol::T(b) => CharPoly::tilting(b, p),
        }
    }

    pub fn dim(&self, p: u32) -> usize {
        self.char_poly(p).dim() as usize
    }

    fn valid(&self, p: u32) -> bool {
        match *self {
            Symbol::L(a) => a < p,
            Symbol::T(b) => (p..2 * p).contains(&b),
        }
    }

    /// Symbol for a tilting module of highest weight `m <= 2p-1`.
    fn of_weight(m: u32, p: u32) -> Symbol {
        if m < p {
            Symbol::L(m)
        } else {
            Symbol::T(m)
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::L(a) => write!(f, "L({a})"),
            Symbol::T(b) => write!(f, "T({b})"),
        }
    }
}

/// `⊗_i X_i^{σ^i}`, one symbol per twist level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TiltingWord {
    pub p: u32,
    pub factors: Vec<Symbol>,
}

impl TiltingWord {
    pub fn new(p: u32, factors: Vec<Symbol>) -> Result<Self> {
        check_p(p)?;
        if let Some(s) = factors.iter().find(|s| !s.valid(p)) {
            let w = match s {
                Symbol::L(a) => *a,
                Symbol::T(b) => *b,
            };
            return Err(Error::OutOfRange(w as usize));
        }
        Ok(TiltingWord { p, factors })
    }

    pub fn trivial(p: u32, n: usize) -> Self {
        TiltingWord {
            p,
            factors: vec![Symbol::L(0); n],
        }
    }

    /// `L(λ)` through its Steinberg digits.
    pub fn simple(lambda: u64, p: u32, n: usize) -> Result<Self> {
        let digits = steinberg_decompose(lambda, p, n)?;
        TiltingWord::new(p, digits.into_iter().map(Symbol::L).collect())
    }

    pub fn levels(&self) -> usize {
        self.factors.len()
    }

    pub fn char_poly(&self) -> CharPoly {
        let mut c = CharPoly::weyl(0);
        let mut scale = 1i64;
        for s in &self.factors {
            c = c.mul(&s.char_poly(self.p).frobenius(scale));
            scale *= self.p as i64;
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|s| s.dim(self.p)).product()
    }

    /// `W^{σ^k}`: the factor at level `i` moves to level `i+k mod n`.
    pub fn rotate(&self, k: usize) -> TiltingWord {
        let n = self.factors.len();
        let mut factors = self.factors.clone();
        if n > 0 {
            factors.rotate_right(k % n);
        }
        TiltingWord { p: self.p, factors }
    }

    fn padded(&self, n: usize) -> TiltingWord {
        let mut w = self.clone();
        w.factors.resize(n.max(w.factors.len()), Symbol::L(0));
        w
    }
}

impl fmt::Display for TiltingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .enumerate()
            .filter(|(_, s)| **s != Symbol::L(0))
            .map(|(i, s)| match i {
                0 => s.to_string(),
                1 => format!("{s}^σ"),
                _ => format!("{s}^σ^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "L(0)")
        } else {
            write!(f, "{}", parts.join("⊗"))
        }
    }
}

/// Direct sum of words with positive multiplicities, canonically ordered.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FormalSum {
    pub terms: BTreeMap<TiltingWord, usize>,
}

impl FormalSum {
    pub fn add(&mut self, w: TiltingWord, k: usize) {
        if k > 0 {
            *self.terms.entry(w).or_insert(0) += k;
        }
    }

    fn single(p: u32, syms: impl IntoIterator<Item = Symbol>) -> FormalSum {
        let mut s = FormalSum::default();
        for x in syms {
            s.add(TiltingWord { p, factors: vec![x] }, 1);
        }
        s
    }

    pub fn char_poly(&self) -> CharPoly {
        self.terms
            .iter()
            .fold(CharPoly::zero(), |acc, (w, &k)| acc.add(&w.char_poly().scaled(k as i64)))
    }

    pub fn dim(&self) -> usize {
        self.terms.iter().map(|(w, &k)| w.dim() * k).sum()
    }

    pub fn count(&self) -> usize {
        self.terms.values().sum()
    }

    pub fn words(&self) -> impl Iterator<Item = &TiltingWord> {
        self.terms.keys()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, &k)| if k == 1 { w.to_string() } else { format!("{k}·{w}") })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// Base-`p` digits of `λ < p^n`, least significant first.
pub fn steinberg_decompose(lambda: u64, p: u32, n: usize) -> Result<Vec<u32>> {
    let q = (p as u64).checked_pow(n as u32).ok_or(Error::OutOfRange(lambda as usize))?;
    if lambda >= q {
        return Err(Error::OutOfRange(lambda as usize));
    }
    let mut l = lambda;
    Ok((0..n)
        .map(|_| {
            let d = (l % p as u64) as u32;
            l /= p as u64;
            d
        })
        .collect())
}

fn validate(got: &FormalSum, want: &CharPoly, what: &str) -> Result<()> {
    if got.char_poly() != *want {
        return Err(Error::CharMismatch(format!("{what}: {got}")));
    }
    Ok(())
}

/// The tilting chain `top, top-2, …` down to `p-1` or `p`, as symbols.
fn tilting_chain(top: u32, p: u32) -> impl Iterator<Item = Symbol> {
    let start = if (top - p) % 2 == 0 { p } else { p - 1 };
    (start..=top).step_by(2).map(move |m| Symbol::of_weight(m, p))
}

/// `L(λ) ⊗ L(μ)` for `λ, μ <= p-1`. The tilting part starts at `T(p)` when
/// `λ+μ ≡ p (mod 2)` and at `L(p-1)` otherwise.
pub fn fundamental_tensor(lambda: u32, mu: u32, p: u32) -> Result<FormalSum> {
    check_p(p)?;
    let (l, m) = if lambda >= mu { (lambda, mu) } else { (mu, lambda) };
    if l >= p {
        return Err(Error::OutOfRange(l as usize));
    }
    let want = CharPoly::weyl(l).mul(&CharPoly::weyl(m));
    let out = if l + m < p {
        FormalSum::single(p, (l - m..=l + m).step_by(2).map(Symbol::L))
    } else {
        // simple part runs up to a = 2p - (λ+μ+4); empty when λ = p-1
        let a = 2 * p as i64 - (l + m + 4) as i64;
        let lows = (l - m..).step_by(2).take_while(|&j| j as i64 <= a).map(Symbol::L);
        FormalSum::single(p, lows.chain(tilting_chain(l + m, p)))
    };
    validate(&out, &want, &format!("L({l})⊗L({m})"))?;
    Ok(out)
}

/// The variant that picks the tilting chain from the parity of `μ` alone
/// (`μ` even: `L(p-1) ⊕ T(p+1) ⊕ …`, odd: `T(p) ⊕ T(p+2) ⊕ …`), with the
/// verdict of the character check. It agrees with [`fundamental_tensor`]
/// exactly when `λ` is even.
pub fn fundamental_tensor_mu_parity(lambda: u32, mu: u32, p: u32) -> Result<(FormalSum, bool)> {
    check_p(p)?;
    let (l, m) = if lambda >= mu { (lambda, mu) } else { (mu, lambda) };
    if l >= p {
        return Err(Error::OutOfRange(l as usize));
    }
    if l + m < p {
        return Ok((fundamental_tensor(l, m, p)?, true));
    }
    let a = 2 * p as i64 - (l + m + 4) as i64;
    let lows = (l - m..).step_by(2).take_while(|&j| j as i64 <= a).map(Symbol::L);
    let start = if m % 2 == 0 { p - 1 } else { p };
    let chain = (start..=l + m).step_by(2).map(|x| Symbol::of_weight(x, p));
    let out = FormalSum::single(p, lows.chain(chain));
    let ok = out.char_poly() == CharPoly::weyl(l).mul(&CharPoly::weyl(m));
    Ok((out, ok))
}

/// `T(p) ⊗ L(p-1) ≅ 2·(T(p) ⊕ T(p+2) ⊕ … ⊕ T(2p-3)) ⊕ T(2p-1)`, where
/// `T(2p-1) = L(p-1) ⊗ L(1)^σ`.
#[derive(Clone, Debug, Serialize)]
pub struct ThreeIsTwo {
    pub p: u32,
    pub rhs: FormalSum,
}

pub fn threeistwo_rewrite(p: u32) -> Result<ThreeIsTwo> {
    check_p(p)?;
    let mut rhs = FormalSum::default();
    for b in (p..=2 * p - 3).step_by(2) {
        rhs.add(TiltingWord { p, factors: vec![Symbol::T(b)] }, 2);
    }
    rhs.add(TiltingWord { p, factors: vec![Symbol::T(2 * p - 1)] }, 1);
    let want = CharPoly::tilting(p, p).mul(&CharPoly::weyl(p - 1));
    validate(&rhs, &want, "T(p)⊗L(p-1)")?;
    Ok(ThreeIsTwo { p, rhs })
}

/// `L(1) ⊗ L(λ) ⊗ L(μ) = A ⊕ B ⊗ L(1)^σ` with `A` a sum of pairs
/// `L(i) ⊗ L(j)` and `B = L(p-1)` exactly when `λ = μ = p-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSplit {
    /// `((i, j), multiplicity)`, `i >= j`
    pub a: Vec<((u32, u32), usize)>,
    pub b: Option<u32>,
}

fn pair(i: u32, j: u32) -> (u32, u32) {
    (i.max(j), i.min(j))
}

pub fn one_times_pair(lambda: u32, mu: u32, p: u32) -> Result<PairSplit> {
    check_p(p)?;
    if lambda >= p || mu >= p {
        return Err(Error::OutOfRange(lambda.max(mu) as usize));
    }
    let top = p - 1;
    let split = if lambda == top && mu == top {
        PairSplit {
            a: vec![(pair(top, top - 1), 2)],
            b: Some(top),
        }
    } else {
        // let L(1) act on a factor below p-1
        let (x, y) = if lambda < top { (lambda, mu) } else { (mu, lambda) };
        let a = if x == 0 {
            vec![(pair(1, y), 1)]
        } else {
            vec![(pair(x - 1, y), 1), (pair(x + 1, y), 1)]
        };
        PairSplit { a, b: None }
    };
    let mut got = CharPoly::zero();
    for &((i, j), k) in &split.a {
        got = got.add(&CharPoly::weyl(i).mul(&CharPoly::weyl(j)).scaled(k as i64));
    }
    if let Some(b) = split.b {
        got = got.add(&CharPoly::weyl(b).mul(&CharPoly::weyl(1).frobenius(p as i64)));
    }
    let want = CharPoly::weyl(1).mul(&CharPoly::weyl(lambda)).mul(&CharPoly::weyl(mu));
    if got != want {
        return Err(Error::CharMismatch(format!("L(1)⊗L({lambda})⊗L({mu})")));
    }
    Ok(split)
}

/// Greedy highest-weight subtraction of tilting characters. Weights
/// `m >= 2p-1` become words through `T(p-1+a+pb) = T(p-1+a) ⊗ T(b)^σ`.
pub fn tilting_decompose_by_char(c: &CharPoly, p: u32) -> Result<FormalSum> {
    check_p(p)?;
    let mut rest = c.clone();
    let mut words: Vec<(TiltingWord, usize)> = Vec::new();
    while let Some(m) = rest.top_weight() {
        let k = rest.coeff(m);
        if k < 0 || m < 0 {
            return Err(Error::NegativeCoefficient(m));
        }
        rest = rest.sub(&CharPoly::tilting(m as u32, p).scaled(k));
        words.push((tilting_word(m as u32, p), k as usize));
    }
    let n = words.iter().map(|(w, _)| w.levels()).max().unwrap_or(1);
    let mut out = FormalSum::default();
    for (w, k) in words {
        out.add(w.padded(n), k);
    }
    validate(&out, c, "greedy tilting decomposition")?;
    Ok(out)
}

fn tilting_word(m: u32, p: u32) -> TiltingWord {
    if m < 2 * p - 1 {
        return TiltingWord {
            p,
            factors: vec![Symbol::of_weight(m, p)],
        };
    }
    let a = (m - (p - 1)) % p;
    let b = (m - (p - 1)) / p;
    let mut factors = vec![Symbol::of_weight(p - 1 + a, p)];
    factors.extend(tilting_word(b, p).factors);
    TiltingWord { p, factors }
}

/// A product `M ⊗ N` of two simple modules: one pair of digits per level.
pub type PairWord = Vec<(u32, u32)>;

/// Summand classes of all tensor powers of the natural module.
#[derive(Clone, Debug, Serialize)]
pub struct V1Closure {
    pub p: u32,
    pub n: usize,
    /// products of two simples met along the way
    pub pairs: Vec<PairWord>,
    /// word summands of the reachable pairs: the classes of `𝒯(L(1))`
    pub classes: Vec<TiltingWord>,
    /// `classes` together with all their twists
    pub saturated: Vec<TiltingWord>,
    pub closed: bool,
}

fn rotate_pairs(w: &PairWord, k: usize) -> PairWord {
    let mut out = w.clone();
    out.rotate_right(k % w.len());
    out
}

/// Pair words whose sum is `L(1) ⊗ w`.
fn expand(w: &PairWord, p: u32, out: &mut BTreeSet<PairWord>) -> Result<()> {
    let (x, y) = w[0];
    let split = one_times_pair(x, y, p)?;
    for ((i, j), _) in split.a {
        let mut v = w.clone();
        v[0] = (i, j);
        out.insert(v);
    }
    if let Some(b) = split.b {
        // B ⊗ L(1)^σ ⊗ Y': untwist once, recurse, twist back
        let mut v = w.clone();
        v[0] = (b, 0);
        let down = rotate_pairs(&v, w.len() - 1);
        let mut sub = BTreeSet::new();
        expand(&down, p, &mut sub)?;
        for s in sub {
            out.insert(rotate_pairs(&s, 1));
        }
    }
    Ok(())
}

/// Closure of `L(1)` for `SL₂(p^n)`, `n >= 2`: the pair words reachable by
/// repeated multiplication with `L(1)`, then every word summand of them.
pub fn v1_closure(p: u32, n: usize, max_classes: usize) -> Result<V1Closure> {
    check_p(p)?;
    if n < 2 {
        return Err(Error::OutOfRange(n));
    }
    let mut start = vec![(0, 0); n];
    start[0] = (1, 0);
    let mut seen: BTreeSet<PairWord> = BTreeSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    while let Some(w) = queue.pop() {
        let mut next = BTreeSet::new();
        expand(&w, p, &mut next)?;
        for v in next {
            if seen.insert(v.clone()) {
                if seen.len() > max_classes {
                    return Err(Error::BudgetExceeded(format!("more than {max_classes} pair words")));
                }
                queue.push(v);
            }
        }
    }
    let mut classes: BTreeSet<TiltingWord> = BTreeSet::new();
    let mut level_cache: BTreeMap<(u32, u32), Vec<Symbol>> = BTreeMap::new();
    for w in &seen {
        let mut words: Vec<Vec<Symbol>> = vec![vec![]];
        for &(i, j) in w {
            let syms = match level_cache.get(&(i, j)) {
                Some(s) => s.clone(),
                None => {
                    let s: Vec<Symbol> = fundamental_tensor(i, j, p)?
                        .words()
                        .map(|x| x.factors[0])
                        .collect();
                    level_cache.insert((i, j), s.clone());
                    s
                }
            };
            words = words
                .into_iter()
                .flat_map(|pre| {
                    syms.iter().map(move |s| {
                        let mut v = pre.clone();
                        v.push(*s);
                        v
                    })
                })
                .collect();
        }
        for f in words {
            classes.insert(TiltingWord { p, factors: f });
            if classes.len() > max_classes {
                return Err(Error::BudgetExceeded(format!("more than {max_classes} word classes")));
            }
        }
    }
    let saturated: BTreeSet<TiltingWord> = classes.iter().flat_map(|w| (0..n).map(move |k| w.rotate(k))).collect();
    Ok(V1Closure {
        p,
        n,
        pairs: seen.into_iter().collect(),
        classes: classes.into_iter().collect(),
        saturated: saturated.into_iter().collect(),
        closed: true,
    })
}

/// The natural module of `SL₂(p^n)` on the transvections `x(1)`, `y(1)` and
/// `x(ω)` for a field generator `ω` (the first two alone only generate
/// `SL₂(p)` when `n > 1`).
pub fn realize_on_matrices(p: u32, n: u32) -> Result<ModuleRep> {
    check_p(p)?;
    let q = (p as u64).pow(n);
    if q > 27 {
        return Err(Error::SizeCap(format!("q = {q} > 27")));
    }
    let f = FieldSpec::new(p, n, None)?;
    // the polynomial basis encodes x as p
    let omega = if n == 1 { 1 } else { p as u16 };
    let x1 = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]])?;
    let y1 = Matrix::from_rows(&f, &[vec![1, 0], vec![1, 1]])?;
    let xw = Matrix::from_rows(&f, &[vec![1, omega], vec![0, 1]])?;
    let mut gens = vec![x1, y1];
    if n > 1 {
        gens.push(xw);
    }
    let g = GroupSpec::from_matrices(&format!("SL2({q})"), gens.clone())?;
    ModuleRep::new(&g, &f, gens)
}

/// Words for a Sylow p-subgroup of the group of [`realize_on_matrices`]:
/// the upper unitriangular matrices, generated by `x(1)` and `x(ω)`.
pub fn sylow_words(n: u32) -> SubgroupSpec {
    if n == 1 {
        SubgroupSpec::from_generators(&[0])
    } else {
        SubgroupSpec::from_generators(&[0, 2])
    }
}

/// Matrix model of a single-level symbol over the natural module `v1`.
pub fn realize_symbol(s: Symbol, v1: &ModuleRep, opts: &Options) -> Result<ModuleRep> {
    let p = v1.field().p();
    match s {
        Symbol::L(a) => v1.sym_power(a as usize),
        Symbol::T(b) if b == 2 * p - 1 => {
            let top = v1.sym_power(p as usize - 1)?;
            top.tensor(&v1.frobenius_twist())
        }
        Symbol::T(b) => {
            // T(b) is what L(p-1) ⊗ L(b-p+1) has beyond L(p-1) ⊗ L(b-p-1)
            let top = v1.sym_power(p as usize - 1)?;
            let mu = (b - p + 1) as usize;
            let prod = top.tensor(&v1.sym_power(mu)?)?;
            let lower = if mu >= 2 {
                meataxe::decompose(&top.tensor(&v1.sym_power(mu - 2)?)?, opts)?.summands
            } else {
                vec![]
            };
            let d = meataxe::decompose(&prod, opts)?;
            let mut keep = Matrix::zero(v1.field(), 0, prod.dim());
            for s in &d.summands {
                let mut old = s.module.dim() == top.dim() && meataxe::iso_test(&s.module, &top, opts)?.is_some();
                for l in &lower {
                    if old {
                        break;
                    }
                    old = l.fingerprint == s.fingerprint && meataxe::iso_test(&l.module, &s.module, opts)?.is_some();
                }
                if !old {
                    keep.push_rows(&s.bases[0]);
                }
            }
            prod.submodule(&keep)
        }
    }
}

/// Matrix model of a word: tensor product of twisted symbol modules.
pub fn realize_word(w: &TiltingWord, v1: &ModuleRep, opts: &Options) -> Result<ModuleRep> {
    let mut acc = ModuleRep::trivial(v1.group(), v1.field(), 1);
    for (i, s) in w.factors.iter().enumerate() {
        let mut m = realize_symbol(*s, v1, opts)?;
        for _ in 0..i {
            m = m.frobenius_twist();
        }
        acc = acc.tensor(&m)?;
    }
    Ok(acc)
}

/// Matrix-side check of a [`V1Closure`]: the tensor closure of the natural
/// module, computed with matrices, against the realized symbolic words.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub matrix_closed: bool,
    pub matrix_classes: usize,
    /// closure words that stay non-projective on restriction to a Sylow
    pub symbolic_nonprojective: usize,
    /// `(matrix class, word)`: the class is isomorphic to that word
    pub matched: Vec<(usize, String)>,
    pub unmatched: Vec<usize>,
    /// every realized word has the dimension of its character
    pub dims_ok: bool,
}

impl CrossCheck {
    pub fn pass(&self) -> bool {
        self.matrix_closed
            && self.unmatched.is_empty()
            && self.dims_ok
            && self.matrix_classes == self.symbolic_nonprojective
    }
}

pub fn crosscheck(c: &V1Closure, budgets: &crate::algtest::Budgets, opts: &Options) -> Result<CrossCheck> {
    let v1 = realize_on_matrices(c.p, c.n as u32)?;
    let sylow = v1.group().enumerate(&sylow_words(c.n as u32), 1 << 16)?;
    let (st, _) = crate::algtest::tensor_closure(&v1, &sylow, budgets, opts)?;
    let mut dims_ok = true;
    let mut words = Vec::new();
    for w in &c.classes {
        let m = realize_word(w, &v1, opts)?;
        dims_ok &= m.dim() as i64 == w.char_poly().dim();
        if !meataxe::is_projective(&m, &sylow)? {
            words.push((w, m));
        }
    }
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    'class: for (i, e) in st.registry.iter().enumerate() {
        for (w, m) in &words {
            if m.dim() == e.module.dim() && meataxe::iso_test(m, &e.module, opts)?.is_some() {
                matched.push((i, w.to_string()));
                continue 'class;
            }
        }
        unmatched.push(i);
    }
    Ok(CrossCheck {
        matrix_closed: st.is_closed(),
        matrix_classes: st.registry.len(),
        symbolic_nonprojective: words.len(),
        matched,
        unmatched,
        dims_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steinberg_digits() {
        assert_eq!(steinberg_decompose(7, 3, 2).unwrap(), vec![1, 2]);
        assert_eq!(steinberg_decompose(0, 5, 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(steinberg_decompose(24, 5, 2).unwrap(), vec![4, 4]);
        assert!(steinberg_decompose(25, 5, 2).is_err());
    }

    #[test]
    fn tilting_dims() {
        assert_eq!(CharPoly::weyl(1).dim(), 2);
        assert_eq!(Symbol::T(5).dim(5), 10);
        assert_eq!(Symbol::T(9).dim(5), 10);
        assert!(CharPoly::tilting(13, 3).is_palindromic());
    }

    #[test]
    fn fundamental_examples() {
        assert_eq!(fundamental_tensor(1, 1, 5).unwrap().to_string(), "L(0) ⊕ L(2)");
        assert_eq!(fundamental_tensor(4, 1, 5).unwrap().to_string(), "T(5)");
        assert_eq!(fundamental_tensor(3, 3, 5).unwrap().to_string(), "L(0) ⊕ L(4) ⊕ T(6)");
    }

    #[test]
    fn mu_parity_variant_disagrees_for_odd_lambda() {
        assert!(!fundamental_tensor_mu_parity(3, 2, 5).unwrap().1);
        assert!(!fundamental_tensor_mu_parity(3, 3, 5).unwrap().1);
        assert!(fundamental_tensor_mu_parity(4, 3, 5).unwrap().1);
    }

    #[test]
    fn three_is_two() {
        let r = threeistwo_rewrite(3).unwrap();
        assert_eq!(r.rhs.to_string(), "2·T(3) ⊕ T(5)");
        assert_eq!(r.rhs.dim(), 18);
        assert_eq!(threeistwo_rewrite(5).unwrap().rhs.dim(), 50);
        assert_eq!(one_times_pair(4, 3, 5).unwrap().b, None);
        assert_eq!(one_times_pair(4, 4, 5).unwrap().b, Some(4));
    }

    #[test]
    fn greedy_examples() {
        let c = CharPoly::weyl(1).mul(&CharPoly::weyl(4));
        assert_eq!(tilting_decompose_by_char(&c, 5).unwrap().to_string(), "T(5)");
        let c = CharPoly::weyl(3).mul(&CharPoly::weyl(3));
        assert_eq!(tilting_decompose_by_char(&c, 5).unwrap().to_string(), "L(0) ⊕ L(4) ⊕ T(6)");
        let c = CharPoly::weyl(9);
        assert_eq!(tilting_decompose_by_char(&c, 5).unwrap().to_string(), "L(4)⊗L(1)^σ");
        let bad = CharPoly::weyl(0).sub(&CharPoly::weyl(2));
        assert!(matches!(tilting_decompose_by_char(&bad, 5), Err(Error::NegativeCoefficient(_))));
    }

    #[test]
    fn closure_is_rotation_stable() {
        let c = v1_closure(3, 2, 10_000).unwrap();
        assert!(c.closed);
        let set: BTreeSet<_> = c.saturated.iter().cloned().collect();
        assert!(c.classes.iter().all(|w| set.contains(w)));
        for w in &c.saturated {
            assert!(set.contains(&w.rotate(1)));
        }
        assert!(v1_closure(3, 1, 100).is_err());
    }

    #[test]
    fn word_rendering() {
        let w = TiltingWord::new(5, vec![Symbol::L(2), Symbol::T(5)]).unwrap();
        assert_eq!(w.to_string(), "L(2)⊗T(5)^σ");
        assert_eq!(w.dim(), 30);
    }

    #[test]
    fn sl2_9_crosscheck() {
        let c = v1_closure(3, 2, 1000).unwrap();
        let x = crosscheck(&c, &crate::algtest::Budgets::default(), &Options::default()).unwrap();
        assert!(x.pass(), "{x:?}");
        assert_eq!(x.matrix_classes, 8);
    }
}
