//! Endomorphism rings, indecomposability certificates, direct-sum
//! decomposition, isomorphism testing and projectivity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hom::hom_space;
use super::spin::{composition_flag, module_generators, quotient_action, spin, sub_action};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::group::Elements;
use crate::matrix::{Matrix, SemiEchelon};
use crate::module::ModuleRep;
use crate::poly::{factor_poly_seeded, minpoly, Poly};

/// Seed and trial budgets shared by the randomized routines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Options {
    pub seed: u64,
    pub fitting_trials: usize,
    pub iso_trials: usize,
    pub chop_trials: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            fitting_trials: 64,
            iso_trials: 128,
            chop_trials: 256,
        }
    }
}

impl Options {
    pub fn with_seed(seed: u64) -> Self {
        Options {
            seed,
            ..Default::default()
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Cheap isomorphism invariants. Equal modules have equal fingerprints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    /// socle layer dimensions, bottom first
    pub socle: Vec<usize>,
    /// radical layer dimensions, top first
    pub radical: Vec<usize>,
    /// composition factor dimensions, sorted
    pub factors: Vec<usize>,
    pub end_dim: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct Simple {
    pub dim: usize,
    pub gens: Vec<Matrix>,
}

fn transposed(gens: &[Matrix]) -> Vec<Matrix> {
    gens.iter().map(|g| g.transpose()).collect()
}

/// Composition factors up to isomorphism, with multiplicities.
pub(crate) fn simples_of(
    f: &FieldSpec,
    gens: &[Matrix],
    n: usize,
    opts: &Options,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<(Simple, usize)>, Vec<usize>)> {
    let flag = composition_flag(gens, f, n, rng, opts.chop_trials)?;
    let mut out: Vec<(Simple, usize)> = Vec::new();
    for (d, fac) in flag.dims.iter().zip(flag.factors) {
        let found = out.iter_mut().find(|(s, _)| {
            s.dim == *d && hom_space(f, &s.gens, s.dim, &fac, *d).dim() > 0
        });
        match found {
            Some(entry) => entry.1 += 1,
            None => out.push((Simple { dim: *d, gens: fac }, 1)),
        }
    }
    let mut dims = flag.dims;
    dims.sort_unstable();
    Ok((out, dims))
}

/// Socle: the sum of the images of all maps from simple modules.
pub(crate) fn socle(f: &FieldSpec, gens: &[Matrix], n: usize, simples: &[Simple]) -> SemiEchelon {
    let mut span = SemiEchelon::new(f, n);
    for s in simples {
        for x in hom_space(f, &s.gens, s.dim, gens, n).basis() {
            for r in 0..x.rows() {
                span.insert(&x.row_matrix(r));
                if span.len() == n {
                    return span;
                }
            }
        }
    }
    span
}

pub(crate) fn socle_layers(f: &FieldSpec, gens: &[Matrix], n: usize, simples: &[Simple]) -> Vec<usize> {
    let mut layers = Vec::new();
    let mut cur = gens.to_vec();
    let mut dim = n;
    while dim > 0 {
        let soc = socle(f, &cur, dim, simples);
        let d = soc.len();
        if d == 0 {
            // cannot happen for a complete list of simples
            layers.push(dim);
            break;
        }
        layers.push(d);
        cur = quotient_action(&cur, &soc, dim);
        dim -= d;
    }
    layers
}

/// Radical layers, top first: socle layers of the transposed action.
pub(crate) fn radical_layers(f: &FieldSpec, gens: &[Matrix], n: usize, simples: &[Simple]) -> Vec<usize> {
    let dual: Vec<Simple> = simples
        .iter()
        .map(|s| Simple {
            dim: s.dim,
            gens: transposed(&s.gens),
        })
        .collect();
    socle_layers(f, &transposed(gens), n, &dual)
}

fn fingerprint_raw(
    f: &FieldSpec,
    gens: &[Matrix],
    n: usize,
    opts: &Options,
    rng: &mut ChaCha8Rng,
) -> Result<Fingerprint> {
    let (simples, factors) = simples_of(f, gens, n, opts, rng)?;
    let simples: Vec<Simple> = simples.into_iter().map(|x| x.0).collect();
    Ok(Fingerprint {
        dim: n,
        socle: socle_layers(f, gens, n, &simples),
        radical: radical_layers(f, gens, n, &simples),
        factors,
        end_dim: hom_space(f, gens, n, gens, n).dim(),
    })
}

pub fn fingerprint(m: &ModuleRep, opts: &Options) -> Result<Fingerprint> {
    fingerprint_raw(m.field(), m.action(), m.dim(), opts, &mut opts.rng())
}

/// Composition factors up to isomorphism with multiplicities, smallest first.
pub fn chop(m: &ModuleRep, opts: &Options) -> Result<Vec<(ModuleRep, usize)>> {
    let (simples, _) = simples_of(m.field(), m.action(), m.dim(), opts, &mut opts.rng())?;
    let mut out: Vec<(ModuleRep, usize)> = simples
        .into_iter()
        .map(|(s, k)| (ModuleRep::new_unchecked(m.group(), m.field(), s.dim, s.gens), k))
        .collect();
    out.sort_by_key(|(s, _)| s.dim());
    Ok(out)
}

/// Locality of an endomorphism algebra `E`. In a local ring the radical
/// is exactly the set of non-units, so membership needs no stored basis.
#[derive(Clone, Debug)]
pub(crate) struct Radical {
    /// `E/J(E)` is a field, i.e. the module is indecomposable
    pub local: bool,
}

impl Radical {
    fn scalars() -> Self {
        Radical { local: true }
    }

    /// Membership in `J(E)` for `x` in a local `E`.
    pub fn contains(&self, x: &Matrix) -> bool {
        debug_assert!(self.local);
        !x.is_invertible()
    }
}

/// `J(E)` from a basis of `E`. `E/J(E)` is a field exactly when every
/// `E`-composition factor of the module has dimension `dim E/J(E)`: the
/// simple `E/J`-modules then all coincide and have dimension equal to the
/// whole semisimple quotient, which forces a division algebra.
pub(crate) fn end_radical(
    f: &FieldSpec,
    basis: &[Matrix],
    n: usize,
    opts: &Options,
    rng: &mut ChaCha8Rng,
) -> Result<Radical> {
    if basis.len() <= 1 {
        return Ok(Radical::scalars());
    }
    let flag = composition_flag(basis, f, n, rng, opts.chop_trials)?;
    let u = flag.basis;
    let uinv = u.inverse()?;
    let mut block_of = Vec::with_capacity(n);
    for (b, &d) in flag.dims.iter().enumerate() {
        block_of.extend(std::iter::repeat(b).take(d));
    }
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| block_of[c] >= block_of[r])
        .collect();
    let conj: Vec<Matrix> = basis
        .iter()
        .map(|x| u.mul_unchecked(x).mul_unchecked(&uinv))
        .collect();
    let sys = Matrix::from_fn(f, basis.len(), positions.len(), |i, p| {
        conj[i].get(positions[p].0, positions[p].1)
    });
    let jdim = sys.nullspace().rows();
    let top = basis.len() - jdim;
    let local = flag.dims.iter().all(|&d| d == top);
    Ok(Radical { local })
}

fn random_coeffs(f: &FieldSpec, k: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    (0..k).map(|_| rng.gen_range(0..f.order()) as Elem).collect()
}

fn poly_pow(p: &Poly, e: usize) -> Poly {
    let mut acc = Poly::one(p.field());
    for _ in 0..e {
        acc = acc.mul(p);
    }
    acc
}

fn primary_kernels(x: &Matrix, facs: Vec<(Poly, usize)>) -> Result<Vec<SemiEchelon>> {
    let mut parts = Vec::new();
    for (p, a) in facs {
        let ker = poly_pow(&p, a).eval_matrix(x)?.nullspace();
        parts.push(SemiEchelon::from_rows(&ker));
    }
    Ok(parts)
}

/// What the endomorphism ring says about a module.
enum EndShape {
    /// primary kernels of an endomorphism with several eigen-factors
    Split(Vec<SemiEchelon>),
    Local(Radical),
}

/// Split certificate or locality proof. Cheap path first: when every basis
/// element `b` is `λ_b + (nilpotent)` and the nilpotent parts span a
/// nilpotent space `J` (all long enough products vanish), the algebra they
/// generate is a nilpotent ideal of codimension one, so `E` is local.
/// Otherwise random Fitting splits, then the composition-series test.
fn analyse_end(
    f: &FieldSpec,
    gens: &[Matrix],
    n: usize,
    opts: &Options,
    rng: &mut ChaCha8Rng,
) -> Result<EndShape> {
    let e = hom_space(f, gens, n, gens, n);
    if e.dim() <= 1 {
        return Ok(EndShape::Local(Radical::scalars()));
    }
    let basis = e.basis();
    let mut nil: Vec<Matrix> = Vec::new();
    let mut all_linear = true;
    for b in &basis {
        let mp = minpoly(b)?;
        let facs = factor_poly_seeded(&mp, rng.gen())?;
        if facs.len() >= 2 {
            return Ok(EndShape::Split(primary_kernels(b, facs)?));
        }
        let p = &facs[0].0;
        if p.degree() != Some(1) {
            all_linear = false;
            break;
        }
        let lambda = f.neg(p.coeffs()[0]);
        let mut x = b.clone();
        x.axpy(f.neg(lambda), &Matrix::identity(f, n));
        if !x.is_zero() {
            nil.push(x);
        }
    }
    if all_linear && products_vanish(f, &nil, n) {
        return Ok(EndShape::Local(Radical { local: true }));
    }
    for _ in 0..opts.fitting_trials {
        let x = e.element(&random_coeffs(f, e.dim(), rng));
        let mp = minpoly(&x)?;
        let facs = factor_poly_seeded(&mp, rng.gen())?;
        if facs.len() >= 2 {
            return Ok(EndShape::Split(primary_kernels(&x, facs)?));
        }
    }
    let rad = end_radical(f, &basis, n, opts, rng)?;
    if !rad.local {
        return Err(Error::CertificationFailed(opts.fitting_trials));
    }
    Ok(EndShape::Local(rad))
}

/// `V J J … J = 0` for the span `J` of `xs`: the descending chain
/// `V_{i+1} = V_i J` reaches zero.
fn products_vanish(f: &FieldSpec, xs: &[Matrix], n: usize) -> bool {
    let mut cur = SemiEchelon::new(f, n);
    for x in xs {
        for r in 0..n {
            cur.insert(&x.row_matrix(r));
        }
    }
    for _ in 0..=n {
        if cur.is_empty() {
            return true;
        }
        let mut next = SemiEchelon::new(f, n);
        for r in 0..cur.len() {
            let v = cur.basis().row_matrix(r);
            for x in xs {
                next.insert(&v.mul_unchecked(x));
            }
        }
        if next.len() >= cur.len() {
            return false;
        }
        cur = next;
    }
    cur.is_empty()
}

/// One summand class of a decomposition.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModuleRep,
    pub multiplicity: usize,
    pub fingerprint: Fingerprint,
    /// a basis (rows, in the coordinates of the decomposed module) of each copy
    pub bases: Vec<Matrix>,
    /// split off as a free module over the supplied p-group
    pub free: bool,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// pairwise non-isomorphic classes, sorted by `(dim, fingerprint)`
    pub summands: Vec<Summand>,
    /// isomorphism tests that ran out of budget (classes kept apart)
    pub events: Vec<String>,
}

impl Decomposition {
    pub fn total_dim(&self) -> usize {
        self.summands
            .iter()
            .map(|s| s.module.dim() * s.multiplicity)
            .sum()
    }

    pub fn count(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    /// `(dim, multiplicity)` pairs.
    pub fn shape(&self) -> Vec<(usize, usize)> {
        self.summands
            .iter()
            .map(|s| (s.module.dim(), s.multiplicity))
            .collect()
    }
}

struct Piece {
    gens: Vec<Matrix>,
    basis: Matrix,
    radical: Option<Radical>,
    free: bool,
}

/// Free summands over a p-group `P` acting on `m` (its generators given by
/// the subgroup words of `elems`, which must generate the whole acting group).
#[derive(Clone, Debug)]
pub struct FreeSplit {
    pub rank: usize,
    /// basis of each free rank-one summand
    pub free: Vec<Matrix>,
    /// basis of an invariant complement of their sum
    pub complement: Matrix,
}

fn check_pgroup(f: &FieldSpec, elems: &Elements) -> Result<()> {
    let mut n = elems.len();
    let p = f.p() as usize;
    while n % p == 0 {
        n /= p;
    }
    if n != 1 {
        return Err(Error::NotPGroup(elems.len()));
    }
    Ok(())
}

fn sub_gens(m: &ModuleRep, elems: &Elements) -> Result<Vec<Matrix>> {
    elems.generators.iter().map(|w| m.eval(w)).collect()
}

/// `seeds * N` for the norm element `N` (sum over all enumerated elements).
fn norm_rows(gens: &[Matrix], elems: &Elements, seeds: &Matrix) -> Matrix {
    let mut vals: Vec<Matrix> = Vec::with_capacity(elems.len());
    let mut acc = seeds.clone();
    vals.push(seeds.clone());
    for i in 1..elems.len() {
        let (p, j) = elems.tree[i].expect("non-root element has a parent");
        let v = vals[p].mul_unchecked(&gens[j]);
        acc.axpy(1, &v);
        vals.push(v);
    }
    acc
}

/// Norm criterion: `m` is projective over `P` iff the norm element has rank
/// `dim(m)/|P|`. The norm kills the radical, so its image is spanned by the
/// images of a generating set.
pub fn is_projective(m: &ModuleRep, elems: &Elements) -> Result<bool> {
    check_pgroup(m.field(), elems)?;
    if m.dim() % elems.len() != 0 {
        return Ok(false);
    }
    let gens = sub_gens(m, elems)?;
    let seeds = module_generators(&gens, m.field(), m.dim());
    Ok(norm_rows(&gens, elems, &seeds).rank() == m.dim() / elems.len())
}

pub fn strip_free(m: &ModuleRep, elems: &Elements) -> Result<FreeSplit> {
    check_pgroup(m.field(), elems)?;
    let f = m.field();
    let n = m.dim();
    let order = elems.len();
    let gens = sub_gens(m, elems)?;
    let seeds = module_generators(&gens, f, n);
    let w = norm_rows(&gens, elems, &seeds);
    let mut se = SemiEchelon::new(f, n);
    let sel: Vec<usize> = (0..w.rows()).filter(|&i| se.insert(&w.row_matrix(i))).collect();
    if sel.is_empty() {
        return Ok(FreeSplit {
            rank: 0,
            free: vec![],
            complement: Matrix::identity(f, n),
        });
    }
    let mut free = Vec::new();
    let mut all = Matrix::zero(f, 0, n);
    for &i in &sel {
        let s = spin(&gens, &seeds.row_matrix(i));
        debug_assert_eq!(s.len(), order);
        all.push_rows(s.basis());
        free.push(s.basis().clone());
    }
    // dual generators pairing with the norm images to the identity
    let wsel = w.select_rows(&sel);
    let (_, piv) = wsel.echelon();
    let tinv = wsel.select_cols(&piv).inverse()?;
    let r = sel.len();
    let mut u = Matrix::zero(f, r, n);
    for j in 0..r {
        for (l, &c) in piv.iter().enumerate() {
            u.set(j, c, tinv.get(l, j));
        }
    }
    let dual: Vec<Matrix> = gens
        .iter()
        .map(|g| g.inverse().map(|x| x.transpose()))
        .collect::<Result<_>>()?;
    let fp = spin(&dual, &u);
    let complement = fp.basis().transpose().nullspace();
    if fp.len() != r * order || all.vstack(&complement)?.rank() != n {
        return Err(Error::CertificationFailed(0));
    }
    Ok(FreeSplit {
        rank: r,
        free,
        complement,
    })
}

fn certify(f: &FieldSpec, gens: &[Matrix], n: usize, opts: &Options, rng: &mut ChaCha8Rng) -> Result<Radical> {
    match analyse_end(f, gens, n, opts, rng) {
        Ok(EndShape::Local(r)) => Ok(r),
        Ok(EndShape::Split(_)) => Ok(Radical { local: false }),
        Err(e) => Err(e),
    }
}

/// Search for an invertible map between two modules of equal dimension.
/// `rad` is the radical of `End(a)` when `a` is known to be indecomposable;
/// it turns an unsuccessful search into a proof of non-isomorphism.
fn iso_core(
    f: &FieldSpec,
    a: &[Matrix],
    b: &[Matrix],
    n: usize,
    rad: Option<&Radical>,
    opts: &Options,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Matrix>> {
    let h = hom_space(f, a, n, b, n);
    if h.dim() == 0 {
        return Ok(None);
    }
    let basis = h.basis();
    if let Some(x) = basis.iter().find(|x| x.is_invertible()) {
        return Ok(Some(x.clone()));
    }
    if h.dim() > 1 {
        for _ in 0..opts.iso_trials {
            let x = h.element(&random_coeffs(f, h.dim(), rng));
            if x.is_invertible() {
                return Ok(Some(x));
            }
        }
    }
    let Some(rad) = rad.filter(|r| r.local) else {
        return Err(Error::Unknown);
    };
    // End(a) is local: a ≅ b iff some composite a -> b -> a is a unit
    let back = hom_space(f, b, n, a, n).basis();
    for x in &basis {
        for y in &back {
            if !rad.contains(&x.mul_unchecked(y)) {
                return Ok(Some(x.clone()));
            }
        }
    }
    Ok(None)
}

/// An invertible intertwiner `X` with `m.action[g] * X = X * n.action[g]`,
/// or `None` when the modules are not isomorphic.
pub fn iso_test(m: &ModuleRep, n: &ModuleRep, opts: &Options) -> Result<Option<Matrix>> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    if m.ngens() != n.ngens() {
        return Err(Error::GroupMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Matrix::zero(m.field(), 0, 0)));
    }
    let mut rng = opts.rng();
    let f = m.field();
    let fm = fingerprint_raw(f, m.action(), m.dim(), opts, &mut rng)?;
    let fnn = fingerprint_raw(f, n.action(), n.dim(), opts, &mut rng)?;
    if fm != fnn {
        return Ok(None);
    }
    find_isomorphism_with(m, n, opts, &mut rng)
}

/// [`iso_test`] without the fingerprint prefilter, for callers that have
/// already compared fingerprints.
pub fn find_isomorphism(m: &ModuleRep, n: &ModuleRep, opts: &Options) -> Result<Option<Matrix>> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    if m.ngens() != n.ngens() {
        return Err(Error::GroupMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Matrix::zero(m.field(), 0, 0)));
    }
    find_isomorphism_with(m, n, opts, &mut opts.rng())
}

fn find_isomorphism_with(m: &ModuleRep, n: &ModuleRep, opts: &Options, rng: &mut ChaCha8Rng) -> Result<Option<Matrix>> {
    let f = m.field();
    match iso_core(f, m.action(), n.action(), m.dim(), None, opts, rng) {
        Err(Error::Unknown) => {
            let rad = certify(f, m.action(), m.dim(), opts, rng)?;
            iso_core(f, m.action(), n.action(), m.dim(), Some(&rad), opts, rng)
        }
        other => other,
    }
}

/// Whether `m` is indecomposable, certified through `End(m)/J(End(m))`.
pub fn is_indecomposable(m: &ModuleRep, opts: &Options) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let mut rng = opts.rng();
    Ok(certify(m.field(), m.action(), m.dim(), opts, &mut rng)?.local)
}

pub fn decompose(m: &ModuleRep, opts: &Options) -> Result<Decomposition> {
    decompose_with(m, opts, None)
}

/// Decomposition into certified indecomposable summands. With `pgroup`
/// (the acting p-group, enumerated) free summands are split off first by
/// the norm construction, which keeps endomorphism rings small.
pub fn decompose_with(m: &ModuleRep, opts: &Options, pgroup: Option<&Elements>) -> Result<Decomposition> {
    let f = m.field();
    let mut rng = opts.rng();
    let mut work: Vec<(Vec<Matrix>, Matrix)> = Vec::new();
    let mut done: Vec<Piece> = Vec::new();
    let mut start = (m.action().to_vec(), Matrix::identity(f, m.dim()));
    if let Some(el) = pgroup {
        let fs = strip_free(m, el)?;
        for b in fs.free {
            let se = SemiEchelon::from_rows(&b);
            done.push(Piece {
                gens: sub_action(m.action(), &se),
                basis: se.basis().clone(),
                radical: None,
                free: true,
            });
        }
        let se = SemiEchelon::from_rows(&fs.complement);
        start = (sub_action(m.action(), &se), se.basis().clone());
    }
    work.push(start);
    while let Some((gens, basis)) = work.pop() {
        let d = basis.rows();
        if d == 0 {
            continue;
        }
        match analyse_end(f, &gens, d, opts, &mut rng)? {
            EndShape::Split(parts) => {
                for sub in parts {
                    let sg = sub_action(&gens, &sub);
                    let sb = sub.basis().mul_unchecked(&basis);
                    work.push((sg, sb));
                }
            }
            EndShape::Local(rad) => {
                done.push(Piece {
                    gens,
                    basis,
                    radical: Some(rad),
                    free: false,
                });
            }
        }
    }
    // group into isomorphism classes
    let mut keyed: Vec<(Fingerprint, Piece)> = Vec::new();
    let mut free_fp: Option<Fingerprint> = None;
    for p in done {
        let fp = if p.free {
            match &free_fp {
                Some(fp) => fp.clone(),
                None => {
                    let fp = fingerprint_raw(f, &p.gens, p.basis.rows(), opts, &mut rng)?;
                    free_fp = Some(fp.clone());
                    fp
                }
            }
        } else {
            fingerprint_raw(f, &p.gens, p.basis.rows(), opts, &mut rng)?
        };
        keyed.push((fp, p));
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.free.cmp(&a.1.free)));
    let mut classes: Vec<(Fingerprint, Piece, Vec<Matrix>)> = Vec::new();
    let mut events = Vec::new();
    for (fp, p) in keyed {
        let mut home = None;
        for (ci, (cfp, rep, _)) in classes.iter().enumerate() {
            if *cfp != fp {
                continue;
            }
            if rep.free && p.free {
                home = Some(ci);
                break;
            }
            let rad = rep.radical.as_ref().or(p.radical.as_ref());
            let (a, b) = if rep.radical.is_some() || p.radical.is_none() {
                (&rep.gens, &p.gens)
            } else {
                (&p.gens, &rep.gens)
            };
            match iso_core(f, a, b, fp.dim, rad, opts, &mut rng) {
                Ok(Some(_)) => {
                    home = Some(ci);
                    break;
                }
                Ok(None) => {}
                Err(Error::Unknown) => events.push(format!(
                    "iso test inconclusive between summands of dimension {}",
                    fp.dim
                )),
                Err(e) => return Err(e),
            }
        }
        match home {
            Some(ci) => classes[ci].2.push(p.basis.clone()),
            None => {
                let b = p.basis.clone();
                classes.push((fp, p, vec![b]));
            }
        }
    }
    let summands = classes
        .into_iter()
        .map(|(fp, rep, bases)| Summand {
            module: ModuleRep::new_unchecked(m.group(), f, fp.dim, rep.gens),
            multiplicity: bases.len(),
            fingerprint: fp,
            bases,
            free: rep.free,
        })
        .collect();
    Ok(Decomposition { summands, events })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{perm_from_cycles, GroupSpec, SubgroupSpec};

    fn perm_group(name: &str, degree: usize, cycles: &[&str]) -> crate::group::Group {
        GroupSpec::from_perms(
            name,
            degree,
            cycles.iter().map(|c| perm_from_cycles(degree, c).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn regular_cyclic_chops_to_trivials() {
        let g = perm_group("C3", 3, &["(1,2,3)"]);
        let m = ModuleRep::perm_module(&g, &FieldSpec::prime(3).unwrap()).unwrap();
        let c = chop(&m, &Options::default()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].0.dim(), c[0].1), (1, 3));
    }

    #[test]
    fn regular_v4_is_local() {
        let g = perm_group("V4", 4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let m = ModuleRep::perm_module(&g, &FieldSpec::prime(2).unwrap()).unwrap();
        let d = decompose(&m, &Options::default()).unwrap();
        assert_eq!(d.shape(), vec![(4, 1)]);
        let fp = &d.summands[0].fingerprint;
        assert_eq!(fp.radical, vec![1, 2, 1]);
        assert_eq!(fp.end_dim, 4);
        let el = g.enumerate(&SubgroupSpec::all_generators(2), 100).unwrap();
        assert!(is_projective(&m, &el).unwrap());
    }

    #[test]
    fn semisimple_permutation_module() {
        // S3 on 3 points over GF(2): k + 2-dim simple
        let g = perm_group("S3", 3, &["(1,2)", "(1,2,3)"]);
        let m = ModuleRep::perm_module(&g, &FieldSpec::prime(2).unwrap()).unwrap();
        let d = decompose(&m, &Options::default()).unwrap();
        assert_eq!(d.shape(), vec![(1, 1), (2, 1)]);
        assert_eq!(d.total_dim(), 3);
    }

    #[test]
    fn free_summands_split_off() {
        let g = perm_group("C3", 3, &["(1,2,3)"]);
        let f = FieldSpec::prime(3).unwrap();
        let reg = ModuleRep::perm_module(&g, &f).unwrap();
        let k = ModuleRep::trivial(&g, &f, 1);
        let m = reg.direct_sum(&k).unwrap().direct_sum(&reg).unwrap();
        let el = g.enumerate(&SubgroupSpec::all_generators(1), 10).unwrap();
        let fs = strip_free(&m, &el).unwrap();
        assert_eq!(fs.rank, 2);
        assert_eq!(fs.complement.rows(), 1);
        let d = decompose_with(&m, &Options::default(), Some(&el)).unwrap();
        assert_eq!(d.shape(), vec![(1, 1), (3, 2)]);
        assert!(d.summands[1].free);
        let plain = decompose(&m, &Options::default()).unwrap();
        assert_eq!(plain.shape(), d.shape());
    }

    #[test]
    fn iso_test_reflexive_and_distinguishing() {
        let g = perm_group("C3", 3, &["(1,2,3)"]);
        let f = FieldSpec::prime(3).unwrap();
        let j = Matrix::from_rows(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let m = ModuleRep::new(&g, &f, vec![j]).unwrap();
        let x = iso_test(&m, &m, &Options::default()).unwrap().unwrap();
        assert!(x.is_invertible());
        let k2 = ModuleRep::trivial(&g, &f, 2);
        assert!(iso_test(&m, &k2, &Options::default()).unwrap().is_none());
    }
}
