//! Radical and socle series, regular modules, Jennings bases, projective
//! covers, Heller syzygies and the heart of the regular module.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::group::{Elements, Group, SubgroupSpec};
use crate::matrix::{Matrix, SemiEchelon};
use crate::meataxe::spin::{complement_rows, quotient_action, sub_action};
use crate::meataxe::{self, hom_space, is_projective, strip_free, Options, Simple};
use crate::module::{restricted_group, ModuleRep};

/// Default enumeration cap for groups handled element by element.
pub const ORDER_CAP: usize = 2000;

/// Terms `rad^0 = M ⊇ rad^1 ⊇ ...` (or the socle terms, bottom up) as row
/// bases in the module's coordinates, with the layer dimensions.
#[derive(Clone, Debug)]
pub struct Series {
    pub terms: Vec<Matrix>,
    pub layers: Vec<usize>,
}

fn identity_minus(g: &Matrix) -> Matrix {
    let id = Matrix::identity(g.field(), g.rows());
    g.sub(&id).expect("square")
}

fn simples(m: &ModuleRep, opts: &Options) -> Result<Vec<Simple>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    Ok(meataxe::simples_of(m.field(), m.action(), m.dim(), opts, &mut rng)?
        .0
        .into_iter()
        .map(|x| x.0)
        .collect())
}

/// Socle series terms (ambient bases), bottom first, for any action.
fn socle_terms(f: &FieldSpec, gens: &[Matrix], n: usize, simples: &[Simple]) -> Vec<Matrix> {
    let mut terms = vec![Matrix::zero(f, 0, n)];
    let mut acc = SemiEchelon::new(f, n);
    let mut cur = gens.to_vec();
    let mut lift = Matrix::identity(f, n);
    while acc.len() < n {
        let dim = cur.first().map_or(n - acc.len(), |g| g.rows());
        let soc = meataxe::socle(f, &cur, dim, simples);
        if soc.is_empty() {
            break;
        }
        for r in 0..soc.len() {
            acc.insert(&soc.basis().row_matrix(r).mul_unchecked(&lift));
        }
        terms.push(acc.basis().clone());
        let comp = complement_rows(&soc, dim);
        cur = quotient_action(&cur, &soc, dim);
        lift = comp.mul_unchecked(&lift);
    }
    terms
}

fn layers_of(terms: &[Matrix]) -> Vec<usize> {
    terms.windows(2).map(|w| w[0].rows().abs_diff(w[1].rows())).collect()
}

/// Socle series `0 ⊂ soc ⊂ soc^2 ⊂ ... ⊂ M`.
pub fn socle_series(m: &ModuleRep, opts: &Options) -> Result<Series> {
    let s = simples(m, opts)?;
    let terms = socle_terms(m.field(), m.action(), m.dim(), &s);
    let layers = layers_of(&terms);
    Ok(Series { terms, layers })
}

/// Radical series `M ⊇ rad M ⊇ rad^2 M ⊇ ... ⊇ 0`. For p-groups the
/// radical is `Σ_g image(g - 1)`; otherwise `rad^i M` is the annihilator of
/// the `i`-th socle term of the dual action.
pub fn radical_series(m: &ModuleRep, pgroup: bool, opts: &Options) -> Result<Series> {
    let f = m.field();
    let n = m.dim();
    let mut terms = vec![Matrix::identity(f, n)];
    if pgroup {
        let nil: Vec<Matrix> = m.action().iter().map(identity_minus).collect();
        loop {
            let cur = terms.last().unwrap();
            if cur.rows() == 0 {
                break;
            }
            let mut span = SemiEchelon::new(f, n);
            for x in &nil {
                let img = cur.mul_unchecked(x);
                for r in 0..img.rows() {
                    span.insert(&img.row_matrix(r));
                }
            }
            if span.len() == cur.rows() {
                return Err(Error::NotPGroup(0));
            }
            terms.push(span.basis().clone());
        }
    } else {
        let s = simples(m, opts)?;
        let dual: Vec<Simple> = s
            .iter()
            .map(|x| Simple {
                dim: x.dim,
                gens: x.gens.iter().map(|g| g.transpose()).collect(),
            })
            .collect();
        let gt: Vec<Matrix> = m.action().iter().map(|g| g.transpose()).collect();
        let soc = socle_terms(f, &gt, n, &dual);
        terms = soc
            .iter()
            .map(|t| {
                if t.rows() == 0 {
                    Matrix::identity(f, n)
                } else {
                    t.transpose().nullspace()
                }
            })
            .collect();
    }
    let layers = layers_of(&terms);
    Ok(Series { terms, layers })
}

/// The right regular module of the subgroup `sub` of `group`: basis the
/// enumerated elements, generator `j` acting by `e_x -> e_{x g_j}`.
/// Element order is that of [`Elements`].
pub fn regular_module(group: &Group, sub: &SubgroupSpec, field: &FieldSpec, cap: usize) -> Result<(ModuleRep, Elements)> {
    let el = group.enumerate(sub, cap)?;
    let h = restricted_group(group, sub)?;
    let n = el.len();
    let action = (0..sub.words.len())
        .map(|j| Matrix::from_fn(field, n, n, |x, y| (el.mult[x][j] == y) as Elem))
        .collect();
    Ok((ModuleRep::new(&h, field, action)?, el))
}

/// Dimension subgroups, weighted generators and the monomial basis of `kP`.
#[derive(Clone, Debug)]
pub struct JenningsBasis {
    pub p: u32,
    /// `delta[i]` lists the elements of `Δ_{i+1}`, ending with the trivial group
    pub delta: Vec<Vec<usize>>,
    /// `(element, weight)` for the chosen generators `x_{i,j}`
    pub reps: Vec<(usize, usize)>,
    /// exponent vectors (one entry per rep, each `< p`) with their weights,
    /// sorted by `(weight, exponents)`
    pub monomials: Vec<(Vec<u32>, usize)>,
    /// row `r`: monomial `r` as a vector of `kP` in the element basis
    pub vectors: Matrix,
}

impl JenningsBasis {
    /// Number of monomials of each weight `0, 1, ..., max`.
    pub fn layer_dims(&self) -> Vec<usize> {
        let max = self.monomials.last().map_or(0, |m| m.1);
        let mut out = vec![0; max + 1];
        for (_, w) in &self.monomials {
            out[*w] += 1;
        }
        out
    }

    /// Rows of `vectors` spanning `rad^w(kP)`: monomials of weight `>= w`.
    pub fn rad_power(&self, w: usize) -> Matrix {
        let idx: Vec<usize> = (0..self.monomials.len())
            .filter(|&r| self.monomials[r].1 >= w)
            .collect();
        self.vectors.select_rows(&idx)
    }
}

fn generated(el: &Elements, gens: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; el.len()];
    inside[0] = true;
    let mut list = vec![0];
    let mut head = 0;
    while head < list.len() {
        let x = list[head];
        for &g in gens {
            let y = el.mul(x, g);
            if !inside[y] {
                inside[y] = true;
                list.push(y);
            }
        }
        head += 1;
    }
    list.sort_unstable();
    list
}

fn pow_elem(el: &Elements, x: usize, e: u32) -> usize {
    (0..e).fold(0, |acc, _| el.mul(acc, x))
}

/// Jennings basis of `kP` for the p-group enumerated in `el`.
pub fn jennings(el: &Elements, field: &FieldSpec) -> Result<JenningsBasis> {
    let p = field.p();
    let n = el.len();
    {
        let mut k = n;
        while k % p as usize == 0 {
            k /= p as usize;
        }
        if k != 1 {
            return Err(Error::NotPGroup(n));
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let mut delta: Vec<Vec<usize>> = vec![all.clone()];
    let right: Vec<Vec<usize>> = (0..n).map(|y| el.right_mult(y)).collect();
    let mul = |x: usize, y: usize| right[y][x];
    let inv: Vec<usize> = (0..n).map(|x| el.inverse(x)).collect();
    while delta.last().unwrap().len() > 1 {
        let i = delta.len() + 1; // computing Δ_i
        let prev = &delta[i - 2];
        let mut gens: Vec<usize> = Vec::new();
        let mut seen = vec![false; n];
        for &x in &all {
            for &y in prev {
                // [x, y] = x^-1 y^-1 x y
                let c = mul(mul(mul(inv[x], inv[y]), x), y);
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        let src = &delta[i.div_ceil(p as usize) - 1];
        for &x in src {
            let c = pow_elem(el, x, p);
            if !seen[c] {
                seen[c] = true;
                gens.push(c);
            }
        }
        gens.retain(|&g| g != 0);
        let next = generated(el, &gens);
        delta.push(next);
    }
    // weighted generators: a basis of each Δ_i / Δ_{i+1}
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for i in 0..delta.len() - 1 {
        let lower = &delta[i + 1];
        let mut chosen: Vec<usize> = lower.clone();
        let mut cur = generated(el, &chosen);
        for &x in &delta[i] {
            if cur.len() == delta[i].len() {
                break;
            }
            if cur.binary_search(&x).is_err() {
                chosen.push(x);
                reps.push((x, i + 1));
                cur = generated(el, &chosen);
            }
        }
    }
    // all exponent vectors, sorted by (weight, exponents)
    let r = reps.len();
    let mut monomials: Vec<(Vec<u32>, usize)> = Vec::new();
    let mut alpha = vec![0u32; r];
    loop {
        let w = alpha.iter().zip(&reps).map(|(a, (_, wt))| *a as usize * wt).sum();
        monomials.push((alpha.clone(), w));
        let mut k = 0;
        while k < r {
            alpha[k] += 1;
            if alpha[k] < p {
                break;
            }
            alpha[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
    }
    monomials.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    if monomials.len() != n {
        return Err(Error::NotPGroup(n));
    }
    let mut vectors = Matrix::zero(field, n, n);
    for (row, (alpha, _)) in monomials.iter().enumerate() {
        let mut v = vec![0 as Elem; n];
        v[0] = 1;
        for (k, &a) in alpha.iter().enumerate() {
            let x = reps[k].0;
            for _ in 0..a {
                // v * (x - 1)
                let mut w = vec![0 as Elem; n];
                for (y, &c) in v.iter().enumerate() {
                    if c != 0 {
                        let yx = right[x][y];
                        w[yx] = field.add(w[yx], c);
                        w[y] = field.sub(w[y], c);
                    }
                }
                v = w;
            }
        }
        for (c, &x) in v.iter().enumerate() {
            vectors.set(row, c, x);
        }
    }
    Ok(JenningsBasis {
        p,
        delta,
        reps,
        monomials,
        vectors,
    })
}

/// `kP` rewritten in the Jennings monomial basis.
fn regular_in_monomials(reg: &ModuleRep, jb: &JenningsBasis) -> Result<ModuleRep> {
    reg.change_basis(&jb.vectors)
}

/// `M_i = kP / rad^i(kP)`, with basis the monomials of weight `< i`.
pub fn quotient_mod_radpower(group: &Group, sub: &SubgroupSpec, field: &FieldSpec, i: usize) -> Result<ModuleRep> {
    let (reg, el) = regular_module(group, sub, field, ORDER_CAP)?;
    let jb = jennings(&el, field)?;
    let max = jb.monomials.last().map_or(0, |m| m.1) + 1;
    if i == 0 || i > max {
        return Err(Error::LevelOutOfRange { level: i, max });
    }
    let mono = regular_in_monomials(&reg, &jb)?;
    let keep = jb.monomials.iter().filter(|m| m.1 < i).count();
    let idx: Vec<usize> = (0..keep).collect();
    let action = mono
        .action()
        .iter()
        .map(|g| g.select_rows(&idx).select_cols(&idx))
        .collect();
    ModuleRep::new(mono.group(), field, action)
}

/// `rad(kP)/soc(kP)`.
pub fn heart(group: &Group, sub: &SubgroupSpec, field: &FieldSpec) -> Result<ModuleRep> {
    let (reg, el) = regular_module(group, sub, field, ORDER_CAP)?;
    let jb = jennings(&el, field)?;
    let mono = regular_in_monomials(&reg, &jb)?;
    let n = reg.dim();
    if n < 2 {
        return Ok(ModuleRep::zero(mono.group(), field));
    }
    let idx: Vec<usize> = (1..n - 1).collect();
    let action = mono
        .action()
        .iter()
        .map(|g| g.select_rows(&idx).select_cols(&idx))
        .collect();
    ModuleRep::new(mono.group(), field, action)
}

/// Projective indecomposables, supplied by the caller.
#[derive(Clone, Debug)]
pub enum Pims {
    /// The acting group is the enumerated p-group: the only PIM is `kP`.
    PGroup(Elements),
    /// `(simple, projective cover of simple)` pairs, plus an enumerated
    /// Sylow subgroup for stripping projective summands.
    General { pairs: Vec<(ModuleRep, ModuleRep)>, sylow: Elements },
}

fn check_acting(m: &ModuleRep, el: &Elements) -> Result<()> {
    if el.generators != SubgroupSpec::all_generators(m.ngens()).words {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

/// Unit vectors completing a basis of `radical` to the whole space.
fn top_basis(radical: &Matrix, n: usize, f: &FieldSpec) -> Matrix {
    let mut se = SemiEchelon::from_rows(radical);
    let mut out = Matrix::zero(f, 0, n);
    for i in 0..n {
        let e = Matrix::unit_vector(f, n, i);
        if se.insert(&e) {
            out.push_rows(&e);
        }
    }
    out
}

/// Projective cover `P ->> M`: returns the cover and the surjection as a
/// `dim P x dim M` matrix (a module homomorphism).
pub fn projective_cover(m: &ModuleRep, pims: &Pims, opts: &Options) -> Result<(ModuleRep, Matrix)> {
    let f = m.field();
    let n = m.dim();
    match pims {
        Pims::PGroup(el) => {
            check_acting(m, el)?;
            let rad = radical_series(m, true, opts)?;
            let rad1 = rad.terms.get(1).cloned().unwrap_or_else(|| Matrix::zero(f, 0, n));
            let top = top_basis(&rad1, n, f);
            let gens: Vec<Matrix> = el.generators.iter().map(|w| m.eval(w)).collect::<Result<_>>()?;
            let order = el.len();
            // e_x -> v * x for each top vector v
            let mut surj = Matrix::zero(f, 0, n);
            for t in 0..top.rows() {
                let mut vals: Vec<Matrix> = Vec::with_capacity(order);
                vals.push(top.row_matrix(t));
                for i in 1..order {
                    let (p, j) = el.tree[i].unwrap();
                    let v = vals[p].mul_unchecked(&gens[j]);
                    vals.push(v);
                }
                for v in &vals {
                    surj.push_rows(v);
                }
            }
            let h = m.group().clone();
            let reg_action: Vec<Matrix> = (0..el.generators.len())
                .map(|j| Matrix::from_fn(f, order, order, |x, y| (el.mult[x][j] == y) as Elem))
                .collect();
            let reg = ModuleRep::new(&h, f, reg_action)?;
            let cover = reg.power_sum(top.rows());
            Ok((cover, surj))
        }
        Pims::General { pairs, .. } => {
            let rad = radical_series(m, false, opts)?;
            let rad1 = rad.terms.get(1).cloned().unwrap_or_else(|| Matrix::zero(f, 0, n));
            let se = SemiEchelon::from_rows(&rad1);
            let top_gens = quotient_action(m.action(), &se, n);
            let cols: Vec<usize> = {
                let comp = complement_rows(&se, n);
                (0..comp.rows()).map(|j| comp.leading_col(j).unwrap()).collect()
            };
            let t = cols.len();
            // quotient map M -> M/rad M
            let mut qmap = Matrix::zero(f, n, t);
            for i in 0..n {
                let mut v = Matrix::unit_vector(f, n, i);
                se.reduce(&mut v);
                for (j, &c) in cols.iter().enumerate() {
                    qmap.set(i, j, v.get(0, c));
                }
            }
            let mut cover = ModuleRep::zero(m.group(), f);
            let mut surj = Matrix::zero(f, 0, n);
            // maps from each simple into the (semisimple) top, one per copy
            let mut covered = SemiEchelon::new(f, t);
            for (s, pim) in pairs {
                if s.ngens() != m.ngens() {
                    return Err(Error::GroupMismatch);
                }
                let into_top = hom_space(f, s.action(), s.dim(), &top_gens, t).basis();
                let pi = hom_space(f, pim.action(), pim.dim(), s.action(), s.dim()).basis();
                let Some(pi) = pi.into_iter().find(|x| x.rank() == s.dim()) else {
                    return Err(Error::MissingPim);
                };
                let to_m = hom_space(f, pim.action(), pim.dim(), m.action(), n).basis();
                let to_top: Vec<Matrix> = to_m.iter().map(|x| x.mul_unchecked(&qmap)).collect();
                for phi in into_top {
                    let img = phi.row_space();
                    let before = covered.len();
                    let mut grows = false;
                    for r in 0..img.rows() {
                        if !covered.contains(&img.row_matrix(r)) {
                            grows = true;
                        }
                    }
                    if !grows {
                        continue;
                    }
                    // lift pi * phi through the quotient map
                    let target = pi.mul_unchecked(&phi);
                    let flat = |x: &Matrix| Matrix::from_fn(f, 1, x.rows() * x.cols(), |_, k| x.get(k / x.cols(), k % x.cols()));
                    let mut sys = Matrix::zero(f, 0, target.rows() * target.cols());
                    for x in &to_top {
                        sys.push_rows(&flat(x));
                    }
                    let Some(c) = sys.solve_left(&flat(&target)) else {
                        return Err(Error::MissingPim);
                    };
                    let mut lift = Matrix::zero(f, pim.dim(), n);
                    for (k, x) in to_m.iter().enumerate() {
                        lift.axpy(c.get(0, k), x);
                    }
                    for r in 0..img.rows() {
                        covered.insert(&img.row_matrix(r));
                    }
                    debug_assert!(covered.len() > before);
                    cover = cover.direct_sum(pim)?;
                    surj.push_rows(&lift);
                }
            }
            if covered.len() != t {
                return Err(Error::MissingPim);
            }
            Ok((cover, surj))
        }
    }
}

/// Heller shift result.
#[derive(Clone, Debug)]
pub struct SyzygyResult {
    pub module: ModuleRep,
    pub projective_multiplicity_removed: usize,
}

/// Removes projective summands.
fn strip_projectives(m: &ModuleRep, pims: &Pims, opts: &Options) -> Result<SyzygyResult> {
    if m.dim() == 0 {
        return Ok(SyzygyResult {
            module: m.clone(),
            projective_multiplicity_removed: 0,
        });
    }
    match pims {
        Pims::PGroup(el) => {
            let fs = strip_free(m, el)?;
            let module = if fs.rank == 0 {
                m.clone()
            } else {
                m.submodule(&SemiEchelon::from_rows(&fs.complement).basis().clone())?
            };
            Ok(SyzygyResult {
                module,
                projective_multiplicity_removed: fs.rank,
            })
        }
        Pims::General { sylow, .. } => {
            let d = meataxe::decompose(m, opts)?;
            let mut keep = Matrix::zero(m.field(), 0, m.dim());
            let mut removed = 0;
            for s in &d.summands {
                if is_projective(&s.module, sylow)? {
                    removed += s.multiplicity;
                } else {
                    for b in &s.bases {
                        keep.push_rows(b);
                    }
                }
            }
            let se = SemiEchelon::from_rows(&keep);
            let module = if removed == 0 {
                m.clone()
            } else {
                let gens = sub_action(m.action(), &se);
                ModuleRep::new(m.group(), m.field(), gens)?
            };
            Ok(SyzygyResult {
                module,
                projective_multiplicity_removed: removed,
            })
        }
    }
}

fn omega_once(m: &ModuleRep, pims: &Pims, opts: &Options) -> Result<SyzygyResult> {
    let (cover, surj) = projective_cover(m, pims, opts)?;
    let ker = surj.nullspace();
    let se = SemiEchelon::from_rows(&ker);
    let gens = sub_action(cover.action(), &se);
    let k = if se.is_empty() {
        ModuleRep::zero(m.group(), m.field())
    } else {
        ModuleRep::new(m.group(), m.field(), gens)?
    };
    strip_projectives(&k, pims, opts)
}

fn dual_pims(pims: &Pims) -> Pims {
    match pims {
        Pims::PGroup(el) => Pims::PGroup(el.clone()),
        // projectives are injective: duals of PIMs cover the duals of the simples
        Pims::General { pairs, sylow } => Pims::General {
            pairs: pairs.iter().map(|(s, p)| (s.dual(), p.dual())).collect(),
            sylow: sylow.clone(),
        },
    }
}

/// `Ω^n(M)` with projective summands removed; `n < 0` uses
/// `Ω^{-1}(X) = Ω(X*)*`.
pub fn omega(m: &ModuleRep, n: i32, pims: &Pims, opts: &Options) -> Result<SyzygyResult> {
    if n == 0 {
        return strip_projectives(m, pims, opts);
    }
    let mut cur = m.clone();
    let mut removed = 0;
    if n > 0 {
        for _ in 0..n {
            let r = omega_once(&cur, pims, opts)?;
            removed += r.projective_multiplicity_removed;
            cur = r.module;
        }
    } else {
        let dp = dual_pims(pims);
        cur = cur.dual();
        for _ in 0..(-n) {
            let r = omega_once(&cur, &dp, opts)?;
            removed += r.projective_multiplicity_removed;
            cur = r.module;
        }
        cur = cur.dual();
    }
    Ok(SyzygyResult {
        module: cur,
        projective_multiplicity_removed: removed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{perm_from_cycles, GroupSpec};

    fn cpcp(p: usize) -> Group {
        // regular action of C_p x C_p on p^2 points (i, j) -> index i*p + j
        let n = p * p;
        let a: Vec<usize> = (0..n).map(|x| ((x / p + 1) % p) * p + x % p).collect();
        let b: Vec<usize> = (0..n).map(|x| (x / p) * p + (x % p + 1) % p).collect();
        GroupSpec::from_perms("CpxCp", n, vec![a, b]).unwrap()
    }

    #[test]
    fn jennings_c3c3_layers() {
        let g = cpcp(3);
        let f = FieldSpec::prime(3).unwrap();
        let el = g.enumerate(&SubgroupSpec::all_generators(2), 100).unwrap();
        let jb = jennings(&el, &f).unwrap();
        assert_eq!(jb.layer_dims(), vec![1, 2, 3, 2, 1]);
        assert_eq!(jb.delta.len(), 2);
        assert!(jb.vectors.is_invertible());
    }

    #[test]
    fn jennings_c9_weights() {
        let f = FieldSpec::prime(3).unwrap();
        let g = GroupSpec::from_perms("C9", 9, vec![perm_from_cycles(9, "(1,2,3,4,5,6,7,8,9)").unwrap()]).unwrap();
        let el = g.enumerate(&SubgroupSpec::all_generators(1), 100).unwrap();
        let jb = jennings(&el, &f).unwrap();
        let sizes: Vec<usize> = jb.delta.iter().map(|d| d.len()).collect();
        assert_eq!(sizes, vec![9, 3, 3, 1]);
        let weights: Vec<usize> = jb.reps.iter().map(|r| r.1).collect();
        assert_eq!(weights, vec![1, 3]);
        assert_eq!(jb.layer_dims(), vec![1; 9]);
    }

    #[test]
    fn radical_series_agrees_both_ways() {
        let g = cpcp(3);
        let f = FieldSpec::prime(3).unwrap();
        let (reg, _) = regular_module(&g, &SubgroupSpec::all_generators(2), &f, 100).unwrap();
        let opts = Options::default();
        let a = radical_series(&reg, true, &opts).unwrap();
        let b = radical_series(&reg, false, &opts).unwrap();
        assert_eq!(a.layers, vec![1, 2, 3, 2, 1]);
        assert_eq!(b.layers, a.layers);
        let s = socle_series(&reg, &opts).unwrap();
        assert_eq!(s.layers, vec![1, 2, 3, 2, 1]);
    }

    #[test]
    fn quotients_and_heart() {
        let g = cpcp(3);
        let f = FieldSpec::prime(3).unwrap();
        let all = SubgroupSpec::all_generators(2);
        for (i, d) in [(1, 1), (2, 3), (3, 6), (4, 8), (5, 9)] {
            assert_eq!(quotient_mod_radpower(&g, &all, &f, i).unwrap().dim(), d);
        }
        assert!(quotient_mod_radpower(&g, &all, &f, 6).is_err());
        assert_eq!(heart(&g, &all, &f).unwrap().dim(), 7);
    }

    #[test]
    fn omega_of_trivial() {
        let g = cpcp(3);
        let f = FieldSpec::prime(3).unwrap();
        let all = SubgroupSpec::all_generators(2);
        let el = g.enumerate(&all, 100).unwrap();
        let k = ModuleRep::trivial(&g, &f, 1);
        let pims = Pims::PGroup(el);
        let opts = Options::default();
        let o = omega(&k, 1, &pims, &opts).unwrap();
        assert_eq!(o.module.dim(), 8);
        let back = omega(&o.module, -1, &pims, &opts).unwrap();
        assert_eq!(back.module.dim(), 1);
        assert!(meataxe::iso_test(&back.module, &k, &opts).unwrap().is_some());
        let (reg, _) = regular_module(&g, &all, &f, 100).unwrap();
        let reg = reg.with_group(&g).unwrap();
        assert_eq!(omega(&reg, 1, &pims, &opts).unwrap().module.dim(), 0);
    }
}
