//! Algebraicity: breadth-first tensor closure plus the theorem-backed
//! shortcuts (Klein-four restriction, syzygy shifts inside the closure,
//! `M ⊗ M = M ⊕ X`, hearts of projectives).
//!
//! Non-algebraicity is only ever *evidence* unless one of the rules with a
//! certificate fires; budget exhaustion is reported as such.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elements, SubgroupSpec};
use crate::homalg::{self, Pims};
use crate::meataxe::{self, Decomposition, Fingerprint, Options};
use crate::module::ModuleRep;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub max_classes: usize,
    /// largest tensor product handed to the decomposer
    pub max_dim: usize,
    pub max_depth: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_classes: 64,
            max_dim: 4096,
            max_depth: 16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    Algebraic,
    NonAlgebraicEvidence,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// rule identifier
    pub reason: String,
    pub citation: String,
    pub witness: Option<String>,
}

impl Verdict {
    fn new(kind: VerdictKind, rule: &str, witness: Option<String>) -> Self {
        let citation = rule_registry()
            .into_iter()
            .chain(engine_rules())
            .find(|r| r.id == rule)
            .map_or_else(String::new, |r| r.citation.to_string());
        Verdict {
            kind,
            reason: rule.to_string(),
            citation,
            witness,
        }
    }
}

/// One isomorphism class of `𝒯(M)`.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    pub module: ModuleRep,
    pub fingerprint: Fingerprint,
    pub depth: usize,
    /// classes of the non-projective summands of `module ⊗ M`, once known
    pub children: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureStatus {
    Closed,
    BudgetExceeded(String),
}

#[derive(Clone, Debug)]
pub struct ClosureState {
    pub registry: Vec<ClassEntry>,
    /// registry indices not yet multiplied by the input
    pub frontier: VecDeque<usize>,
    pub budgets: Budgets,
    pub events: Vec<String>,
    pub status: ClosureStatus,
    /// classes among the non-projective summands of `M`
    pub roots: Vec<usize>,
    /// `growth[d-1]`: largest non-projective summand of `M^{⊗d}`, for
    /// every depth whose summands are fully known
    pub growth: Vec<usize>,
    pub projectives_discarded: usize,
}

impl ClosureState {
    pub fn is_closed(&self) -> bool {
        self.status == ClosureStatus::Closed
    }

    /// Every class has been multiplied by `M` and all summands it produced
    /// are registered.
    pub fn is_fixed_point(&self) -> bool {
        self.frontier.is_empty()
            && self.registry.iter().all(|e| match &e.children {
                Some(c) => c.iter().all(|&i| i < self.registry.len()),
                None => false,
            })
    }

    /// Depths over which `growth` strictly increases, counted from the end.
    pub fn trailing_growth_run(&self) -> usize {
        let g = &self.growth;
        if g.is_empty() {
            return 0;
        }
        let mut run = 1;
        for i in (1..g.len()).rev() {
            if g[i] > g[i - 1] {
                run += 1;
            } else {
                break;
            }
        }
        run
    }

    /// `(dim, fingerprint, depth)` rows in registry order.
    pub fn summary(&self) -> Vec<RegistryRow> {
        self.registry
            .iter()
            .map(|e| RegistryRow {
                dim: e.module.dim(),
                fingerprint: e.fingerprint.clone(),
                depth: e.depth,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegistryRow {
    pub dim: usize,
    pub fingerprint: Fingerprint,
    pub depth: usize,
}

/// How projective summands are recognised during closure.
enum Stripper<'a> {
    /// the acting group is the p-group: split free summands off by the norm
    Acting(&'a Elements),
    /// test every summand on restriction to a Sylow subgroup
    Sylow(&'a Elements),
}

impl<'a> Stripper<'a> {
    fn new(m: &ModuleRep, sylow: &'a Elements) -> Self {
        if sylow.generators == SubgroupSpec::all_generators(m.ngens()).words {
            Stripper::Acting(sylow)
        } else {
            Stripper::Sylow(sylow)
        }
    }

    fn decompose(&self, m: &ModuleRep, opts: &Options) -> Result<Decomposition> {
        match self {
            Stripper::Acting(el) => meataxe::decompose_with(m, opts, Some(el)),
            Stripper::Sylow(_) => meataxe::decompose(m, opts),
        }
    }

    fn is_projective(&self, s: &meataxe::Summand) -> Result<bool> {
        match self {
            Stripper::Acting(_) => Ok(s.free),
            Stripper::Sylow(el) => meataxe::is_projective(&s.module, el),
        }
    }
}

/// Index of a registry class isomorphic to `x`, if any.
fn lookup(
    registry: &[ClassEntry],
    x: &ModuleRep,
    fp: &Fingerprint,
    opts: &Options,
    events: &mut Vec<String>,
) -> Result<Option<usize>> {
    for (i, e) in registry.iter().enumerate() {
        if e.fingerprint != *fp {
            continue;
        }
        match meataxe::find_isomorphism(&e.module, x, opts) {
            Ok(Some(_)) => return Ok(Some(i)),
            Ok(None) => {}
            Err(Error::Unknown) => events.push(format!(
                "iso test inconclusive against class {i} (dim {}); kept apart",
                fp.dim
            )),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Breadth-first computation of the indecomposable non-projective summands
/// of all tensor powers of `m`. `sylow` is an enumerated Sylow p-subgroup
/// of the acting group (or the acting group itself, when that is a p-group).
pub fn tensor_closure(
    m: &ModuleRep,
    sylow: &Elements,
    budgets: &Budgets,
    opts: &Options,
) -> Result<(ClosureState, Verdict)> {
    let strip = Stripper::new(m, sylow);
    let mut st = ClosureState {
        registry: Vec::new(),
        frontier: VecDeque::new(),
        budgets: budgets.clone(),
        events: Vec::new(),
        status: ClosureStatus::Closed,
        roots: Vec::new(),
        growth: Vec::new(),
        projectives_discarded: 0,
    };

    // the classes met, or None once the class budget is hit
    let absorb = |st: &mut ClosureState, d: Decomposition, depth: usize| -> Result<Option<Vec<usize>>> {
        st.events.extend(d.events);
        let mut met = Vec::new();
        for s in d.summands {
            if strip.is_projective(&s)? {
                st.projectives_discarded += s.multiplicity;
                continue;
            }
            if let Some(i) = lookup(&st.registry, &s.module, &s.fingerprint, opts, &mut st.events)? {
                met.push(i);
                continue;
            }
            if st.registry.len() >= st.budgets.max_classes {
                st.status = ClosureStatus::BudgetExceeded(format!(
                    "class budget {} reached at depth {depth}",
                    st.budgets.max_classes
                ));
                return Ok(None);
            }
            met.push(st.registry.len());
            st.frontier.push_back(st.registry.len());
            st.registry.push(ClassEntry {
                module: s.module,
                fingerprint: s.fingerprint,
                depth,
                children: None,
            });
        }
        met.sort_unstable();
        met.dedup();
        Ok(Some(met))
    };

    if m.dim() > budgets.max_dim {
        st.status = ClosureStatus::BudgetExceeded(format!("input dimension {} exceeds max_dim", m.dim()));
    } else {
        let d = strip.decompose(m, opts)?;
        if let Some(roots) = absorb(&mut st, d, 1)? {
            st.roots = roots;
            while let Some(idx) = st.frontier.pop_front() {
                let depth = st.registry[idx].depth;
                if depth >= budgets.max_depth {
                    st.frontier.push_front(idx);
                    st.status = ClosureStatus::BudgetExceeded(format!("depth budget {} reached", budgets.max_depth));
                    break;
                }
                let x = &st.registry[idx].module;
                if x.dim() * m.dim() > budgets.max_dim {
                    st.status = ClosureStatus::BudgetExceeded(format!(
                        "product of dimension {} exceeds max_dim {}",
                        x.dim() * m.dim(),
                        budgets.max_dim
                    ));
                    continue;
                }
                let t = x.tensor(m)?;
                let d = strip.decompose(&t, opts)?;
                match absorb(&mut st, d, depth + 1)? {
                    Some(kids) => st.registry[idx].children = Some(kids),
                    None => {
                        st.frontier.push_front(idx);
                        break;
                    }
                }
            }
        }
    }
    st.growth = layer_growth(&st);

    let verdict = match &st.status {
        // the frontier only empties once every class has been multiplied by
        // `m` without producing anything new: the state is a fixed point
        ClosureStatus::Closed => {
            assert!(st.is_fixed_point(), "closed closure state is not a fixed point");
            Verdict::new(
                VerdictKind::Algebraic,
                "tensor-closure",
                Some(format!("{} classes", st.registry.len())),
            )
        }
        ClosureStatus::BudgetExceeded(why) => Verdict::new(
            VerdictKind::Inconclusive,
            "budget",
            Some(format!("{why}; max summand dim per depth {:?}", st.growth)),
        ),
    };
    Ok((st, verdict))
}

/// Largest class in each layer `S_1 = roots`, `S_{d+1} = children(S_d)`,
/// stopping at the first layer with an unexpanded class.
fn layer_growth(st: &ClosureState) -> Vec<usize> {
    let mut out = Vec::new();
    let mut layer: BTreeSet<usize> = st.roots.iter().copied().collect();
    let mut seen = HashSet::new();
    while !layer.is_empty() {
        out.push(layer.iter().map(|&i| st.registry[i].module.dim()).max().unwrap_or(0));
        // tensor powers are eventually periodic in this layer sequence
        if !seen.insert(layer.iter().copied().collect::<Vec<_>>()) || out.len() >= st.budgets.max_depth {
            break;
        }
        let mut next = BTreeSet::new();
        for &i in &layer {
            match &st.registry[i].children {
                Some(c) => next.extend(c.iter().copied()),
                None => return out,
            }
        }
        layer = next;
    }
    out
}

/// Klein-four restriction test; with `dihedral`, `q` may be any dihedral
/// 2-group generated by two involutions.
pub fn v4_test(m: &ModuleRep, q: &SubgroupSpec, dihedral: bool, opts: &Options) -> Result<Verdict> {
    if m.field().p() != 2 {
        return Err(Error::NotKleinFour);
    }
    let el = m.group().enumerate(q, 1 << 12)?;
    let n = el.len();
    let involutions = (1..n).filter(|&x| el.order_of(x) == 2).count();
    let ok = if dihedral {
        n >= 4 && n.is_power_of_two() && q.words.len() == 2 && (0..2).all(|i| el.order_of(generator_index(&el, i)) == 2)
    } else {
        n == 4 && involutions == 3
    };
    if !ok {
        return Err(Error::NotKleinFour);
    }
    let r = m.restrict(q)?;
    let rel = r.group().enumerate(&SubgroupSpec::all_generators(q.words.len()), 1 << 12)?;
    let d = meataxe::decompose_with(&r, opts, Some(&rel))?;
    let pims = Pims::PGroup(rel);
    let k = ModuleRep::trivial(r.group(), r.field(), 1);
    for s in &d.summands {
        let dim = s.module.dim();
        if dim % 2 == 0 || dim == 1 {
            continue;
        }
        // odd and > 1: non-trivial; try to name it as a syzygy of k
        let span = (dim as i32 - 1) / 2;
        let mut name = None;
        'search: for a in 1..=span {
            for i in [-a, a] {
                let om = homalg::omega(&k, i, &pims, opts)?.module;
                if om.dim() == dim && meataxe::iso_test(&om, &s.module, opts)?.is_some() {
                    name = Some(format!("Ω^{i}(k)"));
                    break 'search;
                }
            }
        }
        let witness = match name {
            Some(nm) => format!("summand of dimension {dim} ≅ {nm}"),
            None => format!("unidentified summand of dimension {dim}"),
        };
        return Ok(Verdict::new(VerdictKind::NonAlgebraicEvidence, "v4-odd-summand", Some(witness)));
    }
    Ok(Verdict::new(VerdictKind::Inconclusive, "v4-no-odd-summand", None))
}

/// Element index of subgroup generator `i`.
fn generator_index(el: &Elements, i: usize) -> usize {
    (0..el.len())
        .find(|&x| el.tree[x].is_some_and(|(p, j)| p == 0 && j == i))
        .unwrap_or(0)
}

/// Outcome of iterating `Ω` from a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Periodicity {
    /// `Ω^n(A) ≅ A`
    Periodic(usize),
    /// strict dimension growth over the probe window and no return
    NonPeriodic(Vec<usize>),
    Undecided(Vec<usize>),
}

/// Iterates `Ω` for `2 * window` steps. Certifies non-periodicity only on
/// strictly increasing dimensions over the first `window` steps with no
/// return to `a` anywhere in the run.
pub fn periodicity_probe(a: &ModuleRep, pims: &Pims, window: usize, opts: &Options) -> Result<Periodicity> {
    let fa = meataxe::fingerprint(a, opts)?;
    let mut dims = vec![a.dim()];
    let mut cur = a.clone();
    for step in 1..=2 * window {
        cur = homalg::omega(&cur, 1, pims, opts)?.module;
        dims.push(cur.dim());
        if cur.dim() == a.dim()
            && meataxe::fingerprint(&cur, opts)? == fa
            && meataxe::find_isomorphism(a, &cur, opts)?.is_some()
        {
            return Ok(Periodicity::Periodic(step));
        }
    }
    if dims[..=window].windows(2).all(|w| w[0] < w[1]) {
        Ok(Periodicity::NonPeriodic(dims))
    } else {
        Ok(Periodicity::Undecided(dims))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftBudget {
    /// largest `|i|` tried in `B ≅ Ω^i(A)`
    pub shift: usize,
    /// periodicity probe window
    pub probe: usize,
}

impl Default for ShiftBudget {
    fn default() -> Self {
        ShiftBudget { shift: 2, probe: 6 }
    }
}

/// Looks for registry classes `A`, `B` with `B ≅ Ω^i(A)` and `A` certified
/// non-periodic. Both lying in `𝒯(M)` rules out algebraicity of `M`.
pub fn omega_shift_rule(
    state: &ClosureState,
    pims: &Pims,
    budget: &ShiftBudget,
    opts: &Options,
) -> Result<Option<Verdict>> {
    let mut events = Vec::new();
    for (ai, a) in state.registry.iter().enumerate() {
        for s in 1..=budget.shift as i32 {
            for i in [s, -s] {
                let om = homalg::omega(&a.module, i, pims, opts)?.module;
                if om.dim() == 0 {
                    continue;
                }
                let fp = meataxe::fingerprint(&om, opts)?;
                let Some(bi) = lookup(&state.registry, &om, &fp, opts, &mut events)? else {
                    continue;
                };
                if let Periodicity::NonPeriodic(dims) = periodicity_probe(&a.module, pims, budget.probe, opts)? {
                    let witness = format!(
                        "class {bi} (dim {}) ≅ Ω^{i}(class {ai}) (dim {}); syzygy dims of class {ai}: {dims:?}",
                        om.dim(),
                        a.module.dim()
                    );
                    return Ok(Some(Verdict::new(VerdictKind::NonAlgebraicEvidence, "omega-shift", Some(witness))));
                }
                // periodic or undecided: this A cannot certify anything
                break;
            }
        }
    }
    Ok(None)
}

/// `M ⊗ M ≅ M ⊕ X` with `X` algebraic forces `M` algebraic. `X`-classes
/// count as algebraic when projective, isomorphic to one of `known`, or
/// closed under tensor closure within `budgets`.
pub fn mplus_check(
    m: &ModuleRep,
    known: &[ModuleRep],
    sylow: &Elements,
    budgets: &Budgets,
    opts: &Options,
) -> Result<Option<Verdict>> {
    if m.dim() == 1 {
        // a one-dimensional representation has finite order in the tensor ring
        return Ok(Some(Verdict::new(VerdictKind::Algebraic, "one-dimensional", None)));
    }
    let strip = Stripper::new(m, sylow);
    let d = strip.decompose(&m.tensor(m)?, opts)?;
    let fm = meataxe::fingerprint(m, opts)?;
    let mut seen_m = false;
    let mut closed_x = 0;
    for s in &d.summands {
        if s.fingerprint == fm && meataxe::find_isomorphism(m, &s.module, opts)?.is_some() {
            if s.multiplicity != 1 {
                return Ok(None);
            }
            seen_m = true;
            continue;
        }
        if strip.is_projective(s)? {
            continue;
        }
        let mut ok = false;
        for k in known {
            if k.dim() == s.module.dim() && meataxe::iso_test(k, &s.module, opts)?.is_some() {
                ok = true;
                break;
            }
        }
        if !ok {
            let (st, _) = tensor_closure(&s.module, sylow, budgets, opts)?;
            ok = st.is_closed();
            closed_x += ok as usize;
        }
        if !ok {
            return Ok(None);
        }
    }
    if !seen_m {
        return Ok(None);
    }
    Ok(Some(Verdict::new(
        VerdictKind::Algebraic,
        "tensor-square-splits",
        Some(format!("{} summand classes besides M, {closed_x} closed by tensor closure", d.summands.len() - 1)),
    )))
}

/// Heart-of-projective rules for the acting p-group (odd `p`, non-cyclic,
/// asserted by the caller): `m ≅ rad(kP)/soc(kP)`, or `m ≅ E ⊗ N` for a
/// tracked `N` of dimension prime to `p`.
pub fn heart_rules(m: &ModuleRep, tracked: &[ModuleRep], opts: &Options) -> Result<Option<Verdict>> {
    let p = m.field().p() as usize;
    let all = SubgroupSpec::all_generators(m.ngens());
    let e = homalg::heart(m.group(), &all, m.field())?;
    if e.dim() == m.dim() && meataxe::iso_test(&e, m, opts)?.is_some() {
        return Ok(Some(Verdict::new(VerdictKind::NonAlgebraicEvidence, "heart", Some(format!("dim {}", e.dim())))));
    }
    for (i, n) in tracked.iter().enumerate() {
        if n.dim() % p == 0 || e.dim() * n.dim() != m.dim() {
            continue;
        }
        let en = e.tensor(n)?;
        if meataxe::iso_test(&en, m, opts)?.is_some() {
            return Ok(Some(Verdict::new(
                VerdictKind::NonAlgebraicEvidence,
                "heart-tensor",
                Some(format!("E ⊗ tracked module {i} (dim {})", n.dim())),
            )));
        }
    }
    Ok(None)
}

/// A static rule: a caller-asserted predicate and what it implies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub id: &'static str,
    pub predicate: &'static str,
    pub verdict: VerdictKind,
    pub citation: &'static str,
}

/// Known shortcuts; predicates are facts the caller asserts, never derived.
pub fn rule_registry() -> Vec<Rule> {
    use VerdictKind::*;
    vec![
        Rule {
            id: "trivial-source",
            predicate: "the module has trivial source",
            verdict: Algebraic,
            citation: "trivial source modules are summands of permutation modules and hence algebraic",
        },
        Rule {
            id: "pprime-restriction",
            predicate: "the restriction to a subgroup of index prime to p is algebraic",
            verdict: Algebraic,
            citation: "algebraicity passes up from a subgroup of p′-index (the module is a summand of the induced restriction)",
        },
        Rule {
            id: "dim-two",
            predicate: "the module is 2-dimensional",
            verdict: Algebraic,
            citation: "every 2-dimensional module in characteristic p is algebraic",
        },
        Rule {
            id: "abelian-sylow-two",
            predicate: "simple module, characteristic 2, abelian Sylow 2-subgroups",
            verdict: Algebraic,
            citation: "simple modules in characteristic 2 of groups with abelian Sylow 2-subgroups are algebraic",
        },
        Rule {
            id: "cyclic-or-klein-defect",
            predicate: "simple module in a 2-block with cyclic or Klein-four defect group",
            verdict: Algebraic,
            citation: "such blocks have only algebraic simple modules (finite representation type or the Klein-four classification)",
        },
        Rule {
            id: "periodic-small-c3c3",
            predicate: "absolutely indecomposable of dimension 3 or 6 over F3[C3 x C3], and periodic",
            verdict: Algebraic,
            citation: "for these dimensions periodicity and algebraicity coincide",
        },
        Rule {
            id: "second-row",
            predicate: "p odd, non-cyclic Sylow, p ∤ dim M, M on the second row of its Auslander–Reiten component",
            verdict: NonAlgebraicEvidence,
            citation: "such modules are non-algebraic (almost-split sequence argument with the heart)",
        },
    ]
}

/// Rules the engines apply themselves, with their verdict citations.
pub fn engine_rules() -> Vec<Rule> {
    use VerdictKind::*;
    vec![
        Rule {
            id: "tensor-closure",
            predicate: "finitely many indecomposable summands among all tensor powers",
            verdict: Algebraic,
            citation: "a module is algebraic iff its tensor powers have finitely many indecomposable summand classes",
        },
        Rule {
            id: "budget",
            predicate: "closure did not finish within the budgets",
            verdict: Inconclusive,
            citation: "evidence only: growth of summand dimensions is reported, not proved unbounded",
        },
        Rule {
            id: "v4-odd-summand",
            predicate: "restriction to a Klein-four (or dihedral) subgroup has a non-trivial odd-dimensional summand",
            verdict: NonAlgebraicEvidence,
            citation: "odd-dimensional non-trivial indecomposables of Klein-four and dihedral 2-groups are non-algebraic",
        },
        Rule {
            id: "v4-no-odd-summand",
            predicate: "restriction has no non-trivial odd-dimensional summand",
            verdict: Inconclusive,
            citation: "the Klein-four test only detects non-algebraic modules",
        },
        Rule {
            id: "omega-shift",
            predicate: "A and Ω^i(A) (i ≠ 0) both lie in the closure, A non-periodic",
            verdict: NonAlgebraicEvidence,
            citation: "an algebraic module's closure cannot contain two distinct syzygy shifts of a non-periodic module",
        },
        Rule {
            id: "one-dimensional",
            predicate: "the module is 1-dimensional",
            verdict: Algebraic,
            citation: "a 1-dimensional module has finite order under tensor product",
        },
        Rule {
            id: "tensor-square-splits",
            predicate: "M ⊗ M ≅ M ⊕ X with X algebraic",
            verdict: Algebraic,
            citation: "if the tensor square is M plus an algebraic module then M is algebraic",
        },
        Rule {
            id: "heart",
            predicate: "M is the heart rad(kP)/soc(kP) of a non-cyclic p-group, p odd",
            verdict: NonAlgebraicEvidence,
            citation: "the heart of the projective cover of the trivial module is non-algebraic",
        },
        Rule {
            id: "heart-tensor",
            predicate: "M ≅ E ⊗ N with E the heart and p ∤ dim N",
            verdict: NonAlgebraicEvidence,
            citation: "the heart tensored with a module of p′-dimension is non-algebraic",
        },
    ]
}

/// Machine-readable verdict report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: String,
    pub seed: u64,
    pub budgets: Budgets,
    pub verdict: VerdictKind,
    pub reason: String,
    pub citation: String,
    pub witness: Option<String>,
    pub registry: Vec<RegistryRow>,
    pub events: Vec<String>,
    /// `(phase, milliseconds)`
    pub timings: Vec<(String, u128)>,
}

impl Report {
    pub fn new(input: &str, opts: &Options, state: &ClosureState, verdict: &Verdict, timings: Vec<(String, u128)>) -> Self {
        Report {
            input: input.to_string(),
            seed: opts.seed,
            budgets: state.budgets.clone(),
            verdict: verdict.kind,
            reason: verdict.reason.clone(),
            citation: verdict.citation.clone(),
            witness: verdict.witness.clone(),
            registry: state.summary(),
            events: state.events.clone(),
            timings,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
