//! Instance corpus and the theorem harness.
//!
//! Each check pairs a hypothesis filter with an assertion, both recomputed
//! per instance. Results are merged in corpus order, so the aggregate does
//! not depend on the thread count.

mod checks;

use std::collections::HashSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::{ConcreteModule, ModuleSpec, SubId, DEFAULT_BOUND};
use crate::ring::RingSpec;
use crate::spectrum::Spectrum;
use crate::zsub::Classifier;

pub use checks::{catalog, negative_control, Check};

/// A corpus entry. The id is the module's text form, e.g. `Z4xZ6|Z4;Z3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub module: ModuleSpec,
}

impl Instance {
    pub fn new(module: ModuleSpec) -> Self {
        Instance {
            id: module.to_string(),
            module,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        self.module.ring()
    }

    /// Recomputes every hypothesis flag.
    pub fn profile(&self, bound: usize) -> Result<HypothesisProfile> {
        let s = Spectrum::new(&self.module, bound)?;
        Ok(HypothesisProfile::of(&s))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisProfile {
    pub multiplication: bool,
    pub reduced: bool,
    pub faithful: bool,
    pub comultiplication: bool,
    pub dac: bool,
    pub property_t: bool,
    /// `T_0(M) ≠ M`.
    pub torsion_proper: bool,
    pub has_min_primes: bool,
}

impl HypothesisProfile {
    pub fn of<M: ConcreteModule + ?Sized>(s: &Spectrum<'_, M>) -> Self {
        let lat = s.lattice();
        HypothesisProfile {
            multiplication: lat.is_multiplication(),
            reduced: s.is_reduced(),
            faithful: lat.is_faithful(),
            comultiplication: lat.is_comultiplication(),
            dac: lat.has_property_dac(),
            property_t: lat.has_property_t(),
            torsion_proper: lat.torsion().count_ones(..) < lat.order(),
            has_min_primes: !s.min_primes().is_empty(),
        }
    }

    pub fn reduced_multiplication(&self) -> bool {
        self.reduced && self.multiplication
    }
}

/// Corpus bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    /// Largest `n` for single rings `Z_n`.
    pub nmax: u32,
    /// Largest factor for product rings `Z_m x Z_n`; 0 disables them.
    pub product_max: u32,
    /// Largest module order admitted from product rings.
    pub order_cap: usize,
    /// `p` values for the non-multiplication modules `Z_p + Z_p` over `Z_p`.
    pub negatives: Vec<u32>,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            nmax: 30,
            product_max: 12,
            order_cap: 1024,
            negatives: vec![2, 3],
        }
    }
}

/// Single rings `Z_n` (`2 ≤ n ≤ nmax`) with every `Z_d`, `d | n`; product
/// rings `Z_m x Z_n` (`2 ≤ m ≤ n ≤ product_max`) with every `Z_d x Z_e`
/// up to the order cap; then the negative instances.
pub fn default_corpus(params: &CorpusParams) -> Result<Vec<Instance>> {
    if params.nmax < 2 {
        return Err(Error::Corpus(format!(
            "nmax must be at least 2, got {}",
            params.nmax
        )));
    }
    if params.product_max == 1 {
        return Err(Error::Corpus("product_max must be 0 or at least 2".into()));
    }
    if params.order_cap == 0 {
        return Err(Error::Corpus("order cap must be positive".into()));
    }
    if let Some(p) = params.negatives.iter().find(|&&p| p < 2) {
        return Err(Error::Corpus(format!("negative instance needs p ≥ 2, got {p}")));
    }
    let divisors = |n: u32| (1..=n).filter(move |d| n.is_multiple_of(*d));
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |m: ModuleSpec| {
        let inst = Instance::new(m);
        if seen.insert(inst.id.clone()) {
            out.push(inst);
        }
    };
    for n in 2..=params.nmax {
        let ring = RingSpec::cyclic(n)?;
        for d in divisors(n) {
            push(ModuleSpec::new(ring.clone(), vec![vec![d]])?);
        }
    }
    for m in 2..=params.product_max {
        for n in m..=params.product_max {
            let ring = RingSpec::new(vec![m, n])?;
            for d in divisors(m) {
                for e in divisors(n) {
                    if (d * e) as usize <= params.order_cap {
                        push(ModuleSpec::new(ring.clone(), vec![vec![d], vec![e]])?);
                    }
                }
            }
        }
    }
    for &p in &params.negatives {
        if (p * p) as usize <= params.order_cap {
            push(ModuleSpec::new(RingSpec::cyclic(p)?, vec![vec![p, p]])?);
        }
    }
    Ok(out)
}

/// An instance on which a check failed or logged a note. `witness` is the
/// first occurrence; `occurrences` counts all of them on that instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub instance: String,
    pub witness: String,
    pub occurrences: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub check_id: String,
    pub hypotheses: String,
    /// Instances evaluated (not skipped).
    pub tested: usize,
    /// Instances meeting the hypotheses with at least one case.
    pub satisfied: usize,
    /// Individual assertions evaluated.
    pub cases: usize,
    pub minimum: usize,
    pub vacuous: bool,
    pub counterexamples: Vec<Finding>,
    /// Cases outside the assertion's scope, kept for inspection.
    pub logged: Vec<Finding>,
    /// Instances over the resource bound.
    pub skipped: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Per-instance result of one check.
#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    hypotheses: bool,
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
    notes: usize,
    first_note: Option<String>,
}

impl Outcome {
    pub(crate) fn case(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(witness());
            }
        }
    }

    pub(crate) fn note(&mut self, witness: impl FnOnce() -> String) {
        self.notes += 1;
        if self.first_note.is_none() {
            self.first_note = Some(witness());
        }
    }
}

/// Shared per-instance state handed to every check.
pub(crate) struct Ctx<'a> {
    pub s: &'a Spectrum<'a, ModuleSpec>,
    pub c: &'a Classifier<'a, 'a, ModuleSpec>,
    pub p: HypothesisProfile,
    pub bound: usize,
}

impl Ctx<'_> {
    pub fn m(&self) -> &ModuleSpec {
        self.s.module()
    }

    pub fn elem(&self, x: usize) -> String {
        self.m().residues(x).to_string()
    }

    /// Submodule by its generators, e.g. `<2>` or `<(1,0),(0,1)>`.
    pub fn sub(&self, id: SubId) -> String {
        let n = self.s.lattice().get(id);
        if n.len() == 1 {
            return "0".into();
        }
        let mut out = String::from("<");
        for (i, &g) in n.generators().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", self.elem(g));
        }
        out.push('>');
        out
    }

    pub fn proper(&self) -> impl Iterator<Item = SubId> + '_ {
        let lat = self.s.lattice();
        lat.ids().filter(move |&n| lat.is_proper(n))
    }

    pub fn torsion(&self) -> &FixedBitSet {
        self.s.lattice().torsion()
    }
}

/// Runs one instance through the given checks.
fn evaluate(inst: &Instance, checks: &[Check], bound: usize) -> Option<Vec<Outcome>> {
    let s = Spectrum::new(&inst.module, bound).ok()?;
    let c = Classifier::new(&s);
    let ctx = Ctx {
        s: &s,
        c: &c,
        p: HypothesisProfile::of(&s),
        bound,
    };
    Some(
        checks
            .iter()
            .map(|check| {
                let mut o = Outcome::default();
                if (check.requires)(&ctx) {
                    o.hypotheses = true;
                    (check.run)(&ctx, &mut o);
                }
                o
            })
            .collect(),
    )
}

/// Runs `checks` over `corpus` with `jobs` worker threads. The result does
/// not depend on `jobs`.
pub fn run_checks(
    corpus: &[Instance],
    checks: &[Check],
    jobs: usize,
    bound: usize,
) -> Result<Vec<TheoremReport>> {
    if jobs == 0 {
        return Err(Error::Corpus("jobs must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Corpus(e.to_string()))?;
    let results: Vec<Option<Vec<Outcome>>> = pool.install(|| {
        corpus
            .par_iter()
            .map(|inst| evaluate(inst, checks, bound))
            .collect()
    });

    let mut reports: Vec<TheoremReport> = checks
        .iter()
        .map(|c| TheoremReport {
            check_id: c.id.to_string(),
            hypotheses: c.hypotheses.to_string(),
            tested: 0,
            satisfied: 0,
            cases: 0,
            minimum: c.minimum,
            vacuous: false,
            counterexamples: Vec::new(),
            logged: Vec::new(),
            skipped: Vec::new(),
        })
        .collect();
    for (inst, result) in corpus.iter().zip(results) {
        let Some(outcomes) = result else {
            for r in &mut reports {
                r.skipped.push(inst.id.clone());
            }
            continue;
        };
        for (r, o) in reports.iter_mut().zip(outcomes) {
            r.tested += 1;
            r.cases += o.cases;
            if o.hypotheses && o.cases > 0 {
                r.satisfied += 1;
            }
            if let Some(witness) = o.first_failure {
                r.counterexamples.push(Finding {
                    instance: inst.id.clone(),
                    witness,
                    occurrences: o.failures,
                });
            }
            if let Some(witness) = o.first_note {
                r.logged.push(Finding {
                    instance: inst.id.clone(),
                    witness,
                    occurrences: o.notes,
                });
            }
        }
    }
    for r in &mut reports {
        r.vacuous = r.satisfied < r.minimum;
        r.counterexamples.sort_by(|a, b| a.instance.cmp(&b.instance));
        r.logged.sort_by(|a, b| a.instance.cmp(&b.instance));
        r.skipped.sort();
    }
    Ok(reports)
}

/// Selects checks by id; `None` selects the whole catalog.
pub fn select_checks(ids: Option<&[String]>) -> Result<Vec<Check>> {
    let all = catalog();
    let Some(ids) = ids else {
        return Ok(all);
    };
    for id in ids {
        if !all.iter().any(|c| c.id.eq_ignore_ascii_case(id)) {
            return Err(Error::Corpus(format!("unknown check `{id}`")));
        }
    }
    Ok(all
        .into_iter()
        .filter(|c| ids.iter().any(|id| c.id.eq_ignore_ascii_case(id)))
        .collect())
}

/// Every check in the catalog, reports in catalog order (T1..T26, D1).
pub fn run_all(corpus: &[Instance], jobs: usize) -> Result<Vec<TheoremReport>> {
    run_checks(corpus, &catalog(), jobs, DEFAULT_BOUND)
}

pub fn all_passed(reports: &[TheoremReport]) -> bool {
    reports.iter().all(TheoremReport::passed)
}

/// Stable JSON with sorted keys.
pub fn reports_to_json(reports: &[TheoremReport]) -> String {
    let value = serde_json::to_value(reports).expect("reports serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
    text.push('\n');
    text
}

pub fn reports_to_csv(reports: &[TheoremReport]) -> String {
    let mut out =
        String::from("check_id,tested,satisfied,cases,minimum,vacuous,counterexamples,logged,skipped\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            r.check_id,
            r.tested,
            r.satisfied,
            r.cases,
            r.minimum,
            r.vacuous,
            r.counterexamples.len(),
            r.logged.len(),
            r.skipped.len()
        );
    }
    out
}
