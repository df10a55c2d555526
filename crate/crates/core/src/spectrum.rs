//! Prime submodules, minimal primes, the 𝔓-operators, maximal submodules and
//! Jacobson radicals, and the topology on the minimal prime spectrum.
//!
//! Intersections over an empty family of submodules never silently become a
//! submodule: they produce [`Hull::Whole`].

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::{ConcreteModule, ElemId, Lattice, ModElem, SubId, Submodule};
use crate::ring::IdealCanon;

/// Intersection over a possibly empty family of submodules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hull {
    Sub(SubId),
    /// Empty family, read as the whole module `M`.
    Whole,
}

impl Hull {
    /// The submodule this stands for, with `Whole` read as `M`.
    pub fn resolve<M: ConcreteModule + ?Sized>(self, lat: &Lattice<'_, M>) -> SubId {
        match self {
            Hull::Sub(id) => id,
            Hull::Whole => lat.top(),
        }
    }

    /// `self ⊆ n`. `Whole` is contained only in `M` itself.
    pub fn is_within<M: ConcreteModule + ?Sized>(self, n: SubId, lat: &Lattice<'_, M>) -> bool {
        match self {
            Hull::Sub(id) => lat.is_subset(id, n),
            Hull::Whole => n == lat.top(),
        }
    }

    pub fn is_whole(self) -> bool {
        matches!(self, Hull::Whole)
    }
}

/// `rm ∈ P ⇒ m ∈ P or r ∈ (P :_R M)`, checked over every pair; `P` must be proper.
pub fn is_prime_submodule(m: &(impl ConcreteModule + ?Sized), p: &Submodule) -> bool {
    if !p.is_proper_in(m) {
        return false;
    }
    let colon = crate::module::colon_ideal_module(m, p);
    prime_test(m, p, &colon)
}

fn prime_test(m: &(impl ConcreteModule + ?Sized), p: &Submodule, colon: &IdealCanon) -> bool {
    m.ring()
        .elements()
        .filter(|r| !colon.contains(r))
        .all(|r| (0..m.order()).all(|x| p.contains(x) || !p.contains(m.scale(&r, x))))
}

/// Spectrum data computed once per module.
pub struct Spectrum<'m, M: ConcreteModule + ?Sized> {
    lattice: Lattice<'m, M>,
    primes: Vec<SubId>,
    min_primes: Vec<SubId>,
    maximal: Vec<SubId>,
    v_elem: Vec<FixedBitSet>,
    m_elem: Vec<FixedBitSet>,
    frak_elem: Vec<Hull>,
}

impl<'m, M: ConcreteModule + ?Sized> Spectrum<'m, M> {
    pub fn new(module: &'m M, bound: usize) -> Result<Self> {
        Ok(Self::from_lattice(Lattice::new(module, bound)?))
    }

    pub fn from_lattice(lattice: Lattice<'m, M>) -> Self {
        let module = lattice.module();
        let primes: Vec<SubId> = lattice
            .ids()
            .filter(|&p| lattice.is_proper(p) && prime_test(module, lattice.get(p), lattice.colon(p)))
            .collect();
        let min_primes = minimal_among(&lattice, &primes);
        let proper: Vec<SubId> = lattice.ids().filter(|&n| lattice.is_proper(n)).collect();
        let maximal: Vec<SubId> = proper
            .iter()
            .copied()
            .filter(|&n| !proper.iter().any(|&k| k != n && lattice.is_subset(n, k)))
            .collect();
        let profile = |family: &[SubId], x: ElemId| {
            let mut bits = FixedBitSet::with_capacity(family.len());
            bits.extend((0..family.len()).filter(|&i| lattice.contains(family[i], x)));
            bits
        };
        let v_elem: Vec<FixedBitSet> = (0..lattice.order()).map(|x| profile(&min_primes, x)).collect();
        let m_elem: Vec<FixedBitSet> = (0..lattice.order()).map(|x| profile(&maximal, x)).collect();
        let mut spectrum = Spectrum {
            lattice,
            primes,
            min_primes,
            maximal,
            v_elem,
            m_elem,
            frak_elem: Vec::new(),
        };
        spectrum.frak_elem = (0..spectrum.lattice.order())
            .map(|x| spectrum.intersect_min_primes(&spectrum.v_elem[x]))
            .collect();
        spectrum
    }

    pub fn lattice(&self) -> &Lattice<'m, M> {
        &self.lattice
    }

    pub fn module(&self) -> &'m M {
        self.lattice.module()
    }

    /// Intersection of an arbitrary family, `Whole` when empty.
    pub fn intersect(&self, family: impl IntoIterator<Item = SubId>) -> Hull {
        let mut acc: Option<FixedBitSet> = None;
        for id in family {
            let members = self.lattice.get(id).members();
            match acc.as_mut() {
                Some(a) => a.intersect_with(members),
                None => acc = Some(members.clone()),
            }
        }
        acc.map_or(Hull::Whole, |a| Hull::Sub(self.lattice.resolve(&a)))
    }

    fn intersect_min_primes(&self, which: &FixedBitSet) -> Hull {
        self.intersect(which.ones().map(|i| self.min_primes[i]))
    }

    pub fn is_prime(&self, id: SubId) -> bool {
        self.primes.binary_search(&id).is_ok()
    }

    /// `Spec(M)`, in lattice order.
    pub fn spec(&self) -> &[SubId] {
        &self.primes
    }

    /// `Min^p(M)`, in lattice order.
    pub fn min_primes(&self) -> &[SubId] {
        &self.min_primes
    }

    pub fn is_min_prime(&self, id: SubId) -> bool {
        self.min_primes.binary_search(&id).is_ok()
    }

    /// Position of a minimal prime in [`Self::min_primes`].
    pub fn min_prime_index(&self, id: SubId) -> Option<usize> {
        self.min_primes.binary_search(&id).ok()
    }

    pub fn minimal_primes_over(&self, n: SubId) -> Vec<SubId> {
        let over: Vec<SubId> = self
            .primes
            .iter()
            .copied()
            .filter(|&p| self.lattice.is_subset(n, p))
            .collect();
        minimal_among(&self.lattice, &over)
    }

    /// `V(x)` as a bit set over positions in `min_primes()`.
    pub fn v_elem(&self, x: ElemId) -> &FixedBitSet {
        &self.v_elem[x]
    }

    /// `V(N)` as a bit set over positions in `min_primes()`.
    pub fn v_sub(&self, n: SubId) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.min_primes.len());
        bits.extend((0..self.min_primes.len()).filter(|&i| self.lattice.is_subset(n, self.min_primes[i])));
        bits
    }

    /// `𝔓_x`.
    pub fn frak_p_elem(&self, x: ElemId) -> Hull {
        self.frak_elem[x]
    }

    /// `𝔓_N`.
    pub fn frak_p(&self, n: SubId) -> Hull {
        self.intersect_min_primes(&self.v_sub(n))
    }

    /// `𝔓_Ω = ∩Ω` for `Ω ⊆ Min^p(M)` given as positions.
    pub fn frak_p_family(&self, omega: &FixedBitSet) -> Hull {
        self.intersect_min_primes(omega)
    }

    /// `V(𝔓_Ω)`; an empty `Ω` has closure `∅`.
    pub fn closure(&self, omega: &FixedBitSet) -> FixedBitSet {
        match self.frak_p_family(omega) {
            Hull::Sub(p) => self.v_sub(p),
            Hull::Whole => FixedBitSet::with_capacity(self.min_primes.len()),
        }
    }

    pub fn is_closed_subset(&self, omega: &FixedBitSet) -> bool {
        &self.closure(omega) == omega
    }

    pub fn maximal_submodules(&self) -> &[SubId] {
        &self.maximal
    }

    /// `𝓜(x)` as a bit set over positions in `maximal_submodules()`.
    pub fn m_set(&self, x: ElemId) -> &FixedBitSet {
        &self.m_elem[x]
    }

    /// `Rad_N(M)`.
    pub fn jacobson_radical(&self, n: SubId) -> Hull {
        self.intersect(
            self.maximal
                .iter()
                .copied()
                .filter(|&k| self.lattice.is_subset(n, k)),
        )
    }

    /// `rad(N)`, the intersection of all primes containing `N`.
    pub fn prime_radical(&self, n: SubId) -> Hull {
        self.intersect(
            self.primes
                .iter()
                .copied()
                .filter(|&p| self.lattice.is_subset(n, p)),
        )
    }

    /// `O_P = {x : Ann(x) ⊄ (P :_R M)}`.
    pub fn o_p(&self, p: SubId) -> Result<FixedBitSet> {
        if !self.is_prime(p) {
            return Err(Error::NotPrime);
        }
        let colon = self.lattice.colon(p);
        let mut out = FixedBitSet::with_capacity(self.lattice.order());
        out.extend((0..self.lattice.order()).filter(|&x| !self.lattice.ann(x).is_subset_of(colon)));
        debug_assert!(out.is_subset(self.lattice.get(p).members()));
        Ok(out)
    }

    /// `∩Spec(M) = 0`, with an empty spectrum counting as `M`.
    pub fn is_reduced(&self) -> bool {
        self.intersect(self.primes.iter().copied()).resolve(&self.lattice) == self.lattice.bottom()
    }

    /// Separates every pair of distinct minimal primes `P_i, P_j` (`i < j`)
    /// by the least `x ∈ P_j \ P_i`, certifying that `V(x)` and
    /// `V(Ann(x)M)` partition `Min^p(M)`.
    pub fn hausdorff_certificate(&self) -> Result<TopologyCertificate> {
        if !self.lattice.is_multiplication() || !self.is_reduced() {
            return Err(Error::Hypothesis(
                "Hausdorff certificate needs a reduced multiplication module".into(),
            ));
        }
        let all = self.min_primes.len();
        let mut pairs = Vec::new();
        for i in 0..all {
            for j in i + 1..all {
                let (p, q) = (self.min_primes[j], self.min_primes[i]);
                let x = self
                    .lattice
                    .get(p)
                    .elements()
                    .iter()
                    .copied()
                    .find(|&x| !self.lattice.contains(q, x))
                    .ok_or_else(|| Error::Separation(format!("no element separates primes {i} and {j}")))?;
                let vx = self.v_elem(x).clone();
                let vann = self.v_sub(self.lattice.ideal_times(self.lattice.ann(x)));
                let disjoint = vx.is_disjoint(&vann);
                let covers = vx.union_count(&vann) == all;
                if !vx.contains(j) || !vann.contains(i) || !disjoint || !covers {
                    return Err(Error::Separation(format!(
                        "V(x) and V(Ann(x)M) fail to separate primes {i} and {j} at element {x}"
                    )));
                }
                pairs.push(SeparatedPair {
                    first: j,
                    second: i,
                    witness: x,
                    v_witness: vx.ones().collect(),
                    v_annihilator: vann.ones().collect(),
                });
            }
        }
        Ok(TopologyCertificate { pairs })
    }

    pub fn prime_witnesses(&self) -> Vec<PrimeWitness> {
        self.primes
            .iter()
            .map(|&p| {
                let colon = self.lattice.colon(p).clone();
                debug_assert!(self.module().ring().is_prime_ideal(&colon));
                PrimeWitness {
                    submodule: p,
                    colon,
                    minimal: self.is_min_prime(p),
                }
            })
            .collect()
    }

    pub fn report(&self) -> SpectrumReport {
        let view = |id: SubId| SubmoduleView::new(self.module(), self.lattice.get(id));
        SpectrumReport {
            spec: self
                .prime_witnesses()
                .into_iter()
                .map(|w| PrimeWitnessView {
                    submodule: view(w.submodule),
                    colon: w.colon,
                    minimal: w.minimal,
                })
                .collect(),
            min_primes: self.min_primes.iter().map(|&p| view(p)).collect(),
            maximal_submodules: self.maximal.iter().map(|&p| view(p)).collect(),
            jacobson_of_zero: HullView::new(self, self.jacobson_radical(self.lattice.bottom())),
            reduced: self.is_reduced(),
        }
    }
}

fn minimal_among<M: ConcreteModule + ?Sized>(lat: &Lattice<'_, M>, family: &[SubId]) -> Vec<SubId> {
    family
        .iter()
        .copied()
        .filter(|&p| !family.iter().any(|&q| q != p && lat.is_subset(q, p)))
        .collect()
}

/// A prime submodule with its (prime) colon ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub submodule: SubId,
    pub colon: IdealCanon,
    pub minimal: bool,
}

/// One separated pair of minimal primes, indices into `min_primes`; the
/// witness lies in `first` and not in `second`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatedPair {
    pub first: usize,
    pub second: usize,
    pub witness: ElemId,
    pub v_witness: Vec<usize>,
    pub v_annihilator: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyCertificate {
    pub pairs: Vec<SeparatedPair>,
}

/// Serialized form of a submodule: sorted element tuples plus generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleView {
    pub order: usize,
    pub elements: Vec<ModElem>,
    pub generators: Vec<ModElem>,
}

impl SubmoduleView {
    pub fn new(m: &(impl ConcreteModule + ?Sized), n: &Submodule) -> Self {
        SubmoduleView {
            order: n.len(),
            elements: n.residues(m),
            generators: n.generators().iter().map(|&g| m.residues(g)).collect(),
        }
    }
}

/// The `M` marker, serialized as the string `"M"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WholeMarker {
    M,
}

/// Serialized [`Hull`]: an element list, or `"M"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HullView {
    Whole(WholeMarker),
    Elements(Vec<ModElem>),
}

impl HullView {
    pub fn new<M: ConcreteModule + ?Sized>(spectrum: &Spectrum<'_, M>, hull: Hull) -> Self {
        match hull {
            Hull::Whole => HullView::Whole(WholeMarker::M),
            Hull::Sub(id) => HullView::Elements(spectrum.lattice().get(id).residues(spectrum.module())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeWitnessView {
    pub submodule: SubmoduleView,
    pub colon: IdealCanon,
    pub minimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub spec: Vec<PrimeWitnessView>,
    pub min_primes: Vec<SubmoduleView>,
    pub maximal_submodules: Vec<SubmoduleView>,
    pub jacobson_of_zero: HullView,
    pub reduced: bool,
}
