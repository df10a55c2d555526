//! z-, strongly z- and z°-submodules, the z°-closure fixpoint, and
//! whole-lattice classification.

use serde::{Deserialize, Serialize};

use crate::module::{ConcreteModule, ElemId, SubId};
use crate::ring::IdealCanon;
use crate::spectrum::{Hull, HullView, Spectrum, SubmoduleView};

/// Per-submodule classification over a fixed spectrum. Non-proper
/// submodules are classified false by every predicate.
pub struct Classifier<'s, 'm, M: ConcreteModule + ?Sized> {
    spectrum: &'s Spectrum<'m, M>,
    z0: Vec<bool>,
}

impl<'s, 'm, M: ConcreteModule + ?Sized> Classifier<'s, 'm, M> {
    pub fn new(spectrum: &'s Spectrum<'m, M>) -> Self {
        let z0 = spectrum.lattice().ids().map(|n| z0_test(spectrum, n)).collect();
        Classifier { spectrum, z0 }
    }

    pub fn spectrum(&self) -> &'s Spectrum<'m, M> {
        self.spectrum
    }

    /// `𝔓_x ⊆ N` for every `x ∈ N`.
    pub fn is_z0(&self, n: SubId) -> bool {
        self.z0[n.0]
    }

    pub fn z0_family(&self) -> Vec<SubId> {
        self.spectrum.lattice().ids().filter(|&n| self.is_z0(n)).collect()
    }

    /// `𝓜(x) = 𝓜(y) ≠ ∅` and `x ∈ N` force `y ∈ N`.
    pub fn is_z(&self, n: SubId) -> bool {
        let lat = self.spectrum.lattice();
        if !lat.is_proper(n) {
            return false;
        }
        let inside = lat.get(n);
        inside.elements().iter().all(|&x| {
            let mx = self.spectrum.m_set(x);
            mx.is_clear() || (0..lat.order()).all(|y| inside.contains(y) || self.spectrum.m_set(y) != mx)
        })
    }

    /// `Rad_K(M) ⊆ N` for every `K ⊆ N` whose radical is proper.
    pub fn is_strongly_z(&self, n: SubId) -> bool {
        let lat = self.spectrum.lattice();
        if !lat.is_proper(n) {
            return false;
        }
        lat.below(n).all(|k| match self.spectrum.jacobson_radical(k) {
            Hull::Sub(r) => lat.is_subset(r, n),
            Hull::Whole => true,
        })
    }

    /// Least z°-submodule containing `n`: the intersection of all z°
    /// submodules above it, `None` when there are none.
    pub fn smallest_z0_containing(&self, n: SubId) -> Option<SubId> {
        let lat = self.spectrum.lattice();
        match self.spectrum.intersect(lat.above(n).filter(|&k| self.is_z0(k))) {
            Hull::Sub(id) => Some(id),
            Hull::Whole => None,
        }
    }

    /// Inclusion-maximal members of the z° family.
    pub fn maximal_z0(&self) -> Vec<SubId> {
        let lat = self.spectrum.lattice();
        let family = self.z0_family();
        family
            .iter()
            .copied()
            .filter(|&n| !family.iter().any(|&k| k != n && lat.is_subset(n, k)))
            .collect()
    }

    pub fn flags(&self, n: SubId) -> Flags {
        let lat = self.spectrum.lattice();
        let proper = lat.is_proper(n);
        Flags {
            proper,
            prime: self.spectrum.is_prime(n),
            minimal_prime: self.spectrum.is_min_prime(n),
            maximal: self.spectrum.maximal_submodules().contains(&n),
            z: self.is_z(n),
            strongly_z: self.is_strongly_z(n),
            z0: self.is_z0(n),
        }
    }

    pub fn report(&self) -> ClassificationReport {
        let lat = self.spectrum.lattice();
        let m = self.spectrum.module();
        let rows = lat
            .ids()
            .map(|n| {
                let mut images: Vec<Hull> = lat
                    .get(n)
                    .elements()
                    .iter()
                    .map(|&x| self.spectrum.frak_p_elem(x))
                    .collect();
                images.sort_by_key(|h| match h {
                    Hull::Sub(id) => (0, id.0),
                    Hull::Whole => (1, 0),
                });
                images.dedup();
                ClassificationRow {
                    submodule: SubmoduleView::new(m, lat.get(n)),
                    colon: lat.colon(n).clone(),
                    flags: self.flags(n),
                    frak_p_images: images
                        .into_iter()
                        .map(|h| HullView::new(self.spectrum, h))
                        .collect(),
                }
            })
            .collect();
        ClassificationReport { rows }
    }
}

fn z0_test<M: ConcreteModule + ?Sized>(s: &Spectrum<'_, M>, n: SubId) -> bool {
    let lat = s.lattice();
    lat.is_proper(n)
        && lat
            .get(n)
            .elements()
            .iter()
            .all(|&x| s.frak_p_elem(x).is_within(n, lat))
}

/// Ascending chain `N_0 ⊆ N_1 ⊆ ...` ending in a repeated fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub chain: Vec<SubId>,
    pub fixpoint: SubId,
    pub proper: bool,
    pub steps: usize,
}

/// One step of the closure: `Σ_{x ∈ N} (0 :_M Ann(x))`.
pub fn z0_closure_step<M: ConcreteModule + ?Sized>(s: &Spectrum<'_, M>, n: SubId) -> SubId {
    let lat = s.lattice();
    let mut seen: Vec<IdealCanon> = Vec::new();
    let mut acc = lat.bottom();
    for &x in lat.get(n).elements() {
        let ann = lat.ann(x);
        if seen.contains(ann) {
            continue;
        }
        seen.push(ann.clone());
        acc = lat.join(acc, lat.zero_of(ann));
    }
    acc
}

/// Iterates [`z0_closure_step`] until the chain repeats.
pub fn z0_closure<M: ConcreteModule + ?Sized>(s: &Spectrum<'_, M>, n: SubId) -> ClosureTrace {
    let mut chain = vec![n];
    let mut current = n;
    loop {
        let next = z0_closure_step(s, current);
        chain.push(next);
        if next == current {
            break;
        }
        debug_assert!(s.lattice().is_subset(current, next));
        current = next;
    }
    ClosureTrace {
        steps: chain.len() - 1,
        proper: s.lattice().is_proper(current),
        fixpoint: current,
        chain,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub proper: bool,
    pub prime: bool,
    pub minimal_prime: bool,
    pub maximal: bool,
    pub z: bool,
    pub strongly_z: bool,
    pub z0: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub submodule: SubmoduleView,
    pub colon: IdealCanon,
    pub flags: Flags,
    /// Distinct values of `𝔓_x` over `x ∈ N`.
    pub frak_p_images: Vec<HullView>,
}

/// One row per submodule, in lattice order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub rows: Vec<ClassificationRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub chain: Vec<SubmoduleView>,
    pub fixpoint: SubmoduleView,
    pub proper: bool,
    pub steps: usize,
}

impl ClosureTrace {
    pub fn report<M: ConcreteModule + ?Sized>(&self, s: &Spectrum<'_, M>) -> ClosureReport {
        let view = |id: SubId| SubmoduleView::new(s.module(), s.lattice().get(id));
        ClosureReport {
            chain: self.chain.iter().map(|&id| view(id)).collect(),
            fixpoint: view(self.fixpoint),
            proper: self.proper,
            steps: self.steps,
        }
    }
}

/// Elements of `n` as raw ids; handy for tests and witnesses.
pub fn elements_of<M: ConcreteModule + ?Sized>(s: &Spectrum<'_, M>, n: SubId) -> Vec<ElemId> {
    s.lattice().get(n).elements().to_vec()
}
