use fixedbitset::FixedBitSet;

use super::{ann_submodule, whole_module, ConcreteModule, ElemId, ModElem, Submodule};
use crate::error::{Error, Result};
use crate::ring::{IdealCanon, RingElem, RingQuotient, RingSpec};

/// `M/N` as a coset table. Cosets are numbered by their least member, so the
/// representative of each coset is its least element in the parent order.
pub struct QuotientModule<'a, M: ConcreteModule + ?Sized> {
    parent: &'a M,
    kernel: Submodule,
    coset_of: Vec<ElemId>,
    reps: Vec<ElemId>,
}

pub fn quotient_module<'a, M: ConcreteModule + ?Sized>(
    parent: &'a M,
    n: &Submodule,
) -> QuotientModule<'a, M> {
    const UNSET: ElemId = ElemId::MAX;
    let mut coset_of = vec![UNSET; parent.order()];
    let mut reps = Vec::new();
    for x in 0..parent.order() {
        if coset_of[x] != UNSET {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &k in n.elements() {
            coset_of[parent.add(x, k)] = c;
        }
    }
    QuotientModule {
        parent,
        kernel: n.clone(),
        coset_of,
        reps,
    }
}

impl<M: ConcreteModule + ?Sized> QuotientModule<'_, M> {
    pub fn parent(&self) -> &M {
        self.parent
    }

    pub fn kernel(&self) -> &Submodule {
        &self.kernel
    }

    /// `m ↦ m + N`.
    pub fn project(&self, x: ElemId) -> ElemId {
        self.coset_of[x]
    }

    pub fn representative(&self, c: ElemId) -> ElemId {
        self.reps[c]
    }

    /// Preimage in the parent of a member set of the quotient.
    pub fn preimage(&self, members: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.parent.order());
        out.extend((0..self.parent.order()).filter(|&x| members.contains(self.coset_of[x])));
        out
    }

    /// Image in the quotient of a member set of the parent.
    pub fn image(&self, members: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.reps.len());
        out.extend(members.ones().map(|x| self.coset_of[x]));
        out
    }
}

impl<M: ConcreteModule + ?Sized> ConcreteModule for QuotientModule<'_, M> {
    fn ring(&self) -> &RingSpec {
        self.parent.ring()
    }

    fn order(&self) -> usize {
        self.reps.len()
    }

    fn add(&self, a: ElemId, b: ElemId) -> ElemId {
        self.coset_of[self.parent.add(self.reps[a], self.reps[b])]
    }

    fn neg(&self, a: ElemId) -> ElemId {
        self.coset_of[self.parent.neg(self.reps[a])]
    }

    fn scale(&self, r: &RingElem, a: ElemId) -> ElemId {
        self.coset_of[self.parent.scale(r, self.reps[a])]
    }

    fn residues(&self, a: ElemId) -> ModElem {
        self.parent.residues(self.reps[a])
    }

    fn generators(&self) -> Vec<ElemId> {
        let mut gens: Vec<ElemId> = self
            .parent
            .generators()
            .into_iter()
            .map(|g| self.coset_of[g])
            .filter(|&c| c != 0)
            .collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }
}

/// `M` viewed as a module over `R/Ann_R(M)`; the underlying group is unchanged.
pub struct RestrictedModule<'a, M: ConcreteModule + ?Sized> {
    inner: &'a M,
    ring: RingSpec,
    quotient: RingQuotient,
}

pub enum Restricted<'a, M: ConcreteModule + ?Sized> {
    Module(RestrictedModule<'a, M>),
    /// The zero module over the zero ring `R/R`.
    ZeroOverZeroRing,
}

/// Restricts scalars to `R/I`, where `I` must be exactly `Ann_R(M)`.
pub fn restrict_scalars<'a, M: ConcreteModule + ?Sized>(
    m: &'a M,
    i: &IdealCanon,
) -> Result<Restricted<'a, M>> {
    let ann = ann_submodule(m, &whole_module(m));
    if &ann != i {
        return Err(Error::WrongQuotient {
            expected: ann.to_string(),
            got: i.to_string(),
        });
    }
    Ok(match m.ring().quotient_ring(i)? {
        RingQuotient::Zero => Restricted::ZeroOverZeroRing,
        q @ RingQuotient::Ring { .. } => Restricted::Module(RestrictedModule {
            inner: m,
            ring: q.ring().expect("nonzero quotient").clone(),
            quotient: q,
        }),
    })
}

impl<M: ConcreteModule + ?Sized> RestrictedModule<'_, M> {
    pub fn inner(&self) -> &M {
        self.inner
    }
}

impl<M: ConcreteModule + ?Sized> ConcreteModule for RestrictedModule<'_, M> {
    fn ring(&self) -> &RingSpec {
        &self.ring
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn add(&self, a: ElemId, b: ElemId) -> ElemId {
        self.inner.add(a, b)
    }

    fn neg(&self, a: ElemId) -> ElemId {
        self.inner.neg(a)
    }

    fn scale(&self, r: &RingElem, a: ElemId) -> ElemId {
        self.inner.scale(&self.quotient.lift(self.inner.ring(), r), a)
    }

    fn residues(&self, a: ElemId) -> ModElem {
        self.inner.residues(a)
    }

    fn generators(&self) -> Vec<ElemId> {
        self.inner.generators()
    }
}
