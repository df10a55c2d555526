use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::ops::{cyclic_members, sumset};
use super::{ConcreteModule, ElemId, Submodule};
use crate::error::{Error, Result};
use crate::ring::{IdealCanon, RingElem};

/// Largest module the submodule enumeration accepts by default.
pub const DEFAULT_BOUND: usize = 4096;

/// Index of a submodule inside a [`Lattice`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubId(pub usize);

/// The complete submodule lattice of a finite module, with the per-element
/// and per-submodule data every downstream algorithm keeps asking for.
pub struct Lattice<'m, M: ConcreteModule + ?Sized> {
    module: &'m M,
    ring_elems: Vec<RingElem>,
    subs: Vec<Submodule>,
    lookup: HashMap<FixedBitSet, SubId>,
    colons: Vec<IdealCanon>,
    anns: Vec<IdealCanon>,
    cyclic: Vec<SubId>,
    torsion: FixedBitSet,
}

impl<'m, M: ConcreteModule + ?Sized> Lattice<'m, M> {
    /// Enumerates all submodules breadth-first: start at `{0}` and keep
    /// adjoining cyclic submodules not yet contained, deduplicating by
    /// element set.
    pub fn new(module: &'m M, bound: usize) -> Result<Self> {
        let order = module.order();
        if order > bound {
            return Err(Error::ResourceBound { order, bound });
        }
        let ring = module.ring();
        let ring_elems: Vec<RingElem> = ring.elements().collect();

        let mut cyclic_sets: Vec<(ElemId, FixedBitSet)> = Vec::new();
        let mut cyclic_of_elem = Vec::with_capacity(order);
        let mut seen_cyclic: HashMap<FixedBitSet, usize> = HashMap::new();
        for x in 0..order {
            let c = cyclic_members(module, x);
            let idx = *seen_cyclic.entry(c.clone()).or_insert_with(|| {
                cyclic_sets.push((x, c));
                cyclic_sets.len() - 1
            });
            cyclic_of_elem.push(idx);
        }

        let mut zero = FixedBitSet::with_capacity(order);
        zero.insert(module.zero());
        let mut found: HashMap<FixedBitSet, Vec<ElemId>> = HashMap::new();
        found.insert(zero.clone(), Vec::new());
        let mut queue = VecDeque::from([zero]);
        while let Some(s) = queue.pop_front() {
            for (g, c) in &cyclic_sets {
                if c.is_subset(&s) {
                    continue;
                }
                let t = sumset(module, &s, c);
                if !found.contains_key(&t) {
                    let mut gens = found[&s].clone();
                    gens.push(*g);
                    found.insert(t.clone(), gens);
                    queue.push_back(t);
                }
            }
        }
        let mut subs: Vec<Submodule> = found
            .into_iter()
            .map(|(members, gens)| Submodule::from_parts(members, gens))
            .collect();
        subs.sort();
        let lookup: HashMap<FixedBitSet, SubId> = subs
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), SubId(i)))
            .collect();

        let cyclic: Vec<SubId> = cyclic_of_elem
            .iter()
            .map(|&i| lookup[&cyclic_sets[i].1])
            .collect();

        let module_gens = module.generators();
        let colons = subs
            .iter()
            .map(|s| {
                let members: Vec<RingElem> = ring_elems
                    .iter()
                    .filter(|r| module_gens.iter().all(|&g| s.contains(module.scale(r, g))))
                    .cloned()
                    .collect();
                ring.ideal_from_generators(&members).expect("ring elements")
            })
            .collect();
        let anns: Vec<IdealCanon> = (0..order)
            .map(|x| {
                let members: Vec<RingElem> = ring_elems
                    .iter()
                    .filter(|r| module.scale(r, x) == module.zero())
                    .cloned()
                    .collect();
                ring.ideal_from_generators(&members).expect("ring elements")
            })
            .collect();
        let mut torsion = FixedBitSet::with_capacity(order);
        torsion.extend((0..order).filter(|&x| !anns[x].is_zero_in(ring)));

        Ok(Lattice {
            module,
            ring_elems,
            subs,
            lookup,
            colons,
            anns,
            cyclic,
            torsion,
        })
    }

    pub fn module(&self) -> &'m M {
        self.module
    }

    pub fn ring_elems(&self) -> &[RingElem] {
        &self.ring_elems
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.subs
    }

    pub fn into_submodules(self) -> Vec<Submodule> {
        self.subs
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SubId> + '_ {
        (0..self.subs.len()).map(SubId)
    }

    pub fn get(&self, id: SubId) -> &Submodule {
        &self.subs[id.0]
    }

    pub fn bottom(&self) -> SubId {
        SubId(0)
    }

    pub fn top(&self) -> SubId {
        SubId(self.subs.len() - 1)
    }

    pub fn order(&self) -> usize {
        self.module.order()
    }

    pub fn find(&self, members: &FixedBitSet) -> Option<SubId> {
        self.lookup.get(members).copied()
    }

    pub fn id_of(&self, n: &Submodule) -> Option<SubId> {
        self.find(n.members())
    }

    /// Looks up a member set known to be a submodule.
    pub(crate) fn resolve(&self, members: &FixedBitSet) -> SubId {
        self.find(members)
            .expect("member set is closed, so it is in the lattice")
    }

    pub fn is_proper(&self, id: SubId) -> bool {
        id != self.top()
    }

    pub fn is_subset(&self, a: SubId, b: SubId) -> bool {
        self.get(a).is_subset(self.get(b))
    }

    pub fn contains(&self, id: SubId, x: ElemId) -> bool {
        self.get(id).contains(x)
    }

    pub fn meet(&self, a: SubId, b: SubId) -> SubId {
        let mut m = self.get(a).members().clone();
        m.intersect_with(self.get(b).members());
        self.resolve(&m)
    }

    pub fn join(&self, a: SubId, b: SubId) -> SubId {
        self.resolve(&sumset(self.module, self.get(a).members(), self.get(b).members()))
    }

    /// `(N :_R M)`.
    pub fn colon(&self, id: SubId) -> &IdealCanon {
        &self.colons[id.0]
    }

    /// `Ann_R(x)`.
    pub fn ann(&self, x: ElemId) -> &IdealCanon {
        &self.anns[x]
    }

    /// `Rx`.
    pub fn cyclic(&self, x: ElemId) -> SubId {
        self.cyclic[x]
    }

    /// `Ann_R(N)`, intersecting element annihilators over a generating set.
    pub fn ann_of(&self, id: SubId) -> IdealCanon {
        let ring = self.module.ring();
        self.get(id)
            .generators()
            .iter()
            .fold(ring.unit_ideal(), |acc, &g| {
                ring.ideal_intersect(&acc, self.ann(g)).expect("same ring")
            })
    }

    /// `(0 :_M I)`.
    pub fn zero_of(&self, i: &IdealCanon) -> SubId {
        let g = i.generator(self.module.ring());
        let mut m = FixedBitSet::with_capacity(self.order());
        m.extend((0..self.order()).filter(|&x| self.module.scale(&g, x) == self.module.zero()));
        self.resolve(&m)
    }

    /// `IM`.
    pub fn ideal_times(&self, i: &IdealCanon) -> SubId {
        let g = i.generator(self.module.ring());
        let mut m = FixedBitSet::with_capacity(self.order());
        m.extend((0..self.order()).map(|x| self.module.scale(&g, x)));
        self.resolve(&m)
    }

    /// `(N :_M r)`.
    pub fn colon_by_scalar(&self, id: SubId, r: &RingElem) -> SubId {
        let n = self.get(id);
        let mut m = FixedBitSet::with_capacity(self.order());
        m.extend((0..self.order()).filter(|&x| n.contains(self.module.scale(r, x))));
        self.resolve(&m)
    }

    /// `NK = (N :_R M)(K :_R M)M`.
    pub fn product(&self, a: SubId, b: SubId) -> SubId {
        let ij = self
            .module
            .ring()
            .ideal_product(self.colon(a), self.colon(b))
            .expect("same ring");
        self.ideal_times(&ij)
    }

    /// `T_0(M)`.
    pub fn torsion(&self) -> &FixedBitSet {
        &self.torsion
    }

    pub fn is_cyclic(&self, id: SubId) -> bool {
        self.get(id).elements().iter().any(|&g| self.cyclic(g) == id)
    }

    pub fn is_multiplication(&self) -> bool {
        self.ids().all(|n| self.ideal_times(self.colon(n)) == n)
    }

    pub fn is_comultiplication(&self) -> bool {
        self.ids().all(|n| self.zero_of(&self.ann_of(n)) == n)
    }

    pub fn is_faithful(&self) -> bool {
        self.colon(self.bottom()).is_zero_in(self.module.ring())
    }

    pub fn has_property_dac(&self) -> bool {
        (0..self.order()).all(|x| self.is_cyclic(self.zero_of(self.ann(x))))
    }

    /// Every submodule inside `T_0(M)` has a nonzero annihilator.
    pub fn has_property_t(&self) -> bool {
        let ring = self.module.ring();
        self.ids()
            .filter(|&n| self.get(n).members().is_subset(&self.torsion))
            .all(|n| !self.ann_of(n).is_zero_in(ring))
    }

    /// Ids of submodules containing `n`.
    pub fn above(&self, n: SubId) -> impl Iterator<Item = SubId> + '_ {
        self.ids().filter(move |&k| self.is_subset(n, k))
    }

    /// Ids of submodules contained in `n`.
    pub fn below(&self, n: SubId) -> impl Iterator<Item = SubId> + '_ {
        self.ids().filter(move |&k| self.is_subset(k, n))
    }
}
