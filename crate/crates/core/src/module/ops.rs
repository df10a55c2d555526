use fixedbitset::FixedBitSet;

use super::{ConcreteModule, ElemId, Lattice, Submodule, DEFAULT_BOUND};
use crate::error::{Error, Result};
use crate::ring::{IdealCanon, RingElem};

/// `Rx` as a member set.
pub(crate) fn cyclic_members(m: &(impl ConcreteModule + ?Sized), x: ElemId) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(m.order());
    for r in m.ring().elements() {
        out.insert(m.scale(&r, x));
    }
    out
}

pub(crate) fn sumset(m: &(impl ConcreteModule + ?Sized), a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut out = a.clone();
    out.union_with(b);
    for x in a.ones() {
        for y in b.ones() {
            out.insert(m.add(x, y));
        }
    }
    out
}

/// `span + Rx`.
pub(crate) fn adjoin(m: &(impl ConcreteModule + ?Sized), span: &FixedBitSet, x: ElemId) -> FixedBitSet {
    sumset(m, span, &cyclic_members(m, x))
}

fn members_of(m: &(impl ConcreteModule + ?Sized), pred: impl Fn(ElemId) -> bool) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(m.order());
    out.extend((0..m.order()).filter(|&x| pred(x)));
    out
}

/// Smallest submodule containing `gens`. Generators already in the running
/// span are skipped, so the stored witness has no redundant prefix members.
pub fn submodule_generated(m: &(impl ConcreteModule + ?Sized), gens: &[ElemId]) -> Result<Submodule> {
    let mut span = FixedBitSet::with_capacity(m.order());
    span.insert(m.zero());
    let mut witness = Vec::new();
    for &g in gens {
        if g >= m.order() {
            return Err(Error::ForeignElement(format!("index {g}")));
        }
        if !span.contains(g) {
            span = adjoin(m, &span, g);
            witness.push(g);
        }
    }
    Ok(Submodule::from_parts(span, witness))
}

pub fn zero_submodule(m: &(impl ConcreteModule + ?Sized)) -> Submodule {
    submodule_generated(m, &[]).expect("no generators")
}

pub fn whole_module(m: &(impl ConcreteModule + ?Sized)) -> Submodule {
    let gens = m.generators();
    submodule_generated(m, &gens).expect("generators are elements")
}

/// Exhaustive closure check: contains zero, closed under `+` and scalars.
pub fn is_closed(m: &(impl ConcreteModule + ?Sized), n: &Submodule) -> bool {
    if !n.contains(m.zero()) {
        return false;
    }
    let ring: Vec<RingElem> = m.ring().elements().collect();
    n.elements().iter().all(|&a| {
        n.elements().iter().all(|&b| n.contains(m.add(a, b)))
            && ring.iter().all(|r| n.contains(m.scale(r, a)))
    })
}

/// Every submodule of `m`, sorted by (cardinality, element list).
pub fn all_submodules(m: &(impl ConcreteModule + ?Sized), bound: usize) -> Result<Vec<Submodule>> {
    Ok(Lattice::new(m, bound)?.into_submodules())
}

fn ideal_of(m: &(impl ConcreteModule + ?Sized), pred: impl Fn(&RingElem) -> bool) -> IdealCanon {
    let members: Vec<RingElem> = m.ring().elements().filter(|r| pred(r)).collect();
    m.ring()
        .ideal_from_generators(&members)
        .expect("elements come from the ring")
}

/// `(N :_R M) = {r : rM ⊆ N}`.
pub fn colon_ideal_module(m: &(impl ConcreteModule + ?Sized), n: &Submodule) -> IdealCanon {
    let gens = m.generators();
    ideal_of(m, |r| gens.iter().all(|&g| n.contains(m.scale(r, g))))
}

/// `(N :_M r) = {x : rx ∈ N}`.
pub fn colon_submodule_by_scalar(
    m: &(impl ConcreteModule + ?Sized),
    n: &Submodule,
    r: &RingElem,
) -> Submodule {
    Submodule::from_closed(m, members_of(m, |x| n.contains(m.scale(r, x))))
}

pub fn ann_elem(m: &(impl ConcreteModule + ?Sized), x: ElemId) -> IdealCanon {
    ideal_of(m, |r| m.scale(r, x) == m.zero())
}

pub fn ann_submodule(m: &(impl ConcreteModule + ?Sized), n: &Submodule) -> IdealCanon {
    ideal_of(m, |r| n.generators().iter().all(|&g| m.scale(r, g) == m.zero()))
}

/// `(0 :_M I) = {x : Ix = 0}`.
pub fn zero_of_ideal(m: &(impl ConcreteModule + ?Sized), i: &IdealCanon) -> Submodule {
    let g = i.generator(m.ring());
    Submodule::from_closed(m, members_of(m, |x| m.scale(&g, x) == m.zero()))
}

/// `IM`.
pub fn ideal_times_module(m: &(impl ConcreteModule + ?Sized), i: &IdealCanon) -> Submodule {
    let g = i.generator(m.ring());
    let images: Vec<ElemId> = m.generators().iter().map(|&x| m.scale(&g, x)).collect();
    submodule_generated(m, &images).expect("images are elements")
}

/// `NK = (N :_R M)(K :_R M)M`.
pub fn product_submodules(m: &(impl ConcreteModule + ?Sized), n: &Submodule, k: &Submodule) -> Submodule {
    let i = colon_ideal_module(m, n);
    let j = colon_ideal_module(m, k);
    let ij = m.ring().ideal_product(&i, &j).expect("same ring");
    ideal_times_module(m, &ij)
}

/// `N^t`, the `t`-fold product; `t = 0` is treated as 1.
pub fn power_submodule(m: &(impl ConcreteModule + ?Sized), n: &Submodule, t: usize) -> Submodule {
    let mut p = n.clone();
    for _ in 1..t {
        p = product_submodules(m, &p, n);
    }
    p
}

/// Elements `x` with `(Rx)^k = 0` for some `k ≤ |M|`.
///
/// Powers of a fixed submodule are eventually constant, so the search stops
/// once a power repeats.
pub fn nilpotent_elements(m: &(impl ConcreteModule + ?Sized)) -> Vec<ElemId> {
    (0..m.order())
        .filter(|&x| {
            let n = submodule_generated(m, &[x]).expect("element");
            let mut p = n.clone();
            for _ in 0..m.order() {
                if p.len() == 1 {
                    return true;
                }
                let next = product_submodules(m, &p, &n);
                if next == p {
                    return false;
                }
                p = next;
            }
            p.len() == 1
        })
        .collect()
}

/// `T_0(M) = {x : rx = 0 for some r ≠ 0}`.
pub fn torsion_set(m: &(impl ConcreteModule + ?Sized)) -> Vec<ElemId> {
    (0..m.order())
        .filter(|&x| !ann_elem(m, x).is_zero_in(m.ring()))
        .collect()
}

/// `Zd_R(M) = {r : rx = 0 for some x ≠ 0}`.
pub fn zero_divisors_on(m: &(impl ConcreteModule + ?Sized)) -> Vec<RingElem> {
    m.ring()
        .elements()
        .filter(|r| (0..m.order()).any(|x| x != m.zero() && m.scale(r, x) == m.zero()))
        .collect()
}

pub fn is_faithful(m: &(impl ConcreteModule + ?Sized)) -> bool {
    ann_submodule(m, &whole_module(m)).is_zero_in(m.ring())
}

pub fn is_cyclic_submodule(m: &(impl ConcreteModule + ?Sized), n: &Submodule) -> bool {
    n.elements()
        .iter()
        .any(|&g| cyclic_members(m, g).count_ones(..) == n.len())
}

/// Every `(0 :_M Ann(x))` is cyclic.
pub fn has_property_dac(m: &(impl ConcreteModule + ?Sized)) -> bool {
    (0..m.order()).all(|x| is_cyclic_submodule(m, &zero_of_ideal(m, &ann_elem(m, x))))
}

pub fn is_multiplication(m: &(impl ConcreteModule + ?Sized)) -> Result<bool> {
    Ok(Lattice::new(m, DEFAULT_BOUND)?.is_multiplication())
}

pub fn is_comultiplication(m: &(impl ConcreteModule + ?Sized)) -> Result<bool> {
    Ok(Lattice::new(m, DEFAULT_BOUND)?.is_comultiplication())
}

pub fn has_property_t(m: &(impl ConcreteModule + ?Sized)) -> Result<bool> {
    Ok(Lattice::new(m, DEFAULT_BOUND)?.has_property_t())
}
