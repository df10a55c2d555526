//! Finite modules over [`RingSpec`] rings.
//!
//! Algorithms address module elements by index (`ElemId`). Every
//! [`ConcreteModule`] numbers its elements so that index 0 is zero and index
//! order agrees with the lexicographic order of residue tuples; this global
//! order fixes every "pick a representative" step.

mod lattice;
mod ops;
mod quotient;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{RingElem, RingSpec};

pub use lattice::{Lattice, SubId, DEFAULT_BOUND};
pub use ops::*;
pub use quotient::{quotient_module, restrict_scalars, QuotientModule, Restricted, RestrictedModule};

pub type ElemId = usize;

/// Abstract finite module: everything the lattice and spectrum code needs.
pub trait ConcreteModule: Sync {
    fn ring(&self) -> &RingSpec;
    fn order(&self) -> usize;
    fn add(&self, a: ElemId, b: ElemId) -> ElemId;
    fn neg(&self, a: ElemId) -> ElemId;
    fn scale(&self, r: &RingElem, a: ElemId) -> ElemId;
    /// Residue tuple used for display and serialization.
    fn residues(&self, a: ElemId) -> ModElem;

    fn zero(&self) -> ElemId {
        0
    }

    /// A generating set, chosen greedily in element order.
    fn generators(&self) -> Vec<ElemId> {
        let mut span = FixedBitSet::with_capacity(self.order());
        span.insert(self.zero());
        let mut gens = Vec::new();
        for x in 0..self.order() {
            if !span.contains(x) {
                span = ops::adjoin(self, &span, x);
                gens.push(x);
            }
        }
        gens
    }
}

/// Element of a module, as a flat residue tuple grouped by ring component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModElem {
    pub residues: Vec<u32>,
}

impl fmt::Display for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.residues.as_slice() {
            [] => f.write_str("0"),
            [x] => write!(f, "{x}"),
            xs => {
                f.write_str("(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Direct sum of cyclic groups, one list of orders per ring component.
///
/// Component `i` of the ring acts on its own cyclic summands by integer
/// multiplication; every order divides the component's modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    ring: RingSpec,
    orders: Vec<Vec<u32>>,
    coords: Vec<(usize, u32)>,
    order: usize,
}

impl ModuleSpec {
    /// Orders equal to 1 are dropped, so `Z_1` summands collapse to nothing.
    pub fn new(ring: RingSpec, orders: Vec<Vec<u32>>) -> Result<Self> {
        if orders.len() != ring.components() {
            return Err(Error::InvalidModule(format!(
                "{} order lists for {} ring components",
                orders.len(),
                ring.components()
            )));
        }
        let orders: Vec<Vec<u32>> = orders
            .into_iter()
            .map(|v| v.into_iter().filter(|&o| o != 1).collect())
            .collect();
        let mut coords = Vec::new();
        for (c, (list, &n)) in orders.iter().zip(ring.moduli()).enumerate() {
            for &o in list {
                if o == 0 || n % o != 0 {
                    return Err(Error::InvalidModule(format!(
                        "order {o} does not divide modulus {n}"
                    )));
                }
                coords.push((c, o));
            }
        }
        let order = coords
            .iter()
            .try_fold(1usize, |acc, &(_, o)| acc.checked_mul(o as usize))
            .ok_or_else(|| Error::InvalidModule("module order overflows".into()))?;
        Ok(ModuleSpec {
            ring,
            orders,
            coords,
            order,
        })
    }

    /// The ring as a module over itself.
    pub fn regular(ring: RingSpec) -> Self {
        let orders = ring.moduli().iter().map(|&n| vec![n]).collect();
        Self::new(ring, orders).expect("regular module is valid")
    }

    pub fn orders(&self) -> &[Vec<u32>] {
        &self.orders
    }

    pub fn is_zero_module(&self) -> bool {
        self.order == 1
    }

    pub fn index_of(&self, m: &ModElem) -> Result<ElemId> {
        if m.residues.len() != self.coords.len()
            || m.residues.iter().zip(&self.coords).any(|(&r, &(_, o))| r >= o)
        {
            return Err(Error::ForeignElement(m.to_string()));
        }
        Ok(self.encode(&m.residues))
    }

    fn decode(&self, mut idx: ElemId) -> Vec<u32> {
        let mut out = vec![0; self.coords.len()];
        for (slot, &(_, o)) in out.iter_mut().zip(&self.coords).rev() {
            *slot = (idx % o as usize) as u32;
            idx /= o as usize;
        }
        out
    }

    fn encode(&self, residues: &[u32]) -> ElemId {
        residues
            .iter()
            .zip(&self.coords)
            .fold(0, |acc, (&r, &(_, o))| acc * o as usize + r as usize)
    }
}

impl ConcreteModule for ModuleSpec {
    fn ring(&self) -> &RingSpec {
        &self.ring
    }

    fn order(&self) -> usize {
        self.order
    }

    fn add(&self, a: ElemId, b: ElemId) -> ElemId {
        let (x, y) = (self.decode(a), self.decode(b));
        let sum: Vec<u32> = x
            .iter()
            .zip(&y)
            .zip(&self.coords)
            .map(|((&p, &q), &(_, o))| (p + q) % o)
            .collect();
        self.encode(&sum)
    }

    fn neg(&self, a: ElemId) -> ElemId {
        let x = self.decode(a);
        let neg: Vec<u32> = x
            .iter()
            .zip(&self.coords)
            .map(|(&p, &(_, o))| (o - p) % o)
            .collect();
        self.encode(&neg)
    }

    fn scale(&self, r: &RingElem, a: ElemId) -> ElemId {
        let x = self.decode(a);
        let out: Vec<u32> = x
            .iter()
            .zip(&self.coords)
            .map(|(&p, &(c, o))| ((r.residues[c] as u64 * p as u64) % o as u64) as u32)
            .collect();
        self.encode(&out)
    }

    fn residues(&self, a: ElemId) -> ModElem {
        ModElem {
            residues: self.decode(a),
        }
    }

    fn generators(&self) -> Vec<ElemId> {
        (0..self.coords.len())
            .map(|i| {
                let mut v = vec![0; self.coords.len()];
                v[i] = 1;
                self.encode(&v)
            })
            .collect()
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.ring)?;
        for (i, list) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            if list.is_empty() {
                f.write_str("0")?;
            }
            for (j, o) in list.iter().enumerate() {
                if j > 0 {
                    f.write_str("+")?;
                }
                write!(f, "Z{o}")?;
            }
        }
        Ok(())
    }
}

/// A submodule as a canonical sorted element set plus a generator witness.
///
/// Equality, hashing and ordering look only at the element set; the order is
/// by cardinality, then lexicographically by element list.
#[derive(Clone, Debug)]
pub struct Submodule {
    elements: Vec<ElemId>,
    generators: Vec<ElemId>,
    members: FixedBitSet,
}

impl Submodule {
    pub(crate) fn from_parts(members: FixedBitSet, generators: Vec<ElemId>) -> Self {
        let elements = members.ones().collect();
        Submodule {
            elements,
            generators,
            members,
        }
    }

    /// Wraps an element set already known to be closed, computing generators.
    pub(crate) fn from_closed(m: &(impl ConcreteModule + ?Sized), members: FixedBitSet) -> Self {
        let mut span = FixedBitSet::with_capacity(m.order());
        span.insert(m.zero());
        let mut gens = Vec::new();
        for x in members.ones() {
            if !span.contains(x) {
                span = ops::adjoin(m, &span, x);
                gens.push(x);
            }
        }
        debug_assert_eq!(span, members);
        Submodule::from_parts(members, gens)
    }

    pub fn elements(&self) -> &[ElemId] {
        &self.elements
    }

    pub fn generators(&self) -> &[ElemId] {
        &self.generators
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Never true: a submodule always contains zero.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_in(&self, m: &(impl ConcreteModule + ?Sized)) -> bool {
        self.len() < m.order()
    }

    pub fn residues(&self, m: &(impl ConcreteModule + ?Sized)) -> Vec<ModElem> {
        self.elements.iter().map(|&x| m.residues(x)).collect()
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
