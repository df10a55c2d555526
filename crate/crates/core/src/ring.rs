//! Finite product rings `Z_{n1} x ... x Z_{nk}` and their ideal lattices.
//!
//! Every ideal of such a ring is a product of principal ideals `d_i Z_{n_i}`
//! with `d_i | n_i`, so ideals are stored canonically as divisor tuples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// A finite commutative ring `Z_{n1} x ... x Z_{nk}` with identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RingSpec {
    moduli: Vec<u32>,
}

/// An element of a [`RingSpec`], stored as its residue tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElem {
    pub residues: Vec<u32>,
}

/// The ideal `d_1 Z_{n_1} x ... x d_k Z_{n_k}`.
///
/// `(1, ..., 1)` is the whole ring and `(n_1, ..., n_k)` the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdealCanon {
    pub divisors: Vec<u32>,
}

/// Result of an intersection over a possibly empty family of ideals.
///
/// An empty family yields [`RingHull::WholeRing`] rather than the unit ideal so
/// that containment tests against it can never pass by accident.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingHull {
    Ideal(IdealCanon),
    WholeRing,
}

impl RingHull {
    /// `self ⊆ ideal`; the whole-ring marker is contained only in the unit ideal.
    pub fn is_subset_of(&self, ideal: &IdealCanon) -> bool {
        match self {
            RingHull::Ideal(i) => i.is_subset_of(ideal),
            RingHull::WholeRing => ideal.is_whole(),
        }
    }
}

/// `R/I` together with the data needed to project elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingQuotient {
    Ring {
        ring: RingSpec,
        /// Components of the source ring that survive (divisor > 1).
        kept: Vec<usize>,
    },
    /// `R/R`, the zero ring.
    Zero,
}

impl RingQuotient {
    pub fn ring(&self) -> Option<&RingSpec> {
        match self {
            RingQuotient::Ring { ring, .. } => Some(ring),
            RingQuotient::Zero => None,
        }
    }

    /// Image of `a` in the quotient, `None` for the zero ring.
    pub fn project(&self, a: &RingElem) -> Option<RingElem> {
        match self {
            RingQuotient::Ring { ring, kept } => Some(RingElem {
                residues: kept
                    .iter()
                    .zip(ring.moduli())
                    .map(|(&c, &d)| a.residues[c] % d)
                    .collect(),
            }),
            RingQuotient::Zero => None,
        }
    }

    /// Canonical preimage: residues are reused as-is, dropped components are 0.
    pub fn lift(&self, source: &RingSpec, a: &RingElem) -> RingElem {
        let mut residues = vec![0; source.components()];
        if let RingQuotient::Ring { kept, .. } = self {
            for (&c, &r) in kept.iter().zip(&a.residues) {
                residues[c] = r;
            }
        }
        RingElem { residues }
    }
}

impl RingSpec {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidRing("no components".into()));
        }
        if let Some(bad) = moduli.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidRing(format!("modulus {bad} is below 2")));
        }
        Ok(RingSpec { moduli })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn components(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&n| n as usize).product()
    }

    /// Element with the given index in lexicographic residue order.
    pub fn elem(&self, mut idx: usize) -> RingElem {
        let mut residues = vec![0; self.moduli.len()];
        for (slot, &n) in residues.iter_mut().zip(&self.moduli).rev() {
            *slot = (idx % n as usize) as u32;
            idx /= n as usize;
        }
        RingElem { residues }
    }

    pub fn index_of(&self, a: &RingElem) -> usize {
        a.residues
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&r, &n)| acc * n as usize + r as usize)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.order()).map(|i| self.elem(i))
    }

    pub fn zero(&self) -> RingElem {
        RingElem {
            residues: vec![0; self.moduli.len()],
        }
    }

    pub fn one(&self) -> RingElem {
        RingElem {
            residues: vec![1; self.moduli.len()],
        }
    }

    pub fn contains(&self, a: &RingElem) -> bool {
        a.residues.len() == self.moduli.len() && a.residues.iter().zip(&self.moduli).all(|(&r, &n)| r < n)
    }

    fn check(&self, a: &RingElem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::MismatchedRing(self.to_string()))
        }
    }

    fn check_ideal(&self, i: &IdealCanon) -> Result<()> {
        let ok = i.divisors.len() == self.moduli.len()
            && i.divisors
                .iter()
                .zip(&self.moduli)
                .all(|(&d, &n)| d >= 1 && n % d == 0);
        if ok {
            Ok(())
        } else {
            Err(Error::MismatchedRing(self.to_string()))
        }
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> Result<RingElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.zip_with(a, b, |x, y, n| (x + y) % n))
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> Result<RingElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.zip_with(a, b, |x, y, n| (x * y) % n))
    }

    pub fn neg(&self, a: &RingElem) -> Result<RingElem> {
        self.check(a)?;
        Ok(RingElem {
            residues: a
                .residues
                .iter()
                .zip(&self.moduli)
                .map(|(&r, &n)| (n - r) % n)
                .collect(),
        })
    }

    pub(crate) fn mul_unchecked(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.zip_with(a, b, |x, y, n| (x * y) % n)
    }

    fn zip_with(&self, a: &RingElem, b: &RingElem, f: impl Fn(u64, u64, u64) -> u64) -> RingElem {
        RingElem {
            residues: a
                .residues
                .iter()
                .zip(&b.residues)
                .zip(&self.moduli)
                .map(|((&x, &y), &n)| f(x as u64, y as u64, n as u64) as u32)
                .collect(),
        }
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        a.residues.iter().all(|&r| r == 0)
    }

    pub fn ideal(&self, divisors: Vec<u32>) -> Result<IdealCanon> {
        let i = IdealCanon { divisors };
        self.check_ideal(&i)?;
        Ok(i)
    }

    pub fn zero_ideal(&self) -> IdealCanon {
        IdealCanon {
            divisors: self.moduli.clone(),
        }
    }

    pub fn unit_ideal(&self) -> IdealCanon {
        IdealCanon {
            divisors: vec![1; self.moduli.len()],
        }
    }

    /// Every ideal of the ring, ordered lexicographically by divisor tuple.
    pub fn all_ideals(&self) -> Vec<IdealCanon> {
        let mut out = vec![Vec::new()];
        for &n in &self.moduli {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    divisors(n).into_iter().map(move |d| {
                        let mut v = prefix.clone();
                        v.push(d);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|divisors| IdealCanon { divisors }).collect()
    }

    /// Divisor `i` is `gcd(n_i, residues_i)`; the empty list gives the zero ideal.
    pub fn ideal_from_generators(&self, gens: &[RingElem]) -> Result<IdealCanon> {
        let mut divisors = self.moduli.clone();
        for g in gens {
            self.check(g)?;
            for (d, &r) in divisors.iter_mut().zip(&g.residues) {
                *d = gcd(*d as u64, r as u64) as u32;
            }
        }
        Ok(IdealCanon { divisors })
    }

    /// The elements of `i`, in lexicographic order.
    pub fn ideal_elements(&self, i: &IdealCanon) -> Vec<RingElem> {
        self.elements().filter(|a| i.contains(a)).collect()
    }

    pub fn ideal_sum(&self, i: &IdealCanon, j: &IdealCanon) -> Result<IdealCanon> {
        self.check_ideal(i)?;
        self.check_ideal(j)?;
        Ok(self.zip_ideals(i, j, |a, b, _| gcd(a, b)))
    }

    pub fn ideal_intersect(&self, i: &IdealCanon, j: &IdealCanon) -> Result<IdealCanon> {
        self.check_ideal(i)?;
        self.check_ideal(j)?;
        Ok(self.zip_ideals(i, j, |a, b, _| a / gcd(a, b) * b))
    }

    pub fn ideal_product(&self, i: &IdealCanon, j: &IdealCanon) -> Result<IdealCanon> {
        self.check_ideal(i)?;
        self.check_ideal(j)?;
        Ok(self.zip_ideals(i, j, |a, b, n| gcd(a * b, n)))
    }

    /// `(i : j) = {r : r j ⊆ i}`. Per component this is `d / gcd(d, e)`,
    /// which the test suite checks against an exhaustive search.
    pub fn colon_ideal(&self, i: &IdealCanon, j: &IdealCanon) -> Result<IdealCanon> {
        self.check_ideal(i)?;
        self.check_ideal(j)?;
        Ok(self.zip_ideals(i, j, |d, e, _| d / gcd(d, e)))
    }

    fn zip_ideals(&self, i: &IdealCanon, j: &IdealCanon, f: impl Fn(u64, u64, u64) -> u64) -> IdealCanon {
        IdealCanon {
            divisors: i
                .divisors
                .iter()
                .zip(&j.divisors)
                .zip(&self.moduli)
                .map(|((&a, &b), &n)| f(a as u64, b as u64, n as u64) as u32)
                .collect(),
        }
    }

    /// Exhaustive primality: proper, and `ab ∈ I` forces `a ∈ I` or `b ∈ I`.
    pub fn is_prime_ideal(&self, i: &IdealCanon) -> bool {
        if i.is_whole() {
            return false;
        }
        let elems: Vec<RingElem> = self.elements().collect();
        for a in elems.iter().filter(|a| !i.contains(a)) {
            for b in elems.iter().filter(|b| !i.contains(b)) {
                if i.contains(&self.mul_unchecked(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn prime_ideals(&self) -> Vec<IdealCanon> {
        self.all_ideals()
            .into_iter()
            .filter(|i| self.is_prime_ideal(i))
            .collect()
    }

    pub fn maximal_ideals(&self) -> Vec<IdealCanon> {
        let proper: Vec<IdealCanon> = self.all_ideals().into_iter().filter(|i| !i.is_whole()).collect();
        proper
            .iter()
            .filter(|i| !proper.iter().any(|j| j != *i && i.is_subset_of(j)))
            .cloned()
            .collect()
    }

    /// Inclusion-minimal prime ideals containing `i`.
    pub fn minimal_primes_over(&self, i: &IdealCanon) -> Vec<IdealCanon> {
        let over: Vec<IdealCanon> = self
            .prime_ideals()
            .into_iter()
            .filter(|p| i.is_subset_of(p))
            .collect();
        minimal_members(&over)
    }

    pub fn minimal_prime_ideals(&self) -> Vec<IdealCanon> {
        self.minimal_primes_over(&self.zero_ideal())
    }

    /// Intersection of the minimal primes containing `a`.
    pub fn frak_p(&self, a: &RingElem) -> Result<RingHull> {
        self.check(a)?;
        Ok(self
            .minimal_prime_ideals()
            .into_iter()
            .filter(|p| p.contains(a))
            .reduce(|x, y| self.zip_ideals(&x, &y, |a, b, _| a / gcd(a, b) * b))
            .map_or(RingHull::WholeRing, RingHull::Ideal))
    }

    pub fn is_z0_ideal(&self, i: &IdealCanon) -> Result<bool> {
        self.check_ideal(i)?;
        if i.is_whole() {
            return Err(Error::NotProper(format!("ideal {i} is the whole ring")));
        }
        for a in self.ideal_elements(i) {
            if !self.frak_p(&a)?.is_subset_of(i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_z_ideal(&self, i: &IdealCanon) -> Result<bool> {
        self.check_ideal(i)?;
        if i.is_whole() {
            return Err(Error::NotProper(format!("ideal {i} is the whole ring")));
        }
        let maximal = self.maximal_ideals();
        let profile = |a: &RingElem| -> Vec<bool> { maximal.iter().map(|m| m.contains(a)).collect() };
        let inside: Vec<Vec<bool>> = self.ideal_elements(i).iter().map(profile).collect();
        Ok(self
            .elements()
            .filter(|b| !i.contains(b))
            .all(|b| !inside.contains(&profile(&b))))
    }

    pub fn are_coprime(&self, i: &IdealCanon, j: &IdealCanon) -> Result<bool> {
        Ok(self.ideal_sum(i, j)?.is_whole())
    }

    /// `R/I ≅ Z_{d_1} x ... x Z_{d_k}` with trivial components dropped.
    pub fn quotient_ring(&self, i: &IdealCanon) -> Result<RingQuotient> {
        self.check_ideal(i)?;
        let kept: Vec<usize> = (0..self.components()).filter(|&c| i.divisors[c] > 1).collect();
        if kept.is_empty() {
            return Ok(RingQuotient::Zero);
        }
        let ring = RingSpec::new(kept.iter().map(|&c| i.divisors[c]).collect())?;
        Ok(RingQuotient::Ring { ring, kept })
    }
}

/// Members of `family` that strictly contain no other member.
fn minimal_members(family: &[IdealCanon]) -> Vec<IdealCanon> {
    family
        .iter()
        .filter(|p| !family.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect()
}

impl IdealCanon {
    pub fn contains(&self, a: &RingElem) -> bool {
        a.residues.iter().zip(&self.divisors).all(|(&r, &d)| r % d == 0)
    }

    pub fn is_whole(&self) -> bool {
        self.divisors.iter().all(|&d| d == 1)
    }

    pub fn is_zero_in(&self, ring: &RingSpec) -> bool {
        self.divisors == ring.moduli
    }

    pub fn is_subset_of(&self, other: &IdealCanon) -> bool {
        self.divisors
            .iter()
            .zip(&other.divisors)
            .all(|(&a, &b)| a % b == 0)
    }

    /// The single generator `(d_1 mod n_1, ..., d_k mod n_k)`.
    pub fn generator(&self, ring: &RingSpec) -> RingElem {
        RingElem {
            residues: self
                .divisors
                .iter()
                .zip(ring.moduli())
                .map(|(&d, &n)| d % n)
                .collect(),
        }
    }
}

impl TryFrom<Vec<u32>> for RingSpec {
    type Error = Error;

    fn try_from(moduli: Vec<u32>) -> Result<Self> {
        RingSpec::new(moduli)
    }
}

impl From<RingSpec> for Vec<u32> {
    fn from(r: RingSpec) -> Self {
        r.moduli
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.moduli.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[u32]) -> fmt::Result {
    if let [x] = v {
        return write!(f, "{x}");
    }
    f.write_str("(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.residues)
    }
}

impl fmt::Display for IdealCanon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.divisors)?;
        f.write_str("R")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> RingSpec {
        RingSpec::cyclic(n).unwrap()
    }

    fn e(v: &[u32]) -> RingElem {
        RingElem { residues: v.to_vec() }
    }

    fn id(v: &[u32]) -> IdealCanon {
        IdealCanon { divisors: v.to_vec() }
    }

    /// Ideal closure of a generator set by saturating under + and ·.
    fn brute_ideal(ring: &RingSpec, gens: &[RingElem]) -> Vec<RingElem> {
        let mut set = vec![ring.zero()];
        set.extend(gens.iter().cloned());
        loop {
            let mut next = set.clone();
            for a in &set {
                for b in &set {
                    next.push(ring.add(a, b).unwrap());
                }
                for r in ring.elements() {
                    next.push(ring.mul(&r, a).unwrap());
                }
            }
            next.sort();
            next.dedup();
            if next == set {
                return set;
            }
            set = next;
        }
    }

    #[test]
    fn element_arithmetic() {
        assert_eq!(z(6).add(&e(&[4]), &e(&[5])).unwrap(), e(&[3]));
        assert_eq!(z(6).mul(&e(&[2]), &e(&[3])).unwrap(), e(&[0]));
        let r = RingSpec::new(vec![4, 6]).unwrap();
        assert_eq!(r.mul(&e(&[3, 5]), &e(&[2, 2])).unwrap(), e(&[2, 4]));
        assert_eq!(z(6).neg(&e(&[2])).unwrap(), e(&[4]));
        assert!(matches!(
            z(6).add(&e(&[1]), &e(&[1, 1])),
            Err(Error::MismatchedRing(_))
        ));
        assert!(z(6).add(&e(&[6]), &e(&[1])).is_err());
    }

    #[test]
    fn invalid_ring_specs() {
        assert!(RingSpec::new(vec![]).is_err());
        assert!(RingSpec::new(vec![6, 1]).is_err());
    }

    #[test]
    fn generators_canonicalize() {
        let r6 = z(6);
        assert_eq!(r6.ideal_from_generators(&[e(&[2]), e(&[4])]).unwrap(), id(&[2]));
        let brute = brute_ideal(&r6, &[e(&[2]), e(&[4])]);
        assert_eq!(brute, r6.ideal_elements(&id(&[2])));
        assert_eq!(r6.ideal_from_generators(&[]).unwrap(), id(&[6]));
        let r46 = RingSpec::new(vec![4, 6]).unwrap();
        let i = r46.ideal_from_generators(&[e(&[2, 3])]).unwrap();
        assert_eq!(i, id(&[2, 3]));
        assert_eq!(brute_ideal(&r46, &[e(&[2, 3])]), r46.ideal_elements(&i));
    }

    #[test]
    fn lattice_operations() {
        let r6 = z(6);
        assert!(r6.ideal_sum(&id(&[2]), &id(&[3])).unwrap().is_whole());
        assert_eq!(r6.ideal_product(&id(&[2]), &id(&[3])).unwrap(), id(&[6]));
        assert_eq!(z(12).ideal_intersect(&id(&[4]), &id(&[6])).unwrap(), id(&[12]));
        assert!(r6.ideal_sum(&id(&[2]), &id(&[2, 1])).is_err());
    }

    #[test]
    fn colon_examples() {
        let r6 = z(6);
        assert_eq!(r6.colon_ideal(&id(&[6]), &id(&[2])).unwrap(), id(&[3]));
        assert!(r6.colon_ideal(&id(&[2]), &id(&[6])).unwrap().is_whole());
        assert!(z(4).colon_ideal(&id(&[2]), &id(&[2])).unwrap().is_whole());
    }

    #[test]
    fn colon_matches_exhaustive_search() {
        for ring in [
            z(12),
            z(8),
            RingSpec::new(vec![4, 6]).unwrap(),
            RingSpec::new(vec![9, 2]).unwrap(),
        ] {
            let ideals = ring.all_ideals();
            for i in &ideals {
                for j in &ideals {
                    let jel = ring.ideal_elements(j);
                    let brute: Vec<RingElem> = ring
                        .elements()
                        .filter(|r| jel.iter().all(|b| i.contains(&ring.mul(r, b).unwrap())))
                        .collect();
                    let fast = ring.colon_ideal(i, j).unwrap();
                    assert_eq!(ring.ideal_elements(&fast), brute, "({i} : {j}) in {ring}");
                }
            }
        }
    }

    #[test]
    fn primes_and_minimal_primes() {
        assert_eq!(z(6).minimal_prime_ideals(), vec![id(&[2]), id(&[3])]);
        assert_eq!(z(4).minimal_prime_ideals(), vec![id(&[2])]);
        assert!(!z(6).is_prime_ideal(&id(&[6])));
        assert!(!z(6).is_prime_ideal(&id(&[1])));
        assert_eq!(z(12).maximal_ideals(), vec![id(&[2]), id(&[3])]);
        let r = RingSpec::new(vec![2, 2]).unwrap();
        assert_eq!(r.minimal_prime_ideals(), vec![id(&[1, 2]), id(&[2, 1])]);
    }

    #[test]
    fn frak_p_values() {
        let r6 = z(6);
        assert_eq!(r6.frak_p(&e(&[2])).unwrap(), RingHull::Ideal(id(&[2])));
        assert_eq!(r6.frak_p(&e(&[0])).unwrap(), RingHull::Ideal(id(&[6])));
        assert_eq!(r6.frak_p(&e(&[1])).unwrap(), RingHull::WholeRing);
    }

    #[test]
    fn z0_and_z_ideals() {
        assert!(z(6).is_z0_ideal(&id(&[2])).unwrap());
        assert!(!z(4).is_z0_ideal(&id(&[4])).unwrap());
        assert!(z(6).is_z0_ideal(&id(&[6])).unwrap());
        assert!(z(6).is_z0_ideal(&id(&[1])).is_err());
        assert!(z(6).is_z_ideal(&id(&[2])).unwrap());
        // 0 and 2 share the maximal ideal 2Z_4.
        assert!(!z(4).is_z_ideal(&id(&[4])).unwrap());
    }

    #[test]
    fn coprimality() {
        assert!(z(6).are_coprime(&id(&[2]), &id(&[3])).unwrap());
        assert!(!z(4).are_coprime(&id(&[2]), &id(&[2])).unwrap());
        assert!(z(6).are_coprime(&id(&[6]), &id(&[1])).unwrap());
    }

    #[test]
    fn quotients() {
        let q = z(6).quotient_ring(&id(&[3])).unwrap();
        assert_eq!(q.ring(), Some(&z(3)));
        assert_eq!(q.project(&e(&[5])), Some(e(&[2])));

        let r46 = RingSpec::new(vec![4, 6]).unwrap();
        let q = r46.quotient_ring(&id(&[1, 2])).unwrap();
        assert_eq!(q.ring(), Some(&z(2)));
        let target = q.ring().unwrap().clone();
        for a in r46.elements() {
            for b in r46.elements() {
                let pa = q.project(&a).unwrap();
                let pb = q.project(&b).unwrap();
                assert_eq!(
                    q.project(&r46.add(&a, &b).unwrap()).unwrap(),
                    target.add(&pa, &pb).unwrap()
                );
                assert_eq!(
                    q.project(&r46.mul(&a, &b).unwrap()).unwrap(),
                    target.mul(&pa, &pb).unwrap()
                );
            }
        }
        assert_eq!(q.project(&r46.one()), Some(target.one()));

        let q = z(6).quotient_ring(&id(&[6])).unwrap();
        assert_eq!(q.ring(), Some(&z(6)));
        assert_eq!(q.project(&e(&[5])), Some(e(&[5])));
        assert_eq!(z(6).quotient_ring(&id(&[1])).unwrap(), RingQuotient::Zero);
    }

    #[test]
    fn lattice_laws_and_round_trip() {
        for ring in [
            z(12),
            z(30),
            RingSpec::new(vec![4, 6]).unwrap(),
            RingSpec::new(vec![8, 9]).unwrap(),
        ] {
            let ideals = ring.all_ideals();
            for i in &ideals {
                assert_eq!(&ring.ideal_from_generators(&ring.ideal_elements(i)).unwrap(), i);
                assert_eq!(&ring.ideal_sum(i, i).unwrap(), i);
                assert_eq!(&ring.ideal_intersect(i, i).unwrap(), i);
                for j in &ideals {
                    assert_eq!(ring.ideal_sum(i, j).unwrap(), ring.ideal_sum(j, i).unwrap());
                    assert_eq!(
                        ring.ideal_intersect(i, j).unwrap(),
                        ring.ideal_intersect(j, i).unwrap()
                    );
                    // colon is the largest K with K·J ⊆ I
                    let c = ring.colon_ideal(i, j).unwrap();
                    for k in &ideals {
                        let kj = ring.ideal_product(k, j).unwrap();
                        assert_eq!(kj.is_subset_of(i), k.is_subset_of(&c));
                    }
                    for k in &ideals {
                        let s = |a: &IdealCanon, b: &IdealCanon| ring.ideal_sum(a, b).unwrap();
                        let m = |a: &IdealCanon, b: &IdealCanon| ring.ideal_intersect(a, b).unwrap();
                        let p = |a: &IdealCanon, b: &IdealCanon| ring.ideal_product(a, b).unwrap();
                        assert_eq!(s(&s(i, j), k), s(i, &s(j, k)));
                        assert_eq!(m(&m(i, j), k), m(i, &m(j, k)));
                        assert_eq!(p(i, &s(j, k)), s(&p(i, j), &p(i, k)));
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_primes_are_sound() {
        for ring in [z(12), z(30), RingSpec::new(vec![4, 6]).unwrap()] {
            for i in ring.all_ideals() {
                let mins = ring.minimal_primes_over(&i);
                for p in &mins {
                    assert!(ring.is_prime_ideal(p));
                    assert!(i.is_subset_of(p));
                    assert!(!mins.iter().any(|q| q != p && q.is_subset_of(p)));
                }
            }
            for a in ring.elements() {
                if let RingHull::Ideal(pa) = ring.frak_p(&a).unwrap() {
                    assert!(ring.is_z0_ideal(&pa).unwrap());
                }
            }
        }
    }
}
