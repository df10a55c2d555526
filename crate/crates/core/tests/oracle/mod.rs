//! Naive reference model: elements are residue tuples, submodules are
//! `BTreeSet`s, and every notion is evaluated straight from its definition.
//! Shares no code with the library beyond the instance description.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Elem = Vec<u32>;
pub type Set = BTreeSet<Elem>;

pub struct Oracle {
    pub moduli: Vec<u32>,
    /// `(ring component, order)` per cyclic summand.
    pub summands: Vec<(usize, u32)>,
    pub elems: Vec<Elem>,
    pub scalars: Vec<Elem>,
}

fn tuples(radix: &[u32]) -> Vec<Elem> {
    let mut out = vec![Vec::new()];
    for &n in radix {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

impl Oracle {
    pub fn new(moduli: &[u32], orders: &[Vec<u32>]) -> Self {
        let summands: Vec<(usize, u32)> = orders
            .iter()
            .enumerate()
            .flat_map(|(c, list)| list.iter().filter(|&&o| o > 1).map(move |&o| (c, o)))
            .collect();
        let radix: Vec<u32> = summands.iter().map(|&(_, o)| o).collect();
        Oracle {
            moduli: moduli.to_vec(),
            elems: tuples(&radix),
            scalars: tuples(moduli),
            summands,
        }
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.summands.len()]
    }

    pub fn whole(&self) -> Set {
        self.elems.iter().cloned().collect()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter()
            .zip(b)
            .zip(&self.summands)
            .map(|((x, y), &(_, o))| (x + y) % o)
            .collect()
    }

    pub fn scale(&self, r: &Elem, a: &Elem) -> Elem {
        a.iter()
            .zip(&self.summands)
            .map(|(x, &(c, o))| (r[c] as u64 * *x as u64 % o as u64) as u32)
            .collect()
    }

    fn ring_mul(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((x, y), n)| (x * y) % n)
            .collect()
    }

    fn is_zero_scalar(&self, r: &Elem) -> bool {
        r.iter().all(|&v| v == 0)
    }

    /// Smallest set containing `gens` and `0`, closed under `+` and scaling.
    pub fn span(&self, gens: &Set) -> Set {
        let mut set: Set = gens.clone();
        set.insert(self.zero());
        loop {
            let mut next = set.clone();
            for a in &set {
                for r in &self.scalars {
                    next.insert(self.scale(r, a));
                }
                for b in &set {
                    next.insert(self.add(a, b));
                }
            }
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }

    pub fn cyclic(&self, x: &Elem) -> Set {
        self.span(&[x.clone()].into_iter().collect())
    }

    pub fn submodules(&self) -> Vec<Set> {
        let mut found: BTreeSet<Set> = BTreeSet::new();
        let mut queue = vec![self.span(&Set::new())];
        while let Some(n) = queue.pop() {
            if !found.insert(n.clone()) {
                continue;
            }
            for x in &self.elems {
                if !n.contains(x) {
                    let mut g = n.clone();
                    g.insert(x.clone());
                    queue.push(self.span(&g));
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn is_proper(&self, n: &Set) -> bool {
        n.len() < self.elems.len()
    }

    /// `(N :_R M)` as a set of ring elements.
    pub fn colon(&self, n: &Set) -> Vec<Elem> {
        self.scalars
            .iter()
            .filter(|r| self.elems.iter().all(|x| n.contains(&self.scale(r, x))))
            .cloned()
            .collect()
    }

    pub fn ann(&self, x: &Elem) -> Vec<Elem> {
        let z = self.zero();
        self.scalars
            .iter()
            .filter(|r| self.scale(r, x) == z)
            .cloned()
            .collect()
    }

    /// `(0 :_M I)`.
    pub fn zero_of(&self, ideal: &[Elem]) -> Set {
        let z = self.zero();
        self.elems
            .iter()
            .filter(|x| ideal.iter().all(|r| self.scale(r, x) == z))
            .cloned()
            .collect()
    }

    /// `IM`.
    pub fn ideal_times(&self, ideal: &[Elem]) -> Set {
        let gens: Set = ideal
            .iter()
            .flat_map(|r| self.elems.iter().map(move |x| self.scale(r, x)))
            .collect();
        self.span(&gens)
    }

    pub fn is_prime(&self, p: &Set) -> bool {
        if !self.is_proper(p) {
            return false;
        }
        let colon = self.colon(p);
        self.scalars.iter().all(|r| {
            colon.contains(r)
                || self
                    .elems
                    .iter()
                    .all(|m| !p.contains(&self.scale(r, m)) || p.contains(m))
        })
    }

    pub fn primes(&self) -> Vec<Set> {
        self.submodules()
            .into_iter()
            .filter(|p| self.is_prime(p))
            .collect()
    }

    pub fn min_primes(&self) -> Vec<Set> {
        let primes = self.primes();
        primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
            .cloned()
            .collect()
    }

    /// Intersection of a family; `None` stands for `M` (empty family).
    pub fn meet_all<'a>(&self, family: impl IntoIterator<Item = &'a Set>) -> Option<Set> {
        family.into_iter().fold(None, |acc: Option<Set>, s| match acc {
            None => Some(s.clone()),
            Some(a) => Some(a.intersection(s).cloned().collect()),
        })
    }

    pub fn or_whole(&self, s: Option<Set>) -> Set {
        s.unwrap_or_else(|| self.whole())
    }

    pub fn frak_p_of(&self, n: &Set) -> Option<Set> {
        let mins = self.min_primes();
        self.meet_all(mins.iter().filter(|p| n.is_subset(p)))
    }

    pub fn frak_p(&self, x: &Elem) -> Option<Set> {
        self.frak_p_of(&[x.clone()].into_iter().collect())
    }

    pub fn torsion(&self) -> Set {
        self.elems
            .iter()
            .filter(|x| {
                self.scalars
                    .iter()
                    .any(|r| !self.is_zero_scalar(r) && self.scale(r, x) == self.zero())
            })
            .cloned()
            .collect()
    }

    /// `NK = (N:M)(K:M)M`.
    pub fn product(&self, n: &Set, k: &Set) -> Set {
        let (a, b) = (self.colon(n), self.colon(k));
        let gens: Set = a
            .iter()
            .flat_map(|r| b.iter().map(move |s| self.ring_mul(r, s)))
            .flat_map(|rs| self.elems.iter().map(move |x| self.scale(&rs, x)))
            .collect();
        self.span(&gens)
    }

    pub fn nilpotents(&self) -> Set {
        let zero = self.span(&Set::new());
        self.elems
            .iter()
            .filter(|x| {
                let n = self.cyclic(x);
                let mut p = n.clone();
                for _ in 0..=self.elems.len() {
                    if p == zero {
                        return true;
                    }
                    p = self.product(&p, &n);
                }
                false
            })
            .cloned()
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        let primes = self.primes();
        self.or_whole(self.meet_all(primes.iter())).len() == 1
    }

    pub fn is_multiplication(&self) -> bool {
        self.submodules()
            .iter()
            .all(|n| &self.ideal_times(&self.colon(n)) == n)
    }

    pub fn is_faithful(&self) -> bool {
        self.colon(&self.span(&Set::new())).len() == 1
    }

    pub fn is_cyclic(&self, n: &Set) -> bool {
        n.iter().any(|g| &self.cyclic(g) == n)
    }

    pub fn has_dac(&self) -> bool {
        self.elems
            .iter()
            .all(|x| self.is_cyclic(&self.zero_of(&self.ann(x))))
    }

    pub fn is_z0(&self, n: &Set) -> bool {
        self.is_proper(n)
            && n.iter().all(|x| match self.frak_p(x) {
                Some(p) => p.is_subset(n),
                None => false,
            })
    }

    pub fn z0_family(&self) -> Vec<Set> {
        self.submodules().into_iter().filter(|n| self.is_z0(n)).collect()
    }

    pub fn maximal_submodules(&self) -> Vec<Set> {
        let proper: Vec<Set> = self
            .submodules()
            .into_iter()
            .filter(|n| self.is_proper(n))
            .collect();
        proper
            .iter()
            .filter(|n| !proper.iter().any(|k| k != *n && n.is_subset(k)))
            .cloned()
            .collect()
    }

    /// Jacobson radical of `N`; `None` stands for `M`.
    pub fn jacobson(&self, n: &Set) -> Option<Set> {
        let maxes = self.maximal_submodules();
        self.meet_all(maxes.iter().filter(|k| n.is_subset(k)))
    }

    pub fn smallest_z0_containing(&self, n: &Set) -> Option<Set> {
        let family = self.z0_family();
        self.meet_all(family.iter().filter(|k| n.is_subset(k)))
    }

    /// `Σ_{x ∈ N} (0 :_M Ann(x))` iterated to a fixpoint.
    pub fn z0_closure(&self, n: &Set) -> Set {
        let mut cur = n.clone();
        loop {
            let gens: Set = cur.iter().flat_map(|x| self.zero_of(&self.ann(x))).collect();
            let next = self.span(&gens);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Elements `k·g` for `k` in `0..`, as a set of residue tuples; handy for
    /// naming submodules like `2M` in single-summand modules.
    pub fn multiples(&self, k: u32) -> Set {
        let r: Elem = self.moduli.iter().map(|&n| k % n).collect();
        self.ideal_times(&[r])
    }
}

/// Residue tuples of a library submodule, for comparison with the oracle.
pub fn residues<M: zsubmod_core::module::ConcreteModule + ?Sized>(
    m: &M,
    n: &zsubmod_core::module::Submodule,
) -> Set {
    n.elements().iter().map(|&x| m.residues(x).residues).collect()
}
