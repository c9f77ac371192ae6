//! Ideals of a finite ring: generation, lattice enumeration, radicals and
//! the prime / primary / quasi-prime / regular classifiers.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, FiniteRing, RingHom};

pub const DEFAULT_MAX_IDEALS: usize = 100_000;

/// An ideal, canonically represented by its member set.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: BitSet,
}

impl Ideal {
    /// Wraps a member set after checking the ideal invariants.
    pub fn from_members(ring: &Arc<FiniteRing>, members: BitSet) -> Result<Ideal> {
        if members.universe() != ring.size() {
            return Err(Error::RingMismatch("member set has the wrong universe".into()));
        }
        let ideal = Ideal {
            ring: ring.clone(),
            members,
        };
        ideal.validate()?;
        Ok(ideal)
    }

    fn raw(ring: &Arc<FiniteRing>, members: BitSet) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members,
        }
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Ideal {
        Self::raw(ring, BitSet::from_indices(ring.size(), [ring.zero()]))
    }

    pub fn unit(ring: &Arc<FiniteRing>) -> Ideal {
        Self::raw(ring, BitSet::full(ring.size()))
    }

    /// `(a) = { r*a : r in A }`.
    pub fn principal(ring: &Arc<FiniteRing>, a: Elem) -> Ideal {
        let set = BitSet::from_indices(ring.size(), ring.elements().map(|r| ring.mul(r, a)));
        Self::raw(ring, set)
    }

    /// Least ideal containing `gens`, by closure iteration: every new member is
    /// multiplied by all ring elements and added to all current members until
    /// nothing new appears.
    pub fn generated(ring: &Arc<FiniteRing>, gens: &[Elem]) -> Result<Ideal> {
        for &g in gens {
            ring.check_elem(g)?;
        }
        let mut set = BitSet::new(ring.size());
        let mut list: Vec<Elem> = Vec::new();
        let mut queue: VecDeque<Elem> = VecDeque::new();
        let push = |x: Elem, set: &mut BitSet, queue: &mut VecDeque<Elem>| {
            if set.insert(x) {
                queue.push_back(x);
            }
        };
        push(ring.zero(), &mut set, &mut queue);
        for &g in gens {
            push(g, &mut set, &mut queue);
        }
        while let Some(x) = queue.pop_front() {
            for r in ring.elements() {
                push(ring.mul(r, x), &mut set, &mut queue);
            }
            for &y in &list {
                push(ring.add(x, y), &mut set, &mut queue);
            }
            push(ring.add(x, x), &mut set, &mut queue);
            list.push(x);
        }
        Ok(Self::raw(ring, set))
    }

    fn validate(&self) -> Result<()> {
        let r = &*self.ring;
        if !self.members.contains(r.zero()) {
            return Err(Error::Invalid("ideal does not contain 0".into()));
        }
        for a in &self.members {
            for b in &self.members {
                if !self.members.contains(r.add(a, b)) {
                    return Err(Error::Invalid(format!(
                        "not closed under addition: {} + {}",
                        r.name(a),
                        r.name(b)
                    )));
                }
            }
            for x in r.elements() {
                if !self.members.contains(r.mul(x, a)) {
                    return Err(Error::Invalid(format!(
                        "not closed under multiplication: {} * {}",
                        r.name(x),
                        r.name(a)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch("ideals belong to different rings".into()))
        }
    }

    /// `I + J = { i + j }`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(self.sum_unchecked(other))
    }

    fn sum_unchecked(&self, other: &Ideal) -> Ideal {
        let r = &*self.ring;
        let mut set = self.members.clone();
        let js: Vec<Elem> = other.members.to_vec();
        for i in &self.members {
            for &j in &js {
                set.insert(r.add(i, j));
            }
        }
        Self::raw(&self.ring, set)
    }

    /// Ideal generated by all pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let r = &*self.ring;
        let mut prods = BitSet::new(r.size());
        for a in &self.members {
            for b in &other.members {
                prods.insert(r.mul(a, b));
            }
        }
        Ideal::generated(&self.ring, &prods.to_vec())
    }

    /// `I^n` for `n >= 1` via repeated [`Ideal::product`].
    pub fn power(&self, n: u32) -> Ideal {
        assert!(n >= 1);
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn contains_radical(&self, f: Elem) -> bool {
        // powers cycle within `size` steps, so f^k in I for some k <= size iff f^size in I
        self.members.contains(self.ring.pow(f, self.ring.size() as u64))
    }

    /// `{ f : f^k in I for some 1 <= k <= size }`.
    pub fn radical(&self) -> Ideal {
        let set = BitSet::from_indices(
            self.ring.size(),
            self.ring.elements().filter(|&f| self.contains_radical(f)),
        );
        Self::raw(&self.ring, set)
    }

    pub fn is_prime(&self) -> bool {
        let r = &*self.ring;
        self.is_proper()
            && r.elements().all(|f| {
                self.contains(f)
                    || r.elements()
                        .all(|g| !self.contains(r.mul(f, g)) || self.contains(g))
            })
    }

    /// Definitional scan: `fg in q  =>  f in √q or g in √q`.
    pub fn is_quasi_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let r = &*self.ring;
        let rad = self.radical();
        r.elements().all(|f| {
            rad.contains(f)
                || r.elements()
                    .all(|g| !self.contains(r.mul(f, g)) || rad.contains(g))
        })
    }

    /// `fg in q and f notin q  =>  g in √q`.
    pub fn is_primary(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let r = &*self.ring;
        let rad = self.radical();
        r.elements().all(|f| {
            self.contains(f)
                || r.elements()
                    .all(|g| !self.contains(r.mul(f, g)) || rad.contains(g))
        })
    }

    /// Direct scan: proper, and adjoining any outside element yields the unit ideal.
    pub fn is_maximal(&self) -> bool {
        self.is_proper()
            && self
                .ring
                .elements()
                .filter(|&a| !self.contains(a))
                .all(|a| {
                    !self
                        .sum_unchecked(&Ideal::principal(&self.ring, a))
                        .is_proper()
                })
    }

    /// Maximality read off an enumerated lattice.
    pub fn is_maximal_in(&self, lattice: &[Ideal]) -> bool {
        self.is_proper()
            && !lattice.iter().any(|j| {
                j.is_proper() && j.members != self.members && self.is_subset(j)
            })
    }

    /// Generated by the idempotents it contains.
    pub fn is_regular(&self) -> bool {
        let idem: Vec<Elem> = self
            .ring
            .idempotents()
            .into_iter()
            .filter(|&e| self.contains(e))
            .collect();
        Ideal::generated(&self.ring, &idem).expect("valid elements").members == self.members
    }

    pub fn classify(&self) -> IdealClassification {
        let is_regular = self.is_regular();
        let is_max_regular = is_regular
            && self.is_proper()
            && max_regular_ideals(&self.ring).iter().any(|m| m == self);
        IdealClassification {
            is_proper: self.is_proper(),
            is_prime: self.is_prime(),
            is_maximal: self.is_maximal(),
            is_primary: self.is_primary(),
            is_quasi_prime: self.is_quasi_prime(),
            is_regular,
            is_max_regular,
            radical: self.radical(),
        }
    }

    /// `{ a : h(a) in I }` for an ideal `I` of `h.target()`.
    pub fn preimage(h: &RingHom, target_ideal: &Ideal) -> Result<Ideal> {
        if !Arc::ptr_eq(h.target(), &target_ideal.ring) {
            return Err(Error::RingMismatch("ideal is not an ideal of the hom's target".into()));
        }
        let src = h.source();
        let set = BitSet::from_indices(
            src.size(),
            src.elements().filter(|&a| target_ideal.contains(h.apply(a))),
        );
        Ok(Self::raw(src, set))
    }

    /// Image under a surjective hom (used for quotient correspondences).
    pub fn image(h: &RingHom, ideal: &Ideal) -> Result<Ideal> {
        if !Arc::ptr_eq(h.source(), &ideal.ring) {
            return Err(Error::RingMismatch("ideal is not an ideal of the hom's source".into()));
        }
        let gens: Vec<Elem> = ideal.members.iter().map(|a| h.apply(a)).collect();
        Ideal::generated(h.target(), &gens)
    }

    /// Greedy generating set: ascending members not already in the ideal generated so far.
    pub fn small_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut cur = Ideal::zero(&self.ring);
        for a in &self.members {
            if !cur.contains(a) {
                gens.push(a);
                cur = cur.sum_unchecked(&Ideal::principal(&self.ring, a));
                if cur.members == self.members {
                    break;
                }
            }
        }
        gens
    }

    /// Display name such as `(4)` or `(x,y)`.
    pub fn name(&self) -> String {
        let gens = self.small_generators();
        if gens.is_empty() {
            return format!("({})", self.ring.name(self.ring.zero()));
        }
        let names: Vec<&str> = gens.iter().map(|&g| self.ring.name(g)).collect();
        format!("({})", names.join(","))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            name: self.name(),
            members: self.members.to_vec(),
            elements: self.members.iter().map(|a| self.ring.name(a).to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealJson {
    pub name: String,
    pub members: Vec<usize>,
    pub elements: Vec<String>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.cmp(&other.members)
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone)]
pub struct IdealClassification {
    pub is_proper: bool,
    pub is_prime: bool,
    pub is_maximal: bool,
    pub is_primary: bool,
    pub is_quasi_prime: bool,
    pub is_regular: bool,
    pub is_max_regular: bool,
    pub radical: Ideal,
}

/// Every ideal exactly once, sorted by member-set bit pattern.
///
/// Breadth-first saturation from `(0)`: each discovered ideal is extended by
/// every principal ideal it does not contain. Frontier expansion runs in
/// parallel; the result is sorted, so the output does not depend on it.
pub fn enumerate_ideals(ring: &Arc<FiniteRing>, cap: usize) -> Result<Vec<Ideal>> {
    let mut principals: Vec<Ideal> = ring.elements().map(|a| Ideal::principal(ring, a)).collect();
    principals.sort();
    principals.dedup_by(|a, b| a.members == b.members);

    let zero = Ideal::zero(ring);
    let mut seen: HashSet<BitSet> = HashSet::new();
    seen.insert(zero.members.clone());
    let mut all = vec![zero.clone()];
    let mut frontier = vec![zero];
    while !frontier.is_empty() {
        let found: Vec<BitSet> = frontier
            .par_iter()
            .flat_map_iter(|i| {
                principals
                    .iter()
                    .filter(|p| !p.is_subset(i))
                    .map(|p| i.sum_unchecked(p).members)
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut next = Vec::new();
        for m in found {
            if seen.insert(m.clone()) {
                if seen.len() > cap {
                    return Err(Error::IdealCap { cap });
                }
                let ideal = Ideal::raw(ring, m);
                all.push(ideal.clone());
                next.push(ideal);
            }
        }
        frontier = next;
    }
    all.sort();
    Ok(all)
}

/// Regular ideals: those generated by a set of idempotents. Found by
/// saturating `(0)` under adjoining single idempotents.
pub fn regular_ideals(ring: &Arc<FiniteRing>) -> Vec<Ideal> {
    let idem: Vec<Ideal> = ring
        .idempotents()
        .into_iter()
        .map(|e| Ideal::principal(ring, e))
        .collect();
    let zero = Ideal::zero(ring);
    let mut seen: HashSet<BitSet> = HashSet::from([zero.members.clone()]);
    let mut out = vec![zero.clone()];
    let mut queue = VecDeque::from([zero]);
    while let Some(i) = queue.pop_front() {
        for p in &idem {
            if p.is_subset(&i) {
                continue;
            }
            let j = i.sum_unchecked(p);
            if seen.insert(j.members.clone()) {
                out.push(j.clone());
                queue.push_back(j);
            }
        }
    }
    out.sort();
    out
}

/// Maximal elements, under inclusion, of the proper regular ideals.
pub fn max_regular_ideals(ring: &Arc<FiniteRing>) -> Vec<Ideal> {
    let proper: Vec<Ideal> = regular_ideals(ring)
        .into_iter()
        .filter(Ideal::is_proper)
        .collect();
    proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.members != i.members && i.is_subset(j))
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::RingOptions;

    fn z(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zmod(n, &RingOptions::default()).unwrap()
    }

    fn id(r: &Arc<FiniteRing>, gens: &[Elem]) -> Ideal {
        Ideal::generated(r, gens).unwrap()
    }

    #[test]
    fn generation() {
        let r8 = z(8);
        assert_eq!(id(&r8, &[4]).members().to_vec(), vec![0, 4]);
        let r12 = z(12);
        assert_eq!(id(&r12, &[9]).members().to_vec(), vec![0, 3, 6, 9]);
        assert_eq!(id(&r12, &[]).members().to_vec(), vec![0]);
        assert_eq!(id(&r12, &[4, 6]).members().to_vec(), vec![0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn generation_matches_sums_of_principals() {
        let r = z(30);
        for a in r.elements() {
            for b in r.elements() {
                let direct = id(&r, &[a, b]);
                let via = Ideal::principal(&r, a).sum(&Ideal::principal(&r, b)).unwrap();
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn lattices_of_zmod() {
        let names = |n| {
            enumerate_ideals(&z(n), DEFAULT_MAX_IDEALS)
                .unwrap()
                .iter()
                .map(Ideal::name)
                .collect::<Vec<_>>()
        };
        assert_eq!(names(8), ["(0)", "(4)", "(2)", "(1)"]);
        assert_eq!(names(12), ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
    }

    #[test]
    fn lattice_cap_is_an_error() {
        assert!(matches!(enumerate_ideals(&z(12), 3), Err(Error::IdealCap { cap: 3 })));
    }

    #[test]
    fn radicals() {
        let r8 = z(8);
        assert_eq!(id(&r8, &[4]).radical(), id(&r8, &[2]));
        let r12 = z(12);
        assert_eq!(id(&r12, &[0]).radical(), id(&r12, &[6]));
        let p = id(&r12, &[3]);
        assert_eq!(p.radical(), p);
    }

    #[test]
    fn classifiers() {
        let r8 = z(8);
        let r6 = z(6);
        let r12 = z(12);
        assert!(id(&r8, &[2]).is_prime());
        assert!(!id(&r8, &[4]).is_prime());
        assert!(!id(&r6, &[0]).is_prime());
        assert!(id(&r8, &[4]).is_quasi_prime());
        assert!(id(&r8, &[0]).is_quasi_prime());
        assert!(!id(&r6, &[0]).is_quasi_prime());
        assert!(id(&r8, &[4]).is_primary());
        assert!(!id(&r12, &[6]).is_primary());
        assert!(id(&r8, &[2]).is_maximal());
        assert!(!id(&r8, &[4]).is_maximal());
        assert!(id(&r6, &[3]).is_maximal());
        assert!(!id(&r8, &[1]).is_quasi_prime());
    }

    #[test]
    fn regular_and_max_regular() {
        let r12 = z(12);
        assert!(id(&r12, &[4]).is_regular());
        assert!(!id(&z(8), &[2]).is_regular());
        assert!(id(&r12, &[0]).is_regular());
        let mr: Vec<String> = max_regular_ideals(&r12).iter().map(Ideal::name).collect();
        assert_eq!(mr, ["(4)", "(3)"]);
        let mr8: Vec<String> = max_regular_ideals(&z(8)).iter().map(Ideal::name).collect();
        assert_eq!(mr8, ["(0)"]);
        let f2 = z(2);
        let p = FiniteRing::product(&f2, &f2, &RingOptions::default()).unwrap();
        let mr = max_regular_ideals(&p);
        assert_eq!(mr.len(), 2);
        assert!(mr.iter().all(|m| m.len() == 2));
    }

    #[test]
    fn products_and_preimages() {
        let r8 = z(8);
        assert_eq!(id(&r8, &[2]).product(&id(&r8, &[2])).unwrap(), id(&r8, &[4]));
        assert_eq!(id(&r8, &[2]).product(&id(&r8, &[4])).unwrap(), id(&r8, &[0]));
        let i = id(&r8, &[2]);
        assert_eq!(i.product(&Ideal::unit(&r8)).unwrap(), i);
        assert!(i.product(&Ideal::unit(&z(4))).is_err());

        let r12 = z(12);
        let (q, h) = FiniteRing::quotient(&r12, &id(&r12, &[4])).unwrap();
        assert_eq!(Ideal::preimage(&h, &Ideal::zero(&q)).unwrap(), id(&r12, &[4]));
        assert_eq!(Ideal::preimage(&h, &Ideal::unit(&q)).unwrap(), Ideal::unit(&r12));
    }

    #[test]
    fn maximality_routes_agree() {
        for n in 2..=40 {
            let r = z(n);
            let lat = enumerate_ideals(&r, DEFAULT_MAX_IDEALS).unwrap();
            for i in &lat {
                assert_eq!(i.is_maximal(), i.is_maximal_in(&lat), "{i} in Z/{n}");
            }
        }
    }

    #[test]
    fn from_members_checks_invariants() {
        let r = z(8);
        assert!(Ideal::from_members(&r, BitSet::from_indices(8, [0, 4])).is_ok());
        assert!(Ideal::from_members(&r, BitSet::from_indices(8, [0, 3])).is_err());
        assert!(Ideal::from_members(&r, BitSet::from_indices(8, [4])).is_err());
    }
}
