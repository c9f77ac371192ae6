//! Quasi-prime, prime, maximal and primary spectra as finite spaces.
//!
//! The topology on every spectrum is the one generated by the basis opens
//! `U_f = { q : f ∉ √q }`. Its specialization relation is `q ⤳ p` iff
//! `q ⊆ √p`, so the least open around `q` is the down-set `{ p : p ⊆ √q }`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, FiniteRing, RingHom};
use crate::ideals::{enumerate_ideals, max_regular_ideals, Ideal, IdealJson};
use crate::topspace::{t_space, ContinuousMap, FinTopSpace, TSpace, TopOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Quasi,
    Prime,
    Maximal,
    Primary,
}

impl SpectrumKind {
    pub const ALL: [SpectrumKind; 4] = [
        SpectrumKind::Quasi,
        SpectrumKind::Prime,
        SpectrumKind::Maximal,
        SpectrumKind::Primary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumKind::Quasi => "quasi",
            SpectrumKind::Prime => "prime",
            SpectrumKind::Maximal => "max",
            SpectrumKind::Primary => "primary",
        }
    }

    fn admits(self, ideal: &Ideal) -> bool {
        match self {
            SpectrumKind::Quasi => ideal.is_quasi_prime(),
            SpectrumKind::Prime => ideal.is_prime(),
            SpectrumKind::Maximal => ideal.is_maximal(),
            SpectrumKind::Primary => ideal.is_primary(),
        }
    }
}

impl std::str::FromStr for SpectrumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quasi" => Ok(SpectrumKind::Quasi),
            "prime" => Ok(SpectrumKind::Prime),
            "max" | "maximal" => Ok(SpectrumKind::Maximal),
            "primary" => Ok(SpectrumKind::Primary),
            other => Err(Error::Invalid(format!("unknown spectrum kind '{other}'"))),
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone)]
pub struct Spectrum {
    ring: Arc<FiniteRing>,
    kind: SpectrumKind,
    points: Vec<Ideal>,
    radicals: Vec<Ideal>,
    /// Row `q` holds `{ p : q ⊆ √p }`, the closure of `q`.
    specialization: Vec<BitSet>,
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Spectrum")
            .field("ring", &self.ring.recipe())
            .field("kind", &self.kind)
            .field("points", &self.points)
            .finish()
    }
}

impl Spectrum {
    /// Builds a spectrum of the given kind from an already enumerated lattice.
    pub fn from_lattice(ring: &Arc<FiniteRing>, lattice: &[Ideal], kind: SpectrumKind) -> Self {
        let mut points: Vec<Ideal> = lattice.iter().filter(|i| kind.admits(i)).cloned().collect();
        points.sort();
        Self::from_points(ring, kind, points)
    }

    fn from_points(ring: &Arc<FiniteRing>, kind: SpectrumKind, points: Vec<Ideal>) -> Self {
        let radicals: Vec<Ideal> = points.iter().map(Ideal::radical).collect();
        let n = points.len();
        let specialization = points
            .iter()
            .map(|q| BitSet::from_indices(n, (0..n).filter(|&p| q.is_subset(&radicals[p]))))
            .collect();
        Spectrum {
            ring: ring.clone(),
            kind,
            points,
            radicals,
            specialization,
        }
    }

    /// The points of this spectrum that also satisfy `kind`, with the restricted topology.
    pub fn restrict(&self, kind: SpectrumKind) -> Spectrum {
        let points = self.points.iter().filter(|i| kind.admits(i)).cloned().collect();
        Self::from_points(&self.ring, kind, points)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn points(&self) -> &[Ideal] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn radical_of(&self, q: usize) -> &Ideal {
        &self.radicals[q]
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.points.binary_search(ideal).ok().filter(|&i| self.points[i] == *ideal)
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.len())
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// Points that are prime ideals, i.e. equal to their radical.
    pub fn prime_points(&self) -> BitSet {
        BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&q| self.points[q] == self.radicals[q]),
        )
    }

    /// As a subset of `self`, the points of another spectrum of the same ring.
    pub fn embed(&self, other: &Spectrum) -> Result<BitSet> {
        let mut s = self.empty_set();
        for p in &other.points {
            let i = self
                .index_of(p)
                .ok_or_else(|| Error::Invalid(format!("{p} is not a point of this spectrum")))?;
            s.insert(i);
        }
        Ok(s)
    }

    fn check_ring(&self, ring: &Arc<FiniteRing>) -> Result<()> {
        if Arc::ptr_eq(&self.ring, ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch("ideal or element from another ring".into()))
        }
    }

    /// `U_f = { q : f ∉ √q }`.
    pub fn basis_open(&self, f: Elem) -> Result<BitSet> {
        self.ring.check_elem(f)?;
        Ok(BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&q| !self.radicals[q].contains(f)),
        ))
    }

    /// The family `{ U_f : f ∈ A }` indexed by element.
    pub fn basis_family(&self) -> Vec<BitSet> {
        self.ring
            .elements()
            .map(|f| self.basis_open(f).expect("element in range"))
            .collect()
    }

    /// `𝒱(I) = { q : I ⊆ √q }`.
    pub fn closed_set(&self, ideal: &Ideal) -> Result<BitSet> {
        self.check_ring(ideal.ring())?;
        Ok(BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&q| ideal.is_subset(&self.radicals[q])),
        ))
    }

    /// `cl{q} = { p : q ⊆ √p }`.
    pub fn closure_of_point(&self, q: usize) -> BitSet {
        self.specialization[q].clone()
    }

    /// The finite space with least opens `{ p : p ⊆ √q }`.
    pub fn space(&self) -> FinTopSpace {
        let labels = self.points.iter().map(Ideal::name).collect();
        FinTopSpace::from_specialization(labels, &self.specialization)
            .expect("specialization of a spectrum is a preorder")
    }

    /// Greedy finite subcover certificate for `U_f ⊆ ⋃ U_g`: scan `gs` in order
    /// until `f ∈ √(g_j : j ∈ J)`, then drop every generator that is not needed.
    pub fn cover_refine(&self, f: Elem, gs: &[Elem]) -> Result<Vec<Elem>> {
        self.ring.check_elem(f)?;
        let mut union = self.empty_set();
        for &g in gs {
            union.union_with(&self.basis_open(g)?);
        }
        let uf = self.basis_open(f)?;
        if !uf.is_subset(&union) {
            return Err(Error::NotACover(format!(
                "U_{} is not contained in the union of the given basis opens",
                self.ring.name(f)
            )));
        }
        let certifies = |sel: &[Elem]| -> bool {
            Ideal::generated(&self.ring, sel)
                .map(|i| i.contains_radical(f))
                .unwrap_or(false)
        };
        let mut chosen: Vec<Elem> = Vec::new();
        if !certifies(&chosen) {
            for &g in gs {
                chosen.push(g);
                if certifies(&chosen) {
                    break;
                }
            }
        }
        if !certifies(&chosen) {
            return Err(Error::Consistency(format!(
                "U_{} is covered but {} is not in the radical of the generated ideal",
                self.ring.name(f),
                self.ring.name(f)
            )));
        }
        let mut i = 0;
        while i < chosen.len() {
            let mut without = chosen.clone();
            without.remove(i);
            if certifies(&without) {
                chosen = without;
            } else {
                i += 1;
            }
        }
        Ok(chosen)
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            kind: self.kind,
            points: self.points.iter().map(Ideal::to_json).collect(),
            radicals: self.radicals.iter().map(Ideal::name).collect(),
            closures: self.specialization.iter().map(BitSet::to_vec).collect(),
        }
    }

    /// Specialization Hasse diagram; prime points are double-circled and act as
    /// class representatives.
    pub fn to_dot(&self) -> String {
        let primes = self.prime_points();
        let name = format!("{} {}", self.kind, self.ring.recipe());
        self.space().to_dot(
            &name,
            |class| class.iter().find(|&x| primes.contains(x)).or(class.first()).unwrap_or(0),
            &primes,
        )
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpectrumJson {
    pub kind: SpectrumKind,
    pub points: Vec<IdealJson>,
    pub radicals: Vec<String>,
    pub closures: Vec<Vec<usize>>,
}

/// Sp A along with the lattice it was cut from and its prime, maximal and
/// primary subspaces.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub ring: Arc<FiniteRing>,
    pub lattice: Vec<Ideal>,
    pub quasi: Spectrum,
    pub prime: Spectrum,
    pub maximal: Spectrum,
    pub primary: Spectrum,
}

impl SpectralData {
    pub fn new(ring: &Arc<FiniteRing>, max_ideals: usize) -> Result<Self> {
        let lattice = enumerate_ideals(ring, max_ideals)?;
        let quasi = Spectrum::from_lattice(ring, &lattice, SpectrumKind::Quasi);
        Ok(SpectralData {
            ring: ring.clone(),
            prime: quasi.restrict(SpectrumKind::Prime),
            maximal: quasi.restrict(SpectrumKind::Maximal),
            primary: Spectrum::from_lattice(ring, &lattice, SpectrumKind::Primary),
            quasi,
            lattice,
        })
    }

    pub fn get(&self, kind: SpectrumKind) -> &Spectrum {
        match kind {
            SpectrumKind::Quasi => &self.quasi,
            SpectrumKind::Prime => &self.prime,
            SpectrumKind::Maximal => &self.maximal,
            SpectrumKind::Primary => &self.primary,
        }
    }
}

pub fn quasi_spectrum(ring: &Arc<FiniteRing>, max_ideals: usize) -> Result<Spectrum> {
    let lattice = enumerate_ideals(ring, max_ideals)?;
    Ok(Spectrum::from_lattice(ring, &lattice, SpectrumKind::Quasi))
}

pub fn spectrum(ring: &Arc<FiniteRing>, kind: SpectrumKind, max_ideals: usize) -> Result<Spectrum> {
    let lattice = enumerate_ideals(ring, max_ideals)?;
    Ok(Spectrum::from_lattice(ring, &lattice, kind))
}

/// A point map between spectra.
#[derive(Debug, Clone)]
pub struct SpectrumMap {
    pub source: Spectrum,
    pub target: Spectrum,
    pub point_map: Vec<usize>,
}

impl SpectrumMap {
    pub fn image(&self, s: &BitSet) -> BitSet {
        BitSet::from_indices(self.target.len(), s.iter().map(|q| self.point_map[q]))
    }

    pub fn preimage(&self, s: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.source.len(),
            (0..self.source.len()).filter(|&q| s.contains(self.point_map[q])),
        )
    }

    pub fn is_continuous(&self) -> bool {
        let (src, tgt) = (self.source.space(), self.target.space());
        tgt.min_opens().iter().all(|u| src.is_open(&self.preimage(u)))
    }

    pub fn is_open_map(&self) -> bool {
        let (src, tgt) = (self.source.space(), self.target.space());
        src.min_opens().iter().all(|u| tgt.is_open(&self.image(u)))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.target.empty_set();
        self.point_map.iter().all(|&p| seen.insert(p))
    }

    pub fn full_image(&self) -> BitSet {
        self.image(&self.source.full_set())
    }
}

/// `γ: Sp A → Spec A, q ↦ √q`.
pub fn retraction_gamma(quasi: &Spectrum) -> Result<SpectrumMap> {
    if quasi.kind() != SpectrumKind::Quasi {
        return Err(Error::Invalid("retraction is defined on the quasi-prime spectrum".into()));
    }
    let prime = quasi.restrict(SpectrumKind::Prime);
    let point_map = (0..quasi.len())
        .map(|q| {
            prime.index_of(quasi.radical_of(q)).ok_or_else(|| {
                Error::Consistency(format!(
                    "radical of quasi-prime {} is not prime",
                    quasi.points()[q]
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumMap {
        source: quasi.clone(),
        target: prime,
        point_map,
    })
}

/// Every way γ can fail to be a continuous open retraction with
/// `γ⁻¹(D(f)) = U_f` and `γ⁻¹(V(I)) = 𝒱(I)`; empty when all hold.
pub fn retraction_violations(gamma: &SpectrumMap, lattice: &[Ideal]) -> Vec<String> {
    let (sp, spec) = (&gamma.source, &gamma.target);
    let ring = sp.ring();
    let mut out = Vec::new();
    if !gamma.is_continuous() {
        out.push("γ is not continuous".to_string());
    }
    if !gamma.is_open_map() {
        out.push("γ is not open".to_string());
    }
    for (i, p) in spec.points().iter().enumerate() {
        if sp.index_of(p).map(|q| gamma.point_map[q]) != Some(i) {
            out.push(format!("γ does not fix the prime {p}"));
        }
    }
    for f in ring.elements() {
        let d = spec.basis_open(f).expect("in range");
        if gamma.preimage(&d) != sp.basis_open(f).expect("in range") {
            out.push(format!("γ⁻¹(D({})) ≠ U_{}", ring.name(f), ring.name(f)));
        }
    }
    for i in lattice {
        let v = spec.closed_set(i).expect("same ring");
        if gamma.preimage(&v) != sp.closed_set(i).expect("same ring") {
            out.push(format!("γ⁻¹(V({i})) ≠ 𝒱({i})"));
        }
    }
    out
}

/// `φ*: Sp B → Sp A, q ↦ φ⁻¹(q)` for `φ: A → B`, with `(φ*)⁻¹(U_f) = U_φ(f)`
/// checked for every `f`.
pub fn induced_map(h: &RingHom, max_ideals: usize) -> Result<SpectrumMap> {
    let src = quasi_spectrum(h.target(), max_ideals)?;
    let tgt = quasi_spectrum(h.source(), max_ideals)?;
    induced_map_between(h, &src, &tgt)
}

/// As [`induced_map`] with both quasi-prime spectra supplied: `sp_target` of
/// `h.target()` and `sp_source` of `h.source()`.
pub fn induced_map_between(h: &RingHom, sp_target: &Spectrum, sp_source: &Spectrum) -> Result<SpectrumMap> {
    let point_map = sp_target
        .points()
        .iter()
        .map(|q| {
            let pre = Ideal::preimage(h, q)?;
            sp_source.index_of(&pre).ok_or_else(|| {
                Error::Consistency(format!("preimage {pre} of quasi-prime {q} is not quasi-prime"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let map = SpectrumMap {
        source: sp_target.clone(),
        target: sp_source.clone(),
        point_map,
    };
    for f in h.source().elements() {
        let lhs = map.preimage(&sp_source.basis_open(f)?);
        let rhs = sp_target.basis_open(h.apply(f))?;
        if lhs != rhs {
            return Err(Error::Consistency(format!(
                "(φ*)⁻¹(U_{}) ≠ U_φ({})",
                h.source().name(f),
                h.source().name(f)
            )));
        }
    }
    Ok(map)
}

/// Clopens of Sp A, each paired with the unique idempotent `e` with `U_e` equal to it.
pub fn clopen_sets(quasi: &Spectrum, opts: &TopOptions) -> Result<Vec<(BitSet, Elem)>> {
    if quasi.kind() != SpectrumKind::Quasi {
        return Err(Error::Invalid("clopen pairing is stated for the quasi-prime spectrum".into()));
    }
    let clopens = quasi.space().clopen_sets(opts.max_closed_sets)?;
    let ring = quasi.ring();
    let idem = ring.idempotents();
    let mut paired = Vec::with_capacity(clopens.len());
    for c in &clopens {
        let matches: Vec<Elem> = idem
            .iter()
            .copied()
            .filter(|&e| quasi.basis_open(e).expect("in range") == *c)
            .collect();
        match matches.as_slice() {
            [e] => paired.push((c.clone(), *e)),
            [] => {
                return Err(Error::Consistency(format!(
                    "clopen {:?} is not U_e for any idempotent e",
                    c.to_vec()
                )))
            }
            many => {
                return Err(Error::Consistency(format!(
                    "clopen {:?} equals U_e for several idempotents {:?}",
                    c.to_vec(),
                    many
                )))
            }
        }
    }
    if paired.len() != idem.len() {
        return Err(Error::Consistency(format!(
            "{} clopens but {} idempotents",
            paired.len(),
            idem.len()
        )));
    }
    Ok(paired)
}

/// Topological components of Sp A, checked against `{ 𝒱(M) : M max-regular }`.
pub fn connected_components(quasi: &Spectrum) -> Result<Vec<BitSet>> {
    if quasi.kind() != SpectrumKind::Quasi {
        return Err(Error::Invalid("component theorem is stated for the quasi-prime spectrum".into()));
    }
    let comps = quasi.space().connected_components();
    let mut expected: Vec<BitSet> = max_regular_ideals(quasi.ring())
        .iter()
        .map(|m| quasi.closed_set(m).expect("same ring"))
        .collect();
    expected.sort();
    if comps != expected {
        return Err(Error::Consistency(format!(
            "components {:?} differ from the closed sets of max-regular ideals {:?}",
            comps.iter().map(BitSet::to_vec).collect::<Vec<_>>(),
            expected.iter().map(BitSet::to_vec).collect::<Vec<_>>()
        )));
    }
    Ok(comps)
}

/// `φ: t(Sp A) → Spec A`, sending an irreducible closed `Z` to the radical of
/// any of its generic points. Fails if two generic points of one `Z` have
/// different radicals or some `Z` has none.
pub fn t_phi(quasi: &Spectrum, opts: &TopOptions) -> Result<(TSpace, ContinuousMap)> {
    let space = quasi.space();
    let t = t_space(&space, opts)?;
    let prime = quasi.restrict(SpectrumKind::Prime);
    let map = t
        .sets
        .iter()
        .map(|z| -> Result<usize> {
            let generic = space.generic_points_unchecked(z);
            let mut targets = generic.iter().map(|q| prime.index_of(quasi.radical_of(q)));
            let first = targets.next().flatten().ok_or_else(|| {
                Error::Consistency(format!("irreducible closed set {:?} has no generic quasi-prime", z.to_vec()))
            })?;
            if targets.any(|t| t != Some(first)) {
                return Err(Error::Consistency(format!(
                    "generic points of {:?} have different radicals",
                    z.to_vec()
                )));
            }
            Ok(first)
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = ContinuousMap::from_points(t.space.clone(), prime.space(), map)?;
    Ok((t, phi))
}

/// Ring with exactly one maximal ideal.
pub fn local_maximal_ideal(lattice: &[Ideal]) -> Option<Ideal> {
    let max: Vec<&Ideal> = lattice.iter().filter(|i| i.is_maximal_in(lattice)).collect();
    match max.as_slice() {
        [m] => Some((*m).clone()),
        _ => None,
    }
}

/// Every prime lies in a unique maximal ideal.
pub fn is_pm_ring(lattice: &[Ideal]) -> bool {
    let max: Vec<&Ideal> = lattice.iter().filter(|i| i.is_maximal_in(lattice)).collect();
    lattice
        .iter()
        .filter(|p| p.is_prime())
        .all(|p| max.iter().filter(|m| p.is_subset(m)).count() == 1)
}

/// Primes containing no smaller prime.
pub fn minimal_primes(lattice: &[Ideal]) -> Vec<Ideal> {
    let primes: Vec<&Ideal> = lattice.iter().filter(|p| p.is_prime()).collect();
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .map(|p| (*p).clone())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainRingReport {
    /// Least `n` with `m^n = 0`.
    pub n: usize,
    /// `m, m^2, ..., m^n`.
    pub powers: Vec<String>,
    /// Sp A equals `{ m^1, ..., m^n }` as a set.
    pub spectrum_is_powers: bool,
    /// Exponent table `(i + j - 1 mod n) + 1`, 1-based.
    pub cyclic_table: Vec<Vec<usize>>,
    /// Exponent of `m^i * m^j` computed by ideal multiplication, 1-based.
    pub product_table: Vec<Vec<usize>>,
    pub cyclic_matches_products: bool,
}

#[derive(Debug, Clone)]
pub enum ChainRing {
    Applicable(ChainRingReport),
    Inapplicable(String),
}

/// Structure of Sp A under `m^i * m^j = m^(i+j)` for chain rings (local, every
/// proper ideal a power of the maximal ideal); otherwise reports why not.
pub fn chain_ring_monoid(quasi: &Spectrum, lattice: &[Ideal]) -> ChainRing {
    let Some(m) = local_maximal_ideal(lattice) else {
        return ChainRing::Inapplicable("ring is not local".into());
    };
    let mut powers = vec![m.clone()];
    while !powers.last().expect("nonempty").members().iter().eq([0]) {
        let next = powers.last().expect("nonempty").product(&m).expect("same ring");
        if next == *powers.last().expect("nonempty") {
            return ChainRing::Inapplicable(format!("maximal ideal {m} is not nilpotent"));
        }
        powers.push(next);
    }
    let n = powers.len();
    let proper: Vec<&Ideal> = lattice.iter().filter(|i| i.is_proper()).collect();
    if let Some(odd) = proper.iter().find(|i| !powers.contains(i)) {
        return ChainRing::Inapplicable(format!(
            "not a chain ring: {odd} is not a power of the maximal ideal {m}"
        ));
    }
    let mut sp: Vec<&Ideal> = quasi.points().iter().collect();
    sp.sort();
    let mut pw: Vec<&Ideal> = powers.iter().collect();
    pw.sort();
    let spectrum_is_powers = sp == pw;
    let exponent = |i: &Ideal| powers.iter().position(|p| p == i).map(|k| k + 1).unwrap_or(0);
    let cyclic_table: Vec<Vec<usize>> = (1..=n)
        .map(|i| (1..=n).map(|j| ((i + j - 1) % n) + 1).collect())
        .collect();
    let product_table: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| exponent(&powers[i].product(&powers[j]).expect("same ring")))
                .collect()
        })
        .collect();
    ChainRing::Applicable(ChainRingReport {
        n,
        powers: powers.iter().map(Ideal::name).collect(),
        spectrum_is_powers,
        cyclic_matches_products: cyclic_table == product_table,
        cyclic_table,
        product_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::RingOptions;
    use crate::ideals::DEFAULT_MAX_IDEALS;

    fn z(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zmod(n, &RingOptions::default()).unwrap()
    }

    fn data(r: &Arc<FiniteRing>) -> SpectralData {
        SpectralData::new(r, DEFAULT_MAX_IDEALS).unwrap()
    }

    fn names(sp: &Spectrum, s: &BitSet) -> Vec<String> {
        s.iter().map(|i| sp.points()[i].name()).collect()
    }

    #[test]
    fn spectra_of_z8() {
        let d = data(&z(8));
        let pts: Vec<String> = d.quasi.points().iter().map(Ideal::name).collect();
        assert_eq!(pts, ["(0)", "(4)", "(2)"]);
        let spec: Vec<String> = d.prime.points().iter().map(Ideal::name).collect();
        assert_eq!(spec, ["(2)"]);
    }

    #[test]
    fn spectra_of_z12() {
        let d = data(&z(12));
        let pts: Vec<String> = d.quasi.points().iter().map(Ideal::name).collect();
        assert_eq!(pts, ["(4)", "(3)", "(2)"]);
        let max: Vec<String> = d.maximal.points().iter().map(Ideal::name).collect();
        assert_eq!(max, ["(3)", "(2)"]);
    }

    #[test]
    fn field_spectrum() {
        let d = data(&z(7));
        assert_eq!(d.quasi.len(), 1);
        assert_eq!(d.quasi.points()[0].name(), "(0)");
    }

    #[test]
    fn basis_opens_z8() {
        let d = data(&z(8));
        assert!(d.quasi.basis_open(2).unwrap().is_empty());
        assert!(d.quasi.basis_open(3).unwrap().is_full());
        assert!(d.quasi.basis_open(1).unwrap().is_full());
    }

    #[test]
    fn closed_sets_z12() {
        let r = z(12);
        let d = data(&r);
        let v = d.quasi.closed_set(&Ideal::generated(&r, &[4]).unwrap()).unwrap();
        assert_eq!(names(&d.quasi, &v), ["(4)", "(2)"]);
        assert!(d.quasi.closed_set(&Ideal::zero(&r)).unwrap().is_full());
        assert!(d.quasi.closed_set(&Ideal::unit(&r)).unwrap().is_empty());
        assert!(d.quasi.closed_set(&Ideal::zero(&z(12))).is_err());
    }

    #[test]
    fn point_closures_z8() {
        // every point has radical (2), so each closure is the whole space
        let d = data(&z(8));
        for q in 0..3 {
            assert!(d.quasi.closure_of_point(q).is_full());
        }
    }

    #[test]
    fn cover_refinement() {
        let d = data(&z(12));
        assert_eq!(d.quasi.cover_refine(1, &[4, 3, 6]).unwrap(), vec![4, 3]);
        assert_eq!(d.quasi.cover_refine(1, &[6, 4, 3]).unwrap(), vec![4, 3]);
        assert_eq!(d.quasi.cover_refine(5, &[5]).unwrap(), vec![5]);
        assert_eq!(d.quasi.cover_refine(6, &[]).unwrap(), Vec::<Elem>::new());
        assert!(matches!(d.quasi.cover_refine(1, &[4]), Err(Error::NotACover(_))));
    }

    #[test]
    fn gamma_examples() {
        let d = data(&z(8));
        let g = retraction_gamma(&d.quasi).unwrap();
        assert_eq!(g.point_map, vec![0, 0, 0]);
        assert!(retraction_violations(&g, &d.lattice).is_empty());
        let d = data(&z(12));
        let g = retraction_gamma(&d.quasi).unwrap();
        let img: Vec<String> = g.point_map.iter().map(|&p| d.prime.points()[p].name()).collect();
        assert_eq!(img, ["(2)", "(3)", "(2)"]);
        let d = data(&z(30));
        let g = retraction_gamma(&d.quasi).unwrap();
        assert_eq!(g.point_map, (0..d.quasi.len()).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_induced_map() {
        let r = z(8);
        let i = Ideal::generated(&r, &[4]).unwrap();
        let (_, h) = FiniteRing::quotient(&r, &i).unwrap();
        let m = induced_map(&h, DEFAULT_MAX_IDEALS).unwrap();
        assert!(m.is_injective());
        // image is the set of quasi-primes containing I, here {(4), (2)}
        let above = BitSet::from_indices(3, (0..3).filter(|&q| i.is_subset(&m.target.points()[q])));
        assert_eq!(m.full_image(), above);
        assert_eq!(m.full_image().count(), 2);
        assert!(m.is_continuous());
    }

    #[test]
    fn localization_induced_map() {
        let r = z(6);
        let (_, h) = FiniteRing::localize_at(&r, 2).unwrap();
        let m = induced_map(&h, DEFAULT_MAX_IDEALS).unwrap();
        assert!(m.full_image().is_subset(&m.target.basis_open(2).unwrap()));
        let id = induced_map(&RingHom::identity(&r), DEFAULT_MAX_IDEALS).unwrap();
        assert_eq!(id.point_map, (0..id.source.len()).collect::<Vec<_>>());
    }

    #[test]
    fn clopens_and_idempotents() {
        let o = TopOptions::default();
        let d = data(&z(6));
        let c = clopen_sets(&d.quasi, &o).unwrap();
        assert_eq!(c.len(), 4);
        let mut es: Vec<Elem> = c.iter().map(|(_, e)| *e).collect();
        es.sort();
        assert_eq!(es, vec![0, 1, 3, 4]);
        // U_4 = points whose radical misses 4, i.e. {(3)}
        let u4 = &c.iter().find(|(_, e)| *e == 4).unwrap().0;
        assert_eq!(names(&d.quasi, u4), ["(3)"]);
        assert_eq!(clopen_sets(&data(&z(8)).quasi, &o).unwrap().len(), 2);
        assert_eq!(clopen_sets(&data(&z(5)).quasi, &o).unwrap().len(), 2);
    }

    #[test]
    fn components_z12() {
        let d = data(&z(12));
        let c = connected_components(&d.quasi).unwrap();
        let named: Vec<Vec<String>> = c.iter().map(|s| names(&d.quasi, s)).collect();
        assert_eq!(named, vec![vec!["(3)".to_string()], vec!["(4)".into(), "(2)".into()]]);
        assert_eq!(connected_components(&data(&z(8)).quasi).unwrap().len(), 1);
        let f2 = z(2);
        let p = FiniteRing::product(&f2, &f2, &RingOptions::default()).unwrap();
        let c = connected_components(&data(&p).quasi).unwrap();
        assert!(c.len() == 2 && c.iter().all(|s| s.count() == 1));
    }

    #[test]
    fn chain_rings() {
        let d = data(&z(8));
        match chain_ring_monoid(&d.quasi, &d.lattice) {
            ChainRing::Applicable(r) => {
                assert_eq!(r.n, 3);
                assert_eq!(r.powers, ["(2)", "(4)", "(0)"]);
                assert!(r.spectrum_is_powers);
                assert_eq!(r.product_table[1][1], 3);
                assert_eq!(r.cyclic_table[1][1], 1);
                assert!(!r.cyclic_matches_products);
            }
            ChainRing::Inapplicable(why) => panic!("{why}"),
        }
        let d = data(&z(9));
        assert!(matches!(chain_ring_monoid(&d.quasi, &d.lattice), ChainRing::Applicable(ref r) if r.n == 2));
        let d = data(&z(12));
        assert!(matches!(chain_ring_monoid(&d.quasi, &d.lattice), ChainRing::Inapplicable(_)));
        let o = RingOptions::default();
        let a = FiniteRing::poly_quotient(&z(2), "x", &[0, 0, 1], &o).unwrap();
        let b = FiniteRing::poly_quotient(&a, "y", &[0, 0, 1], &o).unwrap();
        let d = data(&b);
        assert!(matches!(chain_ring_monoid(&d.quasi, &d.lattice), ChainRing::Inapplicable(_)));
    }

    #[test]
    fn dot_z12() {
        let d = data(&z(12));
        let dot = d.quasi.to_dot();
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches("->").count(), 1);
        // (4) is point 0, (2) is point 2
        assert!(dot.contains("n0 -> n2;"));
        assert!(dot.contains("n2 [label=\"(2)\", shape=doublecircle];"));
    }
}
