//! Registry of structural checks run against one ring.
//!
//! Each check recomputes a theorem-level statement on the concrete ring and
//! reports `pass`, `fail`, `inapplicable` or `error` with machine-readable
//! details. Results always come back in registry order.

use std::fmt;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, FiniteRing, RingHom};
use crate::ideals::{enumerate_ideals, max_regular_ideals, Ideal, DEFAULT_MAX_IDEALS};
use crate::spectra::{
    chain_ring_monoid, clopen_sets, connected_components, induced_map_between, is_pm_ring,
    local_maximal_ideal, minimal_primes, retraction_gamma, retraction_violations, t_phi,
    ChainRing, SpectralData, Spectrum, SpectrumKind, SpectrumMap,
};
use crate::topspace::{t_space, TopOptions};

/// Spaces up to this many points are cross-checked against a topology
/// generated by brute force from the raw basis.
pub const BRUTE_FORCE_POINTS: usize = 12;

const LIST_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// A failure of a statement known to be wrong as literally stated.
    FailDocumented,
    Inapplicable,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::FailDocumented => "fail (documented paper ambiguity)",
            Status::Inapplicable => "inapplicable",
            Status::Error => "error",
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::FailDocumented | Status::Error)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckResult {
    /// True when the check errored because a resource cap was hit.
    pub fn hit_cap(&self) -> bool {
        self.status == Status::Error && self.details.get("cap") == Some(&Value::Bool(true))
    }
}

#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub max_ideals: usize,
    pub top: TopOptions,
    pub parallel: bool,
    pub timing: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_ideals: DEFAULT_MAX_IDEALS,
            top: TopOptions::default(),
            parallel: true,
            timing: false,
        }
    }
}

/// Shared, precomputed inputs for every check.
pub struct Context {
    pub ring: Arc<FiniteRing>,
    pub data: SpectralData,
    pub opts: CheckOptions,
    canonical: OnceLock<Result<CanonicalMaps>>,
}

struct Outcome {
    status: Status,
    details: Value,
}

fn verdict(ok: bool, details: Value) -> Outcome {
    Outcome {
        status: if ok { Status::Pass } else { Status::Fail },
        details,
    }
}

type CheckFn = fn(&Context) -> Result<Outcome>;

pub struct CheckSpec {
    pub name: &'static str,
    pub summary: &'static str,
    run: CheckFn,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("name", &self.name).finish()
    }
}

macro_rules! registry {
    ($($name:literal => $f:ident : $summary:literal,)*) => {
        pub static REGISTRY: &[CheckSpec] = &[
            $(CheckSpec { name: $name, summary: $summary, run: $f },)*
        ];
    };
}

registry! {
    "ring:axioms" => ring_axioms: "tables define a commutative unital ring",
    "ideal:quasi-prime-radical" => quasi_prime_radical: "q is quasi-prime iff its radical is prime",
    "ideal:hierarchy" => ideal_hierarchy: "prime => primary => quasi-prime; radical laws; powers of primes are quasi-prime",
    "ideal:finite-coincidence" => finite_coincidence: "primary and quasi-prime ideals coincide in finite rings",
    "sp:structure" => sp_structure: "spectrum points, specialization preorder and prime points",
    "sp:basis-law" => basis_law: "U_f meet U_g equals U_fg",
    "sp:spec-dense" => spec_dense: "Spec A is dense in Sp A",
    "thm:closure-of-point" => closure_of_point: "closure of q is { p : q in rad p }, equal to the closure of rad q",
    "cor:closed-sets" => closed_sets: "closed sets are exactly the V(I), closed under radicals, restricting to V(I) on Spec",
    "thm:quasi-compact" => quasi_compact: "every cover of U_f by basis opens has a finite certified subcover",
    "lem:retraction" => retraction: "q -> rad q is a continuous open retraction onto Spec A",
    "prop:induced-continuous" => induced_continuous: "ring maps induce continuous maps with preimage of U_f equal to U_phi(f)",
    "lem:quotient-embedding" => quotient_embedding: "Sp(A/I) -> Sp A is injective with image V(I)",
    "rem:localization-image" => localization_image: "image of Sp(A_f) lies in U_f",
    "prop:clopen-idempotents" => clopen_idempotents: "e -> U_e is a bijection from idempotents onto clopens",
    "cor:connected" => connectedness: "Sp A is connected iff A has no nontrivial idempotents",
    "thm:components" => components: "components of Sp A are the V(M) for max-regular M",
    "thm:t-functor" => t_functor: "t(Sp A) is homeomorphic to Spec A",
    "prop:generic-points" => generic_points: "irreducible closed sets have generic points, unique in Spec A",
    "cor:irreducible-components" => irreducible_components: "irreducible components are the V(p) for minimal primes p",
    "cor:spectral" => spectral: "Sp A is sober, equivalently spectral, iff Sp A = Spec A",
    "prop:hausdorff" => hausdorff: "Sp A is Hausdorff iff Sp A = Max A",
    "thm:normal" => normal: "Sp A normal iff Spec A normal; Spec normal => Max normal; pm-ring criterion",
    "cor:local-ring" => local_ring: "for local A: field, Hausdorff, spectral and closed-point agree",
    "ex:chain-ring" => chain_ring: "for chain rings Sp A is the set of powers of the maximal ideal",
}

pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name).collect()
}

/// Registry indices for `only`, in registry order; everything when `None`.
pub fn select(only: Option<&[String]>) -> Result<Vec<usize>> {
    let Some(names) = only else {
        return Ok((0..REGISTRY.len()).collect());
    };
    let mut idx = Vec::new();
    for n in names {
        let i = REGISTRY
            .iter()
            .position(|c| c.name == n)
            .ok_or_else(|| Error::Invalid(format!("unknown check '{n}'; known checks: {}", check_names().join(", "))))?;
        idx.push(i);
    }
    idx.sort_unstable();
    idx.dedup();
    Ok(idx)
}

impl Context {
    pub fn new(ring: &Arc<FiniteRing>, opts: CheckOptions) -> Result<Self> {
        let data = SpectralData::new(ring, opts.max_ideals)?;
        Ok(Context {
            ring: ring.clone(),
            data,
            opts,
            canonical: OnceLock::new(),
        })
    }
}

/// Runs the selected checks. Lattice enumeration failures (caps) abort;
/// everything after that is captured per check.
pub fn run_checks(ring: &Arc<FiniteRing>, only: Option<&[String]>, opts: &CheckOptions) -> Result<Vec<CheckResult>> {
    let selection = select(only)?;
    let ctx = Context::new(ring, opts.clone())?;
    Ok(run_selected(&ctx, &selection))
}

pub fn run_selected(ctx: &Context, selection: &[usize]) -> Vec<CheckResult> {
    let one = |&i: &usize| run_one(ctx, &REGISTRY[i]);
    if ctx.opts.parallel {
        selection.par_iter().map(one).collect()
    } else {
        selection.iter().map(one).collect()
    }
}

fn run_one(ctx: &Context, spec: &CheckSpec) -> CheckResult {
    let start = Instant::now();
    let outcome = match (spec.run)(ctx) {
        Ok(o) => o,
        Err(e) => Outcome {
            status: Status::Error,
            details: json!({ "error": e.to_string(), "cap": e.is_cap() }),
        },
    };
    CheckResult {
        name: spec.name,
        status: outcome.status,
        details: outcome.details,
        elapsed_ms: ctx
            .opts
            .timing
            .then(|| (start.elapsed().as_secs_f64() * 1e6).round() / 1e3),
    }
}

fn names(sp: &Spectrum, s: &BitSet) -> Vec<String> {
    s.iter().map(|i| sp.points()[i].name()).collect()
}

fn point_names(sp: &Spectrum) -> Vec<String> {
    sp.points().iter().map(Ideal::name).collect()
}

fn truncated(mut v: Vec<String>) -> Value {
    let total = v.len();
    v.truncate(LIST_LIMIT);
    if total > LIST_LIMIT {
        v.push(format!("... {} more", total - LIST_LIMIT));
    }
    json!(v)
}

fn ring_axioms(ctx: &Context) -> Result<Outcome> {
    let r = &ctx.ring;
    let idem: Vec<&str> = r.idempotents().iter().map(|&e| r.name(e)).collect();
    Ok(match r.verify_axioms() {
        Ok(()) => verdict(true, json!({ "size": r.size(), "idempotents": idem })),
        Err(Error::Axiom(msg)) => verdict(false, json!({ "size": r.size(), "violation": msg })),
        Err(e) => return Err(e),
    })
}

fn quasi_prime_radical(ctx: &Context) -> Result<Outcome> {
    let lat = &ctx.data.lattice;
    let mismatches: Vec<String> = lat
        .iter()
        .filter(|i| i.is_quasi_prime() != i.radical().is_prime())
        .map(Ideal::name)
        .collect();
    Ok(verdict(
        mismatches.is_empty(),
        json!({
            "ideals": lat.len(),
            "quasi_primes": ctx.data.quasi.len(),
            "mismatches": truncated(mismatches),
        }),
    ))
}

fn ideal_hierarchy(ctx: &Context) -> Result<Outcome> {
    let mut bad = Vec::new();
    for i in &ctx.data.lattice {
        let r = i.radical();
        if i.is_prime() && !i.is_primary() {
            bad.push(format!("{i} is prime but not primary"));
        }
        if i.is_primary() && !i.is_quasi_prime() {
            bad.push(format!("{i} is primary but not quasi-prime"));
        }
        if r.radical() != r {
            bad.push(format!("radical of {i} is not radical"));
        }
        if !i.is_subset(&r) {
            bad.push(format!("{i} is not inside its radical"));
        }
        if i.is_prime() {
            let mut pw = i.clone();
            loop {
                if !pw.is_quasi_prime() {
                    bad.push(format!("power {pw} of prime {i} is not quasi-prime"));
                }
                let next = pw.product(i)?;
                if next == pw {
                    break;
                }
                pw = next;
            }
        }
    }
    Ok(verdict(bad.is_empty(), json!({ "violations": truncated(bad) })))
}

fn finite_coincidence(ctx: &Context) -> Result<Outcome> {
    let mismatches: Vec<String> = ctx
        .data
        .lattice
        .iter()
        .filter(|i| i.is_primary() != i.is_quasi_prime())
        .map(Ideal::name)
        .collect();
    let same = ctx.data.primary.points() == ctx.data.quasi.points();
    Ok(verdict(
        mismatches.is_empty() && same,
        json!({
            "primary_spectrum_equals_quasi_spectrum": same,
            "mismatches": truncated(mismatches),
            "reason": "in a finite ring every prime ideal is maximal, so every quasi-prime ideal (radical maximal) is primary; \
                       quasi-prime ideals that are not primary only exist in infinite rings such as k[x,y,z]/(xy-z^2), \
                       which are out of scope",
        }),
    ))
}

fn sp_structure(ctx: &Context) -> Result<Outcome> {
    let d = &ctx.data;
    let mut bad = Vec::new();
    for kind in SpectrumKind::ALL {
        let sp = d.get(kind);
        let admitted = |i: &Ideal| match kind {
            SpectrumKind::Quasi => i.is_quasi_prime(),
            SpectrumKind::Prime => i.is_prime(),
            SpectrumKind::Maximal => i.is_maximal_in(&d.lattice),
            SpectrumKind::Primary => i.is_primary(),
        };
        for p in sp.points() {
            if !admitted(p) {
                bad.push(format!("{p} in the {kind} spectrum fails its classifier"));
            }
        }
        let expected = d.lattice.iter().filter(|i| admitted(i)).count();
        if expected != sp.len() {
            bad.push(format!("{kind} spectrum has {} points, expected {expected}", sp.len()));
        }
        let n = sp.len();
        for q in 0..n {
            let row = sp.closure_of_point(q);
            if !row.contains(q) {
                bad.push(format!("specialization is not reflexive at {}", sp.points()[q]));
            }
            for p in row.iter() {
                if !sp.closure_of_point(p).is_subset(&row) {
                    bad.push(format!("specialization is not transitive through {}", sp.points()[p]));
                }
            }
        }
    }
    let sp = &d.quasi;
    let radical_image: Vec<Ideal> = {
        let mut v: Vec<Ideal> = (0..sp.len()).map(|q| sp.radical_of(q).clone()).collect();
        v.sort();
        v.dedup();
        v
    };
    let primes: Vec<Ideal> = sp.prime_points().iter().map(|q| sp.points()[q].clone()).collect();
    if primes != radical_image {
        bad.push("prime points differ from the image of the radical".into());
    }
    if primes.as_slice() != d.prime.points() {
        bad.push("prime points of Sp A differ from Spec A".into());
    }
    Ok(verdict(
        bad.is_empty(),
        json!({
            "quasi": point_names(&d.quasi),
            "prime": point_names(&d.prime),
            "max": point_names(&d.maximal),
            "primary": point_names(&d.primary),
            "violations": truncated(bad),
        }),
    ))
}

fn basis_law(ctx: &Context) -> Result<Outcome> {
    let r = &ctx.ring;
    let sp = &ctx.data.quasi;
    let u = sp.basis_family();
    let mut bad = Vec::new();
    for f in r.elements() {
        for g in r.elements() {
            if u[f].intersection(&u[g]) != u[r.mul(f, g)] {
                bad.push(format!("U_{} ∩ U_{} ≠ U_{}", r.name(f), r.name(g), r.name(r.mul(f, g))));
            }
        }
    }
    Ok(verdict(bad.is_empty(), json!({ "pairs": r.size() * r.size(), "violations": truncated(bad) })))
}

fn spec_dense(ctx: &Context) -> Result<Outcome> {
    let sp = &ctx.data.quasi;
    let primes = sp.prime_points();
    let r = &ctx.ring;
    let bad: Vec<String> = r
        .elements()
        .filter(|&f| {
            let u = sp.basis_open(f).expect("in range");
            !u.is_empty() && !u.intersects(&primes)
        })
        .map(|f| format!("U_{} misses Spec A", r.name(f)))
        .collect();
    let closure_full = sp.space().closure(&primes)?.is_full() || sp.is_empty();
    Ok(verdict(
        bad.is_empty() && closure_full,
        json!({ "closure_of_spec_is_sp": closure_full, "violations": truncated(bad) }),
    ))
}

/// Open sets generated by `family` (closed under finite intersections and
/// arbitrary unions), computed naively.
pub fn brute_force_opens(n: usize, family: &[BitSet]) -> Vec<BitSet> {
    use std::collections::BTreeSet;
    let mut base: BTreeSet<BitSet> = family.iter().cloned().collect();
    base.insert(BitSet::full(n));
    loop {
        let v: Vec<BitSet> = base.iter().cloned().collect();
        let before = base.len();
        for a in &v {
            for b in &v {
                base.insert(a.intersection(b));
            }
        }
        if base.len() == before {
            break;
        }
    }
    let mut opens: BTreeSet<BitSet> = base.clone();
    opens.insert(BitSet::new(n));
    loop {
        let v: Vec<BitSet> = opens.iter().cloned().collect();
        let before = opens.len();
        for a in &v {
            for b in &base {
                opens.insert(a.union(b));
            }
        }
        if opens.len() == before {
            break;
        }
    }
    opens.into_iter().collect()
}

fn closure_of_point(ctx: &Context) -> Result<Outcome> {
    let sp = &ctx.data.quasi;
    let space = sp.space();
    let n = sp.len();
    let mut bad = Vec::new();
    for q in 0..n {
        let formula = sp.closure_of_point(q);
        if space.closure_of_point(q) != formula {
            bad.push(format!("space closure of {} disagrees with the formula", sp.points()[q]));
        }
        let rq = sp.index_of(sp.radical_of(q)).expect("radical is a point");
        if sp.closure_of_point(rq) != formula {
            bad.push(format!("closure of {} differs from closure of its radical", sp.points()[q]));
        }
    }
    let brute = n <= BRUTE_FORCE_POINTS;
    if brute {
        let opens = brute_force_opens(n, &sp.basis_family());
        for q in 0..n {
            let cl = BitSet::from_indices(
                n,
                (0..n).filter(|&p| opens.iter().all(|u| !u.contains(p) || u.contains(q))),
            );
            if cl != sp.closure_of_point(q) {
                bad.push(format!(
                    "brute-force closure of {} is {:?}",
                    sp.points()[q],
                    names(sp, &cl)
                ));
            }
        }
    }
    let closures: Vec<Value> = (0..n)
        .map(|q| json!({ "point": sp.points()[q].name(), "closure": names(sp, &sp.closure_of_point(q)) }))
        .collect();
    Ok(verdict(
        bad.is_empty(),
        json!({ "closures": closures, "brute_force": brute, "violations": truncated(bad) }),
    ))
}

fn closed_sets(ctx: &Context) -> Result<Outcome> {
    let d = &ctx.data;
    let sp = &d.quasi;
    let spec = &d.prime;
    let space = sp.space();
    let spec_in_sp = sp.embed(spec)?;
    let mut bad = Vec::new();
    let mut family = Vec::new();
    for i in &d.lattice {
        let v = sp.closed_set(i)?;
        if !space.is_closed(&v) {
            bad.push(format!("𝒱({i}) is not closed"));
        }
        for q in v.iter() {
            let rq = sp.index_of(sp.radical_of(q)).expect("radical is a point");
            if !v.contains(rq) {
                bad.push(format!("𝒱({i}) contains {} but not its radical", sp.points()[q]));
            }
        }
        let vi = BitSet::from_indices(
            spec.len(),
            (0..spec.len()).filter(|&p| i.is_subset(&spec.points()[p])),
        );
        let restricted = BitSet::from_indices(
            spec.len(),
            v.intersection(&spec_in_sp)
                .iter()
                .map(|q| spec.index_of(&sp.points()[q]).expect("prime point")),
        );
        if restricted != vi {
            bad.push(format!("𝒱({i}) ∩ Spec A ≠ V({i})"));
        }
        family.push(v);
    }
    let closed = space.closed_sets(ctx.opts.top.max_closed_sets)?;
    for c in &closed {
        if !family.contains(c) {
            bad.push(format!("closed set {:?} is not of the form 𝒱(I)", names(sp, c)));
        }
    }
    Ok(verdict(
        bad.is_empty(),
        json!({ "closed_sets": closed.len(), "ideals": d.lattice.len(), "violations": truncated(bad) }),
    ))
}

fn quasi_compact(ctx: &Context) -> Result<Outcome> {
    let r = &ctx.ring;
    let sp = &ctx.data.quasi;
    let u = sp.basis_family();
    let mut bad = Vec::new();
    let mut largest = 0;
    for f in r.elements() {
        let gs: Vec<Elem> = r.elements().filter(|&g| u[g].is_subset(&u[f])).collect();
        let sub = sp.cover_refine(f, &gs)?;
        largest = largest.max(sub.len());
        let mut union = sp.empty_set();
        for &g in &sub {
            union.union_with(&u[g]);
        }
        if union != u[f] || !Ideal::generated(r, &sub)?.contains_radical(f) {
            bad.push(format!("subcover of U_{} is not certified", r.name(f)));
        }
    }
    Ok(verdict(
        bad.is_empty(),
        json!({ "covers": r.size(), "largest_subcover": largest, "violations": truncated(bad) }),
    ))
}

fn retraction(ctx: &Context) -> Result<Outcome> {
    let sp = &ctx.data.quasi;
    let g = retraction_gamma(sp)?;
    let v = retraction_violations(&g, &ctx.data.lattice);
    let map: Vec<Value> = (0..sp.len())
        .map(|q| json!([sp.points()[q].name(), g.target.points()[g.point_map[q]].name()]))
        .collect();
    Ok(verdict(v.is_empty(), json!({ "gamma": map, "violations": truncated(v) })))
}

/// A canonical ring map out of `A` with the quasi-prime spectrum of its target
/// and the induced map back (or the reason it could not be built).
struct Canonical {
    label: String,
    hom: RingHom,
    lattice: Vec<Ideal>,
    induced: std::result::Result<SpectrumMap, Error>,
}

/// Quotients by proper ideals, and localizations at non-nilpotent elements.
/// Localizations depend only on the eventual idempotent of `f`, so they are
/// built once per idempotent and shared by every `f` with that idempotent.
struct CanonicalMaps {
    quotients: Vec<(Ideal, Canonical)>,
    locals: Vec<(Vec<Elem>, Canonical)>,
}

fn canonical(ctx: &Context, label: String, hom: RingHom) -> Result<Canonical> {
    let lattice = enumerate_ideals(hom.target(), ctx.opts.max_ideals)?;
    let sp_b = Spectrum::from_lattice(hom.target(), &lattice, SpectrumKind::Quasi);
    let induced = induced_map_between(&hom, &sp_b, &ctx.data.quasi);
    if let Err(e) = &induced {
        if !matches!(e, Error::Consistency(_)) {
            return Err(e.clone());
        }
    }
    Ok(Canonical {
        label,
        hom,
        lattice,
        induced,
    })
}

fn canonical_maps(ctx: &Context) -> Result<&CanonicalMaps> {
    ctx.canonical
        .get_or_init(|| {
            let r = &ctx.ring;
            let quotients = ctx
                .data
                .lattice
                .iter()
                .filter(|i| i.is_proper())
                .map(|i| {
                    let h = FiniteRing::quotient(r, i)?.1;
                    Ok((i.clone(), canonical(ctx, format!("A -> A/{i}"), h)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut groups: Vec<(Elem, Vec<Elem>)> = Vec::new();
            for f in r.elements().filter(|&f| !r.is_nilpotent(f)) {
                let e = r.eventual_idempotent(f);
                match groups.iter_mut().find(|(g, _)| *g == e) {
                    Some((_, fs)) => fs.push(f),
                    None => groups.push((e, vec![f])),
                }
            }
            let locals = groups
                .into_iter()
                .map(|(e, fs)| {
                    let h = FiniteRing::localize_at(r, e)?.1;
                    Ok((fs, canonical(ctx, format!("A -> A_{}", r.name(e)), h)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CanonicalMaps { quotients, locals })
        })
        .as_ref()
        .map_err(Clone::clone)
}

fn induced_continuous(ctx: &Context) -> Result<Outcome> {
    let maps = canonical_maps(ctx)?;
    let all = maps.quotients.iter().map(|(_, c)| c).chain(maps.locals.iter().map(|(_, c)| c));
    let mut bad = Vec::new();
    let mut count = 0;
    for c in all {
        count += 1;
        match &c.induced {
            Ok(m) if m.is_continuous() => {}
            Ok(_) => bad.push(format!("{}: induced map is not continuous", c.label)),
            Err(e) => bad.push(format!("{}: {e}", c.label)),
        }
        for j in &c.lattice {
            if Ideal::preimage(&c.hom, j)?.radical() != Ideal::preimage(&c.hom, &j.radical())? {
                bad.push(format!("{}: radical does not commute with the preimage of {j}", c.label));
            }
        }
    }
    Ok(verdict(bad.is_empty(), json!({ "maps": count, "violations": truncated(bad) })))
}

fn quotient_embedding(ctx: &Context) -> Result<Outcome> {
    let maps = canonical_maps(ctx)?;
    let sp = &ctx.data.quasi;
    let mut not_injective = Vec::new();
    let mut wrong_corrected = Vec::new();
    let mut witnesses = Vec::new();
    for (i, c) in &maps.quotients {
        let m = c.induced.as_ref().map_err(Clone::clone)?;
        if !m.is_injective() {
            not_injective.push(i.name());
        }
        let image = m.full_image();
        let above = BitSet::from_indices(sp.len(), (0..sp.len()).filter(|&q| i.is_subset(&sp.points()[q])));
        if image != above {
            wrong_corrected.push(i.name());
        }
        let v = sp.closed_set(i)?;
        if image != v {
            witnesses.push(json!({
                "ideal": i.name(),
                "image": names(sp, &image),
                "closed_set": names(sp, &v),
            }));
        }
    }
    let status = if !not_injective.is_empty() || !wrong_corrected.is_empty() {
        Status::Fail
    } else if !witnesses.is_empty() {
        Status::FailDocumented
    } else {
        Status::Pass
    };
    let total = witnesses.len();
    witnesses.truncate(LIST_LIMIT);
    Ok(Outcome {
        status,
        details: json!({
            "quotients": maps.quotients.len(),
            "not_injective": not_injective,
            "image_is_ideals_containing_I": wrong_corrected.is_empty(),
            "image_differs_from_closed_set": total,
            "witnesses": witnesses,
        }),
    })
}

fn localization_image(ctx: &Context) -> Result<Outcome> {
    let maps = canonical_maps(ctx)?;
    let sp = &ctx.data.quasi;
    let r = &ctx.ring;
    let mut bad = Vec::new();
    let mut rows = Vec::new();
    let mut count = 0;
    for (fs, c) in &maps.locals {
        let m = c.induced.as_ref().map_err(Clone::clone)?;
        let image = m.full_image();
        for &f in fs {
            count += 1;
            let uf = sp.basis_open(f)?;
            if !image.is_subset(&uf) {
                bad.push(format!("image of Sp(A_{}) leaves U_{}", r.name(f), r.name(f)));
            }
            rows.push(json!({
                "f": r.name(f),
                "image": names(sp, &image),
                "image_equals_U_f": image == uf,
                "injective": m.is_injective(),
            }));
        }
    }
    rows.truncate(LIST_LIMIT);
    Ok(verdict(
        bad.is_empty(),
        json!({ "localizations": count, "sample": rows, "violations": truncated(bad) }),
    ))
}

fn clopen_idempotents(ctx: &Context) -> Result<Outcome> {
    let sp = &ctx.data.quasi;
    let r = &ctx.ring;
    match clopen_sets(sp, &ctx.opts.top) {
        Ok(pairs) => {
            let rows: Vec<Value> = pairs
                .iter()
                .map(|(c, e)| json!({ "idempotent": r.name(*e), "clopen": names(sp, c) }))
                .collect();
            Ok(verdict(
                true,
                json!({ "clopens": pairs.len(), "idempotents": r.idempotents().len(), "pairs": rows }),
            ))
        }
        Err(Error::Consistency(msg)) => Ok(verdict(false, json!({ "violation": msg }))),
        Err(e) => Err(e),
    }
}

fn connectedness(ctx: &Context) -> Result<Outcome> {
    let comps = ctx.data.quasi.space().connected_components().len();
    let idem = ctx.ring.idempotents().len();
    let connected = comps == 1;
    Ok(verdict(
        connected == (idem == 2),
        json!({ "connected": connected, "components": comps, "idempotents": idem }),
    ))
}

fn components(ctx: &Context) -> Result<Outcome> {
    let sp = &ctx.data.quasi;
    let maxreg = max_regular_ideals(&ctx.ring);
    match connected_components(sp) {
        Ok(comps) => {
            let rows: Vec<Value> = maxreg
                .iter()
                .map(|m| json!({ "max_regular": m.name(), "component": names(sp, &sp.closed_set(m).expect("same ring")) }))
                .collect();
            Ok(verdict(
                comps.len() == maxreg.len(),
                json!({ "components": comps.len(), "max_regular": maxreg.len(), "pairs": rows }),
            ))
        }
        Err(Error::Consistency(msg)) => Ok(verdict(false, json!({ "violation": msg }))),
        Err(e) => Err(e),
    }
}

fn t_functor(ctx: &Context) -> Result<Outcome> {
    let sp = &ctx.data.quasi;
    let (t, phi) = match t_phi(sp, &ctx.opts.top) {
        Ok(x) => x,
        Err(Error::Consistency(msg)) => return Ok(verdict(false, json!({ "violation": msg }))),
        Err(e) => return Err(e),
    };
    let spec = &ctx.data.prime;
    let pairs: Vec<Value> = t
        .space
        .labels()
        .iter()
        .zip(phi.map())
        .map(|(z, &p)| json!([z, spec.points()[p].name()]))
        .collect();
    let homeo = phi.is_homeomorphism();
    // t(X) is sober, so applying t again changes nothing up to homeomorphism
    let tt = t_space(&t.space, &ctx.opts.top)?;
    let stable = tt.eta.is_homeomorphism();
    Ok(verdict(
        homeo && stable,
        json!({
            "phi": pairs,
            "continuous": phi.is_continuous(),
            "homeomorphism": homeo,
            "t_idempotent": stable,
        }),
    ))
}

fn generic_points(ctx: &Context) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut rows = Vec::new();
    for (sp, unique) in [(&ctx.data.quasi, false), (&ctx.data.prime, true)] {
        let space = sp.space();
        for z in space.irreducible_closed_subsets(&ctx.opts.top)? {
            let g = space.generic_points_unchecked(&z);
            if g.is_empty() || (unique && g.count() != 1) {
                bad.push(format!("{} {:?} has generic points {:?}", sp.kind(), names(sp, &z), names(sp, &g)));
            }
            if !unique {
                rows.push(json!({ "closed": names(sp, &z), "generic": names(sp, &g) }));
            }
        }
    }
    Ok(verdict(bad.is_empty(), json!({ "irreducible_closed": rows, "violations": truncated(bad) })))
}

fn irreducible_components(ctx: &Context) -> Result<Outcome> {
    let sp = &ctx.data.quasi;
    let irr = sp.space().irreducible_closed_subsets(&ctx.opts.top)?;
    let mut maximal: Vec<BitSet> = irr
        .iter()
        .filter(|z| !irr.iter().any(|w| w != *z && z.is_subset(w)))
        .cloned()
        .collect();
    maximal.sort();
    let mins = minimal_primes(&ctx.data.lattice);
    let mut expected: Vec<BitSet> = mins.iter().map(|p| sp.closed_set(p)).collect::<Result<_>>()?;
    expected.sort();
    expected.dedup();
    Ok(verdict(
        maximal == expected,
        json!({
            "components": maximal.iter().map(|z| names(sp, z)).collect::<Vec<_>>(),
            "minimal_primes": mins.iter().map(Ideal::name).collect::<Vec<_>>(),
        }),
    ))
}

fn spectral(ctx: &Context) -> Result<Outcome> {
    let d = &ctx.data;
    let space = d.quasi.space();
    let sober = space.is_sober(&ctx.opts.top)?;
    let spectral = space.is_spectral_finite(&ctx.opts.top)?;
    let sp_is_spec = d.quasi.points() == d.prime.points();
    let reduced = Ideal::zero(&ctx.ring).radical().len() == 1;
    Ok(verdict(
        sober == sp_is_spec && spectral == sp_is_spec && reduced == sp_is_spec,
        json!({ "sober": sober, "spectral": spectral, "sp_equals_spec": sp_is_spec, "reduced": reduced }),
    ))
}

fn hausdorff(ctx: &Context) -> Result<Outcome> {
    let d = &ctx.data;
    let h = d.quasi.space().is_hausdorff();
    let sp_is_max = d.quasi.points() == d.maximal.points();
    Ok(verdict(h == sp_is_max, json!({ "hausdorff": h, "sp_equals_max": sp_is_max })))
}

fn normal(ctx: &Context) -> Result<Outcome> {
    let d = &ctx.data;
    let o = &ctx.opts.top;
    let sp = d.quasi.space().is_normal(o)?;
    let spec = d.prime.space().is_normal(o)?;
    let max = d.maximal.space().is_normal(o)?;
    let pm = is_pm_ring(&d.lattice);
    Ok(verdict(
        sp == spec && (!spec || max) && pm == spec,
        json!({ "sp_normal": sp, "spec_normal": spec, "max_normal": max, "pm_ring": pm }),
    ))
}

fn local_ring(ctx: &Context) -> Result<Outcome> {
    let d = &ctx.data;
    let Some(m) = local_maximal_ideal(&d.lattice) else {
        return Ok(Outcome {
            status: Status::Inapplicable,
            details: json!({ "reason": "ring is not local" }),
        });
    };
    let space = d.quasi.space();
    let field = d.lattice.len() == 2;
    let hausdorff = space.is_hausdorff();
    let spectral = space.is_spectral_finite(&ctx.opts.top)?;
    let closed: Vec<String> = space.closed_points().iter().map(|&q| d.quasi.points()[q].name()).collect();
    let has_closed = !closed.is_empty();
    let agree = field == hausdorff && hausdorff == spectral && spectral == has_closed;
    Ok(Outcome {
        status: if agree { Status::Pass } else { Status::FailDocumented },
        details: json!({
            "maximal_ideal": m.name(),
            "field": field,
            "hausdorff": hausdorff,
            "spectral": spectral,
            "has_closed_point": has_closed,
            "closed_points": closed,
            "agree": agree,
        }),
    })
}

fn chain_ring(ctx: &Context) -> Result<Outcome> {
    Ok(match chain_ring_monoid(&ctx.data.quasi, &ctx.data.lattice) {
        ChainRing::Inapplicable(reason) => Outcome {
            status: Status::Inapplicable,
            details: json!({ "reason": reason }),
        },
        ChainRing::Applicable(rep) => verdict(
            rep.spectrum_is_powers,
            serde_json::to_value(&rep).map_err(|e| Error::Invalid(e.to_string()))?,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::RingOptions;

    fn run(n: u64) -> Vec<CheckResult> {
        let r = FiniteRing::zmod(n, &RingOptions::default()).unwrap();
        run_checks(&r, None, &CheckOptions::default()).unwrap()
    }

    fn status(rs: &[CheckResult], name: &str) -> Status {
        rs.iter().find(|c| c.name == name).unwrap().status
    }

    #[test]
    fn registry_names_unique() {
        let mut n = check_names();
        let len = n.len();
        n.sort();
        n.dedup();
        assert_eq!(n.len(), len);
    }

    #[test]
    fn z6_all_pass() {
        let rs = run(6);
        for c in &rs {
            assert!(
                matches!(c.status, Status::Pass | Status::Inapplicable),
                "{}: {} {}",
                c.name,
                c.status,
                c.details
            );
        }
        assert_eq!(status(&rs, "cor:local-ring"), Status::Inapplicable);
        let s = &rs.iter().find(|c| c.name == "sp:structure").unwrap().details;
        assert_eq!(s["quasi"], s["prime"]);
        assert_eq!(s["prime"], s["max"]);
    }

    #[test]
    fn z8_statuses() {
        let rs = run(8);
        for c in &rs {
            let expected = match c.name {
                "lem:quotient-embedding" => Status::FailDocumented,
                _ => Status::Pass,
            };
            assert_eq!(c.status, expected, "{}: {}", c.name, c.details);
        }
        let local = &rs.iter().find(|c| c.name == "cor:local-ring").unwrap().details;
        assert_eq!(local["has_closed_point"], json!(false));
        assert_eq!(local["field"], json!(false));
    }

    #[test]
    fn selection() {
        let r = FiniteRing::zmod(12, &RingOptions::default()).unwrap();
        let only = vec!["thm:components".to_string()];
        let rs = run_checks(&r, Some(&only), &CheckOptions::default()).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].status, Status::Pass);
        assert_eq!(rs[0].details["components"], json!(2));
        let bad = vec!["thm:nope".to_string()];
        assert!(run_checks(&r, Some(&bad), &CheckOptions::default()).is_err());
    }

    #[test]
    fn sequential_matches_parallel() {
        let r = FiniteRing::zmod(24, &RingOptions::default()).unwrap();
        let par = run_checks(&r, None, &CheckOptions::default()).unwrap();
        let seq = run_checks(&r, None, &CheckOptions { parallel: false, ..Default::default() }).unwrap();
        assert_eq!(
            serde_json::to_string(&par).unwrap(),
            serde_json::to_string(&seq).unwrap()
        );
    }

    #[test]
    fn brute_force_topology_small() {
        let s = |xs: &[usize]| BitSet::from_indices(3, xs.iter().copied());
        let opens = brute_force_opens(3, &[s(&[0, 1]), s(&[1, 2])]);
        assert_eq!(opens, {
            let mut v = vec![s(&[]), s(&[1]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])];
            v.sort();
            v
        });
    }
}
