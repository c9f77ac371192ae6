//! Finite topological spaces stored by minimal open neighbourhoods.
//!
//! A finite topology is determined by the least open set `U_x` containing each
//! point; the open sets are exactly the unions of these. Closure of a point is
//! the dual: `cl{x} = { y : x ∈ U_y }`. Everything here is exhaustive and is
//! meant for spaces with at most a few dozen points.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_CLOSED_SETS: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopOptions {
    /// Cap on enumerated closed (equivalently open) sets.
    pub max_closed_sets: usize,
    /// Take irreducible closed sets to be point closures only, skipping the
    /// exhaustive pass. Exact for finite spaces, but not independently checked.
    pub point_closures_only: bool,
}

impl Default for TopOptions {
    fn default() -> Self {
        TopOptions {
            max_closed_sets: DEFAULT_MAX_CLOSED_SETS,
            point_closures_only: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinTopSpace {
    labels: Vec<String>,
    min_open: Vec<BitSet>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpaceJson {
    pub n: usize,
    pub labels: Vec<String>,
    pub min_open: Vec<Vec<usize>>,
}

impl FinTopSpace {
    /// Checks `x ∈ U_x` and `y ∈ U_x ⇒ U_y ⊆ U_x`.
    pub fn new(labels: Vec<String>, min_open: Vec<BitSet>) -> Result<Self> {
        let n = labels.len();
        if min_open.len() != n || min_open.iter().any(|u| u.universe() != n) {
            return Err(Error::Topology("minimal opens do not match the point count".into()));
        }
        for (x, u) in min_open.iter().enumerate() {
            if !u.contains(x) {
                return Err(Error::Topology(format!("point {x} is not in its minimal open")));
            }
            for y in u {
                if !min_open[y].is_subset(u) {
                    return Err(Error::Topology(format!(
                        "U_{y} is not contained in U_{x} although {y} ∈ U_{x}"
                    )));
                }
            }
        }
        Ok(FinTopSpace { labels, min_open })
    }

    fn default_labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    /// Topology generated by `basis`. The least open around `x` is the
    /// intersection of all basis sets containing it, which is the same as first
    /// closing the basis under pairwise intersection.
    pub fn from_basis(n: usize, basis: &[BitSet], labels: Option<Vec<String>>) -> Result<Self> {
        let mut min_open = Vec::with_capacity(n);
        for x in 0..n {
            let mut u: Option<BitSet> = None;
            for b in basis.iter().filter(|b| b.contains(x)) {
                match &mut u {
                    Some(u) => u.intersect_with(b),
                    None => u = Some(b.clone()),
                }
            }
            match u {
                Some(u) => min_open.push(u),
                None => {
                    return Err(Error::Topology(format!("basis does not cover point {x}")));
                }
            }
        }
        Self::new(labels.unwrap_or_else(|| Self::default_labels(n)), min_open)
    }

    /// Alexandrov topology of a preorder: `leq[x][y]` means `y ∈ cl{x}`
    /// (x specializes to y); then `U_y = { x : leq[x][y] }`.
    pub fn from_specialization(labels: Vec<String>, leq: &[BitSet]) -> Result<Self> {
        let n = labels.len();
        let min_open = (0..n)
            .map(|y| BitSet::from_indices(n, (0..n).filter(|&x| leq[x].contains(y))))
            .collect();
        Self::new(labels, min_open)
    }

    pub fn discrete(n: usize) -> Self {
        FinTopSpace {
            labels: Self::default_labels(n),
            min_open: (0..n).map(|x| BitSet::from_indices(n, [x])).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        FinTopSpace {
            labels: Self::default_labels(n),
            min_open: vec![BitSet::full(n); n],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn min_open(&self, x: usize) -> &BitSet {
        &self.min_open[x]
    }

    pub fn min_opens(&self) -> &[BitSet] {
        &self.min_open
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.len())
    }

    pub fn full_set(&self) -> BitSet {
        BitSet::full(self.len())
    }

    fn check_subset(&self, s: &BitSet) -> Result<()> {
        if s.universe() == self.len() {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "subset over {} points used with a space of {} points",
                s.universe(),
                self.len()
            )))
        }
    }

    pub fn is_open(&self, s: &BitSet) -> bool {
        s.iter().all(|x| self.min_open[x].is_subset(s))
    }

    pub fn is_closed(&self, s: &BitSet) -> bool {
        self.is_open(&s.complement())
    }

    pub fn is_clopen(&self, s: &BitSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// `{ x : U_x ∩ S ≠ ∅ }`.
    pub fn closure(&self, s: &BitSet) -> Result<BitSet> {
        self.check_subset(s)?;
        Ok(BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&x| self.min_open[x].intersects(s)),
        ))
    }

    /// `{ x : U_x ⊆ S }`.
    pub fn interior(&self, s: &BitSet) -> Result<BitSet> {
        self.check_subset(s)?;
        Ok(BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&x| self.min_open[x].is_subset(s)),
        ))
    }

    /// Least open set containing `s`.
    pub fn open_hull(&self, s: &BitSet) -> BitSet {
        let mut u = self.empty_set();
        for x in s {
            u.union_with(&self.min_open[x]);
        }
        u
    }

    pub fn closure_of_point(&self, x: usize) -> BitSet {
        BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&y| self.min_open[y].contains(x)),
        )
    }

    /// `y ∈ cl{x}`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.min_open[y].contains(x)
    }

    pub fn subspace(&self, points: &BitSet) -> FinTopSpace {
        let idx: Vec<usize> = points.to_vec();
        let m = idx.len();
        let min_open = idx
            .iter()
            .map(|&x| {
                BitSet::from_indices(m, (0..m).filter(|&j| self.min_open[x].contains(idx[j])))
            })
            .collect();
        FinTopSpace {
            labels: idx.iter().map(|&x| self.labels[x].clone()).collect(),
            min_open,
        }
    }

    /// Components of the graph `x ~ y` iff `y ∈ U_x` or `x ∈ U_y`, sorted.
    pub fn connected_components(&self) -> Vec<BitSet> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut set = self.empty_set();
            let mut queue = VecDeque::from([start]);
            comp[start] = id;
            while let Some(x) = queue.pop_front() {
                set.insert(x);
                for (y, c) in comp.iter_mut().enumerate() {
                    if *c == usize::MAX && (self.min_open[x].contains(y) || self.min_open[y].contains(x)) {
                        *c = id;
                        queue.push_back(y);
                    }
                }
            }
            out.push(set);
        }
        out.sort();
        out
    }

    /// All open sets, sorted; fails once more than `cap` are found.
    pub fn open_sets(&self, cap: usize) -> Result<Vec<BitSet>> {
        let empty = self.empty_set();
        let mut seen: HashSet<BitSet> = HashSet::from([empty.clone()]);
        let mut queue = VecDeque::from([empty]);
        while let Some(s) = queue.pop_front() {
            for x in 0..self.len() {
                if s.contains(x) {
                    continue;
                }
                let t = s.union(&self.min_open[x]);
                if seen.insert(t.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ClosedSetCap { cap });
                    }
                    queue.push_back(t);
                }
            }
        }
        let mut v: Vec<BitSet> = seen.into_iter().collect();
        v.sort();
        Ok(v)
    }

    pub fn closed_sets(&self, cap: usize) -> Result<Vec<BitSet>> {
        let mut v: Vec<BitSet> = self.open_sets(cap)?.iter().map(BitSet::complement).collect();
        v.sort();
        Ok(v)
    }

    pub fn clopen_sets(&self, cap: usize) -> Result<Vec<BitSet>> {
        Ok(self
            .open_sets(cap)?
            .into_iter()
            .filter(|s| self.is_closed(s))
            .collect())
    }

    /// Irreducible closed subsets, sorted. Point closures are always included;
    /// unless `point_closures_only` is set, every enumerated closed set is also
    /// tested against the definition.
    pub fn irreducible_closed_subsets(&self, opts: &TopOptions) -> Result<Vec<BitSet>> {
        let mut out: BTreeSet<BitSet> = (0..self.len()).map(|x| self.closure_of_point(x)).collect();
        if !opts.point_closures_only {
            let closed = self.closed_sets(opts.max_closed_sets)?;
            for z in &closed {
                if !out.contains(z) && is_irreducible_among(z, &closed) {
                    out.insert(z.clone());
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// Points whose closure is `z`. Errors if `z` is not irreducible and closed.
    pub fn generic_points(&self, z: &BitSet, opts: &TopOptions) -> Result<BitSet> {
        self.check_subset(z)?;
        if !self.irreducible_closed_subsets(opts)?.contains(z) {
            return Err(Error::Invalid(format!(
                "{:?} is not an irreducible closed subset",
                z.to_vec()
            )));
        }
        Ok(self.generic_points_unchecked(z))
    }

    pub(crate) fn generic_points_unchecked(&self, z: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.len(),
            z.iter().filter(|&x| self.closure_of_point(x) == *z),
        )
    }

    pub fn closed_points(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.closure_of_point(x).count() == 1)
            .collect()
    }

    pub fn has_closed_point(&self) -> bool {
        !self.closed_points().is_empty()
    }

    /// Distinct points have disjoint neighbourhoods (for finite spaces: discrete).
    pub fn is_hausdorff(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.min_open[x].is_disjoint(&self.min_open[y])))
    }

    pub fn is_t0(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.min_open[x] != self.min_open[y]))
    }

    /// Every irreducible closed subset has exactly one generic point.
    pub fn is_sober(&self, opts: &TopOptions) -> Result<bool> {
        Ok(self
            .irreducible_closed_subsets(opts)?
            .iter()
            .all(|z| self.generic_points_unchecked(z).count() == 1))
    }

    /// Finite spaces are quasi-compact with a basis of quasi-compact opens
    /// closed under intersection, so spectrality reduces to sobriety.
    pub fn is_spectral_finite(&self, opts: &TopOptions) -> Result<bool> {
        self.is_sober(opts)
    }

    /// Exhaustive over pairs of disjoint closed sets.
    pub fn is_normal(&self, opts: &TopOptions) -> Result<bool> {
        Ok(self.normality_witness(opts)?.is_none())
    }

    /// A pair of disjoint closed sets that cannot be separated, if any.
    pub fn normality_witness(&self, opts: &TopOptions) -> Result<Option<(BitSet, BitSet)>> {
        let closed = self.closed_sets(opts.max_closed_sets)?;
        let hulls: Vec<BitSet> = closed.iter().map(|c| self.open_hull(c)).collect();
        for i in 0..closed.len() {
            for j in i + 1..closed.len() {
                if closed[i].is_disjoint(&closed[j]) && hulls[i].intersects(&hulls[j]) {
                    return Ok(Some((closed[i].clone(), closed[j].clone())));
                }
            }
        }
        Ok(None)
    }

    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            n: self.len(),
            labels: self.labels.clone(),
            min_open: self.min_open.iter().map(BitSet::to_vec).collect(),
        }
    }

    /// Classes of mutually specializing points.
    pub fn specialization_classes(&self) -> Vec<BitSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for x in 0..self.len() {
            if seen.contains(x) {
                continue;
            }
            let class = BitSet::from_indices(
                self.len(),
                (0..self.len()).filter(|&y| self.specializes(x, y) && self.specializes(y, x)),
            );
            seen.union_with(&class);
            out.push(class);
        }
        out
    }

    /// DOT digraph of the specialization order: edge `x -> y` when `y ∈ cl{x}`
    /// is a covering relation between classes of mutually specializing points;
    /// inside a class every point gets one edge to the class representative.
    pub fn to_dot(&self, name: &str, representative: impl Fn(&BitSet) -> usize, emphasized: &BitSet) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        for x in 0..self.len() {
            let shape = if emphasized.contains(x) {
                ", shape=doublecircle"
            } else {
                ""
            };
            let _ = writeln!(out, "  n{x} [label=\"{}\"{shape}];", escape(&self.labels[x]));
        }
        let classes = self.specialization_classes();
        let reps: Vec<usize> = classes.iter().map(&representative).collect();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (class, &r) in classes.iter().zip(&reps) {
            edges.extend(class.iter().filter(|&x| x != r).map(|x| (x, r)));
        }
        let below = |a: usize, b: usize| a != b && self.specializes(reps[a], reps[b]);
        for a in 0..classes.len() {
            for b in 0..classes.len() {
                if below(a, b) && !(0..classes.len()).any(|c| below(a, c) && below(c, b)) {
                    edges.push((reps[a], reps[b]));
                }
            }
        }
        edges.sort_unstable();
        for (x, y) in edges {
            let _ = writeln!(out, "  n{x} -> n{y};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `z` is nonempty and not the union of two proper closed subsets, decided over
/// an explicit list of all closed sets.
fn is_irreducible_among(z: &BitSet, closed: &[BitSet]) -> bool {
    if z.is_empty() {
        return false;
    }
    let proper: Vec<&BitSet> = closed.iter().filter(|c| c.is_subset(z) && *c != z).collect();
    let maximal: Vec<&BitSet> = proper
        .iter()
        .filter(|a| !proper.iter().any(|b| *b != **a && a.is_subset(b)))
        .copied()
        .collect();
    !maximal
        .iter()
        .enumerate()
        .any(|(i, a)| maximal[i..].iter().any(|b| a.union(b) == *z))
}

/// A point map between finite spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousMap {
    source: FinTopSpace,
    target: FinTopSpace,
    map: Vec<usize>,
}

impl ContinuousMap {
    /// Checked constructor: fails unless the map is continuous.
    pub fn new(source: FinTopSpace, target: FinTopSpace, map: Vec<usize>) -> Result<Self> {
        let f = Self::from_points(source, target, map)?;
        if !f.is_continuous() {
            return Err(Error::Topology("map is not continuous".into()));
        }
        Ok(f)
    }

    /// Unchecked with respect to continuity; use [`ContinuousMap::is_continuous`].
    pub fn from_points(source: FinTopSpace, target: FinTopSpace, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::Invalid("point map has the wrong shape".into()));
        }
        Ok(ContinuousMap {
            source,
            target,
            map,
        })
    }

    pub fn identity(space: &FinTopSpace) -> Self {
        ContinuousMap {
            source: space.clone(),
            target: space.clone(),
            map: (0..space.len()).collect(),
        }
    }

    pub fn source(&self) -> &FinTopSpace {
        &self.source
    }

    pub fn target(&self) -> &FinTopSpace {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, s: &BitSet) -> BitSet {
        BitSet::from_indices(self.target.len(), s.iter().map(|x| self.map[x]))
    }

    pub fn preimage(&self, s: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.source.len(),
            (0..self.source.len()).filter(|&x| s.contains(self.map[x])),
        )
    }

    /// Preimage of every minimal open of the target is open.
    pub fn is_continuous(&self) -> bool {
        self.target
            .min_opens()
            .iter()
            .all(|u| self.source.is_open(&self.preimage(u)))
    }

    /// Image of every minimal open of the source is open.
    pub fn is_open_map(&self) -> bool {
        self.source
            .min_opens()
            .iter()
            .all(|u| self.target.is_open(&self.image(u)))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.target.empty_set();
        self.map.iter().all(|&y| seen.insert(y))
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&self.source.full_set()).is_full()
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective() && self.is_continuous() && self.is_open_map()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ContinuousMap) -> Result<ContinuousMap> {
        if self.target != other.source {
            return Err(Error::Invalid("maps are not composable".into()));
        }
        Ok(ContinuousMap {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        })
    }
}

/// The space of irreducible closed subsets together with the canonical map
/// `x ↦ cl{x}`.
#[derive(Debug, Clone)]
pub struct TSpace {
    pub space: FinTopSpace,
    /// Point `i` of `space` is the irreducible closed subset `sets[i]` of the base.
    pub sets: Vec<BitSet>,
    pub eta: ContinuousMap,
}

impl TSpace {
    pub fn index_of(&self, z: &BitSet) -> Option<usize> {
        self.sets.binary_search(z).ok()
    }
}

/// Points are the irreducible closed subsets `Z`; closed sets are the
/// `t(Y) = { Z : Z ⊆ Y }` for closed `Y`. Minimal opens are computed from that
/// closed-set family.
pub fn t_space(x: &FinTopSpace, opts: &TopOptions) -> Result<TSpace> {
    let sets = x.irreducible_closed_subsets(opts)?;
    let m = sets.len();
    let closed = x.closed_sets(opts.max_closed_sets)?;
    let t_closed: Vec<BitSet> = closed
        .iter()
        .map(|y| BitSet::from_indices(m, (0..m).filter(|&i| sets[i].is_subset(y))))
        .collect();
    let min_open: Vec<BitSet> = (0..m)
        .map(|i| {
            let mut u = BitSet::full(m);
            for c in t_closed.iter().filter(|c| !c.contains(i)) {
                u.difference_with(c);
            }
            u
        })
        .collect();
    let labels = sets
        .iter()
        .map(|z| {
            let names: Vec<&str> = z.iter().map(|p| x.labels[p].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let space = FinTopSpace::new(labels, min_open)?;
    let index: HashMap<&BitSet, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let eta_map = (0..x.len()).map(|p| index[&x.closure_of_point(p)]).collect();
    let eta = ContinuousMap::from_points(x.clone(), space.clone(), eta_map)?;
    if !eta.is_continuous() {
        return Err(Error::Consistency("x ↦ cl{x} is not continuous".into()));
    }
    Ok(TSpace { space, sets, eta })
}

/// `t(f): Z ↦ cl(f(Z))` between precomputed t-spaces.
pub fn t_map_between(f: &ContinuousMap, src: &TSpace, tgt: &TSpace) -> Result<ContinuousMap> {
    let map = src
        .sets
        .iter()
        .map(|z| {
            let img = f.target.closure(&f.image(z))?;
            tgt.index_of(&img).ok_or_else(|| {
                Error::Consistency(format!(
                    "closure of the image of {:?} is not irreducible",
                    z.to_vec()
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let g = ContinuousMap::from_points(src.space.clone(), tgt.space.clone(), map)?;
    if !g.is_continuous() {
        return Err(Error::Consistency("t(f) is not continuous".into()));
    }
    Ok(g)
}

pub fn t_map(f: &ContinuousMap, opts: &TopOptions) -> Result<ContinuousMap> {
    let src = t_space(&f.source, opts)?;
    let tgt = t_space(&f.target, opts)?;
    t_map_between(f, &src, &tgt)
}
