//! Independent oracles. These only read the ring tables and plain sets; they
//! never call the classifiers or topology code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use qspec_core::{BitSet, FiniteRing};

pub type Set = BTreeSet<usize>;

/// `{ f : f^k ∈ I for some 1 <= k <= |A| }` by repeated multiplication.
pub fn radical(r: &FiniteRing, members: &Set) -> Set {
    r.elements()
        .filter(|&f| {
            let mut p = f;
            for _ in 0..r.size() {
                if members.contains(&p) {
                    return true;
                }
                p = r.mul(p, f);
            }
            false
        })
        .collect()
}

pub fn is_prime(r: &FiniteRing, members: &Set) -> bool {
    members.len() < r.size()
        && r.elements().all(|f| {
            r.elements()
                .all(|g| !members.contains(&r.mul(f, g)) || members.contains(&f) || members.contains(&g))
        })
}

pub fn to_set(b: &BitSet) -> Set {
    b.iter().collect()
}

/// All subsets closed under `+` and ambient `*`, found by closing every
/// generating pair; fine for rings of at most 64 elements.
pub fn all_ideals(r: &FiniteRing) -> Vec<Set> {
    let close = |seed: &Set| -> Set {
        let mut s = seed.clone();
        s.insert(0);
        loop {
            let mut next = s.clone();
            for &a in &s {
                for &b in &s {
                    next.insert(r.add(a, b));
                }
                for x in r.elements() {
                    next.insert(r.mul(a, x));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    };
    let mut found: BTreeSet<Set> = BTreeSet::new();
    let mut frontier = vec![close(&Set::new())];
    while let Some(i) = frontier.pop() {
        if !found.insert(i.clone()) {
            continue;
        }
        for a in r.elements() {
            if !i.contains(&a) {
                let mut s = i.clone();
                s.insert(a);
                frontier.push(close(&s));
            }
        }
    }
    found.into_iter().collect()
}

/// Opens generated by `family`: close under intersection, then under union.
pub fn generated_opens(n: usize, family: &[Set]) -> Vec<Set> {
    let full: Set = (0..n).collect();
    let mut base: BTreeSet<Set> = family.iter().cloned().collect();
    base.insert(full);
    loop {
        let v: Vec<Set> = base.iter().cloned().collect();
        let before = base.len();
        for a in &v {
            for b in &v {
                base.insert(a.intersection(b).copied().collect());
            }
        }
        if base.len() == before {
            break;
        }
    }
    let mut opens = base.clone();
    opens.insert(Set::new());
    loop {
        let v: Vec<Set> = opens.iter().cloned().collect();
        let before = opens.len();
        for a in &v {
            for b in &base {
                opens.insert(a.union(b).copied().collect());
            }
        }
        if opens.len() == before {
            break;
        }
    }
    opens.into_iter().collect()
}

/// `cl{q}` read off an explicit list of opens.
pub fn closure_from_opens(n: usize, opens: &[Set], q: usize) -> Set {
    (0..n)
        .filter(|&p| opens.iter().all(|u| !u.contains(&p) || u.contains(&q)))
        .collect()
}

/// Connected components of the graph with an edge `a - b` whenever one lies
/// in the closure of the other.
pub fn components(closures: &[Set]) -> BTreeSet<Set> {
    let n = closures.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (a, cl) in closures.iter().enumerate() {
        for &b in cl {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut out: std::collections::BTreeMap<usize, Set> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        out.entry(r).or_default().insert(x);
    }
    out.into_values().collect()
}

pub fn idempotent_count(r: &FiniteRing) -> usize {
    r.elements().filter(|&e| r.mul(e, e) == e).count()
}

pub fn battery() -> Vec<(String, Arc<FiniteRing>)> {
    qspec_core::battery::battery(&Default::default()).expect("battery builds")
}
