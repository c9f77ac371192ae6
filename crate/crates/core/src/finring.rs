//! Finite commutative unital rings given by explicit tables.
//!
//! Elements are dense indices `0..size`. After construction the zero element
//! is always index 0 and the identity is always index 1; every constructor
//! canonicalizes to that layout so reports are reproducible.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::syntax;

pub type Elem = usize;

/// Rings at or below this size are axiom-checked at construction under [`AxiomCheck::Auto`].
pub const AXIOM_AUTO_LIMIT: usize = 256;
pub const DEFAULT_MAX_RING_SIZE: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AxiomCheck {
    /// Verify when `size <= AXIOM_AUTO_LIMIT`.
    #[default]
    Auto,
    Always,
    Never,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingOptions {
    pub max_size: usize,
    pub axioms: AxiomCheck,
}

impl Default for RingOptions {
    fn default() -> Self {
        RingOptions {
            max_size: DEFAULT_MAX_RING_SIZE,
            axioms: AxiomCheck::Auto,
        }
    }
}

/// How a ring was built; drives element-literal parsing.
#[derive(Debug, Clone)]
enum Structure {
    Zmod(u64),
    Product {
        left: Arc<FiniteRing>,
        right: Arc<FiniteRing>,
        index: Vec<Elem>,
    },
    PolyQuot {
        base: Arc<FiniteRing>,
        var: String,
        modulus: Vec<Elem>,
        index: Vec<Elem>,
    },
    Quot {
        base: Arc<FiniteRing>,
        class: Vec<Elem>,
    },
    Local {
        base: Arc<FiniteRing>,
        embed: Vec<Elem>,
    },
    Tables,
}

pub struct FiniteRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    names: Vec<String>,
    by_name: HashMap<String, Elem>,
    recipe: String,
    structure: Structure,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("recipe", &self.recipe)
            .field("size", &self.size)
            .finish()
    }
}

/// Tables in some natural numbering, before canonical reordering.
struct Raw {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    names: Vec<String>,
    zero: usize,
    one: usize,
}

impl Raw {
    fn build(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        name: impl Fn(usize) -> String,
        zero: usize,
        one: usize,
    ) -> Raw {
        let mut at = Vec::with_capacity(size * size);
        let mut mt = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                at.push(add(a, b) as u32);
                mt.push(mul(a, b) as u32);
            }
        }
        Raw {
            size,
            add: at,
            mul: mt,
            names: (0..size).map(name).collect(),
            zero,
            one,
        }
    }

    /// Returns the canonical ring together with `pos`: natural index -> canonical index.
    fn finish(
        self,
        recipe: String,
        opts: &RingOptions,
        structure: impl FnOnce(&[Elem]) -> Structure,
    ) -> Result<(FiniteRing, Vec<Elem>)> {
        let n = self.size;
        if self.zero == self.one {
            return Err(Error::ZeroRing(recipe));
        }
        // canonical order: zero, one, then the rest in natural order
        let mut order = Vec::with_capacity(n);
        order.push(self.zero);
        order.push(self.one);
        order.extend((0..n).filter(|&i| i != self.zero && i != self.one));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let (oa, ob) = (order[a], order[b]);
                add[a * n + b] = pos[self.add[oa * n + ob] as usize] as u32;
                mul[a * n + b] = pos[self.mul[oa * n + ob] as usize] as u32;
            }
        }
        let names: Vec<String> = order.iter().map(|&o| self.names[o].clone()).collect();
        let structure = structure(&pos);
        let ring = FiniteRing::assemble(n, add, mul, names, recipe, structure)?;
        ring.check_on_construct(opts)?;
        Ok((ring, pos))
    }
}

impl FiniteRing {
    fn assemble(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        names: Vec<String>,
        recipe: String,
        structure: Structure,
    ) -> Result<FiniteRing> {
        let mut neg = vec![u32::MAX; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b] == 0 {
                    neg[a] = b as u32;
                    break;
                }
            }
            if neg[a] == u32::MAX {
                return Err(Error::Axiom(format!(
                    "element {} has no additive inverse",
                    names[a]
                )));
            }
        }
        let mut by_name = HashMap::with_capacity(size);
        for (i, nm) in names.iter().enumerate() {
            if by_name.insert(nm.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate element name '{nm}'")));
            }
        }
        Ok(FiniteRing {
            size,
            add,
            mul,
            neg,
            names,
            by_name,
            recipe,
            structure,
        })
    }

    fn check_on_construct(&self, opts: &RingOptions) -> Result<()> {
        let verify = match opts.axioms {
            AxiomCheck::Always => true,
            AxiomCheck::Never => false,
            AxiomCheck::Auto => self.size <= AXIOM_AUTO_LIMIT,
        };
        if verify {
            self.verify_axioms()?;
        }
        Ok(())
    }

    fn check_size(size: u128, opts: &RingOptions) -> Result<usize> {
        if size > opts.max_size as u128 {
            return Err(Error::RingTooLarge {
                size,
                cap: opts.max_size,
            });
        }
        Ok(size as usize)
    }

    /// The integers modulo `n`.
    pub fn zmod(n: u64, opts: &RingOptions) -> Result<Arc<FiniteRing>> {
        if n < 2 {
            return Err(Error::ZeroRing(format!("Zmod({n}) has fewer than two elements")));
        }
        let size = Self::check_size(n as u128, opts)?;
        let raw = Raw::build(
            size,
            |a, b| (a + b) % size,
            |a, b| ((a as u64 * b as u64) % n) as usize,
            |a| a.to_string(),
            0,
            1,
        );
        let (ring, _) = raw.finish(format!("Zmod({n})"), opts, |_| Structure::Zmod(n))?;
        Ok(Arc::new(ring))
    }

    /// Componentwise product ring; elements are named `(a,b)`.
    pub fn product(
        left: &Arc<FiniteRing>,
        right: &Arc<FiniteRing>,
        opts: &RingOptions,
    ) -> Result<Arc<FiniteRing>> {
        let (l, r) = (left.size, right.size);
        let size = Self::check_size(l as u128 * r as u128, opts)?;
        let split = |i: usize| (i / r, i % r);
        let raw = Raw::build(
            size,
            |a, b| {
                let ((a1, a2), (b1, b2)) = (split(a), split(b));
                left.add(a1, b1) * r + right.add(a2, b2)
            },
            |a, b| {
                let ((a1, a2), (b1, b2)) = (split(a), split(b));
                left.mul(a1, b1) * r + right.mul(a2, b2)
            },
            |a| {
                let (a1, a2) = split(a);
                format!("({},{})", left.name(a1), right.name(a2))
            },
            0,
            r + 1,
        );
        let recipe = format!("Prod({},{})", left.recipe, right.recipe);
        let (ring, _) = raw.finish(recipe, opts, |pos| Structure::Product {
            left: left.clone(),
            right: right.clone(),
            index: pos.to_vec(),
        })?;
        Ok(Arc::new(ring))
    }

    /// `base[var]/(modulus)` for a monic `modulus` given low-to-high.
    pub fn poly_quotient(
        base: &Arc<FiniteRing>,
        var: &str,
        modulus: &[Elem],
        opts: &RingOptions,
    ) -> Result<Arc<FiniteRing>> {
        if !syntax::is_ident(var) {
            return Err(Error::Invalid(format!("bad variable name '{var}'")));
        }
        if modulus.iter().any(|&c| c >= base.size) {
            return Err(Error::Invalid("modulus coefficient out of range".into()));
        }
        let shown = format_poly(base, var, modulus);
        let d = modulus.len().saturating_sub(1);
        if d == 0 || modulus[d] != base.one() {
            return Err(Error::NonMonic(shown));
        }
        let s = base.size;
        let size = Self::check_size((s as u128).checked_pow(d as u32).unwrap_or(u128::MAX), opts)?;
        let decode = |mut i: usize| -> Vec<Elem> {
            let mut c = vec![0; d];
            for slot in c.iter_mut() {
                *slot = i % s;
                i /= s;
            }
            c
        };
        let encode = |c: &[Elem]| -> usize { c.iter().rev().fold(0, |acc, &x| acc * s + x) };
        let coeffs_nat: Vec<Vec<Elem>> = (0..size).map(decode).collect();
        let raw = Raw::build(
            size,
            |a, b| {
                let c: Vec<Elem> = coeffs_nat[a]
                    .iter()
                    .zip(&coeffs_nat[b])
                    .map(|(&x, &y)| base.add(x, y))
                    .collect();
                encode(&c)
            },
            |a, b| encode(&poly_mul_mod(base, &coeffs_nat[a], &coeffs_nat[b], modulus)),
            |a| format_poly(base, var, &coeffs_nat[a]),
            0,
            1,
        );
        let recipe = format!("PolyQuot({},{},{})", base.recipe, var, shown);
        let (ring, _) = raw.finish(recipe, opts, |pos| Structure::PolyQuot {
            base: base.clone(),
            var: var.to_string(),
            modulus: modulus.to_vec(),
            index: pos.to_vec(),
        })?;
        Ok(Arc::new(ring))
    }

    /// `A/I` on least-index coset representatives, with the canonical surjection.
    pub fn quotient(base: &Arc<FiniteRing>, ideal: &Ideal) -> Result<(Arc<FiniteRing>, RingHom)> {
        Self::quotient_with(base, ideal, &RingOptions::default())
    }

    pub fn quotient_with(
        base: &Arc<FiniteRing>,
        ideal: &Ideal,
        opts: &RingOptions,
    ) -> Result<(Arc<FiniteRing>, RingHom)> {
        if !Arc::ptr_eq(ideal.ring(), base) {
            return Err(Error::RingMismatch("ideal belongs to another ring".into()));
        }
        if !ideal.is_proper() {
            return Err(Error::ZeroRing(format!(
                "quotient of {} by the unit ideal",
                base.recipe
            )));
        }
        let n = base.size;
        let members = ideal.members().to_vec();
        let rep: Vec<Elem> = (0..n)
            .map(|a| members.iter().map(|&i| base.add(a, i)).min().unwrap_or(a))
            .collect();
        let mut reps: Vec<Elem> = rep.clone();
        reps.sort_unstable();
        reps.dedup();
        let mut slot = vec![usize::MAX; n];
        for (q, &r) in reps.iter().enumerate() {
            slot[r] = q;
        }
        let class: Vec<Elem> = rep.iter().map(|&r| slot[r]).collect();
        let m = reps.len();
        let raw = Raw::build(
            m,
            |a, b| class[base.add(reps[a], reps[b])],
            |a, b| class[base.mul(reps[a], reps[b])],
            |a| format!("{}+I", base.name(reps[a])),
            class[0],
            class[1],
        );
        let gens = ideal_literals(ideal);
        let recipe = format!("Quot({},[{}])", base.recipe, gens.join(","));
        let (ring, pos) = raw.finish(recipe, opts, |_| Structure::Tables)?;
        let class: Vec<Elem> = class.iter().map(|&c| pos[c]).collect();
        let mut ring = ring;
        ring.structure = Structure::Quot {
            base: base.clone(),
            class: class.clone(),
        };
        let ring = Arc::new(ring);
        let hom = RingHom::new(base.clone(), ring.clone(), class)?;
        Ok((ring, hom))
    }

    /// The localization at `f`, realized as `eA` where `e` is the idempotent
    /// in the eventual cycle of the powers of `f`. Fails with
    /// [`Error::ZeroLocalization`] when `f` is nilpotent.
    pub fn localize_at(base: &Arc<FiniteRing>, f: Elem) -> Result<(Arc<FiniteRing>, RingHom)> {
        base.check_elem(f)?;
        let e = base.eventual_idempotent(f);
        if e == base.zero() {
            return Err(Error::ZeroLocalization(base.name(f).to_string()));
        }
        let mut members: Vec<Elem> = (0..base.size).map(|a| base.mul(e, a)).collect();
        members.sort_unstable();
        members.dedup();
        let mut slot = vec![usize::MAX; base.size];
        for (i, &m) in members.iter().enumerate() {
            slot[m] = i;
        }
        let raw = Raw::build(
            members.len(),
            |a, b| slot[base.add(members[a], members[b])],
            |a, b| slot[base.mul(members[a], members[b])],
            |a| base.name(members[a]).to_string(),
            slot[0],
            slot[e],
        );
        let recipe = format!("Loc({},{})", base.recipe, base.name(f));
        let (ring, pos) = raw.finish(recipe, &RingOptions::default(), |pos| {
            let mut embed = vec![0; members.len()];
            for (nat, &idx) in pos.iter().enumerate() {
                embed[idx] = members[nat];
            }
            Structure::Local {
                base: base.clone(),
                embed,
            }
        })?;
        let ring = Arc::new(ring);
        let map = (0..base.size)
            .map(|a| pos[slot[base.mul(e, a)]])
            .collect();
        let hom = RingHom::new(base.clone(), ring.clone(), map)?;
        Ok((ring, hom))
    }

    /// Builds a ring from raw tables; zero and one are located and moved to indices 0 and 1.
    pub fn from_tables(
        add: Vec<Vec<Elem>>,
        mul: Vec<Vec<Elem>>,
        names: Vec<String>,
        opts: &RingOptions,
    ) -> Result<Arc<FiniteRing>> {
        let n = names.len();
        Self::check_size(n as u128, opts)?;
        let square = |t: &Vec<Vec<Elem>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n));
        if !square(&add) || !square(&mul) {
            return Err(Error::Invalid(format!("tables must be {n}x{n} with entries < {n}")));
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|a| add[z][a] == a && add[a][z] == a))
            .ok_or_else(|| Error::Axiom("no additive identity".into()))?;
        let one = (0..n)
            .find(|&u| (0..n).all(|a| mul[u][a] == a && mul[a][u] == a))
            .ok_or_else(|| Error::Axiom("no multiplicative identity".into()))?;
        let raw = Raw::build(n, |a, b| add[a][b], |a, b| mul[a][b], |a| names[a].clone(), zero, one);
        let (ring, _) = raw.finish("Tables".into(), opts, |_| Structure::Tables)?;
        Ok(Arc::new(ring))
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        1
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let (mut base, mut acc) = (a, self.one());
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Construction expression in the ring DSL (localizations print as `Loc(..)`).
    pub fn recipe(&self) -> &str {
        &self.recipe
    }

    pub fn check_elem(&self, a: Elem) -> Result<()> {
        if a < self.size {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "element index {a} out of range for ring of size {}",
                self.size
            )))
        }
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == self.one())
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.eventual_idempotent(a) == self.zero()
    }

    /// All `x` with `x*x = x`, ascending.
    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// The unique idempotent on the cycle that the powers `f, f^2, ...` fall into.
    pub fn eventual_idempotent(&self, f: Elem) -> Elem {
        let mut seen = vec![false; self.size];
        let mut p = f;
        while !seen[p] {
            seen[p] = true;
            p = self.mul(p, f);
        }
        // p now lies on the cycle; walk it looking for the idempotent
        let start = p;
        loop {
            if self.is_idempotent(p) {
                return p;
            }
            p = self.mul(p, f);
            if p == start {
                unreachable!("power cycle without idempotent");
            }
        }
    }

    /// Exhaustive scan of the commutative-unital-ring axioms. O(size^3).
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.size;
        let nm = |a: Elem| self.name(a);
        if n < 2 {
            return Err(Error::ZeroRing(self.recipe.clone()));
        }
        for a in 0..n {
            if self.add(0, a) != a {
                return Err(Error::Axiom(format!("0 + {} != {}", nm(a), nm(a))));
            }
            if self.mul(1, a) != a {
                return Err(Error::Axiom(format!("1 * {} != {}", nm(a), nm(a))));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(Error::Axiom(format!("{} has no additive inverse", nm(a))));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::Axiom(format!("addition of {},{} not commutative", nm(a), nm(b))));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::Axiom(format!(
                        "multiplication of {},{} not commutative",
                        nm(a),
                        nm(b)
                    )));
                }
                let (ab_add, ab_mul) = (self.add(a, b), self.mul(a, b));
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::Axiom(format!(
                            "addition not associative at {},{},{}",
                            nm(a),
                            nm(b),
                            nm(c)
                        )));
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Axiom(format!(
                            "multiplication not associative at {},{},{}",
                            nm(a),
                            nm(b),
                            nm(c)
                        )));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_mul, self.mul(a, c)) {
                        return Err(Error::Axiom(format!(
                            "distributivity fails at {},{},{}",
                            nm(a),
                            nm(b),
                            nm(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses an element literal: the canonical name, or any literal accepted by
    /// the ring's constructor (integers reduce mod n, polynomials reduce mod the modulus).
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let lit: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(&i) = self.by_name.get(&lit) {
            return Ok(i);
        }
        let bad = |reason: &str| Error::Literal {
            literal: lit.clone(),
            reason: reason.to_string(),
        };
        match &self.structure {
            Structure::Zmod(n) => {
                let s = syntax::strip_wrapping(&lit);
                let v: i128 = s.parse().map_err(|_| bad("expected an integer"))?;
                Ok(v.rem_euclid(*n as i128) as Elem)
            }
            Structure::Product {
                left, right, index, ..
            } => {
                let inner = if syntax::is_wrapped(&lit) {
                    &lit[1..lit.len() - 1]
                } else {
                    return Err(bad("expected '(a,b)'"));
                };
                let parts = syntax::split_top_level(inner, ',');
                if parts.len() != 2 {
                    return Err(bad("expected exactly two components"));
                }
                let a = left.parse_element(parts[0])?;
                let b = right.parse_element(parts[1])?;
                Ok(index[a * right.size + b])
            }
            Structure::PolyQuot {
                base,
                var,
                modulus,
                index,
                ..
            } => {
                let d = modulus.len() - 1;
                let mut acc = vec![base.zero(); d];
                for m in syntax::split_top_level(syntax::strip_wrapping(&lit), '+') {
                    let (coef, k) = syntax::split_monomial(m, var)?;
                    let c = match coef {
                        Some(c) => base.parse_element(syntax::strip_wrapping(c))?,
                        None => base.one(),
                    };
                    let mut term = vec![base.zero(); d];
                    let reduced = x_power_mod(base, k as usize, modulus);
                    for (slot, &r) in term.iter_mut().zip(&reduced) {
                        *slot = base.mul(c, r);
                    }
                    for (a, t) in acc.iter_mut().zip(term) {
                        *a = base.add(*a, t);
                    }
                }
                let nat = acc.iter().rev().fold(0, |s, &x| s * base.size + x);
                Ok(index[nat])
            }
            Structure::Quot { base, class } => {
                let inner = lit.strip_suffix("+I").ok_or_else(|| bad("expected 'lit+I'"))?;
                let a = base.parse_element(syntax::strip_wrapping(inner))?;
                Ok(class[a])
            }
            Structure::Local { base, embed } => {
                let a = base.parse_element(&lit)?;
                embed
                    .iter()
                    .position(|&x| x == a)
                    .ok_or_else(|| bad("element does not lie in the localized ring"))
            }
            Structure::Tables => Err(bad("unknown element name")),
        }
    }
}

/// `x^k` reduced modulo a monic modulus (low-to-high).
fn x_power_mod(base: &FiniteRing, k: usize, modulus: &[Elem]) -> Vec<Elem> {
    let d = modulus.len() - 1;
    let mut x = vec![base.zero(); d];
    if k < d {
        x[k] = base.one();
        return x;
    }
    let mut one = vec![base.zero(); d];
    one[0] = base.one();
    let mut acc = one;
    let mut gen = vec![base.zero(); d];
    if d == 1 {
        gen[0] = base.neg(modulus[0]);
    } else {
        gen[1] = base.one();
    }
    for _ in 0..k {
        acc = poly_mul_mod(base, &acc, &gen, modulus);
    }
    acc
}

/// Product of two reduced polynomials followed by reduction by the monic modulus.
fn poly_mul_mod(base: &FiniteRing, a: &[Elem], b: &[Elem], modulus: &[Elem]) -> Vec<Elem> {
    let d = modulus.len() - 1;
    let mut prod = vec![base.zero(); 2 * d];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = base.add(prod[i + j], base.mul(x, y));
        }
    }
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = base.zero();
        // x^k = x^(k-d) * x^d and x^d = -(m_0 + ... + m_{d-1} x^{d-1})
        for (i, &m) in modulus[..d].iter().enumerate() {
            let t = base.mul(c, m);
            prod[k - d + i] = base.sub(prod[k - d + i], t);
        }
    }
    prod.truncate(d);
    prod
}

/// Displays a coefficient vector (low-to-high) as a polynomial, highest degree first.
pub(crate) fn format_poly(base: &FiniteRing, var: &str, coeffs: &[Elem]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == base.zero() {
            continue;
        }
        let lit = base.name(c);
        let lit = if syntax::needs_parens(lit) {
            format!("({lit})")
        } else {
            lit.to_string()
        };
        let mono = match (k, c == base.one()) {
            (0, _) => lit,
            (1, true) => var.to_string(),
            (1, false) => format!("{lit}*{var}"),
            (_, true) => format!("{var}^{k}"),
            (_, false) => format!("{lit}*{var}^{k}"),
        };
        terms.push(mono);
    }
    if terms.is_empty() {
        base.name(base.zero()).to_string()
    } else {
        terms.join("+")
    }
}

fn ideal_literals(ideal: &Ideal) -> Vec<String> {
    let ring = ideal.ring();
    let mut gens = ideal.small_generators();
    if gens.is_empty() {
        gens.push(ring.zero());
    }
    gens.iter().map(|&g| ring.name(g).to_string()).collect()
}

/// A unital ring homomorphism given as an element-index map.
#[derive(Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<Elem>,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingHom")
            .field("source", &self.source.recipe)
            .field("target", &self.target.recipe)
            .field("map", &self.map)
            .finish()
    }
}

impl RingHom {
    /// Validates the hom laws exhaustively.
    pub fn new(source: Arc<FiniteRing>, target: Arc<FiniteRing>, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.size || map.iter().any(|&y| y >= target.size) {
            return Err(Error::InvalidHom("map has wrong length or out-of-range entries".into()));
        }
        if map[source.zero()] != target.zero() {
            return Err(Error::InvalidHom("0 is not sent to 0".into()));
        }
        if map[source.one()] != target.one() {
            return Err(Error::InvalidHom("1 is not sent to 1".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::InvalidHom(format!(
                        "not additive at ({}, {})",
                        source.name(a),
                        source.name(b)
                    )));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::InvalidHom(format!(
                        "not multiplicative at ({}, {})",
                        source.name(a),
                        source.name(b)
                    )));
                }
            }
        }
        Ok(RingHom { source, target, map })
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            map: ring.elements().collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingHom) -> Result<RingHom> {
        if !Arc::ptr_eq(&self.target, &other.source) {
            return Err(Error::RingMismatch("composition of non-composable homs".into()));
        }
        Ok(RingHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&a| other.map[a]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BitSet::new(self.target.size);
        self.map.iter().all(|&y| seen.insert(y))
    }

    pub fn is_surjective(&self) -> bool {
        BitSet::from_indices(self.target.size, self.map.iter().copied()).is_full()
    }
}
