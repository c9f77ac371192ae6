//! The fixed test battery of small rings.

use std::sync::Arc;

use crate::dsl::build_ring;
use crate::error::Result;
use crate::finring::{FiniteRing, RingOptions};

/// Non-`Zmod` members: GF(4), F2[x]/(x^2), Z/4[x]/(x^2), F2[x]/(x^2) x F3,
/// F2[x]/(x^3) and the 16-element F2[x]/(x^2)[y]/(y^2).
pub const EXTRA: [&str; 6] = [
    "PolyQuot(Zmod(2),x,x^2+x+1)",
    "PolyQuot(Zmod(2),x,x^2)",
    "PolyQuot(Zmod(4),x,x^2)",
    "Prod(PolyQuot(Zmod(2),x,x^2),Zmod(3))",
    "PolyQuot(Zmod(2),x,x^3)",
    "PolyQuot(PolyQuot(Zmod(2),x,x^2),y,y^2)",
];

/// Ring expressions of the battery, `Zmod(2)..=Zmod(64)` first.
pub fn battery_exprs() -> Vec<String> {
    (2..=64)
        .map(|n| format!("Zmod({n})"))
        .chain(EXTRA.iter().map(|s| s.to_string()))
        .collect()
}

pub fn battery(opts: &RingOptions) -> Result<Vec<(String, Arc<FiniteRing>)>> {
    battery_exprs()
        .into_iter()
        .map(|e| build_ring(&e, opts).map(|r| (e, r)))
        .collect()
}
