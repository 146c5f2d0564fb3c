//! JSON form of classification verdicts.
//!
//! The document shape is a stable contract:
//!
//! ```json
//! {
//!   "verdict": "Isomorphic" | "NotIsomorphic" | "Undecided" | "OutOfScope",
//!   "canonical_left":  {"lambda0": "w", "psi": "w_1*w"} | null,
//!   "canonical_right": {"lambda0": "w", "psi": "w_1"}   | null,
//!   "trace": [{"case": "...", "citation": "..."}, ...],
//!   "assumptions": ["no-rvm-below(aleph_0)", ...],
//!   "psi_mode": "repaired" | "literal",
//!   "reason": "..." | null
//! }
//! ```
//!
//! Ordinals appear as their ASCII rendering. `reason` is non-null exactly
//! for out-of-scope verdicts. Keys serialize in a fixed (alphabetical)
//! order, so equal verdicts produce byte-identical documents.

use serde_json::{json, Value};

use crate::classify::{AxiomContext, CanonicalPair, Verdict};

fn pair_json(p: &CanonicalPair) -> Value {
    json!({
        "lambda0": p.lambda0.to_string(),
        "psi": p.psi.to_string(),
    })
}

/// Serialize a verdict (and the context it was produced under) to the
/// stable document shape.
pub fn verdict_to_json(v: &Verdict, ctx: &AxiomContext) -> Value {
    let (left, right) = match &v.canonical {
        Some((l, r)) => (pair_json(l), pair_json(r)),
        None => (Value::Null, Value::Null),
    };
    let trace: Vec<Value> = v
        .trace
        .iter()
        .map(|t| json!({"case": t.case, "citation": t.citation}))
        .collect();
    let assumptions: Vec<String> = v.assumptions.iter().map(|a| a.to_string()).collect();
    json!({
        "verdict": v.outcome.to_string(),
        "canonical_left": left,
        "canonical_right": right,
        "trace": trace,
        "assumptions": assumptions,
        "psi_mode": ctx.psi_mode.to_string(),
        "reason": v.reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::iso_k;
    use crate::ordinal::NormalOrdinal;
    use num_rational::Ratio;

    #[test]
    fn verdict_document_shape() {
        let w = NormalOrdinal::omega();
        let w1 = NormalOrdinal::initial(&NormalOrdinal::nat(1u32));
        let xi = &w1 * &w;
        let ctx = AxiomContext::default();
        let v = iso_k(
            &w,
            &xi,
            &w,
            &w1,
            Ratio::from_integer(2),
            Ratio::from_integer(3),
            &ctx,
        )
        .unwrap();
        let doc = verdict_to_json(&v, &ctx);
        assert_eq!(doc["verdict"], "NotIsomorphic");
        assert_eq!(doc["canonical_left"]["lambda0"], "w");
        assert_eq!(doc["canonical_left"]["psi"], "w_1*w");
        assert_eq!(doc["canonical_right"]["psi"], "w_1");
        assert_eq!(doc["assumptions"][0], "no-rvm-below(aleph_0)");
        assert_eq!(doc["psi_mode"], "repaired");
        assert!(doc["reason"].is_null());
        assert_eq!(
            doc["trace"].as_array().unwrap().last().unwrap()["case"],
            "k.canonical-index-mismatch"
        );
        // serialization is deterministic
        assert_eq!(doc.to_string(), verdict_to_json(&v, &ctx).to_string());
    }
}
