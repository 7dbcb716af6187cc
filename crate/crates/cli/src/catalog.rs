//! Catalog generation: one certified closed form per class prefix, ordered
//! by weight then reverse-lexicographically, rendered deterministically.

use num_bigint::BigInt;
use serde_json::{json, Value};
use snchar_core::closedform::{derive_phi2, derive_psi2};
use snchar_core::partitions::partitions_of;
use snchar_core::{ClosedForm, Partition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Phi2,
    Psi2,
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Phi2 => "phi2",
            Kind::Psi2 => "psi2",
        }
    }

    pub fn derive(&self, mu0: &Partition) -> Result<ClosedForm> {
        match self {
            Kind::Phi2 => derive_phi2(mu0),
            Kind::Psi2 => derive_psi2(mu0),
        }
    }
}

pub struct CatalogEntry {
    pub kind: Kind,
    pub mu0: Partition,
    pub closed_form: ClosedForm,
    /// inclusive range of n on which the formula was checked against
    /// brute force
    pub checked: (i64, i64),
}

impl CatalogEntry {
    pub fn derive(kind: Kind, mu0: Partition) -> Result<CatalogEntry> {
        let closed_form = kind.derive(&mu0)?;
        let lo = closed_form.valid_from;
        let hi = lo + 4 * mu0.weight() as i64 + 10;
        Ok(CatalogEntry {
            kind,
            mu0,
            closed_form,
            checked: (lo, hi),
        })
    }

    pub fn text_line(&self) -> String {
        format!(
            "{} | mu0={} | R(n) = ({})/({}) | base={} | valid_from={} | checked={}..{}",
            self.kind.name(),
            self.mu0,
            self.closed_form.factor.num(),
            self.closed_form.factor.den(),
            self.closed_form.base,
            self.closed_form.valid_from,
            self.checked.0,
            self.checked.1,
        )
    }

    pub fn json_value(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "mu0": partition_json(&self.mu0),
            "formula": {
                "num": coeff_array(self.closed_form.factor.num().coeffs()),
                "den": coeff_array(self.closed_form.factor.den().coeffs()),
                "base": self.closed_form.base.to_string(),
                "valid_from": self.closed_form.valid_from,
            },
            "certified_range": [self.checked.0, self.checked.1],
        })
    }
}

/// All class prefixes (parts >= 2) of weight at most `max_weight`, by
/// weight then reverse-lexicographic; the empty prefix comes first.
pub fn prefixes_up_to(max_weight: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for q in partitions_of(w, None) {
            if q.parts().iter().all(|&p| p >= 2) {
                out.push(q);
            }
        }
    }
    out
}

pub fn generate(kind: Kind, max_weight: u64) -> Result<Vec<CatalogEntry>> {
    prefixes_up_to(max_weight)
        .into_iter()
        .map(|mu0| CatalogEntry::derive(kind, mu0))
        .collect()
}

pub fn render_text(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&e.text_line());
        out.push('\n');
    }
    out
}

pub fn render_json(entries: &[CatalogEntry]) -> String {
    let values: Vec<Value> = entries.iter().map(|e| e.json_value()).collect();
    let mut out = serde_json::to_string_pretty(&values).expect("serializable");
    out.push('\n');
    out
}

pub fn partition_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

pub fn bigint_json(b: &BigInt) -> Value {
    Value::Number(
        b.to_string()
            .parse()
            .expect("integer string is a valid JSON number"),
    )
}

pub fn coeff_array(coeffs: &[BigInt]) -> Value {
    Value::Array(coeffs.iter().map(bigint_json).collect())
}
