use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::ModuleVector;
use crate::combinatorics::Tabloid;
use crate::error::Result;
use crate::exact_algebra::{Ring, Scalar, SparseVector};

/// One term of a serialized module vector: the tabloid rows, the numerator and the
/// denominator (over ℤ or ℚ) or modulus (over GF(p)).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorEntry {
    pub tabloid: Tabloid,
    #[serde(with = "crate::exact_algebra::decimal")]
    pub numerator: BigInt,
    #[serde(with = "crate::exact_algebra::decimal")]
    pub denominator_or_modulus: BigInt,
}

/// Terms in canonical tabloid order.
pub fn vector_record<R: Ring>(ring: &R, v: &ModuleVector<R::Elem>) -> Vec<VectorEntry> {
    let mut out: Vec<VectorEntry> = v
        .iter()
        .map(|(k, c)| {
            let (numerator, denominator_or_modulus) = ring.to_scalar(c).record_parts();
            VectorEntry {
                tabloid: *k,
                numerator,
                denominator_or_modulus,
            }
        })
        .collect();
    out.sort_by(|a, b| a.tabloid.canonical_cmp(&b.tabloid));
    out
}

pub fn vector_from_record<R: Ring>(
    ring: &R,
    entries: &[VectorEntry],
) -> Result<ModuleVector<R::Elem>> {
    let mut out = SparseVector::new();
    for e in entries {
        let (numerator, denominator) = (e.numerator.clone(), e.denominator_or_modulus.clone());
        let value = match ring.from_scalar(&Scalar::Rational {
            numerator,
            denominator,
        }) {
            Ok(c) => c,
            Err(err) => {
                let (Ok(value), Ok(modulus)) = (
                    u64::try_from(&e.numerator),
                    u64::try_from(&e.denominator_or_modulus),
                ) else {
                    return Err(err);
                };
                ring.from_scalar(&Scalar::Modular { value, modulus })?
            }
        };
        out.add_term(ring, e.tabloid, &value);
    }
    Ok(out)
}
