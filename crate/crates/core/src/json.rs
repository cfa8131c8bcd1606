//! Canonical JSON serialization for module computations.
//!
//! The emitted object is bit-exact and round-trips: keys appear in a fixed
//! order, rationals are `"p/q"` strings, graded-dimension keys ascend
//! numerically, and the `decomposition` and `character` arrays are sorted
//! lexicographically by weight coordinates.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affine::AffineData;
use crate::error::{Error, Result};
use crate::rat::{fmt_rat, to_integer};
use crate::weyl::WeylModuleReport;
use crate::DemazureResult;

// ---- Schema ----

/// Top-level JSON object describing one computed module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleOutput {
    /// Algebra name, e.g. `"A4(2)"`.
    #[serde(rename = "type")]
    pub type_name: String,
    /// Fundamental-weight coordinates of the classical highest weight.
    pub weight: Vec<i64>,
    /// Level as a rational string `"p/q"`.
    pub level: String,
    /// Total dimension.
    pub dimension: u64,
    /// Dimension of each graded piece, keyed by degree in ascending
    /// numeric order.
    pub graded_dimension: GradedDimension,
    /// Multiplicities of irreducible summands of the degree-collapsed
    /// classical character, sorted by weight coordinates.
    pub decomposition: Vec<DecompositionEntry>,
    /// Full character support, sorted by pairing coordinates then degree
    /// shift.
    pub character: Vec<CharacterEntry>,
}

/// One irreducible summand with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    /// Fundamental-weight coordinates of the summand's highest weight.
    pub weight: Vec<i64>,
    /// Multiplicity (always positive).
    pub mult: i64,
}

/// One exponential term of the character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterEntry {
    /// Pairings of the weight with the simple coroots, as `"p/q"` strings.
    pub pairings: Vec<String>,
    /// Coefficient on the basic imaginary root, as a `"p/q"` string.
    pub delta: String,
    /// Coefficient of the term.
    pub mult: i64,
}

/// Map from degree (stringified integer) to dimension, serialized in
/// ascending numeric order rather than lexicographic string order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDimension(pub Vec<(String, u64)>);

impl Serialize for GradedDimension {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for GradedDimension {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = GradedDimension;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from degree strings to dimensions")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, u64>()? {
                    entries.push((k, v));
                }
                Ok(GradedDimension(entries))
            }
        }
        deserializer.deserialize_map(V)
    }
}

// ---- Builders ----

fn weight_to_i64(weight: &[crate::Rat]) -> Result<Vec<i64>> {
    weight
        .iter()
        .map(|x| {
            let n = to_integer(x, "weight coordinate")?;
            i64::try_from(n).map_err(|_| Error::Overflow("weight coordinate".into()))
        })
        .collect()
}

/// Assemble the canonical output object for a Demazure computation.
pub fn module_output(data: &AffineData, result: &DemazureResult) -> Result<ModuleOutput> {
    let dimension = result.dimension();
    let dimension =
        u64::try_from(dimension).map_err(|_| Error::Overflow("dimension".into()))?;
    let graded = result.graded();
    let mut graded_entries = Vec::new();
    for (deg, piece) in graded.buckets() {
        let d = piece.dimension();
        let d = u64::try_from(d).map_err(|_| Error::Overflow("graded dimension".into()))?;
        graded_entries.push((fmt_rat(deg), d));
    }
    let decomposition = result
        .decompose(data)?
        .parts()
        .iter()
        .map(|(w, m)| {
            Ok(DecompositionEntry {
                weight: weight_to_i64(w)?,
                mult: *m,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let character = result
        .character
        .terms()
        .map(|(e, m)| CharacterEntry {
            pairings: e.coords.iter().map(fmt_rat).collect(),
            delta: fmt_rat(&e.delta),
            mult: *m,
        })
        .collect();
    Ok(ModuleOutput {
        type_name: data.name().to_string(),
        weight: weight_to_i64(&result.lambda)?,
        level: fmt_rat(&result.level),
        dimension,
        graded_dimension: GradedDimension(graded_entries),
        decomposition,
        character,
    })
}

/// Assemble the canonical output object for a graded Weyl module.
pub fn weyl_output(data: &AffineData, report: &WeylModuleReport) -> Result<ModuleOutput> {
    module_output(data, &report.demazure)
}

/// Serialize to the canonical pretty-printed JSON string (with trailing
/// newline).
pub fn to_json_string(output: &ModuleOutput) -> Result<String> {
    let mut s = serde_json::to_string_pretty(output)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Parse a canonical JSON string back into the output object.
pub fn from_json_string(s: &str) -> Result<ModuleOutput> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid module JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demazure::demazure_d;
    use crate::rat::{rat, ratq};

    #[test]
    fn canonical_output_round_trips_byte_identically() {
        let data = AffineData::parse("A2(2)").unwrap();
        let res = demazure_d(&data, ratq(3, 2), &[rat(3)]).unwrap();
        let out = module_output(&data, &res).unwrap();
        let s1 = to_json_string(&out).unwrap();
        let parsed = from_json_string(&s1).unwrap();
        assert_eq!(parsed, out);
        let s2 = to_json_string(&parsed).unwrap();
        assert_eq!(s1, s2, "re-serialization must be byte-identical");
    }

    #[test]
    fn key_order_and_rational_formatting_are_fixed() {
        let data = AffineData::parse("A2(2)").unwrap();
        let res = demazure_d(&data, ratq(1, 2), &[rat(1)]).unwrap();
        let out = module_output(&data, &res).unwrap();
        let s = to_json_string(&out).unwrap();
        let type_pos = s.find("\"type\"").unwrap();
        let weight_pos = s.find("\"weight\"").unwrap();
        let level_pos = s.find("\"level\"").unwrap();
        let dim_pos = s.find("\"dimension\"").unwrap();
        assert!(type_pos < weight_pos && weight_pos < level_pos && level_pos < dim_pos);
        assert!(s.contains("\"level\": \"1/2\""));
        assert!(s.contains("\"dimension\": 2"));
    }

    #[test]
    fn graded_keys_ascend_numerically_not_lexicographically() {
        // Eleven graded pieces forces a "10" key, which sorts before "2"
        // lexicographically but must appear after it here.
        let data = AffineData::parse("A1(1)").unwrap();
        let res = demazure_d(&data, rat(1), &[rat(8)]).unwrap();
        let out = module_output(&data, &res).unwrap();
        let keys: Vec<&str> = out
            .graded_dimension
            .0
            .iter()
            .map(|(k, _)| k.as_str())
            .collect();
        let mut numeric: Vec<i64> = keys.iter().map(|k| k.parse().unwrap()).collect();
        let sorted = {
            let mut v = numeric.clone();
            v.sort_unstable();
            v
        };
        assert_eq!(numeric, sorted);
        numeric.dedup();
        assert_eq!(numeric.len(), keys.len());
        if keys.len() > 10 {
            let s = to_json_string(&out).unwrap();
            assert!(s.find("\"2\":").unwrap() < s.find("\"10\":").unwrap());
        }
    }

    #[test]
    fn decomposition_entries_sorted_by_weight() {
        let data = AffineData::parse("D4(2)").unwrap();
        let res = demazure_d(&data, rat(1), &[rat(0), rat(1), rat(0)]).unwrap();
        let out = module_output(&data, &res).unwrap();
        let weights: Vec<&Vec<i64>> = out.decomposition.iter().map(|e| &e.weight).collect();
        let mut sorted = weights.clone();
        sorted.sort();
        assert_eq!(weights, sorted);
        assert!(out.decomposition.iter().all(|e| e.mult > 0));
    }
}
