//! Distance magic index results.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::scalar::Label;

/// `θ(G) = i(G) − |V(G)|`, or what is known about it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theta {
    Finite(u64),
    /// No label set works; backed by a certificate or a closed form.
    Infinite,
    /// Not determined by a search capped at this index.
    UnknownAtCap(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Search,
}

/// Which closed-form case produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `H(n,p)`, `n` even.
    HnpEvenPartSize,
    /// `H(n,p)`, `n` and `p` odd.
    HnpAllOdd,
    /// `H(n,p)`, `n` odd and `p` even: one deleted label.
    HnpDeletedLabel,
    UnionHnpEvenPartSize,
    UnionHnpAllOdd,
    UnionHnpDeletedLabel,
    CycleLexEvenFiber,
    CycleLexAllOdd,
    /// `n` odd, `p ≡ 0 (mod 4)`: distance magic, no construction provided.
    CycleLexLengthDivisibleByFour,
    CycleLexDeletedLabel,
    BlowupEvenFiber,
    /// `n` and `p` odd (so `r` is even).
    BlowupOddOrder,
    /// `n` and `r` odd.
    BlowupOddDegree,
    /// `n` odd, `r ≡ p ≡ 2 (mod 4)`.
    BlowupTwiceOdd,
    /// Remaining `n` odd, `p` even cases: distance magic, no construction
    /// provided.
    BlowupTournament,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessOrigin {
    Construction,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Label", try_from = "IndexDoc<T>", into = "IndexDoc<T>")]
pub struct IndexResult<T: Label> {
    pub theta: Theta,
    pub method: Method,
    pub rule: Option<Rule>,
    pub constant: Option<T>,
    pub witness: Option<Labeling<T>>,
    pub witness_origin: Option<WitnessOrigin>,
    /// Search stopped on a node or time budget rather than the cap.
    pub budget_exhausted: bool,
}

impl<T: Label> IndexResult<T> {
    pub fn closed_form(theta: Theta, rule: Rule) -> Self {
        IndexResult {
            theta,
            method: Method::ClosedForm,
            rule: Some(rule),
            constant: None,
            witness: None,
            witness_origin: None,
            budget_exhausted: false,
        }
    }

    pub fn searched(theta: Theta) -> Self {
        IndexResult {
            theta,
            method: Method::Search,
            rule: None,
            constant: None,
            witness: None,
            witness_origin: None,
            budget_exhausted: false,
        }
    }

    pub fn with_witness(mut self, witness: Labeling<T>, constant: T, origin: WitnessOrigin) -> Self {
        self.witness = Some(witness);
        self.constant = Some(constant);
        self.witness_origin = Some(origin);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum ThetaRepr {
    Finite(u64),
    Word(String),
    Unknown { unknown_at_cap: u64 },
}

impl Serialize for Theta {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Theta::Finite(d) => ThetaRepr::Finite(d),
            Theta::Infinite => ThetaRepr::Word("infinite".into()),
            Theta::UnknownAtCap(cap) => ThetaRepr::Unknown { unknown_at_cap: cap },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Theta {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match ThetaRepr::deserialize(d)? {
            ThetaRepr::Finite(v) => Ok(Theta::Finite(v)),
            ThetaRepr::Word(w) if w == "infinite" => Ok(Theta::Infinite),
            ThetaRepr::Word(w) => Err(serde::de::Error::custom(format!("unknown theta {w:?}"))),
            ThetaRepr::Unknown { unknown_at_cap } => Ok(Theta::UnknownAtCap(unknown_at_cap)),
        }
    }
}

/// JSON shape: `{theta, method, theorem, constant, labels?, label_set?, ...}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Label")]
struct IndexDoc<T: Label> {
    theta: Theta,
    method: Method,
    theorem: Option<Rule>,
    constant: Option<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label_set: Option<Vec<T>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness_origin: Option<WitnessOrigin>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    budget_exhausted: bool,
}

impl<T: Label> From<IndexResult<T>> for IndexDoc<T> {
    fn from(r: IndexResult<T>) -> Self {
        IndexDoc {
            theta: r.theta,
            method: r.method,
            theorem: r.rule,
            constant: r.constant,
            label_set: r.witness.as_ref().map(|w| w.label_set().values().to_vec()),
            labels: r.witness.map(|w| w.assignment().to_vec()),
            witness_origin: r.witness_origin,
            budget_exhausted: r.budget_exhausted,
        }
    }
}

impl<T: Label> TryFrom<IndexDoc<T>> for IndexResult<T> {
    type Error = Error;

    fn try_from(doc: IndexDoc<T>) -> Result<Self> {
        let witness = doc.labels.map(Labeling::new).transpose()?;
        Ok(IndexResult {
            theta: doc.theta,
            method: doc.method,
            rule: doc.theorem,
            constant: doc.constant,
            witness,
            witness_origin: doc.witness_origin,
            budget_exhausted: doc.budget_exhausted,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = IndexResult::<i64>::closed_form(Theta::Finite(1), Rule::HnpDeletedLabel).with_witness(
            Labeling::new(vec![1, 3, 7, 2, 4, 5]).unwrap(),
            11,
            WitnessOrigin::Construction,
        );
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"theta":1,"method":"closed-form","theorem":"hnp-deleted-label","constant":11,"labels":[1,3,7,2,4,5]"#));
        assert_eq!(serde_json::from_str::<IndexResult<i64>>(&s).unwrap(), r);

        for theta in [Theta::Infinite, Theta::UnknownAtCap(3), Theta::Finite(0)] {
            let r = IndexResult::<i64>::searched(theta);
            let s = serde_json::to_string(&r).unwrap();
            assert_eq!(serde_json::from_str::<IndexResult<i64>>(&s).unwrap(), r);
        }
        assert!(serde_json::to_string(&Theta::Infinite).unwrap() == r#""infinite""#);
        assert!(serde_json::to_string(&Theta::UnknownAtCap(2)).unwrap() == r#"{"unknown_at_cap":2}"#);
        assert!(serde_json::from_str::<Theta>(r#""huge""#).is_err());
    }
}
