//! Structured output for `--json`. Absent fields are omitted, never `null`.

use serde::Serialize;

use requitable_core::FeasibilityWitness;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub sizes: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chistar: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Full { m: u64, counts: Vec<u64> },
    Missing { counts: Vec<u64>, unused: u64 },
}

impl From<&FeasibilityWitness> for Witness {
    fn from(w: &FeasibilityWitness) -> Self {
        match w {
            FeasibilityWitness::Full { level, counts } => Witness::Full {
                m: *level,
                counts: counts.clone(),
            },
            FeasibilityWitness::Missing { counts, unused } => Witness::Missing {
                counts: counts.clone(),
                unused: *unused,
            },
        }
    }
}

impl Report {
    pub fn to_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omits_absent_fields() {
        let r = Report {
            sizes: vec![3, 3],
            r: Some(1),
            chi: Some(2),
            ..Report::default()
        };
        assert_eq!(r.to_line(), "{\"sizes\":[3,3],\"r\":1,\"chi\":2}\n");
    }

    #[test]
    fn witness_shapes() {
        let full = Witness::from(&FeasibilityWitness::Full {
            level: 3,
            counts: vec![1, 1, 2],
        });
        assert_eq!(
            serde_json::to_string(&full).unwrap(),
            r#"{"kind":"full","m":3,"counts":[1,1,2]}"#
        );
        let missing = Witness::from(&FeasibilityWitness::Missing {
            counts: vec![2, 3, 4],
            unused: 1,
        });
        assert_eq!(
            serde_json::to_string(&missing).unwrap(),
            r#"{"kind":"missing","counts":[2,3,4],"unused":1}"#
        );
    }
}
