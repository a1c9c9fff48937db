//! Structured verdicts shared by every checker.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    LemmaCn,
    CoreBounds,
    OddGirth,
    Structure,
    Main,
    Main2,
    Search,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::LemmaCn => "lemma-cn",
            Target::CoreBounds => "core-bounds",
            Target::OddGirth => "odd-girth",
            Target::Structure => "structure",
            Target::Main => "main",
            Target::Main2 => "main2",
            Target::Search => "search",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lemma-cn" => Target::LemmaCn,
            "core-bounds" => Target::CoreBounds,
            "odd-girth" => Target::OddGirth,
            "structure" => Target::Structure,
            "main" => Target::Main,
            "main2" => Target::Main2,
            "search" => Target::Search,
            _ => return Err(Error::param(format!("unknown verification target '{s}'"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    /// The check ran out of budget.
    Unknown,
}

impl CheckStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Pass,
    Fail,
    NotApplicable,
    Inconclusive,
}

/// How much a verdict means: the theorems only speak inside their regime,
/// so a failure below it is an observation, not a refutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    InRegime,
    BelowRegime,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub target: Target,
    pub preconditions: BTreeMap<String, CheckStatus>,
    pub conclusion: Conclusion,
    pub tier: Tier,
    pub witnesses: BTreeMap<String, Value>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(target: Target) -> Self {
        VerificationReport {
            target,
            preconditions: BTreeMap::new(),
            conclusion: Conclusion::NotApplicable,
            tier: Tier::NotApplicable,
            witnesses: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn precondition(&mut self, name: &str, status: CheckStatus) -> &mut Self {
        self.preconditions.insert(name.to_string(), status);
        self
    }

    pub fn witness(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.witnesses.insert(name.to_string(), v);
        self
    }

    pub fn note(&mut self, msg: impl Into<String>) -> &mut Self {
        self.notes.push(msg.into());
        self
    }

    pub fn preconditions_pass(&self) -> bool {
        self.preconditions.values().all(|&s| s == CheckStatus::Pass)
    }

    fn preconditions_unknown(&self) -> bool {
        self.preconditions.values().any(|&s| s == CheckStatus::Unknown)
            && !self.preconditions.values().any(|&s| s == CheckStatus::Fail)
    }

    /// Records the conclusion, gated on the preconditions: failed hypotheses
    /// give `NotApplicable`, unresolved ones `Inconclusive`. `holds = None`
    /// means the conclusion itself could not be decided.
    pub fn conclude(&mut self, holds: Option<bool>, in_regime: bool) -> &mut Self {
        if self.preconditions_unknown() {
            self.conclusion = Conclusion::Inconclusive;
            self.tier = Tier::NotApplicable;
        } else if !self.preconditions_pass() {
            self.conclusion = Conclusion::NotApplicable;
            self.tier = Tier::NotApplicable;
        } else {
            self.conclusion = match holds {
                Some(true) => Conclusion::Pass,
                Some(false) => Conclusion::Fail,
                None => Conclusion::Inconclusive,
            };
            self.tier = if in_regime { Tier::InRegime } else { Tier::BelowRegime };
            if holds == Some(false) && !in_regime {
                self.note("conclusion fails below the regime threshold: observation only, not a refutation");
            }
        }
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gating() {
        let mut r = VerificationReport::new(Target::Main);
        r.precondition("a", CheckStatus::Pass).precondition("b", CheckStatus::Fail);
        r.conclude(Some(false), true);
        assert_eq!((r.conclusion, r.tier), (Conclusion::NotApplicable, Tier::NotApplicable));

        let mut r = VerificationReport::new(Target::Main);
        r.precondition("a", CheckStatus::Unknown);
        r.conclude(Some(true), true);
        assert_eq!(r.conclusion, Conclusion::Inconclusive);

        let mut r = VerificationReport::new(Target::Main);
        r.precondition("a", CheckStatus::Pass);
        r.conclude(Some(false), false);
        assert_eq!((r.conclusion, r.tier), (Conclusion::Fail, Tier::BelowRegime));
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn target_names_round_trip() {
        for t in [Target::LemmaCn, Target::CoreBounds, Target::OddGirth, Target::Structure, Target::Main, Target::Main2] {
            assert_eq!(t.as_str().parse::<Target>().unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), Value::String(t.to_string()));
        }
    }
}
