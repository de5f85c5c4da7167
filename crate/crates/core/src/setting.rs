//! Problem settings: which variant of the sequential selection problem is
//! being solved, plus the parameters that variant needs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The catalogue of supported stopping problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Classical best-choice problem on relative-rank information.
    Secretary,
    /// Cardinal payoffs, best-so-far indicator only (Bearden 2006).
    Bearden,
    /// Select the second best overall (Rose 1982).
    Postdoc,
    /// Win–lose–draw marriage problem (Sakaguchi 1984).
    Sakaguchi,
    /// Best choice with uncertain acceptance (Smith 1975).
    Smith,
    /// Best choice with a random pool size uniform on 1..b (Presman–Sonin 1972).
    PresmanSonin,
    /// No-information duration problem (Ferguson–Hardwick–Tamaki 1992).
    NoInfoDuration,
    /// No-information best-choice duration problem.
    NoInfoBestChoiceDuration,
    /// Best choice with interview costs 1/N per applicant.
    InterviewCost,
    /// Best-so-far selection with decaying decision costs (Szajowski 2009).
    SzajowskiCost,
    /// Full information, cardinal payoffs (Moser 1956).
    Moser,
    /// Moser with a decaying applicant pool.
    MoserDecaying,
    /// Full information, best choice (Gilbert–Mosteller 1966, §3).
    GmBestChoice,
    /// Full-information duration problem.
    FiDuration,
    /// Full-information best-choice duration problem.
    FiBestChoiceDuration,
    /// Minimum expected rank (Lindley 1961).
    Lindley,
    /// Best S or better on relative ranks (Gusein-Zade 1966).
    GuseinZade,
    /// Unbounded-horizon sale with per-offer costs (MacQueen–Miller 1960).
    HouseSelling,
}

impl Variant {
    pub const ALL: [Variant; 18] = [
        Variant::Secretary,
        Variant::Bearden,
        Variant::Postdoc,
        Variant::Sakaguchi,
        Variant::Smith,
        Variant::PresmanSonin,
        Variant::NoInfoDuration,
        Variant::NoInfoBestChoiceDuration,
        Variant::InterviewCost,
        Variant::SzajowskiCost,
        Variant::Moser,
        Variant::MoserDecaying,
        Variant::GmBestChoice,
        Variant::FiDuration,
        Variant::FiBestChoiceDuration,
        Variant::Lindley,
        Variant::GuseinZade,
        Variant::HouseSelling,
    ];

    /// Stable kebab-case tag used by the CLI and in output records.
    pub fn tag(&self) -> &'static str {
        match self {
            Variant::Secretary => "secretary",
            Variant::Bearden => "bearden",
            Variant::Postdoc => "postdoc",
            Variant::Sakaguchi => "sakaguchi",
            Variant::Smith => "smith",
            Variant::PresmanSonin => "presman-sonin",
            Variant::NoInfoDuration => "no-info-duration",
            Variant::NoInfoBestChoiceDuration => "no-info-best-choice-duration",
            Variant::InterviewCost => "interview-cost",
            Variant::SzajowskiCost => "szajowski-cost",
            Variant::Moser => "moser",
            Variant::MoserDecaying => "moser-decaying",
            Variant::GmBestChoice => "gm-best-choice",
            Variant::FiDuration => "fi-duration",
            Variant::FiBestChoiceDuration => "fi-best-choice-duration",
            Variant::Lindley => "lindley",
            Variant::GuseinZade => "gusein-zade",
            Variant::HouseSelling => "house-selling",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Variant> {
        Variant::ALL.iter().copied().find(|v| v.tag() == tag)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A fully parameterized problem instance.
///
/// Each variant requires a specific subset of the optional fields; anything
/// else present is rejected by [`SettingSpec::validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SettingSpec {
    pub variant: Variant,
    /// Pool size N (absent for the unbounded house-selling search).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    /// Target rank S (Gusein-Zade only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    /// Acceptance probability (Smith only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    /// Maximum pool size b (Presman–Sonin only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    /// Per-observation cost (house-selling, interview/decision cost settings).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cost: Option<f64>,
}

impl SettingSpec {
    pub fn new(variant: Variant) -> Self {
        Self {
            variant,
            n: None,
            s: None,
            p: None,
            b: None,
            cost: None,
        }
    }

    pub fn with_n(variant: Variant, n: u64) -> Self {
        Self {
            n: Some(n),
            ..Self::new(variant)
        }
    }

    pub fn secretary(n: u64) -> Self {
        Self::with_n(Variant::Secretary, n)
    }

    pub fn bearden(n: u64) -> Self {
        Self::with_n(Variant::Bearden, n)
    }

    pub fn postdoc(n: u64) -> Self {
        Self::with_n(Variant::Postdoc, n)
    }

    pub fn moser(n: u64) -> Self {
        Self::with_n(Variant::Moser, n)
    }

    pub fn moser_decaying(n: u64) -> Self {
        Self::with_n(Variant::MoserDecaying, n)
    }

    pub fn gm_best_choice(n: u64) -> Self {
        Self::with_n(Variant::GmBestChoice, n)
    }

    pub fn smith(n: u64, p: f64) -> Self {
        Self {
            p: Some(p),
            ..Self::with_n(Variant::Smith, n)
        }
    }

    pub fn presman_sonin(b: u64) -> Self {
        Self {
            b: Some(b),
            ..Self::new(Variant::PresmanSonin)
        }
    }

    pub fn gusein_zade(n: u64, s: u32) -> Self {
        Self {
            s: Some(s),
            ..Self::with_n(Variant::GuseinZade, n)
        }
    }

    pub fn lindley(n: u64) -> Self {
        Self::with_n(Variant::Lindley, n)
    }

    pub fn house_selling(cost: f64) -> Self {
        Self {
            cost: Some(cost),
            ..Self::new(Variant::HouseSelling)
        }
    }

    pub fn interview_cost(n: u64) -> Self {
        Self::with_n(Variant::InterviewCost, n)
    }

    pub fn szajowski_cost(n: Option<u64>, cost: f64) -> Self {
        Self {
            n,
            cost: Some(cost),
            ..Self::new(Variant::SzajowskiCost)
        }
    }

    /// Check that exactly the parameters this variant requires are present
    /// and within range.
    pub fn validate(&self) -> Result<()> {
        use Variant::*;
        let needs_n = !matches!(self.variant, HouseSelling | PresmanSonin);
        if needs_n {
            match self.n {
                Some(n) if n >= 1 => {}
                Some(n) => {
                    return Err(Error::InvalidParameter(format!("n must be >= 1, got {n}")));
                }
                None => {
                    return Err(Error::MissingParameter {
                        variant: self.variant,
                        parameter: "n",
                    });
                }
            }
        } else if self.n.is_some() {
            return Err(Error::InvalidParameter(format!(
                "the {} setting does not take n",
                self.variant
            )));
        }
        if self.variant == GuseinZade {
            match self.s {
                Some(s) if s >= 1 => {}
                Some(s) => {
                    return Err(Error::InvalidParameter(format!("s must be >= 1, got {s}")));
                }
                None => {
                    return Err(Error::MissingParameter {
                        variant: self.variant,
                        parameter: "s",
                    });
                }
            }
        } else if self.s.is_some() {
            return Err(Error::InvalidParameter(format!(
                "the {} setting does not take s",
                self.variant
            )));
        }
        if self.variant == Smith {
            match self.p {
                Some(p) if p > 0.0 && p <= 1.0 => {}
                Some(p) => {
                    return Err(Error::InvalidParameter(format!(
                        "p must lie in (0, 1], got {p}"
                    )));
                }
                None => {
                    return Err(Error::MissingParameter {
                        variant: self.variant,
                        parameter: "p",
                    });
                }
            }
        } else if self.p.is_some() {
            return Err(Error::InvalidParameter(format!(
                "the {} setting does not take p",
                self.variant
            )));
        }
        if self.variant == PresmanSonin {
            match self.b {
                Some(b) if b >= 1 => {}
                Some(b) => {
                    return Err(Error::InvalidParameter(format!("b must be >= 1, got {b}")));
                }
                None => {
                    return Err(Error::MissingParameter {
                        variant: self.variant,
                        parameter: "b",
                    });
                }
            }
        } else if self.b.is_some() {
            return Err(Error::InvalidParameter(format!(
                "the {} setting does not take b",
                self.variant
            )));
        }
        let needs_cost = matches!(self.variant, HouseSelling | SzajowskiCost);
        if needs_cost {
            match self.cost {
                Some(c) if c > 0.0 => {}
                Some(c) => {
                    return Err(Error::InvalidParameter(format!(
                        "cost must be positive, got {c}"
                    )));
                }
                None => {
                    return Err(Error::MissingParameter {
                        variant: self.variant,
                        parameter: "cost",
                    });
                }
            }
        } else if self.cost.is_some() && self.variant != InterviewCost {
            // interview-cost fixes the cost at 1/N; an explicit one is rejected
            return Err(Error::InvalidParameter(format!(
                "the {} setting does not take cost",
                self.variant
            )));
        }
        Ok(())
    }

    pub fn require_n(&self) -> Result<u64> {
        self.n.ok_or(Error::MissingParameter {
            variant: self.variant,
            parameter: "n",
        })
    }

    pub fn require_s(&self) -> Result<u32> {
        self.s.ok_or(Error::MissingParameter {
            variant: self.variant,
            parameter: "s",
        })
    }

    pub fn require_p(&self) -> Result<f64> {
        self.p.ok_or(Error::MissingParameter {
            variant: self.variant,
            parameter: "p",
        })
    }

    pub fn require_b(&self) -> Result<u64> {
        self.b.ok_or(Error::MissingParameter {
            variant: self.variant,
            parameter: "b",
        })
    }

    pub fn require_cost(&self) -> Result<f64> {
        self.cost.ok_or(Error::MissingParameter {
            variant: self.variant,
            parameter: "cost",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_accepts_complete_settings() {
        assert!(SettingSpec::secretary(10).validate().is_ok());
        assert!(SettingSpec::smith(10, 0.5).validate().is_ok());
        assert!(SettingSpec::presman_sonin(100).validate().is_ok());
        assert!(SettingSpec::house_selling(0.01).validate().is_ok());
        assert!(SettingSpec::gusein_zade(100, 3).validate().is_ok());
    }

    #[test]
    fn validation_rejects_missing_or_extra_parameters() {
        assert!(SettingSpec::new(Variant::Secretary).validate().is_err());
        assert!(SettingSpec::with_n(Variant::Smith, 10).validate().is_err());
        let mut s = SettingSpec::secretary(10);
        s.cost = Some(0.1);
        assert!(s.validate().is_err());
        let mut s = SettingSpec::presman_sonin(10);
        s.n = Some(5);
        assert!(s.validate().is_err());
        assert!(SettingSpec::smith(10, 1.5).validate().is_err());
        assert!(SettingSpec::house_selling(0.0).validate().is_err());
    }

    #[test]
    fn tags_round_trip() {
        for v in Variant::ALL {
            assert_eq!(Variant::from_tag(v.tag()), Some(v));
        }
    }
}
