//! The Serre-dimension bound engine: every applicable rule fires once, each
//! entry carries its hypotheses (machine-certified or user-asserted) and the
//! resulting upper bound for S-dim(R[M]); the report exposes the minimum.
//! The engine never claims exactness, only upper bounds.

use crate::classes::MnCertificate;
use crate::cones;
use crate::lattice::ExponentVector;
use crate::monoid::AffineMonoid;
use crate::segre::{k_of, segre_monoid};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// User-supplied data about the base ring R, which the engine cannot check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingProfile {
    pub dim: u64,
    #[serde(default)]
    pub normal: bool,
    #[serde(default)]
    pub reduced: bool,
    #[serde(default)]
    pub contains_q: bool,
    #[serde(default)]
    pub is_pid: bool,
    #[serde(default)]
    pub is_dedekind: bool,
    /// Asserted structural classes of the monoid itself that this crate does
    /// not recognize computationally.
    #[serde(default)]
    pub quasi_normal: bool,
    #[serde(default)]
    pub quasi_truncated: bool,
}

impl RingProfile {
    pub fn of_dimension(dim: u64) -> Self {
        RingProfile {
            dim,
            ..Default::default()
        }
    }
}

/// Cached monoid analysis consumed by the engine; assemble with
/// [`monoid_facts`] or by hand.
#[derive(Clone, Debug, Serialize)]
pub struct MonoidFacts {
    pub rank: usize,
    pub unit_rank: usize,
    pub normal: Option<bool>,
    pub seminormal: Option<bool>,
    /// (rows, cols) when the generator set equals a product-grid monoid.
    pub segre_shape: Option<(u64, u64)>,
    /// Number of variables when the monoid is the Rees monoid of the ideal
    /// generated by all the variables.
    pub rees_shape: Option<u64>,
}

pub fn monoid_facts(m: &AffineMonoid, degree_bound: u64) -> MonoidFacts {
    let rank = m.rank();
    let unit_rank = m.units().map(|u| u.len()).unwrap_or(0);
    let positive = unit_rank == 0;
    let normal = if positive {
        cones::is_normal(m).ok()
    } else {
        None
    };
    let seminormal = if positive {
        if normal == Some(true) {
            Some(true)
        } else {
            cones::is_seminormal(m, degree_bound).ok()
        }
    } else {
        None
    };
    MonoidFacts {
        rank,
        unit_rank,
        normal,
        seminormal,
        segre_shape: detect_segre_shape(m),
        rees_shape: detect_rees_shape(m),
    }
}

fn detect_segre_shape(monoid: &AffineMonoid) -> Option<(u64, u64)> {
    let r = monoid.ambient_rank() as u64;
    let gens: BTreeSet<ExponentVector> = monoid.generators().iter().cloned().collect();
    for m in 1..=(r + 1) {
        let n = r + 1 - m;
        if n == 0 {
            continue;
        }
        let expected = (n + n * (m - 1)) as usize;
        if expected != gens.len() {
            continue;
        }
        if let Ok(s) = segre_monoid(m, n) {
            let other: BTreeSet<ExponentVector> =
                s.monoid.generators().iter().cloned().collect();
            if other == gens {
                return Some((m, n));
            }
        }
    }
    None
}

fn detect_rees_shape(monoid: &AffineMonoid) -> Option<u64> {
    let r = monoid.ambient_rank();
    if r < 2 {
        return None;
    }
    let m = r - 1;
    let gens: BTreeSet<ExponentVector> = monoid.generators().iter().cloned().collect();
    let mut expected = BTreeSet::new();
    for i in 0..m {
        expected.insert(ExponentVector::unit(r, i));
        expected.insert(ExponentVector::unit(r, i).add(&ExponentVector::unit(r, m)));
    }
    (gens == expected).then_some(m as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisStatus {
    Certified,
    Asserted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
}

fn certified(name: &str) -> Hypothesis {
    Hypothesis {
        name: name.to_string(),
        status: HypothesisStatus::Certified,
    }
}

fn asserted(name: &str) -> Hypothesis {
    Hypothesis {
        name: name.to_string(),
        status: HypothesisStatus::Asserted,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub rule: String,
    pub locus: String,
    pub statement: String,
    /// Empty list marks an unconditional rule.
    pub hypotheses: Vec<Hypothesis>,
    pub bound: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub best: Option<BoundEntry>,
    pub commentary: Vec<String>,
}

/// Apply every rule whose hypotheses hold (certified by the analysis or
/// asserted in the profile) and report all bounds with the minimum.
pub fn serre_bound(
    m: &AffineMonoid,
    profile: &RingProfile,
    cert: Option<&MnCertificate>,
    facts: &MonoidFacts,
) -> BoundReport {
    let d = profile.dim as i64;
    let r = facts.rank as i64;
    let mut entries: Vec<BoundEntry> = vec![];
    let mut commentary = vec![];

    if r == 0 {
        entries.push(BoundEntry {
            rule: "R0".into(),
            locus: "degenerate rank".into(),
            statement: "rank-0 monoid algebra equals R: S-dim(R[M]) = S-dim(R) <= d".into(),
            hypotheses: vec![],
            bound: d,
        });
    } else {
        entries.push(BoundEntry {
            rule: "R1".into(),
            locus: "top-rank bound".into(),
            statement: "S-dim(R[M]) <= max{1, d + r - 1}".into(),
            hypotheses: vec![],
            bound: (d + r - 1).max(1),
        });
    }

    if facts.normal == Some(true) && r >= 1 {
        let u = facts.unit_rank as i64;
        entries.push(BoundEntry {
            rule: "R2".into(),
            locus: "normal-monoid unit-rank bound".into(),
            statement: "S-dim(R[M]) <= d + r - rank(U(M)) for normal M".into(),
            hypotheses: vec![certified("monoid is normal")],
            bound: d + r - u,
        });
        if r == 2 || u == r - 1 {
            entries.push(BoundEntry {
                rule: "R2s".into(),
                locus: "normal rank-2 / corank-1 specialization".into(),
                statement: "S-dim(R[M]) <= d when r = 2 or rank(U(M)) = r - 1".into(),
                hypotheses: vec![certified("monoid is normal")],
                bound: d,
            });
        }
    }

    if let Some(cert) = cert {
        if facts.seminormal == Some(true) {
            let n_eff = (cert.level as i64).min(r);
            entries.push(BoundEntry {
                rule: "R3".into(),
                locus: "class-level bound".into(),
                statement: "S-dim(R[M]) <= d + r - n for seminormal M with a level-n certificate"
                    .into(),
                hypotheses: vec![
                    certified("monoid is seminormal"),
                    certified(&format!("level-{} certificate", cert.level)),
                ],
                bound: d + r - n_eff,
            });
        }
    }

    if let Some((mm, nn)) = facts.segre_shape {
        let k = k_of(mm, nn) as i64;
        entries.push(BoundEntry {
            rule: "R4".into(),
            locus: "product-presentation bound".into(),
            statement: format!(
                "S-dim(S_{{{mm}x{nn}}}(R)) <= d + m + n - 1 - floor((m+n-1)/min(m,n))"
            ),
            hypotheses: vec![certified(&format!(
                "generators match the {mm}x{nn} grid monoid"
            ))],
            bound: d + (mm + nn) as i64 - 1 - k,
        });
    }

    if profile.quasi_normal && profile.quasi_truncated && r >= 2 {
        if facts.seminormal == Some(true) {
            entries.push(BoundEntry {
                rule: "R5".into(),
                locus: "asserted-class level-2 bound".into(),
                statement:
                    "S-dim(R[M]) <= d + r - 2 for seminormal quasi-truncated quasi-normal M"
                        .into(),
                hypotheses: vec![
                    asserted("monoid is quasi-normal"),
                    asserted("monoid is quasi-truncated"),
                    certified("monoid is seminormal"),
                ],
                bound: d + r - 2,
            });
        }
        commentary.push(
            "asserted quasi-truncated quasi-normal structure also bounds the interior monoid: \
             S-dim(R[M*]) <= d + rank(M) - 2 for simplicial seminormal M of rank >= 2"
                .into(),
        );
    }

    if let Some(m0) = facts.rees_shape {
        let bound = if m0 % 2 == 1 {
            d + ((m0 + 1) / 2) as i64
        } else {
            d + (m0 / 2) as i64 + 1
        };
        entries.push(BoundEntry {
            rule: "R6".into(),
            locus: "variable-ideal blowup bound".into(),
            statement: "S-dim(R[It]) <= d + (m+1)/2 (m odd) or d + m/2 + 1 (m even) for I = (X1..Xm)"
                .into(),
            hypotheses: vec![certified("generators match the Rees monoid of (X1..Xm)")],
            bound,
        });
    }

    commentary.push(
        "monic-inversion rules produce surjectivity statements, not numeric bounds; their \
         monoid-side condition (added monomials inside M with positive first exponent) is \
         checkable through the automorphism verifier"
            .into(),
    );
    let _ = m;

    let best = entries.iter().min_by_key(|e| e.bound).cloned();
    BoundReport {
        entries,
        best,
        commentary,
    }
}

/// Minimal-generator bound: mu(P) <= rank(P) + d + r - n, with n = 1 absent a
/// certificate and n capped by the monoid rank.
pub fn mu_bound(
    profile: &RingProfile,
    rank_p: u64,
    cert: Option<&MnCertificate>,
    facts: &MonoidFacts,
) -> Result<u64, BoundError> {
    if rank_p == 0 {
        return Err(BoundError::Precondition("rank(P) must be positive".into()));
    }
    if facts.seminormal != Some(true) {
        return Err(BoundError::Precondition(
            "monoid must be (verified) seminormal".into(),
        ));
    }
    let n_eff = cert.map(|c| c.level as u64).unwrap_or(1).min(facts.rank as u64);
    Ok(rank_p + profile.dim + facts.rank as u64 - n_eff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{certify_mn, CertifyOutcome, PanelOptions};

    fn facts(m: &AffineMonoid) -> MonoidFacts {
        monoid_facts(m, 40)
    }

    fn free_cert(rank: usize) -> MnCertificate {
        let opts = PanelOptions {
            rounds: 2,
            ..Default::default()
        };
        match certify_mn(&AffineMonoid::free(rank), None, None, &opts).unwrap() {
            CertifyOutcome::Certificate(c) => c,
            CertifyOutcome::Inconclusive { failing_condition } => panic!("{failing_condition}"),
        }
    }

    #[test]
    fn free_plane_with_level_two_certificate() {
        let m = AffineMonoid::free(2);
        let cert = free_cert(2);
        let report = serre_bound(&m, &RingProfile::of_dimension(3), Some(&cert), &facts(&m));
        let by_rule = |r: &str| {
            report
                .entries
                .iter()
                .find(|e| e.rule == r)
                .map(|e| e.bound)
        };
        assert_eq!(by_rule("R1"), Some(4));
        assert_eq!(by_rule("R2"), Some(5));
        assert_eq!(by_rule("R2s"), Some(3));
        assert_eq!(by_rule("R3"), Some(3));
        assert_eq!(report.best.unwrap().bound, 3);
    }

    #[test]
    fn normal_rank_two_reaches_d() {
        // normal rank-2 monoid that is not free
        let m = AffineMonoid::new(
            2,
            vec![
                ExponentVector::from_i64(&[1, 0]),
                ExponentVector::from_i64(&[1, 1]),
                ExponentVector::from_i64(&[1, 2]),
            ],
        )
        .unwrap();
        for d in [0u64, 1, 4] {
            let report = serre_bound(&m, &RingProfile::of_dimension(d), None, &facts(&m));
            let r2s = report.entries.iter().find(|e| e.rule == "R2s").unwrap();
            assert_eq!(r2s.bound, d as i64);
            assert_eq!(report.best.unwrap().bound, d as i64);
        }
    }

    #[test]
    fn rank_zero_degenerate() {
        let m = AffineMonoid::new(2, vec![]).unwrap();
        let report = serre_bound(&m, &RingProfile::of_dimension(5), None, &facts(&m));
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].rule, "R0");
        assert_eq!(report.best.unwrap().bound, 5);
    }

    #[test]
    fn hypotheses_always_tagged() {
        let m = AffineMonoid::free(2);
        let report = serre_bound(&m, &RingProfile::of_dimension(1), None, &facts(&m));
        for e in &report.entries {
            if e.rule != "R0" && e.rule != "R1" {
                assert!(!e.hypotheses.is_empty(), "rule {} untagged", e.rule);
            }
        }
    }

    #[test]
    fn mu_bound_cases() {
        let free3 = AffineMonoid::free(3);
        let f = facts(&free3);
        let cert = free_cert(3);
        let d = RingProfile::of_dimension(2);
        assert_eq!(mu_bound(&d, 2, Some(&cert), &f).unwrap(), 4); // rank_p + d
        assert_eq!(mu_bound(&d, 2, None, &f).unwrap(), 2 + 2 + 3 - 1);

        let trivial = AffineMonoid::new(1, vec![]).unwrap();
        let tf = facts(&trivial);
        assert_eq!(mu_bound(&d, 2, None, &tf).unwrap(), 4); // r = 0 degenerate
        assert!(mu_bound(&d, 0, None, &tf).is_err());
    }
}
