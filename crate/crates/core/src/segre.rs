//! The product-of-index-sets ("Segre") monoid underlying the quotient of a
//! polynomial ring in an m×n grid of variables by its 2×2 binomial minors,
//! with a verified isomorphism onto the grid presentation, level
//! certificates, and the Rees monoid of a monomial ideal.

use crate::classes::{
    certify_mn, downgrade_certificate, verify_certificate, AutomorphismRule, CertPair,
    CertificateHints, CertifyOutcome, ClassError, MnCertificate, PanelOptions,
    PhiSimplicialVerdict, VerificationKind,
};
use crate::cones;
use crate::lattice::{lattice_member, ExponentVector, LatticeMembership};
use crate::monoid::AffineMonoid;
use crate::polyalg;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SegreError {
    #[error("grid dimensions must be positive")]
    InvalidDimensions,
    #[error("bad ideal generator: {0}")]
    BadIdealGenerator(String),
    #[error("certificate construction failed: {0}")]
    Certificate(String),
}

/// A grid index pair (i, j), 1-based, 1 <= i <= m, 1 <= j <= n.
pub type GridIndex = (u64, u64);

/// A formal ℤ-word in the grid variables y_{ij}.
pub type YWord = Vec<(GridIndex, i64)>;

/// The monoid M with generators x_1..x_n and x_i x_j (i <= n < j <= m+n-1),
/// together with the maps onto and from the grid presentation M'.
#[derive(Clone, Debug)]
pub struct SegreDatum {
    pub m: u64,
    pub n: u64,
    pub monoid: AffineMonoid,
    /// theta(y_ij): grid generator images in M.
    pub theta: BTreeMap<GridIndex, ExponentVector>,
    /// phi(x_j): group-level words in the grid variables.
    pub phi: Vec<YWord>,
}

/// floor((m + n - 1) / min(m, n)); the certificate level of the product
/// monoid.
pub fn k_of(m: u64, n: u64) -> u64 {
    assert!(m >= 1 && n >= 1, "grid dimensions must be positive");
    (m + n - 1) / m.min(n)
}

pub fn segre_monoid(m: u64, n: u64) -> Result<SegreDatum, SegreError> {
    if m == 0 || n == 0 {
        return Err(SegreError::InvalidDimensions);
    }
    let rank = (m + n - 1) as usize;
    let mut gens: Vec<ExponentVector> = vec![];
    for j in 1..=n {
        gens.push(ExponentVector::unit(rank, (j - 1) as usize));
    }
    for i in 1..=n {
        for j in (n + 1)..=(m + n - 1) {
            gens.push(
                ExponentVector::unit(rank, (i - 1) as usize)
                    .add(&ExponentVector::unit(rank, (j - 1) as usize)),
            );
        }
    }
    let monoid = AffineMonoid::new(rank, gens)
        .expect("product monoid generators are valid")
        .with_name(format!("segre_{m}x{n}"));

    let mut theta = BTreeMap::new();
    for i in 1..=m {
        for j in 1..=n {
            let img = if i == 1 {
                ExponentVector::unit(rank, (j - 1) as usize)
            } else {
                ExponentVector::unit(rank, (j - 1) as usize)
                    .add(&ExponentVector::unit(rank, (n + i - 2) as usize))
            };
            theta.insert((i, j), img);
        }
    }
    let mut phi: Vec<YWord> = vec![];
    for j in 1..=(m + n - 1) {
        if j <= n {
            phi.push(vec![((1, j), 1)]);
        } else {
            phi.push(vec![((1, 1), -1), ((j + 1 - n, 1), 1)]);
        }
    }
    Ok(SegreDatum {
        m,
        n,
        monoid,
        theta,
        phi,
    })
}

/// Exponent matrix of a grid monomial: entry (i, j) is the exponent of y_ij.
pub type GridMatrix = Vec<Vec<u64>>;

/// Row and column sums of a grid monomial; invariants of the exchange moves.
pub fn margins(e: &GridMatrix) -> (Vec<u64>, Vec<u64>) {
    let m = e.len();
    let n = e.first().map_or(0, |r| r.len());
    let rows: Vec<u64> = (0..m).map(|i| e[i].iter().sum()).collect();
    let cols: Vec<u64> = (0..n).map(|j| (0..m).map(|i| e[i][j]).sum()).collect();
    (rows, cols)
}

/// The northwest-corner matrix with the given margins: the normal form of a
/// grid monomial under the 2×2 exchange moves.
pub fn northwest_form(rows: &[u64], cols: &[u64]) -> GridMatrix {
    let mut r = rows.to_vec();
    let mut c = cols.to_vec();
    let mut out = vec![vec![0u64; c.len()]; r.len()];
    for i in 0..r.len() {
        for j in 0..c.len() {
            let t = r[i].min(c[j]);
            out[i][j] = t;
            r[i] -= t;
            c[j] -= t;
        }
    }
    out
}

/// One step of the exchange rewriting oriented toward the northwest corner:
/// replace mass at (i,l),(k,j) with (i,j),(k,l) for i<k, j<l. Returns true
/// when a rewrite fired.
pub fn rewrite_step(e: &mut GridMatrix) -> bool {
    let m = e.len();
    let n = e.first().map_or(0, |r| r.len());
    for i in 0..m {
        for k in i + 1..m {
            for j in 0..n {
                for l in j + 1..n {
                    if e[i][l] > 0 && e[k][j] > 0 {
                        e[i][l] -= 1;
                        e[k][j] -= 1;
                        e[i][j] += 1;
                        e[k][l] += 1;
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Normal form by exhaustive rewriting; agrees with [`northwest_form`] of the
/// margins (margins are invariant under the moves).
pub fn rewrite_normal_form(mut e: GridMatrix) -> GridMatrix {
    while rewrite_step(&mut e) {}
    e
}

#[derive(Clone, Debug, Serialize)]
pub struct SegreIsoReport {
    pub relations_preserved: bool,
    pub phi_theta_identity: bool,
    pub theta_phi_identity: bool,
    pub rank_matches: bool,
    pub injectivity_spot_check: bool,
    pub counterexample: Option<String>,
}

impl SegreIsoReport {
    pub fn passed(&self) -> bool {
        self.relations_preserved
            && self.phi_theta_identity
            && self.theta_phi_identity
            && self.rank_matches
            && self.injectivity_spot_check
    }
}

/// Relation lattice of the grid presentation: spanned by
/// y_ij + y_kl - y_il - y_kj over i≠k, j≠l, inside ℤ^{mn}.
fn relation_lattice(m: u64, n: u64) -> Vec<ExponentVector> {
    let dim = (m * n) as usize;
    let idx = |i: u64, j: u64| ((i - 1) * n + (j - 1)) as usize;
    let mut rels = vec![];
    for i in 1..=m {
        for k in (i + 1)..=m {
            for j in 1..=n {
                for l in (j + 1)..=n {
                    let mut v = vec![BigInt::from(0); dim];
                    v[idx(i, j)] += 1;
                    v[idx(k, l)] += 1;
                    v[idx(i, l)] -= 1;
                    v[idx(k, j)] -= 1;
                    rels.push(ExponentVector::new(v));
                }
            }
        }
    }
    rels
}

fn word_to_vector(word: &YWord, m: u64, n: u64) -> ExponentVector {
    let dim = (m * n) as usize;
    let idx = |i: u64, j: u64| ((i - 1) * n + (j - 1)) as usize;
    let mut v = vec![BigInt::from(0); dim.max(1)];
    for ((i, j), c) in word {
        v[idx(*i, *j)] += *c;
    }
    ExponentVector::new(v)
}

/// Verify the two-sided isomorphism between the grid presentation and the
/// product monoid: relation preservation, both composite identities, rank,
/// and injectivity of theta on all canonical grid monomials up to the degree
/// bound.
pub fn verify_segre_iso(s: &SegreDatum, degree_bound: u64) -> SegreIsoReport {
    let (m, n) = (s.m, s.n);
    let mut counterexample = None;

    // (a) theta respects every minor relation
    let mut relations_preserved = true;
    'rel: for i in 1..=m {
        for k in 1..=m {
            if i == k {
                continue;
            }
            for j in 1..=n {
                for l in 1..=n {
                    if j == l {
                        continue;
                    }
                    let lhs = s.theta[&(i, j)].add(&s.theta[&(k, l)]);
                    let rhs = s.theta[&(i, l)].add(&s.theta[&(k, j)]);
                    if lhs != rhs {
                        relations_preserved = false;
                        counterexample =
                            Some(format!("relation ({i},{j}),({k},{l}) broken by theta"));
                        break 'rel;
                    }
                }
            }
        }
    }

    // (b) phi ∘ theta = identity on every grid variable, modulo the relation
    // lattice
    let rels = relation_lattice(m, n);
    let mut phi_theta_identity = true;
    'pt: for i in 1..=m {
        for j in 1..=n {
            // phi applied to the exponent vector theta(y_ij)
            let img = &s.theta[&(i, j)];
            let mut word: YWord = vec![];
            for v in 0..img.len() {
                let c: i64 = img.coord(v).try_into().expect("small exponent");
                for (pair, w) in &s.phi[v] {
                    word.push((*pair, w * c));
                }
            }
            word.push(((i, j), -1));
            let diff = word_to_vector(&word, m, n);
            let ok = if rels.is_empty() {
                diff.is_zero()
            } else {
                matches!(lattice_member(&diff, &rels), LatticeMembership::Member(_))
            };
            if !ok {
                phi_theta_identity = false;
                counterexample = Some(format!("phi(theta(y_{i}{j})) differs from y_{i}{j}"));
                break 'pt;
            }
        }
    }

    // (c) theta ∘ phi = identity on the ambient variables
    let mut theta_phi_identity = true;
    for v in 0..s.monoid.ambient_rank() {
        let mut acc = ExponentVector::zero(s.monoid.ambient_rank());
        for ((i, j), c) in &s.phi[v] {
            acc = acc.add(&s.theta[&(*i, *j)].scale(&BigInt::from(*c)));
        }
        if acc != ExponentVector::unit(s.monoid.ambient_rank(), v) {
            theta_phi_identity = false;
            counterexample = Some(format!("theta(phi(x{})) is {}", v + 1, acc));
            break;
        }
    }

    // (d) rank
    let rank_matches = s.monoid.rank() == (m + n - 1) as usize;
    if !rank_matches && counterexample.is_none() {
        counterexample = Some(format!(
            "rank {} instead of {}",
            s.monoid.rank(),
            m + n - 1
        ));
    }

    // (e) injectivity of theta on canonical grid monomials of bounded degree
    let mut injectivity_spot_check = true;
    let mut seen: BTreeMap<ExponentVector, (Vec<u64>, Vec<u64>)> = BTreeMap::new();
    'inj: for d in 0..=degree_bound {
        for rows in compositions(d, m as usize) {
            for cols in compositions(d, n as usize) {
                let e = northwest_form(&rows, &cols);
                let mut img = ExponentVector::zero(s.monoid.ambient_rank());
                for (i, row) in e.iter().enumerate() {
                    for (j, &c) in row.iter().enumerate() {
                        if c > 0 {
                            img = img.add(
                                &s.theta[&(i as u64 + 1, j as u64 + 1)]
                                    .scale(&BigInt::from(c)),
                            );
                        }
                    }
                }
                if let Some(prev) = seen.insert(img, (rows.clone(), cols.clone())) {
                    injectivity_spot_check = false;
                    counterexample = Some(format!(
                        "theta identifies margin classes {:?} and {:?}",
                        prev,
                        (rows, cols)
                    ));
                    break 'inj;
                }
            }
        }
    }

    SegreIsoReport {
        relations_preserved,
        phi_theta_identity,
        theta_phi_identity,
        rank_matches,
        injectivity_spot_check,
        counterexample,
    }
}

/// All vectors of `parts` nonnegative integers summing to `total`.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = vec![];
    for first in 0..=total {
        for rest in compositions(total - first, parts - 1) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// A level certificate for the product monoid, verified on the panel. For
/// m > n the certificate is built and verified on the transposed presentation
/// (the two monoids are isomorphic); `verified_on` carries the monoid the
/// panel actually ran against.
#[derive(Clone, Debug)]
pub struct SegreCertificate {
    pub certificate: MnCertificate,
    pub verified_on: AffineMonoid,
    pub transposed: bool,
}

pub fn segre_certificate(
    s: &SegreDatum,
    opts: &PanelOptions,
) -> Result<SegreCertificate, SegreError> {
    if s.m > s.n {
        let t = segre_monoid(s.n, s.m)?;
        let inner = segre_certificate(&t, opts)?;
        let mut cert = inner.certificate;
        if let AutomorphismRule::Segre { transposed, .. } = &mut cert.rule {
            *transposed = true;
        }
        return Ok(SegreCertificate {
            certificate: cert,
            verified_on: inner.verified_on,
            transposed: true,
        });
    }
    let cert = build_segre_certificate(s.m, s.n)?;
    let v = verify_certificate(&s.monoid, &cert, opts);
    if !v.passed {
        return Err(SegreError::Certificate(v.failures.join("; ")));
    }
    Ok(SegreCertificate {
        certificate: cert,
        verified_on: s.monoid.clone(),
        transposed: false,
    })
}

/// Pairs per the blockwise layout: U_1 = x_1 with S_1 = {x_1..x_k}; for
/// j >= 2, U_j = x_1 x_{n+j-1} with S_j pairing x_{n+j-1} against x_1 and the
/// k-1 block variables the substitution moves.
fn build_segre_certificate(m: u64, n: u64) -> Result<MnCertificate, SegreError> {
    assert!(m <= n);
    let k = k_of(m, n);
    let rank = (m + n - 1) as usize;
    if k == 1 {
        let mut cert = MnCertificate::positivity(false);
        cert.simplicial_mode = false;
        return Ok(cert);
    }
    let unit = |i: u64| ExponentVector::unit(rank, (i - 1) as usize);
    let mut pairs = vec![];
    pairs.push(CertPair {
        u: unit(1),
        s: (1..=k).map(unit).collect(),
    });
    for j in 2..=m {
        let col = unit(n + j - 1);
        let mut s_j = vec![col.add(&unit(1))];
        let lo = (j - 1) * (k - 1) + 2;
        let hi = j * (k - 1) + 1;
        for i in lo..=hi {
            s_j.push(col.add(&unit(i)));
        }
        pairs.push(CertPair {
            u: unit(1).add(&col),
            s: s_j,
        });
    }
    let recursion = if k >= 2 {
        let rec = build_segre_certificate(m, n - 1)?;
        Some(Box::new(downgrade_certificate(&rec, (k - 1) as usize)))
    } else {
        None
    };
    Ok(MnCertificate {
        level: k as usize,
        pairs,
        rule: AutomorphismRule::Segre {
            m,
            n,
            transposed: false,
        },
        simplicial_mode: false,
        recursion,
        verification: VerificationKind::Structural {
            panel_rounds: 0,
            seed: 0,
        },
    })
}

/// Certificate for a seminormal simplicial overmonoid N of the product
/// monoid inside ℤ₊^{m+n-1}: tilt on the first variable at level max(m, n),
/// recursing through the zero graded parts.
pub fn ps_certificate(
    s: &SegreDatum,
    overmonoid: &AffineMonoid,
    degree_bound: u64,
    opts: &PanelOptions,
) -> Result<CertifyOutcome, ClassError> {
    if s.m > s.n {
        return Ok(CertifyOutcome::Inconclusive {
            failing_condition: "use the transposed datum with m <= n".into(),
        });
    }
    if overmonoid.ambient_rank() != s.monoid.ambient_rank() {
        return Ok(CertifyOutcome::Inconclusive {
            failing_condition: "overmonoid lives in a different ambient rank".into(),
        });
    }
    if !overmonoid.all_generators_nonnegative() {
        return Ok(CertifyOutcome::Inconclusive {
            failing_condition: "overmonoid leaves the nonnegative orthant".into(),
        });
    }
    // containment and per-level side conditions down the recursion chain
    let mut cur_n = s.n;
    let mut cur_over = overmonoid.clone();
    loop {
        let cur_base = segre_monoid(s.m, cur_n).expect("valid dimensions");
        for g in cur_base.monoid.generators() {
            if !cur_over.is_member_default(g) {
                return Ok(CertifyOutcome::Inconclusive {
                    failing_condition: format!(
                        "overmonoid misses the base generator {} at column count {}",
                        g, cur_n
                    ),
                });
            }
        }
        match crate::classes::is_phi_simplicial(&cur_over, crate::classes::DEFAULT_TILT_BOUND) {
            Ok(PhiSimplicialVerdict::Yes { .. }) => {}
            other => {
                return Ok(CertifyOutcome::Inconclusive {
                    failing_condition: format!(
                        "overmonoid is not simplicial at column count {}: {:?}",
                        cur_n, other
                    ),
                })
            }
        }
        match cones::is_seminormal(&cur_over, degree_bound) {
            Ok(true) => {}
            Ok(false) => {
                return Ok(CertifyOutcome::Inconclusive {
                    failing_condition: format!(
                        "overmonoid is not seminormal at column count {}",
                        cur_n
                    ),
                })
            }
            Err(e) => {
                return Ok(CertifyOutcome::Inconclusive {
                    failing_condition: format!("seminormality undecided: {e}"),
                })
            }
        }
        if cur_n == 1 {
            break;
        }
        cur_over = polyalg::drop_coordinate(&cur_over, 0);
        cur_n -= 1;
    }

    let tilt = crate::classes::tilted_variables(overmonoid, crate::classes::DEFAULT_TILT_BOUND);
    let Some(tv) = tilt.tilted.iter().find(|t| t.index == 0) else {
        return Ok(CertifyOutcome::Inconclusive {
            failing_condition: "first variable is not tilted in the overmonoid".into(),
        });
    };
    let hints = CertificateHints {
        level: s.n as usize,
        pairs: vec![],
        rule: AutomorphismRule::Tilt {
            variable: 0,
            tilt_exponents: tv.exponents.clone(),
        },
        simplicial_mode: true,
    };
    certify_mn(overmonoid, Some(&hints), Some(s.n as usize), opts)
}

/// Rees monoid of a monomial ideal: ambient rank m+1, generated by the
/// coordinate directions plus the ideal generators shifted into the new
/// grading coordinate. The extended variant also adjoins the negative of the
/// grading coordinate.
#[derive(Clone, Debug)]
pub struct ReesDatum {
    pub monoid: AffineMonoid,
    pub ideal_generators: Vec<ExponentVector>,
    pub extended: bool,
    /// Present when the ideal is generated by all the variables: the monoid
    /// then coincides with the product monoid on a 2-row grid, generator for
    /// generator.
    pub segre_identification: Option<ReesSegreIdentification>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReesSegreIdentification {
    pub grid_rows: u64,
    pub grid_cols: u64,
    pub generators_match: bool,
}

pub fn rees_monoid(
    ideal_generators: &[ExponentVector],
    extended: bool,
) -> Result<ReesDatum, SegreError> {
    if ideal_generators.is_empty() {
        return Err(SegreError::BadIdealGenerator("empty ideal".into()));
    }
    let m = ideal_generators[0].len();
    for a in ideal_generators {
        if a.len() != m {
            return Err(SegreError::BadIdealGenerator(format!(
                "{} has the wrong number of variables",
                a
            )));
        }
        if a.is_zero() || !a.is_nonnegative() {
            return Err(SegreError::BadIdealGenerator(format!(
                "{} is not a nonconstant monomial",
                a
            )));
        }
    }
    let rank = m + 1;
    let mut gens: Vec<ExponentVector> = (0..m).map(|i| ExponentVector::unit(rank, i)).collect();
    let shift = ExponentVector::unit(rank, m);
    for a in ideal_generators {
        let mut coords: Vec<BigInt> = a.coords().to_vec();
        coords.push(BigInt::from(0));
        let lifted = ExponentVector::new(coords).add(&shift);
        if !gens.contains(&lifted) {
            gens.push(lifted);
        }
    }
    if extended {
        gens.push(shift.neg());
    }
    let monoid = AffineMonoid::new(rank, gens)?
        .with_name(if extended { "rees_extended" } else { "rees" }.to_string());

    let segre_identification = if !extended {
        let units: BTreeSet<ExponentVector> =
            (0..m).map(|i| ExponentVector::unit(m, i)).collect();
        let ideal_set: BTreeSet<ExponentVector> = ideal_generators.iter().cloned().collect();
        if units == ideal_set {
            let grid = segre_monoid(2, m as u64)?;
            let a: BTreeSet<ExponentVector> = monoid.generators().iter().cloned().collect();
            let b: BTreeSet<ExponentVector> =
                grid.monoid.generators().iter().cloned().collect();
            Some(ReesSegreIdentification {
                grid_rows: 2,
                grid_cols: m as u64,
                generators_match: a == b,
            })
        } else {
            None
        }
    } else {
        None
    };
    Ok(ReesDatum {
        monoid,
        ideal_generators: ideal_generators.to_vec(),
        extended,
        segre_identification,
    })
}

impl From<crate::monoid::MonoidError> for SegreError {
    fn from(e: crate::monoid::MonoidError) -> Self {
        SegreError::BadIdealGenerator(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from_i64(v)
    }

    #[test]
    fn k_table() {
        assert_eq!(k_of(2, 2), 1);
        assert_eq!(k_of(1, 5), 5);
        assert_eq!(k_of(2, 3), 2);
        assert_eq!(k_of(2, 5), 3);
        assert_eq!(k_of(3, 3), 1);
        assert_eq!(k_of(5, 2), k_of(2, 5));
    }

    #[test]
    fn monoid_shapes() {
        let s = segre_monoid(1, 3).unwrap();
        assert_eq!(s.monoid.generators().len(), 3);
        assert_eq!(s.monoid.rank(), 3);

        let s = segre_monoid(2, 2).unwrap();
        let gens: BTreeSet<_> = s.monoid.generators().iter().cloned().collect();
        assert_eq!(
            gens,
            BTreeSet::from([ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[1, 0, 1]), ev(&[0, 1, 1])])
        );
        assert_eq!(s.monoid.rank(), 3);

        let s = segre_monoid(3, 2).unwrap();
        assert_eq!(s.monoid.generators().len(), 6);
        assert_eq!(s.monoid.ambient_rank(), 4);
    }

    #[test]
    fn iso_verifies_small_grids() {
        for (m, n) in [(1, 1), (2, 2), (3, 2), (2, 3)] {
            let s = segre_monoid(m, n).unwrap();
            let rep = verify_segre_iso(&s, 4);
            assert!(rep.passed(), "({m},{n}): {:?}", rep.counterexample);
        }
    }

    #[test]
    fn rewriting_matches_northwest_form() {
        // exhaustive small-degree confluence check: any rewriting order ends
        // at the margin northwest form
        for d in 0..=4u64 {
            for rows in compositions(d, 3) {
                for cols in compositions(d, 3) {
                    let nw = northwest_form(&rows, &cols);
                    // scatter the mass differently: southeast-first fill
                    let mut se = vec![vec![0u64; 3]; 3];
                    let mut r = rows.clone();
                    let mut c = cols.clone();
                    for i in (0..3).rev() {
                        for j in (0..3).rev() {
                            let t = r[i].min(c[j]);
                            se[i][j] = t;
                            r[i] -= t;
                            c[j] -= t;
                        }
                    }
                    assert_eq!(margins(&se), (rows.clone(), cols.clone()));
                    assert_eq!(rewrite_normal_form(se), nw, "margins {:?}/{:?}", rows, cols);
                }
            }
        }
    }

    #[test]
    fn certificate_levels() {
        let opts = PanelOptions {
            rounds: 4,
            ..Default::default()
        };
        let s = segre_monoid(2, 2).unwrap();
        let c = segre_certificate(&s, &opts).unwrap();
        assert_eq!(c.certificate.level, 1);

        let s = segre_monoid(2, 3).unwrap();
        let c = segre_certificate(&s, &opts).unwrap();
        assert_eq!(c.certificate.level, 2);
        assert!(!c.transposed);

        let s = segre_monoid(3, 2).unwrap();
        let c = segre_certificate(&s, &opts).unwrap();
        assert_eq!(c.certificate.level, 2);
        assert!(c.transposed);
    }

    #[test]
    fn rees_of_variable_ideal_matches_grid_monoid() {
        for m in 1..=4usize {
            let ideal: Vec<ExponentVector> =
                (0..m).map(|i| ExponentVector::unit(m, i)).collect();
            let rees = rees_monoid(&ideal, false).unwrap();
            let ident = rees.segre_identification.expect("identification present");
            assert!(ident.generators_match, "m = {m}");
        }
    }

    #[test]
    fn rees_of_general_ideal() {
        // I = (X1^2, X1 X2) in two variables
        let rees = rees_monoid(&[ev(&[2, 0]), ev(&[1, 1])], false).unwrap();
        assert_eq!(rees.monoid.ambient_rank(), 3);
        assert_eq!(rees.monoid.rank(), 3);
        assert!(rees.monoid.is_positive().unwrap());
        assert!(rees.segre_identification.is_none());
    }

    #[test]
    fn extended_rees_adjoins_negative_grading() {
        let rees = rees_monoid(&[ev(&[1])], true).unwrap();
        assert!(!rees.monoid.is_positive().unwrap());
    }

    #[test]
    fn ps_certificate_for_full_orthant() {
        let opts = PanelOptions {
            rounds: 4,
            ..Default::default()
        };
        let s = segre_monoid(2, 2).unwrap();
        let mut gens = s.monoid.generators().to_vec();
        gens.push(ev(&[0, 0, 1]));
        let over = AffineMonoid::new(3, gens).unwrap();
        let out = ps_certificate(&s, &over, 40, &opts).unwrap();
        let cert = out.certificate().expect("certificate");
        assert_eq!(cert.level, 2);
    }
}
