//! Class certificates for positive affine monoids: substitution
//! automorphisms, tilted variables, simplicial detection, and checkable
//! evidence that a monoid admits level-n head-straightening automorphisms
//! (a level-n certificate) with the recursive structure on the zero graded
//! part.
//!
//! Certificates are verified against finite random panels of quasi-monic
//! polynomials. A panel pass is evidence, not a proof over all quasi-monics;
//! rules with separated exponent schedules additionally carry a structural
//! marker since their head term is forced by construction.

use crate::cones::{self, ConeError};
use crate::lattice::{lattice_member, lattice_rank, ExponentVector, LatticeMembership};
use crate::monoid::{AffineMonoid, MembershipVerdict};
use crate::polyalg::{self, monic_in, MonoidPolynomial};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("ambient rank {0} does not match monoid rank {1}")]
    RankMismatch(usize, usize),
    #[error("variable x{} is not a tilted variable", .0 + 1)]
    NotTilted(usize),
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("automorphism verification failed: {0}")]
    VerificationFailed(String),
    #[error("direct sum lift requires a simplicial-mode certificate")]
    NonSimplicialCertificate,
    #[error("cone computation failed: {0}")]
    Cone(#[from] ConeError),
    #[error("zero polynomial has no head")]
    ZeroPolynomial,
}

/// One variable assignment `x_i -> x_i + unit * x^monomial`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub variable: usize,
    pub unit: i64,
    pub monomial: ExponentVector,
}

/// A triangular substitution endomorphism of R[x1..xr] fixing one designated
/// variable, of the shape x_i -> x_i + u·x^a on the assigned variables. The
/// added monomials may not involve any assigned variable, which makes the
/// substitution invertible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionAutomorphism {
    ambient_rank: usize,
    fixed_variable: usize,
    assignments: Vec<Assignment>,
}

impl SubstitutionAutomorphism {
    pub fn new(
        ambient_rank: usize,
        fixed_variable: usize,
        assignments: Vec<Assignment>,
    ) -> Result<Self, ClassError> {
        let assigned: BTreeSet<usize> = assignments.iter().map(|a| a.variable).collect();
        if assigned.len() != assignments.len() {
            return Err(ClassError::InvalidSubstitution(
                "a variable is assigned twice".into(),
            ));
        }
        if assigned.contains(&fixed_variable) {
            return Err(ClassError::InvalidSubstitution(format!(
                "designated variable x{} must stay fixed",
                fixed_variable + 1
            )));
        }
        for a in &assignments {
            if a.variable >= ambient_rank || a.monomial.len() != ambient_rank {
                return Err(ClassError::InvalidSubstitution(format!(
                    "assignment of x{} does not fit ambient rank {}",
                    a.variable + 1,
                    ambient_rank
                )));
            }
            if a.unit.abs() != 1 {
                return Err(ClassError::InvalidSubstitution(
                    "assignment coefficient must be a unit".into(),
                ));
            }
            if a.monomial == ExponentVector::unit(ambient_rank, a.variable) {
                return Err(ClassError::InvalidSubstitution(format!(
                    "assignment of x{} adds the variable itself",
                    a.variable + 1
                )));
            }
            if !a.monomial.is_nonnegative() {
                return Err(ClassError::InvalidSubstitution(
                    "added monomial has a negative exponent".into(),
                ));
            }
            for other in &assignments {
                if a.monomial.coord(other.variable).is_positive() {
                    return Err(ClassError::InvalidSubstitution(format!(
                        "added monomial of x{} involves assigned variable x{}",
                        a.variable + 1,
                        other.variable + 1
                    )));
                }
            }
        }
        Ok(SubstitutionAutomorphism {
            ambient_rank,
            fixed_variable,
            assignments,
        })
    }

    pub fn identity(ambient_rank: usize, fixed_variable: usize) -> Self {
        SubstitutionAutomorphism {
            ambient_rank,
            fixed_variable,
            assignments: vec![],
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn fixed_variable(&self) -> usize {
        self.fixed_variable
    }

    pub fn assignments(&self) -> &[Assignment] {
        &self.assignments
    }

    pub fn assigns(&self, variable: usize) -> bool {
        self.assignments.iter().any(|a| a.variable == variable)
    }

    /// Image of a single monomial, fully expanded.
    pub fn apply_to_monomial(&self, e: &ExponentVector) -> MonoidPolynomial {
        assert_eq!(e.len(), self.ambient_rank);
        let mut acc = MonoidPolynomial::one(self.ambient_rank);
        let mut fixed_part = ExponentVector::zero(self.ambient_rank);
        for i in 0..self.ambient_rank {
            let exp = e.coord(i);
            if exp.is_zero() {
                continue;
            }
            match self.assignments.iter().find(|a| a.variable == i) {
                None => {
                    fixed_part = fixed_part.add(&ExponentVector::unit(self.ambient_rank, i).scale(exp));
                }
                Some(a) => {
                    assert!(
                        !exp.is_negative(),
                        "cannot substitute into a negative exponent"
                    );
                    let power: u64 = exp.try_into().expect("exponent fits u64");
                    let binom = MonoidPolynomial::variable(self.ambient_rank, i).add(
                        &MonoidPolynomial::monomial(a.monomial.clone(), BigInt::from(a.unit)),
                    );
                    acc = acc.mul(&binom.pow(power));
                }
            }
        }
        acc.mul(&MonoidPolynomial::monomial(fixed_part, BigInt::one()))
    }

    pub fn apply(&self, f: &MonoidPolynomial) -> MonoidPolynomial {
        assert_eq!(f.ambient_rank(), self.ambient_rank, "rank mismatch");
        let mut out = MonoidPolynomial::zero(self.ambient_rank);
        for (e, c) in f.terms() {
            let image = self.apply_to_monomial(e);
            out = out.add(&image.mul(&MonoidPolynomial::monomial(
                ExponentVector::zero(self.ambient_rank),
                c.clone(),
            )));
        }
        out
    }
}

/// Full expansion of the substitution in exact arithmetic.
pub fn apply_automorphism(
    eta: &SubstitutionAutomorphism,
    f: &MonoidPolynomial,
) -> MonoidPolynomial {
    eta.apply(f)
}

#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismReport {
    pub fixes_designated_variable: bool,
    pub restricts_to_monoid: bool,
    /// When requested: every added monomial is a monoid member with positive
    /// first exponent.
    pub added_monomials_in_m1: Option<bool>,
    pub failures: Vec<String>,
    pub inconclusive: bool,
}

impl AutomorphismReport {
    pub fn passed(&self) -> bool {
        self.fixes_designated_variable
            && self.restricts_to_monoid
            && self.added_monomials_in_m1.unwrap_or(true)
            && !self.inconclusive
    }
}

/// Check that the substitution restricts to the monoid algebra: the image of
/// every generator monomial is supported on M. With `require_m1_form`, each
/// added monomial must itself be a member of M with positive first exponent.
pub fn verify_automorphism(
    m: &AffineMonoid,
    eta: &SubstitutionAutomorphism,
    require_m1_form: bool,
) -> AutomorphismReport {
    let mut failures = vec![];
    let mut inconclusive = false;
    let fixes = !eta.assigns(eta.fixed_variable());
    if !fixes {
        failures.push("designated variable is assigned".to_string());
    }
    if eta.ambient_rank() != m.ambient_rank() {
        failures.push(format!(
            "substitution rank {} does not match monoid rank {}",
            eta.ambient_rank(),
            m.ambient_rank()
        ));
        return AutomorphismReport {
            fixes_designated_variable: fixes,
            restricts_to_monoid: false,
            added_monomials_in_m1: None,
            failures,
            inconclusive: false,
        };
    }
    let mut restricts = true;
    for g in m.generators() {
        let image = eta.apply_to_monomial(g);
        for (e, _) in image.terms() {
            match m.membership_default(e) {
                Ok(MembershipVerdict::Member { .. }) => {}
                Ok(MembershipVerdict::NonMember { .. }) => {
                    restricts = false;
                    failures.push(format!("image term {} of generator {} leaves M", e, g));
                }
                Ok(MembershipVerdict::Unknown { .. }) | Err(_) => {
                    inconclusive = true;
                    failures.push(format!("membership of image term {} undecided", e));
                }
            }
        }
    }
    let m1 = if require_m1_form {
        let mut ok = true;
        for a in eta.assignments() {
            let in_m = match m.membership_default(&a.monomial) {
                Ok(MembershipVerdict::Member { .. }) => true,
                Ok(MembershipVerdict::NonMember { .. }) => false,
                _ => {
                    inconclusive = true;
                    false
                }
            };
            if !in_m || !a.monomial.coord(0).is_positive() {
                ok = false;
                failures.push(format!(
                    "added monomial {} is not a monoid member with positive first exponent",
                    a.monomial
                ));
            }
        }
        Some(ok)
    } else {
        None
    };
    AutomorphismReport {
        fixes_designated_variable: fixes,
        restricts_to_monoid: restricts,
        added_monomials_in_m1: m1,
        failures,
        inconclusive,
    }
}

/// Generators with strictly positive first exponent.
pub fn gen1(m: &AffineMonoid) -> Vec<ExponentVector> {
    m.generators()
        .iter()
        .filter(|g| g.coord(0).is_positive())
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiSimplicialVerdict {
    Yes { powers: Vec<u64> },
    No { variable: usize },
    Unknown { variable: usize, bound: u64 },
}

/// Search a positive pure power of every variable. A certified `No` means
/// some unit vector lies outside the cone; `Unknown` can only occur for
/// non-normal monoids when the power bound runs out.
pub fn is_phi_simplicial(
    m: &AffineMonoid,
    power_bound: u64,
) -> Result<PhiSimplicialVerdict, ClassError> {
    let rank = m.rank();
    if rank != m.ambient_rank() {
        return Err(ClassError::RankMismatch(m.ambient_rank(), rank));
    }
    let cone = m.cone();
    let mut normal_cache: Option<bool> = None;
    let mut powers = vec![];
    'vars: for i in 0..m.ambient_rank() {
        let e = ExponentVector::unit(m.ambient_rank(), i);
        if !cone.contains(&e) {
            return Ok(PhiSimplicialVerdict::No { variable: i });
        }
        for p in 1..=power_bound {
            if m.is_member_default(&e.scale(&BigInt::from(p))) {
                powers.push(p);
                continue 'vars;
            }
        }
        // in the cone but not found: decide exactly when M is normal
        let normal = match normal_cache {
            Some(n) => n,
            None => {
                let n = cones::is_normal(m).unwrap_or(false);
                normal_cache = Some(n);
                n
            }
        };
        if normal {
            if let Some(p) = minimal_lattice_multiple(&e, m.generators()) {
                powers.push(p);
                continue 'vars;
            }
            return Ok(PhiSimplicialVerdict::No { variable: i });
        }
        return Ok(PhiSimplicialVerdict::Unknown {
            variable: i,
            bound: power_bound,
        });
    }
    Ok(PhiSimplicialVerdict::Yes { powers })
}

/// Minimal k > 0 with k·v in the lattice generated by the given vectors.
fn minimal_lattice_multiple(v: &ExponentVector, gens: &[ExponentVector]) -> Option<u64> {
    for k in 1..=4096u64 {
        if matches!(
            lattice_member(&v.scale(&BigInt::from(k)), gens),
            LatticeMembership::Member(_)
        ) {
            return Some(k);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltedVariable {
    pub index: usize,
    /// Minimal c_j per other variable j with c_j·e_i + e_j a member.
    pub exponents: Vec<(usize, u64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltedReport {
    pub tilted: Vec<TiltedVariable>,
    /// Variables with e_i a member whose search ran out of the bound; they
    /// may still be tilted for larger exponents.
    pub bound_limited: Vec<usize>,
}

/// A variable x_i is tilted when e_i is a member and every other variable
/// becomes a member after adding a suitable multiple of e_i.
pub fn tilted_variables(m: &AffineMonoid, bound: u64) -> TiltedReport {
    let mut tilted = vec![];
    let mut bound_limited = vec![];
    'vars: for i in 0..m.ambient_rank() {
        let ei = ExponentVector::unit(m.ambient_rank(), i);
        if !m.is_member_default(&ei) {
            continue;
        }
        let mut exponents = vec![];
        for j in 0..m.ambient_rank() {
            if j == i {
                continue;
            }
            let ej = ExponentVector::unit(m.ambient_rank(), j);
            let mut found = None;
            for c in 0..=bound {
                if m.is_member_default(&ei.scale(&BigInt::from(c)).add(&ej)) {
                    found = Some(c);
                    break;
                }
            }
            match found {
                Some(c) => exponents.push((j, c)),
                None => {
                    bound_limited.push(i);
                    continue 'vars;
                }
            }
        }
        tilted.push(TiltedVariable {
            index: i,
            exponents,
        });
    }
    TiltedReport {
        tilted,
        bound_limited,
    }
}

pub const DEFAULT_TILT_BOUND: u64 = 32;

/// Exponent schedule for a tilt substitution: strictly separated powers so
/// distinct exponent patterns of the input cannot land on the same head.
fn separated_powers(base: u64, count: usize, degree: u64) -> Vec<u64> {
    let step = degree + 2;
    let mut powers = vec![];
    let mut q = base;
    for _ in 0..count {
        powers.push(q);
        q = q.saturating_mul(step);
    }
    powers
}

/// The tilt substitution x_k -> x_k + x_i^{q_k} (k ≠ i) with q chosen from
/// the tilt exponents, the generator degrees and the degree of `f`, then
/// verified: the image of `f` is monic in x_i and the substitution restricts
/// to R[M].
pub fn tilt_automorphism(
    m: &AffineMonoid,
    variable: usize,
    f: &MonoidPolynomial,
) -> Result<SubstitutionAutomorphism, ClassError> {
    let report = tilted_variables(m, DEFAULT_TILT_BOUND);
    let Some(tv) = report.tilted.iter().find(|t| t.index == variable) else {
        return Err(ClassError::NotTilted(variable));
    };
    if f.is_zero() {
        return Err(ClassError::ZeroPolynomial);
    }
    let l: u64 = f
        .total_degree()
        .unwrap_or_else(BigInt::zero)
        .try_into()
        .unwrap_or(0);
    let c: u64 = m
        .generators()
        .iter()
        .map(|g| g.total_degree())
        .max()
        .unwrap_or_else(BigInt::zero)
        .try_into()
        .unwrap_or(0)
        + 1;
    let cj = tv.exponents.iter().map(|&(_, c)| c).max().unwrap_or(0);
    let q = (c * cj).max(l) + 1;
    let others: Vec<usize> = (0..m.ambient_rank()).filter(|&k| k != variable).collect();
    let powers = separated_powers(q, others.len(), l);
    let assignments: Vec<Assignment> = others
        .iter()
        .zip(&powers)
        .map(|(&k, &qk)| Assignment {
            variable: k,
            unit: 1,
            monomial: ExponentVector::unit(m.ambient_rank(), variable)
                .scale(&BigInt::from(qk)),
        })
        .collect();
    let eta = SubstitutionAutomorphism::new(m.ambient_rank(), variable, assignments)?;

    let rep = verify_automorphism(m, &eta, false);
    if !rep.restricts_to_monoid || rep.inconclusive {
        return Err(ClassError::VerificationFailed(rep.failures.join("; ")));
    }
    let u = ExponentVector::unit(m.ambient_rank(), variable);
    let image = eta.apply(f);
    match monic_in(&image, &u, m) {
        Ok(r) if r.monic => Ok(eta),
        Ok(r) => Err(ClassError::VerificationFailed(
            r.diagnostic.unwrap_or_else(|| "image is not monic".into()),
        )),
        Err(e) => Err(ClassError::VerificationFailed(e.to_string())),
    }
}

/// One (U_j, S_j) pair: a first-variable-positive generator together with an
/// algebraically independent subset of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertPair {
    #[serde(rename = "U")]
    pub u: ExponentVector,
    #[serde(rename = "S")]
    pub s: Vec<ExponentVector>,
}

/// Affine exponent template a(p) = slope·p + base used by custom rules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateAssignment {
    pub variable: usize,
    pub unit: i64,
    pub slope: Vec<i64>,
    pub base: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "kebab-case")]
pub enum AutomorphismRule {
    /// Level-1 certificates carry no automorphism obligation.
    Positivity,
    /// Free-monoid tilt on the given variable.
    Free { variable: usize },
    /// Tilt on a tilted variable with the recorded minimal exponents.
    Tilt {
        variable: usize,
        tilt_exponents: Vec<(usize, u64)>,
    },
    /// Blockwise substitution for the product-of-two-index-sets monoid.
    Segre { m: u64, n: u64, transposed: bool },
    /// Parameterized assignments x_i -> x_i + u·x^{slope·p + base}.
    Custom {
        assignments: Vec<TemplateAssignment>,
        min_parameter: u64,
    },
    /// Direct-sum lift: straighten the appended free variables into the
    /// inner tilt variable, then run the inner rule.
    DirectSum {
        summands: usize,
        base_rank: usize,
        tilt_variable: usize,
        power_multiple: u64,
        inner: Box<AutomorphismRule>,
    },
}

impl AutomorphismRule {
    /// Instantiate the substitution chain for inputs of the given total
    /// degree, to be applied left to right.
    pub fn build(
        &self,
        m: &AffineMonoid,
        target_degree: u64,
    ) -> Result<Vec<SubstitutionAutomorphism>, ClassError> {
        let rank = m.ambient_rank();
        match self {
            AutomorphismRule::Positivity => Ok(vec![]),
            AutomorphismRule::Free { variable } => {
                let exps: Vec<(usize, u64)> = (0..rank)
                    .filter(|k| k != variable)
                    .map(|k| (k, 0))
                    .collect();
                AutomorphismRule::Tilt {
                    variable: *variable,
                    tilt_exponents: exps,
                }
                .build(m, target_degree)
            }
            AutomorphismRule::Tilt {
                variable,
                tilt_exponents,
            } => {
                let l = target_degree;
                let c: u64 = m
                    .generators()
                    .iter()
                    .map(|g| g.total_degree())
                    .max()
                    .unwrap_or_else(BigInt::zero)
                    .try_into()
                    .unwrap_or(0)
                    + 1;
                let cj = tilt_exponents.iter().map(|&(_, c)| c).max().unwrap_or(0);
                let q = (c * cj).max(l) + 1;
                let others: Vec<usize> = (0..rank).filter(|k| k != variable).collect();
                let powers = separated_powers(q, others.len(), l);
                let assignments = others
                    .iter()
                    .zip(&powers)
                    .map(|(&k, &qk)| Assignment {
                        variable: k,
                        unit: 1,
                        monomial: ExponentVector::unit(rank, *variable).scale(&BigInt::from(qk)),
                    })
                    .collect();
                Ok(vec![SubstitutionAutomorphism::new(
                    rank, *variable, assignments,
                )?])
            }
            AutomorphismRule::Segre { m: mm, n: nn, .. } => {
                build_segre_substitution(rank, *mm, *nn, target_degree)
            }
            AutomorphismRule::Custom {
                assignments,
                min_parameter,
            } => {
                let p = (target_degree + 1).max(*min_parameter);
                let pb = BigInt::from(p);
                let assignments = assignments
                    .iter()
                    .map(|t| {
                        let exp = ExponentVector::from_i64(&t.slope)
                            .scale(&pb)
                            .add(&ExponentVector::from_i64(&t.base));
                        Assignment {
                            variable: t.variable,
                            unit: t.unit,
                            monomial: exp,
                        }
                    })
                    .collect();
                Ok(vec![SubstitutionAutomorphism::new(rank, 0, assignments)?])
            }
            AutomorphismRule::DirectSum {
                summands,
                base_rank,
                tilt_variable,
                power_multiple,
                inner,
            } => {
                let l = target_degree;
                let pm = (*power_multiple).max(1);
                let cs = separated_powers(pm * (l + 1), *summands, l);
                // keep each power a multiple of the pure-power exponent so
                // the added monomials stay inside the monoid
                let assignments: Vec<Assignment> = (0..*summands)
                    .map(|i| Assignment {
                        variable: base_rank + i,
                        unit: 1,
                        monomial: ExponentVector::unit(rank, *tilt_variable)
                            .scale(&BigInt::from(cs[i] * pm)),
                    })
                    .collect();
                let theta = SubstitutionAutomorphism::new(rank, 0, assignments)?;
                let worst = cs.last().copied().unwrap_or(1) * pm;
                let mut chain = vec![theta];
                chain.extend(inner.build(m, l.saturating_mul(worst).max(l))?);
                Ok(chain)
            }
        }
    }

    pub fn is_builtin(&self) -> bool {
        match self {
            AutomorphismRule::Positivity
            | AutomorphismRule::Free { .. }
            | AutomorphismRule::Tilt { .. }
            | AutomorphismRule::Segre { .. } => true,
            AutomorphismRule::DirectSum { inner, .. } => inner.is_builtin(),
            AutomorphismRule::Custom { .. } => false,
        }
    }
}

/// Blockwise substitution used by the product-monoid certificates: in block
/// j, the paired variables receive U_j-powers with separated exponents.
fn build_segre_substitution(
    rank: usize,
    m: u64,
    n: u64,
    target_degree: u64,
) -> Result<Vec<SubstitutionAutomorphism>, ClassError> {
    let k = (m + n - 1) / m.min(n);
    let d0 = target_degree + 2;
    let mut assignments = vec![];
    if k >= 2 {
        // block 1: x_i -> x_i + x_1^{d}, 2 <= i <= k
        let powers = separated_powers(d0, (k - 1) as usize, target_degree);
        for (t, i) in (2..=k).enumerate() {
            assignments.push(Assignment {
                variable: (i - 1) as usize,
                unit: 1,
                monomial: ExponentVector::unit(rank, 0).scale(&BigInt::from(powers[t])),
            });
        }
        // block j >= 2: x_i -> x_i + x_1^{d} x_{n+j-1}^{d-1} over the k-1
        // indices i in ((j-1)k, jk-1]
        for j in 2..=m {
            let powers = separated_powers(d0, (k - 1) as usize, target_degree);
            let lo = (j - 1) * k + 1;
            let hi = j * k - 1;
            for (t, i) in (lo..=hi).enumerate() {
                let d = powers[t];
                let mut exp = ExponentVector::unit(rank, 0).scale(&BigInt::from(d));
                exp = exp.add(
                    &ExponentVector::unit(rank, (n + j - 2) as usize)
                        .scale(&BigInt::from(d - 1)),
                );
                assignments.push(Assignment {
                    variable: (i - 1) as usize,
                    unit: 1,
                    monomial: exp,
                });
            }
        }
    }
    Ok(vec![SubstitutionAutomorphism::new(rank, 0, assignments)?])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerificationKind {
    /// Level 1: positivity is the entire obligation.
    PositivityOnly,
    /// Panel passed; head separation is forced by the rule construction.
    Structural { panel_rounds: usize, seed: u64 },
    /// Panel passed; evidence against the sampled panel only.
    PanelCertified { panel_rounds: usize, seed: u64 },
}

/// A checkable witness that a positive affine monoid admits level-n
/// head-straightening automorphisms, with the level-(n-1) witness for the
/// zero graded part attached recursively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MnCertificate {
    pub level: usize,
    pub pairs: Vec<CertPair>,
    pub rule: AutomorphismRule,
    pub simplicial_mode: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recursion: Option<Box<MnCertificate>>,
    #[serde(default = "default_verification")]
    pub verification: VerificationKind,
}

fn default_verification() -> VerificationKind {
    VerificationKind::PositivityOnly
}

impl MnCertificate {
    pub fn positivity(simplicial: bool) -> Self {
        MnCertificate {
            level: 1,
            pairs: vec![],
            rule: AutomorphismRule::Positivity,
            simplicial_mode: simplicial,
            recursion: None,
            verification: VerificationKind::PositivityOnly,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PanelOptions {
    pub rounds: usize,
    pub max_degree: u64,
    pub coeff_bound: i64,
    pub seed: u64,
}

impl Default for PanelOptions {
    fn default() -> Self {
        PanelOptions {
            rounds: 25,
            max_degree: 6,
            coeff_bound: 3,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateVerification {
    pub passed: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum CertifyOutcome {
    Certificate(MnCertificate),
    Inconclusive { failing_condition: String },
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&MnCertificate> {
        match self {
            CertifyOutcome::Certificate(c) => Some(c),
            CertifyOutcome::Inconclusive { .. } => None,
        }
    }
}

/// User-provided certificate skeleton: pairs plus the rule, with the level.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateHints {
    pub level: usize,
    #[serde(default)]
    pub pairs: Vec<CertPair>,
    pub rule: AutomorphismRule,
    #[serde(default)]
    pub simplicial_mode: bool,
}

fn sample_nonzero_coeff(rng: &mut ChaCha8Rng, bound: i64) -> BigInt {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return BigInt::from(c);
        }
    }
}

fn sample_unit(rng: &mut ChaCha8Rng) -> BigInt {
    if rng.gen_bool(0.5) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Random polynomial in the monomials S with the head coefficients forced to
/// units: both the head in the S-variable order (last listed heaviest) and
/// the ambient lex head.
fn sample_pair_polynomial(
    rng: &mut ChaCha8Rng,
    s: &[ExponentVector],
    rank: usize,
    opts: &PanelOptions,
) -> MonoidPolynomial {
    let k = s.len();
    let nterms = rng.gen_range(2..=4);
    let mut tuples: BTreeSet<Vec<u64>> = BTreeSet::new();
    while tuples.len() < nterms {
        let deg = rng.gen_range(0..=opts.max_degree);
        let mut t = vec![0u64; k];
        for _ in 0..deg {
            t[rng.gen_range(0..k)] += 1;
        }
        tuples.insert(t);
    }
    let tuples: Vec<Vec<u64>> = tuples.into_iter().collect();
    let ambient = |t: &Vec<u64>| -> ExponentVector {
        let mut e = ExponentVector::zero(rank);
        for (a, sv) in t.iter().zip(s) {
            e = e.add(&sv.scale(&BigInt::from(*a)));
        }
        e
    };
    // head under the S-variable order: compare tuples from the last variable
    // down
    let s_head = tuples
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| {
            for i in (0..k).rev() {
                match a[i].cmp(&b[i]) {
                    std::cmp::Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            std::cmp::Ordering::Equal
        })
        .map(|(i, _)| i)
        .unwrap();
    let ambient_exps: Vec<ExponentVector> = tuples.iter().map(ambient).collect();
    let ambient_head = ambient_exps
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .unwrap();
    let mut f = MonoidPolynomial::zero(rank);
    for (i, e) in ambient_exps.iter().enumerate() {
        let coeff = if i == s_head || i == ambient_head {
            sample_unit(rng)
        } else {
            sample_nonzero_coeff(rng, opts.coeff_bound)
        };
        f.add_term(e.clone(), coeff);
    }
    f
}

/// Random quasi-monic supported on members of M involving only the first
/// `level` variables.
fn sample_simplicial_polynomial(
    rng: &mut ChaCha8Rng,
    m: &AffineMonoid,
    level: usize,
    opts: &PanelOptions,
) -> MonoidPolynomial {
    let pool: Vec<ExponentVector> = m
        .members_up_to_degree(opts.max_degree)
        .into_iter()
        .filter(|x| (level..m.ambient_rank()).all(|i| x.coord(i).is_zero()))
        .collect();
    let nterms = rng.gen_range(1..=3.min(pool.len().max(1)));
    let mut chosen = BTreeSet::new();
    for _ in 0..nterms * 4 {
        if chosen.len() >= nterms {
            break;
        }
        chosen.insert(pool[rng.gen_range(0..pool.len())].clone());
    }
    let chosen: Vec<ExponentVector> = chosen.into_iter().collect();
    let head = chosen.len() - 1; // pool is sorted, BTreeSet keeps lex order
    let mut f = MonoidPolynomial::zero(m.ambient_rank());
    for (i, e) in chosen.iter().enumerate() {
        let coeff = if i == head {
            sample_unit(rng)
        } else {
            sample_nonzero_coeff(rng, opts.coeff_bound)
        };
        f.add_term(e.clone(), coeff);
    }
    f
}

fn apply_chain(chain: &[SubstitutionAutomorphism], f: &MonoidPolynomial) -> MonoidPolynomial {
    let mut g = f.clone();
    for eta in chain {
        g = eta.apply(&g);
    }
    g
}

/// Verify a certificate against a fresh panel. All structural conditions are
/// rechecked: pair coverage of the first-variable generators, algebraic
/// independence, the common substitution fixing x1 and restricting to R[M],
/// and head straightening on the sampled quasi-monics, then the recursion.
pub fn verify_certificate(
    m: &AffineMonoid,
    cert: &MnCertificate,
    opts: &PanelOptions,
) -> CertificateVerification {
    let mut failures = vec![];
    let mut notes = vec![];
    match m.is_positive() {
        Ok(true) => {}
        Ok(false) => failures.push("monoid is not positive".into()),
        Err(e) => failures.push(format!("positivity undecided: {e}")),
    }
    if cert.level == 0 {
        failures.push("certificate level must be at least 1".into());
    }
    if cert.level <= 1 || !failures.is_empty() {
        return CertificateVerification {
            passed: failures.is_empty(),
            failures,
            notes,
        };
    }

    let n = cert.level;
    if n > m.rank() {
        failures.push(format!("level {} exceeds monoid rank {}", n, m.rank()));
    }

    let coeff_monoid = if cert.simplicial_mode {
        match is_phi_simplicial(m, DEFAULT_TILT_BOUND) {
            Ok(PhiSimplicialVerdict::Yes { .. }) => {}
            other => failures.push(format!(
                "simplicial-mode certificate on a non-simplicial monoid: {:?}",
                other
            )),
        }
        if cones::is_normal(m).unwrap_or(false) {
            notes.push("normal simplicial monoid: coefficients checked in R[M]".into());
            m.clone()
        } else {
            polyalg::zero_graded_submonoid(m, 0)
        }
    } else {
        let g1 = gen1(m);
        if cert.pairs.is_empty() {
            failures.push("non-simplicial certificate needs pairs".into());
        }
        for u in &g1 {
            if !cert.pairs.iter().any(|p| &p.u == u) {
                failures.push(format!("generator {} with positive first exponent uncovered", u));
            }
        }
        for pair in &cert.pairs {
            if !g1.contains(&pair.u) {
                failures.push(format!("{} is not a first-variable generator", pair.u));
            }
            if pair.s.len() != n {
                failures.push(format!(
                    "pair for {} has {} monomials, expected {}",
                    pair.u,
                    pair.s.len(),
                    n
                ));
            }
            for sv in &pair.s {
                if !m.generators().contains(sv) {
                    failures.push(format!("{} is not a generator", sv));
                }
            }
            if lattice_rank(&pair.s) != pair.s.len() {
                failures.push(format!(
                    "monomials paired with {} are algebraically dependent",
                    pair.u
                ));
            }
        }
        polyalg::zero_graded_submonoid(m, 0)
    };
    if !failures.is_empty() {
        return CertificateVerification {
            passed: false,
            failures,
            notes,
        };
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut restriction_cache: HashMap<u64, bool> = HashMap::new();
    'rounds: for round in 0..opts.rounds {
        let samples: Vec<(Option<&CertPair>, MonoidPolynomial)> = if cert.simplicial_mode {
            vec![(
                None,
                sample_simplicial_polynomial(&mut rng, m, n, opts),
            )]
        } else {
            cert.pairs
                .iter()
                .map(|p| {
                    (
                        Some(p),
                        sample_pair_polynomial(&mut rng, &p.s, m.ambient_rank(), opts),
                    )
                })
                .collect()
        };
        let target: u64 = samples
            .iter()
            .filter_map(|(_, f)| f.total_degree())
            .max()
            .unwrap_or_else(BigInt::zero)
            .try_into()
            .unwrap_or(0);
        let chain = match cert.rule.build(m, target) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("round {round}: rule build failed: {e}"));
                break 'rounds;
            }
        };
        for eta in &chain {
            if eta.assigns(0) {
                failures.push(format!("round {round}: substitution moves x1"));
                break 'rounds;
            }
        }
        let restricts = *restriction_cache.entry(target).or_insert_with(|| {
            chain
                .iter()
                .all(|eta| verify_automorphism(m, eta, false).passed())
        });
        if !restricts {
            failures.push(format!(
                "round {round}: substitution does not restrict to the monoid algebra"
            ));
            break 'rounds;
        }
        for (pair, f) in &samples {
            let image = apply_chain(&chain, f);
            let u = match pair {
                Some(p) => p.u.clone(),
                None => ExponentVector::unit(m.ambient_rank(), 0),
            };
            match monic_in(&image, &u, &coeff_monoid) {
                Ok(r) if r.monic => {}
                Ok(r) => {
                    failures.push(format!(
                        "round {round}: image of {} not monic in {}: {}",
                        f,
                        u,
                        r.diagnostic.unwrap_or_default()
                    ));
                    break 'rounds;
                }
                Err(e) => {
                    failures.push(format!("round {round}: monic check failed: {e}"));
                    break 'rounds;
                }
            }
        }
    }

    // recursion on the zero graded part
    match &cert.recursion {
        None => failures.push("missing recursion certificate".into()),
        Some(rec) => {
            if rec.level != n - 1 {
                failures.push(format!(
                    "recursion level {} should be {}",
                    rec.level,
                    n - 1
                ));
            } else {
                let hat = polyalg::drop_coordinate(m, 0);
                let sub = verify_certificate(&hat, rec, opts);
                if !sub.passed {
                    failures.push(format!(
                        "recursion failed: {}",
                        sub.failures.join("; ")
                    ));
                }
            }
        }
    }

    notes.push(format!(
        "panel of {} rounds, seed {}; a panel pass is evidence against the sampled quasi-monics, not a proof over all of them",
        opts.rounds, opts.seed
    ));
    CertificateVerification {
        passed: failures.is_empty(),
        failures,
        notes,
    }
}

/// Certificate downgrade: any level-n certificate restricts to a valid
/// certificate at every lower level by truncating the independent sets and
/// the recursion chain.
pub fn downgrade_certificate(cert: &MnCertificate, level: usize) -> MnCertificate {
    assert!(level >= 1 && level <= cert.level, "invalid downgrade level");
    if level == cert.level {
        return cert.clone();
    }
    if level == 1 {
        return MnCertificate {
            level: 1,
            pairs: vec![],
            rule: AutomorphismRule::Positivity,
            simplicial_mode: cert.simplicial_mode,
            recursion: None,
            verification: VerificationKind::PositivityOnly,
        };
    }
    MnCertificate {
        level,
        pairs: cert
            .pairs
            .iter()
            .map(|p| CertPair {
                u: p.u.clone(),
                s: p.s.iter().take(level).cloned().collect(),
            })
            .collect(),
        rule: cert.rule.clone(),
        simplicial_mode: cert.simplicial_mode,
        recursion: cert
            .recursion
            .as_ref()
            .map(|r| Box::new(downgrade_certificate(r, level - 1))),
        verification: cert.verification.clone(),
    }
}

/// Attempt a certificate. With hints the hinted skeleton is verified; without
/// hints the built-in rules are tried: the free monoid at full rank, then a
/// tilted first variable on simplicial monoids. `target_level` asks for at
/// least that level.
pub fn certify_mn(
    m: &AffineMonoid,
    hints: Option<&CertificateHints>,
    target_level: Option<usize>,
    opts: &PanelOptions,
) -> Result<CertifyOutcome, ClassError> {
    match m.is_positive() {
        Ok(true) => {}
        Ok(false) => {
            return Ok(CertifyOutcome::Inconclusive {
                failing_condition: "monoid is not positive".into(),
            })
        }
        Err(e) => {
            return Ok(CertifyOutcome::Inconclusive {
                failing_condition: format!("positivity undecided: {e}"),
            })
        }
    }
    let r = m.rank();
    let want = target_level.unwrap_or(1).max(1);

    if let Some(h) = hints {
        let recursion = if h.level >= 2 {
            let hat = polyalg::drop_coordinate(m, 0);
            match certify_mn(&hat, None, Some(h.level - 1), opts)? {
                CertifyOutcome::Certificate(c) => {
                    Some(Box::new(downgrade_certificate(&c, h.level - 1)))
                }
                CertifyOutcome::Inconclusive { failing_condition } => {
                    return Ok(CertifyOutcome::Inconclusive {
                        failing_condition: format!(
                            "recursion on the zero graded part failed: {failing_condition}"
                        ),
                    })
                }
            }
        } else {
            None
        };
        let cert = MnCertificate {
            level: h.level,
            pairs: h.pairs.clone(),
            rule: h.rule.clone(),
            simplicial_mode: h.simplicial_mode,
            recursion,
            verification: if h.level == 1 {
                VerificationKind::PositivityOnly
            } else if h.rule.is_builtin() {
                VerificationKind::Structural {
                    panel_rounds: opts.rounds,
                    seed: opts.seed,
                }
            } else {
                VerificationKind::PanelCertified {
                    panel_rounds: opts.rounds,
                    seed: opts.seed,
                }
            },
        };
        let v = verify_certificate(m, &cert, opts);
        return Ok(if v.passed {
            CertifyOutcome::Certificate(cert)
        } else {
            CertifyOutcome::Inconclusive {
                failing_condition: v.failures.join("; "),
            }
        });
    }

    // built-in: the free monoid at full rank
    if is_free_monoid(m) {
        let mut cert = free_certificate(m.ambient_rank());
        cert.verification = if cert.level == 1 {
            VerificationKind::PositivityOnly
        } else {
            VerificationKind::Structural {
                panel_rounds: opts.rounds,
                seed: opts.seed,
            }
        };
        let v = verify_certificate(m, &cert, opts);
        if v.passed && cert.level >= want {
            return Ok(CertifyOutcome::Certificate(cert));
        }
    }

    // built-in: tilted first variable on a simplicial monoid
    if r >= 2 {
        let simplicial = matches!(
            is_phi_simplicial(m, DEFAULT_TILT_BOUND),
            Ok(PhiSimplicialVerdict::Yes { .. })
        );
        let tilt = tilted_variables(m, DEFAULT_TILT_BOUND);
        let tilt0 = tilt.tilted.iter().find(|t| t.index == 0).cloned();
        if simplicial {
            if let Some(tv) = tilt0 {
                let mut level = r.min(target_level.unwrap_or(r));
                while level >= 2 {
                    if let Some(cert) = tilt_certificate(m, &tv, level, opts)? {
                        let v = verify_certificate(m, &cert, opts);
                        if v.passed {
                            if cert.level >= want {
                                return Ok(CertifyOutcome::Certificate(cert));
                            }
                            break;
                        }
                    }
                    level -= 1;
                }
            }
        }
    }

    if want <= 1 {
        let simplicial = matches!(
            is_phi_simplicial(m, DEFAULT_TILT_BOUND),
            Ok(PhiSimplicialVerdict::Yes { .. })
        );
        return Ok(CertifyOutcome::Certificate(MnCertificate::positivity(
            simplicial,
        )));
    }
    Ok(CertifyOutcome::Inconclusive {
        failing_condition: format!(
            "no applicable rule reaches level {}: no hints, and the first variable is not a tilted variable of a simplicial monoid",
            want
        ),
    })
}

fn is_free_monoid(m: &AffineMonoid) -> bool {
    let r = m.ambient_rank();
    if m.generators().len() != r {
        return false;
    }
    let units: BTreeSet<ExponentVector> = (0..r).map(|i| ExponentVector::unit(r, i)).collect();
    let gens: BTreeSet<ExponentVector> = m.generators().iter().cloned().collect();
    units == gens
}

fn free_certificate(rank: usize) -> MnCertificate {
    if rank <= 1 {
        return MnCertificate::positivity(true);
    }
    MnCertificate {
        level: rank,
        pairs: vec![],
        rule: AutomorphismRule::Free { variable: 0 },
        simplicial_mode: true,
        recursion: Some(Box::new(free_certificate(rank - 1))),
        verification: VerificationKind::Structural {
            panel_rounds: 0,
            seed: 0,
        },
    }
}

fn tilt_certificate(
    m: &AffineMonoid,
    tv: &TiltedVariable,
    level: usize,
    opts: &PanelOptions,
) -> Result<Option<MnCertificate>, ClassError> {
    let hat = polyalg::drop_coordinate(m, 0);
    let recursion = if level >= 2 {
        match certify_mn(&hat, None, Some(level - 1), opts)? {
            CertifyOutcome::Certificate(c) => Box::new(downgrade_certificate(&c, level - 1)),
            CertifyOutcome::Inconclusive { .. } => return Ok(None),
        }
    } else {
        return Ok(Some(MnCertificate::positivity(true)));
    };
    Ok(Some(MnCertificate {
        level,
        pairs: vec![],
        rule: AutomorphismRule::Tilt {
            variable: 0,
            tilt_exponents: tv.exponents.clone(),
        },
        simplicial_mode: true,
        recursion: Some(recursion),
        verification: VerificationKind::Structural {
            panel_rounds: opts.rounds,
            seed: opts.seed,
        },
    }))
}

/// Lift a simplicial-mode level-n certificate of M to a level-(n+m)
/// certificate of M ⊕ ℤ₊ᵐ: the appended free variables are straightened into
/// a pure power of the level variable, then the inner rule runs.
pub fn direct_sum_lift(
    m: &AffineMonoid,
    cert: &MnCertificate,
    extra: usize,
    opts: &PanelOptions,
) -> Result<(AffineMonoid, MnCertificate), ClassError> {
    if extra == 0 {
        return Ok((m.clone(), cert.clone()));
    }
    if !cert.simplicial_mode {
        return Err(ClassError::NonSimplicialCertificate);
    }
    let powers = match is_phi_simplicial(m, DEFAULT_TILT_BOUND)? {
        PhiSimplicialVerdict::Yes { powers } => powers,
        _ => return Err(ClassError::NonSimplicialCertificate),
    };
    let r = m.ambient_rank();
    let rank = r + extra;
    let mut gens: Vec<ExponentVector> = m
        .generators()
        .iter()
        .map(|g| {
            let mut coords: Vec<BigInt> = g.coords().to_vec();
            coords.extend(std::iter::repeat(BigInt::zero()).take(extra));
            ExponentVector::new(coords)
        })
        .collect();
    for i in 0..extra {
        gens.push(ExponentVector::unit(rank, r + i));
    }
    let sum = AffineMonoid::new(rank, gens).expect("direct sum generators are valid");

    let lifted = lift_certificate(cert, r, extra, &powers);
    let v = verify_certificate(&sum, &lifted, opts);
    if !v.passed {
        return Err(ClassError::VerificationFailed(v.failures.join("; ")));
    }
    Ok((sum, lifted))
}

/// Structural lift of a simplicial certificate: every level gains `extra`,
/// the appended free variables are straightened into the level variable of
/// the inner rule.
fn lift_certificate(
    cert: &MnCertificate,
    base_rank: usize,
    extra: usize,
    powers: &[u64],
) -> MnCertificate {
    if base_rank == 0 {
        // nothing left of the base: the lifted monoid is free on the summand
        return free_certificate(extra);
    }
    let n = cert.level;
    let tilt_variable = n - 1;
    let power_multiple = powers.get(tilt_variable).copied().unwrap_or(1);
    let rule = AutomorphismRule::DirectSum {
        summands: extra,
        base_rank,
        tilt_variable,
        power_multiple,
        inner: Box::new(cert.rule.clone()),
    };
    let recursion_cert = match &cert.recursion {
        Some(rec) => lift_certificate(rec, base_rank - 1, extra, powers.get(1..).unwrap_or(&[])),
        None => {
            // level-1 base: the zero graded part needs exactly level `extra`
            let lifted = lift_certificate(
                &MnCertificate::positivity(true),
                base_rank - 1,
                extra,
                powers.get(1..).unwrap_or(&[]),
            );
            if lifted.level > extra.max(1) {
                downgrade_certificate(&lifted, extra.max(1))
            } else {
                lifted
            }
        }
    };
    let lifted_level = n + extra;
    MnCertificate {
        level: lifted_level,
        pairs: vec![],
        rule,
        simplicial_mode: true,
        recursion: if lifted_level >= 2 {
            Some(Box::new(recursion_cert))
        } else {
            None
        },
        verification: cert.verification.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rank: usize, gens: &[&[i64]]) -> AffineMonoid {
        AffineMonoid::new(
            rank,
            gens.iter().map(|g| ExponentVector::from_i64(g)).collect(),
        )
        .unwrap()
    }

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from_i64(v)
    }

    fn poly(rank: usize, terms: &[(&[i64], i64)]) -> MonoidPolynomial {
        MonoidPolynomial::from_terms(
            rank,
            terms.iter().map(|(e, c)| (ev(e), BigInt::from(*c))),
        )
    }

    fn tilted_example() -> AffineMonoid {
        // Z_+[x1, x1 x2]
        m(2, &[&[1, 0], &[1, 1]])
    }

    #[test]
    fn gen1_examples() {
        assert_eq!(gen1(&AffineMonoid::free(2)), vec![ev(&[1, 0])]);
        let ex4 = m(4, &[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[1, 0, 0, 1],
            &[0, 2, 0, 1],
            &[0, 0, 1, 1],
        ]);
        assert_eq!(gen1(&ex4), vec![ev(&[1, 0, 0, 0]), ev(&[1, 0, 0, 1])]);
    }

    #[test]
    fn phi_simplicial_examples() {
        match is_phi_simplicial(&AffineMonoid::numerical(&[2, 3]), 16).unwrap() {
            PhiSimplicialVerdict::Yes { powers } => assert_eq!(powers, vec![2]),
            other => panic!("expected yes, got {:?}", other),
        }
        // rank mismatch: a line in the plane
        assert!(is_phi_simplicial(&m(2, &[&[1, 1]]), 16).is_err());
        let ex4 = m(4, &[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[1, 0, 0, 1],
            &[0, 2, 0, 1],
            &[0, 0, 1, 1],
        ]);
        assert!(matches!(
            is_phi_simplicial(&ex4, 16).unwrap(),
            PhiSimplicialVerdict::No { variable: 3 }
        ));
    }

    #[test]
    fn tilted_variable_examples() {
        let report = tilted_variables(&tilted_example(), 10);
        assert_eq!(report.tilted.len(), 1);
        assert_eq!(report.tilted[0].index, 0);
        assert_eq!(report.tilted[0].exponents, vec![(1, 1)]);

        let free = AffineMonoid::free(3);
        let report = tilted_variables(&free, 10);
        assert_eq!(report.tilted.len(), 3);
        assert!(report.tilted.iter().all(|t| t
            .exponents
            .iter()
            .all(|&(_, c)| c == 0)));
    }

    #[test]
    fn tilt_automorphism_straightens_heads() {
        let mm = tilted_example();
        // f = x2 viewed inside R[M]: quasi-monic of degree 1
        let f = poly(2, &[(&[1, 1], 1), (&[1, 0], 2)]);
        let eta = tilt_automorphism(&mm, 0, &f).unwrap();
        let image = eta.apply(&f);
        assert!(polyalg::is_monic_in(&image, &ev(&[1, 0]), &mm));
        for g in mm.generators() {
            assert!(eta.apply_to_monomial(g).supported_on(&mm));
        }
    }

    #[test]
    fn tilt_on_free_monoid_rank_three_handles_colliding_heads() {
        // u*x3^2 + 7*x2^3 is quasi-monic; equal-power substitutions would
        // surface the 7
        let free = AffineMonoid::free(3);
        let f = poly(3, &[(&[0, 0, 2], 1), (&[0, 3, 0], 7)]);
        let eta = tilt_automorphism(&free, 0, &f).unwrap();
        let image = eta.apply(&f);
        assert!(polyalg::is_monic_in(&image, &ev(&[1, 0, 0]), &free));
    }

    #[test]
    fn apply_automorphism_binomial() {
        let eta = SubstitutionAutomorphism::new(
            2,
            0,
            vec![Assignment {
                variable: 1,
                unit: 1,
                monomial: ev(&[1, 0]),
            }],
        )
        .unwrap();
        let f = poly(2, &[(&[0, 2], 1)]);
        let image = apply_automorphism(&eta, &f);
        assert_eq!(
            image,
            poly(2, &[(&[0, 2], 1), (&[1, 1], 2), (&[2, 0], 1)])
        );
        let id = SubstitutionAutomorphism::identity(2, 0);
        assert_eq!(apply_automorphism(&id, &f), f);
    }

    #[test]
    fn malformed_substitution_rejected() {
        assert!(SubstitutionAutomorphism::new(
            2,
            0,
            vec![Assignment {
                variable: 1,
                unit: 1,
                monomial: ev(&[1, 0, 0]),
            }]
        )
        .is_err());
        // assigning the designated variable
        assert!(SubstitutionAutomorphism::new(
            2,
            1,
            vec![Assignment {
                variable: 1,
                unit: 1,
                monomial: ev(&[1, 0]),
            }]
        )
        .is_err());
    }

    #[test]
    fn free_monoid_certificate_at_full_rank() {
        let opts = PanelOptions {
            rounds: 6,
            ..Default::default()
        };
        let outcome = certify_mn(&AffineMonoid::free(3), None, None, &opts).unwrap();
        let cert = outcome.certificate().expect("free monoid certifies");
        assert_eq!(cert.level, 3);
        let v = verify_certificate(&AffineMonoid::free(3), cert, &opts);
        assert!(v.passed, "{:?}", v.failures);
    }

    #[test]
    fn tilted_monoid_certifies_level_two() {
        let opts = PanelOptions {
            rounds: 6,
            ..Default::default()
        };
        let mm = tilted_example();
        let outcome = certify_mn(&mm, None, Some(2), &opts).unwrap();
        let cert = outcome.certificate().expect("tilted monoid certifies");
        assert_eq!(cert.level, 2);
    }

    #[test]
    fn unruly_monoid_is_inconclusive_at_level_two() {
        // positive, but x1 is not tilted and no hints are given
        let mm = m(2, &[&[2, 1], &[1, 2]]);
        let opts = PanelOptions {
            rounds: 4,
            ..Default::default()
        };
        match certify_mn(&mm, None, Some(2), &opts).unwrap() {
            CertifyOutcome::Inconclusive { failing_condition } => {
                assert!(failing_condition.contains("level 2"));
            }
            CertifyOutcome::Certificate(c) => panic!("unexpected certificate {:?}", c.level),
        }
    }

    #[test]
    fn downgrade_chain_verifies() {
        let opts = PanelOptions {
            rounds: 4,
            ..Default::default()
        };
        let free = AffineMonoid::free(4);
        let cert = certify_mn(&free, None, None, &opts)
            .unwrap()
            .certificate()
            .cloned()
            .expect("certificate");
        for level in 1..=cert.level {
            let down = downgrade_certificate(&cert, level);
            assert_eq!(down.level, level);
            let v = verify_certificate(&free, &down, &opts);
            assert!(v.passed, "level {}: {:?}", level, v.failures);
        }
    }

    #[test]
    fn direct_sum_lift_of_free_rank_one() {
        let opts = PanelOptions {
            rounds: 4,
            ..Default::default()
        };
        let one = AffineMonoid::free(1);
        let cert = certify_mn(&one, None, None, &opts)
            .unwrap()
            .certificate()
            .cloned()
            .unwrap();
        assert_eq!(cert.level, 1);
        let (sum, lifted) = direct_sum_lift(&one, &cert, 1, &opts).unwrap();
        assert_eq!(sum.ambient_rank(), 2);
        assert_eq!(lifted.level, 2);
    }

    #[test]
    fn direct_sum_lift_rejects_non_simplicial() {
        let opts = PanelOptions {
            rounds: 2,
            ..Default::default()
        };
        // product-style monoid: positive but with no pure power of x3
        let mm = m(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let cert = MnCertificate::positivity(false);
        assert!(matches!(
            direct_sum_lift(&mm, &cert, 1, &opts),
            Err(ClassError::NonSimplicialCertificate)
        ));
    }

    #[test]
    fn certificate_json_round_trip() {
        let opts = PanelOptions {
            rounds: 2,
            ..Default::default()
        };
        let free = AffineMonoid::free(2);
        let cert = certify_mn(&free, None, None, &opts)
            .unwrap()
            .certificate()
            .cloned()
            .unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: MnCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
