//! Sparse elements of a monoid algebra R[M] with the ℤ₊ʳ multigrading:
//! arithmetic, lex leading data, quasi-monic and monic-in-a-monomial tests,
//! and the graded decomposition along a chosen variable.
//!
//! The monomial order is fixed crate-wide by [`crate::lattice::lex_cmp`]:
//! exponent vectors compare from the highest variable index down, so the last
//! variable is the heaviest. The leading term H(f) is the lex-greatest
//! monomial and L(f) is its coefficient.

use crate::lattice::ExponentVector;
use crate::monoid::AffineMonoid;
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("ambient rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Exact coefficient domain with a decidable unit predicate. The shipped
/// instantiation is ℤ with units ±1.
pub trait Coefficient: Clone + Eq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        num_traits::One::is_one(&self.abs())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Finite sum of coefficient·monomial pairs; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MonoidPolynomial<C = BigInt> {
    ambient_rank: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> MonoidPolynomial<C> {
    pub fn zero(ambient_rank: usize) -> Self {
        MonoidPolynomial {
            ambient_rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient_rank: usize) -> Self {
        Self::monomial(ExponentVector::zero(ambient_rank), C::one())
    }

    pub fn monomial(exponent: ExponentVector, coefficient: C) -> Self {
        let mut terms = BTreeMap::new();
        let rank = exponent.len();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        MonoidPolynomial {
            ambient_rank: rank,
            terms,
        }
    }

    pub fn variable(ambient_rank: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(ambient_rank, i), C::one())
    }

    pub fn from_terms(
        ambient_rank: usize,
        terms: impl IntoIterator<Item = (ExponentVector, C)>,
    ) -> Self {
        let mut f = Self::zero(ambient_rank);
        for (e, c) in terms {
            f.add_term(e, c);
        }
        f
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: ExponentVector, coefficient: C) {
        assert_eq!(exponent.len(), self.ambient_rank, "term rank mismatch");
        if coefficient.is_zero() {
            return;
        }
        match self.terms.remove(&exponent) {
            None => {
                self.terms.insert(exponent, coefficient);
            }
            Some(old) => {
                let s = old.add(&coefficient);
                if !s.is_zero() {
                    self.terms.insert(exponent, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MonoidPolynomial {
            ambient_rank: self.ambient_rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        let mut out = Self::zero(self.ambient_rank);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ambient_rank);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// H(f) and L(f): the lex-greatest monomial and its coefficient.
    pub fn leading_data(&self) -> Result<(&ExponentVector, &C), PolyError> {
        self.terms
            .iter()
            .next_back()
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn is_quasi_monic(&self) -> Result<bool, PolyError> {
        let (_, l) = self.leading_data()?;
        Ok(l.is_unit())
    }

    pub fn total_degree(&self) -> Option<BigInt> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    /// Every exponent a member of the monoid (complete for nonnegative or
    /// pointed monoids).
    pub fn supported_on(&self, m: &AffineMonoid) -> bool {
        self.terms.keys().all(|e| m.is_member_default(e))
    }
}

/// Checked product with the rank-mismatch error surfaced.
pub fn poly_mul<C: Coefficient>(
    f: &MonoidPolynomial<C>,
    g: &MonoidPolynomial<C>,
) -> Result<MonoidPolynomial<C>, PolyError> {
    if f.ambient_rank() != g.ambient_rank() {
        return Err(PolyError::RankMismatch(f.ambient_rank(), g.ambient_rank()));
    }
    Ok(f.mul(g))
}

#[derive(Clone, Debug)]
pub struct MonicInReport {
    pub monic: bool,
    /// Power of `u` carrying the unit head when monic.
    pub top_power: Option<u64>,
    pub diagnostic: Option<String>,
}

/// Rewrite `f` as a univariate polynomial in the monomial `u`: each term is
/// split as k·u + remainder with k maximal such that the remainder lies in
/// `coeff_monoid`. The result is monic in `u` iff the top group is a single
/// unit-coefficient term with zero remainder and all lower groups have
/// remainders in `coeff_monoid`.
pub fn monic_in<C: Coefficient>(
    f: &MonoidPolynomial<C>,
    u: &ExponentVector,
    coeff_monoid: &AffineMonoid,
) -> Result<MonicInReport, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if u.len() != f.ambient_rank() || coeff_monoid.ambient_rank() != f.ambient_rank() {
        return Err(PolyError::RankMismatch(u.len(), f.ambient_rank()));
    }
    assert!(!u.is_zero(), "monic test against the zero monomial");

    let mut groups: BTreeMap<u64, Vec<(ExponentVector, C)>> = BTreeMap::new();
    for (e, c) in f.terms() {
        let k_hi = max_extractable_power(e, u);
        let mut found = None;
        for k in (0..=k_hi).rev() {
            let rem = e.sub(&u.scale(&BigInt::from(k)));
            if coeff_monoid.is_member_default(&rem) {
                found = Some((k, rem));
                break;
            }
        }
        match found {
            Some((k, rem)) => groups.entry(k).or_default().push((rem, c.clone())),
            None => {
                return Ok(MonicInReport {
                    monic: false,
                    top_power: None,
                    diagnostic: Some(format!(
                        "term {} is not a power of {} times a coefficient-monoid member",
                        e, u
                    )),
                })
            }
        }
    }
    let (&top, head) = groups.iter().next_back().expect("nonzero polynomial");
    if head.len() != 1 {
        return Ok(MonicInReport {
            monic: false,
            top_power: Some(top),
            diagnostic: Some(format!("top power {} has {} terms", top, head.len())),
        });
    }
    let (rem, coeff) = &head[0];
    if !rem.is_zero() {
        return Ok(MonicInReport {
            monic: false,
            top_power: Some(top),
            diagnostic: Some(format!("top coefficient {} is not constant", rem)),
        });
    }
    if !coeff.is_unit() {
        return Ok(MonicInReport {
            monic: false,
            top_power: Some(top),
            diagnostic: Some("top coefficient is not a unit".to_string()),
        });
    }
    Ok(MonicInReport {
        monic: true,
        top_power: Some(top),
        diagnostic: None,
    })
}

pub fn is_monic_in<C: Coefficient>(
    f: &MonoidPolynomial<C>,
    u: &ExponentVector,
    coeff_monoid: &AffineMonoid,
) -> bool {
    matches!(monic_in(f, u, coeff_monoid), Ok(r) if r.monic)
}

fn max_extractable_power(e: &ExponentVector, u: &ExponentVector) -> u64 {
    use num_integer::Integer;
    let mut k: Option<BigInt> = None;
    for i in 0..u.len() {
        if u.coord(i).is_positive() {
            let q = e.coord(i).div_floor(u.coord(i));
            k = Some(match k {
                None => q,
                Some(k) => k.min(q),
            });
        }
    }
    match k {
        Some(k) if k.is_positive() => k.try_into().unwrap_or(0),
        _ => 0,
    }
}

/// The degree-i piece of the grading of M along variable j (0-based):
/// members whose j-th exponent is exactly i, listed up to the degree bound.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub variable: usize,
    pub degree: u64,
    pub members: Vec<ExponentVector>,
    /// Generator description of M₀ʲ, attempted only for degree 0.
    pub zero_part: Option<ZeroPartGenerators>,
}

#[derive(Clone, Debug)]
pub struct ZeroPartGenerators {
    pub generators: Vec<ExponentVector>,
    /// True when the zero-coordinate generators regenerated every enumerated
    /// member without needing completion by enumerated irreducibles.
    pub complete_at_bound: bool,
}

pub fn graded_component(
    m: &AffineMonoid,
    variable: usize,
    degree: u64,
    degree_bound: u64,
) -> Result<GradedPiece, PolyError> {
    if variable >= m.ambient_rank() {
        return Err(PolyError::RankMismatch(variable, m.ambient_rank()));
    }
    assert!(
        m.all_generators_nonnegative(),
        "graded components require nonnegative generators"
    );
    let deg = BigInt::from(degree);
    let members: Vec<ExponentVector> = m
        .members_up_to_degree(degree_bound)
        .into_iter()
        .filter(|x| x.coord(variable) == &deg)
        .collect();
    let zero_part = if degree == 0 {
        Some(zero_part_generators(m, variable, &members))
    } else {
        None
    };
    Ok(GradedPiece {
        variable,
        degree,
        members,
        zero_part,
    })
}

fn zero_part_generators(
    m: &AffineMonoid,
    variable: usize,
    members: &[ExponentVector],
) -> ZeroPartGenerators {
    let candidates: Vec<ExponentVector> = m
        .generators()
        .iter()
        .filter(|g| g.coord(variable).is_zero())
        .cloned()
        .collect();
    let check = |gens: &[ExponentVector]| -> bool {
        if gens.is_empty() {
            return members.iter().all(|x| x.is_zero());
        }
        let sub = AffineMonoid::new(m.ambient_rank(), gens.to_vec())
            .expect("zero-part generators are valid");
        members.iter().all(|x| sub.is_member_default(x))
    };
    if check(&candidates) {
        return ZeroPartGenerators {
            generators: candidates,
            complete_at_bound: true,
        };
    }
    // complete with irreducible enumerated members of the zero part
    let member_set: std::collections::BTreeSet<&ExponentVector> = members.iter().collect();
    let mut completed = candidates.clone();
    for x in members.iter().filter(|x| !x.is_zero()) {
        let reducible = members.iter().any(|y| {
            !y.is_zero() && y != x && {
                let z = x.sub(y);
                !z.is_zero() && member_set.contains(&z)
            }
        });
        if !reducible && !completed.contains(x) {
            completed.push(x.clone());
        }
    }
    ZeroPartGenerators {
        generators: completed,
        complete_at_bound: false,
    }
}

/// The submonoid M₀ʲ of members with zero j-th exponent, kept in the ambient
/// rank (generated by the generators with zero j-th coordinate; exact for
/// nonnegative generators since the coordinate functional cuts out a face).
pub fn zero_graded_submonoid(m: &AffineMonoid, variable: usize) -> AffineMonoid {
    let gens: Vec<ExponentVector> = m
        .generators()
        .iter()
        .filter(|g| g.coord(variable).is_zero())
        .cloned()
        .collect();
    AffineMonoid::new(m.ambient_rank(), gens).expect("zero-part generators are valid")
}

/// M₀ʲ re-embedded in rank r−1 by dropping the j-th coordinate.
pub fn drop_coordinate(m: &AffineMonoid, variable: usize) -> AffineMonoid {
    let gens: Vec<ExponentVector> = m
        .generators()
        .iter()
        .filter(|g| g.coord(variable).is_zero())
        .map(|g| {
            let coords: Vec<BigInt> = (0..g.len())
                .filter(|&i| i != variable)
                .map(|i| g.coord(i).clone())
                .collect();
            ExponentVector::new(coords)
        })
        .collect();
    AffineMonoid::new(m.ambient_rank() - 1, gens).expect("dropped generators are valid")
}

impl<C: Coefficient + fmt::Display> fmt::Display for MonoidPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{}", c)?;
                continue;
            }
            write!(f, "{}", c)?;
            for i in 0..e.len() {
                let p = e.coord(i);
                if num_traits::Zero::is_zero(p) {
                    continue;
                }
                if num_traits::One::is_one(p) {
                    write!(f, "*x{}", i + 1)?;
                } else {
                    write!(f, "*x{}^{}", i + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for MonoidPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse the textual polynomial format, e.g. `3*x1^2*x2 + -1*x4`.
pub fn parse_polynomial(input: &str, ambient_rank: usize) -> Result<MonoidPolynomial, PolyError> {
    let mut f = MonoidPolynomial::zero(ambient_rank);
    let cleaned = input.trim();
    if cleaned.is_empty() || cleaned == "0" {
        return Ok(f);
    }
    // split on '+' at top level; a leading '-' binds to the coefficient
    for raw_term in cleaned.split('+') {
        let term = raw_term.trim();
        if term.is_empty() {
            return Err(PolyError::Parse("empty term".into()));
        }
        let (exp, coeff) = parse_term(term, ambient_rank)?;
        f.add_term(exp, coeff);
    }
    Ok(f)
}

fn parse_term(term: &str, rank: usize) -> Result<(ExponentVector, BigInt), PolyError> {
    let mut coeff = BigInt::from(1);
    let mut exp = vec![BigInt::from(0); rank];
    let mut saw_coeff = false;
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(PolyError::Parse(format!("empty factor in '{}'", term)));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (var_s, pow_s) = match rest.split_once('^') {
                Some((v, p)) => (v, Some(p)),
                None => (rest, None),
            };
            let var: usize = var_s
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad variable '{}'", factor)))?;
            if var == 0 || var > rank {
                return Err(PolyError::Parse(format!(
                    "variable x{} out of range 1..{}",
                    var, rank
                )));
            }
            let pow: i64 = match pow_s {
                Some(p) => p
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad exponent '{}'", factor)))?,
                None => 1,
            };
            exp[var - 1] += pow;
        } else {
            let c: BigInt = factor
                .parse()
                .map_err(|_| PolyError::Parse(format!("bad coefficient '{}'", factor)))?;
            if saw_coeff {
                coeff *= c;
            } else {
                coeff = c;
                saw_coeff = true;
            }
        }
    }
    Ok((ExponentVector::new(exp), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from_i64(v)
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn poly(rank: usize, terms: &[(&[i64], i64)]) -> MonoidPolynomial {
        MonoidPolynomial::from_terms(rank, terms.iter().map(|(e, c)| (ev(e), int(*c))))
    }

    #[test]
    fn mul_identity_and_square() {
        let one = MonoidPolynomial::<BigInt>::one(2);
        let g = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(one.mul(&g), g);
        let sq = g.mul(&g);
        assert_eq!(sq, poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
    }

    #[test]
    fn leading_data_examples() {
        // x2 beats x1 under the stated order
        let f = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let (h, l) = f.leading_data().unwrap();
        assert_eq!(h, &ev(&[0, 1]));
        assert_eq!(l, &int(1));

        let g = poly(2, &[(&[2, 1], 3), (&[1, 2], 1)]);
        let (h, l) = g.leading_data().unwrap();
        assert_eq!(h, &ev(&[1, 2]));
        assert_eq!(l, &int(1));

        let c = poly(2, &[(&[0, 0], 5)]);
        let (h, l) = c.leading_data().unwrap();
        assert!(h.is_zero());
        assert_eq!(l, &int(5));
    }

    #[test]
    fn quasi_monic_examples() {
        assert!(!poly(2, &[(&[1, 0], 1), (&[0, 2], 2)]).is_quasi_monic().unwrap());
        assert!(poly(2, &[(&[1, 0], 2), (&[0, 2], 1)]).is_quasi_monic().unwrap());
        assert!(poly(1, &[(&[3], -1), (&[0], 7)]).is_quasi_monic().unwrap());
        assert!(matches!(
            MonoidPolynomial::<BigInt>::zero(1).is_quasi_monic(),
            Err(PolyError::ZeroPolynomial)
        ));
    }

    #[test]
    fn leading_data_multiplicative() {
        let f = poly(3, &[(&[1, 2, 0], 2), (&[0, 0, 1], 5)]);
        let g = poly(3, &[(&[2, 0, 1], 3), (&[1, 1, 0], 1)]);
        let p = f.mul(&g);
        let (hf, lf) = f.leading_data().unwrap();
        let (hg, lg) = g.leading_data().unwrap();
        let (hp, lp) = p.leading_data().unwrap();
        assert_eq!(hp, &hf.add(hg));
        assert_eq!(lp, &lf.mul(lg));
    }

    #[test]
    fn monic_in_examples() {
        let coeff = AffineMonoid::new(2, vec![ev(&[0, 1])]).unwrap();
        // x1^2 + x2 is monic in x1 with coefficients in Z_+[x2]
        let f = poly(2, &[(&[2, 0], 1), (&[0, 1], 1)]);
        assert!(is_monic_in(&f, &ev(&[1, 0]), &coeff));
        // x2*x1^2 + 1 has non-unit head
        let g = poly(2, &[(&[2, 1], 1), (&[0, 0], 1)]);
        assert!(!is_monic_in(&g, &ev(&[1, 0]), &coeff));
    }

    #[test]
    fn monic_in_composite_monomial() {
        // f = (x1 x2)^3 + x2: monic in u = x1 x2 with coefficients in Z_+[x2]
        let coeff = AffineMonoid::new(2, vec![ev(&[0, 1])]).unwrap();
        let f = poly(2, &[(&[3, 3], 1), (&[0, 1], 1)]);
        let rep = monic_in(&f, &ev(&[1, 1]), &coeff).unwrap();
        assert!(rep.monic);
        assert_eq!(rep.top_power, Some(3));
    }

    #[test]
    fn graded_component_free_monoid() {
        let m = AffineMonoid::free(2);
        let piece = graded_component(&m, 0, 0, 6).unwrap();
        let zp = piece.zero_part.unwrap();
        assert_eq!(zp.generators, vec![ev(&[0, 1])]);
        assert!(zp.complete_at_bound);
        for x in &piece.members {
            assert!(x.coord(0).is_zero());
        }
    }

    #[test]
    fn graded_partition_covers_members() {
        let m = AffineMonoid::new(2, vec![ev(&[1, 0]), ev(&[1, 1])]).unwrap();
        let members = m.members_up_to_degree(6);
        let mut covered = 0usize;
        for i in 0..=6u64 {
            let piece = graded_component(&m, 0, i, 6).unwrap();
            for x in &piece.members {
                assert!(members.contains(x));
                covered += 1;
            }
        }
        assert_eq!(covered, members.len());
    }

    #[test]
    fn parse_round_trip() {
        let f = poly(4, &[(&[2, 1, 0, 0], 3), (&[0, 0, 0, 1], -1)]);
        let s = f.to_string();
        assert_eq!(s, "-1*x4 + 3*x1^2*x2");
        let parsed = parse_polynomial(&s, 4).unwrap();
        assert_eq!(parsed, f);
        assert_eq!(parse_polynomial("0", 3).unwrap(), MonoidPolynomial::zero(3));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_polynomial("x9", 2).is_err());
        assert!(parse_polynomial("3**x1", 2).is_err());
    }
}
