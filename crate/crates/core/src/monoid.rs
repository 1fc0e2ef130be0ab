//! The core [`AffineMonoid`] object: finitely many integer exponent vectors
//! generating a submonoid of ℤʳ. Submonoids of ℤʳ are automatically
//! commutative, cancellative and torsion-free, so those axioms are carried by
//! the representation itself.

use crate::cones::{cone_of_vectors, RationalCone};
use crate::lattice::{lattice_member, lattice_rank, row_basis, ExponentVector, LatticeMembership};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, VecDeque};
use thiserror::Error;

/// Default cap on the total coefficient sum explored by the bounded
/// membership search for non-pointed monoids.
pub const DEFAULT_MEMBERSHIP_BOUND: u64 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("generator {0} is the zero vector")]
    ZeroGenerator(usize),
    #[error("generators {0} and {1} are equal")]
    DuplicateGenerator(usize, usize),
    #[error("expected vectors of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("units undecided: membership of {0} was inconclusive")]
    UnknownUnits(String),
}

/// A finitely generated submonoid of ℤʳ, kept as its ambient rank and the
/// generator list. Generators may be redundant; minimality is never assumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineMonoid {
    ambient_rank: usize,
    generators: Vec<ExponentVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ExclusionReason {
    /// Query lies outside the rational cone spanned by the generators.
    ConeExclusion,
    /// Query lies outside the group generated by the generators.
    LatticeExclusion,
    /// A complete search ran out of decompositions.
    ExhaustedSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MembershipVerdict {
    /// Nonnegative coefficients on the generator list reproducing the query.
    Member {
        #[serde(serialize_with = "serialize_bigints")]
        witness: Vec<BigInt>,
    },
    NonMember { reason: ExclusionReason },
    Unknown { search_bound: u64 },
}

fn serialize_bigints<S: serde::Serializer>(
    v: &[BigInt],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = serializer.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(x) {
            Ok(n) => seq.serialize_element(&n)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipVerdict::Member { .. })
    }
}

impl AffineMonoid {
    pub fn new(ambient_rank: usize, generators: Vec<ExponentVector>) -> Result<Self, MonoidError> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != ambient_rank {
                return Err(MonoidError::DimensionMismatch {
                    expected: ambient_rank,
                    found: g.len(),
                });
            }
            if g.is_zero() {
                return Err(MonoidError::ZeroGenerator(i));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if generators[i] == generators[j] {
                    return Err(MonoidError::DuplicateGenerator(i, j));
                }
            }
        }
        Ok(AffineMonoid {
            ambient_rank,
            generators,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// The free monoid ℤ₊ʳ on the standard basis.
    pub fn free(rank: usize) -> Self {
        AffineMonoid {
            ambient_rank: rank,
            generators: (0..rank).map(|i| ExponentVector::unit(rank, i)).collect(),
            name: Some(format!("free_{rank}")),
        }
    }

    /// A numerical semigroup ℤ₊[a₁,…,aₖ] in ambient rank one.
    pub fn numerical(gens: &[u64]) -> Self {
        AffineMonoid::new(
            1,
            gens.iter()
                .map(|&a| ExponentVector::from_i64(&[a as i64]))
                .collect(),
        )
        .expect("valid numerical semigroup generators")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn all_generators_nonnegative(&self) -> bool {
        self.generators.iter().all(|g| g.is_nonnegative())
    }

    /// Rank of gp(M), the group generated by the generators.
    pub fn rank(&self) -> usize {
        lattice_rank(&self.generators)
    }

    pub fn cone(&self) -> RationalCone {
        cone_of_vectors(self.ambient_rank, &self.generators)
    }

    pub fn membership_default(
        &self,
        v: &ExponentVector,
    ) -> Result<MembershipVerdict, MonoidError> {
        self.membership(v, DEFAULT_MEMBERSHIP_BOUND)
    }

    pub fn is_member_default(&self, v: &ExponentVector) -> bool {
        matches!(
            self.membership_default(v),
            Ok(MembershipVerdict::Member { .. })
        )
    }

    /// Decide v ∈ M. The search is complete (never `Unknown`) whenever the
    /// generators are componentwise nonnegative or the cone is pointed; only
    /// non-positive monoids fall back to the coefficient-sum bound.
    pub fn membership(
        &self,
        v: &ExponentVector,
        bound: u64,
    ) -> Result<MembershipVerdict, MonoidError> {
        if v.len() != self.ambient_rank {
            return Err(MonoidError::DimensionMismatch {
                expected: self.ambient_rank,
                found: v.len(),
            });
        }
        if v.is_zero() {
            return Ok(MembershipVerdict::Member {
                witness: vec![BigInt::zero(); self.generators.len()],
            });
        }
        if self.generators.is_empty() {
            return Ok(MembershipVerdict::NonMember {
                reason: ExclusionReason::LatticeExclusion,
            });
        }
        if let LatticeMembership::NotMember = lattice_member(v, &self.generators) {
            return Ok(MembershipVerdict::NonMember {
                reason: ExclusionReason::LatticeExclusion,
            });
        }
        if self.all_generators_nonnegative() {
            if !v.is_nonnegative() {
                return Ok(MembershipVerdict::NonMember {
                    reason: ExclusionReason::ConeExclusion,
                });
            }
            return Ok(match self.complete_search(v, |x| x.is_nonnegative()) {
                Some(witness) => MembershipVerdict::Member { witness },
                None => MembershipVerdict::NonMember {
                    reason: ExclusionReason::ExhaustedSearch,
                },
            });
        }
        let cone = self.cone();
        if !cone.contains(v) {
            return Ok(MembershipVerdict::NonMember {
                reason: ExclusionReason::ConeExclusion,
            });
        }
        if cone.is_pointed() {
            // every subtraction lowers the strictly positive functional, so
            // the pruned search is complete
            return Ok(match self.complete_search(v, |x| cone.contains(x)) {
                Some(witness) => MembershipVerdict::Member { witness },
                None => MembershipVerdict::NonMember {
                    reason: ExclusionReason::ExhaustedSearch,
                },
            });
        }
        Ok(self.bounded_search(v, bound))
    }

    /// Depth-first search with memoized dead ends over states v minus partial
    /// sums, restricted to states accepted by `keep`.
    fn complete_search(
        &self,
        v: &ExponentVector,
        keep: impl Fn(&ExponentVector) -> bool,
    ) -> Option<Vec<BigInt>> {
        // try higher-degree generators first; members usually resolve greedily
        let mut order: Vec<usize> = (0..self.generators.len()).collect();
        order.sort_by(|&a, &b| {
            self.generators[b]
                .total_degree()
                .cmp(&self.generators[a].total_degree())
        });

        // explicit stack: (state, next order-position to try)
        let mut choice: HashMap<ExponentVector, usize> = HashMap::new();
        let mut dead: BTreeSet<ExponentVector> = BTreeSet::new();
        let mut stack: Vec<(ExponentVector, usize)> = vec![(v.clone(), 0)];
        while let Some((x, pos)) = stack.pop() {
            if x.is_zero() {
                // success: unwind is implicit, the choice map already records
                // a working generator for every vector along the path
                break;
            }
            let mut advanced = false;
            for p in pos..order.len() {
                let g = &self.generators[order[p]];
                let y = x.sub(g);
                if !keep(&y) || dead.contains(&y) {
                    continue;
                }
                choice.insert(x.clone(), order[p]);
                stack.push((x.clone(), p + 1));
                stack.push((y, 0));
                advanced = true;
                break;
            }
            if !advanced {
                choice.remove(&x);
                dead.insert(x);
            }
        }

        // reconstruct the witness by walking the recorded choices
        let mut witness = vec![BigInt::zero(); self.generators.len()];
        let mut cur = v.clone();
        while !cur.is_zero() {
            let &gi = choice.get(&cur)?;
            witness[gi] += 1;
            cur = cur.sub(&self.generators[gi]);
        }
        Some(witness)
    }

    /// Breadth-first search over total coefficient sums up to `bound`; used
    /// only when the cone is not pointed, where no complete strategy exists
    /// here.
    fn bounded_search(&self, v: &ExponentVector, bound: u64) -> MembershipVerdict {
        let mut seen: BTreeSet<ExponentVector> = BTreeSet::new();
        let mut frontier: Vec<(ExponentVector, Vec<BigInt>)> =
            vec![(v.clone(), vec![BigInt::zero(); self.generators.len()])];
        seen.insert(v.clone());
        for _ in 0..bound {
            let mut next = vec![];
            for (x, w) in frontier {
                for (i, g) in self.generators.iter().enumerate() {
                    let y = x.sub(g);
                    if y.is_zero() {
                        let mut w = w.clone();
                        w[i] += 1;
                        return MembershipVerdict::Member { witness: w };
                    }
                    if seen.insert(y.clone()) {
                        let mut w = w.clone();
                        w[i] += 1;
                        next.push((y, w));
                    }
                }
            }
            if next.is_empty() {
                return MembershipVerdict::NonMember {
                    reason: ExclusionReason::ExhaustedSearch,
                };
            }
            frontier = next;
        }
        MembershipVerdict::Unknown {
            search_bound: bound,
        }
    }

    /// A basis of the unit group U(M) = M ∩ (−M). A generator sum can only be
    /// a unit if every summand is, so testing −g ∈ M over the generators is
    /// both sound and complete.
    pub fn units(&self) -> Result<Vec<ExponentVector>, MonoidError> {
        let mut unit_gens = vec![];
        for g in &self.generators {
            match self.membership_default(&g.neg())? {
                MembershipVerdict::Member { .. } => unit_gens.push(g.clone()),
                MembershipVerdict::NonMember { .. } => {}
                MembershipVerdict::Unknown { .. } => {
                    return Err(MonoidError::UnknownUnits(g.to_string()))
                }
            }
        }
        Ok(row_basis(&unit_gens))
    }

    pub fn is_positive(&self) -> Result<bool, MonoidError> {
        Ok(self.units()?.is_empty())
    }

    /// All members with total degree at most `bound`. Requires nonnegative
    /// generators, where the enumeration is complete.
    pub fn members_up_to_degree(&self, bound: u64) -> BTreeSet<ExponentVector> {
        assert!(
            self.all_generators_nonnegative(),
            "degree enumeration requires nonnegative generators"
        );
        let bound = BigInt::from(bound);
        let mut set = BTreeSet::new();
        let zero = ExponentVector::zero(self.ambient_rank);
        set.insert(zero.clone());
        let mut queue = VecDeque::new();
        queue.push_back(zero);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.add(g);
                if y.total_degree() > bound {
                    continue;
                }
                if set.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        set
    }
}

/// Generator restructuring: the unit pairs W_i, W_i⁻¹ spanning U(M) together
/// with the positive remainder V, so that M = U(M)·V and U(V) is trivial.
#[derive(Clone, Debug)]
pub struct Restructured {
    pub unit_pairs: Vec<(ExponentVector, ExponentVector)>,
    pub positive_part: AffineMonoid,
}

pub fn restructure_generators(m: &AffineMonoid) -> Result<Restructured, MonoidError> {
    let unit_basis = m.units()?;
    let positive_gens: Vec<ExponentVector> = m
        .generators()
        .iter()
        .filter(|g| !matches!(lattice_member(g, &unit_basis), LatticeMembership::Member(_)))
        .cloned()
        .collect();
    let positive_part = AffineMonoid::new(m.ambient_rank(), positive_gens)?;
    // regeneration check: every original generator is a nonnegative
    // combination of the returned pairs and positive generators
    for g in m.generators() {
        let in_units = matches!(lattice_member(g, &unit_basis), LatticeMembership::Member(_));
        let in_positive = positive_part.generators().contains(g);
        assert!(in_units || in_positive, "generator lost in restructuring");
    }
    Ok(Restructured {
        unit_pairs: unit_basis.iter().map(|b| (b.clone(), b.neg())).collect(),
        positive_part,
    })
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

    #[test]
    fn invariants_rejected() {
        assert!(matches!(
            AffineMonoid::new(2, vec![ev(&[0, 0])]),
            Err(MonoidError::ZeroGenerator(0))
        ));
        assert!(matches!(
            AffineMonoid::new(2, vec![ev(&[1, 0]), ev(&[1, 0])]),
            Err(MonoidError::DuplicateGenerator(0, 1))
        ));
    }

    #[test]
    fn numerical_semigroup_membership() {
        let s = AffineMonoid::numerical(&[2, 3]);
        match s.membership_default(&ev(&[7])).unwrap() {
            MembershipVerdict::Member { witness } => {
                let total: BigInt = witness[0].clone() * 2 + witness[1].clone() * 3;
                assert_eq!(total, BigInt::from(7));
            }
            other => panic!("expected member, got {:?}", other),
        }
        assert!(matches!(
            s.membership_default(&ev(&[1])).unwrap(),
            MembershipVerdict::NonMember { .. }
        ));
    }

    #[test]
    fn lattice_exclusion() {
        let s = m(2, &[&[1, 1], &[1, -1]]);
        assert_eq!(
            s.membership_default(&ev(&[1, 0])).unwrap(),
            MembershipVerdict::NonMember {
                reason: ExclusionReason::LatticeExclusion
            }
        );
    }

    #[test]
    fn pointed_search_is_complete_with_negative_entries() {
        let s = m(2, &[&[1, 1], &[1, -1]]);
        assert!(s.is_member_default(&ev(&[2, 0])));
        // (3,1) = (1,1) + (1,1) + (1,-1)
        assert!(s.is_member_default(&ev(&[3, 1])));
        // in the cone and lattice but not the monoid: (1,1)+(1,-1) multiples
        // only reach even coordinate sums with first coordinate >= |second|
        assert!(matches!(
            s.membership_default(&ev(&[0, 2])).unwrap(),
            MembershipVerdict::NonMember { .. }
        ));
    }

    #[test]
    fn generator_membership_and_closure() {
        let s = m(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 2, 1], &[0, 0, 1]]);
        for g in s.generators() {
            assert!(s.is_member_default(g));
        }
        let sum = s.generators()[0].add(&s.generators()[3]);
        assert!(s.is_member_default(&sum));
    }

    #[test]
    fn units_examples() {
        assert!(AffineMonoid::free(2).units().unwrap().is_empty());
        let u = m(2, &[&[1, 0], &[-1, 0], &[0, 1]]).units().unwrap();
        assert_eq!(u, vec![ev(&[1, 0])]);
        let u2 = m(2, &[&[1, 1], &[-1, -1], &[1, 0]]).units().unwrap();
        assert_eq!(u2, vec![ev(&[1, 1])]);
    }

    #[test]
    fn positivity() {
        assert!(AffineMonoid::free(3).is_positive().unwrap());
        assert!(!m(2, &[&[1, 0], &[-1, 0]]).is_positive().unwrap());
    }

    #[test]
    fn restructure_splits_units() {
        let s = m(2, &[&[1, 0], &[-1, 0], &[1, 1]]);
        let r = restructure_generators(&s).unwrap();
        assert_eq!(r.unit_pairs, vec![(ev(&[1, 0]), ev(&[-1, 0]))]);
        assert_eq!(r.positive_part.generators(), &[ev(&[1, 1])]);
        assert!(r.positive_part.is_positive().unwrap());
        for (a, b) in &r.unit_pairs {
            assert!(a.add(b).is_zero());
        }
    }

    #[test]
    fn restructure_full_group() {
        let s = m(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let r = restructure_generators(&s).unwrap();
        assert_eq!(r.unit_pairs.len(), 2);
        assert!(r.positive_part.generators().is_empty());
    }

    #[test]
    fn gp_of_positive_part_misses_units() {
        let s = m(2, &[&[1, 0], &[-1, 0], &[1, 1]]);
        let r = restructure_generators(&s).unwrap();
        let unit_basis = s.units().unwrap();
        // gp(positive_part) ∩ U(M) = {0}: the only unit combination of (1,1)
        // multiples is zero
        for g in r.positive_part.generators() {
            assert!(!matches!(
                lattice_member(g, &unit_basis),
                LatticeMembership::Member(_)
            ));
        }
    }

    #[test]
    fn verdicts_invariant_under_coordinate_permutation() {
        let s = m(2, &[&[2, 1], &[1, 3]]);
        let swapped = m(2, &[&[1, 2], &[3, 1]]);
        let v = ev(&[3, 4]);
        let vs = ev(&[4, 3]);
        assert_eq!(
            s.membership_default(&v).unwrap().is_member(),
            swapped.membership_default(&vs).unwrap().is_member()
        );
        assert_eq!(s.rank(), swapped.rank());
    }

    #[test]
    fn degree_enumeration_matches_membership() {
        let s = AffineMonoid::numerical(&[2, 3]);
        let members = s.members_up_to_degree(10);
        for d in 0..=10i64 {
            let v = ev(&[d]);
            assert_eq!(members.contains(&v), s.is_member_default(&v), "degree {d}");
        }
    }
}
