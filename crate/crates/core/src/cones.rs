//! Rational cone geometry over exact arithmetic: double description
//! (extreme rays and support hyperplanes), Hilbert bases, normalization,
//! the face lattice, seminormalization and interior monoids.
//!
//! All cone data is stored as primitive integer vectors. Rational numbers
//! appear only transiently while changing lattice coordinates.

use crate::lattice::{
    kernel_basis, rational_rank, row_basis, ExponentVector, IntegerMatrix, LatticeMembership,
    LatticeSolver,
};
use crate::monoid::AffineMonoid;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("cone is not pointed; restructure the monoid and use its positive part")]
    NotPointed,
    #[error("cone does not span the ambient space")]
    NotFullDimensional,
    #[error("lattice point enumeration exceeds the built-in size cap ({0} points)")]
    EnumerationTooLarge(u128),
    #[error("membership search was inconclusive: {0}")]
    InconclusiveMembership(String),
}

/// Cone spanned by a monoid's generators, described from both sides:
/// `rays` generate it together with `lineality`; a point of the ambient
/// space lies in the cone iff it vanishes on every `equations` entry and
/// pairs nonnegatively with every `facets` entry.
#[derive(Clone, Debug, Serialize)]
pub struct RationalCone {
    pub ambient_rank: usize,
    pub rays: Vec<ExponentVector>,
    pub facets: Vec<ExponentVector>,
    pub equations: Vec<ExponentVector>,
    pub lineality: Vec<ExponentVector>,
}

impl RationalCone {
    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.equations.iter().all(|e| e.dot(v).is_zero())
            && self.facets.iter().all(|f| !f.dot(v).is_negative())
    }

    /// Topological-interior membership; meaningful when the cone is
    /// full-dimensional (no equations).
    pub fn contains_strict(&self, v: &ExponentVector) -> bool {
        self.equations.iter().all(|e| e.dot(v).is_zero())
            && self.facets.iter().all(|f| f.dot(v).is_positive())
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    /// An integer functional strictly positive on the cone minus the origin
    /// (valid for pointed cones): the sum of the facet normals.
    pub fn positive_functional(&self) -> ExponentVector {
        let mut s = ExponentVector::zero(self.ambient_rank);
        for f in &self.facets {
            s = s.add(f);
        }
        s
    }

    /// Indices of facets tight at `v`. Only meaningful for `v` in the cone.
    pub fn tight_facets(&self, v: &ExponentVector) -> BTreeSet<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.dot(v).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Structural self-check: primitive pairwise non-proportional rays and
    /// nonnegative ray/facet pairings.
    pub fn validate(&self) -> Result<(), String> {
        for r in &self.rays {
            if r != &r.primitive() {
                return Err(format!("ray {} not primitive", r));
            }
        }
        for (i, a) in self.rays.iter().enumerate() {
            for b in self.rays.iter().skip(i + 1) {
                if a == b || a == &b.neg() || &a.primitive() == &b.primitive() {
                    return Err(format!("proportional rays {} and {}", a, b));
                }
            }
        }
        for r in &self.rays {
            for f in &self.facets {
                if f.dot(r).is_negative() {
                    return Err(format!("ray {} violates facet {}", r, f));
                }
            }
            for e in &self.equations {
                if !e.dot(r).is_zero() {
                    return Err(format!("ray {} violates equation {}", r, e));
                }
            }
        }
        Ok(())
    }
}

struct DdState {
    lineality: Vec<ExponentVector>,
    rays: Vec<ExponentVector>,
    processed: Vec<ExponentVector>,
}

impl DdState {
    fn new(rank: usize) -> Self {
        DdState {
            lineality: (0..rank).map(|i| ExponentVector::unit(rank, i)).collect(),
            rays: vec![],
            processed: vec![],
        }
    }

    fn insert(&mut self, a: &ExponentVector) {
        if let Some(pos) = self.lineality.iter().position(|l| !l.dot(a).is_zero()) {
            let mut pivot = self.lineality.remove(pos);
            if pivot.dot(a).is_negative() {
                pivot = pivot.neg();
            }
            let pa = pivot.dot(a);
            self.lineality = self
                .lineality
                .iter()
                .map(|l| {
                    let c = l.dot(a);
                    l.scale(&pa).sub(&pivot.scale(&c)).primitive().sign_normalized()
                })
                .collect();
            self.rays = self
                .rays
                .iter()
                .filter_map(|r| {
                    let c = r.dot(a);
                    let r2 = r.scale(&pa).sub(&pivot.scale(&c)).primitive();
                    if r2.is_zero() {
                        None
                    } else {
                        Some(r2)
                    }
                })
                .collect();
            self.rays.push(pivot);
            self.processed.push(a.clone());
            self.dedup_and_prune();
            return;
        }

        // lineality already inside the hyperplane: classic ray combination step
        let vals: Vec<BigInt> = self.rays.iter().map(|r| r.dot(a)).collect();
        let full_before = rational_rank(&self.processed);
        let mut new_rays: Vec<ExponentVector> = vec![];
        for (r, v) in self.rays.iter().zip(&vals) {
            if !v.is_negative() {
                new_rays.push(r.clone());
            }
        }
        for (i, p) in self.rays.iter().enumerate() {
            if !vals[i].is_positive() {
                continue;
            }
            for (j, n) in self.rays.iter().enumerate() {
                if !vals[j].is_negative() {
                    continue;
                }
                if !self.adjacent(p, n, full_before) {
                    continue;
                }
                let w = n.scale(&vals[i]).sub(&p.scale(&vals[j])).primitive();
                if !w.is_zero() {
                    new_rays.push(w);
                }
            }
        }
        self.rays = new_rays;
        self.processed.push(a.clone());
        self.dedup_and_prune();
    }

    fn adjacent(&self, p: &ExponentVector, n: &ExponentVector, full: usize) -> bool {
        if full < 2 {
            return true;
        }
        let tight: Vec<ExponentVector> = self
            .processed
            .iter()
            .filter(|b| b.dot(p).is_zero() && b.dot(n).is_zero())
            .cloned()
            .collect();
        rational_rank(&tight) == full - 2
    }

    fn dedup_and_prune(&mut self) {
        let full = rational_rank(&self.processed);
        let mut seen = BTreeSet::new();
        let mut kept = vec![];
        for r in &self.rays {
            if !seen.insert(r.clone()) {
                continue;
            }
            let tight: Vec<ExponentVector> = self
                .processed
                .iter()
                .filter(|b| b.dot(r).is_zero())
                .cloned()
                .collect();
            if rational_rank(&tight) + 1 == full {
                kept.push(r.clone());
            }
        }
        self.rays = kept;
    }
}

/// Minimal generator description of { x : <a, x> >= 0 for all inequalities }:
/// a lineality basis plus the extreme rays.
pub fn dual_description(
    rank: usize,
    inequalities: &[ExponentVector],
) -> (Vec<ExponentVector>, Vec<ExponentVector>) {
    let mut state = DdState::new(rank);
    let mut seen = BTreeSet::new();
    for a in inequalities {
        let a = a.primitive();
        if a.is_zero() || !seen.insert(a.clone()) {
            continue;
        }
        state.insert(&a);
    }
    let mut lineality = state.lineality;
    let mut rays = state.rays;
    lineality.sort();
    rays.sort();
    (lineality, rays)
}

/// Both descriptions of the cone spanned by the given vectors.
pub fn cone_of_vectors(rank: usize, generators: &[ExponentVector]) -> RationalCone {
    let ineqs: Vec<ExponentVector> = generators.to_vec();
    let (equations, facets) = dual_description(rank, &ineqs);
    let mut primal: Vec<ExponentVector> = facets.clone();
    for e in &equations {
        primal.push(e.clone());
        primal.push(e.neg());
    }
    let (lineality, rays) = dual_description(rank, &primal);
    RationalCone {
        ambient_rank: rank,
        rays,
        facets,
        equations,
        lineality,
    }
}

/// The rational cone ℝ₊M spanned by a monoid's generators.
pub fn cone_of(m: &AffineMonoid) -> RationalCone {
    cone_of_vectors(m.ambient_rank(), m.generators())
}

/// Hilbert basis of the saturation gp(M) ∩ ℝ₊M of a positive affine monoid.
pub fn hilbert_basis(m: &AffineMonoid) -> Result<Vec<ExponentVector>, ConeError> {
    if m.generators().is_empty() {
        return Ok(vec![]);
    }
    let cone = cone_of(m);
    if !cone.is_pointed() {
        return Err(ConeError::NotPointed);
    }
    let basis = row_basis(m.generators());
    let k = basis.len();
    let solver = LatticeSolver::new(&basis);
    // generator coordinates in the lattice basis are integral by construction
    let gens_k: Vec<ExponentVector> = m
        .generators()
        .iter()
        .map(|g| match solver.solve(g) {
            LatticeMembership::Member(c) => ExponentVector::new(c),
            LatticeMembership::NotMember => unreachable!("generator outside its own lattice"),
        })
        .collect();
    let cone_k = cone_of_vectors(k, &gens_k);
    debug_assert!(cone_k.is_pointed() && cone_k.equations.is_empty());

    // ray coordinates in the lattice basis (primitive rational multiples)
    let rays_k: Vec<ExponentVector> = cone_k.rays.clone();

    // bounding box of the zonotope spanned by the extreme rays; every
    // irreducible element of the saturation lies inside it
    let mut lo = vec![BigInt::zero(); k];
    let mut hi = vec![BigInt::zero(); k];
    for r in &rays_k {
        for j in 0..k {
            if r.coord(j).is_negative() {
                lo[j] += r.coord(j);
            } else {
                hi[j] += r.coord(j);
            }
        }
    }
    let mut size: u128 = 1;
    for j in 0..k {
        let width = (&hi[j] - &lo[j] + BigInt::one())
            .try_into()
            .map_err(|_| ConeError::EnumerationTooLarge(u128::MAX))?;
        size = size.saturating_mul(width);
        if size > 50_000_000 {
            return Err(ConeError::EnumerationTooLarge(size));
        }
    }

    let mut candidates: Vec<ExponentVector> = vec![];
    let mut cursor = lo.clone();
    'outer: loop {
        let point = ExponentVector::new(cursor.clone());
        if !point.is_zero() && cone_k.contains(&point) {
            candidates.push(point);
        }
        for j in 0..k {
            cursor[j] += 1;
            if cursor[j] <= hi[j] {
                continue 'outer;
            }
            cursor[j] = lo[j].clone();
        }
        break;
    }

    let gamma = cone_k.positive_functional();
    candidates.sort_by(|a, b| gamma.dot(a).cmp(&gamma.dot(b)).then_with(|| a.cmp(b)));
    let mut irreducibles: Vec<ExponentVector> = vec![];
    for x in &candidates {
        let reducible = irreducibles.iter().any(|g| {
            let z = x.sub(g);
            !z.is_zero() && cone_k.contains(&z)
        });
        if !reducible {
            irreducibles.push(x.clone());
        }
    }

    let mut out: Vec<ExponentVector> = irreducibles
        .iter()
        .map(|h| {
            let mut s = ExponentVector::zero(m.ambient_rank());
            for (c, b) in h.coords().iter().zip(&basis) {
                s = s.add(&b.scale(c));
            }
            s
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Normalization n(M) = gp(M) ∩ ℝ₊M, returned by its Hilbert basis.
pub fn normalization(m: &AffineMonoid) -> Result<AffineMonoid, ConeError> {
    let hb = hilbert_basis(m)?;
    if hb.is_empty() {
        return Ok(AffineMonoid::new(m.ambient_rank(), vec![]).expect("trivial monoid"));
    }
    Ok(AffineMonoid::new(m.ambient_rank(), hb).expect("hilbert basis forms a valid monoid"))
}

/// A positive monoid is normal iff its saturation adds nothing, i.e. every
/// Hilbert basis element of n(M) already belongs to M.
pub fn is_normal(m: &AffineMonoid) -> Result<bool, ConeError> {
    use crate::monoid::MembershipVerdict;
    let hb = hilbert_basis(m)?;
    for h in &hb {
        match m.membership_default(h) {
            Ok(MembershipVerdict::Member { .. }) => {}
            Ok(MembershipVerdict::NonMember { .. }) => return Ok(false),
            Ok(MembershipVerdict::Unknown { .. }) => {
                return Err(ConeError::InconclusiveMembership(format!(
                    "saturation element {} undecided",
                    h
                )))
            }
            Err(e) => return Err(ConeError::InconclusiveMembership(e.to_string())),
        }
    }
    Ok(true)
}

/// One face of a pointed cone, keyed by the facets vanishing on it.
#[derive(Clone, Debug)]
pub struct Face {
    pub tight_facets: BTreeSet<usize>,
    pub ray_indices: Vec<usize>,
    pub generator_indices: Vec<usize>,
}

/// The full face lattice of cone_of(M) together with, for every face, the
/// sublattice generated by the monoid generators lying on that face.
pub struct FaceLattice {
    pub cone: RationalCone,
    pub faces: Vec<Face>,
    by_tight: BTreeMap<BTreeSet<usize>, usize>,
    face_lattices: Vec<LatticeSolver>,
}

pub fn face_lattice(m: &AffineMonoid) -> Result<FaceLattice, ConeError> {
    let cone = cone_of(m);
    if !cone.is_pointed() {
        return Err(ConeError::NotPointed);
    }
    let ray_tight: Vec<BTreeSet<usize>> = cone.rays.iter().map(|r| cone.tight_facets(r)).collect();
    let all_rays: BTreeSet<usize> = (0..cone.rays.len()).collect();
    let mut subsets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::new();
    subsets.insert(all_rays.clone());
    queue.push_back(all_rays);
    while let Some(s) = queue.pop_front() {
        for f in 0..cone.facets.len() {
            let cut: BTreeSet<usize> = s
                .iter()
                .copied()
                .filter(|&r| ray_tight[r].contains(&f))
                .collect();
            if subsets.insert(cut.clone()) {
                queue.push_back(cut);
            }
        }
    }
    if cone.facets.is_empty() {
        // zero cone: single face {0}
        subsets.insert(BTreeSet::new());
    }

    let mut faces = vec![];
    let mut by_tight = BTreeMap::new();
    let mut face_lattices = vec![];
    for rays in subsets {
        // canonical key: facets tight on every ray of the face
        let tight: BTreeSet<usize> = (0..cone.facets.len())
            .filter(|f| rays.iter().all(|&r| ray_tight[r].contains(f)))
            .collect();
        if by_tight.contains_key(&tight) {
            continue;
        }
        let gen_idx: Vec<usize> = m
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| tight.iter().all(|&f| cone.facets[f].dot(g).is_zero()))
            .map(|(i, _)| i)
            .collect();
        let gen_vectors: Vec<ExponentVector> =
            gen_idx.iter().map(|&i| m.generators()[i].clone()).collect();
        let lattice = LatticeSolver::new(&row_basis(&gen_vectors));
        by_tight.insert(tight.clone(), faces.len());
        faces.push(Face {
            tight_facets: tight,
            ray_indices: rays.into_iter().collect(),
            generator_indices: gen_idx,
        });
        face_lattices.push(lattice);
    }
    Ok(FaceLattice {
        cone,
        faces,
        by_tight,
        face_lattices,
    })
}

impl FaceLattice {
    /// Membership in the seminormalization: x lies in sn(M) iff it belongs to
    /// gp(M ∩ F) for the unique face F whose relative interior contains x.
    pub fn seminormal_contains(&self, x: &ExponentVector) -> bool {
        if x.is_zero() {
            return true;
        }
        if !self.cone.contains(x) {
            return false;
        }
        let tight = self.cone.tight_facets(x);
        match self.by_tight.get(&tight) {
            Some(&idx) => self.face_lattices[idx].contains(x),
            None => unreachable!("tight set of a cone point is a face key"),
        }
    }
}

fn weight_vector(rank: usize, seeds: &[ExponentVector], cone: &RationalCone) -> ExponentVector {
    if seeds.iter().all(|g| g.is_nonnegative()) {
        ExponentVector::new(vec![BigInt::one(); rank])
    } else {
        cone.positive_functional()
    }
}

/// All sums of the given vectors with weight at most `bound`.
fn enumerate_sums(
    rank: usize,
    gens: &[ExponentVector],
    weight: &ExponentVector,
    bound: &BigInt,
) -> BTreeSet<ExponentVector> {
    let mut set = BTreeSet::new();
    let zero = ExponentVector::zero(rank);
    set.insert(zero.clone());
    let mut queue = VecDeque::new();
    queue.push_back(zero);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.add(g);
            if weight.dot(&y) > *bound {
                continue;
            }
            if set.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    set
}

fn scaled_bound(
    degree_bound: u64,
    weight: &ExponentVector,
    step_gens: &[ExponentVector],
    cover: &[ExponentVector],
) -> BigInt {
    let min_step = step_gens
        .iter()
        .map(|g| weight.dot(g))
        .filter(|w| w.is_positive())
        .min()
        .unwrap_or_else(BigInt::one);
    let mut bound = BigInt::from(degree_bound) * min_step;
    for g in cover {
        let w = weight.dot(g);
        if w > bound {
            bound = w;
        }
    }
    bound
}

/// Smallest element of the seminormalization that is missing from M, if any
/// exists within the search horizon.
pub fn seminormality_gap(
    m: &AffineMonoid,
    degree_bound: u64,
) -> Result<Option<ExponentVector>, ConeError> {
    if m.generators().is_empty() {
        return Ok(None);
    }
    let hb = hilbert_basis(m)?;
    let fl = face_lattice(m)?;
    let weight = weight_vector(m.ambient_rank(), &hb, &fl.cone);
    let bound = scaled_bound(degree_bound, &weight, &hb, m.generators());
    let saturation = enumerate_sums(m.ambient_rank(), &hb, &weight, &bound);
    let members = enumerate_sums(m.ambient_rank(), m.generators(), &weight, &bound);
    let mut gaps: Vec<&ExponentVector> = saturation
        .iter()
        .filter(|x| !members.contains(*x) && fl.seminormal_contains(x))
        .collect();
    gaps.sort_by(|a, b| weight.dot(a).cmp(&weight.dot(b)).then_with(|| a.cmp(b)));
    Ok(gaps.first().map(|x| (*x).clone()))
}

/// True iff the seminormalization adds no element within the search horizon.
pub fn is_seminormal(m: &AffineMonoid, degree_bound: u64) -> Result<bool, ConeError> {
    Ok(seminormality_gap(m, degree_bound)?.is_none())
}

/// Seminormalization sn(M): the union over faces F of relint(F) ∩ gp(M ∩ F),
/// plus 0, reduced to the irreducible elements found within the search
/// horizon.
pub fn seminormalization(
    m: &AffineMonoid,
    degree_bound: u64,
) -> Result<AffineMonoid, ConeError> {
    if m.generators().is_empty() {
        return Ok(m.clone());
    }
    let hb = hilbert_basis(m)?;
    let fl = face_lattice(m)?;
    let weight = weight_vector(m.ambient_rank(), &hb, &fl.cone);
    let bound = scaled_bound(degree_bound, &weight, &hb, m.generators());
    let saturation = enumerate_sums(m.ambient_rank(), &hb, &weight, &bound);
    let sn_set: BTreeSet<ExponentVector> = saturation
        .into_iter()
        .filter(|x| fl.seminormal_contains(x))
        .collect();
    let mut ordered: Vec<&ExponentVector> = sn_set.iter().filter(|x| !x.is_zero()).collect();
    ordered.sort_by(|a, b| weight.dot(a).cmp(&weight.dot(b)).then_with(|| a.cmp(b)));
    let mut irreducibles: Vec<ExponentVector> = vec![];
    for x in ordered {
        let reducible = irreducibles.iter().any(|g| {
            let z = x.sub(g);
            !z.is_zero() && sn_set.contains(&z)
        });
        if !reducible {
            irreducibles.push(x.clone());
        }
    }
    Ok(AffineMonoid::new(m.ambient_rank(), irreducibles)
        .expect("seminormalization generators are valid"))
}

/// The interior monoid M* = (int ℝ₊M ∩ M) ∪ {0}, listed by its irreducible
/// elements up to the degree bound. M* need not be finitely generated, so the
/// bound is part of the answer.
#[derive(Clone, Debug)]
pub struct InteriorMonoid {
    pub monoid: AffineMonoid,
    pub degree_bound: u64,
}

pub fn interior_monoid(
    m: &AffineMonoid,
    degree_bound: u64,
) -> Result<InteriorMonoid, ConeError> {
    let cone = cone_of(m);
    if !cone.is_pointed() {
        return Err(ConeError::NotPointed);
    }
    if !cone.equations.is_empty() || cone.dim() < m.ambient_rank() {
        return Err(ConeError::NotFullDimensional);
    }
    let weight = weight_vector(m.ambient_rank(), m.generators(), &cone);
    let bound = scaled_bound(degree_bound, &weight, m.generators(), m.generators());
    let members = enumerate_sums(m.ambient_rank(), m.generators(), &weight, &bound);
    let interior: BTreeSet<ExponentVector> = members
        .into_iter()
        .filter(|x| cone.contains_strict(x))
        .collect();
    let mut ordered: Vec<&ExponentVector> = interior.iter().collect();
    ordered.sort_by(|a, b| weight.dot(a).cmp(&weight.dot(b)).then_with(|| a.cmp(b)));
    let mut irreducibles: Vec<ExponentVector> = vec![];
    for x in ordered {
        let reducible = irreducibles.iter().any(|g| {
            let z = x.sub(g);
            !z.is_zero() && interior.contains(&z)
        });
        if !reducible {
            irreducibles.push(x.clone());
        }
    }
    Ok(InteriorMonoid {
        monoid: AffineMonoid::new(m.ambient_rank(), irreducibles)
            .expect("interior generators are valid"),
        degree_bound,
    })
}

/// Members of the monoid generated by `gens` with weight at most the scaled
/// bound; shared enumeration entry point for callers outside this module.
pub fn bounded_members(
    rank: usize,
    gens: &[ExponentVector],
    degree_bound: u64,
) -> BTreeSet<ExponentVector> {
    if gens.is_empty() {
        let mut s = BTreeSet::new();
        s.insert(ExponentVector::zero(rank));
        return s;
    }
    let weight = if gens.iter().all(|g| g.is_nonnegative()) {
        ExponentVector::new(vec![BigInt::one(); rank])
    } else {
        cone_of_vectors(rank, gens).positive_functional()
    };
    let bound = scaled_bound(degree_bound, &weight, gens, gens);
    enumerate_sums(rank, gens, &weight, &bound)
}

/// Kernel of the matrix whose rows are the given vectors; the orthogonal
/// complement of their span.
pub fn orthogonal_complement(rank: usize, vs: &[ExponentVector]) -> Vec<ExponentVector> {
    if vs.is_empty() {
        return (0..rank).map(|i| ExponentVector::unit(rank, i)).collect();
    }
    kernel_basis(&IntegerMatrix::from_rows(vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::AffineMonoid;

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
    fn cone_of_quadrant() {
        let c = cone_of(&m(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(c.rays, vec![ev(&[1, 0]), ev(&[0, 1])]);
        assert_eq!(c.facets, vec![ev(&[1, 0]), ev(&[0, 1])]);
        assert!(c.equations.is_empty() && c.lineality.is_empty());
        c.validate().unwrap();
    }

    #[test]
    fn cone_extreme_rays_drop_interior_generator() {
        let c = cone_of(&m(2, &[&[2, 1], &[1, 2], &[1, 1]]));
        assert_eq!(c.rays, vec![ev(&[1, 2]), ev(&[2, 1])]);
        c.validate().unwrap();

        let c2 = cone_of(&m(2, &[&[1, 0], &[1, 1], &[1, 2]]));
        assert_eq!(c2.rays, vec![ev(&[1, 0]), ev(&[1, 2])]);
        c2.validate().unwrap();
    }

    #[test]
    fn cone_halfplane_has_lineality() {
        let c = cone_of(&m(2, &[&[1, 1], &[-1, -1], &[1, 0]]));
        assert!(!c.is_pointed());
        assert_eq!(c.facets, vec![ev(&[1, -1])]);
        assert!(c.contains(&ev(&[5, -1])));
        assert!(!c.contains(&ev(&[-1, 0])));
    }

    #[test]
    fn cone_of_ray_in_plane_has_equation() {
        let c = cone_of(&m(2, &[&[1, 1]]));
        assert_eq!(c.rays, vec![ev(&[1, 1])]);
        assert_eq!(c.equations.len(), 1);
        assert!(c.contains(&ev(&[3, 3])));
        assert!(!c.contains(&ev(&[1, 2])));
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn hilbert_basis_numerical_semigroup() {
        // saturation of <2,3> in Z is all of Z_+, generated by 1
        let hb = hilbert_basis(&m(1, &[&[2], &[3]])).unwrap();
        assert_eq!(hb, vec![ev(&[1])]);
    }

    #[test]
    fn hilbert_basis_even_lattice() {
        // gp(M) = { (a,b) : a+b even }; the three generators are already the
        // Hilbert basis of the saturation
        let hb = hilbert_basis(&m(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(hb, vec![ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
    }

    #[test]
    fn normalization_is_idempotent_and_contains_m() {
        let mm = m(2, &[&[2, 0], &[3, 0], &[0, 1], &[1, 1]]);
        let n1 = normalization(&mm).unwrap();
        let n2 = normalization(&n1).unwrap();
        let a: BTreeSet<_> = n1.generators().iter().cloned().collect();
        let b: BTreeSet<_> = n2.generators().iter().cloned().collect();
        assert_eq!(a, b);
        for g in mm.generators() {
            assert!(n1.is_member_default(g));
        }
    }

    #[test]
    fn is_normal_examples() {
        assert!(!is_normal(&m(1, &[&[2], &[3]])).unwrap());
        assert!(is_normal(&m(2, &[&[1, 0], &[0, 1]])).unwrap());
    }

    #[test]
    fn not_pointed_is_rejected() {
        let err = hilbert_basis(&m(1, &[&[1], &[-1]])).unwrap_err();
        assert_eq!(err, ConeError::NotPointed);
    }

    #[test]
    fn seminormalization_of_numerical_semigroup() {
        // 1 has double and triple in <2,3>, so sn = Z_+
        let sn = seminormalization(&m(1, &[&[2], &[3]]), 50).unwrap();
        assert_eq!(sn.generators(), &[ev(&[1])]);
        assert_eq!(
            seminormality_gap(&m(1, &[&[2], &[3]]), 50).unwrap(),
            Some(ev(&[1]))
        );
    }

    #[test]
    fn seminormalization_adds_axis_point() {
        let mm = m(2, &[&[2, 0], &[3, 0], &[0, 1], &[1, 1]]);
        let sn = seminormalization(&mm, 40).unwrap();
        let gens: BTreeSet<_> = sn.generators().iter().cloned().collect();
        assert!(gens.contains(&ev(&[1, 0])));
        // here the seminormalization is all of Z_+^2
        assert_eq!(gens, BTreeSet::from([ev(&[1, 0]), ev(&[0, 1])]));
    }

    #[test]
    fn normal_implies_seminormal_fixture() {
        let free = m(2, &[&[1, 0], &[0, 1]]);
        assert!(is_seminormal(&free, 40).unwrap());
        let sn = seminormalization(&free, 40).unwrap();
        let gens: BTreeSet<_> = sn.generators().iter().cloned().collect();
        assert_eq!(gens, BTreeSet::from([ev(&[1, 0]), ev(&[0, 1])]));
    }

    #[test]
    fn interior_monoid_quadrant_low_bound() {
        let im = interior_monoid(&m(2, &[&[1, 0], &[0, 1]]), 3).unwrap();
        let gens: BTreeSet<_> = im.monoid.generators().iter().cloned().collect();
        assert_eq!(
            gens,
            BTreeSet::from([ev(&[1, 1]), ev(&[2, 1]), ev(&[1, 2])])
        );
    }

    #[test]
    fn interior_monoid_rank_one() {
        let im = interior_monoid(&m(1, &[&[1]]), 10).unwrap();
        assert_eq!(im.monoid.generators(), &[ev(&[1])]);
    }

    #[test]
    fn interior_monoid_requires_full_dimension() {
        let err = interior_monoid(&m(2, &[&[1, 1]]), 10).unwrap_err();
        assert_eq!(err, ConeError::NotFullDimensional);
    }

    #[test]
    fn interior_members_satisfy_strict_inequalities() {
        let mm = m(2, &[&[1, 0], &[1, 2]]);
        let cone = cone_of(&mm);
        let im = interior_monoid(&mm, 12).unwrap();
        let members = bounded_members(2, im.monoid.generators(), 8);
        let mut checked = 0;
        for x in members.iter().filter(|x| !x.is_zero()).take(100) {
            assert!(cone.contains_strict(x));
            checked += 1;
        }
        assert!(checked >= 20);
    }

    #[test]
    fn face_lattice_of_quadrant() {
        let fl = face_lattice(&m(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(fl.faces.len(), 4); // cone, two rays, origin
    }
}
