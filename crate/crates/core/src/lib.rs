//! Exact-arithmetic toolkit for affine commutative monoids: integer lattice
//! algebra, rational cone geometry, normalization and seminormality, sparse
//! monoid-algebra elements with lex leading data, substitution-automorphism
//! class certificates, the Segre and Rees monoid constructions, and a
//! Serre-dimension bound engine with provenance-carrying reports.
//!
//! Everything is computed over arbitrary-precision integers (rationals appear
//! only transiently inside cone computations); there is no floating point in
//! this crate.

pub mod bounds;
pub mod classes;
pub mod cones;
pub mod document;
pub mod lattice;
pub mod monoid;
pub mod polyalg;
pub mod segre;

pub use bounds::{serre_bound, BoundReport, RingProfile};
pub use classes::{
    apply_automorphism, certify_mn, direct_sum_lift, downgrade_certificate, gen1,
    is_phi_simplicial, tilt_automorphism, tilted_variables, verify_automorphism,
    verify_certificate, AutomorphismRule, CertPair, CertificateHints, CertifyOutcome,
    ClassError, MnCertificate, PanelOptions, PhiSimplicialVerdict, SubstitutionAutomorphism,
};
pub use cones::{
    cone_of, face_lattice, hilbert_basis, interior_monoid, is_normal, is_seminormal,
    normalization, seminormality_gap, seminormalization, ConeError, RationalCone,
};
pub use document::{DocumentError, MonoidDocument};
pub use lattice::{
    lattice_member, lattice_rank, lex_cmp, smith_normal_form, ExponentVector, IntegerMatrix,
    LatticeMembership, SmithNormalForm,
};
pub use monoid::{
    restructure_generators, AffineMonoid, ExclusionReason, MembershipVerdict, MonoidError,
};
pub use polyalg::{
    graded_component, is_monic_in, monic_in, parse_polynomial, poly_mul, Coefficient,
    GradedPiece, MonoidPolynomial, PolyError,
};
pub use segre::{
    k_of, ps_certificate, rees_monoid, segre_certificate, segre_monoid, verify_segre_iso,
    ReesDatum, SegreDatum, SegreError, SegreIsoReport,
};
