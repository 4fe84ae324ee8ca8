//! Exact-arithmetic construction, verification, solving and classification
//! of (transposed) Poisson brackets on null-filiform associative algebras.
//!
//! Everything is computed over arbitrary-precision rationals: there are no
//! floating-point numbers and no tolerances anywhere. The crate provides
//!
//! * structure-constant tensors with exact bilinear evaluation, basis
//!   changes and nilpotency/solvability series ([`tensor`]),
//! * decision procedures for the commutativity, associativity, Lie,
//!   Leibniz and transposed-Leibniz identities ([`identities`]),
//! * the null-filiform algebra and its automorphism group ([`nullfiliform`]),
//! * the parameterized bracket family together with an independent
//!   constraint solver re-deriving it ([`tp`]),
//! * the isomorphism action on parameters, basis-change reductions,
//!   canonical forms and isomorphism tests ([`classify`]),
//! * a JSON document layer backing the `tpnf` command-line tool ([`doc`]).

pub mod classify;
pub mod doc;
pub mod error;
pub mod identities;
pub mod linalg;
pub mod nullfiliform;
pub mod scalar;
pub mod tensor;
pub mod tp;

pub use error::Error;
pub use scalar::Scalar;
