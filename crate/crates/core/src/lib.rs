//! Non-emptiness of affine Deligne–Lusztig varieties for additive,
//! full-support affine Weyl elements, decided by certified reduction to an
//! elliptic element.
//!
//! Groups covered: `GL_n`, `SL_n`, adjoint `C_2` and `G_2`.

pub mod affine;
pub mod coxeter;
pub mod error;
pub mod geck_pfeiffer;
pub mod genset;
pub mod group;
pub mod parse;
pub mod reduction;
pub mod report;
pub mod structure;
pub mod suites;
pub mod wire;

pub use affine::{AffineElement, Cocharacter, Decomposition};
pub use coxeter::{CoxeterSystem, CoxeterType, FiniteElement, Side};
pub use error::{Error, Result};
pub use genset::GenSet;
pub use group::{Group, GroupMode, KottwitzPoint};
pub use reduction::{
    nonemptiness, reduce, verify_certificate, CaseLabel, Nonemptiness, ReductionCertificate, ReductionStep,
    VerifyFailure,
};
pub use report::{LemmaReport, Status};
pub use suites::{Suite, SweepConfig};
pub use wire::WireCertificate;
