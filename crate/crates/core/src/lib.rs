//! Finite Coxeter groups as signed permutations of their positive roots.
//! Measures how far an element is from a length-additive product of two
//! involutions, and builds zero-excess conjugates with certificates.
//!
//! ```
//! use coxinv_core::{excess, Group};
//!
//! let g = Group::from_symbol("A3").unwrap();
//! let w = g.parse_element("1 2 3").unwrap();
//! assert_eq!(excess::excess(&g, &w).unwrap(), 2);
//! ```

pub mod conjugacy;
pub mod error;
pub mod excess;
pub mod generators;
pub mod group;
pub mod involution;
pub mod matrix;
pub mod parabolic;
pub mod type_a;
pub mod verify;
pub mod witness;

pub use conjugacy::{class_representatives, conjugacy_class, ClassReport, ConjugacyClass};
pub use error::{Error, Result};
pub use excess::{ExcessDistribution, ReverserScope, ReverserSet, SpartanPair, SpartanReport};
pub use generators::{GeneratorSet, Word};
pub use group::{Element, Group, InversionSet, Root, SignedRoot, DEFAULT_ELEMENT_CAP, DEFAULT_ROOT_CAP};
pub use involution::{enumerate_involutions, richardson_normal_form, InvolutionTable, RichardsonForm};
pub use matrix::CoxeterMatrix;
pub use parabolic::ParabolicDescriptor;
pub use type_a::{Permutation, TypeA};
pub use witness::{zero_excess_witness, CertificateReport, MinimizeMode, WitnessCertificate};
