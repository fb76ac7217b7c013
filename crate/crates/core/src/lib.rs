//! Exact local algebra of twisted r-spin curves over a prime field, and
//! enumeration of boundary strata of the moduli space.

pub mod error;
pub mod field;
pub mod linalg;
pub mod maps;
pub mod module;
pub mod moduli;
pub mod resolution;
pub mod ring;
pub mod spin;
pub mod suites;

pub use error::{Error, Result};
pub use field::{FieldConfig, PrimeField};
pub use maps::{Certificate, GeneratorMap, Source, SourceGen};
pub use module::{ModuleElement, ModulePresentation};
pub use moduli::{Chi, DualGraph, TwistAssignment};
pub use ring::{LaurentPoly, LocalVar, NodeRing, RingElement, TMode};
pub use spin::automorphism::{automorphisms, AutomorphismGroup};
pub use spin::oracle::{oracle_product, OracleModel, UpstairsElement};
pub use spin::power::{compatibility_check, power_map, sym_power_map};
pub use spin::product::{dual_pairing, product_map};
pub use spin::twist::{index_from_twist, marking_twist, tier_twists, TierIndex, TwistData};
pub use spin::window::AlgebraWindow;
