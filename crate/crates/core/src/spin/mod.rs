//! Spin-specific local algebra: twists, tiers, products, power maps, the
//! graded window, automorphisms and the upstairs monomial oracle.

pub mod automorphism;
pub mod oracle;
pub mod power;
pub mod product;
pub mod twist;
pub mod window;
