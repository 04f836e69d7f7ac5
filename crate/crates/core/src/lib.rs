//! The braided Thompson groups `B̂V ⊃ BV` and their permutation shadows
//! `V̂ ⊃ V`, built from forests, braids and groups of fractions.

pub mod braid;
pub mod forest;
pub mod hedge;
pub mod rewrite;
pub mod fraction;
pub mod random;
pub mod zappa;
pub mod subgroup;
pub mod json;
