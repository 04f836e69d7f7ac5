//! The guide in `book/src`, included chapter by chapter so that its code
//! samples run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/forests.md")]
pub mod chapter1 {}
#[doc = include_str!("../../../book/src/hedges.md")]
pub mod chapter2 {}
#[doc = include_str!("../../../book/src/rewriting.md")]
pub mod chapter3 {}
#[doc = include_str!("../../../book/src/braids.md")]
pub mod chapter4 {}
#[doc = include_str!("../../../book/src/zappa.md")]
pub mod chapter5 {}
#[doc = include_str!("../../../book/src/fractions.md")]
pub mod chapter6 {}
#[doc = include_str!("../../../book/src/subgroups.md")]
pub mod chapter7 {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod chapter8 {}
