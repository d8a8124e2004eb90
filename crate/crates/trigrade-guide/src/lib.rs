//! Runs every code block in the book as a doctest, one module per
//! chapter so a failure names its chapter. mdbook itself cannot test
//! snippets that use dependencies; routing the markdown through rustdoc
//! keeps the book and the library in lockstep.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}

#[doc = include_str!("../../../book/src/algebra.md")]
pub mod algebra {}

#[doc = include_str!("../../../book/src/forms.md")]
pub mod forms {}

#[doc = include_str!("../../../book/src/lorentz.md")]
pub mod lorentz {}

#[doc = include_str!("../../../book/src/su3.md")]
pub mod su3 {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
