//! Runs every code sample in the guide (`book/`) as a doctest.
//!
//! mdbook cannot execute snippets against the workspace crates, so each
//! chapter is included here as module documentation and `cargo test --doc`
//! does the work. One module per chapter, so a failing snippet names its
//! chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/coefficient-rings.md")]
pub mod coefficient_rings {}

#[doc = include_str!("../../../book/src/group-ring.md")]
pub mod group_ring {}

#[doc = include_str!("../../../book/src/twisted-derivations.md")]
pub mod twisted_derivations {}

#[doc = include_str!("../../../book/src/innerness.md")]
pub mod innerness {}

#[doc = include_str!("../../../book/src/circulant-system.md")]
pub mod circulant_system {}

#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
