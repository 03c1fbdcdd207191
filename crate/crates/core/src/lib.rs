//! Exact lattice computations on the K3 surface obtained as the resolved
//! double cover of the plane branched over six general lines.

pub mod lattice;
pub mod linalg;
pub mod catalog;
pub mod divisor;
pub mod fiber;
pub mod fibration;
pub mod golden;
pub mod cases;
pub mod classify;
pub mod tables;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/fibers.md")]
    mod fibers {}
    #[doc = include_str!("../../../book/src/fibrations.md")]
    mod fibrations {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
