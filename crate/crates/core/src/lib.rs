//! Exact localized equivariant Hirzebruch classes of torus-invariant
//! singularity germs.

pub mod algebra;
pub mod basis;
pub mod hirz;
pub mod lattice;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/classes.md")]
    mod classes {}
    #[doc = include_str!("../../../book/src/localization.md")]
    mod localization {}
    #[doc = include_str!("../../../book/src/charts.md")]
    mod charts {}
    #[doc = include_str!("../../../book/src/cones.md")]
    mod cones {}
    #[doc = include_str!("../../../book/src/toric.md")]
    mod toric {}
    #[doc = include_str!("../../../book/src/s-variables.md")]
    mod s_variables {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
