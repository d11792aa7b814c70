pub mod numtower;
pub mod poly;
pub mod mat3;
pub mod grp;
pub mod coords;
pub mod components;
pub mod sl2;
pub mod constructors;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/numbers.md")]
    mod numbers {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/coordinates.md")]
    mod coordinates {}
    #[doc = include_str!("../../../book/src/components.md")]
    mod components {}
    #[doc = include_str!("../../../book/src/constructing.md")]
    mod constructing {}
    #[doc = include_str!("../../../book/src/symmetries.md")]
    mod symmetries {}
    #[doc = include_str!("../../../book/src/slice.md")]
    mod slice {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
