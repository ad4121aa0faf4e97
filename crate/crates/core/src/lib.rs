//! Exact computation with idempotent systems, character systems and almost
//! orthogonal normalized matrices over `Q` and prime fields.
//!
//! The modules build on each other:
//!
//! - [`field`] and [`matrix`] give exact scalars and dense square matrices;
//! - [`solid`] covers solidity, normalization and the almost orthogonal test;
//! - [`idempotent`] builds idempotent systems and their eigendata;
//! - [`character`] holds character algebras and their decomposition;
//! - [`correspondence`] and [`census`] connect the three classes and list
//!   them over small prime fields.
//!
//! ```
//! use idemsys::field::FieldSpec;
//! use idemsys::matrix::Matrix;
//! use idemsys::character::build_psi_p;
//!
//! let q = FieldSpec::rational();
//! let p = Matrix::from_ints(q, &[[1, 3], [1, -1]]).unwrap();
//! let sys = build_psi_p(&p).unwrap();
//! assert_eq!(sys.nu().to_string(), "4");
//! ```

pub mod census;
pub mod character;
pub mod correspondence;
pub mod error;
pub mod field;
pub mod idempotent;
pub mod matrix;
pub mod poly;
pub mod solid;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/solid.md")]
    mod solid {}
    #[doc = include_str!("../../../book/src/idempotent-systems.md")]
    mod idempotent_systems {}
    #[doc = include_str!("../../../book/src/character-systems.md")]
    mod character_systems {}
    #[doc = include_str!("../../../book/src/correspondences.md")]
    mod correspondences {}
    #[doc = include_str!("../../../book/src/censuses.md")]
    mod censuses {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
