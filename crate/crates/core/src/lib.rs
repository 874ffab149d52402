//! Multi-index B-series in exact rational arithmetic.
//!
//! A multi-index `z^β = Π_k z_k^{β(k)}` records how many nodes of each arity
//! a rooted tree has. Characters on populated multi-indices describe scalar
//! B-series `B(a, h, f, y) = a(z^0) y + Σ_β h^{|β|} a(β)/S(β) F_f[β](y)`, and
//! the two convolution laws on characters describe composition and
//! substitution of such series.
//!
//! ```
//! use mibs::{exact_solution_character, MultiIndex, rat};
//!
//! let a = exact_solution_character(4).unwrap();
//! let beta: MultiIndex = "z0^2 z1 z2".parse().unwrap();
//! assert_eq!(a.value(&beta).unwrap(), rat(1, 3));
//! ```

pub mod characters;
pub mod enumerate;
pub mod error;
pub mod eval;
pub mod forest;
pub mod lincomb;
pub mod multi_index;
pub mod oracle;
pub mod products;
pub mod rational;
pub mod rk;
pub mod trees;
pub mod verify;

pub use characters::{compose, exact_solution_character, m_b, substitute, Character};
pub use enumerate::{enumerate_forests, enumerate_populated, partitions, GradedBasis};
pub use error::{Error, Result};
pub use eval::{Poly, TruncSeries};
pub use forest::Forest;
pub use lincomb::LinComb;
pub use multi_index::MultiIndex;
pub use rational::{int, rat, Rational};
pub use trees::RootedTree;

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(intro, "../../../book/src/intro.md");
    chapter!(multi_indices, "../../../book/src/multi_indices.md");
    chapter!(products, "../../../book/src/products.md");
    chapter!(characters, "../../../book/src/characters.md");
    chapter!(trees, "../../../book/src/trees.md");
    chapter!(evaluation, "../../../book/src/evaluation.md");
    chapter!(runge_kutta, "../../../book/src/runge_kutta.md");
    chapter!(verification, "../../../book/src/verification.md");
    chapter!(cli, "../../../book/src/cli.md");
    chapter!(readme, "../../../README.md");
}
