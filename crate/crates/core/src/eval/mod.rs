//! Elementary differentials of scalar polynomial vector fields and
//! truncated evaluation of multi-index B-series.

mod poly;
mod series;

pub use poly::Poly;
pub use series::{Coeff, TruncSeries};

use num_traits::{One, Zero};

use crate::characters::Character;
use crate::error::Result;
use crate::forest::Forest;
use crate::multi_index::MultiIndex;
use crate::products::star2;
use crate::rational::Rational;
use crate::trees::RootedTree;

/// `F_f[z^β] = Π_k (f^{(k)})^{β(k)}`.
///
/// The empty index gives the empty product 1; B-series treat `z^0`
/// separately through the `a(z^0) y` term.
pub fn elementary_differential(beta: &MultiIndex, f: &Poly) -> Poly {
    beta.entries()
        .iter()
        .fold(Poly::one(), |acc, &(k, m)| &acc * &f.derive_n(k).pow(m))
}

/// `F_f[F] = Π_j F_f[β_j]` over the components of a forest.
pub fn forest_differential(forest: &Forest, f: &Poly) -> Poly {
    forest
        .components()
        .fold(Poly::one(), |acc, m| &acc * &elementary_differential(m, f))
}

/// The classical tree recursion `F(B₊(t_1..t_n)) = f^{(n)} Π F(t_i)` in
/// dimension one.
pub fn tree_differential(t: &RootedTree, f: &Poly) -> Poly {
    t.children()
        .iter()
        .fold(f.derive_n(t.children().len()), |acc, c| &acc * &tree_differential(c, f))
}

/// The B-series as a series in `h` whose coefficients are polynomials in
/// `y`: `a(z^0) y + Σ_{|β| ≤ N} h^{|β|} a(β)/S(β) F_f[β](y)`.
pub fn bseries_coefficients(a: &Character, f: &Poly, order: usize) -> Result<TruncSeries<Poly>> {
    series::check_order(order, a.order())?;
    let mut coeffs = vec![Poly::zero(); order + 1];
    coeffs[0] = Poly::y().scale(a.empty_value());
    for (beta, v) in a.values() {
        let n = beta.length();
        if n > order {
            continue;
        }
        let weight = v / Rational::from_integer(beta.symmetry_factor());
        coeffs[n] = &coeffs[n] + &elementary_differential(beta, f).scale(&weight);
    }
    Ok(TruncSeries::new(order, coeffs))
}

/// `B(a, h, f, y_0)` through `h^N`.
pub fn eval_bseries(a: &Character, f: &Poly, y0: &Rational, order: usize) -> Result<TruncSeries<Rational>> {
    Ok(bseries_coefficients(a, f, order)?.eval_at(y0))
}

/// Floating-point coefficients of [`eval_bseries`], for display only.
pub fn eval_bseries_f64(a: &Character, f: &Poly, y0: &Rational, order: usize) -> Result<Vec<f64>> {
    Ok(eval_bseries(a, f, y0, order)?.to_f64())
}

/// Checks `F_f[F ⋆₂ α] = (Π_j F_f[β_j]) · ∂_y^n F_f[α]` as polynomials.
pub fn morphism_check(forest: &Forest, alpha: &MultiIndex, f: &Poly) -> bool {
    let lhs = star2(forest, alpha).iter().fold(Poly::zero(), |acc, (mu, c)| {
        &acc + &elementary_differential(mu, f).scale(c)
    });
    let rhs = &forest_differential(forest, f) * &elementary_differential(alpha, f).derive_n(forest.component_count());
    lhs == rhs
}
