//! Property suites over the enumerated bases, with a machine-readable
//! report. Random data is drawn from a seeded generator so every run is
//! reproducible.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::{compose, exact_solution_character, m_b_morphism_check, substitute, Character};
use crate::enumerate::{enumerate_forests, enumerate_populated, partitions, GradedBasis};
use crate::error::Result;
use crate::eval::{elementary_differential, eval_bseries, morphism_check, tree_differential, Poly};
use crate::forest::Forest;
use crate::lincomb::LinComb;
use crate::multi_index::MultiIndex;
use crate::oracle::{compose_oracle, discrepancy_report, flow_series, substitute_oracle, Convention};
use crate::products::{derive, derive_monomial, grossman_larson, pre_lie, pre_lie_lin, star1, star2};
use crate::rational::{rat, Rational};
use crate::trees::{
    corolla_witness, enumerate_tree_forests, enumerate_trees, graft_forest, grossman_larson_trees, psi, psi_forest,
    psi_lin, pushforward_character,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Novikov,
    Morphism,
    Composition,
    Substitution,
    Exact,
    Bridge,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Novikov,
        Suite::Morphism,
        Suite::Composition,
        Suite::Substitution,
        Suite::Exact,
        Suite::Bridge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Novikov => "novikov",
            Suite::Morphism => "morphism",
            Suite::Composition => "composition",
            Suite::Substitution => "substitution",
            Suite::Exact => "exact",
            Suite::Bridge => "bridge",
            Suite::All => "all",
        }
    }
}

/// Outcome of one property over all of its instances.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub instances: usize,
    /// First counterexample or error, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A non-failing comparison reported for inspection.
#[derive(Debug, Clone, Serialize)]
pub struct Discrepancy {
    pub name: String,
    pub note: String,
    pub lines: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub max_order: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub max_order: usize,
    pub seed: u64,
    /// Random character pairs per law.
    pub pairs: usize,
    /// Random `(f, y_0)` instances per character pair.
    pub fields: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_order: 5,
            seed: 0x5eed,
            pairs: 5,
            fields: 5,
        }
    }
}

/// Counts instances and keeps the first failure.
#[derive(Default)]
struct Tally {
    instances: usize,
    failure: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }
}

fn check(suite: Suite, name: &str, run: impl FnOnce(&mut Tally) -> Result<()>) -> Check {
    let mut tally = Tally::default();
    let outcome = run(&mut tally);
    let detail = match outcome {
        Err(e) => Some(format!("error: {e}")),
        Ok(()) => tally.failure,
    };
    Check {
        suite: suite.name(),
        name: name.to_string(),
        passed: detail.is_none(),
        instances: tally.instances,
        detail,
    }
}

// ---------------------------------------------------------------- random data

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 9` and `1 ≤ q ≤ 9`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random values on every populated index up to `order`.
pub fn random_character<R: Rng>(rng: &mut R, order: usize, empty: Rational) -> Character {
    let values: Vec<(MultiIndex, Rational)> = (1..=order)
        .flat_map(|n| enumerate_populated(n).expect("n >= 1"))
        .map(|m| (m, random_rational(rng)))
        .collect();
    Character::new(order, empty, values)
}

/// Random polynomial of exact degree `degree`.
pub fn random_poly<R: Rng>(rng: &mut R, degree: usize) -> Poly {
    let mut c: Vec<Rational> = (0..degree).map(|_| random_rational(rng)).collect();
    c.push(random_nonzero_rational(rng));
    Poly::new(c)
}

fn y_pow(n: usize) -> Poly {
    Poly::monomial(Rational::one(), n)
}

fn all_populated(max: usize) -> Vec<MultiIndex> {
    (1..=max)
        .flat_map(|n| enumerate_populated(n).expect("n >= 1"))
        .collect()
}

fn all_forests(max: usize) -> Vec<Forest> {
    std::iter::once(Forest::empty())
        .chain((1..=max).flat_map(|n| enumerate_forests(n).expect("n >= 1")))
        .collect()
}

// ------------------------------------------------------------------ algebra

/// Left pre-Lie identity on ordered triples of total length `≤ max`.
pub fn check_pre_lie(max: usize) -> Check {
    check(
        Suite::Novikov,
        &format!("left pre-Lie identity, total order <= {max}"),
        |t| {
            let pool = all_populated(max);
            for x in &pool {
                for y in &pool {
                    for z in &pool {
                        if x.length() + y.length() + z.length() > max {
                            continue;
                        }
                        let (lx, ly, lz) = (
                            LinComb::basis(x.clone()),
                            LinComb::basis(y.clone()),
                            LinComb::basis(z.clone()),
                        );
                        let assoc = |a: &LinComb<MultiIndex>, b: &LinComb<MultiIndex>| {
                            pre_lie_lin(&pre_lie_lin(a, b), &lz) - pre_lie_lin(a, &pre_lie_lin(b, &lz))
                        };
                        t.record(assoc(&lx, &ly) == assoc(&ly, &lx), || {
                            format!("x = {x}, y = {y}, z = {z}")
                        });
                    }
                }
            }
            Ok(())
        },
    )
}

/// `(x ▷ y) ▷ z = (x ▷ z) ▷ y` on the same triples.
pub fn check_right_commutative(max: usize) -> Check {
    check(
        Suite::Novikov,
        &format!("right commutativity, total order <= {max}"),
        |t| {
            let pool = all_populated(max);
            for x in &pool {
                for y in &pool {
                    for z in &pool {
                        if x.length() + y.length() + z.length() > max {
                            continue;
                        }
                        let lz = LinComb::basis(z.clone());
                        let ly = LinComb::basis(y.clone());
                        let left = pre_lie_lin(&pre_lie(x, y), &lz);
                        let right = pre_lie_lin(&pre_lie(x, z), &ly);
                        t.record(left == right, || format!("x = {x}, y = {y}, z = {z}"));
                    }
                }
            }
            Ok(())
        },
    )
}

/// `(F ⋆ G) ⋆₂ w = F ⋆₂ (G ⋆₂ w)` and `(F ⋆ G) ⋆ H = F ⋆ (G ⋆ H)` for the
/// forest product `⋆`, on all instances of total length `≤ max`.
pub fn check_star2_associative(max: usize) -> Check {
    check(
        Suite::Novikov,
        &format!("star2 associativity, total order <= {max}"),
        |t| {
            let forests = all_forests(max);
            let targets = all_populated(max);
            for f in &forests {
                for g in &forests {
                    if f.length() + g.length() >= max {
                        continue;
                    }
                    let fg = grossman_larson(f, g);
                    for w in &targets {
                        if f.length() + g.length() + w.length() > max {
                            continue;
                        }
                        let left = fg.map_linear(|h| star2(h, w));
                        let right = star2(g, w).map_linear(|m| star2(f, m));
                        t.record(left == right, || format!("F = {f}, G = {g}, w = {w}"));
                    }
                    for h in &forests {
                        if f.length() + g.length() + h.length() > max {
                            continue;
                        }
                        let left = fg.map_linear(|x| grossman_larson(x, h));
                        let right = grossman_larson(g, h).map_linear(|x| grossman_larson(f, x));
                        t.record(left == right, || format!("F = {f}, G = {g}, H = {h}"));
                    }
                }
            }
            Ok(())
        },
    )
}

/// `F ⋆₁ D^m x = D^m (F ⋆₁ x)` for `m ≤ 3`.
pub fn check_star1_commutes_with_d(max: usize) -> Check {
    check(
        Suite::Novikov,
        &format!("star1 commutes with D, total order <= {max}"),
        |t| {
            let forests = all_forests(max);
            let targets = all_populated(max);
            for f in &forests {
                for x in &targets {
                    if f.length() + x.length() > max {
                        continue;
                    }
                    let base = star1(f, x);
                    for m in 0..=3 {
                        let left = derive(&LinComb::basis(x.clone()), m).map_linear(|y| star1(f, y));
                        let right = derive(&base, m);
                        t.record(left == right, || format!("F = {f}, x = {x}, m = {m}"));
                    }
                }
            }
            Ok(())
        },
    )
}

// ------------------------------------------------------ elementary differentials

fn field_set(rng: &mut ChaCha8Rng, degree: usize) -> Vec<Poly> {
    vec![y_pow(2), y_pow(3), random_poly(rng, degree)]
}

/// `F_f[F ⋆₂ α] = (Π F_f[β_j]) ∂^n F_f[α]` on all pairs of total length `≤ max`.
pub fn check_morphism(max: usize, seed: u64) -> Check {
    check(
        Suite::Morphism,
        &format!("elementary differentials are a star2 morphism, total order <= {max}"),
        |t| {
            let fields = field_set(&mut rng(seed), 5);
            for f in all_forests(max) {
                for alpha in all_populated(max) {
                    if f.length() + alpha.length() > max {
                        continue;
                    }
                    for g in &fields {
                        t.record(morphism_check(&f, &alpha, g), || {
                            format!("F = {f}, alpha = {alpha}, f = {g}")
                        });
                    }
                }
            }
            Ok(())
        },
    )
}

/// `∂_y F_f[α] = F_f[D α]`.
pub fn check_derivation(max: usize, seed: u64) -> Check {
    check(Suite::Morphism, &format!("d/dy matches D, order <= {max}"), |t| {
        let fields = field_set(&mut rng(seed), 5);
        for alpha in all_populated(max) {
            for g in &fields {
                let left = elementary_differential(&alpha, g).derive();
                let right = derive_monomial(&alpha).iter().fold(Poly::zero(), |acc, (m, c)| {
                    &acc + &elementary_differential(m, g).scale(c)
                });
                t.record(left == right, || format!("alpha = {alpha}, f = {g}"));
            }
        }
        Ok(())
    })
}

/// Trees with the same node-arity profile have the same scalar elementary
/// differential.
pub fn check_collapse(max: usize, seed: u64) -> Check {
    check(
        Suite::Morphism,
        &format!("trees collapse onto their multi-index, order <= {max}"),
        |t| {
            let fields = field_set(&mut rng(seed), max + 1);
            for n in 1..=max {
                for tree in enumerate_trees(n)? {
                    let beta = psi(&tree);
                    for g in &fields {
                        let ok = tree_differential(&tree, g) == elementary_differential(&beta, g);
                        t.record(ok, || format!("t = {tree}, psi(t) = {beta}, f = {g}"));
                    }
                }
            }
            Ok(())
        },
    )
}

// ---------------------------------------------------------------- the laws

/// `y_0` values never equal to zero.
fn random_instances(rng: &mut ChaCha8Rng, count: usize, degree: usize) -> Vec<(Poly, Rational)> {
    (0..count)
        .map(|_| (random_poly(rng, degree), random_nonzero_rational(rng)))
        .collect()
}

/// Composition law against the analytic oracle.
pub fn check_composition_law(order: usize, pairs: usize, fields: usize, seed: u64) -> Check {
    check(
        Suite::Composition,
        &format!("composition law matches the oracle through h^{order}"),
        |t| {
            let mut r = rng(seed);
            for _ in 0..pairs {
                let a = random_character(&mut r, order, Rational::one());
                let b = random_character(&mut r, order, Rational::one());
                let law = compose(&b, &a)?;
                for (f, y0) in random_instances(&mut r, fields, order + 1) {
                    let expected = compose_oracle(&a, &b, &f, &y0, order)?;
                    let got = eval_bseries(&law, &f, &y0, order)?;
                    t.record(got == expected, || {
                        format!("f = {f}, y0 = {y0}: law {got}, oracle {expected}")
                    });
                }
            }
            Ok(())
        },
    )
}

pub fn check_composition_associative(order: usize, seed: u64) -> Check {
    check(
        Suite::Composition,
        &format!("composition is associative through order {order}"),
        |t| {
            let mut r = rng(seed);
            for _ in 0..3 {
                let a = random_character(&mut r, order, Rational::one());
                let b = random_character(&mut r, order, Rational::one());
                let c = random_character(&mut r, order, Rational::one());
                let left = compose(&compose(&c, &b)?, &a)?;
                let right = compose(&c, &compose(&b, &a)?)?;
                t.record(left == right, || format!("a = {a}, b = {b}, c = {c}"));
            }
            Ok(())
        },
    )
}

pub fn check_units(order: usize, seed: u64) -> Check {
    check(Suite::Composition, &format!("units of both laws, order {order}"), |t| {
        let mut r = rng(seed);
        for _ in 0..3 {
            let empty = random_rational(&mut r);
            let a = random_character(&mut r, order, empty);
            let unit = Character::identity(order);
            t.record(compose(&unit, &a)? == a, || format!("identity then a = {a}"));
            let b = random_character(&mut r, order, Rational::one());
            t.record(compose(&b, &unit)? == b, || format!("b then identity, b = {b}"));
            t.record(substitute(&Character::delta_z0(order), &a)? == a, || {
                format!("delta_z0 into a = {a}")
            });
        }
        Ok(())
    })
}

/// Substitution law against the normalized oracle.
pub fn check_substitution_law(order: usize, pairs: usize, fields: usize, seed: u64) -> Check {
    check(
        Suite::Substitution,
        &format!("substitution law matches the oracle through h^{order}"),
        |t| {
            let mut r = rng(seed);
            for _ in 0..pairs {
                let empty = random_rational(&mut r);
                let a = random_character(&mut r, order, empty);
                let b = random_character(&mut r, order, Rational::zero());
                let law = substitute(&b, &a)?;
                for (g, y0) in random_instances(&mut r, fields, order + 1) {
                    let expected = substitute_oracle(&a, &b, &g, &y0, order, Convention::Normalized)?;
                    let got = eval_bseries(&law, &g, &y0, order)?;
                    t.record(got == expected, || {
                        format!("g = {g}, y0 = {y0}: law {got}, oracle {expected}")
                    });
                }
            }
            Ok(())
        },
    )
}

/// The desk instance: `a` and `b` supported on `{z0, z0 z1}`.
pub fn desk_instance() -> (Character, Character, Poly, Rational) {
    let z0: MultiIndex = MultiIndex::letter(0);
    let z0z1: MultiIndex = z0.with_letter(1);
    let a = Character::new(3, Rational::one(), [(z0.clone(), rat(1, 2)), (z0z1.clone(), rat(1, 3))]);
    let b = Character::new(3, Rational::zero(), [(z0, Rational::one()), (z0z1, rat(2, 5))]);
    let g = Poly::new(vec![rat(1, 1), rat(-1, 2), rat(1, 3), rat(2, 1)]);
    (a, b, g, rat(3, 4))
}

/// Literal versus law on the desk instance, never asserted equal.
pub fn literal_substitution_discrepancy(order: usize) -> Result<Discrepancy> {
    let (a, b, g, y0) = desk_instance();
    let order = order.min(a.order());
    let report = discrepancy_report(&a, &b, &g, &y0, order)?;
    let mut lines = vec![
        format!("law:     {}", report.law),
        format!("literal: {}", report.literal),
    ];
    let orders: Vec<String> = report.differing_orders.iter().map(|n| format!("h^{n}")).collect();
    lines.push(format!(
        "differing orders: {}",
        if orders.is_empty() {
            "none".into()
        } else {
            orders.join(", ")
        }
    ));
    Ok(Discrepancy {
        name: "literal substitution convention".into(),
        note: report.note,
        lines,
    })
}

/// Evaluates the `M_b` morphism identity for each identity weight.
pub fn m_b_explorer(seed: u64) -> Result<Discrepancy> {
    let mut r = rng(seed);
    let b = random_character(&mut r, 3, Rational::zero());
    let f = Forest::single(MultiIndex::letter(0));
    let beta = MultiIndex::letter(0);
    let mut lines = Vec::new();
    for (label, w) in [
        ("0", Rational::zero()),
        ("1", Rational::one()),
        ("b(z^0)", b.empty_value().clone()),
    ] {
        let c = m_b_morphism_check(&b, &f, &beta, &w)?;
        let mut line = format!("weight {label}: identity {}", if c.holds { "holds" } else { "fails" });
        if !c.holds {
            let _ = write!(line, " ({} defect terms)", c.defect.len());
        }
        lines.push(line);
    }
    Ok(Discrepancy {
        name: "M_b identity weight".into(),
        note: "M_b(F star2 beta) against M_b(F) star2 M_b(beta) on F = {z0}, beta = z0, with b(z^0) = 0".into(),
        lines,
    })
}

// ------------------------------------------------------------------ exact flow

pub fn check_exact_flow(order: usize, seed: u64) -> Check {
    check(
        Suite::Exact,
        &format!("exact character reproduces the flow through h^{order}"),
        |t| {
            let mut r = rng(seed);
            let a = exact_solution_character(order)?;
            let mut fields = vec![y_pow(1), y_pow(2), y_pow(3)];
            fields.push(random_poly(&mut r, order + 1));
            fields.push(random_poly(&mut r, order + 1));
            for f in &fields {
                for y0 in [rat(1, 1), rat(-1, 2), rat(3, 7)] {
                    let got = eval_bseries(&a, f, &y0, order)?;
                    let expected = flow_series(f, &y0, order);
                    t.record(got == expected, || format!("f = {f}, y0 = {y0}"));
                }
            }
            Ok(())
        },
    )
}

pub fn check_exact_pushforward(order: usize) -> Check {
    check(
        Suite::Exact,
        &format!("exact character equals the tree pushforward, order {order}"),
        |t| {
            let a = exact_solution_character(order)?;
            let p = pushforward_character(|_| Rational::one(), order)?;
            t.record(a == p, || format!("recursion {a}, pushforward {p}"));
            Ok(())
        },
    )
}

// ------------------------------------------------------------------- bridge

pub fn check_witness(max: usize) -> Check {
    check(
        Suite::Bridge,
        &format!("psi inverts the corolla witness, order <= {max}"),
        |t| {
            for beta in all_populated(max) {
                let w = corolla_witness(&beta)?;
                t.record(psi(&w) == beta, || format!("beta = {beta}, witness {w}"));
            }
            Ok(())
        },
    )
}

pub fn check_psi_pre_lie(max: usize) -> Check {
    check(
        Suite::Bridge,
        &format!("psi is a pre-Lie morphism, total order <= {max}"),
        |t| {
            let trees: Vec<_> = (1..max).flat_map(|n| enumerate_trees(n).expect("n >= 1")).collect();
            for t1 in &trees {
                for t2 in &trees {
                    if t1.order() + t2.order() > max {
                        continue;
                    }
                    let left = psi_lin(&t1.graft_onto(t2));
                    let right = pre_lie(&psi(t1), &psi(t2));
                    t.record(left == right, || format!("t1 = {t1}, t2 = {t2}"));
                }
            }
            Ok(())
        },
    )
}

pub fn check_psi_grossman_larson(max: usize) -> Check {
    check(
        Suite::Bridge,
        &format!("psi is a Grossman-Larson morphism, total order <= {max}"),
        |t| {
            for n in 1..=max {
                for target in enumerate_trees(n)? {
                    for k in 0..=(max - n) {
                        let forests = if k == 0 {
                            vec![Vec::new()]
                        } else {
                            enumerate_tree_forests(k)
                        };
                        for forest in forests {
                            let pf = psi_forest(&forest);
                            let grafted = psi_lin(&graft_forest(&forest, &target));
                            t.record(grafted == star2(&pf, &psi(&target)), || {
                                format!("all-grafted: forest {forest:?}, t = {target}")
                            });
                            let full = grossman_larson_trees(&forest, &target).map_basis(|v| psi_forest(v));
                            let law = grossman_larson(&pf, &Forest::single(psi(&target)));
                            t.record(full == law, || {
                                format!("forest product: forest {forest:?}, t = {target}")
                            });
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

/// Per-order counts of trees and populated multi-indices, and the image of
/// `Ψ` at each order.
pub fn check_counts(max: usize) -> Check {
    check(
        Suite::Bridge,
        &format!("counts, surjectivity and fibers, order <= {max}"),
        |t| {
            const TREES: [usize; 9] = [0, 1, 1, 2, 4, 9, 20, 48, 115];
            for n in 1..=max {
                let trees = enumerate_trees(n)?;
                let indices = enumerate_populated(n)?;
                t.record(indices.len() == partitions(n - 1).len(), || {
                    format!("index count at order {n}")
                });
                if let Some(&expected) = TREES.get(n) {
                    t.record(trees.len() == expected, || {
                        format!("tree count at order {n}: {}", trees.len())
                    });
                }
                let mut image: Vec<MultiIndex> = trees.iter().map(psi).collect();
                let fibers_collide = {
                    image.sort();
                    image.windows(2).any(|w| w[0] == w[1])
                };
                image.dedup();
                t.record(image == indices, || format!("image of psi at order {n}"));
                if n >= 4 {
                    t.record(fibers_collide, || format!("no fiber of size 2 at order {n}"));
                }
            }
            Ok(())
        },
    )
}

// -------------------------------------------------------------------- runner

pub fn run(suite: Suite, config: &Config) -> Report {
    let n = config.max_order;
    let seed = config.seed;
    let mut checks = Vec::new();
    let mut discrepancies = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::ALL.to_vec()
    } else {
        vec![suite]
    };
    for s in suites {
        match s {
            Suite::Novikov => {
                checks.push(check_pre_lie(n));
                checks.push(check_right_commutative(n));
                checks.push(check_star2_associative(n));
                checks.push(check_star1_commutes_with_d(n));
            }
            Suite::Morphism => {
                checks.push(check_morphism(n, seed));
                checks.push(check_derivation(n, seed));
                checks.push(check_collapse(n, seed));
            }
            Suite::Composition => {
                checks.push(check_composition_law(n, config.pairs, config.fields, seed));
                checks.push(check_composition_associative(n, seed));
                checks.push(check_units(n, seed));
            }
            Suite::Substitution => {
                checks.push(check_substitution_law(n, config.pairs, config.fields, seed));
                match literal_substitution_discrepancy(n) {
                    Ok(d) => discrepancies.push(d),
                    Err(e) => checks.push(error_check(Suite::Substitution, "literal discrepancy report", e)),
                }
                match m_b_explorer(seed) {
                    Ok(d) => discrepancies.push(d),
                    Err(e) => checks.push(error_check(Suite::Substitution, "M_b explorer", e)),
                }
            }
            Suite::Exact => {
                checks.push(check_exact_flow(n, seed));
                checks.push(check_exact_pushforward(n));
            }
            Suite::Bridge => {
                checks.push(check_witness(n));
                checks.push(check_psi_pre_lie(n));
                checks.push(check_psi_grossman_larson(n));
                checks.push(check_counts(n));
            }
            Suite::All => unreachable!(),
        }
    }
    Report {
        max_order: n,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
        discrepancies,
    }
}

fn error_check(suite: Suite, name: &str, e: crate::error::Error) -> Check {
    Check {
        suite: suite.name(),
        name: name.into(),
        passed: false,
        instances: 0,
        detail: Some(format!("error: {e}")),
    }
}

/// Per-order sizes: trees, populated indices, and their ratio.
#[derive(Debug, Clone, Serialize)]
pub struct StatsRow {
    pub order: usize,
    pub trees: usize,
    pub indices: usize,
    pub ratio: String,
}

pub fn stats(max: usize) -> Result<Vec<StatsRow>> {
    let basis = GradedBasis::new(max);
    (1..=max)
        .map(|n| {
            let trees = enumerate_trees(n)?.len();
            let indices = basis.indices(n).len();
            let ratio = Rational::new(BigInt::from(trees), BigInt::from(indices));
            Ok(StatsRow {
                order: n,
                trees,
                indices,
                ratio: ratio.to_string(),
            })
        })
        .collect()
}
