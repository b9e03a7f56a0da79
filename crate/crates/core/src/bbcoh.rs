//! Torus-fixed points, tangent weights and the Białynicki-Birula cell
//! decomposition of the compactification.
//!
//! Fixed points are indexed by pairs `(y, w)` of Weyl group elements. The
//! tangent space at `z_{y,w}` carries `dim G` characters of `T × T`, written
//! additively as pairs of root-lattice vectors:
//!
//! * `(-yα, 0)` for `α ∈ Φ^+`,
//! * `(0, wα)` for `α ∈ Φ^+`,
//! * `(-yα_i, wα_i)` for each simple root.
//!
//! The one-parameter subgroup with generator `(nH, -H)` acts on the weight
//! `(a, b)` with eigenvalue `n·a(H) - b(H)`; its positive eigenvalues count
//! the cell dimension.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::poly::Poly;
use crate::rootsys::{Coweight, RootSystem, RootVector};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TangentWeight {
    pub first: RootVector,
    pub second: RootVector,
}

impl TangentWeight {
    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }
}

/// Weights at `z_{y,w}` in the fixed family order, each family in canonical
/// root order.
pub fn tangent_weights(rs: &RootSystem, y: &WeylElement, w: &WeylElement) -> Vec<TangentWeight> {
    let l = rs.rank();
    let n = rs.positive_count();
    let zero = RootVector::zero(l);
    let mut out = Vec::with_capacity(rs.dim_g());
    for k in 0..n {
        out.push(TangentWeight {
            first: -rs.root(y.image_index(k)),
            second: zero.clone(),
        });
    }
    for k in 0..n {
        out.push(TangentWeight {
            first: zero.clone(),
            second: rs.root(w.image_index(k)).clone(),
        });
    }
    for i in 0..l {
        out.push(TangentWeight {
            first: -rs.root(y.image_index(i)),
            second: rs.root(w.image_index(i)).clone(),
        });
    }
    out
}

/// A fixed-point-free one-parameter subgroup `a ↦ (φ(a^n), φ(a^{-1}))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneParamChoice {
    pub h: Coweight,
    pub n: i64,
}

impl OneParamChoice {
    /// Eigenvalue of the generator `(nH, -H)` on a tangent weight.
    pub fn eigenvalue(&self, rs: &RootSystem, wt: &TangentWeight) -> Q {
        q(self.n) * rs.pairing(&wt.first, &self.h) - rs.pairing(&wt.second, &self.h)
    }
}

/// `H = Σ ω_i^∨` and `n = 1 + max height`.
///
/// Every tangent weight at every fixed point lies in
/// `(Φ ∪ {0}) × (Φ ∪ {0}) \ {(0,0)}`, so checking the eigenvalue on that
/// finite superset certifies the choice for all `|W|²` fixed points at once.
pub fn choose_one_param(rs: &RootSystem) -> Result<OneParamChoice> {
    let l = rs.rank();
    let choice = OneParamChoice {
        h: Coweight::rho_check(l),
        n: 1 + rs.max_height(),
    };
    let zero = RootVector::zero(l);
    let candidates: Vec<&RootVector> = rs.roots().iter().chain(core::iter::once(&zero)).collect();
    for a in &candidates {
        for b in &candidates {
            let wt = TangentWeight {
                first: (*a).clone(),
                second: (*b).clone(),
            };
            if wt.is_zero() {
                continue;
            }
            if choice.eigenvalue(rs, &wt).is_zero() {
                return Err(Error::invariant(
                    "bbcoh.one_param",
                    format!(
                        "generator (nH,-H) with n={} vanishes on weight ({}, {})",
                        choice.n, a, b
                    ),
                ));
            }
        }
    }
    Ok(choice)
}

/// `l(y) + l(w) + L(y)`.
pub fn cell_dimension_formula(y: &WeylElement, w: &WeylElement) -> usize {
    y.length() + w.length() + y.descent_count()
}

/// Number of positive eigenvalues at `z_{y,w}`, cross-checked against the
/// closed formula.
pub fn cell_dimension(
    rs: &RootSystem,
    choice: &OneParamChoice,
    y: &WeylElement,
    w: &WeylElement,
) -> Result<usize> {
    let weights = tangent_weights(rs, y, w);
    count_positive(rs, choice, &weights, y, w)
}

fn count_positive(
    rs: &RootSystem,
    choice: &OneParamChoice,
    weights: &[TangentWeight],
    y: &WeylElement,
    w: &WeylElement,
) -> Result<usize> {
    let mut positive = 0;
    for wt in weights {
        let ev = choice.eigenvalue(rs, wt);
        if ev.is_zero() {
            return Err(Error::invariant(
                "bbcoh.nonzero_eigenvalue",
                format!(
                    "zero eigenvalue at y={:?} w={:?} on ({}, {})",
                    y.word(),
                    w.word(),
                    wt.first,
                    wt.second
                ),
            ));
        }
        if ev > Q::zero() {
            positive += 1;
        }
    }
    let formula = cell_dimension_formula(y, w);
    if positive != formula {
        return Err(Error::invariant(
            "bbcoh.cell_dimension",
            format!(
                "eigenvalue count {positive} != l(y)+l(w)+L(y) = {formula} at y={:?} w={:?}",
                y.word(),
                w.word()
            ),
        ));
    }
    Ok(positive)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDatum {
    pub y: usize,
    pub w: usize,
    pub weights: Vec<TangentWeight>,
    pub cell_dim: usize,
}

pub fn fixed_point(
    rs: &RootSystem,
    group: &WeylGroup,
    choice: &OneParamChoice,
    y: usize,
    w: usize,
) -> Result<FixedPointDatum> {
    let (ye, we) = (group.element(y), group.element(w));
    let weights = tangent_weights(rs, ye, we);
    if weights.len() != rs.dim_g() || weights.iter().any(TangentWeight::is_zero) {
        return Err(Error::invariant(
            "bbcoh.tangent_space",
            format!("bad tangent weights at ({y}, {w})"),
        ));
    }
    let cell_dim = count_positive(rs, choice, &weights, ye, we)?;
    Ok(FixedPointDatum {
        y,
        w,
        weights,
        cell_dim,
    })
}

/// Every fixed point, `y` major. Quadratic in `|W|`.
pub fn fixed_points(
    rs: &RootSystem,
    group: &WeylGroup,
    choice: &OneParamChoice,
) -> Result<Vec<FixedPointDatum>> {
    let order = group.order();
    let mut out = Vec::with_capacity(order * order);
    for y in 0..order {
        for w in 0..order {
            out.push(fixed_point(rs, group, choice, y, w)?);
        }
    }
    Ok(out)
}

/// `A(t) = Σ_y t^{l(y) + L(y)}`.
pub fn y_factor(group: &WeylGroup) -> Poly {
    Poly::census(
        group
            .elements()
            .iter()
            .map(|e| e.length() + e.descent_count()),
    )
}

/// `B(t) = Σ_w t^{l(w)}`.
pub fn w_factor(group: &WeylGroup) -> Poly {
    group.poincare_polynomial()
}

/// `Σ_{(y,w)} t^{2(l(y)+l(w)+L(y))}` by direct summation over all pairs.
pub fn poincare_double_sum(group: &WeylGroup) -> Poly {
    let ys: Vec<usize> = group
        .elements()
        .iter()
        .map(|e| e.length() + e.descent_count())
        .collect();
    let ws: Vec<usize> = group.elements().iter().map(|e| e.length()).collect();
    let top = ys.iter().max().copied().unwrap_or(0) + ws.iter().max().copied().unwrap_or(0);
    let mut counts = alloc::vec![0u64; top + 1];
    for &a in &ys {
        for &b in &ws {
            counts[a + b] += 1;
        }
    }
    Poly::from_coeffs(counts).substitute_power(2)
}

/// Poincaré polynomial of the compactification, computed both as the direct
/// double sum and as `A(t²)·B(t²)`; disagreement is an invariant violation.
pub fn poincare_polynomial_x(group: &WeylGroup) -> Result<Poly> {
    let direct = poincare_double_sum(group);
    let product = y_factor(group).mul(&w_factor(group)).substitute_power(2);
    if direct != product {
        return Err(Error::invariant(
            "bbcoh.product_form",
            format!("double sum {direct} != product {product}"),
        ));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;
    use crate::weyl::{enumerate, DEFAULT_CAP};

    fn setup(t: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::new(&CartanType::parse(t).unwrap());
        let w = enumerate(&rs, DEFAULT_CAP).unwrap();
        (rs, w)
    }

    fn rv(v: &[i64]) -> RootVector {
        RootVector(v.to_vec())
    }

    #[test]
    fn a1_weights_at_identity_and_longest() {
        let (rs, w) = setup("A1");
        let e = w.identity();
        let got = tangent_weights(&rs, e, e);
        let want = [
            (rv(&[-1]), rv(&[0])),
            (rv(&[0]), rv(&[1])),
            (rv(&[-1]), rv(&[1])),
        ];
        assert_eq!(got.len(), 3);
        for (g, (a, b)) in got.iter().zip(want) {
            assert_eq!((&g.first, &g.second), (&a, &b));
        }
        let s = w.longest();
        let got = tangent_weights(&rs, s, s);
        let want = [
            (rv(&[1]), rv(&[0])),
            (rv(&[0]), rv(&[-1])),
            (rv(&[1]), rv(&[-1])),
        ];
        for (g, (a, b)) in got.iter().zip(want) {
            assert_eq!((&g.first, &g.second), (&a, &b));
        }
    }

    #[test]
    fn a2_weight_census_at_origin() {
        let (rs, w) = setup("A2");
        let wts = tangent_weights(&rs, w.identity(), w.identity());
        assert_eq!(wts.len(), 8);
        let fam1 = wts
            .iter()
            .filter(|t| t.second.is_zero() && t.first.is_negative())
            .count();
        let fam2 = wts
            .iter()
            .filter(|t| t.first.is_zero() && t.second.is_positive())
            .count();
        let fam3: Vec<_> = wts
            .iter()
            .filter(|t| !t.first.is_zero() && !t.second.is_zero())
            .collect();
        assert_eq!((fam1, fam2, fam3.len()), (3, 3, 2));
        for (i, t) in fam3.iter().enumerate() {
            assert_eq!(t.second, RootVector::simple(2, i));
            assert_eq!(t.first, -&RootVector::simple(2, i));
        }
    }

    #[test]
    fn weights_are_transported_from_origin() {
        let (rs, w) = setup("B2");
        let base = tangent_weights(&rs, w.identity(), w.identity());
        for y in w.elements() {
            for x in w.elements() {
                let moved: Vec<TangentWeight> = base
                    .iter()
                    .map(|t| TangentWeight {
                        first: y.act_on_root(&rs, &t.first),
                        second: x.act_on_root(&rs, &t.second),
                    })
                    .collect();
                assert_eq!(moved, tangent_weights(&rs, y, x));
            }
        }
    }

    #[test]
    fn one_param_n_values() {
        for (t, n) in [("A1", 2), ("A2", 3), ("G2", 6), ("B3", 6), ("A1xA1", 2)] {
            let (rs, _) = setup(t);
            let c = choose_one_param(&rs).unwrap();
            assert_eq!(c.n, n, "{t}");
            assert_eq!(c.h, Coweight::rho_check(rs.rank()));
        }
    }

    #[test]
    fn cell_dimension_examples() {
        let (rs, w) = setup("A1");
        let c = choose_one_param(&rs).unwrap();
        assert_eq!(
            cell_dimension(&rs, &c, w.identity(), w.identity()).unwrap(),
            0
        );
        assert_eq!(
            cell_dimension(&rs, &c, w.longest(), w.longest()).unwrap(),
            3
        );

        let (rs, w) = setup("A2");
        let c = choose_one_param(&rs).unwrap();
        let s1 = w.element(w.simple_reflection(0));
        assert_eq!(cell_dimension(&rs, &c, s1, w.identity()).unwrap(), 2);
    }

    #[test]
    fn too_small_n_is_caught() {
        let (rs, w) = setup("A2");
        // n = 1 does not dominate root heights: (-yα_i, wα_i) can have a zero
        // eigenvalue.
        let bad = OneParamChoice {
            h: Coweight::rho_check(2),
            n: 1,
        };
        let mut failures = 0;
        for y in w.elements() {
            for x in w.elements() {
                if cell_dimension(&rs, &bad, y, x).is_err() {
                    failures += 1;
                }
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn poincare_examples() {
        let (_, w) = setup("A1");
        assert_eq!(
            poincare_polynomial_x(&w).unwrap().coeffs(),
            [1, 0, 1, 0, 1, 0, 1]
        );
        let (_, w) = setup("A2");
        assert_eq!(y_factor(&w).coeffs(), [1, 0, 2, 2, 0, 1]);
        let p = poincare_polynomial_x(&w).unwrap();
        assert_eq!(p.eval_at_one(), 36);
    }

    #[test]
    fn eigenvalue_count_matches_formula_exhaustively() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"] {
            let (rs, w) = setup(t);
            let c = choose_one_param(&rs).unwrap();
            let fps = fixed_points(&rs, &w, &c).unwrap();
            assert_eq!(fps.len(), w.order() * w.order());
            let direct = Poly::census(fps.iter().map(|f| 2 * f.cell_dim));
            assert_eq!(direct, poincare_polynomial_x(&w).unwrap(), "{t}");
        }
    }

    /// Betti numbers are topological, so any other generic generator
    /// `(aH, bH)` must give the same polynomial, including the sign-flipped
    /// convention that swaps the roles of `y` and `w`.
    #[test]
    fn other_generic_generators_give_same_polynomial() {
        for t in ["A2", "B2", "G2", "A3"] {
            let (rs, w) = setup(t);
            let expected = poincare_polynomial_x(&w).unwrap();
            let m = rs.max_height() + 1;
            for (a, b) in [(m + 3, -1), (-1, m), (1, -m), (-m, 1), (2 * m + 1, 2)] {
                let mut p = Poly::zero();
                for y in w.elements() {
                    for x in w.elements() {
                        let mut count = 0;
                        for wt in tangent_weights(&rs, y, x) {
                            let ev = a * wt.first.height() + b * wt.second.height();
                            assert_ne!(ev, 0, "{t}: ({a},{b}) not generic");
                            if ev > 0 {
                                count += 1;
                            }
                        }
                        p.add_term(2 * count, 1);
                    }
                }
                assert_eq!(p, expected, "{t} with generator ({a}H, {b}H)");
            }
        }
    }

    #[test]
    fn extreme_degrees_unique() {
        for t in ["A2", "B2", "G2", "A1xA1"] {
            let (rs, w) = setup(t);
            let c = choose_one_param(&rs).unwrap();
            let fps = fixed_points(&rs, &w, &c).unwrap();
            let zero: Vec<_> = fps.iter().filter(|f| f.cell_dim == 0).collect();
            let top: Vec<_> = fps.iter().filter(|f| f.cell_dim == rs.dim_g()).collect();
            assert_eq!(zero.len(), 1);
            assert_eq!((zero[0].y, zero[0].w), (0, 0));
            assert_eq!(top.len(), 1);
            assert_eq!((top[0].y, top[0].w), (w.longest_index(), w.longest_index()));
        }
    }
}
