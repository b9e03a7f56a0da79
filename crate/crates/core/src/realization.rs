//! Explicit models in the adjoint representation for types A1 and A2, the
//! two types whose highest root is a regular weight.
//!
//! The Chevalley basis comes from elementary matrices in `sl(n+1)`: a root
//! with simple-root support `i..=j` is `E_{i,j+1}`, its negative is
//! `E_{j+1,i}`, and `h_i = E_{ii} - E_{i+1,i+1}`. Basis order is the
//! canonical root order followed by `h_1, …, h_l`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, q, RowSpace, Q};
use crate::orbits::{levi_data, Subset};
use crate::rootsys::{CartanType, Family, RootSystem, RootVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisLabel {
    /// `e_α` for the root with this index in the canonical order.
    Root(usize),
    /// `h_i`, 0-based.
    Cartan(usize),
}

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    rs: RootSystem,
    labels: Vec<BasisLabel>,
    weights: Vec<RootVector>,
    /// `bracket[a][b]` is `[x_a, x_b]` in basis coordinates.
    bracket: Vec<Vec<Vec<i64>>>,
    /// `ad[a]` is the matrix of `ad(x_a)`; column `b` is `[x_a, x_b]`.
    ad: Vec<Vec<Vec<i64>>>,
}

type IntMatrix = Vec<Vec<i64>>;

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let (n, m, k) = (a.len(), b[0].len(), b.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

fn commutator(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let (ab, ba) = (matmul(a, b), matmul(b, a));
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

impl ChevalleyAlgebra {
    pub fn new(ctype: &CartanType) -> Result<Self> {
        let supported =
            ctype.is_simple() && ctype.factors()[0].family == Family::A && ctype.rank() <= 2;
        if !supported {
            return Err(Error::Unsupported(format!(
                "explicit realization is available for A1 and A2 only, not {ctype}"
            )));
        }
        let rs = RootSystem::new(ctype);
        let l = rs.rank();
        let n = l + 1;
        let mut labels: Vec<BasisLabel> = (0..rs.roots().len()).map(BasisLabel::Root).collect();
        labels.extend((0..l).map(BasisLabel::Cartan));
        let mut weights: Vec<RootVector> = rs.roots().to_vec();
        weights.extend((0..l).map(|_| RootVector::zero(l)));

        let elementary = |r: usize, c: usize| -> IntMatrix {
            let mut m = vec![vec![0i64; n]; n];
            m[r][c] = 1;
            m
        };
        let matrices: Vec<IntMatrix> = labels
            .iter()
            .map(|label| match *label {
                BasisLabel::Root(k) => {
                    let v = rs.root(k);
                    let support: Vec<usize> = (0..l).filter(|&i| v.0[i] != 0).collect();
                    let (i, j) = (support[0], *support.last().expect("nonzero root"));
                    if v.is_positive() {
                        elementary(i, j + 1)
                    } else {
                        elementary(j + 1, i)
                    }
                }
                BasisLabel::Cartan(i) => {
                    let mut m = elementary(i, i);
                    m[i + 1][i + 1] = -1;
                    m
                }
            })
            .collect();
        let position = |r: usize, c: usize| -> usize {
            (0..rs.roots().len())
                .find(|&k| matrices[k][r][c] != 0)
                .expect("off-diagonal slot belongs to a root")
        };
        let decompose = |m: &IntMatrix| -> Result<Vec<i64>> {
            let mut out = vec![0i64; labels.len()];
            for r in 0..n {
                for c in 0..n {
                    if r != c && m[r][c] != 0 {
                        out[position(r, c)] = m[r][c];
                    }
                }
            }
            let mut running = 0;
            for i in 0..l {
                running += m[i][i];
                out[rs.roots().len() + i] = running;
            }
            if running + m[l][l] != 0 {
                return Err(Error::invariant(
                    "realization.traceless",
                    "bracket left sl(n)",
                ));
            }
            Ok(out)
        };
        let dim = labels.len();
        let mut bracket = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                bracket[a][b] = decompose(&commutator(&matrices[a], &matrices[b]))?;
            }
        }
        let ad = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|c| (0..dim).map(|b| bracket[a][b][c]).collect())
                    .collect()
            })
            .collect();
        let alg = ChevalleyAlgebra {
            rs,
            labels,
            weights,
            bracket,
            ad,
        };
        alg.check_identities()?;
        Ok(alg)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// Weight of each basis vector under the Cartan subalgebra.
    pub fn weights(&self) -> &[RootVector] {
        &self.weights
    }

    pub fn root_element(&self, k: usize) -> usize {
        k
    }

    pub fn cartan_element(&self, i: usize) -> usize {
        self.rs.roots().len() + i
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[i64] {
        &self.bracket[a][b]
    }

    /// `[x, y]` for arbitrary coordinate vectors.
    pub fn bracket_vec(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim()];
        for (a, &xa) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (b, &yb) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                for (o, &c) in out.iter_mut().zip(&self.bracket[a][b]) {
                    *o += xa * yb * c;
                }
            }
        }
        out
    }

    pub fn ad(&self, a: usize) -> &[Vec<i64>] {
        &self.ad[a]
    }

    fn unit(&self, a: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.dim()];
        v[a] = 1;
        v
    }

    fn check_identities(&self) -> Result<()> {
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                let back: Vec<i64> = self.bracket[b][a].iter().map(|x| -x).collect();
                if self.bracket[a][b] != back {
                    return Err(Error::invariant(
                        "realization.antisymmetry",
                        format!("basis pair ({a},{b})"),
                    ));
                }
                // ad[x_a, x_b] = [ad x_a, ad x_b]
                let lhs: IntMatrix = (0..d)
                    .map(|r| {
                        (0..d)
                            .map(|c| {
                                (0..d)
                                    .map(|k| self.bracket[a][b][k] * self.ad[k][r][c])
                                    .sum()
                            })
                            .collect()
                    })
                    .collect();
                if lhs != commutator(&self.ad[a], &self.ad[b]) {
                    return Err(Error::invariant(
                        "realization.adjoint_homomorphism",
                        format!("basis pair ({a},{b})"),
                    ));
                }
                for c in 0..d {
                    let (xa, xb, xc) = (self.unit(a), self.unit(b), self.unit(c));
                    let t1 = self.bracket_vec(&xa, &self.bracket_vec(&xb, &xc));
                    let t2 = self.bracket_vec(&xb, &self.bracket_vec(&xc, &xa));
                    let t3 = self.bracket_vec(&xc, &self.bracket_vec(&xa, &xb));
                    if (0..d).any(|k| t1[k] + t2[k] + t3[k] != 0) {
                        return Err(Error::invariant(
                            "realization.jacobi",
                            format!("basis triple ({a},{b},{c})"),
                        ));
                    }
                }
            }
        }
        for (a, w) in self.weights.iter().enumerate() {
            for i in 0..self.rs.rank() {
                let h = self.cartan_element(i);
                let expected = self.rs.coroot_pairing(i, w);
                let v = &self.bracket[h][a];
                if (0..d).any(|k| v[k] != if k == a { expected } else { 0 }) {
                    return Err(Error::invariant(
                        "realization.cartan_action",
                        format!("h_{} on basis {a}", i + 1),
                    ));
                }
            }
        }
        let theta = &self.rs.highest_roots()[0];
        if (0..self.rs.rank()).any(|i| self.rs.coroot_pairing(i, theta) <= 0) {
            return Err(Error::invariant(
                "realization.regular",
                "highest root is not regular",
            ));
        }
        Ok(())
    }
}

pub fn build_chevalley(ctype: &CartanType) -> Result<ChevalleyAlgebra> {
    ChevalleyAlgebra::new(ctype)
}

/// `A = cB` for some nonzero rational `c`.
pub fn projectively_equal(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let flat_a: Vec<&Q> = a.iter().flatten().collect();
    let flat_b: Vec<&Q> = b.iter().flatten().collect();
    if flat_a.len() != flat_b.len() {
        return false;
    }
    let Some(k) = flat_b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let c = *flat_a[k] / *flat_b[k];
    !c.is_zero() && flat_a.iter().zip(&flat_b).all(|(x, y)| **x == c * **y)
}

fn check_subset(alg: &ChevalleyAlgebra, subset: Subset) -> Result<()> {
    let l = alg.rs.rank();
    match subset.indices().into_iter().find(|&i| i >= l) {
        Some(index) => Err(Error::IndexOutOfRange { index, rank: l }),
        None => Ok(()),
    }
}

/// Basis indices whose weight is `θ - Σ_{Δ_I} n_i α_i` with `n_i ≥ 0`.
pub fn j_set(alg: &ChevalleyAlgebra, subset: Subset) -> Vec<usize> {
    let theta = &alg.rs.highest_roots()[0];
    (0..alg.dim())
        .filter(|&a| {
            let diff = theta - &alg.weights[a];
            diff.0
                .iter()
                .enumerate()
                .all(|(i, &c)| c >= 0 && (c == 0 || !subset.contains(i)))
        })
        .collect()
}

/// Projector onto `V_I`, the span of the weight vectors in the J-set.
pub fn z_matrix(alg: &ChevalleyAlgebra, subset: Subset) -> Result<Vec<Vec<Q>>> {
    check_subset(alg, subset)?;
    let d = alg.dim();
    let mut p = vec![vec![Q::zero(); d]; d];
    for a in j_set(alg, subset) {
        p[a][a] = q(1);
    }
    Ok(p)
}

fn qmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&k| !a[i][k].is_zero())
                        .map(|k| a[i][k] * b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn int_to_q(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|r| linalg::to_q(r)).collect()
}

/// `dim {(x, y) ∈ g ⊕ g : ρ(x)P - Pρ(y) ∈ Q·P}` by exact elimination, without
/// comparing against the expected value.
pub fn stabilizer_kernel_dim(alg: &ChevalleyAlgebra, subset: Subset) -> Result<usize> {
    let p = z_matrix(alg, subset)?;
    let d = alg.dim();
    let left: Vec<Vec<Vec<Q>>> = (0..d).map(|a| qmul(&int_to_q(alg.ad(a)), &p)).collect();
    let right: Vec<Vec<Vec<Q>>> = (0..d).map(|a| qmul(&p, &int_to_q(alg.ad(a)))).collect();
    // unknowns (x_1..x_d, y_1..y_d, c); one equation per matrix entry
    let mut rows = Vec::with_capacity(d * d);
    for r in 0..d {
        for s in 0..d {
            let mut row = Vec::with_capacity(2 * d + 1);
            row.extend((0..d).map(|a| left[a][r][s]));
            row.extend((0..d).map(|a| -right[a][r][s]));
            row.push(-p[r][s]);
            rows.push(row);
        }
    }
    // P ≠ 0, so c is determined by (x, y) and the projection is injective
    Ok(linalg::kernel_dim(&rows, 2 * d + 1))
}

/// Stabilizer dimension; must equal `dim G + |I|`.
pub fn stabilizer_lie_dim(alg: &ChevalleyAlgebra, subset: Subset) -> Result<usize> {
    let k = stabilizer_kernel_dim(alg, subset)?;
    let expected = alg.dim() + subset.len();
    if k != expected {
        return Err(Error::invariant(
            "realization.stabilizer_dim",
            format!("subset {subset}: kernel dimension {k}, expected {expected}"),
        ));
    }
    Ok(k)
}

/// For positive roots outside `Φ_I`, `ρ(e_β)` kills every column of `z_I`.
pub fn unipotent_annihilates(alg: &ChevalleyAlgebra, subset: Subset) -> Result<bool> {
    let p = z_matrix(alg, subset)?;
    let rs = &alg.rs;
    for k in 0..rs.positive_count() {
        if in_levi(rs.root(k), subset) {
            continue;
        }
        let prod = qmul(&int_to_q(alg.ad(alg.root_element(k))), &p);
        if prod.iter().flatten().any(|x| !x.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn in_levi(v: &RootVector, subset: Subset) -> bool {
    v.0.iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || !subset.contains(i))
}

/// `m_I` as a list of pairs of coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraMI {
    pub subset: Subset,
    pub basis: Vec<(Vec<i64>, Vec<i64>)>,
}

impl SubalgebraMI {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn pair_vector(x: &[i64], y: &[i64]) -> Vec<Q> {
    x.iter().chain(y).map(|&c| q(c)).collect()
}

/// Basis `{(e_β, 0)} ∪ {(0, e_{-β})} ∪ {(x, x) : x ∈ l_I}` with `β` running
/// over the positive roots outside `Φ_I`; independence and bracket closure
/// are verified.
pub fn build_m_i(alg: &ChevalleyAlgebra, subset: Subset) -> Result<SubalgebraMI> {
    check_subset(alg, subset)?;
    let rs = &alg.rs;
    let d = alg.dim();
    let zero = vec![0i64; d];
    let mut basis = Vec::new();
    for k in 0..rs.positive_count() {
        if !in_levi(rs.root(k), subset) {
            basis.push((alg.unit(alg.root_element(k)), zero.clone()));
            basis.push((
                zero.clone(),
                alg.unit(alg.root_element(rs.negative_index(k))),
            ));
        }
    }
    for k in 0..rs.roots().len() {
        if in_levi(rs.root(k), subset) {
            let e = alg.unit(alg.root_element(k));
            basis.push((e.clone(), e));
        }
    }
    for i in 0..rs.rank() {
        let h = alg.unit(alg.cartan_element(i));
        basis.push((h.clone(), h));
    }
    let mut space = RowSpace::new(2 * d);
    for (x, y) in &basis {
        if !space.insert(&pair_vector(x, y)) {
            return Err(Error::invariant(
                "realization.m_i_independent",
                format!("subset {subset}"),
            ));
        }
    }
    if space.dim() != d {
        return Err(Error::invariant(
            "realization.m_i_dim",
            format!("subset {subset}: dimension {} instead of {d}", space.dim()),
        ));
    }
    for (x1, y1) in &basis {
        for (x2, y2) in &basis {
            let bx = alg.bracket_vec(x1, x2);
            let by = alg.bracket_vec(y1, y2);
            if !space.contains(&pair_vector(&bx, &by)) {
                return Err(Error::invariant(
                    "realization.m_i_closed",
                    format!("subset {subset}"),
                ));
            }
        }
    }
    Ok(SubalgebraMI { subset, basis })
}

/// Indexing of `g ⊕ g` used by the wedge computation: `(E_α, 0)`,
/// `(0, E_α)` for each root, then `(H_i, H_i)` and `(H_i, -H_i)`.
fn first_slot(k: usize) -> usize {
    k
}

fn second_slot(rs: &RootSystem, k: usize) -> usize {
    rs.roots().len() + k
}

fn diagonal_slot(rs: &RootSystem, i: usize) -> usize {
    2 * rs.roots().len() + i
}

/// Wedge of basis vectors of `g ⊕ g` as a bitmask, with Laurent-polynomial
/// coefficients in `z`.
type WedgeSum = BTreeMap<u64, BTreeMap<i64, i64>>;

fn wedge_factor(sum: &WedgeSum, factor: &[(usize, i64)]) -> WedgeSum {
    let mut out: WedgeSum = BTreeMap::new();
    for (&mask, poly) in sum {
        for &(slot, degree) in factor {
            if mask & (1 << slot) != 0 {
                continue;
            }
            // moving the new vector left past every larger index
            let sign = if (mask >> (slot + 1)).count_ones() % 2 == 0 {
                1
            } else {
                -1
            };
            let target = out.entry(mask | (1 << slot)).or_default();
            for (&deg, &c) in poly {
                *target.entry(deg + degree).or_insert(0) += sign * c;
            }
        }
    }
    for poly in out.values_mut() {
        poly.retain(|_, c| *c != 0);
    }
    out.retain(|_, p| !p.is_empty());
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlueckerReport {
    /// `Σ_{α>0} ht(α)`.
    pub n0: i64,
    /// Number of wedge terms in the expansion.
    pub term_count: usize,
    /// z-degree of every term, ascending.
    pub degrees: Vec<i64>,
    pub top_degree: i64,
    pub top_terms: usize,
    /// Basis slots of the top term, ascending.
    pub top_slots: Vec<usize>,
    pub top_coefficient: i64,
    /// `(Σ first-component roots, Σ second-component roots)` of the top term.
    pub top_weight: (RootVector, RootVector),
    /// The top term is the wedge of `t_Δ + u ⊕ u^-`.
    pub matches_limit: bool,
}

/// Expands `(φ(z), e)·v_Δ` in the wedge basis of `∧^{dim G}(g ⊕ g)`, where
/// `φ(z)` scales `E_α` by `z^{ht α}`. Heavier than A1 only with
/// `allow_heavy`.
pub fn pluecker_limit(alg: &ChevalleyAlgebra, allow_heavy: bool) -> Result<PlueckerReport> {
    let rs = &alg.rs;
    if rs.rank() > 1 && !allow_heavy {
        return Err(Error::Unsupported(format!(
            "the wedge expansion for {} is opt-in (allow heavy computations)",
            rs.ctype()
        )));
    }
    let n = rs.positive_count();
    let mut sum: WedgeSum = BTreeMap::new();
    sum.insert(0, BTreeMap::from([(0, 1)]));
    for k in 0..n {
        sum = wedge_factor(
            &sum,
            &[
                (first_slot(k), rs.root(k).height()),
                (second_slot(rs, k), 0),
            ],
        );
    }
    for i in 0..rs.rank() {
        sum = wedge_factor(&sum, &[(diagonal_slot(rs, i), 0)]);
    }
    for k in 0..n {
        let neg = rs.negative_index(k);
        sum = wedge_factor(
            &sum,
            &[
                (first_slot(neg), rs.root(neg).height()),
                (second_slot(rs, neg), 0),
            ],
        );
    }
    let mut degrees: Vec<i64> = sum.values().flat_map(|p| p.keys().copied()).collect();
    degrees.sort_unstable();
    let term_count = degrees.len();
    let top_degree = *degrees
        .last()
        .ok_or_else(|| Error::invariant("realization.wedge_nonzero", "v_Δ vanished"))?;
    let top: Vec<(u64, i64)> = sum
        .iter()
        .filter_map(|(&m, p)| p.get(&top_degree).map(|&c| (m, c)))
        .collect();
    if top.len() != 1 {
        return Err(Error::invariant(
            "realization.unique_top",
            format!("{} terms share the top degree {top_degree}", top.len()),
        ));
    }
    let (mask, top_coefficient) = top[0];
    let top_slots: Vec<usize> = (0..64).filter(|s| mask & (1 << s) != 0).collect();
    let l = rs.rank();
    let (mut first, mut second) = (RootVector::zero(l), RootVector::zero(l));
    let roots = rs.roots().len();
    for &s in &top_slots {
        if s < roots {
            first = &first + rs.root(s);
        } else if s < 2 * roots {
            second = &second + rs.root(s - roots);
        }
    }
    let mut expected: Vec<usize> = (0..n).map(first_slot).collect();
    expected.extend((0..n).map(|k| second_slot(rs, rs.negative_index(k))));
    expected.extend((0..l).map(|i| diagonal_slot(rs, i)));
    expected.sort_unstable();
    Ok(PlueckerReport {
        n0: rs.positive_roots().iter().map(RootVector::height).sum(),
        term_count,
        degrees,
        top_degree,
        top_terms: top.len(),
        matches_limit: top_slots == expected && top_coefficient != 0,
        top_slots,
        top_coefficient,
        top_weight: (first, second),
    })
}

/// Label for a slot of `g ⊕ g`, e.g. `(e[1,0],0)` or `(h1,h1)`.
pub fn slot_label(rs: &RootSystem, slot: usize) -> String {
    let roots = rs.roots().len();
    if slot < roots {
        format!("(e{},0)", rs.root(slot))
    } else if slot < 2 * roots {
        format!("(0,e{})", rs.root(slot - roots))
    } else if slot < 2 * roots + rs.rank() {
        let i = slot - 2 * roots + 1;
        format!("(h{i},h{i})")
    } else {
        let i = slot - 2 * roots - rs.rank() + 1;
        format!("(h{i},-h{i})")
    }
}

/// One verified claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl Check {
    fn new(claim: impl Into<String>, computed: impl ToString, expected: impl ToString) -> Self {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        Check {
            claim: claim.into(),
            pass: computed == expected,
            computed,
            expected,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RealizationReport {
    pub ctype: CartanType,
    pub checks: Vec<Check>,
    pub pluecker: Option<PlueckerReport>,
}

impl RealizationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs every check for every subset, recording computed against expected
/// values rather than stopping at the first mismatch.
pub fn verify(ctype: &CartanType, allow_heavy: bool) -> Result<RealizationReport> {
    let alg = build_chevalley(ctype)?;
    let rs = &alg.rs;
    let d = alg.dim();
    let mut checks = vec![
        Check::new("chevalley identities", "ok", "ok"),
        Check::new("dim g", d, rs.dim_g()),
        Check::new("highest root regular", "true", "true"),
    ];
    let identity: Vec<Vec<Q>> = (0..d)
        .map(|i| (0..d).map(|j| q(i64::from(i == j))).collect())
        .collect();
    let z_empty = z_matrix(&alg, Subset::EMPTY)?;
    checks.push(Check::new(
        "z_{} is the identity",
        z_empty == identity,
        true,
    ));
    let subsets = Subset::all(rs.rank());
    for &s in &subsets {
        let p = z_matrix(&alg, s)?;
        checks.push(Check::new(
            format!("z_{s} idempotent"),
            qmul(&p, &p) == p,
            true,
        ));
        checks.push(Check::new(
            format!("rank z_{s}"),
            linalg::rank(&p),
            j_set(&alg, s).len(),
        ));
        let stab = stabilizer_kernel_dim(&alg, s)?;
        checks.push(Check::new(
            format!("dim stabilizer of z_{s}"),
            stab,
            d + s.len(),
        ));
        let orbit = levi_data(rs, s)?.dim_orbit;
        checks.push(Check::new(
            format!("dim orbit of z_{s}"),
            2 * d - stab,
            orbit,
        ));
        checks.push(Check::new(
            format!("u_{s} annihilates V_{s}"),
            unipotent_annihilates(&alg, s)?,
            true,
        ));
        let m = match build_m_i(&alg, s) {
            Ok(m) => m.dim().to_string(),
            Err(e) => e.to_string(),
        };
        checks.push(Check::new(format!("m_{s} closed subalgebra of dim"), m, d));
        for &t in &subsets {
            let prod = qmul(&p, &z_matrix(&alg, t)?);
            checks.push(Check::new(
                format!("z_{s} z_{t} = z_{}", s.union(t)),
                prod == z_matrix(&alg, s.union(t))?,
                true,
            ));
        }
    }
    let pluecker = if rs.rank() == 1 || allow_heavy {
        let r = pluecker_limit(&alg, allow_heavy)?;
        checks.push(Check::new("top z-degree", r.top_degree, r.n0));
        checks.push(Check::new("terms at top degree", r.top_terms, 1));
        checks.push(Check::new(
            "wedge terms",
            r.term_count,
            1usize << rs.roots().len(),
        ));
        let two_rho = rs
            .positive_roots()
            .iter()
            .fold(RootVector::zero(rs.rank()), |a, b| &a + b);
        checks.push(Check::new(
            "top term weight",
            format!("({}, {})", r.top_weight.0, r.top_weight.1),
            format!("({}, {})", two_rho, -&two_rho),
        ));
        checks.push(Check::new(
            "limit is [t_Δ + u ⊕ u^-]",
            r.matches_limit,
            true,
        ));
        Some(r)
    } else {
        None
    };
    Ok(RealizationReport {
        ctype: ctype.clone(),
        checks,
        pluecker,
    })
}
