//! Finite crystallographic root systems with exact integer coordinates.
//!
//! Roots are stored in the simple-root basis and cocharacters in the
//! fundamental-coweight basis, so the natural pairing between them is the
//! plain dot product. For an adjoint group the character lattice is the root
//! lattice, which makes both bases integral.
//!
//! Root order is canonical: positive roots sorted by height, ties broken by
//! descending lexicographic order on coordinates (so `α_1, …, α_l` occupy
//! indices `0..l`), followed by the negatives in the same order. Index
//! `k + N` always holds `-roots[k]`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::{Add, Neg, Range, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// One irreducible factor of a Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidCartanType {
                factor: format!("{}{}", family.letter(), rank),
                reason: "rank out of range for this family".into(),
            });
        }
        Ok(SimpleType { family, rank })
    }

    /// Cartan matrix `A[i][j] = <α_i^∨, α_j>` in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // α_n short
            Family::B => a[n - 1][n - 2] = -2,
            // α_n long
            Family::C => a[n - 2][n - 1] = -2,
            // α_3 short, α_2 long
            Family::F => a[2][1] = -2,
            // α_1 short, α_2 long
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A Cartan type: a product of one or more simple types.
///
/// Text form is case-insensitive with `x` separating factors, e.g. `A2`,
/// `g2`, `A1xA1`, `B3xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidCartanType {
                factor: String::new(),
                reason: "at least one factor is required".into(),
            });
        }
        Ok(CartanType { factors })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![SimpleType::new(family, rank)?])
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for raw in text.trim().split(['x', 'X']) {
            let part = raw.trim();
            let bad = |reason: &str| Error::InvalidCartanType {
                factor: part.to_string(),
                reason: reason.into(),
            };
            let mut chars = part.chars();
            let letter = chars.next().ok_or_else(|| bad("empty factor"))?;
            let family = Family::from_char(letter).ok_or_else(|| bad("unknown family"))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected a family letter followed by a rank"));
            }
            let rank: usize = digits.parse().map_err(|_| bad("rank is not a number"))?;
            factors.push(
                SimpleType::new(family, rank)
                    .map_err(|_| bad("rank out of range for this family"))?,
            );
        }
        Self::new(factors)
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    /// Block-diagonal Cartan matrix of the product.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let mut a = vec![vec![0i64; l]; l];
        let mut off = 0;
        for f in &self.factors {
            let block = f.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    a[off + i][off + j] = x;
                }
            }
            off += f.rank;
        }
        a
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A vector of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Nonzero with all coordinates `>= 0`.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&x| x <= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|x| x * k).collect())
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A cocharacter in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight(pub Vec<Q>);

impl Coweight {
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![Q::zero(); rank];
        v[i] = Q::one();
        Coweight(v)
    }

    /// The coweight `H` with `α_i(H) = 1` for every simple root.
    pub fn rho_check(rank: usize) -> Self {
        Coweight(vec![Q::one(); rank])
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    roots: Vec<RootVector>,
    positive_count: usize,
    highest: Vec<RootVector>,
    factor_ranges: Vec<Range<usize>>,
    index: BTreeMap<RootVector, usize>,
    /// `(α_i, α_i) / 2`, scaled to integers within each factor.
    half_norms: Vec<i64>,
}

impl RootSystem {
    pub fn new(ctype: &CartanType) -> Self {
        let cartan = ctype.cartan_matrix();
        let l = cartan.len();
        let mut factor_ranges = Vec::new();
        let mut off = 0;
        for f in ctype.factors() {
            factor_ranges.push(off..off + f.rank);
            off += f.rank;
        }

        let mut positive: BTreeSet<RootVector> = BTreeSet::new();
        let mut queue: Vec<RootVector> = (0..l).map(|i| RootVector::simple(l, i)).collect();
        positive.extend(queue.iter().cloned());
        while let Some(v) = queue.pop() {
            for i in 0..l {
                let u = reflect_with(&cartan, i, &v);
                if u.is_positive() && !positive.contains(&u) {
                    positive.insert(u.clone());
                    queue.push(u);
                }
            }
        }
        let mut pos: Vec<RootVector> = positive.into_iter().collect();
        pos.sort_by_key(|v| (v.height(), Reverse(v.clone())));
        let n = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|v| -v));
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();

        let highest = factor_ranges
            .iter()
            .map(|range| {
                pos.iter()
                    .filter(|v| {
                        v.0.iter()
                            .enumerate()
                            .all(|(i, &x)| x == 0 || range.contains(&i))
                    })
                    .max_by_key(|v| v.height())
                    .cloned()
                    .expect("every factor has a simple root")
            })
            .collect();

        let half_norms = symmetrizer(&cartan, &factor_ranges);

        RootSystem {
            ctype: ctype.clone(),
            cartan,
            roots,
            positive_count: n,
            highest,
            factor_ranges,
            index,
            half_norms,
        }
    }

    pub fn ctype(&self) -> &CartanType {
        &self.ctype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &RootVector {
        &self.roots[k]
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.roots[..self.positive_count]
    }

    /// `N = |Φ^+|`.
    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn dim_g(&self) -> usize {
        self.rank() + 2 * self.positive_count
    }

    /// Highest root of each irreducible factor.
    pub fn highest_roots(&self) -> &[RootVector] {
        &self.highest
    }

    pub fn factor_ranges(&self) -> &[Range<usize>] {
        &self.factor_ranges
    }

    pub fn simple_root(&self, i: usize) -> &RootVector {
        &self.roots[i]
    }

    pub fn index_of(&self, v: &RootVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn negative_index(&self, k: usize) -> usize {
        let n = self.positive_count;
        if k < n {
            k + n
        } else {
            k - n
        }
    }

    pub fn is_positive_index(&self, k: usize) -> bool {
        k < self.positive_count
    }

    pub fn max_height(&self) -> i64 {
        self.positive_roots().last().map_or(0, |v| v.height())
    }

    pub fn height(&self, v: &RootVector) -> i64 {
        v.height()
    }

    /// `mu <= lam` in the dominance order: `lam - mu` is a nonnegative
    /// combination of simple roots.
    pub fn dominance_leq(&self, mu: &RootVector, lam: &RootVector) -> bool {
        mu.0.iter().zip(&lam.0).all(|(m, l)| l - m >= 0)
    }

    /// Natural pairing of a root-lattice vector with a cocharacter.
    pub fn pairing(&self, root: &RootVector, cw: &Coweight) -> Q {
        root.0.iter().zip(&cw.0).map(|(&a, b)| q(a) * b).sum()
    }

    /// `<v, α_i^∨>`.
    pub fn coroot_pairing(&self, i: usize, v: &RootVector) -> i64 {
        self.cartan[i].iter().zip(&v.0).map(|(a, b)| a * b).sum()
    }

    /// Simple reflection `s_i` applied to a lattice vector.
    pub fn reflect(&self, i: usize, v: &RootVector) -> RootVector {
        reflect_with(&self.cartan, i, v)
    }

    /// Simple reflection `s_i` on fundamental-coweight coordinates:
    /// `x - <α_i, x> α_i^∨`, where `α_i^∨ = Σ_j A[i][j] ω_j^∨`.
    pub fn reflect_coweight(&self, i: usize, x: &Coweight) -> Coweight {
        let p = x.0[i];
        Coweight(
            x.0.iter()
                .zip(&self.cartan[i])
                .map(|(c, &a)| c - p * q(a))
                .collect(),
        )
    }

    /// W-invariant symmetric form `(α_i, α_j) = d_i A[i][j]`, with the `d_i`
    /// the smallest positive integers that symmetrize each factor.
    pub fn inner_product(&self, u: &RootVector, v: &RootVector) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if u.0[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += u.0[i] * v.0[j] * self.half_norms[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// Rational version of [`inner_product`](Self::inner_product).
    pub fn inner_product_q(&self, u: &[Q], v: &[Q]) -> Q {
        let l = self.rank();
        let mut s = Q::zero();
        for i in 0..l {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..l {
                s += u[i] * v[j] * q(self.half_norms[i] * self.cartan[i][j]);
            }
        }
        s
    }

    /// Index of the irreducible factor containing simple root `i`.
    pub fn factor_of_simple(&self, i: usize) -> usize {
        self.factor_ranges
            .iter()
            .position(|r| r.contains(&i))
            .expect("simple root index in range")
    }
}

fn reflect_with(cartan: &[Vec<i64>], i: usize, v: &RootVector) -> RootVector {
    let c: i64 = cartan[i].iter().zip(&v.0).map(|(a, b)| a * b).sum();
    let mut out = v.clone();
    out.0[i] -= c;
    out
}

/// Integers `d_i` with `d_i A[i][j] = d_j A[j][i]`.
fn symmetrizer(cartan: &[Vec<i64>], ranges: &[Range<usize>]) -> Vec<i64> {
    use num_integer::Integer;
    let l = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; l];
    for range in ranges {
        d[range.start] = Some(Q::one());
        let mut stack = vec![range.start];
        while let Some(i) = stack.pop() {
            let di = d[i].expect("visited");
            for j in range.clone() {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    d[j] = Some(di * q(cartan[i][j]) / q(cartan[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let mut out = vec![0i64; l];
    for range in ranges {
        let lcm = range.clone().fold(1i128, |acc, i| {
            acc.lcm(d[i].expect("connected factor").denom())
        });
        for i in range.clone() {
            out[i] = (d[i].unwrap() * lcm).to_integer() as i64;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(&CartanType::parse(t).unwrap())
    }

    /// Positive roots grown by root strings: β + α_i is a root iff
    /// `p - <β, α_i^∨> > 0` where `p` is how far the α_i-string extends below β.
    fn string_oracle_positive_count(cartan: &[Vec<i64>]) -> usize {
        let l = cartan.len();
        let mut level: BTreeSet<Vec<i64>> = (0..l)
            .map(|i| {
                let mut v = vec![0; l];
                v[i] = 1;
                v
            })
            .collect();
        let mut all: BTreeSet<Vec<i64>> = level.clone();
        while !level.is_empty() {
            let mut next = BTreeSet::new();
            for b in &level {
                for i in 0..l {
                    let mut p = 0;
                    let mut down = b.clone();
                    loop {
                        down[i] -= 1;
                        if all.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..l).map(|j| cartan[i][j] * b[j]).sum();
                    if p - pairing > 0 {
                        let mut up = b.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }
        all.len()
    }

    #[test]
    fn small_examples() {
        let a1 = rs("A1");
        assert_eq!(
            (a1.roots().len(), a1.positive_count(), a1.dim_g()),
            (2, 1, 3)
        );
        let a2 = rs("A2");
        assert_eq!(a2.roots().len(), 6);
        assert_eq!(a2.highest_roots()[0].0, [1, 1]);
        assert_eq!(a2.dim_g(), 8);
        let g2 = rs("G2");
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.highest_roots()[0].height(), 5);
        assert_eq!(g2.highest_roots()[0].0, [3, 2]);
        assert_eq!(g2.dim_g(), 14);
    }

    #[test]
    fn positive_counts_match_string_oracle_and_formulas() {
        let cases = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("B4", 16),
            ("C3", 9),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("A1xA1", 2),
            ("B3xA1", 10),
        ];
        for (t, n) in cases {
            let r = rs(t);
            assert_eq!(r.positive_count(), n, "{t}");
            assert_eq!(string_oracle_positive_count(r.cartan()), n, "{t} oracle");
        }
    }

    #[test]
    fn simple_roots_come_first() {
        for t in ["A3", "B3", "G2", "E6", "B3xA1"] {
            let r = rs(t);
            for i in 0..r.rank() {
                assert_eq!(r.simple_root(i), &RootVector::simple(r.rank(), i), "{t}");
            }
        }
    }

    #[test]
    fn reflection_closure_exhaustive() {
        for t in [
            "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "E6", "A1xA1",
            "B3xA1",
        ] {
            let r = rs(t);
            for v in r.roots() {
                assert!(r.index_of(&-v).is_some());
                for i in 0..r.rank() {
                    assert!(r.index_of(&r.reflect(i, v)).is_some(), "{t}: s_{i}{v}");
                }
            }
            for (k, v) in r.roots().iter().enumerate() {
                assert_eq!(r.root(r.negative_index(k)), &-v);
                assert!(v.is_positive() || v.is_negative());
            }
        }
    }

    #[test]
    fn product_roots_do_not_mix_factors() {
        let r = rs("B3xA1");
        for v in r.roots() {
            let support: BTreeSet<usize> = (0..4)
                .filter(|&i| v.0[i] != 0)
                .map(|i| r.factor_of_simple(i))
                .collect();
            assert_eq!(support.len(), 1);
        }
        assert_eq!(r.highest_roots().len(), 2);
        assert_eq!(r.highest_roots()[0].0, [1, 2, 2, 0]);
        assert_eq!(r.highest_roots()[1].0, [0, 0, 0, 1]);
    }

    #[test]
    fn height_and_dominance_examples() {
        let a2 = rs("A2");
        let g2 = rs("G2");
        assert_eq!(a2.height(a2.simple_root(0)), 1);
        assert_eq!(a2.height(&a2.highest_roots()[0]), 2);
        assert_eq!(g2.height(&-&g2.highest_roots()[0]), -5);

        let theta = a2.highest_roots()[0].clone();
        let a1 = a2.simple_root(0).clone();
        let a2s = a2.simple_root(1).clone();
        assert!(a2.dominance_leq(&(&theta - &a1), &theta));
        assert!(!a2.dominance_leq(&a1, &a2s));
        assert!(!a2.dominance_leq(&a2s, &a1));
        assert!(a2.dominance_leq(&RootVector::zero(2), &theta));
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        for i in 0..2 {
            assert_eq!(
                a2.pairing(a2.simple_root(i), &Coweight::fundamental(2, i)),
                q(1)
            );
        }
        let theta = a2.highest_roots()[0].clone();
        assert_eq!(a2.pairing(&theta, &Coweight::rho_check(2)), q(2));
        assert_eq!(
            a2.pairing(&-a2.simple_root(0), &Coweight::fundamental(2, 1)),
            q(0)
        );
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"] {
            let r = rs(t);
            let roots = r.roots();
            for a in roots {
                assert!(r.dominance_leq(a, a));
                for b in roots {
                    if r.dominance_leq(a, b) && r.dominance_leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in roots {
                        if r.dominance_leq(a, b) && r.dominance_leq(b, c) {
                            assert!(r.dominance_leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn invariant_form_is_symmetric_and_reflection_invariant() {
        for t in ["B3", "C3", "G2", "F4", "B3xA1"] {
            let r = rs(t);
            for u in r.roots() {
                for v in r.roots() {
                    assert_eq!(r.inner_product(u, v), r.inner_product(v, u));
                    for i in 0..r.rank() {
                        assert_eq!(
                            r.inner_product(&r.reflect(i, u), &r.reflect(i, v)),
                            r.inner_product(u, v),
                            "{t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parse_rejections_name_the_factor() {
        for (text, factor) in [
            ("B1", "B1"),
            ("A2xC2", "C2"),
            ("E9", "E9"),
            ("Q3", "Q3"),
            ("A", "A"),
            ("A2x", ""),
        ] {
            match CartanType::parse(text) {
                Err(Error::InvalidCartanType { factor: f, .. }) => assert_eq!(f, factor, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert_eq!(CartanType::parse("b3xa1").unwrap().to_string(), "B3xA1");
        assert_eq!(CartanType::parse(" g2 ").unwrap().rank(), 2);
    }

    proptest::proptest! {
        #[test]
        fn height_is_additive(a in proptest::collection::vec(-20i64..20, 4), b in proptest::collection::vec(-20i64..20, 4)) {
            let u = RootVector(a);
            let v = RootVector(b);
            proptest::prop_assert_eq!((&u + &v).height(), u.height() + v.height());
        }
    }
}
