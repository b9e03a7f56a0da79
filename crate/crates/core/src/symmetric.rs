//! Involutions of the root lattice from Satake diagrams, and the restricted
//! root system of the corresponding symmetric pair.
//!
//! Restricted roots `(α - σα)/2` are stored doubled, as the integer vectors
//! `α - σα` in simple-root coordinates, to stay in integer arithmetic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::orbits::Subset;
use crate::rootsys::{CartanType, Family, RootSystem, RootVector, SimpleType};
use crate::toricfan::Fan;

/// Dynkin diagram with black (imaginary) nodes and an arrow pairing on the
/// white ones. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeDiagram {
    pub ctype: CartanType,
    pub black: Subset,
    /// `arrows[i]` is the partner of white node `i` (itself if unpaired);
    /// black entries map to themselves.
    pub arrows: Vec<usize>,
}

impl SatakeDiagram {
    pub fn new(ctype: CartanType, black: &[usize], pairs: &[(usize, usize)]) -> Result<Self> {
        let l = ctype.rank();
        let mut bits = Subset::EMPTY;
        for &b in black {
            if b >= l {
                return Err(Error::InvalidSatake(format!(
                    "black node {} out of range 1..={l}",
                    b + 1
                )));
            }
            bits = bits.with(b);
        }
        let mut arrows: Vec<Option<usize>> = vec![None; l];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= l {
                    return Err(Error::InvalidSatake(format!(
                        "arrow node {} out of range 1..={l}",
                        x + 1
                    )));
                }
                if bits.contains(x) {
                    return Err(Error::InvalidSatake(format!(
                        "arrow ({},{}) touches black node {}",
                        a + 1,
                        b + 1,
                        x + 1
                    )));
                }
            }
            for (x, y) in [(a, b), (b, a)] {
                match arrows[x] {
                    Some(p) if p != y => {
                        return Err(Error::InvalidSatake(format!(
                            "arrows are not an involution: node {} paired with both {} and {}",
                            x + 1,
                            p + 1,
                            y + 1
                        )))
                    }
                    _ => arrows[x] = Some(y),
                }
            }
        }
        let arrows = arrows
            .iter()
            .enumerate()
            .map(|(i, p)| p.unwrap_or(i))
            .collect();
        Ok(SatakeDiagram {
            ctype,
            black: bits,
            arrows,
        })
    }

    /// Parses `TYPE;black=i,j,...;arrows=(a,b)(c,d)...` with 1-based node
    /// indices. Both sections are optional.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = text.split(';').map(str::trim);
        let ctype = CartanType::parse(parts.next().unwrap_or(""))?;
        let mut black = Vec::new();
        let mut pairs = Vec::new();
        let (mut seen_black, mut seen_arrows) = (false, false);
        for part in parts {
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidSatake(format!("expected key=value, got `{part}`")))?;
            match key.trim() {
                "black" if !seen_black => {
                    seen_black = true;
                    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        black.push(parse_node(item)?);
                    }
                }
                "arrows" if !seen_arrows => {
                    seen_arrows = true;
                    pairs = parse_pairs(value)?;
                }
                "black" | "arrows" => {
                    return Err(Error::InvalidSatake(format!(
                        "section `{}` given twice",
                        key.trim()
                    )))
                }
                other => return Err(Error::InvalidSatake(format!("unknown section `{other}`"))),
            }
        }
        SatakeDiagram::new(ctype, &black, &pairs)
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank()
    }

    /// Orbits of the arrow pairing on white nodes, each sorted, ordered by
    /// smallest member.
    pub fn white_orbits(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.rank() {
            if self.black.contains(i) {
                continue;
            }
            let j = self.arrows[i];
            if j >= i {
                out.push(if j == i { vec![i] } else { vec![i, j] });
            }
        }
        out
    }
}

impl fmt::Display for SatakeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};black=", self.ctype)?;
        for (k, b) in self.black.one_based().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(";arrows=")?;
        for orbit in self.white_orbits() {
            if let [a, b] = orbit[..] {
                write!(f, "({},{})", a + 1, b + 1)?;
            }
        }
        Ok(())
    }
}

fn parse_node(s: &str) -> Result<usize> {
    let n: usize = s
        .parse()
        .map_err(|_| Error::InvalidSatake(format!("`{s}` is not a node index")))?;
    if n == 0 {
        return Err(Error::InvalidSatake("node indices are 1-based".into()));
    }
    Ok(n - 1)
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::InvalidSatake(format!("malformed arrows near `{rest}`")))?;
        let (inner, tail) = body;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::InvalidSatake(format!("arrow `({inner})` needs two nodes")))?;
        out.push((parse_node(a.trim())?, parse_node(b.trim())?));
        rest = tail.trim_start();
    }
    Ok(out)
}

/// An involution of the root lattice; column `i` of `matrix` is `σ(α_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    pub matrix: Vec<Vec<i64>>,
    /// Simple roots fixed by σ.
    pub black: Subset,
    /// The white permutation read off from `σ(α_i) = -α_{τ(i)} - …`;
    /// identity on black nodes.
    pub tau: Vec<usize>,
}

impl Involution {
    pub fn apply(&self, v: &RootVector) -> RootVector {
        RootVector(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn image_of_simple(&self, i: usize) -> RootVector {
        RootVector(self.matrix.iter().map(|row| row[i]).collect())
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn reflection_matrix(rs: &RootSystem, j: usize) -> Vec<Vec<i64>> {
    let l = rs.rank();
    let cols: Vec<RootVector> = (0..l).map(|i| rs.reflect(j, rs.simple_root(i))).collect();
    (0..l)
        .map(|r| cols.iter().map(|c| c.0[r]).collect())
        .collect()
}

fn column(m: &[Vec<i64>], j: usize) -> RootVector {
    RootVector(m.iter().map(|row| row[j]).collect())
}

fn in_span(v: &RootVector, s: Subset) -> bool {
    v.0.iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || s.contains(i))
}

/// Longest element of the parabolic subgroup generated by `s_j, j ∈ S`, as a
/// matrix on simple-root coordinates.
pub fn longest_parabolic(rs: &RootSystem, s: Subset) -> Vec<Vec<i64>> {
    let l = rs.rank();
    let mut w: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(j) = s
        .indices()
        .into_iter()
        .find(|&j| column(&w, j).is_positive())
    {
        w = mat_mul(&w, &reflection_matrix(rs, j));
    }
    w
}

/// `σ = -w_S ∘ τ̂`, then the full validation suite.
pub fn build_involution(rs: &RootSystem, sd: &SatakeDiagram) -> Result<Involution> {
    if rs.ctype() != &sd.ctype {
        return Err(Error::InvalidArgument(format!(
            "diagram type {} does not match root system {}",
            sd.ctype,
            rs.ctype()
        )));
    }
    let l = rs.rank();
    let ws = longest_parabolic(rs, sd.black);
    let mut tau_hat = sd.arrows.clone();
    for j in sd.black.indices() {
        let image = -&column(&ws, j);
        tau_hat[j] = (0..l)
            .find(|&k| sd.black.contains(k) && rs.simple_root(k) == &image)
            .ok_or_else(|| {
                Error::InvalidInvolution(format!(
                    "black_automorphism: -w_S(α_{}) = {image} is not a black simple root",
                    j + 1
                ))
            })?;
    }
    let cols: Vec<RootVector> = (0..l).map(|i| -&column(&ws, tau_hat[i])).collect();
    let matrix = (0..l)
        .map(|r| cols.iter().map(|c| c.0[r]).collect())
        .collect();
    let sigma = validate(rs, matrix, Some((sd.black, &sd.arrows)))?;
    Ok(sigma)
}

/// Validates an arbitrary integer matrix as a σ; the black set is taken to be
/// the simple roots it fixes.
pub fn involution_from_matrix(rs: &RootSystem, matrix: Vec<Vec<i64>>) -> Result<Involution> {
    let l = rs.rank();
    if matrix.len() != l || matrix.iter().any(|r| r.len() != l) {
        return Err(Error::InvalidInvolution(format!(
            "shape: expected a {l}x{l} matrix"
        )));
    }
    validate(rs, matrix, None)
}

fn reject(check: &str, detail: String) -> Error {
    Error::InvalidInvolution(format!("{check}: {detail}"))
}

fn validate(
    rs: &RootSystem,
    matrix: Vec<Vec<i64>>,
    diagram: Option<(Subset, &[usize])>,
) -> Result<Involution> {
    let l = rs.rank();
    let square = mat_mul(&matrix, &matrix);
    if (0..l).any(|i| (0..l).any(|j| square[i][j] != i64::from(i == j))) {
        return Err(reject("involutive", "σ² is not the identity".into()));
    }
    let mut sigma = Involution {
        matrix,
        black: Subset::EMPTY,
        tau: (0..l).collect(),
    };
    for alpha in rs.roots() {
        let image = sigma.apply(alpha);
        if rs.index_of(&image).is_none() {
            return Err(reject(
                "preserves_roots",
                format!("σ{alpha} = {image} is not a root"),
            ));
        }
    }
    let fixed = (0..l).filter(|&i| sigma.image_of_simple(i) == *rs.simple_root(i));
    let black = fixed.fold(Subset::EMPTY, |s, i| s.with(i));
    if let Some((expected, _)) = diagram {
        if black != expected {
            return Err(reject(
                "fixes_black",
                format!("σ fixes simple roots {black}, diagram colours {expected} black"),
            ));
        }
    }
    sigma.black = black;
    for alpha in rs.roots().iter().filter(|a| in_span(a, black)) {
        if sigma.apply(alpha) != *alpha {
            return Err(reject(
                "fixes_black",
                format!("σ moves {alpha} in the black span"),
            ));
        }
    }
    // σ(α_i) = -α_j - (nonnegative black combination) for white i
    for i in (0..l).filter(|&i| !black.contains(i)) {
        let neg = -&sigma.image_of_simple(i);
        let whites: Vec<usize> = (0..l)
            .filter(|&k| !black.contains(k) && neg.0[k] != 0)
            .collect();
        let ok = whites.len() == 1 && neg.0[whites[0]] == 1 && neg.0.iter().all(|&c| c >= 0);
        if !ok {
            return Err(reject(
                "white_form",
                format!(
                    "σ(α_{}) = {} is not -α_j minus black simples",
                    i + 1,
                    sigma.image_of_simple(i)
                ),
            ));
        }
        sigma.tau[i] = whites[0];
        if let Some((_, arrows)) = diagram {
            if arrows[i] != whites[0] {
                return Err(reject(
                    "white_form",
                    format!(
                        "σ(α_{}) involves α_{}, arrows say α_{}",
                        i + 1,
                        whites[0] + 1,
                        arrows[i] + 1
                    ),
                ));
            }
        }
    }
    for alpha in rs.positive_roots() {
        let image = sigma.apply(alpha);
        if image.is_positive() && image != *alpha {
            return Err(reject(
                "positivity",
                format!(
                    "{alpha} and σ{alpha} = {image} are both positive but {alpha} is not imaginary"
                ),
            ));
        }
    }
    Ok(sigma)
}

/// Roots fixed by σ. Must coincide with the roots in the span of the black
/// simple roots.
pub fn imaginary_roots(rs: &RootSystem, sigma: &Involution) -> Result<Vec<RootVector>> {
    let fixed: Vec<RootVector> = rs
        .roots()
        .iter()
        .filter(|a| sigma.apply(a) == **a)
        .cloned()
        .collect();
    let span: Vec<RootVector> = rs
        .roots()
        .iter()
        .filter(|a| in_span(a, sigma.black))
        .cloned()
        .collect();
    if fixed != span {
        return Err(Error::invariant(
            "symmetric.imaginary_span",
            format!(
                "{} fixed roots but {} roots in the black span",
                fixed.len(),
                span.len()
            ),
        ));
    }
    Ok(fixed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedRoot {
    /// `α - σα` in simple-root coordinates.
    pub doubled: RootVector,
    /// Coordinates in the simple restricted roots; all ≥ 0 or all ≤ 0.
    pub coords: Vec<i64>,
    pub multiplicity: usize,
}

impl RestrictedRoot {
    pub fn is_positive(&self) -> bool {
        self.coords.iter().any(|&c| c > 0)
    }

    /// `(α - σα)/2` as rational simple-root coordinates.
    pub fn restriction(&self) -> Vec<Q> {
        self.doubled
            .0
            .iter()
            .map(|&c| Q::new(i128::from(c), 2))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedRootSystem {
    pub rank: usize,
    /// White τ-orbit representatives defining the simple restricted roots.
    pub representatives: Vec<usize>,
    pub simples: Vec<RootVector>,
    /// Positives first, then negatives, each by height in restricted
    /// coordinates then descending lexicographic order.
    pub roots: Vec<RestrictedRoot>,
    pub reduced: bool,
    /// `2(d_i, d_j)/(d_i, d_i)` for the simple restricted roots.
    pub cartan: Vec<Vec<i64>>,
}

impl RestrictedRootSystem {
    pub fn index_of(&self, doubled: &RootVector) -> Option<usize> {
        self.roots.iter().position(|r| &r.doubled == doubled)
    }

    /// Roots whose half is not a restricted root.
    pub fn indivisible(&self) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&k| {
                let d = &self.roots[k].doubled;
                !(d.0.iter().all(|c| c % 2 == 0)
                    && self
                        .index_of(&RootVector(d.0.iter().map(|c| c / 2).collect()))
                        .is_some())
            })
            .collect()
    }

    pub fn multiplicity_total(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }
}

pub fn restricted_roots(rs: &RootSystem, sigma: &Involution) -> Result<RestrictedRootSystem> {
    let l = rs.rank();
    let imaginary = imaginary_roots(rs, sigma)?;
    let mut fibers: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for alpha in rs.roots() {
        let d = alpha - &sigma.apply(alpha);
        if !d.is_zero() {
            *fibers.entry(d.0).or_insert(0) += 1;
        }
    }
    let mut representatives = Vec::new();
    for i in 0..l {
        if !sigma.black.contains(i) && sigma.tau[i] >= i {
            representatives.push(i);
        }
    }
    let r = representatives.len();
    let simples: Vec<RootVector> = representatives
        .iter()
        .map(|&i| rs.simple_root(i) - &sigma.apply(rs.simple_root(i)))
        .collect();
    let columns: Vec<Vec<Q>> = simples.iter().map(|s| linalg::to_q(&s.0)).collect();
    if linalg::rank(&columns) != r {
        return Err(Error::invariant(
            "symmetric.simple_independent",
            "simple restricted roots are dependent",
        ));
    }
    let mut roots = Vec::with_capacity(fibers.len());
    for (d, multiplicity) in fibers {
        let coeffs = linalg::solve_columns(&columns, &linalg::to_q(&d))
            .and_then(|c| linalg::to_integers(&c))
            .ok_or_else(|| {
                Error::invariant(
                    "symmetric.integral",
                    format!(
                        "{} is not an integral combination of simple restricted roots",
                        RootVector(d.clone())
                    ),
                )
            })?;
        if coeffs.iter().any(|&c| c > 0) && coeffs.iter().any(|&c| c < 0) {
            return Err(Error::invariant(
                "symmetric.sign_coherent",
                format!("mixed signs {coeffs:?}"),
            ));
        }
        roots.push(RestrictedRoot {
            doubled: RootVector(d),
            coords: coeffs,
            multiplicity,
        });
    }
    roots.sort_by_key(|x| {
        let h: i64 = x.coords.iter().sum();
        (
            h < 0,
            h.abs(),
            Reverse(x.coords.iter().map(|c| c.abs()).collect::<Vec<_>>()),
        )
    });
    let total: usize = roots.iter().map(|x| x.multiplicity).sum();
    if total != rs.roots().len() - imaginary.len() {
        return Err(Error::invariant(
            "symmetric.multiplicity_sum",
            format!(
                "multiplicities sum to {total}, expected {}",
                rs.roots().len() - imaginary.len()
            ),
        ));
    }
    let mut cartan = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            let (di, dj) = (linalg::to_q(&simples[i].0), linalg::to_q(&simples[j].0));
            let v = q(2) * rs.inner_product_q(&di, &dj) / rs.inner_product_q(&di, &di);
            cartan[i][j] = linalg::to_integers(&[v]).ok_or_else(|| {
                Error::invariant(
                    "symmetric.cartan_integral",
                    format!("entry ({i},{j}) = {v}"),
                )
            })?[0];
        }
    }
    let mut rrs = RestrictedRootSystem {
        rank: r,
        representatives,
        simples,
        roots,
        reduced: true,
        cartan,
    };
    rrs.reduced = rrs.indivisible().len() == rrs.roots.len();
    Ok(rrs)
}

/// Generated by reflections in the indivisible restricted roots; elements are
/// permutations of `rrs.roots`, in BFS order from the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LittleWeylGroup {
    pub elements: Vec<Vec<u16>>,
}

impl LittleWeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Action on simple restricted coordinates; column `k` is the image of the
    /// `k`-th simple restricted root.
    pub fn matrix(&self, rrs: &RestrictedRootSystem, element: usize) -> Vec<Vec<i64>> {
        let perm = &self.elements[element];
        let cols: Vec<&Vec<i64>> = rrs
            .simples
            .iter()
            .map(|s| &rrs.roots[perm[rrs.index_of(s).expect("simple is a root")] as usize].coords)
            .collect();
        (0..rrs.rank)
            .map(|r| cols.iter().map(|c| c[r]).collect())
            .collect()
    }
}

fn reflect_q(rs: &RootSystem, gamma: &[Q], v: &[Q]) -> Vec<Q> {
    let c = q(2) * rs.inner_product_q(v, gamma) / rs.inner_product_q(gamma, gamma);
    v.iter().zip(gamma).map(|(a, b)| a - c * b).collect()
}

pub fn little_weyl_group(
    rs: &RootSystem,
    rrs: &RestrictedRootSystem,
    cap: usize,
) -> Result<LittleWeylGroup> {
    if rrs.roots.is_empty() {
        return Err(Error::InvalidArgument(
            "restricted root system is empty".into(),
        ));
    }
    let lookup: BTreeMap<Vec<Q>, usize> = rrs
        .roots
        .iter()
        .enumerate()
        .map(|(k, x)| (linalg::to_q(&x.doubled.0), k))
        .collect();
    let mut generators: Vec<Vec<u16>> = Vec::new();
    for g in rrs.indivisible() {
        let gamma = linalg::to_q(&rrs.roots[g].doubled.0);
        let perm = rrs
            .roots
            .iter()
            .map(|x| {
                let image = reflect_q(rs, &gamma, &linalg::to_q(&x.doubled.0));
                lookup.get(&image).map(|&k| k as u16).ok_or_else(|| {
                    Error::invariant(
                        "symmetric.reflection_closed",
                        "a reflection moves a restricted root off the system",
                    )
                })
            })
            .collect::<Result<Vec<u16>>>()?;
        if rrs
            .roots
            .iter()
            .zip(&perm)
            .any(|(x, &k)| x.multiplicity != rrs.roots[k as usize].multiplicity)
        {
            return Err(Error::invariant(
                "symmetric.multiplicity_invariant",
                "a reflection changes a multiplicity",
            ));
        }
        if !generators.contains(&perm) {
            generators.push(perm);
        }
    }
    let identity: Vec<u16> = (0..rrs.roots.len() as u16).collect();
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity];
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in &generators {
            let next: Vec<u16> = g.iter().map(|&k| current[k as usize]).collect();
            if seen.insert(next.clone()) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        cap,
                        partial: elements.len(),
                    });
                }
                elements.push(next);
            }
        }
    }
    Ok(LittleWeylGroup { elements })
}

/// Restricted chamber fan, one chamber per element of the little Weyl group.
pub fn restricted_fan(rrs: &RestrictedRootSystem, group: &LittleWeylGroup) -> Result<Fan> {
    let actions: Vec<Vec<Vec<i64>>> = (0..group.order()).map(|k| group.matrix(rrs, k)).collect();
    Fan::from_chambers(rrs.rank, &actions)
}

/// Orbit closures of the compactified symmetric space, indexed by subsets of
/// the simple restricted roots.
pub fn symmetric_orbits(rrs: &RestrictedRootSystem) -> Vec<Subset> {
    Subset::all(rrs.rank)
}

/// Names the restricted root system, e.g. `A2`, `BC1`, `A1xA1`.
pub fn classify(rrs: &RestrictedRootSystem) -> Option<String> {
    let r = rrs.rank;
    if r == 0 {
        return Some("0".into());
    }
    let mut component = vec![usize::MAX; r];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..r {
        if component[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        component[start] = id;
        while let Some(i) = stack.pop() {
            members.push(i);
            for j in 0..r {
                if component[j] == usize::MAX && rrs.cartan[i][j] != 0 {
                    component[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    let indivisible = rrs.indivisible();
    let divisible: Vec<usize> = (0..rrs.roots.len())
        .filter(|k| !indivisible.contains(k))
        .collect();
    let mut names = Vec::new();
    for members in &comps {
        let sub: Vec<Vec<i64>> = members
            .iter()
            .map(|&i| members.iter().map(|&j| rrs.cartan[i][j]).collect())
            .collect();
        let k = members.len();
        let t = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ]
        .into_iter()
        .filter_map(|f| SimpleType::new(f, k).ok())
        .find(|t| isomorphic(&t.cartan_matrix(), &sub))?;
        let non_reduced = divisible.iter().any(|&d| {
            let c = &rrs.roots[d].coords;
            (0..r).all(|i| c[i] == 0 || members.contains(&i))
        });
        names.push(if non_reduced {
            format!("BC{k}")
        } else {
            t.to_string()
        });
    }
    Some(names.join("x"))
}

/// Cartan matrices equal up to simultaneous index permutation.
fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || (0..i).any(|p| a[i][p] != b[j][map[p]] || a[p][i] != b[map[p]][j]) {
                continue;
            }
            used[j] = true;
            map.push(j);
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

/// Everything computed from one diagram.
#[derive(Debug, Clone)]
pub struct SatakeReport {
    pub diagram: SatakeDiagram,
    pub involution: Involution,
    pub imaginary: Vec<RootVector>,
    pub restricted: RestrictedRootSystem,
    pub name: Option<String>,
    pub little_weyl_order: usize,
    pub orbit_count: usize,
    pub fan: Fan,
}

pub fn analyze(rs: &RootSystem, sd: &SatakeDiagram, cap: usize) -> Result<SatakeReport> {
    let involution = build_involution(rs, sd)?;
    let imaginary = imaginary_roots(rs, &involution)?;
    let restricted = restricted_roots(rs, &involution)?;
    let (little_weyl_order, fan) = if restricted.rank == 0 {
        (
            1,
            Fan {
                rank: 0,
                cones: Vec::new(),
                rays: Vec::new(),
            },
        )
    } else {
        let group = little_weyl_group(rs, &restricted, cap)?;
        (group.order(), restricted_fan(&restricted, &group)?)
    };
    Ok(SatakeReport {
        diagram: sd.clone(),
        name: classify(&restricted),
        orbit_count: symmetric_orbits(&restricted).len(),
        involution,
        imaginary,
        restricted,
        little_weyl_order,
        fan,
    })
}
