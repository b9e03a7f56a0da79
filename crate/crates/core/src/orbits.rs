//! The `2^l` orbits `S_I^0` of `G × G` on the compactification.
//!
//! Convention: for a subset `I` of simple-root indices, `Δ_I` is the set of
//! simple roots **not** indexed by `I`. So `I = ∅` is the open orbit (the
//! group itself, Levi = `G`) and `I = {1..l}` the closed orbit
//! `G/B × G/B⁻` (Levi = `T`). Library indices are 0-based; serialized
//! subsets are 1-based sorted lists.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// A subset of `{0, …, rank-1}` as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Self {
        assert!(rank <= 64);
        Subset(if rank == 64 {
            u64::MAX
        } else {
            (1u64 << rank) - 1
        })
    }

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn from_indices(indices: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if i >= rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            bits |= 1 << i;
        }
        Ok(Subset(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn complement(self, rank: usize) -> Subset {
        Subset(!self.0 & Subset::full(rank).0)
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | (1 << i))
    }

    /// Sorted 0-based members.
    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    /// Sorted 1-based members, the serialized form.
    pub fn one_based(self) -> Vec<usize> {
        self.indices().into_iter().map(|i| i + 1).collect()
    }

    /// All subsets of `{0..rank}` ordered by size, then lexicographically on
    /// the sorted member list.
    pub fn all(rank: usize) -> Vec<Subset> {
        assert!(rank < 64, "rank too large to enumerate subsets");
        let mut v: Vec<Subset> = (0..1u64 << rank).map(Subset).collect();
        v.sort_by_key(|s| (s.len(), s.indices()));
        v
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.one_based().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Dimension data of the orbit `S_I^0` and the subgroups attached to `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub subset: Subset,
    /// `Δ_I`, the complement of `I`.
    pub delta: Subset,
    /// `|Φ_I|`, roots in the span of `Δ_I`.
    pub phi_count: usize,
    /// `dim L_I = l + |Φ_I|`.
    pub dim_levi: usize,
    /// `dim U_I = N - |Φ_I^+|`.
    pub dim_unipotent: usize,
    pub dim_parabolic: usize,
    /// `dim G/P_I`.
    pub dim_flag: usize,
    /// `dim G_I = dim L_I - |I|`, the adjoint quotient of the Levi.
    pub dim_fiber: usize,
    pub dim_orbit: usize,
    pub dim_stabilizer: usize,
}

impl OrbitDatum {
    /// Checks the dimension identities every orbit must satisfy.
    pub fn check(&self, dim_g: usize) -> Result<()> {
        let i = self.subset.len();
        let checks = [
            ("orbits.dim_orbit", self.dim_orbit == dim_g - i),
            ("orbits.dim_stabilizer", self.dim_stabilizer == dim_g + i),
            (
                "orbits.total",
                self.dim_orbit + self.dim_stabilizer == 2 * dim_g,
            ),
            (
                "orbits.fibration",
                self.dim_orbit == 2 * self.dim_flag + self.dim_fiber,
            ),
            (
                "orbits.parabolic",
                self.dim_parabolic + self.dim_flag == dim_g,
            ),
        ];
        for (name, ok) in checks {
            if !ok {
                return Err(Error::invariant(
                    name,
                    alloc::format!("subset {}: {self:?}", self.subset),
                ));
            }
        }
        Ok(())
    }
}

pub fn levi_data(rs: &RootSystem, subset: Subset) -> Result<OrbitDatum> {
    let l = rs.rank();
    if let Some(bad) = subset.indices().into_iter().find(|&i| i >= l) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rank: l,
        });
    }
    let delta = subset.complement(l);
    let in_levi = |coords: &[i64]| {
        coords
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || delta.contains(i))
    };
    let phi_pos = rs.positive_roots().iter().filter(|v| in_levi(&v.0)).count();
    let phi_count = 2 * phi_pos;
    let n = rs.positive_count();
    let dim_g = rs.dim_g();
    let dim_levi = l + phi_count;
    let dim_unipotent = n - phi_pos;
    let dim_flag = dim_unipotent;
    let dim_parabolic = dim_levi + dim_unipotent;
    let dim_fiber = dim_levi - subset.len();
    // stabilizer: U_I × U_I^- × {(x, y) ∈ L_I × L_I : x y^{-1} ∈ Z(L_I)}, dim Z(L_I) = |I|
    let dim_stabilizer = 2 * dim_unipotent + dim_levi + subset.len();
    let datum = OrbitDatum {
        subset,
        delta,
        phi_count,
        dim_levi,
        dim_unipotent,
        dim_parabolic,
        dim_flag,
        dim_fiber,
        dim_orbit: 2 * dim_flag + dim_fiber,
        dim_stabilizer,
    };
    datum.check(dim_g)?;
    Ok(datum)
}

/// All orbits with the closure order `S_J ⊂ closure(S_I) ⟺ I ⊆ J`.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    pub rank: usize,
    pub data: Vec<OrbitDatum>,
    /// Covering pairs `(a, b)` of indices into `data` with `data[b].subset`
    /// equal to `data[a].subset` plus one element; `S_b` lies in the closure
    /// of `S_a`.
    pub hasse_edges: Vec<(usize, usize)>,
}

impl OrbitPoset {
    /// `S_J ⊂ closure(S_I)`.
    pub fn in_closure(&self, orbit_j: usize, orbit_i: usize) -> bool {
        self.data[orbit_i]
            .subset
            .is_subset_of(self.data[orbit_j].subset)
    }

    pub fn open_orbit(&self) -> &OrbitDatum {
        &self.data[0]
    }

    pub fn closed_orbit(&self) -> &OrbitDatum {
        self.data.last().expect("at least one orbit")
    }
}

pub fn orbit_poset(rs: &RootSystem) -> Result<OrbitPoset> {
    let l = rs.rank();
    let subsets = Subset::all(l);
    let data = subsets
        .iter()
        .map(|&s| levi_data(rs, s))
        .collect::<Result<Vec<_>>>()?;
    let position = |s: Subset| {
        subsets
            .iter()
            .position(|&t| t == s)
            .expect("every subset listed")
    };
    let mut hasse_edges = Vec::new();
    for (a, s) in subsets.iter().enumerate() {
        for i in 0..l {
            if !s.contains(i) {
                hasse_edges.push((a, position(s.with(i))));
            }
        }
    }
    Ok(OrbitPoset {
        rank: l,
        data,
        hasse_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(&CartanType::parse(t).unwrap())
    }

    #[test]
    fn levi_examples() {
        let a2 = rs("A2");
        let full = levi_data(&a2, Subset::full(2)).unwrap();
        assert!(full.delta.is_empty());
        assert_eq!(
            (full.dim_levi, full.dim_flag, full.dim_fiber, full.dim_orbit),
            (2, 3, 0, 6)
        );

        let one = levi_data(&a2, Subset::from_indices(&[0], 2).unwrap()).unwrap();
        assert_eq!(one.delta.one_based(), [2]);
        assert_eq!(one.phi_count, 2);
        assert_eq!(
            (one.dim_levi, one.dim_flag, one.dim_fiber, one.dim_orbit),
            (4, 2, 3, 7)
        );

        let a1 = levi_data(&rs("A1"), Subset::EMPTY).unwrap();
        assert_eq!((a1.dim_orbit, a1.dim_stabilizer), (3, 3));
    }

    #[test]
    fn out_of_range_subset_rejected() {
        assert_eq!(
            Subset::from_indices(&[2], 2),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        );
        assert!(matches!(
            levi_data(&rs("A2"), Subset::from_bits(0b100)),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        ));
    }

    #[test]
    fn poset_examples() {
        let dims = |t: &str| -> Vec<usize> {
            orbit_poset(&rs(t))
                .unwrap()
                .data
                .iter()
                .map(|d| d.dim_orbit)
                .collect()
        };
        assert_eq!(dims("A1"), [3, 2]);
        assert_eq!(dims("A2"), [8, 7, 7, 6]);
        let g2 = orbit_poset(&rs("G2")).unwrap();
        assert_eq!(g2.data.len(), 4);
        assert_eq!(g2.closed_orbit().dim_orbit, 12);
    }

    #[test]
    fn boolean_lattice_structure() {
        for t in [
            "A1", "A2", "A3", "B3", "C3", "G2", "D4", "F4", "E6", "A1xA1", "B3xA1",
        ] {
            let r = rs(t);
            let p = orbit_poset(&r).unwrap();
            let l = r.rank();
            assert_eq!(p.data.len(), 1 << l);
            assert_eq!(p.hasse_edges.len(), l << (l - 1));
            assert_eq!(
                p.data.iter().filter(|d| d.dim_orbit == r.dim_g()).count(),
                1
            );
            assert_eq!(
                p.data
                    .iter()
                    .filter(|d| d.dim_orbit + 1 == r.dim_g())
                    .count(),
                l
            );
            assert_eq!(p.closed_orbit().dim_orbit, 2 * r.positive_count());
            for d in &p.data {
                d.check(r.dim_g()).unwrap();
            }
            for a in 0..p.data.len() {
                for b in 0..p.data.len() {
                    let (sa, sb) = (p.data[a].subset, p.data[b].subset);
                    if sa != sb && sa.is_subset_of(sb) {
                        assert!(p.data[b].dim_orbit < p.data[a].dim_orbit);
                        assert!(p.in_closure(b, a));
                    }
                }
            }
            for &(a, b) in &p.hasse_edges {
                assert_eq!(p.data[b].subset.len(), p.data[a].subset.len() + 1);
                assert!(p.data[a].subset.is_subset_of(p.data[b].subset));
            }
        }
    }

    #[test]
    fn subset_ordering_and_display() {
        let all = Subset::all(3);
        let lists: Vec<Vec<usize>> = all.iter().map(|s| s.one_based()).collect();
        assert_eq!(
            lists,
            [
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 2, 3]
            ]
        );
        assert_eq!(alloc::format!("{}", all[5]), "{1,3}");
    }
}
