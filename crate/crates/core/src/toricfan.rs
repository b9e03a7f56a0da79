//! The Weyl-chamber fan of the toric variety `Z̃ = ∪_w (w, w)·Z`.
//!
//! Halfspace normals live in the character lattice (root coordinates) and
//! ray generators in the cocharacter lattice (fundamental-coweight
//! coordinates). A group element acting by the integer matrix `M` on root
//! coordinates acts by `M^{-T}` on coweight coordinates, which keeps the
//! pairing between the two invariant.
//!
//! Completeness is certified by seeded rational sampling together with an
//! exact check that every wall is shared by exactly two chambers; there is no
//! exact polyhedral covering test.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::rootsys::RootSystem;
use crate::weyl::WeylGroup;

/// Redraws allowed per sample before giving up on finding a point off the
/// walls.
pub const MAX_REDRAWS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub w_index: usize,
    /// `w·α_i` in root coordinates.
    pub halfspaces: Vec<Vec<i64>>,
    /// Columns `w·ω_j^∨` in fundamental-coweight coordinates.
    pub generators: Vec<Vec<Q>>,
    /// Indices into [`Fan::rays`], one per generator.
    pub ray_indices: Vec<usize>,
}

impl Cone {
    /// Generator columns as a square matrix (rows indexed by coordinate).
    pub fn generator_matrix(&self) -> Vec<Vec<Q>> {
        linalg::transpose(&self.generators)
    }

    pub fn determinant(&self) -> Q {
        linalg::determinant(&self.generator_matrix())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub rank: usize,
    pub cones: Vec<Cone>,
    /// Primitive integer ray generators, in order of first appearance.
    pub rays: Vec<Vec<i64>>,
}

impl Fan {
    /// Chambers of a finite reflection group. `actions[k]` is the matrix of
    /// the `k`-th element on simple-root coordinates (column `i` is the image
    /// of the `i`-th simple root); the base chamber is the dominant one.
    pub fn from_chambers(rank: usize, actions: &[Vec<Vec<i64>>]) -> Result<Fan> {
        let mut cones = Vec::with_capacity(actions.len());
        let mut rays: Vec<Vec<i64>> = Vec::new();
        let mut ray_lookup: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (k, m) in actions.iter().enumerate() {
            let mq: Vec<Vec<Q>> = m.iter().map(|r| linalg::to_q(r)).collect();
            let inv = linalg::inverse(&mq).ok_or_else(|| {
                Error::invariant(
                    "toricfan.invertible",
                    format!("chamber {k} has a singular action matrix"),
                )
            })?;
            // columns of M^{-T} are the rows of M^{-1}
            let generators: Vec<Vec<Q>> = inv;
            let halfspaces: Vec<Vec<i64>> = (0..rank)
                .map(|i| m.iter().map(|row| row[i]).collect())
                .collect();
            let ray_indices = generators
                .iter()
                .map(|g| {
                    let ray = linalg::primitive_integer(g);
                    *ray_lookup.entry(ray.clone()).or_insert_with(|| {
                        rays.push(ray);
                        rays.len() - 1
                    })
                })
                .collect();
            cones.push(Cone {
                w_index: k,
                halfspaces,
                generators,
                ray_indices,
            });
        }
        let fan = Fan { rank, cones, rays };
        for c in &fan.cones {
            for h in &c.halfspaces {
                for g in &c.generators {
                    let p: Q = h.iter().zip(g).map(|(&a, b)| q(a) * b).sum();
                    if p < Q::zero() {
                        return Err(Error::invariant(
                            "toricfan.dual_pairing",
                            format!(
                                "generator pairs negatively with a halfspace in chamber {}",
                                c.w_index
                            ),
                        ));
                    }
                }
            }
        }
        Ok(fan)
    }
}

/// One chamber per Weyl group element.
pub fn build_fan(rs: &RootSystem, group: &WeylGroup) -> Result<Fan> {
    let actions: Vec<Vec<Vec<i64>>> = group.elements().iter().map(|e| e.matrix(rs)).collect();
    Fan::from_chambers(rs.rank(), &actions)
}

/// Every maximal cone is unimodular over the cocharacter lattice.
pub fn check_smooth(fan: &Fan) -> bool {
    fan.cones.iter().all(|c| {
        c.generators
            .iter()
            .all(|g| g.iter().all(|x| x.is_integer()))
            && linalg::is_unit(&c.determinant())
    })
}

/// Every facet (ray set minus one ray) of a maximal cone is shared by
/// exactly two maximal cones.
pub fn check_walls(fan: &Fan) -> bool {
    let mut facets: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for c in &fan.cones {
        for skip in 0..c.ray_indices.len() {
            let mut f: Vec<usize> = c
                .ray_indices
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &r)| r)
                .collect();
            f.sort_unstable();
            *facets.entry(f).or_insert(0) += 1;
        }
    }
    !facets.is_empty() && facets.values().all(|&n| n == 2)
}

/// Where a point sits relative to one cone, from its coordinates in the
/// cone's generator basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    Interior,
    Boundary,
    Outside,
}

fn placement(coeffs: &[Q]) -> Placement {
    if coeffs.iter().any(|c| *c < Q::zero()) {
        Placement::Outside
    } else if coeffs.iter().any(Zero::is_zero) {
        Placement::Boundary
    } else {
        Placement::Interior
    }
}

/// Placement of `point` (coweight coordinates) in every cone of the fan.
pub fn locate(fan: &Fan, point: &[Q]) -> Vec<Placement> {
    fan.cones
        .iter()
        .map(|c| {
            let coeffs =
                linalg::solve_columns(&c.generators, point).expect("cone generators are a basis");
            placement(&coeffs)
        })
        .collect()
}

/// Seeded sampling certificate: every sample off the walls must lie in the
/// interior of exactly one cone. Combined with [`check_walls`].
pub fn check_complete(fan: &Fan, samples: usize, seed: u64) -> Result<bool> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if fan.cones.is_empty() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inverses: Vec<Vec<Vec<Q>>> = fan
        .cones
        .iter()
        .map(|c| linalg::inverse(&c.generator_matrix()).expect("cone generators are a basis"))
        .collect();
    let mut sampled_ok = true;
    for _ in 0..samples {
        let mut redraws = 0;
        let placements = loop {
            let point: Vec<Q> = (0..fan.rank)
                .map(|_| {
                    Q::new(
                        rng.random_range(-1000i128..=1000),
                        rng.random_range(1i128..=16),
                    )
                })
                .collect();
            let placements: Vec<Placement> = inverses
                .iter()
                .map(|inv| {
                    let coeffs: Vec<Q> = inv
                        .iter()
                        .map(|row| row.iter().zip(&point).map(|(a, b)| a * b).sum())
                        .collect();
                    placement(&coeffs)
                })
                .collect();
            if !placements.contains(&Placement::Boundary) {
                break placements;
            }
            redraws += 1;
            if redraws > MAX_REDRAWS {
                return Err(Error::InvalidArgument(format!(
                    "could not draw a sample off the walls after {MAX_REDRAWS} attempts"
                )));
            }
        };
        let interior = placements
            .iter()
            .filter(|p| **p == Placement::Interior)
            .count();
        if interior != 1 {
            sampled_ok = false;
        }
    }
    Ok(sampled_ok && check_walls(fan))
}

/// `W·{ω_1^∨, …, ω_l^∨}` by reflection closure on coweight coordinates,
/// independent of the Weyl group enumeration.
pub fn coweight_orbit_rays(rs: &RootSystem) -> Vec<Vec<i64>> {
    use crate::rootsys::Coweight;
    let l = rs.rank();
    let mut seen: BTreeMap<Vec<Q>, ()> = BTreeMap::new();
    let mut stack: Vec<Coweight> = (0..l).map(|i| Coweight::fundamental(l, i)).collect();
    for c in &stack {
        seen.insert(c.0.clone(), ());
    }
    while let Some(c) = stack.pop() {
        for i in 0..l {
            let r = rs.reflect_coweight(i, &c);
            if seen.insert(r.0.clone(), ()).is_none() {
                stack.push(r);
            }
        }
    }
    seen.keys().map(|v| linalg::primitive_integer(v)).collect()
}

/// Dominant test point `Σ ω_i^∨`.
pub fn dominant_point(rank: usize) -> Vec<Q> {
    alloc::vec![Q::one(); rank]
}
