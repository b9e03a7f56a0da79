//! Serializable reports. Field order and list order are fixed so identical
//! requests give byte-identical output.

use serde::Serialize;

use wonderful_core::bbcoh::{self, OneParamChoice};
use wonderful_core::linalg::Q;
use wonderful_core::orbits::orbit_poset;
use wonderful_core::realization::{self, slot_label};
use wonderful_core::symmetric::{self, SatakeDiagram};
use wonderful_core::toricfan::{self, Fan};
use wonderful_core::weyl::WeylGroup;
use wonderful_core::{CartanType, RootSystem, RootVector, Subset};

use crate::CliError;

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn rationals(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitRow {
    pub subset: Vec<usize>,
    pub levi_simple_roots: Vec<usize>,
    pub levi_root_count: usize,
    pub dim_levi: usize,
    pub dim_unipotent: usize,
    pub dim_parabolic: usize,
    pub dim_flag: usize,
    pub dim_fiber: usize,
    pub dim_orbit: usize,
    pub dim_stabilizer: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitsReport {
    pub cartan_type: String,
    pub rank: usize,
    pub dim_g: usize,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitRow>,
    /// `[a, b]`: orbit `b` is a codimension-one orbit in the closure of `a`.
    pub closure_covers: Vec<[usize; 2]>,
}

pub fn orbits(rs: &RootSystem) -> Result<OrbitsReport, CliError> {
    let poset = orbit_poset(rs)?;
    Ok(OrbitsReport {
        cartan_type: rs.ctype().to_string(),
        rank: rs.rank(),
        dim_g: rs.dim_g(),
        orbit_count: poset.data.len(),
        orbits: poset
            .data
            .iter()
            .map(|d| OrbitRow {
                subset: d.subset.one_based(),
                levi_simple_roots: d.delta.one_based(),
                levi_root_count: d.phi_count,
                dim_levi: d.dim_levi,
                dim_unipotent: d.dim_unipotent,
                dim_parabolic: d.dim_parabolic,
                dim_flag: d.dim_flag,
                dim_fiber: d.dim_fiber,
                dim_orbit: d.dim_orbit,
                dim_stabilizer: d.dim_stabilizer,
            })
            .collect(),
        closure_covers: poset.hasse_edges.iter().map(|&(a, b)| [a, b]).collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiEntry {
    pub degree: usize,
    pub coefficient: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiChecks {
    pub total_is_weyl_order_squared: bool,
    pub ends_are_one: bool,
    pub palindromic: bool,
    pub odd_degrees_vanish: bool,
    pub product_form_agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiReport {
    pub cartan_type: String,
    pub weyl_order: usize,
    pub complex_dimension: usize,
    pub poincare: String,
    pub y_factor: String,
    pub w_factor: String,
    pub betti: Vec<BettiEntry>,
    pub total: u64,
    pub checks: BettiChecks,
}

pub fn betti(rs: &RootSystem, group: &WeylGroup) -> Result<BettiReport, CliError> {
    let p = bbcoh::poincare_polynomial_x(group)?;
    let order = group.order() as u64;
    let top = 2 * rs.dim_g();
    let checks = BettiChecks {
        total_is_weyl_order_squared: p.eval_at_one() == order * order,
        ends_are_one: p.coeff(0) == 1 && p.coeff(top) == 1 && p.degree() == Some(top),
        palindromic: p.is_palindromic(),
        odd_degrees_vanish: p.terms().all(|(d, _)| d % 2 == 0),
        product_form_agrees: true,
    };
    let failed = [
        ("betti.total", checks.total_is_weyl_order_squared),
        ("betti.ends", checks.ends_are_one),
        ("betti.palindromic", checks.palindromic),
        ("betti.odd_degrees", checks.odd_degrees_vanish),
    ]
    .into_iter()
    .find(|(_, ok)| !ok);
    if let Some((name, _)) = failed {
        return Err(CliError::Invariant(format!(
            "[{name}] Poincaré polynomial {p}"
        )));
    }
    Ok(BettiReport {
        cartan_type: rs.ctype().to_string(),
        weyl_order: group.order(),
        complex_dimension: rs.dim_g(),
        poincare: p.to_string(),
        y_factor: bbcoh::y_factor(group).to_string(),
        w_factor: bbcoh::w_factor(group).to_string(),
        betti: p
            .terms()
            .map(|(degree, coefficient)| BettiEntry {
                degree,
                coefficient,
            })
            .collect(),
        total: p.eval_at_one(),
        checks,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Generator {
    /// Coordinates of `H` in the fundamental-coweight basis.
    pub h: Vec<String>,
    pub n: i64,
}

impl Generator {
    fn new(choice: &OneParamChoice) -> Self {
        Generator {
            h: rationals(&choice.h.0),
            n: choice.n,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightRow {
    pub first: Vec<i64>,
    pub second: Vec<i64>,
    pub eigenvalue: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPointRow {
    pub y: Vec<usize>,
    pub w: Vec<usize>,
    pub length_y: usize,
    pub length_w: usize,
    pub descents_y: usize,
    pub cell_dim: usize,
    pub weights: Vec<WeightRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPointsReport {
    pub cartan_type: String,
    pub generator: Generator,
    pub count: usize,
    pub fixed_points: Vec<FixedPointRow>,
}

pub fn fixed_points(
    rs: &RootSystem,
    group: &WeylGroup,
    limit: usize,
) -> Result<FixedPointsReport, CliError> {
    let count = group.order().saturating_mul(group.order());
    if count > limit {
        return Err(CliError::Usage(format!(
            "{} has {count} fixed points, above the limit {limit} (raise --fixed-point-limit)",
            rs.ctype()
        )));
    }
    let choice = bbcoh::choose_one_param(rs)?;
    let data = bbcoh::fixed_points(rs, group, &choice)?;
    let rows = data
        .iter()
        .map(|d| {
            let (y, w) = (group.element(d.y), group.element(d.w));
            FixedPointRow {
                y: one_based(y.word()),
                w: one_based(w.word()),
                length_y: y.length(),
                length_w: w.length(),
                descents_y: y.descent_count(),
                cell_dim: d.cell_dim,
                weights: d
                    .weights
                    .iter()
                    .map(|wt| WeightRow {
                        first: wt.first.0.clone(),
                        second: wt.second.0.clone(),
                        eigenvalue: choice.eigenvalue(rs, wt).to_string(),
                    })
                    .collect(),
            }
        })
        .collect();
    Ok(FixedPointsReport {
        cartan_type: rs.ctype().to_string(),
        generator: Generator::new(&choice),
        count,
        fixed_points: rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeRow {
    pub element: Vec<usize>,
    pub rays: Vec<usize>,
    pub halfspaces: Vec<Vec<i64>>,
    pub determinant: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sampling {
    pub samples: usize,
    pub seed: u64,
    pub complete: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FanReport {
    pub cartan_type: String,
    pub rank: usize,
    pub chamber_count: usize,
    pub ray_count: usize,
    /// Primitive ray generators in fundamental-coweight coordinates.
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<ConeRow>,
    pub smooth: bool,
    pub walls_paired: bool,
    pub sampling: Sampling,
}

pub fn fan(
    rs: &RootSystem,
    group: &WeylGroup,
    samples: usize,
    seed: u64,
) -> Result<FanReport, CliError> {
    let f = toricfan::build_fan(rs, group)?;
    let report = FanReport {
        cartan_type: rs.ctype().to_string(),
        rank: rs.rank(),
        chamber_count: f.cones.len(),
        ray_count: f.rays.len(),
        rays: f.rays.clone(),
        cones: f
            .cones
            .iter()
            .map(|c| ConeRow {
                element: one_based(group.element(c.w_index).word()),
                rays: c.ray_indices.clone(),
                halfspaces: c.halfspaces.clone(),
                determinant: c.determinant().to_string(),
            })
            .collect(),
        smooth: toricfan::check_smooth(&f),
        walls_paired: toricfan::check_walls(&f),
        sampling: Sampling {
            samples,
            seed,
            complete: toricfan::check_complete(&f, samples, seed)?,
        },
    };
    certify_fan(
        &report.cartan_type,
        report.smooth,
        report.walls_paired,
        report.sampling.complete,
    )?;
    Ok(report)
}

fn certify_fan(name: &str, smooth: bool, walls: bool, complete: bool) -> Result<(), CliError> {
    for (check, ok) in [
        ("fan.smooth", smooth),
        ("fan.walls", walls),
        ("fan.complete", complete),
    ] {
        if !ok {
            return Err(CliError::Invariant(format!(
                "[{check}] chamber fan of {name}"
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct RestrictedRow {
    pub coords: Vec<i64>,
    /// `(α - σα)/2` in simple-root coordinates.
    pub restriction: Vec<String>,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RestrictedFan {
    pub chamber_count: usize,
    pub ray_count: usize,
    pub smooth: bool,
    pub walls_paired: bool,
    pub sampling: Sampling,
}

#[derive(Debug, Clone, Serialize)]
pub struct SatakeReport {
    pub diagram: String,
    pub cartan_type: String,
    /// Rows of σ; column `i` is `σ(α_i)`.
    pub involution: Vec<Vec<i64>>,
    pub black: Vec<usize>,
    pub tau: Vec<usize>,
    pub imaginary_roots: Vec<Vec<i64>>,
    pub split_rank: usize,
    pub representatives: Vec<usize>,
    pub restricted_type: Option<String>,
    pub reduced: bool,
    pub restricted_simples: Vec<Vec<String>>,
    pub restricted_roots: Vec<RestrictedRow>,
    pub multiplicity_total: usize,
    pub little_weyl_order: usize,
    pub orbit_count: usize,
    pub orbit_closures: Vec<Vec<usize>>,
    pub fan: RestrictedFan,
}

fn restriction(v: &RootVector) -> Vec<String> {
    v.0.iter()
        .map(|&c| Q::new(i128::from(c), 2).to_string())
        .collect()
}

pub fn satake(
    rs: &RootSystem,
    sd: &SatakeDiagram,
    cap: usize,
    samples: usize,
    seed: u64,
) -> Result<SatakeReport, CliError> {
    let rep = symmetric::analyze(rs, sd, cap)?;
    let rrs = &rep.restricted;
    let fan_checks = restricted_fan_checks(&rep.fan, samples, seed)?;
    if rrs.rank > 0 {
        certify_fan(
            "restricted",
            fan_checks.smooth,
            fan_checks.walls_paired,
            fan_checks.sampling.complete,
        )?;
    }
    Ok(SatakeReport {
        diagram: sd.to_string(),
        cartan_type: rs.ctype().to_string(),
        involution: rep.involution.matrix.clone(),
        black: rep.involution.black.one_based(),
        tau: one_based(&rep.involution.tau),
        imaginary_roots: rep.imaginary.iter().map(|r| r.0.clone()).collect(),
        split_rank: rrs.rank,
        representatives: one_based(&rrs.representatives),
        restricted_type: rep.name.clone(),
        reduced: rrs.reduced,
        restricted_simples: rrs.simples.iter().map(restriction).collect(),
        restricted_roots: rrs
            .roots
            .iter()
            .map(|x| RestrictedRow {
                coords: x.coords.clone(),
                restriction: restriction(&x.doubled),
                multiplicity: x.multiplicity,
            })
            .collect(),
        multiplicity_total: rrs.multiplicity_total(),
        little_weyl_order: rep.little_weyl_order,
        orbit_count: rep.orbit_count,
        orbit_closures: Subset::all(rrs.rank)
            .iter()
            .map(|s| s.one_based())
            .collect(),
        fan: fan_checks,
    })
}

fn restricted_fan_checks(f: &Fan, samples: usize, seed: u64) -> Result<RestrictedFan, CliError> {
    let nonempty = !f.cones.is_empty();
    Ok(RestrictedFan {
        chamber_count: f.cones.len(),
        ray_count: f.rays.len(),
        smooth: nonempty && toricfan::check_smooth(f),
        walls_paired: nonempty && toricfan::check_walls(f),
        sampling: Sampling {
            samples,
            seed,
            complete: nonempty && toricfan::check_complete(f, samples, seed)?,
        },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TopWeight {
    pub first: Vec<i64>,
    pub second: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlueckerRow {
    pub n0: i64,
    pub term_count: usize,
    pub degrees: Vec<i64>,
    pub top_degree: i64,
    pub top_terms: usize,
    pub top_term: Vec<String>,
    pub top_coefficient: i64,
    pub top_weight: TopWeight,
    pub matches_limit: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RealizationReport {
    pub cartan_type: String,
    pub checks: Vec<CheckRow>,
    pub pluecker: Option<PlueckerRow>,
    pub all_passed: bool,
}

pub fn realization(ctype: &CartanType, allow_heavy: bool) -> Result<RealizationReport, CliError> {
    let rep = realization::verify(ctype, allow_heavy)?;
    let rs = RootSystem::new(ctype);
    Ok(RealizationReport {
        cartan_type: ctype.to_string(),
        all_passed: rep.all_passed(),
        checks: rep
            .checks
            .iter()
            .map(|c| CheckRow {
                claim: c.claim.clone(),
                computed: c.computed.clone(),
                expected: c.expected.clone(),
                pass: c.pass,
            })
            .collect(),
        pluecker: rep.pluecker.as_ref().map(|p| PlueckerRow {
            n0: p.n0,
            term_count: p.term_count,
            degrees: p.degrees.clone(),
            top_degree: p.top_degree,
            top_terms: p.top_terms,
            top_term: p.top_slots.iter().map(|&s| slot_label(&rs, s)).collect(),
            top_coefficient: p.top_coefficient,
            top_weight: TopWeight {
                first: p.top_weight.0 .0.clone(),
                second: p.top_weight.1 .0.clone(),
            },
            matches_limit: p.matches_limit,
        }),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct AllReport {
    pub cartan_type: String,
    pub seed: u64,
    pub orbits: OrbitsReport,
    pub betti: BettiReport,
    pub fixed_points: Option<FixedPointsReport>,
    pub fixed_points_omitted: Option<String>,
    pub fan: FanReport,
    pub realization: Option<RealizationReport>,
}

pub struct Settings {
    pub samples: usize,
    pub seed: u64,
    pub fixed_point_limit: usize,
    pub allow_heavy: bool,
}

pub fn all(rs: &RootSystem, group: &WeylGroup, s: &Settings) -> Result<AllReport, CliError> {
    let (fixed_points, fixed_points_omitted) = match fixed_points(rs, group, s.fixed_point_limit) {
        Ok(r) => (Some(r), None),
        Err(CliError::Usage(reason)) => (None, Some(reason)),
        Err(e) => return Err(e),
    };
    let realizable = realization::build_chevalley(rs.ctype()).is_ok();
    Ok(AllReport {
        cartan_type: rs.ctype().to_string(),
        seed: s.seed,
        orbits: orbits(rs)?,
        betti: betti(rs, group)?,
        fixed_points,
        fixed_points_omitted,
        fan: fan(rs, group, s.samples, s.seed)?,
        realization: if realizable {
            Some(realization(rs.ctype(), s.allow_heavy)?)
        } else {
            None
        },
    })
}
