//! JSON, CSV and plain-text rendering of reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::report::{
    AllReport, BettiReport, FanReport, FixedPointsReport, OrbitsReport, RealizationReport,
    SatakeReport,
};
use crate::{CliError, Format};

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Usage(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn set(v: &[usize]) -> String {
    format!("{{{}}}", join(v, ","))
}

fn vector<T: ToString>(v: &[T]) -> String {
    format!("({})", join(v, ","))
}

fn word(v: &[usize]) -> String {
    if v.is_empty() {
        "e".into()
    } else {
        v.iter().map(|i| format!("s{i}")).collect()
    }
}

pub fn orbits(r: &OrbitsReport, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &[
                "subset",
                "levi_simple_roots",
                "dim_levi",
                "dim_flag",
                "dim_fiber",
                "dim_orbit",
                "dim_stabilizer",
            ],
            r.orbits
                .iter()
                .map(|o| {
                    vec![
                        join(&o.subset, " "),
                        join(&o.levi_simple_roots, " "),
                        o.dim_levi.to_string(),
                        o.dim_flag.to_string(),
                        o.dim_fiber.to_string(),
                        o.dim_orbit.to_string(),
                        o.dim_stabilizer.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "{}: rank {}, dim G = {}, {} orbits",
                r.cartan_type, r.rank, r.dim_g, r.orbit_count
            )
            .unwrap();
            writeln!(
                s,
                "{:<12} {:<12} {:>5} {:>5} {:>6} {:>6} {:>6}",
                "I", "Levi", "levi", "flag", "fiber", "orbit", "stab"
            )
            .unwrap();
            for o in &r.orbits {
                writeln!(
                    s,
                    "{:<12} {:<12} {:>5} {:>5} {:>6} {:>6} {:>6}",
                    set(&o.subset),
                    set(&o.levi_simple_roots),
                    o.dim_levi,
                    o.dim_flag,
                    o.dim_fiber,
                    o.dim_orbit,
                    o.dim_stabilizer
                )
                .unwrap();
            }
            writeln!(s, "closure covers:").unwrap();
            for [a, b] in &r.closure_covers {
                writeln!(
                    s,
                    "  {} > {}",
                    set(&r.orbits[*a].subset),
                    set(&r.orbits[*b].subset)
                )
                .unwrap();
            }
            Ok(s)
        }
    }
}

pub fn betti(r: &BettiReport, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["degree", "coefficient"],
            r.betti
                .iter()
                .map(|b| vec![b.degree.to_string(), b.coefficient.to_string()])
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "{}: |W| = {}, dim X = {}",
                r.cartan_type, r.weyl_order, r.complex_dimension
            )
            .unwrap();
            writeln!(s, "P(t) = {}", r.poincare).unwrap();
            writeln!(s, "A(t) = {}", r.y_factor).unwrap();
            writeln!(s, "B(t) = {}", r.w_factor).unwrap();
            writeln!(s, "sum of Betti numbers = {}", r.total).unwrap();
            for b in &r.betti {
                writeln!(s, "  b_{} = {}", b.degree, b.coefficient).unwrap();
            }
            Ok(s)
        }
    }
}

pub fn fixed_points(r: &FixedPointsReport, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["y", "w", "length_y", "length_w", "descents_y", "cell_dim"],
            r.fixed_points
                .iter()
                .map(|p| {
                    vec![
                        join(&p.y, " "),
                        join(&p.w, " "),
                        p.length_y.to_string(),
                        p.length_w.to_string(),
                        p.descents_y.to_string(),
                        p.cell_dim.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "{}: {} fixed points, generator (nH, -H) with H = {} and n = {}",
                r.cartan_type,
                r.count,
                vector(&r.generator.h),
                r.generator.n
            )
            .unwrap();
            for p in &r.fixed_points {
                writeln!(
                    s,
                    "y = {}, w = {}: cell dimension {}",
                    word(&p.y),
                    word(&p.w),
                    p.cell_dim
                )
                .unwrap();
                for wt in &p.weights {
                    writeln!(
                        s,
                        "  ({}, {}) -> {}",
                        vector(&wt.first),
                        vector(&wt.second),
                        wt.eigenvalue
                    )
                    .unwrap();
                }
            }
            Ok(s)
        }
    }
}

pub fn fan(r: &FanReport, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["element", "rays", "determinant"],
            r.cones
                .iter()
                .map(|c| {
                    vec![
                        join(&c.element, " "),
                        join(&c.rays, " "),
                        c.determinant.clone(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "{}: {} chambers, {} rays",
                r.cartan_type, r.chamber_count, r.ray_count
            )
            .unwrap();
            writeln!(s, "smooth: {}", r.smooth).unwrap();
            writeln!(s, "walls paired: {}", r.walls_paired).unwrap();
            writeln!(
                s,
                "complete ({} samples, seed {}): {}",
                r.sampling.samples, r.sampling.seed, r.sampling.complete
            )
            .unwrap();
            writeln!(s, "rays:").unwrap();
            for (k, ray) in r.rays.iter().enumerate() {
                writeln!(s, "  {k}: {}", vector(ray)).unwrap();
            }
            writeln!(s, "cones:").unwrap();
            for c in &r.cones {
                writeln!(s, "  {}: rays {}", word(&c.element), set(&c.rays)).unwrap();
            }
            Ok(s)
        }
    }
}

pub fn satake(r: &SatakeReport, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["coords", "restriction", "multiplicity"],
            r.restricted_roots
                .iter()
                .map(|x| {
                    vec![
                        join(&x.coords, " "),
                        join(&x.restriction, " "),
                        x.multiplicity.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{}", r.diagram).unwrap();
            writeln!(s, "sigma (rows):").unwrap();
            for row in &r.involution {
                writeln!(s, "  {}", vector(row)).unwrap();
            }
            writeln!(s, "imaginary roots: {}", r.imaginary_roots.len()).unwrap();
            let name = r.restricted_type.as_deref().unwrap_or("unidentified");
            writeln!(
                s,
                "restricted root system: {name}, split rank {}",
                r.split_rank
            )
            .unwrap();
            for x in &r.restricted_roots {
                writeln!(s, "  {:<12} mult {}", vector(&x.coords), x.multiplicity).unwrap();
            }
            writeln!(s, "little Weyl group order: {}", r.little_weyl_order).unwrap();
            writeln!(s, "orbit closures: {}", r.orbit_count).unwrap();
            writeln!(
                s,
                "restricted fan: {} chambers, smooth {}, complete {}",
                r.fan.chamber_count, r.fan.smooth, r.fan.sampling.complete
            )
            .unwrap();
            Ok(s)
        }
    }
}

pub fn realization(r: &RealizationReport, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["claim", "computed", "expected", "pass"],
            r.checks
                .iter()
                .map(|c| {
                    vec![
                        c.claim.clone(),
                        c.computed.clone(),
                        c.expected.clone(),
                        c.pass.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{}: {} checks", r.cartan_type, r.checks.len()).unwrap();
            for c in &r.checks {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                writeln!(
                    s,
                    "{mark} {}: {} (expected {})",
                    c.claim, c.computed, c.expected
                )
                .unwrap();
            }
            if let Some(p) = &r.pluecker {
                writeln!(s, "wedge degrees: {}", join(&p.degrees, " ")).unwrap();
                writeln!(s, "top term z^{}: {}", p.top_degree, p.top_term.join(" ^ ")).unwrap();
            }
            Ok(s)
        }
    }
}

pub fn all(r: &AllReport, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => json(r),
        Format::Csv => Err(CliError::Usage(
            "csv holds a single table; use --format json or text with all".into(),
        )),
        Format::Text => {
            let mut s = String::new();
            s += &orbits(&r.orbits, fmt)?;
            s.push('\n');
            s += &betti(&r.betti, fmt)?;
            s.push('\n');
            match (&r.fixed_points, &r.fixed_points_omitted) {
                (Some(fp), _) => s += &fixed_points(fp, fmt)?,
                (None, Some(reason)) => writeln!(s, "fixed points omitted: {reason}").unwrap(),
                (None, None) => {}
            }
            s.push('\n');
            s += &fan(&r.fan, fmt)?;
            if let Some(real) = &r.realization {
                s.push('\n');
                s += &realization(real, fmt)?;
            }
            Ok(s)
        }
    }
}
