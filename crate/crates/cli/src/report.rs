//! Assembles the analysis report, as deterministic JSON or readable text.
//!
//! A section appears with real content exactly when its analysis was
//! requested and its preconditions held; otherwise it carries a
//! machine-readable `error` reason.

use hrg_core::{
    analyze_hrg, spectral_regularity_check, bound_profile, eigendecompose, is_distance_regular,
    is_strongly_regular, classify_distance_regularity_with, tridiagonal_form, Cam, Distance, Graph,
    HrgError, HrgFailure, HrgReport,
};

use crate::json::{usizes, Json};

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub bounds: bool,
    pub spectral: bool,
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub fn render_report(input: &str, g: &Graph, opts: &AnalyzeOptions, format: Format) -> String {
    let report = build_report(input, g, opts);
    match format {
        Format::Json => report.render(),
        Format::Text => render_text(input, g, opts),
    }
}

fn cam_to_json(cam: &Cam) -> Json {
    Json::Array(
        cam.matrix()
            .iter()
            .map(|row| Json::Array(row.iter().map(|&x| Json::UInt(x)).collect()))
            .collect(),
    )
}

fn diameter_json(d: Distance) -> Json {
    match d {
        Distance::Finite(x) => Json::UInt(x as u64),
        Distance::Infinite => Json::Null,
    }
}

fn error_section(reason: &str) -> Json {
    Json::Object(vec![("error", Json::Str(reason.into()))])
}

fn failure_reason(e: &HrgError) -> &'static str {
    match e {
        HrgError::NotRegular => "not_regular",
        HrgError::NotHrg => "not_hrg",
        HrgError::Disconnected => "disconnected",
    }
}

pub fn build_report(input: &str, g: &Graph, opts: &AnalyzeOptions) -> Json {
    let dist = g.distances();
    let graph_section = Json::Object(vec![
        ("n", Json::UInt(g.order() as u64)),
        ("edges", Json::UInt(g.edge_count() as u64)),
        (
            "valency",
            g.valency().map_or(Json::Null, |k| Json::UInt(k as u64)),
        ),
        ("connected", Json::Bool(g.is_connected())),
        ("diameter", diameter_json(dist.diameter())),
    ]);

    let analysis = analyze_hrg(g);
    let hrg_section = match &analysis {
        Ok(report) => hrg_to_json(report),
        Err(e) => hrg_error_json(failure_reason(e)),
    };

    let classification = match &analysis {
        Ok(report) if report.is_hrg && g.is_connected() => {
            match classify_distance_regularity_with(g, report) {
                Ok(c) => {
                    let array = report.cam.as_ref().and_then(tridiagonal_form);
                    let srg = is_strongly_regular(g).ok().flatten();
                    Json::Object(vec![
                        ("index", Json::UInt(c.index as u64)),
                        ("diameter", Json::UInt(c.diameter as u64)),
                        ("drg_by_index", Json::Bool(c.drg_by_index)),
                        ("drg_direct", Json::Bool(c.drg_direct)),
                        (
                            "intersection_array",
                            array.map_or(Json::Null, |a| {
                                Json::Object(vec![
                                    ("b", crate::json::uints(a.b.iter().copied())),
                                    ("c", crate::json::uints(a.c.iter().copied())),
                                    ("a", crate::json::uints(a.a.iter().copied())),
                                ])
                            }),
                        ),
                        (
                            "strongly_regular",
                            srg.map_or(Json::Null, |(k, alpha, beta)| {
                                Json::Object(vec![
                                    ("k", Json::UInt(k)),
                                    ("alpha", Json::UInt(alpha)),
                                    ("beta", Json::UInt(beta)),
                                ])
                            }),
                        ),
                    ])
                }
                Err(e) => error_section(&e.to_string()),
            }
        }
        Ok(report) if !report.is_hrg => error_section("not_hrg"),
        Ok(_) => error_section("disconnected"),
        Err(e) => error_section(failure_reason(e)),
    };

    let mut fields = vec![
        ("input", Json::Str(input.into())),
        ("graph", graph_section),
        ("hrg", hrg_section),
        ("classification", classification),
    ];

    if opts.bounds {
        let section = match &analysis {
            Ok(report) => match bound_profile(g, report) {
                Ok(b) => Json::Object(vec![
                    ("b_max", crate::json::uints(b.b_max.iter().copied())),
                    ("c_min", crate::json::uints(b.c_min.iter().copied())),
                    ("c_max", crate::json::uints(b.c_max.iter().copied())),
                    ("star_holds", Json::Bool(b.star_holds)),
                    (
                        "star_witness",
                        b.star_witness.map_or(Json::Null, |(u, i, x)| {
                            usizes([u, i, x].iter())
                        }),
                    ),
                ]),
                Err(e) => error_section(&e.to_string()),
            },
            Err(e) => error_section(failure_reason(e)),
        };
        fields.push(("bounds", section));
    }

    if opts.spectral {
        fields.push(("spectral", spectral_section(g, &analysis, opts.tol)));
    }

    Json::Object(fields)
}

fn hrg_to_json(report: &HrgReport) -> Json {
    let reason = match &report.failure {
        Some(HrgFailure::CoarsestMismatch { .. }) => Some("coarsest_mismatch"),
        Some(HrgFailure::NoCompactCam) => Some("no_compact_cam"),
        None => None,
    };
    Json::Object(vec![
        ("is_hrg", Json::Bool(report.is_hrg)),
        (
            "index",
            report.index.map_or(Json::Null, |i| Json::UInt(i as u64)),
        ),
        (
            "cam",
            report.cam.as_ref().map_or(Json::Null, cam_to_json),
        ),
        (
            "s_sets",
            report.cam.as_ref().map_or(Json::Null, |cam| {
                Json::Array(cam.s_sets().iter().map(|s| usizes(s.iter())).collect())
            }),
        ),
        (
            "cell_sizes",
            report
                .cam
                .as_ref()
                .map_or(Json::Null, |cam| usizes(cam.cell_sizes().iter())),
        ),
        (
            "failure_witness",
            report
                .failure_witness()
                .map_or(Json::Null, |(a, b)| usizes([a, b].iter())),
        ),
        (
            "failure_reason",
            reason.map_or(Json::Null, |r| Json::Str(r.into())),
        ),
    ])
}

fn hrg_error_json(reason: &str) -> Json {
    Json::Object(vec![
        ("is_hrg", Json::Bool(false)),
        ("index", Json::Null),
        ("cam", Json::Null),
        ("s_sets", Json::Null),
        ("cell_sizes", Json::Null),
        ("failure_witness", Json::Null),
        ("failure_reason", Json::Str(reason.into())),
    ])
}

fn spectral_section(g: &Graph, analysis: &Result<HrgReport, HrgError>, tol: f64) -> Json {
    let spec = match eigendecompose(g, tol) {
        Ok(s) => s,
        Err(e) => return error_section(&e.to_string()),
    };
    let eigenvalues = Json::Array(
        spec.eigenvalues()
            .iter()
            .map(|&(value, mult)| {
                Json::Object(vec![
                    ("value", Json::Float(value)),
                    ("multiplicity", Json::UInt(mult as u64)),
                ])
            })
            .collect(),
    );
    let checks = match analysis {
        Ok(report) if report.is_hrg && g.is_connected() => {
            match spectral_regularity_check(g, report, &spec) {
                Ok(c) => Json::Object(vec![
                    ("idempotent_residual", Json::Float(c.idempotent_residual)),
                    ("intertwine_exact", Json::Bool(c.intertwine_exact)),
                    ("cell_constancy_max_dev", Json::Float(c.cell_constancy_dev)),
                ]),
                Err(e) => error_section(&e.to_string()),
            }
        }
        Ok(report) if !report.is_hrg => error_section("not_hrg"),
        Ok(_) => error_section("disconnected"),
        Err(e) => error_section(failure_reason(e)),
    };
    Json::Object(vec![("eigenvalues", eigenvalues), ("checks", checks)])
}

fn render_text(input: &str, g: &Graph, opts: &AnalyzeOptions) -> String {
    let mut out = String::new();
    let dist = g.distances();
    out.push_str(&format!("input: {input}\n"));
    out.push_str(&format!(
        "graph: n={} edges={} valency={} diameter={} connected={}\n",
        g.order(),
        g.edge_count(),
        g.valency().map_or("irregular".into(), |k| k.to_string()),
        dist.diameter(),
        g.is_connected()
    ));

    match analyze_hrg(g) {
        Err(e) => out.push_str(&format!("hrg: no ({e})\n")),
        Ok(report) if !report.is_hrg => {
            let reason = match report.failure {
                Some(HrgFailure::CoarsestMismatch { root_a, root_b }) => format!(
                    "coarsest quotients differ between roots {root_a} and {root_b}"
                ),
                Some(HrgFailure::NoCompactCam) => "no CAM of size below n".into(),
                None => "unknown".into(),
            };
            out.push_str(&format!("hrg: no ({reason})\n"));
        }
        Ok(report) => {
            let cam = report.cam.as_ref().expect("is_hrg implies cam");
            out.push_str(&format!("hrg: yes, index {}\n", report.index.expect("is_hrg")));
            out.push_str(&format!("cell sizes: {:?}\n", cam.cell_sizes()));
            out.push_str("cam:\n");
            for row in cam.matrix() {
                out.push_str("  [");
                let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                out.push_str(&cells.join(" "));
                out.push_str("]\n");
            }
            if g.is_connected() {
                if let Ok(c) = classify_distance_regularity_with(g, &report) {
                    out.push_str(&format!(
                        "classification: index={} diameter={} distance_regular={}\n",
                        c.index, c.diameter, c.drg_direct
                    ));
                }
                if let Ok(Some((k, a, b))) = is_strongly_regular(g) {
                    out.push_str(&format!("strongly regular: ({k}, {a}, {b})\n"));
                }
                if let Ok(Some(arr)) = is_distance_regular(g) {
                    out.push_str(&format!(
                        "intersection array: b={:?} c={:?} a={:?}\n",
                        arr.b, arr.c, arr.a
                    ));
                }
                if opts.bounds {
                    if let Ok(b) = bound_profile(g, &report) {
                        out.push_str(&format!(
                            "bounds: b_max={:?} c_min={:?} c_max={:?} star={}\n",
                            b.b_max,
                            b.c_min,
                            b.c_max,
                            if b.star_holds {
                                "holds".to_string()
                            } else {
                                format!("fails (witness {:?})", b.star_witness.expect("witness"))
                            }
                        ));
                    }
                }
                if opts.spectral {
                    if let Ok(spec) = eigendecompose(g, opts.tol) {
                        let ev: Vec<String> = spec
                            .eigenvalues()
                            .iter()
                            .map(|(v, m)| format!("{v:.6}^{m}"))
                            .collect();
                        out.push_str(&format!("spectrum: {}\n", ev.join(" ")));
                        if let Ok(c) = spectral_regularity_check(g, &report, &spec) {
                            out.push_str(&format!(
                                "spectral checks: intertwine_exact={} idempotent_residual={:.2e} cell_constancy_dev={:.2e}\n",
                                c.intertwine_exact, c.idempotent_residual, c.cell_constancy_dev
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}
