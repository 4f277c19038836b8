use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use zkgenus_core::embedding::verify_two_cell_with;
use zkgenus_core::necklace::{enumerate_necklaces, moreau_aperiodic, NecklaceTally};
use zkgenus_core::surface::{verify_orientation, Witness};
use zkgenus_core::{
    as_face_complex, certify, check_closed_surface, check_orientable, genus_closed_form,
    hypercube_graph, necklace_total, quotient_complex, quotient_genus_closed_form,
    rotation_from_complex, surgery_recurrence_check, trace_faces, CubicalComplex, CyclicAction,
    FaceComplex, Result, SurfaceCertificate,
};

use crate::config::{Check, RunConfig};
use crate::render::text_table;
use crate::rows::{polygon_mac, riemann_hurwitz_holds};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub check: Check,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub checks: Vec<Check>,
    pub results: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

impl Report {
    fn new(input: Option<String>, checks: Vec<Check>, results: Vec<CheckResult>) -> Self {
        let passed = results.iter().filter(|r| r.pass).count();
        let failed = results.len() - passed;
        Report {
            input,
            checks,
            passed,
            failed,
            pass: failed == 0,
            results,
        }
    }

    pub fn to_text(&self) -> String {
        let rows = self.results.iter().map(|r| {
            vec![
                r.n.map_or_else(|| "-".into(), |n| n.to_string()),
                r.check.to_string(),
                if r.pass { "pass" } else { "fail" }.to_string(),
                summary(&r.detail),
            ]
        });
        let mut out = text_table(&["n", "check", "result", "detail"], rows);
        out.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        out
    }
}

/// Flatten a detail object into `key=value` pairs, skipping bulky arrays.
fn summary(detail: &Value) -> String {
    let Value::Object(map) = detail else {
        return detail.to_string();
    };
    map.iter()
        .filter(|(_, v)| !v.is_array() && !v.is_object())
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Run the selected checks for every n in the configured range.
pub fn run_range(cfg: &RunConfig) -> Result<Report> {
    let per_n: Vec<Vec<CheckResult>> = cfg
        .ns()
        .into_par_iter()
        .map(|n| run_for_n(n, cfg))
        .collect::<Result<_>>()?;
    Ok(Report::new(
        None,
        cfg.checks.clone(),
        per_n.into_iter().flatten().collect(),
    ))
}

/// Run file-level checks on a face complex loaded from JSON.
pub fn run_input(name: String, f: &FaceComplex, checks: &[Check]) -> Report {
    let results = checks
        .iter()
        .map(|&check| {
            let (pass, detail) = match check {
                Check::Surface => surface_detail(&check_closed_surface(f)),
                Check::Orient => orient_detail(f, true),
                _ => unreachable!("filtered by the caller"),
            };
            CheckResult {
                n: None,
                check,
                pass,
                detail,
            }
        })
        .collect();
    Report::new(Some(name), checks.to_vec(), results)
}

fn run_for_n(n: usize, cfg: &RunConfig) -> Result<Vec<CheckResult>> {
    let c = polygon_mac(n, cfg.ambient_cap)?;
    let f = as_face_complex(&c)?;
    cfg.checks
        .iter()
        .map(|&check| {
            let (pass, detail) = match check {
                Check::Surface => {
                    let (pass, mut detail) = surface_detail(&check_closed_surface(&f));
                    let closed = genus_closed_form(n)?;
                    let cert = certify(&f);
                    detail["genus"] = json!(cert.genus);
                    detail["genus_closed_form"] = json!(closed);
                    (pass && cert.genus == Some(closed), detail)
                }
                Check::Orient => orient_detail(&f, false),
                Check::Embed => embed(&c)?,
                Check::Quotient => quotient(&c)?,
                Check::Rh => rh(&c)?,
                Check::Necklace => necklace(n, cfg.brute_cap)?,
                Check::Recurrence => recurrence(n)?,
            };
            Ok(CheckResult {
                n: Some(n),
                check,
                pass,
                detail,
            })
        })
        .collect()
}

fn surface_detail(cert: &SurfaceCertificate) -> (bool, Value) {
    let pass = cert.closed && cert.connected;
    let mut detail = json!({
        "closed": cert.closed,
        "connected": cert.connected,
        "euler_characteristic": cert.euler_characteristic,
    });
    if !pass {
        detail["violations"] = json!(cert.violations());
    }
    (pass, detail)
}

/// Orientability with its witness. The full orientation vector is only
/// included when asked, since it has one entry per face.
fn orient_detail(f: &FaceComplex, with_orientation: bool) -> (bool, Value) {
    let cert = match check_orientable(f) {
        Ok(cert) => cert,
        Err(e) => {
            let surface = check_closed_surface(f);
            return (
                false,
                json!({ "error": e.to_string(), "violations": surface.violations() }),
            );
        }
    };
    match &cert.witness {
        Witness::Orientation(o) => {
            let valid = verify_orientation(f, o);
            let mut detail = json!({ "orientable": cert.orientable, "witness_valid": valid });
            if with_orientation {
                detail["orientation"] = json!(o);
            }
            (cert.orientable && valid, detail)
        }
        Witness::Violations(v) => (false, json!({ "orientable": false, "violations": v })),
    }
}

fn embed(c: &CubicalComplex) -> Result<(bool, Value)> {
    let n = c.n();
    let g = hypercube_graph(n)?;
    let r = rotation_from_complex(c)?;
    let t = trace_faces(&g, &r)?;
    let expected = n << (n - 2);
    let all_quads = t.walks.iter().all(|w| w.len() == 4);
    let bijection = verify_two_cell_with(c, &g, &r)?;
    let closed = genus_closed_form(n)?;
    let pass = t.face_count() == expected && all_quads && bijection && t.genus == closed;
    Ok((
        pass,
        json!({
            "faces": t.face_count(),
            "expected_faces": expected,
            "all_quads": all_quads,
            "squares_match": bijection,
            "genus": t.genus,
        }),
    ))
}

fn quotient(c: &CubicalComplex) -> Result<(bool, Value)> {
    let n = c.n();
    let q = quotient_complex(c, &CyclicAction::new(n)?)?;
    let cert = certify(&q.to_face_complex()?);
    let closed = quotient_genus_closed_form(n)?;
    let necklaces = necklace_total(2, n as u64)?;
    let chi_expected = necklaces as i64 - (1i64 << (n - 2));
    let pass = cert.is_surface()
        && cert.genus == Some(closed)
        && cert.euler_characteristic == chi_expected;
    let mut detail = json!({
        "closed": cert.closed,
        "connected": cert.connected,
        "orientable": cert.orientable,
        "euler_characteristic": cert.euler_characteristic,
        "genus": cert.genus,
        "genus_closed_form": closed,
    });
    if !cert.is_surface() {
        detail["violations"] = json!(cert.violations());
    }
    Ok((pass, detail))
}

fn rh(c: &CubicalComplex) -> Result<(bool, Value)> {
    let n = c.n();
    let q = quotient_complex(c, &CyclicAction::new(n)?)?;
    let holds = riemann_hurwitz_holds(c, &q);
    Ok((
        holds,
        json!({
            "chi_cover": c.euler_characteristic(),
            "chi_quotient": q.euler_characteristic(),
            "degree": n,
        }),
    ))
}

fn necklace(n: usize, brute_cap: usize) -> Result<(bool, Value)> {
    let total = necklace_total(2, n as u64)?;
    let tally = NecklaceTally::compute(2, n as u64)?;
    let partition = tally.partition_identity_holds()?;
    let mut pass = partition && tally.total == total;
    let mut detail = json!({ "total": total, "partition_identity": partition });
    if n <= brute_cap {
        let classes = enumerate_necklaces(n, brute_cap)?;
        let mut by_period: BTreeMap<u64, u64> = BTreeMap::new();
        for cl in &classes {
            *by_period.entry(cl.period as u64).or_default() += 1;
        }
        let moreau_ok = by_period
            .iter()
            .map(|(&d, &count)| Ok(moreau_aperiodic(2, d)? == count))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|ok| ok);
        pass &= classes.len() as u64 == total && moreau_ok;
        detail["enumerated"] = json!(classes.len());
        detail["moreau_matches"] = json!(moreau_ok);
    }
    Ok((pass, detail))
}

fn recurrence(n: usize) -> Result<(bool, Value)> {
    let holds = surgery_recurrence_check(n)?;
    Ok((
        holds,
        json!({
            "genus": genus_closed_form(n)?,
            "genus_next": genus_closed_form(n + 1)?,
        }),
    ))
}
