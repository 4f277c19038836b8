use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use zkgenus_core::embedding::one_skeleton;
use zkgenus_core::surface::{write_off, Projection};
use zkgenus_core::{as_face_complex, quotient_complex, triangulate, CyclicAction, Graph};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::rows::polygon_mac;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Written {
    pub n: usize,
    pub path: PathBuf,
    pub bytes: usize,
}

/// Artifacts for one n, as `(file name, contents)` pairs.
pub fn artifacts(
    n: usize,
    ambient_cap: usize,
    with_quotient: bool,
    projection: Option<&Projection>,
) -> Result<Vec<(String, String)>, CliError> {
    let default = Projection::default_for(n);
    let projection = projection.unwrap_or(&default);
    let c = polygon_mac(n, ambient_cap)?;
    let mut files = vec![
        (format!("z_n{n}.json"), c.to_json()? + "\n"),
        (format!("z_n{n}.edges"), one_skeleton(&c).to_edge_list()),
        (
            format!("z_n{n}.off"),
            write_off(&triangulate(&as_face_complex(&c)?)?, projection)?,
        ),
    ];
    if with_quotient {
        let q = quotient_complex(&c, &CyclicAction::new(n)?)?;
        let edges = q.edge_ends().iter().map(|&[a, b]| (a, b)).collect();
        let labels = (0..q.counts().0).map(|v| q.vertex_label(v)).collect();
        let graph = Graph::new(q.counts().0, edges)?.with_labels(labels)?;
        files.push((format!("quotient_n{n}.json"), q.to_json()? + "\n"));
        files.push((format!("quotient_n{n}.edges"), graph.to_edge_list()));
        files.push((
            format!("quotient_n{n}.off"),
            write_off(&triangulate(&q.to_face_complex()?)?, projection)?,
        ));
    }
    Ok(files)
}

pub fn run(
    cfg: &RunConfig,
    dir: &Path,
    with_quotient: bool,
    projection: Option<&Projection>,
) -> Result<Vec<Written>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut written = Vec::new();
    for n in cfg.ns() {
        for (name, contents) in artifacts(n, cfg.ambient_cap, with_quotient, projection)? {
            let path = dir.join(name);
            fs::write(&path, &contents).map_err(|e| CliError::io(&path, e))?;
            written.push(Written {
                n,
                path,
                bytes: contents.len(),
            });
        }
    }
    Ok(written)
}
