//! Per-n summaries behind `table`, `quotient` and `necklace`.

use rayon::prelude::*;
use serde::Serialize;
use zkgenus_core::necklace::{enumerate_necklaces, NecklaceTally};
use zkgenus_core::quotient::{branch_points_of, BranchPoint};
use zkgenus_core::{
    as_face_complex, build_real_mac_capped, certify, genus_closed_form, necklace_total,
    quotient_complex, quotient_genus_closed_form, quotient_genus_upper_bound, CubicalComplex,
    CyclicAction, QuotientComplex, Result, SimplicialComplex,
};

use crate::config::RunConfig;
use crate::render::{opt, verdict, Row};

pub fn polygon_mac(n: usize, ambient_cap: usize) -> Result<CubicalComplex> {
    build_real_mac_capped(&SimplicialComplex::polygon_boundary(n)?, ambient_cap)
}

/// Compute one row per n on the rayon pool; rows come back in order.
pub fn collect<R, F>(cfg: &RunConfig, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(usize) -> Result<R> + Sync + Send,
{
    cfg.ns().into_par_iter().map(f).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusRow {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub chi: i64,
    pub genus: Option<u64>,
    pub genus_closed_form: u64,
    pub necklaces: u64,
    pub chi_quotient: i64,
    pub quotient_genus: Option<u64>,
    pub quotient_genus_closed_form: u64,
    pub riemann_hurwitz: bool,
    pub all_agree: bool,
}

/// `χ(Z) = n·χ(Z/C_n) - Σ (n - n/isotropy)` on the two complexes given.
pub fn riemann_hurwitz_holds(c: &CubicalComplex, q: &QuotientComplex) -> bool {
    let n = c.n() as i64;
    let branch: i64 = branch_points_of(q)
        .iter()
        .map(|b| n - n / b.isotropy as i64)
        .sum();
    c.euler_characteristic() == n * q.euler_characteristic() - branch
}

impl GenusRow {
    pub fn compute(n: usize, ambient_cap: usize) -> Result<Self> {
        let c = polygon_mac(n, ambient_cap)?;
        let cert = certify(&as_face_complex(&c)?);
        let q = quotient_complex(&c, &CyclicAction::new(n)?)?;
        let qcert = certify(&q.to_face_complex()?);
        let genus_cf = genus_closed_form(n)?;
        let qgenus_cf = quotient_genus_closed_form(n)?;
        let necklaces = necklace_total(2, n as u64)?;
        let rh = riemann_hurwitz_holds(&c, &q);
        let chi_quotient = q.euler_characteristic();
        let all_agree = cert.genus == Some(genus_cf)
            && qcert.genus == Some(qgenus_cf)
            && rh
            && chi_quotient == necklaces as i64 - (1i64 << (n - 2));
        Ok(GenusRow {
            n,
            vertices: c.count(0),
            edges: c.count(1),
            faces: c.count(2),
            chi: c.euler_characteristic(),
            genus: cert.genus,
            genus_closed_form: genus_cf,
            necklaces,
            chi_quotient,
            quotient_genus: qcert.genus,
            quotient_genus_closed_form: qgenus_cf,
            riemann_hurwitz: rh,
            all_agree,
        })
    }
}

impl Row for GenusRow {
    fn headers() -> &'static [&'static str] {
        &[
            "n",
            "V",
            "E",
            "F",
            "chi",
            "genus",
            "genus_cf",
            "necklaces",
            "chi_q",
            "genus_q",
            "genus_q_cf",
            "rh",
            "agree",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.vertices.to_string(),
            self.edges.to_string(),
            self.faces.to_string(),
            self.chi.to_string(),
            opt(self.genus),
            self.genus_closed_form.to_string(),
            self.necklaces.to_string(),
            self.chi_quotient.to_string(),
            opt(self.quotient_genus),
            self.quotient_genus_closed_form.to_string(),
            verdict(self.riemann_hurwitz),
            if self.all_agree { "yes" } else { "no" }.to_string(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientRow {
    pub n: usize,
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub square_orbits: usize,
    pub chi: i64,
    pub closed: bool,
    pub orientable: bool,
    pub genus: Option<u64>,
    pub genus_closed_form: u64,
    pub genus_upper_bound: u64,
    pub branch_points: Vec<BranchPoint>,
    pub riemann_hurwitz: bool,
}

impl QuotientRow {
    pub fn compute(n: usize, ambient_cap: usize) -> Result<Self> {
        let c = polygon_mac(n, ambient_cap)?;
        let q = quotient_complex(&c, &CyclicAction::new(n)?)?;
        let cert = certify(&q.to_face_complex()?);
        let (v, e, f) = q.counts();
        Ok(QuotientRow {
            n,
            vertex_orbits: v,
            edge_orbits: e,
            square_orbits: f,
            chi: q.euler_characteristic(),
            closed: cert.closed && cert.connected,
            orientable: cert.orientable,
            genus: cert.genus,
            genus_closed_form: quotient_genus_closed_form(n)?,
            genus_upper_bound: quotient_genus_upper_bound(n)?,
            branch_points: branch_points_of(&q),
            riemann_hurwitz: riemann_hurwitz_holds(&c, &q),
        })
    }

    pub fn passes(&self) -> bool {
        self.closed
            && self.orientable
            && self.genus == Some(self.genus_closed_form)
            && self.genus_closed_form <= self.genus_upper_bound
            && self.riemann_hurwitz
    }
}

impl Row for QuotientRow {
    fn headers() -> &'static [&'static str] {
        &[
            "n",
            "V",
            "E",
            "F",
            "chi",
            "closed",
            "orientable",
            "genus",
            "genus_cf",
            "upper_bound",
            "branch_points",
            "rh",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let branch: Vec<String> = self
            .branch_points
            .iter()
            .map(|b| format!("{}/{}", b.representative, b.isotropy))
            .collect();
        vec![
            self.n.to_string(),
            self.vertex_orbits.to_string(),
            self.edge_orbits.to_string(),
            self.square_orbits.to_string(),
            self.chi.to_string(),
            verdict(self.closed),
            verdict(self.orientable),
            opt(self.genus),
            self.genus_closed_form.to_string(),
            self.genus_upper_bound.to_string(),
            branch.join(" "),
            verdict(self.riemann_hurwitz),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NecklaceRow {
    pub n: usize,
    pub k: u64,
    pub total: u64,
    pub aperiodic: u64,
    /// Class count by exhaustive enumeration; absent above the brute cap or
    /// for alphabets other than binary.
    pub enumerated: Option<u64>,
    pub partition_identity: bool,
    pub agree: bool,
}

impl NecklaceRow {
    pub fn compute(n: usize, k: u64, brute_cap: usize) -> Result<Self> {
        let tally = NecklaceTally::compute(k, n as u64)?;
        let total = necklace_total(k, n as u64)?;
        let enumerated = if k == 2 && n <= brute_cap {
            Some(enumerate_necklaces(n, brute_cap)?.len() as u64)
        } else {
            None
        };
        let partition_identity = tally.partition_identity_holds()?;
        let aperiodic = tally
            .aperiodic_by_divisor
            .get(&(n as u64))
            .copied()
            .unwrap_or(0);
        Ok(NecklaceRow {
            n,
            k,
            total,
            aperiodic,
            enumerated,
            partition_identity,
            agree: partition_identity
                && tally.total == total
                && enumerated.is_none_or(|e| e == total),
        })
    }
}

impl Row for NecklaceRow {
    fn headers() -> &'static [&'static str] {
        &[
            "n",
            "k",
            "necklaces",
            "aperiodic",
            "enumerated",
            "partition",
            "agree",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.k.to_string(),
            self.total.to_string(),
            self.aperiodic.to_string(),
            opt(self.enumerated),
            verdict(self.partition_identity),
            if self.agree { "yes" } else { "no" }.to_string(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn numbers(r: &GenusRow) -> [i64; 10] {
        [
            r.vertices as i64,
            r.edges as i64,
            r.faces as i64,
            r.chi,
            r.genus.unwrap() as i64,
            r.genus_closed_form as i64,
            r.necklaces as i64,
            r.chi_quotient,
            r.quotient_genus.unwrap() as i64,
            r.quotient_genus_closed_form as i64,
        ]
    }

    #[test]
    fn reference_rows() {
        let r3 = GenusRow::compute(3, 20).unwrap();
        assert_eq!(numbers(&r3), [8, 12, 6, 2, 0, 0, 4, 2, 0, 0]);
        let r4 = GenusRow::compute(4, 20).unwrap();
        assert_eq!(numbers(&r4), [16, 32, 16, 0, 1, 1, 6, 2, 0, 0]);
        let r6 = GenusRow::compute(6, 20).unwrap();
        assert_eq!(numbers(&r6), [64, 192, 96, -32, 17, 17, 14, -2, 2, 2]);
        for r in [r3, r4, r6] {
            assert!(r.riemann_hurwitz && r.all_agree);
        }
    }

    #[test]
    fn ambient_cap_is_enforced() {
        assert!(GenusRow::compute(8, 7).is_err());
    }

    #[test]
    fn quotient_row_n4() {
        let r = QuotientRow::compute(4, 20).unwrap();
        assert_eq!((r.vertex_orbits, r.edge_orbits, r.square_orbits), (6, 8, 4));
        assert!(r.passes());
        let labels: Vec<_> = r
            .branch_points
            .iter()
            .map(|b| b.representative.as_str())
            .collect();
        assert_eq!(labels, ["0000", "0101", "1111"]);
    }

    #[test]
    fn necklace_rows() {
        let r = NecklaceRow::compute(6, 2, 16).unwrap();
        assert_eq!((r.total, r.aperiodic, r.enumerated), (14, 9, Some(14)));
        assert!(r.agree);
        let r = NecklaceRow::compute(6, 3, 16).unwrap();
        assert_eq!((r.total, r.enumerated), (130, None));
        assert!(NecklaceRow::compute(18, 2, 16)
            .unwrap()
            .enumerated
            .is_none());
    }
}
