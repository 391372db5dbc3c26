//! Subconstituent checks at every vertex, in parallel.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use srnt_core::engine::{analyse_vertex, SrntCertificate, VertexReport};
use srnt_core::Graph;

pub type VertexOutcome = Result<VertexReport, srnt_core::Error>;

/// [`analyse_vertex`] at every vertex, in vertex order.
pub fn full_sweep(g: &Graph, cert: &SrntCertificate) -> Vec<VertexOutcome> {
    (0..g.vertex_count())
        .into_par_iter()
        .map(|v| analyse_vertex(g, cert, v))
        .collect()
}

/// Aggregate of a [`full_sweep`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepSummary {
    pub vertices: usize,
    /// Failed vertices with a one-line witness each.
    pub failures: Vec<(usize, String)>,
    pub block_identities: usize,
    pub annihilator: usize,
    /// Vertex count per diameter of `X₂`.
    pub diameters: BTreeMap<usize, usize>,
    /// Distinct eigenvalue multiplicity maps of `X₂`.
    pub spectra: BTreeSet<Vec<(i64, u64)>>,
    /// Vertices where the antipodal check ran, and where it held.
    pub antipodal: Option<(usize, usize)>,
    /// Vertex count per `(k, c, n)` of a certified `X₂`.
    pub x2_certified: BTreeMap<(usize, usize, usize), usize>,
    /// First vertex whose `X₂` is not SRNT, with the violation.
    pub x2_uncertified: Option<(usize, String)>,
    pub x2_uncertified_count: usize,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn from_outcomes(outcomes: &[VertexOutcome]) -> Self {
        let mut s = SweepSummary {
            vertices: outcomes.len(),
            ..Default::default()
        };
        for (v, outcome) in outcomes.iter().enumerate() {
            let rep = match outcome {
                Ok(rep) => rep,
                Err(e) => {
                    s.failures.push((v, e.to_string()));
                    continue;
                }
            };
            s.block_identities += rep.block_identities as usize;
            s.annihilator += rep.annihilator as usize;
            *s.diameters.entry(rep.diameter).or_default() += 1;
            if rep.annihilator {
                s.spectra
                    .insert(rep.multiplicities.iter().map(|(&e, &m)| (e, m)).collect());
            }
            if let Some(ok) = rep.antipodal {
                let (ran, held) = s.antipodal.get_or_insert((0, 0));
                *ran += 1;
                *held += ok as usize;
            }
            match &rep.x2_certificate {
                Ok(c) => *s.x2_certified.entry((c.k, c.c, c.n)).or_default() += 1,
                Err(violation) => {
                    s.x2_uncertified_count += 1;
                    s.x2_uncertified.get_or_insert((v, violation.to_string()));
                }
            }
            if !rep.passed() {
                let mut what = Vec::new();
                if !rep.block_identities {
                    what.push("block identities");
                }
                if !rep.annihilator {
                    what.push("annihilator");
                }
                if rep.antipodal == Some(false) {
                    what.push("antipodal");
                }
                s.failures.push((v, format!("{} failed", what.join(", "))));
            }
        }
        s
    }
}
