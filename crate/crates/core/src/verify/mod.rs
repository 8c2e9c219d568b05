//! Executable checks of the extremal statements about unicyclic graphs.
//!
//! Exhaustive checks all draw from [`enumerate_unicyclic`], score every
//! graph with [`hosoya`], and compare the ranking against an expected
//! pattern of named family members (matched by canonical code, never by
//! labels). A seeded 5% sample of small graphs is re-counted by brute force
//! on every run.
//!
//! [`enumerate_unicyclic`]: crate::enumerate::enumerate_unicyclic
//! [`hosoya`]: crate::hosoya::hosoya

mod claims;
mod ordering;
mod paths;
mod report;

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{self, CanonicalCode};
use crate::enumerate::{self, EnumError, Unicyclic};
use crate::families::{family_catalog, FamilyError, FamilySpec};
use crate::fib::BigNat;
use crate::graph::Graph;
use crate::hosoya::{hosoya, hosoya_bruteforce};

pub use claims::{l1_chain, verify_claims, verify_identities, MAX_CLAIMS_ORDER, MAX_IDENTITY_RANGE};
pub use ordering::{
    expected_second_max, lollipop_classes, verify_girth_max, verify_main_theorem, verify_main_theorem_with,
    verify_noncycle_maximum, verify_second_max, verify_small_tables, OrderingMode, OrderingReport, SecondMaxCase,
    MAX_FORMULA_ORDER,
};
pub use paths::{
    path_position_order, random_connected_graph, slide_corpus, verify_path_position_chain, verify_path_slide,
    SlideInstance,
};
pub use report::{
    csv_rows, render_csv, CheckResult, NamedValue, RankedEntry, RankedGraph, Verdict, Witness, CSV_HEADER,
};

/// Seed for the brute-force spot checks.
pub const SPOT_CHECK_SEED: u64 = 0x5EED_2024;

/// Fraction of eligible graphs re-counted by brute force.
pub const SPOT_CHECK_RATE: f64 = 0.05;

/// Graphs with at most this many edges are eligible for spot checks.
pub const SPOT_CHECK_MAX_EDGES: usize = 16;

/// How many leading entries of a ranking list their graphs.
const LISTED_ENTRIES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{check}: {param} = {value} outside {range}")]
    OutOfRange {
        check: &'static str,
        param: &'static str,
        value: usize,
        range: String,
    },
    #[error("malformed slide instance: {0}")]
    MalformedTriple(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

pub(crate) fn require(
    check: &'static str,
    param: &'static str,
    value: usize,
    range: std::ops::RangeInclusive<usize>,
) -> Result<(), VerifyError> {
    if range.contains(&value) {
        Ok(())
    } else {
        Err(VerifyError::OutOfRange {
            check,
            param,
            value,
            range: format!("{}..={}", range.start(), range.end()),
        })
    }
}

/// An enumerated graph with its Hosoya index.
#[derive(Debug, Clone)]
pub struct Scored {
    pub code: CanonicalCode,
    pub girth: usize,
    pub graph: Graph,
    pub z: BigNat,
}

/// Scored enumeration of order `n`, plus the outcome of the spot check.
pub struct Population {
    pub n: usize,
    pub graphs: Vec<Scored>,
    pub spot_checked: usize,
    pub spot_failure: Option<Witness>,
}

impl Population {
    /// Enumerates, scores, and spot-checks all unicyclic graphs of order `n`
    /// (of girth `girth` if given).
    pub fn new(n: usize, girth: Option<usize>) -> Result<Population, VerifyError> {
        let stream = enumerate::enumerate_unicyclic(n, girth)?;
        Ok(Self::score(n, stream, girth.unwrap_or(0) as u64))
    }

    fn score(n: usize, stream: Vec<Unicyclic>, salt: u64) -> Population {
        let graphs: Vec<Scored> = stream
            .into_par_iter()
            .map(|u| Scored {
                z: hosoya(&u.graph),
                code: u.code,
                girth: u.girth,
                graph: u.graph,
            })
            .collect();
        // sample drawn sequentially over the ordered stream, so it does not
        // depend on scheduling
        let mut rng = ChaCha8Rng::seed_from_u64(SPOT_CHECK_SEED ^ ((n as u64) << 32) ^ salt);
        let sample: Vec<&Scored> = graphs
            .iter()
            .filter(|s| s.graph.edge_count() <= SPOT_CHECK_MAX_EDGES)
            .filter(|_| rng.gen_bool(SPOT_CHECK_RATE))
            .collect();
        let spot_failure = sample.par_iter().find_map_first(|s| {
            let brute = hosoya_bruteforce(&s.graph).expect("within brute-force limit");
            (brute != s.z).then(|| {
                Witness::new("hosoya disagrees with brute-force count")
                    .with_graph(&s.graph)
                    .with_value("hosoya", &s.z)
                    .with_value("brute force", brute)
            })
        });
        Population {
            n,
            spot_checked: sample.len(),
            graphs,
            spot_failure,
        }
    }

    /// Distinct Z values in descending order, each with its graphs sorted by
    /// canonical code.
    pub fn groups(&self) -> Vec<(BigNat, Vec<&Scored>)> {
        group_by_z(self.graphs.iter())
    }

    /// Stamps the spot-check outcome onto `result`.
    pub(crate) fn record_spot_check(&self, result: &mut CheckResult) {
        result.value("brute-force spot checks", self.spot_checked);
        if let Some(w) = &self.spot_failure {
            result.fail(w.clone());
        }
    }
}

pub(crate) fn group_by_z<'a>(items: impl Iterator<Item = &'a Scored>) -> Vec<(BigNat, Vec<&'a Scored>)> {
    let mut by_z: BTreeMap<&BigNat, Vec<&Scored>> = BTreeMap::new();
    for s in items {
        by_z.entry(&s.z).or_default().push(s);
    }
    by_z.into_iter()
        .rev()
        .map(|(z, mut v)| {
            v.sort_by(|a, b| a.code.cmp(&b.code));
            (z.clone(), v)
        })
        .collect()
}

/// Names of the catalog members of order `n`, keyed by canonical code.
/// Isomorphic members share one label joined by `" = "`.
pub struct Labels(BTreeMap<CanonicalCode, Vec<String>>);

impl Labels {
    pub fn for_order(n: usize) -> Labels {
        let mut map: BTreeMap<CanonicalCode, Vec<String>> = BTreeMap::new();
        for spec in family_catalog(n) {
            if let Some(code) = spec_code(&spec) {
                map.entry(code).or_default().push(spec.to_string());
            }
        }
        Labels(map)
    }

    pub fn label(&self, code: &CanonicalCode) -> String {
        self.0
            .get(code)
            .map(|names| names.join(" = "))
            .unwrap_or_else(|| "unnamed".to_owned())
    }
}

/// Canonical code of a family member, if it builds to a unicyclic graph.
pub fn spec_code(spec: &FamilySpec) -> Option<CanonicalCode> {
    spec.build().ok().and_then(|g| canon::canonical_code(&g).ok())
}

pub(crate) fn codes_of(specs: &[FamilySpec]) -> BTreeSet<CanonicalCode> {
    specs
        .iter()
        .map(|s| spec_code(s).expect("catalog specs build unicyclic graphs"))
        .collect()
}

pub(crate) fn ranked_entries(groups: &[(BigNat, Vec<&Scored>)], labels: &Labels, listed: usize) -> Vec<RankedEntry> {
    let mut rank = 1;
    groups
        .iter()
        .enumerate()
        .map(|(i, (z, members))| {
            let graphs = if i < listed.max(LISTED_ENTRIES) {
                members
                    .iter()
                    .map(|s| RankedGraph {
                        code: s.code.to_string(),
                        label: labels.label(&s.code),
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let entry = RankedEntry {
                rank,
                z: z.to_string(),
                multiplicity: members.len(),
                graphs,
            };
            rank += members.len();
            entry
        })
        .collect()
}

/// Every check the command line exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Tables,
    Theorem,
    Bound,
    GirthMax,
    SecondMax,
    Chain,
    Slide,
    Claims,
    Identities,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::Tables,
        CheckKind::Theorem,
        CheckKind::Bound,
        CheckKind::GirthMax,
        CheckKind::SecondMax,
        CheckKind::Chain,
        CheckKind::Slide,
        CheckKind::Claims,
        CheckKind::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Tables => "tables",
            CheckKind::Theorem => "theorem",
            CheckKind::Bound => "bound",
            CheckKind::GirthMax => "girth-max",
            CheckKind::SecondMax => "second-max",
            CheckKind::Chain => "chain",
            CheckKind::Slide => "slide",
            CheckKind::Claims => "claims",
            CheckKind::Identities => "identities",
        }
    }
}

/// Parameters for [`run_check`]. Unset fields select the default sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub max: Option<usize>,
    pub seed: u64,
}

impl Default for RunParams {
    fn default() -> Self {
        Self {
            n: None,
            k: None,
            max: None,
            seed: DEFAULT_SEED,
        }
    }
}

/// Seed for randomized sweeps when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// Runs `kind` on the requested parameters, or on its default sweep when
/// they are omitted.
pub fn run_check(kind: CheckKind, p: &RunParams) -> Result<Vec<CheckResult>, VerifyError> {
    let ns = |default: std::ops::RangeInclusive<usize>| -> Vec<usize> {
        match p.n {
            Some(n) => vec![n],
            None => default.collect(),
        }
    };
    let mut out = Vec::new();
    match kind {
        CheckKind::Tables => {
            for n in ns(5..=10) {
                out.push(verify_small_tables(n)?);
            }
        }
        CheckKind::Theorem => {
            for n in ns(11..=14) {
                out.push(verify_main_theorem(n)?.into());
            }
        }
        CheckKind::Bound => {
            for n in ns(5..=14) {
                out.push(verify_noncycle_maximum(n)?);
            }
        }
        CheckKind::GirthMax | CheckKind::SecondMax => {
            let default = if kind == CheckKind::GirthMax { 5..=14 } else { 10..=14 };
            for n in ns(default) {
                let ks: Vec<usize> = match p.k {
                    Some(k) => vec![k],
                    None => (3..=n.saturating_sub(2)).collect(),
                };
                for k in ks {
                    out.push(if kind == CheckKind::GirthMax {
                        verify_girth_max(n, k)?
                    } else {
                        verify_second_max(n, k)?
                    });
                }
            }
        }
        CheckKind::Chain => match p.n {
            Some(_) => {
                return Err(VerifyError::Precondition(
                    "chain runs a seeded random sweep; use --seed and --max instead of --n".into(),
                ))
            }
            None => out.push(paths::verify_chain_sweep(p.max.unwrap_or(100), p.seed)),
        },
        CheckKind::Slide => out.push(paths::verify_slide_corpus()),
        CheckKind::Claims => {
            let all: Result<Vec<_>, _> = ns(11..=MAX_CLAIMS_ORDER).into_par_iter().map(verify_claims).collect();
            out.extend(all?);
        }
        CheckKind::Identities => out.push(verify_identities(p.max.unwrap_or(300))?),
    }
    Ok(out)
}
