//! Reports behind the `eulerclass` command line: `analyze`, `catalog` and
//! `selftest`. Each report renders as aligned text or as one JSON document.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::catalog::{self, CatalogEntry, UnknownName};
use crate::crystal::{make_cryst, CrystError};
use crate::euler::{
    exact_order, has_finite_order, lower_bound, upper_bound_p_part, Characteristic, EulerError, OrderResult, Verdict,
};
use crate::groupfile::{integer_json, matrix_json, GroupFile, GroupFileError};
use crate::intmat::{charpoly, charpoly_via_exterior_traces, det_one_minus, IntMatrix};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Parse(#[from] GroupFileError),
    #[error(transparent)]
    UnknownName(#[from] UnknownName),
    #[error(transparent)]
    Group(#[from] CrystError),
    #[error(transparent)]
    Characteristic(#[from] EulerError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::UnknownName(_) => 2,
            CliError::Group(_) => 3,
            CliError::Characteristic(_) => 4,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementRow {
    pub matrix: Value,
    pub order: u64,
    pub det: Value,
    pub det_one_minus: Value,
    #[serde(skip)]
    key: (u64, String),
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub generators: Vec<Value>,
    pub characteristic: u64,
    pub point_group_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation_preserving_order: Option<usize>,
    pub action_kernel_order: usize,
    pub fixed_sublattice_rank: usize,
    pub fixed_sublattice_basis: Vec<Vec<Value>>,
    pub maps_onto_z: bool,
    pub elements: Vec<ElementRow>,
    pub finite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bound_p_part: Option<u64>,
    #[serde(flatten)]
    pub result: OrderResult,
}

pub fn analyze(group: &GroupFile, p: u64, cap: usize) -> Result<AnalysisReport, CliError> {
    let ch = Characteristic::new(p)?;
    let gamma = make_cryst(group.rank, &group.generators, cap)?;
    let g = gamma.point_group();
    let lattice = gamma.fixed_sublattice();

    let mut elements: Vec<ElementRow> = g
        .elements()
        .iter()
        .zip(g.element_orders())
        .map(|(x, &order)| ElementRow {
            matrix: matrix_json(x),
            order,
            det: integer_json(&x.det()),
            det_one_minus: integer_json(&det_one_minus(x)),
            key: (order, x.to_compact_string()),
        })
        .collect();
    elements.sort_by(|a, b| a.key.cmp(&b.key));

    let (lower, upper) =
        if p > 0 { (Some(lower_bound(&gamma, p)?), Some(upper_bound_p_part(&gamma, p)?)) } else { (None, None) };

    Ok(AnalysisReport {
        name: group.name.clone(),
        rank: group.rank,
        generators: group.generators.iter().map(matrix_json).collect(),
        characteristic: p,
        point_group_order: g.order(),
        orientation_preserving_order: (group.rank == 2).then(|| g.orientation_preserving().order()),
        action_kernel_order: gamma.action_kernel().order(),
        fixed_sublattice_rank: lattice.rank(),
        fixed_sublattice_basis: lattice.basis().iter().map(|v| v.iter().map(integer_json).collect()).collect(),
        maps_onto_z: !lattice.is_zero(),
        elements,
        finite: has_finite_order(&gamma, ch),
        lower_bound: lower,
        upper_bound_p_part: upper,
        result: exact_order(&gamma, ch),
    })
}

pub fn read_group_file(path: &Path) -> Result<GroupFile, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(GroupFile::parse(&text)?)
}

pub fn analyze_path(path: &Path, p: u64, cap: usize) -> Result<AnalysisReport, CliError> {
    // Characteristic errors win over file errors.
    Characteristic::new(p)?;
    analyze(&read_group_file(path)?, p, cap)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

impl AnalysisReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let name = self.name.as_deref().unwrap_or("(unnamed)");
        let _ = writeln!(out, "group              {name} (rank {})", self.rank);
        let _ = writeln!(out, "characteristic     {}", self.characteristic);
        let _ = writeln!(out, "|G|                {}", self.point_group_order);
        if let Some(sl) = self.orientation_preserving_order {
            let _ = writeln!(out, "|G ∩ SL|           {sl}");
        }
        let _ = writeln!(
            out,
            "action kernel      order {} (split, faithful: C_Γ(A) = A, acting quotient is G)",
            self.action_kernel_order
        );
        let _ = writeln!(
            out,
            "fixed sublattice   rank {} (maps onto Z: {})",
            self.fixed_sublattice_rank,
            yes_no(self.maps_onto_z)
        );
        let _ = writeln!(out, "elements           order  det  det(1-x)  matrix");
        for row in &self.elements {
            let _ = writeln!(
                out,
                "                   {:<6} {:<4} {:<9} {}",
                row.order,
                compact(&row.det),
                compact(&row.det_one_minus),
                compact(&row.matrix)
            );
        }
        let _ = writeln!(out, "finite order       {}", yes_no(self.finite));
        if let (Some(lo), Some(hi)) = (self.lower_bound, self.upper_bound_p_part) {
            let _ = writeln!(out, "bounds             lower {lo}, p-part upper {hi}");
        }
        let _ = writeln!(out, "verdict            {}", self.result.verdict);
        let tags: Vec<&str> = self.result.provenance.iter().map(|r| r.tag()).collect();
        let _ = writeln!(out, "provenance         {}", tags.join(" -> "));
        for note in &self.result.notes {
            let _ = writeln!(out, "note               {note}");
        }
        out
    }
}

/// Characteristics exercised by the catalog regression; 5 stands in for
/// every prime other than 2 and 3.
pub const CATALOG_CHARACTERISTICS: [u64; 4] = [0, 2, 3, 5];

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub name: &'static str,
    pub point_group_order: usize,
    pub generators: Vec<Value>,
    pub expected: Vec<(u64, Verdict)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogListing {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    pub entries: Vec<CatalogRow>,
}

/// All entries with expected verdicts; with `p`, also the computed verdict at
/// that characteristic.
pub fn catalog_listing(p: Option<u64>, cap: usize) -> Result<CatalogListing, CliError> {
    let ch = p.map(Characteristic::new).transpose()?;
    let entries = catalog::entries()
        .into_iter()
        .map(|e| {
            let computed = match ch {
                Some(ch) => Some(exact_order(&e.cryst(cap)?, ch).verdict),
                None => None,
            };
            Ok(CatalogRow {
                name: e.name,
                point_group_order: e.point_group_order,
                generators: e.generators.iter().map(matrix_json).collect(),
                expected: CATALOG_CHARACTERISTICS.iter().map(|&q| (q, e.expected.at(q))).collect(),
                agree: computed.map(|c| Some(c) == p.map(|q| e.expected.at(q))),
                computed,
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(CatalogListing { characteristic: p, entries })
}

impl CatalogListing {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("listing serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{:<6} {:>3}  {:<10} {:<10} {:<10} {:<10}", "type", "|G|", "p=0", "p=2", "p=3", "p>=5");
        if let Some(p) = self.characteristic {
            let _ = write!(out, " computed(p={p})");
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
        for row in &self.entries {
            let _ = write!(out, "{:<6} {:>3} ", row.name, row.point_group_order);
            for (_, v) in &row.expected {
                let _ = write!(out, " {:<10}", v.to_string());
            }
            if let (Some(c), Some(a)) = (row.computed, row.agree) {
                let _ = write!(out, " {c} {}", if a { "AGREE" } else { "DISAGREE" });
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogCheck {
    pub analysis: AnalysisReport,
    pub expected: Verdict,
    pub computed: Verdict,
    pub agree: bool,
}

pub fn catalog_check(name: &str, p: u64, cap: usize) -> Result<CatalogCheck, CliError> {
    Characteristic::new(p)?;
    let entry = catalog::lookup(name)?;
    let analysis = analyze(&entry.group_file(), p, cap)?;
    let expected = entry.expected.at(p);
    let computed = analysis.result.verdict;
    Ok(CatalogCheck { analysis, expected, computed, agree: expected == computed })
}

impl CatalogCheck {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("check serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = self.analysis.render_text();
        let _ = writeln!(out, "expected           {}", self.expected);
        let _ = writeln!(out, "computed           {}", self.computed);
        let _ = writeln!(out, "{}", if self.agree { "AGREE" } else { "DISAGREE" });
        out
    }
}

/// Details of one catalog entry, without running an analysis.
pub fn catalog_entry_text(entry: &CatalogEntry) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type               {}", entry.name);
    let _ = writeln!(out, "|G|                {}", entry.point_group_order);
    for g in &entry.generators {
        let _ = writeln!(out, "generator          {g}");
    }
    for q in CATALOG_CHARACTERISTICS {
        let label = if q == 5 { "p>=5".to_string() } else { format!("p={q}") };
        let _ = writeln!(out, "expected {label:<9} {}", entry.expected.at(q));
    }
    let _ = writeln!(out, "deciding rule      {}", entry.source);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub verdicts_checked: usize,
    pub verdicts_agree: usize,
    pub identity_samples: usize,
    pub identity_agree: usize,
    pub failures: Vec<String>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("selftest serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} verdicts checked, {} agree", self.verdicts_checked, self.verdicts_agree);
        let _ =
            writeln!(out, "{} charpoly identity samples checked, {} agree", self.identity_samples, self.identity_agree);
        for f in &self.failures {
            let _ = writeln!(out, "FAIL {f}");
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Square matrix of dimension `n` with entries drawn uniformly from
/// `-bound..=bound`.
pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_rows((0..n).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>()))
        .expect("n >= 1")
}

pub const SELFTEST_SAMPLES: usize = 200;
pub const SELFTEST_SEED: u64 = 0x5eed_e01e;

/// Checks the coefficient identity `[X^{n-i}] det(X - m) = (-1)^i tr Λ^i m`
/// and `det(1 - m) = charpoly(m)(1)` on one matrix.
pub fn charpoly_identity_holds(m: &IntMatrix) -> bool {
    let direct = charpoly(m);
    direct == charpoly_via_exterior_traces(m) && direct.eval(&BigInt::from(1)) == det_one_minus(m)
}

pub fn selftest_with(entries: &[CatalogEntry], samples: usize, seed: u64, cap: usize) -> SelftestReport {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut agree = 0;
    for entry in entries {
        let gamma = match entry.cryst(cap) {
            Ok(g) => g,
            Err(e) => {
                checked += CATALOG_CHARACTERISTICS.len();
                failures.push(format!("{}: {e}", entry.name));
                continue;
            }
        };
        for q in CATALOG_CHARACTERISTICS {
            checked += 1;
            let computed = exact_order(&gamma, Characteristic::new(q).expect("catalog primes"));
            let expected = entry.expected.at(q);
            if computed.verdict == expected {
                agree += 1;
            } else {
                failures.push(format!("{} p={q}: expected {expected}, computed {}", entry.name, computed.verdict));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut identity_agree = 0;
    for k in 0..samples {
        let n = rng.gen_range(1..=5);
        let m = random_matrix(&mut rng, n, 3);
        if charpoly_identity_holds(&m) {
            identity_agree += 1;
        } else {
            failures.push(format!("charpoly identity sample {k}: {m}"));
        }
    }

    SelftestReport {
        verdicts_checked: checked,
        verdicts_agree: agree,
        identity_samples: samples,
        identity_agree,
        failures,
    }
}

pub fn selftest(cap: usize) -> SelftestReport {
    selftest_with(&catalog::entries(), SELFTEST_SAMPLES, SELFTEST_SEED, cap)
}
