//! Report generation behind the `rdd` binary. Everything writes to a caller
//! supplied sink so reports can be compared byte for byte.

use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use rdd_core::families::{FamilyReport, MIN_RDF_CAP};
use rdd_core::roman::{enumerate_min_rdfs, min_domination, MinRdfEnumeration};
use rdd_core::spectral::poly_roots_check;
use rdd_core::verify::{
    analyze, analyze_with, ledger_for, verify_family_ledger, Expected, GraphAnalysis, LedgerRow,
};
use rdd_core::{
    generate, random_batch, FamilySpec, Graph, GraphError, JacobiOptions, RomanError,
    SpectralError, VerifyError,
};
use serde::Serialize;

pub const EXIT_OK: u8 = 0;
pub const EXIT_IO: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

/// Random batch parameters: `n` uniform in this range, edge probability 1/2.
pub const BATCH_N_MIN: usize = 4;
pub const BATCH_N_MAX: usize = 10;
pub const BATCH_EDGE_PROBABILITY: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Energy,
    Spectrum,
    Rdf,
    Charpoly,
    Verify,
    Generate,
    Batch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    File(PathBuf),
    Family(FamilySpec),
}

impl Input {
    fn name(&self) -> String {
        match self {
            Input::File(p) => p.display().to_string(),
            Input::Family(spec) => spec.to_string(),
        }
    }
}

/// Which minimum RDF(s) the matrix is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RdfPolicy {
    #[default]
    Canonical,
    All,
    /// The k-th minimum RDF in lexicographic order (0-based).
    Index(usize),
}

impl FromStr for RdfPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "canonical" => Ok(RdfPolicy::Canonical),
            "all" => Ok(RdfPolicy::All),
            _ => s
                .parse()
                .map(RdfPolicy::Index)
                .map_err(|_| format!("expected canonical, all or an index, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(format!("expected text, json or csv, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `None` only for `batch`.
    pub input: Option<Input>,
    pub tol: f64,
    pub rdf_policy: RdfPolicy,
    pub format: OutputFormat,
    pub seed: u64,
    pub count: usize,
}

impl RunConfig {
    pub fn new(command: Command, input: Option<Input>) -> Self {
        RunConfig {
            command,
            input,
            tol: 1e-10,
            rdf_policy: RdfPolicy::Canonical,
            format: OutputFormat::Text,
            seed: 0,
            count: 10,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => EXIT_IO,
            CliError::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) | CliError::Precondition(m) => f.write_str(m),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Parse { .. } | GraphError::UnknownFamily(_) => CliError::Io(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<RomanError> for CliError {
    fn from(e: RomanError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Graph(g) => g.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

/// Runs one command; returns the exit status (0 or 3) or an error carrying
/// status 1 or 2.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<u8, CliError> {
    if !(config.tol.is_finite() && config.tol > 0.0) {
        return Err(CliError::Io(format!(
            "--tol must be positive, got {}",
            config.tol
        )));
    }
    if config.command == Command::Batch {
        return batch(config, out);
    }
    let input = config.input.as_ref().ok_or_else(|| {
        CliError::Io("an input is required: --input PATH or --family NAME --param K".into())
    })?;
    if config.command == Command::Generate {
        let Input::Family(spec) = input else {
            return Err(CliError::Io("generate needs --family and --param".into()));
        };
        out.write_all(generate(*spec)?.to_edge_list().as_bytes())?;
        return Ok(EXIT_OK);
    }
    let g = load(input)?;
    let name = input.name();
    let opts = JacobiOptions::with_tol(config.tol);
    match config.command {
        Command::Energy => energy(config, &g, opts, out),
        Command::Spectrum => {
            let a = analysis_for(config, &g, opts)?;
            spectrum(config, &a, out)
        }
        Command::Rdf => rdf(config, &g, out),
        Command::Charpoly => {
            let a = analysis_for(config, &g, opts)?;
            charpoly(config, &a, out)
        }
        Command::Verify => verify(config, input, &name, &g, opts, out),
        Command::Generate | Command::Batch => unreachable!(),
    }
}

fn load(input: &Input) -> Result<Graph, CliError> {
    match input {
        Input::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Graph::parse_edge_list(&text)?)
        }
        Input::Family(spec) => Ok(generate(*spec)?),
    }
}

fn enumeration(g: &Graph) -> Result<MinRdfEnumeration, CliError> {
    Ok(enumerate_min_rdfs(g, MIN_RDF_CAP)?)
}

/// Analysis under the single RDF selected by the policy (`all` → canonical).
fn analysis_for(
    config: &RunConfig,
    g: &Graph,
    opts: JacobiOptions,
) -> Result<GraphAnalysis, CliError> {
    match config.rdf_policy {
        RdfPolicy::Canonical | RdfPolicy::All => Ok(analyze(g, opts)?),
        RdfPolicy::Index(k) => {
            let e = enumeration(g)?;
            let count = e.rdfs.len();
            let f = e.rdfs.into_iter().nth(k).ok_or_else(|| {
                CliError::Precondition(format!("--rdf {k}: only {count} minimum RDFs"))
            })?;
            Ok(analyze_with(g, f, opts)?)
        }
    }
}

fn e10(x: f64) -> String {
    format!("{x:.10}")
}

#[derive(Serialize)]
struct EnergyEntry {
    index: usize,
    energy: String,
    rdf: rdd_core::RomanDominatingFunction,
}

fn energy(
    config: &RunConfig,
    g: &Graph,
    opts: JacobiOptions,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let entries: Vec<EnergyEntry> = match config.rdf_policy {
        RdfPolicy::All => {
            let e = enumeration(g)?;
            if e.truncated {
                eprintln!("warning: more than {MIN_RDF_CAP} minimum RDFs; reporting the first {MIN_RDF_CAP}");
            }
            e.rdfs
                .into_iter()
                .enumerate()
                .map(|(index, f)| {
                    let a = analyze_with(g, f, opts)?;
                    Ok(EnergyEntry {
                        index,
                        energy: e10(a.spectrum.energy),
                        rdf: a.rdf,
                    })
                })
                .collect::<Result<_, CliError>>()?
        }
        _ => {
            let index = match config.rdf_policy {
                RdfPolicy::Index(k) => k,
                _ => 0,
            };
            let a = analysis_for(config, g, opts)?;
            vec![EnergyEntry {
                index,
                energy: e10(a.spectrum.energy),
                rdf: a.rdf,
            }]
        }
    };
    let values: Vec<f64> = entries.iter().map(|e| e.energy.parse().unwrap()).collect();
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread = config.rdf_policy == RdfPolicy::All;

    match config.format {
        OutputFormat::Text => {
            if spread {
                for e in &entries {
                    writeln!(out, "{}  [{}] {}", e.energy, e.index, e.rdf)?;
                }
                writeln!(
                    out,
                    "min {}  max {}  spread {}",
                    e10(min),
                    e10(max),
                    e10(max - min)
                )?;
            } else {
                writeln!(out, "{}", entries[0].energy)?;
                writeln!(out, "rdf {}", entries[0].rdf)?;
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                energies: &'a [EnergyEntry],
                min: String,
                max: String,
                spread: String,
            }
            let report = Report {
                energies: &entries,
                min: e10(min),
                max: e10(max),
                spread: e10(max - min),
            };
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["index", "energy", "v2", "v1", "weight"])?;
            for e in &entries {
                w.write_record([
                    e.index.to_string(),
                    e.energy.clone(),
                    join(&e.rdf.v2),
                    join(&e.rdf.v1),
                    e.rdf.weight().to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn spectrum(config: &RunConfig, a: &GraphAnalysis, out: &mut dyn Write) -> Result<u8, CliError> {
    let s = &a.spectrum;
    match config.format {
        OutputFormat::Text => {
            for x in &s.eigenvalues {
                writeln!(out, "{}", e10(*x))?;
            }
            writeln!(out, "energy {}", e10(s.energy))?;
            writeln!(out, "residual {:.3e}", s.residual)?;
            writeln!(out, "rdf {}", a.rdf)?;
        }
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, s)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["k", "eigenvalue"])?;
            for (k, x) in s.eigenvalues.iter().enumerate() {
                w.write_record([(k + 1).to_string(), e10(*x)])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn rdf(config: &RunConfig, g: &Graph, out: &mut dyn Write) -> Result<u8, CliError> {
    let (gamma, dominating_set) = min_domination(g)?;
    let e = enumeration(g)?;
    let canonical = &e.rdfs[0];
    match config.format {
        OutputFormat::Text => {
            writeln!(out, "gamma {gamma}")?;
            writeln!(out, "gamma_R {}", e.gamma_r)?;
            writeln!(out, "canonical {canonical}")?;
            let plus = if e.truncated { "+" } else { "" };
            writeln!(out, "minimum RDFs {}{plus}", e.rdfs.len())?;
            if config.rdf_policy == RdfPolicy::All {
                for (i, f) in e.rdfs.iter().enumerate() {
                    writeln!(out, "[{i}] {f}")?;
                }
            }
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Report<'a> {
                gamma: usize,
                dominating_set: &'a [usize],
                gamma_r: usize,
                canonical: &'a rdd_core::RomanDominatingFunction,
                min_rdf_count: usize,
                truncated: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                all: Option<&'a [rdd_core::RomanDominatingFunction]>,
            }
            let report = Report {
                gamma,
                dominating_set: &dominating_set,
                gamma_r: e.gamma_r,
                canonical,
                min_rdf_count: e.rdfs.len(),
                truncated: e.truncated,
                all: (config.rdf_policy == RdfPolicy::All).then_some(&e.rdfs[..]),
            };
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["index", "v2", "v1", "weight"])?;
            let shown = if config.rdf_policy == RdfPolicy::All {
                e.rdfs.len()
            } else {
                1
            };
            for (i, f) in e.rdfs.iter().take(shown).enumerate() {
                w.write_record([
                    i.to_string(),
                    join(&f.v2),
                    join(&f.v1),
                    f.weight().to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

fn charpoly(config: &RunConfig, a: &GraphAnalysis, out: &mut dyn Write) -> Result<u8, CliError> {
    let p = &a.charpoly;
    match config.format {
        OutputFormat::Text => {
            let descending: Vec<String> = p.to_decimal_strings().into_iter().rev().collect();
            writeln!(out, "{}", descending.join(" "))?;
            writeln!(out, "{p}")?;
        }
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, p)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["power", "coefficient"])?;
            for (k, c) in p.to_decimal_strings().into_iter().enumerate() {
                w.write_record([k.to_string(), c])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

/// Ledger rows plus a cross-validation row per graph: Jacobi eigenvalues
/// against the exact polynomial.
fn roots_note(a: &GraphAnalysis) -> String {
    let report = poly_roots_check(&a.charpoly, &a.spectrum, 1e-6);
    format!("max root residual {:.3e}", report.max_residual)
}

fn verify(
    config: &RunConfig,
    input: &Input,
    name: &str,
    g: &Graph,
    opts: JacobiOptions,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let (family, rows) = match input {
        Input::Family(spec) => {
            let (report, rows) = verify_family_ledger(*spec, config.tol)?;
            (Some(report), rows)
        }
        Input::File(_) => {
            let a = analysis_for(config, g, opts)?;
            if a.invariants.wiener.is_none() {
                eprintln!("note: {name} is disconnected; spectral-radius bounds skipped");
            }
            (None, ledger_for(name, &a, config.tol))
        }
    };
    let failing = rows.iter().any(|r| !r.holds) || family.as_ref().is_some_and(|r| !r.passes());

    match config.format {
        OutputFormat::Csv if family.is_some() => write_family_csv(family.as_slice(), out)?,
        OutputFormat::Csv => write_ledger_csv(&rows, out)?,
        OutputFormat::Json => write_ledger_json(&rows, out)?,
        OutputFormat::Text => {
            if let Some(report) = &family {
                write_family_text(report, out)?;
            } else {
                let a = analysis_for(config, g, opts)?;
                writeln!(
                    out,
                    "{name}: energy {} under {}",
                    e10(a.spectrum.energy),
                    a.rdf
                )?;
                writeln!(out, "{}", roots_note(&a))?;
            }
            write_ledger_text(&rows, out)?;
        }
    }
    Ok(if failing { EXIT_MISMATCH } else { EXIT_OK })
}

fn batch(config: &RunConfig, out: &mut dyn Write) -> Result<u8, CliError> {
    if config.input.is_some() {
        return Err(CliError::Io(
            "batch takes --seed and --count, not an input".into(),
        ));
    }
    let graphs = random_batch(
        config.seed,
        config.count,
        BATCH_N_MIN,
        BATCH_N_MAX,
        BATCH_EDGE_PROBABILITY,
    );
    let opts = JacobiOptions::with_tol(config.tol);
    let mut rows = Vec::new();
    let mut summaries = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let name = format!("seed{}-{i}", config.seed);
        let a = analysis_for(config, g, opts)?;
        summaries.push(format!(
            "{name}: n={} m={} gamma_R={} energy {}",
            g.vertex_count(),
            g.edge_count(),
            a.invariants.gamma_r,
            e10(a.spectrum.energy)
        ));
        rows.extend(ledger_for(&name, &a, config.tol));
    }
    match config.format {
        OutputFormat::Json => write_ledger_json(&rows, out)?,
        OutputFormat::Csv => write_ledger_csv(&rows, out)?,
        OutputFormat::Text => {
            for s in &summaries {
                writeln!(out, "{s}")?;
            }
            write_ledger_text(&rows, out)?;
        }
    }
    Ok(if rows.iter().all(|r| r.holds) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

pub fn write_ledger_json(rows: &[LedgerRow], out: &mut dyn Write) -> Result<(), CliError> {
    for row in rows {
        serde_json::to_writer(&mut *out, row)?;
        writeln!(out)?;
    }
    Ok(())
}

fn describe(e: &Expected) -> String {
    match *e {
        Expected::Equal { value, tol } => format!("= {} (±{tol:e})", e10(value)),
        Expected::AtMost { value } => format!("<= {}", e10(value)),
        Expected::AtLeast { value } => format!(">= {}", e10(value)),
        Expected::Between { lower, upper } => format!("in [{}, {}]", e10(lower), e10(upper)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "FAILS"
    }
}

fn write_ledger_text(rows: &[LedgerRow], out: &mut dyn Write) -> Result<(), CliError> {
    for r in rows {
        write!(
            out,
            "{:<28} {:<22} {} computed {} {}",
            r.graph,
            r.formula_id.as_str(),
            yes_no(r.holds),
            e10(r.computed),
            describe(&r.formula)
        )?;
        if let (Some(c), Some(h)) = (&r.corrected, r.corrected_holds) {
            write!(out, " | corrected {} {}", yes_no(h), describe(c))?;
        }
        if let Some(note) = &r.note {
            write!(out, " | {note}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

fn write_ledger_csv(rows: &[LedgerRow], out: &mut dyn Write) -> Result<(), CliError> {
    fn bounds(e: Option<&Expected>) -> [String; 3] {
        match e {
            None => Default::default(),
            Some(Expected::Equal { value, .. }) => ["equal".into(), e10(*value), e10(*value)],
            Some(Expected::AtMost { value }) => ["at_most".into(), String::new(), e10(*value)],
            Some(Expected::AtLeast { value }) => ["at_least".into(), e10(*value), String::new()],
            Some(Expected::Between { lower, upper }) => {
                ["between".into(), e10(*lower), e10(*upper)]
            }
        }
    }
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record([
        "graph",
        "formula_id",
        "computed",
        "relation",
        "lower",
        "upper",
        "holds",
        "corrected_relation",
        "corrected_lower",
        "corrected_upper",
        "corrected_holds",
        "slack",
        "note",
    ])?;
    for r in rows {
        let [rel, lo, hi] = bounds(Some(&r.formula));
        let [crel, clo, chi] = bounds(r.corrected.as_ref());
        w.write_record([
            r.graph.clone(),
            r.formula_id.as_str().to_string(),
            e10(r.computed),
            rel,
            lo,
            hi,
            r.holds.to_string(),
            crel,
            clo,
            chi,
            r.corrected_holds.map(|b| b.to_string()).unwrap_or_default(),
            format!("{:.3e}", r.slack),
            r.note.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_family_csv(reports: &[FamilyReport], out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(FamilyReport::CSV_HEADER)?;
    for r in reports {
        w.write_record(r.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

fn write_family_text(r: &FamilyReport, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "{} on {} vertices", r.spec, r.vertices)?;
    writeln!(
        out,
        "gamma_R computed {} predicted {}",
        r.gamma_r_computed,
        r.gamma_r_predicted.map_or("-".into(), |g| g.to_string())
    )?;
    let plus = if r.min_rdfs_truncated { "+" } else { "" };
    writeln!(
        out,
        "energy computed {} predicted {} over {}{plus} minimum RDFs (range {} .. {})",
        e10(r.energy_computed),
        r.energy_predicted
            .as_ref()
            .map_or("-".into(), |e| e.to_string()),
        r.min_rdf_count,
        e10(r.energy_range.0),
        e10(r.energy_range.1)
    )?;
    writeln!(out, "evaluated rdf {}", r.evaluated_rdf)?;
    writeln!(out, "charpoly {}", r.charpoly)?;
    for c in &r.factorization_checks {
        writeln!(
            out,
            "factorization {}: degree {} ({}), trace {}, exact {}",
            c.label,
            c.total_degree,
            if c.degree_ok { "ok" } else { "wrong" },
            if c.trace_ok { "ok" } else { "wrong" },
            if c.exact_match { "yes" } else { "no" }
        )?;
    }
    for n in &r.notes {
        writeln!(out, "note: {n}")?;
    }
    Ok(())
}
