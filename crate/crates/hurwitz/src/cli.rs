use crate::branch_data::{FamilyDatum, RawFamilyDatum};
use crate::cache::Cache;
use crate::closed_form::{self, CaseLabel};
use crate::octagon::{octagon_pairings, PairingClass};
use crate::oracle::{self, MoveSet, OracleError};
use crate::partition::partitions_into;
use crate::realizations::{realizations_for, RealizationDescriptor};
use crate::tables::{check_table, table_rows, RowStatus, TableRow};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;

// A downstream pipe closing early (table --k 6 | head) must end the run
// quietly, not panic like println would.
macro_rules! outln {
    ($($arg:tt)*) => {
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    };
}

/// Exit codes: 0 success, 1 a mismatch was found, 2 parse error,
/// 3 domain error (invalid or uncovered datum, I/O trouble).
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }
}

#[derive(Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Weak Hurwitz numbers of a three-branch-point family: closed forms, \
             explicit dessin realizations, and a brute-force monodromy oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the count for one datum, optionally cross-checked by the oracle
    Nu {
        /// Family datum as JSON, e.g. '{"g":0,"h":2,"k":6,"pi":[9,2,1]}'
        datum: String,
        /// Also count by brute force and compare
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        oracle_opts: OracleOpts,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the genus-0, h=2 table for a given k
    Table {
        #[arg(long)]
        k: u64,
        /// Compare against the embedded reference table (k = 6 or 7)
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// List the explicit dessins realizing one datum
    Realizations {
        /// Family datum as JSON, e.g. '{"g":1,"h":3,"k":4,"pi":[7,1]}'
        datum: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep the covered (g,h) pairs and cross-check formulas against the oracle
    Verify {
        /// Restrict to one genus
        #[arg(long)]
        g: Option<u64>,
        /// Restrict to one h
        #[arg(long)]
        h: Option<u64>,
        /// Largest k to sweep
        #[arg(long, default_value_t = 5)]
        k_max: u64,
        #[command(flatten)]
        oracle_opts: OracleOpts,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify the genus-2 octagon edge pairings and their leg positions
    Octagons {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct OracleOpts {
    /// Disable the mirror move
    #[arg(long)]
    no_mirror: bool,
    /// Disable branch-point relabel moves
    #[arg(long)]
    no_relabel: bool,
    /// Refuse brute force beyond this degree
    #[arg(long, default_value_t = oracle::DEFAULT_DEGREE_LIMIT)]
    degree_limit: usize,
    /// Oracle result cache file (JSON lines); the HURWITZ_CACHE environment
    /// variable overrides this flag
    #[arg(long)]
    cache: Option<PathBuf>,
}

impl OracleOpts {
    fn move_set(&self) -> MoveSet {
        MoveSet { use_mirror: !self.no_mirror, use_relabel: !self.no_relabel }
    }

    fn cache_path(&self) -> Option<PathBuf> {
        match std::env::var_os("HURWITZ_CACHE") {
            Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
            _ => self.cache.clone(),
        }
    }

    fn open_cache(&self) -> Result<Option<Cache>, Failure> {
        match self.cache_path() {
            None => Ok(None),
            Some(path) => Cache::open(&path)
                .map(Some)
                .map_err(|e| Failure::domain(format!("cannot open cache {}: {e}", path.display()))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Mismatch,
    Erratum,
    OracleSkipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Erratum => "erratum",
            Status::OracleSkipped => "oracle-skipped",
        }
    }
}

/// One machine-readable result row. `status` is `mismatch` exactly when both
/// counts are present, differ, and the cell has no registered erratum.
#[derive(Debug, Serialize, Deserialize)]
pub struct OutputRecord {
    pub datum: FamilyDatum,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu_oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub realizations: Option<Vec<RealizationDescriptor>>,
    pub status: Status,
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Nu { datum, oracle, oracle_opts, format } => {
            cmd_nu(&datum, oracle, &oracle_opts, format)
        }
        Command::Table { k, check, format } => cmd_table(k, check, format),
        Command::Realizations { datum, format } => cmd_realizations(&datum, format),
        Command::Verify { g, h, k_max, oracle_opts, format } => {
            cmd_verify(g, h, k_max, &oracle_opts, format)
        }
        Command::Octagons { format } => cmd_octagons(format),
    }
}

fn parse_datum(s: &str) -> Result<FamilyDatum, Failure> {
    let raw: RawFamilyDatum = serde_json::from_str(s)
        .map_err(|e| Failure::parse(format!("invalid datum JSON: {e}")))?;
    raw.check().map_err(|e| Failure::domain(format!("invalid family datum: {e}")))
}

fn datum_label(fd: &FamilyDatum) -> String {
    format!("(g={}, h={}, k={}, pi={})", fd.g(), fd.h(), fd.k(), fd.pi())
}

/// Brute-force count for the datum, going through the cache when one is
/// configured. Returns None when the degree exceeds the limit.
fn oracle_weak(
    fd: &FamilyDatum,
    opts: &OracleOpts,
    cache: &mut Option<Cache>,
) -> Result<Option<u64>, Failure> {
    if fd.d() as usize > opts.degree_limit {
        return Ok(None);
    }
    let expanded = fd.expand();
    let moves = opts.move_set();
    if let Some(cache) = cache {
        if let Some(counts) = cache.get(&expanded, moves) {
            return Ok(Some(counts.weak as u64));
        }
    }
    let counts = match oracle::oracle_counts(&expanded, moves, opts.degree_limit) {
        Ok(c) => c,
        Err(OracleError::DegreeLimitExceeded { .. }) => return Ok(None),
        Err(e) => return Err(Failure::domain(e.to_string())),
    };
    if let Some(cache) = cache {
        cache
            .put(&expanded, moves, counts)
            .map_err(|e| Failure::domain(format!("cannot write cache: {e}")))?;
    }
    Ok(Some(counts.weak as u64))
}

fn emit_record(record: &OutputRecord, format: Format) {
    match format {
        Format::Text => {
            let mut line = datum_label(&record.datum);
            line.push(':');
            if let Some(nu) = record.nu_formula {
                line.push_str(&format!(" nu = {nu}"));
            }
            if let Some(w) = record.nu_oracle {
                line.push_str(&format!(" oracle = {w}"));
            }
            if let Some(rs) = &record.realizations {
                let joined = rs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                line.push_str(&format!(" realizations = [{joined}]"));
            }
            line.push_str(&format!(" [{}]", record.status.label()));
            outln!("{line}");
        }
        Format::Json => {
            outln!("{}", serde_json::to_string(record).expect("record serializes"));
        }
        Format::Csv => {
            let fd = &record.datum;
            outln!(
                "{},{},{},{},{},{},{}",
                fd.g(),
                fd.h(),
                fd.k(),
                csv_quote(&fd.pi().to_string()),
                record.nu_formula.map(|v| v.to_string()).unwrap_or_default(),
                record.nu_oracle.map(|v| v.to_string()).unwrap_or_default(),
                record.status.label()
            );
        }
    }
}

fn csv_header(format: Format) {
    if format == Format::Csv {
        outln!("g,h,k,pi,nu_formula,nu_oracle,status");
    }
}

fn csv_quote(s: &str) -> String {
    assert!(!s.contains('"'), "CSV fields never contain quotes here");
    format!("\"{s}\"")
}

fn cmd_nu(datum: &str, use_oracle: bool, opts: &OracleOpts, format: Format) -> Result<i32, Failure> {
    let fd = parse_datum(datum)?;
    let formula = match closed_form::nu(&fd) {
        Ok(v) => Some(v),
        Err(e) if use_oracle => {
            // no closed form, but the oracle can still count
            let _ = e;
            None
        }
        Err(e) => return Err(Failure::domain(e.to_string())),
    };
    let mut cache = opts.open_cache()?;
    let (nu_oracle, status) = if use_oracle {
        match oracle_weak(&fd, opts, &mut cache)? {
            None => (None, Status::OracleSkipped),
            Some(w) => {
                let status = match formula {
                    Some(v) if v != w => Status::Mismatch,
                    _ => Status::Ok,
                };
                (Some(w), status)
            }
        }
    } else {
        (None, Status::Ok)
    };
    if formula.is_none() && nu_oracle.is_none() {
        return Err(Failure::domain(format!(
            "no closed form for (g,h)=({},{}) and the oracle was skipped at degree {} (limit {})",
            fd.g(),
            fd.h(),
            fd.d(),
            opts.degree_limit
        )));
    }
    let record = OutputRecord {
        datum: fd,
        nu_formula: formula,
        nu_oracle,
        case: None,
        realizations: None,
        status,
    };
    csv_header(format);
    emit_record(&record, format);
    Ok(if status == Status::Mismatch { 1 } else { 0 })
}

fn table_record(k: u64, row: &TableRow, status: Status) -> OutputRecord {
    let datum = FamilyDatum::new(0, 2, k, row.pi.clone()).expect("table rows are valid data");
    OutputRecord {
        datum,
        nu_formula: Some(row.nu),
        nu_oracle: None,
        case: Some(row.case),
        realizations: Some(row.realizations.clone()),
        status,
    }
}

fn render_table_text(row: &TableRow, status: Option<&RowStatus>) {
    let realizations =
        row.realizations.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut line = format!("{}, {}, {}, {}", row.pi, row.case.tag(), row.nu, realizations);
    match status {
        None => {}
        Some(RowStatus::Ok) => line.push_str(", ok"),
        Some(RowStatus::Erratum { printed, computed }) => {
            line.push_str(&format!(", erratum(printed={printed}, computed={computed})"));
        }
        Some(RowStatus::Mismatch { .. }) => line.push_str(", mismatch"),
    }
    outln!("{line}");
}

fn cmd_table(k: u64, check: bool, format: TableFormat) -> Result<i32, Failure> {
    if k < 3 {
        return Err(Failure::domain(format!("the table needs k >= 3 (got {k})")));
    }
    let rows = table_rows(k);
    let checks = if check {
        Some(check_table(k).ok_or_else(|| {
            Failure::domain(format!("no embedded reference table for k={k} (have k=6 and k=7)"))
        })?)
    } else {
        None
    };

    let status_of = |i: usize| -> Status {
        match checks.as_ref().map(|cs| &cs[i].status) {
            None | Some(RowStatus::Ok) => Status::Ok,
            Some(RowStatus::Erratum { .. }) => Status::Erratum,
            Some(RowStatus::Mismatch { .. }) => Status::Mismatch,
        }
    };

    match format {
        TableFormat::Text => {
            for (i, row) in rows.iter().enumerate() {
                render_table_text(row, checks.as_ref().map(|cs| &cs[i].status));
            }
        }
        TableFormat::Json => {
            for (i, row) in rows.iter().enumerate() {
                let record = table_record(k, row, status_of(i));
                outln!("{}", serde_json::to_string(&record).expect("record serializes"));
            }
        }
        TableFormat::Csv => {
            outln!("pi,case,nu,realizations{}", if check { ",status" } else { "" });
            for (i, row) in rows.iter().enumerate() {
                let realizations =
                    row.realizations.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                let mut line = format!(
                    "{},{},{},{}",
                    csv_quote(&row.pi.to_string()),
                    csv_quote(&row.case.to_string()),
                    row.nu,
                    csv_quote(&realizations)
                );
                if check {
                    line.push(',');
                    line.push_str(status_of(i).label());
                }
                outln!("{line}");
            }
        }
        TableFormat::Md => {
            let status_col = if check { " status |" } else { "" };
            outln!("| pi | case | nu | realizations |{status_col}");
            outln!("|---|---|---|---|{}", if check { "---|" } else { "" });
            for (i, row) in rows.iter().enumerate() {
                let realizations =
                    row.realizations.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                let mut line = format!(
                    "| {} | {} | {} | {} |",
                    row.pi, row.case, row.nu, realizations
                );
                if check {
                    line.push_str(&format!(" {} |", status_of(i).label()));
                }
                outln!("{line}");
            }
        }
    }

    if let Some(checks) = &checks {
        let mut mismatches = 0;
        for c in checks {
            if let RowStatus::Mismatch { detail } = &c.status {
                eprintln!("mismatch at {}: {detail}", c.pi);
                mismatches += 1;
            }
        }
        if mismatches > 0 {
            return Ok(1);
        }
    }
    Ok(0)
}

fn cmd_realizations(datum: &str, format: Format) -> Result<i32, Failure> {
    let fd = parse_datum(datum)?;
    let rs = realizations_for(&fd).map_err(|e| Failure::domain(e.to_string()))?;
    match format {
        Format::Text => {
            outln!("{}: {} realizations", datum_label(&fd), rs.len());
            for r in &rs {
                outln!("{r}");
            }
        }
        Format::Json => {
            let record = OutputRecord {
                datum: fd,
                nu_formula: None,
                nu_oracle: None,
                case: None,
                realizations: Some(rs),
                status: Status::Ok,
            };
            outln!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
        Format::Csv => {
            outln!("realization");
            for r in &rs {
                outln!("{}", csv_quote(&r.to_string()));
            }
        }
    }
    Ok(0)
}

/// The (g,h) pairs with closed forms.
const COVERED: [(u64, u64); 6] = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 4)];

fn cmd_verify(
    g: Option<u64>,
    h: Option<u64>,
    k_max: u64,
    opts: &OracleOpts,
    format: Format,
) -> Result<i32, Failure> {
    let pairs: Vec<(u64, u64)> = COVERED
        .iter()
        .copied()
        .filter(|&(pg, ph)| g.is_none_or(|v| v == pg) && h.is_none_or(|v| v == ph))
        .collect();
    if pairs.is_empty() {
        return Err(Failure::domain(format!(
            "no covered (g,h) pair matches g={g:?}, h={h:?}; covered: {COVERED:?}"
        )));
    }
    let mut cache = opts.open_cache()?;
    let (mut ok, mut skipped, mut mismatches) = (0u64, 0u64, 0u64);
    csv_header(format);
    for (pg, ph) in pairs {
        for k in (ph + 1)..=k_max {
            let ell = (ph - 2 * pg + 1) as usize;
            for pi in partitions_into(2 * k, ell) {
                let fd = FamilyDatum::new(pg, ph, k, pi).expect("swept datum is valid");
                let formula = closed_form::nu(&fd).expect("sweep covers only closed forms");
                let (nu_oracle, status) = match oracle_weak(&fd, opts, &mut cache)? {
                    None => {
                        skipped += 1;
                        (None, Status::OracleSkipped)
                    }
                    Some(w) if w == formula => {
                        ok += 1;
                        (Some(w), Status::Ok)
                    }
                    Some(w) => {
                        mismatches += 1;
                        (Some(w), Status::Mismatch)
                    }
                };
                let record = OutputRecord {
                    datum: fd,
                    nu_formula: Some(formula),
                    nu_oracle,
                    case: None,
                    realizations: None,
                    status,
                };
                emit_record(&record, format);
            }
        }
    }
    let summary =
        format!("checked {} data: {ok} ok, {skipped} skipped, {mismatches} mismatches", ok + skipped + mismatches);
    if format == Format::Text {
        outln!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(if mismatches > 0 { 1 } else { 0 })
}

fn cmd_octagons(format: Format) -> Result<i32, Failure> {
    let classes = octagon_pairings();
    let labels = ["I", "II", "III", "IV"];
    match format {
        Format::Text => {
            for (label, c) in labels.iter().zip(&classes) {
                let residuals: Vec<String> =
                    c.leg_orbits.iter().map(|l| l.residual_order.to_string()).collect();
                outln!(
                    "{label}: {} | orbit {} | stabilizer {} | leg positions {} (residual orders [{}])",
                    c.representative,
                    c.orbit_size,
                    c.stabilizer_order,
                    c.leg_orbits.len(),
                    residuals.join(",")
                );
            }
            let legs: usize = classes.iter().map(|c| c.leg_orbits.len()).sum();
            let symmetric: usize = classes.iter().map(PairingClass::symmetric_leg_positions).sum();
            let orbits: usize = classes.iter().map(|c| c.orbit_size).sum();
            outln!(
                "total: {} classes, {orbits} pairings, {legs} leg positions, {symmetric} symmetric",
                classes.len()
            );
        }
        Format::Json => {
            #[derive(Serialize)]
            struct OctagonRecord<'a> {
                class: &'a str,
                #[serde(flatten)]
                data: &'a PairingClass,
            }
            for (label, c) in labels.iter().zip(&classes) {
                let record = OctagonRecord { class: label, data: c };
                outln!("{}", serde_json::to_string(&record).expect("record serializes"));
            }
        }
        Format::Csv => {
            outln!("class,representative,orbit_size,stabilizer_order,leg_positions,symmetric_legs");
            for (label, c) in labels.iter().zip(&classes) {
                outln!(
                    "{label},{},{},{},{},{}",
                    csv_quote(&c.representative.to_string()),
                    c.orbit_size,
                    c.stabilizer_order,
                    c.leg_orbits.len(),
                    c.symmetric_leg_positions()
                );
            }
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn output_record_round_trips_through_json() {
        let fd = FamilyDatum::new(0, 2, 6, Partition::new(vec![9, 2, 1]).unwrap()).unwrap();
        let record = OutputRecord {
            datum: fd,
            nu_formula: Some(2),
            nu_oracle: Some(2),
            case: Some(CaseLabel::V { q: 2, r: 1 }),
            realizations: Some(vec!["I(3,2,1)".parse().unwrap(), "II(4,1,1)".parse().unwrap()]),
            status: Status::Ok,
        };
        let js = serde_json::to_string(&record).unwrap();
        let back: OutputRecord = serde_json::from_str(&js).unwrap();
        assert_eq!(back.datum, record.datum);
        assert_eq!(back.nu_formula, record.nu_formula);
        assert_eq!(back.nu_oracle, record.nu_oracle);
        assert_eq!(back.case, record.case);
        assert_eq!(back.realizations, record.realizations);
        assert_eq!(back.status, record.status);
    }

    #[test]
    fn status_serializes_kebab_case() {
        assert_eq!(serde_json::to_string(&Status::OracleSkipped).unwrap(), "\"oracle-skipped\"");
        assert_eq!(serde_json::from_str::<Status>("\"erratum\"").unwrap(), Status::Erratum);
    }

    #[test]
    fn absent_fields_are_omitted() {
        let fd = FamilyDatum::new(1, 2, 5, Partition::new(vec![10]).unwrap()).unwrap();
        let record = OutputRecord {
            datum: fd,
            nu_formula: Some(4),
            nu_oracle: None,
            case: None,
            realizations: None,
            status: Status::Ok,
        };
        let js = serde_json::to_string(&record).unwrap();
        assert!(!js.contains("nu_oracle"));
        assert!(!js.contains("case"));
        assert!(!js.contains("realizations"));
        assert!(js.contains("\"status\":\"ok\""));
    }
}
