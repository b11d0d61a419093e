//! Command-line front end: generation, classification scans, coterm
//! construction and cyclic codes, with JSON-lines or CSV output.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 when a check
//! disagrees with its oracle.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use reciprodick_core::classifier::{
    applicable_theorems, scan, summarize, ScanSummary, TheoremId, Verdict,
};
use reciprodick_core::codes::{
    build_cyclic_code, monic_divisors, self_reciprocal_divisors,
    verify_reversibility_by_enumeration, CodeReport,
};
use reciprodick_core::coterm::{
    coterm_construct, coterm_from_self_reciprocal, is_coterm, CotermContext, CotermTheorem,
};
use reciprodick_core::{BigInt, Error, Family, FamilySpec, Poly, Prime, Ring};
use serde::Serialize;

const DEFAULT_N_MAX: u64 = 200;
const DEFAULT_K: RangeInclusive<i64> = -5..=6;
const DEFAULT_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Parser, Debug)]
#[command(
    name = "reciprodick",
    version,
    about = "Self-reciprocal polynomials from reversed Dickson polynomials, coterm polynomials and reversible cyclic codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build family members and report their coefficients.
    Gen(Opts),
    /// Evaluate every applicable statement on the given members.
    Classify(Opts),
    /// Scan statements against the oracle; print mismatches and a summary.
    Verify(Opts),
    /// Build coterm polynomials from a construction or from a self-reciprocal member.
    Coterm(Opts),
    /// Build cyclic codes of length m over F_p from divisors of x^m - 1.
    Code(Opts),
    /// Scan statements and print every verdict, CSV by default.
    Table(Opts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RingArg {
    Z,
    Fp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
struct Opts {
    /// f, g, h, gstar, hstar, dickson, fchar2, kind1, kind2, kind3
    #[arg(long)]
    family: Option<String>,
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    n: Option<u64>,
    #[arg(long)]
    n_min: Option<u64>,
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["k_min", "k_max"])]
    k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k_min: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k_max: Option<i64>,
    #[arg(long, value_enum)]
    ring: Option<RingArg>,
    #[arg(long, conflicts_with = "p_list")]
    p: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    p_list: Option<Vec<u64>>,
    /// Parameter a of the Dickson family D.
    #[arg(long, allow_negative_numbers = true)]
    a: Option<String>,
    /// A statement id such as t2.1, c3.5, l1 or t5.4, or `all`.
    #[arg(long)]
    theorem: Option<String>,
    /// Code length.
    #[arg(long)]
    m: Option<usize>,
    /// Generator coefficients in ascending order, comma separated.
    #[arg(long, allow_negative_numbers = true)]
    generator: Option<String>,
    /// List codes for every monic divisor, not only the self-reciprocal ones.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

type Res<T> = std::result::Result<T, CliError>;

/// Rendered output plus whether any oracle disagreement was found.
struct Report {
    text: String,
    findings: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok((report, path)) => {
            let written = match path {
                Some(path) => fs::write(&path, &report.text),
                None => out.write_all(report.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "reciprodick: i/o error: {e}");
                return 1;
            }
            if report.findings {
                2
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "reciprodick: {e}");
            1
        }
    }
}

fn execute(command: Command) -> Res<(Report, Option<PathBuf>)> {
    let (opts, report) = match command {
        Command::Gen(o) => {
            let r = gen(&o)?;
            (o, r)
        }
        Command::Classify(o) => {
            let r = classify(&o)?;
            (o, r)
        }
        Command::Verify(o) => {
            let r = verify(&o, false)?;
            (o, r)
        }
        Command::Table(o) => {
            let r = verify(&o, true)?;
            (o, r)
        }
        Command::Coterm(o) => {
            let r = coterm(&o)?;
            (o, r)
        }
        Command::Code(o) => {
            let r = code(&o)?;
            (o, r)
        }
    };
    Ok((report, opts.out))
}

// Argument resolution.

fn n_range(o: &Opts, default_min: u64) -> Res<RangeInclusive<u64>> {
    let r = match o.n {
        Some(n) => n..=n,
        None => o.n_min.unwrap_or(default_min)..=o.n_max.unwrap_or(DEFAULT_N_MAX),
    };
    if r.is_empty() {
        return Err(usage(format!("empty n range {}..={}", r.start(), r.end())));
    }
    Ok(r)
}

fn k_range(o: &Opts, default: RangeInclusive<i64>) -> Res<RangeInclusive<i64>> {
    let r = match o.k {
        Some(k) => k..=k,
        None => o.k_min.unwrap_or(*default.start())..=o.k_max.unwrap_or(*default.end()),
    };
    if r.is_empty() {
        return Err(usage(format!("empty k range {}..={}", r.start(), r.end())));
    }
    Ok(r)
}

fn primes(o: &Opts) -> Res<Vec<Prime>> {
    let raw: Vec<u64> = match (&o.p, &o.p_list) {
        (Some(p), _) => vec![*p],
        (None, Some(list)) => list.clone(),
        (None, None) => DEFAULT_PRIMES.to_vec(),
    };
    Ok(raw.into_iter().map(Prime::new).collect::<Result<_, _>>()?)
}

fn explicit_primes(o: &Opts) -> bool {
    o.p.is_some() || o.p_list.is_some()
}

fn family(o: &Opts) -> Res<Family> {
    let name = o
        .family
        .as_deref()
        .ok_or_else(|| usage("--family is required"))?;
    Ok(name.parse()?)
}

fn rings_for_family(o: &Opts, family: Family) -> Res<Vec<Ring>> {
    match o.ring {
        Some(RingArg::Z) => Ok(vec![Ring::Integers]),
        Some(RingArg::Fp) => {
            if !explicit_primes(o) {
                return Err(usage("--ring fp needs --p or --p-list"));
            }
            Ok(primes(o)?.into_iter().map(Ring::PrimeField).collect())
        }
        None if family == Family::Char2 => Ok(vec![Ring::f2()]),
        None if explicit_primes(o) => Ok(primes(o)?.into_iter().map(Ring::PrimeField).collect()),
        None => Ok(vec![Ring::Integers]),
    }
}

fn parse_a(o: &Opts) -> Res<Option<BigInt>> {
    o.a.as_deref()
        .map(|s| {
            s.parse()
                .map_err(|_| usage(format!("--a expects an integer, got {s:?}")))
        })
        .transpose()
}

/// Family members over the requested grid. A single requested member that
/// fails validation is an error; members of a larger grid that do not exist
/// are skipped.
fn grid(o: &Opts) -> Res<Vec<FamilySpec>> {
    let family = family(o)?;
    let rings = rings_for_family(o, family)?;
    let ns = n_range(o, 0)?;
    if o.n.is_none() && o.n_max.is_none() {
        return Err(usage("give --n or --n-max"));
    }
    let ks = if family.uses_k() {
        k_range(o, DEFAULT_K)?
    } else {
        1..=1
    };
    let a = parse_a(o)?;
    let mut specs = Vec::new();
    for n in ns {
        for k in ks.clone() {
            for &ring in &rings {
                let mut spec = FamilySpec::new(family, n, k, ring);
                if let Some(a) = &a {
                    spec = spec.with_a(a.clone());
                }
                specs.push(spec);
            }
        }
    }
    if specs.len() == 1 {
        specs[0].validate()?;
        return Ok(specs);
    }
    specs.retain(|s| s.validate().is_ok());
    if specs.is_empty() {
        return Err(usage("no member of the requested grid exists"));
    }
    Ok(specs)
}

fn format(o: &Opts, default: Format) -> Format {
    o.format.unwrap_or(default)
}

fn json_line<T: Serialize>(text: &mut String, value: &T) {
    text.push_str(&serde_json::to_string(value).expect("serialisable"));
    text.push('\n');
}

fn csv_p(ring: Ring) -> String {
    ring.modulus().map(|p| p.to_string()).unwrap_or_default()
}

// gen

#[derive(Serialize)]
struct GenLine<'a> {
    spec: &'a FamilySpec,
    poly: &'a Poly,
    degree: Option<usize>,
    self_reciprocal: bool,
}

fn gen(o: &Opts) -> Res<Report> {
    let fmt = format(o, Format::Json);
    let mut text = String::new();
    if fmt == Format::Csv {
        text.push_str("family,n,k,p,a,degree,self_reciprocal,coeffs\n");
    }
    for spec in grid(o)? {
        let poly = spec.build()?;
        let degree = poly.degree();
        match fmt {
            Format::Json => json_line(
                &mut text,
                &GenLine {
                    spec: &spec,
                    poly: &poly,
                    degree,
                    self_reciprocal: poly.is_self_reciprocal(),
                },
            ),
            Format::Csv => text.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                spec.family,
                spec.n,
                spec.k,
                csv_p(spec.ring),
                spec.a.as_ref().map(|a| a.to_string()).unwrap_or_default(),
                degree.map(|d| d.to_string()).unwrap_or_default(),
                poly.is_self_reciprocal(),
                poly.coeff_strings().join(";")
            )),
        }
    }
    Ok(Report {
        text,
        findings: false,
    })
}

// classify

#[derive(Serialize)]
struct ClassifyLine<'a> {
    spec: &'a FamilySpec,
    poly: &'a Poly,
    self_reciprocal: bool,
    verdicts: &'a [Verdict],
}

const VERDICT_HEADER: &str = "theorem,family,n,k,p,predicted,observed,match\n";

fn verdict_row(v: &Verdict) -> String {
    format!(
        "{},{},{},{},{},{},{},{}\n",
        v.theorem,
        v.spec.family,
        v.spec.n,
        v.spec.k,
        csv_p(v.spec.ring),
        v.predicted,
        v.observed,
        v.matches()
    )
}

fn classify(o: &Opts) -> Res<Report> {
    let fmt = format(o, Format::Json);
    let mut text = String::new();
    let mut findings = false;
    if fmt == Format::Csv {
        text.push_str(VERDICT_HEADER);
    }
    for spec in grid(o)? {
        let poly = spec.build()?;
        let verdicts = applicable_theorems(&spec)
            .into_iter()
            .map(|t| Verdict::evaluate(t, spec.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        findings |= verdicts.iter().any(|v| !v.matches());
        match fmt {
            Format::Json => json_line(
                &mut text,
                &ClassifyLine {
                    spec: &spec,
                    poly: &poly,
                    self_reciprocal: poly.is_self_reciprocal(),
                    verdicts: &verdicts,
                },
            ),
            Format::Csv => verdicts.iter().for_each(|v| text.push_str(&verdict_row(v))),
        }
    }
    Ok(Report { text, findings })
}

// verify and table

fn theorems(o: &Opts) -> Res<Vec<TheoremId>> {
    match o.theorem.as_deref() {
        None => Err(usage("--theorem is required (an id or `all`)")),
        Some(s) if s.eq_ignore_ascii_case("all") => Ok(TheoremId::ALL.to_vec()),
        Some(s) => Ok(vec![s.parse()?]),
    }
}

fn over_odd_fields(t: TheoremId) -> bool {
    use TheoremId::*;
    matches!(t, T3_1 | T3_4 | C3_2 | C3_3 | C3_5 | L1)
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a ScanSummary,
}

fn verify(o: &Opts, table: bool) -> Res<Report> {
    let fmt = format(o, if table { Format::Csv } else { Format::Json });
    let ps = primes(o)?;
    let ns = n_range(o, 0)?;
    let mut text = String::new();
    let mut findings = false;
    let mut summaries = Vec::new();
    if fmt == Format::Csv && table {
        text.push_str(VERDICT_HEADER);
    }
    for t in theorems(o)? {
        let default_k = if over_odd_fields(t) {
            let top = ps.iter().map(|p| p.get() as i64).max().unwrap_or(2) - 1;
            0..=top
        } else {
            DEFAULT_K
        };
        let verdicts = scan(t, ns.clone(), k_range(o, default_k)?, &ps);
        let summary = summarize(t, &verdicts);
        findings |= summary.mismatched > 0;
        for v in verdicts.iter().filter(|v| table || !v.matches()) {
            match fmt {
                Format::Json => json_line(&mut text, v),
                Format::Csv if table => text.push_str(&verdict_row(v)),
                Format::Csv => {}
            }
        }
        summaries.push(summary);
    }
    if !table {
        match fmt {
            Format::Json => summaries
                .iter()
                .for_each(|s| json_line(&mut text, &SummaryLine { summary: s })),
            Format::Csv => {
                text.push_str("theorem,checked,matched,mismatched,mismatch_n\n");
                for s in &summaries {
                    let ns: Vec<String> = s.mismatch_n.iter().map(u64::to_string).collect();
                    text.push_str(&format!(
                        "{},{},{},{},{}\n",
                        s.theorem,
                        s.checked,
                        s.matched,
                        s.mismatched,
                        ns.join(";")
                    ));
                }
            }
        }
    }
    Ok(Report { text, findings })
}

// coterm

#[derive(Serialize)]
struct CotermLine<'a> {
    source: &'a str,
    n: u64,
    k: i64,
    ring: Ring,
    m: usize,
    poly: &'a Poly,
    degenerate: bool,
    coterm: bool,
}

fn coterm_theorems(o: &Opts) -> Res<Vec<CotermTheorem>> {
    match o.theorem.as_deref() {
        None => Err(usage("coterm needs --theorem (t5.1 ... t5.9, char2, all) or --family")),
        Some(s) if s.eq_ignore_ascii_case("all") => Ok(CotermTheorem::ALL.to_vec()),
        Some(s) => Ok(vec![s.parse()?]),
    }
}

fn coterm_rings(o: &Opts, t: CotermTheorem) -> Res<Vec<Ring>> {
    Ok(match t {
        CotermTheorem::Char2 => vec![Ring::f2()],
        t if t.over_integers() => vec![Ring::Integers],
        _ => primes(o)?.into_iter().map(Ring::PrimeField).collect(),
    })
}

struct CotermRow {
    source: String,
    n: u64,
    k: i64,
    ring: Ring,
    poly: Poly,
    ctx: CotermContext,
    degenerate: bool,
}

fn coterm(o: &Opts) -> Res<Report> {
    let fmt = format(o, Format::Json);
    let mut rows = Vec::new();
    if o.family.is_some() {
        let specs = grid(o)?;
        let single = specs.len() == 1;
        for spec in specs {
            match coterm_from_self_reciprocal(&spec.build()?) {
                Ok((poly, ctx)) => rows.push(CotermRow {
                    source: spec.family.to_string(),
                    n: spec.n,
                    k: spec.k,
                    ring: spec.ring,
                    poly,
                    ctx,
                    degenerate: false,
                }),
                Err(e) if single => return Err(e.into()),
                Err(_) => {}
            }
        }
    } else {
        let ts = coterm_theorems(o)?;
        let ns = n_range(o, 0)?;
        let single = ts.len() == 1 && o.n.is_some();
        for t in ts {
            let k = o.k.unwrap_or(t.k());
            for ring in coterm_rings(o, t)? {
                for n in ns.clone() {
                    match coterm_construct(t, n, k, ring) {
                        Ok(c) => rows.push(CotermRow {
                            source: t.to_string(),
                            n,
                            k,
                            ring,
                            poly: c.poly,
                            ctx: c.ctx,
                            degenerate: c.degenerate,
                        }),
                        Err(Error::Hypothesis { .. }) if !single => {}
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return Err(usage("no construction applies on the requested range"));
    }
    let mut text = String::new();
    let mut findings = false;
    if fmt == Format::Csv {
        text.push_str("source,n,k,p,m,degenerate,coterm,coeffs\n");
    }
    for r in &rows {
        let ok = is_coterm(&r.poly, &r.ctx)?;
        findings |= !ok;
        match fmt {
            Format::Json => json_line(
                &mut text,
                &CotermLine {
                    source: &r.source,
                    n: r.n,
                    k: r.k,
                    ring: r.ring,
                    m: r.ctx.m(),
                    poly: &r.poly,
                    degenerate: r.degenerate,
                    coterm: ok,
                },
            ),
            Format::Csv => text.push_str(&format!(
                "{},{},{},{},{},{},{ok},{}\n",
                r.source,
                r.n,
                r.k,
                csv_p(r.ring),
                r.ctx.m(),
                r.degenerate,
                r.poly.coeff_strings().join(";")
            )),
        }
    }
    Ok(Report { text, findings })
}

// code

fn parse_generator(s: &str, ring: Ring) -> Res<Poly> {
    let coeffs = s
        .split(',')
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| usage(format!("--generator coefficient {c:?} is not an integer")))
        })
        .collect::<Res<Vec<_>>>()?;
    Ok(Poly::new(ring, coeffs))
}

fn code(o: &Opts) -> Res<Report> {
    let fmt = format(o, Format::Json);
    let p = Prime::new(o.p.ok_or_else(|| usage("code needs --p"))?)?;
    let m = o.m.ok_or_else(|| usage("code needs --m"))?;
    let ring = Ring::PrimeField(p);
    let generators = match &o.generator {
        Some(g) => vec![parse_generator(g, ring)?],
        None if o.all => monic_divisors(p, m)?,
        None => self_reciprocal_divisors(p, m)?,
    };
    let mut text = String::new();
    let mut findings = false;
    if fmt == Format::Csv {
        text.push_str("p,m,generator,dimension,reversible,self_reciprocal,enumeration_checked\n");
    }
    for g in generators {
        let code = build_cyclic_code(p, m, g)?;
        let enumerated = match verify_reversibility_by_enumeration(&code) {
            Ok(b) => Some(b),
            Err(Error::Capacity(_)) => None,
            Err(e) => return Err(e.into()),
        };
        findings |= enumerated.is_some_and(|b| b != code.reversible);
        let report = CodeReport::new(&code, enumerated);
        match fmt {
            Format::Json => json_line(&mut text, &report),
            Format::Csv => text.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                report.p,
                report.m,
                report.generator.join(";"),
                report.dimension,
                report.reversible,
                report.self_reciprocal,
                report.enumeration_checked
            )),
        }
    }
    Ok(Report { text, findings })
}
