mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use packed_core::codes::{boosted_code, coinversion_code, enumerate_packed_words};
use packed_core::groebner::{buchberger, GroebnerCache, CACHE_DIR_ENV};
use packed_core::polyring::{MonomialOrder, Rational};
use packed_core::quotients::{
    calibration, graded_frobenius, ideal_i, ideal_j, QuotientRing, Report, RingKind, Suite, Verifier,
};
use packed_core::symfunc::{c_function, Convention, QPolynomial, SchurSymmetricFunction};
use rayon::prelude::*;
use serde_json::json;

use output::{columns, Failure, Format, Output};

#[derive(Parser)]
#[command(name = "packed", version, about = "Packed words, their codes, and the quotient rings they index")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory for persistent Gröbner basis cache files.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,

    /// Worker threads for verification cases; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Largest n accepted by any command.
    #[arg(long, global = true, default_value_t = 6)]
    max_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List packed words with at least k letters, their ordered set partitions and codes.
    Enumerate(Size),
    /// Reduced Gröbner basis of the defining ideal.
    Groebner {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Ring::S)]
        ring: Ring,
        #[arg(long, value_parser = parse_order, default_value = "lex")]
        order: MonomialOrder,
    },
    /// Hilbert series of the quotient ring.
    Hilbert {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Ring::S)]
        ring: Ring,
    },
    /// Graded Frobenius image of the quotient ring, computed from traces.
    Frobenius {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = Ring::S)]
        ring: Ring,
    },
    /// The tableau generating function C_{n,k}.
    Cfunction {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = ConventionArg::Calibrated)]
        convention: ConventionArg,
    },
    /// Run verification suites over all 1 <= k <= n <= n-max.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Defaults to 6 for bijection and 5 for the algebraic suites.
        #[arg(long)]
        n_max: Option<usize>,
        /// Distinct rationals for the point loci, e.g. `1,2,7/3`.
        #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
        alpha: Option<Vec<Rational>>,
    },
}

#[derive(Args, Clone, Copy)]
struct Size {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    /// Packed-word quotient Q[x]/J_{n,k}.
    #[value(name = "S")]
    S,
    /// Q[x]/I_{n,k}.
    #[value(name = "R")]
    R,
}

impl Ring {
    fn kind(self) -> RingKind {
        match self {
            Ring::S => RingKind::Packed,
            Ring::R => RingKind::Coinvariant,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    /// The convention selected by calibration against computed rings.
    Calibrated,
    /// The formula exactly as printed: conjugate shape, `+ (n-k) des`.
    Literal,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse().map_err(|e: packed_core::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|_| format!("{s:?} is not a rational number"))
}

struct Context {
    format: Format,
    cache: Option<GroebnerCache>,
    jobs: usize,
    max_n: usize,
}

impl Context {
    fn check(&self, size: Size) -> Result<(), Failure> {
        let Size { n, k } = size;
        if n == 0 || k == 0 || k > n {
            return Err(Failure::Usage(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
        }
        if n > self.max_n {
            return Err(Failure::Usage(format!("n = {n} exceeds --max-n {}", self.max_n)));
        }
        Ok(())
    }

    fn ring(&self, ring: Ring, size: Size) -> Result<QuotientRing, Failure> {
        self.check(size)?;
        let q = match ring {
            Ring::S => QuotientRing::packed(size.n, size.k, self.cache.as_ref())?,
            Ring::R => QuotientRing::coinvariant(size.n, size.k, self.cache.as_ref())?,
        };
        Ok(q)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = match cli.cache_dir.as_ref().map(GroebnerCache::new).transpose() {
        Ok(c) => c,
        Err(e) => return output::fail(&Failure::Usage(format!("cache directory: {e}"))),
    };
    let ctx = Context { format: cli.format, cache, jobs: cli.jobs, max_n: cli.max_n };
    let result = match cli.command {
        Command::Enumerate(size) => enumerate(&ctx, size),
        Command::Groebner { size, ring, order } => groebner(&ctx, size, ring, order),
        Command::Hilbert { size, ring } => hilbert(&ctx, size, ring),
        Command::Frobenius { size, ring } => frobenius(&ctx, size, ring),
        Command::Cfunction { size, convention } => cfunction(&ctx, size, convention),
        Command::Verify { suite, n_max, alpha } => verify(&ctx, &suite, n_max, alpha),
    };
    match result {
        Ok((out, code)) => {
            out.print(ctx.format);
            code
        }
        Err(f) => output::fail(&f),
    }
}

type Outcome = Result<(Output, ExitCode), Failure>;

fn enumerate(ctx: &Context, size: Size) -> Outcome {
    ctx.check(size)?;
    let words = enumerate_packed_words(size.n, size.k)?;
    let mut rows = Vec::with_capacity(words.len());
    let mut records = Vec::with_capacity(words.len());
    for w in &words {
        let sigma = w.to_osp();
        let code = coinversion_code(&sigma);
        let boosted = boosted_code(&sigma);
        records.push(vec![w.to_string(), sigma.to_string(), code.to_string(), boosted.to_string()]);
        rows.push(json!({ "word": w, "osp": sigma, "code": code.entries, "boosted_code": boosted.entries }));
    }
    let out = Output::new(
        json!({ "n": size.n, "k": size.k, "count": words.len(), "rows": rows }),
        columns(&["word", "osp", "code", "boosted_code"]),
        records,
    );
    Ok((out, ExitCode::SUCCESS))
}

fn groebner(ctx: &Context, size: Size, ring: Ring, order: MonomialOrder) -> Outcome {
    ctx.check(size)?;
    let ideal = match ring {
        Ring::S => ideal_j(size.n, size.k)?,
        Ring::R => ideal_i(size.n, size.k)?,
    };
    let kind = ring.kind();
    let gb = match &ctx.cache {
        Some(c) => c.get_or_compute(kind.cache_tag(), size.n, size.k, &ideal, order)?,
        None => buchberger(&ideal, order)?,
    };
    let records = gb.basis().iter().map(|p| vec![p.to_string()]).collect();
    let out = Output::new(
        json!({ "ring": kind, "n": size.n, "k": size.k, "order": order, "basis": gb.basis() }),
        columns(&["polynomial"]),
        records,
    );
    Ok((out, ExitCode::SUCCESS))
}

fn hilbert(ctx: &Context, size: Size, ring: Ring) -> Outcome {
    let q = ctx.ring(ring, size)?;
    let h = q.hilbert_series();
    let (header, record) = coefficient_row(columns(&["ring", "n", "k"]), vec![q.kind().to_string(), size.n.to_string(), size.k.to_string()], h, h.degree().unwrap_or(0));
    let out = Output::new(
        json!({ "ring": q.kind(), "n": size.n, "k": size.k, "dim": q.dim(), "hilbert": h, "display": h.to_string() }),
        header,
        vec![record],
    )
    .with_text(h.to_string());
    Ok((out, ExitCode::SUCCESS))
}

fn frobenius(ctx: &Context, size: Size, ring: Ring) -> Outcome {
    let q = ctx.ring(ring, size)?;
    let f = graded_frobenius(&q)?;
    let out = schur_output(json!({ "ring": q.kind(), "n": size.n, "k": size.k }), "frobenius", &f);
    Ok((out, ExitCode::SUCCESS))
}

fn cfunction(ctx: &Context, size: Size, convention: ConventionArg) -> Outcome {
    ctx.check(size)?;
    let conv = match convention {
        ConventionArg::Calibrated => calibration()?.convention,
        ConventionArg::Literal => Convention::LITERAL,
    };
    let c = c_function(size.n, size.k, conv)?;
    let header = json!({ "n": size.n, "k": size.k, "convention": conv, "convention_description": conv.to_string() });
    Ok((schur_output(header, "c", &c), ExitCode::SUCCESS))
}

/// JSON carries the whole function under `key`; CSV has one row per
/// partition with its coefficient list.
fn schur_output(mut header: serde_json::Value, key: &str, f: &SchurSymmetricFunction) -> Output {
    header[key] = serde_json::to_value(f).expect("serializable");
    let top = f.q_degree().unwrap_or(0);
    let mut csv_header = columns(&["lambda"]);
    let mut records = Vec::new();
    for (lambda, q) in f.terms() {
        let (h, r) = coefficient_row(columns(&["lambda"]), vec![lambda.to_string()], q, top);
        csv_header = h;
        records.push(r);
    }
    if records.is_empty() {
        csv_header = coefficient_row(columns(&["lambda"]), vec![], &QPolynomial::zero(), top).0;
    }
    Output::new(header, csv_header, records).with_text(f.to_string())
}

/// Appends the coefficients of `q^0 … q^top` as columns.
fn coefficient_row(
    mut header: Vec<String>,
    mut record: Vec<String>,
    q: &QPolynomial,
    top: usize,
) -> (Vec<String>, Vec<String>) {
    for d in 0..=top {
        header.push(format!("q{d}"));
        record.push(q.coefficient(d).to_string());
    }
    (header, record)
}

fn verify(ctx: &Context, suite: &str, n_max: Option<usize>, alpha: Option<Vec<Rational>>) -> Outcome {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let bound = |s: Suite| n_max.unwrap_or(if s.is_algebraic() { 5 } else { 6 });
    let largest = suites.iter().map(|&s| bound(s)).max().unwrap_or(0);
    if largest == 0 || largest > ctx.max_n {
        return Err(Failure::Usage(format!("--n-max must lie in 1..={}, got {largest}", ctx.max_n)));
    }
    if let Some(a) = &alpha {
        let distinct: std::collections::BTreeSet<&Rational> = a.iter().collect();
        if distinct.len() != a.len() {
            return Err(Failure::Usage("--alpha entries must be distinct".into()));
        }
        if a.len() < largest {
            return Err(Failure::Usage(format!("--alpha needs at least {largest} entries, got {}", a.len())));
        }
    }

    let calibrated = if suites.contains(&Suite::Frobenius) { Some(calibration()?) } else { None };
    let cases: Vec<(Suite, usize, usize)> = suites
        .iter()
        .flat_map(|&s| (1..=bound(s)).flat_map(move |n| (1..=n).map(move |k| (s, n, k))))
        .collect();
    let verifier = Verifier::new(ctx.cache.clone(), alpha);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(ctx.jobs)
        .build()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    let mut reports: Vec<Report> = pool
        .install(|| cases.par_iter().map(|&(s, n, k)| verifier.run(s, n, k)).collect::<Result<_, _>>())?;
    let rank = |name: &str| Suite::ALL.iter().position(|s| s.name() == name);
    reports.sort_by_key(|r| (rank(&r.theorem), r.n, r.k));

    let failed = reports.iter().filter(|r| !r.pass).count();
    let mut text = String::new();
    if let Some(c) = calibrated {
        text.push_str(&format!("calibration: {} with {:?} (checked at n = {:?})\n", c.convention, c.reflection, c.checked_n));
    }
    for r in &reports {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        text.push_str(&format!("{tag} {} n={} k={} [{} ms]\n", r.theorem, r.n, r.k, r.elapsed_ms));
    }
    text.push_str(&format!("{} passed, {failed} failed", reports.len() - failed));

    let records = reports
        .iter()
        .map(|r| vec![r.theorem.clone(), r.n.to_string(), r.k.to_string(), r.pass.to_string(), r.elapsed_ms.to_string()])
        .collect();
    let out = Output::new(
        json!({
            "suite": suite,
            "calibration": calibrated,
            "passed": reports.len() - failed,
            "failed": failed,
            "reports": reports,
        }),
        columns(&["theorem", "n", "k", "pass", "elapsed_ms"]),
        records,
    )
    .with_text(text);
    let code = if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) };
    Ok((out, code))
}
