//! The `powmon` command line. [`run`] takes the argument list and output
//! streams and returns the exit code: `0` for success or a true predicate,
//! `1` for a false predicate or a failed verification, `2` for errors.

mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::cancellativity::{are_relatively_prime, gcd_criterion, relcanc_witness};
use crate::constructors::{
    build_family, certify_elasticity, compose_sum, for_elasticity, from_generators,
    generator_length_set, interval_three, shift_structure, verify_family, verify_shift,
};
use crate::error::Error;
use crate::factorizer::{Factorizer, LengthSet, DEFAULT_BUDGET};
use crate::finset::FinSet;
use crate::rational::Rational;
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Largest `max_element` counted exhaustively by `density`.
pub const DENSITY_EXACT_MAX: u64 = 20;

const BUDGET_ENV: &str = "POWMON_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "powmon",
    version,
    about = "Sumsets, factorizations and length sets of finite sets of naturals containing 0"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Search budget in visited nodes (default 10^8, or $POWMON_BUDGET).
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sumset of one or more sets.
    Sumset {
        #[arg(required = true)]
        sets: Vec<FinSet>,
    },
    /// Exit 0 if the set is an atom, 1 otherwise.
    Atom { set: FinSet },
    /// All divisors, one per line.
    Divisors {
        set: FinSet,
        /// Only the atoms among them.
        #[arg(long)]
        atoms: bool,
    },
    /// All factorizations and the length set.
    Factorize { set: FinSet },
    /// The length set.
    Lengthset { set: FinSet },
    /// max(L) / min(L).
    Elasticity { set: FinSet },
    /// Exit 0 if relatively cancellative; otherwise print a witness and exit 1.
    Relcanc { set: FinSet },
    /// Exit 0 if {0} is the only common divisor.
    Relprime { a: FinSet, b: FinSet },
    /// Exit 0 if factorizations sharing an atom always coincide.
    Gcdcrit { set: FinSet },
    /// The two-word family S_0..S_i.
    Family {
        i: usize,
        /// Explicit n_1,...,n_i (default: the minimal choice).
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Check the factorization claims for S_i.
        #[arg(long)]
        verify: bool,
    },
    /// x + (2 max(x) + 1) y for relatively cancellative x, y.
    Compose { x: FinSet, y: FinSet },
    /// A set with length set {c} + {2,n_1} + ... + {2,n_k}.
    Generators {
        c: usize,
        ns: Vec<u64>,
        #[arg(long)]
        verify: bool,
    },
    /// A set with length set {k, k+1, k+2}.
    Interval {
        k: usize,
        #[arg(long)]
        verify: bool,
    },
    /// A set with elasticity q.
    ConstructElasticity {
        q: Rational,
        #[arg(long)]
        verify: bool,
    },
    /// Factorization structure of x + {0,n} for n > 2 max(x).
    #[command(name = "prop36", visible_alias = "shift")]
    Shift {
        x: FinSet,
        n: u64,
        #[arg(long)]
        verify: bool,
    },
    /// Run the worked-example fixture suite.
    VerifyPaper {
        /// Also check the family at i = 3.
        #[arg(long)]
        include_slow: bool,
    },
    /// Count atoms among subsets of [0, max_element] containing 0.
    Density {
        max_element: u64,
        /// Sample this many sets uniformly instead of counting all.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Ctx<'a> {
    json: bool,
    budget: u64,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn factorizer(&self) -> Factorizer {
        Factorizer::with_budget(self.budget)
    }

    fn line(&mut self, s: impl std::fmt::Display) -> std::io::Result<()> {
        writeln!(self.out, "{s}")
    }

    fn emit(&mut self, value: &impl Serialize) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(value).expect("serializable");
        writeln!(self.out, "{text}")
    }

    fn predicate(&mut self, value: bool) -> Result<i32, Failure> {
        if self.json {
            self.emit(&json!({ "result": value }))?;
        } else {
            self.line(value)?;
        }
        Ok(if value { EXIT_OK } else { EXIT_FALSE })
    }

    fn report(&mut self, r: &Report) -> Result<i32, Failure> {
        if self.json {
            self.emit(r)?;
        } else {
            write!(self.out, "{r}")?;
        }
        Ok(if r.passed() { EXIT_OK } else { EXIT_FALSE })
    }
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let budget = match cli.budget {
        Some(b) => b,
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => match v.trim().parse() {
                Ok(b) => b,
                Err(_) => {
                    let _ = writeln!(err, "error: invalid value '{v}' for {BUDGET_ENV}");
                    return EXIT_ERROR;
                }
            },
            Err(_) => DEFAULT_BUDGET,
        },
    };
    let mut ctx = Ctx {
        json: cli.json,
        budget,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_ERROR
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>, command: Command) -> Result<i32, Failure> {
    let f = ctx.factorizer();
    match command {
        Command::Sumset { sets } => {
            let s = FinSet::sum_all(&sets)?;
            if ctx.json {
                ctx.emit(&s)?;
            } else {
                ctx.line(&s)?;
            }
            Ok(EXIT_OK)
        }
        Command::Atom { set } => {
            let v = f.is_atom(&set)?;
            ctx.predicate(v)
        }
        Command::Divisors { set, atoms } => {
            let divs = if atoms {
                f.atom_divisors(&set)?
            } else {
                f.divisors(&set)?
            };
            if ctx.json {
                ctx.emit(&divs)?;
            } else {
                for d in &divs {
                    ctx.line(d)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Factorize { set } => {
            let z = f.factorizations(&set)?;
            let l: LengthSet = z.iter().map(|w| w.len()).collect();
            if ctx.json {
                ctx.emit(&json!({ "factorizations": z, "length_set": l }))?;
            } else {
                for w in &z {
                    ctx.line(w)?;
                }
                ctx.line(format_args!("lengths {l}"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Lengthset { set } => {
            let l = f.length_set(&set)?;
            if ctx.json {
                ctx.emit(&l)?;
            } else {
                ctx.line(&l)?;
            }
            Ok(EXIT_OK)
        }
        Command::Elasticity { set } => {
            let rho = f.elasticity_of_set(&set)?;
            if ctx.json {
                ctx.emit(&json!({ "elasticity": rho.to_string() }))?;
            } else {
                ctx.line(rho)?;
            }
            Ok(EXIT_OK)
        }
        Command::Relcanc { set } => {
            let w = relcanc_witness(&f, &set)?;
            if ctx.json {
                ctx.emit(&json!({ "relcanc": w.is_none(), "witness": w }))?;
            } else {
                ctx.line(w.is_none())?;
                if let Some(w) = &w {
                    ctx.line(format_args!("{} + {} = {} + {}", w.b, w.c, w.b, w.d))?;
                }
            }
            Ok(if w.is_none() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Relprime { a, b } => {
            let v = are_relatively_prime(&f, &a, &b)?;
            ctx.predicate(v)
        }
        Command::Gcdcrit { set } => {
            let v = gcd_criterion(&f, &set)?;
            ctx.predicate(v)
        }
        Command::Family { i, n, verify } => {
            let fam = build_family(i, n.as_deref())?;
            let report = if verify {
                Some(verify_family(&f, &fam)?)
            } else {
                None
            };
            if ctx.json {
                ctx.emit(&json!({ "family": fam, "report": report }))?;
            } else {
                for j in 0..=i {
                    let n = if j == 0 { 0 } else { fam.n[j - 1] };
                    ctx.line(format_args!(
                        "j={j} n={n} A={} B={} C={} D={} S={}",
                        fam.a[j], fam.b[j], fam.c[j], fam.d[j], fam.s[j]
                    ))?;
                }
                if let Some(r) = &report {
                    write!(ctx.out, "{r}")?;
                }
            }
            Ok(match report {
                Some(r) if !r.passed() => EXIT_FALSE,
                _ => EXIT_OK,
            })
        }
        Command::Compose { x, y } => {
            let w = compose_sum(&f, &x, &y)?;
            if ctx.json {
                ctx.emit(&w)?;
            } else {
                ctx.line(&w)?;
            }
            Ok(EXIT_OK)
        }
        Command::Generators { c, ns, verify } => {
            let w = from_generators(c, &ns)?;
            let expected = generator_length_set(c, &ns);
            constructed(ctx, &f, &w, &expected, verify)
        }
        Command::Interval { k, verify } => {
            let w = interval_three(k)?;
            let expected: LengthSet = (k..=k + 2).collect();
            constructed(ctx, &f, &w, &expected, verify)
        }
        Command::ConstructElasticity { q, verify } => {
            if !verify {
                let w = for_elasticity(q)?;
                if ctx.json {
                    ctx.emit(&json!({ "q": q.to_string(), "set": w }))?;
                } else {
                    ctx.line(&w)?;
                }
                return Ok(EXIT_OK);
            }
            let cert = certify_elasticity(&f, q)?;
            if ctx.json {
                ctx.emit(&json!({
                    "q": q.to_string(),
                    "set": cert.set,
                    "length_set": cert.length_set,
                    "rho": cert.rho.to_string(),
                    "method": cert.method,
                    "passed": cert.passed(),
                }))?;
            } else {
                ctx.line(&cert.set)?;
                ctx.line(format_args!("rho = {} ({})", cert.rho, cert.method))?;
                if !cert.passed() {
                    write!(ctx.out, "{}", cert.report)?;
                }
            }
            Ok(if cert.passed() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Shift { x, n, verify } => {
            if verify {
                let r = verify_shift(&f, &x, n)?;
                return ctx.report(&r);
            }
            let st = shift_structure(&f, &x, n)?;
            if ctx.json {
                ctx.emit(&st)?;
            } else {
                for a in &st.n_set {
                    ctx.line(a)?;
                }
                ctx.line(format_args!("{} triple(s)", st.m_triples.len()))?;
            }
            Ok(EXIT_OK)
        }
        Command::VerifyPaper { include_slow } => verify_suite(ctx, include_slow),
        Command::Density {
            max_element,
            samples,
            seed,
        } => density(ctx, &f, max_element, samples, seed),
    }
}

fn constructed(
    ctx: &mut Ctx<'_>,
    f: &Factorizer,
    w: &FinSet,
    expected: &LengthSet,
    verify: bool,
) -> Result<i32, Failure> {
    let actual = if verify { Some(f.length_set(w)?) } else { None };
    let ok = actual.as_ref().is_none_or(|l| l == expected);
    if ctx.json {
        ctx.emit(&json!({
            "set": w,
            "length_set": actual.as_ref().unwrap_or(expected),
            "verified": actual.is_some(),
            "passed": ok,
        }))?;
    } else {
        ctx.line(w)?;
        match &actual {
            Some(l) => ctx.line(format_args!("L = {l} (verified)"))?,
            None => ctx.line(format_args!("L = {expected}"))?,
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
}

fn verify_suite(ctx: &mut Ctx<'_>, include_slow: bool) -> Result<i32, Failure> {
    let items = suite::items(include_slow);
    let budget = ctx.budget;
    let results: Vec<(&str, crate::error::Result<Report>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .iter()
            .map(|&(name, item)| {
                scope.spawn(move || (name, item(&Factorizer::with_budget(budget))))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite item panicked"))
            .collect()
    });

    let mut failed = 0;
    let mut json_items = Vec::new();
    for (name, res) in &results {
        let ok = matches!(res, Ok(r) if r.passed());
        if !ok {
            failed += 1;
        }
        if ctx.json {
            json_items.push(match res {
                Ok(r) => json!({ "item": name, "passed": ok, "report": r }),
                Err(e) => json!({ "item": name, "passed": false, "error": e.to_string() }),
            });
            continue;
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        ctx.line(format_args!("[{tag}] {name}"))?;
        match res {
            Ok(r) => {
                for c in r.checks.iter().filter(|c| !c.passed) {
                    ctx.line(format_args!("    failed: {} {}", c.name, c.detail))?;
                }
            }
            Err(e) => ctx.line(format_args!("    error: {e}"))?,
        }
    }
    if ctx.json {
        ctx.emit(&json!({ "items": json_items, "passed": failed == 0 }))?;
    } else if failed == 0 {
        ctx.line(format_args!("all {} items passed", results.len()))?;
    } else {
        ctx.line(format_args!("{failed} of {} items failed", results.len()))?;
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FALSE })
}

#[derive(Serialize)]
struct DensityCounts {
    max_element: u64,
    exact: bool,
    atoms: u64,
    sets: u64,
    ratio: f64,
}

fn density(
    ctx: &mut Ctx<'_>,
    f: &Factorizer,
    max_element: u64,
    samples: Option<u64>,
    seed: u64,
) -> Result<i32, Failure> {
    let free: Vec<u64> = (1..=max_element).collect();
    let (atoms, sets, exact) = match samples {
        None => {
            if max_element > DENSITY_EXACT_MAX {
                return Err(Failure::Usage(format!(
                    "<MAX_ELEMENT> {max_element} is above {DENSITY_EXACT_MAX}; pass --samples to sample"
                )));
            }
            let mut atoms = 0;
            for bits in 0u64..1 << max_element {
                let elems = std::iter::once(0)
                    .chain(free.iter().copied().filter(|&x| bits >> (x - 1) & 1 == 1))
                    .collect();
                if f.is_atom(&FinSet::new(elems)?)? {
                    atoms += 1;
                }
            }
            (atoms, 1u64 << max_element, true)
        }
        Some(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut atoms = 0;
            for _ in 0..n {
                let elems = std::iter::once(0)
                    .chain(free.iter().copied().filter(|_| rng.gen_bool(0.5)))
                    .collect();
                if f.is_atom(&FinSet::new(elems)?)? {
                    atoms += 1;
                }
            }
            (atoms, n, false)
        }
    };
    let ratio = if sets == 0 {
        0.0
    } else {
        atoms as f64 / sets as f64
    };
    if ctx.json {
        ctx.emit(&DensityCounts {
            max_element,
            exact,
            atoms,
            sets,
            ratio,
        })?;
    } else {
        let frac = if sets == 0 {
            "0/0".to_string()
        } else {
            Rational::new(atoms, sets)?.to_string()
        };
        let mode = if exact { "exact" } else { "sampled" };
        ctx.line(format_args!("{atoms} atoms of {sets} sets ({mode})"))?;
        ctx.line(format_args!("ratio {frac} = {ratio:.6}"))?;
    }
    Ok(EXIT_OK)
}
