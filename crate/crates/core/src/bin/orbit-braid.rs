use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orbit_braid::random::{random_pure_word, random_word};
use orbit_braid::{
    check_boundary, check_equivariance, comb_with_budget, compose, decompose, eq_endo, eq_plane,
    eq_punctured, eq_punctured_with, multiply_back, parse_conjugate_form, render, rho_word, twist,
    BraidWord, Endo, Error, GroupParams, RankOnePolicy, RenderStyle, DEFAULT_MAX_BASIS_LENGTH,
};

#[derive(Parser)]
#[command(name = "orbit-braid", version, about = "Orbit braid group computations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Plane,
    Punctured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide equality of two braid words.
    Eq {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        w1: String,
        w2: String,
    },
    /// Print the automorphism of a braid word.
    Endo {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        w: String,
    },
    /// Recover a braid word and twist power from an automorphism file.
    Decompose {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        file: PathBuf,
    },
    /// Comb a pure braid word into per-level kernel words.
    Comb {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_BASIS_LENGTH)]
        max_basis_length: usize,
        w: String,
    },
    /// Run the relation and round-trip checks over a parameter grid.
    Selftest {
        #[arg(long, value_parser = parse_range)]
        p: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw a braid word as SVG.
    Render {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        w: String,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a == 0 || a > b {
        return Err(format!("empty or invalid range {s:?}"));
    }
    Ok(a..=b)
}

fn fail(code: u8, err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Eq { space, p, n, w1, w2 } => cmd_eq(space, p, n, &w1, &w2),
        Cmd::Endo { p, n, w } => cmd_endo(p, n, &w),
        Cmd::Decompose { p, n, file } => cmd_decompose(p, n, &file),
        Cmd::Comb { p, n, max_basis_length, w } => cmd_comb(p, n, max_basis_length, &w),
        Cmd::Selftest { p, n, seed } => cmd_selftest(p, n, seed),
        Cmd::Render { p, n, out, w } => cmd_render(p, n, &out, &w),
    }
}

fn params_and_word(p: usize, n: usize, w: &str) -> Result<(GroupParams, BraidWord), Error> {
    let params = GroupParams::new(p, n)?;
    let word = BraidWord::parse(w, &params)?;
    Ok((params, word))
}

fn cmd_eq(space: Space, p: usize, n: usize, w1: &str, w2: &str) -> ExitCode {
    let verdict = params_and_word(p, n, w1).and_then(|(params, a)| {
        let b = BraidWord::parse(w2, &params)?;
        match space {
            Space::Plane => eq_plane(&a, &b, &params),
            Space::Punctured => eq_punctured_with(&a, &b, &params, RankOnePolicy::RotExponent),
        }
    });
    match verdict {
        Ok(true) => {
            println!("equal");
            ExitCode::SUCCESS
        }
        Ok(false) => {
            println!("not-equal");
            ExitCode::from(1)
        }
        Err(e) => fail(2, e),
    }
}

fn cmd_endo(p: usize, n: usize, w: &str) -> ExitCode {
    match params_and_word(p, n, w).and_then(|(params, word)| rho_word(&word, &params)) {
        Ok(e) => {
            print!("{e}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(2, e),
    }
}

fn cmd_decompose(p: usize, n: usize, file: &PathBuf) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail(2, format!("{}: {e}", file.display())),
    };
    let parsed = GroupParams::new(p, n).and_then(|params| Ok((params, Endo::parse(&text, &params)?)));
    let (params, e) = match parsed {
        Ok(x) => x,
        Err(e) => return fail(2, e),
    };
    match decompose(&e, &params) {
        Ok((w, m)) => {
            println!("{w}");
            println!("twist: {m}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(3, e),
    }
}

fn cmd_comb(p: usize, n: usize, max_len: usize, w: &str) -> ExitCode {
    let (params, word) = match params_and_word(p, n, w) {
        Ok(x) => x,
        Err(e) => return fail(2, e),
    };
    match comb_with_budget(&word, &params, max_len) {
        Ok(c) => {
            print!("{c}");
            ExitCode::SUCCESS
        }
        Err(e @ Error::SearchBudgetExceeded(_)) => fail(4, e),
        Err(e) => fail(2, e),
    }
}

fn cmd_render(p: usize, n: usize, out: &PathBuf, w: &str) -> ExitCode {
    let (params, word) = match params_and_word(p, n, w) {
        Ok(x) => x,
        Err(e) => return fail(2, e),
    };
    match std::fs::write(out, render(&word, &params, &RenderStyle::default())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(2, format!("{}: {e}", out.display())),
    }
}

struct Report {
    failed: bool,
}

impl Report {
    fn check(&mut self, name: &str, ok: Result<bool, Error>) {
        match ok {
            Ok(true) => println!("{name} : PASS"),
            Ok(false) => {
                println!("{name} : FAIL");
                self.failed = true;
            }
            Err(e) => {
                println!("{name} : FAIL");
                eprintln!("{name}: {e}");
                self.failed = true;
            }
        }
    }

    fn record(&mut self, name: &str, verdict: Result<bool, Error>) {
        match verdict {
            Ok(v) => println!("{name} : RECORDED {}", if v { "equal" } else { "not-equal" }),
            Err(e) => println!("{name} : RECORDED error ({e})"),
        }
    }
}

const SAMPLES: usize = 20;

fn cmd_selftest(ps: RangeInclusive<usize>, ns: RangeInclusive<usize>, seed: u64) -> ExitCode {
    let mut report = Report { failed: false };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for p in ps {
        for n in ns.clone() {
            println!("[p={p} n={n}]");
            let params = GroupParams::new(p, n).expect("ranges start at 1");
            let w = |s: &str| BraidWord::parse(s, &params).expect("fixed words parse");
            let same = |a: &str, b: &str| eq_endo(&rho_word(&w(a), &params)?, &rho_word(&w(b), &params)?);

            for k in 0..n.saturating_sub(2) {
                let (a, b) = (format!("b{k} b{} b{k}", k + 1), format!("b{} b{k} b{}", k + 1, k + 1));
                report.check(&format!("b{k}b{}b{k} == b{}b{k}b{}", k + 1, k + 1, k + 1), same(&a, &b));
            }
            for k in 0..n.saturating_sub(1) {
                for l in k + 2..n.saturating_sub(1) {
                    report.check(&format!("b{k}b{l} == b{l}b{k}"), same(&format!("b{k} b{l}"), &format!("b{l} b{k}")));
                }
            }
            for k in 1..n.saturating_sub(1) {
                report.check(&format!("b{k}b == bb{k}"), same(&format!("b{k} b"), &format!("b b{k}")));
            }
            report.check(
                "rho(b^p) == twist(1)",
                rho_word(&w(&format!("b^{p}")), &params).map(|e| e == twist(&params, 1)),
            );
            if n >= 2 {
                let (bb0, b0b) = (w("b b0").pow(p as i64), w("b0 b").pow(p as i64));
                let rel = rho_word(&bb0, &params)
                    .and_then(|x| eq_endo(&x, &rho_word(&b0b, &params)?));
                if p % 2 == 0 {
                    report.check("(bb0)^p == (b0b)^p", rel);
                } else {
                    report.record("(bb0)^p == (b0b)^p", rel);
                }
            }

            let words: Vec<BraidWord> = (0..SAMPLES).map(|_| random_word(&mut rng, &params, 12)).collect();
            if n >= 2 {
                report.check(
                    "conditions hold on random images",
                    words.iter().try_fold(true, |acc, word| {
                        let e = rho_word(word, &params)?;
                        let form = parse_conjugate_form(&e)?;
                        Ok(acc && check_equivariance(&form, &params) && check_boundary(&e).is_some())
                    }),
                );
                report.check(
                    "decompose round trip",
                    words.iter().try_fold(true, |acc, word| {
                        let e = rho_word(word, &params)?;
                        let (found, m) = decompose(&e, &params)?;
                        Ok(acc && eq_endo(&compose(&rho_word(&found, &params)?, &twist(&params, m))?, &e)?)
                    }),
                );
                report.check(
                    "comb round trip",
                    (0..SAMPLES / 2).try_fold(true, |acc, _| {
                        let word = random_pure_word(&mut rng, &params, 4, 3);
                        let c = comb_with_budget(&word, &params, DEFAULT_MAX_BASIS_LENGTH)?;
                        Ok(acc && eq_punctured(&multiply_back(&c), &word, &params)?)
                    }),
                );
            } else {
                report.check(
                    "b^p ~ empty in the plane",
                    eq_plane(&w(&format!("b^{p}")), &BraidWord::empty(), &params),
                );
                report.check(
                    "b^p !~ empty in the punctured plane",
                    eq_punctured_with(&w(&format!("b^{p}")), &BraidWord::empty(), &params, RankOnePolicy::RotExponent)
                        .map(|v| !v),
                );
            }
        }
    }
    if report.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
