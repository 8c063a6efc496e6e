//! Acceptance criteria 1-11. Each test writes one `criterion N: PASS|FAIL`
//! line to stderr (uncaptured) and then asserts.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbit_braid::random::{random_pure_word, random_word};
use orbit_braid::*;

const GRID: [(usize, usize); 9] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4)];

fn params(p: usize, n: usize) -> GroupParams {
    GroupParams::new(p, n).unwrap()
}

fn bw(text: &str, pr: &GroupParams) -> BraidWord {
    BraidWord::parse(text, pr).unwrap()
}

fn rho(w: &BraidWord, pr: &GroupParams) -> Endo {
    rho_word(w, pr).unwrap()
}

fn verdict(n: u32, title: &str, failures: &[String]) {
    let line = if failures.is_empty() {
        format!("criterion {n}: PASS  {title}")
    } else {
        format!("criterion {n}: FAIL  {title} ({} failures; first: {})", failures.len(), failures[0])
    };
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(failures.is_empty(), "{line}\n{}", failures.join("\n"));
}

/// The defining relators, as words equal to the identity.
fn relators(pr: &GroupParams) -> Vec<BraidWord> {
    let n = pr.n();
    let mut out = Vec::new();
    for k in 0..n.saturating_sub(2) {
        let (a, b) = (format!("b{k} b{} b{k}", k + 1), format!("b{} b{k} b{}", k + 1, k + 1));
        out.push(&bw(&a, pr) * &bw(&b, pr).inverse());
    }
    for k in 0..n.saturating_sub(1) {
        for l in k + 2..n.saturating_sub(1) {
            out.push(bw(&format!("b{k} b{l} b{k}^-1 b{l}^-1"), pr));
        }
    }
    for k in 1..n.saturating_sub(1) {
        out.push(bw(&format!("b{k} b b{k}^-1 b^-1"), pr));
    }
    out
}

fn criterion_1_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for (p, n) in GRID {
        let pr = params(p, n);
        for r in relators(&pr) {
            if !eq_endo(&rho(&r, &pr), &Endo::identity(&pr)).unwrap() {
                bad.push(format!("p={p} n={n}: {r}"));
            }
        }
    }
    bad
}

#[test]
fn criterion_01_relations() {
    verdict(1, "braid, commutation and b-commutation relations hold in Aut F_pn", &criterion_1_failures());
}

#[test]
fn criterion_02_twist_law() {
    let mut bad = Vec::new();
    for (p, n) in GRID {
        let pr = params(p, n);
        // oracle built from the Δ_i words directly
        let images: Vec<FreeWord> = pr
            .generators()
            .map(|(i, j)| {
                let x = FreeWord::gen(i, j);
                if j == 0 {
                    x
                } else {
                    let d = delta_word(&pr, i).unwrap();
                    (&(&d.inverse() * &x) * &d).reduced()
                }
            })
            .collect();
        let expected = Endo::from_images(&pr, images).unwrap();
        let got = rho(&bw(&format!("b^{p}"), &pr), &pr);
        if got != expected || got != twist(&pr, 1) {
            bad.push(format!("p={p} n={n}"));
        }
    }
    verdict(2, "rho(b^p) equals twist(1) exactly", &bad);
}

#[test]
fn criterion_03_even_relation() {
    let mut bad = Vec::new();
    for (p, n) in GRID {
        let pr = params(p, n);
        let lhs = rho(&bw("b b0", &pr).pow(p as i64), &pr);
        let rhs = rho(&bw("b0 b", &pr).pow(p as i64), &pr);
        let equal = eq_endo(&lhs, &rhs).unwrap();
        if p % 2 == 0 {
            if !equal {
                bad.push(format!("p={p} n={n}"));
            }
        } else {
            let _ = writeln!(
                std::io::stderr(),
                "  recorded: (b b0)^{p} vs (b0 b)^{p} at n={n}: {}",
                if equal { "equal" } else { "not-equal" }
            );
        }
    }
    verdict(3, "(b b0)^p and (b0 b)^p agree for p in {2,4}", &bad);
}

#[test]
fn criterion_04_word_problem_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = Vec::new();
    let with_relators: Vec<_> = GRID.iter().filter(|(_, n)| *n >= 3).collect();
    for _ in 0..500 {
        let &&(p, n) = with_relators.choose(&mut rng).unwrap();
        let pr = params(p, n);
        let w = any_word(&mut rng, &pr);
        let r = relators(&pr).choose(&mut rng).unwrap().clone();
        if !eq_punctured(&w, &(&w * &r), &pr).unwrap() {
            bad.push(format!("relator pair p={p} n={n}: {w} | {r}"));
        }
    }
    let mut pairs = 0;
    while pairs < 500 {
        let (p, n) = *GRID.choose(&mut rng).unwrap();
        let pr = params(p, n);
        let w1 = any_word(&mut rng, &pr);
        let w2 = any_word(&mut rng, &pr);
        if perm_image(&w1, &pr) == perm_image(&w2, &pr) {
            continue;
        }
        pairs += 1;
        if eq_punctured(&w1, &w2, &pr).unwrap() {
            bad.push(format!("distinct images p={p} n={n}: {w1} | {w2}"));
        }
    }
    for _ in 0..200 {
        let (p, n) = *GRID.choose(&mut rng).unwrap();
        let pr = params(p, n);
        let w = any_word(&mut rng, &pr);
        let wr = &w * &bw(&format!("b^{p}"), &pr);
        if !eq_plane(&wr, &w, &pr).unwrap() {
            bad.push(format!("plane relator p={p} n={n}: {w}"));
        }
    }
    verdict(4, "word problem: relator pairs equal, distinct permutations unequal, b^p absorbed", &bad);
}

fn any_word(rng: &mut ChaCha8Rng, pr: &GroupParams) -> BraidWord {
    let len = rng.gen_range(0..=12);
    random_word(rng, pr, len)
}

fn recognition_words() -> Vec<(GroupParams, BraidWord)> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    (0..300)
        .map(|_| {
            let (p, n) = *GRID.choose(&mut rng).unwrap();
            let pr = params(p, n);
            let len = rng.gen_range(0..=12);
            (pr, random_word(&mut rng, &pr, len))
        })
        .collect()
}

#[test]
fn criterion_05_recognition_round_trip() {
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for (pr, w) in recognition_words() {
        let e = rho(&w, &pr);
        let start = Instant::now();
        let result = decompose_traced(&e, &pr);
        let took = start.elapsed();
        slowest = slowest.max(took);
        match result {
            Ok((found, m, trace)) => {
                let back = compose(&rho(&found, &pr), &twist(&pr, m)).unwrap();
                if !eq_endo(&back, &e).unwrap() {
                    bad.push(format!("{w}: wrong answer {found} twist {m}"));
                }
                if trace.windows(2).any(|s| s[1] >= s[0]) {
                    bad.push(format!("{w}: length did not decrease: {trace:?}"));
                }
            }
            Err(err) => bad.push(format!("{w}: {err}")),
        }
        if took >= Duration::from_secs(1) {
            bad.push(format!("{w}: took {took:?}"));
        }
    }
    let _ = writeln!(std::io::stderr(), "  slowest decomposition: {slowest:?}");
    verdict(5, "decompose recovers 300 random words with strictly decreasing length", &bad);
}

#[test]
fn criterion_06_conditions_accept_images() {
    let mut bad = Vec::new();
    for (pr, w) in recognition_words() {
        let e = rho(&w, &pr);
        match parse_conjugate_form(&e) {
            Ok(form) => {
                if !check_equivariance(&form, &pr) {
                    bad.push(format!("{w}: equivariance"));
                }
                let mut targets: Vec<_> = pr.generators().map(|(i, j)| form.target(i, j)).collect();
                targets.sort();
                targets.dedup();
                if targets.len() != pr.rank() {
                    bad.push(format!("{w}: targets not a permutation"));
                }
            }
            Err(err) => bad.push(format!("{w}: {err}")),
        }
        if check_boundary(&e).is_none() {
            bad.push(format!("{w}: boundary"));
        }
    }
    verdict(6, "condition checks pass on 300 images", &bad);
}

#[test]
fn criterion_07_shift_diagnostic() {
    let mut bad = Vec::new();
    for (p, n) in GRID {
        let pr = params(p, n);
        let e = shift_c(&pr, 1);
        let form = parse_conjugate_form(&e);
        let literal = form.as_ref().is_ok_and(|f| check_equivariance(f, &pr)) && check_boundary(&e).is_some();
        if !literal {
            bad.push(format!("p={p} n={n}: condition checks reject shift_c(1)"));
        }
        match decompose(&e, &pr) {
            Err(Error::NotRealizable { .. }) => {}
            Ok((w, m)) => bad.push(format!("p={p} n={n}: decompose returned `{w}` twist {m}")),
            Err(err) => bad.push(format!("p={p} n={n}: {err}")),
        }
    }
    verdict(7, "shift_c(1) passes the checks and is reported NotRealizable", &bad);
}

/// Inserts a relator or a cancelling pair at a random position.
fn equal_variant<R: Rng>(rng: &mut R, w: &BraidWord, pr: &GroupParams) -> BraidWord {
    let mut rels = relators(pr);
    rels.push(bw("b b0 b b0 b^-1 b0^-1 b^-1 b0^-1", pr));
    let g = *BraidLetter::alphabet(pr).choose(rng).unwrap();
    rels.push(BraidWord::from_letters([g, g.inverted()]));
    let r = rels.choose(rng).unwrap();
    let cut = rng.gen_range(0..=w.len());
    let head = BraidWord::from_letters(w.letters()[..cut].iter().copied());
    let tail = BraidWord::from_letters(w.letters()[cut..].iter().copied());
    &(&head * r) * &tail
}

#[test]
fn criterion_08_combing() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let grid = [(2, 2), (2, 3), (3, 2), (3, 3)];
    let mut bad = Vec::new();
    let sample = |rng: &mut ChaCha8Rng| loop {
        let (p, n) = *grid.choose(rng).unwrap();
        let pr = params(p, n);
        let w = random_pure_word(rng, &pr, 4, 3);
        if w.len() <= 10 {
            return (pr, w);
        }
    };
    for _ in 0..100 {
        let (pr, w) = sample(&mut rng);
        match comb(&w, &pr) {
            Ok(c) => {
                if !eq_punctured(&multiply_back(&c), &w, &pr).unwrap() {
                    bad.push(format!("round trip {w}"));
                }
            }
            Err(err) => bad.push(format!("{w}: {err}")),
        }
    }
    for _ in 0..50 {
        let (pr, w1) = sample(&mut rng);
        let w2 = equal_variant(&mut rng, &w1, &pr);
        assert!(eq_punctured(&w1, &w2, &pr).unwrap());
        match (comb(&w1, &pr), comb(&w2, &pr)) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => bad.push(format!("{w1} vs {w2}: {a:?} / {b:?}")),
        }
    }
    for (p, n) in GRID {
        let pr = params(p, n);
        for level in 1..=n {
            if basis(&pr, level).unwrap().len() != p * (level - 1) + 1 {
                bad.push(format!("basis size p={p} n={n} level={level}"));
            }
        }
    }
    verdict(8, "combing round trip, invariance on equal pairs, basis sizes", &bad);
}

#[test]
fn criterion_09_worked_identity() {
    let mut bad = Vec::new();
    for p in [2, 3] {
        let pr = params(p, 2);
        let ex = |s: &str| expand_aword(&AWord::parse(s, &pr).unwrap(), &pr).unwrap();
        let lhs = ex("A1 A0.0.1");
        let rhs = ex("A0 A0.0.1 A0^-1 A1");
        if !eq_punctured(&lhs, &rhs, &pr).unwrap() {
            bad.push(format!("p={p}: A1 A0.0.1 != A0 A0.0.1 A0^-1 A1"));
        }
    }
    verdict(9, "A1 A001 = (A0 A001 A0^-1) A1 for p in {2,3}, n = 2", &bad);
}

#[test]
fn criterion_10_rank_one() {
    let mut bad = Vec::new();
    for p in 2..=4 {
        let pr = params(p, 1);
        let e = BraidWord::empty();
        let bp = bw(&format!("b^{p}"), &pr);
        let rot = RankOnePolicy::RotExponent;
        let checks = [
            ("plane b^p ~ e", eq_plane(&bp, &e, &pr).unwrap()),
            ("plane b !~ e", !eq_plane(&bw("b", &pr), &e, &pr).unwrap()),
            ("plane b^(p+1) ~ b", eq_plane(&bw(&format!("b^{}", p + 1), &pr), &bw("b", &pr), &pr).unwrap()),
            ("punctured b^p !~ e", !eq_punctured_with(&bp, &e, &pr, rot).unwrap()),
            ("punctured b b^-1 ~ e", eq_punctured_with(&bw("b b^-1", &pr), &e, &pr, rot).unwrap()),
            ("punctured b^p ~ b^p", eq_punctured_with(&bp, &bp, &pr, rot).unwrap()),
        ];
        bad.extend(checks.iter().filter(|c| !c.1).map(|c| format!("p={p}: {}", c.0)));
    }
    verdict(10, "n = 1: exponent mod p in the plane, exponent over Z when punctured", &bad);
}

fn run(args: &[&str]) -> (String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbit-braid")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code())
}

#[test]
fn criterion_11_cli_contract() {
    let mut bad = Vec::new();
    let cases: [(&[&str], &str, i32); 3] = [
        (&["eq", "--space", "plane", "--p", "2", "--n", "2", "b^2", ""], "equal\n", 0),
        (&["eq", "--space", "punctured", "--p", "2", "--n", "2", "b^2", ""], "not-equal\n", 1),
        (&["eq", "--space", "plane", "--p", "2", "--n", "2", "b0", "b0"], "equal\n", 0),
    ];
    for (args, stdout, code) in cases {
        let got = run(args);
        if got != (stdout.to_string(), Some(code)) {
            bad.push(format!("{args:?}: {got:?}"));
        }
    }
    for (p, n, w) in [(2, 2, "b"), (2, 2, ""), (3, 3, "b b1^-1 b0 b^2"), (4, 2, "b0^-3 b")] {
        let pr = params(p, n);
        let (text, code) = run(&["endo", "--p", &p.to_string(), "--n", &n.to_string(), w]);
        let parsed = Endo::parse(&text, &pr);
        if code != Some(0) || parsed.as_ref() != Ok(&rho(&bw(w, &pr), &pr)) {
            bad.push(format!("endo round trip p={p} n={n} {w:?}: {parsed:?}"));
        }
    }
    verdict(11, "eq verdicts and exit codes, endo output round trip", &bad);
}
