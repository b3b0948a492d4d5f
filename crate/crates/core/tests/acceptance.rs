//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the verdict lines are always printed.
//! Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::sync::Arc;

use adflp::adf::{cset_to_formula, formula_to_cset, KleeneKind};
use adflp::adfplus::l_stable_models;
use adflp::logic::Universe;
use adflp::syntax::{parse_adf, parse_formula, parse_program};
use adflp::translate::{p_of_xi, xi, xi2};
use adflp::verify::{gen_adf, gen_program, run_check, GenConfig, SplitMix64};
use adflp::{check_adfplus, Adf, Formula, Interpretation, Limits, LpKind, Program, TruthValue};

const EX_ADF: &str = "s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)). ac(b,neg(a)). ac(c,and(neg(b),e)). ac(d,neg(c)). ac(e,neg(d)).";

const EX_ADF2: &str = "s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)). ac(b,neg(a)). ac(c,or(and(neg(c),neg(a)),and(neg(c),neg(d)))).
ac(d,neg(d)). ac(e,and(neg(e),neg(b))).";

const EX_NLP: &str = "b :- c, not a.
a :- not b.
c :- d.
p :- c, d, not p.
p :- not a.
d.";

const KLEENE_EX: &str = "s(a). s(b). s(c). ac(a,c(v)). ac(b,or(neg(a),c)). ac(c,b).";

const P1: &str = "c. b :- not b. a :- b. a :- c.";
const P2: &str = "c. b :- not b. a :- b, not c. a :- c, not b. a :- b, c.";

type Problems = Vec<String>;
type Criterion = (u32, &'static str, fn() -> Problems);

fn lim() -> Limits {
    Limits::default()
}

fn set(u: &Arc<Universe>, items: &[&str]) -> BTreeSet<Interpretation> {
    items
        .iter()
        .map(|s| Interpretation::from_literals(u.clone(), s).unwrap())
        .collect()
}

fn show(models: &BTreeSet<Interpretation>) -> String {
    let items: Vec<String> = models.iter().map(|v| v.to_set_string(true)).collect();
    format!("[{}]", items.join(", "))
}

fn expect_set(
    problems: &mut Problems,
    what: &str,
    actual: Vec<Interpretation>,
    expected: BTreeSet<Interpretation>,
) {
    let actual: BTreeSet<Interpretation> = actual.into_iter().collect();
    if actual != expected {
        problems.push(format!(
            "{what}: expected {}, got {}",
            show(&expected),
            show(&actual)
        ));
    }
}

fn equivalent(f: &Formula, g: &Formula) -> bool {
    let mut atoms = f.atoms();
    for a in g.atoms() {
        if !atoms.contains(&a) {
            atoms.push(a);
        }
    }
    (0..1u64 << atoms.len()).all(|m| {
        let holds = |x: &str| m >> atoms.iter().position(|a| a == x).unwrap() & 1 == 1;
        f.eval_classical(&holds) == g.eval_classical(&holds)
    })
}

fn check_report(problems: &mut Problems, name: &str, cfg: &GenConfig) {
    let r = run_check(name, cfg).unwrap();
    if !r.passed() {
        problems.push(format!(
            "{name}: {} of {} instances failed",
            r.failures.len(),
            r.trials
        ));
        if let Some(f) = r.failures.first() {
            problems.push(format!(
                "first failure (seed {:?}):\n{}expected {}\nactual   {}",
                f.seed, f.instance, f.expected, f.actual
            ));
        }
    }
}

fn criterion_1() -> Problems {
    let d = parse_adf(EX_ADF).unwrap();
    let u = d.statements();
    let mut p = Problems::new();
    expect_set(
        &mut p,
        "complete",
        d.complete_models(&lim()).unwrap(),
        set(u, &["{}", "{a, ~b}", "{b, d, ~a, ~c, ~e}"]),
    );
    expect_set(
        &mut p,
        "grounded",
        vec![d.grounded_model()],
        set(u, &["{}"]),
    );
    expect_set(
        &mut p,
        "preferred",
        d.preferred_models(&lim()).unwrap(),
        set(u, &["{a, ~b}", "{b, d, ~a, ~c, ~e}"]),
    );
    expect_set(
        &mut p,
        "stable",
        d.stable_models(&lim()).unwrap(),
        set(u, &["{b, d, ~a, ~c, ~e}"]),
    );
    p
}

fn criterion_2() -> Problems {
    let prog = parse_program(EX_NLP).unwrap();
    let u = prog.herbrand_base();
    let sem = |k| prog.semantics(k, &lim()).unwrap();
    let mut p = Problems::new();
    expect_set(
        &mut p,
        "PSM",
        sem(LpKind::PartialStable),
        set(u, &["{c, d}", "{b, c, d, p, ~a}", "{a, c, d, ~b}"]),
    );
    expect_set(
        &mut p,
        "well-founded",
        sem(LpKind::WellFounded),
        set(u, &["{c, d}"]),
    );
    expect_set(
        &mut p,
        "regular",
        sem(LpKind::Regular),
        set(u, &["{b, c, d, p, ~a}", "{a, c, d, ~b}"]),
    );
    expect_set(
        &mut p,
        "stable",
        sem(LpKind::Stable),
        set(u, &["{b, c, d, p, ~a}"]),
    );
    expect_set(
        &mut p,
        "L-stable",
        sem(LpKind::LStable),
        set(u, &["{b, c, d, p, ~a}"]),
    );
    p
}

fn criterion_3() -> Problems {
    let d = parse_adf(EX_ADF2).unwrap();
    let u = d.statements();
    let mut p = Problems::new();
    let plus = match check_adfplus(&d) {
        Ok(plus) => plus,
        Err(e) => return vec![format!("not accepted as ADF⁺: {e}")],
    };
    let complete = set(u, &["{}", "{a, ~b}", "{b, ~a, ~e}"]);
    expect_set(
        &mut p,
        "complete",
        d.complete_models(&lim()).unwrap(),
        complete.clone(),
    );
    expect_set(
        &mut p,
        "complete (ADF⁺)",
        plus.complete_models(&lim()).unwrap(),
        complete,
    );
    expect_set(
        &mut p,
        "grounded",
        vec![d.grounded_model()],
        set(u, &["{}"]),
    );
    expect_set(
        &mut p,
        "preferred",
        d.preferred_models(&lim()).unwrap(),
        set(u, &["{a, ~b}", "{b, ~a, ~e}"]),
    );
    expect_set(
        &mut p,
        "stable",
        d.stable_models(&lim()).unwrap(),
        BTreeSet::new(),
    );
    expect_set(
        &mut p,
        "stable (ADF⁺)",
        plus.stable_models(&lim()).unwrap(),
        BTreeSet::new(),
    );
    expect_set(
        &mut p,
        "L-stable",
        l_stable_models(&d, &lim()).unwrap(),
        set(u, &["{b, ~a, ~e}"]),
    );
    p
}

fn criterion_4() -> Problems {
    let mut p = Problems::new();
    let prog = parse_program(EX_NLP).unwrap();
    let d = xi(&prog, &lim()).unwrap();
    for (s, f) in [
        ("a", "neg(b)"),
        ("b", "neg(a)"),
        ("c", "c(v)"),
        ("d", "c(v)"),
        ("p", "or(neg(p),neg(a))"),
    ] {
        let phi = d.adf().acceptance_of(s).unwrap();
        if !equivalent(phi, &parse_formula(f).unwrap()) {
            p.push(format!("Ξ(P): φ_{s} = {phi}, expected ≡ {f}"));
        }
    }

    let adf = parse_adf(EX_ADF).unwrap();
    let pxi = p_of_xi(&adf).unwrap();
    let rules = |prog: &Program| -> BTreeSet<String> {
        prog.to_text().lines().map(str::to_string).collect()
    };
    let expected =
        parse_program("a :- not b. d :- not c. c :- e, not b. b :- not a. e :- not d.").unwrap();
    if rules(&pxi) != rules(&expected) {
        p.push(format!(
            "P(Ξ):\n{}expected (any order):\n{}",
            pxi.to_text(),
            expected.to_text()
        ));
    }

    let round = xi(&pxi, &lim()).unwrap();
    let phi_c = round.adf().acceptance_of("c").unwrap();
    if !equivalent(phi_c, &parse_formula("and(neg(b),neg(d))").unwrap()) {
        p.push(format!("Ξ(P(Ξ)): φ_c = {phi_c}, expected ≡ ¬b ∧ ¬d"));
    }
    p
}

fn criterion_5() -> Problems {
    let mut p = Problems::new();
    let cfg = GenConfig {
        seed: 5,
        trials: 200,
        max_atoms: 6,
        max_rules: 8,
        ..GenConfig::default()
    };
    check_report(&mut p, "equivalence", &cfg);
    p
}

fn criterion_6() -> Problems {
    let mut p = Problems::new();
    let cfg = GenConfig {
        seed: 6,
        trials: 200,
        max_statements: 6,
        ..GenConfig::default()
    };
    check_report(&mut p, "gammaomega", &cfg);
    p
}

fn criterion_7() -> Problems {
    let mut p = Problems::new();
    let cfg = GenConfig {
        seed: 7,
        trials: 200,
        max_parents: 5,
        ..GenConfig::default()
    };
    check_report(&mut p, "redundancy-count", &cfg);
    p
}

fn criterion_8() -> Problems {
    let mut p = Problems::new();
    let (p1, p2) = (parse_program(P1).unwrap(), parse_program(P2).unwrap());
    let (n1, n2) = (xi2(&p1), xi2(&p2));
    if n1.statements().names() != n2.statements().names() {
        p.push("Ξ₂(P1) and Ξ₂(P2) have different statements".into());
    }
    for s in ["a", "b", "c"] {
        let (f1, f2) = (n1.acceptance_of(s).unwrap(), n2.acceptance_of(s).unwrap());
        if !equivalent(f1, f2) {
            p.push(format!("Ξ₂: φ_{s} differs: {f1} vs {f2}"));
        }
    }
    let psm1 = p1.semantics(LpKind::PartialStable, &lim()).unwrap();
    let psm2 = p2.semantics(LpKind::PartialStable, &lim()).unwrap();
    expect_set(
        &mut p,
        "psm(P1)",
        psm1.clone(),
        set(p1.herbrand_base(), &["{a, c}"]),
    );
    expect_set(
        &mut p,
        "psm(P2)",
        psm2.clone(),
        set(p2.herbrand_base(), &["{c}"]),
    );
    for (name, prog, psm) in [("P1", &p1, psm1), ("P2", &p2, psm2)] {
        let d = xi(prog, &lim()).unwrap();
        expect_set(
            &mut p,
            &format!("complete(Ξ({name}))"),
            d.adf().complete_models(&lim()).unwrap(),
            psm.into_iter().collect(),
        );
    }
    p
}

fn criterion_9() -> Problems {
    let d = parse_adf(KLEENE_EX).unwrap();
    let u = d.statements();
    let mut p = Problems::new();
    let k = |kind| d.kleene_semantics(kind, &lim()).unwrap();
    let stable_one = set(u, &["{a, ~b, ~c}"]);
    expect_set(
        &mut p,
        "complete",
        k(KleeneKind::Complete),
        set(u, &["{a, b, c}", "{a, ~b, ~c}", "{a}"]),
    );
    expect_set(
        &mut p,
        "grounded",
        vec![d.kleene_grounded()],
        set(u, &["{a}"]),
    );
    expect_set(
        &mut p,
        "partial stable",
        k(KleeneKind::PartialStable),
        set(u, &["{a, ~b, ~c}", "{a}"]),
    );
    expect_set(
        &mut p,
        "preferred",
        k(KleeneKind::Preferred),
        set(u, &["{a, b, c}", "{a, ~b, ~c}"]),
    );
    expect_set(
        &mut p,
        "regular",
        k(KleeneKind::Regular),
        stable_one.clone(),
    );
    expect_set(&mut p, "stable", k(KleeneKind::Stable), stable_one.clone());
    expect_set(&mut p, "L-stable", k(KleeneKind::LStable), stable_one);
    expect_set(
        &mut p,
        "semi-stable",
        k(KleeneKind::SemiStable),
        set(u, &["{a, b, c}", "{a, ~b, ~c}"]),
    );
    p
}

fn criterion_10() -> Problems {
    let mut p = Problems::new();
    let cfg = GenConfig {
        seed: 10,
        trials: 200,
        ..GenConfig::default()
    };
    check_report(
        &mut p,
        "gamma-monotone",
        &GenConfig {
            max_statements: 4,
            ..cfg
        },
    );
    check_report(&mut p, "setaf-is-adfplus", &cfg);
    check_report(
        &mut p,
        "xi-eq-xi2-negbody",
        &GenConfig { trials: 100, ..cfg },
    );

    for i in 0..cfg.trials {
        let d: Adf = gen_adf(&mut cfg.rng(i), &cfg);
        let seed = cfg.seed + i as u64;

        // Kleene evaluation equals classical evaluation on 2-valued inputs
        for mask in 0..1u64 << d.len() {
            let v = Interpretation::from_mask(d.statements().clone(), mask);
            let holds = |a: &str| v.get(a) == Some(TruthValue::True);
            for s in 0..d.len() {
                let f = d.acceptance(s);
                if f.eval_kleene(&v).unwrap() != TruthValue::from(f.eval_classical(&holds)) {
                    p.push(format!(
                        "seed {seed}: Kleene ≠ classical for {f} at {}",
                        v.to_set_string(false)
                    ));
                }
            }
        }

        let complete: BTreeSet<_> = d.complete_models(&lim()).unwrap().into_iter().collect();
        for v in d.stable_models(&lim()).unwrap() {
            if !complete.contains(&v) {
                p.push(format!(
                    "seed {seed}: stable {} is not complete",
                    v.to_set_string(false)
                ));
            }
        }

        for s in 0..d.len() {
            let fam = d.family(s).unwrap();
            let back = formula_to_cset(&cset_to_formula(&fam)).unwrap();
            if !fam.is_empty() && back != fam {
                p.push(format!(
                    "seed {seed}: C^t of {} does not round-trip",
                    d.statements().name(s)
                ));
            }
            if !equivalent(&cset_to_formula(&fam), d.acceptance(s)) {
                p.push(format!(
                    "seed {seed}: full DNF of {} is not equivalent",
                    d.statements().name(s)
                ));
            }
        }

        let prog = gen_program(&mut SplitMix64::new(seed), &cfg);
        for i in prog.semantics(LpKind::PartialStable, &lim()).unwrap() {
            if !prog.is_model(&i).unwrap() {
                p.push(format!(
                    "seed {seed}: PSM {} is not a model",
                    i.to_set_string(false)
                ));
            }
        }
    }
    p
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "five-statement framework golden semantics", criterion_1),
        (2, "six-rule program golden semantics", criterion_2),
        (3, "attack-only framework golden semantics", criterion_3),
        (4, "translation golden tests", criterion_4),
        (
            5,
            "programs vs Ξ(P) semantics, 200 random programs",
            criterion_5,
        ),
        (
            6,
            "Γ on ADF⁺ equals Kleene evaluation, 200 random ADF⁺",
            criterion_6,
        ),
        (
            7,
            "redundancy by counting, 200 random families",
            criterion_7,
        ),
        (8, "Ξ₂ merges P1 and P2, Ξ separates them", criterion_8),
        (9, "Kleene-operator semantics golden test", criterion_9),
        (10, "property suites", criterion_10),
    ];
    let mut failed = 0;
    for (n, title, run) in criteria {
        let problems = run();
        if problems.is_empty() {
            println!("PASS criterion {n:>2}: {title}");
        } else {
            failed += 1;
            println!("FAIL criterion {n:>2}: {title}");
            for line in problems {
                for l in line.lines() {
                    println!("      {l}");
                }
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
