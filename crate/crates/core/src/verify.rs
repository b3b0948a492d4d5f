//! Randomized differential checks.
//!
//! Each check first runs on a few fixed worked examples and then on
//! `cfg.trials` generated instances. Trial `i` is generated from a fresh
//! [`SplitMix64`] seeded with `cfg.seed + i`, so a failure can be reproduced
//! from its seed alone.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::adf::{classify_in_family, Adf, CSetFamily, KleeneKind, LinkClass};
use crate::adfplus::{check_adfplus, cmax, AdfPlus};
use crate::error::{Error, Result};
use crate::logic::{enumerate_interpretations, Formula, Interpretation, Universe};
use crate::nlp::{LpKind, Program, ProgramBuilder};
use crate::syntax::{parse_adf, parse_program, parse_setaf};
use crate::translate::{p_of_xi, setaf_to_adf, xi, xi2, Setaf};
use crate::Limits;

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then two xor-shift-multiply
/// rounds with `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..n` (modulo reduction); `n = 0` yields 0.
    pub fn below(&mut self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            (self.next_u64() % n as u64) as usize
        }
    }

    /// Value in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

/// Generator bounds and trial count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_atoms: usize,
    pub max_rules: usize,
    pub max_body: usize,
    pub max_statements: usize,
    pub max_parents: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            trials: 200,
            max_atoms: 6,
            max_rules: 8,
            max_body: 3,
            max_statements: 6,
            max_parents: 5,
        }
    }
}

impl GenConfig {
    pub fn rng(&self, trial: usize) -> SplitMix64 {
        SplitMix64::new(self.seed.wrapping_add(trial as u64))
    }
}

fn atom_names(n: usize) -> Vec<String> {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    (0..n)
        .map(|i| {
            if i < LETTERS.len() {
                (LETTERS[i] as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

/// A random program; the Herbrand base is the set of atoms that occur.
pub fn gen_program(rng: &mut SplitMix64, cfg: &GenConfig) -> Program {
    gen_program_with(rng, cfg, false)
}

/// A random program whose bodies contain only default literals.
pub fn gen_negative_program(rng: &mut SplitMix64, cfg: &GenConfig) -> Program {
    gen_program_with(rng, cfg, true)
}

fn gen_program_with(rng: &mut SplitMix64, cfg: &GenConfig, negative_only: bool) -> Program {
    let mut b = ProgramBuilder::new();
    if cfg.max_rules == 0 || cfg.max_atoms == 0 {
        return b.build();
    }
    let names = atom_names(rng.range(1, cfg.max_atoms));
    for _ in 0..rng.range(1, cfg.max_rules) {
        let head = &names[rng.below(names.len())];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for _ in 0..rng.range(0, cfg.max_body) {
            let atom = names[rng.below(names.len())].as_str();
            if negative_only || rng.coin() {
                neg.push(atom);
            } else {
                pos.push(atom);
            }
        }
        // intern in rendering order so the text round-trips
        b.rule(head, &pos, &neg);
    }
    b.build()
}

fn pick_subset(rng: &mut SplitMix64, pool: &[usize], max: usize) -> Vec<usize> {
    let mut pool = pool.to_vec();
    let k = rng.range(0, max.min(pool.len()));
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(pool.swap_remove(rng.below(pool.len())));
    }
    out.sort_unstable();
    out
}

/// A random framework whose conditions are negative DNFs.
pub fn gen_adfplus(rng: &mut SplitMix64, cfg: &GenConfig) -> AdfPlus {
    let names = atom_names(rng.range(1, cfg.max_statements.max(1)));
    let all: Vec<usize> = (0..names.len()).collect();
    let pairs: Vec<(String, Formula)> = names
        .iter()
        .map(|s| {
            let parents = pick_subset(rng, &all, cfg.max_parents);
            let disjuncts = (0..rng.range(0, 3))
                .map(|_| {
                    let lits = pick_subset(rng, &parents, parents.len());
                    Formula::and(lits.iter().map(|&p| Formula::neg_atom(names[p].clone())))
                })
                .collect::<Vec<_>>();
            (s.clone(), Formula::or(disjuncts))
        })
        .collect();
    check_adfplus(&Adf::new(pairs).expect("generated atoms are statements"))
        .expect("negative DNF conditions are attacking")
}

/// A random parent family over `k` parents.
fn gen_family(rng: &mut SplitMix64, parents: Vec<String>) -> CSetFamily {
    let masks = (0..1u64 << parents.len()).filter(|_| rng.coin()).collect();
    CSetFamily::from_masks(parents, masks)
}

/// A random framework with arbitrary acceptance conditions.
pub fn gen_adf(rng: &mut SplitMix64, cfg: &GenConfig) -> Adf {
    let names = atom_names(rng.range(1, cfg.max_statements.max(1)));
    let all: Vec<usize> = (0..names.len()).collect();
    let families: Vec<(String, CSetFamily)> = names
        .iter()
        .map(|s| {
            let parents = pick_subset(rng, &all, cfg.max_parents)
                .into_iter()
                .map(|p| names[p].clone())
                .collect();
            (s.clone(), gen_family(rng, parents))
        })
        .collect();
    Adf::from_families(families).expect("generated atoms are statements")
}

/// A random downward-closed family over at most `cfg.max_parents` parents.
pub fn gen_downward_closed(rng: &mut SplitMix64, cfg: &GenConfig) -> CSetFamily {
    let parents: Vec<String> = atom_names(rng.range(0, cfg.max_parents) + 1)
        .into_iter()
        .skip(1)
        .collect();
    let full = (1u64 << parents.len()) - 1;
    let mut accepted = BTreeSet::new();
    for _ in 0..rng.range(0, 4) {
        let top = rng.next_u64() & full;
        // every subset of top
        let mut sub = top;
        loop {
            accepted.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
    }
    CSetFamily::from_masks(parents, accepted)
}

/// A random SETAF.
pub fn gen_setaf(rng: &mut SplitMix64, cfg: &GenConfig) -> Setaf {
    let names = atom_names(rng.range(1, cfg.max_statements.max(1)));
    let mut sf = Setaf::new(names.clone());
    let all: Vec<usize> = (0..names.len()).collect();
    for _ in 0..rng.range(0, names.len() + 2) {
        let mut set = pick_subset(rng, &all, 3);
        if set.is_empty() {
            set.push(rng.below(names.len()));
        }
        let target = names[rng.below(names.len())].clone();
        sf.add_attack(set.iter().map(|&x| names[x].clone()).collect(), target)
            .expect("generated names are arguments");
    }
    sf
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// `None` for the fixed worked examples.
    pub seed: Option<u64>,
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks run by `run_all`, in order.
pub const CHECKS: &[&str] = &[
    "pstable↔complete",
    "equivalence",
    "gammaomega",
    "stable2valued",
    "redundancy-count",
    "xi-eq-xi2-negbody",
    "setaf-is-adfplus",
    "psm-is-complete",
    "gamma-monotone",
    "grounded-least",
];

/// Checks that are not expected to pass and are left out of `run_all`.
///
/// `pxi-chain` compares `P(Ξ)` under partial stable, well-founded, regular
/// and stable semantics with `D` under complete, grounded, preferred and
/// stable semantics; it already fails on `a[⊤ ∨ ¬a]`. `search-negatives`
/// looks for the four non-inclusions between preferred/regular and
/// L-stable/semi-stable models.
pub const EXPLORATORY: &[&str] = &["pxi-chain", SEARCH_NEGATIVES];

const SEARCH_NEGATIVES: &str = "search-negatives";

fn canonical(name: &str) -> Option<&'static str> {
    let name = match name {
        "pstable-complete" | "pstable<->complete" => "pstable↔complete",
        other => other,
    };
    CHECKS
        .iter()
        .chain(EXPLORATORY)
        .copied()
        .find(|&c| c == name)
}

fn render_set(models: &[Interpretation]) -> String {
    let set: BTreeSet<&Interpretation> = models.iter().collect();
    let items: Vec<String> = set.into_iter().map(|v| v.to_set_string(false)).collect();
    format!("[{}]", items.join(", "))
}

fn same_set(a: &[Interpretation], b: &[Interpretation]) -> bool {
    let x: BTreeSet<&Interpretation> = a.iter().collect();
    let y: BTreeSet<&Interpretation> = b.iter().collect();
    x == y
}

/// Outcome of one instance: `Ok(())` or `(expected, actual)`.
type Outcome = std::result::Result<(), (String, String)>;

fn compare(expected: &[Interpretation], actual: &[Interpretation]) -> Outcome {
    if same_set(expected, actual) {
        Ok(())
    } else {
        Err((render_set(expected), render_set(actual)))
    }
}

fn errored(e: Error) -> Outcome {
    Err(("no error".into(), e.to_string()))
}

/// Runs `check` on the fixed instances, then on `cfg.trials` random ones.
fn drive<T: Sync>(
    name: &str,
    cfg: &GenConfig,
    fixed: Vec<T>,
    generate: impl Fn(&mut SplitMix64) -> T + Sync,
    render: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Outcome + Sync,
) -> CheckReport {
    let mut failures: Vec<Failure> = fixed
        .iter()
        .filter_map(|x| {
            check(x).err().map(|(expected, actual)| Failure {
                seed: None,
                instance: render(x),
                expected,
                actual,
            })
        })
        .collect();
    let random: Vec<Failure> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|i| {
            let x = generate(&mut cfg.rng(i));
            check(&x).err().map(|(expected, actual)| Failure {
                seed: Some(cfg.seed.wrapping_add(i as u64)),
                instance: render(&x),
                expected,
                actual,
            })
        })
        .collect();
    failures.extend(random);
    CheckReport {
        check: name.to_string(),
        trials: fixed.len() + cfg.trials,
        failures,
        notes: Vec::new(),
    }
}

fn fixed_programs(texts: &[&str]) -> Vec<Program> {
    texts
        .iter()
        .map(|t| parse_program(t).expect("fixed program parses"))
        .collect()
}

fn fixed_adfs(texts: &[&str]) -> Vec<Adf> {
    texts
        .iter()
        .map(|t| parse_adf(t).expect("fixed framework parses"))
        .collect()
}

const EX_NLP: &str = "b :- c, not a.\na :- not b.\nc :- d.\np :- c, d, not p.\np :- not a.\nd.\n";
const P1: &str = "c. b :- not b. a :- b. a :- c.";
const P2: &str = "c. b :- not b. a :- b, not c. a :- c, not b. a :- b, c.";
const EX_ADF: &str = "s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)). ac(b,neg(a)). ac(c,and(neg(b),e)). ac(d,neg(c)). ac(e,neg(d)).";
const EX_ADF2: &str = "s(a). s(b). s(c). s(d). s(e).
ac(a,neg(b)). ac(b,neg(a)). ac(c,or(and(neg(c),neg(a)),and(neg(c),neg(d)))).
ac(d,neg(d)). ac(e,and(neg(e),neg(b))).";
const KLEENE_EX: &str = "s(a). s(b). s(c). ac(a,c(v)). ac(b,or(neg(a),c)). ac(c,b).";
const SELF_ATTACK: &str = "s(a). ac(a,neg(a)).";

fn adfplus_of(texts: &[&str]) -> Vec<AdfPlus> {
    fixed_adfs(texts)
        .iter()
        .map(|d| check_adfplus(d).expect("fixed framework is attacking"))
        .collect()
}

fn program_text(p: &Program) -> String {
    p.to_text()
}

fn adf_text(d: &Adf) -> String {
    d.to_text()
}

fn lp_vs_xi(p: &Program, pairs: &[(LpKind, &str)], limits: &Limits) -> Outcome {
    let d = match xi(p, limits) {
        Ok(d) => d,
        Err(e) => return errored(e),
    };
    let adf = d.adf();
    for &(kind, sem) in pairs {
        let lp = match p.semantics(kind, limits) {
            Ok(m) => m,
            Err(e) => return errored(e),
        };
        let fw = match sem {
            "complete" => adf.complete_models(limits),
            "grounded" => Ok(vec![adf.grounded_model()]),
            "preferred" => adf.preferred_models(limits),
            "stable" => adf.stable_models(limits),
            "lstable" => crate::adfplus::l_stable_models(adf, limits),
            _ => unreachable!(),
        };
        let fw = match fw {
            Ok(m) => m,
            Err(e) => return errored(e),
        };
        compare(&lp, &fw).map_err(|(e, a)| (format!("{kind:?}: {e}"), format!("{sem}: {a}")))?;
    }
    Ok(())
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

fn all_interpretations(u: &Arc<Universe>) -> Vec<Interpretation> {
    enumerate_interpretations(u.clone(), u.len())
        .expect("bound equals the universe size")
        .collect()
}

/// Framework with statement `s` over the family's parents, each parent `⊤`.
fn family_framework(fam: &CSetFamily) -> Adf {
    let mut pairs: Vec<(String, Formula)> = fam
        .parents()
        .iter()
        .map(|p| (p.clone(), Formula::Verum))
        .collect();
    pairs.insert(0, ("s".to_string(), fam.to_formula()));
    Adf::new(pairs).expect("parents are statements")
}

/// Runs one registered check.
pub fn run_check(name: &str, cfg: &GenConfig) -> Result<CheckReport> {
    let canon = canonical(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    let lim = Limits::default();
    let lim = &lim;
    let report = match canon {
        "pstable↔complete" => drive(
            canon,
            cfg,
            fixed_programs(&[EX_NLP, P1, P2]),
            |rng| gen_program(rng, cfg),
            program_text,
            |p| lp_vs_xi(p, &[(LpKind::PartialStable, "complete")], lim),
        ),
        "equivalence" => drive(
            canon,
            cfg,
            fixed_programs(&[EX_NLP, P1, P2]),
            |rng| gen_program(rng, cfg),
            program_text,
            |p| {
                lp_vs_xi(
                    p,
                    &[
                        (LpKind::PartialStable, "complete"),
                        (LpKind::WellFounded, "grounded"),
                        (LpKind::Regular, "preferred"),
                        (LpKind::Stable, "stable"),
                        (LpKind::LStable, "lstable"),
                    ],
                    lim,
                )
            },
        ),
        "gammaomega" => drive(
            canon,
            cfg,
            adfplus_of(&[EX_ADF2, SELF_ATTACK]),
            |rng| gen_adfplus(rng, cfg),
            |d| d.to_text(),
            |d| {
                for v in all_interpretations(d.statements()) {
                    let (plus, full) = (d.gamma_plus(&v).unwrap(), d.adf().gamma(&v).unwrap());
                    if plus != full {
                        return Err((
                            format!(
                                "Γ({}) = {}",
                                v.to_set_string(false),
                                full.to_set_string(false)
                            ),
                            plus.to_set_string(false),
                        ));
                    }
                }
                Ok(())
            },
        ),
        "stable2valued" => drive(
            canon,
            cfg,
            adfplus_of(&[EX_ADF2, SELF_ATTACK]),
            |rng| gen_adfplus(rng, cfg),
            |d| d.to_text(),
            |d| {
                compare(
                    &d.adf().stable_models(lim).unwrap(),
                    &d.stable_models(lim).unwrap(),
                )
            },
        ),
        "redundancy-count" => drive(
            canon,
            cfg,
            vec![CSetFamily::new(&["b", "c"], &[&["b"], &[]]).unwrap()],
            |rng| gen_downward_closed(rng, cfg),
            |fam| family_framework(fam).to_text(),
            |fam| {
                let d = check_adfplus(&family_framework(fam))
                    .map_err(|e| ("ADF⁺".to_string(), e.to_string()))?;
                let by_count: BTreeSet<usize> = d
                    .redundant_links_by_count()
                    .into_iter()
                    .filter(|&(_, s)| s == 0)
                    .map(|(r, _)| r)
                    .collect();
                // family parents are statements 1..=k in order; an empty
                // family has a parentless condition and hence no links
                let linked = |bit: &usize| d.adf().parents(0).contains(&(bit + 1));
                let by_def: BTreeSet<usize> = (0..fam.parents().len())
                    .filter(linked)
                    .filter(|&bit| classify_in_family(fam, bit) == LinkClass::Redundant)
                    .map(|bit| bit + 1)
                    .collect();
                let max = cmax(fam).unwrap();
                let by_cmax: BTreeSet<usize> = (0..fam.parents().len())
                    .filter(linked)
                    .filter(|&bit| max.masks().iter().all(|&m| m >> bit & 1 == 1))
                    .map(|bit| bit + 1)
                    .collect();
                if by_count == by_def && by_def == by_cmax {
                    Ok(())
                } else {
                    Err((
                        format!("definition {by_def:?}, C^max {by_cmax:?}"),
                        format!("count {by_count:?}"),
                    ))
                }
            },
        ),
        "xi-eq-xi2-negbody" => drive(
            canon,
            cfg,
            fixed_programs(&["a :- not b. b :- not a. p :- not p. p :- not a, not b. q."]),
            |rng| gen_negative_program(rng, cfg),
            program_text,
            |p| {
                let d = xi(p, lim).map_err(|e| ("Ξ(P)".to_string(), e.to_string()))?;
                let d2 = xi2(p);
                if d.statements().names() != d2.statements().names() {
                    return Err((
                        format!("{:?}", d2.statements().names()),
                        format!("{:?}", d.statements().names()),
                    ));
                }
                for s in 0..d2.len() {
                    if !equivalent(d.adf().acceptance(s), d2.acceptance(s)) {
                        return Err((
                            d2.acceptance(s).to_string(),
                            d.adf().acceptance(s).to_string(),
                        ));
                    }
                }
                Ok(())
            },
        ),
        "setaf-is-adfplus" => drive(
            canon,
            cfg,
            [
                "arg(a). arg(b). att([a],b).",
                "arg(a). arg(b). arg(c). att([a,b],c).",
                "arg(a).",
            ]
            .iter()
            .map(|t| parse_setaf(t).unwrap())
            .collect(),
            |rng| gen_setaf(rng, cfg),
            |sf| sf.to_text(),
            |sf| setaf_to_adf(sf).map(|_| ()).or_else(errored),
        ),
        "psm-is-complete" => drive(
            canon,
            cfg,
            fixed_adfs(&[KLEENE_EX, EX_ADF]),
            |rng| gen_adf(rng, cfg),
            adf_text,
            |d| {
                let complete = d.kleene_semantics(KleeneKind::Complete, lim).unwrap();
                let psm = d.kleene_semantics(KleeneKind::PartialStable, lim).unwrap();
                match psm.iter().find(|v| !complete.contains(v)) {
                    None => Ok(()),
                    Some(v) => Err((
                        "complete".into(),
                        format!("{} is not", v.to_set_string(false)),
                    )),
                }
            },
        ),
        "gamma-monotone" => {
            let small = GenConfig {
                max_statements: cfg.max_statements.min(4),
                ..*cfg
            };
            drive(
                canon,
                cfg,
                fixed_adfs(&[KLEENE_EX]),
                |rng| gen_adf(rng, &small),
                adf_text,
                |d| {
                    let all = all_interpretations(d.statements());
                    for v in &all {
                        let (gv, kv) = (d.gamma(v).unwrap(), d.gamma_kleene(v).unwrap());
                        for w in all.iter().filter(|w| v.leq_info(w).unwrap()) {
                            let (gw, kw) = (d.gamma(w).unwrap(), d.gamma_kleene(w).unwrap());
                            if !gv.leq_info(&gw).unwrap() || !kv.leq_info(&kw).unwrap() {
                                return Err((
                                    format!(
                                        "monotone on {} ≤ {}",
                                        v.to_set_string(false),
                                        w.to_set_string(false)
                                    ),
                                    "not monotone".into(),
                                ));
                            }
                        }
                    }
                    Ok(())
                },
            )
        }
        "grounded-least" => drive(
            canon,
            cfg,
            fixed_adfs(&[KLEENE_EX, EX_ADF, EX_ADF2]),
            |rng| gen_adf(rng, cfg),
            adf_text,
            |d| {
                let pairs = [
                    (
                        d.grounded_model(),
                        d.complete_models(lim).unwrap(),
                        "consensus",
                    ),
                    (
                        d.kleene_grounded(),
                        d.kleene_semantics(KleeneKind::Complete, lim).unwrap(),
                        "Kleene",
                    ),
                ];
                for (g, complete, which) in pairs {
                    let least =
                        complete.contains(&g) && complete.iter().all(|v| g.leq_info(v).unwrap());
                    if !least {
                        return Err((
                            format!("{which} grounded ≤_i-least of {}", render_set(&complete)),
                            g.to_set_string(false),
                        ));
                    }
                }
                Ok(())
            },
        ),
        "pxi-chain" => drive(
            canon,
            cfg,
            fixed_adfs(&[EX_ADF, EX_ADF2, KLEENE_EX, "s(a). ac(a,or(c(v),neg(a)))."]),
            |rng| gen_adf(rng, cfg),
            adf_text,
            |d| {
                let p = p_of_xi(d).map_err(|e| ("P(Ξ)".to_string(), e.to_string()))?;
                let pairs: [(LpKind, Vec<Interpretation>); 4] = [
                    (LpKind::PartialStable, d.complete_models(lim).unwrap()),
                    (LpKind::WellFounded, vec![d.grounded_model()]),
                    (LpKind::Regular, d.preferred_models(lim).unwrap()),
                    (LpKind::Stable, d.stable_models(lim).unwrap()),
                ];
                for (kind, fw) in pairs {
                    let lp = p.semantics(kind, lim).unwrap();
                    compare(&fw, &lp).map_err(|(e, a)| (e, format!("{kind:?}: {a}")))?;
                }
                Ok(())
            },
        ),
        SEARCH_NEGATIVES => search_negatives(cfg, lim),
        _ => unreachable!("canonical names are exhaustive"),
    };
    Ok(report)
}

/// Looks for frameworks witnessing each non-inclusion; a claim with no
/// witness after `cfg.trials` instances is reported as a failure.
fn search_negatives(cfg: &GenConfig, lim: &Limits) -> CheckReport {
    type Pick = fn(&Adf, &Limits) -> (Vec<Interpretation>, Vec<Interpretation>);
    let claims: [(&str, Pick); 4] = [
        ("preferred ⊄ regular", |d, l| {
            (
                d.kleene_semantics(KleeneKind::Preferred, l).unwrap(),
                d.kleene_semantics(KleeneKind::Regular, l).unwrap(),
            )
        }),
        ("regular ⊄ preferred", |d, l| {
            (
                d.kleene_semantics(KleeneKind::Regular, l).unwrap(),
                d.kleene_semantics(KleeneKind::Preferred, l).unwrap(),
            )
        }),
        ("L-stable ⊄ semi-stable", |d, l| {
            (
                d.kleene_semantics(KleeneKind::LStable, l).unwrap(),
                d.kleene_semantics(KleeneKind::SemiStable, l).unwrap(),
            )
        }),
        ("semi-stable ⊄ L-stable", |d, l| {
            (
                d.kleene_semantics(KleeneKind::SemiStable, l).unwrap(),
                d.kleene_semantics(KleeneKind::LStable, l).unwrap(),
            )
        }),
    ];
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for (claim, pick) in claims {
        let witness = (0..cfg.trials).into_par_iter().find_first(|&i| {
            let d = gen_adf(&mut cfg.rng(i), cfg);
            let (xs, ys) = pick(&d, lim);
            xs.iter().any(|v| !ys.contains(v))
        });
        match witness {
            Some(i) => {
                let d = gen_adf(&mut cfg.rng(i), cfg);
                notes.push(format!(
                    "{claim}: seed {}\n{}",
                    cfg.seed.wrapping_add(i as u64),
                    d.to_text()
                ));
            }
            None => failures.push(Failure {
                seed: None,
                instance: String::new(),
                expected: format!("a witness for {claim}"),
                actual: "none found".into(),
            }),
        }
    }
    CheckReport {
        check: SEARCH_NEGATIVES.to_string(),
        trials: cfg.trials,
        failures,
        notes,
    }
}

/// Every check in [`CHECKS`].
pub fn run_all(cfg: &GenConfig) -> Vec<CheckReport> {
    CHECKS
        .iter()
        .map(|c| run_check(c, cfg).expect("registered check"))
        .collect()
}
