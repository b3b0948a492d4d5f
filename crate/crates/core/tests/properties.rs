use std::collections::BTreeSet;
use std::sync::Arc;

use adflp::adf::{cset_to_formula, formula_to_cset, CSetFamily};
use adflp::logic::enumerate_interpretations;
use adflp::syntax::{parse_formula, parse_program};
use adflp::translate::{setaf_to_adf, support, xi};
use adflp::verify::{gen_adf, gen_program, gen_setaf, run_check, GenConfig, SplitMix64};
use adflp::{
    check_adfplus, Formula, Interpretation, Limits, LpKind, Program, TruthValue, Universe,
};
use proptest::prelude::*;

const ATOMS: [&str; 4] = ["a", "b", "c", "d"];

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => (0..ATOMS.len()).prop_map(|i| Formula::atom(ATOMS[i])),
        1 => Just(Formula::Verum),
        1 => Just(Formula::Falsum),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            prop::collection::vec(inner.clone(), 1..4).prop_map(Formula::And),
            prop::collection::vec(inner, 1..4).prop_map(Formula::Or),
        ]
    })
}

fn universe() -> Arc<Universe> {
    Arc::new(Universe::from_names(ATOMS))
}

fn interpretation() -> impl Strategy<Value = Interpretation> {
    prop::collection::vec(0u8..3, ATOMS.len()).prop_map(|digits| {
        let values = digits.into_iter().map(TruthValue::from_digit).collect();
        Interpretation::from_values(universe(), values).unwrap()
    })
}

// Truth tables written out independently of the library's connectives.
fn kleene_oracle(f: &Formula, v: &Interpretation) -> TruthValue {
    fn rank(x: TruthValue) -> u8 {
        match x {
            TruthValue::False => 0,
            TruthValue::Unknown => 1,
            TruthValue::True => 2,
        }
    }
    fn unrank(r: u8) -> TruthValue {
        [TruthValue::False, TruthValue::Unknown, TruthValue::True][r as usize]
    }
    match f {
        Formula::Atom(a) => v.get(a).unwrap(),
        Formula::Verum => TruthValue::True,
        Formula::Falsum => TruthValue::False,
        Formula::Neg(g) => unrank(2 - rank(kleene_oracle(g, v))),
        Formula::And(gs) => unrank(
            gs.iter()
                .map(|g| rank(kleene_oracle(g, v)))
                .min()
                .unwrap_or(2),
        ),
        Formula::Or(gs) => unrank(
            gs.iter()
                .map(|g| rank(kleene_oracle(g, v)))
                .max()
                .unwrap_or(0),
        ),
    }
}

fn equivalent(f: &Formula, g: &Formula) -> bool {
    (0..1u64 << ATOMS.len()).all(|m| {
        let holds = |x: &str| m >> ATOMS.iter().position(|a| *a == x).unwrap() & 1 == 1;
        f.eval_classical(&holds) == g.eval_classical(&holds)
    })
}

/// `(conc, sup)` pairs of every derivation tree in which no rule repeats
/// along a branch, built top-down.
fn derivations(p: &Program) -> BTreeSet<(usize, BTreeSet<usize>)> {
    fn derive(p: &Program, atom: usize, path: &mut Vec<usize>) -> BTreeSet<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for (i, r) in p.rules().iter().enumerate() {
            if r.head != atom || path.iter().any(|&j| p.rules()[j].same_as(r)) {
                continue;
            }
            path.push(i);
            let mut partial: Vec<BTreeSet<usize>> = vec![r.neg.iter().copied().collect()];
            for &a in &r.pos {
                let subs = derive(p, a, path);
                partial = partial
                    .iter()
                    .flat_map(|acc| subs.iter().map(move |s| acc.union(s).copied().collect()))
                    .collect();
            }
            path.pop();
            out.extend(partial);
        }
        out
    }
    (0..p.herbrand_base().len())
        .flat_map(|a| {
            derive(p, a, &mut Vec::new())
                .into_iter()
                .map(move |s| (a, s))
        })
        .collect()
}

fn small_programs() -> GenConfig {
    GenConfig {
        max_atoms: 5,
        max_rules: 6,
        max_body: 3,
        ..GenConfig::default()
    }
}

proptest! {
    #[test]
    fn kleene_matches_truth_tables(f in formula(), v in interpretation()) {
        prop_assert_eq!(f.eval_kleene(&v).unwrap(), kleene_oracle(&f, &v));
    }

    #[test]
    fn kleene_agrees_with_classical_on_two_valued(f in formula(), mask in 0u64..16) {
        let v = Interpretation::from_mask(universe(), mask);
        let holds = |x: &str| v.get(x) == Some(TruthValue::True);
        prop_assert_eq!(f.eval_kleene(&v).unwrap(), TruthValue::from(f.eval_classical(&holds)));
    }

    #[test]
    fn kleene_is_info_monotone(f in formula(), v in interpretation(), w in interpretation()) {
        let m = v.meet(&w).unwrap();
        prop_assert!(f.eval_kleene(&m).unwrap().leq_info(f.eval_kleene(&v).unwrap()));
    }

    #[test]
    fn meet_is_greatest_lower_bound(v in interpretation(), w in interpretation(), x in interpretation()) {
        let m = v.meet(&w).unwrap();
        prop_assert!(m.leq_info(&v).unwrap() && m.leq_info(&w).unwrap());
        if x.leq_info(&v).unwrap() && x.leq_info(&w).unwrap() {
            prop_assert!(x.leq_info(&m).unwrap());
        }
    }

    #[test]
    fn extensions_refine_and_are_two_valued(v in interpretation()) {
        let ext = v.two_valued_extensions(&ATOMS).unwrap();
        prop_assert_eq!(ext.len(), 1 << v.unknowns().len());
        for e in &ext {
            prop_assert!(e.is_two_valued() && v.leq_info(e).unwrap());
        }
    }

    #[test]
    fn formula_text_round_trips(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn cset_formula_round_trip(f in formula()) {
        let fam = formula_to_cset(&f).unwrap();
        let g = cset_to_formula(&fam);
        prop_assert!(equivalent(&f, &g));
        if !fam.is_empty() {
            prop_assert_eq!(formula_to_cset(&g).unwrap(), fam);
        }
    }

    #[test]
    fn downward_closed_iff_negative_representable(masks in prop::collection::btree_set(0u64..8, 0..8)) {
        let members: Vec<Vec<&str>> = masks
            .iter()
            .map(|&m| (0..3).filter(|i| m >> i & 1 == 1).map(|i| ATOMS[i]).collect())
            .collect();
        let refs: Vec<&[&str]> = members.iter().map(|v| v.as_slice()).collect();
        let fam = CSetFamily::new(&ATOMS[..3], &refs).unwrap();
        prop_assert_eq!(adflp::adfplus::cmax(&fam).is_ok(), fam.is_downward_closed());
    }

    #[test]
    fn gamma_is_info_monotone(seed in any::<u64>()) {
        let cfg = GenConfig { max_statements: 4, max_parents: 3, ..GenConfig::default() };
        let d = gen_adf(&mut SplitMix64::new(seed), &cfg);
        let all: Vec<_> = enumerate_interpretations(d.statements().clone(), 4).unwrap().collect();
        for v in &all {
            let gv = d.gamma(v).unwrap();
            for w in all.iter().filter(|w| v.leq_info(w).unwrap()) {
                prop_assert!(gv.leq_info(&d.gamma(w).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn stable_models_are_complete(seed in any::<u64>()) {
        let cfg = GenConfig::default();
        let d = gen_adf(&mut SplitMix64::new(seed), &cfg);
        let lim = Limits::default();
        let complete = d.complete_models(&lim).unwrap();
        for v in d.stable_models(&lim).unwrap() {
            prop_assert!(v.is_two_valued() && complete.contains(&v));
        }
    }

    #[test]
    fn partial_stable_models_are_models(seed in any::<u64>()) {
        let p = gen_program(&mut SplitMix64::new(seed), &GenConfig::default());
        for i in p.semantics(LpKind::PartialStable, &Limits::default()).unwrap() {
            prop_assert!(p.is_model(&i).unwrap());
        }
    }

    #[test]
    fn well_founded_is_least_partial_stable(seed in any::<u64>()) {
        let p = gen_program(&mut SplitMix64::new(seed), &GenConfig::default());
        let lim = Limits::default();
        let wf = p.well_founded_model(&lim).unwrap();
        let psms = p.semantics(LpKind::PartialStable, &lim).unwrap();
        prop_assert!(psms.contains(&wf));
        prop_assert!(psms.iter().all(|m| wf.leq_info(m).unwrap()));
    }

    #[test]
    fn supports_match_derivation_trees(seed in any::<u64>()) {
        let p = gen_program(&mut SplitMix64::new(seed), &small_programs());
        let lim = Limits::default();
        let oracle = derivations(&p);
        for (a, name) in p.herbrand_base().names().iter().enumerate() {
            let expected: BTreeSet<BTreeSet<usize>> =
                oracle.iter().filter(|(c, _)| *c == a).map(|(_, s)| s.clone()).collect();
            prop_assert_eq!(support(&p, name, &lim).unwrap(), expected, "atom {}", name);
        }
    }

    #[test]
    fn xi_is_always_adfplus(seed in any::<u64>()) {
        let p = gen_program(&mut SplitMix64::new(seed), &GenConfig::default());
        let d = xi(&p, &Limits::default()).unwrap();
        prop_assert!(check_adfplus(d.adf()).is_ok());
    }

    #[test]
    fn setaf_output_is_adfplus(seed in any::<u64>()) {
        let sf = gen_setaf(&mut SplitMix64::new(seed), &GenConfig::default());
        let d = setaf_to_adf(&sf).unwrap();
        prop_assert!(check_adfplus(d.adf()).is_ok());
    }

    #[test]
    fn program_text_round_trips(seed in any::<u64>()) {
        let p = gen_program(&mut SplitMix64::new(seed), &GenConfig::default());
        prop_assert_eq!(parse_program(&p.to_text()).unwrap(), p);
    }
}

#[test]
fn negative_body_programs_translate_identically() {
    let cfg = GenConfig {
        seed: 100,
        trials: 100,
        ..GenConfig::default()
    };
    let r = run_check("xi-eq-xi2-negbody", &cfg).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
}
