//! Translations between programs, ADFs, and SETAFs.
//!
//! * [`xi`] builds an ADF⁺ from the supports of a program's substatements;
//! * [`xi2`] reads each rule body directly as a disjunct;
//! * [`p_of_xi`] turns every accepted parent set into a rule;
//! * [`setaf_to_adf`] encodes collective attacks.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::adf::Adf;
use crate::adfplus::{check_adfplus, AdfPlus};
use crate::error::{capacity, Error, Result};
use crate::logic::{Formula, Universe};
use crate::nlp::{Program, ProgramBuilder, Rule};
use crate::Limits;

/// A derivation of `conc` without rule repetition along any branch.
///
/// `rules` are rule indices into the program and `sup` the atoms occurring
/// as default literals (`¬b`) anywhere in the derivation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Substatement {
    pub conc: usize,
    pub rules: BTreeSet<usize>,
    pub sup: BTreeSet<usize>,
}

/// Canonical index of each rule: the first rule equal to it.
fn rule_ids(p: &Program) -> Vec<usize> {
    let rules = p.rules();
    (0..rules.len())
        .map(|i| (0..=i).find(|&j| rules[j].same_as(&rules[i])).unwrap())
        .collect()
}

/// All substatements of `p`, computed by saturation.
pub fn substatements(p: &Program, limits: &Limits) -> Result<Vec<Substatement>> {
    let ids = rule_ids(p);
    let rules: Vec<(usize, &Rule)> = p
        .rules()
        .iter()
        .enumerate()
        .filter(|&(i, _)| ids[i] == i)
        .collect();
    let mut found: HashSet<Substatement> = HashSet::new();
    let mut by_conc: Vec<Vec<Substatement>> = vec![Vec::new(); p.herbrand_base().len()];
    loop {
        let mut fresh = Vec::new();
        for &(id, rule) in &rules {
            // children per positive body atom, excluding those that use this rule
            let choices: Vec<Vec<&Substatement>> = rule
                .pos
                .iter()
                .map(|&a| {
                    by_conc[a]
                        .iter()
                        .filter(|c| !c.rules.contains(&id))
                        .collect()
                })
                .collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut pick = vec![0usize; choices.len()];
            loop {
                let mut st = Substatement {
                    conc: rule.head,
                    rules: BTreeSet::from([id]),
                    sup: rule.neg.iter().copied().collect(),
                };
                for (k, &i) in pick.iter().enumerate() {
                    st.rules.extend(&choices[k][i].rules);
                    st.sup.extend(&choices[k][i].sup);
                }
                if !found.contains(&st) {
                    found.insert(st.clone());
                    if found.len() > limits.max_substatements {
                        return Err(capacity(
                            format!("substatements of `{}`", p.atom_name(rule.head)),
                            format!("more than {}", limits.max_substatements),
                            limits.max_substatements,
                        ));
                    }
                    fresh.push(st);
                }
                // odometer over the children
                let mut k = 0;
                while k < pick.len() {
                    pick[k] += 1;
                    if pick[k] < choices[k].len() {
                        break;
                    }
                    pick[k] = 0;
                    k += 1;
                }
                if k == pick.len() {
                    break;
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        for st in fresh {
            by_conc[st.conc].push(st);
        }
    }
    let mut out: Vec<Substatement> = found.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `Sup_P(a)`: the distinct default-literal sets of substatements for `a`.
pub fn support(p: &Program, a: &str, limits: &Limits) -> Result<BTreeSet<BTreeSet<usize>>> {
    let idx = p.herbrand_base().require(a)?;
    Ok(substatements(p, limits)?
        .into_iter()
        .filter(|s| s.conc == idx)
        .map(|s| s.sup)
        .collect())
}

fn supports_by_atom(p: &Program, limits: &Limits) -> Result<Vec<BTreeSet<BTreeSet<usize>>>> {
    let mut out = vec![BTreeSet::new(); p.herbrand_base().len()];
    for s in substatements(p, limits)? {
        out[s.conc].insert(s.sup);
    }
    Ok(out)
}

/// Keeps the `⊆`-minimal sets.
fn minimize(family: &BTreeSet<BTreeSet<usize>>) -> Vec<&BTreeSet<usize>> {
    family
        .iter()
        .filter(|b| !family.iter().any(|c| c != *b && c.is_subset(b)))
        .collect()
}

/// `Ξ(P)`: `φ_a = ⋁_{B ∈ Sup_P(a)} ⋀_{¬b ∈ B} ¬b`, over `⊆`-minimal supports.
pub fn xi(p: &Program, limits: &Limits) -> Result<AdfPlus> {
    let hb = p.herbrand_base();
    let supports = supports_by_atom(p, limits)?;
    let pairs = supports.iter().enumerate().map(|(a, fam)| {
        let phi = Formula::or(
            minimize(fam)
                .into_iter()
                .map(|b| Formula::and(b.iter().map(|&x| Formula::neg_atom(hb.name(x))))),
        );
        (hb.name(a).to_string(), phi)
    });
    check_adfplus(&Adf::new(pairs)?)
}

/// `Ξ₂(P)`: `φ_a` is the disjunction of the bodies of the rules for `a`.
pub fn xi2(p: &Program) -> Adf {
    let hb = p.herbrand_base();
    let mut bodies: Vec<Vec<Formula>> = vec![Vec::new(); hb.len()];
    for r in p.rules() {
        let body = Formula::and(
            r.pos
                .iter()
                .map(|&a| Formula::atom(hb.name(a)))
                .chain(r.neg.iter().map(|&b| Formula::neg_atom(hb.name(b)))),
        );
        bodies[r.head].push(body);
    }
    let pairs = bodies
        .into_iter()
        .enumerate()
        .map(|(a, bs)| (hb.name(a).to_string(), Formula::or(bs)));
    Adf::new(pairs).expect("every body atom belongs to the Herbrand base")
}

/// `P(Ξ)`: one rule `s ← R, not (par(s) − R)` for every `R ∈ C^t_s`.
///
/// The Herbrand base lists the statements in their original order.
pub fn p_of_xi(d: &Adf) -> Result<Program> {
    let mut b = ProgramBuilder::new();
    for name in d.statements().names() {
        b.intern(name);
    }
    for s in 0..d.len() {
        let fam = d.family(s)?;
        let parents = d.parents(s);
        for &m in fam.masks() {
            let pos = (0..parents.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| parents[i])
                .collect();
            let neg = (0..parents.len())
                .filter(|i| m >> i & 1 == 0)
                .map(|i| parents[i])
                .collect();
            b.add_rule(s, pos, neg);
        }
    }
    Ok(b.build())
}

/// A framework with collective attacks `X → a`, `X` nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Setaf {
    arguments: Arc<Universe>,
    attacks: Vec<(BTreeSet<usize>, usize)>,
}

impl Setaf {
    pub fn new<S: Into<String>>(arguments: impl IntoIterator<Item = S>) -> Setaf {
        Setaf {
            arguments: Arc::new(Universe::from_names(arguments.into_iter().map(Into::into))),
            attacks: Vec::new(),
        }
    }

    /// Adds `X → target`; repeated attacks are ignored.
    pub fn add_attack<S: AsRef<str>>(&mut self, attackers: Vec<S>, target: S) -> Result<()> {
        if attackers.is_empty() {
            return Err(Error::Invalid("attacking set must be nonempty".into()));
        }
        let set = attackers
            .iter()
            .map(|a| self.arguments.require(a.as_ref()))
            .collect::<Result<BTreeSet<usize>>>()?;
        let t = self.arguments.require(target.as_ref())?;
        if !self.attacks.contains(&(set.clone(), t)) {
            self.attacks.push((set, t));
        }
        Ok(())
    }

    pub fn arguments(&self) -> &Arc<Universe> {
        &self.arguments
    }

    pub fn attacks(&self) -> &[(BTreeSet<usize>, usize)] {
        &self.attacks
    }

    pub fn to_text(&self) -> String {
        let names = self.arguments.names();
        let mut out: String = names.iter().map(|a| format!("arg({a}).\n")).collect();
        for (set, t) in &self.attacks {
            let xs: Vec<&str> = set.iter().map(|&x| names[x].as_str()).collect();
            out.push_str(&format!("att([{}],{}).\n", xs.join(","), names[*t]));
        }
        out
    }
}

impl fmt::Display for Setaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `C_a(B) = f` iff some attacker set of `a` is contained in `B`, encoded as
/// `⋀_X ⋁_{x ∈ X} ¬x`.
pub fn setaf_to_adf(sf: &Setaf) -> Result<AdfPlus> {
    let names = sf.arguments.names();
    let pairs = (0..names.len()).map(|a| {
        let phi =
            Formula::and(sf.attacks.iter().filter(|(_, t)| *t == a).map(|(set, _)| {
                Formula::or(set.iter().map(|&x| Formula::neg_atom(names[x].clone())))
            }));
        (names[a].clone(), phi)
    });
    check_adfplus(&Adf::new(pairs)?)
}
