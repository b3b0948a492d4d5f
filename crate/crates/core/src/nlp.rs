//! Propositional normal logic programs under three-valued semantics.
//!
//! The reduct `P/I` removes rules blocked by a true default literal, drops
//! default literals whose atom is false, and replaces the remaining ones with
//! the special atom `u̇`, which is unknown in every interpretation. `Ψ` is the
//! immediate-consequence operator of the reduct and `Ω_P(I)` its least fixpoint
//! from the all-false interpretation. Partial stable models are the fixpoints
//! of `Ω_P`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::logic::{
    filter_interpretations, filter_two_valued, info_least, info_maximal, unknown_minimal,
    Interpretation, TruthValue, Universe,
};
use crate::Limits;

/// `head ← pos, not neg`, atoms being indices into the Herbrand base.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: usize,
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
}

impl Rule {
    /// Same head and the same body literal sets.
    pub fn same_as(&self, other: &Rule) -> bool {
        let sorted = |v: &[usize]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v
        };
        self.head == other.head
            && sorted(&self.pos) == sorted(&other.pos)
            && sorted(&self.neg) == sorted(&other.neg)
    }
}

fn dedup_keep_first(items: Vec<usize>) -> Vec<usize> {
    let mut out = Vec::with_capacity(items.len());
    for i in items {
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

/// Incrementally interns atoms (first-appearance order) and collects rules.
#[derive(Debug, Default)]
pub struct ProgramBuilder {
    hb: Universe,
    rules: Vec<Rule>,
}

impl ProgramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, name: &str) -> usize {
        self.hb.insert(name.to_string())
    }

    pub fn add_rule(&mut self, head: usize, pos: Vec<usize>, neg: Vec<usize>) {
        self.rules.push(Rule {
            head,
            pos: dedup_keep_first(pos),
            neg: dedup_keep_first(neg),
        });
    }

    /// Interns head, positive body and negative body in that order.
    pub fn rule(&mut self, head: &str, pos: &[&str], neg: &[&str]) -> &mut Self {
        let h = self.intern(head);
        let p = pos.iter().map(|a| self.intern(a)).collect();
        let n = neg.iter().map(|a| self.intern(a)).collect();
        self.add_rule(h, p, n);
        self
    }

    pub fn build(self) -> Program {
        Program {
            hb: Arc::new(self.hb),
            rules: self.rules,
        }
    }
}

/// A ground normal logic program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    hb: Arc<Universe>,
    rules: Vec<Rule>,
}

/// Which program semantics to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpKind {
    PartialStable,
    WellFounded,
    Regular,
    Stable,
    LStable,
}

/// `P/I`: positive rules whose bodies may mention `u̇`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedProgram {
    hb: Arc<Universe>,
    rules: Vec<ReducedRule>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedRule {
    pub head: usize,
    pub body: Vec<usize>,
    /// The body contains `u̇`.
    pub undefined: bool,
}

impl ReducedProgram {
    pub fn rules(&self) -> &[ReducedRule] {
        &self.rules
    }

    pub fn herbrand_base(&self) -> &Arc<Universe> {
        &self.hb
    }

    /// Builds a reduced program directly, e.g. to exercise `Ψ` in isolation.
    pub fn new(hb: Arc<Universe>, rules: Vec<ReducedRule>) -> Self {
        ReducedProgram { hb, rules }
    }

    /// One application of `Ψ`: an atom is `t` if some rule body is all true,
    /// `f` if every rule body has a false atom (vacuously when it has no
    /// rules), `u` otherwise.
    pub fn psi(&self, j: &Interpretation) -> Result<Interpretation> {
        if **j.universe() != *self.hb {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.psi_unchecked(j))
    }

    fn psi_unchecked(&self, j: &Interpretation) -> Interpretation {
        let vals = j.values();
        let mut out = vec![TruthValue::False; self.hb.len()];
        for r in &self.rules {
            let mut body = TruthValue::all(r.body.iter().map(|&b| vals[b]));
            if r.undefined {
                body = body & TruthValue::Unknown;
            }
            out[r.head] = out[r.head] | body;
        }
        Interpretation::from_values(self.hb.clone(), out).unwrap()
    }

    /// Iterates `Ψ` from all-`f`; returns the fixpoint and the number of
    /// applications performed.
    pub fn least_model(&self) -> (Interpretation, usize) {
        let mut j = Interpretation::constant(self.hb.clone(), TruthValue::False);
        let mut steps = 0;
        loop {
            let next = self.psi_unchecked(&j);
            steps += 1;
            if next == j {
                return (j, steps);
            }
            j = next;
        }
    }
}

impl Program {
    pub fn builder() -> ProgramBuilder {
        ProgramBuilder::new()
    }

    /// Convenience constructor from `(head, pos, neg)` triples.
    pub fn from_rules(rules: &[(&str, &[&str], &[&str])]) -> Program {
        let mut b = ProgramBuilder::new();
        for (h, p, n) in rules {
            b.rule(h, p, n);
        }
        b.build()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn herbrand_base(&self) -> &Arc<Universe> {
        &self.hb
    }

    pub fn atom_name(&self, i: usize) -> &str {
        self.hb.name(i)
    }

    /// Every rule has only default literals in its body.
    pub fn is_negative_body(&self) -> bool {
        self.rules.iter().all(|r| r.pos.is_empty())
    }

    fn check(&self, i: &Interpretation) -> Result<()> {
        if Arc::ptr_eq(i.universe(), &self.hb) || **i.universe() == *self.hb {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// `min{I(a_1),…,¬I(b_n)} ≤_t I(head)` for every rule.
    pub fn is_model(&self, i: &Interpretation) -> Result<bool> {
        self.check(i)?;
        let v = i.values();
        Ok(self.rules.iter().all(|r| {
            let body = TruthValue::all(
                r.pos
                    .iter()
                    .map(|&a| v[a])
                    .chain(r.neg.iter().map(|&b| !v[b])),
            );
            body.leq_truth(v[r.head])
        }))
    }

    /// The three-step reduct `P/I`.
    pub fn reduct(&self, i: &Interpretation) -> Result<ReducedProgram> {
        self.check(i)?;
        Ok(self.reduct_unchecked(i))
    }

    fn reduct_unchecked(&self, i: &Interpretation) -> ReducedProgram {
        let v = i.values();
        let rules = self
            .rules
            .iter()
            .filter(|r| r.neg.iter().all(|&b| v[b] != TruthValue::True))
            .map(|r| ReducedRule {
                head: r.head,
                body: r.pos.clone(),
                undefined: r.neg.iter().any(|&b| v[b] == TruthValue::Unknown),
            })
            .collect();
        ReducedProgram {
            hb: self.hb.clone(),
            rules,
        }
    }

    /// `Ω_P(I)`, the least model of `P/I`.
    pub fn omega(&self, i: &Interpretation) -> Result<Interpretation> {
        self.check(i)?;
        Ok(self.reduct_unchecked(i).least_model().0)
    }

    /// `Ω_P(I)` together with the number of `Ψ` applications it took.
    pub fn omega_with_steps(&self, i: &Interpretation) -> Result<(Interpretation, usize)> {
        self.check(i)?;
        Ok(self.reduct_unchecked(i).least_model())
    }

    fn is_psm(&self, i: &Interpretation) -> bool {
        self.reduct_unchecked(i).least_model().0 == *i
    }

    /// The well-founded model: `Ω_P` iterated from all-`u`. Falls back to the
    /// `≤_i`-least partial stable model if the iteration has not converged
    /// after `2|HB| + 2` steps.
    pub fn well_founded_model(&self, limits: &Limits) -> Result<Interpretation> {
        let mut i = Interpretation::all_unknown(self.hb.clone());
        for _ in 0..2 * self.hb.len() + 2 {
            let next = self.reduct_unchecked(&i).least_model().0;
            if next == i {
                return Ok(i);
            }
            i = next;
        }
        let psms = self.semantics(LpKind::PartialStable, limits)?;
        Ok(info_least(&psms).expect("every program has a least partial stable model"))
    }

    pub fn semantics(&self, kind: LpKind, limits: &Limits) -> Result<Vec<Interpretation>> {
        let n = limits.max_statements;
        Ok(match kind {
            LpKind::PartialStable => filter_interpretations(&self.hb, n, |i| self.is_psm(i))?,
            LpKind::WellFounded => vec![self.well_founded_model(limits)?],
            LpKind::Regular => info_maximal(&self.semantics(LpKind::PartialStable, limits)?),
            LpKind::Stable => filter_two_valued(&self.hb, n, |i| self.is_psm(i))?,
            LpKind::LStable => unknown_minimal(&self.semantics(LpKind::PartialStable, limits)?),
        })
    }

    pub fn rule_to_string(&self, r: &Rule) -> String {
        let mut body: Vec<String> = r.pos.iter().map(|&a| self.hb.name(a).to_string()).collect();
        body.extend(r.neg.iter().map(|&b| format!("not {}", self.hb.name(b))));
        if body.is_empty() {
            format!("{}.", self.hb.name(r.head))
        } else {
            format!("{} :- {}.", self.hb.name(r.head), body.join(", "))
        }
    }

    /// One rule per line, positive body atoms before default literals.
    pub fn to_text(&self) -> String {
        self.rules
            .iter()
            .map(|r| self.rule_to_string(r) + "\n")
            .collect()
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
