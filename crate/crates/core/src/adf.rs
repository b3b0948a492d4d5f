//! Abstract dialectical frameworks and their semantics.
//!
//! An [`Adf`] stores one acceptance formula per statement; parents and links
//! are derived from the atoms of each formula. Two operators are available:
//!
//! * [`Adf::gamma`], the consensus operator: the value of `s` is the meet of
//!   `φ_s` over every two-valued completion of the unknown parents;
//! * [`Adf::gamma_kleene`], pointwise strong Kleene evaluation of `φ_s`.
//!
//! Complete, grounded, preferred, and stable models use the consensus
//! operator. The second family ([`KleeneKind`]) uses Kleene evaluation together
//! with a reduct that falsifies conditions no accepted parent set can satisfy.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{capacity, Error, Result};
use crate::logic::{
    filter_interpretations, filter_two_valued, info_least, info_maximal, unknown_minimal, Formula,
    IndexedFormula, Interpretation, TruthValue, Universe,
};
use crate::Limits;

/// Largest parent set for which `C^t` families are materialized.
pub const MAX_FAMILY_PARENTS: usize = 20;

/// Largest number of unknown parents the consensus operator will enumerate.
pub const MAX_CONSENSUS_UNKNOWNS: usize = 30;

/// The accepted parent subsets `C^t_s` of a statement.
///
/// Members are stored as bit masks over `parents` (bit `i` is `parents[i]`).
#[derive(Debug, Clone)]
pub struct CSetFamily {
    parents: Vec<String>,
    accepted: BTreeSet<u64>,
}

impl PartialEq for CSetFamily {
    fn eq(&self, other: &Self) -> bool {
        let ps: BTreeSet<&String> = self.parents.iter().collect();
        let qs: BTreeSet<&String> = other.parents.iter().collect();
        ps == qs && self.member_sets() == other.member_sets()
    }
}

impl Eq for CSetFamily {}

impl CSetFamily {
    /// Builds a family from parent names and member subsets given by name.
    pub fn new<S: AsRef<str>>(parents: &[S], members: &[&[S]]) -> Result<CSetFamily> {
        let parents: Vec<String> = parents.iter().map(|p| p.as_ref().to_string()).collect();
        if parents.len() > MAX_FAMILY_PARENTS {
            return Err(capacity(
                "acceptance family",
                format!("{} parents", parents.len()),
                MAX_FAMILY_PARENTS,
            ));
        }
        let mut fam = CSetFamily {
            parents,
            accepted: BTreeSet::new(),
        };
        for m in members {
            let mut mask = 0u64;
            for name in m.iter() {
                let i = fam
                    .parents
                    .iter()
                    .position(|p| p == name.as_ref())
                    .ok_or_else(|| Error::UnknownAtom(name.as_ref().to_string()))?;
                mask |= 1 << i;
            }
            fam.accepted.insert(mask);
        }
        Ok(fam)
    }

    pub(crate) fn from_masks(parents: Vec<String>, accepted: BTreeSet<u64>) -> CSetFamily {
        CSetFamily { parents, accepted }
    }

    pub fn parents(&self) -> &[String] {
        &self.parents
    }

    pub fn masks(&self) -> &BTreeSet<u64> {
        &self.accepted
    }

    pub fn len(&self) -> usize {
        self.accepted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.accepted.is_empty()
    }

    pub fn accepts_mask(&self, mask: u64) -> bool {
        self.accepted.contains(&mask)
    }

    /// `C_s(R)` for a set of parent names.
    pub fn accepts(&self, members: &[&str]) -> bool {
        let mut mask = 0u64;
        for m in members {
            match self.parents.iter().position(|p| p == m) {
                Some(i) => mask |= 1 << i,
                None => return false,
            }
        }
        self.accepts_mask(mask)
    }

    pub fn mask_names(&self, mask: u64) -> Vec<String> {
        (0..self.parents.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.parents[i].clone())
            .collect()
    }

    /// Members as sorted name sets.
    pub fn member_sets(&self) -> BTreeSet<BTreeSet<String>> {
        self.accepted
            .iter()
            .map(|&m| self.mask_names(m).into_iter().collect())
            .collect()
    }

    pub fn full_mask(&self) -> u64 {
        if self.parents.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.parents.len()) - 1
        }
    }

    /// Every subset of an accepted set is accepted.
    pub fn is_downward_closed(&self) -> bool {
        self.accepted.iter().all(|&m| {
            (0..self.parents.len())
                .filter(|i| m >> i & 1 == 1)
                .all(|i| self.accepted.contains(&(m & !(1 << i))))
        })
    }

    /// Full disjunctive normal form: one disjunct per accepted `R`, with the
    /// members of `R` positive and the remaining parents negated.
    pub fn to_formula(&self) -> Formula {
        Formula::or(self.accepted.iter().map(|&m| {
            Formula::and((0..self.parents.len()).map(|i| {
                if m >> i & 1 == 1 {
                    Formula::atom(self.parents[i].clone())
                } else {
                    Formula::neg_atom(self.parents[i].clone())
                }
            }))
        }))
    }

    /// The accepted sets of `φ` over its own atoms (first-appearance order).
    pub fn from_formula(formula: &Formula) -> Result<CSetFamily> {
        let parents = formula.atoms();
        family_over(formula, parents)
    }
}

pub(crate) fn family_over(formula: &Formula, parents: Vec<String>) -> Result<CSetFamily> {
    if parents.len() > MAX_FAMILY_PARENTS {
        return Err(capacity(
            "acceptance family",
            format!("2^{}", parents.len()),
            MAX_FAMILY_PARENTS,
        ));
    }
    let universe = Universe::from_names(parents.iter().cloned());
    let compiled = formula.compile(&universe)?;
    let accepted = (0..1u64 << parents.len())
        .filter(|&m| compiled.eval2(&|i| m >> i & 1 == 1))
        .collect();
    Ok(CSetFamily { parents, accepted })
}

/// The full-DNF acceptance formula of a family.
pub fn cset_to_formula(fam: &CSetFamily) -> Formula {
    fam.to_formula()
}

/// Accepted parent sets of `φ`, parents being `atoms(φ)`.
pub fn formula_to_cset(formula: &Formula) -> Result<CSetFamily> {
    CSetFamily::from_formula(formula)
}

/// Polarity of a link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkClass {
    Supporting,
    Attacking,
    Redundant,
    Dependent,
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkClass::Supporting => "supporting",
            LinkClass::Attacking => "attacking",
            LinkClass::Redundant => "redundant",
            LinkClass::Dependent => "dependent",
        })
    }
}

/// Classifies parent `bit` of `fam` against the supporting/attacking tests.
pub(crate) fn classify_in_family(fam: &CSetFamily, bit: usize) -> LinkClass {
    let supporting = support_witness(fam, bit).is_none();
    let attacking = attack_witness(fam, bit).is_none();
    match (supporting, attacking) {
        (true, true) => LinkClass::Redundant,
        (true, false) => LinkClass::Supporting,
        (false, true) => LinkClass::Attacking,
        (false, false) => LinkClass::Dependent,
    }
}

/// First `R` (in mask order, `r ∉ R`) with `C(R) = t` and `C(R ∪ {r}) = f`.
pub(crate) fn support_witness(fam: &CSetFamily, bit: usize) -> Option<u64> {
    (0..=fam.full_mask())
        .filter(|m| m >> bit & 1 == 0)
        .find(|&m| fam.accepts_mask(m) && !fam.accepts_mask(m | 1 << bit))
}

/// First `R` (in mask order, `r ∉ R`) with `C(R) = f` and `C(R ∪ {r}) = t`.
pub(crate) fn attack_witness(fam: &CSetFamily, bit: usize) -> Option<u64> {
    (0..=fam.full_mask())
        .filter(|m| m >> bit & 1 == 0)
        .find(|&m| !fam.accepts_mask(m) && fam.accepts_mask(m | 1 << bit))
}

/// Which semantics of the Kleene-operator family to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KleeneKind {
    /// `v ≤_i Γ(v)`.
    Admissible,
    /// Fixpoints of the Kleene operator.
    Complete,
    /// `≤_i`-maximal admissible.
    Preferred,
    /// `v` is the least Kleene fixpoint of the reduct by `v`.
    PartialStable,
    /// `≤_i`-maximal partial stable.
    Regular,
    /// Two-valued partial stable.
    Stable,
    /// Complete with `⊆`-minimal unknown set.
    SemiStable,
    /// Partial stable with `⊆`-minimal unknown set.
    LStable,
}

/// An abstract dialectical framework given by acceptance formulas.
#[derive(Debug, Clone)]
pub struct Adf {
    statements: Arc<Universe>,
    acceptance: Vec<Formula>,
    compiled: Vec<IndexedFormula>,
    parents: Vec<Vec<usize>>,
}

impl PartialEq for Adf {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements && self.acceptance == other.acceptance
    }
}

impl Eq for Adf {}

impl Adf {
    /// Builds a framework from `(statement, φ)` pairs; statement order is the
    /// order given. Every atom of every `φ` must be a statement.
    pub fn new<S: Into<String>>(pairs: impl IntoIterator<Item = (S, Formula)>) -> Result<Adf> {
        let mut names = Vec::new();
        let mut acceptance = Vec::new();
        for (n, f) in pairs {
            names.push(n.into());
            acceptance.push(f);
        }
        let statements = Universe::from_names(names.iter().cloned());
        if statements.len() != names.len() {
            return Err(Error::Invalid("duplicate statement".into()));
        }
        if let Some(bad) = names.iter().find(|n| !crate::logic::is_atom_name(n)) {
            return Err(Error::Invalid(format!(
                "`{bad}` is not a valid statement name"
            )));
        }
        let compiled = acceptance
            .iter()
            .map(|f| f.compile(&statements))
            .collect::<Result<Vec<_>>>()?;
        let parents = acceptance
            .iter()
            .map(|f| {
                let mut ps: Vec<usize> = f
                    .atoms()
                    .iter()
                    .map(|a| statements.index_of(a).unwrap())
                    .collect();
                ps.sort_unstable();
                ps
            })
            .collect();
        Ok(Adf {
            statements: Arc::new(statements),
            acceptance,
            compiled,
            parents,
        })
    }

    /// Builds a framework from accepted parent families (as full-DNF formulas).
    pub fn from_families<S: Into<String>>(
        pairs: impl IntoIterator<Item = (S, CSetFamily)>,
    ) -> Result<Adf> {
        Adf::new(pairs.into_iter().map(|(s, fam)| (s, fam.to_formula())))
    }

    pub fn statements(&self) -> &Arc<Universe> {
        &self.statements
    }

    pub fn len(&self) -> usize {
        self.acceptance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.acceptance.is_empty()
    }

    pub fn acceptance(&self, s: usize) -> &Formula {
        &self.acceptance[s]
    }

    pub fn acceptance_of(&self, name: &str) -> Option<&Formula> {
        self.statements.index_of(name).map(|i| &self.acceptance[i])
    }

    /// Parents of `s` in statement order.
    pub fn parents(&self, s: usize) -> &[usize] {
        &self.parents[s]
    }

    pub fn parent_names(&self, s: usize) -> Vec<String> {
        self.parents[s]
            .iter()
            .map(|&p| self.statements.name(p).to_string())
            .collect()
    }

    /// Derived links `(parent, child)`, grouped by child in statement order.
    pub fn links(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|s| self.parents[s].iter().map(move |&p| (p, s)))
            .collect()
    }

    /// `C^t_s` over `par(s)` in statement order.
    pub fn family(&self, s: usize) -> Result<CSetFamily> {
        family_over(&self.acceptance[s], self.parent_names(s))
    }

    fn check(&self, v: &Interpretation) -> Result<()> {
        if Arc::ptr_eq(v.universe(), &self.statements) || **v.universe() == *self.statements {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Consensus value of `φ_s` over the completions of `v` on `par(s)`.
    pub(crate) fn consensus_at(&self, s: usize, v: &Interpretation) -> TruthValue {
        let vals = v.values();
        let open: Vec<usize> = self.parents[s]
            .iter()
            .copied()
            .filter(|&p| vals[p] == TruthValue::Unknown)
            .collect();
        assert!(
            open.len() <= MAX_CONSENSUS_UNKNOWNS,
            "consensus over {} unknown parents",
            open.len()
        );
        let base: Vec<bool> = vals.iter().map(|&x| x == TruthValue::True).collect();
        let formula = &self.compiled[s];
        if open.is_empty() {
            return formula.eval2(&|i| base[i]).into();
        }
        let mut assign = base;
        let mut seen_true = false;
        let mut seen_false = false;
        for bits in 0..1u64 << open.len() {
            for (k, &p) in open.iter().enumerate() {
                assign[p] = bits >> k & 1 == 1;
            }
            if formula.eval2(&|i| assign[i]) {
                seen_true = true;
            } else {
                seen_false = true;
            }
            if seen_true && seen_false {
                return TruthValue::Unknown;
            }
        }
        seen_true.into()
    }

    /// The consensus operator `Γ_D`.
    pub fn gamma(&self, v: &Interpretation) -> Result<Interpretation> {
        self.check(v)?;
        Ok(self.gamma_unchecked(v))
    }

    pub(crate) fn gamma_unchecked(&self, v: &Interpretation) -> Interpretation {
        let values = (0..self.len()).map(|s| self.consensus_at(s, v)).collect();
        Interpretation::from_values(self.statements.clone(), values).unwrap()
    }

    /// Pointwise Kleene evaluation of every `φ_s`.
    pub fn gamma_kleene(&self, v: &Interpretation) -> Result<Interpretation> {
        self.check(v)?;
        Ok(self.gamma_kleene_unchecked(v))
    }

    fn gamma_kleene_unchecked(&self, v: &Interpretation) -> Interpretation {
        let values = self.compiled.iter().map(|f| f.eval3(v.values())).collect();
        Interpretation::from_values(self.statements.clone(), values).unwrap()
    }

    /// Every decided statement agrees with its consensus value.
    pub fn is_model(&self, v: &Interpretation) -> Result<bool> {
        self.check(v)?;
        Ok((0..self.len()).all(|s| {
            let x = v.value(s);
            !x.is_decided() || self.consensus_at(s, v) == x
        }))
    }

    /// Every fixpoint of [`Adf::gamma`], in canonical order.
    pub fn complete_models(&self, limits: &Limits) -> Result<Vec<Interpretation>> {
        filter_interpretations(&self.statements, limits.max_statements, |v| {
            (0..self.len()).all(|s| self.consensus_at(s, v) == v.value(s))
        })
    }

    /// Least fixpoint of [`Adf::gamma`], by iteration from all-`u`.
    pub fn grounded_model(&self) -> Interpretation {
        least_fixpoint(Interpretation::all_unknown(self.statements.clone()), |v| {
            self.gamma_unchecked(v)
        })
    }

    /// `≤_i`-maximal complete models.
    pub fn preferred_models(&self, limits: &Limits) -> Result<Vec<Interpretation>> {
        Ok(info_maximal(&self.complete_models(limits)?))
    }

    /// Reduct by a two-valued model: keep the true statements and replace
    /// every false statement by `Falsum` inside their conditions.
    pub fn reduct_brewka(&self, v: &Interpretation) -> Result<Adf> {
        self.check(v)?;
        if !v.is_two_valued() {
            return Err(Error::NotTwoValued);
        }
        if !self.is_model(v)? {
            return Err(Error::NotAModel);
        }
        Ok(self.reduct_brewka_unchecked(v))
    }

    fn reduct_brewka_unchecked(&self, v: &Interpretation) -> Adf {
        let falsify = |a: &str| (v.get(a) == Some(TruthValue::False)).then_some(Formula::Falsum);
        let pairs = (0..self.len())
            .filter(|&s| v.value(s) == TruthValue::True)
            .map(|s| {
                (
                    self.statements.name(s).to_string(),
                    self.acceptance[s].substitute(&falsify),
                )
            });
        Adf::new(pairs).expect("reduct keeps only statements whose parents are true or falsified")
    }

    /// Two-valued models whose reduct has a grounded model accepting every
    /// statement it keeps.
    pub fn stable_models(&self, limits: &Limits) -> Result<Vec<Interpretation>> {
        filter_two_valued(&self.statements, limits.max_statements, |v| {
            let model = (0..self.len()).all(|s| self.consensus_at(s, v) == v.value(s));
            model && self.is_stable_candidate(v)
        })
    }

    fn is_stable_candidate(&self, v: &Interpretation) -> bool {
        let reduct = self.reduct_brewka_unchecked(v);
        let grounded = reduct.grounded_model();
        // statements outside E_v are false in both
        grounded.values().iter().all(|&x| x == TruthValue::True)
    }

    /// Classifies the link `(from, to)`.
    pub fn classify_link(&self, from: &str, to: &str) -> Result<LinkClass> {
        let (r, s) = self.link_indices(from, to)?;
        let fam = self.family(s)?;
        let bit = self.parents[s].iter().position(|&p| p == r).unwrap();
        Ok(classify_in_family(&fam, bit))
    }

    pub(crate) fn link_indices(&self, from: &str, to: &str) -> Result<(usize, usize)> {
        let not_link = || Error::NotALink {
            from: from.to_string(),
            to: to.to_string(),
        };
        let r = self.statements.index_of(from).ok_or_else(not_link)?;
        let s = self.statements.index_of(to).ok_or_else(not_link)?;
        if !self.parents[s].contains(&r) {
            return Err(not_link());
        }
        Ok((r, s))
    }

    /// Every link with its classification, in [`Adf::links`] order.
    pub fn classify_links(&self) -> Result<Vec<((usize, usize), LinkClass)>> {
        let mut out = Vec::new();
        for s in 0..self.len() {
            if self.parents[s].is_empty() {
                continue;
            }
            let fam = self.family(s)?;
            for (bit, &r) in self.parents[s].iter().enumerate() {
                out.push(((r, s), classify_in_family(&fam, bit)));
            }
        }
        Ok(out)
    }

    /// Keeps `φ_s` when some accepted parent set is consistent with `v`
    /// (some full-DNF disjunct is not false under `v`), otherwise sets it to
    /// `Falsum`.
    pub fn kleene_reduct(&self, v: &Interpretation) -> Result<Adf> {
        self.check(v)?;
        Ok(self.kleene_reduct_unchecked(v))
    }

    fn kleene_reduct_unchecked(&self, v: &Interpretation) -> Adf {
        // A disjunct for R is not false iff no parent contradicts it, i.e. R is
        // the true-set of some completion of v on par(s): keep iff Γ(v)(s) ≠ f.
        let mut out = self.clone();
        for s in 0..self.len() {
            if self.consensus_at(s, v) == TruthValue::False {
                out.acceptance[s] = Formula::Falsum;
                out.compiled[s] = IndexedFormula::Falsum;
                out.parents[s].clear();
            }
        }
        out
    }

    /// Least fixpoint of [`Adf::gamma_kleene`].
    pub fn kleene_grounded(&self) -> Interpretation {
        least_fixpoint(Interpretation::all_unknown(self.statements.clone()), |v| {
            self.gamma_kleene_unchecked(v)
        })
    }

    fn is_partial_stable(&self, v: &Interpretation) -> bool {
        self.kleene_reduct_unchecked(v).kleene_grounded() == *v
    }

    /// Semantics based on Kleene evaluation and [`Adf::kleene_reduct`].
    pub fn kleene_semantics(
        &self,
        kind: KleeneKind,
        limits: &Limits,
    ) -> Result<Vec<Interpretation>> {
        let n = limits.max_statements;
        let u = &self.statements;
        Ok(match kind {
            KleeneKind::Admissible => filter_interpretations(u, n, |v| {
                v.leq_info_unchecked(&self.gamma_kleene_unchecked(v))
            })?,
            KleeneKind::Complete => {
                filter_interpretations(u, n, |v| self.gamma_kleene_unchecked(v) == *v)?
            }
            KleeneKind::Preferred => {
                info_maximal(&self.kleene_semantics(KleeneKind::Admissible, limits)?)
            }
            KleeneKind::PartialStable => {
                filter_interpretations(u, n, |v| self.is_partial_stable(v))?
            }
            KleeneKind::Regular => {
                info_maximal(&self.kleene_semantics(KleeneKind::PartialStable, limits)?)
            }
            KleeneKind::Stable => filter_two_valued(u, n, |v| self.is_partial_stable(v))?,
            KleeneKind::SemiStable => {
                unknown_minimal(&self.kleene_semantics(KleeneKind::Complete, limits)?)
            }
            KleeneKind::LStable => {
                unknown_minimal(&self.kleene_semantics(KleeneKind::PartialStable, limits)?)
            }
        })
    }

    /// File rendering: `s(x).` lines followed by `ac(x,φ).` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in self.statements.names() {
            out.push_str(&format!("s({name}).\n"));
        }
        for (name, f) in self.statements.names().iter().zip(&self.acceptance) {
            out.push_str(&format!("ac({name},{f}).\n"));
        }
        out
    }
}

pub(crate) fn least_fixpoint(
    start: Interpretation,
    step: impl Fn(&Interpretation) -> Interpretation,
) -> Interpretation {
    let mut v = start;
    loop {
        let next = step(&v);
        if next == v {
            return v;
        }
        v = next;
    }
}

/// The `≤_i`-least member of a set of complete models.
pub fn least_complete(models: &[Interpretation]) -> Option<Interpretation> {
    info_least(models)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_adf;

    fn lits(adf: &Adf, s: &str) -> Interpretation {
        Interpretation::from_literals(adf.statements().clone(), s).unwrap()
    }

    fn set(adf: &Adf, items: &[&str]) -> BTreeSet<Interpretation> {
        items.iter().map(|s| lits(adf, s)).collect()
    }

    fn ex_adf() -> Adf {
        parse_adf(
            "s(a). s(b). s(c). s(d). s(e).
             ac(a,neg(b)). ac(b,neg(a)). ac(c,and(neg(b),e)). ac(d,neg(c)). ac(e,neg(d)).",
        )
        .unwrap()
    }

    fn ex_adf2() -> Adf {
        parse_adf(
            "s(a). s(b). s(c). s(d). s(e).
             ac(a,neg(b)). ac(b,neg(a)).
             ac(c,or(and(neg(c),neg(a)),and(neg(c),neg(d)))).
             ac(d,neg(d)). ac(e,and(neg(e),neg(b))).",
        )
        .unwrap()
    }

    fn kleene_example() -> Adf {
        parse_adf("s(a). s(b). s(c). ac(a,c(v)). ac(b,or(neg(a),c)). ac(c,b).").unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn cset_formula_examples() {
        let empty: &[&str] = &[];
        let verum = CSetFamily::new(empty, &[empty]).unwrap();
        assert_eq!(cset_to_formula(&verum), Formula::Verum);
        let none = CSetFamily::new(&["b"], &[]).unwrap();
        assert_eq!(cset_to_formula(&none), Formula::Falsum);
        let fam = CSetFamily::new(&["b", "c"], &[&["b"], &[]]).unwrap();
        let f = cset_to_formula(&fam);
        let expected: Formula = "or(and(neg(b),neg(c)),and(b,neg(c)))".parse().unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn formula_to_cset_examples() {
        let fam = formula_to_cset(&Formula::neg_atom("a")).unwrap();
        assert_eq!(fam, CSetFamily::new(&["a"], &[&[]]).unwrap());
        let f: Formula = "or(neg(a),c)".parse().unwrap();
        let fam = formula_to_cset(&f).unwrap();
        assert_eq!(
            fam,
            CSetFamily::new(&["a", "c"], &[&[], &["c"], &["a", "c"]]).unwrap()
        );
        assert!(formula_to_cset(&Formula::Falsum).unwrap().is_empty());
    }

    #[test]
    fn gamma_examples() {
        let d = ex_adf();
        let bottom = Interpretation::all_unknown(d.statements().clone());
        assert_eq!(d.gamma(&bottom).unwrap(), bottom);
        let v = lits(&d, "{a, ~b}");
        assert_eq!(d.gamma(&v).unwrap(), v);

        let selfattack = parse_adf("s(a). ac(a,neg(a)).").unwrap();
        let b = Interpretation::all_unknown(selfattack.statements().clone());
        assert_eq!(selfattack.gamma(&b).unwrap().value(0), TruthValue::Unknown);
    }

    #[test]
    fn gamma_kleene_examples() {
        let d = kleene_example();
        let v = lits(&d, "{a}");
        assert_eq!(d.gamma_kleene(&v).unwrap(), v);
        let w = lits(&d, "{a, ~b, ~c}");
        assert_eq!(d.gamma_kleene(&w).unwrap(), w);

        let d = parse_adf("s(a). s(b). ac(a,or(b,neg(b))). ac(b,c(f)).").unwrap();
        let v = lits(&d, "{~b}");
        assert_eq!(d.gamma_kleene(&v).unwrap().value(0), TruthValue::True);
    }

    #[test]
    fn consensus_differs_from_kleene_on_tautologies() {
        let d = parse_adf("s(a). s(b). ac(a,or(b,neg(b))). ac(b,b).").unwrap();
        let bottom = Interpretation::all_unknown(d.statements().clone());
        assert_eq!(d.gamma(&bottom).unwrap().value(0), TruthValue::True);
        assert_eq!(
            d.gamma_kleene(&bottom).unwrap().value(0),
            TruthValue::Unknown
        );
    }

    #[test]
    fn model_examples() {
        let d = ex_adf();
        assert!(d
            .is_model(&Interpretation::all_unknown(d.statements().clone()))
            .unwrap());
        assert!(d.is_model(&lits(&d, "{a, ~b}")).unwrap());
        assert!(!d.is_model(&lits(&d, "{~a, ~b}")).unwrap());
    }

    #[test]
    fn universe_mismatch() {
        let d = ex_adf();
        let other = Interpretation::all_unknown(Arc::new(Universe::from_names(["a"])));
        assert_eq!(d.gamma(&other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn ex_adf_semantics() {
        let d = ex_adf();
        // with b false, c[e], d[¬c], e[¬d] has two 2-valued models of its own
        let two_valued = [
            "{a, c, e, ~b, ~d}",
            "{a, d, ~b, ~c, ~e}",
            "{b, d, ~a, ~c, ~e}",
        ];
        for v in two_valued {
            let v = lits(&d, v);
            assert!((0..d.len()).all(|s| {
                let f = d.acceptance(s);
                f.eval_classical(&|a| v.get(a) == Some(TruthValue::True))
                    == (v.value(s) == TruthValue::True)
            }));
        }
        let complete: BTreeSet<_> = d.complete_models(&lim()).unwrap().into_iter().collect();
        let mut expected = set(&d, &two_valued);
        expected.extend(set(&d, &["{}", "{a, ~b}", "{d, ~c, ~e}"]));
        assert_eq!(complete, expected);
        assert_eq!(d.grounded_model(), lits(&d, "{}"));
        let preferred: BTreeSet<_> = d.preferred_models(&lim()).unwrap().into_iter().collect();
        assert_eq!(preferred, set(&d, &two_valued));
        let stable: BTreeSet<_> = d.stable_models(&lim()).unwrap().into_iter().collect();
        assert_eq!(stable, set(&d, &two_valued));
    }

    #[test]
    fn ex_adf2_semantics() {
        let d = ex_adf2();
        let complete: BTreeSet<_> = d.complete_models(&lim()).unwrap().into_iter().collect();
        assert_eq!(complete, set(&d, &["{a, ~b}", "{b, ~a, ~e}", "{}"]));
        let preferred: BTreeSet<_> = d.preferred_models(&lim()).unwrap().into_iter().collect();
        assert_eq!(preferred, set(&d, &["{a, ~b}", "{b, ~a, ~e}"]));
        assert!(d.stable_models(&lim()).unwrap().is_empty());
    }

    #[test]
    fn small_stable_examples() {
        let d = parse_adf("s(a). ac(a,c(v)).").unwrap();
        assert_eq!(d.complete_models(&lim()).unwrap(), vec![lits(&d, "{a}")]);
        let d = parse_adf("s(a). ac(a,neg(a)).").unwrap();
        assert!(d.stable_models(&lim()).unwrap().is_empty());
        assert_eq!(d.preferred_models(&lim()).unwrap(), vec![lits(&d, "{}")]);
        let d = parse_adf("s(a). s(b). ac(a,neg(b)). ac(b,neg(a)).").unwrap();
        let stable: BTreeSet<_> = d.stable_models(&lim()).unwrap().into_iter().collect();
        assert_eq!(stable, set(&d, &["{a, ~b}", "{b, ~a}"]));
    }

    #[test]
    fn supported_loop_is_not_stable() {
        let d = parse_adf("s(a). ac(a,a).").unwrap();
        assert_eq!(d.stable_models(&lim()).unwrap(), vec![lits(&d, "{~a}")]);
        assert_eq!(d.complete_models(&lim()).unwrap().len(), 3);
    }

    #[test]
    fn reduct_examples() {
        let d = ex_adf();
        let r = d.reduct_brewka(&lits(&d, "{b, d, ~a, ~c, ~e}")).unwrap();
        assert_eq!(r.statements().names(), ["b", "d"]);
        assert_eq!(r.acceptance(0), &Formula::neg(Formula::Falsum));
        assert_eq!(r.acceptance(1), &Formula::neg(Formula::Falsum));

        let d = parse_adf("s(a). ac(a,c(v)).").unwrap();
        assert_eq!(d.reduct_brewka(&lits(&d, "{a}")).unwrap(), d);

        let d = parse_adf("s(a). s(b). ac(a,neg(b)). ac(b,c(f)).").unwrap();
        let r = d.reduct_brewka(&lits(&d, "{a, ~b}")).unwrap();
        assert_eq!(r.statements().names(), ["a"]);
        assert_eq!(r.acceptance(0), &Formula::neg(Formula::Falsum));

        assert_eq!(d.reduct_brewka(&lits(&d, "{a}")), Err(Error::NotTwoValued));
        assert_eq!(
            d.reduct_brewka(&lits(&d, "{~a, ~b}")),
            Err(Error::NotAModel)
        );
    }

    #[test]
    fn link_examples() {
        let fam = CSetFamily::new(&["b", "c"], &[&["b"], &[]]).unwrap();
        let d = Adf::from_families([
            ("a", fam),
            ("b", CSetFamily::new::<&str>(&[], &[&[]]).unwrap()),
            ("c", CSetFamily::new::<&str>(&[], &[&[]]).unwrap()),
        ])
        .unwrap();
        assert_eq!(d.classify_link("b", "a").unwrap(), LinkClass::Redundant);
        assert_eq!(d.classify_link("c", "a").unwrap(), LinkClass::Attacking);
        let d = parse_adf("s(a). s(b). ac(a,b). ac(b,c(v)).").unwrap();
        assert_eq!(d.classify_link("b", "a").unwrap(), LinkClass::Supporting);
        assert!(matches!(
            d.classify_link("a", "b"),
            Err(Error::NotALink { .. })
        ));
        let d = parse_adf(
            "s(a). s(b). s(c). ac(a,or(and(b,c),and(neg(b),neg(c)))). ac(b,c(v)). ac(c,c(v)).",
        )
        .unwrap();
        assert_eq!(d.classify_link("b", "a").unwrap(), LinkClass::Dependent);
    }

    #[test]
    fn kleene_reduct_examples() {
        let d = kleene_example();
        let r = d.kleene_reduct(&lits(&d, "{a, ~b, ~c}")).unwrap();
        assert_eq!(r.acceptance(0), &Formula::Verum);
        assert_eq!(r.acceptance(1), &Formula::Falsum);
        assert_eq!(r.acceptance(2), &Formula::Falsum);
        assert_eq!(d.kleene_reduct(&lits(&d, "{a, b, c}")).unwrap(), d);
        assert_eq!(d.kleene_reduct(&lits(&d, "{}")).unwrap(), d);
    }

    /// The reduct as literally stated: materialize the full DNF and keep the
    /// condition iff some disjunct is not Kleene-false.
    fn kleene_reduct_by_dnf(d: &Adf, v: &Interpretation) -> Vec<Formula> {
        (0..d.len())
            .map(|s| {
                let dnf = d.family(s).unwrap().to_formula();
                let disjuncts = match &dnf {
                    Formula::Or(ds) => ds.clone(),
                    Formula::Falsum => vec![],
                    other => vec![other.clone()],
                };
                if disjuncts
                    .iter()
                    .any(|g| g.eval_kleene(v).unwrap() != TruthValue::False)
                {
                    d.acceptance(s).clone()
                } else {
                    Formula::Falsum
                }
            })
            .collect()
    }

    #[test]
    fn kleene_reduct_matches_dnf_definition() {
        for d in [kleene_example(), ex_adf(), ex_adf2()] {
            for v in crate::logic::enumerate_interpretations(d.statements().clone(), 14).unwrap() {
                let r = d.kleene_reduct(&v).unwrap();
                let got: Vec<Formula> = (0..d.len()).map(|s| r.acceptance(s).clone()).collect();
                assert_eq!(got, kleene_reduct_by_dnf(&d, &v), "v = {v}");
            }
        }
    }

    #[test]
    fn kleene_example_semantics() {
        let d = kleene_example();
        let l = lim();
        let get = |k| -> BTreeSet<Interpretation> {
            d.kleene_semantics(k, &l).unwrap().into_iter().collect()
        };
        assert_eq!(
            get(KleeneKind::Complete),
            set(&d, &["{a, b, c}", "{a, ~b, ~c}", "{a}"])
        );
        assert_eq!(d.kleene_grounded(), lits(&d, "{a}"));
        assert_eq!(
            get(KleeneKind::PartialStable),
            set(&d, &["{a, ~b, ~c}", "{a}"])
        );
        assert_eq!(
            get(KleeneKind::Preferred),
            set(&d, &["{a, b, c}", "{a, ~b, ~c}"])
        );
        assert_eq!(get(KleeneKind::Regular), set(&d, &["{a, ~b, ~c}"]));
        assert_eq!(get(KleeneKind::Stable), set(&d, &["{a, ~b, ~c}"]));
        assert_eq!(
            get(KleeneKind::SemiStable),
            set(&d, &["{a, b, c}", "{a, ~b, ~c}"])
        );
        assert_eq!(get(KleeneKind::LStable), set(&d, &["{a, ~b, ~c}"]));
        // admissible includes every complete model and the bottom
        let adm = get(KleeneKind::Admissible);
        assert!(get(KleeneKind::Complete).is_subset(&adm));
        assert!(adm.contains(&lits(&d, "{}")));
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let d = ex_adf();
        let tight = Limits {
            max_statements: 4,
            ..Limits::default()
        };
        assert!(matches!(
            d.complete_models(&tight),
            Err(Error::Capacity { .. })
        ));
        // grounded has no bound
        assert_eq!(d.grounded_model(), lits(&d, "{}"));
    }

    #[test]
    fn text_round_trip() {
        let d = ex_adf2();
        assert_eq!(parse_adf(&d.to_text()).unwrap(), d);
    }
}
