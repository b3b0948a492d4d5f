//! Three-valued truth kernel shared by frameworks and programs.
//!
//! Truth values follow Kleene's strong logic. Interpretations are total maps
//! from an ordered atom [`Universe`] to [`TruthValue`]s; the universe order is
//! the first-appearance order of the input, and every enumeration in the crate
//! is deterministic with respect to it.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{capacity, Error, Result};

/// One of `t`, `f`, `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruthValue {
    True,
    False,
    Unknown,
}

use TruthValue::{False, True, Unknown};

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [Unknown, False, True];

    /// `u <_i t`, `u <_i f`; `t` and `f` are incomparable.
    pub fn leq_info(self, other: TruthValue) -> bool {
        self == Unknown || self == other
    }

    /// `f <_t u <_t t`.
    pub fn leq_truth(self, other: TruthValue) -> bool {
        self.truth_rank() <= other.truth_rank()
    }

    fn truth_rank(self) -> u8 {
        match self {
            False => 0,
            Unknown => 1,
            True => 2,
        }
    }

    /// Consensus: agrees on `t` or `f`, `u` otherwise.
    pub fn meet(self, other: TruthValue) -> TruthValue {
        if self == other {
            self
        } else {
            Unknown
        }
    }

    pub fn is_decided(self) -> bool {
        self != Unknown
    }

    /// Digit used by ternary encodings: `u = 0`, `f = 1`, `t = 2`.
    pub fn digit(self) -> u8 {
        match self {
            Unknown => 0,
            False => 1,
            True => 2,
        }
    }

    pub fn from_digit(d: u8) -> TruthValue {
        match d % 3 {
            0 => Unknown,
            1 => False,
            _ => True,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            True => "t",
            False => "f",
            Unknown => "u",
        }
    }

    pub fn from_symbol(s: &str) -> Option<TruthValue> {
        match s {
            "t" => Some(True),
            "f" => Some(False),
            "u" => Some(Unknown),
            _ => None,
        }
    }

    /// Kleene conjunction over an iterator; empty conjunction is `t`.
    pub fn all(values: impl IntoIterator<Item = TruthValue>) -> TruthValue {
        let mut acc = True;
        for v in values {
            match v {
                False => return False,
                Unknown => acc = Unknown,
                True => {}
            }
        }
        acc
    }

    /// Kleene disjunction over an iterator; empty disjunction is `f`.
    pub fn any(values: impl IntoIterator<Item = TruthValue>) -> TruthValue {
        let mut acc = False;
        for v in values {
            match v {
                True => return True,
                Unknown => acc = Unknown,
                False => {}
            }
        }
        acc
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> Self {
        if b {
            True
        } else {
            False
        }
    }
}

impl std::ops::Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        match self {
            True => False,
            False => True,
            Unknown => Unknown,
        }
    }
}

impl std::ops::BitAnd for TruthValue {
    type Output = TruthValue;

    fn bitand(self, rhs: TruthValue) -> TruthValue {
        TruthValue::all([self, rhs])
    }
}

impl std::ops::BitOr for TruthValue {
    type Output = TruthValue;

    fn bitor(self, rhs: TruthValue) -> TruthValue {
        TruthValue::any([self, rhs])
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Returns true if `name` is a legal atom name: `[a-z][A-Za-z0-9_]*`.
pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An ordered, duplicate-free set of atom names.
#[derive(Debug, Clone, Default)]
pub struct Universe {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Universe {}

impl Universe {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a universe keeping the first occurrence of every name.
    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut u = Universe::new();
        for n in names {
            u.insert(n.into());
        }
        u
    }

    /// Inserts `name` if absent and returns its index.
    pub fn insert(&mut self, name: String) -> usize {
        if let Some(&i) = self.index.get(&name) {
            return i;
        }
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        i
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Same atoms, regardless of order.
    pub fn same_atoms(&self, other: &Universe) -> bool {
        self.len() == other.len() && self.names.iter().all(|n| other.contains(n))
    }
}

/// A total three-valued assignment over a universe.
#[derive(Debug, Clone)]
pub struct Interpretation {
    universe: Arc<Universe>,
    values: Vec<TruthValue>,
}

impl PartialEq for Interpretation {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
            && (Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe)
    }
}

impl Eq for Interpretation {}

impl std::hash::Hash for Interpretation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by ternary code, the first universe atom being the least
/// significant digit. This is also the enumeration order.
impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.values.iter().rev().map(|v| v.digit());
        let b = other.values.iter().rev().map(|v| v.digit());
        self.values
            .len()
            .cmp(&other.values.len())
            .then_with(|| a.cmp(b))
    }
}

impl Interpretation {
    pub fn all_unknown(universe: Arc<Universe>) -> Self {
        Self::constant(universe, Unknown)
    }

    pub fn constant(universe: Arc<Universe>, value: TruthValue) -> Self {
        let values = vec![value; universe.len()];
        Interpretation { universe, values }
    }

    pub fn from_values(universe: Arc<Universe>, values: Vec<TruthValue>) -> Result<Self> {
        if values.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(Interpretation { universe, values })
    }

    /// Parses the set rendering `{a, ~b}`: listed atoms are `t`, negated ones
    /// `f`, everything else `u`. Accepts `~`, `-`, `¬` and `!` for negation;
    /// the braces are optional.
    pub fn from_literals(universe: Arc<Universe>, text: &str) -> Result<Self> {
        let mut v = Self::all_unknown(universe);
        let body = text.trim().trim_start_matches('{').trim_end_matches('}');
        for lit in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = match lit.strip_prefix(['~', '-', '!', '¬']) {
                Some(rest) => (rest.trim(), False),
                None => (lit, True),
            };
            let i = v.universe.require(name)?;
            if v.values[i] != Unknown && v.values[i] != value {
                return Err(Error::Invalid(format!(
                    "atom `{name}` is both true and false"
                )));
            }
            v.values[i] = value;
        }
        Ok(v)
    }

    /// The `index`-th interpretation of the ternary enumeration order.
    pub fn from_code(universe: Arc<Universe>, mut index: u64) -> Self {
        let mut values = Vec::with_capacity(universe.len());
        for _ in 0..universe.len() {
            values.push(TruthValue::from_digit((index % 3) as u8));
            index /= 3;
        }
        Interpretation { universe, values }
    }

    /// Two-valued interpretation from a bit mask (bit `i` set means atom `i` is `t`).
    pub fn from_mask(universe: Arc<Universe>, mask: u64) -> Self {
        let values = (0..universe.len())
            .map(|i| TruthValue::from(mask >> i & 1 == 1))
            .collect();
        Interpretation { universe, values }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: usize) -> TruthValue {
        self.values[i]
    }

    pub fn get(&self, name: &str) -> Option<TruthValue> {
        self.universe.index_of(name).map(|i| self.values[i])
    }

    pub fn set(&mut self, i: usize, value: TruthValue) {
        self.values[i] = value;
    }

    pub fn with(mut self, i: usize, value: TruthValue) -> Self {
        self.values[i] = value;
        self
    }

    pub fn is_two_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_decided())
    }

    /// Indices of atoms assigned `u`.
    pub fn unknowns(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&i| self.values[i] == Unknown)
            .collect()
    }

    fn check_universe(&self, other: &Interpretation) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Pointwise information order.
    pub fn leq_info(&self, other: &Interpretation) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self.leq_info_unchecked(other))
    }

    pub(crate) fn leq_info_unchecked(&self, other: &Interpretation) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.leq_info(*b))
    }

    /// Pointwise truth order.
    pub fn leq_truth(&self, other: &Interpretation) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.leq_truth(*b)))
    }

    /// Pointwise consensus (the `≤_i` greatest lower bound).
    pub fn meet(&self, other: &Interpretation) -> Result<Interpretation> {
        self.check_universe(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.meet(*b))
            .collect();
        Ok(Interpretation {
            universe: self.universe.clone(),
            values,
        })
    }

    /// All two-valued completions over the atoms in `relevant` that are `u`
    /// here; other atoms are left untouched. Completions are produced by
    /// binary counting over the unknown atoms in universe order, the first
    /// unknown atom being the least significant bit (`0 = f`, `1 = t`).
    pub fn two_valued_extensions(&self, relevant: &[&str]) -> Result<Vec<Interpretation>> {
        let mut idx = relevant
            .iter()
            .map(|n| self.universe.require(n))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        let open: Vec<usize> = idx
            .into_iter()
            .filter(|&i| self.values[i] == Unknown)
            .collect();
        if open.len() >= 63 {
            return Err(capacity(
                "two-valued extensions",
                format!("2^{}", open.len()),
                62,
            ));
        }
        Ok((0..1u64 << open.len())
            .map(|bits| {
                let mut w = self.clone();
                for (k, &i) in open.iter().enumerate() {
                    w.values[i] = TruthValue::from(bits >> k & 1 == 1);
                }
                w
            })
            .collect())
    }

    /// Atoms with value `u`.
    pub fn unknown_names(&self) -> Vec<&str> {
        self.unknowns()
            .into_iter()
            .map(|i| self.universe.name(i))
            .collect()
    }

    /// Copies values onto `target`, which must contain every atom of this
    /// universe; atoms of `target` not present here get `default`.
    pub fn project(&self, target: &Arc<Universe>, default: TruthValue) -> Result<Interpretation> {
        let mut out = Interpretation::constant(target.clone(), default);
        for (i, name) in self.universe.names().iter().enumerate() {
            let j = target.require(name)?;
            out.values[j] = self.values[i];
        }
        Ok(out)
    }

    /// Set rendering: true atoms, then negated false atoms, each in universe order.
    pub fn to_set_string(&self, unicode: bool) -> String {
        let neg = if unicode { "¬" } else { "~" };
        let mut parts: Vec<String> = Vec::new();
        for (i, v) in self.values.iter().enumerate() {
            if *v == True {
                parts.push(self.universe.name(i).to_string());
            }
        }
        for (i, v) in self.values.iter().enumerate() {
            if *v == False {
                parts.push(format!("{neg}{}", self.universe.name(i)));
            }
        }
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_set_string(false))
    }
}

/// Number of interpretations over `n` atoms, or `None` if it does not fit in `u64`.
pub fn interpretation_count(n: usize) -> Option<u64> {
    3u64.checked_pow(u32::try_from(n).ok()?)
}

/// Every interpretation over `universe`, in ternary counting order (first
/// atom least significant, digit order `u < f < t`).
pub fn enumerate_interpretations(
    universe: Arc<Universe>,
    max_atoms: usize,
) -> Result<impl Iterator<Item = Interpretation>> {
    let n = universe.len();
    let total = match interpretation_count(n) {
        Some(t) if n <= max_atoms => t,
        _ => {
            return Err(capacity(
                "interpretation enumeration",
                format!("3^{n}"),
                max_atoms,
            ))
        }
    };
    Ok((0..total).map(move |code| Interpretation::from_code(universe.clone(), code)))
}

/// Parallel filter over the full ternary enumeration; results come back in
/// enumeration order.
pub(crate) fn filter_interpretations<F>(
    universe: &Arc<Universe>,
    max_atoms: usize,
    keep: F,
) -> Result<Vec<Interpretation>>
where
    F: Fn(&Interpretation) -> bool + Sync + Send,
{
    use rayon::prelude::*;
    let n = universe.len();
    let total = match interpretation_count(n) {
        Some(t) if n <= max_atoms => t,
        _ => {
            return Err(capacity(
                "interpretation enumeration",
                format!("3^{n}"),
                max_atoms,
            ))
        }
    };
    Ok((0..total)
        .into_par_iter()
        .filter_map(|code| {
            let v = Interpretation::from_code(universe.clone(), code);
            keep(&v).then_some(v)
        })
        .collect())
}

/// Like [`filter_interpretations`] but over the `2^n` two-valued interpretations
/// only, returned in canonical order.
pub(crate) fn filter_two_valued<F>(
    universe: &Arc<Universe>,
    max_atoms: usize,
    keep: F,
) -> Result<Vec<Interpretation>>
where
    F: Fn(&Interpretation) -> bool + Sync + Send,
{
    use rayon::prelude::*;
    let n = universe.len();
    if n > max_atoms || n >= 64 {
        return Err(capacity(
            "two-valued enumeration",
            format!("2^{n}"),
            max_atoms,
        ));
    }
    let mut out: Vec<Interpretation> = (0..1u64 << n)
        .into_par_iter()
        .filter_map(|mask| {
            let v = Interpretation::from_mask(universe.clone(), mask);
            keep(&v).then_some(v)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The `≤_i`-maximal members of `models` (all over one universe).
pub fn info_maximal(models: &[Interpretation]) -> Vec<Interpretation> {
    models
        .iter()
        .filter(|v| !models.iter().any(|w| w != *v && v.leq_info_unchecked(w)))
        .cloned()
        .collect()
}

/// The `≤_i`-least member of `models`, if one exists.
pub fn info_least(models: &[Interpretation]) -> Option<Interpretation> {
    models
        .iter()
        .find(|v| models.iter().all(|w| v.leq_info_unchecked(w)))
        .cloned()
}

/// Members whose set of unknown atoms is `⊆`-minimal among `models`.
pub fn unknown_minimal(models: &[Interpretation]) -> Vec<Interpretation> {
    let is_sub = |a: &Interpretation, b: &Interpretation| {
        a.values()
            .iter()
            .zip(b.values())
            .all(|(x, y)| x.is_decided() || !y.is_decided())
    };
    models
        .iter()
        .filter(|v| !models.iter().any(|w| is_sub(w, v) && !is_sub(v, w)))
        .cloned()
        .collect()
}

/// Propositional formula with n-ary connectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Verum,
    Falsum,
    Neg(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Box::new(f))
    }

    pub fn neg_atom(name: impl Into<String>) -> Formula {
        Formula::neg(Formula::atom(name))
    }

    /// Conjunction; empty is `Verum`, a singleton is returned as is.
    pub fn and(items: impl IntoIterator<Item = Formula>) -> Formula {
        let mut items: Vec<Formula> = items.into_iter().collect();
        match items.len() {
            0 => Formula::Verum,
            1 => items.pop().unwrap(),
            _ => Formula::And(items),
        }
    }

    /// Disjunction; empty is `Falsum`, a singleton is returned as is.
    pub fn or(items: impl IntoIterator<Item = Formula>) -> Formula {
        let mut items: Vec<Formula> = items.into_iter().collect();
        match items.len() {
            0 => Formula::Falsum,
            1 => items.pop().unwrap(),
            _ => Formula::Or(items),
        }
    }

    /// Atoms in first-appearance order.
    pub fn atoms(&self) -> Vec<String> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.visit_atoms(&mut |a| {
            if seen.insert(a.to_string()) {
                out.push(a.to_string());
            }
        });
        out
    }

    fn visit_atoms(&self, f: &mut impl FnMut(&str)) {
        match self {
            Formula::Atom(a) => f(a),
            Formula::Verum | Formula::Falsum => {}
            Formula::Neg(g) => g.visit_atoms(f),
            Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| g.visit_atoms(f)),
        }
    }

    /// Strong Kleene evaluation.
    pub fn eval_kleene(&self, v: &Interpretation) -> Result<TruthValue> {
        Ok(match self {
            Formula::Atom(a) => v.get(a).ok_or_else(|| Error::UnknownAtom(a.clone()))?,
            Formula::Verum => True,
            Formula::Falsum => False,
            Formula::Neg(g) => !g.eval_kleene(v)?,
            Formula::And(gs) => {
                let vals = gs
                    .iter()
                    .map(|g| g.eval_kleene(v))
                    .collect::<Result<Vec<_>>>()?;
                TruthValue::all(vals)
            }
            Formula::Or(gs) => {
                let vals = gs
                    .iter()
                    .map(|g| g.eval_kleene(v))
                    .collect::<Result<Vec<_>>>()?;
                TruthValue::any(vals)
            }
        })
    }

    /// Classical evaluation where `holds(a)` gives the value of atom `a`.
    pub fn eval_classical(&self, holds: &impl Fn(&str) -> bool) -> bool {
        match self {
            Formula::Atom(a) => holds(a),
            Formula::Verum => true,
            Formula::Falsum => false,
            Formula::Neg(g) => !g.eval_classical(holds),
            Formula::And(gs) => gs.iter().all(|g| g.eval_classical(holds)),
            Formula::Or(gs) => gs.iter().any(|g| g.eval_classical(holds)),
        }
    }

    /// Replaces atoms for which `map` returns a formula.
    pub fn substitute(&self, map: &impl Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Atom(a) => map(a).unwrap_or_else(|| self.clone()),
            Formula::Verum | Formula::Falsum => self.clone(),
            Formula::Neg(g) => Formula::neg(g.substitute(map)),
            Formula::And(gs) => Formula::And(gs.iter().map(|g| g.substitute(map)).collect()),
            Formula::Or(gs) => Formula::Or(gs.iter().map(|g| g.substitute(map)).collect()),
        }
    }

    /// Resolves atom names against `universe`.
    pub fn compile(&self, universe: &Universe) -> Result<IndexedFormula> {
        Ok(match self {
            Formula::Atom(a) => IndexedFormula::Atom(universe.require(a)?),
            Formula::Verum => IndexedFormula::Verum,
            Formula::Falsum => IndexedFormula::Falsum,
            Formula::Neg(g) => IndexedFormula::Neg(Box::new(g.compile(universe)?)),
            Formula::And(gs) => IndexedFormula::And(
                gs.iter()
                    .map(|g| g.compile(universe))
                    .collect::<Result<_>>()?,
            ),
            Formula::Or(gs) => IndexedFormula::Or(
                gs.iter()
                    .map(|g| g.compile(universe))
                    .collect::<Result<_>>()?,
            ),
        })
    }

    /// True if the formula is a disjunction of conjunctions of negated atoms
    /// (including `Verum`, `Falsum` and single literals).
    pub fn is_negative_dnf(&self) -> bool {
        fn neg_lit(f: &Formula) -> bool {
            matches!(f, Formula::Neg(g) if matches!(**g, Formula::Atom(_)))
        }
        fn conj(f: &Formula) -> bool {
            match f {
                Formula::Verum => true,
                Formula::And(gs) => gs.iter().all(neg_lit),
                other => neg_lit(other),
            }
        }
        match self {
            Formula::Falsum => true,
            Formula::Or(gs) => gs.iter().all(conj),
            other => conj(other),
        }
    }

    /// Renders with the given negation symbol in infix notation, for messages.
    pub fn to_infix(&self, unicode: bool) -> String {
        let (neg, and, or, top, bot) = if unicode {
            ("¬", " ∧ ", " ∨ ", "⊤", "⊥")
        } else {
            ("~", " & ", " | ", "T", "F")
        };
        fn go(f: &Formula, s: &mut String, sym: (&str, &str, &str, &str, &str), nested: bool) {
            match f {
                Formula::Atom(a) => s.push_str(a),
                Formula::Verum => s.push_str(sym.3),
                Formula::Falsum => s.push_str(sym.4),
                Formula::Neg(g) => {
                    s.push_str(sym.0);
                    go(g, s, sym, true);
                }
                Formula::And(gs) | Formula::Or(gs) => {
                    let sep = if matches!(f, Formula::And(_)) {
                        sym.1
                    } else {
                        sym.2
                    };
                    if nested {
                        s.push('(');
                    }
                    for (i, g) in gs.iter().enumerate() {
                        if i > 0 {
                            s.push_str(sep);
                        }
                        go(g, s, sym, true);
                    }
                    if nested {
                        s.push(')');
                    }
                }
            }
        }
        let mut s = String::new();
        go(self, &mut s, (neg, and, or, top, bot), false);
        s
    }
}

/// File syntax: `c(v)`, `c(f)`, `neg(F)`, `and(F,...)`, `or(F,...)`, atoms.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => f.write_str(a),
            Formula::Verum => f.write_str("c(v)"),
            Formula::Falsum => f.write_str("c(f)"),
            Formula::Neg(g) => write!(f, "neg({g})"),
            Formula::And(gs) | Formula::Or(gs) => {
                f.write_str(if matches!(self, Formula::And(_)) {
                    "and("
                } else {
                    "or("
                })?;
                for (i, g) in gs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        crate::syntax::parse_formula(s)
    }
}

/// A formula whose atoms are universe indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexedFormula {
    Atom(usize),
    Verum,
    Falsum,
    Neg(Box<IndexedFormula>),
    And(Vec<IndexedFormula>),
    Or(Vec<IndexedFormula>),
}

impl IndexedFormula {
    pub fn eval3(&self, values: &[TruthValue]) -> TruthValue {
        match self {
            IndexedFormula::Atom(i) => values[*i],
            IndexedFormula::Verum => True,
            IndexedFormula::Falsum => False,
            IndexedFormula::Neg(g) => !g.eval3(values),
            IndexedFormula::And(gs) => TruthValue::all(gs.iter().map(|g| g.eval3(values))),
            IndexedFormula::Or(gs) => TruthValue::any(gs.iter().map(|g| g.eval3(values))),
        }
    }

    /// Classical evaluation; `u` atoms are never consulted by callers.
    pub fn eval2(&self, holds: &impl Fn(usize) -> bool) -> bool {
        match self {
            IndexedFormula::Atom(i) => holds(*i),
            IndexedFormula::Verum => true,
            IndexedFormula::Falsum => false,
            IndexedFormula::Neg(g) => !g.eval2(holds),
            IndexedFormula::And(gs) => gs.iter().all(|g| g.eval2(holds)),
            IndexedFormula::Or(gs) => gs.iter().any(|g| g.eval2(holds)),
        }
    }
}
