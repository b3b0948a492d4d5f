//! ADFs in which every link is attacking.
//!
//! For such frameworks `C^t_s` is downward closed, so it is determined by its
//! `⊆`-maximal members and `φ_s` is equivalent to a disjunction of negative
//! literals. Kleene evaluation of that formula coincides with the consensus
//! operator, which makes the operator cheap to apply.

use std::sync::Arc;

use crate::adf::{attack_witness, Adf, CSetFamily, MAX_FAMILY_PARENTS};
use crate::error::{capacity, Error, Result};
use crate::logic::{
    filter_interpretations, filter_two_valued, unknown_minimal, Formula, IndexedFormula,
    Interpretation, Universe,
};
use crate::Limits;

/// An [`Adf`] that passed [`check_adfplus`], with its simplified conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdfPlus {
    adf: Adf,
    /// `C^t_s`, absent for statements too wide to materialize.
    families: Vec<Option<CSetFamily>>,
    simplified: Vec<Formula>,
    compiled: Vec<IndexedFormula>,
}

/// Accepts `adf` if every link is attacking, otherwise reports the first
/// violating link together with a witness `R`.
pub fn check_adfplus(adf: &Adf) -> Result<AdfPlus> {
    let mut families = Vec::with_capacity(adf.len());
    let mut simplified = Vec::with_capacity(adf.len());
    for s in 0..adf.len() {
        if adf.parents(s).len() > MAX_FAMILY_PARENTS {
            // antitone by construction
            let f = adf.acceptance(s);
            if !f.is_negative_dnf() {
                return Err(capacity(
                    format!("attack check for `{}`", adf.statements().name(s)),
                    format!("2^{} parent sets", adf.parents(s).len()),
                    MAX_FAMILY_PARENTS,
                ));
            }
            families.push(None);
            simplified.push(f.clone());
            continue;
        }
        let fam = adf.family(s)?;
        for bit in 0..fam.parents().len() {
            if let Some(w) = attack_witness(&fam, bit) {
                return Err(Error::NotAttacking {
                    from: fam.parents()[bit].clone(),
                    to: adf.statements().name(s).to_string(),
                    witness: fam.mask_names(w),
                });
            }
        }
        simplified.push(negative_dnf(&fam, &cmax_masks(&fam)));
        families.push(Some(fam));
    }
    let compiled = simplified
        .iter()
        .map(|f| f.compile(adf.statements()))
        .collect::<Result<_>>()?;
    Ok(AdfPlus {
        adf: adf.clone(),
        families,
        simplified,
        compiled,
    })
}

fn cmax_masks(fam: &CSetFamily) -> Vec<u64> {
    let n = fam.parents().len();
    let mut out: Vec<u64> = fam
        .masks()
        .iter()
        .copied()
        .filter(|&m| (0..n).all(|i| m >> i & 1 == 1 || !fam.accepts_mask(m | 1 << i)))
        .collect();
    // disjuncts with fewer negated parents first
    let full = fam.full_mask();
    out.sort_by_key(|&m| ((full & !m).count_ones(), full & !m));
    out
}

fn negative_dnf(fam: &CSetFamily, maximal: &[u64]) -> Formula {
    let n = fam.parents().len();
    Formula::or(maximal.iter().map(|&m| {
        Formula::and(
            (0..n)
                .filter(|i| m >> i & 1 == 0)
                .map(|i| Formula::neg_atom(fam.parents()[i].clone())),
        )
    }))
}

/// The `⊆`-maximal members of a downward-closed family.
pub fn cmax(fam: &CSetFamily) -> Result<CSetFamily> {
    if !fam.is_downward_closed() {
        return Err(Error::NotDownwardClosed);
    }
    Ok(CSetFamily::from_masks(
        fam.parents().to_vec(),
        cmax_masks(fam).into_iter().collect(),
    ))
}

impl AdfPlus {
    pub fn new(adf: &Adf) -> Result<AdfPlus> {
        check_adfplus(adf)
    }

    pub fn adf(&self) -> &Adf {
        &self.adf
    }

    pub fn into_adf(self) -> Adf {
        self.adf
    }

    pub fn statements(&self) -> &Arc<Universe> {
        self.adf.statements()
    }

    pub fn len(&self) -> usize {
        self.adf.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adf.is_empty()
    }

    /// `C^t_s`, if it was small enough to materialize.
    pub fn family(&self, s: usize) -> Option<&CSetFamily> {
        self.families[s].as_ref()
    }

    /// `C^max_s`, if `C^t_s` was materialized.
    pub fn cmax(&self, s: usize) -> Option<CSetFamily> {
        self.families[s].as_ref().map(|fam| {
            CSetFamily::from_masks(
                fam.parents().to_vec(),
                cmax_masks(fam).into_iter().collect(),
            )
        })
    }

    /// `⋁_{R ∈ C^max_s} ⋀_{b ∈ par(s) − R} ¬b`.
    pub fn simplified_formula(&self, s: usize) -> &Formula {
        &self.simplified[s]
    }

    /// Links `(r, s)` with `|{R ∈ C^t_s | r ∈ R}| = |C^t_s| / 2`.
    pub fn redundant_links_by_count(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 0..self.len() {
            let Some(fam) = &self.families[s] else {
                // each atom of a wide negative DNF matters unless it is absorbed;
                // these are never reported
                continue;
            };
            let total = fam.len();
            if total % 2 == 1 {
                continue;
            }
            for (bit, &r) in self.adf.parents(s).iter().enumerate() {
                let with = fam.masks().iter().filter(|&&m| m >> bit & 1 == 1).count();
                if 2 * with == total {
                    out.push((r, s));
                }
            }
        }
        out
    }

    /// The framework with redundant links removed, i.e. with every condition
    /// replaced by its simplified formula.
    pub fn without_redundant_links(&self) -> Result<AdfPlus> {
        let pairs = self
            .statements()
            .names()
            .iter()
            .cloned()
            .zip(self.simplified.iter().cloned());
        check_adfplus(&Adf::new(pairs)?)
    }

    fn check(&self, v: &Interpretation) -> Result<()> {
        if **v.universe() == **self.statements() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Pointwise Kleene evaluation of the simplified formulas.
    pub fn gamma_plus(&self, v: &Interpretation) -> Result<Interpretation> {
        self.check(v)?;
        Ok(self.gamma_plus_unchecked(v))
    }

    fn gamma_plus_unchecked(&self, v: &Interpretation) -> Interpretation {
        let values = self.compiled.iter().map(|f| f.eval3(v.values())).collect();
        Interpretation::from_values(self.statements().clone(), values).unwrap()
    }

    pub fn complete_models(&self, limits: &Limits) -> Result<Vec<Interpretation>> {
        filter_interpretations(self.statements(), limits.max_statements, |v| {
            self.gamma_plus_unchecked(v) == *v
        })
    }

    pub fn grounded_model(&self) -> Interpretation {
        crate::adf::least_fixpoint(
            Interpretation::all_unknown(self.statements().clone()),
            |v| self.gamma_plus_unchecked(v),
        )
    }

    /// Two-valued complete models.
    pub fn stable_models(&self, limits: &Limits) -> Result<Vec<Interpretation>> {
        filter_two_valued(self.statements(), limits.max_statements, |v| {
            self.gamma_plus_unchecked(v) == *v
        })
    }

    pub fn l_stable_models(&self, limits: &Limits) -> Result<Vec<Interpretation>> {
        Ok(unknown_minimal(&self.complete_models(limits)?))
    }

    pub fn to_text(&self) -> String {
        self.adf.to_text()
    }
}

/// Complete models of `adf` whose unknown set is `⊆`-minimal.
pub fn l_stable_models(adf: &Adf, limits: &Limits) -> Result<Vec<Interpretation>> {
    Ok(unknown_minimal(&adf.complete_models(limits)?))
}
