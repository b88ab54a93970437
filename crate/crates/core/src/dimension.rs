//! Upper and lower dimension of formulas.
//!
//! On a fixed model `K`, `M(φ,K)` is the family of maximal satisfying teams
//! and `N(φ,K)` the family of minimal falsifying teams. The upper dimension
//! bounds `|M(φ,K)|` over all models, the lower dimension bounds the size of
//! members of `N(φ,K)`. Both quantify over every model, so a report here gives
//! exact per-model families, lower bounds witnessed by the models checked, and
//! the compositional upper estimate.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::kripke::{KripkeModel, Team};
use crate::semantics::table::{Compiled, TeamSet};
use crate::syntax::Formula;

fn satisfying(model: &KripkeModel, f: &Formula) -> Result<TeamSet> {
    Compiled::new(f)?.evaluate(model)
}

/// Maximal members of a downward closed family: no single world can be added.
fn maximal(set: &TeamSet) -> BTreeSet<Team> {
    let n = set.num_worlds();
    set.masks()
        .filter(|&t| (0..n).all(|w| t >> w & 1 == 1 || !set.contains(t | 1 << w)))
        .map(|t| Team::from_mask(t as u64))
        .collect()
}

/// Minimal teams outside a downward closed family: removing any world lands inside.
fn minimal_outside(set: &TeamSet) -> BTreeSet<Team> {
    let n = set.num_worlds();
    (0..1usize << n)
        .filter(|&t| !set.contains(t))
        .filter(|&t| (0..n).all(|w| t >> w & 1 == 0 || set.contains(t & !(1 << w))))
        .map(|t| Team::from_mask(t as u64))
        .collect()
}

/// `M(φ,K)`
pub fn maximal_teams(model: &KripkeModel, f: &Formula) -> Result<BTreeSet<Team>> {
    Ok(maximal(&satisfying(model, f)?))
}

/// `N(φ,K)`
pub fn minimal_falsifying(model: &KripkeModel, f: &Formula) -> Result<BTreeSet<Team>> {
    Ok(minimal_outside(&satisfying(model, f)?))
}

/// Compositional bound on the upper dimension. Saturates at `u128::MAX`.
pub fn dim_upper_estimate(f: &Formula) -> u128 {
    match f {
        Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => 1,
        Formula::And(l, r) | Formula::Or(l, r) => {
            dim_upper_estimate(l).saturating_mul(dim_upper_estimate(r))
        }
        Formula::IDis(l, r) => dim_upper_estimate(l).saturating_add(dim_upper_estimate(r)),
        Formula::Dia(g) | Formula::Box(g) => dim_upper_estimate(g),
        Formula::Dep(args, _) => {
            let types = 1u32.checked_shl(args.len() as u32).unwrap_or(u32::MAX);
            1u128.checked_shl(types).unwrap_or(u128::MAX)
        }
    }
}

/// Whether truth on every team of `model` is decided by its subteams of size `≤ n`.
pub fn coherence_check(model: &KripkeModel, f: &Formula, n: usize) -> Result<bool> {
    let set = satisfying(model, f)?;
    let worlds = model.num_worlds();
    Ok((0..1usize << worlds).all(|t| {
        let mut small_ok = true;
        let mut s = t;
        loop {
            if s.count_ones() as usize <= n && !set.contains(s) {
                small_ok = false;
                break;
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & t;
        }
        set.contains(t) == small_ok
    }))
}

#[derive(Debug, Clone)]
pub struct ModelDimension {
    pub model_id: String,
    pub world_names: Vec<String>,
    /// `M(φ,K)`
    pub maximal_family: BTreeSet<Team>,
    /// `N(φ,K)`
    pub minimal_falsifying: BTreeSet<Team>,
}

impl ModelDimension {
    /// Largest minimal falsifying team, 0 if nothing falsifies.
    pub fn max_falsifier_size(&self) -> usize {
        self.minimal_falsifying
            .iter()
            .map(Team::len)
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub formula: Formula,
    pub per_model: Vec<ModelDimension>,
    pub estimate: u128,
    /// Largest `|M(φ,K)|` seen; a lower bound on the upper dimension.
    pub empirical_upper_dim: usize,
    /// Largest minimal falsifying team seen; a lower bound on the lower dimension.
    pub empirical_lower_dim: usize,
    pub occ_ivee: usize,
    pub symbol_size: usize,
}

/// Exact per-model families plus the syntactic estimate. Fails if a bound
/// that must hold is violated on some model.
pub fn dim_report(models: &[(String, KripkeModel)], f: &Formula) -> Result<DimensionReport> {
    let compiled = Compiled::new(f)?;
    let estimate = dim_upper_estimate(f);
    let mut per_model = Vec::with_capacity(models.len());
    for (id, model) in models {
        let set = compiled.evaluate(model)?;
        let record = ModelDimension {
            model_id: id.clone(),
            world_names: model.world_names().to_vec(),
            maximal_family: maximal(&set),
            minimal_falsifying: minimal_outside(&set),
        };
        let m = record.maximal_family.len();
        if m as u128 > estimate {
            return Err(Error::Invalid(format!(
                "model {id}: |M| = {m} exceeds the estimate {estimate}"
            )));
        }
        if record.max_falsifier_size() > m {
            return Err(Error::Invalid(format!(
                "model {id}: a minimal falsifying team is larger than |M| = {m}"
            )));
        }
        per_model.push(record);
    }
    Ok(DimensionReport {
        formula: f.clone(),
        empirical_upper_dim: per_model
            .iter()
            .map(|r| r.maximal_family.len())
            .max()
            .unwrap_or(0),
        empirical_lower_dim: per_model
            .iter()
            .map(|r| r.max_falsifier_size())
            .max()
            .unwrap_or(0),
        per_model,
        estimate,
        occ_ivee: f.occ_ivee(),
        symbol_size: f.symbol_size(),
    })
}

fn write_team(f: &mut fmt::Formatter<'_>, names: &[String], team: &Team) -> fmt::Result {
    let members: Vec<&str> = team.iter().map(|w| names[w.0].as_str()).collect();
    write!(f, "{{{}}}", members.join(","))
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "formula {}", self.formula)?;
        for r in &self.per_model {
            writeln!(f, "model {}", r.model_id)?;
            writeln!(f, "  |M|={}", r.maximal_family.len())?;
            for t in &r.maximal_family {
                f.write_str("  M ")?;
                write_team(f, &r.world_names, t)?;
                writeln!(f)?;
            }
            writeln!(
                f,
                "  |N|={} max|T|={}",
                r.minimal_falsifying.len(),
                r.max_falsifier_size()
            )?;
            for t in &r.minimal_falsifying {
                f.write_str("  N ")?;
                write_team(f, &r.world_names, t)?;
                writeln!(f)?;
            }
        }
        writeln!(
            f,
            "witnessed Dim>={} dim>={}",
            self.empirical_upper_dim, self.empirical_lower_dim
        )?;
        writeln!(
            f,
            "Dim<={} occ_ivee={} size={}",
            self.estimate, self.occ_ivee, self.symbol_size
        )
    }
}
