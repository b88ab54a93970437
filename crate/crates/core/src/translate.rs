//! Translations between ML(⊻) and (E)MDL.
//!
//! * [`emdl_to_mlidis`] expands every dependence atom into an intuitionistic
//!   disjunction over determination functions.
//! * [`to_normal_form`] pulls `⊻` to the top, giving `⊻Ψ` for a set `Ψ` of
//!   ML formulas.
//! * [`mlidis_to_emdl`] turns `⊻Ψ` into a conjunction of [`xi`] formulas,
//!   one per type-set with no member of `Ψ` common to all its types.
//!
//! A Ψ-type is the set of members of `Ψ` true at a world; a type-set is the
//! set of Ψ-types met by a team.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::kripke::{KripkeModel, Team, WorldId};
use crate::semantics::eval_point;
use crate::syntax::{Formula, Fragment};

/// Largest `|Ψ|` accepted by [`mlidis_to_emdl`].
pub const MAX_PSI: usize = 4;
/// Largest dependence atom arity accepted by [`emdl_to_mlidis`].
pub const MAX_DEP_ARITY: usize = 3;
/// Largest context for which [`xi`] enumerates all `2^|Ψ|` types.
pub const MAX_XI_CONTEXT: usize = 16;

/// An ordered set `Ψ` of pairwise distinct ML formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiContext {
    psi: Vec<Formula>,
}

impl PsiContext {
    /// Drops structural duplicates, keeping first occurrences.
    pub fn new(formulas: impl IntoIterator<Item = Formula>) -> Result<PsiContext> {
        let mut psi: Vec<Formula> = Vec::new();
        for f in formulas {
            if !f.is_ml() {
                return Err(Error::WrongFragment {
                    expected: Fragment::ML,
                    found: f.classify()?,
                });
            }
            if !psi.contains(&f) {
                psi.push(f);
            }
        }
        if psi.len() > 63 {
            return Err(Error::Guard {
                what: "context size",
                limit: 63,
                actual: psi.len(),
            });
        }
        Ok(PsiContext { psi })
    }

    pub fn members(&self) -> &[Formula] {
        &self.psi
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    /// All `2^|Ψ|` types, by increasing bitmask.
    pub fn all_types(&self) -> impl Iterator<Item = PsiType> {
        (0u64..1 << self.psi.len()).map(PsiType)
    }
}

/// `Γ ⊆ Ψ`, as a bitmask over context indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiType(pub u64);

impl PsiType {
    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> PsiType {
        PsiType(indices.into_iter().fold(0, |m, i| m | 1 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

/// `𝒯 ⊆ 𝒫(Ψ)`
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeSet {
    pub types: BTreeSet<PsiType>,
}

impl TypeSet {
    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn is_subset(&self, other: &TypeSet) -> bool {
        self.types.is_subset(&other.types)
    }

    /// Context indices present in every type (all of `Ψ` for an empty set).
    pub fn common_members(&self, ctx: &PsiContext) -> PsiType {
        let full = PsiType(if ctx.len() == 64 {
            !0
        } else {
            (1 << ctx.len()) - 1
        });
        PsiType(self.types.iter().fold(full.0, |m, t| m & t.0))
    }
}

impl FromIterator<PsiType> for TypeSet {
    fn from_iter<I: IntoIterator<Item = PsiType>>(iter: I) -> Self {
        TypeSet {
            types: iter.into_iter().collect(),
        }
    }
}

/// `type_Ψ(K,w)`
pub fn type_of(model: &KripkeModel, w: WorldId, ctx: &PsiContext) -> Result<PsiType> {
    let mut mask = 0;
    for (i, psi) in ctx.psi.iter().enumerate() {
        if eval_point(model, w, psi)? {
            mask |= 1 << i;
        }
    }
    Ok(PsiType(mask))
}

/// `tset_Ψ(K,T)`
pub fn tset(model: &KripkeModel, team: &Team, ctx: &PsiContext) -> Result<TypeSet> {
    team.iter().map(|w| type_of(model, w, ctx)).collect()
}

/// `θ_Γ`: true at a world exactly when its Ψ-type is `Γ`.
pub fn theta_gamma(gamma: PsiType, ctx: &PsiContext) -> Formula {
    let positive = ctx
        .psi
        .iter()
        .enumerate()
        .filter(|&(i, _)| gamma.contains(i))
        .map(|(_, f)| f.clone());
    let negative = ctx
        .psi
        .iter()
        .enumerate()
        .filter(|&(i, _)| !gamma.contains(i))
        .map(|(_, f)| f.negate_ml().expect("context members are ML"));
    Formula::conj_all(positive.chain(negative).collect::<Vec<_>>())
}

/// `γ`: every member of `Ψ` has constant truth value across the team.
pub fn gamma(ctx: &PsiContext) -> Formula {
    Formula::conj_all(ctx.psi.iter().map(|f| Formula::dep(vec![], f.clone())))
}

/// `γᵏ`: the team meets at most `k` Ψ-types.
pub fn gamma_k(ctx: &PsiContext, k: usize) -> Formula {
    let g = gamma(ctx);
    (0..k).fold(Formula::Bot, |acc, _| Formula::or(acc, g.clone()))
}

/// `ξ_𝒯`: the team's type-set does not include `𝒯`.
pub fn xi(tt: &TypeSet, ctx: &PsiContext) -> Result<Formula> {
    if tt.is_empty() {
        return Err(Error::Invalid("xi needs a non-empty type-set".into()));
    }
    if ctx.len() > MAX_XI_CONTEXT {
        return Err(Error::Guard {
            what: "context size for xi",
            limit: MAX_XI_CONTEXT,
            actual: ctx.len(),
        });
    }
    let outside: Vec<Formula> = ctx
        .all_types()
        .filter(|t| !tt.types.contains(t))
        .map(|t| theta_gamma(t, ctx))
        .collect();
    Ok(Formula::or(
        Formula::disj_all(outside),
        gamma_k(ctx, tt.len() - 1),
    ))
}

/// Non-empty type-sets whose types share no member of `Ψ`. These are the
/// type-sets of teams falsifying `⊻Ψ`.
///
/// The property is upward closed under `⊆`, so with `minimal_only` only the
/// `⊆`-minimal ones are returned; their `ξ` formulas imply all the others.
/// Ordered by size, then by type masks.
pub fn failing_type_sets(ctx: &PsiContext, minimal_only: bool) -> Result<Vec<TypeSet>> {
    if ctx.len() > MAX_PSI {
        return Err(Error::Guard {
            what: "|Psi|",
            limit: MAX_PSI,
            actual: ctx.len(),
        });
    }
    let types = 1usize << ctx.len();
    let full = (1u64 << ctx.len()) - 1;
    // a type-set is a bitmask over type masks
    let common = |set: u64| -> u64 {
        (0..types)
            .filter(|&t| set >> t & 1 == 1)
            .fold(full, |m, t| m & t as u64)
    };
    let failing = |set: u64| set != 0 && common(set) == 0;
    let mut out: Vec<u64> = (1u64..1 << types)
        .filter(|&set| failing(set))
        .filter(|&set| {
            !minimal_only
                || (0..types)
                    .filter(|&t| set >> t & 1 == 1)
                    .all(|t| !failing(set & !(1 << t)))
        })
        .collect();
    out.sort_by_key(|&set| (set.count_ones(), set));
    Ok(out
        .into_iter()
        .map(|set| {
            (0..types)
                .filter(|&t| set >> t & 1 == 1)
                .map(|t| PsiType(t as u64))
                .collect()
        })
        .collect())
}

/// `ML(⊻)` to `EMDL`: `⋀ ξ_𝒯` over the minimal failing type-sets of the
/// formula's normal form. `|Ψ|` is limited to [`MAX_PSI`].
pub fn mlidis_to_emdl(f: &Formula) -> Result<Formula> {
    let psi = to_normal_form(f)?;
    let ctx = PsiContext::new(psi)?;
    eta(&ctx, true)
}

/// `η` for `⊻Ψ`; with `minimal_only == false` every failing type-set
/// contributes a conjunct.
pub fn eta(ctx: &PsiContext, minimal_only: bool) -> Result<Formula> {
    let conjuncts = failing_type_sets(ctx, minimal_only)?
        .iter()
        .map(|tt| xi(tt, ctx))
        .collect::<Result<Vec<_>>>()?;
    Ok(Formula::conj_all(conjuncts))
}

/// `(E)MDL` to `ML(⊻)`: each `dep(ψ₁,…,ψₙ; θ)` becomes
/// `⊻_g ⋁_Γ (θ_Γ ∧ θ^{g(Γ)})` over all `g: 𝒫({ψᵢ}) → {⊤,⊥}`.
pub fn emdl_to_mlidis(f: &Formula) -> Result<Formula> {
    f.expect_fragment(&[Fragment::EMDL, Fragment::MDL, Fragment::ML])?;
    expand_deps(f)
}

fn expand_deps(f: &Formula) -> Result<Formula> {
    Ok(match f {
        Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => f.clone(),
        Formula::And(l, r) => Formula::and(expand_deps(l)?, expand_deps(r)?),
        Formula::Or(l, r) => Formula::or(expand_deps(l)?, expand_deps(r)?),
        Formula::IDis(l, r) => Formula::idis(expand_deps(l)?, expand_deps(r)?),
        Formula::Dia(g) => Formula::dia(expand_deps(g)?),
        Formula::Box(g) => Formula::boxed(expand_deps(g)?),
        Formula::Dep(args, target) => expand_dep(args, target)?,
    })
}

fn expand_dep(args: &[Formula], target: &Formula) -> Result<Formula> {
    let ctx = PsiContext::new(args.iter().cloned())?;
    if ctx.len() > MAX_DEP_ARITY {
        return Err(Error::Guard {
            what: "dependence atom arity",
            limit: MAX_DEP_ARITY,
            actual: ctx.len(),
        });
    }
    let negated = target.negate_ml()?;
    // types listed from the full type down to the empty one
    let types: Vec<PsiType> = ctx
        .all_types()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .collect();
    let thetas: Vec<Option<Formula>> = types
        .iter()
        .map(|&t| (!ctx.is_empty()).then(|| theta_gamma(t, &ctx)))
        .collect();
    let functions = 1u64 << types.len();
    let disjuncts = (0..functions).rev().map(|g| {
        Formula::disj_all(thetas.iter().enumerate().map(|(j, theta)| {
            let value = if g >> j & 1 == 1 {
                target.clone()
            } else {
                negated.clone()
            };
            match theta {
                Some(theta) => Formula::and(theta.clone(), value),
                None => value,
            }
        }))
    });
    Ok(Formula::idis_all(disjuncts.collect::<Vec<_>>()))
}

/// `Ψ` with `f ≡ ⊻Ψ`, obtained by distributing `∧`, `∨`, `◇`, `□` over `⊻`.
/// Structural duplicates are dropped, keeping first occurrences.
pub fn to_normal_form(f: &Formula) -> Result<Vec<Formula>> {
    f.expect_fragment(&[Fragment::MLIDis, Fragment::ML])?;
    Ok(normal_form(f))
}

fn normal_form(f: &Formula) -> Vec<Formula> {
    let out = match f {
        Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => vec![f.clone()],
        Formula::IDis(l, r) => {
            let mut v = normal_form(l);
            v.extend(normal_form(r));
            v
        }
        Formula::And(l, r) => product(&normal_form(l), &normal_form(r), Formula::and),
        Formula::Or(l, r) => product(&normal_form(l), &normal_form(r), Formula::or),
        Formula::Dia(g) => normal_form(g).into_iter().map(Formula::dia).collect(),
        Formula::Box(g) => normal_form(g).into_iter().map(Formula::boxed).collect(),
        Formula::Dep(..) => unreachable!("fragment checked"),
    };
    dedup(out)
}

fn product(l: &[Formula], r: &[Formula], join: fn(Formula, Formula) -> Formula) -> Vec<Formula> {
    l.iter()
        .flat_map(|x| r.iter().map(move |y| join(x.clone(), y.clone())))
        .collect()
}

fn dedup(v: Vec<Formula>) -> Vec<Formula> {
    let mut out: Vec<Formula> = Vec::with_capacity(v.len());
    for f in v {
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}
