//! Team semantics for ML, ML(⊻), MDL and EMDL, plus classical pointwise
//! semantics for ML.
//!
//! [`eval`] works top-down on one team and memoizes per (subformula, team).
//! [`extension`] computes the whole family of satisfying teams bottom-up with
//! [`table::Compiled`]; the two implementations share no code beyond the
//! model and are tested against each other.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::kripke::{self, KripkeModel, Team, WorldId};
use crate::syntax::{Formula, Fragment};

pub mod table;

/// Fails with [`Error::UnknownProposition`] if the formula mentions a symbol
/// outside the model's signature.
pub fn check_signature(model: &KripkeModel, f: &Formula) -> Result<()> {
    for p in f.propositions() {
        model.prop_id(&p)?;
    }
    Ok(())
}

/// `K,T ⊨ φ`
pub fn eval(model: &KripkeModel, team: &Team, f: &Formula) -> Result<bool> {
    Ok(Evaluator::new(model, f)?.eval(team))
}

/// Team evaluator for one formula over one model. Caches results across calls,
/// so repeated queries on related teams are cheap.
pub struct Evaluator<'a> {
    model: &'a KripkeModel,
    formula: &'a Formula,
    memo: HashMap<(usize, Team), bool>,
    point_memo: HashMap<(usize, WorldId), bool>,
}

fn key(f: &Formula) -> usize {
    f as *const Formula as usize
}

impl<'a> Evaluator<'a> {
    pub fn new(model: &'a KripkeModel, formula: &'a Formula) -> Result<Self> {
        check_signature(model, formula)?;
        formula.classify()?;
        Ok(Evaluator {
            model,
            formula,
            memo: HashMap::new(),
            point_memo: HashMap::new(),
        })
    }

    pub fn eval(&mut self, team: &Team) -> bool {
        self.sat(self.formula, team)
    }

    fn sat(&mut self, f: &'a Formula, team: &Team) -> bool {
        // literals are cheaper than a cache lookup
        match f {
            Formula::Top => return true,
            Formula::Bot => return team.is_empty(),
            Formula::Prop(p) => return team.is_subset(self.valuation(p)),
            Formula::NegProp(p) => return team.is_disjoint(self.valuation(p)),
            _ => {}
        }
        let k = (key(f), team.clone());
        if let Some(&v) = self.memo.get(&k) {
            return v;
        }
        let v = match f {
            Formula::And(l, r) => self.sat(l, team) && self.sat(r, team),
            Formula::IDis(l, r) => self.sat(l, team) || self.sat(r, team),
            Formula::Or(l, r) => {
                let members: Vec<WorldId> = team.iter().collect();
                self.split(l, r, &members, &mut Team::empty(), &mut Team::empty())
            }
            Formula::Dia(g) => kripke::choice_successor_teams(self.model, team)
                .iter()
                .any(|s| self.sat(g, s)),
            Formula::Box(g) => {
                let img = kripke::image(self.model, team);
                self.sat(g, &img)
            }
            Formula::Dep(args, target) => self.dependence(args, target, team),
            Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => unreachable!(),
        };
        self.memo.insert(k, v);
        v
    }

    /// Tries every partition of `members` into a left and right part.
    fn split(
        &mut self,
        l: &'a Formula,
        r: &'a Formula,
        members: &[WorldId],
        left: &mut Team,
        right: &mut Team,
    ) -> bool {
        let Some((&w, rest)) = members.split_first() else {
            return self.sat(l, left) && self.sat(r, right);
        };
        left.insert(w);
        let found = self.split(l, r, rest, left, right);
        left.remove(w);
        if found {
            return true;
        }
        right.insert(w);
        let found = self.split(l, r, rest, left, right);
        right.remove(w);
        found
    }

    fn dependence(&mut self, args: &'a [Formula], target: &'a Formula, team: &Team) -> bool {
        let mut seen: HashMap<Vec<bool>, bool> = HashMap::new();
        for w in team.iter() {
            let profile: Vec<bool> = args.iter().map(|a| self.point(a, w)).collect();
            let value = self.point(target, w);
            if *seen.entry(profile).or_insert(value) != value {
                return false;
            }
        }
        true
    }

    fn point(&mut self, f: &'a Formula, w: WorldId) -> bool {
        let k = (key(f), w);
        if let Some(&v) = self.point_memo.get(&k) {
            return v;
        }
        let v = point_sat(self.model, w, f);
        self.point_memo.insert(k, v);
        v
    }

    fn valuation(&self, p: &str) -> &'a Team {
        let model: &'a KripkeModel = self.model;
        model.valuation(model.prop_id(p).expect("signature checked"))
    }
}

/// Classical satisfaction `K,w ⊨ φ` for ML formulas.
pub fn eval_point(model: &KripkeModel, w: WorldId, f: &Formula) -> Result<bool> {
    if !f.is_ml() {
        return Err(Error::WrongFragment {
            expected: Fragment::ML,
            found: f.classify()?,
        });
    }
    check_signature(model, f)?;
    if w.0 >= model.num_worlds() {
        return Err(Error::UnknownWorld(format!("#{}", w.0)));
    }
    Ok(point_sat(model, w, f))
}

/// The worlds where an ML formula holds classically.
pub fn truth_set(model: &KripkeModel, f: &Formula) -> Result<Team> {
    if !f.is_ml() {
        return Err(Error::WrongFragment {
            expected: Fragment::ML,
            found: f.classify()?,
        });
    }
    check_signature(model, f)?;
    let mut out = Team::empty();
    for w in model.worlds() {
        if point_sat(model, w, f) {
            out.insert(w);
        }
    }
    Ok(out)
}

fn point_sat(model: &KripkeModel, w: WorldId, f: &Formula) -> bool {
    match f {
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Prop(p) => model.holds(model.prop_id(p).expect("signature checked"), w),
        Formula::NegProp(p) => !model.holds(model.prop_id(p).expect("signature checked"), w),
        Formula::And(l, r) => point_sat(model, w, l) && point_sat(model, w, r),
        Formula::Or(l, r) => point_sat(model, w, l) || point_sat(model, w, r),
        Formula::Dia(g) => model.successors(w).iter().any(|&v| point_sat(model, v, g)),
        Formula::Box(g) => model.successors(w).iter().all(|&v| point_sat(model, v, g)),
        Formula::IDis(..) | Formula::Dep(..) => {
            unreachable!("pointwise evaluation of non-ML formula")
        }
    }
}

/// `‖φ‖ᴷ`: the teams of a model satisfying a formula.
#[derive(Debug, Clone)]
pub struct Extension<'a> {
    pub model: &'a KripkeModel,
    pub satisfying: BTreeSet<Team>,
}

impl Extension<'_> {
    pub fn contains(&self, team: &Team) -> bool {
        self.satisfying.contains(team)
    }

    pub fn len(&self) -> usize {
        self.satisfying.len()
    }

    pub fn is_empty(&self) -> bool {
        self.satisfying.is_empty()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.satisfying.iter().all(|t| {
            t.iter().all(|w| {
                let mut s = t.clone();
                s.remove(w);
                self.satisfying.contains(&s)
            })
        })
    }
}

/// Exact `‖φ‖ᴷ`, subject to the world-count enumeration guard.
pub fn extension<'a>(model: &'a KripkeModel, f: &Formula) -> Result<Extension<'a>> {
    let set = table::Compiled::new(f)?.evaluate(model)?;
    Ok(Extension {
        model,
        satisfying: set.teams().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::syntax::parse;

    fn ev(m: &KripkeModel, ws: &[&str], f: &str) -> bool {
        eval(m, &m.team(ws).unwrap(), &parse(f).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let m1 = fixtures::m1();
        let m2 = fixtures::m2();
        assert!(ev(&m1, &["a"], "p"));
        assert!(ev(&m1, &["a", "b"], "p | q"));
        assert!(!ev(&m1, &["a", "b"], "p"));
        assert!(!ev(&m2, &["a", "b"], "dep(p; q)"));
        assert!(ev(&m2, &["a", "b"], "dep(q; p)"));
        assert!(!ev(&m1, &["b"], "<>q"));
        assert!(ev(&m1, &["a"], "<>q"));
        assert!(ev(&m1, &["b"], "[]F"));
        assert!(
            ev(&m1, &["a", "b"], "p \\/ q \\/ ~p & T")
                == ev(&m1, &["a", "b"], "p \\/ (q \\/ (~p & T))")
        );
    }

    #[test]
    fn empty_team_satisfies_fixture_formulas() {
        let m1 = fixtures::m1();
        for f in [
            "p",
            "~q",
            "F",
            "T",
            "p | q",
            "<>q",
            "[]F",
            "dep(p; q)",
            "p \\/ q",
            "<>F",
            "dep(<>q; []p)",
        ] {
            assert!(ev(&m1, &[], f), "{f}");
        }
    }

    #[test]
    fn pointwise() {
        let m1 = fixtures::m1();
        let a = m1.world("a").unwrap();
        let b = m1.world("b").unwrap();
        assert!(eval_point(&m1, a, &parse("<>q").unwrap()).unwrap());
        assert!(!eval_point(&m1, b, &parse("<>q").unwrap()).unwrap());
        assert!(eval_point(&m1, a, &parse("~q").unwrap()).unwrap());
        assert!(eval_point(&m1, a, &parse("dep(; q)").unwrap()).is_err());
        assert_eq!(
            truth_set(&m1, &parse("<>q | q").unwrap()).unwrap(),
            m1.full_team()
        );
        assert_eq!(
            truth_set(&m1, &parse("[]F").unwrap()).unwrap(),
            Team::singleton(b)
        );
        assert!(truth_set(&m1, &parse("p \\/ q").unwrap()).is_err());
    }

    #[test]
    fn unknown_proposition() {
        let m1 = fixtures::m1();
        assert!(matches!(
            eval(&m1, &Team::empty(), &parse("r").unwrap()),
            Err(Error::UnknownProposition(p)) if p == "r"
        ));
    }

    #[test]
    fn extensions() {
        let m1 = fixtures::m1();
        let ext = extension(&m1, &parse("p").unwrap()).unwrap();
        let want: BTreeSet<Team> = [Team::empty(), m1.team(&["a"]).unwrap()]
            .into_iter()
            .collect();
        assert_eq!(ext.satisfying, want);

        let m2 = fixtures::m2();
        let ext = extension(&m2, &parse("dep(p; q)").unwrap()).unwrap();
        let all: BTreeSet<Team> = kripke::all_teams(&m2).unwrap().collect();
        let mut want = all.clone();
        want.remove(&m2.full_team());
        assert_eq!(ext.satisfying, want);

        let full2 = fixtures::full2();
        let ext = extension(&full2, &Formula::Bot).unwrap();
        assert_eq!(ext.satisfying, [Team::empty()].into_iter().collect());
    }

    #[test]
    fn extension_matches_team_by_team_eval() {
        let models = [
            fixtures::m1(),
            fixtures::m2(),
            fixtures::m3(),
            fixtures::m1dup(),
        ];
        for src in [
            "p | q",
            "<>(p \\/ q)",
            "[]dep(p; q)",
            "<>p | <>q",
            "dep(<>p; q) | p",
            "(p \\/ q) & <>T",
        ] {
            let f = parse(src).unwrap();
            for m in &models {
                let ext = extension(m, &f).unwrap();
                for t in kripke::all_teams(m).unwrap() {
                    assert_eq!(ext.contains(&t), eval(m, &t, &f).unwrap(), "{src} on {t:?}");
                }
            }
        }
    }
}
