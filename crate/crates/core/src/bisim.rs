//! Bounded bisimulation between pointed models and between teams.
//!
//! k-bisimilarity is computed by partition refinement on the disjoint union
//! of the two models: level 0 groups worlds by valuation, level j+1 splits a
//! level-j class by the set of level-j classes its worlds can step to.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::kripke::{KripkeModel, Team, WorldId};
use crate::syntax::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Bisimulation classes of the worlds of two models, for levels `0..=k`.
#[derive(Debug, Clone)]
pub struct BisimClasses {
    k: usize,
    left_len: usize,
    /// `levels[j][i]` is the level-j class of union index `i`. Levels beyond
    /// the stored ones equal the last (the refinement reached a fixpoint).
    levels: Vec<Vec<usize>>,
}

impl BisimClasses {
    pub fn k(&self) -> usize {
        self.k
    }

    fn index(&self, side: Side, w: WorldId) -> usize {
        match side {
            Side::Left => w.0,
            Side::Right => self.left_len + w.0,
        }
    }

    /// Class identifier of a world at `level ≤ k`.
    pub fn class_of(&self, side: Side, w: WorldId, level: usize) -> usize {
        assert!(
            level <= self.k,
            "level {level} above computed bound {}",
            self.k
        );
        let j = level.min(self.levels.len() - 1);
        self.levels[j][self.index(side, w)]
    }

    /// `K,w ⇄_level K′,w′` with `w` in the left and `w′` in the right model.
    pub fn bisimilar(&self, w: WorldId, w2: WorldId, level: usize) -> bool {
        self.class_of(Side::Left, w, level) == self.class_of(Side::Right, w2, level)
    }

    /// Least level at which the two worlds are told apart, if any up to `k`.
    pub fn distinguishing_level(&self, w: WorldId, w2: WorldId) -> Option<usize> {
        (0..=self.k).find(|&j| !self.bisimilar(w, w2, j))
    }

    /// The level-`level` classes met by a team.
    pub fn classes_met(&self, side: Side, team: &Team, level: usize) -> BTreeSet<usize> {
        team.iter().map(|w| self.class_of(side, w, level)).collect()
    }

    /// Team bisimilarity at `level`: both teams meet the same classes.
    pub fn team_bisimilar(&self, team: &Team, team2: &Team, level: usize) -> bool {
        self.classes_met(Side::Left, team, level) == self.classes_met(Side::Right, team2, level)
    }

    /// Least level at which the two teams are told apart, if any up to `k`.
    pub fn team_distinguishing_level(&self, team: &Team, team2: &Team) -> Option<usize> {
        (0..=self.k).find(|&j| !self.team_bisimilar(team, team2, j))
    }
}

/// k-bisimulation classes over the disjoint union of `left` and `right`.
pub fn kbisim_classes(left: &KripkeModel, right: &KripkeModel, k: usize) -> Result<BisimClasses> {
    if !left.same_signature(right) {
        return Err(Error::SignatureMismatch);
    }
    let left_len = left.num_worlds();
    let props: Vec<(usize, usize)> = left
        .signature()
        .iter()
        .enumerate()
        .map(|(i, p)| (i, right.prop_id(p).expect("same signature")))
        .collect();

    let mut nodes: Vec<(Vec<bool>, Vec<usize>)> = Vec::with_capacity(left_len + right.num_worlds());
    for w in left.worlds() {
        let val = props.iter().map(|&(i, _)| left.holds(i, w)).collect();
        nodes.push((val, left.successors(w).iter().map(|v| v.0).collect()));
    }
    for w in right.worlds() {
        let val = props.iter().map(|&(_, j)| right.holds(j, w)).collect();
        nodes.push((
            val,
            right.successors(w).iter().map(|v| left_len + v.0).collect(),
        ));
    }

    let mut levels = vec![renumber(nodes.iter().map(|(val, _)| val.clone()))];
    for _ in 0..k {
        let prev = levels.last().unwrap();
        let next = renumber(nodes.iter().enumerate().map(|(i, (_, succ))| {
            let targets: BTreeSet<usize> = succ.iter().map(|&v| prev[v]).collect();
            (prev[i], targets)
        }));
        let stable = class_count(&next) == class_count(prev);
        if stable {
            break;
        }
        levels.push(next);
    }
    Ok(BisimClasses {
        k,
        left_len,
        levels,
    })
}

fn class_count(level: &[usize]) -> usize {
    level.iter().max().map_or(0, |m| m + 1)
}

/// Assigns class identifiers in order of first occurrence.
fn renumber<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids = HashMap::new();
    keys.map(|key| {
        let next = ids.len();
        *ids.entry(key).or_insert(next)
    })
    .collect()
}

/// `K,T ⇄ₖ K′,T′`
pub fn team_kbisim(
    left: &KripkeModel,
    team: &Team,
    right: &KripkeModel,
    team2: &Team,
    k: usize,
) -> Result<bool> {
    Ok(kbisim_classes(left, right, k)?.team_bisimilar(team, team2, k))
}

/// The k-th Hintikka formula `χᵏ` of a pointed model.
pub fn hintikka(model: &KripkeModel, w: WorldId, k: usize) -> Formula {
    let mut memo = HashMap::new();
    hintikka_memo(model, w, k, &mut memo)
}

fn hintikka_memo(
    model: &KripkeModel,
    w: WorldId,
    k: usize,
    memo: &mut HashMap<(WorldId, usize), Formula>,
) -> Formula {
    if let Some(f) = memo.get(&(w, k)) {
        return f.clone();
    }
    let f = if k == 0 {
        Formula::conj_all(model.signature().iter().enumerate().map(|(i, p)| {
            if model.holds(i, w) {
                Formula::Prop(p.clone())
            } else {
                Formula::NegProp(p.clone())
            }
        }))
    } else {
        let mut succ: Vec<Formula> = Vec::new();
        for &v in model.successors(w) {
            let chi = hintikka_memo(model, v, k - 1, memo);
            if !succ.contains(&chi) {
                succ.push(chi);
            }
        }
        let mut parts = vec![hintikka_memo(model, w, k - 1, memo)];
        parts.extend(succ.iter().cloned().map(Formula::dia));
        parts.push(Formula::boxed(Formula::disj_all(succ)));
        Formula::conj_all(parts)
    };
    memo.insert((w, k), f.clone());
    f
}

/// `⊻_{(K,T)} ⋁_{w∈T} χᵏ_{K,w}` over a finite list of exemplars: satisfied
/// exactly by the teams team-k-bisimilar to a subteam of some exemplar.
pub fn define_class(exemplars: &[(&KripkeModel, Team)], k: usize) -> Result<Formula> {
    let Some((first, _)) = exemplars.first() else {
        return Err(Error::Invalid(
            "define_class needs at least one exemplar".into(),
        ));
    };
    let mut blocks: Vec<Formula> = Vec::new();
    for (model, team) in exemplars {
        if !first.same_signature(model) {
            return Err(Error::SignatureMismatch);
        }
        let mut memo = HashMap::new();
        let mut chis: Vec<Formula> = Vec::new();
        for w in team.iter() {
            let chi = hintikka_memo(model, w, k, &mut memo);
            if !chis.contains(&chi) {
                chis.push(chi);
            }
        }
        let block = Formula::disj_all(chis);
        if !blocks.contains(&block) {
            blocks.push(block);
        }
    }
    Ok(Formula::idis_all(blocks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::semantics::{eval, eval_point};
    use crate::syntax::parse;

    #[test]
    fn level_zero() {
        let m1 = fixtures::m1();
        let c = kbisim_classes(&m1, &m1, 0).unwrap();
        let (a, b) = (m1.world("a").unwrap(), m1.world("b").unwrap());
        assert!(!c.bisimilar(a, b, 0));
        assert!(c.bisimilar(a, a, 0));

        let m2 = fixtures::m2();
        let c = kbisim_classes(&m1, &m2, 0).unwrap();
        assert!(!c.bisimilar(a, m2.world("a").unwrap(), 0));
        assert!(c.bisimilar(a, m2.world("b").unwrap(), 0));
    }

    #[test]
    fn duplicated_world() {
        let m1 = fixtures::m1();
        let dup = fixtures::m1dup();
        let b = m1.world("b").unwrap();
        let (b1, b2) = (dup.world("b1").unwrap(), dup.world("b2").unwrap());
        for k in 0..5 {
            let c = kbisim_classes(&m1, &dup, k).unwrap();
            assert!(c.bisimilar(b, b1, k) && c.bisimilar(b, b2, k));
            assert!(c.bisimilar(m1.world("a").unwrap(), dup.world("a").unwrap(), k));
        }
    }

    #[test]
    fn refinement_separates_by_depth() {
        // a→b→c vs a→b: the two `a`s agree up to level 1 only
        let long = KripkeModel::parse("worlds a b c\nsignature p\nedge a b\nedge b c\n").unwrap();
        let short = KripkeModel::parse("worlds a b\nsignature p\nedge a b\n").unwrap();
        let c = kbisim_classes(&long, &short, 4).unwrap();
        let (a, a2) = (long.world("a").unwrap(), short.world("a").unwrap());
        assert!(c.bisimilar(a, a2, 1));
        assert!(!c.bisimilar(a, a2, 2));
        assert_eq!(c.distinguishing_level(a, a2), Some(2));
        assert_eq!(c.class_of(Side::Left, a, 4), c.class_of(Side::Left, a, 3));
    }

    #[test]
    fn signature_mismatch() {
        let other = KripkeModel::parse("worlds a\nprop r a\n").unwrap();
        assert!(matches!(
            kbisim_classes(&fixtures::m1(), &other, 1),
            Err(Error::SignatureMismatch)
        ));
    }

    #[test]
    fn team_examples() {
        let m1 = fixtures::m1();
        let m2 = fixtures::m2();
        let dup = fixtures::m1dup();
        let ab = m1.team(&["a", "b"]).unwrap();
        assert!(team_kbisim(&m1, &ab, &m1, &ab, 3).unwrap());
        let a = m1.team(&["a"]).unwrap();
        assert!(!team_kbisim(&m1, &a, &m2, &m2.team(&["a"]).unwrap(), 0).unwrap());
        let abb = dup.team(&["a", "b1", "b2"]).unwrap();
        assert!(team_kbisim(&m1, &ab, &dup, &abb, 2).unwrap());
    }

    #[test]
    fn hintikka_examples() {
        let m1 = fixtures::m1();
        let (a, b) = (m1.world("a").unwrap(), m1.world("b").unwrap());
        assert_eq!(hintikka(&m1, a, 0), parse("p & ~q").unwrap());
        assert_eq!(hintikka(&m1, b, 1), parse("(~p & q) & []F").unwrap());
        assert_eq!(
            hintikka(&m1, a, 1),
            parse("(p & ~q) & <>(~p & q) & [](~p & q)").unwrap()
        );
        let chi = hintikka(&m1, a, 2);
        assert!(eval_point(&m1, a, &chi).unwrap());
        assert!(!eval_point(&m1, b, &chi).unwrap());
        assert_eq!(chi.classify().unwrap(), crate::syntax::Fragment::ML);
        assert_eq!(chi.modal_depth(), 2);
    }

    #[test]
    fn hintikka_deduplicates() {
        let dup = fixtures::m1dup();
        let chi = hintikka(&dup, dup.world("a").unwrap(), 1);
        assert_eq!(chi, parse("(p & ~q) & <>(~p & q) & [](~p & q)").unwrap());
    }

    #[test]
    fn define_class_examples() {
        let m1 = fixtures::m1();
        let m2 = fixtures::m2();
        let a = m1.team(&["a"]).unwrap();
        let f = define_class(&[(&m1, a.clone())], 0).unwrap();
        assert_eq!(f, parse("p & ~q").unwrap());
        assert!(eval(&m1, &a, &f).unwrap());
        assert!(!eval(&m2, &m2.team(&["a"]).unwrap(), &f).unwrap());

        let f = define_class(&[(&m1, a.clone()), (&m1, Team::empty()), (&m1, a)], 0).unwrap();
        assert_eq!(f, parse("p & ~q \\/ F").unwrap());
        assert!(define_class(&[], 1).is_err());
    }
}
