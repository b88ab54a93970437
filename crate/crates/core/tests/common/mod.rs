//! Brute-force oracles shared by the integration tests. They work on plain
//! bitmasks and follow the definitions literally, sharing no code with the
//! library's evaluators.

#![allow(dead_code)]

use std::collections::HashMap;

use teamlogic::{Formula, KripkeModel};

/// A model as bitmasks: `val[p]` is the set of worlds where `p` holds.
#[derive(Debug, Clone)]
pub struct Small {
    pub n: usize,
    pub val: HashMap<String, u64>,
    pub succ: Vec<u64>,
}

impl Small {
    pub fn of(k: &KripkeModel) -> Small {
        let n = k.num_worlds();
        let val = k
            .signature()
            .iter()
            .map(|p| {
                let id = k.prop_id(p).unwrap();
                let m = k
                    .worlds()
                    .filter(|&w| k.holds(id, w))
                    .fold(0, |m, w| m | 1 << w.0);
                (p.clone(), m)
            })
            .collect();
        let succ = k
            .worlds()
            .map(|w| {
                k.worlds()
                    .filter(|&v| k.has_edge(w, v))
                    .fold(0, |m, v| m | 1 << v.0)
            })
            .collect();
        Small { n, val, succ }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn image(&self, t: u64) -> u64 {
        members(t).fold(0, |m, w| m | self.succ[w])
    }

    pub fn preimage(&self, s: u64) -> u64 {
        (0..self.n)
            .filter(|&w| self.succ[w] & s != 0)
            .fold(0, |m, w| m | 1 << w)
    }

    /// `T[R]S`
    pub fn successor_team(&self, t: u64, s: u64) -> bool {
        s & !self.image(t) == 0 && t & !self.preimage(s) == 0
    }

    /// Worlds where an ML formula holds classically.
    pub fn point(&self, f: &Formula) -> u64 {
        match f {
            Formula::Top => self.full(),
            Formula::Bot => 0,
            Formula::Prop(p) => self.val[p],
            Formula::NegProp(p) => self.full() & !self.val[p],
            Formula::And(l, r) => self.point(l) & self.point(r),
            Formula::Or(l, r) => self.point(l) | self.point(r),
            Formula::Dia(g) => {
                let inner = self.point(g);
                (0..self.n)
                    .filter(|&w| self.succ[w] & inner != 0)
                    .fold(0, |m, w| m | 1 << w)
            }
            Formula::Box(g) => {
                let inner = self.point(g);
                (0..self.n)
                    .filter(|&w| self.succ[w] & !inner == 0)
                    .fold(0, |m, w| m | 1 << w)
            }
            Formula::IDis(..) | Formula::Dep(..) => panic!("not ML: {f}"),
        }
    }

    /// `K,T ⊨ φ` by the clauses of the definition: `∨` over all covers
    /// `T₁ ∪ T₂ = T`, `◇` over all `S` with `T[R]S`.
    pub fn team(&self, f: &Formula, t: u64) -> bool {
        match f {
            Formula::Top => true,
            Formula::Bot => t == 0,
            Formula::Prop(p) => t & !self.val[p] == 0,
            Formula::NegProp(p) => t & self.val[p] == 0,
            Formula::And(l, r) => self.team(l, t) && self.team(r, t),
            Formula::IDis(l, r) => self.team(l, t) || self.team(r, t),
            Formula::Or(l, r) => submasks(t).any(|t1| {
                self.team(l, t1) && submasks(t).any(|t2| t1 | t2 == t && self.team(r, t2))
            }),
            Formula::Dia(g) => {
                submasks(self.image(t)).any(|s| self.successor_team(t, s) && self.team(g, s))
            }
            Formula::Box(g) => self.team(g, self.image(t)),
            Formula::Dep(args, target) => {
                let args: Vec<u64> = args.iter().map(|a| self.point(a)).collect();
                let target = self.point(target);
                members(t).all(|w| {
                    members(t).all(|v| {
                        let agree = args.iter().all(|a| (a >> w & 1) == (a >> v & 1));
                        !agree || (target >> w & 1) == (target >> v & 1)
                    })
                })
            }
        }
    }

    /// Satisfying teams as a vector indexed by mask.
    pub fn table(&self, f: &Formula) -> Vec<bool> {
        (0..1u64 << self.n).map(|t| self.team(f, t)).collect()
    }
}

pub fn members(t: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&w| t >> w & 1 == 1)
}

/// All submasks of `t`, including `0` and `t`.
pub fn submasks(t: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(t);
    std::iter::from_fn(move || {
        let s = next?;
        next = if s == 0 { None } else { Some((s - 1) & t) };
        Some(s)
    })
}

/// `bis[j][u][v]`: `u ⇄ⱼ v` over the disjoint union of `a` and `b`, with
/// worlds of `b` numbered after those of `a`. Straight from the recursive
/// definition: agreement on propositions plus forth and back.
pub fn kbisim_table(a: &Small, b: &Small, k: usize) -> Vec<Vec<Vec<bool>>> {
    let n = a.n + b.n;
    let mut props: Vec<&String> = a.val.keys().collect();
    props.sort();
    let holds = |p: &String, w: usize| {
        if w < a.n {
            a.val[p] >> w & 1 == 1
        } else {
            b.val[p] >> (w - a.n) & 1 == 1
        }
    };
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|w| {
            if w < a.n {
                members(a.succ[w]).collect()
            } else {
                members(b.succ[w - a.n]).map(|v| v + a.n).collect()
            }
        })
        .collect();
    let mut levels = vec![(0..n)
        .map(|u| {
            (0..n)
                .map(|v| props.iter().all(|p| holds(p, u) == holds(p, v)))
                .collect()
        })
        .collect::<Vec<Vec<bool>>>()];
    for j in 0..k {
        let prev = &levels[j];
        let next = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        levels[0][u][v]
                            && succ[u].iter().all(|&x| succ[v].iter().any(|&y| prev[x][y]))
                            && succ[v].iter().all(|&y| succ[u].iter().any(|&x| prev[x][y]))
                    })
                    .collect()
            })
            .collect();
        levels.push(next);
    }
    levels
}

/// Team bisimilarity from a world-level table, `t` on the left and `u` on the right.
pub fn team_bisim(bis: &[Vec<bool>], left_n: usize, t: u64, u: u64) -> bool {
    members(t).all(|w| members(u).any(|v| bis[w][left_n + v]))
        && members(u).all(|v| members(t).any(|w| bis[w][left_n + v]))
}
