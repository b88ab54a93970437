//! Bottom-up computation of `‖φ‖ᴷ` over all teams of a small model.
//!
//! Teams are world bitmasks, and a family of teams is a bitset indexed by
//! those masks. Formulas are compiled once into a hash-consed DAG, so shared
//! subformulas (common in translated formulas) are evaluated once per model.
//! `◇` quantifies over every successor team `S` with `T[R]S`, not only the
//! choice images used by the top-down evaluator.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::kripke::{self, KripkeModel, Team, ENUMERATION_GUARD};
use crate::syntax::Formula;

/// Family of teams of an `n`-world model, indexed by team bitmask.
#[derive(Clone, PartialEq, Eq)]
pub struct TeamSet {
    worlds: usize,
    bits: Vec<u64>,
}

impl TeamSet {
    pub fn new(worlds: usize) -> TeamSet {
        let len = (1usize << worlds).div_ceil(64);
        TeamSet {
            worlds,
            bits: vec![0; len],
        }
    }

    pub fn num_worlds(&self) -> usize {
        self.worlds
    }

    #[inline]
    pub fn contains(&self, mask: usize) -> bool {
        self.bits[mask >> 6] >> (mask & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, mask: usize) {
        self.bits[mask >> 6] |= 1 << (mask & 63);
    }

    pub fn contains_team(&self, team: &Team) -> bool {
        match team.to_mask() {
            Some(m) if (m as usize) < 1 << self.worlds => self.contains(m as usize),
            _ => false,
        }
    }

    /// Member masks in increasing numeric order.
    pub fn masks(&self) -> impl Iterator<Item = usize> + '_ {
        (0..1usize << self.worlds).filter(|&m| self.contains(m))
    }

    pub fn teams(&self) -> impl Iterator<Item = Team> + '_ {
        self.masks().map(|m| Team::from_mask(m as u64))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn fill(&mut self) {
        for m in 0..1usize << self.worlds {
            self.insert(m);
        }
    }

    fn zip_with(&self, other: &TeamSet, op: impl Fn(u64, u64) -> u64) -> TeamSet {
        TeamSet {
            worlds: self.worlds,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }
}

impl std::fmt::Debug for TeamSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.masks()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Node {
    Top,
    Bot,
    Prop(usize),
    NegProp(usize),
    And(usize, usize),
    Or(usize, usize),
    IDis(usize, usize),
    Dia(usize),
    Box(usize),
    Dep(Vec<usize>, usize),
}

/// A formula compiled to a DAG whose nodes are in dependency order.
#[derive(Debug, Clone)]
pub struct Compiled {
    nodes: Vec<Node>,
    props: Vec<String>,
    root: usize,
}

struct Builder {
    nodes: Vec<Node>,
    index: HashMap<Node, usize>,
    props: Vec<String>,
    prop_index: HashMap<String, usize>,
    by_addr: HashMap<usize, usize>,
}

impl Builder {
    fn intern(&mut self, node: Node) -> usize {
        if let Some(&i) = self.index.get(&node) {
            return i;
        }
        self.nodes.push(node.clone());
        self.index.insert(node, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    fn prop(&mut self, name: &str) -> usize {
        if let Some(&i) = self.prop_index.get(name) {
            return i;
        }
        self.props.push(name.to_string());
        self.prop_index
            .insert(name.to_string(), self.props.len() - 1);
        self.props.len() - 1
    }

    fn add(&mut self, f: &Formula) -> usize {
        let addr = f as *const Formula as usize;
        if let Some(&i) = self.by_addr.get(&addr) {
            return i;
        }
        let node = match f {
            Formula::Top => Node::Top,
            Formula::Bot => Node::Bot,
            Formula::Prop(p) => Node::Prop(self.prop(p)),
            Formula::NegProp(p) => Node::NegProp(self.prop(p)),
            Formula::And(l, r) => Node::And(self.add(l), self.add(r)),
            Formula::Or(l, r) => Node::Or(self.add(l), self.add(r)),
            Formula::IDis(l, r) => Node::IDis(self.add(l), self.add(r)),
            Formula::Dia(g) => Node::Dia(self.add(g)),
            Formula::Box(g) => Node::Box(self.add(g)),
            Formula::Dep(args, target) => {
                let args = args.iter().map(|a| self.add(a)).collect();
                Node::Dep(args, self.add(target))
            }
        };
        let i = self.intern(node);
        self.by_addr.insert(addr, i);
        i
    }
}

impl Compiled {
    pub fn new(f: &Formula) -> Result<Compiled> {
        f.classify()?;
        let mut b = Builder {
            nodes: Vec::new(),
            index: HashMap::new(),
            props: Vec::new(),
            prop_index: HashMap::new(),
            by_addr: HashMap::new(),
        };
        let root = b.add(f);
        Ok(Compiled {
            nodes: b.nodes,
            props: b.props,
            root,
        })
    }

    /// Number of distinct subformulas.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn evaluate(&self, model: &KripkeModel) -> Result<TeamSet> {
        self.evaluate_guarded(model, ENUMERATION_GUARD)
    }

    pub fn evaluate_guarded(&self, model: &KripkeModel, limit: usize) -> Result<TeamSet> {
        kripke::check_guard(model, limit)?;
        if model.num_worlds() >= usize::BITS as usize - 1 {
            return Err(Error::Guard {
                what: "number of worlds",
                limit: usize::BITS as usize - 2,
                actual: model.num_worlds(),
            });
        }
        let props = self
            .props
            .iter()
            .map(|p| {
                let id = model.prop_id(p)?;
                Ok(mask_of(model.valuation(id)))
            })
            .collect::<Result<Vec<u64>>>()?;
        let mut run = Run::new(self, model, props);
        let mut sets: Vec<TeamSet> = Vec::with_capacity(self.nodes.len());
        for i in 0..self.nodes.len() {
            let s = run.node(i, &sets);
            sets.push(s);
        }
        Ok(sets.swap_remove(self.root))
    }
}

fn mask_of(team: &Team) -> u64 {
    team.to_mask().expect("guarded model fits in a mask")
}

struct Run<'c> {
    prog: &'c Compiled,
    n: usize,
    props: Vec<u64>,
    succ: Vec<u64>,
    pred: Vec<u64>,
    image: Option<Vec<u64>>,
    points: Vec<Option<u64>>,
}

impl<'c> Run<'c> {
    fn new(prog: &'c Compiled, model: &KripkeModel, props: Vec<u64>) -> Self {
        let succ = model
            .worlds()
            .map(|w| model.successors(w).iter().fold(0, |m, v| m | 1 << v.0))
            .collect();
        let pred = model
            .worlds()
            .map(|w| model.predecessors(w).iter().fold(0, |m, v| m | 1 << v.0))
            .collect();
        Run {
            prog,
            n: model.num_worlds(),
            props,
            succ,
            pred,
            image: None,
            points: vec![None; prog.nodes.len()],
        }
    }

    fn image_table(&mut self) -> &[u64] {
        if self.image.is_none() {
            let mut img = vec![0u64; 1 << self.n];
            for t in 1..1usize << self.n {
                let low = t.trailing_zeros() as usize;
                img[t] = img[t & (t - 1)] | self.succ[low];
            }
            self.image = Some(img);
        }
        self.image.as_deref().unwrap()
    }

    fn preimage(&self, s: u64) -> u64 {
        let mut out = 0;
        let mut rest = s;
        while rest != 0 {
            out |= self.pred[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    }

    fn node(&mut self, i: usize, sets: &[TeamSet]) -> TeamSet {
        let n = self.n;
        let all = 1usize << n;
        let mut out = TeamSet::new(n);
        match &self.prog.nodes[i] {
            Node::Top => out.fill(),
            Node::Bot => out.insert(0),
            Node::Prop(p) => {
                let outside = !self.props[*p];
                for t in 0..all {
                    if t as u64 & outside == 0 {
                        out.insert(t);
                    }
                }
            }
            Node::NegProp(p) => {
                let inside = self.props[*p];
                for t in 0..all {
                    if t as u64 & inside == 0 {
                        out.insert(t);
                    }
                }
            }
            Node::And(l, r) => out = sets[*l].zip_with(&sets[*r], |a, b| a & b),
            Node::IDis(l, r) => out = sets[*l].zip_with(&sets[*r], |a, b| a | b),
            Node::Or(l, r) => {
                let (a, b) = (&sets[*l], &sets[*r]);
                for t in 0..all {
                    // every split T = T1 ⊎ (T \ T1), T1 ranging over submasks
                    let mut s = t;
                    loop {
                        if a.contains(s) && b.contains(t & !s) {
                            out.insert(t);
                            break;
                        }
                        if s == 0 {
                            break;
                        }
                        s = (s - 1) & t;
                    }
                }
            }
            Node::Box(g) => {
                let g = *g;
                let img = self.image_table();
                for (t, &i) in img.iter().enumerate() {
                    if sets[g].contains(i as usize) {
                        out.insert(t);
                    }
                }
            }
            Node::Dia(g) => {
                let g = *g;
                self.image_table();
                let img = self.image.as_deref().unwrap();
                // T ⊨ ◇φ iff some S ∈ ‖φ‖ has S ⊆ R[T] and T ⊆ R⁻¹[S]
                for s in sets[g].masks() {
                    let pre = self.preimage(s as u64) as usize;
                    let mut t = pre;
                    loop {
                        if img[t] as usize & s == s {
                            out.insert(t);
                        }
                        if t == 0 {
                            break;
                        }
                        t = (t - 1) & pre;
                    }
                }
            }
            Node::Dep(args, target) => {
                let args: Vec<u64> = args.clone().iter().map(|&a| self.point(a)).collect();
                let target = self.point(*target);
                let profile = |w: usize| -> u64 {
                    args.iter()
                        .enumerate()
                        .fold(0, |acc, (j, m)| acc | (m >> w & 1) << j)
                };
                let mut conflict = vec![0u64; n];
                for (w, row) in conflict.iter_mut().enumerate() {
                    for v in 0..n {
                        if profile(w) == profile(v) && (target >> w & 1) != (target >> v & 1) {
                            *row |= 1 << v;
                        }
                    }
                }
                out.insert(0);
                for t in 1..all {
                    let low = t.trailing_zeros() as usize;
                    let rest = t & (t - 1);
                    if out.contains(rest) && conflict[low] & rest as u64 == 0 {
                        out.insert(t);
                    }
                }
            }
        }
        out
    }

    /// Worlds where an ML node holds classically.
    fn point(&mut self, i: usize) -> u64 {
        if let Some(m) = self.points[i] {
            return m;
        }
        let full = if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        };
        let m = match self.prog.nodes[i].clone() {
            Node::Top => full,
            Node::Bot => 0,
            Node::Prop(p) => self.props[p],
            Node::NegProp(p) => full & !self.props[p],
            Node::And(l, r) => self.point(l) & self.point(r),
            Node::Or(l, r) => self.point(l) | self.point(r),
            Node::Dia(g) => {
                let inner = self.point(g);
                (0..self.n)
                    .filter(|&w| self.succ[w] & inner != 0)
                    .fold(0, |m, w| m | 1 << w)
            }
            Node::Box(g) => {
                let inner = self.point(g);
                (0..self.n)
                    .filter(|&w| self.succ[w] & !inner == 0)
                    .fold(0, |m, w| m | 1 << w)
            }
            Node::IDis(..) | Node::Dep(..) => unreachable!("dependence members are ML"),
        };
        self.points[i] = Some(m);
        m
    }
}
