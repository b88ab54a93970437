//! Finite Kripke models and teams.
//!
//! Worlds and propositions are identified by their declaration index; names
//! are only used at the I/O boundary.
//!
//! Model files are line based, `#` starts a comment:
//!
//! ```text
//! worlds a b c
//! prop p a b        # V(p) = {a,b}
//! prop q c
//! edge a b
//! edge a c
//! team a b          # optional default team
//! ```
//!
//! A `signature p q r` line may declare propositions up front; declared
//! propositions without a `prop` line get the empty valuation.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Default limit on the number of worlds for power-set walks.
pub const ENUMERATION_GUARD: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldId(pub usize);

/// A set of worlds of one model, stored as a bitset.
///
/// Trailing zero words are never stored, so equal sets compare equal
/// regardless of how they were built. The total order is by size, then
/// lexicographic on the sorted member sequence.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Team {
    words: Vec<u64>,
}

impl Team {
    pub fn empty() -> Team {
        Team::default()
    }

    pub fn singleton(w: WorldId) -> Team {
        let mut t = Team::empty();
        t.insert(w);
        t
    }

    /// Team of the worlds whose index bit is set in `mask`.
    pub fn from_mask(mask: u64) -> Team {
        let mut t = Team { words: vec![mask] };
        t.normalize();
        t
    }

    /// The team as a bitmask, if every member index is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn full(n: usize) -> Team {
        (0..n).map(WorldId).collect()
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, w: WorldId) {
        let (i, b) = (w.0 / 64, w.0 % 64);
        if self.words.len() <= i {
            self.words.resize(i + 1, 0);
        }
        self.words[i] |= 1 << b;
    }

    pub fn remove(&mut self, w: WorldId) {
        let (i, b) = (w.0 / 64, w.0 % 64);
        if let Some(word) = self.words.get_mut(i) {
            *word &= !(1 << b);
        }
        self.normalize();
    }

    pub fn contains(&self, w: WorldId) -> bool {
        let (i, b) = (w.0 / 64, w.0 % 64);
        self.words.get(i).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = WorldId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(WorldId(i * 64 + b))
            })
        })
    }

    pub fn union(&self, other: &Team) -> Team {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        Team { words }
    }

    pub fn intersection(&self, other: &Team) -> Team {
        let mut t = Team {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        t.normalize();
        t
    }

    pub fn difference(&self, other: &Team) -> Team {
        let mut t = Team {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        t.normalize();
        t
    }

    pub fn is_subset(&self, other: &Team) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Team) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Renders as `{a,b}` using the model's world names.
    pub fn display<'a>(&'a self, model: &'a KripkeModel) -> TeamDisplay<'a> {
        TeamDisplay { team: self, model }
    }
}

impl FromIterator<WorldId> for Team {
    fn from_iter<I: IntoIterator<Item = WorldId>>(iter: I) -> Self {
        let mut t = Team::empty();
        for w in iter {
            t.insert(w);
        }
        t
    }
}

impl Ord for Team {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Team {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|w| w.0)).finish()
    }
}

pub struct TeamDisplay<'a> {
    team: &'a Team,
    model: &'a KripkeModel,
}

impl fmt::Display for TeamDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.team.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.model.world_name(w))?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeModel {
    worlds: Vec<String>,
    world_index: HashMap<String, usize>,
    signature: Vec<String>,
    prop_index: HashMap<String, usize>,
    valuation: Vec<Team>,
    succ: Vec<Vec<WorldId>>,
    pred: Vec<Vec<WorldId>>,
    default_team: Option<Team>,
}

impl KripkeModel {
    /// Builds a model from names. Edges and valuations refer to worlds by name.
    pub fn new<W, P, S>(
        worlds: impl IntoIterator<Item = W>,
        valuation: impl IntoIterator<Item = (P, Vec<S>)>,
        edges: impl IntoIterator<Item = (S, S)>,
    ) -> Result<KripkeModel>
    where
        W: Into<String>,
        P: Into<String>,
        S: AsRef<str>,
    {
        let mut b = Builder::default();
        for w in worlds {
            b.world(w.into(), 0)?;
        }
        for (p, ws) in valuation {
            let names = ws.iter().map(|s| s.as_ref().to_string()).collect();
            b.props.push((p.into(), names, 0));
        }
        for (u, v) in edges {
            b.edges
                .push((u.as_ref().to_string(), v.as_ref().to_string(), 0));
        }
        b.finish()
    }

    pub fn parse(text: &str) -> Result<KripkeModel> {
        let mut b = Builder::default();
        let mut saw_worlds = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut fields = content.split_whitespace();
            let Some(head) = fields.next() else { continue };
            let rest: Vec<String> = fields.map(str::to_string).collect();
            match head {
                "worlds" => {
                    if saw_worlds {
                        return Err(model_err(line, "duplicate `worlds` line"));
                    }
                    saw_worlds = true;
                    for w in rest {
                        b.world(w, line)?;
                    }
                }
                "signature" => {
                    for p in rest {
                        b.signature.push((p, line));
                    }
                }
                "prop" => {
                    let mut it = rest.into_iter();
                    let name = it
                        .next()
                        .ok_or_else(|| model_err(line, "`prop` needs a proposition name"))?;
                    b.props.push((name, it.collect(), line));
                }
                "edge" => {
                    if rest.len() != 2 {
                        return Err(model_err(line, "`edge` needs exactly two worlds"));
                    }
                    b.edges.push((rest[0].clone(), rest[1].clone(), line));
                }
                "team" => {
                    if b.team.is_some() {
                        return Err(model_err(line, "duplicate `team` line"));
                    }
                    b.team = Some((rest, line));
                }
                other => return Err(model_err(line, format!("unknown directive `{other}`"))),
            }
        }
        if !saw_worlds {
            return Err(model_err(0, "missing `worlds` line"));
        }
        b.finish()
    }

    pub fn num_worlds(&self) -> usize {
        self.worlds.len()
    }

    pub fn worlds(&self) -> impl Iterator<Item = WorldId> {
        (0..self.worlds.len()).map(WorldId)
    }

    pub fn world_names(&self) -> &[String] {
        &self.worlds
    }

    pub fn world_name(&self, w: WorldId) -> &str {
        &self.worlds[w.0]
    }

    pub fn world(&self, name: &str) -> Result<WorldId> {
        self.world_index
            .get(name)
            .map(|&i| WorldId(i))
            .ok_or_else(|| Error::UnknownWorld(name.to_string()))
    }

    /// Team from world names.
    pub fn team<S: AsRef<str>>(&self, names: &[S]) -> Result<Team> {
        names.iter().map(|n| self.world(n.as_ref())).collect()
    }

    pub fn full_team(&self) -> Team {
        Team::full(self.num_worlds())
    }

    /// Team from the model file's `team` line, if any.
    pub fn default_team(&self) -> Option<&Team> {
        self.default_team.as_ref()
    }

    pub fn signature(&self) -> &[String] {
        &self.signature
    }

    pub fn prop_id(&self, name: &str) -> Result<usize> {
        self.prop_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownProposition(name.to_string()))
    }

    /// `V(p)` by proposition index.
    pub fn valuation(&self, prop: usize) -> &Team {
        &self.valuation[prop]
    }

    pub fn holds(&self, prop: usize, w: WorldId) -> bool {
        self.valuation[prop].contains(w)
    }

    pub fn successors(&self, w: WorldId) -> &[WorldId] {
        &self.succ[w.0]
    }

    pub fn predecessors(&self, w: WorldId) -> &[WorldId] {
        &self.pred[w.0]
    }

    pub fn has_edge(&self, u: WorldId, v: WorldId) -> bool {
        self.succ[u.0].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (WorldId, WorldId)> + '_ {
        self.worlds()
            .flat_map(move |u| self.succ[u.0].iter().map(move |&v| (u, v)))
    }

    /// Same proposition symbols, regardless of declaration order.
    pub fn same_signature(&self, other: &KripkeModel) -> bool {
        self.signature.len() == other.signature.len()
            && self
                .signature
                .iter()
                .all(|p| other.prop_index.contains_key(p))
    }

    /// Model file text; parsing it yields an equal model.
    pub fn to_text(&self) -> String {
        let mut out = format!("worlds {}\n", self.worlds.join(" "));
        if !self.signature.is_empty() {
            out.push_str(&format!("signature {}\n", self.signature.join(" ")));
        }
        for (i, p) in self.signature.iter().enumerate() {
            let ws: Vec<&str> = self.valuation[i]
                .iter()
                .map(|w| self.world_name(w))
                .collect();
            if !ws.is_empty() {
                out.push_str(&format!("prop {} {}\n", p, ws.join(" ")));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!(
                "edge {} {}\n",
                self.world_name(u),
                self.world_name(v)
            ));
        }
        if let Some(t) = &self.default_team {
            let ws: Vec<&str> = t.iter().map(|w| self.world_name(w)).collect();
            out.push_str(&format!("team {}\n", ws.join(" ")).replace("team \n", "team\n"));
        }
        out
    }

    /// The model with every valuation over `props` as a world, no edges.
    /// World names are `w` followed by the truth bits in proposition order.
    pub fn full_valuation(props: &[&str]) -> KripkeModel {
        let n = props.len();
        let name = |bits: usize| -> String {
            let s: String = (0..n)
                .map(|i| {
                    if bits >> (n - 1 - i) & 1 == 1 {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect();
            format!("w{s}")
        };
        let worlds: Vec<String> = (0..1usize << n).map(name).collect();
        let valuation: Vec<(String, Vec<String>)> = (0..n)
            .map(|i| {
                let ws = (0..1usize << n)
                    .filter(|bits| bits >> (n - 1 - i) & 1 == 1)
                    .map(name)
                    .collect();
                (props[i].to_string(), ws)
            })
            .collect();
        KripkeModel::new(worlds, valuation, Vec::<(String, String)>::new())
            .expect("full valuation model is well formed")
    }
}

fn model_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Model {
        line,
        msg: msg.into(),
    }
}

#[derive(Default)]
struct Builder {
    worlds: Vec<String>,
    world_index: HashMap<String, usize>,
    signature: Vec<(String, usize)>,
    props: Vec<(String, Vec<String>, usize)>,
    edges: Vec<(String, String, usize)>,
    team: Option<(Vec<String>, usize)>,
}

impl Builder {
    fn world(&mut self, name: String, line: usize) -> Result<()> {
        if self.world_index.contains_key(&name) {
            return Err(model_err(line, format!("duplicate world `{name}`")));
        }
        self.world_index.insert(name.clone(), self.worlds.len());
        self.worlds.push(name);
        Ok(())
    }

    fn lookup(&self, name: &str, line: usize) -> Result<WorldId> {
        self.world_index
            .get(name)
            .map(|&i| WorldId(i))
            .ok_or_else(|| model_err(line, format!("unknown world `{name}`")))
    }

    fn finish(self) -> Result<KripkeModel> {
        let mut signature = Vec::new();
        let mut prop_index = HashMap::new();
        for (p, line) in &self.signature {
            if prop_index.insert(p.clone(), signature.len()).is_some() {
                return Err(model_err(*line, format!("duplicate proposition `{p}`")));
            }
            signature.push(p.clone());
        }
        let mut valuation = vec![Team::empty(); signature.len()];
        let mut assigned = BTreeSet::new();
        for (p, ws, line) in &self.props {
            let idx = match prop_index.get(p) {
                Some(&i) => i,
                None => {
                    prop_index.insert(p.clone(), signature.len());
                    signature.push(p.clone());
                    valuation.push(Team::empty());
                    signature.len() - 1
                }
            };
            if !assigned.insert(idx) {
                return Err(model_err(*line, format!("duplicate proposition `{p}`")));
            }
            for w in ws {
                valuation[idx].insert(self.lookup(w, *line)?);
            }
        }
        let n = self.worlds.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for (u, v, line) in &self.edges {
            let (u, v) = (self.lookup(u, *line)?, self.lookup(v, *line)?);
            succ[u.0].push(v);
            pred[v.0].push(u);
        }
        for list in succ.iter_mut().chain(pred.iter_mut()) {
            list.sort();
            list.dedup();
        }
        let default_team = match &self.team {
            Some((ws, line)) => Some(
                ws.iter()
                    .map(|w| self.lookup(w, *line))
                    .collect::<Result<Team>>()?,
            ),
            None => None,
        };
        Ok(KripkeModel {
            worlds: self.worlds,
            world_index: self.world_index,
            signature,
            prop_index,
            valuation,
            succ,
            pred,
            default_team,
        })
    }
}

/// `R[T]`
pub fn image(model: &KripkeModel, team: &Team) -> Team {
    team.iter()
        .flat_map(|w| model.successors(w).iter().copied())
        .collect()
}

/// `R⁻¹[T]`
pub fn preimage(model: &KripkeModel, team: &Team) -> Team {
    team.iter()
        .flat_map(|w| model.predecessors(w).iter().copied())
        .collect()
}

/// `T[R]S`: every member of `S` has a predecessor in `T` and every member of
/// `T` has a successor in `S`.
pub fn is_successor_team(model: &KripkeModel, team: &Team, succ: &Team) -> bool {
    succ.is_subset(&image(model, team)) && team.is_subset(&preimage(model, succ))
}

/// Images `{s(w) | w ∈ T}` of all choice functions `s` picking one successor
/// per member of `T`. Every successor team of `T` contains one of these.
pub fn choice_successor_teams(model: &KripkeModel, team: &Team) -> BTreeSet<Team> {
    let members: Vec<WorldId> = team.iter().collect();
    let mut out = BTreeSet::new();
    if members.iter().any(|&w| model.successors(w).is_empty()) {
        return out;
    }
    fn go(model: &KripkeModel, members: &[WorldId], acc: &mut Team, out: &mut BTreeSet<Team>) {
        let Some((&w, rest)) = members.split_first() else {
            out.insert(acc.clone());
            return;
        };
        for &v in model.successors(w) {
            let fresh = !acc.contains(v);
            acc.insert(v);
            go(model, rest, acc, out);
            if fresh {
                acc.remove(v);
            }
        }
    }
    go(model, &members, &mut Team::empty(), &mut out);
    out
}

/// All subsets of `team`, in no particular order.
pub fn subteams(team: &Team) -> impl Iterator<Item = Team> {
    let members: Vec<WorldId> = team.iter().collect();
    assert!(
        members.len() < 64,
        "subteam enumeration of {} worlds",
        members.len()
    );
    (0u64..1 << members.len()).map(move |mask| {
        members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &w)| w)
            .collect()
    })
}

pub fn check_guard(model: &KripkeModel, limit: usize) -> Result<()> {
    if model.num_worlds() > limit {
        Err(Error::Guard {
            what: "number of worlds",
            limit,
            actual: model.num_worlds(),
        })
    } else {
        Ok(())
    }
}

/// Every team of the model, by size and then lexicographically.
pub fn all_teams(model: &KripkeModel) -> Result<impl Iterator<Item = Team>> {
    all_teams_guarded(model, ENUMERATION_GUARD)
}

pub fn all_teams_guarded(model: &KripkeModel, limit: usize) -> Result<impl Iterator<Item = Team>> {
    check_guard(model, limit)?;
    let n = model.num_worlds();
    Ok((0..=n)
        .flat_map(move |k| Combinations::new(n, k).map(|c| c.into_iter().map(WorldId).collect())))
}

/// k-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
