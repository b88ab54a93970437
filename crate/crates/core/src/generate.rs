//! Seeded generators for formulas and models, plus the fixed model families
//! used by the exhaustive checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kripke::KripkeModel;
use crate::syntax::{Formula, Fragment};

/// Random formulas of a fixed fragment over a fixed set of propositions.
pub struct FormulaGen {
    rng: ChaCha8Rng,
    props: Vec<String>,
    /// Connective budget per formula; keeps the split search of `∨` small.
    pub max_size: usize,
    /// Largest number of arguments of a generated dependence atom.
    pub max_dep_args: usize,
}

impl FormulaGen {
    pub fn new<S: AsRef<str>>(seed: u64, props: &[S]) -> FormulaGen {
        assert!(!props.is_empty(), "need at least one proposition");
        FormulaGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            props: props.iter().map(|p| p.as_ref().to_string()).collect(),
            max_size: 6,
            max_dep_args: 2,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A formula of exactly the given fragment (re-drawn until it classifies
    /// as `fragment`), with modal depth at most `md`.
    pub fn formula(&mut self, fragment: Fragment, md: usize) -> Formula {
        loop {
            let mut budget = self.max_size;
            let f = self.gen(fragment, md, &mut budget);
            if f.classify().ok() == Some(fragment) {
                return f;
            }
        }
    }

    /// An ML formula of modal depth at most `md`.
    pub fn ml(&mut self, md: usize) -> Formula {
        let mut budget = self.max_size;
        self.gen(Fragment::ML, md, &mut budget)
    }

    fn literal(&mut self) -> Formula {
        let p = self.props.choose(&mut self.rng).unwrap().clone();
        match self.rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bot,
            2..=5 => Formula::Prop(p),
            _ => Formula::NegProp(p),
        }
    }

    fn gen(&mut self, fragment: Fragment, md: usize, budget: &mut usize) -> Formula {
        if *budget == 0 {
            return self.literal();
        }
        *budget -= 1;
        let special = match fragment {
            Fragment::ML => false,
            _ => self.rng.gen_bool(0.3),
        };
        if special {
            return match fragment {
                Fragment::MLIDis => {
                    let l = self.gen(fragment, md, budget);
                    let r = self.gen(fragment, md, budget);
                    Formula::idis(l, r)
                }
                Fragment::MDL => self.dep_atom(false, md),
                _ => self.dep_atom(true, md),
            };
        }
        let choices = if md == 0 { 3 } else { 5 };
        match self.rng.gen_range(0..choices) {
            0 => self.literal(),
            1 => {
                let l = self.gen(fragment, md, budget);
                let r = self.gen(fragment, md, budget);
                Formula::and(l, r)
            }
            2 => {
                let l = self.gen(fragment, md, budget);
                let r = self.gen(fragment, md, budget);
                Formula::or(l, r)
            }
            3 => Formula::dia(self.gen(fragment, md - 1, budget)),
            _ => Formula::boxed(self.gen(fragment, md - 1, budget)),
        }
    }

    fn dep_atom(&mut self, extended: bool, md: usize) -> Formula {
        let n = self.rng.gen_range(0..=self.max_dep_args);
        let member = |g: &mut Self| {
            if extended && g.rng.gen_bool(0.6) {
                let mut budget = 2;
                g.gen(Fragment::ML, md, &mut budget)
            } else {
                let p = g.props.choose(&mut g.rng).unwrap().clone();
                if g.rng.gen_bool(0.7) {
                    Formula::Prop(p)
                } else {
                    Formula::NegProp(p)
                }
            }
        };
        let args = (0..n).map(|_| member(self)).collect();
        let target = member(self);
        Formula::dep(args, target)
    }
}

fn world_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("w{i}")).collect()
}

/// A model with `n` worlds, each proposition true at a world with
/// probability 1/2 and each edge present with probability `edge_prob`.
pub fn random_model<S: AsRef<str>>(
    rng: &mut impl Rng,
    n: usize,
    props: &[S],
    edge_prob: f64,
) -> KripkeModel {
    let names = world_names(n);
    let valuation: Vec<(String, Vec<String>)> = props
        .iter()
        .map(|p| {
            let ws = names
                .iter()
                .filter(|_| rng.gen_bool(0.5))
                .cloned()
                .collect();
            (p.as_ref().to_string(), ws)
        })
        .collect();
    let mut edges = Vec::new();
    for u in &names {
        for v in &names {
            if rng.gen_bool(edge_prob) {
                edges.push((u.clone(), v.clone()));
            }
        }
    }
    KripkeModel::new(names, valuation, edges).expect("generated model is well formed")
}

/// Seeded sample of models with `1..=max_worlds` worlds.
pub fn random_models<S: AsRef<str>>(
    seed: u64,
    count: usize,
    max_worlds: usize,
    props: &[S],
) -> Vec<KripkeModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_worlds);
            let p = rng.gen_range(0.2..0.6);
            random_model(&mut rng, n, props, p)
        })
        .collect()
}

/// Every model on exactly `n` worlds over `props`: all valuations times all
/// accessibility relations. There are `2^(n·|props|) · 2^(n²)` of them.
pub fn all_models<S: AsRef<str>>(n: usize, props: &[S]) -> Vec<KripkeModel> {
    let names = world_names(n);
    let val_bits = n * props.len();
    let edge_bits = n * n;
    assert!(val_bits + edge_bits <= 20, "too many models to enumerate");
    let mut out = Vec::with_capacity(1 << (val_bits + edge_bits));
    for vbits in 0..1usize << val_bits {
        let valuation: Vec<(String, Vec<String>)> = props
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let ws = (0..n)
                    .filter(|&w| vbits >> (j * n + w) & 1 == 1)
                    .map(|w| names[w].clone())
                    .collect();
                (p.as_ref().to_string(), ws)
            })
            .collect();
        for ebits in 0..1usize << edge_bits {
            let edges: Vec<(String, String)> = (0..edge_bits)
                .filter(|&b| ebits >> b & 1 == 1)
                .map(|b| (names[b / n].clone(), names[b % n].clone()))
                .collect();
            out.push(KripkeModel::new(names.clone(), valuation.clone(), edges).unwrap());
        }
    }
    out
}

/// All models with at most `exhaustive_worlds` worlds, then a seeded sample of
/// `sampled` models with up to `max_worlds` worlds.
pub fn model_family<S: AsRef<str>>(
    props: &[S],
    exhaustive_worlds: usize,
    max_worlds: usize,
    sampled: usize,
    seed: u64,
) -> Vec<KripkeModel> {
    let mut out: Vec<KripkeModel> = (1..=exhaustive_worlds)
        .flat_map(|n| all_models(n, props))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sampled {
        let n = rng.gen_range(exhaustive_worlds + 1..=max_worlds);
        let p = rng.gen_range(0.15..0.6);
        out.push(random_model(&mut rng, n, props, p));
    }
    out
}

/// Formula asserting that exactly the `i`-th of `symbols` holds.
pub fn exactly_one(symbols: &[String], i: usize) -> Formula {
    Formula::conj_all(symbols.iter().enumerate().map(|(k, s)| {
        if k == i {
            Formula::Prop(s.clone())
        } else {
            Formula::NegProp(s.clone())
        }
    }))
}

fn symbols(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// `⊻ᵢ (pᵢ ∧ ⋀_{k≠i} ¬pₖ)` over `p0..p{m-1}`.
pub fn exclusive_choice(prefix: &str, m: usize) -> Formula {
    let syms = symbols(prefix, m);
    Formula::idis_all((0..m).map(|i| exactly_one(&syms, i)))
}

/// Model over `p0..p{m-1}, q0..q{n-1}` with one world `w{i}{j}` for each pair,
/// where exactly `p_i` and `q_j` hold. Every `T_i ∩ U_j` is the singleton `{w{i}{j}}`.
pub fn conjunction_model(m: usize, n: usize) -> KripkeModel {
    let mut names = Vec::new();
    for i in 0..m {
        for j in 0..n {
            names.push(format!("w{i}{j}"));
        }
    }
    let mut valuation = Vec::new();
    for i in 0..m {
        let ws = (0..n).map(|j| format!("w{i}{j}")).collect::<Vec<_>>();
        valuation.push((format!("p{i}"), ws));
    }
    for j in 0..n {
        let ws = (0..m).map(|i| format!("w{i}{j}")).collect::<Vec<_>>();
        valuation.push((format!("q{j}"), ws));
    }
    KripkeModel::new(names, valuation, Vec::<(String, String)>::new()).unwrap()
}

/// `⊻ⱼ (ψⱼ ∨ ψⱼ₊₁)` with indices mod `n`, where `ψⱼ` says exactly `qⱼ` holds.
pub fn cyclic_pairs(n: usize) -> Formula {
    let syms = symbols("q", n);
    Formula::idis_all(
        (0..n).map(|j| Formula::or(exactly_one(&syms, j), exactly_one(&syms, (j + 1) % n))),
    )
}

/// Worlds `u0..u{n-1}` where `u_j` makes exactly `q_j` true.
pub fn cyclic_model(n: usize) -> KripkeModel {
    let names: Vec<String> = symbols("u", n);
    let valuation: Vec<(String, Vec<String>)> = (0..n)
        .map(|j| (format!("q{j}"), vec![names[j].clone()]))
        .collect();
    KripkeModel::new(names, valuation, Vec::<(String, String)>::new()).unwrap()
}
