//! Formula syntax shared by ML, ML(⊻), MDL and EMDL.
//!
//! Formulas are kept in negation normal form: `~` only ever applies to a
//! proposition symbol. The concrete ASCII grammar, loosest to tightest:
//!
//! ```text
//! f ::= f \/ f            intuitionistic disjunction
//!     | f | f             splitting disjunction
//!     | f & f             conjunction
//!     | ~p | <>f | []f
//!     | T | F | p | dep(f1, ..., fn; g) | (f)
//! ```
//!
//! All binary connectives associate to the right.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bot,
    Prop(String),
    NegProp(String),
    And(Box<Formula>, Box<Formula>),
    /// Splitting disjunction `∨`.
    Or(Box<Formula>, Box<Formula>),
    /// Intuitionistic disjunction `⊻`.
    IDis(Box<Formula>, Box<Formula>),
    Dia(Box<Formula>),
    Box(Box<Formula>),
    /// `dep(args; target)`; with no arguments this is the constancy atom.
    Dep(Vec<Formula>, Box<Formula>),
}

/// The four logics, ordered as a classification lattice:
/// `ML ≤ MDL ≤ EMDL` and `ML ≤ MLIDis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fragment {
    ML,
    MLIDis,
    MDL,
    EMDL,
}

impl Fragment {
    /// Partial order of the lattice. `MLIDis` and `MDL`/`EMDL` are incomparable.
    pub fn le(self, other: Fragment) -> bool {
        use Fragment::*;
        matches!(
            (self, other),
            (ML, _) | (MLIDis, MLIDis) | (MDL, MDL) | (MDL, EMDL) | (EMDL, EMDL)
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Fragment::ML => "ML",
            Fragment::MLIDis => "MLIDis",
            Fragment::MDL => "MDL",
            Fragment::EMDL => "EMDL",
        }
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn prop(name: &str) -> Formula {
    Formula::Prop(name.to_string())
}

pub fn neg_prop(name: &str) -> Formula {
    Formula::NegProp(name.to_string())
}

impl Formula {
    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn idis(l: Formula, r: Formula) -> Formula {
        Formula::IDis(Box::new(l), Box::new(r))
    }

    pub fn dia(f: Formula) -> Formula {
        Formula::Dia(Box::new(f))
    }

    pub fn boxed(f: Formula) -> Formula {
        Formula::Box(Box::new(f))
    }

    pub fn dep(args: Vec<Formula>, target: Formula) -> Formula {
        Formula::Dep(args, Box::new(target))
    }

    /// Right-nested conjunction; `⊤` for an empty sequence.
    pub fn conj_all(parts: impl IntoIterator<Item = Formula>) -> Formula {
        fold_right(parts, Formula::and).unwrap_or(Formula::Top)
    }

    /// Right-nested splitting disjunction; `⊥` for an empty sequence.
    pub fn disj_all(parts: impl IntoIterator<Item = Formula>) -> Formula {
        fold_right(parts, Formula::or).unwrap_or(Formula::Bot)
    }

    /// Right-nested intuitionistic disjunction; `⊥` for an empty sequence.
    pub fn idis_all(parts: impl IntoIterator<Item = Formula>) -> Formula {
        fold_right(parts, Formula::idis).unwrap_or(Formula::Bot)
    }

    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        parse(text)
    }

    /// Maximal nesting of modalities. Binary connectives and dependence atoms
    /// take the maximum over their members.
    pub fn modal_depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => 0,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IDis(l, r) => {
                l.modal_depth().max(r.modal_depth())
            }
            Formula::Dia(f) | Formula::Box(f) => f.modal_depth() + 1,
            Formula::Dep(args, target) => args
                .iter()
                .map(Formula::modal_depth)
                .fold(target.modal_depth(), usize::max),
        }
    }

    /// Number of `⊻` nodes.
    pub fn occ_ivee(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => 0,
            Formula::IDis(l, r) => 1 + l.occ_ivee() + r.occ_ivee(),
            Formula::And(l, r) | Formula::Or(l, r) => l.occ_ivee() + r.occ_ivee(),
            Formula::Dia(f) | Formula::Box(f) => f.occ_ivee(),
            Formula::Dep(args, target) => {
                args.iter().map(Formula::occ_ivee).sum::<usize>() + target.occ_ivee()
            }
        }
    }

    /// Number of AST nodes; a dependence atom header counts as one symbol.
    pub fn symbol_size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => 1,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IDis(l, r) => {
                1 + l.symbol_size() + r.symbol_size()
            }
            Formula::Dia(f) | Formula::Box(f) => 1 + f.symbol_size(),
            Formula::Dep(args, target) => {
                1 + args.iter().map(Formula::symbol_size).sum::<usize>() + target.symbol_size()
            }
        }
    }

    /// Least fragment containing the formula.
    pub fn classify(&self) -> Result<Fragment> {
        let mut has_idis = false;
        let mut dep_kind = None::<Fragment>;
        self.scan(&mut has_idis, &mut dep_kind)?;
        match (has_idis, dep_kind) {
            (true, Some(_)) => Err(Error::MixedFragment),
            (true, None) => Ok(Fragment::MLIDis),
            (false, None) => Ok(Fragment::ML),
            (false, Some(kind)) => Ok(kind),
        }
    }

    fn scan(&self, has_idis: &mut bool, dep_kind: &mut Option<Fragment>) -> Result<()> {
        match self {
            Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => Ok(()),
            Formula::IDis(l, r) => {
                *has_idis = true;
                l.scan(has_idis, dep_kind)?;
                r.scan(has_idis, dep_kind)
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                l.scan(has_idis, dep_kind)?;
                r.scan(has_idis, dep_kind)
            }
            Formula::Dia(f) | Formula::Box(f) => f.scan(has_idis, dep_kind),
            Formula::Dep(args, target) => {
                let mut propositional = true;
                for member in args.iter().chain(std::iter::once(&**target)) {
                    if !member.is_ml() {
                        return Err(Error::InvalidDependenceMember(member.to_string()));
                    }
                    propositional &= matches!(member, Formula::Prop(_) | Formula::NegProp(_));
                }
                let kind = if propositional {
                    Fragment::MDL
                } else {
                    Fragment::EMDL
                };
                if *dep_kind != Some(Fragment::EMDL) {
                    *dep_kind = Some(kind);
                }
                Ok(())
            }
        }
    }

    /// True when the formula has no `⊻` and no dependence atom.
    pub fn is_ml(&self) -> bool {
        match self {
            Formula::Top | Formula::Bot | Formula::Prop(_) | Formula::NegProp(_) => true,
            Formula::And(l, r) | Formula::Or(l, r) => l.is_ml() && r.is_ml(),
            Formula::Dia(f) | Formula::Box(f) => f.is_ml(),
            Formula::IDis(..) | Formula::Dep(..) => false,
        }
    }

    pub(crate) fn expect_fragment(&self, allowed: &[Fragment]) -> Result<Fragment> {
        let found = self.classify()?;
        if allowed.contains(&found) {
            Ok(found)
        } else {
            Err(Error::WrongFragment {
                expected: allowed[0],
                found,
            })
        }
    }

    /// Negation normal form of the classical negation of an ML formula.
    pub fn negate_ml(&self) -> Result<Formula> {
        if !self.is_ml() {
            return Err(Error::WrongFragment {
                expected: Fragment::ML,
                found: self.classify()?,
            });
        }
        Ok(self.dual())
    }

    fn dual(&self) -> Formula {
        match self {
            Formula::Top => Formula::Bot,
            Formula::Bot => Formula::Top,
            Formula::Prop(p) => Formula::NegProp(p.clone()),
            Formula::NegProp(p) => Formula::Prop(p.clone()),
            Formula::And(l, r) => Formula::or(l.dual(), r.dual()),
            Formula::Or(l, r) => Formula::and(l.dual(), r.dual()),
            Formula::Dia(f) => Formula::boxed(f.dual()),
            Formula::Box(f) => Formula::dia(f.dual()),
            Formula::IDis(..) | Formula::Dep(..) => unreachable!("dual of non-ML formula"),
        }
    }

    /// Proposition symbols occurring in the formula.
    pub fn propositions(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Prop(p) | Formula::NegProp(p) => {
                out.insert(p.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IDis(l, r) => {
                l.collect_props(out);
                r.collect_props(out);
            }
            Formula::Dia(f) | Formula::Box(f) => f.collect_props(out),
            Formula::Dep(args, target) => {
                for a in args {
                    a.collect_props(out);
                }
                target.collect_props(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::IDis(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }

    /// ASCII rendering with the minimal parentheses the precedence rules need.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn fold_right(
    parts: impl IntoIterator<Item = Formula>,
    join: fn(Formula, Formula) -> Formula,
) -> Option<Formula> {
    let parts: Vec<Formula> = parts.into_iter().collect();
    parts.into_iter().rev().reduce(|acc, f| join(f, acc))
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => f.write_str("T"),
            Formula::Bot => f.write_str("F"),
            Formula::Prop(p) => f.write_str(p),
            Formula::NegProp(p) => write!(f, "~{p}"),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IDis(l, r) => {
                let level = self.precedence();
                let op = match self {
                    Formula::And(..) => " & ",
                    Formula::Or(..) => " | ",
                    _ => " \\/ ",
                };
                write_child(f, l, l.precedence() <= level)?;
                f.write_str(op)?;
                write_child(f, r, r.precedence() < level)
            }
            Formula::Dia(g) => {
                f.write_str("<>")?;
                write_child(f, g, g.precedence() < 4)
            }
            Formula::Box(g) => {
                f.write_str("[]")?;
                write_child(f, g, g.precedence() < 4)
            }
            Formula::Dep(args, target) => {
                f.write_str("dep(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, "; {target})")
            }
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Top,
    Bot,
    Ident(String),
    Dep,
    Tilde,
    Amp,
    Bar,
    IDis,
    Dia,
    Box,
    LParen,
    RParen,
    Comma,
    Semi,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Top => "`T`".into(),
            Tok::Bot => "`F`".into(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Dep => "`dep`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::IDis => "`\\/`".into(),
            Tok::Dia => "`<>`".into(),
            Tok::Box => "`[]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let two = |i: usize, pat: &[u8; 2]| bytes.get(i..i + 2) == Some(&pat[..]);
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Tilde,
            b'&' => Tok::Amp,
            b'|' => Tok::Bar,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b';' => Tok::Semi,
            b'\\' if two(i, b"\\/") => {
                i += 1;
                Tok::IDis
            }
            b'<' if two(i, b"<>") => {
                i += 1;
                Tok::Dia
            }
            b'[' if two(i, b"[]") => {
                i += 1;
                Tok::Box
            }
            b'T' | b'F' => {
                if bytes
                    .get(i + 1)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
                {
                    return Err(ParseError::new(
                        i,
                        "identifiers must start with a lowercase letter",
                    ));
                }
                if c == b'T' {
                    Tok::Top
                } else {
                    Tok::Bot
                }
            }
            b'a'..=b'z' => {
                let mut j = i + 1;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                let word = &text[i..j];
                i = j;
                out.push((
                    start,
                    if word == "dep" {
                        Tok::Dep
                    } else {
                        Tok::Ident(word.to_string())
                    },
                ));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(i, format!("unexpected character `{ch}`")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {}", want.describe())))
        }
    }

    fn unexpected(&self, ctx: &str) -> ParseError {
        ParseError::new(
            self.pos(),
            format!("{ctx}, found {}", self.peek().describe()),
        )
    }

    fn idis(&mut self) -> Result<Formula, ParseError> {
        let l = self.or()?;
        if *self.peek() == Tok::IDis {
            self.bump();
            Ok(Formula::idis(l, self.idis()?))
        } else {
            Ok(l)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let l = self.and()?;
        if *self.peek() == Tok::Bar {
            self.bump();
            Ok(Formula::or(l, self.or()?))
        } else {
            Ok(l)
        }
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let l = self.unary()?;
        if *self.peek() == Tok::Amp {
            self.bump();
            Ok(Formula::and(l, self.and()?))
        } else {
            Ok(l)
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                match self.bump() {
                    Tok::Ident(p) => Ok(Formula::NegProp(p)),
                    _ => Err(ParseError::new(
                        self.toks[self.at.saturating_sub(1)].0,
                        "`~` may only be applied to a proposition symbol",
                    )),
                }
            }
            Tok::Dia => {
                self.bump();
                Ok(Formula::dia(self.unary()?))
            }
            Tok::Box => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Ident(p) => {
                self.bump();
                Ok(Formula::Prop(p))
            }
            Tok::LParen => {
                self.bump();
                let f = self.idis()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Dep => {
                self.bump();
                self.expect(Tok::LParen)?;
                let mut args = Vec::new();
                if *self.peek() != Tok::Semi {
                    loop {
                        args.push(self.dep_member()?);
                        match self.peek() {
                            Tok::Comma => {
                                self.bump();
                            }
                            Tok::Semi => break,
                            _ => {
                                return Err(
                                    self.unexpected("expected `,` or `;` in dependence atom")
                                )
                            }
                        }
                    }
                }
                self.expect(Tok::Semi)?;
                let target = self.dep_member()?;
                self.expect(Tok::RParen)?;
                Ok(Formula::dep(args, target))
            }
            _ => Err(self.unexpected("expected a formula")),
        }
    }

    fn dep_member(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        let f = self.idis()?;
        if f.is_ml() {
            Ok(f)
        } else {
            Err(ParseError::new(
                pos,
                "dependence atom members must not contain `\\/` or `dep`",
            ))
        }
    }
}

pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let f = p.idis()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("expected end of input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(p("p & ~q"), Formula::and(prop("p"), neg_prop("q")));
        assert_eq!(
            p("dep(p, <>q; r)"),
            Formula::dep(vec![prop("p"), Formula::dia(prop("q"))], prop("r"))
        );
        assert_eq!(
            p("p \\/ q | r"),
            Formula::idis(prop("p"), Formula::or(prop("q"), prop("r")))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            p("a & b & c"),
            Formula::and(prop("a"), Formula::and(prop("b"), prop("c")))
        );
        assert_eq!(
            p("<>a & b"),
            Formula::and(Formula::dia(prop("a")), prop("b"))
        );
        assert_eq!(
            p("a | b & c \\/ d"),
            Formula::idis(
                Formula::or(prop("a"), Formula::and(prop("b"), prop("c"))),
                prop("d")
            )
        );
        assert_eq!(p("[]<>~x_1"), Formula::boxed(Formula::dia(neg_prop("x_1"))));
    }

    #[test]
    fn renders_examples() {
        assert_eq!(prop("p").to_string(), "p");
        assert_eq!(Formula::dep(vec![], prop("q")).to_string(), "dep(; q)");
        assert_eq!(
            Formula::idis(prop("p"), Formula::and(prop("q"), prop("r"))).to_string(),
            "p \\/ q & r"
        );
        let left = Formula::and(Formula::and(prop("a"), prop("b")), prop("c"));
        assert_eq!(left.to_string(), "(a & b) & c");
        assert_eq!(
            Formula::dia(Formula::or(prop("a"), Formula::Bot)).to_string(),
            "<>(a | F)"
        );
    }

    #[test]
    fn parse_errors() {
        let e = parse("~(p & q)").unwrap_err();
        assert!(e.msg.contains("proposition"), "{e}");
        let e = parse("dep(p \\/ q; r)").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(parse("dep(dep(;p); q)").is_err());
        assert!(parse("~T").is_err());
        assert!(parse("p &").is_err());
        assert!(parse("(p").is_err());
        assert!(parse("P").is_err());
        assert!(parse("dep(p)").is_err());
        let e = parse("p # q").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(parse("  dep( ; q )  ").is_ok());
    }

    #[test]
    fn measures() {
        assert_eq!(p("p").modal_depth(), 0);
        assert_eq!(p("<>(p & []q)").modal_depth(), 2);
        assert_eq!(p("dep(<>p; q)").modal_depth(), 1);
        assert_eq!(p("p \\/ (q \\/ p)").occ_ivee(), 2);
        assert_eq!(p("p | q").occ_ivee(), 0);
        assert_eq!(p("p").symbol_size(), 1);
        assert_eq!(p("p & ~q").symbol_size(), 3);
        assert_eq!(p("<><>p").symbol_size(), 3);
        assert_eq!(p("dep(p; q)").symbol_size(), 3);
    }

    #[test]
    fn classification() {
        assert_eq!(p("<>p | q").classify().unwrap(), Fragment::ML);
        assert_eq!(p("dep(p; q)").classify().unwrap(), Fragment::MDL);
        assert_eq!(
            p("dep(~p; q) & dep(; r)").classify().unwrap(),
            Fragment::MDL
        );
        assert_eq!(p("dep(<>p; q)").classify().unwrap(), Fragment::EMDL);
        assert_eq!(
            p("dep(<>p; q) & dep(p; q)").classify().unwrap(),
            Fragment::EMDL
        );
        assert_eq!(
            p("dep(p; q) & dep(T; q)").classify().unwrap(),
            Fragment::EMDL
        );
        assert_eq!(p("p \\/ q").classify().unwrap(), Fragment::MLIDis);
        assert!(matches!(
            p("p \\/ dep(p; q)").classify(),
            Err(Error::MixedFragment)
        ));
        let bad = Formula::dep(vec![Formula::idis(prop("p"), prop("q"))], prop("r"));
        assert!(matches!(
            bad.classify(),
            Err(Error::InvalidDependenceMember(_))
        ));
    }

    #[test]
    fn lattice() {
        use Fragment::*;
        assert!(ML.le(EMDL) && MDL.le(EMDL) && ML.le(MLIDis));
        assert!(!MLIDis.le(EMDL) && !EMDL.le(MDL) && !MDL.le(MLIDis));
    }

    #[test]
    fn negation() {
        assert_eq!(p("p").negate_ml().unwrap(), p("~p"));
        assert_eq!(p("p & <>q").negate_ml().unwrap(), p("~p | []~q"));
        assert_eq!(Formula::Top.negate_ml().unwrap(), Formula::Bot);
        assert!(p("dep(; p)").negate_ml().is_err());
        assert!(p("p \\/ q").negate_ml().is_err());
    }

    #[test]
    fn big_folds() {
        assert_eq!(Formula::conj_all(vec![]), Formula::Top);
        assert_eq!(Formula::disj_all(vec![]), Formula::Bot);
        assert_eq!(
            Formula::conj_all(vec![prop("a"), prop("b"), prop("c")]),
            p("a & b & c")
        );
    }
}
