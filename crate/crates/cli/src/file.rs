//! The `.hopf` definition format.
//!
//! ```text
//! hopf B1
//! gen X weight 1
//! gen Y weight 1
//! gen Z weight 2
//! rel [Y,X] = Y
//! coprod Z = 1@Z + X@Y + Z@1
//! antipode Z = -Z + X*Y
//! sub L0 side hopf {
//!   gen Y weight 1; gen X weight 1
//!   rel [X,Y] = Y
//!   embed Y = Y; embed X = X
//!   chi X = 1
//! }
//! ```
//!
//! Statements are separated by newlines or `;`, and `#` starts a comment.
//! Expressions are stored as parsed terms, so printing and reparsing gives
//! back an equal value.

use std::collections::BTreeSet;
use std::fmt;

use hopfforge::coideal::Side;
use hopfforge::expr::{self, format_word, Word};
use hopfforge::scalar::{format_scalar, parse_scalar, Scalar};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub type Poly = Vec<(Scalar, Word)>;
pub type TensorPoly = Vec<(Scalar, Vec<Word>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub weight: u32,
}

/// `[A,B] = value`, with `A` declared after `B`. Indices are positions in
/// the enclosing generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub a: usize,
    pub b: usize,
    pub value: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubBlock {
    pub name: String,
    pub side: Side,
    pub generators: Vec<GenDecl>,
    pub relations: Vec<Relation>,
    /// Host polynomial per subalgebra generator, in declaration order.
    pub embeds: Vec<Poly>,
    /// Character values, all or none.
    pub chi: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinitionFile {
    pub name: String,
    pub generators: Vec<GenDecl>,
    pub relations: Vec<Relation>,
    pub coproducts: Vec<TensorPoly>,
    /// Generators with an explicit `counit G = 0` line.
    pub counits: Vec<usize>,
    pub antipodes: Option<Vec<Poly>>,
    pub subs: Vec<SubBlock>,
}

impl DefinitionFile {
    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }
}

impl SubBlock {
    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }
}

/// One `;`-separated statement, or a lone brace.
#[derive(Clone, Debug)]
struct Stmt<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Stmt<'_> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            column: self.column + offset,
            message: message.into(),
        })
    }

    /// Char offset of a subslice within this statement.
    fn offset_of(&self, part: &str) -> usize {
        let byte = part.as_ptr() as usize - self.text.as_ptr() as usize;
        self.text[..byte].chars().count()
    }
}

fn split_statements(text: &str) -> Vec<Stmt<'_>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut start = 0;
        let mut push = |from: usize, to: usize| {
            let piece = &line[from..to];
            let trimmed = piece.trim_start();
            let lead = piece.len() - trimmed.len();
            let trimmed = trimmed.trim_end();
            if !trimmed.is_empty() {
                out.push(Stmt {
                    text: trimmed,
                    line: n + 1,
                    column: line[..from + lead].chars().count() + 1,
                });
            }
        };
        for (i, c) in line.char_indices() {
            match c {
                ';' => {
                    push(start, i);
                    start = i + 1;
                }
                '{' | '}' => {
                    push(start, i);
                    push(i, i + 1);
                    start = i + 1;
                }
                _ => {}
            }
        }
        push(start, line.len());
    }
    out
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Whitespace-separated words with their char offsets.
fn words(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out.into_iter().map(|(b, w)| (s[..b].chars().count(), w)).collect()
}

/// Generators in scope with their declaration lines.
#[derive(Default)]
struct Scope {
    gens: Vec<GenDecl>,
    relations: Vec<Relation>,
    seen_pairs: BTreeSet<(usize, usize)>,
}

impl Scope {
    fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    fn index(&self, st: &Stmt, offset: usize, name: &str) -> Result<usize, ParseError> {
        match self.gens.iter().position(|g| g.name == name) {
            Some(i) => Ok(i),
            None => st.err(offset, format!("undeclared generator `{name}`")),
        }
    }

    fn gen(&mut self, st: &Stmt, rest: &str) -> Result<(), ParseError> {
        let base = st.offset_of(rest);
        let w = words(rest);
        let [(o1, name), (o2, kw), (o3, weight)] = w[..] else {
            return st.err(base, "expected `gen <Name> weight <int>`");
        };
        if !is_ident(name) {
            return st.err(base + o1, format!("invalid generator name `{name}`"));
        }
        if kw != "weight" {
            return st.err(base + o2, "expected `weight`");
        }
        let weight: u32 = match weight.parse() {
            Ok(w) if w > 0 => w,
            _ => return st.err(base + o3, format!("weight must be a positive integer, found `{weight}`")),
        };
        if self.gens.iter().any(|g| g.name == name) {
            return st.err(base + o1, format!("duplicate declaration of generator `{name}`"));
        }
        self.gens.push(GenDecl {
            name: name.to_string(),
            weight,
        });
        Ok(())
    }

    fn rel(&mut self, st: &Stmt, rest: &str) -> Result<(), ParseError> {
        let base = st.offset_of(rest);
        let Some(inner) = rest.strip_prefix('[') else {
            return st.err(base, "expected `[A,B] = <poly>`");
        };
        let Some((pair, tail)) = inner.split_once(']') else {
            return st.err(base, "unclosed `[`");
        };
        let Some((a, b)) = pair.split_once(',') else {
            return st.err(base + 1, "expected two generators `[A,B]`");
        };
        let ia = self.index(st, st.offset_of(a.trim_start()), a.trim())?;
        let ib = self.index(st, st.offset_of(b.trim_start()), b.trim())?;
        if ia <= ib {
            let msg = if ia == ib {
                "a generator commutes with itself".to_string()
            } else {
                format!(
                    "write relations as [{},{}]: the first generator must be declared later",
                    b.trim(),
                    a.trim()
                )
            };
            return st.err(base, msg);
        }
        if !self.seen_pairs.insert((ia, ib)) {
            return st.err(base, format!("duplicate relation [{},{}]", a.trim(), b.trim()));
        }
        let value = rhs(st, tail)?;
        if let Some(at) = value.find('@') {
            return st.err(st.offset_of(value) + value[..at].chars().count(), "tensor syntax not allowed in relations");
        }
        let value = poly(st, value, &self.names())?;
        for (_, w) in &value {
            if w.windows(2).any(|p| p[0].0 >= p[1].0) {
                return st.err(
                    st.offset_of(rest),
                    format!("relation values must use ordered monomials, found `{}`", format_word(w, &self.names())),
                );
            }
        }
        self.relations.push(Relation { a: ia, b: ib, value });
        Ok(())
    }
}

/// Text after `=`.
fn rhs<'a>(st: &Stmt, tail: &'a str) -> Result<&'a str, ParseError> {
    let t = tail.trim_start();
    match t.strip_prefix('=') {
        Some(v) if !v.trim().is_empty() => Ok(v.trim()),
        Some(_) => st.err(st.offset_of(t) + 1, "missing expression after `=`"),
        None => st.err(st.offset_of(t), "expected `=`"),
    }
}

fn poly(st: &Stmt, text: &str, names: &[String]) -> Result<Poly, ParseError> {
    expr::parse_poly(text, names).or_else(|e| st.err(st.offset_of(text) + e.column - 1, e.message))
}

fn tensor(st: &Stmt, text: &str, names: &[String]) -> Result<TensorPoly, ParseError> {
    expr::parse_tensor(text, names, 2).or_else(|e| st.err(st.offset_of(text) + e.column - 1, e.message))
}

fn scalar(st: &Stmt, text: &str) -> Result<Scalar, ParseError> {
    parse_scalar(text).or_else(|_| st.err(st.offset_of(text), format!("expected a rational, found `{text}`")))
}

/// `<Name> = <expr>`: returns the generator index and expression text.
fn assignment<'a>(st: &Stmt, rest: &'a str, scope: &Scope) -> Result<(usize, &'a str), ParseError> {
    let (name, tail) = rest.split_once('=').map_or((rest, ""), |(n, _)| (n, &rest[n.len()..]));
    let name_t = name.trim();
    if name_t.is_empty() {
        return st.err(st.offset_of(rest), "expected `<Name> = <expression>`");
    }
    let i = scope.index(st, st.offset_of(name.trim_start()), name_t)?;
    Ok((i, rhs(st, tail)?))
}

fn fill<T>(st: &Stmt, slot: &mut Option<T>, value: T, what: &str, name: &str) -> Result<(), ParseError> {
    if slot.is_some() {
        return st.err(0, format!("duplicate {what} for `{name}`"));
    }
    *slot = Some(value);
    Ok(())
}

struct OpenSub<'a> {
    header: Stmt<'a>,
    name: String,
    side: Side,
    scope: Scope,
    embeds: Vec<Option<Poly>>,
    chi: Vec<Option<Scalar>>,
    open: bool,
}

impl OpenSub<'_> {
    fn finish(self) -> Result<SubBlock, ParseError> {
        let names = self.scope.names();
        let mut embeds = Vec::new();
        for (i, e) in self.embeds.into_iter().enumerate() {
            match e {
                Some(p) => embeds.push(p),
                None => return self.header.err(0, format!("sub `{}`: no embed for `{}`", self.name, names[i])),
            }
        }
        let chi = if self.chi.iter().all(Option::is_none) {
            None
        } else if let Some(i) = self.chi.iter().position(Option::is_none) {
            return self.header.err(0, format!("sub `{}`: chi given for some generators but not `{}`", self.name, names[i]));
        } else {
            Some(self.chi.into_iter().flatten().collect())
        };
        Ok(SubBlock {
            name: self.name,
            side: self.side,
            generators: self.scope.gens,
            relations: self.scope.relations,
            embeds,
            chi,
        })
    }
}

pub fn parse(text: &str) -> Result<DefinitionFile, ParseError> {
    let stmts = split_statements(text);
    let eof = Stmt {
        text: "",
        line: text.lines().count().max(1),
        column: 1,
    };
    let mut iter = stmts.iter().peekable();
    let name = match iter.next() {
        None => return eof.err(0, "no algebra header"),
        Some(st) => {
            let w = words(st.text);
            match w[..] {
                [(_, "hopf"), (_, name)] if is_ident(name) => name.to_string(),
                [(_, "hopf"), (o, name)] => return st.err(o, format!("invalid algebra name `{name}`")),
                [(_, "hopf")] => return st.err(0, "expected `hopf <name>`"),
                _ => return st.err(0, "no algebra header: the first statement must be `hopf <name>`"),
            }
        }
    };

    let mut host = Scope::default();
    let mut coproducts: Vec<Option<TensorPoly>> = Vec::new();
    let mut counits: Vec<Option<()>> = Vec::new();
    let mut antipodes: Vec<Option<Poly>> = Vec::new();
    let mut gen_lines: Vec<Stmt> = Vec::new();
    let mut subs: Vec<SubBlock> = Vec::new();
    let mut current: Option<OpenSub> = None;

    for st in iter {
        let (kw, rest) = st.text.split_once(char::is_whitespace).unwrap_or((st.text, ""));
        let rest = rest.trim_start();
        if let Some(sub) = current.as_mut() {
            if !sub.open {
                if st.text != "{" {
                    return st.err(0, "expected `{` after sub header");
                }
                sub.open = true;
                continue;
            }
            match kw {
                "}" => {
                    let done = current.take().expect("open sub");
                    if subs.iter().any(|s| s.name == done.name) {
                        return done.header.err(0, format!("duplicate declaration of sub `{}`", done.name));
                    }
                    subs.push(done.finish()?);
                }
                "gen" => {
                    sub.scope.gen(st, rest)?;
                    sub.embeds.push(None);
                    sub.chi.push(None);
                }
                "rel" => sub.scope.rel(st, rest)?,
                "embed" => {
                    let (i, value) = assignment(st, rest, &sub.scope)?;
                    let p = poly(st, value, &host.names())?;
                    fill(st, &mut sub.embeds[i], p, "embed", &sub.scope.gens[i].name)?;
                }
                "chi" => {
                    let (i, value) = assignment(st, rest, &sub.scope)?;
                    let c = scalar(st, value)?;
                    fill(st, &mut sub.chi[i], c, "chi", &sub.scope.gens[i].name)?;
                }
                _ => return st.err(0, format!("unexpected `{kw}` inside sub block")),
            }
            continue;
        }
        match kw {
            "hopf" => return st.err(0, "duplicate algebra header"),
            "gen" => {
                host.gen(st, rest)?;
                coproducts.push(None);
                counits.push(None);
                antipodes.push(None);
                gen_lines.push(st.clone());
            }
            "rel" => host.rel(st, rest)?,
            "coprod" => {
                let (i, value) = assignment(st, rest, &host)?;
                let t = tensor(st, value, &host.names())?;
                fill(st, &mut coproducts[i], t, "coprod", &host.gens[i].name)?;
            }
            "counit" => {
                let (i, value) = assignment(st, rest, &host)?;
                if !scalar(st, value)?.is_zero() {
                    return st.err(st.offset_of(value), format!("counit of `{}` must be 0", host.gens[i].name));
                }
                fill(st, &mut counits[i], (), "counit", &host.gens[i].name)?;
            }
            "antipode" => {
                let (i, value) = assignment(st, rest, &host)?;
                let p = poly(st, value, &host.names())?;
                fill(st, &mut antipodes[i], p, "antipode", &host.gens[i].name)?;
            }
            "sub" => {
                let w = words(rest);
                let base = st.offset_of(rest);
                let [(o1, sname), (_, "side"), (o3, side)] = w[..] else {
                    return st.err(base, "expected `sub <name> side left|right|hopf {`");
                };
                if !is_ident(sname) {
                    return st.err(base + o1, format!("invalid sub name `{sname}`"));
                }
                let side: Side = match side.parse() {
                    Ok(s) => s,
                    Err(_) => return st.err(base + o3, format!("unknown side `{side}`; expected left, right or hopf")),
                };
                current = Some(OpenSub {
                    header: st.clone(),
                    name: sname.to_string(),
                    side,
                    scope: Scope::default(),
                    embeds: Vec::new(),
                    chi: Vec::new(),
                    open: false,
                });
            }
            "embed" | "chi" => return st.err(0, format!("`{kw}` is only allowed inside a sub block")),
            "{" | "}" => return st.err(0, format!("unexpected `{kw}`")),
            _ => return st.err(0, format!("unknown statement `{kw}`")),
        }
    }
    if let Some(sub) = current {
        let name = sub.name.clone();
        return sub.header.err(0, format!("unclosed block for sub `{name}`"));
    }
    if host.gens.is_empty() {
        return eof.err(0, "no generators declared");
    }
    let mut coprods = Vec::new();
    for (i, c) in coproducts.into_iter().enumerate() {
        match c {
            Some(t) => coprods.push(t),
            None => return gen_lines[i].err(0, format!("no coprod line for `{}`", host.gens[i].name)),
        }
    }
    let antipodes = if antipodes.iter().all(Option::is_none) {
        None
    } else if let Some(i) = antipodes.iter().position(Option::is_none) {
        return gen_lines[i].err(0, format!("antipode given for some generators but not `{}`", host.gens[i].name));
    } else {
        Some(antipodes.into_iter().flatten().collect())
    };
    let counits = counits
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.map(|_| i))
        .collect();
    Ok(DefinitionFile {
        name,
        generators: host.gens,
        relations: host.relations,
        coproducts: coprods,
        counits,
        antipodes,
        subs,
    })
}

/// `c*w` with the sign folded into the separator by the caller.
fn term(c: &Scalar, legs: &[Word], names: &[String]) -> String {
    let shown: Vec<String> = legs.iter().map(|w| format_word(w, names)).collect();
    let first_empty = legs.first().is_some_and(|w| w.is_empty());
    let rest = shown[1..].iter().map(|s| format!("@{s}")).collect::<String>();
    if c.is_one() {
        format!("{}{rest}", shown[0])
    } else if first_empty {
        format!("{}{rest}", format_scalar(c))
    } else {
        format!("{}*{}{rest}", format_scalar(c), shown[0])
    }
}

fn show_terms<'a>(terms: impl Iterator<Item = (&'a Scalar, Vec<Word>)>, names: &[String]) -> String {
    let mut out = String::new();
    for (k, (c, legs)) in terms.enumerate() {
        let neg = c.is_negative();
        let body = term(&c.abs(), &legs, names);
        match (k, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub fn show_poly(p: &Poly, names: &[String]) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    show_terms(p.iter().map(|(c, w)| (c, vec![w.clone()])), names)
}

pub fn show_tensor(t: &TensorPoly, names: &[String]) -> String {
    show_terms(t.iter().map(|(c, legs)| (c, legs.clone())), names)
}

fn write_scope(
    f: &mut fmt::Formatter<'_>,
    indent: &str,
    gens: &[GenDecl],
    relations: &[Relation],
) -> fmt::Result {
    let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
    for g in gens {
        writeln!(f, "{indent}gen {} weight {}", g.name, g.weight)?;
    }
    for r in relations {
        writeln!(
            f,
            "{indent}rel [{},{}] = {}",
            names[r.a],
            names[r.b],
            show_poly(&r.value, &names)
        )?;
    }
    Ok(())
}

impl fmt::Display for DefinitionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        writeln!(f, "hopf {}", self.name)?;
        write_scope(f, "", &self.generators, &self.relations)?;
        for (i, t) in self.coproducts.iter().enumerate() {
            writeln!(f, "coprod {} = {}", names[i], show_tensor(t, &names))?;
        }
        for &i in &self.counits {
            writeln!(f, "counit {} = 0", names[i])?;
        }
        if let Some(s) = &self.antipodes {
            for (i, p) in s.iter().enumerate() {
                writeln!(f, "antipode {} = {}", names[i], show_poly(p, &names))?;
            }
        }
        for sub in &self.subs {
            let sub_names = sub.names();
            writeln!(f, "sub {} side {} {{", sub.name, sub.side)?;
            write_scope(f, "  ", &sub.generators, &sub.relations)?;
            for (i, p) in sub.embeds.iter().enumerate() {
                writeln!(f, "  embed {} = {}", sub_names[i], show_poly(p, &names))?;
            }
            if let Some(chi) = &sub.chi {
                for (i, c) in chi.iter().enumerate() {
                    writeln!(f, "  chi {} = {}", sub_names[i], format_scalar(c))?;
                }
            }
            writeln!(f, "}}")?;
        }
        Ok(())
    }
}
