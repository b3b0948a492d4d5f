//! Readers for the three input languages and the formula syntax.
//!
//! All formats share one lexer: identifiers, `( ) [ ] , .`, `:-`, and `%`
//! line comments. Whitespace is insignificant.

use crate::adf::Adf;
use crate::error::{Error, Result};
use crate::logic::{is_atom_name, Formula};
use crate::nlp::{Program, ProgramBuilder};
use crate::translate::Setaf;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Dot,
    Neck,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Neck => "`:-`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

fn err_at(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        match c {
            '%' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            c if c.is_whitespace() => {
                bump(&mut chars);
            }
            '(' | ')' | '[' | ']' | ',' | '.' => {
                bump(&mut chars);
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBrack,
                    ']' => Tok::RBrack,
                    ',' => Tok::Comma,
                    _ => Tok::Dot,
                };
                out.push((tok, pos));
            }
            ':' => {
                bump(&mut chars);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars);
                    out.push((Tok::Neck, pos));
                } else {
                    return Err(err_at(pos, "expected `:-`"));
                }
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), pos));
            }
            other => return Err(err_at(pos, format!("unexpected character `{other}`"))),
        }
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser> {
        Ok(Parser {
            toks: lex(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn expect(&mut self, want: Tok) -> Result<Pos> {
        let (tok, pos) = self.next();
        if tok == want {
            Ok(pos)
        } else {
            Err(err_at(
                pos,
                format!("expected {}, found {}", want.describe(), tok.describe()),
            ))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos)> {
        match self.next() {
            (Tok::Ident(s), pos) => Ok((s, pos)),
            (tok, pos) => Err(err_at(
                pos,
                format!("expected identifier, found {}", tok.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<(String, Pos)> {
        let (name, pos) = self.ident()?;
        if name.starts_with(|c: char| c.is_ascii_uppercase() || c == '_') {
            return Err(err_at(
                pos,
                format!("`{name}` looks like a variable; only ground atoms are supported"),
            ));
        }
        if !is_atom_name(&name) {
            return Err(err_at(pos, format!("`{name}` is not a valid atom name")));
        }
        Ok((name, pos))
    }

    fn formula(&mut self) -> Result<Formula> {
        let (name, pos) = self.ident()?;
        if *self.peek() != Tok::LParen {
            self.at -= 1;
            return Ok(Formula::Atom(self.atom()?.0));
        }
        self.expect(Tok::LParen)?;
        let f = match name.as_str() {
            "c" => {
                let (k, kpos) = self.ident()?;
                match k.as_str() {
                    "v" => Formula::Verum,
                    "f" => Formula::Falsum,
                    _ => {
                        return Err(err_at(
                            kpos,
                            format!("expected `v` or `f` in constant, found `{k}`"),
                        ))
                    }
                }
            }
            "neg" => Formula::neg(self.formula()?),
            "and" | "or" => {
                let mut items = vec![self.formula()?];
                while *self.peek() == Tok::Comma {
                    self.next();
                    items.push(self.formula()?);
                }
                if name == "and" {
                    Formula::And(items)
                } else {
                    Formula::Or(items)
                }
            }
            _ => return Err(err_at(pos, format!("unknown connective `{name}`"))),
        };
        self.expect(Tok::RParen)?;
        Ok(f)
    }
}

/// Parses a single formula in file syntax.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    if !p.at_eof() {
        return Err(err_at(
            p.pos(),
            format!("unexpected {} after formula", p.peek().describe()),
        ));
    }
    Ok(f)
}

/// Parses the ADF format: `s(x).` declarations and `ac(x, F).` conditions.
pub fn parse_adf(text: &str) -> Result<Adf> {
    let mut p = Parser::new(text)?;
    let mut statements: Vec<(String, Pos)> = Vec::new();
    let mut conditions: Vec<(String, Formula, Pos)> = Vec::new();
    while !p.at_eof() {
        let (kw, pos) = p.ident()?;
        p.expect(Tok::LParen)?;
        match kw.as_str() {
            "s" => {
                let (name, npos) = p.atom()?;
                if statements.iter().any(|(s, _)| *s == name) {
                    return Err(err_at(npos, format!("statement `{name}` declared twice")));
                }
                statements.push((name, npos));
            }
            "ac" => {
                let (name, npos) = p.atom()?;
                p.expect(Tok::Comma)?;
                let f = p.formula()?;
                conditions.push((name, f, npos));
            }
            _ => return Err(err_at(pos, format!("expected `s` or `ac`, found `{kw}`"))),
        }
        p.expect(Tok::RParen)?;
        p.expect(Tok::Dot)?;
    }

    let declared = |n: &str| statements.iter().any(|(s, _)| s == n);
    let mut acceptance: Vec<Option<Formula>> = vec![None; statements.len()];
    for (name, f, pos) in conditions {
        let i = statements
            .iter()
            .position(|(s, _)| *s == name)
            .ok_or_else(|| {
                err_at(
                    pos,
                    format!("acceptance condition for undeclared statement `{name}`"),
                )
            })?;
        if acceptance[i].is_some() {
            return Err(err_at(
                pos,
                format!("statement `{name}` has more than one acceptance condition"),
            ));
        }
        if let Some(a) = f.atoms().into_iter().find(|a| !declared(a)) {
            return Err(err_at(
                pos,
                format!("condition of `{name}` mentions undeclared statement `{a}`"),
            ));
        }
        acceptance[i] = Some(f);
    }
    let mut pairs = Vec::with_capacity(statements.len());
    for ((name, pos), f) in statements.into_iter().zip(acceptance) {
        match f {
            Some(f) => pairs.push((name, f)),
            None => {
                return Err(err_at(
                    pos,
                    format!("statement `{name}` has no acceptance condition"),
                ))
            }
        }
    }
    Adf::new(pairs)
}

/// Parses a ground normal logic program: `h.` or `h :- l1, ..., ln.` where
/// each `li` is `atom` or `not atom`.
pub fn parse_program(text: &str) -> Result<Program> {
    let mut p = Parser::new(text)?;
    let mut b = ProgramBuilder::new();
    while !p.at_eof() {
        if *p.peek() == Tok::Neck {
            return Err(err_at(
                p.pos(),
                "integrity constraints (rules without head) are not supported",
            ));
        }
        let (head, _) = p.atom()?;
        let head = b.intern(&head);
        let mut pos_body = Vec::new();
        let mut neg_body = Vec::new();
        match p.next() {
            (Tok::Dot, _) => {}
            (Tok::Neck, _) => loop {
                let negated = matches!(p.peek(), Tok::Ident(s) if s == "not")
                    && matches!(p.peek2(), Tok::Ident(_));
                if negated {
                    p.next();
                }
                let (atom, _) = p.atom()?;
                let atom = b.intern(&atom);
                if negated {
                    neg_body.push(atom);
                } else {
                    pos_body.push(atom);
                }
                match p.next() {
                    (Tok::Comma, _) => continue,
                    (Tok::Dot, _) => break,
                    (tok, pos) => {
                        return Err(err_at(
                            pos,
                            format!("expected `,` or `.`, found {}", tok.describe()),
                        ))
                    }
                }
            },
            (tok, pos) => {
                return Err(err_at(
                    pos,
                    format!("expected `.` or `:-`, found {}", tok.describe()),
                ))
            }
        }
        b.add_rule(head, pos_body, neg_body);
    }
    Ok(b.build())
}

/// Parses the SETAF format: `arg(x).` and `att([x1,...,xn], y).`
pub fn parse_setaf(text: &str) -> Result<Setaf> {
    let mut p = Parser::new(text)?;
    let mut args: Vec<String> = Vec::new();
    let mut attacks: Vec<(Vec<String>, String, Pos)> = Vec::new();
    while !p.at_eof() {
        let (kw, pos) = p.ident()?;
        p.expect(Tok::LParen)?;
        match kw.as_str() {
            "arg" => {
                let (name, npos) = p.atom()?;
                if args.contains(&name) {
                    return Err(err_at(npos, format!("argument `{name}` declared twice")));
                }
                args.push(name);
            }
            "att" => {
                let lpos = p.expect(Tok::LBrack)?;
                let mut set = Vec::new();
                if *p.peek() == Tok::RBrack {
                    return Err(err_at(lpos, "attacking set must be nonempty"));
                }
                loop {
                    set.push(p.atom()?.0);
                    match p.next() {
                        (Tok::Comma, _) => continue,
                        (Tok::RBrack, _) => break,
                        (tok, pos) => {
                            return Err(err_at(
                                pos,
                                format!("expected `,` or `]`, found {}", tok.describe()),
                            ))
                        }
                    }
                }
                p.expect(Tok::Comma)?;
                let (target, _) = p.atom()?;
                attacks.push((set, target, pos));
            }
            _ => {
                return Err(err_at(
                    pos,
                    format!("expected `arg` or `att`, found `{kw}`"),
                ))
            }
        }
        p.expect(Tok::RParen)?;
        p.expect(Tok::Dot)?;
    }
    let mut sf = Setaf::new(args);
    for (set, target, pos) in attacks {
        sf.add_attack(set, target)
            .map_err(|e| err_at(pos, e.to_string()))?;
    }
    Ok(sf)
}
