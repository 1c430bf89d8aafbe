use std::collections::HashSet;

use super::{DefinedRelation, Formula};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
    Dot,
    Define,
    Lt,
    Gt,
    Eq,
    And,
    Or,
    Not,
    Arrow,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(k) => format!("`{k}`"),
            Tok::End => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Dot => ".",
            Tok::Define => ":=",
            Tok::Lt => "<",
            Tok::Gt => ">",
            Tok::Eq => "=",
            Tok::And => "&",
            Tok::Or => "|",
            Tok::Not => "!",
            Tok::Arrow => "->",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut i, &mut col);
            continue;
        }
        let next = chars.get(i + 1).copied();
        let tok = if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: tl,
                column: tc,
            });
            continue;
        } else if c.is_ascii_digit()
            || ((c == '-' || c == '+') && next.is_some_and(|d| d.is_ascii_digit()))
        {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let lexeme: String = chars[start..i].iter().collect();
            let k = lexeme
                .parse::<i64>()
                .map_err(|_| syntax(tl, tc, format!("integer literal `{lexeme}` out of range")))?;
            out.push(Spanned {
                tok: Tok::Int(k),
                line: tl,
                column: tc,
            });
            continue;
        } else {
            match (c, next) {
                (':', Some('=')) => {
                    advance(2, &mut i, &mut col);
                    Tok::Define
                }
                ('-', Some('>')) => {
                    advance(2, &mut i, &mut col);
                    Tok::Arrow
                }
                _ => {
                    let t = match c {
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        ',' => Tok::Comma,
                        '.' => Tok::Dot,
                        '<' => Tok::Lt,
                        '>' => Tok::Gt,
                        '=' => Tok::Eq,
                        '&' => Tok::And,
                        '|' => Tok::Or,
                        '!' => Tok::Not,
                        _ => return Err(syntax(tl, tc, format!("unexpected character `{c}`"))),
                    };
                    advance(1, &mut i, &mut col);
                    t
                }
            }
        };
        out.push(Spanned {
            tok,
            line: tl,
            column: tc,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

const KEYWORDS: [&str; 3] = ["exists", "forall", "diff"];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> Error {
        let t = &self.toks[self.pos];
        syntax(
            t.line,
            t.column,
            format!("expected {expected}, found {}", t.tok.describe()),
        )
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(&format!("`{}`", tok.symbol())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.error_here(what)),
        }
    }

    fn var_list(&mut self) -> Result<Vec<String>> {
        self.expect(Tok::LParen)?;
        let mut vars = vec![self.ident("variable")?];
        while *self.peek() == Tok::Comma {
            self.bump();
            vars.push(self.ident("variable")?);
        }
        self.expect(Tok::RParen)?;
        Ok(vars)
    }

    fn definition(&mut self) -> Result<DefinedRelation> {
        let name = self.ident("relation name")?;
        let free_vars = self.var_list()?;
        self.expect(Tok::Define)?;
        let body = self.form()?;
        if *self.peek() != Tok::End {
            return Err(self.error_here("end of input"));
        }
        Ok(DefinedRelation {
            name,
            free_vars,
            body,
        })
    }

    fn quantifier(&mut self) -> Option<bool> {
        match self.peek() {
            Tok::Ident(s) if s == "exists" => Some(true),
            Tok::Ident(s) if s == "forall" => Some(false),
            _ => None,
        }
    }

    fn form(&mut self) -> Result<Formula> {
        if let Some(is_exists) = self.quantifier() {
            self.bump();
            let v = self.ident("bound variable")?;
            self.expect(Tok::Dot)?;
            let body = Box::new(self.form()?);
            return Ok(if is_exists {
                Formula::Exists(v, body)
            } else {
                Formula::Forall(v, body)
            });
        }
        self.imp()
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.imp_rhs()?;
            return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    // quantifiers after `->` keep maximal scope
    fn imp_rhs(&mut self) -> Result<Formula> {
        if self.quantifier().is_some() {
            self.form()
        } else {
            self.imp()
        }
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Tok::LParen => {
                self.bump();
                let f = self.form()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(_) if self.quantifier().is_some() => self.form(),
            Tok::Ident(s) if s == "diff" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let a = self.ident("variable")?;
                self.expect(Tok::Comma)?;
                let b = self.ident("variable")?;
                self.expect(Tok::Comma)?;
                let k = match self.peek().clone() {
                    Tok::Int(k) => {
                        self.bump();
                        k
                    }
                    _ => return Err(self.error_here("integer")),
                };
                self.expect(Tok::RParen)?;
                Ok(Formula::Diff(a, b, k))
            }
            Tok::Ident(_) if *self.peek2() == Tok::LParen => {
                let name = self.ident("relation name")?;
                let vars = self.var_list()?;
                Ok(Formula::Rel(name, vars))
            }
            Tok::Ident(_) => {
                let a = self.ident("variable")?;
                let op = self.peek().clone();
                match op {
                    Tok::Lt | Tok::Gt | Tok::Eq => {
                        self.bump();
                    }
                    _ => return Err(self.error_here("`<`, `>` or `=`")),
                }
                let b = self.ident("variable")?;
                Ok(match op {
                    Tok::Lt => Formula::Lt(a, b),
                    Tok::Gt => Formula::Lt(b, a),
                    _ => Formula::Eq(a, b),
                })
            }
            _ => Err(self.error_here("formula")),
        }
    }
}

/// Parses a definition `NAME(vars) := formula`.
///
/// Fails with a positioned syntax error, a duplicate free variable, or an
/// unbound variable. Relation arities are checked at evaluation time.
pub fn parse(text: &str) -> Result<DefinedRelation> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let d = p.definition()?;
    let mut seen = HashSet::new();
    for v in &d.free_vars {
        if !seen.insert(v.as_str()) {
            return Err(Error::DuplicateVariable(v.clone()));
        }
    }
    if let Some(v) = d
        .body
        .free_vars()
        .into_iter()
        .find(|v| !seen.contains(v.as_str()))
    {
        return Err(Error::UnboundVariable(v));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::print;
    use proptest::prelude::*;

    const B_TEXT: &str = "B(x,y,z) := (x<y & y<z) | (x>y & y>z)";

    #[test]
    fn parses_between_definition() {
        let d = parse(B_TEXT).unwrap();
        assert_eq!(d.name, "B");
        assert_eq!(d.arity(), 3);
        let expected = Formula::or(
            Formula::and(Formula::lt("x", "y"), Formula::lt("y", "z")),
            Formula::and(Formula::lt("y", "x"), Formula::lt("z", "y")),
        );
        assert_eq!(d.body, expected);
    }

    #[test]
    fn parses_identity() {
        let d = parse("Id(x) := x=x").unwrap();
        assert_eq!(d.arity(), 1);
        assert_eq!(d.body, Formula::eq("x", "x"));
    }

    #[test]
    fn unbound_variable() {
        assert_eq!(
            parse("Bad(x) := y<x").unwrap_err(),
            Error::UnboundVariable("y".into())
        );
        assert!(parse("Ok(x) := exists y. y<x").is_ok());
        assert_eq!(
            parse("D(x,x) := x=x").unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("B(x) :=\n  x < ").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 7)),
            e => panic!("unexpected {e:?}"),
        }
        match parse("B(x) := x ? x").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (1, 11)),
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse("B(x) := x<x )").is_err());
        assert!(parse("B(x) x<x").is_err());
    }

    #[test]
    fn precedence() {
        let d = parse("P(a,b,c) := !a<b & b<c | a=c -> a<c -> b<c").unwrap();
        let not_ab = Formula::negate(Formula::lt("a", "b"));
        let conj = Formula::and(not_ab, Formula::lt("b", "c"));
        let disj = Formula::or(conj, Formula::eq("a", "c"));
        let expected = Formula::Implies(
            Box::new(disj),
            Box::new(Formula::Implies(
                Box::new(Formula::lt("a", "c")),
                Box::new(Formula::lt("b", "c")),
            )),
        );
        assert_eq!(d.body, expected);
    }

    #[test]
    fn quantifier_scope_is_maximal() {
        let d = parse("Q(x) := exists y. x<y & forall z. z<y | z=y").unwrap();
        let expected = Formula::exists(
            "y",
            Formula::and(
                Formula::lt("x", "y"),
                Formula::forall(
                    "z",
                    Formula::or(Formula::lt("z", "y"), Formula::eq("z", "y")),
                ),
            ),
        );
        assert_eq!(d.body, expected);
    }

    #[test]
    fn diff_and_relation_atoms() {
        let d = parse("N(x,y) := diff(x,y,-2) | diff( x , y , +1 ) | R(y,x)").unwrap();
        let expected = Formula::or(
            Formula::or(
                Formula::Diff("x".into(), "y".into(), -2),
                Formula::Diff("x".into(), "y".into(), 1),
            ),
            Formula::Rel("R".into(), vec!["y".into(), "x".into()]),
        );
        assert_eq!(d.body, expected);
        assert!(parse("N(x,y) := diff(x,y)").is_err());
    }

    #[test]
    fn round_trip_between() {
        let d = parse(B_TEXT).unwrap();
        let printed = print(&d);
        assert_eq!(printed, "B(x,y,z) := ((x<y & y<z) | (y<x & z<y))");
        assert_eq!(parse(&printed).unwrap(), d);
    }

    const VARS: [&str; 3] = ["x", "y", "z"];

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let var = prop::sample::select(&VARS[..]).prop_map(String::from);
        let leaf = prop_oneof![
            (var.clone(), var.clone()).prop_map(|(a, b)| Formula::Lt(a, b)),
            (var.clone(), var.clone()).prop_map(|(a, b)| Formula::Eq(a, b)),
            (var.clone(), var.clone(), -3i64..=3).prop_map(|(a, b, k)| Formula::Diff(a, b, k)),
            prop::collection::vec(var.clone(), 1..4).prop_map(|vs| Formula::Rel("R".into(), vs)),
        ];
        leaf.prop_recursive(4, 32, 2, move |inner| {
            let var = prop::sample::select(&VARS[..]).prop_map(String::from);
            prop_oneof![
                inner.clone().prop_map(|f| Formula::Not(Box::new(f))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| Formula::Implies(Box::new(a), Box::new(b))),
                (var.clone(), inner.clone()).prop_map(|(v, f)| Formula::Exists(v, Box::new(f))),
                (var, inner).prop_map(|(v, f)| Formula::Forall(v, Box::new(f))),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(body in arb_formula()) {
            let d = DefinedRelation {
                name: "T".into(),
                free_vars: VARS.iter().map(|s| s.to_string()).collect(),
                body,
            };
            let printed = print(&d);
            prop_assert_eq!(parse(&printed).unwrap(), d);
        }
    }
}
