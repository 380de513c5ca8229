//! Expression language for families: cone and meet literals, thread
//! lists, antichain literals, catalogue names, and the `*` / `|`
//! operators, with `*` binding tighter.

use std::fmt;

use chromatic_monoid::{
    catalogue3, star, thread_set, u_of, v_of, LevelSet, ThreadList, UpSet, N_STAR_CAP,
};

/// Abstract syntax for a family expression at a fixed height.
#[derive(Clone, Debug)]
pub enum UpSetExpr {
    /// `u{…}` — the principal cone on a set.
    Cone(LevelSet),
    /// `v{…}` — everything meeting a set.
    Meet(LevelSet),
    /// `T({…},…)` — the thread set of a pick list.
    Thread(ThreadList),
    /// `⟨{…},…⟩` (ASCII `<…>`) — upward closure of the listed members.
    Antichain(Vec<LevelSet>),
    /// A catalogue name, resolved at parse time (height 3 only).
    Named(String, UpSet),
    /// `full` — every set; the identity of the product.
    Full,
    /// `empty` — no sets; the absorbing element.
    Empty,
    Product(Box<UpSetExpr>, Box<UpSetExpr>),
    Union(Box<UpSetExpr>, Box<UpSetExpr>),
}

/// Parse failure, with the byte offset it happened at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses an expression against a declared height; every level literal is
/// range-checked during the parse.
pub fn parse_expr(text: &str, n_star: u8) -> Result<UpSetExpr, ParseError> {
    if n_star > N_STAR_CAP {
        return Err(ParseError {
            position: 0,
            message: format!("height {n_star} exceeds the cap of {N_STAR_CAP}"),
        });
    }
    let mut p = Parser {
        text,
        pos: 0,
        n_star,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.text.len() {
        return p.fail(p.pos, "unexpected trailing input");
    }
    Ok(e)
}

/// Evaluates a parsed expression; cannot fail once the parse range-checked
/// every literal.
pub fn eval_expr(e: &UpSetExpr, n_star: u8) -> UpSet {
    match e {
        UpSetExpr::Cone(a) => u_of(a),
        UpSetExpr::Meet(a) => v_of(a),
        UpSetExpr::Thread(t) => thread_set(t),
        UpSetExpr::Antichain(members) => {
            UpSet::generated_by(n_star, members).expect("members were parsed at this height")
        }
        UpSetExpr::Named(_, u) => *u,
        UpSetExpr::Full => UpSet::full(n_star).expect("height checked at parse"),
        UpSetExpr::Empty => UpSet::empty(n_star).expect("height checked at parse"),
        UpSetExpr::Product(l, r) => star(&eval_expr(l, n_star), &eval_expr(r, n_star)),
        UpSetExpr::Union(l, r) => eval_expr(l, n_star).union(&eval_expr(r, n_star)),
    }
}

/// One-step parse and evaluate.
pub fn parse_and_eval(text: &str, n_star: u8) -> Result<UpSet, ParseError> {
    Ok(eval_expr(&parse_expr(text, n_star)?, n_star))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    n_star: u8,
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(self.pos, format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<UpSetExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.eat('|') {
                let rhs = self.term()?;
                acc = UpSetExpr::Union(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<UpSetExpr, ParseError> {
        let mut acc = self.atom()?;
        loop {
            self.skip_ws();
            if self.eat('*') {
                let rhs = self.atom()?;
                acc = UpSetExpr::Product(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn atom(&mut self) -> Result<UpSetExpr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(open @ ('⟨' | '<')) => {
                self.bump();
                let close = if open == '⟨' { '⟩' } else { '>' };
                let members = self.set_list(close)?;
                Ok(UpSetExpr::Antichain(members))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name.as_str() {
                    "u" => Ok(UpSetExpr::Cone(self.set()?)),
                    "v" => Ok(UpSetExpr::Meet(self.set()?)),
                    "T" => {
                        self.expect('(')?;
                        let entries = self.set_list(')')?;
                        let list = ThreadList::new(self.n_star, entries)
                            .expect("entries were parsed at this height");
                        Ok(UpSetExpr::Thread(list))
                    }
                    "full" => Ok(UpSetExpr::Full),
                    "empty" => Ok(UpSetExpr::Empty),
                    _ => self.named(start, name),
                }
            }
            Some(c) => self.fail(start, format!("expected an expression, found '{c}'")),
            None => self.fail(start, "expected an expression, found end of input"),
        }
    }

    fn named(&mut self, start: usize, name: String) -> Result<UpSetExpr, ParseError> {
        if self.n_star != 3 {
            return self.fail(
                start,
                format!("unknown name \"{name}\" (names are only defined at n* = 3)"),
            );
        }
        match catalogue3().into_iter().find(|(n, _)| *n == name) {
            Some((_, u)) => Ok(UpSetExpr::Named(name, u)),
            None => self.fail(start, format!("unknown name \"{name}\"")),
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        self.text[start..self.pos].to_string()
    }

    /// `set {"," set}` closed by `close`; the empty list is allowed.
    fn set_list(&mut self, close: char) -> Result<Vec<LevelSet>, ParseError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.set()?);
            self.skip_ws();
            if self.eat(',') {
                continue;
            }
            self.expect(close)?;
            return Ok(out);
        }
    }

    /// `"{" [nat {"," nat}] "}"`, range-checking each level.
    fn set(&mut self) -> Result<LevelSet, ParseError> {
        self.expect('{')?;
        let mut levels = Vec::new();
        self.skip_ws();
        if self.eat('}') {
            return Ok(LevelSet::empty(self.n_star).expect("height checked at parse"));
        }
        loop {
            levels.push(self.nat()?);
            self.skip_ws();
            if self.eat(',') {
                self.skip_ws();
                continue;
            }
            self.expect('}')?;
            return Ok(LevelSet::from_levels(self.n_star, &levels)
                .expect("levels were range-checked digit by digit"));
        }
    }

    fn nat(&mut self) -> Result<u8, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u32 = 0;
        let mut any = false;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            self.bump();
            any = true;
            value = value.saturating_mul(10).saturating_add(d);
        }
        if !any {
            return self.fail(start, "expected a level number");
        }
        if value >= self.n_star as u32 {
            return self.fail(
                start,
                format!("level {value} out of range for n* = {}", self.n_star),
            );
        }
        Ok(value as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chromatic_monoid::enumerate_q;

    fn ls(n: u8, levels: &[u8]) -> LevelSet {
        LevelSet::from_levels(n, levels).unwrap()
    }

    #[test]
    fn product_of_meets() {
        let e = parse_expr("v{0,1,3} * v{0,2,3}", 4).unwrap();
        assert!(matches!(
            &e,
            UpSetExpr::Product(l, r)
                if matches!(**l, UpSetExpr::Meet(_)) && matches!(**r, UpSetExpr::Meet(_))
        ));
        let value = eval_expr(&e, 4);
        assert_eq!(
            value,
            star(&v_of(&ls(4, &[0, 1, 3])), &v_of(&ls(4, &[0, 2, 3])))
        );
    }

    #[test]
    fn thread_atom() {
        let e = parse_expr("T({0,1,3},{0,2,3})", 4).unwrap();
        match &e {
            UpSetExpr::Thread(t) => {
                assert_eq!(t.entries(), &[ls(4, &[0, 1, 3]), ls(4, &[0, 2, 3])]);
            }
            other => panic!("expected a thread atom, got {other:?}"),
        }
        assert_eq!(
            parse_and_eval("T()", 3).unwrap(),
            UpSet::full(3).unwrap()
        );
    }

    #[test]
    fn names_resolve_only_at_height_three() {
        let w1 = parse_and_eval("w1", 3).unwrap();
        assert_eq!(w1.render(), "⟨{0,1},{1,2}⟩");
        let err = parse_expr("w1", 4).unwrap_err();
        assert_eq!(err.position, 0);
        assert!(err.message.contains("unknown name"), "{err}");
    }

    #[test]
    fn product_binds_tighter_than_union() {
        let n = 3;
        let chained = parse_and_eval("u{0}|u{1}*u{2}", n).unwrap();
        let expected = u_of(&ls(n, &[0])).union(&star(&u_of(&ls(n, &[1])), &u_of(&ls(n, &[2]))));
        assert_eq!(chained, expected);
        let grouped = parse_and_eval("(u{0}|u{1})*u{2}", n).unwrap();
        let expected = star(
            &u_of(&ls(n, &[0])).union(&u_of(&ls(n, &[1]))),
            &u_of(&ls(n, &[2])),
        );
        assert_eq!(grouped, expected);
    }

    #[test]
    fn keywords_and_the_two_level_union() {
        assert_eq!(
            parse_and_eval("full * v{1}", 3).unwrap(),
            v_of(&ls(3, &[1]))
        );
        assert_eq!(
            parse_and_eval("empty | empty", 3).unwrap(),
            UpSet::empty(3).unwrap()
        );
        assert_eq!(
            parse_and_eval("u{0}|u{1}", 2).unwrap(),
            v_of(&ls(2, &[0, 1]))
        );
    }

    #[test]
    fn antichain_literals_round_trip_every_family() {
        for n in 0..=3u8 {
            for u in enumerate_q(n).unwrap() {
                assert_eq!(parse_and_eval(&u.render(), n).unwrap(), u, "{u}");
            }
        }
    }

    #[test]
    fn ascii_antichains_match_the_typeset_form() {
        assert_eq!(
            parse_and_eval("<{0},{1,2}>", 3).unwrap(),
            parse_and_eval("⟨{0},{1,2}⟩", 3).unwrap()
        );
        assert_eq!(parse_and_eval("<>", 3).unwrap(), UpSet::empty(3).unwrap());
        assert_eq!(parse_and_eval("<{}>", 3).unwrap(), UpSet::full(3).unwrap());
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_and_eval(" v { 0 , 1 } * full ", 3).unwrap(),
            v_of(&ls(3, &[0, 1]))
        );
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_expr("v{0,5}", 3).unwrap_err();
        assert_eq!(err.position, 4);
        assert!(err.message.contains("out of range"), "{err}");

        let err = parse_expr("v{0", 3).unwrap_err();
        assert!(err.message.contains("expected"), "{err}");

        let err = parse_expr("", 3).unwrap_err();
        assert!(err.message.contains("end of input"), "{err}");

        let err = parse_expr("full full", 3).unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.message.contains("trailing"), "{err}");

        let err = parse_expr("u{0} *", 3).unwrap_err();
        assert!(err.message.contains("end of input"), "{err}");
    }
}
