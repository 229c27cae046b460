//! The algebra file grammar:
//!
//! ```text
//! # comment
//! dim 6;
//! param a = -4;
//! [1,6] = a*1;
//! [4,6] = 1*4 + -1*5;
//! ```
//!
//! A file is `dim N;` followed by optional `param NAME = RATIONAL;` bindings
//! and bracket lines `[i,j] = q1*k1 + q2*k2 + ...;` with `i < j`, indices in
//! 1..=N, and each `q` a rational literal (`p/q` or integer) or the name of
//! a bound parameter. Unspecified brackets are zero; duplicate bracket
//! lines are an error; the parsed algebra must satisfy the Jacobi identity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use solvcoh_algebra::lie::LieAlgebra;
use solvcoh_exact::scalar::Rat;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0, line: 1, col: 1 }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.col, message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some('#') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                _ => break,
            }
        }
    }

    fn eat(&mut self, expected: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == expected => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{expected}', found '{c}'"))),
            None => Err(self.err(format!("expected '{expected}', found end of input"))),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(kw) {
            let after = self.text[self.pos + kw.len()..].chars().next();
            if after.map_or(true, |c| !c.is_alphanumeric() && c != '_') {
                for _ in 0..kw.len() {
                    self.bump();
                }
                return true;
            }
        }
        false
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let mut s = String::new();
        if matches!(self.peek(), Some('-') | Some('+')) {
            s.push(self.bump().unwrap());
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() || s == "-" || s == "+" {
            return Err(self.err("expected an integer"));
        }
        s.parse::<BigInt>().map_err(|e| self.err(format!("bad integer: {e}")))
    }

    fn identifier(&mut self) -> Option<String> {
        self.skip_ws();
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if s.is_empty() || s.chars().next().unwrap().is_ascii_digit() {
            None
        } else {
            Some(s)
        }
    }

    /// A rational literal `p` or `p/q`, or a parameter reference.
    fn coefficient(&mut self, params: &BTreeMap<String, Rat>) -> Result<Rat, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' || c == '+' => {
                let num = self.integer()?;
                self.skip_ws();
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(Rat::new(num, den))
                } else {
                    Ok(Rat::from_integer(num))
                }
            }
            _ => {
                let save = (self.pos, self.line, self.col);
                match self.identifier() {
                    Some(name) => params.get(&name).cloned().ok_or_else(|| ParseError {
                        line: save.1,
                        column: save.2,
                        message: format!("unknown parameter {name}"),
                    }),
                    None => Err(self.err("expected a rational literal or parameter name")),
                }
            }
        }
    }
}

/// Parse an algebra file; the result passes the Jacobi validation.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, ParseError> {
    let mut cur = Cursor::new(text);
    if !cur.eat_keyword("dim") {
        return Err(cur.err("file must start with 'dim N;'"));
    }
    let dim_int = cur.integer()?;
    let dim: usize = dim_int
        .try_into()
        .map_err(|_| cur.err("dimension out of range"))?;
    if dim == 0 || dim > solvcoh_algebra::lie::MAX_DIM {
        return Err(cur.err(format!(
            "dimension must be between 1 and {}",
            solvcoh_algebra::lie::MAX_DIM
        )));
    }
    cur.eat(';')?;
    let mut params: BTreeMap<String, Rat> = BTreeMap::new();
    let mut brackets: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        if cur.eat_keyword("param") {
            let (line, col) = (cur.line, cur.col);
            let name = cur.identifier().ok_or_else(|| ParseError {
                line,
                column: col,
                message: "expected a parameter name".into(),
            })?;
            cur.eat('=')?;
            let value = cur.coefficient(&params)?;
            cur.eat(';')?;
            if params.insert(name.clone(), value).is_some() {
                return Err(cur.err(format!("parameter {name} bound twice")));
            }
            continue;
        }
        // bracket line
        let (bline, bcol) = (cur.line, cur.col);
        cur.eat('[')?;
        let i: usize = index_in_range(&mut cur, dim)?;
        cur.eat(',')?;
        let j: usize = index_in_range(&mut cur, dim)?;
        cur.eat(']')?;
        if i >= j {
            return Err(ParseError {
                line: bline,
                column: bcol,
                message: format!("bracket [{i},{j}] must have i < j"),
            });
        }
        cur.eat('=')?;
        let mut coeffs: Vec<(usize, Rat)> = Vec::new();
        loop {
            let q = cur.coefficient(&params)?;
            cur.eat('*')?;
            let k = index_in_range(&mut cur, dim)?;
            coeffs.push((k - 1, q));
            cur.skip_ws();
            if cur.peek() == Some('+') {
                cur.bump();
                continue;
            }
            break;
        }
        cur.eat(';')?;
        if brackets.insert((i - 1, j - 1), coeffs).is_some() {
            return Err(ParseError {
                line: bline,
                column: bcol,
                message: format!("duplicate bracket line for [{i},{j}]"),
            });
        }
    }
    let g = LieAlgebra::new(dim, brackets.into_iter().collect()).map_err(|e| ParseError {
        line: 0,
        column: 0,
        message: format!("{e}"),
    })?;
    Ok(g.with_params(params))
}

fn index_in_range(cur: &mut Cursor, dim: usize) -> Result<usize, ParseError> {
    let (line, col) = (cur.line, cur.col);
    let n = cur.integer()?;
    let k: usize = n.try_into().map_err(|_| ParseError {
        line,
        column: col,
        message: "index out of range".into(),
    })?;
    if k == 0 || k > dim {
        return Err(ParseError {
            line,
            column: col,
            message: format!("index {k} outside 1..={dim}"),
        });
    }
    Ok(k)
}

/// Print an algebra in the file grammar; `parse_algebra` round-trips it.
pub fn print_algebra(g: &LieAlgebra) -> String {
    let mut out = format!("dim {};\n", g.dim());
    for (name, value) in g.params() {
        out.push_str(&format!("param {} = {};\n", name, rat_str(value)));
    }
    for ((i, j), coeffs) in g.bracket_table() {
        let terms: Vec<String> =
            coeffs.iter().map(|(k, c)| format!("{}*{}", rat_str(c), k + 1)).collect();
        out.push_str(&format!("[{},{}] = {};\n", i + 1, j + 1, terms.join(" + ")));
    }
    out
}

fn rat_str(q: &Rat) -> String {
    if solvcoh_exact::scalar::rat_is_integer(q) {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvcoh_algebra::catalog;

    #[test]
    fn parse_g35_factor() {
        let g = parse_algebra("dim 6; [1,3] = -1*2; [2,3] = 1*1;").unwrap();
        let expect = catalog::build("g3.5+R3", &Default::default()).unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn parse_abelian() {
        let g = parse_algebra("dim 2;").unwrap();
        assert_eq!(g, solvcoh_algebra::lie::LieAlgebra::abelian(2));
    }

    #[test]
    fn so3_like_parses_but_is_not_solvable() {
        let g = parse_algebra("dim 3; [1,2]=1*3; [1,3]=-1*2; [2,3]=1*1;").unwrap();
        assert!(g.validate().is_valid());
        assert!(!g.is_solvable());
    }

    #[test]
    fn jacobi_failure_reports_triple() {
        let err = parse_algebra("dim 3; [1,2]=1*1; [1,3]=1*2; [2,3]=1*1;").unwrap_err();
        assert!(err.message.contains("Jacobi"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_algebra("dim 6; [3,1] = 1*2;").unwrap_err();
        assert!(err.message.contains("i < j"));
        let err = parse_algebra("dim 6; [1,2] = 1*9;").unwrap_err();
        assert!(err.message.contains("outside"));
        let err = parse_algebra("dim 6; [1,2] = 1*2; [1,2] = 1*3;").unwrap_err();
        assert!(err.message.contains("duplicate"));
        let err = parse_algebra("dim 6; [1,2] == 1*2;").unwrap_err();
        assert!(err.line >= 1);
    }

    #[test]
    fn params_usable_as_coefficients() {
        let g = parse_algebra("dim 2;\nparam a = 3/2;\n[1,2] = a*1;").unwrap();
        let c = g.bracket_basis(0, 1);
        assert_eq!(c[0], solvcoh_exact::scalar::rat(3, 2));
    }

    #[test]
    fn round_trip_all_catalog_entries() {
        for e in catalog::CATALOG {
            let g = catalog::build(e.name, &Default::default()).unwrap();
            let text = print_algebra(&g);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, g, "{}:\n{text}", e.name);
        }
    }
}
