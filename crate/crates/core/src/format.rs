//! Plain-text Lie algebra files.
//!
//! ```text
//! # L_{6,22}(eps)
//! dim 6
//! param eps = 1
//! [1,2] = 5
//! [1,3] = 6
//! [2,4] = eps*6
//! [3,4] = 5
//! ```
//!
//! The format is line oriented and `#` starts a comment. `dim N` must come
//! first. `param NAME = RATIONAL` binds a parameter. A bracket line
//! `[i,j] = term + term + ...` sets `[x_i, x_j]` for `i < j`, where a term is
//! `k`, `-k`, `RATIONAL*k` or `NAME*k` (optionally `-NAME*k`), and rationals
//! are `-?digits[/digits]`. Whitespace inside a line is ignored, indices are
//! 1-based, unlisted brackets are zero and a bracket may be given only once.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Number(Scalar),
    Parameter { name: String, negated: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Coefficient,
    /// 1-based basis index.
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketStatement {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<Term>,
}

/// A parsed algebra file: dimension, parameter bindings and brackets, kept
/// symbolic so parameters can be rebound before instantiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub params: Vec<(String, Scalar)>,
    pub brackets: Vec<BracketStatement>,
}

impl AlgebraFile {
    pub fn abelian(dim: usize) -> Self {
        Self {
            dim,
            params: Vec::new(),
            brackets: Vec::new(),
        }
    }

    pub fn param(&self, name: &str) -> Option<&Scalar> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn bind(&mut self, name: &str, value: Scalar) -> Result<()> {
        match self.params.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => {
                slot.1 = value;
                Ok(())
            }
            None => Err(Error::UnknownParameter(name.to_string())),
        }
    }

    /// Block sum with `other` placed after `self`.
    pub fn direct_sum(&self, other: &AlgebraFile) -> AlgebraFile {
        let shift = self.dim;
        let mut params = self.params.clone();
        for (n, v) in &other.params {
            assert!(
                self.param(n).is_none(),
                "parameter `{n}` bound on both summands"
            );
            params.push((n.clone(), v.clone()));
        }
        let mut brackets = self.brackets.clone();
        brackets.extend(other.brackets.iter().map(|b| {
            BracketStatement {
                i: b.i + shift,
                j: b.j + shift,
                terms: b
                    .terms
                    .iter()
                    .map(|t| Term {
                        coefficient: t.coefficient.clone(),
                        index: t.index + shift,
                    })
                    .collect(),
            }
        }));
        AlgebraFile {
            dim: self.dim + other.dim,
            params,
            brackets,
        }
    }

    fn resolve(&self, c: &Coefficient) -> Result<Scalar> {
        match c {
            Coefficient::Number(v) => Ok(v.clone()),
            Coefficient::Parameter { name, negated } => {
                let v = self
                    .param(name)
                    .ok_or_else(|| Error::MissingParameter(name.clone()))?;
                Ok(if *negated { -v } else { v.clone() })
            }
        }
    }

    /// Structure constants without checking the Jacobi identity.
    pub fn instantiate(&self) -> Result<LieAlgebra> {
        let mut resolved = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let terms = b
                .terms
                .iter()
                .map(|t| Ok((self.resolve(&t.coefficient)?, t.index)))
                .collect::<Result<Vec<_>>>()?;
            resolved.push((b.i, b.j, terms));
        }
        LieAlgebra::from_brackets(
            self.dim,
            resolved.iter().map(|(i, j, t)| (*i, *j, t.as_slice())),
        )
    }

    /// Structure constants, rejecting tables that violate the Jacobi identity.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let l = self.instantiate()?;
        l.check_jacobi()?;
        Ok(l)
    }

    pub fn from_algebra(l: &LieAlgebra) -> Self {
        Self {
            dim: l.dim(),
            params: Vec::new(),
            brackets: l
                .nonzero_brackets()
                .map(|(i, j, v)| BracketStatement {
                    i: i + 1,
                    j: j + 1,
                    terms: v
                        .iter()
                        .map(|(k, c)| Term {
                            coefficient: Coefficient::Number(c.clone()),
                            index: k + 1,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

pub fn format_rational(v: &Scalar) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn format_term(t: &Term) -> String {
    match &t.coefficient {
        Coefficient::Number(c) if c.is_one() => t.index.to_string(),
        Coefficient::Number(c) if (-c).is_one() => format!("-{}", t.index),
        Coefficient::Number(c) => format!("{}*{}", format_rational(c), t.index),
        Coefficient::Parameter { name, negated } => {
            format!("{}{name}*{}", if *negated { "-" } else { "" }, t.index)
        }
    }
}

pub fn serialize(file: &AlgebraFile) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", file.dim).unwrap();
    for (name, value) in &file.params {
        writeln!(out, "param {name} = {}", format_rational(value)).unwrap();
    }
    for b in &file.brackets {
        let terms: Vec<String> = b.terms.iter().map(format_term).collect();
        writeln!(out, "[{},{}] = {}", b.i, b.j, terms.join(" + ")).unwrap();
    }
    out
}

pub fn serialize_algebra(l: &LieAlgebra) -> String {
    serialize(&AlgebraFile::from_algebra(l))
}

/// Parses and validates an algebra file.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    parse_algebra_file(text)?.to_algebra()
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    _text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize, offset: usize) -> Self {
        Self {
            chars: text
                .chars()
                .enumerate()
                .filter(|(_, c)| !c.is_whitespace())
                .map(|(i, c)| (i + 1 + offset, c))
                .collect(),
            pos: 0,
            line,
            _text: text,
        }
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or_else(|| self.chars.last().map_or(1, |(c, _)| c + 1))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.column(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }

    fn index(&mut self) -> Result<usize> {
        match self.digits() {
            Some(d) => d.parse().or_else(|_| self.error("index too large")),
            None => self.error("expected a basis index"),
        }
    }

    fn identifier(&mut self) -> Option<String> {
        let start = self.pos;
        if !self
            .peek()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        {
            return None;
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().map(|(_, c)| c).collect())
    }

    fn rational(&mut self) -> Result<Scalar> {
        let negative = self.eat('-');
        let Some(num) = self.digits() else {
            return self.error("expected a rational number");
        };
        let mut value = Scalar::from_integer(num.parse::<BigInt>().unwrap());
        if self.eat('/') {
            let Some(den) = self.digits() else {
                return self.error("expected a denominator");
            };
            let den: BigInt = den.parse().unwrap();
            if den.is_zero() {
                return self.error("zero denominator");
            }
            value /= Scalar::from_integer(den);
        }
        Ok(if negative { -value } else { value })
    }

    fn term(&mut self) -> Result<Term> {
        let negated = self.eat('-');
        if let Some(name) = self.identifier() {
            self.expect('*')?;
            let index = self.index()?;
            return Ok(Term {
                coefficient: Coefficient::Parameter { name, negated },
                index,
            });
        }
        let Some(first) = self.digits() else {
            return self.error("expected a term");
        };
        if self.peek() == Some('/') || self.peek() == Some('*') {
            let mut value = Scalar::from_integer(first.parse::<BigInt>().unwrap());
            if self.eat('/') {
                let Some(den) = self.digits() else {
                    return self.error("expected a denominator");
                };
                let den: BigInt = den.parse().unwrap();
                if den.is_zero() {
                    return self.error("zero denominator");
                }
                value /= Scalar::from_integer(den);
            }
            self.expect('*')?;
            let index = self.index()?;
            if negated {
                value = -value;
            }
            return Ok(Term {
                coefficient: Coefficient::Number(value),
                index,
            });
        }
        let index: usize = first.parse().or_else(|_| self.error("index too large"))?;
        let one = Scalar::one();
        Ok(Term {
            coefficient: Coefficient::Number(if negated { -one } else { one }),
            index,
        })
    }
}

/// Parses the text format without instantiating or validating.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let mut dim: Option<usize> = None;
    let mut params: Vec<(String, Scalar)> = Vec::new();
    let mut brackets: Vec<BracketStatement> = Vec::new();
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (keyword, rest, offset) = split_keyword(content);
        let mut cur = Cursor::new(content, line_no, 0);
        let Some(n) = dim else {
            if keyword != Some("dim") {
                return cur.error("expected `dim N` as the first statement");
            }
            let mut cur = Cursor::new(rest, line_no, offset);
            let n = cur.index()?;
            if n == 0 {
                return cur.error("dimension must be positive");
            }
            if !cur.at_end() {
                return cur.error("unexpected trailing input");
            }
            dim = Some(n);
            continue;
        };
        if cur.peek() == Some('[') {
            cur.expect('[')?;
            let i = cur.index()?;
            cur.expect(',')?;
            let j = cur.index()?;
            cur.expect(']')?;
            cur.expect('=')?;
            for idx in [i, j] {
                if idx == 0 || idx > n {
                    return Err(Error::IndexOutOfRange { index: idx, dim: n });
                }
            }
            if i >= j {
                return Err(Error::Syntax {
                    line: line_no,
                    column: 1,
                    message: format!("bracket [{i},{j}] must have i < j"),
                });
            }
            let mut terms = vec![cur.term()?];
            while cur.eat('+') {
                terms.push(cur.term()?);
            }
            if !cur.at_end() {
                return cur.error("unexpected trailing input");
            }
            for t in &terms {
                if t.index == 0 || t.index > n {
                    return Err(Error::IndexOutOfRange {
                        index: t.index,
                        dim: n,
                    });
                }
            }
            if seen.insert((i, j), line_no).is_some() {
                return Err(Error::DuplicateBracket {
                    line: line_no,
                    i,
                    j,
                });
            }
            brackets.push(BracketStatement { i, j, terms });
            continue;
        }
        match keyword {
            Some("param") => {
                let mut cur = Cursor::new(rest, line_no, offset);
                let Some(name) = cur.identifier() else {
                    return cur.error("expected a parameter name");
                };
                cur.expect('=')?;
                let value = cur.rational()?;
                if !cur.at_end() {
                    return cur.error("unexpected trailing input");
                }
                if params.iter().any(|(n, _)| *n == name) {
                    return Err(Error::Syntax {
                        line: line_no,
                        column: 1,
                        message: format!("parameter `{name}` bound twice"),
                    });
                }
                params.push((name, value));
            }
            Some("dim") => {
                return Err(Error::Syntax {
                    line: line_no,
                    column: 1,
                    message: "`dim` given twice".into(),
                })
            }
            _ => {
                return Err(Error::Syntax {
                    line: line_no,
                    column: 1,
                    message: "expected `param` or a bracket `[i,j] = ...`".into(),
                })
            }
        }
    }
    let Some(dim) = dim else {
        return Err(Error::Syntax {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing `dim N`".into(),
        });
    };
    Ok(AlgebraFile {
        dim,
        params,
        brackets,
    })
}

/// A leading `dim` or `param` keyword, the text after it and its char offset.
fn split_keyword(content: &str) -> (Option<&str>, &str, usize) {
    let trimmed = content.trim_start();
    let lead = content.len() - trimmed.len();
    for kw in ["dim", "param"] {
        if let Some(rest) = trimmed.strip_prefix(kw) {
            if rest.starts_with(char::is_whitespace) {
                let offset = content[..lead + kw.len()].chars().count();
                return (Some(kw), rest, offset);
            }
        }
    }
    (None, content, 0)
}

/// Splits a multi-algebra document (as written by the catalogue export)
/// into `(name, body)` sections. A section starts at a `# name: NAME` line.
pub fn split_sections(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        if let Some(name) = line.strip_prefix("# name:") {
            out.push((name.trim().to_string(), String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integer_algebra;
    use crate::linalg::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn parses_heisenberg() {
        let l = parse_algebra("dim 3\n[1,2] = 3").unwrap();
        assert_eq!(l, LieAlgebra::heisenberg(1));
    }

    #[test]
    fn parses_parameterized_family() {
        let text = "dim 6\nparam eps = 1\n[1,2] = 5\n[1,3] = 6\n[2,4] = eps*6\n[3,4] = 5";
        let l = parse_algebra(text).unwrap();
        let expected = integer_algebra(
            6,
            &[
                (1, 2, &[(1, 5)]),
                (1, 3, &[(1, 6)]),
                (2, 4, &[(1, 6)]),
                (3, 4, &[(1, 5)]),
            ],
        )
        .unwrap();
        assert_eq!(l, expected);

        let mut file = parse_algebra_file(text).unwrap();
        file.bind("eps", int(0)).unwrap();
        assert!(file.to_algebra().unwrap().basis_bracket(1, 3).is_zero());
        assert_eq!(
            file.bind("delta", int(2)).unwrap_err(),
            Error::UnknownParameter("delta".into())
        );
    }

    #[test]
    fn comments_whitespace_and_coefficients() {
        let text = "# 137C-like row\n  dim   7 # seven\n[ 3 , 5 ] = - 7\n[1,2]=1/2*5 + -3*6\n";
        let f = parse_algebra_file(text).unwrap();
        let l = f.instantiate().unwrap();
        assert_eq!(l.basis_bracket(2, 4).get(6), int(-1));
        assert_eq!(l.basis_bracket(0, 1).get(4), ratio(1, 2));
        assert_eq!(l.basis_bracket(0, 1).get(5), int(-3));
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            parse_algebra("[1,2] = 3"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(parse_algebra(""), Err(Error::Syntax { .. })));
        assert_eq!(
            parse_algebra("dim 3\n[1,4] = 3").unwrap_err(),
            Error::IndexOutOfRange { index: 4, dim: 3 }
        );
        assert_eq!(
            parse_algebra("dim 3\n[1,2] = 9").unwrap_err(),
            Error::IndexOutOfRange { index: 9, dim: 3 }
        );
        assert_eq!(
            parse_algebra("dim 3\n[1,2] = 3\n[1,2] = 3").unwrap_err(),
            Error::DuplicateBracket {
                line: 3,
                i: 1,
                j: 2
            }
        );
        assert_eq!(
            parse_algebra("dim 3\n[1,2] = 3\n[1,3] = 1").unwrap_err(),
            Error::JacobiFailure { i: 1, j: 2, k: 3 }
        );
        assert_eq!(
            parse_algebra("dim 6\n[2,4] = eps*6").unwrap_err(),
            Error::MissingParameter("eps".into())
        );
        assert!(matches!(
            parse_algebra("dim 3\n[2,1] = 3"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_algebra("dim 3\n[1,2] = 3 ;"),
            Err(Error::Syntax {
                line: 2,
                column: 11,
                ..
            })
        ));
        assert!(matches!(
            parse_algebra("dim 3\n[1,2] = 1/0*3"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_algebra("dim 3\nfoo"),
            Err(Error::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn sections_split_on_name_lines() {
        let doc = "# name: A\ndim 1\n\n# name: B\ndim 3\n[1,2] = 3\n";
        let s = split_sections(doc);
        assert_eq!(s.len(), 2);
        assert_eq!(s[1].0, "B");
        assert_eq!(parse_algebra(&s[1].1).unwrap(), LieAlgebra::heisenberg(1));
    }

    fn arbitrary_file() -> impl Strategy<Value = AlgebraFile> {
        (2usize..7).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            let m = pairs.len();
            proptest::collection::vec(
                proptest::option::of(proptest::collection::vec((-5i64..6, 1i64..4, 1..=n), 1..3)),
                m,
            )
            .prop_map(move |rows| AlgebraFile {
                dim: n,
                params: Vec::new(),
                brackets: pairs
                    .iter()
                    .zip(rows)
                    .filter_map(|(&(i, j), row)| {
                        row.map(|terms| BracketStatement {
                            i,
                            j,
                            terms: terms
                                .into_iter()
                                .map(|(p, q, k)| Term {
                                    coefficient: Coefficient::Number(ratio(p, q)),
                                    index: k,
                                })
                                .collect(),
                        })
                    })
                    .collect(),
            })
        })
    }

    proptest! {
        #[test]
        fn serialize_then_parse_preserves_structure_constants(file in arbitrary_file()) {
            let original = file.instantiate().unwrap();
            let reparsed = parse_algebra_file(&serialize(&file)).unwrap().instantiate().unwrap();
            prop_assert_eq!(&original, &reparsed);
            let canonical = parse_algebra_file(&serialize_algebra(&original)).unwrap().instantiate().unwrap();
            prop_assert_eq!(original, canonical);
        }
    }
}
