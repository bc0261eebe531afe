//! Expression text in, exact values out: a hand-written lexer, a
//! recursive-descent parser, the evaluator, and the two printers (human
//! record form and machine JSON).
//!
//! Grammar, with `^` binding tighter than unary minus and implicit
//! multiplication allowed before `G`, an identifier or `(`:
//!
//! ```text
//! expr   := term { ("+" | "-") term }
//! term   := factor { ("*" | "/" | juxtaposition) factor }
//! factor := "-" factor | power
//! power  := atom [ "^" factor ]
//! atom   := RATIONAL | "G" | "#1" | IDENT | "(" expr ")"
//! RATIONAL := DIGITS [ "." DIGITS ]
//! ```
//!
//! `a/b` on digit strings therefore parses as an exact division, which
//! yields the same rational the fused literal would.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{GrossError, Result};
use crate::expvalue::{pow_rational_gross, ExpTerm, ExpValue};
use crate::gross::GrossNumber;
use crate::rational::ExactRational;

/// Abstract syntax for grossone expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(ExactRational),
    Grossone,
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(ExactRational),
    Grossone,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax_error(pos: usize, msg: impl Into<String>) -> GrossError {
    GrossError::SyntaxError {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                tokens.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                tokens.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                tokens.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Tok::RParen));
                i += 1;
            }
            '#' => {
                if bytes.get(i + 1) == Some(&b'1') {
                    tokens.push((i, Tok::Grossone));
                    i += 2;
                } else {
                    return Err(syntax_error(i, "expected `#1`"));
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    if !bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
                        return Err(syntax_error(i, "digits required after decimal point"));
                    }
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let literal = &text[start..i];
                let value = ExactRational::parse(literal)
                    .map_err(|_| syntax_error(start, format!("bad numeral `{literal}`")))?;
                tokens.push((start, Tok::Num(value)));
            }
            'A'..='Z' | 'a'..='z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "G" {
                    tokens.push((start, Tok::Grossone));
                } else {
                    tokens.push((start, Tok::Ident(word.to_string())));
                }
            }
            other => return Err(syntax_error(i, format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    index: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.index).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.index)
            .map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let tok = self.tokens.get(self.index).map(|(_, t)| t.clone());
        if tok.is_some() {
            self.index += 1;
        }
        tok
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.index += 1;
            Ok(())
        } else {
            Err(syntax_error(self.pos(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.index += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.index += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.index += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.index += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                // Juxtaposition: `0.5G^2`, `(1/3)G`, `3(G+1)`.
                Some(Tok::Grossone | Tok::Ident(_) | Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.index += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.index += 1;
            let exponent = self.factor()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(value)) => Ok(Expr::Rational(value)),
            Some(Tok::Grossone) => Ok(Expr::Grossone),
            Some(Tok::Ident(name)) => Ok(Expr::Ident(name)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(other) => Err(syntax_error(pos, format!("unexpected token {other:?}"))),
            None => Err(syntax_error(pos, "unexpected end of input")),
        }
    }
}

/// Parse expression text into an AST.
pub fn parse(text: &str) -> Result<Expr> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(syntax_error(parser.pos(), "trailing input"));
    }
    Ok(expr)
}

/// Evaluate a closed expression.
pub fn eval(expr: &Expr) -> Result<ExpValue> {
    eval_with_env(expr, &HashMap::new())
}

/// Evaluate with named bindings (the REPL session map).
pub fn eval_with_env(expr: &Expr, env: &HashMap<String, ExpValue>) -> Result<ExpValue> {
    match expr {
        Expr::Rational(r) => Ok(ExpValue::from_rational(r.clone())),
        Expr::Grossone => Ok(ExpValue::from_gross(GrossNumber::grossone())),
        Expr::Ident(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| GrossError::UnboundIdentifier(name.clone())),
        Expr::Neg(inner) => Ok(eval_with_env(inner, env)?.neg()),
        Expr::Add(a, b) => Ok(eval_with_env(a, env)?.add(&eval_with_env(b, env)?)),
        Expr::Sub(a, b) => Ok(eval_with_env(a, env)?.sub(&eval_with_env(b, env)?)),
        Expr::Mul(a, b) => eval_with_env(a, env)?.mul(&eval_with_env(b, env)?),
        Expr::Div(a, b) => eval_with_env(a, env)?.div(&eval_with_env(b, env)?),
        Expr::Pow(a, b) => {
            let base = eval_with_env(a, env)?;
            let exponent = eval_with_env(b, env)?;
            power(&base, &exponent)
        }
    }
}

/// `base^exponent` over the supported shapes. Finite integer exponents
/// apply to any value; other exponents need a rational base. Raising a
/// record with grossone content to anything but a finite integer would
/// need a non-integer grosspower.
fn power(base: &ExpValue, exponent: &ExpValue) -> Result<ExpValue> {
    let exponent = exponent
        .as_gross()
        .ok_or(GrossError::UnrepresentablePower)?;
    if let Some(finite) = exponent.as_rational() {
        if let Some(k) = finite.to_integer() {
            return base.pow_checked(&k);
        }
    }
    if let Some(r) = base.as_rational() {
        return pow_rational_gross(&r, exponent);
    }
    if base.as_gross().is_some() {
        Err(GrossError::NonIntegerGrosspower)
    } else {
        Err(GrossError::UnrepresentablePower)
    }
}

/// Output style: the human positional record or canonical machine JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatStyle {
    Record,
    Machine,
}

pub fn format_value(value: &ExpValue, style: FormatStyle) -> String {
    match style {
        FormatStyle::Record => format_record(value),
        FormatStyle::Machine => to_machine_json(value),
    }
}

/// Coefficient juxtaposed against `G` or a base: terminating decimals
/// print bare, other fractions in parentheses so the text re-parses.
fn coefficient_str(magnitude: &ExactRational) -> String {
    if magnitude.has_terminating_decimal() {
        magnitude.to_decimal_or_fraction()
    } else {
        format!("({})", magnitude.to_decimal_or_fraction())
    }
}

fn gross_term_str(power: &BigInt, digit: &ExactRational) -> (bool, String) {
    let negative = digit.is_negative();
    let magnitude = digit.abs();
    let body = if power.is_zero() {
        magnitude.to_decimal_or_fraction()
    } else {
        let coeff = if magnitude.is_one() {
            String::new()
        } else {
            coefficient_str(&magnitude)
        };
        if power.is_one() {
            format!("{coeff}G")
        } else {
            format!("{coeff}G^{power}")
        }
    };
    (negative, body)
}

fn exp_term_str(term: &ExpTerm) -> (bool, String) {
    let negative = term.coeff().is_negative();
    let magnitude = term.coeff().abs();
    let base = if term.base().has_terminating_decimal() {
        term.base().to_decimal_or_fraction()
    } else {
        format!("({})", term.base().to_decimal_or_fraction())
    };
    let core = format!("{base}^({})", format_gross(term.exponent()));
    let body = if magnitude.is_one() {
        core
    } else {
        format!("{}*{core}", coefficient_str(&magnitude))
    };
    (negative, body)
}

fn join_signed(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in parts.into_iter().enumerate() {
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// Record form of a plain positional record.
pub fn format_gross(value: &GrossNumber) -> String {
    join_signed(value.terms().map(|(p, d)| gross_term_str(p, d)).collect())
}

/// Record form of a value: infinite exponential terms first, then the
/// positional record, then infinitesimal exponential terms, everything in
/// decreasing magnitude.
pub fn format_record(value: &ExpValue) -> String {
    let mut infinite: Vec<&ExpTerm> = Vec::new();
    let mut small: Vec<&ExpTerm> = Vec::new();
    for term in value.exp_terms() {
        if term.is_infinite() {
            infinite.push(term);
        } else {
            small.push(term);
        }
    }
    let magnitude_key = |t: &ExpTerm| (t.exponent().clone(), t.base().clone());
    infinite.sort_by_key(|t| std::cmp::Reverse(magnitude_key(t)));
    small.sort_by_key(|t| std::cmp::Reverse(magnitude_key(t)));

    let mut parts: Vec<(bool, String)> = Vec::new();
    parts.extend(infinite.into_iter().map(exp_term_str));
    parts.extend(value.gross_part().terms().map(|(p, d)| gross_term_str(p, d)));
    parts.extend(small.into_iter().map(exp_term_str));
    join_signed(parts)
}

fn rational_machine(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn gross_machine(value: &GrossNumber) -> Vec<Value> {
    value
        .terms()
        .map(|(p, d)| json!({ "p": p.to_string(), "d": rational_machine(d) }))
        .collect()
}

/// Canonical machine JSON: record terms in decreasing grosspower order,
/// exponential terms in canonical (base, exponent) order, every integer a
/// decimal string.
pub fn to_machine_json(value: &ExpValue) -> String {
    let exp: Vec<Value> = value
        .exp_terms()
        .iter()
        .map(|t| {
            json!({
                "c": rational_machine(t.coeff()),
                "b": rational_machine(t.base()),
                "e": gross_machine(t.exponent()),
            })
        })
        .collect();
    json!({ "gross": gross_machine(value.gross_part()), "exp": exp }).to_string()
}

fn machine_err(msg: &str) -> GrossError {
    syntax_error(0, format!("machine form: {msg}"))
}

fn string_field<'a>(item: &'a Value, key: &str) -> Result<&'a str> {
    item.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| machine_err(&format!("missing string field `{key}`")))
}

fn gross_from_machine(items: &Value) -> Result<GrossNumber> {
    let items = items
        .as_array()
        .ok_or_else(|| machine_err("expected an array of record terms"))?;
    let mut terms = Vec::with_capacity(items.len());
    for item in items {
        let power: BigInt = string_field(item, "p")?
            .parse()
            .map_err(|_| machine_err("bad grosspower"))?;
        let digit = ExactRational::parse(string_field(item, "d")?)?;
        terms.push((power, digit));
    }
    Ok(GrossNumber::from_terms(terms))
}

/// Parse canonical machine JSON back into a value.
pub fn parse_machine(text: &str) -> Result<ExpValue> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| machine_err(&format!("invalid JSON: {e}")))?;
    let gross = gross_from_machine(
        root.get("gross")
            .ok_or_else(|| machine_err("missing `gross`"))?,
    )?;
    let mut value = ExpValue::from_gross(gross);
    let exp = root
        .get("exp")
        .and_then(Value::as_array)
        .ok_or_else(|| machine_err("missing `exp` array"))?;
    for item in exp {
        let coeff = ExactRational::parse(string_field(item, "c")?)?;
        let base = ExactRational::parse(string_field(item, "b")?)?;
        let exponent = gross_from_machine(
            item.get("e").ok_or_else(|| machine_err("missing `e`"))?,
        )?;
        value = value.add(&ExpValue::exponential(coeff, base, exponent)?);
    }
    Ok(value)
}

/// Parse and evaluate in one step.
pub fn eval_str(text: &str) -> Result<ExpValue> {
    eval(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::ratio(n, d)
    }

    fn g() -> GrossNumber {
        GrossNumber::grossone()
    }

    fn gn(pairs: &[(i64, (i64, i64))]) -> GrossNumber {
        GrossNumber::from_terms(
            pairs
                .iter()
                .map(|(p, (n, d))| (BigInt::from(*p), rat(*n, *d))),
        )
    }

    #[test]
    fn parse_and_eval_records() {
        let value = eval_str("0.5*G^2 + 0.5*G").unwrap();
        assert_eq!(value.as_gross().unwrap(), &gn(&[(2, (1, 2)), (1, (1, 2))]));

        assert_eq!(eval_str("G/G").unwrap(), ExpValue::one());

        let expanded = eval_str("(G+1)*(G-1)").unwrap();
        assert_eq!(expanded.as_gross().unwrap(), &gn(&[(2, (1, 1)), (0, (-1, 1))]));
    }

    #[test]
    fn exponential_results() {
        let value = eval_str("3^(G^2+1)").unwrap();
        let expected =
            ExpValue::exponential(rat(1, 1), rat(3, 1), &g().pow(2) + &GrossNumber::one())
                .unwrap();
        assert_eq!(value, expected);

        let tail = eval_str("2^(0-G)").unwrap();
        assert_eq!(
            tail,
            ExpValue::exponential(rat(1, 1), rat(2, 1), -g()).unwrap()
        );
        assert_eq!(eval_str("2^-G").unwrap(), tail);
    }

    #[test]
    fn precedence() {
        // 2*G^2 is 2*(G^2).
        assert_eq!(
            parse("2*G^2").unwrap(),
            Expr::Mul(
                Box::new(Expr::Rational(rat(2, 1))),
                Box::new(Expr::Pow(
                    Box::new(Expr::Grossone),
                    Box::new(Expr::Rational(rat(2, 1)))
                ))
            )
        );
        // -G^2 is -(G^2).
        assert_eq!(
            eval_str("-G^2").unwrap().as_gross().unwrap(),
            &gn(&[(2, (-1, 1))])
        );
        // ^ is right-associative: 2^3^2 = 2^9 = 512.
        assert_eq!(
            eval_str("2^3^2").unwrap().as_rational().unwrap(),
            rat(512, 1)
        );
        // 6/2^2 divides by the power, not the base.
        assert_eq!(
            eval_str("6/2^2").unwrap().as_rational().unwrap(),
            rat(3, 2)
        );
        assert_eq!(eval_str("2^-2").unwrap().as_rational().unwrap(), rat(1, 4));
        assert_eq!(
            eval_str("-2^-2").unwrap().as_rational().unwrap(),
            rat(-1, 4)
        );
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(
            eval_str("0.5G^2 + 0.5G").unwrap(),
            eval_str("0.5*G^2 + 0.5*G").unwrap()
        );
        assert_eq!(
            eval_str("(1/3)G^3").unwrap(),
            eval_str("G^3/3").unwrap()
        );
        assert_eq!(
            eval_str("3(G+1)").unwrap().as_gross().unwrap(),
            &gn(&[(1, (3, 1)), (0, (3, 1))])
        );
    }

    #[test]
    fn exact_decimals_and_aliases() {
        assert_eq!(eval_str("0.1").unwrap().as_rational().unwrap(), rat(1, 10));
        assert_eq!(eval_str("#1").unwrap().as_gross().unwrap(), &g());
        assert_eq!(eval_str("#1/2 + 1").unwrap(), eval_str("G/2+1").unwrap());
    }

    #[test]
    fn identities() {
        assert_eq!(eval_str("G^0").unwrap(), ExpValue::one());
        assert_eq!(eval_str("0^G").unwrap(), ExpValue::zero());
        assert_eq!(eval_str("1^G").unwrap(), ExpValue::one());
        assert_eq!(eval_str("G-G").unwrap(), ExpValue::zero());
        assert_eq!(eval_str("0*G").unwrap(), ExpValue::zero());
        assert_eq!(eval_str("G^-1*G").unwrap(), ExpValue::one());
    }

    #[test]
    fn error_paths() {
        assert_eq!(eval_str("1/(G+1)"), Err(GrossError::NotExactlyDivisible));
        assert_eq!(eval_str("1/0"), Err(GrossError::DivisionByZero));
        assert_eq!(eval_str("G*2^G"), Err(GrossError::UnrepresentableProduct));
        assert_eq!(eval_str("G^G"), Err(GrossError::NonIntegerGrosspower));
        assert_eq!(eval_str("G^(1/2)"), Err(GrossError::NonIntegerGrosspower));
        assert_eq!(eval_str("2^(1/2)"), Err(GrossError::UnrepresentablePower));
        assert_eq!(eval_str("4^(1/2)").unwrap().as_rational().unwrap(), rat(2, 1));
        assert!(matches!(eval_str("a+1"), Err(GrossError::UnboundIdentifier(_))));
        assert!(matches!(eval_str("2*"), Err(GrossError::SyntaxError { .. })));
        assert!(matches!(eval_str("(1"), Err(GrossError::SyntaxError { .. })));
        assert!(matches!(eval_str("2 3"), Err(GrossError::SyntaxError { .. })));
        assert!(matches!(eval_str("1 $ 2"), Err(GrossError::SyntaxError { .. })));
    }

    #[test]
    fn record_formatting() {
        assert_eq!(format_record(&eval_str("G^2-1").unwrap()), "G^2 - 1");
        assert_eq!(format_record(&ExpValue::zero()), "0");
        assert_eq!(
            format_record(&eval_str("1 - 2^-G").unwrap()),
            "1 - 2^(-G)"
        );
        assert_eq!(
            format_record(&eval_str("0.5G^2 + 0.5G").unwrap()),
            "0.5G^2 + 0.5G"
        );
        assert_eq!(format_record(&eval_str("G^3/3").unwrap()), "(1/3)G^3");
        assert_eq!(format_record(&eval_str("G^-4*37").unwrap()), "37G^-4");
        assert_eq!(format_record(&eval_str("0-G").unwrap()), "-G");
        // Infinite exponential terms print before the record part.
        assert_eq!(
            format_record(&eval_str("1 + 2^(G+1)").unwrap()),
            "2*2^(G) + 1"
        );
    }

    #[test]
    fn round_trip_smoke() {
        for text in [
            "0.5G^2 + 0.5G",
            "G^2 - 1",
            "1 - 2^(-G)",
            "(1/3)G^3 + 0.5G^2 + (1/6)G",
            "37G^-4 + 7.89",
            "-G + 1/3",
            "1.5*3^(G^2) - 0.5",
        ] {
            let value = eval_str(text).unwrap();
            let reparsed = eval_str(&format_record(&value)).unwrap();
            assert_eq!(reparsed, value, "record round trip of `{text}`");
            let machine = to_machine_json(&value);
            assert_eq!(parse_machine(&machine).unwrap(), value, "machine round trip of `{text}`");
        }
    }

    #[test]
    fn machine_parse_rejects_malformed_input() {
        assert!(matches!(parse_machine("{}"), Err(GrossError::SyntaxError { .. })));
        assert!(matches!(parse_machine("not json"), Err(GrossError::SyntaxError { .. })));
        assert!(matches!(
            parse_machine(r#"{"gross":[{"p":"x","d":"1/1"}],"exp":[]}"#),
            Err(GrossError::SyntaxError { .. })
        ));
        assert!(matches!(
            parse_machine(r#"{"gross":[{"p":"1"}],"exp":[]}"#),
            Err(GrossError::SyntaxError { .. })
        ));
    }

    #[test]
    fn machine_shape() {
        let value = eval_str("0.5G^2 - 2^-G").unwrap();
        let text = to_machine_json(&value);
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["gross"][0]["p"], "2");
        assert_eq!(parsed["gross"][0]["d"], "1/2");
        assert_eq!(parsed["exp"][0]["c"], "-1/1");
        assert_eq!(parsed["exp"][0]["b"], "2/1");
        assert_eq!(parsed["exp"][0]["e"][0]["p"], "1");
        assert_eq!(parsed["exp"][0]["e"][0]["d"], "-1/1");
    }
}
