//! Recursive-descent parser for the expression grammar.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := "-" factor | power
//! power  := atom ("^" factor)?           -- right-associative
//! atom   := NUMBER | "x" | "pi" | "e" | FUNC "(" expr ")" | "(" expr ")"
//! FUNC   := "sin" | "cos" | "exp" | "ln" | "sqrt" | "erf"
//! ```
//!
//! Exponentiation binds tighter than unary minus, so `-x^2` is `-(x^2)`
//! and `x^-2` is accepted. Whitespace is insignificant. `NUMBER` is a
//! decimal literal with optional fraction and exponent. Errors carry the
//! byte offset of the offending token.

use crate::error::{ParseError, ParseErrorKind};
use crate::expr::{BinaryOp, Expr, NamedConstant, UnaryOp};

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone, PartialEq)]
struct Token {
    kind: TokenKind,
    offset: usize,
}

fn syntax_error(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        offset,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let offset = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => tokens.push(Token { kind: TokenKind::Plus, offset }),
            b'-' => tokens.push(Token { kind: TokenKind::Minus, offset }),
            b'*' => tokens.push(Token { kind: TokenKind::Star, offset }),
            b'/' => tokens.push(Token { kind: TokenKind::Slash, offset }),
            b'^' => tokens.push(Token { kind: TokenKind::Caret, offset }),
            b'(' => tokens.push(Token { kind: TokenKind::LParen, offset }),
            b')' => tokens.push(Token { kind: TokenKind::RParen, offset }),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(syntax_error(i, "expected digit after decimal point"));
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    // Only consume as an exponent when digits follow,
                    // so "2e" lexes as NUMBER IDENT ("e" the constant).
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let literal = &text[offset..i];
                let value: f64 = literal
                    .parse()
                    .map_err(|_| syntax_error(offset, format!("invalid number '{}'", literal)))?;
                if !value.is_finite() {
                    return Err(syntax_error(
                        offset,
                        format!("number literal '{}' overflows", literal),
                    ));
                }
                tokens.push(Token {
                    kind: TokenKind::Number(value),
                    offset,
                });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(text[offset..i].to_string()),
                    offset,
                });
                continue;
            }
            _ => {
                return Err(syntax_error(
                    offset,
                    format!("unexpected character '{}'", &text[offset..].chars().next().unwrap()),
                ));
            }
        }
        i += 1;
    }
    tokens.push(Token {
        kind: TokenKind::End,
        offset: text.len(),
    });
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Plus => BinaryOp::Add,
                TokenKind::Minus => BinaryOp::Sub,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek().kind {
                TokenKind::Star => BinaryOp::Mul,
                TokenKind::Slash => BinaryOp::Div,
                _ => break,
            };
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            let child = self.factor()?;
            return Ok(Expr::neg(child));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().kind == TokenKind::Caret {
            let caret_offset = self.bump().offset;
            let exponent = self.factor()?;
            if exponent.contains_variable() {
                return Err(ParseError {
                    offset: caret_offset,
                    kind: ParseErrorKind::NonConstantExponent,
                });
            }
            return Ok(Expr::pow(base, exponent));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let token = self.bump();
        match token.kind {
            TokenKind::Number(v) => Ok(Expr::Constant(v)),
            TokenKind::Ident(name) => match name.as_str() {
                "x" => Ok(Expr::Variable),
                "pi" => Ok(Expr::NamedConstant(NamedConstant::Pi)),
                "e" => Ok(Expr::NamedConstant(NamedConstant::E)),
                "sin" | "cos" | "exp" | "ln" | "sqrt" | "erf" => {
                    let op = match name.as_str() {
                        "sin" => UnaryOp::Sin,
                        "cos" => UnaryOp::Cos,
                        "exp" => UnaryOp::Exp,
                        "ln" => UnaryOp::Ln,
                        "sqrt" => UnaryOp::Sqrt,
                        _ => UnaryOp::Erf,
                    };
                    let next = self.bump();
                    if next.kind != TokenKind::LParen {
                        return Err(syntax_error(
                            next.offset,
                            format!("expected '(' after function '{}'", name),
                        ));
                    }
                    let arg = self.expr()?;
                    let close = self.bump();
                    if close.kind != TokenKind::RParen {
                        return Err(syntax_error(close.offset, "expected ')'"));
                    }
                    Ok(Expr::unary(op, arg))
                }
                _ => Err(ParseError {
                    offset: token.offset,
                    kind: ParseErrorKind::UnknownIdentifier(name),
                }),
            },
            TokenKind::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.kind != TokenKind::RParen {
                    return Err(syntax_error(close.offset, "expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(syntax_error(
                token.offset,
                "expected a number, 'x', a constant, a function call or '('",
            )),
        }
    }
}

/// Parse an expression string into an [`Expr`].
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    let trailing = parser.bump();
    if trailing.kind != TokenKind::End {
        return Err(syntax_error(trailing.offset, "unexpected trailing input"));
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ParseErrorKind;

    #[test]
    fn grammar_identities() {
        assert_eq!(
            parse("x^2").unwrap(),
            Expr::pow(Expr::Variable, Expr::constant(2.0))
        );
        assert_eq!(
            parse("exp(x)+x^4").unwrap(),
            Expr::add(
                Expr::unary(UnaryOp::Exp, Expr::Variable),
                Expr::pow(Expr::Variable, Expr::constant(4.0)),
            )
        );
    }

    #[test]
    fn malformed_token_sequence_reports_offset() {
        let err = parse("2*+x").unwrap_err();
        assert_eq!(err.offset, 2);
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn non_constant_exponent_rejected() {
        let err = parse("x^x").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonConstantExponent);
        let err = parse("2^(1+x)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonConstantExponent);
        // Constant exponents of any shape are fine.
        assert!(parse("x^(1/2)").is_ok());
        assert!(parse("x^-1").is_ok());
    }

    #[test]
    fn unknown_identifier() {
        let err = parse("foo(x)").unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::UnknownIdentifier("foo".to_string())
        );
        assert_eq!(err.offset, 0);
        assert!(matches!(
            parse("2*y").unwrap_err().kind,
            ParseErrorKind::UnknownIdentifier(_)
        ));
    }

    #[test]
    fn precedence_and_associativity() {
        // 1+2*3 groups the product first.
        assert_eq!(
            parse("1+2*3").unwrap(),
            Expr::add(
                Expr::constant(1.0),
                Expr::mul(Expr::constant(2.0), Expr::constant(3.0))
            )
        );
        // ^ is right-associative: 2^3^2 = 2^(3^2).
        assert_eq!(
            parse("2^3^2").unwrap(),
            Expr::pow(
                Expr::constant(2.0),
                Expr::pow(Expr::constant(3.0), Expr::constant(2.0))
            )
        );
        // '^' binds tighter than unary minus: -x^2 = -(x^2).
        assert_eq!(
            parse("-x^2").unwrap(),
            Expr::neg(Expr::pow(Expr::Variable, Expr::constant(2.0)))
        );
        // Signed exponents parse: x^-1 = x^(-1).
        assert_eq!(
            parse("x^-1").unwrap(),
            Expr::pow(Expr::Variable, Expr::neg(Expr::constant(1.0)))
        );
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse(" 1 +\t2 * x\n").unwrap(), parse("1+2*x").unwrap());
    }

    #[test]
    fn numbers_with_fraction_and_exponent() {
        assert_eq!(parse("2.5e-3").unwrap(), Expr::constant(2.5e-3));
        assert_eq!(parse("1E+2").unwrap(), Expr::constant(100.0));
        // "2e" is NUMBER followed by the constant e, not a malformed literal.
        assert_eq!(
            parse("2e").unwrap_err().offset,
            1 // "2" then "e" with no operator: trailing input at offset 1
        );
        assert_eq!(
            parse("2*e").unwrap(),
            Expr::mul(Expr::constant(2.0), Expr::NamedConstant(NamedConstant::E))
        );
    }

    #[test]
    fn overflowing_literal_rejected() {
        assert!(matches!(
            parse("1e999").unwrap_err().kind,
            ParseErrorKind::Syntax(_)
        ));
    }

    #[test]
    fn paper_function_strings_parse() {
        assert!(parse("(sqrt(pi)/2)*x*erf(x)+exp(-x^2)/2-1/2").is_ok());
        assert!(parse("sin(x)").is_ok());
    }
}
