//! Concrete syntax for products of generalized Severi-Brauer varieties:
//!
//! ```text
//! product := factor ("x" factor)*
//! factor  := "X(" integer ";" name ")"
//! ```
//!
//! The integer is the reduced dimension `p^k`, not `k`. Whitespace is
//! allowed between tokens; `×` is accepted as a separator as well.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset} in `{input}`")]
pub struct ExprError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorExpr {
    pub reduced_dimension: u64,
    pub algebra: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyExpr {
    pub factors: Vec<FactorExpr>,
}

/// Characters that may not appear in an algebra name.
pub fn is_name_char(c: char) -> bool {
    !(c.is_whitespace() || matches!(c, '(' | ')' | ';'))
}

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError { input: self.input.to_string(), offset: self.pos, message: message.into() }
    }

    fn expect(&mut self, token: &str) -> Result<(), ExprError> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn eat_separator(&mut self) -> bool {
        self.skip_ws();
        for sep in ["x", "×"] {
            if self.rest().starts_with(sep) {
                self.pos += sep.len();
                return true;
            }
        }
        false
    }

    fn integer(&mut self) -> Result<u64, ExprError> {
        self.skip_ws();
        let digits: &str = {
            let rest = self.rest();
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            &rest[..end]
        };
        if digits.is_empty() {
            return Err(self.error("expected a reduced dimension"));
        }
        let value = digits.parse::<u64>().map_err(|_| self.error("reduced dimension out of range"))?;
        self.pos += digits.len();
        Ok(value)
    }

    fn name(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest.find(|c: char| !is_name_char(c)).unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error("expected an algebra name"));
        }
        self.pos += end;
        Ok(rest[..end].to_string())
    }

    fn factor(&mut self) -> Result<FactorExpr, ExprError> {
        self.expect("X")?;
        self.expect("(")?;
        let reduced_dimension = self.integer()?;
        self.expect(";")?;
        let algebra = self.name()?;
        self.expect(")")?;
        Ok(FactorExpr { reduced_dimension, algebra })
    }
}

impl FromStr for VarietyExpr {
    type Err = ExprError;

    fn from_str(input: &str) -> Result<Self, ExprError> {
        let mut cursor = Cursor { input, pos: 0 };
        let mut factors = vec![cursor.factor()?];
        while cursor.eat_separator() {
            factors.push(cursor.factor()?);
        }
        cursor.skip_ws();
        if !cursor.rest().is_empty() {
            return Err(cursor.error("unexpected trailing input"));
        }
        Ok(VarietyExpr { factors })
    }
}

impl fmt::Display for FactorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({};{})", self.reduced_dimension, self.algebra)
    }
}

impl fmt::Display for VarietyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" x "))
    }
}
