//! Equation data model: diagonal forms `c1*x1^k + ... + cs*xs^k = 0`,
//! the counting box, text parsing and canonical normalization.

use std::fmt;

use thiserror::Error;

/// Largest permitted coefficient magnitude. Together with the box guard
/// (`abs_sum_bound`) this keeps every partial sum inside `i128`.
pub const MAX_COEFF: i64 = 1 << 31;

/// A homogeneous diagonal equation `c1*x1^k + ... + cs*xs^k = 0`.
///
/// Coefficients are nonzero integers, the degree is a common positive
/// exponent shared by all terms. Values are immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalEquation {
    coeffs: Vec<i64>,
    degree: u32,
}

/// The hypercube `{1, ..., side}^s` in which solutions are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cube {
    side: u64,
}

/// Shape summary of an equation: variable count, degree, sign counts and
/// the coefficient sum (used to detect the zero-sum class).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub s: usize,
    pub k: u32,
    pub positives: usize,
    pub negatives: usize,
    pub coefficient_sum: i128,
    pub zero_sum: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquationError {
    #[error("equation needs at least 2 terms, found {0}")]
    TooFewTerms(usize),
    #[error("coefficient of term {0} is zero")]
    ZeroCoefficient(usize),
    #[error("coefficient {0} exceeds the 2^31 magnitude cap")]
    CoefficientTooLarge(i64),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("box side must be at least 1")]
    ZeroSide,
}

impl DiagonalEquation {
    /// Build an equation from raw coefficients and a common degree.
    pub fn new(coeffs: Vec<i64>, degree: u32) -> Result<Self, EquationError> {
        if degree == 0 {
            return Err(EquationError::ZeroDegree);
        }
        if coeffs.len() < 2 {
            return Err(EquationError::TooFewTerms(coeffs.len()));
        }
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                return Err(EquationError::ZeroCoefficient(i + 1));
            }
            if c.unsigned_abs() > MAX_COEFF as u64 {
                return Err(EquationError::CoefficientTooLarge(c));
            }
        }
        Ok(Self { coeffs, degree })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of variables.
    pub fn s(&self) -> usize {
        self.coeffs.len()
    }

    /// Canonical form: coefficients divided by their gcd, and all signs
    /// flipped when negative coefficients outnumber `s/2`. The solution
    /// set inside any box is unchanged, and the map is idempotent.
    pub fn normalize(&self) -> Self {
        let mut g: u64 = 0;
        for &c in &self.coeffs {
            g = gcd_u64(g, c.unsigned_abs());
        }
        debug_assert!(g >= 1);
        let mut coeffs: Vec<i64> = self.coeffs.iter().map(|&c| c / g as i64).collect();
        let negatives = coeffs.iter().filter(|&&c| c < 0).count();
        if 2 * negatives > coeffs.len() {
            for c in &mut coeffs {
                *c = -*c;
            }
        }
        Self {
            coeffs,
            degree: self.degree,
        }
    }

    pub fn signature(&self) -> Signature {
        let positives = self.coeffs.iter().filter(|&&c| c > 0).count();
        let negatives = self.coeffs.len() - positives;
        let coefficient_sum: i128 = self.coeffs.iter().map(|&c| c as i128).sum();
        Signature {
            s: self.coeffs.len(),
            k: self.degree,
            positives,
            negatives,
            coefficient_sum,
            zero_sum: coefficient_sum == 0,
        }
    }

    /// `Σ|ci| * side^k` if it fits in 127 bits; `None` means the box is
    /// too large for exact `i128` arithmetic and must be rejected.
    pub fn abs_sum_bound(&self, side: u64) -> Option<i128> {
        let pow = checked_pow_u128(side as u128, self.degree)?;
        let mut total: u128 = 0;
        for &c in &self.coeffs {
            total = total.checked_add((c.unsigned_abs() as u128).checked_mul(pow)?)?;
        }
        i128::try_from(total).ok()
    }

    /// Render in the text grammar accepted by [`parse_equation`].
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push('x');
            out.push_str(&(i + 1).to_string());
            if self.degree != 1 {
                out.push('^');
                out.push_str(&self.degree.to_string());
            }
        }
        out.push_str(" = 0");
        out
    }
}

impl fmt::Display for DiagonalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Cube {
    pub fn new(side: u64) -> Result<Self, EquationError> {
        if side == 0 {
            return Err(EquationError::ZeroSide);
        }
        Ok(Self { side })
    }

    pub fn side(&self) -> u64 {
        self.side
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub(crate) fn checked_pow_u128(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

// ---------------------------------------------------------------------------
// Text parser
// ---------------------------------------------------------------------------

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("mixed degrees at position {pos}: term has degree {found}, expected {expected}")]
    MixedDegrees {
        pos: usize,
        expected: u32,
        found: u32,
    },
    #[error("zero coefficient at position {pos}")]
    ZeroCoefficient { pos: usize },
    #[error("coefficient at position {pos} exceeds the 2^31 magnitude cap")]
    CoefficientTooLarge { pos: usize },
    #[error("variable x{index} appears twice (second occurrence at position {pos})")]
    DuplicateVariable { pos: usize, index: u64 },
    #[error("equation needs at least 2 terms, found {found} (at position {pos})")]
    TooFewTerms { pos: usize, found: usize },
}

/// Parse an equation such as `x1^2 + x2^2 - 4*x3^2 = 0`.
///
/// Grammar: `equation := term (('+'|'-') term)* '=' '0'` with
/// `term := [uint '*'] 'x' index ['^' uint]`; a missing exponent means
/// degree 1, and all exponents must agree. A leading sign is accepted.
/// Coefficients are returned in variable-index order, unnormalized.
pub fn parse_equation(text: &str) -> Result<DiagonalEquation, ParseError> {
    Parser::new(text).parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn syntax(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos,
            message: message.into(),
        }
    }

    fn parse_uint(&mut self, what: &str) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        let mut any = false;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            any = true;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| self.syntax(start, format!("{what} is too large")))?;
            self.pos += 1;
        }
        if !any {
            return Err(self.syntax(start, format!("expected {what}")));
        }
        Ok((value, start))
    }

    fn parse(&mut self) -> Result<DiagonalEquation, ParseError> {
        let mut terms: Vec<(u64, i64)> = Vec::new(); // (variable index, signed coeff)
        let mut degree: Option<u32> = None;

        loop {
            self.skip_ws();
            let term_start = self.pos;
            let sign = match self.peek() {
                Some(b'-') => {
                    self.bump();
                    -1i64
                }
                Some(b'+') => {
                    self.bump();
                    1
                }
                Some(_) if terms.is_empty() => 1,
                Some(_) => {
                    return Err(self.syntax(self.pos, "expected '+', '-' or '=' between terms"))
                }
                None => {
                    return Err(self.syntax(self.pos, "unexpected end of input, expected a term"))
                }
            };

            // optional magnitude, optional '*'
            let mut coeff_mag: u64 = 1;
            let mut coeff_pos = term_start;
            if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
                let (value, pos) = self.parse_uint("coefficient")?;
                coeff_mag = value;
                coeff_pos = pos;
                if self.peek() == Some(b'*') {
                    self.bump();
                }
            }
            if coeff_mag == 0 {
                return Err(ParseError::ZeroCoefficient { pos: coeff_pos });
            }
            if coeff_mag > MAX_COEFF as u64 {
                return Err(ParseError::CoefficientTooLarge { pos: coeff_pos });
            }

            match self.peek() {
                Some(b'x') | Some(b'X') => {
                    self.bump();
                }
                _ => return Err(self.syntax(self.pos, "expected variable 'x<index>'")),
            }
            let (index, index_pos) = self.parse_uint("variable index")?;
            if index == 0 {
                return Err(self.syntax(index_pos, "variable index must be at least 1"));
            }
            if terms.iter().any(|&(i, _)| i == index) {
                return Err(ParseError::DuplicateVariable {
                    pos: index_pos,
                    index,
                });
            }

            let (term_degree, degree_pos) = if self.peek() == Some(b'^') {
                self.bump();
                let (value, pos) = self.parse_uint("exponent")?;
                if value == 0 {
                    return Err(self.syntax(pos, "exponent must be at least 1"));
                }
                if value > u32::MAX as u64 {
                    return Err(self.syntax(pos, "exponent is too large"));
                }
                (value as u32, pos)
            } else {
                (1, term_start)
            };
            match degree {
                None => degree = Some(term_degree),
                Some(expected) if expected != term_degree => {
                    return Err(ParseError::MixedDegrees {
                        pos: degree_pos,
                        expected,
                        found: term_degree,
                    });
                }
                Some(_) => {}
            }

            terms.push((index, sign * coeff_mag as i64));

            match self.peek() {
                Some(b'+') | Some(b'-') => continue,
                Some(b'=') => break,
                Some(_) => {
                    return Err(self.syntax(self.pos, "expected '+', '-' or '=' after a term"))
                }
                None => {
                    if terms.len() < 2 {
                        return Err(ParseError::TooFewTerms {
                            pos: self.pos,
                            found: terms.len(),
                        });
                    }
                    return Err(self.syntax(self.pos, "expected '= 0' at end of equation"));
                }
            }
        }

        self.bump(); // '='
        let zero_pos = self.pos;
        match self.parse_uint("right-hand side")? {
            (0, _) => {}
            _ => {
                return Err(self.syntax(
                    zero_pos,
                    "right-hand side must be 0 (homogeneous equations only)",
                ))
            }
        }
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.syntax(self.pos, "trailing input after '= 0'"));
        }

        if terms.len() < 2 {
            return Err(ParseError::TooFewTerms {
                pos: 0,
                found: terms.len(),
            });
        }
        terms.sort_by_key(|&(i, _)| i);
        let coeffs = terms.iter().map(|&(_, c)| c).collect();
        DiagonalEquation::new(coeffs, degree.expect("at least one term parsed")).map_err(|e| {
            match e {
                EquationError::TooFewTerms(found) => ParseError::TooFewTerms { pos: 0, found },
                // remaining variants are ruled out during term parsing
                other => ParseError::Syntax {
                    pos: 0,
                    message: other.to_string(),
                },
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(coeffs: &[i64], k: u32) -> DiagonalEquation {
        DiagonalEquation::new(coeffs.to_vec(), k).unwrap()
    }

    #[test]
    fn parses_quadratic_five_terms() {
        let e = parse_equation("x1^2 + x2^2 - 4*x3^2 + x4^2 - 2*x5^2 = 0").unwrap();
        assert_eq!(e.coeffs(), &[1, 1, -4, 1, -2]);
        assert_eq!(e.degree(), 2);
    }

    #[test]
    fn parses_cubic_fermat_form() {
        let e = parse_equation("x1^3 + x2^3 - x3^3 = 0").unwrap();
        assert_eq!(e.coeffs(), &[1, 1, -1]);
        assert_eq!(e.degree(), 3);
    }

    #[test]
    fn rejects_mixed_degrees_with_position() {
        let err = parse_equation("x1^2 + x2").unwrap_err();
        match err {
            ParseError::MixedDegrees {
                expected, found, ..
            } => {
                assert_eq!(expected, 2);
                assert_eq!(found, 1);
            }
            other => panic!("expected MixedDegrees, got {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_coefficient() {
        let err = parse_equation("0*x1^2 + x2^2 = 0").unwrap_err();
        assert!(matches!(err, ParseError::ZeroCoefficient { pos: 0 }));
    }

    #[test]
    fn rejects_single_term() {
        let err = parse_equation("x1^2 = 0").unwrap_err();
        assert!(matches!(err, ParseError::TooFewTerms { found: 1, .. }));
    }

    #[test]
    fn rejects_duplicate_variable() {
        let err = parse_equation("x1^2 + x1^2 = 0").unwrap_err();
        assert!(matches!(
            err,
            ParseError::DuplicateVariable { index: 1, .. }
        ));
    }

    #[test]
    fn rejects_nonzero_rhs() {
        assert!(parse_equation("x1^2 + x2^2 = 1").is_err());
    }

    #[test]
    fn accepts_leading_sign_and_index_order() {
        let e = parse_equation("-6*x1^3 - 3*x2^3 + 3*x3^3 + 2*x4^3 + 4*x5^3 = 0").unwrap();
        assert_eq!(e.coeffs(), &[-6, -3, 3, 2, 4]);
        // terms sorted by variable index regardless of input order
        let e = parse_equation("x2^2 - x1^2 = 0").unwrap();
        assert_eq!(e.coeffs(), &[-1, 1]);
    }

    #[test]
    fn normalize_flips_majority_negative() {
        let e = eq(&[6, 3, -3, -2, -4], 3).normalize();
        assert_eq!(e.coeffs(), &[-6, -3, 3, 2, 4]);
    }

    #[test]
    fn normalize_divides_gcd() {
        let e = eq(&[2, 4, -6], 3).normalize();
        assert_eq!(e.coeffs(), &[1, 2, -3]);
    }

    #[test]
    fn normalize_idempotent_on_canonical() {
        let e = eq(&[1, 1, -1], 2);
        assert_eq!(e.normalize(), e);
        let f = eq(&[6, 3, -3, -2, -4], 5);
        assert_eq!(f.normalize().normalize(), f.normalize());
    }

    #[test]
    fn signature_examples() {
        let sig = eq(&[1, -1, 1, -1], 4).signature();
        assert_eq!(sig.s, 4);
        assert_eq!(sig.coefficient_sum, 0);
        assert!(sig.zero_sum);

        let sig = eq(&[1, 2, -3], 5).signature();
        assert_eq!(sig.s, 3);
        assert!(sig.zero_sum);

        let sig = eq(&[1, 1, -1], 3).signature();
        assert_eq!(sig.coefficient_sum, 1);
        assert!(!sig.zero_sum);
        assert_eq!(sig.positives, 2);
        assert_eq!(sig.negatives, 1);
    }

    #[test]
    fn pretty_round_trips() {
        for coeffs in [vec![1i64, -1], vec![1, 2, -3], vec![-6, -3, 3, 2, 4]] {
            for k in [1u32, 2, 7] {
                let e = eq(&coeffs, k);
                let back = parse_equation(&e.pretty()).unwrap();
                assert_eq!(back, e, "pretty form: {}", e.pretty());
            }
        }
    }

    #[test]
    fn coefficient_cap_enforced() {
        assert!(matches!(
            DiagonalEquation::new(vec![i64::MAX, -1], 2),
            Err(EquationError::CoefficientTooLarge(_))
        ));
        // 2^31 itself is allowed
        assert!(DiagonalEquation::new(vec![MAX_COEFF, -1], 2).is_ok());
    }

    #[test]
    fn abs_sum_bound_guards_box() {
        let e = eq(&[1, -1], 2);
        assert!(e.abs_sum_bound(10).is_some());
        // 2 * (2^63)^2 = 2^127 does not fit in 127 bits
        assert!(e.abs_sum_bound(1 << 63).is_none());
        assert_eq!(eq(&[1, -1], 1).abs_sum_bound(5), Some(10));
    }

    #[test]
    fn cube_requires_positive_side() {
        assert!(Cube::new(0).is_err());
        assert_eq!(Cube::new(7).unwrap().side(), 7);
    }
}
