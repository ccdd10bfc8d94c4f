//! Upper-bound exponents from moment inequalities, computed in exact
//! rational arithmetic.
//!
//! Every rule here bounds a solution count by `N^(e + ε)` for an exact
//! rational `e`; the ε is carried as a flag and never evaluated, so
//! exponent comparisons are exact. Three rules cover even moments of the
//! alternating equation (Hua's lemma for powers of two, the Waring-moment
//! bound for high moments, and a Cauchy–Schwarz chain over the binary
//! decomposition for everything in between); a fourth covers general
//! equations in the many-variables regime of the circle method.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::equation::DiagonalEquation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperRule {
    Hua,
    Waring,
    CauchySchwarz,
    CmGeneral,
}

impl UpperRule {
    pub fn as_str(&self) -> &'static str {
        match self {
            UpperRule::Hua => "hua",
            UpperRule::Waring => "waring",
            UpperRule::CauchySchwarz => "cauchy_schwarz",
            UpperRule::CmGeneral => "cm_general",
        }
    }
}

impl fmt::Display for UpperRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exponent bound `count << N^(exponent + ε)` with the applicability
/// condition that was verified when it was derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentBound {
    pub exponent: BigRational,
    pub plus_epsilon: bool,
    pub rule: UpperRule,
    pub condition: String,
}

impl ExponentBound {
    fn new(exponent: BigRational, rule: UpperRule, condition: String) -> Self {
        Self {
            exponent,
            plus_epsilon: true,
            rule,
            condition,
        }
    }

    /// Exponent with the epsilon marker, e.g. `25+eps`.
    pub fn render(&self) -> String {
        if self.plus_epsilon {
            format!("{}+eps", self.exponent)
        } else {
            self.exponent.to_string()
        }
    }
}

/// Binary decomposition `v = 2^(j1) + ... + 2^(jt)` of an even number,
/// with strictly decreasing exponents `j1 > ... > jt >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryDecomposition {
    pub exponents: Vec<u32>,
}

impl BinaryDecomposition {
    pub fn value(&self) -> u64 {
        self.exponents.iter().map(|&j| 1u64 << j).sum()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UpperError {
    #[error("rule not applicable: {0}")]
    NotApplicable(String),
}

fn rational(n: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ratio(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Hua's lemma: the `2^j`-th moment of the degree-k Weyl sum is
/// `<< N^(2^j - j + ε)` for `1 <= j <= k`; equivalently, the alternating
/// equation on `2^j` variables has at most that many solutions.
pub fn hua_exponent(j: u32, k: u32) -> Result<ExponentBound, UpperError> {
    if j < 1 || j > k {
        return Err(UpperError::NotApplicable(format!(
            "Hua's lemma needs 1 <= j <= k, got j={j}, k={k}"
        )));
    }
    if j > 62 {
        return Err(UpperError::NotApplicable(format!(
            "moment order 2^{j} is out of range"
        )));
    }
    Ok(ExponentBound::new(
        rational((1i128 << j) - j as i128),
        UpperRule::Hua,
        format!("1 <= j={j} <= k={k}"),
    ))
}

/// Waring-moment bound: the `v`-th moment is `<< N^(v - k + ε)` once the
/// moment order satisfies `v > 2^k` (i.e. `v/2 > 2^(k-1)`).
pub fn waring_exponent(v: u64, k: u32) -> Result<ExponentBound, UpperError> {
    if k < 1 {
        return Err(UpperError::NotApplicable("degree must be at least 1".into()));
    }
    if v % 2 != 0 {
        return Err(UpperError::NotApplicable(format!(
            "moment order must be even, got {v}"
        )));
    }
    let threshold = if k >= 127 { None } else { Some(1u128 << k) };
    let ok = threshold.is_some_and(|t| (v as u128) > t);
    if !ok {
        return Err(UpperError::NotApplicable(format!(
            "Waring-moment bound needs v > 2^k, got v={v}, 2^{k}"
        )));
    }
    Ok(ExponentBound::new(
        rational(v as i128 - k as i128),
        UpperRule::Waring,
        format!("v={v} > 2^{k}"),
    ))
}

/// The exponents of the binary expansion of an even `v >= 2`, descending.
pub fn binary_decomposition(v: u64) -> Result<BinaryDecomposition, UpperError> {
    if v < 2 || v % 2 != 0 {
        return Err(UpperError::NotApplicable(format!(
            "binary decomposition is defined for even v >= 2, got {v}"
        )));
    }
    let exponents: Vec<u32> = (0..64).rev().filter(|&j| v & (1u64 << j) != 0).collect();
    debug_assert!(exponents.last().is_some_and(|&j| j >= 1));
    Ok(BinaryDecomposition { exponents })
}

/// Cauchy–Schwarz chain over the binary decomposition
/// `v = 2^(j1) + ... + 2^(jt)`: splits the v-th moment into Hua moments
/// and yields `v - D` with
/// `D = Σ_{i=1}^{t-1} (j_i + i)/2^i + (j_t + t)/2^(t-1)`,
/// valid for `k >= j1`. A single block (`t = 1`) is exactly Hua's lemma
/// and delegates to it.
pub fn cs_exponent(v: u64, k: u32) -> Result<ExponentBound, UpperError> {
    let decomp = binary_decomposition(v)?;
    let j1 = decomp.exponents[0];
    if k < j1 {
        return Err(UpperError::NotApplicable(format!(
            "Cauchy–Schwarz chain needs k >= j1, got k={k}, j1={j1}"
        )));
    }
    let t = decomp.exponents.len();
    if t == 1 {
        return hua_exponent(j1, k);
    }
    let mut discount = BigRational::from_integer(BigInt::from(0));
    for (idx, &ji) in decomp.exponents[..t - 1].iter().enumerate() {
        let i = idx as i128 + 1;
        discount += ratio(ji as i128 + i, 1i128 << i);
    }
    let jt = *decomp.exponents.last().expect("t >= 2");
    discount += ratio(jt as i128 + t as i128, 1i128 << (t - 1));
    Ok(ExponentBound::new(
        rational(v as i128) - discount,
        UpperRule::CauchySchwarz,
        format!("k={k} >= j1={j1}"),
    ))
}

/// Whether the circle-method theorem guarantees nontrivial solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solvability {
    Guaranteed,
    Unknown,
}

impl Solvability {
    pub fn as_str(&self) -> &'static str {
        match self {
            Solvability::Guaranteed => "guaranteed",
            Solvability::Unknown => "unknown",
        }
    }
}

fn cm_size_conditions(s: u64, k: u32) -> (bool, String) {
    let pow_ok = if k >= 63 {
        false // s cannot reach 2^k + 1
    } else {
        s as u128 >= (1u128 << k) + 1
    };
    let quad = 4 * (k as u64) * (k as u64) - 4 * k as u64 + 1;
    let quad_ok = s >= quad;
    (
        pow_ok && quad_ok,
        format!("s={s} >= 2^{k}+1 and s >= 4k^2-4k+1 = {quad}"),
    )
}

/// Circle-method solvability test: `guaranteed` when `s >= 2^k + 1`,
/// `s >= 4k^2 - 4k + 1`, and (for even degrees) the coefficients take both
/// signs; everything else is `unknown`, never "impossible".
pub fn cm_solvability(eq: &DiagonalEquation) -> Result<Solvability, UpperError> {
    let k = eq.degree();
    if k < 2 {
        return Err(UpperError::NotApplicable(
            "circle-method conditions need k >= 2".into(),
        ));
    }
    let (size_ok, _) = cm_size_conditions(eq.s() as u64, k);
    let sign_ok = if k % 2 == 0 {
        let sig = eq.signature();
        sig.positives > 0 && sig.negatives > 0
    } else {
        true
    };
    Ok(if size_ok && sign_ok {
        Solvability::Guaranteed
    } else {
        Solvability::Unknown
    })
}

fn cm_exponent_core(s: u64, k: u32) -> Result<ExponentBound, UpperError> {
    if k < 2 {
        return Err(UpperError::NotApplicable(
            "circle-method bound needs k >= 2".into(),
        ));
    }
    let (size_ok, condition) = cm_size_conditions(s, k);
    if !size_ok {
        return Err(UpperError::NotApplicable(format!(
            "outside the circle-method regime: {condition}"
        )));
    }
    Ok(ExponentBound::new(
        rational(s as i128 - k as i128),
        UpperRule::CmGeneral,
        condition,
    ))
}

/// Circle-method upper exponent `s - k` for general coefficient patterns
/// in the many-variables regime.
pub fn cm_upper_exponent(eq: &DiagonalEquation) -> Result<ExponentBound, UpperError> {
    cm_exponent_core(eq.s() as u64, eq.degree())
}

/// Which family of upper-bound rules to draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundForm {
    /// Even moment of the alternating +-1 equation on `v` variables.
    AlternatingMoment,
    /// General coefficients on `s` variables.
    General,
}

/// The smallest applicable exponent, with the winning rule recorded.
/// For the alternating moment form the candidates are Hua (when `v` is a
/// power of two), the Cauchy–Schwarz chain and the Waring-moment bound;
/// the general form uses the circle-method exponent.
pub fn best_upper_exponent(
    v_or_s: u64,
    k: u32,
    form: BoundForm,
) -> Result<ExponentBound, UpperError> {
    match form {
        BoundForm::General => cm_exponent_core(v_or_s, k),
        BoundForm::AlternatingMoment => {
            let v = v_or_s;
            let mut candidates: Vec<ExponentBound> = Vec::new();
            if v.is_power_of_two() && v >= 2 {
                if let Ok(b) = hua_exponent(v.trailing_zeros(), k) {
                    candidates.push(b);
                }
            }
            if let Ok(b) = cs_exponent(v, k) {
                candidates.push(b);
            }
            if let Ok(b) = waring_exponent(v, k) {
                candidates.push(b);
            }
            // first strict minimum wins, so rule preference on ties is
            // Hua, then Cauchy–Schwarz, then Waring
            let mut best: Option<ExponentBound> = None;
            for c in candidates {
                if best.as_ref().is_none_or(|b| c.exponent < b.exponent) {
                    best = Some(c);
                }
            }
            best.ok_or_else(|| {
                UpperError::NotApplicable(format!(
                    "no moment rule applies for v={v}, k={k}"
                ))
            })
        }
    }
}

/// `Some(v)` when the equation is an even alternating +-1 form whose count
/// is the `v`-th moment of the Weyl sum (all magnitudes 1, equal sign
/// counts).
pub fn alternating_moment_order(eq: &DiagonalEquation) -> Option<u64> {
    let s = eq.s();
    if s % 2 != 0 {
        return None;
    }
    if eq.coeffs().iter().any(|&c| c.unsigned_abs() != 1) {
        return None;
    }
    let pos = eq.coeffs().iter().filter(|&&c| c > 0).count();
    (2 * pos == s).then_some(s as u64)
}
