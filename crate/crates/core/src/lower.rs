//! Lower-bound constructions for solution counts.
//!
//! Every bound here is certified by an explicit family of solutions:
//! symmetric pairings of equal/swapped variables, rays through a known
//! seed solution, exact two-variable ray counts, and products of bounds
//! for variable-disjoint sub-equations. The grouping heuristic composes
//! these pieces, searching over ways to split an equation into matched
//! coefficient pairs plus a seeded residual.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{kth_root, pow_u128};
use crate::engine::{find_seed, EngineConfig, SeedSolution};
use crate::equation::DiagonalEquation;

/// Which construction produced a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    SymmetricPair,
    TwoTerm,
    PairProduct,
    Ray,
    LinearThree,
    Pythagorean,
    SplitProduct,
    Grouping,
}

impl Rule {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rule::SymmetricPair => "symmetric_pair",
            Rule::TwoTerm => "two_term",
            Rule::PairProduct => "pair_product",
            Rule::Ray => "ray",
            Rule::LinearThree => "linear_three",
            Rule::Pythagorean => "pythagorean",
            Rule::SplitProduct => "split_product",
            Rule::Grouping => "grouping",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One derivation step; the factors of a bound's trace multiply to its value.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub subequation: String,
    pub rule: Rule,
    pub factor: BigUint,
}

/// A certified lower bound at a concrete box side.
#[derive(Debug, Clone)]
pub struct LowerBound {
    pub value: BigUint,
    pub rule: Rule,
    pub trace: Vec<TraceStep>,
    /// Present when the bound degraded (for example, no seed was found).
    pub diagnosis: Option<String>,
}

impl LowerBound {
    pub fn trace_product(&self) -> BigUint {
        self.trace.iter().map(|s| &s.factor).product()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RuleError {
    #[error("rule not applicable: {0}")]
    NotApplicable(String),
    #[error("overflow guard: {0}")]
    Overflow(String),
}

// ---------------------------------------------------------------------------
// Symmetric pairings for the alternating +-1 equation on 2^j variables
// ---------------------------------------------------------------------------

/// Count the symmetric solution classes of
/// `x1^k - y1^k + ... + x_{2^(j-1)}^k - y_{2^(j-1)}^k = 0`:
///
/// `S(j,N) = N^(2^(j-1)) + Σ_{i=1}^{j-1} C(2^(j-1), 2^i) (N(N-1))^(2^(i-1)) N^(2^(j-1) - 2^i)`
///
/// These classes pick `2^i` positions whose values swap pairwise and keep
/// the rest equal, so they are solutions for every degree `k >= 1`; the
/// value is a lower bound independent of `k`. Specializes to `2N^2 - N`
/// at `j = 2` and `8N^4 - 8N^3 + N^2` at `j = 3`.
pub fn symmetric_pair_count(j: u32, n: u64) -> BigUint {
    assert!(j >= 1, "j must be at least 1");
    assert!(j <= 32, "2^{j} variables exceeds any tractable size");
    let half = 1u32 << (j - 1);
    let nn = BigUint::from(n);
    let swapped = &nn * BigUint::from(n.saturating_sub(1)); // N(N-1)
    let mut total = nn.pow(half);
    for i in 1..j {
        let block = 1u32 << i;
        let term = binomial(BigUint::from(half), BigUint::from(block))
            * swapped.pow(1u32 << (i - 1))
            * nn.pow(half - block);
        total += term;
    }
    total
}

/// `Some(j)` when the equation is the alternating form on `2^j` variables
/// (all coefficients of magnitude 1, equally many of each sign).
pub fn symmetric_form(eq: &DiagonalEquation) -> Option<u32> {
    let s = eq.s();
    if !s.is_power_of_two() {
        return None;
    }
    if eq.coeffs().iter().any(|&c| c.unsigned_abs() != 1) {
        return None;
    }
    let pos = eq.coeffs().iter().filter(|&&c| c > 0).count();
    if 2 * pos != s {
        return None;
    }
    Some(s.trailing_zeros())
}

// ---------------------------------------------------------------------------
// Two-variable ray counts
// ---------------------------------------------------------------------------

/// Exact count of `a1*x1^k = a2*x2^k` in `{1..N}^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoTermCount {
    pub count: u64,
    /// `Some((p, q))` when `a2/a1 = (p/q)^k` in lowest terms; solutions are
    /// `x1 = p*m, x2 = q*m`. `None` marks an irrational ratio (count 0).
    pub ratio: Option<(u64, u64)>,
}

/// Count solutions of `a1*x1^k = a2*x2^k` exactly. Nonzero only when the
/// ratio `a2/a1` is the k-th power of a rational `p/q`, in which case the
/// solutions form the single ray `x1 = p*m, x2 = q*m` and the count is
/// `floor(N / max(p, q))`.
pub fn two_term_count(a1: u64, a2: u64, k: u32, n: u64) -> TwoTermCount {
    assert!(a1 >= 1 && a2 >= 1 && k >= 1);
    match ratio_kth_root(a1, a2, k) {
        Some((p, q)) => TwoTermCount {
            count: n / p.max(q),
            ratio: Some((p, q)),
        },
        None => TwoTermCount {
            count: 0,
            ratio: None,
        },
    }
}

/// `(p, q)` coprime with `a2/a1 = (p/q)^k`, if the ratio is such a power.
fn ratio_kth_root(a1: u64, a2: u64, k: u32) -> Option<(u64, u64)> {
    let g = num_integer::gcd(a1, a2);
    let num = a2 / g;
    let den = a1 / g;
    let p = kth_root(num, k);
    let q = kth_root(den, k);
    if pow_u128(p, k) == num as u128 && pow_u128(q, k) == den as u128 {
        Some((p, q))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Pair-product bound for alternating-sign pairable coefficients
// ---------------------------------------------------------------------------

/// For an even-length equation whose consecutive pairs `(c_{2i-1} > 0,
/// c_{2i} < 0)` all have ratios that are k-th powers of rationals, the
/// product of the exact two-term ray counts is a lower bound: the pair
/// rays are variable-disjoint, so their product embeds in the solution set.
pub fn pair_product_bound(eq: &DiagonalEquation, n: u64) -> Result<LowerBound, RuleError> {
    let s = eq.s();
    if s % 2 != 0 {
        return Err(RuleError::NotApplicable(format!(
            "pair product needs an even number of variables, got {s}"
        )));
    }
    let k = eq.degree();
    let coeffs = eq.coeffs();
    let mut value = BigUint::one();
    let mut trace = Vec::with_capacity(s / 2);
    for i in 0..s / 2 {
        let c_pos = coeffs[2 * i];
        let c_neg = coeffs[2 * i + 1];
        if c_pos <= 0 || c_neg >= 0 {
            return Err(RuleError::NotApplicable(format!(
                "pair {} is not a (+, -) coefficient pair",
                i + 1
            )));
        }
        let tt = two_term_count(c_pos.unsigned_abs(), c_neg.unsigned_abs(), k, n);
        if tt.ratio.is_none() {
            return Err(RuleError::NotApplicable(format!(
                "pair {}: {}/{} is not the k-th power of a rational",
                i + 1,
                c_neg.unsigned_abs(),
                c_pos.unsigned_abs()
            )));
        }
        trace.push(TraceStep {
            subequation: render_subequation(eq, &[2 * i, 2 * i + 1]),
            rule: Rule::TwoTerm,
            factor: BigUint::from(tt.count),
        });
        value *= tt.count;
    }
    Ok(LowerBound {
        value,
        rule: Rule::PairProduct,
        trace,
        diagnosis: None,
    })
}

// ---------------------------------------------------------------------------
// Ray bound from one seed solution
// ---------------------------------------------------------------------------

/// Scalar multiples `λ * seed` for `λ = 1..floor(N / sup)` are distinct
/// solutions of a homogeneous equation, as is every admissible permutation
/// of the seed within equal-coefficient positions.
pub fn ray_bound(seed: &SeedSolution, n: u64) -> LowerBound {
    let value = ray_value(seed, n);
    LowerBound {
        value: value.clone(),
        rule: Rule::Ray,
        trace: vec![TraceStep {
            subequation: format!("ray through {}", render_tuple(&seed.values)),
            rule: Rule::Ray,
            factor: value,
        }],
        diagnosis: None,
    }
}

fn ray_value(seed: &SeedSolution, n: u64) -> BigUint {
    BigUint::from(seed.multiplier) * BigUint::from(n / seed.sup)
}

// ---------------------------------------------------------------------------
// Linear plane count (degree 1, three variables)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearThreeCount {
    pub exact: u128,
    pub estimate: f64,
}

/// Exact count of `a1*x1 + a2*x2 = a3*x3` in `{1..N}^3` by an O(N^2) scan
/// with a divisibility test, next to the closed-form plane estimate
/// `(a3/a2)(a2/a1 - a1/(2 a2)) N(N-1)`. The two agree exactly only at
/// `a1 = a2 = a3 = 1`; in general the estimate drops floor effects.
pub fn linear_three_count(a1: u64, a2: u64, a3: u64, n: u64) -> LinearThreeCount {
    assert!(a1 >= 1 && a2 >= 1 && a3 >= 1);
    let mut exact: u128 = 0;
    for x1 in 1..=n {
        for x2 in 1..=n {
            let t = a1 as u128 * x1 as u128 + a2 as u128 * x2 as u128;
            if t % a3 as u128 == 0 {
                let x3 = t / a3 as u128;
                if x3 >= 1 && x3 <= n as u128 {
                    exact += 1;
                }
            }
        }
    }
    let (a1f, a2f, a3f, nf) = (a1 as f64, a2 as f64, a3 as f64, n as f64);
    let estimate = (a3f / a2f) * (a2f / a1f - a1f / (2.0 * a2f)) * nf * (nf - 1.0);
    LinearThreeCount { exact, estimate }
}

// ---------------------------------------------------------------------------
// Lattice points in the octant sector of a disc
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorCount {
    pub radius_squared: u64,
    pub exact: u64,
    pub estimate: f64,
}

/// Count integer points `(m, n)` with `m > n >= 1` and `m^2 + n^2 <= R`,
/// the parameter sector of the Pythagorean parametrization, next to the
/// area estimate `πR/8`.
pub fn sector_count(r: u64) -> SectorCount {
    let mut exact = 0u64;
    let mut small = 1u64;
    while (small as u128 + 1).pow(2) + (small as u128).pow(2) <= r as u128 {
        let m_max = (r - small * small).isqrt();
        exact += m_max - small;
        small += 1;
    }
    SectorCount {
        radius_squared: r,
        exact,
        estimate: PI * r as f64 / 8.0,
    }
}

// ---------------------------------------------------------------------------
// Quadratic cone counts
// ---------------------------------------------------------------------------

/// Exact count of `a1*x1^2 + a2*x2^2 = a3*x3^2` in `{1..N}^3` by scanning
/// `(x1, x2)` with an integer square root test on the candidate `x3`.
pub fn pythagorean_count(a1: u64, a2: u64, a3: u64, n: u64) -> Result<u64, RuleError> {
    assert!(a1 >= 1 && a2 >= 1 && a3 >= 1);
    let n2 = (n as u128)
        .checked_mul(n as u128)
        .ok_or_else(|| RuleError::Overflow("N^2 exceeds u128".into()))?;
    (a1 as u128)
        .checked_mul(n2)
        .and_then(|t| t.checked_add((a2 as u128).checked_mul(n2)?))
        .ok_or_else(|| RuleError::Overflow("a1*N^2 + a2*N^2 exceeds u128".into()))?;
    let mut count = 0u64;
    for x1 in 1..=n {
        let t1 = a1 as u128 * (x1 as u128 * x1 as u128);
        for x2 in 1..=n {
            let t = t1 + a2 as u128 * (x2 as u128 * x2 as u128);
            if t % a3 as u128 != 0 {
                continue;
            }
            let square = t / a3 as u128;
            let root = square.isqrt();
            if root * root == square && root >= 1 && root <= n as u128 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Asymptotic estimate `π N ln(N) / (8 sqrt(a1/a3))` for the count of
/// `a1*x1^2 + a2*x2^2 = a3*x3^2`; reported as an estimate, not a certified
/// bound. Requires `a1 >= a3 >= 1` with `a1/a3` a perfect square.
pub fn pythagorean_upper_estimate(n: u64, a1: u64, a3: u64) -> Result<f64, RuleError> {
    if a3 < 1 || a1 < a3 {
        return Err(RuleError::NotApplicable(format!(
            "needs a1 >= a3 >= 1, got a1={a1}, a3={a3}"
        )));
    }
    if a1 != a3 {
        if a1 % a3 != 0 {
            return Err(RuleError::NotApplicable(format!(
                "a1/a3 = {a1}/{a3} is not an integer"
            )));
        }
        let ratio = a1 / a3;
        let root = ratio.isqrt();
        if root * root != ratio {
            return Err(RuleError::NotApplicable(format!(
                "a1/a3 = {ratio} is not a perfect square"
            )));
        }
    }
    let scale = ((a1 / a3) as f64).sqrt().max(1.0);
    Ok(PI * n as f64 * (n as f64).ln() / (8.0 * scale))
}

// ---------------------------------------------------------------------------
// Composition of bounds across variable-disjoint pieces
// ---------------------------------------------------------------------------

/// If `b1` and `b2` bound the counts of variable-disjoint equations
/// `f1 = 0` and `f2 = 0`, their product bounds `f1 + f2 = 0`: combining a
/// solution of each piece yields a solution of the sum, and distinct
/// combinations stay distinct.
pub fn split_bound(b1: &BigUint, b2: &BigUint) -> BigUint {
    b1 * b2
}

// ---------------------------------------------------------------------------
// Grouping heuristic
// ---------------------------------------------------------------------------

/// A matched coefficient pair: `c_i x^k` cancels `-c_j y^k` along the ray
/// `x = p*m, y = q*m`, where `|c_j|/|c_i| = (p/q)^k` with coprime `p >= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchedPair {
    pub i: usize,
    pub j: usize,
    pub p: u64,
    pub q: u64,
}

/// How the heuristic split the equation: disjoint matched pairs plus a
/// residual index set handled by seed search.
#[derive(Debug, Clone, Default)]
pub struct PairingPlan {
    pub pairs: Vec<MatchedPair>,
    pub residual: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct GroupingOutcome {
    pub bound: LowerBound,
    pub plan: PairingPlan,
}

/// Above this many variables the pairing search switches from exhaustive
/// enumeration to a greedy matching.
const EXHAUSTIVE_LIMIT: usize = 12;

/// Compose a lower bound by splitting the equation into matched
/// opposite-sign pairs (each contributing its exact two-term ray count)
/// and a residual sub-equation bounded by a seeded ray. All pairings are
/// tried for `s <= 12` and the best bound wins, with ties broken by the
/// lexicographically least plan; larger equations use a greedy matching
/// that prefers equal magnitudes, then lowest indices.
pub fn grouping_heuristic(
    eq: &DiagonalEquation,
    n: u64,
    seed_budget: u64,
    cfg: &EngineConfig,
) -> GroupingOutcome {
    let eq = eq.normalize();
    let s = eq.s();
    let k = eq.degree();
    let coeffs = eq.coeffs();

    let pos: Vec<usize> = (0..s).filter(|&i| coeffs[i] > 0).collect();
    let neg: Vec<usize> = (0..s).filter(|&i| coeffs[i] < 0).collect();

    // pairable edges: opposite signs, magnitude ratio a k-th power
    let mut edges: HashMap<usize, Vec<usize>> = HashMap::new();
    for &i in &pos {
        for &j in &neg {
            if ratio_kth_root(coeffs[i].unsigned_abs(), coeffs[j].unsigned_abs(), k).is_some() {
                edges.entry(i).or_default().push(j);
            }
        }
    }

    let plans: Vec<Vec<(usize, usize)>> = if s <= EXHAUSTIVE_LIMIT {
        let mut plans = Vec::new();
        let mut used = vec![false; s];
        let mut current = Vec::new();
        enumerate_matchings(&pos, &edges, 0, &mut used, &mut current, &mut plans);
        plans
    } else {
        vec![greedy_matching(&pos, &edges, coeffs)]
    };

    let mut seed_cache: HashMap<Vec<usize>, Result<Option<SeedSolution>, String>> = HashMap::new();
    let mut best: Option<Evaluated> = None;
    for pair_list in plans {
        let candidate = evaluate_plan(&eq, &pair_list, n, seed_budget, cfg, &mut seed_cache);
        best = Some(match best.take() {
            None => candidate,
            Some(current_best) => {
                let replace = candidate.bound.value > current_best.bound.value
                    || (candidate.bound.value == current_best.bound.value
                        && candidate.key < current_best.key);
                if replace {
                    candidate
                } else {
                    current_best
                }
            }
        });
    }
    let best = best.expect("at least the empty pairing is always evaluated");
    if best.bound.value == BigUint::zero() {
        // nothing worked; diagnose the whole equation rather than an
        // arbitrary degenerate sub-plan
        let whole = evaluate_plan(&eq, &[], n, seed_budget, cfg, &mut seed_cache);
        return GroupingOutcome {
            bound: whole.bound,
            plan: whole.plan,
        };
    }
    GroupingOutcome {
        bound: best.bound,
        plan: best.plan,
    }
}

/// Tie-break key for equal-value plans: least residual index set first
/// (so a fully paired plan beats one leaning on a seeded ray), then the
/// least pair list.
type PlanKey = (Vec<usize>, Vec<(usize, usize)>);

struct Evaluated {
    bound: LowerBound,
    plan: PairingPlan,
    key: PlanKey,
}

fn enumerate_matchings(
    pos: &[usize],
    edges: &HashMap<usize, Vec<usize>>,
    idx: usize,
    used: &mut Vec<bool>,
    current: &mut Vec<(usize, usize)>,
    plans: &mut Vec<Vec<(usize, usize)>>,
) {
    if idx == pos.len() {
        plans.push(current.clone());
        return;
    }
    let i = pos[idx];
    // leave this variable unmatched
    enumerate_matchings(pos, edges, idx + 1, used, current, plans);
    if let Some(partners) = edges.get(&i) {
        for &j in partners {
            if !used[j] {
                used[j] = true;
                current.push((i, j));
                enumerate_matchings(pos, edges, idx + 1, used, current, plans);
                current.pop();
                used[j] = false;
            }
        }
    }
}

fn greedy_matching(
    pos: &[usize],
    edges: &HashMap<usize, Vec<usize>>,
    coeffs: &[i64],
) -> Vec<(usize, usize)> {
    let mut candidates: Vec<(bool, usize, usize)> = Vec::new();
    for &i in pos {
        if let Some(partners) = edges.get(&i) {
            for &j in partners {
                let unequal = coeffs[i].unsigned_abs() != coeffs[j].unsigned_abs();
                candidates.push((unequal, i, j));
            }
        }
    }
    candidates.sort_unstable(); // equal magnitudes first, then lowest indices
    let mut taken = HashMap::new();
    let mut pairs = Vec::new();
    for (_, i, j) in candidates {
        if !taken.contains_key(&i) && !taken.contains_key(&j) {
            taken.insert(i, ());
            taken.insert(j, ());
            pairs.push((i, j));
        }
    }
    pairs
}

fn evaluate_plan(
    eq: &DiagonalEquation,
    pair_list: &[(usize, usize)],
    n: u64,
    seed_budget: u64,
    cfg: &EngineConfig,
    seed_cache: &mut HashMap<Vec<usize>, Result<Option<SeedSolution>, String>>,
) -> Evaluated {
    let s = eq.s();
    let k = eq.degree();
    let coeffs = eq.coeffs();
    let mut value = BigUint::one();
    let mut trace = Vec::new();
    let mut pairs = Vec::new();
    let mut in_pair = vec![false; s];

    for &(i, j) in pair_list {
        in_pair[i] = true;
        in_pair[j] = true;
        let tt = two_term_count(coeffs[i].unsigned_abs(), coeffs[j].unsigned_abs(), k, n);
        let (p, q) = tt.ratio.expect("plan pairs are prefiltered to rational ratios");
        // orient so that p >= q (the i side carries the larger ray step)
        let pair = if p >= q {
            MatchedPair { i, j, p, q }
        } else {
            MatchedPair {
                i: j,
                j: i,
                p: q,
                q: p,
            }
        };
        pairs.push(pair);
        trace.push(TraceStep {
            subequation: render_subequation(eq, &[i, j]),
            rule: Rule::TwoTerm,
            factor: BigUint::from(tt.count),
        });
        value *= tt.count;
    }

    let residual: Vec<usize> = (0..s).filter(|&i| !in_pair[i]).collect();
    let mut diagnosis = None;

    if !residual.is_empty() {
        let sub = render_subequation(eq, &residual);
        let res_coeffs: Vec<i64> = residual.iter().map(|&i| coeffs[i]).collect();
        let mixed =
            res_coeffs.iter().any(|&c| c > 0) && res_coeffs.iter().any(|&c| c < 0);
        if res_coeffs.len() == 1 || !mixed {
            value = BigUint::zero();
            diagnosis = Some(format!("residual {sub} has no natural solutions"));
            trace.push(TraceStep {
                subequation: sub,
                rule: Rule::Ray,
                factor: BigUint::zero(),
            });
        } else {
            let res_eq = DiagonalEquation::new(res_coeffs, k)
                .expect("residual keeps nonzero coefficients and >= 2 terms");
            let seed = seed_cache
                .entry(residual.clone())
                .or_insert_with(|| {
                    find_seed(&res_eq, seed_budget, cfg).map_err(|e| e.to_string())
                })
                .clone();
            match seed {
                Ok(Some(seed)) => {
                    let factor = ray_value(&seed, n);
                    trace.push(TraceStep {
                        subequation: format!(
                            "{sub} via seed {}",
                            render_tuple(&seed.values)
                        ),
                        rule: Rule::Ray,
                        factor: factor.clone(),
                    });
                    value = split_bound(&value, &factor);
                }
                Ok(None) => {
                    value = BigUint::zero();
                    diagnosis = Some(format!(
                        "no seed found for {sub} within budget {seed_budget}"
                    ));
                    trace.push(TraceStep {
                        subequation: sub,
                        rule: Rule::Ray,
                        factor: BigUint::zero(),
                    });
                }
                Err(err) => {
                    value = BigUint::zero();
                    diagnosis = Some(format!("seed search for {sub} failed: {err}"));
                    trace.push(TraceStep {
                        subequation: sub,
                        rule: Rule::Ray,
                        factor: BigUint::zero(),
                    });
                }
            }
        }
    }

    let mut sorted_pairs: Vec<(usize, usize)> = pair_list.to_vec();
    sorted_pairs.sort_unstable();
    let key = (residual.clone(), sorted_pairs);
    Evaluated {
        bound: LowerBound {
            value,
            rule: Rule::Grouping,
            trace,
            diagnosis,
        },
        plan: PairingPlan { pairs, residual },
        key,
    }
}

/// The strongest lower bound this module knows how to certify: the
/// symmetric-pairing formula when the equation is the alternating form on
/// a power-of-two variable count, otherwise the grouping heuristic.
pub fn best_lower_bound(
    eq: &DiagonalEquation,
    n: u64,
    seed_budget: u64,
    cfg: &EngineConfig,
) -> LowerBound {
    let eq = eq.normalize();
    if let Some(j) = symmetric_form(&eq) {
        let value = symmetric_pair_count(j, n);
        let grouped = grouping_heuristic(&eq, n, seed_budget, cfg).bound;
        if value >= grouped.value {
            return LowerBound {
                value: value.clone(),
                rule: Rule::SymmetricPair,
                trace: vec![TraceStep {
                    subequation: eq.pretty(),
                    rule: Rule::SymmetricPair,
                    factor: value,
                }],
                diagnosis: None,
            };
        }
        return grouped;
    }
    grouping_heuristic(&eq, n, seed_budget, cfg).bound
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

/// Render the sub-equation on the given indices, positives first, with the
/// original 1-based variable numbers.
fn render_subequation(eq: &DiagonalEquation, indices: &[usize]) -> String {
    let mut ordered: Vec<usize> = indices.to_vec();
    ordered.sort_by_key(|&i| (eq.coeffs()[i] < 0, i));
    let mut out = String::new();
    for (pos, &i) in ordered.iter().enumerate() {
        let c = eq.coeffs()[i];
        if pos == 0 {
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
        if eq.degree() != 1 {
            out.push('^');
            out.push_str(&eq.degree().to_string());
        }
    }
    out.push_str(" = 0");
    out
}

fn render_tuple(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", inner.join(","))
}
