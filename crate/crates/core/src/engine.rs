//! Exact solution counting: the ground-truth oracle for every bound in
//! this crate.
//!
//! Two interchangeable counters are provided. `count_brute` enumerates the
//! whole box; `count_mitm` splits the variables in half, histograms the
//! partial sums of one half and joins the other half against it, which
//! reduces the work to roughly the square root of the naive scan. Both
//! return identical counts and both parallelize over the leading variable
//! with order-independent merges, so results never depend on worker count.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{is_kth_power, kth_root, multiset_permutations, pow_u128};
use crate::equation::{Cube, DiagonalEquation, EquationError};

/// Which counting kernel produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Mitm,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Mitm => "mitm",
        }
    }
}

/// Requested counting strategy; `Auto` resolves per box size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    Brute,
    Mitm,
}

/// An exact count with provenance.
#[derive(Debug, Clone)]
pub struct CountResult {
    pub count: u128,
    pub method: Method,
    pub elapsed: Duration,
    pub box_side: u64,
}

/// One nontrivial solution tuple, with the data needed for ray bounds:
/// its largest coordinate and the number of distinct permutations within
/// equal-coefficient positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSolution {
    pub values: Vec<u64>,
    pub sup: u64,
    pub multiplier: u128,
}

/// Ordered representations of `n` as a sum of `s` k-th powers of naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepCount {
    pub n: u64,
    pub s: u32,
    pub k: u32,
    pub count: u128,
}

/// One sweep row: the count at a box side plus the log-log slope against
/// the previous side.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub n: u64,
    pub result: CountResult,
    pub slope: Option<f64>,
}

/// Budgets and worker settings for the counting kernels.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Maximum number of evaluated tuples for the brute counter.
    pub brute_budget: u128,
    /// Maximum histogram entries (and join scans) for the mitm counter.
    pub mem_cap: u128,
    /// Worker threads; `None` uses all available parallelism.
    pub workers: Option<usize>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            brute_budget: 1_000_000_000,
            mem_cap: 100_000_000,
            workers: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("evaluation budget exceeded: needs {needed} tuple evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error(
        "memory cap exceeded: needs {needed} histogram entries, cap is {cap} \
         (reduce the box or use brute force)"
    )]
    MemoryExceeded { needed: u128, cap: u128 },
    #[error("overflow guard: coefficient terms at side {side} do not fit in 127 bits")]
    Overflow { side: u64 },
    #[error("sweep failed at N = {n}: {source}")]
    Sweep {
        n: u64,
        #[source]
        source: Box<EngineError>,
    },
    #[error(transparent)]
    Equation(#[from] EquationError),
}

fn run_in_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        None | Some(0) => f(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("failed to build worker pool")
            .install(f),
    }
}

/// Per-variable tables of `c_i * x^k` for `x = 1..=side`, exact in i128.
fn term_tables(eq: &DiagonalEquation, side: u64) -> Result<Vec<Vec<i128>>, EngineError> {
    eq.abs_sum_bound(side)
        .ok_or(EngineError::Overflow { side })?;
    let k = eq.degree();
    Ok(eq
        .coeffs()
        .iter()
        .map(|&c| {
            (1..=side)
                .map(|x| (c as i128) * pow_u128(x, k) as i128)
                .collect()
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Brute-force counter
// ---------------------------------------------------------------------------

/// Count solutions by full enumeration of `{1..N}^s`.
pub fn count_brute(
    eq: &DiagonalEquation,
    cube: Cube,
    cfg: &EngineConfig,
) -> Result<CountResult, EngineError> {
    let n = cube.side();
    let needed = (n as u128)
        .checked_pow(eq.s() as u32)
        .ok_or(EngineError::BudgetExceeded {
            needed: u128::MAX,
            budget: cfg.brute_budget,
        })?;
    if needed > cfg.brute_budget {
        return Err(EngineError::BudgetExceeded {
            needed,
            budget: cfg.brute_budget,
        });
    }
    let tables = term_tables(eq, n)?;
    let start = Instant::now();
    let count = run_in_pool(cfg.workers, || {
        tables[0]
            .par_iter()
            .map(|&t| brute_rest(&tables, 1, t))
            .sum::<u128>()
    });
    Ok(CountResult {
        count,
        method: Method::Brute,
        elapsed: start.elapsed(),
        box_side: n,
    })
}

fn brute_rest(tables: &[Vec<i128>], depth: usize, partial: i128) -> u128 {
    if depth == tables.len() - 1 {
        let target = -partial;
        return tables[depth].iter().filter(|&&t| t == target).count() as u128;
    }
    tables[depth]
        .iter()
        .map(|&t| brute_rest(tables, depth + 1, partial + t))
        .sum()
}

// ---------------------------------------------------------------------------
// Meet-in-the-middle counter
// ---------------------------------------------------------------------------

/// Leading half of the variable split: the first `ceil(s/2)` indices.
fn split_point(s: usize) -> usize {
    s.div_ceil(2)
}

/// Count solutions by histogram join over a half/half variable split.
pub fn count_mitm(
    eq: &DiagonalEquation,
    cube: Cube,
    cfg: &EngineConfig,
) -> Result<CountResult, EngineError> {
    let n = cube.side();
    let a_len = split_point(eq.s());
    let needed = (n as u128)
        .checked_pow(a_len as u32)
        .ok_or(EngineError::MemoryExceeded {
            needed: u128::MAX,
            cap: cfg.mem_cap,
        })?;
    if needed > cfg.mem_cap {
        return Err(EngineError::MemoryExceeded {
            needed,
            cap: cfg.mem_cap,
        });
    }
    let tables = term_tables(eq, n)?;
    let (a_tab, b_tab) = tables.split_at(a_len);
    let start = Instant::now();
    let count = run_in_pool(cfg.workers, || {
        let hist = build_histogram(a_tab);
        join_count(b_tab, &hist)
    });
    Ok(CountResult {
        count,
        method: Method::Mitm,
        elapsed: start.elapsed(),
        box_side: n,
    })
}

/// Multiset of partial sums over one variable half, keyed by exact value.
/// Built in parallel chunks and merged by addition, which is associative
/// and commutative, so the result is independent of partitioning.
fn build_histogram(tab: &[Vec<i128>]) -> HashMap<i128, u64> {
    tab[0]
        .par_iter()
        .fold(HashMap::new, |mut acc, &t| {
            histogram_rest(tab, 1, t, &mut acc);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (key, cnt) in b {
                *a.entry(key).or_insert(0) += cnt;
            }
            a
        })
}

fn histogram_rest(tab: &[Vec<i128>], depth: usize, partial: i128, acc: &mut HashMap<i128, u64>) {
    if depth == tab.len() {
        *acc.entry(partial).or_insert(0) += 1;
        return;
    }
    for &t in &tab[depth] {
        histogram_rest(tab, depth + 1, partial + t, acc);
    }
}

fn join_count(tab: &[Vec<i128>], hist: &HashMap<i128, u64>) -> u128 {
    tab[0]
        .par_iter()
        .map(|&t| join_rest(tab, 1, t, hist))
        .sum()
}

fn join_rest(tab: &[Vec<i128>], depth: usize, partial: i128, hist: &HashMap<i128, u64>) -> u128 {
    if depth == tab.len() {
        return hist.get(&(-partial)).copied().unwrap_or(0) as u128;
    }
    tab[depth]
        .iter()
        .map(|&t| join_rest(tab, depth + 1, partial + t, hist))
        .sum()
}

/// Count with an explicit or automatic method choice. `Auto` prefers the
/// mitm join whenever it fits the memory cap (it is never slower here),
/// and falls back to brute enumeration within budget otherwise.
pub fn count(
    eq: &DiagonalEquation,
    cube: Cube,
    choice: MethodChoice,
    cfg: &EngineConfig,
) -> Result<CountResult, EngineError> {
    match choice {
        MethodChoice::Brute => count_brute(eq, cube, cfg),
        MethodChoice::Mitm => count_mitm(eq, cube, cfg),
        MethodChoice::Auto => {
            let n = cube.side() as u128;
            let half = n.checked_pow(split_point(eq.s()) as u32);
            if half.is_some_and(|h| h <= cfg.mem_cap) {
                count_mitm(eq, cube, cfg)
            } else {
                count_brute(eq, cube, cfg)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Seed search
// ---------------------------------------------------------------------------

/// Find the lexicographically least solution in `{1..budget}^s`, if any.
///
/// Uses the same half split as the counter: the trailing half is stored as
/// a map from partial sum to its least tuple, the leading half is scanned
/// in lexicographic order, so the first hit is the least overall.
pub fn find_seed(
    eq: &DiagonalEquation,
    budget: u64,
    cfg: &EngineConfig,
) -> Result<Option<SeedSolution>, EngineError> {
    if budget == 0 {
        return Ok(None);
    }
    let s = eq.s();
    let a_len = split_point(s);
    let b_len = s - a_len;
    let scan = (budget as u128)
        .checked_pow(a_len as u32)
        .ok_or(EngineError::BudgetExceeded {
            needed: u128::MAX,
            budget: cfg.brute_budget,
        })?;
    if scan > cfg.brute_budget {
        return Err(EngineError::BudgetExceeded {
            needed: scan,
            budget: cfg.brute_budget,
        });
    }
    let entries = pow_u128(budget, b_len as u32);
    if entries > cfg.mem_cap {
        return Err(EngineError::MemoryExceeded {
            needed: entries,
            cap: cfg.mem_cap,
        });
    }
    let tables = term_tables(eq, budget)?;
    let (a_tab, b_tab) = tables.split_at(a_len);

    let mut least: HashMap<i128, Vec<u64>> = HashMap::new();
    let mut prefix = Vec::with_capacity(b_len);
    collect_least(b_tab, 0, 0, &mut prefix, &mut least);

    let mut head = Vec::with_capacity(a_len);
    let found = scan_lex(a_tab, 0, 0, &mut head, &least);
    Ok(found.map(|values| {
        let sup = *values.iter().max().expect("nonempty solution");
        let multiplier = seed_multiplier(eq, &values);
        SeedSolution {
            values,
            sup,
            multiplier,
        }
    }))
}

/// Record, for every partial sum of the trailing half, the least tuple
/// attaining it (tuples are visited in lexicographic order, first wins).
fn collect_least(
    tab: &[Vec<i128>],
    depth: usize,
    partial: i128,
    prefix: &mut Vec<u64>,
    acc: &mut HashMap<i128, Vec<u64>>,
) {
    if depth == tab.len() {
        acc.entry(partial).or_insert_with(|| prefix.clone());
        return;
    }
    for (x, &t) in tab[depth].iter().enumerate() {
        prefix.push(x as u64 + 1);
        collect_least(tab, depth + 1, partial + t, prefix, acc);
        prefix.pop();
    }
}

fn scan_lex(
    tab: &[Vec<i128>],
    depth: usize,
    partial: i128,
    head: &mut Vec<u64>,
    least: &HashMap<i128, Vec<u64>>,
) -> Option<Vec<u64>> {
    if depth == tab.len() {
        return least.get(&(-partial)).map(|tail| {
            let mut values = head.clone();
            values.extend_from_slice(tail);
            values
        });
    }
    for (x, &t) in tab[depth].iter().enumerate() {
        head.push(x as u64 + 1);
        if let Some(found) = scan_lex(tab, depth + 1, partial + t, head, least) {
            return Some(found);
        }
        head.pop();
    }
    None
}

/// Distinct permutations of the seed values within groups of positions
/// that share a coefficient; each one is a distinct solution.
fn seed_multiplier(eq: &DiagonalEquation, values: &[u64]) -> u128 {
    let mut groups: HashMap<i64, Vec<u64>> = HashMap::new();
    for (i, &c) in eq.coeffs().iter().enumerate() {
        groups.entry(c).or_default().push(values[i]);
    }
    groups
        .values()
        .map(|vals| multiset_permutations(vals))
        .product()
}

// ---------------------------------------------------------------------------
// Representation counts
// ---------------------------------------------------------------------------

/// Ordered representations `n = x1^k + ... + xs^k` with every `xi >= 1`.
///
/// Small targets run a table-based dynamic program over partial sums;
/// large targets use depth-first enumeration with root pruning, which is
/// cheap whenever `floor(n^(1/k))^(s-1)` is.
pub fn count_representations(
    n: u64,
    s: u32,
    k: u32,
    cfg: &EngineConfig,
) -> Result<RepCount, EngineError> {
    assert!(k >= 1, "degree must be at least 1");
    let done = |count: u128| Ok(RepCount { n, s, k, count });
    if s == 0 {
        return done((n == 0) as u128);
    }
    if n < s as u64 {
        return done(0); // every term is >= 1
    }
    let root = kth_root(n, k);
    let rec_cost = (root as u128).saturating_pow(s.saturating_sub(1));
    let dp_cost = (s as u128)
        .saturating_mul(n as u128)
        .saturating_mul(root as u128);
    const DP_TABLE_LIMIT: u64 = 1_000_000;
    if n <= DP_TABLE_LIMIT && dp_cost < rec_cost && dp_cost <= cfg.brute_budget {
        return done(reps_dp(n, s, k));
    }
    if rec_cost > cfg.brute_budget {
        return Err(EngineError::BudgetExceeded {
            needed: rec_cost,
            budget: cfg.brute_budget,
        });
    }
    done(reps_rec(n, s, k))
}

fn reps_rec(n: u64, s: u32, k: u32) -> u128 {
    if n < s as u64 {
        return 0;
    }
    if s == 1 {
        return is_kth_power(n, k) as u128;
    }
    let reserve = (s - 1) as u64; // the remaining terms need at least 1 each
    let mut total = 0u128;
    let mut x = 1u64;
    loop {
        let p = pow_u128(x, k);
        if p > (n - reserve) as u128 {
            break;
        }
        total += reps_rec(n - p as u64, s - 1, k);
        x += 1;
    }
    total
}

fn reps_dp(n: u64, s: u32, k: u32) -> u128 {
    let n = n as usize;
    let powers: Vec<usize> = (1u64..)
        .map(|x| pow_u128(x, k))
        .take_while(|&p| p <= n as u128)
        .map(|p| p as usize)
        .collect();
    let mut cur = vec![0u128; n + 1];
    cur[0] = 1;
    for _ in 0..s {
        let mut next = vec![0u128; n + 1];
        for &p in &powers {
            for m in p..=n {
                next[m] += cur[m - p];
            }
        }
        cur = next;
    }
    cur[n]
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

/// Count at every side in `sides` (sorted ascending, deduplicated) and
/// report the log-log slope between consecutive sides.
pub fn count_sweep(
    eq: &DiagonalEquation,
    sides: &[u64],
    choice: MethodChoice,
    cfg: &EngineConfig,
) -> Result<Vec<SweepPoint>, EngineError> {
    let mut ns: Vec<u64> = sides.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut out = Vec::with_capacity(ns.len());
    let mut prev: Option<(u64, u128)> = None;
    for n in ns {
        let cube = Cube::new(n).map_err(|e| EngineError::Sweep {
            n,
            source: Box::new(EngineError::Equation(e)),
        })?;
        let result = count(eq, cube, choice, cfg).map_err(|e| EngineError::Sweep {
            n,
            source: Box::new(e),
        })?;
        let slope = prev.and_then(|(pn, pc)| {
            if pc > 0 && result.count > 0 && n > pn {
                Some(((result.count as f64).ln() - (pc as f64).ln()) / ((n as f64).ln() - (pn as f64).ln()))
            } else {
                None
            }
        });
        prev = Some((n, result.count));
        out.push(SweepPoint { n, result, slope });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(coeffs: &[i64], k: u32) -> DiagonalEquation {
        DiagonalEquation::new(coeffs.to_vec(), k).unwrap()
    }

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn brute(coeffs: &[i64], k: u32, n: u64) -> u128 {
        count_brute(&eq(coeffs, k), Cube::new(n).unwrap(), &cfg())
            .unwrap()
            .count
    }

    fn mitm(coeffs: &[i64], k: u32, n: u64) -> u128 {
        count_mitm(&eq(coeffs, k), Cube::new(n).unwrap(), &cfg())
            .unwrap()
            .count
    }

    #[test]
    fn brute_diagonal_pair() {
        assert_eq!(brute(&[1, -1], 3, 7), 7);
    }

    #[test]
    fn brute_alternating_quartic_small() {
        // every tuple of {1..3}^4 enumerated; matches 2N^2 - N at N = 3
        assert_eq!(brute(&[1, -1, 1, -1], 2, 3), 15);
    }

    #[test]
    fn brute_pythagorean() {
        assert_eq!(brute(&[1, 1, -1], 2, 5), 2); // (3,4,5) and (4,3,5)
    }

    #[test]
    fn mitm_taxicab_quartic() {
        // 2*158^2 - 158 symmetric solutions plus 8 from 59^4 + 158^4 = 133^4 + 134^4
        assert_eq!(mitm(&[1, -1, 1, -1], 4, 158), 49778);
    }

    #[test]
    fn mitm_injective_power() {
        assert_eq!(mitm(&[1, -1], 5, 100), 100);
    }

    #[test]
    fn mitm_matches_brute_pythagorean() {
        assert_eq!(mitm(&[1, 1, -1], 2, 25), 16);
        assert_eq!(brute(&[1, 1, -1], 2, 25), 16);
    }

    #[test]
    fn auto_prefers_mitm_within_cap() {
        let r = count(
            &eq(&[1, -1, 1, -1], 2),
            Cube::new(10).unwrap(),
            MethodChoice::Auto,
            &cfg(),
        )
        .unwrap();
        assert_eq!(r.method, Method::Mitm);
    }

    #[test]
    fn auto_falls_back_to_brute() {
        let tight = EngineConfig {
            mem_cap: 5, // mitm needs 10^2 entries
            ..cfg()
        };
        let r = count(
            &eq(&[1, -1, 1, -1], 2),
            Cube::new(10).unwrap(),
            MethodChoice::Auto,
            &tight,
        )
        .unwrap();
        assert_eq!(r.method, Method::Brute);
        assert_eq!(r.count, mitm(&[1, -1, 1, -1], 2, 10));
    }

    #[test]
    fn budget_and_memory_errors() {
        let tiny = EngineConfig {
            brute_budget: 10,
            mem_cap: 3,
            workers: None,
        };
        let e = eq(&[1, -1, 1, -1], 2);
        let cube = Cube::new(10).unwrap();
        assert!(matches!(
            count_brute(&e, cube, &tiny),
            Err(EngineError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            count_mitm(&e, cube, &tiny),
            Err(EngineError::MemoryExceeded { .. })
        ));
        assert!(matches!(
            count(&e, cube, MethodChoice::Auto, &tiny),
            Err(EngineError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn overflow_guard_rejected() {
        let e = eq(&[1 << 31, -1], 7);
        assert!(matches!(
            count_mitm(&e, Cube::new(1 << 14).unwrap(), &cfg()),
            Err(EngineError::Overflow { .. })
        ));
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let one = EngineConfig {
            workers: Some(1),
            ..cfg()
        };
        let four = EngineConfig {
            workers: Some(4),
            ..cfg()
        };
        let e = eq(&[1, -1, 1, -1], 3);
        let cube = Cube::new(40).unwrap();
        assert_eq!(
            count_mitm(&e, cube, &one).unwrap().count,
            count_mitm(&e, cube, &four).unwrap().count
        );
        assert_eq!(
            count_brute(&e, cube, &one).unwrap().count,
            count_brute(&e, cube, &four).unwrap().count
        );
    }

    #[test]
    fn seed_lander_parkin_quintic() {
        let seed = find_seed(&eq(&[1, 1, 1, 1, -1], 5), 150, &cfg())
            .unwrap()
            .unwrap();
        assert_eq!(seed.values, vec![27, 84, 110, 133, 144]);
        assert_eq!(seed.sup, 144);
        assert_eq!(seed.multiplier, 24);
    }

    #[test]
    fn seed_absent_for_cubic_fermat() {
        assert_eq!(find_seed(&eq(&[1, 1, -1], 3), 100, &cfg()).unwrap(), None);
    }

    #[test]
    fn seed_trivial_equal_tuple() {
        let seed = find_seed(&eq(&[1, 1, -2], 3), 10, &cfg()).unwrap().unwrap();
        assert_eq!(seed.values, vec![1, 1, 1]);
        assert_eq!(seed.multiplier, 1);
    }

    #[test]
    fn seed_is_lexicographically_least() {
        // Pythagorean: (3,4,5) precedes (4,3,5)
        let seed = find_seed(&eq(&[1, 1, -1], 2), 10, &cfg()).unwrap().unwrap();
        assert_eq!(seed.values, vec![3, 4, 5]);
        assert_eq!(seed.multiplier, 2);
    }

    #[test]
    fn seed_respects_budgets() {
        let tiny = EngineConfig {
            brute_budget: 10,
            mem_cap: 10,
            workers: None,
        };
        assert!(matches!(
            find_seed(&eq(&[1, 1, 1, 1, -1], 5), 150, &tiny),
            Err(EngineError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn representation_examples() {
        let c = |n, s, k| count_representations(n, s, k, &cfg()).unwrap().count;
        assert_eq!(c(2, 2, 2), 1); // 1^2 + 1^2
        assert_eq!(c(50, 2, 2), 3); // (1,7),(7,1),(5,5)
        assert_eq!(c(65, 2, 2), 4); // (1,8),(8,1),(4,7),(7,4)
        assert_eq!(c(1, 2, 2), 0); // below the minimum s
        assert_eq!(c(635_318_657, 2, 4), 4); // 59^4+158^4 = 133^4+134^4, both orders
    }

    #[test]
    fn representation_dp_matches_recursion() {
        for k in 1..=3u32 {
            for s in 1..=4u32 {
                for n in 1..=40u64 {
                    assert_eq!(
                        reps_dp(n, s, k),
                        reps_rec(n, s, k),
                        "n={n} s={s} k={k}"
                    );
                }
            }
        }
    }

    /// Box-restricted representation table: `table[m]` counts ordered
    /// h-tuples over `{1..n}` with power-sum `m`. An independent dynamic
    /// program used to cross-check the counting kernels.
    fn rep_table_in_box(h: u32, k: u32, n: u64) -> Vec<u128> {
        let max = (h as usize) * pow_u128(n, k) as usize;
        let powers: Vec<usize> = (1..=n).map(|x| pow_u128(x, k) as usize).collect();
        let mut cur = vec![0u128; max + 1];
        cur[0] = 1;
        for _ in 0..h {
            let mut next = vec![0u128; max + 1];
            for &p in &powers {
                for m in p..=max {
                    next[m] += cur[m - p];
                }
            }
            cur = next;
        }
        cur
    }

    #[test]
    fn moment_identity_against_representation_counts() {
        // For the alternating equation with 2h variables the count equals
        // sum over sigma of r(sigma)^2, r = h-term representation count
        // inside the box.
        for k in [1u32, 2, 3] {
            let n = 9u64;
            let table = rep_table_in_box(2, k, n);
            let expect: u128 = table.iter().map(|&r| r * r).sum();
            assert_eq!(mitm(&[1, -1, 1, -1], k, n), expect, "k={k}");
        }
        // and with 6 variables (h = 3) at a smaller side
        let table = rep_table_in_box(3, 2, 5);
        let expect: u128 = table.iter().map(|&r| r * r).sum();
        assert_eq!(mitm(&[1, -1, 1, -1, 1, -1], 2, 5), expect);
    }

    #[test]
    fn sweep_linear_pair() {
        let rows = count_sweep(&eq(&[1, -1], 2), &[10, 20, 40], MethodChoice::Auto, &cfg()).unwrap();
        let counts: Vec<u128> = rows.iter().map(|r| r.result.count).collect();
        assert_eq!(counts, vec![10, 20, 40]);
        assert!(rows[0].slope.is_none());
        assert!((rows[1].slope.unwrap() - 1.0).abs() < 1e-12);
        assert!((rows[2].slope.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sweep_alternating_cubic_slope_near_two() {
        let rows = count_sweep(
            &eq(&[1, -1, 1, -1], 3),
            &[50, 100],
            MethodChoice::Mitm,
            &cfg(),
        )
        .unwrap();
        let slope = rows[1].slope.unwrap();
        assert!((slope - 2.0).abs() < 0.1, "slope = {slope}");
    }

    #[test]
    fn sweep_empty_and_sorted() {
        assert!(count_sweep(&eq(&[1, -1], 2), &[], MethodChoice::Auto, &cfg())
            .unwrap()
            .is_empty());
        let rows =
            count_sweep(&eq(&[1, -1], 2), &[20, 10, 20], MethodChoice::Auto, &cfg()).unwrap();
        let ns: Vec<u64> = rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, vec![10, 20]);
    }

    #[test]
    fn sweep_monotone_counts() {
        let rows = count_sweep(
            &eq(&[1, 1, -1], 2),
            &[5, 10, 15, 20, 25],
            MethodChoice::Auto,
            &cfg(),
        )
        .unwrap();
        for w in rows.windows(2) {
            assert!(w[0].result.count <= w[1].result.count);
        }
    }
}
