//! Verbatim evaluators for every closed-form expression and bound under
//! arbitration, in exact arithmetic, plus a forensic wrap-around mode.
//!
//! Expressions are transcribed exactly as printed in their source,
//! including suspected misprints; corrected diagnostic variants exist
//! only where explicitly labeled (`eval_sigma_cnm_internal`) and never
//! replace the printed forms. The wrap32 mode applies two's-complement
//! 32-bit wraparound at every intermediate operation; it exists solely
//! to test whether published negative values arise from such overflow.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families;
use crate::indices::{sigma, IndexValue};
use crate::tree::Tree;

/// Evaluation mode for formula arbitration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalMode {
    Exact,
    Wrap32,
}

impl EvalMode {
    pub fn name(self) -> &'static str {
        match self {
            EvalMode::Exact => "exact",
            EvalMode::Wrap32 => "wrap32",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "exact" => EvalMode::Exact,
            "wrap32" => EvalMode::Wrap32,
            other => return Err(Error::invalid(format!("unknown mode {other:?}"))),
        })
    }
}

/// Identifiers for the printed expressions under arbitration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    AlbertsonCaterpillar,
    SigmaCaterpillarSpine,
    SigmaDoubleStar,
    SigmaCnm,
    Sigma3Spine,
    Sigma4SpineMin,
    Sigma4SpineMax,
    Sigma3Level,
    SigmaSquaredLevel,
    SigmaPowerLevel,
    SigmaKLevel,
    BoundSun,
    BoundUpperLambda,
    GutmanMax,
    GutmanMin,
}

impl FormulaId {
    pub const ALL: [FormulaId; 15] = [
        FormulaId::AlbertsonCaterpillar,
        FormulaId::SigmaCaterpillarSpine,
        FormulaId::SigmaDoubleStar,
        FormulaId::SigmaCnm,
        FormulaId::Sigma3Spine,
        FormulaId::Sigma4SpineMin,
        FormulaId::Sigma4SpineMax,
        FormulaId::Sigma3Level,
        FormulaId::SigmaSquaredLevel,
        FormulaId::SigmaPowerLevel,
        FormulaId::SigmaKLevel,
        FormulaId::BoundSun,
        FormulaId::BoundUpperLambda,
        FormulaId::GutmanMax,
        FormulaId::GutmanMin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::AlbertsonCaterpillar => "albertson_caterpillar",
            FormulaId::SigmaCaterpillarSpine => "sigma_caterpillar_spine",
            FormulaId::SigmaDoubleStar => "sigma_double_star",
            FormulaId::SigmaCnm => "sigma_cnm",
            FormulaId::Sigma3Spine => "sigma_3spine",
            FormulaId::Sigma4SpineMin => "sigma_4spine_min",
            FormulaId::Sigma4SpineMax => "sigma_4spine_max",
            FormulaId::Sigma3Level => "sigma_3level",
            FormulaId::SigmaSquaredLevel => "sigma_squared_level",
            FormulaId::SigmaPowerLevel => "sigma_power_level",
            FormulaId::SigmaKLevel => "sigma_klevel",
            FormulaId::BoundSun => "bound_sun",
            FormulaId::BoundUpperLambda => "bound_upper_lambda",
            FormulaId::GutmanMax => "gutman_max",
            FormulaId::GutmanMin => "gutman_min",
        }
    }
}

/// Arithmetic backing a formula evaluation: exact 128-bit, or 32-bit
/// two's-complement wraparound at every intermediate operation.
trait Num: Copy {
    fn of(v: i64) -> Self;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn value(self) -> i128;
}

#[derive(Clone, Copy)]
struct Exact(i128);

// Exact evaluation must never wrap silently, whatever the build
// profile; out-of-range parameters abort loudly instead.
impl Num for Exact {
    fn of(v: i64) -> Self {
        Exact(v as i128)
    }
    fn add(self, o: Self) -> Self {
        Exact(self.0.checked_add(o.0).expect("exact evaluation overflow"))
    }
    fn sub(self, o: Self) -> Self {
        Exact(self.0.checked_sub(o.0).expect("exact evaluation overflow"))
    }
    fn mul(self, o: Self) -> Self {
        Exact(self.0.checked_mul(o.0).expect("exact evaluation overflow"))
    }
    fn value(self) -> i128 {
        self.0
    }
}

#[derive(Clone, Copy)]
struct Wrap32(i32);

impl Num for Wrap32 {
    fn of(v: i64) -> Self {
        Wrap32(v as i32)
    }
    fn add(self, o: Self) -> Self {
        Wrap32(self.0.wrapping_add(o.0))
    }
    fn sub(self, o: Self) -> Self {
        Wrap32(self.0.wrapping_sub(o.0))
    }
    fn mul(self, o: Self) -> Self {
        Wrap32(self.0.wrapping_mul(o.0))
    }
    fn value(self) -> i128 {
        self.0 as i128
    }
}

fn sq<N: Num>(x: N) -> N {
    x.mul(x)
}

fn cube<N: Num>(x: N) -> N {
    x.mul(x).mul(x)
}

/// Instantiates an inner generic evaluator for the requested mode.
macro_rules! dispatch {
    ($mode:expr, $f:ident($($arg:expr),*)) => {
        match $mode {
            EvalMode::Exact => $f::<Exact>($($arg),*).value(),
            EvalMode::Wrap32 => $f::<Wrap32>($($arg),*).value(),
        }
    };
}

/// `sigma(S_{r,k}) = (k-1)^3 + (r-1)^3 + (k-r)^2`.
pub fn eval_sigma_double_star(r: u32, k: u32, mode: EvalMode) -> IndexValue {
    fn f<N: Num>(r: i64, k: i64) -> N {
        let (r, k, one) = (N::of(r), N::of(k), N::of(1));
        cube(k.sub(one)).add(cube(r.sub(one))).add(sq(k.sub(r)))
    }
    IndexValue(dispatch!(mode, f(r as i64, k as i64)))
}

/// Piecewise printed form for the uniform caterpillar: `2m^3` at
/// `n = 2`, otherwise `2m^3 + m n (m+1)^2 + 2` with coefficient `n`
/// exactly as displayed.
pub fn eval_sigma_cnm(n: u32, m: u32, mode: EvalMode) -> IndexValue {
    fn f<N: Num>(n: i64, m: i64) -> N {
        let (nn, mm) = (N::of(n), N::of(m));
        let two = N::of(2);
        let head = two.mul(cube(mm));
        if n == 2 {
            head
        } else {
            head.add(mm.mul(nn).mul(sq(mm.add(N::of(1))))).add(two)
        }
    }
    IndexValue(dispatch!(mode, f(n as i64, m as i64)))
}

/// Corrected-coefficient diagnostic variant of [`eval_sigma_cnm`] with
/// `m (n-2) (m+1)^2` for the internal spine vertices. Not a printed
/// form; provided only to show which coefficient the construction obeys.
pub fn eval_sigma_cnm_internal(n: u32, m: u32) -> IndexValue {
    let (n, m) = (n as i128, m as i128);
    if n == 2 {
        return IndexValue(2 * m * m * m);
    }
    IndexValue(2 * m * m * m + m * (n - 2) * (m + 1) * (m + 1) + 2)
}

/// Which sequence the caterpillar Albertson expression is read over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlbertsonInterpretation {
    /// `d` is the full degree sequence of the caterpillar.
    FullSequence,
    /// `d` is the spine-degree list.
    SpineOnly,
}

impl AlbertsonInterpretation {
    pub fn name(self) -> &'static str {
        match self {
            AlbertsonInterpretation::FullSequence => "full_sequence",
            AlbertsonInterpretation::SpineOnly => "spine_only",
        }
    }
}

/// Printed caterpillar Albertson expression over a sequence `d_1..d_n`
/// taken in ascending order (`d_n >= ... >= d_1` per its hypothesis):
/// `d_1^2 + d_n^2 + sum_{i=2}^{n-1} d_i^2 + sum_{i=2}^{n-1} d_i
///  + d_n - d_1 - 2n + 2`.
pub fn eval_albertson_caterpillar(seq: &[u32], mode: EvalMode) -> IndexValue {
    assert!(seq.len() >= 2, "sequence length >= 2");
    let mut d: Vec<i64> = seq.iter().map(|&x| x as i64).collect();
    d.sort_unstable();
    fn f<N: Num>(d: &[i64]) -> N {
        let n = d.len();
        let first = N::of(d[0]);
        let last = N::of(d[n - 1]);
        let mut acc = sq(first).add(sq(last));
        for &x in &d[1..n - 1] {
            acc = acc.add(sq(N::of(x)));
        }
        for &x in &d[1..n - 1] {
            acc = acc.add(N::of(x));
        }
        acc.add(last)
            .sub(first)
            .sub(N::of(2 * n as i64))
            .add(N::of(2))
    }
    IndexValue(dispatch!(mode, f(&d)))
}

/// Companion printed form for the uniform caterpillar Albertson index:
/// `m(m+1)n - 2m + 2` for `n >= 3`, `m(m+1)n - 2m` for `n <= 2`.
pub fn eval_albertson_cnm(n: u32, m: u32) -> IndexValue {
    let (n, m) = (n as i128, m as i128);
    let head = m * (m + 1) * n - 2 * m;
    IndexValue(if n >= 3 { head + 2 } else { head })
}

/// Printed caterpillar sigma expression over spine degrees in spine
/// order: `(d_n-1)^3 + (d_1-1)^3 + sum (d_i - d_{i+1})^2
///  + sum_{i=2}^{n-1} (d_i-1)^2 (d_i-2)`, with the first sum read as
/// `i = 1..n-1` (the printed upper limit references a nonexistent
/// `d_{n+1}`).
pub fn eval_sigma_caterpillar_spine(spine: &[u32], mode: EvalMode) -> IndexValue {
    assert!(spine.len() >= 2, "spine length >= 2");
    let d: Vec<i64> = spine.iter().map(|&x| x as i64).collect();
    fn f<N: Num>(d: &[i64]) -> N {
        let n = d.len();
        let one = N::of(1);
        let mut acc = cube(N::of(d[n - 1]).sub(one)).add(cube(N::of(d[0]).sub(one)));
        for w in d.windows(2) {
            acc = acc.add(sq(N::of(w[0]).sub(N::of(w[1]))));
        }
        for &x in &d[1..n - 1] {
            let xm1 = N::of(x).sub(one);
            acc = acc.add(sq(xm1).mul(N::of(x).sub(N::of(2))));
        }
        acc
    }
    IndexValue(dispatch!(mode, f(&d)))
}

/// Per-ordering spine expression shared by the 3- and 4-spine printed
/// forms: `p * sum (x_i - 1)^2 + sum (x_i - x_{i+1})^2`.
fn spine_expression(p: i128, order: &[i128]) -> i128 {
    let squares: i128 = order.iter().map(|&x| (x - 1) * (x - 1)).sum();
    let diffs: i128 = order.windows(2).map(|w| (w[0] - w[1]) * (w[0] - w[1])).sum();
    p * squares + diffs
}

/// Printed 3-spine expression `sum_{i=1}^{3} p (d_i-1)^2
///  + sum_{i=1}^{2} (d_i - d_{i+1})^2` over the given order.
pub fn eval_sigma_3spine(p: u32, d: &[u32; 3], mode: EvalMode) -> IndexValue {
    fn f<N: Num>(p: i64, d: &[i64; 3]) -> N {
        let one = N::of(1);
        let mut acc = N::of(0);
        for &x in d {
            acc = acc.add(N::of(p).mul(sq(N::of(x).sub(one))));
        }
        for w in d.windows(2) {
            acc = acc.add(sq(N::of(w[0]).sub(N::of(w[1]))));
        }
        acc
    }
    let d64 = [d[0] as i64, d[1] as i64, d[2] as i64];
    IndexValue(dispatch!(mode, f(p as i64, &d64)))
}

/// Which printed 4-spine extreme to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpineExtreme {
    Min,
    Max,
}

/// Printed 4-spine extremes over a degree multiset indexed ascending
/// (`d_4 >= d_3 >= d_2 >= d_1` per the hypothesis):
/// max: `p sum (d_i-1)^2 + (d_4-d_1)^2 + (d_1-d_3)^2 + (d_3-d_2)^2`;
/// min: `p sum (d_i-1)^2 + (d_1-d_2)^2 + (d_2-d_3)^2 + (d_3-d_4)^2`.
pub fn eval_sigma_4spine(p: u32, d: &[u32; 4], which: SpineExtreme, mode: EvalMode) -> IndexValue {
    let mut asc: Vec<i64> = d.iter().map(|&x| x as i64).collect();
    asc.sort_unstable();
    fn f<N: Num>(p: i64, a: &[i64], which: SpineExtreme) -> N {
        let one = N::of(1);
        let mut acc = N::of(0);
        for &x in a {
            acc = acc.add(N::of(p).mul(sq(N::of(x).sub(one))));
        }
        let (d1, d2, d3, d4) = (N::of(a[0]), N::of(a[1]), N::of(a[2]), N::of(a[3]));
        match which {
            SpineExtreme::Max => acc
                .add(sq(d4.sub(d1)))
                .add(sq(d1.sub(d3)))
                .add(sq(d3.sub(d2))),
            SpineExtreme::Min => acc
                .add(sq(d1.sub(d2)))
                .add(sq(d2.sub(d3)))
                .add(sq(d3.sub(d4))),
        }
    }
    IndexValue(dispatch!(mode, f(p as i64, &asc, which)))
}

/// True extremes of the per-ordering spine expression over all
/// permutations of `d` as a spine sequence.
pub fn brute_force_spine_extremes(p: u32, d: &[u32]) -> (IndexValue, IndexValue) {
    let values: Vec<i128> = d.iter().map(|&x| x as i128).collect();
    let mut min = i128::MAX;
    let mut max = i128::MIN;
    permute(values.clone(), &mut |order| {
        let v = spine_expression(p as i128, order);
        min = min.min(v);
        max = max.max(v);
    });
    (IndexValue(min), IndexValue(max))
}

fn permute(mut values: Vec<i128>, visit: &mut impl FnMut(&[i128])) {
    fn heap(k: usize, values: &mut Vec<i128>, visit: &mut impl FnMut(&[i128])) {
        if k <= 1 {
            visit(values);
            return;
        }
        for i in 0..k {
            heap(k - 1, values, visit);
            if k.is_multiple_of(2) {
                values.swap(i, k - 1);
            } else {
                values.swap(0, k - 1);
            }
        }
    }
    let k = values.len();
    heap(k, &mut values, visit);
}

/// Printed three-level expression
/// `n p r s^3 + p (n-2) (p+1-r)^2 + 2 p (p-r)^2 + n p r (r-s)^2 + 2`.
pub fn eval_sigma_3level(n: u32, p: u32, r: u32, s: u32, mode: EvalMode) -> IndexValue {
    fn f<N: Num>(n: i64, p: i64, r: i64, s: i64) -> N {
        let (nn, pp, rr, ss) = (N::of(n), N::of(p), N::of(r), N::of(s));
        let one = N::of(1);
        let two = N::of(2);
        nn.mul(pp)
            .mul(rr)
            .mul(cube(ss))
            .add(pp.mul(N::of(n - 2)).mul(sq(pp.add(one).sub(rr))))
            .add(two.mul(pp).mul(sq(pp.sub(rr))))
            .add(nn.mul(pp).mul(rr).mul(sq(rr.sub(ss))))
            .add(two)
    }
    IndexValue(dispatch!(mode, f(n as i64, p as i64, r as i64, s as i64)))
}

/// Printed squared-level expression, reading the unbalanced `mu_0`
/// display as `n p ((1+r)^2 - 1) ((1+r)^2 - (1+s)^2)^2`:
/// `mu_0-term + n p ((1+r)^2-1) ((1+s)^2-1)^3 + mu_1 + 2` with
/// `mu_1 = 2p (p-(1+r)^2+1)^2 + p (n-2) (p+1-(1+r)^2)^2`.
pub fn eval_sigma_squared_level(n: u32, p: u32, r: u32, s: u32, mode: EvalMode) -> IndexValue {
    fn f<N: Num>(n: i64, p: i64, r: i64, s: i64) -> N {
        let (nn, pp) = (N::of(n), N::of(p));
        let one = N::of(1);
        let two = N::of(2);
        let r2 = sq(N::of(r).add(one));
        let s2 = sq(N::of(s).add(one));
        let mu0 = nn.mul(pp).mul(r2.sub(one)).mul(sq(r2.sub(s2)));
        let leaves = nn.mul(pp).mul(r2.sub(one)).mul(cube(s2.sub(one)));
        let mu1 = two
            .mul(pp)
            .mul(sq(pp.sub(r2).add(one)))
            .add(pp.mul(N::of(n - 2)).mul(sq(pp.add(one).sub(r2))));
        mu0.add(leaves).add(mu1).add(two)
    }
    IndexValue(dispatch!(mode, f(n as i64, p as i64, r as i64, s as i64)))
}

/// Printed power-level expression
/// `n p (2p-1) (2p^2-1)^3 + 2p (1-p)^2 + p (n-2) (2-p)^2 + mu + 2` with
/// `mu = n p (2p-1) (2p-2p^2)^2`.
pub fn eval_sigma_power_level(n: u32, p: u32, mode: EvalMode) -> IndexValue {
    fn f<N: Num>(n: i64, p: i64) -> N {
        let (nn, pp) = (N::of(n), N::of(p));
        let one = N::of(1);
        let two = N::of(2);
        let fan = two.mul(pp).sub(one);
        let deep = two.mul(pp).mul(pp).sub(one);
        let mu = nn
            .mul(pp)
            .mul(fan)
            .mul(sq(two.mul(pp).sub(two.mul(pp).mul(pp))));
        nn.mul(pp)
            .mul(fan)
            .mul(cube(deep))
            .add(two.mul(pp).mul(sq(one.sub(pp))))
            .add(pp.mul(N::of(n - 2)).mul(sq(two.sub(pp))))
            .add(mu)
            .add(two)
    }
    IndexValue(dispatch!(mode, f(n as i64, p as i64)))
}

/// Printed k-level expression with the closing convention `d_k = 1`:
/// `sum_{l=1}^{k-1} n p (prod_{j<l} (d_j-1)) (d_l - d_{l+1})^2
///  + n p (prod_{j<=k-2} (d_j-1)) (d_{k-1}-1)^2 + mu` with
/// `mu = 2 + 2p (p+1-d_1)^2 + p (n-2) (p+2-d_1)^2`.
pub fn eval_sigma_klevel(n: u32, p: u32, level_degrees: &[u32], mode: EvalMode) -> IndexValue {
    assert!(!level_degrees.is_empty(), "k >= 2 requires level degrees");
    let d: Vec<i64> = level_degrees.iter().map(|&x| x as i64).collect();
    fn f<N: Num>(n: i64, p: i64, d: &[i64]) -> N {
        let k = d.len() + 1;
        let np = N::of(n).mul(N::of(p));
        let one = N::of(1);
        let two = N::of(2);
        let mut acc = N::of(0);
        // Levels are 1-based: d[l-1] holds the printed d_l; d_k = 1.
        let at = |l: usize| -> i64 {
            if l <= d.len() {
                d[l - 1]
            } else {
                1
            }
        };
        for l in 1..=k - 1 {
            let mut prod = one;
            for j in 1..l {
                prod = prod.mul(N::of(at(j) - 1));
            }
            acc = acc.add(np.mul(prod).mul(sq(N::of(at(l)).sub(N::of(at(l + 1))))));
        }
        let mut prod = one;
        for j in 1..=k - 2 {
            prod = prod.mul(N::of(at(j) - 1));
        }
        acc = acc.add(np.mul(prod).mul(sq(N::of(at(k - 1)).sub(one))));
        let mu = two
            .add(two.mul(N::of(p)).mul(sq(N::of(p + 1).sub(N::of(at(1))))))
            .add(N::of(p).mul(N::of(n - 2)).mul(sq(N::of(p + 2).sub(N::of(at(1))))));
        acc.add(mu)
    }
    IndexValue(dispatch!(mode, f(n as i64, p as i64, &d)))
}

/// Printed global extremes for trees of order `n`, plus the star's
/// constructive value for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GutmanExtremes {
    /// Printed maximum `(n-1)(n-2)`.
    pub max_printed: IndexValue,
    /// Printed minimum `0`.
    pub min_printed: IndexValue,
    /// Direct sigma of the star, `(n-1)(n-2)^2`.
    pub max_star: IndexValue,
}

pub fn eval_gutman_extremes(n: u32, mode: EvalMode) -> GutmanExtremes {
    fn max_f<N: Num>(n: i64) -> N {
        N::of(n - 1).mul(N::of(n - 2))
    }
    fn star_f<N: Num>(n: i64) -> N {
        N::of(n - 1).mul(sq(N::of(n - 2)))
    }
    GutmanExtremes {
        max_printed: IndexValue(dispatch!(mode, max_f(n as i64))),
        min_printed: IndexValue(0),
        max_star: IndexValue(dispatch!(mode, star_f(n as i64))),
    }
}

/// Result of checking the pendant-count upper bound
/// `sigma(T) <= (p-1)^3 + (p-2)^2 + 1` for trees of order `n >= 5` with
/// `3 <= p <= n-2` pendant vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SunBoundCheck {
    /// Order or pendant count outside the hypothesis range.
    NotApplicable,
    Evaluated {
        holds: bool,
        sigma: IndexValue,
        bound: IndexValue,
        /// `bound - sigma`; non-negative exactly when the bound holds.
        slack: IndexValue,
    },
}

pub fn check_bound_sun(tree: &Tree) -> SunBoundCheck {
    let n = tree.vertex_count();
    let pendants = tree.degrees().iter().filter(|&&d| d == 1).count();
    if n < 5 || pendants < 3 || pendants > n - 2 {
        return SunBoundCheck::NotApplicable;
    }
    let p = pendants as i128;
    let bound = (p - 1).pow(3) + (p - 2).pow(2) + 1;
    let s = sigma(tree);
    SunBoundCheck::Evaluated {
        holds: s.0 <= bound,
        sigma: s,
        bound: IndexValue(bound),
        slack: IndexValue(bound - s.0),
    }
}

/// Exact-rational evaluation of the average-degree upper bound
/// `sigma(C) <= sum lambda (d_i - d_{i+1})^3 + 2(n^2 + m^2) + 3m + n + 2`
/// over a caterpillar's non-increasing degree sequence, with
/// `lambda = 2(n-1)/n` and `m = n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaBoundCheck {
    pub holds: bool,
    /// Left side, the exact sigma value.
    pub lhs: Ratio<i128>,
    /// Right side as an exact rational.
    pub rhs: Ratio<i128>,
}

/// Evaluates the bound for a caterpillar; `None` when the tree is not
/// a caterpillar (the statement's hypothesis).
pub fn check_bound_upper_lambda(tree: &Tree) -> Option<LambdaBoundCheck> {
    if !tree.is_caterpillar() {
        return None;
    }
    let n = tree.vertex_count() as i128;
    let m = n - 1;
    let lambda = Ratio::new(2 * (n - 1), n);
    let ds = tree.degree_sequence();
    let cubes: i128 = ds
        .as_slice()
        .windows(2)
        .map(|w| {
            let d = w[0] as i128 - w[1] as i128;
            d * d * d
        })
        .sum();
    let rhs = lambda * Ratio::from_integer(cubes)
        + Ratio::from_integer(2 * (n * n + m * m) + 3 * m + n + 2);
    let lhs = Ratio::from_integer(sigma(tree).0);
    Some(LambdaBoundCheck {
        holds: lhs <= rhs,
        lhs,
        rhs,
    })
}

/// As [`check_bound_upper_lambda`] for a caterpillar given by its spine
/// degrees.
pub fn check_bound_upper_lambda_spine(spine: &[u32]) -> Result<LambdaBoundCheck> {
    let tree = families::caterpillar_spine(spine)?;
    Ok(check_bound_upper_lambda(&tree).expect("constructed caterpillar"))
}

/// Verdict of a printed-value vs ground-truth comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArbitrationVerdict {
    Match,
    Mismatch,
    NotApplicable,
}

/// One printed-formula evaluation compared against the direct edge-sum
/// value on the constructed tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arbitration {
    pub formula: FormulaId,
    pub mode: EvalMode,
    /// Parameter-point description, `key=value;...`.
    pub params: String,
    pub printed_value: IndexValue,
    pub oracle_value: IndexValue,
    pub verdict: ArbitrationVerdict,
    /// Single-line serialized witness tree; empty when no tree backs
    /// the comparison.
    pub witness: String,
}

impl Arbitration {
    pub fn decide(
        formula: FormulaId,
        mode: EvalMode,
        params: String,
        printed: IndexValue,
        oracle: IndexValue,
        witness: &Tree,
    ) -> Self {
        Arbitration {
            formula,
            mode,
            params,
            printed_value: printed,
            oracle_value: oracle,
            verdict: if printed == oracle {
                ArbitrationVerdict::Match
            } else {
                ArbitrationVerdict::Mismatch
            },
            witness: witness.serialize_line(),
        }
    }
}
