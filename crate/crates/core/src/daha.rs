use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::sommers::in_dilated_alcove;

type Q = Ratio<i64>;

/// `q^qexp · t^texp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QtMonomial {
    pub qexp: Q,
    pub texp: Q,
}

impl QtMonomial {
    pub fn new(qexp: Q, texp: Q) -> Self {
        Self { qexp, texp }
    }

    /// The exponent of `q` after substituting `t = q^{m/n}`, times `n`.
    pub fn evaluate(&self, n: usize, m: usize) -> Q {
        self.qexp * Q::from_integer(n as i64) + self.texp * Q::from_integer(m as i64)
    }

    fn shift_q(self, k: i64) -> Self {
        Self { qexp: self.qexp + k, texp: self.texp }
    }
}

fn fmt_exp(f: &mut fmt::Formatter<'_>, var: char, e: Q) -> fmt::Result {
    if e == Q::from_integer(1) {
        write!(f, "{var}")
    } else if e.is_integer() {
        write!(f, "{var}^{}", e.to_integer())
    } else {
        write!(f, "{var}^({e})")
    }
}

impl fmt::Display for QtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Q::from_integer(0);
        match (self.qexp == zero, self.texp == zero) {
            (true, true) => write!(f, "1"),
            (false, true) => fmt_exp(f, 'q', self.qexp),
            (true, false) => fmt_exp(f, 't', self.texp),
            (false, false) => {
                fmt_exp(f, 'q', self.qexp)?;
                write!(f, "*")?;
                fmt_exp(f, 't', self.texp)
            }
        }
    }
}

/// Where the global scalar of a weight is pinned.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Normalization {
    /// The initial weight carries `q^{(n+1)/2}` in total.
    #[default]
    Paper,
    /// The product of all entries has no `q` factor at the initial weight.
    UnitProduct,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DahaWeight {
    monomials: Vec<QtMonomial>,
}

impl DahaWeight {
    pub fn new(monomials: Vec<QtMonomial>) -> Self {
        Self { monomials }
    }

    pub fn n(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[QtMonomial] {
        &self.monomials
    }
}

impl fmt::Display for DahaWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.monomials.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `q^{(n+1)/(2n)} (t^{(1−n)/2}, t^{(3−n)/2}, …, t^{(n−1)/2})`.
pub fn initial_weight(n: usize) -> DahaWeight {
    let ni = n as i64;
    let qexp = Q::new(ni + 1, 2 * ni);
    DahaWeight::new((1..=ni).map(|i| QtMonomial::new(qexp, Q::new(2 * i - 1 - ni, 2))).collect())
}

/// `s_i` swaps entries `i` and `i+1`; `s_0` sends `(a_1, …, a_n)` to `(a_n/q, a_2, …, a_{n−1}, q·a_1)`.
pub fn cross_wall(a: &DahaWeight, i: usize) -> Result<DahaWeight> {
    let n = a.n();
    if i >= n || n < 2 {
        return Err(Error::BadGenerator { n, index: i });
    }
    let mut v = a.monomials.clone();
    if i == 0 {
        let first = v[0];
        v[0] = v[n - 1].shift_q(-1);
        v[n - 1] = first.shift_q(1);
    } else {
        v.swap(i - 1, i);
    }
    Ok(DahaWeight::new(v))
}

/// `b_i = n·qexp_i + m·texp_i`.
pub fn evaluate_b(a: &DahaWeight, m: usize) -> Result<Vec<i64>> {
    let n = a.n();
    a.monomials
        .iter()
        .map(|x| {
            let b = x.evaluate(n, m);
            if b.is_integer() { Ok(b.to_integer()) } else { Err(Error::NonIntegralEvaluation) }
        })
        .collect()
}

/// `evaluate_b` under the chosen normalization; `UnitProduct` shifts every entry by `−(n+1)/2`.
pub fn evaluate_b_normalized(a: &DahaWeight, m: usize, norm: Normalization) -> Result<Vec<Q>> {
    let b = evaluate_b(a, m)?;
    let shift = match norm {
        Normalization::Paper => Q::from_integer(0),
        Normalization::UnitProduct => Q::new(a.n() as i64 + 1, 2),
    };
    Ok(b.into_iter().map(|x| Q::from_integer(x) - shift).collect())
}

/// The weight reached from the initial one by crossing walls along a reduced word of `σ`.
pub fn weight_of_alcove_unchecked(sigma: &AffinePermutation) -> Result<DahaWeight> {
    let mut a = initial_weight(sigma.n());
    for i in sigma.reduced_word() {
        a = cross_wall(&a, i)?;
    }
    Ok(a)
}

/// As `weight_of_alcove_unchecked`, for `σ(A0)` inside the m-dilated fundamental alcove.
pub fn weight_of_alcove(sigma: &AffinePermutation, m: usize) -> Result<DahaWeight> {
    if !in_dilated_alcove(sigma, m) {
        return Err(Error::OutsideRegion);
    }
    weight_of_alcove_unchecked(sigma)
}

/// Label `i` sits at `(x_i, y_i)`, where `a_i = q^{(n+1)/(2n)} t^{−(n+1)/2} q^{x_i} t^{y_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicTableau {
    pub m: usize,
    pub positions: Vec<(i64, i64)>,
}

pub fn tableau_of_weight(a: &DahaWeight, m: usize) -> Result<PeriodicTableau> {
    let n = a.n() as i64;
    let x0 = Q::new(n + 1, 2 * n);
    let y0 = Q::new(n + 1, 2);
    let positions: Vec<(i64, i64)> = a
        .monomials
        .iter()
        .map(|mono| {
            let (x, y) = (mono.qexp - x0, mono.texp + y0);
            if x.is_integer() && y.is_integer() { Ok((x.to_integer(), y.to_integer())) } else { Err(Error::NonIntegralPosition) }
        })
        .collect::<Result<_>>()?;
    let mut ys: Vec<i64> = positions.iter().map(|p| p.1).collect();
    ys.sort_unstable();
    if ys.iter().copied().ne(1..=n) {
        return Err(Error::NonIntegralPosition);
    }
    Ok(PeriodicTableau { m, positions })
}

impl PeriodicTableau {
    pub fn n(&self) -> usize {
        self.positions.len()
    }

    /// The filling, extended by `T(x+1, y) = T(x, y) + n` and `T(x+m, y−n) = T(x, y)`.
    pub fn value(&self, x: i64, y: i64) -> i64 {
        let n = self.n() as i64;
        let (i, j) = self.row_anchor(y);
        let (xi, _) = self.positions[i];
        i as i64 + 1 + n * (x - xi - j * self.m as i64)
    }

    /// The label whose row is congruent to `y`, and how many periods `y` lies below it.
    fn row_anchor(&self, y: i64) -> (usize, i64) {
        let n = self.n() as i64;
        let i = self.positions.iter().position(|p| (p.1 - y).rem_euclid(n) == 0).expect("rows cover every residue");
        (i, (self.positions[i].1 - y) / n)
    }

    /// Where the label congruent to `i` sits in row `y`: the column with `T(x, y) ≡ i` and `1 ≤ T ≤ n`.
    fn row_start(&self, y: i64) -> i64 {
        let (i, j) = self.row_anchor(y);
        self.positions[i].0 + j * self.m as i64
    }

    /// Columns increase upward; rows increase by construction.
    pub fn is_standard(&self) -> bool {
        let n = self.n() as i64;
        (1..=n).all(|y| self.value(0, y + 1) > self.value(0, y))
    }
}

/// Row lengths, top to bottom, of the diagram inside the `n × m` rectangle whose
/// lower-left corner is the smallest entry of `b`.
pub fn pf_diagram_of_weight(a: &DahaWeight, m: usize) -> Result<Vec<usize>> {
    let t = tableau_of_weight(a, m)?;
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let b = evaluate_b(a, m)?;
    let lowest = (0..b.len()).min_by_key(|&k| b[k]).expect("n ≥ 1");
    let (x0, y0) = t.positions[lowest];
    let (n, mi) = (t.n() as i64, m as i64);
    Ok((1..=n)
        .map(|d| {
            let start = t.row_start(y0 - d);
            (x0 + mi - start).clamp(0, mi) as usize
        })
        .collect())
}

/// `σ(i) = n·x_i + y_i` from the tableau positions.
pub fn alcove_of_tableau(t: &PeriodicTableau) -> Result<AffinePermutation> {
    let n = t.n() as i64;
    let w: Vec<i64> = t.positions.iter().map(|&(x, y)| n * x + y).collect();
    AffinePermutation::from_window(t.n(), &w)
}
