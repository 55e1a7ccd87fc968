use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A function `f: {1..n} → Z≥0` whose sorted diagram fits under the diagonal
/// of an `n × m` rectangle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    n: usize,
    m: usize,
    values: Vec<usize>,
}

/// A Young diagram inside the `n × m` rectangle together with row labels.
///
/// Row 1 is the bottom (longest) row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledDiagram {
    m: usize,
    rows: Vec<usize>,
    tau: Vec<usize>,
}

pub fn check_coprime(n: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 || n.gcd(&m) != 1 {
        return Err(Error::NotCoprime { n, m });
    }
    Ok(())
}

/// `m^(n-1)`, or `None` on overflow.
pub fn parking_count(n: usize, m: usize) -> Option<u64> {
    if n == 0 {
        return Some(1);
    }
    (m as u64).checked_pow(u32::try_from(n - 1).ok()?)
}

/// The rational Catalan number `C(n+m, n) / (n+m)`.
pub fn rational_catalan(n: usize, m: usize) -> u128 {
    let mut binom: u128 = 1;
    for k in 0..n as u128 {
        binom = binom * (m as u128 + n as u128 - k) / (k + 1);
    }
    binom / (n + m) as u128
}

fn sorted_fits(sorted: &[usize], n: usize, m: usize) -> bool {
    sorted.iter().enumerate().all(|(i, &v)| v * n <= i * m)
}

/// Largest value allowed in position `i` (0-indexed) of an increasing parking function.
#[inline]
fn row_bound(i: usize, n: usize, m: usize) -> usize {
    i * m / n
}

pub fn is_parking_function(n: usize, m: usize, values: &[usize]) -> Result<bool> {
    check_coprime(n, m)?;
    if values.len() != n {
        return Ok(false);
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    Ok(sorted_fits(&sorted, n, m))
}

/// The counting form: `m·♯{k : f(k) < ℓ} ≥ ℓ·n` for `1 ≤ ℓ ≤ m`.
pub fn is_parking_function_by_levels(n: usize, m: usize, values: &[usize]) -> Result<bool> {
    check_coprime(n, m)?;
    if values.len() != n {
        return Ok(false);
    }
    Ok((1..=m).all(|l| m * values.iter().filter(|&&v| v < l).count() >= l * n))
}

impl ParkingFunction {
    pub fn new(n: usize, m: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != n {
            return Err(Error::WrongLength { expected: n, got: values.len() });
        }
        if !is_parking_function(n, m, &values)? {
            return Err(Error::NotParkingFunction(values, m, n));
        }
        Ok(Self { n, m, values })
    }

    pub(crate) fn new_unchecked(n: usize, m: usize, values: Vec<usize>) -> Self {
        debug_assert!(is_parking_function(n, m, &values).unwrap_or(false));
        Self { n, m, values }
    }

    pub fn zero(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, alloc::vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `f(i)` for `1 ≤ i ≤ n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn is_increasing(&self) -> bool {
        self.values.windows(2).all(|p| p[0] <= p[1])
    }

    /// The composite `f ∘ v` for a permutation `v` of `1..=n` given in one-line notation.
    pub fn permute(&self, v: &[usize]) -> Self {
        Self { n: self.n, m: self.m, values: v.iter().map(|&i| self.values[i - 1]).collect() }
    }

    /// Row lengths of the underlying diagram, bottom row first.
    pub fn diagram(&self) -> Vec<usize> {
        let mut rows = self.values.clone();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        rows
    }

    pub fn to_labeled_diagram(&self) -> LabeledDiagram {
        let mut tau: Vec<usize> = (1..=self.n).collect();
        tau.sort_unstable_by(|&a, &b| {
            self.values[b - 1].cmp(&self.values[a - 1]).then(b.cmp(&a))
        });
        LabeledDiagram { m: self.m, rows: self.diagram(), tau }
    }

    pub fn from_labeled_diagram(d: &LabeledDiagram) -> Self {
        let mut values = alloc::vec![0; d.rows.len()];
        for (k, &t) in d.tau.iter().enumerate() {
            values[t - 1] = d.rows[k];
        }
        Self::new_unchecked(d.rows.len(), d.m, values)
    }
}

impl LabeledDiagram {
    pub fn new(m: usize, rows: Vec<usize>, tau: Vec<usize>) -> Result<Self> {
        let n = rows.len();
        check_coprime(n, m)?;
        if tau.len() != n {
            return Err(Error::WrongLength { expected: n, got: tau.len() });
        }
        let mut seen = alloc::vec![false; n];
        for &t in &tau {
            if t == 0 || t > n || seen[t - 1] {
                return Err(Error::InvalidDiagram("row labels must be a permutation of 1..n"));
            }
            seen[t - 1] = true;
        }
        if rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidDiagram("row lengths must weakly decrease upwards"));
        }
        for (k, &len) in rows.iter().enumerate() {
            if len > row_bound(n - 1 - k, n, m) {
                return Err(Error::InvalidDiagram("diagram does not fit under the diagonal"));
            }
        }
        for k in 0..n.saturating_sub(1) {
            if rows[k] == rows[k + 1] && tau[k + 1] > tau[k] {
                return Err(Error::LabelMonotonicityViolation(k + 1));
            }
        }
        Ok(Self { m, rows, tau })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }
}

/// All increasing parking functions, in lexicographic order.
pub fn enumerate_increasing(n: usize, m: usize) -> Result<Vec<ParkingFunction>> {
    check_coprime(n, m)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<ParkingFunction>) {
        let i = cur.len();
        if i == n {
            out.push(ParkingFunction { n, m, values: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=row_bound(i, n, m) {
            cur.push(v);
            rec(n, m, cur, out);
            cur.pop();
        }
    }
    rec(n, m, &mut cur, &mut out);
    Ok(out)
}

/// Rearranges `v` into the next permutation in lexicographic order.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All parking functions for the slope `m/n`, sorted lexicographically.
pub fn enumerate_parking_functions(n: usize, m: usize, cap: u64) -> Result<Vec<ParkingFunction>> {
    check_coprime(n, m)?;
    let needed = parking_count(n, m).unwrap_or(u64::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let mut out = Vec::with_capacity(needed as usize);
    for inc in enumerate_increasing(n, m)? {
        let mut v = inc.values;
        loop {
            out.push(ParkingFunction { n, m, values: v.clone() });
            if !next_permutation(&mut v) {
                break;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PF{}/{}({})", self.m, self.n, self)
    }
}

/// Parses `"2,0,4,0"`.
pub fn parse_values(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(alloc::format!("bad parking function entry {t:?}")))
        })
        .collect()
}

/// Formats any value list in the parking function text format.
pub fn format_values(values: &[usize]) -> String {
    let mut s = String::new();
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{v}"));
    }
    s
}
