use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Largest window entry accepted by [`AffinePermutation::from_window`].
///
/// Keeps every product formed by the algorithms in this crate well inside `i64`.
pub const MAX_ENTRY: i64 = 1 << 40;

/// A bijection of Z commuting with translation by `n`, stored by its window
/// `[ω(1), …, ω(n)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

/// An inversion `(i, j)` with `1 ≤ i ≤ n`, `i < j` and `ω(i) > ω(j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inversion {
    pub i: i64,
    pub j: i64,
}

impl Inversion {
    pub fn height(&self) -> i64 {
        self.j - self.i
    }
}

/// Centroid of an alcove, one exact rational per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centroid {
    pub coords: Vec<Ratio<i64>>,
}

#[inline]
pub(crate) fn modn(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

impl AffinePermutation {
    pub fn from_window(n: usize, values: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroPeriod);
        }
        if values.len() != n {
            return Err(Error::WrongLength { expected: n, got: values.len() });
        }
        let nn = n as i64;
        let mut seen: Vec<Option<i64>> = alloc::vec![None; n];
        let mut sum = 0i64;
        for &v in values {
            if v.abs() > MAX_ENTRY {
                return Err(Error::EntryOutOfRange(v));
            }
            let r = modn(v, nn) as usize;
            if let Some(first) = seen[r] {
                return Err(Error::DistinctResidueViolation { n, first, second: v });
            }
            seen[r] = Some(v);
            sum += v;
        }
        let expected = nn * (nn + 1) / 2;
        if sum != expected {
            return Err(Error::SumViolation { expected, got: sum });
        }
        Ok(Self { window: values.to_vec() })
    }

    /// Builds from a window already known to be valid.
    pub(crate) fn from_window_unchecked(window: Vec<i64>) -> Self {
        debug_assert!(Self::from_window(window.len(), &window).is_ok());
        Self { window }
    }

    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n as i64).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn into_window(self) -> Vec<i64> {
        self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k as i64 + 1)
    }

    /// `ω(x)` for any integer `x`.
    #[inline]
    pub fn apply(&self, x: i64) -> i64 {
        let n = self.window.len() as i64;
        let q = (x - 1).div_euclid(n);
        let r = (x - 1).rem_euclid(n);
        self.window[r as usize] + q * n
    }

    pub fn inverse(&self) -> Self {
        let n = self.window.len() as i64;
        let mut w = alloc::vec![0i64; self.window.len()];
        for (k, &v) in self.window.iter().enumerate() {
            let i = k as i64 + 1;
            let r = modn(v - 1, n) + 1;
            w[(r - 1) as usize] = i - (v - r);
        }
        Self { window: w }
    }

    /// The composite `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::PeriodMismatch(self.n(), other.n()));
        }
        Ok(Self { window: other.window.iter().map(|&x| self.apply(x)).collect() })
    }

    /// `ω s_i` for `0 ≤ i < n`.
    pub fn right_multiply_simple(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i >= n || n < 2 {
            return Err(Error::BadGenerator { n, index: i });
        }
        let mut w = self.window.clone();
        if i == 0 {
            let nn = n as i64;
            let first = w[0];
            w[0] = w[n - 1] - nn;
            w[n - 1] = first + nn;
        } else {
            w.swap(i - 1, i);
        }
        Ok(Self { window: w })
    }

    /// `s_i ω` for `0 ≤ i < n`: swaps the values `i` and `i+1` (mod n).
    pub fn left_multiply_simple(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i >= n || n < 2 {
            return Err(Error::BadGenerator { n, index: i });
        }
        Ok(self.inverse().right_multiply_simple(i)?.inverse())
    }

    /// Right descents: `i` with `ω(i) > ω(i+1)`, where `i = 0` compares `ω(0)` and `ω(1)`.
    pub fn right_descents(&self) -> Vec<usize> {
        let n = self.n();
        if n < 2 {
            return Vec::new();
        }
        (0..n).filter(|&i| self.apply(i as i64) > self.apply(i as i64 + 1)).collect()
    }

    /// A reduced word `s_{i_1} ⋯ s_{i_k}` for `ω`, read left to right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = self.clone();
        while let Some(&i) = cur.right_descents().first() {
            word.push(i);
            cur = cur.right_multiply_simple(i).expect("descent index is in range");
        }
        word.reverse();
        word
    }

    /// The normalized inversion set, sorted by `(i, j)`.
    pub fn inversions(&self) -> Vec<Inversion> {
        let n = self.window.len() as i64;
        let mut out = Vec::new();
        for i in 1..=n {
            let wi = self.apply(i);
            for j0 in i + 1..=i + n {
                let diff = wi - self.apply(j0);
                if diff <= 0 {
                    continue;
                }
                let count = (diff + n - 1) / n;
                for t in 0..count {
                    out.push(Inversion { i, j: j0 + t * n });
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Coxeter length, counted in closed form per residue class.
    pub fn length(&self) -> u64 {
        let n = self.window.len() as i64;
        let mut total = 0u64;
        for i in 1..=n {
            let wi = self.apply(i);
            for j0 in i + 1..=i + n {
                let diff = wi - self.apply(j0);
                if diff > 0 {
                    total += ((diff + n - 1) / n) as u64;
                }
            }
        }
        total
    }

    /// No inversion of height `m`.
    pub fn is_m_stable(&self, m: usize) -> bool {
        let m = m as i64;
        (1..=self.window.len() as i64).all(|x| self.apply(x + m) > self.apply(x))
    }

    /// The inverse is m-stable.
    pub fn is_m_restricted(&self, m: usize) -> bool {
        let inv = self.inverse();
        inv.is_m_stable(m)
    }

    /// `ω*(x) = 1 − ω(1 − x)`.
    pub fn star(&self) -> Self {
        let n = self.window.len() as i64;
        Self { window: (1..=n).map(|x| 1 - self.apply(1 - x)).collect() }
    }

    /// `π ω π⁻¹` with `π(i) = i + 1`.
    pub fn pi_conjugate(&self) -> Self {
        let n = self.window.len() as i64;
        Self { window: (0..n).map(|x| self.apply(x) + 1).collect() }
    }

    /// Centroid of the alcove `ω(A0)`: `x_i = ((n+1)/2 − ω⁻¹(i)) / n`.
    pub fn centroid(&self) -> Centroid {
        let n = self.window.len() as i64;
        let inv = self.inverse();
        let coords = inv.window.iter().map(|&v| Ratio::new(n + 1 - 2 * v, 2 * n)).collect();
        Centroid { coords }
    }

    /// `ω(1) < … < ω(n)`.
    pub fn is_min_length_left_rep(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// `ω⁻¹(1) < … < ω⁻¹(n)`.
    pub fn is_min_length_right_rep(&self) -> bool {
        self.inverse().is_min_length_left_rep()
    }

    /// `true` when the window is a permutation of `1..=n`.
    pub fn is_finite(&self) -> bool {
        let n = self.window.len() as i64;
        self.window.iter().all(|&v| (1..=n).contains(&v))
    }
}

impl Centroid {
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// The integers `(n+1)/2 − n·x_i`, if they are integers.
    pub fn inverse_window(&self) -> Option<Vec<i64>> {
        let n = self.coords.len() as i64;
        let half = Ratio::new(n + 1, 2);
        self.coords
            .iter()
            .map(|x| {
                let v = half - x * n;
                v.is_integer().then(|| v.to_integer())
            })
            .collect()
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"[-3,2,3,8]"`. Whitespace around entries is tolerated.
pub fn parse_window(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(String::from("window must be enclosed in [ ]")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(alloc::format!("bad window entry {t:?}")))
        })
        .collect()
}

impl FromStr for AffinePermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_window(s)?;
        Self::from_window(v.len(), &v)
    }
}
