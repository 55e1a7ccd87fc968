use alloc::vec::Vec;

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::parking::next_permutation;
use crate::qt_stats::QtPolynomial;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePermutation {
    values: Vec<usize>,
}

impl FinitePermutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = alloc::vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotFinitePermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `ω(i)` for `1 ≤ i ≤ n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.values.len()];
        for (k, &v) in self.values.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Self { values: inv }
    }

    /// `ω(i + m) > ω(i)` whenever both sides are defined.
    pub fn is_m_stable(&self, m: usize) -> bool {
        m == 0 || self.values.iter().zip(self.values.iter().skip(m)).all(|(a, b)| b > a)
    }

    pub fn to_affine(&self) -> AffinePermutation {
        let w: Vec<i64> = self.values.iter().map(|&v| v as i64).collect();
        AffinePermutation::from_window_unchecked(w)
    }
}

/// Class sizes `n_i = ⌊(n − i)/m⌋ + 1` of the residues `i = 1..min(m, n)`.
fn class_sizes(n: usize, m: usize) -> Vec<usize> {
    (1..=m.min(n)).map(|i| (n - i) / m + 1).collect()
}

/// `n! / ∏ n_i!`.
pub fn count_finite_m_stable(n: usize, m: usize) -> u128 {
    let mut total: u128 = 1;
    let mut placed = 0u128;
    for size in class_sizes(n, m) {
        // multiply by C(placed + size, size) one factor at a time to stay exact
        for k in 1..=size as u128 {
            total = total * (placed + k) / k;
        }
        placed += size as u128;
    }
    total
}

/// All m-stable permutations of `{1..n}`, lexicographically sorted.
///
/// A stable permutation is increasing on every residue class of positions mod `m`,
/// so it is fixed by which values each class receives.
pub fn enumerate_finite_m_stable(n: usize, m: usize) -> Vec<FinitePermutation> {
    let m = m.max(1);
    let sizes = class_sizes(n, m);
    let mut word: Vec<usize> = sizes.iter().enumerate().flat_map(|(c, &s)| core::iter::repeat_n(c, s)).collect();
    let mut out = Vec::new();
    loop {
        let mut values = alloc::vec![0; n];
        let mut next_pos: Vec<usize> = (0..sizes.len()).collect();
        for (v, &c) in word.iter().enumerate() {
            values[next_pos[c]] = v + 1;
            next_pos[c] += m;
        }
        out.push(FinitePermutation { values });
        if !next_permutation(&mut word) {
            break;
        }
    }
    out.sort_unstable();
    out
}

/// `PS_ω(α) = ♯{x < y < x + m : ω(x) > ω(y) = α}`.
pub fn ps_finite(w: &FinitePermutation, m: usize) -> Result<Vec<usize>> {
    if !w.is_m_stable(m) {
        return Err(Error::NotStable(alloc::format!("{:?}", w.values), m));
    }
    Ok(ps_finite_counts(w, m))
}

fn ps_finite_counts(w: &FinitePermutation, m: usize) -> Vec<usize> {
    let inv = w.inverse();
    (1..=w.n())
        .map(|alpha| {
            let y = inv.get(alpha);
            let lo = (y + 1).saturating_sub(m).max(1);
            (lo..y).filter(|&x| w.get(x) > alpha).count()
        })
        .collect()
}

fn verify(candidate: Vec<usize>, f: &[usize], m: usize) -> Result<FinitePermutation> {
    let w = FinitePermutation::new(candidate).map_err(|_| Error::NoPreimage)?;
    if !w.is_m_stable(m) || ps_finite_counts(&w, m) != f {
        return Err(Error::NoPreimage);
    }
    Ok(w)
}

/// Builds `ω⁻¹` left to right: `x_k` is the least free position `y` with `φ_k(y) = f(k)`,
/// where `φ_k(y) = ♯((y − m, y] ∖ Y_{k−1}) − 1` and `Y_{k−1}` holds the earlier `x`'s and
/// all non-positive integers.
pub fn reconstruct_v1(f: &[usize], m: usize) -> Result<FinitePermutation> {
    let n = f.len();
    let mut used = alloc::vec![false; n + 1];
    let mut inv = Vec::with_capacity(n);
    for &target in f {
        let phi = |y: usize, used: &[bool]| -> usize {
            let lo = (y + 1).saturating_sub(m).max(1);
            (lo..=y).filter(|&x| !used[x]).count() - 1
        };
        let mut last: Option<usize> = None;
        let mut chosen = None;
        for y in (1..=n).filter(|&y| !used[y]) {
            let v = phi(y, &used);
            if last.is_some_and(|l| v < l) {
                return Err(Error::VerificationFailed("phi_k is not monotone"));
            }
            last = Some(v);
            if v == target && chosen.is_none() {
                chosen = Some(y);
            }
        }
        let y = chosen.ok_or(Error::NoPreimage)?;
        used[y] = true;
        inv.push(y);
    }
    let inv = FinitePermutation::new(inv).map_err(|_| Error::NoPreimage)?;
    verify(inv.inverse().values, f, m)
}

/// Builds `ω` left to right: `ω(i)` is the least unused `α` with
/// `f(α) = ♯{j ∈ (i − m, i) : ω(j) > α}`.
pub fn reconstruct_v2(f: &[usize], m: usize) -> Result<FinitePermutation> {
    let n = f.len();
    let mut used = alloc::vec![false; n + 1];
    let mut w: Vec<usize> = Vec::with_capacity(n);
    for i in 1..=n {
        let lo = (i + 1).saturating_sub(m).max(1);
        let alpha = (1..=n)
            .filter(|&a| !used[a])
            .find(|&a| f[a - 1] == (lo..i).filter(|&j| w[j - 1] > a).count())
            .ok_or(Error::NoPreimage)?;
        used[alpha] = true;
        w.push(alpha);
    }
    verify(w, f, m)
}

/// `inv2(α) = χ(ω(ω⁻¹(α) − 1) > α)`.
pub fn inv2(w: &FinitePermutation) -> Result<Vec<u8>> {
    if !w.is_m_stable(2) {
        return Err(Error::NotStable(alloc::format!("{:?}", w.values), 2));
    }
    let inv = w.inverse();
    Ok((1..=w.n())
        .map(|alpha| {
            let y = inv.get(alpha);
            u8::from(y > 1 && w.get(y - 1) > alpha)
        })
        .collect())
}

/// Every suffix has at least as many zeros as ones.
pub fn is_open_dyck(bits: &[u8]) -> bool {
    let mut balance = 0i64;
    for &b in bits.iter().rev() {
        balance += if b == 0 { 1 } else { -1 };
        if balance < 0 {
            return false;
        }
    }
    true
}

/// `Σ t^{2·Σ PS_ω}` over m-stable `ω ∈ S_n`.
pub fn finite_springer_poincare(n: usize, m: usize) -> QtPolynomial {
    let mut p = QtPolynomial::zero();
    for w in enumerate_finite_m_stable(n, m) {
        let s: usize = ps_finite_counts(&w, m).iter().sum();
        p.add_term(1, 0, 2 * s as i64);
    }
    p
}
