use alloc::vec::Vec;

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::maps::sp_counts;
use crate::parking::ParkingFunction;

/// Labels placed per unit of `n` when no cap is given.
pub const DEFAULT_CAP_PER_N: usize = 40;

/// A cap that also grows with `m`; transients get longer as `m/n` grows.
pub fn sweep_cap(n: usize, m: usize) -> usize {
    DEFAULT_CAP_PER_N * (n + m)
}

/// Greedy placement of labels `1..=cap` on positions `1, 2, …`.
#[derive(Clone, Debug)]
pub struct UTable {
    f: ParkingFunction,
    cap: usize,
    /// `slots[i]` is the label at position `i`, 0 when empty; index 0 is unused.
    slots: Vec<usize>,
    /// `positions[α − 1]` is where `α` was placed.
    positions: Vec<usize>,
    period_start: Option<usize>,
}

impl UTable {
    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn m(&self) -> usize {
        self.f.m()
    }

    pub fn f(&self) -> &ParkingFunction {
        &self.f
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn label_at(&self, i: usize) -> Option<usize> {
        self.slots.get(i).copied().filter(|&a| a != 0)
    }

    pub fn position_of(&self, alpha: usize) -> Option<usize> {
        alpha.checked_sub(1).and_then(|k| self.positions.get(k)).copied()
    }

    /// The least `N` with `U(i+n) = U(i) + n` for every settled `i ≥ N`, provided at least
    /// three full periods from `N` are settled.
    pub fn period_start(&self) -> Option<usize> {
        self.period_start
    }

    pub fn is_periodic(&self) -> bool {
        self.period_start.is_some()
    }

    /// Empty positions in `[1, N)`.
    pub fn gaps_below_start(&self) -> Option<usize> {
        self.period_start.map(|s| (1..s).filter(|&i| self.label_at(i).is_none()).count())
    }

    /// Highest occupied position.
    pub fn extent(&self) -> usize {
        self.slots.len() - 1
    }

    /// First empty position; everything below it is final.
    pub fn settled(&self) -> usize {
        (1..self.slots.len()).find(|&i| self.slots[i] == 0).unwrap_or(self.slots.len())
    }

    fn detect_period(&mut self) {
        let n = self.n();
        let settled = self.settled();
        if settled < 3 * n + 1 {
            return;
        }
        let last_break = (1..settled - n).rev().find(|&i| self.slots[i + n] != self.slots[i] + n);
        let start = last_break.map_or(1, |i| i + 1);
        // a genuine period meets every residue class; otherwise the settled prefix is still transient
        let mut residues: Vec<usize> = (start..start + n).map(|i| self.slots[i] % n).collect();
        residues.sort_unstable();
        residues.dedup();
        if start + 3 * n <= settled && residues.len() == n {
            self.period_start = Some(start);
        }
    }
}

/// `♯{β ∈ (α − m, α), β ≥ 1 : U⁻¹(β) > i}`.
fn count_right(positions: &[usize], alpha: usize, m: usize, i: usize) -> usize {
    (alpha.saturating_sub(m - 1).max(1)..alpha).filter(|&b| positions[b - 1] > i).count()
}

/// Places `α = 1, …, cap` in turn at the leftmost empty position `i` that lies right
/// of `α − m` and has `f(i mod n) = ♯{β ∈ (α − m, α) : U⁻¹(β) > i}`.
pub fn build_u(f: &ParkingFunction, cap: usize) -> Result<UTable> {
    let (n, m) = (f.n(), f.m());
    if cap < n {
        return Err(Error::CapExceeded { needed: n as u64, cap: cap as u64 });
    }
    let fv = f.values();
    let at = |i: usize| fv[(i - 1) % n];
    let mut slots: Vec<usize> = alloc::vec![0];
    let mut positions: Vec<usize> = Vec::with_capacity(cap);
    for alpha in 1..=cap {
        let lower = if alpha > m { positions[alpha - m - 1] + 1 } else { 1 };
        // beyond the last occupied slot every count is 0 and f vanishes somewhere in each period
        let upper = slots.len() + n;
        let i = (lower..=upper)
            .find(|&i| slots.get(i).is_none_or(|&s| s == 0) && at(i) == count_right(&positions, alpha, m, i))
            .ok_or(Error::VerificationFailed("no admissible position"))?;
        if i >= slots.len() {
            slots.resize(i + 1, 0);
        }
        slots[i] = alpha;
        positions.push(i);
    }
    let mut table = UTable { f: f.clone(), cap, slots, positions, period_start: None };
    table.detect_period();
    Ok(table)
}

/// `ω(i) = U(i + tn) − k` with `tn ≥ N − 1` and the window sum normalized.
pub fn extract_omega(table: &UTable) -> Result<AffinePermutation> {
    let start = table.period_start.ok_or(Error::NotPeriodic)?;
    let n = table.n();
    let t = (start - 1).div_ceil(n);
    let labels: Vec<i64> = (1..=n)
        .map(|i| table.label_at(i + t * n).map(|a| a as i64).ok_or(Error::NotPeriodic))
        .collect::<Result<_>>()?;
    let ni = n as i64;
    let excess = labels.iter().sum::<i64>() - ni * (ni + 1) / 2;
    if excess % ni != 0 {
        return Err(Error::VerificationFailed("window sum is not normalizable"));
    }
    let k = excess / ni;
    let w: Vec<i64> = labels.iter().map(|&a| a - k).collect();
    let omega = AffinePermutation::from_window(n, &w).map_err(|_| Error::VerificationFailed("not a window"))?;
    if !omega.is_m_restricted(table.m()) {
        return Err(Error::VerificationFailed("not restricted"));
    }
    if sp_counts(&omega, table.m()) != table.f.values() {
        return Err(Error::VerificationFailed("sp does not return f"));
    }
    Ok(omega)
}

/// `build_u` followed by `extract_omega`, with the default cap when `cap` is `None`.
pub fn invert_sp(f: &ParkingFunction, cap: Option<usize>) -> Result<AffinePermutation> {
    let cap = cap.unwrap_or(DEFAULT_CAP_PER_N * f.n());
    extract_omega(&build_u(f, cap)?)
}
