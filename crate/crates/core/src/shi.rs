use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::affine::{modn, AffinePermutation};
use crate::error::{Error, Result};
use crate::parking::ParkingFunction;
use crate::sommers::enumerate_m_restricted;

/// The hyperplane `x_i = x_ℓ` in normal form: `1 ≤ i ≤ n`, `i < ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub i: i64,
    pub ell: i64,
}

impl Hyperplane {
    /// Normal form of `H_{i,j}^k = {x_i − x_j = k}`; `None` when it is not a hyperplane.
    pub fn normalize(n: usize, i: i64, j: i64, k: i64) -> Option<Self> {
        let ni = n as i64;
        let (mut a, mut b) = (i, j + k * ni);
        if a == b {
            return None;
        }
        if b < a {
            core::mem::swap(&mut a, &mut b);
        }
        let shift = (a - 1).div_euclid(ni) * ni;
        Some(Self { i: a - shift, ell: b - shift })
    }

    pub fn height(&self) -> i64 {
        self.ell - self.i
    }

    /// Membership in the k-Shi arrangement: height below `kn` and not a multiple of `n`.
    pub fn in_shi(&self, n: usize, k: usize) -> bool {
        let h = self.height();
        h < (k * n) as i64 && modn(h, n as i64) != 0
    }

    /// Whether the alcove of `u` lies on the far side of this hyperplane from `A0`.
    pub fn separates(&self, u: &AffinePermutation) -> bool {
        u.apply(self.i) > u.apply(self.ell)
    }
}

fn check_slope(n: usize, k: usize, m: usize) -> Result<()> {
    let kn = k * n;
    if k == 0 || !(m == kn + 1 || (kn > 1 && m == kn - 1)) {
        return Err(Error::BadSlope { n, k, m });
    }
    Ok(())
}

/// Slope `kn + sign`.
pub fn slope(n: usize, k: usize, sign: i8) -> Result<usize> {
    let kn = k * n;
    let m = match sign {
        1 => kn + 1,
        -1 if kn > 1 => kn - 1,
        _ => return Err(Error::BadSlope { n, k, m: kn }),
    };
    Ok(m)
}

/// `λ(a) = ♯{(a, a+h) ∈ Inv(u) : h < kn}`.
pub fn pak_stanley(u: &AffinePermutation, k: usize, m: usize) -> Result<ParkingFunction> {
    let n = u.n();
    check_slope(n, k, m)?;
    if !u.is_m_restricted(m) {
        return Err(Error::NotRestricted(alloc::string::ToString::to_string(u), m));
    }
    let kn = (k * n) as i64;
    let values = (1..=n as i64)
        .map(|a| {
            let ua = u.apply(a);
            (a + 1..a + kn).filter(|&j| u.apply(j) < ua).count()
        })
        .collect();
    ParkingFunction::new(n, m, values)
}

/// Per index `a`: inversions `(a, a+h)` with `h < kn` are as many as those
/// with `u(a) − u(a+h) < kn`.
pub fn height_vs_width_check(u: &AffinePermutation, k: usize) -> bool {
    let n = u.n() as i64;
    let kn = k as i64 * n;
    let inv = u.inverse();
    (1..=n).all(|a| {
        let ua = u.apply(a);
        let by_height = (a + 1..a + kn).filter(|&j| u.apply(j) < ua).count();
        let by_width = (ua - kn + 1..ua).filter(|&v| inv.apply(v) > a).count();
        by_height == by_width
    })
}

/// `{pak_stanley(u, k) : u m-restricted}` for `m = kn + sign`.
pub fn pak_stanley_image(n: usize, k: usize, sign: i8, cap: u64) -> Result<BTreeSet<ParkingFunction>> {
    let m = slope(n, k, sign)?;
    let e = enumerate_m_restricted(n, m, cap)?;
    e.restricted.iter().map(|u| pak_stanley(u, k, m)).collect()
}

/// Labels of all regions, paired with the region's alcove, in enumeration order.
pub fn pak_stanley_labels(n: usize, k: usize, sign: i8, cap: u64) -> Result<Vec<(AffinePermutation, ParkingFunction)>> {
    let m = slope(n, k, sign)?;
    let e = enumerate_m_restricted(n, m, cap)?;
    e.restricted.iter().map(|u| Ok((u.clone(), pak_stanley(u, k, m)?))).collect()
}
