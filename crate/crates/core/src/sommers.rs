use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::parking::{check_coprime, parking_count};

/// `w_m = [m − c, 2m − c, …, nm − c]` with `c = (m−1)(n+1)/2`.
pub fn omega_m(n: usize, m: usize) -> Result<AffinePermutation> {
    check_coprime(n, m)?;
    let (ni, mi) = (n as i64, m as i64);
    // (m-1)(n+1) is even whenever gcd(m, n) = 1
    let c = (mi - 1) * (ni + 1) / 2;
    let w = (1..=ni).map(|k| k * mi - c).collect();
    Ok(AffinePermutation::from_window_unchecked(w))
}

/// Every m-restricted affine permutation of period `n`.
#[derive(Clone, Debug)]
pub struct SommersEnumeration {
    pub n: usize,
    pub m: usize,
    /// Sorted lexicographically by window.
    pub restricted: Vec<AffinePermutation>,
    index: HashMap<AffinePermutation, usize>,
}

impl SommersEnumeration {
    /// Wraps a list that is already known to be the full restricted set.
    pub fn from_parts(n: usize, m: usize, mut restricted: Vec<AffinePermutation>) -> Self {
        restricted.sort_unstable();
        let index = restricted.iter().cloned().enumerate().map(|(k, u)| (u, k)).collect();
        Self { n, m, restricted, index }
    }

    pub fn len(&self) -> usize {
        self.restricted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.restricted.is_empty()
    }

    pub fn index_of(&self, u: &AffinePermutation) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn contains(&self, u: &AffinePermutation) -> bool {
        self.index.contains_key(u)
    }

    /// The m-stable permutations, as inverses of the restricted ones.
    pub fn stable(&self) -> Vec<AffinePermutation> {
        self.restricted.iter().map(AffinePermutation::inverse).collect()
    }
}

/// Breadth-first search from the identity over right multiplication by simple
/// reflections, keeping only m-restricted permutations.
pub fn enumerate_m_restricted(n: usize, m: usize, cap: u64) -> Result<SommersEnumeration> {
    check_coprime(n, m)?;
    let needed = parking_count(n, m).unwrap_or(u64::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    let start = AffinePermutation::identity(n);
    let mut seen: hashbrown::HashSet<AffinePermutation> = hashbrown::HashSet::with_capacity(needed as usize);
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut order = Vec::with_capacity(needed as usize);
    while let Some(u) = queue.pop_front() {
        if n >= 2 {
            for i in 0..n {
                let v = u.right_multiply_simple(i)?;
                if !seen.contains(&v) && v.is_m_restricted(m) {
                    seen.insert(v.clone());
                    queue.push_back(v);
                }
            }
        }
        order.push(u);
        if order.len() as u64 > needed {
            return Err(Error::CapExceeded { needed: order.len() as u64, cap: needed });
        }
    }
    Ok(SommersEnumeration::from_parts(n, m, order))
}

pub fn enumerate_m_stable(n: usize, m: usize, cap: u64) -> Result<Vec<AffinePermutation>> {
    let mut v = enumerate_m_restricted(n, m, cap)?.stable();
    v.sort_unstable();
    Ok(v)
}

/// `true` when `σ(A0)` lies in the m-dilated fundamental alcove: the inverse
/// window is strictly increasing with spread below `mn`.
pub fn in_dilated_alcove(sigma: &AffinePermutation, m: usize) -> bool {
    let inv = sigma.inverse();
    let w = inv.window();
    w.windows(2).all(|p| p[0] < p[1]) && w[w.len() - 1] - w[0] < (m * w.len()) as i64
}
