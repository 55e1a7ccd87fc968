use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use crate::affine::AffinePermutation;
use crate::error::Result;
use crate::maps::{self, delta, d_map, enumerate_invariant_subsets, g_map};
use crate::parking::{enumerate_parking_functions, ParkingFunction};

/// A sparse Laurent polynomial in `q` and `t` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QtPolynomial {
    terms: BTreeMap<(i64, i64), i64>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, qdeg: i64, tdeg: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, qdeg, tdeg);
        p
    }

    /// A polynomial in `t` alone from its coefficient list `[c_0, c_1, …]`.
    pub fn from_t_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(c, 0, k as i64);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i64, qdeg: i64, tdeg: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry((qdeg, tdeg)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&(qdeg, tdeg));
        }
    }

    pub fn coeff(&self, qdeg: i64, tdeg: i64) -> i64 {
        self.terms.get(&(qdeg, tdeg)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `((qdeg, tdeg), coeff)` pairs in storage order.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Value at `q = t = 1`.
    pub fn eval_one(&self) -> i128 {
        self.terms.values().map(|&c| c as i128).sum()
    }

    /// `p(t, q)`.
    pub fn swap_qt(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), &c)| ((b, a), c)).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(a, b), &c)| self.coeff(b, a) == c)
    }

    /// `p(q, q⁻¹)`, as a polynomial in `q` alone.
    pub fn specialize_qqinv(&self) -> Self {
        let mut p = Self::zero();
        for (&(a, b), &c) in &self.terms {
            p.add_term(c, a - b, 0);
        }
        p
    }

    /// `p(q, 1)` as a polynomial in `q`.
    pub fn specialize_t_one(&self) -> Self {
        let mut p = Self::zero();
        for (&(a, _), &c) in &self.terms {
            p.add_term(c, a, 0);
        }
        p
    }

    /// `p(1, t)` as a polynomial in `t`.
    pub fn specialize_q_one(&self) -> Self {
        let mut p = Self::zero();
        for (&(_, b), &c) in &self.terms {
            p.add_term(c, 0, b);
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl AddAssign<&QtPolynomial> for QtPolynomial {
    fn add_assign(&mut self, rhs: &QtPolynomial) {
        for (&(a, b), &c) in &rhs.terms {
            self.add_term(c, a, b);
        }
    }
}

impl Add for QtPolynomial {
    type Output = QtPolynomial;

    fn add(mut self, rhs: QtPolynomial) -> QtPolynomial {
        self += &rhs;
        self
    }
}

impl Mul for &QtPolynomial {
    type Output = QtPolynomial;

    fn mul(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut p = QtPolynomial::zero();
        for (&(a, b), &c) in &self.terms {
            for (&(x, y), &d) in &rhs.terms {
                p.add_term(c * d, a + x, b + y);
            }
        }
        p
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, var: &str, deg: i64) -> fmt::Result {
    if deg == 1 {
        f.write_str(var)
    } else {
        write!(f, "{var}^{deg}")
    }
}

/// Terms by ascending total degree, ties by descending `q` degree:
/// `5 + 4*q + 4*t + q^2 + q*t + t^2`.
impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<(i64, i64)> = self.terms.keys().copied().collect();
        keys.sort_by(|&(a, b), &(x, y)| (a + b).cmp(&(x + y)).then(x.cmp(&a)));
        for (k, &(a, b)) in keys.iter().enumerate() {
            let c = self.terms[&(a, b)];
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            let abs = c.unsigned_abs();
            let constant = a == 0 && b == 0;
            if constant {
                write!(f, "{abs}")?;
                continue;
            }
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            if a != 0 {
                write_var(f, "q", a)?;
                if b != 0 {
                    f.write_str("*")?;
                }
            }
            if b != 0 {
                write_var(f, "t", b)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(area, dinv)` of one m-stable permutation.
pub fn hilbert_term(w: &AffinePermutation, m: usize) -> Result<(usize, usize)> {
    Ok((maps::area(w, m)?, maps::dinv(w, m)?))
}

/// `Σ q^area t^dinv` over the given m-stable permutations.
pub fn hilbert_series_of(stable: &[AffinePermutation], m: usize) -> Result<QtPolynomial> {
    let mut p = QtPolynomial::zero();
    for w in stable {
        let (a, d) = hilbert_term(w, m)?;
        p.add_term(1, a as i64, d as i64);
    }
    Ok(p)
}

pub fn hilbert_series(n: usize, m: usize, cap: u64) -> Result<QtPolynomial> {
    let stable = crate::sommers::enumerate_m_stable(n, m, cap)?;
    hilbert_series_of(&stable, m)
}

pub fn check_symmetry(p: &QtPolynomial) -> bool {
    p.is_symmetric()
}

/// `q^{−δ} (1 + q + … + q^{m−1})^{n−1}`.
pub fn qqinv_closed_form(n: usize, m: usize) -> QtPolynomial {
    let mut geo = QtPolynomial::zero();
    for k in 0..m as i64 {
        geo.add_term(1, k, 0);
    }
    let shift = QtPolynomial::monomial(1, -(delta(n, m) as i64), 0);
    &shift * &geo.pow(n.saturating_sub(1) as u32)
}

/// `c_{m,n}(q,t) = Σ_Δ q^{δ−|D(Δ)|} t^{δ−|G(Δ)|}`.
pub fn qt_catalan(n: usize, m: usize) -> Result<QtPolynomial> {
    let d = delta(n, m) as i64;
    let mut p = QtPolynomial::zero();
    for s in enumerate_invariant_subsets(n, m)? {
        let dd: usize = d_map(&s).iter().sum();
        let gg: usize = g_map(&s).iter().sum();
        p.add_term(1, d - dd as i64, d - gg as i64);
    }
    Ok(p)
}

/// `Σ q^area t^bounce` over Dyck paths of semilength `n`.
pub fn dyck_oracle(n: usize) -> QtPolynomial {
    let mut p = QtPolynomial::zero();
    let mut steps = Vec::with_capacity(2 * n);
    fn rec(n: usize, ups: usize, rights: usize, steps: &mut Vec<bool>, p: &mut QtPolynomial) {
        if ups == n && rights == n {
            p.add_term(1, dyck_area(steps) as i64, dyck_bounce(steps) as i64);
            return;
        }
        if ups < n {
            steps.push(true);
            rec(n, ups + 1, rights, steps, p);
            steps.pop();
        }
        if rights < ups {
            steps.push(false);
            rec(n, ups, rights + 1, steps, p);
            steps.pop();
        }
    }
    rec(n, 0, 0, &mut steps, &mut p);
    p
}

/// Full cells between a Dyck path (`true` = north, `false` = east) and the diagonal.
pub fn dyck_area(steps: &[bool]) -> usize {
    let mut east = 0usize;
    let mut row = 0usize;
    let mut total = 0usize;
    for &s in steps {
        if s {
            total += row - east;
            row += 1;
        } else {
            east += 1;
        }
    }
    total
}

/// Bounce statistic: sum of `n − j` over the diagonal touch points `j` of the bounce path.
pub fn dyck_bounce(steps: &[bool]) -> usize {
    let n = steps.len() / 2;
    if n == 0 {
        return 0;
    }
    // top[j] = number of north steps before the (j+1)-th east step
    let mut top = Vec::with_capacity(n);
    let mut north = 0usize;
    for &s in steps {
        if s {
            north += 1;
        } else {
            top.push(north);
        }
    }
    let mut j = 0usize;
    let mut total = 0usize;
    loop {
        j = top[j];
        if j >= n {
            return total;
        }
        total += n - j;
    }
}

/// `Σ t^{2 Σ SP_u}` over the given m-restricted permutations.
pub fn affine_springer_poincare_of(restricted: &[AffinePermutation], m: usize) -> Result<QtPolynomial> {
    let mut p = QtPolynomial::zero();
    for u in restricted {
        let s = maps::sp(u, m)?.sum();
        p.add_term(1, 0, 2 * s as i64);
    }
    Ok(p)
}

pub fn affine_springer_poincare(n: usize, m: usize, cap: u64) -> Result<QtPolynomial> {
    let e = crate::sommers::enumerate_m_restricted(n, m, cap)?;
    affine_springer_poincare_of(&e.restricted, m)
}

/// `Σ t^{2 Σ f}` over all parking functions.
pub fn poincare_from_parking_functions(n: usize, m: usize, cap: u64) -> Result<QtPolynomial> {
    let mut p = QtPolynomial::zero();
    for f in enumerate_parking_functions(n, m, cap)? {
        p.add_term(1, 0, 2 * f.sum() as i64);
    }
    Ok(p)
}

/// `Σ t^{Σ f}` marginal of a list of parking functions.
pub fn sum_marginal<'a>(fs: impl IntoIterator<Item = &'a ParkingFunction>) -> QtPolynomial {
    let mut p = QtPolynomial::zero();
    for f in fs {
        p.add_term(1, 0, f.sum() as i64);
    }
    p
}
