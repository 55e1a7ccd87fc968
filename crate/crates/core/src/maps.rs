use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::affine::{modn, AffinePermutation};
use crate::error::{Error, Result};
use crate::parking::{check_coprime, format_values, ParkingFunction};

/// `δ = (m−1)(n−1)/2`, the number of boxes under the diagonal.
pub fn delta(n: usize, m: usize) -> usize {
    (m.saturating_sub(1) * n.saturating_sub(1)) / 2
}

fn require_stable(w: &AffinePermutation, m: usize) -> Result<()> {
    check_coprime(w.n(), m)?;
    if !w.is_m_stable(m) {
        return Err(Error::NotStable(w.to_string(), m));
    }
    Ok(())
}

fn require_restricted(u: &AffinePermutation, m: usize) -> Result<()> {
    check_coprime(u.n(), m)?;
    if !u.is_m_restricted(m) {
        return Err(Error::NotRestricted(u.to_string(), m));
    }
    Ok(())
}

/// `m⁻¹ mod n`.
fn inverse_mod(m: usize, n: usize) -> i64 {
    if n == 1 {
        return 0;
    }
    let (n, m) = (n as i64, modn(m as i64, n as i64));
    (1..n).find(|&r| (r * m) % n == 1).expect("m is a unit mod n")
}

/// The Anderson map: `A(α) = k` where `ω⁻¹(α) − M = rm − kn`, `0 ≤ r < n`,
/// `M = min ω⁻¹(1..n)`.
pub fn anderson(w: &AffinePermutation, m: usize) -> Result<ParkingFunction> {
    require_stable(w, m)?;
    Ok(anderson_unchecked(w, m))
}

pub(crate) fn anderson_unchecked(w: &AffinePermutation, m: usize) -> ParkingFunction {
    let n = w.n();
    let inv = w.inverse();
    let lo = *inv.window().iter().min().expect("n > 0");
    let minv = inverse_mod(m, n);
    let (ni, mi) = (n as i64, m as i64);
    let values = inv
        .window()
        .iter()
        .map(|&g| {
            let d = g - lo;
            let r = modn(d * minv, ni);
            ((r * mi - d) / ni) as usize
        })
        .collect();
    ParkingFunction::new_unchecked(n, m, values)
}

/// The unique m-stable `ω` with `anderson(ω) = f`.
pub fn anderson_inverse(f: &ParkingFunction) -> AffinePermutation {
    let (n, m) = (f.n(), f.m());
    let d = f.to_labeled_diagram();
    let (ni, mi) = (n as i64, m as i64);
    let mut inv = alloc::vec![0i64; n];
    for (k, (&len, &label)) in d.rows().iter().zip(d.tau()).enumerate() {
        let row = k as i64 + 1;
        inv[label - 1] = mi * (ni - row) - ni * len as i64;
    }
    let sum: i64 = inv.iter().sum();
    let shift = (ni * (ni + 1) / 2 - sum) / ni;
    for g in &mut inv {
        *g += shift;
    }
    AffinePermutation::from_window_unchecked(inv).inverse()
}

/// `♯{i : ω(i) > α, ω⁻¹(α) − m < i < ω⁻¹(α)}` for `α = 1..n`.
pub fn ps(w: &AffinePermutation, m: usize) -> Result<ParkingFunction> {
    require_stable(w, m)?;
    Ok(ParkingFunction::new_unchecked(w.n(), m, ps_counts(w, m)))
}

/// The PS counts without any stability check.
pub fn ps_counts(w: &AffinePermutation, m: usize) -> Vec<usize> {
    let inv = w.inverse();
    let mi = m as i64;
    inv.window()
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            let alpha = k as i64 + 1;
            (p - mi + 1..p).filter(|&i| w.apply(i) > alpha).count()
        })
        .collect()
}

/// `SP_u(i) = ♯{j > i : 0 < u(i) − u(j) < m}`.
pub fn sp(u: &AffinePermutation, m: usize) -> Result<ParkingFunction> {
    require_restricted(u, m)?;
    Ok(ParkingFunction::new_unchecked(u.n(), m, sp_counts(u, m)))
}

/// `SP_u(x)` for any integer `x`, with no restriction check.
pub fn sp_at(u: &AffinePermutation, m: usize, x: i64) -> usize {
    let ux = u.apply(x);
    let inv = u.inverse();
    (ux - m as i64 + 1..ux).filter(|&v| inv.apply(v) > x).count()
}

pub fn sp_counts(u: &AffinePermutation, m: usize) -> Vec<usize> {
    let inv = u.inverse();
    let mi = m as i64;
    (1..=u.n() as i64)
        .map(|x| {
            let ux = u.apply(x);
            (ux - mi + 1..ux).filter(|&v| inv.apply(v) > x).count()
        })
        .collect()
}

pub fn area(w: &AffinePermutation, m: usize) -> Result<usize> {
    let a = anderson(w, m)?;
    Ok(delta(w.n(), m) - a.sum())
}

/// `♯([min Δ_ω, ∞) ∖ Δ_ω)`, counted per residue class of the n-generators.
pub fn area_by_gaps(w: &AffinePermutation, m: usize) -> Result<usize> {
    Ok(invariant_subset_of(w, m)?.gap_count())
}

pub fn dinv(w: &AffinePermutation, m: usize) -> Result<usize> {
    let p = ps(w, m)?;
    Ok(delta(w.n(), m) - p.sum())
}

/// `PS ∘ A⁻¹`.
pub fn zeta(f: &ParkingFunction) -> ParkingFunction {
    let w = anderson_inverse(f);
    ParkingFunction::new_unchecked(f.n(), f.m(), ps_counts(&w, f.m()))
}

/// A 0-normalized subset of Z≥0 closed under `+m` and `+n`, stored by its n-generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantSubset {
    n: usize,
    m: usize,
    generators: Vec<i64>,
}

impl InvariantSubset {
    pub fn new(n: usize, m: usize, mut generators: Vec<i64>) -> Result<Self> {
        check_coprime(n, m)?;
        if generators.len() != n {
            return Err(Error::WrongLength { expected: n, got: generators.len() });
        }
        generators.sort_unstable();
        if generators[0] != 0 {
            return Err(Error::InvalidSubset("minimum must be 0"));
        }
        let ni = n as i64;
        let mut seen = alloc::vec![false; n];
        for &g in &generators {
            let r = modn(g, ni) as usize;
            if seen[r] {
                return Err(Error::InvalidSubset("generators must be distinct mod n"));
            }
            seen[r] = true;
        }
        let s = Self { n, m, generators };
        if s.generators.iter().any(|&g| !s.contains(g + m as i64)) {
            return Err(Error::InvalidSubset("not closed under +m"));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The n-generators `u_1 < … < u_n`.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn contains(&self, x: i64) -> bool {
        let ni = self.n as i64;
        let r = modn(x, ni);
        self.generators.iter().any(|&g| modn(g, ni) == r && x >= g)
    }

    /// Number of non-negative integers missing from the subset.
    pub fn gap_count(&self) -> usize {
        self.generators.iter().map(|&g| (g / self.n as i64) as usize).sum()
    }
}

/// `R(ω) = Δ_ω − min Δ_ω` with `Δ_ω = {i : ω(i) > 0}`.
pub fn invariant_subset_of(w: &AffinePermutation, m: usize) -> Result<InvariantSubset> {
    require_stable(w, m)?;
    let inv = w.inverse();
    let lo = *inv.window().iter().min().expect("n > 0");
    let mut gens: Vec<i64> = inv.window().iter().map(|&g| g - lo).collect();
    gens.sort_unstable();
    Ok(InvariantSubset { n: w.n(), m, generators: gens })
}

/// The minimal length right coset representative `ω` with `R(ω) = Δ`.
pub fn minl_from_subset(d: &InvariantSubset) -> AffinePermutation {
    let ni = d.n as i64;
    let sum: i64 = d.generators.iter().sum();
    let shift = (ni * (ni + 1) / 2 - sum) / ni;
    let inv = d.generators.iter().map(|&g| g + shift).collect();
    AffinePermutation::from_window_unchecked(inv).inverse()
}

/// `D(Δ) = P(A(R̂⁻¹(Δ)))`, as row lengths.
pub fn d_map(d: &InvariantSubset) -> Vec<usize> {
    anderson_unchecked(&minl_from_subset(d), d.m).diagram()
}

/// `G_Δ(α) = ♯([u_α, u_α + m] ∖ Δ)`.
pub fn g_map(d: &InvariantSubset) -> Vec<usize> {
    let mi = d.m as i64;
    d.generators.iter().map(|&u| (u..=u + mi).filter(|&x| !d.contains(x)).count()).collect()
}

/// All invariant subsets for `(n, m)`, sorted by generators.
///
/// Walking the residues along `0, m, 2m, … (mod n)`, the generator of the class
/// `km mod n` is `km − n·a_k` for a weakly increasing `a` with `a_k ≤ km/n`.
pub fn enumerate_invariant_subsets(n: usize, m: usize) -> Result<Vec<InvariantSubset>> {
    check_coprime(n, m)?;
    let mut out = Vec::new();
    let mut a = Vec::with_capacity(n);
    fn rec(n: usize, m: usize, a: &mut Vec<usize>, out: &mut Vec<InvariantSubset>) {
        let k = a.len();
        if k == n {
            let mut gens: Vec<i64> =
                a.iter().enumerate().map(|(k, &ak)| (k * m) as i64 - (n * ak) as i64).collect();
            gens.sort_unstable();
            out.push(InvariantSubset { n, m, generators: gens });
            return;
        }
        let lo = a.last().copied().unwrap_or(0);
        for v in lo..=k * m / n {
            a.push(v);
            rec(n, m, a, out);
            a.pop();
        }
    }
    rec(n, m, &mut a, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// One row of the statistics table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatisticsRow {
    pub omega: AffinePermutation,
    pub inverse: AffinePermutation,
    pub anderson: ParkingFunction,
    pub area: usize,
    pub ps: ParkingFunction,
    pub dinv: usize,
}

impl StatisticsRow {
    pub fn new(w: &AffinePermutation, m: usize) -> Result<Self> {
        let a = anderson(w, m)?;
        let p = ps(w, m)?;
        let d = delta(w.n(), m);
        Ok(Self {
            omega: w.clone(),
            inverse: w.inverse(),
            area: d - a.sum(),
            dinv: d - p.sum(),
            anderson: a,
            ps: p,
        })
    }

    /// `ω ⇥ ω⁻¹ ⇥ A ⇥ area ⇥ PS ⇥ dinv`, without a line terminator.
    pub fn to_tsv(&self) -> String {
        alloc::format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.omega,
            self.inverse,
            format_values(self.anderson.values()),
            self.area,
            format_values(self.ps.values()),
            self.dinv
        )
    }
}

/// Table rows for every m-stable permutation: non-finite ones first, then those
/// in `S_n`, each block sorted by window.
pub fn statistics_table(stable: &[AffinePermutation], m: usize) -> Result<Vec<StatisticsRow>> {
    let mut ws = stable.to_vec();
    ws.sort_by(|a, b| a.is_finite().cmp(&b.is_finite()).then_with(|| a.cmp(b)));
    ws.iter().map(|w| StatisticsRow::new(w, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::enumerate_parking_functions;
    use crate::sommers::{enumerate_m_restricted, enumerate_m_stable, omega_m};
    use alloc::vec;
    use hashbrown::HashSet;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn p(w: &[i64]) -> AffinePermutation {
        AffinePermutation::from_window(w.len(), w).unwrap()
    }

    fn pf(n: usize, m: usize, v: &[usize]) -> ParkingFunction {
        ParkingFunction::new(n, m, v.to_vec()).unwrap()
    }

    #[test]
    fn anderson_examples() {
        assert_eq!(anderson(&p(&[0, 6, 3, 1]), 7).unwrap().values(), &[2, 0, 4, 0]);
        for (n, m) in [(3, 4), (5, 3), (4, 7), (5, 2)] {
            let w = omega_m(n, m).unwrap().inverse();
            assert_eq!(anderson(&w, m).unwrap(), ParkingFunction::zero(n, m).unwrap());
            assert_eq!(anderson_inverse(&ParkingFunction::zero(n, m).unwrap()), w);
        }
        assert_eq!(anderson(&AffinePermutation::identity(5), 3).unwrap().values(), &[0, 1, 2, 0, 1]);
        assert_eq!(anderson_inverse(&pf(4, 7, &[2, 0, 4, 0])), p(&[0, 6, 3, 1]));
        assert!(matches!(anderson(&p(&[0, 6, 3, 1]), 3), Err(Error::NotStable(..))));
    }

    #[test]
    fn anderson_roundtrip_exhaustive() {
        for (n, m) in [(5, 3), (3, 5), (4, 7), (3, 4), (5, 2), (6, 5), (2, 9)] {
            let pfs = enumerate_parking_functions(n, m, u64::MAX).unwrap();
            let stable = enumerate_m_stable(n, m, u64::MAX).unwrap();
            let set: HashSet<_> = stable.iter().cloned().collect();
            for f in &pfs {
                let w = anderson_inverse(f);
                assert!(set.contains(&w), "{w} for {f}");
                assert_eq!(&anderson(&w, m).unwrap(), f);
            }
            for w in &stable {
                assert_eq!(&anderson_inverse(&anderson(w, m).unwrap()), w);
            }
        }
    }

    #[test]
    fn ps_and_sp_examples() {
        assert_eq!(ps(&p(&[0, 6, 3, 1]), 7).unwrap().values(), &[3, 0, 1, 1]);
        assert_eq!(sp(&p(&[0, 3, 6, 2, 4]), 3).unwrap().values(), &[0, 1, 2, 0, 0]);
        assert_eq!(sp(&omega_m(3, 4).unwrap(), 4).unwrap().values(), &[0, 1, 2]);
        assert_eq!(sp(&p(&[1, 5, 0]), 4).unwrap().values(), &[1, 2, 0]);
        assert_eq!(sp(&p(&[1, 0, 5]), 4).unwrap().values(), &[1, 0, 2]);
        assert_eq!(sp(&p(&[0, 1, 5]), 4).unwrap().values(), &[0, 0, 2]);
        let u = p(&[4, -2, 3, 5]);
        assert_eq!(sp(&u.pi_conjugate(), 7).unwrap().values(), &[1, 3, 0, 1]);
        assert!(matches!(sp(&p(&[0, 6, 3, 1]), 3), Err(Error::NotRestricted(..))));
    }

    #[test]
    fn sp_of_omega_m_is_floor_formula() {
        for (n, m) in [(3, 4), (5, 3), (7, 3), (4, 9), (6, 7)] {
            let s = sp(&omega_m(n, m).unwrap(), m).unwrap();
            let expect: Vec<usize> = (1..=n).map(|k| m * (k - 1) / n).collect();
            assert_eq!(s.values(), &expect[..]);
        }
    }

    #[test]
    fn area_dinv_examples() {
        for (n, m) in [(3, 4), (5, 3), (5, 2), (4, 7)] {
            let id = AffinePermutation::identity(n);
            assert_eq!(area(&id, m).unwrap(), 0);
            assert_eq!(dinv(&id, m).unwrap(), delta(n, m));
            let w = omega_m(n, m).unwrap().inverse();
            assert_eq!(area(&w, m).unwrap(), delta(n, m));
            assert_eq!(dinv(&w, m).unwrap(), 0);
        }
        let w = p(&[2, 0, 3, 6, 4]);
        assert_eq!(area(&w, 2).unwrap(), 2);
        assert_eq!(dinv(&w, 2).unwrap(), 0);
    }

    #[test]
    fn five_two_table() {
        let stable = enumerate_m_stable(5, 2, 100).unwrap();
        let rows: Vec<String> = statistics_table(&stable, 2).unwrap().iter().map(|r| r.to_tsv()).collect();
        let expect = [
            "[-1,2,5,3,6]\t[0,2,4,6,3]\t0,0,0,0,1\t1\t0,0,1,1,0\t0",
            "[0,2,3,4,6]\t[0,2,3,4,6]\t0,0,1,0,0\t1\t0,0,0,0,1\t1",
            "[0,2,4,3,6]\t[0,2,4,3,6]\t0,0,0,1,0\t1\t0,0,1,0,1\t0",
            "[0,3,1,4,7]\t[3,0,2,4,6]\t1,0,0,0,0\t1\t1,0,0,0,1\t0",
            "[0,3,2,4,6]\t[0,3,2,4,6]\t0,1,0,0,0\t1\t0,1,0,0,1\t0",
            "[2,0,3,6,4]\t[-1,1,3,5,7]\t0,0,0,0,0\t2\t0,0,0,1,1\t0",
            "[1,2,3,4,5]\t[1,2,3,4,5]\t0,1,0,1,0\t0\t0,0,0,0,0\t2",
            "[1,2,3,5,4]\t[1,2,3,5,4]\t0,1,0,0,1\t0\t0,0,0,1,0\t1",
            "[1,2,4,3,5]\t[1,2,4,3,5]\t0,1,1,0,0\t0\t0,0,1,0,0\t1",
            "[1,3,2,4,5]\t[1,3,2,4,5]\t0,0,1,1,0\t0\t0,1,0,0,0\t1",
            "[1,3,2,5,4]\t[1,3,2,5,4]\t0,0,1,0,1\t0\t0,1,0,1,0\t0",
            "[1,4,2,5,3]\t[1,3,5,2,4]\t0,0,0,1,1\t0\t0,1,1,0,0\t0",
            "[2,1,3,4,5]\t[2,1,3,4,5]\t1,0,0,1,0\t0\t1,0,0,0,0\t1",
            "[2,1,3,5,4]\t[2,1,3,5,4]\t1,0,0,0,1\t0\t1,0,0,1,0\t0",
            "[2,1,4,3,5]\t[2,1,4,3,5]\t1,0,1,0,0\t0\t1,0,1,0,0\t0",
            "[3,1,4,2,5]\t[2,4,1,3,5]\t1,1,0,0,0\t0\t1,1,0,0,0\t0",
        ];
        assert_eq!(rows, expect);
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(&pf(4, 7, &[2, 0, 4, 0])).values(), &[3, 0, 1, 1]);
        for (n, m) in [(3, 4), (5, 3)] {
            let z = zeta(&ParkingFunction::zero(n, m).unwrap());
            assert_eq!(z, sp(&omega_m(n, m).unwrap(), m).unwrap());
        }
        for n in 1..=4 {
            let pfs = enumerate_parking_functions(n, n + 1, u64::MAX).unwrap();
            let image: HashSet<_> = pfs.iter().map(zeta).collect();
            assert_eq!(image.len(), pfs.len());
        }
    }

    #[test]
    fn invariant_subset_examples() {
        let d = invariant_subset_of(&p(&[0, 6, 3, 1]), 7).unwrap();
        assert_eq!(d.generators(), &[0, 5, 6, 7]);
        let d = invariant_subset_of(&AffinePermutation::identity(4), 7).unwrap();
        assert_eq!(d.generators(), &[0, 1, 2, 3]);
        assert_eq!(d.gap_count(), 0);
        assert!(InvariantSubset::new(3, 2, vec![0, 2, 4]).is_ok());
        assert!(InvariantSubset::new(3, 2, vec![0, 4, 5]).is_err());
        assert!(InvariantSubset::new(3, 2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn r_hat_roundtrip() {
        for (n, m) in [(3, 4), (4, 3), (5, 3), (4, 7)] {
            let minl: Vec<_> = enumerate_m_stable(n, m, u64::MAX)
                .unwrap()
                .into_iter()
                .filter(|w| w.is_min_length_right_rep())
                .collect();
            let subsets = enumerate_invariant_subsets(n, m).unwrap();
            assert_eq!(minl.len(), subsets.len());
            for w in &minl {
                let d = invariant_subset_of(w, m).unwrap();
                assert_eq!(&minl_from_subset(&d), w);
                assert!(subsets.contains(&d));
            }
        }
    }

    /// Brute-force invariant subsets: every generator tuple under the semigroup bound.
    fn brute_subsets(n: usize, m: usize) -> Vec<InvariantSubset> {
        let ni = n as i64;
        let bounds: Vec<i64> = (0..ni)
            .map(|r| (0..ni).map(|k| k * m as i64).find(|&v| v % ni == r).unwrap())
            .collect();
        let mut out = Vec::new();
        let mut cur: Vec<i64> = (0..ni).collect();
        loop {
            if let Ok(d) = InvariantSubset::new(n, m, cur.clone()) {
                out.push(d);
            }
            let mut k = 0;
            loop {
                if k == n {
                    out.sort();
                    return out;
                }
                if cur[k] + ni <= bounds[k] {
                    cur[k] += ni;
                    break;
                }
                cur[k] = k as i64;
                k += 1;
            }
        }
    }

    #[test]
    fn subset_enumeration_matches_brute_force() {
        for (n, m) in [(3, 2), (3, 4), (4, 3), (5, 3), (4, 7), (5, 7), (6, 5)] {
            assert_eq!(enumerate_invariant_subsets(n, m).unwrap(), brute_subsets(n, m), "({n},{m})");
        }
    }

    #[test]
    fn d_and_g_for_two_three() {
        let subsets = enumerate_invariant_subsets(3, 2).unwrap();
        assert_eq!(subsets.len(), 2);
        let pairs: Vec<(usize, usize)> = subsets
            .iter()
            .map(|d| (d_map(d).iter().sum(), g_map(d).iter().sum()))
            .collect();
        assert_eq!(pairs, vec![(1, 0), (0, 1)]);
    }

    #[test]
    fn g_map_through_star() {
        for (n, m) in [(3, 4), (4, 3), (5, 3), (4, 5)] {
            for w in enumerate_m_stable(n, m, u64::MAX).unwrap() {
                if !w.is_min_length_right_rep() {
                    continue;
                }
                let d = invariant_subset_of(&w, m).unwrap();
                let g = g_map(&d);
                let ps_star = ps(&w.star(), m).unwrap();
                for alpha in 1..=n {
                    assert_eq!(g[alpha - 1], ps_star.get(n + 1 - alpha));
                }
                assert_eq!(d_map(&d), anderson(&w, m).unwrap().diagram());
                let mut gd = g.clone();
                gd.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(gd, ps_star.diagram());
            }
        }
    }

    #[test]
    fn statistics_agree_and_ps_is_parking() {
        for n in 1..=5usize {
            for m in 1..=9usize {
                if n.gcd(&m) != 1 {
                    continue;
                }
                for w in enumerate_m_stable(n, m, u64::MAX).unwrap() {
                    assert_eq!(area(&w, m).unwrap(), area_by_gaps(&w, m).unwrap());
                    assert_eq!(area(&w, m).unwrap() == 0, w.is_finite());
                    let counts = ps_counts(&w, m);
                    assert!(crate::parking::is_parking_function(n, m, &counts).unwrap());
                    assert_eq!(sp_counts(&w.inverse(), m), counts);
                }
            }
        }
    }

    #[test]
    fn ps_bijective_for_kn_pm_one() {
        for (n, m) in [(3, 2), (3, 4), (3, 5), (3, 7), (4, 3), (4, 5), (5, 4), (5, 6), (4, 9)] {
            let stable = enumerate_m_stable(n, m, u64::MAX).unwrap();
            let image: HashSet<_> = stable.iter().map(|w| ps_counts(w, m)).collect();
            assert_eq!(image.len(), stable.len(), "({n},{m})");
        }
    }

    fn finite_perms(n: usize) -> Vec<Vec<usize>> {
        let mut v: Vec<usize> = (1..=n).collect();
        let mut out = vec![v.clone()];
        while crate::parking::next_permutation(&mut v) {
            out.push(v.clone());
        }
        out
    }

    #[test]
    fn anderson_symmetry() {
        for (n, m) in [(3, 4), (4, 3), (4, 5), (5, 3)] {
            let e = enumerate_m_restricted(n, m, u64::MAX).unwrap();
            for u in &e.restricted {
                let w = u.inverse();
                let a = anderson(&w, m).unwrap();
                for v in finite_perms(n) {
                    let vv: Vec<i64> = v.iter().map(|&x| x as i64).collect();
                    let vp = AffinePermutation::from_window(n, &vv).unwrap();
                    if !u.compose(&vp).unwrap().is_m_restricted(m) {
                        continue;
                    }
                    let lhs = anderson(&vp.inverse().compose(&w).unwrap(), m).unwrap();
                    assert_eq!(lhs, a.permute(&v));
                }
            }
        }
    }

    #[test]
    fn monotonicity_and_local_moves() {
        for (n, m) in [(3, 4), (4, 3), (4, 5), (5, 3), (5, 7), (3, 8)] {
            let e = enumerate_m_restricted(n, m, u64::MAX).unwrap();
            let ni = n as i64;
            let mi = m as i64;
            for u in &e.restricted {
                let s = sp_counts(u, m);
                let at = |x: i64| s[modn(x - 1, ni) as usize];
                for i in 1..=ni {
                    assert_eq!(sp_at(u, m, i), at(i));
                    assert_eq!(u.apply(i) < u.apply(i + 1), at(i) <= at(i + 1));
                    for j in i + 1..i + 3 * ni {
                        if u.apply(i) > u.apply(j) {
                            assert!(at(i) > at(j));
                        }
                    }
                    for j in 1..=ni {
                        if at(i) == at(j) {
                            assert!((u.apply(i) - u.apply(j)).abs() < ni);
                        }
                    }
                }
                for i in 0..n {
                    let gap = u.apply(i as i64) - u.apply(i as i64 + 1);
                    if gap <= 0 || gap == mi {
                        continue;
                    }
                    let v = u.right_multiply_simple(i).unwrap();
                    let ii = if i == 0 { ni } else { i as i64 };
                    let sv = |x: i64| sp_at(&v, m, x);
                    assert_eq!(sv(ii), at(ii + 1));
                    if gap < mi {
                        assert_eq!(sv(ii + 1), at(ii) - 1);
                    } else {
                        assert_eq!(sv(ii + 1), at(ii));
                    }
                    for j in 1..=ni {
                        let r = modn(j - ii, ni);
                        if r != 0 && r != 1 {
                            assert_eq!(sv(j), at(j));
                        }
                    }
                }
                let c = sp_counts(&u.pi_conjugate(), m);
                for i in 0..n {
                    assert_eq!(c[(i + 1) % n], s[i]);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn anderson_roundtrip_random(n in 2usize..8, m in 2usize..12, seed in proptest::collection::vec(0usize..100, 8)) {
            prop_assume!(n.gcd(&m) == 1);
            // a random increasing pf pushed through a random arrangement
            let mut inc = Vec::with_capacity(n);
            for i in 0..n {
                let lo = inc.last().copied().unwrap_or(0);
                let hi = i * m / n;
                inc.push(lo + seed[i] % (hi - lo + 1));
            }
            let mut vals = inc.clone();
            let k = seed[7] % n;
            vals.rotate_left(k);
            let f = ParkingFunction::new(n, m, vals).unwrap();
            let w = anderson_inverse(&f);
            prop_assert!(w.is_m_stable(m));
            prop_assert_eq!(anderson(&w, m).unwrap(), f);
        }
    }
}
