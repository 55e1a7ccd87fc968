use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use ratpark::maps::{self, anderson, anderson_inverse, ps};
use ratpark::parking::{enumerate_parking_functions, format_values, is_parking_function, parking_count, rational_catalan};
use ratpark::qt_stats::{
    affine_springer_poincare_of, hilbert_series_of, poincare_from_parking_functions, qqinv_closed_form, qt_catalan,
};
use ratpark::sommers::omega_m;
use ratpark::sp_invert::{build_u, extract_omega, sweep_cap, DEFAULT_CAP_PER_N};
use serde::Serialize;

use crate::cache;
use crate::error::CliResult;

pub const SCHEMA_VERSION: u32 = 1;

/// Pairs are coprime with `1 ≤ n, m ≤ max_dim`; each check runs only where `m^{n−1}` is within its limit.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SweepConfig {
    pub max_dim: usize,
    /// Enumeration and counting.
    pub max_cells: u64,
    /// Hilbert series, symmetry, roundtrips, PS image and Poincaré forms.
    pub check_cells: u64,
    /// The SP inverter on every parking function.
    pub invert_cells: u64,
    #[serde(skip)]
    pub use_cache: bool,
    #[serde(skip)]
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { max_dim: 32, max_cells: 1_000_000, check_cells: 100_000, invert_cells: 10_000, use_cache: true, timing: false }
    }
}

pub fn sweep_pairs(cfg: &SweepConfig) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_dim {
        for m in 1..=cfg.max_dim {
            if gcd(n, m) == 1 && parking_count(n, m).is_some_and(|c| c <= cfg.max_cells) {
                out.push((n, m));
            }
        }
    }
    out
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `m = kn ± 1` for some `k ≥ 1`.
pub fn is_shi_slope(n: usize, m: usize) -> bool {
    (m > n && (m - 1).is_multiple_of(n)) || (m + 1).is_multiple_of(n)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CatalanReport {
    pub polynomial: String,
    pub at_one: i128,
    pub expected: u128,
    pub at_one_ok: bool,
    pub symmetric: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub hilbert: String,
    pub hilbert_symmetric: bool,
    pub hilbert_at_one_ok: bool,
    pub qqinv_ok: bool,
    pub anderson_roundtrip_ok: bool,
    pub ps_image_size: u64,
    pub ps_bijective: bool,
    pub poincare: String,
    pub poincare_at_one_ok: bool,
    pub poincare_forms_equal: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InverterReport {
    pub cap: usize,
    pub functions: u64,
    pub periodic: u64,
    pub roundtrip_ok: u64,
    pub not_periodic_at_default_cap: u64,
    pub max_period_start: usize,
    pub gaps_below_start: u64,
    /// Up to ten parking functions that failed, for follow-up.
    pub failures: Vec<String>,
}

impl InverterReport {
    pub fn all_ok(&self) -> bool {
        self.roundtrip_ok == self.functions
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PairReport {
    pub n: usize,
    pub m: usize,
    pub shi_slope: bool,
    pub count: u64,
    pub expected: u64,
    pub count_ok: bool,
    pub sp_omega_m_ok: bool,
    pub catalan: CatalanReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sp_inverter: Option<InverterReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Default, PartialEq, Eq)]
pub struct Summary {
    pub pairs: usize,
    pub count_failures: Vec<(usize, usize)>,
    pub hilbert_asymmetric: Vec<(usize, usize)>,
    pub hilbert_specialization_failures: Vec<(usize, usize)>,
    pub roundtrip_failures: Vec<(usize, usize)>,
    pub ps_not_bijective: Vec<(usize, usize)>,
    pub poincare_mismatches: Vec<(usize, usize)>,
    pub catalan_failures: Vec<(usize, usize)>,
    pub catalan_asymmetric: Vec<(usize, usize)>,
    pub sp_inverter_failures: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub config: SweepConfig,
    pub summary: Summary,
    pub pairs: Vec<PairReport>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn catalan_report(n: usize, m: usize) -> CliResult<CatalanReport> {
    let c = qt_catalan(n, m)?;
    let expected = rational_catalan(n, m);
    let at_one = c.eval_one();
    Ok(CatalanReport {
        polynomial: c.to_string(),
        at_one,
        expected,
        at_one_ok: at_one >= 0 && at_one as u128 == expected,
        symmetric: c.is_symmetric(),
    })
}

fn sp_omega_m_ok(n: usize, m: usize) -> CliResult<bool> {
    let f = maps::sp(&omega_m(n, m)?, m)?;
    Ok((1..=n).all(|k| f.get(k) == m * (k - 1) / n))
}

fn check_report(restricted: &[ratpark::AffinePermutation], n: usize, m: usize) -> CliResult<CheckReport> {
    let count = restricted.len() as u64;
    let stable: Vec<_> = restricted.iter().map(|u| u.inverse()).collect();
    let h = hilbert_series_of(&stable, m)?;
    let mut roundtrip = true;
    let mut images = BTreeSet::new();
    let mut ps_images = BTreeSet::new();
    for w in &stable {
        let f = anderson(w, m)?;
        roundtrip &= anderson_inverse(&f) == *w;
        images.insert(f);
        let p = ps(w, m)?;
        roundtrip &= is_parking_function(n, m, p.values())?;
        ps_images.insert(p);
    }
    let pfs = enumerate_parking_functions(n, m, u64::MAX)?;
    roundtrip &= images.len() as u64 == count && pfs.len() as u64 == count;
    roundtrip &= pfs.iter().all(|f| anderson(&anderson_inverse(f), m).as_ref() == Ok(f));
    let poincare = affine_springer_poincare_of(restricted, m)?;
    let pf_form = poincare_from_parking_functions(n, m, u64::MAX)?;
    Ok(CheckReport {
        hilbert: h.to_string(),
        hilbert_symmetric: h.is_symmetric(),
        hilbert_at_one_ok: h.eval_one() == count as i128,
        qqinv_ok: h.specialize_qqinv() == qqinv_closed_form(n, m),
        anderson_roundtrip_ok: roundtrip,
        ps_image_size: ps_images.len() as u64,
        ps_bijective: ps_images.len() as u64 == count,
        poincare: poincare.to_string(),
        poincare_at_one_ok: poincare.eval_one() == count as i128,
        poincare_forms_equal: poincare == pf_form,
    })
}

/// Runs the inverter on every parking function at `sweep_cap(n, m)`, and notes which
/// ones are still transient at the default cap.
pub fn inverter_report(n: usize, m: usize) -> CliResult<InverterReport> {
    let cap = sweep_cap(n, m);
    let mut r = InverterReport {
        cap,
        functions: 0,
        periodic: 0,
        roundtrip_ok: 0,
        not_periodic_at_default_cap: 0,
        max_period_start: 0,
        gaps_below_start: 0,
        failures: Vec::new(),
    };
    for f in enumerate_parking_functions(n, m, u64::MAX)? {
        r.functions += 1;
        if !build_u(&f, DEFAULT_CAP_PER_N * n)?.is_periodic() {
            r.not_periodic_at_default_cap += 1;
        }
        let table = build_u(&f, cap)?;
        if let Some(start) = table.period_start() {
            r.periodic += 1;
            r.max_period_start = r.max_period_start.max(start);
            r.gaps_below_start += table.gaps_below_start().unwrap_or(0) as u64;
        }
        let ok = extract_omega(&table).is_ok_and(|u| maps::sp(&u, m).as_ref() == Ok(&f));
        if ok {
            r.roundtrip_ok += 1;
        } else if r.failures.len() < 10 {
            r.failures.push(format_values(f.values()));
        }
    }
    Ok(r)
}

pub fn run_pair(n: usize, m: usize, cfg: &SweepConfig) -> CliResult<PairReport> {
    let started = Instant::now();
    let expected = parking_count(n, m).unwrap_or(u64::MAX);
    let e = cache::restricted(n, m, cfg.max_cells, cfg.use_cache)?;
    let count = e.len() as u64;
    let checks = if expected <= cfg.check_cells { Some(check_report(&e.restricted, n, m)?) } else { None };
    drop(e);
    let sp_inverter = if expected <= cfg.invert_cells { Some(inverter_report(n, m)?) } else { None };
    Ok(PairReport {
        n,
        m,
        shi_slope: is_shi_slope(n, m),
        count,
        expected,
        count_ok: count == expected,
        sp_omega_m_ok: sp_omega_m_ok(n, m)?,
        catalan: catalan_report(n, m)?,
        checks,
        sp_inverter,
        elapsed_ms: cfg.timing.then(|| started.elapsed().as_millis() as u64),
    })
}

fn summarize(pairs: &[PairReport]) -> Summary {
    let mut s = Summary { pairs: pairs.len(), ..Summary::default() };
    for p in pairs {
        let key = (p.n, p.m);
        if !p.count_ok {
            s.count_failures.push(key);
        }
        if !p.catalan.at_one_ok {
            s.catalan_failures.push(key);
        }
        if !p.catalan.symmetric {
            s.catalan_asymmetric.push(key);
        }
        if let Some(c) = &p.checks {
            if !c.hilbert_symmetric {
                s.hilbert_asymmetric.push(key);
            }
            if !(c.hilbert_at_one_ok && c.qqinv_ok) {
                s.hilbert_specialization_failures.push(key);
            }
            if !c.anderson_roundtrip_ok {
                s.roundtrip_failures.push(key);
            }
            if !c.ps_bijective {
                s.ps_not_bijective.push(key);
            }
            if !(c.poincare_forms_equal && c.poincare_at_one_ok) {
                s.poincare_mismatches.push(key);
            }
        }
        if p.sp_inverter.as_ref().is_some_and(|r| !r.all_ok()) {
            s.sp_inverter_failures.push(key);
        }
    }
    s
}

/// Fans the pairs out over the rayon pool; the report is ordered by `(n, m)`.
pub fn run_sweep(cfg: &SweepConfig) -> CliResult<SweepReport> {
    let pairs = sweep_pairs(cfg);
    // largest pairs first so the pool does not end on a single long job
    let mut order: Vec<(usize, usize)> = pairs.clone();
    order.sort_by_key(|&(n, m)| std::cmp::Reverse(parking_count(n, m)));
    let mut reports: Vec<PairReport> = order.par_iter().map(|&(n, m)| run_pair(n, m, cfg)).collect::<CliResult<_>>()?;
    reports.sort_by_key(|r| (r.n, r.m));
    Ok(SweepReport { schema_version: SCHEMA_VERSION, config: *cfg, summary: summarize(&reports), pairs: reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_selection() {
        let cfg = SweepConfig { max_dim: 6, max_cells: 100, ..SweepConfig::default() };
        let pairs = sweep_pairs(&cfg);
        assert!(pairs.contains(&(5, 3)));
        assert!(!pairs.contains(&(5, 4)));
        assert!(!pairs.contains(&(4, 6)));
        assert!(pairs.contains(&(1, 6)));
    }

    #[test]
    fn shi_slopes() {
        assert!(is_shi_slope(3, 4));
        assert!(is_shi_slope(3, 2));
        assert!(is_shi_slope(3, 5));
        assert!(!is_shi_slope(5, 3));
        assert!(is_shi_slope(1, 7));
        assert!(is_shi_slope(2, 1));
        assert!(!is_shi_slope(3, 1));
    }

    #[test]
    fn small_sweep_is_clean_and_stable() {
        let cfg = SweepConfig { max_dim: 5, max_cells: 300, use_cache: false, ..SweepConfig::default() };
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.summary.count_failures.is_empty());
        assert!(a.summary.hilbert_asymmetric.is_empty());
        assert!(a.summary.sp_inverter_failures.is_empty());
        let p = a.pairs.iter().find(|p| (p.n, p.m) == (5, 2)).unwrap();
        assert_eq!(p.checks.as_ref().unwrap().hilbert, "5 + 4*q + 4*t + q^2 + q*t + t^2");
        assert!(a.to_json().contains("\"schema_version\": 1"));
        assert!(!a.to_json().contains("elapsed_ms"));
    }
}
