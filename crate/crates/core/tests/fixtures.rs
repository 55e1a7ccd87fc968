use ratpark::daha::{evaluate_b, initial_weight, pf_diagram_of_weight, tableau_of_weight, weight_of_alcove};
use ratpark::finite::{count_finite_m_stable, ps_finite, reconstruct_v1, reconstruct_v2, FinitePermutation};
use ratpark::maps::{anderson, anderson_inverse, area, dinv, invariant_subset_of, ps, sp, zeta};
use ratpark::parking::{enumerate_increasing, enumerate_parking_functions, is_parking_function};
use ratpark::qt_stats::{affine_springer_poincare, hilbert_series, qt_catalan};
use ratpark::shi::pak_stanley_image;
use ratpark::sommers::{enumerate_m_restricted, enumerate_m_stable, omega_m};
use ratpark::sp_invert::invert_sp;
use ratpark::{AffinePermutation, ParkingFunction};

fn p(w: &[i64]) -> AffinePermutation {
    AffinePermutation::from_window(w.len(), w).unwrap()
}

fn pf(n: usize, m: usize, s: &str) -> ParkingFunction {
    ParkingFunction::new(n, m, s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
}

#[test]
fn affine_examples() {
    let w = p(&[-3, 2, 3, 8]);
    assert_eq!(w.apply(5), 1);
    assert_eq!(w.inverse(), p(&[5, 2, 3, 0]));
    assert_eq!(p(&[0, 6, 3, 1]).apply(-2), 2);
    assert_eq!(p(&[4, -2, 3, 5]).inverse(), p(&[0, 6, 3, 1]));
    let heights: Vec<i64> = w.inversions().iter().map(|i| i.height()).collect();
    let mut sorted = heights.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![1, 2, 2, 3, 3, 5]);
    assert_eq!(w.inverse().inversions().len(), 6);
    assert!(p(&[0, 6, 3, 1]).is_m_stable(7));
    assert_eq!(p(&[4, -2, 3, 5]).pi_conjugate(), p(&[2, 5, -1, 4]));
    assert!(w.is_min_length_left_rep());
}

#[test]
fn parking_examples() {
    assert!(is_parking_function(4, 7, &[2, 0, 4, 0]).unwrap());
    assert!(!is_parking_function(4, 5, &[2, 0, 4, 0]).unwrap());
    let d = pf(4, 7, "2040").to_labeled_diagram();
    assert_eq!(d.rows(), &[4, 2, 0, 0]);
    assert_eq!(d.tau(), &[3, 1, 4, 2]);
    assert_eq!(enumerate_parking_functions(5, 3, 1000).unwrap().len(), 81);
    let inc: Vec<String> = enumerate_increasing(5, 3).unwrap().iter().map(|f| f.values().iter().map(|v| v.to_string()).collect()).collect();
    assert_eq!(inc, ["00000", "00001", "00002", "00011", "00012", "00111", "00112"]);
}

#[test]
fn sommers_examples() {
    assert_eq!(omega_m(5, 3).unwrap(), p(&[-3, 0, 3, 6, 9]));
    let e = enumerate_m_restricted(3, 4, 100).unwrap();
    assert_eq!(e.len(), 16);
    assert!(enumerate_m_stable(5, 2, 100).unwrap().contains(&p(&[-1, 2, 5, 3, 6])));
}

#[test]
fn map_examples() {
    let w = p(&[0, 6, 3, 1]);
    assert_eq!(anderson(&w, 7).unwrap(), pf(4, 7, "2040"));
    assert_eq!(anderson_inverse(&pf(4, 7, "2040")), w);
    assert_eq!(anderson(&AffinePermutation::identity(5), 3).unwrap(), pf(5, 3, "01201"));
    assert_eq!(anderson(&omega_m(5, 3).unwrap().inverse(), 3).unwrap(), ParkingFunction::zero(5, 3).unwrap());
    assert_eq!(ps(&w, 7).unwrap(), pf(4, 7, "3011"));
    assert_eq!(zeta(&pf(4, 7, "2040")), pf(4, 7, "3011"));
    assert_eq!(sp(&p(&[0, 3, 6, 2, 4]), 3).unwrap(), pf(5, 3, "01200"));
    assert_eq!(sp(&omega_m(3, 4).unwrap(), 4).unwrap(), pf(3, 4, "012"));
    let w = p(&[2, 0, 3, 6, 4]);
    assert_eq!((area(&w, 2).unwrap(), dinv(&w, 2).unwrap()), (2, 0));
    assert_eq!(invariant_subset_of(&p(&[0, 6, 3, 1]), 7).unwrap().generators(), &[0, 5, 6, 7]);
}

#[test]
fn polynomial_examples() {
    assert_eq!(hilbert_series(5, 2, 100).unwrap().to_string(), "5 + 4*q + 4*t + q^2 + q*t + t^2");
    assert_eq!(qt_catalan(5, 3).unwrap().eval_one(), 7);
    assert_eq!(affine_springer_poincare(5, 2, 100).unwrap().to_string(), "1 + 5*t^2 + 10*t^4");
}

#[test]
fn shi_finite_invert_daha_examples() {
    assert_eq!(pak_stanley_image(3, 1, 1, 100).unwrap().len(), 16);
    assert_eq!(count_finite_m_stable(5, 3), 30);
    let w = FinitePermutation::new(vec![1, 2, 4, 3, 7, 6, 5]).unwrap();
    assert_eq!(ps_finite(&w, 3).unwrap(), vec![0, 0, 1, 0, 2, 1, 0]);
    assert_eq!(reconstruct_v1(&[0, 0, 1, 0, 2, 1, 0], 3).unwrap(), w);
    assert_eq!(reconstruct_v2(&[0, 0, 1, 0, 2, 1, 0], 3).unwrap(), w);
    assert_eq!(invert_sp(&pf(5, 3, "11002"), None).unwrap(), p(&[1, 4, 0, 3, 7]));
    assert_eq!(evaluate_b(&initial_weight(3), 4).unwrap(), vec![-2, 2, 6]);
    let sigma = p(&[-3, 4, 5]);
    let a = weight_of_alcove(&sigma, 4).unwrap();
    assert_eq!(a.to_string(), "(q^(-4/3)*t, q^(5/3)*t^-1, q^(5/3))");
    assert_eq!(evaluate_b(&a, 4).unwrap(), vec![0, 1, 5]);
    assert_eq!(tableau_of_weight(&a, 4).unwrap().positions, vec![(-2, 3), (1, 1), (1, 2)]);
    assert_eq!(pf_diagram_of_weight(&a, 4).unwrap(), vec![1, 1, 0]);
}
