use desitter::solver::{solve, CatenaryProblem};
use desitter::variational::{
    critical_lambda_scan, criticality_score, energy, first_variation, random_basis, DiscreteCurve,
    Perturbation,
};
use desitter::{CaseKind, CurveUV};

const H: f64 = 1e-6;

fn solved(case: CaseKind, lambda: f64) -> DiscreteCurve {
    let p = CatenaryProblem::new(case, lambda, 1.0, 0.0, 0.0, (-0.5, 0.5));
    let r = solve(&p).unwrap();
    DiscreteCurve::from_curve(&r.curve, -0.5, 0.5, 200).unwrap()
}

#[test]
fn solved_catenaries_are_critical() {
    let basis = random_basis(201, 20, 42);
    for (case, lambda) in [(CaseKind::Spherical, 0.0), (CaseKind::Spherical, 0.5), (CaseKind::Intrinsic, 0.0)] {
        let score = criticality_score(&solved(case, lambda), case, lambda, &basis, H).unwrap();
        assert!(score < 1e-4, "{case} lambda={lambda}: {score}");
    }
}

#[test]
fn parallel_is_not_critical() {
    let c = DiscreteCurve::from_curve(&CurveUV::parallel(1.0, (0.0, 1.0)), 0.0, 1.0, 200).unwrap();
    let bump = Perturbation::hat(201, 100, 20, 1.0, 0.0);
    let fv = first_variation(&c, CaseKind::Spherical, 0.0, &bump, H).unwrap();
    assert!(fv.abs() > 1e-2, "{fv}");
    let score = criticality_score(&c, CaseKind::Spherical, 0.0, &random_basis(201, 20, 42), H).unwrap();
    assert!(score > 1e-2);
}

#[test]
fn first_variation_is_affine_in_lambda() {
    let c = DiscreteCurve::from_curve(&CurveUV::parallel(0.8, (0.0, 1.0)), 0.0, 1.0, 64).unwrap();
    let p = Perturbation::hat(65, 30, 10, 1.0, 0.5);
    let f = |l: f64| first_variation(&c, CaseKind::Spherical, l, &p, 1e-5).unwrap();
    let (a, b, m) = (f(0.0), f(1.0), f(0.5));
    assert!((m - 0.5 * (a + b)).abs() < 1e-8);
}

#[test]
fn energy_is_invariant_under_v_translation() {
    let c = solved(CaseKind::Spherical, 0.3);
    let shifted = DiscreteCurve::new(c.t_range, c.nodes.iter().map(|&(u, v)| (u, v + 0.7)).collect()).unwrap();
    for case in [CaseKind::Spherical, CaseKind::Intrinsic] {
        let (a, b) = (energy(&c, case, 0.3).unwrap(), energy(&shifted, case, 0.3).unwrap());
        assert!((a - b).abs() < 1e-13 * a.abs());
    }
}

#[test]
fn energy_quadrature_converges_quadratically() {
    // Spherical meridian u = t on [0.5, 1]: energy = cosh 1 - cosh 0.5.
    let exact = 1.0_f64.cosh() - 0.5_f64.cosh();
    let err = |n: usize| {
        let nodes = (0..=n).map(|i| (0.5 + 0.5 * i as f64 / n as f64, 0.3)).collect();
        let c = DiscreteCurve::new((0.5, 1.0), nodes).unwrap();
        (energy(&c, CaseKind::Spherical, 0.0).unwrap() - exact).abs()
    };
    let ratio = err(32) / err(64);
    assert!((3.8..4.2).contains(&ratio), "ratio {ratio}");
}

#[test]
fn lambda_scan_finds_the_true_multiplier() {
    let c = solved(CaseKind::Spherical, 0.5);
    let basis = random_basis(201, 20, 42);
    let scan = critical_lambda_scan(&c, CaseKind::Spherical, &[0.0, 0.25, 0.5, 0.75], &basis, H).unwrap();
    let best = scan.iter().min_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
    assert_eq!(best.0, 0.5);
    assert!(critical_lambda_scan(&c, CaseKind::Spherical, &[], &basis, H).is_err());
}

#[test]
fn meridian_is_critical_for_intrinsic_distance() {
    // Along a meridian of the intrinsic case the energy is a function of the
    // end points only.
    let c = DiscreteCurve::from_curve(&CurveUV::meridian(0.4, (0.5, 1.5)), 0.5, 1.5, 100).unwrap();
    let basis: Vec<Perturbation> = random_basis(101, 10, 7)
        .into_iter()
        .map(|p| Perturbation::new(p.deltas.iter().map(|&(du, _)| (du, 0.0)).collect()).unwrap())
        .collect();
    let score = criticality_score(&c, CaseKind::Intrinsic, 0.0, &basis, 1e-5).unwrap();
    assert!(score < 1e-8, "{score}");
}

#[test]
fn too_coarse_discretizations_are_rejected() {
    assert!(DiscreteCurve::new((0.0, 1.0), vec![(1.0, 0.0); 5]).is_err());
}
