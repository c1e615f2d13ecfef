mod common;

use sqg::exact::{lookup_sample, Sample};
use sqg::integrator::{simulate, SolverError, SolverParams};
use sqg::spectral::{GridSpec, PhysicalField};
use sqg::verify::{max_relative_error, pattern_correlation, solver_vs_exact};

#[test]
fn exact_solutions_across_parameters() {
    let g = GridSpec::square(32).unwrap();
    for name in ["theta1", "theta3"] {
        let Some(Sample::Exact(sol)) = lookup_sample(name, 0.0, 0.0) else {
            panic!()
        };
        for (kappa, alpha) in [(0.001, 0.0), (0.5, 0.25), (1.0, 0.75)] {
            let p = SolverParams::new(kappa, alpha, 0.01, 2.0).with_snapshots(vec![0.5, 1.0, 1.5]);
            let e = max_relative_error(&solver_vs_exact(&sol, &p, g).unwrap());
            assert!(e < 1e-10, "{name} kappa={kappa} alpha={alpha}: {e}");
        }
    }
}

#[test]
fn mean_is_conserved_and_l2_does_not_grow() {
    let Some(datum) = lookup_sample("con-3", 0.01, 0.4) else {
        panic!()
    };
    let g = GridSpec::square(32).unwrap();
    let f = datum.initial_field(g);
    let shifted = PhysicalField::new(g, f.values().iter().map(|v| v + 0.75).collect()).unwrap();
    let p = SolverParams::new(0.01, 0.4, 0.01, 2.0).with_snapshots((1..20).map(|i| i as f64 * 0.1).collect());
    let traj = simulate(&shifted, &p).unwrap();
    for s in &traj.snapshots {
        assert!((s.mean - 0.75).abs() < 1e-13, "t={} mean={}", s.t, s.mean);
    }
    for w in traj.snapshots.windows(2) {
        assert!(
            w[1].l2 <= w[0].l2 + 1e-10,
            "L2 grew between t={} and t={}",
            w[0].t,
            w[1].t
        );
    }
}

#[test]
fn mixed_eigenvalues_change_shape_at_high_resolution() {
    let Some(datum) = lookup_sample("con-1", 0.001, 0.4) else {
        panic!()
    };
    let g = GridSpec::square(256).unwrap();
    let f = datum.initial_field(g);
    let traj = simulate(&f, &SolverParams::new(0.001, 0.4, 0.004, 2.0)).unwrap();
    assert!(pattern_correlation(&traj.last().field, &f).unwrap() < 0.999);
}

#[test]
fn oversized_step_is_rejected_before_stepping() {
    let Some(datum) = lookup_sample("con-1", 0.001, 0.4) else {
        panic!()
    };
    let f = datum.initial_field(GridSpec::square(64).unwrap());
    match simulate(&f, &SolverParams::new(0.001, 0.4, 0.1, 1.0)) {
        Err(SolverError::CflViolation { t, .. }) => assert_eq!(t, 0.0),
        other => panic!("expected CFL violation, got {other:?}"),
    }
}
