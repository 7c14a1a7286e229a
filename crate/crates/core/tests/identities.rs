use num_complex::Complex64 as C64;
use sfkit::identities::{
    evaluate_identity, evaluate_identity_with, lookup, registry, sample_params, sample_params_in, str_mb_shift_image,
    ComplexMbParams, EvalOptions, EvalSpec, IdentityKind, Params, TOL_ELLIPTIC, TOL_HYPERBOLIC, TOL_MB, TOL_PLANE,
};
use sfkit::numerics::{HalfInt, Sector};
use sfkit::Error;

fn check(id: &str, seed: u64) -> f64 {
    let p = sample_params(id, seed).unwrap();
    let r = evaluate_identity(id, &p, &EvalSpec::default()).unwrap();
    assert!(r.pass, "{id}#{seed}: residual {:.3e} > {:.1e}", r.rel_residual, r.tolerance);
    r.rel_residual
}

#[test]
fn registry_ids_are_unique_and_stable() {
    let ids: Vec<&str> = registry().iter().map(|d| d.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    assert_eq!(ids.len(), 24);
    for id in ["hyperbolic_beta", "complex_beta", "complex_plane_str", "elliptic_beta", "v_trafo_3"] {
        assert!(ids.contains(&id));
    }
    assert!(matches!(lookup("nope"), Err(Error::UnknownIdentity(_))));
}

#[test]
fn tolerance_ladder() {
    for d in registry() {
        let want = match d.kind {
            IdentityKind::HyperbolicLine => TOL_HYPERBOLIC,
            IdentityKind::ComplexMb => TOL_MB,
            IdentityKind::ComplexPlane => TOL_PLANE,
            IdentityKind::EllipticCircle => TOL_ELLIPTIC,
        };
        assert_eq!(d.tolerance, want, "{}", d.id);
    }
}

#[test]
fn sampling_is_deterministic() {
    for d in registry() {
        let a = sample_params(d.id, 7).unwrap();
        let b = sample_params(d.id, 7).unwrap();
        assert_eq!(a.to_string(), b.to_string(), "{}", d.id);
        assert_ne!(a.to_string(), sample_params(d.id, 8).unwrap().to_string(), "{}", d.id);
    }
}

#[test]
fn evaluation_is_deterministic() {
    for id in ["complex_beta", "hyperbolic_trafo_I", "complex_plane_beta"] {
        let p = sample_params(id, 2).unwrap();
        let a = evaluate_identity(id, &p, &EvalSpec::default()).unwrap();
        let b = evaluate_identity(id, &p, &EvalSpec::default()).unwrap();
        assert_eq!((a.lhs, a.rhs, a.truncation), (b.lhs, b.rhs, b.truncation));
    }
}

#[test]
fn hyperbolic_identities() {
    for d in registry().iter().filter(|d| d.kind == IdentityKind::HyperbolicLine) {
        for s in 1..=5 {
            check(d.id, s);
        }
    }
}

#[test]
fn elliptic_identities() {
    for d in registry().iter().filter(|d| d.kind == IdentityKind::EllipticCircle) {
        for s in 1..=5 {
            check(d.id, s);
        }
    }
}

#[test]
fn mb_identities() {
    for d in registry().iter().filter(|d| d.kind == IdentityKind::ComplexMb) {
        for s in 1..=5 {
            check(d.id, s);
        }
    }
}

#[test]
fn plane_identities() {
    for id in ["complex_plane_beta", "complex_plane_str"] {
        for s in 1..=5 {
            check(id, s);
        }
    }
}

#[test]
fn complex_beta_symmetric_point() {
    // a_k = −i/3, N_k = 0
    let p = Params::ComplexMb(ComplexMbParams {
        a: vec![C64::new(0.0, -1.0 / 3.0); 6],
        n: vec![HalfInt::ZERO; 6],
        nu: Sector::Integer,
    });
    let r = evaluate_identity("complex_beta", &p, &EvalSpec::default()).unwrap();
    assert!(r.pass, "{:.3e}", r.rel_residual);
}

#[test]
fn sector_rule_and_sign() {
    // odd seeds: L odd, sign −1, μ ≠ ν
    let spec = EvalSpec::default();
    for id in ["complex_trafo_I", "complex_trafo_II"] {
        let p = sample_params(id, 1).unwrap();
        let nu = p.as_complex_mb().unwrap().nu;
        let dropped = EvalOptions {
            drop_sign_factor: true,
            ..EvalOptions::default()
        };
        let r = evaluate_identity_with(id, &p, &spec, &dropped).unwrap();
        assert!(r.rel_residual > 1e-2, "{id}: {:.3e}", r.rel_residual);
        let wrong = EvalOptions {
            force_sector: Some(nu),
            ..EvalOptions::default()
        };
        match evaluate_identity_with(id, &p, &spec, &wrong) {
            Ok(r) => assert!(r.rel_residual > 1e-2, "{id}: {:.3e}", r.rel_residual),
            Err(e) => assert!(matches!(e, Error::TailDiverging | Error::NonConvergence(_)), "{e}"),
        }
    }
}

#[test]
fn dbw_normalisation() {
    let p = sample_params("complex_dBW", 1).unwrap();
    let spec = EvalSpec::default();
    let alt = EvalOptions {
        alt_normalization: true,
        ..EvalOptions::default()
    };
    assert!(evaluate_identity("complex_dBW", &p, &spec).unwrap().pass);
    assert!(!evaluate_identity_with("complex_dBW", &p, &spec, &alt).unwrap().pass);
}

#[test]
fn dbw_sign_matters_in_half_sector() {
    let p = sample_params_in("complex_dBW", 2, Some(Sector::Half)).unwrap();
    let dropped = EvalOptions {
        drop_sign_factor: true,
        ..EvalOptions::default()
    };
    let r = evaluate_identity_with("complex_dBW", &p, &EvalSpec::default(), &dropped).unwrap();
    assert!(r.rel_residual > 1e-2);
}

#[test]
fn str_mb_shift_image_matches() {
    let spec = EvalSpec::default();
    let p = sample_params_in("complex_str_MB", 3, Some(Sector::Half)).unwrap();
    let image = str_mb_shift_image(p.as_complex_mb().unwrap());
    assert_eq!(image.nu, Sector::Integer);
    let a = evaluate_identity("complex_str_MB", &p, &spec).unwrap();
    let o = EvalOptions {
        window_sector: Some(Sector::Half),
        ..EvalOptions::default()
    };
    let b = evaluate_identity_with("complex_str_MB", &Params::ComplexMb(image), &spec, &o).unwrap();
    assert!((a.lhs - b.lhs).norm() <= 1e-10 * a.lhs.norm());
}

#[test]
fn balancing_is_enforced() {
    let Params::ComplexMb(mut p) = sample_params("complex_beta", 1).unwrap() else {
        panic!("wrong parameter kind");
    };
    p.a[0] += C64::new(0.01, 0.0);
    let r = evaluate_identity("complex_beta", &Params::ComplexMb(p), &EvalSpec::default());
    assert!(matches!(r, Err(Error::BalancingViolated(_))));
}

#[test]
fn wrong_parameter_kind() {
    let p = sample_params("elliptic_beta", 1).unwrap();
    assert!(evaluate_identity("complex_beta", &p, &EvalSpec::default()).is_err());
}

#[test]
fn tolerance_override() {
    let p = sample_params("complex_beta", 1).unwrap();
    let strict = EvalSpec {
        tolerance: Some(1e-30),
        ..EvalSpec::default()
    };
    let r = evaluate_identity("complex_beta", &p, &strict).unwrap();
    assert!(!r.pass);
    assert_eq!(r.tolerance, 1e-30);
}
