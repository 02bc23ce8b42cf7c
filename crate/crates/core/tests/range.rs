use boundent::linalg::*;
use boundent::ppt::{partial_transpose, Subsystem};
use boundent::range::*;
use boundent::state::*;
use boundent::{Complex64, DensityMatrix, FamilyParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn range_rho(eps: f64) -> RangeBasis {
    orthonormal_range(symmetric_instance(eps).unwrap().matrix(), DEFAULT_RANK_TOL).unwrap()
}

fn range_pt(eps: f64) -> RangeBasis {
    let pt = partial_transpose(&symmetric_instance(eps).unwrap(), Subsystem::Second);
    orthonormal_range(&pt, DEFAULT_RANK_TOL).unwrap()
}

fn unit() -> FreeScalars {
    FreeScalars::splat(c(1.0, 0.0))
}

#[test]
fn bilinear_examples() {
    let e1 = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
    let e2 = [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
    assert_eq!(bilinear_residuals(&ProductVector::new(e1, e1)), [0.0; 5]);
    let r = bilinear_residuals(&ProductVector::new(e1, e2));
    assert_eq!(r[1], 1.0);
    for tag in FamilyTag::ALL {
        let pv = instantiate(tag, &unit()).unwrap();
        assert!(bilinear_residuals(&pv).iter().all(|&x| x <= 1e-15), "{tag}");
    }
}

#[test]
fn family_examples() {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let pv = instantiate(FamilyTag::F14, &unit()).unwrap();
    assert_eq!(pv.vector(), basis_vector(16, 0));
    let pv = instantiate(FamilyTag::F27, &unit()).unwrap();
    assert_eq!(pv.vector(), basis_vector(16, 15));
    let pv = instantiate(FamilyTag::F12, &unit()).unwrap();
    assert_eq!(pv.left, [one, -i, z, z]);
    assert_eq!(pv.right, [one, i, z, z]);
    assert_eq!(pcc(&pv), kron_vec(&[one, -i, z, z], &[one, -i, z, z]));
    assert_eq!(pcc_product(&pcc_product(&pv)), pv);
    let real = instantiate(FamilyTag::F19, &unit()).unwrap();
    assert_eq!(pcc(&real), real.vector());
    assert!(matches!(
        instantiate(FamilyTag::F12, &FreeScalars::new(z, one, one, one)),
        Err(boundent::Error::DegenerateScalar(_))
    ));
}

#[test]
fn families_lie_in_range() {
    let scalars = deterministic_scalars();
    for eps in [1e-3, 0.1, 0.25, 0.4, 0.5] {
        let r = range_rho(eps);
        for s in &scalars {
            for tag in FamilyTag::ALL {
                let v = instantiate(tag, s).unwrap().vector();
                assert!(
                    r.relative_residual(&v).unwrap() <= MEMBERSHIP_TOL,
                    "{tag} eps {eps}"
                );
            }
        }
    }
}

#[test]
fn discarded_pairs_add_no_rank() {
    let r = range_rho(0.3);
    let scalars = deterministic_scalars();
    let kept = family_span(&FamilyTag::KEPT, &scalars, &r, DEFAULT_RANK_TOL).unwrap();
    let all = family_span(&FamilyTag::ALL, &scalars, &r, DEFAULT_RANK_TOL).unwrap();
    assert_eq!(kept.rank(), all.rank());
    assert_eq!(kept.rank(), 8);
    for tag in FamilyTag::DISCARDED {
        for s in scalars.iter().step_by(17) {
            let v = instantiate(tag, s).unwrap().vector();
            assert!(kept.relative_residual(&v).unwrap() <= 1e-10);
        }
    }
}

#[test]
fn pattern_examples() {
    let p = range_pattern_check(&symmetric_instance(0.3).unwrap()).unwrap();
    assert!(p.fits && p.rank == 8);
    let p = range_pattern_check(&diag_separable()).unwrap();
    assert!(p.fits && p.rank == 4);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = ComplexMatrix::from_fn(16, 16, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let m = g.matmul(&g.adjoint());
    let m = m.scale_real(1.0 / m.trace().re);
    let full = DensityMatrix::new(m, (4, 4)).unwrap();
    let p = range_pattern_check(&full).unwrap();
    assert!(!p.fits && p.rank == 16);

    let pat = RangeVectorPattern {
        a: c(1.0, 0.0),
        b: c(2.0, 0.0),
        c: c(3.0, 0.0),
        d: c(4.0, 0.0),
        e: c(5.0, 0.0),
        f: c(6.0, 0.0),
        g: c(7.0, 0.0),
        h: c(8.0, 0.0),
    };
    let v = pat.materialize();
    for k in FORCED_ZEROS {
        assert_eq!(v[k], c(0.0, 0.0));
    }
    for (p, q) in MIRRORED_PAIRS {
        assert_eq!(v[p], -v[q]);
    }
    assert_eq!(RangeVectorPattern::fit(&v), (pat, 0.0));
}

#[test]
fn pcc_span_stays_in_pt_range() {
    for eps in [0.1, 0.2, 0.3, 0.4] {
        let span = pcc_span(&range_rho(eps), &Sampling::default()).unwrap();
        let pt = range_pt(eps);
        for v in &span.basis.vectors {
            assert!(pt.relative_residual(v).unwrap() <= 1e-10, "eps {eps}");
        }
        assert!(span.basis.orthonormality_defect() <= 1e-12);
        for k in [0, 5, 10, 15] {
            assert!(span.basis.relative_residual(&basis_vector(16, k)).unwrap() <= 1e-10);
        }
    }
}

#[test]
fn frozen_span_values() {
    for seed in [0, 1, 7] {
        let span = pcc_span(&range_rho(0.3), &Sampling::with_seed(seed)).unwrap();
        assert_eq!(span.basis.rank(), 12);
        assert!(span.basis.relative_residual(&basis_vector(16, 1)).unwrap() < 1e-12);
    }
    let r = range_rho(0.3);
    let single = family_span(&FamilyTag::KEPT, &[unit()], &r, DEFAULT_RANK_TOL).unwrap();
    assert_eq!(single.rank(), 8);
    let vectors: Vec<Vec<Complex64>> = FamilyTag::KEPT
        .iter()
        .map(|&t| pcc(&instantiate(t, &unit()).unwrap()))
        .collect();
    let single_pcc = span_of(&vectors, 16, DEFAULT_RANK_TOL).unwrap();
    assert_eq!(single_pcc.rank(), 8);
    let res = single_pcc.relative_residual(&basis_vector(16, 1)).unwrap();
    assert!(
        (res - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12,
        "{res}"
    );
}

#[test]
fn explicit_separable_decomposition() {
    // Each antisymmetric block on the local pair (i, j) is an equal mixture of
    // (e_i + i^k e_j) (x) (e_i - i^k e_j) / 2, k = 0..3, plus product diagonal terms.
    let phases = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)];
    for eps in [0.0, 0.1, 0.25, 0.4, 0.5] {
        let x1 = (1.0 - eps) / 4.0;
        let x = eps / 8.0;
        let diag_weight = x1 / 2.0 - x;
        assert!(diag_weight >= 0.0);
        let mut sum = ComplexMatrix::zeros(16, 16);
        for (i, j) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            for k in [i, j] {
                let e = kron_vec(&basis_vector(4, k), &basis_vector(4, k));
                sum = &sum + &ComplexMatrix::outer(&e, &e).scale_real(diag_weight);
            }
            for w in phases {
                let mut l = vec![c(0.0, 0.0); 4];
                let mut r = vec![c(0.0, 0.0); 4];
                l[i] = c(1.0, 0.0);
                l[j] = w;
                r[i] = c(1.0, 0.0);
                r[j] = -w;
                let v = kron_vec(&normalized(&l).unwrap(), &normalized(&r).unwrap());
                sum = &sum + &ComplexMatrix::outer(&v, &v).scale_real(x);
            }
        }
        let rho = symmetric_instance(eps).unwrap();
        assert!(rho.matrix().max_abs_diff(&sum) < 1e-15, "eps {eps}");
    }
}

#[test]
fn witness_is_in_pt_range_and_in_pcc_span() {
    for eps in [0.1, 0.2, 0.3, 0.4] {
        let w = basis_vector(16, 1);
        let (inside, res) = subspace_contains(&range_pt(eps), &w, WITNESS_IN_RANGE_TOL).unwrap();
        assert!(inside && res <= 1e-10);
        let span = pcc_span(&range_rho(eps), &Sampling::default()).unwrap();
        assert!(span.basis.relative_residual(&w).unwrap() < 1e-12);
    }
    let w = basis_vector(16, 1);
    assert!(range_pt(0.0).relative_residual(&w).unwrap() > 0.5);
    assert_eq!(range_pt(0.5).rank(), 11);
}

#[test]
fn product_search_matches_families() {
    let r = range_rho(0.3);
    let hits = product_search(&r, 200, 5);
    assert_eq!(hits.len(), 200);
    for h in &hits {
        let v = h.vector();
        assert!(r.relative_residual(&v).unwrap() <= HIT_TOL);
        let (tag, d) = identify_family(&v, 1e-6).unwrap_or_else(|| panic!("unmatched hit {v:?}"));
        assert!(d <= 1e-6, "{tag}");
    }
    assert_eq!(product_search(&r, 30, 5), product_search(&r, 30, 5));
    assert_eq!(
        product_search(&range_rho(0.3), 10, 2).len(),
        product_search(&r, 10, 2).len()
    );
}

#[test]
fn certify_examples() {
    let s = Sampling::default();
    let cert = certify(&FamilyParams::symmetric(0.8).unwrap(), &s).unwrap();
    assert_eq!(cert.verdict, Verdict::Npt);
    assert!((cert.min_pt_eig - (1.0 - 1.6) / 4.0).abs() < 1e-12);
    let cert = certify(&FamilyParams::symmetric(0.0).unwrap(), &s).unwrap();
    assert_eq!(cert.verdict, Verdict::Inconclusive);
    assert!(cert.witness_in_range_pt > 0.5);
    let cert = certify(&FamilyParams::symmetric(0.3).unwrap(), &s).unwrap();
    assert_eq!(
        (cert.rank_rho, cert.rank_pt, cert.pcc_span_rank),
        (8, 12, 12)
    );
    assert!(cert.pattern_fits && cert.is_ppt);
    assert!(cert.pcc_span_outside_pt <= 1e-10);
}

#[test]
fn certify_ignores_global_phases() {
    let s = Sampling::default();
    let base = certify(&FamilyParams::symmetric(0.3).unwrap(), &s).unwrap();
    let ph = |t: f64| c(0.5 * t.cos(), 0.5 * t.sin());
    for eps in [0.3, 0.7] {
        let p = FamilyParams::new(ph(0.3), ph(1.1), ph(-2.0), ph(2.9), eps).unwrap();
        let q = FamilyParams::symmetric(eps).unwrap();
        let a = certify(&p, &s).unwrap();
        let b = if eps == 0.3 {
            base.clone()
        } else {
            certify(&q, &s).unwrap()
        };
        assert_eq!(a.verdict, b.verdict);
        assert_eq!(
            (a.rank_rho, a.rank_pt, a.pcc_span_rank),
            (b.rank_rho, b.rank_pt, b.pcc_span_rank)
        );
        assert!((a.min_pt_eig - b.min_pt_eig).abs() < 1e-12);
    }
}

#[test]
fn sampling_cap_reports_no_stabilization() {
    let s = Sampling {
        max_batches: 3,
        ..Sampling::default()
    };
    assert!(matches!(
        pcc_span(&range_rho(0.3), &s),
        Err(boundent::Error::NoStabilization { .. })
    ));
}
