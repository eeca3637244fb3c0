//! The bundled reference matrices driven through the library operations:
//! block round-trips, reductions, the rank-one and rank-r update paths, and
//! caller-supplied block realizers. These pin the exact printed data.

use centro_core::*;

fn cv(re: f64, im: f64) -> ComplexVal {
    ComplexVal::new(re, im)
}

fn assert_close(a: &DenseMatrix, b: &DenseMatrix, tol: f64) {
    assert_eq!(a.n_rows(), b.n_rows());
    let diff = a.sub(b).max_abs();
    assert!(diff <= tol, "matrices differ by {diff:e}");
}

#[test]
fn fixture_blocks_roundtrip_through_assembly() {
    for m in [
        fixtures::matrix_one_final(),
        fixtures::matrix_one_working(),
        fixtures::matrix_two_final(),
    ] {
        let c = CentroMatrix::new(m.clone()).unwrap();
        let rebuilt = match split(&c) {
            CentroBlocks::Even(blocks) => assemble_even(&blocks).unwrap(),
            CentroBlocks::Odd(blocks) => assemble_odd(&blocks).unwrap(),
        };
        assert_eq!(rebuilt.matrix(), &m);
    }
}

#[test]
fn reduction_of_first_fixture_isolates_the_minus_spectrum() {
    let c = CentroMatrix::new(fixtures::matrix_one_final()).unwrap();
    let (_, minus) = reduce(&c);
    let lambda2 = SpectrumList::new(&[
        cv(-3.0, 0.0),
        cv(-3.0, 1.0),
        cv(-3.0, -1.0),
        cv(-1.0, 1.0),
        cv(-1.0, -1.0),
    ])
    .unwrap();
    let vals = eigenvalues(&minus).unwrap();
    let mtc = match_spectra(&lambda2, &vals, MatchTolerance::default()).unwrap();
    assert!(mtc.matched, "minus factor off by {:e}", mtc.max_distance);
}

#[test]
fn reduction_of_second_fixture_keeps_perron_in_plus() {
    let c = CentroMatrix::new(fixtures::matrix_two_final()).unwrap();
    let (plus, _) = reduce(&c);
    let vals = eigenvalues(&plus).unwrap();
    let has_perron = vals
        .iter()
        .any(|v| (v.re - 10.0).abs() < 1e-9 && v.im.abs() < 1e-9);
    assert!(has_perron, "plus factor must carry the spectral radius");
    let rho = perron_vector(c.matrix()).unwrap().value;
    assert!((rho - 10.0).abs() < 1e-9);
}

#[test]
fn rank_one_update_reproduces_the_printed_block() {
    let base = fixtures::matrix_one_rowsum_block();
    // constant row sums 7 with zero trace
    for s in base.row_sums() {
        assert_eq!(s, 7.0);
    }
    assert_eq!(base.trace(), 0.0);

    let updated = brauer_update(&base, &[1.0; 5], &[3.0, 3.0, 3.0, 1.0, 1.0]).unwrap();
    assert_eq!(updated, fixtures::matrix_one_diagonal_block());
    assert_eq!(updated.diagonal(), vec![3.0, 3.0, 3.0, 1.0, 1.0]);

    let rho = perron_vector(&updated).unwrap().value;
    assert!((rho - 18.0).abs() < 1e-9);
}

#[test]
fn perron_bump_reproduces_the_final_fixture() {
    let working = CentroMatrix::new(fixtures::matrix_one_working()).unwrap();
    let pd = perron_vector(working.matrix()).unwrap();
    assert!((pd.value - 18.0).abs() < 1e-9);
    for &v in &pd.vector {
        assert!(
            (v - 1.0).abs() < 1e-12,
            "constant row sums give the ones vector"
        );
    }
    let bumped = perron_bump(&working, 2.0).unwrap();
    assert_close(bumped.matrix(), &fixtures::matrix_one_final(), 1e-14);
}

fn second_fixture_carrier() -> (DenseMatrix, DenseMatrix) {
    let a1 = fixtures::matrix_two_side_block();
    let a2 = DenseMatrix::from_rows(&[vec![3.5]]);
    let blocks = [
        a1.clone(),
        a2.clone(),
        rotate_half_turn(&a2),
        rotate_half_turn(&a1),
    ];
    let carrier = DenseMatrix::direct_sum(&blocks);
    let mut x = DenseMatrix::zeros(8, 4);
    for i in 0..3 {
        x[(i, 0)] = 1.0;
        x[(5 + i, 3)] = 1.0;
    }
    x[(3, 1)] = 1.0;
    x[(4, 2)] = 1.0;
    (carrier, x)
}

#[test]
fn rank_r_update_reproduces_the_printed_matrix() {
    let (carrier, x) = second_fixture_carrier();
    let cmat = DenseMatrix::from_rows(&[
        vec![0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 3.0],
        vec![5.5, 0.0, 0.0, 0.0, 2.5, 0.0, 0.0, 6.5],
        vec![6.5, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0, 5.5],
        vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0],
    ]);
    let updated = rado_update(&carrier, &x, &cmat).unwrap();
    assert_eq!(updated, fixtures::matrix_two_final());
}

#[test]
fn partitioned_with_supplied_blocks_reproduces_the_printed_matrix() {
    let list = SpectrumList::new(&fixtures::spectrum_two()).unwrap();
    let partition = Partition {
        sublists: vec![
            SpectrumList::new(&fixtures::spectrum_two_center()).unwrap(),
            SpectrumList::new(&[cv(-2.0, 2.0), cv(-2.0, -2.0)]).unwrap(),
            SpectrumList::from_parts(vec![], vec![]),
        ],
        anchors: vec![4.0, 3.5],
        parity: SplitParity::Even,
    };
    let realizers = SubRealizers {
        side: vec![Some(fixtures::matrix_two_side_block()), None],
        middle: None,
        center: Some(fixtures::matrix_two_center()),
    };
    let r = realize_partitioned(&list, &partition, &realizers).unwrap();
    assert_eq!(r.matrix.matrix(), &fixtures::matrix_two_final());
}

#[test]
fn fixture_realizations_verify_end_to_end() {
    for name in fixtures::fixture_names() {
        let target = fixtures::fixture_spectrum(name).unwrap();
        let r = auto_realize(&target, None).unwrap();
        let report = verify_realization(&r, &target, MatchTolerance::default()).unwrap();
        assert!(
            report.accepted,
            "{name}: {:e}",
            report.spectrum.max_distance
        );
        assert_eq!(report.centro_residual, 0.0);
        assert!(report.nonneg_margin >= 0.0);
    }
}

#[test]
fn working_fixture_margin_is_exactly_zero() {
    // zero diagonal entries put the working matrix on the nonnegativity edge
    assert_eq!(is_nonnegative(&fixtures::matrix_one_working()), 0.0);
    assert!(is_nonnegative(&fixtures::matrix_one_final()) > 0.0);
    assert_eq!(is_centrosymmetric(&fixtures::matrix_one_final()), 0.0);
    assert_eq!(is_centrosymmetric(&fixtures::matrix_two_final()), 0.0);
}
