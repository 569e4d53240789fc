use numrange_core::dilation::{circumscription_check, poncelet_polygon, unitary_dilation, unitary_eigenvalues};
use numrange_core::linalg::operator_norm;
use numrange_core::model_operator::compress_shift_adjoint;
use numrange_core::numerical_range::{boundary, numerical_radius_default};
use numrange_core::radius_formula::radius_single_zero;
use numrange_core::subspace::subspace_cos_angle;
use numrange_core::{BlaschkeProduct, Complex64, ComplexMatrix, Error};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn symbol_to_radius_to_polygon() {
    let alpha = c(0.3, -0.2);
    let phi = BlaschkeProduct::single_zero(alpha, 3).unwrap();
    let t = compress_shift_adjoint(&phi).compressed_shift();
    assert!(operator_norm(&t).unwrap() <= 1.0 + 1e-12);

    let w = numerical_radius_default(&t).unwrap();
    assert!((w - radius_single_zero(alpha, 3).unwrap()).abs() < 1e-9);

    let b = boundary(&t, 512).unwrap();
    let rmax = b.points.iter().map(|&(x, y)| x.hypot(y)).fold(0.0, f64::max);
    assert!(rmax <= w + 1e-9 && rmax > w - 1e-3);

    let p = poncelet_polygon(&t, c(0.0, 1.0)).unwrap();
    assert_eq!(p.vertices().len(), 4);
    assert!(circumscription_check(&p, &t, 1024).unwrap().certified());
}

#[test]
fn dilation_spectrum_is_on_circle() {
    let phi = BlaschkeProduct::new(vec![(c(0.2, 0.1), 2), (c(-0.4, 0.0), 1)]).unwrap();
    let t: ComplexMatrix = compress_shift_adjoint(&phi).compressed_shift();
    for phase in [0.0, 1.0, 4.0] {
        let u = unitary_dilation(&t, phase).unwrap();
        let ev = unitary_eigenvalues(&u).unwrap();
        assert_eq!(ev.len(), 4);
        assert!(ev.iter().all(|z| (z.norm() - 1.0).abs() < 1e-10));
    }
}

#[test]
fn domain_errors_surface() {
    assert!(matches!(BlaschkeProduct::single_zero(c(1.0, 0.0), 2), Err(Error::AlphaOutOfRange { .. })));
    let a = BlaschkeProduct::single_zero(c(0.1, 0.0), 1).unwrap();
    assert!(subspace_cos_angle(&a, &a).is_err());
}
