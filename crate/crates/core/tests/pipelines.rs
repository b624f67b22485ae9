//! End-to-end builds through `build_hw`, each checked by the brute-force
//! cover counter in `common`.

mod common;

use hwdesign::compose::{build_hw, Externals};
use hwdesign::model::ClassKind;
use hwdesign::Error;

fn built(v: u32, m: u32, n: u32, alpha: u32, beta: u32) {
    let cert = build_hw(v, m, n, alpha, beta, &Externals::default())
        .unwrap_or_else(|e| panic!("HW({v}; {m}, {n}; {alpha}, {beta}): {e}"));
    common::brute_force(&cert).unwrap();
    let count = |k: u32| {
        cert.classes
            .iter()
            .filter(|c| c.kind == ClassKind::Uniform(k as usize))
            .count() as u32
    };
    assert_eq!((count(m), count(n)), (alpha, beta), "HW({v}; {m}, {n}; {alpha}, {beta})");
}

#[test]
fn nine_with_five_and_seven() {
    built(45, 5, 9, 11, 11);
    built(63, 7, 9, 22, 9);
}

#[test]
fn triangles_and_thirteen_gons() {
    built(117, 3, 13, 53, 5);
}

#[test]
fn pentagons_and_nonagons_on_135() {
    built(135, 5, 9, 62, 5);
}

#[test]
fn necessary_conditions_refuse() {
    let e = build_hw(45, 5, 9, 20, 3, &Externals::default()).unwrap_err();
    assert!(matches!(e, Error::NecessaryFail(_)), "{e}");
}
