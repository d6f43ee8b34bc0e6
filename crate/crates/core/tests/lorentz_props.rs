use desitter::lorentz::{cross3, det3, inner3, inner4, LVec3, LVec4};
use proptest::prelude::*;

fn v3() -> impl Strategy<Value = LVec3> {
    (-10.0..10.0f64, -10.0..10.0f64, -10.0..10.0f64).prop_map(|(x, y, z)| LVec3::new_unchecked(x, y, z))
}

fn v4() -> impl Strategy<Value = LVec4> {
    prop::array::uniform4(-10.0..10.0f64).prop_map(LVec4::from_array)
}

fn scale3(a: LVec3, b: LVec3, c: LVec3) -> f64 {
    1.0 + a.max_abs() * b.max_abs() * c.max_abs()
}

proptest! {
    #[test]
    fn inner3_symmetric_bilinear(a in v3(), b in v3(), c in v3(), k in -5.0..5.0f64) {
        prop_assert_eq!(inner3(a, b), inner3(b, a));
        let lhs = inner3(k * a + b, c);
        let rhs = k * inner3(a, c) + inner3(b, c);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale3(a, b, c) * (1.0 + k.abs()));
    }

    #[test]
    fn inner4_symmetric_bilinear(a in v4(), b in v4(), c in v4(), k in -5.0..5.0f64) {
        prop_assert_eq!(inner4(a, b), inner4(b, a));
        let lhs = inner4(k * a + b, c);
        let rhs = k * inner4(a, c) + inner4(b, c);
        let scale = 1.0 + (a.max_abs() * (1.0 + k.abs()) + b.max_abs()) * c.max_abs();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
    }

    #[test]
    fn cross3_defining_identity(a in v3(), b in v3(), c in v3()) {
        let w = cross3(a, b);
        prop_assert!((inner3(w, c) - det3(a, b, c)).abs() <= 1e-12 * scale3(a, b, c));
        let s = 1.0 + a.max_abs() * b.max_abs() * (a.max_abs() + b.max_abs());
        prop_assert!(inner3(w, a).abs() <= 1e-12 * s);
        prop_assert!(inner3(w, b).abs() <= 1e-12 * s);
    }

    #[test]
    fn cross3_antisymmetric(a in v3(), b in v3()) {
        prop_assert_eq!(cross3(a, b), -cross3(b, a));
    }
}
