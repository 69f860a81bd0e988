//! Bessel function of the first kind, order one.
//!
//! Piecewise rational approximation on `|x| < 2` and the Hankel asymptotic
//! form with rational corrections `P1`, `Q1` beyond. Coefficients are the
//! FreeBSD msun `e_j1.c` set (Sun Microsystems, freely redistributable with
//! this notice preserved), accurate to well under 1e-16 absolute in `f64`.

#![allow(clippy::excessive_precision)]

use super::Real;

const R0: [f64; 4] = [
    -6.25000000000000000000e-02,
    1.40705666955189706048e-03,
    -1.59955631084035597520e-05,
    4.96727999609584448412e-08,
];
const S0: [f64; 5] = [
    1.91537599538363460805e-02,
    1.85946785588630915560e-04,
    1.17718464042623683263e-06,
    5.04636257076217042715e-09,
    1.23542274426137913908e-11,
];

// P1 rational fits, selected by |x| interval: [8, inf), [4.5454, 8), [2.8570, 4.5454), [2, 2.8570).
const PR8: [f64; 6] = [
    0.00000000000000000000e+00,
    1.17187499999988647970e-01,
    1.32394806593073575129e+01,
    4.12051854307378562225e+02,
    3.87474538913960532227e+03,
    7.91447954031891731574e+03,
];
const PS8: [f64; 5] = [
    1.14207370375678408436e+02,
    3.65093083420853463394e+03,
    3.69562060269033463555e+04,
    9.76027935934950801311e+04,
    3.08042720627888811578e+04,
];
const PR5: [f64; 6] = [
    1.31990519556243522749e-11,
    1.17187493190614097638e-01,
    6.80275127868432871736e+00,
    1.08308182990189109773e+02,
    5.17636139533199752805e+02,
    5.28715201363337541807e+02,
];
const PS5: [f64; 5] = [
    5.92805987221131331921e+01,
    9.91401418733614377743e+02,
    5.35326695291487976647e+03,
    7.84469031749551231769e+03,
    1.50404688810361062679e+03,
];
const PR3: [f64; 6] = [
    3.02503916137373618024e-09,
    1.17186865567253592491e-01,
    3.93297750033315640650e+00,
    3.51194035591636932736e+01,
    9.10550110750781271918e+01,
    4.85590685197364919645e+01,
];
const PS3: [f64; 5] = [
    3.47913095001251519989e+01,
    3.36762458747825746741e+02,
    1.04687139975775130551e+03,
    8.90811346398256432622e+02,
    1.03787932439639277504e+02,
];
const PR2: [f64; 6] = [
    1.07710830106873743082e-07,
    1.17176219462683348094e-01,
    2.36851496667608785174e+00,
    1.22426109148261232917e+01,
    1.76939711271687727390e+01,
    5.07352312588818499250e+00,
];
const PS2: [f64; 5] = [
    2.14364859363821409488e+01,
    1.25290227168402751090e+02,
    2.32276469057162813669e+02,
    1.17679373287147100768e+02,
    8.36463893371618283368e+00,
];

// Q1 rational fits, same intervals.
const QR8: [f64; 6] = [
    0.00000000000000000000e+00,
    -1.02539062499992714161e-01,
    -1.62717534544589987888e+01,
    -7.59601722513950107896e+02,
    -1.18498066702429587167e+04,
    -4.84385124285750353010e+04,
];
const QS8: [f64; 6] = [
    1.61395369700722909556e+02,
    7.82538599923348465381e+03,
    1.33875336287249578163e+05,
    7.19657723683240939863e+05,
    6.66601232617776375264e+05,
    -2.94490264303834643215e+05,
];
const QR5: [f64; 6] = [
    -2.08979931141764104297e-11,
    -1.02539050241375426231e-01,
    -8.05644828123936029840e+00,
    -1.83669607474888380239e+02,
    -1.37319376065508163265e+03,
    -2.61244440453215656817e+03,
];
const QS5: [f64; 6] = [
    8.12765501384335777857e+01,
    1.99179873460485964642e+03,
    1.74684851924908907677e+04,
    4.98514270910352279316e+04,
    2.79480751638918118260e+04,
    -4.71918354795128470869e+03,
];
const QR3: [f64; 6] = [
    -5.07831226461766561369e-09,
    -1.02537829820837089745e-01,
    -4.61011581139473403113e+00,
    -5.78472216562783643212e+01,
    -2.28244540737631695038e+02,
    -2.19210128478909325622e+02,
];
const QS3: [f64; 6] = [
    4.76651550323729509273e+01,
    6.73865112676699709482e+02,
    3.38015286679526343505e+03,
    5.54772909720722782367e+03,
    1.90311919338810798763e+03,
    -1.35201191444307340817e+02,
];
const QR2: [f64; 6] = [
    -1.78381727510958865572e-07,
    -1.02517042607985553460e-01,
    -2.75220568278187460720e+00,
    -1.96636162643703720221e+01,
    -4.23253133372830490089e+01,
    -2.13719211703704061733e+01,
];
const QS2: [f64; 6] = [
    2.95333629060523854548e+01,
    2.52981549982190529136e+02,
    7.57502834868645436472e+02,
    7.39393205320467245656e+02,
    1.55949003336666123687e+02,
    -4.95949898822628210127e+00,
];

const INV_SQRT_PI: f64 = 5.64189583547756279280e-01;

/// Evaluates `c[0] + z*(c[1] + z*(...))`.
#[inline]
fn horner<T: Real>(coeffs: &[f64], z: T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, &c| acc * z + T::lit(c))
}

/// Evaluates `1 + z*(c[0] + z*(c[1] + ...))`.
#[inline]
fn horner_one<T: Real>(coeffs: &[f64], z: T) -> T {
    T::one() + z * horner(coeffs, z)
}

fn interval(ax: f64) -> usize {
    if ax >= 8.0 {
        0
    } else if ax >= 4.545_452_117_919_922 {
        1
    } else if ax >= 2.857_141_494_750_976_6 {
        2
    } else {
        3
    }
}

fn p_one<T: Real>(x: T) -> T {
    let (pr, ps) = match interval(x.to_f64_lossy()) {
        0 => (&PR8, &PS8),
        1 => (&PR5, &PS5),
        2 => (&PR3, &PS3),
        _ => (&PR2, &PS2),
    };
    let z = (x * x).recip();
    T::one() + horner(pr, z) / horner_one(ps, z)
}

fn q_one<T: Real>(x: T) -> T {
    let (qr, qs) = match interval(x.to_f64_lossy()) {
        0 => (&QR8, &QS8),
        1 => (&QR5, &QS5),
        2 => (&QR3, &QS3),
        _ => (&QR2, &QS2),
    };
    let z = (x * x).recip();
    (T::lit(0.375) + horner(qr, z) / horner_one(qs, z)) / x
}

/// Bessel function of the first kind of order one, `J₁(x)`.
///
/// Odd in `x`. Returns NaN for NaN input and 0 at ±∞.
pub fn bessel_j1<T: Real>(x: T) -> T {
    if x.is_nan() {
        return x;
    }
    let ax = x.abs();
    if ax.is_infinite() {
        return T::zero();
    }
    let value = if ax >= T::lit(2.0) {
        // sin(x) - cos(x) and -(sin(x) + cos(x)); the one prone to
        // cancellation is recovered from cos(2x).
        let (s, c) = ax.sin_cos();
        let mut cc = s - c;
        let mut ss = -s - c;
        let z = (ax + ax).cos();
        if s * c > T::zero() {
            cc = z / ss;
        } else {
            ss = z / cc;
        }
        let amp = p_one(ax) * cc - q_one(ax) * ss;
        T::lit(INV_SQRT_PI) * amp / ax.sqrt()
    } else {
        let z = ax * ax;
        let r = z * horner(&R0, z);
        let s = horner_one(&S0, z);
        (T::lit(0.5) + r / s) * ax
    };
    if x.is_sign_negative() {
        -value
    } else {
        value
    }
}

/// `2 J₁(x) / x`, continuous through `x = 0` where it equals 1.
pub fn jinc<T: Real>(x: T) -> T {
    let ax = x.abs();
    if ax < T::lit(2.0) {
        // Same rational core as `bessel_j1` with the factor x divided out.
        let z = ax * ax;
        let r = z * horner(&R0, z);
        let s = horner_one(&S0, z);
        T::one() + (r / s) * T::lit(2.0)
    } else {
        T::lit(2.0) * bessel_j1(ax) / ax
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_argument_series() {
        // J1(x) = x/2 - x^3/16 + x^5/384 - ...
        for &x in &[1e-8_f64, 1e-4, 0.01] {
            let series = x / 2.0 - x.powi(3) / 16.0 + x.powi(5) / 384.0;
            assert!((bessel_j1(x) - series).abs() < 1e-18);
        }
        assert_eq!(bessel_j1(0.0_f64), 0.0);
        assert_eq!(jinc(0.0_f64), 1.0);
    }

    #[test]
    fn odd_symmetry() {
        for &x in &[0.3_f64, 1.9, 2.0, 3.5, 7.9, 8.0, 55.5, 299.0] {
            assert_eq!(bessel_j1(-x), -bessel_j1(x));
            assert_eq!(jinc(-x), jinc(x));
        }
    }

    #[test]
    fn known_values() {
        // Abramowitz & Stegun Table 9.1.
        let table = [
            (1.0_f64, 0.440_050_585_744_933_5),
            (2.0, 0.576_724_807_756_873_4),
            (5.0, -0.327_579_137_591_465_2),
            (10.0, 0.043_472_746_168_861_44),
        ];
        for (x, want) in table {
            assert!((bessel_j1(x) - want).abs() < 1e-15, "x={x}");
        }
    }

    #[test]
    fn special_inputs() {
        assert!(bessel_j1(f64::NAN).is_nan());
        assert_eq!(bessel_j1(f64::INFINITY), 0.0);
    }

    #[test]
    fn single_precision_is_usable() {
        let v32 = bessel_j1(3.0_f32) as f64;
        assert!((v32 - bessel_j1(3.0_f64)).abs() < 1e-6);
    }
}
