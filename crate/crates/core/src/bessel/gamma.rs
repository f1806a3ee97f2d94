use crate::scalar::Scalar;

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural logarithm of |Γ(z)| for real z that is not a non-positive integer.
pub fn ln_gamma<T: Scalar>(z: T) -> T {
    let half = T::lit(0.5);
    if z < half {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let pi = T::PI();
        return (pi / (pi * z).sin().abs()).ln() - ln_gamma(T::one() - z);
    }
    if z.fract() == T::zero() && z <= T::lit(30.0) {
        let n = z.to_usize().unwrap_or(1);
        return (1..n).fold(T::zero(), |acc, k| acc + T::of_usize(k).ln());
    }
    let z = z - T::one();
    let mut a = T::lit(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a = a + T::lit(c) / (z + T::of_usize(i));
    }
    let t = z + T::lit(LANCZOS_G) + half;
    half * (T::TAU()).ln() + (z + half) * t.ln() - t + a.ln()
}
