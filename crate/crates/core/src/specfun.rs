//! Hermite and associated Laguerre polynomials by three-term recurrence.

/// A polynomial value together with its first derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyEval {
    pub value: f64,
    pub derivative: f64,
}

/// Physicists' Hermite polynomial `H_n(z)` and `H_n'(z) = 2n H_{n-1}(z)`.
pub fn hermite(n: u32, z: f64) -> PolyEval {
    let (prev, value) = hermite_pair(n, z);
    let derivative = if n == 0 {
        0.0
    } else {
        2.0 * f64::from(n) * prev
    };
    PolyEval { value, derivative }
}

/// Returns `(H_{n-1}(z), H_n(z))`, with `H_{-1} = 0`.
fn hermite_pair(n: u32, z: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let next = 2.0 * z * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// Associated Laguerre polynomial `L_k^(alpha)(z)` (modern convention).
///
/// The derivative uses `d/dz L_k^(a) = -L_{k-1}^(a+1)`.
pub fn assoc_laguerre(k: u32, alpha: u32, z: f64) -> PolyEval {
    let value = laguerre_value(k, f64::from(alpha), z);
    let derivative = if k == 0 {
        0.0
    } else {
        -laguerre_value(k - 1, f64::from(alpha) + 1.0, z)
    };
    PolyEval { value, derivative }
}

fn laguerre_value(k: u32, alpha: f64, z: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - z;
    for j in 1..k {
        let j = f64::from(j);
        let next = ((2.0 * j + 1.0 + alpha - z) * cur - (j + alpha) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `ln(n!)` accumulated term by term.
pub fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| f64::from(k).ln()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hermite_closed(n: u32, z: f64) -> f64 {
        match n {
            0 => 1.0,
            1 => 2.0 * z,
            2 => 4.0 * z * z - 2.0,
            3 => 8.0 * z.powi(3) - 12.0 * z,
            4 => 16.0 * z.powi(4) - 48.0 * z * z + 12.0,
            5 => 32.0 * z.powi(5) - 160.0 * z.powi(3) + 120.0 * z,
            _ => unreachable!(),
        }
    }

    fn laguerre_closed(k: u32, a: f64, z: f64) -> f64 {
        match k {
            0 => 1.0,
            1 => 1.0 + a - z,
            2 => (z * z - 2.0 * (a + 2.0) * z + (a + 1.0) * (a + 2.0)) / 2.0,
            3 => {
                (-z.powi(3) + 3.0 * (a + 3.0) * z * z - 3.0 * (a + 2.0) * (a + 3.0) * z
                    + (a + 1.0) * (a + 2.0) * (a + 3.0))
                    / 6.0
            }
            _ => unreachable!(),
        }
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    // deterministic spread of sample points in [-4, 6]
    fn sample_points() -> impl Iterator<Item = f64> {
        (0..20).map(|i| -4.0 + 10.0 * ((i as f64 * 0.618_033_988_75).fract()))
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(
            hermite(0, 3.7),
            PolyEval {
                value: 1.0,
                derivative: 0.0
            }
        );
        assert_eq!(hermite(2, 1.0).value, 2.0);
        assert_eq!(hermite(3, 2.0).value, 40.0);
        assert_eq!(hermite(3, 2.0).derivative, 2.0 * 3.0 * 14.0);
    }

    #[test]
    fn hermite_matches_closed_forms() {
        for n in 0..=5 {
            for z in sample_points() {
                assert!(rel_close(hermite(n, z).value, hermite_closed(n, z), 1e-10));
            }
        }
    }

    #[test]
    fn laguerre_examples() {
        assert_eq!(
            assoc_laguerre(0, 3, 5.0),
            PolyEval {
                value: 1.0,
                derivative: 0.0
            }
        );
        assert_eq!(assoc_laguerre(1, 1, 2.0).value, 0.0);
        assert_eq!(assoc_laguerre(2, 0, 1.0).value, -0.5);
    }

    #[test]
    fn laguerre_matches_closed_forms() {
        for k in 0..=3 {
            for a in 0..=3 {
                for z in sample_points() {
                    let got = assoc_laguerre(k, a, z).value;
                    assert!(rel_close(got, laguerre_closed(k, f64::from(a), z), 1e-10));
                }
            }
        }
    }

    #[test]
    fn derivatives_match_central_differences() {
        let h = 1e-5;
        for z in sample_points() {
            for n in 0..=6 {
                let fd = (hermite(n, z + h).value - hermite(n, z - h).value) / (2.0 * h);
                let scale = hermite(n, z).derivative.abs().max(1.0);
                assert!((fd - hermite(n, z).derivative).abs() < 1e-5 * scale);
            }
            for k in 0..=4 {
                for a in 0..=3 {
                    let f = |x| assoc_laguerre(k, a, x).value;
                    let fd = (f(z + h) - f(z - h)) / (2.0 * h);
                    let d = assoc_laguerre(k, a, z).derivative;
                    assert!(
                        (fd - d).abs() < 1e-5 * d.abs().max(1.0),
                        "k={k} a={a} z={z}"
                    );
                }
            }
        }
    }

    #[test]
    fn hermite_orthogonality_by_quadrature() {
        use crate::numerics::{integrate, make_grid, SampledCurve};
        let g = make_grid(-10.0, 10.0, 4001).unwrap();
        for m in 0..=4 {
            for n in (m + 1)..=4 {
                let c = SampledCurve::from_fn(g, |z| {
                    hermite(m, z).value * hermite(n, z).value * (-z * z).exp()
                })
                .unwrap();
                assert!(integrate(&c).unwrap().abs() < 1e-8, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn large_order_stays_finite() {
        let e = hermite(20, 10.0);
        assert!(e.value.is_finite() && e.derivative.is_finite());
        assert!((ln_factorial(20) - 2_432_902_008_176_640_000f64.ln()).abs() < 1e-12);
        assert_eq!(ln_factorial(0), 0.0);
    }
}
