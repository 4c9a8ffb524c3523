//! Integer biquadratics `x^4 - c x^2 + d` and their closed-form largest
//! roots, as they arise from the quotient characteristic polynomials of the
//! double nested extremal family.

use serde::Serialize;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The polynomial `x^4 - c x^2 + d` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Biquadratic {
    pub c: i64,
    pub d: i64,
}

impl Biquadratic {
    /// Compares the squared largest root `y+ = (c + sqrt(c^2 - 4d)) / 2`
    /// against the integer `m`, exactly.
    pub fn compare_root_sq(&self, m: i64) -> Ordering {
        let (c, d, m) = (self.c as i128, self.d as i128, m as i128);
        if m < 0 {
            return Ordering::Greater;
        }
        // g(y) = y^2 - c y + d, upward parabola with vertex at c/2
        let g = m * m - c * m + d;
        match g.cmp(&0) {
            Ordering::Less => Ordering::Greater, // m strictly inside (y-, y+)
            Ordering::Equal => {
                if 2 * m >= c {
                    Ordering::Equal // m is the larger root
                } else {
                    Ordering::Greater // m is the smaller root, y+ > m
                }
            }
            Ordering::Greater => {
                if 2 * m > c {
                    Ordering::Less // m beyond y+
                } else {
                    Ordering::Greater // m below y-
                }
            }
        }
    }
}

/// `Φ1(x) = x^4 - (pq - p + a - 1) x^2 + (a-1)(q-1)(p-a+1)`, the quotient
/// characteristic polynomial of `D(a-1, p-a+1; q-1, 1)`.
pub fn phi1(p: usize, q: usize, a: usize) -> Result<Biquadratic> {
    if a == 0 {
        return Err(Error::InvalidInput("a must be >= 1".into()));
    }
    if p > q {
        return Err(Error::InvalidInput(format!("requires p <= q, got ({p},{q})")));
    }
    if a > p + 1 {
        return Err(Error::InvalidInput(format!(
            "a = {a} exceeds p + 1 = {}; the block sizes would be negative",
            p + 1
        )));
    }
    let (p, q, a) = (p as i64, q as i64, a as i64);
    Ok(Biquadratic { c: p * q - p + a - 1, d: (a - 1) * (q - 1) * (p - a + 1) })
}

/// `Φ2`: `Φ1` specialized at `p = n/2 - 1`, `q = n/2 + 1` (even `n`), with
/// the 1/4 normalization cleared.
pub fn phi2(n: usize, a: usize) -> Result<Biquadratic> {
    if n % 2 != 0 {
        return Err(Error::InvalidInput(format!("phi2 requires even n, got {n}")));
    }
    if n < 2 {
        return Err(Error::InvalidInput("n must be >= 2".into()));
    }
    phi1(n / 2 - 1, n / 2 + 1, a)
}

/// `Φ3`: `Φ1` specialized at `p = (n-1)/2`, `q = (n+1)/2` (odd `n`).
pub fn phi3(n: usize, a: usize) -> Result<Biquadratic> {
    if n % 2 != 1 {
        return Err(Error::InvalidInput(format!("phi3 requires odd n, got {n}")));
    }
    phi1((n - 1) / 2, (n + 1) / 2, a)
}

/// The largest real root `sqrt((c + sqrt(c^2 - 4d)) / 2)` of the
/// biquadratic; requires `c >= 0` and `c^2 >= 4d`.
pub fn largest_root<F: Scalar>(b: &Biquadratic) -> Result<F> {
    let disc = (b.c as i128) * (b.c as i128) - 4 * (b.d as i128);
    if disc < 0 || b.c < 0 {
        return Err(Error::ComplexRoots { c: b.c, d: b.d });
    }
    let c = F::from_i64(b.c).expect("coefficient fits");
    let d = F::from_i64(b.d).expect("coefficient fits");
    let four = F::usize(4);
    let two = F::usize(2);
    Ok(((c + (c * c - four * d).sqrt()) / two).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi1_worked_instance() {
        let b = phi1(4, 5, 2).unwrap();
        assert_eq!(b, Biquadratic { c: 17, d: 12 });
        let r: f64 = largest_root(&b).unwrap();
        assert!((r - 4.0326278464705885).abs() < 1e-12);
    }

    #[test]
    fn phi1_at_a1_has_zero_constant_term() {
        for p in 1..=6 {
            for q in p..=8 {
                let b = phi1(p, q, 1).unwrap();
                assert_eq!(b.c as usize, p * q - p);
                assert_eq!(b.d, 0);
                let r: f64 = largest_root(&b).unwrap();
                assert!((r - ((p * (q - 1)) as f64).sqrt()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn phi2_matches_the_cleared_quartic() {
        // 4 x^4 - (n^2 - 2n + 4a - 4) x^2 + n(a-1)(n-2a), divided by 4.
        for n in (4..=12).step_by(2) {
            for a in 1..=n / 2 {
                let b = phi2(n, a).unwrap();
                let (ni, ai) = (n as i64, a as i64);
                assert_eq!(4 * b.c, ni * ni - 2 * ni + 4 * ai - 4, "n={n} a={a}");
                assert_eq!(4 * b.d, ni * (ai - 1) * (ni - 2 * ai), "n={n} a={a}");
            }
        }
        // the worked instance n=10, a=3
        let b = phi2(10, 3).unwrap();
        assert_eq!((4 * b.c, 4 * b.d), (88, 80));
        assert_eq!(phi1(4, 6, 3).unwrap(), b);
    }

    #[test]
    fn phi3_matches_the_cleared_quartic() {
        // 4 x^4 - (n^2 - 2n + 4a - 3) x^2 + (a-1)(n-1)(n-2a+1), divided by 4.
        for n in (3..=11).step_by(2) {
            for a in 1..=n / 2 {
                let b = phi3(n, a).unwrap();
                let (ni, ai) = (n as i64, a as i64);
                assert_eq!(4 * b.c, ni * ni - 2 * ni + 4 * ai - 3, "n={n} a={a}");
                assert_eq!(4 * b.d, (ai - 1) * (ni - 1) * (ni - 2 * ai + 1), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn parity_is_enforced() {
        assert!(phi2(7, 1).is_err());
        assert!(phi3(8, 1).is_err());
    }

    #[test]
    fn largest_root_specials() {
        // (c, d) = (pq, 0) gives sqrt(pq)
        let r: f64 = largest_root(&Biquadratic { c: 12, d: 0 }).unwrap();
        assert!((r - 12f64.sqrt()).abs() < 1e-12);
        // (x^2 - 1)^2
        let r: f64 = largest_root(&Biquadratic { c: 2, d: 1 }).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
        assert!(largest_root::<f64>(&Biquadratic { c: 1, d: 1 }).is_err());
    }

    #[test]
    fn exact_root_comparison() {
        // y+ of (c=17, d=12) is 16.26...; compare against integers
        let b = Biquadratic { c: 17, d: 12 };
        assert_eq!(b.compare_root_sq(16), Ordering::Greater);
        assert_eq!(b.compare_root_sq(17), Ordering::Less);
        // exact equality: (y - 9)(y - 4) = y^2 - 13y + 36
        let b = Biquadratic { c: 13, d: 36 };
        assert_eq!(b.compare_root_sq(9), Ordering::Equal);
        assert_eq!(b.compare_root_sq(4), Ordering::Greater); // smaller root
        assert_eq!(b.compare_root_sq(10), Ordering::Less);
        assert_eq!(b.compare_root_sq(-1), Ordering::Greater);
    }
}
