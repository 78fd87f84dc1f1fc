//! Phases of nonzero charge values.
//!
//! A phase is stored as an integer window plus an in-window direction with
//! argument in (0, 1] (units of pi). Exact directions compare by rational
//! cross products, so wall-crossing decisions never touch a tolerance;
//! floating directions compare with [`crate::tol::PHASE_TOL`].

use crate::charge::ChargeValue;
use crate::error::{Error, Result};
use crate::qi::Qi;
use crate::tol::PHASE_TOL;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Debug)]
enum Dir {
    /// Exact charge direction in the semiclosed upper half-plane.
    Exact(Qi),
    /// Normalized argument in (0, 1].
    Float(f64),
}

#[derive(Clone, Debug)]
pub struct Phase {
    pub window: i64,
    dir: Dir,
}

impl Phase {
    /// Phase of a nonzero charge value whose in-window representative lies in
    /// the semiclosed upper half-plane (argument in (0, pi]).
    pub fn from_charge_in_window(z: &ChargeValue, window: i64) -> Result<Phase> {
        match z {
            ChargeValue::Exact(q) => {
                if q.is_zero() {
                    return Err(Error::ZeroObject);
                }
                if !q.in_semiclosed_upper_half_plane() {
                    return Err(Error::InvalidStability(format!(
                        "charge {q} lies outside the semiclosed upper half-plane"
                    )));
                }
                Ok(Phase {
                    window,
                    dir: Dir::Exact(q.clone()),
                })
            }
            ChargeValue::Floating(c) => {
                if c.re == 0.0 && c.im == 0.0 {
                    return Err(Error::ZeroObject);
                }
                let raw = c.im.atan2(c.re) / std::f64::consts::PI; // in (-1, 1]
                let phi = if raw > PHASE_TOL {
                    raw
                } else if raw <= -1.0 + PHASE_TOL {
                    // just below the negative real axis: boundary phase 1
                    1.0
                } else {
                    return Err(Error::InvalidStability(format!(
                        "charge {c} lies outside the semiclosed upper half-plane (arg/pi = {raw})"
                    )));
                };
                Ok(Phase {
                    window,
                    dir: Dir::Float(phi.min(1.0)),
                })
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.dir, Dir::Exact(_))
    }

    /// In-window argument in (0, 1], as a float.
    pub fn phi_value(&self) -> f64 {
        match &self.dir {
            Dir::Exact(q) => {
                let z = q.to_complex();
                let raw = z.im.atan2(z.re) / std::f64::consts::PI;
                if raw <= 0.0 {
                    raw + 2.0
                } else {
                    raw
                }
            }
            Dir::Float(p) => *p,
        }
    }

    /// Real phase value: window + in-window argument.
    pub fn value(&self) -> f64 {
        self.window as f64 + self.phi_value()
    }

    pub fn shifted(&self, k: i64) -> Phase {
        Phase {
            window: self.window + k,
            dir: self.dir.clone(),
        }
    }

    /// Total order on phases. Exact directions compare without tolerance;
    /// floating values within `PHASE_TOL` of each other are equal.
    pub fn phase_cmp(&self, other: &Phase) -> Ordering {
        match (&self.dir, &other.dir) {
            (Dir::Exact(a), Dir::Exact(b)) => match self.window.cmp(&other.window) {
                Ordering::Equal => a.cross_sign(b),
                ord => ord,
            },
            _ => {
                let (x, y) = (self.value(), other.value());
                if (x - y).abs() <= PHASE_TOL {
                    Ordering::Equal
                } else {
                    x.partial_cmp(&y).unwrap_or(Ordering::Equal)
                }
            }
        }
    }

    /// Compare against the half-integer h/2. Exact directions use sign tests
    /// on the charge components (phase < 1/2 iff re > 0, phase = 1 iff the
    /// charge is on the negative real axis), so tilt-boundary decisions stay
    /// exact.
    pub fn cmp_half_integer(&self, h: i64) -> Ordering {
        match &self.dir {
            Dir::Exact(q) => {
                use num_traits::{Signed, Zero};
                // phase value lies in (window, window + 1]
                let lo = 2 * self.window; // phase > lo/2
                let hi = 2 * self.window + 2; // phase <= hi/2
                if h <= lo {
                    return Ordering::Greater;
                }
                if h >= hi {
                    if h == hi && q.im.is_zero() {
                        return Ordering::Equal; // boundary phase window+1
                    }
                    return Ordering::Less;
                }
                // h == 2*window + 1: compare in-window phase against 1/2
                if q.im.is_zero() {
                    Ordering::Greater // phase exactly window+1 > h/2
                } else if q.re.is_positive() {
                    Ordering::Less
                } else if q.re.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
            Dir::Float(_) => {
                let target = h as f64 / 2.0;
                let v = self.value();
                if (v - target).abs() <= PHASE_TOL {
                    Ordering::Equal
                } else {
                    v.partial_cmp(&target).unwrap_or(Ordering::Equal)
                }
            }
        }
    }

    /// Exact structural equality of the phase as a point of R (used by the
    /// oracle comparison; floating phases fall back to the tolerance).
    pub fn same_phase(&self, other: &Phase) -> bool {
        self.phase_cmp(other) == Ordering::Equal
            && match (&self.dir, &other.dir) {
                (Dir::Exact(_), Dir::Exact(_)) => self.window == other.window,
                _ => true,
            }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}", self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn exact(re_n: i64, re_d: i64, im_n: i64, im_d: i64, w: i64) -> Phase {
        Phase::from_charge_in_window(
            &ChargeValue::Exact(Qi::from_integers(re_n, re_d, im_n, im_d)),
            w,
        )
        .unwrap()
    }

    #[test]
    fn ordering_within_and_across_windows() {
        let quarter = exact(1, 1, 1, 1, 0); // phase 1/4
        let half = exact(0, 1, 1, 1, 0); // phase 1/2
        let one = exact(-1, 1, 0, 1, 0); // phase 1
        assert_eq!(quarter.phase_cmp(&half), Ordering::Less);
        assert_eq!(half.phase_cmp(&one), Ordering::Less);
        assert_eq!(one.phase_cmp(&quarter.shifted(1)), Ordering::Less);
        assert_eq!(quarter.phase_cmp(&quarter), Ordering::Equal);
    }

    #[test]
    fn float_equality_uses_tolerance() {
        let a = Phase::from_charge_in_window(
            &ChargeValue::Floating(Complex64::new(1.0, 1.0)),
            0,
        )
        .unwrap();
        let b = Phase::from_charge_in_window(
            &ChargeValue::Floating(Complex64::from_polar(
                2.0,
                std::f64::consts::FRAC_PI_4 + 1e-12,
            )),
            0,
        )
        .unwrap();
        assert_eq!(a.phase_cmp(&b), Ordering::Equal);
        assert!((a.value() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn boundary_phase_one() {
        let one = exact(-3, 1, 0, 1, 0);
        assert!((one.value() - 1.0).abs() < 1e-15);
        assert_eq!(one.cmp_half_integer(2), Ordering::Equal);
        assert_eq!(one.cmp_half_integer(1), Ordering::Greater);
        let half = exact(0, 1, 2, 1, 0);
        assert_eq!(half.cmp_half_integer(1), Ordering::Equal);
        assert_eq!(half.cmp_half_integer(2), Ordering::Less);
        assert_eq!(exact(1, 1, 1, 1, 0).cmp_half_integer(1), Ordering::Less);
        assert_eq!(exact(-1, 1, 1, 1, 0).cmp_half_integer(1), Ordering::Greater);
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(Phase::from_charge_in_window(
            &ChargeValue::Exact(Qi::from_integers(1, 1, 0, 1)),
            0
        )
        .is_err());
        assert!(Phase::from_charge_in_window(
            &ChargeValue::Floating(Complex64::new(0.0, -1.0)),
            0
        )
        .is_err());
    }
}
