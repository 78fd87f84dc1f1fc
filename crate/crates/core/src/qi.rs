//! Exact arithmetic in Q[i], the Gaussian rationals.
//!
//! Central charges in exact mode take values here. All order decisions on
//! phases reduce to sign tests on these numbers, so no tolerance is needed
//! anywhere on the exact path.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Gaussian rational `re + im*i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Qi {
    pub re: BigRational,
    pub im: BigRational,
}

impl Qi {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Qi { re, im }
    }

    pub fn zero() -> Self {
        Qi {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn from_integers(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Qi {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Qi {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2, exactly.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from(BigInt::from(k));
        Qi {
            re: &self.re * &k,
            im: &self.im * &k,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Sign of im(conj(self) * other): positive when `other` sits at a
    /// strictly larger argument than `self` within a common open half-turn.
    pub fn cross_sign(&self, other: &Qi) -> std::cmp::Ordering {
        let cross = &self.re * &other.im - &self.im * &other.re;
        if cross.is_positive() {
            std::cmp::Ordering::Less
        } else if cross.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    }

    /// True when the value lies in the semiclosed upper half-plane:
    /// im > 0, or im = 0 with re < 0 (argument in (0, pi]).
    pub fn in_semiclosed_upper_half_plane(&self) -> bool {
        self.im.is_positive() || (self.im.is_zero() && self.re.is_negative())
    }
}

impl Add for &Qi {
    type Output = Qi;
    fn add(self, rhs: &Qi) -> Qi {
        Qi {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Qi {
    type Output = Qi;
    fn sub(self, rhs: &Qi) -> Qi {
        Qi {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Qi {
    type Output = Qi;
    fn mul(self, rhs: &Qi) -> Qi {
        Qi {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}
