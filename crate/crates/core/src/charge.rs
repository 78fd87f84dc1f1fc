//! Central charges on the model lattice.
//!
//! A charge is an additive map from the rank-n lattice to the complex plane,
//! stored componentwise. Exact charges keep Gaussian-rational components and
//! support tolerance-free phase comparison; floating charges arise from
//! transcendental group actions (rotations, rescalings).

use crate::error::{Error, Result};
use crate::model::LatticeClass;
use crate::qi::Qi;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChargeMode {
    Exact,
    Floating,
}

/// Componentwise central charge `Z(v) = sum_i values[i] * v[i]`.
#[derive(Clone, Debug, PartialEq)]
pub enum CentralCharge {
    Exact(Vec<Qi>),
    Floating(Vec<Complex64>),
}

impl CentralCharge {
    pub fn rank(&self) -> usize {
        match self {
            CentralCharge::Exact(v) => v.len(),
            CentralCharge::Floating(v) => v.len(),
        }
    }

    pub fn mode(&self) -> ChargeMode {
        match self {
            CentralCharge::Exact(_) => ChargeMode::Exact,
            CentralCharge::Floating(_) => ChargeMode::Floating,
        }
    }

    pub fn to_floating(&self) -> CentralCharge {
        match self {
            CentralCharge::Exact(v) => {
                CentralCharge::Floating(v.iter().map(Qi::to_complex).collect())
            }
            CentralCharge::Floating(v) => CentralCharge::Floating(v.clone()),
        }
    }

    pub fn eval(&self, class: &LatticeClass) -> Result<ChargeValue> {
        if class.0.len() != self.rank() {
            return Err(Error::ModelMismatch(format!(
                "class of rank {} against charge of rank {}",
                class.0.len(),
                self.rank()
            )));
        }
        Ok(match self {
            CentralCharge::Exact(vals) => {
                let mut acc = Qi::zero();
                for (v, c) in vals.iter().zip(class.0.iter()) {
                    if *c != 0 {
                        acc = &acc + &v.scale_int(*c);
                    }
                }
                ChargeValue::Exact(acc)
            }
            CentralCharge::Floating(vals) => {
                let mut acc = Complex64::new(0.0, 0.0);
                for (v, c) in vals.iter().zip(class.0.iter()) {
                    acc += v * (*c as f64);
                }
                ChargeValue::Floating(acc)
            }
        })
    }

    /// Componentwise action of `exp(-i*pi*lambda)`. Integral real lambda with
    /// zero imaginary part stays exact (a sign flip); anything else lands in
    /// floating mode.
    pub fn rotated(&self, lambda: Complex64) -> CentralCharge {
        if lambda.im == 0.0 && lambda.re.fract() == 0.0 {
            let k = lambda.re as i64;
            if k.rem_euclid(2) == 0 {
                return self.clone();
            }
            return match self {
                CentralCharge::Exact(v) => {
                    CentralCharge::Exact(v.iter().map(|z| -z).collect())
                }
                CentralCharge::Floating(v) => {
                    CentralCharge::Floating(v.iter().map(|z| -z).collect())
                }
            };
        }
        let factor = (Complex64::new(0.0, -std::f64::consts::PI) * lambda).exp();
        let vals = match self {
            CentralCharge::Exact(v) => v.iter().map(Qi::to_complex).collect::<Vec<_>>(),
            CentralCharge::Floating(v) => v.clone(),
        };
        CentralCharge::Floating(vals.iter().map(|z| z * factor).collect())
    }

    /// Apply a real 2x2 matrix to every component (charge viewed as valued
    /// in R^2). Always floating.
    pub fn matrix_applied(&self, m: [[f64; 2]; 2]) -> CentralCharge {
        let vals = match self {
            CentralCharge::Exact(v) => v.iter().map(Qi::to_complex).collect::<Vec<_>>(),
            CentralCharge::Floating(v) => v.clone(),
        };
        CentralCharge::Floating(
            vals.iter()
                .map(|z| {
                    Complex64::new(
                        m[0][0] * z.re + m[0][1] * z.im,
                        m[1][0] * z.re + m[1][1] * z.im,
                    )
                })
                .collect(),
        )
    }
}

/// The value of a charge on one class.
#[derive(Clone, Debug, PartialEq)]
pub enum ChargeValue {
    Exact(Qi),
    Floating(Complex64),
}

impl ChargeValue {
    pub fn zero_like(mode: ChargeMode) -> ChargeValue {
        match mode {
            ChargeMode::Exact => ChargeValue::Exact(Qi::zero()),
            ChargeMode::Floating => ChargeValue::Floating(Complex64::new(0.0, 0.0)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ChargeValue::Exact(q) => q.is_zero(),
            ChargeValue::Floating(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            ChargeValue::Exact(q) => q.to_complex(),
            ChargeValue::Floating(z) => *z,
        }
    }

    pub fn add(&self, other: &ChargeValue) -> ChargeValue {
        match (self, other) {
            (ChargeValue::Exact(a), ChargeValue::Exact(b)) => ChargeValue::Exact(a + b),
            _ => ChargeValue::Floating(self.to_complex() + other.to_complex()),
        }
    }

    pub fn negated(&self) -> ChargeValue {
        match self {
            ChargeValue::Exact(q) => ChargeValue::Exact(-q),
            ChargeValue::Floating(z) => ChargeValue::Floating(-z),
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_complex().norm()
    }
}

/// JSON form of one charge component: [re_num, re_den, im_num, im_den].
pub type ChargeComponentFile = [serde_json::Number; 4];

pub fn charge_from_file(
    components: &[ChargeComponentFile],
    mode: ChargeMode,
) -> Result<CentralCharge> {
    match mode {
        ChargeMode::Exact => {
            let mut vals = Vec::with_capacity(components.len());
            for (i, c) in components.iter().enumerate() {
                let ints: Vec<i64> = c
                    .iter()
                    .map(|n| {
                        n.as_i64().ok_or_else(|| {
                            Error::Parse(format!(
                                "exact charge component {i} must use integer numerators/denominators, got {n}"
                            ))
                        })
                    })
                    .collect::<Result<_>>()?;
                if ints[1] == 0 || ints[3] == 0 {
                    return Err(Error::Parse(format!(
                        "zero denominator in charge component {i}"
                    )));
                }
                vals.push(Qi::from_integers(ints[0], ints[1], ints[2], ints[3]));
            }
            Ok(CentralCharge::Exact(vals))
        }
        ChargeMode::Floating => {
            let mut vals = Vec::with_capacity(components.len());
            for (i, c) in components.iter().enumerate() {
                let fs: Vec<f64> = c.iter().map(|n| n.as_f64().unwrap_or(f64::NAN)).collect();
                if fs[1] == 0.0 || fs[3] == 0.0 {
                    return Err(Error::Parse(format!(
                        "zero denominator in charge component {i}"
                    )));
                }
                vals.push(Complex64::new(fs[0] / fs[1], fs[2] / fs[3]));
            }
            Ok(CentralCharge::Floating(vals))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_is_additive() {
        let z = CentralCharge::Exact(vec![
            Qi::from_integers(0, 1, 1, 1),
            Qi::from_integers(1, 1, 1, 1),
        ]);
        let x = z.eval(&LatticeClass(vec![1, 1])).unwrap();
        assert_eq!(x, ChargeValue::Exact(Qi::from_integers(1, 1, 2, 1)));
        let s1 = z.eval(&LatticeClass(vec![1, 0])).unwrap();
        let s2 = z.eval(&LatticeClass(vec![0, 1])).unwrap();
        assert_eq!(s1.add(&s2), x);
    }

    #[test]
    fn rotation_by_one_is_exact_negation() {
        let z = CentralCharge::Exact(vec![Qi::from_integers(2, 3, 5, 7)]);
        let r = z.rotated(Complex64::new(1.0, 0.0));
        assert_eq!(
            r,
            CentralCharge::Exact(vec![Qi::from_integers(-2, 3, -5, 7)])
        );
        let r2 = z.rotated(Complex64::new(2.0, 0.0));
        assert_eq!(r2, z);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let z = CentralCharge::Exact(vec![Qi::from_integers(0, 1, 1, 1)]);
        assert!(z.eval(&LatticeClass(vec![1, 0])).is_err());
    }
}
