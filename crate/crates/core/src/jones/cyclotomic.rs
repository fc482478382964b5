use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::poly::LaurentPoly;

/// `Phi_20(s) = s^8 - s^6 + s^4 - s^2 + 1`, low degree first.
const PHI20: [i64; 9] = [1, 0, -1, 0, 1, 0, -1, 0, 1];

/// Exponents `k` with `gcd(k, 20) = 1`: the Galois group of `Q(zeta_20)`.
pub const GALOIS_EXPONENTS: [u32; 8] = [1, 3, 7, 9, 11, 13, 17, 19];

/// An element of `Z[zeta_20]` in the basis `1, s, ..., s^7`, where `s` is a
/// primitive 20th root of unity. Coordinates are canonical, so the element is
/// zero exactly when every coordinate is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    coords: [BigInt; 8],
}

impl CyclotomicValue {
    /// Reduces a Laurent polynomial in `s`: exponents mod 20 first (since
    /// `s^20 = 1`), then division by the monic `Phi_20`.
    pub fn reduce(p: &LaurentPoly) -> Self {
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); 20];
        for (e, c) in p.terms() {
            acc[e.rem_euclid(20) as usize] += c;
        }
        for deg in (8..20).rev() {
            let lead = std::mem::take(&mut acc[deg]);
            if lead.is_zero() {
                continue;
            }
            // subtract lead * s^(deg-8) * Phi_20
            for (k, &c) in PHI20.iter().enumerate() {
                if c != 0 {
                    acc[deg - 8 + k] -= &lead * c;
                }
            }
        }
        let mut coords: [BigInt; 8] = Default::default();
        for (slot, v) in coords.iter_mut().zip(acc) {
            *slot = v;
        }
        CyclotomicValue { coords }
    }

    pub fn one() -> Self {
        Self::reduce(&LaurentPoly::one())
    }

    pub fn coords(&self) -> &[BigInt; 8] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn as_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coords.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    /// The automorphism `s -> s^k`, for `k` coprime to 20.
    pub fn galois(&self, k: u32) -> Self {
        assert!(GALOIS_EXPONENTS.contains(&(k % 20)), "{k} is not a unit mod 20");
        Self::reduce(&self.as_poly().substitute_power(k as i64))
    }

    /// Numerical value at `s = exp(i pi / 10)`, so `t = s^2 = exp(i pi / 5)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coords.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = std::f64::consts::PI * i as f64 / 10.0;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }
}

impl std::ops::Mul for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn mul(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        CyclotomicValue::reduce(&(&self.as_poly() * &rhs.as_poly()))
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_poly().format_in("s"))
    }
}

impl Serialize for CyclotomicValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// The value of a polynomial in `s = t^(1/2)` at `t = exp(i pi / 5)`.
pub fn eval_at_fifth_root(p: &LaurentPoly) -> CyclotomicValue {
    CyclotomicValue::reduce(p)
}
