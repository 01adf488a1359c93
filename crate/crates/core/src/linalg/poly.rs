//! Integer polynomials, with just enough structure to recognise products of
//! cyclotomic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Division by a monic polynomial; returns (quotient, remainder).
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + d].clone();
            if lead.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &lead * c;
            }
            quot[k] = lead;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// The n-th cyclotomic polynomial, via x^n - 1 = prod_{d | n} Phi_d.
    pub fn cyclotomic(n: u32) -> IntPoly {
        assert!(n >= 1, "cyclotomic index must be positive");
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        let mut p = IntPoly::new(coeffs);
        for d in (1..n).filter(|d| n % d == 0) {
            let (q, r) = p.div_rem_monic(&IntPoly::cyclotomic(d));
            debug_assert!(r.is_zero());
            p = q;
        }
        p
    }

    /// Writes a monic polynomial as prod Phi_n^k, if possible. Factors are
    /// returned as (n, k) with n increasing.
    pub fn cyclotomic_factorization(&self) -> Option<Vec<(u32, u32)>> {
        if !self.is_monic() {
            return None;
        }
        let deg = self.degree()? as u32;
        // phi(n) >= sqrt(n / 2), so no Phi_n with n > 2 deg^2 can divide.
        let bound = 2 * deg * deg + 2;
        let mut rest = self.clone();
        let mut factors = Vec::new();
        for n in 1..=bound {
            if rest.degree() == Some(0) {
                break;
            }
            if euler_phi(n) > rest.degree().unwrap_or(0) as u32 {
                continue;
            }
            let phi = IntPoly::cyclotomic(n);
            let mut k = 0;
            loop {
                let (q, r) = rest.div_rem_monic(&phi);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                k += 1;
            }
            if k > 0 {
                factors.push((n, k));
            }
        }
        (rest == IntPoly::one()).then_some(factors)
    }
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(IntPoly::cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(IntPoly::cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(IntPoly::cyclotomic(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(IntPoly::cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(IntPoly::cyclotomic(5), IntPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(IntPoly::cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(IntPoly::cyclotomic(8), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(IntPoly::cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn factorization() {
        // (x - 1)^2 (x^2 + x + 1)
        let p = IntPoly::cyclotomic(1)
            .mul(&IntPoly::cyclotomic(1))
            .mul(&IntPoly::cyclotomic(3));
        assert_eq!(p.cyclotomic_factorization(), Some(vec![(1, 2), (3, 1)]));
        // x^2 - 3x + 1 has real roots off the unit circle
        assert_eq!(IntPoly::from_i64(&[1, -3, 1]).cyclotomic_factorization(), None);
        assert_eq!(IntPoly::from_i64(&[1, 2]).cyclotomic_factorization(), None);
    }

    #[test]
    fn totient() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (n, &e) in (1..=12).zip(expected.iter()) {
            assert_eq!(euler_phi(n), e, "phi({n})");
        }
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[1, -2, 0, -1]).to_string(), "-x^3 - 2x + 1");
        assert_eq!(IntPoly::new(vec![]).to_string(), "0");
    }
}
