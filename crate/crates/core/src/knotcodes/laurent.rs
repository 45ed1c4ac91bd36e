//! Laurent polynomials in one variable with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::det::ExactRing;

/// `coeffs[k]` is the coefficient of t^(low + k). Kept trimmed: no zero at
/// either end, and the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.trim();
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Laurent::new(0, vec![c.into()])
    }

    /// c * t^e
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Laurent::new(e, vec![c.into()])
    }

    pub fn t() -> Self {
        Laurent::monomial(1, 1)
    }

    pub fn t_inv() -> Self {
        Laurent::monomial(1, -1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Value at an integer point. Negative powers must divide out exactly
    /// unless `t` is a unit, so this is only offered for polynomials with
    /// `low >= 0` or `t = ±1`.
    pub fn eval(&self, t: i64) -> BigInt {
        assert!(self.low >= 0 || t.abs() == 1, "cannot evaluate a negative power at {t}");
        let t = BigInt::from(t);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &t + c;
        }
        // for negative low, t = ±1 and t^-k = t^k
        acc * num_traits::pow(t, self.low.unsigned_abs() as usize)
    }

    /// Divides out the t-power and fixes the sign so that p(1) >= 0.
    pub fn normalized(&self) -> Laurent {
        let mut p = Laurent { low: 0, coeffs: self.coeffs.clone() };
        if p.coeffs.is_empty() {
            return p;
        }
        let at_one: BigInt = p.coeffs.iter().sum();
        if at_one.is_negative() || (at_one.is_zero() && p.coeffs.last().unwrap().is_negative()) {
            p = ExactRing::negated(&p);
        }
        p
    }

    pub fn scale(&self, c: &BigInt) -> Laurent {
        Laurent::new(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent::constant(1)
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(self, other: Laurent) -> Laurent {
        self.plus(&other)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, other: Laurent) -> Laurent {
        self.times(&other)
    }
}

impl ExactRing for Laurent {
    fn plus(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() {
            return other.clone();
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high).map(|e| self.coeff(e) + other.coeff(e)).collect();
        Laurent::new(low, coeffs)
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::new(self.low + other.low, coeffs)
    }

    fn negated(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Long division from the top; every quotient coefficient is an exact
    /// integer when the division is exact.
    fn div_exact(&self, other: &Self) -> Self {
        assert!(!other.coeffs.is_empty(), "division by zero");
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut rem = self.coeffs.clone();
        let d = other.coeffs.len();
        assert!(rem.len() >= d, "inexact division");
        let lead = other.coeffs.last().unwrap();
        let qlen = rem.len() - d + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + d - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            assert!(r.is_zero(), "inexact division");
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &qc * b;
            }
            q[k] = qc;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact division");
        Laurent::new(self.low - other.low, q)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i64;
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || e == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}
