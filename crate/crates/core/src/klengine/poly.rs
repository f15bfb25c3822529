use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};

/// Integer polynomial in `q`, dense, constant term first, with no trailing
/// zero coefficients (the zero polynomial has no coefficients at all).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolynomialQ {
    coeffs: Vec<i64>,
}

impl PolynomialQ {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolynomialQ { coeffs }
    }

    pub fn zero() -> Self {
        PolynomialQ::default()
    }

    pub fn one() -> Self {
        PolynomialQ { coeffs: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `q^k * self`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return PolynomialQ::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        PolynomialQ { coeffs }
    }

    /// `self += c * q^k * other`.
    pub fn add_scaled_shifted(&mut self, c: i64, k: usize, other: &PolynomialQ) {
        if c == 0 || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() + k {
            self.coeffs.resize(other.coeffs.len() + k, 0);
        }
        for (i, &a) in other.coeffs.iter().enumerate() {
            self.coeffs[i + k] += c * a;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Parse the cache encoding `c0,c1,...`; the empty string is zero.
    pub fn parse_coeffs(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(PolynomialQ::zero());
        }
        let coeffs = text
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("polynomial coefficients", text))?;
        Ok(PolynomialQ::new(coeffs))
    }

    pub fn coeffs_string(&self) -> String {
        self.coeffs
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Add for &PolynomialQ {
    type Output = PolynomialQ;

    fn add(self, rhs: &PolynomialQ) -> PolynomialQ {
        let mut out = self.clone();
        out.add_scaled_shifted(1, 0, rhs);
        out
    }
}

impl Sub for &PolynomialQ {
    type Output = PolynomialQ;

    fn sub(self, rhs: &PolynomialQ) -> PolynomialQ {
        let mut out = self.clone();
        out.add_scaled_shifted(-1, 0, rhs);
        out
    }
}

impl fmt::Display for PolynomialQ {
    /// `1+q`, `1+2q+q^3`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let abs = c.unsigned_abs();
            let mag = match (k, abs) {
                (0, a) => a.to_string(),
                (_, 1) => String::new(),
                (_, a) => a.to_string(),
            };
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                k => format!("q^{k}"),
            };
            write!(f, "{sign}{mag}{var}")?;
            first = false;
        }
        Ok(())
    }
}
