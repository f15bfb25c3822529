//! Exact rational weight vectors, interpreted as `lambda + rho` in the
//! standard coordinates of `sl(n)`.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Coordinates `(t_1, ..., t_n)` of `lambda + rho`.
///
/// No normalization is applied: only coordinate differences matter for every
/// predicate in this crate, so shifted vectors are kept as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    coords: Vec<Rational64>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rational64>) -> Self {
        WeightVector { coords }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        WeightVector::new(coords.into_iter().map(Rational64::from_integer).collect())
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, i: usize) -> Rational64 {
        self.coords[i]
    }

    /// All pairwise differences are integers.
    pub fn is_integral(&self) -> bool {
        match self.coords.first() {
            None => true,
            Some(first) => self.coords.iter().all(|c| (c - first).is_integer()),
        }
    }

    pub fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NonIntegralWeight(self.to_string()))
        }
    }

    /// Consecutive differences `t_i - t_{i+1}` are all positive integers.
    pub fn is_ordered(&self) -> bool {
        self.coords.windows(2).all(|w| {
            let d = w[0] - w[1];
            d.is_integer() && d > Rational64::zero()
        })
    }

    pub fn shifted(&self, by: Rational64) -> Self {
        WeightVector::new(self.coords.iter().map(|c| c + by).collect())
    }

    pub fn without(&self, position: usize) -> Self {
        let mut coords = self.coords.clone();
        coords.remove(position);
        WeightVector::new(coords)
    }

    /// `rho = ((n-1)/2, (n-3)/2, ..., -(n-1)/2)`.
    pub fn rho(n: usize) -> Self {
        let two = Rational64::from_integer(2);
        let top = Rational64::from_integer(n as i64 - 1) / two;
        WeightVector::new(
            (0..n)
                .map(|i| top - Rational64::from_integer(i as i64))
                .collect(),
        )
    }
}

impl Neg for WeightVector {
    type Output = WeightVector;

    fn neg(self) -> WeightVector {
        WeightVector::new(self.coords.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;

    fn neg(self) -> WeightVector {
        -self.clone()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Comma separated integers or rationals `a/b`, e.g. `3/2,1/2,-1/2,-3/2`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::parse("weight", s));
        }
        let coords = trimmed
            .split(',')
            .map(|part| Rational64::from_str(part.trim()).map_err(|_| Error::parse("weight", s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightVector::new(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn rho_values() {
        assert_eq!(WeightVector::rho(2).coords(), &[r(1, 2), r(-1, 2)]);
        assert_eq!(
            WeightVector::rho(5),
            WeightVector::from_integers([2, 1, 0, -1, -2])
        );
        assert_eq!(
            WeightVector::rho(4).coords(),
            &[r(3, 2), r(1, 2), r(-1, 2), r(-3, 2)]
        );
    }

    #[test]
    fn parse_and_display() {
        let w: WeightVector = "3/2, 1/2,-1/2,-3/2".parse().unwrap();
        assert_eq!(w, WeightVector::rho(4));
        assert_eq!(w.to_string(), "3/2,1/2,-1/2,-3/2");
        let v: WeightVector = "1,0,2,-1,-2".parse().unwrap();
        assert_eq!(v.to_string(), "1,0,2,-1,-2");
        assert!("".parse::<WeightVector>().is_err());
        assert!("1,x".parse::<WeightVector>().is_err());
        assert!("1/0".parse::<WeightVector>().is_err());
    }

    #[test]
    fn integrality() {
        assert!(WeightVector::rho(4).is_integral());
        let bad: WeightVector = "1/2,0".parse().unwrap();
        assert!(!bad.is_integral());
        assert!(bad.require_integral().is_err());
    }

    #[test]
    fn ordered() {
        assert!(WeightVector::from_integers([3, 2, 0]).is_ordered());
        assert!(!WeightVector::from_integers([3, 3, 0]).is_ordered());
        assert!(!WeightVector::from_integers([0, 1]).is_ordered());
        assert!(WeightVector::from_integers([7]).is_ordered());
    }
}
