use std::fmt;
use std::str::FromStr;

use crate::error::{DensityError, Result};

/// Target density `alpha / beta`, always stored in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    alpha: u64,
    beta: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    /// Reduces `alpha / beta`. Fails when `beta == 0` or the ratio exceeds 1.
    pub fn new(alpha: u64, beta: u64) -> Result<Self> {
        if beta == 0 {
            return Err(DensityError::ZeroDenominator);
        }
        if alpha > beta {
            return Err(DensityError::DensityAboveOne { alpha, beta });
        }
        let g = gcd(alpha, beta);
        Ok(Self {
            alpha: alpha / g,
            beta: beta / g,
        })
    }

    pub const ZERO: Ratio = Ratio { alpha: 0, beta: 1 };
    pub const ONE: Ratio = Ratio { alpha: 1, beta: 1 };

    pub fn alpha(self) -> u64 {
        self.alpha
    }

    pub fn beta(self) -> u64 {
        self.beta
    }

    /// True for 0 and 1, the cases handled by run-length scanning.
    pub fn is_trivial(self) -> bool {
        self.alpha == 0 || self.alpha == self.beta
    }

    pub fn as_f64(self) -> f64 {
        self.alpha as f64 / self.beta as f64
    }

    pub(crate) fn require_nontrivial(self) -> Result<()> {
        if self.is_trivial() {
            Err(DensityError::TrivialRatio {
                alpha: self.alpha,
                beta: self.beta,
            })
        } else {
            Ok(())
        }
    }
}

/// Parses `"A/B"`, `"0"` or `"1"` and reduces to lowest terms.
///
/// Denominators larger than the stream are accepted; solvers report that no
/// span exists instead.
pub fn parse_ratio(text: &str) -> Result<Ratio> {
    text.parse()
}

impl FromStr for Ratio {
    type Err = DensityError;

    fn from_str(text: &str) -> Result<Self> {
        let malformed = || DensityError::MalformedRatio(text.to_owned());
        let number = |part: &str| -> Result<u64> {
            let part = part.trim();
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            part.parse().map_err(|_| malformed())
        };
        match text.split_once('/') {
            Some((a, b)) => Ratio::new(number(a)?, number(b)?),
            None => match number(text)? {
                0 => Ok(Ratio::ZERO),
                1 => Ok(Ratio::ONE),
                a => Err(DensityError::DensityAboveOne { alpha: a, beta: 1 }),
            },
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.alpha, self.beta)
    }
}
