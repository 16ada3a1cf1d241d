use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::parse_rational;
use crate::matrix::Scalar;

/// Mixing parameter of `A_alpha = alpha*D + (1 - alpha)*A`.
///
/// `Exact` values (written `p/q`) switch computations that support it to
/// rational arithmetic; `Float` values stay in `f64`.
#[derive(Clone, Debug, PartialEq)]
pub enum Alpha {
    Float(f64),
    Exact(BigRational),
}

impl Alpha {
    pub fn exact(p: i64, q: i64) -> Self {
        Alpha::Exact(BigRational::new(p.into(), q.into()))
    }

    pub fn value(&self) -> f64 {
        match self {
            Alpha::Float(v) => *v,
            Alpha::Exact(r) => r.to_f64(),
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Alpha::Exact(r) => Some(r),
            Alpha::Float(_) => None,
        }
    }

    /// Fails unless `0 <= alpha <= 1`.
    pub fn check_closed_unit(&self) -> Result<()> {
        let ok = match self {
            Alpha::Float(v) => (0.0..=1.0).contains(v),
            Alpha::Exact(r) => !(r < &BigRational::zero() || r > &BigRational::one()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(self.value(), "[0, 1]"))
        }
    }
}

impl From<f64> for Alpha {
    fn from(v: f64) -> Self {
        Alpha::Float(v)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Float(v) => write!(f, "{v}"),
            Alpha::Exact(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    /// `p/q` and plain integers parse as exact, anything else as a decimal
    /// float.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parameter {
            family: "alpha".into(),
            reason: format!("cannot parse {s:?} as a decimal or p/q fraction"),
        };
        if s.contains('/') || s.parse::<i64>().is_ok() {
            parse_rational(s).map(Alpha::Exact).ok_or_else(bad)
        } else {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(Alpha::Float)
                .ok_or_else(bad)
        }
    }
}

/// Parses a comma-separated grid such as `0,1/4,0.5`.
pub fn parse_grid(s: &str) -> Result<Vec<Alpha>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}
