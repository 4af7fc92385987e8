use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::rational;
use crate::error::{Error, Result};

/// Graphs whose Lagrangian has a closed form after block reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormName {
    Complete {
        t: usize,
        r: usize,
    },
    K4Minus,
    K6Minus,
    K8Minus,
    /// Upper bound for the block polynomial `x^3 + 8y^3 + 18x^2y + 45xy^2`
    /// with `3x + 6y = 1`.
    F3ComplementBound,
}

impl FromStr for ClosedFormName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        if matches!(
            norm.as_str(),
            "F3-COMPLEMENT" | "F3COMPLEMENT" | "F3-COMPLEMENT-BOUND" | "F3COMPLEMENTBOUND"
        ) {
            return Ok(ClosedFormName::F3ComplementBound);
        }
        let unknown = || Error::UnknownName(s.to_string());
        let body = norm.strip_prefix('K').ok_or_else(unknown)?;
        let (body, minus) = match body.strip_suffix('-') {
            Some(b) => (b, true),
            None => (body, false),
        };
        let (t, r) = match body.split_once('^') {
            Some((t, r)) => (t, r),
            None => (body, "3"),
        };
        let t: usize = t.parse().map_err(|_| unknown())?;
        let r: usize = r.parse().map_err(|_| unknown())?;
        match (minus, t, r) {
            (false, t, r) if t >= r && r >= 1 => Ok(ClosedFormName::Complete { t, r }),
            (true, 4, 3) => Ok(ClosedFormName::K4Minus),
            (true, 6, 3) => Ok(ClosedFormName::K6Minus),
            (true, 8, 3) => Ok(ClosedFormName::K8Minus),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for ClosedFormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormName::Complete { t, r } => write!(f, "K{t}^{r}"),
            ClosedFormName::K4Minus => write!(f, "K4^3-"),
            ClosedFormName::K6Minus => write!(f, "K6^3-"),
            ClosedFormName::K8Minus => write!(f, "K8^3-"),
            ClosedFormName::F3ComplementBound => write!(f, "F3-complement"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm {
    pub name: ClosedFormName,
    pub value: f64,
    pub exact: Option<BigRational>,
    /// `(block size, weight of each vertex in the block)`, in vertex order.
    pub blocks: Vec<(usize, f64)>,
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

pub fn closed_form(name: ClosedFormName) -> ClosedForm {
    let (value, exact, blocks) = match name {
        ClosedFormName::Complete { t, r } => {
            let q = BigRational::new(binomial(t, r), BigInt::from(t).pow(r as u32));
            (
                q.to_f64().unwrap_or(f64::NAN),
                Some(q),
                vec![(t, 1.0 / t as f64)],
            )
        }
        ClosedFormName::K4Minus => {
            let q = rational(4, 81);
            (
                q.to_f64().unwrap_or(f64::NAN),
                Some(q),
                vec![(1, 1.0 / 3.0), (3, 2.0 / 9.0)],
            )
        }
        ClosedFormName::K6Minus => {
            let a = (3.0 - 6f64.sqrt()) / 3.0;
            let v = a * a * a - 3.0 * a * a + a;
            (v, None, vec![(3, a), (3, (1.0 - 3.0 * a) / 3.0)])
        }
        ClosedFormName::K8Minus => {
            let a = (4.0 - 13f64.sqrt()) / 3.0;
            let v = (5.0 * a * a * a - 20.0 * a * a + 5.0 * a) / 3.0;
            (v, None, vec![(5, a), (3, (1.0 - 5.0 * a) / 3.0)])
        }
        ClosedFormName::F3ComplementBound => {
            let y = (873f64.sqrt() - 15.0) / 162.0;
            let x = (1.0 - 6.0 * y) / 3.0;
            let v = x * x * x + 8.0 * y * y * y + 18.0 * x * x * y + 45.0 * x * y * y;
            (v, None, vec![(3, x), (6, y)])
        }
    };
    ClosedForm {
        name,
        value,
        exact,
        blocks,
    }
}

/// `max_{0 <= x <= 1} x(1-x)^2 / 2 + c (1-x)^3` for `0 <= c`, with its maximizer.
pub fn chain_bound(c: &BigRational) -> (BigRational, BigRational) {
    let one = rational(1, 1);
    let six_c = rational(6, 1) * c;
    let x = if six_c >= one {
        BigRational::zero()
    } else {
        (&one - &six_c) / (rational(3, 1) - &six_c)
    };
    let y = &one - &x;
    let v = &x * &y * &y / rational(2, 1) + c * &y * &y * &y;
    (x, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(
            "K6^3".parse::<ClosedFormName>().unwrap(),
            ClosedFormName::Complete { t: 6, r: 3 }
        );
        assert_eq!(
            "K_6^{3-}".parse::<ClosedFormName>().unwrap(),
            ClosedFormName::K6Minus
        );
        assert_eq!(
            "k8-".parse::<ClosedFormName>().unwrap(),
            ClosedFormName::K8Minus
        );
        assert_eq!(
            "K5".parse::<ClosedFormName>().unwrap(),
            ClosedFormName::Complete { t: 5, r: 3 }
        );
        assert!("K5-".parse::<ClosedFormName>().is_err());
        assert!("Q3".parse::<ClosedFormName>().is_err());
    }

    #[test]
    fn known_values() {
        let c = closed_form(ClosedFormName::Complete { t: 6, r: 3 });
        assert_eq!(c.exact.unwrap(), rational(5, 54));
        let c = closed_form(ClosedFormName::K8Minus);
        assert!(c.value < 0.1077 && c.value > 0.1076);
        let c = closed_form(ClosedFormName::K6Minus);
        assert!(c.value < 0.0887 && c.value > 0.0886);
        for name in [
            ClosedFormName::K6Minus,
            ClosedFormName::K8Minus,
            ClosedFormName::F3ComplementBound,
        ] {
            let c = closed_form(name);
            let total: f64 = c.blocks.iter().map(|(s, w)| *s as f64 * w).sum();
            assert!((total - 1.0).abs() < 1e-15, "{name}");
        }
    }

    #[test]
    fn chains() {
        assert_eq!(
            chain_bound(&rational(2, 25)),
            (rational(13, 63), rational(1250, 11907))
        );
        assert_eq!(
            chain_bound(&rational(2, 27)),
            (rational(5, 23), rational(54, 529))
        );
        assert_eq!(
            chain_bound(&rational(0, 1)),
            (rational(1, 3), rational(2, 27))
        );
    }
}
