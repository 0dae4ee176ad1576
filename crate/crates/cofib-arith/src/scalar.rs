use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::ArithError;

pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Floor-reduce into [0, m).
pub fn rem_euclid(x: Q, m: Q) -> Q {
    let k = (x / m).floor();
    x - k * m
}

pub fn lcm_denoms<'a>(xs: impl IntoIterator<Item = &'a Q>) -> i64 {
    xs.into_iter().fold(1, |acc, x| acc.lcm(x.denom()))
}

pub fn parse_q(s: &str) -> Result<Q, ArithError> {
    let s = s.trim();
    let err = || ArithError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| err())?;
            let d: i64 = d.trim().parse().map_err(|_| err())?;
            if d <= 0 {
                return Err(err());
            }
            Ok(q(n, d))
        }
        None => s.parse::<i64>().map(qi).map_err(|_| err()),
    }
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_zero() || is_integer(x) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
