use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    #[default]
    Rationals,
    /// `GF(p)`; `p` is prime.
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Input(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("rat"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

/// Accepts `rat`, `gf:p` and `gf(p)`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rat") || s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::Input(format!("unknown field `{s}` (expected rat or gf:p)")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Input(format!("bad characteristic `{digits}`")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert_eq!("rat".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf:2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("gf(7)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("gf:4".parse::<FieldSpec>().is_err());
        assert!("gf:1".parse::<FieldSpec>().is_err());
        assert!("real".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(3).to_string(), "gf:3");
    }
}
