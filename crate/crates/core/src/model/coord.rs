use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::model::ModelError;

/// Exact rational position on the line, always in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord(BigRational);

impl Coord {
    pub fn new(numer: i64, denom: i64) -> Coord {
        assert!(denom != 0, "zero denominator");
        Coord(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn int(v: i64) -> Coord {
        Coord(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Coord {
        Coord(BigRational::zero())
    }

    pub fn from_ratio(r: BigRational) -> Coord {
        Coord(r)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn add_int(&self, k: i64) -> Coord {
        Coord(&self.0 + BigRational::from_integer(BigInt::from(k)))
    }

    /// `self + (other - self) * num / den`
    pub fn lerp(&self, other: &Coord, num: u64, den: u64) -> Coord {
        let t = BigRational::new(BigInt::from(num), BigInt::from(den));
        Coord(&self.0 + (&other.0 - &self.0) * t)
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Lossy conversion, used only for drawing.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Coord {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Coord, ModelError> {
        let bad = || ModelError::BadNumber(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Coord(BigRational::new(p, q)));
        }
        if let Some((ip, fp)) = t.split_once('.') {
            let neg = ip.starts_with('-');
            let ip = ip.trim_start_matches(['-', '+']);
            if fp.is_empty() && ip.is_empty() {
                return Err(bad());
            }
            if !ip.chars().all(|c| c.is_ascii_digit()) || !fp.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let digits = format!("{}{}", ip, fp);
            let mut num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
            if neg {
                num = -num;
            }
            let den = num_traits::pow(BigInt::from(10), fp.len());
            return Ok(Coord(BigRational::new(num, den)));
        }
        let p: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Coord(BigRational::from_integer(p)))
    }
}

/// A coordinate extended by the two infinities used in unbounded bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtCoord {
    NegInf,
    Fin(Coord),
    PosInf,
}

impl ExtCoord {
    pub fn int(v: i64) -> ExtCoord {
        ExtCoord::Fin(Coord::int(v))
    }

    pub fn finite(&self) -> Option<&Coord> {
        match self {
            ExtCoord::Fin(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtCoord::Fin(_))
    }

    fn rank(&self) -> u8 {
        match self {
            ExtCoord::NegInf => 0,
            ExtCoord::Fin(_) => 1,
            ExtCoord::PosInf => 2,
        }
    }
}

impl PartialOrd for ExtCoord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtCoord {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtCoord::Fin(a), ExtCoord::Fin(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl From<Coord> for ExtCoord {
    fn from(c: Coord) -> ExtCoord {
        ExtCoord::Fin(c)
    }
}

impl PartialEq<Coord> for ExtCoord {
    fn eq(&self, other: &Coord) -> bool {
        matches!(self, ExtCoord::Fin(c) if c == other)
    }
}

impl PartialOrd<Coord> for ExtCoord {
    fn partial_cmp(&self, other: &Coord) -> Option<Ordering> {
        Some(match self {
            ExtCoord::NegInf => Ordering::Less,
            ExtCoord::Fin(c) => c.cmp(other),
            ExtCoord::PosInf => Ordering::Greater,
        })
    }
}

impl fmt::Display for ExtCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtCoord::NegInf => f.write_str("-inf"),
            ExtCoord::Fin(c) => c.fmt(f),
            ExtCoord::PosInf => f.write_str("+inf"),
        }
    }
}

impl FromStr for ExtCoord {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<ExtCoord, ModelError> {
        match s.trim() {
            "-inf" | "-infinity" | "-Infinity" => Ok(ExtCoord::NegInf),
            "+inf" | "inf" | "+infinity" | "infinity" | "Infinity" => Ok(ExtCoord::PosInf),
            t => Ok(ExtCoord::Fin(t.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("3/6".parse::<Coord>().unwrap(), Coord::new(1, 2));
        assert_eq!("-4".parse::<Coord>().unwrap(), Coord::int(-4));
        assert_eq!("0.25".parse::<Coord>().unwrap(), Coord::new(1, 4));
        assert_eq!("-1.5".parse::<Coord>().unwrap(), Coord::new(-3, 2));
        assert!("1/0".parse::<Coord>().is_err());
        assert!("abc".parse::<Coord>().is_err());
        assert!("".parse::<Coord>().is_err());
    }

    #[test]
    fn canonical_form() {
        let c = Coord::new(6, -4);
        assert_eq!(c.numer(), &BigInt::from(-3));
        assert_eq!(c.denom(), &BigInt::from(2));
        assert_eq!(c.to_string(), "-3/2");
        assert_eq!(Coord::int(7).to_string(), "7");
    }

    #[test]
    fn ext_order() {
        let xs = [ExtCoord::NegInf, ExtCoord::int(-5), ExtCoord::Fin(Coord::new(1, 3)), ExtCoord::int(2), ExtCoord::PosInf];
        for w in xs.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!("+inf".parse::<ExtCoord>().unwrap(), ExtCoord::PosInf);
        assert_eq!("-inf".parse::<ExtCoord>().unwrap(), ExtCoord::NegInf);
        assert!(ExtCoord::NegInf < Coord::int(-1000));
    }

    #[test]
    fn lerp_exact() {
        let a = Coord::int(0);
        let b = Coord::int(1);
        assert_eq!(a.lerp(&b, 1, 3), Coord::new(1, 3));
    }
}
