//! Ordinal arithmetic below `w^w`, in Cantor normal form.
//!
//! Every rank and bound produced by this crate lies below `w^w`, so an
//! ordinal is a finite sum `w^e1*c1 + ... + w^ek*ck` with strictly
//! decreasing natural exponents and positive integer coefficients. The
//! empty sum denotes 0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// An ordinal strictly below `w^w`.
///
/// Stored as its Cantor normal form term list. The derived lexicographic
/// order on the term list coincides with the ordinal order, so `Ord` can
/// be derived.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordinal {
    /// `(exponent, coefficient)` pairs, exponents strictly decreasing,
    /// coefficients >= 1.
    terms: Vec<(u32, u64)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn from_nat(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Ordinal { terms: vec![(0, n)] }
        }
    }

    /// `w^n`; `omega_pow(0)` is 1.
    pub fn omega_pow(n: u32) -> Self {
        Ordinal { terms: vec![(n, 1)] }
    }

    pub fn omega() -> Self {
        Self::omega_pow(1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns `Some(n)` when the ordinal is the natural number `n`.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    pub fn terms(&self) -> &[(u32, u64)] {
        &self.terms
    }

    pub fn cmp_ord(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    /// Ordinal sum. Terms of `self` below the leading exponent of `rhs`
    /// are absorbed.
    pub fn add(&self, rhs: &Self) -> Self {
        let Some(&(lead, lead_coeff)) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(u32, u64)> = self
            .terms
            .iter()
            .copied()
            .take_while(|&(e, _)| e > lead)
            .collect();
        if let Some(&(e, c)) = self.terms.iter().find(|&&(e, _)| e == lead) {
            debug_assert_eq!(e, lead);
            terms.push((lead, c + lead_coeff));
        } else {
            terms.push((lead, lead_coeff));
        }
        terms.extend(rhs.terms.iter().skip(1).copied());
        Ordinal { terms }
    }

    /// Ordinal product, by left distribution over the terms of `rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (lead, lead_coeff) = self.terms[0];
        let mut acc = Self::zero();
        for &(e, c) in &rhs.terms {
            let part = if e > 0 {
                // a * w^e absorbs everything below a's leading term.
                Ordinal { terms: vec![(lead + e, c)] }
            } else {
                // a * c = w^lead*(lead_coeff*c) + (rest of a).
                let mut terms = vec![(lead, lead_coeff * c)];
                terms.extend(self.terms.iter().skip(1).copied());
                Ordinal { terms }
            };
            acc = acc.add(&part);
        }
        acc
    }
}

/// Error produced when parsing the ordinal text form fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseOrdinalError {
    pub message: String,
}

impl fmt::Display for ParseOrdinalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid ordinal: {}", self.message)
    }
}

impl std::error::Error for ParseOrdinalError {}

impl fmt::Display for Ordinal {
    /// Renders the compact text form: `w^e*c` terms joined by ` + `,
    /// with `w^0*c` shortened to `c`, `w^1` to `w` and `*1` dropped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "w")?,
                (1, c) => write!(f, "w*{c}")?,
                (e, 1) => write!(f, "w^{e}")?,
                (e, c) => write!(f, "w^{e}*{c}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = ParseOrdinalError;

    /// Parses `0` or ` + `-separated terms `w^e*c` (shorthands `w`,
    /// `w*c`, `w^e`, plain naturals). Terms are summed left to right, so
    /// non-canonical inputs like `1 + w` denote the absorbed sum `w`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: &str| ParseOrdinalError { message: m.to_string() };
        let s = s.trim();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut acc = Ordinal::zero();
        for part in s.split('+') {
            let part = part.trim();
            let term = if let Some(rest) = part.strip_prefix('w') {
                let (exp_str, coeff_str) = match rest.split_once('*') {
                    Some((e, c)) => (e.trim(), Some(c.trim())),
                    None => (rest.trim(), None),
                };
                let exp: u32 = if exp_str.is_empty() {
                    1
                } else {
                    let digits = exp_str
                        .strip_prefix('^')
                        .ok_or_else(|| err(&format!("malformed term `{part}`")))?;
                    digits
                        .trim()
                        .parse()
                        .map_err(|_| err(&format!("bad exponent in `{part}`")))?
                };
                let coeff: u64 = match coeff_str {
                    Some(c) => c
                        .parse()
                        .map_err(|_| err(&format!("bad coefficient in `{part}`")))?,
                    None => 1,
                };
                if coeff == 0 {
                    Ordinal::zero()
                } else {
                    Ordinal { terms: vec![(exp, coeff)] }
                }
            } else {
                let n: u64 = part
                    .parse()
                    .map_err(|_| err(&format!("malformed term `{part}`")))?;
                Ordinal::from_nat(n)
            };
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn comparison_follows_exponent_dominance() {
        assert_eq!(ord("w^2").cmp_ord(&ord("w*5 + 3")), Ordering::Greater);
        assert_eq!(ord("w + 1").cmp_ord(&ord("w + 1")), Ordering::Equal);
        assert_eq!(Ordinal::zero().cmp_ord(&ord("1")), Ordering::Less);
        assert_eq!(ord("w").cmp_ord(&ord("w + 1")), Ordering::Less);
    }

    #[test]
    fn addition_absorbs_small_left_terms() {
        assert_eq!(ord("1").add(&ord("w")), ord("w"));
        assert_eq!(ord("w").add(&ord("1")), ord("w + 1"));
        assert_eq!(ord("w*2 + 3").add(&ord("w")), ord("w*3"));
    }

    #[test]
    fn multiplication_distributes_on_the_left() {
        assert_eq!(ord("w + 1").mul(&ord("2")), ord("w*2 + 1"));
        // (w+1) + (w+1) computed by adds must agree.
        assert_eq!(ord("w + 1").add(&ord("w + 1")), ord("w*2 + 1"));
        assert_eq!(ord("w^2 + w*4").mul(&Ordinal::zero()), Ordinal::zero());
        assert_eq!(ord("2").mul(&ord("w")), ord("w"));
    }

    #[test]
    fn omega_pow_base_cases() {
        assert_eq!(Ordinal::omega_pow(0), ord("1"));
        assert_eq!(Ordinal::omega_pow(1), ord("w"));
        assert_eq!(Ordinal::omega_pow(2), ord("w^2"));
    }

    #[test]
    fn rendering_is_compact() {
        assert_eq!(ord("w^2*1 + w^0*3").to_string(), "w^2 + 3");
        assert_eq!(ord("w^0*2").to_string(), "2");
        assert_eq!(Ordinal::zero().to_string(), "0");
        assert_eq!(ord("w^3*2 + w*7 + 4").to_string(), "w^3*2 + w*7 + 4");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Ordinal>().is_err());
        assert!("w^".parse::<Ordinal>().is_err());
        assert!("w2".parse::<Ordinal>().is_err());
        assert!("x + 1".parse::<Ordinal>().is_err());
    }
}
