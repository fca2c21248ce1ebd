//! Exact arithmetic in the ring of polynomials with rational exponents and
//! integer coefficients.
//!
//! Every spectrum polynomial produced by this crate lives here: a finite
//! formal sum `sum c_a * t^a` with `a` an exact rational in lowest terms and
//! `c_a` a nonzero integer. The zero polynomial is the empty sum.
//!
//! The coefficient scalar is generic over [`Coefficient`] so the ring core is
//! usable with machine integers in hot paths; the crate-level alias
//! [`crate::FracPoly`] fixes it to `BigInt`, which the spectrum engine uses
//! throughout (inclusion-exclusion over many divisor components can exceed
//! 64-bit range).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Scalar types usable as polynomial coefficients.
///
/// `Signed` gives ring arithmetic plus sign queries for display; `Into<BigInt>`
/// keeps evaluation exact regardless of the concrete scalar.
pub trait Coefficient: Clone + Eq + Signed + fmt::Display + Into<BigInt> {}

impl<T> Coefficient for T where T: Clone + Eq + Signed + fmt::Display + Into<BigInt> {}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// A fractional exponent met an evaluation point other than 0 or 1, where
    /// no exact rational power exists.
    #[error("non-integer exponent {exponent} cannot be evaluated at general point {point}")]
    NonIntegerExponentAtGeneralPoint { exponent: String, point: String },
    /// Evaluation at 0 with a negative exponent present.
    #[error("negative exponent {exponent} cannot be evaluated at 0")]
    NegativeExponentAtZero { exponent: String },
    /// Exponent too large to raise to exactly (far beyond anything the
    /// stratum formula produces).
    #[error("exponent {exponent} out of range for exact exponentiation")]
    ExponentOutOfRange { exponent: String },
}

/// Parse failure for the canonical text form, with a byte offset into the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid polynomial at byte {position}: {message}")]
pub struct ParsePolyError {
    pub position: usize,
    pub message: String,
}

/// Sparse polynomial with exact rational exponents and integer coefficients.
///
/// Invariants: no stored coefficient is zero, exponents are distinct reduced
/// rationals (guaranteed by `BigRational`), and terms iterate in ascending
/// exponent order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracPoly<C: Coefficient> {
    terms: BTreeMap<BigRational, C>,
}

impl<C: Coefficient> Default for FracPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> FracPoly<C> {
    pub fn zero() -> Self {
        FracPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, BigRational::zero())
    }

    /// Single term `c * t^exponent`.
    pub fn term(c: C, exponent: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, c);
        p
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::term(C::one(), BigRational::one())
    }

    /// `1 + t + ... + t^k` (`k = 0` gives `1`).
    pub fn geometric_block(k: u32) -> Self {
        let mut p = Self::zero();
        for j in 0..=k {
            p.add_term(BigRational::from_integer(j.into()), C::one());
        }
        p
    }

    /// `t + t^2 + ... + t^k`, the shifted block `t * geometric_block(k - 1)`;
    /// `k = 0` gives `0`.
    pub fn shifted_geometric_block(k: u32) -> Self {
        let mut p = Self::zero();
        for j in 1..=k {
            p.add_term(BigRational::from_integer(j.into()), C::one());
        }
        p
    }

    /// Build from arbitrary (exponent, coefficient) pairs, merging duplicates
    /// and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (BigRational, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&BigRational, &C)> {
        self.terms.iter()
    }

    /// Coefficient of `t^exponent`, zero if absent.
    pub fn coefficient(&self, exponent: &BigRational) -> C {
        self.terms.get(exponent).cloned().unwrap_or_else(C::zero)
    }

    /// Add `c * t^exponent` in place, keeping canonical form.
    pub fn add_term(&mut self, exponent: BigRational, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn negate(&self) -> Self {
        FracPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    /// Convolution product with exact exponent addition.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Multiply every term by `c`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FracPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, coeff)| (e.clone(), coeff.clone() * c.clone()))
                .collect(),
        }
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::one();
        if n == 0 {
            return result;
        }
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact value of the polynomial at a rational point.
    ///
    /// At 1 (any exponents) and 0 (nonnegative exponents) this is always
    /// defined; elsewhere every exponent must be an integer.
    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational, EvalError> {
        if x.is_one() {
            let mut acc = BigInt::zero();
            for c in self.terms.values() {
                acc += c.clone().into();
            }
            return Ok(BigRational::from_integer(acc));
        }
        if x.is_zero() {
            let mut acc = BigInt::zero();
            for (e, c) in &self.terms {
                if e.is_zero() {
                    acc += c.clone().into();
                } else if e.is_negative() {
                    return Err(EvalError::NegativeExponentAtZero {
                        exponent: e.to_string(),
                    });
                }
            }
            return Ok(BigRational::from_integer(acc));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if !e.is_integer() {
                return Err(EvalError::NonIntegerExponentAtGeneralPoint {
                    exponent: e.to_string(),
                    point: x.to_string(),
                });
            }
            let power = rational_pow(x, e.numer())?;
            acc += BigRational::from_integer(c.clone().into()) * power;
        }
        Ok(acc)
    }

    /// Whether `c_a == c_{n - a}` for every exponent `a`.
    pub fn is_palindrome(&self, n: &BigRational) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.coefficient(&(n - e)) == *c)
    }
}

/// `x^e` for nonzero rational `x` and integer `e` (negative allowed).
fn rational_pow(x: &BigRational, e: &BigInt) -> Result<BigRational, EvalError> {
    let mag = e.magnitude();
    let exp = mag.to_u32().ok_or_else(|| EvalError::ExponentOutOfRange {
        exponent: e.to_string(),
    })?;
    let num = x.numer().pow(exp);
    let den = x.denom().pow(exp);
    Ok(if e.is_negative() {
        BigRational::new(den, num)
    } else {
        BigRational::new(num, den)
    })
}

impl<C: Coefficient> Add for &FracPoly<C> {
    type Output = FracPoly<C>;
    fn add(self, rhs: Self) -> FracPoly<C> {
        FracPoly::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &FracPoly<C> {
    type Output = FracPoly<C>;
    fn sub(self, rhs: Self) -> FracPoly<C> {
        FracPoly::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &FracPoly<C> {
    type Output = FracPoly<C>;
    fn mul(self, rhs: Self) -> FracPoly<C> {
        FracPoly::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &FracPoly<C> {
    type Output = FracPoly<C>;
    fn neg(self) -> FracPoly<C> {
        self.negate()
    }
}

// ---- Canonical text form ----
//
// Ascending exponent order, terms joined by " + " / " - ", magnitudes as
// `c`, `c*t`, `t^2`, `7*t^(1/2)`, ...; the zero polynomial prints as "0".
// Printing and parsing round-trip exactly.

impl<C: Coefficient> fmt::Display for FracPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term_magnitude(f, &c.abs(), e)?;
        }
        Ok(())
    }
}

fn write_term_magnitude<C: Coefficient>(
    f: &mut fmt::Formatter<'_>,
    mag: &C,
    e: &BigRational,
) -> fmt::Result {
    if e.is_zero() {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    if e.is_one() {
        write!(f, "t")
    } else if e.is_integer() {
        write!(f, "t^{}", e.numer())
    } else {
        write!(f, "t^({}/{})", e.numer(), e.denom())
    }
}

impl<C: Coefficient> FromStr for FracPoly<C> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParsePolyError {
        ParsePolyError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParsePolyError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }

    fn signed_integer(&mut self) -> Result<BigInt, ParsePolyError> {
        let negative = self.eat(b'-');
        let digits = self.digits()?;
        let value = BigInt::from_str(digits).map_err(|e| self.error(e.to_string()))?;
        Ok(if negative { -value } else { value })
    }

    fn parse<C: Coefficient>(&mut self) -> Result<FracPoly<C>, ParsePolyError> {
        self.skip_ws();
        let mut poly = FracPoly::zero();
        let mut negative = self.eat(b'-');
        self.skip_ws();
        loop {
            let (e, c) = self.term::<C>()?;
            poly.add_term(e, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(other) => {
                    return Err(self.error(format!("unexpected character '{}'", other as char)))
                }
            }
            self.skip_ws();
        }
        Ok(poly)
    }

    /// One term: `coeff`, `t`-part, or `coeff '*'? t`-part.
    fn term<C: Coefficient>(&mut self) -> Result<(BigRational, C), ParsePolyError> {
        let coeff: C = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let digits = self.digits()?;
            let c = C::from_str_radix(digits, 10)
                .map_err(|_| self.error(format!("invalid coefficient '{digits}'")))?;
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
            } else if self.peek() != Some(b't') {
                return Ok((BigRational::zero(), c));
            }
            c
        } else {
            C::one()
        };
        if !self.eat(b't') {
            return Err(self.error("expected coefficient or 't'"));
        }
        self.skip_ws();
        if !self.eat(b'^') {
            return Ok((BigRational::one(), coeff));
        }
        self.skip_ws();
        let exponent = if self.eat(b'(') {
            self.skip_ws();
            let numer = self.signed_integer()?;
            self.skip_ws();
            let exponent = if self.eat(b'/') {
                self.skip_ws();
                let denom = self.signed_integer()?;
                if denom.is_zero() {
                    return Err(self.error("zero denominator in exponent"));
                }
                BigRational::new(numer, denom)
            } else {
                BigRational::from_integer(numer)
            };
            self.skip_ws();
            if !self.eat(b')') {
                return Err(self.error("expected ')'"));
            }
            exponent
        } else {
            BigRational::from_integer(self.signed_integer()?)
        };
        Ok((exponent, coeff))
    }
}

impl<C: Coefficient> Serialize for FracPoly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for FracPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    type Poly = FracPoly<BigInt>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn add_merges_and_cancels() {
        assert_eq!(&poly("1 + t") + &poly("t"), poly("1 + 2*t"));
        let p = poly("1 + 7*t + t^2");
        assert_eq!(&p + &Poly::zero(), p);
        assert!((&p + &p.negate()).is_zero());
    }

    #[test]
    fn mul_convolves_exponents() {
        assert_eq!(&poly("1 - t") * &poly("1 + t"), poly("1 - t^2"));
        let half = Poly::term(BigInt::one(), rat(1, 2));
        assert_eq!(&half * &half, Poly::t());
        let p = poly("1 + t + t^2");
        assert_eq!(&p * &Poly::one(), p);
    }

    #[test]
    fn geometric_blocks() {
        assert_eq!(Poly::geometric_block(0), Poly::one());
        assert_eq!(Poly::geometric_block(1), poly("1 + t"));
        assert_eq!(Poly::geometric_block(2), poly("1 + t + t^2"));
        assert_eq!(Poly::shifted_geometric_block(0), Poly::zero());
        assert_eq!(Poly::shifted_geometric_block(3), poly("t + t^2 + t^3"));
        assert_eq!(
            Poly::shifted_geometric_block(4),
            &Poly::t() * &Poly::geometric_block(3)
        );
    }

    #[test]
    fn evaluate_at_one_and_zero() {
        // chi(U) - chi(fiber) for the two plane examples: 0 - (-9) and 3 - (-9).
        assert_eq!(poly("1 + 7*t + t^2").evaluate(&int(1)).unwrap(), int(9));
        assert_eq!(poly("1 + 10*t + t^2").evaluate(&int(1)).unwrap(), int(12));
        assert_eq!(Poly::zero().evaluate(&int(1)).unwrap(), int(0));
        let frac = Poly::term(BigInt::from_i64(2).unwrap(), rat(1, 2));
        assert_eq!(frac.evaluate(&int(1)).unwrap(), int(2));
        assert_eq!(frac.evaluate(&int(0)).unwrap(), int(0));
        assert!(matches!(
            frac.evaluate(&int(3)),
            Err(EvalError::NonIntegerExponentAtGeneralPoint { .. })
        ));
    }

    #[test]
    fn evaluate_general_rational_point() {
        let p = poly("1 - 2*t + t^3");
        // 1 - 2*(3/2) + (3/2)^3 = 1 - 3 + 27/8 = 11/8
        assert_eq!(p.evaluate(&rat(3, 2)).unwrap(), rat(11, 8));
        let laurent = Poly::term(BigInt::one(), int(-2));
        assert_eq!(laurent.evaluate(&rat(1, 2)).unwrap(), int(4));
        assert!(matches!(
            laurent.evaluate(&int(0)),
            Err(EvalError::NegativeExponentAtZero { .. })
        ));
    }

    #[test]
    fn coefficient_lookup() {
        assert_eq!(poly("1 + 7*t + t^2").coefficient(&int(1)), BigInt::from(7));
        assert_eq!(
            poly("1 + 10*t + t^2").coefficient(&int(1)),
            BigInt::from(10)
        );
        assert_eq!(poly("1 + t").coefficient(&rat(1, 2)), BigInt::zero());
    }

    #[test]
    fn palindrome_checks() {
        assert!(poly("1 + 7*t + t^2").is_palindrome(&int(2)));
        assert!(!poly("1 + 2*t").is_palindrome(&int(1)));
        assert!(Poly::zero().is_palindrome(&int(5)));
        assert!(Poly::zero().is_palindrome(&rat(-3, 7)));
        // Fractional center: t^(1/2) + t about n = 3/2.
        let p = Poly::from_terms([(rat(1, 2), BigInt::one()), (int(1), BigInt::one())]);
        assert!(p.is_palindrome(&rat(3, 2)));
    }

    #[test]
    fn display_canonical_forms() {
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(poly("1+7*t+t^2").to_string(), "1 + 7*t + t^2");
        assert_eq!(poly("-1 - t").to_string(), "-1 - t");
        assert_eq!(
            Poly::from_terms([(rat(1, 2), BigInt::from(2)), (int(0), BigInt::from(-3))])
                .to_string(),
            "-3 + 2*t^(1/2)"
        );
        assert_eq!(
            Poly::term(BigInt::one(), int(-1)).to_string(),
            "t^-1"
        );
    }

    #[test]
    fn parse_rejects_garbage_with_position() {
        let err = "1 + %".parse::<Poly>().unwrap_err();
        assert_eq!(err.position, 4);
        assert!("t^(1/0)".parse::<Poly>().is_err());
        assert!("".parse::<Poly>().is_err());
    }

    #[test]
    fn parse_accepts_loose_spacing() {
        assert_eq!(poly("1+7*t+t^2"), poly("1 + 7*t + t^2"));
        assert_eq!(poly(" - 1 - t "), poly("-1 - t"));
        assert_eq!(poly("3 * t ^ ( 1 / 2 )"), poly("3*t^(1/2)"));
        assert_eq!(poly("0"), Poly::zero());
        assert_eq!(poly("0 + t - t"), Poly::zero());
    }

    #[test]
    fn generic_scalar_matches_bigint() {
        let a: FracPoly<i64> = "1 - t".parse().unwrap();
        let b: FracPoly<i64> = "1 + t".parse().unwrap();
        assert_eq!((&a * &b).to_string(), "1 - t^2");
        assert_eq!(
            (&a * &b).evaluate(&int(1)).unwrap(),
            poly("1 - t^2").evaluate(&int(1)).unwrap()
        );
    }
}
