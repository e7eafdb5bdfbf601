//! The three exact coefficient fields and their textual syntax.
//!
//! Every computation in this crate happens over one of
//!
//! * the rationals Q,
//! * the Gaussian rationals Q(i) with the conjugation `a+bi -> a-bi`, or
//! * a prime field GF(p) with `p <= 97`,
//!
//! each equipped with an involution (identity except over Q(i)). Arithmetic
//! is exact: rationals are kept in reduced canonical form with positive
//! denominator, so two values are equal iff their representations are
//! identical.
//!
//! Generic code is written against the [`Field`] trait, whose implementors
//! are lightweight *field objects* ([`Rationals`], [`GaussianRationals`],
//! [`PrimeField`]) carried alongside the element data; this is what lets
//! GF(p) elements be bare residues with the modulus stored once per matrix.
//!
//! The textual syntax, used by the CLI and the JSON encodings, is
//! `"3/4"` for rationals, `"3/4+1/2i"` for Gaussian rationals and
//! `"5 mod 7"` for prime fields; parse/print round-trips are exact.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in reduced canonical form.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of Q(i): `re + im*i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational::new(rat(re), rat(im))
    }

    pub fn zero() -> Self {
        GaussianRational::new(rat(0), rat(0))
    }

    pub fn one() -> Self {
        GaussianRational::new(rat(1), rat(0))
    }

    pub fn i() -> Self {
        GaussianRational::new(rat(0), rat(1))
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational::new(re, rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True iff the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussianRational::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussianRational::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn neg(&self) -> Self {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussianRational::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    /// `conj(a+bi) = a-bi`; the involution of Q(i).
    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|^2 = z * conj(z)` as a rational; zero iff `z == 0`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GaussianRational::new(&self.re * c, &self.im * c)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_gaussian(self))
    }
}

/// Tag naming one of the three coefficient fields. All scalars inside one
/// matrix or subspace share a tag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldTag {
    Rational,
    Gaussian,
    Prime(u64),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "rational"),
            FieldTag::Gaussian => write!(f, "gaussian"),
            FieldTag::Prime(p) => write!(f, "gf{p}"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "rational" | "q" => Ok(FieldTag::Rational),
            "gaussian" | "qi" => Ok(FieldTag::Gaussian),
            _ => {
                if let Some(p) = s.strip_prefix("gf") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad field tag `{s}`")))?;
                    check_modulus(p)?;
                    Ok(FieldTag::Prime(p))
                } else {
                    Err(Error::Parse(format!(
                        "bad field tag `{s}` (expected `rational`, `gaussian` or `gf<p>`)"
                    )))
                }
            }
        }
    }
}

fn check_modulus(p: u64) -> Result<()> {
    let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if !is_prime || p > 97 {
        return Err(Error::InvalidModulus(p));
    }
    Ok(())
}

/// An exact field with involution, presented as a field object so that the
/// modulus of GF(p) lives in one place rather than in every element.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug;

    fn tag(&self) -> FieldTag;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// The involution: conjugation over Q(i), identity elsewhere.
    fn conj(&self, a: &Self::Elem) -> Self::Elem;

    /// True iff [`Field::conj`] is the identity map.
    fn conj_is_identity(&self) -> bool;

    fn from_i64(&self, v: i64) -> Self::Elem;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    /// Rescales a row by a positive scalar of the prime subfield to a
    /// cheaper representative of the same line. No-op by default; Q and
    /// Q(i) clear denominators and divide out the integer content, which
    /// is what keeps exact elimination from blowing up coefficient sizes.
    fn reduce_row(&self, _row: &mut [Self::Elem]) {}
}

fn primitive_rational_scale<'a>(parts: impl Iterator<Item = &'a Rational> + Clone) -> Option<Rational> {
    use num_integer::Integer;

    let mut denom_lcm = BigInt::one();
    for p in parts.clone() {
        denom_lcm = denom_lcm.lcm(p.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for p in parts {
        numer_gcd = numer_gcd.gcd(&(p.numer() * &denom_lcm / p.denom()));
    }
    if numer_gcd.is_zero() {
        return None;
    }
    Some(Rational::new(denom_lcm, numer_gcd))
}

/// The field Q.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn tag(&self) -> FieldTag {
        FieldTag::Rational
    }
    fn zero(&self) -> Rational {
        rat(0)
    }
    fn one(&self) -> Rational {
        rat(1)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a.clone()
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn conj(&self, a: &Rational) -> Rational {
        a.clone()
    }
    fn conj_is_identity(&self) -> bool {
        true
    }
    fn from_i64(&self, v: i64) -> Rational {
        rat(v)
    }
    fn parse(&self, s: &str) -> Result<Rational> {
        parse_rational(s)
    }
    fn format(&self, a: &Rational) -> String {
        format_rational(a)
    }
}

/// The field Q(i) with conjugation as involution.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRationals;

impl Field for GaussianRationals {
    type Elem = GaussianRational;

    fn tag(&self) -> FieldTag {
        FieldTag::Gaussian
    }
    fn zero(&self) -> GaussianRational {
        GaussianRational::zero()
    }
    fn one(&self) -> GaussianRational {
        GaussianRational::one()
    }
    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a.add(b)
    }
    fn sub(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a.sub(b)
    }
    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        a.neg()
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a.mul(b)
    }
    fn inv(&self, a: &GaussianRational) -> Result<GaussianRational> {
        a.inv()
    }
    fn conj(&self, a: &GaussianRational) -> GaussianRational {
        a.conj()
    }
    fn conj_is_identity(&self) -> bool {
        false
    }
    fn from_i64(&self, v: i64) -> GaussianRational {
        GaussianRational::from_parts(v, 0)
    }
    fn parse(&self, s: &str) -> Result<GaussianRational> {
        parse_gaussian(s)
    }
    fn format(&self, a: &GaussianRational) -> String {
        format_gaussian(a)
    }
}

/// The field GF(p) for a prime `p <= 97`; elements are reduced residues.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        check_modulus(p)?;
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// All field elements `0..p` in order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn tag(&self) -> FieldTag {
        FieldTag::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(*a, self.p - 2))
    }
    fn conj(&self, a: &u64) -> u64 {
        *a
    }
    fn conj_is_identity(&self) -> bool {
        true
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let (value, modulus) = parse_residue(s)?;
        if let Some(m) = modulus {
            if m != self.p {
                return Err(Error::FieldMismatch(format!(
                    "residue is mod {m} but field is GF({})",
                    self.p
                )));
            }
        }
        Ok(value.rem_euclid(self.p as i128) as u64)
    }
    fn format(&self, a: &u64) -> String {
        format!("{} mod {}", a, self.p)
    }
}

/// A scalar from any of the three fields, with the field tag attached.
///
/// This is the dynamic counterpart of the [`Field`] machinery, used where
/// values of unknown field meet (the CLI and the JSON encodings). Mixed-tag
/// arithmetic is rejected with [`Error::FieldMismatch`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(GaussianRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Rational(_) => FieldTag::Rational,
            Scalar::Gaussian(_) => FieldTag::Gaussian,
            Scalar::Prime { modulus, .. } => FieldTag::Prime(*modulus),
        }
    }

    pub fn parse(tag: FieldTag, s: &str) -> Result<Scalar> {
        match tag {
            FieldTag::Rational => Ok(Scalar::Rational(parse_rational(s)?)),
            FieldTag::Gaussian => Ok(Scalar::Gaussian(parse_gaussian(s)?)),
            FieldTag::Prime(p) => {
                let f = PrimeField::new(p)?;
                Ok(Scalar::Prime {
                    value: f.parse(s)?,
                    modulus: p,
                })
            }
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        name: &str,
        fr: impl Fn(&Rational, &Rational) -> Result<Rational>,
        fg: impl Fn(&GaussianRational, &GaussianRational) -> Result<GaussianRational>,
        fp: impl Fn(&PrimeField, u64, u64) -> Result<u64>,
    ) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(fr(a, b)?)),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(Scalar::Gaussian(fg(a, b)?)),
            (
                Scalar::Prime { value: a, modulus: p },
                Scalar::Prime { value: b, modulus: q },
            ) if p == q => Ok(Scalar::Prime {
                value: fp(&PrimeField::new(*p)?, *a, *b)?,
                modulus: *p,
            }),
            _ => Err(Error::FieldMismatch(format!(
                "cannot {name} {} and {}",
                self.tag(),
                other.tag()
            ))),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, "add", |a, b| Ok(a + b), |a, b| Ok(a.add(b)), |f, a, b| Ok(f.add(&a, &b)))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, "subtract", |a, b| Ok(a - b), |a, b| Ok(a.sub(b)), |f, a, b| {
            Ok(f.sub(&a, &b))
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, "multiply", |a, b| Ok(a * b), |a, b| Ok(a.mul(b)), |f, a, b| {
            Ok(f.mul(&a, &b))
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(
            other,
            "divide",
            |a, b| {
                if b.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(a / b)
                }
            },
            |a, b| a.div(b),
            |f, a, b| f.div(&a, &b),
        )
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.clone()),
            Scalar::Gaussian(a) => Scalar::Gaussian(a.conj()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: *value,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => f.write_str(&format_rational(a)),
            Scalar::Gaussian(a) => f.write_str(&format_gaussian(a)),
            Scalar::Prime { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let denom = match den {
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

pub fn format_rational(a: &Rational) -> String {
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Parses `a`, `bi`, or `a+bi` / `a-bi` with rational `a`, `b`;
/// `i`, `-i` and `+i` denote unit imaginary parts.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a Gaussian rational"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some(body) = s.strip_suffix('i') {
        // Find the sign separating the real part from the imaginary part.
        // Signs inside the imaginary token cannot occur: canonical rationals
        // carry their sign up front and have positive denominators.
        let split = body.rfind(['+', '-']).filter(|&idx| idx > 0);
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let im = match im_str.trim() {
            "" | "+" => rat(1),
            "-" => rat(-1),
            t => parse_rational(t)?,
        };
        Ok(GaussianRational::new(parse_rational(re_str)?, im))
    } else {
        Ok(GaussianRational::from_rational(parse_rational(s)?))
    }
}

pub fn format_gaussian(a: &GaussianRational) -> String {
    if a.im.is_zero() {
        return format_rational(&a.re);
    }
    let imag = {
        let mag = a.im.abs();
        let sign = if a.im.is_negative() { "-" } else { "+" };
        if mag.is_one() {
            format!("{sign}i")
        } else {
            format!("{sign}{}i", format_rational(&mag))
        }
    };
    if a.re.is_zero() {
        imag.strip_prefix('+').map(str::to_owned).unwrap_or(imag)
    } else {
        format!("{}{imag}", format_rational(&a.re))
    }
}

/// Parses `v` or `v mod p`, returning the raw value and the stated modulus.
fn parse_residue(s: &str) -> Result<(i128, Option<u64>)> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a prime-field residue"));
    match s.split_once("mod") {
        Some((v, m)) => {
            let value: i128 = v.trim().parse().map_err(|_| bad())?;
            let modulus: u64 = m.trim().parse().map_err(|_| bad())?;
            Ok((value, Some(modulus)))
        }
        None => Ok((s.parse().map_err(|_| bad())?, None)),
    }
}
