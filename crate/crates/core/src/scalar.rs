//! Exact scalar arithmetic for the three coefficient domains: rationals,
//! Gaussian rationals and prime fields, together with their involutions.
//!
//! Everything upstream (matrices, inverses, order predicates) is built on
//! these scalars, so every operation here is exact; there are no tolerances
//! anywhere in the crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("conjugation involution requires the gaussian_rationals domain")]
    InvalidInvolution,
    #[error("zero is not invertible")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
}

/// Which field the scalars live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Rationals,
    GaussianRationals,
    ModP(u64),
}

/// The involution carried by the domain. `Conjugation` is only meaningful
/// for Gaussian rationals; the other domains use the identity, which turns
/// the matrix-level star into a plain transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Involution {
    Identity,
    Conjugation,
}

/// A scalar domain: field plus involution. Cheap to copy and compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScalarDomain {
    kind: DomainKind,
    involution: Involution,
}

impl ScalarDomain {
    /// Rationals with the identity involution.
    pub fn rationals() -> Self {
        ScalarDomain {
            kind: DomainKind::Rationals,
            involution: Involution::Identity,
        }
    }

    /// Gaussian rationals with complex conjugation.
    pub fn gaussian_rationals() -> Self {
        ScalarDomain {
            kind: DomainKind::GaussianRationals,
            involution: Involution::Conjugation,
        }
    }

    /// Prime field Z_p with the identity involution. Fails if `p` is not prime.
    pub fn mod_p(p: u64) -> Result<Self, ScalarError> {
        if !is_prime_u64(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(ScalarDomain {
            kind: DomainKind::ModP(p),
            involution: Involution::Identity,
        })
    }

    /// General constructor; rejects conjugation outside the Gaussian domain
    /// and non-prime moduli.
    pub fn new(kind: DomainKind, involution: Involution) -> Result<Self, ScalarError> {
        if involution == Involution::Conjugation && kind != DomainKind::GaussianRationals {
            return Err(ScalarError::InvalidInvolution);
        }
        if let DomainKind::ModP(p) = kind {
            if !is_prime_u64(p) {
                return Err(ScalarError::NotPrime(p));
            }
        }
        Ok(ScalarDomain { kind, involution })
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn involution(&self) -> Involution {
        self.involution
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, DomainKind::ModP(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            DomainKind::ModP(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DomainKind::Rationals => write!(f, "rationals"),
            DomainKind::GaussianRationals => write!(f, "gaussian_rationals"),
            DomainKind::ModP(p) => write!(f, "mod_p:{p}"),
        }
    }
}

impl FromStr for ScalarDomain {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rationals" => Ok(ScalarDomain::rationals()),
            "gaussian_rationals" => Ok(ScalarDomain::gaussian_rationals()),
            _ => {
                if let Some(rest) = s.strip_prefix("mod_p:") {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| ScalarError::Parse(format!("bad modulus in {s:?}")))?;
                    ScalarDomain::mod_p(p)
                } else {
                    Err(ScalarError::Parse(format!("unknown domain {s:?}")))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Rat(BigRational),
    // (real, imaginary); both reduced with positive denominator.
    Gauss(BigRational, BigRational),
    // residue in [0, p)
    Mod(u64),
}

/// An exact field element tagged with its domain.
///
/// Rationals are kept in lowest terms with positive denominator (the
/// representation `num_rational` normalizes to), so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    domain: ScalarDomain,
    value: Value,
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn zero(domain: ScalarDomain) -> Self {
        Scalar::from_integer(domain, 0)
    }

    pub fn one(domain: ScalarDomain) -> Self {
        Scalar::from_integer(domain, 1)
    }

    /// The imaginary unit; only defined for Gaussian rationals.
    pub fn imaginary_unit(domain: ScalarDomain) -> Result<Self, ScalarError> {
        match domain.kind() {
            DomainKind::GaussianRationals => Ok(Scalar {
                domain,
                value: Value::Gauss(BigRational::zero(), BigRational::one()),
            }),
            _ => Err(ScalarError::Domain(
                "imaginary unit requires gaussian_rationals".into(),
            )),
        }
    }

    pub fn from_integer(domain: ScalarDomain, n: i64) -> Self {
        match domain.kind() {
            DomainKind::Rationals => Scalar {
                domain,
                value: Value::Rat(BigRational::from_integer(BigInt::from(n))),
            },
            DomainKind::GaussianRationals => Scalar {
                domain,
                value: Value::Gauss(
                    BigRational::from_integer(BigInt::from(n)),
                    BigRational::zero(),
                ),
            },
            DomainKind::ModP(p) => Scalar {
                domain,
                value: Value::Mod(reduce_mod(n, p)),
            },
        }
    }

    /// num/den as a domain element. `den` must be nonzero and, for Z_p,
    /// invertible mod p.
    pub fn from_ratio(domain: ScalarDomain, num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::Domain("zero denominator".into()));
        }
        match domain.kind() {
            DomainKind::Rationals | DomainKind::GaussianRationals => {
                let q = BigRational::new(BigInt::from(num), BigInt::from(den));
                Ok(match domain.kind() {
                    DomainKind::Rationals => Scalar {
                        domain,
                        value: Value::Rat(q),
                    },
                    _ => Scalar {
                        domain,
                        value: Value::Gauss(q, BigRational::zero()),
                    },
                })
            }
            DomainKind::ModP(_) => {
                let d = Scalar::from_integer(domain, den);
                let n = Scalar::from_integer(domain, num);
                let inv = d
                    .invert()
                    .map_err(|_| ScalarError::Domain(format!("denominator {den} is 0 mod p")))?;
                Ok(&n * &inv)
            }
        }
    }

    /// Gaussian rational from rational real and imaginary parts.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar {
            domain: ScalarDomain::gaussian_rationals(),
            value: Value::Gauss(re, im),
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.value {
            Value::Mod(r) => Some(*r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_zero(),
            Value::Gauss(re, im) => re.is_zero() && im.is_zero(),
            Value::Mod(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_one(),
            Value::Gauss(re, im) => re.is_one() && im.is_zero(),
            Value::Mod(r) => *r == 1,
        }
    }

    /// The involution of the domain applied to this scalar: identity, or
    /// negation of the imaginary part under conjugation.
    pub fn conjugate(&self) -> Scalar {
        match (&self.value, self.domain.involution()) {
            (Value::Gauss(re, im), Involution::Conjugation) => Scalar {
                domain: self.domain,
                value: Value::Gauss(re.clone(), -im.clone()),
            },
            _ => self.clone(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn invert(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::NotInvertible);
        }
        let value = match &self.value {
            Value::Rat(q) => Value::Rat(q.recip()),
            Value::Gauss(re, im) => {
                // (re + im·i)^-1 = (re - im·i) / (re² + im²)
                let norm = re * re + im * im;
                Value::Gauss(re / &norm, -im / &norm)
            }
            Value::Mod(r) => {
                let p = self.domain.modulus().expect("mod value in mod domain");
                Value::Mod(mod_inverse(*r, p))
            }
        };
        Ok(Scalar {
            domain: self.domain,
            value,
        })
    }

    fn assert_same_domain(&self, other: &Scalar) {
        assert_eq!(
            self.domain, other.domain,
            "scalar domain mismatch: {} vs {}",
            self.domain, other.domain
        );
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_domain(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Gauss(ar, ai), Value::Gauss(br, bi)) => Value::Gauss(ar + br, ai + bi),
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.domain.modulus().unwrap() as u128;
                Value::Mod(((*a as u128 + *b as u128) % p) as u64)
            }
            _ => unreachable!("value variant matches domain"),
        };
        Scalar {
            domain: self.domain,
            value,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        let value = match &self.value {
            Value::Rat(q) => Value::Rat(-q.clone()),
            Value::Gauss(re, im) => Value::Gauss(-re.clone(), -im.clone()),
            Value::Mod(r) => {
                let p = self.domain.modulus().unwrap();
                Value::Mod(if *r == 0 { 0 } else { p - *r })
            }
        };
        Scalar {
            domain: self.domain,
            value,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_domain(rhs);
        let value = match (&self.value, &rhs.value) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Gauss(ar, ai), Value::Gauss(br, bi)) => {
                Value::Gauss(ar * br - ai * bi, ar * bi + ai * br)
            }
            (Value::Mod(a), Value::Mod(b)) => {
                let p = self.domain.modulus().unwrap() as u128;
                Value::Mod(((*a as u128 * *b as u128) % p) as u64)
            }
            _ => unreachable!("value variant matches domain"),
        };
        Scalar {
            domain: self.domain,
            value,
        }
    }
}

fn reduce_mod(n: i64, p: u64) -> u64 {
    let p_i = p as i128;
    let r = (n as i128).rem_euclid(p_i);
    r as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); a is nonzero mod prime p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} not invertible mod {p}");
    (t.rem_euclid(p as i128)) as u64
}

/// Deterministic Miller–Rabin, valid for the full u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// ---------------------------------------------------------------------------
// text form
//
// rational := int[/int]
// gaussian := rational[(+|-)rational i]
// modp     := int
// ---------------------------------------------------------------------------

fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(q) => write!(f, "{}", render_rational(q)),
            Value::Gauss(re, im) => {
                if im.is_zero() {
                    write!(f, "{}", render_rational(re))
                } else if im.is_negative() {
                    write!(
                        f,
                        "{}-{}i",
                        render_rational(re),
                        render_rational(&-im.clone())
                    )
                } else {
                    write!(f, "{}+{}i", render_rational(re), render_rational(im))
                }
            }
            Value::Mod(r) => write!(f, "{r}"),
        }
    }
}

fn parse_rational(text: &str) -> Result<BigRational, ScalarError> {
    let bad = || ScalarError::Parse(format!("malformed rational {text:?}"));
    let text = text.trim();
    if text.is_empty() {
        return Err(bad());
    }
    match text.split_once('/') {
        None => {
            let n = BigInt::from_str(text).map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ScalarError::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Split `a+bi` / `a-bi` at the sign that separates the real part from the
/// imaginary part. Leading sign of the real part is not a separator.
fn split_gaussian(text: &str) -> Option<(String, String)> {
    let stripped = text.strip_suffix('i')?;
    let chars: Vec<char> = stripped.chars().collect();
    // scan from the right for a '+'/'-' that is not an exponent or leading sign
    for idx in (1..chars.len()).rev() {
        let c = chars[idx];
        if (c == '+' || c == '-') && chars[idx - 1] != '/' {
            let re: String = chars[..idx].iter().collect();
            let sign = if c == '-' { "-" } else { "" };
            let im_body: String = chars[idx + 1..].iter().collect();
            return Some((re, format!("{sign}{im_body}")));
        }
    }
    None
}

/// Parse a scalar in the given domain from its text form.
pub fn parse_scalar(text: &str, domain: ScalarDomain) -> Result<Scalar, ScalarError> {
    let text = text.trim();
    match domain.kind() {
        DomainKind::Rationals => {
            if text.contains('i') {
                return Err(ScalarError::Domain(format!(
                    "imaginary part {text:?} not allowed in rationals"
                )));
            }
            Ok(Scalar {
                domain,
                value: Value::Rat(parse_rational(text)?),
            })
        }
        DomainKind::GaussianRationals => {
            if let Some((re, im)) = split_gaussian(text) {
                Ok(Scalar {
                    domain,
                    value: Value::Gauss(parse_rational(&re)?, parse_rational(&im)?),
                })
            } else if text.ends_with('i') {
                Err(ScalarError::Parse(format!(
                    "malformed gaussian {text:?}; expected rational(+|-)rational i"
                )))
            } else {
                Ok(Scalar {
                    domain,
                    value: Value::Gauss(parse_rational(text)?, BigRational::zero()),
                })
            }
        }
        DomainKind::ModP(p) => {
            if text.contains('i') {
                return Err(ScalarError::Domain(format!(
                    "imaginary part {text:?} not allowed mod {p}"
                )));
            }
            if let Some((num, den)) = text.split_once('/') {
                let n = i64::from_str(num.trim())
                    .map_err(|_| ScalarError::Parse(format!("malformed residue {text:?}")))?;
                let d = i64::from_str(den.trim())
                    .map_err(|_| ScalarError::Parse(format!("malformed residue {text:?}")))?;
                Scalar::from_ratio(domain, n, d)
            } else {
                let n = i64::from_str(text)
                    .map_err(|_| ScalarError::Parse(format!("malformed residue {text:?}")))?;
                Ok(Scalar::from_integer(domain, n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> ScalarDomain {
        ScalarDomain::rationals()
    }

    fn qi() -> ScalarDomain {
        ScalarDomain::gaussian_rationals()
    }

    fn z(p: u64) -> ScalarDomain {
        ScalarDomain::mod_p(p).unwrap()
    }

    #[test]
    fn primality_gate() {
        assert!(ScalarDomain::mod_p(2).is_ok());
        assert!(ScalarDomain::mod_p(7).is_ok());
        assert_eq!(ScalarDomain::mod_p(1), Err(ScalarError::NotPrime(1)));
        assert_eq!(ScalarDomain::mod_p(6), Err(ScalarError::NotPrime(6)));
        assert!(ScalarDomain::mod_p(2_147_483_647).is_ok());
    }

    #[test]
    fn conjugation_requires_gaussian() {
        assert_eq!(
            ScalarDomain::new(DomainKind::Rationals, Involution::Conjugation),
            Err(ScalarError::InvalidInvolution)
        );
        assert!(ScalarDomain::new(DomainKind::GaussianRationals, Involution::Conjugation).is_ok());
    }

    #[test]
    fn conjugate_examples() {
        // 3/4 + (1/2)i -> 3/4 - (1/2)i
        let s = parse_scalar("3/4+1/2i", qi()).unwrap();
        assert_eq!(s.conjugate(), parse_scalar("3/4-1/2i", qi()).unwrap());
        // identity involution leaves rationals alone
        let five = Scalar::from_integer(q(), 5);
        assert_eq!(five.conjugate(), five);
        // conj(0) = 0
        let zero = Scalar::zero(qi());
        assert_eq!(zero.conjugate(), zero);
    }

    #[test]
    fn invert_examples() {
        // 2^-1 = 3 in Z_5
        let two = Scalar::from_integer(z(5), 2);
        assert_eq!(two.invert().unwrap(), Scalar::from_integer(z(5), 3));
        // (1/2 + 1/2 i)^-1 = 1 - i
        let s = parse_scalar("1/2+1/2i", qi()).unwrap();
        assert_eq!(s.invert().unwrap(), parse_scalar("1-1i", qi()).unwrap());
        assert_eq!(Scalar::zero(q()).invert(), Err(ScalarError::NotInvertible));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_scalar("1/2", q()).unwrap(),
            Scalar::from_ratio(q(), 1, 2).unwrap()
        );
        let g = parse_scalar("3/4-1/2i", qi()).unwrap();
        assert_eq!(
            g,
            Scalar::gaussian(
                BigRational::new(3.into(), 4.into()),
                BigRational::new((-1).into(), 2.into())
            )
        );
        // reduction mod p
        assert_eq!(
            parse_scalar("7", z(5)).unwrap(),
            Scalar::from_integer(z(5), 2)
        );
        assert_eq!(
            parse_scalar("-1", z(5)).unwrap(),
            Scalar::from_integer(z(5), 4)
        );
    }

    #[test]
    fn parse_rejects_malformed_and_foreign() {
        assert!(matches!(
            parse_scalar("1/0", q()),
            Err(ScalarError::Parse(_))
        ));
        assert!(matches!(
            parse_scalar("2i", qi()),
            Err(ScalarError::Parse(_))
        ));
        assert!(matches!(parse_scalar("x", q()), Err(ScalarError::Parse(_))));
        // "i" is a domain error in the rationals
        assert!(matches!(
            parse_scalar("1+1i", q()),
            Err(ScalarError::Domain(_))
        ));
        // denominator = 0 mod p
        assert!(matches!(
            parse_scalar("1/5", z(5)),
            Err(ScalarError::Domain(_))
        ));
    }

    #[test]
    fn render_parse_round_trip() {
        for text in ["0", "-3", "1/2", "-7/3"] {
            let s = parse_scalar(text, q()).unwrap();
            assert_eq!(parse_scalar(&s.to_string(), q()).unwrap(), s);
        }
        for text in ["0", "1/2", "0+1i", "3/4-1/2i", "-2+5/3i"] {
            let s = parse_scalar(text, qi()).unwrap();
            assert_eq!(parse_scalar(&s.to_string(), qi()).unwrap(), s);
        }
        // canonical form: parse then render is stable
        let s = parse_scalar("2/4", q()).unwrap();
        assert_eq!(s.to_string(), "1/2");
    }

    fn arb_scalar(domain: ScalarDomain) -> impl Strategy<Value = Scalar> {
        (any::<i32>(), 1..40i32, any::<i32>(), 1..40i32).prop_map(move |(a, b, c, d)| match domain
            .kind()
        {
            DomainKind::Rationals => Scalar::from_ratio(domain, a as i64, b as i64).unwrap(),
            DomainKind::GaussianRationals => Scalar::gaussian(
                BigRational::new(BigInt::from(a), BigInt::from(b)),
                BigRational::new(BigInt::from(c), BigInt::from(d)),
            ),
            DomainKind::ModP(_) => Scalar::from_integer(domain, a as i64),
        })
    }

    fn field_domains() -> Vec<ScalarDomain> {
        vec![q(), qi(), z(2), z(5), z(97)]
    }

    proptest! {
        #[test]
        fn field_axioms(seed in proptest::collection::vec(any::<i32>(), 12)) {
            for domain in field_domains() {
                let vals: Vec<Scalar> = seed
                    .chunks(4)
                    .map(|c| match domain.kind() {
                        DomainKind::GaussianRationals => Scalar::gaussian(
                            BigRational::new(BigInt::from(c[0]), BigInt::from(c[1].unsigned_abs().max(1))),
                            BigRational::new(BigInt::from(c[2]), BigInt::from(c[3].unsigned_abs().max(1))),
                        ),
                        _ => Scalar::from_integer(domain, c[0] as i64),
                    })
                    .collect();
                let (s, t, u) = (&vals[0], &vals[1], &vals[2]);
                prop_assert_eq!(&(&(s + t) + u), &(s + &(t + u)));
                prop_assert_eq!(&(&(s * t) * u), &(s * &(t * u)));
                prop_assert_eq!(&(s * &(t + u)), &(&(s * t) + &(s * u)));
                prop_assert_eq!(&(s + &-s), &Scalar::zero(domain));
                if !s.is_zero() {
                    prop_assert_eq!(&(s * &s.invert().unwrap()), &Scalar::one(domain));
                }
            }
        }

        #[test]
        fn involution_axioms(a in any::<i32>(), b in 1..50i32, c in any::<i32>(), d in 1..50i32) {
            let s = Scalar::gaussian(
                BigRational::new(BigInt::from(a), BigInt::from(b)),
                BigRational::new(BigInt::from(c), BigInt::from(d)),
            );
            let t = Scalar::gaussian(
                BigRational::new(BigInt::from(c), BigInt::from(b)),
                BigRational::new(BigInt::from(a), BigInt::from(d)),
            );
            prop_assert_eq!(&s.conjugate().conjugate(), &s);
            prop_assert_eq!(&(&s + &t).conjugate(), &(&s.conjugate() + &t.conjugate()));
            prop_assert_eq!(&(&s * &t).conjugate(), &(&s.conjugate() * &t.conjugate()));
        }

        #[test]
        fn gaussian_positivity(a in any::<i32>(), b in 1..50i32, c in any::<i32>(), d in 1..50i32) {
            let s = Scalar::gaussian(
                BigRational::new(BigInt::from(a), BigInt::from(b)),
                BigRational::new(BigInt::from(c), BigInt::from(d)),
            );
            if !s.is_zero() {
                let n = &s.conjugate() * &s;
                match &n.value {
                    Value::Gauss(re, im) => {
                        prop_assert!(im.is_zero());
                        prop_assert!(re.is_positive());
                    }
                    _ => prop_assert!(false),
                }
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_random(s in arb_scalar(ScalarDomain::gaussian_rationals())) {
            let text = s.to_string();
            prop_assert_eq!(parse_scalar(&text, ScalarDomain::gaussian_rationals()).unwrap(), s);
        }
    }
}
