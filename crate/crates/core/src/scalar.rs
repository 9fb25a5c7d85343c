//! Exact scalar fields.
//!
//! Everything in the crate is generic over [`Scalar`], a commutative field
//! with exact equality. Two families are provided: the rationals (backed by
//! arbitrary-precision integers, always in lowest terms) and prime fields
//! `F_p` whose modulus is either fixed at compile time ([`ConstPrime`]) or
//! installed once per process ([`RuntimePrime`]).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly;

/// Which field a scalar type realizes, for reports and input validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField(u64),
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?} as an element of {field}")]
pub struct ParseScalarError {
    pub input: String,
    pub field: FieldKind,
}

/// An exact field element.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn field() -> FieldKind;

    fn characteristic() -> u64 {
        match Self::field() {
            FieldKind::Rationals => 0,
            FieldKind::PrimeField(p) => p,
        }
    }

    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Parses an integer or a fraction `"a/b"` written in decimal.
    fn parse_exact(s: &str) -> Result<Self, ParseScalarError>;

    /// Canonical residue in `[0, p)` for prime fields; `None` over Q.
    fn residue(&self) -> Option<u64>;

    /// All distinct roots in the field of the polynomial with the given
    /// coefficients (constant term first). The zero polynomial has no roots
    /// by convention.
    fn roots(poly: &[Self]) -> Vec<Self>;
}

// ---------------------------------------------------------------------------
// Rationals

pub type Rational = BigRational;

impl Scalar for BigRational {
    fn field() -> FieldKind {
        FieldKind::Rationals
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parse_exact(s: &str) -> Result<Self, ParseScalarError> {
        let err = || ParseScalarError { input: s.to_string(), field: FieldKind::Rationals };
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| err())?;
        let den = BigInt::from_str(den).map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(BigRational::new(num, den))
    }

    fn residue(&self) -> Option<u64> {
        None
    }

    fn roots(poly: &[Self]) -> Vec<Self> {
        rational_roots(poly)
    }
}

/// Largest absolute value we are willing to factor by trial division when
/// enumerating rational root candidates.
const TRIAL_DIVISION_LIMIT: u128 = 1 << 50;

fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let coeffs = poly::trimmed(coeffs);
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    // clear denominators
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> =
        coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        while ints.first().is_some_and(Zero::is_zero) {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        return roots;
    }
    let (Some(a0), Some(an)) = (small_abs(&ints[0]), small_abs(ints.last().unwrap())) else {
        return roots;
    };
    let nums = divisors(a0);
    let dens = divisors(an);
    let rat: Vec<BigRational> = ints.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    for p in &nums {
        for q in &dens {
            if p.gcd(q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(*p) * sign, BigInt::from(*q));
                if poly::eval(&rat, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn small_abs(n: &BigInt) -> Option<u128> {
    let v = n.abs().to_u128()?;
    (v <= TRIAL_DIVISION_LIMIT).then_some(v)
}

fn divisors(n: u128) -> Vec<u128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

// ---------------------------------------------------------------------------
// Prime fields

/// Supplies the modulus of a prime field type.
pub trait Modulus: Copy + Clone + Debug + PartialEq + Eq + PartialOrd + Ord + Hash + Send + Sync + 'static {
    fn modulus() -> u64;
}

/// Modulus fixed at compile time.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConstPrime<const P: u64>;

impl<const P: u64> Modulus for ConstPrime<P> {
    fn modulus() -> u64 {
        P
    }
}

static RUNTIME_PRIME: OnceLock<u64> = OnceLock::new();

/// Modulus chosen once per process, e.g. from a command-line flag.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuntimePrime;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PrimeError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} does not fit the supported range (p < 2^32)")]
    TooLarge(u64),
    #[error("runtime prime already installed as {installed}, cannot switch to {requested}")]
    AlreadyInstalled { installed: u64, requested: u64 },
}

impl RuntimePrime {
    /// Installs the process-wide modulus. Installing the same prime twice is
    /// allowed; switching primes is not.
    pub fn install(p: u64) -> Result<(), PrimeError> {
        if p >= 1 << 32 {
            return Err(PrimeError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(PrimeError::NotPrime(p));
        }
        let installed = *RUNTIME_PRIME.get_or_init(|| p);
        if installed != p {
            return Err(PrimeError::AlreadyInstalled { installed, requested: p });
        }
        Ok(())
    }
}

impl Modulus for RuntimePrime {
    fn modulus() -> u64 {
        *RUNTIME_PRIME.get().expect("RuntimePrime::install must be called before using Fp<RuntimePrime>")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of `F_p`, stored as its canonical residue.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<M: Modulus> {
    value: u64,
    _modulus: PhantomData<M>,
}

pub type F2 = Fp<ConstPrime<2>>;
pub type F3 = Fp<ConstPrime<3>>;
pub type F5 = Fp<ConstPrime<5>>;
pub type F7 = Fp<ConstPrime<7>>;
pub type F101 = Fp<ConstPrime<101>>;
pub type FRuntime = Fp<RuntimePrime>;

impl<M: Modulus> Fp<M> {
    pub fn new(value: u64) -> Self {
        Fp { value: value % M::modulus(), _modulus: PhantomData }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<M: Modulus> Debug for Fp<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, M::modulus())
    }
}

impl<M: Modulus> Display for Fp<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl<M: Modulus> Zero for Fp<M> {
    fn zero() -> Self {
        Fp { value: 0, _modulus: PhantomData }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl<M: Modulus> One for Fp<M> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<M: Modulus> Add for Fp<M> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let p = M::modulus();
        let s = self.value + rhs.value;
        Fp { value: if s >= p { s - p } else { s }, _modulus: PhantomData }
    }
}

impl<M: Modulus> Sub for Fp<M> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<M: Modulus> Neg for Fp<M> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.value == 0 {
            self
        } else {
            Fp { value: M::modulus() - self.value, _modulus: PhantomData }
        }
    }
}

impl<M: Modulus> Mul for Fp<M> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let prod = (self.value as u128 * rhs.value as u128) % M::modulus() as u128;
        Fp { value: prod as u64, _modulus: PhantomData }
    }
}

impl<M: Modulus> Div for Fp<M> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<M: Modulus> Scalar for Fp<M> {
    fn field() -> FieldKind {
        FieldKind::PrimeField(M::modulus())
    }

    fn from_i64(n: i64) -> Self {
        let p = M::modulus() as i128;
        Fp { value: (n as i128).rem_euclid(p) as u64, _modulus: PhantomData }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(M::modulus() - 2))
        }
    }

    fn parse_exact(s: &str) -> Result<Self, ParseScalarError> {
        let err = || ParseScalarError { input: s.to_string(), field: Self::field() };
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let p = BigInt::from(M::modulus());
        let reduce = |x: &str| -> Result<Self, ParseScalarError> {
            let v = BigInt::from_str(x).map_err(|_| err())?.mod_floor(&p);
            Ok(Fp::new(v.to_u64().ok_or_else(err)?))
        };
        let num = reduce(num)?;
        let den = reduce(den)?;
        let inv = den.inv().ok_or_else(err)?;
        Ok(num * inv)
    }

    fn residue(&self) -> Option<u64> {
        Some(self.value)
    }

    fn roots(poly: &[Self]) -> Vec<Self> {
        prime_field_roots(poly)
    }
}

/// Fields this small are searched exhaustively.
const BRUTE_FORCE_ROOTS_BELOW: u64 = 4096;

fn prime_field_roots<M: Modulus>(coeffs: &[Fp<M>]) -> Vec<Fp<M>> {
    let f = poly::trimmed(coeffs);
    if f.len() <= 1 {
        return Vec::new();
    }
    let p = M::modulus();
    if p < BRUTE_FORCE_ROOTS_BELOW {
        return (0..p).map(Fp::new).filter(|x| poly::eval(&f, x).is_zero()).collect();
    }
    // g = gcd(f, x^p - x) is the product of the distinct linear factors of f.
    let f = poly::monic(&f);
    let x = vec![Fp::zero(), Fp::one()];
    let xp = poly::pow_mod(&x, p as u128, &f);
    let g = poly::monic(&poly::gcd(&f, &poly::sub(&xp, &x)));
    let mut roots = Vec::new();
    split_linear_product(&g, p, 1, &mut roots);
    roots.sort();
    roots
}

/// Cantor–Zassenhaus splitting of a squarefree product of distinct linear factors.
fn split_linear_product<M: Modulus>(g: &[Fp<M>], p: u64, mut shift: u64, out: &mut Vec<Fp<M>>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(-g[0] / g[1]),
        _ => loop {
            let probe = vec![Fp::new(shift), Fp::one()];
            shift += 1;
            let mut h = poly::pow_mod(&probe, ((p - 1) / 2) as u128, g);
            if h.is_empty() {
                h.push(Fp::zero());
            }
            h[0] = h[0] - Fp::one();
            let d = poly::monic(&poly::gcd(g, &poly::trimmed(&h)));
            if d.len() > 1 && d.len() < g.len() {
                let (q, _) = poly::div_rem(g, &d);
                split_linear_product(&d, p, shift, out);
                split_linear_product(&poly::monic(&q), p, shift, out);
                return;
            }
        },
    }
}

/// Parses a field specification: `"Q"`, `"Fp 7"`, `"Fp:7"`, `"F7"` or `"F_7"`.
pub fn parse_field(spec: &str) -> Option<FieldKind> {
    let t = spec.trim();
    if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
        return Some(FieldKind::Rationals);
    }
    let rest = t
        .strip_prefix("Fp")
        .or_else(|| t.strip_prefix("F_"))
        .or_else(|| t.strip_prefix('F'))?
        .trim_start_matches([':', ' ', '_']);
    let p: u64 = rest.trim().parse().ok()?;
    is_prime(p).then_some(FieldKind::PrimeField(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fp_arithmetic_and_inverse() {
        let a = F7::from_i64(3);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert_eq!(F7::from_i64(-1).value(), 6);
        assert_eq!((F7::from_i64(5) + F7::from_i64(4)).value(), 2);
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn parse_fractions() {
        assert_eq!(Rational::parse_exact("-3/6").unwrap(), q(-1, 2));
        assert_eq!(Rational::parse_exact(" 4 ").unwrap(), q(4, 1));
        assert!(Rational::parse_exact("1/0").is_err());
        assert!(Rational::parse_exact("x").is_err());
        // 1/2 = 4 in F_7
        assert_eq!(F7::parse_exact("1/2").unwrap().value(), 4);
        assert!(F7::parse_exact("1/7").is_err());
    }

    #[test]
    fn rational_roots_of_split_polynomials() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let p = vec![q(0, 1), q(-3, 2), q(5, 2), q(1, 1)];
        assert_eq!(Rational::roots(&p), vec![q(-3, 1), q(0, 1), q(1, 2)]);
        // x^2 + 1 has no rational roots
        assert!(Rational::roots(&[q(1, 1), q(0, 1), q(1, 1)]).is_empty());
    }

    #[test]
    fn prime_field_roots_small_and_large() {
        // x^2 - 1 over F_7
        let p = vec![F7::from_i64(-1), F7::zero(), F7::one()];
        let r: Vec<u64> = F7::roots(&p).into_iter().map(|x| x.value()).collect();
        assert_eq!(r, vec![1, 6]);

        type Big = Fp<ConstPrime<1_000_003>>;
        // (x - 5)(x - 17)(x^2 + 1); -1 is a non-residue mod 1000003 (= 3 mod 4)
        let lin = |a: i64| vec![Big::from_i64(-a), Big::one()];
        let f = poly::mul(&poly::mul(&lin(5), &lin(17)), &[Big::one(), Big::zero(), Big::one()]);
        let r: Vec<u64> = Big::roots(&f).into_iter().map(|x| x.value()).collect();
        assert_eq!(r, vec![5, 17]);
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(parse_field("Q"), Some(FieldKind::Rationals));
        assert_eq!(parse_field("Fp 7"), Some(FieldKind::PrimeField(7)));
        assert_eq!(parse_field("F_5"), Some(FieldKind::PrimeField(5)));
        assert_eq!(parse_field("Fp 8"), None);
    }
}
