//! Exact arithmetic over ℚ, ℚ(√2) and the Eisenstein field ℚ(ω).
//!
//! A [`Scalar`] is `a + b·θ` with rational `a`, `b` and `θ` either √2 or
//! ω = e^{2πi/3}. Multiplication in the Eisenstein field uses ω² = −1−ω,
//! so orthogonality of complex rays is decided without rounding.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field a scalar lives in. `Rational` values embed into either extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Rational,
    Quadratic,
    Eisenstein,
}

impl Ring {
    /// Smallest ring containing both, if any. ℚ(√2) and ℚ(ω) do not mix.
    pub fn join(self, other: Ring) -> Option<Ring> {
        match (self, other) {
            (a, b) if a == b => Some(a),
            (Ring::Rational, b) | (b, Ring::Rational) => Some(b),
            _ => None,
        }
    }

    pub fn join_all<I: IntoIterator<Item = Ring>>(rings: I) -> Result<Ring> {
        rings.into_iter().try_fold(Ring::Rational, |acc, r| {
            acc.join(r).ok_or(Error::MixedRings(acc, r))
        })
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `a + b·θ`; `b` is zero whenever the ring is `Rational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    ring: Ring,
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    pub fn new(ring: Ring, a: BigRational, b: BigRational) -> Scalar {
        let b = if ring == Ring::Rational {
            debug_assert!(b.is_zero(), "rational scalar with irrational part");
            BigRational::zero()
        } else {
            b
        };
        Scalar { ring, a, b }
    }

    pub fn integer(n: i64) -> Scalar {
        Scalar::new(Ring::Rational, q(n), BigRational::zero())
    }

    pub fn rational(value: BigRational) -> Scalar {
        Scalar::new(Ring::Rational, value, BigRational::zero())
    }

    pub fn eisenstein(a: i64, b: i64) -> Scalar {
        Scalar::new(Ring::Eisenstein, q(a), q(b))
    }

    pub fn quadratic(a: i64, b: i64) -> Scalar {
        Scalar::new(Ring::Quadratic, q(a), q(b))
    }

    /// ω = e^{2πi/3}.
    pub fn omega() -> Scalar {
        Scalar::eisenstein(0, 1)
    }

    pub fn sqrt2() -> Scalar {
        Scalar::quadratic(0, 1)
    }

    pub fn zero(ring: Ring) -> Scalar {
        Scalar::new(ring, BigRational::zero(), BigRational::zero())
    }

    pub fn one(ring: Ring) -> Scalar {
        Scalar::new(ring, BigRational::one(), BigRational::zero())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Rational part.
    pub fn re_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √2 or ω.
    pub fn theta_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The value as a rational number, if it has no irrational part.
    pub fn to_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Re-tag into `ring`; only the embedding of ℚ is allowed to change tags.
    pub fn promote(&self, ring: Ring) -> Result<Scalar> {
        match self.ring.join(ring) {
            Some(r) if r == ring => Ok(Scalar::new(ring, self.a.clone(), self.b.clone())),
            _ => Err(Error::MixedRings(self.ring, ring)),
        }
    }

    /// Complex conjugate. Identity on real fields; on ℚ(ω),
    /// `a + bω ↦ (a − b) − bω` because conj(ω) = ω² = −1 − ω.
    pub fn conjugate(&self) -> Scalar {
        match self.ring {
            Ring::Rational | Ring::Quadratic => self.clone(),
            Ring::Eisenstein => Scalar::new(Ring::Eisenstein, &self.a - &self.b, -&self.b),
        }
    }

    /// Field norm to ℚ: `a² − 2b²` or `a² − ab + b²`.
    pub fn norm(&self) -> BigRational {
        match self.ring {
            Ring::Rational => &self.a * &self.a,
            Ring::Quadratic => &self.a * &self.a - q(2) * &self.b * &self.b,
            Ring::Eisenstein => &self.a * &self.a - &self.a * &self.b + &self.b * &self.b,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let inv = match self.ring {
            Ring::Rational => Scalar::new(Ring::Rational, self.a.recip(), BigRational::zero()),
            Ring::Quadratic => Scalar::new(Ring::Quadratic, &self.a / &n, -&self.b / &n),
            Ring::Eisenstein => {
                let c = self.conjugate();
                Scalar::new(Ring::Eisenstein, c.a / &n, c.b / &n)
            }
        };
        Some(inv)
    }

    /// Floating-point complex value, for diagnostics and cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let a = rational_to_f64(&self.a);
        let b = rational_to_f64(&self.b);
        match self.ring {
            Ring::Rational => (a, 0.0),
            Ring::Quadratic => (a + b * std::f64::consts::SQRT_2, 0.0),
            Ring::Eisenstein => (a - 0.5 * b, b * 3f64.sqrt() / 2.0),
        }
    }

    fn scale(&self, factor: &BigRational) -> Scalar {
        Scalar::new(self.ring, &self.a * factor, &self.b * factor)
    }

    fn joined(&self, other: &Scalar) -> Ring {
        match self.ring.join(other.ring) {
            Some(r) => r,
            None => panic!("arithmetic between {:?} and {:?} scalars", self.ring, other.ring),
        }
    }
}

fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(self.joined(rhs), &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(self.joined(rhs), &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let ring = self.joined(rhs);
        let (a, b, c, d) = (&self.a, &self.b, &rhs.a, &rhs.b);
        match ring {
            Ring::Rational => Scalar::new(ring, a * c, BigRational::zero()),
            Ring::Quadratic => Scalar::new(ring, a * c + q(2) * b * d, a * d + b * c),
            // (a + bω)(c + dω) = ac + (ad + bc)ω + bd·ω², ω² = −1 − ω
            Ring::Eisenstein => {
                let bd = b * d;
                Scalar::new(ring, a * c - &bd, a * d + b * c - bd)
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(self.ring, -&self.a, -&self.b)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn coefficient(c: &BigRational) -> String {
    if c.is_one() {
        String::new()
    } else if *c == -BigRational::one() {
        "-".to_string()
    } else {
        c.to_string()
    }
}

impl fmt::Display for Scalar {
    /// Integer coefficients render in the `w`/`w2`/`r2` scalar grammar.
    /// Non-integers render as `p/q`, which the grammar does not parse.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.ring {
            Ring::Rational => return write!(f, "{}", self.a),
            Ring::Quadratic => "r2",
            Ring::Eisenstein => "w",
        };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.ring == Ring::Eisenstein && self.a == self.b {
            // a + aω = −aω²
            return write!(f, "{}w2", coefficient(&-&self.a));
        }
        if self.a.is_zero() {
            return write!(f, "{}{}", coefficient(&self.b), unit);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}{}", self.a, sign, coefficient(&self.b.abs()), unit)
    }
}

fn normalize_aliases(text: &str) -> String {
    text.replace("ω²", "w2")
        .replace('ω', "w")
        .replace("√2", "r2")
        .replace('√', "r")
        .replace('−', "-")
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `term (('+'|'-') term)*` with terms `INT`, `[INT]w`, `[INT]w2`,
    /// `[INT]r2` and an optional leading sign.
    fn from_str(text: &str) -> Result<Scalar> {
        let bad = || Error::MalformedScalar(text.to_string());
        let src = normalize_aliases(text.trim());
        let bytes = src.as_bytes();
        if bytes.is_empty() {
            return Err(bad());
        }
        let mut pos = 0;
        let mut ring = Ring::Rational;
        let mut a = BigRational::zero();
        let mut b = BigRational::zero();
        let mut first = true;
        while pos < bytes.len() {
            let mut negative = false;
            match bytes[pos] {
                b'+' | b'-' => {
                    negative = bytes[pos] == b'-';
                    pos += 1;
                }
                _ if !first => return Err(bad()),
                _ => {}
            }
            first = false;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits = &src[start..pos];
            let rest = &src[pos..];
            let (unit, used) = if rest.starts_with("w2") {
                (Some((Ring::Eisenstein, true)), 2)
            } else if rest.starts_with('w') {
                (Some((Ring::Eisenstein, false)), 1)
            } else if rest.starts_with("r2") {
                (Some((Ring::Quadratic, false)), 2)
            } else {
                (None, 0)
            };
            if digits.is_empty() && unit.is_none() {
                return Err(bad());
            }
            pos += used;
            let mut value = if digits.is_empty() {
                BigRational::one()
            } else {
                BigRational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?)
            };
            if negative {
                value = -value;
            }
            match unit {
                None => a += value,
                Some((r, square)) => {
                    ring = ring.join(r).ok_or(Error::MixedRings(ring, r))?;
                    if square {
                        a -= &value;
                        b -= value;
                    } else {
                        b += value;
                    }
                }
            }
        }
        Ok(Scalar::new(ring, a, b))
    }
}

/// A nonzero vector with components from a single ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayVector {
    ring: Ring,
    components: Vec<Scalar>,
}

impl RayVector {
    /// Promotes all components to their common ring.
    pub fn new(components: Vec<Scalar>) -> Result<RayVector> {
        let ring = Ring::join_all(components.iter().map(Scalar::ring))?;
        RayVector::in_ring(ring, components)
    }

    pub fn in_ring(ring: Ring, components: Vec<Scalar>) -> Result<RayVector> {
        if components.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroVector);
        }
        let components = components
            .iter()
            .map(|c| c.promote(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(RayVector { ring, components })
    }

    /// Convenience constructor for small integer vectors.
    pub fn integers(values: &[i64]) -> Result<RayVector> {
        RayVector::new(values.iter().map(|&v| Scalar::integer(v)).collect())
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Scalar] {
        &self.components
    }

    pub fn scaled(&self, factor: &Scalar) -> Result<RayVector> {
        RayVector::new(self.components.iter().map(|c| c * factor).collect())
    }

    /// Integral representative with coprime coefficients, first nonzero
    /// component positive when it is rational.
    pub fn primitive_integral(&self) -> RayVector {
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in &self.components {
            for part in [&c.a, &c.b] {
                lcm = lcm.lcm(part.denom());
            }
        }
        let lcm = BigRational::from_integer(lcm);
        let cleared: Vec<Scalar> = self.components.iter().map(|c| c.scale(&lcm)).collect();
        for c in &cleared {
            for part in [&c.a, &c.b] {
                gcd = gcd.gcd(part.numer());
            }
        }
        let mut factor = BigRational::new(BigInt::one(), gcd);
        let lead = cleared.iter().find(|c| !c.is_zero()).expect("nonzero vector");
        if lead.b.is_zero() && lead.a.is_negative() {
            factor = -factor;
        }
        RayVector {
            ring: self.ring,
            components: cleared.iter().map(|c| c.scale(&factor)).collect(),
        }
    }
}

impl fmt::Display for RayVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// Canonical representative of a projective ray: first nonzero component is 1.
///
/// Equality, hashing and order ignore the ring tag of a ray whose entries
/// are all rational, so a rational ray promoted into an extension still
/// equals its demoted form.
#[derive(Clone, Debug)]
pub struct Ray(RayVector);

impl Ray {
    fn effective_ring(&self) -> Ring {
        if self.0.components.iter().all(|c| c.b.is_zero()) {
            Ring::Rational
        } else {
            self.0.ring
        }
    }

    fn parts(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.0.components.iter().map(|c| (&c.a, &c.b))
    }
}

impl PartialEq for Ray {
    fn eq(&self, other: &Ray) -> bool {
        self.effective_ring() == other.effective_ring() && self.parts().eq(other.parts())
    }
}

impl Eq for Ray {}

impl std::hash::Hash for Ray {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.effective_ring().hash(state);
        for (a, b) in self.parts() {
            a.hash(state);
            b.hash(state);
        }
    }
}

impl Ord for Ray {
    fn cmp(&self, other: &Ray) -> std::cmp::Ordering {
        self.parts()
            .cmp(other.parts())
            .then_with(|| self.effective_ring().cmp(&other.effective_ring()))
    }
}

impl PartialOrd for Ray {
    fn partial_cmp(&self, other: &Ray) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ray {
    pub fn vector(&self) -> &RayVector {
        &self.0
    }

    pub fn ring(&self) -> Ring {
        self.0.ring
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn components(&self) -> &[Scalar] {
        &self.0.components
    }

    pub fn promote(&self, ring: Ring) -> Result<Ray> {
        Ok(Ray(RayVector::in_ring(ring, self.0.components.clone())?))
    }
}

impl From<&RayVector> for Ray {
    fn from(u: &RayVector) -> Ray {
        normalize_ray(u)
    }
}

impl fmt::Display for Ray {
    /// Clears denominators so the output stays inside the scalar grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.primitive_integral())
    }
}

pub fn conjugate(x: &Scalar) -> Scalar {
    x.conjugate()
}

/// `Σ conj(uᵢ)·vᵢ`.
pub fn hermitian_inner(u: &RayVector, v: &RayVector) -> Result<Scalar> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    let ring = u.ring.join(v.ring).ok_or(Error::MixedRings(u.ring, v.ring))?;
    Ok(u
        .components
        .iter()
        .zip(&v.components)
        .fold(Scalar::zero(ring), |acc, (x, y)| &acc + &(&x.conjugate() * y)))
}

/// Whether two ray representatives are orthogonal. Panics on mismatched
/// dimension or ring; callers compare rays from one coordinatization.
pub fn orthogonal(u: &Ray, v: &Ray) -> bool {
    hermitian_inner(u.vector(), v.vector())
        .expect("rays share dimension and ring")
        .is_zero()
}

/// True iff every 2×2 minor `uᵢvⱼ − uⱼvᵢ` vanishes.
pub fn is_proportional(u: &RayVector, v: &RayVector) -> bool {
    if u.dim() != v.dim() || u.ring.join(v.ring).is_none() {
        return false;
    }
    let n = u.dim();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let minor = &(&u.components[i] * &v.components[j]) - &(&u.components[j] * &v.components[i]);
            minor.is_zero()
        })
    })
}

/// Divides by the first nonzero component.
pub fn normalize_ray(u: &RayVector) -> Ray {
    let lead = u
        .components
        .iter()
        .find(|c| !c.is_zero())
        .expect("RayVector is nonzero by construction");
    let inv = lead.inverse().expect("nonzero lead");
    let components: Vec<Scalar> = u.components.iter().map(|c| c * &inv).collect();
    // a ray with rational entries lives in ℚ whatever ring it came from
    if components.iter().all(|c| c.b.is_zero()) {
        let components = components.into_iter().map(|c| Scalar::new(Ring::Rational, c.a, c.b)).collect();
        return Ray(RayVector { ring: Ring::Rational, components });
    }
    Ray(RayVector { ring: u.ring, components })
}

/// Parses `{s1,s2,...}` or `s1,s2,...` into a vector.
pub fn parse_vector(text: &str) -> Result<RayVector> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}');
    let comps = body
        .split(',')
        .map(str::parse)
        .collect::<Result<Vec<Scalar>>>()?;
    RayVector::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn v(text: &str) -> RayVector {
        parse_vector(text).unwrap()
    }

    #[test]
    fn omega_identities() {
        let w = Scalar::omega();
        let w2 = &w * &w;
        assert_eq!(w2, Scalar::eisenstein(-1, -1));
        assert!((&w2 * &w).is_one());
        assert_eq!(w.conjugate(), w2);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&Scalar::omega()), Scalar::eisenstein(-1, -1));
        assert_eq!(conjugate(&Scalar::integer(3)), Scalar::integer(3));
        // 2ω² = −2 − 2ω ↦ 2ω
        let two_w2 = s("2w2");
        assert_eq!(two_w2, Scalar::eisenstein(-2, -2));
        assert_eq!(conjugate(&two_w2), Scalar::eisenstein(0, 2));
        assert_eq!(conjugate(&s("1+r2")), s("1+r2"));
    }

    #[test]
    fn conjugation_is_involution_on_grid() {
        for a in -6..=6 {
            for b in -6..=6 {
                let x = Scalar::eisenstein(a, b);
                assert_eq!(x.conjugate().conjugate(), x);
                // the conjugate matches the floating point complex conjugate
                let (re, im) = x.to_complex();
                let (cre, cim) = x.conjugate().to_complex();
                assert!((re - cre).abs() < 1e-12 && (im + cim).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        assert!(hermitian_inner(&v("1,0,0"), &v("0,1,0")).unwrap().is_zero());
        // vertices 4 and 5 of the 69-50
        assert!(hermitian_inner(&v("1,-w2,0"), &v("1,w2,0")).unwrap().is_zero());
        let u = v("1,w2,0");
        let norm = hermitian_inner(&u, &u).unwrap();
        assert_eq!(norm, Scalar::integer(2).promote(Ring::Eisenstein).unwrap());
        // floating point cross-check
        let float: f64 = u
            .components()
            .iter()
            .map(|c| {
                let (re, im) = c.to_complex();
                re * re + im * im
            })
            .sum();
        assert!((float - 2.0).abs() < 1e-12);
    }

    #[test]
    fn inner_product_mismatch() {
        assert_eq!(
            hermitian_inner(&v("1,0,0"), &v("1,0")),
            Err(Error::DimensionMismatch(3, 2))
        );
        assert!(matches!(
            hermitian_inner(&v("1,w,0"), &v("1,r2,0")),
            Err(Error::MixedRings(..))
        ));
    }

    #[test]
    fn proportionality_examples() {
        assert!(is_proportional(&v("0,0,1"), &v("0,0,5")));
        assert!(is_proportional(&v("0,0,w"), &v("0,0,1")));
        assert!(!is_proportional(&v("1,0,0"), &v("0,1,0")));
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(normalize_ray(&v("0,0,2w")), normalize_ray(&v("0,0,1")));
        assert_eq!(normalize_ray(&v("5,0,0")).vector(), &v("1,0,0"));
        // (2ω)⁻¹ = ω²/2 = (−1−ω)/2
        let ray = normalize_ray(&v("2w,1,1"));
        let half_w2 = Scalar::new(Ring::Eisenstein, BigRational::new((-1).into(), 2.into()), BigRational::new((-1).into(), 2.into()));
        assert!(ray.components()[0].is_one());
        assert_eq!(ray.components()[1], half_w2);
        assert_eq!(ray.components()[2], half_w2);
        assert!((&s("2w") * &half_w2).is_one());
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(parse_vector("0,0,0"), Err(Error::ZeroVector));
    }

    #[test]
    fn scalar_grammar() {
        assert_eq!(s("0"), Scalar::integer(0));
        assert_eq!(s("-1"), Scalar::integer(-1));
        assert_eq!(s("2w"), Scalar::eisenstein(0, 2));
        assert_eq!(s("-w2"), Scalar::eisenstein(1, 1));
        assert_eq!(s("r2"), Scalar::sqrt2());
        assert_eq!(s("1+w"), Scalar::eisenstein(1, 1));
        assert_eq!(s("3-2r2"), Scalar::quadratic(3, -2));
        assert_eq!(s("2ω²"), s("2w2"));
        assert_eq!(s("−√2"), s("-r2"));
        for bad in ["", "+", "w3", "1+", "2 w", "1w2w", "x", "1--1"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} parsed");
        }
        assert!(matches!("w+r2".parse::<Scalar>(), Err(Error::MixedRings(..))));
    }

    #[test]
    fn display_round_trips_integral_scalars() {
        for a in -3..=3 {
            for b in -3..=3 {
                for x in [Scalar::eisenstein(a, b), Scalar::quadratic(a, b)] {
                    let text = x.to_string();
                    let back: Scalar = text.parse().unwrap();
                    let back = back.promote(x.ring()).unwrap();
                    assert_eq!(back, x, "{text}");
                }
            }
        }
        assert_eq!(s("2w2").to_string(), "2w2");
        assert_eq!(s("-w2").to_string(), "-w2");
        assert_eq!(s("1-w").to_string(), "1-w");
    }

    #[test]
    fn ray_display_clears_denominators() {
        let ray = normalize_ray(&v("2w,1,1"));
        assert_eq!(ray.to_string(), "{2,w2,w2}");
        let ray = normalize_ray(&v("-2,4,6"));
        assert_eq!(ray.to_string(), "{1,-2,-3}");
    }
}
