use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{self, IntPoly};
use super::{parse_rational, ExactError, Rational};

/// The field ℚ(ζ_N): conductor plus the modulus `Φ_N`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u64,
    modulus: IntPoly,
}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        Arc::new(CyclotomicField {
            conductor,
            modulus: poly::cyclotomic_polynomial(conductor),
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }
}

/// An exact element of ℚ(ζ_N), stored in the power basis `1, ζ, …, ζ^{φ(N)-1}`
/// reduced modulo `Φ_N`.
///
/// Elements of different conductors can be mixed freely; the result lives at
/// the least common multiple. Equality is exact and conductor independent.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            field: CyclotomicField::new(1),
            coeffs: vec![q],
        }
    }

    /// Rational `q` viewed inside an existing field.
    pub fn rational_in(field: &Arc<CyclotomicField>, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = q;
        Cyclotomic {
            field: field.clone(),
            coeffs,
        }
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_pow(conductor: u64, k: i64) -> Self {
        let field = CyclotomicField::new(conductor);
        Self::zeta_pow_in(&field, k)
    }

    pub fn zeta(conductor: u64) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    fn zeta_pow_in(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = field.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        let mut coeffs = vec![Rational::zero(); e.max(field.degree() - 1) + 1];
        coeffs[e] = Rational::one();
        poly::rat_reduce_monic(&mut coeffs, &field.modulus);
        Cyclotomic {
            field: field.clone(),
            coeffs,
        }
    }

    /// `Σ terms[e]·ζ_N^e`, reduced. Exponents may be any nonnegative integers.
    pub fn from_terms(conductor: u64, terms: &[(usize, Rational)]) -> Self {
        let field = CyclotomicField::new(conductor);
        let top = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); (top + 1).max(field.degree())];
        for (e, c) in terms {
            coeffs[*e] += c;
        }
        poly::rat_reduce_monic(&mut coeffs, &field.modulus);
        Cyclotomic { field, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coefficients in the power basis of the element's own field.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs, exponents increasing.
    pub fn terms(&self) -> Vec<(usize, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_one())
    }

    /// The value as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express in ℚ(ζ_M) using `ζ_N = ζ_M^{M/N}`; `N` must divide `M`.
    pub fn rebase(&self, target: &Arc<CyclotomicField>) -> Self {
        if Arc::ptr_eq(&self.field, target) || self.field.conductor == target.conductor {
            return Cyclotomic {
                field: target.clone(),
                coeffs: self.coeffs.clone(),
            };
        }
        let n = self.field.conductor;
        let m = target.conductor;
        assert!(m.is_multiple_of(n), "cannot rebase conductor {n} to {m}");
        let step = (m / n) as usize;
        let len = ((self.coeffs.len().saturating_sub(1)) * step + 1).max(target.degree());
        let mut coeffs = vec![Rational::zero(); len];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[e * step] = c.clone();
            }
        }
        poly::rat_reduce_monic(&mut coeffs, &target.modulus);
        Cyclotomic {
            field: target.clone(),
            coeffs,
        }
    }

    /// Bring two elements into a common field.
    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.field.conductor == other.field.conductor {
            return (self.clone(), other.rebase(&self.field));
        }
        let l = poly::lcm(self.field.conductor, other.field.conductor);
        let field = if l == self.field.conductor {
            self.field.clone()
        } else if l == other.field.conductor {
            other.field.clone()
        } else {
            CyclotomicField::new(l)
        };
        (self.rebase(&field), other.rebase(&field))
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        let inv = poly::rat_inverse_mod(&self.coeffs, &self.field.modulus).ok_or(ExactError::DivisionByZero)?;
        let mut coeffs = inv;
        coeffs.resize(self.field.degree(), Rational::zero());
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }

    /// Complex conjugation, `ζ_N ↦ ζ_N^{N-1}`.
    pub fn conj(&self) -> Self {
        let n = self.field.conductor as usize;
        let mut coeffs = vec![Rational::zero(); n.max(self.field.degree())];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[(n - e) % n] += c;
            }
        }
        poly::rat_reduce_monic(&mut coeffs, &self.field.modulus);
        Cyclotomic {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self, ExactError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyclotomic::rational_in(&self.field, Rational::one());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Floating-point value at `ζ_N = e^{2πi/N}`. For display only; never
    /// used to decide anything.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let angle = 2.0 * std::f64::consts::PI * e as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }
}

/// `e^{2πi t}` as an exact element: with `t = a/b` reduced mod 1, `ζ_b^a`.
pub fn root_of_unity(t: &Rational) -> Cyclotomic {
    let reduced = t - t.floor();
    let den = reduced.denom().to_u64().expect("conductor too large");
    let num = reduced.numer().to_i64().expect("exponent too large");
    Cyclotomic::zeta_pow(den, num)
}

/// Floating approximation rounded to `digits` decimal places.
pub fn embed_numeric(a: &Cyclotomic, digits: u32) -> Complex64 {
    let z = a.to_complex();
    let scale = 10f64.powi(digits.min(15) as i32);
    let round = |x: f64| {
        let r = (x * scale).round() / scale;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    Complex64::new(round(z.re), round(z.im))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let n = self.field.conductor;
        for (i, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{n}^{e}")?,
                (_, false) => write!(f, "{mag}*z{n}^{e}")?,
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                let (a, b) = self.unify(rhs);
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(&a, &b)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Cyclotomic {
    field: a.field.clone(),
    coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
});

binop!(Sub, sub, |a, b| Cyclotomic {
    field: a.field.clone(),
    coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
});

binop!(Mul, mul, |a, b| {
    let d = a.field.degree();
    let mut prod = vec![Rational::zero(); 2 * d - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    poly::rat_reduce_monic(&mut prod, &a.field.modulus);
    Cyclotomic {
        field: a.field.clone(),
        coeffs: prod,
    }
});

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclotomicRepr {
    conductor: u64,
    terms: Vec<(usize, String)>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor(),
            terms: self
                .terms()
                .into_iter()
                .map(|(e, c)| (e, super::format_rational(&c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = CyclotomicRepr::deserialize(d)?;
        if repr.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let degree = poly::totient(repr.conductor) as usize;
        let mut last: Option<usize> = None;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (e, c) in repr.terms {
            if e >= degree {
                return Err(D::Error::custom(format!(
                    "exponent {e} not below deg Φ_{} = {degree}",
                    repr.conductor
                )));
            }
            if last.is_some_and(|l| l >= e) {
                return Err(D::Error::custom("exponents must be strictly increasing"));
            }
            last = Some(e);
            terms.push((e, parse_rational(&c).map_err(D::Error::custom)?));
        }
        Ok(Cyclotomic::from_terms(repr.conductor, &terms))
    }
}
