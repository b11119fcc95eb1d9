//! Dense univariate polynomials, coefficients stored in ascending degree order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Integer polynomial, `coeffs[i]` is the coefficient of `x^i`. No trailing zeros.
pub type IntPoly = Vec<BigInt>;

/// Rational polynomial, `coeffs[i]` is the coefficient of `x^i`. No trailing zeros.
pub type RatPoly = Vec<Rational>;

fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by `Φ_d` for
/// every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut num: IntPoly = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            let (q, r) = int_divrem_monic(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

/// Division with remainder by a monic integer polynomial.
pub fn int_divrem_monic(a: &IntPoly, m: &IntPoly) -> (IntPoly, IntPoly) {
    let dm = m.len() - 1;
    debug_assert!(m[dm].is_one());
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() <= dm {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dm];
    for top in (dm..rem.len()).rev() {
        let c = rem[top].clone();
        if c.is_zero() {
            continue;
        }
        let shift = top - dm;
        quot[shift] = c.clone();
        for (i, mi) in m.iter().enumerate() {
            rem[shift + i] -= &c * mi;
        }
    }
    rem.truncate(dm);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a monic integer polynomial, in place; result has
/// exactly `deg m` slots (zero padded).
pub fn rat_reduce_monic(a: &mut Vec<Rational>, m: &IntPoly) {
    let dm = m.len() - 1;
    for top in (dm..a.len()).rev() {
        if a[top].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut a[top], Rational::zero());
        let shift = top - dm;
        for (i, mi) in m.iter().enumerate().take(dm) {
            if !mi.is_zero() {
                a[shift + i] -= &c * Rational::from_integer(mi.clone());
            }
        }
    }
    a.resize(dm, Rational::zero());
}

fn rat_divrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut rem = a.clone();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for top in (db..rem.len()).rev() {
        if rem[top].is_zero() {
            continue;
        }
        let c = &rem[top] * &lead_inv;
        let shift = top - db;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        quot[shift] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn rat_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn rat_sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible monic `m`, via the extended Euclidean
/// algorithm. Returns `None` when `a ≡ 0`.
pub fn rat_inverse_mod(a: &RatPoly, m: &IntPoly) -> Option<RatPoly> {
    let mut r0: RatPoly = m.iter().map(|c| Rational::from_integer(c.clone())).collect();
    let mut r1 = a.clone();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut t0: RatPoly = Vec::new();
    let mut t1: RatPoly = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let t2 = rat_sub(&t0, &rat_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is the gcd; m irreducible so it is a nonzero constant.
    if r0.len() != 1 {
        return None;
    }
    let scale = r0[0].recip();
    let mut inv: RatPoly = t0.into_iter().map(|c| c * &scale).collect();
    let (_, red) = rat_divrem(&inv, &m.iter().map(|c| Rational::from_integer(c.clone())).collect());
    inv = red;
    Some(inv)
}

/// Content-free check used by tests: does the monic `m` divide `a` exactly over ℚ.
pub fn rat_divisible_by(a: &RatPoly, m: &IntPoly) -> bool {
    let mr: RatPoly = m.iter().map(|c| Rational::from_integer(c.clone())).collect();
    rat_divrem(a, &mr).1.is_empty()
}

/// Euler's totient, the degree of `Φ_n`.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(7), ints(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi8_times_divisors_is_x8_minus_1() {
        let mut prod = ints(&[1]);
        for d in [1, 2, 4, 8] {
            prod = int_mul(&prod, &cyclotomic_polynomial(d));
        }
        assert_eq!(prod, ints(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn product_over_divisors_up_to_64() {
        for n in 1..=64u64 {
            let mut prod = ints(&[1]);
            for d in (1..=n).filter(|d| n % d == 0) {
                prod = int_mul(&prod, &cyclotomic_polynomial(d));
            }
            let mut expect = vec![BigInt::zero(); n as usize + 1];
            expect[0] = BigInt::from(-1);
            expect[n as usize] = BigInt::one();
            assert_eq!(prod, expect, "n = {n}");
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, totient(n));
        }
    }

    #[test]
    fn inverse_of_x_mod_phi5() {
        let m = cyclotomic_polynomial(5);
        let x: RatPoly = vec![Rational::zero(), Rational::one()];
        let inv = rat_inverse_mod(&x, &m).unwrap();
        // x^{-1} = x^4 = -1 - x - x^2 - x^3
        let minus_one = -Rational::one();
        assert_eq!(
            inv,
            vec![minus_one.clone(), minus_one.clone(), minus_one.clone(), minus_one]
        );
        assert!(rat_inverse_mod(&Vec::new(), &m).is_none());
    }
}
