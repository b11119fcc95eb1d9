//! Strategies and oracle checks shared by the property suites and the
//! acceptance run.
#![allow(dead_code)]

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use spinmtc::exactnum::{rational, CycMatrix, Cyclotomic, Rational};
use spinmtc::verma::{bracket, straighten, ModeKind, NSMode, PBWMonomial, Terms};

pub type Check = Result<(), TestCaseError>;
type Bracketed = (BTreeMap<NSMode, Rational>, Rational);

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| rational(a, b))
}

pub fn element(n: u64) -> impl Strategy<Value = Cyclotomic> {
    proptest::collection::vec((0..n as usize, small_rational()), 0..5)
        .prop_map(move |terms| Cyclotomic::from_terms(n, &terms))
}

pub fn triple() -> impl Strategy<Value = (u64, Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u64..=24).prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))
}

#[allow(clippy::eq_op)]
pub fn check_field_axioms(a: &Cyclotomic, b: &Cyclotomic, c: &Cyclotomic) -> Check {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert!((&a - &a).is_zero());
    prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    if !a.is_zero() {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert_eq!((&b * &a).div(&a).unwrap(), b.clone());
    } else {
        prop_assert!(a.inv().is_err());
    }
    Ok(())
}

pub fn entry() -> impl Strategy<Value = Cyclotomic> {
    prop_oneof![
        Just(Cyclotomic::zero()),
        element(8),
        element(5),
        (-3i64..=3).prop_map(Cyclotomic::from_int),
    ]
}

/// A matrix whose later rows are combinations of a few independent ones,
/// so rank deficiency is common.
pub fn matrix() -> impl Strategy<Value = CycMatrix> {
    (1usize..=4, 1usize..=4, 1usize..=4).prop_flat_map(|(rows, cols, basis)| {
        let basis = basis.min(rows);
        (
            proptest::collection::vec(proptest::collection::vec(entry(), cols), basis),
            proptest::collection::vec(proptest::collection::vec(-2i64..=2, basis), rows - basis),
        )
            .prop_map(move |(base, combos)| {
                let mut all = base.clone();
                for k in combos {
                    let row = (0..cols)
                        .map(|j| {
                            base.iter()
                                .zip(&k)
                                .map(|(r, &f)| &r[j] * &Cyclotomic::from_int(f))
                                .sum::<Cyclotomic>()
                        })
                        .collect();
                    all.push(row);
                }
                CycMatrix::from_rows(all).unwrap()
            })
    })
}

pub fn numeric_rank(m: &CycMatrix) -> usize {
    let a = DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_complex());
    let sv = a.svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0f64, f64::max);
    sv.iter().filter(|&&s| s > 1e-9 * top.max(1.0)).count()
}

pub fn check_rank(m: &CycMatrix) -> Check {
    let (rank, det) = m.rank_det();
    prop_assert_eq!(rank, numeric_rank(m));
    if let Some(d) = det {
        prop_assert_eq!(d.is_zero(), rank < m.rows());
    }
    prop_assert_eq!(m.transpose().rank(), rank);
    Ok(())
}

/// Word rewriter with its own copy of the relations, used as an oracle.
/// A term is a word applied to the highest-weight vector; each step picks
/// one applicable rewrite among all terms according to `choices`.
pub struct Rewriter {
    pub c: Rational,
    pub h: Rational,
}

pub type Word = Vec<(char, i64)>; // kind, doubled index

impl Rewriter {
    fn comm(&self, x: (char, i64), y: (char, i64)) -> (Vec<(Rational, (char, i64))>, Rational) {
        let (a, b) = (x.1, y.1);
        let c = &self.c;
        match (x.0, y.0) {
            ('L', 'L') => {
                let (m, n) = (a / 2, b / 2);
                let central = if m + n == 0 {
                    c * rational(m * m * m - m, 12)
                } else {
                    Rational::zero()
                };
                (vec![(rational(m - n, 1), ('L', a + b))], central)
            }
            ('L', 'G') => (vec![(rational(a, 4) - rational(b, 2), ('G', a + b))], Rational::zero()),
            ('G', 'L') => (vec![(rational(a, 2) - rational(b, 4), ('G', a + b))], Rational::zero()),
            _ => {
                let central = if a + b == 0 {
                    c * (rational(a * a, 12) - rational(1, 12))
                } else {
                    Rational::zero()
                };
                (vec![(rational(2, 1), ('L', a + b))], central)
            }
        }
    }

    fn key(m: (char, i64)) -> (u8, i64) {
        ((m.0 == 'L') as u8, m.1)
    }

    pub fn normal(&self, start: Word, choices: &[usize]) -> BTreeMap<Word, Rational> {
        let mut terms: BTreeMap<Word, Rational> = BTreeMap::new();
        terms.insert(start, Rational::one());
        let mut step = 0usize;
        loop {
            // (term, position); position == len means "rightmost mode acts on v"
            let mut sites = vec![];
            for w in terms.keys() {
                if let Some(&last) = w.last() {
                    if last.1 >= 0 {
                        sites.push((w.clone(), w.len()));
                    }
                }
                for i in 0..w.len().saturating_sub(1) {
                    let (x, y) = (w[i], w[i + 1]);
                    let bad = (x.1 >= 0 && y.1 < 0)
                        || (x.1 < 0 && y.1 < 0 && (Self::key(x) > Self::key(y) || (x == y && x.0 == 'G')));
                    if bad {
                        sites.push((w.clone(), i));
                    }
                }
            }
            if sites.is_empty() {
                return terms;
            }
            let pick = choices.get(step % choices.len().max(1)).copied().unwrap_or(0) % sites.len();
            step += 1;
            let (w, i) = sites.swap_remove(pick);
            let k = terms.remove(&w).unwrap();
            let mut add = |word: Word, coeff: Rational| {
                if coeff.is_zero() {
                    return;
                }
                let e = terms.entry(word.clone()).or_insert_with(Rational::zero);
                *e += coeff;
                if e.is_zero() {
                    terms.remove(&word);
                }
            };
            if i == w.len() {
                let last = w[i - 1];
                if last == ('L', 0) {
                    add(w[..i - 1].to_vec(), &k * &self.h);
                }
                continue;
            }
            let (x, y) = (w[i], w[i + 1]);
            let splice = |mid: &[(char, i64)]| [&w[..i], mid, &w[i + 2..]].concat();
            if x == y {
                // G_r G_r = L_{2r}
                add(splice(&[('L', 2 * x.1)]), k.clone());
                continue;
            }
            let sign = if x.0 == 'G' && y.0 == 'G' {
                -Rational::one()
            } else {
                Rational::one()
            };
            add(splice(&[y, x]), &sign * &k);
            let (modes, central) = self.comm(x, y);
            for (coeff, z) in modes {
                add(splice(&[z]), &coeff * &k);
            }
            add(splice(&[]), &central * &k);
        }
    }
}

pub fn to_modes(w: &Word) -> Vec<NSMode> {
    w.iter()
        .map(|&(k, t)| NSMode::new(if k == 'L' { ModeKind::L } else { ModeKind::G }, t).unwrap())
        .collect()
}

pub fn to_terms(t: &BTreeMap<Word, Rational>) -> Terms {
    t.iter()
        .map(|(w, k)| (PBWMonomial::from_modes(to_modes(w)).unwrap(), k.clone()))
        .collect()
}

pub fn mode_strategy() -> impl Strategy<Value = (char, i64)> {
    prop_oneof![
        (-3i64..=3).prop_map(|n| ('L', 2 * n)),
        (-3i64..=2).prop_map(|k| ('G', 2 * k + 1))
    ]
}

pub fn params() -> impl Strategy<Value = (Rational, Rational)> {
    ((-20i64..20, 1i64..8), (-10i64..10, 1i64..6)).prop_map(|((a, b), (x, y))| (rational(a, b), rational(x, y)))
}

/// Two random rewrite orders agree with each other and with `straighten`.
pub fn check_confluence(w: &Word, c: &Rational, h: &Rational, order_a: &[usize], order_b: &[usize]) -> Check {
    let rw = Rewriter {
        c: c.clone(),
        h: h.clone(),
    };
    let a = rw.normal(w.clone(), order_a);
    let b = rw.normal(w.clone(), order_b);
    prop_assert_eq!(&a, &b);
    let v = straighten(&to_modes(w), c, h);
    prop_assert_eq!(v.terms, to_terms(&a));
    Ok(())
}

pub fn check_super_jacobi(x: (char, i64), y: (char, i64), z: (char, i64), c: &Rational) -> Check {
    let ms = to_modes(&vec![x, y, z]);
    let (x, y, z) = (ms[0], ms[1], ms[2]);
    // [X,[Y,Z}} = [[X,Y},Z} + (−1)^{|X||Y|} [Y,[X,Z}}
    let br = |a: NSMode, outer: &[(Rational, NSMode)]| -> Bracketed {
        let mut out = BTreeMap::new();
        let mut cen = Rational::zero();
        for (k, m) in outer {
            let (t, cc) = bracket(a, *m, c);
            cen += k * cc;
            for (kk, mm) in t {
                *out.entry(mm).or_insert_with(Rational::zero) += k * kk;
            }
        }
        out.retain(|_, v: &mut Rational| !v.is_zero());
        (out, cen)
    };
    let rbr = |outer: &[(Rational, NSMode)], b: NSMode| -> Bracketed {
        let mut out = BTreeMap::new();
        let mut cen = Rational::zero();
        for (k, m) in outer {
            let (t, cc) = bracket(*m, b, c);
            cen += k * cc;
            for (kk, mm) in t {
                *out.entry(mm).or_insert_with(Rational::zero) += k * kk;
            }
        }
        out.retain(|_, v: &mut Rational| !v.is_zero());
        (out, cen)
    };
    let (lhs, lc) = br(x, &bracket(y, z, c).0);
    let (r1, c1) = rbr(&bracket(x, y, c).0, z);
    let (r2, c2) = br(y, &bracket(x, z, c).0);
    let s = if x.is_odd() && y.is_odd() {
        -Rational::one()
    } else {
        Rational::one()
    };
    let mut rhs = r1;
    for (m, v) in r2 {
        *rhs.entry(m).or_insert_with(Rational::zero) += &s * v;
    }
    rhs.retain(|_, v| !v.is_zero());
    prop_assert_eq!(lhs, rhs);
    prop_assert_eq!(lc, c1 + &s * c2);
    Ok(())
}
