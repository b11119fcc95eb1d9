use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::mode::{bracket, ModeKind, NSMode};
use super::monomial::PBWMonomial;
use crate::exactnum::{format_rational, rational, Rational};

pub type Terms = BTreeMap<PBWMonomial, Rational>;

fn add_scaled(acc: &mut Terms, src: &Terms, k: &Rational) {
    if k.is_zero() {
        return;
    }
    for (m, x) in src {
        let e = acc.entry(m.clone()).or_insert_with(Rational::zero);
        *e += k * x;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

/// A homogeneous vector of the Verma module `V(c, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaVector {
    pub c: Rational,
    pub h: Rational,
    pub terms: Terms,
}

impl VermaVector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PBWMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Doubled degree, `None` for the zero vector.
    pub fn twice_degree(&self) -> Option<i64> {
        self.terms.keys().next().map(PBWMonomial::twice_degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(PBWMonomial::twice_degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }
}

impl Serialize for VermaVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            monomial: &'a PBWMonomial,
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, x) in &self.terms {
            seq.serialize_element(&Term {
                monomial: m,
                coeff: format_rational(x),
            })?;
        }
        seq.end()
    }
}

/// Action of modes on PBW monomials of `V(c, h)`, memoised.
pub struct Straightener {
    c: Rational,
    h: Rational,
    cache: RefCell<HashMap<(NSMode, PBWMonomial), Rc<Terms>>>,
}

impl Straightener {
    pub fn new(c: Rational, h: Rational) -> Self {
        Straightener {
            c,
            h,
            cache: RefCell::default(),
        }
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    /// `x · m` in normal form.
    pub fn act(&self, x: NSMode, m: &PBWMonomial) -> Rc<Terms> {
        let key = (x, m.clone());
        if let Some(t) = self.cache.borrow().get(&key) {
            return t.clone();
        }
        let t = Rc::new(self.act_uncached(x, m));
        self.cache.borrow_mut().insert(key, t.clone());
        t
    }

    fn single(m: PBWMonomial, k: Rational) -> Terms {
        let mut t = Terms::new();
        if !k.is_zero() {
            t.insert(m, k);
        }
        t
    }

    fn act_uncached(&self, x: NSMode, m: &PBWMonomial) -> Terms {
        if x.kind() == ModeKind::L && x.twice_index() == 0 {
            let w = &self.h + rational(m.twice_degree(), 2);
            return Self::single(m.clone(), w);
        }
        let modes = m.modes();
        let Some((&y, rest)) = modes.split_first() else {
            return if x.is_creation() {
                Self::single(PBWMonomial::from_sorted_unchecked(vec![x]), Rational::one())
            } else {
                Terms::new()
            };
        };
        if x.is_creation() && (x < y || (x == y && x.kind() == ModeKind::L)) {
            let mut v = Vec::with_capacity(modes.len() + 1);
            v.push(x);
            v.extend_from_slice(modes);
            return Self::single(PBWMonomial::from_sorted_unchecked(v), Rational::one());
        }
        let rest = PBWMonomial::from_sorted_unchecked(rest.to_vec());
        if x == y {
            // G_r G_r = ½{G_r, G_r} = L_{2r}
            return (*self.act(NSMode::l(x.twice_index()), &rest)).clone();
        }
        // x y w = ± y (x w) + [x, y} w
        let sign = if x.is_odd() && y.is_odd() {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut out = Terms::new();
        for (mon, k) in self.act(x, &rest).iter() {
            add_scaled(&mut out, &self.act(y, mon), &(&sign * k));
        }
        let (modes, central) = bracket(x, y, &self.c);
        for (k, z) in modes {
            add_scaled(&mut out, &self.act(z, &rest), &k);
        }
        if !central.is_zero() {
            add_scaled(&mut out, &Self::single(rest, Rational::one()), &central);
        }
        out
    }

    pub fn act_terms(&self, x: NSMode, v: &Terms) -> Terms {
        let mut out = Terms::new();
        for (m, k) in v {
            add_scaled(&mut out, &self.act(x, m), k);
        }
        out
    }

    /// Apply `word` (rightmost mode first) to `v`.
    pub fn apply_word(&self, word: &[NSMode], v: Terms) -> Terms {
        word.iter().rev().fold(v, |acc, &x| self.act_terms(x, &acc))
    }

    /// Normal form of `word · v` for the highest-weight vector `v`.
    pub fn straighten(&self, word: &[NSMode]) -> VermaVector {
        let v = Self::single(PBWMonomial::one(), Rational::one());
        self.vector(self.apply_word(word, v))
    }

    pub fn vector(&self, terms: Terms) -> VermaVector {
        VermaVector {
            c: self.c.clone(),
            h: self.h.clone(),
            terms,
        }
    }
}

/// One-shot form of [`Straightener::straighten`].
pub fn straighten(word: &[NSMode], c: &Rational, h: &Rational) -> VermaVector {
    Straightener::new(c.clone(), h.clone()).straighten(word)
}
