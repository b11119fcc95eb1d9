use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::mode::NSMode;
use super::monomial::PBWMonomial;
use super::straighten::{Straightener, Terms, VermaVector};
use crate::error::{Error, Result};
use crate::exactnum::linalg::{nullspace, rref, rref_with_order};
use crate::exactnum::{format_rational, rational, Rational};
use crate::minimal::{central_charge, enumerate_labels, MinimalModelSpec};

/// Normal-ordered monomials of doubled degree `twice_d`, largest
/// filtration degree first. With `restrict_vprime` only `G_{m≤−3/2}` and
/// `L_{n≤−2}` occur.
pub fn degree_basis(twice_d: i64, restrict_vprime: bool) -> Vec<PBWMonomial> {
    let (min_g, min_l) = if restrict_vprime { (3, 4) } else { (1, 2) };
    let mut out = vec![];
    if twice_d < 0 {
        return out;
    }
    // distinct odd G weights (doubled), each ≥ min_g; written most negative first
    let mut g_sets: Vec<(Vec<i64>, i64)> = vec![(vec![], 0)];
    let mut w = min_g;
    while w <= twice_d {
        let extra: Vec<_> = g_sets
            .iter()
            .filter(|(_, s)| s + w <= twice_d)
            .map(|(v, s)| ([v.clone(), vec![w]].concat(), s + w))
            .collect();
        g_sets.extend(extra);
        w += 2;
    }
    for (gs, used) in g_sets {
        for ls in partitions(twice_d - used, min_l) {
            let mut modes: Vec<NSMode> = gs.iter().rev().map(|&k| NSMode::g_half(-k)).collect();
            modes.extend(ls.iter().map(|&k| NSMode::l(-k / 2)));
            out.push(PBWMonomial::from_sorted_unchecked(modes));
        }
    }
    out.sort_by(|a, b| b.filtration().cmp(&a.filtration()).then_with(|| a.cmp(b)));
    out
}

/// Partitions of `n` into even parts `≥ min`, largest part first.
fn partitions(n: i64, min: i64) -> Vec<Vec<i64>> {
    fn go(n: i64, max: i64, min: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        let mut k = max.min(n);
        if k % 2 != 0 {
            k -= 1;
        }
        while k >= min {
            cur.push(k);
            go(n - k, k, min, cur, out);
            cur.pop();
            k -= 2;
        }
    }
    let mut out = vec![];
    if n % 2 == 0 {
        go(n, n, min, &mut vec![], &mut out);
    }
    out
}

fn ser_opt_rational<S: Serializer>(x: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(q) => s.serialize_str(&format_rational(q)),
        None => s.serialize_none(),
    }
}

fn ser_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularVectorReport {
    #[serde(serialize_with = "ser_rational")]
    pub c: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub h: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub degree: Rational,
    /// Dimension of the degree slice of the Verma module.
    pub full_dim: usize,
    /// Dimension of the degree slice of the quotient.
    pub vprime_dim: usize,
    /// Singular vectors in the Verma module itself.
    pub full_space_dim: usize,
    /// Dimension of their image in the quotient.
    pub space_dim: usize,
    pub vector: Option<VermaVector>,
    pub leading_monomial: Option<PBWMonomial>,
    #[serde(serialize_with = "ser_opt_rational")]
    pub lambda: Option<Rational>,
    pub shape_matches: bool,
}

/// Expected leading monomial at doubled degree `twice_d`: `G_{−3/2}(L_{−2})^j`
/// in odd degree, `G_{−5/2}G_{−3/2}(L_{−2})^j` in even integer degree.
pub fn expected_leading(twice_d: i64) -> Option<PBWMonomial> {
    if twice_d % 2 != 0 && twice_d >= 3 && (twice_d - 3) % 4 == 0 {
        Some(PBWMonomial::l2_power(((twice_d - 3) / 4) as usize, true))
    } else if twice_d % 4 == 0 && twice_d >= 8 {
        let mut modes = vec![NSMode::g_half(-5), NSMode::g_half(-3)];
        modes.extend(std::iter::repeat_n(NSMode::l(-2), ((twice_d - 8) / 4) as usize));
        Some(PBWMonomial::from_sorted_unchecked(modes))
    } else {
        None
    }
}

fn index_of(basis: &[PBWMonomial]) -> HashMap<&PBWMonomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

fn dense(t: &Terms, index: &HashMap<&PBWMonomial, usize>, n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    for (m, k) in t {
        row[index[m]] = k.clone();
    }
    row
}

/// Vectors of doubled degree `twice_d` killed by `G_{1/2}` and `G_{3/2}`,
/// then projected to `V / U·G_{−1/2}v`.
pub fn singular_vectors(c: &Rational, h: &Rational, twice_d: i64) -> Result<SingularVectorReport> {
    if twice_d <= 0 {
        return Err(Error::Verma(format!("degree must be positive, got {twice_d}/2")));
    }
    let st = Straightener::new(c.clone(), h.clone());
    let full = degree_basis(twice_d, false);
    let n = full.len();
    let idx = index_of(&full);

    // rows: coordinates of G_{1/2} w and G_{3/2} w
    let mut rows: Vec<Vec<Rational>> = vec![];
    for k in [1, 3] {
        let target = degree_basis(twice_d - k, false);
        let tidx = index_of(&target);
        let mut block = vec![vec![Rational::zero(); n]; target.len()];
        for (j, m) in full.iter().enumerate() {
            for (mon, x) in st.act(NSMode::g_half(k), m).iter() {
                block[tidx[mon]][j] = x.clone();
            }
        }
        rows.extend(block);
    }
    let null = nullspace(rows, n);

    // degree slice of the submodule through G_{−1/2}v
    let seed = st.act(NSMode::g_half(-1), &PBWMonomial::one());
    let sub: Vec<Vec<Rational>> = degree_basis(twice_d - 1, false)
        .iter()
        .map(|u| dense(&st.apply_word(u.modes(), (*seed).clone()), &idx, n))
        .collect();
    let vprime: Vec<bool> = full.iter().map(PBWMonomial::in_vprime).collect();
    let order: Vec<usize> = (0..n)
        .filter(|&i| !vprime[i])
        .chain((0..n).filter(|&i| vprime[i]))
        .collect();
    let s = rref_with_order(sub, n, &order);
    let mut pivots = s.pivots.clone();
    pivots.sort_unstable();
    let non_vprime: Vec<usize> = (0..n).filter(|&i| !vprime[i]).collect();
    if pivots != non_vprime {
        return Err(Error::Verma(format!(
            "submodule slice at degree {}/2 is not complementary to the quotient basis",
            twice_d
        )));
    }

    let vp_cols: Vec<usize> = (0..n).filter(|&i| vprime[i]).collect();
    let projected: Vec<Vec<Rational>> = null
        .iter()
        .map(|v| {
            let mut v = v.clone();
            s.reduce(&mut v);
            vp_cols.iter().map(|&i| v[i].clone()).collect()
        })
        .collect();
    let image = rref(projected, vp_cols.len());
    let space_dim = image.pivots.len();

    let mut report = SingularVectorReport {
        c: c.clone(),
        h: h.clone(),
        degree: rational(twice_d, 2),
        full_dim: n,
        vprime_dim: vp_cols.len(),
        full_space_dim: null.len(),
        space_dim,
        vector: None,
        leading_monomial: None,
        lambda: None,
        shape_matches: false,
    };
    if space_dim != 1 {
        return Ok(report);
    }
    let coords = &image.rows[0];
    let (lead_col, lead) = vp_cols
        .iter()
        .enumerate()
        .filter(|(k, _)| !coords[*k].is_zero())
        .map(|(k, &i)| (k, &full[i]))
        .max_by(|a, b| a.1.filtration().cmp(&b.1.filtration()).then_with(|| b.1.cmp(a.1)))
        .expect("nonzero row");
    let scale = coords[lead_col].recip();
    let terms: Terms = vp_cols
        .iter()
        .enumerate()
        .filter(|(k, _)| !coords[*k].is_zero())
        .map(|(k, &i)| (full[i].clone(), &coords[k] * &scale))
        .collect();
    let vector = st.vector(terms);
    let lambda = (twice_d % 4 == 0).then(|| vector.coeff(&PBWMonomial::l2_power((twice_d / 4) as usize, false)));
    report.shape_matches = match expected_leading(twice_d) {
        Some(expect) if expect == *lead => twice_d % 2 != 0 || lambda.as_ref().is_some_and(|l| !l.is_zero()),
        _ => false,
    };
    report.leading_monomial = Some(lead.clone());
    report.lambda = lambda;
    report.vector = Some(vector);
    Ok(report)
}

/// The singular vector of `V(c_{p,q}, 0)` at degree `(p−1)(q−1)/2`.
pub fn verify_minimal_singular(p: i64, q: i64) -> Result<SingularVectorReport> {
    let spec = MinimalModelSpec::new(p, q)?;
    singular_vectors(&central_charge(&spec), &Rational::zero(), spec.grid())
}

#[derive(Clone, Debug, Serialize)]
pub struct C2Report {
    pub p: i64,
    pub q: i64,
    pub generators: Vec<PBWMonomial>,
    pub count: usize,
    pub label_count: usize,
}

/// `(L_{−2})^i` and `G_{−3/2}(L_{−2})^i` for `i` below the printed bound;
/// the count must equal the number of irreducible labels.
pub fn c2_generators(p: i64, q: i64) -> Result<C2Report> {
    let spec = MinimalModelSpec::new(p, q)?;
    let g = spec.grid();
    let bound = if p % 2 == 1 { g / 4 } else { (g + 1) / 4 } as usize;
    let generators: Vec<PBWMonomial> = [false, true]
        .into_iter()
        .flat_map(|with_g| (0..bound).map(move |i| PBWMonomial::l2_power(i, with_g)))
        .collect();
    let label_count = enumerate_labels(&spec)?.len();
    if generators.len() != label_count {
        return Err(Error::CountMismatch(format!(
            "(p,q) = ({p},{q}): {} generators but {label_count} labels",
            generators.len()
        )));
    }
    Ok(C2Report {
        p,
        q,
        count: generators.len(),
        generators,
        label_count,
    })
}

/// `1` as a vector, for callers building words by hand.
pub fn vacuum() -> Terms {
    let mut t = Terms::new();
    t.insert(PBWMonomial::one(), Rational::one());
    t
}
