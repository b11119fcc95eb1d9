//! Modular tensor category data: axioms, the s-matrix, iterated fusion and
//! Deligne products.

mod data;

use serde::Serialize;

pub use data::{FusionData, LabelId};

use crate::error::{Error, Result};
use crate::exactnum::{CycMatrix, Cyclotomic, Rational};

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub invariant: &'static str,
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub name: String,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn cites(&self, invariant: &str) -> bool {
        self.violations.iter().any(|v| v.invariant == invariant)
    }
}

/// Check every fusion-ring, duality, dimension and twist axiom exactly.
pub fn validate(data: &FusionData) -> ValidationReport {
    let mut out = Vec::new();
    let l = |i: LabelId| data.label(i).to_string();
    let mut push = |invariant: &'static str, witness: Vec<String>, detail: String| {
        out.push(Violation {
            invariant,
            witness,
            detail,
        })
    };
    let u = data.unit();

    if data.dual(u) != u {
        push("dual-of-unit", vec![l(u)], format!("dual(unit) = {}", l(data.dual(u))));
    }
    for i in data.ids() {
        if data.dual(data.dual(i)) != i {
            push(
                "dual-involutive",
                vec![l(i)],
                format!("dual(dual({})) = {}", l(i), l(data.dual(data.dual(i)))),
            );
        }
    }
    for i in data.ids() {
        for j in data.ids() {
            let expect = (i == j) as u64;
            if data.n(u, i, j) != expect {
                push(
                    "unit-axiom",
                    vec![l(i), l(j)],
                    format!("N_(unit,{}) ^{} = {}", l(i), l(j), data.n(u, i, j)),
                );
            }
            let expect = (j == data.dual(i)) as u64;
            if data.n(i, j, u) != expect {
                push(
                    "duality-axiom",
                    vec![l(i), l(j)],
                    format!("N_({},{})^unit = {}", l(i), l(j), data.n(i, j, u)),
                );
            }
            for k in data.ids() {
                if data.n(i, j, k) != data.n(j, i, k) {
                    push(
                        "commutativity",
                        vec![l(i), l(j), l(k)],
                        format!("N_ij^k = {} but N_ji^k = {}", data.n(i, j, k), data.n(j, i, k)),
                    );
                }
            }
        }
    }
    for i in data.ids() {
        for j in data.ids() {
            for k in data.ids() {
                for m in data.ids() {
                    let lhs: u64 = data.ids().map(|x| data.n(i, j, x) * data.n(x, k, m)).sum();
                    let rhs: u64 = data.ids().map(|x| data.n(j, k, x) * data.n(i, x, m)).sum();
                    if lhs != rhs {
                        push("associativity", vec![l(i), l(j), l(k), l(m)], format!("{lhs} != {rhs}"));
                    }
                }
            }
        }
    }
    if !data.qdim(u).is_one() {
        push("unit-dimension", vec![l(u)], format!("d_unit = {}", data.qdim(u)));
    }
    for i in data.ids() {
        for j in i..data.len() {
            let lhs = data.qdim(i) * data.qdim(j);
            let rhs: Cyclotomic = data
                .fuse(i, j)
                .map(|(k, m)| data.qdim(k).scale(&Rational::from_integer(m.into())))
                .sum();
            if lhs != rhs {
                push(
                    "dimension-equation",
                    vec![l(i), l(j)],
                    format!("d_i d_j = {lhs} but sum N d_k = {rhs}"),
                );
            }
        }
    }
    let tu = data.twist(u);
    if *tu != Rational::from_integer(0.into()) {
        push("unit-twist", vec![l(u)], format!("t_unit = {tu}"));
    }
    ValidationReport {
        name: data.name().to_string(),
        valid: out.is_empty(),
        violations: out,
    }
}

/// The s-matrix `s_ij = θ_i⁻¹ θ_j⁻¹ Σ_k N_ij^k θ_k d_k`, rows and columns in
/// label order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SMatrix {
    pub source: String,
    pub data: CycMatrix,
}

impl SMatrix {
    pub fn get(&self, i: LabelId, j: LabelId) -> &Cyclotomic {
        self.data.get(i, j)
    }
}

pub fn compute_smatrix(data: &FusionData) -> Result<SMatrix> {
    let thetas: Vec<Cyclotomic> = data.ids().map(|i| data.theta(i)).collect();
    let theta_inv: Vec<Cyclotomic> = thetas
        .iter()
        .map(|t| t.inv().expect("roots of unity are units"))
        .collect();
    let weighted: Vec<Cyclotomic> = data.ids().map(|k| &thetas[k] * data.qdim(k)).collect();
    let n = data.len();
    let m = CycMatrix::from_fn(n, n, |i, j| {
        let sum: Cyclotomic = data
            .fuse(i, j)
            .map(|(k, mult)| weighted[k].scale(&Rational::from_integer(mult.into())))
            .sum();
        &(&theta_inv[i] * &theta_inv[j]) * &sum
    });
    if let Some((i, j)) = m.first_asymmetry() {
        return Err(Error::AsymmetricSMatrix {
            row: data.label(i).to_string(),
            col: data.label(j).to_string(),
        });
    }
    Ok(SMatrix {
        source: data.name().to_string(),
        data: m,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SSquaredCheck {
    pub holds: bool,
    /// `α` in `s² = α·C`, present when the relation holds.
    pub scalar: Option<Cyclotomic>,
    /// First entry where `s²` departs from `α·C`.
    pub witness: Option<(String, String)>,
}

/// Check `s² = α·C` with `C_ij = δ_{i, dual(j)}`.
pub fn check_s_squared(s: &SMatrix, data: &FusionData) -> SSquaredCheck {
    let sq = s.data.mul(&s.data).expect("square matrix");
    let u = data.unit();
    let alpha = sq.get(u, data.dual(u)).clone();
    for i in data.ids() {
        for j in data.ids() {
            let expect = if i == data.dual(j) {
                alpha.clone()
            } else {
                Cyclotomic::zero()
            };
            if *sq.get(i, j) != expect {
                return SSquaredCheck {
                    holds: false,
                    scalar: None,
                    witness: Some((data.label(i).to_string(), data.label(j).to_string())),
                };
            }
        }
    }
    SSquaredCheck {
        holds: !alpha.is_zero(),
        scalar: (!alpha.is_zero()).then_some(alpha),
        witness: None,
    }
}

/// Multiplicity of the unit in `X₁ ⊠ … ⊠ X_n`.
pub fn hom_unit_dim(data: &FusionData, chain: &[LabelId]) -> u64 {
    let Some((&first, rest)) = chain.split_first() else {
        return 0;
    };
    let n = data.len();
    let mut v = vec![0u64; n];
    v[first] = 1;
    for &x in rest {
        let mut next = vec![0u64; n];
        for (m, &vm) in v.iter().enumerate() {
            if vm == 0 {
                continue;
            }
            for (k, mult) in data.fuse(m, x) {
                next[k] += vm * mult;
            }
        }
        v = next;
    }
    v[data.unit()]
}

/// Label name of a pair in a Deligne product.
pub fn pair_label(a: &str, b: &str) -> String {
    format!("{a}.{b}")
}

/// `a ⊠ b`: labels are pairs `(i, i')` in row-major order, everything else
/// multiplies componentwise.
pub fn deligne_product(a: &FusionData, b: &FusionData) -> FusionData {
    let nb = b.len();
    let pair = |i: LabelId, j: LabelId| i * nb + j;
    let mut labels = Vec::with_capacity(a.len() * nb);
    let mut dual = Vec::new();
    let mut twist = Vec::new();
    let mut qdim = Vec::new();
    for i in a.ids() {
        for j in b.ids() {
            labels.push(pair_label(a.label(i), b.label(j)));
            dual.push(pair(a.dual(i), b.dual(j)));
            twist.push(a.twist(i) + b.twist(j));
            qdim.push(a.qdim(i) * b.qdim(j));
        }
    }
    let mut fusion = Vec::new();
    for (i, j, k) in triples(a) {
        let m = a.n(i, j, k);
        if m == 0 {
            continue;
        }
        for (i2, j2, k2) in triples(b) {
            let m2 = b.n(i2, j2, k2);
            if m2 > 0 {
                fusion.push((pair(i, i2), pair(j, j2), pair(k, k2), m * m2));
            }
        }
    }
    FusionData::new(
        format!("{}⊠{}", a.name(), b.name()),
        labels,
        pair(a.unit(), b.unit()),
        dual,
        &fusion,
        twist,
        qdim,
        None,
    )
    .expect("product of well-formed data is well formed")
}

fn triples(d: &FusionData) -> impl Iterator<Item = (LabelId, LabelId, LabelId)> + '_ {
    d.ids()
        .flat_map(move |i| d.ids().flat_map(move |j| d.ids().map(move |k| (i, j, k))))
}

#[cfg(test)]
mod tests;
