//! Label data of the N=1 superconformal minimal models.

use std::fmt::Write as _;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MinimalModelSpec {
    pub p: i64,
    pub q: i64,
}

/// Check the admissibility conditions; a rejection carries its reason.
pub fn validate_pq(p: i64, q: i64) -> std::result::Result<MinimalModelSpec, String> {
    if p < 2 || q < 2 {
        return Err(format!("p = {p}, q = {q}: both must be at least 2"));
    }
    if (p - q) % 2 != 0 {
        return Err(format!("p = {p}, q = {q} differ in parity"));
    }
    let g = p.gcd(&((p - q) / 2));
    if g != 1 {
        return Err(format!("gcd(p, (p-q)/2) = gcd({p}, {}) = {g}", (p - q) / 2));
    }
    Ok(MinimalModelSpec { p, q })
}

impl MinimalModelSpec {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        validate_pq(p, q).map_err(Error::InvalidMinimalModel)
    }

    /// `(p−1)(q−1)`; its parity decides the split rule and the count formula.
    pub fn grid(&self) -> i64 {
        (self.p - 1) * (self.q - 1)
    }

    /// Printed number of NS labels, which is also the number of R labels.
    pub fn sector_count(&self) -> usize {
        let g = self.grid();
        if self.p % 2 == 1 {
            (g / 4) as usize
        } else {
            ((g + 1) / 4) as usize
        }
    }

    pub fn r_labels_split(&self) -> bool {
        self.grid() % 2 == 0
    }
}

/// `c = 3/2 (1 − 2(p−q)²/(pq))`.
pub fn central_charge(spec: &MinimalModelSpec) -> Rational {
    let (p, q) = (spec.p, spec.q);
    rational(3, 2) * (Rational::from_integer(1.into()) - rational(2 * (p - q) * (p - q), p * q))
}

/// `h = ((rq − sp)² − (p−q)²)/(8pq) + ε/16`, ε = 1 in the R sector.
pub fn conformal_weight(spec: &MinimalModelSpec, r: i64, s: i64) -> Rational {
    let (p, q) = (spec.p, spec.q);
    let k = r * q - s * p;
    let eps = ((r + s) % 2 != 0) as i64;
    rational(k * k - (p - q) * (p - q), 8 * p * q) + rational(eps, 16)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sector {
    NS,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalLabel {
    #[serde(skip)]
    pub sector: Sector,
    pub r: i64,
    pub s: i64,
    #[serde(serialize_with = "ser_rational")]
    pub h: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<bool>,
}

impl MinimalLabel {
    pub fn name(&self) -> String {
        let tag = match self.sector {
            Sector::NS => "ns",
            Sector::R => "r",
        };
        format!("{tag}_{}_{}", self.r, self.s)
    }
}

fn ser_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

/// One label per class `{(r,s), (p−r,q−s)}`, represented by the
/// lexicographically smaller pair. Counts are checked against the formula.
pub fn enumerate_labels(spec: &MinimalModelSpec) -> Result<Vec<MinimalLabel>> {
    let (p, q) = (spec.p, spec.q);
    let split = spec.r_labels_split();
    let mut out = vec![];
    for r in 1..p {
        for s in 1..q {
            if (r, s) > (p - r, q - s) {
                continue;
            }
            let sector = if (r - s) % 2 == 0 { Sector::NS } else { Sector::R };
            out.push(MinimalLabel {
                sector,
                r,
                s,
                h: conformal_weight(spec, r, s),
                split: (sector == Sector::R).then_some(split),
            });
        }
    }
    out.sort_by_key(|l| (l.sector == Sector::R, l.r, l.s));
    let expect = spec.sector_count();
    let ns = out.iter().filter(|l| l.sector == Sector::NS).count();
    let r = out.len() - ns;
    if ns != expect || r != expect {
        return Err(Error::CountMismatch(format!(
            "(p,q) = ({p},{q}): {ns} NS and {r} R labels, formula gives {expect}"
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalModelReport {
    pub p: i64,
    pub q: i64,
    #[serde(serialize_with = "ser_rational")]
    pub c: Rational,
    pub ns: Vec<MinimalLabel>,
    pub r: Vec<MinimalLabel>,
}

pub fn minimal_report(spec: &MinimalModelSpec) -> Result<MinimalModelReport> {
    let (ns, r) = enumerate_labels(spec)?
        .into_iter()
        .partition(|l| l.sector == Sector::NS);
    Ok(MinimalModelReport {
        p: spec.p,
        q: spec.q,
        c: central_charge(spec),
        ns,
        r,
    })
}

impl MinimalModelReport {
    pub fn to_table(&self) -> String {
        let mut out = format!("p = {}  q = {}  c = {}\n", self.p, self.q, format_rational(&self.c));
        let rows: Vec<[String; 5]> = self
            .ns
            .iter()
            .chain(&self.r)
            .map(|l| {
                [
                    format!("{:?}", l.sector),
                    l.r.to_string(),
                    l.s.to_string(),
                    format_rational(&l.h),
                    l.split
                        .map_or(String::new(), |b| if b { "split" } else { "non-split" }.into()),
                ]
            })
            .collect();
        let head = ["sector", "r", "s", "h", "R type"].map(String::from);
        let widths: Vec<usize> = (0..5)
            .map(|i| rows.iter().chain([&head]).map(|r| r[i].len()).max().unwrap_or(0))
            .collect();
        for row in [&head].into_iter().chain(&rows) {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }
}

/// Labels and twists only: no fusion rules are known for these models,
/// so the export is marked incomplete and is not a `FusionData`.
#[derive(Clone, Debug, Serialize)]
pub struct PartialFusionExport {
    pub name: String,
    pub incomplete: bool,
    pub missing: Vec<&'static str>,
    pub labels: Vec<String>,
    pub twist: indexmap::IndexMap<String, String>,
}

pub fn partial_export(spec: &MinimalModelSpec) -> Result<PartialFusionExport> {
    let labels = enumerate_labels(spec)?;
    let twist = labels
        .iter()
        .map(|l| (l.name(), format_rational(&twist_of(&l.h))))
        .collect();
    Ok(PartialFusionExport {
        name: format!("SM({},{})", spec.p, spec.q),
        incomplete: true,
        missing: vec!["unit", "dual", "fusion", "qdim"],
        labels: labels.iter().map(MinimalLabel::name).collect(),
        twist,
    })
}

/// Rotation number `h mod 1` in `[0, 1)`.
pub fn twist_of(h: &Rational) -> Rational {
    h - h.floor()
}

/// Every valid `(p,q)` with `p, q ≥ 2` and `pq ≤ max_pq`.
pub fn valid_pairs(max_pq: i64) -> Vec<MinimalModelSpec> {
    (2..=max_pq / 2)
        .flat_map(|p| (2..=max_pq / p).map(move |q| (p, q)))
        .filter_map(|(p, q)| validate_pq(p, q).ok())
        .collect()
}
