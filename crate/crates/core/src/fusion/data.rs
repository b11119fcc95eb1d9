use std::collections::HashMap;

use indexmap::IndexMap;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, root_of_unity, Cyclotomic, Rational};

/// Position of a label in [`FusionData::labels`].
pub type LabelId = usize;

/// Numerical shadow of a modular tensor category: labels, fusion
/// coefficients, twists as rotation numbers and quantum dimensions.
///
/// Construction only enforces referential integrity (every label known,
/// every label has a dual, twist and dimension). The category axioms are
/// checked separately by [`super::validate`], so invalid data can still be
/// loaded and reported on.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionData {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, LabelId>,
    unit: LabelId,
    dual: Vec<LabelId>,
    fusion: Vec<u64>,
    twist: Vec<Rational>,
    qdim: Vec<Cyclotomic>,
    sigma_vv: Option<i8>,
}

impl FusionData {
    /// `fusion` lists `(i, j, k, N_ij^k)` with label indices; unlisted triples are 0.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        unit: LabelId,
        dual: Vec<LabelId>,
        fusion: &[(LabelId, LabelId, LabelId, u64)],
        twist: Vec<Rational>,
        qdim: Vec<Cyclotomic>,
        sigma_vv: Option<i8>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("no labels".into()));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Malformed(format!("bad label identifier {l:?}")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate label {l:?}")));
            }
        }
        if unit >= n || dual.len() != n || twist.len() != n || qdim.len() != n {
            return Err(Error::Malformed("label tables have inconsistent sizes".into()));
        }
        if dual.iter().any(|&d| d >= n) {
            return Err(Error::Malformed("dual refers to an unknown label".into()));
        }
        if let Some(s) = sigma_vv {
            if s != 1 && s != -1 {
                return Err(Error::Malformed(format!("sigma_vv must be 1 or -1, got {s}")));
            }
        }
        let mut table = vec![0u64; n * n * n];
        for &(i, j, k, m) in fusion {
            if i >= n || j >= n || k >= n {
                return Err(Error::Malformed("fusion entry refers to an unknown label".into()));
            }
            table[(i * n + j) * n + k] = m;
        }
        let twist = twist.into_iter().map(|t| &t - t.floor()).collect();
        Ok(FusionData {
            name: name.into(),
            labels,
            index,
            unit,
            dual,
            fusion: table,
            twist,
            qdim,
            sigma_vv,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: LabelId) -> &str {
        &self.labels[i]
    }

    pub fn label_id(&self, name: &str) -> Result<LabelId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn unit(&self) -> LabelId {
        self.unit
    }

    pub fn dual(&self, i: LabelId) -> LabelId {
        self.dual[i]
    }

    /// `N_{ij}^k`.
    pub fn n(&self, i: LabelId, j: LabelId, k: LabelId) -> u64 {
        let n = self.len();
        self.fusion[(i * n + j) * n + k]
    }

    /// Labels `k` with `N_{ij}^k > 0`, with multiplicities.
    pub fn fuse(&self, i: LabelId, j: LabelId) -> impl Iterator<Item = (LabelId, u64)> + '_ {
        (0..self.len())
            .map(move |k| (k, self.n(i, j, k)))
            .filter(|&(_, m)| m > 0)
    }

    /// Rotation number `t_i ∈ [0, 1)`, with `θ_i = e^{2πi t_i}`.
    pub fn twist(&self, i: LabelId) -> &Rational {
        &self.twist[i]
    }

    /// `θ_i` as an exact root of unity.
    pub fn theta(&self, i: LabelId) -> Cyclotomic {
        root_of_unity(&self.twist[i])
    }

    pub fn qdim(&self, i: LabelId) -> &Cyclotomic {
        &self.qdim[i]
    }

    pub fn sigma_vv(&self) -> Option<i8> {
        self.sigma_vv
    }

    pub fn ids(&self) -> std::ops::Range<LabelId> {
        0..self.len()
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn set_twist(&mut self, i: LabelId, t: Rational) {
        self.twist[i] = &t - t.floor();
    }

    pub fn set_qdim(&mut self, i: LabelId, d: Cyclotomic) {
        self.qdim[i] = d;
    }

    pub fn set_fusion(&mut self, i: LabelId, j: LabelId, k: LabelId, m: u64) {
        let n = self.len();
        self.fusion[(i * n + j) * n + k] = m;
    }

    pub fn set_dual(&mut self, i: LabelId, d: LabelId) {
        self.dual[i] = d;
    }

    pub fn set_sigma_vv(&mut self, s: Option<i8>) {
        self.sigma_vv = s;
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: FusionFile = serde_json::from_str(text)?;
        file.into_data()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&FusionFile::from_data(self)).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FusionEntry {
    i: String,
    j: String,
    k: String,
    n: u64,
}

/// On-disk JSON layout of [`FusionData`].
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FusionFile {
    name: String,
    labels: Vec<String>,
    unit: String,
    dual: IndexMap<String, String>,
    fusion: Vec<FusionEntry>,
    twist: IndexMap<String, String>,
    qdim: IndexMap<String, Cyclotomic>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sigma_vv: Option<i8>,
}

impl FusionFile {
    fn from_data(d: &FusionData) -> Self {
        let mut fusion = Vec::new();
        for i in d.ids() {
            for j in d.ids() {
                for (k, m) in d.fuse(i, j) {
                    fusion.push(FusionEntry {
                        i: d.labels[i].clone(),
                        j: d.labels[j].clone(),
                        k: d.labels[k].clone(),
                        n: m,
                    });
                }
            }
        }
        FusionFile {
            name: d.name.clone(),
            labels: d.labels.clone(),
            unit: d.labels[d.unit].clone(),
            dual: d
                .ids()
                .map(|i| (d.labels[i].clone(), d.labels[d.dual[i]].clone()))
                .collect(),
            fusion,
            twist: d
                .ids()
                .map(|i| (d.labels[i].clone(), format_rational(&d.twist[i])))
                .collect(),
            qdim: d.ids().map(|i| (d.labels[i].clone(), d.qdim[i].clone())).collect(),
            sigma_vv: d.sigma_vv,
        }
    }

    fn into_data(self) -> Result<FusionData> {
        let pos: HashMap<&str, usize> = self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let id = |l: &str| pos.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));
        let per_label = |what: &str, keys: Vec<&String>| -> Result<()> {
            for k in &keys {
                id(k)?;
            }
            if keys.len() != self.labels.len() {
                return Err(Error::Malformed(format!(
                    "{what} must have exactly one entry per label"
                )));
            }
            Ok(())
        };
        per_label("dual", self.dual.keys().collect())?;
        per_label("twist", self.twist.keys().collect())?;
        per_label("qdim", self.qdim.keys().collect())?;

        let unit = id(&self.unit)?;
        let mut dual = vec![0; self.labels.len()];
        for (a, b) in &self.dual {
            dual[id(a)?] = id(b)?;
        }
        let mut twist = vec![Rational::zero(); self.labels.len()];
        for (a, t) in &self.twist {
            twist[id(a)?] = parse_rational(t)?;
        }
        let mut qdim = vec![Cyclotomic::one(); self.labels.len()];
        for (a, d) in self.qdim {
            qdim[id(&a)?] = d;
        }
        let mut fusion = Vec::with_capacity(self.fusion.len());
        let mut seen = std::collections::HashSet::new();
        for e in &self.fusion {
            let key = (id(&e.i)?, id(&e.j)?, id(&e.k)?);
            if !seen.insert(key) {
                return Err(Error::Malformed(format!(
                    "duplicate fusion entry ({}, {}, {})",
                    e.i, e.j, e.k
                )));
            }
            fusion.push((key.0, key.1, key.2, e.n));
        }
        FusionData::new(self.name, self.labels, unit, dual, &fusion, twist, qdim, self.sigma_vv)
    }
}
