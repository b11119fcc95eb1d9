//! Dimensions of the spin modular functor on spheres and tori.

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{involution, CliffordAlgebraClass, LabelClassification};
use crate::error::{Error, Result};
use crate::fusion::{hom_unit_dim, FusionData, LabelId};

/// A sphere with `n ≥ 1` boundary circles labelled `X₁,…,X_n`.
#[derive(Clone, Debug)]
pub struct SpinSphereSpec<'a> {
    pub data: &'a FusionData,
    pub cls: &'a LabelClassification,
    pub boundary: Vec<LabelId>,
}

impl<'a> SpinSphereSpec<'a> {
    pub fn new(data: &'a FusionData, cls: &'a LabelClassification, boundary: Vec<LabelId>) -> Result<Self> {
        if boundary.is_empty() {
            return Err(Error::Malformed("a sphere needs at least one boundary label".into()));
        }
        if let Some(&bad) = boundary.iter().find(|&&x| x >= data.len()) {
            return Err(Error::UnknownLabel(bad.to_string()));
        }
        Ok(SpinSphereSpec { data, cls, boundary })
    }

    pub fn from_names(data: &'a FusionData, cls: &'a LabelClassification, names: &[impl AsRef<str>]) -> Result<Self> {
        let ids = names.iter().map(|n| data.label_id(n.as_ref())).collect::<Result<_>>()?;
        Self::new(data, cls, ids)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinSphereReport {
    pub total_dim: u64,
    pub component_dim: u64,
    pub components: u64,
    pub lambda_rank: u64,
    pub lambda_class: CliffordAlgebraClass,
    pub epsilon_table: IndexMap<String, u64>,
}

/// `ε ↦ dim Hom(1, X₁(ε₁)⊠…⊠X_n(ε_n))` with `X(1) = V⁻⊠X`. Keys are
/// bitstrings `ε₁…ε_n`, in increasing binary order.
pub fn sphere_epsilon_table(spec: &SpinSphereSpec) -> IndexMap<String, u64> {
    let n = spec.boundary.len();
    let inv = involution(spec.data, spec.cls.vminus);
    let values: Vec<(String, u64)> = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let key = format!("{mask:0n$b}");
            let chain: Vec<LabelId> = key
                .bytes()
                .zip(&spec.boundary)
                .map(|(b, &x)| if b == b'1' { inv[x] } else { x })
                .collect();
            (key, hom_unit_dim(spec.data, &chain))
        })
        .collect();
    values.into_iter().collect()
}

pub fn sphere_report(spec: &SpinSphereSpec) -> Result<SpinSphereReport> {
    let epsilon_table = sphere_epsilon_table(spec);
    let total_dim: u64 = epsilon_table.values().sum();
    let components = 1u64 << (spec.boundary.len() - 1);
    if !total_dim.is_multiple_of(components) {
        return Err(Error::Divisibility {
            total: total_dim,
            parts: components,
        });
    }
    let lambda_rank = spec.boundary.iter().filter(|&&x| spec.cls.is_r_zero(x)).count() as u64;
    Ok(SpinSphereReport {
        total_dim,
        component_dim: total_dim / components,
        components,
        lambda_rank,
        lambda_class: CliffordAlgebraClass::new(lambda_rank),
        epsilon_table,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinTorusReport {
    pub dims: IndexMap<&'static str, u64>,
}

impl SpinTorusReport {
    pub fn get(&self, key: &str) -> u64 {
        self.dims[key]
    }
}

/// Torus dimensions per spin structure: A antiperiodic, P periodic.
pub fn torus_dims(cls: &LabelClassification) -> SpinTorusReport {
    let r_plus = cls.r_plus.len() as u64;
    let mixed = r_plus + cls.r_zero.len() as u64;
    let dims = [
        ("AA", cls.ns_plus.len() as u64),
        ("AP", mixed),
        ("PA", mixed),
        ("PP", r_plus),
    ]
    .into_iter()
    .collect();
    SpinTorusReport { dims }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::clifford::{classify_labels, find_vminus};
    use crate::fusion::deligne_product;

    fn setup(key: &str, v: &str) -> (FusionData, LabelClassification) {
        let d = builtin::builtin(key).unwrap();
        let c = classify_labels(&d, d.label_id(v).unwrap()).unwrap();
        (d, c)
    }

    fn report(d: &FusionData, c: &LabelClassification, names: &[&str]) -> SpinSphereReport {
        sphere_report(&SpinSphereSpec::from_names(d, c, names).unwrap()).unwrap()
    }

    #[test]
    fn ising_two_sigmas() {
        let (d, c) = setup("fermion", "psi");
        let r = report(&d, &c, &["sigma", "sigma"]);
        assert!(r.epsilon_table.values().all(|&v| v == 1));
        assert_eq!(r.epsilon_table.keys().collect::<Vec<_>>(), ["00", "01", "10", "11"]);
        assert_eq!((r.total_dim, r.component_dim, r.lambda_rank), (4, 2, 2));
    }

    #[test]
    fn ising_single_labels() {
        let (d, c) = setup("fermion", "psi");
        let r = report(&d, &c, &["sigma"]);
        assert_eq!(r.total_dim, 0);
        let r = report(&d, &c, &["1"]);
        assert_eq!(r.epsilon_table["0"], 1);
        assert_eq!(r.epsilon_table["1"], 0);
        assert_eq!((r.total_dim, r.component_dim, r.components), (1, 1, 1));
    }

    #[test]
    fn ising_four_sigmas() {
        let (d, c) = setup("fermion", "psi");
        let r = report(&d, &c, &["sigma"; 4]);
        assert_eq!(r.epsilon_table.len(), 16);
        assert!(r.epsilon_table.values().all(|&v| v == 2));
        assert_eq!((r.total_dim, r.component_dim), (32, 4));
        assert_eq!(r.lambda_class, CliffordAlgebraClass::new(4));
    }

    #[test]
    fn dirac_pair() {
        let (d, c) = setup("dirac", "j2");
        let r = report(&d, &c, &["j1", "j3"]);
        let table: Vec<_> = r.epsilon_table.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        assert_eq!(table, [("00", 1), ("01", 0), ("10", 0), ("11", 1)]);
        assert_eq!((r.total_dim, r.component_dim, r.lambda_rank), (2, 1, 0));
    }

    #[test]
    fn torus_examples() {
        let get = |key: &str, v: &str| {
            let (_, c) = setup(key, v);
            let t = torus_dims(&c);
            ["AA", "AP", "PA", "PP"].map(|k| t.get(k))
        };
        assert_eq!(get("fermion", "psi"), [1, 1, 1, 0]);
        assert_eq!(get("dirac", "j2"), [1, 1, 1, 1]);
        assert_eq!(get("toric", "f"), [1, 1, 1, 1]);
    }

    #[test]
    fn empty_boundary_rejected() {
        let (d, c) = setup("fermion", "psi");
        assert!(SpinSphereSpec::new(&d, &c, vec![]).is_err());
        assert!(SpinSphereSpec::from_names(&d, &c, &["chi"]).is_err());
    }

    fn clifford_cases() -> Vec<(FusionData, LabelClassification)> {
        let mut out = vec![setup("fermion", "psi"), setup("dirac", "j2"), setup("toric", "f")];
        let ff = deligne_product(&builtin::fermion(), &builtin::fermion());
        for v in find_vminus(&ff) {
            let c = classify_labels(&ff, v).unwrap();
            out.push((ff.clone(), c));
        }
        out
    }

    fn chains(n: usize, max_len: usize) -> Vec<Vec<LabelId>> {
        let mut all = vec![];
        let mut layer = vec![vec![]];
        for _ in 0..max_len {
            layer = layer
                .into_iter()
                .flat_map(|c: Vec<LabelId>| (0..n).map(move |x| [c.clone(), vec![x]].concat()))
                .collect();
            all.extend(layer.iter().cloned());
        }
        all
    }

    #[test]
    fn flip_law_parity_and_divisibility() {
        for (d, c) in clifford_cases() {
            let max_len = if d.len() > 4 { 3 } else { 4 };
            for chain in chains(d.len(), max_len) {
                let spec = SpinSphereSpec::new(&d, &c, chain.clone()).unwrap();
                let table = sphere_epsilon_table(&spec);
                let n = chain.len();
                for (key, &v) in &table {
                    let bits: Vec<u8> = key.bytes().collect();
                    for i in 0..n {
                        for j in i + 1..n {
                            let mut f = bits.clone();
                            f[i] ^= 1;
                            f[j] ^= 1;
                            let flipped = String::from_utf8(f).unwrap();
                            assert_eq!(table[&flipped], v, "{} {chain:?} {key}", d.name());
                        }
                    }
                }
                let r_count = chain.iter().filter(|&&x| c.is_r(x)).count();
                if r_count % 2 == 1 {
                    assert!(table.values().all(|&v| v == 0), "{} {chain:?}", d.name());
                }
                let r = sphere_report(&spec).unwrap();
                assert_eq!(r.component_dim * r.components, r.total_dim);
            }
        }
    }

    #[test]
    fn torus_mixed_dims_agree() {
        for (_, c) in clifford_cases() {
            let t = torus_dims(&c);
            assert_eq!(t.get("AA"), t.get("AP"));
            assert_eq!(t.get("AP"), t.get("PA"));
        }
    }

    #[test]
    fn report_json_shape() {
        let (d, c) = setup("fermion", "psi");
        let v = serde_json::to_value(report(&d, &c, &["sigma", "sigma"])).unwrap();
        assert_eq!(v["epsilon_table"]["01"], 1);
        assert_eq!(v["lambda_class"]["generators"], 2);
    }
}
