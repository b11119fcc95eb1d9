use super::*;
use crate::builtin::{self, BUILTIN_KEYS};
use crate::exactnum::{rational, root_of_unity};

fn sqrt2() -> Cyclotomic {
    Cyclotomic::zeta(8) + Cyclotomic::zeta_pow(8, -1)
}

fn ids(d: &FusionData, names: &[&str]) -> Vec<LabelId> {
    names.iter().map(|n| d.label_id(n).unwrap()).collect()
}

#[test]
fn trivial_and_ising_are_valid() {
    assert!(validate(&builtin::trivial()).is_valid());
    assert!(validate(&builtin::fermion()).is_valid());
}

#[test]
fn ising_with_unit_sigma_dimension_fails_dimension_equation() {
    let mut d = builtin::fermion();
    let sigma = d.label_id("sigma").unwrap();
    d.set_qdim(sigma, Cyclotomic::one());
    let report = validate(&d);
    assert!(!report.is_valid());
    let v = report
        .violations
        .iter()
        .find(|v| v.invariant == "dimension-equation" && v.witness == ["sigma", "sigma"])
        .expect("cites (sigma, sigma)");
    assert!(v.detail.contains("d_i d_j = 1"));
}

#[test]
fn broken_axioms_are_reported_not_raised() {
    let mut d = builtin::toric();
    d.set_fusion(1, 2, 3, 0);
    d.set_twist(0, rational(1, 3));
    d.set_dual(1, 2);
    let report = validate(&d);
    for inv in ["commutativity", "unit-twist", "dual-involutive", "duality-axiom"] {
        assert!(report.cites(inv), "missing {inv}: {:?}", report.violations);
    }
}

#[test]
fn trivial_smatrix() {
    let s = compute_smatrix(&builtin::trivial()).unwrap();
    assert_eq!(s.data.rows(), 1);
    assert!(s.get(0, 0).is_one());
}

#[test]
fn ising_smatrix_entries() {
    let d = builtin::fermion();
    let s = compute_smatrix(&d).unwrap();
    let [one, psi, sigma] = ids(&d, &["1", "psi", "sigma"])[..] else {
        unreachable!()
    };
    assert_eq!(*s.get(one, sigma), sqrt2());
    assert!(s.get(psi, psi).is_one());
    assert!(s.get(sigma, sigma).is_zero());
    assert_eq!(*s.get(psi, sigma), -sqrt2());
    assert_eq!(s.data.conductor(), 16);
}

#[test]
fn s_squared_scalar_is_total_dimension() {
    let triv = builtin::trivial();
    let chk = check_s_squared(&compute_smatrix(&triv).unwrap(), &triv);
    assert!(chk.holds);
    assert!(chk.scalar.unwrap().is_one());

    for key in ["fermion", "dirac", "toric", "fibonacci"] {
        let d = builtin::builtin(key).unwrap();
        let chk = check_s_squared(&compute_smatrix(&d).unwrap(), &d);
        assert!(chk.holds, "{key}");
        // independent route: Σ d_i²
        let dim2: Cyclotomic = d.ids().map(|i| d.qdim(i) * d.qdim(i)).sum();
        assert_eq!(chk.scalar.unwrap(), dim2, "{key}");
    }
    let d = builtin::fermion();
    let chk = check_s_squared(&compute_smatrix(&d).unwrap(), &d);
    assert_eq!(chk.scalar.unwrap(), Cyclotomic::from_int(4));
}

#[test]
fn ising_smatrix_does_not_see_sigma_twist() {
    // θ_σ cancels from every entry of the s-matrix formula for Ising-type
    // fusion, so twist corruptions of σ alone cannot break s² ∝ C.
    let d = builtin::fermion();
    let s = compute_smatrix(&d).unwrap();
    let sigma = d.label_id("sigma").unwrap();
    for k in 0..16 {
        let mut e = d.clone();
        e.set_twist(sigma, rational(k, 16));
        assert_eq!(compute_smatrix(&e).unwrap().data, s.data, "k = {k}");
    }
}

#[test]
fn corrupted_psi_twist_breaks_s_squared() {
    let mut d = builtin::fermion();
    let psi = d.label_id("psi").unwrap();
    d.set_twist(psi, rational(0, 1));
    let chk = check_s_squared(&compute_smatrix(&d).unwrap(), &d);
    assert!(!chk.holds);
    assert!(chk.witness.is_some());
}

/// `(S T)^3 = p₊ S²` for Ising fusion with `θ_σ = e^{2πi k/16}`: the modular
/// relation that actually pins the σ twist.
fn ising_modular_relation_holds(k: i64) -> bool {
    let mut d = builtin::fermion();
    let sigma = d.label_id("sigma").unwrap();
    d.set_twist(sigma, rational(k, 16));
    let s = compute_smatrix(&d).unwrap().data;
    let t = CycMatrix::from_fn(3, 3, |i, j| if i == j { d.theta(i) } else { Cyclotomic::zero() });
    let st = s.mul(&t).unwrap();
    let st3 = st.mul(&st).unwrap().mul(&st).unwrap();
    let s2 = s.mul(&s).unwrap();
    // Gauss sum p₊ = Σ θ_i d_i²
    let gauss: Cyclotomic = d.ids().map(|i| &d.theta(i) * &(d.qdim(i) * d.qdim(i))).sum();
    (0..3).all(|i| (0..3).all(|j| *st3.get(i, j) == &gauss * s2.get(i, j)))
}

#[test]
fn sigma_twist_is_not_pinned_by_modular_relations() {
    // Every k/16 satisfies (ST)^3 = p₊S² with Ising fusion; the σ twist is
    // fixed by braiding data that is not part of the model, not by S and T.
    let passing: Vec<i64> = (0..16).filter(|&k| ising_modular_relation_holds(k)).collect();
    assert_eq!(passing, (0..16).collect::<Vec<_>>());
}

#[test]
fn smatrix_symmetric_for_builtins() {
    for key in BUILTIN_KEYS {
        let d = builtin::builtin(key).unwrap();
        assert!(compute_smatrix(&d).unwrap().data.is_symmetric());
    }
}

#[test]
fn asymmetric_input_is_an_error() {
    // only non-commutative fusion can break the symmetry of the formula
    let mut d = builtin::toric();
    d.set_fusion(1, 2, 3, 0);
    assert!(matches!(compute_smatrix(&d), Err(Error::AsymmetricSMatrix { .. })));
}

#[test]
fn fusion_matrices_commute_on_builtins() {
    for key in BUILTIN_KEYS {
        let d = builtin::builtin(key).unwrap();
        for i in d.ids() {
            for j in d.ids() {
                for k in d.ids() {
                    for l in d.ids() {
                        let a: u64 = d.ids().map(|m| d.n(i, j, m) * d.n(m, k, l)).sum();
                        let b: u64 = d.ids().map(|m| d.n(i, k, m) * d.n(m, j, l)).sum();
                        assert_eq!(a, b, "{key}");
                    }
                }
            }
        }
    }
}

#[test]
fn ising_hom_dims() {
    let d = builtin::fermion();
    let h = |names: &[&str]| hom_unit_dim(&d, &ids(&d, names));
    assert_eq!(h(&["1"]), 1);
    assert_eq!(h(&["psi"]), 0);
    assert_eq!(h(&["sigma", "sigma"]), 1);
    assert_eq!(h(&["sigma", "sigma", "sigma", "sigma"]), 2);
    assert_eq!(hom_unit_dim(&d, &[]), 0);
}

fn all_chains(n: usize, len: usize) -> Vec<Vec<LabelId>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|c| (0..n).map(move |x| [c.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

#[test]
fn hom_dim_rotation_and_reversal_invariance() {
    let mut cats: Vec<FusionData> = BUILTIN_KEYS.iter().map(|k| builtin::builtin(k).unwrap()).collect();
    cats.push(deligne_product(&builtin::fermion(), &builtin::dirac()));
    for d in &cats {
        let max_len = if d.len() > 5 { 3 } else { 4 };
        for len in 1..=max_len {
            for chain in all_chains(d.len(), len) {
                let base = hom_unit_dim(d, &chain);
                let mut rot = chain.clone();
                rot.rotate_left(1);
                assert_eq!(hom_unit_dim(d, &rot), base, "{} {chain:?}", d.name());
                let rev: Vec<_> = chain.iter().rev().map(|&x| d.dual(x)).collect();
                assert_eq!(hom_unit_dim(d, &rev), base, "{} {chain:?}", d.name());
            }
        }
    }
}

#[test]
fn deligne_with_trivial_is_relabeling() {
    let t = builtin::trivial();
    for key in ["toric", "fermion"] {
        let x = builtin::builtin(key).unwrap();
        for p in [deligne_product(&t, &x), deligne_product(&x, &t)] {
            assert_eq!(p.len(), x.len());
            assert!(validate(&p).is_valid());
            for i in x.ids() {
                assert_eq!(p.twist(i), x.twist(i));
                assert_eq!(p.qdim(i), x.qdim(i));
                assert_eq!(p.dual(i), x.dual(i));
                for j in x.ids() {
                    for k in x.ids() {
                        assert_eq!(p.n(i, j, k), x.n(i, j, k));
                    }
                }
            }
        }
    }
}

#[test]
fn ising_squared() {
    let d = deligne_product(&builtin::fermion(), &builtin::fermion());
    assert_eq!(d.len(), 9);
    assert!(validate(&d).is_valid());
    let ss = d.label_id("sigma.sigma").unwrap();
    assert_eq!(*d.twist(ss), rational(1, 8));
    assert_eq!(*d.qdim(ss), Cyclotomic::from_int(2));
    assert_eq!(d.theta(ss), root_of_unity(&rational(1, 8)));
}

#[test]
fn deligne_is_symmetric_up_to_transposition() {
    let a = builtin::fermion();
    let b = builtin::dirac();
    let ab = deligne_product(&a, &b);
    let ba = deligne_product(&b, &a);
    let swap = |x: LabelId| (x % b.len()) * a.len() + x / b.len();
    for x in ab.ids() {
        assert_eq!(ab.twist(x), ba.twist(swap(x)));
        assert_eq!(ab.qdim(x), ba.qdim(swap(x)));
        assert_eq!(swap(ab.dual(x)), ba.dual(swap(x)));
        for y in ab.ids() {
            for z in ab.ids() {
                assert_eq!(ab.n(x, y, z), ba.n(swap(x), swap(y), swap(z)));
            }
        }
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for key in BUILTIN_KEYS {
        let d = builtin::builtin(key).unwrap();
        let text = d.to_json();
        let back = FusionData::from_json(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), text);
    }
}

#[test]
fn json_rejections() {
    let good = builtin::toric().to_json();
    let mut v: serde_json::Value = serde_json::from_str(&good).unwrap();
    v["extra"] = serde_json::json!(1);
    assert!(FusionData::from_json(&v.to_string()).is_err());

    let mut v: serde_json::Value = serde_json::from_str(&good).unwrap();
    v["labels"][1] = serde_json::json!("e e");
    assert!(FusionData::from_json(&v.to_string()).is_err());

    let mut v: serde_json::Value = serde_json::from_str(&good).unwrap();
    v["twist"].as_object_mut().unwrap().remove("m");
    assert!(FusionData::from_json(&v.to_string()).is_err());

    let mut v: serde_json::Value = serde_json::from_str(&good).unwrap();
    v["sigma_vv"] = serde_json::json!(2);
    assert!(FusionData::from_json(&v.to_string()).is_err());

    let mut v: serde_json::Value = serde_json::from_str(&good).unwrap();
    v["unit"] = serde_json::json!("x");
    assert!(matches!(
        FusionData::from_json(&v.to_string()),
        Err(Error::UnknownLabel(_))
    ));
}
