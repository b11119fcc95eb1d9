//! Small corpus of categories shipped with the tool.

use crate::error::{Error, Result};
use crate::exactnum::{rational, Cyclotomic};
use crate::fusion::FusionData;

pub const BUILTIN_KEYS: [&str; 5] = ["trivial", "fermion", "dirac", "toric", "fibonacci"];

pub fn builtin(key: &str) -> Result<FusionData> {
    match key {
        "trivial" => Ok(trivial()),
        "fermion" => Ok(fermion()),
        "dirac" => Ok(dirac()),
        "toric" => Ok(toric()),
        "fibonacci" => Ok(fibonacci()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn trivial() -> FusionData {
    FusionData::new(
        "trivial",
        labels(&["1"]),
        0,
        vec![0],
        &[(0, 0, 0, 1)],
        vec![rational(0, 1)],
        vec![Cyclotomic::one()],
        None,
    )
    .expect("builtin")
}

/// Chiral fermion (Ising): labels `1, psi, sigma`.
pub fn fermion() -> FusionData {
    let (one, psi, sigma) = (0, 1, 2);
    let fusion = [
        (one, one, one, 1),
        (one, psi, psi, 1),
        (psi, one, psi, 1),
        (one, sigma, sigma, 1),
        (sigma, one, sigma, 1),
        (psi, psi, one, 1),
        (psi, sigma, sigma, 1),
        (sigma, psi, sigma, 1),
        (sigma, sigma, one, 1),
        (sigma, sigma, psi, 1),
    ];
    let sqrt2 = Cyclotomic::zeta(8) + Cyclotomic::zeta_pow(8, -1);
    FusionData::new(
        "fermion",
        labels(&["1", "psi", "sigma"]),
        one,
        vec![one, psi, sigma],
        &fusion,
        vec![rational(0, 1), rational(1, 2), rational(1, 16)],
        vec![Cyclotomic::one(), Cyclotomic::one(), sqrt2],
        None,
    )
    .expect("builtin")
}

fn pointed(
    name: &str,
    names: &[&str],
    mul: impl Fn(usize, usize) -> usize,
    inv: impl Fn(usize) -> usize,
    twists: &[(i64, i64)],
) -> FusionData {
    let n = names.len();
    let fusion: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, mul(i, j), 1))
        .collect();
    FusionData::new(
        name,
        labels(names),
        0,
        (0..n).map(inv).collect(),
        &fusion,
        twists.iter().map(|&(a, b)| rational(a, b)).collect(),
        vec![Cyclotomic::one(); n],
        None,
    )
    .expect("builtin")
}

/// ℤ/4 pointed category with twists `j²/8`.
pub fn dirac() -> FusionData {
    pointed(
        "dirac",
        &["j0", "j1", "j2", "j3"],
        |i, j| (i + j) % 4,
        |i| (4 - i) % 4,
        &[(0, 1), (1, 8), (1, 2), (1, 8)],
    )
}

/// ℤ/2 × ℤ/2 toric code: `1, e, m, f` with `f = e⊠m`.
pub fn toric() -> FusionData {
    pointed(
        "toric",
        &["1", "e", "m", "f"],
        |i, j| i ^ j,
        |i| i,
        &[(0, 1), (0, 1), (0, 1), (1, 2)],
    )
}

/// Fibonacci: `τ⊠τ = 1 + τ`, `d_τ = −ζ₅² − ζ₅³`.
pub fn fibonacci() -> FusionData {
    let golden = -(Cyclotomic::zeta_pow(5, 2) + Cyclotomic::zeta_pow(5, 3));
    FusionData::new(
        "fibonacci",
        labels(&["1", "tau"]),
        0,
        vec![0, 1],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)],
        vec![rational(0, 1), rational(2, 5)],
        vec![Cyclotomic::one(), golden],
        None,
    )
    .expect("builtin")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::validate;

    #[test]
    fn all_builtins_validate() {
        for key in BUILTIN_KEYS {
            let d = builtin(key).unwrap();
            let report = validate(&d);
            assert!(report.is_valid(), "{key}: {:?}", report.violations);
        }
    }

    #[test]
    fn unknown_key() {
        assert!(matches!(builtin("ising"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn golden_ratio_relation() {
        let d = fibonacci();
        let tau = d.qdim(1);
        assert_eq!(tau * tau, tau + &Cyclotomic::one());
    }

    #[test]
    fn fermion_has_three_labels() {
        assert_eq!(fermion().len(), 3);
    }
}
