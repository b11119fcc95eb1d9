//! Clifford structure on a modular tensor category: the odd invertible
//! object V⁻, NS/R classification of labels, the block form of the
//! s-matrix, and super-Brauer parity of Clifford algebras.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{CycMatrix, Cyclotomic};
use crate::fusion::{FusionData, LabelId, SMatrix};

/// All labels `X` with `X⊠X = 1` exactly and twist `1/2`, in label order.
pub fn find_vminus(data: &FusionData) -> Vec<LabelId> {
    let half = crate::exactnum::rational(1, 2);
    data.ids()
        .filter(|&x| {
            let total: u64 = data.fuse(x, x).map(|(_, m)| m).sum();
            total == 1 && data.n(x, x, data.unit()) == 1 && *data.twist(x) == half
        })
        .collect()
}

fn check_vminus(data: &FusionData, vminus: LabelId) -> Result<()> {
    if find_vminus(data).contains(&vminus) {
        Ok(())
    } else {
        Err(Error::NotVminus(data.label(vminus).to_string()))
    }
}

/// `M ↦ V⁻⊠M`. V⁻ is invertible so the product is a single label.
pub fn involution(data: &FusionData, vminus: LabelId) -> Vec<LabelId> {
    data.ids()
        .map(|m| {
            let mut it = data.fuse(vminus, m);
            match (it.next(), it.next()) {
                (Some((k, 1)), None) => k,
                _ => panic!("V- must be invertible"),
            }
        })
        .collect()
}

/// `ζ_M = −θ_{V⁻⊠M} θ_M⁻¹`, each asserted to be ±1.
pub fn compute_zeta(data: &FusionData, vminus: LabelId) -> Result<Vec<i8>> {
    check_vminus(data, vminus)?;
    let inv = involution(data, vminus);
    data.ids()
        .map(|m| {
            let z = -(&data.theta(inv[m]) * &data.theta(m).inv()?);
            if z.is_one() {
                Ok(1)
            } else if (-&z).is_one() {
                Ok(-1)
            } else {
                Err(Error::ZetaNotSign {
                    label: data.label(m).to_string(),
                    value: z.to_string(),
                })
            }
        })
        .collect()
}

/// Whether σ_{V⁻V⁻} makes this a Clifford category or only the
/// "square root" pre-Clifford variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CliffordKind {
    Clifford,
    PreCliffordSqrt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordStructure {
    pub vminus: LabelId,
    pub sigma_vv: i8,
    pub zeta: Vec<i8>,
    pub involution: Vec<LabelId>,
}

impl CliffordStructure {
    /// Absent `sigma_vv` defaults to `θ_{V⁻} = −1`.
    pub fn new(data: &FusionData, vminus: LabelId) -> Result<Self> {
        let zeta = compute_zeta(data, vminus)?;
        Ok(CliffordStructure {
            vminus,
            sigma_vv: data.sigma_vv().unwrap_or(-1),
            zeta,
            involution: involution(data, vminus),
        })
    }

    pub fn kind(&self) -> CliffordKind {
        if self.sigma_vv == -1 {
            CliffordKind::Clifford
        } else {
            CliffordKind::PreCliffordSqrt
        }
    }
}

/// Pick V⁻: the requested label, or the unique candidate.
pub fn choose_vminus(data: &FusionData, requested: Option<&str>) -> Result<LabelId> {
    let candidates = find_vminus(data);
    match requested {
        Some(name) => {
            let id = data.label_id(name)?;
            if candidates.contains(&id) {
                Ok(id)
            } else {
                Err(Error::NotVminus(name.to_string()))
            }
        }
        None => match candidates.as_slice() {
            [] => Err(Error::NotPreClifford),
            [one] => Ok(*one),
            many => Err(Error::AmbiguousVminus(
                many.iter().map(|&i| data.label(i).to_string()).collect(),
            )),
        },
    }
}

/// Partition of the labels into NS⁺, NS⁻, R⁺, R⁻, R⁰. `ns_minus[k]` is the
/// involution image of `ns_plus[k]`, likewise for R.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelClassification {
    pub vminus: LabelId,
    pub ns_plus: Vec<LabelId>,
    pub ns_minus: Vec<LabelId>,
    pub r_plus: Vec<LabelId>,
    pub r_minus: Vec<LabelId>,
    pub r_zero: Vec<LabelId>,
}

impl LabelClassification {
    pub fn is_ns(&self, l: LabelId) -> bool {
        self.ns_plus.contains(&l) || self.ns_minus.contains(&l)
    }

    pub fn is_r(&self, l: LabelId) -> bool {
        !self.is_ns(l)
    }

    pub fn is_r_zero(&self, l: LabelId) -> bool {
        self.r_zero.contains(&l)
    }

    pub fn named(&self, data: &FusionData) -> NamedClassification {
        let names = |v: &[LabelId]| v.iter().map(|&i| data.label(i).to_string()).collect();
        NamedClassification {
            vminus: data.label(self.vminus).to_string(),
            ns_plus: names(&self.ns_plus),
            ns_minus: names(&self.ns_minus),
            r_plus: names(&self.r_plus),
            r_minus: names(&self.r_minus),
            r_zero: names(&self.r_zero),
        }
    }
}

/// [`LabelClassification`] with label names, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedClassification {
    pub vminus: String,
    pub ns_plus: Vec<String>,
    pub ns_minus: Vec<String>,
    pub r_plus: Vec<String>,
    pub r_minus: Vec<String>,
    pub r_zero: Vec<String>,
}

pub fn classify_labels(data: &FusionData, vminus: LabelId) -> Result<LabelClassification> {
    let st = CliffordStructure::new(data, vminus)?;
    let zeta = &st.zeta;
    for m in data.ids() {
        for n in data.ids() {
            for (p, _) in data.fuse(m, n) {
                if zeta[p] != zeta[m] * zeta[n] {
                    return Err(Error::ZetaNotMultiplicative {
                        m: data.label(m).to_string(),
                        n: data.label(n).to_string(),
                        p: data.label(p).to_string(),
                    });
                }
            }
        }
    }
    let mut cls = LabelClassification {
        vminus,
        ns_plus: vec![],
        ns_minus: vec![],
        r_plus: vec![],
        r_minus: vec![],
        r_zero: vec![],
    };
    let mut seen = vec![false; data.len()];
    for m in data.ids() {
        if seen[m] {
            continue;
        }
        let image = st.involution[m];
        seen[m] = true;
        seen[image] = true;
        match (image == m, zeta[m]) {
            (true, -1) => cls.r_zero.push(m),
            (true, _) => {
                // multiplicativity with ζ_{V⁻} = +1 already rules this out
                return Err(Error::ZetaNotSign {
                    label: data.label(m).to_string(),
                    value: "+1 on a fixed point of the involution".into(),
                });
            }
            (false, 1) => {
                cls.ns_plus.push(m);
                cls.ns_minus.push(image);
            }
            (false, _) => {
                cls.r_plus.push(m);
                cls.r_minus.push(image);
            }
        }
    }
    Ok(cls)
}

/// One named check of [`verify_block_structure`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCheck {
    pub name: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Blocks {
    #[serde(rename = "A")]
    pub a: CycMatrix,
    #[serde(rename = "B")]
    pub b: CycMatrix,
    #[serde(rename = "C")]
    pub c: CycMatrix,
    #[serde(rename = "D")]
    pub d: CycMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockReport {
    pub blocks: Blocks,
    pub checks: Vec<BlockCheck>,
    pub all_pass: bool,
}

impl BlockReport {
    pub fn check(&self, name: &str) -> Option<&BlockCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const BLOCK_CHECK_NAMES: [&str; 7] = [
    "involution_sign_rule",
    "r0_r_vanishing",
    "block_pattern",
    "a_c_symmetric_nonsingular",
    "bd_nonsingular",
    "bt_d_zero",
    "count_identity",
];

#[derive(Clone, Copy)]
enum Block {
    A,
    B,
    C,
    D,
    Bt,
    Dt,
    Zero,
}

/// Rows of the expected block table, in the order NS⁺, NS⁻, R⁺, R⁻, R⁰.
const TABLE: [[(i8, Block); 5]; 5] = {
    use Block::*;
    [
        [(1, A), (1, A), (1, B), (1, B), (1, D)],
        [(1, A), (1, A), (-1, B), (-1, B), (-1, D)],
        [(1, Bt), (-1, Bt), (1, C), (-1, C), (1, Zero)],
        [(1, Bt), (-1, Bt), (-1, C), (1, C), (1, Zero)],
        [(1, Dt), (-1, Dt), (1, Zero), (1, Zero), (1, Zero)],
    ]
};

/// Check the s-matrix block structure exactly; failures carry a witness.
pub fn verify_block_structure(data: &FusionData, cls: &LabelClassification, s: &SMatrix) -> BlockReport {
    let name = |i: LabelId| data.label(i).to_string();
    let pair = |i: LabelId, j: LabelId| Some((name(i), name(j)));
    let inv = involution(data, cls.vminus);
    let sm = &s.data;

    // (i) s_{ī j} = ± s_ij
    let mut sign_rule = None;
    'outer: for i in data.ids() {
        for j in data.ids() {
            let target = if cls.is_ns(j) {
                sm.get(i, j).clone()
            } else {
                -sm.get(i, j)
            };
            if *sm.get(inv[i], j) != target {
                sign_rule = pair(i, j);
                break 'outer;
            }
        }
    }

    // (ii) s_ij = 0 for i ∈ R⁰, j ∈ R
    let vanishing = cls
        .r_zero
        .iter()
        .flat_map(|&i| data.ids().filter(|&j| cls.is_r(j)).map(move |j| (i, j)))
        .find(|&(i, j)| !sm.get(i, j).is_zero())
        .and_then(|(i, j)| pair(i, j));

    let a = sm.select(&cls.ns_plus, &cls.ns_plus);
    let b = sm.select(&cls.ns_plus, &cls.r_plus);
    let c = sm.select(&cls.r_plus, &cls.r_plus);
    let d = sm.select(&cls.ns_plus, &cls.r_zero);

    // (iii) the table, verbatim
    let groups = [&cls.ns_plus, &cls.ns_minus, &cls.r_plus, &cls.r_minus, &cls.r_zero];
    let mut pattern = None;
    'table: for (gi, rows) in groups.iter().enumerate() {
        for (gj, cols) in groups.iter().enumerate() {
            let (sign, block) = TABLE[gi][gj];
            for (p, &i) in rows.iter().enumerate() {
                for (q, &j) in cols.iter().enumerate() {
                    let base = match block {
                        Block::A => a.get(p, q).clone(),
                        Block::B => b.get(p, q).clone(),
                        Block::C => c.get(p, q).clone(),
                        Block::D => d.get(p, q).clone(),
                        Block::Bt => b.get(q, p).clone(),
                        Block::Dt => d.get(q, p).clone(),
                        Block::Zero => Cyclotomic::zero(),
                    };
                    let expect = if sign < 0 { -base } else { base };
                    if *sm.get(i, j) != expect {
                        pattern = pair(i, j);
                        break 'table;
                    }
                }
            }
        }
    }

    // (iv) A and C symmetric and nonsingular
    let sym_nonsing = |m: &CycMatrix, tag: &str| -> Option<(String, String)> {
        if let Some((i, j)) = m.first_asymmetry() {
            return Some((format!("{tag} asymmetric"), format!("({i},{j})")));
        }
        let r = m.rank();
        (r != m.rows()).then(|| (format!("{tag} rank"), format!("{r} of {}", m.rows())))
    };
    let ac = sym_nonsing(&a, "A").or_else(|| sym_nonsing(&c, "C"));

    // (v) [B D] nonsingular
    let bd = b.hcat(&d).expect("same row count");
    let bd_fail = (!bd.is_nonsingular()).then(|| {
        (
            "[B D] rank".to_string(),
            format!("{} for {}x{}", bd.rank(), bd.rows(), bd.cols()),
        )
    });

    // (vi) BᵀD = 0
    let btd = b.transpose().mul(&d).expect("conformable");
    let btd_fail = (0..btd.rows())
        .flat_map(|i| (0..btd.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !btd.get(i, j).is_zero())
        .and_then(|(i, j)| pair(cls.r_plus[i], cls.r_zero[j]));

    // (vii) |R⁺| + |R⁰| = |NS⁺|
    let count_fail = (cls.r_plus.len() + cls.r_zero.len() != cls.ns_plus.len()).then(|| {
        (
            format!("|R+|+|R0| = {}", cls.r_plus.len() + cls.r_zero.len()),
            format!("|NS+| = {}", cls.ns_plus.len()),
        )
    });

    let checks: Vec<BlockCheck> = BLOCK_CHECK_NAMES
        .iter()
        .zip([sign_rule, vanishing, pattern, ac, bd_fail, btd_fail, count_fail])
        .map(|(&name, witness)| BlockCheck {
            name,
            holds: witness.is_none(),
            witness,
        })
        .collect();
    BlockReport {
        all_pass: checks.iter().all(|c| c.holds),
        blocks: Blocks { a, b, c, d },
        checks,
    }
}

/// Graded Morita class of the complex Clifford algebra `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordAlgebraClass {
    pub generators: u64,
    pub parity: u8,
}

impl CliffordAlgebraClass {
    pub fn new(generators: u64) -> Self {
        CliffordAlgebraClass {
            generators,
            parity: (generators % 2) as u8,
        }
    }
}

/// Class of the graded tensor product `C_{n₁} ⊗̂ … ⊗̂ C_{n_k} ≅ C_{Σn}`.
pub fn morita_parity(factors: &[CliffordAlgebraClass]) -> CliffordAlgebraClass {
    CliffordAlgebraClass::new(factors.iter().map(|f| f.generators).sum())
}
