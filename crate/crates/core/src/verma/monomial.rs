use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::mode::{ModeKind, NSMode};
use crate::error::{Error, Result};
use crate::exactnum::{rational, Rational};

/// A normal-ordered product `G_{m₁}…G_{m_k} L_{n₁}…L_{n_ℓ}` of creation
/// modes, written left to right with indices increasing: G indices strictly,
/// L indices weakly. The empty monomial is the highest-weight vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBWMonomial {
    modes: Vec<NSMode>,
}

impl PBWMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_modes(modes: Vec<NSMode>) -> Result<Self> {
        if let Some(m) = modes.iter().find(|m| !m.is_creation()) {
            return Err(Error::Verma(format!("{m} is not a creation mode")));
        }
        for w in modes.windows(2) {
            let ok = w[0] < w[1] || (w[0] == w[1] && w[0].kind() == ModeKind::L);
            if !ok {
                return Err(Error::Verma(format!("{} {} is not in normal order", w[0], w[1])));
            }
        }
        Ok(PBWMonomial { modes })
    }

    pub(crate) fn from_sorted_unchecked(modes: Vec<NSMode>) -> Self {
        PBWMonomial { modes }
    }

    pub fn modes(&self) -> &[NSMode] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    /// G indices, left to right.
    pub fn g_part(&self) -> Vec<Rational> {
        self.part(ModeKind::G)
    }

    pub fn l_part(&self) -> Vec<Rational> {
        self.part(ModeKind::L)
    }

    fn part(&self, kind: ModeKind) -> Vec<Rational> {
        self.modes
            .iter()
            .filter(|m| m.kind() == kind)
            .map(NSMode::index)
            .collect()
    }

    pub fn twice_degree(&self) -> i64 {
        -self.modes.iter().map(NSMode::twice_index).sum::<i64>()
    }

    pub fn degree(&self) -> Rational {
        rational(self.twice_degree(), 2)
    }

    pub fn parity(&self) -> u8 {
        (self.modes.iter().filter(|m| m.is_odd()).count() % 2) as u8
    }

    /// Whether this lies in the quotient basis: `m ≤ −3/2`, `n ≤ −2`.
    pub fn in_vprime(&self) -> bool {
        self.modes.iter().all(|m| match m.kind() {
            ModeKind::G => m.twice_index() <= -3,
            ModeKind::L => m.twice_index() <= -4,
        })
    }

    pub fn filtration(&self) -> FiltrationDegree {
        let mut alpha = vec![self.modes.len() as u32];
        for m in &self.modes {
            // index −1 − i/2, i.e. doubled index −2 − i
            let i = -m.twice_index() - 2;
            if i >= 1 {
                let i = i as usize;
                if alpha.len() <= i {
                    alpha.resize(i + 1, 0);
                }
                alpha[i] += 1;
            }
        }
        FiltrationDegree::new(alpha)
    }

    /// `(L_{−2})^i`, optionally preceded by `G_{−3/2}`.
    pub fn l2_power(i: usize, with_g32: bool) -> Self {
        let mut modes = Vec::with_capacity(i + 1);
        if with_g32 {
            modes.push(NSMode::g_half(-3));
        }
        modes.extend(std::iter::repeat_n(NSMode::l(-2), i));
        PBWMonomial { modes }
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modes.is_empty() {
            return f.write_str("1");
        }
        let words: Vec<String> = self.modes.iter().map(NSMode::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

impl FromStr for PBWMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let modes = s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>()?;
        Self::from_modes(modes)
    }
}

impl Serialize for PBWMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `(α₀, α₁, …)`: α₀ counts all generators, α_i those of index `−1 − i/2`.
/// Compared lexicographically from α₀; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FiltrationDegree {
    pub alpha: Vec<u32>,
}

impl FiltrationDegree {
    pub fn new(mut alpha: Vec<u32>) -> Self {
        while alpha.last() == Some(&0) {
            alpha.pop();
        }
        FiltrationDegree { alpha }
    }
}

impl Ord for FiltrationDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        // a missing entry is 0, and any positive entry beats it
        self.alpha.cmp(&other.alpha)
    }
}

impl PartialOrd for FiltrationDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
