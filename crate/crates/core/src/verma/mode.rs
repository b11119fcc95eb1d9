use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ModeKind {
    G,
    L,
}

/// `L_n` or `G_r`. The index is stored doubled so both kinds are integers;
/// the derived order (G before L, then by index) is the PBW normal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NSMode {
    kind: ModeKind,
    twice: i64,
}

impl NSMode {
    pub fn l(n: i64) -> Self {
        NSMode {
            kind: ModeKind::L,
            twice: 2 * n,
        }
    }

    /// `G_{k/2}` for odd `k`.
    pub fn g_half(k: i64) -> Self {
        assert!(k % 2 != 0, "G index must be half-odd");
        NSMode {
            kind: ModeKind::G,
            twice: k,
        }
    }

    pub fn new(kind: ModeKind, twice_index: i64) -> Result<Self> {
        let ok = match kind {
            ModeKind::L => twice_index % 2 == 0,
            ModeKind::G => twice_index % 2 != 0,
        };
        if !ok {
            return Err(Error::Verma(format!("{kind:?} cannot have index {twice_index}/2")));
        }
        Ok(NSMode {
            kind,
            twice: twice_index,
        })
    }

    pub fn kind(&self) -> ModeKind {
        self.kind
    }

    pub fn is_odd(&self) -> bool {
        self.kind == ModeKind::G
    }

    pub fn twice_index(&self) -> i64 {
        self.twice
    }

    pub fn index(&self) -> Rational {
        rational(self.twice, 2)
    }

    pub fn is_creation(&self) -> bool {
        self.twice < 0
    }
}

impl fmt::Display for NSMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.kind, format_rational(&self.index()))
    }
}

impl FromStr for NSMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Verma(format!("cannot parse mode {s:?}"));
        let s = s.trim();
        let (kind, rest) = match s.split_at_checked(1).ok_or_else(bad)? {
            ("L", r) => (ModeKind::L, r),
            ("G", r) => (ModeKind::G, r),
            _ => return Err(bad()),
        };
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let idx = parse_rational(inner).map_err(|_| bad())?;
        let twice = idx * rational(2, 1);
        if !twice.is_integer() {
            return Err(bad());
        }
        let twice: i64 = twice.to_integer().try_into().map_err(|_| bad())?;
        NSMode::new(kind, twice)
    }
}

impl Serialize for NSMode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `[X, Y}` as a combination of modes plus a central scalar.
pub fn bracket(x: NSMode, y: NSMode, c: &Rational) -> (Vec<(Rational, NSMode)>, Rational) {
    let (a, b) = (x.twice, y.twice);
    let zero = rational(0, 1);
    match (x.kind, y.kind) {
        (ModeKind::L, ModeKind::L) => {
            let (m, n) = (a / 2, b / 2);
            let central = if m + n == 0 {
                c * rational(m * m * m - m, 12)
            } else {
                zero
            };
            let terms = if m != n {
                vec![(rational(m - n, 1), NSMode::l(m + n))]
            } else {
                vec![]
            };
            (terms, central)
        }
        // (m/2 − r) G_{m+r} with m = a/2, r = b/2
        (ModeKind::L, ModeKind::G) => (lg(a, b), zero),
        (ModeKind::G, ModeKind::L) => {
            let terms = lg(b, a).into_iter().map(|(k, g)| (-k, g)).collect();
            (terms, zero)
        }
        (ModeKind::G, ModeKind::G) => {
            let central = if a + b == 0 { c * rational(a * a - 1, 12) } else { zero };
            (vec![(rational(2, 1), NSMode::l((a + b) / 2))], central)
        }
    }
}

fn lg(twice_m: i64, twice_r: i64) -> Vec<(Rational, NSMode)> {
    // m/2 − r = (twice_m − 2 twice_r)/4
    let k = rational(twice_m - 2 * twice_r, 4);
    if k == rational(0, 1) {
        vec![]
    } else {
        vec![(k, NSMode::g_half(twice_m + twice_r))]
    }
}
