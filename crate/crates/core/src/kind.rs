//! Catalog of the group families used throughout the crate.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::table::GroupTable;

/// Largest order a catalog kind may describe. Tables are dense `n × n`
/// arrays, so this keeps construction bounded.
pub const MAX_KIND_ORDER: usize = 255;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Cyclic(usize),
    /// Symmetries of a `k`-gon, order `2k`.
    Dihedral(usize),
    /// `(Z_2)^rank`, order `2^rank`.
    ElementaryAbelian(u32),
    Quaternion8,
    DirectProduct(Box<GroupKind>, Box<GroupKind>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KindParseError {
    #[error("unknown group kind `{0}` (expected cyclic:N, dihedral:K, e2:R, q8 or A*B)")]
    Unknown(String),
    #[error("bad parameter `{0}`")]
    BadParameter(String),
    #[error("order {0} is outside 1..={MAX_KIND_ORDER}")]
    OrderOutOfRange(u128),
}

impl GroupKind {
    pub fn direct_product(a: GroupKind, b: GroupKind) -> Self {
        GroupKind::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn order(&self) -> usize {
        self.order_wide().min(usize::MAX as u128) as usize
    }

    fn order_wide(&self) -> u128 {
        match self {
            GroupKind::Cyclic(n) => *n as u128,
            GroupKind::Dihedral(k) => 2 * *k as u128,
            GroupKind::ElementaryAbelian(rank) => 1u128.checked_shl(*rank).unwrap_or(u128::MAX),
            GroupKind::Quaternion8 => 8,
            GroupKind::DirectProduct(a, b) => a.order_wide().saturating_mul(b.order_wide()),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupKind::Dihedral(k) => write!(f, "dihedral:{k}"),
            GroupKind::ElementaryAbelian(r) => write!(f, "e2:{r}"),
            GroupKind::Quaternion8 => f.write_str("q8"),
            GroupKind::DirectProduct(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = KindParseError;

    /// Accepts `cyclic:7`, `dihedral:5`, `e2:3`, `q8` and products such as
    /// `cyclic:4*cyclic:2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let kind = if let Some((left, right)) = s.split_once('*') {
            GroupKind::direct_product(left.parse()?, right.parse()?)
        } else {
            let (name, param) = match s.split_once(':') {
                Some((name, param)) => (name, Some(param)),
                None => (s, None),
            };
            let number = |p: Option<&str>| -> Result<usize, KindParseError> {
                let p = p.ok_or_else(|| KindParseError::BadParameter(s.to_string()))?;
                p.trim().parse().map_err(|_| KindParseError::BadParameter(p.to_string()))
            };
            match name.to_ascii_lowercase().as_str() {
                "cyclic" | "z" => GroupKind::Cyclic(number(param)?),
                "dihedral" | "d" => GroupKind::Dihedral(number(param)?),
                "e2" | "elementary" => {
                    let rank = number(param)?;
                    GroupKind::ElementaryAbelian(u32::try_from(rank).unwrap_or(u32::MAX))
                }
                "q8" | "quaternion" if param.is_none() => GroupKind::Quaternion8,
                _ => return Err(KindParseError::Unknown(s.to_string())),
            }
        };
        let order = kind.order_wide();
        if order == 0 || order > MAX_KIND_ORDER as u128 {
            return Err(KindParseError::OrderOutOfRange(order));
        }
        Ok(kind)
    }
}

/// Canonical table for `kind`, always with identity `0`.
///
/// `Dihedral(k)` labels rotations `r^i` as `i` and reflections `r^i s` as
/// `k + i`. `ElementaryAbelian` is XOR on `rank`-bit indices. `Quaternion8`
/// uses `1, -1, i, -i, j, -j, k, -k` as `0..8`. A direct product `A × B`
/// encodes `(x, y)` as `x * |B| + y`.
///
/// # Panics
/// Panics if the kind has order 0 or more than [`MAX_KIND_ORDER`].
pub fn make_group(kind: &GroupKind) -> GroupTable {
    let n = kind.order_wide();
    assert!(
        n >= 1 && n <= MAX_KIND_ORDER as u128,
        "group kind {kind} has unsupported order {n}"
    );
    let n = n as usize;
    let mut cells = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            cells[a * n + b] = multiply(kind, a, b);
        }
    }
    GroupTable::from_trusted(n, cells, 0)
}

fn multiply(kind: &GroupKind, a: usize, b: usize) -> usize {
    match kind {
        GroupKind::Cyclic(n) => (a + b) % n,
        GroupKind::Dihedral(k) => {
            let k = *k;
            let (ra, sa) = (a % k, a >= k);
            let (rb, sb) = (b % k, b >= k);
            // r^i s^x · r^j s^y = r^(i ± j) s^(x+y)
            let rot = if sa { (ra + k - rb) % k } else { (ra + rb) % k };
            if sa ^ sb {
                k + rot
            } else {
                rot
            }
        }
        GroupKind::ElementaryAbelian(_) => a ^ b,
        GroupKind::Quaternion8 => quaternion_product(a, b),
        GroupKind::DirectProduct(left, right) => {
            let m = right.order();
            let x = multiply(left, a / m, b / m);
            let y = multiply(right, a % m, b % m);
            x * m + y
        }
    }
}

fn quaternion_product(a: usize, b: usize) -> usize {
    // Unit index: 0 = 1, 1 = i, 2 = j, 3 = k; odd labels carry a minus sign.
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let (ua, na) = (a / 2, a % 2 == 1);
    let (ub, nb) = (b / 2, b % 2 == 1);
    let (u, flip) = UNIT[ua][ub];
    let negative = na ^ nb ^ flip;
    2 * u + usize::from(negative)
}

/// One representative of every isomorphism class of order `n`, for
/// `1 <= n <= 8`; `None` above that.
pub fn groups_of_order(n: usize) -> Option<Vec<GroupKind>> {
    use GroupKind::*;
    let kinds = match n {
        1 => vec![Cyclic(1)],
        2 => vec![Cyclic(2)],
        3 => vec![Cyclic(3)],
        4 => vec![Cyclic(4), ElementaryAbelian(2)],
        5 => vec![Cyclic(5)],
        6 => vec![Cyclic(6), Dihedral(3)],
        7 => vec![Cyclic(7)],
        8 => vec![
            Cyclic(8),
            GroupKind::direct_product(Cyclic(4), Cyclic(2)),
            ElementaryAbelian(3),
            Dihedral(4),
            Quaternion8,
        ],
        _ => return None,
    };
    Some(kinds)
}
