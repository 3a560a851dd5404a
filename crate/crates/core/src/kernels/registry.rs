//! Named operators and their published kernel matrices.
//!
//! Matrices are stored as printed, with two corrections:
//!
//! * `proposed_a` 5x5 `gy` is the transpose of its `gx`. The printed `gy`
//!   ([`PRINTED_PROPOSED_A_5_GY`]) carries the large `±100` values in the
//!   center column of the outer rows, which no transpose of `gx` produces.
//! * `scharr` 5x5 `gx` row 1 reads `-2 -2 0 2 2`. The printed row
//!   `-2 -2 0 1 2` ([`PRINTED_SCHARR_5_GX`]) breaks antisymmetry and gives a
//!   coefficient sum of -1; row 3 of the same matrix prints `-2 -2 0 2 2`.
//!
//! `proposed_a` and `proposed_b` share one 3x3 pair.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::kernel::{Axis, Kernel, KernelPair};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    Sobel,
    Prewitt,
    Scharr,
    /// Inverse-distance weighting.
    ProposedA,
    /// Radial (axis-favoring) weighting.
    ProposedB,
}

impl Operator {
    pub const ALL: [Operator; 5] = [
        Operator::Sobel,
        Operator::Prewitt,
        Operator::Scharr,
        Operator::ProposedA,
        Operator::ProposedB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operator::Sobel => "sobel",
            Operator::Prewitt => "prewitt",
            Operator::Scharr => "scharr",
            Operator::ProposedA => "proposed_a",
            Operator::ProposedB => "proposed_b",
        }
    }

    pub fn valid_names() -> String {
        Self::ALL.map(Operator::name).join(", ")
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Operator::ALL
            .into_iter()
            .find(|op| op.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownOperator {
                name: s.to_string(),
                valid: Operator::valid_names(),
            })
    }
}

pub const SOBEL_3_GX: [[i64; 3]; 3] = [[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]];
pub const PREWITT_3_GX: [[i64; 3]; 3] = [[-1, 0, 1], [-1, 0, 1], [-1, 0, 1]];
pub const SCHARR_3_GX: [[i64; 3]; 3] = [[-3, 0, 3], [-10, 0, 10], [-3, 0, 3]];

pub const SOBEL_5_GX: [[i64; 5]; 5] = [
    [-5, -4, 0, 4, 5],
    [-8, -10, 0, 10, 8],
    [-10, -20, 0, 20, 10],
    [-8, -10, 0, 10, 8],
    [-5, -4, 0, 4, 5],
];
pub const PREWITT_5_GX: [[i64; 5]; 5] = [[-2, -1, 0, 1, 2]; 5];
pub const SCHARR_5_GX: [[i64; 5]; 5] = [
    [-1, -1, 0, 1, 1],
    [-2, -2, 0, 2, 2],
    [-3, -6, 0, 6, 3],
    [-2, -2, 0, 2, 2],
    [-1, -1, 0, 1, 1],
];
/// As printed; see the module docs.
pub const PRINTED_SCHARR_5_GX: [[i64; 5]; 5] = [
    [-1, -1, 0, 1, 1],
    [-2, -2, 0, 1, 2],
    [-3, -6, 0, 6, 3],
    [-2, -2, 0, 2, 2],
    [-1, -1, 0, 1, 1],
];

pub const PROPOSED_3_GX: [[i64; 3]; 3] = [[-1, 0, 1], [-4, 0, 4], [-1, 0, 1]];
pub const PROPOSED_3_GY: [[i64; 3]; 3] = [[-1, -4, -1], [0, 0, 0], [1, 4, 1]];

pub const PROPOSED_A_5_GX: [[i64; 5]; 5] = [
    [-25, -4, 0, 4, 25],
    [-64, -10, 0, 10, 64],
    [-100, -20, 0, 20, 100],
    [-64, -10, 0, 10, 64],
    [-25, -4, 0, 4, 25],
];
/// As printed; not the transpose of [`PROPOSED_A_5_GX`].
pub const PRINTED_PROPOSED_A_5_GY: [[i64; 5]; 5] = [
    [-25, -4, -100, -4, -25],
    [-64, -10, -20, -10, -64],
    [0, 0, 0, 0, 0],
    [64, 10, 20, 10, 64],
    [25, 4, 100, 4, 25],
];

pub const PROPOSED_B_5_GX: [[i64; 5]; 5] = [
    [-2, -1, 0, 1, 2],
    [-2, -1, 0, 1, 2],
    [-8, -4, 0, 4, 8],
    [-2, -1, 0, 1, 2],
    [-2, -1, 0, 1, 2],
];
pub const PROPOSED_B_5_GY: [[i64; 5]; 5] = [
    [-2, -2, -8, -2, -2],
    [-1, -1, -4, -1, -1],
    [0, 0, 0, 0, 0],
    [1, 1, 4, 1, 1],
    [2, 2, 8, 2, 2],
];

fn pair_from_gx<const N: usize>(gx: [[i64; N]; N]) -> KernelPair {
    KernelPair::from_gx(Kernel::from_rows(Axis::X, gx).expect("registry kernel")).expect("registry pair")
}

fn pair_from<const N: usize>(gx: [[i64; N]; N], gy: [[i64; N]; N]) -> KernelPair {
    KernelPair::new(
        Kernel::from_rows(Axis::X, gx).expect("registry kernel"),
        Kernel::from_rows(Axis::Y, gy).expect("registry kernel"),
    )
    .expect("registry pair")
}

/// Looks up the `(gx, gy)` pair for an operator at size 3 or 5.
pub fn registry_get(op: Operator, size: usize) -> Result<KernelPair> {
    Ok(match (op, size) {
        (Operator::Sobel, 3) => pair_from_gx(SOBEL_3_GX),
        (Operator::Prewitt, 3) => pair_from_gx(PREWITT_3_GX),
        (Operator::Scharr, 3) => pair_from_gx(SCHARR_3_GX),
        (Operator::ProposedA | Operator::ProposedB, 3) => pair_from(PROPOSED_3_GX, PROPOSED_3_GY),
        (Operator::Sobel, 5) => pair_from_gx(SOBEL_5_GX),
        (Operator::Prewitt, 5) => pair_from_gx(PREWITT_5_GX),
        (Operator::Scharr, 5) => pair_from_gx(SCHARR_5_GX),
        (Operator::ProposedA, 5) => pair_from_gx(PROPOSED_A_5_GX),
        (Operator::ProposedB, 5) => pair_from(PROPOSED_B_5_GX, PROPOSED_B_5_GY),
        (op, size) => {
            return Err(Error::UnsupportedSize {
                name: op.name().to_string(),
                size,
            })
        }
    })
}

/// Looks up by name, e.g. `("scharr", 5)`.
pub fn registry_get_named(name: &str, size: usize) -> Result<KernelPair> {
    registry_get(name.parse()?, size)
}

/// One distinct registry pair.
#[derive(Debug, Clone)]
pub struct RegistryEntry {
    pub operator: Operator,
    /// Other operator names that resolve to the same pair.
    pub aliases: Vec<Operator>,
    pub size: usize,
    pub pair: KernelPair,
}

/// The nine distinct pairs, 3x3 first. The shared proposed 3x3 pair is
/// listed once under `proposed_a` with `proposed_b` as alias.
pub fn registry_entries() -> Vec<RegistryEntry> {
    let mut out = Vec::with_capacity(9);
    for size in [3, 5] {
        for op in Operator::ALL {
            if size == 3 && op == Operator::ProposedB {
                continue;
            }
            let aliases = if size == 3 && op == Operator::ProposedA {
                vec![Operator::ProposedB]
            } else {
                Vec::new()
            };
            out.push(RegistryEntry {
                operator: op,
                aliases,
                size,
                pair: registry_get(op, size).expect("registry entry"),
            });
        }
    }
    out
}
