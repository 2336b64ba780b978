use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMat;

/// Irreducible Cartan type, Bourbaki numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => CartanType::A,
            "B" => CartanType::B,
            "C" => CartanType::C,
            "D" => CartanType::D,
            "E" => CartanType::E,
            "F" => CartanType::F,
            "G" => CartanType::G,
            other => {
                return Err(Error::InvalidConfig {
                    field: "components.type".into(),
                    message: format!("unknown Cartan type `{other}`"),
                })
            }
        })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E => "E",
            CartanType::F => "F",
            CartanType::G => "G",
        };
        f.write_str(c)
    }
}

/// An irreducible component occupying simple roots `offset..offset + rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub kind: CartanType,
    pub rank: usize,
    pub offset: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

/// Cartan matrix with `C[i][j] = <alpha_i^vee, alpha_j>`.
pub fn cartan_matrix(kind: CartanType, rank: usize) -> Result<IntMat> {
    let bad = |msg: &str| Error::InvalidDatum(format!("{kind}{rank}: {msg}"));
    let valid = match kind {
        CartanType::A => rank >= 1,
        CartanType::B | CartanType::C => rank >= 2,
        CartanType::D => rank >= 4,
        CartanType::E => (6..=8).contains(&rank),
        CartanType::F => rank == 4,
        CartanType::G => rank == 2,
    };
    if !valid {
        return Err(bad("unsupported rank"));
    }
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match kind {
        CartanType::A | CartanType::B | CartanType::C | CartanType::F => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        CartanType::E => {
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(1, 3);
            for i in 4..n - 1 {
                link(i, i + 1);
            }
        }
        CartanType::G => {}
    }
    match kind {
        CartanType::B => {
            c[n - 1][n - 2] = -2;
        }
        CartanType::C => {
            c[n - 2][n - 1] = -2;
        }
        CartanType::F => {
            c[2][1] = -2;
        }
        CartanType::G => {
            c[0][1] = -3;
            c[1][0] = -1;
        }
        _ => {}
    }
    Ok(c)
}

/// Classical order of the Weyl group of an irreducible type.
pub fn weyl_order(kind: CartanType, rank: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match kind {
        CartanType::A => fact(rank + 1),
        CartanType::B | CartanType::C => (1u128 << rank) * fact(rank),
        CartanType::D => (1u128 << (rank - 1)) * fact(rank),
        CartanType::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        CartanType::F => 1152,
        CartanType::G => 12,
    }
}
