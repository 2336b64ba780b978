use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistSpec {
    /// Simple reflections, 1-based.
    pub sigma1_word: Vec<usize>,
    /// Coordinates in the coweight lattice basis.
    pub mu_sigma: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobeniusSpec {
    /// Image of each simple root, 1-based; identity when absent.
    #[serde(default)]
    pub perm: Option<Vec<usize>>,
    #[serde(default)]
    pub twist: Option<TwistSpec>,
}

/// Full configuration: the root datum plus computation budgets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub components: Vec<ComponentSpec>,
    #[serde(default = "default_lattice")]
    pub lattice: String,
    #[serde(default)]
    pub lattice_basis: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub frobenius: Option<FrobeniusSpec>,
    #[serde(default = "default_weyl_cap")]
    pub max_weyl_order: usize,
    #[serde(default = "default_interval")]
    pub max_interval_size: usize,
    #[serde(default = "default_qbg_cap")]
    pub max_qbg_order: usize,
    #[serde(default = "default_length_cap")]
    pub length_cap: usize,
    /// Range `-b..=b` for the free coordinates of Omega components in scans.
    #[serde(default = "default_box")]
    pub coweight_box: i64,
}

fn default_lattice() -> String {
    "sc".into()
}
fn default_weyl_cap() -> usize {
    51_840
}
fn default_interval() -> usize {
    2_000_000
}
fn default_qbg_cap() -> usize {
    1_152
}
fn default_length_cap() -> usize {
    4
}
fn default_box() -> i64 {
    1
}

impl Config {
    pub fn new(components: &[(&str, usize)], lattice: &str) -> Config {
        Config {
            components: components
                .iter()
                .map(|&(k, r)| ComponentSpec {
                    kind: k.into(),
                    rank: r,
                })
                .collect(),
            lattice: lattice.into(),
            lattice_basis: None,
            frobenius: None,
            max_weyl_order: default_weyl_cap(),
            max_interval_size: default_interval(),
            max_qbg_order: default_qbg_cap(),
            length_cap: default_length_cap(),
            coweight_box: default_box(),
        }
    }

    pub fn with_perm(mut self, perm: &[usize]) -> Config {
        self.frobenius.get_or_insert_with(Default::default).perm = Some(perm.to_vec());
        self
    }

    pub fn with_twist(mut self, sigma1_word: &[usize], mu_sigma: &[i64]) -> Config {
        self.frobenius.get_or_insert_with(Default::default).twist = Some(TwistSpec {
            sigma1_word: sigma1_word.to_vec(),
            mu_sigma: mu_sigma.to_vec(),
        });
        self
    }

    pub fn from_json(text: &str) -> Result<Config> {
        serde_json::from_str(text).map_err(|e| Error::InvalidConfig {
            field: "json".into(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}
