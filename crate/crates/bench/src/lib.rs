//! Shared inputs for the benchmarks.

use cordial_core::affine::elements_up_to_length;
use cordial_core::{AffineElement, Config, RootDatum};

/// Named data covering each rank-2 type, one rank-3 type and a twisted Frobenius.
pub fn data() -> Vec<(&'static str, RootDatum)> {
    let d = |c: &[(&str, usize)], l: &str| RootDatum::new(Config::new(c, l)).expect("valid preset");
    vec![
        ("A2-adjoint", d(&[("A", 2)], "adjoint")),
        ("GL3", d(&[("A", 2)], "gl")),
        ("B2", d(&[("B", 2)], "sc")),
        ("G2", d(&[("G", 2)], "sc")),
        ("A3", d(&[("A", 3)], "sc")),
        (
            "A2-flip",
            RootDatum::new(Config::new(&[("A", 2)], "adjoint").with_perm(&[2, 1])).expect("valid preset"),
        ),
    ]
}

/// Elements of exactly the given length in the first Omega component.
pub fn elements_of_length(d: &RootDatum, len: usize) -> Vec<AffineElement> {
    elements_up_to_length(d, len, 0)
        .into_iter()
        .filter(|x| x.length(d) == len)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_build_and_have_elements() {
        for (name, d) in data() {
            let xs = elements_of_length(&d, 3);
            assert!(!xs.is_empty(), "{name}");
            assert!(xs.iter().all(|x| x.length(&d) == 3));
        }
    }
}
