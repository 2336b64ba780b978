use proptest::prelude::*;

use super::*;
use crate::Config;

fn datum(components: &[(&str, usize)], lattice: &str) -> RootDatum {
    RootDatum::new(Config::new(components, lattice)).unwrap()
}

fn parse(d: &RootDatum, s: &str) -> AffineElement {
    AffineElement::parse(d, s).unwrap()
}

/// Number of positive affine roots sent to negative ones, by direct count.
fn inverted_affine_roots(d: &RootDatum, x: &AffineElement) -> usize {
    let bound = x.mu.iter().map(|m| m.abs()).sum::<i64>() * 8 + 4;
    let mut count = 0;
    for alpha in 0..d.num_roots() {
        for k in -bound..=bound {
            let a = AffineRoot { alpha, k };
            if a.is_positive(d) && !x.act_affine_root(d, a).is_positive(d) {
                count += 1;
            }
        }
    }
    count
}

fn random_element(d: &RootDatum, w: usize, mu: &[i64]) -> AffineElement {
    let wg = d.weyl();
    AffineElement::new(
        wg.elements().nth(w % wg.order()).unwrap(),
        mu.iter().take(d.dim()).cloned().collect(),
    )
}

fn data() -> Vec<RootDatum> {
    vec![
        datum(&[("A", 2)], "gl"),
        datum(&[("B", 2)], "adjoint"),
        datum(&[("G", 2)], "sc"),
        RootDatum::new(Config::new(&[("A", 2)], "adjoint").with_perm(&[2, 1])).unwrap(),
    ]
}

#[test]
fn length_functional_examples() {
    let sl2 = datum(&[("A", 1)], "sc");
    let x = parse(&sl2, "t[1] s");
    assert_eq!(x, AffineElement::new(sl2.weyl().simple(0), vec![1]));
    assert_eq!(x.length_functional(&sl2, 0), 3);
    assert_eq!(x.length(&sl2), 3);
    let e = AffineElement::identity(&sl2);
    assert_eq!(e.length_functional(&sl2, 0), 0);
    assert_eq!(e.length(&sl2), 0);

    let a2 = datum(&[("A", 2)], "adjoint");
    let s0 = parse(&a2, "s0");
    let theta = a2.highest_roots()[0];
    assert_eq!(s0.w, a2.reflection(theta).unwrap());
    assert_eq!(s0.length_functional(&a2, theta), -1);
    assert_eq!(s0.length_functional(&a2, a2.simple_root(0)), 0);
    assert_eq!(s0.length_functional(&a2, a2.simple_root(1)), 0);
}

#[test]
fn gl3_simple_reflections_have_length_one() {
    let gl3 = datum(&[("A", 2)], "gl");
    for s in ["s0", "s1", "s2"] {
        assert_eq!(parse(&gl3, s).length(&gl3), 1, "{s}");
    }
    assert_eq!(parse(&gl3, "s0").mu, vec![-1, 0, 1]);
}

#[test]
fn length_counts_affine_roots() {
    for d in data() {
        for x in elements_up_to_length(&d, 4, 1) {
            assert_eq!(x.length(&d), inverted_affine_roots(&d, &x));
        }
    }
}

#[test]
fn lp_set_examples() {
    let a2 = datum(&[("A", 2)], "sc");
    let rho_v: Vec<i64> = vec![2, 2];
    let x = AffineElement::translation(&a2, &rho_v);
    assert_eq!(x.lp_set(&a2), vec![a2.weyl().identity()]);

    let gl3 = datum(&[("A", 2)], "gl");
    let w = gl3.weyl();
    let s1 = parse(&gl3, "s1");
    let mut lp = s1.lp_set(&gl3);
    lp.sort();
    let mut expect = vec![w.identity(), w.simple(1), w.from_word(&[1, 0])];
    expect.sort();
    assert_eq!(lp, expect);

    let sl2 = datum(&[("A", 1)], "sc");
    assert_eq!(parse(&sl2, "t[1] s").lp_set(&sl2), vec![sl2.weyl().identity()]);
}

#[test]
fn lp_set_matches_scan_of_w() {
    for d in data() {
        let wg = d.weyl();
        for x in elements_up_to_length(&d, 5, 1) {
            let mut bfs = x.lp_set(&d);
            bfs.sort();
            let scan: Vec<_> = wg.elements().filter(|&v| x.is_length_positive(&d, v)).collect();
            assert_eq!(bfs, scan);
            assert_eq!(x.is_shrunken(&d), scan.len() == 1);
        }
    }
}

#[test]
fn canonical_lp_examples() {
    let gl3 = datum(&[("A", 2)], "gl");
    let s0 = parse(&gl3, "s0");
    assert_eq!(s0.canonical_lp(&gl3), gl3.weyl().longest());
    let gl2 = datum(&[("A", 1)], "gl");
    let x = parse(&gl2, "t[1,0] s1");
    assert_eq!(x.canonical_lp(&gl2), gl2.weyl().identity());
    for d in data() {
        let wg = d.weyl();
        for x in elements_up_to_length(&d, 4, 1) {
            // characterized by <v^{-1} mu, alpha> >= Phi^+(-v alpha)
            let chars: Vec<_> = wg
                .elements()
                .filter(|&v| {
                    let m = wg.act(wg.inverse(v), &x.mu);
                    (0..d.num_pos()).all(|a| {
                        d.pairing(&m, a) >= i64::from(!d.is_positive(wg.act_root(v, a)))
                    })
                })
                .collect();
            assert_eq!(chars, vec![x.canonical_lp(&d)]);
            assert!(x.is_length_positive(&d, x.canonical_lp(&d)));
        }
    }
}

#[test]
fn adjustment_descent_examples() {
    let sl2 = datum(&[("A", 1)], "sc");
    let x = parse(&sl2, "t[1] s");
    let wg = sl2.weyl();
    let phi = |a: usize| x.length_functional(&sl2, a);
    assert_eq!(adjustment_descent(&sl2, &phi, wg.simple(0)).unwrap(), wg.identity());
    assert_eq!(adjustment_descent(&sl2, &phi, wg.identity()).unwrap(), wg.identity());
    for d in data() {
        let wg = d.weyl();
        for x in elements_up_to_length(&d, 3, 1) {
            let phi = |a: usize| x.length_functional(&d, a);
            for v in wg.elements() {
                let p = adjustment_descent(&d, &phi, v).unwrap();
                assert!(x.is_length_positive(&d, p));
            }
        }
    }
    let bad = |a: usize| if a == 0 { 5 } else { 0 };
    assert!(matches!(
        adjustment_descent(&sl2, &bad, wg.identity()),
        Err(Error::NotRootFunctional(_))
    ));
}

#[test]
fn sign_type_examples() {
    let sl2 = datum(&[("A", 1)], "sc");
    let e = AffineElement::identity(&sl2);
    assert!(!e.is_shrunken(&sl2));
    assert_eq!(e.sign_type(&sl2).to_string(), "0");
    assert!(parse(&sl2, "t[1] s").is_shrunken(&sl2));
    let gl3 = datum(&[("A", 2)], "gl");
    let s1 = parse(&gl3, "s1");
    assert!(!s1.is_shrunken(&gl3));
    assert_eq!(s1.length_functional(&gl3, gl3.simple_root(1)), 0);
    let st = s1.sign_type(&gl3);
    for a in 0..gl3.num_roots() {
        assert_eq!(st.sign(&gl3, a), s1.length_functional(&gl3, a).signum() as i8);
    }
}

#[test]
fn product_examples() {
    let sl2 = datum(&[("A", 1)], "sc");
    let x = parse(&sl2, "t[1] s");
    let e = AffineElement::identity(&sl2);
    assert!(x.length_additive(&sl2, &e));
    let xx = x.mul(&sl2, &x);
    // x^2 = s s eps^{s(alpha^vee) + alpha^vee} = e
    assert_eq!(xx, e);
    assert!(!x.length_additive(&sl2, &x));
    let gl3 = datum(&[("A", 2)], "gl");
    let (s1, s2) = (parse(&gl3, "s1"), parse(&gl3, "s2"));
    assert!(s1.length_additive(&gl3, &s2));
    let wg = gl3.weyl();
    let lp1 = s1.lp_set(&gl3);
    let mut inter: Vec<_> = s2
        .lp_set(&gl3)
        .into_iter()
        .filter(|v| lp1.contains(&wg.mul(s2.w, *v)))
        .collect();
    inter.sort();
    let mut lp12 = s1.mul(&gl3, &s2).lp_set(&gl3);
    lp12.sort();
    assert_eq!(lp12, inter);
}

#[test]
fn inverse_and_positive_length_formula() {
    for d in data() {
        let wg = d.weyl();
        for x in elements_up_to_length(&d, 4, 1) {
            let xi = x.inverse(&d);
            assert_eq!(x.mul(&d, &xi), AffineElement::identity(&d));
            assert_eq!(xi.length(&d), x.length(&d));
            for a in 0..d.num_roots() {
                let back = wg.act_root(wg.inverse(x.w), a);
                assert_eq!(xi.length_functional(&d, a), -x.length_functional(&d, back));
            }
            let mut lpi = xi.lp_set(&d);
            lpi.sort();
            let mut expect: Vec<_> = x
                .lp_set(&d)
                .into_iter()
                .map(|v| wg.mul(wg.mul(x.w, v), wg.longest()))
                .collect();
            expect.sort();
            assert_eq!(lpi, expect);
            let l = x.length(&d) as i64;
            for v in wg.elements() {
                let m = wg.act(wg.inverse(v), &x.mu);
                let bound = d.pairing_two_rho(&m) - wg.length(v) as i64
                    + wg.length(wg.mul(x.w, v)) as i64;
                assert!(l >= bound);
                assert_eq!(l == bound, x.is_length_positive(&d, v));
            }
        }
    }
}

#[test]
fn bruhat_examples() {
    let sl2 = datum(&[("A", 1)], "sc");
    let x = parse(&sl2, "s1 s0 s1");
    assert_eq!(x, parse(&sl2, "t[1] s"));
    let y = parse(&sl2, "s0 s1");
    assert_eq!(y, AffineElement::translation(&sl2, &[1]));
    assert!(bruhat_leq_affine(&sl2, &y, &x));
    assert!(bruhat_leq_affine(&sl2, &AffineElement::identity(&sl2), &x));
    let interval = lower_interval(&sl2, &x, 1000).unwrap();
    assert_eq!(interval.len(), 6);
    for s in ["e", "s0", "s1", "s0 s1", "s1 s0", "s1 s0 s1"] {
        assert!(interval.contains(&parse(&sl2, s)), "{s}");
    }
    assert!(matches!(lower_interval(&sl2, &x, 3), Err(Error::Budget(_))));
}

#[test]
fn bruhat_matches_interval_membership() {
    for d in [datum(&[("A", 2)], "gl"), datum(&[("B", 2)], "sc"), datum(&[("A", 1)], "adjoint")] {
        let elems = elements_up_to_length(&d, 4, 1);
        for x in &elems {
            let below: HashSet<_> = lower_interval(&d, x, 100_000).unwrap().into_iter().collect();
            for y in &elems {
                assert_eq!(bruhat_leq_affine(&d, y, x), below.contains(y));
            }
        }
    }
}

#[test]
fn omega_elements_have_length_zero() {
    let a2 = datum(&[("A", 2)], "adjoint");
    let om = omega_elements(&a2, 1);
    assert_eq!(om.len(), 3);
    let gl3 = datum(&[("A", 2)], "gl");
    let om = omega_elements(&gl3, 1);
    assert_eq!(om.len(), 3);
    for d in [a2, gl3] {
        let om = omega_elements(&d, 1);
        for t in &om {
            assert_eq!(t.length(&d), 0);
            assert!(t.is_fundamental(&d));
        }
        let classes: HashSet<_> = om.iter().map(|t| t.omega_class(&d)).collect();
        assert_eq!(classes.len(), om.len());
    }
}

#[test]
fn enumeration_counts() {
    // affine A2 has 1, 3, 6, 9, 12 elements of length 0..4
    let a2 = datum(&[("A", 2)], "sc");
    let elems = elements_up_to_length(&a2, 4, 1);
    assert_eq!(elems.len(), 1 + 3 + 6 + 9 + 12);
    let set: HashSet<_> = elems.iter().collect();
    assert_eq!(set.len(), elems.len());
}

#[test]
fn eta_sigma_examples() {
    let gl3 = datum(&[("A", 2)], "gl");
    let wg = gl3.weyl();
    assert_eq!(wg.length(parse(&gl3, "s1").eta_sigma(&gl3)), 1);
    assert_eq!(wg.length(parse(&gl3, "s2").eta_sigma(&gl3)), 1);
    let s0 = parse(&gl3, "s0");
    assert_eq!(wg.length(s0.eta_sigma(&gl3)), 3);
    assert_eq!(s0.eta_sigma(&gl3), gl3.reflection(gl3.highest_roots()[0]).unwrap());
}

#[test]
fn fundamental_examples() {
    let gl3 = datum(&[("A", 2)], "gl");
    assert!(AffineElement::identity(&gl3).is_fundamental(&gl3));
    assert!(AffineElement::translation(&gl3, &[2, 1, 0]).is_fundamental(&gl3));
    assert!(!parse(&gl3, "s0").is_fundamental(&gl3));
    assert!(parse(&gl3, "s0").fundamental_witness(&gl3).is_none());
    assert!(!parse(&gl3, "s0").twisted_powers_additive(&gl3, 2));
}

#[test]
fn parse_errors() {
    let gl3 = datum(&[("A", 2)], "gl");
    assert!(AffineElement::parse(&gl3, "t[1,0] s1").is_err());
    assert!(AffineElement::parse(&gl3, "s4").is_err());
    assert!(AffineElement::parse(&gl3, "t[1,0,0 s1").is_err());
    let x = parse(&gl3, "w: s1 s2 ; mu: 1,0,-1");
    assert_eq!(parse(&gl3, &x.format(&gl3)), x);
    let a1a1 = datum(&[("A", 1), ("A", 1)], "sc");
    assert!(AffineElement::parse(&a1a1, "s0").is_err());
    assert_eq!(parse(&a1a1, "s0:2").length(&a1a1), 1);
}

proptest! {
    #[test]
    fn root_functional_axioms(k in 0usize..4, w in 0usize..100, mu in prop::collection::vec(-4i64..=4, 3)) {
        let d = &data()[k];
        let x = random_element(d, w, &mu);
        for a in 0..d.num_roots() {
            prop_assert_eq!(x.length_functional(d, a) + x.length_functional(d, d.negate(a)), 0);
            for b in 0..d.num_roots() {
                if let Some(s) = root_sum(d, a, b) {
                    let defect = x.length_functional(d, s) - x.length_functional(d, a) - x.length_functional(d, b);
                    prop_assert!(defect.abs() <= 1);
                }
            }
        }
    }

    #[test]
    fn product_length_functional(k in 0usize..4, w1 in 0usize..100, w2 in 0usize..100,
                                 m1 in prop::collection::vec(-3i64..=3, 3),
                                 m2 in prop::collection::vec(-3i64..=3, 3)) {
        let d = &data()[k];
        let x = random_element(d, w1, &m1);
        let y = random_element(d, w2, &m2);
        let xy = x.mul(d, &y);
        for a in 0..d.num_roots() {
            let lhs = xy.length_functional(d, a);
            let rhs = x.length_functional(d, d.weyl().act_root(y.w, a)) + y.length_functional(d, a);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
