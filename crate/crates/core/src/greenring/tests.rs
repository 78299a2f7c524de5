use super::*;
use proptest::prelude::*;

fn ord(n: u32) -> Order {
    Order::new(n).unwrap()
}

fn m(l: u32, r: i64, n: u32) -> IndecLabel {
    IndecLabel::new(l, r, ord(n)).unwrap()
}

fn el(items: &[(u32, i64, u64)], n: u32) -> GreenElement {
    GreenElement::from_counts(items.iter().map(|&(l, r, k)| (m(l, r, n), k)))
}

#[test]
fn pj_translation() {
    assert_eq!(label_from_pj(2, 0, ord(2)).unwrap(), m(2, 1, 2));
    assert_eq!(label_from_pj(1, 1, ord(2)).unwrap(), m(1, 1, 2));
    assert_eq!(label_from_pj(3, 2, ord(3)).unwrap(), m(1, 2, 3));
    assert!(label_from_pj(0, 0, ord(3)).is_err());
    assert!(label_from_pj(4, 0, ord(3)).is_err());
    assert!(label_from_pj(1, 3, ord(3)).is_err());
    for n in 2..=8 {
        for l in IndecLabel::all(ord(n)) {
            let (i, r) = label_to_pj(l, ord(n)).unwrap();
            assert!((1..=n).contains(&i));
            assert_eq!(label_from_pj(i, r, ord(n)).unwrap(), l);
        }
    }
}

#[test]
fn label_parsing_and_validation() {
    let o = ord(3);
    assert_eq!(IndecLabel::parse("M(2,1)", o).unwrap(), m(2, 1, 3));
    assert_eq!(IndecLabel::parse(" M( 2 , -1 ) ", o).unwrap(), m(2, 2, 3));
    assert_eq!(IndecLabel::parse("M(1,7)", o).unwrap(), m(1, 1, 3));
    assert!(IndecLabel::parse("M(4,0)", o).is_err());
    assert!(IndecLabel::parse("M(0,0)", o).is_err());
    assert!(IndecLabel::parse("N(1,0)", o).is_err());
    assert!(IndecLabel::parse("M(1;0)", o).is_err());
    assert!(tensor_labels(m(3, 0, 3), m(1, 0, 3), ord(2)).is_err());
}

#[test]
fn simple_factor_shifts() {
    for n in 2..=6 {
        for l in IndecLabel::all(ord(n)) {
            for rp in 0..n as i64 {
                let out = tensor_labels(l, m(1, rp, n), ord(n)).unwrap();
                assert_eq!(
                    out,
                    GreenElement::from_label(m(l.len(), l.shift() as i64 + rp, n))
                );
            }
        }
    }
}

#[test]
fn sweedler_projective_square() {
    let out = tensor_labels(m(2, 1, 2), m(2, 1, 2), ord(2)).unwrap();
    assert_eq!(out, el(&[(2, 1, 1), (2, 0, 1)], 2));
    assert_eq!(out.to_string(), "M(2,0) + M(2,1)");
}

#[test]
fn two_dimensional_square_at_order_three() {
    let out = tensor_labels(m(2, 0, 3), m(2, 0, 3), ord(3)).unwrap();
    assert_eq!(out, el(&[(1, 2, 1), (3, 0, 1)], 3));
    assert_eq!(
        tensor_rule(m(2, 0, 3), m(2, 0, 3), ord(3)).unwrap(),
        TensorRule::Overflow
    );
}

#[test]
fn ladder_and_overflow_agree_at_the_boundary() {
    // At ℓ + ℓ' = n the overflow clause contributes no projectives and its ladder
    // has n - ℓ1 = ℓ0 rungs, the same as the ladder clause.
    let n = 7;
    let o = ord(n);
    for l in 2..n - 1 {
        let lp = n - l;
        for (r, rp) in [(0, 0), (3, 5), (6, 1)] {
            let x = m(l, r, n);
            let y = m(lp, rp, n);
            let (l0, l1) = (l.min(lp) as i64, l.max(lp) as i64);
            let mut overflow = GreenElement::new();
            for i in 1..=(n as i64 - l1) {
                overflow.add_label(m((l1 - l0 - 1 + 2 * i) as u32, r + rp + i - l0, n), 1);
            }
            assert_eq!(tensor_labels(x, y, o).unwrap(), overflow);
        }
    }
}

#[test]
fn bilinearity_and_unit() {
    let o = ord(4);
    let l = m(3, 2, 4);
    let u = el(&[(3, 2, 2)], 4);
    assert_eq!(tensor(&u, &GreenElement::unit(), o).unwrap(), u);
    assert_eq!(
        tensor(&u, &el(&[(1, 0, 3)], 4), o).unwrap(),
        GreenElement::from_counts([(l, 6)])
    );
    let q = quotient_class(o);
    assert_eq!(tensor(&GreenElement::unit(), &q, o).unwrap(), q);
}

#[test]
fn indec_and_similarity() {
    let l = m(2, 1, 3);
    assert_eq!(
        indec_set(&GreenElement::from_counts([(l, 5)])),
        [l].into_iter().collect()
    );
    assert!(indec_set(&GreenElement::new()).is_empty());
    let q2 = quotient_class(ord(2));
    assert_eq!(
        indec_set(&q2),
        [m(2, 1, 2), m(1, 0, 2), m(1, 1, 2)].into_iter().collect()
    );
    assert!(similar(&q2, &q2));
    assert!(similar(
        &GreenElement::from_counts([(l, 1)]),
        &GreenElement::from_counts([(l, 7)])
    ));
    let qq = tensor(&q2, &q2, ord(2)).unwrap();
    assert!(!similar(&q2, &qq));
    assert_eq!(qq.num_labels(), 4);
}

#[test]
fn quotient_class_shapes() {
    assert_eq!(
        quotient_class(ord(2)),
        el(&[(1, 0, 1), (2, 1, 1), (1, 1, 1)], 2)
    );
    assert_eq!(
        quotient_class(ord(3)),
        el(&[(1, 0, 1), (2, 1, 1), (3, 2, 1), (1, 2, 1), (2, 2, 1)], 3)
    );
    for n in 2..=12 {
        let q = quotient_class(ord(n));
        assert_eq!(q.dim(), (n * n) as u64);
        assert_eq!(q.num_labels(), 2 * n as usize - 1);
        assert!(q.iter().all(|(_, k)| k == 1));
    }
}

#[test]
fn depth_values() {
    assert_eq!(depth(&GreenElement::unit(), ord(3)).unwrap(), 0);
    assert!(depth(&GreenElement::new(), ord(3)).is_err());
    for n in 2..=8 {
        assert_eq!(depth(&quotient_class(ord(n)), ord(n)).unwrap(), 2, "n = {n}");
    }
    // A projective generates every projective but nothing else.
    let o = ord(4);
    let proj = GreenElement::from_label(m(4, 0, 4));
    let chain = depth_chain(&proj, 3, o).unwrap();
    assert_eq!(chain[1].len(), 1);
    assert_eq!(chain[2].len(), 4);
    assert_eq!(depth(&proj, o).unwrap(), 2);
}

#[test]
fn u_polynomials() {
    let o = ord(5);
    assert_eq!(green_u_polynomial(1, o).unwrap(), GreenElement::unit());
    assert_eq!(green_u_polynomial(2, o).unwrap(), generator_x());
    assert!(green_u_polynomial(0, o).is_err());
    assert!(green_u_polynomial(6, o).is_err());
    for n in 2..=9 {
        for l in 1..=n {
            assert_eq!(
                green_u_polynomial(l, ord(n)).unwrap(),
                GreenElement::from_label(m(l, 0, n)),
                "u_{l} at n = {n}"
            );
        }
    }
}

#[test]
fn shifted_u_polynomials_give_every_label() {
    // [M(ℓ, r)] = a^{n-r} u_ℓ
    for n in 2..=6 {
        let o = ord(n);
        let a = generator_a(o);
        for l in IndecLabel::all(o) {
            let lhs = tensor(
                &power(&a, n - l.shift(), o).unwrap(),
                &green_u_polynomial(l.len(), o).unwrap(),
                o,
            )
            .unwrap();
            assert_eq!(lhs, GreenElement::from_label(l));
        }
    }
}

#[test]
fn corollary_expansion() {
    for n in 2..=8 {
        assert!(verify_corollary_q(ord(n)).unwrap(), "n = {n}");
    }
}

#[test]
fn commutativity_and_dimension() {
    for n in 2..=8 {
        let o = ord(n);
        let labels = IndecLabel::all(o);
        for &x in &labels {
            for &y in &labels {
                let xy = tensor_labels(x, y, o).unwrap();
                assert_eq!(xy, tensor_labels(y, x, o).unwrap(), "{x} {y} n={n}");
                assert_eq!(xy.dim(), (x.len() * y.len()) as u64);
                for (l, _) in xy.iter() {
                    l.validate(o).unwrap();
                }
            }
            assert_eq!(
                tensor_labels(x, IndecLabel::unit(), o).unwrap(),
                GreenElement::from_label(x)
            );
            assert_eq!(
                tensor_labels(IndecLabel::unit(), x, o).unwrap(),
                GreenElement::from_label(x)
            );
        }
    }
}

#[test]
fn every_rule_is_exercised() {
    // The ladder needs two factors of length ≥ 2 fitting in n, so n ≥ 4.
    for n in 2..=6 {
        let o = ord(n);
        let labels = IndecLabel::all(o);
        let mut seen = std::collections::BTreeSet::new();
        for &x in &labels {
            for &y in &labels {
                seen.insert(tensor_rule(x, y, o).unwrap());
            }
        }
        assert_eq!(seen.contains(&TensorRule::Ladder), n >= 4, "n = {n}");
        assert_eq!(seen.contains(&TensorRule::Overflow), n >= 3, "n = {n}");
        assert!(seen.contains(&TensorRule::Simple) && seen.contains(&TensorRule::Projective));
    }
}

#[test]
fn quotient_square_has_every_label() {
    for n in 2..=8 {
        let o = ord(n);
        let q = quotient_class(o);
        let qq = tensor(&q, &q, o).unwrap();
        assert_eq!(qq.num_labels(), (n * n) as usize, "n = {n}");
        assert_eq!(qq.dim(), (n as u64).pow(4));
    }
}

#[test]
fn quotient_powers_grow_monotonically() {
    for n in 2..=4 {
        let o = ord(n);
        let q = quotient_class(o);
        let mut prev = q.clone();
        for _ in 1..=4 {
            let next = tensor(&prev, &q, o).unwrap();
            assert!(indec_set(&prev).is_subset(&indec_set(&next)));
            prev = next;
        }
    }
}

#[test]
fn depth_stabilisation_persists() {
    for n in 2..=6 {
        let o = ord(n);
        for seed in IndecLabel::all(o).into_iter().step_by(3) {
            let u = GreenElement::from_label(seed);
            let d = depth(&u, o).unwrap();
            let chain = depth_chain(&u, d + 4, o).unwrap();
            for k in d..=d + 3 {
                assert_eq!(chain[k as usize], chain[d as usize], "{seed} n={n}");
            }
        }
        let q = quotient_class(o);
        let chain = depth_chain(&q, 6, o).unwrap();
        assert!(chain[1].len() < chain[2].len());
        for k in 2..=5 {
            assert_eq!(chain[k], chain[2]);
        }
    }
}

#[test]
fn p_m_matches_depth_chain() {
    let o = ord(3);
    let q = quotient_class(o);
    let chain = depth_chain(&q, 3, o).unwrap();
    for k in 0..=3 {
        assert_eq!(indec_set(&p_m(&q, k, o).unwrap()), chain[k as usize]);
    }
}

#[test]
fn json_form() {
    let e = el(&[(2, 1, 1), (1, 0, 2)], 2);
    let text = serde_json::to_string(&e).unwrap();
    assert_eq!(
        text,
        r#"[{"l":1,"r":0,"mult":2},{"l":2,"r":1,"mult":1}]"#
    );
    assert_eq!(e.to_string(), "2*M(1,0) + M(2,1)");
    let back: GreenElement = serde_json::from_str(&text).unwrap();
    assert_eq!(back, e);
    assert_eq!(GreenElement::new().to_string(), "0");
}

fn label_strategy(n: u32) -> impl Strategy<Value = IndecLabel> {
    (1..=n, 0..n).prop_map(|(l, r)| IndecLabel::from_parts(l, r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity((n, x, y, z) in (2u32..=6).prop_flat_map(|n| (Just(n), label_strategy(n), label_strategy(n), label_strategy(n)))) {
        let o = ord(n);
        let ex = GreenElement::from_label(x);
        let ey = GreenElement::from_label(y);
        let ez = GreenElement::from_label(z);
        let left = tensor(&tensor(&ex, &ey, o).unwrap(), &ez, o).unwrap();
        let right = tensor(&ex, &tensor(&ey, &ez, o).unwrap(), o).unwrap();
        prop_assert_eq!(left, right);
    }
}
