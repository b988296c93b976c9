use std::sync::Arc;

use parcomod::catalog::algebras::{group_algebra, kac, kac_coideal, kac_grouplike_candidates, kac_idempotents, kac_integral, sweedler};
use parcomod::catalog::group::FiniteGroup;
use parcomod::construction::*;
use parcomod::FieldElem;

fn s3_rows() -> Vec<GroupRow> {
    classify_group_simples(&FiniteGroup::s3(), 24).unwrap()
}

#[test]
fn s3_table() {
    let rows = s3_rows();
    let dims: Vec<usize> = rows.iter().map(|r| r.dim_i).collect();
    let idx: Vec<usize> = rows.iter().map(|r| r.index).collect();
    assert_eq!(dims, vec![1, 1, 1, 1, 1, 2, 1, 5]);
    assert_eq!(idx, vec![6, 3, 3, 3, 2, 2, 1, 1]);
    let total: usize = rows.iter().flat_map(|r| r.dims()).map(|d| d * d).sum();
    assert_eq!(total, 51);
}

#[test]
fn s3_representatives() {
    let g = FiniteGroup::s3();
    let h = group_algebra(&g, 24);
    let rows = s3_rows();
    let reps: Vec<String> = rows.iter().map(|r| h.format_element(&r.idempotent)).collect();
    assert_eq!(reps[0], "1");
    assert_eq!(reps[1], "1/2 + 1/2*a");
    assert_eq!(reps[5], "2/3 - 1/3*s - 1/3*s2");
    assert_eq!(reps[7], "5/6 - 1/6*s - 1/6*s2 - 1/6*a - 1/6*sa - 1/6*s2a");
    assert_eq!(rows[5].equivalent.len(), 2);
    assert_eq!(rows[7].equivalent.len(), 1);
}

#[test]
fn c2_three_simples() {
    let rows = classify_group_simples(&FiniteGroup::cyclic(2), 24).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].index, 2);
    assert_eq!(rows[1].equivalent.len(), 1);
    assert_eq!(rows.iter().map(|r| r.comodules.len()).sum::<usize>(), 3);
}

#[test]
fn kac_idempotents_subcentral() {
    let h = kac(24);
    for ci in kac_idempotents(&h).unwrap() {
        let r = is_subcentral(&h, &ci.element);
        assert!(r.subcentral, "{}: {:?}", ci.expr, r.failure);
    }
}

#[test]
fn kac_s1_quotient() {
    let h = Arc::new(kac(24));
    let ci = &kac_idempotents(&h).unwrap()[6];
    let c = Construction::new(h.clone(), &ci.element).unwrap();
    assert_eq!(c.idem.a, kac_coideal(&h, "S1").unwrap());
    assert_eq!(c.quotient.dim(), 2);
    assert_eq!(c.quotient.grouplikes.len(), 2);
}

#[test]
fn kac_coinvariants_dim5() {
    let h = Arc::new(kac(24));
    let ci = &kac_idempotents(&h).unwrap()[14];
    let c = Construction::new(h, &ci.element).unwrap();
    assert_eq!(c.coinvariants().unwrap().dim, 5);
}

#[test]
fn kac_integral_he() {
    let h = Arc::new(kac(24));
    let c = Construction::new(h.clone(), &kac_integral(&h)).unwrap();
    assert_eq!(c.he.dim(), 1);
}

#[test]
fn kac_table_total() {
    let h = Arc::new(kac(24));
    let idems = kac_idempotents(&h).unwrap();
    let extra = kac_grouplike_candidates(&h).unwrap();
    let hh = h.clone();
    let rows = classify_declared(h, &idems, &extra, &|name| kac_coideal(&hh, name).ok()).unwrap();
    let ae: Vec<usize> = rows.iter().map(|r| r.coinvariant_dim).collect();
    assert_eq!(ae, vec![1, 1, 1, 1, 1, 3, 1, 2, 3, 1, 2, 3, 1, 3, 5, 7]);
    let counts: Vec<Vec<(usize, usize)>> = rows.iter().map(|r| r.dim_counts()).collect();
    assert_eq!(counts[0], vec![(1, 4), (2, 1)]);
    assert_eq!(counts[3], vec![(1, 4)]);
    assert_eq!(counts[5], vec![(3, 2)]);
    assert_eq!(counts[10], vec![(2, 2)]);
    assert_eq!(counts[15], vec![(7, 1)]);
    let total: usize = rows.iter().map(|r| r.sum_of_squares()).sum();
    assert_eq!(total, 180);
}

#[test]
fn sweedler_subcentral() {
    let h = sweedler(24);
    let g = h.basis(1);
    let x = h.basis(2);
    let half = FieldElem::frac(1, 2);
    for gamma in [FieldElem::one(), FieldElem::from_int(-1), FieldElem::from_int(2)] {
        for sign in [1, -1] {
            let mut e = h.scale(&h.add(&h.one(), &h.scale(&g, &FieldElem::from_int(sign))), &half);
            e = h.add(&e, &h.scale(&x, &gamma));
            assert!(is_subcentral(&h, &e).subcentral);
        }
    }
    let bad = h.add(&h.scale(&h.add(&h.one(), &x), &half), &h.scale(&g, &FieldElem::frac(1, 3)));
    assert!(!is_subcentral(&h, &bad).subcentral);
}

#[test]
fn bridge_s3_all_subsets() {
    let g = FiniteGroup::s3();
    for x in 0u64..64 {
        if x & 1 == 0 {
            continue;
        }
        let k = left_stabilizer(&g, x);
        let nirr = parcomod::catalog::characters::irreps(&g.restrict(&k), 24).unwrap().len();
        for w in 0..nirr {
            let r = dual_group_bridge(&g, x, w, 24).unwrap();
            assert!(r.ok(), "{r:?}");
        }
    }
}

fn multiset(rows: &[GroupRow]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for d in rows.iter().flat_map(|r| r.dims()) {
        match out.iter_mut().find(|(x, _)| *x == d) {
            Some(p) => p.1 += 1,
            None => out.push((d, 1)),
        }
    }
    out.sort_unstable();
    out
}

#[test]
fn d8_and_q8_totals() {
    let d8 = classify_group_simples(&FiniteGroup::d8(), 24).unwrap();
    assert_eq!(multiset(&d8), vec![(1, 35), (2, 2), (3, 7), (5, 1), (7, 1)]);
    let q8 = classify_group_simples(&FiniteGroup::q8(), 24).unwrap();
    assert_eq!(multiset(&q8), vec![(1, 19), (2, 6), (3, 7), (5, 1), (7, 1)]);
}

#[test]
fn klein_total() {
    let rows = classify_group_simples(&FiniteGroup::klein(), 24).unwrap();
    let total: usize = rows.iter().flat_map(|r| r.dims()).map(|d| d * d).sum();
    assert!(rows.iter().all(|r| r.comodules.len() == r.index));
    assert_eq!(rows.iter().map(|r| r.index).sum::<usize>(), rows.iter().map(|r| r.comodules.len()).sum::<usize>());
    assert!(total > 0);
}

#[test]
fn s3_orbit_isomorphism_pattern() {
    let g = FiniteGroup::s3();
    let h = Arc::new(group_algebra(&g, 24));
    let rows = s3_rows();
    for (i, a) in rows.iter().enumerate() {
        for eq in &a.equivalent {
            let c = Construction::new(h.clone(), eq).unwrap();
            let k = g.subgroup_from_mask(g.generate(a.subgroup.iter().copied()));
            let shifted: Vec<_> = k.left_reps.iter().map(|&r| c.with_grouplike(&h.basis(r)).unwrap()).collect();
            for m in &shifted {
                assert!(a.comodules.iter().any(|n| m.iso_test(n).unwrap().is_iso()));
            }
        }
        for b in rows.iter().skip(i + 1) {
            for m in &a.comodules {
                for n in &b.comodules {
                    assert!(!m.iso_test(n).unwrap().is_iso());
                }
            }
        }
        for (x, m) in a.comodules.iter().enumerate() {
            for n in a.comodules.iter().skip(x + 1) {
                assert!(!m.iso_test(n).unwrap().is_iso());
            }
        }
    }
}

#[test]
fn he_dim_for_reflection() {
    let g = FiniteGroup::s3();
    let h = Arc::new(group_algebra(&g, 24));
    let half = FieldElem::frac(1, 2);
    let e = h.scale(&h.add(&h.one(), &h.basis(3)), &half);
    let c = Construction::new(h, &e).unwrap();
    assert_eq!(c.he.dim(), 3);
}

#[test]
fn trivial_idempotent() {
    let h = Arc::new(kac(24));
    let c = Construction::new(h.clone(), &h.one()).unwrap();
    assert_eq!(c.idem.dim(), 1);
    assert_eq!(c.quotient.dim(), 8);
    assert_eq!(c.coinvariants().unwrap().dim, 1);
}

#[test]
fn empty_x_without_identity() {
    assert!(dual_group_bridge(&FiniteGroup::s3(), 0b10, 0, 24).is_err());
}
