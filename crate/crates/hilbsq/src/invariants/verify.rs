//! Invariance and relation-vanishing suites.

use crate::exact::poly::compose;
use crate::exact::rat::qi;
use crate::exact::MPoly;
use crate::report::VerificationReport;
use crate::roots::AdeType;

use super::gens::{generator_set, relations};
use super::group::{expected_group_size, group_elements, normal_subgroup};

/// Every u_i, v_i, w_i is fixed by the normal subgroup; every x_j by all of G.
pub fn verify_invariance(typ: AdeType, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("invariance")
        .param("type", typ)
        .param("n", n);
    let gs = generator_set(typ, n);
    let group = group_elements(typ, n);
    rep.check(
        "group-order",
        group.len() == expected_group_size(typ, n),
        format!("closure gives {} elements, formula {}", group.len(), expected_group_size(typ, n)),
    );
    if typ == AdeType::D {
        rep.note(
            "bd-order-note",
            format!(
                "binary dihedral base group has generated order {} = 4(n-2); the printed order 4(n-4) fails at n=4",
                4 * (n - 2)
            ),
        );
    }
    let normal = normal_subgroup(typ, n);
    let names = ["u1", "v1", "w1", "u2", "v2", "w2"];
    for (p, name) in gs.uvw.iter().zip(names) {
        let mut ok = true;
        for g in &normal {
            match g.apply(p) {
                Ok(q) if q == *p => {}
                Ok(_) | Err(_) => {
                    rep.fail(
                        format!("normal-fixes-{name}"),
                        format!("violated by element {:?}", g),
                    );
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            rep.pass(format!("normal-fixes-{name}"));
        }
    }
    for (j, p) in gs.x_ab.iter().enumerate() {
        let mut ok = true;
        for g in &group {
            match g.apply(p) {
                Ok(q) if q == *p => {}
                Ok(q) => {
                    rep.fail(
                        format!("G-fixes-x{}", j + 1),
                        format!("element {:?} sends it to {}", g, q.render()),
                    );
                    ok = false;
                    break;
                }
                Err(w) => {
                    rep.fail(format!("G-fixes-x{}", j + 1), w);
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            rep.pass(format!("G-fixes-x{}", j + 1));
        }
    }
    rep
}

/// All ten relations vanish identically under x_i -> x_i(a, b); for type D
/// additionally the surface relation u(v^2 - 4u^{n-2}) - w^2 = 0.
pub fn verify_relations(typ: AdeType, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("relations")
        .param("type", typ)
        .param("n", n);
    let gs = generator_set(typ, n);
    for (k, f) in relations(typ, n).iter().enumerate() {
        let sub = compose(f, &gs.x_ab);
        rep.check(
            format!("f{}-vanishes", k + 1),
            sub.is_zero(),
            format!("substituted polynomial: {}", sub.render()),
        );
    }
    if typ == AdeType::D {
        for (label, off) in [("1", 0usize), ("2", 3usize)] {
            let u = &gs.uvw[off];
            let v = &gs.uvw[off + 1];
            let w = &gs.uvw[off + 2];
            let rel = &(u * &(&v.pow(2) - &u.pow((n - 2) as u32).scale(&qi(4)))) - &w.pow(2);
            rep.check(
                format!("surface-relation-{label}"),
                rel.is_zero(),
                format!("u(v^2-4u^(n-2))-w^2 = {}", rel.render()),
            );
        }
    }
    rep
}

/// Explicit random combinations sum q_i f_i stay in the ideal (sanity of the
/// Groebner route used elsewhere).
pub fn relation_combination(typ: AdeType, n: usize, coeffs: &[i64]) -> MPoly {
    let fs = relations(typ, n);
    let vars = fs[0].vars.clone();
    let mut acc = MPoly::zero(&vars);
    for (f, &c) in fs.iter().zip(coeffs) {
        acc = &acc + &f.scale(&qi(c));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_small_relations_vanish() {
        for n in 1..=3 {
            assert!(verify_relations(AdeType::A, n).is_pass(), "A{n}");
        }
    }

    #[test]
    fn d4_relations_vanish() {
        assert!(verify_relations(AdeType::D, 4).is_pass());
    }

    #[test]
    fn d5_w1_swap_example() {
        // w1 = a1^7 a2 - a1 a2^7 is fixed under (a1,a2) -> (a2,-a1)
        let gs = generator_set(AdeType::D, 5);
        let w1 = &gs.uvw[2];
        use super::super::group::GroupElement;
        let m = 2 * (5u64 - 2);
        let g = GroupElement { target: [1, 0, 2, 3], exp: [0, m / 2, 0, 0], modulus: m };
        assert_eq!(g.apply(w1).unwrap(), *w1);
    }

    #[test]
    fn a2_invariance() {
        assert!(verify_invariance(AdeType::A, 2).is_pass());
    }
}
