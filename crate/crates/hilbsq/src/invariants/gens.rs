//! First-stage invariants u_i, v_i, w_i, the nine second-stage invariants
//! x_1..x_9, and the ten relation polynomials for both the cyclic (type A)
//! and binary dihedral (type D) wreath quotients.

use crate::exact::poly::MPoly;
use crate::exact::rat::{pow2, qbin, qi};
use crate::exact::vars::{Registry, VarSet};
use crate::roots::AdeType;

use super::group::ab_registry;

pub struct GeneratorSet {
    pub vars_ab: Registry,
    /// u1, v1, w1, u2, v2, w2
    pub uvw: [MPoly; 6],
    /// x1..x9 expressed in a,b variables
    pub x_ab: [MPoly; 9],
}

pub fn x_registry() -> Registry {
    VarSet::new(vec!["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"])
}

/// First-stage invariants of the normal subgroup.
pub fn first_stage(typ: AdeType, n: usize) -> (Registry, [MPoly; 6]) {
    let vars = ab_registry();
    let a1 = MPoly::named(&vars, "a1");
    let a2 = MPoly::named(&vars, "a2");
    let b1 = MPoly::named(&vars, "b1");
    let b2 = MPoly::named(&vars, "b2");
    let uvw = match typ {
        AdeType::A => {
            let k = (n + 1) as u32;
            [
                a1.pow(k),
                &a1 * &a2,
                a2.pow(k),
                b1.pow(k),
                &b1 * &b2,
                b2.pow(k),
            ]
        }
        AdeType::D => {
            assert!(n >= 4);
            let m = (n - 2) as u32;
            let pair = |p: &MPoly, q: &MPoly| -> [MPoly; 3] {
                let u = &p.pow(2) * &q.pow(2);
                let v = &p.pow(2 * m) + &q.pow(2 * m);
                let w = &(&p.pow(2 * m + 1) * q) - &(p * &q.pow(2 * m + 1));
                [u, v, w]
            };
            let [u1, v1, w1] = pair(&a1, &a2);
            let [u2, v2, w2] = pair(&b1, &b2);
            [u1, v1, w1, u2, v2, w2]
        }
        AdeType::E => panic!("no explicit invariant generators for type E"),
    };
    (vars, uvw)
}

pub fn generator_set(typ: AdeType, n: usize) -> GeneratorSet {
    let (vars, uvw) = first_stage(typ, n);
    let [u1, v1, w1, u2, v2, w2] = uvw.clone();
    let du = &u1 - &u2;
    let dv = &v1 - &v2;
    let dw = &w1 - &w2;
    let x_ab = [
        &u1 + &u2,
        &v1 + &v2,
        &w1 + &w2,
        &du * &du,
        &dv * &dv,
        &dw * &dw,
        &du * &dv,
        &du * &dw,
        &dv * &dw,
    ];
    GeneratorSet { vars_ab: vars, uvw, x_ab }
}

/// The ten relation polynomials f1..f10 in C[x1..x9].
pub fn relations(typ: AdeType, n: usize) -> Vec<MPoly> {
    let xs = x_registry();
    let x = |i: usize| MPoly::named(&xs, &format!("x{i}"));
    let m = |p: MPoly, q: MPoly| -> MPoly { &p * &q };
    match typ {
        AdeType::A => {
            let nn = n as i64;
            // even/odd binomial sums in x2, x5
            let sum_even = |extra_x2: i64| -> MPoly {
                // sum_i C(n+1, 2i) x2^{n-2i+extra} x5^i
                let mut s = MPoly::zero(&xs);
                for i in 0..=((nn + 1) / 2) {
                    let c = qbin(nn + 1, 2 * i);
                    let e2 = nn - 2 * i + extra_x2;
                    if c == qi(0) || e2 < 0 {
                        continue;
                    }
                    let t = &MPoly::var_pow(&xs, 1, e2 as u32) * &MPoly::var_pow(&xs, 4, i as u32);
                    s = &s + &t.scale(&c);
                }
                s
            };
            let sum_odd = |x5_shift: i64, tail: MPoly| -> MPoly {
                // sum_i C(n+1, 2i+1) x2^{n-2i} x5^{i+shift} * tail
                let mut s = MPoly::zero(&xs);
                for i in 0..=((nn + 1) / 2) {
                    let c = qbin(nn + 1, 2 * i + 1);
                    let e2 = nn - 2 * i;
                    let e5 = i + x5_shift;
                    if c == qi(0) || e2 < 0 || e5 < 0 {
                        continue;
                    }
                    let t = &(&MPoly::var_pow(&xs, 1, e2 as u32)
                        * &MPoly::var_pow(&xs, 4, e5 as u32))
                        * &tail;
                    s = &s + &t.scale(&c);
                }
                s
            };
            let c = pow2(nn - 1);
            let f1 = &sum_even(1) - &(&(m(x(1), x(3))) + &x(8)).scale(&c);
            let f2 = &sum_odd(1, MPoly::one(&xs))
                - &(&m(x(1), x(9)) + &m(x(3), x(7))).scale(&c);
            let f3 = &m(x(5), x(8)) - &m(x(7), x(9));
            let f4 = &m(x(5), x(6)) - &m(x(9), x(9));
            let f5 = &m(x(4), x(5)) - &m(x(7), x(7));
            let f6 = &sum_odd(0, x(9)) - &(&m(x(1), x(6)) + &m(x(3), x(8))).scale(&c);
            let f7 = &sum_odd(0, x(7)) - &(&m(x(3), x(4)) + &m(x(1), x(8))).scale(&c);
            let f8 = &m(x(7), x(8)) - &m(x(4), x(9));
            let f9 = &m(x(6), x(7)) - &m(x(8), x(9));
            let f10 = &m(x(4), x(6)) - &m(x(8), x(8));
            vec![f1, f2, f3, f4, f5, f6, f7, f8, f9, f10]
        }
        AdeType::D => {
            let nn = n as i64;
            let c = pow2(nn - 6);
            // sums in x1, x4
            let sum_even = || -> MPoly {
                let mut s = MPoly::zero(&xs);
                for i in 0..=((nn - 1) / 2) {
                    let cb = qbin(nn - 1, 2 * i);
                    let e1 = nn - 2 * i - 1;
                    if cb == qi(0) || e1 < 0 {
                        continue;
                    }
                    let t = &MPoly::var_pow(&xs, 0, e1 as u32) * &MPoly::var_pow(&xs, 3, i as u32);
                    s = &s + &t.scale(&cb);
                }
                s
            };
            let sum_odd = |x4_shift: i64, tail: MPoly| -> MPoly {
                let mut s = MPoly::zero(&xs);
                for i in 0..=(nn / 2 - 1) {
                    let cb = qbin(nn - 1, 2 * i + 1);
                    let e1 = nn - 2 * i - 2;
                    let e4 = i + x4_shift;
                    if cb == qi(0) || e1 < 0 || e4 < 0 {
                        continue;
                    }
                    let t = &(&MPoly::var_pow(&xs, 0, e1 as u32)
                        * &MPoly::var_pow(&xs, 3, e4 as u32))
                        * &tail;
                    s = &s + &t.scale(&cb);
                }
                s
            };
            let f1 = {
                let tail = &(&(&(&(&m(x(1), m(x(2), x(2))).scale(&qi(-1))
                    + &m(x(3), x(3)).scale(&qi(2)))
                    - &m(x(1), x(5)))
                    + &x(6).scale(&qi(2)))
                    - &m(x(2), x(7)).scale(&qi(2)));
                &sum_even() + &tail.scale(&c)
            };
            let f2 = {
                let tail = &(&(&m(x(2), m(x(2), x(4))).scale(&qi(-1)) - &m(x(4), x(5)))
                    - &m(x(1), m(x(2), x(7))).scale(&qi(2)))
                    + &m(x(3), x(8)).scale(&qi(4));
                &sum_odd(1, MPoly::one(&xs)) + &tail.scale(&c)
            };
            let f3 = &m(x(4), x(5)) - &m(x(7), x(7));
            let f4 = &m(x(7), x(8)) - &m(x(4), x(9));
            let f5 = &m(x(4), x(6)) - &m(x(8), x(8));
            let f6 = {
                let tail = &(&(&m(x(1), m(x(2), x(5))).scale(&qi(-2))
                    - &m(x(2), m(x(2), x(7))))
                    - &m(x(5), x(7)))
                    + &m(x(3), x(9)).scale(&qi(4));
                &sum_odd(0, x(7)) + &tail.scale(&c)
            };
            let f7 = &m(x(5), x(8)) - &m(x(7), x(9));
            let f8 = {
                let tail = &(&(&m(x(3), x(6)).scale(&qi(4))
                    - &m(x(2), m(x(2), x(8))))
                    - &m(x(1), m(x(2), x(9))).scale(&qi(2)))
                    - &m(x(7), x(9));
                &sum_odd(0, x(8)) + &tail.scale(&c)
            };
            let f9 = &m(x(6), x(7)) - &m(x(8), x(9));
            let f10 = &m(x(5), x(6)) - &m(x(9), x(9));
            vec![f1, f2, f3, f4, f5, f6, f7, f8, f9, f10]
        }
        AdeType::E => panic!("no relation presentation computed for type E"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::compose;

    #[test]
    fn a1_f1_closed_form() {
        // (A,1): f1 = x2^2 + x5 - x1 x3 - x8 after evaluating binomials
        let fs = relations(AdeType::A, 1);
        let xs = x_registry();
        let x = |i: usize| MPoly::named(&xs, &format!("x{i}"));
        let expect = &(&(&x(2).pow(2) + &x(5)) - &(&x(1) * &x(3))) - &x(8);
        assert_eq!(fs[0], expect);
    }

    #[test]
    fn a_type_f5_shape() {
        // f5 = x4 x5 - x7^2 for every n
        let fs = relations(AdeType::A, 5);
        let xs = x_registry();
        let x = |i: usize| MPoly::named(&xs, &format!("x{i}"));
        assert_eq!(fs[4], &(&x(4) * &x(5)) - &(&x(7) * &x(7)));
        // D: f3 = x4 x5 - x7^2
        let fd = relations(AdeType::D, 5);
        assert_eq!(fd[2], &(&x(4) * &x(5)) - &(&x(7) * &x(7)));
    }

    #[test]
    fn a1_relations_vanish() {
        let gs = generator_set(AdeType::A, 1);
        for f in relations(AdeType::A, 1) {
            assert!(compose(&f, &gs.x_ab).is_zero());
        }
    }
}
