//! Wreath-product group actions on C[a1,a2,b1,b2] by signed-monomial
//! substitutions, with all root-of-unity scalars kept as exponent classes.

use std::collections::BTreeSet;

use crate::exact::cyc::CycScalar;
use crate::exact::poly::MPoly;
use crate::exact::rat::Q;
use crate::exact::vars::{Registry, VarSet};
use crate::roots::AdeType;

/// A monomial substitution: variable i maps to scalar * variable target[i].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub target: [usize; 4],
    pub exp: [u64; 4],
    pub modulus: u64,
}

impl GroupElement {
    pub fn identity(modulus: u64) -> Self {
        GroupElement { target: [0, 1, 2, 3], exp: [0; 4], modulus }
    }

    fn scalar(&self, i: usize) -> CycScalar {
        CycScalar { exp: self.exp[i], modulus: self.modulus }
    }

    /// self after other: (self * other)(v) = self(other(v)).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(self.modulus, other.modulus);
        let mut target = [0usize; 4];
        let mut exp = [0u64; 4];
        for v in 0..4 {
            // other: v -> s1 * w; self: w -> s2 * u
            let w = other.target[v];
            let u = self.target[w];
            let s = other.scalar(v).mul(self.scalar(w));
            target[v] = u;
            exp[v] = s.exp;
        }
        GroupElement { target, exp, modulus: self.modulus }
    }

    /// Apply as a substitution to a polynomial in the (a1,a2,b1,b2) registry.
    /// Fails with a witness term when a coefficient would leave Q.
    pub fn apply(&self, p: &MPoly) -> Result<MPoly, String> {
        assert_eq!(p.vars.len(), 4);
        let mut out = MPoly::zero(&p.vars);
        for (expo, c) in &p.terms {
            let mut e2 = vec![0u32; 4];
            let mut s = CycScalar::one(self.modulus);
            for v in 0..4 {
                if expo[v] > 0 {
                    e2[self.target[v]] += expo[v];
                    s = s.mul(self.scalar(v).pow(expo[v] as i64));
                }
            }
            match s.rational_value() {
                Some(sign) => {
                    let coeff = c.clone() * Q::from_integer(sign.into());
                    out = &out + &MPoly::monomial(&p.vars, e2, coeff);
                }
                None => {
                    return Err(format!(
                        "term with exponents {:?} maps to zeta^{} (mod {}), not rational",
                        expo, s.exp, s.modulus
                    ))
                }
            }
        }
        Ok(out)
    }
}

pub fn ab_registry() -> Registry {
    VarSet::new(vec!["a1", "a2", "b1", "b2"])
}

/// Generators of the full wreath group for the given type, as substitution maps.
fn generators(typ: AdeType, n: usize) -> (u64, Vec<GroupElement>) {
    match typ {
        AdeType::A => {
            let m = (n + 1) as u64;
            let za = GroupElement { target: [0, 1, 2, 3], exp: [1 % m, (m - 1) % m, 0, 0], modulus: m };
            let zb = GroupElement { target: [0, 1, 2, 3], exp: [0, 0, 1 % m, (m - 1) % m], modulus: m };
            let sw = GroupElement { target: [2, 3, 0, 1], exp: [0; 4], modulus: m };
            (m, vec![za, zb, sw])
        }
        AdeType::D => {
            assert!(n >= 4);
            let m = 2 * (n as u64 - 2); // zeta is a primitive 2(n-2)-th root
            let half = m / 2; // zeta^half = -1
            let za = GroupElement { target: [0, 1, 2, 3], exp: [1, m - 1, 0, 0], modulus: m };
            // a1 -> a2, a2 -> -a1
            let sa = GroupElement { target: [1, 0, 2, 3], exp: [0, half, 0, 0], modulus: m };
            let zb = GroupElement { target: [0, 1, 2, 3], exp: [0, 0, 1, m - 1], modulus: m };
            let sb = GroupElement { target: [0, 1, 3, 2], exp: [0, 0, 0, half], modulus: m };
            let sw = GroupElement { target: [2, 3, 0, 1], exp: [0; 4], modulus: m };
            (m, vec![za, sa, zb, sb, sw])
        }
        AdeType::E => panic!("E-type invariant rings are stored data, no group action here"),
    }
}

/// The complete group by closure from the generators.
pub fn group_elements(typ: AdeType, n: usize) -> Vec<GroupElement> {
    let (m, gens) = generators(typ, n);
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    seen.insert(GroupElement::identity(m));
    let mut frontier: Vec<GroupElement> = vec![GroupElement::identity(m)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in &gens {
                let c = h.compose(g);
                if seen.insert(c) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// Elements of the normal subgroup (the product of the two base-group copies,
/// i.e. no a/b swap).
pub fn normal_subgroup(typ: AdeType, n: usize) -> Vec<GroupElement> {
    group_elements(typ, n)
        .into_iter()
        .filter(|g| g.target[0] < 2)
        .collect()
}

pub fn expected_group_size(typ: AdeType, n: usize) -> usize {
    match typ {
        AdeType::A => 2 * (n + 1) * (n + 1),
        AdeType::D => 2 * (4 * (n - 2)) * (4 * (n - 2)),
        AdeType::E => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_sizes() {
        assert_eq!(group_elements(AdeType::A, 1).len(), 8);
        assert_eq!(group_elements(AdeType::A, 3).len(), 32);
        // BD_2 is the quaternion group of order 8; wreath doubles the square
        assert_eq!(group_elements(AdeType::D, 4).len(), 128);
        assert_eq!(normal_subgroup(AdeType::D, 4).len(), 64);
    }

    #[test]
    fn closed_under_composition() {
        let els = group_elements(AdeType::D, 4);
        let set: BTreeSet<_> = els.iter().cloned().collect();
        for g in &els {
            for h in els.iter().take(10) {
                assert!(set.contains(&g.compose(h)));
            }
        }
    }

    #[test]
    fn diagonal_fixes_v1() {
        // (A,3): the element (zeta, zeta^-1, 1, 1) fixes v1 = a1 a2
        let vars = ab_registry();
        let v1 = &MPoly::named(&vars, "a1") * &MPoly::named(&vars, "a2");
        let g = GroupElement { target: [0, 1, 2, 3], exp: [1, 3, 0, 0], modulus: 4 };
        assert_eq!(g.apply(&v1).unwrap(), v1);
    }
}
