//! Sparse multivariate polynomials over exact rationals.
//!
//! Exponent vectors are dense per registry (registries stay small here).
//! Terms live in a `BTreeMap` keyed by the exponent vector, so every
//! polynomial has one canonical representation and deterministic iteration.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::traits::Zero;

use super::order::MonomialOrder;
use super::rat::{render_q, Q};
use super::vars::Registry;

pub type Expo = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    pub vars: Registry,
    pub terms: BTreeMap<Expo, Q>,
}

impl MPoly {
    pub fn zero(vars: &Registry) -> Self {
        MPoly { vars: Arc::clone(vars), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Registry, c: Q) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Registry) -> Self {
        Self::constant(vars, Q::from_integer(1.into()))
    }

    pub fn var(vars: &Registry, i: usize) -> Self {
        Self::var_pow(vars, i, 1)
    }

    pub fn var_pow(vars: &Registry, i: usize, e: u32) -> Self {
        assert!(i < vars.len());
        let mut p = Self::zero(vars);
        let mut expo = vec![0u32; vars.len()];
        expo[i] = e;
        p.terms.insert(expo, Q::from_integer(1.into()));
        p
    }

    pub fn named(vars: &Registry, name: &str) -> Self {
        let i = vars.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::var(vars, i)
    }

    pub fn monomial(vars: &Registry, expo: Expo, c: Q) -> Self {
        assert_eq!(expo.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(expo, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_registry(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars
    }

    fn add_term(&mut self, expo: Expo, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expo) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut p = Self::zero(&self.vars);
        for (e, a) in &self.terms {
            p.terms.insert(e.clone(), a.clone() * c.clone());
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in one variable.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Substitute polynomials for variables; unbound variables pass through.
    pub fn substitute(&self, bindings: &[(usize, MPoly)]) -> MPoly {
        for (_, b) in bindings {
            assert!(self.same_registry(b), "registry mismatch in substitute");
        }
        let mut out = Self::zero(&self.vars);
        for (expo, c) in &self.terms {
            let mut term = Self::constant(&self.vars, c.clone());
            let mut rest = expo.clone();
            for (i, b) in bindings {
                let e = rest[*i];
                if e > 0 {
                    rest[*i] = 0;
                    term = &term * &b.pow(e);
                }
            }
            term = &term * &Self::monomial(&self.vars, rest, Q::from_integer(1.into()));
            out = &out + &term;
        }
        out
    }

    /// Map this polynomial into another registry by variable-name lookup.
    pub fn relabel(&self, target: &Registry, rename: &[(&str, &str)]) -> MPoly {
        let mut map = Vec::with_capacity(self.vars.len());
        for i in 0..self.vars.len() {
            let name = self.vars.name(i);
            let tname = rename
                .iter()
                .find(|(from, _)| *from == name)
                .map(|(_, to)| *to)
                .unwrap_or(name);
            map.push(
                target
                    .index(tname)
                    .unwrap_or_else(|| panic!("relabel: {tname} missing in target")),
            );
        }
        let mut out = MPoly::zero(target);
        for (expo, c) in &self.terms {
            let mut e2 = vec![0u32; target.len()];
            for (i, &e) in expo.iter().enumerate() {
                if e > 0 {
                    e2[map[i]] += e;
                }
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Exact division by a single variable to the first power; panics if not divisible.
    pub fn div_exact_var(&self, i: usize) -> MPoly {
        let mut out = Self::zero(&self.vars);
        for (expo, c) in &self.terms {
            assert!(expo[i] > 0, "div_exact_var: term not divisible");
            let mut e = expo.clone();
            e[i] -= 1;
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// Evaluate at a full rational point.
    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = Q::zero();
        for (expo, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in expo.iter().enumerate() {
                for _ in 0..e {
                    t *= point[i].clone();
                }
            }
            acc += t;
        }
        acc
    }

    /// Partial derivative.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = Self::zero(&self.vars);
        for (expo, c) in &self.terms {
            if expo[i] == 0 {
                continue;
            }
            let mut e = expo.clone();
            let k = e[i];
            e[i] -= 1;
            out.add_term(e, c.clone() * Q::from_integer(k.into()));
        }
        out
    }

    /// Leading term under a monomial order.
    pub fn leading(&self, ord: MonomialOrder) -> Option<(&Expo, &Q)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
    }

    /// Terms sorted descending under `ord` (for display and division).
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(&Expo, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        v
    }

    /// Deterministic text rendering: grevlex-descending terms, `+` separators,
    /// coefficients times `var^e` factors joined by `*`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (expo, c) in self.sorted_terms(MonomialOrder::Grevlex) {
            let mut factors = Vec::new();
            for (i, &e) in expo.iter().enumerate() {
                if e == 1 {
                    factors.push(self.vars.name(i).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.vars.name(i), e));
                }
            }
            let cs = render_q(c);
            let body = if factors.is_empty() {
                cs
            } else if cs == "1" {
                factors.join("*")
            } else if cs == "-1" {
                format!("-{}", factors.join("*"))
            } else {
                format!("{}*{}", cs, factors.join("*"))
            };
            parts.push(body);
        }
        let mut s = String::new();
        for (k, p) in parts.iter().enumerate() {
            if k == 0 {
                s.push_str(p);
            } else if let Some(rest) = p.strip_prefix('-') {
                s.push_str("-");
                s.push_str(rest);
            } else {
                s.push('+');
                s.push_str(p);
            }
        }
        s
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Evaluate `f` at polynomial images of its variables (which may live in a
/// different registry). `images[i]` replaces variable `i` of `f`.
pub fn compose(f: &MPoly, images: &[MPoly]) -> MPoly {
    assert_eq!(images.len(), f.vars.len());
    let target = images
        .first()
        .map(|p| p.vars.clone())
        .expect("compose needs at least one variable");
    let mut out = MPoly::zero(&target);
    for (expo, c) in &f.terms {
        let mut term = MPoly::constant(&target, c.clone());
        for (i, &e) in expo.iter().enumerate() {
            if e > 0 {
                term = &term * &images[i].pow(e);
            }
        }
        out = &out + &term;
    }
    out
}

impl<'a> Add for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        assert!(self.same_registry(rhs), "registry mismatch in add");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        assert!(self.same_registry(rhs), "registry mismatch in sub");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        assert!(self.same_registry(rhs), "registry mismatch in mul");
        let mut out = MPoly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Expo = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }
}
