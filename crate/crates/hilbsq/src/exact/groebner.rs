//! A small Buchberger engine for desk-scale ideal membership and elimination.
//!
//! Buchberger's first criterion only; an explicit reduction budget turns
//! runaway computations into reported failures rather than hangs.

use num::traits::Zero;

use super::order::MonomialOrder;
use super::poly::{Expo, MPoly};
use super::rat::Q;

pub const DEFAULT_BUDGET: u64 = 100_000;

#[derive(Clone, Debug)]
pub struct Ideal {
    pub gens: Vec<MPoly>,
    pub order: MonomialOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    BudgetExceeded { budget: u64 },
}

impl std::fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroebnerError::BudgetExceeded { budget } => {
                write!(f, "groebner budget of {budget} reductions exceeded")
            }
        }
    }
}

fn lcm_expo(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(&x, &y)| x.max(y)).collect()
}

fn divides(a: &Expo, b: &Expo) -> bool {
    a.iter().zip(b.iter()).all(|(&x, &y)| x <= y)
}

fn sub_expo(a: &Expo, b: &Expo) -> Expo {
    a.iter().zip(b.iter()).map(|(&x, &y)| x - y).collect()
}

fn coprime(a: &Expo, b: &Expo) -> bool {
    a.iter().zip(b.iter()).all(|(&x, &y)| x.min(y) == 0)
}

/// Normal form of `p` modulo `basis` under `ord`; `steps` counts reductions
/// against the budget.
fn reduce_with(
    p: &MPoly,
    basis: &[MPoly],
    ord: MonomialOrder,
    steps: &mut u64,
    budget: u64,
) -> Result<MPoly, GroebnerError> {
    let mut rem = MPoly::zero(&p.vars);
    let mut work = p.clone();
    'outer: while !work.is_zero() {
        let (lt_e, lt_c) = {
            let (e, c) = work.leading(ord).unwrap();
            (e.clone(), c.clone())
        };
        for g in basis {
            let (ge, gc) = g.leading(ord).unwrap();
            if divides(ge, &lt_e) {
                *steps += 1;
                if *steps > budget {
                    return Err(GroebnerError::BudgetExceeded { budget });
                }
                let q = lt_c.clone() / gc.clone();
                let shift = sub_expo(&lt_e, ge);
                let m = MPoly::monomial(&p.vars, shift, q);
                work = &work - &(&m * g);
                continue 'outer;
            }
        }
        // leading term irreducible: move to remainder
        rem = &rem + &MPoly::monomial(&p.vars, lt_e.clone(), lt_c.clone());
        work = &work - &MPoly::monomial(&p.vars, lt_e, lt_c);
    }
    Ok(rem)
}

impl Ideal {
    pub fn new(gens: Vec<MPoly>, order: MonomialOrder) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { gens, order }
    }

    /// Normal form of `p` with respect to the generator list as-is.
    pub fn reduce(&self, p: &MPoly) -> Result<MPoly, GroebnerError> {
        self.reduce_budget(p, DEFAULT_BUDGET)
    }

    pub fn reduce_budget(&self, p: &MPoly, budget: u64) -> Result<MPoly, GroebnerError> {
        let mut steps = 0;
        reduce_with(p, &self.gens, self.order, &mut steps, budget)
    }

    /// Buchberger with the coprime-leading-term criterion, returning a reduced
    /// Groebner basis (normalized leading coefficients, deterministic order).
    pub fn groebner(&self, budget: u64) -> Result<Ideal, GroebnerError> {
        let ord = self.order;
        let mut basis: Vec<MPoly> = self.gens.clone();
        if basis.is_empty() {
            return Ok(Ideal { gens: basis, order: ord });
        }
        let vars = basis[0].vars.clone();
        let mut steps: u64 = 0;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..basis.len() {
            for j in 0..i {
                pairs.push((j, i));
            }
        }
        while let Some((i, j)) = pairs.pop() {
            let (ei, ci) = {
                let (e, c) = basis[i].leading(ord).unwrap();
                (e.clone(), c.clone())
            };
            let (ej, cj) = {
                let (e, c) = basis[j].leading(ord).unwrap();
                (e.clone(), c.clone())
            };
            if coprime(&ei, &ej) {
                continue; // Buchberger's first criterion
            }
            let l = lcm_expo(&ei, &ej);
            let mi = MPoly::monomial(&vars, sub_expo(&l, &ei), Q::from_integer(1.into()) / ci);
            let mj = MPoly::monomial(&vars, sub_expo(&l, &ej), Q::from_integer(1.into()) / cj);
            let s = &(&mi * &basis[i]) - &(&mj * &basis[j]);
            let r = reduce_with(&s, &basis, ord, &mut steps, budget)?;
            if !r.is_zero() {
                let k = basis.len();
                for t in 0..k {
                    pairs.push((t, k));
                }
                basis.push(r);
            }
        }
        // inter-reduce to a reduced basis
        let mut reduced: Vec<MPoly> = Vec::new();
        // drop generators whose leading term is divisible by another's
        let mut keep = vec![true; basis.len()];
        for i in 0..basis.len() {
            if !keep[i] {
                continue;
            }
            let (ei, _) = basis[i].leading(ord).unwrap();
            let ei = ei.clone();
            for j in 0..basis.len() {
                if i == j || !keep[j] {
                    continue;
                }
                let (ej, _) = basis[j].leading(ord).unwrap();
                if divides(&ei, ej) && (ej != &ei || i < j) {
                    keep[j] = false;
                }
            }
        }
        let kept: Vec<MPoly> = basis
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| if k { Some(g) } else { None })
            .collect();
        for i in 0..kept.len() {
            let others: Vec<MPoly> = kept
                .iter()
                .enumerate()
                .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
                .collect();
            let r = reduce_with(&kept[i], &others, ord, &mut steps, budget)?;
            if r.is_zero() {
                continue;
            }
            let (_, lc) = r.leading(ord).unwrap();
            let lc = lc.clone();
            reduced.push(r.scale(&(Q::from_integer(1.into()) / lc)));
        }
        reduced.sort_by(|a, b| {
            let (ea, _) = a.leading(ord).unwrap();
            let (eb, _) = b.leading(ord).unwrap();
            ord.cmp(ea, eb)
        });
        Ok(Ideal { gens: reduced, order: ord })
    }

    /// Membership test via normal form against a precomputed Groebner basis.
    pub fn contains(&self, p: &MPoly, budget: u64) -> Result<bool, GroebnerError> {
        Ok(self.reduce_budget(p, budget)?.is_zero())
    }

    /// Generators free of the first `k` variables (use with `Elim(k)` bases).
    pub fn eliminate_block(&self, k: usize) -> Vec<MPoly> {
        self.gens
            .iter()
            .filter(|g| g.terms.keys().all(|e| e[..k].iter().all(|&x| x == 0)))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vars::VarSet;

    #[test]
    fn membership_basics() {
        let vs = VarSet::new(vec!["x", "y"]);
        let x = MPoly::var(&vs, 0);
        let y = MPoly::var(&vs, 1);
        // x^2 in (x)
        let i1 = Ideal::new(vec![x.clone()], MonomialOrder::Grevlex);
        let gb = i1.groebner(1000).unwrap();
        assert!(gb.reduce(&(&x * &x)).unwrap().is_zero());
        // xy not in (x^2, y^2)
        let i2 = Ideal::new(vec![&x * &x, &y * &y], MonomialOrder::Grevlex);
        let gb2 = i2.groebner(1000).unwrap();
        let xy = &x * &y;
        assert_eq!(gb2.reduce(&xy).unwrap(), xy);
    }

    #[test]
    fn budget_reported() {
        let vs = VarSet::new(vec!["x", "y", "z"]);
        let x = MPoly::var(&vs, 0);
        let y = MPoly::var(&vs, 1);
        let z = MPoly::var(&vs, 2);
        let g1 = &(&x * &x) - &(&y * &z);
        let g2 = &(&y * &y) - &(&x * &z);
        let i = Ideal::new(vec![g1, g2], MonomialOrder::Grevlex);
        match i.groebner(1) {
            Err(GroebnerError::BudgetExceeded { budget: 1 }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
