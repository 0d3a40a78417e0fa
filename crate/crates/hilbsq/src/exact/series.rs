//! Truncated series in a designated "small" variable whose coefficients are
//! Laurent monomial sums in a designated "pole" variable.

use std::collections::BTreeMap;

use num::traits::Zero;

use super::rat::Q;
use super::vars::Registry;

/// Terms map (small exponent, pole exponent) -> coefficient; small exponents
/// are kept strictly below the truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    pub vars: Registry,
    pub small: usize,
    pub pole: usize,
    pub order: u32,
    pub terms: BTreeMap<(u32, i64), Q>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    NotInvertible(String),
}

impl std::fmt::Display for SeriesError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesError::NotInvertible(m) => write!(f, "series not invertible: {m}"),
        }
    }
}

impl TruncSeries {
    pub fn zero(vars: &Registry, small: usize, pole: usize, order: u32) -> Self {
        TruncSeries {
            vars: vars.clone(),
            small,
            pole,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(mut self, small_exp: u32, pole_exp: i64, c: Q) -> Self {
        if small_exp < self.order && !c.is_zero() {
            let e = self.terms.entry((small_exp, pole_exp)).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                self.terms.remove(&(small_exp, pole_exp));
            }
        }
        self
    }

    pub fn truncate(&self, order: u32) -> Self {
        let mut out = self.clone();
        out.order = order.min(self.order);
        out.terms.retain(|&(s, _), _| s < out.order);
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((self.small, self.pole), (rhs.small, rhs.pole));
        let order = self.order.min(rhs.order);
        let mut out = TruncSeries::zero(&self.vars, self.small, self.pole, order);
        for (&(sa, pa), ca) in &self.terms {
            for (&(sb, pb), cb) in &rhs.terms {
                if sa + sb < order {
                    let e = out
                        .terms
                        .entry((sa + sb, pa + pb))
                        .or_insert_with(Q::zero);
                    *e += ca.clone() * cb.clone();
                }
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.small, self.pole), (rhs.small, rhs.pole));
        let order = self.order.min(rhs.order);
        let mut out = self.truncate(order);
        for (&k, c) in &rhs.terms {
            if k.0 < order {
                let e = out.terms.entry(k).or_insert_with(Q::zero);
                *e += c.clone();
                if e.is_zero() {
                    out.terms.remove(&k);
                }
            }
        }
        out
    }

    pub fn one(vars: &Registry, small: usize, pole: usize, order: u32) -> Self {
        Self::zero(vars, small, pole, order).term(0, 0, Q::from_integer(1.into()))
    }

    /// Invert: the small-degree-0 part must be a single Laurent monomial.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let lead: Vec<(i64, Q)> = self
            .terms
            .iter()
            .filter(|(&(s, _), _)| s == 0)
            .map(|(&(_, p), c)| (p, c.clone()))
            .collect();
        if lead.len() != 1 {
            return Err(SeriesError::NotInvertible(format!(
                "leading coefficient has {} Laurent terms",
                lead.len()
            )));
        }
        let (p0, c0) = lead[0].clone();
        // self = c0 z^p0 (1 - t) with t of positive small-degree
        let inv_lead = TruncSeries::zero(&self.vars, self.small, self.pole, self.order).term(
            0,
            -p0,
            Q::from_integer(1.into()) / c0.clone(),
        );
        let t = {
            // t = 1 - inv_lead * self
            let prod = inv_lead.mul(self);
            let mut t = TruncSeries::one(&self.vars, self.small, self.pole, self.order);
            for (&k, c) in &prod.terms {
                let e = t.terms.entry(k).or_insert_with(Q::zero);
                *e -= c.clone();
                if e.is_zero() {
                    t.terms.remove(&k);
                }
            }
            t
        };
        // inverse = inv_lead * (1 + t + t^2 + ...)
        let mut geom = TruncSeries::one(&self.vars, self.small, self.pole, self.order);
        let mut tk = TruncSeries::one(&self.vars, self.small, self.pole, self.order);
        for _ in 1..self.order {
            tk = tk.mul(&t);
            if tk.terms.is_empty() {
                break;
            }
            geom = geom.add(&tk);
        }
        Ok(inv_lead.mul(&geom))
    }

    pub fn coeff(&self, small_exp: u32, pole_exp: i64) -> Q {
        self.terms
            .get(&(small_exp, pole_exp))
            .cloned()
            .unwrap_or_else(Q::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{qi, qr};
    use crate::exact::vars::VarSet;

    #[test]
    fn geometric_series() {
        // invert(1 - t) at order 4 = 1 + t + t^2 + t^3
        let vs = VarSet::new(vec!["t", "z"]);
        let s = TruncSeries::zero(&vs, 0, 1, 4)
            .term(0, 0, qi(1))
            .term(1, 0, qi(-1));
        let inv = s.invert().unwrap();
        for k in 0..4 {
            assert_eq!(inv.coeff(k, 0), qi(1));
        }
        // multiply back gives 1
        let back = s.mul(&inv);
        assert_eq!(back.coeff(0, 0), qi(1));
        assert!(back.terms.len() == 1);
    }

    #[test]
    fn invert_with_pole() {
        // invert(2z - d) in d at order 3 = 1/2 z^-1 + 1/4 z^-2 d + 1/8 z^-3 d^2
        let vs = VarSet::new(vec!["d", "z"]);
        let s = TruncSeries::zero(&vs, 0, 1, 3)
            .term(0, 1, qi(2))
            .term(1, 0, qi(-1));
        let inv = s.invert().unwrap();
        assert_eq!(inv.coeff(0, -1), qr(1, 2));
        assert_eq!(inv.coeff(1, -2), qr(1, 4));
        assert_eq!(inv.coeff(2, -3), qr(1, 8));
    }
}
