//! Square matrices of polynomials: characteristic polynomials by exact minor
//! expansion, plus a fraction-free (Bareiss) determinant over the rationals
//! used as an independent evaluation oracle.

use num::traits::{One, Zero};

use super::poly::MPoly;
use super::rat::Q;
use super::vars::{Registry, VarSet};

#[derive(Clone, Debug)]
pub struct SymbolicMatrix {
    pub vars: Registry,
    pub n: usize,
    pub entries: Vec<MPoly>, // row-major
}

impl SymbolicMatrix {
    pub fn new(vars: &Registry, n: usize, entries: Vec<MPoly>) -> Self {
        assert_eq!(entries.len(), n * n);
        SymbolicMatrix { vars: vars.clone(), n, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> MPoly {
        let mut t = MPoly::zero(&self.vars);
        for i in 0..self.n {
            t = &t + self.at(i, i);
        }
        t
    }

    fn det_minor(entries: &[Vec<MPoly>]) -> MPoly {
        let n = entries.len();
        let vars = entries[0][0].vars.clone();
        if n == 1 {
            return entries[0][0].clone();
        }
        let mut acc = MPoly::zero(&vars);
        for j in 0..n {
            if entries[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<MPoly>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&k| k != j)
                        .map(|k| entries[i][k].clone())
                        .collect()
                })
                .collect();
            let sub = Self::det_minor(&minor);
            let term = &entries[0][j] * &sub;
            if j % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    pub fn det(&self) -> MPoly {
        let rows: Vec<Vec<MPoly>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        Self::det_minor(&rows)
    }

    /// det(lambda*I - M) in a registry extended by a fresh eigenvalue variable.
    /// Returns the polynomial together with the extended registry.
    pub fn char_poly(&self, eigen_name: &str) -> (Registry, MPoly) {
        assert!(self.vars.index(eigen_name).is_none(), "eigen variable collides");
        let ext = self.vars.extend(vec![eigen_name]);
        let lam = MPoly::named(&ext, eigen_name);
        let lift = |p: &MPoly| -> MPoly { p.relabel(&ext, &[]) };
        let rows: Vec<Vec<MPoly>> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let mut e = -&lift(self.at(i, j));
                        if i == j {
                            e = &e + &lam;
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        (ext, Self::det_minor(&rows))
    }

    /// Evaluate all entries at a rational point and take det(lambda0*I - M)
    /// by fraction-free Gaussian elimination (Bareiss).
    pub fn char_value_bareiss(&self, point: &[Q], lambda0: &Q) -> Q {
        let n = self.n;
        let mut m: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = self.at(i, j).eval(point);
                        if i == j {
                            lambda0.clone() - v
                        } else {
                            -v
                        }
                    })
                    .collect()
            })
            .collect();
        bareiss_det(&mut m)
    }
}

/// Fraction-free determinant (Bareiss). Exact over Q; division steps are exact.
pub fn bareiss_det(m: &mut [Vec<Q>]) -> Q {
    let n = m.len();
    if n == 0 {
        return Q::one();
    }
    let mut sign = Q::one();
    let mut prev = Q::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // pivot search
            let mut found = None;
            for i in k + 1..n {
                if !m[i][k].is_zero() {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Q::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num / prev.clone();
            }
        }
        for i in k + 1..n {
            m[i][k] = Q::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Square zero matrix of polynomials over a fresh registry (test helper).
pub fn identity_matrix(vars: &Registry, n: usize) -> SymbolicMatrix {
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(if i == j { MPoly::one(vars) } else { MPoly::zero(vars) });
        }
    }
    SymbolicMatrix::new(vars, n, entries)
}

pub fn empty_registry() -> Registry {
    VarSet::new(Vec::<String>::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::qi;

    #[test]
    fn char_poly_identity() {
        let vs = empty_registry();
        let m = identity_matrix(&vs, 2);
        let (ext, cp) = m.char_poly("lam");
        // (lam - 1)^2 = lam^2 - 2 lam + 1
        let lam = MPoly::named(&ext, "lam");
        let one = MPoly::one(&ext);
        let expect = &(&lam - &one) * &(&lam - &one);
        assert_eq!(cp, expect);
    }

    #[test]
    fn char_poly_jordan() {
        // J2 nilpotent: char = lam^2
        let vs = empty_registry();
        let z = MPoly::zero(&vs);
        let o = MPoly::one(&vs);
        let m = SymbolicMatrix::new(&vs, 2, vec![z.clone(), o, z.clone(), z.clone()]);
        let (ext, cp) = m.char_poly("lam");
        let lam = MPoly::named(&ext, "lam");
        assert_eq!(cp, &lam * &lam);
    }

    #[test]
    fn bareiss_matches() {
        let mut m = vec![
            vec![qi(2), qi(1), qi(0)],
            vec![qi(1), qi(3), qi(1)],
            vec![qi(0), qi(1), qi(4)],
        ];
        assert_eq!(bareiss_det(&mut m), qi(18));
    }
}
