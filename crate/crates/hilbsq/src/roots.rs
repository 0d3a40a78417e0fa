//! ADE Dynkin data: adjacency, Cartan matrices, positive roots under the
//! coefficientwise total order, wall classes e0 - alpha, and the intersection
//! pairing between exceptional divisors and curve classes.
//!
//! Labeling: type A is the path 1-2-...-n. Type D attaches leaves 1 and 2 to
//! vertex 3, then chains 3-4-...-n. Type E extends the D5 part {1..5} by
//! 6 adjacent to 2, 7 adjacent to 6, 8 adjacent to 7.

use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdeType {
    A,
    D,
    E,
}

impl std::fmt::Display for AdeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdeType::A => write!(f, "A"),
            AdeType::D => write!(f, "D"),
            AdeType::E => write!(f, "E"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub typ: AdeType,
    pub n: usize,
    /// 1-based Dynkin edges (a < b).
    pub edges: Vec<(usize, usize)>,
    pub cartan: Vec<Vec<i64>>,
}

/// A positive root as its simple-root coefficient vector.
pub type PosRoot = Vec<i64>;

/// An integer class over the basis (e0, e1, ..., en).
pub type ClassVector = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    Unsupported(AdeType, usize),
}

impl std::fmt::Display for RootError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootError::Unsupported(t, n) => write!(f, "unsupported root system {t}{n}"),
        }
    }
}

pub fn dynkin_edges(typ: AdeType, n: usize) -> Result<Vec<(usize, usize)>, RootError> {
    match typ {
        AdeType::A => {
            if n < 1 {
                return Err(RootError::Unsupported(typ, n));
            }
            Ok((1..n).map(|i| (i, i + 1)).collect())
        }
        AdeType::D => {
            if n < 4 {
                return Err(RootError::Unsupported(typ, n));
            }
            let mut e = vec![(1, 3), (2, 3)];
            e.extend((3..n).map(|i| (i, i + 1)));
            Ok(e)
        }
        AdeType::E => {
            if !(6..=8).contains(&n) {
                return Err(RootError::Unsupported(typ, n));
            }
            let full = [(1, 3), (2, 3), (3, 4), (4, 5), (2, 6), (6, 7), (7, 8)];
            Ok(full.into_iter().filter(|&(a, b)| a <= n && b <= n).collect())
        }
    }
}

impl RootSystem {
    pub fn build(typ: AdeType, n: usize) -> Result<Self, RootError> {
        let edges = dynkin_edges(typ, n)?;
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            cartan[i][i] = 2;
        }
        for &(a, b) in &edges {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        Ok(RootSystem { typ, n, edges, cartan })
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        self.edges.contains(&(a, b))
    }

    /// Cartan pairing <alpha, alpha_i>.
    pub fn cartan_pair(&self, alpha: &[i64], i: usize) -> i64 {
        (0..self.n).map(|j| alpha[j] * self.cartan[j][i]).sum()
    }

    /// All positive roots by closure under simple-root addition, sorted by the
    /// total order: alpha < alpha' iff some j has c_j < c'_j with equality at
    /// every index above j.
    pub fn positive_roots_ordered(&self) -> Vec<PosRoot> {
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = Vec::new();
        for i in 0..self.n {
            let mut r = vec![0i64; self.n];
            r[i] = 1;
            roots.insert(r.clone());
            frontier.push(r);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in frontier {
                for i in 0..self.n {
                    if self.cartan_pair(&r, i) < 0 {
                        let mut r2 = r.clone();
                        r2[i] += 1;
                        if roots.insert(r2.clone()) {
                            next.push(r2);
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<PosRoot> = roots.into_iter().collect();
        out.sort_by(|a, b| {
            let ra: Vec<i64> = a.iter().rev().cloned().collect();
            let rb: Vec<i64> = b.iter().rev().cloned().collect();
            ra.cmp(&rb)
        });
        out
    }

    pub fn highest_root(&self) -> PosRoot {
        self.positive_roots_ordered().last().cloned().expect("non-empty root system")
    }

    /// Wall classes e0 - alpha in the (e0..en) basis, in the root order.
    pub fn wall_classes(&self) -> Vec<ClassVector> {
        self.positive_roots_ordered()
            .into_iter()
            .map(|r| {
                let mut v = Vec::with_capacity(self.n + 1);
                v.push(1);
                v.extend(r.iter().map(|&c| -c));
                v
            })
            .collect()
    }
}

/// The (n+1)x(n+1) matrix P[k][m] = (E_k . e_m) = -(A1 (+) Cartan).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingForm {
    pub matrix: Vec<Vec<i64>>,
}

impl PairingForm {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.n;
        let mut m = vec![vec![0i64; n + 1]; n + 1];
        m[0][0] = -2;
        for i in 0..n {
            for j in 0..n {
                m[i + 1][j + 1] = -rs.cartan[i][j];
            }
        }
        PairingForm { matrix: m }
    }

    /// (E_k . v) for a curve class v over (e0..en).
    pub fn pair(&self, k: usize, v: &[i64]) -> i64 {
        assert!(k < self.matrix.len(), "divisor index out of range");
        assert_eq!(v.len(), self.matrix.len(), "class dimension mismatch");
        (0..v.len()).map(|m| self.matrix[k][m] * v[m]).sum()
    }
}

pub fn expected_positive_root_count(typ: AdeType, n: usize) -> usize {
    match typ {
        AdeType::A => n * (n + 1) / 2,
        AdeType::D => n * (n - 1),
        AdeType::E => match n {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_order_forced() {
        let rs = RootSystem::build(AdeType::A, 2).unwrap();
        let pr = rs.positive_roots_ordered();
        assert_eq!(pr, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn d4_order_matches_printed_list() {
        let rs = RootSystem::build(AdeType::D, 4).unwrap();
        let pr = rs.positive_roots_ordered();
        let expect_first6 = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 0, 1, 0],
            vec![0, 1, 1, 0],
            vec![1, 1, 1, 0],
        ];
        assert_eq!(&pr[..6], &expect_first6[..]);
        // edges {1-3, 2-3, 3-4}
        assert_eq!(rs.edges, vec![(1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn counts() {
        for (t, n) in [(AdeType::A, 6), (AdeType::D, 5), (AdeType::E, 6), (AdeType::E, 7), (AdeType::E, 8)] {
            let rs = RootSystem::build(t, n).unwrap();
            assert_eq!(
                rs.positive_roots_ordered().len(),
                expected_positive_root_count(t, n),
                "{t}{n}"
            );
        }
    }

    #[test]
    fn highest_roots() {
        let rs = RootSystem::build(AdeType::A, 3).unwrap();
        assert_eq!(rs.highest_root(), vec![1, 1, 1]);
        let rs = RootSystem::build(AdeType::D, 4).unwrap();
        assert_eq!(rs.highest_root(), vec![1, 1, 2, 1]);
        let rs = RootSystem::build(AdeType::E, 8).unwrap();
        let h = rs.highest_root();
        assert_eq!(h.iter().sum::<i64>(), 29);
        // pairing with every simple root is >= 0
        for i in 0..8 {
            assert!(rs.cartan_pair(&h, i) >= 0);
        }
        // dominates every positive root coefficientwise
        for r in rs.positive_roots_ordered() {
            assert!(r.iter().zip(h.iter()).all(|(a, b)| a <= b));
        }
    }

    #[test]
    fn pairing_form() {
        let rs = RootSystem::build(AdeType::A, 3).unwrap();
        let pf = PairingForm::new(&rs);
        // (E0 . e0) = -2
        assert_eq!(pf.pair(0, &[1, 0, 0, 0]), -2);
        // lambda_{2,3} = e0 - e2 - e3: (E_1 . lambda) = -1 (k = i-1)
        let lam = vec![1, 0, -1, -1];
        assert_eq!(pf.pair(1, &lam), -1);
        // interior: lambda_{1,3}, k=2
        let lam13 = vec![1, -1, -1, -1];
        assert_eq!(pf.pair(2, &lam13), 0);
    }
}
