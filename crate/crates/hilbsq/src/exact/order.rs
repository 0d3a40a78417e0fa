//! Monomial orders: graded reverse lexicographic, lexicographic, and block
//! elimination orders (grevlex within each block, first block dominant).

use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Eliminate the first `k` variables: compare that block grevlex-first.
    Elim(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // a > b iff the last nonzero entry of a-b is negative
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Elim(k) => match grevlex(&a[..*k], &b[..*k]) {
                Ordering::Equal => grevlex(&a[*k..], &b[*k..]),
                o => o,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_degree_first() {
        // x^2 vs x*y in two vars: same degree; grevlex: x^2 > x*y
        assert_eq!(MonomialOrder::Grevlex.cmp(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&[0, 3], &[2, 0]), Ordering::Greater);
    }

    #[test]
    fn elim_blocks() {
        // first var eliminated: any power of it dominates
        let o = MonomialOrder::Elim(1);
        assert_eq!(o.cmp(&[1, 0], &[0, 9]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 2], &[0, 1]), Ordering::Greater);
    }
}
