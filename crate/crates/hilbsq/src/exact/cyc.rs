//! Roots of unity as exponent classes: zeta^e with e taken modulo M.

/// A power of a fixed primitive M-th root of unity, stored as the exponent
/// modulo M. Never evaluated as a complex number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycScalar {
    pub exp: u64,
    pub modulus: u64,
}

impl CycScalar {
    pub fn new(exp: i64, modulus: u64) -> Self {
        assert!(modulus > 0);
        let m = modulus as i64;
        CycScalar { exp: (((exp % m) + m) % m) as u64, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        CycScalar { exp: 0, modulus }
    }

    pub fn mul(self, other: CycScalar) -> CycScalar {
        assert_eq!(self.modulus, other.modulus);
        CycScalar::new((self.exp + other.exp) as i64, self.modulus)
    }

    pub fn pow(self, k: i64) -> CycScalar {
        CycScalar::new(self.exp as i64 * k, self.modulus)
    }

    pub fn inv(self) -> CycScalar {
        CycScalar::new(-(self.exp as i64), self.modulus)
    }

    /// Rational value when zeta^exp is +-1; None otherwise.
    pub fn rational_value(self) -> Option<i64> {
        if self.exp == 0 {
            Some(1)
        } else if self.modulus % 2 == 0 && self.exp == self.modulus / 2 {
            Some(-1)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_arithmetic() {
        let z = CycScalar::new(1, 6);
        assert_eq!(z.pow(6), CycScalar::one(6));
        assert_eq!(z.pow(3).rational_value(), Some(-1));
        assert_eq!(z.pow(2).rational_value(), None);
        assert_eq!(z.mul(z.inv()), CycScalar::one(6));
    }
}
