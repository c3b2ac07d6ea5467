use crate::error::FieldError;

/// Arithmetic in `GF(p)` for the small primes the oracle supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u8,
}

impl PrimeField {
    pub const SUPPORTED: [u32; 3] = [2, 3, 5];

    pub fn new(p: u32) -> Result<Self, FieldError> {
        if Self::SUPPORTED.contains(&p) {
            Ok(PrimeField { p: p as u8 })
        } else {
            Err(FieldError::UnsupportedPrime(p))
        }
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn order(self) -> u128 {
        self.p as u128
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        self.sub(0, a)
    }

    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(!a.is_multiple_of(self.p));
        (1..self.p)
            .find(|&x| self.mul(a, x) == 1)
            .expect("nonzero element")
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        let q = self.p - 1;
        (1..self.p)
            .find(|&g| {
                let mut x = 1u8;
                for k in 1..=q {
                    x = self.mul(x, g);
                    if x == 1 {
                        return k == q;
                    }
                }
                false
            })
            .expect("prime field has a primitive root")
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(2), 3);
        assert_eq!(f.primitive_root(), 2);
        assert_eq!(PrimeField::new(3).unwrap().primitive_root(), 2);
        assert_eq!(PrimeField::new(2).unwrap().primitive_root(), 1);
        assert!(PrimeField::new(7).is_err());
    }
}
