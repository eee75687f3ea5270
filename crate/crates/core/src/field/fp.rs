//! The prime field `Z/p` with `p = 2^61 - 1`, used for specialization certificates.

use super::qrat::{inv_mod, mul_mod};

pub const P61: u64 = (1u64 << 61) - 1;

/// Element of `Z/(2^61 - 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Fp(pub u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % P61)
    }

    pub fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P61 { s - P61 } else { s })
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 {
            self.0 - o.0
        } else {
            self.0 + P61 - o.0
        })
    }

    pub fn neg(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { P61 - self.0 })
    }

    pub fn mul(self, o: Fp) -> Fp {
        Fp(mul_mod(self.0, o.0, P61))
    }

    pub fn inv(self) -> Option<Fp> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(inv_mod(self.0, P61)))
        }
    }
}
