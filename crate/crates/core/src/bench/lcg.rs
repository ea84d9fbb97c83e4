//! `minstd_rand`: seed = seed * 48271 mod (2^31 - 1).

use crate::bench::BenchError;

pub const MODULUS: u64 = 2_147_483_647;
pub const MULTIPLIER: u64 = 48_271;

/// Generator state. Always in `1..MODULUS`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lcg {
    seed: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Result<Self, BenchError> {
        if seed == 0 || seed >= MODULUS {
            return Err(BenchError::InvalidSeed(seed));
        }
        Ok(Lcg { seed })
    }

    /// Maps an arbitrary 64-bit seed onto a valid state.
    pub fn from_any(seed: u64) -> Self {
        Lcg { seed: 1 + seed % (MODULUS - 1) }
    }

    pub fn state(self) -> u64 {
        self.seed
    }

    /// Advances and returns the new state. Only the low 31 bits are ever set.
    #[inline(always)]
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> u64 {
        self.seed = self.seed * MULTIPLIER % MODULUS;
        self.seed
    }

    /// Advances by `steps` in O(log steps).
    pub fn jump(&mut self, steps: u64) {
        let mut factor = 1u64;
        let mut base = MULTIPLIER;
        let mut e = steps;
        while e > 0 {
            if e & 1 == 1 {
                factor = factor * base % MODULUS;
            }
            base = base * base % MODULUS;
            e >>= 1;
        }
        self.seed = self.seed * factor % MODULUS;
    }
}

/// Functional form of [`Lcg::next`].
pub fn lcg_next(state: Lcg) -> (Lcg, u64) {
    let mut next = state;
    let value = next.next();
    (next, value)
}

/// Derives per-measure seeds from one master seed. Seed `i` is the master
/// stream advanced by `(i + 1) * STRIDE` steps, so the data streams of
/// consecutive measures do not overlap for any realistic input size.
#[derive(Clone, Copy, Debug)]
pub struct SeedSource {
    master: Lcg,
}

impl SeedSource {
    const STRIDE: u64 = 1 << 32;

    pub fn new(master_seed: u64) -> Self {
        SeedSource { master: Lcg::from_any(master_seed) }
    }

    pub fn seed(&self, measure: usize) -> u64 {
        let mut lcg = self.master;
        lcg.jump((measure as u64 + 1) * Self::STRIDE);
        lcg.state()
    }
}
