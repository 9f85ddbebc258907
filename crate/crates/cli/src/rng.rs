//! Fixed linear-congruential generator for the verification suite.
//!
//! The scheme is pinned so that independent implementations can reproduce
//! the exact same arrangements from a seed:
//!
//! ```text
//! state_{k+1} = 6364136223846793005 * state_k + 1442695040888963407  (mod 2^64)
//! draw_k      = state_{k+1} >> 33
//! uniform(lo, hi) = lo + draw mod (hi - lo + 1)
//! ```
//!
//! The initial state is the seed itself.

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_draw(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state >> 33
    }

    /// Uniform draw from the inclusive range `[lo, hi]`.
    pub fn uniform(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.next_draw() % (hi - lo + 1)
    }
}
