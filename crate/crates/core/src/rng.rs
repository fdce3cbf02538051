//! Portable pseudo-random generator used by every seeded component.
//!
//! The generator is SplitMix64. With state `s` (a `u64`), one step is
//!
//! ```text
//! s  = s + 0x9E3779B97F4A7C15            (wrapping)
//! z  = s
//! z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (wrapping)
//! z  = (z ^ (z >> 27)) * 0x94D049BB133111EB   (wrapping)
//! out = z ^ (z >> 31)
//! ```
//!
//! Derived quantities:
//!
//! * `next_f64`  = `(out >> 11) * 2^-53`, uniform on `[0, 1)`.
//! * `below(k)`  = `((out as u128 * k as u128) >> 64)`, uniform on `0..k`
//!   (multiply-shift reduction, no rejection step).
//! * `shuffle`   = Fisher-Yates from the last index down, swapping `i` with
//!   `below(i + 1)`.
//!
//! Anything reproducing these equations reproduces every seeded graph,
//! policy and search run in this crate.

/// SplitMix64 generator state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound`. `bound` must be non-zero.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Derives an independent child seed for stream `index` of a parent seed.
pub fn derive_seed(parent: u64, index: u64) -> u64 {
    let mut rng = SplitMix64::new(parent ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03));
    rng.next_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_sequence() {
        // Published SplitMix64 outputs for seed 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn below_stays_in_range() {
        let mut rng = SplitMix64::new(7);
        for bound in 1..50 {
            for _ in 0..20 {
                assert!(rng.below(bound) < bound);
            }
        }
    }

    #[test]
    fn unit_interval() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..1000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }
}
