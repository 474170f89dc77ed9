//! Fully specified pseudo-random streams.

use densityseek_core::{Bitstream, Ratio};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The splitmix64 generator: a Weyl sequence passed through a
/// xor-shift-multiply finaliser.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }
}

/// The splitmix64 output finaliser.
#[inline]
pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for one benchmark case, from the base seed and the case's length,
/// theta and repeat indices.
pub fn case_seed(base: u64, length_index: usize, theta_index: usize, repeat: usize) -> u64 {
    let mut z = mix(base.wrapping_add(GOLDEN_GAMMA));
    for index in [length_index, theta_index, repeat] {
        z = mix(z ^ mix((index as u64).wrapping_add(GOLDEN_GAMMA)));
    }
    z
}

/// `n` bits where bit `i` is one iff the `i`-th generator output modulo
/// `beta` is below `alpha`, for `rho = alpha / beta`.
pub fn random_bitstream(seed: u64, n: usize, rho: Ratio) -> Bitstream {
    let mut rng = SplitMix64::new(seed);
    let (alpha, beta) = (rho.alpha(), rho.beta());
    Bitstream::from_bits((0..n).map(|_| rng.next_u64() % beta < alpha))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_outputs() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn first_bits_for_seed_42() {
        let s = random_bitstream(42, 16, Ratio::new(1, 2).unwrap());
        assert_eq!(s.to_string(), "0011110101011011");
    }

    #[test]
    fn extreme_densities() {
        assert_eq!(random_bitstream(9, 100, Ratio::ZERO).count_ones(), 0);
        assert_eq!(random_bitstream(9, 100, Ratio::ONE).count_ones(), 100);
        assert!(random_bitstream(1, 0, Ratio::ONE).is_empty());
    }

    #[test]
    fn case_seeds_differ() {
        let seeds = [
            case_seed(7, 0, 0, 0),
            case_seed(7, 1, 0, 0),
            case_seed(7, 0, 1, 0),
            case_seed(7, 0, 0, 1),
            case_seed(8, 0, 0, 0),
        ];
        for (i, a) in seeds.iter().enumerate() {
            for b in &seeds[i + 1..] {
                assert_ne!(a, b);
            }
        }
        assert_eq!(case_seed(7, 2, 3, 4), case_seed(7, 2, 3, 4));
    }
}
