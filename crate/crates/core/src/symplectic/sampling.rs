use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::word::TwistWord;

pub const DEFAULT_WORD_LENGTH: usize = 12;

/// Seeded generator of random words over a declared generator list.
#[derive(Debug, Clone)]
pub struct WordSampler {
    generators: Vec<String>,
    max_length: usize,
    inverses: bool,
    rng: ChaCha8Rng,
}

impl WordSampler {
    pub fn new(generators: Vec<String>, max_length: usize, seed: u64) -> Self {
        assert!(!generators.is_empty(), "sampling needs at least one generator");
        WordSampler { generators, max_length, inverses: true, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Only positive exponents, for generator sets closed in a monoid sense.
    pub fn positive_only(mut self) -> Self {
        self.inverses = false;
        self
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    /// A word of length between 1 and the bound.
    pub fn sample(&mut self) -> TwistWord {
        let len = self.rng.gen_range(1..=self.max_length.max(1));
        let mut w = TwistWord::new();
        for _ in 0..len {
            let g = &self.generators[self.rng.gen_range(0..self.generators.len())];
            let e = if self.inverses && self.rng.gen_bool(0.5) { -1 } else { 1 };
            w = w.then(g.clone(), e);
        }
        w
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_words() {
        let gens = vec!["a".to_string(), "b".to_string()];
        let mut s1 = WordSampler::new(gens.clone(), 12, 7);
        let mut s2 = WordSampler::new(gens, 12, 7);
        for _ in 0..20 {
            let w = s1.sample();
            assert_eq!(w, s2.sample());
            assert!(w.length() >= 1 && w.length() <= 12);
        }
    }
}
