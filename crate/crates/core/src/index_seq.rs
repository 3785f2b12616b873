//! Strictly increasing index sequences `1 <= i_1 < ... < i_k <= n`.
//!
//! Indices are 1-based throughout, matching the usual statement of the
//! inequalities; conversion to 0-based happens only at the point of lookup
//! into a sorted eigenvalue slice.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::CheckError;

/// Validated index sequence into an eigenvalue list of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSequence {
    indices: Vec<usize>,
    n: usize,
}

impl IndexSequence {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self, CheckError> {
        if indices.is_empty()
            || indices[0] == 0
            || indices[indices.len() - 1] > n
            || indices.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(CheckError::BadIndexSequence { indices, n });
        }
        Ok(Self { indices, n })
    }

    /// The full sequence `1, 2, ..., n`.
    pub fn full(n: usize) -> Self {
        Self { indices: (1..=n).collect(), n }
    }

    /// The head `1, 2, ..., k`.
    pub fn head(k: usize, n: usize) -> Result<Self, CheckError> {
        Self::new((1..=k).collect(), n)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Values `seq[i_t - 1]` for each index in order.
    pub fn select<'a>(&self, seq: &'a [f64]) -> Vec<f64> {
        assert_eq!(seq.len(), self.n);
        self.indices.iter().map(|&i| seq[i - 1]).collect()
    }

    /// All 2^n - 1 nonempty subsequences of `1..=n`, ordered by bitmask.
    pub fn all(n: usize) -> Vec<Self> {
        assert!(n <= 16, "exhaustive enumeration is exponential in n");
        (1u32..(1 << n))
            .map(|mask| {
                let indices = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Self { indices, n }
            })
            .collect()
    }

    /// Uniform random sequence: size k is uniform in 1..=n, then a uniform
    /// k-subset of 1..=n, sorted.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let k = rng.gen_range(1..=n);
        let mut pool: Vec<usize> = (1..=n).collect();
        pool.shuffle(rng);
        let mut indices: Vec<usize> = pool[..k].to_vec();
        indices.sort_unstable();
        Self { indices, n }
    }

    /// The sequences a campaign trial iterates over: exhaustive for small n,
    /// a `samples`-sized random draw for larger n.
    pub fn campaign_set<R: Rng>(n: usize, samples: usize, rng: &mut R) -> Vec<Self> {
        if n <= 6 {
            Self::all(n)
        } else {
            (0..samples).map(|_| Self::random(n, rng)).collect()
        }
    }
}

impl std::fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Parses a comma-separated sequence such as `"1,3,4"`.
pub fn parse_index_list(text: &str, n: usize) -> Result<IndexSequence, CheckError> {
    let indices: Result<Vec<usize>, _> = text
        .split(',')
        .map(|part| part.trim().parse::<usize>())
        .collect();
    let indices = indices.map_err(|_| CheckError::BadIndexSequence {
        indices: Vec::new(),
        n,
    })?;
    IndexSequence::new(indices, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_unsorted_and_out_of_range() {
        assert!(IndexSequence::new(vec![2, 1], 3).is_err());
        assert!(IndexSequence::new(vec![1, 1], 3).is_err());
        assert!(IndexSequence::new(vec![0, 1], 3).is_err());
        assert!(IndexSequence::new(vec![1, 4], 3).is_err());
        assert!(IndexSequence::new(vec![], 3).is_err());
        assert!(IndexSequence::new(vec![1, 3], 3).is_ok());
    }

    #[test]
    fn all_enumerates_every_nonempty_subset() {
        let seqs = IndexSequence::all(4);
        assert_eq!(seqs.len(), 15);
        let mut seen = std::collections::HashSet::new();
        for s in &seqs {
            assert!(seen.insert(s.indices().to_vec()));
        }
    }

    #[test]
    fn select_uses_one_based_indices() {
        let seq = IndexSequence::new(vec![1, 3], 3).unwrap();
        assert_eq!(seq.select(&[5.0, 4.0, 2.0]), vec![5.0, 2.0]);
    }

    #[test]
    fn random_sequences_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let s = IndexSequence::random(9, &mut rng);
            assert!(IndexSequence::new(s.indices().to_vec(), 9).is_ok());
        }
    }

    #[test]
    fn parse_accepts_spaces() {
        let s = parse_index_list("1, 3 ,4", 5).unwrap();
        assert_eq!(s.indices(), &[1, 3, 4]);
    }
}
