//! The reindexed Perrin sequence `0, 3, 0, 2, 3, 2, 5, 5, 7, 10, ...`.
//!
//! Index 0 is an extra leading zero in front of the classical Perrin numbers,
//! so `P_i` here is the classical `P(i - 1)` for `i >= 1`. Only this indexing
//! is offered.
//!
//! Values are arbitrary precision. Parities are tracked in a separate table
//! driven by the recurrence taken mod 2, so parity queries never touch big
//! integers.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;

/// Parity of a Perrin value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_residue(bit: u8) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

const SEED: [u32; 4] = [0, 3, 0, 2];

/// Memoized sequence table. Grows on demand; safe to share across threads.
#[derive(Debug)]
pub struct PerrinSequence {
    values: RwLock<Vec<BigUint>>,
    parities: RwLock<Vec<Parity>>,
}

impl Default for PerrinSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl PerrinSequence {
    pub fn new() -> Self {
        let values: Vec<BigUint> = SEED.iter().map(|&v| BigUint::from(v)).collect();
        let parities = SEED.iter().map(|&v| Parity::of_residue(v as u8)).collect();
        Self {
            values: RwLock::new(values),
            parities: RwLock::new(parities),
        }
    }

    /// `P_i`. For `i >= 4`, `P_i = P_{i-2} + P_{i-3}`.
    pub fn value(&self, i: usize) -> BigUint {
        {
            let values = self.values.read().expect("perrin value table poisoned");
            if let Some(v) = values.get(i) {
                return v.clone();
            }
        }
        let mut values = self.values.write().expect("perrin value table poisoned");
        while values.len() <= i {
            let n = values.len();
            let next = &values[n - 2] + &values[n - 3];
            values.push(next);
        }
        values[i].clone()
    }

    pub fn parity(&self, i: usize) -> Parity {
        {
            let parities = self.parities.read().expect("perrin parity table poisoned");
            if let Some(&p) = parities.get(i) {
                return p;
            }
        }
        let mut parities = self.parities.write().expect("perrin parity table poisoned");
        while parities.len() <= i {
            let n = parities.len();
            let bit = parities[n - 2].bit() ^ parities[n - 3].bit();
            parities.push(Parity::of_residue(bit));
        }
        parities[i]
    }

    /// Parities of `P_0..=P_n` in one lock acquisition.
    pub fn parities_upto(&self, n: usize) -> Vec<Parity> {
        self.parity(n);
        let parities = self.parities.read().expect("perrin parity table poisoned");
        parities[..=n].to_vec()
    }
}

/// Process-wide memo shared by the free functions below.
pub fn sequence() -> &'static PerrinSequence {
    static SEQ: OnceLock<PerrinSequence> = OnceLock::new();
    SEQ.get_or_init(PerrinSequence::new)
}

pub fn perrin_value(i: usize) -> BigUint {
    sequence().value(i)
}

pub fn perrin_parity(i: usize) -> Parity {
    sequence().parity(i)
}

/// Number of even terms among `P_0..=P_n`, from the period-7 closed form.
pub fn even_count(n: usize) -> usize {
    let p = n / 7;
    match n % 7 {
        0 | 1 => 3 * p + 1,
        2 => 3 * p + 2,
        3 | 4 => 3 * p + 3,
        _ => 3 * p + 4,
    }
}

/// Number of odd terms among `P_0..=P_n`.
pub fn odd_count(n: usize) -> usize {
    n + 1 - even_count(n)
}

/// Same count as [`even_count`], by scanning the parity table.
pub fn even_count_scan(n: usize) -> usize {
    sequence()
        .parities_upto(n)
        .into_iter()
        .filter(|p| p.is_even())
        .count()
}

/// Ascending indices `i <= n` with `P_i` even.
pub fn even_indices(n: usize) -> Vec<usize> {
    indices_with(n, Parity::Even)
}

/// Ascending indices `i <= n` with `P_i` odd.
pub fn odd_indices(n: usize) -> Vec<usize> {
    indices_with(n, Parity::Odd)
}

fn indices_with(n: usize, parity: Parity) -> Vec<usize> {
    sequence()
        .parities_upto(n)
        .into_iter()
        .enumerate()
        .filter(|&(_, p)| p == parity)
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    // Independent oracle: unroll the recurrence with u128 (exact below ~index 290).
    fn unrolled(n: usize) -> Vec<u128> {
        let mut v: Vec<u128> = vec![0, 3, 0, 2];
        while v.len() <= n {
            let k = v.len();
            v.push(v[k - 2] + v[k - 3]);
        }
        v.truncate(n + 1);
        v
    }

    #[test]
    fn seed_values() {
        let got: Vec<u64> = (0..=6).map(|i| perrin_value(i).to_u64().unwrap()).collect();
        assert_eq!(got, vec![0, 3, 0, 2, 3, 2, 5]);
    }

    #[test]
    fn value_examples() {
        assert_eq!(perrin_value(1), BigUint::from(3u32));
        assert_eq!(perrin_value(6), BigUint::from(5u32));
        assert_eq!(perrin_value(9), BigUint::from(10u32));
    }

    #[test]
    fn matches_unrolled_oracle() {
        let oracle = unrolled(250);
        for (i, want) in oracle.iter().enumerate() {
            assert_eq!(perrin_value(i).to_u128().unwrap(), *want, "index {i}");
        }
    }

    #[test]
    fn big_values_do_not_overflow() {
        let v = perrin_value(2000);
        assert!(v.bits() > 128);
        assert_eq!(v, perrin_value(1998) + perrin_value(1997));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(perrin_parity(0), Parity::Even);
        assert_eq!(perrin_parity(8), Parity::Odd);
        assert_eq!(perrin_parity(10), Parity::Even);
    }

    #[test]
    fn parity_table_agrees_with_values() {
        for i in 0..=600 {
            let bit = (perrin_value(i) % 2u32).to_u8().unwrap();
            assert_eq!(perrin_parity(i), Parity::of_residue(bit), "index {i}");
        }
    }

    #[test]
    fn even_count_examples() {
        assert_eq!(even_count(0), 1);
        assert_eq!(even_count(9), 5);
        assert_eq!(even_count(13), 7);
        assert_eq!(even_count_scan(0), 1);
        assert_eq!(even_count_scan(6), 4);
        assert_eq!(even_count_scan(13), 7);
    }

    #[test]
    fn even_indices_examples() {
        assert_eq!(even_indices(6), vec![0, 2, 3, 5]);
        assert_eq!(even_indices(0), vec![0]);
        assert_eq!(even_indices(13), vec![0, 2, 3, 5, 9, 10, 12]);
        assert_eq!(odd_indices(6), vec![1, 4, 6]);
    }

    #[test]
    fn closed_form_matches_scan() {
        for n in 0..=10_000 {
            assert_eq!(even_count(n), even_count_scan(n), "n = {n}");
        }
    }

    #[test]
    fn parity_has_period_seven_from_index_one() {
        for i in 1..=1000 {
            assert_eq!(perrin_parity(i), perrin_parity(i + 7), "index {i}");
        }
        // index 0 is the exception
        assert_ne!(perrin_parity(0), perrin_parity(7));
    }

    #[test]
    fn strictly_increasing_from_seven() {
        for i in 7..=1000 {
            assert!(perrin_value(i) < perrin_value(i + 1), "index {i}");
        }
    }

    #[test]
    fn even_count_steps_by_zero_or_one() {
        for n in 0..10_000 {
            let d = even_count(n + 1) - even_count(n);
            assert!(d <= 1);
            assert_eq!(even_indices(n).len(), even_count(n));
        }
    }

    #[test]
    fn shared_across_threads() {
        let seq = PerrinSequence::new();
        std::thread::scope(|s| {
            for t in 0..4 {
                let seq = &seq;
                s.spawn(move || {
                    for i in (0..400).rev().skip(t) {
                        assert_eq!(seq.parity(i), perrin_parity(i));
                    }
                });
            }
        });
        assert_eq!(seq.value(9), BigUint::from(10u32));
    }
}
