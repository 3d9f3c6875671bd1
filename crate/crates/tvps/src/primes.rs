//! Prime infrastructure: a sieve that grows on demand, exact prime
//! counting, and the indexed label sequence 1, 2, 3, 5, 7, ... (index 0
//! maps to 1, index a >= 1 maps to the a-th prime) used by the chain
//! labeler and the prime-support composer.

use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Sorted list of all primes up to `limit`, extended segment by segment
/// (growth factor 2) when a query exceeds the current limit.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    // Direct base: doubling from limit 4 keeps every segment's root
    // within the primes already known.
    fn base() -> PrimeTable {
        PrimeTable {
            limit: 4,
            primes: vec![2, 3],
        }
    }

    /// Table holding exactly the primes up to `limit`.
    pub fn new(limit: u64) -> Self {
        let mut table = PrimeTable::base();
        while table.limit < limit {
            let target = table.limit * 2;
            table.sieve_segment(target);
        }
        let cut = table.primes.partition_point(|&p| p <= limit);
        table.primes.truncate(cut);
        table.limit = limit.max(1);
        table
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Extends the sieve so that all primes up to `x` are known; grows by
    /// doubling, so it may overshoot.
    pub fn ensure_limit(&mut self, x: u64) {
        if x <= self.limit {
            return;
        }
        if self.limit < 4 {
            *self = PrimeTable::base();
        }
        while self.limit < x {
            let target = self.limit * 2;
            self.sieve_segment(target);
        }
    }

    // Sieves (self.limit, target] using the primes already known; the
    // caller guarantees primes up to sqrt(target) are present.
    fn sieve_segment(&mut self, target: u64) {
        let lo = self.limit + 1;
        let len = (target - self.limit) as usize;
        let mut composite = vec![false; len];
        let root = integer_sqrt(target);
        for &p in &self.primes {
            if p > root {
                break;
            }
            let mut m = lo.div_ceil(p) * p;
            if m < p * p {
                m = p * p;
            }
            while m <= target {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        for (i, &c) in composite.iter().enumerate() {
            let x = lo + i as u64;
            if !c && x >= 2 {
                self.primes.push(x);
            }
        }
        self.limit = target;
    }

    /// Exact prime count pi(x); grows the table if needed.
    pub fn prime_count(&mut self, x: u64) -> usize {
        self.ensure_limit(x);
        self.primes.partition_point(|&p| p <= x)
    }

    /// Indexed label: index 0 is 1, index a >= 1 is the a-th prime.
    pub fn indexed_label(&mut self, a: usize) -> u64 {
        if a == 0 {
            return 1;
        }
        while self.primes.len() < a {
            self.ensure_limit(self.limit * 2);
        }
        self.primes[a - 1]
    }

    /// Largest prime `<= x`; errors for x < 2.
    pub fn greatest_prime_le(&mut self, x: u64) -> Result<u64> {
        if x < 2 {
            return Err(Error::NoPrime(x));
        }
        self.ensure_limit(x);
        let k = self.primes.partition_point(|&p| p <= x);
        Ok(self.primes[k - 1])
    }

    pub fn is_prime(&mut self, x: u64) -> bool {
        if x < 2 {
            return false;
        }
        self.ensure_limit(x);
        self.primes.binary_search(&x).is_ok()
    }

    /// Smallest prime `>= x`.
    pub fn smallest_prime_ge(&mut self, x: u64) -> u64 {
        let mut limit = x.max(2);
        loop {
            self.ensure_limit(limit);
            let k = self.primes.partition_point(|&p| p < x);
            if k < self.primes.len() {
                return self.primes[k];
            }
            limit *= 2;
        }
    }
}

/// Builds a fresh table holding all primes up to `limit`.
pub fn primes_up_to(limit: u64) -> PrimeTable {
    PrimeTable::new(limit)
}

fn shared() -> &'static Mutex<PrimeTable> {
    static TABLE: OnceLock<Mutex<PrimeTable>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(PrimeTable::new(1 << 10)))
}

/// Indexed label from the shared table: 1, 2, 3, 5, 7, ...
pub fn nth_indexed_label(a: usize) -> u64 {
    shared().lock().unwrap().indexed_label(a)
}

/// Largest prime `<= x` from the shared table.
pub fn greatest_prime_le(x: u64) -> Result<u64> {
    shared().lock().unwrap().greatest_prime_le(x)
}

/// Exact pi(x) from the shared table.
pub fn prime_count(x: u64) -> usize {
    shared().lock().unwrap().prime_count(x)
}

pub fn is_prime(x: u64) -> bool {
    shared().lock().unwrap().is_prime(x)
}

/// Smallest prime `>= x` from the shared table.
pub fn smallest_prime_ge(x: u64) -> u64 {
    shared().lock().unwrap().smallest_prime_ge(x)
}

pub fn integer_sqrt(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let t = primes_up_to(10);
        assert_eq!(t.primes(), &[2, 3, 5, 7]);
        let t = primes_up_to(1);
        assert!(t.primes().is_empty());
        let mut t = primes_up_to(100);
        assert_eq!(t.prime_count(100), 25);
        assert_eq!(t.prime_count(10), 4);
    }

    #[test]
    fn indexed_labels() {
        assert_eq!(nth_indexed_label(0), 1);
        assert_eq!(nth_indexed_label(1), 2);
        assert_eq!(nth_indexed_label(2), 3);
        assert_eq!(nth_indexed_label(3), 5);
        assert_eq!(nth_indexed_label(4), 7);
        assert_eq!(nth_indexed_label(10), 29);
    }

    #[test]
    fn indexed_labels_strictly_increasing() {
        let mut prev = 0;
        for a in 0..500 {
            let v = nth_indexed_label(a);
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn greatest_prime() {
        assert_eq!(greatest_prime_le(10).unwrap(), 7);
        assert_eq!(greatest_prime_le(2).unwrap(), 2);
        assert_eq!(greatest_prime_le(30).unwrap(), 29);
        assert!(greatest_prime_le(1).is_err());
    }

    #[test]
    fn bertrand_gap() {
        // There is always a prime in (x, 2x], so greatest_prime_le(2x) > x.
        for x in 2..=2000u64 {
            assert!(greatest_prime_le(2 * x).unwrap() > x, "x={x}");
        }
    }

    #[test]
    fn smallest_prime_above() {
        assert_eq!(smallest_prime_ge(2), 2);
        assert_eq!(smallest_prime_ge(8), 11);
        assert_eq!(smallest_prime_ge(13), 13);
        assert_eq!(smallest_prime_ge(90), 97);
    }

    #[test]
    fn growth_consistency() {
        let mut grown = PrimeTable::new(2);
        assert_eq!(grown.primes(), &[2]);
        grown.ensure_limit(10_000);
        let fresh = PrimeTable::new(10_000);
        assert!(grown.primes().starts_with(fresh.primes()));
        assert_eq!(grown.prime_count(10_000), fresh.primes().len());
    }
}
