//! Small-integer prime arithmetic for group orders.

/// Distinct prime divisors of `n`, ascending. Empty for `n <= 1`.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// The largest divisor of `n` all of whose prime factors satisfy `keep`.
pub fn part(mut n: u64, keep: impl Fn(u64) -> bool) -> u64 {
    let mut acc = 1;
    for p in prime_divisors(n) {
        while n.is_multiple_of(p) {
            n /= p;
            if keep(p) {
                acc *= p;
            }
        }
    }
    acc
}
