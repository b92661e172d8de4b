//! Small integer helpers used by the integer-base scalar scheme.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Product of the distinct primes dividing `n` (`radical(0) = 0`, `radical(1) = 1`).
pub fn radical(mut n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            r *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        r *= n;
    }
    r
}

pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let r = radical(n);
    // a radical with one prime factor is itself prime
    (2..r).take_while(|d| d * d <= r).all(|d| !r.is_multiple_of(d))
}

pub fn divisors(n: u64) -> alloc::vec::Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
