//! Small exact integer helpers shared by the decision modules.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `e` with `p^e == n`, or `None` if `n` is not a power of `p`.
pub fn exact_log(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    (n == 1).then_some(e)
}

pub fn pow(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("prime power overflows u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn logs() {
        assert_eq!(exact_log(1, 2), Some(0));
        assert_eq!(exact_log(8, 2), Some(3));
        assert_eq!(exact_log(12, 2), None);
        assert_eq!(exact_log(27, 3), Some(3));
        assert_eq!(exact_log(0, 3), None);
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd(12, 8), 4);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(1, 4), 1);
    }
}
