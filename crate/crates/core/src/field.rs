//! Arithmetic in small finite field extensions `F_{p^r}` with the norm map
//! down to `F_p`.
//!
//! Elements are indexed `0..p^r` by their coefficient vector in base `p`
//! (constant coefficient least significant), relative to a deterministically
//! chosen modulus: the lexicographically smallest monic irreducible, scanning
//! candidate coefficient vectors in increasing base-`p` counting order. Graphs
//! built over these fields are therefore reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Orders above this are rejected; everything here is meant for desk-scale
/// constructions where relations are materialized as dense matrices.
const MAX_ORDER: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    EvenCharacteristic(u64),
    DegreeZero,
    TooLarge { p: u64, r: usize },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::EvenCharacteristic(p) => {
                write!(f, "characteristic must be an odd prime, got {p}")
            }
            FieldError::DegreeZero => write!(f, "extension degree must be at least 1"),
            FieldError::TooLarge { p, r } => write!(f, "field of order {p}^{r} is too large"),
        }
    }
}

impl core::error::Error for FieldError {}

/// The field `F_{p^r}` for an odd prime `p`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    r: usize,
    /// Monic irreducible modulus, coefficients `c_0..c_r` with `c_r = 1`.
    modulus: Vec<u64>,
    order: u64,
    /// `(p^r - 1) / (p - 1)`, the norm exponent and the norm-1 kernel size.
    norm_exp: u64,
}

impl FiniteField {
    pub fn new(p: u64, r: usize) -> Result<Self, FieldError> {
        if r == 0 {
            return Err(FieldError::DegreeZero);
        }
        if p.is_multiple_of(2) {
            return Err(FieldError::EvenCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        let mut order: u64 = 1;
        for _ in 0..r {
            order = order
                .checked_mul(p)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or(FieldError::TooLarge { p, r })?;
        }
        let modulus = smallest_irreducible(p, r);
        let norm_exp = (order - 1) / (p - 1);
        let field = Self {
            p,
            r,
            modulus,
            order,
            norm_exp,
        };
        field.self_check();
        Ok(field)
    }

    /// Construction-time sanity checks: sampled inverses and the norm-kernel
    /// count. Failures would mean an arithmetic bug, so they panic.
    fn self_check(&self) {
        let step = (self.order as usize / 64).max(1);
        for a in (1..self.order).step_by(step) {
            let inv = self.inv(a).expect("nonzero elements are invertible");
            assert_eq!(self.mul(a, inv), 1, "a * a^-1 != 1 for a = {a}");
        }
        let kernel = (1..self.order).filter(|&z| self.norm(z) == 1).count() as u64;
        assert_eq!(
            kernel, self.norm_exp,
            "norm-1 kernel has size {kernel}, expected (p^r - 1)/(p - 1) = {}",
            self.norm_exp
        );
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    /// Number of field elements, `p^r`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn decode(&self, a: u64) -> Vec<u64> {
        let mut a = a;
        let mut coeffs = vec![0u64; self.r];
        for c in coeffs.iter_mut() {
            *c = a % self.p;
            a /= self.p;
        }
        coeffs
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c % self.p)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let diff: Vec<u64> = ca
            .iter()
            .zip(&cb)
            .map(|(x, y)| (x + self.p - y) % self.p)
            .collect();
        self.encode(&diff)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let prod = poly_mul(&self.decode(a), &self.decode(b), self.p);
        let rem = poly_rem(prod, &self.modulus, self.p);
        self.encode(&rem)
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        // a^(p^r - 2); the order is small enough that this beats carrying a
        // polynomial extended Euclid around.
        Some(self.pow(a, self.order - 2))
    }

    /// The field norm down to `F_p`: `N(z) = z^((p^r - 1)/(p - 1))`. The
    /// result always lies in the prime field.
    pub fn norm(&self, a: u64) -> u64 {
        let n = self.pow(a, self.norm_exp);
        let coeffs = self.decode(n);
        debug_assert!(
            coeffs[1..].iter().all(|&c| c == 0),
            "norm left the prime field"
        );
        coeffs[0]
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

// --- dense polynomial arithmetic over F_p, little-endian coefficients ---

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let deg_m = m.len() - 1;
    poly_trim(&mut a);
    while a.len() > deg_m {
        let lead = a[a.len() - 1];
        let shift = a.len() - 1 - deg_m;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + (p - lead % p) * c) % p;
            }
        }
        a.pop();
        poly_trim(&mut a);
    }
    a.resize(deg_m, 0);
    a
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let deg_m = m.len() - 1;
    let mut b = poly_rem(base.to_vec(), m, p);
    let mut acc = vec![0u64; deg_m];
    if deg_m > 0 {
        acc[0] = 1;
    }
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(poly_mul(&acc, &b, p), m, p);
        }
        b = poly_rem(poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // Make b monic, then reduce.
        let lead = *b.last().expect("nonempty");
        let lead_inv = mod_inv(lead, p);
        let monic: Vec<u64> = b.iter().map(|&c| c * lead_inv % p).collect();
        let r = poly_rem_exact(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

/// Like [`poly_rem`] but without padding, for gcd chains.
fn poly_rem_exact(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = poly_rem(a.to_vec(), m, p);
    poly_trim(&mut r);
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Frobenius-based irreducibility test for a monic polynomial of degree `r`:
/// `x^(p^r) = x (mod f)` and `gcd(x^(p^(r/q)) - x, f) = 1` for each prime
/// `q | r`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let r = f.len() - 1;
    let x = [0u64, 1];
    let p_pow = |k: usize| -> u64 { (0..k).fold(1u64, |acc, _| acc * p) };
    let mut xq = poly_powmod(&x, p_pow(r), f, p);
    poly_trim(&mut xq);
    let mut x_reduced = poly_rem(x.to_vec(), f, p);
    poly_trim(&mut x_reduced);
    if xq != x_reduced {
        return false;
    }
    prime_divisors(r)
        .into_iter()
        .all(|q| frobenius_coprime(f, p, p_pow(r / q)))
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn frobenius_coprime(f: &[u64], p: u64, pk: u64) -> bool {
    let x = [0u64, 1];
    let h = poly_powmod(&x, pk, f, p);
    // h - x
    let mut diff: Vec<u64> = h;
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(&mut diff);
    let g = poly_gcd(f.to_vec(), diff, p);
    g.len() == 1
}

/// The lexicographically smallest monic irreducible of degree `r` over `F_p`,
/// scanning candidates `x^r + a_{r-1} x^{r-1} + ... + a_0` in increasing
/// base-`p` counting order of `(a_0, ..., a_{r-1})`.
fn smallest_irreducible(p: u64, r: usize) -> Vec<u64> {
    let mut count: u64 = 1;
    for _ in 0..r {
        count *= p;
    }
    for idx in 0..count {
        let mut f = vec![0u64; r + 1];
        let mut a = idx;
        for c in f.iter_mut().take(r) {
            *c = a % p;
            a /= p;
        }
        f[r] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}
