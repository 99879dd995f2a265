//! Finite fields GF(p^m) as polynomial rings modulo a verified-irreducible
//! modulus, with elements encoded as base-p digit vectors packed into a
//! single index.

use crate::{Error, Result};

/// GF(p^m). Element `i` encodes the coefficient vector of a polynomial of
/// degree `< m` in base-p digits, least significant first; `0` is zero and
/// `1` is one.
#[derive(Clone, Debug)]
pub struct FiniteField {
    pub p: usize,
    pub m: usize,
    /// Monic modulus of degree `m`, coefficient list of length `m + 1`.
    pub modulus: Vec<usize>,
    pub q: usize,
    add_table: Vec<usize>,
    mul_table: Vec<usize>,
    neg_table: Vec<usize>,
    inv_table: Vec<usize>,
}

/// Documented moduli for the shipped fields, so all outputs are
/// reproducible: GF(4) via x²+x+1, GF(8) via x³+x+1, GF(9) via x²+1.
pub fn default_modulus(p: usize, m: usize) -> Option<Vec<usize>> {
    match (p, m) {
        (_, 1) => Some(vec![0, 1]),
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (3, 2) => Some(vec![1, 0, 1]),
        _ => None,
    }
}

impl FiniteField {
    /// Constructs GF(p^m), verifying that `p` is prime and the modulus is a
    /// monic degree-`m` polynomial irreducible over GF(p).
    pub fn new(p: usize, m: usize, modulus: Vec<usize>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Validation(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::Validation("extension degree must be >= 1".into()));
        }
        if modulus.len() != m + 1 || modulus[m] % p != 1 {
            return Err(Error::Validation(format!(
                "modulus must be monic of degree {m}"
            )));
        }
        let modulus: Vec<usize> = modulus.into_iter().map(|c| c % p).collect();
        if m > 1 && !is_irreducible(&modulus, p) {
            return Err(Error::Validation(format!(
                "modulus {modulus:?} is reducible over GF({p})"
            )));
        }
        let q = p.pow(m as u32);
        let mut field = FiniteField {
            p,
            m,
            modulus,
            q,
            add_table: vec![0; q * q],
            mul_table: vec![0; q * q],
            neg_table: vec![0; q],
            inv_table: vec![0; q],
        };
        for a in 0..q {
            for b in 0..q {
                field.add_table[a * q + b] = digits_to_index(
                    &poly_add(&index_to_digits(a, p, m), &index_to_digits(b, p, m), p),
                    p,
                );
                let prod = poly_mul_mod(
                    &index_to_digits(a, p, m),
                    &index_to_digits(b, p, m),
                    &field.modulus,
                    p,
                );
                field.mul_table[a * q + b] = digits_to_index(&prod, p);
            }
        }
        for a in 0..q {
            let da = index_to_digits(a, p, m);
            let neg: Vec<usize> = da.iter().map(|&c| (p - c) % p).collect();
            field.neg_table[a] = digits_to_index(&neg, p);
        }
        for a in 1..q {
            for b in 1..q {
                if field.mul_table[a * q + b] == 1 {
                    field.inv_table[a] = b;
                    break;
                }
            }
            if field.inv_table[a] == 0 {
                return Err(Error::Validation(format!(
                    "element {a} has no inverse; modulus is not irreducible"
                )));
            }
        }
        Ok(field)
    }

    /// GF(p^m) with the documented modulus for that size.
    pub fn with_default_modulus(p: usize, m: usize) -> Result<Self> {
        let modulus = default_modulus(p, m).ok_or_else(|| {
            Error::Validation(format!(
                "no default modulus shipped for GF({p}^{m}); supply one"
            ))
        })?;
        FiniteField::new(p, m, modulus)
    }

    /// GF(q) for a prime power `q`, with the documented modulus.
    pub fn of_order(q: usize) -> Result<Self> {
        let (p, m) = factor_prime_power(q).ok_or_else(|| {
            Error::Validation(format!("{q} is not a prime power"))
        })?;
        FiniteField::with_default_modulus(p, m)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add_table[a * self.q + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.q + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg_table[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        self.inv_table[a]
    }

    /// A generator of the (cyclic) multiplicative group.
    pub fn multiplicative_generator(&self) -> usize {
        'outer: for g in 2..self.q {
            let mut x = g;
            for _ in 1..self.q - 1 {
                if x == 1 {
                    continue 'outer;
                }
                x = self.mul(x, g);
            }
            if x == 1 {
                return g;
            }
        }
        // q = 2: the unit element generates the trivial group.
        1
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        let mut acc = 1;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn factor_prime_power(q: usize) -> Option<(usize, usize)> {
    for p in 2..=q {
        if !is_prime(p) {
            continue;
        }
        if q % p == 0 {
            let mut m = 0;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
    }
    None
}

fn index_to_digits(mut i: usize, p: usize, m: usize) -> Vec<usize> {
    let mut digits = vec![0; m];
    for d in digits.iter_mut() {
        *d = i % p;
        i /= p;
    }
    digits
}

fn digits_to_index(digits: &[usize], p: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn poly_add(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
        .collect()
}

fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let mut prod = vec![0usize; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&prod, modulus, p)
}

fn poly_rem(a: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let m = modulus.len() - 1;
    let mut rem = a.to_vec();
    while rem.len() > m {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        if lead != 0 {
            // modulus is monic, so subtract lead * x^(deg-m) * modulus
            for (i, &c) in modulus.iter().enumerate() {
                let idx = deg - m + i;
                rem[idx] = (rem[idx] + p * p - (lead * c) % p) % p;
            }
        }
        rem.pop();
    }
    rem.resize(m, 0);
    rem
}

/// Trial division by every monic polynomial of degree `1..=m/2`.
fn is_irreducible(modulus: &[usize], p: usize) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        // Iterate monic polynomials of degree d.
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut div = index_to_digits(low, p, d);
            div.push(1);
            if poly_divides(&div, modulus, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(div: &[usize], poly: &[usize], p: usize) -> bool {
    // Long division of poly by monic div; divisible iff remainder is zero.
    let mut rem = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        if lead != 0 {
            for (i, &c) in div.iter().enumerate() {
                let idx = deg - d + i;
                rem[idx] = (rem[idx] + p * p - (lead * c) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_arithmetic() {
        let f = FiniteField::of_order(4).unwrap();
        // x * x = x + 1 under x² + x + 1.
        let x = 2;
        assert_eq!(f.mul(x, x), 3);
        assert_eq!(f.add(x, 1), 3);
    }

    #[test]
    fn gf9_arithmetic() {
        let f = FiniteField::of_order(9).unwrap();
        // x * x = -1 = 2 under x² + 1.
        let x = 3; // digits (0, 1)
        assert_eq!(f.mul(x, x), 2);
    }

    #[test]
    fn gf8_arithmetic() {
        let f = FiniteField::of_order(8).unwrap();
        // x³ = x + 1 under x³ + x + 1.
        let x = 2;
        assert_eq!(f.mul(f.mul(x, x), x), 3);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x² + 1 = (x+1)² over GF(2).
        assert!(FiniteField::new(2, 2, vec![1, 0, 1]).is_err());
        // x² + 2 = (x+1)(x+2) over GF(3).
        assert!(FiniteField::new(3, 2, vec![2, 0, 1]).is_err());
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in [4, 5, 7, 8, 9] {
            let f = FiniteField::of_order(q).unwrap();
            let g = f.multiplicative_generator();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..q - 1 {
                x = f.mul(x, g);
                seen.insert(x);
            }
            assert_eq!(seen.len(), q - 1);
        }
    }

    #[test]
    fn inverses() {
        let f = FiniteField::of_order(8).unwrap();
        for a in 1..8 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
