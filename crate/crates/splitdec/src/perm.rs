//! Permutations of `{0, .., degree-1}` with cycle-notation I/O.
//!
//! Products compose left to right: `(a * b)` means "apply `a`, then `b`",
//! so conjugation `x^g = g⁻¹ x g` moves the support of `x` by `g`.

use std::fmt;

use crate::{Error, Result};

/// A bijection on `{0, .., degree-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n || seen[i] {
                return Err(Error::Validation(format!(
                    "image table {:?} is not a bijection on 0..{}",
                    images, n
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&mid| other.images[mid as usize])
                .collect(),
        }
    }

    /// Writes the image table of `self` followed by `other` into `out`.
    pub fn then_into(&self, other: &Permutation, out: &mut Vec<u16>) {
        out.clear();
        out.extend(self.images.iter().map(|&mid| other.images[mid as usize]));
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Least `k >= 1` with `self^k` the identity (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Cycle decomposition; each cycle starts at its least point, cycles
    /// sorted by least point, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with 1-based points; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&(p + 1).to_string());
            }
            s.push(')');
        }
        s
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the
    /// identity. Whitespace and commas inside parentheses are both accepted.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let bad = |msg: String| Error::Validation(format!("bad cycle string {s:?}: {msg}"));
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(bad("empty".into()));
        }
        let mut moved = vec![false; degree];
        let mut chars = trimmed.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != '(' {
                return Err(bad(format!("expected '(' but found {c:?}")));
            }
            chars.next();
            let mut body = String::new();
            let mut closed = false;
            for c in chars.by_ref() {
                if c == ')' {
                    closed = true;
                    break;
                }
                if c == '(' {
                    return Err(bad("nested '('".into()));
                }
                body.push(c);
            }
            if !closed {
                return Err(bad("unclosed '('".into()));
            }
            let points: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| bad(format!("invalid point {t:?}")))
                })
                .collect::<Result<_>>()?;
            if points.len() == 1 {
                return Err(bad("cycle of length 1".into()));
            }
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(bad(format!("point {p} out of range 1..={degree}")));
                }
                if moved[p - 1] {
                    return Err(bad(format!("point {p} appears twice")));
                }
                moved[p - 1] = true;
            }
            for i in 0..points.len() {
                let from = points[i] - 1;
                let to = points[(i + 1) % points.len()] - 1;
                images[from] = to as u16;
            }
        }
        Ok(Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn compose_left_to_right() {
        // (1 2) then (2 3): 1 -> 2 -> 3.
        let a = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let b = Permutation::parse_cycles("(2 3)", 3).unwrap();
        let ab = a.then(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.cycle_string(), "(1 3 2)");
    }

    #[test]
    fn identity_round_trip() {
        let id = Permutation::identity(5);
        assert_eq!(id.cycle_string(), "()");
        assert_eq!(Permutation::parse_cycles("()", 5).unwrap(), id);
        assert_eq!(id.order(), 1);
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(Permutation::parse_cycles("(1 2", 4).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 4).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 4).is_err());
        assert!(Permutation::parse_cycles("(1 5)", 4).is_err());
        assert!(Permutation::parse_cycles("(3)", 4).is_err());
    }

    #[test]
    fn four_cycle_order() {
        let c = Permutation::parse_cycles("(1 2 3 4)", 4).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(c.then(&c).cycle_string(), "(1 3)(2 4)");
        assert!(c.then(&c.inverse()).is_identity());
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just(degree).prop_perturb(move |d, mut rng| {
            let mut images: Vec<u16> = (0..d as u16).collect();
            for i in (1..d).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                images.swap(i, j);
            }
            Permutation::from_images(images).unwrap()
        })
    }

    proptest! {
        #[test]
        fn cycle_string_round_trips(p in arb_perm(9)) {
            let s = p.cycle_string();
            let q = Permutation::parse_cycles(&s, 9).unwrap();
            prop_assert_eq!(p, q);
        }

        #[test]
        fn composition_associative(a in arb_perm(8), b in arb_perm(8), c in arb_perm(8)) {
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        }

        #[test]
        fn inverse_cancels(p in arb_perm(10)) {
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert!(p.inverse().then(&p).is_identity());
        }
    }
}
