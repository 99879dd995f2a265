//! Basic family constructors shared by isomorphism recognition and the
//! catalog: small permutation models and a regular-representation fallback
//! for groups given by an explicit multiplication table.

use crate::group::{close_generators, Group, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;
use crate::{Error, Result};

pub fn cyclic(k: usize) -> Result<Group> {
    if k == 0 {
        return Err(Error::Validation("cyclic group order must be positive".into()));
    }
    if k == 1 {
        return close_generators(1, &[], "C1", DEFAULT_ELEMENT_CAP);
    }
    let c = Permutation::from_images((0..k).map(|i| ((i + 1) % k) as u16).collect())?;
    close_generators(k, &[c], format!("C{k}"), DEFAULT_ELEMENT_CAP)
}

/// Dihedral group of order `2k` on `k` points, `k >= 3`.
pub fn dihedral(order: usize) -> Result<Group> {
    if order % 2 != 0 || order < 6 {
        return Err(Error::Validation(format!(
            "dihedral order must be an even number >= 6, got {order}"
        )));
    }
    let k = order / 2;
    let r = Permutation::from_images((0..k).map(|i| ((i + 1) % k) as u16).collect())?;
    let s = Permutation::from_images((0..k).map(|i| ((k - i) % k) as u16).collect())?;
    let g = close_generators(k, &[r, s], format!("D{order}"), DEFAULT_ELEMENT_CAP)?;
    debug_assert_eq!(g.order(), order);
    Ok(g)
}

pub fn symmetric(k: usize) -> Result<Group> {
    if k < 2 {
        return Err(Error::Validation("symmetric group needs k >= 2".into()));
    }
    let c = Permutation::from_images((0..k).map(|i| ((i + 1) % k) as u16).collect())?;
    let t = Permutation::parse_cycles("(1 2)", k)?;
    close_generators(k, &[c, t], format!("S{k}"), DEFAULT_ELEMENT_CAP)
}

pub fn alternating(k: usize) -> Result<Group> {
    if k < 3 {
        return Err(Error::Validation("alternating group needs k >= 3".into()));
    }
    let mut gens = vec![Permutation::parse_cycles("(1 2 3)", k)?];
    if k > 3 {
        // (1 2 .. k) for odd k, (2 3 .. k) for even k, both even permutations.
        let long = if k % 2 == 1 {
            let images: Vec<u16> = (0..k).map(|i| ((i + 1) % k) as u16).collect();
            Permutation::from_images(images)?
        } else {
            let mut images: Vec<u16> = (0..k as u16).collect();
            for i in 1..k {
                images[i] = if i + 1 < k { (i + 1) as u16 } else { 1 };
            }
            Permutation::from_images(images)?
        };
        gens.push(long);
    }
    close_generators(k, &gens, format!("A{k}"), DEFAULT_ELEMENT_CAP)
}

pub fn klein() -> Result<Group> {
    let a = Permutation::parse_cycles("(1 2)(3 4)", 4)?;
    let b = Permutation::parse_cycles("(1 3)(2 4)", 4)?;
    close_generators(4, &[a, b], "V4", DEFAULT_ELEMENT_CAP)
}

/// Generalized quaternion group of order `2^k >= 8` (dicyclic, 2-power).
pub fn generalized_quaternion(order: usize) -> Result<Group> {
    if !order.is_power_of_two() || order < 8 {
        return Err(Error::Validation(format!(
            "generalized quaternion order must be a power of two >= 8, got {order}"
        )));
    }
    dicyclic(order, format!("Q{order}"))
}

/// Dicyclic group of order `4n`: `a` of order `2n`, `b² = aⁿ`, `aᵇ = a⁻¹`,
/// realized by its regular representation.
pub fn dicyclic(order: usize, name: impl Into<String>) -> Result<Group> {
    if order % 4 != 0 || order < 8 {
        return Err(Error::Validation(format!(
            "dicyclic order must be a multiple of 4 and >= 8, got {order}"
        )));
    }
    let two_n = order / 2;
    let n = order / 4;
    // Element (i, e) with i mod 2n, e in {0,1}; index = e * 2n + i.
    let id = |i: usize, e: usize| (e * two_n + i % two_n) as u16;
    let mul = |i1: usize, e1: usize, i2: usize, e2: usize| -> (usize, usize) {
        if e1 == 0 {
            ((i1 + i2) % two_n, e2)
        } else if e2 == 0 {
            ((i1 + two_n - i2 % two_n) % two_n, 1)
        } else {
            ((i1 + two_n - i2 % two_n + n) % two_n, 0)
        }
    };
    regular_from_table(order, name, |x, y| {
        let (i1, e1) = (x % two_n, x / two_n);
        let (i2, e2) = (y % two_n, y / two_n);
        let (i, e) = mul(i1, e1, i2, e2);
        id(i, e) as usize
    })
}

/// Semidihedral group of order `2^k >= 16`: `x ↦ x+1` and `x ↦ (2^(k-2)-1)x`
/// on `Z_{2^(k-1)}`.
pub fn semidihedral(order: usize) -> Result<Group> {
    if !order.is_power_of_two() || order < 16 {
        return Err(Error::Validation(format!(
            "semidihedral order must be a power of two >= 16, got {order}"
        )));
    }
    let k = order / 2;
    let a = Permutation::from_images((0..k).map(|i| ((i + 1) % k) as u16).collect())?;
    let m = k / 2 - 1;
    let b = Permutation::from_images((0..k).map(|i| ((i * m) % k) as u16).collect())?;
    let g = close_generators(k, &[a, b], format!("SD{order}"), DEFAULT_ELEMENT_CAP)?;
    debug_assert_eq!(g.order(), order);
    Ok(g)
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(a: &Group, b: &Group, name: impl Into<String>) -> Result<Group> {
    let degree = a.degree() + b.degree();
    let mut gens = Vec::new();
    for &gi in a.generators() {
        let mut images: Vec<u16> = a.element(gi).images().to_vec();
        images.extend((a.degree()..degree).map(|i| i as u16));
        gens.push(Permutation::from_images(images)?);
    }
    for &gi in b.generators() {
        let mut images: Vec<u16> = (0..a.degree() as u16).collect();
        images.extend(b.element(gi).images().iter().map(|&x| x + a.degree() as u16));
        gens.push(Permutation::from_images(images)?);
    }
    let g = close_generators(degree, &gens, name, DEFAULT_ELEMENT_CAP)?;
    if g.order() != a.order() * b.order() {
        return Err(Error::Validation(format!(
            "direct product closure produced order {} instead of {}",
            g.order(),
            a.order() * b.order()
        )));
    }
    Ok(g)
}

pub fn s3_times_s3() -> Result<Group> {
    let s3a = symmetric(3)?;
    let s3b = symmetric(3)?;
    direct_product(&s3a, &s3b, "S3xS3")
}

/// Builds a group from an abstract multiplication table on `0..order` with
/// identity 0, via the regular representation (right translations).
pub fn regular_from_table(
    order: usize,
    name: impl Into<String>,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<Group> {
    // Right translation by g sends x to x * g; with left-to-right permutation
    // composition this embeds the table homomorphically.
    let mut gens = Vec::new();
    for g in 1..order {
        let images: Vec<u16> = (0..order).map(|x| mul(x, g) as u16).collect();
        gens.push(Permutation::from_images(images)?);
    }
    let g = close_generators(order, &gens, name, DEFAULT_ELEMENT_CAP)?;
    if g.order() != order {
        return Err(Error::Validation(format!(
            "multiplication table is not a group: closure has order {}",
            g.order()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(dihedral(12).unwrap().order(), 12);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(klein().unwrap().order(), 4);
        assert_eq!(generalized_quaternion(16).unwrap().order(), 16);
        assert_eq!(semidihedral(16).unwrap().order(), 16);
        assert_eq!(s3_times_s3().unwrap().order(), 36);
        assert_eq!(dicyclic(12, "Dic3").unwrap().order(), 12);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q8 = generalized_quaternion(8).unwrap();
        let involutions = (1..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(q8.center().len(), 2);
    }

    #[test]
    fn dicyclic12_structure() {
        let g = dicyclic(12, "Dic3").unwrap();
        assert_eq!(g.center().len(), 2);
        let max_order = (0..12).map(|x| g.element_order(x)).max().unwrap();
        assert_eq!(max_order, 6);
        let fours = (0..12).filter(|&x| g.element_order(x) == 4).count();
        assert_eq!(fours, 6);
    }
}
