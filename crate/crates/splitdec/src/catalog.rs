//! Group constructors and the shipped catalog.
//!
//! Families the library can build directly: cyclic, dihedral, generalized
//! quaternion, semidihedral, symmetric, alternating, Klein, extraspecial of
//! order p³ (both exponent types), direct products, Frobenius semidirect
//! products with an abelian kernel, the 72-element group (C3×C3)⋊D8 with
//! the rotation swapping the two C3 factors, and PSL₂/PGL₂ over a finite
//! field acting on the projective line. Everything else — in particular the
//! dicyclic groups and the sporadic order-16/24 types needed for a complete
//! order ≤ 24 sweep, and Sz(8) — ships as generator files validated against
//! the manifest on load.

use std::fmt;
use std::path::Path;

use crate::field::FiniteField;
use crate::gens;
use crate::group::{close_generators, Group, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;
use crate::{Error, Result};

/// A named group constructor with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    GeneralizedQuaternion(usize),
    Semidihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Klein,
    /// Extraspecial group of order p³; for odd p `exponent_p` selects the
    /// exponent-p type versus exponent-p². For p = 2 the two types are D8
    /// and Q8 respectively.
    ExtraspecialP3 { p: usize, exponent_p: bool },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// Semidirect product of an abelian kernel with invariant factors
    /// `kernel` by the matrix group generated by `actions`; validated to be
    /// a Frobenius group with the kernel as Frobenius kernel.
    FrobeniusSemidirect {
        kernel: Vec<usize>,
        actions: Vec<Vec<Vec<i64>>>,
        complement_order: usize,
    },
    /// (C3×C3)⋊D8 of order 72: generators u, v, x, y with u^x = v,
    /// v^x = u⁻¹, u^y = u, v^y = v⁻¹.
    Paper72,
    Psl2(usize),
    Pgl2(usize),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(k) => write!(f, "cyclic({k})"),
            GroupSpec::Dihedral(k) => write!(f, "dihedral({k})"),
            GroupSpec::GeneralizedQuaternion(k) => write!(f, "quaternion({k})"),
            GroupSpec::Semidihedral(k) => write!(f, "semidihedral({k})"),
            GroupSpec::Symmetric(k) => write!(f, "symmetric({k})"),
            GroupSpec::Alternating(k) => write!(f, "alternating({k})"),
            GroupSpec::Klein => write!(f, "klein"),
            GroupSpec::ExtraspecialP3 { p, exponent_p } => {
                write!(f, "extraspecial({p},{})", if *exponent_p { "p" } else { "p2" })
            }
            GroupSpec::DirectProduct(a, b) => write!(f, "product({a},{b})"),
            GroupSpec::FrobeniusSemidirect {
                kernel,
                actions,
                complement_order,
            } => {
                write!(f, "frobenius([")?;
                for (i, k) in kernel.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{k}")?;
                }
                write!(f, "]")?;
                for m in actions {
                    write!(f, ",[")?;
                    for (i, row) in m.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "[")?;
                        for (j, e) in row.iter().enumerate() {
                            if j > 0 {
                                write!(f, ",")?;
                            }
                            write!(f, "{e}")?;
                        }
                        write!(f, "]")?;
                    }
                    write!(f, "]")?;
                }
                write!(f, ",{complement_order})")
            }
            GroupSpec::Paper72 => write!(f, "paper72"),
            GroupSpec::Psl2(q) => write!(f, "psl2({q})"),
            GroupSpec::Pgl2(q) => write!(f, "pgl2({q})"),
        }
    }
}

impl GroupSpec {
    /// Parses constructor strings like `dihedral(16)`,
    /// `product(cyclic(3),symmetric(3))`, or
    /// `frobenius([3,3],[[-1,0],[0,-1]],2)`.
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let mut p = SpecParser {
            chars: s.chars().collect(),
            pos: 0,
            src: s,
        };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> SpecParser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Validation(format!(
            "bad group spec {:?} at offset {}: {}",
            self.src, self.pos, msg
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.pos < self.chars.len() && self.chars[self.pos] == c {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an identifier"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| self.err("expected an integer"))
    }

    fn uint(&mut self) -> Result<usize> {
        let v = self.int()?;
        usize::try_from(v).map_err(|_| self.err("expected a nonnegative integer"))
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        self.eat('[')?;
        let mut out = Vec::new();
        if self.peek() != Some(']') {
            loop {
                out.push(self.int()?);
                if self.peek() == Some(',') {
                    self.eat(',')?;
                } else {
                    break;
                }
            }
        }
        self.eat(']')?;
        Ok(out)
    }

    fn matrix(&mut self) -> Result<Vec<Vec<i64>>> {
        self.eat('[')?;
        let mut out = Vec::new();
        loop {
            out.push(self.int_list()?);
            if self.peek() == Some(',') {
                self.eat(',')?;
            } else {
                break;
            }
        }
        self.eat(']')?;
        Ok(out)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let name = self.ident()?.to_ascii_lowercase();
        match name.as_str() {
            "klein" => Ok(GroupSpec::Klein),
            "paper72" => Ok(GroupSpec::Paper72),
            "cyclic" | "dihedral" | "quaternion" | "generalized_quaternion"
            | "semidihedral" | "symmetric" | "alternating" | "psl2" | "pgl2" => {
                self.eat('(')?;
                let k = self.uint()?;
                self.eat(')')?;
                Ok(match name.as_str() {
                    "cyclic" => GroupSpec::Cyclic(k),
                    "dihedral" => GroupSpec::Dihedral(k),
                    "quaternion" | "generalized_quaternion" => {
                        GroupSpec::GeneralizedQuaternion(k)
                    }
                    "semidihedral" => GroupSpec::Semidihedral(k),
                    "symmetric" => GroupSpec::Symmetric(k),
                    "alternating" => GroupSpec::Alternating(k),
                    "psl2" => GroupSpec::Psl2(k),
                    _ => GroupSpec::Pgl2(k),
                })
            }
            "extraspecial" => {
                self.eat('(')?;
                let p = self.uint()?;
                self.eat(',')?;
                let t = self.ident()?.to_ascii_lowercase();
                self.eat(')')?;
                let exponent_p = match t.as_str() {
                    "p" | "exponent_p" => true,
                    "p2" | "exponent_p2" => false,
                    _ => return Err(self.err("exponent type must be 'p' or 'p2'")),
                };
                Ok(GroupSpec::ExtraspecialP3 { p, exponent_p })
            }
            "product" => {
                self.eat('(')?;
                let a = self.spec()?;
                self.eat(',')?;
                let b = self.spec()?;
                self.eat(')')?;
                Ok(GroupSpec::DirectProduct(Box::new(a), Box::new(b)))
            }
            "frobenius" => {
                self.eat('(')?;
                let kernel: Vec<usize> = self
                    .int_list()?
                    .into_iter()
                    .map(|v| {
                        usize::try_from(v).map_err(|_| self.err("negative kernel invariant"))
                    })
                    .collect::<Result<_>>()?;
                let mut actions = Vec::new();
                loop {
                    self.eat(',')?;
                    if self.peek() == Some('[') {
                        actions.push(self.matrix()?);
                    } else {
                        let complement_order = self.uint()?;
                        self.eat(')')?;
                        return Ok(GroupSpec::FrobeniusSemidirect {
                            kernel,
                            actions,
                            complement_order,
                        });
                    }
                }
            }
            other => Err(self.err(&format!("unknown family {other:?}"))),
        }
    }
}

/// Builds the group a spec describes. Constructed orders are checked
/// against the family's closed form.
pub fn make(spec: &GroupSpec) -> Result<Group> {
    match spec {
        GroupSpec::Cyclic(k) => gens::cyclic(*k),
        GroupSpec::Dihedral(k) => gens::dihedral(*k),
        GroupSpec::GeneralizedQuaternion(k) => gens::generalized_quaternion(*k),
        GroupSpec::Semidihedral(k) => gens::semidihedral(*k),
        GroupSpec::Symmetric(k) => gens::symmetric(*k),
        GroupSpec::Alternating(k) => gens::alternating(*k),
        GroupSpec::Klein => gens::klein(),
        GroupSpec::ExtraspecialP3 { p, exponent_p } => extraspecial_p3(*p, *exponent_p),
        GroupSpec::DirectProduct(a, b) => {
            let ga = make(a)?;
            let gb = make(b)?;
            gens::direct_product(&ga, &gb, spec.to_string())
        }
        GroupSpec::FrobeniusSemidirect {
            kernel,
            actions,
            complement_order,
        } => frobenius_semidirect(kernel, actions, *complement_order, spec.to_string()),
        GroupSpec::Paper72 => paper72(),
        GroupSpec::Psl2(q) => psl2(&FiniteField::of_order(*q)?),
        GroupSpec::Pgl2(q) => pgl2(&FiniteField::of_order(*q)?),
    }
}

/// Extraspecial group of order p³.
///
/// For odd p the exponent-p type acts on F_p² by translations and shears,
/// and the exponent-p² type on Z_{p²} by translation and multiplication by
/// 1+p. For p = 2 the types are D8 (exponent_p) and Q8.
pub fn extraspecial_p3(p: usize, exponent_p: bool) -> Result<Group> {
    if p == 2 {
        return if exponent_p {
            gens::dihedral(8)
        } else {
            gens::generalized_quaternion(8)
        };
    }
    if p < 3 || !(2..p).all(|d| d * d > p || p % d != 0) {
        return Err(Error::Validation(format!("{p} is not an odd prime")));
    }
    let name = format!("extraspecial({p},{})", if exponent_p { "p" } else { "p2" });
    let g = if exponent_p {
        let deg = p * p;
        let idx = |x: usize, y: usize| ((x % p) * p + (y % p)) as u16;
        let sigma = Permutation::from_images(
            (0..deg).map(|i| idx(i / p + 1, i % p)).collect(),
        )?;
        let tau = Permutation::from_images(
            (0..deg).map(|i| idx(i / p, i % p + i / p)).collect(),
        )?;
        close_generators(deg, &[sigma, tau], name, DEFAULT_ELEMENT_CAP)?
    } else {
        let deg = p * p;
        let a = Permutation::from_images((0..deg).map(|i| ((i + 1) % deg) as u16).collect())?;
        let b = Permutation::from_images(
            (0..deg).map(|i| ((i * (1 + p)) % deg) as u16).collect(),
        )?;
        close_generators(deg, &[a, b], name, DEFAULT_ELEMENT_CAP)?
    };
    if g.order() != p * p * p {
        return Err(Error::Validation(format!(
            "extraspecial construction produced order {}, expected {}",
            g.order(),
            p * p * p
        )));
    }
    Ok(g)
}

/// The 72-element group (C3×C3)⋊D8 acting on F_3².
///
/// `generators()[0..4]` are u, v, x, y in that order: u, v generate the
/// kernel, x is the order-4 rotation with u^x = v and v^x = u⁻¹, and y the
/// reflection with u^y = u and v^y = v⁻¹.
pub fn paper72() -> Result<Group> {
    let idx = |x: i64, y: i64| (x.rem_euclid(3) * 3 + y.rem_euclid(3)) as u16;
    let deg = 9;
    let coords = |i: usize| ((i / 3) as i64, (i % 3) as i64);
    let t_u = Permutation::from_images(
        (0..deg)
            .map(|i| {
                let (x, y) = coords(i);
                idx(x + 1, y)
            })
            .collect(),
    )?;
    let t_v = Permutation::from_images(
        (0..deg)
            .map(|i| {
                let (x, y) = coords(i);
                idx(x, y + 1)
            })
            .collect(),
    )?;
    let m_x = Permutation::from_images(
        (0..deg)
            .map(|i| {
                let (x, y) = coords(i);
                idx(-y, x)
            })
            .collect(),
    )?;
    let m_y = Permutation::from_images(
        (0..deg)
            .map(|i| {
                let (x, y) = coords(i);
                idx(x, -y)
            })
            .collect(),
    )?;
    let g = close_generators(deg, &[t_u, t_v, m_x, m_y], "paper72", DEFAULT_ELEMENT_CAP)?;
    if g.order() != 72 {
        return Err(Error::Validation(format!(
            "order-72 construction produced order {}",
            g.order()
        )));
    }
    Ok(g)
}

/// Semidirect product of the abelian kernel `Z_{k1} × … × Z_{kr}` by the
/// matrix group the `actions` generate, realized on the kernel's points.
///
/// Validates that every action matrix is an automorphism, that the matrices
/// generate a group of exactly `complement_order` acting fixed-point-freely,
/// and that the result is a Frobenius group with the kernel as kernel.
pub fn frobenius_semidirect(
    kernel: &[usize],
    actions: &[Vec<Vec<i64>>],
    complement_order: usize,
    name: impl Into<String>,
) -> Result<Group> {
    let r = kernel.len();
    if r == 0 || kernel.iter().any(|&k| k < 2) {
        return Err(Error::Validation(
            "kernel invariants must all be at least 2".into(),
        ));
    }
    let size: usize = kernel.iter().product();
    let decode = |mut i: usize| -> Vec<i64> {
        let mut v = Vec::with_capacity(r);
        for &k in kernel {
            v.push((i % k) as i64);
            i /= k;
        }
        v
    };
    let encode = |v: &[i64]| -> usize {
        let mut idx = 0usize;
        for (j, &k) in kernel.iter().enumerate().rev() {
            idx = idx * k + v[j].rem_euclid(k as i64) as usize;
        }
        idx
    };
    let apply_mat = |m: &Vec<Vec<i64>>, v: &[i64]| -> Vec<i64> {
        (0..r)
            .map(|i| (0..r).map(|j| m[i][j] * v[j]).sum::<i64>())
            .collect()
    };

    // Each matrix must define a bijective endomorphism of the kernel.
    let mut mat_perms = Vec::new();
    for m in actions {
        if m.len() != r || m.iter().any(|row| row.len() != r) {
            return Err(Error::Validation(format!("action matrix must be {r}x{r}")));
        }
        for j in 0..r {
            for i in 0..r {
                if (m[i][j] * kernel[j] as i64).rem_euclid(kernel[i] as i64) != 0 {
                    return Err(Error::Validation(
                        "action matrix is not a well-defined endomorphism of the kernel"
                            .into(),
                    ));
                }
            }
        }
        let images: Vec<usize> = (0..size)
            .map(|i| encode(&apply_mat(m, &decode(i))))
            .collect();
        let mut seen = vec![false; size];
        for &im in &images {
            if seen[im] {
                return Err(Error::Validation(
                    "action matrix is not an automorphism of the kernel".into(),
                ));
            }
            seen[im] = true;
        }
        mat_perms.push(Permutation::from_images(
            images.into_iter().map(|i| i as u16).collect(),
        )?);
    }

    // Closure of the matrix action alone gives the complement image.
    let action_group = close_generators(size, &mat_perms, "action", DEFAULT_ELEMENT_CAP)?;
    if action_group.order() != complement_order {
        return Err(Error::Validation(format!(
            "action matrices generate a group of order {}, expected complement order {}",
            action_group.order(),
            complement_order
        )));
    }
    for i in 1..action_group.order() as u32 {
        let perm = action_group.element(i);
        for pt in 1..size {
            if perm.apply(pt) == pt {
                return Err(Error::Validation(format!(
                    "action is not fixed-point-free: {perm} fixes a nontrivial kernel point"
                )));
            }
        }
    }

    let mut all_gens = Vec::new();
    for j in 0..r {
        let mut unit = vec![0i64; r];
        unit[j] = 1;
        let images: Vec<u16> = (0..size)
            .map(|i| {
                let mut v = decode(i);
                v[j] += 1;
                encode(&v) as u16
            })
            .collect();
        all_gens.push(Permutation::from_images(images)?);
    }
    all_gens.extend(mat_perms);
    let g = close_generators(size, &all_gens, name, DEFAULT_ELEMENT_CAP)?;
    if g.order() != size * complement_order {
        return Err(Error::Validation(format!(
            "semidirect closure produced order {}, expected {}",
            g.order(),
            size * complement_order
        )));
    }
    let kernel_gens: Vec<u32> = all_gens[..r]
        .iter()
        .map(|p| g.index_of(p).unwrap())
        .collect();
    let kernel_sub = g.generated_subgroup(&kernel_gens);
    if kernel_sub.order() != size || !g.is_frobenius_with_kernel(&kernel_sub) {
        return Err(Error::Validation(
            "construction is not a Frobenius group over the requested kernel".into(),
        ));
    }
    Ok(g)
}

/// PSL₂(q) on the q+1 points of the projective line; points 0..q-1 are the
/// field elements and point q is infinity. |PSL₂(q)| = q(q²−1)/gcd(2,q−1).
pub fn psl2(f: &FiniteField) -> Result<Group> {
    if f.q < 4 {
        return Err(Error::Validation("psl2 needs q >= 4".into()));
    }
    let expected = f.q * (f.q * f.q - 1) / if f.p == 2 { 1 } else { 2 };
    let g = projective_group(f, true, format!("psl2({})", f.q))?;
    if g.order() != expected {
        return Err(Error::Validation(format!(
            "psl2({}) closure has order {}, expected {expected}",
            f.q,
            g.order()
        )));
    }
    Ok(g)
}

/// PGL₂(q) on the projective line; |PGL₂(q)| = q(q²−1).
pub fn pgl2(f: &FiniteField) -> Result<Group> {
    if f.q < 4 {
        return Err(Error::Validation("pgl2 needs q >= 4".into()));
    }
    let expected = f.q * (f.q * f.q - 1);
    let g = projective_group(f, false, format!("pgl2({})", f.q))?;
    if g.order() != expected {
        return Err(Error::Validation(format!(
            "pgl2({}) closure has order {}, expected {expected}",
            f.q,
            g.order()
        )));
    }
    Ok(g)
}

fn projective_group(f: &FiniteField, special: bool, name: String) -> Result<Group> {
    let q = f.q;
    let infinity = q;
    let degree = q + 1;
    // x -> x + 1
    let t = Permutation::from_images(
        (0..degree)
            .map(|i| if i == infinity { infinity } else { f.add(i, 1) } as u16)
            .collect(),
    )?;
    // x -> a x, with a a generator of the squares for PSL in odd
    // characteristic and of the full multiplicative group otherwise.
    let gamma = f.multiplicative_generator();
    let a = if special && f.p != 2 {
        f.mul(gamma, gamma)
    } else {
        gamma
    };
    let d = Permutation::from_images(
        (0..degree)
            .map(|i| if i == infinity { infinity } else { f.mul(a, i) } as u16)
            .collect(),
    )?;
    // x -> -1/x (determinant one) for PSL; x -> 1/x otherwise.
    let w = Permutation::from_images(
        (0..degree)
            .map(|i| {
                let image = if i == infinity {
                    0
                } else if i == 0 {
                    infinity
                } else if special {
                    f.neg(f.inv(i))
                } else {
                    f.inv(i)
                };
                image as u16
            })
            .collect(),
    )?;
    close_generators(degree, &[t, d, w], name, DEFAULT_ELEMENT_CAP)
}

/// Parses the group file format:
///
/// ```text
/// name: <label>
/// degree: <d>
/// gen: <cycles>    # one line per generator, 1-based points
/// ```
pub fn parse_group_file(text: &str) -> Result<Group> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or(Error::Parse {
            line: lineno,
            msg: format!("expected 'key: value', got {line:?}"),
        })?;
        match key.trim() {
            "name" => name = Some(value.trim().to_string()),
            "degree" => {
                degree = Some(value.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad degree {value:?}"),
                })?)
            }
            "gen" => {
                let d = degree.ok_or(Error::Parse {
                    line: lineno,
                    msg: "generator appears before the degree line".into(),
                })?;
                let p = Permutation::parse_cycles(value.trim(), d).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?;
                gens.push(p);
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown key {other:?}"),
                })
            }
        }
    }
    let name = name.ok_or(Error::Parse {
        line: 1,
        msg: "missing 'name:' line".into(),
    })?;
    let degree = degree.ok_or(Error::Parse {
        line: 2,
        msg: "missing 'degree:' line".into(),
    })?;
    close_generators(degree, &gens, name, DEFAULT_ELEMENT_CAP)
}

pub fn load_group_file(path: impl AsRef<Path>) -> Result<Group> {
    parse_group_file(&std::fs::read_to_string(path)?)
}

pub fn group_file_text(g: &Group) -> String {
    let mut out = String::new();
    out.push_str(&format!("name: {}\n", g.name()));
    out.push_str(&format!("degree: {}\n", g.degree()));
    for &gi in g.generators() {
        out.push_str(&format!("gen: {}\n", g.element(gi).cycle_string()));
    }
    out
}

pub fn save_group_file(g: &Group, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, group_file_text(g))?;
    Ok(())
}

/// How a catalog entry is realized.
#[derive(Clone, Debug)]
pub enum CatalogSource {
    Constructor(GroupSpec),
    File(&'static str),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    pub center_order: usize,
    pub source: CatalogSource,
}

const MANIFEST: &str = include_str!("../data/catalog/manifest.txt");

const CATALOG_FILES: &[(&str, &str)] = &[
    ("Dic3.grp", include_str!("../data/catalog/Dic3.grp")),
    ("Dic5.grp", include_str!("../data/catalog/Dic5.grp")),
    ("Dic6.grp", include_str!("../data/catalog/Dic6.grp")),
    ("M4_2.grp", include_str!("../data/catalog/M4_2.grp")),
    ("C4sC4.grp", include_str!("../data/catalog/C4sC4.grp")),
    ("C4xC2sC2.grp", include_str!("../data/catalog/C4xC2sC2.grp")),
    ("D8oC4.grp", include_str!("../data/catalog/D8oC4.grp")),
    ("C3sC8.grp", include_str!("../data/catalog/C3sC8.grp")),
    ("SL2_3.grp", include_str!("../data/catalog/SL2_3.grp")),
    ("C2xDic3.grp", include_str!("../data/catalog/C2xDic3.grp")),
    ("C3sD8.grp", include_str!("../data/catalog/C3sD8.grp")),
    ("Sz8.grp", include_str!("../data/catalog/Sz8.grp")),
];

/// The shipped catalog, in manifest order.
pub fn entries() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (lineno, raw) in MANIFEST.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() < 4 {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("manifest line needs 4 fields: {line:?}"),
            });
        }
        let name = parts[0].trim().to_string();
        let order: usize = parts[1].trim().parse().map_err(|_| Error::Parse {
            line: lineno + 1,
            msg: "bad order".into(),
        })?;
        let center_order: usize = parts[2].trim().parse().map_err(|_| Error::Parse {
            line: lineno + 1,
            msg: "bad center order".into(),
        })?;
        // The constructor field may itself contain commas; rejoin.
        let rest = parts[3..].join(",");
        let rest = rest.trim();
        let source = if let Some(file) = rest.strip_prefix("file:") {
            let file = file.trim();
            let hit = CATALOG_FILES
                .iter()
                .find(|(n, _)| *n == file)
                .ok_or(Error::Parse {
                    line: lineno + 1,
                    msg: format!("manifest references unknown file {file:?}"),
                })?;
            CatalogSource::File(hit.1)
        } else if let Some(spec) = rest.strip_prefix("constructor:") {
            CatalogSource::Constructor(GroupSpec::parse(spec.trim())?)
        } else {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("source must be file: or constructor:, got {rest:?}"),
            });
        };
        out.push(CatalogEntry {
            name,
            order,
            center_order,
            source,
        });
    }
    Ok(out)
}

/// Builds a catalog group by name, validating order and center order
/// against the manifest.
pub fn build(name: &str) -> Result<Group> {
    let entry = entries()?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Validation(format!("no catalog group named {name:?}")))?;
    build_entry(&entry)
}

pub fn build_entry(entry: &CatalogEntry) -> Result<Group> {
    let mut g = match &entry.source {
        CatalogSource::Constructor(spec) => make(spec)?,
        CatalogSource::File(text) => parse_group_file(text)?,
    };
    if g.order() != entry.order {
        return Err(Error::Validation(format!(
            "catalog group {} has order {}, manifest says {}",
            entry.name,
            g.order(),
            entry.order
        )));
    }
    if g.center().len() != entry.center_order {
        return Err(Error::Validation(format!(
            "catalog group {} has |Z| = {}, manifest says {}",
            entry.name,
            g.center().len(),
            entry.center_order
        )));
    }
    g.set_name(entry.name.clone());
    Ok(g)
}

/// Catalog names of the simple groups, for the order-based lower bound.
pub fn simple_group_names() -> &'static [&'static str] {
    &["A5", "L2_4", "L2_5", "L2_7", "L2_9", "A6", "A7", "Sz8"]
}

pub fn is_catalog_simple(name: &str) -> bool {
    simple_group_names().contains(&name)
}

/// The default classification sweep set: every nonabelian catalog group of
/// order at most 24, plus the named larger fixtures.
pub fn sweep_names() -> Result<Vec<String>> {
    let mut out: Vec<String> = entries()?
        .iter()
        .filter(|e| e.order <= 24)
        .map(|e| e.name.clone())
        .collect();
    for extra in ["D32", "Q32", "SD32", "S3xS3", "paper72", "Q8F72"] {
        out.push(extra.to_string());
    }
    Ok(out)
}

/// Resolves a CLI group source: `catalog:NAME`, `file:PATH`, a bare catalog
/// name, or a constructor spec string.
pub fn resolve_group(source: &str) -> Result<Group> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return build(name.trim());
    }
    if let Some(path) = source.strip_prefix("file:") {
        return load_group_file(path.trim());
    }
    if entries()?.iter().any(|e| e.name == source) {
        return build(source);
    }
    let spec = GroupSpec::parse(source)?;
    make(&spec)
}

/// Looks a group up by the name recorded in a decomposition file.
pub fn resolve_by_name(name: &str) -> Result<Group> {
    if entries()?.iter().any(|e| e.name == name) {
        return build(name);
    }
    if let Ok(spec) = GroupSpec::parse(name) {
        return make(&spec);
    }
    Err(Error::Validation(format!(
        "cannot resolve group {name:?}: not a catalog name or constructor spec"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_isomorphic, small_iso_type, IsoTarget};

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "cyclic(6)",
            "dihedral(16)",
            "quaternion(32)",
            "product(cyclic(3),symmetric(3))",
            "extraspecial(3,p)",
            "frobenius([3,3],[[-1,0],[0,-1]],2)",
            "paper72",
            "psl2(9)",
        ] {
            let spec = GroupSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn extraspecial_structure() {
        for (p, exp) in [(3, true), (3, false), (5, true), (5, false)] {
            let g = extraspecial_p3(p, exp).unwrap();
            assert_eq!(g.order(), p * p * p);
            assert_eq!(g.center().len(), p);
            // Every noncentral centralizer is a maximal subgroup of order p².
            for x in 0..g.order() as u32 {
                if g.center().binary_search(&x).is_err() {
                    assert_eq!(g.element_centralizer(x).len(), p * p);
                }
            }
            if exp && p == 3 {
                for x in 1..g.order() as u32 {
                    assert_eq!(g.element_order(x), 3);
                }
            }
        }
    }

    #[test]
    fn extraspecial_maximal_abelian_count() {
        // p+1 maximal abelian subgroups of order p², both types.
        for exp in [true, false] {
            let g = extraspecial_p3(3, exp).unwrap();
            let maxab = g.maximal_abelian_subgroups();
            assert_eq!(maxab.len(), 4);
            assert!(maxab.iter().all(|m| m.order() == 9));
        }
    }

    #[test]
    fn paper72_relations() {
        let g = paper72().unwrap();
        assert_eq!(g.order(), 72);
        let u = g.generators()[0];
        let v = g.generators()[1];
        let x = g.generators()[2];
        let y = g.generators()[3];
        assert_eq!(g.element_order(x), 4);
        assert_eq!(g.element_order(y), 2);
        assert_eq!(g.element_order(u), 3);
        assert_eq!(g.element_order(v), 3);
        // x^y x = 1, i.e. y⁻¹ x y = x⁻¹
        assert_eq!(g.conj(x, y), g.inv(x));
        assert!(g.commutes(u, v));
        assert_eq!(g.conj(u, x), v);
        assert_eq!(g.conj(v, x), g.inv(u));
        assert_eq!(g.conj(u, y), u);
        assert_eq!(g.conj(v, y), g.inv(v));
        // |C_A(y)| = 3 where A = <u, v>
        let a = g.generated_subgroup(&[u, v]);
        let ca_y = a.members.iter().filter(|&&m| g.commutes(m, y)).count();
        assert_eq!(ca_y, 3);
    }

    #[test]
    fn frobenius_constructions() {
        let d10 = frobenius_semidirect(&[5], &[vec![vec![-1]]], 2, "D10f").unwrap();
        assert_eq!(d10.order(), 10);
        let f21 = frobenius_semidirect(&[7], &[vec![vec![2]]], 3, "F21").unwrap();
        assert_eq!(f21.order(), 21);
        // C4 inversion action on C5 has a kernel of order 2: the wrong
        // complement order is reported.
        assert!(frobenius_semidirect(&[5], &[vec![vec![-1]]], 4, "bad").is_err());
        // x -> 2x is not an automorphism of Z4... it is not injective.
        assert!(frobenius_semidirect(&[4], &[vec![vec![2]]], 2, "bad").is_err());
    }

    #[test]
    fn psl2_orders() {
        let f4 = FiniteField::of_order(4).unwrap();
        let g = psl2(&f4).unwrap();
        assert_eq!((g.order(), g.degree()), (60, 5));

        let f7 = FiniteField::of_order(7).unwrap();
        assert_eq!(psl2(&f7).unwrap().order(), 168);

        let f5 = FiniteField::of_order(5).unwrap();
        let pg = pgl2(&f5).unwrap();
        assert_eq!((pg.order(), pg.degree()), (120, 6));
    }

    #[test]
    fn pgl2_5_is_s5() {
        let f5 = FiniteField::of_order(5).unwrap();
        let pg = pgl2(&f5).unwrap();
        let s5 = gens::symmetric(5).unwrap();
        assert!(is_isomorphic(&pg, &s5, 200).unwrap());
    }

    #[test]
    fn psl2_9_has_a6_order_profile() {
        let f9 = FiniteField::of_order(9).unwrap();
        let g = psl2(&f9).unwrap();
        assert_eq!(g.order(), 360);
        let mut orders: Vec<u32> = (0..g.order() as u32).map(|x| g.element_order(x)).collect();
        orders.sort_unstable();
        orders.dedup();
        assert_eq!(orders, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn group_file_round_trip() {
        let d8 = gens::dihedral(8).unwrap();
        let text = group_file_text(&d8);
        let back = parse_group_file(&text).unwrap();
        assert_eq!(back.order(), 8);
        assert_eq!(back.name(), "D8");
        assert_eq!(back.elements().len(), d8.elements().len());
        for (a, b) in back.elements().iter().zip(d8.elements()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn malformed_group_file() {
        let err = parse_group_file("name: X\ndegree: 4\ngen: (1 2\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn catalog_builds_and_validates() {
        for entry in entries().unwrap() {
            if entry.order > 1000 {
                continue; // Sz8 and A7 are exercised in slower suites.
            }
            let g = build_entry(&entry).unwrap();
            assert_eq!(g.order(), entry.order, "{}", entry.name);
            assert_eq!(g.center().len(), entry.center_order, "{}", entry.name);
        }
    }

    #[test]
    fn catalog_has_all_small_nonabelian_types() {
        // Exactly 37 nonabelian groups of order <= 24 exist; the catalog
        // carries each type exactly once.
        let small: Vec<CatalogEntry> = entries()
            .unwrap()
            .into_iter()
            .filter(|e| e.order <= 24)
            .collect();
        assert_eq!(small.len(), 37);
        let built: Vec<Group> = small.iter().map(|e| build_entry(e).unwrap()).collect();
        for g in &built {
            assert!(g.center().len() < g.order(), "{} is abelian", g.name());
        }
        for i in 0..built.len() {
            for j in i + 1..built.len() {
                if built[i].order() != built[j].order() {
                    continue;
                }
                assert!(
                    !is_isomorphic(&built[i], &built[j], 100).unwrap(),
                    "{} and {} are isomorphic",
                    built[i].name(),
                    built[j].name()
                );
            }
        }
    }

    #[test]
    fn q8f72_complement_is_quaternion() {
        let g = build("Q8F72").unwrap();
        assert_eq!(g.order(), 72);
        let s = g.sylow_subgroup(2);
        assert_eq!(s.order(), 8);
        let sub = close_generators(
            g.degree(),
            &s.members
                .iter()
                .map(|&m| g.element(m).clone())
                .collect::<Vec<_>>(),
            "syl2",
            10_000,
        )
        .unwrap();
        assert!(small_iso_type(&sub, &IsoTarget::Quaternion8).unwrap());
    }
}
