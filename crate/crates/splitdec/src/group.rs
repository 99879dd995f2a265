//! Concrete finite groups: full element enumeration with index-based
//! multiplication, plus the subgroup, centralizer, and conjugacy queries
//! everything else is built on.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::perm::Permutation;
use crate::{Error, Result};

/// Multiplication tables are materialized up to this order; larger groups
/// multiply by composing permutations and hashing the result.
const MUL_TABLE_CAP: usize = 4096;

/// Default cap on closure size.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Default cap on the number of abelian subgroups enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 100_000;

/// Brute-force isomorphism recognition is restricted to this order.
pub const ISO_RECOGNITION_CAP: usize = 100;

/// A fully enumerated permutation group. Index 0 is the identity; the
/// remaining elements appear in breadth-first discovery order, so all
/// derived data is reproducible.
pub struct Group {
    name: String,
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Vec<u16>, u32>,
    generators: Vec<u32>,
    inverses: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    orders: OnceLock<Vec<u32>>,
    center: OnceLock<Vec<u32>>,
    conjugacy: OnceLock<ConjugacyData>,
    maximal_abelian: OnceLock<Vec<Vec<u32>>>,
}

/// Conjugacy classes with, for every element, a witness conjugator taking
/// the class representative to it. Classes are ordered by least member.
pub struct ConjugacyData {
    pub class_of: Vec<u32>,
    pub reps: Vec<u32>,
    witness: Vec<u32>,
    pub classes: Vec<Vec<u32>>,
    rep_centralizers: Vec<Vec<u32>>,
}

/// A subgroup given by its sorted member indices in a parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRef {
    pub members: Vec<u32>,
    pub is_abelian: bool,
    pub is_normal: bool,
}

impl SubgroupRef {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.members.binary_search(&idx).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

/// Closes a generator list under multiplication, breadth first.
///
/// The identity gets index 0; elements are then numbered in discovery order
/// with the generator order fixed, so the element ordering is deterministic.
pub fn close_generators(
    degree: usize,
    gens: &[Permutation],
    name: impl Into<String>,
    element_cap: usize,
) -> Result<Group> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::Validation(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
    index.insert(elements[0].images().to_vec(), 0);
    let mut frontier = 0usize;
    while frontier < elements.len() {
        for g in gens {
            let next = elements[frontier].then(g);
            if !index.contains_key(next.images()) {
                if elements.len() >= element_cap {
                    return Err(Error::Resource(format!(
                        "closure of {} exceeds the element cap {element_cap}",
                        name.into()
                    )));
                }
                index.insert(next.images().to_vec(), elements.len() as u32);
                elements.push(next);
            }
        }
        frontier += 1;
    }

    let generators: Vec<u32> = gens
        .iter()
        .map(|g| index[g.images()])
        .collect();
    let inverses: Vec<u32> = elements
        .iter()
        .map(|e| index[e.inverse().images()])
        .collect();
    let n = elements.len();
    let mul_table = if n <= MUL_TABLE_CAP {
        let mut table = vec![0u32; n * n];
        let mut scratch = Vec::with_capacity(degree);
        for i in 0..n {
            for j in 0..n {
                elements[i].then_into(&elements[j], &mut scratch);
                table[i * n + j] = index[scratch.as_slice()];
            }
        }
        Some(table)
    } else {
        None
    };

    Ok(Group {
        name: name.into(),
        degree,
        elements,
        index,
        generators,
        inverses,
        mul_table,
        orders: OnceLock::new(),
        center: OnceLock::new(),
        conjugacy: OnceLock::new(),
        maximal_abelian: OnceLock::new(),
    })
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .finish()
    }
}

impl Group {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p.images()).copied()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => {
                let mut scratch = Vec::with_capacity(self.degree);
                self.elements[a as usize].then_into(&self.elements[b as usize], &mut scratch);
                self.index[scratch.as_slice()]
            }
        }
    }

    #[inline]
    fn mul_with(&self, a: u32, b: u32, scratch: &mut Vec<u16>) -> u32 {
        match &self.mul_table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => {
                self.elements[a as usize].then_into(&self.elements[b as usize], scratch);
                self.index[scratch.as_slice()]
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `x^g = g⁻¹ x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        let mut scratch = Vec::with_capacity(self.degree);
        let gx = self.mul_with(self.inv(g), x, &mut scratch);
        self.mul_with(gx, g, &mut scratch)
    }

    pub fn commutes(&self, a: u32, b: u32) -> bool {
        if a == b || a == 0 || b == 0 {
            return true;
        }
        let mut scratch = Vec::with_capacity(self.degree);
        self.mul_with(a, b, &mut scratch) == self.mul_with(b, a, &mut scratch)
    }

    /// Least `k >= 1` with `g^k = 1`; always divides the group order.
    pub fn element_order(&self, g: u32) -> u32 {
        self.orders()[g as usize]
    }

    pub fn orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            self.elements
                .iter()
                .map(|p| p.order() as u32)
                .collect()
        })
    }

    pub fn power(&self, g: u32, k: u32) -> u32 {
        let mut acc = 0u32;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Sorted member list of `{x : x commutes with every s in S}`.
    ///
    /// An empty `S` yields the whole group.
    pub fn centralizer_members(&self, s: &[u32]) -> Vec<u32> {
        let mut scratch = Vec::with_capacity(self.degree);
        (0..self.order() as u32)
            .filter(|&x| {
                s.iter().all(|&g| {
                    self.mul_with(x, g, &mut scratch) == self.mul_with(g, x, &mut scratch)
                })
            })
            .collect()
    }

    pub fn centralizer(&self, s: &[u32]) -> SubgroupRef {
        self.subgroup_unchecked(self.centralizer_members(s))
    }

    /// `Z(G)` as a sorted member list.
    pub fn center(&self) -> &[u32] {
        self.center.get_or_init(|| {
            let all: Vec<u32> = self.generators.clone();
            self.centralizer_members(&all)
        })
    }

    pub fn center_subgroup(&self) -> SubgroupRef {
        self.subgroup_unchecked(self.center().to_vec())
    }

    /// Wraps sorted member indices known to be a subgroup, computing flags.
    pub(crate) fn subgroup_unchecked(&self, mut members: Vec<u32>) -> SubgroupRef {
        members.sort_unstable();
        members.dedup();
        let is_abelian = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.commutes(a, b)));
        let is_normal = self.is_normal_set(&members);
        SubgroupRef {
            members,
            is_abelian,
            is_normal,
        }
    }

    /// Validates that `members` is a subgroup and wraps it.
    pub fn subgroup(&self, members: Vec<u32>) -> Result<SubgroupRef> {
        let mut sorted = members;
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.binary_search(&0).is_err() {
            return Err(Error::Validation("subgroup is missing the identity".into()));
        }
        for &a in &sorted {
            if a as usize >= self.order() {
                return Err(Error::Validation(format!("element index {a} out of range")));
            }
            if sorted.binary_search(&self.inv(a)).is_err() {
                return Err(Error::Validation(format!(
                    "subgroup is not closed under inversion at {}",
                    self.element(a)
                )));
            }
            for &b in &sorted {
                if sorted.binary_search(&self.mul(a, b)).is_err() {
                    return Err(Error::Validation(format!(
                        "subgroup is not closed: {} * {} falls outside",
                        self.element(a),
                        self.element(b)
                    )));
                }
            }
        }
        Ok(self.subgroup_unchecked(sorted))
    }

    fn is_normal_set(&self, members: &[u32]) -> bool {
        self.generators.iter().all(|&g| {
            members
                .iter()
                .all(|&m| members.binary_search(&self.conj(m, g)).is_ok())
        })
    }

    /// Closure of a set of element indices as a subgroup.
    pub fn generated_subgroup(&self, gens: &[u32]) -> SubgroupRef {
        let mut members: HashSet<u32> = HashSet::new();
        members.insert(0);
        let mut queue: Vec<u32> = vec![0];
        let mut frontier = 0;
        while frontier < queue.len() {
            let cur = queue[frontier];
            frontier += 1;
            for &g in gens {
                let next = self.mul(cur, g);
                if members.insert(next) {
                    queue.push(next);
                }
            }
        }
        self.subgroup_unchecked(members.into_iter().collect())
    }

    pub fn trivial_subgroup(&self) -> SubgroupRef {
        self.subgroup_unchecked(vec![0])
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        self.conjugacy.get_or_init(|| self.compute_conjugacy())
    }

    fn compute_conjugacy(&self) -> ConjugacyData {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut witness = vec![0u32; n];
        let mut reps = Vec::new();
        let mut classes = Vec::new();
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let class_id = reps.len() as u32;
            reps.push(start);
            class_of[start as usize] = class_id;
            witness[start as usize] = 0;
            let mut members = vec![start];
            let mut frontier = 0;
            while frontier < members.len() {
                let cur = members[frontier];
                frontier += 1;
                for &g in &self.generators {
                    let next = self.conj(cur, g);
                    if class_of[next as usize] == u32::MAX {
                        class_of[next as usize] = class_id;
                        witness[next as usize] = self.mul(witness[cur as usize], g);
                        members.push(next);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let rep_centralizers = reps
            .iter()
            .map(|&r| self.centralizer_members(&[r]))
            .collect();
        ConjugacyData {
            class_of,
            reps,
            witness,
            classes,
            rep_centralizers,
        }
    }

    /// Partition of the element indices into conjugacy classes, ordered by
    /// least member.
    pub fn conjugacy_classes(&self) -> &[Vec<u32>] {
        &self.conjugacy().classes
    }

    /// `C_G(x)` for a single element, transported from the centralizer of
    /// its class representative. Sorted.
    pub fn element_centralizer(&self, x: u32) -> Vec<u32> {
        let data = self.conjugacy();
        let class = data.class_of[x as usize] as usize;
        let w = data.witness[x as usize];
        if w == 0 {
            return data.rep_centralizers[class].clone();
        }
        let wi = self.inv(w);
        let mut out: Vec<u32> = data.rep_centralizers[class]
            .iter()
            .map(|&c| {
                let mut scratch = Vec::with_capacity(self.degree);
                let cw = self.mul_with(wi, c, &mut scratch);
                self.mul_with(cw, w, &mut scratch)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// All subgroups (members sorted), found by closing subgroup-element
    /// unions. Intended for small groups; errors out past `cap`.
    pub fn all_subgroups(&self, cap: usize) -> Result<Vec<Vec<u32>>> {
        let n = self.order() as u32;
        let mut found: HashSet<Vec<u32>> = HashSet::new();
        let mut queue: Vec<Vec<u32>> = Vec::new();
        let trivial = vec![0u32];
        found.insert(trivial.clone());
        queue.push(trivial);
        let mut frontier = 0;
        while frontier < queue.len() {
            let current = queue[frontier].clone();
            frontier += 1;
            for x in 1..n {
                if current.binary_search(&x).is_ok() {
                    continue;
                }
                let mut gens = current.clone();
                gens.push(x);
                let sub = self.generated_subgroup(&gens);
                if found.insert(sub.members.clone()) {
                    if found.len() > cap {
                        return Err(Error::Resource(format!(
                            "subgroup enumeration exceeds the cap {cap}"
                        )));
                    }
                    queue.push(sub.members);
                }
            }
        }
        let mut out: Vec<Vec<u32>> = found.into_iter().collect();
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// One representative per conjugacy class of abelian subgroups.
    ///
    /// Complete: every abelian subgroup of the group is conjugate to exactly
    /// one returned representative. Representatives are canonical (least
    /// sorted member list within the conjugacy class) and listed in
    /// ascending (order, member-list) order.
    pub fn abelian_subgroups_up_to_conjugacy(
        &self,
        include_trivial: bool,
        cap: usize,
    ) -> Result<Vec<SubgroupRef>> {
        let n = self.order() as u32;
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut queue: Vec<Vec<u32>> = Vec::new();
        let trivial = vec![0u32];
        seen.insert(trivial.clone());
        queue.push(trivial);
        let mut frontier = 0;
        while frontier < queue.len() {
            let current = queue[frontier].clone();
            frontier += 1;
            // Grow by any centralizing element; the extension stays abelian.
            for x in 1..n {
                if current.binary_search(&x).is_ok() {
                    continue;
                }
                if !current.iter().all(|&m| self.commutes(m, x)) {
                    continue;
                }
                let mut gens = current.clone();
                gens.push(x);
                let sub = self.generated_subgroup(&gens);
                if !sub.is_abelian {
                    continue;
                }
                if seen.insert(sub.members.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Resource(format!(
                            "abelian subgroup enumeration exceeds the cap {cap}"
                        )));
                    }
                    queue.push(sub.members);
                }
            }
        }
        // Dedupe by conjugacy: canonical representative is the least sorted
        // member list over the conjugation orbit.
        let mut canonical: HashSet<Vec<u32>> = HashSet::new();
        let mut reps = Vec::new();
        for members in &seen {
            let canon = self.canonical_conjugate(members);
            if canonical.insert(canon.clone()) {
                reps.push(canon);
            }
        }
        reps.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(reps
            .into_iter()
            .filter(|m| include_trivial || m.len() > 1)
            .map(|m| self.subgroup_unchecked(m))
            .collect())
    }

    /// Least sorted member list among all conjugates of `members`.
    pub fn canonical_conjugate(&self, members: &[u32]) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for g in 0..self.order() as u32 {
            let mut conj: Vec<u32> = members.iter().map(|&m| self.conj(m, g)).collect();
            conj.sort_unstable();
            if best.as_ref().map_or(true, |b| &conj < b) {
                best = Some(conj);
            }
        }
        best.unwrap()
    }

    /// All maximal abelian subgroups (the full list, not up to conjugacy).
    ///
    /// These are exactly the maximal cliques of the commuting relation on
    /// the nonidentity elements, together with the identity; every one is
    /// self-centralizing.
    pub fn maximal_abelian_subgroups(&self) -> Vec<SubgroupRef> {
        self.maximal_abelian_members()
            .iter()
            .map(|m| self.subgroup_unchecked(m.clone()))
            .collect()
    }

    pub(crate) fn maximal_abelian_members(&self) -> &[Vec<u32>] {
        self.maximal_abelian.get_or_init(|| {
            if self.is_abelian() {
                return vec![(0..self.order() as u32).collect()];
            }
            let n = self.order();
            // Noncentral vertices, bucketed into connected components of the
            // commuting graph on G minus Z; central elements commute with
            // everything and are added to every clique afterwards.
            let center: Vec<u32> = self.center().to_vec();
            let is_central = |x: u32| center.binary_search(&x).is_ok();
            let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
            for x in 0..n as u32 {
                if is_central(x) {
                    continue;
                }
                let nbrs: Vec<u32> = self
                    .element_centralizer(x)
                    .into_iter()
                    .filter(|&y| y != x && !is_central(y))
                    .collect();
                adj.insert(x, nbrs);
            }
            let mut comp_of: HashMap<u32, usize> = HashMap::new();
            let mut comps: Vec<Vec<u32>> = Vec::new();
            for x in 0..n as u32 {
                if is_central(x) || comp_of.contains_key(&x) {
                    continue;
                }
                let id = comps.len();
                let mut stack = vec![x];
                let mut members = Vec::new();
                comp_of.insert(x, id);
                while let Some(v) = stack.pop() {
                    members.push(v);
                    for &w in &adj[&v] {
                        if !comp_of.contains_key(&w) {
                            comp_of.insert(w, id);
                            stack.push(w);
                        }
                    }
                }
                members.sort_unstable();
                comps.push(members);
            }
            let mut result: Vec<Vec<u32>> = Vec::new();
            for comp in &comps {
                let pos: HashMap<u32, usize> =
                    comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let local_adj: Vec<Vec<usize>> = comp
                    .iter()
                    .map(|v| {
                        adj[v]
                            .iter()
                            .filter_map(|w| pos.get(w).copied())
                            .collect()
                    })
                    .collect();
                let mut cliques = Vec::new();
                bron_kerbosch(
                    &local_adj,
                    &mut Vec::new(),
                    (0..comp.len()).collect(),
                    Vec::new(),
                    &mut cliques,
                );
                for clique in cliques {
                    let mut members: Vec<u32> =
                        clique.iter().map(|&i| comp[i]).collect();
                    members.extend_from_slice(&center);
                    members.sort_unstable();
                    result.push(members);
                }
            }
            // An abelian group minus its center is empty: handled above.
            result.sort_unstable_by(|a, b| {
                a.len().cmp(&b.len()).then_with(|| a.cmp(b))
            });
            result
        })
    }

    /// Frobenius test: `A` normal with `1 < A < G`, `gcd(|A|, |G:A|) = 1`,
    /// and `C_A(g) = 1` for every `g` outside `A`.
    pub fn is_frobenius_with_kernel(&self, a: &SubgroupRef) -> bool {
        let n = self.order();
        let k = a.order();
        if !a.is_normal || k <= 1 || k >= n {
            return false;
        }
        let index = n / k;
        if gcd_usize(k, index) != 1 {
            return false;
        }
        for g in 0..n as u32 {
            if a.contains(g) {
                continue;
            }
            for &x in &a.members {
                if x != 0 && self.commutes(x, g) {
                    return false;
                }
            }
        }
        true
    }

    /// A Sylow p-subgroup, grown greedily through normalizers.
    pub fn sylow_subgroup(&self, p: usize) -> SubgroupRef {
        let n = self.order();
        let mut target = 1usize;
        let mut m = n;
        while m % p == 0 {
            m /= p;
            target *= p;
        }
        if target == 1 {
            return self.trivial_subgroup();
        }
        let p_elements: Vec<u32> = (0..n as u32)
            .filter(|&x| {
                let o = self.element_order(x) as usize;
                o > 1 && is_p_power(o, p)
            })
            .collect();
        let mut current = self.generated_subgroup(&[p_elements[0]]);
        'grow: while current.order() < target {
            for &x in &p_elements {
                if current.contains(x) {
                    continue;
                }
                // x must normalize the current p-subgroup for the closure to
                // stay a p-group.
                if !current
                    .members
                    .iter()
                    .all(|&m| current.contains(self.conj(m, x)))
                {
                    continue;
                }
                let mut gens = current.members.clone();
                gens.push(x);
                let bigger = self.generated_subgroup(&gens);
                if is_p_power(bigger.order(), p) {
                    current = bigger;
                    continue 'grow;
                }
            }
            // No single normalizing element extends it; restart from a
            // larger seed pair. This is not reached for the group sizes the
            // classifier sweeps, but keeps the function total.
            for &x in &p_elements {
                if !current.contains(x) {
                    let mut gens = current.members.clone();
                    gens.push(x);
                    let bigger = self.generated_subgroup(&gens);
                    if is_p_power(bigger.order(), p) {
                        current = bigger;
                        continue 'grow;
                    }
                }
            }
            break;
        }
        current
    }
}

fn bron_kerbosch(
    adj: &[Vec<usize>],
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| adj[u].iter().filter(|v| p.contains(v)).count())
        .unwrap();
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|v| !adj[pivot].contains(v))
        .collect();
    for v in candidates {
        r.push(v);
        let p2 = p.iter().copied().filter(|u| adj[v].contains(u)).collect();
        let x2 = x.iter().copied().filter(|u| adj[v].contains(u)).collect();
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Named isomorphism targets the classifier recognizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoTarget {
    Cyclic(usize),
    AnyCyclic,
    ElementaryAbelian(usize),
    Klein,
    Dihedral8,
    Quaternion8,
    S3,
    S4,
    A4,
    S3xS3,
    Dihedral(usize),
    GeneralizedQuaternion(usize),
    Semidihedral(usize),
}

/// Whether `g` is isomorphic to the named target.
///
/// Structured families are recognized by generator search; the fixed small
/// targets by brute-force isomorphism against a reference copy. Restricted
/// to `|G| <= ISO_RECOGNITION_CAP`.
pub fn small_iso_type(g: &Group, target: &IsoTarget) -> Result<bool> {
    if g.order() > ISO_RECOGNITION_CAP {
        return Err(Error::Resource(format!(
            "isomorphism recognition is capped at order {ISO_RECOGNITION_CAP}, group has {}",
            g.order()
        )));
    }
    let n = g.order();
    Ok(match target {
        IsoTarget::Cyclic(k) => n == *k && has_element_of_order(g, n),
        IsoTarget::AnyCyclic => has_element_of_order(g, n),
        IsoTarget::ElementaryAbelian(p) => {
            is_prime(*p)
                && is_power_of(n, *p)
                && g.is_abelian()
                && (1..n as u32).all(|x| g.element_order(x) == *p as u32)
        }
        IsoTarget::Klein => {
            n == 4 && g.is_abelian() && (1..4).all(|x| g.element_order(x) == 2)
        }
        IsoTarget::Dihedral8 => is_dihedral(g, 8),
        IsoTarget::Quaternion8 => is_generalized_quaternion(g, 8),
        IsoTarget::S3 => is_dihedral(g, 6),
        IsoTarget::S4 => is_isomorphic(g, &crate::gens::symmetric(4)?, ISO_RECOGNITION_CAP)?,
        IsoTarget::A4 => is_isomorphic(g, &crate::gens::alternating(4)?, ISO_RECOGNITION_CAP)?,
        IsoTarget::S3xS3 => {
            is_isomorphic(g, &crate::gens::s3_times_s3()?, ISO_RECOGNITION_CAP)?
        }
        IsoTarget::Dihedral(k) => is_dihedral(g, *k),
        IsoTarget::GeneralizedQuaternion(k) => is_generalized_quaternion(g, *k),
        IsoTarget::Semidihedral(k) => is_semidihedral(g, *k),
    })
}

fn has_element_of_order(g: &Group, k: usize) -> bool {
    (0..g.order() as u32).any(|x| g.element_order(x) as usize == k)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Dihedral of order `2k`: a cyclic subgroup of index 2 inverted by an
/// involution outside it.
fn is_dihedral(g: &Group, order: usize) -> bool {
    let k = order / 2;
    if g.order() != order || order % 2 != 0 || k < 2 {
        return false;
    }
    for r in 1..g.order() as u32 {
        if g.element_order(r) as usize != k {
            continue;
        }
        let cyc = g.generated_subgroup(&[r]);
        for s in 1..g.order() as u32 {
            if cyc.contains(s) || g.element_order(s) != 2 {
                continue;
            }
            if g.conj(r, s) == g.inv(r) {
                return true;
            }
        }
    }
    false
}

fn is_generalized_quaternion(g: &Group, order: usize) -> bool {
    if g.order() != order || !order.is_power_of_two() || order < 8 {
        return false;
    }
    let k = order / 2;
    let involutions = (1..g.order() as u32)
        .filter(|&x| g.element_order(x) == 2)
        .count();
    if involutions != 1 {
        return false;
    }
    for r in 1..g.order() as u32 {
        if g.element_order(r) as usize != k {
            continue;
        }
        let cyc = g.generated_subgroup(&[r]);
        for s in 1..g.order() as u32 {
            if cyc.contains(s) {
                continue;
            }
            if g.conj(r, s) == g.inv(r) && g.mul(s, s) == g.power(r, (k / 2) as u32) {
                return true;
            }
        }
    }
    false
}

fn is_semidihedral(g: &Group, order: usize) -> bool {
    if g.order() != order || !order.is_power_of_two() || order < 16 {
        return false;
    }
    let k = order / 2;
    for r in 1..g.order() as u32 {
        if g.element_order(r) as usize != k {
            continue;
        }
        let cyc = g.generated_subgroup(&[r]);
        for s in 1..g.order() as u32 {
            if cyc.contains(s) || g.element_order(s) != 2 {
                continue;
            }
            if g.conj(r, s) == g.power(r, (k / 2 - 1) as u32) {
                return true;
            }
        }
    }
    false
}

/// Brute-force isomorphism by generator-image backtracking.
pub fn is_isomorphic(a: &Group, b: &Group, cap: usize) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.order() > cap {
        return Err(Error::Resource(format!(
            "isomorphism test capped at order {cap}, groups have {}",
            a.order()
        )));
    }
    // Quick invariants first.
    let mut oa: Vec<u32> = (0..a.order() as u32).map(|x| a.element_order(x)).collect();
    let mut ob: Vec<u32> = (0..b.order() as u32).map(|x| b.element_order(x)).collect();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob {
        return Ok(false);
    }
    if a.center().len() != b.center().len() {
        return Ok(false);
    }

    // Small generating set of b, found greedily.
    let mut gens: Vec<u32> = Vec::new();
    let mut span = b.trivial_subgroup();
    for x in 1..b.order() as u32 {
        if !span.contains(x) {
            gens.push(x);
            let mut all = span.members.clone();
            all.push(x);
            span = b.generated_subgroup(&all);
            if span.order() == b.order() {
                break;
            }
        }
    }

    // Decompose every element of b as a word in gens via BFS.
    let n = b.order();
    let mut how: Vec<Option<(u32, usize)>> = vec![None; n];
    let mut bfs = vec![0u32];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut frontier = 0;
    while frontier < bfs.len() {
        let cur = bfs[frontier];
        frontier += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let next = b.mul(cur, gen);
            if !seen[next as usize] {
                seen[next as usize] = true;
                how[next as usize] = Some((cur, gi));
                bfs.push(next);
            }
        }
    }

    let order_of: Vec<u32> = gens.iter().map(|&x| b.element_order(x)).collect();
    let mut images: Vec<u32> = vec![0; gens.len()];
    Ok(try_images(a, b, &gens, &order_of, &bfs, &how, &mut images, 0))
}

fn try_images(
    a: &Group,
    b: &Group,
    gens: &[u32],
    order_of: &[u32],
    bfs: &[u32],
    how: &[Option<(u32, usize)>],
    images: &mut Vec<u32>,
    depth: usize,
) -> bool {
    if depth == gens.len() {
        return check_hom(a, b, gens, bfs, how, images);
    }
    for cand in 0..a.order() as u32 {
        if a.element_order(cand) != order_of[depth] {
            continue;
        }
        images[depth] = cand;
        if try_images(a, b, gens, order_of, bfs, how, images, depth + 1) {
            return true;
        }
    }
    false
}

fn check_hom(
    a: &Group,
    b: &Group,
    _gens: &[u32],
    bfs: &[u32],
    how: &[Option<(u32, usize)>],
    images: &[u32],
) -> bool {
    let n = b.order();
    let mut phi: Vec<u32> = vec![0; n];
    for &el in bfs {
        if el == 0 {
            continue;
        }
        let (prev, gi) = how[el as usize].unwrap();
        phi[el as usize] = a.mul(phi[prev as usize], images[gi]);
    }
    // Bijective?
    let mut hit = vec![false; n];
    for &im in &phi {
        if hit[im as usize] {
            return false;
        }
        hit[im as usize] = true;
    }
    // Homomorphism on all pairs.
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            if phi[b.mul(x, y) as usize] != a.mul(phi[x as usize], phi[y as usize]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens;

    fn d8() -> Group {
        let r = Permutation::parse_cycles("(1 2 3 4)", 4).unwrap();
        let s = Permutation::parse_cycles("(1 3)", 4).unwrap();
        close_generators(4, &[r, s], "D8", DEFAULT_ELEMENT_CAP).unwrap()
    }

    fn s3() -> Group {
        gens::symmetric(3).unwrap()
    }

    #[test]
    fn cyclic_closure() {
        let c = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let g = close_generators(3, &[c], "C3", DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn d8_closure_and_center() {
        let g = d8();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().len(), 2);
    }

    #[test]
    fn a5_closure() {
        let a = Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        let b = Permutation::parse_cycles("(3 4 5)", 5).unwrap();
        let g = close_generators(5, &[a, b], "A5", DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 60);
        assert!(g.center().len() == 1);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let a = Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        let b = Permutation::parse_cycles("(3 4 5)", 5).unwrap();
        assert!(matches!(
            close_generators(5, &[a, b], "A5", 10),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn centralizer_of_identity_is_everything() {
        let g = s3();
        assert_eq!(g.centralizer(&[0]).order(), 6);
        assert_eq!(g.centralizer(&[]).order(), 6);
    }

    #[test]
    fn centralizer_in_d8() {
        let g = d8();
        let refl = g
            .index_of(&Permutation::parse_cycles("(1 3)", 4).unwrap())
            .unwrap();
        assert_eq!(g.centralizer(&[refl]).order(), 4);
    }

    #[test]
    fn centralizer_of_three_cycle_in_s3() {
        let g = s3();
        let c = g
            .index_of(&Permutation::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap();
        let cent = g.centralizer(&[c]);
        assert_eq!(cent.order(), 3);
        assert!(cent.is_abelian);
    }

    #[test]
    fn centers() {
        let g = s3();
        assert_eq!(g.center().len(), 1);
        let s4 = gens::symmetric(4).unwrap();
        assert_eq!(s4.center().len(), 1);
    }

    #[test]
    fn element_orders() {
        let g = d8();
        assert_eq!(g.element_order(0), 1);
        let r = g
            .index_of(&Permutation::parse_cycles("(1 2 3 4)", 4).unwrap())
            .unwrap();
        assert_eq!(g.element_order(r), 4);
        for x in 0..g.order() as u32 {
            assert_eq!(g.order() % g.element_order(x) as usize, 0);
        }
    }

    #[test]
    fn conjugacy_class_sizes() {
        let g = s3();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let s4 = gens::symmetric(4).unwrap();
        let mut sizes: Vec<usize> = s4.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(sizes.iter().sum::<usize>(), 24);
    }

    #[test]
    fn transported_centralizers_match_direct() {
        let s4 = gens::symmetric(4).unwrap();
        for x in 0..s4.order() as u32 {
            assert_eq!(s4.element_centralizer(x), s4.centralizer_members(&[x]));
        }
    }

    #[test]
    fn abelian_subgroup_classes_s3() {
        let g = s3();
        let reps = g.abelian_subgroups_up_to_conjugacy(true, 1000).unwrap();
        let orders: Vec<usize> = reps.iter().map(|r| r.order()).collect();
        assert_eq!(orders, vec![1, 2, 3]);
    }

    #[test]
    fn abelian_subgroup_classes_d8() {
        let g = d8();
        let reps = g.abelian_subgroups_up_to_conjugacy(true, 1000).unwrap();
        let mut orders: Vec<usize> = reps.iter().map(|r| r.order()).collect();
        orders.sort_unstable();
        // trivial, three C2 classes, C4, two Klein classes
        assert_eq!(orders, vec![1, 2, 2, 2, 4, 4, 4]);
        assert_eq!(reps.len(), 7);
    }

    #[test]
    fn conjugating_representatives_lands_on_one_class() {
        for g in [s3(), d8(), gens::alternating(4).unwrap()] {
            let reps = g.abelian_subgroups_up_to_conjugacy(true, 10_000).unwrap();
            let canon: HashSet<Vec<u32>> = reps.iter().map(|r| r.members.clone()).collect();
            for rep in &reps {
                for e in 0..g.order() as u32 {
                    let mut moved: Vec<u32> =
                        rep.members.iter().map(|&m| g.conj(m, e)).collect();
                    moved.sort_unstable();
                    assert!(canon.contains(&g.canonical_conjugate(&moved)));
                }
            }
        }
    }

    #[test]
    fn maximal_abelian_s3() {
        let g = s3();
        let maxab = g.maximal_abelian_subgroups();
        assert_eq!(maxab.len(), 4);
        let mut orders: Vec<usize> = maxab.iter().map(|m| m.order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 2, 2, 3]);
    }

    #[test]
    fn maximal_abelian_a5() {
        let a = Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap();
        let b = Permutation::parse_cycles("(3 4 5)", 5).unwrap();
        let g = close_generators(5, &[a, b], "A5", DEFAULT_ELEMENT_CAP).unwrap();
        let maxab = g.maximal_abelian_subgroups();
        let mut orders: Vec<usize> = maxab.iter().map(|m| m.order()).collect();
        orders.sort_unstable();
        let threes = orders.iter().filter(|&&o| o == 3).count();
        let fours = orders.iter().filter(|&&o| o == 4).count();
        let fives = orders.iter().filter(|&&o| o == 5).count();
        assert_eq!((threes, fours, fives), (10, 5, 6));
        assert_eq!(orders.len(), 21);
    }

    #[test]
    fn maximal_abelian_self_centralizing() {
        for g in [s3(), d8(), gens::symmetric(4).unwrap()] {
            for m in g.maximal_abelian_subgroups() {
                assert_eq!(g.centralizer_members(&m.members), m.members);
            }
        }
    }

    #[test]
    fn maximal_abelian_of_abelian_group() {
        let c = Permutation::parse_cycles("(1 2 3 4 5 6)", 6).unwrap();
        let g = close_generators(6, &[c], "C6", DEFAULT_ELEMENT_CAP).unwrap();
        let maxab = g.maximal_abelian_subgroups();
        assert_eq!(maxab.len(), 1);
        assert_eq!(maxab[0].order(), 6);
    }

    #[test]
    fn frobenius_checks() {
        let g = s3();
        let c3 = g.generated_subgroup(&[g
            .index_of(&Permutation::parse_cycles("(1 2 3)", 3).unwrap())
            .unwrap()]);
        assert!(g.is_frobenius_with_kernel(&c3));

        let a4 = gens::alternating(4).unwrap();
        let klein: Vec<u32> = (0..12)
            .filter(|&x| a4.element_order(x) <= 2)
            .collect();
        let v = a4.subgroup(klein).unwrap();
        assert!(a4.is_frobenius_with_kernel(&v));

        let d8 = d8();
        let c4 = d8.generated_subgroup(&[d8
            .index_of(&Permutation::parse_cycles("(1 2 3 4)", 4).unwrap())
            .unwrap()]);
        assert!(!d8.is_frobenius_with_kernel(&c4));
    }

    #[test]
    fn iso_recognition() {
        let q8 = gens::generalized_quaternion(8).unwrap();
        assert!(small_iso_type(&q8, &IsoTarget::Quaternion8).unwrap());
        assert!(!small_iso_type(&q8, &IsoTarget::Dihedral8).unwrap());
        assert!(small_iso_type(&d8(), &IsoTarget::Dihedral8).unwrap());
        assert!(!small_iso_type(&d8(), &IsoTarget::Quaternion8).unwrap());
        let ss = gens::s3_times_s3().unwrap();
        assert!(small_iso_type(&ss, &IsoTarget::S3xS3).unwrap());
        assert!(small_iso_type(&s3(), &IsoTarget::S3).unwrap());
        assert!(
            small_iso_type(&gens::symmetric(4).unwrap(), &IsoTarget::S4).unwrap()
        );
    }

    #[test]
    fn associativity_spot_check() {
        // Deterministic pseudo-random triples.
        let g = gens::symmetric(4).unwrap();
        let n = g.order() as u64;
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..1000 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = (state >> 33) % n;
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let b = (state >> 33) % n;
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = (state >> 33) % n;
            let (a, b, c) = (a as u32, b as u32, c as u32);
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }

    #[test]
    fn centralizer_contains_cyclic_and_center() {
        for g in [d8(), gens::symmetric(4).unwrap()] {
            for x in 0..g.order() as u32 {
                let cent = g.element_centralizer(x);
                let cyc = g.generated_subgroup(&[x]);
                for &m in &cyc.members {
                    assert!(cent.binary_search(&m).is_ok());
                }
                for &z in g.center() {
                    assert!(cent.binary_search(&z).is_ok());
                }
            }
        }
    }
}
