//! The commuting graph on a chosen vertex subset of a group: vertices are
//! element indices, with an edge between distinct commuting elements.
//! Independent sets are exactly the noncommuting sets, so minimizing the
//! number of parts of a decomposition is a coloring problem on this graph.

use std::collections::HashMap;
use std::io::Write;

use crate::group::Group;
use crate::Result;

pub struct CommutingGraph<'g> {
    pub parent: &'g Group,
    /// Sorted vertex ids (element indices into the parent).
    pub vertices: Vec<u32>,
    /// Sorted neighbor lists, parallel to `vertices`.
    pub adjacency: Vec<Vec<u32>>,
    position: HashMap<u32, usize>,
}

impl<'g> CommutingGraph<'g> {
    /// Builds the graph on the given vertex set. With the noncentral
    /// elements as vertices this is the group's commuting graph; with
    /// `G ∖ A` it is the minimizer's search graph.
    pub fn build(parent: &'g Group, vertices: &[u32]) -> CommutingGraph<'g> {
        let mut vertices: Vec<u32> = vertices.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        let in_set: Vec<bool> = {
            let mut v = vec![false; parent.order()];
            for &x in &vertices {
                v[x as usize] = true;
            }
            v
        };
        // Neighbors of x are the other vertices in C_G(x); the centralizer
        // is transported from the conjugacy class representative, so this
        // scales to groups where all-pairs commuting tests would not.
        let adjacency: Vec<Vec<u32>> = vertices
            .iter()
            .map(|&x| {
                parent
                    .element_centralizer(x)
                    .into_iter()
                    .filter(|&y| y != x && in_set[y as usize])
                    .collect()
            })
            .collect();
        let position = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        CommutingGraph {
            parent,
            vertices,
            adjacency,
            position,
        }
    }

    /// The graph on the nonidentity elements.
    pub fn on_nonidentity(parent: &'g Group) -> CommutingGraph<'g> {
        let vertices: Vec<u32> = (1..parent.order() as u32).collect();
        CommutingGraph::build(parent, &vertices)
    }

    /// The graph on the noncentral elements (empty for abelian groups).
    pub fn on_noncentral(parent: &'g Group) -> CommutingGraph<'g> {
        let center = parent.center();
        let vertices: Vec<u32> = (0..parent.order() as u32)
            .filter(|x| center.binary_search(x).is_err())
            .collect();
        CommutingGraph::build(parent, &vertices)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn position(&self, vertex: u32) -> Option<usize> {
        self.position.get(&vertex).copied()
    }

    pub fn are_adjacent(&self, a: u32, b: u32) -> bool {
        match self.position(a) {
            Some(i) => self.adjacency[i].binary_search(&b).is_ok(),
            None => false,
        }
    }

    /// Connected components as sorted vertex-id lists, ordered by least
    /// vertex id.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = Vec::new();
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(i) = stack.pop() {
                members.push(self.vertices[i]);
                for &w in &self.adjacency[i] {
                    let j = self.position[&w];
                    if comp[j] == usize::MAX {
                        comp[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Whether a vertex set is independent (a noncommuting set).
    pub fn is_independent(&self, set: &[u32]) -> bool {
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if self.are_adjacent(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether a vertex set is a clique.
    pub fn is_clique(&self, members: &[u32]) -> bool {
        members.iter().all(|&v| {
            let i = self.position[&v];
            self.adjacency[i].len() >= members.len() - 1
                && members
                    .iter()
                    .all(|&w| w == v || self.adjacency[i].binary_search(&w).is_ok())
        })
    }

    /// Graphviz DOT output, vertices labeled by cycle notation, in
    /// deterministic order.
    pub fn export_dot(&self, out: &mut impl Write) -> Result<()> {
        writeln!(out, "graph {{")?;
        for &v in &self.vertices {
            writeln!(
                out,
                "  n{} [label=\"{}\"];",
                v,
                self.parent.element(v).cycle_string()
            )?;
        }
        for (i, &v) in self.vertices.iter().enumerate() {
            for &w in &self.adjacency[i] {
                if v < w {
                    writeln!(out, "  n{v} -- n{w};")?;
                }
            }
        }
        writeln!(out, "}}")?;
        Ok(())
    }

    pub fn dot_string(&self) -> String {
        let mut buf = Vec::new();
        self.export_dot(&mut buf).expect("write to Vec cannot fail");
        String::from_utf8(buf).expect("DOT output is UTF-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens;

    #[test]
    fn abelian_noncentral_graph_is_empty() {
        let c6 = gens::cyclic(6).unwrap();
        let g = CommutingGraph::on_noncentral(&c6);
        assert_eq!(g.vertex_count(), 0);
        assert!(g.components().is_empty());
        assert!(g.dot_string().starts_with("graph {"));
    }

    #[test]
    fn s3_nonidentity_graph() {
        let s3 = gens::symmetric(3).unwrap();
        let g = CommutingGraph::on_nonidentity(&s3);
        assert_eq!(g.vertex_count(), 5);
        // The two 3-cycles commute; transpositions are isolated.
        assert_eq!(g.edge_count(), 1);
        let comps = g.components();
        assert_eq!(comps.len(), 4);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2]);
        // DOT export: 5 nodes, 1 edge.
        let dot = g.dot_string();
        assert_eq!(dot.matches("--").count(), 1);
        assert_eq!(dot.matches("label=").count(), 5);
    }

    #[test]
    fn a5_components_are_cliques() {
        let a5 = gens::alternating(5).unwrap();
        let g = CommutingGraph::on_nonidentity(&a5);
        let comps = g.components();
        assert_eq!(comps.len(), 21);
        let mut by_size = std::collections::HashMap::new();
        for c in &comps {
            assert!(g.is_clique(c));
            *by_size.entry(c.len()).or_insert(0usize) += 1;
        }
        assert_eq!(by_size.get(&4), Some(&6));
        assert_eq!(by_size.get(&3), Some(&5));
        assert_eq!(by_size.get(&2), Some(&10));
    }

    #[test]
    fn d8_graph_outside_center_is_perfect_matching() {
        let d8 = gens::dihedral(8).unwrap();
        let g = CommutingGraph::on_noncentral(&d8);
        assert_eq!(g.vertex_count(), 6);
        assert!(g.adjacency.iter().all(|n| n.len() == 1));
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn degree_equals_centralizer_minus_two_on_nonidentity() {
        let s4 = gens::symmetric(4).unwrap();
        let g = CommutingGraph::on_nonidentity(&s4);
        for (i, &v) in g.vertices.iter().enumerate() {
            let cent = s4.element_centralizer(v).len();
            assert_eq!(g.adjacency[i].len(), cent - 2);
        }
    }

    #[test]
    fn independence_is_noncommutation() {
        let s4 = gens::symmetric(4).unwrap();
        let g = CommutingGraph::on_nonidentity(&s4);
        let set: Vec<u32> = g.vertices.iter().copied().take(4).collect();
        let indep = g.is_independent(&set);
        let mut pairwise_noncommuting = true;
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if s4.commutes(a, b) {
                    pairwise_noncommuting = false;
                }
            }
        }
        assert_eq!(indep, pairwise_noncommuting);
    }
}
