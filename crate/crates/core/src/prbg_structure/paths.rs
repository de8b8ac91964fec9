//! Length-3 path classification, the acyclicity theorem, extreme-edge
//! peeling, and the bounded-longest-path edge bound.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::ordered_bipartite::{verify_path_restricted, OrderedBipartiteGraph, Vertex};

/// The four shapes of a 3-edge path, classified by the sign pair
/// `(sign(v_m - v_e), sign(u_e - u_m))` where `(u_m, v_m)` is the middle
/// edge and `(u_m, v_e)`, `(u_e, v_m)` are the pendant edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum P3Type {
    /// (+, +)
    Type1,
    /// (-, -)
    Type2,
    /// (+, -)
    Type3,
    /// (-, +)
    Type4,
}

impl P3Type {
    pub const ALL: [P3Type; 4] = [P3Type::Type1, P3Type::Type2, P3Type::Type3, P3Type::Type4];

    pub fn index(self) -> usize {
        match self {
            P3Type::Type1 => 1,
            P3Type::Type2 => 2,
            P3Type::Type3 => 3,
            P3Type::Type4 => 4,
        }
    }

    pub fn from_index(i: usize) -> Option<P3Type> {
        P3Type::ALL.get(i.checked_sub(1)?).copied()
    }
}

/// Counts of 3-edge path subgraphs by type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct P3Census {
    pub type1: usize,
    pub type2: usize,
    pub type3: usize,
    pub type4: usize,
}

impl P3Census {
    pub fn total(&self) -> usize {
        self.type1 + self.type2 + self.type3 + self.type4
    }

    pub fn count(&self, t: P3Type) -> usize {
        match t {
            P3Type::Type1 => self.type1,
            P3Type::Type2 => self.type2,
            P3Type::Type3 => self.type3,
            P3Type::Type4 => self.type4,
        }
    }

    pub fn missing_types(&self) -> Vec<P3Type> {
        P3Type::ALL
            .into_iter()
            .filter(|&t| self.count(t) == 0)
            .collect()
    }
}

/// Counts every 3-edge path subgraph of `g`: a middle edge plus one pendant
/// edge at each of its endpoints.
pub fn classify_p3(g: &OrderedBipartiteGraph) -> P3Census {
    let mut census = P3Census::default();
    for (u_m, v_m) in g.edges() {
        for &v_e in g.u_neighbors(u_m) {
            if v_e == v_m {
                continue;
            }
            for &u_e in g.v_neighbors(v_m) {
                if u_e == u_m {
                    continue;
                }
                match (v_m > v_e, u_e > u_m) {
                    (true, true) => census.type1 += 1,
                    (false, false) => census.type2 += 1,
                    (true, false) => census.type3 += 1,
                    (false, true) => census.type4 += 1,
                }
            }
        }
    }
    census
}

/// An explicit cycle, as a closed vertex sequence (first vertex repeated at
/// the end is implied, not stored).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub cycle: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcyclicityCheck {
    Acyclic,
    Cycle(CycleWitness),
}

/// The acyclicity theorem as a check: requires `g` to pass the
/// path-restriction verifier and to be missing at least one P3 type, then
/// confirms that `g` has no cycle. Precondition failures are reported
/// distinctly from cycle detection.
pub fn assert_acyclic_if_type_missing(
    g: &OrderedBipartiteGraph,
) -> Result<AcyclicityCheck, StructureError> {
    if verify_path_restricted(g).is_err() {
        return Err(StructureError::Precondition(
            "graph is not path-restricted".into(),
        ));
    }
    let census = classify_p3(g);
    if census.missing_types().is_empty() {
        return Err(StructureError::Precondition(
            "all four P3 types are present".into(),
        ));
    }
    Ok(match find_cycle(g) {
        Some(cycle) => AcyclicityCheck::Cycle(CycleWitness { cycle }),
        None => AcyclicityCheck::Acyclic,
    })
}

/// Standard undirected cycle search by depth-first traversal.
pub(crate) fn find_cycle(g: &OrderedBipartiteGraph) -> Option<Vec<Vertex>> {
    let mut parent: BTreeMap<Vertex, Option<Vertex>> = BTreeMap::new();
    for start in g.vertices() {
        if parent.contains_key(&start) {
            continue;
        }
        parent.insert(start, None);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            let px = parent[&x];
            for y in g.neighbors(x) {
                if Some(y) == px {
                    continue;
                }
                if parent.contains_key(&y) {
                    // walk both ancestries to assemble the explicit cycle
                    let chain = |mut v: Vertex| {
                        let mut c = vec![v];
                        while let Some(Some(p)) = parent.get(&v).copied() {
                            c.push(p);
                            v = p;
                        }
                        c
                    };
                    let a = chain(x);
                    let b = chain(y);
                    // cut both chains at their lowest common ancestor
                    let in_b: std::collections::BTreeSet<Vertex> = b.iter().copied().collect();
                    let lca = a.iter().find(|v| in_b.contains(v)).copied()?;
                    let mut cycle: Vec<Vertex> =
                        a.iter().take_while(|&&v| v != lca).copied().collect();
                    cycle.push(lca);
                    let tail: Vec<Vertex> =
                        b.iter().take_while(|&&v| v != lca).copied().collect();
                    cycle.extend(tail.into_iter().rev());
                    return Some(cycle);
                }
                parent.insert(y, Some(x));
                stack.push(y);
            }
        }
    }
    None
}

/// Removes, for each `V` vertex of degree >= 1, its incident edge with the
/// largest `u` index (the leftmost under the right-to-left drawing).
pub fn peel_leftmost(g: &OrderedBipartiteGraph) -> OrderedBipartiteGraph {
    g.with_extreme_edges_removed(crate::ordered_bipartite::ExtremeSide::Left)
}

/// Maximum edge count over all forward paths, 0 for an edgeless graph.
/// Dynamic programming over edge-ending states; strict monotonicity makes
/// the state graph acyclic. The enumeration-based maximum serves as its
/// independent test oracle.
pub fn longest_forward_path_length(g: &OrderedBipartiteGraph) -> usize {
    // ends_at_u[(u, v)]: longest increasing traversal whose last hop is v->u;
    // ends_at_v[(u, v)]: last hop u->v.
    let mut ends_at_u: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut ends_at_v: BTreeMap<(usize, usize), usize> = BTreeMap::new();

    fn at_u(
        g: &OrderedBipartiteGraph,
        u: usize,
        v: usize,
        ends_at_u: &mut BTreeMap<(usize, usize), usize>,
        ends_at_v: &mut BTreeMap<(usize, usize), usize>,
    ) -> usize {
        if let Some(&x) = ends_at_u.get(&(u, v)) {
            return x;
        }
        let mut best = 1;
        for &u_prev in g.v_neighbors(v) {
            if u_prev < u {
                best = best.max(1 + at_v(g, u_prev, v, ends_at_u, ends_at_v));
            }
        }
        ends_at_u.insert((u, v), best);
        best
    }

    fn at_v(
        g: &OrderedBipartiteGraph,
        u: usize,
        v: usize,
        ends_at_u: &mut BTreeMap<(usize, usize), usize>,
        ends_at_v: &mut BTreeMap<(usize, usize), usize>,
    ) -> usize {
        if let Some(&x) = ends_at_v.get(&(u, v)) {
            return x;
        }
        let mut best = 1;
        for &v_prev in g.u_neighbors(u) {
            if v_prev < v {
                best = best.max(1 + at_u(g, u, v_prev, ends_at_u, ends_at_v));
            }
        }
        ends_at_v.insert((u, v), best);
        best
    }

    let mut overall = 0;
    for (u, v) in g.edges() {
        overall = overall.max(at_u(g, u, v, &mut ends_at_u, &mut ends_at_v));
        overall = overall.max(at_v(g, u, v, &mut ends_at_u, &mut ends_at_v));
    }
    overall
}

/// Edge bound for graphs with bounded longest forward path, checked by
/// iterated peeling. With `k` the longest forward path length: for `k <= 3`
/// asserts `|E| <= 2(|U|+|V|) - 1` directly, otherwise peels until the
/// longest path is at most 3 (at most `|V|` edges leave per round) and
/// asserts `|E| <= (k-2)(|U|+|V|) + 2(|U|+|V|) - 1`.
pub fn check_bounded_path_bound(g: &OrderedBipartiteGraph) -> bool {
    let n = g.vertex_count();
    let k = longest_forward_path_length(g);
    if k <= 3 {
        return g.edge_count() <= 2 * n - 1;
    }
    let mut h = g.clone();
    let mut rounds = 0;
    while longest_forward_path_length(&h) > 3 {
        let before = h.edge_count();
        h = peel_leftmost(&h);
        let removed = before - h.edge_count();
        if removed == 0 || removed > g.v_count() {
            return false;
        }
        rounds += 1;
        if rounds > k {
            // peeling must shorten the longest path every round
            return false;
        }
    }
    g.edge_count() <= (k - 2) * n + 2 * n - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordered_bipartite::enumerate_forward_paths;

    fn graph(u: usize, v: usize, edges: &[(usize, usize)]) -> OrderedBipartiteGraph {
        OrderedBipartiteGraph::new(u, v, edges.iter().copied()).unwrap()
    }

    #[test]
    fn p3_on_monotone_path() {
        // v1-u1-v2-u2 increasing
        let g = graph(2, 2, &[(1, 1), (1, 2), (2, 2)]);
        let c = classify_p3(&g);
        assert_eq!(
            c,
            P3Census {
                type1: 1,
                ..Default::default()
            }
        );
        let mirrored = classify_p3(&g.reverse_orders());
        assert_eq!(
            mirrored,
            P3Census {
                type2: 1,
                ..Default::default()
            }
        );
    }

    #[test]
    fn p3_on_k22() {
        let g = graph(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(classify_p3(&g).total(), 4);
    }

    #[test]
    fn acyclic_check_on_trees_and_paths() {
        let g = graph(2, 3, &[(1, 1), (1, 2), (2, 3)]);
        assert_eq!(
            assert_acyclic_if_type_missing(&g).unwrap(),
            AcyclicityCheck::Acyclic
        );

        // monotone staircase: only type1 present
        let g = graph(3, 3, &[(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]);
        let c = classify_p3(&g);
        assert!(c.type1 > 0 && c.type2 == 0 && c.type3 == 0 && c.type4 == 0);
        assert_eq!(
            assert_acyclic_if_type_missing(&g).unwrap(),
            AcyclicityCheck::Acyclic
        );
    }

    #[test]
    fn acyclic_check_rejects_bad_preconditions() {
        // K22 is not path-restricted
        let g = graph(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert!(matches!(
            assert_acyclic_if_type_missing(&g),
            Err(StructureError::Precondition(_))
        ));
    }

    #[test]
    fn cycle_finder_returns_explicit_cycle() {
        let g = graph(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]);
        let cycle = find_cycle(&g).unwrap();
        assert!(cycle.len() >= 4 && cycle.len() % 2 == 0);
        // consecutive cycle vertices are adjacent, including the wrap
        for i in 0..cycle.len() {
            let a = cycle[i];
            let b = cycle[(i + 1) % cycle.len()];
            let (u, v) = match (a, b) {
                (Vertex::U(u), Vertex::V(v)) | (Vertex::V(v), Vertex::U(u)) => (u, v),
                _ => panic!("cycle does not alternate"),
            };
            assert!(g.has_edge(u, v));
        }
    }

    #[test]
    fn peel_examples() {
        let g = graph(3, 1, &[(1, 1), (2, 1), (3, 1)]);
        let peeled = peel_leftmost(&g);
        assert_eq!(peeled.edges().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);

        let empty = graph(2, 2, &[]);
        assert_eq!(peel_leftmost(&empty).edge_count(), 0);

        // peeling shortens the longest forward path on a 3-edge path
        let p3 = graph(2, 2, &[(1, 1), (1, 2), (2, 2)]);
        assert_eq!(longest_forward_path_length(&p3), 3);
        assert!(longest_forward_path_length(&peel_leftmost(&p3)) <= 2);
    }

    #[test]
    fn longest_path_examples_and_oracle() {
        let single = graph(1, 1, &[(1, 1)]);
        assert_eq!(longest_forward_path_length(&single), 1);
        let empty = graph(1, 1, &[]);
        assert_eq!(longest_forward_path_length(&empty), 0);
        let k22 = graph(2, 2, &[(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(longest_forward_path_length(&k22), 3);

        // dynamic program agrees with the enumeration maximum
        let g = graph(
            4,
            4,
            &[(1, 1), (1, 3), (2, 2), (2, 3), (3, 1), (3, 4), (4, 2), (4, 4)],
        );
        let by_enum = enumerate_forward_paths(&g, 1)
            .map(|p| p.edge_count())
            .max()
            .unwrap_or(0);
        assert_eq!(longest_forward_path_length(&g), by_enum);
    }

    #[test]
    fn bounded_path_bound_examples() {
        // k = 1 star
        let star = graph(1, 3, &[(1, 1), (1, 2), (1, 3)]);
        assert!(check_bounded_path_bound(&star));

        // k = 3 double star
        let double = graph(2, 4, &[(1, 1), (1, 2), (1, 3), (2, 3), (2, 4)]);
        assert_eq!(longest_forward_path_length(&double), 3);
        assert!(check_bounded_path_bound(&double));
    }
}
