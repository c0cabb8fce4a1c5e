//! Exact maximum matching at desk scale.
//!
//! Branch and bound on the lowest free vertex: either it stays unmatched
//! or it is matched to one of its free neighbors. A greedy matching
//! seeds the bound and `matched + floor(free/2)` prunes subtrees that
//! cannot improve it. Exact for every input; intended for n <= 24.

use crate::bits::{self, Mask};
use crate::graph::Graph;

/// Maximum number of pairwise disjoint edges.
pub fn matching_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let adj: Vec<Mask> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut best = greedy_matching(&adj, n);
    branch(&adj, 0, 0, &mut best);
    best
}

fn greedy_matching(adj: &[Mask], n: usize) -> usize {
    let mut used: Mask = 0;
    let mut size = 0;
    for v in 0..n {
        if bits::has(used, v) {
            continue;
        }
        if let Some(u) = bits::iter(adj[v] & !used).next() {
            used |= bits::bit(v) | bits::bit(u);
            size += 1;
        }
    }
    size
}

fn branch(adj: &[Mask], covered: Mask, matched: usize, best: &mut usize) {
    let n = adj.len();
    let free_count = n - bits::card(covered);
    if matched + free_count / 2 <= *best {
        return;
    }
    // lowest free vertex that still has a free neighbor
    let mut v = None;
    let mut skip = covered;
    for cand in bits::iter(!covered & bits::full(n)) {
        if adj[cand] & !skip != 0 {
            v = Some(cand);
            break;
        }
        // isolated within the free subgraph: never matchable later
        skip |= bits::bit(cand);
    }
    let Some(v) = v else {
        *best = (*best).max(matched);
        return;
    };
    for u in bits::iter(adj[v] & !skip) {
        branch(adj, skip | bits::bit(v) | bits::bit(u), matched + 1, best);
    }
    branch(adj, skip | bits::bit(v), matched, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn fam(s: &str) -> Graph {
        FamilySpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn quoted_values() {
        assert_eq!(matching_number(&fam("path:3")), 1);
        assert_eq!(matching_number(&fam("cycle:5")), 2);
        assert_eq!(matching_number(&fam("complete:5")), 2);
    }

    #[test]
    fn cycles_and_completes_floor_half() {
        for n in 3..=12 {
            assert_eq!(matching_number(&fam(&format!("cycle:{n}"))), n / 2);
        }
        for m in 1..=12 {
            assert_eq!(matching_number(&fam(&format!("complete:{m}"))), m / 2);
        }
    }

    #[test]
    fn whiskered_graphs_have_full_matching() {
        for spec in ["path:4", "cycle:5", "complete:4", "star:6"] {
            let g = fam(spec);
            let n = g.n();
            assert_eq!(matching_number(&g.whisker_all()), n, "{spec}");
        }
    }

    #[test]
    fn additive_over_components() {
        let a = fam("path:4");
        let b = fam("cycle:5");
        let both = Graph::disjoint_union(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(
            matching_number(&both),
            matching_number(&a) + matching_number(&b)
        );
    }

    #[test]
    fn edgeless_and_empty() {
        assert_eq!(matching_number(&Graph::new(4, []).unwrap()), 0);
        assert_eq!(matching_number(&Graph::new(1, []).unwrap()), 0);
    }

    /// Oracle: maximum matching by exhaustive search over edge subsets.
    fn brute_force(g: &Graph) -> usize {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut best = 0;
        for mask in 0u64..(1 << edges.len()) {
            let mut used: Mask = 0;
            let mut ok = true;
            let mut size = 0;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let pair = bits::bit(u) | bits::bit(v);
                    if used & pair != 0 {
                        ok = false;
                        break;
                    }
                    used |= pair;
                    size += 1;
                }
            }
            if ok {
                best = best.max(size);
            }
        }
        best
    }

    #[test]
    fn agrees_with_brute_force_on_all_small_graphs() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..(1 << pairs.len()) {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::new(n, edges).unwrap();
                assert_eq!(matching_number(&g), brute_force(&g), "{g}");
            }
        }
    }
}
