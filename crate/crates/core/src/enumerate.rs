//! Exhaustive graph enumeration and canonical forms.
//!
//! Labeled trees come from Prüfer sequences, labeled graphs from edge
//! bitmasks, unicyclic graphs from spanning trees plus one extra edge.
//! Isomorphism dedup uses three canonical forms: a rooted-subtree
//! encoding for trees, a cycle-of-subtrees encoding for unicyclic
//! graphs, and the lexicographically minimal adjacency bitstring over
//! all vertex permutations for everything else (fine up to 8 vertices).

use std::collections::HashSet;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::guards;

const UNICYCLIC_ENUM_MAX: usize = 9;

/// All labeled trees on `n` vertices, streamed in Prüfer order. There
/// are exactly `n^(n-2)` of them (one for n = 1, 2).
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n < 1 || n > guards::TREE_ENUM_MAX {
        return Err(Error::guard("tree_enum", guards::TREE_ENUM_MAX, n));
    }
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let g = prufer_decode(&seq, n);
        // odometer step
        let mut i = len;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if seq[i] + 1 < n {
                seq[i] += 1;
                for s in &mut seq[i + 1..] {
                    *s = 0;
                }
                break;
            }
        }
        Some(g)
    }))
}

fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    if n == 1 {
        return Graph::new(1, []).unwrap();
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    Graph::new(n, edges).unwrap()
}

/// One representative per tree isomorphism class on `n` vertices, in
/// first-seen Prüfer order.
pub fn trees_dedup(n: usize) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in labeled_trees(n)? {
        if seen.insert(tree_canonical_string(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// All labeled graphs on `n` vertices (2^C(n,2) of them), optionally
/// restricted to connected ones.
pub fn labeled_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    if n < 1 || n > guards::GRAPH_ENUM_MAX {
        return Err(Error::guard("graph_enum", guards::GRAPH_ENUM_MAX, n));
    }
    let pairs = vertex_pairs(n);
    let total: u64 = 1u64 << pairs.len();
    let mut mask = 0u64;
    Ok(std::iter::from_fn(move || {
        while mask < total {
            let g = graph_from_pair_mask(n, &pairs, mask);
            mask += 1;
            if !connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }))
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}

fn graph_from_pair_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).unwrap()
}

/// One representative per isomorphism class: a labeled graph is kept iff
/// its adjacency bitstring already equals its canonical minimum.
pub fn graphs_dedup(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for g in labeled_graphs(n, connected_only)? {
        if pair_mask(&g) == canonical_bitstring(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

fn pair_mask(g: &Graph) -> u64 {
    let n = g.n();
    let pairs = vertex_pairs(n);
    let mut mask = 0u64;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if g.has_edge(u, v) {
            mask |= 1 << i;
        }
    }
    mask
}

/// Lexicographically minimal adjacency bitstring over all vertex
/// permutations. Brute force, n <= 8.
pub fn canonical_bitstring(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > 8 {
        return Err(Error::guard("canonical_perm", 8, n));
    }
    let pairs = vertex_pairs(n);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if g.has_edge(perm[u], perm[v]) {
                mask |= 1 << i;
            }
        }
        best = best.min(mask);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Canonical encoding of a rooted tree: children encodings sorted and
/// wrapped in parentheses. `blocked` masks vertices that must not be
/// entered (the parent, or the rest of a cycle core).
fn rooted_encoding(g: &Graph, v: usize, blocked: Mask) -> String {
    let mut parts: Vec<String> = bits::iter(g.neighbors(v) & !blocked)
        .map(|c| rooted_encoding(g, c, blocked | bits::bit(v)))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Canonical form of an unrooted tree: root at the center vertex, or at
/// the central edge when peeling leaves leaves two vertices.
pub fn tree_canonical_string(g: &Graph) -> String {
    debug_assert!(g.is_tree());
    let n = g.n();
    if n == 1 {
        return "V()".into();
    }
    let mut alive = bits::full(n);
    while bits::card(alive) > 2 {
        let leaves: Vec<usize> = bits::iter(alive)
            .filter(|&v| bits::card(g.neighbors(v) & alive) == 1)
            .collect();
        for v in leaves {
            alive &= !bits::bit(v);
        }
    }
    let centers = bits::to_vec(alive);
    if centers.len() == 1 {
        format!("V{}", rooted_encoding(g, centers[0], 0))
    } else {
        let (a, b) = (centers[0], centers[1]);
        let sa = rooted_encoding(g, a, bits::bit(b));
        let sb = rooted_encoding(g, b, bits::bit(a));
        if sa <= sb {
            format!("E{sa}{sb}")
        } else {
            format!("E{sb}{sa}")
        }
    }
}

/// Vertices of the unique cycle of a unicyclic graph, in cycle order.
pub fn cycle_core(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_unicyclic() {
        return None;
    }
    let mut alive = bits::full(g.n());
    loop {
        let leaves: Vec<usize> = bits::iter(alive)
            .filter(|&v| bits::card(g.neighbors(v) & alive) == 1)
            .collect();
        if leaves.is_empty() {
            break;
        }
        for v in leaves {
            alive &= !bits::bit(v);
        }
    }
    // walk around the cycle
    let start = bits::iter(alive).next()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = bits::iter(g.neighbors(start) & alive).next()?;
    while cur != start {
        order.push(cur);
        let next = bits::iter(g.neighbors(cur) & alive)
            .find(|&u| u != prev)
            .expect("core vertices have two core neighbors");
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Canonical form of a unicyclic graph: the multiset of rooted trees
/// hanging off the cycle, read around the cycle, minimized over all
/// rotations and both directions.
pub fn unicyclic_canonical_string(g: &Graph) -> String {
    let core = cycle_core(g).expect("unicyclic graph required");
    let k = core.len();
    let core_mask = bits::from_indices(core.iter().copied());
    let hung: Vec<String> = core
        .iter()
        .map(|&c| rooted_encoding(g, c, core_mask & !bits::bit(c)))
        .collect();
    let mut best: Option<String> = None;
    for dir in 0..2 {
        for shift in 0..k {
            let mut seq = Vec::with_capacity(k);
            for i in 0..k {
                let idx = if dir == 0 {
                    (shift + i) % k
                } else {
                    (shift + k - i % k) % k
                };
                seq.push(hung[idx].as_str());
            }
            let cand = format!("{k}|{}", seq.join(";"));
            if best.as_deref().is_none_or(|b| cand.as_str() < b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// One representative per unicyclic isomorphism class on `n` vertices.
/// Candidates are spanning trees plus one extra edge; labeled duplicates
/// collapse first, then classes.
pub fn unicyclic_dedup(n: usize) -> Result<Vec<Graph>> {
    if n < 3 || n > UNICYCLIC_ENUM_MAX {
        return Err(Error::guard("unicyclic_enum", UNICYCLIC_ENUM_MAX, n));
    }
    let pairs = vertex_pairs(n);
    let pair_index = {
        let mut idx = vec![vec![0usize; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            idx[u][v] = i;
            idx[v][u] = i;
        }
        idx
    };
    let mut labeled_seen: HashSet<u64> = HashSet::new();
    let mut class_seen: HashSet<String> = HashSet::new();
    let mut out = Vec::new();
    for tree in labeled_trees(n)? {
        let base = pair_mask(&tree);
        for u in 0..n {
            for v in (u + 1)..n {
                if tree.has_edge(u, v) {
                    continue;
                }
                let mask = base | 1 << pair_index[u][v];
                if !labeled_seen.insert(mask) {
                    continue;
                }
                let g = graph_from_pair_mask(n, &pairs, mask);
                if class_seen.insert(unicyclic_canonical_string(&g)) {
                    out.push(g);
                }
            }
        }
    }
    Ok(out)
}

/// One representative per forest isomorphism class on exactly `n`
/// vertices: multisets of tree classes with sizes summing to `n`.
pub fn forests_dedup(n: usize) -> Result<Vec<Graph>> {
    if n < 1 || n > guards::TREE_ENUM_MAX {
        return Err(Error::guard("tree_enum", guards::TREE_ENUM_MAX, n));
    }
    let trees_by_size: Vec<Vec<Graph>> = (1..=n)
        .map(trees_dedup)
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    pick_components(n, (n, usize::MAX), &trees_by_size, &mut chosen, &mut out)?;
    Ok(out)
}

fn pick_components(
    remaining: usize,
    max_rank: (usize, usize),
    trees_by_size: &[Vec<Graph>],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) -> Result<()> {
    if remaining == 0 {
        let parts: Vec<Graph> = chosen
            .iter()
            .map(|&(size, idx)| trees_by_size[size - 1][idx].clone())
            .collect();
        out.push(Graph::disjoint_union(&parts)?);
        return Ok(());
    }
    // components in non-increasing (size, class index) order
    for size in (1..=remaining.min(max_rank.0)).rev() {
        let start = if size == max_rank.0 {
            max_rank.1.min(trees_by_size[size - 1].len())
        } else {
            trees_by_size[size - 1].len()
        };
        for idx in (0..start).rev() {
            chosen.push((size, idx));
            pick_components(remaining - size, (size, idx + 1), trees_by_size, chosen, out)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Stable isomorphism-class key used by reports and the result cache:
/// specialized encodings for trees and unicyclic graphs, the
/// permutation-minimal bitstring up to 8 vertices, and the labeled
/// encoding beyond that (correct, merely less shared).
pub fn canonical_key(g: &Graph) -> String {
    if g.n() >= 1 && g.is_tree() {
        return format!("t{}:{}", g.n(), tree_canonical_string(g));
    }
    if g.is_unicyclic() {
        return format!("u{}:{}", g.n(), unicyclic_canonical_string(g));
    }
    match canonical_bitstring(g) {
        Ok(bits) => format!("g{}:{:x}", g.n(), bits),
        Err(_) => format!("l:{}", g.to_compact_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn fam(s: &str) -> Graph {
        FamilySpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn labeled_tree_counts() {
        // n^(n-2)
        assert_eq!(labeled_trees(3).unwrap().count(), 3);
        assert_eq!(labeled_trees(4).unwrap().count(), 16);
        assert_eq!(labeled_trees(6).unwrap().count(), 1296);
        assert!(labeled_trees(0).is_err());
        assert!(labeled_trees(13).is_err());
    }

    #[test]
    fn every_decode_is_a_tree() {
        for n in 1..=6 {
            for g in labeled_trees(n).unwrap() {
                assert!(g.is_tree(), "{g}");
            }
        }
    }

    #[test]
    fn tree_class_counts() {
        // unlabeled tree census: 1, 1, 1, 2, 3, 6, 11, 23
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(trees_dedup(i + 1).unwrap().len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(labeled_graphs(3, false).unwrap().count(), 8);
        // brute-force count: 4 connected labeled graphs on 3 vertices
        assert_eq!(labeled_graphs(3, true).unwrap().count(), 4);
        assert_eq!(labeled_graphs(4, true).unwrap().count(), 38);
    }

    #[test]
    fn graph_class_counts() {
        // unlabeled graph census: 1, 2, 4, 11, 34
        assert_eq!(graphs_dedup(1, false).unwrap().len(), 1);
        assert_eq!(graphs_dedup(2, false).unwrap().len(), 2);
        assert_eq!(graphs_dedup(3, false).unwrap().len(), 4);
        assert_eq!(graphs_dedup(4, false).unwrap().len(), 11);
        assert_eq!(graphs_dedup(5, false).unwrap().len(), 34);
        assert_eq!(graphs_dedup(4, true).unwrap().len(), 6);
    }

    #[test]
    fn tree_canon_separates_and_merges() {
        let p4 = fam("path:4");
        let s4 = fam("star:4");
        assert_ne!(tree_canonical_string(&p4), tree_canonical_string(&s4));
        // a relabeled path matches the path
        let p4b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_canonical_string(&p4), tree_canonical_string(&p4b));
    }

    #[test]
    fn cycle_core_of_families() {
        let c5 = fam("cycle:5");
        assert_eq!(cycle_core(&c5).unwrap().len(), 5);
        let mut tadpole = fam("cycle:4");
        tadpole = Graph::new(6, tadpole.edges().chain([(0, 4), (4, 5)]).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(cycle_core(&tadpole).unwrap().len(), 4);
        assert!(cycle_core(&fam("path:4")).is_none());
    }

    #[test]
    fn unicyclic_class_counts() {
        // unlabeled unicyclic census: 1, 2, 5, 13, 33
        assert_eq!(unicyclic_dedup(3).unwrap().len(), 1);
        assert_eq!(unicyclic_dedup(4).unwrap().len(), 2);
        assert_eq!(unicyclic_dedup(5).unwrap().len(), 5);
        assert_eq!(unicyclic_dedup(6).unwrap().len(), 13);
        assert_eq!(unicyclic_dedup(7).unwrap().len(), 33);
    }

    #[test]
    fn forest_class_counts() {
        // unlabeled forest census: 1, 2, 3, 6, 10, 20
        let expected = [1usize, 2, 3, 6, 10, 20];
        for (i, &want) in expected.iter().enumerate() {
            let forests = forests_dedup(i + 1).unwrap();
            assert_eq!(forests.len(), want, "n = {}", i + 1);
            for f in &forests {
                assert!(f.is_forest());
                assert_eq!(f.n(), i + 1);
            }
        }
    }

    #[test]
    fn unicyclic_canon_handles_reflection() {
        // same tadpole attached clockwise vs counterclockwise
        let a = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        let b = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        assert_eq!(unicyclic_canonical_string(&a), unicyclic_canonical_string(&b));
    }

    #[test]
    fn canonical_keys_are_class_invariants() {
        let g1 = fam("cycle:5");
        let g2 = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&g1), canonical_key(&g2));
        assert_ne!(canonical_key(&fam("path:5")), canonical_key(&fam("star:5")));
    }
}
