//! Dominating-set enumeration and the clique cover number.
//!
//! Both are exhaustive exact searches guarded by size limits: dominating
//! sets by a sweep over all vertex subsets, the clique cover number as
//! the chromatic number of the complement via backtracking coloring.

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::guards;

/// All inclusion-minimal dominating sets, as bitmasks in increasing
/// numeric order.
pub fn minimal_dominating_sets(g: &Graph) -> Result<Vec<Mask>> {
    minimal_dominating_sets_with_guard(g, guards::SUBSET_SEARCH_MAX)
}

pub fn minimal_dominating_sets_with_guard(g: &Graph, max_n: usize) -> Result<Vec<Mask>> {
    let n = g.n();
    if n > max_n {
        return Err(Error::guard("subset_search", max_n, n));
    }
    let closed: Vec<Mask> = (0..n)
        .map(|v| g.neighbors(v) | bits::bit(v))
        .collect();
    let all = bits::full(n);
    let dominates = |w: Mask| -> bool {
        let mut seen = 0;
        for v in bits::iter(w) {
            seen |= closed[v];
        }
        seen == all
    };
    let mut out = Vec::new();
    for w in 0..=all {
        if !dominates(w) {
            continue;
        }
        let minimal = bits::iter(w).all(|v| !dominates(w & !bits::bit(v)));
        if minimal {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn is_dominating(g: &Graph, w: Mask) -> bool {
    let n = g.n();
    let mut seen = 0;
    for v in bits::iter(w & bits::full(n)) {
        seen |= g.neighbors(v) | bits::bit(v);
    }
    seen == bits::full(n)
}

/// Minimum number of cliques covering the vertex set, computed as the
/// chromatic number of the complement graph.
pub fn clique_cover_number(g: &Graph) -> Result<usize> {
    clique_cover_number_with_guard(g, guards::CLIQUE_COVER_MAX)
}

pub fn clique_cover_number_with_guard(g: &Graph, max_n: usize) -> Result<usize> {
    let n = g.n();
    if n > max_n {
        return Err(Error::guard("clique_cover", max_n, n));
    }
    Ok(chromatic_number(&g.complement()))
}

/// Exact chromatic number by iterative deepening over k with a
/// backtracking colorer. Color symmetry is broken by allowing vertex i
/// only colors up to one past the maximum used so far.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // order vertices by degree, densest first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let adj: Vec<Mask> = (0..n).map(|v| g.neighbors(v)).collect();
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if color_from(&adj, &order, 0, k, 0, &mut colors) {
            return k;
        }
    }
    n
}

fn color_from(
    adj: &[Mask],
    order: &[usize],
    pos: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let cap = k.min(used + 1);
    for c in 0..cap {
        if bits::iter(adj[v]).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_from(adj, order, pos + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}
