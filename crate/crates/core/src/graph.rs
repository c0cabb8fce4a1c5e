//! Finite simple graphs with labeled vertices, the named families the
//! ideal constructions run over, and the structural predicates
//! (forest/tree/unicyclic/chordal, simplicial vertices, rooted levels).

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// A finite simple graph. Vertices are `0..n` internally; all text I/O is
/// 1-based (`x1..xn`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Vec<String>,
    adj: Vec<Mask>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Graph {
    /// Build a graph from unordered index pairs. Loops and out-of-range
    /// endpoints are rejected; duplicate edges collapse.
    pub fn new<I>(n: usize, edge_iter: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::with_labels(n, edge_iter, default_labels(n))
    }

    pub fn with_labels<I>(n: usize, edge_iter: I, labels: Vec<String>) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > 32 {
            return Err(Error::guard("vertex_words", 32, n));
        }
        if labels.len() != n {
            return Err(Error::Construction(format!(
                "{} labels for {} vertices",
                labels.len(),
                n
            )));
        }
        let mut edges = BTreeSet::new();
        for (a, b) in edge_iter {
            if a == b {
                return Err(Error::Construction(format!("loop at vertex {}", a + 1)));
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            edges.insert((u, v));
        }
        let mut adj = vec![0 as Mask; n];
        for &(u, v) in &edges {
            adj[u] |= bits::bit(v);
            adj[v] |= bits::bit(u);
        }
        Ok(Graph {
            n,
            edges,
            labels,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && bits::has(self.adj[u], v)
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Open neighborhood N(v) as a bitmask.
    pub fn neighbors(&self, v: usize) -> Mask {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::card(self.adj[v])
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Mask> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.adj[v] | bits::bit(v))
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !bits::has(self.adj[u], v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::with_labels(self.n, edges, self.labels.clone()).expect("complement is simple")
    }

    /// Induced subgraph on the vertices of `mask`, reindexed to
    /// `0..card(mask)` in increasing original order. Labels carry over.
    pub fn induced(&self, mask: Mask) -> Graph {
        let verts = bits::to_vec(mask);
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| bits::has(mask, u) && bits::has(mask, v))
            .map(|&(u, v)| (index[u], index[v]));
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::with_labels(verts.len(), edges, labels).expect("induced subgraph is simple")
    }

    /// Vertex sets of the connected components, lowest vertex first.
    pub fn component_masks(&self) -> Vec<Mask> {
        let mut seen: Mask = 0;
        let mut out = Vec::new();
        for start in 0..self.n {
            if bits::has(seen, start) {
                continue;
            }
            let mut comp = bits::bit(start);
            loop {
                let mut grown = comp;
                for v in bits::iter(comp) {
                    grown |= self.adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Graph> {
        self.component_masks()
            .into_iter()
            .map(|m| self.induced(m))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_masks().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.component_masks().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Connected with exactly one cycle, i.e. connected and m = n.
    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edges.len() == self.n
    }

    /// Vertices whose closed neighborhood induces a complete subgraph.
    pub fn simplicial_vertices(&self) -> Mask {
        let mut out: Mask = 0;
        for v in 0..self.n {
            if self.is_simplicial_within(v, bits::full(self.n)) {
                out |= bits::bit(v);
            }
        }
        out
    }

    fn is_simplicial_within(&self, v: usize, alive: Mask) -> bool {
        let nb = bits::to_vec(self.adj[v] & alive);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !bits::has(self.adj[a], b) {
                    return false;
                }
            }
        }
        true
    }

    /// Perfect elimination order by repeatedly deleting the lowest-index
    /// simplicial vertex of the remaining induced subgraph. `None` when
    /// the graph is not chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut alive = bits::full(self.n);
        let mut order = Vec::with_capacity(self.n);
        while alive != 0 {
            let pick = bits::iter(alive).find(|&v| self.is_simplicial_within(v, alive))?;
            order.push(pick);
            alive &= !bits::bit(pick);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    pub fn structure_predicates(&self) -> StructureReport {
        StructureReport {
            is_forest: self.is_forest(),
            is_tree: self.is_tree(),
            is_unicyclic: self.is_unicyclic(),
            is_chordal: self.is_chordal(),
            components: self.components(),
        }
    }

    /// Attach a pendant vertex to every vertex: the result lives on `2n`
    /// vertices with the new vertex `n + i` (labeled `y(i+1)`) joined to
    /// vertex `i`.
    pub fn whisker_all(&self) -> Graph {
        let n = self.n;
        let mut labels = self.labels.clone();
        labels.extend((1..=n).map(|i| format!("y{i}")));
        let edges = self
            .edges
            .iter()
            .copied()
            .chain((0..n).map(|i| (i, n + i)));
        Graph::with_labels(2 * n, edges, labels).expect("whiskered graph is simple")
    }

    /// BFS levels from `root` plus the height. Errors unless the graph is
    /// a tree.
    pub fn rooted_levels(&self, root: usize) -> Result<(Vec<usize>, usize)> {
        if root >= self.n {
            return Err(Error::VertexOutOfRange { vertex: root, n: self.n });
        }
        if !self.is_tree() {
            return Err(Error::Structure("rooted levels require a tree".into()));
        }
        let mut level = vec![usize::MAX; self.n];
        level[root] = 0;
        let mut frontier = vec![root];
        let mut height = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &v in &frontier {
                for u in bits::iter(self.adj[v]) {
                    if level[u] == usize::MAX {
                        level[u] = level[v] + 1;
                        height = height.max(level[u]);
                        next.push(u);
                    }
                }
            }
            frontier = next;
        }
        Ok((level, height))
    }

    /// Disjoint union; vertices of later summands are shifted up and the
    /// result is relabeled `x1..xN`.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let n: usize = parts.iter().map(|g| g.n).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in parts {
            edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
            offset += g.n;
        }
        Graph::new(n, edges)
    }

    /// Compact 1-based text encoding, e.g. `"4:1-2,2-3,3-4"`. Every
    /// report case uses this so failures can be replayed.
    pub fn to_compact_string(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        format!("{}:{}", self.n, edges.join(","))
    }

    pub fn from_compact_string(s: &str) -> Result<Graph> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: msg.to_string(),
        };
        let (n_str, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let n: usize = n_str.trim().parse().map_err(|_| bad("bad vertex count"))?;
        let mut edges = Vec::new();
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (a, b) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| bad("edge must be u-v"))?;
            let u: usize = a.parse().map_err(|_| bad("bad endpoint"))?;
            let v: usize = b.parse().map_err(|_| bad("bad endpoint"))?;
            if u == 0 || v == 0 {
                return Err(bad("vertex indices are 1-based"));
            }
            edges.push((u - 1, v - 1));
        }
        Graph::new(n, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

/// Named graph families with the edge conventions used throughout:
/// `P_n` is the path `x1-..-xn`, `C_k` adds `{x1,xk}`, `S_n` has center
/// `x1`, `W_k` on `k` vertices is a rim cycle `C_{k-1}` plus a hub `xk`
/// adjacent to the whole rim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Whiskered(Box<FamilySpec>),
    EdgeList { n: usize, edges: Vec<(usize, usize)> },
    DisjointUnion(Vec<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => {
                require_at_least("path", *n, 1)?;
                Graph::new(*n, (1..*n).map(|i| (i - 1, i)))
            }
            FamilySpec::Cycle(k) => {
                require_at_least("cycle", *k, 3)?;
                Graph::new(*k, (1..*k).map(|i| (i - 1, i)).chain([(0, *k - 1)]))
            }
            FamilySpec::Star(n) => {
                require_at_least("star", *n, 1)?;
                Graph::new(*n, (1..*n).map(|i| (0, i)))
            }
            FamilySpec::Complete(n) => {
                require_at_least("complete", *n, 1)?;
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in (u + 1)..*n {
                        edges.push((u, v));
                    }
                }
                Graph::new(*n, edges)
            }
            FamilySpec::CompleteBipartite(m, n) => {
                require_at_least("complete_bipartite", *m, 1)?;
                require_at_least("complete_bipartite", *n, 1)?;
                let mut edges = Vec::new();
                for u in 0..*m {
                    for v in 0..*n {
                        edges.push((u, m + v));
                    }
                }
                Graph::new(m + n, edges)
            }
            FamilySpec::Wheel(k) => {
                // hub plus a rim cycle, so at least 4 vertices total
                require_at_least("wheel", *k, 4)?;
                let rim = *k - 1;
                let hub = rim;
                let edges = (1..rim)
                    .map(|i| (i - 1, i))
                    .chain([(0, rim - 1)])
                    .chain((0..rim).map(|i| (i, hub)));
                Graph::new(*k, edges)
            }
            FamilySpec::Whiskered(base) => Ok(base.build()?.whisker_all()),
            FamilySpec::EdgeList { n, edges } => Graph::new(*n, edges.iter().copied()),
            FamilySpec::DisjointUnion(parts) => {
                if parts.is_empty() {
                    return Err(Error::Construction(
                        "disjoint_union needs at least one part".into(),
                    ));
                }
                let built: Result<Vec<Graph>> = parts.iter().map(|p| p.build()).collect();
                Graph::disjoint_union(&built?)
            }
        }
    }

    /// Parse the string syntax: `path:5`, `wheel:8`,
    /// `complete_bipartite:3,2`, `whiskered(cycle:4)`,
    /// `disjoint_union(path:3,cycle:3)`, `edge_list:3:1-2,2-3`.
    pub fn parse(input: &str) -> Result<FamilySpec> {
        let s = input.trim();
        let bad = |msg: String| Error::Construction(msg);
        if let Some(rest) = strip_call(s, "whiskered") {
            return Ok(FamilySpec::Whiskered(Box::new(FamilySpec::parse(rest)?)));
        }
        if let Some(rest) = strip_call(s, "disjoint_union") {
            let parts: Result<Vec<FamilySpec>> =
                split_top_level(rest).into_iter().map(FamilySpec::parse).collect();
            return Ok(FamilySpec::DisjointUnion(parts?));
        }
        if let Some(rest) = s.strip_prefix("edge_list:") {
            let (n_str, edges_str) = rest
                .split_once(':')
                .ok_or_else(|| bad("edge_list:<n>:<u-v,...>".into()))?;
            let n = n_str
                .parse::<usize>()
                .map_err(|_| bad(format!("bad vertex count `{n_str}`")))?;
            let g = Graph::from_compact_string(&format!("{n}:{edges_str}"))?;
            return Ok(FamilySpec::EdgeList {
                n,
                edges: g.edges().collect(),
            });
        }
        let (kind, args) = match s.split_once(':') {
            Some((k, a)) => (k.trim(), a.trim()),
            None => return Err(bad(format!("unrecognized family `{s}`"))),
        };
        let nums: Result<Vec<usize>> = args
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad parameter `{t}` in `{s}`")))
            })
            .collect();
        let nums = nums?;
        let one = |nums: &[usize]| -> Result<usize> {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(bad(format!("`{kind}` takes one parameter")))
            }
        };
        match kind {
            "path" => Ok(FamilySpec::Path(one(&nums)?)),
            "cycle" => Ok(FamilySpec::Cycle(one(&nums)?)),
            "star" => Ok(FamilySpec::Star(one(&nums)?)),
            "complete" => Ok(FamilySpec::Complete(one(&nums)?)),
            "wheel" => Ok(FamilySpec::Wheel(one(&nums)?)),
            "complete_bipartite" => {
                if nums.len() == 2 {
                    Ok(FamilySpec::CompleteBipartite(nums[0], nums[1]))
                } else {
                    Err(bad("`complete_bipartite` takes two parameters".into()))
                }
            }
            other => Err(bad(format!("unknown family kind `{other}`"))),
        }
    }
}

fn require_at_least(kind: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::Construction(format!(
            "`{kind}` needs a parameter >= {min}, got {value}"
        )))
    } else {
        Ok(())
    }
}

fn strip_call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    let body = s.strip_prefix(name)?.trim();
    let body = body.strip_prefix('(')?;
    let body = body.strip_suffix(')')?;
    Some(body)
}

/// Split `a,b(c,d),e` on top-level commas only.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.build()
}

/// Parse the edge-list text format: first line `n m`, then `m` lines
/// `u v` with 1-based indices. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut payload: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if !line.is_empty() {
            payload.push((idx + 1, line));
        }
    }
    let (header_line, header) = payload
        .first()
        .copied()
        .ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse { line: header_line, msg: "expected `n m` header".into() })?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(Error::Parse { line: header_line, msg: "expected `n m` header".into() })?;
    if it.next().is_some() {
        return Err(Error::Parse { line: header_line, msg: "trailing tokens in header".into() });
    }
    if payload.len() - 1 != m {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("header promises {m} edges, found {}", payload.len() - 1),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for &(line, body) in &payload[1..] {
        let mut it = body.split_whitespace();
        let parse_endpoint = |tok: Option<&str>| -> Result<usize> {
            let t = tok.ok_or(Error::Parse { line, msg: "expected `u v`".into() })?;
            let v: usize = t
                .parse()
                .map_err(|_| Error::Parse { line, msg: format!("bad vertex `{t}`") })?;
            if v == 0 || v > n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {v} out of range 1..={n}"),
                });
            }
            Ok(v - 1)
        };
        let u = parse_endpoint(it.next())?;
        let v = parse_endpoint(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse { line, msg: "trailing tokens after edge".into() });
        }
        if u == v {
            return Err(Error::Parse { line, msg: "loops are not allowed".into() });
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

pub fn to_edge_list_string(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[derive(Clone, Debug)]
pub struct StructureReport {
    pub is_forest: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub is_chordal: bool,
    pub components: Vec<Graph>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Graph {
        FamilySpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn family_shapes() {
        let p3 = fam("path:3");
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let w8 = fam("wheel:8");
        assert_eq!(w8.n(), 8);
        assert_eq!(w8.edge_count(), 14);

        let k32 = fam("complete_bipartite:3,2");
        assert_eq!(k32.n(), 5);
        assert_eq!(k32.edge_count(), 6);

        let wc4 = fam("whiskered(cycle:4)");
        assert_eq!(wc4.n(), 8);
        assert_eq!(wc4.edge_count(), 8);

        let du = fam("disjoint_union(path:3,cycle:3)");
        assert_eq!(du.n(), 6);
        assert_eq!(du.edge_count(), 5);
        assert_eq!(du.components().len(), 2);
    }

    #[test]
    fn family_errors() {
        assert!(FamilySpec::Path(0).build().is_err());
        assert!(FamilySpec::Cycle(2).build().is_err());
        assert!(FamilySpec::Wheel(3).build().is_err());
        assert!(FamilySpec::parse("path:3,4").is_err());
        assert!(FamilySpec::parse("blorb:3").is_err());
    }

    #[test]
    fn closed_neighborhoods() {
        let c5 = fam("cycle:5");
        assert_eq!(
            bits::to_vec(c5.closed_neighborhood(0).unwrap()),
            vec![0, 1, 4]
        );
        let k4 = fam("complete:4");
        for v in 0..4 {
            assert_eq!(k4.closed_neighborhood(v).unwrap(), bits::full(4));
        }
        let isolated = Graph::new(3, []).unwrap();
        assert_eq!(bits::to_vec(isolated.closed_neighborhood(1).unwrap()), vec![1]);
        assert!(c5.closed_neighborhood(5).is_err());
    }

    #[test]
    fn simplicial_vertices_examples() {
        assert_eq!(fam("complete:3").simplicial_vertices(), 0b111);
        assert_eq!(fam("path:4").simplicial_vertices(), 0b1001);
        assert_eq!(fam("cycle:4").simplicial_vertices(), 0);
    }

    #[test]
    fn predicates() {
        let p5 = fam("path:5");
        let r = p5.structure_predicates();
        assert!(r.is_forest && r.is_tree && !r.is_unicyclic && r.is_chordal);
        assert_eq!(r.components.len(), 1);

        let c6 = fam("cycle:6");
        let r = c6.structure_predicates();
        assert!(r.is_unicyclic && !r.is_chordal && !r.is_forest);

        let k4 = fam("complete:4");
        let r = k4.structure_predicates();
        assert!(r.is_chordal && !r.is_forest);
    }

    #[test]
    fn chordal_graphs_have_simplicial_vertices() {
        for n in 2..=6 {
            for g in crate::enumerate::graphs_dedup(n, false).unwrap() {
                if g.is_chordal() {
                    assert_ne!(g.simplicial_vertices(), 0, "{g}");
                }
                if g.is_forest() {
                    assert!(g.is_chordal(), "{g}");
                }
            }
        }
    }

    #[test]
    fn whiskers() {
        let one = Graph::new(1, []).unwrap().whisker_all();
        assert_eq!((one.n(), one.edge_count()), (2, 1));
        let p2 = fam("path:2").whisker_all();
        assert_eq!((p2.n(), p2.edge_count()), (4, 3));
        assert!(p2.is_tree());
        let c3 = fam("cycle:3").whisker_all();
        assert_eq!((c3.n(), c3.edge_count()), (6, 6));
        assert_eq!(c3.label(3), "y1");
    }

    /// The rooted tree used in the colon-identity tests: root z with two
    /// branches, heights per the stated levels.
    pub(crate) fn rooted_example_tree() -> Graph {
        // 0=z, 1..7 = y1..y7
        Graph::with_labels(
            8,
            [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (4, 6), (4, 7)],
            vec![
                "z".into(),
                "y1".into(),
                "y2".into(),
                "y3".into(),
                "y4".into(),
                "y5".into(),
                "y6".into(),
                "y7".into(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rooted_levels_example() {
        let t = rooted_example_tree();
        let (levels, height) = t.rooted_levels(0).unwrap();
        assert_eq!(levels[1], 1);
        assert_eq!(levels[2], 1);
        assert_eq!(levels[3], 2);
        assert_eq!(levels[4], 2);
        assert_eq!(levels[5], 2);
        assert_eq!(levels[6], 3);
        assert_eq!(levels[7], 3);
        assert_eq!(height, 3);

        let p3 = fam("path:3");
        assert_eq!(p3.rooted_levels(0).unwrap().1, 2);
        let single = Graph::new(1, []).unwrap();
        assert_eq!(single.rooted_levels(0).unwrap().1, 0);
        assert!(fam("cycle:4").rooted_levels(0).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# demo\n4 3\n1 2\n\n2 3\n3 4 # tail\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        let back = parse_edge_list(&to_edge_list_string(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn edge_list_errors_name_lines() {
        let err = parse_edge_list("3 2\n1 2\n1 5\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_edge_list("3 4\n1 2\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn compact_round_trip() {
        let g = fam("wheel:6");
        let s = g.to_compact_string();
        assert_eq!(Graph::from_compact_string(&s).unwrap(), g);
    }
}
