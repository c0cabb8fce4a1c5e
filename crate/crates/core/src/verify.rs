//! Named verification suites over enumerated graph families.
//!
//! Every suite walks an exhaustive (or seeded) family of graphs, checks
//! one cluster of quantitative facts about `NI(G)` exactly, and returns
//! a machine-readable report: parameters, case count, failures (each
//! replayable from its recorded graph encoding), findings that are not
//! failures, the seed, and wall time. A suite passes iff it has no
//! failures.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::betti::{
    betti_splitting_report, betti_table_hochster, shift_check_extra_variable, BettiTable,
};
use crate::bits::{self, Mask};
use crate::domination::clique_cover_number;
use crate::enumerate::{
    canonical_key, forests_dedup, graphs_dedup, trees_dedup, unicyclic_dedup,
};
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};
use crate::matching::matching_number;
use crate::monomial::{closed_neighborhood_ideal, Monomial, MonomialIdeal};
use crate::simplicial::{dominance_complex, reduced_homology_ranks};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CaseFailure {
    pub graph: String,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
    pub findings: Vec<String>,
    pub seed: u64,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<SuiteReport> {
        Ok(serde_json::from_value(value.clone())?)
    }
}

/// Accumulates checks for one suite run.
struct Recorder {
    suite: &'static str,
    params: BTreeMap<String, String>,
    seed: u64,
    cases: usize,
    failures: Vec<CaseFailure>,
    findings: Vec<String>,
    started: Instant,
}

impl Recorder {
    fn new(suite: &'static str, seed: u64) -> Recorder {
        Recorder {
            suite,
            params: BTreeMap::new(),
            seed,
            cases: 0,
            failures: Vec::new(),
            findings: Vec::new(),
            started: Instant::now(),
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.into(), value.to_string());
    }

    fn check<T: PartialEq + std::fmt::Debug>(
        &mut self,
        graph: &Graph,
        check: &str,
        expected: T,
        actual: T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(CaseFailure {
                graph: graph.to_compact_string(),
                check: check.into(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    fn check_true(&mut self, graph: &Graph, check: &str, actual: bool) {
        self.check(graph, check, true, actual);
    }

    fn finding(&mut self, text: impl Into<String>) {
        self.findings.push(text.into());
    }

    fn finish(self) -> SuiteReport {
        let mut failures = self.failures;
        failures.sort_by(|a, b| (&a.graph, &a.check).cmp(&(&b.graph, &b.check)));
        SuiteReport {
            suite: self.suite.into(),
            params: self.params,
            cases: self.cases,
            failures,
            findings: self.findings,
            seed: self.seed,
            elapsed_ms: self.started.elapsed().as_millis(),
        }
    }
}

fn sorted_by_key(mut graphs: Vec<Graph>) -> Vec<Graph> {
    graphs.sort_by_key(canonical_key);
    graphs
}

fn ni_table(g: &Graph, p: u32) -> Result<BettiTable> {
    betti_table_hochster(&closed_neighborhood_ideal(g), p)
}

/// Regularity of `R/NI(G)` equals the matching number on every tree and
/// forest in range, exercised over all tree classes up to `n_max`
/// vertices plus seeded random forests assembled from them.
pub fn suite_forest_equality(n_max: usize, p: u32, seed: u64) -> Result<SuiteReport> {
    if n_max > 10 {
        return Err(Error::guard("forest_suite_n", 10, n_max));
    }
    let mut rec = Recorder::new("forest-equality", seed);
    rec.param("n_max", n_max);
    rec.param("p", p);

    let mut pool: Vec<Graph> = Vec::new();
    for n in 1..=n_max {
        for tree in sorted_by_key(trees_dedup(n)?) {
            let reg = ni_table(&tree, p)?.regularity();
            rec.check(&tree, "reg(R/NI(T)) == matching number", matching_number(&tree), reg);
            if n <= 6 {
                pool.push(tree);
            }
        }
    }

    // star graphs stay at regularity 1
    for n in 2..=n_max.max(2) {
        let star = FamilySpec::Star(n).build()?;
        rec.check(&star, "reg(R/NI(S_n)) == 1", 1, ni_table(&star, p)?.regularity());
    }

    // random forests, capped so the subset loop stays cheap
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..12 {
        let mut parts: Vec<Graph> = Vec::new();
        let mut total = 0usize;
        let count = rng.random_range(2..=3);
        for _ in 0..count {
            let candidates: Vec<&Graph> =
                pool.iter().filter(|t| total + t.n() <= 10).collect();
            if candidates.is_empty() {
                break;
            }
            let pick = candidates[rng.random_range(0..candidates.len())].clone();
            total += pick.n();
            parts.push(pick);
        }
        if parts.len() < 2 {
            continue;
        }
        let forest = Graph::disjoint_union(&parts)?;
        let reg = ni_table(&forest, p)?.regularity();
        rec.check(
            &forest,
            "reg(R/NI(F)) == matching number",
            matching_number(&forest),
            reg,
        );
    }
    Ok(rec.finish())
}

/// The matching number bounds regularity from below on every graph, via
/// the full chain reg >= hdim(D(G)) + 1 >= n - cliquecover(G) >= a_G.
pub fn suite_lower_bound(n_max: usize, p: u32, seed: u64) -> Result<SuiteReport> {
    if n_max > 7 {
        return Err(Error::guard("lower_bound_suite_n", 7, n_max));
    }
    let mut rec = Recorder::new("lower-bound", seed);
    rec.param("n_max", n_max);
    rec.param("p", p);

    for n in 1..=n_max {
        for g in sorted_by_key(graphs_dedup(n, false)?) {
            let a = matching_number(&g) as i64;
            let reg = ni_table(&g, p)?.regularity() as i64;
            let chi = clique_cover_number(&g)? as i64;
            let hdim = reduced_homology_ranks(&dominance_complex(&g)?, p)?
                .homological_dimension();
            rec.check_true(&g, "reg >= matching number", reg >= a);
            match hdim {
                Some(d) => {
                    let d = d as i64;
                    rec.check_true(&g, "reg >= hdim(D(G)) + 1", reg >= d + 1);
                    rec.check_true(&g, "hdim(D(G)) + 1 >= n - cliquecover", d + 1 >= n as i64 - chi);
                }
                None => {
                    // an acyclic dominance complex would break the chain
                    rec.check_true(&g, "D(G) has nonvanishing homology", false);
                }
            }
            rec.check_true(&g, "n - cliquecover >= matching number", n as i64 - chi >= a);
        }
    }

    // strictness witnesses stay strict
    let c7 = FamilySpec::Cycle(7).build()?;
    let t = ni_table(&c7, p)?;
    rec.check(&c7, "reg(R/NI(C_7)) == 4", 4, t.regularity());
    rec.check_true(&c7, "reg(C_7) > matching number", t.regularity() > matching_number(&c7));
    for m in 3..=7 {
        let k = FamilySpec::Complete(m).build()?;
        rec.check(&k, "reg(R/NI(K_m)) == m - 1", m - 1, ni_table(&k, p)?.regularity());
    }
    Ok(rec.finish())
}

/// Projective dimension is bounded below by the matching number on
/// forests and unicyclic graphs; complete graphs reverse the inequality.
pub fn suite_pd_bounds(n_max: usize, p: u32, seed: u64) -> Result<SuiteReport> {
    if n_max > 9 {
        return Err(Error::guard("pd_suite_n", 9, n_max));
    }
    let mut rec = Recorder::new("pd-bounds", seed);
    rec.param("n_max", n_max);
    rec.param("p", p);

    for n in 1..=n_max {
        for f in sorted_by_key(forests_dedup(n)?) {
            let pd = ni_table(&f, p)?.projective_dimension();
            rec.check_true(&f, "pd >= matching number (forest)", pd >= matching_number(&f));
        }
    }
    for n in 3..=n_max.max(3) {
        for g in sorted_by_key(unicyclic_dedup(n)?) {
            let pd = ni_table(&g, p)?.projective_dimension();
            rec.check_true(&g, "pd >= matching number (unicyclic)", pd >= matching_number(&g));
        }
    }

    // the strict tree example
    let p3 = FamilySpec::Path(3).build()?;
    rec.check(&p3, "pd(R/NI(P_3)) == 2", 2, ni_table(&p3, p)?.projective_dimension());
    let c5 = FamilySpec::Cycle(5).build()?;
    rec.check(&c5, "pd(R/NI(C_5)) == 3", 3, ni_table(&c5, p)?.projective_dimension());

    // chordal counterexample direction: complete graphs reverse it
    for m in 4..=7 {
        let k = FamilySpec::Complete(m).build()?;
        let pd = ni_table(&k, p)?.projective_dimension();
        rec.check(&k, "pd(R/NI(K_m)) == 1", 1, pd);
        rec.check_true(&k, "pd(K_m) < matching number", pd < matching_number(&k));
        rec.finding(format!(
            "K_{m}: pd = {pd} < a = {} (expected reversal)",
            matching_number(&k)
        ));
    }
    Ok(rec.finish())
}

fn cycle_pd_formula(n: usize) -> usize {
    if n % 4 == 0 {
        n / 2
    } else {
        let d = n % 4;
        (n - d + 2) / 2
    }
}

fn wheel_pd_formula(rim: usize) -> usize {
    let a = (rim + 1) / 2;
    if rim % 4 == 3 {
        a - 1
    } else {
        a
    }
}

/// Closed-form values: cycle and wheel projective dimension, complete
/// graphs, whiskered graphs, and the complete bipartite regularity gap.
pub fn suite_closed_forms(p: u32, seed: u64) -> Result<SuiteReport> {
    let mut rec = Recorder::new("closed-forms", seed);
    rec.param("p", p);

    for n in 3..=12 {
        let c = FamilySpec::Cycle(n).build()?;
        let pd = ni_table(&c, p)?.projective_dimension();
        rec.check(&c, "pd(R/NI(C_n)) matches closed form", cycle_pd_formula(n), pd);
    }

    for rim in 3..=10 {
        let w = FamilySpec::Wheel(rim + 1).build()?;
        let c = FamilySpec::Cycle(rim).build()?;
        let tw = ni_table(&w, p)?;
        rec.check(&w, "pd(R/NI(W)) matches closed form", wheel_pd_formula(rim), tw.projective_dimension());
        // hub-scaling route: NI(W) is the rim ideal times the hub
        let scaled = closed_neighborhood_ideal(&c)
            .extended(rim + 1)?
            .scale(Monomial::variable(rim))?;
        rec.check(
            &w,
            "NI(W) == hub * NI(C_rim)",
            scaled,
            closed_neighborhood_ideal(&w),
        );
        let tc = ni_table(&c, p)?;
        rec.check(
            &w,
            "pd(wheel) == pd(rim cycle)",
            tc.projective_dimension(),
            tw.projective_dimension(),
        );
    }

    for m in 2..=8 {
        let k = FamilySpec::Complete(m).build()?;
        let t = ni_table(&k, p)?;
        rec.check(&k, "reg(R/NI(K_m)) == m - 1", m - 1, t.regularity());
        rec.check(&k, "pd(R/NI(K_m)) == 1", 1, t.projective_dimension());
    }

    let c7 = FamilySpec::Cycle(7).build()?;
    rec.check(&c7, "reg(R/NI(C_7)) == 4", 4, ni_table(&c7, p)?.regularity());
    let c5 = FamilySpec::Cycle(5).build()?;
    rec.check(&c5, "pd(R/NI(C_5)) == 3", 3, ni_table(&c5, p)?.projective_dimension());

    // whiskering any base graph pins reg = pd = a = n
    for n in 1..=4 {
        for base in graphs_dedup(n, false)? {
            let w = base.whisker_all();
            let t = ni_table(&w, p)?;
            rec.check(&w, "reg(whiskered) == n", n, t.regularity());
            rec.check(&w, "pd(whiskered) == n", n, t.projective_dimension());
            rec.check(&w, "matching(whiskered) == n", n, matching_number(&w));
        }
    }

    for n in 2..=5 {
        let k = FamilySpec::CompleteBipartite(n, 2).build()?;
        let reg = ni_table(&k, p)?.regularity();
        rec.check_true(&k, "reg(R/NI(K_n2)) >= n", reg >= n);
        rec.check(&k, "matching(K_n2) == 2", 2, matching_number(&k));
    }
    Ok(rec.finish())
}

/// NI of the graph `g` with the vertices of `removed` deleted, expressed
/// over the full original variable universe.
fn ni_of_deleted(g: &Graph, removed: Mask) -> MonomialIdeal {
    let gens = (0..g.n()).filter(|&w| !bits::has(removed, w)).map(|w| {
        Monomial(g.closed_neighborhood(w).expect("vertex in range") & !removed)
    });
    MonomialIdeal::minimalize(g.n(), gens)
}

fn is_star(g: &Graph) -> bool {
    g.is_tree() && g.n() >= 2 && (0..g.n()).any(|v| g.degree(v) == g.n() - 1)
}

/// Structural identities: Betti splittings at simplicial vertices with
/// the stated intersection ideal, the colon/deletion identities for the
/// deepest leaf of a rooted tree, component additivity of tables, and
/// the extra-variable shift on sampled ideals.
pub fn suite_structural_identities(n_max: usize, p: u32, seed: u64) -> Result<SuiteReport> {
    if n_max > 7 {
        return Err(Error::guard("structural_suite_n", 7, n_max));
    }
    let mut rec = Recorder::new("structural-identities", seed);
    rec.param("n_max", n_max);
    rec.param("p", p);

    // (a) splittings at every simplicial vertex of every chordal graph
    for n in 2..=n_max {
        for g in sorted_by_key(graphs_dedup(n, false)?) {
            if !g.is_chordal() {
                continue;
            }
            let ni = closed_neighborhood_ideal(&g);
            for v in bits::iter(g.simplicial_vertices()) {
                let report = betti_splitting_report(&ni, v, p)?;
                rec.check_true(&g, &format!("Betti splitting at x{}", v + 1), report.verdict);
                rec.check_true(
                    &g,
                    &format!("pd recursion at x{}", v + 1),
                    report.pd_recursion_holds,
                );
                // J∩K = (product over N[v]) * NI(G - N[v])
                let closed = g.closed_neighborhood(v)?;
                let (j_part, k_part) = ni.split_at(v)?;
                if !k_part.is_zero() {
                    let expected = ni_of_deleted(&g, closed).scale(Monomial(closed))?;
                    rec.check(
                        &g,
                        &format!("J∩K == prod(N[x{}]) * NI(G - N[x{}])", v + 1, v + 1),
                        expected,
                        j_part.intersect(&k_part)?,
                    );
                }
            }
        }
    }

    // (b) colon and deletion identities at a deepest leaf, every root
    for n in 3..=n_max {
        for tree in sorted_by_key(trees_dedup(n)?) {
            if is_star(&tree) {
                continue;
            }
            let ni = closed_neighborhood_ideal(&tree);
            for root in 0..n {
                let (levels, height) = tree.rooted_levels(root)?;
                debug_assert!(height >= 2);
                let deep_leaf = (0..n).find(|&v| levels[v] == height).unwrap();
                let y = bits::iter(tree.neighbors(deep_leaf)).next().unwrap();
                let leaf_children = bits::from_indices(
                    bits::iter(tree.neighbors(y)).filter(|&c| levels[c] == levels[y] + 1),
                );
                let y_mono = Monomial::variable(y);

                // (NI(T) : y) == <leaf children> + NI(T - y - children)
                let colon = ni.colon(y_mono);
                let leaf_ideal = MonomialIdeal::minimalize(
                    n,
                    bits::iter(leaf_children).map(Monomial::variable),
                );
                let t_prime = ni_of_deleted(&tree, leaf_children | bits::bit(y));
                rec.check(
                    &tree,
                    &format!("(NI(T):y) == <leaves> + NI(T') at root x{}", root + 1),
                    leaf_ideal.add(&t_prime)?,
                    colon,
                );

                // <NI(T), y> == <NI(T - children), y>
                let y_ideal = MonomialIdeal::minimalize(n, [y_mono]);
                let lhs = ni.add(&y_ideal)?;
                let rhs = ni_of_deleted(&tree, leaf_children).add(&y_ideal)?;
                rec.check(
                    &tree,
                    &format!("<NI(T),y> == <NI(T''),y> at root x{}", root + 1),
                    rhs,
                    lhs,
                );
            }
        }
    }

    // (c) component additivity of tables on disconnected graphs
    for n in 2..=n_max.min(6) {
        for g in sorted_by_key(graphs_dedup(n, false)?) {
            if g.is_connected() {
                continue;
            }
            let whole = ni_table(&g, p)?;
            let mut conv = BettiTable::from_entries(0, p, [((0, 0), 1)]);
            for comp in g.components() {
                conv = conv.convolve(&ni_table(&comp, p)?);
            }
            rec.check(&g, "table(NI(G)) == convolution over components", conv, whole);
        }
    }

    // (d) extra-variable shift on sampled ideals
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let n = rng.random_range(2..=5usize);
        let g = random_graph(&mut rng, n, 0.5);
        let report = shift_check_extra_variable(&closed_neighborhood_ideal(&g), p)?;
        rec.check_true(&g, "extra-variable shift", report.verdict);
    }
    Ok(rec.finish())
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("random graph is simple")
}

/// Census data for the regularity-versus-matching question: per class,
/// the invariants and whether equality holds. Not pass/fail.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub matching: usize,
    pub reg: usize,
    pub pd: usize,
    pub reg_equals_matching: bool,
    pub pd_ge_matching: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub n_max: usize,
    pub p: u32,
    pub connected_only: bool,
    pub rows: Vec<CensusRow>,
    pub reg_equal_count: usize,
    pub reg_strict_count: usize,
    pub pd_below_count: usize,
}

pub fn census(n_max: usize, p: u32, connected_only: bool) -> Result<CensusReport> {
    if n_max > 7 {
        return Err(Error::guard("census_n", 7, n_max));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for g in sorted_by_key(graphs_dedup(n, connected_only)?) {
            let t = ni_table(&g, p)?;
            let a = matching_number(&g);
            rows.push(CensusRow {
                graph: g.to_compact_string(),
                n,
                edges: g.edge_count(),
                matching: a,
                reg: t.regularity(),
                pd: t.projective_dimension(),
                reg_equals_matching: t.regularity() == a,
                pd_ge_matching: t.projective_dimension() >= a,
            });
        }
    }
    let reg_equal_count = rows.iter().filter(|r| r.reg_equals_matching).count();
    let reg_strict_count = rows.len() - reg_equal_count;
    let pd_below_count = rows.iter().filter(|r| !r.pd_ge_matching).count();
    Ok(CensusReport {
        n_max,
        p,
        connected_only,
        rows,
        reg_equal_count,
        reg_strict_count,
        pd_below_count,
    })
}

pub const SUITE_NAMES: [&str; 5] = [
    "forest-equality",
    "lower-bound",
    "pd-bounds",
    "closed-forms",
    "structural-identities",
];

/// Dispatch a suite by CLI name. `n_max = None` takes each suite's
/// default range; `jobs = 0` inherits the ambient thread pool.
pub fn run_suite(
    name: &str,
    n_max: Option<usize>,
    p: u32,
    seed: u64,
    jobs: usize,
) -> Result<SuiteReport> {
    let run = || match name {
        "forest-equality" => suite_forest_equality(n_max.unwrap_or(8), p, seed),
        "lower-bound" => suite_lower_bound(n_max.unwrap_or(6), p, seed),
        "pd-bounds" => suite_pd_bounds(n_max.unwrap_or(8), p, seed),
        "closed-forms" => suite_closed_forms(p, seed),
        "structural-identities" => suite_structural_identities(n_max.unwrap_or(6), p, seed),
        other => Err(Error::Parameter(format!(
            "unknown suite `{other}`; available: {}",
            SUITE_NAMES.join(", ")
        ))),
    };
    if jobs == 0 {
        run()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
        pool.install(run)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forest_equality_small() {
        let r = suite_forest_equality(5, 2, 7).unwrap();
        assert!(r.pass(), "{:?}", r.failures);
        assert!(r.cases > 0);
    }

    #[test]
    fn lower_bound_small() {
        let r = suite_lower_bound(4, 2, 7).unwrap();
        assert!(r.pass(), "{:?}", r.failures);
    }

    #[test]
    fn pd_bounds_small() {
        let r = suite_pd_bounds(5, 2, 7).unwrap();
        assert!(r.pass(), "{:?}", r.failures);
        assert!(!r.findings.is_empty());
    }

    #[test]
    fn structural_small() {
        let r = suite_structural_identities(5, 2, 7).unwrap();
        assert!(r.pass(), "{:?}", r.failures);
    }

    #[test]
    fn census_counts_strictness() {
        let r = census(4, 2, false).unwrap();
        assert_eq!(r.rows.len(), 1 + 2 + 4 + 11);
        // K_3 and K_4 have reg > a; K_4 has pd < a
        assert!(r.reg_strict_count >= 2);
        assert!(r.pd_below_count >= 1);
    }

    #[test]
    fn reports_are_deterministic_up_to_wall_time() {
        let mut a = run_suite("structural-identities", Some(4), 2, 99, 0).unwrap();
        let mut b = run_suite("structural-identities", Some(4), 2, 99, 2).unwrap();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a.to_json_value()).unwrap(),
            serde_json::to_string(&b.to_json_value()).unwrap()
        );
    }

    #[test]
    fn failure_records_replay() {
        // fabricate a failing check and confirm the encoding round-trips
        let g = FamilySpec::Cycle(5).build().unwrap();
        let mut rec = Recorder::new("demo", 0);
        rec.check(&g, "demo", 1, 2);
        let report = rec.finish();
        assert!(!report.pass());
        let parsed = Graph::from_compact_string(&report.failures[0].graph).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn unknown_suite_lists_names() {
        let err = run_suite("nope", None, 2, 0, 0).unwrap_err();
        let msg = err.to_string();
        for name in SUITE_NAMES {
            assert!(msg.contains(name));
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = run_suite("pd-bounds", Some(4), 2, 5, 0).unwrap();
        let v = r.to_json_value();
        assert_eq!(SuiteReport::from_json_value(&v).unwrap(), r);
        for key in ["suite", "params", "cases", "failures", "findings", "seed", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
}
