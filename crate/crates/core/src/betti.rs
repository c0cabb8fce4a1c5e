//! Graded Betti tables of squarefree monomial ideals over a prime field.
//!
//! Two independent engines produce the same table:
//!
//! * [`betti_table_hochster`] sums, over every subset `W` of the
//!   variables, the reduced homology ranks of the induced subcomplex
//!   `Δ(I)|_W` of the Stanley-Reisner complex:
//!   `β_{i,j}(R/I) = Σ_{|W|=j} rank H̃_(j-i-1)(Δ(I)|_W)` for `i >= 1`,
//!   plus the unit entry at (0,0).
//! * [`betti_table_taylor`] tensors the Taylor complex on the minimal
//!   generators with the residue field: basis elements are generator
//!   subsets `S`, graded by `lcm(S)`, and the differential drops one
//!   generator with a ±1 coefficient exactly when the lcm is unchanged.
//!
//! Tables are always of the quotient `R/I`, so entry (0,0) is 1 and the
//! generators appear at homological index 1. Regularity is
//! `max(j - i)`, projective dimension `max(i)`, both over the nonzero
//! entries.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Deserialize;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::guards;
use crate::linalg::is_prime;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::homology_from_faces;

/// Sparse graded Betti table of a quotient `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n_vars: usize,
    field_char: u32,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn from_entries<I>(n_vars: usize, field_char: u32, entries: I) -> BettiTable
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut map = BTreeMap::new();
        for (key, count) in entries {
            if count > 0 {
                *map.entry(key).or_insert(0) += count;
            }
        }
        BettiTable {
            n_vars,
            field_char,
            entries: map,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn field_char(&self) -> u32 {
        self.field_char
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    /// `max { j - i : β_{i,j} != 0 }`; 0 for the one-entry table of R/0.
    pub fn regularity(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .unwrap_or(0)
    }

    /// `max { i : β_{i,j} != 0 }`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Tensor-product table: 2-D convolution of the entries. The factors
    /// must live over disjoint variable sets (caller's contract) and the
    /// same field.
    pub fn convolve(&self, other: &BettiTable) -> BettiTable {
        assert_eq!(
            self.field_char, other.field_char,
            "convolution mixes field characteristics"
        );
        let mut entries = BTreeMap::new();
        for (&(i1, j1), &c1) in &self.entries {
            for (&(i2, j2), &c2) in &other.entries {
                *entries.entry((i1 + i2, j1 + j2)).or_insert(0) += c1 * c2;
            }
        }
        BettiTable {
            n_vars: self.n_vars + other.n_vars,
            field_char: self.field_char,
            entries,
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let entries: Vec<[u64; 3]> = self
            .entries
            .iter()
            .map(|(&(i, j), &c)| [i as u64, j as u64, c])
            .collect();
        serde_json::json!({
            "n_vars": self.n_vars,
            "p": self.field_char,
            "entries": entries,
            "reg": self.regularity(),
            "pd": self.projective_dimension(),
        })
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<BettiTable> {
        #[derive(Deserialize)]
        struct Dto {
            n_vars: usize,
            p: u32,
            entries: Vec<[u64; 3]>,
        }
        let dto: Dto = serde_json::from_value(value.clone())?;
        Ok(BettiTable::from_entries(
            dto.n_vars,
            dto.p,
            dto.entries
                .into_iter()
                .map(|[i, j, c]| ((i as usize, j as usize), c)),
        ))
    }

    /// Triangular text display: rows are `j - i`, columns are `i`.
    pub fn pretty_string(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let width = self
            .entries
            .values()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1)
            .max(2)
            + 1;
        let mut out = String::new();
        out.push_str(&" ".repeat(7));
        for i in 0..=pd {
            out.push_str(&format!("{i:>width$}"));
        }
        out.push('\n');
        let mut totals = vec![0u64; pd + 1];
        for (&(i, _), &c) in &self.entries {
            totals[i] += c;
        }
        out.push_str("total: ");
        for t in &totals {
            out.push_str(&format!("{t:>width$}"));
        }
        out.push('\n');
        for row in 0..=reg {
            out.push_str(&format!("{row:>5}: "));
            for i in 0..=pd {
                let c = self.entry(i, i + row);
                if c == 0 {
                    out.push_str(&format!("{:>width$}", "."));
                } else {
                    out.push_str(&format!("{c:>width$}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

fn validate_field(p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not prime")));
    }
    Ok(())
}

fn reject_unit(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::Domain(
            "Betti tables of the unit ideal are not defined here".into(),
        ));
    }
    Ok(())
}

/// Betti table of `R/I` by summed homology of induced subcomplexes.
/// The subset loop is parallel; partial tables merge by pointwise
/// addition, so the result is identical for every schedule.
pub fn betti_table_hochster(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    betti_table_hochster_guarded(ideal, p, guards::HOCHSTER_MAX_VARS)
}

/// Same engine with a caller-chosen variable guard (hard cap 25: the
/// nonface table is 2^n entries and the subset loop is 3^n).
pub fn betti_table_hochster_guarded(
    ideal: &MonomialIdeal,
    p: u32,
    max_vars: usize,
) -> Result<BettiTable> {
    validate_field(p)?;
    reject_unit(ideal)?;
    let n = ideal.n_vars();
    if n > max_vars.min(25) {
        return Err(Error::guard("hochster_vars", max_vars.min(25), n));
    }
    if ideal.is_zero() {
        return Ok(BettiTable::from_entries(n, p, [((0, 0), 1)]));
    }

    // nonface[m] = some generator support is contained in m
    let full = bits::full(n);
    let mut nonface = vec![false; 1usize << n];
    for g in ideal.gens() {
        nonface[g.support() as usize] = true;
    }
    for b in 0..n {
        let bitb = bits::bit(b) as usize;
        for m in 0..nonface.len() {
            if m & bitb != 0 && nonface[m ^ bitb] {
                nonface[m] = true;
            }
        }
    }
    // vertices outside every generator cone off their subsets
    let free = full & !ideal.support_union();

    let merged = (0u32..=full)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), u64>, w| {
            if w & free != 0 || !nonface[w as usize] {
                return acc;
            }
            let j = bits::card(w);
            let mut by_card: Vec<Vec<Mask>> = vec![Vec::new(); j + 1];
            for f in bits::submasks(w) {
                if !nonface[f as usize] {
                    by_card[bits::card(f)].push(f);
                }
            }
            while by_card.last().is_some_and(|l| l.is_empty()) {
                by_card.pop();
            }
            for level in &mut by_card {
                level.sort_unstable();
            }
            for (dim, rank) in homology_from_faces(&by_card, p) {
                let i = j as i64 - dim as i64 - 1;
                if i >= 1 && rank > 0 {
                    *acc.entry((i as usize, j)).or_insert(0) += rank as u64;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });

    let mut entries = merged;
    entries.insert((0, 0), 1);
    Ok(BettiTable {
        n_vars: n,
        field_char: p,
        entries,
    })
}

/// Run the induced-subcomplex engine on a dedicated pool of `jobs`
/// worker threads (0 means the ambient pool). The result is bit-equal to
/// the default entry point for any degree of parallelism.
pub fn betti_table_hochster_with_jobs(
    ideal: &MonomialIdeal,
    p: u32,
    jobs: usize,
) -> Result<BettiTable> {
    if jobs == 0 {
        return betti_table_hochster(ideal, p);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
    pool.install(|| betti_table_hochster(ideal, p))
}

/// Independent oracle: Betti table of `R/I` from the Taylor complex of
/// the minimal generators, tensored with the residue field.
pub fn betti_table_taylor(ideal: &MonomialIdeal, p: u32) -> Result<BettiTable> {
    betti_table_taylor_guarded(ideal, p, guards::TAYLOR_MAX_GENS)
}

/// Taylor engine with a caller-chosen generator guard (hard cap 20: the
/// basis has 2^r elements).
pub fn betti_table_taylor_guarded(
    ideal: &MonomialIdeal,
    p: u32,
    max_gens: usize,
) -> Result<BettiTable> {
    validate_field(p)?;
    reject_unit(ideal)?;
    let n = ideal.n_vars();
    let r = ideal.num_gens();
    if r > max_gens.min(20) {
        return Err(Error::guard("taylor_gens", max_gens.min(20), r));
    }
    let gens: Vec<Mask> = ideal.gens().iter().map(|g| g.support()).collect();

    // lcm of every generator subset
    let mut lcm = vec![0 as Mask; 1usize << r];
    for s in 1usize..(1 << r) {
        let low = s.trailing_zeros() as usize;
        lcm[s] = lcm[s & (s - 1)] | gens[low];
    }
    // strand decomposition: subsets grouped by their lcm
    let mut strands: BTreeMap<Mask, Vec<u32>> = BTreeMap::new();
    for (s, &m) in lcm.iter().enumerate() {
        strands.entry(m).or_default().push(s as u32);
    }

    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for (&degree_mask, subsets) in &strands {
        let j = bits::card(degree_mask);
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
        for &s in subsets {
            by_size[s.count_ones() as usize].push(s);
        }
        // rank of the strand differential from size k to size k-1
        let mut rank = vec![0usize; r + 2];
        for k in 1..=r {
            rank[k] = strand_boundary_rank(&by_size[k], &by_size[k - 1], &lcm, p);
        }
        for k in 0..=r {
            let homology = by_size[k].len() - rank[k] - rank[k + 1];
            if homology > 0 {
                *entries.entry((k, j)).or_insert(0) += homology as u64;
            }
        }
    }
    Ok(BettiTable {
        n_vars: n,
        field_char: p,
        entries,
    })
}

fn strand_boundary_rank(sources: &[u32], targets: &[u32], lcm: &[Mask], p: u32) -> usize {
    if sources.is_empty() || targets.is_empty() {
        return 0;
    }
    let index: std::collections::HashMap<u32, usize> = targets
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i))
        .collect();
    if p == 2 {
        let mut m = crate::linalg::BitMatrix::zero(sources.len(), targets.len());
        for (row, &s) in sources.iter().enumerate() {
            for g in bits::iter(s) {
                let t = s & !bits::bit(g);
                if lcm[t as usize] == lcm[s as usize] {
                    m.set(row, index[&t]);
                }
            }
        }
        m.rank()
    } else {
        let mut m = crate::linalg::ModMatrix::zero(sources.len(), targets.len(), p);
        for (row, &s) in sources.iter().enumerate() {
            for (pos, g) in bits::iter(s).enumerate() {
                let t = s & !bits::bit(g);
                if lcm[t as usize] == lcm[s as usize] {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    m.set(row, index[&t], sign);
                }
            }
        }
        m.rank()
    }
}

/// Outcome of checking that multiplying an ideal by one fresh variable
/// shifts every `i >= 1` entry from degree j to j+1, bumps regularity by
/// one, and leaves projective dimension alone.
#[derive(Clone, Debug)]
pub struct ShiftReport {
    pub identity_holds: bool,
    pub reg_base: usize,
    pub reg_shifted: usize,
    pub pd_base: usize,
    pub pd_shifted: usize,
    pub verdict: bool,
}

pub fn shift_check_extra_variable(ideal: &MonomialIdeal, p: u32) -> Result<ShiftReport> {
    let n = ideal.n_vars();
    let shifted_ideal = ideal.extended(n + 1)?.scale(Monomial::variable(n))?;
    let base = betti_table_hochster(ideal, p)?;
    let shifted = betti_table_hochster(&shifted_ideal, p)?;
    let forward = base
        .entries()
        .filter(|&(i, _, _)| i >= 1)
        .all(|(i, j, c)| shifted.entry(i, j + 1) == c);
    let backward = shifted
        .entries()
        .filter(|&(i, _, _)| i >= 1)
        .all(|(i, j, c)| j >= 1 && base.entry(i, j - 1) == c);
    let identity_holds = forward && backward;
    let reg_ok = if ideal.is_zero() {
        shifted.regularity() == base.regularity()
    } else {
        shifted.regularity() == base.regularity() + 1
    };
    let pd_ok = shifted.projective_dimension() == base.projective_dimension();
    Ok(ShiftReport {
        identity_holds,
        reg_base: base.regularity(),
        reg_shifted: shifted.regularity(),
        pd_base: base.projective_dimension(),
        pd_shifted: shifted.projective_dimension(),
        verdict: identity_holds && reg_ok && pd_ok,
    })
}

/// One graded slot of a splitting check: the residual is
/// `β_{i,j}(R/I) - β_{i,j}(R/J) - β_{i,j}(R/K) - β_{i-1,j}(R/(J∩K))`,
/// the intersection term entering only for i >= 2 (it sits one
/// homological step lower, matching the ideal-level identity).
#[derive(Clone, Debug)]
pub struct SplitRow {
    pub i: usize,
    pub j: usize,
    pub beta_total: u64,
    pub beta_j_part: u64,
    pub beta_k_part: u64,
    pub beta_intersection_shifted: u64,
    pub residual: i64,
}

#[derive(Clone, Debug)]
pub struct SplitReport {
    pub variable: usize,
    pub field_char: u32,
    pub rows: Vec<SplitRow>,
    /// Every residual vanished: the generator partition at `variable`
    /// really is a Betti splitting.
    pub verdict: bool,
    pub pd_total: usize,
    pub pd_j: usize,
    pub pd_k: usize,
    pub pd_intersection: usize,
    /// pd(R/I) = max{ pd(R/J), pd(R/K), pd(R/(J∩K)) + 1 }.
    pub pd_recursion_holds: bool,
}

pub fn betti_splitting_report(ideal: &MonomialIdeal, v: usize, p: u32) -> Result<SplitReport> {
    let (j_part, k_part) = ideal.split_at(v)?;
    let intersection = j_part.intersect(&k_part)?;
    let t_total = betti_table_hochster(ideal, p)?;
    let t_j = betti_table_hochster(&j_part, p)?;
    let t_k = betti_table_hochster(&k_part, p)?;
    let t_jk = betti_table_hochster(&intersection, p)?;

    let mut keys: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for (i, j, _) in t_total.entries().chain(t_j.entries()).chain(t_k.entries()) {
        if i >= 1 {
            keys.insert((i, j));
        }
    }
    for (i, j, _) in t_jk.entries() {
        if i >= 1 {
            keys.insert((i + 1, j));
        }
    }
    let mut rows = Vec::with_capacity(keys.len());
    for (i, j) in keys {
        let shifted = if i >= 2 { t_jk.entry(i - 1, j) } else { 0 };
        let total = t_total.entry(i, j);
        let bj = t_j.entry(i, j);
        let bk = t_k.entry(i, j);
        rows.push(SplitRow {
            i,
            j,
            beta_total: total,
            beta_j_part: bj,
            beta_k_part: bk,
            beta_intersection_shifted: shifted,
            residual: total as i64 - bj as i64 - bk as i64 - shifted as i64,
        });
    }
    let verdict = rows.iter().all(|r| r.residual == 0);
    let pd_total = t_total.projective_dimension();
    let pd_j = t_j.projective_dimension();
    let pd_k = t_k.projective_dimension();
    let pd_intersection = t_jk.projective_dimension();
    let pd_recursion_holds = pd_total == pd_j.max(pd_k).max(pd_intersection + 1);
    Ok(SplitReport {
        variable: v,
        field_char: p,
        rows,
        verdict,
        pd_total,
        pd_j,
        pd_k,
        pd_intersection,
        pd_recursion_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{FamilySpec, Graph};
    use crate::monomial::{closed_neighborhood_ideal, edge_ideal, path_ideal};

    fn fam(s: &str) -> Graph {
        FamilySpec::parse(s).unwrap().build().unwrap()
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            n,
            gens.iter().map(|g| Monomial::from_indices(g.iter().copied())),
        )
    }

    fn table(entries: &[(usize, usize, u64)], n: usize, p: u32) -> BettiTable {
        BettiTable::from_entries(n, p, entries.iter().map(|&(i, j, c)| ((i, j), c)))
    }

    #[test]
    fn principal_ideals() {
        // complete graphs: a single full-support generator
        for m in 2..=6 {
            let ni = closed_neighborhood_ideal(&fam(&format!("complete:{m}")));
            let t = betti_table_hochster(&ni, 2).unwrap();
            assert_eq!(t, table(&[(0, 0, 1), (1, m, 1)], m, 2));
            assert_eq!(t.regularity(), m - 1);
            assert_eq!(t.projective_dimension(), 1);
            assert_eq!(betti_table_taylor(&ni, 2).unwrap(), t);
        }
        let i = ideal(2, &[&[0, 1]]);
        assert_eq!(
            betti_table_hochster(&i, 2).unwrap(),
            table(&[(0, 0, 1), (1, 2, 1)], 2, 2)
        );
    }

    #[test]
    fn path3_table() {
        let ni = closed_neighborhood_ideal(&fam("path:3"));
        let expected = table(&[(0, 0, 1), (1, 2, 2), (2, 3, 1)], 3, 2);
        assert_eq!(betti_table_hochster(&ni, 2).unwrap(), expected);
        assert_eq!(betti_table_taylor(&ni, 2).unwrap(), expected);
        assert_eq!(expected.regularity(), 1);
        assert_eq!(expected.projective_dimension(), 2);
    }

    #[test]
    fn degenerate_ideals() {
        let zero = MonomialIdeal::zero(3);
        let just_unit_entry = table(&[(0, 0, 1)], 3, 2);
        assert_eq!(betti_table_hochster(&zero, 2).unwrap(), just_unit_entry);
        assert_eq!(betti_table_taylor(&zero, 2).unwrap(), just_unit_entry);
        assert_eq!(just_unit_entry.regularity(), 0);
        assert_eq!(just_unit_entry.projective_dimension(), 0);

        assert!(betti_table_hochster(&MonomialIdeal::unit(2), 2).is_err());
        assert!(betti_table_taylor(&MonomialIdeal::unit(2), 2).is_err());
        assert!(betti_table_hochster(&zero, 4).is_err());
    }

    #[test]
    fn variables_only_is_koszul() {
        let i = ideal(3, &[&[0], &[1], &[2]]);
        for p in [2u32, 32003] {
            let t = betti_table_hochster(&i, p).unwrap();
            let expected = table(&[(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)], 3, p);
            assert_eq!(t, expected, "p={p}");
            assert_eq!(betti_table_taylor(&i, p).unwrap(), expected);
        }
    }

    #[test]
    fn quoted_cycle_values() {
        let c5 = betti_table_hochster(&closed_neighborhood_ideal(&fam("cycle:5")), 2).unwrap();
        assert_eq!(c5.projective_dimension(), 3);
        let c7 = betti_table_hochster(&closed_neighborhood_ideal(&fam("cycle:7")), 2).unwrap();
        assert_eq!(c7.regularity(), 4);
    }

    #[test]
    fn engines_agree_on_small_graphs() {
        for n in 1..=4 {
            for g in crate::enumerate::graphs_dedup(n, false).unwrap() {
                let ideals = [
                    closed_neighborhood_ideal(&g),
                    edge_ideal(&g),
                    path_ideal(&g, 3).unwrap(),
                ];
                for i in &ideals {
                    for p in [2u32, 32003] {
                        assert_eq!(
                            betti_table_hochster(i, p).unwrap(),
                            betti_table_taylor(i, p).unwrap(),
                            "{g} p={p} {i:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_schedule_is_bit_identical() {
        let ni = closed_neighborhood_ideal(&fam("wheel:8"));
        let reference = betti_table_hochster_with_jobs(&ni, 2, 1).unwrap();
        for jobs in [2usize, 3, 8] {
            assert_eq!(
                betti_table_hochster_with_jobs(&ni, 2, jobs).unwrap(),
                reference
            );
        }
    }

    #[test]
    fn convolution_examples() {
        let koszul2 = table(&[(0, 0, 1), (1, 2, 1)], 2, 2);
        let self_conv = koszul2.convolve(&koszul2);
        assert_eq!(self_conv, table(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)], 4, 2));

        let unit = table(&[(0, 0, 1)], 0, 2);
        assert_eq!(koszul2.convolve(&unit), koszul2);

        // n disjoint pendant edges: binomial diagonal
        for n in 2..=4usize {
            let direct = betti_table_hochster(
                &MonomialIdeal::minimalize(
                    2 * n,
                    (0..n).map(|i| Monomial::from_indices([2 * i, 2 * i + 1])),
                ),
                2,
            )
            .unwrap();
            let mut conv = table(&[(0, 0, 1)], 0, 2);
            for _ in 0..n {
                conv = conv.convolve(&koszul2);
            }
            assert_eq!(direct, conv, "n={n}");
        }
    }

    #[test]
    fn component_additivity() {
        let a = fam("path:3");
        let b = fam("cycle:3");
        let union = Graph::disjoint_union(&[a.clone(), b.clone()]).unwrap();
        let whole = betti_table_hochster(&closed_neighborhood_ideal(&union), 2).unwrap();
        let ta = betti_table_hochster(&closed_neighborhood_ideal(&a), 2).unwrap();
        let tb = betti_table_hochster(&closed_neighborhood_ideal(&b), 2).unwrap();
        assert_eq!(whole, ta.convolve(&tb));
    }

    #[test]
    fn shift_examples() {
        let principal = ideal(2, &[&[0, 1]]);
        let r = shift_check_extra_variable(&principal, 2).unwrap();
        assert!(r.verdict);
        assert_eq!((r.reg_base, r.reg_shifted), (1, 2));
        assert_eq!((r.pd_base, r.pd_shifted), (1, 1));

        let ni_p3 = closed_neighborhood_ideal(&fam("path:3"));
        assert!(shift_check_extra_variable(&ni_p3, 2).unwrap().verdict);
        assert!(shift_check_extra_variable(&ni_p3, 32003).unwrap().verdict);

        // the wheel ideal is the hub-scaled cycle ideal
        let ni_c5 = closed_neighborhood_ideal(&fam("cycle:5"));
        let ni_w6 = closed_neighborhood_ideal(&fam("wheel:6"));
        assert_eq!(
            ni_c5.extended(6).unwrap().scale(Monomial::variable(5)).unwrap(),
            ni_w6
        );
        let tc = betti_table_hochster(&ni_c5, 2).unwrap();
        let tw = betti_table_hochster(&ni_w6, 2).unwrap();
        for (i, j, c) in tc.entries() {
            if i >= 1 {
                assert_eq!(tw.entry(i, j + 1), c);
            }
        }
        assert_eq!(tw.projective_dimension(), tc.projective_dimension());
        assert_eq!(tw.regularity(), tc.regularity() + 1);
    }

    #[test]
    fn splitting_examples() {
        // two disjoint supports
        let i = ideal(4, &[&[0, 1], &[2, 3]]);
        let r = betti_splitting_report(&i, 0, 2).unwrap();
        assert!(r.verdict && r.pd_recursion_holds);

        // leaf split of P_4, with the stated intersection
        let ni_p4 = closed_neighborhood_ideal(&fam("path:4"));
        let r = betti_splitting_report(&ni_p4, 0, 2).unwrap();
        assert!(r.verdict && r.pd_recursion_holds);
        let (j, k) = ni_p4.split_at(0).unwrap();
        // x1x2 times the pendant ideal of the far edge
        assert_eq!(j.intersect(&k).unwrap(), ideal(4, &[&[0, 1, 2, 3]]));

        // principal J and zero K at a vertex of the complete graph
        let ni_k3 = closed_neighborhood_ideal(&fam("complete:3"));
        let r = betti_splitting_report(&ni_k3, 0, 2).unwrap();
        assert!(r.verdict && r.pd_recursion_holds);

        // a variable dividing no generator is a parameter error
        let disjoint = ideal(4, &[&[0, 1]]);
        assert!(betti_splitting_report(&disjoint, 3, 2).is_err());
    }

    #[test]
    fn splitting_across_all_simplicial_vertices_of_small_chordal_graphs() {
        for n in 2..=4 {
            for g in crate::enumerate::graphs_dedup(n, false).unwrap() {
                if !g.is_chordal() {
                    continue;
                }
                let ni = closed_neighborhood_ideal(&g);
                for v in bits::iter(g.simplicial_vertices()) {
                    let report = betti_splitting_report(&ni, v, 2).unwrap();
                    assert!(report.verdict, "{g} at {v}");
                    assert!(report.pd_recursion_holds, "{g} at {v}");
                }
            }
        }
    }

    #[test]
    fn colon_and_sum_regularity_bounds() {
        // reg(R/<I,x>) <= reg(R/I) <= max(reg(R/(I:x)) + 1, reg(R/<I,x>))
        // over every graph class on up to 5 vertices and every variable
        // appearing in NI(G)
        for n in 2..=5 {
            for g in crate::enumerate::graphs_dedup(n, false).unwrap() {
                let i = closed_neighborhood_ideal(&g);
                let reg = betti_table_hochster(&i, 2).unwrap().regularity();
                for v in bits::iter(i.support_union()) {
                    let with_var = i
                        .add(&MonomialIdeal::minimalize(g.n(), [Monomial::variable(v)]))
                        .unwrap();
                    let colon = i.colon(Monomial::variable(v));
                    let reg_with = betti_table_hochster(&with_var, 2).unwrap().regularity();
                    assert!(reg_with <= reg, "{g} x{}", v + 1);
                    if colon.is_unit() {
                        continue;
                    }
                    let reg_colon = betti_table_hochster(&colon, 2).unwrap().regularity();
                    assert!(reg <= (reg_colon + 1).max(reg_with), "{g} x{}", v + 1);
                }
            }
        }
    }

    #[test]
    fn tables_are_relabeling_invariant() {
        let g = fam("wheel:6");
        let perm = [4usize, 2, 0, 5, 3, 1];
        let relabeled = Graph::new(
            6,
            g.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>(),
        )
        .unwrap();
        for p in [2u32, 32003] {
            assert_eq!(
                betti_table_hochster(&closed_neighborhood_ideal(&g), p).unwrap(),
                betti_table_hochster(&closed_neighborhood_ideal(&relabeled), p).unwrap()
            );
        }
    }

    #[test]
    fn guards_fire() {
        let wide = MonomialIdeal::minimalize(21, [Monomial::from_indices([0, 1])]);
        assert!(betti_table_hochster(&wide, 2).is_err());
        let many = MonomialIdeal::minimalize(13, (0..13).map(Monomial::variable));
        assert!(betti_table_taylor(&many, 2).is_err());
    }

    #[test]
    fn sanity_invariants_on_samples() {
        for spec in ["cycle:6", "wheel:6", "complete_bipartite:3,2", "star:5"] {
            let g = fam(spec);
            let t = betti_table_hochster(&closed_neighborhood_ideal(&g), 2).unwrap();
            assert_eq!(t.entry(0, 0), 1);
            for (i, j, _) in t.entries() {
                assert!(j >= i, "{spec}");
                assert!(j <= t.n_vars(), "{spec}");
                assert!(i <= t.n_vars(), "{spec}");
            }
            assert!(t.projective_dimension() <= t.n_vars());
        }
    }

    #[test]
    fn json_and_pretty() {
        let t = betti_table_hochster(&closed_neighborhood_ideal(&fam("path:3")), 2).unwrap();
        let v = t.to_json_value();
        assert_eq!(BettiTable::from_json_value(&v).unwrap(), t);
        assert_eq!(v["reg"], 1);
        assert_eq!(v["pd"], 2);
        let pretty = t.pretty_string();
        assert!(pretty.contains("total:"));
    }
}
