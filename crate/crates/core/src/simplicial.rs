//! Simplicial complexes, the Stanley-Reisner correspondence, the
//! dominance complex, and reduced homology over a prime field.
//!
//! A complex is stored by its facets. Two degenerate states are kept
//! distinct on purpose: the void complex (no faces at all, every reduced
//! Betti number zero) and the empty complex {∅} (whose only face is the
//! empty face, with H̃_{-1} of rank one). The latter shows up as an
//! induced subcomplex whenever a variable is itself a generator.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::domination;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::guards;
use crate::linalg::{is_prime, BitMatrix, ModMatrix};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<Mask>,
}

impl SimplicialComplex {
    /// Build from a family of faces; only the maximal ones are kept.
    /// An empty family yields the void complex; a family containing only
    /// the empty set yields the empty complex {∅}.
    pub fn from_faces<I: IntoIterator<Item = Mask>>(n_vertices: usize, faces: I) -> SimplicialComplex {
        let mut faces: Vec<Mask> = faces.into_iter().collect();
        faces.sort_by_key(|f| std::cmp::Reverse(bits::card(*f)));
        let mut facets: Vec<Mask> = Vec::new();
        for f in faces {
            if !facets.iter().any(|&g| f & !g == 0) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { n_vertices, facets }
    }

    pub fn void(n_vertices: usize) -> SimplicialComplex {
        SimplicialComplex { n_vertices, facets: Vec::new() }
    }

    pub fn empty(n_vertices: usize) -> SimplicialComplex {
        SimplicialComplex { n_vertices, facets: vec![0] }
    }

    pub fn full_simplex(n_vertices: usize) -> SimplicialComplex {
        SimplicialComplex {
            n_vertices,
            facets: vec![bits::full(n_vertices)],
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, f: Mask) -> bool {
        self.facets.iter().any(|&g| f & !g == 0)
    }

    /// Dimension of the complex, `None` for the void complex; the empty
    /// complex has dimension -1.
    pub fn dimension(&self) -> Option<i32> {
        self.facets
            .iter()
            .map(|&f| bits::card(f) as i32 - 1)
            .max()
    }

    /// All faces grouped by cardinality (index 0 holds the empty face).
    /// Guarded by the face budget.
    pub fn faces_by_card(&self) -> Result<Vec<Vec<Mask>>> {
        if self.is_void() {
            return Ok(Vec::new());
        }
        let mut seen: HashSet<Mask> = HashSet::new();
        for &facet in &self.facets {
            for sub in bits::submasks(facet) {
                seen.insert(sub);
                if seen.len() > guards::FACE_BUDGET {
                    return Err(Error::guard("face_budget", guards::FACE_BUDGET, seen.len()));
                }
            }
        }
        let max_card = self
            .facets
            .iter()
            .map(|&f| bits::card(f))
            .max()
            .unwrap_or(0);
        let mut by_card: Vec<Vec<Mask>> = vec![Vec::new(); max_card + 1];
        for f in seen {
            by_card[bits::card(f)].push(f);
        }
        for level in &mut by_card {
            level.sort();
        }
        Ok(by_card)
    }

    pub fn face_count(&self) -> Result<usize> {
        Ok(self.faces_by_card()?.iter().map(|l| l.len()).sum())
    }

    /// Induced subcomplex on the vertex set `w` (vertex indices keep
    /// their meaning; the ambient count is unchanged).
    pub fn induced(&self, w: Mask) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.n_vertices, self.facets.iter().map(|&f| f & w))
    }

    /// Relabel vertices by `perm` (vertex v becomes perm[v]).
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        let map = |f: Mask| -> Mask {
            bits::iter(f).fold(0, |m, v| m | bits::bit(perm[v]))
        };
        SimplicialComplex::from_faces(self.n_vertices, self.facets.iter().map(|&f| map(f)))
    }

    /// Reduced Euler characteristic: alternating sum over all faces,
    /// the empty face counting in dimension -1.
    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        let mut chi = 0i64;
        for (card, faces) in self.faces_by_card()?.iter().enumerate() {
            let sign = if card % 2 == 0 { -1 } else { 1 };
            chi += sign * faces.len() as i64;
        }
        Ok(chi)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let dto = ComplexJson {
            n: self.n_vertices,
            facets: self
                .facets
                .iter()
                .map(|&f| bits::iter(f).map(|v| v + 1).collect())
                .collect(),
        };
        serde_json::to_value(dto).expect("complex serializes")
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<SimplicialComplex> {
        let dto: ComplexJson = serde_json::from_value(value.clone())?;
        let mut facets = Vec::with_capacity(dto.facets.len());
        for f in dto.facets {
            for &v in &f {
                if v == 0 || v > dto.n {
                    return Err(Error::Parameter(format!(
                        "vertex {v} out of range 1..={}",
                        dto.n
                    )));
                }
            }
            facets.push(bits::from_indices(f.into_iter().map(|v| v - 1)));
        }
        Ok(SimplicialComplex::from_faces(dto.n, facets))
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
}

/// The Stanley-Reisner complex Δ(I): faces are the subsets whose product
/// avoids I. Facets are complements of the minimal transversals of the
/// generator supports.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::Domain(
            "the unit ideal has no Stanley-Reisner complex".into(),
        ));
    }
    let n = ideal.n_vars();
    let supports: Vec<Mask> = ideal.gens().iter().map(|g| g.support()).collect();
    let transversals = minimal_transversals(&supports, n);
    Ok(SimplicialComplex::from_faces(
        n,
        transversals.into_iter().map(|t| bits::full(n) & !t),
    ))
}

/// All inclusion-minimal sets hitting every support.
fn minimal_transversals(supports: &[Mask], n: usize) -> Vec<Mask> {
    let mut found: HashSet<Mask> = HashSet::new();
    let mut chosen_stack = vec![0 as Mask];
    while let Some(chosen) = chosen_stack.pop() {
        match supports.iter().find(|&&s| s & chosen == 0) {
            None => {
                found.insert(chosen);
            }
            Some(&s) => {
                for v in bits::iter(s & bits::full(n)) {
                    chosen_stack.push(chosen | bits::bit(v));
                }
            }
        }
    }
    let all: Vec<Mask> = found.iter().copied().collect();
    let mut minimal: Vec<Mask> = all
        .iter()
        .copied()
        .filter(|&t| !all.iter().any(|&o| o != t && o & !t == 0))
        .collect();
    minimal.sort();
    minimal
}

/// The Stanley-Reisner ideal I_Δ, generated by the minimal non-faces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = complex.n_vertices();
    if n > guards::SUBSET_SEARCH_MAX {
        return Err(Error::guard("subset_search", guards::SUBSET_SEARCH_MAX, n));
    }
    let mut nonfaces = Vec::new();
    for mask in 0..=bits::full(n) {
        if complex.is_face(mask) {
            continue;
        }
        let minimal = bits::iter(mask).all(|v| complex.is_face(mask & !bits::bit(v)));
        if minimal {
            nonfaces.push(Monomial(mask));
        }
    }
    Ok(MonomialIdeal::minimalize(n, nonfaces))
}

/// The dominance complex D(G): faces are complements of dominating sets,
/// so facets are complements of the minimal dominating sets.
pub fn dominance_complex(g: &Graph) -> Result<SimplicialComplex> {
    dominance_complex_with_guard(g, guards::SUBSET_SEARCH_MAX)
}

pub fn dominance_complex_with_guard(g: &Graph, max_n: usize) -> Result<SimplicialComplex> {
    let n = g.n();
    let sets = domination::minimal_dominating_sets_with_guard(g, max_n)?;
    Ok(SimplicialComplex::from_faces(
        n,
        sets.into_iter().map(|w| bits::full(n) & !w),
    ))
}

/// Ranks of reduced homology over GF(p), keyed by dimension (only
/// nonzero ranks are stored; -1 is a legal key).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub field_char: u32,
    pub ranks: BTreeMap<i32, usize>,
}

impl HomologyProfile {
    pub fn rank(&self, dim: i32) -> usize {
        self.ranks.get(&dim).copied().unwrap_or(0)
    }

    /// Max dimension with nonzero homology; `None` when everything
    /// vanishes.
    pub fn homological_dimension(&self) -> Option<i32> {
        self.ranks.keys().max().copied()
    }

    pub fn alternating_sum(&self) -> i64 {
        self.ranks
            .iter()
            .map(|(&d, &r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let ranks: BTreeMap<String, usize> = self
            .ranks
            .iter()
            .map(|(&d, &r)| (d.to_string(), r))
            .collect();
        serde_json::json!({ "p": self.field_char, "ranks": ranks })
    }
}

/// Reduced simplicial homology ranks of `complex` over GF(p).
pub fn reduced_homology_ranks(complex: &SimplicialComplex, p: u32) -> Result<HomologyProfile> {
    if !is_prime(p) {
        return Err(Error::Parameter(format!("{p} is not prime")));
    }
    let by_card = complex.faces_by_card()?;
    Ok(HomologyProfile {
        field_char: p,
        ranks: homology_from_faces(&by_card, p),
    })
}

/// Max dimension with nonvanishing reduced homology over GF(p).
pub fn homological_dimension(complex: &SimplicialComplex, p: u32) -> Result<Option<i32>> {
    Ok(reduced_homology_ranks(complex, p)?.homological_dimension())
}

/// Shared kernel: reduced homology ranks from faces grouped by
/// cardinality (index = cardinality, so dimension = index - 1). The
/// face list must be closed downward and contain the empty face unless
/// it is entirely empty (void complex).
pub fn homology_from_faces(by_card: &[Vec<Mask>], p: u32) -> BTreeMap<i32, usize> {
    let levels = by_card.len();
    let mut ranks_out = BTreeMap::new();
    if levels == 0 {
        return ranks_out;
    }
    // boundary_rank[c] = rank of ∂ from cardinality c to c-1
    let mut boundary_rank = vec![0usize; levels + 1];
    for c in 1..levels {
        boundary_rank[c] = boundary_rank_level(&by_card[c], &by_card[c - 1], p);
    }
    for c in 0..levels {
        let cycles = by_card[c].len() - boundary_rank[c];
        let boundaries = if c + 1 < levels { boundary_rank[c + 1] } else { 0 };
        let rank = cycles - boundaries;
        if rank > 0 {
            ranks_out.insert(c as i32 - 1, rank);
        }
    }
    ranks_out
}

fn boundary_rank_level(faces: &[Mask], subfaces: &[Mask], p: u32) -> usize {
    if faces.is_empty() || subfaces.is_empty() {
        return 0;
    }
    let index: HashMap<Mask, usize> = subfaces
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    if p == 2 {
        let mut m = BitMatrix::zero(faces.len(), subfaces.len());
        for (r, &f) in faces.iter().enumerate() {
            for v in bits::iter(f) {
                let c = index[&(f & !bits::bit(v))];
                m.set(r, c);
            }
        }
        m.rank()
    } else {
        let mut m = ModMatrix::zero(faces.len(), subfaces.len(), p);
        for (r, &f) in faces.iter().enumerate() {
            for (pos, v) in bits::iter(f).enumerate() {
                let c = index[&(f & !bits::bit(v))];
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                m.set(r, c, sign);
            }
        }
        m.rank()
    }
}
