//! Squarefree monomials and monomial ideals in minimal-generator form.
//!
//! A monomial is its support bitmask; an ideal stores its ambient
//! variable count plus the divisibility-minimal generators, kept sorted
//! so that ideal equality is equality of the representation. The zero
//! ideal has no generators; the unit ideal is generated by the empty
//! support (the monomial 1) and survives colon operations distinctly.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A squarefree monomial: the set of variable indices with exponent 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Mask);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(0)
    }

    pub fn variable(i: usize) -> Monomial {
        Monomial(bits::bit(i))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Monomial {
        Monomial(bits::from_indices(indices))
    }

    pub fn support(&self) -> Mask {
        self.0
    }

    pub fn degree(&self) -> usize {
        bits::card(self.0)
    }

    pub fn divides(&self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn lcm(&self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub fn gcd(&self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    /// `self / gcd(self, other)`: the standard colon step.
    pub fn quotient_by(&self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    /// Display against a label set, `*`-joined; the unit is `1`.
    pub fn to_string_with(&self, labels: &[String]) -> String {
        if self.0 == 0 {
            return "1".into();
        }
        bits::iter(self.0)
            .map(|i| labels[i].clone())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A squarefree monomial ideal given by its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n_vars: usize) -> MonomialIdeal {
        MonomialIdeal { n_vars, gens: Vec::new() }
    }

    pub fn unit(n_vars: usize) -> MonomialIdeal {
        MonomialIdeal { n_vars, gens: vec![Monomial::one()] }
    }

    /// Minimalize an arbitrary generating set: keep exactly the
    /// divisibility-minimal elements, sorted canonically.
    pub fn minimalize<I>(n_vars: usize, gens: I) -> MonomialIdeal
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut raw: Vec<Monomial> = gens.into_iter().collect();
        raw.sort_by_key(|m| (m.degree(), m.0));
        raw.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in raw {
            if !minimal.iter().any(|g| g.divides(m)) {
                minimal.push(m);
            }
        }
        minimal.sort_by_key(|m| m.0);
        MonomialIdeal { n_vars, gens: minimal }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|m| m.0 == 0)
    }

    /// Ideal membership by divisibility against the minimal generators.
    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Containment of ideals: every generator of `self` lies in `other`.
    pub fn subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|&g| other.contains(g))
    }

    /// Reinterpret over a wider ambient ring (variables are appended).
    pub fn extended(&self, n_vars: usize) -> Result<MonomialIdeal> {
        if n_vars < self.n_vars {
            return Err(Error::Parameter(format!(
                "cannot shrink ambient ring from {} to {n_vars}",
                self.n_vars
            )));
        }
        Ok(MonomialIdeal { n_vars, gens: self.gens.clone() })
    }

    /// `(I : m)` = minimalized `{ g / gcd(g, m) }`.
    pub fn colon(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.n_vars, self.gens.iter().map(|g| g.quotient_by(m)))
    }

    /// `I + J` over a shared ambient ring.
    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        Ok(MonomialIdeal::minimalize(
            self.n_vars,
            self.gens.iter().chain(other.gens.iter()).copied(),
        ))
    }

    /// `I ∩ J` via pairwise lcm of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &a in &self.gens {
            for &b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::minimalize(self.n_vars, gens))
    }

    /// `m · I`; errors if the product of `m` with any generator would
    /// leave the squarefree world.
    pub fn scale(&self, m: Monomial) -> Result<MonomialIdeal> {
        if bits::card(m.0) > 0 && m.0 & !bits::full(self.n_vars) != 0 {
            return Err(Error::Parameter("scaling monomial outside ambient ring".into()));
        }
        for &g in &self.gens {
            if g.0 & m.0 != 0 {
                return Err(Error::Domain(format!(
                    "scaling by a monomial sharing support with generator {:?} is not squarefree",
                    g
                )));
            }
        }
        Ok(MonomialIdeal::minimalize(
            self.n_vars,
            self.gens.iter().map(|&g| g.lcm(m)),
        ))
    }

    /// Partition the generators by divisibility by variable `v`:
    /// `J = <gens divisible by x_v>`, `K = <the rest>`.
    pub fn split_at(&self, v: usize) -> Result<(MonomialIdeal, MonomialIdeal)> {
        if v >= self.n_vars {
            return Err(Error::Parameter(format!(
                "variable index {v} out of range for {} variables",
                self.n_vars
            )));
        }
        let (j, k): (Vec<Monomial>, Vec<Monomial>) =
            self.gens.iter().partition(|g| bits::has(g.0, v));
        if j.is_empty() {
            return Err(Error::Parameter(format!(
                "variable {v} divides no generator"
            )));
        }
        Ok((
            MonomialIdeal { n_vars: self.n_vars, gens: j },
            MonomialIdeal { n_vars: self.n_vars, gens: k },
        ))
    }

    /// Union of the generator supports.
    pub fn support_union(&self) -> Mask {
        self.gens.iter().fold(0, |m, g| m | g.0)
    }

    pub fn to_text(&self, labels: &[String]) -> String {
        self.gens
            .iter()
            .map(|g| g.to_string_with(labels))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(IdealJson::from(self)).expect("ideal serializes")
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<MonomialIdeal> {
        let dto: IdealJson = serde_json::from_value(value.clone())?;
        dto.into_ideal()
    }
}

/// JSON form, 1-based variable indices as in all text I/O.
#[derive(Serialize, Deserialize)]
struct IdealJson {
    n_vars: usize,
    gens: Vec<Vec<usize>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> IdealJson {
        IdealJson {
            n_vars: i.n_vars,
            gens: i
                .gens
                .iter()
                .map(|g| bits::iter(g.0).map(|v| v + 1).collect())
                .collect(),
        }
    }
}

impl IdealJson {
    fn into_ideal(self) -> Result<MonomialIdeal> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in self.gens {
            for &v in &g {
                if v == 0 || v > self.n_vars {
                    return Err(Error::Parameter(format!(
                        "variable {v} out of range 1..={}",
                        self.n_vars
                    )));
                }
            }
            gens.push(Monomial::from_indices(g.into_iter().map(|v| v - 1)));
        }
        Ok(MonomialIdeal::minimalize(self.n_vars, gens))
    }
}

impl MonomialIdeal {
    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::Parameter(format!(
                "ambient rings differ: {} vs {} variables",
                self.n_vars, other.n_vars
            )));
        }
        Ok(())
    }
}

/// The closed neighborhood ideal `NI(G)`: one generator per vertex `w`,
/// the product of the variables in `N[w]`, minimalized.
pub fn closed_neighborhood_ideal(g: &Graph) -> MonomialIdeal {
    let gens = (0..g.n()).map(|w| {
        Monomial(g.closed_neighborhood(w).expect("vertex in range"))
    });
    MonomialIdeal::minimalize(g.n(), gens)
}

/// The edge ideal `I(G)`: one degree-2 generator per edge.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        g.n(),
        g.edges().map(|(u, v)| Monomial::from_indices([u, v])),
    )
}

/// The t-path ideal `J_t(G)`: products over vertex sequences forming
/// paths on `t` vertices, deduplicated by support.
pub fn path_ideal(g: &Graph, t: usize) -> Result<MonomialIdeal> {
    if t < 1 {
        return Err(Error::Parameter("path ideal needs t >= 1".into()));
    }
    let n = g.n();
    if t > n {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut supports = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(t);
    for start in 0..n {
        stack.push(start);
        extend_paths(g, &mut stack, bits::bit(start), t, &mut supports);
        stack.pop();
    }
    Ok(MonomialIdeal::minimalize(n, supports.into_iter().map(Monomial)))
}

fn extend_paths(g: &Graph, stack: &mut Vec<usize>, used: Mask, t: usize, out: &mut Vec<Mask>) {
    if stack.len() == t {
        out.push(used);
        return;
    }
    let last = *stack.last().unwrap();
    for next in bits::iter(g.neighbors(last) & !used) {
        stack.push(next);
        extend_paths(g, stack, used | bits::bit(next), t, out);
        stack.pop();
    }
}
