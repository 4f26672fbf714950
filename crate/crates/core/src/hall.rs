//! Certifying that tuples generate `A_n^k` without enumerating `A_n^k`.
//!
//! For a non-abelian simple `G`, a list of `k`-tuples generates `G^k` exactly
//! when every coordinate column generates `G` and no two columns are carried
//! onto each other by an automorphism of `G`. For `A_n` with `n >= 5, n != 6`
//! the automorphisms are conjugations by `S_n`, which is what this module
//! searches.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::HallError;
use crate::gensets::GenSet;
use crate::perm::{Perm, FACTORIALS};

/// Largest degree for which a subgroup is enumerated element by element.
pub const MAX_CLOSURE_DEGREE: usize = 10;
/// Largest degree for which conjugating elements are searched over all of `S_n`.
pub const MAX_AUT_DEGREE: usize = 9;

fn check_closure_degree(degree: usize) -> Result<(), HallError> {
    if degree > MAX_CLOSURE_DEGREE {
        return Err(HallError::ClosureBudget(degree));
    }
    if degree == 0 {
        return Err(crate::error::PermError::Degree(0).into());
    }
    Ok(())
}

fn check_uniform(gens: &[Perm], degree: usize) -> Result<(), HallError> {
    match gens.iter().find(|g| g.degree() != degree) {
        Some(g) => Err(crate::error::PermError::DegreeMismatch(degree, g.degree()).into()),
        None => Ok(()),
    }
}

/// All elements of `⟨gens⟩`, in breadth-first discovery order from the identity.
pub fn closure_elements(gens: &[Perm], degree: usize) -> Result<Vec<Perm>, HallError> {
    check_closure_degree(degree)?;
    check_uniform(gens, degree)?;
    let mut seen = vec![false; FACTORIALS[degree] as usize];
    let id = Perm::identity(degree);
    seen[0] = true;
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        next += 1;
        for g in gens {
            let y = x.then(g);
            let r = y.lehmer_rank() as usize;
            if !seen[r] {
                seen[r] = true;
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

/// Order of the subgroup of `S_degree` generated by `gens`.
pub fn closure_order(gens: &[Perm], degree: usize) -> Result<u64, HallError> {
    Ok(closure_elements(gens, degree)?.len() as u64)
}

/// Commutator subgroup `[G, G]` of the group generated by `gens`, as a list of elements.
pub fn commutator_subgroup(gens: &[Perm], degree: usize) -> Result<Vec<Perm>, HallError> {
    let group = closure_elements(gens, degree)?;
    let mut commutators: Vec<Perm> = Vec::new();
    for x in &group {
        let xi = x.inverse();
        for y in &group {
            let c = xi.then(&y.inverse()).then(x).then(y);
            if !c.is_identity() && !commutators.contains(&c) {
                commutators.push(c);
            }
        }
    }
    closure_elements(&commutators, degree)
}

fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut t: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
    t.sort_unstable();
    t
}

/// Searches `S_n` for `σ` with `σ⁻¹ p_i σ = q_i` for every `i`. Returns the
/// witness of least Lehmer rank.
pub fn aut_equivalent(p: &[Perm], q: &[Perm]) -> Result<Option<Perm>, HallError> {
    if p.len() != q.len() {
        return Err(HallError::LengthMismatch(p.len(), q.len()));
    }
    let Some(first) = p.first() else {
        return Ok(Some(Perm::identity(1)));
    };
    let n = first.degree();
    check_uniform(p, n)?;
    check_uniform(q, n)?;
    if n < 4 {
        return Err(HallError::UnsupportedDegree(
            n,
            "automorphisms are conjugations only for n >= 4",
        ));
    }
    if n == 6 {
        return Err(HallError::UnsupportedDegree(
            6,
            "A6 has outer automorphisms",
        ));
    }
    if n > MAX_AUT_DEGREE {
        return Err(HallError::UnsupportedDegree(
            n,
            "conjugator search limited to n <= 9",
        ));
    }
    if p.iter().zip(q).any(|(x, y)| cycle_type(x) != cycle_type(y)) {
        return Ok(None);
    }
    let found = (0..FACTORIALS[n]).into_par_iter().find_first(|&r| {
        let sigma = Perm::lehmer_unrank(r, n).expect("rank below n!");
        let sigma_inv = sigma.inverse();
        p.iter()
            .zip(q)
            .all(|(x, y)| &sigma_inv.then(x).then(&sigma) == y)
    });
    Ok(found.map(|r| Perm::lehmer_unrank(r, n).expect("rank below n!")))
}

/// Two columns related by conjugation, `σ⁻¹ · column_i · σ = column_j` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "as_cycles")]
    pub witness: Perm,
}

fn as_cycles<S: Serializer>(p: &Perm, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HallReport {
    pub genset: String,
    pub per_coordinate: Vec<bool>,
    pub equivalences: Vec<Equivalence>,
    pub verdict: bool,
}

/// Checks both conditions column by column. A `true` verdict certifies that
/// the generators generate `A_n^k`.
pub fn hall_check(genset: &GenSet) -> Result<HallReport, HallError> {
    let n = genset.degree();
    if n < 5 {
        return Err(HallError::UnsupportedDegree(
            n,
            "A_n is simple only for n >= 5",
        ));
    }
    if n == 6 {
        return Err(HallError::UnsupportedDegree(
            6,
            "A6 has outer automorphisms",
        ));
    }
    if n > MAX_AUT_DEGREE {
        return Err(HallError::UnsupportedDegree(
            n,
            "conjugator search limited to n <= 9",
        ));
    }
    let columns: Vec<Vec<Perm>> = (1..=genset.width()).map(|s| genset.column(s)).collect();
    if let Some(i) = columns.iter().position(|c| !c.iter().all(Perm::is_even)) {
        return Err(HallError::OddColumn(i + 1));
    }
    let alt_order = FACTORIALS[n] / 2;
    let per_coordinate = columns
        .iter()
        .map(|c| Ok(closure_order(c, n)? == alt_order))
        .collect::<Result<Vec<_>, HallError>>()?;
    let mut equivalences = Vec::new();
    for i in 0..columns.len() {
        for j in i + 1..columns.len() {
            if let Some(witness) = aut_equivalent(&columns[i], &columns[j])? {
                equivalences.push(Equivalence {
                    i: i + 1,
                    j: j + 1,
                    witness,
                });
            }
        }
    }
    let verdict = per_coordinate.iter().all(|&b| b) && equivalences.is_empty();
    Ok(HallReport {
        genset: genset.name().to_string(),
        per_coordinate,
        equivalences,
        verdict,
    })
}

fn even_perms(degree: usize) -> Vec<Perm> {
    (0..FACTORIALS[degree])
        .map(|r| Perm::lehmer_unrank(r, degree).expect("rank below n!"))
        .filter(Perm::is_even)
        .collect()
}

/// Least pair of Lehmer ranks over the `S_n`-conjugation orbit of `(s, t)`.
pub fn canonical_pair_form(s: &Perm, t: &Perm) -> (u64, u64) {
    let n = s.degree();
    (0..FACTORIALS[n])
        .map(|r| {
            let sigma = Perm::lehmer_unrank(r, n).expect("rank below n!");
            let rs = s.conjugate_by(&sigma).lehmer_rank();
            let rt = t.conjugate_by(&sigma).lehmer_rank();
            (rs, rt)
        })
        .min()
        .expect("S_n is nonempty")
}

/// Generating pairs of `A_5`, counted and split into `Aut(A_5)`-classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Census {
    /// Ordered pairs `(s, t)` with `⟨s, t⟩ = A_5`.
    pub pair_count: u64,
    /// `pair_count / |Aut(A_5)|`.
    pub class_count: u64,
    /// Number of distinct conjugation orbits, counted directly.
    pub orbit_count: u64,
}

pub fn generating_pairs_a5() -> Vec<(Perm, Perm)> {
    let evens = even_perms(5);
    let order = FACTORIALS[5] / 2;
    evens
        .par_iter()
        .flat_map_iter(|s| {
            evens.iter().filter_map(move |t| {
                let gens = [s.clone(), t.clone()];
                (closure_order(&gens, 5).expect("degree 5") == order)
                    .then(|| (s.clone(), t.clone()))
            })
        })
        .collect()
}

pub fn census_a5() -> Census {
    let pairs = generating_pairs_a5();
    let pair_count = pairs.len() as u64;
    let mut orbits: Vec<(u64, u64)> = pairs
        .par_iter()
        .map(|(s, t)| canonical_pair_form(s, t))
        .collect();
    orbits.sort_unstable();
    orbits.dedup();
    Census {
        pair_count,
        class_count: pair_count / FACTORIALS[5],
        orbit_count: orbits.len() as u64,
    }
}

/// How the generating pairs of `A_5` fall onto a list of representatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Transversal {
    /// Number of generating pairs equivalent to each listed pair.
    pub class_sizes: Vec<u64>,
    /// Generating pairs equivalent to no listed pair.
    pub unmatched: u64,
    /// Whether two listed pairs share a class.
    pub listed_collide: bool,
}

impl Transversal {
    /// Every generating pair is equivalent to exactly one listed pair.
    pub fn is_complete(&self) -> bool {
        !self.listed_collide && self.unmatched == 0 && self.class_sizes.iter().all(|&c| c > 0)
    }
}

pub fn a5_transversal(listed: &[(Perm, Perm)]) -> Transversal {
    let mut index: HashMap<(u64, u64), usize> = HashMap::new();
    let mut listed_collide = false;
    for (i, (s, t)) in listed.iter().enumerate() {
        if index.insert(canonical_pair_form(s, t), i).is_some() {
            listed_collide = true;
        }
    }
    let mut class_sizes = vec![0u64; listed.len()];
    let mut unmatched = 0;
    let forms: Vec<(u64, u64)> = generating_pairs_a5()
        .par_iter()
        .map(|(s, t)| canonical_pair_form(s, t))
        .collect();
    for f in forms {
        match index.get(&f) {
            Some(&i) => class_sizes[i] += 1,
            None => unmatched += 1,
        }
    }
    Transversal {
        class_sizes,
        unmatched,
        listed_collide,
    }
}
