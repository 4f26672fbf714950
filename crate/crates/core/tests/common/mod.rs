//! Independent reference implementations used as test oracles. Nothing
//! here calls into the library except to read generators out of a `GenSet`.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use altdiam::GenSet;

/// A tuple of permutations as plain image vectors, 0-based.
pub type Tuple = Vec<Vec<usize>>;

/// `(p·q)(x) = q(p(x))`.
pub fn mul(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

pub fn mul_tuple(x: &Tuple, y: &Tuple) -> Tuple {
    x.iter().zip(y).map(|(p, q)| mul(p, q)).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Parity by counting inversions.
pub fn is_even(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            inv += (p[i] > p[j]) as usize;
        }
    }
    inv % 2 == 0
}

pub fn tuple_of(x: &altdiam::PowerElement) -> Tuple {
    x.parts()
        .iter()
        .map(|p| p.images().iter().map(|&i| i as usize).collect())
        .collect()
}

pub fn generators(g: &GenSet) -> Vec<Tuple> {
    g.generators().iter().map(tuple_of).collect()
}

pub fn identity_tuple(degree: usize, width: usize) -> Tuple {
    vec![(0..degree).collect(); width]
}

/// Word-length of every element reachable from the identity, `x -> x·s`.
pub fn naive_distances(g: &GenSet, undirected: bool) -> HashMap<Tuple, u32> {
    let mut gens = generators(g);
    if undirected {
        let inv: Vec<Tuple> = gens
            .iter()
            .map(|t| t.iter().map(|p| inverse(p)).collect())
            .collect();
        gens.extend(inv);
    }
    let start = identity_tuple(g.degree(), g.width());
    let mut dist = HashMap::from([(start.clone(), 0u32)]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for s in &gens {
            let y = mul_tuple(&x, s);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn naive_diameter(g: &GenSet, undirected: bool) -> (u32, usize) {
    let dist = naive_distances(g, undirected);
    (*dist.values().max().unwrap(), dist.len())
}

/// Order of the subgroup of `S_n` generated by `gens`.
pub fn naive_closure_order(gens: &[Vec<usize>]) -> usize {
    let n = gens[0].len();
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = mul(&x, s);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

/// All permutations of `0..n` in lexicographic order of their image arrays.
pub fn lex_perms(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}
