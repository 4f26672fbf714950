//! Library results compared against the naive reference code in `common`.

mod common;

use std::collections::HashSet;

use altdiam::gensets::{
    a4_alpha_beta, a4_genset, a5_bases19, a5_power_genset, an2_genset, builtin, canonical_genset,
    load_genset, save_genset, A5Letters,
};
use altdiam::hall::{a5_transversal, census_a5};
use altdiam::verify::{a5_diagonal_pair, a5_square_pair};
use altdiam::{hall_check, word_length, Convention, DiameterEngine, GenSet, Perm, PowerElement};
use common::{mul, naive_closure_order, naive_diameter, naive_distances, Tuple};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn engine() -> DiameterEngine {
    DiameterEngine::new().with_workers(2)
}

fn to_perm(p: &[usize]) -> Perm {
    Perm::from_images(p.iter().map(|&x| x as u8).collect()).unwrap()
}

fn to_element(t: &Tuple) -> PowerElement {
    PowerElement::new(t.iter().map(|p| to_perm(p)).collect()).unwrap()
}

fn even_perms(n: usize) -> Vec<Vec<usize>> {
    common::lex_perms(n)
        .into_iter()
        .filter(|p| common::is_even(p))
        .collect()
}

#[test]
fn engine_matches_naive_bfs_on_small_sets() {
    let sets: Vec<GenSet> = vec![
        a5_power_genset(1).unwrap(),
        a5_power_genset(2).unwrap(),
        a5_square_pair(),
        a5_diagonal_pair(),
        a4_genset(3).unwrap(),
        an2_genset(5).unwrap(),
        builtin("canonical:a5-power:1:2").unwrap(),
    ];
    for g in &sets {
        for (undirected, convention) in [
            (false, Convention::Directed),
            (true, Convention::Undirected),
        ] {
            let report = engine().run(g, convention).unwrap();
            let dist = naive_distances(g, undirected);
            let mut levels = vec![0u64; *dist.values().max().unwrap() as usize + 1];
            for &d in dist.values() {
                levels[d as usize] += 1;
            }
            assert_eq!(report.level_sizes, levels, "{} {convention}", g.name());
            assert_eq!(report.reached as usize, dist.len());
        }
    }
}

#[test]
fn golden_diameters_by_naive_search() {
    assert_eq!(
        naive_diameter(&a5_power_genset(1).unwrap(), false),
        (10, 60)
    );
    assert_eq!(
        naive_diameter(&a5_power_genset(2).unwrap(), false),
        (18, 3600)
    );
    assert_eq!(naive_diameter(&a5_square_pair(), false), (9, 60));
    assert_eq!(naive_diameter(&a5_diagonal_pair(), false), (20, 3600));
}

#[test]
fn word_length_matches_full_search_on_a5_squared() {
    let g = a5_power_genset(2).unwrap();
    let dist = naive_distances(&g, false);
    let mut all: Vec<&Tuple> = dist.keys().collect();
    all.sort();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in all.choose_multiple(&mut rng, 100) {
        assert_eq!(word_length(&to_element(t), &g).unwrap(), dist[*t], "{t:?}");
    }
}

#[test]
fn a4_is_vertex_transitive() {
    // every vertex of the Cayley graph has the same eccentricity
    let alpha_beta = a4_alpha_beta();
    let gens: Vec<Vec<usize>> = [&alpha_beta.0, &alpha_beta.1]
        .iter()
        .map(|p| p.images().iter().map(|&x| x as usize).collect())
        .collect();
    let elements: Vec<Vec<usize>> = even_perms(4);
    let ecc = |start: &Vec<usize>| {
        let mut seen = HashSet::from([start.clone()]);
        let mut frontier = vec![start.clone()];
        let mut depth = 0;
        loop {
            let next: Vec<Vec<usize>> = frontier
                .iter()
                .flat_map(|x| gens.iter().map(move |s| mul(x, s)))
                .filter(|y| seen.insert(y.clone()))
                .collect();
            if next.is_empty() {
                return depth;
            }
            frontier = next;
            depth += 1;
        }
    };
    let e0 = ecc(&elements[0]);
    assert!(elements.iter().all(|x| ecc(x) == e0));
    let g = canonical_genset(&[alpha_beta.0, alpha_beta.1], 1).unwrap();
    assert_eq!(engine().diameter_bfs(&g).unwrap().diameter, e0);
}

#[test]
fn census_matches_naive_orbit_count() {
    let evens = even_perms(5);
    let mut pairs = Vec::new();
    for s in &evens {
        for t in &evens {
            if naive_closure_order(&[s.clone(), t.clone()]) == 60 {
                pairs.push((s.clone(), t.clone()));
            }
        }
    }
    assert_eq!(pairs.len(), 2280);
    let sigmas = common::lex_perms(5);
    let conj = |p: &Vec<usize>, s: &Vec<usize>| mul(&mul(&common::inverse(s), p), s);
    let mut seen: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
    let mut orbits = 0;
    for (s, t) in &pairs {
        if seen.contains(&(s.clone(), t.clone())) {
            continue;
        }
        orbits += 1;
        for sigma in &sigmas {
            seen.insert((conj(s, sigma), conj(t, sigma)));
        }
    }
    assert_eq!(orbits, 19);

    let census = census_a5();
    assert_eq!(
        (census.pair_count, census.class_count, census.orbit_count),
        (2280, 19, 19)
    );
}

#[test]
fn transversal_detects_missing_and_repeated_classes() {
    let listed = a5_bases19();
    assert!(a5_transversal(&listed).is_complete());
    let short = &listed[..18];
    let t = a5_transversal(short);
    assert!(!t.is_complete());
    assert_eq!(t.unmatched, 120);
    let mut repeated = listed.clone();
    let sigma = Perm::parse_cycles("(1 2 3)", 5).unwrap();
    repeated[18] = (
        listed[0].0.conjugate_by(&sigma),
        listed[0].1.conjugate_by(&sigma),
    );
    assert!(a5_transversal(&repeated).listed_collide);
}

#[test]
fn hall_verdict_matches_naive_closure() {
    let evens = even_perms(5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut seen_true = 0;
    let mut seen_false = 0;
    for _ in 0..40 {
        let cols: Vec<(Vec<usize>, Vec<usize>)> = (0..2)
            .map(|_| {
                (
                    evens.choose(&mut rng).unwrap().clone(),
                    evens.choose(&mut rng).unwrap().clone(),
                )
            })
            .collect();
        let gens: Vec<Tuple> = vec![
            vec![cols[0].0.clone(), cols[1].0.clone()],
            vec![cols[0].1.clone(), cols[1].1.clone()],
        ];
        if gens[0] == gens[1]
            || gens
                .iter()
                .any(|t| t.iter().all(|p| p.iter().enumerate().all(|(i, &x)| i == x)))
        {
            continue;
        }
        let g = GenSet::alternating("random", "", gens.iter().map(to_element).collect()).unwrap();
        let naive = naive_distances(&g, false).len() == 3600;
        match hall_check(&g) {
            Ok(h) => {
                assert_eq!(h.verdict, naive, "{gens:?}");
                if naive {
                    seen_true += 1
                } else {
                    seen_false += 1
                }
            }
            Err(_) => assert!(!naive),
        }
    }
    assert!(seen_true > 0 && seen_false > 0);
}

#[test]
fn conjugate_columns_are_rejected_with_witness() {
    let l = A5Letters::new();
    let sigma = Perm::parse_cycles("(1 3)(2 5)", 5).unwrap();
    let g = GenSet::alternating(
        "conjugate",
        "",
        vec![
            PowerElement::new(vec![l.a.clone(), l.a.conjugate_by(&sigma)]).unwrap(),
            PowerElement::new(vec![l.b.clone(), l.b.conjugate_by(&sigma)]).unwrap(),
        ],
    )
    .unwrap();
    let h = hall_check(&g).unwrap();
    assert!(!h.verdict);
    let w = &h.equivalences[0].witness;
    assert_eq!(l.a.conjugate_by(w), l.a.conjugate_by(&sigma));
    assert_eq!(l.b.conjugate_by(w), l.b.conjugate_by(&sigma));
    assert_eq!(naive_distances(&g, false).len(), 60);
}

#[test]
fn genset_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a4-power:3", "an2:8", "a5-power:5", "a5-bases19"] {
        let g = builtin(name).unwrap();
        let path = dir.path().join(format!("{}.json", name.replace(':', "_")));
        save_genset(&g, &path).unwrap();
        assert_eq!(load_genset(&path).unwrap(), g);
    }
    let bad = dir.path().join("odd.json");
    std::fs::write(
        &bad,
        r#"{"name":"odd","degree":5,"width":1,"generators":[["(1 2)"]],"provenance":""}"#,
    )
    .unwrap();
    assert!(load_genset(&bad).is_err());
    std::fs::write(&bad, r#"{"name":"odd","degree":5,"width":1,"generators":[["(1 2)"]],"provenance":"","group":"symmetric"}"#).unwrap();
    assert_eq!(load_genset(&bad).unwrap().len(), 1);
}
