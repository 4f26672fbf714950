//! Exact diameters and word lengths in Cayley graphs of `G^k`.
//!
//! States are mixed-radix codes ([`PowerCodec`]). The full search keeps one
//! visited bit per code and two frontier arrays of codes, one per level.
//! Frontier expansion is split across a rayon pool; a state is claimed by the
//! worker whose atomic `fetch_or` on the bitset flips its bit.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BudgetKind, DiameterError, PowerError};
use crate::gensets::GenSet;
use crate::power::{PowerCodec, PowerElement, RankIndex};

/// Frontier slice handed to one worker task.
const CHUNK: usize = 1 << 14;
/// Per-coordinate transition tables are used up to this radix.
const MAX_TABLE_RADIX: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_memory_bytes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_memory_bytes: 4 << 30,
            max_time: Duration::from_secs(30 * 60),
        }
    }
}

/// Which edges the Cayley graph has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `x -> x·s` for generators `s` only.
    Directed,
    /// `x -> x·s` for `s` in `A ∪ A⁻¹`.
    Undirected,
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Convention::Directed => f.write_str("directed"),
            Convention::Undirected => f.write_str("undirected"),
        }
    }
}

/// How successor codes are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Transition {
    /// Tables when the radix allows, otherwise direct.
    #[default]
    Auto,
    /// Decode, multiply, re-encode.
    Direct,
    /// Per-coordinate lookup tables.
    Table,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BfsReport {
    pub genset: String,
    pub convention: Convention,
    pub diameter: u32,
    /// `level_sizes[d]` elements have word length exactly `d`.
    pub level_sizes: Vec<u64>,
    pub reached: u64,
    pub state_space: u64,
    /// `reached == state_space`.
    pub generates: bool,
    /// Bitset bytes plus the largest combined size of two consecutive frontiers.
    pub peak_visited_bytes: u64,
    pub elapsed_secs: f64,
}

impl BfsReport {
    /// JSON with `elapsedSecs` removed; identical across runs and worker counts.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut()
            .expect("report is an object")
            .remove("elapsedSecs");
        serde_json::to_string(&v).expect("value serializes")
    }

    /// One `level,count` row per level, no header.
    pub fn level_profile_csv(&self) -> String {
        self.level_sizes
            .iter()
            .enumerate()
            .map(|(d, c)| format!("{d},{c}\n"))
            .collect()
    }

    /// Checks the structural invariants every complete report satisfies.
    pub fn check_invariants(&self) -> Result<(), String> {
        let sum: u64 = self.level_sizes.iter().sum();
        if sum != self.reached {
            return Err(format!(
                "level sizes sum to {sum}, reached {}",
                self.reached
            ));
        }
        if self.level_sizes.first() != Some(&1) {
            return Err("level 0 must hold exactly the identity".into());
        }
        if self.level_sizes.len() != self.diameter as usize + 1 {
            return Err("diameter is not the last level".into());
        }
        if self.level_sizes.contains(&0) {
            return Err("empty level inside the profile".into());
        }
        if self.generates != (self.reached == self.state_space) {
            return Err("generation flag disagrees with counts".into());
        }
        Ok(())
    }
}

pub fn level_profile_csv(report: &BfsReport, path: impl AsRef<Path>) -> Result<(), DiameterError> {
    let path = path.as_ref();
    fs::write(path, report.level_profile_csv()).map_err(|source| DiameterError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Successor function on codes for a fixed list of generators.
enum Stepper {
    Direct {
        codec: PowerCodec,
        gens: Vec<PowerElement>,
    },
    Table {
        radix: u64,
        /// `radix^slot` per slot.
        place: Vec<u64>,
        /// Per generator: `(slot, table)` for each non-identity coordinate.
        moves: Vec<Vec<(usize, Vec<u32>)>>,
    },
}

impl Stepper {
    fn new(
        codec: &PowerCodec,
        gens: &[PowerElement],
        mode: Transition,
    ) -> Result<Stepper, PowerError> {
        for g in gens {
            codec.encode(g)?;
        }
        let use_table = match mode {
            Transition::Direct => false,
            Transition::Table => true,
            Transition::Auto => codec.radix() <= MAX_TABLE_RADIX,
        };
        if !use_table {
            return Ok(Stepper::Direct {
                codec: codec.clone(),
                gens: gens.to_vec(),
            });
        }
        let radix = codec.radix();
        let place: Vec<u64> = (0..codec.width())
            .scan(1u64, |acc, _| {
                let p = *acc;
                *acc = acc.saturating_mul(radix);
                Some(p)
            })
            .collect();
        let elements: Vec<_> = (0..radix).map(|r| codec.unrank_part(r)).collect();
        let moves = gens
            .iter()
            .map(|g| {
                g.parts()
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_identity())
                    .map(|(slot, p)| {
                        let table = elements
                            .iter()
                            .map(|x| codec.rank_part(&x.then(p)).expect("closed coding") as u32)
                            .collect();
                        (slot, table)
                    })
                    .collect()
            })
            .collect();
        Ok(Stepper::Table {
            radix,
            place,
            moves,
        })
    }

    fn len(&self) -> usize {
        match self {
            Stepper::Direct { gens, .. } => gens.len(),
            Stepper::Table { moves, .. } => moves.len(),
        }
    }

    #[inline]
    fn step(&self, code: u64, gen: usize) -> u64 {
        match self {
            Stepper::Direct { codec, gens } => {
                let x = codec.decode(RankIndex(code)).expect("code in range");
                let y = x.compose(&gens[gen]).expect("same shape");
                codec.encode(&y).expect("closed coding").0
            }
            Stepper::Table {
                radix,
                place,
                moves,
            } => {
                let mut out = code;
                for (slot, table) in &moves[gen] {
                    let p = place[*slot];
                    let digit = (code / p) % radix;
                    let new = table[digit as usize] as u64;
                    out = out - digit * p + new * p;
                }
                out
            }
        }
    }
}

struct Bitset {
    words: Vec<AtomicU64>,
}

impl Bitset {
    fn new(bits: u64) -> Bitset {
        let n = bits.div_ceil(64) as usize;
        let mut words = Vec::with_capacity(n);
        words.resize_with(n, || AtomicU64::new(0));
        Bitset { words }
    }

    fn bytes_for(bits: u64) -> u64 {
        bits.div_ceil(64) * 8
    }

    /// Sets the bit; true if it was previously clear.
    #[inline]
    fn insert(&self, i: u64) -> bool {
        let mask = 1u64 << (i % 64);
        self.words[(i / 64) as usize].fetch_or(mask, Ordering::Relaxed) & mask == 0
    }
}

/// Level-synchronous breadth-first search over rank-encoded states.
#[derive(Debug, Clone)]
pub struct DiameterEngine {
    workers: usize,
    budget: Budget,
    transition: Transition,
}

impl Default for DiameterEngine {
    fn default() -> Self {
        DiameterEngine {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: Budget::default(),
            transition: Transition::Auto,
        }
    }
}

impl DiameterEngine {
    pub fn new() -> DiameterEngine {
        DiameterEngine::default()
    }

    pub fn with_workers(mut self, workers: usize) -> DiameterEngine {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> DiameterEngine {
        self.budget = budget;
        self
    }

    pub fn with_transition(mut self, transition: Transition) -> DiameterEngine {
        self.transition = transition;
        self
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Diameter over positive words in the generators.
    pub fn diameter_bfs(&self, genset: &GenSet) -> Result<BfsReport, DiameterError> {
        self.run(genset, Convention::Directed)
    }

    /// Diameter when inverses of the generators are also allowed.
    pub fn diameter_undirected(&self, genset: &GenSet) -> Result<BfsReport, DiameterError> {
        self.run(genset, Convention::Undirected)
    }

    pub fn run(&self, genset: &GenSet, convention: Convention) -> Result<BfsReport, DiameterError> {
        let start = Instant::now();
        let codec = PowerCodec::new(genset.degree(), genset.width(), genset.group())?;
        let gens = match convention {
            Convention::Directed => genset.generators().to_vec(),
            Convention::Undirected => genset.symmetrized().generators().to_vec(),
        };
        let stepper = Stepper::new(&codec, &gens, self.transition)?;
        let space = codec.space();
        let bitset_bytes = Bitset::bytes_for(space);

        let mut report = BfsReport {
            genset: genset.name().to_string(),
            convention,
            diameter: 0,
            level_sizes: Vec::new(),
            reached: 0,
            state_space: space,
            generates: false,
            peak_visited_bytes: bitset_bytes,
            elapsed_secs: 0.0,
        };
        let abort = |mut report: BfsReport, kind| {
            report.diameter = report.level_sizes.len().saturating_sub(1) as u32;
            report.reached = report.level_sizes.iter().sum();
            report.elapsed_secs = start.elapsed().as_secs_f64();
            Err(DiameterError::Budget {
                kind,
                partial: Box::new(report),
            })
        };
        if bitset_bytes + 16 > self.budget.max_memory_bytes {
            return abort(report, BudgetKind::Memory);
        }

        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("thread pool");
        let visited = Bitset::new(space);
        visited.insert(0);
        let mut frontier: Vec<u64> = vec![0];
        report.level_sizes.push(1);
        report.peak_visited_bytes = bitset_bytes + 8;

        loop {
            // bytes the next frontier may occupy before the memory budget trips
            let headroom = self
                .budget
                .max_memory_bytes
                .saturating_sub(bitset_bytes + 8 * frontier.len() as u64)
                / 8;
            let discovered = AtomicU64::new(0);
            let stop = AtomicBool::new(false);
            let timed_out = AtomicBool::new(false);
            let deadline = self.budget.max_time;
            let chunks: Vec<Vec<u64>> = pool.install(|| {
                frontier
                    .par_chunks(CHUNK)
                    .map(|chunk| {
                        if stop.load(Ordering::Relaxed) {
                            return Vec::new();
                        }
                        if start.elapsed() > deadline {
                            timed_out.store(true, Ordering::Relaxed);
                            stop.store(true, Ordering::Relaxed);
                            return Vec::new();
                        }
                        let mut local = Vec::new();
                        for &x in chunk {
                            for g in 0..stepper.len() {
                                let y = stepper.step(x, g);
                                if visited.insert(y) {
                                    local.push(y);
                                }
                            }
                        }
                        let total = discovered.fetch_add(local.len() as u64, Ordering::Relaxed)
                            + local.len() as u64;
                        if total > headroom {
                            stop.store(true, Ordering::Relaxed);
                        }
                        local
                    })
                    .collect()
            });
            if timed_out.load(Ordering::Relaxed) {
                return abort(report, BudgetKind::Time);
            }
            if stop.load(Ordering::Relaxed) {
                return abort(report, BudgetKind::Memory);
            }
            let total: usize = chunks.iter().map(Vec::len).sum();
            let mut next: Vec<u64> = Vec::with_capacity(total);
            for chunk in chunks {
                next.extend_from_slice(&chunk);
            }
            if next.is_empty() {
                break;
            }
            report.level_sizes.push(next.len() as u64);
            report.peak_visited_bytes = report
                .peak_visited_bytes
                .max(bitset_bytes + 8 * (frontier.len() + next.len()) as u64);
            frontier = next;
        }

        report.diameter = (report.level_sizes.len() - 1) as u32;
        report.reached = report.level_sizes.iter().sum();
        report.generates = report.reached == space;
        report.elapsed_secs = start.elapsed().as_secs_f64();
        Ok(report)
    }
}

/// Shortest positive word length of `x` over the generators, found by
/// meeting a forward search from the identity (`y -> y·s`) with a backward
/// search from `x` (`y -> y·s⁻¹`).
pub fn word_length(x: &PowerElement, genset: &GenSet) -> Result<u32, DiameterError> {
    let codec = PowerCodec::new(genset.degree(), genset.width(), genset.group())?;
    let target = codec.encode(x)?.0;
    if target == 0 {
        return Ok(0);
    }
    let inverses: Vec<PowerElement> = genset
        .generators()
        .iter()
        .map(PowerElement::inverse)
        .collect();
    let forward = Stepper::new(&codec, genset.generators(), Transition::Auto)?;
    let backward = Stepper::new(&codec, &inverses, Transition::Auto)?;

    let mut dist_f: HashMap<u64, u32> = HashMap::from([(0, 0)]);
    let mut dist_b: HashMap<u64, u32> = HashMap::from([(target, 0)]);
    let mut front_f = vec![0u64];
    let mut front_b = vec![target];
    let (mut depth_f, mut depth_b) = (0u32, 0u32);

    while !front_f.is_empty() && !front_b.is_empty() {
        let forward_side = front_f.len() <= front_b.len();
        let (front, dist, other, stepper, depth) = if forward_side {
            (&mut front_f, &mut dist_f, &dist_b, &forward, &mut depth_f)
        } else {
            (&mut front_b, &mut dist_b, &dist_f, &backward, &mut depth_b)
        };
        *depth += 1;
        let mut next = Vec::new();
        let mut best: Option<u32> = None;
        for &y in front.iter() {
            for g in 0..stepper.len() {
                let z = stepper.step(y, g);
                if let Some(&d) = other.get(&z) {
                    let total = *depth + d;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(z) {
                    e.insert(*depth);
                    next.push(z);
                }
            }
        }
        if let Some(b) = best {
            return Ok(b);
        }
        *front = next;
    }
    Err(DiameterError::Unreachable)
}
