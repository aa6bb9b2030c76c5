//! Exhaustive enumeration of filling permutations for given `(g, p, n)`.
//!
//! Setting `σ(j) = k` forces `σ(Q(k)) = τ(j)`. Applying the rule to its
//! own output returns to `(j, k)` after four steps, so every guess fixes
//! four images and a solution is reached after `n` guesses. Bijectivity
//! and parity conflicts cut a branch; the cycle and bigon budgets are
//! pruned once cycles close.

use std::sync::atomic::{AtomicU64, AtomicU8, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::encoding::{make_q, make_tau};
use crate::perm::Permutation;
use crate::verifier::{validate, FillingInstance};

pub const DEFAULT_MAX_NODES: u64 = 1_000_000_000;
pub const DEFAULT_MAX_TIME: Duration = Duration::from_secs(600);
/// Largest degree the brute-force oracle accepts.
pub const NAIVE_MAX_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("intersection number must be at least 1")]
    ZeroN,
    #[error("n + 2 - 2g = {0} leaves no faces")]
    NoFaces(i64),
    #[error("brute force is limited to degree {NAIVE_MAX_DEGREE}, got {0}")]
    NaiveTooLarge(usize),
    #[error("node limit of {0} exceeded")]
    NodeLimit(u64),
    #[error("time limit of {0:?} exceeded")]
    TimeLimit(Duration),
}

impl SearchError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, SearchError::NodeLimit(_) | SearchError::TimeLimit(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchQuery {
    pub genus: usize,
    pub punctures: usize,
    pub n: usize,
    /// Report one canonical representative per symmetry class.
    pub dedup: bool,
    /// Stop after this many raw solutions.
    pub limit: Option<usize>,
    /// Use the brute-force oracle.
    pub naive: bool,
    /// Restrict `σ(1)` to one representative of its symmetry orbit.
    pub break_symmetry: bool,
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchQuery {
    pub fn new(genus: usize, punctures: usize, n: usize) -> Self {
        SearchQuery {
            genus,
            punctures,
            n,
            dedup: false,
            limit: None,
            naive: false,
            break_symmetry: false,
            max_nodes: DEFAULT_MAX_NODES,
            max_time: DEFAULT_MAX_TIME,
        }
    }

    pub fn dedup(mut self, on: bool) -> Self {
        self.dedup = on;
        self
    }

    pub fn limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn naive(mut self, on: bool) -> Self {
        self.naive = on;
        self
    }

    pub fn break_symmetry(mut self, on: bool) -> Self {
        self.break_symmetry = on;
        self
    }

    pub fn max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }

    pub fn max_time(mut self, time: Duration) -> Self {
        self.max_time = time;
        self
    }

    /// `n + 2 - 2g`.
    pub fn faces(&self) -> i64 {
        self.n as i64 + 2 - 2 * self.genus as i64
    }

    fn check(&self) -> Result<usize, SearchError> {
        if self.n == 0 {
            return Err(SearchError::ZeroN);
        }
        let f = self.faces();
        if f < 1 {
            return Err(SearchError::NoFaces(f));
        }
        Ok(f as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Sorted; canonical forms when deduplicating.
    pub solutions: Vec<Permutation>,
    pub raw_count: usize,
    /// Number of distinct canonical forms among the raw solutions.
    pub dedup_count: usize,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    /// Set when `p` exceeds the face count, so nothing was searched.
    pub vacuous: bool,
}

/// Generators of the label symmetries: `π_a` advances every `a` index by
/// one in both orientations and fixes `b`; `π_b` does the same for `b`.
pub fn symmetry_group(n: usize) -> Vec<Permutation> {
    vec![shift(n, 1, 0), shift(n, 0, 1)]
}

/// `π_a^da ∘ π_b^db`.
fn shift(n: usize, da: usize, db: usize) -> Permutation {
    assert!(n >= 1);
    let images = (0..4 * n)
        .map(|j| {
            let half = j / (2 * n);
            let base = j % (2 * n);
            let (index, curve) = (base / 2, base % 2);
            let d = if curve == 0 { da } else { db };
            (half * 2 * n + ((index + d) % n) * 2 + curve) as u32
        })
        .collect();
    Permutation::from_zero_based(images)
}

/// All `n²` elements of the symmetry group.
pub fn symmetry_elements(n: usize) -> Vec<Permutation> {
    (0..n)
        .cartesian_product(0..n)
        .map(|(a, b)| shift(n, a, b))
        .collect()
}

fn conjugate(pi: &Permutation, sigma: &Permutation) -> Permutation {
    let pi_inv = pi.inverse();
    Permutation::compose(pi, &Permutation::compose(sigma, &pi_inv).expect("degree"))
        .expect("degree")
}

/// The lexicographically smallest `πσπ⁻¹` over the symmetry group.
pub fn canonical_form(sigma: &Permutation) -> Permutation {
    let d = sigma.degree();
    assert!(
        d.is_multiple_of(4) && d > 0,
        "degree must be a positive multiple of 4"
    );
    symmetry_elements(d / 4)
        .iter()
        .map(|pi| conjugate(pi, sigma))
        .min()
        .expect("group is nonempty")
}

/// Lists every filling permutation for the query.
pub fn enumerate(q: &SearchQuery) -> Result<SearchResult, SearchError> {
    if q.naive {
        return naive_enumerate(q);
    }
    let faces = q.check()?;
    let start = Instant::now();
    if q.punctures > faces {
        return Ok(finish(q, Vec::new(), 0, start, true));
    }
    let ctx = Context::new(q, faces, start);
    let root = State::new(4 * q.n);
    let first_values = ctx.first_values();

    let mut raw = Vec::new();
    if q.limit.is_some() {
        // sequential so a limited run is reproducible
        ctx.guess_values(&root, 0, &first_values, &mut raw)?;
    } else {
        let parts: Vec<Result<Vec<Permutation>, SearchError>> = first_values
            .par_iter()
            .map(|&k| {
                let mut found = Vec::new();
                ctx.guess_values(&root, 0, &[k], &mut found)?;
                Ok(found)
            })
            .collect();
        for part in parts {
            raw.extend(part?);
        }
    }
    let nodes = ctx.nodes.load(Ordering::Relaxed);
    Ok(finish(q, raw, nodes, start, false))
}

/// Brute force over every permutation of degree `4n ≤ 8`, filtered by
/// [`validate`].
pub fn naive_enumerate(q: &SearchQuery) -> Result<SearchResult, SearchError> {
    let faces = q.check()?;
    let m = 4 * q.n;
    if m > NAIVE_MAX_DEGREE {
        return Err(SearchError::NaiveTooLarge(m));
    }
    let start = Instant::now();
    if q.punctures > faces {
        return Ok(finish(q, Vec::new(), 0, start, true));
    }
    let mut nodes = 0u64;
    let mut raw = Vec::new();
    for images in (1..=m).permutations(m) {
        nodes += 1;
        let sigma = Permutation::from_images(&images).expect("permutation");
        let inst = FillingInstance::new(sigma, q.genus, q.punctures).expect("degree 4n");
        if validate(&inst).is_valid() {
            raw.push(inst.sigma);
            if q.limit.is_some_and(|l| raw.len() >= l) {
                break;
            }
        }
    }
    Ok(finish(q, raw, nodes, start, false))
}

fn finish(
    q: &SearchQuery,
    mut raw: Vec<Permutation>,
    nodes: u64,
    start: Instant,
    vacuous: bool,
) -> SearchResult {
    raw.sort();
    if let Some(l) = q.limit {
        raw.truncate(l);
    }
    let raw_count = raw.len();
    let canon: Vec<Permutation> = raw.iter().map(canonical_form).sorted().dedup().collect();
    let dedup_count = canon.len();
    SearchResult {
        solutions: if q.dedup { canon } else { raw },
        raw_count,
        dedup_count,
        nodes_explored: nodes,
        wall_time: start.elapsed(),
        vacuous,
    }
}

const UNSET: u16 = u16::MAX;

#[derive(Clone)]
struct State {
    image: Vec<u16>,
    preimage: Vec<u16>,
    closed_cycles: usize,
    closed_symbols: usize,
    bigons: usize,
}

impl State {
    fn new(m: usize) -> Self {
        State {
            image: vec![UNSET; m],
            preimage: vec![UNSET; m],
            closed_cycles: 0,
            closed_symbols: 0,
            bigons: 0,
        }
    }

    /// Records `a -> b`; false on a bijectivity conflict.
    fn set(&mut self, a: usize, b: usize) -> bool {
        match (self.image[a], self.preimage[b]) {
            (x, _) if x != UNSET => x as usize == b,
            (_, y) if y != UNSET => false,
            _ => {
                self.image[a] = b as u16;
                self.preimage[b] = a as u16;
                // did this close a cycle through a?
                let mut len = 1;
                let mut x = b;
                while x != a {
                    let next = self.image[x];
                    if next == UNSET {
                        return true;
                    }
                    x = next as usize;
                    len += 1;
                }
                self.closed_cycles += 1;
                self.closed_symbols += len;
                if len == 2 {
                    self.bigons += 1;
                }
                true
            }
        }
    }
}

struct Context {
    m: usize,
    q: Vec<usize>,
    tau: Vec<usize>,
    faces: usize,
    punctures: usize,
    break_symmetry: bool,
    limit: Option<usize>,
    max_nodes: u64,
    max_time: Duration,
    start: Instant,
    nodes: AtomicU64,
    // 0 running, 1 node limit hit, 2 time limit hit
    abort: AtomicU8,
}

impl Context {
    fn new(query: &SearchQuery, faces: usize, start: Instant) -> Self {
        let n = query.n;
        let zero = |p: Permutation| {
            p.zero_based()
                .iter()
                .map(|&x| x as usize)
                .collect::<Vec<_>>()
        };
        Context {
            m: 4 * n,
            q: zero(make_q(n).expect("n >= 1")),
            tau: zero(make_tau(n).expect("n >= 1")),
            faces,
            punctures: query.punctures,
            break_symmetry: query.break_symmetry,
            limit: query.limit,
            max_nodes: query.max_nodes,
            max_time: query.max_time,
            start,
            nodes: AtomicU64::new(0),
            abort: AtomicU8::new(0),
        }
    }

    /// Candidate images of symbol 1 (0-based 0).
    fn first_values(&self) -> Vec<usize> {
        if self.break_symmetry {
            // conjugating by π_b moves σ(1) to b_1 or b_1'
            let n = self.m / 4;
            vec![1, 2 * n + 1]
        } else {
            (0..self.m).filter(|k| k % 2 == 1).collect()
        }
    }

    /// Assigns `a -> b` and everything it forces.
    fn propagate(&self, state: &mut State, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (a, b);
        for _ in 0..4 {
            if (a ^ b) & 1 == 0 || !state.set(a, b) {
                return false;
            }
            (a, b) = (self.q[b], self.tau[a]);
        }
        true
    }

    fn prune(&self, state: &State) -> bool {
        if state.closed_cycles > self.faces || state.bigons > self.punctures {
            return true;
        }
        // every open cycle still needs at least two symbols
        state.closed_cycles + (self.m - state.closed_symbols) / 2 < self.faces
    }

    fn tick(&self) -> Result<(), SearchError> {
        match self.abort.load(Ordering::Relaxed) {
            0 => {}
            1 => return Err(SearchError::NodeLimit(self.max_nodes)),
            _ => return Err(SearchError::TimeLimit(self.max_time)),
        }
        let nodes = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if nodes > self.max_nodes {
            self.abort.store(1, Ordering::Relaxed);
            return Err(SearchError::NodeLimit(self.max_nodes));
        }
        if nodes.is_multiple_of(1024) && self.start.elapsed() > self.max_time {
            self.abort.store(2, Ordering::Relaxed);
            return Err(SearchError::TimeLimit(self.max_time));
        }
        Ok(())
    }

    fn guess_values(
        &self,
        state: &State,
        var: usize,
        values: &[usize],
        out: &mut Vec<Permutation>,
    ) -> Result<bool, SearchError> {
        for &k in values {
            self.tick()?;
            let mut next = state.clone();
            if !self.propagate(&mut next, var, k) || self.prune(&next) {
                continue;
            }
            if self.descend(&next, out)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Returns true once the solution limit is reached.
    fn descend(&self, state: &State, out: &mut Vec<Permutation>) -> Result<bool, SearchError> {
        let Some(var) = state.image.iter().position(|&x| x == UNSET) else {
            return Ok(self.accept(state, out));
        };
        let values: Vec<usize> = (0..self.m)
            .filter(|&k| (k ^ var) & 1 == 1 && state.preimage[k] == UNSET)
            .collect();
        self.guess_values(state, var, &values, out)
    }

    fn accept(&self, state: &State, out: &mut Vec<Permutation>) -> bool {
        if state.closed_cycles != self.faces || state.bigons > self.punctures {
            return false;
        }
        let sigma = Permutation::from_zero_based(state.image.iter().map(|&x| x as u32).collect());
        let genus = (self.m / 4 + 2 - self.faces) / 2;
        let inst = FillingInstance::new(sigma, genus, self.punctures).expect("degree 4n");
        let report = validate(&inst);
        assert!(
            report.is_valid(),
            "search produced an invalid solution:\n{report}"
        );
        out.push(inst.sigma);
        self.limit.is_some_and(|l| out.len() >= l)
    }
}
