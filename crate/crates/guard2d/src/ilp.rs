//! Grid-based integer feasibility: can `k` grid-center discs of radius `r`
//! cover every sample? A built-in exact branch-and-bound decides the
//! set-cover question; binary-search drivers wrap it for perimeter and
//! region guarding.
//!
//! The solver seam is [`FeasibilitySolver`]: anything that maps a
//! [`CoverModel`] to a [`FeasibilityOutcome`] (an external MILP backend,
//! for instance) can replace the built-in [`BranchAndBound`] bit-compatibly.

use crate::deployment::{Deployment, Method};
use crate::error::{Error, Result};
use crate::geom::{min_enclosing_disc, Point2, PolygonSet, EPS};
use crate::gonzalez;
use crate::sampling::{candidate_centers, sample_perimeter, sample_region, GridSpec, SampleSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::SQRT_2;

/// Default branch-and-bound node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;

/// Candidate-center x sample coverage incidence with a cardinality budget.
#[derive(Debug, Clone)]
pub struct CoverModel {
    /// Candidate disc centers, row-major grid order.
    pub candidates: Vec<Point2>,
    /// For each sample, the sorted candidate indices within distance `r`.
    pub coverage: Vec<Vec<usize>>,
    pub k: usize,
    pub r: f64,
}

impl CoverModel {
    /// A sample no candidate can reach makes the whole model infeasible.
    pub fn trivially_infeasible(&self) -> bool {
        self.coverage.iter().any(|c| c.is_empty())
    }
}

/// Builds the incidence structure: `coverage[l]` lists every candidate
/// within `r` (closed, tolerance [`EPS`]) of sample `l`.
pub fn build_cover_model(
    candidates: &[Point2],
    samples: &SampleSet,
    k: usize,
    r: f64,
) -> Result<CoverModel> {
    if candidates.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if k == 0 {
        return Err(Error::ZeroSensors);
    }
    if r < 0.0 {
        return Err(Error::NegativeRadius(r));
    }
    let r_sq = (r + EPS) * (r + EPS);
    let coverage = samples
        .points
        .iter()
        .map(|o| {
            candidates
                .iter()
                .enumerate()
                .filter(|(_, g)| g.dist_sq(o) <= r_sq)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Ok(CoverModel {
        candidates: candidates.to_vec(),
        coverage,
        k,
        r,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibilityStatus {
    Feasible,
    Infeasible,
    /// The node budget ran out before the search finished.
    Unknown,
}

#[derive(Debug, Clone)]
pub struct FeasibilityOutcome {
    pub status: FeasibilityStatus,
    /// At most `k` candidate indices covering every sample, when feasible.
    pub selected: Option<Vec<usize>>,
}

/// The solver seam: decide a [`CoverModel`], nothing else. External solvers
/// plug in here.
pub trait FeasibilitySolver {
    fn check(&self, model: &CoverModel) -> FeasibilityOutcome;
}

/// Built-in exact solver: dominance preprocessing, a greedy upper bound,
/// then branch-and-bound on the tightest sample with candidate-exclusion
/// branching.
#[derive(Debug, Clone)]
pub struct BranchAndBound {
    pub node_budget: u64,
}

impl Default for BranchAndBound {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

impl FeasibilitySolver for BranchAndBound {
    fn check(&self, model: &CoverModel) -> FeasibilityOutcome {
        solve_with(model, self.node_budget, true)
    }
}

/// Exact decision (within `node_budget` nodes): is there a subset of at most
/// `k` candidates covering every sample?
pub fn solve_feasibility(model: &CoverModel, node_budget: u64) -> FeasibilityOutcome {
    BranchAndBound { node_budget }.check(model)
}

// --- bitset helpers ---------------------------------------------------------

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

fn set_bit(w: &mut [u64], i: usize) {
    w[i / 64] |= 1 << (i % 64);
}

fn get_bit(w: &[u64], i: usize) -> bool {
    w[i / 64] >> (i % 64) & 1 == 1
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn popcount(w: &[u64]) -> u32 {
    w.iter().map(|x| x.count_ones()).sum()
}

fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

// --- reduced model ----------------------------------------------------------

struct Reduced {
    /// Reduced candidate index -> original candidate index.
    cand_map: Vec<usize>,
    /// Per reduced candidate, bitset over reduced samples it covers.
    cover: Vec<Vec<u64>>,
    n_samples: usize,
}

fn reduce(model: &CoverModel, preprocess: bool) -> Reduced {
    let n_cand = model.candidates.len();
    let n_samp = model.coverage.len();
    let mut alive_s = vec![true; n_samp];
    let mut alive_c = vec![true; n_cand];

    if preprocess {
        // Alternate the two dominance passes until they stabilize (bounded;
        // dominance only speeds the search up, a fixpoint is not required).
        for _ in 0..4 {
            let before: usize = alive_s.iter().chain(alive_c.iter()).filter(|&&a| a).count();
            drop_dominated_samples(model, &mut alive_s, &alive_c);
            drop_dominated_candidates(model, &alive_s, &mut alive_c);
            let after: usize = alive_s.iter().chain(alive_c.iter()).filter(|&&a| a).count();
            if before == after {
                break;
            }
        }
    }

    let samp_map: Vec<usize> = (0..n_samp).filter(|&s| alive_s[s]).collect();
    let cand_map: Vec<usize> = (0..n_cand).filter(|&c| alive_c[c]).collect();
    let cand_rev: Vec<Option<usize>> = {
        let mut rev = vec![None; n_cand];
        for (new, &old) in cand_map.iter().enumerate() {
            rev[old] = Some(new);
        }
        rev
    };

    let n_samples = samp_map.len();
    let w = words_for(n_samples);
    let mut cover = vec![vec![0u64; w]; cand_map.len()];
    for (new_s, &old_s) in samp_map.iter().enumerate() {
        for &old_c in &model.coverage[old_s] {
            if let Some(new_c) = cand_rev[old_c] {
                set_bit(&mut cover[new_c], new_s);
            }
        }
    }
    Reduced {
        cand_map,
        cover,
        n_samples,
    }
}

/// Deletes samples whose candidate list is a superset of another's: covering
/// the tighter sample covers them for free. Equal lists keep the lower index.
fn drop_dominated_samples(model: &CoverModel, alive_s: &mut [bool], alive_c: &[bool]) {
    let n_samp = model.coverage.len();
    let w = words_for(model.candidates.len());
    let bitsets: Vec<Vec<u64>> = (0..n_samp)
        .map(|s| {
            let mut b = vec![0u64; w];
            if alive_s[s] {
                for &c in &model.coverage[s] {
                    if alive_c[c] {
                        set_bit(&mut b, c);
                    }
                }
            }
            b
        })
        .collect();
    let pops: Vec<u32> = bitsets.iter().map(|b| popcount(b)).collect();
    for i in 0..n_samp {
        if !alive_s[i] {
            continue;
        }
        for j in (i + 1)..n_samp {
            if !alive_s[j] {
                continue;
            }
            if pops[i] <= pops[j] && is_subset(&bitsets[i], &bitsets[j]) {
                alive_s[j] = false;
            } else if pops[j] < pops[i] && is_subset(&bitsets[j], &bitsets[i]) {
                alive_s[i] = false;
                break;
            }
        }
    }
}

/// Deletes candidates whose covered set is a subset of another's. Equal sets
/// keep the lower index.
fn drop_dominated_candidates(model: &CoverModel, alive_s: &[bool], alive_c: &mut [bool]) {
    let n_cand = model.candidates.len();
    let n_samp = model.coverage.len();
    let live_samples: Vec<usize> = (0..n_samp).filter(|&s| alive_s[s]).collect();
    let w = words_for(live_samples.len());
    let mut bitsets = vec![vec![0u64; w]; n_cand];
    for (new_s, &s) in live_samples.iter().enumerate() {
        for &c in &model.coverage[s] {
            if alive_c[c] {
                set_bit(&mut bitsets[c], new_s);
            }
        }
    }
    let pops: Vec<u32> = bitsets.iter().map(|b| popcount(b)).collect();
    for i in 0..n_cand {
        if !alive_c[i] {
            continue;
        }
        for j in (i + 1)..n_cand {
            if !alive_c[j] {
                continue;
            }
            if pops[j] <= pops[i] && is_subset(&bitsets[j], &bitsets[i]) {
                alive_c[j] = false;
            } else if pops[i] < pops[j] && is_subset(&bitsets[i], &bitsets[j]) {
                alive_c[i] = false;
                break;
            }
        }
    }
}

// --- search -----------------------------------------------------------------

/// One connected block of the incidence structure: no candidate reaches
/// samples outside it, so blocks can be covered independently.
struct Block {
    /// Block candidate index -> original candidate index.
    cand_map: Vec<usize>,
    /// Per block candidate, bitset over block samples.
    cover: Vec<Vec<u64>>,
    /// Per block sample, sorted block candidate indices.
    sample_cands: Vec<Vec<usize>>,
    n_samples: usize,
}

fn full_mask(n: usize) -> Vec<u64> {
    let w = words_for(n);
    let mut m = vec![u64::MAX; w];
    if !n.is_multiple_of(64) && w > 0 {
        m[w - 1] = (1u64 << (n % 64)) - 1;
    }
    m
}

fn find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Splits the reduced model into connected blocks via union-find over
/// samples linked by shared candidates.
fn split_blocks(red: &Reduced) -> Vec<Block> {
    let mut parent: Vec<usize> = (0..red.n_samples).collect();
    for cov in &red.cover {
        let mut first: Option<usize> = None;
        for (wi, w) in cov.iter().enumerate() {
            let mut bits = *w;
            while bits != 0 {
                let s = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                match first {
                    None => first = Some(s),
                    Some(f) => {
                        let (a, b) = (find_root(&mut parent, f), find_root(&mut parent, s));
                        if a != b {
                            parent[a] = b;
                        }
                    }
                }
            }
        }
    }
    let mut sample_of_root: std::collections::HashMap<usize, usize> = Default::default();
    let mut block_samples: Vec<Vec<usize>> = Vec::new();
    let mut local_index = vec![0usize; red.n_samples];
    #[allow(clippy::needless_range_loop)]
    for s in 0..red.n_samples {
        let root = find_root(&mut parent, s);
        let b = *sample_of_root.entry(root).or_insert_with(|| {
            block_samples.push(Vec::new());
            block_samples.len() - 1
        });
        local_index[s] = block_samples[b].len();
        block_samples[b].push(s);
    }

    let mut blocks: Vec<Block> = block_samples
        .iter()
        .map(|samples| Block {
            cand_map: Vec::new(),
            cover: Vec::new(),
            sample_cands: vec![Vec::new(); samples.len()],
            n_samples: samples.len(),
        })
        .collect();
    for (c, cov) in red.cover.iter().enumerate() {
        // All samples of a candidate share one block by construction.
        let mut iter_first: Option<usize> = None;
        for (wi, w) in cov.iter().enumerate() {
            if *w != 0 {
                iter_first = Some(wi * 64 + w.trailing_zeros() as usize);
                break;
            }
        }
        let Some(first) = iter_first else { continue };
        let root = find_root(&mut parent, first);
        let b = sample_of_root[&root];
        let block = &mut blocks[b];
        let local_c = block.cover.len();
        let mut local_cov = vec![0u64; words_for(block.n_samples)];
        for (wi, w) in cov.iter().enumerate() {
            let mut bits = *w;
            while bits != 0 {
                let s = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let ls = local_index[s];
                set_bit(&mut local_cov, ls);
                block.sample_cands[ls].push(local_c);
            }
        }
        block.cover.push(local_cov);
        block.cand_map.push(red.cand_map[c]);
    }
    blocks
}

/// Branch-and-bound minimization of the cover size of one block.
struct MinCover<'a> {
    block: &'a Block,
    banned: Vec<bool>,
    selected: Vec<usize>,
    uncovered: Vec<u64>,
    uncovered_count: u32,
    /// Best cover size found so far; the search only explores strictly
    /// better completions.
    best: usize,
    best_selection: Vec<usize>,
    nodes: &'a mut u64,
    truncated: bool,
}

impl MinCover<'_> {
    /// Explores completions using strictly fewer than `self.best` discs.
    fn run(&mut self) {
        if *self.nodes == 0 {
            self.truncated = true;
            return;
        }
        *self.nodes -= 1;

        if self.uncovered_count == 0 {
            self.best = self.selected.len();
            self.best_selection = self.selected.clone();
            return;
        }
        if self.selected.len() + 1 >= self.best {
            return;
        }
        let headroom = self.best - self.selected.len() - 1;

        // Greedy completion tightens the incumbent without committing the
        // subtree; bans do not limit it since any cover is a valid incumbent.
        if let Some(extra) = self.greedy_completion(headroom) {
            self.best = self.selected.len() + extra.len();
            self.best_selection = self.selected.clone();
            self.best_selection.extend(extra);
            if self.selected.len() + 1 >= self.best {
                return;
            }
        }

        let headroom = self.best - self.selected.len() - 1;
        let max_gain = (0..self.block.cover.len())
            .filter(|&c| !self.banned[c])
            .map(|c| popcount_and(&self.block.cover[c], &self.uncovered))
            .max()
            .unwrap_or(0);
        if (headroom as u64) * (max_gain as u64) < self.uncovered_count as u64 {
            return;
        }
        if self.selected.len() + self.packing_bound(headroom) >= self.best {
            return;
        }

        // Branch on the uncovered sample with the fewest open candidates.
        let mut pick = usize::MAX;
        let mut pick_count = usize::MAX;
        for s in 0..self.block.n_samples {
            if !get_bit(&self.uncovered, s) {
                continue;
            }
            let count = self.block.sample_cands[s]
                .iter()
                .filter(|&&c| !self.banned[c])
                .count();
            if count < pick_count {
                pick_count = count;
                pick = s;
                if count <= 1 {
                    break;
                }
            }
        }
        if pick_count == 0 {
            return;
        }

        // Try high-gain candidates first so good incumbents arrive early.
        let mut options: Vec<(u32, usize)> = self.block.sample_cands[pick]
            .iter()
            .copied()
            .filter(|&c| !self.banned[c])
            .map(|c| (popcount_and(&self.block.cover[c], &self.uncovered), c))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut newly_banned = Vec::new();
        for (_, c) in options {
            let removed: Vec<u64> = self.block.cover[c]
                .iter()
                .zip(&self.uncovered)
                .map(|(cov, unc)| cov & unc)
                .collect();
            let gain = popcount(&removed);
            self.selected.push(c);
            for (unc, rem) in self.uncovered.iter_mut().zip(&removed) {
                *unc &= !rem;
            }
            self.uncovered_count -= gain;

            self.run();

            self.selected.pop();
            for (unc, rem) in self.uncovered.iter_mut().zip(&removed) {
                *unc |= rem;
            }
            self.uncovered_count += gain;

            if self.truncated || self.selected.len() + 1 >= self.best {
                break;
            }
            // Completions using `c` are exhausted; later branches avoid it.
            self.banned[c] = true;
            newly_banned.push(c);
        }
        for c in newly_banned {
            self.banned[c] = false;
        }
    }

    /// Greedy max-gain picks from the current state; Some(picks) when the
    /// block gets covered within `budget` extra picks.
    fn greedy_completion(&self, budget: usize) -> Option<Vec<usize>> {
        let mut uncovered = self.uncovered.clone();
        let mut left = self.uncovered_count;
        let mut picks = Vec::new();
        while left > 0 {
            if picks.len() == budget {
                return None;
            }
            let mut best = usize::MAX;
            let mut best_gain = 0u32;
            for (c, cov) in self.block.cover.iter().enumerate() {
                let gain = popcount_and(cov, &uncovered);
                if gain > best_gain {
                    best_gain = gain;
                    best = c;
                }
            }
            if best == usize::MAX {
                return None;
            }
            for (unc, cov) in uncovered.iter_mut().zip(&self.block.cover[best]) {
                *unc &= !cov;
            }
            left -= best_gain;
            picks.push(best);
        }
        Some(picks)
    }

    /// Packing seeded with a forced first sample, then tightest-first.
    fn packing_from(&self, seed_sample: usize, stop_above: usize) -> usize {
        let mut avail = self.uncovered.clone();
        let mut bound = 1usize;
        let mut pick = seed_sample;
        loop {
            avail[pick / 64] &= !(1u64 << (pick % 64));
            for &c in &self.block.sample_cands[pick] {
                if !self.banned[c] {
                    for (a, cov) in avail.iter_mut().zip(&self.block.cover[c]) {
                        *a &= !cov;
                    }
                }
            }
            let mut next = usize::MAX;
            let mut next_count = usize::MAX;
            for s in 0..self.block.n_samples {
                if !get_bit(&avail, s) {
                    continue;
                }
                let count = self.block.sample_cands[s]
                    .iter()
                    .filter(|&&c| !self.banned[c])
                    .count();
                if count < next_count {
                    next_count = count;
                    next = s;
                    if count <= 1 {
                        break;
                    }
                }
            }
            if next == usize::MAX {
                return bound;
            }
            bound += 1;
            if bound > stop_above {
                return bound;
            }
            pick = next;
        }
    }

    /// Lower bound on the extra discs this subtree needs: greedily pack
    /// uncovered samples that share no open candidate, tightest first.
    fn packing_bound(&self, stop_above: usize) -> usize {
        let mut avail = self.uncovered.clone();
        let mut bound = 0usize;
        loop {
            let mut pick = usize::MAX;
            let mut pick_count = usize::MAX;
            for s in 0..self.block.n_samples {
                if !get_bit(&avail, s) {
                    continue;
                }
                let count = self.block.sample_cands[s]
                    .iter()
                    .filter(|&&c| !self.banned[c])
                    .count();
                if count < pick_count {
                    pick_count = count;
                    pick = s;
                    if count <= 1 {
                        break;
                    }
                }
            }
            if pick == usize::MAX {
                return bound;
            }
            bound += 1;
            if bound > stop_above {
                return bound;
            }
            avail[pick / 64] &= !(1u64 << (pick % 64));
            for &c in &self.block.sample_cands[pick] {
                if !self.banned[c] {
                    for (a, cov) in avail.iter_mut().zip(&self.block.cover[c]) {
                        *a &= !cov;
                    }
                }
            }
        }
    }
}

/// Minimum cover of one block, aborting once provably above `cap`.
/// Returns (size, selection in original indices, truncated).
fn min_block_cover(block: &Block, cap: usize, nodes: &mut u64) -> (usize, Vec<usize>, bool) {
    let mut search = MinCover {
        block,
        banned: vec![false; block.cover.len()],
        selected: Vec::new(),
        uncovered: full_mask(block.n_samples),
        uncovered_count: block.n_samples as u32,
        // Covers above the cap are useless, so never explore for them.
        best: cap + 1,
        best_selection: Vec::new(),
        nodes,
        truncated: false,
    };
    // Packings from several seeds are cheap; any one above the cap settles
    // the block without a search.
    let starts = block.n_samples.min(32);
    for s0 in 0..starts {
        if search.packing_from(s0, cap) > cap {
            return (cap + 1, Vec::new(), false);
        }
    }
    search.run();
    let selection = search
        .best_selection
        .iter()
        .map(|&c| block.cand_map[c])
        .collect();
    (search.best, selection, search.truncated)
}

fn solve_with(model: &CoverModel, node_budget: u64, preprocess: bool) -> FeasibilityOutcome {
    if model.coverage.is_empty() {
        return FeasibilityOutcome {
            status: FeasibilityStatus::Feasible,
            selected: Some(Vec::new()),
        };
    }
    if model.trivially_infeasible() {
        return FeasibilityOutcome {
            status: FeasibilityStatus::Infeasible,
            selected: None,
        };
    }
    let red = reduce(model, preprocess);
    let blocks = split_blocks(&red);

    // Blocks are independent, so feasibility is exactly
    // sum of per-block minimum covers <= k.
    let mut nodes = node_budget;
    let mut total = 0usize;
    let mut selection: Vec<usize> = Vec::new();
    let mut truncated = false;
    for (i, block) in blocks.iter().enumerate() {
        // Every block still ahead needs at least one disc.
        let others = blocks.len() - i - 1;
        if total + others >= model.k {
            return FeasibilityOutcome {
                status: if truncated {
                    FeasibilityStatus::Unknown
                } else {
                    FeasibilityStatus::Infeasible
                },
                selected: None,
            };
        }
        let cap = model.k - total - others;
        let (size, sel, trunc) = min_block_cover(block, cap, &mut nodes);
        truncated |= trunc;
        if size > cap {
            return if truncated {
                FeasibilityOutcome {
                    status: FeasibilityStatus::Unknown,
                    selected: None,
                }
            } else {
                FeasibilityOutcome {
                    status: FeasibilityStatus::Infeasible,
                    selected: None,
                }
            };
        }
        total += size;
        selection.extend(sel);
    }
    FeasibilityOutcome {
        status: FeasibilityStatus::Feasible,
        selected: Some(selection),
    }
}

// --- binary-search drivers ----------------------------------------------------

/// Knobs shared by the ILP drivers.
#[derive(Debug, Clone)]
pub struct IlpOptions {
    /// Candidate-grid cell side; defaults to the sampling epsilon.
    pub grid_side: Option<f64>,
    pub node_budget: u64,
    /// Snap binary-search probes to the distinct candidate-sample distances.
    pub snap_radii: bool,
    /// Seed the region search with the farthest-first radius (upper bound)
    /// and its half (lower bound).
    pub warm_start: bool,
    pub seed: u64,
}

impl Default for IlpOptions {
    fn default() -> Self {
        Self {
            grid_side: None,
            node_budget: DEFAULT_NODE_BUDGET,
            snap_radii: false,
            warm_start: true,
            seed: 0,
        }
    }
}

fn check_feasible(
    candidates: &[Point2],
    samples: &SampleSet,
    k: usize,
    r: f64,
    node_budget: u64,
) -> Result<Option<Vec<usize>>> {
    let model = build_cover_model(candidates, samples, k, r)?;
    let outcome = solve_feasibility(&model, node_budget);
    match outcome.status {
        FeasibilityStatus::Feasible => Ok(Some(outcome.selected.unwrap_or_default())),
        FeasibilityStatus::Infeasible => Ok(None),
        FeasibilityStatus::Unknown => Err(Error::BudgetExhausted),
    }
}

/// Initial radius bracket for the binary search, plus escalation radii to
/// try when the upper end probes infeasible.
struct Bracket {
    lo: f64,
    hi: f64,
    fallbacks: Vec<f64>,
}

/// Binary search over the cover model. The bracket's upper end is probed
/// first and escalated along its fallbacks until feasible; the search then
/// narrows the bracket to `epsilon` and returns the last feasible witness.
fn binary_search_cover(
    candidates: &[Point2],
    samples: &SampleSet,
    k: usize,
    bracket: Bracket,
    epsilon: f64,
    opts: &IlpOptions,
) -> Result<Deployment> {
    let mut r_lo = bracket.lo;
    let mut r_hi = bracket.hi;
    let mut best = check_feasible(candidates, samples, k, r_hi, opts.node_budget)?;
    if best.is_none() {
        for &fb in &bracket.fallbacks {
            if fb <= r_hi {
                continue;
            }
            r_hi = fb;
            best = check_feasible(candidates, samples, k, r_hi, opts.node_budget)?;
            if best.is_some() {
                break;
            }
        }
    }
    let mut selected = match best {
        Some(sel) => sel,
        None => return Err(Error::BudgetExhausted),
    };

    r_lo = r_lo.min(r_hi);
    // Feasible already at the lower bound: report it directly.
    if r_lo < r_hi {
        if let Some(sel) = check_feasible(candidates, samples, k, r_lo, opts.node_budget)? {
            return Ok(Deployment::new(
                sel.iter().map(|&c| candidates[c]).collect(),
                r_lo,
                Method::Ilp,
            ));
        }
    }

    let snap_distances = if opts.snap_radii {
        let mut d: Vec<f64> = Vec::with_capacity(candidates.len() * samples.len());
        for g in candidates {
            for o in &samples.points {
                d.push(g.dist(o));
            }
        }
        d.sort_by(|a, b| a.partial_cmp(b).unwrap());
        d.dedup_by(|a, b| (*a - *b).abs() <= EPS);
        Some(d)
    } else {
        None
    };

    let max_iter = (((r_hi - r_lo) / epsilon).log2().ceil() as i64 + 2).clamp(1, 200);
    let mut iter = 0;
    while r_hi - r_lo > epsilon && iter < max_iter {
        let mut mid = 0.5 * (r_lo + r_hi);
        if let Some(d) = &snap_distances {
            // Feasibility only changes at incidence distances; probe the
            // smallest one at or above the midpoint when it stays inside
            // the open bracket.
            let idx = d.partition_point(|&x| x < mid);
            if idx < d.len() && d[idx] > r_lo && d[idx] < r_hi {
                mid = d[idx];
            }
        }
        match check_feasible(candidates, samples, k, mid, opts.node_budget)? {
            Some(sel) => {
                r_hi = mid;
                selected = sel;
            }
            None => r_lo = mid,
        }
        iter += 1;
    }

    Ok(Deployment::new(
        selected.iter().map(|&c| candidates[c]).collect(),
        r_hi,
        Method::Ilp,
    ))
}

fn guaranteed_radius(samples: &SampleSet, grid_side: f64, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let med = min_enclosing_disc(&samples.points, &mut rng)?;
    Ok(med.radius + SQRT_2 / 2.0 * grid_side + EPS)
}

/// Perimeter guarding via the cover model: samples at `epsilon`, candidate
/// grid over the bounding box, binary search on `[0, len(boundary)/(2k)]`.
/// The achieved radius exceeds the sample optimum by at most the grid offset
/// `sqrt(2) * grid_side / 2` plus the search gap `epsilon`.
pub fn solve_ilp_perimeter(
    poly: &PolygonSet,
    k: usize,
    epsilon: f64,
    opts: &IlpOptions,
) -> Result<Deployment> {
    if k == 0 {
        return Err(Error::ZeroSensors);
    }
    let samples = sample_perimeter(poly, epsilon)?;
    solve_ilp_perimeter_on_samples(poly, &samples, k, epsilon, opts)
}

/// Driver over precomputed perimeter samples (the bench harness times this
/// without the sampling cost).
pub fn solve_ilp_perimeter_on_samples(
    poly: &PolygonSet,
    samples: &SampleSet,
    k: usize,
    epsilon: f64,
    opts: &IlpOptions,
) -> Result<Deployment> {
    let side = opts.grid_side.unwrap_or(epsilon);
    let (lo, hi) = poly.bbox();
    let grid = GridSpec::covering(lo, hi, side)?;
    let candidates = candidate_centers(&grid);
    let r_hi = poly.perimeter_length() / (2.0 * k as f64);
    let bracket = Bracket {
        lo: 0.0,
        hi: r_hi,
        fallbacks: vec![
            r_hi + SQRT_2 / 2.0 * side + EPS,
            guaranteed_radius(samples, side, opts.seed)?,
        ],
    };
    binary_search_cover(&candidates, samples, k, bracket, epsilon, opts)
}

/// Region guarding via the cover model: grid samples at `epsilon`, the same
/// grid (or `grid_side`) as candidates, binary search between the area lower
/// bound `sqrt(area/(k*pi))` and the boundary length, tightened by the
/// farthest-first warm start when enabled.
pub fn solve_ilp_region(
    poly: &PolygonSet,
    k: usize,
    epsilon: f64,
    opts: &IlpOptions,
) -> Result<Deployment> {
    if k == 0 {
        return Err(Error::ZeroSensors);
    }
    let (samples, grid) = sample_region(poly, epsilon)?;
    solve_ilp_region_on_samples(poly, &samples, &grid, k, epsilon, opts)
}

/// Driver over precomputed region samples and their grid.
pub fn solve_ilp_region_on_samples(
    poly: &PolygonSet,
    samples: &SampleSet,
    grid: &GridSpec,
    k: usize,
    epsilon: f64,
    opts: &IlpOptions,
) -> Result<Deployment> {
    let side = opts.grid_side.unwrap_or(epsilon);
    let candidates = if (side - grid.cell_side).abs() <= EPS {
        candidate_centers(grid)
    } else {
        let (lo, hi) = poly.bbox();
        candidate_centers(&GridSpec::covering(lo, hi, side)?)
    };
    let boundary = poly.perimeter_length();
    let area_lb = (poly.area() / (k as f64 * std::f64::consts::PI)).sqrt();
    let (mut r_lo, mut r_hi) = (area_lb.max(0.0), boundary);
    if opts.warm_start {
        let warm = gonzalez::farthest_first(samples, k, 0)?;
        r_lo = r_lo.max(warm.radius / 2.0);
        r_hi = r_hi.min(warm.radius);
    }
    let bracket = Bracket {
        lo: r_lo,
        hi: r_hi,
        fallbacks: vec![
            r_hi + SQRT_2 / 2.0 * side + EPS,
            guaranteed_radius(samples, side, opts.seed)?,
            boundary,
        ],
    };
    binary_search_cover(&candidates, samples, k, bracket, epsilon, opts)
}

// --- verification -------------------------------------------------------------

/// Independent check that a deployment covers a sample set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyReport {
    pub ok: bool,
    /// Largest distance from any sample to its nearest center.
    pub worst_gap: f64,
    pub worst_sample: usize,
}

/// Max-over-samples of min-distance-to-centers, compared against the
/// deployment radius (closed discs, tolerance [`EPS`]).
pub fn verify_cover(deployment: &Deployment, samples: &SampleSet) -> Result<VerifyReport> {
    if deployment.centers.is_empty() {
        return Err(Error::EmptyDeployment);
    }
    let mut worst_gap = 0.0f64;
    let mut worst_sample = 0usize;
    for (i, o) in samples.points.iter().enumerate() {
        let d = deployment
            .centers
            .iter()
            .map(|c| c.dist_sq(o))
            .fold(f64::INFINITY, f64::min)
            .sqrt();
        if d > worst_gap {
            worst_gap = d;
            worst_sample = i;
        }
    }
    Ok(VerifyReport {
        ok: worst_gap <= deployment.radius + EPS,
        worst_gap,
        worst_sample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn corners() -> SampleSet {
        SampleSet::from_points(
            vec![
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(1.0, 1.0),
                Point2::new(0.0, 1.0),
            ],
            0.5,
        )
    }

    fn model_from_lists(lists: &[&[usize]], n_cand: usize, k: usize) -> CoverModel {
        CoverModel {
            candidates: (0..n_cand).map(|i| Point2::new(i as f64, 0.0)).collect(),
            coverage: lists.iter().map(|l| l.to_vec()).collect(),
            k,
            r: 1.0,
        }
    }

    #[test]
    fn center_candidate_covers_corners() {
        let cands = [Point2::new(0.5, 0.5)];
        let m = build_cover_model(&cands, &corners(), 1, 0.71).unwrap();
        assert!(m.coverage.iter().all(|c| c == &vec![0]));
        let out = solve_feasibility(&m, 1000);
        assert_eq!(out.status, FeasibilityStatus::Feasible);
        assert_eq!(out.selected, Some(vec![0]));
    }

    #[test]
    fn radius_too_small_is_trivially_infeasible() {
        let cands = [Point2::new(0.5, 0.5)];
        let m = build_cover_model(&cands, &corners(), 1, 0.70).unwrap();
        assert!(m.trivially_infeasible());
        assert_eq!(
            solve_feasibility(&m, 1000).status,
            FeasibilityStatus::Infeasible
        );
    }

    #[test]
    fn zero_radius_identity_coverage() {
        let pts = corners().points.clone();
        let m = build_cover_model(&pts, &corners(), 4, 0.0).unwrap();
        for (l, cov) in m.coverage.iter().enumerate() {
            assert_eq!(cov, &vec![l]);
        }
        assert_eq!(
            solve_feasibility(&m, 1000).status,
            FeasibilityStatus::Feasible
        );
    }

    #[test]
    fn fixed_small_model_matches_hand_enumeration() {
        // Candidates cover sample sets {0,1}, {1,2}, {2,3}, {3,4,5}.
        let coverage: Vec<Vec<usize>> = vec![
            vec![0],
            vec![0, 1],
            vec![1, 2],
            vec![2, 3],
            vec![3],
            vec![3],
        ];
        let m = CoverModel {
            candidates: (0..4).map(|i| Point2::new(i as f64, 0.0)).collect(),
            coverage: coverage.clone(),
            k: 2,
            r: 1.0,
        };
        assert_eq!(
            solve_feasibility(&m, 10_000).status,
            FeasibilityStatus::Infeasible
        );
        let m3 = CoverModel { k: 3, ..m };
        let out = solve_feasibility(&m3, 10_000);
        assert_eq!(out.status, FeasibilityStatus::Feasible);
        let sel = out.selected.unwrap();
        assert!(sel.len() <= 3);
        for cov in &coverage {
            assert!(cov.iter().any(|c| sel.contains(c)));
        }
    }

    fn random_model(rng: &mut impl Rng) -> CoverModel {
        let n_cand = rng.gen_range(1..=10);
        let n_samp = rng.gen_range(1..=14);
        let coverage: Vec<Vec<usize>> = (0..n_samp)
            .map(|_| {
                (0..n_cand)
                    .filter(|_| rng.gen_bool(0.35))
                    .collect::<Vec<_>>()
            })
            .collect();
        CoverModel {
            candidates: (0..n_cand).map(|i| Point2::new(i as f64, 0.0)).collect(),
            coverage,
            k: rng.gen_range(1..=4),
            r: 1.0,
        }
    }

    fn exhaustive_feasible(model: &CoverModel) -> bool {
        let n = model.candidates.len();
        let k = model.k;
        fn rec(model: &CoverModel, start: usize, left: usize, chosen: &mut Vec<usize>) -> bool {
            if model
                .coverage
                .iter()
                .all(|cov| cov.iter().any(|c| chosen.contains(c)))
            {
                return true;
            }
            if left == 0 {
                return false;
            }
            for c in start..model.candidates.len() {
                chosen.push(c);
                if rec(model, c + 1, left - 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        rec(model, 0, k.min(n), &mut Vec::new())
    }

    #[test]
    fn preprocessing_never_changes_the_answer() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let m = random_model(&mut rng);
            let with = solve_with(&m, 1_000_000, true);
            let without = solve_with(&m, 1_000_000, false);
            let oracle = exhaustive_feasible(&m);
            let expect = if oracle {
                FeasibilityStatus::Feasible
            } else {
                FeasibilityStatus::Infeasible
            };
            assert_eq!(with.status, expect);
            assert_eq!(without.status, expect);
        }
    }

    #[test]
    fn selected_always_covers() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let m = random_model(&mut rng);
            let out = solve_feasibility(&m, 1_000_000);
            if let Some(sel) = &out.selected {
                assert!(sel.len() <= m.k);
                for cov in &m.coverage {
                    assert!(cov.iter().any(|c| sel.contains(c)));
                }
            }
        }
    }

    #[test]
    fn empty_coverage_list_infeasible_lists() {
        let m = model_from_lists(&[&[0], &[]], 2, 2);
        assert!(m.trivially_infeasible());
    }

    #[test]
    fn verify_cover_reports_worst_gap() {
        let samples = corners();
        let dep = Deployment::new(vec![Point2::new(0.5, 0.5)], 0.71, Method::Ilp);
        let rep = verify_cover(&dep, &samples).unwrap();
        assert!(rep.ok);
        assert!((rep.worst_gap - std::f64::consts::SQRT_2 / 2.0).abs() < 1e-9);

        let tight = Deployment::new(vec![Point2::new(0.5, 0.5)], 0.70, Method::Ilp);
        let rep = verify_cover(&tight, &samples).unwrap();
        assert!(!rep.ok);

        let far = Deployment::new(vec![Point2::new(9.0, 9.0)], 1.0, Method::Ilp);
        assert!(!verify_cover(&far, &samples).unwrap().ok);
    }

    #[test]
    fn square_region_k1() {
        let sq = PolygonSet::simple(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        let d = solve_ilp_region(&sq, 1, 0.05, &IlpOptions::default()).unwrap();
        assert!(
            (d.radius - std::f64::consts::SQRT_2 / 2.0).abs() <= 0.09,
            "radius = {}",
            d.radius
        );
    }

    #[test]
    fn zero_node_budget_reports_unknown() {
        let m = model_from_lists(&[&[0, 1], &[1]], 2, 1);
        assert_eq!(solve_feasibility(&m, 0).status, FeasibilityStatus::Unknown);
        // Trivial verdicts stay decisive regardless of the budget.
        let empty = CoverModel {
            candidates: vec![Point2::new(0.0, 0.0)],
            coverage: Vec::new(),
            k: 1,
            r: 1.0,
        };
        assert_eq!(
            solve_feasibility(&empty, 0).status,
            FeasibilityStatus::Feasible
        );
        let hopeless = model_from_lists(&[&[]], 1, 1);
        assert_eq!(
            solve_feasibility(&hopeless, 0).status,
            FeasibilityStatus::Infeasible
        );
    }

    #[test]
    fn driver_surfaces_budget_exhaustion() {
        let sq = PolygonSet::simple(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        let opts = IlpOptions {
            node_budget: 0,
            ..IlpOptions::default()
        };
        assert!(matches!(
            solve_ilp_perimeter(&sq, 1, 0.05, &opts),
            Err(Error::BudgetExhausted)
        ));
    }
}
