use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use num_integer::Integer;
use rayon::prelude::*;

use super::{GridPoint, SearchSpec};
use crate::blocked::KSetSignature;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) enum Mode {
    Enumerate,
    Find,
}

pub(super) struct RawOutcome {
    pub nodes: u64,
    pub budget_exceeded: bool,
    pub signatures: BTreeSet<KSetSignature>,
    pub witnesses: Vec<(Vec<GridPoint>, Vec<usize>)>,
}

/// A node worth reporting: the first occurrence of a signature within its
/// subtree, or a target hit.
#[derive(Clone, Debug)]
struct Event {
    /// 1-based position of the node in its subtree's visiting order.
    index: u64,
    sizes: Vec<usize>,
    points: Vec<GridPoint>,
    classes: Vec<usize>,
    witness: bool,
}

#[derive(Default)]
struct SubtreeResult {
    nodes: u64,
    aborted: bool,
    events: Vec<Event>,
}

enum Step {
    Node(Event),
    Task(usize),
}

enum Flow {
    Continue,
    Stop,
}

struct Kernel<'a> {
    spec: &'a SearchSpec,
    mode: Mode,
    y_len: i64,
    coords: Vec<GridPoint>,
    required: Vec<usize>,
    target: Option<Vec<usize>>,
    max_points: usize,
}

#[derive(Clone)]
struct State {
    chosen: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    occupied: Vec<bool>,
    req_next: usize,
    created_class: Vec<bool>,
}

impl<'a> Kernel<'a> {
    fn new(spec: &'a SearchSpec, mode: Mode) -> Self {
        let (x_max, y_max) = spec.grid;
        let y_len = y_max + 1;
        let coords: Vec<GridPoint> = (0..=x_max)
            .flat_map(|x| (0..=y_max).map(move |y| (x, y)))
            .collect();
        let mut required: Vec<usize> = spec
            .required_points
            .iter()
            .map(|&(x, y)| (x * y_len + y) as usize)
            .collect();
        required.sort_unstable();
        required.dedup();
        let target = spec.target.as_ref().map(|t| t.sizes().to_vec());
        let max_points = match &target {
            Some(t) => spec.max_points.min(t.iter().sum()),
            None => spec.max_points,
        };
        Kernel {
            spec,
            mode,
            y_len,
            coords,
            required,
            target,
            max_points,
        }
    }

    fn cells(&self) -> usize {
        self.coords.len()
    }

    fn index(&self, (x, y): GridPoint) -> usize {
        (x * self.y_len + y) as usize
    }

    fn empty_state(&self) -> State {
        State {
            chosen: Vec::with_capacity(self.max_points),
            class_of: Vec::with_capacity(self.max_points),
            classes: Vec::new(),
            occupied: vec![false; self.cells()],
            req_next: 0,
            created_class: Vec::with_capacity(self.max_points),
        }
    }

    /// Candidates for the first point.
    fn first_range(&self) -> std::ops::Range<usize> {
        if self.spec.symmetry_reduction && self.required.is_empty() {
            0..(self.y_len as usize).min(self.cells())
        } else {
            0..self.cells()
        }
    }

    /// Adds grid cell `z` (greater than every chosen cell) if the result is
    /// still a valid prefix. Returns whether it was added.
    fn try_push(&self, state: &mut State, z: usize) -> bool {
        let (zx, zy) = self.coords[z];
        let mut directions: Vec<(i64, i64)> = Vec::with_capacity(state.chosen.len());
        let mut blocked: Vec<usize> = Vec::new();
        for (pos, &p) in state.chosen.iter().enumerate() {
            let (px, py) = self.coords[p];
            let (dx, dy) = (px - zx, py - zy);
            let g = dx.abs().gcd(&dy.abs());
            let step = (dx / g, dy / g);
            // Chosen cells precede z, so each line through z meets them on
            // one side only and the reduced direction identifies the line.
            if directions.iter().filter(|&&d| d == step).count() >= 2 {
                return false;
            }
            directions.push(step);
            let hidden =
                (1..g).any(|t| state.occupied[self.index((zx + t * step.0, zy + t * step.1))]);
            if hidden {
                blocked.push(pos);
            }
        }

        let joins = if blocked.is_empty() {
            None
        } else {
            let c = state.class_of[blocked[0]];
            if blocked.len() != state.classes[c].len()
                || blocked.iter().any(|&b| state.class_of[b] != c)
            {
                return false;
            }
            Some(c)
        };

        if let Some(c) = joins {
            if self.spec.require_midpoint_blocked {
                for &pos in &state.classes[c] {
                    let (px, py) = self.coords[state.chosen[pos]];
                    let (sx, sy) = (px + zx, py + zy);
                    if sx % 2 != 0 || sy % 2 != 0 || !state.occupied[self.index((sx / 2, sy / 2))] {
                        return false;
                    }
                }
            }
        }

        if let Some(target) = &self.target {
            let mut sizes: Vec<usize> = state.classes.iter().map(Vec::len).collect();
            match joins {
                Some(c) => sizes[c] += 1,
                None => sizes.push(1),
            }
            if sizes.len() > target.len() {
                return false;
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            if sizes.iter().zip(target).any(|(s, t)| s > t) {
                return false;
            }
        }

        let pos = state.chosen.len();
        state.chosen.push(z);
        state.occupied[z] = true;
        match joins {
            Some(c) => {
                state.class_of.push(c);
                state.classes[c].push(pos);
                state.created_class.push(false);
            }
            None => {
                state.class_of.push(state.classes.len());
                state.classes.push(vec![pos]);
                state.created_class.push(true);
            }
        }
        if self.required.get(state.req_next) == Some(&z) {
            state.req_next += 1;
        }
        true
    }

    fn pop(&self, state: &mut State) {
        let z = state.chosen.pop().expect("non-empty state");
        state.occupied[z] = false;
        let c = state.class_of.pop().unwrap();
        if state.created_class.pop().unwrap() {
            state.classes.pop();
        } else {
            state.classes[c].pop();
        }
        if state.req_next > 0 && self.required[state.req_next - 1] == z {
            state.req_next -= 1;
        }
    }

    /// Whether the next candidate would skip a required cell.
    fn skips_required(&self, state: &State, z: usize) -> bool {
        self.required.get(state.req_next).is_some_and(|&r| z > r)
    }

    fn sizes(state: &State) -> Vec<usize> {
        let mut sizes: Vec<usize> = state.classes.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Reports the current node if it is new or a witness; `None` otherwise.
    fn observe(&self, state: &State, index: u64, seen: &mut HashSet<Vec<usize>>) -> Option<Event> {
        if state.req_next < self.required.len() {
            return None;
        }
        let sizes = Self::sizes(state);
        let witness = self.mode == Mode::Find && self.target.as_ref() == Some(&sizes);
        let fresh = seen.insert(sizes.clone());
        (fresh || witness).then(|| Event {
            index,
            sizes,
            points: state.chosen.iter().map(|&c| self.coords[c]).collect(),
            classes: state.class_of.clone(),
            witness,
        })
    }

    fn run_task(&self, prefix: (usize, usize), task: usize, limit: &AtomicUsize) -> SubtreeResult {
        let mut result = SubtreeResult::default();
        if task >= limit.load(Ordering::Relaxed) {
            return result;
        }
        let mut state = self.empty_state();
        assert!(self.try_push(&mut state, prefix.0) && self.try_push(&mut state, prefix.1));
        let mut seen = HashSet::new();
        let mut ctx = TaskCtx {
            result: &mut result,
            seen: &mut seen,
            task,
            limit,
        };
        if let Flow::Stop = self.dfs(&mut state, prefix.1 + 1, &mut ctx) {
            if ctx.result.events.last().is_some_and(|e| e.witness) {
                limit.fetch_min(task + 1, Ordering::Relaxed);
            }
        }
        result
    }

    fn dfs(&self, state: &mut State, start: usize, ctx: &mut TaskCtx<'_>) -> Flow {
        for z in start..self.cells() {
            if self.skips_required(state, z) {
                break;
            }
            if !self.try_push(state, z) {
                continue;
            }
            if ctx.result.nodes >= self.spec.node_budget {
                ctx.result.aborted = true;
                self.pop(state);
                return Flow::Stop;
            }
            ctx.result.nodes += 1;
            if let Some(event) = self.observe(state, ctx.result.nodes, ctx.seen) {
                let witness = event.witness;
                ctx.result.events.push(event);
                if witness {
                    self.pop(state);
                    return Flow::Stop;
                }
            }
            if state.chosen.len() < self.max_points {
                if let Flow::Stop = self.dfs(state, z + 1, ctx) {
                    self.pop(state);
                    return Flow::Stop;
                }
            }
            self.pop(state);
            if self.mode == Mode::Find && ctx.limit.load(Ordering::Relaxed) <= ctx.task {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }
}

struct TaskCtx<'r> {
    result: &'r mut SubtreeResult,
    seen: &'r mut HashSet<Vec<usize>>,
    task: usize,
    limit: &'r AtomicUsize,
}

/// Runs the search. The tree is split after the first two placements; the
/// subtrees run independently (in parallel when `parallel_width > 1`) and are
/// merged in visiting order, so the outcome is identical to a sequential run
/// for every width, budget exhaustion included.
pub(super) fn run(spec: &SearchSpec, mode: Mode) -> RawOutcome {
    let kernel = Kernel::new(spec, mode);
    let mut steps: Vec<Step> = Vec::new();
    let mut prefixes: Vec<(usize, usize)> = Vec::new();
    let mut shallow_seen = HashSet::new();
    let mut state = kernel.empty_state();
    let mut first_shallow_witness: Option<usize> = None;

    if kernel.max_points >= 1 {
        for z1 in kernel.first_range() {
            if kernel.skips_required(&state, z1) {
                break;
            }
            if !kernel.try_push(&mut state, z1) {
                continue;
            }
            if let Some(e) = kernel.observe(&state, 0, &mut shallow_seen) {
                if e.witness && first_shallow_witness.is_none() {
                    first_shallow_witness = Some(prefixes.len());
                }
                steps.push(Step::Node(e));
            } else {
                steps.push(Step::Node(placeholder()));
            }
            if kernel.max_points >= 2 {
                for z2 in z1 + 1..kernel.cells() {
                    if kernel.skips_required(&state, z2) {
                        break;
                    }
                    if !kernel.try_push(&mut state, z2) {
                        continue;
                    }
                    match kernel.observe(&state, 0, &mut shallow_seen) {
                        Some(e) => {
                            if e.witness && first_shallow_witness.is_none() {
                                first_shallow_witness = Some(prefixes.len());
                            }
                            steps.push(Step::Node(e));
                        }
                        None => steps.push(Step::Node(placeholder())),
                    }
                    if kernel.max_points >= 3 {
                        steps.push(Step::Task(prefixes.len()));
                        prefixes.push((z1, z2));
                    }
                    kernel.pop(&mut state);
                }
            }
            kernel.pop(&mut state);
        }
    }

    let limit = AtomicUsize::new(match (mode, first_shallow_witness) {
        (Mode::Find, Some(t)) => t,
        _ => usize::MAX,
    });
    let run_one = |(task, &prefix): (usize, &(usize, usize))| kernel.run_task(prefix, task, &limit);
    let results: Vec<SubtreeResult> = if spec.parallel_width <= 1 {
        prefixes.iter().enumerate().map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.parallel_width)
            .build()
            .expect("thread pool");
        pool.install(|| prefixes.par_iter().enumerate().map(run_one).collect())
    };

    merge(spec, mode, steps, results)
}

fn placeholder() -> Event {
    Event {
        index: 0,
        sizes: Vec::new(),
        points: Vec::new(),
        classes: Vec::new(),
        witness: false,
    }
}

fn merge(
    spec: &SearchSpec,
    mode: Mode,
    steps: Vec<Step>,
    results: Vec<SubtreeResult>,
) -> RawOutcome {
    let budget = spec.node_budget;
    let mut nodes: u64 = 0;
    let mut exceeded = false;
    let mut first: BTreeMap<Vec<usize>, (Vec<GridPoint>, Vec<usize>)> = BTreeMap::new();
    let mut witness: Option<(Vec<GridPoint>, Vec<usize>)> = None;

    let mut apply = |e: Event, first: &mut BTreeMap<_, _>| -> bool {
        if e.sizes.is_empty() {
            return false;
        }
        if e.witness {
            witness = Some((e.points.clone(), e.classes.clone()));
        }
        first.entry(e.sizes).or_insert((e.points, e.classes));
        witness.is_some()
    };

    'walk: for step in steps {
        match step {
            Step::Node(e) => {
                if nodes >= budget {
                    exceeded = true;
                    break 'walk;
                }
                nodes += 1;
                if apply(e, &mut first) {
                    break 'walk;
                }
            }
            Step::Task(t) => {
                let res = &results[t];
                let room = budget - nodes;
                for e in &res.events {
                    if e.index > room {
                        break;
                    }
                    if apply(e.clone(), &mut first) && mode == Mode::Find {
                        nodes += e.index;
                        break 'walk;
                    }
                }
                if res.aborted || res.nodes > room {
                    nodes = budget;
                    exceeded = true;
                    break 'walk;
                }
                nodes += res.nodes;
            }
        }
    }

    let signatures = first
        .keys()
        .map(|s| KSetSignature::new(s.clone()))
        .collect();
    let witnesses = match mode {
        Mode::Find => witness.into_iter().collect(),
        Mode::Enumerate => first.into_values().collect(),
    };
    RawOutcome {
        nodes,
        budget_exceeded: exceeded,
        signatures,
        witnesses,
    }
}
