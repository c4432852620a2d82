use std::collections::HashMap;

use super::{greedy_polygon, primitives_by_gauge, Method, MinimizerResult};
use crate::error::MinimizerError;
use crate::geometry::ConvexBody;
use crate::lattice::{LatticePolygon, LatticeVector};

/// Largest `n` accepted by [`exact_minimizer`].
pub const MAX_EXACT_N: usize = 10;

/// Default node budget for the search.
pub const DEFAULT_BUDGET: u64 = 500_000_000;

const MAX_CANDIDATES: usize = 100_000;

struct Search<'a> {
    body: &'a ConvexBody,
    n: usize,
    cand: Vec<LatticeVector>,
    norm: Vec<f64>,
    /// `prefix[i] = Σ_{j<i} norm[j]`.
    prefix: Vec<f64>,
    /// Largest `|x|` and `|y|` over `cand[i..]`.
    max_x: Vec<i64>,
    max_y: Vec<i64>,
    index: HashMap<LatticeVector, usize>,
    subadditive: bool,
    tol: f64,
    budget: u64,
    nodes: u64,
    /// Perimeter of a known `n`-gon (the greedy one).
    upper: f64,
    best: Option<(f64, Vec<LatticeVector>)>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    /// Lower bound for picking `k` more vectors, all from `cand[i..]`.
    fn tail_bound(&self, i: usize, k: usize) -> f64 {
        if i + k > self.cand.len() {
            f64::INFINITY
        } else {
            self.prefix[i + k] - self.prefix[i]
        }
    }

    fn bound(&self) -> f64 {
        self.best.as_ref().map_or(self.upper, |(c, _)| c.min(self.upper)) + self.tol
    }

    fn offer(&mut self, cost: f64, last: usize) {
        let mut edges: Vec<LatticeVector> = self.chosen.iter().map(|&i| self.cand[i]).collect();
        edges.push(self.cand[last]);
        edges.sort();
        let better = match &self.best {
            None => true,
            Some((c, e)) => cost < c - self.tol || (cost <= c + self.tol && edges < *e),
        };
        if better {
            let cost = match &self.best {
                Some((c, _)) if cost > *c => *c,
                _ => cost,
            };
            self.best = Some((cost, edges));
        }
    }

    /// Extends `chosen` (whose sum is `sum` and cost `cost`) with indices `≥ start`.
    fn dfs(&mut self, start: usize, sum: LatticeVector, cost: f64) -> Result<(), ()> {
        let depth = self.chosen.len();
        if depth == self.n - 1 {
            if let Some(&j) = self.index.get(&-sum) {
                if j >= start {
                    let total = cost + self.norm[j];
                    if total <= self.bound() {
                        self.offer(total, j);
                    }
                }
            }
            return Ok(());
        }
        let rest = self.n - depth;
        for i in start..self.cand.len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            if cost + self.tail_bound(i, rest) > self.bound() {
                break;
            }
            let s = sum + self.cand[i];
            let c = cost + self.norm[i];
            let k = (rest - 1) as i64;
            if i + 1 >= self.cand.len()
                || s.x.abs() > k * self.max_x[i + 1]
                || s.y.abs() > k * self.max_y[i + 1]
            {
                continue;
            }
            if self.subadditive && c + self.body.norm((-s).to_vec2()) > self.bound() {
                continue;
            }
            self.chosen.push(i);
            let r = self.dfs(i + 1, s, c);
            self.chosen.pop();
            r?;
        }
        Ok(())
    }
}

/// Global minimum of the `D`-perimeter over convex lattice `n`-gons,
/// `3 ≤ n ≤ 10`, by branch and bound.
///
/// Edges of a minimizer are primitive with distinct directions, so the search
/// runs over `n`-subsets of primitive vectors with zero sum. The greedy
/// polygon gives an upper bound `U`, and no edge can cost more than `U` minus
/// the `n − 1` smallest primitive norms. Candidates are ordered by norm and
/// subsets by increasing index, with three prunings: the sum of the next
/// cheapest norms, the norm of the vector still needed to close (triangle
/// inequality, used only when the gauge is exact), and a coordinate box.
///
/// Among optimal edge sets within `1e-12·max(1, U)` the lexicographically
/// smallest sorted edge list is returned. Running out of `budget` nodes
/// yields [`MinimizerError::BudgetExceeded`] carrying the best polygon found,
/// marked uncertified.
pub fn exact_minimizer(body: &ConvexBody, n: usize, budget: u64) -> Result<MinimizerResult, MinimizerError> {
    if !(3..=MAX_EXACT_N).contains(&n) {
        return Err(MinimizerError::InvalidN {
            n,
            min: 3,
            max: MAX_EXACT_N,
        });
    }
    let greedy = greedy_polygon(body, n)?;
    let upper = greedy.perimeter;
    let tol = 1e-12 * upper.max(1.0);

    let gauge = |z| body.norm(z);
    let shortest = primitives_by_gauge(&gauge, body.r_out(), body.area(), n)?;
    let smallest_rest: f64 = shortest[..n - 1].iter().map(|p| p.1).sum();
    let cap = upper + tol - smallest_rest;

    let mut ranked = Vec::new();
    let mut want = n;
    while ranked.last().is_none_or(|&(_, g): &(LatticeVector, f64)| g <= cap) {
        want *= 2;
        if want > 4 * MAX_CANDIDATES {
            return Err(MinimizerError::CandidateOverflow(want));
        }
        ranked = primitives_by_gauge(&gauge, body.r_out(), body.area(), want)?;
    }
    ranked.retain(|&(_, g)| g <= cap);
    if ranked.len() > MAX_CANDIDATES {
        return Err(MinimizerError::CandidateOverflow(ranked.len()));
    }
    ranked.sort_by(|(a, ga), (b, gb)| {
        ga.total_cmp(gb)
            .then_with(|| crate::lattice::slope_cmp(*a, *b))
    });

    let cand: Vec<LatticeVector> = ranked.iter().map(|p| p.0).collect();
    let norm: Vec<f64> = ranked.iter().map(|p| p.1).collect();
    let mut prefix = vec![0.0; cand.len() + 1];
    for i in 0..cand.len() {
        prefix[i + 1] = prefix[i] + norm[i];
    }
    let mut max_x = vec![0; cand.len() + 1];
    let mut max_y = vec![0; cand.len() + 1];
    for i in (0..cand.len()).rev() {
        max_x[i] = max_x[i + 1].max(cand[i].x.abs());
        max_y[i] = max_y[i + 1].max(cand[i].y.abs());
    }
    let index = cand.iter().enumerate().map(|(i, z)| (*z, i)).collect();

    let mut search = Search {
        body,
        n,
        cand,
        norm,
        prefix,
        max_x,
        max_y,
        index,
        subadditive: body.has_exact_gauge(),
        tol,
        budget,
        nodes: 0,
        upper,
        best: None,
        chosen: Vec::with_capacity(n),
    };
    let completed = search.dfs(0, LatticeVector::ZERO, 0.0).is_ok();

    let mut result = match search.best {
        Some((_, edges)) => MinimizerResult::new(LatticePolygon::from_edges(&edges)?, body, Method::Exact, None, None),
        // Nothing primitive beats or ties the greedy polygon.
        None => MinimizerResult {
            method: Method::Exact,
            special_edge: None,
            trim: None,
            ..greedy
        },
    };
    if !completed {
        result.certified = false;
        return Err(MinimizerError::BudgetExceeded {
            budget,
            best: Box::new(result),
        });
    }
    Ok(result)
}
