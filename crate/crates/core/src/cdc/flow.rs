use std::fmt;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

/// An orientation and a weight per edge. `forward[e]` means edge `e` points
/// from its lower to its higher vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerFlow {
    pub forward: Vec<bool>,
    pub weights: Vec<i64>,
}

impl IntegerFlow {
    /// Weight of `e` measured in the low-to-high direction.
    pub fn signed(&self, e: usize) -> i64 {
        if self.forward[e] {
            self.weights[e]
        } else {
            -self.weights[e]
        }
    }

    /// Inflow minus outflow at `v`.
    pub fn excess(&self, g: &Graph, v: usize) -> i64 {
        g.incident(v).iter().map(|&(w, e)| if w < v { self.signed(e) } else { -self.signed(e) }).sum()
    }

    /// Builds a flow with positive weights from signed low-to-high values.
    pub fn from_signed(values: &[i64]) -> IntegerFlow {
        IntegerFlow { forward: values.iter().map(|&x| x >= 0).collect(), weights: values.iter().map(|x| x.abs()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowViolation {
    WrongLength { expected: usize, found: usize },
    ZeroWeight { edge: (usize, usize) },
    TooLarge { edge: (usize, usize), weight: i64, k: i64 },
    Conservation { vertex: usize, excess: i64 },
}

impl fmt::Display for FlowViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FlowViolation::WrongLength { expected, found } => write!(f, "{found} weights for {expected} edges"),
            FlowViolation::ZeroWeight { edge: (u, v) } => write!(f, "edge {}{} has weight 0", u + 1, v + 1),
            FlowViolation::TooLarge { edge: (u, v), weight, k } => {
                write!(f, "edge {}{} has weight {weight}, not below {k} in absolute value", u + 1, v + 1)
            }
            FlowViolation::Conservation { vertex, excess } => {
                write!(f, "vertex {} has inflow minus outflow {excess}", vertex + 1)
            }
        }
    }
}

/// Checks that the flow is a nowhere-zero `k`-flow: full support, every
/// `|f(e)| < k`, and conservation at every vertex.
pub fn verify_nzf(g: &Graph, flow: &IntegerFlow, k: i64) -> Result<(), FlowViolation> {
    let m = g.edge_count();
    for found in [flow.forward.len(), flow.weights.len()] {
        if found != m {
            return Err(FlowViolation::WrongLength { expected: m, found });
        }
    }
    for e in 0..m {
        let w = flow.weights[e];
        if w == 0 {
            return Err(FlowViolation::ZeroWeight { edge: g.edge(e) });
        }
        if w.abs() >= k {
            return Err(FlowViolation::TooLarge { edge: g.edge(e), weight: w, k });
        }
    }
    match (0..g.vertex_count()).map(|v| (v, flow.excess(g, v))).find(|&(_, x)| x != 0) {
        Some((vertex, excess)) => Err(FlowViolation::Conservation { vertex, excess }),
        None => Ok(()),
    }
}

struct NzfSearch<'a> {
    g: &'a Graph,
    k: i64,
    order: Vec<usize>,
    value: Vec<i64>,
    /// low-to-high values entering minus leaving, over assigned edges
    excess: Vec<i64>,
    open: Vec<usize>,
}

impl NzfSearch<'_> {
    fn feasible(&self, v: usize) -> bool {
        let x = self.excess[v].abs();
        x <= self.open[v] as i64 * (self.k - 1) && (self.open[v] != 0 || x == 0)
    }

    fn assign(&mut self, e: usize, x: i64) {
        let (a, b) = self.g.edge(e);
        self.value[e] = x;
        self.excess[a] -= x;
        self.excess[b] += x;
        self.open[a] -= 1;
        self.open[b] -= 1;
    }

    fn unassign(&mut self, e: usize) {
        let (a, b) = self.g.edge(e);
        let x = std::mem::take(&mut self.value[e]);
        self.excess[a] += x;
        self.excess[b] -= x;
        self.open[a] += 1;
        self.open[b] += 1;
    }

    /// The value forced on `e` by an endpoint whose last open edge it is.
    fn forced(&self, e: usize) -> Option<i64> {
        let (a, b) = self.g.edge(e);
        if self.open[a] == 1 {
            Some(self.excess[a])
        } else if self.open[b] == 1 {
            Some(-self.excess[b])
        } else {
            None
        }
    }

    fn run(&mut self, i: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let e = self.order[i];
        let candidates: Vec<i64> = match self.forced(e) {
            Some(x) if x != 0 && x.abs() < self.k => vec![x],
            Some(_) => return Ok(false),
            // negating a flow gives a flow, so the first edge is positive
            None if i == 0 => (1..self.k).collect(),
            None => (1..self.k).flat_map(|x| [x, -x]).collect(),
        };
        let (a, b) = self.g.edge(e);
        for x in candidates {
            self.assign(e, x);
            if self.feasible(a) && self.feasible(b) && self.run(i + 1, budget)? {
                return Ok(true);
            }
            self.unassign(e);
        }
        Ok(false)
    }
}

/// Edges in breadth-first order from vertex 0, so vertices close early and
/// conservation forces values.
fn bfs_edge_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.edge_count());
    let mut taken = vec![false; g.edge_count()];
    let mut seen = vec![false; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                if !taken[e] {
                    taken[e] = true;
                    order.push(e);
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Exhaustive search for a nowhere-zero `k`-flow. `Ok(None)` means none
/// exists.
pub fn find_nzf(g: &Graph, k: i64, budget: &mut Budget) -> Result<Option<IntegerFlow>> {
    if k < 2 {
        return Ok(if g.edge_count() == 0 { Some(IntegerFlow::from_signed(&[])) } else { None });
    }
    let mut s = NzfSearch {
        g,
        k,
        order: bfs_edge_order(g),
        value: vec![0; g.edge_count()],
        excess: vec![0; g.vertex_count()],
        open: g.degrees(),
    };
    if !s.run(0, budget)? {
        return Ok(None);
    }
    let flow = IntegerFlow::from_signed(&s.value);
    debug_assert_eq!(verify_nzf(g, &flow, k), Ok(()));
    Ok(Some(flow))
}
