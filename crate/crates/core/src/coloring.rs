//! Exact vertex colouring: k-colourability by DSATUR-ordered backtracking,
//! chromatic number bracketed by a greedy clique and a greedy colouring.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::parity::SearchOutcome;

/// Exact search keeps each vertex's neighbour colours in one `u64`.
const MASK_COLORS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringCertificate {
    pub colors: Vec<usize>,
    pub c: usize,
}

impl ColoringCertificate {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::param("colouring has the wrong length"));
        }
        if let Some(&bad) = self.colors.iter().find(|&&col| col >= self.c) {
            return Err(Error::param(format!("colour {bad} out of range 0..{}", self.c)));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            return Err(Error::param(format!("edge {u}-{v} is monochromatic")));
        }
        Ok(())
    }

    pub fn uses_all_colors(&self) -> bool {
        let mut seen = vec![false; self.c];
        for &col in &self.colors {
            seen[col] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Colour classes, indexed by colour.
    pub fn parts(&self) -> Vec<Vec<Vertex>> {
        let mut parts = vec![Vec::new(); self.c];
        for (v, &col) in self.colors.iter().enumerate() {
            parts[col].push(v);
        }
        parts
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ChromaticOutcome {
    Exact { chi: usize, coloring: ColoringCertificate },
    /// Budget ran out: `lower <= chi <= upper`, `coloring` achieves `upper`.
    Bracketed { lower: usize, upper: usize, coloring: ColoringCertificate },
}

impl ChromaticOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChromaticOutcome::Exact { chi, .. } => Some(*chi),
            ChromaticOutcome::Bracketed { .. } => None,
        }
    }
}

/// Maximal clique grown greedily from every start vertex (neighbours taken
/// by decreasing degree); the largest one found.
pub fn greedy_clique(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = Vec::new();
    for &s in &order {
        if g.degree(s) < best.len() {
            continue;
        }
        let mut clique = vec![s];
        for &v in &order {
            if v != s && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// One DSATUR pass without backtracking.
pub fn greedy_coloring(g: &Graph) -> ColoringCertificate {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut nbr_colors: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    let mut c = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let col = (0..).find(|&col| !nbr_colors[v].get(col).copied().unwrap_or(false)).expect("unbounded");
        colors[v] = col;
        c = c.max(col + 1);
        for &w in g.neighbors(v) {
            let seen = &mut nbr_colors[w];
            if seen.len() <= col {
                seen.resize(col + 1, false);
            }
            if !seen[col] {
                seen[col] = true;
                sat[w] += 1;
            }
        }
    }
    ColoringCertificate { colors, c }
}

struct Dsatur<'g> {
    g: &'g Graph,
    c: usize,
    colors: Vec<usize>,
    // count[v * c + col]: neighbours of v currently holding col
    count: Vec<u32>,
    mask: Vec<u64>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, c: usize) -> Self {
        Dsatur { g, c, colors: vec![usize::MAX; g.n()], count: vec![0; g.n() * c], mask: vec![0; g.n()] }
    }

    fn set(&mut self, v: Vertex, col: usize) {
        self.colors[v] = col;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * self.c + col];
            *slot += 1;
            if *slot == 1 {
                self.mask[w] |= 1 << col;
            }
        }
    }

    fn unset(&mut self, v: Vertex, col: usize) {
        self.colors[v] = usize::MAX;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.count[w * self.c + col];
            *slot -= 1;
            if *slot == 0 {
                self.mask[w] &= !(1 << col);
            }
        }
    }

    /// `used` colours so far are exactly `0..used`.
    fn solve(&mut self, left: usize, used: usize, budget: &mut Budget) -> Result<bool> {
        if left == 0 {
            return Ok(true);
        }
        budget.tick()?;
        let mut pick = usize::MAX;
        let mut pick_sat = 0;
        for v in self.g.vertices() {
            if self.colors[v] != usize::MAX {
                continue;
            }
            let s = self.mask[v].count_ones() as usize;
            if pick == usize::MAX || s > pick_sat {
                pick = v;
                pick_sat = s;
            }
        }
        if pick_sat == self.c {
            return Ok(false);
        }
        let v = pick;
        for col in 0..self.c.min(used + 1) {
            if self.mask[v] >> col & 1 == 1 {
                continue;
            }
            self.set(v, col);
            if self.solve(left - 1, used.max(col + 1), budget)? {
                return Ok(true);
            }
            self.unset(v, col);
        }
        Ok(false)
    }
}

pub(crate) fn k_coloring(g: &Graph, c: usize, budget: &mut Budget) -> Result<Option<ColoringCertificate>> {
    let n = g.n();
    if c >= n {
        return Ok(Some(ColoringCertificate { colors: (0..n).collect(), c: c.max(1) }));
    }
    if greedy_clique(g).len() > c {
        return Ok(None);
    }
    let greedy = greedy_coloring(g);
    if greedy.c <= c {
        return Ok(Some(ColoringCertificate { colors: greedy.colors, c }));
    }
    if c > MASK_COLORS {
        return Err(Error::param(format!("exact colouring supports at most {MASK_COLORS} colours")));
    }
    let mut s = Dsatur::new(g, c);
    if s.solve(n, 0, budget)? {
        Ok(Some(ColoringCertificate { colors: s.colors, c }))
    } else {
        Ok(None)
    }
}

/// Exact c-colourability. `Absent` is a proof: either a clique of size
/// `c + 1` or an exhausted backtracking tree.
pub fn is_k_colorable(g: &Graph, c: usize, limit: u64) -> Result<SearchOutcome<ColoringCertificate>> {
    if c < 1 {
        return Err(Error::param("colour count must be at least 1"));
    }
    let mut budget = Budget::new(limit);
    let r = k_coloring(g, c, &mut budget);
    SearchOutcome::from_result(r, &budget)
}

/// r-partiteness; the certificate's `parts()` is the partition.
pub fn is_r_partite(g: &Graph, r: usize, limit: u64) -> Result<SearchOutcome<ColoringCertificate>> {
    is_k_colorable(g, r, limit)
}

pub fn chromatic_number(g: &Graph, limit: u64) -> Result<ChromaticOutcome> {
    chromatic_with(g, &mut Budget::new(limit))
}

pub(crate) fn chromatic_with(g: &Graph, budget: &mut Budget) -> Result<ChromaticOutcome> {
    if g.n() == 0 {
        let coloring = ColoringCertificate { colors: Vec::new(), c: 0 };
        return Ok(ChromaticOutcome::Exact { chi: 0, coloring });
    }
    let lower = greedy_clique(g).len();
    let greedy = greedy_coloring(g);
    let upper = greedy.c;
    for c in lower..upper {
        match k_coloring(g, c, budget) {
            Ok(Some(coloring)) => return Ok(ChromaticOutcome::Exact { chi: c, coloring }),
            Ok(None) => {}
            Err(Error::BudgetExceeded { .. }) => {
                return Ok(ChromaticOutcome::Bracketed { lower: c, upper, coloring: greedy });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(ChromaticOutcome::Exact { chi: upper, coloring: greedy })
}
