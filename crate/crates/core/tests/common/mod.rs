//! Brute-force oracles, deliberately independent of the library's search
//! kernels. Everything works on adjacency bitmasks of graphs with at most
//! 16 vertices.
#![allow(dead_code)]

use oddcore::Graph;

pub fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 16);
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect()
}

/// `orders[v]` is a bitset of the orders (vertex counts) of all simple paths
/// from `u` to `v`, by DP over (visited set, endpoint).
pub fn path_orders_from(adj: &[u32], u: usize) -> Vec<u32> {
    let n = adj.len();
    let mut reach = vec![0u32; 1 << n]; // reach[mask]: endpoints of paths from u covering mask
    reach[1 << u] = 1 << u;
    let mut orders = vec![0u32; n];
    for mask in 0..(1u32 << n) {
        let ends = reach[mask as usize];
        if ends == 0 {
            continue;
        }
        let order = mask.count_ones();
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            orders[v] |= 1 << order;
            let mut next = adj[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    orders
}

/// Bitset of all cycle lengths present.
pub fn cycle_lengths(adj: &[u32]) -> u32 {
    let n = adj.len();
    let mut lengths = 0u32;
    for s in 0..n {
        // paths starting at s using only vertices >= s
        let allowed = !((1u32 << s) - 1);
        let sub: Vec<u32> = adj.iter().map(|&m| m & allowed).collect();
        let mut reach = vec![0u32; 1 << n];
        reach[1 << s] = 1 << s;
        for mask in 0..(1u32 << n) {
            let ends = reach[mask as usize];
            if ends == 0 || mask & !allowed != 0 {
                continue;
            }
            let mut e = ends;
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                if mask.count_ones() >= 3 && adj[v] >> s & 1 == 1 {
                    lengths |= 1 << mask.count_ones();
                }
                let mut next = sub[v] & !mask;
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    reach[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    lengths
}

pub fn is_bipartite_mask(adj: &[u32], alive: u32) -> bool {
    let mut side = vec![u8::MAX; adj.len()];
    for s in 0..adj.len() {
        if alive >> s & 1 == 0 || side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let mut nb = adj[u] & alive;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Chromatic number by DP over independent sets containing the lowest vertex.
pub fn chromatic_number(adj: &[u32]) -> usize {
    let n = adj.len();
    let full = (1u32 << n) - 1;
    let independent = |s: u32| {
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros();
            m &= m - 1;
            if adj[v as usize] & s != 0 {
                return false;
            }
        }
        true
    };
    let mut chi = vec![u8::MAX; 1 << n];
    chi[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // enumerate subsets of rest, each joined with low
        let mut sub = rest;
        loop {
            let s = sub | low;
            if independent(s) {
                let c = chi[(mask ^ s) as usize].saturating_add(1);
                if c < chi[mask as usize] {
                    chi[mask as usize] = c;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    chi[full as usize] as usize
}

/// Fewest vertices whose removal leaves a bipartite graph.
pub fn d2(adj: &[u32]) -> usize {
    let n = adj.len();
    let full = (1u32 << n) - 1;
    (0..=full)
        .filter(|&gone| is_bipartite_mask(adj, full & !gone))
        .map(|gone| gone.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// `|E| - maxcut` over all two-sidings.
pub fn gamma2(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let best = (0..(1u32 << (n - 1)))
        .map(|side| edges.iter().filter(|&&(u, v)| (side >> u & 1) != (side >> v & 1)).count())
        .max()
        .unwrap_or(0);
    edges.len() - best
}

/// Reference strong/plain core test from path-order sets of `G[H]`.
pub fn is_core(g: &Graph, h: &[usize], k: usize, strong: bool) -> bool {
    if h.len() < 2 {
        return false;
    }
    let sub_adj: Vec<u32> = h
        .iter()
        .map(|&v| h.iter().enumerate().filter(|&(_, &w)| g.has_edge(v, w)).fold(0u32, |m, (j, _)| m | 1 << j))
        .collect();
    let window = (1u32 << (2 * k + 1).min(31)) - 1; // orders 0..=2k
    const EVEN: u32 = 0x5555_5555;
    const ODD: u32 = 0xAAAA_AAAA;
    for i in 0..h.len() {
        let orders = path_orders_from(&sub_adj, i);
        for &o in &orders[i + 1..] {
            let o = o & window;
            if o & EVEN == 0 || (strong && o & ODD == 0) {
                return false;
            }
        }
    }
    true
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let e: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(g.n(), &e).unwrap()
}
