//! Exact maximum clique by branch and bound with a greedy colouring bound.

use fixedbitset::FixedBitSet;

/// Returns the vertices of one maximum clique of the graph given by
/// symmetric adjacency rows. Ties resolve to the lexicographically earliest
/// clique found in vertex order.
pub fn max_clique(adj: &[FixedBitSet]) -> Vec<usize> {
    let n = adj.len();
    let mut best = Vec::new();
    let mut current = Vec::new();
    let mut cand = FixedBitSet::with_capacity(n);
    cand.insert_range(..);
    expand(adj, &mut current, cand, &mut best);
    best.sort_unstable();
    best
}

fn colour_order(adj: &[FixedBitSet], cand: &FixedBitSet) -> Vec<(usize, usize)> {
    // greedy sequential colouring; returns (vertex, colour) by increasing colour
    let mut uncoloured = cand.clone();
    let mut order = Vec::new();
    let mut colour = 0;
    while uncoloured.count_ones(..) > 0 {
        colour += 1;
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.ones().next() {
            avail.set(v, false);
            avail.difference_with(&adj[v]);
            uncoloured.set(v, false);
            order.push((v, colour));
        }
    }
    order
}

fn expand(adj: &[FixedBitSet], current: &mut Vec<usize>, mut cand: FixedBitSet, best: &mut Vec<usize>) {
    let order = colour_order(adj, &cand);
    for &(v, colour) in order.iter().rev() {
        if current.len() + colour <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        if next.count_ones(..) == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, current, next, best);
        }
        current.pop();
        cand.set(v, false);
    }
}

/// Adjacency rows from an edge predicate.
pub fn adjacency(n: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<FixedBitSet> {
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for a in 0..n {
        for b in a + 1..n {
            if edge(a, b) {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: usize, edge: &dyn Fn(usize, usize) -> bool) -> usize {
        (0u32..1 << n)
            .filter(|m| (0..n).all(|a| (a + 1..n).all(|b| m & (1 << a) == 0 || m & (1 << b) == 0 || edge(a, b))))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(max_clique(&adjacency(6, |_, _| true)).len(), 6);
        assert_eq!(max_clique(&adjacency(4, |_, _| false)).len(), 1);
        assert!(max_clique(&[]).is_empty());
    }

    #[test]
    fn matches_brute_force_on_pseudorandom_graphs() {
        for seed in 0u64..30 {
            let n = 12;
            let edge = move |a: usize, b: usize| {
                let (a, b) = (a.min(b) as u64, a.max(b) as u64);
                (a * 31 + b * 17 + seed * 7).wrapping_mul(2654435761) % 100 < 55
            };
            let adj = adjacency(n, edge);
            let c = max_clique(&adj);
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    assert!(edge(a, b));
                }
            }
            assert_eq!(c.len(), brute(n, &edge), "seed {seed}");
        }
    }
}
