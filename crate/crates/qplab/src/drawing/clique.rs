//! Exact maximum clique over small graphs given as neighbor bitsets.
//!
//! Branch and bound with a greedy-coloring upper bound, then a second
//! lexicographic pass to pin down the smallest witness of maximum size.

/// Returns the maximum clique size and the lexicographically smallest
/// maximum clique (as a sorted vertex list). For the empty graph the
/// witness is empty; an edgeless nonempty graph yields `(1, vec![0])`.
pub fn max_clique(neighbors: &[u128]) -> (usize, Vec<usize>) {
    let n = neighbors.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let all: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut best = 0usize;
    let mut current = Vec::new();
    expand(neighbors, all, &mut current, &mut best);
    let mut witness = Vec::new();
    let found = lex_first(neighbors, all, best, &mut witness);
    debug_assert!(found);
    (best, witness)
}

/// True iff the graph contains a clique of the given size; fills `out`
/// with the lexicographically first one found.
pub fn has_clique_of_size(neighbors: &[u128], size: usize, out: &mut Vec<usize>) -> bool {
    let n = neighbors.len();
    if size == 0 {
        return true;
    }
    if n == 0 {
        return false;
    }
    let all: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    lex_first(neighbors, all, size, out)
}

/// Like [`has_clique_of_size`], but only vertices in `within` may be used.
pub fn has_clique_of_size_in(
    neighbors: &[u128],
    within: u128,
    size: usize,
    out: &mut Vec<usize>,
) -> bool {
    if size == 0 {
        return true;
    }
    lex_first(neighbors, within, size, out)
}

fn expand(neighbors: &[u128], candidates: u128, current: &mut Vec<usize>, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(current.len());
        return;
    }
    let (order, bounds) = color_sort(neighbors, candidates);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= *best {
            return;
        }
        let v = order[idx];
        current.push(v);
        let mut rest = candidates & neighbors[v];
        // Only candidates earlier in the color order remain.
        let mut mask = 0u128;
        for &u in &order[..idx] {
            mask |= 1 << u;
        }
        rest &= mask;
        expand(neighbors, rest, current, best);
        current.pop();
    }
    *best = (*best).max(current.len());
}

/// Greedy coloring of the candidate set; returns vertices ordered by color
/// class and, per position, the number of colors used up to it (an upper
/// bound on any clique within the prefix).
fn color_sort(neighbors: &[u128], candidates: u128) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::new();
    let mut bounds = Vec::new();
    let mut uncolored = candidates;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut available = uncolored;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= available - 1;
            available &= !neighbors[v];
            uncolored &= !(1u128 << v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn lex_first(neighbors: &[u128], candidates: u128, need: usize, out: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    let mut c = candidates;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        let above = if v + 1 >= 128 { 0 } else { !((1u128 << (v + 1)) - 1) };
        let rest = candidates & neighbors[v] & above;
        if (rest.count_ones() as usize) + 1 >= need {
            out.push(v);
            if lex_first(neighbors, rest, need - 1, out) {
                return true;
            }
            out.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<u128> {
        let mut g = vec![0u128; n];
        for &(a, b) in edges {
            g[a] |= 1 << b;
            g[b] |= 1 << a;
        }
        g
    }

    /// Oracle: check all subsets.
    fn brute_max_clique(neighbors: &[u128]) -> (usize, Vec<usize>) {
        let n = neighbors.len();
        let mut best = (0usize, Vec::new());
        for mask in 0u64..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let is_clique = members
                .iter()
                .enumerate()
                .all(|(ai, &a)| members[ai + 1..].iter().all(|&b| neighbors[a] & (1 << b) != 0));
            if is_clique {
                let cand = (members.len(), members);
                if cand.0 > best.0 || (cand.0 == best.0 && cand.1 < best.1 && cand.0 > 0) {
                    best = cand;
                }
            }
        }
        best
    }

    #[test]
    fn empty_and_edgeless() {
        assert_eq!(max_clique(&[]), (0, vec![]));
        assert_eq!(max_clique(&graph(3, &[])), (1, vec![0]));
    }

    #[test]
    fn triangle_plus_pendant() {
        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(max_clique(&g), (3, vec![0, 1, 2]));
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((a, b));
                    }
                }
            }
            let g = graph(n, &edges);
            let (bs, bw) = brute_max_clique(&g);
            let (s, w) = max_clique(&g);
            assert_eq!(s, bs);
            assert_eq!(w, bw, "lex-smallest witness mismatch for {edges:?}");
        }
    }

    #[test]
    fn clique_of_size_query() {
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]);
        let mut w = Vec::new();
        assert!(has_clique_of_size(&g, 3, &mut w));
        assert_eq!(w, vec![0, 1, 2]);
        w.clear();
        assert!(!has_clique_of_size(&g, 4, &mut w));
    }
}
