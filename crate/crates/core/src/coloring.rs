//! Exact vertex colouring by backtracking.
//!
//! Tries `k = ω_lb, ω_lb + 1, ...` colours in turn, where `ω_lb` is the size of
//! a greedily found clique; each attempt is a DSATUR-ordered backtracking search
//! that only ever opens one fresh colour at a time.

use crate::graph::{bit, bits, Graph};

/// The chromatic number `χ(g)`; 0 for the graph on no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_colouring(g)
        .into_iter()
        .map(|c| c + 1)
        .max()
        .unwrap_or(0)
}

/// A proper colouring using exactly `χ(g)` colours `0..χ(g)`.
pub fn optimal_colouring(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let lower = greedy_clique(g).count_ones() as usize;
    for k in lower.max(1)..=n {
        if let Some(c) = colour_with(g, k) {
            return c;
        }
    }
    unreachable!("n colours always suffice")
}

/// A `k`-colouring if one exists.
pub fn colour_with(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut colour = vec![usize::MAX; n];
    let mut classes = vec![0u64; k];
    if search(g, k, &mut colour, &mut classes, 0, 0) {
        Some(colour)
    } else {
        None
    }
}

fn search(
    g: &Graph,
    k: usize,
    colour: &mut [usize],
    classes: &mut [u64],
    coloured: u64,
    used: usize,
) -> bool {
    let n = g.order();
    if coloured.count_ones() as usize == n {
        return true;
    }
    // DSATUR: most distinct neighbour colours, then most uncoloured neighbours
    let mut best = None;
    let mut best_key = (0usize, 0usize);
    for v in 0..n {
        if coloured & bit(v) != 0 {
            continue;
        }
        let sat = classes[..used]
            .iter()
            .filter(|&&c| c & g.neighbours(v) != 0)
            .count();
        let deg = (g.neighbours(v) & !coloured).count_ones() as usize;
        let key = (sat, deg);
        if best.is_none() || key > best_key {
            best = Some(v);
            best_key = key;
        }
    }
    let v = best.expect("an uncoloured vertex remains");
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if classes[c] & g.neighbours(v) != 0 {
            continue;
        }
        classes[c] |= bit(v);
        colour[v] = c;
        if search(g, k, colour, classes, coloured | bit(v), used.max(c + 1)) {
            return true;
        }
        classes[c] &= !bit(v);
        colour[v] = usize::MAX;
    }
    false
}

fn greedy_clique(g: &Graph) -> u64 {
    let mut best = 0u64;
    for start in 0..g.order() {
        let mut clique = bit(start);
        let mut cand = g.neighbours(start);
        while cand != 0 {
            // take the candidate with the most neighbours among the candidates
            let v = bits(cand)
                .max_by_key(|&v| (g.neighbours(v) & cand).count_ones())
                .unwrap();
            clique |= bit(v);
            cand &= g.neighbours(v);
        }
        if clique.count_ones() > best.count_ones() {
            best = clique;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_proper(g: &Graph, c: &[usize]) -> bool {
        g.edges().all(|(u, v)| c[u] != c[v])
    }

    #[test]
    fn examples() {
        assert_eq!(chromatic_number(&Graph::complete(4)), 4);
        assert_eq!(chromatic_number(&Graph::cycle(6)), 2);
        assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::empty(7)), 1);
    }

    #[test]
    fn c5_needs_three() {
        // brute force: no 2-colouring of C5 among all 2^5 assignments
        let g = Graph::cycle(5);
        let two = (0..32u32).any(|m| g.edges().all(|(u, v)| (m >> u & 1) != (m >> v & 1)));
        assert!(!two);
        assert!(colour_with(&g, 2).is_none());
        let c = colour_with(&g, 3).unwrap();
        assert!(is_proper(&g, &c));
    }

    #[test]
    fn colouring_is_proper_and_tight() {
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let c = optimal_colouring(&petersen);
        assert!(is_proper(&petersen, &c));
        assert_eq!(chromatic_number(&petersen), 3);
        let m13 = Graph::matching(6, 1);
        assert_eq!(chromatic_number(&m13), 2);
    }
}
