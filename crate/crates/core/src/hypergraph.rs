//! Minimal transversals (minimal hitting sets) of small hypergraphs.
//!
//! This is the duality engine behind squarefree monomial ideals: the
//! minimal primes of an ideal are the minimal transversals of its generator
//! supports, and an intersection of variable-generated primes is generated
//! by the minimal transversals of their variable sets.

/// Keeps only the inclusion-minimal masks, returned in ascending order.
pub fn minimize(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps only the inclusion-maximal masks, returned in ascending order.
pub fn maximize(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.count_ones()), *s));
    sets.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// All minimal transversals of `edges`, ascending.
///
/// Edges are folded in one at a time: transversals that already hit the new
/// edge survive, the others branch on each vertex of the edge, and the
/// union is pruned back to its minimal elements. An empty edge can never be
/// hit, so it yields no transversals; no edges at all yields `{∅}`.
pub fn minimal_transversals(edges: &[u32]) -> Vec<u32> {
    let mut edges = minimize(edges.to_vec());
    // Small edges first keeps the intermediate families narrow.
    edges.sort_by_key(|e| e.count_ones());
    let mut current = vec![0u32];
    for &edge in &edges {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                let mut rest = edge;
                while rest != 0 {
                    let v = rest & rest.wrapping_neg();
                    next.push(t | v);
                    rest &= rest - 1;
                }
            }
        }
        current = minimize(next);
        if current.is_empty() {
            break;
        }
    }
    current
}
