//! Labeled connected graphs by ascending edge mask.

use std::ops::Range;

use super::{bit, Graph, GraphError};

/// Largest `n` accepted by the enumerator.
pub const MAX_ENUMERATION_N: usize = 8;

/// Streams connected labeled graphs on `n` vertices whose edge masks lie in
/// a range, in ascending mask order. Bit `i` of a mask is the `i`-th pair of
/// `K_n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    n: usize,
    pair_rows: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    m_filter: Option<usize>,
}

impl ConnectedGraphs {
    /// Enumerates masks in `range` (clipped to `0..2^C(n,2)`).
    pub fn in_range(n: usize, range: Range<u64>, m_filter: Option<usize>) -> Result<Self, GraphError> {
        if !(2..=MAX_ENUMERATION_N).contains(&n) {
            return Err(GraphError::EnumerationRange {
                n,
                max: MAX_ENUMERATION_N,
            });
        }
        let total = mask_count(n);
        let mut pair_rows = Vec::with_capacity(crate::choose2(n));
        for u in 0..n {
            for v in u + 1..n {
                pair_rows.push((u, v));
            }
        }
        Ok(ConnectedGraphs {
            n,
            pair_rows,
            next: range.start.min(total),
            end: range.end.min(total),
            m_filter,
        })
    }

    fn mask_connected(&self, mask: u64) -> bool {
        let mut adj = [0u64; MAX_ENUMERATION_N];
        for (i, &(u, v)) in self.pair_rows.iter().enumerate() {
            if mask & bit(i) != 0 {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
        }
        let all = super::low_bits(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in super::Bits(frontier) {
                next |= adj[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        seen == all
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let m = mask.count_ones() as usize;
            if m + 1 < self.n || self.m_filter.is_some_and(|want| want != m) {
                continue;
            }
            if self.mask_connected(mask) {
                return Some(Graph::from_mask(self.n, mask).expect("n within mask range"));
            }
        }
        None
    }
}

/// `2^C(n,2)`, the number of labeled graphs on `n` vertices.
pub fn mask_count(n: usize) -> u64 {
    1u64 << crate::choose2(n)
}

/// Every connected labeled graph on `n` vertices, optionally restricted to
/// `m_filter` edges, in ascending edge-mask order.
pub fn enumerate_connected_graphs(n: usize, m_filter: Option<usize>) -> Result<ConnectedGraphs, GraphError> {
    ConnectedGraphs::in_range(n, 0..u64::MAX, m_filter)
}

/// Number of connected labeled graphs on `n` vertices, from the standard
/// recurrence conditioning on the component of vertex 0.
pub fn connected_labeled_count(n: usize) -> u128 {
    let mut binom = vec![vec![0u128; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for j in 1..=i {
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
        }
    }
    let all = |k: usize| 1u128 << crate::choose2(k);
    let mut c = vec![0u128; n + 1];
    for k in 1..=n {
        let disconnected: u128 = (1..k).map(|j| binom[k - 1][j - 1] * c[j] * all(k - j)).sum();
        c[k] = all(k) - disconnected;
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(n: usize) -> usize {
        (0..mask_count(n))
            .filter(|&mask| Graph::from_mask(n, mask).unwrap().is_connected())
            .count()
    }

    #[test]
    fn counts_for_small_n() {
        assert_eq!(enumerate_connected_graphs(3, None).unwrap().count(), 4);
        assert_eq!(enumerate_connected_graphs(4, None).unwrap().count(), 38);
        for n in 2..=5 {
            let streamed = enumerate_connected_graphs(n, None).unwrap().count();
            assert_eq!(streamed, brute_count(n));
            assert_eq!(streamed as u128, connected_labeled_count(n));
        }
        assert_eq!(connected_labeled_count(6), 26704);
    }

    #[test]
    fn edge_filter_selects_complete_graph() {
        let only: Vec<_> = enumerate_connected_graphs(4, Some(6)).unwrap().collect();
        assert_eq!(only, vec![Graph::complete(4).unwrap()]);
    }

    #[test]
    fn order_is_ascending_mask() {
        let masks: Vec<u64> = enumerate_connected_graphs(4, None)
            .unwrap()
            .map(|g| g.edge_mask().unwrap())
            .collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ranges_partition_the_stream() {
        let whole: Vec<_> = enumerate_connected_graphs(5, None).unwrap().collect();
        let total = mask_count(5);
        let mut pieces = Vec::new();
        for chunk in 0..7u64 {
            let r = chunk * total / 7..(chunk + 1) * total / 7;
            pieces.extend(ConnectedGraphs::in_range(5, r, None).unwrap());
        }
        assert_eq!(whole, pieces);
    }

    #[test]
    fn range_errors() {
        assert!(enumerate_connected_graphs(1, None).is_err());
        assert!(enumerate_connected_graphs(9, None).is_err());
    }
}
