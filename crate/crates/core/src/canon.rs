//! Canonical forms of small vertex-colored multigraphs.
//!
//! Color refinement followed by individualization of one vertex at a time,
//! keeping the lexicographically least certificate over all leaves of the
//! search tree. A leaf whose certificate equals the first leaf's yields an
//! automorphism; children of the root lying in the orbit of an explored
//! child are skipped.

/// Isomorphism-invariant encoding of a colored multigraph. Two graphs are
/// isomorphic (respecting colors) iff their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm<C> {
    colors: Vec<C>,
    adjacency: Vec<usize>,
}

impl<C> CanonicalForm<C> {
    pub fn n_vertices(&self) -> usize {
        self.colors.len()
    }
}

/// `adj[u][v]` counts edges between `u` and `v`; it must be symmetric.
pub fn canonical_form<C: Ord + Clone>(colors: &[C], adj: &[Vec<usize>]) -> CanonicalForm<C> {
    let n = colors.len();
    assert_eq!(adj.len(), n, "adjacency size");
    let neighbors: Vec<Vec<(usize, usize)>> = adj
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(u, &k)| (u, k))
                .collect()
        })
        .collect();
    let initial = rank_by(colors.iter().collect());
    let mut state = Search {
        colors,
        adj,
        neighbors: &neighbors,
        best: None,
        first: None,
        orbits: (0..n).collect(),
    };
    state.root(refine(&neighbors, initial));
    state.best.unwrap_or(CanonicalForm {
        colors: Vec::new(),
        adjacency: Vec::new(),
    })
}

pub fn is_isomorphic<C: Ord + Clone>(
    colors_a: &[C],
    adj_a: &[Vec<usize>],
    colors_b: &[C],
    adj_b: &[Vec<usize>],
) -> bool {
    colors_a.len() == colors_b.len() && canonical_form(colors_a, adj_a) == canonical_form(colors_b, adj_b)
}

/// Dense ranks `0..k` ordered by key.
fn rank_by<K: Ord>(keys: Vec<K>) -> Vec<usize> {
    let mut sorted: Vec<&K> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present"))
        .collect()
}

fn class_count(ranks: &[usize]) -> usize {
    ranks.iter().max().map_or(0, |m| m + 1)
}

fn refine(neighbors: &[Vec<(usize, usize)>], mut ranks: Vec<usize>) -> Vec<usize> {
    loop {
        let classes = class_count(&ranks);
        let signatures: Vec<(usize, Vec<(usize, usize)>)> = neighbors
            .iter()
            .enumerate()
            .map(|(v, nbrs)| {
                let mut nbrs: Vec<(usize, usize)> = nbrs.iter().map(|&(u, k)| (ranks[u], k)).collect();
                nbrs.sort_unstable();
                (ranks[v], nbrs)
            })
            .collect();
        let next = rank_by(signatures);
        if class_count(&next) == classes {
            return next;
        }
        ranks = next;
    }
}

struct Search<'a, C> {
    colors: &'a [C],
    adj: &'a [Vec<usize>],
    neighbors: &'a [Vec<(usize, usize)>],
    best: Option<CanonicalForm<C>>,
    /// Vertex order and certificate of the first leaf reached.
    first: Option<(Vec<usize>, CanonicalForm<C>)>,
    /// Union-find over vertices; classes are unions of automorphism orbits.
    orbits: Vec<usize>,
}

fn target_cell(ranks: &[usize]) -> Option<usize> {
    let n = ranks.len();
    let mut sizes = vec![0usize; n];
    for &r in ranks {
        sizes[r] += 1;
    }
    (0..n).find(|&r| sizes[r] > 1)
}

fn individualize(ranks: &[usize], v: usize) -> Vec<usize> {
    rank_by((0..ranks.len()).map(|u| (ranks[u], u != v)).collect())
}

impl<C: Ord + Clone> Search<'_, C> {
    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.orbits[r] != r {
            r = self.orbits[r];
        }
        let mut v = v;
        while self.orbits[v] != r {
            let next = self.orbits[v];
            self.orbits[v] = r;
            v = next;
        }
        r
    }

    fn root(&mut self, ranks: Vec<usize>) {
        let Some(target) = target_cell(&ranks) else {
            self.leaf(&ranks);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in (0..ranks.len()).filter(|&v| ranks[v] == target) {
            let class = self.find(v);
            if explored.iter().any(|&u| self.find(u) == class) {
                continue;
            }
            explored.push(v);
            self.descend(refine(self.neighbors, individualize(&ranks, v)));
        }
    }

    fn descend(&mut self, ranks: Vec<usize>) {
        let Some(target) = target_cell(&ranks) else {
            self.leaf(&ranks);
            return;
        };
        for v in (0..ranks.len()).filter(|&v| ranks[v] == target) {
            self.descend(refine(self.neighbors, individualize(&ranks, v)));
        }
    }

    fn leaf(&mut self, ranks: &[usize]) {
        let n = ranks.len();
        let mut order = vec![0; n];
        for (v, &r) in ranks.iter().enumerate() {
            order[r] = v;
        }
        let adj = self.adj;
        let candidate = CanonicalForm {
            colors: order.iter().map(|&v| self.colors[v].clone()).collect(),
            adjacency: order
                .iter()
                .flat_map(|&u| order.iter().map(move |&v| adj[u][v]))
                .collect(),
        };
        match &self.first {
            None => self.first = Some((order.clone(), candidate.clone())),
            Some((first_order, first_form)) if *first_form == candidate => {
                let pairs: Vec<(usize, usize)> = first_order.iter().copied().zip(order.iter().copied()).collect();
                for (a, b) in pairs {
                    let (ra, rb) = (self.find(a), self.find(b));
                    if ra != rb {
                        self.orbits[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
            Some(_) => {}
        }
        if self.best.as_ref().is_none_or(|b| candidate < *b) {
            self.best = Some(candidate);
        }
    }
}
