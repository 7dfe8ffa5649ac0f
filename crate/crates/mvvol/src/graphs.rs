//! Stable graphs of type `(g, n)` and the decorated graph sum that gives
//! Masur–Veech polynomials from Kontsevich vertex weights and twisted edges.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{factorial, int, PiPoly, Rational};
use crate::coeff::{dimension, is_stable, EvenPolynomial};
use crate::error::{Error, Result};
use crate::kontsevich;
use crate::virasoro::twist_weight;

/// A stable graph with vertices `0..V`. `adjacency[v][w]` counts edges
/// between `v` and `w`; the diagonal counts loops. `leaves[i]` is the vertex
/// carrying leaf `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableGraph {
    pub genus: Vec<u32>,
    pub adjacency: Vec<Vec<u32>>,
    pub leaves: Vec<usize>,
    /// Vertex permutations preserving the whole structure.
    pub vertex_symmetries: u64,
    /// Labeled structures produced by the raw generator for this class.
    pub raw_count: u64,
}

impl StableGraph {
    pub fn vertex_count(&self) -> usize {
        self.genus.len()
    }

    pub fn edge_count(&self) -> u32 {
        let v = self.vertex_count();
        (0..v).map(|i| (i..v).map(|j| self.adjacency[i][j]).sum::<u32>()).sum()
    }

    pub fn valence(&self, v: usize) -> u32 {
        let edges: u32 = (0..self.vertex_count())
            .map(|w| {
                if w == v {
                    2 * self.adjacency[v][v]
                } else {
                    self.adjacency[v][w]
                }
            })
            .sum();
        edges + self.leaves.iter().filter(|&&x| x == v).count() as u32
    }

    pub fn first_betti(&self) -> u32 {
        self.edge_count() + 1 - self.vertex_count() as u32
    }

    pub fn total_genus(&self) -> u32 {
        self.genus.iter().sum::<u32>() + self.first_betti()
    }

    /// Automorphisms fixing every leaf, as half-edge permutations.
    pub fn aut_count(&self) -> u64 {
        let v = self.vertex_count();
        let mut aut = self.vertex_symmetries;
        for i in 0..v {
            let loops = self.adjacency[i][i];
            aut *= factorial_u64(loops) << loops;
            for j in i + 1..v {
                aut *= factorial_u64(self.adjacency[i][j]);
            }
        }
        aut
    }

    /// Edges as `(v, w)` pairs with `v ≤ w`, repeated by multiplicity.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let v = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..v {
            for j in i..v {
                for _ in 0..self.adjacency[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn factorial_u64(n: u32) -> u64 {
    (1..=n as u64).product()
}

impl fmt::Display for StableGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let genus: Vec<String> = self.genus.iter().map(u32::to_string).collect();
        write!(f, "g=[{}];edges=[", genus.join(","))?;
        // half-edges are numbered per vertex: leaves first, then edge ends
        let mut next_half: Vec<usize> = (0..self.vertex_count())
            .map(|v| self.leaves.iter().filter(|&&x| x == v).count())
            .collect();
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let ha = next_half[a];
                next_half[a] += 1;
                let hb = next_half[b];
                next_half[b] += 1;
                format!("({a},{ha},{b},{hb})")
            })
            .collect();
        let leaves: Vec<String> = self.leaves.iter().map(usize::to_string).collect();
        write!(
            f,
            "{}];leaves=[{}];aut={}",
            edges.join(","),
            leaves.join(","),
            self.aut_count()
        )
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Encoding of the graph relabeled so that new vertex `i` is old `perm[i]`.
fn encode(genus: &[u32], adj: &[Vec<u32>], leaves: &[usize], perm: &[usize]) -> Vec<u32> {
    let v = genus.len();
    let mut inverse = vec![0; v];
    for (i, &p) in perm.iter().enumerate() {
        inverse[p] = i;
    }
    let mut key = Vec::with_capacity(v + v * (v + 1) / 2 + leaves.len());
    key.extend(perm.iter().map(|&p| genus[p]));
    for i in 0..v {
        for j in i..v {
            key.push(adj[perm[i]][perm[j]]);
        }
    }
    key.extend(leaves.iter().map(|&l| inverse[l] as u32));
    key
}

fn connected(adj: &[Vec<u32>]) -> bool {
    let v = adj.len();
    let mut seen = vec![false; v];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for y in 0..v {
            if !seen[y] && adj[x][y] > 0 {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn genus_vectors(len: usize, max_sum: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for h in 0..=max_sum {
        for mut rest in genus_vectors(len - 1, max_sum - h) {
            rest.insert(0, h);
            out.push(rest);
        }
    }
    out
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for x in 0..=total {
        for mut rest in compositions(total - x, parts - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn raw_enumeration(g: u32, n: u32) -> Vec<StableGraph> {
    let max_vertices = (2 * g + n - 2).max(1) as usize;
    let mut classes: Vec<StableGraph> = Vec::new();
    for v in 1..=max_vertices {
        let perms = permutations(v);
        let slots: Vec<(usize, usize)> = (0..v).flat_map(|i| (i..v).map(move |j| (i, j))).collect();
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        for genus in genus_vectors(v, g) {
            let hsum: u32 = genus.iter().sum();
            let edges = g - hsum + v as u32 - 1;
            for comp in compositions(edges, slots.len()) {
                let mut adj = vec![vec![0u32; v]; v];
                for (&(i, j), &c) in slots.iter().zip(&comp) {
                    adj[i][j] = c;
                    adj[j][i] = c;
                }
                if !connected(&adj) {
                    continue;
                }
                let edge_valence: Vec<u32> = (0..v)
                    .map(|i| (0..v).map(|j| if i == j { 2 * adj[i][i] } else { adj[i][j] }).sum())
                    .collect();
                let leaf_maps = (v as u64).pow(n);
                for code in 0..leaf_maps {
                    let mut leaves = Vec::with_capacity(n as usize);
                    let mut c = code;
                    for _ in 0..n {
                        leaves.push((c % v as u64) as usize);
                        c /= v as u64;
                    }
                    let stable = (0..v).all(|i| {
                        let k = edge_valence[i] + leaves.iter().filter(|&&x| x == i).count() as u32;
                        is_stable(genus[i], k)
                    });
                    if !stable {
                        continue;
                    }
                    let identity = encode(&genus, &adj, &leaves, &perms[0]);
                    let mut best = identity.clone();
                    let mut symmetries = 0u64;
                    for p in &perms {
                        let e = encode(&genus, &adj, &leaves, p);
                        if e == identity {
                            symmetries += 1;
                        }
                        if e < best {
                            best = e;
                        }
                    }
                    match seen.get(&best) {
                        Some(&i) => classes[i].raw_count += 1,
                        None => {
                            seen.insert(best, classes.len());
                            classes.push(StableGraph {
                                genus: genus.clone(),
                                adjacency: adj.clone(),
                                leaves,
                                vertex_symmetries: symmetries,
                                raw_count: 1,
                            });
                        }
                    }
                }
            }
        }
    }
    classes
}

type GraphCache = BTreeMap<(u32, u32), Arc<Vec<StableGraph>>>;

/// One representative per isomorphism class, ordered by vertex count and
/// then by generation order.
pub fn enumerate_stable_graphs(g: u32, n: u32) -> Result<Arc<Vec<StableGraph>>> {
    if !is_stable(g, n) {
        return Err(Error::UnstableType);
    }
    static CACHE: OnceLock<Mutex<GraphCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(g, n)) {
        return Ok(v.clone());
    }
    let graphs = Arc::new(raw_enumeration(g, n));
    cache.lock().unwrap().insert((g, n), graphs.clone());
    Ok(graphs)
}

#[derive(Clone, Copy)]
enum Slot {
    Leaf(usize),
    Half(usize, usize),
}

/// Decorated sum over one graph. Leaf decorations are accepted by `keep`,
/// and each accepted term is added at its leaf decoration.
fn graph_contribution(graph: &StableGraph, keep: &dyn Fn(&[u32]) -> bool, out: &mut BTreeMap<Vec<u32>, PiPoly>) {
    let v = graph.vertex_count();
    let edges = graph.edges();
    let mut slots: Vec<Vec<Slot>> = vec![Vec::new(); v];
    for (i, &x) in graph.leaves.iter().enumerate() {
        slots[x].push(Slot::Leaf(i));
    }
    for (e, &(a, b)) in edges.iter().enumerate() {
        slots[a].push(Slot::Half(e, 0));
        slots[b].push(Slot::Half(e, 1));
    }
    let k = kontsevich::global();
    // per vertex: the decorations meeting its dimension, with their weights
    let options: Vec<Vec<(Vec<u32>, Rational)>> = (0..v)
        .map(|x| {
            let dim = dimension(graph.genus[x], slots[x].len() as u32).unwrap();
            compositions(dim, slots[x].len())
                .into_iter()
                .filter_map(|c| {
                    let w = k.coeff(graph.genus[x], &c);
                    (w != int(0)).then_some((c, w))
                })
                .collect()
        })
        .collect();
    let inv_aut = Rational::new(1.into(), graph.aut_count().into());
    let n = graph.leaves.len();
    let mut choice = vec![0usize; v];
    if options.iter().any(Vec::is_empty) {
        return;
    }
    loop {
        let mut leaf_dec = vec![0u32; n];
        let mut half_dec = vec![[0u32; 2]; edges.len()];
        let mut weight = inv_aut.clone();
        for x in 0..v {
            let (dec, w) = &options[x][choice[x]];
            weight *= w;
            for (s, &d) in slots[x].iter().zip(dec) {
                match *s {
                    Slot::Leaf(i) => leaf_dec[i] = d,
                    Slot::Half(e, side) => half_dec[e][side] = d,
                }
            }
        }
        if keep(&leaf_dec) {
            let mut term = PiPoly::from_rational(weight);
            for h in &half_dec {
                term = &term * &twist_weight(h[0], h[1]);
            }
            *out.entry(leaf_dec).or_default() += term;
        }
        // odometer over vertex choices
        let mut x = 0;
        loop {
            if x == v {
                return;
            }
            choice[x] += 1;
            if choice[x] < options[x].len() {
                break;
            }
            choice[x] = 0;
            x += 1;
        }
    }
}

/// `VΩ^{MV}_{g,n}` as a sum over stable graphs.
pub fn mv_polynomial_via_graphs(g: u32, n: u32) -> Result<EvenPolynomial> {
    let graphs = enumerate_stable_graphs(g, n)?;
    let mut acc = BTreeMap::new();
    let descending = |d: &[u32]| d.windows(2).all(|w| w[0] >= w[1]);
    for graph in graphs.iter() {
        graph_contribution(graph, &descending, &mut acc);
    }
    let mut poly = EvenPolynomial::zero(g, n);
    for (d, value) in acc {
        poly.add(&d, &value);
    }
    Ok(poly)
}

/// `H*_{g,n}[d] = F_{g,n}[3g-3+n-d, 0, …, 0]`, summing only graphs with at
/// most `d` edges.
pub fn leading_coefficient(g: u32, n: u32, d: u32) -> Result<PiPoly> {
    let dim = dimension(g, n).ok_or(Error::UnstableType)?;
    if n == 0 || d > dim {
        return Ok(PiPoly::zero());
    }
    let mut target = vec![0u32; n as usize];
    target[0] = dim - d;
    let graphs = enumerate_stable_graphs(g, n)?;
    let mut acc = BTreeMap::new();
    let keep = |x: &[u32]| x == target.as_slice();
    for graph in graphs.iter().filter(|gr| gr.edge_count() <= d) {
        graph_contribution(graph, &keep, &mut acc);
    }
    Ok(acc.remove(&target).unwrap_or_default())
}

/// Number of labeled structures the raw generator produces with `v` vertices.
pub fn labeled_total(graphs: &[StableGraph], v: usize) -> u64 {
    graphs
        .iter()
        .filter(|g| g.vertex_count() == v)
        .map(|g| g.raw_count)
        .sum()
}

pub fn vertex_orbit_size(graph: &StableGraph) -> u64 {
    let v = graph.vertex_count() as u32;
    let total = factorial(v);
    (total / graph.vertex_symmetries).try_into().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::virasoro::mv_polynomial;

    #[test]
    fn small_enumerations() {
        let g03 = enumerate_stable_graphs(0, 3).unwrap();
        assert_eq!(g03.len(), 1);
        assert_eq!(g03[0].aut_count(), 1);

        let g11 = enumerate_stable_graphs(1, 1).unwrap();
        let mut auts: Vec<u64> = g11.iter().map(StableGraph::aut_count).collect();
        auts.sort();
        assert_eq!(auts, vec![1, 2]);

        let g04 = enumerate_stable_graphs(0, 4).unwrap();
        assert_eq!(g04.len(), 4);
        assert!(g04.iter().all(|x| x.aut_count() == 1));

        assert!(enumerate_stable_graphs(0, 2).is_err());
    }

    #[test]
    fn double_edge_has_aut_two() {
        let g12 = enumerate_stable_graphs(1, 2).unwrap();
        let double = g12
            .iter()
            .find(|x| x.vertex_count() == 2 && x.adjacency[0][1] == 2)
            .unwrap();
        assert_eq!(double.aut_count(), 2);
    }

    #[test]
    fn known_class_counts() {
        assert_eq!(enumerate_stable_graphs(1, 2).unwrap().len(), 5);
        assert_eq!(enumerate_stable_graphs(2, 0).unwrap().len(), 7);
        assert_eq!(enumerate_stable_graphs(0, 5).unwrap().len(), 26);
    }

    #[test]
    fn per_graph_identities() {
        for (g, n) in [(0, 5), (1, 3), (2, 1), (2, 0), (1, 2)] {
            for gr in enumerate_stable_graphs(g, n).unwrap().iter() {
                assert_eq!(gr.total_genus(), g);
                let dims: u32 = (0..gr.vertex_count())
                    .map(|v| dimension(gr.genus[v], gr.valence(v)).unwrap())
                    .sum();
                assert_eq!(dims + gr.edge_count(), dimension(g, n).unwrap());
            }
        }
    }

    #[test]
    fn orbit_counting() {
        for (g, n) in [(0, 4), (0, 5), (0, 6), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1)] {
            let graphs = enumerate_stable_graphs(g, n).unwrap();
            for gr in graphs.iter() {
                assert_eq!(
                    gr.raw_count * gr.vertex_symmetries,
                    factorial_u64(gr.vertex_count() as u32)
                );
            }
            for v in 1..=4 {
                let classes: u64 = graphs
                    .iter()
                    .filter(|x| x.vertex_count() == v)
                    .map(vertex_orbit_size)
                    .sum();
                assert_eq!(classes, labeled_total(&graphs, v));
            }
        }
    }

    #[test]
    fn small_graph_sums() {
        let p11 = mv_polynomial_via_graphs(1, 1).unwrap();
        assert_eq!(p11, mv_polynomial(1, 1).unwrap());
        let p04 = mv_polynomial_via_graphs(0, 4).unwrap();
        assert_eq!(p04.coeff(&[0, 0, 0, 0]), PiPoly::monomial(rat(1, 2), 1));
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(leading_coefficient(0, 5, 0).unwrap(), PiPoly::from_rational(int(15)));
        assert_eq!(leading_coefficient(0, 5, 1).unwrap(), PiPoly::monomial(int(3), 1));
        assert_eq!(leading_coefficient(1, 1, 0).unwrap(), PiPoly::from_rational(rat(1, 8)));
    }

    #[test]
    fn display_format() {
        let g11 = enumerate_stable_graphs(1, 1).unwrap();
        let lines: Vec<String> = g11.iter().map(|x| x.to_string()).collect();
        assert!(lines.contains(&"g=[0];edges=[(0,1,0,2)];leaves=[0];aut=2".to_string()));
        assert!(lines.contains(&"g=[1];edges=[];leaves=[0];aut=1".to_string()));
    }
}
