//! Promotion digraphs and the reconstruction of tableaux from them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::promotion::Promotable;
use crate::tableaux::{
    IncreasingTableau, Partition, RotatedAlphabet, StandardTableau, Symbol, Tableau, TableauError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("edge {0}->{1} leaves the vertex set [1, {2}]")]
    VertexOutOfRange(u32, u32, u32),
    #[error("row index {index} must lie in 1..{rows}")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("digraphs are inconsistent: {0}")]
    InconsistentDigraphs(String),
    #[error("digraphs do not come from a {rows}x{cols} rectangular tableau: {reason}")]
    NotRectangularWitness {
        rows: usize,
        cols: usize,
        reason: String,
    },
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// Digraph on `[1, n]` attached to a row pair `(i, i+1)`.
///
/// Equality compares only `n` and the edge set.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "DigraphJson", into = "DigraphJson")]
pub struct PromotionDigraph {
    n: u32,
    index: usize,
    edges: Vec<(u32, u32)>,
    out_adj: Vec<Vec<u32>>,
    in_adj: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: u32,
    i: usize,
    edges: Vec<[u32; 2]>,
}

impl TryFrom<DigraphJson> for PromotionDigraph {
    type Error = DigraphError;
    fn try_from(j: DigraphJson) -> Result<Self, Self::Error> {
        PromotionDigraph::new(j.n, j.i, j.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<PromotionDigraph> for DigraphJson {
    fn from(d: PromotionDigraph) -> Self {
        DigraphJson {
            n: d.n,
            i: d.index,
            edges: d.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl PartialEq for PromotionDigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for PromotionDigraph {}

impl std::hash::Hash for PromotionDigraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl PromotionDigraph {
    pub fn new(
        n: u32,
        index: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, DigraphError> {
        let set: BTreeSet<(u32, u32)> = edges.into_iter().collect();
        if let Some(&(a, b)) = set
            .iter()
            .find(|&&(a, b)| a == 0 || b == 0 || a > n || b > n)
        {
            return Err(DigraphError::VertexOutOfRange(a, b, n));
        }
        let mut out_adj = vec![Vec::new(); n as usize + 1];
        let mut in_adj = vec![Vec::new(); n as usize + 1];
        for &(a, b) in &set {
            out_adj[a as usize].push(b);
            in_adj[b as usize].push(a);
        }
        for v in &mut in_adj {
            v.sort_unstable();
        }
        Ok(PromotionDigraph {
            n,
            index,
            edges: set.into_iter().collect(),
            out_adj,
            in_adj,
        })
    }

    pub fn empty(n: u32, index: usize) -> Self {
        PromotionDigraph::new(n, index, []).unwrap()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn with_index(mut self, index: usize) -> Self {
        self.index = index;
        self
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn successors(&self, v: u32) -> &[u32] {
        &self.out_adj[v as usize]
    }

    pub fn predecessors(&self, v: u32) -> &[u32] {
        &self.in_adj[v as usize]
    }

    pub fn out_degree(&self, v: u32) -> usize {
        self.out_adj[v as usize].len()
    }

    pub fn in_degree(&self, v: u32) -> usize {
        self.in_adj[v as usize].len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<u32> {
        1..=self.n
    }

    /// Vertices `j` with an edge `i -> j` for some `i < j`.
    pub fn excedances(&self) -> BTreeSet<u32> {
        self.edges
            .iter()
            .filter(|&&(a, b)| a < b)
            .map(|&(_, b)| b)
            .collect()
    }

    pub fn reversed(&self) -> Self {
        PromotionDigraph::new(self.n, self.index, self.edges.iter().map(|&(a, b)| (b, a))).unwrap()
    }

    /// The permutation `v -> successor(v)` when every vertex has exactly one
    /// outgoing and one incoming edge.
    pub fn as_permutation(&self) -> Option<Vec<u32>> {
        if self
            .vertices()
            .any(|v| self.out_degree(v) != 1 || self.in_degree(v) != 1)
        {
            return None;
        }
        Some(self.vertices().map(|v| self.out_adj[v as usize][0]).collect())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph prom_{} {{", self.index);
        for v in self.vertices() {
            let _ = writeln!(s, "  {v};");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  {a} -> {b};");
        }
        s.push_str("}\n");
        s
    }
}

/// Relabels `a -> b` as `a-1 -> b-1`, cyclically in `[1, n]`.
pub fn rotate_digraph(d: &PromotionDigraph) -> PromotionDigraph {
    let n = d.n;
    let dec = |v: u32| if v == 1 { n } else { v - 1 };
    PromotionDigraph::new(n, d.index, d.edges.iter().map(|&(a, b)| (dec(a), dec(b)))).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDegree {
    pub vertex: u32,
    pub indegree: usize,
    pub outdegree: usize,
}

pub fn degree_profile(d: &PromotionDigraph) -> Vec<VertexDegree> {
    d.vertices()
        .map(|v| VertexDegree {
            vertex: v,
            indegree: d.in_degree(v),
            outdegree: d.out_degree(v),
        })
        .collect()
}

/// If the digraph is a disjoint union of complete digraphs (on its
/// non-isolated vertices), returns their vertex sets ordered by minimum.
pub fn is_union_of_complete_digraphs(d: &PromotionDigraph) -> Option<Vec<Vec<u32>>> {
    let n = d.n as usize;
    let mut comp = vec![usize::MAX; n + 1];
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for start in d.vertices() {
        if comp[start as usize] != usize::MAX || (d.out_degree(start) == 0 && d.in_degree(start) == 0)
        {
            continue;
        }
        let id = blocks.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        comp[start as usize] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in d.successors(v).iter().chain(d.predecessors(v)) {
                if comp[w as usize] == usize::MAX {
                    comp[w as usize] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        blocks.push(members);
    }
    for block in &blocks {
        let k = block.len();
        if block.iter().any(|&v| d.out_degree(v) != k - 1) {
            return None;
        }
        for &a in block {
            for &b in block {
                if a != b && !d.has_edge(a, b) {
                    return None;
                }
            }
        }
    }
    Some(blocks)
}

fn check_canonical<T: Tableau>(t: &T) -> Result<(), DigraphError> {
    if t.alphabet().is_canonical() {
        Ok(())
    } else {
        Err(TableauError::NonCanonicalAlphabet(t.alphabet().offset()).into())
    }
}

/// `prom_i(t)` for every `1 ≤ i < ℓ(λ)`, from one pass over the gromotion orbit.
pub fn promotion_digraphs<T: Promotable>(t: &T) -> Result<Vec<PromotionDigraph>, DigraphError> {
    check_canonical(t)?;
    let n = t.q();
    let rows = t.shape().length();
    let mut edges: Vec<Vec<(u32, u32)>> = vec![Vec::new(); rows.saturating_sub(1)];
    let mut cur = t.clone();
    for alpha in 1..=n {
        let g = cur.gromote();
        for e in &g.events {
            edges[e.from_row - 2].push((alpha, e.value));
        }
        cur = g.tableau;
    }
    Ok(edges
        .into_iter()
        .enumerate()
        .map(|(k, es)| PromotionDigraph::new(n, k + 1, es).unwrap())
        .collect())
}

/// `prom_i(t)`: an edge `α -> β` whenever `β` moves from row `i+1` to row
/// `i` during the `α`-th gromotion.
pub fn promotion_digraph<T: Promotable>(t: &T, i: usize) -> Result<PromotionDigraph, DigraphError> {
    let rows = t.shape().length();
    if i == 0 || i >= rows.max(1) {
        check_canonical(t)?;
        if i == 0 {
            return Err(DigraphError::IndexOutOfRange { index: i, rows });
        }
        return Ok(PromotionDigraph::empty(t.q(), i));
    }
    Ok(promotion_digraphs(t)?.swap_remove(i - 1))
}

fn expect_digraphs(
    digraphs: &[PromotionDigraph],
    count: usize,
    n: u32,
) -> Result<(), DigraphError> {
    if digraphs.len() != count {
        return Err(DigraphError::InconsistentDigraphs(format!(
            "expected {count} digraphs, got {}",
            digraphs.len()
        )));
    }
    if let Some(d) = digraphs.iter().find(|d| d.n() != n) {
        return Err(DigraphError::InconsistentDigraphs(format!(
            "digraph on {} vertices where {n} were expected",
            d.n()
        )));
    }
    Ok(())
}

/// Rebuilds a standard tableau of the given shape from `prom_1, …, prom_{ℓ-1}`:
/// `v` lies in row `i` for the least `i` such that `v` is not an excedance
/// of `prom_i` (and in the last row if there is none).
pub fn reconstruct_standard(
    digraphs: &[PromotionDigraph],
    shape: &Partition,
) -> Result<StandardTableau, DigraphError> {
    let n = shape.size() as u32;
    let l = shape.length();
    if n == 0 {
        return Err(TableauError::InvalidShape(Vec::new()).into());
    }
    expect_digraphs(digraphs, l - 1, n)?;
    let exc: Vec<BTreeSet<u32>> = digraphs.iter().map(PromotionDigraph::excedances).collect();
    let mut rows = vec![Vec::new(); l];
    for v in 1..=n {
        let r = (0..l - 1).find(|&i| !exc[i].contains(&v)).unwrap_or(l - 1);
        rows[r].push(v);
    }
    let t = StandardTableau::new(shape.clone(), rows, RotatedAlphabet::canonical(n)).map_err(
        |e| DigraphError::InconsistentDigraphs(format!("rows do not form a tableau: {e}")),
    )?;
    if promotion_digraphs(&t)? != digraphs {
        return Err(DigraphError::InconsistentDigraphs(
            "recomputed digraphs differ from the input".into(),
        ));
    }
    Ok(t)
}

/// Rebuilds an increasing tableau of rectangular shape `r × c` over `[1, q]`
/// from `prom_1, …, prom_{r-1}`, working from the bottom row up.
pub fn reconstruct_rect_increasing(
    digraphs: &[PromotionDigraph],
    r: usize,
    c: usize,
    q: u32,
) -> Result<IncreasingTableau, DigraphError> {
    let witness = |reason: String| DigraphError::NotRectangularWitness {
        rows: r,
        cols: c,
        reason,
    };
    if r < 2 || c == 0 || q == 0 {
        return Err(witness(
            "need at least two rows, one column and a nonempty alphabet".into(),
        ));
    }
    expect_digraphs(digraphs, r - 1, q)?;
    let d = |i: usize| &digraphs[i - 1];
    // Values absent from the tableau are exactly the vertices without out-edges.
    let present: BTreeSet<u32> = (1..=q).filter(|&v| d(1).out_degree(v) > 0).collect();
    // below[k] = values occurring in the bottom k rows.
    let mut below: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); r + 1];
    for k in 1..r {
        below[k] = d(r - k).excedances();
    }
    below[r] = present;
    // Row `r - k` holds the values new to `below[k + 1]`, plus some of
    // `below[k]`. For `v` in `below[k]` with `t` the least tail of an arrow
    // into `v` in `prom_{r-k}`: an arrow `t' -> v` with `t' < t` one row up
    // proves `v` is in the row; otherwise `v` can only be in the row if `t`
    // also sends a larger value up. That second test is necessary but not
    // sufficient (several values can rise into the row in one step), so the
    // undecided values are settled by search against the digraphs.
    let mut definite: Vec<Vec<Symbol>> = vec![Vec::new(); r];
    let mut undecided: Vec<Vec<Symbol>> = vec![Vec::new(); r];
    definite[r - 1] = below[1].iter().copied().collect();
    for k in 1..r {
        let row = r - k;
        let dk = d(row);
        let mut sure: BTreeSet<u32> = below[k + 1].difference(&below[k]).copied().collect();
        for &v in &below[k] {
            let Some(&t) = dk.predecessors(v).first() else {
                continue;
            };
            if row > 1 && d(row - 1).predecessors(v).iter().any(|&s| s < t) {
                sure.insert(v);
            } else if dk.successors(t).iter().any(|&w| w > v) {
                undecided[row - 1].push(v);
            }
        }
        definite[row - 1] = sure.into_iter().collect();
    }
    let mut search = RowSearch {
        digraphs,
        definite: &definite,
        undecided: &undecided,
        c,
        q,
        rows: vec![Vec::new(); r],
        found: Vec::new(),
    };
    search.fill(r - 1)?;
    match search.found.len() {
        1 => Ok(search.found.pop().unwrap()),
        0 => Err(witness("no rectangular tableau has these digraphs".into())),
        _ => Err(DigraphError::InconsistentDigraphs(
            "several rectangular tableaux share these digraphs".into(),
        )),
    }
}

struct RowSearch<'a> {
    digraphs: &'a [PromotionDigraph],
    definite: &'a [Vec<Symbol>],
    undecided: &'a [Vec<Symbol>],
    c: usize,
    q: u32,
    rows: Vec<Vec<Symbol>>,
    found: Vec<IncreasingTableau>,
}

impl RowSearch<'_> {
    /// Chooses rows from the bottom (`row` is 0-based) up; stops after a
    /// second match, which already shows the digraphs are ambiguous.
    fn fill(&mut self, row: usize) -> Result<(), DigraphError> {
        let need = self.c as isize - self.definite[row].len() as isize;
        let pool = &self.undecided[row];
        if need < 0 || need as usize > pool.len() {
            return Ok(());
        }
        let mut pick: Vec<usize> = (0..need as usize).collect();
        loop {
            let mut content: Vec<Symbol> = self.definite[row].clone();
            content.extend(pick.iter().map(|&i| pool[i]));
            content.sort_unstable();
            let fits = row + 1 == self.rows.len()
                || content.iter().zip(&self.rows[row + 1]).all(|(a, b)| a < b);
            if fits {
                self.rows[row] = content;
                if row == 0 {
                    self.check_leaf()?;
                } else {
                    self.fill(row - 1)?;
                }
                if self.found.len() > 1 {
                    return Ok(());
                }
            }
            if !next_combination(&mut pick, pool.len()) {
                return Ok(());
            }
        }
    }

    fn check_leaf(&mut self) -> Result<(), DigraphError> {
        let shape = Partition::rectangle(self.rows.len(), self.c);
        let Ok(t) = IncreasingTableau::new(shape, self.rows.clone(), RotatedAlphabet::canonical(self.q))
        else {
            return Ok(());
        };
        if promotion_digraphs(&t)? == self.digraphs {
            self.found.push(t);
        }
        Ok(())
    }
}

/// Advances `pick` to the next `pick.len()`-subset of `0..n` in
/// lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let m = pick.len();
    for i in (0..m).rev() {
        if pick[i] < n - m + i {
            pick[i] += 1;
            for j in i + 1..m {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Groups tableaux by their tuple of promotion digraphs, keeping only the
/// groups with more than one member.
pub fn collision_classes<T: Promotable>(
    tableaux: impl IntoIterator<Item = T>,
) -> Result<Vec<Vec<T>>, DigraphError> {
    let mut groups: BTreeMap<Vec<Vec<(u32, u32)>>, Vec<T>> = BTreeMap::new();
    for t in tableaux {
        let key = promotion_digraphs(&t)?
            .into_iter()
            .map(|d| d.edges)
            .collect();
        groups.entry(key).or_default().push(t);
    }
    Ok(groups.into_values().filter(|g| g.len() > 1).collect())
}
