//! Noncrossing set partitions and matchings, and their bijections with
//! two-row tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraphs::PromotionDigraph;
use crate::tableaux::{
    IncreasingTableau, Partition, RotatedAlphabet, StandardTableau, Tableau, TableauError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NoncrossingError {
    #[error("blocks do not partition [1, {0}]")]
    NotAPartition(u32),
    #[error("blocks containing {0} and {1} cross")]
    Crossing(u32, u32),
    #[error("expected a two-row rectangular tableau, got shape {0:?}")]
    NotTwoRowRectangle(Vec<usize>),
    #[error("no noncrossing partition has this row pattern: {0}")]
    NoValidPartition(String),
    #[error("{blocks} blocks cannot come from {cols} columns over [1, {q}]")]
    BlockCountMismatch { q: u32, cols: usize, blocks: usize },
    #[error("the block containing 1 is a singleton")]
    SingletonFirstBlock,
    #[error("not a perfect matching: block {0:?}")]
    NotAMatching(Vec<u32>),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// Noncrossing set partition of `[1, q]`; each block ascending, blocks
/// ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct NoncrossingSetPartition {
    q: u32,
    blocks: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    q: u32,
    blocks: Vec<Vec<u32>>,
}

impl TryFrom<PartitionJson> for NoncrossingSetPartition {
    type Error = NoncrossingError;
    fn try_from(j: PartitionJson) -> Result<Self, Self::Error> {
        NoncrossingSetPartition::new(j.q, j.blocks)
    }
}

impl From<NoncrossingSetPartition> for PartitionJson {
    fn from(p: NoncrossingSetPartition) -> Self {
        PartitionJson {
            q: p.q,
            blocks: p.blocks,
        }
    }
}

impl NoncrossingSetPartition {
    pub fn new(q: u32, mut blocks: Vec<Vec<u32>>) -> Result<Self, NoncrossingError> {
        let mut owner = vec![usize::MAX; q as usize + 1];
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        for (k, block) in blocks.iter().enumerate() {
            for &x in block {
                if x == 0 || x > q || owner[x as usize] != usize::MAX {
                    return Err(NoncrossingError::NotAPartition(q));
                }
                owner[x as usize] = k;
            }
        }
        if owner[1..].contains(&usize::MAX) {
            return Err(NoncrossingError::NotAPartition(q));
        }
        // Scan left to right; a block may only continue while it is innermost.
        let mut open: Vec<usize> = Vec::new();
        for x in 1..=q {
            let k = owner[x as usize];
            let block = &blocks[k];
            if block.len() == 1 {
                continue;
            }
            if x == block[0] {
                open.push(k);
                continue;
            }
            match open.last() {
                Some(&top) if top == k => {}
                Some(&top) => {
                    let (a, b) = (blocks[top][0], block[0]);
                    return Err(NoncrossingError::Crossing(a.min(b), a.max(b)));
                }
                None => unreachable!("a block's minimum is scanned before its other elements"),
            }
            if x == *block.last().unwrap() {
                open.pop();
            }
        }
        Ok(NoncrossingSetPartition { q, blocks })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: u32) -> &[u32] {
        self.blocks.iter().find(|b| b.contains(&x)).expect("element of [1, q]")
    }

    pub fn singletons(&self) -> impl Iterator<Item = u32> + '_ {
        self.blocks.iter().filter(|b| b.len() == 1).map(|b| b[0])
    }
}

impl fmt::Display for NoncrossingSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Noncrossing perfect matching of `[1, 2c]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NoncrossingSetPartition", into = "NoncrossingSetPartition")]
pub struct NoncrossingMatching(NoncrossingSetPartition);

impl TryFrom<NoncrossingSetPartition> for NoncrossingMatching {
    type Error = NoncrossingError;
    fn try_from(p: NoncrossingSetPartition) -> Result<Self, Self::Error> {
        NoncrossingMatching::from_partition(p)
    }
}

impl From<NoncrossingMatching> for NoncrossingSetPartition {
    fn from(m: NoncrossingMatching) -> Self {
        m.0
    }
}

impl NoncrossingMatching {
    pub fn from_partition(p: NoncrossingSetPartition) -> Result<Self, NoncrossingError> {
        if let Some(b) = p.blocks.iter().find(|b| b.len() != 2) {
            return Err(NoncrossingError::NotAMatching(b.clone()));
        }
        Ok(NoncrossingMatching(p))
    }

    pub fn new(n: u32, pairs: &[(u32, u32)]) -> Result<Self, NoncrossingError> {
        let blocks = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
        Self::from_partition(NoncrossingSetPartition::new(n, blocks)?)
    }

    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.0.blocks.iter().map(|b| (b[0], b[1])).collect()
    }

    pub fn as_partition(&self) -> &NoncrossingSetPartition {
        &self.0
    }
}

fn two_row_columns(shape: &Partition) -> Result<usize, NoncrossingError> {
    match shape.parts() {
        [] => Ok(0),
        [a, b] if a == b => Ok(*a),
        parts => Err(NoncrossingError::NotTwoRowRectangle(parts.to_vec())),
    }
}

/// Matches each `1` of the lattice word with the nearest unmatched `2` after it.
pub fn tograph(t: &StandardTableau) -> Result<NoncrossingMatching, NoncrossingError> {
    two_row_columns(t.shape())?;
    let word = t.lattice_word()?;
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (j, letter) in word.letters().iter().enumerate() {
        let j = j as u32 + 1;
        if letter.contains(1) {
            stack.push(j);
        } else {
            pairs.push((stack.pop().expect("lattice word"), j));
        }
    }
    NoncrossingMatching::new(word.len() as u32, &pairs)
}

/// Inverse of [`tograph`]: openers form the top row, closers the bottom row.
pub fn tograph_inverse(m: &NoncrossingMatching) -> Result<StandardTableau, NoncrossingError> {
    let pairs = m.pairs();
    let top: Vec<u32> = pairs.iter().map(|p| p.0).collect();
    let mut bottom: Vec<u32> = pairs.iter().map(|p| p.1).collect();
    bottom.sort_unstable();
    let mut top = top;
    top.sort_unstable();
    let c = top.len();
    Ok(StandardTableau::new(
        Partition::rectangle(2, c),
        vec![top, bottom],
        RotatedAlphabet::canonical(m.0.q),
    )?)
}

/// Role of a value in a two-row increasing tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Absent,
    TopOnly,
    BottomOnly,
    Both,
}

/// Noncrossing partition of `[1, q]` attached to `T ∈ Inc^q(2×c)`: absent
/// values are singletons, top-only values open blocks, bottom-only values
/// close them and values in both rows sit inside.
pub fn pi_bijection(t: &IncreasingTableau) -> Result<NoncrossingSetPartition, NoncrossingError> {
    two_row_columns(t.shape())?;
    if !t.alphabet().is_canonical() {
        return Err(TableauError::NonCanonicalAlphabet(t.alphabet().offset()).into());
    }
    let q = t.q();
    let rows = t.rows();
    let in_row = |r: usize, v: u32| rows.get(r).is_some_and(|row| row.binary_search(&v).is_ok());
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for v in 1..=q {
        let role = match (in_row(0, v), in_row(1, v)) {
            (false, false) => Role::Absent,
            (true, false) => Role::TopOnly,
            (false, true) => Role::BottomOnly,
            (true, true) => Role::Both,
        };
        match role {
            Role::Absent => blocks.push(vec![v]),
            Role::TopOnly => {
                open.push(blocks.len());
                blocks.push(vec![v]);
            }
            Role::Both | Role::BottomOnly => {
                let Some(&k) = open.last() else {
                    return Err(NoncrossingError::NoValidPartition(format!(
                        "{v} continues a block but none is open"
                    )));
                };
                blocks[k].push(v);
                if role == Role::BottomOnly {
                    open.pop();
                }
            }
        }
    }
    if !open.is_empty() {
        return Err(NoncrossingError::NoValidPartition(
            "some blocks are never closed".into(),
        ));
    }
    NoncrossingSetPartition::new(q, blocks)
}

/// Two-row increasing tableau with `c` columns whose partition is `p`.
pub fn pi_inverse(
    p: &NoncrossingSetPartition,
    c: usize,
) -> Result<IncreasingTableau, NoncrossingError> {
    let q = p.q;
    if p.block_count() + c != q as usize {
        return Err(NoncrossingError::BlockCountMismatch {
            q,
            cols: c,
            blocks: p.block_count(),
        });
    }
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for block in p.blocks.iter().filter(|b| b.len() > 1) {
        let (first, rest) = block.split_first().unwrap();
        let (last, middle) = rest.split_last().unwrap();
        top.push(*first);
        bottom.push(*last);
        top.extend_from_slice(middle);
        bottom.extend_from_slice(middle);
    }
    top.sort_unstable();
    bottom.sort_unstable();
    Ok(IncreasingTableau::new(
        Partition::rectangle(2, c),
        if c == 0 { Vec::new() } else { vec![top, bottom] },
        RotatedAlphabet::canonical(q),
    )?)
}

/// Relabels every element `x -> x - 1`, with `1 -> q`.
pub fn rotate_partition(p: &NoncrossingSetPartition) -> NoncrossingSetPartition {
    let q = p.q;
    let blocks = p
        .blocks
        .iter()
        .map(|b| b.iter().map(|&x| if x == 1 { q } else { x - 1 }).collect())
        .collect();
    NoncrossingSetPartition::new(q, blocks).expect("rotation preserves noncrossing")
}

/// The block containing 1, split into its largest element and the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstBlock {
    pub block: Vec<u32>,
    pub balance: u32,
    pub teetering: Vec<u32>,
}

pub fn first_block_analysis(p: &NoncrossingSetPartition) -> Result<FirstBlock, NoncrossingError> {
    let block = p.block_of(1).to_vec();
    if block.len() == 1 {
        return Err(NoncrossingError::SingletonFirstBlock);
    }
    let balance = *block.last().unwrap();
    let teetering = block[1..block.len() - 1].to_vec();
    Ok(FirstBlock {
        block,
        balance,
        teetering,
    })
}

/// Complete digraph on each block of size at least two.
pub fn blocks_to_complete_digraphs(p: &NoncrossingSetPartition) -> PromotionDigraph {
    let mut edges = Vec::new();
    for b in &p.blocks {
        for &x in b {
            for &y in b {
                if x != y {
                    edges.push((x, y));
                }
            }
        }
    }
    PromotionDigraph::new(p.q, 1, edges).expect("edges within [1, q]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraphs::promotion_digraph;
    use crate::promotion::k_promote;

    fn inc(rows: Vec<Vec<u32>>, q: u32) -> IncreasingTableau {
        IncreasingTableau::from_rows(rows, q).unwrap()
    }

    #[test]
    fn crossing_is_rejected() {
        assert_eq!(
            NoncrossingSetPartition::new(4, vec![vec![1, 3], vec![2, 4]]),
            Err(NoncrossingError::Crossing(1, 2))
        );
        assert!(NoncrossingSetPartition::new(4, vec![vec![1, 4], vec![2, 3]]).is_ok());
        assert_eq!(
            NoncrossingSetPartition::new(3, vec![vec![1, 2]]),
            Err(NoncrossingError::NotAPartition(3))
        );
        assert_eq!(
            NoncrossingSetPartition::new(3, vec![vec![1, 2], vec![2, 3]]),
            Err(NoncrossingError::NotAPartition(3))
        );
    }

    #[test]
    fn blocks_are_normalized() {
        let p = NoncrossingSetPartition::new(5, vec![vec![4, 2, 3], vec![5], vec![1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![1], vec![2, 3, 4], vec![5]]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"q":5,"blocks":[[1],[2,3,4],[5]]}"#
        );
    }

    #[test]
    fn tograph_example() {
        let t = StandardTableau::from_rows(vec![vec![1, 2, 4, 6], vec![3, 5, 7, 8]]).unwrap();
        let m = tograph(&t).unwrap();
        assert_eq!(m.pairs(), vec![(1, 8), (2, 3), (4, 5), (6, 7)]);
        assert_eq!(tograph_inverse(&m).unwrap(), t);
    }

    #[test]
    fn pi_of_two_row_tableau() {
        let u = inc(
            vec![vec![1, 2, 3, 5, 6, 8, 9, 12], vec![3, 4, 5, 7, 8, 10, 11, 13]],
            13,
        );
        let p = pi_bijection(&u).unwrap();
        assert_eq!(
            p.blocks(),
            &[vec![1, 5, 8, 11], vec![2, 3, 4], vec![6, 7], vec![9, 10], vec![12, 13]]
        );
        assert_eq!(p.block_count(), 13 - 8);
        assert_eq!(pi_inverse(&p, 8).unwrap(), u);
        let fb = first_block_analysis(&p).unwrap();
        assert_eq!(fb.balance, 11);
        assert_eq!(fb.teetering, vec![5, 8]);
        assert_eq!(
            promotion_digraph(&u, 1).unwrap(),
            blocks_to_complete_digraphs(&p)
        );
    }

    #[test]
    fn pi_commutes_with_rotation() {
        let u = inc(
            vec![vec![1, 2, 3, 5, 6, 8, 9, 12], vec![3, 4, 5, 7, 8, 10, 11, 13]],
            13,
        );
        let pu = k_promote(&u);
        assert_eq!(
            pi_bijection(&pu).unwrap(),
            rotate_partition(&pi_bijection(&u).unwrap())
        );
    }

    #[test]
    fn pi_handles_absent_values_and_empty_shape() {
        let t = inc(vec![vec![2], vec![4]], 5);
        let p = pi_bijection(&t).unwrap();
        assert_eq!(p.blocks(), &[vec![1], vec![2, 4], vec![3], vec![5]]);
        let empty = IncreasingTableau::from_rows(vec![], 3).unwrap();
        let p = pi_bijection(&empty).unwrap();
        assert_eq!(p.block_count(), 3);
        assert_eq!(pi_inverse(&p, 0).unwrap(), empty);
    }

    #[test]
    fn pi_inverse_checks_block_count() {
        let p = NoncrossingSetPartition::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert!(matches!(
            pi_inverse(&p, 1),
            Err(NoncrossingError::BlockCountMismatch { .. })
        ));
    }

    #[test]
    fn singleton_first_block() {
        let p = NoncrossingSetPartition::new(3, vec![vec![1], vec![2, 3]]).unwrap();
        assert_eq!(first_block_analysis(&p), Err(NoncrossingError::SingletonFirstBlock));
    }

    #[test]
    fn non_two_row_shapes_are_rejected() {
        let t = inc(vec![vec![1, 2], vec![2]], 3);
        assert!(matches!(
            pi_bijection(&t),
            Err(NoncrossingError::NotTwoRowRectangle(_))
        ));
    }
}
