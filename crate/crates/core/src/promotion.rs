//! Jeu-de-taquin promotion and gromotion of standard tableaux, K-promotion
//! and K-gromotion of increasing tableaux, and the lattice-word shortcuts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tableaux::{
    IncreasingTableau, LatticeWord, RotatedAlphabet, RowSet, StandardTableau, Symbol, Tableau,
    TableauError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PromotionError {
    #[error("promotion order exceeds the bound {0}")]
    OrderExceedsBound(usize),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

/// During one gromotion, `value` slid from row `from_row` up into row `from_row - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GromotionEvent {
    pub value: Symbol,
    pub from_row: usize,
}

/// Boxes (1-based `(row, col)`) traversed by the vacated cell, with the
/// covering relation between consecutive boxes.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FlowPath {
    pub boxes: Vec<(usize, usize)>,
    pub covers: Vec<((usize, usize), (usize, usize))>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gromotion<T> {
    pub tableau: T,
    pub events: Vec<GromotionEvent>,
    pub flow_path: FlowPath,
}

pub trait Promotable: Tableau + Clone + Eq + Sized {
    fn promote(&self) -> Self;
    fn gromote(&self) -> Gromotion<Self>;
}

type Cells = Vec<Vec<Option<u32>>>;

struct Slide {
    cells: Cells,
    events: Vec<(u32, usize)>,
}

fn to_cells(ranks: &[Vec<u32>]) -> Cells {
    ranks
        .iter()
        .map(|row| row.iter().map(|&x| Some(x)).collect())
        .collect()
}

/// Classic single-cell slide; returns the trajectory of the empty cell.
fn jdt_slide(ranks: &[Vec<u32>]) -> (Slide, Vec<(usize, usize)>) {
    let mut cells = to_cells(ranks);
    let mut events = Vec::new();
    let (mut r, mut c) = (0, 0);
    let mut path = vec![(0, 0)];
    cells[0][0] = None;
    loop {
        let right = cells[r].get(c + 1).copied().flatten();
        let down = cells.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
        let go_down = match (right, down) {
            (None, None) => break,
            (Some(x), Some(y)) => y < x,
            (None, Some(_)) => true,
            (Some(_), None) => false,
        };
        if go_down {
            cells[r][c] = down;
            events.push((down.unwrap(), r + 2));
            r += 1;
        } else {
            cells[r][c] = right;
            c += 1;
        }
        cells[r][c] = None;
        path.push((r, c));
    }
    (Slide { cells, events }, path)
}

fn adjacent(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0.abs_diff(b.0) + a.1.abs_diff(b.1) == 1
}

/// Simultaneous slides of all empty cells, one value at a time.
fn k_slide(ranks: &[Vec<u32>], q: u32) -> Slide {
    let mut cells = to_cells(ranks);
    let mut positions = vec![Vec::new(); q as usize];
    for (r, row) in ranks.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            positions[x as usize].push((r, c));
        }
    }
    let mut events = Vec::new();
    let mut bullets = positions[0].clone();
    for &(r, c) in &bullets {
        cells[r][c] = None;
    }
    for i in 1..q {
        if bullets.is_empty() {
            break;
        }
        // Values of rank i have not moved yet, so their original positions are current.
        let arriving: Vec<(usize, usize)> = positions[i as usize]
            .iter()
            .copied()
            .filter(|&p| bullets.iter().any(|&b| adjacent(p, b)))
            .collect();
        if arriving.is_empty() {
            continue;
        }
        let mut next = Vec::with_capacity(bullets.len() + arriving.len());
        for &b in &bullets {
            if arriving.iter().any(|&p| adjacent(p, b)) {
                cells[b.0][b.1] = Some(i);
                if arriving.contains(&(b.0 + 1, b.1)) {
                    debug_assert!(!events.contains(&(i, b.0 + 2)));
                    events.push((i, b.0 + 2));
                }
            } else {
                next.push(b);
            }
        }
        for &p in &arriving {
            cells[p.0][p.1] = None;
            next.push(p);
        }
        bullets = next;
    }
    Slide { cells, events }
}

fn fill(cells: &Cells, alphabet: RotatedAlphabet, shift: bool) -> Vec<Vec<Symbol>> {
    let q = alphabet.size();
    cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| match (cell, shift) {
                    (Some(x), true) => alphabet.symbol_at(x - 1),
                    (None, true) => alphabet.symbol_at(q - 1),
                    (Some(x), false) => alphabet.symbol_at(*x),
                    (None, false) => alphabet.first(),
                })
                .collect()
        })
        .collect()
}

fn convert_events(events: &[(u32, usize)], alphabet: RotatedAlphabet) -> Vec<GromotionEvent> {
    events
        .iter()
        .map(|&(rank, from_row)| GromotionEvent {
            value: alphabet.symbol_at(rank),
            from_row,
        })
        .collect()
}

fn chain_path(path: &[(usize, usize)]) -> FlowPath {
    let boxes: Vec<(usize, usize)> = path.iter().map(|&(r, c)| (r + 1, c + 1)).collect();
    let covers = boxes.windows(2).map(|w| (w[0], w[1])).collect();
    FlowPath { boxes, covers }
}

/// Jeu-de-taquin promotion: remove the first symbol, slide, decrement, and
/// put the last symbol in the vacated corner.
pub fn promote_standard(t: &StandardTableau) -> StandardTableau {
    let (slide, _) = jdt_slide(&t.rank_grid());
    let rows = fill(&slide.cells, t.alphabet(), true);
    StandardTableau::from_parts_unchecked(t.shape().clone(), rows, t.alphabet())
}

/// Like promotion but the symbols keep their names: the removed first symbol
/// returns in the corner and becomes last in the grown alphabet.
pub fn gromote_standard(t: &StandardTableau) -> Gromotion<StandardTableau> {
    let (slide, path) = jdt_slide(&t.rank_grid());
    let a = t.alphabet();
    let rows = fill(&slide.cells, a, false);
    Gromotion {
        tableau: StandardTableau::from_parts_unchecked(t.shape().clone(), rows, a.grow()),
        events: convert_events(&slide.events, a),
        flow_path: chain_path(&path),
    }
}

/// Trajectory of the vacated cell of a standard tableau.
pub fn flow_path_standard(t: &StandardTableau) -> FlowPath {
    chain_path(&jdt_slide(&t.rank_grid()).1)
}

/// Flow path of an increasing tableau: starting from the box of the first
/// symbol, repeatedly follow the smallest of the right and lower
/// neighbours, following both on a tie.
pub fn flow_path_increasing(t: &IncreasingTableau) -> FlowPath {
    let ranks = t.rank_grid();
    let mut path = FlowPath::default();
    if ranks.first().and_then(|row| row.first()) != Some(&0) {
        return path;
    }
    let mut queue = vec![(0usize, 0usize)];
    let mut head = 0;
    while head < queue.len() {
        let (r, c) = queue[head];
        head += 1;
        let mut next: Vec<(usize, usize)> = Vec::new();
        if c + 1 < ranks[r].len() {
            next.push((r, c + 1));
        }
        if r + 1 < ranks.len() && c < ranks[r + 1].len() {
            next.push((r + 1, c));
        }
        let Some(min) = next.iter().map(|&(a, b)| ranks[a][b]).min() else {
            continue;
        };
        for p in next.into_iter().filter(|&(a, b)| ranks[a][b] == min) {
            path.covers.push(((r + 1, c + 1), (p.0 + 1, p.1 + 1)));
            if !queue.contains(&p) {
                queue.push(p);
            }
        }
    }
    queue.sort();
    path.boxes = queue.into_iter().map(|(r, c)| (r + 1, c + 1)).collect();
    path.covers.sort();
    path
}

pub fn k_promote(t: &IncreasingTableau) -> IncreasingTableau {
    let slide = k_slide(&t.rank_grid(), t.q());
    let rows = fill(&slide.cells, t.alphabet(), true);
    IncreasingTableau::from_parts_unchecked(t.shape().clone(), rows, t.alphabet())
}

pub fn k_gromote(t: &IncreasingTableau) -> Gromotion<IncreasingTableau> {
    let a = t.alphabet();
    let slide = k_slide(&t.rank_grid(), a.size());
    let rows = fill(&slide.cells, a, false);
    Gromotion {
        tableau: IncreasingTableau::from_parts_unchecked(t.shape().clone(), rows, a.grow()),
        events: convert_events(&slide.events, a),
        flow_path: flow_path_increasing(t),
    }
}

impl Promotable for StandardTableau {
    fn promote(&self) -> Self {
        promote_standard(self)
    }
    fn gromote(&self) -> Gromotion<Self> {
        gromote_standard(self)
    }
}

impl Promotable for IncreasingTableau {
    fn promote(&self) -> Self {
        k_promote(self)
    }
    fn gromote(&self) -> Gromotion<Self> {
        k_gromote(self)
    }
}

/// `q · C(q, 2)`, at least 1.
pub fn default_order_bound(q: u32) -> usize {
    let q = q as usize;
    (q * q * q.saturating_sub(1) / 2).max(1)
}

/// Smallest `m ≥ 1` with `promote^m(t) = t`.
pub fn promotion_order<T: Promotable>(t: &T, max_iter: usize) -> Result<usize, PromotionError> {
    let mut cur = t.promote();
    for m in 1..=max_iter {
        if &cur == t {
            return Ok(m);
        }
        cur = cur.promote();
    }
    Err(PromotionError::OrderExceedsBound(max_iter))
}

pub fn promote_power<T: Promotable>(t: &T, m: usize) -> T {
    let mut cur = t.clone();
    for _ in 0..m {
        cur = cur.promote();
    }
    cur
}

/// `steps` successive gromotions of `t`.
pub fn gromotion_orbit<T: Promotable>(t: &T, steps: usize) -> Vec<Gromotion<T>> {
    let mut out: Vec<Gromotion<T>> = Vec::with_capacity(steps);
    for _ in 0..steps {
        let g = match out.last() {
            Some(prev) => prev.tableau.gromote(),
            None => t.gromote(),
        };
        out.push(g);
    }
    out
}

/// Balance and teetering points (1-based positions) of a lattice word for
/// the row pair `(i, i+1)`.
///
/// A position counts as a balance point only when its letter involves row
/// `i` or `i + 1` and the prefix up to it uses both rows equally often; a
/// teetering point holds both rows and has exactly one more `i` than `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BalanceReport {
    pub balance_points: Vec<usize>,
    pub teetering_points: Vec<usize>,
}

impl BalanceReport {
    pub fn first_balance_point(&self) -> Option<usize> {
        self.balance_points.first().copied()
    }
}

pub fn balance_report(w: &LatticeWord, i: usize) -> BalanceReport {
    let mut report = BalanceReport::default();
    let (mut lower, mut upper) = (0usize, 0usize);
    for (p, letter) in w.letters().iter().enumerate() {
        let has_lower = letter.contains(i);
        let has_upper = letter.contains(i + 1);
        lower += has_lower as usize;
        upper += has_upper as usize;
        if (has_lower || has_upper) && lower == upper {
            report.balance_points.push(p + 1);
        }
        if has_lower && has_upper && lower == upper + 1 {
            report.teetering_points.push(p + 1);
        }
    }
    report
}

/// Promotion of a standard tableau computed on its lattice word: lower the
/// letter at each successive balance point, drop the first letter and
/// append one more than the number of balance points used.
pub fn promote_standard_via_balance(w: &LatticeWord) -> Result<LatticeWord, TableauError> {
    if let Some(p) = w.letters().iter().position(|l| l.len() != 1) {
        return Err(TableauError::NotStandardWord(p + 1));
    }
    let mut rows: Vec<usize> = w.letters().iter().map(|l| l.max().unwrap()).collect();
    if rows.is_empty() {
        return Err(TableauError::InvalidShape(Vec::new()));
    }
    let mut points = Vec::new();
    let mut prev = 1;
    for i in 1..w.row_count() {
        let (mut lower, mut upper) = (0usize, 0usize);
        let mut found = None;
        for (p, &r) in rows.iter().enumerate() {
            lower += (r == i) as usize;
            upper += (r == i + 1) as usize;
            if p + 1 > prev && (r == i || r == i + 1) && lower == upper {
                found = Some(p + 1);
                break;
            }
        }
        match found {
            Some(j) => {
                points.push(j);
                prev = j;
            }
            None => break,
        }
    }
    for &j in &points {
        rows[j - 1] -= 1;
    }
    rows.remove(0);
    rows.push(points.len() + 1);
    LatticeWord::new(rows.into_iter().map(RowSet::singleton).collect(), w.row_count())
}

/// K-promotion of an increasing tableau with at most two rows, computed on
/// its lattice word through the first balance and teetering points.
pub fn k_promote_2row_via_balance(w: &LatticeWord) -> Result<LatticeWord, TableauError> {
    if w.row_count() > 2 {
        return Err(TableauError::InvalidShape(vec![w.row_count()]));
    }
    let mut letters = w.letters().to_vec();
    if letters.is_empty() {
        return Err(TableauError::InvalidAlphabet { size: 0, offset: 0 });
    }
    let one = RowSet::singleton(1);
    let two = RowSet::singleton(2);
    let both = RowSet::from_rows([1, 2]);
    let appended = if letters[0].is_empty() {
        RowSet::EMPTY
    } else {
        let report = balance_report(w, 1);
        match report.first_balance_point() {
            None => match report.teetering_points.first() {
                None => one,
                Some(&t) => {
                    letters[t - 1] = one;
                    both
                }
            },
            Some(b) => {
                match report.teetering_points.iter().find(|&&t| t < b) {
                    None => letters[b - 1] = one,
                    Some(&t) => {
                        letters[t - 1] = one;
                        letters[b - 1] = both;
                    }
                }
                two
            }
        }
    };
    letters.remove(0);
    letters.push(appended);
    LatticeWord::new(letters, w.row_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::Partition;

    fn syt(rows: Vec<Vec<u32>>) -> StandardTableau {
        StandardTableau::from_rows(rows).unwrap()
    }

    fn inc(rows: Vec<Vec<u32>>, q: u32) -> IncreasingTableau {
        IncreasingTableau::from_rows(rows, q).unwrap()
    }

    #[test]
    fn promotes_three_row_standard_tableau() {
        let t = syt(vec![vec![1, 3, 4, 6], vec![2, 5, 9], vec![7, 8]]);
        assert_eq!(
            promote_standard(&t),
            syt(vec![vec![1, 2, 3, 5], vec![4, 7, 8], vec![6, 9]])
        );
        let g = gromote_standard(&t);
        assert_eq!(g.tableau.rows(), &[vec![2, 3, 4, 6], vec![5, 8, 9], vec![7, 1]]);
        assert_eq!(g.tableau.alphabet().offset(), 1);
        assert_eq!(g.flow_path.boxes, vec![(1, 1), (2, 1), (2, 2), (3, 2)]);
        assert_eq!(
            g.events,
            vec![
                GromotionEvent { value: 2, from_row: 2 },
                GromotionEvent { value: 8, from_row: 3 }
            ]
        );
    }

    #[test]
    fn promotes_square_standard_tableau() {
        let u = syt(vec![vec![1, 2, 6], vec![3, 5, 8], vec![4, 7, 9]]);
        assert_eq!(
            promote_standard(&u),
            syt(vec![vec![1, 4, 5], vec![2, 6, 7], vec![3, 8, 9]])
        );
        let g = gromote_standard(&u);
        assert_eq!(g.tableau.rows(), &[vec![2, 5, 6], vec![3, 7, 8], vec![4, 9, 1]]);
        assert_eq!(g.flow_path.boxes, vec![(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)]);
    }

    #[test]
    fn flow_path_is_where_gromotion_changes_entries() {
        let t = syt(vec![vec![1, 3, 4, 6], vec![2, 5, 9], vec![7, 8]]);
        let g = gromote_standard(&t);
        let mut changed = Vec::new();
        for (r, c) in t.shape().cells() {
            if t.entry(r, c) != g.tableau.entry(r, c) {
                changed.push((r + 1, c + 1));
            }
        }
        assert_eq!(changed, g.flow_path.boxes);
    }

    #[test]
    fn k_promotion_of_increasing_tableau() {
        let t = inc(vec![vec![1, 2, 3, 5, 7], vec![2, 3, 6, 9], vec![4, 6, 8]], 9);
        assert_eq!(
            k_promote(&t),
            inc(vec![vec![1, 2, 4, 6, 9], vec![2, 5, 7, 8], vec![3, 7, 9]], 9)
        );
        let g = k_gromote(&t);
        assert_eq!(
            g.tableau.rows(),
            &[vec![2, 3, 5, 7, 1], vec![3, 6, 8, 9], vec![4, 8, 1]]
        );
    }

    #[test]
    fn k_promotion_without_first_symbol_just_decrements() {
        let t = inc(vec![vec![2, 3]], 3);
        assert_eq!(k_promote(&t), inc(vec![vec![1, 2]], 3));
        assert!(k_gromote(&t).events.is_empty());
        assert!(flow_path_increasing(&t).boxes.is_empty());
    }

    #[test]
    fn flow_path_splits_on_ties() {
        let t = inc(vec![vec![1, 2], vec![2, 3]], 3);
        let p = flow_path_increasing(&t);
        assert_eq!(p.boxes, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(p.covers.len(), 4);
    }

    #[test]
    fn k_promotion_agrees_with_jeu_de_taquin_on_standard_fillings() {
        let t = syt(vec![vec![1, 3, 4, 6], vec![2, 5, 9], vec![7, 8]]);
        let mut s = t.clone();
        for _ in 0..9 {
            let via_k = k_gromote(&s.to_increasing());
            let via_jdt = gromote_standard(&s);
            assert_eq!(via_k.tableau, via_jdt.tableau.to_increasing());
            assert_eq!(via_k.events, via_jdt.events);
            s = via_jdt.tableau;
        }
    }

    #[test]
    fn gromotion_canonicalizes_to_promotion() {
        let t = syt(vec![vec![1, 2, 5], vec![3, 6], vec![4]]);
        let mut g = t.clone();
        let mut p = t.clone();
        for _ in 0..12 {
            g = gromote_standard(&g).tableau;
            p = promote_standard(&p);
            assert_eq!(g.canonicalize(), p);
        }
    }

    #[test]
    fn order_of_rectangles() {
        let u = syt(vec![vec![1, 2, 6], vec![3, 5, 8], vec![4, 7, 9]]);
        assert_eq!(promotion_order(&u, 100), Ok(9));
        let t = syt(vec![vec![1, 3, 4, 6], vec![2, 5, 9], vec![7, 8]]);
        assert_eq!(
            promotion_order(&t, 3),
            Err(PromotionError::OrderExceedsBound(3))
        );
        let one = inc(vec![vec![1]], 1);
        assert_eq!(promotion_order(&one, default_order_bound(1)), Ok(1));
    }

    #[test]
    fn balance_points_of_set_word() {
        let w: LatticeWord = "1 {1,2} 1 {2,3} {1,2} {3,4} 3 {2,4} 3 4 4".parse().unwrap();
        let r1 = balance_report(&w, 1);
        assert_eq!(r1.balance_points, vec![8]);
        assert_eq!(r1.teetering_points, vec![2, 5]);
        let r2 = balance_report(&w, 2);
        assert_eq!(r2.balance_points, vec![7, 9]);
        assert_eq!(r2.teetering_points, vec![4]);
        let r3 = balance_report(&w, 3);
        assert_eq!(r3.balance_points, vec![11]);
        assert_eq!(r3.teetering_points, vec![6]);
    }

    #[test]
    fn balance_promotion_examples() {
        let w: LatticeWord = "112321323".parse().unwrap();
        assert_eq!(promote_standard_via_balance(&w).unwrap().to_string(), "1 2 3 1 1 2 2 3 3");
        let w: LatticeWord = "121121332".parse().unwrap();
        assert_eq!(promote_standard_via_balance(&w).unwrap().to_string(), "1 1 1 2 1 3 2 2 3");
    }

    #[test]
    fn two_row_balance_promotion_teetering_case() {
        let t = inc(vec![vec![1, 2, 3, 4, 6, 7], vec![2, 3, 5]], 7);
        let w = t.lattice_word().unwrap();
        assert_eq!(w.to_string(), "1 {1,2} {1,2} 1 2 1 1");
        let p = k_promote_2row_via_balance(&w).unwrap();
        assert_eq!(p.to_string(), "1 {1,2} 1 2 1 1 {1,2}");
        assert_eq!(p, k_promote(&t).lattice_word().unwrap());
    }

    #[test]
    fn two_row_balance_promotion_all_cases_small() {
        // Every increasing filling of (2,2) and (3,1) with q = 5.
        for shape in [vec![2, 2], vec![3, 1], vec![3, 2]] {
            let p = Partition::new(shape).unwrap();
            for t in crate::enumerate::enumerate_increasing(&p, 5, false).unwrap() {
                let w = t.lattice_word().unwrap();
                assert_eq!(
                    k_promote_2row_via_balance(&w).unwrap(),
                    k_promote(&t).lattice_word().unwrap(),
                    "{t}"
                );
            }
        }
    }
}
