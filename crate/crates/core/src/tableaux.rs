//! Partitions, rotated alphabets, standard and increasing tableaux, and
//! set-valued lattice words.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Symbol = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("row lengths {found:?} do not match shape {expected:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("alphabet of size {size} with offset {offset} is invalid")]
    InvalidAlphabet { size: u32, offset: u32 },
    #[error("alphabet size {alphabet} does not match the {cells} cells of a standard tableau")]
    AlphabetSizeMismatch { alphabet: u32, cells: usize },
    #[error("symbol {symbol} at row {row}, column {col} is outside [1, {size}]")]
    SymbolOutOfRange {
        symbol: Symbol,
        row: usize,
        col: usize,
        size: u32,
    },
    #[error("entries are not a bijection onto [1, {0}]")]
    NotBijective(u32),
    #[error("row {row} is not strictly increasing at column {col}")]
    RowNotIncreasing { row: usize, col: usize },
    #[error("column {col} is not strictly increasing at row {row}")]
    ColumnNotIncreasing { row: usize, col: usize },
    #[error("operation needs the canonical alphabet, found offset {0}")]
    NonCanonicalAlphabet(u32),
    #[error("letter {position} names row {row}, outside 1..={row_count}")]
    RowOutOfRange {
        position: usize,
        row: usize,
        row_count: usize,
    },
    #[error("not a lattice word: after {position} letters row {row} is used more often than row {}", row - 1)]
    NotLattice { position: usize, row: usize },
    #[error("row lengths {0:?} do not describe a partition with nonempty rows")]
    InvalidShape(Vec<usize>),
    #[error("letter {0} is not a singleton, so the word is not standard")]
    NotStandardWord(usize),
    #[error("cannot parse lattice word: {0}")]
    Parse(String),
    #[error("expected a {expected} tableau, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
}

/// Integer partition. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// `rows × cols` rectangle; degenerate when either side is zero.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if rows == 0 || cols == 0 {
            Partition(Vec::new())
        } else {
            Partition(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_rectangular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row < self.0.len() && col < self.0[row]
    }

    /// All cells in row-reading order, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = TableauError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The alphabet `[1, size]` ordered cyclically, starting at `offset + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RotatedAlphabet {
    size: u32,
    offset: u32,
}

impl RotatedAlphabet {
    pub fn new(size: u32, offset: u32) -> Result<Self, TableauError> {
        if size == 0 || offset >= size {
            return Err(TableauError::InvalidAlphabet { size, offset });
        }
        Ok(RotatedAlphabet { size, offset })
    }

    pub fn canonical(size: u32) -> Self {
        assert!(size > 0, "alphabet must be nonempty");
        RotatedAlphabet { size, offset: 0 }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn offset(&self) -> u32 {
        self.offset
    }

    pub fn is_canonical(&self) -> bool {
        self.offset == 0
    }

    /// 0-based position of `symbol` in the rotated order.
    pub fn rank(&self, symbol: Symbol) -> u32 {
        debug_assert!((1..=self.size).contains(&symbol));
        (symbol - 1 + self.size - self.offset) % self.size
    }

    pub fn symbol_at(&self, rank: u32) -> Symbol {
        (rank + self.offset) % self.size + 1
    }

    pub fn precedes(&self, a: Symbol, b: Symbol) -> bool {
        self.rank(a) < self.rank(b)
    }

    pub fn first(&self) -> Symbol {
        self.symbol_at(0)
    }

    /// Moves the first symbol to the end of the order.
    pub fn grow(&self) -> Self {
        RotatedAlphabet {
            size: self.size,
            offset: (self.offset + 1) % self.size,
        }
    }
}

/// Shared read access to the two tableau types.
pub trait Tableau {
    fn shape(&self) -> &Partition;
    fn rows(&self) -> &[Vec<Symbol>];
    fn alphabet(&self) -> RotatedAlphabet;

    fn entry(&self, row: usize, col: usize) -> Symbol {
        self.rows()[row][col]
    }

    fn q(&self) -> u32 {
        self.alphabet().size()
    }

    /// Entries replaced by their 0-based ranks in the alphabet.
    fn rank_grid(&self) -> Vec<Vec<u32>> {
        let a = self.alphabet();
        self.rows()
            .iter()
            .map(|row| row.iter().map(|&s| a.rank(s)).collect())
            .collect()
    }

    /// Row indices (1-based) containing each symbol, in symbol order.
    fn lattice_word(&self) -> Result<LatticeWord, TableauError> {
        let a = self.alphabet();
        if !a.is_canonical() {
            return Err(TableauError::NonCanonicalAlphabet(a.offset()));
        }
        let mut letters = vec![RowSet::EMPTY; a.size() as usize];
        for (r, row) in self.rows().iter().enumerate() {
            for &s in row {
                letters[s as usize - 1].insert(r + 1);
            }
        }
        Ok(LatticeWord {
            letters,
            row_count: self.shape().length(),
        })
    }
}

fn check_grid(shape: &Partition, rows: &[Vec<Symbol>]) -> Result<(), TableauError> {
    let found: Vec<usize> = rows.iter().map(Vec::len).collect();
    if found != shape.parts() {
        return Err(TableauError::ShapeMismatch {
            expected: shape.parts().to_vec(),
            found,
        });
    }
    Ok(())
}

fn check_range(rows: &[Vec<Symbol>], size: u32) -> Result<(), TableauError> {
    for (r, row) in rows.iter().enumerate() {
        for (c, &s) in row.iter().enumerate() {
            if s == 0 || s > size {
                return Err(TableauError::SymbolOutOfRange {
                    symbol: s,
                    row: r + 1,
                    col: c + 1,
                    size,
                });
            }
        }
    }
    Ok(())
}

fn check_strict(rows: &[Vec<Symbol>], alphabet: RotatedAlphabet) -> Result<(), TableauError> {
    for (r, row) in rows.iter().enumerate() {
        for c in 1..row.len() {
            if !alphabet.precedes(row[c - 1], row[c]) {
                return Err(TableauError::RowNotIncreasing {
                    row: r + 1,
                    col: c + 1,
                });
            }
        }
    }
    for r in 1..rows.len() {
        for c in 0..rows[r].len() {
            if !alphabet.precedes(rows[r - 1][c], rows[r][c]) {
                return Err(TableauError::ColumnNotIncreasing { row: r + 1, col: c + 1 });
            }
        }
    }
    Ok(())
}

/// Checks that `rows` is a standard filling of `shape` in the order of `alphabet`.
pub fn validate_standard(
    shape: &Partition,
    rows: &[Vec<Symbol>],
    alphabet: RotatedAlphabet,
) -> Result<(), TableauError> {
    check_grid(shape, rows)?;
    if alphabet.size() as usize != shape.size() {
        return Err(TableauError::AlphabetSizeMismatch {
            alphabet: alphabet.size(),
            cells: shape.size(),
        });
    }
    check_range(rows, alphabet.size())?;
    let mut seen = vec![false; alphabet.size() as usize];
    for &s in rows.iter().flatten() {
        if std::mem::replace(&mut seen[s as usize - 1], true) {
            return Err(TableauError::NotBijective(alphabet.size()));
        }
    }
    check_strict(rows, alphabet)
}

/// Checks that `rows` strictly increases along rows and columns.
pub fn validate_increasing(
    shape: &Partition,
    rows: &[Vec<Symbol>],
    alphabet: RotatedAlphabet,
) -> Result<(), TableauError> {
    check_grid(shape, rows)?;
    check_range(rows, alphabet.size())?;
    check_strict(rows, alphabet)
}

fn relabel(rows: &[Vec<Symbol>], alphabet: RotatedAlphabet) -> Vec<Vec<Symbol>> {
    rows.iter()
        .map(|row| row.iter().map(|&s| alphabet.rank(s) + 1).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<Symbol>>,
    alphabet: RotatedAlphabet,
}

impl StandardTableau {
    pub fn new(
        shape: Partition,
        rows: Vec<Vec<Symbol>>,
        alphabet: RotatedAlphabet,
    ) -> Result<Self, TableauError> {
        validate_standard(&shape, &rows, alphabet)?;
        Ok(StandardTableau { shape, rows, alphabet })
    }

    /// Standard tableau in the canonical alphabet; the shape is read off the rows.
    pub fn from_rows(rows: Vec<Vec<Symbol>>) -> Result<Self, TableauError> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size() as u32;
        if n == 0 {
            return Err(TableauError::InvalidShape(Vec::new()));
        }
        Self::new(shape, rows, RotatedAlphabet::canonical(n))
    }

    pub(crate) fn from_parts_unchecked(
        shape: Partition,
        rows: Vec<Vec<Symbol>>,
        alphabet: RotatedAlphabet,
    ) -> Self {
        debug_assert_eq!(validate_standard(&shape, &rows, alphabet), Ok(()));
        StandardTableau { shape, rows, alphabet }
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn canonicalize(&self) -> Self {
        StandardTableau {
            shape: self.shape.clone(),
            rows: relabel(&self.rows, self.alphabet),
            alphabet: RotatedAlphabet::canonical(self.alphabet.size()),
        }
    }

    /// The same filling viewed as an increasing tableau with `q = n`.
    pub fn to_increasing(&self) -> IncreasingTableau {
        IncreasingTableau {
            shape: self.shape.clone(),
            rows: self.rows.clone(),
            alphabet: self.alphabet,
        }
    }
}

impl Tableau for StandardTableau {
    fn shape(&self) -> &Partition {
        &self.shape
    }
    fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }
    fn alphabet(&self) -> RotatedAlphabet {
        self.alphabet
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct IncreasingTableau {
    shape: Partition,
    rows: Vec<Vec<Symbol>>,
    alphabet: RotatedAlphabet,
}

impl IncreasingTableau {
    pub fn new(
        shape: Partition,
        rows: Vec<Vec<Symbol>>,
        alphabet: RotatedAlphabet,
    ) -> Result<Self, TableauError> {
        validate_increasing(&shape, &rows, alphabet)?;
        Ok(IncreasingTableau { shape, rows, alphabet })
    }

    /// Increasing tableau over the canonical alphabet `[1, q]`.
    pub fn from_rows(rows: Vec<Vec<Symbol>>, q: u32) -> Result<Self, TableauError> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        if q == 0 {
            return Err(TableauError::InvalidAlphabet { size: 0, offset: 0 });
        }
        Self::new(shape, rows, RotatedAlphabet::canonical(q))
    }

    pub(crate) fn from_parts_unchecked(
        shape: Partition,
        rows: Vec<Vec<Symbol>>,
        alphabet: RotatedAlphabet,
    ) -> Self {
        debug_assert_eq!(validate_increasing(&shape, &rows, alphabet), Ok(()));
        IncreasingTableau { shape, rows, alphabet }
    }

    pub fn canonicalize(&self) -> Self {
        IncreasingTableau {
            shape: self.shape.clone(),
            rows: relabel(&self.rows, self.alphabet),
            alphabet: RotatedAlphabet::canonical(self.alphabet.size()),
        }
    }

    /// Every symbol of the alphabet occurs.
    pub fn is_packed(&self) -> bool {
        let mut seen = vec![false; self.alphabet.size() as usize];
        for &s in self.rows.iter().flatten() {
            seen[s as usize - 1] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Rows (1-based) containing `symbol`.
    pub fn rows_containing(&self, symbol: Symbol) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, row)| row.contains(&symbol))
            .map(|(r, _)| r + 1)
            .collect()
    }

    /// Back to a standard tableau when the filling is a bijection onto `[1, q]`.
    pub fn to_standard(&self) -> Result<StandardTableau, TableauError> {
        StandardTableau::new(self.shape.clone(), self.rows.clone(), self.alphabet)
    }
}

impl Tableau for IncreasingTableau {
    fn shape(&self) -> &Partition {
        &self.shape
    }
    fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }
    fn alphabet(&self) -> RotatedAlphabet {
        self.alphabet
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<Symbol>]) -> fmt::Result {
    let rendered: Vec<String> = rows
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    write!(f, "[{}]", rendered.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableauKind {
    Standard,
    Increasing,
}

/// Wire format shared by both tableau types.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub kind: TableauKind,
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<Symbol>>,
    pub q: u32,
    #[serde(default)]
    pub offset: u32,
}

impl TryFrom<TableauJson> for StandardTableau {
    type Error = TableauError;
    fn try_from(j: TableauJson) -> Result<Self, Self::Error> {
        match AnyTableau::try_from(j)? {
            AnyTableau::Standard(t) => Ok(t),
            AnyTableau::Increasing(_) => Err(TableauError::WrongKind {
                expected: "standard",
                found: "increasing",
            }),
        }
    }
}

impl TryFrom<TableauJson> for IncreasingTableau {
    type Error = TableauError;
    fn try_from(j: TableauJson) -> Result<Self, Self::Error> {
        match AnyTableau::try_from(j)? {
            AnyTableau::Increasing(t) => Ok(t),
            AnyTableau::Standard(_) => Err(TableauError::WrongKind {
                expected: "increasing",
                found: "standard",
            }),
        }
    }
}

impl From<StandardTableau> for TableauJson {
    fn from(t: StandardTableau) -> Self {
        TableauJson {
            kind: TableauKind::Standard,
            shape: t.shape.parts().to_vec(),
            q: t.alphabet.size(),
            offset: t.alphabet.offset(),
            rows: t.rows,
        }
    }
}

impl From<IncreasingTableau> for TableauJson {
    fn from(t: IncreasingTableau) -> Self {
        TableauJson {
            kind: TableauKind::Increasing,
            shape: t.shape.parts().to_vec(),
            q: t.alphabet.size(),
            offset: t.alphabet.offset(),
            rows: t.rows,
        }
    }
}

/// Either kind of tableau, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub enum AnyTableau {
    Standard(StandardTableau),
    Increasing(IncreasingTableau),
}

impl AnyTableau {
    pub fn kind(&self) -> TableauKind {
        match self {
            AnyTableau::Standard(_) => TableauKind::Standard,
            AnyTableau::Increasing(_) => TableauKind::Increasing,
        }
    }

    pub fn as_dyn(&self) -> &dyn Tableau {
        match self {
            AnyTableau::Standard(t) => t,
            AnyTableau::Increasing(t) => t,
        }
    }
}

impl TryFrom<TableauJson> for AnyTableau {
    type Error = TableauError;
    fn try_from(j: TableauJson) -> Result<Self, Self::Error> {
        let shape = Partition::new(j.shape)?;
        let alphabet = RotatedAlphabet::new(j.q, j.offset)?;
        Ok(match j.kind {
            TableauKind::Standard => {
                AnyTableau::Standard(StandardTableau::new(shape, j.rows, alphabet)?)
            }
            TableauKind::Increasing => {
                AnyTableau::Increasing(IncreasingTableau::new(shape, j.rows, alphabet)?)
            }
        })
    }
}

impl From<AnyTableau> for TableauJson {
    fn from(t: AnyTableau) -> Self {
        match t {
            AnyTableau::Standard(t) => t.into(),
            AnyTableau::Increasing(t) => t.into(),
        }
    }
}

impl fmt::Display for AnyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, self.as_dyn().rows())
    }
}

/// A set of row indices, 1-based, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RowSet(u64);

impl RowSet {
    pub const EMPTY: RowSet = RowSet(0);
    pub const MAX_ROW: usize = 64;

    pub fn singleton(row: usize) -> Self {
        let mut s = RowSet::EMPTY;
        s.insert(row);
        s
    }

    pub fn from_rows(rows: impl IntoIterator<Item = usize>) -> Self {
        let mut s = RowSet::EMPTY;
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn insert(&mut self, row: usize) {
        assert!((1..=Self::MAX_ROW).contains(&row), "row {row} out of range");
        self.0 |= 1 << (row - 1);
    }

    pub fn remove(&mut self, row: usize) {
        if (1..=Self::MAX_ROW).contains(&row) {
            self.0 &= !(1 << (row - 1));
        }
    }

    pub fn contains(&self, row: usize) -> bool {
        (1..=Self::MAX_ROW).contains(&row) && self.0 & (1 << (row - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn max(&self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=Self::MAX_ROW).filter(move |&r| self.contains(r))
    }
}

impl fmt::Display for RowSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.len() {
            0 => write!(f, "∅"),
            1 => write!(f, "{}", self.iter().next().unwrap()),
            _ => {
                let rows: Vec<String> = self.iter().map(|r| r.to_string()).collect();
                write!(f, "{{{}}}", rows.join(","))
            }
        }
    }
}

/// Word whose `j`-th letter is the set of rows holding `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LatticeWordJson", into = "LatticeWordJson")]
pub struct LatticeWord {
    letters: Vec<RowSet>,
    row_count: usize,
}

#[derive(Serialize, Deserialize)]
struct LatticeWordJson {
    row_count: usize,
    letters: Vec<Vec<usize>>,
}

impl TryFrom<LatticeWordJson> for LatticeWord {
    type Error = TableauError;
    fn try_from(j: LatticeWordJson) -> Result<Self, Self::Error> {
        for (p, l) in j.letters.iter().enumerate() {
            if let Some(&row) = l.iter().find(|&&r| r == 0 || r > j.row_count || r > RowSet::MAX_ROW) {
                return Err(TableauError::RowOutOfRange {
                    position: p + 1,
                    row,
                    row_count: j.row_count,
                });
            }
        }
        let letters = j.letters.into_iter().map(RowSet::from_rows).collect();
        LatticeWord::new(letters, j.row_count)
    }
}

impl From<LatticeWord> for LatticeWordJson {
    fn from(w: LatticeWord) -> Self {
        LatticeWordJson {
            row_count: w.row_count,
            letters: w.letters.iter().map(|l| l.iter().collect()).collect(),
        }
    }
}

impl LatticeWord {
    pub fn new(letters: Vec<RowSet>, row_count: usize) -> Result<Self, TableauError> {
        let mut counts = vec![0usize; row_count + 1];
        for (p, letter) in letters.iter().enumerate() {
            if let Some(max) = letter.max() {
                if max > row_count {
                    return Err(TableauError::RowOutOfRange {
                        position: p + 1,
                        row: max,
                        row_count,
                    });
                }
            }
            for r in letter.iter() {
                counts[r] += 1;
            }
            for r in letter.iter().filter(|&r| r > 1) {
                if counts[r] > counts[r - 1] {
                    return Err(TableauError::NotLattice { position: p + 1, row: r });
                }
            }
        }
        Ok(LatticeWord { letters, row_count })
    }

    /// Word of singleton letters, as for a standard tableau.
    pub fn from_rows(rows: &[usize]) -> Result<Self, TableauError> {
        let row_count = rows.iter().copied().max().unwrap_or(0);
        let letters = rows
            .iter()
            .map(|&r| {
                if r == 0 {
                    Err(TableauError::Parse("row 0 is not allowed".into()))
                } else {
                    Ok(RowSet::singleton(r))
                }
            })
            .collect::<Result<_, _>>()?;
        LatticeWord::new(letters, row_count)
    }

    pub fn letters(&self) -> &[RowSet] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    /// Letter at 1-based position `j`.
    pub fn letter(&self, j: usize) -> RowSet {
        self.letters[j - 1]
    }

    pub fn is_standard(&self) -> bool {
        self.letters.iter().all(|l| l.len() == 1)
    }

    fn row_contents(&self) -> Result<(Partition, Vec<Vec<Symbol>>), TableauError> {
        let mut rows = vec![Vec::new(); self.row_count];
        for (j, letter) in self.letters.iter().enumerate() {
            for r in letter.iter() {
                rows[r - 1].push(j as Symbol + 1);
            }
        }
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lengths.clone()).map_err(|_| TableauError::InvalidShape(lengths))?;
        Ok((shape, rows))
    }

    pub fn to_standard(&self) -> Result<StandardTableau, TableauError> {
        if let Some(p) = self.letters.iter().position(|l| l.len() != 1) {
            return Err(TableauError::NotStandardWord(p + 1));
        }
        if self.letters.is_empty() {
            return Err(TableauError::InvalidShape(Vec::new()));
        }
        let (shape, rows) = self.row_contents()?;
        StandardTableau::new(shape, rows, RotatedAlphabet::canonical(self.len() as u32))
    }

    /// Increasing tableau over `[1, len]`.
    pub fn to_increasing(&self) -> Result<IncreasingTableau, TableauError> {
        if self.letters.is_empty() {
            return Err(TableauError::InvalidAlphabet { size: 0, offset: 0 });
        }
        let (shape, rows) = self.row_contents()?;
        IncreasingTableau::new(shape, rows, RotatedAlphabet::canonical(self.len() as u32))
    }
}

/// Standard tableau when every letter is a singleton, increasing otherwise.
pub fn from_lattice_word(word: &LatticeWord) -> Result<AnyTableau, TableauError> {
    if word.is_standard() && !word.is_empty() {
        word.to_standard().map(AnyTableau::Standard)
    } else {
        word.to_increasing().map(AnyTableau::Increasing)
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", letters.join(" "))
    }
}

impl FromStr for LatticeWord {
    type Err = TableauError;

    /// Accepts `121121332`, or separated letters such as `1 {1,2} ∅ 2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let compact = s.chars().all(|c| c.is_ascii_digit());
        let mut letters = Vec::new();
        if compact {
            for c in s.chars() {
                let r = c.to_digit(10).unwrap() as usize;
                if r == 0 {
                    return Err(TableauError::Parse("row 0 is not allowed".into()));
                }
                letters.push(RowSet::singleton(r));
            }
        } else {
            let mut chars = s.chars().peekable();
            while let Some(&c) = chars.peek() {
                if c.is_whitespace() || c == ',' {
                    chars.next();
                } else if c == '∅' {
                    chars.next();
                    letters.push(RowSet::EMPTY);
                } else if c == '{' {
                    chars.next();
                    let mut body = String::new();
                    loop {
                        match chars.next() {
                            Some('}') => break,
                            Some(ch) => body.push(ch),
                            None => return Err(TableauError::Parse("unclosed '{'".into())),
                        }
                    }
                    let mut set = RowSet::EMPTY;
                    for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                        set.insert(parse_row(tok)?);
                    }
                    letters.push(set);
                } else if c.is_ascii_digit() {
                    let mut tok = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            tok.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    letters.push(RowSet::singleton(parse_row(&tok)?));
                } else {
                    return Err(TableauError::Parse(format!("unexpected character {c:?}")));
                }
            }
        }
        let row_count = letters.iter().filter_map(RowSet::max).max().unwrap_or(0);
        LatticeWord::new(letters, row_count)
    }
}

fn parse_row(tok: &str) -> Result<usize, TableauError> {
    match tok.parse::<usize>() {
        Ok(r) if (1..=RowSet::MAX_ROW).contains(&r) => Ok(r),
        _ => Err(TableauError::Parse(format!("bad row index {tok:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(rows: Vec<Vec<u32>>) -> StandardTableau {
        StandardTableau::from_rows(rows).unwrap()
    }

    #[test]
    fn partition_rules() {
        assert!(Partition::new(vec![3, 3, 1]).is_ok());
        assert!(Partition::new(vec![]).is_ok());
        assert!(matches!(
            Partition::new(vec![2, 3]),
            Err(TableauError::InvalidPartition(_))
        ));
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::rectangle(3, 4).is_rectangular());
        assert!(!Partition::new(vec![4, 3, 2]).unwrap().is_rectangular());
        assert_eq!(Partition::rectangle(3, 4).size(), 12);
    }

    #[test]
    fn alphabet_rank_and_grow() {
        let a = RotatedAlphabet::new(5, 2).unwrap();
        assert_eq!(a.first(), 3);
        assert!(a.precedes(5, 1));
        assert!(!a.precedes(1, 3));
        for s in 1..=5 {
            assert_eq!(a.symbol_at(a.rank(s)), s);
        }
        let mut b = RotatedAlphabet::canonical(5);
        for _ in 0..5 {
            b = b.grow();
        }
        assert_eq!(b, RotatedAlphabet::canonical(5));
        assert!(RotatedAlphabet::new(5, 5).is_err());
    }

    #[test]
    fn standard_validation_errors() {
        let shape = Partition::new(vec![2, 2]).unwrap();
        let err = StandardTableau::new(
            shape.clone(),
            vec![vec![1, 3], vec![2, 2]],
            RotatedAlphabet::canonical(4),
        )
        .unwrap_err();
        assert_eq!(err, TableauError::NotBijective(4));
        let err = StandardTableau::new(
            shape.clone(),
            vec![vec![1, 3], vec![4, 2]],
            RotatedAlphabet::canonical(4),
        )
        .unwrap_err();
        assert_eq!(err, TableauError::RowNotIncreasing { row: 2, col: 2 });
        let err = StandardTableau::new(
            shape,
            vec![vec![1, 2, 3], vec![4]],
            RotatedAlphabet::canonical(4),
        )
        .unwrap_err();
        assert!(matches!(err, TableauError::ShapeMismatch { .. }));
    }

    #[test]
    fn increasing_validation_errors() {
        let err = IncreasingTableau::from_rows(vec![vec![1, 2], vec![2, 2]], 3).unwrap_err();
        assert_eq!(err, TableauError::RowNotIncreasing { row: 2, col: 2 });
        let err = IncreasingTableau::from_rows(vec![vec![2, 3], vec![2, 4]], 4).unwrap_err();
        assert_eq!(err, TableauError::ColumnNotIncreasing { row: 2, col: 1 });
        let err = IncreasingTableau::from_rows(vec![vec![1, 5]], 4).unwrap_err();
        assert!(matches!(err, TableauError::SymbolOutOfRange { symbol: 5, .. }));
        let t = IncreasingTableau::from_rows(vec![vec![1, 2], vec![2, 3]], 3).unwrap();
        assert!(t.is_packed());
        assert_eq!(t.rows_containing(2), vec![1, 2]);
    }

    #[test]
    fn rotated_validation_uses_the_rotated_order() {
        // Under offset 1 the order is 2 < 3 < 4 < 1.
        let a = RotatedAlphabet::new(4, 1).unwrap();
        let shape = Partition::new(vec![3, 1]).unwrap();
        assert!(StandardTableau::new(shape.clone(), vec![vec![2, 3, 1], vec![4]], a).is_ok());
        assert!(StandardTableau::new(shape, vec![vec![1, 2, 3], vec![4]], a).is_err());
    }

    #[test]
    fn canonicalize_relabels() {
        let a = RotatedAlphabet::new(4, 1).unwrap();
        let t = StandardTableau::new(
            Partition::new(vec![3, 1]).unwrap(),
            vec![vec![2, 3, 1], vec![4]],
            a,
        )
        .unwrap();
        assert_eq!(t.canonicalize(), syt(vec![vec![1, 2, 4], vec![3]]));
    }

    #[test]
    fn lattice_word_of_standard_tableau() {
        let t = syt(vec![vec![1, 3, 4, 6], vec![2, 5, 9], vec![7, 8]]);
        let w = t.lattice_word().unwrap();
        assert_eq!(w.to_string(), "1 2 1 1 2 1 3 3 2");
        assert_eq!(w, "121121332".parse().unwrap());
        assert_eq!(w.to_standard().unwrap(), t);
    }

    #[test]
    fn lattice_word_of_increasing_tableau() {
        let t = IncreasingTableau::from_rows(
            vec![vec![1, 2, 3, 5], vec![2, 4, 5, 8], vec![4, 6, 7, 9], vec![6, 8, 10, 11]],
            11,
        )
        .unwrap();
        let w = t.lattice_word().unwrap();
        assert_eq!(w.to_string(), "1 {1,2} 1 {2,3} {1,2} {3,4} 3 {2,4} 3 4 4");
        assert_eq!(w.to_increasing().unwrap(), t);
        let parsed: LatticeWord = "1 {1,2} 1 {2,3} {1,2} {3,4} 3 {2,4} 3 4 4".parse().unwrap();
        assert_eq!(parsed, w);
    }

    #[test]
    fn absent_values_give_empty_letters() {
        let t = IncreasingTableau::from_rows(vec![vec![2, 3]], 4).unwrap();
        let w = t.lattice_word().unwrap();
        assert_eq!(w.to_string(), "∅ 1 1 ∅");
        assert_eq!(w.to_increasing().unwrap(), t);
        assert!(matches!(from_lattice_word(&w), Ok(AnyTableau::Increasing(_))));
    }

    #[test]
    fn non_lattice_words_are_rejected() {
        assert!(matches!(
            "211".parse::<LatticeWord>(),
            Err(TableauError::NotLattice { position: 1, row: 2 })
        ));
        assert!(matches!(
            "1 {1,3}".parse::<LatticeWord>(),
            Err(TableauError::NotLattice { position: 2, row: 3 })
        ));
    }

    #[test]
    fn lattice_set_word_can_still_fail_column_strictness() {
        // Row 2 would start with the same value as row 1.
        let w: LatticeWord = "{1,2} 1".parse().unwrap();
        assert!(matches!(
            w.to_increasing(),
            Err(TableauError::ColumnNotIncreasing { .. })
        ));
    }

    #[test]
    fn lattice_word_requires_canonical_alphabet() {
        let t = StandardTableau::new(
            Partition::new(vec![2]).unwrap(),
            vec![vec![2, 1]],
            RotatedAlphabet::new(2, 1).unwrap(),
        )
        .unwrap();
        assert_eq!(t.lattice_word(), Err(TableauError::NonCanonicalAlphabet(1)));
    }

    #[test]
    fn json_roundtrip() {
        let t = AnyTableau::Standard(syt(vec![vec![1, 2, 6], vec![3, 5, 8], vec![4, 7, 9]]));
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"kind":"standard","shape":[3,3,3],"rows":[[1,2,6],[3,5,8],[4,7,9]],"q":9,"offset":0}"#
        );
        let back: AnyTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        let bad = r#"{"kind":"standard","shape":[2,2],"rows":[[1,3],[2,2]],"q":4,"offset":0}"#;
        assert!(serde_json::from_str::<AnyTableau>(bad).is_err());
    }

    #[test]
    fn rowset_display() {
        assert_eq!(RowSet::EMPTY.to_string(), "∅");
        assert_eq!(RowSet::singleton(3).to_string(), "3");
        assert_eq!(RowSet::from_rows([2, 1]).to_string(), "{1,2}");
    }
}
