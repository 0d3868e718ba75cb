//! Young tableaux stored as ragged rows, top to bottom.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::Shape;
use crate::word::{Alphabet, Letter};

/// A cell position, 1-based: `row` counts from the top, `col` from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

/// Which family of tableaux to validate against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauKind {
    Semistandard,
    Standard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ViolationKind {
    EmptyRow,
    /// The row is longer than the row above it.
    NotAPartition,
    ZeroEntry,
    RowDecreases,
    RowNotStrict,
    ColumnNotStrict,
    DuplicateEntry {
        entry: Letter,
    },
    EntryOutOfRange {
        entry: Letter,
        max: Letter,
    },
}

/// The first cell (in row-major order) where a tableau breaks its rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub cell: Cell,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::EmptyRow => "row is empty".to_owned(),
            ViolationKind::NotAPartition => "row is longer than the row above".to_owned(),
            ViolationKind::ZeroEntry => "entries must be positive".to_owned(),
            ViolationKind::RowDecreases => "row decreases".to_owned(),
            ViolationKind::RowNotStrict => "row is not strictly increasing".to_owned(),
            ViolationKind::ColumnNotStrict => "column is not strictly increasing".to_owned(),
            ViolationKind::DuplicateEntry { entry } => format!("duplicate entry {entry}"),
            ViolationKind::EntryOutOfRange { entry, max } => format!("entry {entry} exceeds {max}"),
        };
        write!(f, "cell ({},{}): {what}", self.cell.row, self.cell.col)
    }
}

/// An unvalidated filling of a Young diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Self {
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row lengths. Only meaningful for tableaux whose rows form a partition.
    pub fn shape(&self) -> Shape {
        Shape::new(self.rows.iter().map(Vec::len).collect()).unwrap_or_default()
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    pub fn max_entry(&self) -> Option<Letter> {
        self.rows.iter().flatten().copied().max()
    }

    pub fn validate(&self, kind: TableauKind) -> std::result::Result<(), Violation> {
        validate(self, kind)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(&self.rows).map_err(|_| fmt::Error)?)
    }
}

/// Checks the semistandard (rows weak, columns strict) or standard (entries
/// exactly `1..=n`, rows and columns strict) conditions.
///
/// Cells are scanned in row-major order and the first offending cell is
/// reported.
pub fn validate(t: &Tableau, kind: TableauKind) -> std::result::Result<(), Violation> {
    let n = t.size();
    let mut seen = vec![false; n + 1];
    for (r, row) in t.rows.iter().enumerate() {
        if row.is_empty() {
            return Err(Violation {
                cell: Cell::new(r + 1, 1),
                kind: ViolationKind::EmptyRow,
            });
        }
        if r > 0 && row.len() > t.rows[r - 1].len() {
            let cell = Cell::new(r + 1, t.rows[r - 1].len() + 1);
            return Err(Violation {
                cell,
                kind: ViolationKind::NotAPartition,
            });
        }
        for (c, &entry) in row.iter().enumerate() {
            let cell = Cell::new(r + 1, c + 1);
            let fail = |kind| Err(Violation { cell, kind });
            if entry == 0 {
                return fail(ViolationKind::ZeroEntry);
            }
            if c > 0 {
                let left = row[c - 1];
                match kind {
                    TableauKind::Semistandard if entry < left => return fail(ViolationKind::RowDecreases),
                    TableauKind::Standard if entry <= left => return fail(ViolationKind::RowNotStrict),
                    _ => {}
                }
            }
            if r > 0 && t.rows[r - 1][c] >= entry {
                return fail(ViolationKind::ColumnNotStrict);
            }
            if kind == TableauKind::Standard {
                let idx = entry as usize;
                if idx > n {
                    return fail(ViolationKind::EntryOutOfRange {
                        entry,
                        max: n as Letter,
                    });
                }
                if seen[idx] {
                    return fail(ViolationKind::DuplicateEntry { entry });
                }
                seen[idx] = true;
            }
        }
    }
    Ok(())
}

/// A tableau with weakly increasing rows and strictly increasing columns.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Tableau", into = "Tableau")]
pub struct SemistandardTableau(Tableau);

impl SemistandardTableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        Self::try_from(Tableau::new(rows))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Self {
        debug_assert_eq!(validate(&Tableau::new(rows.clone()), TableauKind::Semistandard), Ok(()));
        Self(Tableau::new(rows))
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.0.rows
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn shape(&self) -> Shape {
        self.0.shape()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Checks that every entry lies in the alphabet.
    pub fn check_alphabet(&self, alphabet: Alphabet) -> Result<()> {
        match self.0.max_entry() {
            Some(max) => alphabet.check(max).map(drop),
            None => Ok(()),
        }
    }

    /// Letter multiplicities over `alphabet`, indexed by `letter - 1`.
    pub fn content(&self, alphabet: Alphabet) -> Vec<usize> {
        let mut counts = vec![0; alphabet.size() as usize];
        for &e in self.0.rows.iter().flatten() {
            counts[e as usize - 1] += 1;
        }
        counts
    }

    /// Row insertion: `letter` bumps the leftmost entry strictly greater than
    /// itself, which is then inserted into the next row, and so on.
    ///
    /// Returns the new tableau and the coordinates of the one new cell.
    pub fn row_insert(&self, letter: Letter, alphabet: Alphabet) -> Result<(Self, Cell)> {
        alphabet.check(letter)?;
        self.check_alphabet(alphabet)?;
        let mut rows = self.0.rows.clone();
        let cell = insert_into_rows(&mut rows, letter);
        Ok((Self(Tableau::new(rows)), cell))
    }
}

impl TryFrom<Tableau> for SemistandardTableau {
    type Error = Error;

    fn try_from(t: Tableau) -> Result<Self> {
        validate(&t, TableauKind::Semistandard).map_err(Error::InvalidTableau)?;
        Ok(Self(t))
    }
}

impl From<SemistandardTableau> for Tableau {
    fn from(t: SemistandardTableau) -> Tableau {
        t.0
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A tableau containing each of `1..=n` once, rows and columns strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Tableau", into = "Tableau")]
pub struct StandardTableau(Tableau);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        Self::try_from(Tableau::new(rows))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Letter>>) -> Self {
        debug_assert_eq!(validate(&Tableau::new(rows.clone()), TableauKind::Standard), Ok(()));
        Self(Tableau::new(rows))
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.0.rows
    }

    pub fn as_tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn shape(&self) -> Shape {
        self.0.shape()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `positions()[m - 1]` is the cell holding entry `m`.
    pub fn positions(&self) -> Vec<Cell> {
        let mut out = vec![Cell::new(0, 0); self.size()];
        for (r, row) in self.0.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                out[e as usize - 1] = Cell::new(r + 1, c + 1);
            }
        }
        out
    }

    /// The sub-tableau of entries `<= n`.
    pub fn restrict(&self, n: usize) -> StandardTableau {
        let rows = self
            .0
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&e| e as usize <= n).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        Self(Tableau::new(rows))
    }

    /// Row index (1-based) of each entry, in entry order: the growth sequence
    /// of the path in the Young graph.
    pub fn growth_rows(&self) -> Vec<usize> {
        self.positions().into_iter().map(|c| c.row).collect()
    }

    /// Rebuilds a standard tableau from the row index (1-based) that each
    /// successive entry was added to. Returns `None` if some step is not a
    /// legal cell addition.
    pub fn from_growth(growth: impl IntoIterator<Item = usize>) -> Option<Self> {
        let mut rows: Vec<Vec<Letter>> = Vec::new();
        for (step, row) in growth.into_iter().enumerate() {
            let r = row.checked_sub(1)?;
            if r > rows.len() || (r > 0 && rows[r - 1].len() == rows.get(r).map_or(0, Vec::len)) {
                return None;
            }
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(step as Letter + 1);
        }
        Some(Self(Tableau::new(rows)))
    }
}

impl TryFrom<Tableau> for StandardTableau {
    type Error = Error;

    fn try_from(t: Tableau) -> Result<Self> {
        validate(&t, TableauKind::Standard).map_err(Error::InvalidTableau)?;
        Ok(Self(t))
    }
}

impl From<StandardTableau> for Tableau {
    fn from(t: StandardTableau) -> Tableau {
        t.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Row-bumping insertion in place. Returns the new cell (1-based).
pub(crate) fn insert_into_rows(rows: &mut Vec<Vec<Letter>>, letter: Letter) -> Cell {
    let mut x = letter;
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&e| e <= x);
        if pos == row.len() {
            row.push(x);
            return Cell::new(r + 1, row.len());
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
    Cell::new(rows.len(), 1)
}

/// Reverse bumping: removes the entry at the end of row `row` (1-based),
/// pushes it back up through the rows above, and returns the letter that
/// falls out of the first row.
pub(crate) fn reverse_bump(rows: &mut Vec<Vec<Letter>>, row: usize) -> Letter {
    let r = row - 1;
    let mut y = rows[r].pop().expect("reverse bump from an empty row");
    if rows[r].is_empty() {
        rows.remove(r);
    }
    for above in rows[..r].iter_mut().rev() {
        let pos = above.partition_point(|&e| e < y) - 1;
        std::mem::swap(&mut above[pos], &mut y);
    }
    y
}
