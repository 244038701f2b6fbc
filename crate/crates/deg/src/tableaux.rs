//! Partitions, skew shapes, standard Young tableaux, reading words, and
//! signatures.
//!
//! Conventions used throughout the crate:
//!
//! * Rows of a diagram are indexed from `0` at the **bottom**; columns from
//!   `0` at the left. The content of the cell in row `r`, column `c` is
//!   `c - r`, so contents increase toward the northeast.
//! * Tableaux are bijective fillings with values `1..=n` that increase along
//!   rows (left to right) and up columns (bottom to top).
//! * The *content reading word* lists entries by increasing content, moving
//!   northeast (increasing row) along each diagonal. The *row reading word*
//!   lists rows from top to bottom, each left to right. For a fixed tableau
//!   the two words are Knuth equivalent and share one signature.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::words::Word;
use crate::{DegError, Result};

/// A cell of a (skew) diagram: `row` counted from the bottom, `col` from the
/// left, both 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `col - row`; constant along southwest–northeast diagonals.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition: weakly decreasing positive parts.
///
/// `parts()[r]` is the length of row `r`, counting rows from the bottom.
/// Trailing zero parts are stripped on construction, so the empty partition
/// has no parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Returns an error if the parts are not weakly decreasing or a zero
    /// appears before a positive part.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(DegError::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(DegError::InvalidPartition(format!(
                "zero part before a positive part in {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (nonempty) rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `r`, or `0` when `r` is beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.row_len(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Whether every row of `other` fits inside the same row of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.rows()).all(|r| other.row_len(r) <= self.row_len(r))
    }

    /// Removable corners: cells whose removal leaves a partition diagram.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.rows())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r) - 1))
            .collect()
    }

    /// All partitions of `n`, in descending lexicographic order, so `(n)`
    /// comes first and `(1,1,...,1)` last.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// A skew shape `outer / inner` with `inner` contained in `outer`.
///
/// A straight shape is the special case of an empty `inner`. Rows of the
/// shape may be empty (when `inner` and `outer` agree on that row).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(DegError::InvalidShape(format!(
                "inner {inner} is not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `outer / ()`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer partition (possibly including empty rows
    /// of the skew shape).
    pub fn rows(&self) -> usize {
        self.outer.rows()
    }

    /// Whether the cell in row `r`, column `c` belongs to the shape.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.inner.row_len(row) <= col && col < self.outer.row_len(row)
    }

    /// Cells sorted by row, then column.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for r in 0..self.rows() {
            for c in self.inner.row_len(r)..self.outer.row_len(r) {
                out.push(Cell::new(r, c));
            }
        }
        out
    }

    /// Cells in content reading order: by increasing content, northeast
    /// (increasing row) along each diagonal.
    pub fn cells_by_content(&self) -> Vec<Cell> {
        let mut cells = self.cells();
        cells.sort_by_key(|x| (x.content(), x.row));
        cells
    }

    /// Cells in row reading order: rows from top to bottom, left to right.
    pub fn cells_row_reading(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for r in (0..self.rows()).rev() {
            for c in self.inner.row_len(r)..self.outer.row_len(r) {
                out.push(Cell::new(r, c));
            }
        }
        out
    }

    /// The conjugate shape (transpose of both partitions).
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Reconstructs the unique minimal skew shape whose cell set is exactly
    /// `cells`, or reports that no skew shape has that cell set.
    ///
    /// Rows that lie strictly below the lowest occupied row are kept (empty),
    /// because cell positions — and hence contents — are preserved exactly.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Ok(SkewShape::straight(Partition::empty()));
        }
        let max_row = cells.iter().map(|x| x.row).max().unwrap();
        // Row intervals [start, end) for each row up to the top occupied one.
        let mut spans: Vec<Option<(usize, usize)>> = vec![None; max_row + 1];
        for x in cells {
            let span = spans[x.row].get_or_insert((x.col, x.col + 1));
            span.0 = span.0.min(x.col);
            span.1 = span.1.max(x.col + 1);
        }
        for (r, span) in spans.iter().enumerate() {
            if let Some((start, end)) = span {
                let width = end - start;
                let have = cells.iter().filter(|x| x.row == r).count();
                if have != width {
                    return Err(DegError::InvalidShape(format!(
                        "row {r} is not contiguous: occupies a span of width {width} with {have} cells"
                    )));
                }
            }
        }
        // Assign outer/inner row lengths from the top down; empty rows take
        // the smallest value compatible with the row above.
        let mut outer = vec![0usize; max_row + 1];
        let mut inner = vec![0usize; max_row + 1];
        let mut above: Option<(usize, usize)> = None; // (outer, inner) of row above
        for r in (0..=max_row).rev() {
            let (o, i) = match spans[r] {
                Some((start, end)) => (end, start),
                None => {
                    let (ao, _) = above.expect("top row is occupied");
                    (ao, ao)
                }
            };
            if let Some((ao, ai)) = above {
                if o < ao || i < ai {
                    return Err(DegError::InvalidShape(format!(
                        "row {r} (cols {i}..{o}) does not support the row above (cols {ai}..{ao})"
                    )));
                }
            }
            outer[r] = o;
            inner[r] = i;
            above = Some((o, i));
        }
        SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
    }

    /// Whether some translate of the straight diagram `pattern` is contained
    /// in this shape, comparing cell sets in the plane.
    pub fn contains_translate_of(&self, pattern: &Partition) -> bool {
        if pattern.is_empty() {
            return true;
        }
        if pattern.size() > self.size() {
            return false;
        }
        let cells: BTreeSet<Cell> = self.cells().into_iter().collect();
        let max_row = self.rows().saturating_sub(1);
        let max_col = self.outer.row_len(0).saturating_sub(1);
        for dr in 0..=max_row {
            for dc in 0..=max_col {
                let fits = (0..pattern.rows()).all(|r| {
                    (0..pattern.row_len(r)).all(|c| cells.contains(&Cell::new(r + dr, c + dc)))
                });
                if fits {
                    return true;
                }
            }
        }
        false
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            outer: Partition,
            #[serde(default)]
            inner: Option<Partition>,
        }
        let raw = Raw::deserialize(d)?;
        SkewShape::new(raw.outer, raw.inner.unwrap_or_else(Partition::empty))
            .map_err(D::Error::custom)
    }
}

/// All skew shapes with exactly `n` cells, one representative per
/// reading-word behaviour class.
///
/// Representatives are normalised so that: no row of the shape is empty, the
/// top row starts in column 0, and where consecutive rows do not overlap in
/// any column the horizontal gap is the smallest one that realises the
/// disconnection. Every skew shape with `n` cells has the same standard
/// fillings, reading words and signatures as exactly one representative.
/// Straight shapes appear among the representatives.
pub fn enumerate_skew_shapes(n: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(SkewShape::straight(Partition::empty()));
        return out;
    }
    // Compositions of n: row widths from bottom to top.
    let mut widths: Vec<usize> = Vec::new();
    fn compositions(rest: usize, widths: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(widths.clone());
            return;
        }
        for w in 1..=rest {
            widths.push(w);
            compositions(rest - w, widths, out);
            widths.pop();
        }
    }
    let mut comps = Vec::new();
    compositions(n, &mut widths, &mut comps);

    for widths in comps {
        let rows = widths.len();
        // offsets[r] = start(row r) - start(row r+1) for r in 0..rows-1;
        // bounded below so rows nest as a skew shape and above so that a
        // disconnected junction uses its smallest representative.
        let ranges: Vec<(usize, usize)> = (0..rows.saturating_sub(1))
            .map(|r| (widths[r + 1].saturating_sub(widths[r]), widths[r + 1]))
            .collect();
        let mut offsets: Vec<usize> = ranges.iter().map(|&(lo, _)| lo).collect();
        'odometer: loop {
            // Materialise the shape for the current offsets.
            let mut starts = vec![0usize; rows];
            for r in (0..rows.saturating_sub(1)).rev() {
                starts[r] = starts[r + 1] + offsets[r];
            }
            let outer: Vec<usize> = (0..rows).map(|r| starts[r] + widths[r]).collect();
            let shape = SkewShape::new(
                Partition::new(outer).expect("outer is weakly decreasing by construction"),
                Partition::new(starts).expect("inner is weakly decreasing by construction"),
            )
            .expect("inner is contained in outer by construction");
            out.push(shape);

            // Advance the odometer over the offset ranges.
            let mut pos = 0usize;
            loop {
                if pos == offsets.len() {
                    break 'odometer;
                }
                if offsets[pos] < ranges[pos].1 {
                    offsets[pos] += 1;
                    break;
                }
                offsets[pos] = ranges[pos].0;
                pos += 1;
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A signature: a sequence of `+1`/`-1` entries, one entry shorter than the
/// words it describes. Displayed as a string of `+` and `-`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    signs: Vec<i8>,
}

impl Signature {
    /// Builds a signature from `+1`/`-1` entries.
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(DegError::InvalidWord(format!(
                "signature entries must be +1 or -1, got {signs:?}"
            )));
        }
        Ok(Signature { signs })
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// The `i`-th entry, 1-based; `None` when `i` is out of range.
    pub fn sign(&self, i: usize) -> Option<i8> {
        if i == 0 {
            return None;
        }
        self.signs.get(i - 1).copied()
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.signs
    }

    /// Truncates to the first `len` entries.
    pub fn truncate(&self, len: usize) -> Signature {
        Signature {
            signs: self.signs[..len.min(self.signs.len())].to_vec(),
        }
    }

    /// Drops the first `h` entries.
    pub fn drop_front(&self, h: usize) -> Signature {
        Signature {
            signs: self.signs[h.min(self.signs.len())..].to_vec(),
        }
    }

    /// Reverses the entry order.
    pub fn reversed(&self) -> Signature {
        let mut signs = self.signs.clone();
        signs.reverse();
        Signature { signs }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = DegError;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(DegError::InvalidWord(format!(
                    "signature character {other:?} is not '+' or '-'"
                ))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Ok(Signature { signs })
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Signature {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A standard Young tableau of a (possibly skew) shape.
///
/// `rows[r]` lists the values of row `r` from left to right, rows from the
/// bottom; it is parallel to the cells of row `r` of the shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau, validating that `rows` match the shape and form a
    /// standard filling: the values are exactly `1..=n`, rows increase left
    /// to right, and columns increase bottom to top.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(DegError::InvalidTableau(format!(
                "{} rows given for shape {shape} with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            let width = shape.outer().row_len(r) - shape.inner().row_len(r);
            if row.len() != width {
                return Err(DegError::InvalidTableau(format!(
                    "row {r} has {} entries but shape {shape} expects {width}",
                    row.len()
                )));
            }
        }
        let t = Tableau { shape, rows };
        let n = t.size();
        let mut seen = vec![false; n + 1];
        for &v in t.rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(DegError::InvalidTableau(format!(
                    "values must be exactly 1..={n}, got a repeated or out-of-range {v}"
                )));
            }
            seen[v] = true;
        }
        for row in &t.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(DegError::InvalidTableau(format!(
                    "row {row:?} is not increasing"
                )));
            }
        }
        for cell in t.shape.cells() {
            if t.shape.contains_cell(cell.row + 1, cell.col) {
                let below = t.value_at(cell).unwrap();
                let above = t.value_at(Cell::new(cell.row + 1, cell.col)).unwrap();
                if below >= above {
                    return Err(DegError::InvalidTableau(format!(
                        "column {} is not increasing: {below} sits below {above}",
                        cell.col
                    )));
                }
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Row values bottom to top, each row left to right.
    pub fn row_values(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// The value in `cell`, or `None` when the cell is outside the shape.
    pub fn value_at(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains_cell(cell.row, cell.col) {
            return None;
        }
        let offset = cell.col - self.shape.inner().row_len(cell.row);
        Some(self.rows[cell.row][offset])
    }

    /// The cell holding value `v`, or `None` when `v` is out of range.
    pub fn cell_of_value(&self, v: usize) -> Option<Cell> {
        for (r, row) in self.rows.iter().enumerate() {
            for (i, &value) in row.iter().enumerate() {
                if value == v {
                    return Some(Cell::new(r, self.shape.inner().row_len(r) + i));
                }
            }
        }
        None
    }

    /// Entries by increasing content, northeast along each diagonal.
    pub fn content_reading_word(&self) -> Word {
        let letters = self
            .shape
            .cells_by_content()
            .into_iter()
            .map(|x| self.value_at(x).unwrap())
            .collect();
        Word::new(letters).expect("tableau entries are positive")
    }

    /// Entries by rows from top to bottom, left to right.
    pub fn row_reading_word(&self) -> Word {
        let letters = self
            .shape
            .cells_row_reading()
            .into_iter()
            .map(|x| self.value_at(x).unwrap())
            .collect();
        Word::new(letters).expect("tableau entries are positive")
    }

    /// The signature of the content reading word.
    pub fn signature(&self) -> Signature {
        self.content_reading_word().signature()
    }

    /// Rebuilds a tableau of `shape` whose content reading word is `word`.
    pub fn from_content_word(shape: &SkewShape, word: &Word) -> Result<Self> {
        let cells = shape.cells_by_content();
        if cells.len() != word.len() {
            return Err(DegError::InvalidTableau(format!(
                "word of length {} cannot fill shape {shape} with {} cells",
                word.len(),
                cells.len()
            )));
        }
        let mut rows: Vec<Vec<(usize, usize)>> = vec![Vec::new(); shape.rows()];
        for (cell, &v) in cells.iter().zip(word.letters()) {
            rows[cell.row].push((cell.col, v));
        }
        let rows = rows
            .into_iter()
            .map(|mut row| {
                row.sort();
                row.into_iter().map(|(_, v)| v).collect()
            })
            .collect();
        Tableau::new(shape.clone(), rows)
    }

    /// The transposed tableau on the conjugate shape.
    pub fn conjugate(&self) -> Result<Tableau> {
        let shape = self.shape.conjugate();
        let mut rows: Vec<Vec<usize>> = (0..shape.rows())
            .map(|r| {
                let width = shape.outer().row_len(r) - shape.inner().row_len(r);
                vec![0; width]
            })
            .collect();
        for cell in self.shape.cells() {
            let v = self.value_at(cell).unwrap();
            let offset = cell.row - shape.inner().row_len(cell.col);
            rows[cell.col][offset] = v;
        }
        // Transposition swaps the row and column conditions, so validation
        // still applies — but values now increase up columns and across rows
        // only if the original was standard, which `new` re-checks.
        Tableau::new(shape, rows)
    }

    /// Rectifies a skew tableau to a straight tableau by jeu de taquin,
    /// always sliding into the inner corner of largest content (distinct
    /// corners of a partition always have distinct contents).
    pub fn rectify(&self) -> Tableau {
        use std::collections::HashMap;

        let mut outer: Vec<usize> = (0..self.shape.rows())
            .map(|r| self.shape.outer().row_len(r))
            .collect();
        let mut inner: Vec<usize> = (0..self.shape.rows())
            .map(|r| self.shape.inner().row_len(r))
            .collect();
        let mut grid: HashMap<(usize, usize), usize> = self
            .shape
            .cells()
            .into_iter()
            .map(|x| ((x.row, x.col), self.value_at(x).unwrap()))
            .collect();

        loop {
            // Inner corners: rows where the inner partition strictly exceeds
            // the row above.
            let corner = (0..inner.len())
                .filter(|&r| inner[r] > 0 && inner[r] > inner.get(r + 1).copied().unwrap_or(0))
                .map(|r| (r, inner[r] - 1))
                .max_by_key(|&(r, c)| c as i64 - r as i64);
            let Some((mut hr, mut hc)) = corner else {
                break;
            };
            inner[hr] -= 1;
            loop {
                let right = (hc + 1 < outer[hr]).then(|| grid[&(hr, hc + 1)]);
                let above = (hr + 1 < outer.len()
                    && inner[hr + 1] <= hc
                    && hc < outer[hr + 1])
                    .then(|| grid[&(hr + 1, hc)]);
                match (right, above) {
                    (None, None) => {
                        outer[hr] = hc;
                        break;
                    }
                    (Some(v), None) => {
                        grid.insert((hr, hc), v);
                        grid.remove(&(hr, hc + 1));
                        hc += 1;
                    }
                    (None, Some(v)) => {
                        grid.insert((hr, hc), v);
                        grid.remove(&(hr + 1, hc));
                        hr += 1;
                    }
                    (Some(rv), Some(av)) => {
                        if rv < av {
                            grid.insert((hr, hc), rv);
                            grid.remove(&(hr, hc + 1));
                            hc += 1;
                        } else {
                            grid.insert((hr, hc), av);
                            grid.remove(&(hr + 1, hc));
                            hr += 1;
                        }
                    }
                }
            }
        }

        let outer = Partition::new(outer).expect("jeu de taquin preserves partition rows");
        let rows = (0..outer.rows())
            .map(|r| (0..outer.row_len(r)).map(|c| grid[&(r, c)]).collect())
            .collect();
        Tableau::new(SkewShape::straight(outer), rows)
            .expect("jeu de taquin preserves standardness")
    }
}

impl fmt::Display for Tableau {
    /// Draws the tableau top row first; cells of the inner shape print as
    /// dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for r in (0..self.shape.rows()).rev() {
            for c in 0..self.shape.outer().row_len(r) {
                if c > 0 {
                    write!(f, " ")?;
                }
                match self.value_at(Cell::new(r, c)) {
                    Some(v) => write!(f, "{v:>width$}")?,
                    None => write!(f, "{:>width$}", ".")?,
                }
            }
            if r > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            shape: SkewShape,
            rows: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(d)?;
        Tableau::new(raw.shape, raw.rows).map_err(D::Error::custom)
    }
}

/// All standard Young tableaux of `shape`, sorted by row reading word.
pub fn enumerate_standard(shape: &SkewShape) -> Vec<Tableau> {
    let cells = shape.cells();
    let n = cells.len();
    let mut values: std::collections::HashMap<Cell, usize> = Default::default();
    let mut out = Vec::new();

    // Backtracking: place 1..=n, each time on a cell whose left and lower
    // neighbours (within the shape) are already filled.
    fn place(
        shape: &SkewShape,
        cells: &[Cell],
        next: usize,
        n: usize,
        values: &mut std::collections::HashMap<Cell, usize>,
        out: &mut Vec<Tableau>,
    ) {
        if next > n {
            let rows = (0..shape.rows())
                .map(|r| {
                    (shape.inner().row_len(r)..shape.outer().row_len(r))
                        .map(|c| values[&Cell::new(r, c)])
                        .collect()
                })
                .collect();
            out.push(
                Tableau::new(shape.clone(), rows).expect("backtracking placements are standard"),
            );
            return;
        }
        for &cell in cells {
            if values.contains_key(&cell) {
                continue;
            }
            let left_ok = cell.col == 0
                || !shape.contains_cell(cell.row, cell.col - 1)
                || values.contains_key(&Cell::new(cell.row, cell.col - 1));
            let below_ok = cell.row == 0
                || !shape.contains_cell(cell.row - 1, cell.col)
                || values.contains_key(&Cell::new(cell.row - 1, cell.col));
            if left_ok && below_ok {
                values.insert(cell, next);
                place(shape, cells, next + 1, n, values, out);
                values.remove(&cell);
            }
        }
    }

    place(shape, &cells, 1, n, &mut values, &mut out);
    out.sort_by_key(|t| t.row_reading_word().letters().to_vec());
    out
}

/// The superstandard tableau of `lambda`: row `r` holds the consecutive run
/// beginning after all lower rows, so the bottom row is `1..=lambda_1` and so
/// on upward.
pub fn superstandard(lambda: &Partition) -> Tableau {
    let mut next = 1usize;
    let rows = (0..lambda.rows())
        .map(|r| {
            let row: Vec<usize> = (0..lambda.row_len(r)).map(|i| next + i).collect();
            next += lambda.row_len(r);
            row
        })
        .collect();
    Tableau::new(SkewShape::straight(lambda.clone()), rows)
        .expect("consecutive rows form a standard tableau")
}
