//! Tuples of skew shapes, shifted contents, standard tuple fillings, the
//! inversion statistic, content-bound graphs on fillings, and the explicit
//! Schur expansion available when a tuple's diameter is at most 3.
//!
//! A `k`-tuple assigns every cell a *shifted content* `k·c(x) + i`, where
//! `c(x)` is the ordinary content of the cell and `i` is the index of the
//! component holding it. Reading cell values in increasing shifted content
//! (northeast within a diagonal) turns a standard filling into a permutation
//! — its *shifted content word* — and the whole theory of dual equivalence
//! on words applies through the controlled moves of
//! [`crate::words::controlled_move`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{classify_component, Payload, SignedColoredGraph};
use crate::qsym::{f_equal, FExpansion, SchurExpansion};
use crate::tableaux::{Cell, Partition, SkewShape};
use crate::words::{controlled_move, rsk, syam_shape, TauWord, Word};
use crate::{DegError, Result};

/// An ordered tuple of skew shapes.
///
/// Component order matters and shapes are kept exactly as given — shifted
/// content depends on each cell's real content, so no normalization across
/// translations is performed. Components may be empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewTuple {
    shapes: Vec<SkewShape>,
}

impl SkewTuple {
    /// Builds a tuple from its ordered components (at least one).
    pub fn new(shapes: Vec<SkewShape>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(DegError::InvalidShape(
                "a tuple needs at least one component".into(),
            ));
        }
        Ok(SkewTuple { shapes })
    }

    /// Convenience constructor from straight shapes.
    pub fn of_straight(parts: Vec<Partition>) -> Result<Self> {
        SkewTuple::new(parts.into_iter().map(SkewShape::straight).collect())
    }

    /// Number of components, the `k` in `k`-tuple.
    pub fn k(&self) -> usize {
        self.shapes.len()
    }

    /// The ordered components.
    pub fn shapes(&self) -> &[SkewShape] {
        &self.shapes
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.shapes.iter().map(SkewShape::size).sum()
    }

    /// Shifted content of a cell in the given component.
    pub fn shifted_content(&self, component: usize, cell: Cell) -> i64 {
        self.k() as i64 * cell.content() + component as i64
    }

    /// All cells in shifted content reading order: increasing shifted
    /// content, northeast (increasing row) along each diagonal. Cells of
    /// equal shifted content always lie in the same component.
    pub fn reading_order(&self) -> Vec<(usize, Cell)> {
        let mut cells: Vec<(usize, Cell)> = self
            .shapes
            .iter()
            .enumerate()
            .flat_map(|(i, shape)| shape.cells().into_iter().map(move |c| (i, c)))
            .collect();
        cells.sort_by_key(|&(i, c)| (self.shifted_content(i, c), c.row));
        cells
    }

    /// The weakly increasing sequence of shifted contents, one per cell.
    pub fn shifted_contents(&self) -> Vec<i64> {
        self.reading_order()
            .into_iter()
            .map(|(i, c)| self.shifted_content(i, c))
            .collect()
    }

    /// The content bound controlling which elementary move acts at each
    /// index: entry `i` is the largest `j` whose shifted content exceeds
    /// cell `i`'s by at most `k`.
    pub fn tau(&self) -> Result<TauWord> {
        let contents = self.shifted_contents();
        let n = contents.len();
        if n == 0 {
            return Err(DegError::InvalidShape("empty tuple has no bound".into()));
        }
        let k = self.k() as i64;
        let bounds: Vec<usize> = (0..n)
            .map(|i| {
                (i..n)
                    .take_while(|&j| contents[j] - contents[i] <= k)
                    .last()
                    .expect("j = i always qualifies")
                    + 1
            })
            .collect();
        TauWord::new(bounds)
    }

    /// The diameter: the largest number of distinct shifted contents that
    /// fit in a window of width `k`.
    pub fn diam(&self) -> Result<usize> {
        let distinct: Vec<i64> = self
            .shifted_contents()
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if distinct.is_empty() {
            return Err(DegError::InvalidShape("empty tuple has no diameter".into()));
        }
        let k = self.k() as i64;
        let mut best = 1;
        let mut lo = 0;
        for hi in 0..distinct.len() {
            while distinct[hi] - distinct[lo] > k {
                lo += 1;
            }
            best = best.max(hi - lo + 1);
        }
        Ok(best)
    }
}

impl fmt::Display for SkewTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, shape) in self.shapes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{shape}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for SkewTuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(&Partition, &Partition)> = self
            .shapes
            .iter()
            .map(|sh| (sh.outer(), sh.inner()))
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewTuple {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let pairs = Vec::<(Partition, Partition)>::deserialize(d)?;
        let shapes = pairs
            .into_iter()
            .map(|(outer, inner)| SkewShape::new(outer, inner))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        SkewTuple::new(shapes).map_err(D::Error::custom)
    }
}

/// A standard filling of a tuple: the values `1..n` distributed over the
/// cells so that every component is increasing across rows and up columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleFilling {
    tuple: SkewTuple,
    values: Vec<BTreeMap<Cell, usize>>,
}

impl TupleFilling {
    /// The underlying tuple.
    pub fn tuple(&self) -> &SkewTuple {
        &self.tuple
    }

    /// The value in a cell of a component, if the cell is in the shape.
    pub fn value_at(&self, component: usize, cell: Cell) -> Option<usize> {
        self.values.get(component)?.get(&cell).copied()
    }

    /// The component and cell holding a value.
    pub fn cell_of_value(&self, v: usize) -> Option<(usize, Cell)> {
        for (i, comp) in self.values.iter().enumerate() {
            if let Some((&cell, _)) = comp.iter().find(|&(_, &val)| val == v) {
                return Some((i, cell));
            }
        }
        None
    }

    /// Reconstructs a filling from its shifted content word.
    pub fn from_word(tuple: &SkewTuple, word: &Word) -> Result<TupleFilling> {
        word.require_permutation()?;
        let order = tuple.reading_order();
        if order.len() != word.len() {
            return Err(DegError::InvalidWord(format!(
                "word length {} does not match tuple size {}",
                word.len(),
                order.len()
            )));
        }
        let mut values: Vec<BTreeMap<Cell, usize>> = vec![BTreeMap::new(); tuple.k()];
        for (&(comp, cell), &v) in order.iter().zip(word.letters()) {
            values[comp].insert(cell, v);
        }
        let filling = TupleFilling {
            tuple: tuple.clone(),
            values,
        };
        filling.check_standard()?;
        Ok(filling)
    }

    fn check_standard(&self) -> Result<()> {
        for (i, comp) in self.values.iter().enumerate() {
            for (&cell, &v) in comp.iter() {
                let right = Cell::new(cell.row, cell.col + 1);
                if let Some(&w) = comp.get(&right) {
                    if v >= w {
                        return Err(DegError::InvalidTableau(format!(
                            "component {i} is not increasing across row {}",
                            cell.row
                        )));
                    }
                }
                let up = Cell::new(cell.row + 1, cell.col);
                if let Some(&w) = comp.get(&up) {
                    if v >= w {
                        return Err(DegError::InvalidTableau(format!(
                            "component {i} is not increasing up column {}",
                            cell.col
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The word of cell values in shifted content reading order.
    pub fn shifted_content_word(&self) -> Word {
        let letters: Vec<usize> = self
            .tuple
            .reading_order()
            .into_iter()
            .map(|(comp, cell)| self.values[comp][&cell])
            .collect();
        Word::new(letters).expect("standard fillings yield permutations")
    }

    /// The inversion statistic: pairs of cells whose shifted contents differ
    /// by strictly less than `k` (and more than zero) holding values in
    /// decreasing order.
    pub fn inv(&self) -> u32 {
        let k = self.tuple.k() as i64;
        let cells: Vec<(i64, usize)> = self
            .tuple
            .reading_order()
            .into_iter()
            .map(|(comp, cell)| (self.tuple.shifted_content(comp, cell), self.values[comp][&cell]))
            .collect();
        let mut count = 0;
        for (i, &(cx, vx)) in cells.iter().enumerate() {
            for &(cy, vy) in &cells[i + 1..] {
                if cy - cx > 0 && cy - cx < k && vx > vy {
                    count += 1;
                }
            }
        }
        count
    }
}

/// All standard fillings of a tuple, in lexicographic order of their cell
/// placements (value 1 first, the reading order breaking ties).
pub fn enumerate_tuple_fillings(tuple: &SkewTuple) -> Vec<TupleFilling> {
    let order = tuple.reading_order();
    let n = order.len();
    let mut out = Vec::new();
    let mut values: Vec<BTreeMap<Cell, usize>> = vec![BTreeMap::new(); tuple.k()];

    fn recurse(
        tuple: &SkewTuple,
        order: &[(usize, Cell)],
        n: usize,
        next: usize,
        values: &mut Vec<BTreeMap<Cell, usize>>,
        out: &mut Vec<TupleFilling>,
    ) {
        if next > n {
            out.push(TupleFilling {
                tuple: tuple.clone(),
                values: values.clone(),
            });
            return;
        }
        for &(comp, cell) in order {
            if values[comp].contains_key(&cell) {
                continue;
            }
            let shape = &tuple.shapes()[comp];
            let left_ok = cell.col == 0
                || !shape.contains_cell(cell.row, cell.col - 1)
                || values[comp].contains_key(&Cell::new(cell.row, cell.col - 1));
            let below_ok = cell.row == 0
                || !shape.contains_cell(cell.row - 1, cell.col)
                || values[comp].contains_key(&Cell::new(cell.row - 1, cell.col));
            if !(left_ok && below_ok) {
                continue;
            }
            values[comp].insert(cell, next);
            recurse(tuple, order, n, next + 1, values, out);
            values[comp].remove(&cell);
        }
    }

    recurse(tuple, &order, n, 1, &mut values, &mut out);
    out
}

/// Which elementary move the controlled move applies at index `i` on `w`,
/// with the first and last positions of the value window `i-1, i, i+1`.
struct MoveKind {
    nontrivial: bool,
    twisted: bool,
    first: usize,
    last: usize,
}

fn move_kind(w: &Word, tau: &TauWord, i: usize) -> MoveKind {
    let pos = |v: usize| w.position_of(v).expect("permutation") + 1;
    let (pa, pb, pc) = (pos(i - 1), pos(i), pos(i + 1));
    let first = pa.min(pb).min(pc);
    let last = pa.max(pb).max(pc);
    let nontrivial = !(first < pb && pb < last);
    let twisted = tau.bound(first).expect("position in range") >= last;
    MoveKind {
        nontrivial,
        twisted,
        first,
        last,
    }
}

/// Builds the signed colored graph on the standard fillings of a tuple:
/// vertices are shifted content words with inverse-descent signatures, and
/// color `i` joins a word to its image under the controlled move for the
/// tuple's content bound. Type `(1, n, n)`.
///
/// The controlled moves are closed on the vertex set; a violation would be
/// an internal error and panics. When the diameter is at most 3, components
/// whose words insert to shapes with fewer than three rows are additionally
/// checked: their twisted moves only ever fire on three adjacent positions,
/// and insertion classifies the component as its insertion shape.
pub fn build_llt_graph(tuple: &SkewTuple) -> Result<SignedColoredGraph> {
    let n = tuple.size();
    if n == 0 {
        return Err(DegError::InvalidShape("empty tuple has no graph".into()));
    }
    let tau = tuple.tau()?;
    let fillings = enumerate_tuple_fillings(tuple);
    let mut words: Vec<Word> = fillings
        .iter()
        .map(TupleFilling::shifted_content_word)
        .collect();
    words.sort();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();

    let vertices: Vec<(Payload, crate::tableaux::Signature)> = words
        .iter()
        .map(|w| (Payload::Word(w.clone()), w.signature()))
        .collect();

    let mut edge_list = Vec::new();
    let mut twisted_moves: Vec<(usize, usize, usize)> = Vec::new();
    for (v, w) in words.iter().enumerate() {
        for i in 2..n {
            let moved = controlled_move(w, &tau, i)?;
            if &moved == w {
                continue;
            }
            let target = *index
                .get(&moved)
                .unwrap_or_else(|| panic!("controlled move {i} left the filling words at {w}"));
            if v < target {
                edge_list.push((i, v, target));
            }
            let kind = move_kind(w, &tau, i);
            debug_assert!(kind.nontrivial);
            if kind.twisted {
                twisted_moves.push((v, kind.first, kind.last));
            }
        }
    }
    let graph = SignedColoredGraph::new(1, n, n - 1, vertices, &edge_list)?;

    if tuple.diam()? <= 3 {
        assert_narrow_components(&graph, &words, &twisted_moves)?;
    }
    Ok(graph)
}

/// For components whose words all insert to shapes with fewer than three
/// rows: twisted moves act only on adjacent positions, and the component is
/// classified by insertion.
fn assert_narrow_components(
    graph: &SignedColoredGraph,
    words: &[Word],
    twisted_moves: &[(usize, usize, usize)],
) -> Result<()> {
    for comp in graph.components() {
        let shapes: BTreeSet<Partition> = comp
            .iter()
            .map(|&v| Ok(rsk(&words[v])?.0.shape().outer().clone()))
            .collect::<Result<_>>()?;
        if !shapes.iter().all(|sh| sh.rows() < 3) {
            continue;
        }
        let in_comp: BTreeSet<usize> = comp.iter().copied().collect();
        for &(v, first, last) in twisted_moves {
            if in_comp.contains(&v) {
                assert!(
                    last == first + 2,
                    "twisted move on a narrow component must act on adjacent positions: \
                     word {} moves at positions {first}..{last}",
                    words[v]
                );
            }
        }
        let comp_graph = graph.subgraph(&comp);
        let class = classify_component(&comp_graph)?;
        assert_eq!(
            class.as_ref(),
            shapes.iter().next(),
            "a narrow component must be classified by its insertion shape"
        );
    }
    Ok(())
}

/// The expansion of a tuple's generating function over standard fillings in
/// the fundamental basis, grading each filling by its inversion statistic.
pub fn llt_f_expansion(tuple: &SkewTuple) -> Result<FExpansion> {
    let n = tuple.size();
    if n == 0 {
        return Err(DegError::InvalidShape("empty tuple has no expansion".into()));
    }
    let mut f = FExpansion::new(n);
    for t in enumerate_tuple_fillings(tuple) {
        let word = t.shifted_content_word();
        f.add_monomial(&word.signature(), t.inv(), 0, 1)?;
    }
    Ok(f)
}

/// The explicit Schur expansion of a tuple's generating function, available
/// exactly when the diameter is at most 3: the coefficient of each partition
/// collects the inversion statistic over fillings whose shifted content word
/// is a standardized Yamanouchi word of that partition.
///
/// The result is re-expanded into the fundamental basis and checked against
/// [`llt_f_expansion`] before being returned.
pub fn llt_schur_expansion(tuple: &SkewTuple) -> Result<SchurExpansion> {
    let n = tuple.size();
    if n == 0 {
        return Err(DegError::InvalidShape("empty tuple has no expansion".into()));
    }
    let diam = tuple.diam()?;
    if diam > 3 {
        return Err(DegError::DiameterTooLarge { diam });
    }
    let mut e = SchurExpansion::new(n);
    for t in enumerate_tuple_fillings(tuple) {
        let word = t.shifted_content_word();
        if let Some(lambda) = syam_shape(&word)? {
            e.add_term(&lambda, &crate::qsym::QtPoly::monomial(t.inv(), 0, 1))?;
        }
    }
    let diff = f_equal(&e.expand(), &llt_f_expansion(tuple)?)?;
    assert!(
        diff.is_none(),
        "Yamanouchi Schur expansion must re-expand to the filling sum: {diff:?}"
    );
    Ok(e)
}

/// All `k`-tuples of straight shapes with the given total size (components
/// may be empty), in a fixed deterministic order.
pub fn straight_tuples(k: usize, size: usize) -> Vec<SkewTuple> {
    fn split(k: usize, size: usize, acc: &mut Vec<Partition>, out: &mut Vec<SkewTuple>) {
        if k == 1 {
            for lambda in Partition::all_of(size) {
                let mut parts = acc.clone();
                parts.push(lambda);
                out.push(SkewTuple::of_straight(parts).expect("nonempty tuple"));
            }
            return;
        }
        for first in 0..=size {
            for lambda in Partition::all_of(first) {
                acc.push(lambda);
                split(k - 1, size - first, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k >= 1 {
        split(k, size, &mut Vec::new(), &mut out);
    }
    out
}

/// A fixed reference collection of small tuples that together exercise
/// diameters 2 through 5, skew and straight components, and every branch of
/// the controlled moves. Each entry also appears in the golden tests.
pub fn reference_tuples() -> Vec<SkewTuple> {
    vec![
        reference_pair(),
        two_rows_and_columns(),
        column_waterfall(),
        two_one_one(),
        two_two_one_one(),
    ]
}

/// The nine-cell pair of skew shapes used as the running example for
/// shifted contents, inversions, and content bounds.
pub fn reference_pair() -> SkewTuple {
    let a = SkewShape::new(
        Partition::new(vec![3, 2, 2]).unwrap(),
        Partition::new(vec![1]).unwrap(),
    )
    .unwrap();
    let b = SkewShape::new(
        Partition::new(vec![3, 1, 1]).unwrap(),
        Partition::new(vec![2]).unwrap(),
    )
    .unwrap();
    SkewTuple::new(vec![a, b]).unwrap()
}

/// A two-component tuple with diameter 3: a staircase-like straight shape
/// next to a skew hook.
pub fn two_rows_and_columns() -> SkewTuple {
    let a = SkewShape::straight(Partition::new(vec![4, 3, 2, 2]).unwrap());
    let b = SkewShape::new(
        Partition::new(vec![4, 3, 1, 1]).unwrap(),
        Partition::new(vec![2, 2]).unwrap(),
    )
    .unwrap();
    SkewTuple::new(vec![a, b]).unwrap()
}

/// A three-component tuple with diameter 4: a tall hook, a single cell, and
/// a domino.
pub fn column_waterfall() -> SkewTuple {
    SkewTuple::of_straight(vec![
        Partition::new(vec![2, 1, 1, 1]).unwrap(),
        Partition::new(vec![1]).unwrap(),
        Partition::new(vec![1, 1]).unwrap(),
    ])
    .unwrap()
}

/// The three-component tuple `((2), (1), (1))` with diameter 4.
pub fn two_one_one() -> SkewTuple {
    SkewTuple::of_straight(vec![
        Partition::new(vec![2]).unwrap(),
        Partition::new(vec![1]).unwrap(),
        Partition::new(vec![1]).unwrap(),
    ])
    .unwrap()
}

/// The four-component tuple `((2), (2), (1), (1))` with diameter 5.
pub fn two_two_one_one() -> SkewTuple {
    SkewTuple::of_straight(vec![
        Partition::new(vec![2]).unwrap(),
        Partition::new(vec![2]).unwrap(),
        Partition::new(vec![1]).unwrap(),
        Partition::new(vec![1]).unwrap(),
    ])
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_all, is_deg};
    use crate::graph::{find_isomorphism, skew_graph, standard_graph, IsoOptions};
    use crate::qsym::{extract_schur, QtPoly};
    use crate::tableaux::Signature;

    fn w(s: &str) -> Word {
        let letters: Vec<usize> = s
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect();
        Word::new(letters).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Corpus of small tuples: all straight 2-tuples and 3-tuples up to the
    /// size bound, plus the named reference tuples that fit it.
    fn corpus(max_size: usize) -> Vec<SkewTuple> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            out.extend(straight_tuples(2, n));
            if n <= 6 {
                out.extend(straight_tuples(3, n));
            }
        }
        out.extend(reference_tuples().into_iter().filter(|t| t.size() <= max_size));
        out
    }

    #[test]
    fn reference_pair_reading_golden() {
        let tuple = reference_pair();
        assert_eq!(tuple.k(), 2);
        assert_eq!(tuple.size(), 9);
        assert_eq!(
            tuple.shifted_contents(),
            vec![-4, -3, -2, -2, -1, 0, 2, 4, 5]
        );
        // The filling read off the running example.
        let word = w("453826179");
        let filling = TupleFilling::from_word(&tuple, &word).unwrap();
        assert_eq!(filling.shifted_content_word(), word);
        assert_eq!(word.signature(), "---+++-+".parse::<Signature>().unwrap());
        assert_eq!(filling.inv(), 3);
    }

    #[test]
    fn reference_pair_content_bound_golden() {
        let tuple = reference_pair();
        assert_eq!(
            tuple.tau().unwrap(),
            TauWord::new(vec![4, 5, 6, 6, 6, 7, 8, 9, 9]).unwrap()
        );
        // A second standard filling of the same tuple, with both controlled
        // move branches exercised on its word by the move tests in `words`.
        let word = w("534826179");
        let filling = TupleFilling::from_word(&tuple, &word).unwrap();
        assert_eq!(filling.shifted_content_word(), word);
    }

    #[test]
    fn single_row_tuple_bound_is_shifted_identity() {
        for n in 1..=8 {
            let tuple = SkewTuple::of_straight(vec![p(&[n])]).unwrap();
            let expect: Vec<usize> = (1..=n).map(|i| (i + 1).min(n)).collect();
            assert_eq!(tuple.tau().unwrap(), TauWord::new(expect).unwrap());
        }
    }

    #[test]
    fn diameters_of_reference_tuples() {
        assert_eq!(reference_pair().diam().unwrap(), 3);
        assert_eq!(two_rows_and_columns().diam().unwrap(), 3);
        assert_eq!(column_waterfall().diam().unwrap(), 4);
        assert_eq!(two_one_one().diam().unwrap(), 4);
        assert_eq!(two_two_one_one().diam().unwrap(), 5);
        // Single cells and 1-tuples are degenerate.
        let cell = SkewTuple::of_straight(vec![p(&[1])]).unwrap();
        assert_eq!(cell.diam().unwrap(), 1);
        for lambda in Partition::all_of(5) {
            let tuple = SkewTuple::of_straight(vec![lambda]).unwrap();
            assert!(tuple.diam().unwrap() <= 2);
        }
    }

    #[test]
    fn filling_counts() {
        let pair = SkewTuple::of_straight(vec![p(&[1]), p(&[1])]).unwrap();
        assert_eq!(enumerate_tuple_fillings(&pair).len(), 2);
        assert_eq!(enumerate_tuple_fillings(&two_one_one()).len(), 12);
    }

    #[test]
    fn one_tuples_reduce_to_content_words() {
        let shape = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        let tuple = SkewTuple::new(vec![shape.clone()]).unwrap();
        let words: BTreeSet<Word> = enumerate_tuple_fillings(&tuple)
            .iter()
            .map(TupleFilling::shifted_content_word)
            .collect();
        let expect: BTreeSet<Word> = crate::tableaux::enumerate_standard(&shape)
            .iter()
            .map(|t| t.content_reading_word())
            .collect();
        assert_eq!(words, expect);
        for t in enumerate_tuple_fillings(&tuple) {
            assert_eq!(t.inv(), 0);
        }
    }

    #[test]
    fn four_component_graph_golden() {
        let tuple = two_two_one_one();
        assert_eq!(
            tuple.tau().unwrap(),
            TauWord::new(vec![5, 6, 6, 6, 6, 6]).unwrap()
        );
        let g = build_llt_graph(&tuple).unwrap();
        let a = g
            .all_edges()
            .iter()
            .find(|&&(_, u, v)| {
                g.payload(u).as_word() == Some(w("312654"))
                    && g.payload(v).as_word() == Some(w("412653"))
            })
            .copied();
        let (u, v) = match a {
            Some((_, u, v)) => (u, v),
            None => panic!("expected edge between 312654 and 412653"),
        };
        assert!(g.has_edge(3, u, v));
        assert!(g.has_edge(4, u, v));
        let comp = g
            .components()
            .into_iter()
            .find(|c| c.contains(&u))
            .unwrap();
        assert_eq!(comp.len(), 47);
    }

    #[test]
    fn one_tuple_graphs_match_shape_graphs() {
        for lambda in Partition::all_of(4).into_iter().chain(Partition::all_of(5)) {
            let tuple = SkewTuple::of_straight(vec![lambda.clone()]).unwrap();
            let l = build_llt_graph(&tuple).unwrap();
            let g = standard_graph(&lambda).unwrap();
            assert!(
                find_isomorphism(&l, &g, IsoOptions::signed()).is_some(),
                "one-tuple graph differs from the shape graph for {lambda}"
            );
        }
        let shape = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        let tuple = SkewTuple::new(vec![shape.clone()]).unwrap();
        let l = build_llt_graph(&tuple).unwrap();
        let g = skew_graph(&shape).unwrap();
        assert!(find_isomorphism(&l, &g, IsoOptions::signed()).is_some());
    }

    #[test]
    fn two_cell_tuple_expansions() {
        let tuple = SkewTuple::of_straight(vec![p(&[1]), p(&[1])]).unwrap();
        let g = build_llt_graph(&tuple).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 0);

        let f = llt_f_expansion(&tuple).unwrap();
        let plus = f.coeff(&"+".parse().unwrap());
        let minus = f.coeff(&"-".parse().unwrap());
        assert_eq!(plus, QtPoly::one());
        assert_eq!(minus, QtPoly::monomial(1, 0, 1));

        let e = llt_schur_expansion(&tuple).unwrap();
        assert_eq!(e.coeff(&p(&[2])), QtPoly::one());
        assert_eq!(e.coeff(&p(&[1, 1])), QtPoly::monomial(1, 0, 1));
    }

    #[test]
    fn straight_one_tuple_schur_expansion_is_itself() {
        for lambda in Partition::all_of(5) {
            let tuple = SkewTuple::of_straight(vec![lambda.clone()]).unwrap();
            let e = llt_schur_expansion(&tuple).unwrap();
            assert_eq!(e.terms().len(), 1);
            assert_eq!(e.coeff(&lambda), QtPoly::one());
        }
    }

    #[test]
    fn diameter_four_is_rejected_for_schur_expansion() {
        match llt_schur_expansion(&two_one_one()) {
            Err(DegError::DiameterTooLarge { diam: 4 }) => {}
            other => panic!("expected a diameter error, got {other:?}"),
        }
    }

    #[test]
    fn sharpness_coefficient_of_q_squared() {
        // The diameter-4 tuple ((2),(1),(1)) has F-expansion whose exact
        // Schur decomposition puts coefficient q^2 on s(2,2), while no
        // filling with a Yamanouchi word has that inversion count.
        let tuple = two_one_one();
        let f = llt_f_expansion(&tuple).unwrap();
        let e = extract_schur(&f).unwrap();
        assert_eq!(e.coeff(&p(&[2, 2])).coeff(2, 0), 1u8.into());
        let yam_weight: u32 = enumerate_tuple_fillings(&tuple)
            .iter()
            .filter(|t| {
                t.inv() == 2
                    && syam_shape(&t.shifted_content_word()).unwrap() == Some(p(&[2, 2]))
            })
            .count() as u32;
        assert_eq!(yam_weight, 0);
    }

    #[test]
    fn axioms_one_two_three_five_and_inversion_constancy() {
        for tuple in corpus(5) {
            let g = match build_llt_graph(&tuple) {
                Ok(g) => g,
                Err(e) => panic!("graph build failed for {tuple}: {e}"),
            };
            let report = check_all(&g);
            assert!(report.axiom1.is_none(), "{tuple}: {:?}", report.axiom1);
            assert!(report.axiom2.is_none(), "{tuple}: {:?}", report.axiom2);
            assert!(report.axiom3.is_none(), "{tuple}: {:?}", report.axiom3);
            assert!(report.axiom5.is_none(), "{tuple}: {:?}", report.axiom5);
            // The inversion statistic is constant on connected components.
            for comp in g.components() {
                let invs: BTreeSet<u32> = comp
                    .iter()
                    .map(|&v| {
                        let word = g.payload(v).as_word().unwrap();
                        TupleFilling::from_word(&tuple, &word).unwrap().inv()
                    })
                    .collect();
                assert_eq!(invs.len(), 1, "inversion not constant on {tuple}");
            }
        }
    }

    #[test]
    fn graph_is_deg_exactly_when_diameter_at_most_three() {
        for tuple in corpus(6) {
            let g = build_llt_graph(&tuple).unwrap();
            let expect = tuple.diam().unwrap() <= 3;
            assert_eq!(is_deg(&g), expect, "{tuple}");
        }
    }

    #[test]
    fn unique_yamanouchi_word_per_component() {
        let mut tuples = corpus(6);
        tuples.extend(straight_tuples(2, 7));
        tuples.push(reference_pair());
        for tuple in tuples {
            if tuple.diam().unwrap() > 3 {
                continue;
            }
            let g = build_llt_graph(&tuple).unwrap();
            for comp in g.components() {
                let count = comp
                    .iter()
                    .filter(|&&v| {
                        let word = g.payload(v).as_word().unwrap();
                        syam_shape(&word).unwrap().is_some()
                    })
                    .count();
                assert_eq!(count, 1, "component of {tuple} without a unique word");
            }
        }
    }

    #[test]
    fn schur_expansion_matches_exact_extraction_on_small_corpus() {
        for tuple in corpus(6) {
            if tuple.diam().unwrap() > 3 {
                continue;
            }
            let direct = llt_schur_expansion(&tuple).unwrap();
            let extracted = extract_schur(&llt_f_expansion(&tuple).unwrap()).unwrap();
            assert_eq!(direct, extracted, "{tuple}");
        }
    }

    #[test]
    fn restriction_matches_truncated_filling_graph() {
        // Restricting the graph of a tuple to low colors around a vertex
        // matches the graph of the tuple formed by the cells holding the low
        // values of that vertex's filling.
        let tuple = two_two_one_one();
        let g = build_llt_graph(&tuple).unwrap();
        let m = 4;
        let word = w("312654");
        let v = (0..g.vertex_count())
            .find(|&v| g.payload(v).as_word() == Some(word.clone()))
            .unwrap();
        let restricted = g.restrict(m, m).unwrap();
        let comp = restricted
            .components()
            .into_iter()
            .find(|c| c.contains(&v))
            .unwrap();
        let comp_graph = restricted.subgraph(&comp);

        // Cells of the filling holding values 1..=m, component by component.
        let filling = TupleFilling::from_word(&tuple, &word).unwrap();
        let shapes: Vec<SkewShape> = (0..tuple.k())
            .map(|i| {
                let cells: BTreeSet<Cell> = tuple.shapes()[i]
                    .cells()
                    .into_iter()
                    .filter(|&c| filling.value_at(i, c).unwrap() <= m)
                    .collect();
                if cells.is_empty() {
                    SkewShape::straight(Partition::empty())
                } else {
                    SkewShape::from_cells(&cells).unwrap()
                }
            })
            .collect();
        let truncated = SkewTuple::new(shapes).unwrap();
        let small = build_llt_graph(&truncated).unwrap();
        let small_word: Word = Word::new(
            word.letters()
                .iter()
                .copied()
                .filter(|&x| x <= m)
                .collect(),
        )
        .unwrap();
        let u = (0..small.vertex_count())
            .find(|&u| small.payload(u).as_word() == Some(small_word.clone()))
            .unwrap();
        let small_comp = small
            .components()
            .into_iter()
            .find(|c| c.contains(&u))
            .unwrap();
        let small_graph = small.subgraph(&small_comp);
        assert!(
            find_isomorphism(&comp_graph, &small_graph, IsoOptions::signed()).is_some(),
            "restriction does not match the truncated tuple"
        );
    }

    #[test]
    fn tuple_serialization_round_trips() {
        let tuple = reference_pair();
        let json = serde_json::to_string(&tuple).unwrap();
        assert_eq!(json, "[[[3,2,2],[1]],[[3,1,1],[2]]]");
        let back: SkewTuple = serde_json::from_str(&json).unwrap();
        assert_eq!(back, tuple);
        let cli: SkewTuple = serde_json::from_str("[[[2],[]],[[1],[]],[[1],[]]]").unwrap();
        assert_eq!(cli, two_one_one());
    }

    #[test]
    fn filling_count_equals_component_size_sum() {
        let tuple = two_one_one();
        let g = build_llt_graph(&tuple).unwrap();
        let total: usize = g.components().iter().map(Vec::len).sum();
        assert_eq!(total, enumerate_tuple_fillings(&tuple).len());
    }
}
