//! Ribbon tuples attached to the columns of a skew shape, their descent
//! statistics, and the two-variable symmetric function they generate.
//!
//! Every column of a skew shape prescribes a set of consecutive cell
//! contents (one per occupied row, negated). A *ribbon* — a connected skew
//! shape with at most one cell per content — realizes such a set in finitely
//! many ways: each adjacent pair of contents either shares a row or is
//! stacked vertically. Choosing one ribbon per column yields the tuples
//! produced by [`tr_tuples`]; summing `q^inv t^maj` over all standard
//! fillings of all such tuples gives the two-variable expansion of
//! [`macdonald_f_expansion`], and restricting to fillings with standardized
//! Yamanouchi words gives the explicit Schur expansions of
//! [`macdonald_schur_expansion`].

use std::collections::BTreeSet;

use crate::llt::{enumerate_tuple_fillings, llt_f_expansion, SkewTuple, TupleFilling};
use crate::qsym::{f_equal, FExpansion, QtPoly, SchurExpansion};
use crate::tableaux::{Cell, Partition, SkewShape};
use crate::words::syam_shape;
use crate::{DegError, Result};

/// A tuple of ribbons realizing the columns of a skew shape: component `i`
/// is a ribbon whose contents are the negated row indices of the cells in
/// column `i` (empty when the column is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonTuple {
    tuple: SkewTuple,
}

impl RibbonTuple {
    /// The underlying tuple of skew shapes.
    pub fn tuple(&self) -> &SkewTuple {
        &self.tuple
    }

    fn component(&self, component: usize, cell: Cell) -> Result<&SkewShape> {
        let shape = self
            .tuple
            .shapes()
            .get(component)
            .filter(|s| s.contains_cell(cell.row, cell.col))
            .ok_or_else(|| {
                DegError::InvalidShape(format!(
                    "cell ({}, {}) is not in component {component}",
                    cell.row, cell.col
                ))
            })?;
        Ok(shape)
    }

    /// Number of later components holding a cell of the same content.
    pub fn arm(&self, component: usize, cell: Cell) -> Result<usize> {
        self.component(component, cell)?;
        let content = cell.content();
        Ok(self
            .tuple
            .shapes()
            .iter()
            .skip(component + 1)
            .filter(|shape| shape.cells().iter().any(|y| y.content() == content))
            .count())
    }

    /// Number of cells of strictly smaller content in the same component.
    pub fn leg(&self, component: usize, cell: Cell) -> Result<usize> {
        let shape = self.component(component, cell)?;
        let content = cell.content();
        Ok(shape
            .cells()
            .iter()
            .filter(|y| y.content() < content)
            .count())
    }

    /// The descent cells: cells with a cell directly below them in the same
    /// component, listed as `(component, cell)` in component order.
    pub fn des(&self) -> Vec<(usize, Cell)> {
        let mut out = Vec::new();
        for (i, shape) in self.tuple.shapes().iter().enumerate() {
            for cell in shape.cells() {
                if cell.row > 0 && shape.contains_cell(cell.row - 1, cell.col) {
                    out.push((i, cell));
                }
            }
        }
        out
    }

    /// Total arm over the descent cells.
    pub fn a(&self) -> usize {
        self.des()
            .into_iter()
            .map(|(i, x)| self.arm(i, x).expect("descent cells are in the tuple"))
            .sum()
    }

    /// Total `1 + leg` over the descent cells. Constant across all standard
    /// fillings of the tuple.
    pub fn maj(&self) -> usize {
        self.des()
            .into_iter()
            .map(|(i, x)| 1 + self.leg(i, x).expect("descent cells are in the tuple"))
            .sum()
    }
}

/// The ribbon whose contents are `lo..=hi`, with vertical steps at the
/// content pairs selected by `drops` (bit `m` joins contents `hi-1-m` and
/// `hi-m`), placed in the least position with all rows and columns
/// nonnegative.
fn ribbon_from_drops(lo: i64, hi: i64, drops: u64) -> SkewShape {
    let mut row = 0i64;
    let mut rows = Vec::new(); // row of content hi, hi-1, ..., lo
    rows.push(0i64);
    for m in 0..(hi - lo) as u64 {
        if drops >> m & 1 == 1 {
            row += 1;
        }
        rows.push(row);
    }
    let min_col = rows
        .iter()
        .enumerate()
        .map(|(m, &r)| hi - m as i64 + r)
        .min()
        .expect("at least one cell");
    let shift = (-min_col).max(0);
    let cells: BTreeSet<Cell> = rows
        .iter()
        .enumerate()
        .map(|(m, &r)| {
            let content = hi - m as i64;
            Cell::new((r + shift) as usize, (content + r + shift) as usize)
        })
        .collect();
    SkewShape::from_cells(&cells).expect("ribbon cells form a skew shape")
}

/// All ribbon tuples realizing the columns of a skew shape: one ribbon per
/// column, each column of height `h` contributing `2^(h-1)` choices. Empty
/// for the empty shape.
pub fn tr_tuples(shape: &SkewShape) -> Vec<RibbonTuple> {
    let width = shape.outer().parts().first().copied().unwrap_or(0);
    if shape.size() == 0 || width == 0 {
        return Vec::new();
    }
    let top = shape.outer().rows();
    // Per column: the occupied row interval, or None when empty.
    let columns: Vec<Option<(usize, usize)>> = (0..width)
        .map(|col| {
            let rows: Vec<usize> = (0..top).filter(|&r| shape.contains_cell(r, col)).collect();
            match (rows.first(), rows.last()) {
                (Some(&a), Some(&b)) => {
                    assert_eq!(rows.len(), b - a + 1, "column rows must be consecutive");
                    Some((a, b + 1))
                }
                _ => None,
            }
        })
        .collect();

    let choices: Vec<Vec<SkewShape>> = columns
        .iter()
        .map(|interval| match interval {
            None => vec![SkewShape::straight(Partition::empty())],
            Some((a, b)) => {
                let (lo, hi) = (-((*b as i64) - 1), -(*a as i64));
                (0..1u64 << (hi - lo))
                    .map(|drops| ribbon_from_drops(lo, hi, drops))
                    .collect()
            }
        })
        .collect();

    let mut out = Vec::new();
    let mut current: Vec<SkewShape> = Vec::with_capacity(width);
    fn product(
        choices: &[Vec<SkewShape>],
        current: &mut Vec<SkewShape>,
        out: &mut Vec<RibbonTuple>,
    ) {
        match choices.first() {
            None => out.push(RibbonTuple {
                tuple: SkewTuple::new(current.clone()).expect("at least one column"),
            }),
            Some(options) => {
                for shape in options {
                    current.push(shape.clone());
                    product(&choices[1..], current, out);
                    current.pop();
                }
            }
        }
    }
    product(&choices, &mut current, &mut out);
    out
}

/// The inversion statistic of a standard filling of a ribbon tuple: the
/// plain inversion count of the filling minus the tuple's total descent arm.
/// Always nonnegative; a negative value would be an internal error.
pub fn mac_inv(ribbon: &RibbonTuple, filling: &TupleFilling) -> u32 {
    assert_eq!(
        filling.tuple(),
        ribbon.tuple(),
        "filling does not belong to the ribbon tuple"
    );
    let inv = filling.inv();
    let a = ribbon.a() as u32;
    assert!(
        inv >= a,
        "inversion count {inv} fell below the descent arm total {a}"
    );
    inv - a
}

/// The two-variable expansion in the fundamental basis: over every ribbon
/// tuple realizing the shape's columns and every standard filling, sum
/// `q^inv t^maj` against the filling word's signature.
///
/// The same series is recomputed tuple-by-tuple from the one-variable
/// filling expansions (shifted by each tuple's arm and maj) and the two
/// routes are checked against each other before returning.
pub fn macdonald_f_expansion(shape: &SkewShape) -> Result<FExpansion> {
    let n = shape.size();
    if n == 0 {
        return Err(DegError::InvalidShape("empty shape has no expansion".into()));
    }
    let tuples = tr_tuples(shape);
    let mut f = FExpansion::new(n);
    for ribbon in &tuples {
        let maj = ribbon.maj() as u32;
        for t in enumerate_tuple_fillings(ribbon.tuple()) {
            let sig = t.shifted_content_word().signature();
            f.add_monomial(&sig, mac_inv(ribbon, &t), maj, 1)?;
        }
    }

    let mut alt = FExpansion::new(n);
    for ribbon in &tuples {
        let g = llt_f_expansion(ribbon.tuple())?;
        let a = ribbon.a() as u32;
        let maj = ribbon.maj() as u32;
        for (sig, poly) in g.terms() {
            for (q, t, c) in poly.terms() {
                assert!(q >= a, "filling inversion exponent fell below the arm total");
                alt.add_monomial(sig, q - a, t + maj, c.clone())?;
            }
        }
    }
    let diff = f_equal(&f, &alt)?;
    assert!(
        diff.is_none(),
        "per-filling and per-tuple routes disagree: {diff:?}"
    );
    Ok(f)
}

/// Which of the two explicit Schur expansions to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MacMode {
    /// Requires the shape to avoid (3,3) and (4); expands directly.
    Direct,
    /// Requires the shape to avoid (2,2,2) and (1,1,1,1); expands the
    /// conjugate shape and swaps the two variables.
    Conjugate,
}

fn require_avoids(shape: &SkewShape, patterns: &[&[usize]]) -> Result<()> {
    for parts in patterns {
        let pattern = Partition::new(parts.to_vec()).expect("fixed valid patterns");
        if shape.contains_translate_of(&pattern) {
            return Err(DegError::ShapeNotCovered {
                pattern: pattern.to_string(),
            });
        }
    }
    Ok(())
}

/// The Yamanouchi-filtered Schur-coefficient sum: `q^inv t^maj` collected on
/// the partition whose standardized Yamanouchi word matches each filling's
/// reading word. No avoidance precondition is applied, so the result equals
/// the two-variable series only when the caller has established the covering
/// condition; elsewhere it is exactly the sum whose failure the sharpness
/// checks exhibit.
pub fn yamanouchi_schur(shape: &SkewShape) -> Result<SchurExpansion> {
    let n = shape.size();
    let mut e = SchurExpansion::new(n);
    for ribbon in tr_tuples(shape) {
        let maj = ribbon.maj() as u32;
        for t in enumerate_tuple_fillings(ribbon.tuple()) {
            if let Some(lambda) = syam_shape(&t.shifted_content_word())? {
                e.add_term(&lambda, &QtPoly::monomial(mac_inv(&ribbon, &t), maj, 1))?;
            }
        }
    }
    Ok(e)
}

/// The explicit Schur expansion of the shape's two-variable series, summing
/// `q^inv t^maj` over fillings whose word is a standardized Yamanouchi word
/// of each partition. The result is re-expanded into the fundamental basis
/// and checked against [`macdonald_f_expansion`] before being returned.
///
/// [`MacMode::Direct`] requires the shape to avoid (3,3) and (4) as
/// subdiagrams (up to translation); [`MacMode::Conjugate`] requires avoiding
/// (2,2,2) and (1,1,1,1) and works through the conjugate shape with the two
/// variables exchanged. A violating shape yields
/// [`DegError::ShapeNotCovered`] naming the offending subdiagram.
pub fn macdonald_schur_expansion(shape: &SkewShape, mode: MacMode) -> Result<SchurExpansion> {
    let n = shape.size();
    if n == 0 {
        return Err(DegError::InvalidShape("empty shape has no expansion".into()));
    }
    let expansion = match mode {
        MacMode::Direct => {
            require_avoids(shape, &[&[3, 3], &[4]])?;
            yamanouchi_schur(shape)?
        }
        MacMode::Conjugate => {
            require_avoids(shape, &[&[2, 2, 2], &[1, 1, 1, 1]])?;
            yamanouchi_schur(&shape.conjugate())?.swap_qt()
        }
    };
    let diff = f_equal(&expansion.expand(), &macdonald_f_expansion(shape)?)?;
    assert!(
        diff.is_none(),
        "Yamanouchi Schur expansion must re-expand to the filling sum: {diff:?}"
    );
    Ok(expansion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::extract_schur;
    use crate::tableaux::{enumerate_skew_shapes, Signature};
    use crate::words::Word;
    use num_bigint::BigInt;
    use std::collections::BTreeMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn straight(parts: &[usize]) -> SkewShape {
        SkewShape::straight(p(parts))
    }

    fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    /// The ten-cell three-column shape used as the running example, and the
    /// specific ribbon tuple and filling displayed for it.
    fn running_example() -> (SkewShape, RibbonTuple, TupleFilling) {
        let shape = straight(&[3, 3, 2, 1, 1]);
        let expected = SkewTuple::new(vec![
            skew(&[3, 3, 3, 3, 2], &[3, 3, 2, 1]),
            straight(&[1, 1, 1]),
            skew(&[2, 2], &[2]),
        ])
        .unwrap();
        let ribbon = tr_tuples(&shape)
            .into_iter()
            .find(|r| r.tuple() == &expected)
            .expect("the displayed tuple realizes the columns");
        let word = Word::new(vec![1, 4, 3, 9, 6, 7, 8, 2, 5, 10]).unwrap();
        let filling = TupleFilling::from_word(&expected, &word).unwrap();
        (shape, ribbon, filling)
    }

    #[test]
    fn running_example_statistics() {
        let (shape, ribbon, filling) = running_example();
        assert_eq!(tr_tuples(&shape).len(), 1 << 4 << 2 << 1);

        // The cell holding 6 sits in component 0 at content -1.
        let six = filling.cell_of_value(6).unwrap();
        assert_eq!(six, (0, Cell::new(3, 2)));
        assert_eq!(ribbon.arm(0, Cell::new(3, 2)).unwrap(), 2);
        assert_eq!(ribbon.leg(0, Cell::new(3, 2)).unwrap(), 3);

        let des_values: BTreeSet<usize> = ribbon
            .des()
            .into_iter()
            .map(|(i, x)| filling.value_at(i, x).unwrap())
            .collect();
        assert_eq!(des_values, BTreeSet::from([4, 6, 7, 9]));

        assert_eq!(ribbon.a(), 3);
        assert_eq!(ribbon.maj(), 9);
        assert_eq!(filling.inv(), 4);
        assert_eq!(mac_inv(&ribbon, &filling), 1);
    }

    #[test]
    fn single_cell_statistics_vanish() {
        let tuples = tr_tuples(&straight(&[1]));
        assert_eq!(tuples.len(), 1);
        let ribbon = &tuples[0];
        assert!(ribbon.des().is_empty());
        assert_eq!(ribbon.a(), 0);
        assert_eq!(ribbon.maj(), 0);
        let f = macdonald_f_expansion(&straight(&[1])).unwrap();
        assert_eq!(f.coeff(&Signature::new(vec![]).unwrap()), QtPoly::one());
    }

    #[test]
    fn arm_rejects_cells_outside_the_tuple() {
        let tuples = tr_tuples(&straight(&[1]));
        assert!(tuples[0].arm(0, Cell::new(5, 5)).is_err());
        assert!(tuples[0].arm(3, Cell::new(0, 0)).is_err());
    }

    #[test]
    fn single_column_expansion() {
        let f = macdonald_f_expansion(&straight(&[1, 1])).unwrap();
        assert_eq!(f.coeff(&"+".parse().unwrap()), QtPoly::one());
        assert_eq!(f.coeff(&"-".parse().unwrap()), QtPoly::monomial(0, 1, 1));
    }

    #[test]
    fn single_row_expansion() {
        let f = macdonald_f_expansion(&straight(&[2])).unwrap();
        assert_eq!(f.coeff(&"+".parse().unwrap()), QtPoly::one());
        assert_eq!(f.coeff(&"-".parse().unwrap()), QtPoly::monomial(1, 0, 1));
    }

    #[test]
    fn inversions_stay_above_arm_totals_through_degree_five() {
        for n in 1..=5 {
            for mu in Partition::all_of(n) {
                for ribbon in tr_tuples(&SkewShape::straight(mu.clone())) {
                    for t in enumerate_tuple_fillings(ribbon.tuple()) {
                        // `mac_inv` panics on a violation.
                        let _ = mac_inv(&ribbon, &t);
                    }
                }
            }
        }
    }

    /// The filling of the source shape recovered from a tuple filling:
    /// value of column `i`, row `j` = the value at the content `-j` cell of
    /// component `i`.
    fn transfer(ribbon: &RibbonTuple, t: &TupleFilling) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (i, shape) in ribbon.tuple().shapes().iter().enumerate() {
            for cell in shape.cells() {
                let row = (-cell.content()) as usize;
                out.insert((i, row), t.value_at(i, cell).unwrap());
            }
        }
        out
    }

    #[test]
    fn fillings_transfer_bijectively_to_column_fillings() {
        for shape in [straight(&[2, 2]), straight(&[3, 1]), skew(&[3, 2], &[1])] {
            let n = shape.size();
            let mut seen = BTreeSet::new();
            for ribbon in tr_tuples(&shape) {
                for t in enumerate_tuple_fillings(ribbon.tuple()) {
                    let filled = transfer(&ribbon, &t);
                    // Values land exactly on the cells of the shape.
                    for (&(col, row), _) in &filled {
                        assert!(shape.contains_cell(row, col));
                    }
                    assert_eq!(filled.len(), n);
                    assert!(seen.insert(filled), "transfer must not repeat fillings");
                }
            }
            let factorial: usize = (1..=n).product();
            assert_eq!(seen.len(), factorial);
        }
    }

    #[test]
    fn running_example_transfers_to_the_displayed_filling() {
        let (_, ribbon, filling) = running_example();
        let filled = transfer(&ribbon, &filling);
        // Columns of the source shape, bottom row upward.
        let column = |i: usize| -> Vec<usize> {
            (0..5).filter_map(|j| filled.get(&(i, j)).copied()).collect()
        };
        assert_eq!(column(0), vec![2, 6, 3, 4, 1]);
        assert_eq!(column(1), vec![5, 7, 9]);
        assert_eq!(column(2), vec![10, 8]);
    }

    #[test]
    fn direct_mode_rejects_wide_and_doubly_wide_shapes() {
        match macdonald_schur_expansion(&straight(&[4]), MacMode::Direct) {
            Err(DegError::ShapeNotCovered { pattern }) => assert_eq!(pattern, "(4)"),
            other => panic!("expected a covering error, got {other:?}"),
        }
        match macdonald_schur_expansion(&straight(&[3, 3]), MacMode::Direct) {
            Err(DegError::ShapeNotCovered { pattern }) => assert_eq!(pattern, "(3,3)"),
            other => panic!("expected a covering error, got {other:?}"),
        }
        match macdonald_schur_expansion(&straight(&[1, 1, 1, 1]), MacMode::Conjugate) {
            Err(DegError::ShapeNotCovered { pattern }) => assert_eq!(pattern, "(1,1,1,1)"),
            other => panic!("expected a covering error, got {other:?}"),
        }
    }

    #[test]
    fn direct_expansion_matches_exact_extraction() {
        for shape in [
            straight(&[3, 2]),
            straight(&[2, 2]),
            straight(&[2, 2, 1]),
            straight(&[1, 1, 1, 1]),
            skew(&[3, 2], &[1]),
        ] {
            let direct = macdonald_schur_expansion(&shape, MacMode::Direct).unwrap();
            let extracted = extract_schur(&macdonald_f_expansion(&shape).unwrap()).unwrap();
            assert_eq!(direct, extracted, "{shape}");
        }
    }

    #[test]
    fn conjugate_expansion_matches_exact_extraction() {
        for shape in [straight(&[4]), straight(&[3, 3]), straight(&[2, 2])] {
            let conj = macdonald_schur_expansion(&shape, MacMode::Conjugate).unwrap();
            let extracted = extract_schur(&macdonald_f_expansion(&shape).unwrap()).unwrap();
            assert_eq!(conj, extracted, "{shape}");
        }
    }

    #[test]
    fn specialization_counts_fillings() {
        let e = macdonald_schur_expansion(&straight(&[2, 2]), MacMode::Direct).unwrap();
        let total: BigInt = e
            .terms()
            .iter()
            .map(|(lambda, poly)| {
                let syt = crate::tableaux::enumerate_standard(&SkewShape::straight(
                    lambda.clone(),
                ))
                .len();
                poly.eval_at_one() * BigInt::from(syt)
            })
            .sum();
        assert_eq!(total, BigInt::from(24));
    }

    #[test]
    fn conjugate_symmetry_through_degree_six() {
        let mut shapes: Vec<SkewShape> = Vec::new();
        for n in 1..=6 {
            shapes.extend(Partition::all_of(n).into_iter().map(SkewShape::straight));
        }
        shapes.push(skew(&[3, 2], &[1]));
        shapes.push(skew(&[2, 2, 1], &[1, 1]));
        for shape in shapes {
            let swapped = macdonald_f_expansion(&shape).unwrap().swap_qt();
            let conj = macdonald_f_expansion(&shape.conjugate()).unwrap();
            assert!(
                f_equal(&swapped, &conj).unwrap().is_none(),
                "conjugate symmetry fails for {shape}"
            );
        }
    }

    #[test]
    fn ribbon_diameters_match_the_covering_condition() {
        for n in 1..=7 {
            for shape in enumerate_skew_shapes(n) {
                let tuples = tr_tuples(&shape);
                let diams: BTreeSet<usize> = tuples
                    .iter()
                    .map(|r| r.tuple().diam().unwrap())
                    .collect();
                assert_eq!(diams.len(), 1, "diameter must not depend on the ribbons");
                let covered = !shape.contains_translate_of(&p(&[3, 3]))
                    && !shape.contains_translate_of(&p(&[4]));
                let diam = diams.into_iter().next().unwrap();
                assert_eq!(diam <= 3, covered, "{shape} has diameter {diam}");
            }
        }
    }

    #[test]
    fn sharpness_of_the_covering_condition() {
        // The exact expansion of the (4) series has q^2 on s(2,2), but no
        // Yamanouchi filling contributes that term.
        let f4 = macdonald_f_expansion(&straight(&[4])).unwrap();
        let exact = extract_schur(&f4).unwrap();
        assert_eq!(exact.coeff(&p(&[2, 2])).coeff(2, 0), BigInt::from(1));
        let yam4 = yamanouchi_schur(&straight(&[4])).unwrap();
        let q2_slice: Vec<(u32, u32)> = yam4
            .coeff(&p(&[2, 2]))
            .terms()
            .filter(|&(q, _, _)| q == 2)
            .map(|(q, t, _)| (q, t))
            .collect();
        assert!(q2_slice.is_empty(), "unexpected q^2 terms: {q2_slice:?}");

        // Same for the (3,3) series at s(4,2): the q^2 coefficient (at
        // t-degree zero) is 1 exactly, yet no Yamanouchi filling has it.
        let f33 = macdonald_f_expansion(&straight(&[3, 3])).unwrap();
        let exact = extract_schur(&f33).unwrap();
        assert_eq!(exact.coeff(&p(&[4, 2])).coeff(2, 0), BigInt::from(1));
        let yam33 = yamanouchi_schur(&straight(&[3, 3])).unwrap();
        assert_eq!(yam33.coeff(&p(&[4, 2])).coeff(2, 0), BigInt::from(0));
    }

    #[test]
    fn shapes_with_empty_columns_are_handled() {
        // The bottom row holds only its last cell, leaving columns 2 and 3
        // empty while column 4 is occupied.
        let shape = skew(&[5, 2], &[4]);
        let tuples = tr_tuples(&shape);
        assert_eq!(tuples.len(), 1); // three single-cell columns
        for ribbon in &tuples {
            assert_eq!(ribbon.tuple().k(), 5);
            assert_eq!(ribbon.tuple().shapes()[2].size(), 0);
            assert_eq!(ribbon.tuple().shapes()[3].size(), 0);
        }
        let f = macdonald_f_expansion(&shape).unwrap();
        assert_eq!(f.degree(), 3);
    }
}
