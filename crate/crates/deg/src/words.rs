//! Words, RSK insertion, and the elementary moves: Knuth moves on positions,
//! dual moves on values, their twisted variants, and the content-bound
//! controlled family that interpolates between the last two.
//!
//! Words are sequences of positive letters. Most moves are defined on
//! permutations of `1..=n`; constructors and move functions validate this.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::tableaux::{enumerate_standard, superstandard, Partition, Signature, SkewShape, Tableau};
use crate::{DegError, Result};

/// A word: a sequence of positive letters.
///
/// Displayed as a digit string when every letter is at most 9, and as a
/// comma-separated list otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(DegError::InvalidWord(
                "letters must be positive".to_string(),
            ));
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether the word is a permutation of `1..=n` for `n = len()`.
    pub fn is_permutation(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        for &v in &self.letters {
            if v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn require_permutation(&self) -> Result<()> {
        if self.is_permutation() {
            Ok(())
        } else {
            Err(DegError::InvalidWord(format!(
                "{self} is not a permutation of 1..={}",
                self.len()
            )))
        }
    }

    /// Letter counts: entry `v - 1` is the number of occurrences of `v`.
    pub fn letter_counts(&self) -> Vec<usize> {
        let max = self.letters.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for &v in &self.letters {
            counts[v - 1] += 1;
        }
        counts
    }

    /// 0-based position of the first occurrence of `v`.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.letters.iter().position(|&x| x == v)
    }

    /// The signature: entry `i` (1-based) is `+1` exactly when `i` occurs
    /// before `i + 1`.
    ///
    /// # Panics
    ///
    /// Panics when the word is not a permutation.
    pub fn signature(&self) -> Signature {
        assert!(
            self.is_permutation(),
            "signature requires a permutation, got {self}"
        );
        let n = self.len();
        let mut pos = vec![0usize; n + 1];
        for (p, &v) in self.letters.iter().enumerate() {
            pos[v] = p;
        }
        let signs = (1..n)
            .map(|i| if pos[i] < pos[i + 1] { 1 } else { -1 })
            .collect();
        Signature::new(signs).expect("entries are +1/-1")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&v| v <= 9) {
            for &v in &self.letters {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.letters.iter().join(","))
        }
    }
}

impl FromStr for Word {
    type Err = DegError;

    /// Parses either a digit string (`"15342"`) or a comma-separated list
    /// (`"10,2,3"`).
    fn from_str(s: &str) -> Result<Self> {
        let letters = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|e| DegError::InvalidWord(format!("bad letter {part:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| DegError::InvalidWord(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let letters = Vec::<usize>::deserialize(d)?;
        Word::new(letters).map_err(D::Error::custom)
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Vec<Word> {
    (1..=n)
        .permutations(n)
        .map(|p| Word::new(p).expect("permutation letters are positive"))
        .collect()
}

/// The inverse permutation word: letter `v` of the result is the 1-based
/// position of `v` in `w`.
pub fn inverse(w: &Word) -> Result<Word> {
    w.require_permutation()?;
    let n = w.len();
    let mut inv = vec![0usize; n];
    for (p, &v) in w.letters().iter().enumerate() {
        inv[v - 1] = p + 1;
    }
    Word::new(inv)
}

/// RSK row insertion: returns the insertion tableau `P` and the recording
/// tableau `Q`, both standard of the same straight shape.
pub fn rsk(w: &Word) -> Result<(Tableau, Tableau)> {
    w.require_permutation()?;
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in w.letters().iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p_rows.len() {
                p_rows.push(vec![x]);
                q_rows.push(vec![step + 1]);
                break;
            }
            match p_rows[r].iter().position(|&y| y > x) {
                None => {
                    p_rows[r].push(x);
                    q_rows[r].push(step + 1);
                    break;
                }
                Some(idx) => {
                    std::mem::swap(&mut p_rows[r][idx], &mut x);
                    r += 1;
                }
            }
        }
    }
    let shape = Partition::new(p_rows.iter().map(Vec::len).collect())?;
    let p = Tableau::new(SkewShape::straight(shape.clone()), p_rows)?;
    let q = Tableau::new(SkewShape::straight(shape), q_rows)?;
    Ok((p, q))
}

/// Inverse RSK: recovers the unique permutation word with insertion tableau
/// `p` and recording tableau `q`.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Word> {
    if p.shape() != q.shape() || !p.shape().is_straight() {
        return Err(DegError::InvalidTableau(format!(
            "tableaux of shapes {} and {} do not form an RSK pair",
            p.shape(),
            q.shape()
        )));
    }
    let n = p.size();
    let mut rows: Vec<Vec<usize>> = p.row_values().to_vec();
    let mut letters = vec![0usize; n];
    for v in (1..=n).rev() {
        let cell = q
            .cell_of_value(v)
            .ok_or_else(|| DegError::InvalidTableau(format!("value {v} missing from Q")))?;
        let mut x = rows[cell.row].pop().ok_or_else(|| {
            DegError::InvalidTableau(format!("Q value {v} is not at the end of a row of P"))
        })?;
        if cell.col != rows[cell.row].len() {
            return Err(DegError::InvalidTableau(format!(
                "Q value {v} is not at a removable corner"
            )));
        }
        for r in (0..cell.row).rev() {
            // Reverse bump: the largest entry smaller than x.
            let idx = rows[r]
                .iter()
                .rposition(|&y| y < x)
                .ok_or_else(|| DegError::InvalidTableau("reverse bump failed".to_string()))?;
            std::mem::swap(&mut rows[r][idx], &mut x);
        }
        letters[v - 1] = x;
    }
    Word::new(letters)
}

fn check_move_index(w: &Word, i: usize) -> Result<()> {
    w.require_permutation()?;
    if i < 2 || i + 1 > w.len() {
        return Err(DegError::MoveOutOfRange {
            index: i,
            len: w.len(),
        });
    }
    Ok(())
}

/// The Knuth move centred on position `j` (1-based, `2 <= j <= n-1`).
///
/// It permutes the three consecutive letters at positions `j-1, j, j+1`:
/// monotone windows are fixed; otherwise the two letters other than the
/// median are the outer pair, and the move swaps the two positions not
/// holding the median.
pub fn knuth_move(w: &Word, j: usize) -> Result<Word> {
    check_move_index(w, j)?;
    let mut letters = w.letters().to_vec();
    let (a, b, c) = (letters[j - 2], letters[j - 1], letters[j]);
    let median = {
        let mut t = [a, b, c];
        t.sort();
        t[1]
    };
    if a == median {
        letters.swap(j - 1, j);
    } else if c == median {
        letters.swap(j - 2, j - 1);
    }
    Word::new(letters)
}

/// The dual move for `i` (1-based, `2 <= i <= n-1`), acting on the values
/// `i-1, i, i+1`.
///
/// When `i` sits positionally between the other two the word is fixed.
/// Otherwise the move swaps `i` with whichever of `i-1`, `i+1` is *not*
/// positionally between the other two.
pub fn dual_move(w: &Word, i: usize) -> Result<Word> {
    check_move_index(w, i)?;
    let mut letters = w.letters().to_vec();
    let p = |v: usize| w.position_of(v).expect("permutation contains 1..=n");
    let (lo, mid, hi) = (p(i - 1), p(i), p(i + 1));
    if (lo < mid && mid < hi) || (hi < mid && mid < lo) {
        return Word::new(letters);
    }
    if (mid < lo && lo < hi) || (hi < lo && lo < mid) {
        // i-1 is positionally between: swap the values i and i+1.
        letters.swap(mid, hi);
    } else {
        // i+1 is positionally between: swap the values i-1 and i.
        letters.swap(lo, mid);
    }
    Word::new(letters)
}

/// The twisted dual move for `i` (1-based, `2 <= i <= n-1`).
///
/// When `i` sits positionally between `i-1` and `i+1` the word is fixed.
/// When `i` occurs first among the three values, the three occupied
/// positions rotate their letters one step left; when `i` occurs last, one
/// step right. Like the dual move, it is an involution that fixes exactly
/// the same words.
pub fn twisted_move(w: &Word, i: usize) -> Result<Word> {
    check_move_index(w, i)?;
    let mut letters = w.letters().to_vec();
    let p = |v: usize| w.position_of(v).expect("permutation contains 1..=n");
    let (lo, mid, hi) = (p(i - 1), p(i), p(i + 1));
    if (lo < mid && mid < hi) || (hi < mid && mid < lo) {
        return Word::new(letters);
    }
    let mut q = [lo, mid, hi];
    q.sort();
    if mid == q[0] {
        // Rotate left: q0 <- q1 <- q2 <- q0.
        let first = letters[q[0]];
        letters[q[0]] = letters[q[1]];
        letters[q[1]] = letters[q[2]];
        letters[q[2]] = first;
    } else {
        // Rotate right.
        let last = letters[q[2]];
        letters[q[2]] = letters[q[1]];
        letters[q[1]] = letters[q[0]];
        letters[q[0]] = last;
    }
    Word::new(letters)
}

/// A content bound: a weakly increasing word `tau` with `i <= tau_i` and
/// `tau_n = n`, which controls whether a move acts plainly or twisted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TauWord {
    bounds: Vec<usize>,
}

impl TauWord {
    pub fn new(bounds: Vec<usize>) -> Result<Self> {
        let n = bounds.len();
        if n == 0 {
            return Err(DegError::InvalidTau("content bound is empty".to_string()));
        }
        if bounds[n - 1] != n {
            return Err(DegError::InvalidTau(format!(
                "last entry must equal the length {n}, got {}",
                bounds[n - 1]
            )));
        }
        for (idx, &b) in bounds.iter().enumerate() {
            if b < idx + 1 {
                return Err(DegError::InvalidTau(format!(
                    "entry {} at position {} is below its index",
                    b,
                    idx + 1
                )));
            }
        }
        if bounds.windows(2).any(|w| w[0] > w[1]) {
            return Err(DegError::InvalidTau(format!(
                "{bounds:?} is not weakly increasing"
            )));
        }
        Ok(TauWord { bounds })
    }

    /// The identity bound `(1, 2, ..., n)`: every controlled move takes the
    /// plain dual branch.
    pub fn identity(n: usize) -> Self {
        TauWord {
            bounds: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn bound(&self, i: usize) -> Option<usize> {
        if i == 0 {
            return None;
        }
        self.bounds.get(i - 1).copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.bounds
    }

    /// All valid content bounds of length `n`, in lexicographic order.
    pub fn all_of_len(n: usize) -> Vec<TauWord> {
        fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<TauWord>) {
            let idx = prefix.len();
            if idx == n {
                out.push(TauWord {
                    bounds: prefix.clone(),
                });
                return;
            }
            let lo = (idx + 1).max(prefix.last().copied().unwrap_or(1));
            let hi = if idx + 1 == n { idx + 1 } else { n };
            for b in lo..=hi {
                if idx + 1 == n && b != n {
                    continue;
                }
                prefix.push(b);
                go(n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for TauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bounds.iter().all(|&v| v <= 9) {
            for &v in &self.bounds {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.bounds.iter().join(","))
        }
    }
}

impl Serialize for TauWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.bounds.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TauWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let bounds = Vec::<usize>::deserialize(d)?;
        TauWord::new(bounds).map_err(D::Error::custom)
    }
}

/// The controlled move for `i` under the content bound `tau`.
///
/// Let `m` and `M` be the first and last 1-based positions in `w` holding a
/// value among `i-1, i, i+1`. The move applies [`dual_move`] when
/// `tau_m < M` and [`twisted_move`] otherwise. Both branches permute values
/// within the same three positions, so the branch choice is stable and the
/// controlled move is again an involution.
pub fn controlled_move(w: &Word, tau: &TauWord, i: usize) -> Result<Word> {
    if tau.len() != w.len() {
        return Err(DegError::InvalidTau(format!(
            "content bound length {} does not match word length {}",
            tau.len(),
            w.len()
        )));
    }
    check_move_index(w, i)?;
    let p = |v: usize| w.position_of(v).expect("permutation contains 1..=n");
    let positions = [p(i - 1), p(i), p(i + 1)];
    let m = positions.iter().min().unwrap() + 1;
    let big_m = positions.iter().max().unwrap() + 1;
    if tau.bound(m).unwrap() < big_m {
        dual_move(w, i)
    } else {
        twisted_move(w, i)
    }
}

/// Whether `w` is a (lattice) Yamanouchi word: in every suffix, each value
/// `v >= 2` occurs at most as often as `v - 1`.
pub fn is_yamanouchi(w: &Word) -> bool {
    let max = w.letters().iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; max + 1];
    for &v in w.letters().iter().rev() {
        counts[v] += 1;
        if v >= 2 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// The standardization of `w`: occurrences of the smallest letter become
/// `1, 2, ...` from left to right, then the next letter continues the
/// numbering, and so on. The result is a permutation of the same length.
pub fn standardize(w: &Word) -> Word {
    let max = w.letters().iter().copied().max().unwrap_or(0);
    let mut letters = vec![0usize; w.len()];
    let mut next = 1usize;
    for v in 1..=max {
        for (pos, &x) in w.letters().iter().enumerate() {
            if x == v {
                letters[pos] = next;
                next += 1;
            }
        }
    }
    Word::new(letters).expect("standardization letters are positive")
}

/// If the insertion tableau of `w` is superstandard, returns its shape.
///
/// These are exactly the standardized Yamanouchi words: `w` lies in the
/// image of [`standardize`] on Yamanouchi words of content `lambda` if and
/// only if this returns `Some(lambda)`.
pub fn syam_shape(w: &Word) -> Result<Option<Partition>> {
    let (p, _) = rsk(w)?;
    let lambda = p.shape().outer().clone();
    if p == superstandard(&lambda) {
        Ok(Some(lambda))
    } else {
        Ok(None)
    }
}

/// All standardized Yamanouchi words of content `lambda`, sorted
/// lexicographically. There are as many as standard tableaux of shape
/// `lambda`.
pub fn enumerate_syam(lambda: &Partition) -> Vec<Word> {
    let u = superstandard(lambda);
    let mut words: Vec<Word> = enumerate_standard(&SkewShape::straight(lambda.clone()))
        .iter()
        .map(|q| rsk_inverse(&u, q).expect("P and Q share a shape"))
        .collect();
    words.sort();
    words
}
