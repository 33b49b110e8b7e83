//! Integer partitions and multipartitions.
//!
//! A partition is stored as its list of rows (parts), longest first. A cell is
//! addressed by its column `col` and row `row`, both starting at 1, so the
//! unshifted content of a cell is `col - row`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(col: usize, row: usize) -> Self {
        Cell { col, row }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A cell of one component of a multipartition. `comp` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxRef {
    pub comp: usize,
    pub col: usize,
    pub row: usize,
}

impl BoxRef {
    pub fn new(comp: usize, col: usize, row: usize) -> Self {
        BoxRef { comp, col, row }
    }

    pub fn cell(&self) -> Cell {
        Cell::new(self.col, self.row)
    }
}

impl fmt::Display for BoxRef {
    // external numbering of components is 1-based
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.col, self.row, self.comp + 1)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(k) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "part {} is zero in {parts:?}",
                k + 1
            )));
        }
        if let Some(k) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {} and {} increase in {parts:?}",
                k + 1,
                k + 2
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Drops trailing zeros and sorts; for internal constructions whose output
    /// is a partition up to reordering.
    fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The partition whose columns have the given heights (in any order).
    pub fn from_column_heights(heights: &[usize]) -> Self {
        Partition::from_unsorted(heights.to_vec()).transpose()
    }

    /// `rows` rows of length `cols`.
    pub fn rectangle(cols: usize, rows: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row `row` (1-based) length, zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col >= 1 && cell.row >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(c, r + 1)))
    }

    /// Addable corners in increasing column order.
    pub fn addable(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        for row in (1..=self.parts.len() + 1).rev() {
            let col = self.row_len(row) + 1;
            if row == 1 || col <= self.row_len(row - 1) {
                out.push(Cell::new(col, row));
            }
        }
        out
    }

    /// Removable corners in increasing column order.
    pub fn removable(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.parts.len());
        for row in (1..=self.parts.len()).rev() {
            let col = self.row_len(row);
            if col > self.row_len(row + 1) {
                out.push(Cell::new(col, row));
            }
        }
        out
    }

    /// The addable corner of the given unshifted content, if any.
    pub fn addable_with_content(&self, content: i64) -> Option<Cell> {
        self.addable().into_iter().find(|c| c.content() == content)
    }

    pub fn removable_with_content(&self, content: i64) -> Option<Cell> {
        self.removable()
            .into_iter()
            .find(|c| c.content() == content)
    }

    /// Adds an addable corner. Returns `None` when `cell` is not addable.
    pub fn with_added(&self, cell: Cell) -> Option<Partition> {
        let row = cell.row;
        if row == 0 || cell.col != self.row_len(row) + 1 {
            return None;
        }
        if row > 1 && cell.col > self.row_len(row - 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row <= parts.len() {
            parts[row - 1] += 1;
        } else if row == parts.len() + 1 {
            parts.push(1);
        } else {
            return None;
        }
        Some(Partition { parts })
    }

    /// Removes a removable corner. Returns `None` when `cell` is not removable.
    pub fn with_removed(&self, cell: Cell) -> Option<Partition> {
        let row = cell.row;
        if row == 0 || row > self.parts.len() || cell.col != self.row_len(row) {
            return None;
        }
        if cell.col <= self.row_len(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    pub fn transpose(&self) -> Partition {
        let width = self.row_len(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Height of every column, left to right.
    pub fn column_heights(&self) -> Vec<usize> {
        self.transpose().parts
    }

    /// Multiplicity of each column height.
    pub fn column_multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut mult = BTreeMap::new();
        for h in self.column_heights() {
            *mult.entry(h).or_insert(0) += 1;
        }
        mult
    }

    /// Part-wise multiplication by `e`.
    pub fn scale(&self, e: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * e).collect())
    }

    /// Part-wise sum with zero padding.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts = (1..=len)
            .map(|r| self.row_len(r) + other.row_len(r))
            .collect();
        Partition { parts }
    }

    /// Division with remainder `λ = e·quot + rem` (part-wise) with `|quot|`
    /// maximal. Row-wise sums correspond to unions of column multisets, so a
    /// height-`h` column occurring `c` times contributes `c / e` columns to
    /// the quotient and `c % e` to the remainder.
    pub fn div_rem(&self, e: usize) -> (Partition, Partition) {
        assert!(e >= 1, "division by e requires e >= 1");
        let mut quot = Vec::new();
        let mut rem = Vec::new();
        for (h, c) in self.column_multiplicities() {
            quot.extend(std::iter::repeat_n(h, c / e));
            rem.extend(std::iter::repeat_n(h, c % e));
        }
        (
            Partition::from_column_heights(&quot),
            Partition::from_column_heights(&rem),
        )
    }

    /// Every column height occurs fewer than `e` times.
    pub fn is_e_corestricted(&self, e: usize) -> bool {
        self.column_multiplicities().values().all(|&c| c < e)
    }

    /// Every part is divisible by `e`.
    pub fn is_divisible_by(&self, e: usize) -> bool {
        self.parts.iter().all(|p| p % e == 0)
    }

    /// Exact division of every part; `None` if some part is not divisible.
    pub fn divide_exact(&self, e: usize) -> Option<Partition> {
        if !self.is_divisible_by(e) {
            return None;
        }
        Some(Partition {
            parts: self.parts.iter().map(|p| p / e).collect(),
        })
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                rec(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of partitions of `n`.
    pub fn count(n: usize) -> u64 {
        // p(k) by the coin recurrence over part sizes
        let mut p = vec![0u64; n + 1];
        p[0] = 1;
        for part in 1..=n {
            for k in part..=n {
                p[k] += p[k - part];
            }
        }
        p[n]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

fn parse_partition_at(text: &str, base: usize) -> Result<Partition> {
    let t = text.trim();
    if t.is_empty() || t == "-" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut offset = base + (text.len() - text.trim_start().len());
    for piece in t.split(',') {
        let value: usize = piece.trim().parse().map_err(|_| {
            Error::parse(
                offset,
                format!("expected a positive integer, found {:?}", piece.trim()),
            )
        })?;
        if value == 0 {
            return Err(Error::parse(offset, "parts must be positive"));
        }
        if let Some(&last) = parts.last() {
            if value > last {
                return Err(Error::parse(
                    offset,
                    format!("parts must be weakly decreasing, {value} follows {last}"),
                ));
            }
        }
        parts.push(value);
        offset += piece.len() + 1;
    }
    Ok(Partition { parts })
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition_at(s, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    comps: Vec<Partition>,
    total: usize,
}

impl Multipartition {
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::InvalidPartition(
                "a multipartition needs at least one component".into(),
            ));
        }
        let total = comps.iter().map(Partition::size).sum();
        Ok(Multipartition { comps, total })
    }

    pub fn empty(level: usize) -> Self {
        assert!(level >= 1);
        Multipartition {
            comps: vec![Partition::empty(); level],
            total: 0,
        }
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.total
    }

    pub fn comps(&self) -> &[Partition] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Partition {
        &self.comps[i]
    }

    pub fn into_comps(self) -> Vec<Partition> {
        self.comps
    }

    pub fn with_comp(&self, i: usize, p: Partition) -> Multipartition {
        let mut comps = self.comps.clone();
        self.replace_into(&mut comps, i, p)
    }

    fn replace_into(&self, comps: &mut Vec<Partition>, i: usize, p: Partition) -> Multipartition {
        comps[i] = p;
        let total = comps.iter().map(Partition::size).sum();
        Multipartition {
            comps: std::mem::take(comps),
            total,
        }
    }

    pub fn transpose(&self) -> Multipartition {
        Multipartition {
            comps: self.comps.iter().map(Partition::transpose).collect(),
            total: self.total,
        }
    }

    pub fn addable(&self) -> Vec<BoxRef> {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.addable()
                    .into_iter()
                    .map(move |c| BoxRef::new(i, c.col, c.row))
            })
            .collect()
    }

    pub fn removable(&self) -> Vec<BoxRef> {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.removable()
                    .into_iter()
                    .map(move |c| BoxRef::new(i, c.col, c.row))
            })
            .collect()
    }

    pub fn boxes(&self) -> impl Iterator<Item = BoxRef> + '_ {
        self.comps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.cells().map(move |c| BoxRef::new(i, c.col, c.row)))
    }

    pub fn with_added(&self, b: BoxRef) -> Option<Multipartition> {
        let p = self.comps.get(b.comp)?.with_added(b.cell())?;
        Some(self.with_comp(b.comp, p))
    }

    pub fn with_removed(&self, b: BoxRef) -> Option<Multipartition> {
        let p = self.comps.get(b.comp)?.with_removed(b.cell())?;
        Some(self.with_comp(b.comp, p))
    }

    /// All ℓ-multipartitions of `n`. Deterministic order: by the size vector
    /// of the components, the last component growing first, then by the
    /// partition order of [`Partition::all`].
    pub fn all(level: usize, n: usize) -> Vec<Multipartition> {
        assert!(level >= 1);
        fn rec(level: usize, n: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
            if prefix.len() + 1 == level {
                for p in Partition::all(n) {
                    let mut comps = prefix.clone();
                    comps.push(p);
                    out.push(Multipartition::new(comps).expect("nonempty"));
                }
                return;
            }
            for k in 0..=n {
                for p in Partition::all(k) {
                    prefix.push(p);
                    rec(level, n - k, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(level, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn all_up_to(level: usize, n_max: usize) -> Vec<Multipartition> {
        (0..=n_max)
            .flat_map(|n| Multipartition::all(level, n))
            .collect()
    }

    /// Parses and checks the number of components.
    pub fn parse_with_level(text: &str, level: usize) -> Result<Self> {
        let m: Multipartition = text.parse()?;
        if m.level() != level {
            return Err(Error::LevelMismatch {
                expected: level,
                found: m.level(),
            });
        }
        Ok(m)
    }
}

impl From<Vec<Partition>> for Multipartition {
    fn from(comps: Vec<Partition>) -> Self {
        Multipartition::new(comps).expect("at least one component")
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        let mut offset = 0;
        for piece in s.split('|') {
            comps.push(parse_partition_at(piece, offset)?);
            offset += piece.len() + 1;
        }
        Multipartition::new(comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> Vec<Cell> {
        v.iter().map(|&(c, r)| Cell::new(c, r)).collect()
    }

    #[test]
    fn corners_of_small_partitions() {
        assert_eq!(Partition::empty().addable(), cells(&[(1, 1)]));
        assert!(Partition::empty().removable().is_empty());
        assert_eq!(p("3").removable(), cells(&[(3, 1)]));
        assert_eq!(p("3").addable(), cells(&[(1, 2), (4, 1)]));
        assert_eq!(p("2,1").removable(), cells(&[(1, 2), (2, 1)]));
        assert_eq!(p("2,1").addable(), cells(&[(1, 3), (2, 2), (3, 1)]));
    }

    #[test]
    fn corners_match_cell_enumeration() {
        // oracle: a cell is addable iff adding it leaves a valid partition
        for n in 0..=7 {
            for lam in Partition::all(n) {
                let mut expected = Vec::new();
                for row in 1..=n + 2 {
                    for col in 1..=n + 2 {
                        let mut rows: Vec<usize> = (1..=n + 2).map(|r| lam.row_len(r)).collect();
                        if rows[row - 1] + 1 != col {
                            continue;
                        }
                        rows[row - 1] += 1;
                        if rows.windows(2).all(|w| w[0] >= w[1]) {
                            expected.push(Cell::new(col, row));
                        }
                    }
                }
                expected.sort_by_key(|c| c.col);
                assert_eq!(lam.addable(), expected, "{lam}");
                for c in lam.removable() {
                    assert!(lam.with_removed(c).is_some());
                }
                // at most one corner of each kind per content
                let mut contents: Vec<i64> = lam.addable().iter().map(Cell::content).collect();
                contents.dedup();
                assert_eq!(contents.len(), lam.addable().len());
            }
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("3").transpose(), p("1,1,1"));
        assert_eq!(p("2,2,1").transpose(), p("3,2"));
    }

    #[test]
    fn div_rem_examples() {
        assert_eq!(p("3").div_rem(2), (p("1"), p("1")));
        assert_eq!(p("2,2").div_rem(2), (p("1,1"), Partition::empty()));
        assert_eq!(p("4,2,1").div_rem(1), (p("4,2,1"), Partition::empty()));
    }

    #[test]
    fn corestricted_examples() {
        assert!(p("2,1").is_e_corestricted(2));
        assert!(!p("1,1").transpose().is_e_corestricted(2));
        assert!(!p("2").is_e_corestricted(2));
        assert!(p("1,1").is_e_corestricted(2));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(Partition::empty().scale(3), Partition::empty());
        assert_eq!(p("2,1").scale(2), p("4,2"));
    }

    #[test]
    fn rowwise_sum_is_union_of_columns() {
        for a in Partition::all(4) {
            for b in Partition::all(3) {
                let mut cols = a.column_heights();
                cols.extend(b.column_heights());
                assert_eq!(a.add(&b), Partition::from_column_heights(&cols));
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<u64> = (0..=10).map(Partition::count).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for n in 0..=10 {
            assert_eq!(Partition::all(n).len() as u64, Partition::count(n));
        }
    }

    #[test]
    fn text_syntax() {
        let m: Multipartition = "1,1,1|-".parse().unwrap();
        assert_eq!(m.comps(), &[p("1,1,1"), Partition::empty()]);
        assert_eq!(m.to_string(), "1,1,1|-");
        let m: Multipartition = "-|3".parse().unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(m.to_string(), "-|3");
        let err = "3,4|-".parse::<Multipartition>().unwrap_err();
        assert_eq!(
            err,
            Error::parse(2, "parts must be weakly decreasing, 4 follows 3")
        );
        match "1|2,x".parse::<Multipartition>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            "|".parse::<Multipartition>().unwrap(),
            Multipartition::empty(2)
        );
    }

    #[test]
    fn multipartition_enumeration_sizes() {
        // number of bipartitions of n: sum_k p(k) p(n-k)
        for n in 0..=6 {
            let expected: u64 = (0..=n)
                .map(|k| Partition::count(k) * Partition::count(n - k))
                .sum();
            assert_eq!(Multipartition::all(2, n).len() as u64, expected);
        }
        assert_eq!(Multipartition::all(3, 0).len(), 1);
    }
}
