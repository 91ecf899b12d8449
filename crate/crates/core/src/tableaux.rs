//! Multipartitions, column-strict tableaux, and block combinatorics.
//!
//! A charge (m_1 >= ... >= m_l) fixes a ground-state tableau whose column j
//! has entries ..., m_j - 1, m_j reading up. A column-strict tableau of that
//! charge differs from the ground state in finitely many rows, with entries
//! strictly increasing up each column. Equivalently it is an l-multipartition
//! lambda = (lambda^(1), ..., lambda^(l)): part i of lambda^(k) is the excess
//! of the entry in row m_k + 1 - i of column k over its ground value, and the
//! box in row i, column j of the k-th Young diagram carries residue
//! m_k + j - i. The residue content alpha determines the block; the tableau
//! has weight Lambda - alpha.

use crate::error::TableauError;
use crate::weights::{Charge, IndexSet, RootElement};
use serde_json::{json, Value};
use std::fmt;

/// An l-multipartition; each component is weakly decreasing with positive
/// parts (trailing zeros are never stored). The derived ordering (component
/// major, each part list lexicographic) fixes the enumeration order of
/// blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    parts: Vec<Vec<i64>>,
}

impl Multipartition {
    pub fn new(parts: Vec<Vec<i64>>) -> Result<Self, TableauError> {
        for p in &parts {
            for w in p.windows(2) {
                if w[0] < w[1] {
                    return Err(TableauError::BadPartition(p.clone()));
                }
            }
            if p.iter().any(|&x| x <= 0) {
                return Err(TableauError::BadPartition(p.clone()));
            }
        }
        Ok(Multipartition { parts })
    }

    pub fn empty(level: usize) -> Self {
        Multipartition { parts: vec![vec![]; level] }
    }

    pub fn level(&self) -> usize {
        self.parts.len()
    }

    pub fn component(&self, k: usize) -> &[i64] {
        &self.parts[k]
    }

    pub fn components(&self) -> &[Vec<i64>] {
        &self.parts
    }

    /// Part i (1-indexed) of component k (0-indexed), zero beyond the length.
    pub fn part(&self, k: usize, i: i64) -> i64 {
        if i < 1 {
            return i64::MAX; // virtual part 0 boundary: larger than everything
        }
        let p = &self.parts[k];
        if (i as usize) <= p.len() {
            p[i as usize - 1]
        } else {
            0
        }
    }

    pub fn box_count(&self) -> i64 {
        self.parts.iter().map(|p| p.iter().sum::<i64>()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    /// Conjugate (transpose) of each component, with the component order
    /// reversed: the multipartition transpose.
    pub fn transpose(&self) -> Multipartition {
        let mut parts: Vec<Vec<i64>> = self
            .parts
            .iter()
            .map(|p| conjugate_partition(p))
            .collect();
        parts.reverse();
        Multipartition { parts }
    }

    /// Replace one part value; used by box addition/removal. Row is the
    /// 1-indexed Young row; the resulting component must stay a partition.
    pub fn with_part(&self, k: usize, row: i64, value: i64) -> Result<Multipartition, TableauError> {
        let mut parts = self.parts.clone();
        let p = &mut parts[k];
        let idx = row as usize - 1;
        while p.len() <= idx {
            p.push(0);
        }
        p[idx] = value;
        while p.last() == Some(&0) {
            p.pop();
        }
        Multipartition::new(parts)
    }
}

pub fn conjugate_partition(p: &[i64]) -> Vec<i64> {
    if p.is_empty() {
        return vec![];
    }
    let cols = p[0];
    (1..=cols)
        .map(|j| p.iter().filter(|&&x| x >= j).count() as i64)
        .collect()
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", inner.join(","))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A column-strict tableau: a charge plus a multipartition, with every box
/// residue inside the index set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CSTableau {
    charge: Charge,
    index: IndexSet,
    mp: Multipartition,
}

impl CSTableau {
    pub fn new(charge: Charge, index: IndexSet, mp: Multipartition) -> Result<Self, TableauError> {
        if mp.level() != charge.level() {
            return Err(TableauError::LevelMismatch);
        }
        let t = CSTableau { charge, index, mp };
        // every box residue must lie in I
        for (k, p) in t.mp.components().iter().enumerate() {
            for (i, &len) in p.iter().enumerate() {
                let row = i as i64 + 1;
                for col in 1..=len {
                    let r = t.charge.component(k) + col - row;
                    if !t.index.contains(r) {
                        return Err(TableauError::ResidueOutsideIndexSet(r));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn ground(charge: Charge, index: IndexSet) -> Self {
        let level = charge.level();
        CSTableau { charge, index, mp: Multipartition::empty(level) }
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn index_set(&self) -> IndexSet {
        self.index
    }

    pub fn multipartition(&self) -> &Multipartition {
        &self.mp
    }

    pub fn level(&self) -> usize {
        self.charge.level()
    }

    pub fn box_count(&self) -> i64 {
        self.mp.box_count()
    }

    /// Residue content alpha, so that wt = Lambda - alpha.
    pub fn content(&self) -> RootElement {
        let mut a = RootElement::zero();
        for (k, p) in self.mp.components().iter().enumerate() {
            for (i, &len) in p.iter().enumerate() {
                let row = i as i64 + 1;
                for col in 1..=len {
                    a.add(self.charge.component(k) + col - row, 1);
                }
            }
        }
        a
    }

    /// Residue content of a single column (component) of the tableau.
    pub fn column_content(&self, k: usize) -> RootElement {
        let mut a = RootElement::zero();
        for (i, &len) in self.mp.component(k).iter().enumerate() {
            let row = i as i64 + 1;
            for col in 1..=len {
                a.add(self.charge.component(k) + col - row, 1);
            }
        }
        a
    }

    /// Lowest tableau row whose entry differs from the ground state, if any.
    pub fn min_modified_row(&self) -> Option<i64> {
        let mut min: Option<i64> = None;
        for (k, p) in self.mp.components().iter().enumerate() {
            if let Some(len) = p.len().checked_sub(1) {
                // deepest modified Young row is p.len(), at tableau row
                // m_k + 1 - p.len()
                let r = self.charge.component(k) + 1 - (len as i64 + 1);
                min = Some(min.map_or(r, |m: i64| m.min(r)));
            }
        }
        min
    }

    /// Entry in tableau row `row` of column `col` (1-indexed column): ground
    /// value plus the corresponding part.
    pub fn entry(&self, col: usize, row: i64) -> i64 {
        let m = self.charge.component(col - 1);
        debug_assert!(row <= m);
        let young_row = m + 1 - row;
        row + self.mp.part(col - 1, young_row)
    }

    /// The truncated columns at level k: for each column j the entries of
    /// rows k, k+1, ..., m_j reading bottom to top.
    pub fn columns_at_level(&self, k: i64) -> Vec<Vec<i64>> {
        (1..=self.level())
            .map(|j| {
                let m = self.charge.component(j - 1);
                (k..=m).map(|r| self.entry(j, r)).collect()
            })
            .collect()
    }

    /// Reading of the truncated tableau: down each column (top to bottom),
    /// columns left to right, or right to left when `reversed`.
    pub fn reading_at_level(&self, k: i64, reversed: bool) -> Vec<i64> {
        debug_assert!(k <= self.charge.last(), "truncation must keep every column nonempty");
        debug_assert!(
            self.min_modified_row().map_or(true, |r| k <= r),
            "truncation must not cut modified rows"
        );
        let cols = self.columns_at_level(k);
        let order: Vec<usize> = if reversed {
            (0..cols.len()).rev().collect()
        } else {
            (0..cols.len()).collect()
        };
        let mut out = Vec::new();
        for j in order {
            out.extend(cols[j].iter().rev());
        }
        out
    }

    /// Column reading of the full finite diagram; only defined when the index
    /// set is bounded below.
    pub fn column_reading(&self, reversed: bool) -> Result<Vec<i64>, TableauError> {
        match self.index.min() {
            Some(min) => Ok(self.reading_at_level(min, reversed)),
            None => Err(TableauError::UnboundedWithoutTruncation),
        }
    }

    /// Standard means the associated highest-weight vector survives in the
    /// column-reading structure: lambda^(i)_{j + m_i - m_{i+1}} <=
    /// lambda^(i+1)_j for all i, j.
    pub fn is_standard(&self) -> bool {
        for i in 0..self.level().saturating_sub(1) {
            let delta = self.charge.component(i) - self.charge.component(i + 1);
            let len = self
                .mp
                .component(i)
                .len()
                .max(self.mp.component(i + 1).len()) as i64;
            for j in 1..=len {
                if self.mp.part(i, j + delta) > self.mp.part(i + 1, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Reverse-standard: lambda^(i)_j + m_i - m_{i+1} >= lambda^(i+1)_j.
    pub fn is_reverse(&self) -> bool {
        for i in 0..self.level().saturating_sub(1) {
            let delta = self.charge.component(i) - self.charge.component(i + 1);
            let len = self.mp.component(i + 1).len() as i64;
            for j in 1..=len {
                if self.mp.part(i, j) + delta < self.mp.part(i + 1, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Transpose over Z: negated, reversed charge; transposed, reversed
    /// multipartition.
    pub fn transpose(&self) -> Result<CSTableau, TableauError> {
        if self.index != IndexSet::AllIntegers {
            return Err(TableauError::BoundedIndexSet);
        }
        let charge = Charge::new(self.charge.transpose().entries().to_vec(), self.index)?;
        CSTableau::new(charge, self.index, self.mp.transpose())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "charge": self.charge.entries(),
            "index_set": self.index.to_json(),
            "parts": self.mp.components(),
        })
    }

    pub fn from_json(v: &Value) -> Result<CSTableau, TableauError> {
        let obj = v
            .as_object()
            .ok_or_else(|| TableauError::BadInput(format!("tableau: {}", v)))?;
        let index = match obj.get("index_set") {
            Some(is) => IndexSet::from_json(is)?,
            None => IndexSet::AllIntegers,
        };
        let charge_v = obj
            .get("charge")
            .and_then(Value::as_array)
            .ok_or_else(|| TableauError::BadInput("charge".into()))?;
        let entries: Result<Vec<i64>, _> = charge_v
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| TableauError::BadInput("charge entry".into())))
            .collect();
        let charge = Charge::new(entries?, index)?;
        let parts_v = obj
            .get("parts")
            .and_then(Value::as_array)
            .ok_or_else(|| TableauError::BadInput("parts".into()))?;
        let mut parts = Vec::new();
        for p in parts_v {
            let arr = p
                .as_array()
                .ok_or_else(|| TableauError::BadInput("parts component".into()))?;
            let comp: Result<Vec<i64>, _> = arr
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| TableauError::BadInput("part".into())))
                .collect();
            parts.push(comp?);
        }
        CSTableau::new(charge, index, Multipartition::new(parts)?)
    }

    pub fn label(&self) -> String {
        self.mp.to_string()
    }
}

impl fmt::Display for CSTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.mp, self.charge)
    }
}

impl fmt::Debug for CSTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Rebuild a tableau from truncated columns (entries bottom to top starting
/// at row k). Validates strict increase and nonnegative parts.
pub fn tableau_from_columns(
    charge: &Charge,
    index: IndexSet,
    k: i64,
    cols: &[Vec<i64>],
) -> Result<CSTableau, TableauError> {
    if cols.len() != charge.level() {
        return Err(TableauError::LevelMismatch);
    }
    let mut parts = Vec::with_capacity(cols.len());
    for (j, col) in cols.iter().enumerate() {
        let m = charge.component(j);
        if col.len() as i64 != m - k + 1 {
            return Err(TableauError::BadInput(format!(
                "column {} has {} entries, expected {}",
                j + 1,
                col.len(),
                m - k + 1
            )));
        }
        for w in col.windows(2) {
            if w[0] >= w[1] {
                return Err(TableauError::BadInput(format!(
                    "column {} is not strictly increasing",
                    j + 1
                )));
            }
        }
        // part for Young row m+1-r is entry(r) - r
        let mut p = Vec::new();
        for (off, &e) in col.iter().enumerate() {
            let r = k + off as i64;
            let part = e - r;
            if part < 0 {
                return Err(TableauError::BadInput(format!(
                    "entry {} below its row {}",
                    e, r
                )));
            }
            p.push(part);
        }
        // p is indexed by rows bottom..top = Young rows high..low; reverse
        p.reverse();
        while p.last() == Some(&0) {
            p.pop();
        }
        parts.push(p);
    }
    CSTableau::new(charge.clone(), index, Multipartition::new(parts)?)
}

/// The truncation level for a block over Z: every tableau with content alpha
/// agrees with the ground state strictly below min(min support alpha, m_l).
/// Over a half line the diagram is already finite and the level is min(I).
pub fn truncation_level(charge: &Charge, index: IndexSet, alpha: &RootElement) -> i64 {
    match index.min() {
        Some(min) => min,
        None => match alpha.min_support() {
            Some(s) => s.min(charge.last()),
            None => charge.last(),
        },
    }
}

/// Which tensor-order structure readings and orders refer to: Standard reads
/// columns left to right, Reverse right to left (with triangularity flipped
/// accordingly downstream).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    Standard,
    Reverse,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Standard => write!(f, "standard"),
            Structure::Reverse => write!(f, "reverse"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockFilter {
    All,
    Standard,
    Reverse,
}

/// All column-strict tableaux of the given charge with residue content
/// alpha, in the deterministic multipartition order, optionally filtered to
/// the standard or reverse-standard ones.
pub fn enumerate_block(
    charge: &Charge,
    index: IndexSet,
    alpha: &RootElement,
    filter: BlockFilter,
) -> Result<Vec<CSTableau>, TableauError> {
    if !alpha.is_nonnegative() {
        return Ok(vec![]);
    }
    let d = alpha.height();
    if !alpha.supported_in(index) {
        return Ok(vec![]);
    }
    let level = charge.level();
    let mut out: Vec<CSTableau> = Vec::new();
    let mut partitions_by_size: Vec<Vec<Vec<i64>>> = Vec::new();
    for n in 0..=d {
        partitions_by_size.push(partitions_of(n));
    }
    // distribute d boxes over the components
    let mut stack: Vec<(usize, i64, Vec<Vec<i64>>)> = vec![(0, d, Vec::new())];
    while let Some((k, rem, acc)) = stack.pop() {
        if k == level {
            if rem == 0 {
                let mp = Multipartition::new(acc).expect("generator yields partitions");
                if let Ok(t) = CSTableau::new(charge.clone(), index, mp) {
                    if &t.content() == alpha {
                        out.push(t);
                    }
                }
            }
            continue;
        }
        for size in 0..=rem {
            for p in &partitions_by_size[size as usize] {
                let mut acc2 = acc.clone();
                acc2.push(p.clone());
                stack.push((k + 1, rem - size, acc2));
            }
        }
    }
    out.sort_by(|a, b| a.multipartition().cmp(b.multipartition()));
    out.retain(|t| match filter {
        BlockFilter::All => true,
        BlockFilter::Standard => t.is_standard(),
        BlockFilter::Reverse => t.is_reverse(),
    });
    Ok(out)
}

/// All partitions of n (weakly decreasing positive parts).
pub fn partitions_of(n: i64) -> Vec<Vec<i64>> {
    fn rec(n: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        let top = max.min(n);
        for first in (1..=top).rev() {
            cur.push(first);
            rec(n - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Bruhat order on tableaux of one block: a <= b iff they have the same
/// weight and, for every proper prefix of columns, the prefix content of b
/// dominates that of a in Q_+.
pub fn bruhat_leq(a: &CSTableau, b: &CSTableau) -> Result<bool, TableauError> {
    if a.charge() != b.charge() || a.index_set() != b.index_set() {
        return Err(TableauError::ChargeMismatch);
    }
    if a.content() != b.content() {
        return Ok(false);
    }
    let l = a.level();
    let mut acc_a = RootElement::zero();
    let mut acc_b = RootElement::zero();
    for j in 0..l.saturating_sub(1) {
        acc_a = acc_a.plus(&a.column_content(j));
        acc_b = acc_b.plus(&b.column_content(j));
        if !acc_b.minus(&acc_a).is_nonnegative() {
            return Ok(false);
        }
    }
    Ok(true)
}
