//! Index sets, charges, and root-lattice bookkeeping.
//!
//! Residues of boxes live in a set I of consecutive integers (all of Z or a
//! half line bounded below). Fundamental weights are indexed by I_+ = I u
//! (I+1) and pair with simple roots by (Lambda_i, alpha_j) = delta_ij; simple
//! roots pair by (alpha_i, alpha_j) = 2 delta_ij - [|i-j| = 1].

use crate::error::TableauError;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexSet {
    AllIntegers,
    /// {min, min+1, min+2, ...}
    HalfLine { min: i64 },
}

impl IndexSet {
    pub fn contains(&self, i: i64) -> bool {
        match self {
            IndexSet::AllIntegers => true,
            IndexSet::HalfLine { min } => i >= *min,
        }
    }

    /// Membership in I_+ = I u (I+1). For a half line bounded below this
    /// equals I; for Z it is Z.
    pub fn contains_plus(&self, i: i64) -> bool {
        self.contains(i)
    }

    pub fn min(&self) -> Option<i64> {
        match self {
            IndexSet::AllIntegers => None,
            IndexSet::HalfLine { min } => Some(*min),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            IndexSet::AllIntegers => Value::String("Z".to_string()),
            IndexSet::HalfLine { min } => json!({ "min": min }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, TableauError> {
        match v {
            Value::String(s) if s == "Z" => Ok(IndexSet::AllIntegers),
            Value::Object(m) => {
                let min = m
                    .get("min")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| TableauError::BadInput("index_set.min".into()))?;
                Ok(IndexSet::HalfLine { min })
            }
            _ => Err(TableauError::BadInput(format!("index_set: {}", v))),
        }
    }
}

/// A charge (m_1 >= m_2 >= ... >= m_l) of fundamental-weight indices; the
/// associated dominant weight is Lambda = Lambda_{m_1} + ... + Lambda_{m_l}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Charge {
    entries: Vec<i64>,
}

impl Charge {
    pub fn new(entries: Vec<i64>, index: IndexSet) -> Result<Self, TableauError> {
        if entries.is_empty() {
            return Err(TableauError::BadCharge);
        }
        for w in entries.windows(2) {
            if w[0] < w[1] {
                return Err(TableauError::BadCharge);
            }
        }
        for &m in &entries {
            if !index.contains_plus(m) {
                return Err(TableauError::BadCharge);
            }
        }
        Ok(Charge { entries })
    }

    pub fn level(&self) -> usize {
        self.entries.len()
    }

    pub fn component(&self, k: usize) -> i64 {
        self.entries[k]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().unwrap()
    }

    /// Multiplicity of Lambda_i in Lambda.
    pub fn weight_multiplicity(&self, i: i64) -> i64 {
        self.entries.iter().filter(|&&m| m == i).count() as i64
    }

    /// The transposed charge (-m_l, ..., -m_1); only meaningful over Z.
    pub fn transpose(&self) -> Charge {
        let mut e: Vec<i64> = self.entries.iter().map(|m| -m).collect();
        e.reverse();
        Charge { entries: e }
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// An element of the root lattice written over the simple roots: residue ->
/// integer multiplicity. Elements of Q_+ have all multiplicities >= 0, but
/// signed differences are allowed so the type also serves for comparisons.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct RootElement {
    mults: BTreeMap<i64, i64>,
}

impl RootElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(i: i64) -> Self {
        let mut r = Self::zero();
        r.add(i, 1);
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut r = Self::zero();
        for (i, m) in it {
            r.add(i, m);
        }
        r
    }

    pub fn add(&mut self, i: i64, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.mults.entry(i).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mults.remove(&i);
        }
    }

    pub fn mult(&self, i: i64) -> i64 {
        self.mults.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &i64)> {
        self.mults.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.mults.values().all(|&m| m >= 0)
    }

    /// Sum of multiplicities (number of boxes when this is a content).
    pub fn height(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn min_support(&self) -> Option<i64> {
        self.mults.keys().next().copied()
    }

    pub fn max_support(&self) -> Option<i64> {
        self.mults.keys().next_back().copied()
    }

    pub fn plus(&self, other: &RootElement) -> RootElement {
        let mut out = self.clone();
        for (&i, &m) in other.iter() {
            out.add(i, m);
        }
        out
    }

    pub fn minus(&self, other: &RootElement) -> RootElement {
        let mut out = self.clone();
        for (&i, &m) in other.iter() {
            out.add(i, -m);
        }
        out
    }

    /// Negate every residue: alpha^t_i = alpha_{-i}.
    pub fn transpose(&self) -> RootElement {
        let mut out = Self::zero();
        for (&i, &m) in self.iter() {
            out.add(-i, m);
        }
        out
    }

    pub fn supported_in(&self, index: IndexSet) -> bool {
        self.mults.keys().all(|&i| index.contains(i))
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (i, mult) in &self.mults {
            m.insert(i.to_string(), json!(mult));
        }
        Value::Object(m)
    }

    pub fn from_json(v: &Value) -> Result<Self, TableauError> {
        let obj = v
            .as_object()
            .ok_or_else(|| TableauError::BadInput(format!("alpha: {}", v)))?;
        let mut r = Self::zero();
        for (k, val) in obj {
            let i: i64 = k
                .parse()
                .map_err(|_| TableauError::BadInput(format!("alpha key: {}", k)))?;
            let m = val
                .as_i64()
                .ok_or_else(|| TableauError::BadInput(format!("alpha value: {}", val)))?;
            r.add(i, m);
        }
        Ok(r)
    }

    /// Parse the command-line syntax "res:mult,res:mult", e.g. "0:1,1:2".
    /// The empty string denotes zero.
    pub fn parse_cli(s: &str) -> Result<Self, TableauError> {
        let mut r = Self::zero();
        let t = s.trim();
        if t.is_empty() {
            return Ok(r);
        }
        for chunk in t.split(',') {
            let (res, mult) = chunk
                .split_once(':')
                .ok_or_else(|| TableauError::BadInput(format!("alpha chunk: {}", chunk)))?;
            let i: i64 = res
                .trim()
                .parse()
                .map_err(|_| TableauError::BadInput(format!("alpha residue: {}", res)))?;
            let m: i64 = mult
                .trim()
                .parse()
                .map_err(|_| TableauError::BadInput(format!("alpha mult: {}", mult)))?;
            r.add(i, m);
        }
        Ok(r)
    }
}

impl fmt::Display for RootElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .mults
            .iter()
            .map(|(i, m)| format!("{}:{}", i, m))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for RootElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// (alpha_i, alpha_j) in the standard symmetric bilinear form.
pub fn cartan_pairing(i: i64, j: i64) -> i64 {
    if i == j {
        2
    } else if (i - j).abs() == 1 {
        -1
    } else {
        0
    }
}

/// (alpha, beta) extended bilinearly.
pub fn pairing_alpha_alpha(a: &RootElement, b: &RootElement) -> i64 {
    let mut s = 0;
    for (&i, &m) in a.iter() {
        s += m * (2 * b.mult(i) - b.mult(i - 1) - b.mult(i + 1));
    }
    s
}

/// (Lambda, alpha) where Lambda is the dominant weight of the charge.
pub fn pairing_lambda_alpha(charge: &Charge, a: &RootElement) -> i64 {
    charge.entries().iter().map(|&m| a.mult(m)).sum()
}

/// The exponent a = (Lambda, alpha) - (alpha, alpha)/2 = (2 Lambda - alpha,
/// alpha)/2 controlling the leading term of quasi-canonical elements.
pub fn pairing_a(charge: &Charge, a: &RootElement) -> i64 {
    let aa = pairing_alpha_alpha(a, a);
    debug_assert!(aa % 2 == 0);
    pairing_lambda_alpha(charge, a) - aa / 2
}

/// (wt, alpha_i) where wt = Lambda - alpha.
pub fn pairing_weight_simple(charge: &Charge, a: &RootElement, i: i64) -> i64 {
    charge.weight_multiplicity(i) - (2 * a.mult(i) - a.mult(i - 1) - a.mult(i + 1))
}

/// Residue of the box in row i, column j of the k-th component (all
/// 1-indexed) for the given charge: m_k + j - i.
pub fn residue(charge: &Charge, component: usize, row: i64, col: i64) -> i64 {
    charge.component(component - 1) + col - row
}

/// Parse the command-line charge syntax "m1,m2,...".
pub fn parse_charge_cli(s: &str, index: IndexSet) -> Result<Charge, TableauError> {
    let entries: Result<Vec<i64>, _> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| TableauError::BadCharge))
        .collect();
    Charge::new(entries?, index)
}
