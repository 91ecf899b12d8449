//! Crystal operators on column-strict tableaux in both reading structures,
//! crystal graph construction, and the rectification bijections between
//! reverse-standard and standard tableaux.
//!
//! The primary implementation of signatures works on multipartition nodes:
//! enumerate the addable and removable nodes of residue i from top to
//! bottom (components in reverse order for the reverse structure), mark
//! addable +, removable -, cancel (-,+) pairs, then act at the leftmost
//! surviving - or the rightmost surviving +. A second path reads tableau
//! entries i and i+1 in (reverse-)column-reading order; the two must agree
//! and tests enforce that.

use crate::error::TableauError;
use crate::tableaux::{tableau_from_columns, truncation_level, CSTableau, Structure};
use serde_json::{json, Value};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// An addable or removable node of the multipartition diagram: 1-based
/// component, Young row and column of the box to add or remove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub component: usize,
    pub row: i64,
    pub col: i64,
    pub addable: bool,
    pub residue: i64,
}

/// Every addable and removable node, ordered top to bottom in the diagram:
/// by component, then Young row, then column. The reverse structure reverses
/// the component order only.
pub fn all_nodes(t: &CSTableau, structure: Structure) -> Vec<Node> {
    let mut nodes = Vec::new();
    let comps: Vec<usize> = match structure {
        Structure::Standard => (0..t.level()).collect(),
        Structure::Reverse => (0..t.level()).rev().collect(),
    };
    for &k in &comps {
        let p = t.multipartition().component(k);
        let m = t.charge().component(k);
        for row in 1..=(p.len() as i64 + 1) {
            let part = if row as usize <= p.len() {
                p[row as usize - 1]
            } else {
                0
            };
            let above = if row == 1 {
                i64::MAX
            } else {
                p[row as usize - 2]
            };
            let below = if (row as usize) < p.len() {
                p[row as usize]
            } else {
                0
            };
            if part > below && part > 0 {
                nodes.push(Node {
                    component: k + 1,
                    row,
                    col: part,
                    addable: false,
                    residue: m + part - row,
                });
            }
            if part < above {
                nodes.push(Node {
                    component: k + 1,
                    row,
                    col: part + 1,
                    addable: true,
                    residue: m + part + 1 - row,
                });
            }
        }
        // keep (row, col) ascending within the component
        let start = nodes
            .iter()
            .rposition(|n| n.component != k + 1)
            .map_or(0, |p| p + 1);
        nodes[start..].sort_by_key(|n| (n.row, n.col));
    }
    nodes
}

/// The i-signature of a tableau: signed nodes in order, the reduced sign
/// word, and the counts eps (surviving -) and phi (surviving +).
#[derive(Clone, Debug)]
pub struct SignatureReport {
    pub boxes: Vec<(Node, Sign)>,
    pub reduced: Vec<Sign>,
    /// indices into `boxes` of the signs surviving cancellation
    pub surviving: Vec<usize>,
    pub eps: usize,
    pub phi: usize,
}

fn reduce_signs(signs: &[Sign]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::new();
    let mut kept_plus: Vec<usize> = Vec::new();
    for (r, s) in signs.iter().enumerate() {
        match s {
            Sign::Minus => stack.push(r),
            Sign::Plus => {
                if stack.pop().is_none() {
                    kept_plus.push(r);
                }
            }
        }
    }
    let mut surviving = kept_plus;
    surviving.extend(stack);
    surviving.sort();
    surviving
}

pub fn signature(t: &CSTableau, i: i64, structure: Structure) -> SignatureReport {
    let boxes: Vec<(Node, Sign)> = all_nodes(t, structure)
        .into_iter()
        .filter(|n| n.residue == i)
        .map(|n| {
            let s = if n.addable { Sign::Plus } else { Sign::Minus };
            (n, s)
        })
        .collect();
    let signs: Vec<Sign> = boxes.iter().map(|(_, s)| *s).collect();
    let surviving = reduce_signs(&signs);
    let reduced: Vec<Sign> = surviving.iter().map(|&r| signs[r]).collect();
    let eps = reduced.iter().filter(|s| **s == Sign::Minus).count();
    let phi = reduced.len() - eps;
    SignatureReport { boxes, reduced, surviving, eps, phi }
}

pub fn eps(t: &CSTableau, i: i64, structure: Structure) -> usize {
    signature(t, i, structure).eps
}

pub fn phi(t: &CSTableau, i: i64, structure: Structure) -> usize {
    signature(t, i, structure).phi
}

/// Remove the box at the leftmost surviving -, or None when eps = 0.
pub fn e_tilde(t: &CSTableau, i: i64, structure: Structure) -> Option<CSTableau> {
    let sig = signature(t, i, structure);
    let idx = sig
        .surviving
        .iter()
        .copied()
        .find(|&r| sig.boxes[r].1 == Sign::Minus)?;
    let node = &sig.boxes[idx].0;
    let mp = t
        .multipartition()
        .with_part(node.component - 1, node.row, node.col - 1)
        .expect("removing a removable node keeps a partition");
    Some(
        CSTableau::new(t.charge().clone(), t.index_set(), mp)
            .expect("removing a box keeps residues inside the index set"),
    )
}

/// Add a box at the rightmost surviving +, or None when phi = 0.
pub fn f_tilde(t: &CSTableau, i: i64, structure: Structure) -> Option<CSTableau> {
    let sig = signature(t, i, structure);
    let idx = sig
        .surviving
        .iter()
        .copied()
        .rev()
        .find(|&r| sig.boxes[r].1 == Sign::Plus)?;
    let node = &sig.boxes[idx].0;
    let mp = t
        .multipartition()
        .with_part(node.component - 1, node.row, node.col)
        .expect("adding an addable node keeps a partition");
    Some(
        CSTableau::new(t.charge().clone(), t.index_set(), mp)
            .expect("the added box has residue i, which lies in the index set"),
    )
}

/// Independent implementation reading tableau entries: boxes containing i or
/// i+1 in (reverse-)column-reading order, + for i and - for i+1. Returns the
/// box coordinates (column, tableau row) of the signs surviving reduction.
pub fn entries_signature(
    t: &CSTableau,
    i: i64,
    structure: Structure,
) -> (Vec<Sign>, Vec<(usize, i64)>) {
    let k0 = truncation_level(t.charge(), t.index_set(), &t.content()).min(i);
    let cols = t.columns_at_level(k0);
    let order: Vec<usize> = match structure {
        Structure::Standard => (0..cols.len()).collect(),
        Structure::Reverse => (0..cols.len()).rev().collect(),
    };
    let mut signs = Vec::new();
    let mut locs = Vec::new();
    for j in order {
        let m = t.charge().component(j);
        // top to bottom: rows m down to k0
        for (off, &e) in cols[j].iter().enumerate().rev() {
            if e == i || e == i + 1 {
                signs.push(if e == i { Sign::Plus } else { Sign::Minus });
                locs.push((j + 1, k0 + off as i64));
            }
        }
        debug_assert_eq!(cols[j].len() as i64, m - k0 + 1);
    }
    let surviving = reduce_signs(&signs);
    (
        surviving.iter().map(|&r| signs[r]).collect(),
        surviving.iter().map(|&r| locs[r]).collect(),
    )
}

/// e_tilde recomputed on tableau entries, for cross-validation.
pub fn e_tilde_via_entries(t: &CSTableau, i: i64, structure: Structure) -> Option<CSTableau> {
    let (signs, locs) = entries_signature(t, i, structure);
    let pos = signs.iter().position(|s| *s == Sign::Minus)?;
    replace_entry(t, locs[pos], i + 1, i)
}

/// f_tilde recomputed on tableau entries, for cross-validation.
pub fn f_tilde_via_entries(t: &CSTableau, i: i64, structure: Structure) -> Option<CSTableau> {
    let (signs, locs) = entries_signature(t, i, structure);
    let pos = signs.iter().rposition(|s| *s == Sign::Plus)?;
    replace_entry(t, locs[pos], i, i + 1)
}

fn replace_entry(
    t: &CSTableau,
    loc: (usize, i64),
    from: i64,
    to: i64,
) -> Option<CSTableau> {
    let k0 = truncation_level(t.charge(), t.index_set(), &t.content()).min(from.min(to));
    let mut cols = t.columns_at_level(k0);
    let (j, row) = loc;
    let off = (row - k0) as usize;
    debug_assert_eq!(cols[j - 1][off], from);
    cols[j - 1][off] = to;
    Some(tableau_from_columns(t.charge(), t.index_set(), k0, &cols).expect("crystal move"))
}

/// Colored directed graph on tableaux: an edge (s, t, i) means
/// vertices[t] = f_tilde_i(vertices[s]). Vertex order is BFS discovery
/// order from the ground state.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub vertices: Vec<CSTableau>,
    pub edges: Vec<(usize, usize, i64)>,
}

/// Breadth-first closure of the ground state under all f_tilde_i, keeping
/// tableaux with at most `max_boxes` boxes.
pub fn crystal_component(
    charge: &crate::weights::Charge,
    index: crate::weights::IndexSet,
    structure: Structure,
    max_boxes: i64,
) -> CrystalGraph {
    let ground = CSTableau::ground(charge.clone(), index);
    let mut vertices = vec![ground.clone()];
    let mut seen: HashMap<crate::tableaux::Multipartition, usize> = HashMap::new();
    seen.insert(ground.multipartition().clone(), 0);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < vertices.len() {
        let src = vertices[head].clone();
        if src.box_count() < max_boxes {
            let mut colors: Vec<i64> = all_nodes(&src, structure)
                .iter()
                .filter(|n| n.addable && index.contains(n.residue))
                .map(|n| n.residue)
                .collect();
            colors.sort();
            colors.dedup();
            for i in colors {
                if let Some(next) = f_tilde(&src, i, structure) {
                    let idx = match seen.get(next.multipartition()) {
                        Some(&idx) => idx,
                        None => {
                            vertices.push(next.clone());
                            seen.insert(next.multipartition().clone(), vertices.len() - 1);
                            vertices.len() - 1
                        }
                    };
                    edges.push((head, idx, i));
                }
            }
        }
        head += 1;
    }
    CrystalGraph { vertices, edges }
}

impl CrystalGraph {
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(s, t, i)| json!([s, t, i])).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (idx, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", idx, v.label()));
        }
        for (s, t, i) in &self.edges {
            out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", s, t, i));
        }
        out.push_str("}\n");
        out
    }
}

fn row_capacities_down(charge: &crate::weights::Charge, k: i64) -> Vec<usize> {
    let m1 = charge.component(0);
    (k..=m1)
        .map(|r| (0..charge.level()).filter(|&j| charge.component(j) >= r).count())
        .collect()
}

fn insert_bump_up(rows: &mut [Vec<i64>], caps: &[usize], r: usize, val: i64) -> Result<(), TableauError> {
    if r >= rows.len() {
        return Err(TableauError::BadInput("row insertion overflow".into()));
    }
    match rows[r].iter().position(|&b| b > val) {
        Some(pos) => {
            let bumped = rows[r][pos];
            rows[r][pos] = val;
            insert_bump_up(rows, caps, r + 1, bumped)
        }
        None => {
            if rows[r].len() < caps[r] {
                rows[r].push(val);
                Ok(())
            } else {
                Err(TableauError::BadInput("row insertion overflow".into()))
            }
        }
    }
}

/// The rectification A -> A-down: read A in reverse-column-reading order and
/// row insert into the board of the charge, bumping larger entries up.
/// Defined on reverse-standard tableaux; lands in standard tableaux.
pub fn rectify_down(t: &CSTableau) -> Result<CSTableau, TableauError> {
    if !t.is_reverse() {
        return Err(TableauError::NotReverseStandard);
    }
    let k = truncation_level(t.charge(), t.index_set(), &t.content());
    let seq = t.reading_at_level(k, true);
    let caps = row_capacities_down(t.charge(), k);
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); caps.len()];
    for val in seq {
        insert_bump_up(&mut rows, &caps, 0, val)?;
    }
    let cols: Vec<Vec<i64>> = (0..t.level())
        .map(|j| {
            let m = t.charge().component(j);
            (k..=m).map(|r| rows[(r - k) as usize][j]).collect()
        })
        .collect();
    let out = tableau_from_columns(t.charge(), t.index_set(), k, &cols)?;
    debug_assert!(out.is_standard());
    Ok(out)
}

fn insert_bump_down(rows: &mut [Vec<i64>], caps: &[usize], r: usize, val: i64) -> Result<(), TableauError> {
    if r >= rows.len() {
        return Err(TableauError::BadInput("row insertion overflow".into()));
    }
    match rows[r].iter().position(|&b| b < val) {
        Some(pos) => {
            let bumped = rows[r][pos];
            rows[r][pos] = val;
            insert_bump_down(rows, caps, r + 1, bumped)
        }
        None => {
            if rows[r].len() < caps[r] {
                rows[r].push(val);
                Ok(())
            } else {
                Err(TableauError::BadInput("row insertion overflow".into()))
            }
        }
    }
}

/// The inverse rectification A -> A-up: read A in column order, insert the
/// sequence from the right into the board with every column slid up flush
/// with the tallest one, bumping smaller entries down, then slide back.
/// Defined on standard tableaux; lands in reverse-standard tableaux.
pub fn rectify_up(t: &CSTableau) -> Result<CSTableau, TableauError> {
    if !t.is_standard() {
        return Err(TableauError::NotStandard);
    }
    let k = truncation_level(t.charge(), t.index_set(), &t.content());
    let seq = t.reading_at_level(k, false);
    let m1 = t.charge().component(0);
    // slid board: column j occupies rows k + m1 - m_j ..= m1; row index r
    // stored top-down as offset m1 - r
    let caps: Vec<usize> = (k..=m1)
        .rev()
        .map(|r| {
            (0..t.level())
                .filter(|&j| t.charge().component(j) >= k + m1 - r)
                .count()
        })
        .collect();
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); caps.len()];
    for &val in seq.iter().rev() {
        insert_bump_down(&mut rows, &caps, 0, val)?;
    }
    let cols: Vec<Vec<i64>> = (0..t.level())
        .map(|j| {
            let mj = t.charge().component(j);
            // slid rows k + m1 - mj ..= m1, read bottom to top, then slide
            // back down: entries keep their order
            (k + m1 - mj..=m1)
                .map(|r| rows[(m1 - r) as usize][j])
                .collect()
        })
        .collect();
    let out = tableau_from_columns(t.charge(), t.index_set(), k, &cols)?;
    debug_assert!(out.is_reverse());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{BlockFilter, Multipartition};
    use crate::weights::{pairing_weight_simple, Charge, IndexSet};

    fn z() -> IndexSet {
        IndexSet::AllIntegers
    }

    fn t10(parts: Vec<Vec<i64>>) -> CSTableau {
        let c = Charge::new(vec![1, 0], z()).unwrap();
        CSTableau::new(c, z(), Multipartition::new(parts).unwrap()).unwrap()
    }

    /// every multipartition of at most `max` boxes at charge (1,0)
    fn small_tableaux(max: i64) -> Vec<CSTableau> {
        let mut out = Vec::new();
        for d in 0..=max {
            for a in 0..=d {
                for p in crate::tableaux::partitions_of(a) {
                    for q in crate::tableaux::partitions_of(d - a) {
                        out.push(t10(vec![p.clone(), q]));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn ground_state_operators() {
        let c = Charge::new(vec![1, 0], z()).unwrap();
        let g = CSTableau::ground(c, z());
        for i in -3..4 {
            assert_eq!(eps(&g, i, Structure::Standard), 0);
            assert!(e_tilde(&g, i, Structure::Standard).is_none());
            assert!(e_tilde(&g, i, Structure::Reverse).is_none());
        }
        let f0 = f_tilde(&g, 0, Structure::Standard).unwrap();
        assert_eq!(f0.label(), "((),(1))");
        let f1 = f_tilde(&g, 1, Structure::Standard).unwrap();
        assert_eq!(f1.label(), "((1),())");
        let f1f0 = f_tilde(&f0, 1, Structure::Standard).unwrap();
        assert_eq!(f1f0.label(), "((),(2))");
    }

    #[test]
    fn node_ordering_matches_diagram() {
        // ((3,2,1),(3,1)): the removable node ending row 1 of component 1
        // sits above the removable node ending row 2 of component 2
        let t = t10(vec![vec![3, 2, 1], vec![3, 1]]);
        let nodes = all_nodes(&t, Structure::Standard);
        let first = nodes
            .iter()
            .position(|n| n.component == 1 && n.row == 1 && !n.addable)
            .unwrap();
        let second = nodes
            .iter()
            .position(|n| n.component == 2 && n.row == 2 && !n.addable)
            .unwrap();
        assert!(first < second);
        assert_eq!(nodes[first].col, 3);
        assert_eq!(nodes[first].residue, 1 + 3 - 1);
        assert_eq!(nodes[second].col, 1);
        assert_eq!(nodes[second].residue, 0 + 1 - 2);
        // reverse structure flips the component order
        let rnodes = all_nodes(&t, Structure::Reverse);
        let rfirst = rnodes
            .iter()
            .position(|n| n.component == 1 && n.row == 1 && !n.addable)
            .unwrap();
        let rsecond = rnodes
            .iter()
            .position(|n| n.component == 2 && n.row == 2 && !n.addable)
            .unwrap();
        assert!(rsecond < rfirst);
    }

    #[test]
    fn phi_minus_eps_is_weight_pairing() {
        let c = Charge::new(vec![1, 0], z()).unwrap();
        for t in small_tableaux(4) {
            let alpha = t.content();
            for i in -6..7 {
                for st in [Structure::Standard, Structure::Reverse] {
                    let s = signature(&t, i, st);
                    assert_eq!(
                        s.phi as i64 - s.eps as i64,
                        pairing_weight_simple(&c, &alpha, i),
                        "t={} i={} {:?}",
                        t,
                        i,
                        st
                    );
                }
            }
        }
    }

    #[test]
    fn reduced_has_no_minus_before_plus() {
        for t in small_tableaux(4) {
            for i in -4..5 {
                for st in [Structure::Standard, Structure::Reverse] {
                    let s = signature(&t, i, st);
                    let mut seen_minus = false;
                    for x in &s.reduced {
                        match x {
                            Sign::Minus => seen_minus = true,
                            Sign::Plus => assert!(!seen_minus),
                        }
                    }
                    assert_eq!(s.eps + s.phi, s.reduced.len());
                }
            }
        }
    }

    #[test]
    fn operators_are_mutually_inverse() {
        for t in small_tableaux(3) {
            for i in -4..5 {
                for st in [Structure::Standard, Structure::Reverse] {
                    if let Some(ft) = f_tilde(&t, i, st) {
                        assert_eq!(e_tilde(&ft, i, st).as_ref(), Some(&t));
                        assert_eq!(ft.box_count(), t.box_count() + 1);
                    }
                    if let Some(et) = e_tilde(&t, i, st) {
                        assert_eq!(f_tilde(&et, i, st).as_ref(), Some(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn entry_path_agrees_with_node_path() {
        for t in small_tableaux(4) {
            for i in -4..5 {
                for st in [Structure::Standard, Structure::Reverse] {
                    let node_sig = signature(&t, i, st);
                    let (entry_signs, _) = entries_signature(&t, i, st);
                    assert_eq!(node_sig.reduced, entry_signs, "t={} i={}", t, i);
                    assert_eq!(e_tilde(&t, i, st), e_tilde_via_entries(&t, i, st));
                    assert_eq!(f_tilde(&t, i, st), f_tilde_via_entries(&t, i, st));
                }
            }
        }
    }

    #[test]
    fn crystal_component_depths() {
        let c = Charge::new(vec![1, 0], z()).unwrap();
        let g0 = crystal_component(&c, z(), Structure::Standard, 0);
        assert_eq!(g0.vertices.len(), 1);
        assert!(g0.edges.is_empty());
        let g1 = crystal_component(&c, z(), Structure::Standard, 1);
        let labels: Vec<String> = g1.vertices.iter().map(|v| v.label()).collect();
        assert_eq!(labels, vec!["((),())", "((),(1))", "((1),())"]);
        assert_eq!(g1.edges, vec![(0, 1, 0), (0, 2, 1)]);
    }

    #[test]
    fn crystal_vertices_are_the_standard_tableaux() {
        let c = Charge::new(vec![1, 0], z()).unwrap();
        let depth = 3;
        for (st, filter) in [
            (Structure::Standard, BlockFilter::Standard),
            (Structure::Reverse, BlockFilter::Reverse),
        ] {
            let g = crystal_component(&c, z(), st, depth);
            let mut got: Vec<Multipartition> = g
                .vertices
                .iter()
                .map(|v| v.multipartition().clone())
                .collect();
            got.sort();
            let mut expected = Vec::new();
            for t in small_tableaux(depth) {
                let in_filter = match filter {
                    BlockFilter::Standard => t.is_standard(),
                    BlockFilter::Reverse => t.is_reverse(),
                    BlockFilter::All => true,
                };
                if in_filter {
                    expected.push(t.multipartition().clone());
                }
            }
            expected.sort();
            expected.dedup();
            assert_eq!(got, expected, "{:?}", st);
        }
    }

    fn charge32() -> Charge {
        Charge::new(vec![3, 2], IndexSet::HalfLine { min: 1 }).unwrap()
    }

    fn from_cols(cols: &[Vec<i64>]) -> CSTableau {
        tableau_from_columns(&charge32(), IndexSet::HalfLine { min: 1 }, 1, cols).unwrap()
    }

    #[test]
    fn rectification_golden_pairs() {
        let pairs = [
            (vec![vec![3, 4, 5], vec![1, 2]], vec![vec![1, 2, 5], vec![3, 4]]),
            (vec![vec![2, 4, 5], vec![1, 3]], vec![vec![1, 3, 5], vec![2, 4]]),
            (vec![vec![1, 3, 5], vec![2, 4]], vec![vec![1, 2, 4], vec![3, 5]]),
            (vec![vec![1, 4, 5], vec![2, 3]], vec![vec![1, 2, 3], vec![4, 5]]),
            (vec![vec![2, 3, 5], vec![1, 4]], vec![vec![1, 3, 4], vec![2, 5]]),
        ];
        for (src, dst) in &pairs {
            let a = from_cols(src);
            let b = from_cols(dst);
            assert!(a.is_reverse());
            assert!(b.is_standard());
            assert_eq!(rectify_down(&a).unwrap(), b, "down {:?}", src);
            assert_eq!(rectify_up(&b).unwrap(), a, "up {:?}", dst);
            // A-down <= A and B <= B-up in the Bruhat order
            assert!(crate::tableaux::bruhat_leq(&b, &a).unwrap());
        }
    }

    #[test]
    fn rectification_preconditions() {
        // col1=(1,2,5), col2=(3,4) is standard but not reverse
        let std_only = from_cols(&[vec![1, 2, 5], vec![3, 4]]);
        assert!(!std_only.is_reverse());
        assert_eq!(
            rectify_down(&std_only).unwrap_err(),
            TableauError::NotReverseStandard
        );
        // col1=(3,4,5), col2=(1,2) is reverse but not standard
        let rev_only = from_cols(&[vec![3, 4, 5], vec![1, 2]]);
        assert!(!rev_only.is_standard());
        assert_eq!(rectify_up(&rev_only).unwrap_err(), TableauError::NotStandard);
    }

    #[test]
    fn rectification_round_trips_unbounded() {
        // charge (1,0) over Z: all reverse tableaux with <= 4 boxes
        for t in small_tableaux(4) {
            if t.is_reverse() {
                let down = rectify_down(&t).unwrap();
                assert!(down.is_standard());
                assert_eq!(down.content(), t.content());
                assert_eq!(rectify_up(&down).unwrap(), t);
                assert!(crate::tableaux::bruhat_leq(&down, &t).unwrap());
            }
            if t.is_standard() {
                let up = rectify_up(&t).unwrap();
                assert!(up.is_reverse());
                assert_eq!(rectify_down(&up).unwrap(), t);
                assert!(crate::tableaux::bruhat_leq(&t, &up).unwrap());
            }
        }
    }

    #[test]
    fn rectification_is_crystal_isomorphism() {
        // f-reverse then rectify = rectify then f-standard
        for t in small_tableaux(3) {
            if !t.is_reverse() {
                continue;
            }
            let down = rectify_down(&t).unwrap();
            for i in -4..5 {
                let a = f_tilde(&t, i, Structure::Reverse);
                let b = f_tilde(&down, i, Structure::Standard);
                match (a, b) {
                    (None, None) => {}
                    (Some(fa), Some(fb)) => {
                        assert_eq!(rectify_down(&fa).unwrap(), fb, "t={} i={}", t, i)
                    }
                    (a, b) => panic!("defined-ness mismatch t={} i={} {:?} {:?}", t, i, a, b),
                }
                let ea = e_tilde(&t, i, Structure::Reverse);
                let eb = e_tilde(&down, i, Structure::Standard);
                match (ea, eb) {
                    (None, None) => {}
                    (Some(fa), Some(fb)) => {
                        assert_eq!(rectify_down(&fa).unwrap(), fb)
                    }
                    (a, b) => panic!("defined-ness mismatch t={} i={} {:?} {:?}", t, i, a, b),
                }
            }
        }
    }

    #[test]
    fn graph_exports() {
        let c = Charge::new(vec![1, 0], z()).unwrap();
        let g = crystal_component(&c, z(), Structure::Standard, 1);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("v0 -> v1 [label=\"0\"];"));
        assert!(dot.contains("v0 -> v2 [label=\"1\"];"));
        let j = g.to_json();
        assert_eq!(j["edges"][0], serde_json::json!([0, 1, 0]));
        assert_eq!(j["vertices"][0]["parts"], serde_json::json!([[], []]));
    }
}
