//! Matrices of the Chevalley generators E_i, F_i, D_i and their divided
//! powers on weight spaces of the twisted and untwisted monomial bases.
//!
//! The closed-form rule acts column by column: F_i sends a monomial to the
//! sum over columns containing entry i but not i+1 of the monomial with that
//! i replaced by i+1, weighted by q to the power sum of n_{i+1}(c) - n_i(c)
//! over the columns c tensored before it (before = to the left in the
//! standard structure, to the right in the reverse structure). E_i is the
//! mirror rule over the columns tensored after, with the opposite sign, and
//! D_i scales by q^(number of entries equal to i).
//!
//! The closed form is validated against a brute-force evaluator that expands
//! every column into its alternating tensor sum, acts on pure tensors by the
//! iterated comultiplication, and re-collects the result in wedge
//! coordinates. The evaluator lives here, not in the test tree, so the
//! verification suite can rerun it on demand.

use crate::error::AlgebraError;
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::perm::symmetric_group;
use crate::tableaux::{
    enumerate_block, tableau_from_columns, truncation_level, BlockFilter, CSTableau, Multipartition,
    Structure,
};
use crate::weights::{Charge, IndexSet, RootElement};
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E(i64),
    F(i64),
    D(i64),
}

impl Generator {
    pub fn residue(&self) -> i64 {
        match *self {
            Generator::E(i) | Generator::F(i) | Generator::D(i) => i,
        }
    }

    /// Residue content of the image block.
    pub fn target_content(&self, alpha: &RootElement) -> RootElement {
        match *self {
            Generator::E(i) => alpha.minus(&RootElement::simple(i)),
            Generator::F(i) => alpha.plus(&RootElement::simple(i)),
            Generator::D(_) => alpha.clone(),
        }
    }
}

/// Number of entries equal to x in the tableau (exact even over Z, where
/// every column contains each entry below the truncation level once).
pub fn entry_count(t: &CSTableau, x: i64) -> i64 {
    let k = truncation_level(t.charge(), t.index_set(), &t.content());
    if t.index_set().min().is_none() && x < k {
        return t.level() as i64;
    }
    t.columns_at_level(k)
        .iter()
        .flatten()
        .filter(|&&e| e == x)
        .count() as i64
}

fn count_in(col: &[i64], x: i64) -> i64 {
    col.iter().filter(|&&e| e == x).count() as i64
}

/// The matrix of a generator from the weight space of content `alpha` to its
/// image weight space, with rows and columns indexed by enumerate_block
/// order. An invalid image content yields a matrix with zero rows.
pub fn chevalley_matrix(
    gen: Generator,
    charge: &Charge,
    index: IndexSet,
    alpha: &RootElement,
    structure: Structure,
) -> PolyMatrix {
    let src = enumerate_block(charge, index, alpha, BlockFilter::All)
        .expect("block enumeration is total");
    let beta = gen.target_content(alpha);
    let tgt = enumerate_block(charge, index, &beta, BlockFilter::All)
        .expect("block enumeration is total");
    if let Generator::D(i) = gen {
        let mut m = PolyMatrix::zero(src.len(), src.len());
        for (a, t) in src.iter().enumerate() {
            m.set(a, a, LaurentPoly::monomial(entry_count(t, i), 1));
        }
        return m;
    }
    let mut m = PolyMatrix::zero(tgt.len(), src.len());
    if tgt.is_empty() || src.is_empty() {
        return m;
    }
    let tgt_index: HashMap<&Multipartition, usize> = tgt
        .iter()
        .enumerate()
        .map(|(r, t)| (t.multipartition(), r))
        .collect();
    let k = truncation_level(charge, index, alpha)
        .min(truncation_level(charge, index, &beta));
    let i = gen.residue();
    for (c, t) in src.iter().enumerate() {
        let cols = t.columns_at_level(k);
        for j in 0..cols.len() {
            let (from, to) = match gen {
                Generator::F(_) => (i, i + 1),
                Generator::E(_) => (i + 1, i),
                Generator::D(_) => unreachable!(),
            };
            if count_in(&cols[j], from) == 0 || count_in(&cols[j], to) > 0 {
                continue;
            }
            // exponent accumulates over the columns tensored before j:
            // F over earlier factors with n_{i+1} - n_i, E over later ones
            // with n_i - n_{i+1}; the reverse structure flips which columns
            // come earlier
            let before_j: Box<dyn Fn(usize) -> bool> = match (gen, structure) {
                (Generator::F(_), Structure::Standard) => Box::new(move |c2| c2 < j),
                (Generator::F(_), Structure::Reverse) => Box::new(move |c2| c2 > j),
                (Generator::E(_), Structure::Standard) => Box::new(move |c2| c2 > j),
                (Generator::E(_), Structure::Reverse) => Box::new(move |c2| c2 < j),
                (Generator::D(_), _) => unreachable!(),
            };
            let mut exp = 0;
            for (c2, col) in cols.iter().enumerate() {
                if before_j(c2) {
                    match gen {
                        Generator::F(_) => exp += count_in(col, i + 1) - count_in(col, i),
                        Generator::E(_) => exp += count_in(col, i) - count_in(col, i + 1),
                        Generator::D(_) => unreachable!(),
                    }
                }
            }
            let mut new_cols = cols.clone();
            let pos = new_cols[j].iter().position(|&e| e == from).unwrap();
            new_cols[j][pos] = to;
            let image = tableau_from_columns(charge, index, k, &new_cols)
                .expect("single-entry replacement keeps columns strict");
            let r = tgt_index[image.multipartition()];
            m.add_to(r, c, &LaurentPoly::monomial(exp, 1));
        }
    }
    m
}

/// r-fold product of chevalley matrices divided exactly by the quantum
/// factorial [r]!.
pub fn divided_power_matrix(
    gen: Generator,
    r: usize,
    charge: &Charge,
    index: IndexSet,
    alpha: &RootElement,
    structure: Structure,
) -> Result<PolyMatrix, AlgebraError> {
    let src = enumerate_block(charge, index, alpha, BlockFilter::All)
        .expect("block enumeration is total");
    if r == 0 {
        return Ok(PolyMatrix::identity(src.len()));
    }
    let mut cur = alpha.clone();
    let mut product: Option<PolyMatrix> = None;
    for _ in 0..r {
        let step = chevalley_matrix(gen, charge, index, &cur, structure);
        product = Some(match product {
            None => step,
            Some(p) => step.mul(&p)?,
        });
        cur = gen.target_content(&cur);
    }
    let product = product.unwrap();
    let fact = LaurentPoly::quantum_factorial(r as i64);
    let mut out = PolyMatrix::zero(product.rows, product.cols);
    for rr in 0..product.rows {
        for cc in 0..product.cols {
            out.set(rr, cc, product.get(rr, cc).div_exact(&fact)?);
        }
    }
    Ok(out)
}

type Tensor = Vec<i64>;
type TensorSum = HashMap<Tensor, LaurentPoly>;

fn add_tensor(sum: &mut TensorSum, t: Tensor, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match sum.get_mut(&t) {
        Some(e) => {
            *e += &c;
            if e.is_zero() {
                sum.remove(&t);
            }
        }
        None => {
            sum.insert(t, c);
        }
    }
}

fn neg_q_power(l: usize) -> LaurentPoly {
    let sign = if l % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial(l as i64, sign)
}

/// Full alternating tensor expansion of the monomial of a tableau, with
/// columns tensored in structure order and each column read top to bottom.
pub fn expand_monomial(t: &CSTableau, k: i64, structure: Structure) -> TensorSum {
    let cols = t.columns_at_level(k);
    let order: Vec<usize> = match structure {
        Structure::Standard => (0..cols.len()).collect(),
        Structure::Reverse => (0..cols.len()).rev().collect(),
    };
    let mut acc: Vec<(Tensor, LaurentPoly)> = vec![(Vec::new(), LaurentPoly::one())];
    for j in order {
        let col: Vec<i64> = cols[j].iter().rev().copied().collect();
        let mut next = Vec::with_capacity(acc.len());
        for w in symmetric_group(col.len()) {
            let coeff = neg_q_power(w.length());
            for (seq, c) in &acc {
                let mut seq2 = seq.clone();
                seq2.extend((0..col.len()).map(|s| col[w.apply(s)]));
                next.push((seq2, c * &coeff));
            }
        }
        acc = next;
    }
    let mut out = TensorSum::new();
    for (seq, c) in acc {
        add_tensor(&mut out, seq, c);
    }
    out
}

/// Action of a generator on a sum of pure tensors via the iterated
/// comultiplication: F_i acts in each slot with D_i^{-1} D_{i+1} on the
/// slots before it, E_i with D_i D_{i+1}^{-1} on the slots after it, D_i
/// diagonally.
pub fn act_on_tensors(gen: Generator, sum: &TensorSum) -> TensorSum {
    let mut out = TensorSum::new();
    for (seq, c) in sum {
        match gen {
            Generator::D(i) => {
                let n = seq.iter().filter(|&&e| e == i).count();
                add_tensor(&mut out, seq.clone(), c.clone().shift(n as i64));
            }
            Generator::F(i) => {
                for t in 0..seq.len() {
                    if seq[t] != i {
                        continue;
                    }
                    let exp: i64 = seq[..t]
                        .iter()
                        .map(|&e| (e == i + 1) as i64 - (e == i) as i64)
                        .sum();
                    let mut seq2 = seq.clone();
                    seq2[t] = i + 1;
                    add_tensor(&mut out, seq2, c.clone().shift(exp));
                }
            }
            Generator::E(i) => {
                for t in 0..seq.len() {
                    if seq[t] != i + 1 {
                        continue;
                    }
                    let exp: i64 = seq[t + 1..]
                        .iter()
                        .map(|&e| (e == i) as i64 - (e == i + 1) as i64)
                        .sum();
                    let mut seq2 = seq.clone();
                    seq2[t] = i;
                    add_tensor(&mut out, seq2, c.clone().shift(exp));
                }
            }
        }
    }
    out
}

/// Brute-force generator matrix: expand, act, re-collect. Fails if the image
/// does not lie in the span of the target monomials, which would disprove
/// the closed form.
pub fn chevalley_matrix_by_tensor_expansion(
    gen: Generator,
    charge: &Charge,
    index: IndexSet,
    alpha: &RootElement,
    structure: Structure,
) -> Result<PolyMatrix, AlgebraError> {
    let src = enumerate_block(charge, index, alpha, BlockFilter::All)
        .expect("block enumeration is total");
    let beta = gen.target_content(alpha);
    let tgt = enumerate_block(charge, index, &beta, BlockFilter::All)
        .expect("block enumeration is total");
    let k = truncation_level(charge, index, alpha)
        .min(truncation_level(charge, index, &beta));
    let reversed = structure == Structure::Reverse;
    let mut m = PolyMatrix::zero(tgt.len(), src.len());
    let straights: Vec<Tensor> = tgt
        .iter()
        .map(|b| b.reading_at_level(k, reversed))
        .collect();
    for (c, t) in src.iter().enumerate() {
        let image = act_on_tensors(gen, &expand_monomial(t, k, structure));
        let mut residual = image;
        for (r, b) in tgt.iter().enumerate() {
            let coeff = match residual.get(&straights[r]) {
                Some(p) => p.clone(),
                None => continue,
            };
            for (seq, p) in expand_monomial(b, k, structure) {
                add_tensor(&mut residual, seq, -&(&p * &coeff));
            }
            m.set(r, c, coeff);
        }
        if !residual.is_empty() {
            return Err(AlgebraError::NoSolution);
        }
    }
    // Over Z the rows below the truncation are unmodified, so each column
    // contains every residue i < k exactly once there. E and F never touch
    // them (a column holding an invisible i also holds i+1, except when the
    // image content would pull the truncation down to i, and k already ranges
    // over both blocks), but the diagonal count of D_i does pick up one
    // invisible entry per column.
    if let Generator::D(i) = gen {
        if index.min().is_none() && i < k {
            m = m.scale(&LaurentPoly::monomial(charge.level() as i64, 1));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> IndexSet {
        IndexSet::AllIntegers
    }

    fn charge(v: Vec<i64>, i: IndexSet) -> Charge {
        Charge::new(v, i).unwrap()
    }

    /// all contents with support inside the window and height 1..=max_ht
    fn alphas(window: std::ops::RangeInclusive<i64>, max_ht: i64) -> Vec<RootElement> {
        let residues: Vec<i64> = window.collect();
        let mut out = Vec::new();
        let mut stack: Vec<(usize, i64, Vec<(i64, i64)>)> = vec![(0, 0, vec![])];
        while let Some((idx, ht, acc)) = stack.pop() {
            if idx == residues.len() {
                if ht > 0 {
                    out.push(RootElement::from_pairs(acc));
                }
                continue;
            }
            for mult in 0..=(max_ht - ht) {
                let mut acc2 = acc.clone();
                if mult > 0 {
                    acc2.push((residues[idx], mult));
                }
                stack.push((idx + 1, ht + mult, acc2));
            }
        }
        out
    }

    #[test]
    fn closed_form_matches_tensor_expansion() {
        let configs: Vec<(Charge, IndexSet, Vec<RootElement>, Vec<i64>)> = vec![
            (
                charge(vec![1, 0], z()),
                z(),
                alphas(-1..=2, 3),
                (-2..=3).collect(),
            ),
            (
                charge(vec![3, 2], IndexSet::HalfLine { min: 1 }),
                IndexSet::HalfLine { min: 1 },
                alphas(1..=3, 3),
                (1..=3).collect(),
            ),
        ];
        for (ch, idx, contents, gens) in &configs {
            for alpha in contents {
                for &i in gens {
                    for gen in [Generator::E(i), Generator::F(i), Generator::D(i)] {
                        for st in [Structure::Standard, Structure::Reverse] {
                            let closed = chevalley_matrix(gen, ch, *idx, alpha, st);
                            let oracle =
                                chevalley_matrix_by_tensor_expansion(gen, ch, *idx, alpha, st)
                                    .unwrap();
                            assert_eq!(
                                closed, oracle,
                                "charge={} alpha={} gen={:?} {:?}",
                                ch, alpha, gen, st
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn f0_on_ground_state_half_line() {
        let h = IndexSet::HalfLine { min: 0 };
        let ch = charge(vec![1, 0], h);
        let m = chevalley_matrix(
            Generator::F(0),
            &ch,
            h,
            &RootElement::zero(),
            Structure::Standard,
        );
        assert_eq!(m.rows, 1);
        assert_eq!(m.cols, 1);
        assert!(m.get(0, 0).is_one());
        let tgt = enumerate_block(&ch, h, &RootElement::simple(0), BlockFilter::All).unwrap();
        assert_eq!(tgt[0].label(), "((),(1))");
    }

    #[test]
    fn e_kills_ground_state() {
        let ch = charge(vec![1, 0], z());
        for i in -2..3 {
            let m = chevalley_matrix(
                Generator::E(i),
                &ch,
                z(),
                &RootElement::zero(),
                Structure::Standard,
            );
            assert!(m.is_zero());
        }
    }

    #[test]
    fn commutator_relation() {
        // E_i F_j - F_j E_i = delta_ij [n_i - n_{i+1}] as a diagonal matrix
        let ch = charge(vec![1, 0], z());
        for alpha in alphas(-1..=2, 3) {
            let src = enumerate_block(&ch, z(), &alpha, BlockFilter::All).unwrap();
            if src.is_empty() {
                continue;
            }
            for st in [Structure::Standard, Structure::Reverse] {
                for i in -2..=3 {
                    for j in -2..=3 {
                        let f_j = chevalley_matrix(Generator::F(j), &ch, z(), &alpha, st);
                        let e_after_f = chevalley_matrix(
                            Generator::E(i),
                            &ch,
                            z(),
                            &Generator::F(j).target_content(&alpha),
                            st,
                        );
                        let e_i = chevalley_matrix(Generator::E(i), &ch, z(), &alpha, st);
                        let f_after_e = chevalley_matrix(
                            Generator::F(j),
                            &ch,
                            z(),
                            &Generator::E(i).target_content(&alpha),
                            st,
                        );
                        let lhs = e_after_f.mul(&f_j).unwrap().sub(&f_after_e.mul(&e_i).unwrap()).unwrap();
                        if i != j {
                            assert!(lhs.is_zero(), "alpha={} i={} j={}", alpha, i, j);
                        } else {
                            let mut rhs = PolyMatrix::zero(src.len(), src.len());
                            for (a, t) in src.iter().enumerate() {
                                let d = entry_count(t, i) - entry_count(t, i + 1);
                                rhs.set(a, a, LaurentPoly::quantum_int(d));
                            }
                            assert_eq!(lhs, rhs, "alpha={} i={}", alpha, i);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn serre_relations() {
        let ch = charge(vec![1, 0], z());
        for (i, j) in [(0i64, 1i64), (1, 0), (0, -1)] {
            let alpha = RootElement::from_pairs([(i, 2), (j, 1)]);
            for st in [Structure::Standard, Structure::Reverse] {
                let chev = |g: Generator, a: &RootElement| chevalley_matrix(g, &ch, z(), a, st);
                let e = Generator::E(i);
                let ej = Generator::E(j);
                // E_i e_j E_i path contents
                let a0 = alpha.clone();
                let ei_1 = chev(e, &a0);
                let a1 = e.target_content(&a0);
                let ej_mid = chev(ej, &a1);
                let a2 = ej.target_content(&a1);
                let ei_2 = chev(e, &a2);
                let eie_jei = ei_2.mul(&ej_mid).unwrap().mul(&ei_1).unwrap();
                // E_i^2 E_j
                let ej_1 = chev(ej, &a0);
                let b1 = ej.target_content(&a0);
                let ei_b1 = chev(e, &b1);
                let b2 = e.target_content(&b1);
                let ei_b2 = chev(e, &b2);
                let eiei_ej = ei_b2.mul(&ei_b1).unwrap().mul(&ej_1).unwrap();
                // E_j E_i^2
                let ei_a0 = chev(e, &a0);
                let c1 = e.target_content(&a0);
                let ei_c1 = chev(e, &c1);
                let c2 = e.target_content(&c1);
                let ej_c2 = chev(ej, &c2);
                let ej_eiei = ej_c2.mul(&ei_c1).unwrap().mul(&ei_a0).unwrap();
                let lhs = eiei_ej.add(&ej_eiei).unwrap();
                let rhs = eie_jei.scale(&LaurentPoly::parse("q^-1+q").unwrap());
                assert_eq!(lhs, rhs, "i={} j={} {:?}", i, j, st);
            }
        }
    }

    #[test]
    fn divided_powers_pinned() {
        let ch = charge(vec![0, 0], z());
        let zero = RootElement::zero();
        // F_0 twice on the ground state produces (q + q^-1) times the unique
        // monomial of content 2*alpha_0
        let f1 = chevalley_matrix(Generator::F(0), &ch, z(), &zero, Structure::Standard);
        let f2 = chevalley_matrix(
            Generator::F(0),
            &ch,
            z(),
            &RootElement::simple(0),
            Structure::Standard,
        );
        let sq = f2.mul(&f1).unwrap();
        assert_eq!(sq.rows, 1);
        assert_eq!(*sq.get(0, 0), LaurentPoly::parse("q^-1+q").unwrap());
        let dp =
            divided_power_matrix(Generator::F(0), 2, &ch, z(), &zero, Structure::Standard).unwrap();
        assert!(dp.get(0, 0).is_one());
        // r = 0 and r = 1 degenerate correctly
        let dp0 =
            divided_power_matrix(Generator::F(0), 0, &ch, z(), &zero, Structure::Standard).unwrap();
        assert_eq!(dp0, PolyMatrix::identity(1));
        let dp1 =
            divided_power_matrix(Generator::F(0), 1, &ch, z(), &zero, Structure::Standard).unwrap();
        assert_eq!(dp1, f1);
    }

    #[test]
    fn reverse_structure_prefactor_side() {
        let ch = charge(vec![0, 0], z());
        let zero = RootElement::zero();
        let tgt = enumerate_block(&ch, z(), &RootElement::simple(0), BlockFilter::All).unwrap();
        assert_eq!(tgt[0].label(), "((),(1))");
        assert_eq!(tgt[1].label(), "((1),())");
        let std = chevalley_matrix(Generator::F(0), &ch, z(), &zero, Structure::Standard);
        assert_eq!(*std.get(0, 0), LaurentPoly::parse("q^-1").unwrap());
        assert!(std.get(1, 0).is_one());
        let rev = chevalley_matrix(Generator::F(0), &ch, z(), &zero, Structure::Reverse);
        assert!(rev.get(0, 0).is_one());
        assert_eq!(*rev.get(1, 0), LaurentPoly::parse("q^-1").unwrap());
    }

    #[test]
    fn entry_counts_over_z() {
        let ch = charge(vec![1, 0], z());
        let g = CSTableau::ground(ch.clone(), z());
        assert_eq!(entry_count(&g, 0), 2);
        assert_eq!(entry_count(&g, 1), 1);
        assert_eq!(entry_count(&g, -5), 2);
        assert_eq!(entry_count(&g, 2), 0);
        let t = CSTableau::new(
            ch,
            z(),
            Multipartition::new(vec![vec![1], vec![1]]).unwrap(),
        )
        .unwrap();
        // columns are (0,2) and (1): counts shift accordingly
        assert_eq!(entry_count(&t, 0), 1);
        assert_eq!(entry_count(&t, 1), 1);
        assert_eq!(entry_count(&t, 2), 1);
        assert_eq!(entry_count(&t, -1), 2);
    }
}
