//! Permutations of {0, ..., n-1} in one-line notation, with Bruhat order,
//! reduced words, and the sorting data attached to a tableau reading.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_one_line(v: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; v.len()];
            v.iter().all(|&x| {
                x < v.len() && !std::mem::replace(&mut seen[x], true)
            })
        });
        Permutation(v)
    }

    /// Adjacent transposition swapping i and i+1.
    pub fn transposition(n: usize, i: usize) -> Self {
        debug_assert!(i + 1 < n);
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, i + 1);
        Permutation(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// (self . other)(k) = self(other(k)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.n()];
        for (k, &img) in self.0.iter().enumerate() {
            v[img] = k;
        }
        Permutation(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &img)| k == img)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// s_i . self: swaps the values i and i+1.
    pub fn times_s_left(&self, i: usize) -> Permutation {
        let v = self
            .0
            .iter()
            .map(|&x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        Permutation(v)
    }

    /// self . s_i: swaps positions i and i+1.
    pub fn times_s_right(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i, i + 1);
        Permutation(v)
    }

    /// True when s_i . self is shorter, i.e. i appears after i+1.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i] > inv.0[i + 1]
    }

    /// True when self . s_i is shorter.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    pub fn first_left_descent(&self) -> Option<usize> {
        (0..self.n().saturating_sub(1)).find(|&i| self.has_left_descent(i))
    }

    pub fn first_right_descent(&self) -> Option<usize> {
        (0..self.n().saturating_sub(1)).find(|&i| self.has_right_descent(i))
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.n().saturating_sub(1))
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.n().saturating_sub(1))
            .filter(|&i| self.has_left_descent(i))
            .collect()
    }

    /// A reduced word (s_{w_1} ... s_{w_k} = self), built by undoing right
    /// descents; deterministic.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.clone();
        let mut rev = Vec::new();
        loop {
            let Some(i) = (0..v.n().saturating_sub(1)).find(|&i| v.has_right_descent(i)) else {
                break;
            };
            v = v.times_s_right(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        let mut w = Permutation::identity(n);
        for &i in word {
            w = w.times_s_right(i);
        }
        w
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Bruhat order via the tableau criterion: x <= y iff for every k the
/// increasing rearrangement of the first k values of y dominates that of x
/// entrywise.
pub fn bruhat_leq_perm(x: &Permutation, y: &Permutation) -> bool {
    debug_assert_eq!(x.n(), y.n());
    if x.length() > y.length() {
        return false;
    }
    let n = x.n();
    let mut xs: Vec<usize> = Vec::with_capacity(n);
    let mut ys: Vec<usize> = Vec::with_capacity(n);
    for k in 0..n {
        let xi = x.apply(k);
        let yi = y.apply(k);
        xs.insert(xs.partition_point(|&v| v < xi), xi);
        ys.insert(ys.partition_point(|&v| v < yi), yi);
        for i in 0..=k {
            if xs[i] > ys[i] {
                return false;
            }
        }
    }
    true
}

/// Stable argsort of a reading: the permutation w with w(k) = position of
/// the k-th smallest entry (ties kept in reading order), plus the run
/// lengths of equal entries in the sorted reading. The Young subgroup on
/// those runs is exactly the stabilizer z with reading[w(z(k))] =
/// reading[w(k)].
pub fn sorting_data(reading: &[i64]) -> (Permutation, Vec<usize>) {
    let mut idx: Vec<usize> = (0..reading.len()).collect();
    idx.sort_by_key(|&i| (reading[i], i));
    let w = Permutation(idx);
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < reading.len() {
        let v = reading[w.apply(i)];
        let mut j = i + 1;
        while j < reading.len() && reading[w.apply(j)] == v {
            j += 1;
        }
        blocks.push(j - i);
        i = j;
    }
    (w, blocks)
}

/// Every element of the Young subgroup S_{b_1} x S_{b_2} x ... inside S_n,
/// acting on consecutive runs of positions.
pub fn young_subgroup(blocks: &[usize]) -> Vec<Permutation> {
    let n: usize = blocks.iter().sum();
    let mut out = vec![Permutation::identity(n)];
    let mut offset = 0;
    for &b in blocks {
        let perms_b = all_permutations(b);
        let mut next = Vec::with_capacity(out.len() * perms_b.len());
        for base in &out {
            for p in &perms_b {
                let mut v = base.0.clone();
                for k in 0..b {
                    v[offset + k] = base.0[offset + p.apply(k)];
                }
                next.push(Permutation(v));
            }
        }
        out = next;
        offset += b;
    }
    out
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(remaining: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if remaining.is_empty() {
            out.push(Permutation(cur.clone()));
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            cur.push(v);
            rec(remaining, cur, out);
            cur.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// All elements of S_n, in no particular order beyond determinism.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    all_permutations(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_convention() {
        let s0 = Permutation::transposition(3, 0);
        let s1 = Permutation::transposition(3, 1);
        // (s0 . s1)(k) = s0(s1(k))
        assert_eq!(s0.compose(&s1).one_line(), &[1, 2, 0]);
        assert_eq!(s1.compose(&s0).one_line(), &[2, 0, 1]);
    }

    #[test]
    fn lengths_and_inverse() {
        let w = Permutation::from_one_line(vec![2, 0, 3, 1]);
        assert_eq!(w.length(), 3);
        assert_eq!(w.inverse().one_line(), &[1, 3, 0, 2]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.sign(), -1);
        let word = w.reduced_word();
        assert_eq!(word.len(), w.length());
        assert_eq!(Permutation::from_word(4, &word), w);
    }

    #[test]
    fn descents() {
        let w = Permutation::from_one_line(vec![1, 2, 0]);
        // value 1 sits before value 0, value 2 does not sit before value 1
        assert!(w.has_left_descent(0));
        assert!(!w.has_left_descent(1));
        assert!(w.has_right_descent(1));
        assert!(!w.has_right_descent(0));
        // s_1 . w = [2,1,0]? swapping values 1,2 gives [2,1,0]
        assert_eq!(w.times_s_left(1).one_line(), &[2, 1, 0]);
        assert_eq!(w.times_s_right(1).one_line(), &[1, 0, 2]);
    }

    #[test]
    fn bruhat_s3() {
        let e = Permutation::identity(3);
        let s0 = Permutation::transposition(3, 0);
        let s1 = Permutation::transposition(3, 1);
        let s0s1 = s0.compose(&s1);
        let s1s0 = s1.compose(&s0);
        let w0 = Permutation::from_one_line(vec![2, 1, 0]);
        let all = [&e, &s0, &s1, &s0s1, &s1s0, &w0];
        for x in all {
            assert!(bruhat_leq_perm(&e, x));
            assert!(bruhat_leq_perm(x, &w0));
            assert!(bruhat_leq_perm(x, x));
        }
        assert!(!bruhat_leq_perm(&s0, &s1));
        assert!(!bruhat_leq_perm(&s1, &s0));
        assert!(bruhat_leq_perm(&s0, &s0s1));
        assert!(bruhat_leq_perm(&s1, &s0s1));
        assert!(!bruhat_leq_perm(&s0s1, &s1s0));
        // antisymmetry on the whole group
        for x in all {
            for y in all {
                if x != y {
                    assert!(!(bruhat_leq_perm(x, y) && bruhat_leq_perm(y, x)));
                }
            }
        }
    }

    #[test]
    fn bruhat_matches_subword_definition_s4() {
        // cross-check the tableau criterion against the subword test on all
        // of S_4, using the reduced word of y
        let group = symmetric_group(4);
        for x in &group {
            for y in &group {
                let word = y.reduced_word();
                assert_eq!(
                    bruhat_leq_perm(x, y),
                    has_subword(x, &word),
                    "x={} y={}",
                    x,
                    y
                );
            }
        }
    }

    fn has_subword(x: &Permutation, word: &[usize]) -> bool {
        // x <= y iff some subword of a reduced word of y is a reduced word
        // of x; dynamic set of reachable prefixes
        let n = x.n();
        let mut reach = std::collections::HashSet::new();
        reach.insert(Permutation::identity(n));
        for &i in word {
            let mut next = reach.clone();
            for w in &reach {
                let wsi = w.times_s_right(i);
                if wsi.length() > w.length() {
                    next.insert(wsi);
                }
            }
            reach = next;
        }
        reach.contains(x)
    }

    #[test]
    fn sorting_data_goldens() {
        let (w, blocks) = sorting_data(&[1, 0, 2]);
        assert_eq!(w.one_line(), &[1, 0, 2]);
        assert_eq!(w.length(), 1);
        assert_eq!(blocks, vec![1, 1, 1]);
        let (w, _) = sorting_data(&[2, 0, 1]);
        assert_eq!(w.one_line(), &[1, 2, 0]);
        assert_eq!(w.length(), 2);
        let (w, _) = sorting_data(&[2, 1, 0]);
        assert_eq!(w.one_line(), &[2, 1, 0]);
        assert_eq!(w.length(), 3);
        // repeated entries: stable ties
        let (w, blocks) = sorting_data(&[2, 1, 2, 1]);
        assert_eq!(w.one_line(), &[1, 3, 0, 2]);
        assert_eq!(blocks, vec![2, 2]);
    }

    #[test]
    fn young_subgroup_enumeration() {
        let z = young_subgroup(&[1, 1, 1]);
        assert_eq!(z.len(), 1);
        assert!(z[0].is_identity());
        let z = young_subgroup(&[2, 2]);
        assert_eq!(z.len(), 4);
        let signs: i64 = z.iter().map(|p| p.sign()).sum();
        assert_eq!(signs, 0);
        // all fix the block structure
        for p in &z {
            for k in 0..2 {
                assert!(p.apply(k) < 2);
                assert!(p.apply(k + 2) >= 2);
            }
        }
        let z = young_subgroup(&[3]);
        assert_eq!(z.len(), 6);
    }
}
