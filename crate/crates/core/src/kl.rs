//! Kazhdan-Lusztig polynomials with a persistent cache, R-polynomials as an
//! independent consistency oracle, and the parabolic polynomials p_{A,B}
//! attached to pairs of tableaux in one block.
//!
//! The parabolic polynomial is evaluated directly:
//!
//!   p_{A,B}(q) = q^{l(w_B) - l(w_A)} sum_{z in Z_A} (-1)^{l(z)} P_{w_A z, w_B}(q^-2)
//!
//! where w_A is the minimal-length permutation sorting the reading of A and
//! Z_A the Young subgroup stabilizing it.

use crate::error::TableauError;
use crate::laurent::LaurentPoly;
use crate::perm::{bruhat_leq_perm, sorting_data, young_subgroup, Permutation};
use crate::tableaux::{bruhat_leq, truncation_level, CSTableau, Structure};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fs;
use std::io::{self, Write as IoWrite};
use std::path::Path;
use std::sync::Mutex;

type PolyKey = (Vec<usize>, Vec<usize>);

struct CacheInner {
    polys: HashMap<PolyKey, LaurentPoly>,
    downsets: HashMap<Vec<usize>, Vec<Permutation>>,
    file: Option<fs::File>,
}

/// Memo store for Kazhdan-Lusztig polynomials, optionally backed by an
/// append-only text file with lines "n;x-word;y-word;poly" (one-line
/// notation over 1..n, comma separated). Entries are write-once; reopening
/// the file replays them.
pub struct KlCache {
    inner: Mutex<CacheInner>,
}

impl KlCache {
    pub fn in_memory() -> Self {
        KlCache {
            inner: Mutex::new(CacheInner {
                polys: HashMap::new(),
                downsets: HashMap::new(),
                file: None,
            }),
        }
    }

    /// Open (or create) a file-backed cache and replay its contents.
    pub fn open(path: &Path) -> io::Result<Self> {
        let mut polys = HashMap::new();
        if path.exists() {
            let text = fs::read_to_string(path)?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let parsed = parse_cache_line(line).ok_or_else(|| {
                    io::Error::new(
                        io::ErrorKind::InvalidData,
                        format!("bad cache line {}: {}", lineno + 1, line),
                    )
                })?;
                polys.insert(parsed.0, parsed.1);
            }
        }
        let file = fs::OpenOptions::new().create(true).append(true).open(path)?;
        Ok(KlCache {
            inner: Mutex::new(CacheInner {
                polys,
                downsets: HashMap::new(),
                file: Some(file),
            }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lookup(&self, key: &PolyKey) -> Option<LaurentPoly> {
        self.inner.lock().unwrap().polys.get(key).cloned()
    }

    fn store(&self, key: PolyKey, poly: &LaurentPoly) {
        let mut inner = self.inner.lock().unwrap();
        if inner.polys.contains_key(&key) {
            return;
        }
        if let Some(f) = inner.file.as_mut() {
            let line = render_cache_line(&key, poly);
            // a failed append degrades persistence, not correctness
            let _ = writeln!(f, "{}", line);
        }
        inner.polys.insert(key, poly.clone());
    }

    fn lookup_downset(&self, w: &Permutation) -> Option<Vec<Permutation>> {
        self.inner
            .lock()
            .unwrap()
            .downsets
            .get(w.one_line())
            .cloned()
    }

    fn store_downset(&self, w: &Permutation, d: Vec<Permutation>) {
        self.inner
            .lock()
            .unwrap()
            .downsets
            .insert(w.one_line().to_vec(), d);
    }
}

fn render_cache_line(key: &PolyKey, poly: &LaurentPoly) -> String {
    let words: Vec<String> = [&key.0, &key.1]
        .iter()
        .map(|w| {
            w.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("{};{};{};{}", key.0.len(), words[0], words[1], poly)
}

fn parse_cache_line(line: &str) -> Option<(PolyKey, LaurentPoly)> {
    let fields: Vec<&str> = line.split(';').collect();
    if fields.len() != 4 {
        return None;
    }
    let n: usize = fields[0].parse().ok()?;
    let parse_word = |s: &str| -> Option<Vec<usize>> {
        let vals: Option<Vec<usize>> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().ok().and_then(|v| v.checked_sub(1)))
            .collect();
        let vals = vals?;
        if vals.len() != n || {
            let mut seen = vec![false; n];
            vals.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        } {
            return None;
        }
        Some(vals)
    };
    let x = parse_word(fields[1])?;
    let y = parse_word(fields[2])?;
    let poly = LaurentPoly::parse(fields[3]).ok()?;
    Some(((x, y), poly))
}

/// All z <= w in Bruhat order, computed by descent recursion
/// D(w) = D(ws) u D(ws)s and memoized in the cache.
pub fn downset(w: &Permutation, cache: &KlCache) -> Vec<Permutation> {
    if let Some(d) = cache.lookup_downset(w) {
        return d;
    }
    let result = match w.first_right_descent() {
        None => vec![w.clone()],
        Some(s) => {
            let ws = w.times_s_right(s);
            let base = downset(&ws, cache);
            let mut set: std::collections::HashSet<Permutation> =
                base.iter().cloned().collect();
            for z in &base {
                set.insert(z.times_s_right(s));
            }
            let mut v: Vec<Permutation> = set.into_iter().collect();
            v.sort();
            v
        }
    };
    cache.store_downset(w, result.clone());
    result
}

/// The Kazhdan-Lusztig polynomial P_{x,y}(q), by the classical recursion on
/// a right descent s of y:
///
///   P_{x,y} = q^{1-c} P_{xs,ys} + q^c P_{x,ys}
///           - sum_{x <= z <= ys, zs < z} mu(z,ys) q^{(l(y)-l(z))/2} P_{x,z}
///
/// with c = 1 iff xs < x, and mu the top-degree coefficient.
pub fn kl_polynomial(x: &Permutation, y: &Permutation, cache: &KlCache) -> LaurentPoly {
    if x == y {
        return LaurentPoly::one();
    }
    if !bruhat_leq_perm(x, y) {
        return LaurentPoly::zero();
    }
    let key = (x.one_line().to_vec(), y.one_line().to_vec());
    if let Some(p) = cache.lookup(&key) {
        return p;
    }
    let s = y
        .first_right_descent()
        .expect("y exceeds x in Bruhat order, so y is not the identity");
    let ys = y.times_s_right(s);
    let xs = x.times_s_right(s);
    let c = if xs.length() < x.length() { 1 } else { 0 };
    let mut p = kl_polynomial(&xs, &ys, cache).shift(1 - c);
    p += &kl_polynomial(x, &ys, cache).shift(c);
    let ly = y.length() as i64;
    let lys = ys.length() as i64;
    for z in downset(&ys, cache) {
        if z.times_s_right(s).length() > z.length() {
            continue;
        }
        if !bruhat_leq_perm(x, &z) {
            continue;
        }
        let lz = z.length() as i64;
        let diff = lys - lz;
        if diff < 1 || diff % 2 == 0 {
            continue;
        }
        let mu = kl_polynomial(&z, &ys, cache).coeff((diff - 1) / 2);
        if mu.is_zero() {
            continue;
        }
        let term = kl_polynomial(x, &z, cache)
            .scale(&mu)
            .shift((ly - lz) / 2);
        p -= &term;
    }
    debug_assert!(p.is_polynomial());
    debug_assert!(p.coeff(0) == num_bigint::BigInt::one());
    debug_assert!(p.max_exp().unwrap_or(0) * 2 <= ly - x.length() as i64 - 1);
    cache.store(key, &p);
    p
}

/// R-polynomials by their defining recursion; an oracle independent of the
/// KL recursion above.
pub fn r_polynomial(x: &Permutation, y: &Permutation) -> LaurentPoly {
    if x == y {
        return LaurentPoly::one();
    }
    if !bruhat_leq_perm(x, y) {
        return LaurentPoly::zero();
    }
    let s = y.first_right_descent().expect("y is not the identity");
    let ys = y.times_s_right(s);
    let xs = x.times_s_right(s);
    if xs.length() < x.length() {
        r_polynomial(&xs, &ys)
    } else {
        let q_minus_1 = LaurentPoly::parse("q-1").unwrap();
        &(&q_minus_1 * &r_polynomial(x, &ys)) + &r_polynomial(&xs, &ys).shift(1)
    }
}

/// Evaluate the parabolic polynomial from two readings of equal content.
/// This is the raw formula; triangularity is the caller's concern.
pub fn parabolic_from_readings(
    reading_a: &[i64],
    reading_b: &[i64],
    cache: &KlCache,
) -> LaurentPoly {
    debug_assert_eq!(reading_a.len(), reading_b.len());
    debug_assert_eq!(
        {
            let mut v = reading_a.to_vec();
            v.sort();
            v
        },
        {
            let mut v = reading_b.to_vec();
            v.sort();
            v
        },
        "readings must agree as multisets"
    );
    let (wa, blocks) = sorting_data(reading_a);
    let (wb, _) = sorting_data(reading_b);
    let mut sum = LaurentPoly::zero();
    for z in young_subgroup(&blocks) {
        let waz = wa.compose(&z);
        let p = kl_polynomial(&waz, &wb, cache);
        if p.is_zero() {
            continue;
        }
        let signed = if z.sign() < 0 { -&p } else { p };
        sum += &signed.subst_power(-2);
    }
    sum.shift(wb.length() as i64 - wa.length() as i64)
}

/// p_{A,B}(q) for tableaux in one block: Standard uses column readings left
/// to right and vanishes unless A <= B; Reverse uses right-to-left readings
/// and vanishes unless B <= A.
pub fn parabolic_kl(
    a: &CSTableau,
    b: &CSTableau,
    structure: Structure,
    cache: &KlCache,
) -> Result<LaurentPoly, TableauError> {
    if a.charge() != b.charge() || a.index_set() != b.index_set() {
        return Err(TableauError::ChargeMismatch);
    }
    if a.content() != b.content() {
        return Err(TableauError::WeightMismatch);
    }
    if a == b {
        return Ok(LaurentPoly::one());
    }
    let upward = match structure {
        Structure::Standard => bruhat_leq(a, b)?,
        Structure::Reverse => bruhat_leq(b, a)?,
    };
    if !upward {
        return Ok(LaurentPoly::zero());
    }
    let k = truncation_level(a.charge(), a.index_set(), &a.content());
    let reversed = structure == Structure::Reverse;
    Ok(parabolic_from_readings(
        &a.reading_at_level(k, reversed),
        &b.reading_at_level(k, reversed),
        cache,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::symmetric_group;
    use crate::tableaux::{enumerate_block, BlockFilter};
    use crate::weights::{Charge, IndexSet, RootElement};

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn kl_s3_all_trivial() {
        let cache = KlCache::in_memory();
        for x in symmetric_group(3) {
            for y in symmetric_group(3) {
                let poly = kl_polynomial(&x, &y, &cache);
                if bruhat_leq_perm(&x, &y) {
                    assert!(poly.is_one(), "P_{{{},{}}} = {}", x, y, poly);
                } else {
                    assert!(poly.is_zero());
                }
            }
        }
    }

    #[test]
    fn kl_short_intervals_are_one() {
        let cache = KlCache::in_memory();
        for x in symmetric_group(4) {
            for y in symmetric_group(4) {
                if bruhat_leq_perm(&x, &y) && y.length() - x.length() <= 2 {
                    assert!(kl_polynomial(&x, &y, &cache).is_one());
                }
            }
        }
    }

    #[test]
    fn kl_nontrivial_s4_values() {
        let cache = KlCache::in_memory();
        let x = Permutation::from_one_line(vec![0, 2, 1, 3]);
        let y = Permutation::from_one_line(vec![2, 3, 0, 1]);
        assert_eq!(kl_polynomial(&x, &y, &cache), p("1+q"));
        // degree bound (5-2-1)/2 = 1, and the interval is not thin
        let x = Permutation::from_one_line(vec![1, 0, 3, 2]);
        let y = Permutation::from_one_line(vec![3, 1, 2, 0]);
        assert_eq!(kl_polynomial(&x, &y, &cache), p("1+q"));
    }

    #[test]
    fn r_polynomial_basics() {
        let e = Permutation::identity(3);
        let s0 = Permutation::transposition(3, 0);
        assert!(r_polynomial(&e, &e).is_one());
        assert_eq!(r_polynomial(&e, &s0), p("q-1"));
        assert!(r_polynomial(&s0, &e).is_zero());
    }

    #[test]
    fn r_kl_consistency_s4() {
        // q^{l(y)-l(x)} P_{x,y}(1/q) = sum_{x<=z<=y} R_{x,z} P_{z,y}
        let cache = KlCache::in_memory();
        let group = symmetric_group(4);
        for x in &group {
            for y in &group {
                if !bruhat_leq_perm(x, y) {
                    continue;
                }
                let lhs = kl_polynomial(x, y, &cache)
                    .bar()
                    .shift(y.length() as i64 - x.length() as i64);
                let mut rhs = LaurentPoly::zero();
                for z in downset(y, &cache) {
                    if bruhat_leq_perm(x, &z) {
                        rhs += &(&r_polynomial(x, &z) * &kl_polynomial(&z, y, &cache));
                    }
                }
                assert_eq!(lhs, rhs, "x={} y={}", x, y);
            }
        }
    }

    #[test]
    fn downset_sizes() {
        let cache = KlCache::in_memory();
        let e = Permutation::identity(3);
        assert_eq!(downset(&e, &cache).len(), 1);
        let w0 = Permutation::from_one_line(vec![2, 1, 0]);
        assert_eq!(downset(&w0, &cache).len(), 6);
        let w = Permutation::from_one_line(vec![1, 2, 0]);
        assert_eq!(downset(&w, &cache).len(), 4);
    }

    fn pinned_block() -> Vec<CSTableau> {
        let z = IndexSet::AllIntegers;
        let c = Charge::new(vec![1, 0], z).unwrap();
        let alpha = RootElement::from_pairs([(0, 1), (1, 1)]);
        enumerate_block(&c, z, &alpha, BlockFilter::All).unwrap()
    }

    #[test]
    fn parabolic_pinned_block_standard() {
        let cache = KlCache::in_memory();
        let ts = pinned_block();
        let expect = [["1", "q", "q^2"], ["0", "1", "q"], ["0", "0", "1"]];
        for (i, a) in ts.iter().enumerate() {
            for (j, b) in ts.iter().enumerate() {
                let got = parabolic_kl(a, b, Structure::Standard, &cache).unwrap();
                assert_eq!(got, p(expect[i][j]), "p[{}][{}]", i, j);
            }
        }
    }

    #[test]
    fn parabolic_pinned_block_reverse() {
        let cache = KlCache::in_memory();
        let ts = pinned_block();
        let expect = [["1", "0", "0"], ["q", "1", "0"], ["q^2", "q", "1"]];
        for (i, a) in ts.iter().enumerate() {
            for (j, b) in ts.iter().enumerate() {
                let got = parabolic_kl(a, b, Structure::Reverse, &cache).unwrap();
                assert_eq!(got, p(expect[i][j]), "pr[{}][{}]", i, j);
            }
        }
    }

    #[test]
    fn parabolic_vanishing_matches_raw_formula() {
        // the raw sum must itself vanish where triangularity forces zero
        let cache = KlCache::in_memory();
        let ts = pinned_block();
        for a in &ts {
            for b in &ts {
                let ra = a.reading_at_level(0, false);
                let rb = b.reading_at_level(0, false);
                let raw = parabolic_from_readings(&ra, &rb, &cache);
                let wrapped = parabolic_kl(a, b, Structure::Standard, &cache).unwrap();
                assert_eq!(raw, wrapped);
            }
        }
    }

    #[test]
    fn parabolic_zero_constant_term_below_diagonal() {
        let cache = KlCache::in_memory();
        let ts = pinned_block();
        for (i, a) in ts.iter().enumerate() {
            for b in ts.iter().skip(i + 1) {
                let poly = parabolic_kl(a, b, Structure::Standard, &cache).unwrap();
                assert!(poly.is_polynomial());
                assert!(poly.coeff(0).is_zero());
            }
        }
    }

    #[test]
    fn parabolic_stable_under_deeper_truncation() {
        let cache = KlCache::in_memory();
        let ts = pinned_block();
        for a in &ts {
            for b in &ts {
                let base = parabolic_from_readings(
                    &a.reading_at_level(0, false),
                    &b.reading_at_level(0, false),
                    &cache,
                );
                for k in [-1i64, -2] {
                    let deeper = parabolic_from_readings(
                        &a.reading_at_level(k, false),
                        &b.reading_at_level(k, false),
                        &cache,
                    );
                    assert_eq!(base, deeper, "truncation {}", k);
                }
            }
        }
    }

    #[test]
    fn parabolic_weight_mismatch() {
        let z = IndexSet::AllIntegers;
        let c = Charge::new(vec![1, 0], z).unwrap();
        let a = RootElement::from_pairs([(0, 1), (1, 1)]);
        let b = RootElement::from_pairs([(1, 1)]);
        let ta = &enumerate_block(&c, z, &a, BlockFilter::All).unwrap()[0];
        let tb = &enumerate_block(&c, z, &b, BlockFilter::All).unwrap()[0];
        let cache = KlCache::in_memory();
        assert_eq!(
            parabolic_kl(ta, tb, Structure::Standard, &cache).unwrap_err(),
            TableauError::WeightMismatch
        );
    }

    #[test]
    fn cache_file_round_trip() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("klcache-test-{}.txt", std::process::id()));
        let _ = std::fs::remove_file(&path);
        let x = Permutation::from_one_line(vec![0, 2, 1, 3]);
        let y = Permutation::from_one_line(vec![2, 3, 0, 1]);
        let first;
        {
            let cache = KlCache::open(&path).unwrap();
            first = kl_polynomial(&x, &y, &cache);
            assert!(cache.len() > 0);
        }
        let bytes_after_first = std::fs::read(&path).unwrap();
        assert!(!bytes_after_first.is_empty());
        {
            let cache = KlCache::open(&path).unwrap();
            let warm_len = cache.len();
            let again = kl_polynomial(&x, &y, &cache);
            assert_eq!(again, first);
            // fully warm: nothing recomputed, nothing appended
            assert_eq!(cache.len(), warm_len);
        }
        let bytes_after_second = std::fs::read(&path).unwrap();
        assert_eq!(bytes_after_first, bytes_after_second);
        // file lines parse back to the same polynomials
        let text = String::from_utf8(bytes_after_second).unwrap();
        for line in text.lines() {
            assert!(parse_cache_line(line).is_some(), "line: {}", line);
        }
        let _ = std::fs::remove_file(&path);
    }

    #[test]
    fn cache_transparency() {
        // memoized and fresh computations agree on all of S_4
        let warm = KlCache::in_memory();
        let group = symmetric_group(4);
        for x in &group {
            for y in &group {
                let a = kl_polynomial(x, y, &warm);
                let fresh = KlCache::in_memory();
                let b = kl_polynomial(x, y, &fresh);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn bad_cache_lines_rejected() {
        assert!(parse_cache_line("3;1,2;1,2,3;q").is_none());
        assert!(parse_cache_line("3;1,2,2;1,2,3;q").is_none());
        assert!(parse_cache_line("3;1,2,3;1,2,3").is_none());
        assert!(parse_cache_line("3;1,2,3;1,2,3;totally not a poly").is_none());
        let good = parse_cache_line("3;2,1,3;3,2,1;1+q").unwrap();
        assert_eq!(good.0 .0, vec![1, 0, 2]);
        assert_eq!(good.0 .1, vec![2, 1, 0]);
        assert_eq!(good.1, LaurentPoly::parse("1+q").unwrap());
    }
}
