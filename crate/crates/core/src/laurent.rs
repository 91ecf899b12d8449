//! Exact Laurent polynomials in one variable q with arbitrary-precision
//! integer coefficients, plus the handful of substitutions the basis
//! algorithms need (q -> 1/q, q -> -q, q -> q^k) and exact division.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::AlgebraError;

/// A Laurent polynomial in q over the integers. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    /// exponent -> coefficient, coefficients always nonzero
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// c * q^exp
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        if coeff != 0 {
            p.terms.insert(exp, BigInt::from(coeff));
        }
        p
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, &BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: i64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Iterate terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The bar involution q -> 1/q.
    pub fn bar(&self) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.terms.insert(-e, c.clone());
        }
        p
    }

    /// q -> -q, i.e. negate coefficients of odd-degree terms.
    pub fn subst_neg_q(&self) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            let c = if e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            p.terms.insert(*e, c);
        }
        p
    }

    /// q -> q^k for a nonzero integer k (exponents scale by k).
    pub fn subst_power(&self, k: i64) -> Self {
        assert!(k != 0, "q -> q^0 is not a ring map on Laurent polynomials");
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.terms.insert(e * k, c.clone());
        }
        p
    }

    /// Evaluate at q = 1.
    pub fn eval_one(&self) -> BigInt {
        let mut s = BigInt::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut p = Self::zero();
        for (e, k) in &self.terms {
            p.terms.insert(*e, k * c);
        }
        p
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.terms.insert(e + k, c.clone());
        }
        p
    }

    /// True if the polynomial lies in q Z[q] (all exponents >= 1).
    pub fn in_lattice_below(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 1)
    }

    /// True if the polynomial lies in q^{-1} Z[q^{-1}] (all exponents <= -1).
    pub fn in_lattice_above(&self) -> bool {
        self.max_exp().map_or(true, |e| e <= -1)
    }

    /// True if all exponents are >= 0 (lies in Z[q]).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Exact division: returns self / d when the division is exact over
    /// Z[q, 1/q], otherwise NotDivisible.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Shift so both are genuine polynomials with nonzero constant term,
        // then long-divide from the top degree.
        let mut rem = self.shift(-self.min_exp().unwrap());
        let dpoly = d.shift(-d.min_exp().unwrap());
        let shift_back = self.min_exp().unwrap() - d.min_exp().unwrap();
        let dlead_exp = dpoly.max_exp().unwrap();
        let dlead = dpoly.coeff(dlead_exp);
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let rlead_exp = rem.max_exp().unwrap();
            if rlead_exp < dlead_exp {
                return Err(AlgebraError::NotDivisible);
            }
            let rlead = rem.coeff(rlead_exp);
            if (&rlead % &dlead) != BigInt::zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let c = &rlead / &dlead;
            let e = rlead_exp - dlead_exp;
            let mut t = Self::zero();
            t.terms.insert(e, c);
            rem = &rem - &(&t * &dpoly);
            quot = &quot + &t;
        }
        Ok(quot.shift(shift_back))
    }

    /// The quantum integer [n] = (q^n - q^{-n}) / (q - q^{-1}), with [0] = 0
    /// and [-n] = -[n].
    pub fn quantum_int(n: i64) -> Self {
        let mut p = Self::zero();
        let a = n.abs();
        let mut e = -(a - 1);
        while e <= a - 1 {
            p.terms.insert(e, BigInt::one());
            e += 2;
        }
        if n < 0 {
            p = -&p;
        }
        p
    }

    /// The quantum factorial [n]! = [1][2]...[n] for n >= 0.
    pub fn quantum_factorial(n: i64) -> Self {
        assert!(n >= 0);
        let mut p = Self::one();
        for k in 1..=n {
            p = &p * &Self::quantum_int(k);
        }
        p
    }

    /// Parse the canonical text form (also accepts terms in any order and
    /// optional whitespace). Inverse of Display on canonical strings.
    pub fn parse(s: &str) -> Result<Self, AlgebraError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(AlgebraError::BadPolyLiteral(s.to_string()));
        }
        let bad = || AlgebraError::BadPolyLiteral(s.to_string());
        let mut p = Self::zero();
        // Split into sign-prefixed term chunks.
        let bytes = compact.as_bytes();
        let mut i = 0usize;
        while i < bytes.len() {
            let sign = match bytes[i] {
                b'+' => {
                    i += 1;
                    1i64
                }
                b'-' => {
                    i += 1;
                    -1i64
                }
                _ => 1i64,
            };
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                // a '-' directly after '^' is part of the exponent
                i += 1;
                if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] == b'^'
                {
                    i += 1;
                }
            }
            let term = &compact[start..i];
            if term.is_empty() {
                return Err(bad());
            }
            let (coeff_str, exp): (&str, i64) = match term.find('q') {
                None => (term, 0),
                Some(qpos) => {
                    let c = &term[..qpos];
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let rest = &term[qpos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        let e = rest.strip_prefix('^').ok_or_else(bad)?;
                        e.parse::<i64>().map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse::<BigInt>().map_err(|_| bad())?
            };
            p.add_term(exp, &(coeff * BigInt::from(sign)));
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form: terms in ascending exponent order, "+"/"-" separated,
    /// coefficient +-1 elided on q-terms, exponent 1 written as plain "q".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let qpart = match *e {
                0 => None,
                1 => Some("q".to_string()),
                _ => Some(format!("q^{}", e)),
            };
            match qpart {
                None => write!(f, "{}", mag)?,
                Some(qp) => {
                    if mag.is_one() {
                        write!(f, "{}", qp)?;
                    } else {
                        write!(f, "{}*{}", mag, qp)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c.clone()));
        }
        out
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &(-c.clone()));
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        let p = LaurentPoly::from_terms([(-2, 1), (0, 2), (2, 1)]);
        assert_eq!(p.to_string(), "q^-2+2+q^2");
        let p = LaurentPoly::from_terms([(0, 1), (1, -1)]);
        assert_eq!(p.to_string(), "1-q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(1, -1).to_string(), "-q");
        assert_eq!(LaurentPoly::monomial(-1, 3).to_string(), "3*q^-1");
        assert_eq!(LaurentPoly::from_terms([(0, -2), (3, 5)]).to_string(), "-2+5*q^3");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["q^-2+2+q^2", "1-q", "0", "-q", "3*q^-1", "-2+5*q^3", "q"] {
            let p = LaurentPoly::parse(s).unwrap();
            assert_eq!(p.to_string(), s, "round trip of {}", s);
        }
        // Non-canonical orders and spacing parse to the same value.
        let a = LaurentPoly::parse("-q+1").unwrap();
        let b = LaurentPoly::parse("1 - q").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1-q");
        assert!(LaurentPoly::parse("").is_err());
        assert!(LaurentPoly::parse("q^").is_err());
        assert!(LaurentPoly::parse("2**q").is_err());
    }

    #[test]
    fn arithmetic_and_bar() {
        let p = LaurentPoly::from_terms([(1, 1), (0, 2)]);
        let q = LaurentPoly::from_terms([(-1, 1), (0, -2)]);
        assert_eq!((&p + &q).to_string(), "q^-1+q");
        assert_eq!((&p * &q).to_string(), "2*q^-1-3-2*q");
        let bar = p.bar();
        assert_eq!(bar, LaurentPoly::from_terms([(-1, 1), (0, 2)]));
        assert_eq!(p.subst_neg_q(), LaurentPoly::from_terms([(1, -1), (0, 2)]));
        assert_eq!(p.subst_power(-2), LaurentPoly::from_terms([(-2, 1), (0, 2)]));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(LaurentPoly::quantum_int(0).to_string(), "0");
        assert_eq!(LaurentPoly::quantum_int(1).to_string(), "1");
        assert_eq!(LaurentPoly::quantum_int(2).to_string(), "q^-1+q");
        assert_eq!(LaurentPoly::quantum_int(3).to_string(), "q^-2+1+q^2");
        assert_eq!(LaurentPoly::quantum_int(-2).to_string(), "-q^-1-q");
        assert_eq!(
            LaurentPoly::quantum_factorial(3).to_string(),
            "q^-3+2*q^-1+2*q+q^3"
        );
    }

    #[test]
    fn exact_division() {
        let f = LaurentPoly::quantum_factorial(4);
        let g = LaurentPoly::quantum_factorial(2);
        let h = f.div_exact(&g).unwrap();
        assert_eq!(&h * &g, f);
        let bad = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        let top = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        assert!(top.div_exact(&bad).is_err());
        assert!(LaurentPoly::one().div_exact(&LaurentPoly::zero()).is_err());
        assert_eq!(
            LaurentPoly::zero().div_exact(&bad).unwrap(),
            LaurentPoly::zero()
        );
    }
}
