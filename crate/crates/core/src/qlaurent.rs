//! Exact sparse Laurent polynomials in `q_s = q^{1/2}` with arbitrary
//! precision integer coefficients, and the q-integers, q-factorials and
//! q-binomials built on them.
//!
//! Exponents are stored as integers in `q^{1/2}` units throughout: a stored
//! exponent `e` represents `q^{e/2}`.  Denominator 2 suffices for all six
//! families.  Division inside the q-binomial is exact long division with a
//! hard failure on a nonzero remainder.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};

use crate::{Error, Result};

/// Sparse Laurent polynomial; invariant: no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `c * q^{e/2}` for a stored exponent `e`.
    pub fn monomial(exp_halves: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp_halves, BigInt::from(coeff));
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp_halves: i64) -> BigInt {
        self.terms.get(&exp_halves).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `q^{e/2}`.
    pub fn shifted(&self, exp_halves: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp_halves, c.clone()))
                .collect(),
        }
    }

    fn insert(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Exact division; panics if a remainder appears (a remainder signals a
    /// bug, never valid input).
    pub fn div_exact(&self, divisor: &LaurentPoly) -> LaurentPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let (dlead_exp, dlead_coeff) = {
            let (e, c) = rem_lead(divisor);
            (e, c.clone())
        };
        while !rem.is_zero() {
            let (rlead_exp, rlead_coeff) = {
                let (e, c) = rem_lead(&rem);
                (e, c.clone())
            };
            let exp = rlead_exp - dlead_exp;
            let (q, r) = num::Integer::div_rem(&rlead_coeff, &dlead_coeff);
            assert!(r.is_zero(), "non-exact coefficient division in div_exact");
            let mut mono = LaurentPoly::zero();
            mono.insert(exp, q);
            rem = &rem - &(&mono * divisor);
            quot = &quot + &mono;
            if let (Some(re), _) = (rem.max_exp(), ()) {
                assert!(
                    re < rlead_exp,
                    "leading term did not cancel in div_exact"
                );
            }
        }
        quot
    }
}

fn rem_lead(p: &LaurentPoly) -> (i64, &BigInt) {
    let (e, c) = p.terms.iter().next_back().expect("nonzero polynomial");
    (*e, c)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(*e, -c.clone());
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
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// `[m]_{q^k} = (q^{km} - q^{-km}) / (q^k - q^{-k})` expanded as
/// `sum_{t=0}^{m-1} q^{k(m-1-2t)}`; `k` is given in `q^{1/2}` units and must
/// be positive.  `m = 0` gives the zero polynomial.
pub fn q_integer(m: u64, k_halves: i64) -> Result<LaurentPoly> {
    if k_halves <= 0 {
        return Err(Error::InvalidArgument(format!(
            "q_integer requires a positive exponent, got {k_halves}/2"
        )));
    }
    let mut out = LaurentPoly::zero();
    let m = m as i64;
    for t in 0..m {
        out.insert(k_halves * (m - 1 - 2 * t), BigInt::one());
    }
    Ok(out)
}

/// `[m]! = [1][2]...[m]` in base `q^{k/2}`.
pub fn q_factorial(m: u64, k_halves: i64) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::one();
    for t in 1..=m {
        out = &out * &q_integer(t, k_halves)?;
    }
    Ok(out)
}

/// q-binomial `[l, m]` in base `q^{k/2}`: `[l]! / ([m]! [l-m]!)`, computed by
/// exact long division.  Requires `0 <= m <= l`.
pub fn q_binomial(l: u64, m: u64, k_halves: i64) -> Result<LaurentPoly> {
    if m > l {
        return Err(Error::InvalidArgument(format!(
            "q_binomial requires m <= l, got l={l} m={m}"
        )));
    }
    let num = q_factorial(l, k_halves)?;
    let den = &q_factorial(m, k_halves)? * &q_factorial(l - m, k_halves)?;
    Ok(num.div_exact(&den))
}

/// Membership in the shifted lattice `q^{a/2} A`: every exponent of `p` is
/// at least `a` (in `q^{1/2}` units).  The zero polynomial belongs to every
/// shift.
pub fn in_shifted_lattice(p: &LaurentPoly, a_halves: i64) -> bool {
    p.min_exp().map_or(true, |e| e >= a_halves)
}

/// Membership in `1 + q_s A` for the stored `q_s = q^{1/2}`: no negative
/// exponents and constant term exactly 1.
pub fn in_one_plus_qs_a(p: &LaurentPoly) -> bool {
    in_shifted_lattice(p, 0) && p.coeff(0).is_one()
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms by descending exponent, exponents printed
    /// over `q^{1/2}`, e.g. `q^2 + 1` or `q^(3/2) - q^(-1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if *e != 0 {
                if *e == 2 {
                    write!(f, "q")?;
                } else if e % 2 == 0 {
                    let k = e / 2;
                    if k < 0 {
                        write!(f, "q^({k})")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                } else {
                    write!(f, "q^({e}/2)")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical [`fmt::Display`] form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |detail: &str| Error::InvalidArgument(format!("bad polynomial `{s}`: {detail}"));
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut out = LaurentPoly::zero();
        // Split into signed chunks at top level.
        let normalized = s.replace(" - ", " + -").replace("- ", "-");
        for chunk in normalized.split(" + ") {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(bad("empty term"));
            }
            let (sign, body) = match chunk.strip_prefix('-') {
                Some(rest) => (-1i64, rest.trim()),
                None => (1i64, chunk),
            };
            let (coeff_str, exp) = match body.find('q') {
                None => (body, 0i64),
                Some(pos) => {
                    let coeff_str = body[..pos].trim_end_matches('*').trim();
                    let tail = &body[pos + 1..];
                    let e = if tail.is_empty() {
                        2
                    } else {
                        let tail = tail
                            .strip_prefix('^')
                            .ok_or_else(|| bad("expected ^ after q"))?;
                        let tail = tail.trim();
                        let inner = tail
                            .strip_prefix('(')
                            .and_then(|t| t.strip_suffix(')'))
                            .unwrap_or(tail);
                        if let Some(h) = inner.strip_suffix("/2") {
                            h.parse::<i64>().map_err(|_| bad("bad exponent"))?
                        } else {
                            2 * inner.parse::<i64>().map_err(|_| bad("bad exponent"))?
                        }
                    };
                    (coeff_str, e)
                }
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse().map_err(|_| bad("bad coefficient"))?
            };
            out.insert(exp, coeff * BigInt::from(sign));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(2 * e, 1)
    }

    #[test]
    fn q_integer_examples() {
        // [2] at q: q + q^{-1}
        let p = q_integer(2, 2).unwrap();
        assert_eq!(p, &q(1) + &q(-1));
        // [0] = 0
        assert!(q_integer(0, 2).unwrap().is_zero());
        // [3] at q^{1/2}: exponents 2, 0, -2 in q_s units
        let p = q_integer(3, 1).unwrap();
        assert_eq!(p, &(&q(1) + &LaurentPoly::one()) + &q(-1));
        assert!(q_integer(2, 0).is_err());
        assert!(q_integer(2, -1).is_err());
    }

    #[test]
    fn q_binomial_examples() {
        assert!(q_binomial(3, 0, 2).unwrap().is_one());
        assert_eq!(q_binomial(2, 1, 2).unwrap(), q_integer(2, 2).unwrap());
        // [4 choose 2] = q^4 + q^2 + 2 + q^-2 + q^-4, frozen from expanding
        // [4]!/([2]![2]!) by hand.
        let expected: LaurentPoly = "q^4 + q^2 + 2 + q^(-2) + q^(-4)".parse().unwrap();
        assert_eq!(q_binomial(4, 2, 2).unwrap(), expected);
        assert!(q_binomial(2, 3, 2).is_err());
    }

    #[test]
    fn q_binomial_symmetry() {
        for l in 0..=8u64 {
            for m in 0..=l {
                for k in [1, 2, 4] {
                    assert_eq!(
                        q_binomial(l, m, k).unwrap(),
                        q_binomial(l, l - m, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn lattice_membership() {
        let p = &q(1) * &q(1); // q^2
        assert!(in_shifted_lattice(&(&p + &LaurentPoly::one()), 0));
        assert!(!in_shifted_lattice(&q(-1), 0));
        assert!(in_shifted_lattice(&LaurentPoly::zero(), 10));
        assert!(in_one_plus_qs_a(&(&p + &LaurentPoly::one())));
        assert!(!in_one_plus_qs_a(&(&q(1) + &q(-1))));
        assert!(in_one_plus_qs_a(&LaurentPoly::one()));
        assert!(!in_one_plus_qs_a(&LaurentPoly::zero()));
    }

    #[test]
    fn normalized_binomials_lie_in_one_plus_qa() {
        // q^{k m (l - m)} [l choose m] in 1 + q_s A, for every base.
        for l in 1..=7u64 {
            for m in 1..=l {
                for k in [1i64, 2, 4] {
                    let b = q_binomial(l, m, k).unwrap();
                    let shifted = b.shifted(k * (m as i64) * ((l - m) as i64));
                    assert!(in_one_plus_qs_a(&shifted), "l={l} m={m} k={k}");
                }
            }
        }
        // q^{k(m-1)} [m] in 1 + q_s A.
        for m in 1..=9u64 {
            for k in [1i64, 2, 4] {
                let p = q_integer(m, k).unwrap().shifted(k * (m as i64 - 1));
                assert!(in_one_plus_qs_a(&p), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(q_binomial(2, 1, 2).unwrap().to_string(), "q + q^(-1)");
        assert_eq!(q_integer(3, 1).unwrap().to_string(), "q + 1 + q^(-1)");
        assert_eq!(LaurentPoly::monomial(3, 1).to_string(), "q^(3/2)");
        assert_eq!(
            (&LaurentPoly::monomial(3, 1) - &LaurentPoly::monomial(-1, 1)).to_string(),
            "q^(3/2) - q^(-1/2)"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(0, -2).to_string(), "-2");
    }

    #[test]
    #[should_panic(expected = "div_exact")]
    fn division_with_remainder_panics() {
        let p = &q(1) + &LaurentPoly::one(); // q + 1
        let d = &q(1) + &LaurentPoly::monomial(0, -1); // q - 1
        let _ = p.div_exact(&d);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..6, -4i64..5), 0..6).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (e, c) in terms {
                p.insert(e, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
            let shift = (&a * &b).shifted(3);
            prop_assert_eq!(shift, &a.shifted(3) * &b);
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            let s = a.to_string();
            let back: LaurentPoly = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), a);
        }
    }
}
