//! Independent reference computations used by the test suites: Weyl
//! dimension formula, Freudenthal weight multiplicities, Weyl orbits, and
//! plain integer binomials.
//!
//! Everything here works directly from root-system data in epsilon
//! coordinates and never touches the crystal engine, so it can serve as an
//! oracle for it.

use std::collections::HashMap;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::cartan::{inner_quarters, AffineType, Classical, Weight};

/// Positive roots of the classical subalgebra in epsilon coordinates.
pub fn positive_roots(c: Classical, n: usize) -> Vec<Weight> {
    let mut roots = Vec::new();
    let mut push = |coords: Vec<i64>| roots.push(Weight::from_ints(&coords));
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[j] = -1;
            push(v.clone());
            v[j] = 1;
            push(v);
        }
    }
    match c {
        Classical::B => {
            for i in 0..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                push(v);
            }
        }
        Classical::C => {
            for i in 0..n {
                let mut v = vec![0i64; n];
                v[i] = 2;
                push(v);
            }
        }
        Classical::D => {}
    }
    roots
}

/// Half-sum of positive roots.
pub fn rho(c: Classical, n: usize) -> Weight {
    let tw: Vec<i64> = match c {
        Classical::D => (0..n).map(|i| 2 * (n - 1 - i) as i64).collect(),
        Classical::B => (0..n).map(|i| 2 * (n - i) as i64 - 1).collect(),
        Classical::C => (0..n).map(|i| 2 * (n - i) as i64).collect(),
    };
    Weight::from_twice(tw)
}

/// Dimension of the irreducible highest weight module `V(lambda)` by the
/// Weyl dimension formula, exact.
pub fn weyl_dim(t: &AffineType, lambda: &Weight) -> BigInt {
    let c = t.classical();
    let n = t.rank();
    assert_eq!(lambda.len(), n);
    let rho = rho(c, n);
    let lr = lambda.add(&rho);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in positive_roots(c, n) {
        num *= BigInt::from(inner_quarters(&lr, &alpha));
        den *= BigInt::from(inner_quarters(&rho, &alpha));
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension must be integral");
    assert!(q.is_positive(), "lambda must be dominant");
    q
}

/// Dominant representative of the Weyl orbit of `w`.
pub fn dominant_conjugate(c: Classical, w: &Weight) -> Weight {
    let mut abs: Vec<i64> = w.twice().iter().map(|&x| x.abs()).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    if c == Classical::D {
        let negs = w.twice().iter().filter(|&&x| x < 0).count();
        let has_zero = w.twice().iter().any(|&x| x == 0);
        if negs % 2 == 1 && !has_zero {
            if let Some(last) = abs.last_mut() {
                *last = -*last;
            }
        }
    }
    Weight::from_twice(abs)
}

/// Full Weyl orbit of a dominant weight (signed permutations; for type D an
/// even number of sign changes).
pub fn weyl_orbit(c: Classical, w: &Weight) -> Vec<Weight> {
    let n = w.len();
    let mut perm: Vec<i64> = w.twice().to_vec();
    perm.sort_unstable();
    let mut out = std::collections::BTreeSet::new();
    loop {
        for mask in 0..(1u32 << n) {
            let v: Vec<i64> = perm
                .iter()
                .enumerate()
                .map(|(i, &x)| if mask & (1 << i) != 0 { -x } else { x })
                .collect();
            let effective_flips = perm
                .iter()
                .enumerate()
                .filter(|(i, &x)| mask & (1 << *i) != 0 && x != 0)
                .count();
            if c == Classical::D && effective_flips % 2 == 1 {
                continue;
            }
            out.insert(v);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.into_iter().map(Weight::from_twice).collect()
}

fn next_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Weight multiplicities of `V(lambda)` on dominant weights, by
/// Freudenthal's recursion.
pub fn freudenthal_multiplicities(t: &AffineType, lambda: &Weight) -> HashMap<Weight, BigInt> {
    let c = t.classical();
    let n = t.rank();
    let roots = positive_roots(c, n);
    let rho_w = rho(c, n);

    // Dominant weights mu with lambda - mu in the positive root cone,
    // ordered by increasing height of the difference.
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(lambda.clone());
    let mut ordered = vec![lambda.clone()];
    let mut layer = vec![lambda.clone()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for w in &layer {
            for a in 1..=n {
                let alpha = t.simple_root(a).expect("valid node");
                let cand = w.sub(&alpha);
                let dom = dominant_conjugate(c, &cand);
                if crate::cartan::root_coordinates(t, &lambda.sub(&dom)).is_some()
                    && seen.insert(dom.clone())
                {
                    next.push(dom.clone());
                    ordered.push(dom);
                }
            }
        }
        layer = next;
    }
    ordered.sort_by_key(|mu| {
        let k = crate::cartan::root_coordinates(t, &lambda.sub(mu)).expect("in cone");
        k.iter().sum::<i64>()
    });

    let lr = lambda.add(&rho_w);
    let norm_l = inner_quarters(&lr, &lr);
    let mut mult: HashMap<Weight, BigInt> = HashMap::new();
    mult.insert(lambda.clone(), BigInt::one());
    for mu in ordered.iter().skip(1) {
        let mr = mu.add(&rho_w);
        let denom = BigInt::from(norm_l - inner_quarters(&mr, &mr));
        let mut acc = BigRational::zero();
        for alpha in &roots {
            let mut k = 1i64;
            loop {
                let w = mu.add(&alpha.scale(k));
                let dom = dominant_conjugate(c, &w);
                let Some(m) = mult.get(&dom) else { break };
                let ip = inner_quarters(&w, alpha);
                acc += BigRational::new(m * BigInt::from(ip), BigInt::one());
                k += 1;
            }
        }
        let val = acc * BigRational::new(BigInt::from(2), denom.clone());
        assert!(val.is_integer(), "Freudenthal multiplicity must be integral");
        let v = val.to_integer();
        if !v.is_zero() {
            mult.insert(mu.clone(), v);
        }
    }
    mult
}

fn is_dominant(c: Classical, w: &Weight) -> bool {
    let tw = w.twice();
    let n = tw.len();
    for i in 0..n.saturating_sub(1) {
        if tw[i] < tw[i + 1] {
            return false;
        }
    }
    match c {
        Classical::D => n < 2 || tw[n - 2] >= tw[n - 1].abs(),
        _ => tw.last().map_or(true, |&x| x >= 0),
    }
}

/// Full character of `V(lambda)` as a weight multiset.
pub fn character(t: &AffineType, lambda: &Weight) -> HashMap<Weight, BigInt> {
    assert!(is_dominant(t.classical(), lambda));
    let c = t.classical();
    let mut out = HashMap::new();
    for (mu, m) in freudenthal_multiplicities(t, lambda) {
        for w in weyl_orbit(c, &mu) {
            *out.entry(w).or_insert_with(BigInt::zero) += m.clone();
        }
    }
    out
}

/// Signed binomial `binom(p + m, m) = prod_{k=1}^m (p + k)/k` for integer
/// `p` (possibly negative), exact.
pub fn signed_binomial(p: i64, m: u64) -> i128 {
    if m == 0 {
        return 1;
    }
    let m = m as i64;
    if p >= 0 {
        binom_u(p + m, m)
    } else if p + m >= 0 {
        0
    } else {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        sign * binom_u(-p - 1, m)
    }
}

fn binom_u(n: i64, k: i64) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: i128 = 1;
    for t in 0..k {
        num = num.checked_mul((n - t) as i128).expect("binomial overflow");
        num /= (t + 1) as i128;
    }
    num
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Partition;

    fn ty(s: &str) -> AffineType {
        s.parse().unwrap()
    }

    fn dim(t: &AffineType, rows: &[usize]) -> i64 {
        use num::ToPrimitive;
        let w = Partition::new(rows.to_vec()).to_weight(t.rank()).unwrap();
        weyl_dim(t, &w).to_i64().unwrap()
    }

    #[test]
    fn weyl_dims_match_known_values() {
        let d4 = ty("D4~1");
        assert_eq!(dim(&d4, &[1]), 8);
        assert_eq!(dim(&d4, &[1, 1]), 28);
        assert_eq!(dim(&d4, &[2]), 35);
        assert_eq!(dim(&d4, &[2, 2]), 300);
        let b3 = ty("B3~1");
        assert_eq!(dim(&b3, &[1]), 7);
        assert_eq!(dim(&b3, &[1, 1]), 21);
        assert_eq!(dim(&b3, &[1, 1, 1]), 35);
        let c3 = ty("A5~2");
        assert_eq!(dim(&c3, &[1]), 6);
        assert_eq!(dim(&c3, &[1, 1]), 14);
        assert_eq!(dim(&c3, &[1, 1, 1]), 14);
        assert_eq!(dim(&c3, &[2, 1, 1]), 70);
        // spin representation of B_3
        let spin = b3.fundamental_weight(3).unwrap();
        assert_eq!(weyl_dim(&b3, &spin), 8.into());
    }

    #[test]
    fn character_sums_to_dimension() {
        for (s, rows) in [
            ("D4~1", vec![2, 1]),
            ("B3~1", vec![2]),
            ("A5~2", vec![1, 1, 1]),
        ] {
            let t = ty(s);
            let w = Partition::new(rows).to_weight(t.rank()).unwrap();
            let ch = character(&t, &w);
            let total: BigInt = ch.values().cloned().sum();
            assert_eq!(total, weyl_dim(&t, &w), "{s}");
        }
    }

    #[test]
    fn orbit_of_vector_weight() {
        let d4 = ty("D4~1");
        let w = d4.fundamental_weight(1).unwrap();
        assert_eq!(weyl_orbit(Classical::D, &w).len(), 8);
        let spin = d4.fundamental_weight(4).unwrap();
        assert_eq!(weyl_orbit(Classical::D, &spin).len(), 8);
    }

    #[test]
    fn signed_binomials() {
        assert_eq!(signed_binomial(3, 2), 10);
        assert_eq!(signed_binomial(0, 5), 0);
        assert_eq!(signed_binomial(-1, 3), -1);
        assert_eq!(signed_binomial(-3, 2), 1);
        assert_eq!(signed_binomial(-2, 3), 0);
        assert_eq!(signed_binomial(5, 0), 1);
        assert_eq!(signed_binomial(-7, 0), 1);
    }
}
