//! Classical decomposition of the KR modules, computed two independent
//! ways: by repeatedly removing nu-shaped pieces from the `r x s` rectangle,
//! and by enumerating the closed-form weight generators.
//!
//! For a node `r` that is classically irreducible the decomposition is the
//! single weight `s varpi_r`; node `n` of `B_n^(1)` is not such a node and
//! instead uses the half-width rectangle (s even) or the weight generators
//! (all s).

use std::collections::{BTreeSet, VecDeque};

use crate::cartan::{AffineType, Family, Nu, Partition, Weight};
use crate::{Error, Result};

/// A weakly decreasing sequence of column multiplicity parameters subject to
/// the per-family bounds; the implied leading entry (`s` or `s/2`) and
/// trailing zero are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CVector(pub Vec<i64>);

impl CVector {
    /// Entry `c_j` for `j >= 1`, with `c_j = 0` past the stored length.
    pub fn entry(&self, j: usize) -> i64 {
        assert!(j >= 1, "c_0 is family dependent; resolved by the caller");
        self.0.get(j - 1).copied().unwrap_or(0)
    }
}

/// Expected length and upper bound of valid c-vectors for `(t, r, s)`.
///
/// Returns `(length, bound, c0_twice)` where `c0_twice` is the doubled
/// implied head entry (`2s` or `s`).
pub fn cvector_frame(t: &AffineType, r: usize, s: usize) -> Result<(usize, i64, i64)> {
    let n = t.rank();
    if r == 0 || r > n {
        return Err(Error::InvalidNode { node: r, rank: n });
    }
    if t.is_spin_node(r) {
        return Err(Error::InvalidArgument(format!(
            "node {r} of {t} has no c-vector parametrization"
        )));
    }
    let s = s as i64;
    Ok(match t.family {
        Family::D1 | Family::A2Odd => (r / 2, s, 2 * s),
        Family::B1 => {
            if r == t.n {
                (n / 2, s / 2, s)
            } else {
                (r / 2, s, 2 * s)
            }
        }
        Family::C1 => (r, s / 2, s),
        Family::A2Even | Family::D2 => (r, s, 2 * s),
    })
}

/// All valid c-vectors for `(t, r, s)`.
pub fn enumerate_cvectors(t: &AffineType, r: usize, s: usize) -> Result<Vec<CVector>> {
    let (len, bound, _) = cvector_frame(t, r, s)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<CVector>) {
        if cur.len() == len {
            out.push(CVector(cur.clone()));
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(len, v, cur, out);
            cur.pop();
        }
    }
    rec(len, bound, &mut cur, &mut out);
    Ok(out)
}

fn validate_cvector(t: &AffineType, r: usize, s: usize, c: &CVector) -> Result<()> {
    let (len, bound, _) = cvector_frame(t, r, s)?;
    if c.0.len() != len {
        return Err(Error::InvalidArgument(format!(
            "c-vector {:?} has length {}, expected {len}",
            c.0,
            c.0.len()
        )));
    }
    let mut prev = bound;
    for &v in &c.0 {
        if v < 0 || v > prev {
            return Err(Error::InvalidArgument(format!(
                "c-vector {:?} violates {bound} >= c_1 >= ... >= 0",
                c.0
            )));
        }
        prev = v;
    }
    Ok(())
}

/// The weight generator attached to a c-vector.
pub fn lambda_of_c(t: &AffineType, r: usize, s: usize, c: &CVector) -> Result<Weight> {
    validate_cvector(t, r, s, c)?;
    let len = c.0.len();
    let s = s as i64;
    let mut w = Weight::zero(t.rank());
    let mut add_fund = |w: &Weight, i: usize, coeff: i64| -> Result<Weight> {
        if coeff == 0 || i == 0 {
            return Ok(w.clone());
        }
        Ok(w.add(&t.fundamental_weight(i)?.scale(coeff)))
    };
    match t.family {
        Family::D1 | Family::A2Odd => {
            // sum_j (c_j - c_{j+1}) varpi_{r-2j}, c_0 = s
            for j in 0..=len {
                let cj = if j == 0 { s } else { c.entry(j) };
                let cj1 = if j == len { 0 } else { c.entry(j + 1) };
                w = add_fund(&w, r - 2 * j, cj - cj1)?;
            }
        }
        Family::B1 => {
            if r == t.n {
                // sum_j (c_j - c_{j+1})(1 + [j=0]) varpi_{n-2j}, c_0 = s/2
                for j in 0..=len {
                    let coeff = if j == 0 {
                        // 2 (s/2 - c_1) stays integral for odd s
                        s - 2 * if len == 0 { 0 } else { c.entry(1) }
                    } else {
                        let cj1 = if j == len { 0 } else { c.entry(j + 1) };
                        c.entry(j) - cj1
                    };
                    w = add_fund(&w, t.n - 2 * j, coeff)?;
                }
            } else {
                for j in 0..=len {
                    let cj = if j == 0 { s } else { c.entry(j) };
                    let cj1 = if j == len { 0 } else { c.entry(j + 1) };
                    w = add_fund(&w, r - 2 * j, cj - cj1)?;
                }
            }
        }
        Family::C1 => {
            // sum_j 2 (c_j - c_{j+1}) varpi_{r-j}, c_0 = s/2
            for j in 0..=len {
                let coeff = if j == 0 {
                    s - 2 * if len == 0 { 0 } else { c.entry(1) }
                } else {
                    let cj1 = if j == len { 0 } else { c.entry(j + 1) };
                    2 * (c.entry(j) - cj1)
                };
                w = add_fund(&w, r - j, coeff)?;
            }
        }
        Family::A2Even | Family::D2 => {
            // sum_j (c_j - c_{j+1}) varpi_{r-j}, c_0 = s
            for j in 0..=len {
                let cj = if j == 0 { s } else { c.entry(j) };
                let cj1 = if j == len { 0 } else { c.entry(j + 1) };
                w = add_fund(&w, r - j, cj - cj1)?;
            }
        }
    }
    Ok(w)
}

/// Decomposition by enumerating all c-vectors; for a classically
/// irreducible node the single weight `s varpi_r` is returned.
pub fn decompose_by_c(t: &AffineType, r: usize, s: usize) -> Result<Vec<Weight>> {
    let n = t.rank();
    if r == 0 || r > n {
        return Err(Error::InvalidNode { node: r, rank: n });
    }
    if t.is_spin_node(r) {
        return Ok(vec![t.fundamental_weight(r)?.scale(s as i64)]);
    }
    let mut out: Vec<Weight> = enumerate_cvectors(t, r, s)?
        .iter()
        .map(|c| lambda_of_c(t, r, s, c))
        .collect::<Result<_>>()?;
    let before = out.len();
    out.sort();
    out.dedup();
    assert_eq!(before, out.len(), "distinct c must give distinct weights");
    Ok(out)
}

/// All partitions reachable from `start` by repeatedly deleting one
/// nu-shaped piece, every intermediate stage being a partition.
pub fn nu_removal_closure(start: &Partition, nu: Nu) -> Vec<Partition> {
    let mut seen: BTreeSet<Partition> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(p) = queue.pop_front() {
        for q in single_removals(&p, nu) {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.into_iter().collect()
}

fn single_removals(p: &Partition, nu: Nu) -> Vec<Partition> {
    let rows = p.rows();
    let k = rows.len();
    let mut out = Vec::new();
    match nu {
        Nu::SingleBox => {
            for i in 0..k {
                let below = if i + 1 < k { rows[i + 1] } else { 0 };
                if rows[i] >= 1 && rows[i] - 1 >= below {
                    let mut r = rows.to_vec();
                    r[i] -= 1;
                    out.push(Partition::new(r));
                }
            }
        }
        Nu::HorizontalDomino => {
            for i in 0..k {
                let below = if i + 1 < k { rows[i + 1] } else { 0 };
                if rows[i] >= 2 && rows[i] - 2 >= below {
                    let mut r = rows.to_vec();
                    r[i] -= 2;
                    out.push(Partition::new(r));
                }
            }
        }
        Nu::VerticalDomino => {
            for i in 0..k.saturating_sub(1) {
                let below = if i + 2 < k { rows[i + 2] } else { 0 };
                if rows[i] == rows[i + 1] && rows[i] >= 1 && rows[i] - 1 >= below {
                    let mut r = rows.to_vec();
                    r[i] -= 1;
                    r[i + 1] -= 1;
                    out.push(Partition::new(r));
                }
            }
        }
    }
    out
}

/// Diagrammatic decomposition: nu-removal from the `r x s` rectangle.
///
/// Rejects classically irreducible nodes; for node `n` of `B_n^(1)` the
/// half-width rectangle applies and `s` must be even.
pub fn decompose_diagrammatic(t: &AffineType, r: usize, s: usize) -> Result<Vec<Weight>> {
    let n = t.rank();
    if r == 0 || r > n {
        return Err(Error::InvalidNode { node: r, rank: n });
    }
    if t.is_spin_node(r) {
        return Err(Error::InvalidArgument(format!(
            "node {r} of {t} is classically irreducible; no rectangle rule"
        )));
    }
    let start = if t.family == Family::B1 && r == t.n {
        if s % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "B-type node {n} with odd s={s} has no half-width rectangle"
            )));
        }
        Partition::rectangle(n, s / 2)
    } else {
        Partition::rectangle(r, s)
    };
    let mut out: Vec<Weight> = nu_removal_closure(&start, t.nu())
        .iter()
        .map(|p| p.to_weight(n))
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// Classical decomposition of the KR module, sorted.
pub fn decompose(t: &AffineType, r: usize, s: usize) -> Result<Vec<Weight>> {
    decompose_by_c(t, r, s)
}

/// Membership multiplicity (0 or 1) of `lambda` in the decomposition.
pub fn multiplicity(t: &AffineType, r: usize, s: usize, lambda: &Weight) -> Result<u64> {
    Ok(u64::from(decompose(t, r, s)?.contains(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> AffineType {
        s.parse().unwrap()
    }

    fn parts(ws: &[Weight]) -> Vec<Partition> {
        ws.iter()
            .map(|w| Partition::from_weight(w).unwrap())
            .collect()
    }

    #[test]
    fn lambda_of_c_examples() {
        let d4 = ty("D4~1");
        let w = lambda_of_c(&d4, 2, 2, &CVector(vec![0])).unwrap();
        assert_eq!(w, d4.fundamental_weight(2).unwrap().scale(2));
        let w = lambda_of_c(&d4, 2, 2, &CVector(vec![2])).unwrap();
        assert!(w.is_zero());
        let b3 = ty("B3~1");
        let w = lambda_of_c(&b3, 3, 2, &CVector(vec![1])).unwrap();
        assert_eq!(w, b3.fundamental_weight(1).unwrap());
        assert!(lambda_of_c(&d4, 2, 2, &CVector(vec![3])).is_err());
        assert!(lambda_of_c(&d4, 2, 2, &CVector(vec![0, 0])).is_err());
    }

    #[test]
    fn diagrammatic_examples() {
        let d4 = ty("D4~1");
        let got = parts(&decompose_diagrammatic(&d4, 2, 2).unwrap());
        let want = vec![
            Partition::empty(),
            Partition::new(vec![1, 1]),
            Partition::new(vec![2, 2]),
        ];
        assert_eq!(got, want);

        let c3 = ty("C3~1");
        let got = parts(&decompose_diagrammatic(&c3, 2, 2).unwrap());
        let want = vec![
            Partition::empty(),
            Partition::new(vec![2]),
            Partition::new(vec![2, 2]),
        ];
        assert_eq!(got, want);

        let a4 = ty("A4~2");
        let got = parts(&decompose_diagrammatic(&a4, 1, 1).unwrap());
        assert_eq!(got, vec![Partition::empty(), Partition::new(vec![1])]);
    }

    #[test]
    fn by_c_examples() {
        let d4 = ty("D4~1");
        let mut want = vec![
            d4.fundamental_weight(2).unwrap().scale(2),
            d4.fundamental_weight(2).unwrap(),
            Weight::zero(4),
        ];
        want.sort();
        assert_eq!(decompose_by_c(&d4, 2, 2).unwrap(), want);

        // classically irreducible branch
        let spin = decompose_by_c(&d4, 4, 3).unwrap();
        assert_eq!(spin, vec![d4.fundamental_weight(4).unwrap().scale(3)]);

        let b3 = ty("B3~1");
        let mut want = vec![
            b3.fundamental_weight(3).unwrap().scale(2),
            b3.fundamental_weight(1).unwrap(),
        ];
        want.sort();
        assert_eq!(decompose_by_c(&b3, 3, 2).unwrap(), want);
        // odd s works through the generators even though the rectangle rule
        // does not apply
        assert_eq!(
            decompose_by_c(&b3, 3, 1).unwrap(),
            vec![b3.fundamental_weight(3).unwrap()]
        );
        assert!(decompose_diagrammatic(&b3, 3, 1).is_err());
    }

    #[test]
    fn routes_agree_where_both_defined() {
        for (tname, rmax) in [
            ("D4~1", 2),
            ("D5~1", 3),
            ("B3~1", 2),
            ("B4~1", 3),
            ("A5~2", 3),
            ("A3~2", 2),
            ("C3~1", 2),
            ("C2~1", 1),
            ("A4~2", 2),
            ("A6~2", 3),
            ("D3~2", 1),
            ("D4~2", 2),
            ("D5~2", 3),
        ] {
            let t = ty(tname);
            for r in 1..=rmax {
                for s in 1..=3 {
                    if t.family == Family::B1 && r == t.n && s % 2 == 1 {
                        continue;
                    }
                    let a = decompose_diagrammatic(&t, r, s).unwrap();
                    let b = decompose_by_c(&t, r, s).unwrap();
                    assert_eq!(a, b, "{tname} r={r} s={s}");
                }
            }
        }
        // B-type node n, even s: half-width rectangle with vertical dominoes
        let b3 = ty("B3~1");
        assert_eq!(
            decompose_diagrammatic(&b3, 3, 2).unwrap(),
            decompose_by_c(&b3, 3, 2).unwrap()
        );
        let b4 = ty("B4~1");
        assert_eq!(
            decompose_diagrammatic(&b4, 4, 2).unwrap(),
            decompose_by_c(&b4, 4, 2).unwrap()
        );
    }

    #[test]
    fn index_form_of_dual_decomposition() {
        // multiset {varpi_{r-2m_1} + ... + varpi_{r-2m_s}} over weakly
        // increasing tuples bounded by floor(r/2)
        for (tname, rmax) in [("D4~1", 2usize), ("B3~1", 2), ("A5~2", 3)] {
            let t = ty(tname);
            for r in 1..=rmax {
                for s in 1..=3usize {
                    let mut want = BTreeSet::new();
                    let mut tuple = vec![0usize; s];
                    loop {
                        let mut w = Weight::zero(t.rank());
                        for &m in &tuple {
                            if r > 2 * m {
                                w = w.add(&t.fundamental_weight(r - 2 * m).unwrap());
                            }
                        }
                        want.insert(w);
                        let mut i = s;
                        loop {
                            if i == 0 {
                                tuple.clear();
                                break;
                            }
                            i -= 1;
                            if tuple[i] < r / 2 {
                                let v = tuple[i] + 1;
                                for x in tuple.iter_mut().skip(i) {
                                    *x = v;
                                }
                                break;
                            }
                        }
                        if tuple.is_empty() {
                            break;
                        }
                    }
                    let got: BTreeSet<Weight> =
                        decompose(&t, r, s).unwrap().into_iter().collect();
                    assert_eq!(got, want, "{tname} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn multiset_is_multiplicity_free() {
        let t = ty("A5~2");
        for r in 1..=3 {
            for s in 1..=3 {
                let d = decompose(&t, r, s).unwrap();
                let set: BTreeSet<_> = d.iter().collect();
                assert_eq!(set.len(), d.len());
            }
        }
    }
}
