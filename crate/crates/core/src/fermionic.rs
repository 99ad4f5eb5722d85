//! The configuration-sum multiplicities `N_s^(r)(lambda)` and the unsigned
//! variant `M_s^(r)(lambda)`, computed by explicit enumeration.
//!
//! The vacancy numbers are evaluated in the standard affine normalization
//! `(delta, lambda) = <c, lambda>`, kept separate from the renormalized
//! product used everywhere else: conflating the two changes the vacancy
//! numbers for the twisted families.

use std::collections::BTreeMap;

use crate::cartan::{root_coordinates, AffineType, Weight};
use crate::oracle::signed_binomial;
use crate::{Error, Result};

/// One configuration: finite-support multiplicities `m_j^(a)` indexed by
/// `(node a, part length j >= 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub m: BTreeMap<(usize, usize), u64>,
}

impl Configuration {
    pub fn multiplicity(&self, a: usize, j: usize) -> u64 {
        self.m.get(&(a, j)).copied().unwrap_or(0)
    }
}

/// All configurations with `sum_{a,j} j m_j^(a) alpha_a = s varpi_r - lambda`;
/// empty when the difference is not a nonnegative integer root combination.
pub fn enumerate_configs(
    t: &AffineType,
    r: usize,
    s: usize,
    lambda: &Weight,
) -> Result<Vec<Configuration>> {
    let n = t.rank();
    if r == 0 || r > n {
        return Err(Error::InvalidNode { node: r, rank: n });
    }
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    let top = t.fundamental_weight(r)?.scale(s as i64);
    let diff = top.sub(lambda);
    let Some(coords) = root_coordinates(t, &diff) else {
        return Ok(Vec::new());
    };
    // Per node: all partitions of coords[a] encoded as multiplicity maps.
    let per_node: Vec<Vec<Vec<(usize, u64)>>> = (1..=n)
        .map(|a| partition_multiplicities(coords[a] as u64))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = vec![0; n];
    loop {
        let mut m = BTreeMap::new();
        for a in 1..=n {
            for &(j, cnt) in &per_node[a - 1][chosen[a - 1]] {
                m.insert((a, j), cnt);
            }
        }
        out.push(Configuration { m });
        // advance the odometer
        let mut a = 0;
        loop {
            if a == n {
                return Ok(out);
            }
            chosen[a] += 1;
            if chosen[a] < per_node[a].len() {
                break;
            }
            chosen[a] = 0;
            a += 1;
        }
    }
}

/// Multiplicity encodings of all partitions of `total`.
fn partition_multiplicities(total: u64) -> Vec<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    let mut cur: Vec<(usize, u64)> = Vec::new();
    fn rec(rem: u64, max_part: usize, cur: &mut Vec<(usize, u64)>, out: &mut Vec<Vec<(usize, u64)>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for j in (1..=max_part.min(rem as usize)).rev() {
            let cap = rem / j as u64;
            for cnt in (1..=cap).rev() {
                cur.push((j, cnt));
                rec(rem - j as u64 * cnt, j - 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(total, total as usize, &mut cur, &mut out);
    out
}

/// Vacancy number `p_j^(a)` for a configuration: the first term is
/// `min(j, s)` on the node `r` carrying the rectangle and zero elsewhere.
/// Rejects non-integral values.
pub fn vacancy(
    t: &AffineType,
    r: usize,
    s: usize,
    config: &Configuration,
    a: usize,
    j: usize,
) -> Result<i64> {
    let tt = t.t_table();
    // sum over (b, k) of (alpha_a, alpha_b) min(t_b j, t_a k) m_k^(b),
    // accumulated in doubled units.
    let mut acc2: i64 = 0;
    for (&(b, k), &m) in &config.m {
        if m == 0 {
            continue;
        }
        let inner2 = t.alpha_inner_kac_twice(a, b);
        let min = (tt.t[b] * j as i64).min(tt.t[a] * k as i64);
        acc2 += inner2 * min * m as i64;
    }
    let den = 2 * tt.t_vee[a];
    if acc2 % den != 0 {
        return Err(Error::NonIntegral(format!(
            "vacancy p_{j}^({a}) for {t} r={r} s={s}"
        )));
    }
    let delta = if a == r { j.min(s) as i64 } else { 0 };
    Ok(delta - acc2 / den)
}

/// The signed multiplicity `N_s^(r)(lambda)`.
pub fn multiplicity_n(t: &AffineType, r: usize, s: usize, lambda: &Weight) -> Result<i64> {
    sum_over_configs(t, r, s, lambda, false)
}

/// The unsigned variant `M_s^(r)(lambda)`: a factor is zero whenever its
/// vacancy number is negative.
pub fn multiplicity_m(t: &AffineType, r: usize, s: usize, lambda: &Weight) -> Result<i64> {
    sum_over_configs(t, r, s, lambda, true)
}

fn sum_over_configs(
    t: &AffineType,
    r: usize,
    s: usize,
    lambda: &Weight,
    unsigned: bool,
) -> Result<i64> {
    let mut total: i128 = 0;
    'config: for config in enumerate_configs(t, r, s, lambda)? {
        let mut term: i128 = 1;
        for (&(a, j), &m) in &config.m {
            if m == 0 {
                continue;
            }
            let p = vacancy(t, r, s, &config, a, j)?;
            if unsigned && p < 0 {
                continue 'config;
            }
            term = term
                .checked_mul(signed_binomial(p, m))
                .expect("fermionic term overflow");
            if term == 0 {
                continue 'config;
            }
        }
        total = total.checked_add(term).expect("fermionic sum overflow");
    }
    Ok(i64::try_from(total).expect("multiplicity fits in i64"))
}

/// Dominant weights `lambda = s varpi_r - (nonnegative root combination)`,
/// the hull on which the multiplicities can be nonzero.
pub fn dominant_hull(t: &AffineType, r: usize, s: usize) -> Result<Vec<Weight>> {
    let n = t.rank();
    let top = t.fundamental_weight(r)?.scale(s as i64);
    let max2 = *top.twice().iter().max().unwrap_or(&0);
    // every coordinate keeps the parity of the top weight's coordinates
    let parity = top.twice()[0].rem_euclid(2);
    let mut out = Vec::new();
    let mut coords = vec![0i64; n];
    fn rec(
        t: &AffineType,
        top: &Weight,
        coords: &mut Vec<i64>,
        idx: usize,
        cap: i64,
        parity: i64,
        out: &mut Vec<Weight>,
    ) {
        let n = coords.len();
        if idx == n {
            let w = Weight::from_twice(coords.clone());
            if root_coordinates(t, &top.sub(&w)).is_some() {
                out.push(w);
            }
            return;
        }
        let last_d = idx + 1 == n && t.classical() == crate::cartan::Classical::D;
        let lo = if last_d { -cap } else { 0 };
        let mut v = lo;
        if v.rem_euclid(2) != parity {
            v += 1;
        }
        while v <= cap {
            coords[idx] = v;
            rec(t, top, coords, idx + 1, v, parity, out);
            v += 2;
        }
        coords[idx] = 0;
    }
    rec(t, &top, &mut coords, 0, max2, parity, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching;

    fn ty(s: &str) -> AffineType {
        s.parse().unwrap()
    }

    #[test]
    fn config_enumeration_examples() {
        let d4 = ty("D4~1");
        let w1 = d4.fundamental_weight(1).unwrap();
        let cfgs = enumerate_configs(&d4, 1, 1, &w1).unwrap();
        assert_eq!(cfgs.len(), 1);
        assert!(cfgs[0].m.is_empty());

        let w2 = d4.fundamental_weight(2).unwrap();
        assert!(enumerate_configs(&d4, 1, 1, &w2).unwrap().is_empty());

        let zero = Weight::zero(4);
        assert!(!enumerate_configs(&d4, 2, 2, &zero).unwrap().is_empty());
    }

    #[test]
    fn vacancy_on_empty_config() {
        let d4 = ty("D4~1");
        let top = d4.fundamental_weight(2).unwrap().scale(2);
        let cfg = &enumerate_configs(&d4, 2, 2, &top).unwrap()[0];
        assert!(cfg.m.is_empty());
        for j in 1..=4 {
            assert_eq!(vacancy(&d4, 2, 2, cfg, 2, j).unwrap(), j.min(2) as i64);
            assert_eq!(vacancy(&d4, 2, 2, cfg, 1, j).unwrap(), 0);
        }
    }

    #[test]
    fn multiplicity_examples() {
        let d4 = ty("D4~1");
        let top = d4.fundamental_weight(2).unwrap().scale(2);
        assert_eq!(multiplicity_n(&d4, 2, 2, &top).unwrap(), 1);
        assert_eq!(multiplicity_n(&d4, 2, 2, &Weight::zero(4)).unwrap(), 1);
        let w2 = d4.fundamental_weight(2).unwrap();
        assert_eq!(multiplicity_n(&d4, 1, 1, &w2).unwrap(), 0);
    }

    #[test]
    fn hull_contains_decomposition() {
        for tname in ["D4~1", "B3~1", "A5~2", "C3~1", "A4~2", "D4~2"] {
            let t = ty(tname);
            for r in 1..=t.rank().min(2) {
                if t.is_spin_node(r) {
                    continue;
                }
                for s in 1..=2 {
                    let hull = dominant_hull(&t, r, s).unwrap();
                    for w in branching::decompose(&t, r, s).unwrap() {
                        assert!(hull.contains(&w), "{tname} r={r} s={s} missing {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn n_equals_m_equals_branching_on_a_small_grid() {
        for tname in ["D4~1", "B3~1", "A5~2", "C2~1", "A4~2", "D3~2"] {
            let t = ty(tname);
            for r in 1..=2.min(t.rank()) {
                for s in 1..=2 {
                    let branch = branching::decompose(&t, r, s).unwrap();
                    for w in dominant_hull(&t, r, s).unwrap() {
                        let n = multiplicity_n(&t, r, s, &w).unwrap();
                        let m = multiplicity_m(&t, r, s, &w).unwrap();
                        assert_eq!(n, m, "{tname} r={r} s={s} lambda={w}");
                        let b = i64::from(branch.contains(&w));
                        assert_eq!(n, b, "{tname} r={r} s={s} lambda={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn classically_irreducible_nodes_have_delta_multiplicity() {
        // spin nodes: only s varpi_r survives, everything else cancels
        for (tname, r) in [("D4~1", 3), ("D4~1", 4), ("C3~1", 3), ("D4~2", 3)] {
            let t = ty(tname);
            for s in 1..=2 {
                let top = t.fundamental_weight(r).unwrap().scale(s as i64);
                for w in dominant_hull(&t, r, s).unwrap() {
                    let n = multiplicity_n(&t, r, s, &w).unwrap();
                    assert_eq!(n, i64::from(w == top), "{tname} r={r} s={s} lambda={w}");
                }
            }
        }
    }
}
