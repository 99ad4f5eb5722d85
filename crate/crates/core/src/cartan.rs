//! Static data for the six nonexceptional affine families (minus `A_n^(1)`):
//! index sets, simple roots and fundamental weights in epsilon coordinates,
//! pairings, nu-shapes, q-exponents and the t-tables used by the vacancy
//! numbers.
//!
//! Two inner-product normalizations coexist.  Weight-level operations
//! (`pairing`, the norm-criterion thresholds) use the renormalization
//! `(eps_i, eps_j) = delta_ij`.  The vacancy numbers of the fermionic formula
//! use the standard affine normalization instead, exposed here through
//! [`AffineType::kappa_twice`] and [`AffineType::alpha_inner_kac_twice`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The six supported affine families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `D_n^(1)`, classical subalgebra `D_n`.
    D1,
    /// `B_n^(1)`, classical subalgebra `B_n`.
    B1,
    /// `A_{2n-1}^(2)`, classical subalgebra `C_n`.
    A2Odd,
    /// `C_n^(1)`, classical subalgebra `C_n`.
    C1,
    /// `A_{2n}^(2)`, classical subalgebra `C_n`.
    A2Even,
    /// `D_{n+1}^(2)`, classical subalgebra `B_n`.
    D2,
}

/// Classical family of the rank-n subalgebra obtained by removing node 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classical {
    B,
    C,
    D,
}

/// Shape removed by the branching rule: one of the three pieces listed next
/// to each Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nu {
    VerticalDomino,
    HorizontalDomino,
    SingleBox,
}

/// An affine type: family plus classical rank `n` (index set `{0, ..., n}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineType {
    pub family: Family,
    pub n: usize,
}

impl AffineType {
    /// Validates the rank bounds of the family's Dynkin diagram.
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::D1 => 4,
            Family::B1 => 3,
            _ => 2,
        };
        if n < min {
            return Err(Error::InvalidRank {
                family: family.name(),
                rank: n,
            });
        }
        Ok(AffineType { family, n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn classical(&self) -> Classical {
        match self.family {
            Family::D1 => Classical::D,
            Family::B1 | Family::D2 => Classical::B,
            Family::A2Odd | Family::C1 | Family::A2Even => Classical::C,
        }
    }

    pub fn nu(&self) -> Nu {
        match self.family {
            Family::D1 | Family::B1 | Family::A2Odd => Nu::VerticalDomino,
            Family::C1 => Nu::HorizontalDomino,
            Family::A2Even | Family::D2 => Nu::SingleBox,
        }
    }

    pub fn is_twisted(&self) -> bool {
        matches!(self.family, Family::A2Odd | Family::A2Even | Family::D2)
    }

    /// Nodes `r` for which the KR module is classically irreducible
    /// (filled nodes, with node `n` of `B_n^(1)` unfilled).
    pub fn spin_nodes(&self) -> Vec<usize> {
        match self.family {
            Family::D1 => vec![self.n - 1, self.n],
            Family::C1 | Family::D2 => vec![self.n],
            Family::B1 | Family::A2Odd | Family::A2Even => vec![],
        }
    }

    pub fn is_spin_node(&self, r: usize) -> bool {
        self.spin_nodes().contains(&r)
    }

    /// `2 kappa` where `(eps_i, eps_j) = kappa delta_ij` in the normalization
    /// `(delta, lambda) = <c, lambda>`.
    pub fn kappa_twice(&self) -> i64 {
        match self.family {
            Family::C1 => 1,
            Family::D2 => 4,
            _ => 2,
        }
    }

    /// Fundamental weight of the classical subalgebra, `1 <= i <= n`.
    /// `i = 0` is rejected (the zero weight by convention).
    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        let n = self.n;
        if i == 0 || i > n {
            return Err(Error::InvalidNode { node: i, rank: n });
        }
        let mut tw = vec![0i64; n];
        match self.classical() {
            Classical::C => {
                for t in tw.iter_mut().take(i) {
                    *t = 2;
                }
            }
            Classical::B => {
                if i == n {
                    for t in tw.iter_mut() {
                        *t = 1;
                    }
                } else {
                    for t in tw.iter_mut().take(i) {
                        *t = 2;
                    }
                }
            }
            Classical::D => {
                if i == n {
                    for t in tw.iter_mut() {
                        *t = 1;
                    }
                } else if i == n - 1 {
                    for t in tw.iter_mut() {
                        *t = 1;
                    }
                    tw[n - 1] = -1;
                } else {
                    for t in tw.iter_mut().take(i) {
                        *t = 2;
                    }
                }
            }
        }
        Ok(Weight::from_twice(tw))
    }

    /// Simple root in epsilon coordinates; for `i = 0` the classical
    /// projection of `alpha_0` determined by the nu-shape.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        let n = self.n;
        if i > n {
            return Err(Error::InvalidNode { node: i, rank: n });
        }
        let mut tw = vec![0i64; n];
        if i == 0 {
            match self.nu() {
                Nu::VerticalDomino => {
                    tw[0] = -2;
                    tw[1] = -2;
                }
                Nu::HorizontalDomino => tw[0] = -4,
                Nu::SingleBox => tw[0] = -2,
            }
        } else if i < n {
            tw[i - 1] = 2;
            tw[i] = -2;
        } else {
            match self.classical() {
                Classical::B => tw[n - 1] = 2,
                Classical::C => tw[n - 1] = 4,
                Classical::D => {
                    tw[n - 2] = 2;
                    tw[n - 1] = 2;
                }
            }
        }
        Ok(Weight::from_twice(tw))
    }

    /// `<h_j, w> = 2 (alpha_j, w) / (alpha_j, alpha_j)` with
    /// `(eps_i, eps_j) = delta_ij`; `1 <= j <= n`.  Rejects weights for which
    /// the value is not an integer.
    pub fn pairing(&self, j: usize, w: &Weight) -> Result<i64> {
        let n = self.n;
        if j == 0 || j > n {
            return Err(Error::InvalidNode { node: j, rank: n });
        }
        if w.len() != n {
            return Err(Error::InvalidArgument(format!(
                "weight length {} does not match rank {}",
                w.len(),
                n
            )));
        }
        let alpha = self.simple_root(j)?;
        // (alpha_j, w) in quarter units, (alpha_j, alpha_j) in quarter units.
        let num = 2 * inner_quarters(&alpha, w);
        let den = inner_quarters(&alpha, &alpha);
        if num % den != 0 {
            return Err(Error::NonIntegral(format!("pairing(h_{j}, {w})")));
        }
        Ok(num / den)
    }

    /// `(alpha_a, alpha_b)` for `a, b` in `I_0`, doubled, in the standard
    /// affine normalization `(delta, lambda) = <c, lambda>`.
    pub fn alpha_inner_kac_twice(&self, a: usize, b: usize) -> i64 {
        let ra = self.simple_root(a).expect("valid node");
        let rb = self.simple_root(b).expect("valid node");
        // quarters * kappa_twice / 2 = kac inner * 4 / 2 ... work it out:
        // inner_quarters = 4 * (renormalized inner); kac = kappa * renorm.
        // kac_twice = 2 * kappa * renorm = kappa_twice * renorm
        //           = kappa_twice * inner_quarters / 4.
        let q = inner_quarters(&ra, &rb) * self.kappa_twice();
        debug_assert_eq!(q % 4, 0);
        q / 4
    }

    /// Entry `<h_i, alpha_j>` of the affine Cartan matrix, computed from the
    /// classical projections (valid because `delta` pairs to zero).
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        let ai = self.simple_root(i).expect("valid node");
        let aj = self.simple_root(j).expect("valid node");
        let num = 2 * inner_quarters(&ai, &aj);
        let den = inner_quarters(&ai, &ai);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Exponents of `q_i` (for `i` in `I`) and of the family's `q_s`, both in
    /// units of `q^{1/2}`: an entry `e` means `q^{e/2}`.
    pub fn q_exponents(&self) -> QExponents {
        let n = self.n;
        let mut qi = vec![2i64; n + 1];
        // q_i = q^{(alpha_i, alpha_i)/2} under the renormalized product.
        for (i, e) in qi.iter_mut().enumerate() {
            let a = self.simple_root(i).expect("valid node");
            *e = inner_quarters(&a, &a) / 4; // (alpha,alpha)/2 in half units
        }
        let qs = *qi.iter().min().expect("nonempty");
        QExponents { qi, qs }
    }

    /// `t_i` and `t_i^{dual}` for `i` in `I_0` (index 0 of the vectors is
    /// unused and set to 0).
    pub fn t_table(&self) -> TTable {
        let n = self.n;
        let mut t = vec![1i64; n + 1];
        let mut t_vee = vec![1i64; n + 1];
        t[0] = 0;
        t_vee[0] = 0;
        if !self.is_twisted() {
            for i in 1..=n {
                // 2/(alpha_i, alpha_i) in the Kac normalization.
                let aa = self.alpha_inner_kac_twice(i, i); // = 2 (a,a) ... doubled
                debug_assert_eq!(4 % aa, 0);
                t[i] = 4 / aa;
            }
        }
        let dual = match self.family {
            Family::D1 => Family::D1,
            Family::B1 => Family::A2Odd,
            Family::A2Odd => Family::B1,
            Family::C1 => Family::D2,
            Family::D2 => Family::C1,
            Family::A2Even => Family::A2Even,
        };
        let dual_t = AffineType::new(dual, n).expect("dual rank valid");
        if !dual_t.is_twisted() {
            for i in 1..=n {
                let aa = dual_t.alpha_inner_kac_twice(i, i);
                t_vee[i] = 4 / aa;
            }
        }
        TTable { t, t_vee }
    }

    /// Dual Kac labels `a_i^{dual}` for the three families with a node-0/1
    /// diagram symmetry; used for the level-zero check.
    pub fn dual_labels(&self) -> Result<Vec<i64>> {
        let n = self.n;
        let mut a = vec![2i64; n + 1];
        a[0] = 1;
        a[1] = 1;
        match self.family {
            Family::D1 => {
                a[n - 1] = 1;
                a[n] = 1;
            }
            Family::B1 => a[n] = 1,
            Family::A2Odd => a[n] = 2,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "dual labels only tabulated for the node-0/1 symmetric families, not {self}"
                )))
            }
        }
        Ok(a)
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.family {
            Family::D1 => write!(f, "D{n}~1"),
            Family::B1 => write!(f, "B{n}~1"),
            Family::A2Odd => write!(f, "A{}~2", 2 * n - 1),
            Family::C1 => write!(f, "C{n}~1"),
            Family::A2Even => write!(f, "A{}~2", 2 * n),
            Family::D2 => write!(f, "D{}~2", n + 1),
        }
    }
}

impl FromStr for AffineType {
    type Err = Error;

    /// Parses `"D4~1"`, `"B3~1"`, `"A5~2"`, `"C3~1"`, `"A4~2"`, `"D5~2"`:
    /// family letter, affine-label subscript, twist.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseType(s.to_string());
        let (head, twist) = s.split_once('~').ok_or_else(bad)?;
        let twist: usize = twist.trim().parse().map_err(|_| bad())?;
        let head = head.trim();
        let letter = head.chars().next().ok_or_else(bad)?;
        let sub: usize = head[letter.len_utf8()..].parse().map_err(|_| bad())?;
        let (family, n) = match (letter, twist) {
            ('D' | 'd', 1) => (Family::D1, sub),
            ('B' | 'b', 1) => (Family::B1, sub),
            ('C' | 'c', 1) => (Family::C1, sub),
            ('A' | 'a', 2) if sub % 2 == 1 => (Family::A2Odd, (sub + 1) / 2),
            ('A' | 'a', 2) => (Family::A2Even, sub / 2),
            ('D' | 'd', 2) => {
                if sub < 1 {
                    return Err(bad());
                }
                (Family::D2, sub - 1)
            }
            _ => return Err(bad()),
        };
        AffineType::new(family, n)
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::D1 => "D_n^(1)",
            Family::B1 => "B_n^(1)",
            Family::A2Odd => "A_{2n-1}^(2)",
            Family::C1 => "C_n^(1)",
            Family::A2Even => "A_{2n}^(2)",
            Family::D2 => "D_{n+1}^(2)",
        }
    }

    pub fn all() -> [Family; 6] {
        [
            Family::D1,
            Family::B1,
            Family::A2Odd,
            Family::C1,
            Family::A2Even,
            Family::D2,
        ]
    }
}

/// A weight in epsilon coordinates with denominators limited to 2; entries
/// are stored doubled so the representation stays exact and hashable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    twice: Vec<i64>,
}

impl Weight {
    pub fn from_twice(twice: Vec<i64>) -> Self {
        Weight { twice }
    }

    /// Integer epsilon coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            twice: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Weight { twice: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.twice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twice.is_empty()
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&c| c == 0)
    }

    pub fn is_integral(&self) -> bool {
        self.twice.iter().all(|&c| c % 2 == 0)
    }

    /// True when the partition form exists: integral and weakly decreasing
    /// down to a nonnegative last entry.
    pub fn is_dominant_non_spin(&self) -> bool {
        self.is_integral()
            && self.twice.windows(2).all(|w| w[0] >= w[1])
            && self.twice.last().map_or(true, |&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len());
        Weight {
            twice: self
                .twice
                .iter()
                .zip(&other.twice)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len());
        Weight {
            twice: self
                .twice
                .iter()
                .zip(&other.twice)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            twice: self.twice.iter().map(|c| c * k).collect(),
        }
    }

    /// Renders each coordinate as `k` or `k/2`.
    pub fn coord_strings(&self) -> Vec<String> {
        self.twice
            .iter()
            .map(|&c| {
                if c % 2 == 0 {
                    format!("{}", c / 2)
                } else {
                    format!("{c}/2")
                }
            })
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coord_strings().join(","))
    }
}

/// Inner product of two weights under `(eps_i, eps_j) = delta_ij`, returned
/// in quarter units (exact for doubled coordinates).
pub fn inner_quarters(a: &Weight, b: &Weight) -> i64 {
    assert_eq!(a.len(), b.len());
    a.twice.iter().zip(&b.twice).map(|(x, y)| x * y).sum()
}

/// A partition: weakly decreasing rows, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut rows: Vec<usize>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]),
            "rows must be weakly decreasing: {rows:?}"
        );
        Partition(rows)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `r x s` rectangle as a partition (r rows of length s).
    pub fn rectangle(r: usize, s: usize) -> Self {
        if s == 0 {
            Partition::empty()
        } else {
            Partition(vec![s; r])
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Height of column `j` (1-indexed).
    pub fn col_height(&self, j: usize) -> usize {
        self.0.iter().filter(|&&row| row >= j).count()
    }

    /// Number of columns of height exactly `i >= 1`.
    pub fn cols_of_height(&self, i: usize) -> usize {
        if i == 0 || i > self.0.len() {
            return 0;
        }
        self.0[i - 1] - self.0.get(i).copied().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.num_rows()).all(|i| self.row(i) >= other.row(i))
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.width();
        Partition((1..=w).map(|j| self.col_height(j)).collect())
    }

    /// The dominant weight whose partition form this is, padded to rank `n`.
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        if self.num_rows() > n {
            return Err(Error::InvalidArgument(format!(
                "partition {self} has more than {n} rows"
            )));
        }
        let mut coords = vec![0i64; n];
        for (i, &row) in self.0.iter().enumerate() {
            coords[i] = row as i64;
        }
        Ok(Weight::from_ints(&coords))
    }

    /// Inverse of [`Partition::to_weight`]; rejects spin (half-integral) or
    /// non-dominant weights.
    pub fn from_weight(w: &Weight) -> Result<Partition> {
        if !w.is_dominant_non_spin() {
            return Err(Error::InvalidArgument(format!(
                "weight {w} has no partition form"
            )));
        }
        Ok(Partition::new(
            w.twice().iter().map(|&c| (c / 2) as usize).collect(),
        ))
    }

    /// All partitions contained in an `rows x width` box, in a fixed order.
    pub fn in_box(rows: usize, width: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        fn rec(rows: usize, width: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()));
            if cur.len() == rows {
                return;
            }
            let cap = cur.last().copied().unwrap_or(width);
            for part in (1..=cap).rev() {
                cur.push(part);
                rec(rows, width, cur, out);
                cur.pop();
            }
        }
        rec(rows, width, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Exponent tables in `q^{1/2}` units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExponents {
    /// Exponent of `q_i` for each `i` in `{0, ..., n}`.
    pub qi: Vec<i64>,
    /// Exponent of the family's `q_s`.
    pub qs: i64,
}

/// `t_i` and dual `t_i` tables, 1-indexed over `I_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TTable {
    pub t: Vec<i64>,
    pub t_vee: Vec<i64>,
}

/// Expresses `w` as nonnegative integer combination of the simple roots of
/// the classical subalgebra; `None` if the coordinates are negative or
/// fractional.
pub fn root_coordinates(t: &AffineType, w: &Weight) -> Option<Vec<i64>> {
    let n = t.n;
    assert_eq!(w.len(), n);
    let tw = w.twice();
    // Partial sums of the doubled epsilon coordinates.
    let mut prefix = vec![0i64; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] + tw[i];
    }
    let mut k2 = vec![0i64; n + 1]; // doubled coefficients, 1-indexed
    match t.classical() {
        Classical::B => {
            for j in 1..=n {
                k2[j] = prefix[j];
            }
        }
        Classical::C => {
            for j in 1..n {
                k2[j] = prefix[j];
            }
            if prefix[n] % 2 != 0 {
                return None;
            }
            k2[n] = prefix[n] / 2;
        }
        Classical::D => {
            for j in 1..=n - 2 {
                k2[j] = prefix[j];
            }
            if prefix[n] % 2 != 0 {
                return None;
            }
            k2[n] = prefix[n] / 2;
            k2[n - 1] = k2[n] - tw[n - 1];
        }
    }
    let mut out = vec![0i64; n + 1];
    for j in 1..=n {
        if k2[j] < 0 || k2[j] % 2 != 0 {
            return None;
        }
        out[j] = k2[j] / 2;
    }
    Some(out)
}
