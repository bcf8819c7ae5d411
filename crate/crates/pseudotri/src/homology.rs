//! Integer chain complexes and Smith normal form.
//!
//! Homology of every realized complex is computed over the integers via
//! Smith normal form with arbitrary-precision entries.  The reduction
//! returns the transformation matrices, so `U · M · V = D` can be checked
//! independently, together with unimodularity of `U` and `V` and the
//! divisibility chain of the diagonal.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::report::StructureError;

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<BigInt>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            a: vec![BigInt::zero(); rows * cols],
        }
    }
    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat {
            rows,
            cols,
            a: data.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(i, k)];
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = x * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }
    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.a.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[idx(i, k)].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(idx(k, j), idx(i, j));
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[idx(i, j)] * &m[idx(k, k)] - &m[idx(i, k)] * &m[idx(k, j)];
                    m[idx(i, j)] = num / &prev;
                }
                m[idx(i, k)] = BigInt::zero();
            }
            prev = m[idx(k, k)].clone();
        }
        sign * m[idx(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.a[i * self.cols + j]
    }
}
impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        let c = self.cols;
        &mut self.a[i * c + j]
    }
}

/// Smith normal form `U · M · V = D` with `D` diagonal, nonnegative, and
/// satisfying the divisibility chain.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: Mat,
    pub u: Mat,
    pub v: Mat,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    /// Diagonal entries > 1 (the torsion invariant factors).
    pub invariant_factors: Vec<BigInt>,
}

/// Computes the Smith normal form.  Pivot selection: the nonzero entry of
/// smallest absolute value in the remaining block, ties broken row-major.
pub fn smith_normal_form(m: &Mat) -> Snf {
    let mut d = m.clone();
    let mut u = Mat::identity(m.rows);
    let mut v = Mat::identity(m.cols);
    let n = m.rows.min(m.cols);
    let mut t = 0usize;
    while t < n {
        // Pivot search in block [t.., t..].
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..d.rows {
            for j in t..d.cols {
                if d[(i, j)].is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some(p) => d[(i, j)].abs() < d[p].abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);
        // Clear row and column t; repeat because remainders reappear.
        loop {
            let mut dirty = false;
            for i in t + 1..d.rows {
                if !d[(i, t)].is_zero() {
                    let q = div_round(&d[(i, t)], &d[(t, t)]);
                    row_op(&mut d, &mut u, i, t, &q);
                    if !d[(i, t)].is_zero() {
                        swap_rows(&mut d, &mut u, t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d[(t, j)].is_zero() {
                    let q = div_round(&d[(t, j)], &d[(t, t)]);
                    col_op(&mut d, &mut v, j, t, &q);
                    if !d[(t, j)].is_zero() {
                        swap_cols(&mut d, &mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, &mut u, t);
        }
        t += 1;
    }
    // Enforce the divisibility chain d[i] | d[i+1].
    let rank = (0..n).take_while(|&i| !d[(i, i)].is_zero()).count();
    let mut i = 0;
    while i + 1 < rank {
        if (&d[(i + 1, i + 1)] % &d[(i, i)]).is_zero() {
            i += 1;
            continue;
        }
        // Fold entry i+1 into column i, then re-reduce the 2×2 block by
        // clearing with the usual operations.
        col_add(&mut d, &mut v, i, i + 1, &BigInt::one());
        loop {
            let mut dirty = false;
            if !d[(i + 1, i)].is_zero() {
                let q = div_round(&d[(i + 1, i)], &d[(i, i)]);
                row_op(&mut d, &mut u, i + 1, i, &q);
                if !d[(i + 1, i)].is_zero() {
                    swap_rows(&mut d, &mut u, i, i + 1);
                    dirty = true;
                }
            }
            if !d[(i, i + 1)].is_zero() {
                let q = div_round(&d[(i, i + 1)], &d[(i, i)]);
                col_op(&mut d, &mut v, i + 1, i, &q);
                if !d[(i, i + 1)].is_zero() {
                    swap_cols(&mut d, &mut v, i, i + 1);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        if d[(i, i)].is_negative() {
            negate_row(&mut d, &mut u, i);
        }
        if d[(i + 1, i + 1)].is_negative() {
            negate_row(&mut d, &mut u, i + 1);
        }
        // The new d[i] divides the old pair's gcd; restart the chain check
        // from the previous position in case earlier divisibility broke.
        i = i.saturating_sub(1);
    }
    let invariant_factors = (0..rank)
        .map(|i| d[(i, i)].clone())
        .filter(|x| x > &BigInt::one())
        .collect();
    Snf {
        d,
        u,
        v,
        rank,
        invariant_factors,
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Round-to-nearest quotient keeps entries small.
    let two = BigInt::from(2);
    let (q, r) = num_integer::div_rem(a.clone(), b.clone());
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn swap_rows(d: &mut Mat, u: &mut Mat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols {
        let tmp = d[(a, j)].clone();
        d[(a, j)] = d[(b, j)].clone();
        d[(b, j)] = tmp;
    }
    for j in 0..u.cols {
        let tmp = u[(a, j)].clone();
        u[(a, j)] = u[(b, j)].clone();
        u[(b, j)] = tmp;
    }
}

fn swap_cols(d: &mut Mat, v: &mut Mat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows {
        let tmp = d[(i, a)].clone();
        d[(i, a)] = d[(i, b)].clone();
        d[(i, b)] = tmp;
    }
    for i in 0..v.rows {
        let tmp = v[(i, a)].clone();
        v[(i, a)] = v[(i, b)].clone();
        v[(i, b)] = tmp;
    }
}

/// row i -= q * row t (in both D and U).
fn row_op(d: &mut Mat, u: &mut Mat, i: usize, t: usize, q: &BigInt) {
    for j in 0..d.cols {
        let x = q * &d[(t, j)];
        d[(i, j)] -= x;
    }
    for j in 0..u.cols {
        let x = q * &u[(t, j)];
        u[(i, j)] -= x;
    }
}

/// col j -= q * col t (in both D and V).
fn col_op(d: &mut Mat, v: &mut Mat, j: usize, t: usize, q: &BigInt) {
    for i in 0..d.rows {
        let x = q * &d[(i, t)];
        d[(i, j)] -= x;
    }
    for i in 0..v.rows {
        let x = q * &v[(i, t)];
        v[(i, j)] -= x;
    }
}

/// col j += q * col s (in both D and V).
fn col_add(d: &mut Mat, v: &mut Mat, j: usize, s: usize, q: &BigInt) {
    for i in 0..d.rows {
        let x = q * &d[(i, s)];
        d[(i, j)] += x;
    }
    for i in 0..v.rows {
        let x = q * &v[(i, s)];
        v[(i, j)] += x;
    }
}

fn negate_row(d: &mut Mat, u: &mut Mat, i: usize) {
    for j in 0..d.cols {
        let x = -d[(i, j)].clone();
        d[(i, j)] = x;
    }
    for j in 0..u.cols {
        let x = -u[(i, j)].clone();
        u[(i, j)] = x;
    }
}

/// Independently checks an SNF certificate: `U·M·V = D`, `U`, `V`
/// unimodular, `D` diagonal, nonnegative, with divisibility chain.
pub fn verify_snf(m: &Mat, s: &Snf) -> Result<(), String> {
    let umv = s.u.mul(m).mul(&s.v);
    if umv != s.d {
        return Err("U·M·V differs from D".into());
    }
    if s.u.det().abs() != BigInt::one() {
        return Err("U is not unimodular".into());
    }
    if s.v.det().abs() != BigInt::one() {
        return Err("V is not unimodular".into());
    }
    for i in 0..s.d.rows {
        for j in 0..s.d.cols {
            if i != j && !s.d[(i, j)].is_zero() {
                return Err("D is not diagonal".into());
            }
        }
    }
    let n = s.d.rows.min(s.d.cols);
    for i in 0..n {
        if s.d[(i, i)].is_negative() {
            return Err("negative diagonal entry".into());
        }
        if i + 1 < n
            && !s.d[(i, i)].is_zero()
            && !s.d[(i + 1, i + 1)].is_zero()
            && !(&s.d[(i + 1, i + 1)] % &s.d[(i, i)]).is_zero()
        {
            return Err("divisibility chain broken".into());
        }
        if s.d[(i, i)].is_zero() && i < s.rank {
            return Err("rank overcounts zero entries".into());
        }
    }
    Ok(())
}

/// Whether the integer vector `z` lies in the integer column span of `m`.
/// With U·M·V = D in Smith normal form, M·x = z is solvable over ℤ iff
/// every entry of U·z within the rank is divisible by the corresponding
/// diagonal entry and every entry beyond the rank is zero.
pub fn in_image(m: &Mat, z: &[BigInt]) -> Result<bool, StructureError> {
    if z.len() != m.rows {
        return Err(StructureError::DimensionOutOfRange(format!(
            "vector of length {} against a matrix with {} rows",
            z.len(),
            m.rows
        )));
    }
    let s = smith_normal_form(m);
    let mut col = Mat::zero(m.rows, 1);
    for (i, x) in z.iter().enumerate() {
        col[(i, 0)] = x.clone();
    }
    let uz = s.u.mul(&col);
    for i in 0..m.rows {
        let e = &uz[(i, 0)];
        if i < s.rank {
            if !(e % &s.d[(i, i)]).is_zero() {
                return Ok(false);
            }
        } else if !e.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finitely generated abelian group: free rank plus invariant factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> AbelianGroup {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
    pub fn is_free_of_rank(&self, r: usize) -> bool {
        self.rank == r && self.torsion.is_empty()
    }
    pub fn is_cyclic(&self) -> bool {
        self.rank + self.torsion.len() <= 1
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A chain complex of free abelian groups: `maps[k]` is ∂_k : C_k → C_{k-1}
/// (a `dims[k-1] × dims[k]` matrix); `maps[0]` is empty.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl ChainComplex {
    /// Checks shapes and ∂∘∂ = 0.
    pub fn check(&self) -> Result<(), StructureError> {
        if self.maps.len() != self.dims.len() {
            return Err(StructureError::MalformedMap(
                "chain complex has mismatched lengths".into(),
            ));
        }
        for k in 1..self.dims.len() {
            let m = &self.maps[k];
            if m.rows != self.dims[k - 1] || m.cols != self.dims[k] {
                return Err(StructureError::MalformedMap(format!(
                    "boundary map {} has shape {}×{}, expected {}×{}",
                    k,
                    m.rows,
                    m.cols,
                    self.dims[k - 1],
                    self.dims[k]
                )));
            }
            if k >= 2 {
                let comp = self.maps[k - 1].mul(m);
                if comp.a.iter().any(|x| !x.is_zero()) {
                    return Err(StructureError::MalformedMap(format!(
                        "∂_{}∘∂_{} is nonzero",
                        k - 1,
                        k
                    )));
                }
            }
        }
        Ok(())
    }

    /// Homology in degree `k`.  Boundary matrices of cell complexes are
    /// sparse with almost all entries ±1, so unit pivots are eliminated
    /// sparsely first and only the small remainder goes through the dense
    /// Smith normal form.
    pub fn homology(&self, k: usize) -> Result<AbelianGroup, StructureError> {
        if k >= self.dims.len() {
            return Err(StructureError::DimensionOutOfRange(format!(
                "degree {} of a complex with top degree {}",
                k,
                self.dims.len().saturating_sub(1)
            )));
        }
        let (rank_in, torsion) = if k + 1 < self.maps.len() {
            rank_and_torsion(&self.maps[k + 1])
        } else {
            (0, Vec::new())
        };
        let rank_out = if k >= 1 {
            rank_and_torsion(&self.maps[k]).0
        } else {
            0
        };
        let rank = self.dims[k] - rank_out - rank_in;
        Ok(AbelianGroup { rank, torsion })
    }

    /// Homology in all degrees.
    pub fn all_homology(&self) -> Result<Vec<AbelianGroup>, StructureError> {
        (0..self.dims.len()).map(|k| self.homology(k)).collect()
    }
}

/// Rank and invariant factors of an integer matrix, eliminating ±1 pivots
/// on a sparse representation before running the dense Smith normal form on
/// what remains.  Unit pivots contribute rank but no torsion.
pub fn rank_and_torsion(m: &Mat) -> (usize, Vec<BigInt>) {
    let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); m.rows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    let mut worklist: Vec<(usize, usize)> = Vec::new();
    for i in 0..m.rows {
        for j in 0..m.cols {
            let x = &m[(i, j)];
            if !x.is_zero() {
                rows[i].insert(j, x.clone());
                col_rows[j].insert(i);
                if x.magnitude().is_one() {
                    worklist.push((i, j));
                }
            }
        }
    }
    let mut dead_rows: BTreeSet<usize> = BTreeSet::new();
    let mut dead_cols: BTreeSet<usize> = BTreeSet::new();
    let mut eliminated = 0usize;
    while let Some((i, j)) = worklist.pop() {
        if dead_rows.contains(&i) || dead_cols.contains(&j) {
            continue;
        }
        let Some(p) = rows[i].get(&j).cloned() else { continue };
        if !p.magnitude().is_one() {
            continue;
        }
        let pivot_row = rows[i].clone();
        let users: Vec<usize> = col_rows[j].iter().copied().filter(|&r| r != i).collect();
        for r in users {
            let coef = &rows[r][&j] * &p; // p = ±1, so coef/p == coef·p
            for (&c, v) in &pivot_row {
                let entry = rows[r].entry(c).or_default();
                *entry -= &coef * v;
                if entry.is_zero() {
                    rows[r].remove(&c);
                    col_rows[c].remove(&r);
                } else {
                    col_rows[c].insert(r);
                    if entry.magnitude().is_one() && !dead_cols.contains(&c) {
                        worklist.push((r, c));
                    }
                }
            }
        }
        for (&c, _) in &pivot_row {
            col_rows[c].remove(&i);
        }
        rows[i].clear();
        dead_rows.insert(i);
        dead_cols.insert(j);
        eliminated += 1;
    }
    let live_rows: Vec<usize> = (0..m.rows)
        .filter(|i| !dead_rows.contains(i) && !rows[*i].is_empty())
        .collect();
    let mut live_cols: BTreeSet<usize> = BTreeSet::new();
    for &i in &live_rows {
        live_cols.extend(rows[i].keys().copied());
    }
    let live_cols: Vec<usize> = live_cols.into_iter().collect();
    let mut core = Mat::zero(live_rows.len(), live_cols.len());
    for (a, &i) in live_rows.iter().enumerate() {
        for (b, &j) in live_cols.iter().enumerate() {
            if let Some(v) = rows[i].get(&j) {
                core[(a, b)] = v.clone();
            }
        }
    }
    let s = smith_normal_form(&core);
    (eliminated + s.rank, s.invariant_factors)
}
