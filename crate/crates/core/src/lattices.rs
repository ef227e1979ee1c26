//! Exact subgroup arithmetic in Z^c: Hermite and Smith normal forms,
//! sums, membership, and quotient invariants.
//!
//! Sublattices are kept in a column-style Hermite normal form: generators are
//! the columns, pivot rows strictly increase left to right, pivots are
//! positive, and within each pivot row the entries of earlier columns are
//! reduced into [0, pivot). This canonical form makes lattice equality a
//! plain entry comparison and membership an exact back-substitution.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major, arbitrary precision.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(ambient: usize, cols: Vec<Vec<BigInt>>) -> IntMatrix {
        let mut m = IntMatrix::zero(ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient);
            for i in 0..ambient {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// col[dst] += q * col[src]
    fn addmul_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * &self[(i, src)];
            self[(i, dst)] += add;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// row[dst] += q * row[src]
    fn addmul_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * &self[(src, j)];
            self[(dst, j)] += add;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Finitely generated subgroup of Z^c in canonical column HNF.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sublattice {
    ambient: usize,
    basis: IntMatrix,
    pivot_rows: Vec<usize>,
}

/// cols[dst] -= q * cols[src], with dst != src.
fn reduce_column_by(cols: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = cols.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = cols.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

impl Sublattice {
    /// Canonical HNF of the column span of `gens`; zero columns are dropped.
    pub fn hnf(ambient: usize, gens: Vec<Vec<BigInt>>) -> Sublattice {
        for g in &gens {
            assert_eq!(g.len(), ambient, "generator length != ambient rank");
        }
        let mut cols = gens;
        let mut pivot_rows = Vec::new();
        let mut t = 0; // next pivot slot
        for r in 0..ambient {
            loop {
                // column with smallest nonzero |entry| at row r among cols[t..]
                let mut best: Option<usize> = None;
                for j in t..cols.len() {
                    if !cols[j][r].is_zero()
                        && best.is_none_or(|b| cols[j][r].abs() < cols[b][r].abs())
                    {
                        best = Some(j);
                    }
                }
                let Some(p) = best else { break };
                // reduce every other active column by the pivot column
                let mut done = true;
                for j in t..cols.len() {
                    if j == p || cols[j][r].is_zero() {
                        continue;
                    }
                    let q = cols[j][r].div_floor(&cols[p][r]);
                    reduce_column_by(&mut cols, j, p, &q);
                    if !cols[j][r].is_zero() {
                        done = false;
                    }
                }
                if done {
                    cols.swap(t, p);
                    if cols[t][r].is_negative() {
                        for v in cols[t].iter_mut() {
                            *v = -v.clone();
                        }
                    }
                    pivot_rows.push(r);
                    t += 1;
                    break;
                }
            }
        }
        cols.truncate(t);
        debug_assert!(cols.iter().enumerate().all(|(j, c)| {
            c[..pivot_rows[j]].iter().all(Zero::is_zero) && c[pivot_rows[j]].is_positive()
        }));
        // reduce entries of earlier columns within each pivot row
        for j in 0..t {
            let r = pivot_rows[j];
            for l in 0..j {
                let q = cols[l][r].div_floor(&cols[j][r]);
                reduce_column_by(&mut cols, l, j, &q);
            }
        }
        Sublattice {
            ambient,
            basis: IntMatrix::from_cols(ambient, cols),
            pivot_rows,
        }
    }

    pub fn zero(ambient: usize) -> Sublattice {
        Sublattice::hnf(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Sublattice {
        Sublattice::hnf(ambient, IntMatrix::identity(ambient).columns())
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_columns(&self) -> Vec<Vec<BigInt>> {
        self.basis.columns()
    }

    /// Sum (join) of two sublattices of the same ambient space.
    pub fn sum(&self, other: &Sublattice) -> Result<Sublattice> {
        if self.ambient != other.ambient {
            return Err(Error::RankMismatch(self.ambient, other.ambient));
        }
        let mut cols = self.basis.columns();
        cols.extend(other.basis.columns());
        Ok(Sublattice::hnf(self.ambient, cols))
    }

    /// Coordinates of `v` over the HNF basis, if `v` lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient, "vector length != ambient rank");
        let mut residual = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.rank()];
        for (j, &r) in self.pivot_rows.iter().enumerate() {
            if residual[r].is_zero() {
                continue;
            }
            let (q, rem) = residual[r].div_rem(&self.basis[(r, j)]);
            if !rem.is_zero() {
                return None;
            }
            for (i, res) in residual.iter_mut().enumerate() {
                *res -= &q * &self.basis[(i, j)];
            }
            coeffs[j] = q;
        }
        if residual.iter().all(Zero::is_zero) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Sublattice) -> bool {
        other.basis.columns().iter().all(|c| self.contains(c))
    }

    /// Invariant factors (and free rank) of the quotient big/small; `small`
    /// must be contained in `big`.
    pub fn quotient_invariants(big: &Sublattice, small: &Sublattice) -> Result<AbelianInvariants> {
        if big.ambient != small.ambient {
            return Err(Error::RankMismatch(big.ambient, small.ambient));
        }
        let mut coord_cols = Vec::new();
        for col in small.basis.columns() {
            match big.solve(&col) {
                Some(c) => coord_cols.push(c),
                None => {
                    return Err(Error::NotIncluded(format!(
                        "({})",
                        col.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    )))
                }
            }
        }
        let m = IntMatrix::from_cols(big.rank(), coord_cols);
        let snf = smith_normal_form(&m);
        let mut factors = Vec::new();
        let mut rank_small = 0;
        for d in snf.diagonal() {
            if !d.is_zero() {
                rank_small += 1;
                if !d.is_one() {
                    factors.push(d.clone());
                }
            }
        }
        Ok(AbelianInvariants {
            factors,
            free_rank: big.rank() - rank_small,
        })
    }

    /// Index [Z^c : L] for a full-rank lattice (product of HNF pivots).
    pub fn index_in_ambient(&self) -> Option<BigInt> {
        if self.rank() != self.ambient {
            return None;
        }
        let mut idx = BigInt::one();
        for (j, &r) in self.pivot_rows.iter().enumerate() {
            idx *= &self.basis[(r, j)];
        }
        Some(idx)
    }
}

/// Isomorphism type of a finitely generated abelian group: invariant factors
/// d_1 | d_2 | ... (all >= 2) plus a free rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianInvariants {
    pub factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn trivial() -> AbelianInvariants {
        AbelianInvariants {
            factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.free_rank == 0
    }

    /// The order of the group, if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.factors.iter().product())
    }

    /// Canonical invariant-factor form of an arbitrary multiset of cyclic
    /// factors Z/n (n >= 1 arbitrary) plus a free rank.
    pub fn from_cyclic_factors(orders: &[BigInt], free_rank: usize) -> AbelianInvariants {
        use std::collections::BTreeMap;
        // prime -> descending list of exponents
        let mut by_prime: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
        for n in orders {
            assert!(n.is_positive());
            let mut n = n.clone();
            let mut p = BigInt::from(2);
            while &p * &p <= n {
                let mut e = 0;
                while (&n % &p).is_zero() {
                    n /= &p;
                    e += 1;
                }
                if e > 0 {
                    by_prime.entry(p.clone()).or_default().push(e);
                }
                p += 1;
            }
            if n > BigInt::one() {
                by_prime.entry(n).or_default().push(1);
            }
        }
        let depth = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut descending = vec![BigInt::one(); depth];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (slot, e) in exps.into_iter().enumerate() {
                descending[slot] *= p.pow(e);
            }
        }
        descending.reverse();
        AbelianInvariants {
            factors: descending,
            free_rank,
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        for _ in 0..self.free_rank {
            parts.push("Z".to_string());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Smith normal form with recorded unimodular transforms: u * a * v = d.
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<&BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| &self.d[(i, i)])
            .collect()
    }

    /// Nontrivial invariant factors (diagonal entries > 1).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }
}

/// Smith normal form of an integer matrix. Pivoting picks the smallest
/// nonzero absolute value, ties broken in row-major order, so the
/// elimination sequence is deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let (r, c) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    // row op on d mirrors on u; the inverse op applies to u_inv columns
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            d.swap_rows($i, $j);
            u.swap_rows($i, $j);
            u_inv.swap_cols($i, $j);
        }};
    }
    macro_rules! row_addmul {
        ($dst:expr, $src:expr, $q:expr) => {{
            let q: BigInt = $q;
            d.addmul_row($dst, $src, &q);
            u.addmul_row($dst, $src, &q);
            u_inv.addmul_col($src, $dst, &(-&q));
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            d.swap_cols($i, $j);
            v.swap_cols($i, $j);
            v_inv.swap_rows($i, $j);
        }};
    }
    macro_rules! col_addmul {
        ($dst:expr, $src:expr, $q:expr) => {{
            let q: BigInt = $q;
            d.addmul_col($dst, $src, &q);
            v.addmul_col($dst, $src, &q);
            v_inv.addmul_row($src, $dst, &(-&q));
        }};
    }

    let n = r.min(c);
    for t in 0..n {
        'pivot: loop {
            // smallest nonzero |entry| in the trailing submatrix
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if !d[(i, j)].is_zero()
                        && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'pivot };
            row_swap!(t, pi);
            col_swap!(t, pj);
            // clear column t below and row t to the right
            let mut clean = true;
            for i in t + 1..r {
                if !d[(i, t)].is_zero() {
                    let q = d[(i, t)].div_floor(&d[(t, t)]);
                    row_addmul!(i, t, -q);
                    if !d[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !d[(t, j)].is_zero() {
                    let q = d[(t, j)].div_floor(&d[(t, t)]);
                    col_addmul!(j, t, -q);
                    if !d[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot;
            }
            // enforce divisibility of the trailing submatrix by the pivot
            for i in t + 1..r {
                for j in t + 1..c {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        row_addmul!(t, i, BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    let snf = Snf {
        d,
        u,
        u_inv,
        v,
        v_inv,
    };
    debug_assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d);
    debug_assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(r));
    debug_assert_eq!(snf.v.mul(&snf.v_inv), IntMatrix::identity(c));
    snf
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| b(x)).collect()
    }

    #[test]
    fn hnf_examples() {
        let l = Sublattice::hnf(2, vec![bv(&[4, 6]), bv(&[6, 4])]);
        assert!(l.contains(&bv(&[2, -2])));
        assert!(l.contains(&bv(&[4, 6])));
        assert!(l.contains(&bv(&[6, 4])));
        assert!(!l.contains(&bv(&[2, 2])));

        let d = Sublattice::hnf(2, vec![bv(&[2, 0]), bv(&[0, 3])]);
        assert_eq!(d.basis().col(0), bv(&[2, 0]));
        assert_eq!(d.basis().col(1), bv(&[0, 3]));

        let g = Sublattice::hnf(1, vec![bv(&[4]), bv(&[6])]);
        assert_eq!(g.basis().col(0), bv(&[2]));
    }

    #[test]
    fn hnf_canonical_idempotent() {
        let l = Sublattice::hnf(3, vec![bv(&[2, 4, 4]), bv(&[-6, 6, 12]), bv(&[10, 4, 16])]);
        let again = Sublattice::hnf(3, l.basis_columns());
        assert_eq!(l, again);
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal(), vec![&b(2), &b(4)]);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);

        let m2 = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let snf2 = smith_normal_form(&m2);
        assert_eq!(snf2.diagonal(), vec![&b(1), &b(6)]);

        let id = IntMatrix::identity(3);
        let snf3 = smith_normal_form(&id);
        assert_eq!(snf3.d, id);
    }

    #[test]
    fn lattice_sum_examples() {
        let a = Sublattice::hnf(2, vec![bv(&[2, 0])]);
        let bb = Sublattice::hnf(2, vec![bv(&[0, 3])]);
        let s = a.sum(&bb).unwrap();
        assert_eq!(s, Sublattice::hnf(2, vec![bv(&[2, 0]), bv(&[0, 3])]));
        assert_eq!(a.sum(&a).unwrap(), a);
        let full = Sublattice::full(2);
        assert_eq!(a.sum(&full).unwrap(), full);
    }

    #[test]
    fn contains_examples() {
        let l = Sublattice::hnf(1, vec![bv(&[2])]);
        assert!(l.contains(&bv(&[4])));
        assert!(!l.contains(&bv(&[3])));
    }

    #[test]
    fn sum_rejects_rank_mismatch() {
        let a = Sublattice::full(2);
        let b = Sublattice::full(3);
        assert!(matches!(a.sum(&b), Err(Error::RankMismatch(2, 3))));
    }

    #[test]
    fn quotient_examples() {
        let big = Sublattice::full(2);
        let small = Sublattice::hnf(2, vec![bv(&[2, 0]), bv(&[0, 3])]);
        let inv = Sublattice::quotient_invariants(&big, &small).unwrap();
        assert_eq!(inv.factors, vec![b(6)]);
        assert_eq!(inv.free_rank, 0);

        let same = Sublattice::quotient_invariants(&small, &small).unwrap();
        assert!(same.is_trivial());

        let zero = Sublattice::zero(1);
        let inv2 = Sublattice::quotient_invariants(&Sublattice::full(1), &zero).unwrap();
        assert_eq!(inv2.free_rank, 1);
        assert!(inv2.factors.is_empty());

        // inclusion violation reported
        let not_inside = Sublattice::hnf(2, vec![bv(&[1, 0])]);
        assert!(Sublattice::quotient_invariants(&small, &not_inside).is_err());
    }

    #[test]
    fn invariant_canonicalization() {
        let inv = AbelianInvariants::from_cyclic_factors(&[b(4), b(2), b(3)], 0);
        assert_eq!(inv.factors, vec![b(2), b(12)]);
        let inv2 = AbelianInvariants::from_cyclic_factors(&[b(1), b(1)], 2);
        assert_eq!(inv2.factors, Vec::<BigInt>::new());
        assert_eq!(inv2.free_rank, 2);
        assert_eq!(format!("{}", inv), "Z/2 + Z/12");
    }

    proptest! {
        #[test]
        fn hnf_canonicity(cols in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..5)) {
            let gens: Vec<Vec<BigInt>> = cols.iter().map(|c| bv(c)).collect();
            let l = Sublattice::hnf(3, gens.clone());
            // every generator is a member
            for g in &gens {
                prop_assert!(l.contains(g));
            }
            // recomputing from the canonical basis is the identity
            prop_assert_eq!(l.clone(), Sublattice::hnf(3, l.basis_columns()));
        }

        #[test]
        fn snf_transforms_reproduce_input(
            entries in prop::collection::vec(-20i64..=20, 12),
        ) {
            let m = IntMatrix::from_rows(
                entries.chunks(4).map(bv).collect());
            let snf = smith_normal_form(&m);
            prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
            prop_assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(3));
            prop_assert_eq!(snf.v.mul(&snf.v_inv), IntMatrix::identity(4));
            // divisibility chain
            let diag: Vec<BigInt> = snf.diagonal().into_iter().cloned().collect();
            for w in diag.windows(2) {
                if !w[1].is_zero() {
                    prop_assert!(!w[0].is_zero());
                    prop_assert!((&w[1] % &w[0]).is_zero());
                }
            }
        }

        #[test]
        fn contains_matches_bruteforce(
            a in 1i64..=7, bshift in 0i64..=6, c in 1i64..=7,
            vx in -10i64..=10, vy in -10i64..=10,
        ) {
            // random finite-index lattice in Z^2 via a triangular basis
            let l = Sublattice::hnf(2, vec![bv(&[a, bshift]), bv(&[0, c])]);
            let member = l.contains(&bv(&[vx, vy]));
            // brute force over coefficient box
            let mut found = false;
            for s in -15i64..=15 {
                for t in -150i64..=150 {
                    if s * a == vx && s * bshift + t * c == vy {
                        found = true;
                    }
                }
            }
            prop_assert_eq!(member, found);
        }

        #[test]
        fn quotient_order_equals_index(
            a in 1i64..=6, bshift in 0i64..=5, c in 1i64..=6,
        ) {
            let l = Sublattice::hnf(2, vec![bv(&[a, bshift]), bv(&[0, c])]);
            let inv = Sublattice::quotient_invariants(&Sublattice::full(2), &l).unwrap();
            prop_assert_eq!(inv.order().unwrap(), l.index_in_ambient().unwrap());
        }
    }
}
