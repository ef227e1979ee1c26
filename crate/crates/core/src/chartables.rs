//! Exact character tables for the supported group families.
//!
//! Tables are closed forms per family plus a tensor construction for direct
//! products; correctness is checked by orthogonality rather than trusted.
//! All values are stored at the common conductor exponent(G). Row order is
//! deterministic: ascending degree, ties broken by descending lexicographic
//! comparison of the value coordinate vectors under the fixed class order —
//! this puts the trivial character first and stabilizes generator names.

use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclo::{lex_cmp, CycNum};
use crate::error::{Error, Result};
use crate::groups::{product_group, Family, Group};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Complex,
    Rational,
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldTag::Complex => write!(f, "C"),
            FieldTag::Rational => write!(f, "Q"),
        }
    }
}

/// A class function: one exact value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<CycNum>,
}

impl ClassFunction {
    pub fn value(&self, class: usize) -> &CycNum {
        &self.values[class]
    }
}

fn values_cmp(a: &ClassFunction, b: &ClassFunction) -> Ordering {
    for (x, y) in a.values.iter().zip(&b.values) {
        match lex_cmp(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Exact character table of a finite group over C or (for abelian groups) Q.
#[derive(Debug)]
pub struct CharacterTable {
    pub group: Group,
    pub field: FieldTag,
    /// Common conductor of all stored values: the exponent of the group.
    pub conductor: u64,
    pub rows: Vec<ClassFunction>,
    pub degrees: Vec<u64>,
    /// Inner products <chi_i, chi_i> (1 for complex irreducibles).
    pub norms: Vec<BigRational>,
    trivial_row: usize,
    structure: OnceLock<Vec<Vec<Vec<BigInt>>>>,
}

pub type Table = Arc<CharacterTable>;

impl CharacterTable {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn class_count(&self) -> usize {
        self.group.class_count()
    }

    pub fn trivial_row(&self) -> usize {
        self.trivial_row
    }

    /// Two values are interoperable when they were built over the same group
    /// construction and field.
    pub fn compatible(&self, other: &CharacterTable) -> bool {
        self.field == other.field
            && self.group.label() == other.group.label()
            && self.rows.len() == other.rows.len()
    }

    /// Hermitian inner product (1/|G|) sum_g f(g) conj(h(g)). The operands
    /// may carry different conductors (values restricted along a
    /// homomorphism do); they are unified per term.
    pub fn inner_product(&self, f: &ClassFunction, h: &ClassFunction) -> CycNum {
        let order = BigRational::from(BigInt::from(self.group.order() as i64));
        let mut acc = CycNum::zero(1);
        for (c, class) in self.group.conjugacy().classes.iter().enumerate() {
            let size = BigRational::from(BigInt::from(class.len() as i64));
            let (a, b) = CycNum::unify(&f.values[c], &h.values[c].conj());
            let term = a.mul(&b).unwrap().scale(&size);
            let (x, y) = CycNum::unify(&acc, &term);
            acc = x.add(&y).unwrap();
        }
        acc.scale(&order.recip())
    }

    /// Coordinates of a class function over the irreducible rows; errors if
    /// some coefficient is not a rational integer.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<BigInt>> {
        assert_eq!(f.values.len(), self.class_count());
        let mut coords = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let c = self.inner_product(f, row).scale(&self.norms[i].recip());
            let q = c.to_rational().ok_or_else(|| Error::NotVirtualCharacter {
                row: i,
                value: c.to_string(),
            })?;
            if !q.is_integer() {
                return Err(Error::NotVirtualCharacter {
                    row: i,
                    value: q.to_string(),
                });
            }
            coords.push(q.to_integer());
        }
        Ok(coords)
    }

    /// Class-function values of an integer combination of rows.
    pub fn combine(&self, coords: &[BigInt]) -> ClassFunction {
        assert_eq!(coords.len(), self.rows.len());
        let mut values = vec![CycNum::zero(self.conductor); self.class_count()];
        for (i, coeff) in coords.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let q = BigRational::from(coeff.clone());
            for (c, v) in values.iter_mut().enumerate() {
                *v = v.add(&self.rows[i].values[c].scale(&q)).unwrap();
            }
        }
        ClassFunction { values }
    }

    /// Structure constants: coordinates of row_a * row_b over the rows.
    /// Computed lazily once per table; concurrent initializations agree.
    fn structure_constants(&self) -> &Vec<Vec<Vec<BigInt>>> {
        self.structure.get_or_init(|| {
            let k = self.rows.len();
            let mut all = Vec::with_capacity(k);
            for a in 0..k {
                let mut per_a = Vec::with_capacity(k);
                for b in 0..k {
                    let values: Vec<CycNum> = (0..self.class_count())
                        .map(|c| self.rows[a].values[c].mul(&self.rows[b].values[c]).unwrap())
                        .collect();
                    let coords = self
                        .decompose(&ClassFunction { values })
                        .expect("product of table rows must decompose integrally");
                    per_a.push(coords);
                }
                all.push(per_a);
            }
            all
        })
    }

    /// Product of two coordinate vectors in the character ring.
    pub fn mul_coords(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let k = self.rows.len();
        assert_eq!(x.len(), k);
        assert_eq!(y.len(), k);
        let sc = self.structure_constants();
        let mut out = vec![BigInt::zero(); k];
        for a in 0..k {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..k {
                if y[b].is_zero() {
                    continue;
                }
                let scale = &x[a] * &y[b];
                for (t, n) in sc[a][b].iter().enumerate() {
                    if !n.is_zero() {
                        out[t] += n * &scale;
                    }
                }
            }
        }
        out
    }
}

fn sort_rows(mut rows: Vec<ClassFunction>, conductor: u64) -> (Vec<ClassFunction>, Vec<u64>) {
    let degree_of = |r: &ClassFunction| -> u64 {
        let q = r.values[0]
            .to_rational()
            .expect("character degree must be rational");
        assert!(
            q.is_integer() && q.is_positive(),
            "character degree must be a positive integer"
        );
        let d: BigInt = q.to_integer();
        u64::try_from(d).expect("degree fits in u64")
    };
    rows.sort_by(|a, b| {
        degree_of(a)
            .cmp(&degree_of(b))
            .then_with(|| values_cmp(b, a)) // descending lex puts the trivial row first
    });
    let degrees = rows.iter().map(degree_of).collect();
    let _ = conductor;
    (rows, degrees)
}

fn finish_table(group: Group, field: FieldTag, rows: Vec<ClassFunction>) -> Result<Table> {
    let conductor = group.exponent();
    let (rows, degrees) = sort_rows(rows, conductor);
    if field == FieldTag::Complex {
        assert_eq!(
            rows.len(),
            group.class_count(),
            "row count must equal class count"
        );
        let sum_sq: u64 = degrees.iter().map(|d| d * d).sum();
        assert_eq!(
            sum_sq,
            group.order() as u64,
            "sum of squared degrees must be |G|"
        );
    }
    let trivial_row = rows
        .iter()
        .position(|r| r.values.iter().all(|v| *v == CycNum::one(conductor)))
        .expect("table must contain the trivial character");
    let table = CharacterTable {
        group,
        field,
        conductor,
        degrees,
        norms: Vec::new(),
        trivial_row,
        rows,
        structure: OnceLock::new(),
    };
    let norms: Vec<BigRational> = table
        .rows
        .iter()
        .map(|r| {
            let n = table.inner_product(r, r);
            n.to_rational().expect("<chi,chi> must be rational")
        })
        .collect();
    let mut table = table;
    table.norms = norms;
    if field == FieldTag::Complex {
        assert!(
            table.norms.iter().all(One::is_one),
            "complex irreducible rows must have unit norm"
        );
    }
    Ok(Arc::new(table))
}

/// The exact complex character table, with deterministic row order.
pub fn complex_table(group: &Group) -> Result<Table> {
    let conductor = group.exponent();
    let rows = match group.family() {
        Family::Cyclic(n) => cyclic_rows(*n, conductor),
        Family::Dihedral(n) => dihedral_rows(group, *n, conductor),
        Family::Quaternion8 => q8_rows(conductor),
        Family::Product(fams) => product_rows(group, fams, conductor)?,
    };
    finish_table(group.clone(), FieldTag::Complex, rows)
}

fn cyclic_rows(n: u64, conductor: u64) -> Vec<ClassFunction> {
    // classes of C_n are singletons {j} in element order
    (0..n)
        .map(|k| ClassFunction {
            values: (0..n)
                .map(|j| {
                    CycNum::root_of_unity(n, k * j % n)
                        .lift_to(conductor)
                        .unwrap()
                })
                .collect(),
        })
        .collect()
}

fn dihedral_rows(group: &Group, n: u64, conductor: u64) -> Vec<ClassFunction> {
    let reps = &group.conjugacy().reps;
    let nn = n as usize;
    // value of each candidate character at an element index
    let lin = |rot_sign: i64, refl_sign: i64, e: usize| -> i64 {
        let (refl, j) = (e / nn, e % nn);
        let mut v = if rot_sign < 0 && j % 2 == 1 { -1 } else { 1 };
        if refl == 1 && refl_sign < 0 {
            v = -v;
        }
        v
    };
    let mut rows = Vec::new();
    // linear characters: trivial and the sign character always; two more when n is even
    let mut linear = vec![(1i64, 1i64), (1, -1)];
    if n.is_multiple_of(2) {
        linear.push((-1, 1));
        linear.push((-1, -1));
    }
    for (rs, fs) in linear {
        rows.push(ClassFunction {
            values: reps
                .iter()
                .map(|&e| CycNum::from_int(conductor, lin(rs, fs, e)))
                .collect(),
        });
    }
    // two-dimensional characters chi_k(r^j) = z^{kj} + z^{-kj}, zero on reflections
    let top = if n.is_multiple_of(2) {
        n / 2
    } else {
        n.div_ceil(2)
    };
    for k in 1..top {
        rows.push(ClassFunction {
            values: reps
                .iter()
                .map(|&e| {
                    let (refl, j) = (e / nn, (e % nn) as u64);
                    if refl == 1 {
                        CycNum::zero(conductor)
                    } else {
                        let a = CycNum::root_of_unity(n, k * j % n);
                        let b = CycNum::root_of_unity(n, (n - k * j % n) % n);
                        a.add(&b).unwrap().lift_to(conductor).unwrap()
                    }
                })
                .collect(),
        });
    }
    rows
}

fn q8_rows(conductor: u64) -> Vec<ClassFunction> {
    // classes in order: {1}, {-1}, {±i}, {±j}, {±k}
    let ints = |vals: [i64; 5]| ClassFunction {
        values: vals
            .iter()
            .map(|&v| CycNum::from_int(conductor, v))
            .collect(),
    };
    vec![
        ints([1, 1, 1, 1, 1]),
        ints([1, 1, 1, -1, -1]),
        ints([1, 1, -1, 1, -1]),
        ints([1, 1, -1, -1, 1]),
        ints([2, -2, 0, 0, 0]),
    ]
}

fn product_rows(group: &Group, fams: &[Family], conductor: u64) -> Result<Vec<ClassFunction>> {
    // rebuild the atomic factors and their tables
    let factor_groups: Vec<Group> = fams
        .iter()
        .map(|f| crate::groups::make_group_with(&f.to_string(), true))
        .collect::<Result<_>>()?;
    let factor_tables: Vec<Table> = factor_groups
        .iter()
        .map(complex_table)
        .collect::<Result<_>>()?;
    debug_assert_eq!(product_group(&factor_groups)?.label(), group.label());

    // element strides for digit decomposition
    let mut strides = vec![1usize; factor_groups.len()];
    for i in (0..factor_groups.len() - 1).rev() {
        strides[i] = strides[i + 1] * factor_groups[i + 1].order();
    }
    let digits = |mut e: usize| -> Vec<usize> {
        strides
            .iter()
            .map(|&s| {
                let d = e / s;
                e %= s;
                d
            })
            .collect()
    };

    // enumerate all tuples of factor row indices
    let counts: Vec<usize> = factor_tables.iter().map(|t| t.row_count()).collect();
    let total: usize = counts.iter().product();
    let reps = &group.conjugacy().reps;
    let mut rows = Vec::with_capacity(total);
    for mut idx in 0..total {
        let tuple: Vec<usize> = counts
            .iter()
            .rev()
            .map(|&c| {
                let d = idx % c;
                idx /= c;
                d
            })
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .collect();
        let values = reps
            .iter()
            .map(|&e| {
                let ds = digits(e);
                let mut acc = CycNum::one(conductor);
                for (t, table) in factor_tables.iter().enumerate() {
                    let class = table.group.conjugacy().class_of[ds[t]];
                    let v = table.rows[tuple[t]].values[class]
                        .lift_to(conductor)
                        .unwrap();
                    acc = acc.mul(&v).unwrap();
                }
                acc
            })
            .collect();
        rows.push(ClassFunction { values });
    }
    Ok(rows)
}

/// Rational character table of an abelian group: rows are Galois-orbit sums
/// of the complex rows.
pub fn rational_table(group: &Group) -> Result<Table> {
    if !group.is_abelian() {
        return Err(Error::RationalNonAbelian);
    }
    let complex = complex_table(group)?;
    let m = complex.conductor;
    let k = complex.row_count();
    let units: Vec<u64> = (1..=m).filter(|u| num_integer::gcd(*u, m) == 1).collect();
    let mut orbit_of = vec![usize::MAX; k];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let mut members = Vec::new();
        for &u in &units {
            let mapped: Vec<CycNum> = complex.rows[start]
                .values
                .iter()
                .map(|v| v.galois(u).unwrap())
                .collect();
            let found = complex
                .rows
                .iter()
                .position(|r| r.values == mapped)
                .expect("Galois image of an irreducible row must be a row");
            if !members.contains(&found) {
                members.push(found);
            }
        }
        members.sort_unstable();
        for &mbr in &members {
            orbit_of[mbr] = orbits.len();
        }
        orbits.push(members);
    }
    let rows = orbits
        .iter()
        .map(|orbit| {
            let mut values = vec![CycNum::zero(m); complex.class_count()];
            for &i in orbit {
                for (c, v) in values.iter_mut().enumerate() {
                    *v = v.add(&complex.rows[i].values[c]).unwrap();
                }
            }
            ClassFunction { values }
        })
        .collect();
    finish_table(group.clone(), FieldTag::Rational, rows)
}
