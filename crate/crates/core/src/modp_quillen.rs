//! The mod-p side for abelian p-groups: the group algebra over F_p filtered
//! by powers of its augmentation ideal, the comparison map theta from the
//! character ring, and the truncated-polynomial dimension count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::chartables::Table;
use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::gamma_graded::{GammaFiltration, RelationPoly};
use crate::groups::{Family, Group};
use crate::lambda_ops::VirtualCharacter;

/// Row-reduce vectors over F_p (deterministic leftmost-pivot elimination);
/// returns a reduced echelon basis sorted by pivot column.
fn echelon(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let inv_mod = |a: u64| -> u64 {
        // p is prime and a != 0
        let mut result = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    };
    for col in 0..width {
        let Some(pos) = rows.iter().position(|r| r[col] != 0) else {
            continue;
        };
        let mut pivot = rows.swap_remove(pos);
        let scale = inv_mod(pivot[col]);
        for v in pivot.iter_mut() {
            *v = *v * scale % p;
        }
        for r in rows.iter_mut() {
            let c = r[col];
            if c != 0 {
                for (a, b) in r.iter_mut().zip(&pivot) {
                    *a = (*a + (p - c) * b) % p;
                }
            }
        }
        for r in basis.iter_mut() {
            let c = r[col];
            if c != 0 {
                for (a, b) in r.iter_mut().zip(&pivot) {
                    *a = (*a + (p - c) * b) % p;
                }
            }
        }
        basis.push(pivot);
        rows.retain(|r| r.iter().any(|&v| v != 0));
    }
    basis.sort_by_key(|r| r.iter().position(|&v| v != 0));
    basis
}

/// Is `v` in the span of an echelon `basis`?
fn in_span(basis: &[Vec<u64>], v: &[u64], p: u64) -> bool {
    let mut v = v.to_vec();
    for b in basis {
        let col = b.iter().position(|&x| x != 0).unwrap();
        let c = v[col];
        if c != 0 {
            for (a, x) in v.iter_mut().zip(b) {
                *a = (*a + (p - c) * x) % p;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

/// The group algebra of an abelian p-group over F_p, with the bases of the
/// powers of its augmentation ideal.
pub struct ModPGroupAlgebra {
    pub p: u64,
    pub group: Group,
    /// ipower_bases[n] is an echelon basis of I^n (I^0 = whole algebra).
    pub ipower_bases: Vec<Vec<Vec<u64>>>,
}

impl ModPGroupAlgebra {
    /// Dimensions of the graded pieces I^n / I^{n+1} for n = 0..=max_degree.
    pub fn gr_dims(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree)
            .map(|n| self.ipower_bases[n].len() - self.ipower_bases[n + 1].len())
            .collect()
    }

    /// Convolution product of two algebra elements.
    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let order = self.group.order();
        let mut out = vec![0u64; order];
        for (g, &ag) in a.iter().enumerate() {
            if ag == 0 {
                continue;
            }
            for (h, &bh) in b.iter().enumerate() {
                if bh != 0 {
                    let gh = self.group.mul(g, h);
                    out[gh] = (out[gh] + ag * bh) % self.p;
                }
            }
        }
        out
    }
}

/// Build the filtered group algebra: I spanned by {g - 1}, I^{n+1} spanned
/// by products of an I^n basis with the I basis. Requires an abelian group
/// of p-power order.
pub fn group_algebra(group: &Group, p: u64, max_degree: usize) -> Result<ModPGroupAlgebra> {
    if !crate::cyclo::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if group.p_group_prime() != Some(p) && group.order() != 1 {
        return Err(Error::NotPGroup(group.order() as u64, p));
    }
    let order = group.order();
    let full: Vec<Vec<u64>> = (0..order)
        .map(|g| {
            let mut v = vec![0u64; order];
            v[g] = 1;
            v
        })
        .collect();
    let aug_gens: Vec<Vec<u64>> = (1..order)
        .map(|g| {
            let mut v = vec![0u64; order];
            v[g] = 1;
            v[0] = p - 1;
            v
        })
        .collect();
    let mut bases = vec![echelon(full, p), echelon(aug_gens.clone(), p)];
    let alg = ModPGroupAlgebra {
        p,
        group: group.clone(),
        ipower_bases: Vec::new(),
    };
    for n in 2..=max_degree + 1 {
        let mut products = Vec::new();
        for b in &bases[n - 1] {
            for a in &aug_gens {
                products.push(alg.mul(b, a));
            }
        }
        bases.push(echelon(products, p));
    }
    // dimensions strictly decrease until they hit zero
    for w in bases.windows(2) {
        assert!(
            w[1].len() < w[0].len() || w[0].is_empty(),
            "augmentation-ideal powers must strictly descend to zero"
        );
    }
    Ok(ModPGroupAlgebra {
        p,
        group: group.clone(),
        ipower_bases: bases,
    })
}

/// Coefficients up to `max_degree` of prod_k (1 + t + ... + t^{q_k - 1}),
/// the Hilbert series of F_p[u_1..u_k]/(u_k^{q_k}).
pub fn truncated_poly_dims(exponents: &[u64], max_degree: usize) -> Vec<usize> {
    let mut coeffs = vec![0usize; max_degree + 1];
    coeffs[0] = 1;
    for &q in exponents {
        let mut next = vec![0usize; max_degree + 1];
        for (d, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for e in 0..q as usize {
                if d + e <= max_degree {
                    next[d + e] += c;
                }
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Cyclic factor orders of an abelian group built from cyclic atoms.
pub fn cyclic_factor_orders(group: &Group) -> Result<Vec<u64>> {
    group
        .family()
        .factors()
        .iter()
        .map(|f| match f {
            Family::Cyclic(n) => Ok(*n),
            other => Err(Error::UnsupportedConstruction(format!(
                "{other} is not a cyclic factor"
            ))),
        })
        .collect()
}

/// The duality pairing fixed by the element numbering: row index -> group
/// element with the same exponent tuple.
pub fn dual_elements(table: &Table) -> Result<Vec<usize>> {
    let group = &table.group;
    let orders = cyclic_factor_orders(group)?;
    let mut strides = vec![1usize; orders.len()];
    for i in (0..orders.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * orders[i + 1] as usize;
    }
    let m = table.conductor;
    let class_of = &group.conjugacy().class_of;
    let mut duals = Vec::with_capacity(table.row_count());
    for row in &table.rows {
        let mut elem = 0usize;
        for (t, &n_t) in orders.iter().enumerate() {
            let gen = strides[t]; // the element (0,...,1,...,0)
            let value = &row.values[class_of[gen]];
            let b = (0..n_t)
                .find(|&b| *value == CycNum::root_of_unity(n_t, b).lift_to(m).unwrap())
                .expect("row value at a generator must be a root of unity");
            elem += b as usize * strides[t];
        }
        duals.push(elem);
    }
    Ok(duals)
}

/// theta: linear extension mod p of (irreducible |-> its dual group element).
pub fn theta(alg: &ModPGroupAlgebra, duals: &[usize], a: &VirtualCharacter) -> Vec<u64> {
    let p = BigInt::from(alg.p);
    let mut out = vec![0u64; alg.group.order()];
    for (i, c) in a.coords.iter().enumerate() {
        let r = c.mod_floor(&p);
        let r: u64 = r.try_into().unwrap();
        out[duals[i]] = (out[duals[i]] + r) % alg.p;
    }
    out
}

#[derive(Clone, Debug)]
pub struct QuillenReport {
    pub p: u64,
    /// theta maps each filtration step into the matching ideal power.
    pub well_defined: Vec<bool>,
    /// theta(Gamma^n) + I^{n+1} = I^n degreewise.
    pub surjective: Vec<bool>,
    pub gr_dims: Vec<usize>,
    pub poly_dims: Vec<usize>,
    pub dims_match: bool,
    pub pass: bool,
}

/// Full comparison for an abelian p-group: well-definedness and degreewise
/// surjectivity of theta, and equality of the graded dimensions with the
/// truncated-polynomial coefficients.
pub fn quillen_check(
    group: &Group,
    p: u64,
    filtration: &GammaFiltration,
    max_degree: usize,
) -> Result<QuillenReport> {
    if max_degree > filtration.max_degree {
        return Err(Error::DegreeOverflow {
            degree: max_degree,
            max: filtration.max_degree,
        });
    }
    let alg = group_algebra(group, p, max_degree)?;
    let duals = dual_elements(&filtration.table)?;
    let mut well_defined = Vec::with_capacity(max_degree);
    let mut surjective = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let images: Vec<Vec<u64>> = filtration
            .gamma_lattice(n)
            .basis_columns()
            .into_iter()
            .map(|col| {
                let vc = VirtualCharacter::from_coords(&filtration.table, col);
                theta(&alg, &duals, &vc)
            })
            .collect();
        let wd = images.iter().all(|v| in_span(&alg.ipower_bases[n], v, p));
        well_defined.push(wd);
        let mut spanned = alg.ipower_bases[n + 1].clone();
        spanned.extend(images);
        let spanned = echelon(spanned, p);
        surjective.push(spanned.len() == alg.ipower_bases[n].len());
    }
    let gr_dims = alg.gr_dims(max_degree);
    let poly_dims = truncated_poly_dims(&cyclic_factor_orders(group)?, max_degree);
    let dims_match = gr_dims == poly_dims;
    let pass = dims_match && well_defined.iter().all(|&b| b) && surjective.iter().all(|&b| b);
    Ok(QuillenReport {
        p,
        well_defined,
        surjective,
        gr_dims,
        poly_dims,
        dims_match,
        pass,
    })
}

/// Image of a relation polynomial in F_p[u_1..u_k]/(u_t^{cap_t}) under
/// x_t |-> u_t; true when it vanishes.
pub fn relation_vanishes_in_truncated(rel: &RelationPoly, p: u64, caps: &[u32]) -> bool {
    use std::collections::HashMap;
    let p_big = BigInt::from(p);
    let mut acc: HashMap<&[u32], BigInt> = HashMap::new();
    for (coeff, exps) in &rel.terms {
        if exps.iter().zip(caps).any(|(e, c)| e >= c) {
            continue; // the monomial dies on a truncated power
        }
        *acc.entry(exps.as_slice()).or_insert_with(BigInt::zero) += coeff;
    }
    acc.values().all(|c| c.mod_floor(&p_big).is_zero())
}
