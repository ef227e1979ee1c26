//! Induced maps on graded rings: restriction along homomorphisms,
//! automorphism actions, the coprime-order tensor comparison, and evaluation
//! morphisms with their p-adic valuations.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chartables::{complex_table, ClassFunction, Table};
use crate::cyclo::{CycNum, Valuation};
use crate::error::{Error, Result};
use crate::gamma_graded::{GammaFiltration, GradedElement};
use crate::groups::{product_group, Group, GroupHom};
use crate::lambda_ops::VirtualCharacter;
use crate::lattices::AbelianInvariants;

/// Precompose a virtual character on the target of `h` with `h`, producing
/// a virtual character on the source.
pub fn restrict_character(
    h: &GroupHom,
    a: &VirtualCharacter,
    source_table: &Table,
) -> Result<VirtualCharacter> {
    if a.table.group.label() != h.target.label() || source_table.group.label() != h.source.label() {
        return Err(Error::TableMismatch);
    }
    let target_classes = &a.table.group.conjugacy().class_of;
    let values: Vec<CycNum> = h
        .source
        .conjugacy()
        .reps
        .iter()
        .map(|&r| a.values.values[target_classes[h.apply(r)]].clone())
        .collect();
    VirtualCharacter::from_values(source_table, ClassFunction { values })
}

/// The induced map on graded pieces along `h`: lift, precompose, project.
/// `f_target` is the filtration of `h.target`, `f_source` of `h.source`.
/// Membership of the restricted lift in the source filtration is a theorem;
/// its failure panics.
pub fn restrict_graded(
    h: &GroupHom,
    f_target: &GammaFiltration,
    f_source: &GammaFiltration,
    alpha: &GradedElement,
) -> Result<GradedElement> {
    let n = alpha.degree;
    if n > f_source.max_degree {
        return Err(Error::DegreeOverflow {
            degree: n,
            max: f_source.max_degree,
        });
    }
    let lift = f_target.lift(alpha)?;
    let vc = VirtualCharacter::from_coords(&f_target.table, lift);
    let res = restrict_character(h, &vc, &f_source.table)?;
    assert!(
        f_source.gamma_lattice(n).contains(&res.coords),
        "restriction left the filtration: functoriality violated"
    );
    f_source.project(n, &res.coords)
}

/// Action of an automorphism on a graded piece.
pub fn automorphism_action(
    h: &GroupHom,
    f: &GammaFiltration,
    alpha: &GradedElement,
) -> Result<GradedElement> {
    if h.source.label() != h.target.label() || !h.is_bijective() {
        return Err(Error::InvalidInput("expected an automorphism".into()));
    }
    restrict_graded(h, f, f, alpha)
}

/// Tensor product of finitely generated abelian groups:
/// Z/a (x) Z/b = Z/gcd(a,b), Z (x) A = A.
pub fn tensor_invariants(a: &AbelianInvariants, b: &AbelianInvariants) -> AbelianInvariants {
    let mut orders: Vec<BigInt> = Vec::new();
    for x in &a.factors {
        for y in &b.factors {
            orders.push(num_integer::gcd(x.clone(), y.clone()));
        }
    }
    for _ in 0..a.free_rank {
        orders.extend(b.factors.iter().cloned());
    }
    for _ in 0..b.free_rank {
        orders.extend(a.factors.iter().cloned());
    }
    AbelianInvariants::from_cyclic_factors(&orders, a.free_rank * b.free_rank)
}

/// Direct sum in invariant-factor form.
pub fn direct_sum_invariants(a: &AbelianInvariants, b: &AbelianInvariants) -> AbelianInvariants {
    let mut orders = a.factors.clone();
    orders.extend(b.factors.iter().cloned());
    AbelianInvariants::from_cyclic_factors(&orders, a.free_rank + b.free_rank)
}

#[derive(Clone, Debug)]
pub struct KunnethDegree {
    pub degree: usize,
    pub product_side: AbelianInvariants,
    pub tensor_side: AbelianInvariants,
    pub matches: bool,
}

#[derive(Clone, Debug)]
pub struct KunnethReport {
    pub coprime: bool,
    pub degrees: Vec<KunnethDegree>,
    pub all_match: bool,
}

/// Compare the graded ring of a direct product against the degreewise tensor
/// formula. The comparison is meaningful as a theorem only for coprime
/// orders, but arbitrary groups are accepted so failures can be exhibited.
pub fn kunneth_check(g: &Group, h: &Group, max_degree: usize) -> Result<KunnethReport> {
    let product = product_group(&[g.clone(), h.clone()])?;
    let f_prod = GammaFiltration::compute(&complex_table(&product)?, max_degree)?;
    let f_g = GammaFiltration::compute(&complex_table(g)?, max_degree)?;
    let f_h = GammaFiltration::compute(&complex_table(h)?, max_degree)?;
    let free_z = AbelianInvariants {
        factors: Vec::new(),
        free_rank: 1,
    };
    let piece = |f: &GammaFiltration, n: usize| -> Result<AbelianInvariants> {
        if n == 0 {
            Ok(free_z.clone())
        } else {
            Ok(f.graded_piece(n)?.clone())
        }
    };
    let mut degrees = Vec::with_capacity(max_degree);
    for n in 1..=max_degree {
        let mut tensor_side = AbelianInvariants::trivial();
        for i in 0..=n {
            let t = tensor_invariants(&piece(&f_g, i)?, &piece(&f_h, n - i)?);
            tensor_side = direct_sum_invariants(&tensor_side, &t);
        }
        let product_side = f_prod.graded_piece(n)?.clone();
        let matches = product_side == tensor_side;
        degrees.push(KunnethDegree {
            degree: n,
            product_side,
            tensor_side,
            matches,
        });
    }
    let all_match = degrees.iter().all(|d| d.matches);
    Ok(KunnethReport {
        coprime: num_integer::gcd(g.order(), h.order()) == 1,
        degrees,
        all_match,
    })
}

/// Evaluation morphism: the exact value of a virtual character at a group
/// element (constant on its class).
pub fn evaluate(a: &VirtualCharacter, g: usize) -> CycNum {
    let class = a.table.group.conjugacy().class_of[g];
    a.values.values[class].clone()
}

/// p-adic valuation of the evaluation, defined for p-groups (where the
/// valuation extension is unique).
pub fn eval_valuation(a: &VirtualCharacter, g: usize, p: u64) -> Result<Valuation> {
    match a.table.group.p_group_prime() {
        Some(q) if q == p => evaluate(a, g).valuation(p),
        _ => Err(Error::NotPGroup(a.table.group.order() as u64, p)),
    }
}

#[derive(Clone, Debug)]
pub struct ContinuityPair {
    pub irrep: usize,
    pub class: usize,
    pub valuation: Valuation,
}

#[derive(Clone, Debug)]
pub struct ContinuityReport {
    pub prime: u64,
    /// v_p(chi(g) - deg chi) for every nontrivial irreducible and class.
    pub pairs: Vec<ContinuityPair>,
    pub all_positive: bool,
    /// Per degree n, the minimum valuation of any evaluation of any lattice
    /// generator of filtration step n (infinite when everything vanishes).
    pub per_degree_min: Vec<Valuation>,
}

/// Check positivity of v_p(chi(g) - eps(chi)) over all nontrivial
/// irreducibles and classes of a p-group, and report the empirical minimum
/// evaluation valuation of each filtration degree.
pub fn continuity_check(f: &GammaFiltration) -> Result<ContinuityReport> {
    let table = &f.table;
    let group = &table.group;
    let prime = group
        .p_group_prime()
        .ok_or_else(|| Error::NotPGroup(group.order() as u64, 0))?;
    let mut pairs = Vec::new();
    let mut all_positive = true;
    for i in 0..table.row_count() {
        if i == table.trivial_row() {
            continue;
        }
        let deg = CycNum::from_int(table.conductor, table.degrees[i] as i64);
        for c in 0..table.class_count() {
            let diff = table.rows[i].values[c].sub(&deg).unwrap();
            let valuation = diff.valuation(prime)?;
            all_positive &= valuation.is_positive();
            pairs.push(ContinuityPair {
                irrep: i,
                class: c,
                valuation,
            });
        }
    }
    let mut per_degree_min = Vec::with_capacity(f.max_degree);
    for n in 1..=f.max_degree {
        let mut min = Valuation::Infinite;
        for col in f.gamma_lattice(n).basis_columns() {
            if col.iter().all(Zero::is_zero) {
                continue;
            }
            let vc = VirtualCharacter::from_coords(table, col);
            for g in 0..group.order() {
                min = min.min(evaluate(&vc, g).valuation(prime)?);
            }
        }
        per_degree_min.push(min);
    }
    Ok(ContinuityReport {
        prime,
        pairs,
        all_positive,
        per_degree_min,
    })
}
