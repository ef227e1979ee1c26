//! The descending filtration of the character ring generated by gamma
//! operations on the augmentation ideal, its graded pieces, Chern classes,
//! graded multiplication, and presentation verification.
//!
//! Every degree is an exact sublattice of Z^c over the irreducible basis.
//! The generating set reduction behind both construction strategies: the
//! total gamma series is multiplicative over sums, and gamma of a negated
//! element expands as an integer polynomial of the same weight in the gamma
//! operations of the element itself. Hence the n-th filtration step is
//! spanned by monomials of weight >= n in the finitely many Chern
//! representatives g_{i,j} = C_j(rho_i) (1 <= j <= deg rho_i, rho_i running
//! over the nontrivial irreducibles), since gamma^j vanishes above the
//! degree. Two constructions of that span are provided:
//!
//! * product-span recursion (default): peeling one factor off a monomial of
//!   weight >= n leaves a monomial of weight >= n-j, so
//!   `Gamma^n = sum_{i,j} g_{i,j} * Gamma^{max(n-j,0)}`, computed bottom-up;
//! * window + saturation: span the monomials of weight in [n, n+J-1]
//!   (J the largest Chern index), then close under multiplication by the
//!   g_{i,j} until stable. A monomial whose value already lies in the
//!   current lattice is discarded together with its extensions, which the
//!   closure recovers.
//!
//! The two strategies are cross-checked in the test suites, and the window
//! width can be widened to guard the peeling argument.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chartables::Table;
use crate::error::{Error, Result};
use crate::lambda_ops::{chern_of_virtual, chern_representative, VirtualCharacter};
use crate::lattices::{smith_normal_form, AbelianInvariants, IntMatrix, Sublattice};

/// Hard bound on the computable degree range.
pub const MAX_DEGREE_BOUND: usize = 24;
const SATURATION_CAP: usize = 100;

/// How to build the filtration lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Bottom-up product-span recursion (fast, default).
    ProductRecursion,
    /// Direct window enumeration plus saturation; `extra_width` widens the
    /// enumeration window beyond the largest Chern index.
    WindowSaturate { extra_width: u32 },
}

/// A precomputed Chern representative C_j(rho_i), as coordinates.
#[derive(Clone, Debug)]
pub struct ChernGenerator {
    pub irrep: usize,
    pub index: u32,
    pub coords: Vec<BigInt>,
}

/// Per-degree quotient data: invariant factors plus an explicit projection
/// and section derived from the Smith normal form of the inclusion.
#[derive(Debug)]
struct DegreeQuotient {
    invariants: AbelianInvariants,
    /// Invariant factor for every column of the adapted basis
    /// (1 = collapsed, 0 = free).
    all_factors: Vec<BigInt>,
    /// Columns of the adapted basis that carry the nontrivial factors.
    factor_cols: Vec<usize>,
    /// Row transform: adapted coordinates = u * (coordinates in the HNF basis).
    u: IntMatrix,
    /// Adapted basis of the bigger lattice (ambient x rank).
    basis_c: IntMatrix,
}

impl DegreeQuotient {
    fn build(big: &Sublattice, small: &Sublattice) -> DegreeQuotient {
        let r = big.rank();
        let coord_cols: Vec<Vec<BigInt>> = small
            .basis_columns()
            .into_iter()
            .map(|col| big.solve(&col).expect("filtration chain violated"))
            .collect();
        let m = IntMatrix::from_cols(r, coord_cols);
        let snf = smith_normal_form(&m);
        let basis_c = big.basis().mul(&snf.u_inv);
        let diag = snf.diagonal();
        let all_factors: Vec<BigInt> = (0..r)
            .map(|i| diag.get(i).copied().cloned().unwrap_or_else(BigInt::zero))
            .collect();
        let factor_cols: Vec<usize> = (0..r).filter(|&i| !all_factors[i].is_one()).collect();
        let factors: Vec<BigInt> = factor_cols
            .iter()
            .filter(|&&i| !all_factors[i].is_zero())
            .map(|&i| all_factors[i].clone())
            .collect();
        let free_rank = factor_cols
            .iter()
            .filter(|&&i| all_factors[i].is_zero())
            .count();
        DegreeQuotient {
            invariants: AbelianInvariants { factors, free_rank },
            all_factors,
            factor_cols,
            u: snf.u,
            basis_c,
        }
    }

    fn reduce(&self, t: usize, z: &BigInt) -> BigInt {
        let d = &self.all_factors[self.factor_cols[t]];
        if d.is_zero() {
            z.clone()
        } else {
            z.mod_floor(d)
        }
    }

    /// Quotient coordinates of a member of the bigger lattice.
    fn project(&self, big: &Sublattice, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = big.solve(x)?;
        let z = self.u.mul_vec(&y);
        Some(
            (0..self.factor_cols.len())
                .map(|t| self.reduce(t, &z[self.factor_cols[t]]))
                .collect(),
        )
    }

    fn section(&self, t: usize) -> Vec<BigInt> {
        self.basis_c.col(self.factor_cols[t])
    }

    fn factor_count(&self) -> usize {
        self.factor_cols.len()
    }
}

/// Homogeneous element of the graded ring: a degree and coordinates over the
/// cyclic factors of that degree's quotient, each reduced mod its factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    pub degree: usize,
    pub coords: Vec<BigInt>,
}

impl GradedElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// The filtration chain Gamma^0 .. Gamma^{N+1} with per-degree quotient
/// structure. Immutable once computed.
pub struct GammaFiltration {
    pub table: Table,
    pub max_degree: usize,
    pub generators: Vec<ChernGenerator>,
    gamma: Vec<Sublattice>,
    ipowers: Vec<Sublattice>,
    quotients: Vec<DegreeQuotient>,
}

impl GammaFiltration {
    pub fn compute(table: &Table, max_degree: usize) -> Result<GammaFiltration> {
        GammaFiltration::compute_with(table, max_degree, Strategy::ProductRecursion)
    }

    pub fn compute_with(
        table: &Table,
        max_degree: usize,
        strategy: Strategy,
    ) -> Result<GammaFiltration> {
        if max_degree < 1 {
            return Err(Error::InvalidInput("max degree must be at least 1".into()));
        }
        if max_degree > MAX_DEGREE_BOUND {
            return Err(Error::DegreeTooLarge(max_degree, MAX_DEGREE_BOUND));
        }
        let c = table.row_count();
        let mut generators = Vec::new();
        for i in 0..c {
            if i == table.trivial_row() {
                continue;
            }
            for j in 1..=table.degrees[i] as u32 {
                let rep = chern_representative(table, i, j)?;
                generators.push(ChernGenerator {
                    irrep: i,
                    index: j,
                    coords: rep.coords,
                });
            }
        }

        let top = max_degree + 1;
        let gamma = match strategy {
            Strategy::ProductRecursion => {
                let mut gamma: Vec<Sublattice> = vec![Sublattice::full(c)];
                for n in 1..=top {
                    let mut cols = Vec::new();
                    for g in &generators {
                        let lower = &gamma[n.saturating_sub(g.index as usize)];
                        for b in lower.basis_columns() {
                            cols.push(table.mul_coords(&g.coords, &b));
                        }
                    }
                    gamma.push(Sublattice::hnf(c, cols));
                }
                gamma
            }
            Strategy::WindowSaturate { extra_width } => {
                let mut gamma = vec![Sublattice::full(c)];
                for n in 1..=top {
                    gamma.push(window_saturate(table, &generators, n, extra_width)?);
                }
                gamma
            }
        };

        // the augmentation ideal and its powers
        let mut ipowers = vec![Sublattice::full(c)];
        let ideal = Sublattice::hnf(
            c,
            generators
                .iter()
                .filter(|g| g.index == 1)
                .map(|g| g.coords.clone())
                .collect(),
        );
        ipowers.push(ideal.clone());
        for n in 2..=top {
            let mut cols = Vec::new();
            for b in ipowers[n - 1].basis_columns() {
                for a in ideal.basis_columns() {
                    cols.push(table.mul_coords(&b, &a));
                }
            }
            ipowers.push(Sublattice::hnf(c, cols));
        }

        // structural invariants of the chain
        assert_eq!(gamma[1], ideal, "Gamma^1 must be the augmentation ideal");
        let group_order = BigInt::from(table.group.order() as u64);
        for n in 1..=top {
            assert!(
                gamma[n - 1].contains_lattice(&gamma[n]),
                "filtration chain broken at degree {n}"
            );
            assert!(
                gamma[n].contains_lattice(&ipowers[n]),
                "augmentation-ideal power escapes the filtration at degree {n}"
            );
        }

        let quotients: Vec<DegreeQuotient> = (1..=max_degree)
            .map(|n| DegreeQuotient::build(&gamma[n], &gamma[n + 1]))
            .collect();
        for (idx, q) in quotients.iter().enumerate() {
            for d in &q.invariants.factors {
                assert!(
                    (&group_order % d).is_zero(),
                    "invariant factor {d} of degree {} does not divide |G|",
                    idx + 1
                );
            }
        }

        Ok(GammaFiltration {
            table: table.clone(),
            max_degree,
            generators,
            gamma,
            ipowers,
            quotients,
        })
    }

    pub fn gamma_lattice(&self, n: usize) -> &Sublattice {
        &self.gamma[n]
    }

    pub fn gamma_lattices(&self) -> &[Sublattice] {
        &self.gamma
    }

    pub fn ipower(&self, n: usize) -> &Sublattice {
        &self.ipowers[n]
    }

    fn quotient(&self, n: usize) -> Result<&DegreeQuotient> {
        if n < 1 || n > self.max_degree {
            return Err(Error::DegreeOverflow {
                degree: n,
                max: self.max_degree,
            });
        }
        Ok(&self.quotients[n - 1])
    }

    /// Invariant factors of the degree-n piece.
    pub fn graded_piece(&self, n: usize) -> Result<&AbelianInvariants> {
        Ok(&self.quotient(n)?.invariants)
    }

    /// Zero element of the degree-n piece.
    pub fn zero_element(&self, n: usize) -> Result<GradedElement> {
        let q = self.quotient(n)?;
        Ok(GradedElement {
            degree: n,
            coords: vec![BigInt::zero(); q.factor_count()],
        })
    }

    /// Project a member of Gamma^n onto the degree-n quotient.
    pub fn project(&self, n: usize, coords: &[BigInt]) -> Result<GradedElement> {
        let q = self.quotient(n)?;
        let projected = q
            .project(&self.gamma[n], coords)
            .unwrap_or_else(|| panic!("element is not a member of filtration degree {n}"));
        Ok(GradedElement {
            degree: n,
            coords: projected,
        })
    }

    /// An explicit lift of a graded element back into Gamma^n.
    pub fn lift(&self, alpha: &GradedElement) -> Result<Vec<BigInt>> {
        let q = self.quotient(alpha.degree)?;
        let c = self.table.row_count();
        let mut out = vec![BigInt::zero(); c];
        for (t, a) in alpha.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sec = q.section(t);
            for i in 0..c {
                out[i] += a * &sec[i];
            }
        }
        Ok(out)
    }

    /// Image of the Chern representative C_j(rho) in the degree-j piece.
    pub fn chern_class(&self, irrep: usize, j: u32) -> Result<GradedElement> {
        let rep = chern_representative(&self.table, irrep, j)?;
        assert!(
            self.gamma[j as usize].contains(&rep.coords),
            "Chern representative escapes its filtration degree"
        );
        self.project(j as usize, &rep.coords)
    }

    /// Image of C_j of an arbitrary virtual character.
    pub fn chern_class_of(&self, a: &VirtualCharacter, j: u32) -> Result<GradedElement> {
        if !self.table.compatible(&a.table) {
            return Err(Error::TableMismatch);
        }
        let rep = chern_of_virtual(a, j);
        assert!(
            self.gamma[j as usize].contains(&rep.coords),
            "Chern representative escapes its filtration degree"
        );
        self.project(j as usize, &rep.coords)
    }

    /// Product in the graded ring: lift, multiply, project. The result does
    /// not depend on the chosen lifts.
    pub fn graded_mul(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
        let n = a.degree + b.degree;
        if n > self.max_degree {
            return Err(Error::DegreeOverflow {
                degree: n,
                max: self.max_degree,
            });
        }
        let x = self.lift(a)?;
        let y = self.lift(b)?;
        let prod = self.table.mul_coords(&x, &y);
        assert!(
            self.gamma[n].contains(&prod),
            "graded product escapes its filtration degree"
        );
        self.project(n, &prod)
    }

    pub fn graded_add(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
        assert_eq!(a.degree, b.degree);
        let q = self.quotient(a.degree)?;
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .enumerate()
            .map(|(t, (x, y))| q.reduce(t, &(x + y)))
            .collect();
        Ok(GradedElement {
            degree: a.degree,
            coords,
        })
    }

    pub fn graded_scale(&self, a: &GradedElement, k: &BigInt) -> Result<GradedElement> {
        let q = self.quotient(a.degree)?;
        let coords = a
            .coords
            .iter()
            .enumerate()
            .map(|(t, x)| q.reduce(t, &(x * k)))
            .collect();
        Ok(GradedElement {
            degree: a.degree,
            coords,
        })
    }

    /// Least k >= 1 with k * alpha = 0.
    pub fn additive_order(&self, alpha: &GradedElement) -> Result<BigInt> {
        let q = self.quotient(alpha.degree)?;
        let mut order = BigInt::one();
        for (t, a) in alpha.coords.iter().enumerate() {
            let d = &q.all_factors[q.factor_cols[t]];
            if a.is_zero() {
                continue;
            }
            assert!(!d.is_zero(), "element of infinite additive order");
            let part = d / a.gcd(d);
            order = order.lcm(&part);
        }
        Ok(order)
    }

    /// Power alpha^k in the graded ring (degree k * deg alpha <= N).
    pub fn graded_pow(&self, alpha: &GradedElement, k: u32) -> Result<GradedElement> {
        assert!(k >= 1);
        let mut acc = alpha.clone();
        for _ in 1..k {
            acc = self.graded_mul(&acc, alpha)?;
        }
        Ok(acc)
    }

    /// Does the set of graded elements generate the degree-n piece?
    pub fn generate_piece(&self, n: usize, elements: &[GradedElement]) -> Result<bool> {
        let mut cols: Vec<Vec<BigInt>> = self.gamma[n + 1].basis_columns();
        for e in elements {
            assert_eq!(e.degree, n);
            cols.push(self.lift(e)?);
        }
        let span = Sublattice::hnf(self.table.row_count(), cols);
        Ok(span.contains_lattice(&self.gamma[n]))
    }
}

fn window_saturate(
    table: &Table,
    generators: &[ChernGenerator],
    n: usize,
    extra_width: u32,
) -> Result<Sublattice> {
    let c = table.row_count();
    let mut lat = Sublattice::zero(c);
    if generators.is_empty() {
        return Ok(lat);
    }
    let max_index = generators.iter().map(|g| g.index as usize).max().unwrap();
    let hi = n + max_index - 1 + extra_width as usize;

    // enumerate monomials depth-first with nondecreasing generator index;
    // a value already inside the lattice is dropped with its extensions
    // (the saturation closure recovers them)
    struct Dfs<'a> {
        table: &'a Table,
        gens: &'a [ChernGenerator],
        lat: &'a mut Sublattice,
        lo: usize,
        hi: usize,
    }
    impl Dfs<'_> {
        fn run(&mut self, start: usize, value: &[BigInt], weight: usize) {
            if weight >= 1 {
                if self.lat.contains(value) {
                    return;
                }
                if weight >= self.lo {
                    *self.lat = self
                        .lat
                        .sum(&Sublattice::hnf(value.len(), vec![value.to_vec()]))
                        .unwrap();
                    return;
                }
            }
            for idx in start..self.gens.len() {
                let j = self.gens[idx].index as usize;
                if weight + j <= self.hi {
                    let next = self.table.mul_coords(value, &self.gens[idx].coords);
                    self.run(idx, &next, weight + j);
                }
            }
        }
    }
    let mut one = vec![BigInt::zero(); c];
    one[table.trivial_row()] = BigInt::one();
    Dfs {
        table,
        gens: generators,
        lat: &mut lat,
        lo: n,
        hi,
    }
    .run(0, &one, 0);

    // saturate: close under multiplication by every generator
    for _pass in 0..SATURATION_CAP {
        let mut fresh = Vec::new();
        for b in lat.basis_columns() {
            for g in generators {
                let p = table.mul_coords(&g.coords, &b);
                if !lat.contains(&p) {
                    fresh.push(p);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(lat);
        }
        lat = lat.sum(&Sublattice::hnf(c, fresh))?;
    }
    Err(Error::SaturationCap(SATURATION_CAP))
}

// --- presentations ---------------------------------------------------------

/// Serialized form of a presentation document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub generators: Vec<GeneratorSpec>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: usize,
    pub irrep: usize,
    pub chern_index: u32,
}

/// A homogeneous integer polynomial in the generator names.
#[derive(Clone, Debug)]
pub struct RelationPoly {
    pub source: String,
    /// (coefficient, exponent vector over the generators)
    pub terms: Vec<(BigInt, Vec<u32>)>,
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<GeneratorSpec>,
    pub relations: Vec<RelationPoly>,
}

impl Presentation {
    pub fn compile(doc: &PresentationDoc) -> Result<Presentation> {
        let names: Vec<&str> = doc.generators.iter().map(|g| g.name.as_str()).collect();
        for g in &doc.generators {
            if g.degree != g.chern_index as usize {
                return Err(Error::InvalidPresentation(format!(
                    "generator {} has degree {} but is the Chern class of index {}",
                    g.name, g.degree, g.chern_index
                )));
            }
        }
        let degrees: Vec<usize> = doc.generators.iter().map(|g| g.degree).collect();
        let relations = doc
            .relations
            .iter()
            .map(|src| parse_relation(src, &names, &degrees))
            .collect::<Result<_>>()?;
        Ok(Presentation {
            generators: doc.generators.clone(),
            relations,
        })
    }

    pub fn from_json(json: &str) -> Result<Presentation> {
        let doc: PresentationDoc =
            serde_json::from_str(json).map_err(|e| Error::InvalidPresentation(e.to_string()))?;
        Presentation::compile(&doc)
    }
}

/// Parse a relation: a signed sum of terms `INT ['*' name ['^' INT]]...`,
/// e.g. `2*x^2*y + 2*x*y^2`. The polynomial must be homogeneous with respect
/// to the declared generator degrees.
fn parse_relation(src: &str, names: &[&str], degrees: &[usize]) -> Result<RelationPoly> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let mut terms: Vec<(BigInt, Vec<u32>)> = Vec::new();
    let err = |offset: usize, message: String| Error::Parse { offset, message };

    let skip_ws = |pos: &mut usize| {
        while bytes.get(*pos).is_some_and(u8::is_ascii_whitespace) {
            *pos += 1;
        }
    };
    let number = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
            *pos += 1;
        }
        (*pos > start).then(|| src[start..*pos].parse().unwrap())
    };
    let ident = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        while bytes
            .get(*pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            *pos += 1;
        }
        (*pos > start).then(|| src[start..*pos].to_string())
    };

    let mut sign = BigInt::one();
    skip_ws(&mut pos);
    if bytes.get(pos) == Some(&b'-') {
        sign = -sign;
        pos += 1;
    } else if bytes.get(pos) == Some(&b'+') {
        pos += 1;
    }
    loop {
        skip_ws(&mut pos);
        // one term: optional integer coefficient and *-joined powers
        let mut coeff = sign.clone();
        let mut exps = vec![0u32; names.len()];
        let mut saw_factor = false;
        loop {
            skip_ws(&mut pos);
            if let Some(n) = number(&mut pos) {
                coeff *= n;
                saw_factor = true;
            } else if bytes
                .get(pos)
                .is_some_and(|c| c.is_ascii_alphabetic() || *c == b'_')
            {
                let at = pos;
                let name = ident(&mut pos).unwrap();
                let Some(gi) = names.iter().position(|n| **n == name) else {
                    return Err(Error::UnknownGenerator { name });
                };
                let mut e = 1u32;
                if bytes.get(pos) == Some(&b'^') {
                    pos += 1;
                    let Some(n) = number(&mut pos) else {
                        return Err(err(pos, "expected an exponent after `^`".into()));
                    };
                    e = u32::try_from(n).map_err(|_| err(at, "exponent too large".into()))?;
                }
                exps[gi] += e;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws(&mut pos);
            if bytes.get(pos) == Some(&b'*') {
                pos += 1;
            } else {
                break;
            }
        }
        if !saw_factor {
            return Err(err(pos, "expected a term".into()));
        }
        terms.push((coeff, exps));
        skip_ws(&mut pos);
        match bytes.get(pos) {
            None => break,
            Some(b'+') => {
                sign = BigInt::one();
                pos += 1;
            }
            Some(b'-') => {
                sign = -BigInt::one();
                pos += 1;
            }
            Some(_) => return Err(err(pos, "expected `+`, `-`, or end of relation".into())),
        }
    }
    let term_degree = |exps: &[u32]| -> usize {
        exps.iter()
            .zip(degrees)
            .map(|(&e, &d)| e as usize * d)
            .sum()
    };
    let degree = term_degree(&terms[0].1);
    if terms.iter().any(|(_, e)| term_degree(e) != degree) || degree == 0 {
        return Err(Error::RelationNotHomogeneous {
            relation: src.to_string(),
        });
    }
    Ok(RelationPoly {
        source: src.to_string(),
        terms,
        degree,
    })
}

/// One degree of a presentation verification.
#[derive(Clone, Debug)]
pub struct DegreeVerdict {
    pub degree: usize,
    pub computed: AbelianInvariants,
    pub presented: AbelianInvariants,
    pub surjective: bool,
    pub relations_vanish: bool,
    pub invariants_match: bool,
}

impl DegreeVerdict {
    pub fn pass(&self) -> bool {
        self.surjective && self.relations_vanish && self.invariants_match
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub degrees: Vec<DegreeVerdict>,
    pub pass: bool,
}

/// Enumerate exponent vectors of total weighted degree n (deterministic,
/// lexicographic in the generator order).
fn monomials_of_degree(degrees: &[usize], n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; degrees.len()];
    fn rec(
        degrees: &[usize],
        idx: usize,
        left: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == degrees.len() {
            if left == 0 {
                out.push(current.clone());
            }
            return;
        }
        let d = degrees[idx];
        let max_e = left.checked_div(d).unwrap_or(0);
        for e in 0..=max_e {
            current[idx] = e as u32;
            rec(degrees, idx + 1, left - e * d, current, out);
        }
        current[idx] = 0;
    }
    rec(degrees, 0, n, &mut current, &mut out);
    out
}

impl GammaFiltration {
    /// Check a presentation degree by degree: relations must evaluate to
    /// zero, the evaluated monomials must generate each graded piece, and
    /// the invariant factors of the presented ring must match the computed
    /// ones. A surjection between finite abelian groups of equal invariants
    /// is an isomorphism, so a full pass certifies the presentation up to N.
    pub fn verify_presentation(&self, pres: &Presentation) -> Result<VerificationReport> {
        let n_max = self.max_degree;
        let gen_degrees: Vec<usize> = pres.generators.iter().map(|g| g.degree).collect();
        for g in &pres.generators {
            if g.degree > n_max {
                return Err(Error::DegreeOverflow {
                    degree: g.degree,
                    max: n_max,
                });
            }
        }
        for r in &pres.relations {
            if r.degree > n_max {
                return Err(Error::DegreeOverflow {
                    degree: r.degree,
                    max: n_max,
                });
            }
        }
        let gen_elements: Vec<GradedElement> = pres
            .generators
            .iter()
            .map(|g| self.chern_class(g.irrep, g.chern_index))
            .collect::<Result<_>>()?;

        // evaluate a monomial in the graded ring
        let eval_monomial = |exps: &[u32]| -> Result<GradedElement> {
            let mut acc: Option<GradedElement> = None;
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    acc = Some(match acc {
                        None => gen_elements[i].clone(),
                        Some(prev) => self.graded_mul(&prev, &gen_elements[i])?,
                    });
                }
            }
            Ok(acc.expect("monomial of positive degree"))
        };

        // every relation, evaluated once at its own degree
        let mut relation_zero = Vec::with_capacity(pres.relations.len());
        for rel in &pres.relations {
            let mut acc = self.zero_element(rel.degree)?;
            for (coeff, exps) in &rel.terms {
                let term = self.graded_scale(&eval_monomial(exps)?, coeff)?;
                acc = self.graded_add(&acc, &term)?;
            }
            relation_zero.push(acc.is_zero());
        }

        let mut verdicts = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let monos = monomials_of_degree(&gen_degrees, n);
            let index_of: HashMap<Vec<u32>, usize> = monos
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();

            // presented degree-n group: free on the monomials, modulo all
            // monomial multiples of the relations landing in degree n
            let mut rel_cols: Vec<Vec<BigInt>> = Vec::new();
            for rel in &pres.relations {
                if rel.degree > n {
                    continue;
                }
                for mult in monomials_of_degree(&gen_degrees, n - rel.degree) {
                    let mut col = vec![BigInt::zero(); monos.len()];
                    for (coeff, exps) in &rel.terms {
                        let combined: Vec<u32> =
                            exps.iter().zip(&mult).map(|(a, b)| a + b).collect();
                        col[index_of[&combined]] += coeff;
                    }
                    rel_cols.push(col);
                }
            }
            let presented = if monos.is_empty() {
                AbelianInvariants::trivial()
            } else {
                Sublattice::quotient_invariants(
                    &Sublattice::full(monos.len()),
                    &Sublattice::hnf(monos.len(), rel_cols),
                )?
            };

            let evals: Vec<GradedElement> = monos
                .iter()
                .map(|m| eval_monomial(m))
                .collect::<Result<_>>()?;
            let surjective = self.generate_piece(n, &evals)?;
            let relations_vanish = pres
                .relations
                .iter()
                .zip(&relation_zero)
                .filter(|(r, _)| r.degree == n)
                .all(|(_, &z)| z);
            let computed = self.graded_piece(n)?.clone();
            let invariants_match = presented == computed;
            verdicts.push(DegreeVerdict {
                degree: n,
                computed,
                presented,
                surjective,
                relations_vanish,
                invariants_match,
            });
        }
        let pass = verdicts.iter().all(DegreeVerdict::pass) && relation_zero.iter().all(|&z| z);
        Ok(VerificationReport {
            degrees: verdicts,
            pass,
        })
    }
}
