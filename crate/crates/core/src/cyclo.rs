//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! An element is stored as `phi(m)` rational coordinates over the power basis
//! `{1, z, ..., z^{phi(m)-1}}`, `z` a primitive m-th root of unity, reduced
//! modulo the m-th cyclotomic polynomial. Representatives are unique, so
//! equality at a fixed conductor is coefficient equality; numbers at
//! different conductors compare through a lift to the least common conductor.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Euler totient, by trial-division factoring (conductors are small).
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Exact quotient of integer polynomials; the divisor must be monic and the
/// division must be exact (true for cyclotomic factors of x^m - 1).
fn poly_div_exact_int(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let n = dividend.len();
    let m = divisor.len();
    assert!(m >= 1 && divisor[m - 1].is_one(), "divisor must be monic");
    assert!(n >= m);
    let mut rem = dividend.to_vec();
    let mut quot = vec![BigInt::zero(); n - m + 1];
    for i in (0..=n - m).rev() {
        let c = rem[i + m - 1].clone();
        if !c.is_zero() {
            for j in 0..m {
                rem[i + j] -= &c * &divisor[j];
            }
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the m-th cyclotomic polynomial, ascending degree.
/// Computed as (x^m - 1) / prod_{d | m, d < m} Phi_d and cached per
/// conductor. Concurrent first computations race benignly to equal values.
pub fn cyclotomic_poly(m: u64) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(hit) = phi_cache().lock().unwrap().get(&m) {
        return hit.clone();
    }
    let coeffs = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        let mut poly = vec![BigInt::zero(); m as usize + 1];
        poly[0] = BigInt::from(-1);
        poly[m as usize] = BigInt::from(1);
        for d in divisors(m) {
            if d < m {
                let phi_d = cyclotomic_poly(d);
                poly = poly_div_exact_int(&poly, &phi_d);
            }
        }
        poly
    };
    debug_assert_eq!(coeffs.len() as u64 - 1, euler_phi(m));
    let arc = Arc::new(coeffs);
    phi_cache()
        .lock()
        .unwrap()
        .entry(m)
        .or_insert_with(|| arc.clone());
    arc
}

/// p-adic valuation of a nonzero integer.
fn int_valuation(n: &BigInt, p: u64) -> u64 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// A valuation value: a finite rational or +infinity (valuation of zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(BigRational),
    Infinite,
}

impl Valuation {
    pub fn is_positive(&self) -> bool {
        match self {
            Valuation::Finite(v) => v.is_positive(),
            Valuation::Infinite => true,
        }
    }

    pub fn min(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Infinite, b) => b,
            (a, Valuation::Infinite) => a,
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a.min(b)),
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Element of Q(zeta_m) in canonical coordinates.
#[derive(Clone, Debug)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    /// Canonical reduction of `sum raw[k] * zeta_m^k`. Exponents are taken
    /// modulo m, so `raw` may have any length.
    pub fn new(m: u64, raw: &[BigRational]) -> CycNum {
        assert!(m >= 1, "conductor must be positive");
        let mut folded = vec![BigRational::zero(); m as usize];
        for (k, c) in raw.iter().enumerate() {
            folded[k % m as usize] += c;
        }
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        // reduce modulo the monic integer polynomial phi
        for i in (deg..folded.len()).rev() {
            let c = folded[i].clone();
            if !c.is_zero() {
                for j in 0..deg {
                    folded[i - deg + j] -= &c * BigRational::from(phi[j].clone());
                }
                folded[i] = BigRational::zero();
            }
        }
        folded.truncate(deg);
        folded.resize(deg, BigRational::zero());
        CycNum {
            conductor: m,
            coeffs: folded,
        }
    }

    pub fn zero(m: u64) -> CycNum {
        CycNum::new(m, &[])
    }

    pub fn one(m: u64) -> CycNum {
        CycNum::from_rational(m, BigRational::one())
    }

    pub fn from_rational(m: u64, q: BigRational) -> CycNum {
        CycNum::new(m, &[q])
    }

    pub fn from_int(m: u64, n: i64) -> CycNum {
        CycNum::from_rational(m, BigRational::from(BigInt::from(n)))
    }

    /// zeta_m^k
    pub fn root_of_unity(m: u64, k: u64) -> CycNum {
        let mut raw = vec![BigRational::zero(); (k % m) as usize + 1];
        raw[(k % m) as usize] = BigRational::one();
        CycNum::new(m, &raw)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// True if every power-basis coordinate is an integer (i.e. the element
    /// lies in Z[zeta_m], the ring of integers).
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Lift to a larger conductor `target` (current conductor must divide it).
    pub fn lift_to(&self, target: u64) -> Result<CycNum> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        if !target.is_multiple_of(self.conductor) {
            return Err(Error::ConductorMismatch(self.conductor, target));
        }
        let stride = (target / self.conductor) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * stride] = c.clone();
        }
        Ok(CycNum::new(target, &raw))
    }

    /// Lift both operands to the least common conductor.
    pub fn unify(a: &CycNum, b: &CycNum) -> (CycNum, CycNum) {
        let m = a.conductor.lcm(&b.conductor);
        (a.lift_to(m).unwrap(), b.lift_to(m).unwrap())
    }

    fn check_same(&self, other: &CycNum) -> Result<()> {
        if self.conductor != other.conductor {
            Err(Error::ConductorMismatch(self.conductor, other.conductor))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_same(other)?;
        let n = self.coeffs.len();
        if n == 0 {
            return Ok(self.clone());
        }
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        // exponents here are honest powers of zeta (no folding needed:
        // 2n - 2 < m only fails when phi(m) ~ m, where folding is still right)
        Ok(CycNum::reduce_power_poly(self.conductor, prod))
    }

    fn reduce_power_poly(m: u64, mut poly: Vec<BigRational>) -> CycNum {
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        for i in (deg..poly.len()).rev() {
            let c = poly[i].clone();
            if !c.is_zero() {
                for j in 0..deg {
                    poly[i - deg + j] -= &c * BigRational::from(phi[j].clone());
                }
                poly[i] = BigRational::zero();
            }
        }
        poly.truncate(deg);
        poly.resize(deg, BigRational::zero());
        CycNum {
            conductor: m,
            coeffs: poly,
        }
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Image under the Galois map zeta |-> zeta^k; requires gcd(k, m) = 1.
    pub fn galois(&self, k: u64) -> Result<CycNum> {
        let m = self.conductor;
        if m.gcd(&k) != 1 {
            return Err(Error::InvalidInput(format!(
                "galois exponent {k} not coprime to conductor {m}"
            )));
        }
        let mut raw = vec![BigRational::zero(); m as usize];
        for (t, c) in self.coeffs.iter().enumerate() {
            raw[(t as u64 * k % m) as usize] += c;
        }
        Ok(CycNum::new(m, &raw))
    }

    /// Complex conjugation, zeta |-> zeta^{m-1}.
    pub fn conj(&self) -> CycNum {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1).unwrap()
    }

    /// Field norm N_{Q(zeta_m)/Q}, as the resultant of the representing
    /// polynomial with the m-th cyclotomic polynomial.
    pub fn norm(&self) -> BigRational {
        let phi: Vec<BigRational> = cyclotomic_poly(self.conductor)
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let mut a: Vec<BigRational> = self.coeffs.clone();
        trim(&mut a);
        resultant(&phi, &a)
    }

    /// p-adic valuation normalized so v_p(p) = 1, defined for prime-power
    /// conductors: v_p(a) = v_p(N(a)) / phi(m). Zero maps to +infinity.
    pub fn valuation(&self, p: u64) -> Result<Valuation> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut m = self.conductor;
        while m.is_multiple_of(p) {
            m /= p;
        }
        if m != 1 {
            return Err(Error::ValuationNotUnique {
                m: self.conductor,
                p,
            });
        }
        if self.is_zero() {
            return Ok(Valuation::Infinite);
        }
        let norm = self.norm();
        let vnum = int_valuation(norm.numer(), p);
        let vden = int_valuation(norm.denom(), p);
        let v = BigRational::new(
            BigInt::from(vnum as i64 - vden as i64),
            BigInt::from(euler_phi(self.conductor)),
        );
        Ok(Valuation::Finite(v))
    }
}

fn trim(poly: &mut Vec<BigRational>) {
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
}

/// Resultant of two rational polynomials (ascending coefficients), by the
/// Euclidean recurrence res(f, g) = (-1)^{df dg} lc(g)^{df - dr} res(g, r).
fn resultant(f: &[BigRational], g: &[BigRational]) -> BigRational {
    let mut f = f.to_vec();
    let mut g = g.to_vec();
    trim(&mut f);
    trim(&mut g);
    let mut acc = BigRational::one();
    loop {
        if g.is_empty() {
            // res(f, 0) = 0 unless f is a nonzero constant
            return if f.len() == 1 {
                acc
            } else {
                BigRational::zero()
            };
        }
        if g.len() == 1 {
            let df = f.len() - 1;
            return acc * pow_rational(&g[0], df as u32);
        }
        let df = f.len() - 1;
        let dg = g.len() - 1;
        let r = poly_rem(&f, &g);
        let dr = if r.is_empty() { 0 } else { r.len() - 1 };
        let lc = g.last().unwrap().clone();
        let mut factor = pow_rational(&lc, (df - dr) as u32);
        if (df * dg) % 2 == 1 {
            factor = -factor;
        }
        acc *= factor;
        if r.is_empty() {
            return BigRational::zero();
        }
        f = g;
        g = r;
    }
}

fn pow_rational(base: &BigRational, e: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= base;
    }
    out
}

fn poly_rem(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    let lead = g.last().unwrap();
    while rem.len() > dg {
        let c = rem.last().unwrap() / lead;
        let shift = rem.len() - 1 - dg;
        for j in 0..=dg {
            let sub = &c * &g[j];
            rem[shift + j] -= sub;
        }
        rem.pop();
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

impl PartialEq for CycNum {
    fn eq(&self, other: &CycNum) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = CycNum::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Deterministic total order on coefficient vectors at a common conductor,
/// used to fix character-table row order.
pub fn lex_cmp(a: &CycNum, b: &CycNum) -> std::cmp::Ordering {
    let (a, b) = CycNum::unify(a, b);
    a.coeffs.cmp(&b.coeffs)
}
