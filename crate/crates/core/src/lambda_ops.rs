//! The lambda-ring structure on the character ring: virtual-character
//! arithmetic, augmentation, Adams, lambda and gamma operations, the
//! determinant, and Chern representatives.
//!
//! Lambda operations are computed by the Newton identity
//! `n*lam^n(a) = sum_{r=1}^{n} (-1)^{r-1} lam^{n-r}(a) * psi^r(a)`
//! over Adams operations, which act exactly on class values. The division by
//! n must land back in algebraic integers; this is asserted and doubles as an
//! integrity check of the whole operation stack.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chartables::{ClassFunction, Table};
use crate::cyclo::CycNum;
use crate::error::{Error, Result};

/// An element of the character ring, carried in two synchronized bases:
/// integer coordinates over the irreducible rows, and class-function values.
#[derive(Clone, Debug)]
pub struct VirtualCharacter {
    pub table: Table,
    pub coords: Vec<BigInt>,
    pub values: ClassFunction,
}

impl PartialEq for VirtualCharacter {
    fn eq(&self, other: &VirtualCharacter) -> bool {
        self.table.compatible(&other.table) && self.coords == other.coords
    }
}

impl Eq for VirtualCharacter {}

impl VirtualCharacter {
    pub fn from_coords(table: &Table, coords: Vec<BigInt>) -> VirtualCharacter {
        assert_eq!(coords.len(), table.row_count());
        let values = table.combine(&coords);
        VirtualCharacter {
            table: table.clone(),
            coords,
            values,
        }
    }

    /// Decompose a class function over the rows; errors when a coefficient
    /// is not a rational integer. Values arriving at a foreign conductor
    /// (e.g. restricted along a homomorphism) are re-rendered canonically.
    pub fn from_values(table: &Table, values: ClassFunction) -> Result<VirtualCharacter> {
        let coords = table.decompose(&values)?;
        let values = if values
            .values
            .iter()
            .all(|v| v.conductor() == table.conductor)
        {
            values
        } else {
            table.combine(&coords)
        };
        Ok(VirtualCharacter {
            table: table.clone(),
            coords,
            values,
        })
    }

    pub fn row(table: &Table, i: usize) -> VirtualCharacter {
        let mut coords = vec![BigInt::zero(); table.row_count()];
        coords[i] = BigInt::one();
        VirtualCharacter {
            table: table.clone(),
            coords,
            values: table.rows[i].clone(),
        }
    }

    pub fn trivial(table: &Table) -> VirtualCharacter {
        VirtualCharacter::row(table, table.trivial_row())
    }

    pub fn zero(table: &Table) -> VirtualCharacter {
        VirtualCharacter::from_coords(table, vec![BigInt::zero(); table.row_count()])
    }

    pub fn constant(table: &Table, n: &BigInt) -> VirtualCharacter {
        let mut coords = vec![BigInt::zero(); table.row_count()];
        coords[table.trivial_row()] = n.clone();
        VirtualCharacter::from_coords(table, coords)
    }

    /// The regular character (coordinates = degrees).
    pub fn regular(table: &Table) -> VirtualCharacter {
        let coords = table.degrees.iter().map(|&d| BigInt::from(d)).collect();
        VirtualCharacter::from_coords(table, coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check_table(&self, other: &VirtualCharacter) -> Result<()> {
        if self.table.compatible(&other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn add(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.check_table(other)?;
        let values = ClassFunction {
            values: self
                .values
                .values
                .iter()
                .zip(&other.values.values)
                .map(|(a, b)| a.add(b).unwrap())
                .collect(),
        };
        VirtualCharacter::from_values(&self.table, values)
    }

    pub fn sub(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.check_table(other)?;
        let values = ClassFunction {
            values: self
                .values
                .values
                .iter()
                .zip(&other.values.values)
                .map(|(a, b)| a.sub(b).unwrap())
                .collect(),
        };
        VirtualCharacter::from_values(&self.table, values)
    }

    pub fn mul(&self, other: &VirtualCharacter) -> Result<VirtualCharacter> {
        self.check_table(other)?;
        let values = ClassFunction {
            values: self
                .values
                .values
                .iter()
                .zip(&other.values.values)
                .map(|(a, b)| a.mul(b).unwrap())
                .collect(),
        };
        VirtualCharacter::from_values(&self.table, values)
    }

    pub fn neg(&self) -> VirtualCharacter {
        VirtualCharacter::from_coords(
            &self.table,
            self.coords.iter().map(|c| -c.clone()).collect(),
        )
    }

    pub fn scale(&self, n: &BigInt) -> VirtualCharacter {
        VirtualCharacter::from_coords(&self.table, self.coords.iter().map(|c| c * n).collect())
    }

    pub fn pow(&self, e: u32) -> Result<VirtualCharacter> {
        let mut acc = VirtualCharacter::trivial(&self.table);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The augmentation (degree map): the value at the identity class.
    pub fn augmentation(&self) -> BigInt {
        let q = self.values.values[0]
            .to_rational()
            .expect("augmentation must be rational");
        assert!(q.is_integer());
        q.to_integer()
    }

    /// Adams operation psi^k: values precomposed with g |-> g^k.
    pub fn adams(&self, k: u64) -> VirtualCharacter {
        let exponent = self.table.group.exponent();
        let map = &self.table.group.conjugacy().power_maps[(k % exponent) as usize];
        let values = ClassFunction {
            values: (0..self.table.class_count())
                .map(|c| self.values.values[map[c]].clone())
                .collect(),
        };
        VirtualCharacter::from_values(&self.table, values)
            .expect("Adams image of a virtual character is a virtual character")
    }

    /// lambda^n by the Newton identity over Adams operations. The division
    /// by n must be exact on class values; a failure aborts loudly.
    pub fn lambda(&self, n: u32) -> VirtualCharacter {
        let mut lams: Vec<ClassFunction> = vec![VirtualCharacter::trivial(&self.table).values];
        let psis: Vec<ClassFunction> = (1..=n).map(|r| self.adams(u64::from(r)).values).collect();
        for m in 1..=n {
            let mut acc = vec![CycNum::zero(self.table.conductor); self.table.class_count()];
            for r in 1..=m {
                let sign = if r % 2 == 1 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                let srat = BigRational::from(sign);
                for (c, slot) in acc.iter_mut().enumerate() {
                    let term = lams[(m - r) as usize].values[c]
                        .mul(&psis[(r - 1) as usize].values[c])
                        .unwrap()
                        .scale(&srat);
                    *slot = slot.add(&term).unwrap();
                }
            }
            let inv_m = BigRational::from(BigInt::from(m)).recip();
            let values: Vec<CycNum> = acc.into_iter().map(|v| v.scale(&inv_m)).collect();
            for v in &values {
                assert!(
                    v.is_algebraic_integer(),
                    "inexact division by {m} in lambda^{m}: internal invariant violation"
                );
            }
            lams.push(ClassFunction { values });
        }
        VirtualCharacter::from_values(&self.table, lams.pop().unwrap())
            .expect("lambda of a virtual character is a virtual character")
    }

    /// gamma^n(a) = lambda^n(a + n - 1).
    pub fn gamma(&self, n: u32) -> VirtualCharacter {
        let shift = VirtualCharacter::constant(&self.table, &BigInt::from(i64::from(n as i32) - 1));
        self.add(&shift).unwrap().lambda(n)
    }

    /// det(rho) = lambda^{deg rho}(rho); requires an actual character.
    pub fn determinant(&self) -> Result<VirtualCharacter> {
        if self.coords.iter().any(Signed::is_negative) {
            return Err(Error::NotActualCharacter);
        }
        let deg = self.augmentation();
        let deg: u32 = u32::try_from(deg).map_err(|_| Error::NotActualCharacter)?;
        let det = self.lambda(deg);
        assert!(
            det.augmentation().is_one(),
            "determinant must be a line character"
        );
        Ok(det)
    }
}

/// Chern representative C_j(rho) of the `irrep`-th row, computed by both
/// gamma^j(rho - d) and the closed binomial form over exterior powers; the
/// two routes are asserted equal.
pub fn chern_representative(table: &Table, irrep: usize, j: u32) -> Result<VirtualCharacter> {
    if irrep >= table.row_count() {
        return Err(Error::OutOfRange(irrep));
    }
    let d = table.degrees[irrep];
    if j == 0 || u64::from(j) > d {
        return Err(Error::OutOfRange(j as usize));
    }
    let rho = VirtualCharacter::row(table, irrep);
    let via_gamma = chern_of_virtual(&rho, j);
    // C_j(rho) = sum_{i=0}^{j} (-1)^{j-i} binom(d-i, j-i) lambda^i(rho)
    let mut via_binomial = VirtualCharacter::zero(table);
    for i in 0..=j {
        let coeff = binomial(BigInt::from(d - u64::from(i)), BigInt::from(j - i));
        let signed = if (j - i).is_multiple_of(2) {
            coeff
        } else {
            -coeff
        };
        via_binomial = via_binomial.add(&rho.lambda(i).scale(&signed)).unwrap();
    }
    assert_eq!(
        via_gamma, via_binomial,
        "Chern representative routes disagree for row {irrep}, j={j}"
    );
    Ok(via_gamma)
}

/// C_j of an arbitrary virtual character: gamma^j(a - eps(a)).
pub fn chern_of_virtual(a: &VirtualCharacter, j: u32) -> VirtualCharacter {
    let eps = VirtualCharacter::constant(&a.table, &a.augmentation());
    a.sub(&eps).unwrap().gamma(j)
}

// --- character expression grammar -----------------------------------------
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := primary ('^' INT)*
//   primary:= INT | chi<k> | (lam|psi|gam)<n> '(' expr ')' | '(' expr ')'

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Chi(usize),
    Lam(u32),
    Psi(u64),
    Gam(u32),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> u64 {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap_or(u64::MAX)
    }

    fn next(&mut self) -> Result<(usize, Tok)> {
        self.skip_ws();
        let at = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            return Ok((at, Tok::End));
        };
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => Tok::Int(BigInt::from(self.number())),
            _ => {
                let rest = &self.src[self.pos..];
                let word = |w: &[u8]| rest.starts_with(w);
                if word(b"chi") {
                    self.pos += 3;
                    if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        return Err(self.error("expected an index after `chi`"));
                    }
                    Tok::Chi(self.number() as usize)
                } else if word(b"lam") || word(b"psi") || word(b"gam") {
                    let kind = &rest[..3];
                    self.pos += 3;
                    if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        return Err(self.error("expected an integer suffix on the operator"));
                    }
                    let n = self.number();
                    match kind {
                        b"lam" => Tok::Lam(n as u32),
                        b"psi" => Tok::Psi(n),
                        _ => Tok::Gam(n as u32),
                    }
                } else {
                    return Err(self.error("unexpected character"));
                }
            }
        };
        Ok((at, tok))
    }
}

struct ExprParser<'a> {
    lexer: Lexer<'a>,
    peeked: (usize, Tok),
    table: &'a Table,
}

impl<'a> ExprParser<'a> {
    fn new(table: &'a Table, src: &'a str) -> Result<ExprParser<'a>> {
        let mut lexer = Lexer::new(src);
        let peeked = lexer.next()?;
        Ok(ExprParser {
            lexer,
            peeked,
            table,
        })
    }

    fn bump(&mut self) -> Result<(usize, Tok)> {
        let t = self.peeked.clone();
        self.peeked = self.lexer.next()?;
        Ok(t)
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        let (at, t) = self.bump()?;
        if &t == tok {
            Ok(())
        } else {
            Err(Error::Parse {
                offset: at,
                message: format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<VirtualCharacter> {
        let mut acc = self.term()?;
        loop {
            match self.peeked.1 {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<VirtualCharacter> {
        let mut acc = self.unary()?;
        while self.peeked.1 == Tok::Star {
            self.bump()?;
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<VirtualCharacter> {
        if self.peeked.1 == Tok::Minus {
            self.bump()?;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<VirtualCharacter> {
        let base = self.primary()?;
        let mut acc = base;
        while self.peeked.1 == Tok::Caret {
            self.bump()?;
            let (at, t) = self.bump()?;
            let Tok::Int(e) = t else {
                return Err(Error::Parse {
                    offset: at,
                    message: "expected an exponent".into(),
                });
            };
            let e = u32::try_from(e).map_err(|_| Error::Parse {
                offset: at,
                message: "exponent too large".into(),
            })?;
            acc = acc.pow(e)?;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<VirtualCharacter> {
        let (at, t) = self.bump()?;
        match t {
            Tok::Int(n) => Ok(VirtualCharacter::constant(self.table, &n)),
            Tok::Chi(i) => {
                if i >= self.table.row_count() {
                    return Err(Error::Parse {
                        offset: at,
                        message: format!(
                            "chi{i} out of range (table has {} rows)",
                            self.table.row_count()
                        ),
                    });
                }
                Ok(VirtualCharacter::row(self.table, i))
            }
            Tok::Lam(n) => {
                self.expect(&Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner.lambda(n))
            }
            Tok::Psi(k) => {
                self.expect(&Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner.adams(k))
            }
            Tok::Gam(n) => {
                self.expect(&Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner.gamma(n))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            other => Err(Error::Parse {
                offset: at,
                message: format!("unexpected token {other:?}"),
            }),
        }
    }
}

/// Parse a virtual-character expression over the rows of `table`.
pub fn parse_character_expr(table: &Table, src: &str) -> Result<VirtualCharacter> {
    let mut p = ExprParser::new(table, src)?;
    let out = p.expr()?;
    let (at, t) = p.bump()?;
    if t != Tok::End {
        return Err(Error::Parse {
            offset: at,
            message: "trailing input".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartables::{complex_table, rational_table};
    use crate::groups::make_group;

    fn table(expr: &str) -> Table {
        complex_table(&make_group(expr).unwrap()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn class_fn(t: &Table, vals: &[i64]) -> ClassFunction {
        ClassFunction {
            values: vals
                .iter()
                .map(|&v| CycNum::from_int(t.conductor, v))
                .collect(),
        }
    }

    #[test]
    fn decompose_examples() {
        let t = table("Q8");
        let f = class_fn(&t, &[4, 4, 0, 0, 0]);
        let vc = VirtualCharacter::from_values(&t, f).unwrap();
        assert_eq!(vc.coords, ints(&[1, 1, 1, 1, 0]));

        // the regular character decomposes as the degree vector
        let reg = class_fn(&t, &[8, 0, 0, 0, 0]);
        let vc = VirtualCharacter::from_values(&t, reg).unwrap();
        assert_eq!(vc.coords, ints(&[1, 1, 1, 1, 2]));
        assert_eq!(vc, VirtualCharacter::regular(&t));

        // non-integer coefficients rejected
        let t2 = table("C2");
        let bad = ClassFunction {
            values: vec![
                CycNum::from_rational(2, BigRational::new(BigInt::one(), BigInt::from(2))),
                CycNum::from_rational(2, BigRational::new(BigInt::one(), BigInt::from(2))),
            ],
        };
        assert!(matches!(
            VirtualCharacter::from_values(&t2, bad),
            Err(Error::NotVirtualCharacter { .. })
        ));
        // integer coefficients pass even when negative
        let ok = class_fn(&t2, &[0, 2]);
        let vc = VirtualCharacter::from_values(&t2, ok).unwrap();
        assert_eq!(vc.coords, ints(&[1, -1]));
    }

    #[test]
    fn arithmetic_examples() {
        let t = table("Q8");
        let delta = VirtualCharacter::row(&t, 4);
        let rho1 = VirtualCharacter::row(&t, 1);
        assert_eq!(delta.mul(&rho1).unwrap(), delta);

        let td4 = table("D4");
        let d = VirtualCharacter::row(&td4, 4);
        let sq = d.mul(&d).unwrap();
        assert_eq!(sq.coords, ints(&[1, 1, 1, 1, 0]));

        let one = VirtualCharacter::trivial(&t);
        assert_eq!(delta.mul(&one).unwrap(), delta);
    }

    #[test]
    fn augmentation_examples() {
        let t = table("Q8");
        assert_eq!(VirtualCharacter::row(&t, 4).augmentation(), BigInt::from(2));
        assert_eq!(
            VirtualCharacter::regular(&t).augmentation(),
            BigInt::from(8)
        );
        let rho = VirtualCharacter::row(&t, 1);
        let one = VirtualCharacter::trivial(&t);
        assert_eq!(rho.sub(&one).unwrap().augmentation(), BigInt::zero());
    }

    #[test]
    fn adams_examples() {
        let t = table("Q8");
        let delta = VirtualCharacter::row(&t, 4);
        let psi2 = delta.adams(2);
        assert_eq!(psi2.coords, ints(&[-1, 1, 1, 1, 0]));
        assert_eq!(delta.adams(1), delta);

        let tc4 = table("C4");
        // the generator row has value zeta_4 at element 1
        let gen = (0..4)
            .find(|&i| tc4.rows[i].values[1] == CycNum::root_of_unity(4, 1))
            .unwrap();
        let rho = VirtualCharacter::row(&tc4, gen);
        let cubed = rho.adams(3);
        assert_eq!(cubed.values.values[1], CycNum::root_of_unity(4, 3));
    }

    #[test]
    fn lambda_examples() {
        let t = table("Q8");
        let delta = VirtualCharacter::row(&t, 4);
        assert_eq!(delta.lambda(2), VirtualCharacter::trivial(&t));
        assert!(delta.lambda(3).is_zero());
        assert_eq!(delta.lambda(1), delta);
    }

    #[test]
    fn gamma_examples() {
        let t = table("Q8");
        let one = VirtualCharacter::trivial(&t);
        // gamma^2 kills rho - 1 for any line character rho
        for i in 0..4 {
            let rho = VirtualCharacter::row(&t, i);
            assert!(rho.sub(&one).unwrap().gamma(2).is_zero());
        }
        let delta = VirtualCharacter::row(&t, 4);
        let two = VirtualCharacter::constant(&t, &BigInt::from(2));
        let u = delta.sub(&two).unwrap().gamma(2);
        assert_eq!(u, two.sub(&delta).unwrap());
        let vals: Vec<i64> = vec![0, 4, 2, 2, 2];
        assert_eq!(u.values, class_fn(&t, &vals));
        // gamma^0 = 1
        assert_eq!(delta.gamma(0), one);
    }

    #[test]
    fn chern_representative_examples() {
        let t = table("Q8");
        // C_1 of a line character is rho - 1
        let c1 = chern_representative(&t, 1, 1).unwrap();
        let rho = VirtualCharacter::row(&t, 1);
        let one = VirtualCharacter::trivial(&t);
        assert_eq!(c1, rho.sub(&one).unwrap());
        // C_2(Delta) = 2 - Delta
        let c2 = chern_representative(&t, 4, 2).unwrap();
        let delta = VirtualCharacter::row(&t, 4);
        let two = VirtualCharacter::constant(&t, &BigInt::from(2));
        assert_eq!(c2, two.sub(&delta).unwrap());
        // out-of-range index
        assert!(chern_representative(&t, 4, 3).is_err());
        // gamma^{d+1}(rho - d) = 0 (splitting-principle vanishing)
        let two_ = VirtualCharacter::constant(&t, &BigInt::from(2));
        assert!(delta.sub(&two_).unwrap().gamma(3).is_zero());
    }

    #[test]
    fn determinant_examples() {
        let t = table("Q8");
        let delta = VirtualCharacter::row(&t, 4);
        assert_eq!(delta.determinant().unwrap(), VirtualCharacter::trivial(&t));

        let td4 = table("D4");
        let d = VirtualCharacter::row(&td4, 4);
        let det = d.determinant().unwrap();
        // det(Delta) for D4 is the product of the two nontrivial rotations-fixing line characters
        let rho_eta: Vec<BigInt> = td4.decompose(&det.values).unwrap();
        assert_eq!(det.augmentation(), BigInt::one());
        assert_eq!(rho_eta.iter().filter(|c| !c.is_zero()).count(), 1);
        // det of a line character is itself
        let line = VirtualCharacter::row(&t, 2);
        assert_eq!(line.determinant().unwrap(), line);
        // virtual input refused
        let virt = VirtualCharacter::trivial(&t)
            .sub(&VirtualCharacter::row(&t, 1))
            .unwrap();
        assert!(matches!(virt.determinant(), Err(Error::NotActualCharacter)));
    }

    #[test]
    fn lambda_addition_axiom() {
        // lambda^k(a+b) = sum_{i+j=k} lambda^i(a) lambda^j(b)
        let t = table("Q8");
        let pairs = [
            (VirtualCharacter::row(&t, 4), VirtualCharacter::row(&t, 1)),
            (VirtualCharacter::row(&t, 4), VirtualCharacter::row(&t, 4)),
            (VirtualCharacter::regular(&t), VirtualCharacter::row(&t, 2)),
        ];
        for (a, b) in pairs {
            let sum = a.add(&b).unwrap();
            for k in 0..=4u32 {
                let mut rhs = VirtualCharacter::zero(&t);
                for i in 0..=k {
                    rhs = rhs
                        .add(&a.lambda(i).mul(&b.lambda(k - i)).unwrap())
                        .unwrap();
                }
                assert_eq!(sum.lambda(k), rhs, "k={k}");
            }
        }
    }

    #[test]
    fn adams_is_ring_endomorphism_and_composes() {
        for expr in ["C4", "C6", "Q8", "D3"] {
            let t = table(expr);
            let e = t.group.exponent();
            let a = VirtualCharacter::regular(&t);
            let b = VirtualCharacter::row(&t, t.row_count() - 1);
            for k in 1..=e {
                for l in 1..=e {
                    assert_eq!(a.adams(k).adams(l), a.adams(k * l), "{expr} psi comp");
                }
                assert_eq!(
                    a.mul(&b).unwrap().adams(k),
                    a.adams(k).mul(&b.adams(k)).unwrap(),
                    "{expr} psi mult"
                );
                assert_eq!(
                    a.add(&b).unwrap().adams(k),
                    a.adams(k).add(&b.adams(k)).unwrap(),
                    "{expr} psi add"
                );
            }
        }
    }

    #[test]
    fn gamma_vanishes_above_degree() {
        for expr in ["C4", "D3", "D4", "Q8"] {
            let t = table(expr);
            for i in 0..t.row_count() {
                let rho = VirtualCharacter::row(&t, i);
                let d = t.degrees[i] as u32;
                let shifted = rho
                    .sub(&VirtualCharacter::constant(&t, &BigInt::from(d)))
                    .unwrap();
                for j in d + 1..=d + 2 {
                    assert!(shifted.gamma(j).is_zero(), "{expr} row {i} gamma^{j}");
                }
            }
        }
    }

    #[test]
    fn lambda_series_inverse() {
        // lambda_T(a) * lambda_T(-a) = 1 up to degree 4
        let t = table("D4");
        let a = VirtualCharacter::row(&t, 4);
        let na = a.neg();
        for k in 1..=4u32 {
            let mut acc = VirtualCharacter::zero(&t);
            for i in 0..=k {
                acc = acc
                    .add(&a.lambda(i).mul(&na.lambda(k - i)).unwrap())
                    .unwrap();
            }
            assert!(acc.is_zero(), "degree {k}");
        }
    }

    #[test]
    fn both_chern_routes_agree_everywhere() {
        for expr in ["C4", "D3", "D4", "Q8", "C4xC2"] {
            let t = table(expr);
            for i in 0..t.row_count() {
                for j in 1..=t.degrees[i] as u32 {
                    // the cross-assertion lives inside chern_representative
                    chern_representative(&t, i, j).unwrap();
                }
            }
        }
        // rational tables too
        let g = make_group("C3").unwrap();
        let t = rational_table(&g).unwrap();
        for i in 0..t.row_count() {
            for j in 1..=t.degrees[i] as u32 {
                chern_representative(&t, i, j).unwrap();
            }
        }
    }

    #[test]
    fn expression_parser() {
        let t = table("Q8");
        let u = parse_character_expr(&t, "gam2(chi4 - 2)").unwrap();
        let delta = VirtualCharacter::row(&t, 4);
        let two = VirtualCharacter::constant(&t, &BigInt::from(2));
        assert_eq!(u, two.sub(&delta).unwrap());

        let p = parse_character_expr(&t, "chi1 * chi2 + psi2(chi4) - lam2(chi4)").unwrap();
        let expect = VirtualCharacter::row(&t, 1)
            .mul(&VirtualCharacter::row(&t, 2))
            .unwrap()
            .add(&VirtualCharacter::row(&t, 4).adams(2))
            .unwrap()
            .sub(&VirtualCharacter::trivial(&t))
            .unwrap();
        assert_eq!(p, expect);

        let sq = parse_character_expr(&t, "(chi1 - 1)^2").unwrap();
        let x = VirtualCharacter::row(&t, 1)
            .sub(&VirtualCharacter::trivial(&t))
            .unwrap();
        assert_eq!(sq, x.mul(&x).unwrap());

        match parse_character_expr(&t, "chi9 + 1") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_character_expr(&t, "chi1 $ 2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
