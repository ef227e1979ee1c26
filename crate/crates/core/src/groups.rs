//! Finite groups as validated multiplication tables, with conjugacy data,
//! power maps, and homomorphisms.
//!
//! Supported constructions: cyclic `C<n>`, dihedral `D<n>` (order 2n),
//! the quaternion group `Q8`, and direct products joined by `x`
//! (e.g. `C4xC2`). Element numbering is fixed per family so downstream
//! fixtures are stable: cyclic groups use residues, products use
//! lexicographic tuples, dihedral groups list rotations then reflections,
//! and Q8 is ordered 1, -1, i, -i, j, -j, k, -k.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

pub const ORDER_CAP: u64 = 128;

/// Construction shape of a group, used by character-table builders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion8,
    /// Direct product of atomic families, flattened.
    Product(Vec<Family>),
}

impl Family {
    fn order(&self) -> u64 {
        match self {
            Family::Cyclic(n) => *n,
            Family::Dihedral(n) => 2 * n,
            Family::Quaternion8 => 8,
            Family::Product(fs) => fs.iter().map(Family::order).product(),
        }
    }

    /// Atomic factors (a non-product family is its own single factor).
    pub fn factors(&self) -> Vec<&Family> {
        match self {
            Family::Product(fs) => fs.iter().collect(),
            other => vec![other],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::Dihedral(n) => write!(f, "D{n}"),
            Family::Quaternion8 => write!(f, "Q8"),
            Family::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

/// Conjugacy classes, chosen representatives, and the maps induced on
/// classes by g |-> g^k.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
    pub class_of: Vec<usize>,
    /// power_maps[k][c] = class of rep(c)^k, for k in 0..exponent
    pub power_maps: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// A finite group given by its full multiplication table over element
/// indices 0..order-1, index 0 the identity. Immutable after construction.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    names: Vec<String>,
    label: String,
    family: Family,
    exponent: u64,
    conj: ConjugacyData,
}

pub type Group = Arc<FiniteGroup>;

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> u64 {
        let mut acc = g;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, g);
            n += 1;
        }
        n
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn element_by_name(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::NoSuchElement(name.to_string()))
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conj
    }

    pub fn class_count(&self) -> usize {
        self.conj.classes.len()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The p such that |G| = p^k, if the order is a prime power > 1.
    pub fn p_group_prime(&self) -> Option<u64> {
        let mut n = self.order as u64;
        if n < 2 {
            return None;
        }
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                while n.is_multiple_of(p) {
                    n /= p;
                }
                return if n == 1 { Some(p) } else { None };
            }
            p += 1;
        }
        Some(n)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidInput(format!(
                    "element 0 is not an identity in {}",
                    self.label
                )));
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| self.mul(a, b) == 0 && self.mul(b, a) == 0) {
                return Err(Error::InvalidInput(format!(
                    "element {a} has no two-sided inverse in {}",
                    self.label
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidInput(format!(
                            "associativity fails at ({a},{b},{c}) in {}",
                            self.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn compute_conjugacy(order: usize, table: &[usize], exponent: u64) -> ConjugacyData {
    let mul = |a: usize, b: usize| table[a * order + b];
    let inv = |a: usize| (0..order).find(|&b| mul(a, b) == 0).unwrap();
    let mut class_of = vec![usize::MAX; order];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for g in 0..order {
        if class_of[g] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<usize> = (0..order).map(|h| mul(mul(h, g), inv(h))).collect();
        orbit.sort_unstable();
        orbit.dedup();
        let idx = classes.len();
        for &x in &orbit {
            class_of[x] = idx;
        }
        classes.push(orbit);
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut power_maps = Vec::with_capacity(exponent as usize);
    for k in 0..exponent {
        let map = reps
            .iter()
            .map(|&r| {
                let mut acc = 0;
                for _ in 0..k {
                    acc = mul(acc, r);
                }
                class_of[acc]
            })
            .collect();
        power_maps.push(map);
    }
    ConjugacyData {
        classes,
        reps,
        class_of,
        power_maps,
    }
}

fn finish_group(
    order: usize,
    table: Vec<usize>,
    names: Vec<String>,
    label: String,
    family: Family,
) -> Result<Group> {
    let mul = |a: usize, b: usize| table[a * order + b];
    let mut exponent = 1u64;
    for g in 0..order {
        let mut acc = g;
        let mut n = 1u64;
        while acc != 0 {
            acc = mul(acc, g);
            n += 1;
        }
        exponent = exponent.lcm(&n);
    }
    assert_eq!(order as u64 % exponent, 0, "exponent must divide the order");
    let conj = compute_conjugacy(order, &table, exponent);
    let group = FiniteGroup {
        order,
        table,
        names,
        label,
        family,
        exponent,
        conj,
    };
    group.validate()?;
    Ok(Arc::new(group))
}

fn cyclic_group(n: u64) -> Result<Group> {
    let order = n as usize;
    let mut table = vec![0usize; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = (a + b) % order;
        }
    }
    let names = (0..order).map(|a| a.to_string()).collect();
    finish_group(order, table, names, format!("C{n}"), Family::Cyclic(n))
}

fn dihedral_group(n: u64) -> Result<Group> {
    // elements 0..n are rotations r^j, n..2n are reflections s*r^j
    let n = n as usize;
    let order = 2 * n;
    let enc = |refl: usize, j: usize| refl * n + j % n;
    let mut table = vec![0usize; order * order];
    for a in 0..order {
        let (ra, ja) = (a / n, a % n);
        for bb in 0..order {
            let (rb, jb) = (bb / n, bb % n);
            // (s^ra r^ja)(s^rb r^jb) = s^{ra+rb} r^{jb + (-1)^rb ja}
            let j = if rb == 0 {
                ja + jb
            } else {
                (n - ja % n) % n + jb
            };
            table[a * order + bb] = enc((ra + rb) % 2, j % n);
        }
    }
    let mut names = Vec::with_capacity(order);
    for j in 0..n {
        names.push(match j {
            0 => "1".to_string(),
            1 => "r".to_string(),
            _ => format!("r{j}"),
        });
    }
    for j in 0..n {
        names.push(match j {
            0 => "s".to_string(),
            1 => "sr".to_string(),
            _ => format!("sr{j}"),
        });
    }
    finish_group(
        order,
        table,
        names,
        format!("D{}", n),
        Family::Dihedral(n as u64),
    )
}

fn quaternion_group() -> Result<Group> {
    // 0..8 = 1, -1, i, -i, j, -j, k, -k; encode as (sign, unit)
    let unit_of = |g: usize| (g % 2 == 1, g / 2); // (negative?, 0=1,1=i,2=j,3=k)
    let enc = |neg: bool, u: usize| 2 * u + usize::from(neg);
    let base_mul = |a: usize, b: usize| -> (bool, usize) {
        // multiplication of units 1,i,j,k
        match (a, b) {
            (0, x) => (false, x),
            (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 1) => (true, 3),
            (2, 3) => (false, 1),
            (3, 2) => (true, 1),
            (3, 1) => (false, 2),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let order = 8;
    let mut table = vec![0usize; order * order];
    for a in 0..order {
        for b in 0..order {
            let (na, ua) = unit_of(a);
            let (nb, ub) = unit_of(b);
            let (nm, um) = base_mul(ua, ub);
            table[a * order + b] = enc(na ^ nb ^ nm, um);
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(ToString::to_string)
        .collect();
    finish_group(order, table, names, "Q8".to_string(), Family::Quaternion8)
}

/// Direct product with lexicographic element numbering. Factor families are
/// flattened so that nested products have flat tuple names.
pub fn product_group(parts: &[Group]) -> Result<Group> {
    assert!(!parts.is_empty());
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    let order: usize = parts.iter().map(|g| g.order()).product();
    let strides: Vec<usize> = {
        let mut s = vec![1usize; parts.len()];
        for i in (0..parts.len() - 1).rev() {
            s[i] = s[i + 1] * parts[i + 1].order();
        }
        s
    };
    let digits = |g: usize| -> Vec<usize> {
        let mut rest = g;
        strides
            .iter()
            .zip(parts)
            .map(|(&st, p)| {
                let d = rest / st;
                rest %= st;
                debug_assert!(d < p.order());
                d
            })
            .collect()
    };
    let mut table = vec![0usize; order * order];
    for a in 0..order {
        let da = digits(a);
        for b in 0..order {
            let db = digits(b);
            let mut prod = 0;
            for (t, stride) in strides.iter().enumerate() {
                prod += parts[t].mul(da[t], db[t]) * stride;
            }
            table[a * order + b] = prod;
        }
    }
    let strip = |s: &str| -> String {
        if s.starts_with('(') && s.ends_with(')') {
            s[1..s.len() - 1].to_string()
        } else {
            s.to_string()
        }
    };
    let names: Vec<String> = (0..order)
        .map(|g| {
            let parts_names: Vec<String> = digits(g)
                .iter()
                .zip(parts)
                .map(|(&d, p)| strip(p.name_of(d)))
                .collect();
            format!("({})", parts_names.join(","))
        })
        .collect();
    let mut families = Vec::new();
    for p in parts {
        match p.family() {
            Family::Product(fs) => families.extend(fs.clone()),
            other => families.push(other.clone()),
        }
    }
    let label: String = parts
        .iter()
        .map(|p| p.label().to_string())
        .collect::<Vec<_>>()
        .join("x");
    finish_group(order, table, names, label, Family::Product(families))
}

/// Parse and build a group expression: atoms `C<n>`, `D<n>`, `Q8` joined by
/// `x`. Orders above [`ORDER_CAP`] are refused unless `force` is set.
pub fn make_group_with(expr: &str, force: bool) -> Result<Group> {
    let atoms = parse_group_expr(expr)?;
    let order: u64 = atoms.iter().map(Family::order).product();
    if order > ORDER_CAP && !force {
        return Err(Error::OrderCap {
            order,
            cap: ORDER_CAP,
        });
    }
    let parts: Vec<Group> = atoms
        .iter()
        .map(|a| match a {
            Family::Cyclic(n) => cyclic_group(*n),
            Family::Dihedral(n) => dihedral_group(*n),
            Family::Quaternion8 => quaternion_group(),
            Family::Product(_) => unreachable!(),
        })
        .collect::<Result<_>>()?;
    product_group(&parts)
}

pub fn make_group(expr: &str) -> Result<Group> {
    make_group_with(expr, false)
}

fn parse_group_expr(src: &str) -> Result<Vec<Family>> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let mut atoms = Vec::new();
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.to_string(),
    };
    loop {
        match bytes.get(pos) {
            Some(b'C') | Some(b'D') => {
                let kind = bytes[pos];
                pos += 1;
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(err(pos, "expected an integer after the family letter"));
                }
                let n: u64 = src[start..pos]
                    .parse()
                    .map_err(|_| err(start, "integer out of range"))?;
                if n == 0 {
                    return Err(err(start, "group order parameter must be positive"));
                }
                atoms.push(if kind == b'C' {
                    Family::Cyclic(n)
                } else {
                    Family::Dihedral(n)
                });
            }
            Some(b'Q') => {
                if src[pos..].starts_with("Q8") {
                    pos += 2;
                    atoms.push(Family::Quaternion8);
                } else {
                    return Err(err(pos, "unknown atom; expected Q8"));
                }
            }
            Some(_) => return Err(err(pos, "expected a group atom (C<n>, D<n>, Q8)")),
            None => return Err(err(pos, "expected a group atom, found end of input")),
        }
        match bytes.get(pos) {
            None => break,
            Some(b'x') => pos += 1,
            Some(_) => return Err(err(pos, "expected `x` between atoms")),
        }
    }
    Ok(atoms)
}

/// A homomorphism between constructed groups, validated exhaustively.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: Group,
    pub target: Group,
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Group, target: Group, images: Vec<usize>) -> Result<GroupHom> {
        assert_eq!(images.len(), source.order());
        let hom = GroupHom {
            source,
            target,
            images,
        };
        hom.validate()?;
        Ok(hom)
    }

    fn validate(&self) -> Result<()> {
        if self.images[0] != 0 {
            return Err(Error::NotAHomomorphism {
                a: "1".into(),
                b: "1".into(),
            });
        }
        let n = self.source.order();
        for a in 0..n {
            for b in 0..n {
                if self.images[self.source.mul(a, b)]
                    != self.target.mul(self.images[a], self.images[b])
                {
                    return Err(Error::NotAHomomorphism {
                        a: self.source.name_of(a).to_string(),
                        b: self.source.name_of(b).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &im in &self.images {
            seen[im] = true;
        }
        self.source.order() == self.target.order() && seen.iter().all(|&s| s)
    }

    pub fn identity(g: &Group) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            images: (0..g.order()).collect(),
        }
    }
}

/// The embedding of the cyclic group generated by `g` into `target`,
/// sending the canonical generator of C_{ord(g)} to `g`.
pub fn cyclic_embedding(target: &Group, g: usize) -> Result<GroupHom> {
    assert!(g < target.order());
    let ord = target.element_order(g);
    let source = make_group_with(&format!("C{ord}"), true)?;
    let images = (0..ord).map(|i| target.pow(g, i)).collect();
    GroupHom::new(source, target.clone(), images)
}

/// The unique homomorphism extending images given on a generating set.
/// Fails if the images are inconsistent or the set does not generate.
pub fn hom_from_images(
    source: &Group,
    target: &Group,
    gen_images: &[(usize, usize)],
) -> Result<GroupHom> {
    let n = source.order();
    let mut image: Vec<Option<usize>> = vec![None; n];
    image[0] = Some(0);
    for &(g, im) in gen_images {
        if g >= n || im >= target.order() {
            return Err(Error::OutOfRange(g.max(im)));
        }
        if image[g].is_some_and(|old| old != im) {
            return Err(Error::NotAHomomorphism {
                a: source.name_of(g).to_string(),
                b: "1".to_string(),
            });
        }
        image[g] = Some(im);
    }
    // close under products until stable
    loop {
        let mut changed = false;
        let known: Vec<usize> = (0..n).filter(|&g| image[g].is_some()).collect();
        for &a in &known {
            for &b in &known {
                let ab = source.mul(a, b);
                let fab = target.mul(image[a].unwrap(), image[b].unwrap());
                match image[ab] {
                    None => {
                        image[ab] = Some(fab);
                        changed = true;
                    }
                    Some(old) if old != fab => {
                        return Err(Error::NotAHomomorphism {
                            a: source.name_of(a).to_string(),
                            b: source.name_of(b).to_string(),
                        });
                    }
                    _ => {}
                }
            }
        }
        if !changed {
            break;
        }
    }
    if image.iter().any(Option::is_none) {
        return Err(Error::NotGenerating);
    }
    GroupHom::new(
        source.clone(),
        target.clone(),
        image.into_iter().flatten().collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_products() {
        let c4 = make_group("C4").unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.class_count(), 4);
        assert_eq!(c4.exponent(), 4);

        let g = make_group("C4xC2").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.name_of(1), "(0,1)");
        assert_eq!(g.name_of(2), "(1,0)");
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 4);

        let h = make_group("C2xC2xC2").unwrap();
        assert_eq!(h.order(), 8);
        assert_eq!(h.name_of(5), "(1,0,1)");
        assert_eq!(h.family().factors().len(), 3);
    }

    #[test]
    fn quaternion_structure() {
        let q8 = make_group("Q8").unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.class_count(), 5);
        let classes = &q8.conjugacy().classes;
        assert_eq!(classes[0], vec![0]);
        assert_eq!(classes[1], vec![1]);
        assert_eq!(classes[2], vec![2, 3]);
        assert_eq!(classes[3], vec![4, 5]);
        assert_eq!(classes[4], vec![6, 7]);
        // i^2 = -1, i*j = k
        let (i, j, k) = (2usize, 4usize, 6usize);
        assert_eq!(q8.mul(i, i), 1);
        assert_eq!(q8.mul(i, j), k);
        assert_eq!(q8.mul(j, i), 7); // -k
        assert_eq!(q8.exponent(), 4);
        // power map squares the class of i to the class of -1
        assert_eq!(q8.conjugacy().power_maps[2][2], 1);
    }

    #[test]
    fn dihedral_structure() {
        let d3 = make_group("D3").unwrap();
        assert_eq!(d3.order(), 6);
        assert_eq!(d3.class_count(), 3);
        // reflections square to the identity
        let refl_class = d3.conjugacy().class_of[3];
        assert_eq!(d3.conjugacy().power_maps[2][refl_class], 0);
        assert_eq!(d3.name_of(3), "s");
        assert_eq!(d3.name_of(4), "sr");
        // class counts for odd primes p: identity, reflections, (p-1)/2 rotation classes
        for p in [3u64, 5, 7] {
            let dp = make_group(&format!("D{p}")).unwrap();
            assert_eq!(dp.class_count() as u64, (p + 3) / 2);
        }
        let d4 = make_group("D4").unwrap();
        assert_eq!(d4.class_count(), 5);
    }

    #[test]
    fn abelian_power_map_composition() {
        let g = make_group("C6").unwrap();
        assert_eq!(g.class_count(), 6);
        let e = g.exponent();
        let pm = &g.conjugacy().power_maps;
        for k in 0..e {
            for l in 0..e {
                let kl = (k * l) % e;
                for c in 0..g.class_count() {
                    assert_eq!(pm[kl as usize][c], pm[k as usize][pm[l as usize][c]]);
                }
            }
        }
    }

    #[test]
    fn power_map_at_exponent_is_trivial() {
        for expr in ["C4", "C6", "D3", "D4", "Q8", "C4xC2"] {
            let g = make_group(expr).unwrap();
            let e = g.exponent() as usize;
            // exponent-th power map is the constant map to the identity class
            for (c, &rep) in g.conjugacy().reps.iter().enumerate() {
                assert_eq!(g.pow(rep, e as u64), 0, "{expr} class {c} rep {rep}");
            }
            assert_eq!(
                g.conjugacy().power_maps[1],
                (0..g.class_count()).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match make_group("C4yC2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match make_group("C") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(make_group("Q7").is_err());
        assert!(make_group("").is_err());
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            make_group("C64xC64"),
            Err(Error::OrderCap { order: 4096, .. })
        ));
        assert!(make_group_with("C256", true).is_ok());
    }

    #[test]
    fn cyclic_embedding_examples() {
        let q8 = make_group("Q8").unwrap();
        let h = cyclic_embedding(&q8, 2).unwrap(); // <i>
        assert_eq!(h.source.order(), 4);
        assert_eq!(h.apply(1), 2);
        assert_eq!(h.apply(2), 1); // i^2 = -1

        let c1 = cyclic_embedding(&q8, 0).unwrap();
        assert_eq!(c1.source.order(), 1);

        let g = make_group("C4xC4").unwrap();
        let diag = g.element_by_name("(1,1)").unwrap();
        let emb = cyclic_embedding(&g, diag).unwrap();
        assert_eq!(emb.source.order(), 4);
        assert_eq!(emb.apply(2), g.element_by_name("(2,2)").unwrap());
    }

    #[test]
    fn hom_from_images_examples() {
        let g = make_group("C4xC4").unwrap();
        let e10 = g.element_by_name("(1,0)").unwrap();
        let e01 = g.element_by_name("(0,1)").unwrap();
        let e03 = g.element_by_name("(0,3)").unwrap();
        let tau = hom_from_images(&g, &g, &[(e10, e10), (e01, e03)]).unwrap();
        assert!(tau.is_bijective());
        assert_eq!(
            tau.apply(g.element_by_name("(1,1)").unwrap()),
            g.element_by_name("(1,3)").unwrap()
        );

        let c2 = make_group("C2").unwrap();
        let c4 = make_group("C4").unwrap();
        let ok = hom_from_images(&c2, &c4, &[(1, 2)]).unwrap();
        assert_eq!(ok.apply(1), 2);
        assert!(matches!(
            hom_from_images(&c2, &c4, &[(1, 1)]),
            Err(Error::NotAHomomorphism { .. })
        ));
        // non-generating set
        assert!(matches!(
            hom_from_images(&c4, &c4, &[(2, 2)]),
            Err(Error::NotGenerating)
        ));
    }

    #[test]
    fn element_lookup() {
        let q8 = make_group("Q8").unwrap();
        assert_eq!(q8.element_by_name("-1").unwrap(), 1);
        assert_eq!(q8.element_by_name("k").unwrap(), 6);
        assert!(q8.element_by_name("w").is_err());
    }
}
