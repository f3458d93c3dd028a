//! Element arithmetic and enumeration for every realization.

use std::sync::OnceLock;

use super::element::Element;
use super::perm::{self, AllPerms, Perm};
use super::spec::{GroupSpec, MetacyclicParams, PGroupParams};
use crate::arith::{self, checked_lcm, gcd};
use crate::error::{Error, Result};

/// Default cap on full enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 20_000_000;

/// Environment variable overriding [`DEFAULT_ENUMERATION_CAP`].
pub const CAP_ENV_VAR: &str = "GENTOTIENT_MAX_ELEMENTS";

/// Symmetric and alternating groups are only enumerated up to this degree.
pub const MAX_ENUMERATED_DEGREE: usize = 10;

pub fn enumeration_cap() -> u64 {
    std::env::var(CAP_ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

pub type Elements<'a> = Box<dyn Iterator<Item = Element> + Send + 'a>;

/// Standard generators of M11 on points `0..11`:
/// `(0 1 2 3 4 5 6 7 8 9 10)` and `(2 6 10 7)(3 9 4 5)`.
pub fn mathieu11_generators() -> [Perm; 2] {
    [
        Perm::from_cycles(11, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]).expect("valid cycle"),
        Perm::from_cycles(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]]).expect("valid cycles"),
    ]
}

fn mathieu11_elements() -> Result<&'static [Perm]> {
    static CELL: OnceLock<Vec<Perm>> = OnceLock::new();
    if let Some(v) = CELL.get() {
        return Ok(v);
    }
    let els = perm::closure(11, &mathieu11_generators(), 7920)?;
    if els.len() != 7920 {
        return Err(Error::Integrity(format!(
            "M11 generators close to {} elements instead of 7920",
            els.len()
        )));
    }
    Ok(CELL.get_or_init(|| els))
}

fn shape(g: &GroupSpec, x: &Element) -> Error {
    Error::Realization(format!("element {x:?} does not belong to {g}"))
}

impl GroupSpec {
    pub fn identity(&self) -> Element {
        match self {
            GroupSpec::Cyclic { .. } => Element::Residue(0),
            GroupSpec::Abelian(t) => Element::Tuple(vec![0; t.moduli().len()]),
            GroupSpec::ElementaryAbelian { rank, .. } => Element::Tuple(vec![0; *rank as usize]),
            GroupSpec::Metacyclic { .. } => Element::Meta { i: 0, j: 0 },
            GroupSpec::PGroup(p) => Element::Affine {
                vector: vec![0; p.n as usize - 1],
                power: 0,
            },
            GroupSpec::Symmetric { degree } | GroupSpec::Alternating { degree } => {
                Element::Perm(Perm::identity(*degree))
            }
            GroupSpec::Mathieu11 => Element::Perm(Perm::identity(11)),
            GroupSpec::Permutation(g) => Element::Perm(Perm::identity(g.degree())),
            GroupSpec::CayleyTable(_) => Element::Index(0),
            GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. } => Element::Product(
                self.product_factors()
                    .expect("product spec")
                    .iter()
                    .map(|f| f.identity())
                    .collect(),
            ),
        }
    }

    /// Checks that `x` is a canonical payload of this realization.
    pub fn validate(&self, x: &Element) -> Result<()> {
        let ok = match (self, x) {
            (GroupSpec::Cyclic { n }, Element::Residue(a)) => a < n,
            (GroupSpec::Abelian(t), Element::Tuple(v)) => {
                let mods = t.moduli();
                v.len() == mods.len() && v.iter().zip(&mods).all(|(a, q)| a < q)
            }
            (GroupSpec::ElementaryAbelian { p, rank }, Element::Tuple(v)) => {
                v.len() == *rank as usize && v.iter().all(|a| a < p)
            }
            (GroupSpec::Metacyclic { params, .. }, Element::Meta { i, j }) => {
                *i < params.n && *j < params.m
            }
            (GroupSpec::PGroup(p), Element::Affine { vector, power }) => {
                vector.len() == p.n as usize - 1 && vector.iter().all(|a| *a < p.p) && *power < p.q
            }
            (GroupSpec::Symmetric { degree }, Element::Perm(q)) => q.degree() == *degree,
            (GroupSpec::Alternating { degree }, Element::Perm(q)) => {
                q.degree() == *degree && q.is_even()
            }
            (GroupSpec::Mathieu11, Element::Perm(q)) => {
                q.degree() == 11 && mathieu11_elements()?.contains(q)
            }
            (GroupSpec::Permutation(g), Element::Perm(q)) => {
                q.degree() == g.degree() && g.member_set().contains(q)
            }
            (GroupSpec::CayleyTable(t), Element::Index(i)) => (*i as usize) < t.side(),
            (GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. }, Element::Product(xs)) => {
                let fs = self.product_factors().expect("product spec");
                if fs.len() != xs.len() {
                    false
                } else {
                    for (f, x) in fs.iter().zip(xs) {
                        f.validate(x)?;
                    }
                    true
                }
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(shape(self, x))
        }
    }

    /// Group product `x * y`.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        match (self, x, y) {
            (GroupSpec::Cyclic { n }, Element::Residue(a), Element::Residue(b)) => {
                if a >= n || b >= n {
                    return Err(shape(self, if a >= n { x } else { y }));
                }
                Ok(Element::Residue(((*a as u128 + *b as u128) % *n as u128) as u64))
            }
            (GroupSpec::Abelian(t), Element::Tuple(u), Element::Tuple(v)) => {
                let mods = t.moduli();
                if u.len() != mods.len() || v.len() != mods.len() {
                    return Err(shape(self, x));
                }
                Ok(Element::Tuple(
                    u.iter()
                        .zip(v)
                        .zip(&mods)
                        .map(|((a, b), q)| (a + b) % q)
                        .collect(),
                ))
            }
            (GroupSpec::ElementaryAbelian { p, rank }, Element::Tuple(u), Element::Tuple(v)) => {
                if u.len() != *rank as usize || v.len() != *rank as usize {
                    return Err(shape(self, x));
                }
                Ok(Element::Tuple(
                    u.iter().zip(v).map(|(a, b)| (a + b) % p).collect(),
                ))
            }
            (
                GroupSpec::Metacyclic { params, .. },
                Element::Meta { i, j },
                Element::Meta { i: k, j: l },
            ) => {
                if *i >= params.n || *k >= params.n || *j >= params.m || *l >= params.m {
                    return Err(shape(self, x));
                }
                let (i, j) = meta_mul(params, (*i, *j), (*k, *l));
                Ok(Element::Meta { i, j })
            }
            (
                GroupSpec::PGroup(pp),
                Element::Affine { vector: v, power: c },
                Element::Affine { vector: w, power: d },
            ) => {
                let len = pp.n as usize - 1;
                if v.len() != len || w.len() != len || *c >= pp.q || *d >= pp.q {
                    return Err(shape(self, x));
                }
                Ok(affine_mul(pp, v, *c, w, *d))
            }
            (
                GroupSpec::Symmetric { degree } | GroupSpec::Alternating { degree },
                Element::Perm(a),
                Element::Perm(b),
            ) => {
                if a.degree() != *degree || b.degree() != *degree {
                    return Err(shape(self, x));
                }
                Ok(Element::Perm(a.compose(b)))
            }
            (GroupSpec::Mathieu11, Element::Perm(a), Element::Perm(b)) => {
                if a.degree() != 11 || b.degree() != 11 {
                    return Err(shape(self, x));
                }
                Ok(Element::Perm(a.compose(b)))
            }
            (GroupSpec::Permutation(g), Element::Perm(a), Element::Perm(b)) => {
                if a.degree() != g.degree() || b.degree() != g.degree() {
                    return Err(shape(self, x));
                }
                Ok(Element::Perm(a.compose(b)))
            }
            (GroupSpec::CayleyTable(t), Element::Index(a), Element::Index(b)) => {
                let (a, b) = (*a as usize, *b as usize);
                if a >= t.side() || b >= t.side() {
                    return Err(shape(self, x));
                }
                Ok(Element::Index(t.mul(a, b) as u32))
            }
            (
                GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. },
                Element::Product(xs),
                Element::Product(ys),
            ) => {
                let fs = self.product_factors().expect("product spec");
                if xs.len() != fs.len() || ys.len() != fs.len() {
                    return Err(shape(self, x));
                }
                fs.iter()
                    .zip(xs.iter().zip(ys))
                    .map(|(f, (a, b))| f.multiply(a, b))
                    .collect::<Result<Vec<_>>>()
                    .map(Element::Product)
            }
            _ => Err(shape(self, x)),
        }
    }

    pub fn power(&self, x: &Element, mut e: u64) -> Result<Element> {
        let mut acc = self.identity();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Order of `x`: least `t >= 1` with `x^t = 1`.
    pub fn element_order(&self, x: &Element) -> Result<u64> {
        match (self, x) {
            (GroupSpec::Cyclic { n }, Element::Residue(a)) if a < n => Ok(n / gcd(*a, *n)),
            (GroupSpec::Abelian(t), Element::Tuple(v)) => {
                self.validate(x)?;
                let mut o = 1;
                for (a, q) in v.iter().zip(t.moduli()) {
                    o = checked_lcm(o, q / gcd(*a, q))?;
                }
                Ok(o)
            }
            (GroupSpec::ElementaryAbelian { p, .. }, Element::Tuple(v)) => {
                self.validate(x)?;
                Ok(if v.iter().all(|&a| a == 0) { 1 } else { *p })
            }
            (
                GroupSpec::Symmetric { .. }
                | GroupSpec::Alternating { .. }
                | GroupSpec::Mathieu11
                | GroupSpec::Permutation(_),
                Element::Perm(q),
            ) => {
                if q.degree() != self.perm_degree() {
                    return Err(shape(self, x));
                }
                Ok(q.order())
            }
            (GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. }, Element::Product(xs)) => {
                let fs = self.product_factors().expect("product spec");
                if fs.len() != xs.len() {
                    return Err(shape(self, x));
                }
                let mut o = 1;
                for (f, a) in fs.iter().zip(xs) {
                    o = checked_lcm(o, f.element_order(a)?)?;
                }
                Ok(o)
            }
            (GroupSpec::Metacyclic { params, .. }, Element::Meta { .. }) => {
                self.order_by_powers(x, params.order())
            }
            (GroupSpec::PGroup(p), Element::Affine { .. }) => self.order_by_powers(x, p.order()),
            (GroupSpec::CayleyTable(t), Element::Index(_)) => {
                self.order_by_powers(x, t.side() as u64)
            }
            _ => Err(shape(self, x)),
        }
    }

    /// Order via exponentiation: starting from a multiple of the order,
    /// strip prime factors while the reduced power is still the identity.
    fn order_by_powers(&self, x: &Element, multiple: u64) -> Result<u64> {
        self.validate(x)?;
        let id = self.identity();
        let mut t = multiple;
        for (p, k) in arith::factorize(multiple) {
            for _ in 0..k {
                if self.power(x, t / p)? == id {
                    t /= p;
                } else {
                    break;
                }
            }
        }
        Ok(t)
    }

    fn perm_degree(&self) -> usize {
        match self {
            GroupSpec::Symmetric { degree } | GroupSpec::Alternating { degree } => *degree,
            GroupSpec::Mathieu11 => 11,
            GroupSpec::Permutation(g) => g.degree(),
            _ => 0,
        }
    }

    /// True if the group can be listed element by element under `cap`.
    pub fn is_enumerable(&self, cap: u64) -> bool {
        self.check_enumerable(cap).is_ok()
    }

    fn check_enumerable(&self, cap: u64) -> Result<()> {
        let order = self.order();
        let small = self.order_u64().filter(|&o| o <= cap);
        if small.is_none() {
            return Err(Error::limit(format!("enumeration of {self}"), order, cap));
        }
        match self {
            GroupSpec::Symmetric { degree } | GroupSpec::Alternating { degree }
                if *degree > MAX_ENUMERATED_DEGREE =>
            {
                Err(Error::limit(
                    format!("enumeration of {self} (degree {degree})"),
                    order,
                    MAX_ENUMERATED_DEGREE as u64,
                ))
            }
            GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. } => {
                for f in self.product_factors().expect("product spec") {
                    f.check_enumerable(cap)?;
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Every element exactly once. Fails if the declared order exceeds the
    /// enumeration cap.
    pub fn enumerate(&self) -> Result<Elements<'_>> {
        self.enumerate_with_cap(enumeration_cap())
    }

    pub fn enumerate_with_cap(&self, cap: u64) -> Result<Elements<'_>> {
        self.check_enumerable(cap)?;
        Ok(match self {
            GroupSpec::Cyclic { n } => Box::new((0..*n).map(Element::Residue)),
            GroupSpec::Abelian(t) => Box::new(Odometer::new(t.moduli()).map(Element::Tuple)),
            GroupSpec::ElementaryAbelian { p, rank } => {
                Box::new(Odometer::new(vec![*p; *rank as usize]).map(Element::Tuple))
            }
            GroupSpec::Metacyclic { params, .. } => {
                let (m, n) = (params.m, params.n);
                Box::new((0..n).flat_map(move |i| (0..m).map(move |j| Element::Meta { i, j })))
            }
            GroupSpec::PGroup(pp) => {
                let mut moduli = vec![pp.p; pp.n as usize - 1];
                moduli.push(pp.q);
                Box::new(Odometer::new(moduli).map(|mut v| {
                    let power = v.pop().expect("power coordinate");
                    Element::Affine { vector: v, power }
                }))
            }
            GroupSpec::Symmetric { degree } => Box::new(AllPerms::new(*degree).map(Element::Perm)),
            GroupSpec::Alternating { degree } => Box::new(
                AllPerms::new(*degree)
                    .filter(|p| p.is_even())
                    .map(Element::Perm),
            ),
            GroupSpec::Mathieu11 => {
                Box::new(mathieu11_elements()?.iter().cloned().map(Element::Perm))
            }
            GroupSpec::Permutation(g) => Box::new(g.elements().iter().cloned().map(Element::Perm)),
            GroupSpec::CayleyTable(t) => Box::new((0..t.side() as u32).map(Element::Index)),
            GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. } => {
                let fs = self.product_factors().expect("product spec");
                let lists = fs
                    .iter()
                    .map(|f| f.enumerate_with_cap(cap).map(|it| it.collect::<Vec<_>>()))
                    .collect::<Result<Vec<_>>>()?;
                let moduli = lists.iter().map(|l| l.len() as u64).collect();
                Box::new(Odometer::new(moduli).map(move |idx| {
                    Element::Product(
                        idx.iter()
                            .zip(&lists)
                            .map(|(&k, l)| l[k as usize].clone())
                            .collect(),
                    )
                }))
            }
        })
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> Result<Vec<Element>> {
        let unit_vectors = |len: usize| -> Vec<Element> {
            (0..len)
                .map(|k| {
                    let mut v = vec![0; len];
                    v[k] = 1;
                    Element::Tuple(v)
                })
                .collect()
        };
        Ok(match self {
            GroupSpec::Cyclic { n } => {
                if *n > 1 {
                    vec![Element::Residue(1)]
                } else {
                    vec![]
                }
            }
            GroupSpec::Abelian(t) => unit_vectors(t.moduli().len()),
            GroupSpec::ElementaryAbelian { rank, .. } => unit_vectors(*rank as usize),
            GroupSpec::Metacyclic { params, .. } => vec![
                Element::Meta {
                    i: 0,
                    j: 1 % params.m,
                },
                Element::Meta {
                    i: 1 % params.n,
                    j: 0,
                },
            ],
            GroupSpec::PGroup(pp) => {
                let len = pp.n as usize - 1;
                let mut gens: Vec<Element> = (0..len)
                    .map(|k| {
                        let mut v = vec![0; len];
                        v[k] = 1;
                        Element::Affine {
                            vector: v,
                            power: 0,
                        }
                    })
                    .collect();
                gens.push(Element::Affine {
                    vector: vec![0; len],
                    power: 1 % pp.q,
                });
                gens
            }
            GroupSpec::Symmetric { degree } => {
                let d = *degree;
                if d < 2 {
                    vec![]
                } else {
                    let cycle: Vec<usize> = (0..d).collect();
                    vec![
                        Element::Perm(Perm::from_cycles(d, &[&[0, 1]])?),
                        Element::Perm(Perm::from_cycles(d, &[&cycle])?),
                    ]
                }
            }
            GroupSpec::Alternating { degree } => {
                let d = *degree;
                (2..d)
                    .map(|k| Perm::from_cycles(d, &[&[0, 1, k]]).map(Element::Perm))
                    .collect::<Result<_>>()?
            }
            GroupSpec::Mathieu11 => mathieu11_generators().into_iter().map(Element::Perm).collect(),
            GroupSpec::Permutation(g) => g.generators().iter().cloned().map(Element::Perm).collect(),
            GroupSpec::CayleyTable(t) => (1..t.side() as u32).map(Element::Index).collect(),
            GroupSpec::DirectProduct(_) | GroupSpec::Hamiltonian { .. } => {
                let fs = self.product_factors().expect("product spec");
                let ids: Vec<Element> = fs.iter().map(|f| f.identity()).collect();
                let mut gens = Vec::new();
                for (k, f) in fs.iter().enumerate() {
                    for g in f.generators()? {
                        let mut parts = ids.clone();
                        parts[k] = g;
                        gens.push(Element::Product(parts));
                    }
                }
                gens
            }
        })
    }
}

/// `(b^i a^j)(b^k a^l) = b^{i+k} a^{j r^k + l}`, reducing `b^n = a^s`.
pub(crate) fn meta_mul(p: &MetacyclicParams, (i, j): (u64, u64), (k, l): (u64, u64)) -> (u64, u64) {
    let m = p.m;
    let sum = i + k;
    let wraps = sum / p.n;
    let a = arith::mul_mod(j, arith::pow_mod(p.r, k, m), m);
    let a = (a + l) % m;
    let a = (a + arith::mul_mod(p.s, wraps, m)) % m;
    (sum % p.n, a % m)
}

/// `(v, c)(w, d) = (v + t^c w, c + d)`.
fn affine_mul(pp: &PGroupParams, v: &[u64], c: u64, w: &[u64], d: u64) -> Element {
    let scale = arith::pow_mod(pp.t, c, pp.p);
    Element::Affine {
        vector: v
            .iter()
            .zip(w)
            .map(|(a, b)| (a + arith::mul_mod(scale, *b, pp.p)) % pp.p)
            .collect(),
        power: (c + d) % pp.q,
    }
}

/// Mixed-radix counter over `0..moduli[0] x 0..moduli[1] x ...`, last digit
/// fastest.
struct Odometer {
    moduli: Vec<u64>,
    current: Option<Vec<u64>>,
}

impl Odometer {
    fn new(moduli: Vec<u64>) -> Self {
        let current = if moduli.contains(&0) {
            None
        } else {
            Some(vec![0; moduli.len()])
        };
        Odometer { moduli, current }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        let mut k = succ.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            succ[k] += 1;
            if succ[k] < self.moduli[k] {
                self.current = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn dihedral_normal_form_products() {
        let d8 = families::metacyclic(4, 2, 0, 3).unwrap();
        let b = Element::Meta { i: 1, j: 0 };
        let a = Element::Meta { i: 0, j: 1 };
        assert_eq!(d8.multiply(&b, &a).unwrap(), Element::Meta { i: 1, j: 1 });
        // a b = b a^3
        assert_eq!(d8.multiply(&a, &b).unwrap(), Element::Meta { i: 1, j: 3 });
    }

    #[test]
    fn quaternion_b_squared_is_a_squared() {
        let q8 = families::metacyclic(4, 2, 2, 3).unwrap();
        let b = Element::Meta { i: 1, j: 0 };
        assert_eq!(q8.multiply(&b, &b).unwrap(), Element::Meta { i: 0, j: 2 });
    }

    #[test]
    fn cyclic_orders() {
        let z12 = families::cyclic(12).unwrap();
        assert_eq!(z12.element_order(&Element::Residue(8)).unwrap(), 3);
        assert_eq!(z12.element_order(&z12.identity()).unwrap(), 1);
    }

    #[test]
    fn shape_mismatch_is_a_realization_error() {
        let z4 = families::cyclic(4).unwrap();
        let err = z4
            .multiply(&Element::Residue(1), &Element::Meta { i: 0, j: 0 })
            .unwrap_err();
        assert!(matches!(err, Error::Realization(_)));
        assert!(z4.multiply(&Element::Residue(4), &Element::Residue(0)).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(families::cyclic(1).unwrap().enumerate().unwrap().count(), 1);
        assert_eq!(
            families::metacyclic(4, 2, 2, 3).unwrap().enumerate().unwrap().count(),
            8
        );
        let p = families::p_group_p(7, 3, 3).unwrap();
        assert_eq!(p.enumerate().unwrap().count(), 147);
        let prod = families::direct_product(vec![
            families::cyclic(3).unwrap(),
            families::symmetric(3).unwrap(),
        ])
        .unwrap();
        assert_eq!(prod.enumerate().unwrap().count(), 18);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let z = families::cyclic(100).unwrap();
        let err = z.enumerate_with_cap(99).err().unwrap();
        assert!(matches!(err, Error::ResourceLimit { cap: 99, .. }));
        let s11 = families::symmetric(11).unwrap();
        assert!(s11.enumerate().is_err());
    }

    #[test]
    fn power_matches_repeated_multiplication() {
        let g = families::metacyclic(9, 3, 3, 4).unwrap();
        let x = Element::Meta { i: 1, j: 2 };
        let mut y = g.identity();
        for e in 0..30 {
            assert_eq!(g.power(&x, e).unwrap(), y);
            y = g.multiply(&y, &x).unwrap();
        }
    }
}
