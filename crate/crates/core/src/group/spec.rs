use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::table::{CayleyTable, PermGroup};
use crate::arith::{self, Factorization};
use crate::error::{Error, Result};

/// Type of a finite abelian group: for each prime, the nondecreasing list of
/// exponents `a_1 <= ... <= a_r` of its cyclic factors `Z_{p^{a_i}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianType {
    factors: Vec<(u64, Vec<u32>)>,
}

impl AbelianType {
    /// Normalizes the input: primes sorted, exponents sorted, zero exponents
    /// dropped, repeated primes merged.
    pub fn new(factors: &[(u64, Vec<u32>)]) -> Result<Self> {
        let mut merged: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
        for (p, exps) in factors {
            if !arith::is_prime(*p) {
                return Err(Error::InvalidParams(format!("{p} is not a prime")));
            }
            merged
                .entry(*p)
                .or_default()
                .extend(exps.iter().copied().filter(|&e| e > 0));
        }
        let factors = merged
            .into_iter()
            .filter(|(_, e)| !e.is_empty())
            .map(|(p, mut e)| {
                e.sort_unstable();
                (p, e)
            })
            .collect();
        Ok(AbelianType { factors })
    }

    /// Type of `Z_{n_1} x ... x Z_{n_k}`; each `n_i` must be a prime power
    /// (1 is allowed and ignored).
    pub fn from_prime_powers(orders: &[u64]) -> Result<Self> {
        let mut factors = Vec::new();
        for &q in orders {
            if q == 1 {
                continue;
            }
            match arith::prime_power(q) {
                Some((p, k)) => factors.push((p, vec![k])),
                None => {
                    return Err(Error::InvalidParams(format!(
                        "{q} is not a prime power"
                    )))
                }
            }
        }
        Self::new(&factors)
    }

    /// Primary decomposition of `Z_{n_1} x ... x Z_{n_k}` for arbitrary `n_i`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        let mut factors = Vec::new();
        for &n in orders {
            if n == 0 {
                return Err(Error::InvalidParams("cyclic factor of order 0".into()));
            }
            for (p, k) in arith::factorize(n) {
                factors.push((p, vec![k]));
            }
        }
        Self::new(&factors)
    }

    pub fn factors(&self) -> &[(u64, Vec<u32>)] {
        &self.factors
    }

    /// Orders `p^a` of the cyclic factors, prime by prime.
    pub fn moduli(&self) -> Vec<u64> {
        self.factors
            .iter()
            .flat_map(|(p, exps)| exps.iter().map(move |&e| p.pow(e)))
            .collect()
    }

    pub fn order(&self) -> BigUint {
        self.moduli()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, q| acc * q)
    }

    pub fn factorization(&self) -> Factorization {
        self.factors
            .iter()
            .map(|(p, e)| (*p, e.iter().sum()))
            .collect()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.iter().all(|(_, e)| e.len() == 1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for AbelianType {
    /// Mini-language form, e.g. `Ab(2:1,2;3:1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ab(")?;
        for (k, (p, exps)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            write!(f, "{p}:")?;
            for (i, e) in exps.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, ")")
    }
}

/// Parameters of `<a, b | a^m = 1, b^n = a^s, b^-1 a b = a^r>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetacyclicParams {
    pub m: u64,
    pub n: u64,
    pub s: u64,
    pub r: u64,
}

impl MetacyclicParams {
    /// Reduces `s` and `r` modulo `m` and checks that the normal form
    /// multiplication defines a group of order `mn`: `gcd(m, r) = 1`,
    /// `r^n = 1 (mod m)` and `m | s(r - 1)`.
    pub fn new(m: u64, n: u64, s: u64, r: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParams(format!(
                "metacyclic m and n must be positive, got m={m}, n={n}"
            )));
        }
        let (s, r) = (s % m, r % m);
        if !Self::is_valid(m, n, s, r) {
            return Err(Error::InvalidParams(format!(
                "MC({m},{n},{s},{r}) is not a consistent presentation: need gcd(m,r)=1, r^n=1 (mod m) and m | s(r-1)"
            )));
        }
        Ok(MetacyclicParams { m, n, s, r })
    }

    pub fn is_valid(m: u64, n: u64, s: u64, r: u64) -> bool {
        if m == 0 || n == 0 {
            return false;
        }
        if m == 1 {
            return true;
        }
        arith::gcd(m, r % m) == 1
            && arith::pow_mod(r, n, m) == 1
            && arith::mul_mod(s % m, (r % m + m - 1) % m, m) == 0
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    pub fn is_abelian(&self) -> bool {
        self.m == 1 || self.r % self.m == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetacyclicPreset {
    Dihedral,
    GeneralizedQuaternion,
    Quasidihedral,
}

/// Parameters of `Z_p^{n-1} x| Z_q`, the generator of `Z_q` acting as `v -> t v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PGroupParams {
    pub p: u64,
    pub q: u64,
    pub n: u32,
    pub t: u64,
}

impl PGroupParams {
    pub fn order(&self) -> u64 {
        self.p.pow(self.n - 1) * self.q
    }
}

/// Declarative description of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic { n: u64 },
    Abelian(AbelianType),
    ElementaryAbelian { p: u64, rank: u32 },
    Metacyclic {
        params: MetacyclicParams,
        preset: Option<MetacyclicPreset>,
    },
    /// `Q_8 x Z_2^rank x A` with `A` abelian of odd order.
    Hamiltonian { rank: u32, odd: AbelianType },
    PGroup(PGroupParams),
    Symmetric { degree: usize },
    Alternating { degree: usize },
    Mathieu11,
    DirectProduct(Vec<GroupSpec>),
    CayleyTable(Arc<CayleyTable>),
    Permutation(Arc<PermGroup>),
}

impl GroupSpec {
    /// Family name used for catalog ordering and reports.
    pub fn kind(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic { .. } => "cyclic",
            GroupSpec::Abelian(_) => "abelian",
            GroupSpec::ElementaryAbelian { .. } => "elementary-abelian",
            GroupSpec::Metacyclic {
                preset: Some(MetacyclicPreset::Dihedral),
                ..
            } => "dihedral",
            GroupSpec::Metacyclic { .. } => "metacyclic",
            GroupSpec::Hamiltonian { .. } => "hamiltonian",
            GroupSpec::PGroup(_) => "p-group-P",
            GroupSpec::Symmetric { .. } => "symmetric",
            GroupSpec::Alternating { .. } => "alternating",
            GroupSpec::Mathieu11 => "mathieu11",
            GroupSpec::DirectProduct(_) => "direct-product",
            GroupSpec::CayleyTable(_) => "cayley-table",
            GroupSpec::Permutation(_) => "permutation",
        }
    }

    /// Kind-specific integer parameters (for deterministic ordering).
    pub fn params(&self) -> Vec<u64> {
        match self {
            GroupSpec::Cyclic { n } => vec![*n],
            GroupSpec::Abelian(t) => t.moduli(),
            GroupSpec::ElementaryAbelian { p, rank } => vec![*p, *rank as u64],
            GroupSpec::Metacyclic { params, .. } => vec![params.m, params.n, params.s, params.r],
            GroupSpec::Hamiltonian { rank, odd } => {
                let mut v = vec![*rank as u64];
                v.extend(odd.moduli());
                v
            }
            GroupSpec::PGroup(p) => vec![p.p, p.q, p.n as u64],
            GroupSpec::Symmetric { degree } | GroupSpec::Alternating { degree } => {
                vec![*degree as u64]
            }
            GroupSpec::Mathieu11 => vec![],
            GroupSpec::DirectProduct(fs) => fs.iter().flat_map(|f| f.params()).collect(),
            GroupSpec::CayleyTable(t) => vec![t.side() as u64],
            GroupSpec::Permutation(g) => vec![g.degree() as u64, g.order()],
        }
    }

    /// Declared order, computed from the parameters without enumeration.
    pub fn order(&self) -> BigUint {
        match self {
            GroupSpec::Cyclic { n } => BigUint::from(*n),
            GroupSpec::Abelian(t) => t.order(),
            GroupSpec::ElementaryAbelian { p, rank } => BigUint::from(*p).pow(*rank),
            GroupSpec::Metacyclic { params, .. } => BigUint::from(params.order()),
            GroupSpec::Hamiltonian { rank, odd } => {
                BigUint::from(8u32) * BigUint::from(2u32).pow(*rank) * odd.order()
            }
            GroupSpec::PGroup(p) => BigUint::from(p.order()),
            GroupSpec::Symmetric { degree } => factorial(*degree),
            GroupSpec::Alternating { degree } => {
                if *degree < 2 {
                    BigUint::from(1u32)
                } else {
                    factorial(*degree) / 2u32
                }
            }
            GroupSpec::Mathieu11 => BigUint::from(7920u32),
            GroupSpec::DirectProduct(fs) => fs
                .iter()
                .fold(BigUint::from(1u32), |acc, f| acc * f.order()),
            GroupSpec::CayleyTable(t) => BigUint::from(t.side()),
            GroupSpec::Permutation(g) => BigUint::from(g.order()),
        }
    }

    pub fn order_u64(&self) -> Option<u64> {
        num_traits::ToPrimitive::to_u64(&self.order())
    }

    /// Prime factorization of the declared order.
    pub fn order_factorization(&self) -> Factorization {
        match self {
            GroupSpec::Cyclic { n } => arith::factorize(*n),
            GroupSpec::Abelian(t) => t.factorization(),
            GroupSpec::ElementaryAbelian { p, rank } => [(*p, *rank)].into_iter().collect(),
            GroupSpec::Metacyclic { params, .. } => arith::factorize(params.order()),
            GroupSpec::Hamiltonian { rank, odd } => {
                let mut f = odd.factorization();
                f.insert(2, 3 + rank);
                f
            }
            GroupSpec::PGroup(p) => arith::factorize(p.order()),
            GroupSpec::Symmetric { degree } => factorial_factorization(*degree),
            GroupSpec::Alternating { degree } => {
                let mut f = factorial_factorization(*degree);
                if *degree >= 2 {
                    let e = f.get_mut(&2).expect("2 divides n! for n >= 2");
                    *e -= 1;
                    if *e == 0 {
                        f.remove(&2);
                    }
                }
                f
            }
            GroupSpec::Mathieu11 => [(2, 4), (3, 2), (5, 1), (11, 1)].into_iter().collect(),
            GroupSpec::DirectProduct(fs) => {
                let mut acc = Factorization::new();
                for f in fs {
                    arith::merge_factorizations(&mut acc, &f.order_factorization());
                }
                acc
            }
            GroupSpec::CayleyTable(t) => arith::factorize(t.side() as u64),
            GroupSpec::Permutation(g) => arith::factorize(g.order()),
        }
    }

    /// The direct factors a spec is realized through, if it is a product.
    pub fn product_factors(&self) -> Option<Vec<GroupSpec>> {
        match self {
            GroupSpec::DirectProduct(fs) => Some(fs.clone()),
            GroupSpec::Hamiltonian { rank, odd } => {
                let mut fs = vec![crate::families::generalized_quaternion(8)
                    .expect("Q8 preset is valid")];
                if *rank > 0 {
                    fs.push(GroupSpec::ElementaryAbelian { p: 2, rank: *rank });
                }
                if !odd.is_trivial() {
                    fs.push(GroupSpec::Abelian(odd.clone()));
                }
                Some(fs)
            }
            _ => None,
        }
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |acc, k| acc * k)
}

fn factorial_factorization(n: usize) -> Factorization {
    let mut f = Factorization::new();
    for k in 2..=n as u64 {
        arith::merge_factorizations(&mut f, &arith::factorize(k));
    }
    f
}

impl fmt::Display for GroupSpec {
    /// Renders the spec in the family mini-language accepted by
    /// [`crate::expr::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { n } => write!(f, "Z{n}"),
            GroupSpec::Abelian(t) => write!(f, "{t}"),
            GroupSpec::ElementaryAbelian { p, rank } => write!(f, "Z{p}^{rank}"),
            GroupSpec::Metacyclic { params, preset } => match preset {
                Some(MetacyclicPreset::Dihedral) => write!(f, "D{}", params.order()),
                Some(MetacyclicPreset::GeneralizedQuaternion) => write!(f, "Q{}", params.order()),
                Some(MetacyclicPreset::Quasidihedral) => write!(f, "SD{}", params.order()),
                None => write!(f, "MC({},{},{},{})", params.m, params.n, params.s, params.r),
            },
            GroupSpec::Hamiltonian { rank, odd } => {
                write!(f, "Q8")?;
                if *rank > 0 {
                    write!(f, "xZ2^{rank}")?;
                }
                if !odd.is_trivial() {
                    write!(f, "x{odd}")?;
                }
                Ok(())
            }
            GroupSpec::PGroup(p) => write!(f, "P({},{},{})", p.p, p.q, p.n),
            GroupSpec::Symmetric { degree } => write!(f, "S{degree}"),
            GroupSpec::Alternating { degree } => write!(f, "A{degree}"),
            GroupSpec::Mathieu11 => write!(f, "M11"),
            GroupSpec::DirectProduct(fs) => {
                for (k, g) in fs.iter().enumerate() {
                    if k > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::CayleyTable(t) => write!(f, "@{}", t.name()),
            GroupSpec::Permutation(g) => write!(f, "@{}", g.name()),
        }
    }
}
