//! Automorphism and homomorphism counting by generator-image backtracking,
//! and the comparisons built on them.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::count::serialize_big;
use crate::error::{Error, Result};
use crate::families::abelian_type_of;
use crate::group::{self, Element, GroupSpec};

/// Largest group whose automorphisms are counted.
pub const AUT_ORDER_CAP: u64 = 256;

/// Largest source or target group for homomorphism counting.
pub const HOM_ORDER_CAP: u64 = 2048;

const UNSET: u32 = u32::MAX;

/// A group with its elements numbered and its full multiplication table.
/// Index 0 is the identity.
pub struct IndexedGroup {
    elements: Vec<Element>,
    index: HashMap<Element, u32>,
    table: Vec<u32>,
    orders: Vec<u64>,
}

impl IndexedGroup {
    pub fn new(g: &GroupSpec, cap: u64) -> Result<Self> {
        let n = g
            .order_u64()
            .filter(|&n| n <= cap)
            .ok_or_else(|| Error::limit(format!("multiplication table of {g}"), g.order(), cap))?
            as usize;
        let mut elements: Vec<Element> = g.enumerate_with_cap(cap)?.collect();
        if elements.len() != n {
            return Err(Error::Integrity(format!(
                "{g}: enumerated {} elements, declared order {n}",
                elements.len()
            )));
        }
        let id = g.identity();
        let pos = elements
            .iter()
            .position(|x| *x == id)
            .ok_or_else(|| Error::Integrity(format!("{g}: identity not enumerated")))?;
        elements.swap(0, pos);
        let index: HashMap<Element, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i as u32))
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let c = g.multiply(a, b)?;
                let k = index
                    .get(&c)
                    .ok_or_else(|| Error::Integrity(format!("{g}: product {c} not enumerated")))?;
                table.push(*k);
            }
        }
        let mut ig = IndexedGroup {
            elements,
            index,
            table,
            orders: Vec::new(),
        };
        ig.orders = (0..n)
            .map(|a| {
                let mut x = a;
                let mut o = 1;
                while x != 0 {
                    x = ig.mul(x, a);
                    o += 1;
                }
                o
            })
            .collect();
        Ok(ig)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b] as usize
    }

    pub fn order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn element(&self, a: usize) -> &Element {
        &self.elements[a]
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    /// Indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    /// Repeatedly adds an element of largest order not yet generated.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.len()];
        inside[0] = true;
        loop {
            let next = (0..self.len())
                .filter(|&x| !inside[x])
                .max_by_key(|&x| (self.order(x), std::cmp::Reverse(x)));
            let Some(x) = next else { break };
            gens.push(x);
            for y in self.closure(&gens) {
                inside[y] = true;
            }
        }
        gens
    }
}

/// A group together with a generating set; relations are implicit in the
/// multiplication table.
#[derive(Clone, Debug)]
pub struct GeneratorPresentation {
    pub group: GroupSpec,
    pub generators: Vec<Element>,
}

/// The greedy generating set used by the counting routines.
pub fn presentation(g: &GroupSpec) -> Result<GeneratorPresentation> {
    let ig = IndexedGroup::new(g, HOM_ORDER_CAP)?;
    Ok(GeneratorPresentation {
        group: g.clone(),
        generators: ig
            .greedy_generators()
            .into_iter()
            .map(|x| ig.element(x).clone())
            .collect(),
    })
}

/// Propagates `gens[i] -> imgs[i]` along the Cayley graph of the subgroup
/// they generate. Returns the map on that subgroup, or `None` if two paths
/// disagree (or, with `injective`, two elements collide).
fn extend(
    src: &IndexedGroup,
    dst: &IndexedGroup,
    gens: &[usize],
    imgs: &[usize],
    injective: bool,
) -> Option<Vec<u32>> {
    let mut map = vec![UNSET; src.len()];
    let mut used = vec![false; if injective { dst.len() } else { 0 }];
    map[0] = 0;
    if injective {
        used[0] = true;
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x] as usize;
        for (&g, &h) in gens.iter().zip(imgs) {
            let y = src.mul(x, g);
            let fy = dst.mul(fx, h) as u32;
            if map[y] == UNSET {
                if injective {
                    if used[fy as usize] {
                        return None;
                    }
                    used[fy as usize] = true;
                }
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Checks `f(ab) = f(a) f(b)` on the whole table.
fn is_homomorphism(src: &IndexedGroup, dst: &IndexedGroup, map: &[u32]) -> bool {
    let n = src.len();
    (0..n).all(|a| {
        (0..n).all(|b| {
            map[src.mul(a, b)] as usize == dst.mul(map[a] as usize, map[b] as usize)
        })
    })
}

struct Search<'a> {
    src: &'a IndexedGroup,
    dst: &'a IndexedGroup,
    gens: Vec<usize>,
    cands: Vec<Vec<usize>>,
    injective: bool,
}

impl<'a> Search<'a> {
    fn new(src: &'a IndexedGroup, dst: &'a IndexedGroup, injective: bool) -> Self {
        let gens = src.greedy_generators();
        let cands = gens
            .iter()
            .map(|&g| {
                let o = src.order(g);
                (0..dst.len())
                    .filter(|&h| {
                        let oh = dst.order(h);
                        if injective {
                            oh == o
                        } else {
                            o % oh == 0
                        }
                    })
                    .collect()
            })
            .collect();
        Search {
            src,
            dst,
            gens,
            cands,
            injective,
        }
    }

    /// `imgs` fixes the first `imgs.len()` generator images; returns the map
    /// if it extends consistently, checking the full table once complete.
    fn accept(&self, imgs: &[usize]) -> bool {
        let j = imgs.len();
        match extend(self.src, self.dst, &self.gens[..j], imgs, self.injective) {
            None => false,
            Some(map) if j == self.gens.len() => is_homomorphism(self.src, self.dst, &map),
            Some(_) => true,
        }
    }

    fn count(&self, imgs: &mut Vec<usize>) -> u64 {
        let j = imgs.len();
        if j == self.gens.len() {
            return 1;
        }
        let mut total = 0;
        for &h in &self.cands[j] {
            imgs.push(h);
            if self.accept(imgs) {
                total += self.count(imgs);
            }
            imgs.pop();
        }
        total
    }

    fn count_all(&self) -> BigUint {
        if self.gens.is_empty() {
            return BigUint::one();
        }
        self.cands[0]
            .par_iter()
            .map(|&h| {
                let mut imgs = vec![h];
                if self.accept(&imgs) {
                    BigUint::from(self.count(&mut imgs))
                } else {
                    BigUint::zero()
                }
            })
            .sum()
    }

    fn exists(&self, imgs: &mut Vec<usize>) -> bool {
        if !self.accept(imgs) {
            return false;
        }
        let j = imgs.len();
        if j == self.gens.len() {
            return true;
        }
        for &h in &self.cands[j] {
            imgs.push(h);
            if self.exists(imgs) {
                return true;
            }
            imgs.pop();
        }
        false
    }
}

fn aut_table(g: &GroupSpec) -> Result<IndexedGroup> {
    if g.order_u64().is_none_or(|n| n > AUT_ORDER_CAP) {
        return Err(Error::limit(
            format!("automorphism count of {g}"),
            g.order(),
            AUT_ORDER_CAP,
        ));
    }
    IndexedGroup::new(g, AUT_ORDER_CAP)
}

/// `|Aut(G)|` as a product of orbit sizes along the chain of pointwise
/// stabilizers of the greedy generators: the `j`-th factor counts the images
/// of `g_j` reachable by automorphisms fixing `g_1, ..., g_{j-1}`.
pub fn aut_count(g: &GroupSpec) -> Result<BigUint> {
    let ig = aut_table(g)?;
    let search = Search::new(&ig, &ig, true);
    let mut total = BigUint::one();
    for j in 0..search.gens.len() {
        let orbit = search.cands[j]
            .par_iter()
            .filter(|&&x| {
                let mut imgs = search.gens[..j].to_vec();
                imgs.push(x);
                search.exists(&mut imgs)
            })
            .count();
        total *= orbit;
    }
    Ok(total)
}

/// `|Aut(G)|` by enumerating every admissible tuple of generator images.
/// Reference implementation for small groups.
pub fn aut_count_exhaustive(g: &GroupSpec) -> Result<BigUint> {
    let ig = aut_table(g)?;
    Ok(Search::new(&ig, &ig, true).count_all())
}

/// `|Hom(source, target)|`.
pub fn hom_count(source: &GroupSpec, target: &GroupSpec) -> Result<BigUint> {
    let src = IndexedGroup::new(source, HOM_ORDER_CAP)?;
    let dst = IndexedGroup::new(target, HOM_ORDER_CAP)?;
    Ok(Search::new(&src, &dst, false).count_all())
}

fn is_cyclic(g: &GroupSpec) -> Result<bool> {
    if let Some(t) = abelian_type_of(g) {
        return Ok(t.is_cyclic());
    }
    let n = g.order_u64().ok_or_else(|| Error::limit(format!("order of {g}"), g.order(), u64::MAX))?;
    Ok(!group::order_spectrum(g)?.count(n).is_zero())
}

/// `|Aut(G1)| |Aut(G2)| |Hom(G2, G1)|`, the automorphism count of
/// `G1 x G2` for `G1` cyclic and `G2` centerless.
pub fn aut_product_formula(g1: &GroupSpec, g2: &GroupSpec) -> Result<BigUint> {
    if !is_cyclic(g1)? {
        return Err(Error::Precondition(format!("{g1} is not cyclic")));
    }
    let z = group::center_order(g2)?;
    if z != 1 {
        return Err(Error::Precondition(format!(
            "{g2} has a center of order {z}, expected trivial"
        )));
    }
    Ok(aut_count(g1)? * aut_count(g2)? * hom_count(g2, g1)?)
}

/// Both sides of `phi(G) = phi(|G|)  <=>  k = |G| / exp(G)`, computed
/// independently: the left from the order spectrum, the right by grouping
/// the elements of order `exp(G)` into cyclic subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderTotientCheck {
    #[serde(serialize_with = "serialize_big")]
    pub phi_g: BigUint,
    pub phi_order: u64,
    pub k: u64,
    pub ratio: u64,
    /// `phi(G) = phi(|G|)`.
    pub phi_side: bool,
    /// `k = |G| / exp(G)`.
    pub k_side: bool,
    pub holds: bool,
}

impl OrderTotientCheck {
    pub fn sides_agree(&self) -> bool {
        self.phi_side == self.k_side
    }
}

pub fn order_totient_check(g: &GroupSpec) -> Result<OrderTotientCheck> {
    let n = g
        .order_u64()
        .ok_or_else(|| Error::limit(format!("order of {g}"), g.order(), u64::MAX))?;
    let spectrum = group::order_spectrum(g)?;
    let exp = spectrum.exponent()?;
    let phi_g = spectrum.count(exp);
    let phi_order = arith::euler_phi(n);
    let k = group::count_cyclic_subgroups(g, exp)?;
    let ratio = n / exp;
    let phi_side = phi_g.to_u64() == Some(phi_order);
    let k_side = k == ratio;
    Ok(OrderTotientCheck {
        phi_g,
        phi_order,
        k,
        ratio,
        phi_side,
        k_side,
        holds: phi_side && k_side,
    })
}

/// `k = 1`, i.e. a unique cyclic subgroup of order `exp(G)`. Errors if this
/// disagrees with `phi(G) = phi(exp(G))` computed from the spectrum.
pub fn phi_exp_check(g: &GroupSpec) -> Result<bool> {
    let spectrum = group::order_spectrum(g)?;
    let exp = spectrum.exponent()?;
    let k = group::count_cyclic_subgroups(g, exp)?;
    let by_phi = spectrum.count(exp).to_u64() == Some(arith::euler_phi(exp));
    if by_phi != (k == 1) {
        return Err(Error::Integrity(format!(
            "{g}: k = {k} but phi(G) = phi(exp) is {by_phi}"
        )));
    }
    Ok(k == 1)
}

/// Screening record for `phi(G) <= |Aut(G)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureScreen {
    #[serde(serialize_with = "serialize_big")]
    pub phi_g: BigUint,
    #[serde(serialize_with = "crate::count::serialize_big_opt")]
    pub aut: Option<BigUint>,
    /// `|G| >= exp(G)^2`, necessary for a counterexample.
    pub cond_i: bool,
    /// `None` when `|Aut(G)|` is neither given nor countable.
    pub is_counterexample: Option<bool>,
}

/// Screens `G` as a counterexample to `phi(G) <= |Aut(G)|`. A supplied
/// `known_aut` is taken as given; otherwise `|Aut(G)|` is counted when `G`
/// is small enough.
pub fn conjecture_screen(g: &GroupSpec, known_aut: Option<&BigUint>) -> Result<ConjectureScreen> {
    let spectrum = group::order_spectrum(g)?;
    let exp = BigUint::from(spectrum.exponent()?);
    let phi_g = spectrum.count(spectrum.exponent()?);
    let cond_i = g.order() >= &exp * &exp;
    if !cond_i {
        return Ok(ConjectureScreen {
            phi_g,
            aut: None,
            cond_i,
            is_counterexample: Some(false),
        });
    }
    let aut = match known_aut {
        Some(a) => Some(a.clone()),
        None if g.order_u64().is_some_and(|n| n <= AUT_ORDER_CAP) => Some(aut_count(g)?),
        None => None,
    };
    Ok(ConjectureScreen {
        is_counterexample: aut.as_ref().map(|a| phi_g > *a),
        phi_g,
        aut,
        cond_i,
    })
}
