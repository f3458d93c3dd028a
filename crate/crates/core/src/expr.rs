//! Group expression mini-language.
//!
//! ```text
//! expr   := factor ('x' factor)*
//! factor := atom ('^' int)?
//! atom   := 'Z' int | 'D' int | 'Q' int | 'SD' int | 'S' int | 'A' int | 'M11'
//!         | 'MC(' m ',' n ',' s ',' r ')' | 'P(' p ',' q ',' n ')'
//!         | 'Ab(' p ':' e (',' e)* (';' p ':' e (',' e)*)* ')' | 'Ab()'
//!         | 'H(' rank (',' expr)? ')' | '@' id | '(' expr ')'
//! ```
//!
//! `D`, `Q` and `SD` take the group order. `H(n, A)` is `Q8 x Z2^n x A`
//! with `A` abelian of odd order. `G^k` is the direct product of `k`
//! copies; for `Zp^k` with `p` prime this is the elementary abelian group.
//! Whitespace is ignored.

use crate::error::{Error, Result};
use crate::families;
use crate::group::{AbelianType, GroupSpec};
use crate::registry::Registry;

struct Parser<'a> {
    src: Vec<char>,
    pos: usize,
    registry: Option<&'a Registry>,
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Constructor errors surface as parse errors naming the offending atom.
fn built(atom: &str, r: Result<GroupSpec>) -> Result<GroupSpec> {
    r.map_err(|e| match e {
        Error::InvalidParams(m) => perr(format!("{atom}: {m}")),
        other => other,
    })
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).copied()
    }

    fn rest_starts_with(&self, s: &str) -> bool {
        s.chars()
            .enumerate()
            .all(|(i, c)| self.src.get(self.pos + i) == Some(&c))
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest_starts_with(s) {
            self.pos += s.chars().count();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(perr(format!("expected '{s}' at position {}", self.pos)))
        }
    }

    fn int(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(perr(format!("expected a number at position {start}")));
        }
        let s: String = self.src[start..self.pos].iter().collect();
        s.parse()
            .map_err(|_| perr(format!("number {s} is too large")))
    }

    fn ints(&mut self, count: usize) -> Result<Vec<u64>> {
        self.expect("(")?;
        let mut v = vec![self.int()?];
        for _ in 1..count {
            self.expect(",")?;
            v.push(self.int()?);
        }
        self.expect(")")?;
        Ok(v)
    }

    fn expr(&mut self) -> Result<GroupSpec> {
        let mut factors = vec![self.factor()?];
        while self.eat("x") {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupSpec::DirectProduct(factors)
        })
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        let g = self.atom()?;
        if !self.eat("^") {
            return Ok(g);
        }
        let k = self.int()?;
        if k == 0 {
            return Err(perr("exponent of a power must be positive"));
        }
        if let GroupSpec::Cyclic { n } = g {
            if crate::arith::is_prime(n) {
                return built(&format!("Z{n}^{k}"), families::elementary_abelian(n, k as u32));
            }
            let t = AbelianType::from_cyclic_orders(&vec![n; k as usize])?;
            return Ok(families::from_abelian_type(&t));
        }
        Ok(match k {
            1 => g,
            _ => GroupSpec::DirectProduct(vec![g; k as usize]),
        })
    }

    fn abelian(&mut self) -> Result<GroupSpec> {
        let mut factors = Vec::new();
        if !self.eat(")") {
            loop {
                let p = self.int()?;
                self.expect(":")?;
                let mut exps = vec![self.int()? as u32];
                while self.eat(",") {
                    exps.push(self.int()? as u32);
                }
                factors.push((p, exps));
                if self.eat(")") {
                    break;
                }
                self.expect(";")?;
            }
        }
        built("Ab(...)", families::abelian(&factors))
    }

    fn atom(&mut self) -> Result<GroupSpec> {
        let start = self.pos;
        if self.eat("(") {
            let g = self.expr()?;
            self.expect(")")?;
            return Ok(g);
        }
        if self.eat("@") {
            while self
                .peek()
                .is_some_and(|c| (c.is_ascii_alphanumeric() || c == '_' || c == '-') && c != 'x')
            {
                self.pos += 1;
            }
            let id: String = self.src[start + 1..self.pos].iter().collect();
            if id.is_empty() {
                return Err(perr(format!("empty group id at position {start}")));
            }
            let registry = self
                .registry
                .ok_or_else(|| perr(format!("@{id} used but no registry is loaded")))?;
            return registry.lookup(&id);
        }
        if self.eat("MC") {
            let v = self.ints(4)?;
            return built("MC", families::metacyclic(v[0], v[1], v[2], v[3]));
        }
        if self.eat("M11") {
            return Ok(families::mathieu11());
        }
        if self.eat("Ab(") {
            return self.abelian();
        }
        if self.eat("P") {
            let v = self.ints(3)?;
            let n = u32::try_from(v[2]).map_err(|_| perr("P: n too large"))?;
            return built("P", families::p_group_p(v[0], v[1], n));
        }
        if self.eat("H(") {
            let rank = u32::try_from(self.int()?).map_err(|_| perr("H: rank too large"))?;
            let odd = if self.eat(",") {
                self.expr()?
            } else {
                GroupSpec::Cyclic { n: 1 }
            };
            self.expect(")")?;
            return built("H", families::hamiltonian(rank, &odd));
        }
        if self.eat("SD") {
            let n = self.int()?;
            return built(&format!("SD{n}"), families::quasidihedral(n));
        }
        let Some(head) = self.peek() else {
            return Err(perr("unexpected end of expression"));
        };
        self.pos += 1;
        let n = self.int()?;
        let degree = || usize::try_from(n).map_err(|_| perr("degree too large"));
        let name = format!("{head}{n}");
        match head {
            'Z' => built(&name, families::cyclic(n)),
            'D' => built(&name, families::dihedral(n)),
            'Q' => built(&name, families::generalized_quaternion(n)),
            'S' => built(&name, families::symmetric(degree()?)),
            'A' => built(&name, families::alternating(degree()?)),
            _ => Err(perr(format!("unknown group '{head}' at position {start}"))),
        }
    }
}

/// Parses an expression; `@id` atoms are resolved against `registry`.
pub fn parse_with(src: &str, registry: Option<&Registry>) -> Result<GroupSpec> {
    let mut p = Parser {
        src: src.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        registry,
    };
    if p.src.is_empty() {
        return Err(perr("empty expression"));
    }
    let g = p.expr()?;
    if p.pos != p.src.len() {
        let rest: String = p.src[p.pos..].iter().collect();
        return Err(perr(format!("unexpected '{rest}' at position {}", p.pos)));
    }
    Ok(g)
}

pub fn parse(src: &str) -> Result<GroupSpec> {
    parse_with(src, None)
}
