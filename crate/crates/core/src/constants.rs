//! Exact constants over the basis {1, gamma, pi^2, zeta(3)} and Chow elements
//! with such coefficients.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::{ChowElement, GradedAlgebra};
use crate::linalg::Q;

pub const BASIS_NAMES: [&str; 4] = ["1", "gamma", "pi^2", "zeta(3)"];

/// `c[0] + c[1] gamma + c[2] pi^2 + c[3] zeta(3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicConstant {
    pub c: [Q; 4],
}

impl SymbolicConstant {
    pub fn zero() -> Self {
        Self {
            c: [Q::zero(), Q::zero(), Q::zero(), Q::zero()],
        }
    }

    pub fn rational(x: Q) -> Self {
        let mut s = Self::zero();
        s.c[0] = x;
        s
    }

    pub fn one() -> Self {
        Self::rational(Q::one())
    }

    pub fn gamma() -> Self {
        Self::basis(1)
    }

    pub fn pi2() -> Self {
        Self::basis(2)
    }

    pub fn zeta3() -> Self {
        Self::basis(3)
    }

    fn basis(i: usize) -> Self {
        let mut s = Self::zero();
        s.c[i] = Q::one();
        s
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.is_rational().then(|| self.c[0].clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] + &o.c[i]),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] - &o.c[i]),
        }
    }

    pub fn scale(&self, x: &Q) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] * x),
        }
    }

    /// Product, defined when one factor is rational.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(x) = self.as_rational() {
            return Ok(o.scale(&x));
        }
        if let Some(x) = o.as_rational() {
            return Ok(self.scale(&x));
        }
        Err(Error::ConstantOutOfClosure)
    }
}

impl fmt::Display for SymbolicConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .c
            .iter()
            .zip(BASIS_NAMES)
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, n)| if n == "1" { x.to_string() } else { format!("{x}*{n}") })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + ").replace("+ -", "- "))
        }
    }
}

/// A Chow element with `SymbolicConstant` coefficients.
#[derive(Clone)]
pub struct SymChow {
    alg: Arc<GradedAlgebra>,
    coeffs: Vec<SymbolicConstant>,
}

impl PartialEq for SymChow {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) && self.coeffs == o.coeffs
    }
}

impl fmt::Debug for SymChow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymChow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(self.alg.labels())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if l == "1" { format!("({c})") } else { format!("({c})*{l}") })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl SymChow {
    pub fn zero(alg: &Arc<GradedAlgebra>) -> Self {
        Self {
            alg: alg.clone(),
            coeffs: vec![SymbolicConstant::zero(); alg.dim()],
        }
    }

    pub fn from_element(e: &ChowElement) -> Self {
        Self {
            alg: e.algebra().clone(),
            coeffs: e.coeffs().iter().map(|x| SymbolicConstant::rational(x.clone())).collect(),
        }
    }

    /// `k * e` for a constant `k`.
    pub fn constant_times(k: &SymbolicConstant, e: &ChowElement) -> Self {
        Self {
            alg: e.algebra().clone(),
            coeffs: e
                .coeffs()
                .iter()
                .map(|x| k.scale(x))
                .collect(),
        }
    }

    pub fn coeffs(&self) -> &[SymbolicConstant] {
        &self.coeffs
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.alg
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, x: &Q) -> Self {
        Self {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(x)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let n = self.alg.dim();
        let table = self.alg.mult_table();
        let mut out = vec![SymbolicConstant::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() || table[i][j].iter().all(|m| m.is_zero()) {
                    continue;
                }
                let ab = a.mul(b)?;
                for (k, m) in table[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = out[k].add(&ab.scale(m));
                    }
                }
            }
        }
        Ok(Self {
            alg: self.alg.clone(),
            coeffs: out,
        })
    }

    pub fn part(&self, k: usize) -> Self {
        Self {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(self.alg.degrees())
                .map(|(c, &d)| if d == k { c.clone() } else { SymbolicConstant::zero() })
                .collect(),
        }
    }

    /// The rational element, when no transcendental constant occurs.
    pub fn as_rational(&self) -> Option<ChowElement> {
        let v: Option<Vec<Q>> = self.coeffs.iter().map(|c| c.as_rational()).collect();
        v.map(|v| ChowElement::new(self.alg.clone(), v))
    }

    /// Component along one constant of the basis.
    pub fn component(&self, i: usize) -> ChowElement {
        ChowElement::new(self.alg.clone(), self.coeffs.iter().map(|c| c.c[i].clone()).collect())
    }

    pub fn integrate(&self) -> SymbolicConstant {
        self.coeffs
            .iter()
            .zip(self.alg.integral_functional())
            .fold(SymbolicConstant::zero(), |acc, (c, w)| acc.add(&c.scale(w)))
    }

    /// `exp(self)` for an element without scalar part.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        let mut one = Self::zero(&self.alg);
        one.coeffs[0] = SymbolicConstant::one();
        let mut term = one.clone();
        let mut sum = one;
        for k in 1..=self.alg.top_degree() {
            term = term.mul(self)?.scale(&Q::from_integer((k as i64).into()).recip());
            sum = sum.add(&term);
        }
        Ok(sum)
    }
}
