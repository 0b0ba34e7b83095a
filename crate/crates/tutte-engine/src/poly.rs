//! Sparse exact bivariate polynomials over the integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer polynomial in two named commuting variables, stored as a sparse
/// map from exponent pairs to nonzero coefficients.
///
/// The variable names are part of the value: arithmetic panics when the
/// operands disagree on them, so polynomials in (x, y) and group elements
/// written in (ε, σ) cannot be mixed without an explicit rename.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePolynomial {
    vars: (String, String),
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero(first_var: &str, second_var: &str) -> BivariatePolynomial {
        BivariatePolynomial {
            vars: (first_var.to_owned(), second_var.to_owned()),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(first_var: &str, second_var: &str, value: BigInt) -> BivariatePolynomial {
        Self::monomial(first_var, second_var, 0, 0, value)
    }

    pub fn one(first_var: &str, second_var: &str) -> BivariatePolynomial {
        Self::constant(first_var, second_var, BigInt::one())
    }

    pub fn monomial(
        first_var: &str,
        second_var: &str,
        first_deg: u32,
        second_deg: u32,
        coeff: BigInt,
    ) -> BivariatePolynomial {
        let mut p = Self::zero(first_var, second_var);
        if !coeff.is_zero() {
            p.terms.insert((first_deg, second_deg), coeff);
        }
        p
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars.0, &self.vars.1)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, first_deg: u32, second_deg: u32) -> BigInt {
        self.terms
            .get(&(first_deg, second_deg))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, factor: &BigInt) -> BivariatePolynomial {
        let mut out = Self::zero(&self.vars.0, &self.vars.1);
        if factor.is_zero() {
            return out;
        }
        for (&deg, c) in &self.terms {
            out.terms.insert(deg, c * factor);
        }
        out
    }

    pub fn eval(&self, first_value: &BigInt, second_value: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (&(dx, dy), c) in &self.terms {
            total += c * pow_big(first_value, dx) * pow_big(second_value, dy);
        }
        total
    }

    pub fn rename(&self, first_var: &str, second_var: &str) -> BivariatePolynomial {
        BivariatePolynomial {
            vars: (first_var.to_owned(), second_var.to_owned()),
            terms: self.terms.clone(),
        }
    }

    /// Swap the roles of the two variables, keeping the names: the term
    /// c·u^a·v^b becomes c·u^b·v^a.
    pub fn transposed(&self) -> BivariatePolynomial {
        let mut out = Self::zero(&self.vars.0, &self.vars.1);
        for (&(a, b), c) in &self.terms {
            out.terms.insert((b, a), c.clone());
        }
        out
    }

    fn assert_same_vars(&self, other: &BivariatePolynomial) {
        assert_eq!(
            self.vars, other.vars,
            "polynomial arithmetic across different variable pairs"
        );
    }

    fn add_term(&mut self, deg: (u32, u32), c: &BigInt) {
        let entry = self.terms.entry(deg).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&deg);
        }
    }
}

fn pow_big(base: &BigInt, exp: u32) -> BigInt {
    let mut out = BigInt::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (&deg, c) in &rhs.terms {
            out.add_term(deg, c);
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero(&self.vars.0, &self.vars.1);
        for (&deg, c) in &self.terms {
            out.terms.insert(deg, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self.assert_same_vars(rhs);
        let mut out = BivariatePolynomial::zero(&self.vars.0, &self.vars.1);
        for (&(ax, ay), ac) in &self.terms {
            for (&(bx, by), bc) in &rhs.terms {
                out.add_term((ax + bx, ay + by), &(ac * bc));
            }
        }
        out
    }
}

/// Terms print with the first variable's degree descending, then the second
/// variable's degree descending: "x^3 + 2*x^2 + 2*x*y + x + y^2 + y".
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(dx, dy), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || (dx == 0 && dy == 0) {
                factors.push(magnitude.to_string());
            }
            if dx > 0 {
                factors.push(if dx == 1 {
                    self.vars.0.clone()
                } else {
                    format!("{}^{}", self.vars.0, dx)
                });
            }
            if dy > 0 {
                factors.push(if dy == 1 {
                    self.vars.1.clone()
                } else {
                    format!("{}^{}", self.vars.1, dy)
                });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
