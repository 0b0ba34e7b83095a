//! Formal integer combinations of matroid isomorphism classes, the collapse
//! map onto Tutte polynomials in (ε, σ), and the renaming isomorphism onto
//! ordinary two-variable integer polynomials.

use crate::pointed::PointedObject;
use matroid_core::{CanonicalKey, Matroid};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use tutte_engine::{tutte, BivariatePolynomial};

/// An element of the free abelian group on matroid isomorphism classes.
/// Terms are keyed by canonical form; each key retains one representative
/// matroid so the class can still be computed with. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default)]
pub struct K0IsoElement {
    terms: BTreeMap<CanonicalKey, (Matroid, BigInt)>,
}

impl PartialEq for K0IsoElement {
    fn eq(&self, other: &K0IsoElement) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((ka, (_, ca)), (kb, (_, cb)))| ka == kb && ca == cb)
    }
}

impl Eq for K0IsoElement {}

impl K0IsoElement {
    pub fn zero() -> K0IsoElement {
        K0IsoElement::default()
    }

    /// The class of a single matroid, coefficient one.
    pub fn class_of(m: &Matroid) -> K0IsoElement {
        let mut terms = BTreeMap::new();
        terms.insert(m.canonical_form(), (m.clone(), BigInt::one()));
        K0IsoElement { terms }
    }

    /// The class of a pointed object; the base point is the group zero.
    pub fn class_of_pointed(p: &PointedObject) -> K0IsoElement {
        match p {
            PointedObject::BasePoint => K0IsoElement::zero(),
            PointedObject::Matroid(m) => K0IsoElement::class_of(m),
        }
    }

    /// The multiplicative unit: the class of the empty matroid.
    pub fn one() -> K0IsoElement {
        K0IsoElement::class_of(&matroid_core::free_loop_sum(0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalKey, &Matroid, &BigInt)> {
        self.terms.iter().map(|(k, (m, c))| (k, m, c))
    }

    pub fn coefficient(&self, key: &CanonicalKey) -> BigInt {
        self.terms
            .get(key)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, factor: &BigInt) -> K0IsoElement {
        if factor.is_zero() {
            return K0IsoElement::zero();
        }
        K0IsoElement {
            terms: self
                .terms
                .iter()
                .map(|(k, (m, c))| (k.clone(), (m.clone(), c * factor)))
                .collect(),
        }
    }

    fn add_term(&mut self, key: CanonicalKey, representative: &Matroid, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some((_, existing)) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms
                    .insert(key, (representative.clone(), coeff.clone()));
            }
        }
    }
}

impl Add for &K0IsoElement {
    type Output = K0IsoElement;

    fn add(self, rhs: &K0IsoElement) -> K0IsoElement {
        let mut out = self.clone();
        for (k, (m, c)) in &rhs.terms {
            out.add_term(k.clone(), m, c);
        }
        out
    }
}

impl Neg for &K0IsoElement {
    type Output = K0IsoElement;

    fn neg(self) -> K0IsoElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub for &K0IsoElement {
    type Output = K0IsoElement;

    fn sub(self, rhs: &K0IsoElement) -> K0IsoElement {
        self + &(-rhs)
    }
}

/// Bilinear extension of class-of-direct-sum: the product of the classes of
/// two matroids is the class of their direct sum.
impl Mul for &K0IsoElement {
    type Output = K0IsoElement;

    fn mul(self, rhs: &K0IsoElement) -> K0IsoElement {
        let mut out = K0IsoElement::zero();
        for (_, (ma, ca)) in &self.terms {
            for (_, (mb, cb)) in &rhs.terms {
                let (sum, _) = ma.direct_sum(mb);
                out.add_term(sum.canonical_form(), &sum, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for K0IsoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (index, (key, (_, coeff))) in self.terms.iter().enumerate() {
            let negative = coeff < &BigInt::zero();
            let magnitude = if negative { -coeff } else { coeff.clone() };
            if index == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "[{}]", key.to_hex())?;
        }
        Ok(())
    }
}

/// An element of the polynomial ring in the classes ε (one isthmus) and σ
/// (one loop); the normal form for matroid classes modulo Tutte coverings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0TcElement {
    poly: BivariatePolynomial,
}

impl K0TcElement {
    pub fn zero() -> K0TcElement {
        K0TcElement {
            poly: BivariatePolynomial::zero("ε", "σ"),
        }
    }

    pub fn one() -> K0TcElement {
        K0TcElement {
            poly: BivariatePolynomial::one("ε", "σ"),
        }
    }

    /// Wraps a polynomial, renaming its variables to (ε, σ).
    pub fn from_polynomial(p: &BivariatePolynomial) -> K0TcElement {
        K0TcElement {
            poly: p.rename("ε", "σ"),
        }
    }

    pub fn polynomial(&self) -> &BivariatePolynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl Add for &K0TcElement {
    type Output = K0TcElement;

    fn add(self, rhs: &K0TcElement) -> K0TcElement {
        K0TcElement {
            poly: &self.poly + &rhs.poly,
        }
    }
}

impl Neg for &K0TcElement {
    type Output = K0TcElement;

    fn neg(self) -> K0TcElement {
        K0TcElement { poly: -&self.poly }
    }
}

impl Sub for &K0TcElement {
    type Output = K0TcElement;

    fn sub(self, rhs: &K0TcElement) -> K0TcElement {
        K0TcElement {
            poly: &self.poly - &rhs.poly,
        }
    }
}

impl Mul for &K0TcElement {
    type Output = K0TcElement;

    fn mul(self, rhs: &K0TcElement) -> K0TcElement {
        K0TcElement {
            poly: &self.poly * &rhs.poly,
        }
    }
}

impl fmt::Display for K0TcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Collapses each isomorphism class to its Tutte polynomial in (ε, σ),
/// extended linearly. Kills exactly the differences generated by splitting
/// at a non-degenerate element, which is what makes it a quotient map onto
/// the polynomial ring.
pub fn gamma(a: &K0IsoElement) -> K0TcElement {
    let mut total = BivariatePolynomial::zero("ε", "σ");
    for (_, representative, coeff) in a.terms() {
        total = &total + &tutte(representative).rename("ε", "σ").scale(coeff);
    }
    K0TcElement { poly: total }
}

/// The variable-renaming isomorphism ε ↦ x, σ ↦ y.
pub fn rho(a: &K0TcElement) -> BivariatePolynomial {
    a.poly.rename("x", "y")
}

/// Inverse renaming x ↦ ε, y ↦ σ.
pub fn rho_inverse(p: &BivariatePolynomial) -> K0TcElement {
    K0TcElement::from_polynomial(p)
}

/// Exact evaluation of the Tutte polynomial at integer points. Any ring
/// homomorphism from matroid classes to integers that multiplies over
/// direct sums and adds over splits is such an evaluation, so this single
/// function realizes them all.
pub fn tg_invariant(m: &Matroid, eps_value: &BigInt, sigma_value: &BigInt) -> BigInt {
    tutte(m).eval(eps_value, sigma_value)
}
