//! Homogeneous symmetric functions with exact rational coefficients.
//!
//! A [`SymFunc`] stores a sparse coefficient map in one of five bases. All
//! conversions go through power sums, where products concatenate partitions
//! and `ω` is diagonal.

mod convert;
mod graphs;
pub(crate) mod json;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use convert::{transitions, Transitions};
pub use graphs::{
    chromatic_polynomial_eval, chromatic_symfunc, inc_e_coefficient, is_e_positive,
    p_to_e_via_tau, pi_symfunc, pi_symfunc_by_restrictions, pi_via_berge_lass,
    z_e_coefficient_direct, z_h_coefficient_direct, z_symfunc, z_symfunc_by_restrictions,
};

pub type Rational = BigRational;

/// The supported bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Power sums `p_λ`.
    P,
    /// Elementary `e_λ`.
    E,
    /// Complete homogeneous `h_λ`.
    H,
    /// Augmented monomials `m̃_λ = r₁! r₂! ⋯ m_λ`.
    MTilde,
    /// Monomials `m_λ`.
    M,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::E, Basis::H, Basis::MTilde, Basis::M];

    pub fn name(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::MTilde => "mt",
            Basis::M => "m",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown basis `{s}`")))
    }
}

/// A homogeneous symmetric function of fixed degree in a fixed basis.
///
/// Zero coefficients are never stored, so structural equality within one
/// basis is mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> Self {
        let mut f = SymFunc::zero(lambda.size(), basis);
        f.coeffs.insert(lambda.clone(), Rational::one());
        f
    }

    /// Sums the given terms; every partition must have size `degree`.
    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut f = SymFunc::zero(degree, basis);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::SizeMismatch {
                    expected: degree,
                    found: lambda.size(),
                });
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Rational) {
        debug_assert_eq!(lambda.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `b_λ` in the stored basis.
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `b_λ` in any basis, converting if needed.
    pub fn coefficient(&self, basis: Basis, lambda: &Partition) -> Rational {
        if basis == self.basis {
            self.coeff(lambda)
        } else {
            self.convert(basis).coeff(lambda)
        }
    }

    /// Exact change of basis.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let t = transitions(self.degree);
        let p = t.to_power_sums(self.basis, &self.coeffs);
        let coeffs = t.power_sums_to(target, &p);
        SymFunc {
            degree: self.degree,
            basis: target,
            coeffs,
        }
    }

    /// The involution `ω`, diagonal on power sums with sign `(-1)^{n-ℓ(λ)}`.
    /// The result is in the same basis as the input.
    pub fn omega(&self) -> SymFunc {
        let p = self.convert(Basis::P);
        let coeffs = p
            .coeffs
            .into_iter()
            .map(|(l, c)| {
                let c = if (self.degree - l.len()) % 2 == 1 { -c } else { c };
                (l, c)
            })
            .collect();
        SymFunc {
            degree: self.degree,
            basis: Basis::P,
            coeffs,
        }
        .convert(self.basis)
    }

    /// Sum, in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (l, c) in other.convert(self.basis).coeffs {
            out.add_term(l, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (l, x) in &self.coeffs {
            out.add_term(l.clone(), x * c);
        }
        out
    }

    /// Product, returned in the power-sum basis.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.convert(Basis::P);
        let b = other.convert(Basis::P);
        let mut out = SymFunc::zero(self.degree + other.degree, Basis::P);
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                out.add_term(la.union(lb), ca * cb);
            }
        }
        out
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn integer_coefficients(&self) -> Option<BTreeMap<Partition, BigInt>> {
        self.coeffs
            .iter()
            .map(|(l, c)| c.is_integer().then(|| (l.clone(), c.to_integer())))
            .collect()
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

fn format_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.degree, self)
    }
}

/// Text form, e.g. `e_{2,1} + 3 e_{3}`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{} ", format_coeff(&mag))?;
            }
            write!(f, "{}_{{{}}}", self.basis, l)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn int(x: i64) -> Rational {
        Rational::from_integer(BigInt::from(x))
    }

    #[test]
    fn display() {
        let f = SymFunc::from_terms(
            3,
            Basis::E,
            [(part(&[2, 1]), int(1)), (part(&[3]), int(3))],
        )
        .unwrap();
        assert_eq!(f.to_string(), "e_{2,1} + 3 e_{3}");
        let g = SymFunc::from_terms(2, Basis::E, [(part(&[1, 1]), int(1)), (part(&[2]), int(-2))])
            .unwrap();
        assert_eq!(g.to_string(), "e_{1,1} - 2 e_{2}");
        assert_eq!(SymFunc::zero(2, Basis::P).to_string(), "0");
        let half = SymFunc::from_terms(2, Basis::P, [(part(&[2]), Rational::new(1.into(), 2.into()))])
            .unwrap();
        assert_eq!(half.to_string(), "1/2 p_{2}");
    }

    #[test]
    fn rejects_wrong_degree_and_drops_zeros() {
        assert!(SymFunc::from_terms(3, Basis::P, [(part(&[2]), int(1))]).is_err());
        let f = SymFunc::from_terms(2, Basis::P, [(part(&[2]), int(1)), (part(&[2]), int(-1))])
            .unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn basis_names_round_trip() {
        for b in Basis::ALL {
            assert_eq!(b.name().parse::<Basis>().unwrap(), b);
        }
        assert!("s".parse::<Basis>().is_err());
    }

    #[test]
    fn product_of_e_is_e_lambda() {
        let e2 = SymFunc::basis_element(Basis::E, &part(&[2]));
        let e1 = SymFunc::basis_element(Basis::E, &part(&[1]));
        let prod = e2.mul(&e1).convert(Basis::E);
        assert_eq!(prod, SymFunc::basis_element(Basis::E, &part(&[2, 1])));
    }
}
