use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{Polynomial, Q};

/// Sparse polynomial over Q in `N` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly<const N: usize> {
    terms: BTreeMap<[u32; N], Q>,
}

/// Plane curve equation in `x, y`.
pub type BivariatePolynomialQ = MPoly<2>;

/// Projective plane curve equation in `X, Y, Z`.
pub type TernaryForm = MPoly<3>;

impl<const N: usize> MPoly<N> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn monomial(exps: [u32; N], c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { terms }
    }

    /// The `i`-th coordinate function.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, Q::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u32; N], Q)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: [u32; N], c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [u32; N]) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree of a monomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_degree()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for i in 0..N {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, point: &[Q; N]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Substitute polynomials in `M` variables for each of the `N` variables.
    pub fn compose<const M: usize>(&self, images: &[MPoly<M>; N]) -> MPoly<M> {
        let mut powers: Vec<Vec<MPoly<M>>> = images.iter().map(|p| vec![MPoly::<M>::one(), p.clone()]).collect();
        let mut out = MPoly::<M>::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::<M>::constant(c.clone());
            for i in 0..N {
                let k = e[i] as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k]);
            }
            out = out.add(&term);
        }
        out
    }
}

impl MPoly<2> {
    pub fn x() -> Self {
        Self::var(0)
    }

    pub fn y() -> Self {
        Self::var(1)
    }

    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, i, j)| ([i, j], crate::numeric::q(c))))
    }

    /// A univariate polynomial in `x`, as a curve equation.
    pub fn from_x_poly(p: &Polynomial<Q>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ([i as u32, 0], c.clone())))
    }

    /// Coefficients in `y`: entry `j` is the polynomial in `x` multiplying `y^j`.
    pub fn coeffs_in_y(&self) -> Vec<Polynomial<Q>> {
        let Some(dy) = self.degree_in(1) else {
            return Vec::new();
        };
        let mut rows = vec![Vec::new(); dy as usize + 1];
        for (e, c) in &self.terms {
            let row = &mut rows[e[1] as usize];
            if row.len() <= e[0] as usize {
                row.resize(e[0] as usize + 1, Q::zero());
            }
            row[e[0] as usize] = c.clone();
        }
        rows.into_iter().map(Polynomial::new).collect()
    }

    /// `f(a, y)` as a polynomial in `y`.
    pub fn at_x(&self, a: &Q) -> Polynomial<Q> {
        Polynomial::new(self.coeffs_in_y().iter().map(|p| p.eval(a)).collect())
    }

    /// `f(x, b)` as a polynomial in `x`.
    pub fn at_y(&self, b: &Q) -> Polynomial<Q> {
        self.swap().at_x(b)
    }

    pub fn swap(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| ([e[1], e[0]], c.clone())).collect() }
    }

    /// `f(x, h(x))`.
    pub fn substitute_y(&self, h: &Polynomial<Q>) -> Polynomial<Q> {
        let mut out = Polynomial::zero();
        let mut hp = Polynomial::one();
        for cy in self.coeffs_in_y() {
            out = out.add(&cy.mul(&hp));
            hp = hp.mul(h);
        }
        out
    }

    /// `f(x + a, y + b)`: moves the point `(a, b)` to the origin.
    pub fn translate(&self, a: &Q, b: &Q) -> Self {
        let x = Self::x().add(&Self::constant(a.clone()));
        let y = Self::y().add(&Self::constant(b.clone()));
        self.compose(&[x, y])
    }

    /// `f(x + c y, y)`; fixes the origin and every horizontal line.
    pub fn shear(&self, c: &Q) -> Self {
        self.compose(&[Self::x().add(&Self::y().scale(c)), Self::y()])
    }
}

impl MPoly<3> {
    /// Affine chart obtained by setting coordinate `i` to 1, in the remaining two coordinates (in order).
    pub fn dehomogenize(&self, i: usize) -> MPoly<2> {
        let mut images: [MPoly<2>; 3] = [MPoly::zero(), MPoly::zero(), MPoly::zero()];
        let mut k = 0;
        for (j, slot) in images.iter_mut().enumerate() {
            if j == i {
                *slot = MPoly::one();
            } else {
                *slot = MPoly::var(k);
                k += 1;
            }
        }
        self.compose(&images)
    }

    /// `F(M (X, Y, Z)^T)` for an integer matrix `M`.
    pub fn linear_substitution(&self, m: &[[i64; 3]; 3]) -> Self {
        let row = |r: &[i64; 3]| {
            MPoly::from_terms((0..3).map(|j| {
                let mut e = [0; 3];
                e[j] = 1;
                (e, crate::numeric::q(r[j]))
            }))
        };
        self.compose(&[row(&m[0]), row(&m[1]), row(&m[2])])
    }
}

/// Checks that a polynomial is homogeneous and nonzero; returns its degree.
pub fn form_degree(f: &TernaryForm) -> Result<u32> {
    match f.total_degree() {
        Some(d) if f.is_homogeneous() && d >= 1 => Ok(d),
        _ => Err(Error::domain("expected a nonzero homogeneous form of positive degree")),
    }
}

const NAMES2: [&str; 2] = ["x", "y"];
const NAMES3: [&str; 3] = ["X", "Y", "Z"];

fn write_terms<const N: usize>(p: &MPoly<N>, names: &[&str], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    // highest degree first
    let mut terms: Vec<_> = p.terms.iter().collect();
    terms.sort_by(|a, b| {
        let da: u32 = a.0.iter().sum();
        let db: u32 = b.0.iter().sum();
        db.cmp(&da).then(b.0.cmp(a.0))
    });
    for (k, (e, c)) in terms.into_iter().enumerate() {
        let neg = c < &Q::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        match (k, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let is_const = e.iter().all(|&k| k == 0);
        let mut parts = Vec::new();
        if !mag.is_one() || is_const {
            parts.push(mag.to_string());
        }
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(names[i].to_string()),
                _ => parts.push(format!("{}^{}", names[i], k)),
            }
        }
        write!(f, "{}", parts.join("*"))?;
    }
    Ok(())
}

impl fmt::Display for MPoly<2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(self, &NAMES2, f)
    }
}

impl fmt::Display for MPoly<3> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(self, &NAMES3, f)
    }
}
