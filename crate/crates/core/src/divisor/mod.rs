//! Divisors on the Riemann sphere, divisors of functions and 1-forms,
//! O(m) sections, Riemann–Roch bookkeeping and branched double covers.

mod cover;
mod sections;

use std::fmt;

use num_complex::Complex64;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{ord_at_infinity, poly_roots, RationalFunction, Scalar};
use crate::tolerances;

pub use cover::{branch_values, genus_double_cover, kummer_ram_index, DoubleCoverSpec};
pub use sections::{ell_elliptic, ell_p1, fta_verify, h0_om, rr_verify, section_divisor_om, FtaReport};

/// A point of the Riemann sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum P1Point {
    Finite(Complex64),
    Infinity,
}

impl P1Point {
    pub fn finite(re: f64, im: f64) -> Self {
        P1Point::Finite(Complex64::new(re, im))
    }

    pub fn real(x: f64) -> Self {
        P1Point::finite(x, 0.0)
    }

    /// Equality up to the absolute-plus-relative point tolerance.
    pub fn approx_eq(&self, other: &P1Point) -> bool {
        match (self, other) {
            (P1Point::Infinity, P1Point::Infinity) => true,
            (P1Point::Finite(a), P1Point::Finite(b)) => {
                (a - b).norm() <= tolerances::POINT_EQ * (1.0 + a.norm().max(b.norm()))
            }
            _ => false,
        }
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Infinity => write!(f, "inf"),
            P1Point::Finite(z) if z.im == 0.0 => write!(f, "{}", z.re),
            P1Point::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

impl Serialize for P1Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            P1Point::Infinity => s.serialize_str("inf"),
            P1Point::Finite(z) => [z.re, z.im].serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for P1Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Tag(String),
            Pair([f64; 2]),
        }
        match Raw::deserialize(d)? {
            Raw::Tag(t) if t == "inf" => Ok(P1Point::Infinity),
            Raw::Tag(t) => Err(de::Error::custom(format!("unknown point tag {t:?}"))),
            Raw::Pair([re, im]) if re.is_finite() && im.is_finite() => Ok(P1Point::finite(re, im)),
            Raw::Pair(_) => Err(de::Error::custom("point components must be finite")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DivisorEntry {
    pub point: P1Point,
    pub coeff: i64,
}

/// Finite integer combination of points of the sphere. No zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Divisor {
    entries: Vec<DivisorEntry>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (P1Point, i64)>) -> Self {
        let mut d = Self::new();
        for (p, c) in pairs {
            d.add_point(p, c);
        }
        d
    }

    /// `n * [p]`.
    pub fn point(p: P1Point, n: i64) -> Self {
        Self::from_pairs([(p, n)])
    }

    pub fn add_point(&mut self, p: P1Point, coeff: i64) {
        if coeff == 0 {
            return;
        }
        if let Some(i) = self.entries.iter().position(|e| e.point.approx_eq(&p)) {
            self.entries[i].coeff += coeff;
            if self.entries[i].coeff == 0 {
                self.entries.remove(i);
            }
        } else {
            self.entries.push(DivisorEntry { point: p, coeff });
        }
    }

    pub fn entries(&self) -> &[DivisorEntry] {
        &self.entries
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|e| e.coeff).sum()
    }

    pub fn coefficient(&self, p: &P1Point) -> i64 {
        self.entries
            .iter()
            .find(|e| e.point.approx_eq(p))
            .map_or(0, |e| e.coeff)
    }

    pub fn is_effective(&self) -> bool {
        self.entries.iter().all(|e| e.coeff >= 0)
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for e in &other.entries {
            out.add_point(e.point, e.coeff);
        }
        out
    }

    pub fn neg(&self) -> Divisor {
        Divisor {
            entries: self
                .entries
                .iter()
                .map(|e| DivisorEntry { point: e.point, coeff: -e.coeff })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        self.add(&other.neg())
    }

    /// Same entries up to order and point tolerance.
    pub fn approx_eq(&self, other: &Divisor) -> bool {
        self.sub(other).entries.is_empty()
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{}[{}]", e.coeff, e.point))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(f)`: zeros minus poles, including the point at infinity.
pub fn principal_divisor<T: Scalar>(f: &RationalFunction<T>) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::domain("divisor of the zero function"));
    }
    let mut d = finite_part(f)?;
    d.add_point(P1Point::Infinity, ord_at_infinity(f)?);
    if d.degree() != 0 {
        return Err(Error::Consistency(format!(
            "principal divisor has degree {} (root finding inaccurate)",
            d.degree()
        )));
    }
    Ok(d)
}

/// Divisor of the 1-form `f(z) dz`; at infinity `dz = -w^-2 dw` lowers the order by 2.
pub fn form_divisor<T: Scalar>(f: &RationalFunction<T>) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::domain("divisor of the zero form"));
    }
    let mut d = finite_part(f)?;
    d.add_point(P1Point::Infinity, ord_at_infinity(f)? - 2);
    if d.degree() != -2 {
        return Err(Error::Consistency(format!(
            "canonical divisor on the sphere has degree {} instead of -2",
            d.degree()
        )));
    }
    Ok(d)
}

fn finite_part<T: Scalar>(f: &RationalFunction<T>) -> Result<Divisor> {
    let mut d = Divisor::new();
    if f.num().degree().unwrap_or(0) > 0 {
        for r in poly_roots(f.num())? {
            d.add_point(P1Point::Finite(r.root), r.multiplicity as i64);
        }
    }
    if f.den().degree().unwrap_or(0) > 0 {
        for r in poly_roots(f.den())? {
            d.add_point(P1Point::Finite(r.root), -(r.multiplicity as i64));
        }
    }
    Ok(d)
}
