//! The Gaussian-PDMF fuzzy number and its ring structure.
//!
//! A fuzzy number `⟨x; d⁻, d⁺, μ⁻, μ⁺⟩` has core `x`, left and right spreads
//! `d⁻, d⁺ > 0`, and shape parameters `μ⁻, μ⁺`. Internally every number is
//! stored as its coordinate vector `(x, ln d⁻, ln d⁺, μ⁻, μ⁺)`; under this
//! map the space becomes a product ring over ℝ⁵, so addition, subtraction,
//! multiplication, and real scaling all act componentwise and stay free of
//! `powf`/`ln` round-off. The spreads are materialized on demand.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, MapAccess, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::DEFAULT_TOLERANCE;

/// Image of a fuzzy number under the coordinate isomorphism:
/// `(x, ln d⁻, ln d⁺, μ⁻, μ⁺)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coordinates(pub [f64; 5]);

impl Coordinates {
    /// Componentwise (Hadamard) product.
    pub fn hadamard(self, rhs: Coordinates) -> Coordinates {
        self.zip(rhs, |a, b| a * b)
    }

    /// Componentwise scaling by a real factor.
    pub fn scale(self, lambda: f64) -> Coordinates {
        Coordinates(self.0.map(|a| lambda * a))
    }

    /// Componentwise reciprocal.
    pub fn recip(self) -> Coordinates {
        Coordinates(self.0.map(|a| 1.0 / a))
    }

    /// Largest absolute component.
    pub fn max_abs(self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// True when every component agrees with `rhs` within `eps` (absolute).
    pub fn approx_eq(self, rhs: Coordinates, eps: f64) -> bool {
        self.0
            .iter()
            .zip(rhs.0.iter())
            .all(|(a, b)| (a - b).abs() <= eps)
    }

    fn zip(self, rhs: Coordinates, f: impl Fn(f64, f64) -> f64) -> Coordinates {
        let mut out = [0.0; 5];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = f(self.0[i], rhs.0[i]);
        }
        Coordinates(out)
    }
}

impl std::ops::Add for Coordinates {
    type Output = Coordinates;

    /// Componentwise sum.
    fn add(self, rhs: Coordinates) -> Coordinates {
        self.zip(rhs, |a, b| a + b)
    }
}

impl std::ops::Sub for Coordinates {
    type Output = Coordinates;

    /// Componentwise difference.
    fn sub(self, rhs: Coordinates) -> Coordinates {
        self.zip(rhs, |a, b| a - b)
    }
}

impl From<[f64; 5]> for Coordinates {
    fn from(c: [f64; 5]) -> Self {
        Coordinates(c)
    }
}

/// A Gaussian-PDMF fuzzy number, stored as its coordinate vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FuzzyNumber {
    coords: Coordinates,
}

impl FuzzyNumber {
    /// Additive identity `⟨0; 1, 1, 0, 0⟩`.
    pub const ZERO: FuzzyNumber = FuzzyNumber {
        coords: Coordinates([0.0; 5]),
    };

    /// Multiplicative identity `⟨1; e, e, 1, 1⟩`.
    pub const ONE: FuzzyNumber = FuzzyNumber {
        coords: Coordinates([1.0; 5]),
    };

    /// Linear-space basis; element `i` has a single unit coordinate in
    /// slot `i`.
    pub const BASIS: [FuzzyNumber; 5] = [
        FuzzyNumber {
            coords: Coordinates([1.0, 0.0, 0.0, 0.0, 0.0]),
        },
        FuzzyNumber {
            coords: Coordinates([0.0, 1.0, 0.0, 0.0, 0.0]),
        },
        FuzzyNumber {
            coords: Coordinates([0.0, 0.0, 1.0, 0.0, 0.0]),
        },
        FuzzyNumber {
            coords: Coordinates([0.0, 0.0, 0.0, 1.0, 0.0]),
        },
        FuzzyNumber {
            coords: Coordinates([0.0, 0.0, 0.0, 0.0, 1.0]),
        },
    ];

    /// Builds `⟨x; d⁻, d⁺, μ⁻, μ⁺⟩`, validating that all parameters are
    /// finite and both spreads are strictly positive.
    pub fn new(x: f64, d_minus: f64, d_plus: f64, mu_minus: f64, mu_plus: f64) -> Result<Self> {
        for (what, v) in [
            ("core x", x),
            ("spread d_minus", d_minus),
            ("spread d_plus", d_plus),
            ("shape mu_minus", mu_minus),
            ("shape mu_plus", mu_plus),
        ] {
            if !v.is_finite() {
                return Err(Error::NonFinite { what });
            }
        }
        if d_minus <= 0.0 {
            return Err(Error::NonPositiveRadius {
                side: "d_minus",
                value: d_minus,
            });
        }
        if d_plus <= 0.0 {
            return Err(Error::NonPositiveRadius {
                side: "d_plus",
                value: d_plus,
            });
        }
        Ok(FuzzyNumber {
            coords: Coordinates([x, d_minus.ln(), d_plus.ln(), mu_minus, mu_plus]),
        })
    }

    /// Inverse of the coordinate map; any real 5-vector is a valid image.
    pub fn from_coords(coords: Coordinates) -> Self {
        FuzzyNumber { coords }
    }

    /// The coordinate vector `(x, ln d⁻, ln d⁺, μ⁻, μ⁺)`.
    pub fn coords(self) -> Coordinates {
        self.coords
    }

    /// Core value `x`.
    pub fn x(self) -> f64 {
        self.coords.0[0]
    }

    /// Left spread `d⁻ = exp(c₂)`.
    pub fn d_minus(self) -> f64 {
        self.coords.0[1].exp()
    }

    /// Right spread `d⁺ = exp(c₃)`.
    pub fn d_plus(self) -> f64 {
        self.coords.0[2].exp()
    }

    /// Left shape parameter `μ⁻`.
    pub fn mu_minus(self) -> f64 {
        self.coords.0[3]
    }

    /// Right shape parameter `μ⁺`.
    pub fn mu_plus(self) -> f64 {
        self.coords.0[4]
    }

    /// Scalar action `λ·⟨x; d⁻, d⁺, μ⁻, μ⁺⟩ = ⟨λx; (d⁻)^λ, (d⁺)^λ, λμ⁻, λμ⁺⟩`;
    /// componentwise scaling in coordinates.
    pub fn scale(self, lambda: f64) -> Self {
        FuzzyNumber {
            coords: self.coords.scale(lambda),
        }
    }

    /// True when the element lies in the unit group: every coordinate
    /// exceeds [`DEFAULT_TOLERANCE`] in magnitude.
    pub fn is_unit(self) -> bool {
        self.is_unit_with(DEFAULT_TOLERANCE)
    }

    /// [`is_unit`](Self::is_unit) with an explicit tolerance.
    pub fn is_unit_with(self, eps: f64) -> bool {
        self.coords.0.iter().all(|c| c.abs() > eps)
    }

    /// Ring inverse `⟨1/x; e^{1/ln d⁻}, e^{1/ln d⁺}, 1/μ⁻, 1/μ⁺⟩`:
    /// componentwise reciprocals in coordinates.
    pub fn inverse(self) -> Result<Self> {
        self.inverse_with(DEFAULT_TOLERANCE)
    }

    /// [`inverse`](Self::inverse) with an explicit unit-test tolerance.
    pub fn inverse_with(self, eps: f64) -> Result<Self> {
        if !self.is_unit_with(eps) {
            return Err(Error::NotAUnit);
        }
        Ok(FuzzyNumber {
            coords: self.coords.recip(),
        })
    }

    /// Coordinatewise agreement within an absolute tolerance.
    pub fn approx_eq(self, rhs: FuzzyNumber, eps: f64) -> bool {
        self.coords.approx_eq(rhs.coords, eps)
    }

    /// Embeds a real number as the crisp element `⟨a; e^a, e^a, a, a⟩`,
    /// i.e. the constant coordinate vector `(a, a, a, a, a)`.
    pub fn crisp(a: f64) -> Self {
        FuzzyNumber {
            coords: Coordinates([a; 5]),
        }
    }

    /// True when the element is a crisp embedding within
    /// [`DEFAULT_TOLERANCE`].
    pub fn is_crisp(self) -> bool {
        self.is_crisp_with(DEFAULT_TOLERANCE)
    }

    /// [`is_crisp`](Self::is_crisp) with an explicit tolerance: all four
    /// trailing coordinates must agree with the core.
    pub fn is_crisp_with(self, eps: f64) -> bool {
        let c = self.coords.0;
        c[1..].iter().all(|&v| (v - c[0]).abs() <= eps)
    }

    /// The embedded real value, if the element is crisp.
    pub fn crisp_value(self) -> Option<f64> {
        self.is_crisp().then(|| self.x())
    }

    /// Field inverse within the crisp subfield: `a ↦ 1/a` on the embedded
    /// value, realized as coordinatewise reciprocals.
    pub fn crisp_inverse(self) -> Result<Self> {
        self.crisp_inverse_with(DEFAULT_TOLERANCE)
    }

    /// [`crisp_inverse`](Self::crisp_inverse) with an explicit tolerance.
    pub fn crisp_inverse_with(self, eps: f64) -> Result<Self> {
        if !self.is_crisp_with(eps) {
            return Err(Error::NotCrisp);
        }
        if !self.is_unit_with(eps) {
            return Err(Error::ZeroElement);
        }
        Ok(FuzzyNumber {
            coords: self.coords.recip(),
        })
    }
}

impl Add for FuzzyNumber {
    type Output = FuzzyNumber;

    fn add(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber {
            coords: self.coords + rhs.coords,
        }
    }
}

impl Sub for FuzzyNumber {
    type Output = FuzzyNumber;

    fn sub(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber {
            coords: self.coords - rhs.coords,
        }
    }
}

impl Mul for FuzzyNumber {
    type Output = FuzzyNumber;

    fn mul(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber {
            coords: self.coords.hadamard(rhs.coords),
        }
    }
}

impl Mul<FuzzyNumber> for f64 {
    type Output = FuzzyNumber;

    fn mul(self, rhs: FuzzyNumber) -> FuzzyNumber {
        rhs.scale(self)
    }
}

impl Neg for FuzzyNumber {
    type Output = FuzzyNumber;

    fn neg(self) -> FuzzyNumber {
        self.scale(-1.0)
    }
}

impl fmt::Display for FuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "⟨{}; {}, {}, {}, {}⟩",
            self.x(),
            self.d_minus(),
            self.d_plus(),
            self.mu_minus(),
            self.mu_plus()
        )
    }
}

impl FromStr for FuzzyNumber {
    type Err = Error;

    /// Parses `⟨x;dm,dp,mum,mup⟩` (angle brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['⟨', '<'])
            .trim_end_matches(['⟩', '>'])
            .trim();
        let err = |message: String| Error::Parse { message };
        let (head, tail) = trimmed
            .split_once(';')
            .ok_or_else(|| err(format!("expected `x;dm,dp,mum,mup`, got `{s}`")))?;
        let mut parts = vec![head];
        parts.extend(tail.split(','));
        if parts.len() != 5 {
            return Err(err(format!(
                "expected 5 components in `{s}`, found {}",
                parts.len()
            )));
        }
        let mut vals = [0.0; 5];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            *slot = part
                .trim()
                .parse::<f64>()
                .map_err(|e| err(format!("bad number `{}`: {e}", part.trim())))?;
        }
        FuzzyNumber::new(vals[0], vals[1], vals[2], vals[3], vals[4])
    }
}

impl Serialize for FuzzyNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [
            self.x(),
            self.d_minus(),
            self.d_plus(),
            self.mu_minus(),
            self.mu_plus(),
        ]
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FuzzyNumber {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(FuzzyNumberVisitor)
    }
}

struct FuzzyNumberVisitor;

impl<'de> Visitor<'de> for FuzzyNumberVisitor {
    type Value = FuzzyNumber;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(
            "an array [x, d_minus, d_plus, mu_minus, mu_plus] or an object with those fields",
        )
    }

    fn visit_seq<A: SeqAccess<'de>>(
        self,
        mut seq: A,
    ) -> std::result::Result<FuzzyNumber, A::Error> {
        let mut vals = [0.0; 5];
        for (i, slot) in vals.iter_mut().enumerate() {
            *slot = seq
                .next_element::<f64>()?
                .ok_or_else(|| de::Error::invalid_length(i, &"5 numbers"))?;
        }
        if seq.next_element::<f64>()?.is_some() {
            return Err(de::Error::invalid_length(6, &"exactly 5 numbers"));
        }
        FuzzyNumber::new(vals[0], vals[1], vals[2], vals[3], vals[4])
            .map_err(de::Error::custom)
    }

    fn visit_map<A: MapAccess<'de>>(
        self,
        mut map: A,
    ) -> std::result::Result<FuzzyNumber, A::Error> {
        let mut vals: [Option<f64>; 5] = [None; 5];
        const FIELDS: [&str; 5] = ["x", "d_minus", "d_plus", "mu_minus", "mu_plus"];
        while let Some(key) = map.next_key::<String>()? {
            match FIELDS.iter().position(|f| *f == key) {
                Some(i) => {
                    if vals[i].is_some() {
                        return Err(de::Error::duplicate_field(FIELDS[i]));
                    }
                    vals[i] = Some(map.next_value()?);
                }
                None => return Err(de::Error::unknown_field(&key, &FIELDS)),
            }
        }
        let mut out = [0.0; 5];
        for (i, v) in vals.iter().enumerate() {
            out[i] = v.ok_or_else(|| de::Error::missing_field(FIELDS[i]))?;
        }
        FuzzyNumber::new(out[0], out[1], out[2], out[3], out[4]).map_err(de::Error::custom)
    }
}
