//! Membership evaluation, curve sampling, and calibration.
//!
//! The membership function of `⟨x; d⁻, d⁺, μ⁻, μ⁺⟩` is 1 at the core,
//! 0 outside the open support `(x − d⁻, x + d⁺)`, and on each branch the
//! composition of the standard normal CDF with a tangent reparameterization
//! of the branch interval:
//!
//! ```text
//! left:   Φ( tan((π/d⁻)(t − x + d⁻) − π/2) − μ⁻ )
//! right:  Φ( tan((π/d⁺)(x + d⁺ − t) − π/2) − μ⁺ )
//! ```
//!
//! Calibration inverts the same composition: given one point of the desired
//! curve on a branch, the shape parameter that passes through it is
//! `μ = tan(·) − Φ⁻¹(ordinate)`.

use crate::error::{Error, Result};
use crate::normal;
use crate::number::FuzzyNumber;

use std::f64::consts::{FRAC_PI_2, PI};

/// Tangent arguments are clamped to ±(π/2 − 1e-12); past that point the
/// CDF has already saturated to 0 or 1 at double precision.
const TAN_CLAMP: f64 = FRAC_PI_2 - 1e-12;

fn branch_tan(arg: f64) -> f64 {
    arg.clamp(-TAN_CLAMP, TAN_CLAMP).tan()
}

impl FuzzyNumber {
    /// Membership grade at `t`.
    pub fn membership(self, t: f64) -> f64 {
        let x0 = self.x();
        let dm = self.d_minus();
        let dp = self.d_plus();
        if t <= x0 - dm || t >= x0 + dp {
            0.0
        } else if t == x0 {
            1.0
        } else if t < x0 {
            normal::cdf(branch_tan(PI / dm * (t - x0 + dm) - FRAC_PI_2) - self.mu_minus())
        } else {
            normal::cdf(branch_tan(PI / dp * (x0 + dp - t) - FRAC_PI_2) - self.mu_plus())
        }
    }

    /// Samples the membership curve at `n ≥ 2` uniformly spaced abscissas
    /// covering the support padded by 10% of the total spread on each side.
    pub fn membership_samples(self, n: usize) -> Vec<(f64, f64)> {
        assert!(n >= 2, "need at least two sample points");
        let pad = 0.1 * (self.d_minus() + self.d_plus());
        let lo = self.x() - self.d_minus() - pad;
        let hi = self.x() + self.d_plus() + pad;
        let step = (hi - lo) / (n - 1) as f64;
        (0..n)
            .map(|i| {
                let t = if i + 1 == n { hi } else { lo + i as f64 * step };
                (t, self.membership(t))
            })
            .collect()
    }
}

/// Which branch of the membership curve a control point constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchSide {
    /// The increasing branch on `(x − d⁻, x)`.
    Left,
    /// The decreasing branch on `(x, x + d⁺)`.
    Right,
}

/// A prescribed point `(abscissa, ordinate)` of the membership curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ControlPoint {
    pub abscissa: f64,
    pub ordinate: f64,
}

impl ControlPoint {
    /// Validates finiteness and that the ordinate lies strictly in (0, 1).
    pub fn new(abscissa: f64, ordinate: f64) -> Result<Self> {
        if !abscissa.is_finite() {
            return Err(Error::NonFinite {
                what: "control point abscissa",
            });
        }
        if !(ordinate > 0.0 && ordinate < 1.0) {
            return Err(Error::BadOrdinate { value: ordinate });
        }
        Ok(ControlPoint { abscissa, ordinate })
    }
}

/// Shape parameter that makes the branch of a number with core `x0` and
/// spread `d` pass through the control point.
pub fn mu_from_control_point(
    x0: f64,
    d: f64,
    side: BranchSide,
    point: ControlPoint,
) -> Result<f64> {
    if !x0.is_finite() || !d.is_finite() {
        return Err(Error::NonFinite {
            what: "branch core and spread",
        });
    }
    if d <= 0.0 {
        return Err(Error::NonPositiveRadius {
            side: match side {
                BranchSide::Left => "d_minus",
                BranchSide::Right => "d_plus",
            },
            value: d,
        });
    }
    let p = ControlPoint::new(point.abscissa, point.ordinate)?;
    let inside = match side {
        BranchSide::Left => x0 - d < p.abscissa && p.abscissa < x0,
        BranchSide::Right => x0 < p.abscissa && p.abscissa < x0 + d,
    };
    if !inside {
        return Err(Error::OutOfBranch {
            abscissa: p.abscissa,
        });
    }
    let arg = match side {
        BranchSide::Left => PI / d * (p.abscissa - x0 + d) - FRAC_PI_2,
        BranchSide::Right => PI / d * (x0 + d - p.abscissa) - FRAC_PI_2,
    };
    Ok(branch_tan(arg) - normal::quantile(p.ordinate)?)
}

/// Converts a trapezoidal fuzzy number `(a, b, c, d)` (support `[a, d]`,
/// plateau `[b, c]`) to Gaussian-PDMF form with explicit control points:
/// the core is the plateau midpoint, the spreads reach the support ends,
/// and each shape parameter is calibrated through its control point.
pub fn from_trapezoid(
    a: f64,
    b: f64,
    c: f64,
    d: f64,
    left: ControlPoint,
    right: ControlPoint,
) -> Result<FuzzyNumber> {
    for (what, v) in [
        ("trapezoid a", a),
        ("trapezoid b", b),
        ("trapezoid c", c),
        ("trapezoid d", d),
    ] {
        if !v.is_finite() {
            return Err(Error::NonFinite { what });
        }
    }
    if !(a < b && b <= c && c < d) {
        return Err(Error::BadShape {
            reason: format!("trapezoid ({a}, {b}, {c}, {d}) must satisfy a < b <= c < d"),
        });
    }
    let x0 = 0.5 * (b + c);
    let dm = x0 - a;
    let dp = d - x0;
    let mu_minus = mu_from_control_point(x0, dm, BranchSide::Left, left)?;
    let mu_plus = mu_from_control_point(x0, dp, BranchSide::Right, right)?;
    FuzzyNumber::new(x0, dm, dp, mu_minus, mu_plus)
}

/// [`from_trapezoid`] with the default control points: a quarter of the way
/// in from each plateau end at ordinate 0.99, or, for a triangular input
/// (`b == c`), the branch midpoints at ordinate 0.5 (which pin both shape
/// parameters to zero).
pub fn from_trapezoid_default(a: f64, b: f64, c: f64, d: f64) -> Result<FuzzyNumber> {
    let (left, right) = if b < c {
        let quarter = 0.25 * (c - b);
        (
            ControlPoint::new(b + quarter, 0.99)?,
            ControlPoint::new(c - quarter, 0.99)?,
        )
    } else {
        let x0 = 0.5 * (b + c);
        (
            ControlPoint::new(x0 - 0.5 * (x0 - a), 0.5)?,
            ControlPoint::new(x0 + 0.5 * (d - x0), 0.5)?,
        )
    };
    from_trapezoid(a, b, c, d, left, right)
}
