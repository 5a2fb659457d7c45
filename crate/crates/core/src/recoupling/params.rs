use num_complex::Complex64;
use serde::Serialize;

use super::RecouplingError;
use crate::exactnum::gcd_i64;

/// Exponent in the twist coefficient θ_i = (−1)^i A^{i(i±2)}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Default)]
pub enum TwistConvention {
    /// `i(i+2)`: the convention behind the reference genus-2 twist matrices.
    #[default]
    Plus,
    /// `i(i−2)`: the opposite sign in the linear term.
    Minus,
}

impl TwistConvention {
    pub fn exponent(self, i: u32) -> i64 {
        let i = i as i64;
        match self {
            Self::Plus => i * (i + 2),
            Self::Minus => i * (i - 2),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Plus => "theta_i = (-1)^i A^(i(i+2))",
            Self::Minus => "theta_i = (-1)^i A^(i(i-2))",
        }
    }
}

/// Level `r`, the cyclotomic order `N`, and the exponent `k` with `A = ζ_N^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TheoryParams {
    level: u32,
    order: u32,
    root: i64,
    twist: TwistConvention,
}

impl TheoryParams {
    /// `N = 4p` for even `r`, `2p` for odd `r`, with `p = r + 2`.
    pub fn default_order(level: u32) -> u32 {
        let p = level + 2;
        if level.is_multiple_of(2) {
            4 * p
        } else {
            2 * p
        }
    }

    /// The unitary root `A = ±i·e^{iπ/(2p)}`.
    ///
    /// For even `r` this is `ζ_{4p}^{p+1}`. For odd `r` only `A²` matters and
    /// the root is taken in `ℚ(ζ_{2p})`; the sign is chosen so that the
    /// exponent is coprime to `2p`.
    pub fn unitary(level: u32) -> Result<Self, RecouplingError> {
        let p = level as i64 + 2;
        let k = if level.is_multiple_of(2) {
            p + 1
        } else {
            let h = (p + 1) / 2;
            if h % 2 == 1 {
                h
            } else {
                h + p
            }
        };
        Self::with_root(level, k)
    }

    pub fn with_root(level: u32, root: i64) -> Result<Self, RecouplingError> {
        Self::with_order_root(level, Self::default_order(level), root)
    }

    pub fn with_order_root(level: u32, order: u32, root: i64) -> Result<Self, RecouplingError> {
        if level < 1 {
            return Err(RecouplingError::InvalidParams("level must be at least 1".into()));
        }
        if order <= 4 {
            return Err(RecouplingError::InvalidParams(format!(
                "root order {order} too small: A^4 must differ from 1"
            )));
        }
        let root = root.rem_euclid(order as i64);
        if gcd_i64(root, order as i64) != 1 {
            return Err(RecouplingError::InvalidParams(format!(
                "root exponent {root} is not coprime to {order}"
            )));
        }
        Ok(Self {
            level,
            order,
            root,
            twist: TwistConvention::Plus,
        })
    }

    pub fn with_twist(mut self, twist: TwistConvention) -> Self {
        self.twist = twist;
        self
    }

    /// Same level and convention, root `A ↦ A^a`.
    pub fn galois(&self, a: i64) -> Result<Self, RecouplingError> {
        Ok(Self::with_order_root(self.level, self.order, self.root * a)?.with_twist(self.twist))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn p(&self) -> u32 {
        self.level + 2
    }

    pub fn is_even(&self) -> bool {
        self.level.is_multiple_of(2)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn root(&self) -> i64 {
        self.root
    }

    pub fn twist(&self) -> TwistConvention {
        self.twist
    }

    /// `A` as a complex number.
    pub fn a_value(&self) -> Complex64 {
        Complex64::from_polar(
            1.0,
            std::f64::consts::TAU * self.root as f64 / self.order as f64,
        )
    }

    /// `I_r`: `{0,…,r}` for even `r`, `{0,2,…,r−1}` for odd `r`.
    pub fn colors(&self) -> Vec<u32> {
        color_set(self.level)
    }

    pub fn is_color(&self, c: u32) -> bool {
        c <= self.level && (self.is_even() || c.is_multiple_of(2))
    }

    /// Parity, triangle inequality and `a+b+c ≤ 2r`.
    pub fn is_admissible(&self, a: u32, b: u32, c: u32) -> bool {
        self.is_color(a) && self.is_color(b) && self.is_color(c) && admissible(self.level, a, b, c)
    }
}

pub fn color_set(level: u32) -> Vec<u32> {
    if level.is_multiple_of(2) {
        (0..=level).collect()
    } else {
        (0..level).step_by(2).collect()
    }
}

/// Admissibility of a vertex at level `r` (colors assumed in range).
pub fn admissible(level: u32, a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && a.abs_diff(b) <= c && c <= a + b && a + b + c <= 2 * level
}

/// An admissible vertex triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissibleTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl AdmissibleTriple {
    pub fn new(params: &TheoryParams, a: u32, b: u32, c: u32) -> Result<Self, RecouplingError> {
        if params.is_admissible(a, b, c) {
            Ok(Self { a, b, c })
        } else {
            Err(RecouplingError::NotAdmissible(vec![a, b, c]))
        }
    }

    pub fn as_tuple(&self) -> (u32, u32, u32) {
        (self.a, self.b, self.c)
    }
}
