//! Builders for gl, sl, psl, osp and the exceptional algebras D(2,1;α),
//! G(3) and F(4).

mod exceptional;
pub(crate) mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::roots::{self, Family};
use crate::scalar::Field;
use crate::superlie::SuperAlgebra;

pub use exceptional::{build_d21, build_f4, build_g3};
pub use matrix::{build_gl, build_osp, build_osp_with_form, build_psl, build_sl, Realization};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Gl { m: usize, n: usize },
    Sl { m: usize, n: usize },
    Psl { n: usize },
    Osp { m: usize, n2: usize },
    D21 { alpha: BigRational },
    G3,
    F4,
}

impl AlgebraKind {
    pub fn family_name(&self) -> &'static str {
        match self {
            AlgebraKind::Gl { .. } => "gl",
            AlgebraKind::Sl { .. } => "sl",
            AlgebraKind::Psl { .. } => "psl",
            AlgebraKind::Osp { .. } => "osp",
            AlgebraKind::D21 { .. } => "d21",
            AlgebraKind::G3 => "g3",
            AlgebraKind::F4 => "f4",
        }
    }

    pub fn params_json(&self) -> Value {
        match self {
            AlgebraKind::Gl { m, n } | AlgebraKind::Sl { m, n } => json!({"m": m, "n": n}),
            AlgebraKind::Psl { n } => json!({"m": n, "n": n}),
            AlgebraKind::Osp { m, n2 } => json!({"m": m, "n": n2 / 2}),
            AlgebraKind::D21 { alpha } => json!({"alpha": alpha.to_string()}),
            AlgebraKind::G3 | AlgebraKind::F4 => json!({}),
        }
    }

    pub fn from_json(name: &str, params: &Value) -> Result<Self> {
        let get = |k: &str| {
            params
                .get(k)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("missing parameter {k}")))
        };
        Ok(match name {
            "gl" => AlgebraKind::Gl { m: get("m")?, n: get("n")? },
            "sl" => AlgebraKind::Sl { m: get("m")?, n: get("n")? },
            "psl" => AlgebraKind::Psl { n: get("n")? },
            "osp" => AlgebraKind::Osp { m: get("m")?, n2: 2 * get("n")? },
            "d21" => {
                let s = params
                    .get("alpha")
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::Parse("missing parameter alpha".into()))?;
                let alpha = s.parse::<BigRational>().map_err(|_| Error::Parse(format!("alpha {s:?}")))?;
                AlgebraKind::D21 { alpha }
            }
            "g3" => AlgebraKind::G3,
            "f4" => AlgebraKind::F4,
            other => return Err(Error::Parse(format!("unknown algebra kind {other:?}"))),
        })
    }

    /// The root-system family used for the good-prime test.
    pub fn root_family(&self) -> Family {
        match *self {
            AlgebraKind::Gl { m, n } | AlgebraKind::Sl { m, n } => Family::A { m, n },
            AlgebraKind::Psl { n } => Family::A { m: n, n },
            AlgebraKind::Osp { m, n2 } => {
                if m % 2 == 1 {
                    Family::B { m, n: n2 / 2 }
                } else if m == 2 {
                    Family::C { n: n2 / 2 }
                } else {
                    Family::D { m, n: n2 / 2 }
                }
            }
            AlgebraKind::D21 { .. } => Family::D21,
            AlgebraKind::G3 => Family::G3,
            AlgebraKind::F4 => Family::F4,
        }
    }

    /// Root system of the family; α only matters for D(2,1;α).
    pub fn root_system(&self) -> roots::RootSystem {
        let one = BigRational::from_integer(BigInt::from(1));
        let alpha = match self {
            AlgebraKind::D21 { alpha } => alpha,
            _ => &one,
        };
        roots::root_system(&self.root_family(), alpha)
    }

    pub fn d21(alpha: i64) -> Self {
        AlgebraKind::D21 { alpha: BigRational::from_integer(BigInt::from(alpha)) }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Gl { m, n } => write!(f, "gl({m}|{n})"),
            AlgebraKind::Sl { m, n } => write!(f, "sl({m}|{n})"),
            AlgebraKind::Psl { n } => write!(f, "psl({n}|{n})"),
            AlgebraKind::Osp { m, n2 } => write!(f, "osp({m}|{n2})"),
            AlgebraKind::D21 { alpha } => write!(f, "D(2,1;{alpha})"),
            AlgebraKind::G3 => write!(f, "G(3)"),
            AlgebraKind::F4 => write!(f, "F(4)"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildOptions {
    /// Skip the good-prime gate (constructions that need to divide by p still fail).
    pub allow_bad_prime: bool,
}

pub(crate) fn gate(kind: &AlgebraKind, field: Field, opts: BuildOptions) -> Result<()> {
    let p = field.characteristic();
    if p == 0 || opts.allow_bad_prime {
        return Ok(());
    }
    if !roots::is_good_prime(&kind.root_family(), p) {
        return Err(Error::BadPrime { family: kind.to_string(), p });
    }
    Ok(())
}

/// Builds any supported algebra.
pub fn build(kind: &AlgebraKind, field: Field, opts: BuildOptions) -> Result<SuperAlgebra> {
    match kind {
        AlgebraKind::Gl { m, n } => matrix::gl(*m, *n, field, opts),
        AlgebraKind::Sl { m, n } => matrix::sl(*m, *n, field, opts),
        AlgebraKind::Psl { n } => matrix::psl(*n, field, opts),
        AlgebraKind::Osp { m, n2 } => matrix::osp(*m, *n2, field, opts),
        AlgebraKind::D21 { alpha } => exceptional::d21(alpha, field, opts),
        AlgebraKind::G3 => exceptional::g3(field, opts),
        AlgebraKind::F4 => exceptional::f4(field, opts),
    }
}

/// Lower bound on p from the cited characteristic-p centralizer dimension
/// results; below it reports carry a warning, nothing is refused.
pub fn wang_zhao_bound(kind: &AlgebraKind) -> Option<u64> {
    match kind {
        AlgebraKind::D21 { .. } => Some(3),
        AlgebraKind::G3 | AlgebraKind::F4 => Some(15),
        _ => None,
    }
}
