use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexFn;
use crate::rational::{parse_q, q, serde_q, Q};

/// A vertex function given either as one constant or per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FnParam {
    Const(#[serde(with = "serde_q")] Q),
    PerVertex(VertexFn),
}

impl FnParam {
    pub fn resolve(&self, n: usize) -> Result<VertexFn> {
        match self {
            FnParam::Const(c) => Ok(VertexFn::constant(n, *c)),
            FnParam::PerVertex(f) => {
                f.check_len(n)?;
                Ok(f.clone())
            }
        }
    }

    pub fn constant(&self) -> Option<Q> {
        match self {
            FnParam::Const(c) => Some(*c),
            FnParam::PerVertex(_) => None,
        }
    }
}

/// Parameters shared by the theorem registry. Unset vertex functions take
/// per-theorem defaults: `f = r`, `g = r - 1`, `h = 0`, `phi = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdParams {
    pub r: i64,
    pub m: usize,
    #[serde(with = "serde_q")]
    pub a: Q,
    #[serde(with = "serde_q")]
    pub epsilon: Q,
    /// The divisor `n` in bounds such as `omega(G - S) <= |S|/n + 1`.
    #[serde(with = "serde_q")]
    pub n_div: Q,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_fn: Option<FnParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_fn: Option<FnParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_fn: Option<FnParam>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<FnParam>,
    pub i_shift: i64,
}

impl Default for ThresholdParams {
    fn default() -> Self {
        ThresholdParams {
            r: 2,
            m: 1,
            a: q(2),
            epsilon: q(1),
            n_div: q(2),
            f_fn: None,
            g_fn: None,
            h_fn: None,
            phi: None,
            i_shift: 1,
        }
    }
}

impl ThresholdParams {
    pub fn f(&self, n: usize) -> Result<VertexFn> {
        match &self.f_fn {
            Some(f) => f.resolve(n),
            None => Ok(VertexFn::constant_int(n, self.r)),
        }
    }

    pub fn g(&self, n: usize) -> Result<VertexFn> {
        match &self.g_fn {
            Some(g) => g.resolve(n),
            None => Ok(VertexFn::constant_int(n, self.r - 1)),
        }
    }

    pub fn h(&self, n: usize) -> Result<VertexFn> {
        match &self.h_fn {
            Some(h) => h.resolve(n),
            None => Ok(VertexFn::constant_int(n, 0)),
        }
    }

    pub fn phi(&self, n: usize) -> Result<VertexFn> {
        match &self.phi {
            Some(p) => p.resolve(n),
            None => Ok(VertexFn::constant_int(n, 1)),
        }
    }

    /// Applies comma-separated `key=value` assignments. Vertex functions
    /// accept a constant here; per-vertex values are set programmatically.
    pub fn apply(&mut self, assignments: &str) -> Result<()> {
        for item in assignments.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParam(format!("expected key=value, got {item:?}")))?;
            let int = || -> Result<i64> {
                value
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidParam(format!("{key} needs an integer, got {value:?}")))
            };
            match key.trim() {
                "r" => self.r = int()?,
                "m" => {
                    let m = int()?;
                    if m <= 0 {
                        return Err(Error::InvalidParam("m must be positive".into()));
                    }
                    self.m = m as usize;
                }
                "a" => self.a = parse_q(value)?,
                "eps" | "epsilon" => self.epsilon = parse_q(value)?,
                "n" | "n_div" => self.n_div = parse_q(value)?,
                "i" | "i_shift" => self.i_shift = int()?,
                "f" => self.f_fn = Some(FnParam::Const(parse_q(value)?)),
                "g" => self.g_fn = Some(FnParam::Const(parse_q(value)?)),
                "h" => self.h_fn = Some(FnParam::Const(parse_q(value)?)),
                "phi" => self.phi = Some(FnParam::Const(parse_q(value)?)),
                other => return Err(Error::InvalidParam(format!("unknown parameter {other:?}"))),
            }
        }
        if self.r < 0 || self.i_shift < 0 {
            return Err(Error::InvalidParam("r and i must be nonnegative".into()));
        }
        if self.epsilon.is_negative() {
            return Err(Error::InvalidParam("epsilon must be nonnegative".into()));
        }
        Ok(())
    }
}

/// A theorem id with its parameters, written `ID` or `ID:key=value,...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSpec {
    pub id: String,
    pub params: ThresholdParams,
}

impl FromStr for TheoremSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (id, rest) = s.split_once(':').unwrap_or((s, ""));
        let id = id.trim().to_string();
        if super::registry::lookup(&id).is_none() {
            return Err(Error::UnknownTheorem(id));
        }
        let mut params = ThresholdParams::default();
        params.apply(rest)?;
        Ok(TheoremSpec { id, params })
    }
}

/// `epsilon_0` in the `t_0` threshold: 1 exactly when `a` is an integer
/// with the same parity as `f_v`. A non-integral `a` has no parity and
/// gets 0.
pub fn epsilon0(a: Q, f_v: i64) -> i64 {
    if a.is_integer() && (a.to_integer() - f_v).rem_euclid(2) == 0 {
        1
    } else {
        0
    }
}

/// `t_0(a, f, h)` at one vertex:
/// `((f + a - 1)^2 - 4h - epsilon_0) / (4(a - 1))`.
pub fn eval_t0(a: Q, f_v: i64, h_v: Q) -> Result<Q> {
    if a <= q(1) {
        return Err(Error::InvalidParam("t_0 needs a > 1".into()));
    }
    let base = q(f_v) + a - q(1);
    Ok((base * base - q(4) * h_v - q(epsilon0(a, f_v))) / (q(4) * (a - q(1))))
}
