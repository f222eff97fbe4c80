//! The fixed parameter variable set shared by every coefficient field.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::laurent::Ring;
use super::poly::{exps_zero, Exps};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Q,
    T,
    T0,
    Tn,
    U0,
    Un,
    Ts,
    Tm,
    Tl,
}

pub const NPARAMS: usize = 9;

impl Param {
    pub const ALL: [Param; NPARAMS] = [
        Param::Q,
        Param::T,
        Param::T0,
        Param::Tn,
        Param::U0,
        Param::Un,
        Param::Ts,
        Param::Tm,
        Param::Tl,
    ];

    /// The five Noumi parameters in table order.
    pub const NOUMI: [Param; 5] = [Param::T, Param::T0, Param::Tn, Param::U0, Param::Un];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::T => "t",
            Param::T0 => "t0",
            Param::Tn => "tn",
            Param::U0 => "u0",
            Param::Un => "un",
            Param::Ts => "ts",
            Param::Tm => "tm",
            Param::Tl => "tl",
        }
    }

    pub fn from_name(s: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == s)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn param_ring() -> &'static Ring {
    static RING: OnceLock<Ring> = OnceLock::new();
    RING.get_or_init(|| Ring::new(Param::ALL.map(Param::name)))
}

/// Doubled exponent vector over the parameters, from `(param, doubled exponent)` pairs.
pub fn pmono(entries: &[(Param, i32)]) -> Exps {
    let mut e = exps_zero(NPARAMS);
    for &(p, k) in entries {
        e[p.index()] += k;
    }
    e
}
