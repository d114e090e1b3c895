//! Named coefficient perturbations used to test that each suite can fail.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// W⁽²⁾ closed form with α(s−1) replaced by αs.
    GenW2Alpha,
    /// d₀ with the unsigned last ghost term.
    D0LastSign,
    /// (W⁽²⁾)₍₀₎W⁽²⁾ closed form with the ∂W⁽²⁾ coefficient doubled.
    OpeW2W2,
    /// Φ(X⁺₀,₁) with (l−1)α replaced by lα.
    PhiX01Alpha,
    /// ev(H_{i,1}) with the ħ E_{i,i}E_{i+1,i+1} coefficient doubled.
    EvH1Hbar,
    /// Triple-product leading terms with r replaced by r+1.
    AppendixT3R,
}

impl Mutation {
    pub const ALL: [Mutation; 6] = [
        Mutation::GenW2Alpha,
        Mutation::D0LastSign,
        Mutation::OpeW2W2,
        Mutation::PhiX01Alpha,
        Mutation::EvH1Hbar,
        Mutation::AppendixT3R,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Mutation::GenW2Alpha => "gen.w2_alpha",
            Mutation::D0LastSign => "d0.last_sign",
            Mutation::OpeW2W2 => "ope.w2w2_dw2",
            Mutation::PhiX01Alpha => "phi.x01_alpha",
            Mutation::EvH1Hbar => "ev.h1_hbar",
            Mutation::AppendixT3R => "appendix.t3_r",
        }
    }

    /// The suite this mutation targets.
    pub fn suite(self) -> &'static str {
        self.id().split('.').next().unwrap()
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Mutation, String> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.id() == s)
            .ok_or_else(|| format!("unknown mutation {s:?}; known: {}", Mutation::ALL.map(|m| m.id()).join(", ")))
    }
}

/// True when `m` is the active mutation.
pub fn active(cur: Option<Mutation>, m: Mutation) -> bool {
    cur == Some(m)
}
