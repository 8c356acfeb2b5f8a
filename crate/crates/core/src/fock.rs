//! Occupation-number states of one Unruh mode in the Rindler basis, the joint
//! Alice ⊗ Unruh-mode states, and partial traces down to two qubits.
//!
//! A single mode lives on four two-level factors ordered `(I⁺, I⁻, II⁺, II⁻)`;
//! the ket `|ijkl⟩` is stored at index `8i + 4j + 2k + l`. A [`JointState`]
//! prepends Alice's qubit, so amplitude `(a, i, j, k, l)` sits at
//! `16a + 8i + 4j + 2k + l`. Fermionic signs are carried by the amplitudes
//! themselves, and partial traces are plain component-wise sums in this basis.

use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix4;

use crate::density::TwoQubitDensity;
use crate::error::{Error, Result};
use crate::params::UnruhParams;
use crate::C64;

/// Number of amplitudes for the four Rindler factors of one mode.
pub const MODE_DIM: usize = 16;
/// Number of amplitudes for Alice's qubit plus one Unruh mode.
pub const JOINT_DIM: usize = 32;

pub const NORM_TOL: f64 = 1e-12;

/// Frequency sign of an Unruh excitation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frequency {
    /// Particle (positive frequency).
    Positive,
    /// Antiparticle (negative frequency).
    Negative,
}

/// Which of the two entangled initial states `ψ±` is prepared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InitialSign {
    Plus,
    Minus,
}

impl InitialSign {
    pub fn frequency(self) -> Frequency {
        match self {
            InitialSign::Plus => Frequency::Positive,
            InitialSign::Minus => Frequency::Negative,
        }
    }
}

/// The accelerated observer: Rob lives in wedge I, AntiRob in wedge II.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Observer {
    Rob,
    AntiRob,
}

/// The frequency sector the observer's detector is sensitive to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sector {
    Particle,
    Antiparticle,
}

/// One of the eight reduced two-qubit states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReductionSpec {
    pub initial: InitialSign,
    pub observer: Observer,
    pub sector: Sector,
}

impl ReductionSpec {
    pub const fn new(initial: InitialSign, observer: Observer, sector: Sector) -> Self {
        Self {
            initial,
            observer,
            sector,
        }
    }

    /// All eight combinations, ordered (initial, observer, sector).
    pub fn all() -> [ReductionSpec; 8] {
        use InitialSign::*;
        use Observer::*;
        use Sector::*;
        [
            Self::new(Plus, Rob, Particle),
            Self::new(Plus, Rob, Antiparticle),
            Self::new(Plus, AntiRob, Particle),
            Self::new(Plus, AntiRob, Antiparticle),
            Self::new(Minus, Rob, Particle),
            Self::new(Minus, Rob, Antiparticle),
            Self::new(Minus, AntiRob, Particle),
            Self::new(Minus, AntiRob, Antiparticle),
        ]
    }

    /// The four states obtained from `ψ+`.
    pub fn plus_family() -> [ReductionSpec; 4] {
        let all = Self::all();
        [all[0], all[1], all[2], all[3]]
    }
}

impl fmt::Display for ReductionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.initial, self.observer, self.sector)
    }
}

macro_rules! token_enum {
    ($ty:ty { $($variant:path => $tok:literal),+ $(,)? }) => {
        impl $ty {
            pub fn token(self) -> &'static str {
                match self { $($variant => $tok),+ }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.token())
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                match s.to_ascii_lowercase().as_str() {
                    $($tok => Ok($variant),)+
                    other => Err(format!(
                        "unknown value `{other}`, expected one of: {}",
                        [$($tok),+].join(", ")
                    )),
                }
            }
        }
    };
}

token_enum!(InitialSign { InitialSign::Plus => "plus", InitialSign::Minus => "minus" });
token_enum!(Observer { Observer::Rob => "rob", Observer::AntiRob => "antirob" });
token_enum!(Sector { Sector::Particle => "particle", Sector::Antiparticle => "antiparticle" });

/// Packs occupations `(i, j, k, l)` of `(I⁺, I⁻, II⁺, II⁻)` into a mode index.
pub const fn mode_index(i: usize, j: usize, k: usize, l: usize) -> usize {
    8 * i + 4 * j + 2 * k + l
}

/// Amplitudes of one Unruh mode over the sixteen Rindler occupation kets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeState([C64; MODE_DIM]);

impl ModeState {
    fn from_terms(terms: &[(usize, C64)]) -> Self {
        let mut amps = [C64::new(0.0, 0.0); MODE_DIM];
        for &(idx, amp) in terms {
            amps[idx] += amp;
        }
        Self(amps)
    }

    pub fn amplitudes(&self) -> &[C64; MODE_DIM] {
        &self.0
    }

    pub fn amplitude(&self, i: usize, j: usize, k: usize, l: usize) -> C64 {
        self.0[mode_index(i, j, k, l)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &ModeState) -> C64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Unruh vacuum of one mode expressed in the Rindler basis.
pub fn unruh_vacuum(params: &UnruhParams) -> ModeState {
    let (s, c) = params.r().sin_cos();
    let re = |x: f64| C64::new(x, 0.0);
    ModeState::from_terms(&[
        (mode_index(0, 0, 0, 0), re(c * c)),
        (mode_index(0, 1, 1, 0), re(-s * c)),
        (mode_index(1, 0, 0, 1), re(s * c)),
        (mode_index(1, 1, 1, 1), re(-s * s)),
    ])
}

/// One-excitation Unruh state (particle for positive frequency, antiparticle
/// for negative) with right/left weights `q_r`, `q_l`.
pub fn unruh_particle(params: &UnruhParams, frequency: Frequency) -> ModeState {
    let (s, c) = params.r().sin_cos();
    let (q_r, q_l) = (params.q_r(), params.q_l());
    match frequency {
        Frequency::Positive => ModeState::from_terms(&[
            (mode_index(1, 0, 0, 0), q_r * c),
            (mode_index(1, 1, 1, 0), q_r * -s),
            (mode_index(0, 0, 1, 0), q_l * c),
            (mode_index(1, 0, 1, 1), q_l * s),
        ]),
        Frequency::Negative => ModeState::from_terms(&[
            (mode_index(0, 1, 0, 0), q_r * c),
            (mode_index(1, 1, 0, 1), q_r * s),
            (mode_index(0, 0, 0, 1), q_l * c),
            (mode_index(0, 1, 1, 1), q_l * -s),
        ]),
    }
}

/// Normalized amplitudes over Alice's qubit ⊗ the four Rindler factors.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState([C64; JOINT_DIM]);

impl JointState {
    /// Wraps raw amplitudes, rejecting vectors whose squared norm is not 1
    /// within [`NORM_TOL`].
    pub fn from_amplitudes(amplitudes: [C64; JOINT_DIM]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if !((norm_sq - 1.0).abs() <= NORM_TOL) {
            return Err(Error::Normalization { norm_sq });
        }
        Ok(Self(amplitudes))
    }

    pub fn amplitudes(&self) -> &[C64; JOINT_DIM] {
        &self.0
    }

    pub fn amplitude(&self, alice: usize, mode: usize) -> C64 {
        self.0[MODE_DIM * alice + mode]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }
}

/// `(|0⟩_A ⊗ vacuum + |1⟩_A ⊗ excitation) / √2`, with a particle excitation
/// for `ψ+` and an antiparticle one for `ψ−`.
pub fn initial_state(params: &UnruhParams, sign: InitialSign) -> Result<JointState> {
    let vacuum = unruh_vacuum(params);
    let excited = unruh_particle(params, sign.frequency());
    let w = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = [C64::new(0.0, 0.0); JOINT_DIM];
    for (m, (v, e)) in vacuum.0.iter().zip(excited.0.iter()).enumerate() {
        amps[m] = v * w;
        amps[MODE_DIM + m] = e * w;
    }
    JointState::from_amplitudes(amps)
}

/// Bit position (within the 4-bit mode index) of the factor the observer keeps.
fn kept_bit(observer: Observer, sector: Sector) -> usize {
    match (observer, sector) {
        (Observer::Rob, Sector::Particle) => 3,
        (Observer::Rob, Sector::Antiparticle) => 2,
        (Observer::AntiRob, Sector::Particle) => 1,
        (Observer::AntiRob, Sector::Antiparticle) => 0,
    }
}

/// Traces `|state⟩⟨state|` over the inaccessible wedge and the opposite
/// frequency factor of the observer's wedge.
///
/// The result is in the basis `|a m⟩` (Alice first, then the kept Rindler
/// mode), i.e. `|00⟩, |01⟩, |10⟩, |11⟩`.
pub fn reduce(state: &JointState, observer: Observer, sector: Sector) -> TwoQubitDensity {
    let bit = kept_bit(observer, sector);
    let mask = 1usize << bit;
    let mut rho = Matrix4::<C64>::zeros();
    for a in 0..2 {
        for ap in 0..2 {
            // Sum over the three traced factors; the kept factor is inserted.
            for rest in 0..MODE_DIM {
                if rest & mask != 0 {
                    continue;
                }
                for m in 0..2 {
                    let x = state.amplitude(a, rest | (m << bit));
                    if x == C64::new(0.0, 0.0) {
                        continue;
                    }
                    for mp in 0..2 {
                        let y = state.amplitude(ap, rest | (mp << bit));
                        rho[(2 * a + m, 2 * ap + mp)] += x * y.conj();
                    }
                }
            }
        }
    }
    TwoQubitDensity::from_trusted(rho)
}
