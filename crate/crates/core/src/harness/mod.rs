//! Executable catalog of algebraic properties of the w-core order machinery,
//! with deterministic random instance generation over the exact fields and
//! exhaustive enumeration oracles over small finite matrix rings.
//!
//! Each [`PropertyId`] names one checkable statement; [`check_property`]
//! evaluates it on one instance and [`run_suite`] drives it over a
//! deterministic instance stream, reporting per-property applicable counts
//! so vacuous passes stay visible.

mod checkers;
mod enumerate;
mod gen;
mod rng;

pub use checkers::check_property;
pub use enumerate::{brute_force_inverse, enumerate_ring, OracleError, DEFAULT_ENUM_BUDGET};
pub use gen::{
    diagonal_matrix, random_matrix, random_unit, random_wcore_instance, BPolicy, WCoreInstance,
    WMode,
};
pub use rng::SplitMix64;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::doc::MatrixDocument;
use crate::matrix::Matrix;
use crate::scalar::{DomainKind, Scalar, ScalarDomain};

/// One property per checkable statement in the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(clippy::enum_variant_names)]
pub enum PropertyId {
    DefWCoreRelation,
    LemWCoreParI,
    LemWCoreParII,
    LemWCoreParIII,
    LemWCoreParIV,
    ThmPartialOrderAxioms,
    PropSymmetricChar,
    PropMixedProducts,
    LemProjection,
    ThmProjection6Way,
    LemIdempotentE,
    LemIdempotentF,
    LemMaryCriterion,
    ThmIdempotent11Way,
    ThmWCore12Way,
    CorCore12Way,
    PropImpliesLeftStarRightSharp,
    Ex2ConverseFails,
    ThmUnitEquivalence,
    ThmLeftStar4Way,
    ThmRightSharp3Way,
    LemAwProduct,
    ThmWCoreIffAwCore,
    ThmThreeClassCore,
    ThmThreeClassStar,
    ThmEp5Way,
    PropImpliesDiamond,
    ThmDifference3Way,
    CorDifferenceCore,
    CorDifferenceACore,
    ThmReverseOrder,
    ExReverseCounterexample,
}

/// Shape of the instances a property consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceShape {
    /// (a, w)
    SingleW,
    /// (a, b)
    Pair,
    /// (a, b, w)
    PairW,
    /// (a, b, c, w)
    TripleW,
    /// (a, w, candidate)
    CandidateW,
    /// embedded instance; nothing to generate
    Fixed,
}

impl PropertyId {
    pub const ALL: [PropertyId; 32] = [
        PropertyId::DefWCoreRelation,
        PropertyId::LemWCoreParI,
        PropertyId::LemWCoreParII,
        PropertyId::LemWCoreParIII,
        PropertyId::LemWCoreParIV,
        PropertyId::ThmPartialOrderAxioms,
        PropertyId::PropSymmetricChar,
        PropertyId::PropMixedProducts,
        PropertyId::LemProjection,
        PropertyId::ThmProjection6Way,
        PropertyId::LemIdempotentE,
        PropertyId::LemIdempotentF,
        PropertyId::LemMaryCriterion,
        PropertyId::ThmIdempotent11Way,
        PropertyId::ThmWCore12Way,
        PropertyId::CorCore12Way,
        PropertyId::PropImpliesLeftStarRightSharp,
        PropertyId::Ex2ConverseFails,
        PropertyId::ThmUnitEquivalence,
        PropertyId::ThmLeftStar4Way,
        PropertyId::ThmRightSharp3Way,
        PropertyId::LemAwProduct,
        PropertyId::ThmWCoreIffAwCore,
        PropertyId::ThmThreeClassCore,
        PropertyId::ThmThreeClassStar,
        PropertyId::ThmEp5Way,
        PropertyId::PropImpliesDiamond,
        PropertyId::ThmDifference3Way,
        PropertyId::CorDifferenceCore,
        PropertyId::CorDifferenceACore,
        PropertyId::ThmReverseOrder,
        PropertyId::ExReverseCounterexample,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PropertyId::DefWCoreRelation => "DEF_WCORE_RELATION",
            PropertyId::LemWCoreParI => "LEM_WCORE_PAR_I",
            PropertyId::LemWCoreParII => "LEM_WCORE_PAR_II",
            PropertyId::LemWCoreParIII => "LEM_WCORE_PAR_III",
            PropertyId::LemWCoreParIV => "LEM_WCORE_PAR_IV",
            PropertyId::ThmPartialOrderAxioms => "THM_PARTIAL_ORDER_AXIOMS",
            PropertyId::PropSymmetricChar => "PROP_SYMMETRIC_CHAR",
            PropertyId::PropMixedProducts => "PROP_MIXED_PRODUCTS",
            PropertyId::LemProjection => "LEM_PROJECTION",
            PropertyId::ThmProjection6Way => "THM_PROJECTION_6WAY",
            PropertyId::LemIdempotentE => "LEM_IDEMPOTENT_E",
            PropertyId::LemIdempotentF => "LEM_IDEMPOTENT_F",
            PropertyId::LemMaryCriterion => "LEM_MARY_CRITERION",
            PropertyId::ThmIdempotent11Way => "THM_IDEMPOTENT_11WAY",
            PropertyId::ThmWCore12Way => "THM_WCORE_12WAY",
            PropertyId::CorCore12Way => "COR_CORE_12WAY",
            PropertyId::PropImpliesLeftStarRightSharp => "PROP_IMPLIES_LEFTSTAR_RIGHTSHARP",
            PropertyId::Ex2ConverseFails => "EX2_CONVERSE_FAILS",
            PropertyId::ThmUnitEquivalence => "THM_UNIT_EQUIVALENCE",
            PropertyId::ThmLeftStar4Way => "THM_LEFTSTAR_4WAY",
            PropertyId::ThmRightSharp3Way => "THM_RIGHTSHARP_3WAY",
            PropertyId::LemAwProduct => "LEM_AW_PRODUCT",
            PropertyId::ThmWCoreIffAwCore => "THM_WCORE_IFF_AW_CORE",
            PropertyId::ThmThreeClassCore => "THM_THREECLASS_CORE",
            PropertyId::ThmThreeClassStar => "THM_THREECLASS_STAR",
            PropertyId::ThmEp5Way => "THM_EP_5WAY",
            PropertyId::PropImpliesDiamond => "PROP_IMPLIES_DIAMOND",
            PropertyId::ThmDifference3Way => "THM_DIFFERENCE_3WAY",
            PropertyId::CorDifferenceCore => "COR_DIFFERENCE_CORE",
            PropertyId::CorDifferenceACore => "COR_DIFFERENCE_ACORE",
            PropertyId::ThmReverseOrder => "THM_REVERSE_ORDER",
            PropertyId::ExReverseCounterexample => "EX_REVERSE_COUNTEREXAMPLE",
        }
    }

    pub fn lookup(name: &str) -> Option<PropertyId> {
        PropertyId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == name)
    }

    /// What the checker asserts, in one line.
    pub fn description(&self) -> &'static str {
        match self {
            PropertyId::DefWCoreRelation => {
                "the w-core order verdict matches its two defining equations"
            }
            PropertyId::LemWCoreParI => "below b in the w-core order: a_w^⊕·a = b_w^⊕·a",
            PropertyId::LemWCoreParII => "below b in the w-core order: a·w·a_w^⊕ = a·w·b_w^⊕",
            PropertyId::LemWCoreParIII => "below b in the w-core order: a·w·b_w^⊕·a = a",
            PropertyId::LemWCoreParIV => "below b in the w-core order: b_w^⊕·a_w^⊕ = (a_w^⊕)²",
            PropertyId::ThmPartialOrderAxioms => {
                "the w-core order is reflexive, antisymmetric and transitive"
            }
            PropertyId::PropSymmetricChar => {
                "the w-core order is equivalent to its symmetric three-equation form"
            }
            PropertyId::PropMixedProducts => {
                "below b in the w-core order, all mixed products collapse to a_w^⊕"
            }
            PropertyId::LemProjection => {
                "the four descriptions of the projection a·w·a_w^⊕ agree on any candidate"
            }
            PropertyId::ThmProjection6Way => {
                "the six characterizations of a_w^⊕·a = a_w^⊕·b agree"
            }
            PropertyId::LemIdempotentE => {
                "the four descriptions of the idempotent a_w^⊕·a·w agree on any candidate"
            }
            PropertyId::LemIdempotentF => {
                "the four descriptions of the idempotent w·a_w^⊕·a agree on any candidate"
            }
            PropertyId::LemMaryCriterion => {
                "invertibility along an element matches both product criteria and the sharp formulas"
            }
            PropertyId::ThmIdempotent11Way => {
                "the eleven characterizations of a·w·a_w^⊕ = b·w·a_w^⊕ agree"
            }
            PropertyId::ThmWCore12Way => "the twelve characterizations of the w-core order agree",
            PropertyId::CorCore12Way => {
                "the twelve characterizations of the core order (w = 1) agree"
            }
            PropertyId::PropImpliesLeftStarRightSharp => {
                "the w-core order implies left-star on (a,b) and right-sharp on (wa,wb)"
            }
            PropertyId::Ex2ConverseFails => {
                "embedded instance: left-star and right-sharp hold while the w-core order fails"
            }
            PropertyId::ThmUnitEquivalence => {
                "for unit w, the w-core order is exactly left-star plus right-sharp on (wa,wb)"
            }
            PropertyId::ThmLeftStar4Way => {
                "the four left-star flavored characterizations of the w-core order agree"
            }
            PropertyId::ThmRightSharp3Way => {
                "for unit w, the three right-sharp flavored characterizations agree"
            }
            PropertyId::LemAwProduct => {
                "w-core invertibility matches aR = awR with aw core invertible, and a_w^⊕ = (aw)^⊕"
            }
            PropertyId::ThmWCoreIffAwCore => {
                "for unit w, the w-core order on (a,b) is the core order on (aw,bw)"
            }
            PropertyId::ThmThreeClassCore => {
                "the core order coincides with the a-core and 1-core orders"
            }
            PropertyId::ThmThreeClassStar => {
                "the star order coincides with the a*-core order"
            }
            PropertyId::ThmEp5Way => {
                "for EP elements the a-core, a*-core, core, star and sharp orders agree"
            }
            PropertyId::PropImpliesDiamond => "the w-core order implies the diamond order",
            PropertyId::ThmDifference3Way => {
                "with awb = bwa, below-b of a, below-b of b-a, and left-star+sharp agree"
            }
            PropertyId::CorDifferenceCore => {
                "core order of a plus commuting matches core order of b-a and left-star+sharp"
            }
            PropertyId::CorDifferenceACore => {
                "with a²b = ba², the core orders of a and b-a match left-star plus a² sharp-below ab"
            }
            PropertyId::ThmReverseOrder => {
                "below b in the w-core order: (a·w·b)_w^⊕ = b_w^⊕·a_w^⊕"
            }
            PropertyId::ExReverseCounterexample => {
                "embedded instance: (a·b)_w^⊕ ≠ b_w^⊕·a_w^⊕ while (a·w·b)_w^⊕ matches"
            }
        }
    }

    pub fn shape(&self) -> InstanceShape {
        use PropertyId::*;
        match self {
            LemMaryCriterion | LemAwProduct => InstanceShape::SingleW,
            CorCore12Way | ThmThreeClassCore | ThmThreeClassStar | ThmEp5Way
            | CorDifferenceCore | CorDifferenceACore => InstanceShape::Pair,
            ThmPartialOrderAxioms => InstanceShape::TripleW,
            LemProjection | LemIdempotentE | LemIdempotentF => InstanceShape::CandidateW,
            Ex2ConverseFails | ExReverseCounterexample => InstanceShape::Fixed,
            _ => InstanceShape::PairW,
        }
    }
}

impl std::fmt::Display for PropertyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One instance a checker runs on.
#[derive(Debug, Clone)]
pub enum Instance {
    SingleW {
        a: Matrix,
        w: Matrix,
    },
    Pair {
        a: Matrix,
        b: Matrix,
    },
    PairW {
        a: Matrix,
        b: Matrix,
        w: Matrix,
    },
    TripleW {
        a: Matrix,
        b: Matrix,
        c: Matrix,
        w: Matrix,
    },
    CandidateW {
        a: Matrix,
        w: Matrix,
        candidate: Matrix,
    },
    Fixed,
}

/// Serializable image of an [`Instance`]; replayable through the matrix
/// document format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub shape: String,
    pub matrices: Vec<MatrixDocument>,
}

impl Instance {
    pub fn to_doc(&self) -> InstanceDoc {
        let (shape, mats): (&str, Vec<&Matrix>) = match self {
            Instance::SingleW { a, w } => ("single_w", vec![a, w]),
            Instance::Pair { a, b } => ("pair", vec![a, b]),
            Instance::PairW { a, b, w } => ("pair_w", vec![a, b, w]),
            Instance::TripleW { a, b, c, w } => ("triple_w", vec![a, b, c, w]),
            Instance::CandidateW { a, w, candidate } => ("candidate_w", vec![a, w, candidate]),
            Instance::Fixed => ("fixed", vec![]),
        };
        InstanceDoc {
            shape: shape.to_string(),
            matrices: mats
                .iter()
                .map(|m| MatrixDocument::from_matrix(m))
                .collect(),
        }
    }
}

/// Verdict of one checker run on one instance.
#[derive(Debug, Clone)]
pub enum Verdict {
    Holds,
    Fails { clause: String },
    Inapplicable { precondition: String },
}

#[derive(Debug, Clone)]
pub struct PropertyOutcome {
    pub id: PropertyId,
    pub verdict: Verdict,
}

/// Deterministic trial configuration: the same config always produces the
/// same instance stream, whatever order properties are evaluated in.
#[derive(Debug, Clone)]
pub struct TrialConfig {
    pub domain: ScalarDomain,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub entry_pool: Vec<Scalar>,
}

impl TrialConfig {
    pub fn new(domain: ScalarDomain, dim: usize, trials: usize, seed: u64) -> Self {
        TrialConfig {
            domain,
            dim,
            trials,
            seed,
            entry_pool: default_pool(domain),
        }
    }
}

/// Default entry pool: zero, small integers of both signs, one half, and the
/// imaginary unit where it exists. Zeros keep rank-deficient draws frequent.
pub fn default_pool(domain: ScalarDomain) -> Vec<Scalar> {
    let mut pool = Vec::new();
    match domain.kind() {
        DomainKind::Rationals | DomainKind::GaussianRationals => {
            for n in [0i64, 1, -1, 2, -2] {
                pool.push(Scalar::from_integer(domain, n));
            }
            pool.push(Scalar::from_ratio(domain, 1, 2).unwrap());
            if domain.kind() == DomainKind::GaussianRationals {
                pool.push(Scalar::imaginary_unit(domain).unwrap());
            }
        }
        DomainKind::ModP(_) => {
            let mut candidates = vec![
                Scalar::from_integer(domain, 0),
                Scalar::from_integer(domain, 1),
                Scalar::from_integer(domain, -1),
                Scalar::from_integer(domain, 2),
                Scalar::from_integer(domain, -2),
            ];
            if let Ok(half) = Scalar::from_ratio(domain, 1, 2) {
                candidates.push(half);
            }
            for c in candidates {
                if !pool.contains(&c) {
                    pool.push(c);
                }
            }
        }
    }
    pool
}

#[derive(Debug, Clone, Error)]
pub enum SuiteError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{0}")]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FailureRecord {
    pub clause: String,
    pub instance: InstanceDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub id: String,
    pub trials: u64,
    pub applicable: u64,
    pub holds: u64,
    pub inapplicable: u64,
    pub failure: Option<FailureRecord>,
}

/// Stable JSON report: one entry per requested property, catalog order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub domain: String,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| e.failure.is_some()).count()
    }

    pub fn entry(&self, id: PropertyId) -> Option<&SuiteEntry> {
        self.entries.iter().find(|e| e.id == id.as_str())
    }
}

/// Run the selected properties over the configured instance stream: random
/// directed instances for the field domains, the full finite ring when
/// `exhaustive` is set (mod-p domains only). Halts a property on its first
/// failure and serializes the counterexample.
pub fn run_suite(
    cfg: &TrialConfig,
    ids: &[PropertyId],
    exhaustive: bool,
) -> Result<SuiteReport, SuiteError> {
    if exhaustive && !cfg.domain.is_finite() {
        return Err(SuiteError::Config(
            "exhaustive mode requires a mod_p domain".to_string(),
        ));
    }
    if cfg.dim == 0 || cfg.dim > 6 {
        return Err(SuiteError::Config(
            "dimension must be between 1 and 6".to_string(),
        ));
    }
    let mut ordered: Vec<PropertyId> = PropertyId::ALL
        .iter()
        .copied()
        .filter(|id| ids.contains(id))
        .collect();
    // preserve catalog order, drop duplicates
    ordered.dedup();
    let mut entries = Vec::with_capacity(ordered.len());
    for id in &ordered {
        let entry = if exhaustive {
            run_exhaustive(cfg, *id)?
        } else {
            // key the stream split on the catalog position so a property sees
            // the same instances no matter which other properties run
            let catalog_index = PropertyId::ALL
                .iter()
                .position(|x| x == id)
                .expect("all ids are in the catalog") as u64;
            run_random(cfg, *id, catalog_index)
        };
        entries.push(entry);
    }
    Ok(SuiteReport {
        domain: cfg.domain.to_string(),
        dim: cfg.dim,
        trials: cfg.trials,
        seed: cfg.seed,
        exhaustive,
        entries,
    })
}

fn tally(id: PropertyId, instances: impl Iterator<Item = Instance>) -> SuiteEntry {
    let mut trials = 0;
    let mut holds = 0;
    let mut inapplicable = 0;
    let mut failure = None;
    for instance in instances {
        trials += 1;
        match check_property(id, &instance).verdict {
            Verdict::Holds => holds += 1,
            Verdict::Inapplicable { .. } => inapplicable += 1,
            Verdict::Fails { clause } => {
                failure = Some(FailureRecord {
                    clause,
                    instance: instance.to_doc(),
                });
                break;
            }
        }
    }
    SuiteEntry {
        id: id.as_str().to_string(),
        trials,
        applicable: holds + u64::from(failure.is_some()),
        holds,
        inapplicable,
        failure,
    }
}

fn run_random(cfg: &TrialConfig, id: PropertyId, id_index: u64) -> SuiteEntry {
    let trials = if id.shape() == InstanceShape::Fixed {
        1
    } else {
        cfg.trials
    };
    let stream = (0..trials).map(move |trial| {
        // split the stream per (seed, property, trial) so any evaluation
        // order yields identical instances
        let mut rng = SplitMix64::split(cfg.seed, id_index, trial as u64);
        gen::gen_instance(id, cfg, &mut rng)
    });
    tally(id, stream)
}

fn run_exhaustive(cfg: &TrialConfig, id: PropertyId) -> Result<SuiteEntry, SuiteError> {
    let p = cfg
        .domain
        .modulus()
        .expect("exhaustive mode is gated on finite domains");
    let arity = match id.shape() {
        InstanceShape::SingleW | InstanceShape::Pair => 2,
        InstanceShape::PairW | InstanceShape::CandidateW => 3,
        InstanceShape::TripleW => 4,
        InstanceShape::Fixed => 0,
    };
    if id.shape() == InstanceShape::Fixed {
        return Ok(tally(id, std::iter::once(Instance::Fixed)));
    }
    let ring_size = enumerate::ring_size(p, cfg.dim)?;
    if ring_size
        .checked_pow(arity)
        .filter(|&t| t <= DEFAULT_ENUM_BUDGET)
        .is_none()
    {
        return Err(SuiteError::Config(format!(
            "exhaustive stream for {id} needs {ring_size}^{arity} instances; over budget"
        )));
    }
    let shape = id.shape();
    let stream = enumerate::cartesian(p, cfg.dim, arity as usize)?.map(move |mats| {
        let mut it = mats.into_iter();
        match shape {
            InstanceShape::SingleW => Instance::SingleW {
                a: it.next().unwrap(),
                w: it.next().unwrap(),
            },
            InstanceShape::Pair => Instance::Pair {
                a: it.next().unwrap(),
                b: it.next().unwrap(),
            },
            InstanceShape::PairW => Instance::PairW {
                a: it.next().unwrap(),
                b: it.next().unwrap(),
                w: it.next().unwrap(),
            },
            InstanceShape::CandidateW => Instance::CandidateW {
                a: it.next().unwrap(),
                w: it.next().unwrap(),
                candidate: it.next().unwrap(),
            },
            InstanceShape::TripleW => Instance::TripleW {
                a: it.next().unwrap(),
                b: it.next().unwrap(),
                c: it.next().unwrap(),
                w: it.next().unwrap(),
            },
            InstanceShape::Fixed => Instance::Fixed,
        }
    });
    Ok(tally(id, stream))
}
