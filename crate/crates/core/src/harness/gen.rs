//! Directed random instance generation.
//!
//! The hypotheses of the checked statements (w-core invertibility of one or
//! both elements, unit w, commuting triples) are far too thin to hit by
//! rejection sampling alone, so each property draws from constructions that
//! build the hypothesis in: full-rank-factor products for group invertible
//! elements, c·w⁻¹ transport for unit w, annihilating noise for
//! order-related pairs, and single-generator families for commuting
//! instances. Every construction is verified exactly before an instance is
//! returned; fallbacks keep the generators total.

use super::rng::SplitMix64;
use super::{Instance, PropertyId, TrialConfig};
use crate::geninv::{
    self, inner_inverse, is_core_invertible, is_moore_penrose_invertible, is_w_core_invertible,
    one_three_inverse, w_core_inverse,
};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

const ATTEMPTS: usize = 48;

/// Matrix with entries drawn uniformly from the configured pool.
pub fn random_matrix(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let pool = &cfg.entry_pool;
    Matrix::from_fn(cfg.domain, cfg.dim, cfg.dim, |_, _| {
        rng.choose(pool).clone()
    })
}

/// Diagonal matrix with pool entries on the diagonal.
pub fn diagonal_matrix(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let pool = &cfg.entry_pool;
    let zero = Scalar::zero(cfg.domain);
    let picks: Vec<Scalar> = (0..cfg.dim).map(|_| rng.choose(pool).clone()).collect();
    Matrix::from_fn(cfg.domain, cfg.dim, cfg.dim, |i, j| {
        if i == j {
            picks[i].clone()
        } else {
            zero.clone()
        }
    })
}

/// Invertible matrix; falls back to the identity if the pool is too thin to
/// hit one.
pub fn random_unit(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    for _ in 0..ATTEMPTS {
        let m = random_matrix(cfg, rng);
        if m.is_unit() {
            return m;
        }
    }
    Matrix::identity(cfg.domain, cfg.dim)
}

fn random_zero_one_diagonal(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let bits: Vec<bool> = (0..cfg.dim).map(|_| rng.chance(1, 2)).collect();
    Matrix::from_fn(cfg.domain, cfg.dim, cfg.dim, |i, j| {
        if i == j && bits[i] {
            Scalar::one(cfg.domain)
        } else {
            Scalar::zero(cfg.domain)
        }
    })
}

/// Group invertible element of prescribed random rank, built as u·v with
/// v·u invertible. A 0/1 diagonal is the always-valid fallback.
fn random_group_invertible(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let n = cfg.dim;
    for _ in 0..ATTEMPTS {
        let r = rng.below(n + 1);
        if r == 0 {
            return Matrix::zero(cfg.domain, n, n);
        }
        let u = Matrix::from_fn(cfg.domain, n, r, |_, _| rng.choose(&cfg.entry_pool).clone());
        let v = Matrix::from_fn(cfg.domain, r, n, |_, _| rng.choose(&cfg.entry_pool).clone());
        if v.mul(&u).is_unit() {
            return u.mul(&v);
        }
    }
    random_zero_one_diagonal(cfg, rng)
}

fn random_core_invertible(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    for _ in 0..ATTEMPTS {
        let a = random_group_invertible(cfg, rng);
        if is_core_invertible(&a) {
            return a;
        }
    }
    random_zero_one_diagonal(cfg, rng)
}

fn random_mp_invertible(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    for _ in 0..ATTEMPTS {
        let a = random_matrix(cfg, rng);
        if is_moore_penrose_invertible(&a) {
            return a;
        }
    }
    random_zero_one_diagonal(cfg, rng)
}

/// A projection: u·(u*·u)⁻¹·u* when the normal matrix is invertible, else a
/// 0/1 diagonal.
fn random_projection(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let n = cfg.dim;
    for _ in 0..ATTEMPTS {
        let r = 1 + rng.below(n);
        let u = Matrix::from_fn(cfg.domain, n, r, |_, _| rng.choose(&cfg.entry_pool).clone());
        let normal = u.star().mul(&u);
        if let Some(inv) = normal.inverse() {
            let p = u.mul(&inv).mul(&u.star());
            if p.mul(&p) == p && p.star() == p {
                return p;
            }
        }
    }
    random_zero_one_diagonal(cfg, rng)
}

fn random_ep(cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    for _ in 0..ATTEMPTS {
        let p = random_projection(cfg, rng);
        let m = random_matrix(cfg, rng);
        let a = p.mul(&m).mul(&p);
        if geninv::is_ep(&a) {
            return a;
        }
    }
    random_projection(cfg, rng)
}

/// Element of R_w^⊕ for a fixed w, transported from a core invertible c with
/// c·w⁻·w = c through b = c·w⁻.
fn random_wcore_invertible_for(
    w: &Matrix,
    cfg: &TrialConfig,
    rng: &mut SplitMix64,
) -> Option<Matrix> {
    let w_inner = inner_inverse(w).value;
    let projector = w_inner.mul(w);
    for _ in 0..ATTEMPTS {
        let c = random_group_invertible(cfg, rng).mul(&projector);
        if !is_core_invertible(&c) {
            continue;
        }
        let b = c.mul(&w_inner);
        if is_w_core_invertible(&b, w) {
            return Some(b);
        }
    }
    None
}

/// How w is tied to a when sampling a w-core invertible element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WMode {
    Identity,
    SelfA,
    StarA,
    Unit,
    Pool,
}

/// How b is derived from a.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BPolicy {
    /// b = a
    Equal,
    /// unconstrained pool matrix
    Free,
    /// b = a + n with a*·n = 0, so the star-flavored half of the order holds
    StarOrtho,
    /// b = a + n annihilated on both sides, so the order holds outright
    OrderNoise,
    /// free draws filtered to b ∈ R_w^⊕
    MemberFree,
    /// order noise filtered to b ∈ R_w^⊕
    MemberOrder,
}

#[derive(Debug, Clone)]
pub struct WCoreInstance {
    pub a: Matrix,
    pub b: Matrix,
    pub w: Matrix,
}

fn sample_a_w(cfg: &TrialConfig, rng: &mut SplitMix64, mode: WMode) -> (Matrix, Matrix) {
    let n = cfg.dim;
    match mode {
        WMode::Identity => {
            let a = random_core_invertible(cfg, rng);
            (a, Matrix::identity(cfg.domain, n))
        }
        WMode::SelfA => {
            let a = random_core_invertible(cfg, rng);
            let w = a.clone();
            (a, w)
        }
        WMode::StarA => {
            let a = random_mp_invertible(cfg, rng);
            let w = a.star();
            (a, w)
        }
        WMode::Unit => {
            let w = random_unit(cfg, rng);
            let winv = w.inverse().expect("unit is invertible");
            for _ in 0..ATTEMPTS {
                let c = random_core_invertible(cfg, rng);
                let a = c.mul(&winv);
                if is_w_core_invertible(&a, &w) {
                    return (a, w);
                }
            }
            (winv.clone(), w)
        }
        WMode::Pool => {
            for _ in 0..ATTEMPTS {
                let w = random_matrix(cfg, rng);
                if let Some(a) = random_wcore_invertible_for(&w, cfg, rng) {
                    return (a, w);
                }
            }
            // degenerate but always valid
            let a = random_core_invertible(cfg, rng);
            (a, Matrix::identity(cfg.domain, n))
        }
    }
}

/// Additive noise with a*·n = 0: n = (1 - a·a^(1,3))·m.
fn star_ortho_noise(a: &Matrix, cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let one_three = one_three_inverse(a)
        .expect("a is {1,3}-invertible whenever it is w-core invertible")
        .value;
    let id = Matrix::identity(cfg.domain, cfg.dim);
    let left = id.sub(&a.mul(&one_three));
    left.mul(&random_matrix(cfg, rng))
}

/// Noise annihilated by a_w^⊕ on the left and by w·a_w^⊕ on the right, so
/// that b = a + n satisfies both order equations.
fn order_noise(a: &Matrix, w: &Matrix, cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let x = w_core_inverse(a, w)
        .expect("order noise is only drawn for w-core invertible a")
        .value;
    let id = Matrix::identity(cfg.domain, cfg.dim);
    let k = w.mul(&x);
    let right = id.sub(&k.mul(&inner_inverse(&k).value));
    star_ortho_noise(a, cfg, rng).mul(&right)
}

fn sample_b(
    a: &Matrix,
    w: &Matrix,
    cfg: &TrialConfig,
    rng: &mut SplitMix64,
    policy: BPolicy,
) -> Matrix {
    match policy {
        BPolicy::Equal => a.clone(),
        BPolicy::Free => random_matrix(cfg, rng),
        BPolicy::StarOrtho => a.add(&star_ortho_noise(a, cfg, rng)),
        BPolicy::OrderNoise => a.add(&order_noise(a, w, cfg, rng)),
        BPolicy::MemberFree => {
            for _ in 0..ATTEMPTS {
                let b = random_matrix(cfg, rng);
                if is_w_core_invertible(&b, w) {
                    return b;
                }
            }
            random_wcore_invertible_for(w, cfg, rng).unwrap_or_else(|| a.clone())
        }
        BPolicy::MemberOrder => {
            for _ in 0..ATTEMPTS {
                let b = a.add(&order_noise(a, w, cfg, rng));
                if is_w_core_invertible(&b, w) {
                    return b;
                }
            }
            a.clone()
        }
    }
}

/// Sample (a, b, w) with a guaranteed w-core invertible.
pub fn random_wcore_instance(
    cfg: &TrialConfig,
    rng: &mut SplitMix64,
    w_mode: WMode,
    b_policy: BPolicy,
) -> WCoreInstance {
    let (a, w) = sample_a_w(cfg, rng, w_mode);
    debug_assert!(is_w_core_invertible(&a, &w));
    let b = sample_b(&a, &w, cfg, rng, b_policy);
    WCoreInstance { a, b, w }
}

fn pick_w_mode(rng: &mut SplitMix64) -> WMode {
    *rng.choose(&[
        WMode::Pool,
        WMode::Identity,
        WMode::Unit,
        WMode::SelfA,
        WMode::StarA,
    ])
}

fn pick<T: Copy>(rng: &mut SplitMix64, options: &[T]) -> T {
    *rng.choose(options)
}

/// Low-degree polynomial in m with pool coefficients; polynomials in a single
/// element commute pairwise.
fn poly_in(m: &Matrix, cfg: &TrialConfig, rng: &mut SplitMix64) -> Matrix {
    let id = Matrix::identity(cfg.domain, cfg.dim);
    let c0 = rng.choose(&cfg.entry_pool).clone();
    let c1 = rng.choose(&cfg.entry_pool).clone();
    let c2 = rng.choose(&cfg.entry_pool).clone();
    id.scale(&c0).add(&m.scale(&c1)).add(&m.mul(m).scale(&c2))
}

/// Commuting triple (a, b, w): either polynomials in one generator or all
/// diagonal. Memberships are filtered afterwards by the caller's gate.
fn commuting_triple(cfg: &TrialConfig, rng: &mut SplitMix64) -> (Matrix, Matrix, Matrix) {
    if rng.chance(1, 2) {
        let m = random_matrix(cfg, rng);
        (
            poly_in(&m, cfg, rng),
            poly_in(&m, cfg, rng),
            poly_in(&m, cfg, rng),
        )
    } else {
        (
            diagonal_matrix(cfg, rng),
            diagonal_matrix(cfg, rng),
            diagonal_matrix(cfg, rng),
        )
    }
}

fn difference_instance(cfg: &TrialConfig, rng: &mut SplitMix64) -> Instance {
    for _ in 0..ATTEMPTS {
        let (a, b, w) = commuting_triple(cfg, rng);
        if is_w_core_invertible(&a, &w)
            && is_w_core_invertible(&b, &w)
            && is_w_core_invertible(&b.sub(&a), &w)
        {
            return Instance::PairW { a, b, w };
        }
    }
    let (a, b, w) = commuting_triple(cfg, rng);
    Instance::PairW { a, b, w }
}

fn difference_pair(cfg: &TrialConfig, rng: &mut SplitMix64, square_hyp: bool) -> Instance {
    for _ in 0..ATTEMPTS {
        let (a, b, _) = commuting_triple(cfg, rng);
        let hyp = if square_hyp {
            a.mul(&a).mul(&b) == b.mul(&a).mul(&a)
        } else {
            true
        };
        if hyp && is_core_invertible(&a) && is_core_invertible(&b) && is_core_invertible(&b.sub(&a))
        {
            return Instance::Pair { a, b };
        }
    }
    let (a, b, _) = commuting_triple(cfg, rng);
    Instance::Pair { a, b }
}

/// Build the instance a property's checker consumes.
pub fn gen_instance(id: PropertyId, cfg: &TrialConfig, rng: &mut SplitMix64) -> Instance {
    use PropertyId::*;
    match id {
        Ex2ConverseFails | ExReverseCounterexample => Instance::Fixed,

        LemMaryCriterion | LemAwProduct => {
            // half directed into the invertible case, half free
            if rng.chance(1, 2) {
                let mode = pick_w_mode(rng);
                let inst = random_wcore_instance(cfg, rng, mode, BPolicy::Equal);
                Instance::SingleW {
                    a: inst.a,
                    w: inst.w,
                }
            } else {
                Instance::SingleW {
                    a: random_matrix(cfg, rng),
                    w: random_matrix(cfg, rng),
                }
            }
        }

        LemProjection => {
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, BPolicy::Equal);
            let candidate = match rng.below(3) {
                0 => {
                    let x = w_core_inverse(&inst.a, &inst.w).unwrap().value;
                    inst.a.mul(&inst.w).mul(&x)
                }
                1 => random_projection(cfg, rng),
                _ => random_zero_one_diagonal(cfg, rng),
            };
            Instance::CandidateW {
                a: inst.a,
                w: inst.w,
                candidate,
            }
        }

        LemIdempotentE | LemIdempotentF => {
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, BPolicy::Equal);
            let candidate = if rng.chance(1, 2) {
                let x = w_core_inverse(&inst.a, &inst.w).unwrap().value;
                if id == LemIdempotentE {
                    x.mul(&inst.a).mul(&inst.w)
                } else {
                    inst.w.mul(&x).mul(&inst.a)
                }
            } else {
                random_matrix(cfg, rng)
            };
            Instance::CandidateW {
                a: inst.a,
                w: inst.w,
                candidate,
            }
        }

        ThmPartialOrderAxioms => {
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, BPolicy::MemberOrder);
            let w = inst.w;
            let mut chain_rng_b = order_noise(&inst.b, &w, cfg, rng);
            // extend the chain: c above b when possible
            let mut c = inst.b.add(&chain_rng_b);
            if !is_w_core_invertible(&c, &w) {
                chain_rng_b = Matrix::zero(cfg.domain, cfg.dim, cfg.dim);
                c = inst.b.add(&chain_rng_b);
            }
            Instance::TripleW {
                a: inst.a,
                b: inst.b,
                c,
                w,
            }
        }

        DefWCoreRelation | PropSymmetricChar => {
            let policy = pick(
                rng,
                &[
                    BPolicy::MemberOrder,
                    BPolicy::MemberFree,
                    BPolicy::Equal,
                    BPolicy::MemberFree,
                ],
            );
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, policy);
            Instance::PairW {
                a: inst.a,
                b: inst.b,
                w: inst.w,
            }
        }

        LemWCoreParI | LemWCoreParII | LemWCoreParIII | LemWCoreParIV | PropMixedProducts
        | ThmReverseOrder => {
            let policy = if rng.chance(1, 4) {
                BPolicy::Equal
            } else {
                BPolicy::MemberOrder
            };
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, policy);
            Instance::PairW {
                a: inst.a,
                b: inst.b,
                w: inst.w,
            }
        }

        ThmProjection6Way | ThmIdempotent11Way | ThmWCore12Way => {
            let policy = pick(
                rng,
                &[
                    BPolicy::OrderNoise,
                    BPolicy::StarOrtho,
                    BPolicy::Free,
                    BPolicy::OrderNoise,
                ],
            );
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, policy);
            Instance::PairW {
                a: inst.a,
                b: inst.b,
                w: inst.w,
            }
        }

        PropImpliesLeftStarRightSharp | PropImpliesDiamond => {
            let policy = if rng.chance(1, 5) {
                BPolicy::Free
            } else {
                BPolicy::OrderNoise
            };
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, policy);
            Instance::PairW {
                a: inst.a,
                b: inst.b,
                w: inst.w,
            }
        }

        ThmUnitEquivalence | ThmWCoreIffAwCore => {
            let policy = pick(
                rng,
                &[BPolicy::OrderNoise, BPolicy::Free, BPolicy::StarOrtho],
            );
            let inst = random_wcore_instance(cfg, rng, WMode::Unit, policy);
            Instance::PairW {
                a: inst.a,
                b: inst.b,
                w: inst.w,
            }
        }

        ThmLeftStar4Way => {
            let policy = pick(
                rng,
                &[BPolicy::MemberOrder, BPolicy::MemberFree, BPolicy::Equal],
            );
            let mode = pick_w_mode(rng);
            let inst = random_wcore_instance(cfg, rng, mode, policy);
            Instance::PairW {
                a: inst.a,
                b: inst.b,
                w: inst.w,
            }
        }

        ThmRightSharp3Way => {
            let policy = pick(
                rng,
                &[BPolicy::MemberOrder, BPolicy::MemberFree, BPolicy::Equal],
            );
            let inst = random_wcore_instance(cfg, rng, WMode::Unit, policy);
            Instance::PairW {
                a: inst.a,
                b: inst.b,
                w: inst.w,
            }
        }

        CorCore12Way | ThmThreeClassCore => {
            let a = random_core_invertible(cfg, rng);
            let id_mat = Matrix::identity(cfg.domain, cfg.dim);
            let b = match rng.below(3) {
                0 => a.add(&order_noise(&a, &id_mat, cfg, rng)),
                1 => a.add(&star_ortho_noise(&a, cfg, rng)),
                _ => random_matrix(cfg, rng),
            };
            Instance::Pair { a, b }
        }

        ThmThreeClassStar => {
            let a = random_mp_invertible(cfg, rng);
            let b = match rng.below(3) {
                0 => a.add(&star_ortho_noise(&a, cfg, rng)),
                1 => a.clone(),
                _ => random_matrix(cfg, rng),
            };
            Instance::Pair { a, b }
        }

        ThmEp5Way => {
            let a = random_ep(cfg, rng);
            let b = match rng.below(3) {
                0 => {
                    let w = a.clone();
                    if is_w_core_invertible(&a, &w) {
                        a.add(&order_noise(&a, &w, cfg, rng))
                    } else {
                        a.add(&star_ortho_noise(&a, cfg, rng))
                    }
                }
                1 => a.clone(),
                _ => random_matrix(cfg, rng),
            };
            Instance::Pair { a, b }
        }

        ThmDifference3Way => difference_instance(cfg, rng),
        CorDifferenceCore => difference_pair(cfg, rng, false),
        CorDifferenceACore => difference_pair(cfg, rng, true),
    }
}
