//! Rank invariants for the Hermitian models: the concatenated block matrices
//! D1 = (X|Z) and D2 = (Y^t|U^t) of a pair in g1 x g1, the stratum
//! inequality rk D1 + rk D2 <= 2n, explicit witness pairs realizing every
//! stratum, and the resulting lower bound on the number of irreducible
//! components of the commuting variety.

use crate::exactlin::{commutator, rat, RatMat};
use crate::liealg::{Family, SymmetricPairModel};
use rand_chacha::ChaCha8Rng;

/// A pair (xi, eta) in g1 x g1 of an AIII_gl or DIII model, with block sizes
/// remembered: xi = [[0, Y], [X, 0]], eta = [[0, U], [Z, 0]], where the
/// lower-left blocks X, Z live in g(1).
#[derive(Clone, Debug)]
pub struct GradedPair {
    /// top block size (n for AIII_gl(n, m) and DIII(n))
    pub top: usize,
    /// bottom block size (m, resp. n)
    pub bottom: usize,
    pub xi: RatMat,
    pub eta: RatMat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub q: usize,
    pub rk_d1: usize,
    pub rk_d2: usize,
    pub commutes: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HeartVerdict {
    Violated,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct HeartReport {
    pub family: Family,
    pub verdict: HeartVerdict,
    /// claimed rank bound on the sampled side
    pub bound: usize,
    pub max_sampled_rank: usize,
    pub samples: usize,
    pub witness_rank: usize,
    pub components_at_least: Option<usize>,
    pub justification: String,
}

fn blocks_of(model: &SymmetricPairModel) -> Result<(usize, usize), String> {
    match model.family {
        Family::AIIIGl { n, m } => Ok((n, m)),
        Family::DIII { n } => Ok((n, n)),
        Family::BDI { .. } => Err("no short grading in the BDI model".into()),
    }
}

impl GradedPair {
    pub fn from_elements(
        model: &SymmetricPairModel,
        xi: RatMat,
        eta: RatMat,
    ) -> Result<Self, String> {
        let (top, bottom) = blocks_of(model)?;
        if !model.in_g1(&xi) || !model.in_g1(&eta) {
            return Err("pair elements must lie in g1".into());
        }
        Ok(GradedPair { top, bottom, xi, eta })
    }

    pub fn x(&self) -> RatMat {
        self.xi.block(self.top, 0, self.bottom, self.top)
    }

    pub fn y(&self) -> RatMat {
        self.xi.block(0, self.top, self.top, self.bottom)
    }

    pub fn z(&self) -> RatMat {
        self.eta.block(self.top, 0, self.bottom, self.top)
    }

    pub fn u(&self) -> RatMat {
        self.eta.block(0, self.top, self.top, self.bottom)
    }

    /// (X|Z), size bottom x 2 top.
    pub fn d1(&self) -> RatMat {
        self.x().hstack(&self.z())
    }

    /// (Y^t|U^t), same shape.
    pub fn d2(&self) -> RatMat {
        self.y().transpose().hstack(&self.u().transpose())
    }

    pub fn commutes(&self) -> bool {
        commutator(&self.xi, &self.eta).is_zero()
    }

    /// Swaps the roles of D1 and D2.
    pub fn transpose(&self) -> GradedPair {
        GradedPair {
            top: self.top,
            bottom: self.bottom,
            xi: self.xi.transpose(),
            eta: self.eta.transpose(),
        }
    }
}

pub fn rank_sum_check(pair: &GradedPair) -> StratumReport {
    let rk_d1 = pair.d1().rank();
    let rk_d2 = pair.d2().rank();
    StratumReport { q: rk_d1, rk_d1, rk_d2, commutes: pair.commutes() }
}

/// F(n, m) = 2 min(2n, m) - 2n + 1 for 1 <= n <= m.
pub fn lower_bound_components(n: usize, m: usize) -> usize {
    assert!(1 <= n && n <= m, "lower_bound_components needs 1 <= n <= m");
    2 * (2 * n).min(m) - 2 * n + 1
}

/// Legal stratum indices for AIII_gl(n, m), n <= m.
pub fn stratum_range(n: usize, m: usize) -> std::ops::RangeInclusive<usize> {
    let top = (2 * n).min(m);
    (2 * n - top)..=top
}

/// Commuting pair with rk D1 = q and rk D2 = 2n - q exactly.
///
/// For q >= n: X = [I_n; 0], U = 0, Z = [0; Z1] with Z1 the rank-(q-n)
/// identity pattern on the first q - n coordinates, Y = (Y0|0) with ones on
/// the diagonal positions q-n..n. Then YZ = 0 = UX and ZY = 0 = XU because
/// the supports are disjoint. For q < n, transpose the witness for 2n - q.
pub fn witness_aiii(n: usize, m: usize, q: usize) -> Result<GradedPair, String> {
    if n < 1 || n > m {
        return Err("witness_aiii needs 1 <= n <= m".into());
    }
    if !stratum_range(n, m).contains(&q) {
        return Err(format!("q = {q} outside the stratum range for ({n}, {m})"));
    }
    if q < n {
        return Ok(witness_aiii(n, m, 2 * n - q)?.transpose());
    }
    let d = n + m;
    let mut xi = RatMat::zero(d, d);
    let mut eta = RatMat::zero(d, d);
    for i in 0..n {
        xi[(n + i, i)] = rat(1); // X
    }
    for i in q - n..n {
        xi[(i, n + i)] = rat(1); // Y0
    }
    for i in 0..q - n {
        eta[(n + n + i, i)] = rat(1); // Z1
    }
    Ok(GradedPair { top: n, bottom: m, xi, eta })
}

/// Pure-g(1) commuting pair for DIII(n), n odd: X supported on the first
/// n - 1 coordinates, Z on the last n - 1, both of rank n - 1, with
/// rk (X|Z) = n.
pub fn witness_diii(n: usize) -> Result<GradedPair, String> {
    if n < 3 || n % 2 == 0 {
        return Err("witness_diii needs odd n >= 3".into());
    }
    let d = 2 * n;
    let mut xi = RatMat::zero(d, d);
    let mut eta = RatMat::zero(d, d);
    for k in 0..(n - 1) / 2 {
        xi[(n + 2 * k, 2 * k + 1)] = rat(1);
        xi[(n + 2 * k + 1, 2 * k)] = rat(-1);
        eta[(n + 2 * k + 1, 2 * k + 2)] = rat(1);
        eta[(n + 2 * k + 2, 2 * k + 1)] = rat(-1);
    }
    Ok(GradedPair { top: n, bottom: n, xi, eta })
}

/// Block bases for the short grading g = g(-1) + g(0) + g(1) and the Cartan
/// projections c(+-1).
pub struct GradingProjections {
    pub g_plus: Vec<RatMat>,
    pub g_minus: Vec<RatMat>,
    pub c_plus: Vec<RatMat>,
    pub c_minus: Vec<RatMat>,
}

fn project_plus(top: usize, x: &RatMat) -> RatMat {
    let d = x.rows();
    let mut out = RatMat::zero(d, d);
    out.set_block(top, 0, &x.block(top, 0, d - top, top));
    out
}

fn project_minus(top: usize, x: &RatMat) -> RatMat {
    let d = x.rows();
    let mut out = RatMat::zero(d, d);
    out.set_block(0, top, &x.block(0, top, top, d - top));
    out
}

pub fn grading_projections(model: &SymmetricPairModel) -> Result<GradingProjections, String> {
    let (top, _) = blocks_of(model)?;
    let nonzero = |v: Vec<RatMat>| v.into_iter().filter(|m| !m.is_zero()).collect::<Vec<_>>();
    let g_plus = nonzero(model.g1_basis.iter().map(|b| project_plus(top, b)).collect());
    let g_minus = nonzero(model.g1_basis.iter().map(|b| project_minus(top, b)).collect());
    let c_plus = nonzero(model.cartan_basis.iter().map(|b| project_plus(top, b)).collect());
    let c_minus = nonzero(model.cartan_basis.iter().map(|b| project_minus(top, b)).collect());
    Ok(GradingProjections { g_plus, g_minus, c_plus, c_minus })
}

/// Random G0-conjugate of a random pair from c(1) x c(1); the conjugation is
/// diagonal, so the result still lies in g(1) x g(1).
pub fn sample_conjugated_c1_pair(
    model: &SymmetricPairModel,
    proj: &GradingProjections,
    rng: &mut ChaCha8Rng,
) -> GradedPair {
    use rand::Rng;
    let d = model.ambient_dim;
    let pick = |rng: &mut ChaCha8Rng| {
        let mut x = RatMat::zero(d, d);
        for b in &proj.c_plus {
            x = &x + &b.scale(&rat(rng.gen_range(-5i64..=5)));
        }
        x
    };
    let t = pick(rng);
    let h = pick(rng);
    let g = model.sample_g0_group(rng);
    let (top, bottom) = blocks_of(model).expect("short-grading model");
    GradedPair { top, bottom, xi: model.conjugate(&g, &t), eta: model.conjugate(&g, &h) }
}

/// Random G0-conjugate of a random Cartan pair (a point of C0).
pub fn sample_conjugated_cartan_pair(
    model: &SymmetricPairModel,
    rng: &mut ChaCha8Rng,
) -> GradedPair {
    let t = model.random_cartan(rng);
    let h = model.random_cartan(rng);
    let g = model.sample_g0_group(rng);
    let (top, bottom) = blocks_of(model).expect("short-grading model");
    GradedPair { top, bottom, xi: model.conjugate(&g, &t), eta: model.conjugate(&g, &h) }
}

/// Checks the separation underlying the reducibility argument: on sampled
/// G0-translates of c(1) x c(1) the rank of D1 stays below a bound that an
/// explicit pair in g(1) x g(1) exceeds. Conclusive for AIII_gl with n < m
/// and DIII with odd n >= 3.
pub fn heart_violation_report(
    model: &SymmetricPairModel,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<HeartReport, String> {
    let (bound, witness): (usize, Option<GradedPair>) = match model.family {
        Family::AIIIGl { n, m } if n < m => {
            // pure g(1) witness: forget Y of the top-stratum witness
            let w = witness_aiii(n, m, (2 * n).min(m))?;
            let mut xi = RatMat::zero(n + m, n + m);
            xi.set_block(n, 0, &w.x());
            (n, Some(GradedPair { xi, ..w }))
        }
        Family::DIII { n } if n >= 3 && n % 2 == 1 => (n - 1, Some(witness_diii(n)?)),
        Family::AIIIGl { .. } | Family::DIII { .. } => (0, None),
        Family::BDI { .. } => return Err("no short grading in the BDI model".into()),
    };
    let Some(witness) = witness else {
        return Ok(HeartReport {
            family: model.family,
            verdict: HeartVerdict::Inconclusive,
            bound: 0,
            max_sampled_rank: 0,
            samples: 0,
            witness_rank: 0,
            components_at_least: None,
            justification: "no separating witness is available for this model".into(),
        });
    };
    let proj = grading_projections(model)?;
    let mut max_rank = 0;
    for _ in 0..samples {
        let pair = sample_conjugated_c1_pair(model, &proj, rng);
        max_rank = max_rank.max(pair.d1().rank());
    }
    let witness_rank = witness.d1().rank();
    let violated = max_rank <= bound && witness_rank > bound;
    let components_at_least = match model.family {
        Family::AIIIGl { n, m } => Some(lower_bound_components(n, m)),
        _ => Some(3),
    };
    Ok(HeartReport {
        family: model.family,
        verdict: if violated { HeartVerdict::Violated } else { HeartVerdict::Inconclusive },
        bound,
        max_sampled_rank: max_rank,
        samples,
        witness_rank,
        components_at_least: if violated { components_at_least } else { None },
        justification: "the rank of D1 is G0-invariant and can only drop on orbit closures, \
                        so the sampled bound extends to the closure of G0(c(1) x c(1)); the \
                        witness pair in g(1) x g(1) exceeds it"
            .into(),
    })
}
