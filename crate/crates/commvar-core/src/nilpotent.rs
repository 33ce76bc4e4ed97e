//! Nilpotent elements of g1 in the BDI model, classified by signed Jordan
//! strings (which of the two summands V_a, V_b each chain vector lies in),
//! with constructors realizing a given string type as a rational matrix,
//! normal sl2-triples, the e(t) = e - t^2 f degeneration, and an exact test
//! for whether the g1-centraliser of e contains nonzero semisimple elements.

use crate::exactlin::{commutator, rat, Rat, RatMat, RatVec};
use crate::liealg::{Family, SymmetricPairModel};
use crate::poly::{char_poly, eval, min_poly};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum StartSide {
    A,
    B,
}

impl StartSide {
    fn flip(self) -> StartSide {
        match self {
            StartSide::A => StartSide::B,
            StartSide::B => StartSide::A,
        }
    }
}

/// Jordan type of a nilpotent in g1: strings with a start side, plus the
/// involutive pairing induced by the symmetric form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedJordanType {
    pub strings: Vec<(usize, StartSide)>,
    pub pairing: Vec<usize>,
}

/// Side of the s-th vector of a string (chain vectors alternate sides).
fn side_at(start: StartSide, s: usize) -> StartSide {
    if s % 2 == 0 {
        start
    } else {
        start.flip()
    }
}

impl SignedJordanType {
    /// Count of (a, b) symbols over all strings.
    pub fn symbol_counts(&self) -> (usize, usize) {
        let mut a = 0;
        let mut b = 0;
        for &(d, start) in &self.strings {
            let half = d / 2;
            let (on_start, on_other) = (d - half, half);
            match start {
                StartSide::A => {
                    a += on_start;
                    b += on_other;
                }
                StartSide::B => {
                    b += on_start;
                    a += on_other;
                }
            }
        }
        (a, b)
    }

    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.strings.iter().map(|&(d, _)| d).collect();
        v.sort_unstable();
        v
    }
}

pub fn validate_type(jt: &SignedJordanType, n: usize, m: usize) -> bool {
    let k = jt.strings.len();
    if jt.pairing.len() != k {
        return false;
    }
    for i in 0..k {
        let j = jt.pairing[i];
        if j >= k || jt.pairing[j] != i {
            return false;
        }
        let (d, start) = jt.strings[i];
        if d == 0 || jt.strings[j].0 != d {
            return false;
        }
        let self_paired = i == j;
        if self_paired != (d % 2 == 1) {
            return false;
        }
        if !self_paired && d % 2 == 0 && jt.strings[j].1 == start {
            return false; // even pairs must mix the start sides
        }
    }
    jt.symbol_counts() == (n, m)
}

pub fn is_even_nilpotent(jt: &SignedJordanType) -> bool {
    jt.strings.iter().all(|&(d, _)| d % 2 == jt.strings[0].0 % 2)
}

/// Necessary condition for being sigma-distinguished: every string odd.
pub fn sigma_distinguished_necessary(jt: &SignedJordanType) -> bool {
    jt.strings.iter().all(|&(d, _)| d % 2 == 1)
}

// Building blocks for enumeration and the text format: a self-paired odd
// string, or a pair of even strings with opposite starts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Unit {
    Odd(usize, StartSide),
    EvenPair(usize),
}

impl Unit {
    fn counts(self) -> (usize, usize) {
        match self {
            Unit::Odd(d, StartSide::A) => (d / 2 + 1, d / 2),
            Unit::Odd(d, StartSide::B) => (d / 2, d / 2 + 1),
            Unit::EvenPair(d) => (d, d),
        }
    }
}

fn from_units(units: &[Unit]) -> SignedJordanType {
    let mut strings = Vec::new();
    let mut pairing = Vec::new();
    for &u in units {
        match u {
            Unit::Odd(d, start) => {
                strings.push((d, start));
                pairing.push(strings.len() - 1);
            }
            Unit::EvenPair(d) => {
                strings.push((d, StartSide::A));
                strings.push((d, StartSide::B));
                pairing.push(strings.len() - 1);
                pairing.push(strings.len() - 2);
            }
        }
    }
    SignedJordanType { strings, pairing }
}

/// All valid types for BDI(n, m), one representative per multiset of units.
pub fn enumerate_types(n: usize, m: usize) -> Vec<SignedJordanType> {
    let total = n + m;
    let mut kinds = Vec::new();
    for d in (1..=total).step_by(2) {
        kinds.push(Unit::Odd(d, StartSide::A));
        kinds.push(Unit::Odd(d, StartSide::B));
    }
    for d in (2..=total / 2).step_by(2) {
        kinds.push(Unit::EvenPair(d));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(
        kinds: &[Unit],
        from: usize,
        n: usize,
        m: usize,
        stack: &mut Vec<Unit>,
        out: &mut Vec<SignedJordanType>,
    ) {
        if n == 0 && m == 0 {
            out.push(from_units(stack));
            return;
        }
        for k in from..kinds.len() {
            let (da, db) = kinds[k].counts();
            if da <= n && db <= m {
                stack.push(kinds[k]);
                rec(kinds, k, n - da, m - db, stack, out);
                stack.pop();
            }
        }
    }
    rec(&kinds, 0, n, m, &mut stack, &mut out);
    out
}

/// Parse the text format "3a,1b,2a:2b" (":" joins the two halves of an even
/// pair).
pub fn parse_jt(s: &str) -> Result<SignedJordanType, String> {
    fn half(tok: &str) -> Result<(usize, StartSide), String> {
        let (num, side) = tok.split_at(tok.len().saturating_sub(1));
        let d: usize = num.parse().map_err(|_| format!("bad string token {tok:?}"))?;
        let side = match side {
            "a" => StartSide::A,
            "b" => StartSide::B,
            _ => return Err(format!("bad side in token {tok:?}")),
        };
        Ok((d, side))
    }
    let mut units = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        if let Some((l, r)) = tok.split_once(':') {
            let (dl, sl) = half(l)?;
            let (dr, sr) = half(r)?;
            if dl != dr || dl % 2 != 0 || sl == sr {
                return Err(format!("invalid even pair {tok:?}"));
            }
            units.push(Unit::EvenPair(dl));
        } else {
            let (d, side) = half(tok)?;
            if d % 2 == 0 {
                return Err(format!("even string {tok:?} must come as a pair"));
            }
            units.push(Unit::Odd(d, side));
        }
    }
    Ok(from_units(&units))
}

pub fn jt_to_string(jt: &SignedJordanType) -> String {
    let mut toks = Vec::new();
    let mut seen = vec![false; jt.strings.len()];
    for i in 0..jt.strings.len() {
        if seen[i] {
            continue;
        }
        let (d, start) = jt.strings[i];
        let side = |s: StartSide| if s == StartSide::A { "a" } else { "b" };
        let j = jt.pairing[i];
        seen[i] = true;
        if j == i {
            toks.push(format!("{d}{}", side(start)));
        } else {
            seen[j] = true;
            toks.push(format!("{d}{}:{d}{}", side(start), side(jt.strings[j].1)));
        }
    }
    toks.sort();
    toks.join(",")
}

/// Nilpotent e in g1 of the BDI model with the given signed Jordan type.
///
/// The chain basis carries the form (e^s w_i, e^t w_j) supported on
/// s + t = d - 1 with alternating signs: paired even strings give hyperbolic
/// blocks, a self-paired odd string gives hyperbolic pairs plus one definite
/// square class on the side of its middle vector, whose sign is free. Signs
/// are chosen alternating per side, so the chain form is split and a rational
/// isometry onto the model form exists; e is the conjugated shift operator.
pub fn build_nilpotent(
    model: &SymmetricPairModel,
    jt: &SignedJordanType,
) -> Result<RatMat, String> {
    let (n, m) = match model.family {
        Family::BDI { n, m } => (n, m),
        other => return Err(format!("build_nilpotent expects a BDI model, got {other}")),
    };
    if !validate_type(jt, n, m) {
        return Err("invalid signed Jordan type for these parameters".into());
    }
    let dim = n + m;
    let offsets: Vec<usize> = jt
        .strings
        .iter()
        .scan(0, |acc, &(d, _)| {
            let off = *acc;
            *acc += d;
            Some(off)
        })
        .collect();
    let idx = |i: usize, s: usize| offsets[i] + s;

    let mut e_chain = RatMat::zero(dim, dim);
    for (i, &(d, _)) in jt.strings.iter().enumerate() {
        for s in 0..d - 1 {
            e_chain[(idx(i, s + 1), idx(i, s))] = rat(1);
        }
    }

    // free sign per self-paired string, chosen so that the definite square
    // classes alternate +1, -1 on each side
    let mut next_sign = [1i64, 1i64]; // per side
    let mut middle_sign = vec![0i64; jt.strings.len()];
    let mut g = RatMat::zero(dim, dim);
    for (i, &(d, start)) in jt.strings.iter().enumerate() {
        let j = jt.pairing[i];
        if j == i {
            let md = (d - 1) / 2;
            let mid_side = side_at(start, md);
            let slot = if mid_side == StartSide::A { 0 } else { 1 };
            let eps = next_sign[slot];
            next_sign[slot] = -eps;
            middle_sign[i] = eps;
            // (e^s w, e^{d-1-s} w) = (-1)^s c with c fixed by the middle sign
            let c = eps * if md % 2 == 0 { 1 } else { -1 };
            for s in 0..d {
                let sign = if s % 2 == 0 { c } else { -c };
                g[(idx(i, s), idx(i, d - 1 - s))] = rat(sign);
            }
        } else if i < j {
            for s in 0..d {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                g[(idx(i, s), idx(j, d - 1 - s))] = rat(sign);
                g[(idx(j, d - 1 - s), idx(i, s))] = rat(sign);
            }
        }
    }
    debug_assert_eq!(g.transpose(), g);
    debug_assert!((&(&e_chain.transpose() * &g) + &(&g * &e_chain)).is_zero());

    // Collect, per side, hyperbolic pairs and the definite middle vectors of
    // the chain basis, as vectors in chain coordinates.
    let basis_vec = |k: usize, scale: i64| {
        let mut v = vec![Rat::zero(); dim];
        v[k] = rat(scale);
        v
    };
    let mut planes: [Vec<(RatVec, RatVec)>; 2] = [Vec::new(), Vec::new()];
    let mut units: [Vec<RatVec>; 2] = [Vec::new(), Vec::new()];
    for (i, &(d, start)) in jt.strings.iter().enumerate() {
        let j = jt.pairing[i];
        if j == i {
            let md = (d - 1) / 2;
            for s in 0..md {
                let slot = if side_at(start, s) == StartSide::A { 0 } else { 1 };
                let gamma = middle_sign[i]
                    * (if md % 2 == 0 { 1 } else { -1 })
                    * (if s % 2 == 0 { 1 } else { -1 });
                planes[slot].push((basis_vec(idx(i, s), 1), basis_vec(idx(i, d - 1 - s), gamma)));
            }
            let slot = if side_at(start, md) == StartSide::A { 0 } else { 1 };
            units[slot].push(basis_vec(idx(i, md), 1));
        } else if i < j {
            for s in 0..d {
                let slot = if side_at(start, s) == StartSide::A { 0 } else { 1 };
                let gamma = if s % 2 == 0 { 1 } else { -1 };
                planes[slot].push((basis_vec(idx(i, s), 1), basis_vec(idx(j, d - 1 - s), gamma)));
            }
        }
    }
    // Middle vectors alternate +1, -1 per side: fold consecutive pairs into
    // hyperbolic planes, u = v+ + v-, u' = (v+ - v-)/2; a leftover has
    // square +1 and becomes the middle basis vector of the split form.
    let mut leftover: [Option<RatVec>; 2] = [None, None];
    for slot in 0..2 {
        let us = std::mem::take(&mut units[slot]);
        let mut it = us.chunks_exact(2);
        for pair in &mut it {
            let (p, q) = (&pair[0], &pair[1]);
            let u: RatVec = p.iter().zip(q).map(|(x, y)| x + y).collect();
            let v: RatVec = p.iter().zip(q).map(|(x, y)| (x - y) / rat(2)).collect();
            planes[slot].push((u, v));
        }
        if let [last] = it.remainder() {
            leftover[slot] = Some(last.clone());
        }
    }

    // Assemble the isometry column by column against the split form.
    let mut iso = RatMat::zero(dim, dim);
    for (slot, (off, k)) in [(0usize, (0usize, n)), (1, (n, m))] {
        debug_assert_eq!(2 * planes[slot].len() + leftover[slot].iter().count(), k);
        for (l, (u, v)) in planes[slot].iter().enumerate() {
            for r in 0..dim {
                iso[(r, off + l)] = u[r].clone();
                iso[(r, off + k - 1 - l)] = v[r].clone();
            }
        }
        if let Some(mid) = &leftover[slot] {
            for r in 0..dim {
                iso[(r, off + (k - 1) / 2)] = mid[r].clone();
            }
        }
    }
    let j_form = model.form.as_ref().expect("BDI model carries a form");
    debug_assert_eq!(&(&iso.transpose() * &g) * &iso, *j_form);
    let inv = iso.inverse().expect("isometry is invertible");
    let e = &(&inv * &e_chain) * &iso;
    debug_assert!(model.in_g1(&e));
    Ok(e)
}

/// Jordan block sizes of a nilpotent matrix, descending.
pub fn jordan_block_sizes(e: &RatMat) -> Vec<usize> {
    let n = e.rows();
    let mut ranks = vec![n];
    let mut p = RatMat::identity(n);
    loop {
        p = &p * e;
        let r = p.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    // sizes[k-1] = rank(e^{k-1}) - rank(e^k) = #blocks of size >= k
    let mut sizes = Vec::new();
    for k in 1..ranks.len() {
        sizes.push(ranks[k - 1] - ranks[k]);
    }
    let mut out = Vec::new();
    for k in (1..=sizes.len()).rev() {
        let this = sizes[k - 1] - if k < sizes.len() { sizes[k] } else { 0 };
        for _ in 0..this {
            out.push(k);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[derive(Clone, Debug)]
pub struct NormalTriple {
    pub e: RatMat,
    pub h: RatMat,
    pub f: RatMat,
}

/// Solve for a normal sl2-triple through a nonzero nilpotent e in g1:
/// h = [e, y] for y in g1 with [[e, y], e] = 2e, then f in g1 with
/// [e, f] = h and [h, f] = -2f.
pub fn normal_sl2_triple(
    model: &SymmetricPairModel,
    e: &RatMat,
) -> Result<NormalTriple, String> {
    if e.is_zero() {
        return Err("normal_sl2_triple needs e != 0".into());
    }
    if !model.in_g1(e) || !model.is_nilpotent(e) {
        return Err("e must be a nilpotent element of g1".into());
    }
    let d2 = model.ambient_dim * model.ambient_dim;
    let g1 = &model.g1_basis;
    let combine = |coords: &[Rat]| {
        let mut x = RatMat::zero(model.ambient_dim, model.ambient_dim);
        for (c, b) in coords.iter().zip(g1) {
            if !c.is_zero() {
                x = &x + &b.scale(c);
            }
        }
        x
    };

    let sys = RatMat::from_fn(d2, g1.len(), |r, c| {
        commutator(&commutator(e, &g1[c]), e).flatten()[r].clone()
    });
    let rhs: RatVec = e.scale(&rat(2)).flatten();
    let y = sys.solve(&rhs).ok_or("no characteristic h exists (not reachable for valid e)")?;
    let h = commutator(e, &combine(&y));
    debug_assert!(model.in_g0(&h));
    debug_assert_eq!(commutator(&h, e), e.scale(&rat(2)));

    // f: [e, f] = h and [h, f] = -2f, stacked
    let sys2 = RatMat::from_fn(2 * d2, g1.len(), |r, c| {
        if r < d2 {
            commutator(e, &g1[c]).flatten()[r].clone()
        } else {
            let row = r - d2;
            (&commutator(&h, &g1[c]) + &g1[c].scale(&rat(2))).flatten()[row].clone()
        }
    });
    let mut rhs2 = h.flatten();
    rhs2.extend(std::iter::repeat(Rat::zero()).take(d2));
    let f = combine(&sys2.solve(&rhs2).ok_or("no f completes the triple (signals a bug)")?);
    debug_assert_eq!(commutator(&h, &f), -&f.scale(&rat(2)));
    Ok(NormalTriple { e: e.clone(), h, f })
}

#[derive(Clone, Debug)]
pub struct DegenerationReport {
    pub dim_g_e: usize,
    pub dim_g0_e: usize,
    pub dim_g_h: usize,
    /// per t: (t, e(t) semisimple, dim g_{e(t)}, dim g_{0,e(t)})
    pub per_t: Vec<(i64, bool, usize, usize)>,
    pub all_match: bool,
}

/// Along e(t) = e - t^2 f the centraliser dimensions of the nilpotent e are
/// reached by semisimple elements; checks this at the supplied t values.
pub fn degeneration_check(
    model: &SymmetricPairModel,
    triple: &NormalTriple,
    t_values: &[i64],
) -> DegenerationReport {
    let (d0e, d1e) = model.centralizer_dims(&triple.e);
    let dim_g_e = d0e + d1e;
    let dim_g_h = model.centralizer_dim_g(&triple.h);
    let mut per_t = Vec::new();
    let mut all_match = true;
    for &t in t_values {
        let et = &triple.e - &triple.f.scale(&rat(t * t));
        let semisimple = model.is_semisimple(&et);
        let (d0, d1) = model.centralizer_dims(&et);
        let ok = semisimple && d0 + d1 == dim_g_e && d0 + d1 == dim_g_h && d0 == d0e;
        if t != 0 && !ok {
            all_match = false;
        }
        per_t.push((t, semisimple, d0 + d1, d0));
    }
    DegenerationReport { dim_g_e, dim_g0_e: d0e, dim_g_h, per_t, all_match }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Distinguished {
    Distinguished,
    NotDistinguished,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct DistinguishedReport {
    pub verdict: Distinguished,
    pub centralizer_g1_dim: usize,
    /// non-nilpotent element of the g1-centraliser, when one was found; its
    /// nonzero semisimple Jordan part also centralizes e and lies in g1
    pub witness: Option<RatMat>,
    pub grid_points: Option<usize>,
}

const GRID_LIMIT: usize = 250_000;

/// Decides whether the g1-centraliser of the nilpotent e contains nonzero
/// semisimple elements. A non-nilpotent element is a sound certificate for
/// "yes" (take its semisimple part). For "no", every coefficient of the
/// characteristic polynomial is a polynomial of per-variable degree <= N on
/// the centraliser, so vanishing on the full {0..N}^w grid is conclusive.
pub fn sigma_distinguished_test(
    model: &SymmetricPairModel,
    e: &RatMat,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> DistinguishedReport {
    let d = model.ambient_dim;
    let d2 = d * d;
    let g1 = &model.g1_basis;
    let sys = RatMat::from_fn(d2, g1.len(), |r, c| commutator(e, &g1[c]).flatten()[r].clone());
    let kernel = sys.kernel_basis();
    let w = kernel.len();
    let as_matrix = |coords: &[Rat]| {
        let mut x = RatMat::zero(d, d);
        for (c, b) in coords.iter().zip(g1) {
            if !c.is_zero() {
                x = &x + &b.scale(c);
            }
        }
        x
    };
    let basis: Vec<RatMat> = kernel.iter().map(|v| as_matrix(v)).collect();
    if w == 0 {
        return DistinguishedReport {
            verdict: Distinguished::Distinguished,
            centralizer_g1_dim: 0,
            witness: None,
            grid_points: Some(0),
        };
    }

    // witness search: basis elements, pairwise combinations, random combos
    let mut candidates: Vec<RatMat> = basis.clone();
    for i in 0..w {
        for j in i + 1..w {
            candidates.push(&basis[i] + &basis[j]);
            candidates.push(&basis[i] - &basis[j]);
        }
    }
    for _ in 0..samples {
        let mut x = RatMat::zero(d, d);
        for b in &basis {
            x = &x + &b.scale(&rat(rng.gen_range(-2i64..=2)));
        }
        candidates.push(x);
    }
    for x in candidates {
        if !model.is_nilpotent(&x) {
            return DistinguishedReport {
                verdict: Distinguished::NotDistinguished,
                centralizer_g1_dim: w,
                witness: Some(x),
                grid_points: None,
            };
        }
    }

    // exact grid: all char-poly coefficients vanish identically iff they
    // vanish on (N+1)^w points
    let points = (d + 1).checked_pow(w as u32).filter(|&p| p <= GRID_LIMIT);
    let Some(points) = points else {
        return DistinguishedReport {
            verdict: Distinguished::Inconclusive,
            centralizer_g1_dim: w,
            witness: None,
            grid_points: None,
        };
    };
    let mut coords = vec![0usize; w];
    loop {
        let mut x = RatMat::zero(d, d);
        for (c, b) in coords.iter().zip(&basis) {
            if *c != 0 {
                x = &x + &b.scale(&rat(*c as i64));
            }
        }
        let cp = char_poly(&x);
        if cp[..d].iter().any(|c| !c.is_zero()) {
            return DistinguishedReport {
                verdict: Distinguished::NotDistinguished,
                centralizer_g1_dim: w,
                witness: Some(x),
                grid_points: Some(points),
            };
        }
        let mut k = 0;
        loop {
            if k == w {
                return DistinguishedReport {
                    verdict: Distinguished::Distinguished,
                    centralizer_g1_dim: w,
                    witness: None,
                    grid_points: Some(points),
                };
            }
            coords[k] += 1;
            if coords[k] <= d {
                break;
            }
            coords[k] = 0;
            k += 1;
        }
    }
}

/// Integer eigenvalues of ad h on g, with multiplicity, when ad h is
/// diagonalizable over the integers; None otherwise.
pub fn ad_eigenvalues_on_g(model: &SymmetricPairModel, h: &RatMat) -> Option<Vec<i64>> {
    let dim = model.dim_g();
    let d2 = model.ambient_dim * model.ambient_dim;
    // coordinates of [h, b_i] in the g basis
    let basis_mat = RatMat::from_fn(d2, dim, |r, c| model.g_basis[c].flatten()[r].clone());
    let mut ad = RatMat::zero(dim, dim);
    for i in 0..dim {
        let coords = basis_mat.solve(&commutator(h, &model.g_basis[i]).flatten())?;
        for r in 0..dim {
            ad[(r, i)] = coords[r].clone();
        }
    }
    let mp = min_poly(&ad);
    let bound = 2 * model.ambient_dim as i64;
    let roots: Vec<i64> = (-bound..=bound).filter(|k| eval(&mp, &rat(*k)).is_zero()).collect();
    // ad h is semisimple with integer spectrum iff the min poly is exactly
    // the product of distinct linear factors over these roots
    let mut prod = vec![Rat::one()];
    for &r in &roots {
        prod = crate::poly::mul(&prod, &[rat(-r), rat(1)]);
    }
    if prod != crate::poly::monic(&mp) {
        return None;
    }
    let mut eigen = Vec::new();
    for &r in &roots {
        let shifted = &ad - &RatMat::identity(dim).scale(&rat(r));
        let mult = dim - shifted.rank();
        for _ in 0..mult {
            eigen.push(r);
        }
    }
    eigen.sort_unstable();
    Some(eigen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_model;
    use rand::SeedableRng;

    fn bdi(n: usize, m: usize) -> SymmetricPairModel {
        build_model(Family::BDI { n, m }).unwrap()
    }

    #[test]
    fn validate_examples() {
        let jt = parse_jt("3a").unwrap();
        assert!(validate_type(&jt, 2, 1));
        assert!(!validate_type(&jt, 1, 2));

        // even strings with equal starts, paired: invalid
        let bad = SignedJordanType {
            strings: vec![(2, StartSide::A), (2, StartSide::A)],
            pairing: vec![1, 0],
        };
        assert!(!validate_type(&bad, 2, 2));

        let good = parse_jt("2a:2b").unwrap();
        assert!(validate_type(&good, 2, 2));

        // self-paired even string: invalid
        let bad = SignedJordanType { strings: vec![(2, StartSide::A)], pairing: vec![0] };
        assert!(!validate_type(&bad, 1, 1));
    }

    #[test]
    fn parity_predicates() {
        assert!(is_even_nilpotent(&parse_jt("3a,1b").unwrap()));
        assert!(is_even_nilpotent(&parse_jt("2a:2b").unwrap()));
        assert!(!is_even_nilpotent(&parse_jt("3a,2a:2b").unwrap()));
        assert!(sigma_distinguished_necessary(&parse_jt("3a,1b").unwrap()));
        assert!(!sigma_distinguished_necessary(&parse_jt("2a:2b").unwrap()));
        assert!(sigma_distinguished_necessary(&parse_jt("1a").unwrap()));
    }

    #[test]
    fn necessary_implies_even() {
        for n in 1..=4 {
            for m in 1..=4 {
                for jt in enumerate_types(n, m) {
                    assert!(validate_type(&jt, n, m), "{}", jt_to_string(&jt));
                    if sigma_distinguished_necessary(&jt) {
                        assert!(is_even_nilpotent(&jt));
                    }
                }
            }
        }
    }

    #[test]
    fn text_format_round_trip() {
        for s in ["3a", "3a,1b", "2a:2b", "3b,2a:2b,1a"] {
            let jt = parse_jt(s).unwrap();
            let mut toks: Vec<&str> = s.split(',').collect();
            toks.sort();
            assert_eq!(jt_to_string(&jt), toks.join(","), "round trip for {s}");
            let reparsed = parse_jt(&jt_to_string(&jt)).unwrap();
            assert_eq!(jt_to_string(&reparsed), jt_to_string(&jt));
        }
        assert!(parse_jt("2a").is_err());
        assert!(parse_jt("2a:2a").is_err());
        assert!(parse_jt("2a:4b").is_err());
        assert!(parse_jt("xa").is_err());
    }

    #[test]
    fn enumeration_counts_small() {
        // (1,1): only the zero type {1a,1b}
        assert_eq!(enumerate_types(1, 1).len(), 1);
        // (2,2): {1a,1a,1b,1b}, {3a,1b}, {3b,1a}, {2a:2b}
        assert_eq!(enumerate_types(2, 2).len(), 4);
    }

    #[test]
    fn build_zero_type() {
        let model = bdi(2, 2);
        let jt = parse_jt("1a,1a,1b,1b").unwrap();
        let e = build_nilpotent(&model, &jt).unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn build_three_string_in_so3() {
        let model = bdi(2, 1);
        let jt = parse_jt("3a").unwrap();
        let e = build_nilpotent(&model, &jt).unwrap();
        assert!(model.in_g1(&e));
        assert!(model.is_nilpotent(&e));
        assert!(e.pow(2).rank() == 1 && e.pow(3).is_zero());
        assert_eq!(jordan_block_sizes(&e), vec![3]);
    }

    #[test]
    fn build_even_pair() {
        let model = bdi(2, 2);
        let jt = parse_jt("2a:2b").unwrap();
        let e = build_nilpotent(&model, &jt).unwrap();
        assert!(model.in_g1(&e));
        assert!(e.pow(2).is_zero());
        assert_eq!(e.rank(), 2);
        assert_eq!(jordan_block_sizes(&e), vec![2, 2]);
    }

    #[test]
    fn build_all_types_up_to_six() {
        for n in 1..=3usize {
            for m in 1..=3usize {
                let model = bdi(n, m);
                for jt in enumerate_types(n, m) {
                    let e = build_nilpotent(&model, &jt)
                        .unwrap_or_else(|err| panic!("{}: {err}", jt_to_string(&jt)));
                    assert!(model.in_g1(&e), "{}", jt_to_string(&jt));
                    assert!(model.is_nilpotent(&e), "{}", jt_to_string(&jt));
                    let mut want = jt.lengths();
                    want.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(jordan_block_sizes(&e), want, "{}", jt_to_string(&jt));
                }
            }
        }
    }

    #[test]
    fn triple_for_regular_so3() {
        let model = bdi(2, 1);
        let e = build_nilpotent(&model, &parse_jt("3a").unwrap()).unwrap();
        let t = normal_sl2_triple(&model, &e).unwrap();
        assert!(model.in_g0(&t.h));
        assert!(model.in_g1(&t.f));
        assert_eq!(commutator(&t.e, &t.f), t.h);
        assert_eq!(commutator(&t.h, &t.e), t.e.scale(&rat(2)));
        assert_eq!(commutator(&t.h, &t.f), -&t.f.scale(&rat(2)));
        // h acts on V with eigenvalues {2, 0, -2}
        let cp = char_poly(&t.h);
        let expect = crate::poly::mul(
            &crate::poly::mul(&[rat(-2), rat(1)], &[rat(2), rat(1)]),
            &[rat(0), rat(1)],
        );
        assert_eq!(cp, expect);
        assert_eq!(ad_eigenvalues_on_g(&model, &t.h).unwrap(), vec![-2, 0, 2]);
    }

    #[test]
    fn evenness_matches_ad_spectrum() {
        for (n, m, s) in [(2, 1, "3a"), (2, 2, "2a:2b"), (3, 2, "3a,1b,1a"), (2, 3, "3b,1a,1b")] {
            let model = bdi(n, m);
            let jt = parse_jt(s).unwrap();
            let e = build_nilpotent(&model, &jt).unwrap();
            if e.is_zero() {
                continue;
            }
            let t = normal_sl2_triple(&model, &e).unwrap();
            let eigen = ad_eigenvalues_on_g(&model, &t.h).unwrap();
            let all_even = eigen.iter().all(|k| k % 2 == 0);
            assert_eq!(all_even, is_even_nilpotent(&jt), "{s}");
        }
    }

    #[test]
    fn degeneration_examples() {
        let model = bdi(2, 1);
        let e = build_nilpotent(&model, &parse_jt("3a").unwrap()).unwrap();
        let t = normal_sl2_triple(&model, &e).unwrap();
        let rep = degeneration_check(&model, &t, &[0, 1, 2, 3]);
        assert!(rep.all_match);
        // t = 0 keeps the nilpotent itself
        assert_eq!(rep.per_t[0].0, 0);
        assert!(model.is_nilpotent(&(&t.e - &t.f.scale(&rat(0)))));

        let model = bdi(3, 2);
        let e = build_nilpotent(&model, &parse_jt("3a,1b,1a").unwrap()).unwrap();
        let t = normal_sl2_triple(&model, &e).unwrap();
        assert!(degeneration_check(&model, &t, &[1, 2, 3]).all_match);
    }

    #[test]
    fn distinguished_verdicts() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let model = bdi(2, 2);
        // e = 0: the Cartan subspace sits inside g_{1,0}
        let rep = sigma_distinguished_test(&model, &RatMat::zero(4, 4), 10, &mut rng);
        assert_eq!(rep.verdict, Distinguished::NotDistinguished);
        let e = build_nilpotent(&model, &parse_jt("2a:2b").unwrap()).unwrap();
        let rep = sigma_distinguished_test(&model, &e, 10, &mut rng);
        assert_eq!(rep.verdict, Distinguished::NotDistinguished);

        let model = bdi(2, 1);
        let e = build_nilpotent(&model, &parse_jt("3a").unwrap()).unwrap();
        let rep = sigma_distinguished_test(&model, &e, 10, &mut rng);
        assert_eq!(rep.verdict, Distinguished::Distinguished);
        assert!(sigma_distinguished_necessary(&parse_jt("3a").unwrap()));
    }

    #[test]
    fn chain_form_is_reproduced() {
        // spot check: the construction really conjugates the shift
        let model = bdi(3, 4);
        let jt = parse_jt("5a,1b,1b").unwrap();
        let e = build_nilpotent(&model, &jt).unwrap();
        assert_eq!(jordan_block_sizes(&e), vec![5, 1, 1]);
        let j = model.form.as_ref().unwrap();
        assert!((&(&e.transpose() * j) + &(j * &e)).is_zero());
    }
}
