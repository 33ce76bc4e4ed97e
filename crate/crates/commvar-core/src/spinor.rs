//! Half-spinor representation of so10 over the rationals, built on the
//! exterior algebra of a 5-dim isotropic subspace, and the degree-4 invariant
//! it carries: a symmetric equivariant map B from pairs of half-spinors to
//! the 10-dim vector representation, contracted with the split form. The
//! invariant vanishes identically on the rank-2 Cartan piece but not
//! globally, which is the reducibility mechanism in the rank-2 Hermitian
//! case.

use crate::exactlin::{dot, rat, ratq, Rat, RatMat, RatVec, Span};
use num_traits::Zero;

const W: usize = 5;
const V_DIM: usize = 10;
const DELTA: usize = 16;
const FULL: usize = 32;

/// v_0..v_4 = w_1..w_5 (isotropic), v_5..v_9 = dual basis; split form pairs
/// the two halves.
fn form_v() -> RatMat {
    RatMat::from_fn(V_DIM, V_DIM, |r, c| {
        if r + W == c || c + W == r {
            rat(1)
        } else {
            rat(0)
        }
    })
}

fn popcount_below(mask: usize, i: usize) -> u32 {
    (mask & ((1 << i) - 1)).count_ones()
}

/// gamma matrices on the full 32-dim exterior algebra, basis = bitmasks:
/// gamma(w_i) = wedge, gamma(w_i*) = 2 contraction; Clifford relation
/// {gamma(u), gamma(v)} = 2<u,v>.
fn gamma(a: usize) -> RatMat {
    let mut m = RatMat::zero(FULL, FULL);
    for mask in 0..FULL {
        if a < W {
            if mask & (1 << a) == 0 {
                let sign = if popcount_below(mask, a) % 2 == 0 { 1 } else { -1 };
                m[(mask | (1 << a), mask)] = rat(sign);
            }
        } else {
            let i = a - W;
            if mask & (1 << i) != 0 {
                let sign = if popcount_below(mask, i) % 2 == 0 { 2 } else { -2 };
                m[(mask & !(1 << i), mask)] = rat(sign);
            }
        }
    }
    m
}

#[derive(Clone, Debug)]
pub struct SpinModel {
    /// masks with even popcount, ascending; the half-spinor basis
    pub delta_masks: Vec<usize>,
    /// per generator: action on V and on the half-spinor space
    pub generators: Vec<(RatMat, RatMat)>,
    pub form: RatMat,
}

impl SpinModel {
    pub fn delta_dim(&self) -> usize {
        self.delta_masks.len()
    }

    /// Weight of a basis monomial in the epsilon coordinates: +1/2 where the
    /// index is absent, -1/2 where present.
    pub fn weight(&self, basis_idx: usize) -> RatVec {
        let mask = self.delta_masks[basis_idx];
        (0..W).map(|i| if mask & (1 << i) == 0 { ratq(1, 2) } else { ratq(-1, 2) }).collect()
    }
}

/// so10 spanned by x_{u,v}: z -> <u,z>v - <v,z>u over basis pairs u < v;
/// the spin action is the restriction of [gamma(u), gamma(v)]/4 to even
/// degree.
pub fn build_spin_model() -> SpinModel {
    let j = form_v();
    let gammas: Vec<RatMat> = (0..V_DIM).map(gamma).collect();
    let delta_masks: Vec<usize> = (0..FULL).filter(|m| m.count_ones() % 2 == 0).collect();
    let mut generators = Vec::new();
    for a in 0..V_DIM {
        for b in a + 1..V_DIM {
            let mut x = RatMat::zero(V_DIM, V_DIM);
            for c in 0..V_DIM {
                x[(b, c)] = &x[(b, c)] + &j[(a, c)];
                x[(a, c)] = &x[(a, c)] - &j[(b, c)];
            }
            // [gamma_b, gamma_a]/4 intertwines with x_{a,b} on V
            let full = (&(&gammas[b] * &gammas[a]) - &(&gammas[a] * &gammas[b]))
                .scale(&ratq(1, 4));
            let s = RatMat::from_fn(DELTA, DELTA, |r, c| {
                full[(delta_masks[r], delta_masks[c])].clone()
            });
            generators.push((x, s));
        }
    }
    SpinModel { delta_masks, generators, form: j }
}

/// Symmetric equivariant map Delta x Delta -> V as 10 component matrices.
#[derive(Clone, Debug)]
pub struct QuarticInvariant {
    pub components: Vec<RatMat>,
    pub form: RatMat,
    pub solution_space_dim: usize,
}

// under the Cartan generators x_{w_i, w_i*} the isotropic basis vector w_i
// has eigenvalue -1, so the first half of V carries weight -eps_i
fn weight_v(mu: usize) -> RatVec {
    (0..W)
        .map(|i| {
            if mu == i {
                rat(-1)
            } else if mu == i + W {
                rat(1)
            } else {
                rat(0)
            }
        })
        .collect()
}

/// Solves the equivariance system x.B(u,u') = B(x.u,u') + B(u,x.u') over
/// symmetric B; the solution space must be 1-dimensional. Unknowns are
/// pruned to the weight-compatible cells, which loses nothing because an
/// equivariant map has weight zero.
pub fn equivariant_projection(model: &SpinModel) -> Result<QuarticInvariant, String> {
    let d = model.delta_dim();
    let weights: Vec<RatVec> = (0..d).map(|i| model.weight(i)).collect();
    // unknown cells (mu, s, t) with s <= t and weight(s)+weight(t) = weight(v_mu)
    let mut cells = Vec::new();
    let mut cell_id = vec![vec![vec![usize::MAX; d]; d]; V_DIM];
    for mu in 0..V_DIM {
        let wv = weight_v(mu);
        for s in 0..d {
            for t in s..d {
                let sum: RatVec = weights[s].iter().zip(&weights[t]).map(|(x, y)| x + y).collect();
                if sum == wv {
                    cell_id[mu][s][t] = cells.len();
                    cell_id[mu][t][s] = cells.len();
                    cells.push((mu, s, t));
                }
            }
        }
    }
    let unknowns = cells.len();

    let mut rows = Span::new(unknowns);
    let mut row_list: Vec<RatVec> = Vec::new();
    for (x, s_act) in &model.generators {
        for mu in 0..V_DIM {
            for si in 0..d {
                for ti in 0..d {
                    let mut row = vec![Rat::zero(); unknowns];
                    let mut nonzero = false;
                    let mut add = |id: usize, c: &Rat| {
                        if id != usize::MAX && !c.is_zero() {
                            row[id] = &row[id] + c;
                            nonzero = true;
                        }
                    };
                    for nu in 0..V_DIM {
                        add(cell_id[nu][si][ti], &x[(mu, nu)]);
                    }
                    for r in 0..d {
                        let c = -&s_act[(r, si)];
                        add(cell_id[mu][r][ti], &c);
                        let c = -&s_act[(r, ti)];
                        add(cell_id[mu][si][r], &c);
                    }
                    if nonzero && rows.insert(row.clone()) {
                        row_list.push(row);
                    }
                }
            }
        }
    }
    let sys = RatMat::from_fn(row_list.len(), unknowns, |r, c| row_list[r][c].clone());
    let kernel = sys.kernel_basis();
    if kernel.len() != 1 {
        return Err(format!("equivariant solution space has dim {}", kernel.len()));
    }
    // normalize: first nonzero coefficient in cell order = 1
    let sol = &kernel[0];
    let lead = sol.iter().find(|c| !c.is_zero()).unwrap().clone();
    let mut components = vec![RatMat::zero(d, d); V_DIM];
    for (id, &(mu, s, t)) in cells.iter().enumerate() {
        let val = &sol[id] / &lead;
        components[mu][(s, t)] = val.clone();
        components[mu][(t, s)] = val;
    }
    Ok(QuarticInvariant { components, form: model.form.clone(), solution_space_dim: 1 })
}

impl QuarticInvariant {
    /// B(u, v) as a vector in V.
    pub fn b(&self, u: &[Rat], v: &[Rat]) -> RatVec {
        self.components.iter().map(|m| dot(&m.mul_vec(v), u)).collect()
    }
}

/// I(u, v) = <B(u,u), B(v,v)> under the split form; bidegree (2,2).
pub fn quartic_invariant_value(inv: &QuarticInvariant, u: &[Rat], v: &[Rat]) -> Rat {
    let bu = inv.b(u, u);
    let bv = inv.b(v, v);
    dot(&inv.form.mul_vec(&bv), &bu)
}

/// Basis of the rank-2 Cartan piece inside the half-spinor space: the two
/// basis monomials of weights (1,1,1,1,1)/2 and (1,-1,-1,-1,-1)/2.
pub fn cartan_c1(model: &SpinModel) -> Result<Vec<RatVec>, String> {
    let targets = [
        vec![ratq(1, 2); 5],
        vec![ratq(1, 2), ratq(-1, 2), ratq(-1, 2), ratq(-1, 2), ratq(-1, 2)],
    ];
    let mut out = Vec::new();
    for t in &targets {
        let idx = (0..model.delta_dim())
            .find(|&i| &model.weight(i) == t)
            .ok_or("expected weight not found in the half-spinor basis")?;
        let mut v = vec![Rat::zero(); model.delta_dim()];
        v[idx] = rat(1);
        out.push(v);
    }
    Ok(out)
}

// Exact phase-1 simplex with Bland's rule: min sum of artificials subject to
// A x = b, x >= 0, b >= 0; returns x when the optimum is zero.
fn phase1(a: &RatMat, b: &[Rat]) -> Option<RatVec> {
    let m = a.rows();
    let n = a.cols();
    let total = n + m;
    // tableau rows: [A | I | b]
    let mut tab: Vec<RatVec> = (0..m)
        .map(|i| {
            let mut row: RatVec = a.row(i);
            for j in 0..m {
                row.push(if i == j { rat(1) } else { rat(0) });
            }
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..total).collect();
    // reduced costs for min sum artificials: r_j = c_j - sum over rows
    let mut cost: RatVec = (0..total)
        .map(|j| {
            let c_j = if j >= n { rat(1) } else { rat(0) };
            let mut s = c_j;
            for row in tab.iter() {
                s = &s - &row[j];
            }
            s
        })
        .collect();
    loop {
        let Some(enter) = (0..total).find(|&j| cost[j] < rat(0)) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter] > rat(0) {
                let ratio = &row[total] / &row[enter];
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave?; // unbounded cannot happen for phase 1
        let piv = tab[leave][enter].clone();
        for x in tab[leave].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..m {
            if i != leave && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..=total {
                    let t = &tab[i][j] - &f * &tab[leave][j];
                    tab[i][j] = t;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..total {
                let t = &cost[j] - &f * &tab[leave][j];
                cost[j] = t;
            }
        }
        basis[leave] = enter;
    }
    // optimum is zero iff no artificial keeps a nonzero value
    let mut x = vec![Rat::zero(); n];
    for (i, &bvar) in basis.iter().enumerate() {
        if bvar >= n {
            if !tab[i][total].is_zero() {
                return None;
            }
        } else {
            x[bvar] = tab[i][total].clone();
        }
    }
    Some(x)
}

/// Some mu with <mu, w> > 0 for every listed weight, or None. Encoded as
/// feasibility of A mu >= 1 componentwise (scale invariance of the open
/// condition) and decided by exact simplex.
pub fn halfspace_check(weights: &[RatVec]) -> Option<RatVec> {
    if weights.is_empty() {
        return Some(vec![rat(1)]);
    }
    let dim = weights[0].len();
    if weights.iter().any(|w| w.iter().all(|c| c.is_zero())) {
        return None;
    }
    let k = weights.len();
    // variables: mu = p - q with p, q >= 0, slack s: A(p - q) - s = 1
    let a = RatMat::from_fn(k, 2 * dim + k, |r, c| {
        if c < dim {
            weights[r][c].clone()
        } else if c < 2 * dim {
            -&weights[r][c - dim]
        } else if c == 2 * dim + r {
            rat(-1)
        } else {
            rat(0)
        }
    });
    let b = vec![rat(1); k];
    let x = phase1(&a, &b)?;
    let mu: RatVec = (0..dim).map(|j| &x[j] - &x[j + dim]).collect();
    debug_assert!(weights.iter().all(|w| dot(w, &mu) > rat(0)));
    Some(mu)
}

#[derive(Clone, Debug)]
pub struct SpinorHeartReport {
    pub solution_space_dim: usize,
    pub grid_points: usize,
    pub grid_all_zero: bool,
    pub witness_u: RatVec,
    pub witness_v: RatVec,
    pub witness_value: Rat,
    pub halfspace_mu: Option<RatVec>,
    pub reducible: bool,
    pub components_at_least: usize,
    pub note: &'static str,
}

/// Wraps the whole rank-2 Hermitian argument: the quartic invariant vanishes
/// on the Cartan piece squared (81-point exact grid, conclusive since the
/// restriction has degree <= 2 per variable) yet is nonzero somewhere, so
/// the closure condition fails and there are at least three components.
pub fn heart_violation_e6(model: &SpinModel) -> Result<SpinorHeartReport, String> {
    let inv = equivariant_projection(model)?;
    let c1 = cartan_c1(model)?;
    let d = model.delta_dim();

    let mut grid_all_zero = true;
    let mut grid_points = 0;
    for x0 in 0..3i64 {
        for x1 in 0..3i64 {
            for y0 in 0..3i64 {
                for y1 in 0..3i64 {
                    let u: RatVec = c1[0]
                        .iter()
                        .zip(&c1[1])
                        .map(|(p, q)| &rat(x0) * p + &rat(x1) * q)
                        .collect();
                    let v: RatVec = c1[0]
                        .iter()
                        .zip(&c1[1])
                        .map(|(p, q)| &rat(y0) * p + &rat(y1) * q)
                        .collect();
                    grid_points += 1;
                    if !quartic_invariant_value(&inv, &u, &v).is_zero() {
                        grid_all_zero = false;
                    }
                }
            }
        }
    }

    // witness search over sums of two basis monomials on each side
    let mut witness = None;
    'outer: for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                for l in k + 1..d {
                    let mut u = vec![Rat::zero(); d];
                    u[i] = rat(1);
                    u[j] = rat(1);
                    let mut v = vec![Rat::zero(); d];
                    v[k] = rat(1);
                    v[l] = rat(1);
                    let val = quartic_invariant_value(&inv, &u, &v);
                    if !val.is_zero() {
                        witness = Some((u, v, val));
                        break 'outer;
                    }
                }
            }
        }
    }
    let (witness_u, witness_v, witness_value) =
        witness.ok_or("no nonzero value found; invariant construction broken")?;

    let c1_weights: Vec<RatVec> = (0..d)
        .filter(|&i| {
            let mut v = vec![Rat::zero(); d];
            v[i] = rat(1);
            c1.contains(&v)
        })
        .map(|i| model.weight(i))
        .collect();
    let halfspace_mu = halfspace_check(&c1_weights);

    let reducible = grid_all_zero && halfspace_mu.is_some();
    Ok(SpinorHeartReport {
        solution_space_dim: inv.solution_space_dim,
        grid_points,
        grid_all_zero,
        witness_u,
        witness_v,
        witness_value,
        halfspace_mu,
        reducible,
        components_at_least: 3,
        note: "computed on one half-spinor space; the two closure conditions for the \
               +1 and -1 graded pieces are equivalent",
    })
}
