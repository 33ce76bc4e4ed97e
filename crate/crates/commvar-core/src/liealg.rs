//! Matrix models of the classical symmetric pairs used throughout: split
//! orthogonal BDI = (so_{n+m}, so_n + so_m), AIII in its gl form
//! (gl_{n+m}, gl_n + gl_m), and DIII = (so_{2n}, gl_n).
//!
//! The involution is conjugation by the diagonal matrix A = diag(-I, I), so
//! g0 is the block-diagonal part and g1 the off-diagonal part. Orthogonal
//! models use split forms (exchange matrices, resp. [[0,I],[I,0]]) so that g1
//! contains rational nilpotents and rational Cayley transforms stay in G0.

use crate::exactlin::{commutator, rat, Rat, RatMat, Span};
use crate::poly::{is_squarefree, min_poly, squarefree_decomposition};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    BDI { n: usize, m: usize },
    AIIIGl { n: usize, m: usize },
    DIII { n: usize },
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::BDI { n, m } => write!(f, "BDI({n},{m})"),
            Family::AIIIGl { n, m } => write!(f, "AIII_gl({n},{m})"),
            Family::DIII { n } => write!(f, "DIII({n})"),
        }
    }
}

pub struct SymmetricPairModel {
    pub family: Family,
    pub ambient_dim: usize,
    pub g_basis: Vec<RatMat>,
    pub g0_basis: Vec<RatMat>,
    pub g1_basis: Vec<RatMat>,
    pub sigma_matrix: RatMat,
    /// Invariant symmetric form J for the orthogonal models.
    pub form: Option<RatMat>,
    pub cartan_basis: Vec<RatMat>,
    g_span: Span,
    g0_span: Span,
    g1_span: Span,
}

/// Element of g, validated against the model's basis on construction.
#[derive(Clone, Debug)]
pub struct LieElement {
    pub matrix: RatMat,
}

impl LieElement {
    pub fn new(model: &SymmetricPairModel, matrix: RatMat) -> Result<Self, String> {
        if !model.in_g(&matrix) {
            return Err("matrix is not in the model algebra".into());
        }
        Ok(LieElement { matrix })
    }
}

fn unit(d: usize, i: usize, j: usize) -> RatMat {
    let mut m = RatMat::zero(d, d);
    m[(i, j)] = rat(1);
    m
}

/// Exchange matrix (ones on the anti-diagonal).
fn exchange(k: usize) -> RatMat {
    RatMat::from_fn(k, k, |i, j| if i + j == k - 1 { rat(1) } else { rat(0) })
}

// Basis of so(J) for the k x k exchange form, embedded at block offset off
// in a d x d matrix: the condition is x[i][j] = -x[k-1-j][k-1-i], so entries
// pair across the anti-diagonal and the anti-diagonal itself vanishes.
fn so_exchange_block(d: usize, off: usize, k: usize) -> Vec<RatMat> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let (pi, pj) = (k - 1 - j, k - 1 - i);
            if i + j == k - 1 || (pi, pj) < (i, j) {
                continue;
            }
            let mut m = RatMat::zero(d, d);
            m[(off + i, off + j)] = rat(1);
            m[(off + pi, off + pj)] = rat(-1);
            out.push(m);
        }
    }
    out
}

fn span_of(dim: usize, mats: &[RatMat]) -> Span {
    let mut s = Span::new(dim);
    for m in mats {
        s.insert(m.flatten());
    }
    s
}

pub fn build_model(family: Family) -> Result<SymmetricPairModel, String> {
    match family {
        Family::BDI { n, m } => build_bdi(n, m),
        Family::AIIIGl { n, m } => build_aiii(n, m),
        Family::DIII { n } => build_diii(n),
    }
}

fn assemble(
    family: Family,
    d: usize,
    g0_basis: Vec<RatMat>,
    g1_basis: Vec<RatMat>,
    sigma: RatMat,
    form: Option<RatMat>,
    cartan_basis: Vec<RatMat>,
) -> SymmetricPairModel {
    let mut g_basis = g0_basis.clone();
    g_basis.extend(g1_basis.iter().cloned());
    let g_span = span_of(d * d, &g_basis);
    let g0_span = span_of(d * d, &g0_basis);
    let g1_span = span_of(d * d, &g1_basis);
    debug_assert_eq!(g_span.rank(), g0_span.rank() + g1_span.rank());
    SymmetricPairModel {
        family,
        ambient_dim: d,
        g_basis,
        g0_basis,
        g1_basis,
        sigma_matrix: sigma,
        form,
        cartan_basis,
        g_span,
        g0_span,
        g1_span,
    }
}

fn sigma_matrix(d: usize, n: usize) -> RatMat {
    RatMat::from_fn(d, d, |i, j| {
        if i != j {
            rat(0)
        } else if i < n {
            rat(-1)
        } else {
            rat(1)
        }
    })
}

fn build_bdi(n: usize, m: usize) -> Result<SymmetricPairModel, String> {
    if n < 1 || m < 1 {
        return Err("BDI requires n, m >= 1".into());
    }
    let d = n + m;
    let mut j = RatMat::zero(d, d);
    j.set_block(0, 0, &exchange(n));
    j.set_block(n, n, &exchange(m));

    let mut g0 = so_exchange_block(d, 0, n);
    g0.extend(so_exchange_block(d, n, m));

    // g1 = {[[0, Y], [X, 0]]} with Y determined by X: Y = -E_n X^t E_m.
    let mut g1 = Vec::new();
    for i in 0..m {
        for k in 0..n {
            let mut mat = RatMat::zero(d, d);
            mat[(n + i, k)] = rat(1);
            mat[(n - 1 - k, n + m - 1 - i)] = rat(-1);
            g1.push(mat);
        }
    }

    let cartan = bdi_cartan(n, m);
    Ok(assemble(Family::BDI { n, m }, d, g0, g1, sigma_matrix(d, n), Some(j), cartan))
}

// Cartan subspace of g1 for the split BDI model. Coordinates 0..n span V_a
// with hyperbolic pairs (a_k, a_k') = (e_k, e_{n-1-k}); same for V_b shifted
// by n. Each matched pair of hyperbolic planes carries two commuting
// semisimple elements (squares +1 and -1 on the 4-dim block); when min(n,m)
// is odd one more element ties the leftover middle vectors (or a middle
// vector and an unused hyperbolic pair) together. Total: min(n,m) elements.
fn bdi_cartan(n: usize, m: usize) -> Vec<RatMat> {
    let d = n + m;
    let r = n.min(m);
    let p = (n / 2).min(m / 2);
    let a = |k: usize| k;
    let a_ = |k: usize| n - 1 - k;
    let b = |k: usize| n + k;
    let b_ = |k: usize| n + m - 1 - k;
    let mut out = Vec::new();
    for k in 0..p {
        // columns are preimages: x[(to, from)] = coefficient
        let mut x = RatMat::zero(d, d);
        x[(b(k), a(k))] = rat(1);
        x[(a(k), b(k))] = rat(1);
        x[(b_(k), a_(k))] = rat(-1);
        x[(a_(k), b_(k))] = rat(-1);
        out.push(x);
        let mut y = RatMat::zero(d, d);
        y[(b_(k), a(k))] = rat(1);
        y[(b(k), a_(k))] = rat(1);
        y[(a_(k), b(k))] = rat(-1);
        y[(a(k), b_(k))] = rat(-1);
        out.push(y);
    }
    if r % 2 == 1 {
        // exactly one of n, m odd here when r is odd and 2p = r - 1
        let (mid, other_odd, ob, ob_) = if n % 2 == 1 && (m % 2 == 0 || n <= m) {
            (a((n - 1) / 2), m % 2 == 1, b(p), b_(p))
        } else {
            (b((m - 1) / 2), n % 2 == 1, a(p), a_(p))
        };
        let mut z = RatMat::zero(d, d);
        if other_odd {
            // both odd: rotate the two middle unit-norm vectors into each other
            let mid2 = if n % 2 == 1 && n <= m { b((m - 1) / 2) } else { a((n - 1) / 2) };
            z[(mid2, mid)] = rat(1);
            z[(mid, mid2)] = rat(-1);
        } else {
            // middle vector against an unused hyperbolic pair on the other side
            z[(ob, mid)] = rat(1);
            z[(ob_, mid)] = -crate::exactlin::ratq(1, 2);
            z[(mid, ob)] = crate::exactlin::ratq(1, 2);
            z[(mid, ob_)] = rat(-1);
        }
        out.push(z);
    }
    out
}

fn build_aiii(n: usize, m: usize) -> Result<SymmetricPairModel, String> {
    if n < 1 || m < 1 {
        return Err("AIII_gl requires n, m >= 1".into());
    }
    let d = n + m;
    let mut g0 = Vec::new();
    let mut g1 = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let diag_block = (i < n) == (j < n);
            if diag_block {
                g0.push(unit(d, i, j));
            } else {
                g1.push(unit(d, i, j));
            }
        }
    }
    let r = n.min(m);
    let cartan = (0..r)
        .map(|i| {
            let mut x = RatMat::zero(d, d);
            x[(i, n + i)] = rat(1);
            x[(n + i, i)] = rat(1);
            x
        })
        .collect();
    Ok(assemble(Family::AIIIGl { n, m }, d, g0, g1, sigma_matrix(d, n), None, cartan))
}

fn build_diii(n: usize) -> Result<SymmetricPairModel, String> {
    if n < 2 {
        return Err("DIII requires n >= 2".into());
    }
    let d = 2 * n;
    // J = [[0, I], [I, 0]]; g = {[[B, X], [Y, -B^t]] : X, Y skew}
    let j = RatMat::from_fn(d, d, |i, k| {
        if i + n == k || k + n == i {
            rat(1)
        } else {
            rat(0)
        }
    });
    let mut g0 = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let mut m = RatMat::zero(d, d);
            m[(i, k)] = rat(1);
            m[(n + k, n + i)] = rat(-1);
            g0.push(m);
        }
    }
    let mut g1 = Vec::new();
    for (r0, c0) in [(0, n), (n, 0)] {
        for i in 0..n {
            for k in 0..i {
                let mut m = RatMat::zero(d, d);
                m[(r0 + i, c0 + k)] = rat(1);
                m[(r0 + k, c0 + i)] = rat(-1);
                g1.push(m);
            }
        }
    }
    // c = {[[0, X], [X, 0]]}, X skew anti-diagonal
    let cartan = (0..n / 2)
        .map(|k| {
            let mut x = RatMat::zero(d, d);
            for (r0, c0) in [(0, n), (n, 0)] {
                x[(r0 + k, c0 + n - 1 - k)] = rat(1);
                x[(r0 + n - 1 - k, c0 + k)] = rat(-1);
            }
            x
        })
        .collect();
    Ok(assemble(Family::DIII { n }, d, g0, g1, sigma_matrix(d, n), Some(j), cartan))
}

impl SymmetricPairModel {
    pub fn dim_g(&self) -> usize {
        self.g_basis.len()
    }

    pub fn dim_g0(&self) -> usize {
        self.g0_basis.len()
    }

    pub fn dim_g1(&self) -> usize {
        self.g1_basis.len()
    }

    pub fn rank(&self) -> usize {
        self.cartan_basis.len()
    }

    pub fn in_g(&self, x: &RatMat) -> bool {
        self.g_span.contains(&x.flatten())
    }

    pub fn in_g0(&self, x: &RatMat) -> bool {
        self.g0_span.contains(&x.flatten())
    }

    pub fn in_g1(&self, x: &RatMat) -> bool {
        self.g1_span.contains(&x.flatten())
    }

    pub fn sigma(&self, x: &RatMat) -> RatMat {
        // A is diagonal with entries +-1, so A^-1 = A
        &(&self.sigma_matrix * x) * &self.sigma_matrix
    }

    pub fn bracket(&self, x: &RatMat, y: &RatMat) -> RatMat {
        commutator(x, y)
    }

    fn ad_kernel_dim(&self, xs: &[&RatMat], basis: &[RatMat]) -> usize {
        if basis.is_empty() {
            return 0;
        }
        let d2 = self.ambient_dim * self.ambient_dim;
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(xs.len() * d2);
        let cols: Vec<Vec<RatMat>> = xs
            .iter()
            .map(|x| basis.iter().map(|b| commutator(x, b)).collect())
            .collect();
        for per_x in &cols {
            for coord in 0..d2 {
                rows.push((0..basis.len()).map(|i| per_x[i].flatten()[coord].clone()).collect());
            }
        }
        let m = RatMat::from_fn(rows.len(), basis.len(), |i, j| rows[i][j].clone());
        basis.len() - m.rank()
    }

    /// (dim of the centraliser of x in g0, same in g1).
    pub fn centralizer_dims(&self, x: &RatMat) -> (usize, usize) {
        (self.ad_kernel_dim(&[x], &self.g0_basis), self.ad_kernel_dim(&[x], &self.g1_basis))
    }

    pub fn centralizer_dim_g(&self, x: &RatMat) -> usize {
        self.ad_kernel_dim(&[x], &self.g_basis)
    }

    /// dim g_{x,y} = dim (g_x intersect g_y).
    pub fn centralizer_pair_dim(&self, x: &RatMat, y: &RatMat) -> usize {
        self.ad_kernel_dim(&[x, y], &self.g_basis)
    }

    /// dim g_{1,x} - dim g_{0,x} = dim g1 - dim g0, for x in g1.
    pub fn check_z2(&self, x: &RatMat) -> bool {
        assert!(self.in_g1(x), "check_z2 needs x in g1");
        let (d0, d1) = self.centralizer_dims(x);
        d1 as i64 - d0 as i64 == self.dim_g1() as i64 - self.dim_g0() as i64
    }

    pub fn is_nilpotent(&self, x: &RatMat) -> bool {
        x.pow(self.ambient_dim).is_zero()
    }

    pub fn is_semisimple(&self, x: &RatMat) -> bool {
        is_squarefree(&min_poly(x))
    }

    /// Random element of g1 with small integer coordinates.
    pub fn random_g1(&self, rng: &mut ChaCha8Rng) -> RatMat {
        let mut x = RatMat::zero(self.ambient_dim, self.ambient_dim);
        for b in &self.g1_basis {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                x = &x + &b.scale(&rat(c));
            }
        }
        x
    }

    /// Random element of the Cartan subspace.
    pub fn random_cartan(&self, rng: &mut ChaCha8Rng) -> RatMat {
        let mut x = RatMat::zero(self.ambient_dim, self.ambient_dim);
        for b in &self.cartan_basis {
            x = &x + &b.scale(&rat(rng.gen_range(-5i64..=5)));
        }
        x
    }

    /// Random G0 element as a Cayley transform g = (I - S)(I + S)^-1 of a
    /// random S in g0; this preserves the form for the orthogonal models and
    /// is block-diagonal, hence commutes with sigma.
    pub fn sample_g0_group(&self, rng: &mut ChaCha8Rng) -> RatMat {
        let id = RatMat::identity(self.ambient_dim);
        for _ in 0..32 {
            let mut s = RatMat::zero(self.ambient_dim, self.ambient_dim);
            for b in &self.g0_basis {
                let c = rng.gen_range(-2i64..=2);
                if c != 0 {
                    s = &s + &b.scale(&crate::exactlin::ratq(c, 3));
                }
            }
            // both factors must be invertible, otherwise g itself is singular
            if let (Some(inv), true) = ((&id + &s).inverse(), (&id - &s).rank() == id.rows()) {
                return &(&id - &s) * &inv;
            }
        }
        unreachable!("Cayley denominators cannot be singular 32 times in a row");
    }

    pub fn conjugate(&self, g: &RatMat, x: &RatMat) -> RatMat {
        let gi = g.inverse().expect("group element is invertible");
        &(g * x) * &gi
    }

    pub fn sample_g0_conjugate(&self, x: &RatMat, rng: &mut ChaCha8Rng) -> RatMat {
        let g = self.sample_g0_group(rng);
        self.conjugate(&g, x)
    }
}

/// Sub-symmetric-pair dimension report at a semisimple h in g1 of the BDI
/// model: the centraliser pair (g_h, g_{0,h}) decomposes as a sum of
/// (gl_{k_i}, so_{k_i}) over the eigenvalue pairs (+-lambda_i, multiplicity
/// k_i) plus (so_{n+m-2k}, so_{n-k} + so_{m-k}) on the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubpairReport {
    pub multiplicities: Vec<usize>,
    pub dim_g_h: usize,
    pub dim_g0_h: usize,
    pub dim_g1_h: usize,
    pub pred_g_h: usize,
    pub pred_g0_h: usize,
    pub pred_g1_h: usize,
    pub matches: bool,
}

pub fn subpair_dims_at(model: &SymmetricPairModel, h: &RatMat) -> Result<SubpairReport, String> {
    let (n, m) = match model.family {
        Family::BDI { n, m } => (n, m),
        other => return Err(format!("subpair_dims_at expects a BDI model, got {other}")),
    };
    if !model.in_g1(h) {
        return Err("h is not in g1".into());
    }
    if !model.is_semisimple(h) {
        return Err("h is not semisimple".into());
    }
    // Eigenvalue-pair multiplicities from the squarefree decomposition of the
    // characteristic polynomial: the nonzero roots of a multiplicity-e factor
    // come in +- pairs (h is conjugate to -h inside so), deg/2 of them, each
    // an eigenvalue pair of multiplicity e.
    let mut mults = Vec::new();
    for (e, factor) in squarefree_decomposition(&crate::poly::char_poly(h)) {
        let mut f = factor;
        if f[0].is_zero() {
            f.remove(0); // divide once by x; squarefree, so at most once
        }
        let deg = f.len() - 1;
        debug_assert_eq!(deg % 2, 0, "nonzero eigenvalues must pair up");
        for _ in 0..deg / 2 {
            mults.push(e);
        }
    }
    mults.sort();
    let k: usize = mults.iter().sum();
    let so = |j: usize| j.saturating_sub(1) * j / 2;
    let pred_g_h: usize = mults.iter().map(|ki| ki * ki).sum::<usize>() + so(n + m - 2 * k);
    let pred_g0_h: usize = mults.iter().map(|&ki| so(ki)).sum::<usize>() + so(n - k) + so(m - k);
    let pred_g1_h = pred_g_h - pred_g0_h;
    let (dim_g0_h, dim_g1_h) = model.centralizer_dims(h);
    let dim_g_h = dim_g0_h + dim_g1_h;
    let matches = dim_g_h == pred_g_h && dim_g0_h == pred_g0_h && dim_g1_h == pred_g1_h;
    Ok(SubpairReport {
        multiplicities: mults,
        dim_g_h,
        dim_g0_h,
        dim_g1_h,
        pred_g_h,
        pred_g0_h,
        pred_g1_h,
        matches,
    })
}
