//! Univariate polynomial helpers over the rationals.
//!
//! Coefficient vectors are ascending: p[0] + p[1]·x + ... Only what the
//! semisimplicity certificates and eigenvalue-multiplicity extraction need.

use crate::exactlin::{Rat, RatMat, RatVec, Span};
use num_traits::{One, Zero};

pub fn trim(mut p: RatVec) -> RatVec {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[Rat]) -> RatVec {
    if p.len() <= 1 {
        return vec![];
    }
    (1..p.len()).map(|i| &p[i] * Rat::from_integer(i.into())).collect()
}

pub fn monic(p: &[Rat]) -> RatVec {
    let p = trim(p.to_vec());
    match p.last() {
        None => p,
        Some(lead) => {
            let inv = lead.recip();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn mul(a: &[Rat], b: &[Rat]) -> RatVec {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let t = &out[i + j] + x * y;
                out[i + j] = t;
            }
        }
    }
    trim(out)
}

/// Division with remainder; divisor must be nonzero.
pub fn divrem(a: &[Rat], b: &[Rat]) -> (RatVec, RatVec) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by zero polynomial");
    let mut rem = trim(a.to_vec());
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &b[db];
        quot[dr - db] = c.clone();
        for i in 0..=db {
            let t = &rem[dr - db + i] - &c * &b[i];
            rem[dr - db + i] = t;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn gcd(a: &[Rat], b: &[Rat]) -> RatVec {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn is_squarefree(p: &[Rat]) -> bool {
    let g = gcd(p, &derivative(p));
    degree(&g) == Some(0)
}

/// Evaluate p at a rational point.
pub fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = &acc * x + c;
    }
    acc
}

/// Characteristic polynomial of a square matrix (Faddeev–LeVerrier),
/// returned monic ascending: det(tI − M).
pub fn char_poly(m: &RatMat) -> RatVec {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut aux = RatMat::identity(n);
    for k in 1..=n {
        let prod = m * &aux;
        let c = -(prod.trace() / Rat::from_integer(k.into()));
        coeffs[n - k] = c.clone();
        aux = prod;
        for i in 0..n {
            let t = &aux[(i, i)] + &c;
            aux[(i, i)] = t;
        }
    }
    coeffs
}

/// Minimal polynomial, via the first linear dependence among matrix powers.
pub fn min_poly(m: &RatMat) -> RatVec {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut span = Span::new(n * n);
    let mut powers: Vec<RatMat> = vec![RatMat::identity(n)];
    span.insert(powers[0].flatten());
    loop {
        let next = m * powers.last().unwrap();
        if !span.insert(next.flatten()) {
            // next = sum of lower powers; solve for the combination.
            let k = powers.len();
            let sys = RatMat::from_fn(n * n, k, |i, j| powers[j].flatten()[i].clone());
            let sol = sys.solve(&next.flatten()).expect("dependence must be solvable");
            let mut p = vec![Rat::zero(); k + 1];
            p[k] = Rat::one();
            for (j, c) in sol.into_iter().enumerate() {
                p[j] = -c;
            }
            return p;
        }
        powers.push(next);
    }
}

/// Squarefree (Yun) decomposition of a monic polynomial:
/// p = ∏ parts[i].1 ^ parts[i].0 with each factor squarefree and coprime.
/// Multiplicity-1 factor comes first; zero roots are included like any other.
pub fn squarefree_decomposition(p: &[Rat]) -> Vec<(usize, RatVec)> {
    let p = monic(p);
    assert!(degree(&p).is_some(), "zero polynomial");
    let dp = derivative(&p);
    let a = gcd(&p, &dp);
    let (mut b, _) = divrem(&p, &a);
    let (mut c, _) = divrem(&dp, &a);
    let mut parts = Vec::new();
    let mut mult = 1;
    loop {
        // d = c − b'
        let bd = derivative(&b);
        let mut d: RatVec = Vec::new();
        for i in 0..c.len().max(bd.len()) {
            let x = c.get(i).cloned().unwrap_or_else(Rat::zero);
            let y = bd.get(i).cloned().unwrap_or_else(Rat::zero);
            d.push(x - y);
        }
        let d = trim(d);
        let g = if d.is_empty() { b.clone() } else { gcd(&b, &d) };
        if degree(&g) != Some(0) {
            parts.push((mult, monic(&g)));
        }
        let (b_next, _) = divrem(&b, &g);
        b = monic(&b_next);
        if degree(&b) == Some(0) {
            break;
        }
        let (c_next, _) = divrem(&d, &g);
        c = c_next;
        mult += 1;
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn ip(coeffs: &[i64]) -> RatVec {
        coeffs.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn gcd_of_square() {
        // p = (x-1)^2 (x+2), p' shares (x-1)
        let p = mul(&mul(&ip(&[-1, 1]), &ip(&[-1, 1])), &ip(&[2, 1]));
        let g = gcd(&p, &derivative(&p));
        assert_eq!(g, ip(&[-1, 1]));
        assert!(!is_squarefree(&p));
        assert!(is_squarefree(&ip(&[-2, -1, 1])));
    }

    #[test]
    fn char_poly_diag() {
        let m = RatMat::from_int_rows(&[&[2, 0], &[0, 3]]);
        // (t-2)(t-3) = 6 - 5t + t^2
        assert_eq!(char_poly(&m), ip(&[6, -5, 1]));
    }

    #[test]
    fn min_poly_idempotent() {
        let m = RatMat::from_int_rows(&[&[1, 0], &[0, 0]]);
        // x(x-1) = -x + x^2... ascending: [0, -1, 1]
        assert_eq!(min_poly(&m), ip(&[0, -1, 1]));
    }

    #[test]
    fn yun_decomposition() {
        // x^2 (x-1)^3 (x+1)
        let x = ip(&[0, 1]);
        let p = mul(&mul(&mul(&x, &x), &mul(&mul(&ip(&[-1, 1]), &ip(&[-1, 1])), &ip(&[-1, 1]))), &ip(&[1, 1]));
        let parts = squarefree_decomposition(&p);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (1, ip(&[1, 1])));
        assert_eq!(parts[1], (2, ip(&[0, 1])));
        assert_eq!(parts[2], (3, ip(&[-1, 1])));
    }
}
