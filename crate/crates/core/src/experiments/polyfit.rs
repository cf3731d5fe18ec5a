use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::rational_string;
use crate::error::{Error, Result};

/// One monomial `coefficient * prod m_i^exponents[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub exponents: Vec<usize>,
    #[serde(serialize_with = "rational_string")]
    pub coefficient: BigRational,
}

/// A polynomial in `m_1, ..., m_r` interpolated exactly on a simplex of
/// lattice points and checked on the remaining points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyFit {
    pub arity: usize,
    pub total_degree: usize,
    pub terms: Vec<Term>,
    /// Corner of the interpolation simplex.
    pub anchor: Vec<i64>,
    pub fit_points: Vec<Vec<i64>>,
    pub held_out: Vec<Vec<i64>>,
    /// Observed minus predicted on `held_out`.
    #[serde(serialize_with = "super::rational_strings")]
    pub residuals: Vec<BigRational>,
}

impl PolyFit {
    pub fn evaluate(&self, m: &[i64]) -> BigRational {
        self.terms
            .iter()
            .map(|t| {
                t.exponents
                    .iter()
                    .zip(m)
                    .fold(t.coefficient.clone(), |acc, (&e, &x)| {
                        acc * BigRational::from_integer(x.into()).pow(e as i32)
                    })
            })
            .sum()
    }

    /// Whether every held-out point is predicted exactly.
    pub fn exact(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }
}

/// Exponent vectors of total degree at most `degree` in `arity` variables,
/// by degree and then lexicographically.
pub fn monomials(arity: usize, degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for d in 0..=degree {
        let mut current = Vec::with_capacity(arity);
        compositions(arity, d, &mut current, &mut out);
    }
    out
}

fn compositions(arity: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() + 1 == arity {
        current.push(left);
        out.push(current.clone());
        current.pop();
        return;
    }
    if arity == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for e in (0..=left).rev() {
        current.push(e);
        compositions(arity, left - e, current, out);
        current.pop();
    }
}

/// Finds the lowest total degree `<= max_degree` (and, for that degree, the
/// smallest anchor shift) whose interpolant predicts every held-out point
/// exactly. At least `min_held_out` points must remain for validation. When
/// nothing validates, the last attempted fit is returned with its nonzero
/// residuals.
pub fn fit_polynomial(
    data: &BTreeMap<Vec<i64>, BigRational>,
    max_degree: usize,
    min_held_out: usize,
) -> Result<PolyFit> {
    let arity = data
        .keys()
        .next()
        .map(Vec::len)
        .ok_or_else(|| Error::GridTooSmall("no data points".into()))?;
    let lowest: Vec<i64> = (0..arity)
        .map(|i| data.keys().map(|p| p[i]).min().expect("nonempty"))
        .collect();
    let mut last = None;
    for degree in 0..=max_degree {
        let exps = monomials(arity, degree);
        for shift in 0.. {
            let anchor: Vec<i64> = lowest.iter().map(|x| x + shift).collect();
            let lattice: Vec<Vec<i64>> = exps
                .iter()
                .map(|e| anchor.iter().zip(e).map(|(a, &x)| a + x as i64).collect())
                .collect();
            if !lattice.iter().all(|p| data.contains_key(p)) {
                break;
            }
            // A region too thin to hold the next degree's simplex cannot tell
            // degree `degree` from `degree + 1` (y^2 is linear on two rows).
            if degree < max_degree
                && !monomials(arity, degree + 1).iter().all(|e| {
                    let p: Vec<i64> = anchor.iter().zip(e).map(|(a, &x)| a + x as i64).collect();
                    data.contains_key(&p)
                })
            {
                break;
            }
            let held_out: Vec<Vec<i64>> = data
                .keys()
                .filter(|p| p.iter().zip(&anchor).all(|(x, a)| x >= a) && !lattice.contains(p))
                .cloned()
                .collect();
            if held_out.len() < min_held_out {
                break;
            }
            let fit = interpolate(data, &exps, anchor, lattice, held_out);
            if fit.exact() {
                return Ok(fit);
            }
            last = Some(fit);
        }
    }
    last.ok_or_else(|| {
        Error::GridTooSmall(format!(
            "no simplex of degree <= {max_degree} fits with {min_held_out} points held out"
        ))
    })
}

fn interpolate(
    data: &BTreeMap<Vec<i64>, BigRational>,
    exps: &[Vec<usize>],
    anchor: Vec<i64>,
    lattice: Vec<Vec<i64>>,
    held_out: Vec<Vec<i64>>,
) -> PolyFit {
    let power = |p: &[i64], e: &[usize]| {
        p.iter().zip(e).fold(BigRational::one(), |acc, (&x, &k)| {
            acc * BigRational::from_integer(x.into()).pow(k as i32)
        })
    };
    let a: Vec<Vec<BigRational>> = lattice
        .iter()
        .map(|p| exps.iter().map(|e| power(p, e)).collect())
        .collect();
    let b: Vec<BigRational> = lattice.iter().map(|p| data[p].clone()).collect();
    let coeffs = solve(a, b).expect("interpolation on a simplex lattice is unisolvent");
    let terms: Vec<Term> = exps
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| Term {
            exponents: e.clone(),
            coefficient: c,
        })
        .collect();
    let total_degree = terms
        .iter()
        .map(|t| t.exponents.iter().sum::<usize>())
        .max()
        .unwrap_or(0);
    let mut fit = PolyFit {
        arity: anchor.len(),
        total_degree,
        terms,
        anchor,
        fit_points: lattice,
        held_out,
        residuals: Vec::new(),
    };
    fit.residuals = fit.held_out.iter().map(|p| &data[p] - fit.evaluate(p)).collect();
    fit
}

/// Gauss-Jordan elimination for a square system; `None` when singular.
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].recip();
        for x in &mut a[col] {
            *x *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Some(b)
}
