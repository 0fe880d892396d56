//! Truncated power series with exact rational coefficients, and the Euler-product
//! factorisation of the `(m+1)`-ary tree series that defines loop-quiver DT invariants.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::counting::{divisors, fuss_catalan, moebius};
use crate::error::{invariant, precondition, Result};

/// Power series `Σ c_k t^k` known up to and including `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSeries {
    coeffs: Vec<BigRational>,
}

impl ExactSeries {
    pub fn zero(order: usize) -> Self {
        ExactSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(precondition("a series needs at least the constant term"));
        }
        Ok(ExactSeries { coeffs })
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        ExactSeries { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ExactSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `1 / self`; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(precondition("reciprocal needs a nonzero constant term"));
        }
        let inv0 = c0.recip();
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        out[0] = inv0.clone();
        for k in 1..out.len() {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -(acc * &inv0);
        }
        Ok(ExactSeries { coeffs: out })
    }

    pub fn derivative(&self) -> Self {
        let order = self.order();
        let mut out = vec![BigRational::zero(); order + 1];
        for k in 1..=order {
            out[k - 1] = &self.coeffs[k] * BigRational::from_integer(BigInt::from(k));
        }
        ExactSeries { coeffs: out }
    }

    /// Antiderivative with zero constant term, same order.
    pub fn integral(&self) -> Self {
        let order = self.order();
        let mut out = vec![BigRational::zero(); order + 1];
        for k in 1..=order {
            out[k] = &self.coeffs[k - 1] / BigRational::from_integer(BigInt::from(k));
        }
        ExactSeries { coeffs: out }
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(precondition("log needs constant term 1"));
        }
        Ok((&self.derivative() * &self.reciprocal()?).integral())
    }

    /// Formal exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(precondition("exp needs constant term 0"));
        }
        // g' = f' g, so n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        let order = self.order();
        let mut out = vec![BigRational::zero(); order + 1];
        out[0] = BigRational::one();
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += BigRational::from_integer(BigInt::from(k)) * &self.coeffs[k] * &out[n - k];
            }
            out[n] = acc / BigRational::from_integer(BigInt::from(n));
        }
        Ok(ExactSeries { coeffs: out })
    }

    /// `(1 - c·t^step)^exponent` for any integer exponent, by the generalised binomial series.
    pub fn binomial_factor(order: usize, c: &BigRational, step: usize, exponent: &BigInt) -> Result<Self> {
        if step == 0 {
            return Err(precondition("binomial factor needs step >= 1"));
        }
        let mut out = Self::zero(order);
        let neg_c = -c.clone();
        // binom(e, j) (-c)^j, built incrementally
        let mut term = BigRational::one();
        let mut j = 0usize;
        while j * step <= order {
            out.coeffs[j * step] = term.clone();
            let factor = BigRational::from_integer(exponent - BigInt::from(j))
                / BigRational::from_integer(BigInt::from(j + 1));
            term = term * factor * &neg_c;
            j += 1;
        }
        Ok(out)
    }
}

impl<'a> Add for &'a ExactSeries {
    type Output = ExactSeries;

    fn add(self, rhs: &'a ExactSeries) -> ExactSeries {
        let order = self.order().min(rhs.order());
        ExactSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub for &'a ExactSeries {
    type Output = ExactSeries;

    fn sub(self, rhs: &'a ExactSeries) -> ExactSeries {
        let order = self.order().min(rhs.order());
        ExactSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Mul for &'a ExactSeries {
    type Output = ExactSeries;

    fn mul(self, rhs: &'a ExactSeries) -> ExactSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        ExactSeries { coeffs: out }
    }
}

impl Neg for &ExactSeries {
    type Output = ExactSeries;

    fn neg(self) -> ExactSeries {
        ExactSeries {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }
}

/// DT invariants `DT_n^{m+1}` for `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtTable {
    m: u64,
    values: Vec<BigInt>,
}

impl DtTable {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    /// `DT_n`, for `1 <= n <= n_max`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// The `(m+1)`-ary tree series `Σ binom((m+1)n, n)/(mn+1) t^n` up to `t^order`.
pub fn tree_series(m: u64, order: usize) -> Result<ExactSeries> {
    let coeffs = (0..=order as u64)
        .map(|n| fuss_catalan(m, n))
        .collect::<Result<Vec<_>>>()?;
    ExactSeries::from_integers(&coeffs)
}

fn sign_rational(exponent: u64) -> BigRational {
    if exponent % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn require_integer(x: &BigRational, what: &str) -> Result<BigInt> {
    if !x.is_integer() {
        return Err(invariant(format!("{what} = {x} is not an integer")));
    }
    Ok(x.to_integer())
}

fn exact_div(num: &BigInt, den: u64, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(invariant(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(q)
}

/// DT invariants by peeling Euler factors off the tree series one degree at a time.
///
/// The tree series factors as `Π_k (1 - ((-1)^m t)^k)^(-(-1)^{mk} k DT_k)`. Once the
/// factors below degree `k` are divided out, the residual series is
/// `1 + k·DT_k t^k + O(t^{k+1})`, which fixes `DT_k`; its factor is then divided out.
pub fn dt_via_euler_product(m: u64, n_max: usize, budget: &Budget) -> Result<DtTable> {
    if m == 0 {
        return Err(precondition("need m >= 1"));
    }
    budget.check_order("Euler product", n_max)?;
    let mut residual = tree_series(m, n_max)?;
    let mut values = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let leading = require_integer(residual.coeff(k), "residual coefficient")?;
        let dt = exact_div(&leading, k as u64, "Euler exponent")?;
        let sign = sign_rational(m * k as u64);
        // exponent of (1 - ((-1)^m t)^k) in the product is -(-1)^{mk} k DT_k
        let exponent = if sign.is_negative() {
            &dt * BigInt::from(k)
        } else {
            -(&dt * BigInt::from(k))
        };
        let factor = ExactSeries::binomial_factor(n_max, &sign, k, &-exponent)?;
        residual = &residual * &factor;
        values.push(dt);
    }
    for k in 1..=n_max {
        if !residual.coeff(k).is_zero() {
            return Err(invariant(format!("Euler product leaves t^{k} uncancelled")));
        }
    }
    Ok(DtTable { m, values })
}

/// DT invariants from the formal logarithm of the tree series and Möbius inversion.
pub fn dt_via_formal_log(m: u64, n_max: usize, budget: &Budget) -> Result<DtTable> {
    if m == 0 {
        return Err(precondition("need m >= 1"));
    }
    budget.check_order("formal logarithm", n_max)?;
    let log = tree_series(m, n_max)?.log()?;
    // a_N = N (-1)^{mN} [t^N] log F = Σ_{k | N} k E_k
    let a: Vec<BigInt> = (1..=n_max)
        .map(|n| {
            let scaled = log.coeff(n)
                * BigRational::from_integer(BigInt::from(n))
                * sign_rational(m * n as u64);
            require_integer(&scaled, "scaled log coefficient")
        })
        .collect::<Result<_>>()?;
    let mut values = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let k_e: BigInt = divisors(k as u64)
            .into_iter()
            .map(|d| BigInt::from(moebius(k as u64 / d)) * &a[d as usize - 1])
            .sum();
        let e = exact_div(&k_e, k as u64, "Möbius-inverted exponent")?;
        let signed = if (m * k as u64) % 2 == 0 { e } else { -e };
        values.push(exact_div(&signed, k as u64, "DT from log")?);
    }
    Ok(DtTable { m, values })
}
