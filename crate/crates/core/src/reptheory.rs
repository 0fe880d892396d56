//! Symmetric-group characters of the permutation modules carried by break divisors,
//! parking functions and residue tuples.
//!
//! Characters are class functions keyed by cycle type. Irreducible characters come
//! from the Murnaghan–Nakayama rule; Schur expansions are inner products against them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{invariant, precondition, Error, Result};
use crate::knm::{KnmParams, OrbitKey};

/// Integer partition with positive, weakly decreasing parts. The empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(precondition(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(precondition(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// gcd of the parts; 0 for the empty partition.
    pub fn parts_gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &p| g.gcd(&p))
    }

    /// `z_λ = Π i^{m_i} m_i!`, the centraliser order of a permutation of this cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        counts.into_iter().fold(BigInt::one(), |acc, (part, mult)| {
            acc * BigInt::from(part).pow(mult) * factorial(mult)
        })
    }

    /// The cycle type with an extra fixed point, i.e. `λ ∪ (1)`.
    pub fn with_fixed_point(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.push(1);
        Partition(parts)
    }

    /// One permutation of this cycle type on `0..size`, as an image table. Cycles occupy
    /// consecutive positions.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.size() as usize);
        let mut start = 0usize;
        for &len in &self.0 {
            let len = len as usize;
            for i in 0..len {
                perm.push(start + (i + 1) % len);
            }
            start += len;
        }
        perm
    }

    /// Compact label: `21` for `(2,1)`, `10,2` once a part exceeds 9, `0` when empty.
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return String::from("0");
        }
        let sep = if self.0.iter().any(|&p| p > 9) { "," } else { "" };
        let mut out = String::new();
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            out.push_str(&format!("{p}"));
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Size of the conjugacy class of cycle type `lambda`: `n! / z_λ`.
pub fn class_size(lambda: &Partition) -> BigInt {
    factorial(lambda.size()) / lambda.centralizer_order()
}

/// Whether `tuple` is fixed by the permutation with image table `perm`.
pub fn is_fixed_by(perm: &[usize], tuple: &[i64]) -> bool {
    perm.iter().enumerate().all(|(i, &j)| tuple[i] == tuple[j])
}

/// An integer-valued function on the conjugacy classes of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    /// Builds the class function by evaluating `f` on every cycle type of `S_n`.
    pub fn from_fn(n: u32, mut f: impl FnMut(&Partition) -> Result<BigInt>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for lambda in partitions_of(n) {
            let v = f(&lambda)?;
            values.insert(lambda, v);
        }
        Ok(ClassFunction { n, values })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Value on the class of cycle type `lambda`, or `None` if `lambda` is not a partition of `n`.
    pub fn get(&self, lambda: &Partition) -> Option<&BigInt> {
        self.values.get(lambda)
    }

    /// `(cycle type, value)` pairs in reverse lexicographic order of cycle type.
    pub fn entries(&self) -> Vec<(Partition, BigInt)> {
        partitions_of(self.n)
            .into_iter()
            .map(|p| {
                let v = self.values[&p].clone();
                (p, v)
            })
            .collect()
    }

    /// Value at the identity, i.e. the dimension of the module.
    pub fn dimension(&self) -> &BigInt {
        &self.values[&Partition(vec![1; self.n as usize])]
    }

    pub fn trivial(n: u32) -> Self {
        ClassFunction::from_fn(n, |_| Ok(BigInt::one())).expect("infallible")
    }
}

/// `(1/n!) Σ_μ |C_μ| χ(μ) ψ(μ)`, required to be an integer.
pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Result<BigInt> {
    if chi.n != psi.n {
        return Err(precondition(format!(
            "class functions on S_{} and S_{} cannot be paired",
            chi.n, psi.n
        )));
    }
    let total: BigInt = chi
        .values
        .iter()
        .map(|(mu, v)| class_size(mu) * v * &psi.values[mu])
        .sum();
    let (q, r) = total.div_rem(&factorial(chi.n));
    if !r.is_zero() {
        return Err(Error::NotACharacter(format!(
            "inner product {total}/{}! is not an integer",
            chi.n
        )));
    }
    Ok(q)
}

/// Multiplicity of the trivial representation.
pub fn trivial_multiplicity(chi: &ClassFunction) -> Result<BigInt> {
    inner_product(chi, &ClassFunction::trivial(chi.n))
}

/// Restriction from `S_n` to `S_{n-1}`: `χ'(μ) = χ(μ ∪ (1))`.
pub fn restrict_character(chi: &ClassFunction) -> Result<ClassFunction> {
    if chi.n < 2 {
        return Err(precondition("restriction needs n >= 2"));
    }
    ClassFunction::from_fn(chi.n - 1, |mu| Ok(chi.values[&mu.with_fixed_point()].clone()))
}

/// Basis of a symmetric-function expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymFnBasis {
    /// Complete homogeneous `h_λ`.
    H,
    /// Schur `s_λ`.
    S,
}

impl SymFnBasis {
    fn symbol(self) -> char {
        match self {
            SymFnBasis::H => 'h',
            SymFnBasis::S => 's',
        }
    }
}

/// A degree-`n` symmetric function with integer coefficients in the `h` or `s` basis.
/// Only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFnExpansion {
    basis: SymFnBasis,
    n: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymFnExpansion {
    pub fn new(basis: SymFnBasis, n: u32, coeffs: impl IntoIterator<Item = (Partition, BigInt)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, c) in coeffs {
            if p.size() != n {
                return Err(precondition(format!("{p} is not a partition of {n}")));
            }
            if !c.is_zero() {
                *map.entry(p).or_insert_with(BigInt::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(SymFnExpansion {
            basis,
            n,
            coeffs: map,
        })
    }

    pub fn basis(&self) -> SymFnBasis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in reverse lexicographic order of the index.
    pub fn terms(&self) -> Vec<(Partition, BigInt)> {
        let mut terms: Vec<_> = self.coeffs.iter().map(|(p, c)| (p.clone(), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        terms
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for SymFnExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{} {}{}", c.abs(), self.basis.symbol(), p.label())?;
        }
        Ok(())
    }
}

/// Frobenius characteristic of a permutation module in the `h` basis: one `h_μ` per orbit,
/// where `μ` is the multiset of value multiplicities of the orbit's sorted representative.
pub fn perm_module_h_expansion(n: u32, orbits: &[OrbitKey]) -> Result<SymFnExpansion> {
    let mut terms = Vec::with_capacity(orbits.len());
    for key in orbits {
        if key.parts().len() != n as usize {
            return Err(precondition(format!("orbit key {key} does not have length {n}")));
        }
        terms.push((Partition(key.stabilizer_type()), BigInt::one()));
    }
    SymFnExpansion::new(SymFnBasis::H, n, terms)
}

/// Character of `h_μ` (the permutation module on cosets of the Young subgroup `S_μ`) at
/// cycle type `ν`: the number of ways to sort the cycles of `ν` into blocks of sizes `μ`.
pub fn h_character_value(mu: &Partition, nu: &Partition) -> BigInt {
    fn rec(cycles: &[u32], capacity: &mut [u32]) -> BigInt {
        let Some((&first, rest)) = cycles.split_first() else {
            return if capacity.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let mut total = BigInt::zero();
        for i in 0..capacity.len() {
            if capacity[i] >= first {
                capacity[i] -= first;
                total += rec(rest, capacity);
                capacity[i] += first;
            }
        }
        total
    }
    if mu.size() != nu.size() {
        return BigInt::zero();
    }
    let mut capacity = mu.0.clone();
    rec(&nu.0, &mut capacity)
}

/// Character of a symmetric function given in the `h` basis.
pub fn h_expansion_character(expansion: &SymFnExpansion) -> Result<ClassFunction> {
    if expansion.basis != SymFnBasis::H {
        return Err(precondition("expected an h-basis expansion"));
    }
    ClassFunction::from_fn(expansion.n, |nu| {
        Ok(expansion
            .coeffs
            .iter()
            .map(|(mu, c)| c * h_character_value(mu, nu))
            .sum())
    })
}

/// Memoised Murnaghan–Nakayama evaluator.
#[derive(Debug, Default, Clone)]
pub struct MnCache {
    memo: BTreeMap<(Vec<u32>, Vec<u32>), i64>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ(μ)` for partitions of the same size.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(precondition(format!(
                "{lambda} and {mu} are partitions of different sizes"
            )));
        }
        Ok(self.eval(&lambda.0, &mu.0))
    }

    fn eval(&mut self, lambda: &[u32], mu: &[u32]) -> i64 {
        let Some((&k, rest)) = mu.split_first() else {
            return 1;
        };
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let len = lambda.len();
        // beta numbers λ_i + (len - 1 - i), strictly decreasing
        let beta: Vec<u32> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (len - 1 - i) as u32)
            .collect();
        let occupied: BTreeSet<u32> = beta.iter().copied().collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < k || occupied.contains(&(b - k)) {
                continue;
            }
            let target = b - k;
            let crossed = occupied.range(target + 1..b).count();
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let smaller: Vec<u32> = next
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (len - 1 - i) as u32)
                .filter(|&p| p > 0)
                .collect();
            total += sign * self.eval(&smaller, rest);
        }
        self.memo.insert(key, total);
        total
    }

    /// The irreducible character `χ^λ` as a class function.
    pub fn irreducible(&mut self, lambda: &Partition) -> ClassFunction {
        ClassFunction::from_fn(lambda.size(), |mu| Ok(BigInt::from(self.value(lambda, mu)?)))
            .expect("sizes agree")
    }
}

/// `χ^λ(μ)` with a fresh memo table.
pub fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> Result<i64> {
    MnCache::new().value(lambda, mu)
}

/// Decomposition of a character into irreducibles, i.e. its Frobenius image in the
/// Schur basis. Fails if some multiplicity is not an integer.
pub fn schur_expansion(chi: &ClassFunction) -> Result<SymFnExpansion> {
    let mut cache = MnCache::new();
    let mut terms = Vec::new();
    for lambda in partitions_of(chi.n) {
        let irreducible = cache.irreducible(&lambda);
        terms.push((lambda, inner_product(chi, &irreducible)?));
    }
    SymFnExpansion::new(SymFnBasis::S, chi.n, terms)
}

/// Fixed-point character of `S_n` acting on a set of length-`n` tuples by permuting coordinates.
pub fn permutation_character(n: u32, tuples: &[Vec<i64>]) -> Result<ClassFunction> {
    if let Some(bad) = tuples.iter().find(|t| t.len() != n as usize) {
        return Err(precondition(format!("tuple {bad:?} does not have length {n}")));
    }
    ClassFunction::from_fn(n, |lambda| {
        let perm = lambda.permutation();
        Ok(BigInt::from(tuples.iter().filter(|t| is_fixed_by(&perm, t)).count()))
    })
}

/// `χ_{m,n}(λ)` by the closed formula: `m^{ℓ-1} n^{ℓ-2}` when the parts of `λ` are coprime,
/// twice that when their gcd is 2, `m` is odd and `n ≡ 2 (mod 4)`, and 0 otherwise.
pub fn character_break_closed(m: u64, n: u64, lambda: &Partition) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(precondition("need m, n >= 1"));
    }
    if lambda.size() as u64 != n {
        return Err(precondition(format!("{lambda} is not a partition of {n}")));
    }
    let prefactor = match lambda.parts_gcd() {
        1 => 1,
        2 if m % 2 == 1 && n % 4 == 2 => 2,
        _ => return Ok(BigInt::zero()),
    };
    let len = lambda.len() as i32;
    // n^{ℓ-2} is 1/n when ℓ = 1
    let value = BigRational::from_integer(BigInt::from(prefactor))
        * BigRational::from_integer(BigInt::from(m)).pow(len - 1)
        * BigRational::from_integer(BigInt::from(n)).pow(len - 2);
    if !value.is_integer() {
        return Err(invariant(format!(
            "character formula gives {value} at ({m}, {n}, {lambda})"
        )));
    }
    Ok(value.to_integer())
}

/// `χ_{m,n}` from the closed formula on every class.
pub fn break_character_closed(params: &KnmParams) -> Result<ClassFunction> {
    let (m, n) = (params.m() as u64, params.n() as u64);
    ClassFunction::from_fn(n as u32, |lambda| character_break_closed(m, n, lambda))
}

/// Character of `S_n` on `Break_{m,n}` by counting fixed points.
pub fn break_character_bruteforce(params: &KnmParams, budget: &Budget) -> Result<ClassFunction> {
    let set = params.enumerate_break(budget)?;
    permutation_character(params.n() as u32, &set)
}

/// Number of break divisors fixed by a permutation of cycle type `lambda`.
pub fn character_break_bruteforce(m: u32, n: u32, lambda: &Partition, budget: &Budget) -> Result<BigInt> {
    let params = KnmParams::new(m, n)?;
    if lambda.size() != n {
        return Err(precondition(format!("{lambda} is not a partition of {n}")));
    }
    let perm = lambda.permutation();
    let set = params.enumerate_break(budget)?;
    Ok(BigInt::from(set.iter().filter(|t| is_fixed_by(&perm, t)).count()))
}

/// Character of `S_{n-1}` on `Park_{m,n}` by counting fixed points.
pub fn parking_character_bruteforce(params: &KnmParams, budget: &Budget) -> Result<ClassFunction> {
    let set = params.enumerate_parking(budget)?;
    permutation_character(params.n() as u32 - 1, &set)
}

/// Number of parking functions fixed by a permutation of cycle type `mu ⊢ n-1`.
pub fn character_parking_bruteforce(m: u32, n: u32, mu: &Partition, budget: &Budget) -> Result<BigInt> {
    let params = KnmParams::new(m, n)?;
    if mu.size() + 1 != n {
        return Err(precondition(format!("{mu} is not a partition of {}", n - 1)));
    }
    let perm = mu.permutation();
    let set = params.enumerate_parking(budget)?;
    Ok(BigInt::from(set.iter().filter(|t| is_fixed_by(&perm, t)).count()))
}

/// Character of `S_n` on `D_{m,n}` by counting fixed tuples.
pub fn residue_character_bruteforce(params: &KnmParams, budget: &Budget) -> Result<ClassFunction> {
    let set: Vec<Vec<i64>> = params
        .enumerate_residues(budget)?
        .into_iter()
        .map(|x| x.values().to_vec())
        .collect();
    permutation_character(params.n() as u32, &set)
}

/// Character of `S_n` on the shift classes of `D_{m,n}`: the number of classes a
/// permutation of each cycle type maps to themselves.
pub fn shift_class_character_bruteforce(params: &KnmParams, budget: &Budget) -> Result<ClassFunction> {
    let keys: BTreeSet<_> = params
        .enumerate_residues(budget)?
        .iter()
        .map(|x| params.class_key(x))
        .collect();
    ClassFunction::from_fn(params.n() as u32, |lambda| {
        let perm = lambda.permutation();
        let fixed = keys
            .iter()
            .filter(|key| &params.class_key(&key.permuted(&perm)) == *key)
            .count();
        Ok(BigInt::from(fixed))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knm::{orbit_keys, sort_orbit_key};
    use alloc::string::ToString;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn partition_generation() {
        assert_eq!(partitions_of(0), vec![part(&[])]);
        assert_eq!(partitions_of(3), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(partitions_of(9).len(), 30);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&part(&[1, 1, 1, 1])), big(1));
        assert_eq!(class_size(&part(&[5])), big(24));
        assert_eq!(class_size(&part(&[2, 1])), big(3));
        for n in 0..8 {
            let total: BigInt = partitions_of(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn permutations_have_requested_type() {
        let perm = part(&[3, 2, 1]).permutation();
        assert_eq!(perm, vec![1, 2, 0, 4, 3, 5]);
    }

    #[test]
    fn closed_character_examples() {
        assert_eq!(character_break_closed(2, 3, &part(&[1, 1, 1])).unwrap(), big(12));
        assert_eq!(character_break_closed(2, 3, &part(&[3])).unwrap(), big(0));
        assert_eq!(character_break_closed(1, 6, &part(&[2, 2, 2])).unwrap(), big(12));
        assert_eq!(character_break_closed(3, 1, &part(&[1])).unwrap(), big(1));
        // ℓ = 1 with d = 2: n = 2, m odd gives 2·m^0·2^{-1} = 1
        assert_eq!(character_break_closed(3, 2, &part(&[2])).unwrap(), big(1));
        assert_eq!(character_break_closed(2, 2, &part(&[2])).unwrap(), big(0));
    }

    #[test]
    fn bruteforce_character_examples() {
        let budget = Budget::default();
        assert_eq!(character_break_bruteforce(2, 3, &part(&[1, 1, 1]), &budget).unwrap(), big(12));
        assert_eq!(character_break_bruteforce(2, 3, &part(&[2, 1]), &budget).unwrap(), big(2));
        assert_eq!(character_break_bruteforce(2, 3, &part(&[3]), &budget).unwrap(), big(0));
        assert_eq!(character_break_bruteforce(1, 6, &part(&[2, 2, 2]), &budget).unwrap(), big(12));

        assert_eq!(character_parking_bruteforce(2, 3, &part(&[1, 1]), &budget).unwrap(), big(12));
        // (a, a) is parking for a in {0, 1}
        assert_eq!(character_parking_bruteforce(2, 3, &part(&[2]), &budget).unwrap(), big(2));
        for m in 1..5 {
            assert_eq!(
                character_parking_bruteforce(m, 2, &part(&[1]), &budget).unwrap(),
                big(m as i64)
            );
        }
    }

    #[test]
    fn murnaghan_nakayama_examples() {
        for n in 1..7 {
            for mu in partitions_of(n) {
                assert_eq!(murnaghan_nakayama(&part(&[n]), &mu).unwrap(), 1);
                let odd = mu.parts().iter().filter(|&&p| p % 2 == 0).count() % 2;
                let sign = if odd == 0 { 1 } else { -1 };
                assert_eq!(murnaghan_nakayama(&part(&vec![1; n as usize]), &mu).unwrap(), sign);
            }
        }
        assert_eq!(murnaghan_nakayama(&part(&[2, 1]), &part(&[3])).unwrap(), -1);
        assert_eq!(murnaghan_nakayama(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(murnaghan_nakayama(&part(&[3, 2]), &part(&[1; 5])).unwrap(), 5);
        assert!(murnaghan_nakayama(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn column_orthogonality() {
        let mut cache = MnCache::new();
        for n in 1..=7 {
            let parts = partitions_of(n);
            for mu in &parts {
                for nu in &parts {
                    let sum: i64 = parts
                        .iter()
                        .map(|l| cache.value(l, mu).unwrap() * cache.value(l, nu).unwrap())
                        .sum();
                    let expected = if mu == nu { mu.centralizer_order() } else { BigInt::zero() };
                    assert_eq!(BigInt::from(sum), expected, "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn frobenius_of_break_2_3() {
        let params = KnmParams::new(2, 3).unwrap();
        let set = params.enumerate_break(&Budget::default()).unwrap();
        let h = perm_module_h_expansion(3, &orbit_keys(&set)).unwrap();
        assert_eq!(h.coeff(&part(&[1, 1, 1])), big(1));
        assert_eq!(h.coeff(&part(&[2, 1])), big(2));
        assert_eq!(h.to_string(), "2 h21 + 1 h111");
        let chi = h_expansion_character(&h).unwrap();
        assert_eq!(chi, permutation_character(3, &set).unwrap());
        let s = schur_expansion(&chi).unwrap();
        assert_eq!(s.to_string(), "3 s3 + 4 s21 + 1 s111");
    }

    #[test]
    fn frobenius_of_park_2_3() {
        let params = KnmParams::new(2, 3).unwrap();
        let set = params.enumerate_parking(&Budget::default()).unwrap();
        let h = perm_module_h_expansion(2, &orbit_keys(&set)).unwrap();
        assert_eq!(h.to_string(), "2 h2 + 5 h11");
        let s = schur_expansion(&h_expansion_character(&h).unwrap()).unwrap();
        assert_eq!(s.to_string(), "7 s2 + 5 s11");
    }

    #[test]
    fn single_orbit_and_irreducibles() {
        let h = perm_module_h_expansion(4, &[sort_orbit_key(&[5, 5, 5, 5])]).unwrap();
        assert_eq!(h.to_string(), "1 h4");
        let mut cache = MnCache::new();
        let chi = cache.irreducible(&part(&[4]));
        assert_eq!(schur_expansion(&chi).unwrap().to_string(), "1 s4");
        let chi = cache.irreducible(&part(&[2, 2]));
        assert_eq!(schur_expansion(&chi).unwrap().to_string(), "1 s22");
    }

    #[test]
    fn non_character_is_rejected() {
        let chi = ClassFunction::from_fn(3, |l| Ok(if l.len() == 3 { big(1) } else { big(0) })).unwrap();
        assert!(matches!(schur_expansion(&chi), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn restriction_examples() {
        let budget = Budget::default();
        let params = KnmParams::new(2, 3).unwrap();
        let chi = break_character_closed(&params).unwrap();
        let res = restrict_character(&chi).unwrap();
        assert_eq!(res, parking_character_bruteforce(&params, &budget).unwrap());
        assert_eq!(restrict_character(&ClassFunction::trivial(5)).unwrap(), ClassFunction::trivial(4));
        let params = KnmParams::new(2, 4).unwrap();
        let res = restrict_character(&break_character_closed(&params).unwrap()).unwrap();
        assert_eq!(res, parking_character_bruteforce(&params, &budget).unwrap());
        assert!(restrict_character(&ClassFunction::trivial(1)).is_err());
    }

    #[test]
    fn trivial_multiplicities() {
        let chi = break_character_closed(&KnmParams::new(2, 4).unwrap()).unwrap();
        assert_eq!(trivial_multiplicity(&chi).unwrap(), big(10));
        let chi = break_character_closed(&KnmParams::new(2, 3).unwrap()).unwrap();
        assert_eq!(trivial_multiplicity(&chi).unwrap(), big(3));
        assert_eq!(trivial_multiplicity(&ClassFunction::trivial(6)).unwrap(), big(1));
    }

    #[test]
    fn labels() {
        assert_eq!(part(&[12, 3]).label(), "12,3");
        assert_eq!(part(&[]).label(), "0");
        let e = SymFnExpansion::new(SymFnBasis::S, 2, [(part(&[2]), big(-1)), (part(&[1, 1]), big(2))]).unwrap();
        assert_eq!(e.to_string(), "-1 s2 + 2 s11");
        assert!(!e.is_nonnegative());
    }
}
