//! The complete multigraph `K_n^m`: break divisors as a dominance condition, parking
//! functions as vector parking functions, residue tuples and the shift action.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::budget::Budget;
use crate::error::{invariant, precondition, Result};
use crate::multigraph::{write_tuple, Multigraph};

/// Parameters `(m, n)` of `K_n^m` together with the derived quantities used everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnmParams {
    m: i64,
    n: usize,
}

impl KnmParams {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(precondition(format!("need m, n >= 1, got m = {m}, n = {n}")));
        }
        Ok(KnmParams {
            m: m as i64,
            n: n as usize,
        })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = m·n`, the modulus for residue tuples.
    pub fn modulus(&self) -> i64 {
        self.m * self.n as i64
    }

    /// Genus of `K_n^m`: `m·n(n-1)/2 - n + 1`.
    pub fn genus(&self) -> i64 {
        let n = self.n as i64;
        self.m * n * (n - 1) / 2 - n + 1
    }

    /// `(m(n-1)-1, m(n-2)-1, ..., m-1, 0)`, the dominance bound for sorted break divisors.
    pub fn delta(&self) -> Vec<i64> {
        let n = self.n as i64;
        (1..=n)
            .map(|i| if i == n { 0 } else { self.m * (n - i) - 1 })
            .collect()
    }

    pub fn graph(&self) -> Multigraph {
        Multigraph::complete(self.n, self.m as u64)
    }

    /// `m^(n-1) n^(n-2)`, the size of both Break and Park (saturating).
    pub fn break_count(&self) -> u128 {
        let n = self.n as u128;
        let base = sat_pow(self.m as u128, self.n as u32 - 1);
        if self.n == 1 {
            return base;
        }
        base.saturating_mul(sat_pow(n, self.n as u32 - 2))
    }

    /// `N^(n-1)`, the size of the residue set (saturating).
    pub fn residue_count(&self) -> u128 {
        sat_pow(self.modulus() as u128, self.n as u32 - 1)
    }

    /// Break membership: nonnegative, degree `g`, and the decreasing rearrangement is
    /// dominated by [`delta`](Self::delta). Vectors of the wrong length are rejected.
    pub fn is_break(&self, d: &[i64]) -> bool {
        if d.len() != self.n || d.iter().any(|&x| x < 0) {
            return false;
        }
        if d.iter().sum::<i64>() != self.genus() {
            return false;
        }
        let mut sorted = d.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        dominated_by(&sorted, &self.delta())
    }

    /// Parking membership for a vector of length `n - 1`: the increasing rearrangement
    /// satisfies `ã_i <= m·i - 1`.
    pub fn is_parking(&self, a: &[i64]) -> bool {
        if a.len() + 1 != self.n || a.iter().any(|&x| x < 0) {
            return false;
        }
        let mut sorted = a.to_vec();
        sorted.sort_unstable();
        sorted
            .iter()
            .enumerate()
            .all(|(i, &x)| x <= self.m * (i as i64 + 1) - 1)
    }

    /// Validates a residue tuple.
    pub fn residue(&self, x: Vec<i64>) -> Result<ResidueTuple> {
        let modulus = self.modulus();
        if x.len() != self.n {
            return Err(precondition(format!(
                "residue tuple has length {}, expected {}",
                x.len(),
                self.n
            )));
        }
        if let Some(bad) = x.iter().find(|&&v| v < 0 || v >= modulus) {
            return Err(precondition(format!("entry {bad} outside 0..{modulus}")));
        }
        if (x.iter().sum::<i64>() - self.genus()).rem_euclid(modulus) != 0 {
            return Err(precondition(format!(
                "entries of {x:?} do not sum to g = {} mod {modulus}",
                self.genus()
            )));
        }
        Ok(ResidueTuple(x))
    }

    /// All break divisors in lexicographic order.
    pub fn enumerate_break(&self, budget: &Budget) -> Result<Vec<Vec<i64>>> {
        budget.check_items("Break", self.break_count())?;
        let cap = self.delta()[0];
        let mut out = Vec::new();
        let mut current = vec![0i64; self.n];
        bounded_compositions(&mut current, 0, self.genus(), cap, &mut |d| {
            if self.is_break(d) {
                out.push(d.to_vec());
            }
        });
        Ok(out)
    }

    /// All parking functions (length `n - 1`) in lexicographic order.
    pub fn enumerate_parking(&self, budget: &Budget) -> Result<Vec<Vec<i64>>> {
        budget.check_items("Park", self.break_count())?;
        let len = self.n - 1;
        let mut out = Vec::new();
        let mut current = vec![0i64; len];
        self.parking_rec(&mut current, 0, &mut out);
        Ok(out)
    }

    fn parking_rec(&self, current: &mut [i64], pos: usize, out: &mut Vec<Vec<i64>>) {
        if pos == current.len() {
            if self.is_parking(current) {
                out.push(current.to_vec());
            }
            return;
        }
        // the largest entry of a parking function is at most m(n-1) - 1
        let top = self.m * (self.n as i64 - 1) - 1;
        for v in 0..=top {
            current[pos] = v;
            // prune: entries chosen so far must already fit in a parking function
            if self.parking_prefix_feasible(&current[..=pos]) {
                self.parking_rec(current, pos + 1, out);
            }
        }
    }

    /// A partial vector extends to a parking function iff its `j`-th smallest entry is
    /// at most `m(j + n - 1 - len) - 1`, placing every unchosen entry at 0.
    fn parking_prefix_feasible(&self, prefix: &[i64]) -> bool {
        let missing = (self.n - 1 - prefix.len()) as i64;
        let mut sorted = prefix.to_vec();
        sorted.sort_unstable();
        sorted
            .iter()
            .enumerate()
            .all(|(j, &x)| x <= self.m * (j as i64 + 1 + missing) - 1)
    }

    /// All residue tuples in lexicographic order.
    pub fn enumerate_residues(&self, budget: &Budget) -> Result<Vec<ResidueTuple>> {
        budget.check_items("D", self.residue_count())?;
        let modulus = self.modulus();
        let genus = self.genus();
        let mut out = Vec::new();
        let mut current = vec![0i64; self.n];
        fn rec(
            current: &mut [i64],
            pos: usize,
            partial: i64,
            modulus: i64,
            genus: i64,
            out: &mut Vec<ResidueTuple>,
        ) {
            let last = current.len() - 1;
            if pos == last {
                current[last] = (genus - partial).rem_euclid(modulus);
                out.push(ResidueTuple(current.to_vec()));
                return;
            }
            for v in 0..modulus {
                current[pos] = v;
                rec(current, pos + 1, partial + v, modulus, genus, out);
            }
        }
        rec(&mut current, 0, 0, modulus, genus, &mut out);
        Ok(out)
    }

    /// `sh(x)`: add `m` to every coordinate modulo `N`.
    pub fn shift(&self, x: &ResidueTuple) -> ResidueTuple {
        self.shift_by(x, 1)
    }

    /// `sh^j(x)`.
    pub fn shift_by(&self, x: &ResidueTuple, j: usize) -> ResidueTuple {
        let modulus = self.modulus();
        let step = self.m * (j % self.n) as i64;
        ResidueTuple(x.0.iter().map(|&v| (v + step) % modulus).collect())
    }

    pub fn shift_class(&self, x: &ResidueTuple) -> ShiftClass {
        ShiftClass {
            members: (0..self.n).map(|j| self.shift_by(x, j)).collect(),
        }
    }

    /// Lexicographically smallest member of the shift class of `x`.
    pub fn class_key(&self, x: &ResidueTuple) -> ResidueTuple {
        (0..self.n)
            .map(|j| self.shift_by(x, j))
            .min()
            .expect("n >= 1")
    }

    /// The unique break divisor in the shift class of `x`.
    pub fn break_representative(&self, x: &ResidueTuple) -> Result<Vec<i64>> {
        let mut found = self.shift_class(x).members.into_iter().filter(|y| self.is_break(&y.0));
        match (found.next(), found.next()) {
            (Some(rep), None) => Ok(rep.0),
            (None, _) => Err(invariant(format!("shift class of {x} has no break member"))),
            (Some(_), Some(_)) => Err(invariant(format!(
                "shift class of {x} has several break members"
            ))),
        }
    }

    /// The unique parking function among the projections `π(sh^j(x))`, found by circular
    /// parking and the cycle lemma. Reads only the first `n - 1` coordinates of `x`.
    pub fn parking_representative(&self, x: &ResidueTuple) -> Result<Vec<i64>> {
        self.parking_representative_of_prefix(&x.0[..self.n - 1])
    }

    /// [`parking_representative`](Self::parking_representative) on an explicit projection.
    pub fn parking_representative_of_prefix(&self, prefs: &[i64]) -> Result<Vec<i64>> {
        if prefs.len() + 1 != self.n {
            return Err(precondition(format!(
                "projection has length {}, expected {}",
                prefs.len(),
                self.n - 1
            )));
        }
        let modulus = self.modulus();
        let occupied = circular_park(prefs, modulus)?;
        let mut blocks = vec![0i64; self.n];
        for &spot in &occupied {
            blocks[(spot / self.m) as usize] += 1;
        }
        let good: Vec<usize> = (0..self.n)
            .filter(|&j| {
                let mut sum = 0;
                (0..self.n - 1).all(|k| {
                    sum += blocks[(j + k) % self.n];
                    sum >= k as i64 + 1
                })
            })
            .collect();
        let &[j] = good.as_slice() else {
            return Err(invariant(format!(
                "cycle lemma found {} good rotations of block counts {blocks:?}",
                good.len()
            )));
        };
        let step = self.m * ((self.n - j) % self.n) as i64;
        let rep: Vec<i64> = prefs.iter().map(|&v| (v + step) % modulus).collect();
        if !self.is_parking(&rep) {
            return Err(invariant(format!("rotated projection {rep:?} is not parking")));
        }
        Ok(rep)
    }
}

/// Whether the weakly decreasing `sorted` has every prefix sum at most that of `bound`.
pub fn dominated_by(sorted: &[i64], bound: &[i64]) -> bool {
    let mut lhs = 0;
    let mut rhs = 0;
    for (a, b) in sorted.iter().zip(bound) {
        lhs += a;
        rhs += b;
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Cars `1..` park on `spots` spots arranged in a circle. Car `i` takes `prefs[i]` if
/// free, otherwise the next free spot clockwise. Returns the occupied spots in order.
pub fn circular_park(prefs: &[i64], spots: i64) -> Result<Vec<i64>> {
    if prefs.len() as i64 >= spots {
        return Err(precondition(format!(
            "{} cars need fewer than {spots} spots",
            prefs.len()
        )));
    }
    let mut taken = vec![false; spots as usize];
    for &p in prefs {
        if p < 0 || p >= spots {
            return Err(precondition(format!("preference {p} outside 0..{spots}")));
        }
        let mut spot = p as usize;
        while taken[spot] {
            spot = (spot + 1) % spots as usize;
        }
        taken[spot] = true;
    }
    Ok((0..spots).filter(|&s| taken[s as usize]).collect())
}

/// Weakly decreasing rearrangement of a tuple; the canonical key of its `S_n`-orbit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitKey(Vec<i64>);

impl OrbitKey {
    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Multiplicities of the distinct values, sorted decreasingly. This is the shape of
    /// the Young subgroup stabilising any tuple in the orbit.
    pub fn stabilizer_type(&self) -> Vec<u32> {
        let mut runs: Vec<u32> = Vec::new();
        let mut prev = None;
        for &v in &self.0 {
            if prev == Some(v) {
                *runs.last_mut().expect("nonempty") += 1;
            } else {
                runs.push(1);
                prev = Some(v);
            }
        }
        runs.sort_unstable_by(|a, b| b.cmp(a));
        runs
    }
}

impl fmt::Display for OrbitKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub fn sort_orbit_key(x: &[i64]) -> OrbitKey {
    let mut v = x.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    OrbitKey(v)
}

/// Distinct orbit keys of a set of tuples, sorted.
pub fn orbit_keys<'a>(tuples: impl IntoIterator<Item = &'a Vec<i64>>) -> Vec<OrbitKey> {
    let keys: BTreeSet<OrbitKey> = tuples.into_iter().map(|t| sort_orbit_key(t)).collect();
    keys.into_iter().collect()
}

/// An element of `D_{m,n}`: entries in `0..N` summing to `g` modulo `N`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueTuple(Vec<i64>);

impl ResidueTuple {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// `π(x)`: the tuple with its last coordinate dropped.
    pub fn projection(&self) -> &[i64] {
        &self.0[..self.0.len() - 1]
    }

    /// Permutes coordinates: position `i` of the result holds `x[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> ResidueTuple {
        ResidueTuple(perm.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Display for ResidueTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// The `n` tuples `sh^j(x)`, `0 <= j < n`, listed starting from `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftClass {
    members: Vec<ResidueTuple>,
}

impl ShiftClass {
    pub fn members(&self) -> &[ResidueTuple] {
        &self.members
    }

    pub fn key(&self) -> &ResidueTuple {
        self.members.iter().min().expect("classes are nonempty")
    }

    pub fn contains(&self, x: &ResidueTuple) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn bounded_compositions(
    current: &mut [i64],
    pos: usize,
    remaining: i64,
    cap: i64,
    visit: &mut dyn FnMut(&[i64]),
) {
    let slots = (current.len() - pos) as i64;
    if remaining > cap.max(0) * slots {
        return;
    }
    if pos + 1 == current.len() {
        current[pos] = remaining;
        visit(current);
        return;
    }
    for v in 0..=remaining.min(cap) {
        current[pos] = v;
        bounded_compositions(current, pos + 1, remaining - v, cap, visit);
    }
}

fn sat_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
