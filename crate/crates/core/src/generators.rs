//! Deterministic instance families and seeded random instances.
//!
//! Random instances use PCG-XSH-RR 64/32 (`rand_pcg::Pcg32`) seeded with
//! `Pcg32::new(seed, STREAM)`, so a `(parameters, seed)` pair names the same
//! ideal on every platform.

use rand::seq::index::sample;
use rand::Rng;
use rand_pcg::Pcg32;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{build_syzygy_graph, classify_shape, linearly_adjacent};
use crate::monomial::{MonomialIdeal, SqfMonomial, MAX_VARS};
use crate::structure::tree_criterion;

/// Stream selector (increment) passed to [`Pcg32::new`].
pub const STREAM: u64 = 0xa02b_dbf7_bb3c_0a7;

/// Restarts before a random generator gives up.
pub const RETRIES: usize = 200;

pub fn rng(seed: u64) -> Pcg32 {
    Pcg32::new(seed, STREAM)
}

fn check_path_range(n: usize, t: usize) -> Result<()> {
    if n > MAX_VARS {
        return Err(Error::Input(format!("n = {n} exceeds the maximum of {MAX_VARS}")));
    }
    if t < 2 || t > n {
        return Err(Error::Input(format!("path length t = {t} outside 2..={n}")));
    }
    Ok(())
}

fn window(start: usize, t: usize, n: usize) -> SqfMonomial {
    SqfMonomial::from_support((0..t).map(|k| (start - 1 + k) % n + 1)).expect("indices are in range")
}

/// `I_t(C_n)`: the cyclic windows `{i, …, i+t-1 mod n}` for `i = 1..=n`.
pub fn path_ideal_cycle(n: usize, t: usize) -> Result<MonomialIdeal> {
    check_path_range(n, t)?;
    let gens: Vec<_> = (1..=n).map(|i| window(i, t, n)).collect();
    MonomialIdeal::new(n, &gens)
}

/// `I_t(L_n)`: the windows `{i, …, i+t-1}` for `i = 1..=n-t+1`.
pub fn path_ideal_line(n: usize, t: usize) -> Result<MonomialIdeal> {
    check_path_range(n, t)?;
    let gens: Vec<_> = (1..=n - t + 1).map(|i| window(i, t, n)).collect();
    MonomialIdeal::new(n, &gens)
}

/// `u_j = x_{[n] \ {j, j+1 mod n}}` for `j = 1..=n`.
pub fn cycle_family(n: usize) -> Result<MonomialIdeal> {
    if !(4..=MAX_VARS).contains(&n) {
        return Err(Error::Input(format!("cycle family needs 4 <= n <= {MAX_VARS}, got {n}")));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let gens: Vec<_> = (1..=n)
        .map(|j| {
            let next = j % n + 1;
            SqfMonomial::from_bits(full & !(1 << (j - 1)) & !(1 << (next - 1)))
        })
        .collect();
    MonomialIdeal::new(n, &gens)
}

fn random_subset(rng: &mut Pcg32, n: usize, k: usize) -> SqfMonomial {
    SqfMonomial::from_bits(sample(rng, n, k).iter().fold(0, |acc, v| acc | 1 << v))
}

fn random_member(rng: &mut Pcg32, set: u64) -> usize {
    let k = rng.random_range(0..set.count_ones());
    let mut bits = set;
    for _ in 0..k {
        bits &= bits - 1;
    }
    bits.trailing_zeros() as usize
}

/// Tree-shaped random ideal; see [`random_tree_ideal_with`].
pub fn random_tree_ideal(n: usize, m: usize, seed: u64) -> Result<MonomialIdeal> {
    random_tree_ideal_with(n, m, seed, false)
}

/// Random walk over degree-`d` supports (`d` drawn from the seed): each new
/// generator is one swap away from an existing one and adjacent to nothing
/// else. With `nested`, every step also keeps `tree_criterion` satisfied.
pub fn random_tree_ideal_with(n: usize, m: usize, seed: u64, nested: bool) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::Input("m must be at least 1".into()));
    }
    if !(2..=MAX_VARS).contains(&n) {
        return Err(Error::Input(format!("n = {n} outside 2..={MAX_VARS}")));
    }
    let mut rng = rng(seed);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for _ in 0..RETRIES {
        let d = if n >= 4 { rng.random_range(2..=n - 2) } else { rng.random_range(1..n) };
        let mut gens = vec![random_subset(&mut rng, n, d)];
        let mut stalled = 0;
        while gens.len() < m && stalled < 50 * m {
            let v = gens[rng.random_range(0..gens.len())];
            let out = random_member(&mut rng, v.bits());
            let inn = random_member(&mut rng, full & !v.bits());
            let w = SqfMonomial::from_bits(v.bits() & !(1 << out) | 1 << inn);
            let fresh = !gens.contains(&w)
                && gens.iter().filter(|&&g| linearly_adjacent(g, w)).count() == 1;
            let accepted = fresh && {
                gens.push(w);
                let ok = !nested || tree_criterion(&MonomialIdeal::new(n, &gens)?)?.holds;
                if !ok {
                    gens.pop();
                }
                ok
            };
            if accepted {
                stalled = 0;
            } else {
                stalled += 1;
            }
        }
        if gens.len() == m {
            let ideal = MonomialIdeal::new(n, &gens)?;
            if m == 1 || classify_shape(&build_syzygy_graph(&ideal)?).is_tree() {
                return Ok(ideal);
            }
        }
    }
    Err(Error::Generation(format!("no tree-shaped ideal with n = {n}, m = {m} after {RETRIES} restarts")))
}

/// Random walk that only ever extends the most recent generator, so `G_I`
/// is a line in generation order.
pub fn random_line_ideal(n: usize, m: usize, seed: u64) -> Result<MonomialIdeal> {
    if m == 0 {
        return Err(Error::Input("m must be at least 1".into()));
    }
    if !(2..=MAX_VARS).contains(&n) {
        return Err(Error::Input(format!("n = {n} outside 2..={MAX_VARS}")));
    }
    let mut rng = rng(seed);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for _ in 0..RETRIES {
        let d = if n >= 4 { rng.random_range(2..=n - 2) } else { rng.random_range(1..n) };
        let mut gens = vec![random_subset(&mut rng, n, d)];
        let mut stalled = 0;
        while gens.len() < m && stalled < 50 * m {
            let v = *gens.last().expect("nonempty");
            let out = random_member(&mut rng, v.bits());
            let inn = random_member(&mut rng, full & !v.bits());
            let w = SqfMonomial::from_bits(v.bits() & !(1 << out) | 1 << inn);
            if !gens.contains(&w) && gens.iter().filter(|&&g| linearly_adjacent(g, w)).count() == 1 {
                gens.push(w);
                stalled = 0;
            } else {
                stalled += 1;
            }
        }
        if gens.len() == m {
            return MonomialIdeal::new(n, &gens);
        }
    }
    Err(Error::Generation(format!("no line-shaped ideal with n = {n}, m = {m} after {RETRIES} restarts")))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn distinct_subsets(rng: &mut Pcg32, n: usize, m: usize, d: usize) -> Result<Vec<SqfMonomial>> {
    if d > n || binomial(n, d) < m as u128 {
        return Err(Error::Generation(format!("fewer than {m} subsets of size {d} in [{n}]")));
    }
    let mut sets = Vec::with_capacity(m);
    while sets.len() < m {
        let s = random_subset(rng, n, d);
        if !sets.contains(&s) {
            sets.push(s);
        }
    }
    Ok(sets)
}

/// `m` distinct uniformly random degree-`d` generators on `n` variables.
pub fn random_ideal(n: usize, m: usize, d: usize, seed: u64) -> Result<MonomialIdeal> {
    if n > MAX_VARS || m == 0 || d == 0 {
        return Err(Error::Input(format!("invalid parameters n = {n}, m = {m}, d = {d}")));
    }
    let gens = distinct_subsets(&mut rng(seed), n, m, d)?;
    MonomialIdeal::new(n, &gens)
}

/// `m` distinct random facets of size `k < n`.
pub fn random_pure_complex(n: usize, m: usize, k: usize, seed: u64) -> Result<SimplicialComplex> {
    if n > MAX_VARS || m == 0 || k == 0 || k >= n {
        return Err(Error::Input(format!("invalid parameters n = {n}, m = {m}, k = {k}")));
    }
    SimplicialComplex::new(n, distinct_subsets(&mut rng(seed), n, m, k)?)
}
