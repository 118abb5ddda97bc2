//! Constructive extremal theory: staircases, their perturbations, the
//! mixed perturbation family, surplus coordinates on the maximal-support
//! stratum, and witnesses attaining the maximal degree.

use crate::error::{Error, Result};
use crate::extremal::{max_degree, rho, triangular};
use crate::partition::{Block, Partition};

/// The staircase partition `(t, t-1, ..., 1)` of mass `T_t`.
pub fn staircase(t: u64) -> Partition {
    let blocks = (1..=t).rev().map(|size| Block { size, mult: 1 }).collect();
    Partition::from_blocks(blocks).expect("staircase blocks are strictly decreasing")
}

/// The three elementary staircase perturbations at level `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircasePerturbations {
    /// `(t+1, t-1, ..., 1)`: one extra unit on the top part, mass `T_t + 1`.
    pub top: Partition,
    /// `(t, t-1, ..., 1, 1)`: one extra bottom part, mass `T_t + 1`.
    pub bot: Partition,
    /// `(t+1, t-1, ..., 1, 1)`: both at once, mass `T_t + 2`, self-conjugate.
    pub tb: Partition,
}

/// Builds the first staircase perturbations; defined for `t >= 2`.
///
/// `top` and `bot` are a conjugate pair of degree `t(t-1) + 1`; `tb` is
/// self-conjugate of degree `t(t-1) + 2`.
pub fn staircase_perturbations(t: u64) -> Result<StaircasePerturbations> {
    if t < 2 {
        return Err(Error::PerturbationLevel(t));
    }
    Ok(StaircasePerturbations {
        top: mixed_perturbation(&PerturbationParams {
            t,
            a: 1,
            b: 0,
            c: 0,
        })?,
        bot: mixed_perturbation(&PerturbationParams {
            t,
            a: 0,
            b: 1,
            c: 0,
        })?,
        tb: mixed_perturbation(&PerturbationParams {
            t,
            a: 1,
            b: 1,
            c: 0,
        })?,
    })
}

/// Parameters of a mixed staircase perturbation: `a` widened top gaps, `b`
/// duplicated bottom levels, `c` extra units on the largest part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerturbationParams {
    /// Support size / triangular level, `>= 1`.
    pub t: u64,
    /// Number of top gap bonuses, `a + b <= t`.
    pub a: u64,
    /// Number of bottom multiplicity bonuses.
    pub b: u64,
    /// Extra top mass; requires `a >= 1` when positive.
    pub c: u64,
}

/// Builds the mixed perturbation with support size `t`, mass
/// `T_t + T_a + T_b + c`, and degree `t(t-1) + a + b`.
pub fn mixed_perturbation(p: &PerturbationParams) -> Result<Partition> {
    let PerturbationParams { t, a, b, c } = *p;
    if t == 0 {
        return Err(Error::InvalidPerturbation(
            "support size t must be positive".into(),
        ));
    }
    if a + b > t {
        return Err(Error::InvalidPerturbation(format!(
            "a + b must not exceed t (got a = {a}, b = {b}, t = {t})"
        )));
    }
    if a == 0 && c > 0 {
        return Err(Error::InvalidPerturbation(
            "c > 0 requires a top-gap perturbation (a >= 1)".into(),
        ));
    }
    let mut blocks = Vec::with_capacity(t as usize);
    for i in 1..=t {
        let size = t + 1 - i + (a + 1).saturating_sub(i) + if i == 1 { c } else { 0 };
        let mult = if i > t - b { 2 } else { 1 };
        blocks.push(Block { size, mult });
    }
    Ok(Partition::from_blocks(blocks).expect("perturbation sizes are strictly decreasing"))
}

/// A canonical partition of `n` attaining the maximal degree.
///
/// At triangular masses this is the staircase; otherwise the mixed
/// perturbation with `q = isqrt(nu)` and `(a, b, c)` chosen as
/// `(q, q-1, nu - q^2)` below the pronic threshold and
/// `(q, q, nu - q(q+1))` at or above it.
pub fn extremal_witness(n: u64) -> Partition {
    debug_assert!(n >= 1);
    let ctx = max_degree(n);
    if ctx.nu == 0 {
        return staircase(ctx.rho);
    }
    let q = ctx.nu.isqrt();
    let (a, b, c) = if ctx.nu < q * (q + 1) {
        (q, q - 1, ctx.nu - q * q)
    } else {
        (q, q, ctx.nu - q * (q + 1))
    };
    mixed_perturbation(&PerturbationParams {
        t: ctx.rho,
        a,
        b,
        c,
    })
    .expect("witness parameters satisfy the perturbation constraints")
}

/// Surplus coordinates of a partition relative to the staircase background
/// of its support size: gap excesses `alpha_j = g_j - 1` and multiplicity
/// excesses `mu_i = m_i - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurplusData {
    /// Support size.
    pub t: u64,
    /// Gap excesses, one per support level, top down.
    pub alpha: Vec<u64>,
    /// Multiplicity excesses, one per support level, top down.
    pub mu: Vec<u64>,
}

impl SurplusData {
    /// The weighted surplus `sum j*alpha_j + sum mu_i*L_i`; equals
    /// `n - T_t` for the decoded partition.
    pub fn budget(&self) -> u64 {
        let sizes = derived_sizes(self.t, &self.alpha);
        let gap_weight: u64 = self
            .alpha
            .iter()
            .enumerate()
            .map(|(j, &a)| (j as u64 + 1) * a)
            .sum();
        let mult_weight: u64 = self.mu.iter().zip(&sizes).map(|(&m, &l)| m * l).sum();
        gap_weight + mult_weight
    }
}

fn derived_sizes(t: u64, alpha: &[u64]) -> Vec<u64> {
    debug_assert_eq!(alpha.len(), t as usize);
    let mut sizes = vec![0u64; alpha.len()];
    let mut suffix = 0;
    for i in (0..alpha.len()).rev() {
        suffix += alpha[i];
        sizes[i] = t - i as u64 + suffix;
    }
    sizes
}

/// Reconstructs the unique partition with the given surplus coordinates.
pub fn decode_surplus(d: &SurplusData) -> Partition {
    assert_eq!(d.alpha.len(), d.t as usize, "alpha length must equal t");
    assert_eq!(d.mu.len(), d.t as usize, "mu length must equal t");
    let sizes = derived_sizes(d.t, &d.alpha);
    let blocks = sizes
        .iter()
        .zip(&d.mu)
        .map(|(&size, &mu)| Block { size, mult: 1 + mu })
        .collect();
    Partition::from_blocks(blocks).expect("derived sizes are strictly decreasing")
}

/// Reads off the surplus coordinates of a nonempty partition.
pub fn encode_surplus(p: &Partition) -> Result<SurplusData> {
    let sp = p.support_profile()?;
    Ok(SurplusData {
        t: sp.r as u64,
        alpha: sp.gaps.iter().map(|g| g - 1).collect(),
        mu: sp.mults.iter().map(|m| m - 1).collect(),
    })
}

/// Streams exactly the partitions of `n` whose support size is the maximal
/// `rho(n)`, each once, by solving the surplus budget equation
/// `nu = sum j*alpha_j + sum mu_i*L_i`.
///
/// Gap-excess vectors are visited by nonincreasing gap weight; within one
/// `alpha` the solutions are emitted in descending lexicographic order.
pub fn enumerate_max_support_stratum(n: u64) -> MaxSupportStratum {
    debug_assert!(n >= 1);
    let t = rho(n);
    let nu = n - triangular(t);
    MaxSupportStratum {
        t,
        nu,
        next_weight: Some(nu),
        alphas: Vec::new().into_iter(),
        batch: Vec::new().into_iter(),
    }
}

/// Iterator over the maximal-support stratum of a fixed `n`. See
/// [`enumerate_max_support_stratum`].
pub struct MaxSupportStratum {
    t: u64,
    nu: u64,
    /// Next gap-weight budget to expand, counting down from `nu`.
    next_weight: Option<u64>,
    alphas: std::vec::IntoIter<Vec<u64>>,
    batch: std::vec::IntoIter<Partition>,
}

impl Iterator for MaxSupportStratum {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            if let Some(p) = self.batch.next() {
                return Some(p);
            }
            if let Some(alpha) = self.alphas.next() {
                self.batch = expand_alpha(self.t, self.nu, &alpha).into_iter();
                continue;
            }
            let w = self.next_weight?;
            self.alphas = alphas_of_weight(self.t, w).into_iter();
            self.next_weight = w.checked_sub(1);
        }
    }
}

/// All gap-excess vectors of length `t` with `sum (j+1)*alpha[j] == w`
/// (1-based weights), each index chosen from its largest value down.
fn alphas_of_weight(t: u64, w: u64) -> Vec<Vec<u64>> {
    fn rec(i: usize, rem: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == cur.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let weight = i as u64 + 1;
        for value in (0..=rem / weight).rev() {
            cur[i] = value;
            rec(i + 1, rem - value * weight, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u64; t as usize];
    rec(0, w, &mut cur, &mut out);
    out
}

/// All stratum partitions sharing one gap-excess vector: solve
/// `sum mu_i * L_i = nu - gap_weight` and decode, descending-lex.
fn expand_alpha(t: u64, nu: u64, alpha: &[u64]) -> Vec<Partition> {
    let sizes = derived_sizes(t, alpha);
    let gap_weight: u64 = alpha
        .iter()
        .enumerate()
        .map(|(j, &a)| (j as u64 + 1) * a)
        .sum();
    debug_assert!(gap_weight <= nu);
    let rem = nu - gap_weight;

    fn rec(i: usize, rem: u64, sizes: &[u64], mu: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == sizes.len() {
            if rem == 0 {
                out.push(mu.clone());
            }
            return;
        }
        for value in (0..=rem / sizes[i]).rev() {
            mu[i] = value;
            rec(i + 1, rem - value * sizes[i], sizes, mu, out);
        }
        mu[i] = 0;
    }

    let mut mus = Vec::new();
    let mut mu = vec![0u64; t as usize];
    rec(0, rem, &sizes, &mut mu, &mut mus);

    let mut batch: Vec<Partition> = mus
        .into_iter()
        .map(|mu| {
            let blocks = sizes
                .iter()
                .zip(&mu)
                .map(|(&size, &m)| Block { size, mult: 1 + m })
                .collect();
            Partition::from_blocks(blocks).expect("derived sizes are strictly decreasing")
        })
        .collect();
    batch.sort_unstable_by(|a, b| b.cmp(a));
    batch
}
