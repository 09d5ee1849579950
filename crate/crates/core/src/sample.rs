//! Random classical orbits for sweeps and property runs.

use rand::Rng;

use crate::constructors::AlgebraKind;
use crate::orbits::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classical {
    Gl,
    /// sl with at least one part prime to p.
    Sl,
    /// sl with p dividing every part.
    SlDivisible,
    Psl,
    Osp,
}

impl Classical {
    pub const ALL: [Classical; 5] = [Classical::Gl, Classical::Sl, Classical::SlDivisible, Classical::Psl, Classical::Osp];
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub kind: AlgebraKind,
    pub partition: Partition,
}

/// Parts of `total`, each a multiple of `step`.
pub fn random_parts<R: Rng>(rng: &mut R, total: usize, step: usize) -> Vec<usize> {
    let mut left = total / step;
    let mut out = Vec::new();
    while left > 0 {
        let k = rng.gen_range(1..=left);
        out.push(k * step);
        left -= k;
    }
    out
}

fn osp_dim(m: usize, n: usize) -> usize {
    m * (m.saturating_sub(1)) / 2 + n * (2 * n + 1) + 2 * m * n
}

/// Draws an instance whose algebra has dimension at most `max_dim`. For
/// [`Classical::Sl`] at least one part is prime to `p`; `p = 0` counts as
/// dividing nothing. Returns `None` when the family has no instance that
/// small under these constraints.
pub fn random_instance<R: Rng>(rng: &mut R, fam: Classical, p: u64, max_dim: usize) -> Option<Instance> {
    let pu = p as usize;
    for _ in 0..1000 {
        let inst = match fam {
            Classical::Gl | Classical::Sl => {
                let (m, n) = (rng.gen_range(1..=8), rng.gen_range(0..=6));
                let dim = (m + n) * (m + n);
                if dim > max_dim || (fam == Classical::Sl && (m == n || m + n < 2)) {
                    continue;
                }
                let lam = Partition::new(random_parts(rng, m, 1), random_parts(rng, n, 1)).ok()?;
                if fam == Classical::Sl && pu > 1 && lam.blocks().iter().all(|b| b.size % pu == 0) {
                    continue;
                }
                let kind = if fam == Classical::Gl { AlgebraKind::Gl { m, n } } else { AlgebraKind::Sl { m, n } };
                Instance { kind, partition: lam }
            }
            Classical::SlDivisible => {
                if pu < 2 {
                    return None;
                }
                let (m, n) = (pu * rng.gen_range(1..=4), pu * rng.gen_range(0..=3));
                if m == n || (m + n) * (m + n) > max_dim {
                    continue;
                }
                let lam = Partition::new(random_parts(rng, m, pu), random_parts(rng, n, pu)).ok()?;
                Instance { kind: AlgebraKind::Sl { m, n }, partition: lam }
            }
            Classical::Psl => {
                let n = rng.gen_range(2..=5);
                if (pu > 1 && n % pu == 0) || 4 * n * n - 2 > max_dim {
                    continue;
                }
                let lam = Partition::new(random_parts(rng, n, 1), random_parts(rng, n, 1)).ok()?;
                Instance { kind: AlgebraKind::Psl { n }, partition: lam }
            }
            Classical::Osp => {
                let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=4));
                if osp_dim(m, n) > max_dim {
                    continue;
                }
                let lam = Partition::new(random_parts(rng, m, 1), random_parts(rng, 2 * n, 1)).ok()?;
                if !lam.osp_admissible() {
                    continue;
                }
                Instance { kind: AlgebraKind::Osp { m, n2: 2 * n }, partition: lam }
            }
        };
        return Some(inst);
    }
    None
}
