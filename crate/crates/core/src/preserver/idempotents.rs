use crate::fixed::dim_fixed;
use crate::matrix::Matrix;
use crate::rank_one::{are_orthogonal, is_rank_one_idempotent};
use crate::sample::Sampler;
use crate::superop::SuperOp;

/// Tallies for one direction (`φ` or `φ⁻¹`) over the sampled idempotents.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DirectionCheck {
    /// Samples whose rank-one idempotents all map to rank-one idempotents.
    pub rank_one_idempotents: usize,
    /// Samples whose orthogonal pair maps to an orthogonal pair.
    pub orthogonal_pairs: usize,
    /// Samples with `dim F(φ(P) + φ(Q)) = 2`.
    pub pair_fixed_dim_two: usize,
    pub first_failure: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentPreservation {
    pub samples: usize,
    pub forward: DirectionCheck,
    /// Present only for bijective maps, evaluated by applying `L⁻¹` forward.
    pub backward: Option<DirectionCheck>,
}

impl IdempotentPreservation {
    pub fn all_hold(&self) -> bool {
        let ok = |d: &DirectionCheck| d.first_failure.is_none();
        ok(&self.forward) && self.backward.as_ref().is_none_or(ok)
    }
}

fn run_direction(phi: &SuperOp, samples: usize, seed: u64) -> DirectionCheck {
    let n = phi.n();
    let mut out = DirectionCheck::default();
    let image = |m: &Matrix| phi.apply(m).expect("sample has the map's size");
    for i in 0..samples {
        let mut rng = Sampler::stream(seed, i as u64);
        let (p, _, _) = rng.rank_one_idempotent(n);
        let mut ok = is_rank_one_idempotent(&image(&p)).unwrap_or(false);
        let mut orth_ok = true;
        let mut dim_ok = true;
        if n >= 2 {
            let (p, q) = rng.orthogonal_pair(n);
            let (fp, fq) = (image(&p), image(&q));
            ok &= is_rank_one_idempotent(&fp).unwrap_or(false)
                && is_rank_one_idempotent(&fq).unwrap_or(false);
            orth_ok = are_orthogonal(&fp, &fq).unwrap_or(false);
            dim_ok = dim_fixed(&(&fp + &fq)).ok() == Some(2);
        }
        out.rank_one_idempotents += usize::from(ok);
        out.orthogonal_pairs += usize::from(orth_ok);
        out.pair_fixed_dim_two += usize::from(dim_ok);
        if !(ok && orth_ok && dim_ok) && out.first_failure.is_none() {
            out.first_failure = Some(i);
        }
    }
    out
}

/// Checks that rank-one idempotents and orthogonal pairs of them keep their
/// structure under `φ`, and under `φ⁻¹` when `φ` is bijective.
///
/// Sample `i` uses stream `i` of `seed`: one random rank-one idempotent and
/// one orthogonal pair `B·E₁₁·B⁻¹`, `B·E₂₂·B⁻¹`.
pub fn idempotent_preservation(phi: &SuperOp, samples: usize, seed: u64) -> IdempotentPreservation {
    let forward = run_direction(phi, samples, seed);
    let backward = phi
        .inverse()
        .ok()
        .map(|inv| run_direction(&inv, samples, seed.wrapping_add(1)));
    IdempotentPreservation {
        samples,
        forward,
        backward,
    }
}
