//! Seeded random generation of the objects the verification suites sweep
//! over. Everything runs off [`SplitMix64`], so a (seed, parameters) pair
//! pins the whole sample stream.
//!
//! Gaussian-rational entries are integers with `|re|, |im| <= 4`; subspace
//! dimensions are chosen uniformly; compatible pairs and families are built
//! inside a shared random orthogonal frame (random invertible integer
//! matrix, Gram–Schmidt applied, no normalization).

use crate::hermitian::{GMatrix, GSubspace, GVector, HermitianSpace};
use crate::matrix::Matrix;
use crate::rng::SplitMix64;
use crate::scalar::{GaussianRational, GaussianRationals, PrimeField};
use crate::subspace::Subspace;

pub fn gauss_int(rng: &mut SplitMix64) -> GaussianRational {
    GaussianRational::from_parts(rng.int_in(-4, 4), rng.int_in(-4, 4))
}

pub fn gauss_vector(rng: &mut SplitMix64, n: usize) -> GVector {
    (0..n).map(|_| gauss_int(rng)).collect()
}

pub fn gauss_matrix(rng: &mut SplitMix64, rows: usize, cols: usize) -> GMatrix {
    let rows: Vec<GVector> = (0..rows).map(|_| gauss_vector(rng, cols)).collect();
    Matrix::from_rows(GaussianRationals, rows).expect("rectangular by construction")
}

/// Retries random integer matrices until one has full rank.
pub fn invertible_gauss_matrix(rng: &mut SplitMix64, n: usize) -> GMatrix {
    loop {
        let m = gauss_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// A random subspace of Q(i)^n: dimension uniform in `0..=n`, then the span
/// of that many random vectors (which may collapse to lower dimension).
pub fn gauss_subspace(rng: &mut SplitMix64, n: usize) -> GSubspace {
    let d = rng.below(n as u64 + 1) as usize;
    let rows: Vec<GVector> = (0..d).map(|_| gauss_vector(rng, n)).collect();
    Subspace::span(GaussianRationals, n, &rows).expect("ambient matches")
}

/// A random subspace of exactly the requested dimension.
pub fn gauss_subspace_of_dim(rng: &mut SplitMix64, n: usize, d: usize) -> GSubspace {
    assert!(d <= n);
    loop {
        let rows: Vec<GVector> = (0..d).map(|_| gauss_vector(rng, n)).collect();
        let s = Subspace::span(GaussianRationals, n, &rows).expect("ambient matches");
        if s.dim() == d {
            return s;
        }
    }
}

/// A random orthogonal frame: Gram–Schmidt applied to the rows of a random
/// invertible integer matrix. Pairwise inner products are exactly zero.
pub fn orthogonal_frame(rng: &mut SplitMix64, n: usize) -> Vec<GVector> {
    let h = HermitianSpace::new(n);
    let m = invertible_gauss_matrix(rng, n);
    h.gram_schmidt(&m.row_vecs())
}

/// A uniformly random subset of `0..n` (each element kept with probability
/// one half).
pub fn subset(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.coin()).collect()
}

/// A uniformly random k-element subset of `0..n` by partial shuffle.
pub fn k_subset(rng: &mut SplitMix64, n: usize, k: usize) -> Vec<usize> {
    assert!(k <= n);
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + rng.below((n - i) as u64) as usize;
        pool.swap(i, j);
    }
    let mut chosen = pool[..k].to_vec();
    chosen.sort_unstable();
    chosen
}

/// The span of a random subset of the frame lines.
pub fn frame_member(rng: &mut SplitMix64, frame: &[GVector]) -> GSubspace {
    let idx = subset(rng, frame.len());
    span_of_frame_subset(frame, &idx)
}

/// The span of a random k-element subset of the frame lines.
pub fn frame_member_of_dim(rng: &mut SplitMix64, frame: &[GVector], k: usize) -> GSubspace {
    let idx = k_subset(rng, frame.len(), k);
    span_of_frame_subset(frame, &idx)
}

pub fn span_of_frame_subset(frame: &[GVector], idx: &[usize]) -> GSubspace {
    let n = frame.first().map_or(0, Vec::len);
    let rows: Vec<GVector> = idx.iter().map(|&i| frame[i].clone()).collect();
    Subspace::span(GaussianRationals, n, &rows).expect("ambient matches")
}

/// A compatible pair: two members of one random orthogonal frame.
pub fn compatible_pair(rng: &mut SplitMix64, space: &HermitianSpace) -> (GSubspace, GSubspace) {
    let frame = orthogonal_frame(rng, space.dim());
    (frame_member(rng, &frame), frame_member(rng, &frame))
}

/// A subspace compatible with `x`: the span of some of x's orthogonal basis
/// vectors together with some of the complement's.
pub fn compatible_partner(
    rng: &mut SplitMix64,
    space: &HermitianSpace,
    x: &GSubspace,
) -> GSubspace {
    let mut lines: Vec<GVector> = Vec::with_capacity(space.dim());
    lines.extend(space.gram_schmidt(&x.basis_rows()));
    lines.extend(space.gram_schmidt(&space.orthocomplement(x).basis_rows()));
    frame_member(rng, &lines)
}

pub fn fp_vector(rng: &mut SplitMix64, field: PrimeField, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.below(field.modulus())).collect()
}

pub fn fp_subspace(rng: &mut SplitMix64, field: PrimeField, n: usize) -> Subspace<PrimeField> {
    let d = rng.below(n as u64 + 1) as usize;
    let rows: Vec<Vec<u64>> = (0..d).map(|_| fp_vector(rng, field, n)).collect();
    Subspace::span(field, n, &rows).expect("ambient matches")
}

pub fn invertible_fp_matrix(rng: &mut SplitMix64, field: PrimeField, n: usize) -> Matrix<PrimeField> {
    loop {
        let rows: Vec<Vec<u64>> = (0..n).map(|_| fp_vector(rng, field, n)).collect();
        let m = Matrix::from_rows(field, rows).expect("rectangular");
        if m.rank() == n {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frames_are_orthogonal_and_full() {
        let mut rng = SplitMix64::new(61);
        let h = HermitianSpace::new(5);
        for _ in 0..20 {
            let frame = orthogonal_frame(&mut rng, 5);
            assert_eq!(frame.len(), 5);
            for i in 0..5 {
                for j in i + 1..5 {
                    assert!(h.inner(&frame[i], &frame[j]).is_zero());
                }
                assert!(!h.inner(&frame[i], &frame[i]).is_zero());
            }
        }
    }

    #[test]
    fn dimension_targets_are_met() {
        let mut rng = SplitMix64::new(62);
        for d in 0..=4 {
            let s = gauss_subspace_of_dim(&mut rng, 4, d);
            assert_eq!(s.dim(), d);
        }
        for _ in 0..20 {
            let ks = k_subset(&mut rng, 7, 3);
            assert_eq!(ks.len(), 3);
            assert!(ks.windows(2).all(|w| w[0] < w[1]));
            assert!(ks.iter().all(|&i| i < 7));
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<GSubspace> = {
            let mut rng = SplitMix64::new(63);
            (0..10).map(|_| gauss_subspace(&mut rng, 4)).collect()
        };
        let b: Vec<GSubspace> = {
            let mut rng = SplitMix64::new(63);
            (0..10).map(|_| gauss_subspace(&mut rng, 4)).collect()
        };
        assert_eq!(a, b);
    }
}
