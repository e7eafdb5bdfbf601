//! The lattice of subspaces of `F^n`.
//!
//! A [`Subspace`] is identified with the reduced row echelon form of any of
//! its spanning sets: the RREF basis is the canonical representative, so
//! subspace equality, hashing and set membership are plain structural
//! equality. Sum and intersection are computed exactly; intersections use
//! the Zassenhaus block construction (one RREF pass on `[A A; B 0]`).
//!
//! Over GF(p) the module also enumerates whole Grassmannians in a fixed
//! deterministic order (pivot-column combinations lexicographically, then
//! free entries in odometer order), with the Gaussian binomial coefficient
//! as the completeness check.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, FieldTag, PrimeField};

/// A subspace of `F^n`, stored as its canonical RREF basis (no zero rows).
/// Two subspaces are equal iff their canonical bases are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// The span of a list of vectors.
    pub fn span(field: F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "spanning vectors must have length {ambient}"
            )));
        }
        let m = Matrix::new(field, vectors.len(), ambient, vectors.concat())?;
        Ok(Subspace {
            ambient,
            basis: m.rref().0,
        })
    }

    /// The row space of a matrix with `ambient` columns.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        Subspace {
            ambient: m.cols(),
            basis: m.rref().0,
        }
    }

    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(field, 0, ambient),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn line(field: F, direction: &[F::Elem]) -> Result<Self> {
        let s = Subspace::span(field, direction.len(), &[direction.to_vec()])?;
        if s.dim() != 1 {
            return Err(Error::InvalidArgument("zero vector spans no line".into()));
        }
        Ok(s)
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical RREF basis; rows are basis vectors.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }

    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        self.basis.row_space_contains(v)
    }

    /// Inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        self.compatible_ambient(other).expect("ambient mismatch");
        (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.compatible_ambient(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_matrix(&stacked))
    }

    /// Intersection by the Zassenhaus construction: reduce `[A A; B 0]`;
    /// rows whose left half is zero carry the intersection in their right
    /// half.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.compatible_ambient(other)?;
        let f = self.field().clone();
        let n = self.ambient;
        let top = self.basis.hstack(&self.basis)?;
        let bottom = other.basis.hstack(&Matrix::zero(f.clone(), other.dim(), n))?;
        let (red, _) = top.vstack(&bottom)?.rref();
        let mut rows = Vec::new();
        for i in 0..red.rows() {
            let left_zero = (0..n).all(|c| f.is_zero(red.at(i, c)));
            if left_zero {
                rows.push(red.row(i)[n..].to_vec());
            }
        }
        Subspace::span(f, n, &rows)
    }

    /// The annihilator `X^0` in dual coordinates (identified with `F^n` via
    /// the standard dual basis): all `v` with `b . v = 0` for every basis
    /// row `b`. Order-reversing, and `X^00 = X`.
    pub fn annihilator(&self) -> Self {
        Subspace {
            ambient: self.ambient,
            basis: self.basis.kernel(),
        }
    }

    fn compatible_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient || self.field() != other.field() {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of {}^{} vs {}^{}",
                self.field().tag(),
                self.ambient,
                other.field().tag(),
                other.ambient
            )));
        }
        Ok(())
    }
}

/// JSON form of a subspace: field tag, ambient dimension and the canonical
/// basis rows as scalar strings.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SubspaceJson {
    pub field: String,
    pub ambient: usize,
    pub basis: Vec<Vec<String>>,
}

impl<F: Field> Subspace<F> {
    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson {
            field: self.field().tag().to_string(),
            ambient: self.ambient,
            basis: self.basis.format_rows(),
        }
    }

    pub fn from_json(field: F, json: &SubspaceJson) -> Result<Self> {
        let tag: FieldTag = json.field.parse()?;
        if tag != field.tag() {
            return Err(Error::FieldMismatch(format!(
                "subspace is over {tag}, expected {}",
                field.tag()
            )));
        }
        let rows = json
            .basis
            .iter()
            .map(|row| row.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(field, json.ambient, &rows)
    }
}

/// The Gaussian binomial coefficient `[n choose k]_p`: the number of
/// k-dimensional subspaces of GF(p)^n, by the product formula.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let p = BigUint::from(p);
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for i in 0..k {
        numer *= p.pow((n - i) as u32) - 1u32;
        denom *= p.pow((i + 1) as u32) - 1u32;
    }
    numer / denom
}

/// Enumeration cap for [`enumerate_subspaces`].
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// Every k-dimensional subspace of GF(p)^n exactly once, in a deterministic
/// order: pivot-column k-combinations lexicographically, free entries in
/// odometer order (last free position fastest). The count always equals the
/// Gaussian binomial coefficient.
pub fn enumerate_subspaces(n: usize, k: usize, field: PrimeField) -> Result<Vec<Subspace<PrimeField>>> {
    if k > n {
        return Err(Error::InvalidArgument(format!("k={k} exceeds n={n}")));
    }
    let p = field.modulus();
    let count = gaussian_binomial(n, k, p);
    let count = count
        .to_u64()
        .filter(|&c| c <= ENUMERATION_CAP)
        .ok_or_else(|| {
            Error::SizeCapExceeded(format!(
                "G_{k}(GF({p})^{n}) has {count} elements, cap is {ENUMERATION_CAP}"
            ))
        })?;

    let mut out = Vec::with_capacity(count as usize);
    for pivots in combinations(n, k) {
        // Free positions: (row, col) with col right of the row's pivot and
        // not a pivot column itself.
        let mut free = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let mut values = vec![0u64; free.len()];
        loop {
            let mut m = Matrix::zero(field, k, n);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, 1);
            }
            for (&(r, c), &v) in free.iter().zip(&values) {
                m.set(r, c, v);
            }
            debug_assert_eq!(m.rref().0, m, "constructed matrix must already be RREF");
            out.push(Subspace {
                ambient: n,
                basis: m,
            });
            // Odometer increment over GF(p) digits, last position fastest.
            let mut pos = values.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                values[pos] += 1;
                if values[pos] < p {
                    break;
                }
                values[pos] = 0;
                if pos == 0 {
                    break;
                }
            }
            if values.iter().all(|&v| v == 0) {
                break;
            }
        }
    }
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

/// All k-combinations of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return vec![];
    }
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance the rightmost index that can move.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All vectors of GF(p)^n in odometer order (for brute-force oracles).
pub fn enumerate_vectors(n: usize, field: PrimeField) -> Vec<Vec<u64>> {
    let p = field.modulus();
    let total = (p as u128).pow(n as u32);
    assert!(total <= 1 << 24, "vector enumeration out of desk scale");
    let mut out = Vec::with_capacity(total as usize);
    let mut v = vec![0u64; n];
    loop {
        out.push(v.clone());
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            v[pos] += 1;
            if v[pos] < p {
                break;
            }
            v[pos] = 0;
            if pos == 0 {
                return out;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::scalar::{rat, Rationals};
    use std::collections::HashSet;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn fp_span(field: PrimeField, n: usize, rows: &[&[u64]]) -> Subspace<PrimeField> {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        Subspace::span(field, n, &rows).unwrap()
    }

    fn unit(n: usize, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; n];
        v[i] = 1;
        v
    }

    fn random_fp_subspace(rng: &mut SplitMix64, field: PrimeField, n: usize) -> Subspace<PrimeField> {
        let d = rng.below(n as u64 + 1) as usize;
        let rows: Vec<Vec<u64>> = (0..d)
            .map(|_| (0..n).map(|_| rng.below(field.modulus())).collect())
            .collect();
        Subspace::span(field, n, &rows).unwrap()
    }

    #[test]
    fn span_canonicalizes() {
        let zero = Subspace::span(Rationals, 3, &[]).unwrap();
        assert_eq!(zero, Subspace::zero(Rationals, 3));

        let e1 = vec![rat(1), rat(0), rat(0)];
        let e1_scaled = vec![rat(2), rat(0), rat(0)];
        let s = Subspace::span(Rationals, 3, &[e1.clone(), e1_scaled]).unwrap();
        assert_eq!(s, Subspace::span(Rationals, 3, &[e1]).unwrap());
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn span_dimension_matches_rank() {
        let mut rng = SplitMix64::new(31);
        for _ in 0..100 {
            let rows: Vec<Vec<u64>> = (0..3).map(|_| (0..4).map(|_| rng.below(2)).collect()).collect();
            let m = Matrix::from_rows(f2(), rows.clone()).unwrap();
            let s = Subspace::span(f2(), 4, &rows).unwrap();
            assert_eq!(s.dim(), m.rank());
        }
    }

    #[test]
    fn sum_and_intersection_basics() {
        let f = f2();
        let x = fp_span(f, 4, &[&unit(4, 0), &unit(4, 1)]);
        let y = fp_span(f, 4, &[&unit(4, 1), &unit(4, 2)]);
        let meet = x.intersect(&y).unwrap();
        let join = x.sum(&y).unwrap();
        assert_eq!(meet, fp_span(f, 4, &[&unit(4, 1)]));
        assert_eq!(join.dim(), 3);

        let zero = Subspace::zero(f, 4);
        let full = Subspace::full(f, 4);
        assert_eq!(x.sum(&zero).unwrap(), x);
        assert_eq!(x.intersect(&full).unwrap(), x);

        // Cross-check the meet by enumerating all vectors of both subspaces.
        for v in enumerate_vectors(4, f) {
            let in_both = x.contains_vector(&v) && y.contains_vector(&v);
            assert_eq!(in_both, meet.contains_vector(&v));
        }
    }

    #[test]
    fn dimension_identity_on_random_pairs() {
        let mut rng = SplitMix64::new(32);
        let f = PrimeField::new(3).unwrap();
        for _ in 0..500 {
            let x = random_fp_subspace(&mut rng, f, 4);
            let y = random_fp_subspace(&mut rng, f, 4);
            let sum = x.sum(&y).unwrap();
            let meet = x.intersect(&y).unwrap();
            assert_eq!(sum.dim() + meet.dim(), x.dim() + y.dim());
            assert!(sum.contains(&x) && sum.contains(&y));
            assert!(x.contains(&meet) && y.contains(&meet));
        }
    }

    #[test]
    fn containment_is_a_partial_order() {
        let mut rng = SplitMix64::new(33);
        let f = f2();
        let full = Subspace::full(f, 4);
        for _ in 0..200 {
            let x = random_fp_subspace(&mut rng, f, 4);
            let y = random_fp_subspace(&mut rng, f, 4);
            assert!(x.contains(&x));
            assert!(full.contains(&x));
            if x.contains(&y) && y.contains(&x) {
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn lattice_laws() {
        let mut rng = SplitMix64::new(34);
        let f = f2();
        for _ in 0..150 {
            let x = random_fp_subspace(&mut rng, f, 4);
            let y = random_fp_subspace(&mut rng, f, 4);
            let z = random_fp_subspace(&mut rng, f, 4);
            // Commutativity.
            assert_eq!(x.sum(&y).unwrap(), y.sum(&x).unwrap());
            assert_eq!(x.intersect(&y).unwrap(), y.intersect(&x).unwrap());
            // Associativity.
            assert_eq!(
                x.sum(&y).unwrap().sum(&z).unwrap(),
                x.sum(&y.sum(&z).unwrap()).unwrap()
            );
            assert_eq!(
                x.intersect(&y).unwrap().intersect(&z).unwrap(),
                x.intersect(&y.intersect(&z).unwrap()).unwrap()
            );
            // Absorption.
            assert_eq!(x.sum(&x.intersect(&y).unwrap()).unwrap(), x);
            assert_eq!(x.intersect(&x.sum(&y).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn modularity() {
        let mut rng = SplitMix64::new(35);
        let f = f2();
        for _ in 0..150 {
            let x = random_fp_subspace(&mut rng, f, 4);
            let y = random_fp_subspace(&mut rng, f, 4);
            let z = x.sum(&random_fp_subspace(&mut rng, f, 4)).unwrap(); // X ⊆ Z
            let lhs = x.sum(&y.intersect(&z).unwrap()).unwrap();
            let rhs = x.sum(&y).unwrap().intersect(&z).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn annihilator_duality() {
        let f = f2();
        assert_eq!(Subspace::zero(f, 3).annihilator(), Subspace::full(f, 3));
        let e1 = fp_span(f, 3, &[&unit(3, 0)]);
        assert_eq!(
            e1.annihilator(),
            fp_span(f, 3, &[&unit(3, 1), &unit(3, 2)])
        );

        let mut rng = SplitMix64::new(36);
        for _ in 0..200 {
            let x = random_fp_subspace(&mut rng, f, 5);
            let ann = x.annihilator();
            assert_eq!(ann.dim(), 5 - x.dim());
            assert_eq!(ann.annihilator(), x);
        }
        // Order reversal.
        for _ in 0..100 {
            let x = random_fp_subspace(&mut rng, f, 5);
            let y = x.sum(&random_fp_subspace(&mut rng, f, 5)).unwrap();
            assert!(x.annihilator().contains(&y.annihilator()));
        }
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(4, 2, 3), BigUint::from(130u32));
        assert_eq!(gaussian_binomial(5, 2, 2), BigUint::from(155u32));
        assert_eq!(gaussian_binomial(4, 0, 2), BigUint::from(1u32));
        assert_eq!(gaussian_binomial(3, 1, 2), BigUint::from(7u32));
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free() {
        // Independent oracle: RREF every k x n matrix over GF(p) and count
        // the distinct full-rank row spaces.
        fn brute_force(n: usize, k: usize, p: u64) -> HashSet<Subspace<PrimeField>> {
            let f = PrimeField::new(p).unwrap();
            let mut seen = HashSet::new();
            let total = (p as u128).pow((n * k) as u32);
            for code in 0..total {
                let mut c = code;
                let mut rows = Vec::with_capacity(k);
                for _ in 0..k {
                    let mut row = Vec::with_capacity(n);
                    for _ in 0..n {
                        row.push((c % p as u128) as u64);
                        c /= p as u128;
                    }
                    rows.push(row);
                }
                let s = Subspace::span(f, n, &rows).unwrap();
                if s.dim() == k {
                    seen.insert(s);
                }
            }
            seen
        }

        for (n, k, p, expect) in [(4, 2, 2u64, 35usize), (4, 2, 3, 130)] {
            let f = PrimeField::new(p).unwrap();
            let listed = enumerate_subspaces(n, k, f).unwrap();
            assert_eq!(listed.len(), expect);
            let set: HashSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), expect, "enumeration has duplicates");
            assert_eq!(set, brute_force(n, k, p));
            assert!(listed.iter().all(|s| s.dim() == k));
            // Deterministic order.
            assert_eq!(listed, enumerate_subspaces(n, k, f).unwrap());
        }

        let f = f2();
        let zero_grassmannian = enumerate_subspaces(4, 0, f).unwrap();
        assert_eq!(zero_grassmannian, vec![Subspace::zero(f, 4)]);
    }

    #[test]
    fn enumeration_cap() {
        // [20 choose 10]_2 is astronomically larger than the cap.
        let f = f2();
        assert!(matches!(
            enumerate_subspaces(20, 10, f),
            Err(Error::SizeCapExceeded(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let f = PrimeField::new(3).unwrap();
        let s = fp_span(f, 4, &[&[1, 2, 0, 1], &[0, 0, 1, 2]]);
        let j = s.to_json();
        assert_eq!(Subspace::from_json(f, &j).unwrap(), s);
        assert!(Subspace::from_json(PrimeField::new(5).unwrap(), &j).is_err());
    }
}
