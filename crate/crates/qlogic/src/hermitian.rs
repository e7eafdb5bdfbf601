//! The Hermitian structure on Q(i)^n and the subspace logic it carries.
//!
//! The form is `<x,y> = sum_i x_i * conj(y_i)` — conjugate-linear in the
//! *second* argument, a convention fixed once here and used by every adjoint
//! and unitarity test downstream. Positive-definiteness holds exactly:
//! `<x,x>` is a positive rational for `x != 0`, so `X ∩ X^perp = 0` always.
//!
//! On top of the form live orthocomplements, projections, the compatibility
//! relation (computed by two independent routes that must agree), the
//! `Z_1..Z_4` decomposition of a compatible pair, and `{X,Y}^cc` — the
//! double commutant, computed from the structure theorem as the set of
//! orthogonal sums of the nonzero pieces. Orthogonal bases are never
//! normalized: unit vectors would need square roots, which leave Q(i).

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{rat, GaussianRational, GaussianRationals, Rational};
use crate::subspace::{Subspace, SubspaceJson};

pub type GMatrix = Matrix<GaussianRationals>;
pub type GSubspace = Subspace<GaussianRationals>;
pub type GVector = Vec<GaussianRational>;

/// Q(i)^n with the standard positive-definite Hermitian form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HermitianSpace {
    dim: usize,
}

/// A projection: the exactly idempotent self-adjoint matrix onto a subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Projection {
    matrix: GMatrix,
    image: GSubspace,
}

impl Projection {
    pub fn matrix(&self) -> &GMatrix {
        &self.matrix
    }

    pub fn image(&self) -> &GSubspace {
        &self.image
    }
}

/// The four mutually orthogonal pieces of a pair:
/// `Z1 = X ∩ Y`, `Z2 = X^perp ∩ Y`, `Z3 = X ∩ Y^perp`, `Z4 = X^perp ∩ Y^perp`.
/// For a compatible pair they sum to the whole space, with `X = Z1 + Z3`
/// and `Y = Z1 + Z2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompatDecomposition {
    pub z1: GSubspace,
    pub z2: GSubspace,
    pub z3: GSubspace,
    pub z4: GSubspace,
}

impl CompatDecomposition {
    pub fn pieces(&self) -> [&GSubspace; 4] {
        [&self.z1, &self.z2, &self.z3, &self.z4]
    }

    pub fn nonzero_count(&self) -> usize {
        self.pieces().iter().filter(|z| !z.is_zero()).count()
    }

    pub fn total_dim(&self) -> usize {
        self.pieces().iter().map(|z| z.dim()).sum()
    }
}

impl HermitianSpace {
    pub fn new(dim: usize) -> Self {
        HermitianSpace { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero_subspace(&self) -> GSubspace {
        Subspace::zero(GaussianRationals, self.dim)
    }

    pub fn full_subspace(&self) -> GSubspace {
        Subspace::full(GaussianRationals, self.dim)
    }

    pub fn standard_basis(&self) -> Vec<GVector> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        if i == j {
                            GaussianRational::one()
                        } else {
                            GaussianRational::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `<x,y> = sum_i x_i conj(y_i)`.
    pub fn inner(&self, x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
        assert_eq!(x.len(), self.dim, "vector has wrong ambient dimension");
        assert_eq!(y.len(), self.dim, "vector has wrong ambient dimension");
        let mut acc = GaussianRational::zero();
        for (a, b) in x.iter().zip(y) {
            acc = acc.add(&a.mul(&b.conj()));
        }
        acc
    }

    /// `<x,x>` as an exact rational; positive for `x != 0`.
    pub fn norm_sqr(&self, x: &[GaussianRational]) -> Rational {
        let v = self.inner(x, x);
        debug_assert!(v.is_real());
        v.re
    }

    /// All vectors orthogonal to `x`: the kernel of the conjugated basis.
    pub fn orthocomplement(&self, x: &GSubspace) -> GSubspace {
        assert_eq!(x.ambient(), self.dim);
        Subspace::from_matrix(&x.basis().conj().kernel())
    }

    pub fn is_orthogonal(&self, x: &GSubspace, y: &GSubspace) -> bool {
        self.orthocomplement(y).contains(x)
    }

    /// The unique matrix with `P^2 = P`, `P* = P` and image `x`, built as
    /// `B^T (conj(B) B^T)^{-1} conj(B)` for the basis matrix `B`; the Gram
    /// matrix is invertible exactly because the form is positive-definite.
    pub fn projection_of(&self, x: &GSubspace) -> Projection {
        assert_eq!(x.ambient(), self.dim);
        if x.is_zero() {
            return Projection {
                matrix: Matrix::zero(GaussianRationals, self.dim, self.dim),
                image: x.clone(),
            };
        }
        let b = x.basis();
        let bt = b.transpose();
        let bc = b.conj();
        let gram = bc.mul(&bt).expect("shapes agree");
        let gram_inv = gram.inverse().expect("Gram matrix of a basis is invertible");
        let p = bt
            .mul(&gram_inv)
            .and_then(|m| m.mul(&bc))
            .expect("shapes agree");
        debug_assert_eq!(p.mul(&p).unwrap(), p, "projection must be idempotent");
        debug_assert_eq!(p.conj_transpose(), p, "projection must be self-adjoint");
        Projection {
            matrix: p,
            image: x.clone(),
        }
    }

    /// Whether the projections onto X and Y satisfy `P_X P_Y = P_Y P_X = 0`.
    pub fn projections_annihilate(&self, x: &GSubspace, y: &GSubspace) -> bool {
        let px = self.projection_of(x).matrix;
        let py = self.projection_of(y).matrix;
        px.mul(&py).unwrap().is_zero() && py.mul(&px).unwrap().is_zero()
    }

    /// Compatibility via the decomposition criterion: `(X∩Y)^perp ∩ X` and
    /// `(X∩Y)^perp ∩ Y` are orthogonal.
    pub fn compatible_by_decomposition(&self, x: &GSubspace, y: &GSubspace) -> bool {
        let w = self.orthocomplement(&x.intersect(y).expect("same ambient"));
        let xr = w.intersect(x).expect("same ambient");
        let yr = w.intersect(y).expect("same ambient");
        self.is_orthogonal(&xr, &yr)
    }

    /// Compatibility via commuting projections: `P_X P_Y = P_Y P_X`.
    pub fn compatible_by_projections(&self, x: &GSubspace, y: &GSubspace) -> bool {
        let px = self.projection_of(x).matrix;
        let py = self.projection_of(y).matrix;
        px.mul(&py).unwrap() == py.mul(&px).unwrap()
    }

    /// Both compatibility criteria, which are oracles for each other; a
    /// disagreement is an implementation bug and panics.
    pub fn is_compatible(&self, x: &GSubspace, y: &GSubspace) -> bool {
        let by_decomposition = self.compatible_by_decomposition(x, y);
        let by_projections = self.compatible_by_projections(x, y);
        assert_eq!(
            by_decomposition, by_projections,
            "compatibility criteria disagree on {x:?} and {y:?}"
        );
        by_decomposition
    }

    pub fn decompose(&self, x: &GSubspace, y: &GSubspace) -> CompatDecomposition {
        let xp = self.orthocomplement(x);
        let yp = self.orthocomplement(y);
        CompatDecomposition {
            z1: x.intersect(y).expect("same ambient"),
            z2: xp.intersect(y).expect("same ambient"),
            z3: x.intersect(&yp).expect("same ambient"),
            z4: xp.intersect(&yp).expect("same ambient"),
        }
    }

    /// `{X,Y}^cc` for a compatible pair: all orthogonal sums of the pieces
    /// `Z_1..Z_4`, deduplicated. Its size is exactly `2^k` with `k` the
    /// number of nonzero pieces.
    pub fn double_commutant_set(&self, x: &GSubspace, y: &GSubspace) -> Result<Vec<GSubspace>> {
        if x.is_zero() || x.is_full() || y.is_zero() || y.is_full() {
            return Err(Error::DegeneratePair(
                "X and Y must differ from 0 and the whole space".into(),
            ));
        }
        if x == y {
            return Err(Error::DegeneratePair("X and Y must be distinct".into()));
        }
        if !self.is_compatible(x, y) {
            return Err(Error::NotCompatible);
        }
        let d = self.decompose(x, y);
        let pieces = d.pieces();
        let mut out: Vec<GSubspace> = Vec::with_capacity(16);
        for mask in 0..16u32 {
            let mut acc = self.zero_subspace();
            for (i, z) in pieces.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    acc = acc.sum(z).expect("same ambient");
                }
            }
            if !out.contains(&acc) {
                out.push(acc);
            }
        }
        debug_assert_eq!(out.len(), 1 << d.nonzero_count());
        Ok(out)
    }

    /// The members of `{X,Y}^cc` of dimension `k`, for distinct compatible
    /// `X, Y` in the Grassmannian G_k.
    pub fn cc_grassmann_members(
        &self,
        x: &GSubspace,
        y: &GSubspace,
        k: usize,
    ) -> Result<Vec<GSubspace>> {
        if x.dim() != k || y.dim() != k {
            return Err(Error::DimensionMismatch(format!(
                "expected two {k}-dimensional subspaces, got {} and {}",
                x.dim(),
                y.dim()
            )));
        }
        let all = self.double_commutant_set(x, y)?;
        Ok(all.into_iter().filter(|s| s.dim() == k).collect())
    }

    /// Pairwise compatibility of a family.
    pub fn is_compatible_set(&self, family: &[GSubspace]) -> bool {
        for i in 0..family.len() {
            for j in i + 1..family.len() {
                if family[i] != family[j] && !self.is_compatible(&family[i], &family[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Gram–Schmidt without normalization: the output spans the same space,
    /// is pairwise orthogonal, and stays inside Q(i) (the projection
    /// coefficients are `<v,u>/<u,u>`). Each output vector is rescaled to a
    /// primitive integer vector — orthogonality and spans are insensitive to
    /// scaling, and small coordinates keep later Gram inverses cheap.
    /// Panics on dependent input rows.
    pub fn gram_schmidt(&self, rows: &[GVector]) -> Vec<GVector> {
        let mut out: Vec<GVector> = Vec::with_capacity(rows.len());
        for v in rows {
            let mut u = v.clone();
            for prev in &out {
                let coeff = self
                    .inner(v, prev)
                    .div(&self.inner(prev, prev))
                    .expect("previous vectors are nonzero");
                for (ui, pi) in u.iter_mut().zip(prev) {
                    *ui = ui.sub(&coeff.mul(pi));
                }
            }
            assert!(
                u.iter().any(|c| !c.is_zero()),
                "input rows must be linearly independent"
            );
            reduce_to_primitive(&mut u);
            out.push(u);
        }
        out
    }

    /// An orthogonal basis of the whole space adapted to a compatible
    /// family: every family member is the span of a subset of the output.
    ///
    /// The joint sign-pattern refinement: starting from the whole space,
    /// each member X splits every cell C into `C ∩ X` and `C ∩ X^perp`
    /// (zero cells pruned), which realizes every nonzero intersection
    /// `∩_X X^{eps(X)}` over sign patterns `eps`. An unnormalized
    /// Gram–Schmidt inside each cell yields the frame.
    pub fn extend_to_orthogonal_frame(&self, family: &[GSubspace]) -> Result<Vec<GVector>> {
        for s in family {
            if s.ambient() != self.dim {
                return Err(Error::DimensionMismatch(
                    "family member has wrong ambient dimension".into(),
                ));
            }
        }
        if !self.is_compatible_set(family) {
            return Err(Error::NotCompatibleSet);
        }
        let mut cells = vec![self.full_subspace()];
        for x in family {
            let xp = self.orthocomplement(x);
            let mut next = Vec::with_capacity(cells.len() * 2);
            for cell in &cells {
                for half in [cell.intersect(x)?, cell.intersect(&xp)?] {
                    if !half.is_zero() {
                        next.push(half);
                    }
                }
            }
            cells = next;
        }
        let mut frame: Vec<GVector> = Vec::with_capacity(self.dim);
        for cell in &cells {
            frame.extend(self.gram_schmidt(&cell.basis_rows()));
        }
        assert_eq!(
            frame.len(),
            self.dim,
            "sign-pattern cells of a compatible family must fill the space"
        );
        // Validate: pairwise orthogonal, and every member spanned by a subset.
        for i in 0..frame.len() {
            for j in i + 1..frame.len() {
                assert!(self.inner(&frame[i], &frame[j]).is_zero());
            }
        }
        for x in family {
            let inside: Vec<GVector> = frame
                .iter()
                .filter(|v| x.contains_vector(v))
                .cloned()
                .collect();
            let spanned = Subspace::span(GaussianRationals, self.dim, &inside)?;
            assert_eq!(&spanned, x, "member not spanned by its frame vectors");
        }
        Ok(frame)
    }
}

/// `S = Id - 2P`: the unitary self-adjoint involution associated to a
/// nonzero projection. Panics on the zero projection, whose `S` would be
/// the identity — not an involution.
pub fn involution_of(p: &Projection) -> GMatrix {
    assert!(
        !p.image().is_zero(),
        "the involution of the zero projection is the identity"
    );
    let n = p.matrix().rows();
    let id = Matrix::identity(GaussianRationals, n);
    let two = GaussianRational::from_parts(2, 0);
    let s = id.sub(&p.matrix().scale(&two)).expect("same shape");
    debug_assert!(s.mul(&s).unwrap().is_identity());
    debug_assert_eq!(s.conj_transpose(), s);
    s
}

/// Outcome of one axiom sweep: pass count plus full counterexamples.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passes: u64,
    pub failures: Vec<AxiomWitness>,
}

#[derive(Clone, Debug)]
pub struct AxiomWitness {
    pub axiom: &'static str,
    pub subspaces: Vec<SubspaceJson>,
    pub detail: String,
}

/// Checks the logic axioms and the De Morgan laws on the given samples:
/// order reversal and orthomodularity on the nested pairs, double
/// complementation and `X ∩ X^perp = 0` on the singles, De Morgan on the
/// pairs and the modular law on the triples (third component forced to an
/// overspace of the first). Failures come back as witnesses, not errors.
pub fn verify_logic_axioms(
    space: &HermitianSpace,
    singles: &[GSubspace],
    nested: &[(GSubspace, GSubspace)],
    pairs: &[(GSubspace, GSubspace)],
    triples: &[(GSubspace, GSubspace, GSubspace)],
) -> Vec<AxiomCheck> {
    fn sweep<T>(
        axiom: &'static str,
        items: &[T],
        ok: impl Fn(&T) -> bool,
        witness: impl Fn(&T) -> Vec<SubspaceJson>,
    ) -> AxiomCheck {
        let mut passes = 0;
        let mut failures = Vec::new();
        for item in items {
            if ok(item) {
                passes += 1;
            } else {
                failures.push(AxiomWitness {
                    axiom,
                    subspaces: witness(item),
                    detail: String::new(),
                });
            }
        }
        AxiomCheck { axiom, passes, failures }
    }

    let w1 = |x: &GSubspace| vec![x.to_json()];
    let w2 = |p: &(GSubspace, GSubspace)| vec![p.0.to_json(), p.1.to_json()];
    let w3 =
        |t: &(GSubspace, GSubspace, GSubspace)| vec![t.0.to_json(), t.1.to_json(), t.2.to_json()];

    vec![
        sweep(
            "order-reversal",
            nested,
            |(x, y)| space.orthocomplement(x).contains(&space.orthocomplement(y)),
            w2,
        ),
        sweep(
            "double-complement",
            singles,
            |x| &space.orthocomplement(&space.orthocomplement(x)) == x,
            w1,
        ),
        sweep(
            "meet-with-complement-is-zero",
            singles,
            |x| {
                x.intersect(&space.orthocomplement(x))
                    .expect("same ambient")
                    .is_zero()
            },
            w1,
        ),
        sweep(
            "orthomodularity",
            nested,
            |(x, y)| {
                let rhs = x
                    .sum(&space.orthocomplement(x).intersect(y).expect("same ambient"))
                    .expect("same ambient");
                &rhs == y
            },
            w2,
        ),
        sweep(
            "de-morgan-meet",
            pairs,
            |(x, y)| {
                space.orthocomplement(&x.intersect(y).expect("same ambient"))
                    == space
                        .orthocomplement(x)
                        .sum(&space.orthocomplement(y))
                        .expect("same ambient")
            },
            w2,
        ),
        sweep(
            "de-morgan-join",
            pairs,
            |(x, y)| {
                space.orthocomplement(&x.sum(y).expect("same ambient"))
                    == space
                        .orthocomplement(x)
                        .intersect(&space.orthocomplement(y))
                        .expect("same ambient")
            },
            w2,
        ),
        sweep(
            "modular-law",
            triples,
            |(x, y, z)| {
                let z = x.sum(z).expect("same ambient");
                let lhs = x
                    .sum(&y.intersect(&z).expect("same ambient"))
                    .expect("same ambient");
                let rhs = x
                    .sum(y)
                    .expect("same ambient")
                    .intersect(&z)
                    .expect("same ambient");
                lhs == rhs
            },
            w3,
        ),
    ]
}

/// Rescales a nonzero vector by a positive rational so that all real and
/// imaginary parts become coprime integers.
pub fn reduce_to_primitive(v: &mut GVector) {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;

    let mut denom_lcm = BigInt::from(1);
    for c in v.iter() {
        denom_lcm = denom_lcm.lcm(c.re.denom());
        denom_lcm = denom_lcm.lcm(c.im.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for c in v.iter() {
        numer_gcd = numer_gcd.gcd(&(c.re.numer() * &denom_lcm / c.re.denom()));
        numer_gcd = numer_gcd.gcd(&(c.im.numer() * &denom_lcm / c.im.denom()));
    }
    if numer_gcd.is_zero() {
        return;
    }
    let scale = GaussianRational::new(Rational::new(denom_lcm, numer_gcd), rat(0));
    for c in v.iter_mut() {
        *c = c.mul(&scale);
    }
}

/// If `m == c * Id` for a rational `c`, returns `c`.
pub fn real_scalar_multiple_of_identity(m: &GMatrix) -> Option<Rational> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Some(rat(1));
    }
    let c = m.at(0, 0).clone();
    if !c.is_real() {
        return None;
    }
    let zero = GaussianRational::zero();
    for r in 0..n {
        for col in 0..n {
            let want = if r == col { &c } else { &zero };
            if m.at(r, col) != want {
                return None;
            }
        }
    }
    Some(c.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::sample;
    use crate::scalar::ratio;
    use num_traits::Signed;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts(re, im)
    }

    fn gv(coords: &[(i64, i64)]) -> GVector {
        coords.iter().map(|&(a, b)| g(a, b)).collect()
    }

    fn gspan(n: usize, rows: &[GVector]) -> GSubspace {
        Subspace::span(GaussianRationals, n, rows).unwrap()
    }

    fn e(n: usize, i: usize) -> GVector {
        let mut v = vec![GaussianRational::zero(); n];
        v[i] = GaussianRational::one();
        v
    }

    #[test]
    fn inner_product_basics() {
        let h = HermitianSpace::new(2);
        assert!(h.inner(&e(2, 0), &e(2, 1)).is_zero());
        let v = gv(&[(1, 1), (0, 0)]);
        assert_eq!(h.inner(&v, &v), g(2, 0));
    }

    #[test]
    fn inner_product_is_hermitian_and_positive() {
        let h = HermitianSpace::new(4);
        let mut rng = SplitMix64::new(41);
        for _ in 0..500 {
            let x = sample::gauss_vector(&mut rng, 4);
            let y = sample::gauss_vector(&mut rng, 4);
            assert_eq!(h.inner(&x, &y).conj(), h.inner(&y, &x));
            if x.iter().any(|c| !c.is_zero()) {
                assert!(h.norm_sqr(&x).is_positive());
            }
        }
    }

    #[test]
    fn orthocomplement_examples() {
        let h = HermitianSpace::new(2);
        assert_eq!(h.orthocomplement(&h.zero_subspace()), h.full_subspace());
        let x = gspan(2, &[gv(&[(1, 0), (1, 0)])]);
        let expect = gspan(2, &[gv(&[(1, 0), (-1, 0)])]);
        assert_eq!(h.orthocomplement(&x), expect);
    }

    #[test]
    fn orthocomplement_is_an_involution() {
        let mut rng = SplitMix64::new(42);
        for n in 2..=6 {
            let h = HermitianSpace::new(n);
            for _ in 0..50 {
                let x = sample::gauss_subspace(&mut rng, n);
                assert_eq!(h.orthocomplement(&h.orthocomplement(&x)), x);
                assert!(x.intersect(&h.orthocomplement(&x)).unwrap().is_zero());
                assert_eq!(h.orthocomplement(&x).dim(), n - x.dim());
            }
        }
    }

    #[test]
    fn projection_examples() {
        let h = HermitianSpace::new(2);
        assert!(h.projection_of(&h.full_subspace()).matrix().is_identity());

        let x = gspan(2, &[gv(&[(1, 0), (1, 0)])]);
        let p = h.projection_of(&x);
        let half = GaussianRational::new(ratio(1, 2), rat(0));
        let expect = Matrix::construct(GaussianRationals, 2, 2, |_, _| half.clone());
        assert_eq!(p.matrix(), &expect);
    }

    #[test]
    fn projection_image_and_kernel() {
        let mut rng = SplitMix64::new(43);
        for _ in 0..200 {
            let n = rng.int_in(2, 5) as usize;
            let h = HermitianSpace::new(n);
            let x = sample::gauss_subspace(&mut rng, n);
            let p = h.projection_of(&x);
            for row in x.basis_rows() {
                assert_eq!(p.matrix().mul_vec(&row).unwrap(), row);
            }
            assert_eq!(p.matrix().rank(), x.dim());
            let kernel = Subspace::from_matrix(&p.matrix().kernel());
            assert_eq!(kernel, h.orthocomplement(&x));
        }
    }

    #[test]
    fn involution_examples() {
        let h = HermitianSpace::new(2);
        let full = h.projection_of(&h.full_subspace());
        assert_eq!(
            involution_of(&full),
            Matrix::identity(GaussianRationals, 2).neg()
        );

        let p = h.projection_of(&gspan(2, &[e(2, 0)]));
        let expect = Matrix::from_rows(
            GaussianRationals,
            vec![gv(&[(-1, 0), (0, 0)]), gv(&[(0, 0), (1, 0)])],
        )
        .unwrap();
        assert_eq!(involution_of(&p), expect);

        let mut rng = SplitMix64::new(44);
        let mut built = 0;
        while built < 100 {
            let n = rng.int_in(2, 5) as usize;
            let h = HermitianSpace::new(n);
            let x = sample::gauss_subspace(&mut rng, n);
            if x.is_zero() {
                continue;
            }
            built += 1;
            let s = involution_of(&h.projection_of(&x));
            assert!(s.mul(&s).unwrap().is_identity());
            assert!(s.conj_transpose().mul(&s).unwrap().is_identity());
        }
    }

    #[test]
    fn orthogonality_agrees_with_projection_products() {
        let h3 = HermitianSpace::new(3);
        assert!(h3.is_orthogonal(&gspan(3, &[e(3, 0)]), &gspan(3, &[e(3, 1)])));
        assert!(!h3.is_orthogonal(
            &gspan(3, &[e(3, 0)]),
            &gspan(3, &[gv(&[(1, 0), (1, 0), (0, 0)])])
        ));

        let mut rng = SplitMix64::new(45);
        for _ in 0..500 {
            let n = rng.int_in(2, 4) as usize;
            let h = HermitianSpace::new(n);
            let x = sample::gauss_subspace(&mut rng, n);
            let y = sample::gauss_subspace(&mut rng, n);
            assert_eq!(h.is_orthogonal(&x, &y), h.projections_annihilate(&x, &y));
        }
    }

    #[test]
    fn compatibility_two_routes_and_examples() {
        let h2 = HermitianSpace::new(2);
        let x = gspan(2, &[gv(&[(1, 0), (1, 0)])]);
        let y = gspan(2, &[e(2, 0)]);
        // The explicit 2x2 projection products differ, so the pair is
        // incompatible.
        let px = h2.projection_of(&x).matrix().clone();
        let py = h2.projection_of(&y).matrix().clone();
        let half = GaussianRational::new(ratio(1, 2), rat(0));
        let zero = GaussianRational::zero();
        let pxpy = Matrix::from_rows(
            GaussianRationals,
            vec![vec![half.clone(), zero.clone()], vec![half.clone(), zero.clone()]],
        )
        .unwrap();
        let pypx = Matrix::from_rows(
            GaussianRationals,
            vec![vec![half.clone(), half.clone()], vec![zero.clone(), zero.clone()]],
        )
        .unwrap();
        assert_eq!(px.mul(&py).unwrap(), pxpy);
        assert_eq!(py.mul(&px).unwrap(), pypx);
        assert!(!h2.is_compatible(&x, &y));

        // Nested and orthogonal pairs are compatible.
        let mut rng = SplitMix64::new(46);
        for _ in 0..100 {
            let n = rng.int_in(2, 5) as usize;
            let h = HermitianSpace::new(n);
            let a = sample::gauss_subspace(&mut rng, n);
            let b = a.sum(&sample::gauss_subspace(&mut rng, n)).unwrap();
            assert!(h.is_compatible(&a, &b));
            assert!(h.is_compatible(&a, &h.orthocomplement(&a)));
        }
    }

    #[test]
    fn compatibility_invariant_under_complementing_one_side() {
        let mut rng = SplitMix64::new(47);
        for _ in 0..500 {
            let n = rng.int_in(2, 4) as usize;
            let h = HermitianSpace::new(n);
            let x = sample::gauss_subspace(&mut rng, n);
            let y = if rng.coin() {
                sample::gauss_subspace(&mut rng, n)
            } else {
                sample::compatible_partner(&mut rng, &h, &x)
            };
            assert_eq!(
                h.is_compatible(&x, &y),
                h.is_compatible(&x, &h.orthocomplement(&y))
            );
        }
    }

    #[test]
    fn decomposition_examples() {
        let h3 = HermitianSpace::new(3);
        let x = gspan(3, &[e(3, 0)]);
        let d = h3.decompose(&x, &x);
        assert_eq!(d.z1, x);
        assert!(d.z2.is_zero() && d.z3.is_zero());
        assert_eq!(d.z4, h3.orthocomplement(&x));

        let y = gspan(3, &[e(3, 1)]);
        let d = h3.decompose(&x, &y);
        assert_eq!([d.z1.dim(), d.z2.dim(), d.z3.dim(), d.z4.dim()], [0, 1, 1, 1]);
    }

    #[test]
    fn compatible_pairs_decompose_fully() {
        let mut rng = SplitMix64::new(48);
        for _ in 0..300 {
            let n = rng.int_in(2, 6) as usize;
            let h = HermitianSpace::new(n);
            let (x, y) = sample::compatible_pair(&mut rng, &h);
            assert!(h.is_compatible(&x, &y));
            let d = h.decompose(&x, &y);
            assert_eq!(d.total_dim(), n);
            assert_eq!(d.z1.sum(&d.z3).unwrap(), x);
            assert_eq!(d.z1.sum(&d.z2).unwrap(), y);
            let pieces = d.pieces();
            for i in 0..4 {
                for j in i + 1..4 {
                    assert!(h.is_orthogonal(pieces[i], pieces[j]));
                }
            }
            // The projection onto X ∩ Y is the product of the commuting
            // projections.
            let px = h.projection_of(&x).matrix().clone();
            let py = h.projection_of(&y).matrix().clone();
            assert_eq!(px.mul(&py).unwrap(), h.projection_of(&d.z1).matrix().clone());
        }
    }

    #[test]
    fn double_commutant_cardinalities() {
        let h3 = HermitianSpace::new(3);
        let x = gspan(3, &[e(3, 0)]);
        let xp = h3.orthocomplement(&x);
        assert_eq!(h3.double_commutant_set(&x, &xp).unwrap().len(), 4);

        let y = gspan(3, &[e(3, 0), e(3, 1)]);
        assert_eq!(h3.double_commutant_set(&x, &y).unwrap().len(), 8);

        let h5 = HermitianSpace::new(5);
        let x5 = gspan(5, &[e(5, 0), e(5, 1)]);
        let y5 = gspan(5, &[e(5, 1), e(5, 2)]);
        assert_eq!(h5.double_commutant_set(&x5, &y5).unwrap().len(), 16);

        assert!(matches!(
            h3.double_commutant_set(&x, &x),
            Err(Error::DegeneratePair(_))
        ));
        assert!(matches!(
            h3.double_commutant_set(&x, &h3.full_subspace()),
            Err(Error::DegeneratePair(_))
        ));
        let skew = gspan(3, &[gv(&[(1, 0), (1, 0), (0, 0)])]);
        let other = gspan(3, &[e(3, 0), e(3, 2)]);
        assert!(!h3.is_compatible(&skew, &other));
        assert!(matches!(
            h3.double_commutant_set(&skew, &other),
            Err(Error::NotCompatible)
        ));
    }

    #[test]
    fn double_commutant_members_commute_with_sampled_common_elements() {
        // Finite-sample check of the definitional reading: every member of
        // {X,Y}^cc must be compatible with every sampled subspace that is
        // compatible with both X and Y.
        let mut rng = SplitMix64::new(49);
        let h = HermitianSpace::new(4);
        let x = gspan(4, &[e(4, 0), e(4, 1)]);
        let y = gspan(4, &[e(4, 1), e(4, 2)]);
        let cc = h.double_commutant_set(&x, &y).unwrap();
        let mut tested = 0;
        for _ in 0..400 {
            let c = sample::gauss_subspace(&mut rng, 4);
            if h.is_compatible(&c, &x) && h.is_compatible(&c, &y) {
                tested += 1;
                for w in &cc {
                    assert!(h.is_compatible(w, &c));
                }
            }
        }
        assert!(tested > 0, "sampler never produced a common compatible element");
    }

    #[test]
    fn cc_grassmann_member_dichotomy() {
        let h7 = HermitianSpace::new(7);
        // k = 2 with one-dimensional intersection: three members, the third
        // being (X ∩ Y^perp) + (Y ∩ X^perp).
        let x = gspan(7, &[e(7, 0), e(7, 1)]);
        let y = gspan(7, &[e(7, 1), e(7, 2)]);
        let members = h7.cc_grassmann_members(&x, &y, 2).unwrap();
        assert_eq!(members.len(), 3);
        let third = x
            .intersect(&h7.orthocomplement(&y))
            .unwrap()
            .sum(&y.intersect(&h7.orthocomplement(&x)).unwrap())
            .unwrap();
        assert!(members.contains(&x) && members.contains(&y) && members.contains(&third));

        // k = 2 with zero intersection: exactly {X, Y}.
        let y2 = gspan(7, &[e(7, 2), e(7, 3)]);
        let members = h7.cc_grassmann_members(&x, &y2, 2).unwrap();
        assert_eq!(members.len(), 2);

        // Odd k: always exactly {X, Y}.
        let h10 = HermitianSpace::new(10);
        let x = gspan(10, &[e(10, 0), e(10, 1), e(10, 2)]);
        let y = gspan(10, &[e(10, 1), e(10, 2), e(10, 3)]);
        assert_eq!(h10.cc_grassmann_members(&x, &y, 3).unwrap().len(), 2);
    }

    #[test]
    fn compatible_sets_and_frames() {
        let h3 = HermitianSpace::new(3);
        let family = vec![gspan(3, &[e(3, 0)]), gspan(3, &[e(3, 1), e(3, 2)])];
        assert!(h3.is_compatible_set(&family));
        let frame = h3.extend_to_orthogonal_frame(&family).unwrap();
        assert_eq!(frame.len(), 3);

        let h2 = HermitianSpace::new(2);
        let bad = vec![gspan(2, &[gv(&[(1, 0), (1, 0)])]), gspan(2, &[e(2, 0)])];
        assert!(!h2.is_compatible_set(&bad));
        assert!(matches!(
            h2.extend_to_orthogonal_frame(&bad),
            Err(Error::NotCompatibleSet)
        ));

        assert!(h3.is_compatible_set(&[]));
        assert_eq!(
            h3.extend_to_orthogonal_frame(&[]).unwrap(),
            h3.standard_basis()
        );
    }

    #[test]
    fn frames_span_apartment_members() {
        let mut rng = SplitMix64::new(50);
        for _ in 0..40 {
            let h = HermitianSpace::new(6);
            let frame = sample::orthogonal_frame(&mut rng, 6);
            let family: Vec<GSubspace> =
                (0..5).map(|_| sample::frame_member(&mut rng, &frame)).collect();
            let out = h.extend_to_orthogonal_frame(&family).unwrap();
            assert_eq!(out.len(), 6);
        }
    }

    #[test]
    fn logic_axioms_hold_on_samples() {
        let mut rng = SplitMix64::new(51);
        let h = HermitianSpace::new(4);
        let singles: Vec<GSubspace> =
            (0..100).map(|_| sample::gauss_subspace(&mut rng, 4)).collect();
        let nested: Vec<(GSubspace, GSubspace)> = (0..100)
            .map(|_| {
                let x = sample::gauss_subspace(&mut rng, 4);
                let y = x.sum(&sample::gauss_subspace(&mut rng, 4)).unwrap();
                (x, y)
            })
            .collect();
        let pairs: Vec<(GSubspace, GSubspace)> = (0..100)
            .map(|_| {
                (
                    sample::gauss_subspace(&mut rng, 4),
                    sample::gauss_subspace(&mut rng, 4),
                )
            })
            .collect();
        let triples: Vec<(GSubspace, GSubspace, GSubspace)> = (0..100)
            .map(|_| {
                (
                    sample::gauss_subspace(&mut rng, 4),
                    sample::gauss_subspace(&mut rng, 4),
                    sample::gauss_subspace(&mut rng, 4),
                )
            })
            .collect();
        for check in verify_logic_axioms(&h, &singles, &nested, &pairs, &triples) {
            assert!(
                check.failures.is_empty(),
                "axiom {} failed with {} witnesses",
                check.axiom,
                check.failures.len()
            );
        }
    }
}
