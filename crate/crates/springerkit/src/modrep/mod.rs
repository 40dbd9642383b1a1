//! Modules over group algebras and over finite-dimensional
//! structure-constant algebras.
//!
//! Matrices act on column vectors and satisfy rho(ab) = rho(a) rho(b);
//! subspaces are handled as row bases in reduced echelon form. Randomized
//! routines (the meataxe and everything built on it) take an explicit seed
//! and are deterministic for a fixed seed.

mod meataxe;

pub use meataxe::{
    composition_factors, is_semisimple, is_simple, isotypic_decomposition, modules_isomorphic,
    simple_modules, simple_modules_isomorphic, IsotypicComponent, SimpleVerdict, Spinner,
};

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElem, Matrix};
use crate::grp::FiniteGroup;
use std::sync::Arc;

/// Modules above this dimension are rejected by the meataxe.
pub const DIMENSION_CAP: usize = 64;

/// Algebras above this dimension are rejected.
pub const ALGEBRA_CAP: usize = 64;

/// Owner of a module: a finite group or a structure-constant algebra.
#[derive(Clone, Debug)]
pub enum Owner {
    Group(FiniteGroup),
    Algebra(Arc<Algebra>),
}

impl PartialEq for Owner {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Owner::Group(a), Owner::Group(b)) => a == b,
            (Owner::Algebra(a), Owner::Algebra(b)) => {
                Arc::ptr_eq(a, b) || (a.field == b.field && a.structconst == b.structconst)
            }
            _ => false,
        }
    }
}
impl Eq for Owner {}

/// A finite-dimensional associative algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// structconst[i][j] holds the coefficients of b_i * b_j.
    structconst: Vec<Vec<Vec<FieldElem>>>,
    unit: Vec<FieldElem>,
}

impl Algebra {
    /// Validates associativity and finds the two-sided unit.
    pub fn new(field: &Field, structconst: Vec<Vec<Vec<FieldElem>>>) -> Result<Algebra> {
        let m = structconst.len();
        if m == 0 || m > ALGEBRA_CAP {
            return Err(Error::DimensionCap(m, ALGEBRA_CAP));
        }
        for row in &structconst {
            if row.len() != m || row.iter().any(|v| v.len() != m) {
                return Err(Error::NotAssociative("structure constants are not an m x m x m array".into()));
            }
            for v in row {
                if v.iter().any(|&c| !field.owns(c)) {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        // left-multiplication matrices: column j of L_i is b_i * b_j
        let left: Vec<Matrix> = (0..m)
            .map(|i| {
                let mut l = Matrix::zeros(field, m, m);
                for j in 0..m {
                    for k in 0..m {
                        l[(k, j)] = structconst[i][j][k];
                    }
                }
                l
            })
            .collect();
        // associativity: L_i L_j = sum_k c(i,j,k) L_k
        for i in 0..m {
            for j in 0..m {
                let lhs = left[i].mul(&left[j])?;
                let mut rhs = Matrix::zeros(field, m, m);
                for k in 0..m {
                    let c = structconst[i][j][k];
                    if field.is_zero(c) {
                        continue;
                    }
                    rhs = rhs.add(&left[k].scale(c))?;
                }
                if lhs != rhs {
                    return Err(Error::NotAssociative(format!("(b{i} b{j}) bk != b{i} (b{j} bk)")));
                }
            }
        }
        // two-sided unit: solve sum_i u_i c(i,j,k) = delta_jk, then verify
        // the right-hand side as well
        let mut sys = Matrix::zeros(field, m * m, m);
        let mut rhs = vec![field.zero(); m * m];
        for j in 0..m {
            for k in 0..m {
                for i in 0..m {
                    sys[(j * m + k, i)] = structconst[i][j][k];
                }
                rhs[j * m + k] = if j == k { field.one() } else { field.zero() };
            }
        }
        let unit = sys.solve(&rhs).ok_or(Error::NoUnit)?;
        for j in 0..m {
            for k in 0..m {
                let mut acc = field.zero();
                for i in 0..m {
                    acc = field.add(acc, field.mul(unit[i], structconst[j][i][k]));
                }
                let expect = if j == k { field.one() } else { field.zero() };
                if acc != expect {
                    return Err(Error::NoUnit);
                }
            }
        }
        Ok(Algebra { field: field.clone(), dim: m, structconst, unit })
    }

    /// The group algebra of a finite group, basis indexed by elements.
    pub fn group_algebra(group: &FiniteGroup, field: &Field) -> Result<Algebra> {
        let n = group.order();
        if n > ALGEBRA_CAP {
            return Err(Error::DimensionCap(n, ALGEBRA_CAP));
        }
        let structconst: Vec<Vec<Vec<FieldElem>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![field.zero(); n];
                        v[group.mul(i, j)] = field.one();
                        v
                    })
                    .collect()
            })
            .collect();
        Algebra::new(field, structconst)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_coords(&self) -> &[FieldElem] {
        &self.unit
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> FieldElem {
        self.structconst[i][j][k]
    }

    /// Coefficients of b_i * b_j.
    pub fn product_coords(&self, i: usize, j: usize) -> &[FieldElem] {
        &self.structconst[i][j]
    }

    /// The left regular module of the algebra over itself.
    pub fn regular_module(self: &Arc<Self>) -> GModule {
        let f = &self.field;
        let mats: Vec<Matrix> = (0..self.dim)
            .map(|i| {
                let mut l = Matrix::zeros(f, self.dim, self.dim);
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        l[(k, j)] = self.structconst[i][j][k];
                    }
                }
                l
            })
            .collect();
        GModule::from_parts_unchecked(Owner::Algebra(Arc::clone(self)), f.clone(), self.dim, mats)
    }
}

/// A module: a representation of a group by invertible matrices, or of an
/// algebra by arbitrary matrices.
#[derive(Clone)]
pub struct GModule {
    owner: Owner,
    field: Field,
    dim: usize,
    /// One matrix per group generator, or per algebra basis element.
    gen_mats: Vec<Matrix>,
    /// Group case: matrices for every element, in element order.
    elem_mats: Option<Arc<Vec<Matrix>>>,
}

impl std::fmt::Debug for GModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GModule(dim {} over {:?})", self.dim, self.field)
    }
}

/// Caches per-element matrices only while the total stays reasonable.
const EAGER_ENTRY_CAP: usize = 1 << 22;

impl GModule {
    /// Builds and validates a module for a group from generator images.
    pub fn for_group(group: &FiniteGroup, field: &Field, gen_images: Vec<Matrix>) -> Result<GModule> {
        let gens = group.generators();
        if gen_images.len() != gens.len() {
            return Err(Error::NotARepresentation(format!(
                "expected {} generator images, got {}",
                gens.len(),
                gen_images.len()
            )));
        }
        let dim = if let Some(m) = gen_images.first() {
            m.rows()
        } else {
            1 // trivial group: the module is determined by its dimension
        };
        for (i, m) in gen_images.iter().enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch);
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::NotARepresentation(format!(
                    "generator image {i} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.inverse().is_err() {
                return Err(Error::SingularMatrix);
            }
            // cheap necessary condition with a pointed error message
            let order = group.element_order(gens[i] as usize);
            let mut pow = Matrix::identity(field, dim);
            for _ in 0..order {
                pow = pow.mul(m)?;
            }
            if pow != Matrix::identity(field, dim) {
                return Err(Error::NotARepresentation(format!(
                    "generator {i} has order {order} in the group but its image does not"
                )));
            }
        }
        let module = GModule::from_group_gens(group.clone(), field.clone(), dim, gen_images)?;
        module.verify_group_relations()?;
        Ok(module)
    }

    /// The trivial one-dimensional module.
    pub fn trivial(group: &FiniteGroup, field: &Field) -> GModule {
        let images = group.generators().iter().map(|_| Matrix::identity(field, 1)).collect();
        GModule::for_group(group, field, images).expect("trivial module always validates")
    }

    /// The left regular module of the group algebra.
    pub fn regular(group: &FiniteGroup, field: &Field) -> Result<GModule> {
        let n = group.order();
        if n > DIMENSION_CAP {
            return Err(Error::DimensionCap(n, DIMENSION_CAP));
        }
        let images = group
            .generators()
            .iter()
            .map(|&g| {
                let mut m = Matrix::zeros(field, n, n);
                for h in 0..n {
                    m[(group.mul(g as usize, h), h)] = field.one();
                }
                m
            })
            .collect();
        GModule::from_group_gens(group.clone(), field.clone(), n, images)
    }

    /// Builds a module for an algebra from basis-element images.
    pub fn for_algebra(algebra: &Arc<Algebra>, images: Vec<Matrix>) -> Result<GModule> {
        let field = algebra.field().clone();
        let m = algebra.dim();
        if images.len() != m {
            return Err(Error::NotARepresentation(format!(
                "expected {} basis images, got {}",
                m,
                images.len()
            )));
        }
        let dim = images.first().map_or(0, |x| x.rows());
        if dim == 0 {
            return Err(Error::NotARepresentation("zero-dimensional module".into()));
        }
        for img in &images {
            if img.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if img.rows() != dim || img.cols() != dim {
                return Err(Error::NotARepresentation("basis image has wrong shape".into()));
            }
        }
        // rho(b_i) rho(b_j) = sum_k c(i,j,k) rho(b_k), fully below a size cap
        let full = m * m * dim <= 1 << 16;
        let pairs: Vec<(usize, usize)> = if full {
            (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect()
        } else {
            (0..m * m).step_by((m * m / 256).max(1)).map(|t| (t / m, t % m)).collect()
        };
        for (i, j) in pairs {
            let lhs = images[i].mul(&images[j])?;
            let mut rhs = Matrix::zeros(&field, dim, dim);
            for k in 0..m {
                let c = algebra.structure_constant(i, j, k);
                if field.is_zero(c) {
                    continue;
                }
                rhs = rhs.add(&images[k].scale(c))?;
            }
            if lhs != rhs {
                return Err(Error::NotARepresentation(format!(
                    "images violate the product b{i} * b{j}"
                )));
            }
        }
        // the unit must act as the identity
        let mut unit_img = Matrix::zeros(&field, dim, dim);
        for (k, &c) in algebra.unit_coords().iter().enumerate() {
            if !field.is_zero(c) {
                unit_img = unit_img.add(&images[k].scale(c))?;
            }
        }
        if unit_img != Matrix::identity(&field, dim) {
            return Err(Error::NotARepresentation("the unit does not act as identity".into()));
        }
        Ok(GModule::from_parts_unchecked(Owner::Algebra(Arc::clone(algebra)), field, dim, images))
    }

    fn from_group_gens(
        group: FiniteGroup,
        field: Field,
        dim: usize,
        gen_mats: Vec<Matrix>,
    ) -> Result<GModule> {
        let n = group.order();
        let elem_mats = if n * dim * dim <= EAGER_ENTRY_CAP {
            let mut mats: Vec<Matrix> = Vec::with_capacity(n);
            mats.push(Matrix::identity(&field, dim));
            for e in 1..n {
                let (parent, gpos) = group.word(e).expect("non-identity element has a word");
                let m = mats[parent].mul(&gen_mats[gpos])?;
                mats.push(m);
            }
            Some(Arc::new(mats))
        } else {
            None
        };
        Ok(GModule { owner: Owner::Group(group), field, dim, gen_mats, elem_mats })
    }

    pub(crate) fn from_parts_unchecked(
        owner: Owner,
        field: Field,
        dim: usize,
        gen_mats: Vec<Matrix>,
    ) -> GModule {
        match owner {
            Owner::Group(g) => {
                GModule::from_group_gens(g, field, dim, gen_mats).expect("internal module")
            }
            o @ Owner::Algebra(_) => GModule { owner: o, field, dim, gen_mats, elem_mats: None },
        }
    }

    fn verify_group_relations(&self) -> Result<()> {
        let Owner::Group(group) = &self.owner else { return Ok(()) };
        let n = group.order();
        // rho(x) rho(g) = rho(x g) for all x and generators g characterizes a
        // homomorphism; run it in full below the cap, sampled above
        let xs: Vec<usize> = if n * self.dim <= 4096 {
            (0..n).collect()
        } else {
            (0..n).step_by((n / 256).max(1)).collect()
        };
        for x in xs {
            let mx = self.elem_mat(x);
            for (gpos, &g) in group.generators().iter().enumerate() {
                let lhs = mx.mul(&self.gen_mats[gpos])?;
                if lhs != self.elem_mat(group.mul(x, g as usize)) {
                    return Err(Error::NotARepresentation(format!(
                        "rho({x}) rho(g{gpos}) != rho({x} * g{gpos})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn owner(&self) -> &Owner {
        &self.owner
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match &self.owner {
            Owner::Group(g) => Some(g),
            Owner::Algebra(_) => None,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Generator (or algebra basis) action matrices.
    pub fn gen_mats(&self) -> &[Matrix] {
        &self.gen_mats
    }

    /// Action matrix of a group element (or algebra basis element).
    pub fn elem_mat(&self, e: usize) -> Matrix {
        match &self.owner {
            Owner::Algebra(_) => self.gen_mats[e].clone(),
            Owner::Group(group) => {
                if let Some(mats) = &self.elem_mats {
                    return mats[e].clone();
                }
                // uncached fallback: fold the breadth-first word chain
                let mut chain = Vec::new();
                let mut cur = e;
                while let Some((parent, gpos)) = group.word(cur) {
                    chain.push(gpos);
                    cur = parent;
                }
                let mut acc = Matrix::identity(&self.field, self.dim);
                for &gpos in chain.iter().rev() {
                    acc = acc.mul(&self.gen_mats[gpos]).expect("same field");
                }
                acc
            }
        }
    }

    /// Trace-vector fingerprint: traces on conjugacy-class representatives
    /// for groups, on every basis element for algebras.
    pub fn trace_fingerprint(&self) -> Vec<u64> {
        match &self.owner {
            Owner::Group(group) => group
                .conjugacy_classes()
                .iter()
                .map(|class| self.field.index_of(self.elem_mat(class[0] as usize).trace()))
                .collect(),
            Owner::Algebra(a) => {
                (0..a.dim()).map(|i| self.field.index_of(self.gen_mats[i].trace())).collect()
            }
        }
    }

    /// Canonical ordering key for a simple class.
    pub fn class_key(&self) -> (usize, Vec<u64>) {
        (self.dim, self.trace_fingerprint())
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(mods: &[&GModule]) -> Result<GModule> {
        let first = mods.first().expect("nonempty direct sum");
        let field = first.field.clone();
        for m in mods {
            if m.owner != first.owner {
                return Err(Error::OwnerMismatch);
            }
            if m.field != field {
                return Err(Error::FieldMismatch);
            }
        }
        let dim: usize = mods.iter().map(|m| m.dim).sum();
        let gen_count = first.gen_mats.len();
        let mut gen_mats = Vec::with_capacity(gen_count);
        for gi in 0..gen_count {
            let mut big = Matrix::zeros(&field, dim, dim);
            let mut off = 0;
            for m in mods {
                for i in 0..m.dim {
                    for j in 0..m.dim {
                        big[(off + i, off + j)] = m.gen_mats[gi][(i, j)];
                    }
                }
                off += m.dim;
            }
            gen_mats.push(big);
        }
        Ok(GModule::from_parts_unchecked(first.owner.clone(), field, dim, gen_mats))
    }

    /// The dual (contragredient) module g -> rho(g^{-1})^T; only for groups.
    pub fn dual(&self) -> GModule {
        let Owner::Group(group) = &self.owner else {
            panic!("dual is defined for group modules")
        };
        let mats = group
            .generators()
            .iter()
            .map(|&g| self.elem_mat(group.inv(g as usize)).transpose())
            .collect();
        GModule::from_parts_unchecked(self.owner.clone(), self.field.clone(), self.dim, mats)
    }
}

/// Basis of the space of intertwiners M -> N, as matrices in reduced
/// echelon order.
pub fn hom_space(m: &GModule, n: &GModule) -> Result<Vec<Matrix>> {
    if m.owner != n.owner {
        return Err(Error::OwnerMismatch);
    }
    if m.field != n.field {
        return Err(Error::FieldMismatch);
    }
    let f = &m.field;
    let (dm, dn) = (m.dim, n.dim);
    let gen_count = m.gen_mats.len();
    // unknowns F[r][c] flattened as r * dm + c; equations F A_g = B_g F
    let mut sys = Matrix::zeros(f, gen_count * dn * dm, dn * dm);
    for g in 0..gen_count {
        let a = &m.gen_mats[g];
        let b = &n.gen_mats[g];
        for i in 0..dn {
            for j in 0..dm {
                let row = g * dn * dm + i * dm + j;
                for c in 0..dm {
                    let cur = sys[(row, i * dm + c)];
                    sys[(row, i * dm + c)] = f.add(cur, a[(c, j)]);
                }
                for r in 0..dn {
                    let cur = sys[(row, r * dm + j)];
                    sys[(row, r * dm + j)] = f.sub(cur, b[(i, r)]);
                }
            }
        }
    }
    let kernel = sys.kernel_basis();
    let mut out = Vec::with_capacity(kernel.rows());
    for bi in 0..kernel.rows() {
        let mut mat = Matrix::zeros(f, dn, dm);
        for r in 0..dn {
            for c in 0..dm {
                mat[(r, c)] = kernel[(bi, r * dm + c)];
            }
        }
        out.push(mat);
    }
    Ok(out)
}

/// Dimension of the intertwiner space.
pub fn hom_dim(m: &GModule, n: &GModule) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::FiniteGroup;

    fn gf(p: u64) -> Field {
        Field::new(p, 1).unwrap()
    }

    fn a3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 2, 0]]).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    #[test]
    fn character_module_of_a3() {
        // 2^3 = 8 = 1 mod 7, so the 3-cycle may act by 2
        let f = gf(7);
        let m = GModule::for_group(&a3(), &f, vec![Matrix::from_ints(&f, &[&[2]])]).unwrap();
        assert_eq!(m.dim(), 1);
        // 3^3 = 27 = 6 != 1 mod 7
        let err = GModule::for_group(&a3(), &f, vec![Matrix::from_ints(&f, &[&[3]])]).unwrap_err();
        assert!(matches!(err, Error::NotARepresentation(_)));
    }

    #[test]
    fn trivial_module_always_valid() {
        let f = gf(5);
        let m = GModule::trivial(&s3(), &f);
        assert_eq!(m.dim(), 1);
        assert_eq!(m.elem_mat(4), Matrix::identity(&f, 1));
    }

    #[test]
    fn singular_image_rejected() {
        let f = gf(7);
        let err = GModule::for_group(&a3(), &f, vec![Matrix::zeros(&f, 1, 1)]).unwrap_err();
        assert_eq!(err, Error::SingularMatrix);
    }

    #[test]
    fn standard_two_dim_s3_module() {
        let f = gf(7);
        let m = GModule::for_group(
            &s3(),
            &f,
            vec![
                Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]),
                Matrix::from_ints(&f, &[&[0, -1], &[1, -1]]),
            ],
        )
        .unwrap();
        assert_eq!(m.dim(), 2);
        // fingerprint: traces on class reps (identity, transposition, 3-cycle)
        assert_eq!(m.trace_fingerprint(), vec![2, 0, 6]);
    }

    #[test]
    fn hom_space_schur_and_frobenius() {
        let f = gf(7);
        let chi = GModule::for_group(&a3(), &f, vec![Matrix::from_ints(&f, &[&[2]])]).unwrap();
        // Schur: Hom(chi, chi) is one-dimensional
        assert_eq!(hom_dim(&chi, &chi).unwrap(), 1);
        let triv = GModule::trivial(&s3(), &f);
        let sign = GModule::for_group(
            &s3(),
            &f,
            vec![Matrix::from_ints(&f, &[&[-1]]), Matrix::from_ints(&f, &[&[1]])],
        )
        .unwrap();
        assert_eq!(hom_dim(&triv, &sign).unwrap(), 0);
        // intertwiners respect the action on every basis vector
        let two = GModule::for_group(
            &s3(),
            &f,
            vec![
                Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]),
                Matrix::from_ints(&f, &[&[0, -1], &[1, -1]]),
            ],
        )
        .unwrap();
        for h in hom_space(&two, &two).unwrap() {
            for (a, b) in two.gen_mats().iter().zip(two.gen_mats()) {
                assert_eq!(h.mul(a).unwrap(), b.mul(&h).unwrap());
            }
        }
    }

    #[test]
    fn owner_mismatch_detected() {
        let f = gf(7);
        let m1 = GModule::trivial(&s3(), &f);
        let m2 = GModule::trivial(&a3(), &f);
        assert_eq!(hom_space(&m1, &m2).unwrap_err(), Error::OwnerMismatch);
        let f5 = gf(5);
        let m3 = GModule::trivial(&s3(), &f5);
        assert_eq!(hom_space(&m1, &m3).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn group_algebra_of_z2() {
        let c2 = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let f = gf(7);
        let a = Algebra::group_algebra(&c2, &f).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.unit_coords(), &[f.one(), f.zero()]);
    }

    #[test]
    fn matrix_units_form_an_algebra() {
        // 2x2 matrix units e11, e12, e21, e22
        let f = gf(7);
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut sc = vec![vec![vec![f.zero(); 4]; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            sc[idx(i, j)][idx(k, l)][idx(i, l)] = f.one();
                        }
                    }
                }
            }
        }
        let a = Algebra::new(&f, sc).unwrap();
        // unit = e11 + e22
        assert_eq!(a.unit_coords(), &[f.one(), f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn broken_structure_constants_rejected() {
        let f = gf(5);
        // b0 b0 = b1, b0 b1 = b0, ... not associative and without unit
        let mut sc = vec![vec![vec![f.zero(); 2]; 2]; 2];
        sc[0][0][1] = f.one();
        sc[0][1][0] = f.one();
        sc[1][0][0] = f.one();
        sc[1][1][1] = f.one();
        assert!(Algebra::new(&f, sc).is_err());
    }

    #[test]
    fn regular_module_of_group() {
        let f = gf(7);
        let m = GModule::regular(&s3(), &f).unwrap();
        assert_eq!(m.dim(), 6);
        // permutation action: trace of a non-identity element is 0
        assert_eq!(m.elem_mat(1).trace(), f.zero());
        assert_eq!(m.elem_mat(0).trace(), f.from_int(6));
    }

    #[test]
    fn direct_sum_blocks() {
        let f = gf(7);
        let triv = GModule::trivial(&s3(), &f);
        let sign = GModule::for_group(
            &s3(),
            &f,
            vec![Matrix::from_ints(&f, &[&[-1]]), Matrix::from_ints(&f, &[&[1]])],
        )
        .unwrap();
        let sum = GModule::direct_sum(&[&triv, &sign]).unwrap();
        assert_eq!(sum.dim(), 2);
        assert_eq!(sum.gen_mats()[0][(1, 1)], f.from_int(-1));
    }
}
