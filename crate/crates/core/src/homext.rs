//! First extension groups between simples, projectivity, projective covers
//! and the per-degree dimension identity.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grp::{IrrepLabel, Sign};
use crate::linalg::{kernel_basis, rank, solve_linear, Echelon, Mat};
use crate::repmod::{
    enumerate_simples, hom_space, hom_space_gens, is_indecomposable, is_isomorphic, l_ac, radical_of, Catalog, Label,
    ModuleRep,
};
use crate::scalars::{scalar_to_json, Cyc, ParamSet, Regime};
use crate::smash::SmashAlgebra;
use crate::tenscat::tensor;

/// `dim Ext^1(L, L2)` with one verified extension per basis class.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    /// Modules `E` with `L2` on the first `dim L2` coordinates and `E / L2 = L`.
    pub representatives: Vec<ModuleRep>,
}

fn extension(l: &ModuleRep, l2: &ModuleRep, d: &Mat) -> ModuleRep {
    let ctx = l.params.ctx;
    let (n1, n2) = (l.dim(), l2.dim());
    let bd = |a: &Mat, b: &Mat| Mat::block_diag(ctx, &[a, b]);
    let mut a0 = bd(&l2.a0, &l.a0);
    a0.set_block(0, n2, d);
    let _ = n1;
    ModuleRep { params: l.params.clone(), s: bd(&l2.s, &l.s), t: bd(&l2.t, &l.t), a0, label: None }
}

/// Extensions `0 -> L2 -> E -> L -> 0`. The group acts block-diagonally;
/// the off-diagonal block `D` of `a0` is cut out by the linear parts of the
/// relations, then `D + A2 X - X A1` is factored out for `X` in `Hom_G(L, L2)`.
pub fn ext1(l: &ModuleRep, l2: &ModuleRep) -> Result<Ext1> {
    let ctx = l.params.ctx;
    let (n1, n2) = (l.dim(), l2.dim());
    let unknowns = n1 * n2;
    // each relation residual is affine in D and vanishes at D = 0
    let zero_res = extension(l, l2, &Mat::zeros(ctx, n2, n1)).residuals();
    if zero_res.iter().any(|r| !r.is_zero()) {
        return Err(Error::Verification("diagonal blocks must both be modules".into()));
    }
    let mut cols = Vec::with_capacity(unknowns);
    for k in 0..unknowns {
        let mut d = Mat::zeros(ctx, n2, n1);
        d.set(k / n1, k % n1, Cyc::one(ctx));
        let res = extension(l, l2, &d).residuals();
        let mut col = Vec::new();
        for r in &res[3..] {
            col.extend(r.submatrix(0, n2, n2, n1).flatten());
        }
        cols.push(col);
    }
    let rows = cols[0].len();
    let cocycles = kernel_basis(&Mat::from_cols(ctx, rows, &cols));
    let homs = hom_space_gens(ctx, n1, n2, &[l.s.clone(), l.t.clone()], &[l2.s.clone(), l2.t.clone()]);
    let mut ech = Echelon::new(ctx, unknowns);
    for x in &homs {
        ech.insert(l2.a0.mul(x).sub(&x.mul(&l.a0)).flatten());
    }
    let boundary = ech.len();
    let mut representatives = Vec::new();
    for c in 0..cocycles.cols() {
        let z = cocycles.col(c);
        if ech.insert(z.clone()) {
            let d = Mat::unflatten(ctx, n2, n1, z);
            let e = extension(l, l2, &d).with_label(Label::Other(format!("E({},{})", l.name(), l2.name())));
            e.verify()?;
            representatives.push(e);
        }
    }
    let dim = cocycles.cols() - boundary;
    debug_assert_eq!(dim, representatives.len());
    Ok(Ext1 { dim, representatives })
}

/// The first build failure of an incomplete catalog, as an owned error.
pub fn incomplete(catalog: &Catalog) -> Option<Error> {
    catalog.missing.first().map(|(j, e)| match e {
        Error::NeedsSquareRoot { value, n } => Error::NeedsSquareRoot { value: value.clone(), n: *n },
        other => Error::Verification(format!("simples in degree {j} unavailable: {other}")),
    })
}

/// `d_{L,L'} = dim Ext^1(L, L')` over an ordered list of simples.
#[derive(Clone, Debug)]
pub struct ExtTable {
    pub params: ParamSet,
    pub labels: Vec<Label>,
    pub dims: Vec<Vec<usize>>,
    /// `((row, col), extensions)` for nonzero cells, when requested.
    pub representatives: Vec<((usize, usize), Vec<ModuleRep>)>,
}

/// All cells; pairs in different degrees are zero without computation.
pub fn ext_table(catalog: &Catalog, keep_representatives: bool) -> Result<ExtTable> {
    if let Some(e) = incomplete(catalog) {
        return Err(e);
    }
    let simples = &catalog.simples;
    let params = simples.first().map(|m| m.params.clone()).ok_or_else(|| Error::Verification("empty catalog".into()))?;
    let labels: Vec<Label> = simples.iter().map(|m| m.label.clone().expect("catalog modules are labeled")).collect();
    let n = simples.len();
    let mut dims = vec![vec![0; n]; n];
    let mut representatives = Vec::new();
    for i in 0..n {
        for k in 0..n {
            if labels[i].degree() != labels[k].degree() {
                continue;
            }
            let e = ext1(&simples[i], &simples[k])?;
            dims[i][k] = e.dim;
            if keep_representatives && e.dim > 0 {
                representatives.push(((i, k), e.representatives));
            }
        }
    }
    Ok(ExtTable { params, labels, dims, representatives })
}

impl ExtTable {
    pub fn get(&self, from: &Label, to: &Label) -> Option<usize> {
        let i = self.labels.iter().position(|l| l == from)?;
        let k = self.labels.iter().position(|l| l == to)?;
        Some(self.dims[i][k])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ell": self.params.ell,
            "hbar": scalar_to_json(&self.params.hbar),
            "mu": scalar_to_json(&self.params.mu),
            "labels": self.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "dims": self.dims,
        })
    }

    /// Rows are `L`, columns `L'`, cells `dim Ext^1(L, L')`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = self.labels.iter().map(ToString::to_string).collect();
        let w = names.iter().map(String::len).max().unwrap_or(1).max(3);
        let mut out = String::new();
        let _ = write!(out, "{:w$}", "", w = w);
        for n in &names {
            let _ = write!(out, " {n:>w$}");
        }
        out.push('\n');
        for (i, n) in names.iter().enumerate() {
            let _ = write!(out, "{n:w$}");
            for d in &self.dims[i] {
                let _ = write!(out, " {d:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

/// A `G`-subspace of `M` generating it as a module: spin roots picked from
/// the standard basis, then closed under `s` and `t`.
fn generating_g_subspace(m: &ModuleRep) -> Mat {
    let ctx = m.params.ctx;
    let n = m.dim();
    let close = |ech: &mut Echelon, gens: &[Mat]| {
        let mut frontier: Vec<Vec<Cyc>> = ech.to_cols().col_vecs();
        while let Some(v) = frontier.pop() {
            for g in gens {
                let u = g.mul_vec(&v);
                if ech.insert(u.clone()) {
                    frontier.push(u);
                }
            }
        }
    };
    let all = m.gens();
    let group = [m.s.clone(), m.t.clone()];
    let mut span = Echelon::new(ctx, n);
    let mut roots = Echelon::new(ctx, n);
    for i in 0..n {
        if span.len() == n {
            break;
        }
        let mut e = vec![Cyc::zero(ctx); n];
        e[i] = Cyc::one(ctx);
        if span.contains(&e) {
            continue;
        }
        roots.insert(e.clone());
        span.insert(e);
        close(&mut span, &all);
    }
    close(&mut roots, &group);
    roots.to_cols()
}

/// The matrix of a normal word acting on `M`.
fn word_action(m: &ModuleRep, w: &[u8]) -> Mat {
    let mut acc = Mat::identity(m.params.ctx, m.dim());
    for &i in w {
        acc = acc.mul(&m.a(i));
    }
    acc
}

/// A surjection `A (x)_G V -> M` from a generating `G`-subspace `V`.
pub fn canonical_surjection(alg: &SmashAlgebra, m: &ModuleRep) -> Result<(ModuleRep, Mat)> {
    let ctx = m.params.ctx;
    let vb = generating_g_subspace(m);
    let vrep = m.group_rep().restrict(&vb)?;
    let big = alg.induced_module(&vrep, None)?;
    let d = vb.cols();
    let mut cols = Vec::with_capacity(big.dim());
    for w in alg.words() {
        let act = word_action(m, w).mul(&vb);
        for c in 0..d {
            cols.push(act.col(c));
        }
    }
    let pi = Mat::from_cols(ctx, m.dim(), &cols);
    for (x, y) in big.gens().iter().zip(m.gens()) {
        if pi.mul(x) != y.mul(&pi) {
            return Err(Error::Verification("canonical map is not a module map".into()));
        }
    }
    if rank(&pi) != m.dim() {
        return Err(Error::Verification("canonical map is not onto".into()));
    }
    Ok((big, pi))
}

/// A module section of the canonical surjection, if one exists.
pub fn projective_section(alg: &SmashAlgebra, m: &ModuleRep) -> Result<Option<Mat>> {
    let ctx = m.params.ctx;
    let n = m.dim();
    if n == 0 {
        return Ok(Some(Mat::zeros(ctx, 0, 0)));
    }
    let (big, pi) = canonical_surjection(alg, m)?;
    let sections = hom_space(m, &big);
    if sections.is_empty() {
        return Ok(None);
    }
    let cols: Vec<Vec<Cyc>> = sections.iter().map(|x| pi.mul(x).flatten()).collect();
    let a = Mat::from_cols(ctx, n * n, &cols);
    let target = Mat::column_vector(ctx, Mat::identity(ctx, n).flatten());
    match solve_linear(&a, &target) {
        Ok(c) => {
            let mut sigma = Mat::zeros(ctx, big.dim(), n);
            for (x, k) in sections.iter().zip(0..) {
                sigma.add_assign(&x.scale(c.get(k, 0)));
            }
            Ok(Some(sigma))
        }
        Err(Error::NoSolution) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn is_projective(alg: &SmashAlgebra, m: &ModuleRep) -> Result<bool> {
    Ok(projective_section(alg, m)?.is_some())
}

/// `P_j(a, c)`: the extension of `L_j(a, c)` by `L_j(a, c) (x) L_0(-c, c)`.
pub fn p_ac(p: &ParamSet, j: usize, a: Sign, c: Sign) -> Result<ModuleRep> {
    let l = l_ac(p, j, a, c)?;
    let sub = tensor(&l, &l_ac(p, 0, c.neg(), c)?)?;
    let e = ext1(&l, &sub)?;
    if e.dim != 1 {
        return Err(Error::CoverVerificationFailure {
            label: Label::P { j, a, c }.to_string(),
            reason: format!("extension space has dimension {}", e.dim),
        });
    }
    Ok(e.representatives.into_iter().next().expect("one class").with_label(Label::P { j, a, c }))
}

/// The candidate cover for a catalog simple, before verification.
pub fn cover_candidate(alg: &SmashAlgebra, l: &ModuleRep, catalog: &Catalog) -> Result<ModuleRep> {
    let p = &l.params;
    let label = l.label.clone().ok_or_else(|| Error::CoverVerificationFailure {
        label: l.name(),
        reason: "unlabeled module".into(),
    })?;
    let induced = |s: IrrepLabel| alg.induced_irrep(s);
    match label {
        Label::L0(e) => induced(IrrepLabel::S(0, e)),
        Label::L00 => induced(IrrepLabel::M(0)),
        Label::Lac { j, a, c } => p_ac(p, j, a, c),
        Label::T(j) => induced(IrrepLabel::S(j, Sign::Plus)),
        Label::N { j, .. } => {
            if catalog.at_degree(j).len() == 1 {
                induced(IrrepLabel::S(j, Sign::Plus))
            } else {
                Ok(l.clone())
            }
        }
        Label::Graded(s) => induced(s),
        other => Err(Error::CoverVerificationFailure { label: other.to_string(), reason: "not a catalog simple".into() }),
    }
}

/// Builds the candidate and checks: projective, indecomposable, top = `L`.
pub fn projective_cover(alg: &SmashAlgebra, l: &ModuleRep, catalog: &Catalog) -> Result<ModuleRep> {
    let cand = cover_candidate(alg, l, catalog)?;
    let fail = |reason: &str| Error::CoverVerificationFailure { label: l.name(), reason: reason.into() };
    if !is_projective(alg, &cand)? {
        return Err(fail("candidate is not projective"));
    }
    if !is_indecomposable(&cand) {
        return Err(fail("candidate is decomposable"));
    }
    let top = cand.quotient(&radical_of(&cand))?;
    if is_isomorphic(&top, l).is_none() {
        return Err(fail(&format!("top has dimension {} and is not the simple", top.dim())));
    }
    Ok(cand)
}

#[derive(Clone, Debug)]
pub struct CoverRow {
    pub label: Label,
    pub dim: usize,
    pub cover_dim: usize,
    pub cover: ModuleRep,
}

/// Covers of every catalog simple.
pub fn all_covers(alg: &SmashAlgebra, catalog: &Catalog) -> Result<Vec<CoverRow>> {
    if let Some(e) = incomplete(catalog) {
        return Err(e);
    }
    catalog
        .simples
        .iter()
        .map(|l| {
            let cover = projective_cover(alg, l, catalog)?;
            Ok(CoverRow { label: l.label.clone().expect("labeled"), dim: l.dim(), cover_dim: cover.dim(), cover })
        })
        .collect()
}

/// `sum dim L * dim P(L)` per degree.
#[derive(Clone, Debug)]
pub struct DimIdentity {
    pub per_degree: Vec<(usize, usize)>,
    pub total: usize,
}

/// Checks `sum dim L dim P(L) = 72` in each degree and `72 l` overall.
pub fn dim_identity(p: &ParamSet, covers: &[CoverRow]) -> Result<DimIdentity> {
    let mut per_degree = Vec::new();
    for j in 0..p.ell {
        let got: usize = covers.iter().filter(|c| c.label.degree() == Some(j)).map(|c| c.dim * c.cover_dim).sum();
        if got != 72 {
            return Err(Error::IdentityViolation { j, got, expected: 72 });
        }
        per_degree.push((j, got));
    }
    let total = per_degree.iter().map(|x| x.1).sum();
    Ok(DimIdentity { per_degree, total })
}

/// The map `A(S_j^+) -> A(S_j^-)` sending the generator to `(a0 + a1 + a2) w`;
/// returns `None` when the hypothesis `g_j != 0` fails or `j = 0`.
pub fn induced_iso_check(alg: &SmashAlgebra, j: usize) -> Result<Option<bool>> {
    let p = &alg.params;
    if j == 0 || j >= p.ell {
        return Ok(None);
    }
    let g = crate::repmod::derived_scalars(p, j).g;
    if g.is_zero() {
        return Ok(None);
    }
    let plus = alg.induced_irrep(IrrepLabel::S(j, Sign::Plus))?;
    let minus = alg.induced_irrep(IrrepLabel::S(j, Sign::Minus))?;
    let ctx = p.ctx;
    let sum = alg.letter(0).add(&alg.letter(1)).add(&alg.letter(2));
    let rho = crate::grp::irrep(p, IrrepLabel::S(j, Sign::Minus));
    let mut phi = Mat::zeros(ctx, minus.dim(), plus.dim());
    for (k, w) in alg.words().iter().enumerate() {
        let word = crate::smash::SmashElement::term(w.clone(), alg.group.one(), p.one());
        let img = alg.a_mul(&word, &sum);
        for (w2, h, c) in img.terms() {
            let row = alg.word_index(w2).expect("normal word");
            let e = phi.get_mut(row, k);
            *e += &(c * rho.act(*h).get(0, 0));
        }
    }
    for (x, y) in plus.gens().iter().zip(minus.gens()) {
        if phi.mul(x) != y.mul(&phi) {
            return Err(Error::Verification("generator map does not intertwine".into()));
        }
    }
    Ok(Some(rank(&phi) == phi.rows()))
}

/// Catalog, covers and identity in one pass.
pub fn cover_report(alg: &SmashAlgebra) -> Result<(Catalog, Vec<CoverRow>, DimIdentity)> {
    let catalog = enumerate_simples(&alg.params);
    let covers = all_covers(alg, &catalog)?;
    let id = dim_identity(&alg.params, &covers)?;
    Ok((catalog, covers, id))
}

/// Whether the regime has `L_j(a, c)` with `j > 0`.
pub fn has_positive_lac(p: &ParamSet) -> bool {
    matches!(p.regime(), Regime::LambdaThirds)
}
