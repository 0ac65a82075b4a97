//! The block context: a quiver algebra together with its catalog of
//! indecomposables, projectives, the regular module, the wall bimodules,
//! and the selected unit maps. Functor expressions evaluate against this
//! context on both objects and morphisms; natural transformations between
//! functor expressions are solved as linear systems over the catalog.

use super::algebra::{AlgebraError, AlgebraSpec, BlockAlgebra, Path};
use super::functor::{tensor, tensor_morphism, Bimodule, Functor};
use super::module::{
    hom_basis, submodule_from_spans, BlockModule, Morphism,
};
use crate::linalg::{Mat, Rat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BlockError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("no unit candidate with injective component at the regular module")]
    UnitSelectionFailed,
    #[error("no completion unit candidate that is invertible on the wall projective")]
    CompletionUnitSelectionFailed,
    #[error("module does not decompose into the catalog")]
    CatalogIncomplete,
    #[error("natural transformations need covariant functor expressions, got {0}")]
    ContravariantExpression(String),
    #[error("isomorphism test too large without a catalog")]
    IsoTestTooLarge,
    #[error("unknown module name {0:?}")]
    UnknownModule(String),
    #[error("functor {0} has the wrong exactness direction for this derived functor")]
    WrongExactness(String),
}

/// A natural transformation between two (covariant) functor expressions,
/// stored by its components on the catalog.
#[derive(Clone)]
pub struct Nat {
    pub src: Functor,
    pub dst: Functor,
    pub comps: Vec<Morphism>,
}

pub struct Decomposition {
    /// catalog index of each summand
    pub pieces: Vec<usize>,
    /// injection from each catalog summand
    pub injections: Vec<Morphism>,
    /// projection onto each catalog summand
    pub projections: Vec<Morphism>,
}

pub struct Block {
    pub alg: BlockAlgebra,
    /// indecomposable catalog, labels carried by the modules
    pub catalog: Vec<BlockModule>,
    pub projectives: Vec<BlockModule>,
    pub regular: BlockModule,
    theta_bimods: Vec<Bimodule>,
    twist_bimods: Vec<Bimodule>,
    units: Vec<Option<Nat>>,
    completion_units: Vec<Option<Nat>>,
}

/// The projective left module at a vertex: all paths out of that vertex.
pub fn projective_module(alg: &BlockAlgebra, w: usize) -> BlockModule {
    let basis: Vec<usize> =
        (0..alg.dim()).filter(|&k| alg.path_source(&alg.paths[k]) == w).collect();
    let nv = alg.num_vertices();
    let by_vertex: Vec<Vec<usize>> = (0..nv)
        .map(|v| {
            basis
                .iter()
                .copied()
                .filter(|&k| alg.path_target(&alg.paths[k]) == v)
                .collect::<Vec<usize>>()
        })
        .collect();
    let dims: Vec<usize> = by_vertex.iter().map(|b| b.len()).collect();
    let arrows = (0..alg.num_arrows())
        .map(|arrow| {
            let (f, t) = (alg.arrow_from[arrow], alg.arrow_to[arrow]);
            let arrow_path = Path { vertex: f, arrows: vec![arrow] };
            let mut m = Mat::zero(dims[t], dims[f]);
            for (col, &k) in by_vertex[f].iter().enumerate() {
                for (c, q) in alg.mul_paths(&arrow_path, &alg.paths[k]) {
                    let qi = alg.path_idx(&q).expect("basis path");
                    let row = by_vertex[t].iter().position(|&x| x == qi).expect("source fixed");
                    m[(row, col)] = &m[(row, col)] + &c;
                }
            }
            m
        })
        .collect();
    BlockModule { dims, arrows, label: Some(format!("P({})", alg.vertex_names[w])) }
}

impl Block {
    /// The built-in two-vertex block with its full indecomposable catalog.
    pub fn sl2() -> Block {
        let alg = BlockAlgebra::sl2();
        let p_e = projective_module(&alg, 0).relabel("Delta(e)");
        let p_s = projective_module(&alg, 1);
        let catalog = vec![
            BlockModule::simple(&alg, 0),
            BlockModule::simple(&alg, 1),
            p_e.clone(),
            p_e.dual(&alg).relabel("dDelta(e)"),
            p_s.clone(),
        ];
        let regular = p_e.direct_sum(&p_s, &alg).relabel("A");
        let mut block = Block {
            theta_bimods: (1..alg.rank)
                .map(|i| {
                    Bimodule::wall_crossing(&alg, alg.theta_vertex(i).expect("wall vertex"))
                })
                .collect(),
            twist_bimods: (1..alg.rank)
                .map(|i| {
                    Bimodule::ideal_of_vertices(
                        &alg,
                        &alg.twist_vertices(i).expect("valid index"),
                    )
                })
                .collect(),
            units: vec![None; alg.rank - 1],
            completion_units: vec![None; alg.rank - 1],
            projectives: vec![p_e, p_s],
            catalog,
            regular,
            alg,
        };
        for i in 1..block.alg.rank {
            block.select_unit(i).expect("unit selection on the built-in block");
            block.select_completion_unit(i).expect("completion unit on the built-in block");
        }
        block
    }

    /// Build from a serialized description; the catalog is seeded with the
    /// simples, projectives and injectives, deduplicated up to isomorphism.
    pub fn from_spec(spec: &AlgebraSpec) -> Result<Block, BlockError> {
        let alg = BlockAlgebra::from_spec(spec)?;
        let projectives: Vec<BlockModule> =
            (0..alg.num_vertices()).map(|w| projective_module(&alg, w)).collect();
        let mut catalog: Vec<BlockModule> = Vec::new();
        let mut candidates: Vec<BlockModule> = Vec::new();
        for w in 0..alg.num_vertices() {
            candidates.push(BlockModule::simple(&alg, w));
        }
        for (w, p) in projectives.iter().enumerate() {
            candidates.push(p.clone());
            candidates
                .push(p.dual(&alg).relabel(&format!("I({})", alg.vertex_names[w])));
        }
        for m in candidates {
            let dup = catalog
                .iter()
                .any(|x| x.dims == m.dims && grid_iso_test(&alg, x, &m).unwrap_or(false));
            if !dup {
                catalog.push(m);
            }
        }
        let regular = projectives
            .iter()
            .skip(1)
            .fold(projectives[0].clone(), |acc, p| acc.direct_sum(p, &alg))
            .relabel("A");
        let mut block = Block {
            theta_bimods: (1..alg.rank)
                .map(|i| {
                    let v = alg.theta_vertex(i)?;
                    Ok(Bimodule::wall_crossing(&alg, v))
                })
                .collect::<Result<Vec<_>, AlgebraError>>()?,
            twist_bimods: (1..alg.rank)
                .map(|i| Ok(Bimodule::ideal_of_vertices(&alg, &alg.twist_vertices(i)?)))
                .collect::<Result<Vec<_>, AlgebraError>>()?,
            units: vec![None; alg.rank - 1],
            completion_units: vec![None; alg.rank - 1],
            projectives,
            catalog,
            regular,
            alg,
        };
        for i in 1..block.alg.rank {
            block.select_unit(i)?;
            block.select_completion_unit(i)?;
        }
        Ok(block)
    }

    pub fn catalog_labels(&self) -> Vec<String> {
        self.catalog
            .iter()
            .map(|m| m.label.clone().unwrap_or_else(|| "?".to_string()))
            .collect()
    }

    /// Catalog module by label; the usual aliases resolve when the literal
    /// name is absent from the catalog.
    pub fn module_by_name(&self, name: &str) -> Result<BlockModule, BlockError> {
        if name == "A" {
            return Ok(self.regular.clone());
        }
        let find = |label: &str| {
            self.catalog.iter().find(|m| m.label.as_deref() == Some(label)).cloned()
        };
        if let Some(m) = find(name) {
            return Ok(m);
        }
        let alias = match name {
            "Delta(s)" => Some("L(s)"),
            "I(e)" => Some("dDelta(e)"),
            "I(s)" => Some("P(s)"),
            "P(e)" => Some("Delta(e)"),
            _ => None,
        };
        alias
            .and_then(find)
            .ok_or_else(|| BlockError::UnknownModule(name.to_string()))
    }

    fn check_index(&self, i: usize) -> Result<(), BlockError> {
        if i == 0 || i >= self.alg.rank {
            return Err(BlockError::IndexOutOfRange { index: i, rank: self.alg.rank });
        }
        Ok(())
    }

    // ----- functor evaluation -----

    pub fn eval(&self, f: &Functor, m: &BlockModule) -> Result<BlockModule, BlockError> {
        match f {
            Functor::Id => Ok(m.clone()),
            Functor::Dual => Ok(m.dual(&self.alg)),
            Functor::Theta(i) => {
                self.check_index(*i)?;
                Ok(tensor(&self.alg, &self.theta_bimods[i - 1], m).module)
            }
            Functor::Twist(i) => {
                self.check_index(*i)?;
                Ok(tensor(&self.alg, &self.twist_bimods[i - 1], m).module)
            }
            Functor::Completion(i) => {
                self.check_index(*i)?;
                let dm = m.dual(&self.alg);
                let t = tensor(&self.alg, &self.twist_bimods[i - 1], &dm).module;
                Ok(t.dual(&self.alg))
            }
            Functor::Shuffle(i) => {
                self.check_index(*i)?;
                let adj = self.unit(*i);
                let adj_m = self.component_at(adj, m)?;
                Ok(adj_m.cokernel(&self.alg).0)
            }
            Functor::Coshuffle(i) => {
                self.check_index(*i)?;
                let dm = m.dual(&self.alg);
                let c = self.eval(&Functor::Shuffle(*i), &dm)?;
                Ok(c.dual(&self.alg))
            }
            Functor::Zuckerman(i) => {
                self.check_index(*i)?;
                Ok(self.trace_quotient(m, &self.alg.twist_vertices(*i)?).0)
            }
            Functor::Zhat(i) => {
                self.check_index(*i)?;
                Ok(self.trace_quotient(m, &self.alg.cotwist_vertices(*i)?).0)
            }
            Functor::JosephQ(i) => {
                self.check_index(*i)?;
                let g = self.completion_unit(*i);
                let g_m = self.component_at(g, m)?;
                Ok(g_m.cokernel(&self.alg).0)
            }
            Functor::Compose(outer, inner) => {
                let mid = self.eval(inner, m)?;
                self.eval(outer, &mid)
            }
        }
    }

    /// Apply a functor expression to a morphism. For expressions with an
    /// odd number of duality atoms the returned morphism runs backwards
    /// (from F of the codomain to F of the domain).
    pub fn eval_mor(&self, f: &Functor, phi: &Morphism) -> Result<Morphism, BlockError> {
        match f {
            Functor::Id => Ok(phi.clone()),
            Functor::Dual => Ok(phi.dual(&self.alg)),
            Functor::Theta(i) => {
                self.check_index(*i)?;
                let v = &self.theta_bimods[i - 1];
                let src = tensor(&self.alg, v, &phi.dom);
                let dst = tensor(&self.alg, v, &phi.cod);
                Ok(tensor_morphism(&self.alg, v, phi, &src, &dst))
            }
            Functor::Twist(i) => {
                self.check_index(*i)?;
                let v = &self.twist_bimods[i - 1];
                let src = tensor(&self.alg, v, &phi.dom);
                let dst = tensor(&self.alg, v, &phi.cod);
                Ok(tensor_morphism(&self.alg, v, phi, &src, &dst))
            }
            Functor::Completion(i) => {
                let inner = Functor::compose(
                    Functor::Dual,
                    Functor::compose(Functor::Twist(*i), Functor::Dual),
                );
                self.eval_mor(&inner, phi)
            }
            Functor::Shuffle(i) => {
                self.check_index(*i)?;
                let adj = self.unit(*i).clone();
                let adj_dom = self.component_at(&adj, &phi.dom)?;
                let adj_cod = self.component_at(&adj, &phi.cod)?;
                let (_, proj_dom) = adj_dom.cokernel(&self.alg);
                let (_, proj_cod) = adj_cod.cokernel(&self.alg);
                let theta_f = self.eval_mor(&Functor::Theta(*i), phi)?;
                let composite = proj_cod.compose(&theta_f);
                composite
                    .factor_through_surjection(&proj_dom)
                    .ok_or(BlockError::CatalogIncomplete)
            }
            Functor::Coshuffle(i) => {
                let inner = Functor::compose(
                    Functor::Dual,
                    Functor::compose(Functor::Shuffle(*i), Functor::Dual),
                );
                self.eval_mor(&inner, phi)
            }
            Functor::Zuckerman(i) | Functor::Zhat(i) => {
                self.check_index(*i)?;
                let vertices = match f {
                    Functor::Zuckerman(_) => self.alg.twist_vertices(*i)?,
                    _ => self.alg.cotwist_vertices(*i)?,
                };
                let (_, z_dom) = self.trace_quotient(&phi.dom, &vertices);
                let (_, z_cod) = self.trace_quotient(&phi.cod, &vertices);
                let composite = z_cod.compose(phi);
                composite
                    .factor_through_surjection(&z_dom)
                    .ok_or(BlockError::CatalogIncomplete)
            }
            Functor::JosephQ(i) => {
                self.check_index(*i)?;
                let g = self.completion_unit(*i).clone();
                let g_dom = self.component_at(&g, &phi.dom)?;
                let g_cod = self.component_at(&g, &phi.cod)?;
                let (_, proj_dom) = g_dom.cokernel(&self.alg);
                let (_, proj_cod) = g_cod.cokernel(&self.alg);
                let gf = self.eval_mor(&Functor::Completion(*i), phi)?;
                let composite = proj_cod.compose(&gf);
                composite
                    .factor_through_surjection(&proj_dom)
                    .ok_or(BlockError::CatalogIncomplete)
            }
            Functor::Compose(outer, inner) => {
                let mid = self.eval_mor(inner, phi)?;
                self.eval_mor(outer, &mid)
            }
        }
    }

    /// Quotient by the submodule generated by the components at the given
    /// vertices, with its projection.
    pub fn trace_quotient(
        &self,
        m: &BlockModule,
        vertices: &[usize],
    ) -> (BlockModule, Morphism) {
        let mut spans: Vec<Vec<Vec<Rat>>> = vec![vec![]; self.alg.num_vertices()];
        for &w in vertices {
            for j in 0..m.dims[w] {
                let mut e = vec![Rat::zero(); m.dims[w]];
                e[j] = Rat::one();
                spans[w].push(e);
            }
        }
        let (_, incl) = submodule_from_spans(m, &self.alg, &spans);
        incl.cokernel(&self.alg)
    }

    pub fn unit(&self, i: usize) -> &Nat {
        self.units[i - 1].as_ref().expect("unit selected at construction")
    }

    pub fn completion_unit(&self, i: usize) -> &Nat {
        self.completion_units[i - 1].as_ref().expect("unit selected at construction")
    }

    // ----- catalog decomposition -----

    pub fn decompose(&self, m: &BlockModule) -> Result<Decomposition, BlockError> {
        if m.total_dim() == 0 {
            return Ok(Decomposition { pieces: vec![], injections: vec![], projections: vec![] });
        }
        for (ci, cand) in self.catalog.iter().enumerate() {
            if cand.total_dim() > m.total_dim() {
                continue;
            }
            let injs = hom_basis(cand, m, &self.alg);
            let projs = hom_basis(m, cand, &self.alg);
            for iota in &injs {
                for pi in &projs {
                    // the summand splits off iff some pairing composite is
                    // invertible; since the endomorphism ring of an
                    // indecomposable is local, checking all basis pairs is a
                    // complete test
                    let g = pi.compose(iota);
                    let g_inv_mats: Option<Vec<Mat>> =
                        g.mats.iter().map(|x| x.inverse()).collect();
                    let Some(g_inv_mats) = g_inv_mats else { continue };
                    let g_inv = Morphism {
                        dom: cand.clone(),
                        cod: cand.clone(),
                        mats: g_inv_mats,
                    };
                    let pi_adj = g_inv.compose(pi);
                    debug_assert!(pi_adj
                        .compose(iota)
                        .sub(&Morphism::identity(cand))
                        .is_zero());
                    // Split: M = iota(cand) + ker(pi_adj).
                    let complement_proj =
                        Morphism::identity(m).sub(&iota.compose(&pi_adj));
                    let (kernel, incl) = pi_adj.kernel(&self.alg);
                    let rho = complement_proj
                        .factor_through_injection(&incl)
                        .expect("complement lands in the kernel");
                    let rest = self.decompose(&kernel)?;
                    let mut pieces = vec![ci];
                    let mut injections = vec![iota.clone()];
                    let mut projections = vec![pi_adj];
                    for (k, piece) in rest.pieces.iter().enumerate() {
                        pieces.push(*piece);
                        injections.push(incl.compose(&rest.injections[k]));
                        projections.push(rest.projections[k].compose(&rho));
                    }
                    return Ok(Decomposition { pieces, injections, projections });
                }
            }
        }
        Err(BlockError::CatalogIncomplete)
    }

    /// Multiplicity vector over the catalog.
    pub fn multiplicities(&self, m: &BlockModule) -> Result<Vec<usize>, BlockError> {
        let d = self.decompose(m)?;
        let mut counts = vec![0usize; self.catalog.len()];
        for p in d.pieces {
            counts[p] += 1;
        }
        Ok(counts)
    }

    /// Exact isomorphism test: catalog decomposition when available,
    /// otherwise a deterministic sweep for an invertible hom combination.
    pub fn iso_test(&self, m: &BlockModule, n: &BlockModule) -> Result<bool, BlockError> {
        if m.dims != n.dims {
            return Ok(false);
        }
        if m.total_dim() == 0 {
            return Ok(true);
        }
        match (self.decompose(m), self.decompose(n)) {
            (Ok(dm), Ok(dn)) => {
                let mut a = dm.pieces;
                let mut b = dn.pieces;
                a.sort_unstable();
                b.sort_unstable();
                Ok(a == b)
            }
            _ => grid_iso_test(&self.alg, m, n),
        }
    }

    // ----- natural transformations -----

    /// Basis of the space of natural transformations between two covariant
    /// functor expressions, solved over the catalog with naturality against
    /// a hom basis of every ordered pair.
    pub fn nat_space(&self, src: &Functor, dst: &Functor) -> Result<Vec<Nat>, BlockError> {
        if src.is_contravariant() || dst.is_contravariant() {
            return Err(BlockError::ContravariantExpression(format!(
                "{} / {}",
                src.render(),
                dst.render()
            )));
        }
        let nc = self.catalog.len();
        let f_obj: Vec<BlockModule> =
            self.catalog.iter().map(|m| self.eval(src, m)).collect::<Result<_, _>>()?;
        let g_obj: Vec<BlockModule> =
            self.catalog.iter().map(|m| self.eval(dst, m)).collect::<Result<_, _>>()?;
        let comp_basis: Vec<Vec<Morphism>> =
            (0..nc).map(|c| hom_basis(&f_obj[c], &g_obj[c], &self.alg)).collect();
        let offsets: Vec<usize> = {
            let mut acc = 0;
            let mut out = Vec::new();
            for c in 0..nc {
                out.push(acc);
                acc += comp_basis[c].len();
            }
            out
        };
        let total: usize = comp_basis.iter().map(|b| b.len()).sum();
        if total == 0 {
            return Ok(vec![]);
        }
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for c1 in 0..nc {
            for c2 in 0..nc {
                for h in hom_basis(&self.catalog[c1], &self.catalog[c2], &self.alg) {
                    let fh = self.eval_mor(src, &h)?;
                    let gh = self.eval_mor(dst, &h)?;
                    // phi_{c2} . F(h) = G(h) . phi_{c1}
                    for v in 0..self.alg.num_vertices() {
                        let rows_v = g_obj[c2].dims[v];
                        let cols_v = f_obj[c1].dims[v];
                        for i in 0..rows_v {
                            for j in 0..cols_v {
                                let mut row = vec![Rat::zero(); total];
                                for (b, phi) in comp_basis[c2].iter().enumerate() {
                                    let m = phi.mats[v].mul(&fh.mats[v]);
                                    row[offsets[c2] + b] = m[(i, j)].clone();
                                }
                                for (b, phi) in comp_basis[c1].iter().enumerate() {
                                    let m = gh.mats[v].mul(&phi.mats[v]);
                                    row[offsets[c1] + b] =
                                        &row[offsets[c1] + b] - &m[(i, j)];
                                }
                                if row.iter().any(|x| !x.is_zero()) {
                                    rows.push(row);
                                }
                            }
                        }
                    }
                }
            }
        }
        let system =
            if rows.is_empty() { Mat::zero(0, total) } else { Mat::from_rows(rows) };
        let sols = system.kernel_basis();
        Ok(sols
            .into_iter()
            .map(|sol| {
                let comps = (0..nc)
                    .map(|c| {
                        let mut acc = Morphism::zero(&f_obj[c], &g_obj[c]);
                        for (b, phi) in comp_basis[c].iter().enumerate() {
                            acc = acc.add(&phi.scale(&sol[offsets[c] + b]));
                        }
                        acc
                    })
                    .collect();
                Nat { src: src.clone(), dst: dst.clone(), comps }
            })
            .collect())
    }

    /// Component of a natural transformation at an arbitrary module, via
    /// the catalog decomposition.
    pub fn component_at(&self, nat: &Nat, m: &BlockModule) -> Result<Morphism, BlockError> {
        let fm = self.eval(&nat.src, m)?;
        let gm = self.eval(&nat.dst, m)?;
        let dec = self.decompose(m)?;
        let mut acc = Morphism::zero(&fm, &gm);
        for (k, &piece) in dec.pieces.iter().enumerate() {
            let fu = self.eval_mor(&nat.src, &dec.projections[k])?;
            let gu = self.eval_mor(&nat.dst, &dec.injections[k])?;
            acc = acc.add(&gu.compose(&nat.comps[piece]).compose(&fu));
        }
        Ok(acc)
    }

    /// Linear combination of natural transformations.
    pub fn nat_combine(&self, basis: &[Nat], coeffs: &[Rat]) -> Nat {
        let first = &basis[0];
        let comps = (0..self.catalog.len())
            .map(|c| {
                let mut acc = Morphism::zero(&first.comps[c].dom, &first.comps[c].cod);
                for (b, nat) in basis.iter().enumerate() {
                    acc = acc.add(&nat.comps[c].scale(&coeffs[b]));
                }
                acc
            })
            .collect();
        Nat { src: first.src.clone(), dst: first.dst.clone(), comps }
    }

    /// Deterministic sweep over small rational combinations of a natural
    /// transformation basis, returning those accepted by the criterion.
    pub fn select_nats(
        &self,
        basis: &[Nat],
        accept: &mut dyn FnMut(&Nat) -> bool,
        max_found: usize,
    ) -> Vec<Nat> {
        let k = basis.len();
        let mut found = Vec::new();
        if k == 0 {
            return found;
        }
        let coeff_pool: Vec<Rat> = vec![
            Rat::zero(),
            Rat::one(),
            -Rat::one(),
            Rat::from_integer(2.into()),
        ];
        let mut idx = vec![0usize; k];
        loop {
            if idx.iter().any(|&x| x != 0) {
                let coeffs: Vec<Rat> = idx.iter().map(|&x| coeff_pool[x].clone()).collect();
                let cand = self.nat_combine(basis, &coeffs);
                if accept(&cand) {
                    found.push(cand);
                    if found.len() >= max_found {
                        return found;
                    }
                }
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == k {
                    return found;
                }
                idx[pos] += 1;
                if idx[pos] < coeff_pool.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Select the wall-crossing unit: a natural transformation from the
    /// identity to theta whose component at the regular module is
    /// injective. All valid candidates must give isomorphic cokernels on
    /// the catalog; the first one is kept.
    fn select_unit(&mut self, i: usize) -> Result<(), BlockError> {
        let basis = self.nat_space(&Functor::Id, &Functor::Theta(i))?;
        let regular = self.regular.clone();
        let valid = {
            let this = &*self;
            let mut accept = |nat: &Nat| -> bool {
                this.component_at(nat, &regular).map(|c| c.is_injective()).unwrap_or(false)
            };
            this.select_nats(&basis, &mut accept, 6)
        };
        if valid.is_empty() {
            return Err(BlockError::UnitSelectionFailed);
        }
        // Independence of the choice: cokernels agree across candidates.
        let mut reference: Option<Vec<BlockModule>> = None;
        for cand in &valid {
            let cokers: Vec<BlockModule> = self
                .catalog
                .iter()
                .map(|m| {
                    let c = self.component_at(cand, m)?;
                    Ok(c.cokernel(&self.alg).0)
                })
                .collect::<Result<_, BlockError>>()?;
            match &reference {
                None => reference = Some(cokers),
                Some(r) => {
                    for (a, b) in r.iter().zip(&cokers) {
                        if !self.iso_test(a, b)? {
                            return Err(BlockError::UnitSelectionFailed);
                        }
                    }
                }
            }
        }
        self.units[i - 1] = Some(valid.into_iter().next().unwrap());
        Ok(())
    }

    /// Select the completion unit from the identity to the completion
    /// functor: invertible on the wall projective; independence asserted
    /// through the cokernels.
    fn select_completion_unit(&mut self, i: usize) -> Result<(), BlockError> {
        let basis = self.nat_space(&Functor::Id, &Functor::Completion(i))?;
        let wall = self.projectives[self.alg.theta_vertex(i)?].clone();
        let valid = {
            let this = &*self;
            let mut accept = |nat: &Nat| -> bool {
                this.component_at(nat, &wall).map(|c| c.is_isomorphism()).unwrap_or(false)
            };
            this.select_nats(&basis, &mut accept, 6)
        };
        if valid.is_empty() {
            return Err(BlockError::CompletionUnitSelectionFailed);
        }
        let mut reference: Option<Vec<BlockModule>> = None;
        for cand in &valid {
            let cokers: Vec<BlockModule> = self
                .catalog
                .iter()
                .map(|m| {
                    let c = self.component_at(cand, m)?;
                    Ok(c.cokernel(&self.alg).0)
                })
                .collect::<Result<_, BlockError>>()?;
            match &reference {
                None => reference = Some(cokers),
                Some(r) => {
                    for (a, b) in r.iter().zip(&cokers) {
                        if !self.iso_test(a, b)? {
                            return Err(BlockError::CompletionUnitSelectionFailed);
                        }
                    }
                }
            }
        }
        self.completion_units[i - 1] = Some(valid.into_iter().next().unwrap());
        Ok(())
    }
}

/// Exact isomorphism test without a catalog: dimension vectors must match
/// and some rational combination of a hom basis must be invertible. A
/// nonzero determinant polynomial of degree at most D cannot vanish on the
/// grid {0..D}^k, so the sweep is a decision procedure.
pub fn grid_iso_test(
    alg: &BlockAlgebra,
    m: &BlockModule,
    n: &BlockModule,
) -> Result<bool, BlockError> {
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.total_dim() == 0 {
        return Ok(true);
    }
    let basis = hom_basis(m, n, alg);
    let k = basis.len();
    if k == 0 {
        return Ok(false);
    }
    if k > 10 {
        return Err(BlockError::IsoTestTooLarge);
    }
    let d = m.total_dim();
    let mut idx = vec![0usize; k];
    loop {
        if idx.iter().any(|&x| x != 0) {
            let mut cand = Morphism::zero(m, n);
            for (b, phi) in basis.iter().enumerate() {
                cand = cand.add(&phi.scale(&Rat::from_integer((idx[b] as i64).into())));
            }
            if cand.is_isomorphism() {
                return Ok(true);
            }
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(false);
            }
            idx[pos] += 1;
            if idx[pos] <= d {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_block_builds_with_expected_dimensions() {
        let block = Block::sl2();
        assert_eq!(block.alg.dim(), 5);
        assert_eq!(block.projectives[0].total_dim(), 2);
        assert_eq!(block.projectives[1].total_dim(), 3);
        assert_eq!(block.regular.total_dim(), 5);
        assert_eq!(block.catalog.len(), 5);
        for m in &block.catalog {
            assert!(m.satisfies_relations(&block.alg), "{:?}", m.label);
        }
    }

    #[test]
    fn twist_images_match_expected() {
        let block = Block::sl2();
        let delta_e = block.module_by_name("Delta(e)").unwrap();
        let delta_s = block.module_by_name("Delta(s)").unwrap();
        let d_delta_e = block.module_by_name("dDelta(e)").unwrap();
        let ps = block.module_by_name("P(s)").unwrap();
        let t = Functor::Twist(1);
        let g = Functor::Completion(1);
        // T Delta(e) = Delta(s)
        let tde = block.eval(&t, &delta_e).unwrap();
        assert!(block.iso_test(&tde, &delta_s).unwrap());
        // T Delta(s) = dDelta(e)
        let tds = block.eval(&t, &delta_s).unwrap();
        assert!(block.iso_test(&tds, &d_delta_e).unwrap());
        // G Delta(s) = Delta(e)
        let gds = block.eval(&g, &delta_s).unwrap();
        assert!(block.iso_test(&gds, &delta_e).unwrap());
        // GT Delta(e) = Delta(e)
        let gt = Functor::compose(g.clone(), t.clone());
        let gtde = block.eval(&gt, &delta_e).unwrap();
        assert!(block.iso_test(&gtde, &delta_e).unwrap());
        // G^2 (T Delta(s)) = Delta(e)
        let g2 = Functor::compose(g.clone(), g.clone());
        let g2tds = block.eval(&g2, &tds).unwrap();
        assert!(block.iso_test(&g2tds, &delta_e).unwrap());
        // T P(s) = P(s)
        let tps = block.eval(&t, &ps).unwrap();
        assert!(block.iso_test(&tps, &ps).unwrap());
        // T kills L(e), not L(s)
        let le = block.module_by_name("L(e)").unwrap();
        let ls = block.module_by_name("L(s)").unwrap();
        assert!(block.eval(&t, &le).unwrap().is_zero());
        assert!(!block.eval(&t, &ls).unwrap().is_zero());
    }

    #[test]
    fn theta_images_match_expected() {
        let block = Block::sl2();
        let theta = Functor::Theta(1);
        let le = block.module_by_name("L(e)").unwrap();
        let ls = block.module_by_name("L(s)").unwrap();
        let ps = block.module_by_name("P(s)").unwrap();
        let delta_e = block.module_by_name("Delta(e)").unwrap();
        assert!(block.eval(&theta, &le).unwrap().is_zero());
        let tls = block.eval(&theta, &ls).unwrap();
        assert!(block.iso_test(&tls, &ps).unwrap());
        // theta Delta(e) is the indecomposable extension: here P(s)
        let tde = block.eval(&theta, &delta_e).unwrap();
        assert!(block.iso_test(&tde, &ps).unwrap());
        // theta^2 M = theta M + theta M
        for m in &block.catalog {
            let t1 = block.eval(&theta, m).unwrap();
            let t2 = block.eval(&theta, &t1).unwrap();
            let doubled = t1.direct_sum(&t1, &block.alg);
            assert!(block.iso_test(&t2, &doubled).unwrap(), "{:?}", m.label);
        }
    }

    #[test]
    fn shuffle_and_quotients() {
        let block = Block::sl2();
        let c = Functor::Shuffle(1);
        let z = Functor::Zuckerman(1);
        let zhat = Functor::Zhat(1);
        let delta_e = block.module_by_name("Delta(e)").unwrap();
        let delta_s = block.module_by_name("Delta(s)").unwrap();
        let le = block.module_by_name("L(e)").unwrap();
        let ls = block.module_by_name("L(s)").unwrap();
        // C Delta(e) = Delta(s)
        let cde = block.eval(&c, &delta_e).unwrap();
        assert!(block.iso_test(&cde, &delta_s).unwrap());
        // Z L(e) = L(e), Z L(s) = 0, Z Delta(e) = L(e)
        assert!(block.iso_test(&block.eval(&z, &le).unwrap(), &le).unwrap());
        assert!(block.eval(&z, &ls).unwrap().is_zero());
        assert!(block.iso_test(&block.eval(&z, &delta_e).unwrap(), &le).unwrap());
        // Z and Zhat agree at rank two
        for m in &block.catalog {
            let a = block.eval(&z, m).unwrap();
            let b = block.eval(&zhat, m).unwrap();
            assert!(block.iso_test(&a, &b).unwrap());
        }
    }

    #[test]
    fn iso_test_examples() {
        let block = Block::sl2();
        let delta_e = block.module_by_name("Delta(e)").unwrap();
        let pe = block.projectives[0].clone();
        assert!(block.iso_test(&delta_e, &pe).unwrap());
        let dde = block.module_by_name("dDelta(e)").unwrap();
        assert!(!block.iso_test(&delta_e, &dde).unwrap());
        let t = Functor::Twist(1);
        let delta_s = block.module_by_name("Delta(s)").unwrap();
        let tds = block.eval(&t, &delta_s).unwrap();
        assert!(block.iso_test(&tds, &dde).unwrap());
    }

    #[test]
    fn decompose_regular_module() {
        let block = Block::sl2();
        let counts = block.multiplicities(&block.regular).unwrap();
        // A = P(e) + P(s) = Delta(e) + P(s)
        let labels = block.catalog_labels();
        let de_idx = labels.iter().position(|l| l == "Delta(e)").unwrap();
        let ps_idx = labels.iter().position(|l| l == "P(s)").unwrap();
        let mut expected = vec![0; labels.len()];
        expected[de_idx] = 1;
        expected[ps_idx] = 1;
        assert_eq!(counts, expected);
    }

    #[test]
    fn only_five_indecomposables_up_to_dim_three() {
        // Case analysis over dimension vectors with total dimension <= 3:
        // every module satisfying the relation decomposes into the catalog.
        // With the relation (the composite through s vanishing on the e
        // component), a module with dims (2,1) forces one of the two arrow
        // matrices to vanish, so the catalog list is complete there; the
        // representative shapes below cover every rank pattern.
        let block = Block::sl2();
        let alg = &block.alg;
        use crate::linalg::{rat, Mat};
        let mk = |de: usize, ds: usize, a: Vec<Vec<i64>>, b: Vec<Vec<i64>>| BlockModule {
            dims: vec![de, ds],
            arrows: vec![
                Mat::from_rows(a.into_iter().map(|r| r.into_iter().map(rat).collect()).collect()),
                Mat::from_rows(b.into_iter().map(|r| r.into_iter().map(rat).collect()).collect()),
            ],
            label: None,
        };
        let candidates = vec![
            mk(1, 1, vec![vec![1]], vec![vec![0]]),
            mk(1, 1, vec![vec![0]], vec![vec![1]]),
            mk(1, 1, vec![vec![0]], vec![vec![0]]),
            mk(1, 2, vec![vec![0], vec![1]], vec![vec![1, 0]]),
            mk(1, 2, vec![vec![1], vec![0]], vec![vec![0, 0]]),
            mk(1, 2, vec![vec![0], vec![0]], vec![vec![1, 0]]),
            mk(2, 1, vec![vec![1, 0]], vec![vec![0], vec![0]]),
            mk(2, 1, vec![vec![0, 0]], vec![vec![1], vec![0]]),
            mk(2, 1, vec![vec![0, 0]], vec![vec![0], vec![0]]),
        ];
        for m in candidates {
            assert!(m.satisfies_relations(alg));
            assert!(block.decompose(&m).is_ok(), "indecomposable outside the catalog");
        }
        // the catalog members are pairwise non-isomorphic
        for i in 0..block.catalog.len() {
            for j in 0..block.catalog.len() {
                assert_eq!(
                    block.iso_test(&block.catalog[i], &block.catalog[j]).unwrap(),
                    i == j
                );
            }
        }
    }

    #[test]
    fn duality_exchanges_covers_and_hulls() {
        let block = Block::sl2();
        let alg = &block.alg;
        // d fixes the simples and exchanges Delta(e) with dDelta(e)
        for name in ["L(e)", "L(s)"] {
            let m = block.module_by_name(name).unwrap();
            assert!(block.iso_test(&m, &m.dual(alg)).unwrap());
        }
        let de = block.module_by_name("Delta(e)").unwrap();
        let dde = block.module_by_name("dDelta(e)").unwrap();
        assert!(block.iso_test(&de.dual(alg), &dde).unwrap());
        // P(s) is self-dual
        let ps = block.module_by_name("P(s)").unwrap();
        assert!(block.iso_test(&ps.dual(alg), &ps).unwrap());
    }

    #[test]
    fn functor_expression_errors() {
        let block = Block::sl2();
        let m = block.module_by_name("L(e)").unwrap();
        assert!(matches!(
            block.eval(&Functor::Twist(9), &m),
            Err(BlockError::IndexOutOfRange { .. })
        ));
        assert!(block.module_by_name("nonsense").is_err());
    }
}
