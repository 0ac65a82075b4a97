//! Minimal projective resolutions, injective coresolutions (through the
//! duality), derived-functor cohomology, Ext dimensions and homological
//! dimensions.

use super::block::{Block, BlockError};
use super::functor::Functor;
use super::module::{hom_basis, radical, BlockModule, Morphism};
use crate::linalg::{Mat, Rat, Subspace};
use num_traits::{One, Zero};

pub struct Resolution {
    /// P_0, P_1, ..., P_k
    pub modules: Vec<BlockModule>,
    /// d_j: P_j -> P_{j-1}, stored at index j-1
    pub differentials: Vec<Morphism>,
    pub augmentation: Morphism,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }
}

/// Projective cover: the sum of vertex projectives matching the head.
pub fn projective_cover(block: &Block, m: &BlockModule) -> (BlockModule, Morphism) {
    let alg = &block.alg;
    if m.total_dim() == 0 {
        let zero = BlockModule::zero_module(alg);
        return (zero.clone(), Morphism::zero(&zero, m));
    }
    let (_, rad_incl) = radical(m, alg);
    // head lifts: per vertex, unit vectors at non-pivot coordinates of the
    // radical subspace
    let mut cover_pieces: Vec<(usize, Vec<Rat>)> = Vec::new();
    for v in 0..alg.num_vertices() {
        let span: Vec<Vec<Rat>> =
            (0..rad_incl.mats[v].cols).map(|c| rad_incl.mats[v].col(c)).collect();
        let sub = Subspace::from_spanning(&span, m.dims[v]);
        let pivot_set: std::collections::HashSet<usize> =
            sub.pivots.iter().copied().collect();
        for j in 0..m.dims[v] {
            if !pivot_set.contains(&j) {
                let mut e = vec![Rat::zero(); m.dims[v]];
                e[j] = Rat::one();
                cover_pieces.push((v, e));
            }
        }
    }
    // assemble P = direct sum of projectives, and the cover morphism
    let mut p = BlockModule::zero_module(alg);
    let mut offsets: Vec<Vec<usize>> = Vec::new(); // per piece, per vertex offset
    for (v, _) in &cover_pieces {
        offsets.push(p.dims.clone());
        p = p.direct_sum(&block.projectives[*v], alg);
    }
    let mut mats: Vec<Mat> =
        (0..alg.num_vertices()).map(|v| Mat::zero(m.dims[v], p.dims[v])).collect();
    for (piece, (v, gen)) in cover_pieces.iter().enumerate() {
        let proj = &block.projectives[*v];
        // basis of P(v): paths with source v, grouped by target
        let paths: Vec<usize> =
            (0..alg.dim()).filter(|&k| alg.path_source(&alg.paths[k]) == *v).collect();
        let mut per_vertex_count = vec![0usize; alg.num_vertices()];
        for &k in &paths {
            let t = alg.path_target(&alg.paths[k]);
            let col = offsets[piece][t] + per_vertex_count[t];
            per_vertex_count[t] += 1;
            // image of the path applied to the generator vector
            let pm = alg.path_matrix(&alg.paths[k], &m.dims, &m.arrows);
            let img = pm.mul_vec(gen);
            for (row, c) in img.into_iter().enumerate() {
                mats[t][(row, col)] = c;
            }
        }
        debug_assert_eq!(per_vertex_count, proj.dims);
    }
    let cover = Morphism { dom: p.clone(), cod: m.clone(), mats };
    debug_assert!(cover.is_surjective(), "projective cover must be onto");
    debug_assert!(cover.is_module_map(&block.alg));
    (p, cover)
}

/// Minimal projective resolution, computed by iterated covers of kernels.
pub fn projective_resolution(block: &Block, m: &BlockModule, max_len: usize) -> Resolution {
    let (p0, aug) = projective_cover(block, m);
    let mut modules = vec![p0];
    let mut differentials = Vec::new();
    let mut last_map = aug.clone();
    for _ in 0..max_len {
        let (kernel, incl) = last_map.kernel(&block.alg);
        if kernel.total_dim() == 0 {
            break;
        }
        let (p_next, cover) = projective_cover(block, &kernel);
        let d = incl.compose(&cover);
        modules.push(p_next);
        differentials.push(d.clone());
        last_map = d;
    }
    Resolution { modules, differentials, augmentation: aug }
}

/// Injective coresolution via duality: I^j = d P_j(dM).
pub struct Coresolution {
    pub modules: Vec<BlockModule>,
    /// delta_j: I^j -> I^{j+1}, stored at index j
    pub maps: Vec<Morphism>,
    pub coaugmentation: Morphism,
}

impl Coresolution {
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }
}

pub fn injective_coresolution(block: &Block, m: &BlockModule, max_len: usize) -> Coresolution {
    let alg = &block.alg;
    let dm = m.dual(alg);
    let res = projective_resolution(block, &dm, max_len);
    let modules: Vec<BlockModule> = res.modules.iter().map(|p| p.dual(alg)).collect();
    let maps: Vec<Morphism> = res.differentials.iter().map(|d| d.dual(alg)).collect();
    let coaugmentation = res.augmentation.dual(alg);
    Coresolution { modules, maps, coaugmentation }
}

/// Homology of a two-step complex  A --f--> B --g--> C  at B (g . f = 0).
fn homology_at(
    block: &Block,
    f: &Morphism,
    g: &Morphism,
) -> Result<BlockModule, BlockError> {
    let alg = &block.alg;
    debug_assert!(g.compose(f).is_zero(), "not a complex");
    let (_, incl) = g.kernel(alg);
    let into_kernel =
        f.factor_through_injection(&incl).expect("image lies in the kernel of the next map");
    Ok(into_kernel.cokernel(alg).0)
}

/// i-th left derived functor of a right-exact covariant expression.
pub fn derived_left(
    block: &Block,
    f: &Functor,
    m: &BlockModule,
    degree: usize,
    max_len: usize,
) -> Result<BlockModule, BlockError> {
    let res = projective_resolution(block, m, max_len);
    if degree == 0 {
        // H_0 of the image complex = F(M) for right-exact F.
        return block.eval(f, m);
    }
    if degree > res.differentials.len() {
        return Ok(BlockModule::zero_module(&block.alg));
    }
    let fd_i = block.eval_mor(f, &res.differentials[degree - 1])?;
    if degree == res.differentials.len() {
        // leftmost position: homology = ker(F d_i)
        let (ker, _) = fd_i.kernel(&block.alg);
        return Ok(ker);
    }
    let fd_next = block.eval_mor(f, &res.differentials[degree])?;
    homology_at(block, &fd_next, &fd_i)
}

/// i-th right derived functor of a left-exact covariant expression.
pub fn derived_right(
    block: &Block,
    f: &Functor,
    m: &BlockModule,
    degree: usize,
    max_len: usize,
) -> Result<BlockModule, BlockError> {
    let cores = injective_coresolution(block, m, max_len);
    if degree == 0 {
        return block.eval(f, m);
    }
    if degree > cores.maps.len() {
        return Ok(BlockModule::zero_module(&block.alg));
    }
    let fdelta = block.eval_mor(f, &cores.maps[degree - 1])?;
    if degree == cores.maps.len() {
        // the outgoing map is zero, so the homology is the full cokernel
        let zero_out = Morphism::zero(&fdelta.cod, &BlockModule::zero_module(&block.alg));
        return homology_at(block, &fdelta, &zero_out);
    }
    let fdelta_next = block.eval_mor(f, &cores.maps[degree])?;
    homology_at(block, &fdelta, &fdelta_next)
}

fn flat(mor: &Morphism) -> Vec<Rat> {
    let mut v = Vec::new();
    for m in &mor.mats {
        v.extend(m.data.iter().cloned());
    }
    v
}

/// dim Ext^i(M, N) through Hom applied to a minimal projective resolution.
pub fn ext_dim(block: &Block, m: &BlockModule, n: &BlockModule, degree: usize) -> usize {
    let alg = &block.alg;
    let res = projective_resolution(block, m, 16);
    let hom_at = |j: usize| -> Vec<Morphism> {
        if j < res.modules.len() {
            hom_basis(&res.modules[j], n, alg)
        } else {
            vec![]
        }
    };
    // delta^j : Hom(P_j, N) -> Hom(P_{j+1}, N), phi -> phi . d_{j+1};
    // callers only invoke this with nonempty source and target bases.
    let delta_matrix = |j: usize, src: &[Morphism], dst: &[Morphism]| -> Mat {
        let dst_flat: Vec<Vec<Rat>> = dst.iter().map(flat).collect();
        let dim_flat = dst_flat[0].len();
        let mut basis = Mat::zero(dim_flat, dst.len());
        for (c, v) in dst_flat.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                basis[(r, c)] = x.clone();
            }
        }
        let mut out = Mat::zero(dst.len(), src.len());
        for (c, phi) in src.iter().enumerate() {
            let composed = phi.compose(&res.differentials[j]);
            let target = flat(&composed);
            let sol = basis.solve(&target).expect("hom space closed under composition");
            for (r, x) in sol.into_iter().enumerate() {
                out[(r, c)] = x;
            }
        }
        out
    };
    let cur = hom_at(degree);
    if cur.is_empty() {
        return 0;
    }
    // kernel of delta^degree
    let ker_dim = if degree < res.differentials.len() {
        let next = hom_at(degree + 1);
        if next.is_empty() {
            cur.len()
        } else {
            cur.len() - delta_matrix(degree, &cur, &next).rank()
        }
    } else {
        cur.len()
    };
    // image of delta^{degree-1}
    let im_dim = if degree == 0 {
        0
    } else {
        let prev = hom_at(degree - 1);
        if prev.is_empty() {
            0
        } else {
            delta_matrix(degree - 1, &prev, &cur).rank()
        }
    };
    ker_dim - im_dim
}

pub fn projdim(block: &Block, m: &BlockModule) -> usize {
    if m.total_dim() == 0 {
        return 0;
    }
    projective_resolution(block, m, 32).length()
}

pub fn injdim(block: &Block, m: &BlockModule) -> usize {
    if m.total_dim() == 0 {
        return 0;
    }
    projdim(block, &m.dual(&block.alg))
}

pub fn global_dim(block: &Block) -> usize {
    (0..block.alg.num_vertices())
        .map(|v| projdim(block, &BlockModule::simple(&block.alg, v)))
        .max()
        .unwrap_or(0)
}

/// Lengths of the minimal projective and injective resolutions.
pub fn homological_dims(block: &Block, m: &BlockModule) -> (usize, usize) {
    (projdim(block, m), injdim(block, m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Derived cohomology with the exactness direction validated: left derived
/// functors need a right-exact expression and vice versa.
pub fn derived_cohomology(
    block: &Block,
    f: &Functor,
    m: &BlockModule,
    degree: usize,
    direction: Direction,
) -> Result<BlockModule, BlockError> {
    match direction {
        Direction::Left => {
            if !f.is_right_exact() {
                return Err(BlockError::WrongExactness(f.render()));
            }
            derived_left(block, f, m, degree, 16)
        }
        Direction::Right => {
            if !f.is_left_exact() {
                return Err(BlockError::WrongExactness(f.render()));
            }
            derived_right(block, f, m, degree, 16)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blockcat::Functor;

    #[test]
    fn resolutions_of_simples() {
        let block = Block::sl2();
        let le = block.module_by_name("L(e)").unwrap();
        let ls = block.module_by_name("L(s)").unwrap();
        // L(s) has the two-step resolution by P(s) and P(e)
        let res = projective_resolution(&block, &ls, 8);
        assert_eq!(res.length(), 1);
        assert_eq!(res.modules[0].total_dim(), 3);
        assert_eq!(res.modules[1].total_dim(), 2);
        // L(e) needs one more step
        assert_eq!(projective_resolution(&block, &le, 8).length(), 2);
        assert_eq!(global_dim(&block), 2);
        assert_eq!(homological_dims(&block, &block.projectives[0]).0, 0);
    }

    #[test]
    fn derived_direction_validation() {
        let block = Block::sl2();
        let m = block.module_by_name("Delta(e)").unwrap();
        // the completion is left exact: left-derived request must error
        let g = Functor::Completion(1);
        assert!(matches!(
            derived_cohomology(&block, &g, &m, 1, Direction::Left),
            Err(BlockError::WrongExactness(_))
        ));
        // and works in the right direction
        let r1 = derived_cohomology(&block, &g, &m, 1, Direction::Right).unwrap();
        let z = block.eval(&Functor::Zuckerman(1), &m).unwrap();
        assert!(block.iso_test(&r1, &z).unwrap());
        // the parabolic quotient is right exact: right-derived must error
        assert!(matches!(
            derived_cohomology(&block, &Functor::Zuckerman(1), &m, 1, Direction::Right),
            Err(BlockError::WrongExactness(_))
        ));
    }

    #[test]
    fn ext_between_simples() {
        let block = Block::sl2();
        let le = block.module_by_name("L(e)").unwrap();
        let ls = block.module_by_name("L(s)").unwrap();
        assert_eq!(ext_dim(&block, &le, &le, 0), 1);
        assert_eq!(ext_dim(&block, &le, &ls, 1), 1);
        assert_eq!(ext_dim(&block, &ls, &le, 1), 1);
        assert_eq!(ext_dim(&block, &le, &le, 1), 0);
        // the relation contributes a second-degree class
        assert_eq!(ext_dim(&block, &le, &le, 2), 1);
    }
}
