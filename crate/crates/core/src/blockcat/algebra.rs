//! Quiver algebras with relations: a path-rewriting engine producing a
//! basis of irreducible paths, multiplication by concatenate-and-rewrite,
//! an arrow anti-involution inducing the duality, and the wall data needed
//! by the functor layer. Vertices are labelled by Weyl group elements.

use crate::linalg::{Mat, Rat};
use crate::weyl::WeylElement;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("arrows {0:?} and {1:?} are not composable")]
    NotComposable(String, String),
    #[error("relation terms must be parallel paths")]
    NonParallelRelation,
    #[error("path rewriting did not terminate within bounds")]
    RewritingDiverged,
    #[error("algebra is not finite-dimensional within the path length bound")]
    NotFiniteDimensional,
    #[error("anti-involution must reverse arrows: {0:?}")]
    BadInvolution(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("wall {0} does not have a single projective-injective vertex")]
    NoWallVertex(usize),
    #[error("invalid algebra description: {0}")]
    Invalid(String),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error(transparent)]
    Weyl(#[from] crate::weyl::WeylError),
}

/// A path in traversal order: `arrows[0]` is walked first. The empty path
/// at a vertex is represented separately by the vertex index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub vertex: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path { vertex, arrows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// Serializable description of a block algebra.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSpec {
    /// Weyl rank of the labelling group.
    pub rank: usize,
    /// vertex name -> Weyl element (word like "s1 s2", "e", or one-line).
    pub vertices: Vec<(String, String)>,
    pub arrows: Vec<ArrowSpec>,
    /// Each relation is a rational combination of parallel paths:
    /// [[coeff, [arrow names...]], ...] summing to zero.
    pub relations: Vec<Vec<(String, Vec<String>)>>,
    /// arrow name -> arrow name, reversing orientation.
    pub antiinvolution: BTreeMap<String, String>,
}

/// A finite-dimensional quiver algebra with relations. Elements are
/// rational vectors over the basis of irreducible paths; multiplication is
/// function-order (x * y walks y first).
pub struct BlockAlgebra {
    pub rank: usize,
    pub vertex_names: Vec<String>,
    pub vertex_weyl: Vec<WeylElement>,
    pub arrow_names: Vec<String>,
    pub arrow_from: Vec<usize>,
    pub arrow_to: Vec<usize>,
    /// relations as combinations of parallel paths (kept for module checks)
    pub relations: Vec<Vec<(Rat, Path)>>,
    /// anti-involution on arrows
    pub involution: Vec<usize>,
    /// irreducible paths = basis of the algebra
    pub paths: Vec<Path>,
    path_index: BTreeMap<Path, usize>,
    /// oriented rewriting rules on paths
    rules: Vec<(Vec<usize>, Vec<(Rat, Path)>)>,
}

pub fn parse_rat(text: &str) -> Result<Rat, AlgebraError> {
    let t = text.trim();
    let bad = || AlgebraError::BadRational(text.to_string());
    match t.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            Ok(Rat::new(a.into(), b.into()))
        }
        None => {
            let a: i64 = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(a.into()))
        }
    }
}

impl BlockAlgebra {
    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self, AlgebraError> {
        let vertex_names: Vec<String> = spec.vertices.iter().map(|(n, _)| n.clone()).collect();
        let mut vertex_weyl = Vec::new();
        for (_, w) in &spec.vertices {
            vertex_weyl.push(WeylElement::parse(spec.rank, w)?);
        }
        let vidx = |name: &str| -> Result<usize, AlgebraError> {
            vertex_names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| AlgebraError::UnknownVertex(name.to_string()))
        };
        let mut arrow_names = Vec::new();
        let mut arrow_from = Vec::new();
        let mut arrow_to = Vec::new();
        for a in &spec.arrows {
            arrow_names.push(a.name.clone());
            arrow_from.push(vidx(&a.from)?);
            arrow_to.push(vidx(&a.to)?);
        }
        let aidx = |name: &str| -> Result<usize, AlgebraError> {
            arrow_names
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| AlgebraError::UnknownArrow(name.to_string()))
        };
        // Assemble relations as parallel-path combinations.
        let mut relations = Vec::new();
        for rel in &spec.relations {
            let mut combo = Vec::new();
            let mut endpoints: Option<(usize, usize)> = None;
            for (coeff, arrows) in rel {
                let c = parse_rat(coeff)?;
                if arrows.is_empty() {
                    return Err(AlgebraError::Invalid(
                        "relations must consist of nonempty paths".to_string(),
                    ));
                }
                let ids: Vec<usize> =
                    arrows.iter().map(|n| aidx(n)).collect::<Result<_, _>>()?;
                for w in ids.windows(2) {
                    if arrow_to[w[0]] != arrow_from[w[1]] {
                        return Err(AlgebraError::NotComposable(
                            arrow_names[w[0]].clone(),
                            arrow_names[w[1]].clone(),
                        ));
                    }
                }
                let ep = (arrow_from[ids[0]], arrow_to[*ids.last().unwrap()]);
                match endpoints {
                    None => endpoints = Some(ep),
                    Some(e) if e == ep => {}
                    _ => return Err(AlgebraError::NonParallelRelation),
                }
                combo.push((c, Path { vertex: arrow_from[ids[0]], arrows: ids }));
            }
            relations.push(combo);
        }
        // Anti-involution.
        let mut involution = vec![usize::MAX; arrow_names.len()];
        for (k, v) in &spec.antiinvolution {
            involution[aidx(k)?] = aidx(v)?;
        }
        for (a, &ia) in involution.iter().enumerate() {
            if ia == usize::MAX {
                return Err(AlgebraError::BadInvolution(arrow_names[a].clone()));
            }
            if arrow_from[a] != arrow_to[ia] || arrow_to[a] != arrow_from[ia] {
                return Err(AlgebraError::BadInvolution(arrow_names[a].clone()));
            }
        }
        for a in 0..involution.len() {
            if involution[involution[a]] != a {
                return Err(AlgebraError::BadInvolution(arrow_names[a].clone()));
            }
        }

        let mut alg = BlockAlgebra {
            rank: spec.rank,
            vertex_names,
            vertex_weyl,
            arrow_names,
            arrow_from,
            arrow_to,
            relations,
            involution,
            paths: vec![],
            path_index: BTreeMap::new(),
            rules: vec![],
        };
        alg.complete_rules()?;
        alg.enumerate_paths()?;
        alg.validate()?;
        Ok(alg)
    }

    /// The two-vertex block with arrows a: e -> s and b: s -> e and the
    /// composite a-then-b equal to zero, so that the projective at e is the
    /// standard module of dimension vector (1,1).
    pub fn sl2() -> BlockAlgebra {
        let spec = AlgebraSpec {
            rank: 2,
            vertices: vec![
                ("e".to_string(), "e".to_string()),
                ("s".to_string(), "s1".to_string()),
            ],
            arrows: vec![
                ArrowSpec { name: "a".to_string(), from: "e".to_string(), to: "s".to_string() },
                ArrowSpec { name: "b".to_string(), from: "s".to_string(), to: "e".to_string() },
            ],
            relations: vec![vec![(
                "1".to_string(),
                vec!["a".to_string(), "b".to_string()],
            )]],
            antiinvolution: [("a".to_string(), "b".to_string()), ("b".to_string(), "a".to_string())]
                .into_iter()
                .collect(),
        };
        BlockAlgebra::from_spec(&spec).expect("built-in block is valid")
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrow_names.len()
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn path_source(&self, p: &Path) -> usize {
        if p.arrows.is_empty() {
            p.vertex
        } else {
            self.arrow_from[p.arrows[0]]
        }
    }

    pub fn path_target(&self, p: &Path) -> usize {
        if p.arrows.is_empty() {
            p.vertex
        } else {
            self.arrow_to[*p.arrows.last().unwrap()]
        }
    }

    pub fn path_idx(&self, p: &Path) -> Option<usize> {
        self.path_index.get(p).copied()
    }

    /// Vertices whose simple survives the twist at wall i:
    /// {w : s_i w < w}.
    pub fn twist_vertices(&self, i: usize) -> Result<Vec<usize>, AlgebraError> {
        self.wall_vertex_set(i, true)
    }

    /// {w : w s_i < w}, the mirror condition used by the hat quotient.
    pub fn cotwist_vertices(&self, i: usize) -> Result<Vec<usize>, AlgebraError> {
        self.wall_vertex_set(i, false)
    }

    fn wall_vertex_set(&self, i: usize, left: bool) -> Result<Vec<usize>, AlgebraError> {
        if i == 0 || i >= self.rank {
            return Err(AlgebraError::IndexOutOfRange { index: i, rank: self.rank });
        }
        Ok((0..self.num_vertices())
            .filter(|&v| {
                let w = &self.vertex_weyl[v];
                let moved = if left { w.mul_simple_left(i) } else { w.mul_simple_right(i) };
                moved.length() < w.length()
            })
            .collect())
    }

    /// The single projective-injective wall vertex used to realize the
    /// wall-crossing functor; requires exactly one vertex with s_i w < w.
    pub fn theta_vertex(&self, i: usize) -> Result<usize, AlgebraError> {
        let set = self.twist_vertices(i)?;
        if set.len() != 1 {
            return Err(AlgebraError::NoWallVertex(i));
        }
        Ok(set[0])
    }

    // ----- path rewriting -----

    fn order(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
        a.len().cmp(&b.len()).then_with(|| a.cmp(b))
    }

    /// Orient each relation by its largest path and complete overlaps.
    fn complete_rules(&mut self) -> Result<(), AlgebraError> {
        let mut rules: Vec<(Vec<usize>, Vec<(Rat, Path)>)> = Vec::new();
        for rel in &self.relations {
            if let Some(rule) = orient_relation(rel) {
                rules.push(rule);
            }
        }
        // Interreduce and resolve overlaps, with a hard bound.
        for _round in 0..64 {
            let mut added = false;
            let snapshot = rules.clone();
            for (l1, r1) in &snapshot {
                for (l2, r2) in &snapshot {
                    // proper overlap: suffix of l1 = prefix of l2
                    for k in 1..l1.len().min(l2.len()) {
                        if l1[l1.len() - k..] == l2[..k] {
                            let mut sup = l1.clone();
                            sup.extend_from_slice(&l2[k..]);
                            // two reducts
                            let mut a = combo_from_rule(r1, &[], &l2[k..], self);
                            let b_pre = &l1[..l1.len() - k];
                            let mut b = combo_from_rule(r2, b_pre, &[], self);
                            a = self.reduce_combo_with(a, &rules);
                            b = self.reduce_combo_with(b, &rules);
                            let diff = combo_sub(&a, &b);
                            if !diff.is_empty() {
                                if let Some(rule) = orient_relation(&diff) {
                                    rules.push(rule);
                                    added = true;
                                }
                            }
                            let _ = sup;
                        }
                    }
                    // containment: l2 a factor of l1
                    if l2.len() < l1.len() {
                        for start in 0..=l1.len() - l2.len() {
                            if &l1[start..start + l2.len()] == l2.as_slice() {
                                let a = self.reduce_combo_with(r1.clone(), &rules);
                                let b = self.reduce_combo_with(
                                    combo_from_rule(r2, &l1[..start], &l1[start + l2.len()..], self),
                                    &rules,
                                );
                                let diff = combo_sub(&a, &b);
                                if !diff.is_empty() {
                                    if let Some(rule) = orient_relation(&diff) {
                                        rules.push(rule);
                                        added = true;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            if !added {
                self.rules = rules;
                return Ok(());
            }
            if rules.len() > 512 {
                return Err(AlgebraError::RewritingDiverged);
            }
        }
        Err(AlgebraError::RewritingDiverged)
    }

    fn reduce_combo_with(
        &self,
        combo: Vec<(Rat, Path)>,
        rules: &[(Vec<usize>, Vec<(Rat, Path)>)],
    ) -> Vec<(Rat, Path)> {
        let mut acc: BTreeMap<Path, Rat> = BTreeMap::new();
        let mut work = combo;
        let mut guard = 0usize;
        while let Some((c, p)) = work.pop() {
            guard += 1;
            if guard > 100_000 {
                panic!("path reduction diverged");
            }
            if c.is_zero() {
                continue;
            }
            // find a rule factor
            let mut applied = false;
            'rules: for (lead, rest) in rules {
                if lead.len() > p.arrows.len() {
                    continue;
                }
                for start in 0..=p.arrows.len() - lead.len() {
                    if &p.arrows[start..start + lead.len()] == lead.as_slice() {
                        for (rc, rp) in rest {
                            let mut arrows = p.arrows[..start].to_vec();
                            arrows.extend_from_slice(&rp.arrows);
                            arrows.extend_from_slice(&p.arrows[start + lead.len()..]);
                            let np = if arrows.is_empty() {
                                Path::trivial(rp.vertex)
                            } else {
                                Path { vertex: self.arrow_from[arrows[0]], arrows }
                            };
                            work.push((&c * rc, np));
                        }
                        applied = true;
                        break 'rules;
                    }
                }
            }
            if !applied {
                *acc.entry(p).or_insert_with(Rat::zero) += c;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect()
    }

    /// Canonical form of a path combination in the quotient algebra.
    pub fn reduce_combo(&self, combo: Vec<(Rat, Path)>) -> Vec<(Rat, Path)> {
        let rules = self.rules.clone();
        self.reduce_combo_with(combo, &rules)
    }

    fn enumerate_paths(&mut self) -> Result<(), AlgebraError> {
        let mut paths: Vec<Path> = (0..self.num_vertices()).map(Path::trivial).collect();
        let mut layer = paths.clone();
        for _len in 1..=64 {
            let mut next = Vec::new();
            for p in &layer {
                let end = self.path_target(p);
                for a in 0..self.num_arrows() {
                    if self.arrow_from[a] != end {
                        continue;
                    }
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    let cand = Path { vertex: self.arrow_from[arrows[0]], arrows };
                    if self.is_irreducible(&cand) {
                        next.push(cand);
                    }
                }
            }
            if next.is_empty() {
                // Stable order: by length, then arrow sequence, then vertex.
                paths.sort_by(|a, b| {
                    a.len()
                        .cmp(&b.len())
                        .then_with(|| a.arrows.cmp(&b.arrows))
                        .then_with(|| a.vertex.cmp(&b.vertex))
                });
                self.path_index =
                    paths.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
                self.paths = paths;
                return Ok(());
            }
            paths.extend(next.iter().cloned());
            if paths.len() > 4096 {
                return Err(AlgebraError::NotFiniteDimensional);
            }
            layer = next;
        }
        Err(AlgebraError::NotFiniteDimensional)
    }

    fn is_irreducible(&self, p: &Path) -> bool {
        for (lead, _) in &self.rules {
            if lead.len() <= p.arrows.len() {
                for start in 0..=p.arrows.len() - lead.len() {
                    if &p.arrows[start..start + lead.len()] == lead.as_slice() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Product x * y in function order (walk y first, then x), expressed
    /// over the path basis.
    pub fn mul_paths(&self, x: &Path, y: &Path) -> Vec<(Rat, Path)> {
        if self.path_target(y) != self.path_source(x) {
            return vec![];
        }
        let mut arrows = y.arrows.clone();
        arrows.extend_from_slice(&x.arrows);
        let p = if arrows.is_empty() {
            Path::trivial(y.vertex)
        } else {
            Path { vertex: self.arrow_from[arrows[0]], arrows }
        };
        self.reduce_combo(vec![(Rat::one(), p)])
    }

    /// Anti-involution applied to a basis path: reverse and map arrows.
    pub fn involute_path(&self, p: &Path) -> Path {
        if p.arrows.is_empty() {
            return p.clone();
        }
        let arrows: Vec<usize> =
            p.arrows.iter().rev().map(|&a| self.involution[a]).collect();
        Path { vertex: self.arrow_from[arrows[0]], arrows }
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        // Associativity on basis triples (concatenation is associative, so
        // this checks confluence of the rewriting).
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = {
                        // (p_i * p_j) * p_k
                        let ij = self.mul_paths(&self.paths[i], &self.paths[j]);
                        let mut acc: Vec<(Rat, Path)> = vec![];
                        for (c, p) in &ij {
                            for (c2, q) in self.mul_paths(p, &self.paths[k]) {
                                acc.push((c * &c2, q));
                            }
                        }
                        self.reduce_combo(acc)
                    };
                    let right = {
                        let jk = self.mul_paths(&self.paths[j], &self.paths[k]);
                        let mut acc: Vec<(Rat, Path)> = vec![];
                        for (c, p) in &jk {
                            for (c2, q) in self.mul_paths(&self.paths[i], p) {
                                acc.push((c * &c2, q));
                            }
                        }
                        self.reduce_combo(acc)
                    };
                    if combo_sub(&left, &right) != vec![] {
                        return Err(AlgebraError::Invalid(format!(
                            "multiplication not associative at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // The involution reverses products on arrows.
        for a in 0..self.num_arrows() {
            let ia = self.involution[a];
            if self.arrow_from[a] != self.arrow_to[ia] {
                return Err(AlgebraError::BadInvolution(self.arrow_names[a].clone()));
            }
        }
        Ok(())
    }

    /// Matrix of a path acting on a representation given by arrow matrices
    /// (dims prescribing each vertex space).
    pub fn path_matrix(&self, p: &Path, dims: &[usize], arrow_mats: &[Mat]) -> Mat {
        let mut m = Mat::identity(dims[self.path_source(p)]);
        for &a in &p.arrows {
            m = arrow_mats[a].mul(&m);
        }
        m
    }
}

fn orient_relation(rel: &[(Rat, Path)]) -> Option<(Vec<usize>, Vec<(Rat, Path)>)> {
    if rel.is_empty() {
        return None;
    }
    let lead_idx = (0..rel.len())
        .max_by(|&a, &b| BlockAlgebra::order(&rel[a].1.arrows, &rel[b].1.arrows))
        .unwrap();
    let (lc, lp) = rel[lead_idx].clone();
    let rest: Vec<(Rat, Path)> = rel
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != lead_idx)
        .map(|(_, (c, p))| (-(c / &lc), p.clone()))
        .collect();
    Some((lp.arrows, rest))
}

fn combo_from_rule(
    rest: &[(Rat, Path)],
    pre: &[usize],
    post: &[usize],
    alg: &BlockAlgebra,
) -> Vec<(Rat, Path)> {
    rest.iter()
        .map(|(c, p)| {
            let mut arrows = pre.to_vec();
            arrows.extend_from_slice(&p.arrows);
            arrows.extend_from_slice(post);
            let np = if arrows.is_empty() {
                p.clone()
            } else {
                Path { vertex: alg.arrow_from[arrows[0]], arrows }
            };
            (c.clone(), np)
        })
        .collect()
}

fn combo_sub(a: &[(Rat, Path)], b: &[(Rat, Path)]) -> Vec<(Rat, Path)> {
    let mut acc: BTreeMap<Path, Rat> = BTreeMap::new();
    for (c, p) in a {
        *acc.entry(p.clone()).or_insert_with(Rat::zero) += c;
    }
    for (c, p) in b {
        *acc.entry(p.clone()).or_insert_with(Rat::zero) -= c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_block_shape() {
        let alg = BlockAlgebra::sl2();
        assert_eq!(alg.dim(), 5);
        assert_eq!(alg.num_vertices(), 2);
        // Paths: e_e, e_s, a, b, and the loop at s (b then a).
        let loop_s = Path { vertex: 1, arrows: vec![1, 0] };
        assert!(alg.path_idx(&loop_s).is_some());
        let loop_e = Path { vertex: 0, arrows: vec![0, 1] };
        assert!(alg.path_idx(&loop_e).is_none());
    }

    #[test]
    fn sl2_multiplication() {
        let alg = BlockAlgebra::sl2();
        let a = Path { vertex: 0, arrows: vec![0] };
        let b = Path { vertex: 1, arrows: vec![1] };
        // a * b (function order: walk b first) = loop at s, nonzero
        let ab = alg.mul_paths(&a, &b);
        assert_eq!(ab.len(), 1);
        assert_eq!(ab[0].1.arrows, vec![1, 0]);
        // b * a (walk a first) = loop at e = 0
        let ba = alg.mul_paths(&b, &a);
        assert!(ba.is_empty());
        // idempotents
        let ee = Path::trivial(0);
        let got = alg.mul_paths(&ee, &ee);
        assert_eq!(got, vec![(Rat::one(), ee.clone())]);
        assert!(alg.mul_paths(&ee, &Path::trivial(1)).is_empty());
    }

    #[test]
    fn sl2_involution_and_walls() {
        let alg = BlockAlgebra::sl2();
        let a = Path { vertex: 0, arrows: vec![0] };
        assert_eq!(alg.involute_path(&a).arrows, vec![1]);
        let loop_s = Path { vertex: 1, arrows: vec![1, 0] };
        assert_eq!(alg.involute_path(&loop_s).arrows, vec![1, 0]);
        assert_eq!(alg.twist_vertices(1).unwrap(), vec![1]);
        assert_eq!(alg.cotwist_vertices(1).unwrap(), vec![1]);
        assert_eq!(alg.theta_vertex(1).unwrap(), 1);
        assert!(alg.twist_vertices(2).is_err());
    }

    #[test]
    fn spec_roundtrip_json() {
        let alg = BlockAlgebra::sl2();
        let spec = AlgebraSpec {
            rank: 2,
            vertices: vec![
                ("e".to_string(), "e".to_string()),
                ("s".to_string(), "s1".to_string()),
            ],
            arrows: vec![
                ArrowSpec { name: "a".into(), from: "e".into(), to: "s".into() },
                ArrowSpec { name: "b".into(), from: "s".into(), to: "e".into() },
            ],
            relations: vec![vec![("1".into(), vec!["a".into(), "b".into()])]],
            antiinvolution: [("a".to_string(), "b".to_string()), ("b".to_string(), "a".to_string())]
                .into_iter()
                .collect(),
        };
        let json = serde_json::to_string(&spec).unwrap();
        let back: AlgebraSpec = serde_json::from_str(&json).unwrap();
        let alg2 = BlockAlgebra::from_spec(&back).unwrap();
        assert_eq!(alg.dim(), alg2.dim());
    }
}
