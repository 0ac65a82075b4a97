//! Named verification suites over the block model: the golden image
//! table, derived-functor identities, monoid relations object-wise,
//! exactness and adjunction properties, natural transformation dimensions,
//! homological dimensions, and the labeled exact sequences relating the
//! twisting and completion functors.

use super::block::{Block, BlockError, Nat};
use super::functor::Functor;
use super::module::{hom_dim, radical, socle, BlockModule, Morphism};
use super::resolve::{derived_left, derived_right, ext_dim, injdim, projdim};
use crate::report::CheckReport;
use std::collections::BTreeMap;

fn f_t() -> Functor {
    Functor::Twist(1)
}
fn f_g() -> Functor {
    Functor::Completion(1)
}
fn f_c() -> Functor {
    Functor::Shuffle(1)
}
fn f_k() -> Functor {
    Functor::Coshuffle(1)
}
fn f_z() -> Functor {
    Functor::Zuckerman(1)
}
fn f_zhat() -> Functor {
    Functor::Zhat(1)
}
fn f_q() -> Functor {
    Functor::JosephQ(1)
}
fn f_theta() -> Functor {
    Functor::Theta(1)
}

fn conj_dual(f: &Functor) -> Functor {
    Functor::compose(Functor::Dual, Functor::compose(f.clone(), Functor::Dual))
}

fn chain(parts: &[Functor]) -> Functor {
    Functor::chain(parts)
}

pub fn params(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

/// Pointwise exactness of A --f--> B --g--> C at B.
fn exact_at(f: &Morphism, g: &Morphism) -> bool {
    if !g.compose(f).is_zero() {
        return false;
    }
    for v in 0..f.cod.dims.len() {
        if f.mats[v].rank() + g.mats[v].rank() != f.cod.dims[v] {
            return false;
        }
    }
    true
}

/// Natural transformation toolbox built on the catalog representation.
pub struct NatToolbox<'a> {
    pub block: &'a Block,
}

impl<'a> NatToolbox<'a> {
    pub fn new(block: &'a Block) -> Self {
        NatToolbox { block }
    }

    /// The dual transformation: for h: F -> G this is h': G' -> F' with
    /// components d(h at dM).
    pub fn dual_nat(&self, nat: &Nat) -> Result<Nat, BlockError> {
        let src = conj_dual(&nat.dst);
        let dst = conj_dual(&nat.src);
        let comps = self
            .block
            .catalog
            .iter()
            .map(|m| {
                let dm = m.dual(&self.block.alg);
                Ok(self.block.component_at(nat, &dm)?.dual(&self.block.alg))
            })
            .collect::<Result<Vec<_>, BlockError>>()?;
        Ok(Nat { src, dst, comps })
    }

    pub fn whisker_left(&self, h: &Functor, nat: &Nat) -> Result<Nat, BlockError> {
        let comps = nat
            .comps
            .iter()
            .map(|c| self.block.eval_mor(h, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Nat {
            src: Functor::compose(h.clone(), nat.src.clone()),
            dst: Functor::compose(h.clone(), nat.dst.clone()),
            comps,
        })
    }

    pub fn whisker_right(&self, nat: &Nat, h: &Functor) -> Result<Nat, BlockError> {
        let comps = self
            .block
            .catalog
            .iter()
            .map(|m| {
                let hm = self.block.eval(h, m)?;
                self.block.component_at(nat, &hm)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Nat {
            src: Functor::compose(nat.src.clone(), h.clone()),
            dst: Functor::compose(nat.dst.clone(), h.clone()),
            comps,
        })
    }

    /// Canonical projection from the identity to the parabolic quotient.
    pub fn canonical_z(&self, i: usize) -> Result<Nat, BlockError> {
        let vertices = self.block.alg.twist_vertices(i)?;
        let comps = self
            .block
            .catalog
            .iter()
            .map(|m| self.block.trace_quotient(m, &vertices).1)
            .collect();
        Ok(Nat { src: Functor::Id, dst: Functor::Zuckerman(i), comps })
    }

    /// Canonical projection from the completion functor to its cokernel.
    pub fn canonical_p(&self, i: usize) -> Result<Nat, BlockError> {
        let g = self.block.completion_unit(i);
        let comps = self
            .block
            .catalog
            .iter()
            .map(|m| {
                let g_m = self.block.component_at(g, m)?;
                Ok(g_m.cokernel(&self.block.alg).1)
            })
            .collect::<Result<Vec<_>, BlockError>>()?;
        Ok(Nat { src: Functor::Completion(i), dst: Functor::JosephQ(i), comps })
    }
}

/// The 21 nonidentity entries of the image table for the built-in block.
pub fn suite_table(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("table", &params(&[("block", "sl2")]));
    let delta_s = block.module_by_name("Delta(s)")?;
    let delta_e = block.module_by_name("Delta(e)")?;
    let t_delta_s = block.eval(&f_t(), &delta_s)?;
    // sanity: the twisted standard module is the dual standard one
    report.push(
        "table:twisted-standard",
        "T Delta(s) is the dual standard module dDelta(e)",
        block.iso_test(&t_delta_s, &block.module_by_name("dDelta(e)")?)?,
    );
    let columns: Vec<(&str, Functor)> = vec![
        ("G", f_g()),
        ("T", f_t()),
        ("G2", chain(&[f_g(), f_g()])),
        ("T2", chain(&[f_t(), f_t()])),
        ("TG", chain(&[f_t(), f_g()])),
        ("GT", chain(&[f_g(), f_t()])),
        ("GT2", chain(&[f_g(), f_t(), f_t()])),
    ];
    let rows: Vec<(&str, &BlockModule)> =
        vec![("Delta(s)", &delta_s), ("Delta(e)", &delta_e), ("TDelta(s)", &t_delta_s)];
    // expected labels, in column order per row
    let expected: BTreeMap<&str, [&str; 7]> = [
        ("Delta(s)", ["Delta(e)", "TDelta(s)", "Delta(e)", "TDelta(s)", "Delta(s)", "Delta(s)", "Delta(s)"]),
        ("Delta(e)", ["Delta(e)", "Delta(s)", "Delta(e)", "TDelta(s)", "Delta(s)", "Delta(e)", "Delta(s)"]),
        ("TDelta(s)", ["Delta(s)", "TDelta(s)", "Delta(e)", "TDelta(s)", "TDelta(s)", "Delta(s)", "Delta(s)"]),
    ]
    .into_iter()
    .collect();
    let resolve = |name: &str| -> Result<BlockModule, BlockError> {
        if name == "TDelta(s)" {
            Ok(t_delta_s.clone())
        } else {
            block.module_by_name(name)
        }
    };
    for (row_name, module) in &rows {
        for (ci, (col_name, functor)) in columns.iter().enumerate() {
            let got = block.eval(functor, module)?;
            let want = resolve(expected[row_name][ci])?;
            report.push(
                &format!("table:{row_name}:{col_name}"),
                &format!("{col_name} {row_name} is {}", expected[row_name][ci]),
                block.iso_test(&got, &want)?,
            );
        }
    }
    Ok(report)
}

/// Derived-functor identities on every catalog module.
pub fn suite_derived(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("derived", &params(&[("block", "sl2")]));
    let z_prime = conj_dual(&f_z());
    for m in &block.catalog {
        let name = m.label.clone().unwrap_or_default();
        // first right derived of the coshuffle is the hat quotient
        let r1k = derived_right(block, &f_k(), m, 1, 8)?;
        let zhat_m = block.eval(&f_zhat(), m)?;
        report.push(
            &format!("R1K:{name}"),
            "first right derived coshuffle equals the hat quotient",
            block.iso_test(&r1k, &zhat_m)?,
        );
        // first right derived of the completion is the parabolic quotient
        let r1g = derived_right(block, &f_g(), m, 1, 8)?;
        let z_m = block.eval(&f_z(), m)?;
        report.push(
            &format!("R1G:{name}"),
            "first right derived completion equals the parabolic quotient",
            block.iso_test(&r1g, &z_m)?,
        );
        // first left derived of the parabolic quotient is the cokernel functor
        let l1z = derived_left(block, &f_z(), m, 1, 8)?;
        let q_m = block.eval(&f_q(), m)?;
        report.push(
            &format!("L1Z:{name}"),
            "first left derived parabolic quotient equals the unit cokernel",
            block.iso_test(&l1z, &q_m)?,
        );
        // second left derived of the parabolic quotient is its conjugate
        let l2z = derived_left(block, &f_z(), m, 2, 8)?;
        let zp_m = block.eval(&z_prime, m)?;
        report.push(
            &format!("L2Z:{name}"),
            "second left derived parabolic quotient equals its dual conjugate",
            block.iso_test(&l2z, &zp_m)?,
        );
        for deg in 3..=4 {
            let lz = derived_left(block, &f_z(), m, deg, 8)?;
            report.push(
                &format!("L{deg}Z:{name}"),
                "higher left derived parabolic quotients vanish",
                lz.is_zero(),
            );
        }
        for deg in 2..=3 {
            let rg = derived_right(block, &f_g(), m, deg, 8)?;
            let rk = derived_right(block, &f_k(), m, deg, 8)?;
            report.push(
                &format!("R{deg}G:{name}"),
                "higher right derived completions vanish",
                rg.is_zero(),
            );
            report.push(
                &format!("R{deg}K:{name}"),
                "higher right derived coshuffles vanish",
                rk.is_zero(),
            );
        }
        // the derived table for the squares
        let gg = chain(&[f_g(), f_g()]);
        let kk = chain(&[f_k(), f_k()]);
        let r1gg = derived_right(block, &gg, m, 1, 8)?;
        let zg_m = block.eval(&chain(&[f_z(), f_g()]), m)?;
        report.push(
            &format!("R1G2:{name}"),
            "first right derived of the squared completion is Z after G",
            block.iso_test(&r1gg, &zg_m)?,
        );
        let r2gg = derived_right(block, &gg, m, 2, 8)?;
        report.push(
            &format!("R2G2:{name}"),
            "second right derived of the squared completion is Z",
            block.iso_test(&r2gg, &z_m)?,
        );
        let r3gg = derived_right(block, &gg, m, 3, 8)?;
        report.push(
            &format!("R3G2:{name}"),
            "third right derived of the squared completion vanishes",
            r3gg.is_zero(),
        );
        let r1kk = derived_right(block, &kk, m, 1, 8)?;
        let zhatk_m = block.eval(&chain(&[f_zhat(), f_k()]), m)?;
        report.push(
            &format!("R1K2:{name}"),
            "first right derived of the squared coshuffle is Zhat after K",
            block.iso_test(&r1kk, &zhatk_m)?,
        );
        let r2kk = derived_right(block, &kk, m, 2, 8)?;
        report.push(
            &format!("R2K2:{name}"),
            "second right derived of the squared coshuffle is Zhat",
            block.iso_test(&r2kk, &zhat_m)?,
        );
        let r3kk = derived_right(block, &kk, m, 3, 8)?;
        report.push(
            &format!("R3K2:{name}"),
            "third right derived of the squared coshuffle vanishes",
            r3kk.is_zero(),
        );
        // the unit cokernel is self-conjugate
        let q_prime = conj_dual(&f_q());
        let qp_m = block.eval(&q_prime, m)?;
        report.push(
            &format!("QQ':{name}"),
            "the unit cokernel functor is self-conjugate",
            block.iso_test(&q_m, &qp_m)?,
        );
    }
    Ok(report)
}

/// Monoid relations object-wise on the catalog plus the regular module.
pub fn suite_monoid(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("monoid", &params(&[("block", "sl2")]));
    let (t, g, c, k) = (f_t(), f_g(), f_c(), f_k());
    let twist_relations: Vec<(&str, Functor, Functor)> = vec![
        ("TGT=T", chain(&[t.clone(), g.clone(), t.clone()]), t.clone()),
        ("GTG=G", chain(&[g.clone(), t.clone(), g.clone()]), g.clone()),
        ("T3=T2", chain(&vec![t.clone(); 3]), chain(&vec![t.clone(); 2])),
        ("G3=G2", chain(&vec![g.clone(); 3]), chain(&vec![g.clone(); 2])),
        ("T2G=T2", chain(&[t.clone(), t.clone(), g.clone()]), chain(&vec![t.clone(); 2])),
        ("G2T=G2", chain(&[g.clone(), g.clone(), t.clone()]), chain(&vec![g.clone(); 2])),
        (
            "TG2=GT2",
            chain(&[t.clone(), g.clone(), g.clone()]),
            chain(&[g.clone(), t.clone(), t.clone()]),
        ),
    ];
    let shuffle_relations: Vec<(&str, Functor, Functor)> = vec![
        ("CKC=C", chain(&[c.clone(), k.clone(), c.clone()]), c.clone()),
        ("KCK=K", chain(&[k.clone(), c.clone(), k.clone()]), k.clone()),
        (
            "C3K=C2",
            chain(&[c.clone(), c.clone(), c.clone(), k.clone()]),
            chain(&vec![c.clone(); 2]),
        ),
        (
            "K3C=K2",
            chain(&[k.clone(), k.clone(), k.clone(), c.clone()]),
            chain(&vec![k.clone(); 2]),
        ),
        (
            "C2K2C=C2K",
            chain(&[c.clone(), c.clone(), k.clone(), k.clone(), c.clone()]),
            chain(&[c.clone(), c.clone(), k.clone()]),
        ),
        (
            "K2C2K=K2C",
            chain(&[k.clone(), k.clone(), c.clone(), c.clone(), k.clone()]),
            chain(&[k.clone(), k.clone(), c.clone()]),
        ),
        (
            "CK2C2=KC2",
            chain(&[c.clone(), k.clone(), k.clone(), c.clone(), c.clone()]),
            chain(&[k.clone(), c.clone(), c.clone()]),
        ),
        (
            "KC2K2=CK2",
            chain(&[k.clone(), c.clone(), c.clone(), k.clone(), k.clone()]),
            chain(&[c.clone(), k.clone(), k.clone()]),
        ),
    ];
    let mut objects: Vec<BlockModule> = block.catalog.clone();
    objects.push(block.regular.clone());
    for (name, lhs, rhs) in twist_relations.iter().chain(shuffle_relations.iter()) {
        for m in &objects {
            let label = m.label.clone().unwrap_or_default();
            let a = block.eval(lhs, m)?;
            let b = block.eval(rhs, m)?;
            report.push(
                &format!("{name}:{label}"),
                &format!("relation {name} holds object-wise"),
                block.iso_test(&a, &b)?,
            );
        }
    }
    // the squared shuffle has period two object-wise
    for m in &objects {
        let label = m.label.clone().unwrap_or_default();
        let c2 = block.eval(&chain(&vec![c.clone(); 2]), m)?;
        let c4 = block.eval(&chain(&vec![c.clone(); 4]), m)?;
        report.push(
            &format!("C2=C4:{label}"),
            "the squared shuffle is periodic object-wise",
            block.iso_test(&c2, &c4)?,
        );
    }
    Ok(report)
}

/// Adjunction counit/unit exact sequences, preservation properties and
/// hom-dimension identities.
pub fn suite_exactness(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("exactness", &params(&[("block", "sl2")]));
    let toolbox = NatToolbox::new(block);
    // counit TG -> ID: select the candidate injective at the regular module
    let tg = chain(&[f_t(), f_g()]);
    let gt = chain(&[f_g(), f_t()]);
    let ck = chain(&[f_c(), f_k()]);
    let kc = chain(&[f_k(), f_c()]);
    let regular = block.regular.clone();
    let select = |src: &Functor, dst: &Functor, want_inj: bool| -> Result<Nat, BlockError> {
        let basis = block.nat_space(src, dst)?;
        let mut accept = |nat: &Nat| -> bool {
            block
                .component_at(nat, &regular)
                .map(|c| if want_inj { c.is_injective() } else { c.is_surjective() })
                .unwrap_or(false)
        };
        let found = block.select_nats(&basis, &mut accept, 1);
        found.into_iter().next().ok_or(BlockError::UnitSelectionFailed)
    };
    let counit_t = select(&tg, &Functor::Id, true)?;
    let unit_t = select(&Functor::Id, &gt, false)?;
    let counit_c = select(&ck, &Functor::Id, true)?;
    let unit_c = select(&Functor::Id, &kc, false)?;
    let z_nat = toolbox.canonical_z(1)?;
    let zhat_vertices = block.alg.cotwist_vertices(1)?;

    for m in &block.catalog {
        let name = m.label.clone().unwrap_or_default();
        // 0 -> TG M -> M -> Z M -> 0
        let eps = block.component_at(&counit_t, m)?;
        let z_m = block.component_at(&z_nat, m)?;
        report.push(
            &format!("counitT-inj:{name}"),
            "the twist-completion counit is injective",
            eps.is_injective(),
        );
        report.push(
            &format!("counitT-coker:{name}"),
            "its cokernel is the parabolic quotient",
            exact_at(&eps, &z_m) && z_m.is_surjective(),
        );
        // 0 -> Z' M -> M -> GT M -> 0
        let eta = block.component_at(&unit_t, m)?;
        report.push(
            &format!("unitT-surj:{name}"),
            "the twist-completion unit is surjective",
            eta.is_surjective(),
        );
        let (ker, _) = eta.kernel(&block.alg);
        let zp_m = block.eval(&conj_dual(&f_z()), m)?;
        report.push(
            &format!("unitT-kernel:{name}"),
            "its kernel is the conjugate parabolic quotient",
            block.iso_test(&ker, &zp_m)?,
        );
        // 0 -> CK M -> M -> Zhat M -> 0
        let eps_c = block.component_at(&counit_c, m)?;
        let (_, zhat_proj) = block.trace_quotient(m, &zhat_vertices);
        report.push(
            &format!("counitC-inj:{name}"),
            "the shuffle-coshuffle counit is injective",
            eps_c.is_injective(),
        );
        report.push(
            &format!("counitC-coker:{name}"),
            "its cokernel is the hat quotient",
            exact_at(&eps_c, &zhat_proj) && zhat_proj.is_surjective(),
        );
        // 0 -> Zhat' M -> M -> KC M -> 0
        let eta_c = block.component_at(&unit_c, m)?;
        report.push(
            &format!("unitC-surj:{name}"),
            "the shuffle-coshuffle unit is surjective",
            eta_c.is_surjective(),
        );
        let (ker_c, _) = eta_c.kernel(&block.alg);
        let zhatp_m = block.eval(&conj_dual(&f_zhat()), m)?;
        report.push(
            &format!("unitC-kernel:{name}"),
            "its kernel is the conjugate hat quotient",
            block.iso_test(&ker_c, &zhatp_m)?,
        );
    }

    // adjunction dimension identities over all catalog pairs
    for m in &block.catalog {
        for n in &block.catalog {
            let tm = block.eval(&f_t(), m)?;
            let gn = block.eval(&f_g(), n)?;
            let lhs = hom_dim(&tm, n, &block.alg);
            let rhs = hom_dim(m, &gn, &block.alg);
            report.push(
                &format!(
                    "adjTG:{}:{}",
                    m.label.clone().unwrap_or_default(),
                    n.label.clone().unwrap_or_default()
                ),
                "hom from the twist equals hom into the completion",
                lhs == rhs,
            );
            let cm = block.eval(&f_c(), m)?;
            let kn = block.eval(&f_k(), n)?;
            report.push(
                &format!(
                    "adjCK:{}:{}",
                    m.label.clone().unwrap_or_default(),
                    n.label.clone().unwrap_or_default()
                ),
                "hom from the shuffle equals hom into the coshuffle",
                hom_dim(&cm, n, &block.alg) == hom_dim(m, &kn, &block.alg),
            );
            // wall-crossing self-adjointness
            let theta_m = block.eval(&f_theta(), m)?;
            let theta_n = block.eval(&f_theta(), n)?;
            report.push(
                &format!(
                    "selfadj-theta:{}:{}",
                    m.label.clone().unwrap_or_default(),
                    n.label.clone().unwrap_or_default()
                ),
                "the wall-crossing functor is self-adjoint",
                hom_dim(&theta_m, n, &block.alg) == hom_dim(m, &theta_n, &block.alg),
            );
        }
    }

    // preservation of injections and surjections by the four composites,
    // over every hom-basis morphism between catalog modules
    for m in &block.catalog {
        for n in &block.catalog {
            for (fi, f) in super::module::hom_basis(m, n, &block.alg).iter().enumerate() {
                let tag = format!(
                    "{}->{}[{}]",
                    m.label.clone().unwrap_or_default(),
                    n.label.clone().unwrap_or_default(),
                    fi
                );
                for (cname, comp) in
                    [("TG", &tg), ("GT", &gt), ("CK", &ck), ("KC", &kc)]
                {
                    let cf = block.eval_mor(comp, f)?;
                    if f.is_injective() {
                        report.push(
                            &format!("preserve-inj:{cname}:{tag}"),
                            "composite preserves injections",
                            cf.is_injective(),
                        );
                    }
                    if f.is_surjective() {
                        report.push(
                            &format!("preserve-surj:{cname}:{tag}"),
                            "composite preserves surjections",
                            cf.is_surjective(),
                        );
                    }
                }
            }
        }
    }

    // exactness contracts on generated short exact sequences
    let mut sequences: Vec<(Morphism, Morphism)> = Vec::new();
    for m in &block.catalog {
        let (rad, rad_incl) = radical(m, &block.alg);
        if !rad.is_zero() && rad.total_dim() < m.total_dim() {
            let (_, proj) = rad_incl.cokernel(&block.alg);
            sequences.push((rad_incl.clone(), proj));
        }
        let (soc, soc_incl) = socle(m, &block.alg);
        if !soc.is_zero() && soc.total_dim() < m.total_dim() {
            let (_, proj) = soc_incl.cokernel(&block.alg);
            sequences.push((soc_incl.clone(), proj));
        }
    }
    for (si, (incl, proj)) in sequences.iter().enumerate() {
        let theta_i = block.eval_mor(&f_theta(), incl)?;
        let theta_p = block.eval_mor(&f_theta(), proj)?;
        report.push(
            &format!("theta-exact:{si}"),
            "the wall-crossing functor is exact on generated sequences",
            theta_i.is_injective() && theta_p.is_surjective() && exact_at(&theta_i, &theta_p),
        );
        for (fname, func) in [("T", &f_t()), ("C", &f_c()), ("Z", &f_z()), ("Zhat", &f_zhat())]
        {
            let fi = block.eval_mor(func, incl)?;
            let fp = block.eval_mor(func, proj)?;
            report.push(
                &format!("right-exact:{fname}:{si}"),
                "right-exact functors stay exact on the right",
                fp.is_surjective() && exact_at(&fi, &fp),
            );
        }
        for (fname, func) in [("G", &f_g()), ("K", &f_k())] {
            let fi = block.eval_mor(func, incl)?;
            let fp = block.eval_mor(func, proj)?;
            report.push(
                &format!("left-exact:{fname}:{si}"),
                "left-exact functors stay exact on the left",
                fi.is_injective() && exact_at(&fi, &fp),
            );
        }
    }
    Ok(report)
}

/// Natural transformation dimensions and the vanishing statements.
pub fn suite_hom(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("hom", &params(&[("block", "sl2")]));
    let end_t = block.nat_space(&f_t(), &f_t())?;
    report.push("endT", "the twist has a two-dimensional endomorphism ring", end_t.len() == 2);
    let end_g = block.nat_space(&f_g(), &f_g())?;
    report.push(
        "endG",
        "the completion has a two-dimensional endomorphism ring",
        end_g.len() == 2,
    );
    let hom_g_id = block.nat_space(&f_g(), &Functor::Id)?;
    report.push("homG-ID", "maps from the completion to the identity form a line", hom_g_id.len() == 1);
    let hom_id_t = block.nat_space(&Functor::Id, &f_t())?;
    report.push(
        "homID-T",
        "maps from the identity to the twist form a line (dual route)",
        hom_id_t.len() == 1,
    );
    let gt = chain(&[f_g(), f_t()]);
    let tg = chain(&[f_t(), f_g()]);
    let hom_gt_tg = block.nat_space(&gt, &tg)?;
    report.push(
        "homGT-TG",
        "maps from completion-twist to twist-completion form a line",
        hom_gt_tg.len() == 1,
    );
    // no transformation from the shuffle to the identity survives on the
    // standard modules
    let hom_c_id = block.nat_space(&f_c(), &Functor::Id)?;
    let delta_e = block.module_by_name("Delta(e)")?;
    let delta_s = block.module_by_name("Delta(s)")?;
    let mut all_vanish = true;
    for nat in &hom_c_id {
        for m in [&delta_e, &delta_s] {
            if !block.component_at(nat, m)?.is_zero() {
                all_vanish = false;
            }
        }
    }
    report.push(
        "homC-ID-vanishes",
        "every map from the shuffle to the identity vanishes on standard modules",
        all_vanish,
    );
    // dual statement: identity into the coshuffle
    let hom_id_k = block.nat_space(&Functor::Id, &f_k())?;
    let mut all_vanish_k = true;
    for nat in &hom_id_k {
        for m in [&delta_e, &delta_s] {
            if !block.component_at(nat, m)?.is_zero() {
                all_vanish_k = false;
            }
        }
    }
    report.push(
        "homID-K-vanishes",
        "every map from the identity to the coshuffle vanishes on standard modules",
        all_vanish_k,
    );
    // cross-check the catalog route against the bimodule route for a
    // right-exact pair
    let bimodule_end_t = bimodule_nat_dim(block, &f_t(), &f_t())?;
    report.push(
        "endT-bimodule-route",
        "the bimodule route agrees with the catalog route for twist endomorphisms",
        bimodule_end_t == end_t.len(),
    );
    let bimodule_id_t = bimodule_nat_dim(block, &Functor::Id, &f_t())?;
    report.push(
        "homID-T-bimodule-route",
        "the bimodule route agrees for identity-to-twist maps",
        bimodule_id_t == hom_id_t.len(),
    );
    // the unit cokernel kills the dominant standard module
    let q_delta_e = block.eval(&f_q(), &delta_e)?;
    report.push("Q-kills-dominant", "the unit cokernel kills the dominant standard module", q_delta_e.is_zero());
    Ok(report)
}

/// Natural transformations between right-exact functors through their
/// representing bimodules: linear maps F(A) -> G(A) commuting with both
/// actions.
pub fn bimodule_nat_dim(
    block: &Block,
    f: &Functor,
    g: &Functor,
) -> Result<usize, BlockError> {
    use crate::linalg::Mat;
    let fa = block.eval(f, &block.regular)?;
    let ga = block.eval(g, &block.regular)?;
    let base = super::module::hom_basis(&fa, &ga, &block.alg);
    if base.is_empty() {
        return Ok(0);
    }
    // right multiplications by arrows and idempotents as endomorphisms of
    // the regular module
    let mut right_mults: Vec<Morphism> = Vec::new();
    for arrow in 0..block.alg.num_arrows() {
        right_mults.push(right_mult_arrow(block, arrow));
    }
    for w in 0..block.alg.num_vertices() {
        right_mults.push(right_mult_idempotent(block, w));
    }
    let mut rows: Vec<Vec<crate::linalg::Rat>> = Vec::new();
    let frs: Vec<Morphism> =
        right_mults.iter().map(|r| block.eval_mor(f, r)).collect::<Result<_, _>>()?;
    let grs: Vec<Morphism> =
        right_mults.iter().map(|r| block.eval_mor(g, r)).collect::<Result<_, _>>()?;
    for (fr, gr) in frs.iter().zip(&grs) {
        for v in 0..block.alg.num_vertices() {
            for i in 0..ga.dims[v] {
                for j in 0..fa.dims[v] {
                    let mut row = Vec::with_capacity(base.len());
                    for phi in &base {
                        let lhs = phi.mats[v].mul(&fr.mats[v]);
                        let rhs = gr.mats[v].mul(&phi.mats[v]);
                        row.push(&lhs[(i, j)] - &rhs[(i, j)]);
                    }
                    if row.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(base.len());
    }
    let system = Mat::from_rows(rows);
    Ok(base.len() - system.rank())
}

fn right_mult_arrow(block: &Block, arrow: usize) -> Morphism {
    // x -> x . arrow (walk the arrow first); on the path basis of the
    // regular module this prepends the arrow.
    regular_endo(block, |alg, p| {
        let arrow_path = super::algebra::Path {
            vertex: alg.arrow_from[arrow],
            arrows: vec![arrow],
        };
        alg.mul_paths(p, &arrow_path)
    })
}

fn right_mult_idempotent(block: &Block, w: usize) -> Morphism {
    regular_endo(block, |alg, p| {
        if alg.path_source(p) == w {
            vec![(num_traits::One::one(), p.clone())]
        } else {
            vec![]
        }
    })
}

fn regular_endo(
    block: &Block,
    action: impl Fn(&super::algebra::BlockAlgebra, &super::algebra::Path) -> Vec<(crate::linalg::Rat, super::algebra::Path)>,
) -> Morphism {
    use crate::linalg::Mat;
    let alg = &block.alg;
    // the regular module is the direct sum of the vertex projectives in
    // vertex order; per target vertex its basis is the concatenation of the
    // per-source path lists
    let layout: Vec<Vec<super::algebra::Path>> = (0..alg.num_vertices())
        .map(|v| {
            let mut list = Vec::new();
            for w in 0..alg.num_vertices() {
                for k in 0..alg.dim() {
                    let p = &alg.paths[k];
                    if alg.path_source(p) == w && alg.path_target(p) == v {
                        list.push(p.clone());
                    }
                }
            }
            list
        })
        .collect();
    let mats: Vec<Mat> = (0..alg.num_vertices())
        .map(|v| {
            let list = &layout[v];
            let mut m = Mat::zero(list.len(), list.len());
            for (col, p) in list.iter().enumerate() {
                for (c, q) in action(alg, p) {
                    let row = list.iter().position(|x| *x == q).expect("basis path");
                    m[(row, col)] = &m[(row, col)] + &c;
                }
            }
            m
        })
        .collect();
    Morphism { dom: block.regular.clone(), cod: block.regular.clone(), mats }
}

/// Homological dimensions of the twisted, completed, shuffled and
/// coshuffled projective and injective generators.
pub fn suite_homdim(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("homdim", &params(&[("block", "sl2")]));
    let p_gen = block.regular.clone();
    let i_gen = p_gen.dual(&block.alg);
    let cases: Vec<(&str, Functor, &BlockModule)> = vec![
        ("twisted-projective", f_t(), &p_gen),
        ("shuffled-projective", f_c(), &p_gen),
        ("completed-injective", f_g(), &i_gen),
        ("coshuffled-injective", f_k(), &i_gen),
    ];
    for (name, functor, target) in cases {
        let m = block.eval(&functor, target)?;
        let pd = projdim(block, &m);
        let id = injdim(block, &m);
        report.push(
            &format!("projdim:{name}"),
            "projective dimension is the length of the wall word",
            pd == 1,
        );
        report.push(
            &format!("injdim:{name}"),
            "injective dimension matches twice the longest length minus the word",
            id == 1,
        );
        let mut orthogonal = true;
        for deg in 1..=2 {
            if ext_dim(block, &m, &m, deg) != 0 {
                orthogonal = false;
            }
        }
        report.push(
            &format!("ext-orthogonal:{name}"),
            "the module has no positive self-extensions",
            orthogonal,
        );
    }
    for (w, p) in block.projectives.iter().enumerate() {
        report.push(
            &format!("projdim-projective:{w}"),
            "projectives have projective dimension zero",
            projdim(block, p) == 0,
        );
    }
    report.push(
        "global-dimension",
        "the block has global dimension two",
        super::resolve::global_dim(block) == 2,
    );
    Ok(report)
}

/// The labeled exact sequences relating the twist, completion, parabolic
/// quotient and unit-cokernel functors, checked pointwise on the catalog.
pub fn suite_sequences(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("sequences", &params(&[("block", "sl2")]));
    let toolbox = NatToolbox::new(block);
    let g_nat = block.completion_unit(1).clone(); // g: ID -> G
    let g_dual = toolbox.dual_nat(&g_nat)?; // g': T -> ID
    let z_nat = toolbox.canonical_z(1)?; // z: ID -> Z
    let z_dual = toolbox.dual_nat(&z_nat)?; // z': Z' -> ID
    let p_nat = toolbox.canonical_p(1)?; // p: G -> Q
    let i_nat = toolbox.dual_nat(&p_nat)?; // i: Q' -> T
    let (t, g, z, q) = (f_t(), f_g(), f_z(), f_q());
    let q_prime = conj_dual(&q);
    let z_prime = conj_dual(&z);
    let _ = (&q_prime, &z_prime);

    for m in &block.catalog {
        let name = m.label.clone().unwrap_or_default();
        let g_m = block.component_at(&g_nat, m)?; // M -> GM
        let gp_m = block.component_at(&g_dual, m)?; // TM -> M
        let zp_m = block.component_at(&z_dual, m)?; // Z'M -> M
        let p_m = block.component_at(&p_nat, m)?; // GM -> QM
        let i_m = block.component_at(&i_nat, m)?; // Q'M -> TM

        // sequence 3: 0 -> Z' -> ID -> G -> Q -> 0
        report.push(
            &format!("seq3:{name}"),
            "the unit composes the parabolic kernel with the cokernel projection",
            zp_m.is_injective()
                && p_m.is_surjective()
                && exact_at(&zp_m, &g_m)
                && exact_at(&g_m, &p_m),
        );

        // sequence 8: 0 -> Q' -> T -> TG -> 0
        let tg_m = block.eval_mor(&t, &g_m)?; // T(g): TM -> TGM
        report.push(
            &format!("seq8:{name}"),
            "the twisted unit has the conjugate cokernel functor as kernel",
            i_m.is_injective() && tg_m.is_surjective() && exact_at(&i_m, &tg_m),
        );

        // sequence 7: 0 -> Q'T -> T^2 -> T -> 0
        let tm = block.eval(&t, m)?;
        let i_tm = block.component_at(&i_nat, &tm)?;
        let gp_tm = block.component_at(&g_dual, &tm)?;
        report.push(
            &format!("seq7:{name}"),
            "the dual-unit at the twist is onto with conjugate-cokernel kernel",
            i_tm.is_injective() && gp_tm.is_surjective() && exact_at(&i_tm, &gp_tm),
        );

        // sequence 2: 0 -> Z'T -> T -> G -> ZG -> 0
        let zp_tm = block.component_at(&z_dual, &tm)?;
        let ggp_m = g_m.compose(&gp_m); // T -> ID -> G
        let gm = block.eval(&g, m)?;
        let z_gm = block.component_at(&z_nat, &gm)?;
        report.push(
            &format!("seq2:{name}"),
            "the through-identity composite links the twist to the completion",
            zp_tm.is_injective()
                && z_gm.is_surjective()
                && exact_at(&zp_tm, &ggp_m)
                && exact_at(&ggp_m, &z_gm),
        );

        // sequence 1: 0 -> Z'T^2 -> T^2 -> G^2 -> ZG^2 -> 0
        let t2m = block.eval(&t, &tm)?;
        let zp_t2m = block.component_at(&z_dual, &t2m)?;
        let big = {
            // G(g) . g . g' . T(g') : T^2 -> G^2
            let a = block.eval_mor(&t, &gp_m)?; // T(g'): T^2M -> TM
            let b = gp_m.clone(); // g': TM -> M
            let c = g_m.clone(); // g: M -> GM
            let d = block.eval_mor(&g, &g_m)?; // G(g): GM -> G^2M
            d.compose(&c).compose(&b).compose(&a)
        };
        let g2m = block.eval(&g, &gm)?;
        let z_g2m = block.component_at(&z_nat, &g2m)?;
        report.push(
            &format!("seq1:{name}"),
            "the squared composite links the squared twist to the squared completion",
            zp_t2m.is_injective()
                && z_g2m.is_surjective()
                && exact_at(&zp_t2m, &big)
                && exact_at(&big, &z_g2m),
        );

        // sequence 5: 0 -> Z'Q'T -> Z'T^2 -> Z'T -> 0 (with Z'Q'T = Q'T)
        let zprime_expr = conj_dual(&z);
        let zp_of_i_tm = block.eval_mor(&zprime_expr, &i_tm)?;
        let zp_of_gp_tm = block.eval_mor(&zprime_expr, &gp_tm)?;
        let qtm = block.eval(&q_prime, &tm)?;
        let zp_qtm = block.eval(&zprime_expr, &qtm)?;
        report.push(
            &format!("seq5:{name}"),
            "the conjugate quotient preserves the twisted dual-unit sequence",
            zp_of_i_tm.is_injective()
                && zp_of_gp_tm.is_surjective()
                && exact_at(&zp_of_i_tm, &zp_of_gp_tm)
                && block.iso_test(&zp_qtm, &qtm)?,
        );

        // sequence 6: 0 -> Q'T -> Q'TG -> Q' -> 0, with the counit obtained
        // by factoring g' through T(g)
        let a_m = gp_m
            .factor_through_surjection(&tg_m)
            .expect("dual unit factors through the twisted unit");
        let qp_expr = conj_dual(&q);
        let qp_tg = block.eval_mor(&qp_expr, &tg_m)?;
        let qp_a = block.eval_mor(&qp_expr, &a_m)?;
        report.push(
            &format!("seq6:{name}"),
            "the conjugate cokernel preserves the twisted unit-counit sequence",
            qp_tg.is_injective() && qp_a.is_surjective() && exact_at(&qp_tg, &qp_a),
        );

        // sequence 9: 0 -> GT^2 -> G -> ZG -> 0
        let comp = gp_m.compose(&block.eval_mor(&t, &gp_m)?); // T^2M -> M
        let g_comp = block.eval_mor(&g, &comp)?; // GT^2M -> GM
        report.push(
            &format!("seq9:{name}"),
            "the completion of the squared dual unit is injective with quotient image",
            g_comp.is_injective() && z_gm.is_surjective() && exact_at(&g_comp, &z_gm),
        );

        // sequence 10: 0 -> Q'G -> TG -> TG^2 -> 0
        let i_gm = block.component_at(&i_nat, &gm)?;
        let g_gm = block.component_at(&g_nat, &gm)?; // GM -> G^2M
        let t_ggm = block.eval_mor(&t, &g_gm)?; // TGM -> TG^2M
        report.push(
            &format!("seq10:{name}"),
            "the twisted unit at the completion has the expected kernel",
            i_gm.is_injective() && t_ggm.is_surjective() && exact_at(&i_gm, &t_ggm),
        );

        // the doubly twisted unit is invertible
        let t2g_m = block.eval_mor(&t, &tg_m)?;
        report.push(
            &format!("T2g-iso:{name}"),
            "the doubly twisted unit is an isomorphism",
            t2g_m.is_isomorphism(),
        );
    }
    Ok(report)
}

/// All block suites in order.
pub fn suite_all(block: &Block) -> Result<CheckReport, BlockError> {
    let mut report = CheckReport::new("block-sl2", &params(&[("block", "sl2")]));
    for sub in [
        suite_table(block)?,
        suite_derived(block)?,
        suite_monoid(block)?,
        suite_exactness(block)?,
        suite_hom(block)?,
        suite_homdim(block)?,
        suite_sequences(block)?,
    ] {
        report.merge(sub);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whiskering_is_consistent_with_components() {
        let block = Block::sl2();
        let toolbox = NatToolbox::new(&block);
        let g_nat = block.completion_unit(1).clone();
        let t = f_t();
        // left whiskering: the component of T(g) at M is T applied to g_M
        let tg = toolbox.whisker_left(&t, &g_nat).unwrap();
        for m in &block.catalog {
            let direct = block.eval_mor(&t, &block.component_at(&g_nat, m).unwrap()).unwrap();
            let via = block.component_at(&tg, m).unwrap();
            assert!(direct.sub(&via).is_zero(), "left whisker at {:?}", m.label);
        }
        // right whiskering: the component of g at T M
        let gt = toolbox.whisker_right(&g_nat, &t).unwrap();
        for m in &block.catalog {
            let tm = block.eval(&t, m).unwrap();
            let direct = block.component_at(&g_nat, &tm).unwrap();
            let via = block.component_at(&gt, m).unwrap();
            assert!(direct.sub(&via).is_zero(), "right whisker at {:?}", m.label);
        }
    }

    #[test]
    fn dual_nat_is_involutive_on_components() {
        let block = Block::sl2();
        let toolbox = NatToolbox::new(&block);
        let g_nat = block.completion_unit(1).clone();
        let gp = toolbox.dual_nat(&g_nat).unwrap();
        let gpp = toolbox.dual_nat(&gp).unwrap();
        for (a, b) in g_nat.comps.iter().zip(&gpp.comps) {
            assert!(a.sub(b).is_zero());
        }
        // the dual of the unit lands where expected: T M -> M
        for m in &block.catalog {
            let c = block.component_at(&gp, m).unwrap();
            assert_eq!(c.cod.dims, m.dims);
        }
    }

    #[test]
    fn canonical_projections_are_surjective() {
        let block = Block::sl2();
        let toolbox = NatToolbox::new(&block);
        let z = toolbox.canonical_z(1).unwrap();
        let p = toolbox.canonical_p(1).unwrap();
        for m in &block.catalog {
            assert!(block.component_at(&z, m).unwrap().is_surjective());
            assert!(block.component_at(&p, m).unwrap().is_surjective());
        }
    }
}
