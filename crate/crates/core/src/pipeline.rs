//! End-to-end orchestration from a polytope file to instanton numbers.

use std::path::PathBuf;

use serde_json::{json, Map, Value};

use crate::chow::{chern_data, chow_ring_in_basis, hypersurface_ring, ChowRing, HypersurfaceRing};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::gkz::{psi_values, w0_series, GkzContext, GradedSeriesBundle};
use crate::groebner::{
    groebner_fan_traverse, monomial_string, toric_ideal_gb, variable_names, GroebnerBasis, TermOrder,
};
use crate::indicial::{
    indicial_hilbert_series, indicial_ideal, indicial_variety_is_origin, radical_indicial_ideal, IndicialIdeal,
};
use crate::io::parse_polytope_file;
use crate::lattice::{is_compatible, mori_basis, relation_lattice, MoriBasis, RelationLattice, TauChoice};
use crate::linalg::{self, Q};
use crate::mirror::{
    instanton_numbers, lines_number, prepotential, special_coordinates, yukawa_couplings, yukawa_via_chain_rule,
    MirrorMap, Prepotential, YukawaCoupling,
};
use crate::polytope::{
    full_point_set, gauge_point_set, is_reflexive, normalized_volume, polar_dual, LatticePolytope,
    PointConfiguration,
};
use crate::series::MultiSeries;
use crate::triangulation::{
    default_weight, find_maximal_weight, is_maximal, is_unimodular, monomial_radical, primitive_collections_weighted,
    regular_triangulation, stanley_reisner_generators, Triangulation, WeightVector,
};

/// Weights tried by the seeded search when no weight is given.
pub const SEARCH_TRIES: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Polytope,
    Triangulation,
    Lattice,
    Groebner,
    StanleyReisner,
    Indicial,
    Chow,
    Series,
    MirrorMap,
    Prepotential,
    Yukawa,
    Instantons,
}

impl Stage {
    pub const ALL: [Stage; 12] = [
        Stage::Polytope,
        Stage::Triangulation,
        Stage::Lattice,
        Stage::Groebner,
        Stage::StanleyReisner,
        Stage::Indicial,
        Stage::Chow,
        Stage::Series,
        Stage::MirrorMap,
        Stage::Prepotential,
        Stage::Yukawa,
        Stage::Instantons,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stage::Polytope => "polytope",
            Stage::Triangulation => "triangulation",
            Stage::Lattice => "lattice",
            Stage::Groebner => "groebner",
            Stage::StanleyReisner => "stanley_reisner",
            Stage::Indicial => "indicial",
            Stage::Chow => "chow",
            Stage::Series => "series",
            Stage::MirrorMap => "mirror_map",
            Stage::Prepotential => "prepotential",
            Stage::Yukawa => "yukawa",
            Stage::Instantons => "instantons",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub input: PathBuf,
    /// defaults to the canonical weight, then a seeded search
    pub weight: Option<WeightVector>,
    /// exclusive total-degree truncation of all series
    pub order: u32,
    /// rays of the Mori cone in reduced coordinates; the secondary cone otherwise
    pub tau: Option<Vec<Vec<i64>>>,
    pub gauge: bool,
    /// indicial ideal from the supports of leading monomials
    pub radical: bool,
    /// Gröbner basis computations allowed in fan traversal; 0 skips it
    pub budget: usize,
    pub seed: u64,
    pub output: Option<PathBuf>,
}

impl PipelineConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        Self {
            input: input.into(),
            weight: None,
            order: 8,
            tau: None,
            gauge: true,
            radical: false,
            budget: 32,
            seed: 0,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::Invalid("order must be at least 1".into()));
        }
        Ok(())
    }
}

/// Sections in stage order, each a structured value.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub sections: Map<String, Value>,
}

impl Report {
    pub fn section(&self, stage: Stage) -> Option<&Value> {
        self.sections.get(stage.name())
    }

    /// `N(d)` as an exact rational string.
    pub fn instanton(&self, d: &[u32]) -> Option<String> {
        let rows = self.section(Stage::Instantons)?["numbers"].as_array()?;
        rows.iter()
            .find(|row| row[0] == json!(d))
            .and_then(|row| row[1].as_str().map(String::from))
    }
}

fn tag<T>(stage: Stage, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Stage {
        stage: stage.name(),
        source: Box::new(e),
    })
}

fn qs(x: &Q) -> Value {
    Value::String(x.to_string())
}

fn qv(v: &[Q]) -> Value {
    Value::Array(v.iter().map(qs).collect())
}

fn series_rows(s: &MultiSeries<Q>) -> Value {
    Value::Array(
        s.sorted_terms()
            .into_iter()
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .map(|(e, c)| json!([e, c.to_string()]))
            .collect(),
    )
}

fn per_component(prefix: &str, s: &[MultiSeries<Q>]) -> Value {
    let mut m = Map::new();
    for (a, x) in s.iter().enumerate() {
        m.insert(format!("{prefix}{}", a + 1), series_rows(x));
    }
    Value::Object(m)
}

fn triple_rows(t: &std::collections::BTreeMap<(usize, usize, usize), Q>) -> Value {
    Value::Array(
        t.iter()
            .map(|(&(a, b, c), v)| json!([[a + 1, b + 1, c + 1], v.to_string()]))
            .collect(),
    )
}

fn ideal_strings(gens: &[Vec<u32>], names: &[String]) -> Value {
    json!(gens.iter().map(|g| monomial_string(g, names)).collect::<Vec<_>>())
}

/// Intermediate results of a run, for library callers.
#[derive(Default)]
pub struct PipelineState {
    pub polytope: Option<LatticePolytope>,
    pub config: Option<PointConfiguration>,
    pub weight: Option<WeightVector>,
    pub triangulation: Option<Triangulation>,
    pub lattice: Option<RelationLattice>,
    pub mori: Option<MoriBasis>,
    pub gb: Option<GroebnerBasis>,
    pub indicial: Option<IndicialIdeal>,
    pub chow: Option<ChowRing>,
    pub hypersurface: Option<HypersurfaceRing>,
    pub context: Option<GkzContext>,
    pub bundle: Option<GradedSeriesBundle>,
    pub mirror: Option<MirrorMap>,
    pub prepotential: Option<Prepotential>,
    pub yukawa: Option<YukawaCoupling>,
}

pub fn run_pipeline(config: &PipelineConfig) -> Result<Report> {
    run_until(config, Stage::Instantons).map(|(r, _)| r)
}

/// Run every stage up to and including `last`.
pub fn run_until(config: &PipelineConfig, last: Stage) -> Result<(Report, PipelineState)> {
    config.validate()?;
    let p = tag(Stage::Polytope, parse_polytope_file(&config.input))?;
    run_polytope_until(config, p, last)
}

/// As `run_until`, starting from an already parsed polytope.
pub fn run_polytope_until(
    config: &PipelineConfig,
    p: LatticePolytope,
    last: Stage,
) -> Result<(Report, PipelineState)> {
    config.validate()?;
    let mut st = PipelineState::default();
    let mut out = Map::new();
    for stage in Stage::ALL {
        if stage > last {
            break;
        }
        let v = tag(stage, run_stage(stage, config, &p, &mut st))?;
        out.insert(stage.name().into(), v);
    }
    Ok((Report { sections: out }, st))
}

fn run_stage(stage: Stage, cfg: &PipelineConfig, p: &LatticePolytope, st: &mut PipelineState) -> Result<Value> {
    match stage {
        Stage::Polytope => stage_polytope(cfg, p, st),
        Stage::Triangulation => stage_triangulation(cfg, st),
        Stage::Lattice => stage_lattice(cfg, st),
        Stage::Groebner => stage_groebner(cfg, st),
        Stage::StanleyReisner => stage_sr(st),
        Stage::Indicial => stage_indicial(cfg, st),
        Stage::Chow => stage_chow(st),
        Stage::Series => stage_series(cfg, st),
        Stage::MirrorMap => stage_mirror(cfg, st),
        Stage::Prepotential => stage_prepotential(st),
        Stage::Yukawa => stage_yukawa(st),
        Stage::Instantons => stage_instantons(cfg, st),
    }
}

fn stage_polytope(cfg: &PipelineConfig, p: &LatticePolytope, st: &mut PipelineState) -> Result<Value> {
    let points = if cfg.gauge { gauge_point_set(p)? } else { full_point_set(p)? };
    let dual: Value = match polar_dual(p) {
        Ok(d) => json!(d.vertices()),
        Err(_) => Value::Null,
    };
    let v = json!({
        "rank": p.rank(),
        "vertices": p.vertices(),
        "reflexive": is_reflexive(p),
        "normalized_volume": normalized_volume(p).to_string(),
        "dual_vertices": dual,
        "point_set": if cfg.gauge { "gauge" } else { "full" },
        "points": points.points(),
    });
    st.polytope = Some(p.clone());
    st.config = Some(points);
    Ok(v)
}

fn stage_triangulation(cfg: &PipelineConfig, st: &mut PipelineState) -> Result<Value> {
    let points = st.config.as_ref().expect("polytope stage ran");
    let (w, t, source) = match &cfg.weight {
        Some(w) => {
            if w.len() != points.len() {
                return Err(Error::WeightLength {
                    expected: points.len(),
                    got: w.len(),
                });
            }
            (w.clone(), regular_triangulation(points, w)?, "given".to_string())
        }
        None => {
            let w0 = default_weight(points.len());
            match regular_triangulation(points, &w0) {
                Ok(t) if is_maximal(&t) => (w0, t, "default".to_string()),
                _ => {
                    let (found, tries) = find_maximal_weight(points, true, SEARCH_TRIES, cfg.seed);
                    let (found, tries, kind) = match found {
                        Some(f) => (Some(f), tries, "unimodular"),
                        None => {
                            let (f, t2) = find_maximal_weight(points, false, SEARCH_TRIES, cfg.seed);
                            (f, tries + t2, "maximal")
                        }
                    };
                    let (w, t) = found.ok_or(Error::NotMaximal)?;
                    (w, t, format!("search {kind} seed={} tries={tries}", cfg.seed))
                }
            }
        }
    };
    let prims = match primitive_collections_weighted(&t) {
        Ok(pc) => json!(pc
            .iter()
            .map(|c| json!({
                "indices": c.indices,
                "multiplicities": c.multiplicities,
                "relation": c.relation,
            }))
            .collect::<Vec<_>>()),
        Err(_) => Value::Null,
    };
    let v = json!({
        "weight": qv(&w),
        "weight_source": source,
        "simplices": t.simplices(),
        "maximal": is_maximal(&t),
        "unimodular": is_unimodular(&t),
        "primitive_collections": prims,
    });
    st.weight = Some(w);
    st.triangulation = Some(t);
    Ok(v)
}

fn stage_lattice(cfg: &PipelineConfig, st: &mut PipelineState) -> Result<Value> {
    let t = st.triangulation.as_ref().expect("triangulation stage ran");
    let lat = relation_lattice(t.config());
    let tau = match &cfg.tau {
        Some(rays) => {
            if rays.iter().any(|r| r.len() != lat.rank()) {
                return Err(Error::Invalid(format!("Mori cone rays must have length {}", lat.rank())));
            }
            TauChoice::Cone(Cone::from_generators(lat.rank(), linalg::to_q_matrix(rays)))
        }
        None => TauChoice::Auto,
    };
    let a = mori_basis(t, tau)?;
    let v = json!({
        "rank": lat.rank(),
        "basis": lat.basis(),
        "mori_vectors": a.vectors,
        "mori_rays": a.rays,
        "tau": if cfg.tau.is_some() { "given" } else { "secondary cone" },
        "compatible": is_compatible(&a, t),
    });
    st.lattice = Some(lat);
    st.mori = Some(a);
    Ok(v)
}

fn stage_groebner(cfg: &PipelineConfig, st: &mut PipelineState) -> Result<Value> {
    let lat = st.lattice.as_ref().expect("lattice stage ran");
    let w = st.weight.as_ref().expect("triangulation stage ran");
    let gb = toric_ideal_gb(lat, &TermOrder::new(w.clone()))?;
    let names = variable_names("y", lat.ambient());
    let mut v = json!({
        "elements": gb.elements.iter().map(|b| b.display_with(&names)).collect::<Vec<_>>(),
        "relations": gb.relations(),
        "initial_ideal": ideal_strings(&gb.initial_ideal.generators, &names),
    });
    if cfg.budget > 0 {
        let fan = groebner_fan_traverse(lat, cfg.budget)?;
        v["fan"] = json!({
            "maximal_cones": fan.cones.len(),
            "complete": fan.complete,
            "computations": fan.computations,
            "initial_ideals": fan
                .cones
                .iter()
                .map(|(g, _)| ideal_strings(&g.initial_ideal.generators, &names))
                .collect::<Vec<_>>(),
        });
    }
    st.gb = Some(gb);
    Ok(v)
}

fn stage_sr(st: &mut PipelineState) -> Result<Value> {
    let t = st.triangulation.as_ref().expect("triangulation stage ran");
    let gb = st.gb.as_ref().expect("groebner stage ran");
    let names = variable_names("y", gb.nvars());
    let sr = stanley_reisner_generators(t);
    let rad = monomial_radical(&gb.initial_ideal);
    let squarefree = gb.initial_ideal.is_squarefree();
    Ok(json!({
        "generators": ideal_strings(&sr.generators, &names),
        "radical_of_initial": ideal_strings(&rad.generators, &names),
        "radical_equals_sr": rad == sr,
        "initial_squarefree": squarefree,
        "strict_inclusion": !squarefree,
    }))
}

fn stage_indicial(cfg: &PipelineConfig, st: &mut PipelineState) -> Result<Value> {
    let gb = st.gb.as_ref().expect("groebner stage ran");
    let a = st.mori.as_ref().expect("lattice stage ran");
    let ind = if cfg.radical {
        radical_indicial_ideal(gb, a)
    } else {
        indicial_ideal(gb, a)
    };
    let names = ind.names();
    let v = json!({
        "mode": if cfg.radical { "radical" } else { "leading" },
        "generators": ind.generators.iter().map(|g| g.display_with(&names)).collect::<Vec<_>>(),
        "homogeneous": ind.is_homogeneous(),
        "variety_is_origin": indicial_variety_is_origin(&ind),
        "hilbert_series": indicial_hilbert_series(&ind),
    });
    st.indicial = Some(ind);
    Ok(v)
}

fn stage_chow(st: &mut PipelineState) -> Result<Value> {
    let t = st.triangulation.as_ref().expect("triangulation stage ran");
    let a = st.mori.as_ref().expect("lattice stage ran");
    let ring = chow_ring_in_basis(t, a)?;
    let hx = hypersurface_ring(&ring);
    let ch = chern_data(&ring, a);
    let hs = ring.hilbert_series();
    let ind_hs = st.indicial.as_ref().and_then(indicial_hilbert_series);
    let mut v = json!({
        "ambient_dimension": ring.dim(),
        "hilbert_series": hs,
        "hypersurface_hilbert_series": hx.algebra().hilbert_series(),
        "matches_indicial": ind_hs.as_ref() == Some(&hs),
        "c2": ch.c2.to_string(),
        "c3": ch.c3.to_string(),
        "euler": ch.euler.to_string(),
    });
    if ring.dim() == 4 {
        let r = a.rank();
        let c2 = hx.project(&ch.c2);
        let alg = hx.algebra();
        let lin: Vec<Q> = (0..r)
            .map(|k| hx.integrate(&c2.mul(&crate::graded::ChowElement::generator(alg, k))))
            .collect();
        v["triple_intersections"] = triple_rows(&crate::mirror::triple_intersections(&hx, r));
        v["c2_linear"] = qv(&lin);
    }
    st.context = Some(GkzContext::hypersurface(&ring, &hx, a));
    st.chow = Some(ring);
    st.hypersurface = Some(hx);
    Ok(v)
}

fn stage_series(cfg: &PipelineConfig, st: &mut PipelineState) -> Result<Value> {
    let ctx = st.context.as_ref().expect("chow stage ran");
    let bundle = w0_series(ctx, cfg.order)?;
    let psi = psi_values(&vec![0; ctx.rank()], ctx)?;
    let v = json!({
        "order": cfg.order,
        "w0": series_rows(&bundle.w0),
        "psi_at_origin": psi.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    st.bundle = Some(bundle);
    Ok(v)
}

fn stage_mirror(cfg: &PipelineConfig, st: &mut PipelineState) -> Result<Value> {
    let bundle = st.bundle.as_ref().expect("series stage ran");
    let mm = special_coordinates(bundle, cfg.order);
    let v = json!({
        "forward": per_component("g", &mm.forward),
        "inverse": per_component("x", &mm.inverse),
    });
    st.mirror = Some(mm);
    Ok(v)
}

fn stage_prepotential(st: &mut PipelineState) -> Result<Value> {
    let f = prepotential(
        st.chow.as_ref().expect("chow stage ran"),
        st.hypersurface.as_ref().expect("chow stage ran"),
        st.mori.as_ref().expect("lattice stage ran"),
        st.bundle.as_ref().expect("series stage ran"),
        st.mirror.as_ref().expect("mirror stage ran"),
    )?;
    let v = json!({
        "triple_intersections": triple_rows(&f.triple),
        "c2_linear": qv(&f.c2_linear),
        "constant": f.constant.to_string(),
        "euler": f.euler.to_string(),
        "instanton_part": series_rows(&f.instanton),
    });
    st.prepotential = Some(f);
    Ok(v)
}

fn stage_yukawa(st: &mut PipelineState) -> Result<Value> {
    let f = st.prepotential.as_ref().expect("prepotential stage ran");
    let y = yukawa_couplings(f);
    let chain = yukawa_via_chain_rule(f, st.mirror.as_ref().expect("mirror stage ran"));
    let mut couplings = Map::new();
    for (&(a, b, c), s) in &y.k {
        couplings.insert(format!("{}{}{}", a + 1, b + 1, c + 1), series_rows(s));
    }
    let v = json!({
        "couplings": couplings,
        "chain_rule_agrees": chain.k == y.k,
    });
    st.yukawa = Some(y);
    Ok(v)
}

fn stage_instantons(cfg: &PipelineConfig, st: &mut PipelineState) -> Result<Value> {
    let y = st.yukawa.as_ref().expect("yukawa stage ran");
    let ctx = st.context.as_ref().expect("chow stage ran");
    let table = instanton_numbers(y, cfg.order)?;
    let r = ctx.rank();
    let mut checks = Vec::new();
    for a in 0..r {
        let mut d = vec![0u32; r];
        d[a] = 1;
        let closed = lines_number(&d, ctx)?;
        let from_yukawa = table.get(&d).cloned();
        checks.push(json!({
            "degree": d,
            "yukawa": from_yukawa.as_ref().map(qs),
            "closed_form": qs(&closed),
            "agree": from_yukawa.as_ref() == Some(&closed),
        }));
    }
    Ok(json!({
        "order": table.order,
        "numbers": table.rows().iter().map(|(d, n)| json!([d, n.to_string()])).collect::<Vec<_>>(),
        "degree_one_check": checks,
    }))
}
