//! The pipeline stages behind each subcommand.

use serde_json::{json, Value};
use tiltcell::algebra::{HomSpace, Module};
use tiltcell::basis::{filtration_oracle, is_unitriangular, StandardBasisDatum};
use tiltcell::cells::CellData;
use tiltcell::duality::{build_cellular_basis, AntiInvolution};
use tiltcell::highest_weight::{verify_standard_category, Registry};
use tiltcell::tilting::{all_tiltings, default_dim_bound, tilting_report, tilting_sum, tilting_support, TiltingTriple};
use tiltcell::{Error, Matrix, Result, Scalar};

use crate::input::TiltingRequest;
use crate::report::{matrix, Report, Section};

/// Everything a command needs once the input has been resolved.
pub struct Setup<S> {
    pub registry: Registry<S>,
    pub involution: Option<Matrix<S>>,
    pub tilting: TiltingRequest,
    pub seed: u64,
    pub trials: usize,
    pub dim_bound: Option<usize>,
}

impl<S: Scalar> Setup<S> {
    fn label(&self, l: usize) -> String {
        self.registry.label(l).to_string()
    }

    fn labels(&self, ls: &[usize]) -> Vec<String> {
        ls.iter().map(|&l| self.label(l)).collect()
    }

    fn tiltings(&self) -> Result<Vec<TiltingTriple<S>>> {
        all_tiltings(&self.registry, self.dim_bound.unwrap_or_else(|| default_dim_bound(&self.registry)))
    }

    fn requested(&self, tiltings: &[TiltingTriple<S>]) -> Result<(Vec<usize>, Module<S>)> {
        let mult = self.tilting.multiplicities(&self.registry)?;
        let t = tilting_sum(tiltings, &mult)?;
        Ok((mult, t))
    }

    fn describe(&self, mult: &[usize]) -> String {
        let parts: Vec<String> = mult
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(l, &m)| if m == 1 { format!("T({})", self.label(l)) } else { format!("{m}·T({})", self.label(l)) })
            .collect();
        parts.join(" ⊕ ")
    }
}

pub fn verify<S: Scalar>(s: &Setup<S>, report: &mut Report) -> Result<()> {
    let checks = verify_standard_category(&s.registry)?;
    let mut order: Vec<&str> = Vec::new();
    for c in &checks.checks {
        if !order.contains(&c.axiom) {
            order.push(c.axiom);
        }
    }
    for axiom in order {
        let group: Vec<_> = checks.checks.iter().filter(|c| c.axiom == axiom).collect();
        let mut section = Section::new(axiom, "standard category axioms");
        for c in &group {
            if !c.passed {
                section.check(false, c.detail.clone());
            }
        }
        let passed = group.iter().filter(|c| c.passed).count();
        section.line(format!("{passed} of {} checks hold", group.len()));
        section.data = Value::Array(
            group
                .iter()
                .map(|c| json!({"lambda": c.lambda, "mu": c.mu, "passed": c.passed, "detail": c.detail}))
                .collect(),
        );
        report.push(section);
    }
    let cartan = s.registry.cartan_matrix()?;
    let mut section = Section::new("modules", "standard category axioms");
    let mut data = Vec::new();
    for l in 0..s.registry.len() {
        let dims = [s.registry.simple(l), s.registry.standard(l), s.registry.costandard(l), s.registry.projective(l)]
            .map(Module::dim);
        section.line(format!("{}: dim L = {}, Δ = {}, ∇ = {}, P = {}", s.label(l), dims[0], dims[1], dims[2], dims[3]));
        data.push(json!({"label": s.label(l), "simple": dims[0], "standard": dims[1], "costandard": dims[2], "projective": dims[3]}));
    }
    section.data = json!({"dimensions": data, "cartan": cartan});
    report.push(section);
    checks.into_result().map(|_| ())
}

pub fn tilting<S: Scalar>(s: &Setup<S>, report: &mut Report) -> Result<()> {
    let ts = s.tiltings()?;
    let n = s.registry.len();
    let mut section =
        Section::new("indecomposable tilting modules", "tilting modules carry standard and costandard filtrations");
    let mut data = Vec::new();
    for t in &ts {
        let l = t.label;
        let delta = s.registry.delta_filtration(&t.module)?;
        let nabla = s.registry.nabla_filtration(&t.module)?;
        let ext = tilting_report(&s.registry, &t.module)?;
        let hw = s.registry.has_highest_weight(&t.module, l)?;
        section.check(
            ext.is_tilting() && hw,
            format!(
                "T({}): dim {}, Δ-factors {:?}, ∇-factors {:?}",
                s.label(l),
                t.module.dim(),
                s.labels(&delta.factor_labels),
                s.labels(&nabla.factor_labels)
            ),
        );
        data.push(json!({
            "label": s.label(l),
            "dim": t.module.dim(),
            "standard_factors": s.labels(&delta.factor_labels),
            "costandard_factors": s.labels(&nabla.factor_labels),
            "standard_multiplicities": delta.multiplicities(n),
            "highest_weight": hw,
            "ext_to_costandard": ext.ext_to_costandard,
            "ext_from_standard": ext.ext_from_standard,
        }));
    }
    section.data = Value::Array(data);
    report.push(section);

    let mut section =
        Section::new("classification", "classification of indecomposable tilting modules by highest weight");
    let mut supports = Vec::new();
    for t in &ts {
        let support = tilting_support(&ts, &t.module)?;
        let ok = (0..n).all(|k| support[k] == usize::from(k == t.label));
        section.check(ok, format!("{} ↔ T({})", s.label(t.label), s.label(t.label)));
        supports.push(support);
    }
    section.data = json!({ "supports": supports });
    report.push(section);

    let (mult, t) = s.requested(&ts)?;
    let mut section =
        Section::new("requested tilting module", "classification of indecomposable tilting modules by highest weight");
    let support = tilting_support(&ts, &t)?;
    let ext = tilting_report(&s.registry, &t)?;
    section.check(support == mult, format!("T = {}: dim {}, summands {:?}", s.describe(&mult), t.dim(), support));
    section.check(ext.is_tilting(), "Ext¹(T, ∇) = 0 and Ext¹(Δ, T) = 0");
    section.data = json!({"multiplicities": mult, "dim": t.dim(), "support": support});
    report.push(section);
    Ok(())
}

fn datum_json<S: Scalar>(s: &Setup<S>, d: &StandardBasisDatum<S>) -> Value {
    let fibers: Vec<Value> = (0..d.fibers().len())
        .map(|k| {
            let elements: Vec<Value> = (0..d.i_len(k))
                .flat_map(|i| (0..d.j_len(k)).map(move |j| (i, j)))
                .map(|(i, j)| json!({"i": i, "j": j, "matrix": matrix(d.element(k, i, j))}))
                .collect();
            json!({"label": s.label(d.label(k)), "i": d.i_len(k), "j": d.j_len(k), "elements": elements})
        })
        .collect();
    json!({"seed": d.seed(), "dim": d.dim(), "fibers": fibers})
}

pub fn basis<S: Scalar>(s: &Setup<S>, report: &mut Report) -> Result<()> {
    let ts = s.tiltings()?;
    let (mult, t) = s.requested(&ts)?;
    let d0 = StandardBasisDatum::build(&s.registry, &ts, &t, s.seed)?;
    let d1 = StandardBasisDatum::build(&s.registry, &ts, &t, s.seed.wrapping_add(1))?;
    let end = HomSpace::compute(&t, &t)?.dim();

    let mut section = Section::new("standard basis", "standard basis theorem for End(T)");
    section.line(format!("T = {}, dim T = {}, dim End(T) = {end}", s.describe(&mult), t.dim()));
    let mut total = 0;
    for k in 0..d0.fibers().len() {
        let (i, j) = (d0.i_len(k), d0.j_len(k));
        total += i * j;
        section.line(format!("{}: |I| = {i}, |J| = {j}", s.label(d0.label(k))));
    }
    section.check(total == end, format!("Σ |I||J| = {total}, dim End(T) = {end}"));
    let rows = d0.elements().into_iter().map(|(_, _, _, e)| e.data().to_vec());
    let rank = Matrix::from_rows(t.dim() * t.dim(), rows).rank();
    section.check(rank == total, format!("rank of the basis elements = {rank}"));
    section.data = datum_json(s, &d0);
    report.push(section);

    let mut section = Section::new("standard basis axioms", "standard basis theorem for End(T)");
    for d in [&d0, &d1] {
        let witness = d.verify_axioms(&s.registry, s.trials, s.seed)?;
        let msg = match &witness {
            None => format!("seed {}: {} random products reduce correctly", d.seed(), s.trials),
            Some(w) => format!(
                "seed {}: {} congruence fails at trial {}, fiber {}, ({}, {})",
                d.seed(),
                w.side,
                w.trial,
                w.fiber,
                w.i,
                w.j
            ),
        };
        section.check(witness.is_none(), msg);
    }
    report.push(section);

    let mut section = Section::new("lift independence", "standard basis theorem for End(T)");
    let forward = is_unitriangular(&s.registry, &d0, &d1)?;
    let backward = is_unitriangular(&s.registry, &d1, &d0)?;
    section
        .check(forward && backward, format!("seeds {} and {}: change of basis is unitriangular", d0.seed(), d1.seed()));
    report.push(section);

    let mut section = Section::new("filtration oracle", "standard basis theorem for End(T)");
    let mut dims = Vec::new();
    for l in 0..s.registry.len() {
        let from_basis = d0.basis.filtration(&s.registry, l);
        let oracle = filtration_oracle(&s.registry, &t, &t, l)?;
        section.check(from_basis == oracle, format!("dim End(T)^≤{} = {}", s.label(l), from_basis.dim()));
        dims.push(json!({"label": s.label(l), "dim": from_basis.dim()}));
    }
    section.data = Value::Array(dims);
    report.push(section);
    Ok(())
}

pub fn cells<S: Scalar>(s: &Setup<S>, report: &mut Report) -> Result<()> {
    let ts = s.tiltings()?;
    let (mult, t) = s.requested(&ts)?;
    let d = StandardBasisDatum::build(&s.registry, &ts, &t, s.seed)?;
    let cd = CellData::build(&ts, d)?;

    let mut section = Section::new("cell modules", "cell module theorems: simple dimensions and semisimplicity");
    section.line(format!("T = {}, dim End(T) = {}", s.describe(&mult), cd.end_dim()));
    let mut data = Vec::new();
    for c in &cd.cells {
        let l = s.label(c.label);
        section.check(
            c.rank == c.multiplicity,
            format!(
                "{l}: dim cell module {}, rank β = {}, multiplicity of T({l}) = {}",
                c.module.dim(),
                c.rank,
                c.multiplicity
            ),
        );
        data.push(json!({
            "label": l,
            "cell_module_dim": c.module.dim(),
            "gram": matrix(&c.gram),
            "rank": c.rank,
            "multiplicity": c.multiplicity,
            "simple_dim": c.rank,
        }));
    }
    section.data = Value::Array(data);
    report.push(section);

    let ss = cd.semisimplicity()?;
    let mut section = Section::new("semisimplicity", "cell module theorems: simple dimensions and semisimplicity");
    section.line(format!("End(T) has zero radical: {}", ss.by_radical));
    section.line(format!("T is semisimple: {}", ss.by_module));
    section.line(format!("Σ (rank β)² = dim End(T): {}", ss.by_cells));
    section.check(ss.agree(), "the three verdicts agree");
    section.data = json!({"by_radical": ss.by_radical, "by_module": ss.by_module, "by_cells": ss.by_cells});
    report.push(section);

    let mut section = Section::new("product rule", "standard basis theorem for End(T)");
    match cd.check_product_rule(&s.registry)? {
        None => section.check(true, "c_ij · c_kl reduces through the Gram pairing"),
        Some((k, i, j, a, b)) => section.check(false, format!("fiber {k}: ({i}, {j}) times ({a}, {b})")),
    }
    report.push(section);
    Ok(())
}

pub fn cellular<S: Scalar>(s: &Setup<S>, report: &mut Report) -> Result<()> {
    let tau = s
        .involution
        .clone()
        .ok_or_else(|| Error::InvalidInput("the cellular command needs an anti-involution".into()))?;
    let tau = AntiInvolution::new(s.registry.algebra(), tau)?;
    let ts = s.tiltings()?;
    let (mult, t) = s.requested(&ts)?;
    let cd = build_cellular_basis(&s.registry, &ts, &t, tau, s.seed, s.trials)?;

    let mut section = Section::new("duality", "duality exchanges standard and costandard modules");
    section.check(cd.duality.check.exchange.len() == s.registry.len(), "D(Δ(λ)) ≅ ∇(λ) for every λ");
    section.check(cd.duality.check.tilting.len() == ts.len(), "D(T(λ)) ≅ T(λ) for every λ");
    report.push(section);

    let mut section = Section::new("fixed points", "fixed points of the duality");
    let mut data = Vec::new();
    for (tr, fp) in ts.iter().zip(&cd.duality.tilting_fixed) {
        section.check(fp.is_fixed(), format!("T({}): Φ symmetric", s.label(tr.label)));
        data.push(json!({"label": s.label(tr.label), "phi": matrix(&fp.phi.matrix)}));
    }
    section.check(cd.duality.working.is_fixed(), format!("T = {}: Φ symmetric", s.describe(&mult)));
    section.data = json!({"tiltings": data, "working": matrix(&cd.duality.working.phi.matrix)});
    report.push(section);

    let d = &cd.datum;
    let alpha = cd.involution.matrix();
    let mut section = Section::new("induced involution", "fixed points of the duality");
    section.check(&alpha * &alpha == Matrix::identity(alpha.rows()), "α² = id");
    section.data = json!({ "alpha": matrix(&alpha) });
    report.push(section);

    let mut section = Section::new("cellular basis", "cellularity of the symmetric basis");
    let mut swapped = 0;
    let mut total = 0;
    for k in 0..d.fibers().len() {
        section.check(d.i_len(k) == d.j_len(k), format!("{}: |I| = |J| = {}", s.label(d.label(k)), d.i_len(k)));
        for i in 0..d.i_len(k) {
            for j in 0..d.j_len(k) {
                total += 1;
                swapped += usize::from(cd.involution.apply(d.element(k, i, j)) == *d.element(k, j, i));
            }
        }
        let gram = &cd.cells.cells[k].gram;
        section.check(*gram == gram.transpose(), format!("{}: Gram matrix symmetric", s.label(d.label(k))));
    }
    section.check(swapped == total, format!("α(c_ij) = c_ji for {swapped} of {total} basis elements"));
    let witness = d.verify_axioms(&s.registry, s.trials, s.seed)?;
    section.check(witness.is_none(), format!("standard basis axioms over {} random products", s.trials));
    section.data = datum_json(s, d);
    report.push(section);
    Ok(())
}
