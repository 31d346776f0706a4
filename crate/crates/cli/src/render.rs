//! Plain-text rendering of reports.

use std::fmt::Write;

use serde_json::Value;

use lie_frattini_core::classify::{AnalysisReport, Outcome, PredicateReport, SearchReport, Verdict};
use lie_frattini_core::fields::ScalarRepr;
use lie_frattini_core::lattice::LatticeJson;
use lie_frattini_core::liecore::AlgebraJson;
use lie_frattini_core::linalg::SubspaceJson;

use crate::reports::{ClassifyReport, IsomorphismReport, ValidateReport};

fn scalar(x: &ScalarRepr) -> String {
    match x {
        ScalarRepr::Int(n) => n.to_string(),
        ScalarRepr::Text(s) => s.strip_suffix("/1").unwrap_or(s).to_string(),
        ScalarRepr::Coeffs(c) => {
            let terms: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != 0)
                .map(|(k, &d)| match (k, d) {
                    (0, d) => d.to_string(),
                    (1, 1) => "t".into(),
                    (1, d) => format!("{d}t"),
                    (k, 1) => format!("t^{k}"),
                    (k, d) => format!("{d}t^{k}"),
                })
                .collect();
            match terms.len() {
                0 => "0".into(),
                1 => terms[0].clone(),
                _ => format!("({})", terms.join("+")),
            }
        }
    }
}

fn is_zero(x: &ScalarRepr) -> bool {
    scalar(x) == "0"
}

pub fn vector(labels: &[String], v: &[ScalarRepr]) -> String {
    let mut out = String::new();
    for (x, l) in v.iter().zip(labels).filter(|(x, _)| !is_zero(x)) {
        let c = scalar(x);
        let (negative, c) = match c.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, c),
        };
        let term = if c == "1" { l.clone() } else { format!("{c} {l}") };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => write!(out, "-{term}").unwrap(),
            (false, false) => write!(out, " + {term}").unwrap(),
            (false, true) => write!(out, " - {term}").unwrap(),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn span(labels: &[String], s: &SubspaceJson) -> String {
    if s.basis.is_empty() {
        return "0".into();
    }
    let b: Vec<String> = s.basis.iter().map(|v| vector(labels, v)).collect();
    format!("span({})", b.join(", "))
}

fn subspace_value(labels: &[String], v: &Value) -> Option<String> {
    let s: SubspaceJson = serde_json::from_value(v.clone()).ok()?;
    Some(span(labels, &s))
}

fn verdict(out: &mut String, labels: &[String], name: &str, v: &Verdict<SubspaceJson>) {
    match v {
        Verdict::True => writeln!(out, "  {name}: true").unwrap(),
        Verdict::NotComputed { reason } => writeln!(out, "  {name}: not computed ({reason})").unwrap(),
        Verdict::False { witness } => {
            writeln!(out, "  {name}: false").unwrap();
            let value = serde_json::to_value(witness).expect("witness serializes");
            let obj = value.as_object().expect("tagged witness");
            let parts: Vec<String> = obj
                .iter()
                .filter(|(k, _)| k.as_str() != "kind")
                .map(|(k, v)| {
                    let shown = subspace_value(labels, v).unwrap_or_else(|| v.to_string());
                    format!("{k} = {shown}")
                })
                .collect();
            writeln!(out, "    witness {}: {}", witness.kind(), parts.join("; ")).unwrap();
        }
    }
}

fn outcome<T>(out: &mut String, name: &str, o: &Outcome<T>, show: impl Fn(&T) -> String) {
    match o {
        Outcome::Computed { value } => writeln!(out, "  {name}: {}", show(value)).unwrap(),
        Outcome::NotComputed { reason } => writeln!(out, "  {name}: not computed ({reason})").unwrap(),
    }
}

pub fn algebra(j: &AlgebraJson) -> String {
    let labels = j.labels_or_default();
    let mut out = String::new();
    writeln!(out, "field {}, dimension {}, basis {}", j.field, j.dim, labels.join(" ")).unwrap();
    if j.brackets.is_empty() {
        writeln!(out, "abelian: all brackets vanish").unwrap();
    }
    for b in &j.brackets {
        writeln!(out, "[{}, {}] = {}", labels[b.i], labels[b.j], vector(&labels, &b.value)).unwrap();
    }
    out
}

fn predicates(out: &mut String, labels: &[String], p: &PredicateReport) {
    writeln!(out, "predicates:").unwrap();
    verdict(out, labels, "elementary", &p.elementary);
    verdict(out, labels, "minimal non-elementary", &p.minimal_non_elementary);
    verdict(out, labels, "E-algebra", &p.e_algebra);
    verdict(out, labels, "A-algebra", &p.a_algebra);
    verdict(out, labels, "solvable", &p.solvable);
    verdict(out, labels, "nilpotent", &p.nilpotent);
    verdict(out, labels, "supersolvable", &p.supersolvable);
    outcome(out, "shape", &p.shape, |s| s.to_string());
    outcome(out, "jordan family parameter", &p.jordan_alpha, |a| match a {
        Some(a) => a.to_string(),
        None => "not a member".into(),
    });
}

fn dims(v: &[SubspaceJson]) -> String {
    let d: Vec<String> = v.iter().map(|s| s.basis.len().to_string()).collect();
    d.join(" > ")
}

pub fn analysis(r: &AnalysisReport, j: &AlgebraJson) -> String {
    let labels = &r.labels;
    let mut out = algebra(j);
    let s = &r.series;
    writeln!(out, "series:").unwrap();
    writeln!(out, "  derived series dimensions: {}", dims(&s.derived)).unwrap();
    writeln!(out, "  lower central series dimensions: {}", dims(&s.lower_central)).unwrap();
    writeln!(out, "  derived algebra: {}", span(labels, &s.derived_algebra)).unwrap();
    writeln!(out, "  center: {}", span(labels, &s.center)).unwrap();
    if let Some(c) = s.nilpotency_class {
        writeln!(out, "  nilpotency class: {c}").unwrap();
    }
    writeln!(out, "structure:").unwrap();
    match &r.structure {
        Outcome::Computed { value: st } => {
            let l = &st.lattice;
            writeln!(
                out,
                "  {} subalgebras and {} ideals among {} subspaces",
                l.subalgebras, l.ideals, l.subspaces_examined
            )
            .unwrap();
            let mins: Vec<String> = st.minimal_ideals.iter().map(|m| span(labels, m)).collect();
            writeln!(out, "  minimal ideals: {}", mins.join(", ")).unwrap();
            writeln!(out, "  abelian socle: {}", span(labels, &st.abelian_socle)).unwrap();
            writeln!(out, "  nilradical: {}", span(labels, &st.nilradical)).unwrap();
            writeln!(out, "  radical: {}", span(labels, &st.radical)).unwrap();
            writeln!(out, "  frattini subalgebra: {}", span(labels, &st.frattini_subalgebra)).unwrap();
            writeln!(out, "  frattini ideal: {}", span(labels, &st.frattini)).unwrap();
        }
        Outcome::NotComputed { reason } => writeln!(out, "  not computed ({reason})").unwrap(),
    }
    predicates(&mut out, labels, &r.predicates);
    for c in &r.companions {
        match &c.report {
            Outcome::Computed { value } => {
                let phi = value.structure.value().map(|s| span(labels, &s.frattini));
                writeln!(
                    out,
                    "modulo {}: frattini ideal {}",
                    c.prime,
                    phi.unwrap_or_else(|| "not computed".into())
                )
                .unwrap();
            }
            Outcome::NotComputed { reason } => {
                writeln!(out, "modulo {}: not computed ({reason})", c.prime).unwrap()
            }
        }
    }
    if let Some(c) = &r.char0_frattini {
        let value = c.value.as_ref().map(|v| span(labels, v));
        let agree = match c.companions_agree {
            Some(true) => ", companions agree",
            Some(false) => ", companions disagree",
            None => "",
        };
        writeln!(
            out,
            "characteristic-0 frattini ideal: {}{agree}",
            value.unwrap_or_else(|| "unknown".into())
        )
        .unwrap();
    }
    out
}

pub fn classify(r: &ClassifyReport, j: &AlgebraJson) -> String {
    let mut out = algebra(j);
    writeln!(out, "frattini ideal: {}", span(&r.labels, &r.frattini)).unwrap();
    predicates(&mut out, &r.labels, &r.predicates);
    out
}

pub fn lattice(r: &LatticeJson, labels: &[String]) -> String {
    let s = &r.summary;
    let mut out = String::new();
    writeln!(out, "field {}, dimension {}", s.field, s.dim).unwrap();
    writeln!(out, "subspaces examined: {}", s.subspaces_examined).unwrap();
    writeln!(out, "subalgebras: {} by dimension {:?}", s.subalgebras, s.subalgebras_by_dim).unwrap();
    writeln!(out, "ideals: {} by dimension {:?}", s.ideals, s.ideals_by_dim).unwrap();
    writeln!(out, "cover edges: {}", s.cover_edges).unwrap();
    for n in &r.nodes {
        let sub = SubspaceJson {
            ambient: s.dim,
            basis: n.basis.clone(),
        };
        let tag = if n.ideal { " ideal" } else { "" };
        writeln!(out, "node {}: {}{tag}", n.id, span(labels, &sub)).unwrap();
    }
    for [a, b] in &r.covers {
        writeln!(out, "cover {a} < {b}").unwrap();
    }
    out
}

pub fn search(r: &SearchReport) -> String {
    let mut out = String::new();
    writeln!(out, "field {}, dimension {}", r.field, r.dim).unwrap();
    writeln!(out, "tables scanned: {}", r.tables_scanned).unwrap();
    writeln!(out, "Jacobi-valid: {}", r.jacobi_valid).unwrap();
    writeln!(out, "solvable: {}, nilpotent: {}", r.solvable, r.nilpotent).unwrap();
    writeln!(
        out,
        "minimal non-elementary: {} ({} solvable)",
        r.minimal_non_elementary, r.minimal_non_elementary_solvable
    )
    .unwrap();
    writeln!(
        out,
        "shapes: heisenberg {}, abelian-split {}, none {}",
        r.shapes.heisenberg, r.shapes.abelian_split, r.shapes.none
    )
    .unwrap();
    writeln!(out, "discrepancies: {}", r.discrepancies.len()).unwrap();
    for d in &r.discrepancies {
        writeln!(
            out,
            "  table {}: minimal non-elementary {}, shape {}",
            d.table_index, d.minimal_non_elementary, d.shape
        )
        .unwrap();
    }
    for (name, v) in [
        ("derived-nilpotent exceptions", &r.derived_nilpotent_exceptions),
        ("E-algebra exceptions", &r.e_algebra_exceptions),
        ("nilpotent frattini exceptions", &r.nilpotent_frattini_exceptions),
    ] {
        writeln!(out, "{name}: {}", v.len()).unwrap();
    }
    writeln!(out, "classes: {}", r.representatives.len()).unwrap();
    for rep in &r.representatives {
        let labels = rep.algebra.labels_or_default();
        let shape = rep.shape.map(|s| s.to_string()).unwrap_or_else(|| "not solvable".into());
        writeln!(
            out,
            "class of table {} ({} tables), shape {shape}, frattini ideal {}",
            rep.table_index,
            rep.class_size,
            span(&labels, &rep.frattini)
        )
        .unwrap();
        if let Some(a) = rep.jordan_alpha {
            writeln!(out, "  jordan family parameter {a}").unwrap();
        }
        for line in algebra(&rep.algebra).lines().skip(1) {
            writeln!(out, "  {line}").unwrap();
        }
    }
    out
}

pub fn validate(r: &ValidateReport, j: &AlgebraJson) -> String {
    let mut out = algebra(j);
    match &r.violation {
        None => writeln!(out, "Jacobi identity holds").unwrap(),
        Some(v) => {
            let labels = j.labels_or_default();
            let [a, b, c] = v.triple;
            writeln!(
                out,
                "Jacobi identity fails on ({}, {}, {}): defect {}",
                labels[a],
                labels[b],
                labels[c],
                vector(&labels, &v.defect)
            )
            .unwrap();
        }
    }
    out
}

pub fn isomorphism(r: &IsomorphismReport) -> String {
    let mut out = String::new();
    match &r.map {
        None => writeln!(out, "not isomorphic").unwrap(),
        Some(images) => {
            writeln!(out, "isomorphic").unwrap();
            let labels = lie_frattini_core::liecore::default_labels(images.len());
            for (l, v) in labels.iter().zip(images) {
                writeln!(out, "  {l} -> {}", vector(&labels, v)).unwrap();
            }
        }
    }
    out
}
