use serde_json::{json, Value as Json};
use smt_core::eval::{AxiomReport, Verdict};

pub fn to_json(report: &AxiomReport) -> Json {
    let spec = &report.spec;
    let axioms: Vec<Json> = report
        .outcomes
        .iter()
        .map(|o| {
            let mut entry = json!({
                "name": o.name,
                "instances": o.instances,
                "skipped": o.skipped,
            });
            let fields = entry.as_object_mut().expect("object literal");
            match &o.verdict {
                Verdict::Pass => {
                    fields.insert("verdict".into(), "pass".into());
                }
                Verdict::Fail { counterexample } => {
                    fields.insert("verdict".into(), "fail".into());
                    fields.insert("counterexample".into(), counterexample.as_str().into());
                }
                Verdict::NotFinitelyCheckable { reason } => {
                    fields.insert("verdict".into(), "not-finitely-checkable".into());
                    fields.insert("reason".into(), reason.as_str().into());
                }
            }
            if let Some(note) = &o.note {
                fields.insert("note".into(), note.as_str().into());
            }
            entry
        })
        .collect();
    json!({
        "bounds": {
            "rank": spec.rank_bound,
            "width": spec.set_width_bound,
            "dim": spec.matrix_dim_bound,
            "nest": spec.nest_depth_bound,
        },
        "universe_size": report.universe_size,
        "all_passed": report.all_passed(),
        "axioms": axioms,
    })
}
