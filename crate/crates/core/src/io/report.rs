use std::fmt::Write as _;

use crate::characterize::Analysis;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    v.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Renders an analysis as plain text, or as pretty JSON with the keys
/// `size, valid, indecomposable, irretractable, simple_oracle, group_order,
/// ideal_sizes, theorem{cond1, cond2, cond3, equivalent}, classification`
/// plus a few extra fields.
pub fn emit_report(a: &Analysis, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(a).expect("analysis serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "size:                   {}", a.size);
            let _ = writeln!(out, "valid:                  {}", yes_no(a.valid));
            let _ = writeln!(out, "indecomposable:         {}", yes_no(a.indecomposable));
            let _ = writeln!(out, "irretractable:          {}", yes_no(a.irretractable));
            let _ = writeln!(out, "retraction tower:       {}", list(&a.retraction_tower));
            let level = a
                .multipermutation_level
                .map_or_else(|| "none".to_string(), |l| l.to_string());
            let _ = writeln!(out, "multipermutation level: {level}");
            let _ = writeln!(out, "simple (oracle):        {}", yes_no(a.simple_oracle));
            let _ = writeln!(out, "group order:            {}", a.group_order);
            let _ = writeln!(out, "socle size:             {}", a.socle_size);
            let _ = writeln!(out, "ideal sizes:            {}", list(&a.ideal_sizes));
            let _ = writeln!(
                out,
                "minimal ideal sizes:    {}",
                list(&a.minimal_ideal_sizes)
            );
            let t = &a.theorem;
            let eq = t.equivalent.map_or("n/a (preconditions fail)", yes_no);
            let _ = writeln!(
                out,
                "theorem:                cond1={} cond2={} cond3={} equivalent={eq}",
                t.cond1, t.cond2, t.cond3
            );
            let _ = writeln!(out, "classification:         {}", a.classification);
            out
        }
    }
}
