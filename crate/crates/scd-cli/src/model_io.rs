//! Text format for containment models.
//!
//! ```text
//! MODEL expansion
//! a0 a1 ...        images of the pattern vertices
//! v ... w          one host path per pattern arc, in pattern order
//! ```

use scd_core::{CoreError, ModelKind, ModelMap};

pub const MODEL_HEADER: &str = "MODEL";

pub fn kind_name(kind: ModelKind) -> &'static str {
    match kind {
        ModelKind::Expansion => "expansion",
        ModelKind::Immersion => "immersion",
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn format_model(m: &ModelMap) -> String {
    let mut s = format!("{MODEL_HEADER} {}\n{}\n", kind_name(m.kind), join(&m.vertices));
    for p in &m.paths {
        s += &join(p);
        s.push('\n');
    }
    s
}

fn parse_err(line: usize, msg: impl Into<String>) -> CoreError {
    CoreError::Parse { line, msg: msg.into() }
}

fn nums(line: &str, ln: usize) -> Result<Vec<usize>, CoreError> {
    line.split_whitespace().map(|tok| tok.parse().map_err(|_| parse_err(ln, format!("bad number `{tok}`")))).collect()
}

pub fn parse_model(text: &str) -> Result<ModelMap, CoreError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty model"))?;
    let kind = match header.split_whitespace().collect::<Vec<_>>()[..] {
        [MODEL_HEADER, "expansion"] => ModelKind::Expansion,
        [MODEL_HEADER, "immersion"] => ModelKind::Immersion,
        _ => return Err(parse_err(1, format!("bad header `{}`", header.trim()))),
    };
    let (ln, images) = lines.next().ok_or_else(|| parse_err(2, "missing vertex images"))?;
    let vertices = nums(images, ln + 1)?;
    let paths =
        lines.filter(|(_, l)| !l.trim().is_empty()).map(|(ln, l)| nums(l, ln + 1)).collect::<Result<Vec<_>, _>>()?;
    Ok(ModelMap { kind, vertices, paths })
}
