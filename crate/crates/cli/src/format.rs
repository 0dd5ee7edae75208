//! Text format for colorings.
//!
//! ```text
//! <t> <k> <r> <mode>
//! <class sizes of part 1, space separated>
//! ...
//! <class sizes of part t>
//! unused <count>
//! ```
//!
//! `mode` is `m=<level>` for a coloring whose classes all lie in
//! `[level, level + r]`, or `missing` when some colors are left empty. Lines
//! end with `\n`; the output for a given plan is always byte-identical.

use std::fmt::Write as _;

use requitable_core::ColoringPlan;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header says {expected} parts but {found} part lines follow")]
    PartCount { expected: usize, found: usize },
    #[error("header says k = {header} but the classes and unused colors add up to {counted}")]
    ColorCount { header: u64, counted: u64 },
}

/// Renders a plan. Plans without a level are written in `missing` mode.
pub fn write_plan(plan: &ColoringPlan) -> String {
    let mode = match plan.level {
        Some(m) => format!("m={m}"),
        None => "missing".to_string(),
    };
    let mut out = format!(
        "{} {} {} {}\n",
        plan.part_classes.len(),
        plan.k,
        plan.r,
        mode
    );
    for classes in &plan.part_classes {
        let line: Vec<String> = classes.iter().map(u64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    let _ = writeln!(out, "unused {}", plan.unused);
    out
}

fn number(token: &str, line: usize, what: &str) -> Result<u64, FormatError> {
    token.parse().map_err(|_| FormatError::Syntax {
        line,
        msg: format!("{what} must be a nonnegative integer, got {token:?}"),
    })
}

/// Parses the text format back into a plan.
pub fn parse_plan(text: &str) -> Result<ColoringPlan, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    let header = lines.first().ok_or(FormatError::Syntax {
        line: 1,
        msg: "empty input".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [t, k, r, mode] = fields[..] else {
        return Err(FormatError::Syntax {
            line: 1,
            msg: "header must be `<t> <k> <r> <mode>`".into(),
        });
    };
    let t = number(t, 1, "t")? as usize;
    let k = number(k, 1, "k")?;
    let r = number(r, 1, "r")?;
    let level = match mode {
        "missing" => None,
        m => match m.strip_prefix("m=") {
            Some(level) => Some(number(level, 1, "level")?),
            None => {
                return Err(FormatError::Syntax {
                    line: 1,
                    msg: format!("unknown mode {m:?}"),
                })
            }
        },
    };

    let last = lines.len() - 1;
    let unused = match lines[last].split_whitespace().collect::<Vec<_>>()[..] {
        ["unused", count] if last > 0 => number(count, last + 1, "unused count")?,
        _ => {
            return Err(FormatError::Syntax {
                line: last + 1,
                msg: "expected `unused <count>`".into(),
            })
        }
    };
    let part_classes = lines[1..last]
        .iter()
        .enumerate()
        .map(|(i, line)| {
            line.split_whitespace()
                .map(|tok| number(tok, i + 2, "class size"))
                .collect()
        })
        .collect::<Result<Vec<Vec<u64>>, _>>()?;
    if part_classes.len() != t {
        return Err(FormatError::PartCount {
            expected: t,
            found: part_classes.len(),
        });
    }
    let counted = part_classes.iter().map(|c| c.len() as u64).sum::<u64>() + unused;
    if counted != k {
        return Err(FormatError::ColorCount { header: k, counted });
    }
    Ok(ColoringPlan {
        part_classes,
        unused,
        r,
        k,
        level,
    })
}
