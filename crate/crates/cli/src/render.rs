use std::fmt::Write as _;

use scrolls_core::{Action, DegenerationNode, ScrollReport};

pub fn summary(r: &ScrollReport) -> String {
    let mut line = format!("{}  d={} g={}", r.base, r.degree, r.genus);
    if r.is_degenerate() {
        let _ = write!(line, " span=P^{}", r.span);
    }
    let _ = write!(line, " h1={}", r.h1);
    if r.special {
        line.push_str(" special");
    }
    if r.anomalous {
        line.push_str(" anomalous");
    }
    line
}

fn directrix_cell(r: &ScrollReport) -> String {
    r.directrix
        .iter()
        .map(|e| format!("P^{}:{}:{}", e.space_dim, e.curve_degree, e.curve_genus))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn text(reports: &[ScrollReport], detailed: bool) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&summary(r));
        out.push('\n');
        if !detailed {
            continue;
        }
        let _ = writeln!(
            out,
            "scroll: {}{}",
            r.label(),
            if r.special { " *" } else { "" }
        );
        for e in &r.directrix {
            let _ = writeln!(
                out,
                "directrix on P^{}: degree {}, genus {}",
                e.space_dim, e.curve_degree, e.curve_genus
            );
        }
        if let Some(tree) = &r.tree {
            out.push_str("degeneration:\n");
            tree_lines(tree, 1, &mut out);
        }
    }
    out
}

fn tree_lines(node: &DegenerationNode, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let how = match &node.action {
        Action::Pencil => "pencil".to_string(),
        Action::Restrict => "restrict to span".to_string(),
        Action::Join { pair, m, kappa } => {
            format!("join P^{} P^{} in P^{m}, kappa={kappa}", pair.0, pair.1)
        }
    };
    let _ = writeln!(
        out,
        "{pad}{}  d={} g={}  {how}",
        node.base, node.degree, node.genus
    );
    for child in &node.children {
        tree_lines(child, depth + 1, out);
    }
}

const COLUMNS: [&str; 8] = [
    "ambient",
    "dims",
    "span",
    "degree",
    "genus",
    "h1",
    "special",
    "directrix",
];

fn cells(r: &ScrollReport) -> [String; 8] {
    let dims: Vec<String> = r.base.dims().iter().map(u32::to_string).collect();
    [
        r.base.ambient().to_string(),
        dims.join(" "),
        r.span.to_string(),
        r.degree.to_string(),
        r.genus.to_string(),
        r.h1.to_string(),
        r.special.to_string(),
        directrix_cell(r),
    ]
}

pub fn csv(reports: &[ScrollReport]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for r in reports {
        out.push_str(&cells(r).join(","));
        out.push('\n');
    }
    out
}

pub fn markdown(reports: &[ScrollReport]) -> String {
    let mut out = format!("| {} |\n|", COLUMNS.join(" | "));
    out.push_str(&"---|".repeat(COLUMNS.len()));
    out.push('\n');
    for r in reports {
        let _ = writeln!(out, "| {} |", cells(r).join(" | "));
    }
    out
}
