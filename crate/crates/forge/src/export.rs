//! Exporters to Macaulay2 and Singular scripts, JSON and plain text.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use num_traits::{One, Signed};
use resultant_core::cascade::build_cascade;
use resultant_core::groebner::IdealPresentation;
use resultant_core::polyring::{Polynomial, Rational, TermOrder, VariableId};

use crate::formats::ideal_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    M2,
    Singular,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExportOptions {
    /// One letter per coefficient column (`a_i`, `b_i`, `c_i`); needs `d = 2`.
    pub alias: bool,
    /// Also emit the cascade matrices `M_1 … M_d` and a check that their
    /// maximal minors generate the exported ideal (Macaulay2 only).
    pub cascade: Option<(usize, usize)>,
}

pub fn export(ideal: &IdealPresentation, format: Format, opts: &ExportOptions) -> Result<String> {
    match format {
        Format::M2 => export_m2(ideal, opts),
        Format::Singular => export_singular(ideal),
        Format::Json => Ok(serde_json::to_string_pretty(&ideal_to_json(ideal))? + "\n"),
        Format::Text => export_text(ideal),
    }
}

/// Coefficient columns `0, 1, 2` become the letters `a, b, c`.
const ALIAS_LETTERS: [char; 3] = ['a', 'b', 'c'];

fn alias_allowed(ideal: &IdealPresentation) -> Result<()> {
    for v in ideal.order.variables() {
        match v.coeff_indices() {
            Some((i, j)) if j < ALIAS_LETTERS.len() && i <= 26 => {}
            _ => bail!("alias naming needs d = 2, n <= 26 and coefficient variables only; found {v}"),
        }
    }
    Ok(())
}

fn m2_name(v: VariableId, alias: bool) -> String {
    match (v, alias) {
        (VariableId::Coeff { i, j }, true) => format!("{}_{i}", ALIAS_LETTERS[j as usize]),
        (VariableId::Coeff { i, j }, false) => format!("a_({i},{j})"),
        (VariableId::Cofactor { i, j }, _) => format!("b_({i},{j})"),
        (VariableId::X, _) => "x".into(),
        (VariableId::Root, _) => "r".into(),
    }
}

/// Writes `p` with terms in decreasing order and factors in ranking order,
/// integers bare and other rationals as `num/den`.
fn write_poly(out: &mut String, p: &Polynomial, order: &TermOrder, name: &dyn Fn(VariableId) -> String) -> Result<()> {
    if p.is_zero() {
        out.push('0');
        return Ok(());
    }
    let compiled = order.compile()?;
    let ranking = order.variables();
    let rank = |v: VariableId| ranking.iter().position(|&r| r == v).unwrap_or(usize::MAX);
    for (idx, (m, c)) in p.sorted_terms(&compiled)?.iter().enumerate() {
        let abs = c.abs();
        out.push_str(match (idx, c.is_negative()) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let mut powers = m.powers().to_vec();
        powers.sort_by_key(|&(v, _)| rank(v));
        let factors: Vec<String> =
            powers.iter().map(|&(v, e)| if e == 1 { name(v) } else { format!("{}^{e}", name(v)) }).collect();
        if factors.is_empty() {
            out.push_str(&coefficient(&abs));
        } else if abs.is_one() {
            out.push_str(&factors.join("*"));
        } else {
            write!(out, "{}*{}", coefficient(&abs), factors.join("*"))?;
        }
    }
    Ok(())
}

fn coefficient(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Ring variables in declaration order and the Macaulay2 `MonomialOrder` value, if not the default.
fn m2_order(order: &TermOrder, name: &dyn Fn(VariableId) -> String) -> Result<Option<String>> {
    let simple = |o: &TermOrder| -> Result<(&'static str, usize)> {
        match o {
            TermOrder::Lex(v) => Ok(("Lex", v.len())),
            TermOrder::DegRevLex(v) => Ok(("GRevLex", v.len())),
            _ => bail!("nested term order cannot be exported"),
        }
    };
    Ok(match order {
        TermOrder::DegRevLex(_) => None,
        TermOrder::Lex(_) => Some("Lex".into()),
        TermOrder::Weighted { weights, tiebreak } => {
            let (tie, count) = simple(tiebreak)?;
            let w: Vec<String> =
                tiebreak.variables().iter().map(|v| weights.get(v).copied().unwrap_or(0).to_string()).collect();
            if let Some(stray) = weights.keys().find(|v| !tiebreak.variables().contains(v)) {
                bail!("weight given for {} outside the ring", name(*stray));
            }
            Some(format!("{{Weights => {{{}}}, {tie} => {count}}}", w.join(",")))
        }
        TermOrder::Block { first, second } => {
            let (a, na) = simple(first)?;
            let (b, nb) = simple(second)?;
            Some(format!("{{{a} => {na}, {b} => {nb}}}"))
        }
    })
}

fn export_m2(ideal: &IdealPresentation, opts: &ExportOptions) -> Result<String> {
    if opts.alias {
        alias_allowed(ideal)?;
    }
    let alias = opts.alias;
    let name = move |v: VariableId| m2_name(v, alias);
    let vars = ideal.order.variables();
    let mut out = String::new();
    let decl = if alias && vars.len().is_multiple_of(3) && is_alias_column_major(&vars) {
        let n = vars.len() / 3;
        ALIAS_LETTERS.iter().map(|l| format!("{l}_1..{l}_{n}")).collect::<Vec<_>>().join(",")
    } else {
        vars.iter().map(|v| name(*v)).collect::<Vec<_>>().join(",")
    };
    match m2_order(&ideal.order, &name)? {
        None => writeln!(out, "R = QQ[{decl}];")?,
        Some(o) => writeln!(out, "R = QQ[{decl}, MonomialOrder => {o}];")?,
    }
    if let Some((d, n)) = opts.cascade {
        for k in 1..=d {
            let m = build_cascade(d, n, k)?;
            writeln!(out, "M{k} = matrix {{")?;
            let rows: Vec<String> = (0..m.num_rows())
                .map(|r| {
                    let cells: Vec<String> =
                        (0..m.num_cols()).map(|c| m.variable_at(r, c).map_or_else(|| "0".into(), name)).collect();
                    format!("{{{}}}", cells.join(","))
                })
                .collect();
            writeln!(out, "{}}};", rows.join(",\n"))?;
        }
    }
    writeln!(out, "I = ideal(")?;
    for (idx, g) in ideal.generators.iter().enumerate() {
        out.push_str("  ");
        write_poly(&mut out, g, &ideal.order, &name)?;
        out.push_str(if idx + 1 < ideal.generators.len() { ",\n" } else { "\n" });
    }
    writeln!(out, ");")?;
    if let Some((d, n)) = opts.cascade {
        let minors: Vec<String> =
            (1..=d).filter(|&k| n * k >= d + k).map(|k| format!("minors({},M{k})", d + k)).collect();
        writeln!(out, "U = {};", minors.join(" + "))?;
        writeln!(out, "assert(I == U)")?;
    }
    writeln!(out, "LI = leadTerm I")?;
    Ok(out)
}

fn is_alias_column_major(vars: &[VariableId]) -> bool {
    let n = vars.len() / 3;
    vars == resultant_core::polyring::column_major_ranking(2, n).as_slice()
}

fn singular_order(order: &TermOrder) -> Result<String> {
    let simple = |o: &TermOrder| -> Result<&'static str> {
        match o {
            TermOrder::Lex(_) => Ok("lp"),
            TermOrder::DegRevLex(_) => Ok("dp"),
            _ => bail!("nested term order cannot be exported"),
        }
    };
    Ok(match order {
        TermOrder::Lex(_) | TermOrder::DegRevLex(_) => simple(order)?.into(),
        TermOrder::Weighted { weights, tiebreak } => {
            let vars = tiebreak.variables();
            let w: Vec<String> = vars.iter().map(|v| weights.get(v).copied().unwrap_or(0).to_string()).collect();
            format!("(a({}), {}({}))", w.join(","), simple(tiebreak)?, vars.len())
        }
        TermOrder::Block { first, second } => format!(
            "({}({}), {}({}))",
            simple(first)?,
            first.variables().len(),
            simple(second)?,
            second.variables().len()
        ),
    })
}

fn export_singular(ideal: &IdealPresentation) -> Result<String> {
    let name = |v: VariableId| v.to_string();
    let vars: Vec<String> = ideal.order.variables().into_iter().map(name).collect();
    let mut out = String::new();
    writeln!(out, "ring R = 0, ({}), {};", vars.join(","), singular_order(&ideal.order)?)?;
    writeln!(out, "ideal I =")?;
    if ideal.generators.is_empty() {
        out.push_str("  0");
    }
    for (idx, g) in ideal.generators.iter().enumerate() {
        out.push_str("  ");
        write_poly(&mut out, g, &ideal.order, &name)?;
        if idx + 1 < ideal.generators.len() {
            out.push_str(",\n");
        }
    }
    writeln!(out, ";")?;
    writeln!(out, "ideal LI = lead(std(I));")?;
    Ok(out)
}

fn export_text(ideal: &IdealPresentation) -> Result<String> {
    let name = |v: VariableId| v.to_string();
    let mut out = String::new();
    writeln!(out, "ring: {}", ideal.order.variables().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))?;
    writeln!(out, "generators: {}", ideal.generators.len())?;
    for g in &ideal.generators {
        write_poly(&mut out, g, &ideal.order, &name)?;
        out.push('\n');
    }
    if let Some(basis) = ideal.basis() {
        writeln!(out, "basis: {}", basis.len())?;
        for g in basis {
            write_poly(&mut out, g, &ideal.order, &name)?;
            out.push('\n');
        }
    }
    Ok(out)
}
