//! JSON file formats: polynomials, term orders, ideal presentations and
//! coefficient tuples. Rationals are always `"num/den"` strings.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use resultant_core::groebner::{groebner_basis, is_groebner_basis, reduces_to_zero, IdealPresentation, Limits};
use resultant_core::polyring::{parse_rational, rational_to_string, Monomial, Polynomial, TermOrder, VariableId};
use resultant_core::verify::CoefficientTuple;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub m: BTreeMap<String, u32>,
}

pub type PolynomialJson = Vec<TermJson>;

pub fn polynomial_to_json(p: &Polynomial) -> PolynomialJson {
    p.terms()
        .map(|(m, c)| TermJson {
            c: rational_to_string(c),
            m: m.powers().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
        })
        .collect()
}

pub fn polynomial_from_json(terms: &PolynomialJson) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for t in terms {
        let c = parse_rational(&t.c)?;
        let mut powers = Vec::with_capacity(t.m.len());
        for (name, e) in &t.m {
            let v: VariableId = name.parse()?;
            powers.push((v, *e));
        }
        out.add_term(Monomial::from_powers(powers), c);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderJson {
    Lex(Vec<String>),
    Degrevlex(Vec<String>),
    Weighted { weights: BTreeMap<String, u64>, tiebreak: Box<OrderJson> },
    Block { first: Box<OrderJson>, second: Box<OrderJson> },
}

fn names(vars: &[VariableId]) -> Vec<String> {
    vars.iter().map(ToString::to_string).collect()
}

fn parse_names(names: &[String]) -> Result<Vec<VariableId>> {
    names.iter().map(|n| Ok(n.parse()?)).collect()
}

pub fn order_to_json(order: &TermOrder) -> OrderJson {
    match order {
        TermOrder::Lex(v) => OrderJson::Lex(names(v)),
        TermOrder::DegRevLex(v) => OrderJson::Degrevlex(names(v)),
        TermOrder::Weighted { weights, tiebreak } => OrderJson::Weighted {
            weights: weights.iter().map(|(v, w)| (v.to_string(), *w)).collect(),
            tiebreak: Box::new(order_to_json(tiebreak)),
        },
        TermOrder::Block { first, second } => {
            OrderJson::Block { first: Box::new(order_to_json(first)), second: Box::new(order_to_json(second)) }
        }
    }
}

pub fn order_from_json(o: &OrderJson) -> Result<TermOrder> {
    Ok(match o {
        OrderJson::Lex(v) => TermOrder::Lex(parse_names(v)?),
        OrderJson::Degrevlex(v) => TermOrder::DegRevLex(parse_names(v)?),
        OrderJson::Weighted { weights, tiebreak } => {
            let mut w = BTreeMap::new();
            for (name, weight) in weights {
                w.insert(name.parse::<VariableId>()?, *weight);
            }
            TermOrder::weighted(w, order_from_json(tiebreak)?)
        }
        OrderJson::Block { first, second } => TermOrder::block(order_from_json(first)?, order_from_json(second)?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Vec<String>,
    pub order: OrderJson,
    pub generators: Vec<PolynomialJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<PolynomialJson>>,
}

pub fn ideal_to_json(ideal: &IdealPresentation) -> IdealJson {
    IdealJson {
        ring: names(&ideal.order.variables()),
        order: order_to_json(&ideal.order),
        generators: ideal.generators.iter().map(polynomial_to_json).collect(),
        basis: ideal.certified_basis.as_ref().map(|b| b.iter().map(polynomial_to_json).collect()),
    }
}

/// Loads an ideal; a stored basis is rechecked within `limits`.
pub fn ideal_from_json(j: &IdealJson, limits: &Limits) -> Result<IdealPresentation> {
    let order = order_from_json(&j.order)?;
    let ring = parse_names(&j.ring)?;
    if ring != order.variables() {
        bail!("ring variables {:?} do not match the variables of the term order", j.ring);
    }
    let gens = j.generators.iter().map(polynomial_from_json).collect::<Result<Vec<_>>>()?;
    let mut ideal = IdealPresentation::new(gens, order)?;
    if let Some(b) = &j.basis {
        // a stored basis is only trusted once it passes the S-pair check and
        // spans the same ideal as the generators
        let basis = b.iter().map(polynomial_from_json).collect::<Result<Vec<_>>>()?;
        if !is_groebner_basis(&basis, &ideal.order)? {
            bail!("stored basis fails the Buchberger criterion");
        }
        for g in &ideal.generators {
            if !reduces_to_zero(g, &basis, &ideal.order)? {
                bail!("a generator lies outside the ideal of the stored basis");
            }
        }
        let (fresh, _) = groebner_basis(&ideal.generators, &ideal.order, limits, &|| false)?;
        for b in &basis {
            if !reduces_to_zero(b, &fresh, &ideal.order)? {
                bail!("a stored basis element lies outside the ideal of the generators");
            }
        }
        ideal.certified_basis = Some(basis);
    }
    Ok(ideal)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub d: usize,
    pub n: usize,
    pub values: Vec<Vec<String>>,
}

pub fn tuple_to_json(c: &CoefficientTuple) -> TupleJson {
    TupleJson {
        d: c.d(),
        n: c.n(),
        values: c.values().iter().map(|r| r.iter().map(rational_to_string).collect()).collect(),
    }
}

pub fn tuple_from_json(j: &TupleJson) -> Result<CoefficientTuple> {
    let values = j
        .values
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<resultant_core::Result<Vec<_>>>())
        .collect::<resultant_core::Result<Vec<_>>>()?;
    Ok(CoefficientTuple::new(j.d, j.n, values)?)
}

/// Parses `pairs=N,basis=N,degree=N` (any subset, any order) over `base`.
pub fn parse_limits(spec: &str, base: Limits) -> Result<Limits> {
    let mut limits = base;
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part.split_once('=').with_context(|| format!("expected key=value, got {part:?}"))?;
        match key.trim() {
            "pairs" => limits.max_pairs = value.trim().parse().with_context(|| format!("bad pairs limit {value:?}"))?,
            "basis" => limits.max_basis = value.trim().parse().with_context(|| format!("bad basis limit {value:?}"))?,
            "degree" => {
                limits.max_degree = Some(value.trim().parse().with_context(|| format!("bad degree limit {value:?}"))?)
            }
            other => bail!("unknown limit {other:?}; expected pairs, basis or degree"),
        }
    }
    Ok(limits)
}
