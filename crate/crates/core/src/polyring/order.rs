use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{Monomial, VariableId};
use crate::{Error, Result};

/// A monomial order over an explicit set of variables.
///
/// Rankings list variables from largest to smallest. A weighted order compares
/// weight first and falls back to `tiebreak`, which also fixes the variable
/// set. A block order compares on the variables of `first`, then on those of
/// `second`; the two variable sets must be disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Lex(Vec<VariableId>),
    DegRevLex(Vec<VariableId>),
    Weighted { weights: BTreeMap<VariableId, u64>, tiebreak: Box<TermOrder> },
    Block { first: Box<TermOrder>, second: Box<TermOrder> },
}

impl TermOrder {
    pub fn weighted(weights: BTreeMap<VariableId, u64>, tiebreak: TermOrder) -> Self {
        TermOrder::Weighted { weights, tiebreak: Box::new(tiebreak) }
    }

    pub fn block(first: TermOrder, second: TermOrder) -> Self {
        TermOrder::Block { first: Box::new(first), second: Box::new(second) }
    }

    /// Variables of the ring this order lives on, in ranking order.
    pub fn variables(&self) -> Vec<VariableId> {
        match self {
            TermOrder::Lex(r) | TermOrder::DegRevLex(r) => r.clone(),
            TermOrder::Weighted { tiebreak, .. } => tiebreak.variables(),
            TermOrder::Block { first, second } => {
                let mut v = first.variables();
                v.extend(second.variables());
                v
            }
        }
    }

    pub fn compile(&self) -> Result<CompiledOrder> {
        CompiledOrder::new(self)
    }

    /// Compares two monomials. Compiles the order on each call; use
    /// [`CompiledOrder`] in loops.
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        self.compile()?.compare(u, v)
    }
}

#[derive(Clone, Debug)]
enum Rule {
    Lex(Vec<usize>),
    DegRevLex(Vec<usize>),
    Weighted { weights: Vec<(usize, u64)>, tiebreak: Box<Rule> },
    Block(Box<Rule>, Box<Rule>),
}

impl Rule {
    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            Rule::Lex(idx) => {
                for &i in idx {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            Rule::DegRevLex(idx) => {
                let da: u64 = idx.iter().map(|&i| a[i] as u64).sum();
                let db: u64 = idx.iter().map(|&i| b[i] as u64).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &i in idx.iter().rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            Rule::Weighted { weights, tiebreak } => {
                let wa: u128 = weights.iter().map(|&(i, w)| w as u128 * a[i] as u128).sum();
                let wb: u128 = weights.iter().map(|&(i, w)| w as u128 * b[i] as u128).sum();
                wa.cmp(&wb).then_with(|| tiebreak.cmp(a, b))
            }
            Rule::Block(first, second) => first.cmp(a, b).then_with(|| second.cmp(a, b)),
        }
    }
}

/// A term order resolved to index form: monomials become dense exponent
/// vectors indexed by position in [`CompiledOrder::variables`].
#[derive(Clone, Debug)]
pub struct CompiledOrder {
    vars: Vec<VariableId>,
    rule: Rule,
}

impl CompiledOrder {
    pub fn new(order: &TermOrder) -> Result<Self> {
        let mut vars = order.variables();
        vars.sort();
        for w in vars.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidOrder(alloc::format!("variable {} is ranked twice", w[0])));
            }
        }
        let rule = build_rule(order, &vars)?;
        Ok(CompiledOrder { vars, rule })
    }

    /// Ring variables, sorted structurally. Dense exponent vectors use these positions.
    pub fn variables(&self) -> &[VariableId] {
        &self.vars
    }

    pub fn index(&self, v: VariableId) -> Option<usize> {
        self.vars.binary_search(&v).ok()
    }

    pub fn dense(&self, m: &Monomial) -> Result<Vec<u32>> {
        let mut out = alloc::vec![0u32; self.vars.len()];
        for &(v, e) in m.powers() {
            let i = self.index(v).ok_or(Error::RingMismatch(v))?;
            out[i] = e;
        }
        Ok(out)
    }

    pub fn sparse(&self, exps: &[u32]) -> Monomial {
        Monomial::from_powers(self.vars.iter().copied().zip(exps.iter().copied()))
    }

    pub fn cmp_dense(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.rule.cmp(a, b)
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        Ok(self.cmp_dense(&self.dense(u)?, &self.dense(v)?))
    }
}

fn build_rule(order: &TermOrder, vars: &[VariableId]) -> Result<Rule> {
    let index = |v: &VariableId| vars.binary_search(v).map_err(|_| Error::RingMismatch(*v));
    Ok(match order {
        TermOrder::Lex(r) => Rule::Lex(r.iter().map(index).collect::<Result<_>>()?),
        TermOrder::DegRevLex(r) => Rule::DegRevLex(r.iter().map(index).collect::<Result<_>>()?),
        TermOrder::Weighted { weights, tiebreak } => {
            let tie_vars = tiebreak.variables();
            let mut ws = Vec::with_capacity(weights.len());
            for (v, &w) in weights {
                if !tie_vars.contains(v) {
                    return Err(Error::InvalidOrder(alloc::format!(
                        "weight given for {v}, which the tiebreak order does not rank"
                    )));
                }
                if w > 0 {
                    ws.push((index(v)?, w));
                }
            }
            Rule::Weighted { weights: ws, tiebreak: Box::new(build_rule(tiebreak, vars)?) }
        }
        TermOrder::Block { first, second } => {
            Rule::Block(Box::new(build_rule(first, vars)?), Box::new(build_rule(second, vars)?))
        }
    })
}
