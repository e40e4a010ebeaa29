use alloc::vec::Vec;
use core::fmt;

use super::VariableId;

/// A power product, stored as variable/exponent pairs sorted by variable.
/// Zero exponents are never stored, so the empty list is the monomial `1`.
///
/// The derived `Ord` is structural and only used for map keys; term orders
/// live in [`super::TermOrder`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    powers: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { powers: Vec::new() }
    }

    pub fn var(v: VariableId) -> Self {
        Monomial { powers: alloc::vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables add up.
    pub fn from_powers<I: IntoIterator<Item = (VariableId, u32)>>(powers: I) -> Self {
        let mut v: Vec<(VariableId, u32)> = powers.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(var, _)| var);
        let mut out: Vec<(VariableId, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == var => *acc += e,
                _ => out.push((var, e)),
            }
        }
        Monomial { powers: out }
    }

    /// Product of the given variables, counted with multiplicity.
    pub fn product<I: IntoIterator<Item = VariableId>>(vars: I) -> Self {
        Self::from_powers(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[(VariableId, u32)] {
        &self.powers
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.powers.iter().map(|&(v, _)| v)
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        match self.powers.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(idx) => self.powers[idx].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_square_free(&self) -> bool {
        self.powers.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let powers = self
            .powers
            .iter()
            .filter_map(|&(v, e)| {
                let f = other.exponent(v);
                (f > 0).then(|| (v, e.min(f)))
            })
            .collect();
        Monomial { powers }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.powers.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.powers.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let powers = self
            .powers
            .iter()
            .filter_map(|&(v, e)| {
                let rest = e - other.exponent(v);
                (rest > 0).then_some((v, rest))
            })
            .collect();
        Some(Monomial { powers })
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { powers: self.powers.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.powers, &other.powers);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push((a[i].0, f(a[i].1, 0)));
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, f(0, b[j].1)));
                j += 1;
            } else {
                out.push((a[i].0, f(a[i].1, b[j].1)));
                i += 1;
                j += 1;
            }
        }
        out.retain(|&(_, e)| e > 0);
        Monomial { powers: out }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.powers.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
