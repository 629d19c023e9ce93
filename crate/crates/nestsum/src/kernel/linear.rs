use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{qi, Q};

/// Summation index j1, j2, ... (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexId(pub u32);

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "j{}", self.0)
    }
}

/// Interned-by-value free symbol name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub String);

impl SymbolId {
    pub fn new(s: &str) -> Self {
        SymbolId(s.to_string())
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Coefficient of `ep` inside a linear argument: `coeff * sym * ep`.
///
/// The optional symbol covers parameters like `a*ep` in hypergeometric
/// input; plain rational multiples of `ep` leave it `None`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpsCoeff {
    pub coeff: Q,
    pub sym: Option<SymbolId>,
}

/// Integer-linear combination of summation indices, the symbol `n`,
/// `ep` and an integer offset. This is the argument shape of `den`,
/// `num`, `fac`, `Gamma`, sum boundaries and exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LinearArg {
    /// Index coefficients; zero entries are never stored.
    pub idx: BTreeMap<IndexId, i64>,
    /// Coefficient of the boundary symbol `n`.
    pub n: i64,
    /// Coefficients of `ep`, grouped by optional symbolic prefactor.
    /// Zero coefficients are never stored.
    pub eps: Vec<EpsCoeff>,
    /// Constant offset.
    pub offset: i64,
}

impl LinearArg {
    pub fn constant(c: i64) -> Self {
        LinearArg {
            offset: c,
            ..Default::default()
        }
    }

    pub fn index(i: IndexId) -> Self {
        let mut idx = BTreeMap::new();
        idx.insert(i, 1);
        LinearArg {
            idx,
            ..Default::default()
        }
    }

    pub fn n_symbol() -> Self {
        LinearArg {
            n: 1,
            ..Default::default()
        }
    }

    pub fn eps(coeff: Q, sym: Option<SymbolId>) -> Self {
        let mut a = LinearArg::default();
        if !coeff.is_zero() {
            a.eps.push(EpsCoeff { coeff, sym });
        }
        a
    }

    pub fn is_zero(&self) -> bool {
        self.idx.is_empty() && self.n == 0 && self.eps.is_empty() && self.offset == 0
    }

    /// True when the argument is a plain constant.
    pub fn is_const(&self) -> bool {
        self.idx.is_empty() && self.n == 0 && self.eps.is_empty()
    }

    pub fn as_const(&self) -> Option<i64> {
        if self.is_const() {
            Some(self.offset)
        } else {
            None
        }
    }

    pub fn has_eps(&self) -> bool {
        !self.eps.is_empty()
    }

    /// The `ep`-free part of the argument.
    pub fn drop_eps(&self) -> LinearArg {
        LinearArg {
            idx: self.idx.clone(),
            n: self.n,
            eps: Vec::new(),
            offset: self.offset,
        }
    }

    /// Pure-rational eps coefficient when no symbolic prefactor is present.
    pub fn eps_rational(&self) -> Option<Q> {
        if self.eps.is_empty() {
            return Some(Q::zero());
        }
        if self.eps.len() == 1 && self.eps[0].sym.is_none() {
            return Some(self.eps[0].coeff.clone());
        }
        None
    }

    pub fn coeff_of(&self, i: IndexId) -> i64 {
        self.idx.get(&i).copied().unwrap_or(0)
    }

    pub fn contains_index(&self, i: IndexId) -> bool {
        self.idx.contains_key(&i)
    }

    pub fn depends_on_n(&self) -> bool {
        self.n != 0
    }

    fn normalize(mut self) -> Self {
        self.idx.retain(|_, v| *v != 0);
        self.eps.retain(|e| !e.coeff.is_zero());
        // merge eps entries with the same symbol
        if self.eps.len() > 1 {
            let mut merged: BTreeMap<Option<SymbolId>, Q> = BTreeMap::new();
            for e in std::mem::take(&mut self.eps) {
                *merged.entry(e.sym).or_insert_with(Q::zero) += e.coeff;
            }
            self.eps = merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(sym, coeff)| EpsCoeff { coeff, sym })
                .collect();
        }
        self
    }

    pub fn add(&self, other: &LinearArg) -> LinearArg {
        let mut out = self.clone();
        for (i, c) in &other.idx {
            *out.idx.entry(*i).or_insert(0) += c;
        }
        out.n += other.n;
        out.eps.extend(other.eps.iter().cloned());
        out.offset += other.offset;
        out.normalize()
    }

    pub fn scale(&self, k: i64) -> LinearArg {
        if k == 0 {
            return LinearArg::default();
        }
        let mut out = self.clone();
        for v in out.idx.values_mut() {
            *v *= k;
        }
        out.n *= k;
        for e in out.eps.iter_mut() {
            e.coeff *= qi(k);
        }
        out.offset *= k;
        out
    }

    pub fn neg(&self) -> LinearArg {
        self.scale(-1)
    }

    pub fn shift(&self, c: i64) -> LinearArg {
        let mut out = self.clone();
        out.offset += c;
        out
    }

    /// Replace index `i` by the linear value `v` (exact substitution).
    pub fn subst_index(&self, i: IndexId, v: &LinearArg) -> LinearArg {
        let c = self.coeff_of(i);
        if c == 0 {
            return self.clone();
        }
        let mut base = self.clone();
        base.idx.remove(&i);
        base.add(&v.scale(c))
    }

    /// Sign of the leading entry under the priority j1 > j2 > ... > n.
    /// Returns 0 when no index or `n` appears.
    pub fn leading_sign(&self) -> i64 {
        if let Some((_, c)) = self.idx.iter().next() {
            return c.signum();
        }
        if self.n != 0 {
            return self.n.signum();
        }
        0
    }

    /// The argument is "integer-like" (no eps part).
    pub fn is_integer_valued(&self) -> bool {
        self.eps.is_empty()
    }
}

impl fmt::Display for LinearArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, sign: bool, body: String| -> fmt::Result {
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            f.write_str(&body)
        };
        for (i, c) in &self.idx {
            let neg = *c < 0;
            let a = c.abs();
            let body = if a == 1 {
                format!("{i}")
            } else {
                format!("{a}*{i}")
            };
            put(f, neg, body)?;
        }
        if self.n != 0 {
            let body = if self.n.abs() == 1 {
                "n".to_string()
            } else {
                format!("{}*n", self.n.abs())
            };
            put(f, self.n < 0, body)?;
        }
        for e in &self.eps {
            let neg = e.coeff.is_negative();
            let a = e.coeff.abs();
            let mut body = String::new();
            if !a.is_one() {
                body.push_str(&format!("{a}*"));
            }
            if let Some(s) = &e.sym {
                body.push_str(&format!("{s}*"));
            }
            body.push_str("ep");
            put(f, neg, body)?;
        }
        if self.offset != 0 || first {
            put(f, self.offset < 0, format!("{}", self.offset.abs()))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subst_and_shift() {
        let j = IndexId(1);
        let a = LinearArg::index(j).shift(3); // j1+3
        let v = LinearArg::index(j).shift(-3); // j1-3
        assert_eq!(a.subst_index(j, &v), LinearArg::index(j));
    }

    #[test]
    fn display_forms() {
        let j = IndexId(1);
        let a = LinearArg::index(j).neg().shift(2);
        assert_eq!(format!("{a}"), "-j1 + 2");
        assert_eq!(format!("{}", LinearArg::constant(0)), "0");
    }

    #[test]
    fn leading_sign_priority() {
        let j1 = IndexId(1);
        let j2 = IndexId(2);
        let mut a = LinearArg::index(j1).neg();
        a.idx.insert(j2, 5);
        assert_eq!(a.leading_sign(), -1);
        let b = LinearArg {
            n: -2,
            ..Default::default()
        };
        assert_eq!(b.leading_sign(), -1);
    }
}
