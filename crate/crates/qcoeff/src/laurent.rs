//! Laurent polynomials in a single variable `v`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::BigRational;

use crate::coeff::Coeff;
use crate::CoeffError;

/// A Laurent polynomial `sum c_k v^k`, stored as `(k, c_k)` pairs with strictly
/// increasing exponents and no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent<C> {
    terms: Vec<(i64, C)>,
}

/// Laurent polynomials with rational coefficients.
pub type LaurentPoly = Laurent<BigRational>;

/// Laurent polynomials with (overflow-checked) integer coefficients, i.e. `Z[v, v^-1]`.
pub type ZLaurent = Laurent<i64>;

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `c * v^k`.
    pub fn monomial(k: i64, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent {
                terms: vec![(k, c)],
            }
        }
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::monomial(k, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(x: i64) -> Self {
        Self::constant(C::from_i64(x))
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(it: I) -> Self {
        let mut v: Vec<(i64, C)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, C)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1.add_assign(&c),
                _ => out.push((k, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Laurent { terms: out }
    }

    pub fn terms(&self) -> &[(i64, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Lowest exponent, `None` for zero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    /// Highest exponent, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, k: i64) -> C {
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.last().map(|t| &t.1)
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect(),
        }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i64, C)> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Laurent { terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `v -> v^m` (for `m != 0`).
    pub fn substitute_power(&self, m: i64) -> Self {
        assert!(m != 0, "substitution exponent must be nonzero");
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * m, c.clone())))
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dmin = d.min_exp()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let c = &d.terms[0].1;
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, x) in &self.terms {
                out.push((e - dmin, x.div_exact(c)?));
            }
            return Some(Laurent { terms: out });
        }
        let (q, r) = poly_div_rem(&self.shift(-self.min_exp().unwrap()), &d.shift(-dmin))?;
        if !r.is_zero() {
            return None;
        }
        Some(q.shift(self.min_exp().unwrap() - dmin))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Option<D>) -> Option<Laurent<D>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                out.push((*e, d));
            }
        }
        Some(Laurent { terms: out })
    }

    pub fn to_rational(&self) -> LaurentPoly {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.to_rational()))
                .collect(),
        }
    }

    /// Quantum integer `[m]_{v^k} = (v^{km} - v^{-km}) / (v^k - v^{-k})`; zero for `m <= 0`.
    pub fn quantum_int_base(m: i64, k: i64) -> Self {
        if m <= 0 {
            return Self::zero();
        }
        Self::from_terms((0..m).map(|i| (k * (m - 1 - 2 * i), C::one())))
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other {
                        b[j].1.neg()
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Laurent { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return Laurent {
                terms: other.terms.iter().map(|(f, d)| (e + f, c.mul(d))).collect(),
            };
        }
        if other.terms.len() == 1 {
            return other.product(self);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut acc: Vec<C> = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                acc[(e + f - lo) as usize].add_assign(&c.mul(d));
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        Laurent { terms }
    }
}

impl LaurentPoly {
    /// Converts to integer coefficients if every coefficient is an integer that fits.
    pub fn to_integer(&self) -> Option<ZLaurent> {
        self.map_coeffs(i64::from_rational)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(c) => {
                let inv = Coeff::div_exact(&<BigRational as Coeff>::one(), c).unwrap();
                self.scale(&inv)
            }
        }
    }
}

/// Polynomial long division for nonnegative-exponent inputs.
/// Returns `None` if a leading-coefficient division is not exact in the ring.
pub(crate) fn poly_div_rem<C: Coeff>(
    a: &Laurent<C>,
    d: &Laurent<C>,
) -> Option<(Laurent<C>, Laurent<C>)> {
    let dd = d.max_exp().expect("division by zero polynomial");
    let lc = d.leading_coeff().unwrap().clone();
    let mut r = a.clone();
    let mut q = Vec::new();
    while let Some(rd) = r.max_exp() {
        if rd < dd {
            break;
        }
        let c = r.leading_coeff().unwrap().div_exact(&lc)?;
        let k = rd - dd;
        r = &r - &d.shift(k).scale(&c);
        q.push((k, c));
    }
    Some((Laurent::from_terms(q), r))
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<C: Coeff> $tr<&Laurent<C>> for &Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, rhs: &Laurent<C>) -> Laurent<C> {
                $body(self, rhs)
            }
        }
        impl<C: Coeff> $tr<Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, rhs: Laurent<C>) -> Laurent<C> {
                $body(&self, &rhs)
            }
        }
        impl<C: Coeff> $tr<&Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, rhs: &Laurent<C>) -> Laurent<C> {
                $body(&self, rhs)
            }
        }
        impl<C: Coeff> $tr<Laurent<C>> for &Laurent<C> {
            type Output = Laurent<C>;
            fn $m(self, rhs: Laurent<C>) -> Laurent<C> {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Laurent<C>, b: &Laurent<C>| a
    .combine(b, false));
binop!(Sub, sub, |a: &Laurent<C>, b: &Laurent<C>| a
    .combine(b, true));
binop!(Mul, mul, |a: &Laurent<C>, b: &Laurent<C>| a.product(b));

impl<C: Coeff> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        *self = self.combine(rhs, false);
    }
}

impl<C: Coeff> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        if !rhs.is_zero() {
            *self = self.combine(rhs, true);
        }
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let (num, den) = c.abs_parts();
            let unit = num == "1" && den.is_none();
            let coeff = match den {
                Some(d) => format!("{num}/{d}"),
                None => num,
            };
            match *e {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if !unit {
                        write!(f, "{coeff}*")?;
                    }
                    if *e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> FromStr for Laurent<C> {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, CoeffError> {
        let bad = || CoeffError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms; a sign directly after '^' belongs to the exponent
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') && prev != Some('(') {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() && prev != Some('+') && prev != Some('-') {
                    return Err(bad());
                }
                if prev == Some('+') || prev == Some('-') {
                    return Err(bad());
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad());
        }
        pieces.push((neg, cur));
        let mut terms = Vec::new();
        for (neg, t) in pieces {
            let (coeff_txt, var_txt) = match t.find('v') {
                None => (t.as_str(), None),
                Some(pos) => {
                    let head = &t[..pos];
                    let head = head.strip_suffix('*').unwrap_or(head);
                    if head.ends_with('*') {
                        return Err(bad());
                    }
                    (head, Some(&t[pos + 1..]))
                }
            };
            let mut c = if coeff_txt.is_empty() {
                if var_txt.is_none() {
                    return Err(bad());
                }
                C::one()
            } else {
                C::parse(coeff_txt).ok_or_else(bad)?
            };
            if neg {
                c = c.neg();
            }
            let e = match var_txt {
                None => 0,
                Some("") => 1,
                Some(rest) => {
                    let x = rest.strip_prefix('^').ok_or_else(bad)?;
                    let x = x
                        .strip_prefix('(')
                        .and_then(|y| y.strip_suffix(')'))
                        .unwrap_or(x);
                    x.parse::<i64>().map_err(|_| bad())?
                }
            };
            terms.push((e, c));
        }
        Ok(Laurent::from_terms(terms))
    }
}
