//! Elements of the Hecke–Clifford superalgebra in `c^eps T_w` normal form.

use std::fmt;

use qcoeff::ZLaurent;
use qcombinat::Permutation;

use crate::space::{perm_rank, q, q_minus_one, space, HcSpace};
use crate::HcError;

/// A normal-form basis word `c_1^{eps_1} ... c_r^{eps_r} T_w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HcBasisWord {
    /// Bit `i-1` set means `c_i` is present.
    pub eps: u32,
    pub w: Permutation,
}

impl HcBasisWord {
    pub fn parity(&self) -> u8 {
        (self.eps.count_ones() % 2) as u8
    }

    /// Indices `i` with `c_i` present, increasing.
    pub fn clifford_indices(&self) -> Vec<usize> {
        (0..32)
            .filter(|b| self.eps >> b & 1 == 1)
            .map(|b| b as usize + 1)
            .collect()
    }
}

/// An element `sum coef * c^eps T_w` of `H^c_r` with coefficients in `Z[v, v^-1]`.
/// Stored densely; the word `(eps, w)` lives at index `eps * r! + rank(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HcElement {
    r: usize,
    coeffs: Vec<ZLaurent>,
}

/// Sign and resulting bitset of `c^eps * c_m` (with `c_m^2 = -1`).
#[inline]
pub(crate) fn clifford_times(eps: u32, m: usize) -> (bool, u32) {
    let bit = 1u32 << (m - 1);
    let above = (eps >> m).count_ones();
    let mut neg = above % 2 == 1;
    if eps & bit != 0 {
        neg = !neg;
        (neg, eps & !bit)
    } else {
        (neg, eps | bit)
    }
}

impl HcElement {
    fn sp(&self) -> &'static HcSpace {
        space(self.r)
    }

    pub fn zero(r: usize) -> Self {
        let sp = space(r);
        HcElement {
            r,
            coeffs: vec![ZLaurent::zero(); sp.fact << r],
        }
    }

    pub fn one(r: usize) -> Self {
        Self::basis(r, 0, &Permutation::identity(r))
    }

    /// The basis word `c^eps T_w`.
    pub fn basis(r: usize, eps: u32, w: &Permutation) -> Self {
        Self::monomial(r, eps, w, ZLaurent::one())
    }

    pub fn monomial(r: usize, eps: u32, w: &Permutation, coef: ZLaurent) -> Self {
        let mut x = Self::zero(r);
        let idx = (eps as usize) * x.sp().fact + perm_rank(w.images0());
        x.coeffs[idx] = coef;
        x
    }

    /// `T_w`.
    pub fn t_perm(w: &Permutation) -> Self {
        Self::basis(w.r(), 0, w)
    }

    /// The generator `T_i`.
    pub fn t(r: usize, i: usize) -> Result<Self, HcError> {
        if i == 0 || i >= r {
            return Err(HcError::OutOfRange(format!("T_{i} in rank {r}")));
        }
        Ok(Self::t_perm(&Permutation::simple(r, i)))
    }

    /// The odd generator `c_i`.
    pub fn c(r: usize, i: usize) -> Result<Self, HcError> {
        if i == 0 || i > r {
            return Err(HcError::OutOfRange(format!("c_{i} in rank {r}")));
        }
        Ok(Self::basis(r, 1 << (i - 1), &Permutation::identity(r)))
    }

    pub fn scalar(r: usize, coef: ZLaurent) -> Self {
        Self::monomial(r, 0, &Permutation::identity(r), coef)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Dense coefficient vector in the fixed word order.
    pub fn coeffs(&self) -> &[ZLaurent] {
        &self.coeffs
    }

    pub fn word_at(&self, idx: usize) -> HcBasisWord {
        let sp = self.sp();
        HcBasisWord {
            eps: (idx / sp.fact) as u32,
            w: sp.perms[idx % sp.fact].clone(),
        }
    }

    pub fn coeff_of(&self, word: &HcBasisWord) -> &ZLaurent {
        &self.coeffs[word.eps as usize * self.sp().fact + perm_rank(word.w.images0())]
    }

    /// Nonzero terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (HcBasisWord, &ZLaurent)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.word_at(i), c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `Some(p)` if every word has Clifford degree of parity `p`; `None` for mixed elements.
    /// The zero element reports parity 0.
    pub fn parity(&self) -> Option<u8> {
        let fact = self.sp().fact;
        let mut p = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = ((i / fact) as u32).count_ones() as u8 % 2;
            match p {
                None => p = Some(q),
                Some(x) if x != q => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    fn check(&self, o: &Self) -> Result<(), HcError> {
        if self.r != o.r {
            Err(HcError::RankMismatch(self.r, o.r))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, HcError> {
        self.check(o)?;
        let mut x = self.clone();
        x.add_assign(o);
        Ok(x)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, HcError> {
        self.check(o)?;
        let mut x = self.clone();
        for (a, b) in x.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        Ok(x)
    }

    pub(crate) fn add_assign(&mut self, o: &Self) {
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    fn add_scaled(&mut self, o: &Self, s: &ZLaurent) {
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a += &(b * s);
            }
        }
    }

    pub fn scale(&self, s: &ZLaurent) -> Self {
        HcElement {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| if c.is_zero() { c.clone() } else { c * s })
                .collect(),
        }
    }

    /// `self * T_s`.
    pub fn right_mul_t(&self, s: usize) -> Self {
        let sp = self.sp();
        assert!(s >= 1 && s < self.r, "T_{s} outside rank {}", self.r);
        let fact = sp.fact;
        let mut out = Self::zero(self.r);
        let (qm1, qq) = (q_minus_one(), q());
        for (idx, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (e, w) = (idx / fact, idx % fact);
            let ws = e * fact + sp.times_s[w][s - 1] as usize;
            if sp.descent[w][s - 1] {
                out.coeffs[idx] += &(a * &qm1);
                out.coeffs[ws] += &(a * &qq);
            } else {
                out.coeffs[ws] += a;
            }
        }
        out
    }

    /// `self * c_i`.
    pub fn right_mul_c(&self, i: usize) -> Self {
        let sp = self.sp();
        assert!(i >= 1 && i <= self.r, "c_{i} outside rank {}", self.r);
        let fact = sp.fact;
        let mut out = Self::zero(self.r);
        for (idx, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (e, w) = (idx / fact, idx % fact);
            for t in &sp.exchange[w][i - 1] {
                let (neg, e2) = clifford_times(e as u32, t.m as usize);
                let c = a * &t.coef;
                let slot = &mut out.coeffs[e2 as usize * fact + t.u as usize];
                if neg {
                    *slot -= &c;
                } else {
                    *slot += &c;
                }
            }
        }
        out
    }

    /// `self * c^eps T_w`, generator by generator.
    pub fn right_mul_word(&self, eps: u32, w_rank: usize) -> Self {
        let sp = self.sp();
        let mut z = self.clone();
        for i in 1..=self.r {
            if eps >> (i - 1) & 1 == 1 {
                z = z.right_mul_c(i);
            }
        }
        for &s in &sp.words[w_rank] {
            z = z.right_mul_t(s);
        }
        z
    }

    pub fn mul(&self, o: &Self) -> Result<Self, HcError> {
        self.check(o)?;
        let fact = self.sp().fact;
        let mut out = Self::zero(self.r);
        for (idx, b) in o.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let z = self.right_mul_word((idx / fact) as u32, idx % fact);
            out.add_scaled(&z, b);
        }
        Ok(out)
    }

    /// The bare-text word of `(eps, w)`, e.g. `c1*c2*T[2,1]` or `1`.
    fn word_text(word: &HcBasisWord) -> String {
        let mut parts: Vec<String> = word
            .clifford_indices()
            .iter()
            .map(|i| format!("c{i}"))
            .collect();
        if word.w.length() > 0 {
            parts.push(format!("T{}", word.w));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// `hc_mul(x, y)`: the normal form of `x y`.
pub fn hc_mul(x: &HcElement, y: &HcElement) -> Result<HcElement, HcError> {
    x.mul(y)
}

impl fmt::Display for HcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(HcBasisWord, &ZLaurent)> = self.terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by(|a, b| {
            let ka = (
                a.0.eps.count_ones(),
                a.0.clifford_indices(),
                a.0.w.one_line(),
            );
            let kb = (
                b.0.eps.count_ones(),
                b.0.clifford_indices(),
                b.0.w.one_line(),
            );
            ka.cmp(&kb)
        });
        for (k, (word, c)) in terms.iter().enumerate() {
            let text = c.to_string().replace(' ', "");
            let single = c.terms().len() == 1;
            let neg = single && text.starts_with('-');
            let body = if neg { &text[1..] } else { &text[..] };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let coef = if body == "1" {
                String::new()
            } else if single {
                format!("{body}*")
            } else {
                format!("({body})*")
            };
            write!(f, "{sep}{coef}{}", Self::word_text(word))?;
        }
        Ok(())
    }
}
