//! Per-rank tables: permutation indexing and the `T_w c_i` exchange table.

use std::sync::OnceLock;

use qcoeff::ZLaurent;
use qcombinat::Permutation;

/// Largest rank with precomputed tables (the dense basis has `2^r r!` words).
pub const MAX_RANK: usize = 6;

/// One term `c_m * coef * T_u` of `T_w c_i`.
#[derive(Clone, Debug)]
pub(crate) struct ExchangeTerm {
    pub m: u8,
    pub coef: ZLaurent,
    pub u: u16,
}

pub(crate) struct HcSpace {
    pub r: usize,
    pub fact: usize,
    pub perms: Vec<Permutation>,
    /// `times_s[w][s-1]` = index of `w s_s`.
    pub times_s: Vec<Vec<u16>>,
    /// `descent[w][s-1]`: `w(s) > w(s+1)`.
    pub descent: Vec<Vec<bool>>,
    /// `exchange[w][i-1]` = `T_w c_i` written as `sum c_m coef T_u`.
    pub exchange: Vec<Vec<Vec<ExchangeTerm>>>,
    /// Reduced word of each permutation.
    pub words: Vec<Vec<usize>>,
}

/// `q - 1 = v^2 - 1`.
pub(crate) fn q_minus_one() -> ZLaurent {
    ZLaurent::from_terms([(2, 1), (0, -1)])
}

pub(crate) fn q() -> ZLaurent {
    ZLaurent::v_pow(2)
}

fn factorial(r: usize) -> usize {
    (1..=r).product()
}

/// Lexicographic rank of a permutation given 0-based images.
pub(crate) fn perm_rank(images: &[u8]) -> usize {
    let r = images.len();
    let mut rank = 0;
    for i in 0..r {
        let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
        rank += smaller * factorial(r - 1 - i);
    }
    rank
}

impl HcSpace {
    fn build(r: usize) -> Self {
        let perms = Permutation::all(r);
        let fact = perms.len();
        debug_assert!(perms
            .iter()
            .enumerate()
            .all(|(i, p)| perm_rank(p.images0()) == i));
        let times_s: Vec<Vec<u16>> = perms
            .iter()
            .map(|w| {
                (1..r)
                    .map(|s| perm_rank(w.mul_simple(s).images0()) as u16)
                    .collect()
            })
            .collect();
        let descent: Vec<Vec<bool>> = perms
            .iter()
            .map(|w| (1..r).map(|s| w.has_right_descent(s)).collect())
            .collect();
        let words = perms.iter().map(|w| w.reduced_word()).collect();
        let mut sp = HcSpace {
            r,
            fact,
            perms,
            times_s,
            descent,
            exchange: Vec::new(),
            words,
        };
        sp.exchange = sp.build_exchange();
        sp
    }

    /// Right multiplication of a single-letter sum `sum c_m coef T_u` by `T_s`.
    fn terms_times_t(&self, terms: &[ExchangeTerm], s: usize) -> Vec<ExchangeTerm> {
        let mut out: Vec<ExchangeTerm> = Vec::new();
        let mut push = |m: u8, coef: ZLaurent, u: u16| {
            if coef.is_zero() {
                return;
            }
            if let Some(t) = out.iter_mut().find(|t| t.m == m && t.u == u) {
                t.coef += &coef;
            } else {
                out.push(ExchangeTerm { m, coef, u });
            }
        };
        for t in terms {
            let us = self.times_s[t.u as usize][s - 1];
            if self.descent[t.u as usize][s - 1] {
                push(t.m, &t.coef * &q_minus_one(), t.u);
                push(t.m, &t.coef * &q(), us);
            } else {
                push(t.m, t.coef.clone(), us);
            }
        }
        out.retain(|t| !t.coef.is_zero());
        out
    }

    fn build_exchange(&self) -> Vec<Vec<Vec<ExchangeTerm>>> {
        let r = self.r;
        let mut table: Vec<Option<Vec<Vec<ExchangeTerm>>>> = vec![None; self.fact];
        // process permutations by increasing length so that w s is always ready
        let mut order: Vec<usize> = (0..self.fact).collect();
        order.sort_by_key(|&w| self.perms[w].length());
        for w in order {
            let row = if self.perms[w].length() == 0 {
                (1..=r)
                    .map(|i| {
                        vec![ExchangeTerm {
                            m: i as u8,
                            coef: ZLaurent::one(),
                            u: w as u16,
                        }]
                    })
                    .collect()
            } else {
                let s = (1..r).find(|&s| self.descent[w][s - 1]).unwrap();
                let prev = self.times_s[w][s - 1] as usize;
                let pr = table[prev].as_ref().unwrap();
                (1..=r)
                    .map(|i| {
                        if i != s && i != s + 1 {
                            self.terms_times_t(&pr[i - 1], s)
                        } else if i == s {
                            self.terms_times_t(&pr[s], s)
                        } else {
                            // T_s c_{s+1} = c_s T_s - (q-1) c_s + (q-1) c_{s+1}
                            let mut acc = self.terms_times_t(&pr[s - 1], s);
                            let qm1 = q_minus_one();
                            for t in &pr[s - 1] {
                                acc.push(ExchangeTerm {
                                    m: t.m,
                                    coef: -(&t.coef * &qm1),
                                    u: t.u,
                                });
                            }
                            for t in &pr[s] {
                                acc.push(ExchangeTerm {
                                    m: t.m,
                                    coef: &t.coef * &qm1,
                                    u: t.u,
                                });
                            }
                            merge(acc)
                        }
                    })
                    .collect()
            };
            table[w] = Some(row);
        }
        table.into_iter().map(|x| x.unwrap()).collect()
    }
}

fn merge(terms: Vec<ExchangeTerm>) -> Vec<ExchangeTerm> {
    let mut out: Vec<ExchangeTerm> = Vec::new();
    for t in terms {
        if let Some(o) = out.iter_mut().find(|o| o.m == t.m && o.u == t.u) {
            o.coef += &t.coef;
        } else {
            out.push(t);
        }
    }
    out.retain(|t| !t.coef.is_zero());
    out
}

static SPACES: [OnceLock<HcSpace>; MAX_RANK + 1] = [
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
    OnceLock::new(),
];

pub(crate) fn space(r: usize) -> &'static HcSpace {
    assert!(
        r <= MAX_RANK,
        "rank {r} exceeds the supported maximum {MAX_RANK}"
    );
    SPACES[r].get_or_init(|| HcSpace::build(r))
}
