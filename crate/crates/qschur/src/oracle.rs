//! Products computed inside the Hecke–Clifford superalgebra.
//!
//! For `co(B) = ro(A)`, `z = T_{B*} h'_A` lies in `x_{ro(B)} H ∩ H x_{co(A)}` and is decomposed
//! in the basis `{T_{M*}}`; the super sign and the `v^{d}` rescaling then give the product
//! in the standard basis.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use hecke_clifford::{h_prime, t_astar, HcElement, MAX_RANK};
use qcoeff::linalg::{rank, solve, RatMatrix};
use qcoeff::{RatFun, ZLaurent};
use qcombinat::{partial_flag, super_matrices_ro_co, Composition, SuperMatrix};

use crate::element::SchurElement;
use crate::SchurError;

/// `Some(c^{-1})` when `c = ±v^k`.
fn unit_inverse(c: &ZLaurent) -> Option<ZLaurent> {
    match c.terms() {
        [(k, s)] if *s == 1 || *s == -1 => Some(ZLaurent::monomial(-k, *s)),
        _ => None,
    }
}

fn axpy(row: &mut [ZLaurent], f: &ZLaurent, src: &[ZLaurent]) {
    for (a, b) in row.iter_mut().zip(src) {
        if !b.is_zero() {
            *a -= &(f * b);
        }
    }
}

enum Method {
    /// Gauss–Jordan over `Z[v, v^-1]` with unit pivots: reduced row `i` equals
    /// `sum_j transform[i][j] T_{M_j}` and has the unit `pivot_inv[i]^{-1}` at column `pivot[i]`,
    /// zero at every other pivot column.
    Unit {
        pivot: Vec<usize>,
        pivot_inv: Vec<ZLaurent>,
        transform: Vec<Vec<ZLaurent>>,
    },
    /// Fallback over `Q(v)`: columns are the `T_{M_j}`.
    Rational { columns: RatMatrix },
}

/// Decomposition data for the block `x_lambda H ∩ H x_mu`.
pub struct BlockSolver {
    ms: Vec<SuperMatrix>,
    basis: Vec<Arc<HcElement>>,
    method: Method,
}

impl BlockSolver {
    fn build(lambda: &Composition, mu: &Composition) -> Result<Self, SchurError> {
        let ms = super_matrices_ro_co(lambda, mu);
        let basis: Vec<Arc<HcElement>> = ms.iter().map(t_element).collect::<Result<_, _>>()?;
        let k = ms.len();
        let mut rows: Vec<Vec<ZLaurent>> = basis.iter().map(|t| t.coeffs().to_vec()).collect();
        let mut transform: Vec<Vec<ZLaurent>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j {
                            ZLaurent::one()
                        } else {
                            ZLaurent::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut pivot = vec![usize::MAX; k];
        let mut pivot_inv = vec![ZLaurent::zero(); k];
        let mut unit_ok = true;
        for _ in 0..k {
            let found = (0..k).filter(|&i| pivot[i] == usize::MAX).find_map(|i| {
                rows[i]
                    .iter()
                    .enumerate()
                    .find_map(|(c, x)| unit_inverse(x).map(|inv| (i, c, inv)))
            });
            let Some((i, col, inv)) = found else {
                unit_ok = false;
                break;
            };
            let (prow, ptr) = (rows[i].clone(), transform[i].clone());
            for j in 0..k {
                if j == i || rows[j][col].is_zero() {
                    continue;
                }
                let f = &rows[j][col] * &inv;
                axpy(&mut rows[j], &f, &prow);
                axpy(&mut transform[j], &f, &ptr);
            }
            pivot[i] = col;
            pivot_inv[i] = inv;
        }
        if unit_ok {
            return Ok(BlockSolver {
                ms,
                basis,
                method: Method::Unit {
                    pivot,
                    pivot_inv,
                    transform,
                },
            });
        }
        let dim = basis.first().map_or(0, |t| t.dim());
        let columns: RatMatrix = (0..dim)
            .map(|w| {
                basis
                    .iter()
                    .map(|t| RatFun::from_z(&t.coeffs()[w]))
                    .collect()
            })
            .collect();
        if rank(&columns) != k {
            return Err(SchurError::Decomposition(format!(
                "T_M* for ro={lambda}, co={mu} are linearly dependent"
            )));
        }
        Ok(BlockSolver {
            ms,
            basis,
            method: Method::Rational { columns },
        })
    }

    /// Matrices indexing this block, in solver order.
    pub fn matrices(&self) -> &[SuperMatrix] {
        &self.ms
    }

    /// True when elimination succeeded with unit pivots only (hence integral inverses).
    pub fn unimodular(&self) -> bool {
        matches!(self.method, Method::Unit { .. })
    }

    /// The unique `gamma` with `z = sum gamma_M T_{M*}`.
    pub fn decompose(&self, z: &HcElement) -> Result<Vec<(SuperMatrix, ZLaurent)>, SchurError> {
        let k = self.ms.len();
        let gamma: Vec<ZLaurent> = match &self.method {
            Method::Unit {
                pivot,
                pivot_inv,
                transform,
            } => {
                let mut g = vec![ZLaurent::zero(); k];
                for i in 0..k {
                    let beta = &z.coeffs()[pivot[i]] * &pivot_inv[i];
                    if beta.is_zero() {
                        continue;
                    }
                    for (gj, u) in g.iter_mut().zip(&transform[i]) {
                        if !u.is_zero() {
                            *gj += &(&beta * u);
                        }
                    }
                }
                g
            }
            Method::Rational { columns } => {
                let b: Vec<RatFun> = z.coeffs().iter().map(RatFun::from_z).collect();
                let sol = solve(columns, &b)
                    .ok_or_else(|| SchurError::Decomposition("inconsistent system".into()))?;
                sol.iter()
                    .map(|x| {
                        x.to_z().ok_or_else(|| {
                            SchurError::Decomposition(format!("non-Laurent coefficient {x}"))
                        })
                    })
                    .collect::<Result<_, _>>()?
            }
        };
        let mut check = HcElement::zero(z.r());
        for (g, t) in gamma.iter().zip(&self.basis) {
            if !g.is_zero() {
                check = check.add(&t.scale(g))?;
            }
        }
        if &check != z {
            return Err(SchurError::Decomposition(format!(
                "{z} is not in the span of the T_M*"
            )));
        }
        Ok(self
            .ms
            .iter()
            .cloned()
            .zip(gamma)
            .filter(|(_, g)| !g.is_zero())
            .collect())
    }
}

type Cache<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

static T_CACHE: Cache<SuperMatrix, HcElement> = OnceLock::new();
static H_CACHE: Cache<SuperMatrix, HcElement> = OnceLock::new();
static SOLVERS: Cache<(Composition, Composition), BlockSolver> = OnceLock::new();
static PRODUCTS: Cache<(SuperMatrix, SuperMatrix), Vec<(SuperMatrix, ZLaurent)>> = OnceLock::new();

/// Memoized evaluation; the value is computed outside the lock so concurrent callers never block
/// on each other's work (a race only duplicates a pure computation).
fn cached<K, V, F>(cache: &'static Cache<K, V>, key: K, f: F) -> Result<Arc<V>, SchurError>
where
    K: std::hash::Hash + Eq + Clone,
    F: FnOnce() -> Result<V, SchurError>,
{
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(f()?);
    Ok(map.lock().unwrap().entry(key).or_insert(v).clone())
}

fn check_rank(a: &SuperMatrix) -> Result<(), SchurError> {
    let r = a.size();
    if r < 1 || r as usize > MAX_RANK {
        return Err(SchurError::Shape(format!(
            "{a}: r = {r} outside [1, {MAX_RANK}]"
        )));
    }
    Ok(())
}

/// `T_{A*}` (memoized).
pub fn t_element(a: &SuperMatrix) -> Result<Arc<HcElement>, SchurError> {
    check_rank(a)?;
    cached(&T_CACHE, a.clone(), || Ok(t_astar(a)?))
}

fn h_element(a: &SuperMatrix) -> Result<Arc<HcElement>, SchurError> {
    check_rank(a)?;
    cached(&H_CACHE, a.clone(), || Ok(h_prime(a)?))
}

/// The solver for the block with row weight `lambda` and column weight `mu` (memoized).
pub fn block_solver(
    lambda: &Composition,
    mu: &Composition,
) -> Result<Arc<BlockSolver>, SchurError> {
    cached(&SOLVERS, (lambda.clone(), mu.clone()), || {
        BlockSolver::build(lambda, mu)
    })
}

/// Natural-basis structure constants: `T_{B*} h'_A = sum gamma_M T_{M*}`.
pub fn natural_product(
    b: &SuperMatrix,
    a: &SuperMatrix,
) -> Result<Vec<(SuperMatrix, ZLaurent)>, SchurError> {
    check_pair(b, a)?;
    if b.co() != a.ro() {
        return Ok(Vec::new());
    }
    let z = t_element(b)?.mul(&*h_element(a)?)?;
    block_solver(&b.ro(), &a.co())?.decompose(&z)
}

fn check_pair(b: &SuperMatrix, a: &SuperMatrix) -> Result<(), SchurError> {
    if b.n() != a.n() || b.size() != a.size() {
        return Err(SchurError::Shape(format!(
            "{b} and {a} live in different algebras"
        )));
    }
    check_rank(a)
}

/// Structure constants of `[B*][A*]` in the standard basis (memoized).
pub fn product_terms(
    b: &SuperMatrix,
    a: &SuperMatrix,
) -> Result<Arc<Vec<(SuperMatrix, ZLaurent)>>, SchurError> {
    check_pair(b, a)?;
    cached(&PRODUCTS, (b.clone(), a.clone()), || {
        let sign = if a.parity() == 1 && b.parity() == 1 {
            -1
        } else {
            1
        };
        let base = partial_flag(a) + partial_flag(b);
        Ok(natural_product(b, a)?
            .into_iter()
            .map(|(m, g)| {
                let c = g.shift(partial_flag(&m) - base).scale(&sign);
                (m, c)
            })
            .collect())
    })
}

/// `[B*] [A*]` in the standard basis; zero when `co(B) != ro(A)`.
pub fn oracle_product(b: &SuperMatrix, a: &SuperMatrix) -> Result<SchurElement, SchurError> {
    let mut x = SchurElement::zero(a.n(), a.size());
    for (m, c) in product_terms(b, a)?.iter() {
        x.add_term(m.clone(), &RatFun::from_z(c));
    }
    Ok(x)
}

/// Bilinear extension of [`oracle_product`].
pub fn oracle_mul(x: &SchurElement, y: &SchurElement) -> Result<SchurElement, SchurError> {
    if x.n() != y.n() || x.r() != y.r() {
        return Err(SchurError::Shape(format!(
            "Q({}, {}) times Q({}, {})",
            x.n(),
            x.r(),
            y.n(),
            y.r()
        )));
    }
    let mut out = SchurElement::zero(x.n(), x.r());
    for (b, cb) in x.terms() {
        for (a, ca) in y.terms() {
            if b.co() != a.ro() {
                continue;
            }
            let coef = cb * ca;
            for (m, c) in product_terms(b, a)?.iter() {
                out.add_term(m.clone(), &(&coef * &RatFun::from_z(c)));
            }
        }
    }
    Ok(out)
}

/// Product of a sequence of elements, left to right; the empty product is the identity.
pub fn oracle_product_all(
    n: usize,
    r: i32,
    factors: &[SchurElement],
) -> Result<SchurElement, SchurError> {
    let mut acc = SchurElement::identity(n, r);
    for f in factors {
        acc = oracle_mul(&acc, f)?;
    }
    Ok(acc)
}
