//! Operand parsing and the `product` command.
//!
//! An operand is a JSON super-matrix (`{"a0": [[..]], "a1": [[..]]}`, missing parts are
//! zero), the word `identity`, or a shape descriptor such as `E 1 lambda=[0,1]`. In a
//! descriptor `lambda` is the column weight of the shape, which must equal the row weight
//! of the right factor for a nonzero product.

use qcombinat::{Composition, SuperMatrix};
use qschur::{formula_product, oracle_mul, GeneratorShape, SchurElement, SchurError};

use crate::criteria::shapes_for;
use crate::CliError;

/// Renders a shape as a descriptor that [`parse_shape`] reads back.
pub fn format_shape(s: &GeneratorShape) -> String {
    let lam = |l: &Composition| {
        format!(
            "lambda={}",
            serde_json::to_string(l).expect("compositions serialize")
        )
    };
    match s {
        GeneratorShape::D { mu } => format!("D {}", lam(mu)),
        GeneratorShape::E { h, lambda } => format!("E {h} {}", lam(lambda)),
        GeneratorShape::F { h, lambda } => format!("F {h} {}", lam(lambda)),
        GeneratorShape::DOdd { i, lambda } => format!("Dodd {i} {}", lam(lambda)),
        GeneratorShape::EOdd { h, lambda } => format!("Eodd {h} {}", lam(lambda)),
        GeneratorShape::FOdd { h, lambda } => format!("Fodd {h} {}", lam(lambda)),
        GeneratorShape::EPow { h, lambda, p } => format!("Epow {h} p={p} {}", lam(lambda)),
        GeneratorShape::FPow { h, lambda, p } => format!("Fpow {h} p={p} {}", lam(lambda)),
    }
}

/// Parses `<kind> [<row>] [p=<power>] lambda=[..]`. Kinds: `D E F Dodd Eodd Fodd Epow Fpow`
/// (case-insensitive; `Dbar`, `Ebar`, `Fbar` are accepted for the odd kinds).
pub fn parse_shape(text: &str) -> Result<GeneratorShape, CliError> {
    let bad = |m: &str| CliError::Parse(format!("shape `{text}`: {m}"));
    let mut tokens = text.split_whitespace();
    let kind = tokens
        .next()
        .ok_or_else(|| bad("empty descriptor"))?
        .to_ascii_lowercase();
    let (mut row, mut p, mut lambda) = (None, None, None);
    for tok in tokens {
        if let Some(v) = tok.strip_prefix("lambda=") {
            let parts: Vec<i32> =
                serde_json::from_str(v).map_err(|e| bad(&format!("bad lambda: {e}")))?;
            lambda = Some(Composition(parts));
        } else if let Some(v) = tok.strip_prefix("p=") {
            p = Some(
                v.parse::<i32>()
                    .map_err(|e| bad(&format!("bad power: {e}")))?,
            );
        } else {
            row = Some(
                tok.parse::<usize>()
                    .map_err(|e| bad(&format!("bad row index: {e}")))?,
            );
        }
    }
    let lambda = lambda.ok_or_else(|| bad("missing lambda=[..]"))?;
    let row = || row.ok_or_else(|| bad("missing row index"));
    let p = || p.ok_or_else(|| bad("missing p=<power>"));
    let shape = match kind.as_str() {
        "d" => GeneratorShape::D { mu: lambda },
        "e" => GeneratorShape::E { h: row()?, lambda },
        "f" => GeneratorShape::F { h: row()?, lambda },
        "dodd" | "dbar" => GeneratorShape::DOdd { i: row()?, lambda },
        "eodd" | "ebar" => GeneratorShape::EOdd { h: row()?, lambda },
        "fodd" | "fbar" => GeneratorShape::FOdd { h: row()?, lambda },
        "epow" => GeneratorShape::EPow {
            h: row()?,
            lambda,
            p: p()?,
        },
        "fpow" => GeneratorShape::FPow {
            h: row()?,
            lambda,
            p: p()?,
        },
        _ => return Err(bad("unknown kind")),
    };
    Ok(shape)
}

/// A parsed operand of `product`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operand {
    Basis(SuperMatrix),
    Identity,
}

impl Operand {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("identity") {
            Ok(Operand::Identity)
        } else if t.starts_with('{') {
            let m: SuperMatrix = serde_json::from_str(t)
                .map_err(|e| CliError::Parse(format!("matrix `{t}`: {e}")))?;
            Ok(Operand::Basis(m))
        } else {
            Ok(Operand::Basis(parse_shape(t)?.matrix()?))
        }
    }

    fn element(&self, n: usize, r: i32) -> Result<SchurElement, CliError> {
        match self {
            Operand::Identity => Ok(SchurElement::identity(n, r)),
            Operand::Basis(m) => {
                if m.n() != n || m.size() != r {
                    return Err(CliError::Shape(format!(
                        "{m} is not in M_{n}(N|N2)_{r}: n={}, size={}",
                        m.n(),
                        m.size()
                    )));
                }
                Ok(SchurElement::basis(m))
            }
        }
    }
}

/// Result of `product`: the oracle product and, if the left factor is a generator shape
/// with a closed formula, that formula's value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductOutcome {
    pub oracle: SchurElement,
    pub formula: Option<SchurElement>,
    /// The left factor matches a shape whose formula only gives the head of the product.
    pub head_only: bool,
}

impl ProductOutcome {
    pub fn matches(&self) -> bool {
        self.formula.as_ref().is_none_or(|f| *f == self.oracle)
    }

    pub fn render(&self) -> String {
        match &self.formula {
            Some(f) if *f == self.oracle => format!("{} (match: formula=oracle)", self.oracle),
            Some(f) => format!("{} (MISMATCH: formula={f})", self.oracle),
            None if self.head_only => format!("{} (closed form gives the head only)", self.oracle),
            None => self.oracle.to_string(),
        }
    }
}

/// Multiplies two operands in `Q^s_v(n, r)`.
pub fn product(
    left: &Operand,
    right: &Operand,
    n: usize,
    r: i32,
) -> Result<ProductOutcome, CliError> {
    crate::check_bounds(n, r)?;
    let (x, y) = (left.element(n, r)?, right.element(n, r)?);
    let oracle = oracle_mul(&x, &y)?;
    let (mut formula, mut head_only) = (None, false);
    if let (Operand::Basis(l), Operand::Basis(a)) = (left, right) {
        if let Some(shape) = shapes_for(a)
            .into_iter()
            .find(|s| s.matrix().is_ok_and(|m| m == *l))
        {
            match formula_product(&shape, a) {
                Ok(f) => formula = Some(f),
                Err(SchurError::HeadOnly(_)) => head_only = true,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(ProductOutcome {
        oracle,
        formula,
        head_only,
    })
}
