use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{LabeledNetwork, NetworkError, NetworkSum, Pass, Side};
use crate::hopf::{Element, HopfAlgebra};
use crate::scalars::Field;

/// One Sweedler term of a box: the star pass carries `star`, the other pass
/// carries `other` (already with the antipode applied).
struct BoxTerm<F> {
    coef: F,
    star: Element<F>,
    other: Element<F>,
}

struct Prepared<'h, F> {
    h: &'h HopfAlgebra<F>,
    index: BTreeMap<String, usize>,
    terms: Vec<Vec<BoxTerm<F>>>,
}

impl<'h, F: Field> Prepared<'h, F> {
    fn new(n: &LabeledNetwork<F>, h: &'h HopfAlgebra<F>) -> Result<Self, NetworkError> {
        n.validate()?;
        n.check_labels(h.dim())?;
        let index = n.boxes.keys().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let terms = n
            .boxes
            .values()
            .map(|a| {
                h.coproduct(a)
                    .into_iter()
                    .map(|(i, j, coef)| BoxTerm { coef, star: h.basis(i), other: h.antipode(&h.basis(j)) })
                    .collect()
            })
            .collect();
        Ok(Prepared { h, index, terms })
    }

    fn label(&self, p: &Pass, choice: &[usize]) -> &Element<F> {
        let b = self.index[&p.box_id];
        let t = &self.terms[b][choice[b]];
        match p.side {
            Side::Star => &t.star,
            Side::Other => &t.other,
        }
    }

    /// δ⁻¹φ of the loop's labels multiplied in the order opposite to the loop.
    fn loop_value(&self, lp: &[Pass], choice: &[usize]) -> F {
        let Some((last, rest)) = lp.split_last() else {
            return self.h.delta().clone();
        };
        let mut acc = self.label(last, choice).clone();
        for p in rest.iter().rev() {
            acc = self.h.mul(&acc, self.label(p, choice));
        }
        self.h.loop_trace(&acc)
    }
}

/// Reference evaluator: sums over every joint assignment of Sweedler terms.
pub fn evaluate_naive<F: Field>(n: &LabeledNetwork<F>, h: &HopfAlgebra<F>) -> Result<F, NetworkError> {
    let prep = Prepared::new(n, h)?;
    let dims: Vec<usize> = prep.terms.iter().map(Vec::len).collect();
    if dims.contains(&0) {
        return Ok(F::zero());
    }
    let total: usize = dims.iter().product();
    let value = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let mut choice = vec![0; dims.len()];
            for (b, &d) in dims.iter().enumerate().rev() {
                choice[b] = code % d;
                code /= d;
            }
            let mut v = F::one();
            for (b, &c) in choice.iter().enumerate() {
                v = v * &prep.terms[b][c].coef;
            }
            for lp in &n.loops {
                if v.is_zero() {
                    break;
                }
                v = v * &prep.loop_value(lp, &choice);
            }
            v
        })
        .reduce(F::zero, |a, b| a + b);
    Ok(value)
}

/// A dense table over a list of variables (last variable fastest).
struct Factor<F> {
    vars: Vec<usize>,
    table: Vec<F>,
}

fn table_size(vars: &[usize], dims: &[usize]) -> usize {
    vars.iter().map(|&v| dims[v]).product()
}

fn decode(mut code: usize, vars: &[usize], dims: &[usize], choice: &mut [usize]) {
    for &v in vars.iter().rev() {
        choice[v] = code % dims[v];
        code /= dims[v];
    }
}

fn encode(vars: &[usize], dims: &[usize], choice: &[usize]) -> usize {
    vars.iter().fold(0, |acc, &v| acc * dims[v] + choice[v])
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Sums `var` out of the product of `factors`.
fn eliminate<F: Field>(factors: Vec<Factor<F>>, var: usize, dims: &[usize]) -> Factor<F> {
    let all = factors.iter().fold(Vec::new(), |acc, f| union(&acc, &f.vars));
    let kept: Vec<usize> = all.iter().copied().filter(|&v| v != var).collect();
    let size = table_size(&kept, dims);
    let table = (0..size)
        .into_par_iter()
        .with_min_len(64)
        .map_init(
            || vec![0; dims.len()],
            |choice, code| {
                decode(code, &kept, dims, choice);
                let mut sum = F::zero();
                for x in 0..dims[var] {
                    choice[var] = x;
                    let mut prod = F::one();
                    for f in &factors {
                        let e = &f.table[encode(&f.vars, dims, choice)];
                        if e.is_zero() {
                            prod = F::zero();
                            break;
                        }
                        prod = prod * e;
                    }
                    if !prod.is_zero() {
                        sum += &prod;
                    }
                }
                sum
            },
        )
        .collect();
    Factor { vars: kept, table }
}

/// Evaluation as a tensor-network contraction. Box variables range over
/// Sweedler terms; every pass gets a basis-index variable for its label, and
/// each loop product is a chain of multiplication tensors closed by δ⁻¹φ.
/// Variables are eliminated greedily by smallest intermediate table. Agrees
/// exactly with [`evaluate_naive`].
pub fn evaluate<F: Field>(n: &LabeledNetwork<F>, h: &HopfAlgebra<F>) -> Result<F, NetworkError> {
    let prep = Prepared::new(n, h)?;
    let mut dims: Vec<usize> = prep.terms.iter().map(Vec::len).collect();
    if dims.contains(&0) {
        return Ok(F::zero());
    }
    let dim = h.dim();
    let mut scalar = F::one();
    let mut factors: Vec<Factor<F>> = prep
        .terms
        .iter()
        .enumerate()
        .map(|(b, ts)| Factor { vars: vec![b], table: ts.iter().map(|t| t.coef.clone()).collect() })
        .collect();
    let mult_table: Vec<F> = {
        let mut t = vec![F::zero(); dim * dim * dim];
        for a in 0..dim {
            for x in 0..dim {
                for (w, c) in h.mult_terms(a, x) {
                    t[(a * dim + x) * dim + w] = c.clone();
                }
            }
        }
        t
    };
    let closing: Vec<F> = (0..dim).map(|w| h.loop_trace(&h.basis(w))).collect();
    for lp in &n.loops {
        if lp.is_empty() {
            scalar = scalar * h.delta();
            continue;
        }
        let mut labels = Vec::with_capacity(lp.len());
        for p in lp {
            let b = prep.index[&p.box_id];
            dims.push(dim);
            let u = dims.len() - 1;
            let table = prep.terms[b]
                .iter()
                .flat_map(|t| match p.side {
                    Side::Star => t.star.coeffs.iter(),
                    Side::Other => t.other.coeffs.iter(),
                })
                .cloned()
                .collect();
            factors.push(Factor { vars: vec![b, u], table });
            labels.push(u);
        }
        let mut acc = *labels.last().expect("non-empty");
        for &x in labels.iter().rev().skip(1) {
            dims.push(dim);
            let w = dims.len() - 1;
            factors.push(Factor { vars: vec![acc, x, w], table: mult_table.clone() });
            acc = w;
        }
        factors.push(Factor { vars: vec![acc], table: closing.clone() });
    }
    let mut remaining: Vec<usize> = (0..dims.len()).collect();
    while !remaining.is_empty() {
        let (pos, _) = remaining
            .iter()
            .enumerate()
            .map(|(pos, &v)| {
                let scope = factors.iter().filter(|f| f.vars.contains(&v)).fold(Vec::new(), |a, f| union(&a, &f.vars));
                (pos, table_size(&scope, &dims))
            })
            .min_by_key(|&(_, cost)| cost)
            .expect("non-empty");
        let var = remaining.swap_remove(pos);
        let (touching, rest): (Vec<_>, Vec<_>) = factors.into_iter().partition(|f| f.vars.contains(&var));
        factors = rest;
        if !touching.is_empty() {
            factors.push(eliminate(touching, var, &dims));
        }
    }
    for f in factors {
        scalar = scalar * &f.table[0];
    }
    Ok(scalar)
}

impl<F: Field> LabeledNetwork<F> {
    pub fn evaluate(&self, h: &HopfAlgebra<F>) -> Result<F, NetworkError> {
        evaluate(self, h)
    }
}

impl<F: Field> NetworkSum<F> {
    pub fn evaluate(&self, h: &HopfAlgebra<F>) -> Result<F, NetworkError> {
        let mut total = F::zero();
        for (c, n) in &self.terms {
            if !c.is_zero() {
                total += &(c.clone() * &evaluate(n, h)?);
            }
        }
        Ok(total)
    }
}
