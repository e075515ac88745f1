//! Algebra-to-algebra constructions.

use thiserror::Error;

use crate::algebra::{SuperAlgebra, TableBuilder};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::module::SuperBimodule;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("the 1/2-mutation has no inverse")]
    NonInvertibleMutation,
    #[error("field mismatch")]
    FieldMismatch,
}

/// x·_λ y = λ xy + (−1)^{xy}(1−λ) yx, on structure constants.
pub fn mutate(a: &SuperAlgebra, lambda: &Scalar) -> SuperAlgebra {
    let f = a.field;
    let mu = &f.one() - lambda;
    let mut tb = TableBuilder::new(f, a.dim);
    for i in 0..a.dim {
        for j in 0..a.dim {
            for (k, s) in a.mul_basis(i, j) {
                tb.add(i, j, *k, lambda * s);
            }
            let odd = a.parity[i] & a.parity[j] == 1;
            for (k, s) in a.mul_basis(j, i) {
                let v = &mu * s;
                tb.add(i, j, *k, if odd { -v } else { v });
            }
        }
    }
    tb.build(&format!("{}^({})", a.name, lambda), a.parity.clone(), a.basis_names.clone()).unwrap()
}

/// λ⊙μ = 2λμ − λ − μ + 1
pub fn mutation_compose(l: &Scalar, m: &Scalar) -> Scalar {
    let f = l.field();
    &(&(&f.int(2) * &(l * m)) - &(l + m)) + &f.one()
}

/// The μ with λ⊙μ = 1, i.e. μ = λ/(2λ − 1).
pub fn inverse_mutation(l: &Scalar) -> Result<Scalar, ConstructionError> {
    let f = l.field();
    let d = &(&f.int(2) * l) - &f.one();
    l.div(&d).ok_or(ConstructionError::NonInvertibleMutation)
}

/// Product replaced by x∘y.
pub fn symmetrize(a: &SuperAlgebra) -> SuperAlgebra {
    let mut m = mutate(a, &a.field.half());
    m.name = format!("{}^(+)", a.name);
    m
}

pub fn opposite_algebra(a: &SuperAlgebra) -> SuperAlgebra {
    let mut m = mutate(a, &a.field.zero());
    m.name = format!("{}^op", a.name);
    m
}

/// (a⊗b)(a'⊗b') = (−1)^{a'b}(aa')⊗(bb'); basis i⊗j ↦ i·dimB + j.
pub fn graded_tensor(a: &SuperAlgebra, b: &SuperAlgebra) -> Result<SuperAlgebra, ConstructionError> {
    if a.field != b.field {
        return Err(ConstructionError::FieldMismatch);
    }
    let (n, m) = (a.dim, b.dim);
    let mut tb = TableBuilder::new(a.field, n * m);
    for i in 0..n {
        for j in 0..m {
            for k in 0..n {
                for l in 0..m {
                    let neg = a.parity[k] & b.parity[j] == 1;
                    for (p, s) in a.mul_basis(i, k) {
                        for (q, t) in b.mul_basis(j, l) {
                            let v = s * t;
                            tb.add(i * m + j, k * m + l, p * m + q, if neg { -v } else { v });
                        }
                    }
                }
            }
        }
    }
    let mut parity = Vec::with_capacity(n * m);
    let mut names = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            parity.push(a.parity[i] ^ b.parity[j]);
            names.push(format!("{}⊗{}", a.basis_names[i], b.basis_names[j]));
        }
    }
    Ok(tb.build(&format!("{}⊗{}", a.name, b.name), parity, names).unwrap())
}

/// Adjoins an even unit at index 0.
pub fn unital_hull(a: &SuperAlgebra) -> SuperAlgebra {
    let n = a.dim + 1;
    let f = a.field;
    let mut tb = TableBuilder::new(f, n);
    tb.add(0, 0, 0, f.one());
    for i in 1..n {
        tb.add(0, i, i, f.one());
        tb.add(i, 0, i, f.one());
        for j in 1..n {
            for (k, s) in a.mul_basis(i - 1, j - 1) {
                tb.add(i, j, k + 1, s.clone());
            }
        }
    }
    let mut parity = vec![0];
    parity.extend(&a.parity);
    let mut names = vec!["1".to_string()];
    names.extend(a.basis_names.iter().cloned());
    tb.build(&format!("hull({})", a.name), parity, names).unwrap()
}

/// E = A ⊕ M with M·M = 0; A occupies indices 0..dimA.
pub fn split_null_extension(a: &SuperAlgebra, m: &SuperBimodule) -> SuperAlgebra {
    assert!(*a == m.algebra, "module over a different algebra");
    let (n, k) = (a.dim, m.mdim);
    let mut tb = TableBuilder::new(a.field, n + k);
    for i in 0..n {
        for j in 0..n {
            for (p, s) in a.mul_basis(i, j) {
                tb.add(i, j, *p, s.clone());
            }
        }
        for x in 0..k {
            for y in 0..k {
                let l = m.l(i, x, y);
                if !l.is_zero() {
                    tb.add(i, n + x, n + y, l.clone());
                }
                let r = m.r(x, i, y);
                if !r.is_zero() {
                    tb.add(n + x, i, n + y, r.clone());
                }
            }
        }
    }
    let mut parity = a.parity.clone();
    parity.extend(&m.mparity);
    let mut names = a.basis_names.clone();
    names.extend(m.basis_names.iter().map(|s| format!("[{s}]")));
    tb.build(&format!("{} ⋉ {}", a.name, m.name), parity, names).unwrap()
}

/// d ↦ 1⊗d, the embedding of B into A ⊗ B through the unit of A.
pub fn unit_tensor_embedding(a: &SuperAlgebra, b: &SuperAlgebra) -> Option<Matrix> {
    let one = a.unit()?;
    let n = a.dim * b.dim;
    let rows = (0..b.dim)
        .map(|j| {
            let mut v = vec![a.field.zero(); n];
            for i in 0..a.dim {
                v[i * b.dim + j] = one[i].clone();
            }
            v
        })
        .collect();
    Some(Matrix::from_rows(a.field, n, rows))
}
