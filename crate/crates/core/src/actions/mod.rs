//! Representations, action axioms, derivations, crossed modules and abelian extensions.

mod axioms;
mod derivations;
mod extensions;

pub use axioms::{
    check_action, check_crossed_module, semidirect_product, semidirect_sum, action_witness,
    ActionFailure, CrossedModuleReport, ExtensionWitness,
};
pub use derivations::{derivations, inner_derivation};
pub use extensions::{enumerate_extensions, ExtensionCount, ExtensionGuard};

use serde_json::{json, Value};

use crate::algebra::BiAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, SVec, Subspace, Echelon, PivotRule};

/// One of the four action maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// `m ↦ p·m`
    DotL,
    /// `m ↦ m·p`
    DotR,
    /// `m ↦ [p,m]`
    BrL,
    /// `m ↦ [m,p]`
    BrR,
}

/// An abelian module `M` with four actions of `P`, one matrix per basis element of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<F: Field> {
    pub algebra: BiAlgebra<F>,
    pub module_dim: usize,
    pub dot_l: Vec<Matrix<F>>,
    pub dot_r: Vec<Matrix<F>>,
    pub br_l: Vec<Matrix<F>>,
    pub br_r: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(
        algebra: BiAlgebra<F>,
        module_dim: usize,
        dot_l: Vec<Matrix<F>>,
        dot_r: Vec<Matrix<F>>,
        br_l: Vec<Matrix<F>>,
        br_r: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let r = Representation { algebra, module_dim, dot_l, dot_r, br_l, br_r };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<()> {
        let n = self.algebra.dim();
        let m = self.module_dim;
        for (name, t) in [("dotL", &self.dot_l), ("dotR", &self.dot_r), ("brL", &self.br_l), ("brR", &self.br_r)] {
            if t.len() != n || t.iter().any(|x| x.rows() != m || x.cols() != m) {
                return Err(Error::ShapeMismatch(format!("`{name}` must hold {n} matrices of size {m}x{m}")));
            }
        }
        Ok(())
    }

    /// All actions zero.
    pub fn zero(p: &BiAlgebra<F>, module_dim: usize) -> Self {
        let z = vec![Matrix::zeros(p.field(), module_dim, module_dim); p.dim()];
        Representation {
            algebra: p.clone(),
            module_dim,
            dot_l: z.clone(),
            dot_r: z.clone(),
            br_l: z.clone(),
            br_r: z,
        }
    }

    /// `P` acting on itself by its products.
    pub fn regular(p: &BiAlgebra<F>) -> Self {
        let n = p.dim();
        Representation {
            algebra: p.clone(),
            module_dim: n,
            dot_l: (0..n).map(|i| p.left_dot_matrix(i)).collect(),
            dot_r: (0..n).map(|i| p.right_dot_matrix(i)).collect(),
            br_l: (0..n).map(|i| p.left_bracket_matrix(i)).collect(),
            br_r: (0..n).map(|i| p.right_bracket_matrix(i)).collect(),
        }
    }

    /// Restriction of the regular action to an ideal, in the coordinates of its basis.
    pub fn on_ideal(p: &BiAlgebra<F>, ideal: &Subspace<F>) -> Result<Self> {
        let f = p.field();
        let basis = ideal.basis().to_vec();
        let k = basis.len();
        let mut ech = Echelon::new(f, p.dim(), PivotRule::LowestIndex.order(p.dim(), None), true);
        for b in &basis {
            ech.insert(b);
        }
        let coords = |v: &SVec<F::Elem>| -> Result<SVec<F::Elem>> {
            let (coefs, residual) = ech.reduce(v);
            if !residual.is_empty() {
                return Err(Error::NotAnIdeal);
            }
            let combos = ech.combos().expect("tracking");
            let mut acc = vec![f.zero(); k];
            for (r, c) in coefs {
                for (j, x) in &combos[r] {
                    f.add_mul_assign(&mut acc[*j], &c, x);
                }
            }
            Ok(acc.into_iter().enumerate().filter(|(_, e)| !f.is_zero(e)).collect())
        };
        let build = |op: &dyn Fn(&SVec<F::Elem>, &SVec<F::Elem>) -> SVec<F::Elem>| -> Result<Vec<Matrix<F>>> {
            (0..p.dim())
                .map(|i| {
                    let e = p.basis_vec(i);
                    let cols = basis.iter().map(|b| coords(&op(&e, b))).collect::<Result<Vec<_>>>()?;
                    Ok(Matrix::from_cols(f, k, cols))
                })
                .collect()
        };
        Ok(Representation {
            algebra: p.clone(),
            module_dim: k,
            dot_l: build(&|e, b| p.dot(e, b))?,
            dot_r: build(&|e, b| p.dot(b, e))?,
            br_l: build(&|e, b| p.bracket(e, b))?,
            br_r: build(&|e, b| p.bracket(b, e))?,
        })
    }

    /// Regular action on `P/I`, in the complement coordinates used by `quotient`.
    pub fn on_quotient(p: &BiAlgebra<F>, ideal: &Subspace<F>) -> Result<Self> {
        let f = p.field();
        let n = p.dim();
        if crate::algebra::ideal_closure(p, ideal.basis()).dim() != ideal.dim() {
            return Err(Error::NotAnIdeal);
        }
        let mut ech = Echelon::new(f, n, PivotRule::LowestIndex.order(n, None), false);
        for v in ideal.basis() {
            ech.insert(v);
        }
        let mut is_pivot = vec![false; n];
        for &c in ech.pivots() {
            is_pivot[c] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let mut new_index = vec![usize::MAX; n];
        for (t, &j) in keep.iter().enumerate() {
            new_index[j] = t;
        }
        let k = keep.len();
        let project = |v: &SVec<F::Elem>| -> SVec<F::Elem> {
            ech.reduce(v).1.into_iter().map(|(j, c)| (new_index[j], c)).collect()
        };
        let build = |op: &dyn Fn(&SVec<F::Elem>, &SVec<F::Elem>) -> SVec<F::Elem>| -> Vec<Matrix<F>> {
            (0..n)
                .map(|i| {
                    let e = p.basis_vec(i);
                    let cols = keep.iter().map(|&j| project(&op(&e, &p.basis_vec(j)))).collect();
                    Matrix::from_cols(f, k, cols)
                })
                .collect()
        };
        Ok(Representation {
            algebra: p.clone(),
            module_dim: k,
            dot_l: build(&|e, b| p.dot(e, b)),
            dot_r: build(&|e, b| p.dot(b, e)),
            br_l: build(&|e, b| p.bracket(e, b)),
            br_r: build(&|e, b| p.bracket(b, e)),
        })
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn tensor(&self, kind: ActionKind) -> &[Matrix<F>] {
        match kind {
            ActionKind::DotL => &self.dot_l,
            ActionKind::DotR => &self.dot_r,
            ActionKind::BrL => &self.br_l,
            ActionKind::BrR => &self.br_r,
        }
    }

    /// Action of the basis element `e_i` on `m`.
    pub fn act(&self, kind: ActionKind, i: usize, m: &[(usize, F::Elem)]) -> SVec<F::Elem> {
        self.tensor(kind)[i].mul_vec(m)
    }

    /// Action of an arbitrary `p` on `m`.
    pub fn act_vec(&self, kind: ActionKind, p: &[(usize, F::Elem)], m: &[(usize, F::Elem)]) -> SVec<F::Elem> {
        let f = self.field();
        let mut acc: SVec<F::Elem> = Vec::new();
        for (i, c) in p {
            acc = crate::exactlin::sparse_lincomb(f, &f.one(), &acc, c, &self.act(kind, *i, m));
        }
        acc
    }

    /// Same module with every bracket action set to zero.
    pub fn without_bracket_actions(&self) -> Self {
        let z = vec![Matrix::zeros(self.field(), self.module_dim, self.module_dim); self.algebra.dim()];
        Representation { br_l: z.clone(), br_r: z, ..self.clone() }
    }

    pub fn to_json(&self) -> Value {
        let f = self.field();
        let enc = |t: &[Matrix<F>]| -> Value {
            Value::Array(
                t.iter()
                    .map(|m| {
                        Value::Array(
                            m.to_dense()
                                .iter()
                                .map(|r| Value::Array(r.iter().map(|e| f.to_json(e)).collect()))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        };
        json!({
            "module_dim": self.module_dim,
            "dotL": enc(&self.dot_l),
            "dotR": enc(&self.dot_r),
            "brL": enc(&self.br_l),
            "brR": enc(&self.br_r),
        })
    }

    /// Reads the representation file format; missing tensors are zero.
    pub fn from_json(algebra: &BiAlgebra<F>, v: &Value) -> Result<Self> {
        let f = algebra.field();
        let m = v
            .get("module_dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing integer `module_dim`".into()))? as usize;
        let n = algebra.dim();
        let dec = |key: &str| -> Result<Vec<Matrix<F>>> {
            let Some(t) = v.get(key) else {
                return Ok(vec![Matrix::zeros(f, m, m); n]);
            };
            let shape = || Error::ShapeMismatch(format!("`{key}` must hold {n} matrices of size {m}x{m}"));
            let mats = t.as_array().filter(|a| a.len() == n).ok_or_else(shape)?;
            mats.iter()
                .map(|mat| {
                    let rows = mat.as_array().filter(|r| r.len() == m).ok_or_else(shape)?;
                    let dense = rows
                        .iter()
                        .map(|row| {
                            let row = row.as_array().filter(|r| r.len() == m).ok_or_else(shape)?;
                            row.iter().map(|x| f.from_json(x)).collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(if m == 0 { Matrix::zeros(f, 0, 0) } else { Matrix::from_dense(f, &dense) })
                })
                .collect()
        };
        Representation::new(algebra.clone(), m, dec("dotL")?, dec("dotR")?, dec("brL")?, dec("brR")?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator_bracket, BiAlgebra};
    use crate::exactlin::{PrimeField, Rationals};

    fn ut<F: Field>(f: &F) -> BiAlgebra<F> {
        commutator_bracket(&BiAlgebra::from_entries(f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], &[]))
            .unwrap()
    }

    #[test]
    fn json_roundtrip() {
        let r = Representation::regular(&ut(&Rationals));
        let j = r.to_json();
        assert_eq!(Representation::from_json(&r.algebra, &j).unwrap(), r);
        let f = PrimeField::new(2).unwrap();
        let r = Representation::regular(&ut(&f));
        assert_eq!(Representation::from_json(&r.algebra, &r.to_json()).unwrap(), r);
    }

    #[test]
    fn ideal_and_quotient_modules() {
        let q = Rationals;
        let p = ut(&q);
        let i = Subspace::span(&q, 3, vec![vec![(1, q.one())]]);
        let r = Representation::on_ideal(&p, &i).unwrap();
        assert_eq!(r.module_dim, 1);
        // E11·E12 = E12
        assert_eq!(r.act(ActionKind::DotL, 0, &[(0, q.one())]), vec![(0, q.one())]);
        let s = Representation::on_quotient(&p, &i).unwrap();
        assert_eq!(s.module_dim, 2);
        assert!(check_action(crate::algebra::VarietyTag::NPlr, &r));
        assert!(check_action(crate::algebra::VarietyTag::NPlr, &s));
    }
}
