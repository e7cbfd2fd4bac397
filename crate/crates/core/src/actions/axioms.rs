//! Action axioms checked literally on the semidirect sum, split extensions, crossed modules.

use serde::Serialize;

use super::{ActionKind, Representation};
use crate::algebra::{classify, defect, BiAlgebra, IdentityTag, LinearMap, VarietyTag};
use crate::error::{Error, Result};
use crate::exactlin::{rank, solve, Field, Matrix, PivotRule, SVec};

/// The sum `M ⊕ P` (basis of `M` first) with
/// `(m₁,p₁)·(m₂,p₂) = (m₁·m₂ + m₁·p₂ + p₁·m₂, p₁p₂)` and likewise for the bracket.
/// `module` supplies the products inside `M`; `None` means `M` is abelian.
pub fn semidirect_sum<F: Field>(module: Option<&BiAlgebra<F>>, r: &Representation<F>) -> BiAlgebra<F> {
    let p = &r.algebra;
    let (m, n) = (r.module_dim, p.dim());
    let mut names: Vec<String> = match module {
        Some(ma) => ma.basis_names().to_vec(),
        None => (1..=m).map(|i| format!("m{i}")).collect(),
    };
    names.extend(p.basis_names().iter().cloned());
    let mut s = BiAlgebra::zero_named(p.field(), names);
    let shift = |v: &[(usize, F::Elem)]| v.iter().map(|(k, c)| (k + m, c.clone())).collect::<SVec<_>>();
    for i in 0..n {
        for j in 0..n {
            s.set_dot(m + i, m + j, shift(p.dot_basis(i, j)));
            s.set_bracket(m + i, m + j, shift(p.bracket_basis(i, j)));
        }
        for a in 0..m {
            let ea = vec![(a, p.field().one())];
            s.set_dot(m + i, a, r.act(ActionKind::DotL, i, &ea));
            s.set_dot(a, m + i, r.act(ActionKind::DotR, i, &ea));
            s.set_bracket(m + i, a, r.act(ActionKind::BrL, i, &ea));
            s.set_bracket(a, m + i, r.act(ActionKind::BrR, i, &ea));
        }
    }
    if let Some(ma) = module {
        for a in 0..m {
            for b in 0..m {
                s.set_dot(a, b, ma.dot_basis(a, b).to_vec());
                s.set_bracket(a, b, ma.bracket_basis(a, b).to_vec());
            }
        }
    }
    s
}

/// A failing action axiom: identity and the basis elements plugged in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionFailure {
    pub identity: IdentityTag,
    pub arguments: Vec<String>,
}

impl std::fmt::Display for ActionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} fails at ({})", self.identity, self.arguments.join(", "))
    }
}

/// First identity instance with arguments from both `M` and `P` that fails.
fn mixed_witness<F: Field>(variety: VarietyTag, s: &BiAlgebra<F>, m: usize) -> Option<ActionFailure> {
    let total = s.dim();
    if m == 0 || total == m {
        return None;
    }
    let basis: Vec<SVec<F::Elem>> = (0..total).map(|i| s.basis_vec(i)).collect();
    for id in variety.defining_identities() {
        let k = id.arity();
        let mut idx = vec![0usize; k];
        'tuples: loop {
            let has_m = idx.iter().any(|&i| i < m);
            let has_p = idx.iter().any(|&i| i >= m);
            if has_m && has_p {
                let args: Vec<_> = idx.iter().map(|&i| basis[i].clone()).collect();
                if !defect(s, id, &args).is_empty() {
                    let arguments = idx.iter().map(|&i| s.basis_names()[i].clone()).collect();
                    return Some(ActionFailure { identity: id, arguments });
                }
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    break 'tuples;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < total {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    None
}

/// First violated action axiom of the variety, if any.
pub fn action_witness<F: Field>(variety: VarietyTag, r: &Representation<F>) -> Option<ActionFailure> {
    mixed_witness(variety, &semidirect_sum(None, r), r.module_dim)
}

/// Whether `r` is a representation for the variety: every defining identity holds on
/// every tuple mixing elements of `M` and `P`, evaluated with `M·M = [M,M] = 0`.
pub fn check_action<F: Field>(variety: VarietyTag, r: &Representation<F>) -> bool {
    action_witness(variety, r).is_none()
}

/// Semidirect product `M ⋊ P` of a representation.
pub fn semidirect_product<F: Field>(variety: VarietyTag, r: &Representation<F>) -> Result<BiAlgebra<F>> {
    if let Some(w) = action_witness(variety, r) {
        return Err(Error::ActionAxiomsFail(w.to_string()));
    }
    Ok(semidirect_sum(None, r))
}

/// `0 → M → Q → P → 0`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionWitness<F: Field> {
    pub total: BiAlgebra<F>,
    pub injection: LinearMap<F>,
    pub projection: LinearMap<F>,
}

impl<F: Field> ExtensionWitness<F> {
    /// The split extension given by the semidirect product.
    pub fn split(variety: VarietyTag, r: &Representation<F>) -> Result<Self> {
        let total = semidirect_product(variety, r)?;
        let f = r.field();
        let (m, n) = (r.module_dim, r.algebra.dim());
        let inj = Matrix::from_triplets(f, m + n, m, (0..m).map(|a| (a, a, f.one())));
        let proj = Matrix::from_triplets(f, n, m + n, (0..n).map(|i| (i, m + i, f.one())));
        Ok(ExtensionWitness { total, injection: LinearMap::new(inj), projection: LinearMap::new(proj) })
    }

    /// Injective, surjective, and image equals kernel.
    pub fn is_exact(&self) -> bool {
        let i = &self.injection.matrix;
        let j = &self.projection.matrix;
        j.mul(i).map(|c| c.is_zero()).unwrap_or(false)
            && rank(i) == i.cols()
            && rank(j) == j.rows()
            && rank(i) + rank(j) == self.total.dim()
    }

    /// `i(M)` is an ideal with zero products.
    pub fn kernel_is_abelian_ideal(&self) -> bool {
        let q = &self.total;
        let m = self.injection.source_dim;
        let ims: Vec<_> = (0..m).map(|a| self.injection.matrix.col(a)).collect();
        let in_image = |v: &SVec<F::Elem>| solve(&self.injection.matrix, v, PivotRule::LowestIndex).is_some();
        for u in &ims {
            for w in &ims {
                if !q.dot(u, w).is_empty() || !q.bracket(u, w).is_empty() {
                    return false;
                }
            }
            for k in 0..q.dim() {
                let e = q.basis_vec(k);
                for v in [q.dot(&e, u), q.dot(u, &e), q.bracket(&e, u), q.bracket(u, &e)] {
                    if !in_image(&v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Actions of `P` on `M` induced through a section of the projection.
    pub fn induced_representation(&self, p: &BiAlgebra<F>) -> Result<Representation<F>> {
        let f = p.field();
        let m = self.injection.source_dim;
        let n = p.dim();
        let not_exact = || Error::NotExact("extension data is not exact".into());
        let section: Vec<SVec<F::Elem>> = (0..n)
            .map(|i| solve(&self.projection.matrix, &[(i, f.one())], PivotRule::LowestIndex).ok_or_else(not_exact))
            .collect::<Result<_>>()?;
        let ims: Vec<_> = (0..m).map(|a| self.injection.matrix.col(a)).collect();
        let q = &self.total;
        let pull = |v: SVec<F::Elem>| solve(&self.injection.matrix, &v, PivotRule::LowestIndex).ok_or_else(not_exact);
        let build = |op: &dyn Fn(&SVec<F::Elem>, &SVec<F::Elem>) -> SVec<F::Elem>| -> Result<Vec<Matrix<F>>> {
            section
                .iter()
                .map(|s| Ok(Matrix::from_cols(f, m, ims.iter().map(|u| pull(op(s, u))).collect::<Result<_>>()?)))
                .collect()
        };
        Representation::new(
            p.clone(),
            m,
            build(&|s, u| q.dot(s, u))?,
            build(&|s, u| q.dot(u, s))?,
            build(&|s, u| q.bracket(s, u))?,
            build(&|s, u| q.bracket(u, s))?,
        )
    }
}

/// Outcome of the crossed-module check, one flag per family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossedModuleReport {
    pub module_in_variety: bool,
    pub action_axioms: bool,
    pub homomorphism: bool,
    pub equivariance: bool,
    pub peiffer: bool,
    pub failures: Vec<String>,
}

impl CrossedModuleReport {
    pub fn holds(&self) -> bool {
        self.module_in_variety && self.action_axioms && self.homomorphism && self.equivariance && self.peiffer
    }
}

/// Crossed module `μ: M → P` where `M` carries its own products and `action` is an action of `P` on it.
pub fn check_crossed_module<F: Field>(
    variety: VarietyTag,
    mu: &LinearMap<F>,
    module: &BiAlgebra<F>,
    action: &Representation<F>,
) -> Result<CrossedModuleReport> {
    let p = &action.algebra;
    let m = module.dim();
    if mu.source_dim != m || mu.target_dim != p.dim() || action.module_dim != m {
        return Err(Error::ShapeMismatch("μ, module and action dimensions disagree".into()));
    }
    let mut failures = Vec::new();
    let module_in_variety = classify(module).contains(&variety);
    if !module_in_variety {
        failures.push(format!("M is not in {variety}"));
    }
    let s = semidirect_sum(Some(module), action);
    let action_axioms = match mixed_witness(variety, &s, m) {
        Some(w) => {
            failures.push(format!("action: {w}"));
            false
        }
        None => true,
    };
    let me: Vec<SVec<F::Elem>> = (0..m).map(|a| module.basis_vec(a)).collect();
    let mu_e: Vec<SVec<F::Elem>> = me.iter().map(|v| mu.apply(v)).collect();
    let name = |a: usize| module.basis_names()[a].clone();
    let pname = |i: usize| p.basis_names()[i].clone();

    let mut homomorphism = true;
    for a in 0..m {
        for b in 0..m {
            if mu.apply(&module.dot(&me[a], &me[b])) != p.dot(&mu_e[a], &mu_e[b])
                || mu.apply(&module.bracket(&me[a], &me[b])) != p.bracket(&mu_e[a], &mu_e[b])
            {
                homomorphism = false;
                failures.push(format!("μ not multiplicative at ({}, {})", name(a), name(b)));
            }
        }
    }

    let mut equivariance = true;
    for i in 0..p.dim() {
        let e = p.basis_vec(i);
        for a in 0..m {
            let checks = [
                (ActionKind::DotL, p.dot(&e, &mu_e[a]), "μ(p·m) = p·μ(m)"),
                (ActionKind::DotR, p.dot(&mu_e[a], &e), "μ(m·p) = μ(m)·p"),
                (ActionKind::BrL, p.bracket(&e, &mu_e[a]), "μ[p,m] = [p,μ(m)]"),
                (ActionKind::BrR, p.bracket(&mu_e[a], &e), "μ[m,p] = [μ(m),p]"),
            ];
            for (kind, rhs, label) in checks {
                if mu.apply(&action.act(kind, i, &me[a])) != rhs {
                    equivariance = false;
                    failures.push(format!("{label} fails at ({}, {})", pname(i), name(a)));
                }
            }
        }
    }

    let mut peiffer = true;
    for a in 0..m {
        for b in 0..m {
            let dot_mid = module.dot(&me[a], &me[b]);
            let dot_l = action.act_vec(ActionKind::DotL, &mu_e[a], &me[b]);
            let dot_r = action.act_vec(ActionKind::DotR, &mu_e[b], &me[a]);
            let br_mid = module.bracket(&me[a], &me[b]);
            let br_l = action.act_vec(ActionKind::BrL, &mu_e[a], &me[b]);
            let br_r = action.act_vec(ActionKind::BrR, &mu_e[b], &me[a]);
            if dot_l != dot_mid || dot_r != dot_mid {
                peiffer = false;
                failures.push(format!("μ(m)·m' = m·m' = m·μ(m') fails at ({}, {})", name(a), name(b)));
            }
            if br_l != br_mid || br_r != br_mid {
                peiffer = false;
                failures.push(format!("[μ(m),m'] = [m,m'] = [m,μ(m')] fails at ({}, {})", name(a), name(b)));
            }
        }
    }
    Ok(CrossedModuleReport { module_in_variety, action_axioms, homomorphism, equivariance, peiffer, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::commutator_bracket;
    use crate::exactlin::{Rationals, Subspace};

    fn ut<F: Field>(f: &F) -> BiAlgebra<F> {
        commutator_bracket(&BiAlgebra::from_entries(f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], &[]))
            .unwrap()
    }

    #[test]
    fn regular_and_zero_actions_are_valid() {
        let p = ut(&Rationals);
        for v in [VarietyTag::NPl, VarietyTag::NPr, VarietyTag::NPlr, VarietyTag::AWBlr] {
            assert!(check_action(v, &Representation::regular(&p)));
            assert!(check_action(v, &Representation::zero(&p, 2)));
        }
    }

    #[test]
    fn perturbed_regular_fails_with_witness() {
        let q = Rationals;
        let p = ut(&q);
        let mut r = Representation::regular(&p);
        r.dot_l[0].set(1, 1, q.from_i64(2));
        let w = action_witness(VarietyTag::NPlr, &r).expect("must fail");
        assert_eq!(w.identity, IdentityTag::Associativity);
    }

    #[test]
    fn semidirect_of_idempotent() {
        let q = Rationals;
        let p = BiAlgebra::from_entries(&q, 1, &[(0, 0, 0, 1)], &[]);
        let s = semidirect_product(VarietyTag::NPlr, &Representation::regular(&p)).unwrap();
        assert_eq!(s.dim(), 2);
        // m·e = m, e·m = m, e·e = e, m·m = 0
        assert_eq!(s.dot_basis(0, 1), &[(0, q.one())]);
        assert_eq!(s.dot_basis(1, 0), &[(0, q.one())]);
        assert_eq!(s.dot_basis(1, 1), &[(1, q.one())]);
        assert!(s.dot_basis(0, 0).is_empty());
        assert!(classify(&s).contains(&VarietyTag::NPlr));
        let w = ExtensionWitness::split(VarietyTag::NPlr, &Representation::regular(&p)).unwrap();
        assert!(w.is_exact() && w.kernel_is_abelian_ideal());
        assert_eq!(w.induced_representation(&p).unwrap(), Representation::regular(&p));
    }

    #[test]
    fn crossed_module_examples() {
        let q = Rationals;
        let p = ut(&q);
        // ideal span{E12} with the restricted products
        let ideal = Subspace::span(&q, 3, vec![vec![(1, q.one())]]);
        let action = Representation::on_ideal(&p, &ideal).unwrap();
        let m_alg = BiAlgebra::zero(&q, 1);
        let mu = LinearMap::new(Matrix::from_cols(&q, 3, vec![vec![(1, q.one())]]));
        assert!(check_crossed_module(VarietyTag::NPlr, &mu, &m_alg, &action).unwrap().holds());
        // identity with regular action
        let id = LinearMap::identity(&q, 3);
        assert!(check_crossed_module(VarietyTag::NPlr, &id, &p, &Representation::regular(&p)).unwrap().holds());
        // μ = 0, abelian M: true iff the action is a representation
        let zero_mu = LinearMap::zero(&q, 2, 3);
        let good = Representation::zero(&p, 2);
        assert!(check_crossed_module(VarietyTag::NPlr, &zero_mu, &BiAlgebra::zero(&q, 2), &good).unwrap().holds());
        let mut bad = good.clone();
        bad.dot_l[0] = Matrix::identity(&q, 2);
        bad.dot_l[2] = Matrix::identity(&q, 2);
        let rep = check_crossed_module(VarietyTag::NPlr, &zero_mu, &BiAlgebra::zero(&q, 2), &bad).unwrap();
        assert_eq!(rep.holds(), check_action(VarietyTag::NPlr, &bad));
        assert!(!rep.holds());
    }
}
