//! Grothendieck-ring arithmetic of the abelian envelope at integer `t`:
//! basis changes between simples and standards and tensor structure
//! constants expressed through reduced Kronecker coefficients.

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{dagger, Basis, KElement};
use crate::caps::Caps;
use crate::characters::{decompose, reduced_kronecker, ClassFunction};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `[M_λ] = [L_λ] + [L_{λ†(-1)}]`.
pub fn standard_in_simples(lambda: &Partition, t: usize) -> KElement {
    let mut out = KElement::unit(Basis::Simple, lambda);
    if let Some(below) = dagger(lambda, t, -1) {
        out.add_term(&below, 1);
    }
    out
}

/// `[L_λ] = Σ_j (-1)^j [M_{λ†(-j)}]`.
pub fn simple_in_standards(lambda: &Partition, t: usize) -> KElement {
    let mut out = KElement::zero(Basis::Standard);
    for (j, mu) in down_shifts(lambda, t).into_iter().enumerate() {
        out.add_term(&mu, sign(j));
    }
    out
}

/// `[λ†0, λ†(-1), ...]` until the shift leaves the block.
fn down_shifts(lambda: &Partition, t: usize) -> Vec<Partition> {
    (0i64..).map_while(|j| dagger(lambda, t, -j)).collect()
}

fn sign(j: usize) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ḡ^τ_{λ,μ}` with the size triangle rule applied first.
///
/// A constituent `τ[n]` of `λ[n] ⊗ μ[n]` has `|τ| ≤ |λ| + |μ|`, and the
/// coefficient is symmetric in its three labels, so it vanishes as soon as
/// one size exceeds the sum of the other two.
pub fn reduced_coefficient(
    lambda: &Partition,
    mu: &Partition,
    tau: &Partition,
    caps: &Caps,
) -> Result<u64> {
    let (a, b, c) = (lambda.size(), mu.size(), tau.size());
    if a > b + c || b > a + c || c > a + b {
        return Ok(0);
    }
    reduced_kronecker(lambda, mu, tau, caps)
}

/// Multiplicity of `M_τ` in a standard filtration of `M_λ ⊗ M_μ`.
pub fn tensor_standard_multiplicity(
    lambda: &Partition,
    mu: &Partition,
    tau: &Partition,
    caps: &Caps,
) -> Result<u64> {
    reduced_coefficient(tau, lambda, mu, caps)
}

/// Multiplicity of `L_τ` in `L_λ ⊗ L_μ` at integer `t`.
///
/// Equal to `c_τ + c_{τ†1}` where
/// `c_σ = Σ_{j,k ≥ 0} (-1)^{j+k} ḡ^σ_{λ†(-j), μ†(-k)}`; absent labels
/// contribute nothing.
pub fn simple_tensor_multiplicity(
    lambda: &Partition,
    mu: &Partition,
    tau: &Partition,
    t: usize,
    caps: &Caps,
) -> Result<i64> {
    let ls = down_shifts(lambda, t);
    let ms = down_shifts(mu, t);
    let c = |sigma: &Partition| -> Result<i64> {
        let mut total = 0i64;
        for (j, l) in ls.iter().enumerate() {
            for (k, m) in ms.iter().enumerate() {
                total += sign(j + k) * reduced_coefficient(sigma, l, m, caps)? as i64;
            }
        }
        Ok(total)
    };
    let mut total = c(tau)?;
    if let Some(up) = dagger(tau, t, 1) {
        total += c(&up)?;
    }
    Ok(total)
}

/// All `τ` that can occur in `M_λ ⊗ M_μ` or `L_λ ⊗ L_μ`.
pub fn tensor_support(lambda: &Partition, mu: &Partition) -> Vec<Partition> {
    Partition::all_up_to(lambda.size() + mu.size())
}

/// `[M_λ ⊗ M_μ]` in the standard basis.
pub fn tensor_in_standards(lambda: &Partition, mu: &Partition, caps: &Caps) -> Result<KElement> {
    let values = tensor_support(lambda, mu)
        .into_par_iter()
        .map(|tau| {
            let v = tensor_standard_multiplicity(lambda, mu, &tau, caps)?;
            Ok((tau, v as i64))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KElement::from_terms(Basis::Standard, values))
}

/// `[L_λ ⊗ L_μ]` in the simple basis at integer `t`.
pub fn tensor_in_simples(
    lambda: &Partition,
    mu: &Partition,
    t: usize,
    caps: &Caps,
) -> Result<KElement> {
    let values = tensor_support(lambda, mu)
        .into_par_iter()
        .map(|tau| {
            let v = simple_tensor_multiplicity(lambda, mu, &tau, t, caps)?;
            Ok((tau, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KElement::from_terms(Basis::Simple, values))
}

/// A label on which the two sides of [`consistency_large_t`] disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub tau: Partition,
    pub predicted: i64,
    pub honest: i64,
}

/// Compare `L_λ ⊗ L_μ` at `t` with the decomposition of
/// `λ[t] ⊗ μ[t]` as an honest `S_t`-representation.
///
/// Requires `t ≥ 2(|λ| + |μ|)` so that every label of the support pads to
/// a partition of `t`. Returns the disagreements, which also covers
/// constituents of the honest product whose label lies outside the support.
pub fn consistency_large_t(
    lambda: &Partition,
    mu: &Partition,
    t: usize,
    caps: &Caps,
) -> Result<Vec<Mismatch>> {
    let need = 2 * (lambda.size() + mu.size());
    if t < need {
        return Err(Error::PreconditionViolated(format!(
            "t = {t} is below 2(|λ|+|μ|) = {need}"
        )));
    }
    let a = ClassFunction::irreducible(&lambda.pad(t)?);
    let b = ClassFunction::irreducible(&mu.pad(t)?);
    let honest = decompose(&a.product(&b)?)?;
    let predicted = tensor_in_simples(lambda, mu, t, caps)?;

    let mut labels: Vec<Partition> = tensor_support(lambda, mu);
    for nu in honest.mult.keys() {
        let tau = nu.unpad();
        if !labels.contains(&tau) {
            labels.push(tau);
        }
    }
    let mut out = Vec::new();
    for tau in labels {
        let h = honest.get(&tau.pad(t)?);
        let p = predicted.get(&tau);
        if h != p {
            out.push(Mismatch {
                tau,
                predicted: p,
                honest: h,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::padded_kronecker;

    fn p(parts: &[usize]) -> Partition {
        Partition::of(parts)
    }

    #[test]
    fn basis_change_examples() {
        assert_eq!(
            standard_in_simples(&p(&[2]), 3),
            KElement::unit(Basis::Simple, &p(&[2]))
        );
        assert_eq!(
            standard_in_simples(&p(&[4]), 3),
            KElement::from_terms(Basis::Simple, [(p(&[4]), 1), (Partition::empty(), 1)])
        );
        assert_eq!(
            standard_in_simples(&p(&[4, 1]), 3),
            KElement::from_terms(Basis::Simple, [(p(&[4, 1]), 1), (p(&[4]), 1)])
        );
        assert_eq!(
            simple_in_standards(&p(&[4]), 3),
            KElement::from_terms(Basis::Standard, [(p(&[4]), 1), (Partition::empty(), -1)])
        );
        assert_eq!(
            simple_in_standards(&Partition::empty(), 3),
            KElement::unit(Basis::Standard, &Partition::empty())
        );
    }

    #[test]
    fn basis_change_round_trip() {
        for t in 0..=8 {
            for lambda in Partition::all_up_to(6) {
                let back = simple_in_standards(&lambda, t)
                    .map_linear(Basis::Simple, |m| standard_in_simples(m, t));
                assert_eq!(
                    back,
                    KElement::unit(Basis::Simple, &lambda),
                    "{lambda} t={t}"
                );
            }
        }
    }

    #[test]
    fn standard_tensor_examples() {
        let caps = Caps::default();
        let one = p(&[1]);
        let e = Partition::empty();
        for lambda in Partition::all_up_to(3) {
            for tau in Partition::all_up_to(3) {
                let v = tensor_standard_multiplicity(&lambda, &e, &tau, &caps).unwrap();
                assert_eq!(v, u64::from(lambda == tau));
            }
        }
        assert_eq!(
            tensor_standard_multiplicity(&one, &one, &one, &caps).unwrap(),
            1
        );
        assert_eq!(
            tensor_standard_multiplicity(&one, &one, &e, &caps).unwrap(),
            1
        );
    }

    #[test]
    fn simple_tensor_examples() {
        let caps = Caps::default();
        let one = p(&[1]);
        let e = Partition::empty();
        assert_eq!(
            simple_tensor_multiplicity(&one, &one, &e, 3, &caps).unwrap(),
            1
        );
        assert_eq!(
            simple_tensor_multiplicity(&one, &one, &one, 3, &caps).unwrap(),
            1
        );
        // (2) and (1,1) are semisimple at t = 3
        assert_eq!(
            simple_tensor_multiplicity(&p(&[2]), &p(&[1, 1]), &p(&[2, 1]), 3, &caps).unwrap(),
            reduced_kronecker(&p(&[2]), &p(&[1, 1]), &p(&[2, 1]), &caps).unwrap() as i64
        );
    }

    #[test]
    fn triangle_rule_matches_padded_values() {
        // honest padded coefficients just past the size triangle are zero
        for lambda in Partition::all_up_to(2) {
            for mu in Partition::all_up_to(2) {
                for tau in Partition::all_of_size(lambda.size() + mu.size() + 1) {
                    let n0 = 2 * tau.size();
                    for n in n0..n0 + 3 {
                        assert_eq!(padded_kronecker(&lambda, &mu, &tau, n).unwrap(), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn simple_tensor_symmetric_and_nonnegative() {
        let caps = Caps::default();
        let labels = Partition::all_up_to(2);
        for t in 0..=6 {
            for l in &labels {
                for m in &labels {
                    for tau in tensor_support(l, m) {
                        let a = simple_tensor_multiplicity(l, m, &tau, t, &caps).unwrap();
                        let b = simple_tensor_multiplicity(m, l, &tau, t, &caps).unwrap();
                        assert_eq!(a, b);
                        assert!(a >= 0, "{l} ⊗ {m} at {tau}, t={t}: {a}");
                    }
                }
            }
        }
    }

    #[test]
    fn large_t_agrees_with_symmetric_group() {
        let caps = Caps::default();
        assert!(consistency_large_t(&p(&[1]), &p(&[1]), 12, &caps)
            .unwrap()
            .is_empty());
        assert!(consistency_large_t(&p(&[1]), &Partition::empty(), 8, &caps)
            .unwrap()
            .is_empty());
        assert!(consistency_large_t(&p(&[2]), &p(&[2]), 16, &caps)
            .unwrap()
            .is_empty());
        assert!(consistency_large_t(&p(&[1, 1]), &p(&[2]), 8, &caps)
            .unwrap()
            .is_empty());
        assert!(matches!(
            consistency_large_t(&p(&[2]), &p(&[2]), 7, &caps),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
