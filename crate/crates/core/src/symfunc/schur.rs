//! Schur `P`, `Q` and `s` polynomials as tableau generating functions.

use crate::enumerate::{
    semistandard_young_tableaux, shifted_fillings, shifted_tableaux,
    skew_shifted_fillings_diagonal_primes,
};
use crate::letter::PrimedLetter;
use crate::partition::{Partition, StrictPartition};

use super::poly::SparsePolynomial;

fn exponents<I: IntoIterator<Item = u32>>(values: I, nvars: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    for v in values {
        e[v as usize - 1] += 1;
    }
    e
}

/// `P_λ(x_1..x_m)`: the sum of `x^T` over shifted tableaux `T` of shape
/// `λ` with entries at most `m`.
pub fn schur_p_poly(shape: &StrictPartition, nvars: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(nvars);
    for t in shifted_tableaux(shape, nvars as u32) {
        p.add_term(exponents(t.entries().map(|(_, x)| x.value()), nvars), 1);
    }
    p
}

/// `Q_λ = 2^ℓ(λ) P_λ`.
pub fn schur_q_poly(shape: &StrictPartition, nvars: usize) -> SparsePolynomial {
    schur_p_poly(shape, nvars).scale(1 << shape.len())
}

/// `Q_λ` counted directly over fillings whose diagonal may be primed.
pub fn schur_q_poly_by_fillings(shape: &StrictPartition, nvars: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(nvars);
    for rows in shifted_fillings(shape, nvars as u32, true) {
        p.add_term(
            exponents(rows.iter().flatten().map(|x| x.value()), nvars),
            1,
        );
    }
    p
}

/// The skew Schur `Q` polynomial of `outer / inner`.
pub fn skew_schur_q_poly(
    outer: &StrictPartition,
    inner: &StrictPartition,
    nvars: usize,
) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(nvars);
    for rows in skew_shifted_fillings_diagonal_primes(outer, inner, nvars as u32) {
        let values = rows
            .iter()
            .flatten()
            .flatten()
            .map(|x: &PrimedLetter| x.value());
        p.add_term(exponents(values, nvars), 1);
    }
    p
}

/// The Schur polynomial `s_μ(x_1..x_m)`.
pub fn schur_s_poly(shape: &Partition, nvars: usize) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(nvars);
    for t in semistandard_young_tableaux(shape, nvars as u32) {
        p.add_term(exponents(t.rows().iter().flatten().copied(), nvars), 1);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn op(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn p_of_three_one_in_two_variables() {
        let p = schur_p_poly(&sp(&[3, 1]), 2);
        assert_eq!(p.to_string(), "x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3");
        assert_eq!(schur_q_poly(&sp(&[3, 1]), 2), p.scale(4));
        assert_eq!(schur_p_poly(&sp(&[1]), 1).to_string(), "x1");
        let p3 = schur_p_poly(&sp(&[3, 1]), 3);
        assert_eq!(p3.swap_vars(1, 2), p3);
        assert!(p3.is_symmetric());
    }

    #[test]
    fn q_by_fillings_agrees() {
        assert_eq!(
            schur_q_poly_by_fillings(&sp(&[2, 1]), 3),
            schur_q_poly(&sp(&[2, 1]), 3)
        );
        for k in 1..=4 {
            assert_eq!(
                schur_q_poly(&sp(&[k]), 3),
                schur_p_poly(&sp(&[k]), 3).scale(2)
            );
        }
        assert_eq!(
            skew_schur_q_poly(&sp(&[3, 1]), &StrictPartition::empty(), 2),
            schur_q_poly(&sp(&[3, 1]), 2)
        );
    }

    #[test]
    fn schur_s() {
        assert_eq!(schur_s_poly(&op(&[1]), 2).to_string(), "x1 + x2");
        assert_eq!(
            schur_s_poly(&op(&[2, 1]), 2).to_string(),
            "x1^2*x2 + x1*x2^2"
        );
        let lhs = schur_p_poly(&sp(&[3, 1]), 3);
        let rhs = [op(&[3, 1]), op(&[2, 2]), op(&[2, 1, 1])]
            .iter()
            .fold(SparsePolynomial::zero(3), |acc, mu| {
                &acc + &schur_s_poly(mu, 3)
            });
        assert_eq!(lhs, rhs);
    }
}
