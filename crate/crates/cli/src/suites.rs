//! Verification sweeps behind `shpl verify`.

use shpl_core::symfunc::lr::lr_expand_plactic;
use shpl_core::symfunc::operators::{
    cauchy_mismatches, nil_tl_b_failures, shifted_plactic_relation_failures,
};
use shpl_core::symfunc::{lr_expand, pieri_expand, LrMethod};
use shpl_core::{Result, StrictPartition};

/// Outcome of one sweep: how many cases were checked and a description of
/// each failure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Nil-Temperley-Lieb relations of type B among box-adders, on shapes of
/// size at most `max_size`.
pub fn nil_tl_b(max_size: usize) -> SuiteReport {
    let failures = nil_tl_b_failures(max_size);
    SuiteReport {
        checked: StrictPartition::all_up_to_size(max_size).len(),
        failures: failures
            .iter()
            .map(|f| format!("{} != {}", f.lhs, f.rhs))
            .collect(),
    }
}

/// The shifted plactic relations as identities among box-adders.
pub fn plactic_relations(max_size: usize) -> SuiteReport {
    let failures = shifted_plactic_relation_failures(max_size);
    SuiteReport {
        checked: StrictPartition::all_up_to_size(max_size).len(),
        failures: failures
            .iter()
            .map(|f| format!("{} != {}", f.lhs, f.rhs))
            .collect(),
    }
}

/// `P_μ P_(k)` against the border strip rule, for `|μ| + k <= max_size`.
pub fn pieri(max_size: usize) -> SuiteReport {
    let mut report = SuiteReport::default();
    for mu in StrictPartition::all_up_to_size(max_size) {
        for k in 1..=max_size - mu.size() {
            let row = StrictPartition::new(vec![k]).expect("one part");
            report.checked += 1;
            let expected = pieri_expand(&mu, k);
            let actual = lr_expand(LrMethod::Rectify, &mu, &row);
            if actual != expected {
                report
                    .failures
                    .push(format!("{mu} x ({k}): {actual:?} != {expected:?}"));
            }
        }
    }
    report
}

/// All three coefficient methods and `μ ↔ ν` symmetry, for every product
/// with `|μ| + |ν| <= max_size`.
pub fn lr_agreement(max_size: usize) -> SuiteReport {
    let mut report = SuiteReport::default();
    let shapes = StrictPartition::all_up_to_size(max_size);
    for mu in &shapes {
        for nu in shapes.iter().filter(|nu| mu.size() + nu.size() <= max_size) {
            report.checked += 1;
            let plactic = lr_expand_plactic(mu, nu);
            let rectify = lr_expand(LrMethod::Rectify, mu, nu);
            let boxadd = lr_expand(LrMethod::BoxAdd, mu, nu);
            if plactic != rectify || rectify != boxadd {
                report.failures.push(format!(
                    "{mu} x {nu}: plactic {plactic:?}, rectify {rectify:?}, boxadd {boxadd:?}"
                ));
            }
            if mu < nu && rectify != lr_expand(LrMethod::Rectify, nu, mu) {
                report
                    .failures
                    .push(format!("{mu} x {nu} differs from {nu} x {mu}"));
            }
        }
    }
    report
}

/// The operator Cauchy identity with `n_ops` box-adders and `nvars`
/// variables up to `max_degree`, on every start shape of size at most
/// `n_ops + 1`.
pub fn cauchy(n_ops: usize, nvars: usize, max_degree: u32) -> Result<SuiteReport> {
    let starts = StrictPartition::all_up_to_size(n_ops + 1);
    let bound = n_ops + 1 + max_degree as usize;
    let mismatches = cauchy_mismatches(n_ops, nvars, max_degree, &starts, bound)?;
    Ok(SuiteReport {
        checked: starts.len(),
        failures: mismatches
            .iter()
            .map(|m| {
                format!(
                    "{} -> {} at x^{:?}: {} != {}",
                    m.start, m.end, m.exponents, m.lhs, m.rhs
                )
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        assert!(nil_tl_b(5).passed());
        assert!(plactic_relations(5).passed());
        assert!(pieri(5).passed());
        assert!(lr_agreement(5).passed());
        assert!(cauchy(2, 2, 3).unwrap().passed());
    }
}
