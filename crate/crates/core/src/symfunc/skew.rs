//! Rectification classes of skew shifted tableaux. The ring membership
//! these counts hint at is conjectural; results are experimental.

use std::collections::BTreeMap;

use crate::enumerate::skew_shifted_tableaux;
use crate::error::{Error, Result};
use crate::jdt::{skew_mread, skew_mread_with_filling, skew_rect};
use crate::partition::StrictPartition;
use crate::tableau::ShiftedTableau;

/// Multiset of rectifications of the skew tableaux of `λ / μ` over
/// `1..=max_letter`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkewExpansion {
    pub classes: BTreeMap<ShiftedTableau, usize>,
    pub tableaux: usize,
}

impl SkewExpansion {
    /// Number of skew tableaux rectifying to each straight shape.
    pub fn counts_by_shape(&self) -> BTreeMap<StrictPartition, usize> {
        let mut out = BTreeMap::new();
        for (t, &c) in &self.classes {
            *out.entry(t.shape()).or_insert(0) += c;
        }
        out
    }
}

/// Enumerates the skew tableaux of `λ / μ` with entries at most
/// `max_letter` and tallies their rectifications. Each rectification is
/// recomputed with a second inner filling and must agree. Fails with
/// [`Error::Budget`] past `max_tableaux` tableaux.
pub fn skew_pschur_expand(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    max_letter: u32,
    max_tableaux: usize,
) -> Result<SkewExpansion> {
    if !lambda.contains(mu) {
        return Err(Error::Shape(format!("{mu} is not contained in {lambda}")));
    }
    let tableaux = skew_shifted_tableaux(lambda, mu, max_letter);
    if tableaux.len() > max_tableaux {
        return Err(Error::Budget {
            what: format!("skew tableaux of shape {lambda}/{mu}"),
            limit: max_tableaux,
        });
    }
    // a second inner filling: the first row of μ holds copies of 1
    let alternative = (!mu.is_empty()).then(|| {
        let rows = mu
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (0..len)
                    .map(|k| if i == 0 { 1 } else { (2 * i + k + 1) as u32 })
                    .collect()
            })
            .collect();
        ShiftedTableau::from_values(rows).expect("row-constant filling is a tableau")
    });
    let mut out = SkewExpansion {
        tableaux: tableaux.len(),
        ..Default::default()
    };
    for t in &tableaux {
        let rect = skew_rect(t);
        if let Some(alt) = &alternative {
            let other = skew_mread_with_filling(t, alt)?;
            if other != skew_mread(t) {
                return Err(Error::Internal(format!(
                    "skew reading word of {t} depends on the inner filling"
                )));
            }
        }
        *out.classes.entry(rect).or_insert(0) += 1;
    }
    Ok(out)
}
