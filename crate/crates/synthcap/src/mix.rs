//! Category mix and sample-count planning.

use crate::category::Category;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Fraction of the run assigned to each category. Fractions sum to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryMix {
    pub collage: f64,
    pub image_text: f64,
    pub chart: f64,
    pub diagram: f64,
    pub code: f64,
    pub table: f64,
}

impl Default for CategoryMix {
    /// The curated-dataset proportions.
    fn default() -> Self {
        CategoryMix {
            collage: 0.423,
            image_text: 0.314,
            chart: 0.187,
            diagram: 0.034,
            code: 0.025,
            table: 0.017,
        }
    }
}

impl CategoryMix {
    pub fn fraction(&self, category: Category) -> f64 {
        match category {
            Category::Collage => self.collage,
            Category::ImageText => self.image_text,
            Category::Chart => self.chart,
            Category::Diagram => self.diagram,
            Category::Code => self.code,
            Category::Table => self.table,
        }
    }

    pub fn validate(&self) -> Result<(), MixError> {
        let mut sum = 0.0;
        for cat in Category::ALL {
            let f = self.fraction(cat);
            if !(0.0..=1.0).contains(&f) || !f.is_finite() {
                return Err(MixError::FractionOutOfRange {
                    category: cat,
                    fraction: f,
                });
            }
            sum += f;
        }
        if (sum - 1.0).abs() > 1e-9 {
            return Err(MixError::DoesNotSumToOne { sum });
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum MixError {
    #[error("mix fraction for {category} is {fraction}, expected a value in [0, 1]")]
    FractionOutOfRange { category: Category, fraction: f64 },
    #[error("mix fractions sum to {sum}, expected 1 within 1e-9")]
    DoesNotSumToOne { sum: f64 },
}

/// Split `total` samples across categories by largest-remainder rounding.
///
/// Counts sum to `total` exactly. Floor shares are assigned first; the
/// remaining samples go to the categories with the largest fractional
/// remainders (ties broken by canonical category order).
pub fn plan_mix(total: u64, mix: &CategoryMix) -> Result<BTreeMap<Category, u64>, MixError> {
    mix.validate()?;
    let mut counts = BTreeMap::new();
    let mut remainders: Vec<(Category, f64)> = Vec::with_capacity(6);
    let mut assigned = 0u64;
    for cat in Category::ALL {
        let exact = mix.fraction(cat) * total as f64;
        let floor = exact.floor() as u64;
        counts.insert(cat, floor);
        assigned += floor;
        remainders.push((cat, exact - floor as f64));
    }
    // Sort by remainder descending; Category::ALL order breaks ties because
    // the sort is stable.
    remainders.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    let mut leftover = total - assigned;
    for (cat, _) in remainders {
        if leftover == 0 {
            break;
        }
        *counts.get_mut(&cat).unwrap() += 1;
        leftover -= 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent largest-remainder implementation used as the oracle.
    fn largest_remainder_oracle(total: u64, fractions: &[(Category, f64)]) -> Vec<(Category, u64)> {
        let mut rows: Vec<(Category, u64, f64, usize)> = fractions
            .iter()
            .enumerate()
            .map(|(pos, &(c, f))| {
                let exact = f * total as f64;
                (c, exact.floor() as u64, exact - exact.floor(), pos)
            })
            .collect();
        let assigned: u64 = rows.iter().map(|r| r.1).sum();
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by(|&a, &b| {
            rows[b]
                .2
                .partial_cmp(&rows[a].2)
                .unwrap()
                .then(rows[a].3.cmp(&rows[b].3))
        });
        for &i in order.iter().take((total - assigned) as usize) {
            rows[i].1 += 1;
        }
        rows.into_iter().map(|(c, n, _, _)| (c, n)).collect()
    }

    fn default_fractions() -> Vec<(Category, f64)> {
        let mix = CategoryMix::default();
        Category::ALL.iter().map(|&c| (c, mix.fraction(c))).collect()
    }

    #[test]
    fn thousand_samples_match_oracle() {
        let got = plan_mix(1000, &CategoryMix::default()).unwrap();
        let want = largest_remainder_oracle(1000, &default_fractions());
        for (cat, n) in want {
            assert_eq!(got[&cat], n, "category {cat}");
        }
        assert_eq!(got[&Category::Collage], 423);
        assert_eq!(got[&Category::ImageText], 314);
        assert_eq!(got[&Category::Chart], 187);
        assert_eq!(got[&Category::Diagram], 34);
        assert_eq!(got[&Category::Code], 25);
        assert_eq!(got[&Category::Table], 17);
    }

    #[test]
    fn single_sample_goes_to_largest_fraction() {
        let got = plan_mix(1, &CategoryMix::default()).unwrap();
        assert_eq!(got[&Category::Collage], 1);
        assert_eq!(got.values().sum::<u64>(), 1);
    }

    #[test]
    fn dataset_scale_counts_match_published_sizes() {
        // Category sizes of the reference 118K dataset, as fractions.
        let total = 117_879u64;
        let sizes = [
            (Category::Collage, 50_000.0),
            (Category::ImageText, 37_000.0),
            (Category::Chart, 22_000.0),
            (Category::Diagram, 3_000.0),
            (Category::Code, 2_000.0),
            (Category::Table, 4_000.0),
        ];
        let sum: f64 = sizes.iter().map(|s| s.1).sum();
        let mix = CategoryMix {
            collage: sizes[0].1 / sum,
            image_text: sizes[1].1 / sum,
            chart: sizes[2].1 / sum,
            diagram: sizes[3].1 / sum,
            code: sizes[4].1 / sum,
            table: sizes[5].1 / sum,
        };
        let got = plan_mix(total, &mix).unwrap();
        let oracle_fracs: Vec<(Category, f64)> =
            sizes.iter().map(|&(c, n)| (c, n / sum)).collect();
        let want = largest_remainder_oracle(total, &oracle_fracs);
        for (cat, n) in &want {
            assert_eq!(got[cat], *n);
        }
        // Within +-1 of the published scale after rescaling 118K -> total.
        for (cat, published) in sizes {
            let scaled = published / sum * total as f64;
            assert!(
                (got[&cat] as f64 - scaled).abs() <= 1.0,
                "{cat}: {} vs {scaled}",
                got[&cat]
            );
        }
        assert_eq!(got.values().sum::<u64>(), total);
    }

    #[test]
    fn invalid_mix_is_rejected() {
        let mut mix = CategoryMix::default();
        mix.table += 0.01;
        assert!(matches!(
            plan_mix(10, &mix),
            Err(MixError::DoesNotSumToOne { .. })
        ));
    }

    proptest! {
        #[test]
        fn counts_always_sum_to_total(
            total in 1u64..1_000_000,
            raw in proptest::array::uniform6(1u32..10_000),
        ) {
            let sum: f64 = raw.iter().map(|&r| r as f64).sum();
            let mix = CategoryMix {
                collage: raw[0] as f64 / sum,
                image_text: raw[1] as f64 / sum,
                chart: raw[2] as f64 / sum,
                diagram: raw[3] as f64 / sum,
                code: raw[4] as f64 / sum,
                table: raw[5] as f64 / sum,
            };
            prop_assume!(mix.validate().is_ok());
            let counts = plan_mix(total, &mix).unwrap();
            prop_assert_eq!(counts.values().sum::<u64>(), total);
        }
    }
}
