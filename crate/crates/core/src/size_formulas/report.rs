use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{Method, Sizes};
use crate::cube_graphs::Budget;
use crate::error::{Error, Result};
use crate::sequences::BigNat;
use crate::Family;

/// Values of several methods over an index range and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub family: Family,
    pub n_lo: usize,
    pub n_hi: usize,
    /// Per method, one entry per `n` in range; `None` where the method is undefined.
    pub methods: BTreeMap<Method, Vec<Option<BigNat>>>,
    pub agreement: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    pub method: Method,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub value: BigNat,
    pub reference_method: Method,
    #[serde(serialize_with = "crate::decimal::serialize")]
    pub reference_value: BigNat,
}

#[derive(Serialize)]
struct MethodColumn<'a>(
    #[serde(serialize_with = "crate::decimal::serialize_opt_seq")] &'a [Option<BigNat>],
);

#[derive(Serialize)]
struct ReportJson<'a> {
    family: &'static str,
    k_or_p: usize,
    n_range: [usize; 2],
    methods: BTreeMap<&'static str, MethodColumn<'a>>,
    agreement: bool,
    first_discrepancy: &'a Option<Discrepancy>,
}

impl SizeReport {
    /// Value of `method` at `n`, if computed.
    pub fn value(&self, method: Method, n: usize) -> Option<&BigNat> {
        if n < self.n_lo || n > self.n_hi {
            return None;
        }
        self.methods.get(&method)?.get(n - self.n_lo)?.as_ref()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = ReportJson {
            family: self.family.kind(),
            k_or_p: self.family.parameter(),
            n_range: [self.n_lo, self.n_hi],
            methods: self
                .methods
                .iter()
                .map(|(m, col)| (m.name(), MethodColumn(col)))
                .collect(),
            agreement: self.agreement,
            first_discrepancy: &self.first_discrepancy,
        };
        serde_json::to_value(json).expect("report serializes")
    }
}

/// Evaluates every requested method at every `n` in `n_lo..=n_hi` and
/// reconciles them. Methods undefined at some `n` are recorded as skipped.
pub fn cross_check(
    family: Family,
    n_lo: usize,
    n_hi: usize,
    methods: &[Method],
    include_brute: bool,
    budget: Budget,
) -> Result<SizeReport> {
    family.validate()?;
    if n_lo > n_hi {
        return Err(Error::domain("n_lo", n_lo, format!("n_lo <= n_hi = {n_hi}")));
    }
    let mut selected: BTreeSet<Method> = methods.iter().copied().collect();
    if include_brute {
        selected.insert(Method::Brute);
    }

    let mut sizes = Sizes::new(family)?;
    let mut columns = BTreeMap::new();
    for &method in &selected {
        let mut column = Vec::with_capacity(n_hi - n_lo + 1);
        for n in n_lo..=n_hi {
            if !method.in_domain(family, n) {
                column.push(None);
                continue;
            }
            let value = sizes
                .evaluate(method, n, budget)
                .map_err(|e| e.at(method, n))?;
            column.push(Some(value));
        }
        columns.insert(method, column);
    }

    let first_discrepancy = find_discrepancy(n_lo, n_hi, &columns);
    Ok(SizeReport {
        family,
        n_lo,
        n_hi,
        methods: columns,
        agreement: first_discrepancy.is_none(),
        first_discrepancy,
    })
}

/// First `n` (then first method in order) whose value differs from the
/// first available value at that `n`.
fn find_discrepancy(
    n_lo: usize,
    n_hi: usize,
    columns: &BTreeMap<Method, Vec<Option<BigNat>>>,
) -> Option<Discrepancy> {
    for (offset, n) in (n_lo..=n_hi).enumerate() {
        let mut reference: Option<(Method, &BigNat)> = None;
        for (&method, column) in columns {
            let Some(value) = column[offset].as_ref() else {
                continue;
            };
            match reference {
                None => reference = Some((method, value)),
                Some((ref_method, ref_value)) if ref_value != value => {
                    return Some(Discrepancy {
                        n,
                        method,
                        value: value.clone(),
                        reference_method: ref_method,
                        reference_value: ref_value.clone(),
                    });
                }
                Some(_) => {}
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_formulas_agree_to_14() {
        let r = cross_check(Family::KOrder(3), 0, 14, &Method::FORMULAS, false, Budget::default())
            .unwrap();
        assert!(r.agreement);
        assert_eq!(r.value(Method::Linear, 14), Some(&BigNat::from(31784u32)));
        assert_eq!(r.value(Method::Linear, 2), None);
        assert_eq!(r.value(Method::Iterative, 2), Some(&BigNat::from(4u32)));
        assert!(!r.methods.contains_key(&Method::Brute));
    }

    #[test]
    fn everything_is_zero_at_n0() {
        let r = cross_check(Family::KOrder(2), 0, 0, &Method::ALL, true, Budget::default()).unwrap();
        assert!(r.agreement);
        assert_eq!(r.methods.len(), 4);
        for m in [Method::Iterative, Method::Convolution, Method::Brute] {
            assert_eq!(r.value(m, 0), Some(&BigNat::from(0u32)));
        }
    }

    #[test]
    fn p3_with_brute() {
        let r = cross_check(Family::PCube(3), 0, 18, &Method::FORMULAS, true, Budget::default())
            .unwrap();
        assert!(r.agreement, "{:?}", r.first_discrepancy);
    }

    #[test]
    fn errors_name_method_and_index() {
        let err = cross_check(Family::KOrder(2), 8, 12, &[], true, Budget(1 << 10)).unwrap_err();
        assert_eq!(
            err,
            Error::AtPoint {
                method: Method::Brute,
                n: 11,
                source: Box::new(Error::BudgetExceeded { n: 11, budget: 1 << 10 }),
            }
        );
        assert!(cross_check(Family::KOrder(2), 3, 2, &[], false, Budget::default()).is_err());
    }

    #[test]
    fn discrepancy_is_pinpointed() {
        let nat = |v: u32| Some(BigNat::from(v));
        let mut columns = BTreeMap::new();
        columns.insert(Method::Iterative, vec![nat(1), nat(2), nat(5), nat(10)]);
        columns.insert(Method::Convolution, vec![nat(1), nat(2), nat(5), nat(11)]);
        columns.insert(Method::Linear, vec![None, None, nat(6), nat(10)]);
        let d = find_discrepancy(1, 4, &columns).unwrap();
        assert_eq!((d.n, d.method, d.reference_method), (3, Method::Linear, Method::Iterative));
        assert_eq!((d.value, d.reference_value), (BigNat::from(6u32), BigNat::from(5u32)));

        columns.remove(&Method::Linear);
        let d = find_discrepancy(1, 4, &columns).unwrap();
        assert_eq!((d.n, d.method), (4, Method::Convolution));

        columns.remove(&Method::Convolution);
        assert_eq!(find_discrepancy(1, 4, &columns), None);
    }

    #[test]
    fn json_shape() {
        let r = cross_check(Family::KOrder(2), 0, 2, &Method::FORMULAS, false, Budget::default())
            .unwrap();
        let json = r.to_json();
        assert_eq!(
            json,
            serde_json::json!({
                "family": "k_order",
                "k_or_p": 2,
                "n_range": [0, 2],
                "methods": {
                    "iter": ["0", "1", "2"],
                    "conv": ["0", "1", "2"],
                    "linear": [null, null, "2"],
                },
                "agreement": true,
                "first_discrepancy": null,
            })
        );
    }
}
