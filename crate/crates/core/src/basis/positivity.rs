//! Sign reports for S-polynomials.

use std::fmt;

use num_traits::Signed;

use crate::algebra::Rational;

use super::spoly::{SMonomial, SPolynomial, SVariableSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Positive,
    NotPositive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Positive => "POSITIVE",
            Verdict::NotPositive => "NOT-POSITIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub verdict: Verdict,
    /// Every term, in canonical order.
    pub terms: Vec<(SMonomial, Rational)>,
    /// Negative terms whose monomial is not divisible by the monomial of
    /// another negative term.
    pub offending: Vec<(SMonomial, Rational)>,
}

impl PositivityReport {
    pub fn render(&self, vars: &SVariableSet) -> String {
        let mut out = self.verdict.to_string();
        if !self.offending.is_empty() {
            let list: Vec<String> = self
                .offending
                .iter()
                .map(|(m, c)| {
                    let mono = m.render(vars);
                    if mono.is_empty() {
                        c.to_string()
                    } else {
                        format!("{c}*{mono}")
                    }
                })
                .collect();
            out.push_str(": ");
            out.push_str(&list.join(", "));
        }
        out
    }
}

pub fn positivity_report(p: &SPolynomial) -> PositivityReport {
    let terms: Vec<(SMonomial, Rational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let negative: Vec<&(SMonomial, Rational)> = terms.iter().filter(|(_, c)| c.is_negative()).collect();
    let offending = negative
        .iter()
        .filter(|(m, _)| !negative.iter().any(|(o, _)| o != m && o.divides(m)))
        .map(|t| (*t).clone())
        .collect();
    PositivityReport {
        verdict: if negative.is_empty() {
            Verdict::Positive
        } else {
            Verdict::NotPositive
        },
        terms,
        offending,
    }
}
