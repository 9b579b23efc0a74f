//! Output documents: an ordered list of named items, printed either as
//! `key: value` lines or as one JSON object.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use tdy_core::algebra::{Character, ClassFraction, CoeffFrac, GenusVar, LaurentPoly, QPoly, Rational};
use tdy_core::basis::{PositivityReport, Rewritten, SVariableSet, TSeries};

use crate::job::{Basis, Format};
use crate::CliError;

pub fn genus_var(b: Basis) -> GenusVar {
    match b {
        Basis::Y => GenusVar::Y,
        Basis::Delta => GenusVar::Delta,
    }
}

#[derive(Clone, Debug)]
pub enum Item {
    Text(String),
    Check(bool),
    Coeff(CoeffFrac),
    Laurent(LaurentPoly),
    Class(ClassFraction),
    Alphabet(SVariableSet),
    SForm(SVariableSet, Rewritten),
    Positivity(SVariableSet, PositivityReport),
    Series(TSeries),
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub items: Vec<(String, Item)>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, key: &str, item: Item) {
        self.items.push((key.to_string(), item));
    }

    pub fn render(&self, basis: Basis, format: Format) -> String {
        match format {
            Format::Text => self.render_text(basis),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json(basis)).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    fn render_text(&self, basis: Basis) -> String {
        let var = genus_var(basis);
        let mut out = format!("command: {}\n", self.command);
        for (key, item) in &self.items {
            let value = match item {
                Item::Text(s) => s.clone(),
                Item::Check(b) => if *b { "holds" } else { "fails" }.to_string(),
                Item::Coeff(c) => c.render(var),
                Item::Laurent(p) => p.render(var),
                Item::Class(c) => c.render(var),
                Item::Alphabet(v) => render_alphabet(v),
                Item::SForm(v, r) => r.render(v),
                Item::Positivity(v, r) => r.render(v),
                Item::Series(s) => s.render(),
            };
            out.push_str(&format!("{key}: {value}\n"));
        }
        out
    }

    pub fn to_json(&self, basis: Basis) -> Value {
        let var = genus_var(basis);
        let mut map = Map::new();
        map.insert("command".into(), json!(self.command));
        map.insert("basis".into(), serde_json::to_value(basis).expect("serializable"));
        for (key, item) in &self.items {
            let value = match item {
                Item::Text(s) => json!(s),
                Item::Check(b) => json!(b),
                Item::Coeff(c) => json!({
                    "text": c.render(var),
                    "value": CoeffDoc::new(c, basis),
                }),
                Item::Laurent(p) => json!({
                    "text": p.render(var),
                    "terms": terms_doc(p, basis),
                }),
                Item::Class(c) => serde_json::to_value(ClassDoc::new(c, basis)).expect("serializable"),
                Item::Alphabet(v) => alphabet_json(v),
                Item::SForm(v, r) => json!({
                    "alphabet": alphabet_json(v),
                    "numerator": r.numerator.render(v),
                    "denominator": r.render_denominator(v),
                    "exact": r.exact,
                }),
                Item::Positivity(v, r) => json!({
                    "verdict": r.verdict.to_string(),
                    "terms": r.terms.len(),
                    "offending": r.offending.iter().map(|(m, c)| json!({
                        "monomial": m.render(v),
                        "coeff": c.to_string(),
                    })).collect::<Vec<_>>(),
                }),
                Item::Series(s) => json!({
                    "text": s.render(),
                    "order": s.order(),
                    "terms": s.terms().map(|(e, c)| json!({
                        "exponent": e,
                        "coeff": CoeffDoc::new(c, Basis::Delta),
                    })).collect::<Vec<_>>(),
                }),
            };
            map.insert(key.clone(), value);
        }
        Value::Object(map)
    }
}

fn render_alphabet(v: &SVariableSet) -> String {
    v.names()
        .iter()
        .zip(v.weights())
        .map(|(n, w)| format!("{n}={}", w.render()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn alphabet_json(v: &SVariableSet) -> Value {
    Value::Array(
        v.names()
            .iter()
            .zip(v.weights())
            .map(|(n, w)| json!({ "name": n, "weight": w.coords() }))
            .collect(),
    )
}

fn poly_strings(p: &QPoly) -> Vec<String> {
    p.coeffs().iter().map(Rational::to_string).collect()
}

fn parse_rationals(v: &[String]) -> Result<QPoly, CliError> {
    let coeffs = v
        .iter()
        .map(|s| {
            s.parse::<Rational>()
                .map_err(|e| CliError::Schema(format!("bad rational {s:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QPoly::from_coeffs(coeffs))
}

/// A coefficient in `ℚ(y)` or `ℚ(δ)`: coefficient lists of numerator and
/// denominator in the chosen variable, lowest power first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffDoc {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl CoeffDoc {
    pub fn new(c: &CoeffFrac, basis: Basis) -> Self {
        let (num, den) = match basis {
            Basis::Delta => (c.numer().clone(), c.denom().clone()),
            Basis::Y => (c.numer().reflect(), c.denom().reflect()),
        };
        CoeffDoc {
            num: poly_strings(&num),
            den: poly_strings(&den),
        }
    }

    pub fn to_coeff(&self, basis: Basis) -> Result<CoeffFrac, CliError> {
        let (mut num, mut den) = (parse_rationals(&self.num)?, parse_rationals(&self.den)?);
        if basis == Basis::Y {
            num = num.reflect();
            den = den.reflect();
        }
        CoeffFrac::new(num, den).map_err(|e| CliError::Schema(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exponent: Vec<i64>,
    pub coeff: CoeffDoc,
}

fn terms_doc(p: &LaurentPoly, basis: Basis) -> Vec<TermDoc> {
    p.terms()
        .map(|(m, c)| TermDoc {
            exponent: m.coords().to_vec(),
            coeff: CoeffDoc::new(c, basis),
        })
        .collect()
}

/// The JSON form of a class. `text` is informational; the structured
/// fields determine the class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub text: String,
    pub rank: usize,
    pub numerator: Vec<TermDoc>,
    pub denominator: Vec<Vec<i64>>,
}

impl ClassDoc {
    pub fn new(c: &ClassFraction, basis: Basis) -> Self {
        ClassDoc {
            text: c.render(genus_var(basis)),
            rank: c.rank(),
            numerator: terms_doc(c.numerator(), basis),
            denominator: c.denominator().iter().map(|w| w.coords().to_vec()).collect(),
        }
    }

    pub fn to_class(&self, basis: Basis) -> Result<ClassFraction, CliError> {
        let terms = self
            .numerator
            .iter()
            .map(|t| Ok((Character::from(t.exponent.clone()), t.coeff.to_coeff(basis)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let num = LaurentPoly::from_terms(self.rank, terms).map_err(|e| CliError::Schema(e.to_string()))?;
        let den = self.denominator.iter().map(|w| Character::from(w.clone())).collect();
        ClassFraction::new(num, den).map_err(|e| CliError::Schema(e.to_string()))
    }
}
