//! Dispatch from jobs to the library.

use std::collections::BTreeSet;

use tdy_core::algebra::{residue, Character, ClassFraction, CoeffFrac, QPoly, SeriesTrunc, SeriesVar};
use tdy_core::basis::{
    cohomology_limit, generator_alphabet, open_orbit_class, parse_spoly, positivity_report, rewrite_in_s,
    torsimp_expansion, Rewritten, SVariableSet,
};
use tdy_core::hirz::{
    assemble, bfm_cone_check, chi_from_local, chi_of_projective_class, cone_class, cusp_comparison, hypersurface_f,
    orbit_polynomial, smooth_local_class, snc_local_class, snc_t1_identity, solve_singular_contribution,
    toric_delta0_check, toric_local_class, toric_y0_check, ChartTerm, ConeRegion, Factor, FixedPointData, SncVariant,
    UPoly,
};
use tdy_core::lattice::{dual_cone_in, primal_cone_in, Cone, LatticeBasis};

use crate::job::*;
use crate::report::{Item, Report};
use crate::CliError;

fn math<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Math(e.to_string())
}

fn ch(v: &[i64]) -> Character {
    Character::from(v.to_vec())
}

fn chars(v: &[Vec<i64>]) -> Vec<Character> {
    v.iter().map(|w| ch(w)).collect()
}

/// Sums the local classes at the maximal cones and compares the result
/// with the orbit count `Σ b_i (-(1+y))^i`. Orbits of dimension `i` are the
/// cones of dimension `d - i`, found as faces of the maximal cones.
fn chi_of_fan(r: &mut Report, f: &FanSpec) -> Result<(), CliError> {
    let d = f
        .rays
        .first()
        .map(Vec::len)
        .ok_or_else(|| CliError::Schema("$.fan.rays: empty".into()))?;
    let lattice = LatticeBasis::standard(d);
    let mut classes = Vec::new();
    let mut cones: BTreeSet<(usize, Vec<Vec<i64>>)> = BTreeSet::new();
    for (i, idx) in f.cones.iter().enumerate() {
        let gens = idx
            .iter()
            .map(|&k| {
                f.rays
                    .get(k)
                    .cloned()
                    .ok_or_else(|| CliError::Schema(format!("$.fan.cones[{i}]: no ray {k}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let sigma = primal_cone_in(&lattice, &gens).map_err(math)?;
        for face in sigma.faces() {
            cones.insert((face.dim, face.rays.iter().map(|&k| sigma.rays()[k].clone()).collect()));
        }
        classes.push(toric_local_class(&sigma, &lattice).map_err(math)?);
    }
    let mut orbits = vec![0u64; d + 1];
    for (dim, _) in &cones {
        orbits[d - dim] += 1;
    }
    let chi = chi_from_local(&classes).map_err(math)?;
    r.push("chi", Item::Coeff(CoeffFrac::from_y_poly(&chi)));
    r.push(
        "orbits",
        Item::Text(orbits.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")),
    );
    r.push("rigidity", Item::Check(chi == orbit_polynomial(&orbits)));
    Ok(())
}

/// A polynomial in `y` or `d` with rational coefficients, such as
/// `1 - y + y^2` or `(1+d)^2/2`.
pub fn parse_coeff_poly(src: &str) -> Result<QPoly, CliError> {
    let dummy = SVariableSet::with_names(vec![ch(&[1])], vec!["S".into()]).map_err(math)?;
    let p = parse_spoly(&src.replace('y', "(-1-d)"), &dummy).map_err(|e| CliError::Schema(format!("{src:?}: {e}")))?;
    let mut coeffs = Vec::new();
    for (m, c) in p.terms() {
        if m.s[0] != 0 {
            return Err(CliError::Schema(format!("{src:?}: only y or d may appear")));
        }
        let d = m.d as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, Default::default());
        }
        coeffs[d] = c.clone();
    }
    Ok(QPoly::from_coeffs(coeffs))
}

fn y_poly(src: &str) -> Result<QPoly, CliError> {
    Ok(parse_coeff_poly(src)?.reflect())
}

fn lattice_of(spec: &Option<Vec<Vec<i64>>>, cone: &ConeSpec) -> Result<LatticeBasis, CliError> {
    match spec {
        Some(gens) => LatticeBasis::new(chars(gens)).map_err(math),
        None => {
            let r = cone
                .rays
                .first()
                .map(Vec::len)
                .ok_or_else(|| CliError::Schema("$.cone.rays: at least one ray is needed".into()))?;
            Ok(LatticeBasis::standard(r))
        }
    }
}

fn build_cone(spec: &ConeSpec, lattice: &LatticeBasis) -> Result<Cone, CliError> {
    match spec.side {
        SideSpec::Dual => dual_cone_in(lattice, &chars(&spec.rays)).map_err(math),
        SideSpec::Primal => primal_cone_in(lattice, &spec.rays).map_err(math),
    }
}

fn alphabet(spec: &AlphabetSpec, cone: Option<(&Cone, &LatticeBasis)>) -> Result<SVariableSet, CliError> {
    match spec {
        AlphabetSpec::Keyword(k) if k == "generators" => {
            let (c, l) = cone.ok_or_else(|| CliError::Schema("$.alphabet: \"generators\" needs a cone".into()))?;
            generator_alphabet(c, l).map_err(math)
        }
        AlphabetSpec::Keyword(k) => Err(CliError::Schema(format!("$.alphabet: unknown keyword {k:?}"))),
        AlphabetSpec::Letters(ls) => {
            let mut weights = Vec::new();
            let mut names = Vec::new();
            for l in ls {
                match l {
                    LetterSpec::Weight(w) => {
                        names.push(format!("S{}", ch(w).render()));
                        weights.push(ch(w));
                    }
                    LetterSpec::Named { name, weight } => {
                        names.push(name.clone());
                        weights.push(ch(weight));
                    }
                }
            }
            SVariableSet::with_names(weights, names).map_err(math)
        }
    }
}

fn push_s_form(r: &mut Report, class: &ClassFraction, vars: SVariableSet) -> Result<(), CliError> {
    let rw = rewrite_in_s(class, &vars).map_err(math)?;
    let rep = positivity_report(&rw.numerator);
    r.push("alphabet", Item::Alphabet(vars.clone()));
    r.push("s-form", Item::SForm(vars.clone(), rw));
    r.push("positivity", Item::Positivity(vars, rep));
    Ok(())
}

fn push_series(r: &mut Report, class: &ClassFraction, order: Option<u32>) -> Result<(), CliError> {
    if let Some(order) = order {
        let num = ClassFraction::from_laurent(class.numerator().clone());
        r.push(
            "numerator-series",
            Item::Series(cohomology_limit(&num, order).map_err(math)?),
        );
    }
    Ok(())
}

/// Runs a job and returns its report.
pub fn run(spec: &JobSpec) -> Result<Report, CliError> {
    let mut r = Report::new(spec.command());
    match &spec.job {
        Job::Chi(j) => match (&j.fan, j.rank, &j.points) {
            (Some(f), None, None) => chi_of_fan(&mut r, f)?,
            (None, Some(rank), Some(points)) => {
                let mut contribs = Vec::new();
                for (i, p) in points.iter().enumerate() {
                    let label = p.label.clone().unwrap_or_else(|| format!("p{}", i + 1));
                    let c = smooth_local_class(&FixedPointData::new(label.clone(), chars(&p.weights)), rank)
                        .map_err(math)?;
                    r.push(&format!("local {label}"), Item::Class(c.clone()));
                    contribs.push(c);
                }
                let chi = chi_from_local(&contribs).map_err(math)?;
                r.push("chi", Item::Coeff(CoeffFrac::from_y_poly(&chi)));
            }
            _ => {
                return Err(CliError::Schema(
                    "$: chi needs either `fan` or both `rank` and `points`".into(),
                ))
            }
        },
        Job::Toric(j) => {
            let lattice = lattice_of(&j.lattice, &j.cone)?;
            let cone = build_cone(&j.cone, &lattice)?;
            let class = match j.part.unwrap_or(Part::Whole) {
                Part::Whole => toric_local_class(&cone, &lattice).map_err(math)?,
                Part::OpenOrbit => open_orbit_class(&cone, &lattice).map_err(math)?,
            };
            r.push("class", Item::Class(class.clone()));
            if j.part.unwrap_or(Part::Whole) == Part::Whole {
                r.push(
                    "y0-check",
                    Item::Check(toric_y0_check(&cone, &lattice).map_err(math)?.holds),
                );
                r.push(
                    "delta0-check",
                    Item::Check(toric_delta0_check(&cone, &lattice).map_err(math)?.holds),
                );
            }
            push_series(&mut r, &class, spec.truncation)?;
            if let Some(a) = &j.alphabet {
                push_s_form(&mut r, &class, alphabet(a, Some((&cone, &lattice)))?)?;
            }
        }
        Job::Snc(j) => {
            let n = j.weights.len();
            let ws = chars(&j.weights);
            let variant = match j.variant {
                VariantSpec::Space => SncVariant::Space,
                VariantSpec::Complement => SncVariant::Complement,
                VariantSpec::Log => SncVariant::Log,
                VariantSpec::Divisor => SncVariant::Divisor,
            };
            let class = snc_local_class(n, j.k, &ws, variant).map_err(math)?;
            r.push("class", Item::Class(class.clone()));
            r.push(
                "t1-identity",
                Item::Check(snc_t1_identity(n, j.k, &ws).map_err(math)?.holds),
            );
            push_series(&mut r, &class, spec.truncation)?;
            if let Some(a) = &j.alphabet {
                push_s_form(&mut r, &class, alphabet(a, None)?)?;
            }
        }
        Job::Cone(j) => {
            let f = match &j.f {
                FSpec::Hypersurface { degree } => hypersurface_f(j.n, *degree).map_err(math)?,
                FSpec::Coeffs(cs) => {
                    let coeffs = cs
                        .iter()
                        .map(|s| Ok(CoeffFrac::poly(parse_coeff_poly(s)?)))
                        .collect::<Result<Vec<_>, CliError>>()?;
                    UPoly::new(coeffs, j.n).map_err(math)?
                }
            };
            let chi = match &j.chi {
                Some(s) => y_poly(s)?,
                None => chi_of_projective_class(&f, j.n).map_err(math)?,
            };
            let region = match j.region {
                RegionSpec::Punctured => ConeRegion::Punctured,
                RegionSpec::Closed => ConeRegion::Closed,
                RegionSpec::Complement => ConeRegion::Complement,
            };
            r.push("f", Item::Text(f.render(crate::report::genus_var(spec.basis))));
            r.push("chi", Item::Coeff(CoeffFrac::from_y_poly(&chi)));
            let class = cone_class(&f, j.n, &chi, region).map_err(math)?;
            r.push("class", Item::Class(class.clone()));
            if let FSpec::Hypersurface { degree } = j.f {
                r.push(
                    "bfm-check",
                    Item::Check(bfm_cone_check(j.n, degree).map_err(math)?.equal),
                );
            }
            push_series(&mut r, &class, spec.truncation)?;
        }
        Job::Assemble(j) => match (&j.terms, j.cusp) {
            (Some(terms), None) => {
                let rank = j
                    .rank
                    .ok_or_else(|| CliError::Schema("$.rank: required with terms".into()))?;
                let terms: Vec<ChartTerm> = terms
                    .iter()
                    .map(|t| {
                        let factors = t
                            .factors
                            .iter()
                            .map(|f| match f {
                                FactorSpec::Full(w) => Factor::Full(ch(w)),
                                FactorSpec::Punctured(w) => Factor::Punctured(ch(w)),
                            })
                            .collect();
                        ChartTerm::new(factors).times(t.sign.unwrap_or(1), t.multiplicity.unwrap_or(1))
                    })
                    .collect();
                let class = assemble(rank, &terms).map_err(math)?;
                r.push("class", Item::Class(class.clone()));
                push_series(&mut r, &class, spec.truncation)?;
                if let Some(a) = &j.alphabet {
                    push_s_form(&mut r, &class, alphabet(a, None)?)?;
                }
            }
            (None, Some(n)) => {
                let w = cusp_comparison(n).map_err(math)?;
                r.push("td0", Item::Class(w.actual));
                r.push("structure-sheaf", Item::Class(w.naive));
                r.push(
                    "comparison",
                    Item::Text(if w.differ { "differ" } else { "agree" }.into()),
                );
            }
            _ => return Err(CliError::Schema("$: give exactly one of terms or cusp".into())),
        },
        Job::Solve(j) => {
            let chi = y_poly(&j.chi)?;
            let known = j
                .known
                .iter()
                .map(|p| smooth_local_class(&FixedPointData::new("", chars(&p.weights)), j.rank))
                .collect::<Result<Vec<_>, _>>()
                .map_err(math)?;
            let den = chars(&j.denominator);
            let num = solve_singular_contribution(&chi, &known, &den).map_err(math)?;
            let y0 = num
                .map_coeffs(|c| c.eval_y(&tdy_core::algebra::q(0)).map(CoeffFrac::rational))
                .map_err(math)?;
            r.push("numerator", Item::Laurent(num.clone()));
            r.push("numerator-y0", Item::Laurent(y0));
            let class = ClassFraction::new(num, den).map_err(math)?;
            r.push("class", Item::Class(class));
        }
        Job::Positivity(j) => match (&j.polynomial, &j.cone) {
            (Some(p), None) => {
                let a = j
                    .alphabet
                    .as_ref()
                    .ok_or_else(|| CliError::Schema("$.alphabet: required with polynomial".into()))?;
                let vars = alphabet(a, None)?;
                let poly = parse_spoly(p, &vars).map_err(|e| CliError::Schema(format!("$.polynomial: {e}")))?;
                r.push("alphabet", Item::Alphabet(vars.clone()));
                r.push("positivity", Item::Positivity(vars.clone(), positivity_report(&poly)));
            }
            (None, Some(cs)) => {
                let lattice = lattice_of(&j.lattice, cs)?;
                let cone = build_cone(cs, &lattice)?;
                let default = AlphabetSpec::Keyword("generators".into());
                let vars = alphabet(j.alphabet.as_ref().unwrap_or(&default), Some((&cone, &lattice)))?;
                match j.method.unwrap_or(MethodSpec::Rewrite) {
                    MethodSpec::Rewrite => {
                        let class = match j.part.unwrap_or(Part::Whole) {
                            Part::Whole => toric_local_class(&cone, &lattice).map_err(math)?,
                            Part::OpenOrbit => open_orbit_class(&cone, &lattice).map_err(math)?,
                        };
                        r.push("class", Item::Class(class.clone()));
                        push_s_form(&mut r, &class, vars)?;
                    }
                    MethodSpec::Torsimp => {
                        if j.part == Some(Part::Whole) {
                            return Err(CliError::Schema("$.part: torsimp expands the open orbit".into()));
                        }
                        let e = torsimp_expansion(&cone, &lattice, Some(&vars)).map_err(math)?;
                        r.push("class", Item::Class(open_orbit_class(&cone, &lattice).map_err(math)?));
                        let rep = positivity_report(&e.numerator);
                        let rw = Rewritten {
                            numerator: e.numerator,
                            denominator: e.denominator,
                            exact: true,
                        };
                        r.push("alphabet", Item::Alphabet(e.alphabet.clone()));
                        r.push("s-form", Item::SForm(e.alphabet.clone(), rw));
                        r.push("positivity", Item::Positivity(e.alphabet, rep));
                    }
                }
            }
            _ => return Err(CliError::Schema("$: give exactly one of polynomial or cone".into())),
        },
        Job::Residue(j) => {
            let series = match (&j.power, &j.coeffs) {
                (Some(p), None) => {
                    if p.n == 0 {
                        return Err(CliError::Schema("$.power.n: must be positive".into()));
                    }
                    // (1+U)^k / U^n
                    let mut row = vec![CoeffFrac::one()];
                    let mut c = tdy_core::algebra::q(1);
                    for i in 1..=p.k {
                        c = c * tdy_core::algebra::q(i64::from(p.k - i + 1)) / tdy_core::algebra::q(i64::from(i));
                        row.push(CoeffFrac::rational(c.clone()));
                    }
                    SeriesTrunc::polynomial(SeriesVar::U, -i64::from(p.n), row, CoeffFrac::zero())
                }
                (None, Some(cs)) => {
                    let coeffs = cs
                        .iter()
                        .map(|s| Ok(CoeffFrac::poly(parse_coeff_poly(s)?)))
                        .collect::<Result<Vec<_>, CliError>>()?;
                    SeriesTrunc::polynomial(SeriesVar::U, j.low.unwrap_or(0), coeffs, CoeffFrac::zero())
                }
                _ => return Err(CliError::Schema("$: give exactly one of power or coeffs".into())),
            };
            r.push("residue", Item::Coeff(residue(&series).map_err(math)?));
        }
    }
    Ok(r)
}

/// Parses, runs and renders a job; flags given on the command line
/// override those in the document.
pub fn run_source(
    src: &str,
    basis: Option<Basis>,
    format: Option<Format>,
    truncation: Option<u32>,
) -> Result<String, CliError> {
    let mut spec = JobSpec::parse(src)?;
    if let Some(b) = basis {
        spec.basis = b;
    }
    if let Some(f) = format {
        spec.format = f;
    }
    if truncation.is_some() {
        spec.truncation = truncation;
    }
    let report = run(&spec)?;
    Ok(report.render(spec.basis, spec.format))
}
