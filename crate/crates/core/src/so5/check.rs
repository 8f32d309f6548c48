//! Element-by-element check of `tr(g, Φ) = φ(g)`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::classc::{anisotropic_lines, in_class_c, is_unipotent_22_type, phi, trace_phi_over, ClassCLabel};
use super::induced::{perp_witt, phi_coset, CosetModel, Witt};
use super::matrix::{self, IDENTITY};
use super::space::{enumerate_group, generators, LineType, OrthElement, QuadraticSpace5, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::report::{ClaimId, Counterexample, VerificationReport};

/// Default sample count when the group is too large to enumerate.
pub const DEFAULT_SAMPLES: usize = 2000;

fn cx(input: impl Into<String>, expected: impl ToString, got: impl ToString) -> Counterexample {
    Counterexample {
        input: input.into(),
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

fn short(g: &OrthElement) -> String {
    g.matrix()
        .iter()
        .map(|r| r.iter().map(u8::to_string).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

/// Which line type has a split perpendicular, checked on every line.
pub fn split_line_type(space: &QuadraticSpace5) -> Result<LineType> {
    let mut found: BTreeMap<LineType, Witt> = BTreeMap::new();
    for (l, t) in anisotropic_lines(space) {
        let w = perp_witt(space, &l);
        if *found.entry(t).or_insert(w) != w {
            return Err(Error::InvalidParameter(format!("lines of type {t:?} have perpendiculars of both Witt types")));
        }
    }
    found
        .into_iter()
        .find(|(_, w)| *w == Witt::Split)
        .map(|(t, _)| t)
        .ok_or_else(|| Error::InvalidParameter("no split perpendicular".into()))
}

struct ElementResult {
    label: Option<ClassCLabel>,
    phi: i64,
    trace: i64,
    coset: i64,
    type_22: bool,
}

/// Exhaustive check over `SO_5(F_q)` with the identity form.
pub fn verify_so5_exhaustive(q: u32) -> Result<VerificationReport> {
    let space = QuadraticSpace5::standard(q)?;
    let group = enumerate_group(&space, DEFAULT_ENUMERATION_CAP)?;
    let lines = anisotropic_lines(&space);
    let plus = lines.iter().filter(|(_, t)| *t == LineType::Plus).count();
    let minus = lines.len() - plus;
    let split_type = split_line_type(&space)?;
    let split = CosetModel::new(&space, &group, Witt::Split)?;
    let nonsplit = CosetModel::new(&space, &group, Witt::NonSplit)?;

    let results: Vec<Result<ElementResult>> = group
        .par_iter()
        .map(|g| {
            Ok(ElementResult {
                label: in_class_c(&space, g)?,
                phi: phi(&space, g)?,
                trace: trace_phi_over(&space, &lines, g),
                coset: phi_coset(&split, &nonsplit, g),
                type_22: is_unipotent_22_type(&space, g),
            })
        })
        .collect();

    let mut failures = Vec::new();
    let mut per_label: BTreeMap<ClassCLabel, (u64, BTreeMap<i64, u64>)> = BTreeMap::new();
    let mut trace_sum = 0i64;
    let mut type_22 = 0u64;
    let mut type_22_nonzero = 0u64;
    for (g, r) in group.iter().zip(results) {
        let r = match r {
            Ok(r) => r,
            Err(e) => {
                failures.push(cx(short(g), "label", e));
                continue;
            }
        };
        trace_sum += r.trace;
        if r.trace != r.phi {
            failures.push(cx(format!("trace_phi {}", short(g)), r.phi, r.trace));
        }
        if r.coset != r.trace {
            failures.push(cx(format!("coset {}", short(g)), r.trace, r.coset));
        }
        if (r.phi != 0) != r.label.is_some() {
            failures.push(cx(format!("support {}", short(g)), r.label.is_some(), r.phi != 0));
        }
        if let Some(l) = r.label {
            let e = per_label.entry(l).or_default();
            e.0 += 1;
            *e.1.entry(r.trace).or_default() += 1;
        }
        if r.type_22 {
            type_22 += 1;
            if r.trace != 0 {
                type_22_nonzero += 1;
            }
        }
    }
    for l in ClassCLabel::ALL {
        match per_label.get(&l) {
            None => failures.push(cx(format!("label {l}"), "realized", "absent")),
            Some((_, values)) if values.len() != 1 => {
                failures.push(cx(format!("constancy {l}"), "one value", format!("{values:?}")))
            }
            _ => {}
        }
    }
    if trace_sum != 0 {
        failures.push(cx("<Phi, 1> * |G|", 0, trace_sum));
    }

    let index_ok = split.index() == if split_type == LineType::Plus { plus } else { minus };
    if !index_ok {
        failures.push(cx("split coset count", "lines of the split type", split.index()));
    }

    let sizes = per_label
        .iter()
        .map(|(l, (n, v))| format!("{l}={n} (trace {})", v.keys().next().copied().unwrap_or(0)))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(VerificationReport::new(ClaimId::So5, format!("q={q}"), group.len() as u64, failures)
        .with_note(format!(
            "|G|={} lines: {} type +1, {} type -1, {} isotropic",
            group.len(),
            plus,
            minus,
            (q as usize + 1) * (q as usize * q as usize + 1)
        ))
        .with_note(format!(
            "type {:+} lines have split perpendicular; [G:O+]={} [G:O-]={}",
            split_type.sign(),
            split.index(),
            nonsplit.index()
        ))
        .with_note(format!("class C: {sizes}"))
        .with_note(format!(
            "unipotent (2,2) on the (-1)-space: {type_22} elements, {type_22_nonzero} with nonzero trace"
        )))
}

/// Random walk of length `steps` on the generators.
fn random_element(space: &QuadraticSpace5, gens: &[matrix::Mat5], rng: &mut ChaCha8Rng, steps: usize) -> OrthElement {
    let f = space.field();
    let mut g = IDENTITY;
    for _ in 0..steps {
        g = matrix::mul(f, &gens[rng.random_range(0..gens.len())], &g);
    }
    OrthElement::from_trusted(g)
}

/// `trace_Phi = φ` on `samples` random elements, plus conjugation invariance
/// of the label and trace for each.
pub fn verify_so5_sampled(q: u32, samples: usize, seed: u64) -> Result<VerificationReport> {
    let space = QuadraticSpace5::standard(q)?;
    let f = *space.field();
    let lines = anisotropic_lines(&space);
    let gens = generators(&space);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(OrthElement, OrthElement)> = (0..samples)
        .map(|_| {
            (
                random_element(&space, &gens, &mut rng, 24),
                random_element(&space, &gens, &mut rng, 24),
            )
        })
        .collect();
    let results: Vec<Vec<Counterexample>> = pairs
        .par_iter()
        .map(|(g, x)| {
            let mut out = Vec::new();
            let label = match (in_class_c(&space, g), phi(&space, g)) {
                (Ok(l), Ok(p)) => {
                    let t = trace_phi_over(&space, &lines, g);
                    if t != p {
                        out.push(cx(format!("trace_phi {}", short(g)), p, t));
                    }
                    l
                }
                (Err(e), _) | (_, Err(e)) => {
                    out.push(cx(short(g), "label", e));
                    return out;
                }
            };
            let x_inv = matrix::inverse(&f, x.matrix()).expect("group element");
            let conj = OrthElement::from_trusted(matrix::mul(&f, x.matrix(), &matrix::mul(&f, g.matrix(), &x_inv)));
            match in_class_c(&space, &conj) {
                Ok(l) if l == label => {}
                other => out.push(cx(format!("conjugate {}", short(g)), format!("{label:?}"), format!("{other:?}"))),
            }
            out
        })
        .collect();
    let labels: usize = pairs
        .iter()
        .filter(|(g, _)| matches!(in_class_c(&space, g), Ok(Some(_))))
        .count();
    let mut report = VerificationReport::new(
        ClaimId::So5,
        format!("q={q} sampled"),
        samples as u64,
        results.into_iter().flatten().collect(),
    )
    .with_note(format!("{labels} of {samples} samples in class C"));
    report.seed = seed;
    Ok(report)
}

/// Exhaustive when the group fits under the enumeration cap and no sample
/// count is given, sampled otherwise.
pub fn verify_so5(q: u32, samples: Option<usize>, seed: u64) -> Result<VerificationReport> {
    let space = QuadraticSpace5::standard(q)?;
    match samples {
        None if space.so5_order() <= DEFAULT_ENUMERATION_CAP => verify_so5_exhaustive(q),
        None => verify_so5_sampled(q, DEFAULT_SAMPLES, seed),
        Some(n) => verify_so5_sampled(q, n, seed),
    }
}
