// SPDX-License-Identifier: Apache-2.0

//! Power notation, text rendering and the JSON file formats.
//!
//! Every element in files is written in power notation: the integer `k`
//! stands for `α^k` and the string `"zero"` for zero. Polynomials are stored
//! with ascending coefficients; the text rendering is descending, in the
//! style `X^6 + a^345*X^5 + ... + a^777`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field, CONWAY_2_10};
use crate::skew::{SkewPoly, SkewRing};

pub const ZERO_TOKEN: &str = "zero";

/// An element in power notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Power {
    Exp(u64),
    Token(String),
}

impl Power {
    pub fn of(field: &Field, x: Elem) -> Self {
        match field.log(x) {
            Ok(k) => Power::Exp(k as u64),
            Err(_) => Power::Token(ZERO_TOKEN.into()),
        }
    }

    pub fn to_elem(&self, field: &Field) -> Result<Elem> {
        match self {
            Power::Exp(k) => Ok(field.alpha_pow((*k % (field.order() as u64 - 1)) as i64)),
            Power::Token(t) if t == ZERO_TOKEN => Ok(Elem::ZERO),
            Power::Token(t) => Err(Error::Parse(format!("bad element token {t:?}"))),
        }
    }
}

pub fn to_powers(field: &Field, coeffs: &[Elem]) -> Vec<Power> {
    coeffs.iter().map(|&c| Power::of(field, c)).collect()
}

pub fn from_powers(field: &Field, coeffs: &[Power]) -> Result<Vec<Elem>> {
    coeffs.iter().map(|c| c.to_elem(field)).collect()
}

/// How the primitive element is given in a field file: `k` means `y^k`, a
/// list is a coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    PowerOfY(u64),
    Digits(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldFile {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
}

impl FieldFile {
    pub fn describe(field: &Field) -> Self {
        FieldFile {
            p: field.characteristic(),
            m: field.degree(),
            modulus: field.modulus().to_vec(),
            generator: Some(GeneratorSpec::Digits(field.digits(field.generator()))),
        }
    }

    pub fn build(&self) -> Result<Field> {
        let generator = match &self.generator {
            None => None,
            Some(GeneratorSpec::Digits(d)) => {
                let probe = Field::new(self.p, self.m, &self.modulus, None)?;
                Some(probe.from_digits(d)?)
            }
            Some(GeneratorSpec::PowerOfY(k)) => {
                let probe = Field::new(self.p, self.m, &self.modulus, None)?;
                let y = if self.m == 1 {
                    probe.neg(Elem::from_packed(self.modulus[0]))
                } else {
                    Elem::from_packed(self.p)
                };
                let mut acc = Elem::ONE;
                for _ in 0..*k {
                    acc = probe.mul_slow(acc, y);
                }
                Some(acc)
            }
        };
        Field::new(self.p, self.m, &self.modulus, generator)
    }
}

/// A field given inline or by reference (a preset name or a file path).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldRef {
    Inline(FieldFile),
    Named(String),
}

/// Built-in fields: `gf2`, `gf4`, `gf9`, `gf1024`.
pub fn preset_field(name: &str) -> Option<FieldFile> {
    let (p, m, modulus, gen) = match name.to_ascii_lowercase().as_str() {
        "gf2" | "f2" => (2, 1, vec![1, 1], None),
        "gf4" | "f4" => (2, 2, vec![1, 1, 1], Some(1)),
        "gf9" | "f9" => (3, 2, vec![2, 2, 1], Some(1)),
        "gf1024" | "f1024" | "gf2^10" => (2, 10, CONWAY_2_10.to_vec(), Some(1)),
        _ => return None,
    };
    Some(FieldFile {
        p,
        m,
        modulus,
        generator: gen.map(GeneratorSpec::PowerOfY),
    })
}

/// Resolves a preset name, or reads a field file relative to `base`.
pub fn load_field_ref(r: &FieldRef, base: &Path) -> Result<Arc<Field>> {
    let file = match r {
        FieldRef::Inline(f) => f.clone(),
        FieldRef::Named(name) => match preset_field(name) {
            Some(f) => f,
            None => {
                let path = resolve(base, name);
                serde_json::from_str(
                    &std::fs::read_to_string(&path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                )?
            }
        },
    };
    Ok(Arc::new(file.build()?))
}

/// Loads a field from a preset name or a path.
pub fn load_field(spec: &str) -> Result<Arc<Field>> {
    load_field_ref(&FieldRef::Named(spec.into()), Path::new("."))
}

fn resolve(base: &Path, name: &str) -> PathBuf {
    let p = Path::new(name);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

fn parent_dir(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFile {
    pub field: FieldRef,
    pub theta_power: u32,
    pub coeffs: Vec<Power>,
}

impl PolyFile {
    pub fn describe(poly: &SkewPoly, field_ref: FieldRef) -> Self {
        let ring = poly.ring();
        PolyFile {
            field: field_ref,
            theta_power: ring.theta().power(),
            coeffs: to_powers(ring.field(), poly.coeffs()),
        }
    }

    pub fn build(&self, base: &Path) -> Result<SkewPoly> {
        let field = load_field_ref(&self.field, base)?;
        let coeffs = from_powers(&field, &self.coeffs)?;
        let ring = SkewRing::new(field, self.theta_power)?;
        ring.poly(coeffs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldRef,
    pub theta_power: u32,
    pub n: usize,
    pub generator: Vec<Power>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_poly(path: &Path) -> Result<SkewPoly> {
    read_json::<PolyFile>(path)?.build(parent_dir(path))
}

/// Reads a code file, returning the ring, the length and the generator.
pub fn read_code_file(path: &Path) -> Result<(CodeFile, SkewPoly)> {
    let file: CodeFile = read_json(path)?;
    let field = load_field_ref(&file.field, parent_dir(path))?;
    let ring = SkewRing::new(field.clone(), file.theta_power)?;
    let g = ring.poly(from_powers(&field, &file.generator)?)?;
    Ok((file, g))
}

fn render_coeff(field: &Field, c: Elem) -> String {
    match field.log(c) {
        Ok(0) => "1".into(),
        Ok(1) => "a".into(),
        Ok(k) => format!("a^{k}"),
        Err(_) => "0".into(),
    }
}

fn render_term(out: &mut String, field: &Field, c: Elem, e: u64, var: &str) {
    if !out.is_empty() {
        out.push_str(" + ");
    }
    let coeff = render_coeff(field, c);
    match (e, coeff.as_str()) {
        (0, _) => out.push_str(&coeff),
        (_, "1") => {}
        _ => {
            out.push_str(&coeff);
            out.push('*');
        }
    }
    match e {
        0 => {}
        1 => out.push_str(var),
        _ => {
            let _ = write!(out, "{var}^{e}");
        }
    }
}

/// Descending rendering of ascending coefficients.
pub fn render_poly(field: &Field, coeffs: &[Elem], var: &str) -> String {
    let mut out = String::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if !c.is_zero() {
            render_term(&mut out, field, c, e as u64, var);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_sparse(field: &Field, terms: &[(u64, Elem)], var: &str) -> String {
    let mut out = String::new();
    for &(e, c) in terms.iter().rev() {
        render_term(&mut out, field, c, e, var);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses the text rendering back into ascending coefficients.
///
/// Accepted coefficients: `a`, `a^k`, `α^k`, `alpha^k` (braces around `k`
/// allowed) and nonnegative integers, read in the prime field. Terms are
/// joined by `+` or `-`; `*` between coefficient and variable is optional.
pub fn parse_poly(field: &Field, text: &str, var: char) -> Result<Vec<Elem>> {
    let cleaned: String = text
        .replace("alpha", "a")
        .replace('α', "a")
        .chars()
        .filter(|c| {
            !c.is_whitespace() && *c != '{' && *c != '}' && *c != ',' && *c != '$' && *c != '\\'
        })
        .collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let var_lower = var.to_ascii_lowercase();
    let var_upper = var.to_ascii_uppercase();
    let mut coeffs: Vec<Elem> = Vec::new();
    let mut rest = cleaned.as_str();
    let mut negative = false;
    if let Some(r) = rest.strip_prefix('-') {
        negative = true;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        let (c, e) = parse_term(field, term, var_lower, var_upper)?;
        let c = if negative { field.neg(c) } else { c };
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Elem::ZERO);
        }
        coeffs[e] = field.add(coeffs[e], c);
        if end == rest.len() {
            break;
        }
        negative = &rest[end..end + 1] == "-";
        rest = &rest[end + 1..];
    }
    crate::skew::trim(&mut coeffs);
    Ok(coeffs)
}

fn parse_term(field: &Field, term: &str, lo: char, up: char) -> Result<(Elem, usize)> {
    let bad = || Error::Parse(format!("bad term {term:?}"));
    if term.is_empty() {
        return Err(bad());
    }
    let (coef_part, var_part) = match term.find([lo, up]) {
        Some(i) => (&term[..i], Some(&term[i + 1..])),
        None => (term, None),
    };
    let coef_part = coef_part.trim_end_matches('*');
    let coeff = if coef_part.is_empty() {
        Elem::ONE
    } else if let Some(exp) = coef_part.strip_prefix('a') {
        let k = match exp.strip_prefix('^') {
            Some(k) => k.parse::<i64>().map_err(|_| bad())?,
            None if exp.is_empty() => 1,
            None => return Err(bad()),
        };
        field.alpha_pow(k)
    } else {
        field.from_int(coef_part.parse::<i64>().map_err(|_| bad())?)
    };
    let exp = match var_part {
        None => 0,
        Some("") => 1,
        Some(e) => e
            .strip_prefix('^')
            .and_then(|k| k.parse::<usize>().ok())
            .ok_or_else(bad)?,
    };
    Ok((coeff, exp))
}
