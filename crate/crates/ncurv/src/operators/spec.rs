//! Representation specification files: JSON documents of the shape
//! {"type": ..., "n": ..., "alpha": ..., "payload": {...}} parsed into a
//! RowContraction for either backend.
//!
//! Scalars accept integers, JSON numbers (converted exactly — every finite
//! double is a dyadic rational), strings "p/q" / "-3" / "0.25", and complex
//! objects {"re": ..., "im": ...}.

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::matrix::{Backend, Mat};
use crate::operators::{
    direct_sum, unitary_mix, CompressionRep, DecayingAtomicRep, DenseTuple, Generator,
    OrbitSet, RowContraction, WordSet,
};
use crate::scalar::Scalar;
use crate::word::Word;

#[derive(Deserialize)]
#[serde(untagged)]
pub enum ScalarSpec {
    Int(i64),
    Num(f64),
    Str(String),
    Complex { re: Box<ScalarSpec>, im: Box<ScalarSpec> },
}

fn parse_rational_str<S: Scalar>(s: &str) -> Result<S> {
    let s = s.trim();
    let bad = || Error::Spec(format!("cannot parse scalar {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(Error::Spec(format!("zero denominator in {s:?}")));
        }
        return Ok(S::from_ratio(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int: i64 = if int_part.is_empty() || int_part == "-" {
            0
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let frac: i64 = if frac_part.is_empty() {
            0
        } else {
            frac_part.parse().map_err(|_| bad())?
        };
        let den = 10i64
            .checked_pow(frac_part.len() as u32)
            .ok_or_else(|| Error::Spec(format!("decimal too long in {s:?}")))?;
        let num = int
            .checked_mul(den)
            .and_then(|v| {
                if negative {
                    v.checked_sub(frac)
                } else {
                    v.checked_add(frac)
                }
            })
            .ok_or_else(|| Error::Spec(format!("decimal overflow in {s:?}")))?;
        return Ok(S::from_ratio(num, den));
    }
    let v: i64 = s.parse().map_err(|_| bad())?;
    Ok(S::from_int(v))
}

impl ScalarSpec {
    pub fn to_scalar<S: Scalar>(&self) -> Result<S> {
        match self {
            ScalarSpec::Int(v) => Ok(S::from_int(*v)),
            ScalarSpec::Num(v) => S::from_f64(*v, 0.0)
                .ok_or_else(|| Error::Spec(format!("non-finite scalar {v}"))),
            ScalarSpec::Str(s) => parse_rational_str(s),
            ScalarSpec::Complex { re, im } => {
                let re: S = re.to_scalar()?;
                let im: S = im.to_scalar()?;
                Ok(re + S::i() * im)
            }
        }
    }
}

fn parse_word(s: &str) -> Result<Word> {
    if s == "e" || s.is_empty() {
        return Ok(Word::empty());
    }
    let mut letters = Vec::with_capacity(s.len());
    for ch in s.chars() {
        let d = ch
            .to_digit(10)
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::Spec(format!("bad word {s:?}: letters are digits 1-9")))?;
        letters.push(d as u8);
    }
    Ok(Word(letters))
}

#[derive(Deserialize)]
struct RepSpecRaw {
    #[serde(rename = "type")]
    kind: String,
    #[serde(default)]
    n: u8,
    #[serde(default = "default_alpha")]
    alpha: u32,
    #[serde(default)]
    payload: Value,
}

fn default_alpha() -> u32 {
    1
}

#[derive(Deserialize)]
struct VectorEntry {
    word: String,
    coeff: ScalarSpec,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum GeneratorSpec {
    Finite { vector: Vec<VectorEntry> },
    Geometric { letter: u8, lambda: ScalarSpec },
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum WordSetSpec {
    BinaryExpansion { bits: Vec<u8> },
    EndsWith { letter: u8 },
    Chain { letter: u8 },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OrbitSpec {
    All(String),
    NotEndingIn { not_ending_in: u8 },
}

fn parse_vector<S: Scalar>(n: u8, entries: &[VectorEntry]) -> Result<FockVector<S>> {
    let mut v = FockVector::zero(n, 1);
    for e in entries {
        let w = parse_word(&e.word)?;
        if !w.valid_for(n) {
            return Err(Error::Spec(format!("word {} outside alphabet 1..={n}", e.word)));
        }
        v.set(0, w, e.coeff.to_scalar()?)?;
    }
    Ok(v)
}

fn parse_generator<S: Scalar>(n: u8, spec: &GeneratorSpec) -> Result<Generator<S>> {
    match spec {
        GeneratorSpec::Finite { vector } => Ok(Generator::Finite(parse_vector(n, vector)?)),
        GeneratorSpec::Geometric { letter, lambda } => {
            Generator::geometric(*letter, lambda.to_scalar()?)
        }
    }
}

fn from_value<'a, T: Deserialize<'a>>(v: &'a Value, what: &str) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Spec(format!("bad {what} payload: {e}")))
}

/// Parses a representation spec document. `tol` drives the float-backend
/// unitarity/wandering checks; contractivity of dense tuples is checked by
/// the caller (it is a validation failure, not a parse failure).
pub fn parse_spec<S: Backend>(doc: &str, tol: f64) -> Result<RowContraction<S>> {
    let raw: RepSpecRaw =
        serde_json::from_str(doc).map_err(|e| Error::Spec(format!("invalid JSON: {e}")))?;
    build(&raw, tol)
}

pub fn parse_spec_value<S: Backend>(doc: &Value, tol: f64) -> Result<RowContraction<S>> {
    let raw: RepSpecRaw = from_value(doc, "representation")?;
    build(&raw, tol)
}

fn require_n(raw: &RepSpecRaw) -> Result<u8> {
    if raw.n < 2 {
        Err(Error::Spec("field n must be at least 2".into()))
    } else {
        Ok(raw.n)
    }
}

fn build<S: Backend>(raw: &RepSpecRaw, tol: f64) -> Result<RowContraction<S>> {
    match raw.kind.as_str() {
        "left_regular" => Ok(RowContraction::LeftRegular {
            n: require_n(raw)?,
            alpha: raw.alpha,
        }),
        "left_regular_restricted" => {
            #[derive(Deserialize)]
            struct P {
                min_len: usize,
            }
            let p: P = from_value(&raw.payload, "left_regular_restricted")?;
            Ok(RowContraction::LeftRegularRestricted {
                n: require_n(raw)?,
                min_len: p.min_len,
            })
        }
        "dense" => {
            #[derive(Deserialize)]
            struct P {
                matrices: Vec<Vec<Vec<ScalarSpec>>>,
            }
            let p: P = from_value(&raw.payload, "dense")?;
            let mut mats = Vec::with_capacity(p.matrices.len());
            for m in &p.matrices {
                let rows = m.len();
                let cols = m.first().map_or(0, |r| r.len());
                if m.iter().any(|r| r.len() != cols) || rows != cols {
                    return Err(Error::Spec("dense matrices must be square".into()));
                }
                let mut mat = Mat::zeros(rows, cols);
                for (i, r) in m.iter().enumerate() {
                    for (j, s) in r.iter().enumerate() {
                        mat[(i, j)] = s.to_scalar()?;
                    }
                }
                mats.push(mat);
            }
            Ok(RowContraction::Dense(DenseTuple::new(mats)?))
        }
        "decaying_atomic" => {
            #[derive(Deserialize)]
            struct P {
                u: String,
                #[serde(default)]
                lambda: Option<Vec<ScalarSpec>>,
                #[serde(default)]
                r: Option<Vec<ScalarSpec>>,
            }
            let p: P = from_value(&raw.payload, "decaying_atomic")?;
            let n = require_n(raw)?;
            let u = parse_word(&p.u)?;
            let rep = match (&p.lambda, &p.r) {
                (Some(lambda), None) => {
                    let l: Vec<S> =
                        lambda.iter().map(|s| s.to_scalar()).collect::<Result<_>>()?;
                    DecayingAtomicRep::new(n, u, l)?
                }
                (None, Some(r)) => {
                    let r: Vec<S> = r.iter().map(|s| s.to_scalar()).collect::<Result<_>>()?;
                    DecayingAtomicRep::from_r(n, u, r)?
                }
                _ => {
                    return Err(Error::Spec(
                        "decaying_atomic needs exactly one of lambda, r".into(),
                    ))
                }
            };
            Ok(RowContraction::DecayingAtomic(rep))
        }
        "compression" => {
            #[derive(Deserialize)]
            #[serde(tag = "kind", rename_all = "snake_case")]
            enum P {
                Monomial {
                    word_set: WordSetSpec,
                },
                Complement {
                    generators: Vec<GeneratorSpec>,
                },
                Spanned {
                    #[serde(default)]
                    extras: Vec<Vec<VectorEntry>>,
                    generators: Vec<GeneratorSpec>,
                    orbit: OrbitSpec,
                },
            }
            let p: P = from_value(&raw.payload, "compression")?;
            let n = require_n(raw)?;
            let rep = match p {
                P::Monomial { word_set } => {
                    let set = match word_set {
                        WordSetSpec::BinaryExpansion { bits } => WordSet::BinaryExpansion {
                            bits: bits.iter().map(|&b| b != 0).collect(),
                        },
                        WordSetSpec::EndsWith { letter } => WordSet::EndsWith { letter },
                        WordSetSpec::Chain { letter } => WordSet::Chain { letter },
                    };
                    CompressionRep::monomial(n, set)?
                }
                P::Complement { generators } => {
                    let gens = generators
                        .iter()
                        .map(|g| parse_generator(n, g))
                        .collect::<Result<_>>()?;
                    CompressionRep::complement_of_orbits(n, gens, tol)?
                }
                P::Spanned { extras, generators, orbit } => {
                    let extras = extras
                        .iter()
                        .map(|e| parse_vector(n, e))
                        .collect::<Result<_>>()?;
                    let gens: Vec<Generator<S>> = generators
                        .iter()
                        .map(|g| parse_generator(n, g))
                        .collect::<Result<_>>()?;
                    let orbit = match orbit {
                        OrbitSpec::All(ref s) if s == "all" => OrbitSet::All,
                        OrbitSpec::All(ref s) => {
                            return Err(Error::Spec(format!("unknown orbit {s:?}")))
                        }
                        OrbitSpec::NotEndingIn { not_ending_in } => {
                            OrbitSet::NotEndingIn(not_ending_in)
                        }
                    };
                    CompressionRep::spanned_domain(n, extras, gens, orbit, tol)?
                }
            };
            Ok(RowContraction::Compression(rep))
        }
        "direct_sum" => {
            #[derive(Deserialize)]
            struct P {
                left: Value,
                right: Value,
            }
            let p: P = from_value(&raw.payload, "direct_sum")?;
            direct_sum(parse_spec_value(&p.left, tol)?, parse_spec_value(&p.right, tol)?)
        }
        "unitary_mix" => {
            #[derive(Deserialize)]
            struct P {
                inner: Value,
                matrix: Vec<Vec<ScalarSpec>>,
            }
            let p: P = from_value(&raw.payload, "unitary_mix")?;
            let inner: RowContraction<S> = parse_spec_value(&p.inner, tol)?;
            let dim = p.matrix.len();
            if p.matrix.iter().any(|r| r.len() != dim) {
                return Err(Error::Spec("mixing matrix must be square".into()));
            }
            let mut u = Mat::zeros(dim, dim);
            for (i, r) in p.matrix.iter().enumerate() {
                for (j, s) in r.iter().enumerate() {
                    u[(i, j)] = s.to_scalar()?;
                }
            }
            unitary_mix(inner, u, tol)
        }
        other => Err(Error::Spec(format!("unknown representation type {other:?}"))),
    }
}
