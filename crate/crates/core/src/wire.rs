//! JSON forms of elements, certificates and arrow chains.
//!
//! Finite parts travel as reduced words (1-based generator indices), so a
//! file is readable without knowing how elements are stored. Field order is
//! fixed by the struct definitions, which keeps output byte-deterministic.

use serde::{Deserialize, Serialize};

use crate::affine::AffineElement;
use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::geck_pfeiffer::ArrowStep;
use crate::group::{Group, GroupMode};
use crate::reduction::{CaseLabel, LengthPattern, ReductionCertificate, ReductionStep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireElement {
    pub lambda: Vec<i64>,
    pub word: Vec<usize>,
}

impl WireElement {
    pub fn from_element(sys: &CoxeterSystem, x: &AffineElement) -> Self {
        WireElement {
            lambda: x.translation().coords().to_vec(),
            word: sys.reduced_word(x.finite()),
        }
    }

    /// Accepts any word, reduced or not.
    pub fn to_element(&self, group: &Group) -> Result<AffineElement> {
        let w = group.weyl().element_from_word(&self.word)?;
        group.element(self.lambda.clone(), w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireStep {
    pub gen: usize,
    pub case: CaseLabel,
    /// `[l(x), l(sx), l(xs), l(sxs)]`.
    pub lengths: [usize; 4],
    pub after: WireElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireCertificate {
    pub group: String,
    pub lambda: Vec<i64>,
    pub word: Vec<usize>,
    pub steps: Vec<WireStep>,
    pub terminal: WireElement,
    pub elliptic: bool,
    /// Integer representative of the Kottwitz point.
    pub kappa: i64,
}

impl WireCertificate {
    pub fn from_certificate(group: &Group, cert: &ReductionCertificate) -> Self {
        let sys = group.weyl();
        let start = WireElement::from_element(sys, &cert.start);
        WireCertificate {
            group: group.name(),
            lambda: start.lambda,
            word: start.word,
            steps: cert
                .steps
                .iter()
                .map(|s| WireStep {
                    gen: s.generator,
                    case: s.case,
                    lengths: s.lengths.to_array(),
                    after: WireElement::from_element(sys, &s.after),
                })
                .collect(),
            terminal: WireElement::from_element(sys, &cert.terminal),
            elliptic: cert.terminal_elliptic,
            kappa: cert.kappa.to_integer(),
        }
    }

    /// Rebuilds the certificate without checking it; see
    /// [`crate::reduction::verify_certificate`].
    pub fn to_certificate(&self) -> Result<(Group, ReductionCertificate)> {
        let group = Group::new(self.group.parse::<GroupMode>()?)?;
        let start = WireElement {
            lambda: self.lambda.clone(),
            word: self.word.clone(),
        }
        .to_element(&group)?;
        let mut before = start.clone();
        let mut steps = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            let after = s.after.to_element(&group)?;
            steps.push(ReductionStep {
                before: before.clone(),
                generator: s.gen,
                after: after.clone(),
                case: s.case,
                lengths: LengthPattern::from_array(s.lengths),
            });
            before = after;
        }
        let cert = ReductionCertificate {
            start,
            steps,
            terminal: self.terminal.to_element(&group)?,
            terminal_elliptic: self.elliptic,
            kappa: group.kappa_from_integer(self.kappa)?,
        };
        Ok((group, cert))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("certificate JSON: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireArrow {
    pub source: Vec<usize>,
    pub generator: usize,
    pub target: Vec<usize>,
}

pub fn arrow_chain(sys: &CoxeterSystem, chain: &[ArrowStep]) -> Vec<WireArrow> {
    chain
        .iter()
        .map(|a| WireArrow {
            source: sys.reduced_word(&a.source),
            generator: a.generator,
            target: sys.reduced_word(&a.target),
        })
        .collect()
}
