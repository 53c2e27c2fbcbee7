//! Exhaustive survey of every valid code on `n ≤ 4` neurons.
//!
//! A code's id is its word set read as a bitset over the `2^n` subsets:
//! bit `m` is set iff the word with mask `m` is a codeword. Rows come out
//! in ascending id order whatever the thread schedule.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, Method, Property};
use crate::code::Code;
use crate::error::{Error, Result};
use crate::ideal::canonical_form;

pub const SURVEY_MAX_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub id: u64,
    pub maximal_codewords: usize,
    pub maximal_intervals: usize,
    pub cf_size: usize,
    pub cf_non_monomials: usize,
    pub ic: bool,
    pub mic: bool,
    /// All three IC deciders agree, and all three MIC deciders agree.
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub codes: usize,
    pub intersection_complete: usize,
    pub max_intersection_complete: usize,
    pub disagreements: usize,
    /// Largest number of non-monomial CF elements, keyed by the number of
    /// maximal codewords.
    pub max_non_monomials_by_maximal_codewords: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Survey {
    pub n: usize,
    pub rows: Vec<SurveyRow>,
    pub summary: SurveySummary,
}

/// The code with the given id, or `None` for the empty and full word sets.
pub fn code_from_id(n: usize, id: u64) -> Option<Code> {
    let words = (0..1u32 << n).filter(|m| id >> m & 1 == 1).map(|m| m as u16);
    Code::from_masks(n, words).ok()
}

pub fn code_id(code: &Code) -> u64 {
    code.words().iter().fold(0u64, |id, w| id | 1 << w.mask())
}

fn verdicts(code: &Code, property: Property) -> Result<Vec<bool>> {
    Method::ALL
        .iter()
        .map(|&m| classify(code, property, m).map(|r| r.verdict))
        .collect()
}

pub fn survey_row(code: &Code) -> Result<SurveyRow> {
    let cf = canonical_form(code)?;
    let ic = verdicts(code, Property::IntersectionComplete)?;
    let mic = verdicts(code, Property::MaxIntersectionComplete)?;
    let agree = ic.iter().all(|&v| v == ic[0]) && mic.iter().all(|&v| v == mic[0]);
    Ok(SurveyRow {
        id: code_id(code),
        maximal_codewords: code.maximal_codewords().len(),
        maximal_intervals: code.maximal_intervals().len(),
        cf_size: cf.len(),
        cf_non_monomials: cf.non_monomials().len(),
        ic: ic[0],
        mic: mic[0],
        agree,
    })
}

/// Classifies every valid code on `n` neurons.
pub fn survey(n: usize) -> Result<Survey> {
    if n == 0 {
        return Err(Error::NeuronCount(0));
    }
    if n > SURVEY_MAX_N {
        let codes = (1u128 << (1u32 << n.min(7))) - 2;
        return Err(Error::SurveyTooLarge { n, codes, max: SURVEY_MAX_N });
    }
    let last = (1u64 << (1u32 << n)) - 1;
    let rows: Vec<SurveyRow> = (1..last)
        .into_par_iter()
        .map(|id| survey_row(&code_from_id(n, id).expect("ids strictly between 0 and full are valid")))
        .collect::<Result<_>>()?;

    let mut by_maximal = BTreeMap::new();
    for r in &rows {
        let e = by_maximal.entry(r.maximal_codewords).or_insert(0);
        *e = (*e).max(r.cf_non_monomials);
    }
    let summary = SurveySummary {
        codes: rows.len(),
        intersection_complete: rows.iter().filter(|r| r.ic).count(),
        max_intersection_complete: rows.iter().filter(|r| r.mic).count(),
        disagreements: rows.iter().filter(|r| !r.agree).count(),
        max_non_monomials_by_maximal_codewords: by_maximal,
    };
    Ok(Survey { n, rows, summary })
}

impl Survey {
    /// Tab-separated rows with `#`-prefixed header and footer lines.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# survey n={}", self.n);
        out.push_str("id\tmax_codewords\tmax_intervals\tcf\tcf_non_monomial\tic\tmic\tagree\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.id, r.maximal_codewords, r.maximal_intervals, r.cf_size, r.cf_non_monomials, r.ic, r.mic, r.agree
            );
        }
        let s = &self.summary;
        let _ = writeln!(out, "# codes: {}", s.codes);
        let _ = writeln!(out, "# intersection-complete: {}", s.intersection_complete);
        let _ = writeln!(out, "# max-intersection-complete: {}", s.max_intersection_complete);
        let _ = writeln!(out, "# disagreements: {}", s.disagreements);
        for (k, v) in &s.max_non_monomials_by_maximal_codewords {
            let _ = writeln!(out, "# max non-monomial CF elements with {k} maximal codewords: {v}");
        }
        out
    }
}
