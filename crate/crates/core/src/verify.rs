//! Recomputes the catalogue's recorded invariants and a handful of general
//! identities, and reports each comparison as one record.

use std::fmt;
use std::fmt::Write as _;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::algebra::LieAlgebra;
use crate::catalogue::{self, cite, CatalogueEntry, Invariant};
use crate::error::{Error, Result};
use crate::format::format_rational;
use crate::hopf::{self, PresentationOptions};
use crate::linalg::{int, Scalar};
use crate::multiplier::{self, bound_checks, multiplier_report};

/// The invariant tuple used to match an algebra against the main theorem's
/// list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub n: usize,
    pub dim_derived: usize,
    pub dim_center: usize,
    pub class: usize,
    pub dim_m: usize,
    pub s: i64,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.n, self.dim_derived, self.dim_center, self.class, self.dim_m, self.s
        )
    }
}

pub fn fingerprint(l: &LieAlgebra) -> Result<Fingerprint> {
    if l.is_abelian() {
        return Err(Error::AbelianInput);
    }
    let class = l.nilpotency_class()?;
    let r = multiplier_report(l)?;
    Ok(Fingerprint {
        n: l.dim(),
        dim_derived: r.dim_b2,
        dim_center: l.center().dim(),
        class,
        dim_m: r.dim_m,
        s: r.s.expect("non-abelian"),
    })
}

fn member_fingerprints() -> &'static [(&'static str, Fingerprint)] {
    static CACHE: OnceLock<Vec<(&'static str, Fingerprint)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        catalogue::main_theorem_list()
            .into_iter()
            .map(|(label, e)| {
                let l = e.algebra().expect("main theorem members validate");
                (
                    label,
                    fingerprint(&l).expect("main theorem members are nilpotent"),
                )
            })
            .collect()
    })
}

/// Main theorem members (as printed) whose fingerprint equals that of `l`;
/// empty when `s(l) != 5`. More than one name means the fingerprint does not
/// separate them.
pub fn classify_s5(l: &LieAlgebra) -> Result<Vec<&'static str>> {
    let fp = fingerprint(l)?;
    if fp.s != 5 {
        return Ok(Vec::new());
    }
    Ok(member_fingerprints()
        .iter()
        .filter(|(_, f)| *f == fp)
        .map(|(label, _)| *label)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported, never asserted.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub invariant: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub citation: String,
}

impl Record {
    fn compare(
        name: &str,
        invariant: impl Into<String>,
        expected: String,
        computed: String,
        citation: &str,
    ) -> Self {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            name: name.to_string(),
            invariant: invariant.into(),
            expected,
            computed,
            status,
            citation: citation.to_string(),
        }
    }

    fn info(
        name: &str,
        invariant: impl Into<String>,
        expected: String,
        computed: String,
        citation: &str,
    ) -> Self {
        Self {
            status: Status::Info,
            ..Self::compare(name, invariant, expected, computed, citation)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> + '_ {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn is_success(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn summary(&self) -> String {
        let (p, f, i) = (
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Info),
        );
        if f == 0 {
            format!("all expectations pass ({p} pass, {i} info)")
        } else {
            format!("{f} of {} expectations FAIL ({p} pass, {i} info)", p + f)
        }
    }

    /// Aligned columns with a header and a summary line.
    pub fn to_text(&self) -> String {
        let header = [
            "name",
            "invariant",
            "expected",
            "computed",
            "status",
            "citation",
        ];
        let rows: Vec<[String; 6]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.name.clone(),
                    r.invariant.clone(),
                    r.expected.clone(),
                    r.computed.clone(),
                    r.status.to_string(),
                    r.citation.clone(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.chars().count());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
        };
        line(&header.map(String::from));
        for row in &rows {
            line(row);
        }
        writeln!(out, "{}", self.summary()).unwrap();
        out
    }

    /// One tab-separated record per line:
    /// `name, invariant, expected, computed, status, citation`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.name, r.invariant, r.expected, r.computed, r.status, r.citation
            )
            .unwrap();
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Extra parameter values tried on parameterized entries.
    pub epsilon_samples: Vec<Scalar>,
    /// Also compute `dim M` through the Hopf formula and compare.
    pub oracle: bool,
    /// Keep only records with exactly this citation.
    pub citation: Option<String>,
    pub parallel: bool,
    pub basis_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            epsilon_samples: vec![int(0), int(-1), int(2)],
            oracle: false,
            citation: None,
            parallel: true,
            basis_cap: hopf::hall::basis_cap_from_env(),
        }
    }
}

pub const ORACLE_CITATION: &str = "hopf oracle";
pub const VALIDATION_CITATION: &str = "jacobi";

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn multiplier_text(
    dim_m: Option<usize>,
    s: Option<i64>,
    r: &multiplier::MultiplierReport,
) -> String {
    let mut parts = Vec::new();
    if dim_m.is_some() {
        parts.push(r.dim_m.to_string());
    }
    if s.is_some() {
        parts.push(r.s.map_or("undefined".into(), |s| s.to_string()));
    }
    parts.join(", ")
}

fn computed_invariant(l: &LieAlgebra, invariant: Invariant) -> Result<String> {
    Ok(match invariant {
        Invariant::Multiplier { dim_m, s } => multiplier_text(dim_m, s, &multiplier_report(l)?),
        Invariant::DerivedDim(_) => l.derived_subalgebra().dim().to_string(),
        Invariant::CenterDim(_) => l.center().dim().to_string(),
        Invariant::CenterInDerived => yes_no(l.center().is_subspace_of(&l.derived_subalgebra())),
        Invariant::CenterEqualsDerived => yes_no(l.center() == l.derived_subalgebra()),
        Invariant::Class(_) => l.nilpotency_class()?.to_string(),
        Invariant::Capable(_) => yes_no(hopf::cover_and_epicenter(l)?.is_capable),
    })
}

fn entry_records(e: &CatalogueEntry, options: &VerifyOptions) -> Vec<Record> {
    let wanted = |citation: &str| options.citation.as_deref().is_none_or(|c| c == citation);
    let mut out = Vec::new();
    let l = match e.algebra() {
        Ok(l) => l,
        Err(err) => {
            if wanted(VALIDATION_CITATION) {
                out.push(Record::compare(
                    e.name(),
                    "validate",
                    "valid".into(),
                    err.to_string(),
                    VALIDATION_CITATION,
                ));
            }
            return out;
        }
    };
    for x in e.expectations() {
        if !wanted(x.source) {
            continue;
        }
        let computed = computed_invariant(&l, x.invariant).unwrap_or_else(|err| err.to_string());
        out.push(Record::compare(
            e.name(),
            x.invariant.label(),
            x.invariant.expected_text(),
            computed,
            x.source,
        ));
        if let Invariant::Multiplier { dim_m, s } = x.invariant {
            for (param, _) in e.parameters() {
                for value in &options.epsilon_samples {
                    let swept = e
                        .algebra_with(&[(param, value.clone())])
                        .and_then(|m| multiplier_report(&m))
                        .map(|r| multiplier_text(dim_m, s, &r))
                        .unwrap_or_else(|err| err.to_string());
                    let label = format!(
                        "{} @ {param}={}",
                        x.invariant.label(),
                        format_rational(value)
                    );
                    out.push(Record::info(
                        e.name(),
                        label,
                        x.invariant.expected_text(),
                        swept,
                        x.source,
                    ));
                }
            }
        }
    }
    if options.oracle && wanted(ORACLE_CITATION) {
        let opts = PresentationOptions {
            basis_cap: options.basis_cap,
            ..Default::default()
        };
        let cohomology = multiplier::schur_multiplier_dim(&l).map(|v| v.to_string());
        let expected = cohomology.unwrap_or_else(|err| err.to_string());
        match hopf::Presentation::with_options(&l, opts) {
            Ok(p) => out.push(Record::compare(
                e.name(),
                "dim M (hopf)",
                expected,
                p.multiplier_dim().to_string(),
                ORACLE_CITATION,
            )),
            Err(err) => out.push(Record::info(
                e.name(),
                "dim M (hopf)",
                expected,
                err.to_string(),
                ORACLE_CITATION,
            )),
        }
    }
    out
}

/// Every recorded catalogue expectation, recomputed.
pub fn verify_tables(options: &VerifyOptions) -> VerificationReport {
    let entries = catalogue::list_entries();
    let per_entry: Vec<Vec<Record>> = if options.parallel {
        entries
            .par_iter()
            .map(|e| entry_records(e, options))
            .collect()
    } else {
        entries.iter().map(|e| entry_records(e, options)).collect()
    };
    VerificationReport {
        records: per_entry.into_iter().flatten().collect(),
    }
}

pub mod lemma {
    pub const HEISENBERG_SUMS: &str = "dim L^2 = 1 case";
    pub const NONCAPABLE_BOUND: &str = "non-capable bound";
    pub const GENERALIZED_HEISENBERG: &str = "generalized Heisenberg rank 3";
    pub const EXACT_SEQUENCE: &str = "class-two exact sequence";
    pub const S_AND_T: &str = "definitions of s and t";
    pub const MULTIPLIER_BOUNDS: &str = "multiplier bounds";
}

/// General identities checked on the catalogue and on small families:
///
/// - `s(H(m) ⊕ A(k))` is 0 for `m = 1` and 2 for `m = 2, 3` (`k <= 3`);
/// - `n - 3 < s(L)` for entries recorded as non-capable with `dim L^2 >= 2`;
/// - `dim ker g = n - 3` for 37B, 37C and 37D;
/// - exactness and `K ⊆ ker g` for every class-two entry;
/// - `t - s = n - 2` for every non-abelian entry;
/// - `s = 5` for every main theorem member;
/// - the upper bounds on `dim M` for every entry.
pub fn lemma_suite() -> VerificationReport {
    let mut records = Vec::new();

    for m in 1..=3 {
        for k in 0..=3 {
            let h = LieAlgebra::heisenberg(m);
            let l = if k == 0 {
                h
            } else {
                h.direct_sum(&LieAlgebra::abelian(k))
            };
            let s = multiplier::s_invariant(&l).map_or_else(|e| e.to_string(), |s| s.to_string());
            let expected = if m == 1 { "0" } else { "2" };
            records.push(Record::compare(
                &format!("H({m})⊕A({k})"),
                "s",
                expected.into(),
                s,
                lemma::HEISENBERG_SUMS,
            ));
        }
    }

    let entries = catalogue::list_entries();
    let analysed: Vec<_> = entries
        .par_iter()
        .map(|e| {
            let Ok(l) = e.algebra() else {
                return Vec::new();
            };
            let mut out = Vec::new();
            let noncapable = e
                .expectations()
                .iter()
                .any(|x| x.invariant == Invariant::Capable(false));
            if noncapable && l.derived_subalgebra().dim() >= 2 {
                let r = multiplier_report(&l).unwrap();
                out.push(Record::compare(
                    e.name(),
                    "n - 3 < s",
                    "yes".into(),
                    yes_no(((l.dim() as i64) - 3) < r.s.unwrap()),
                    lemma::NONCAPABLE_BOUND,
                ));
            }
            if ["37B", "37C", "37D"].contains(&e.name()) {
                let g = hopf::ganea_data(&l).map(|g| g.dim_ker_g().to_string());
                out.push(Record::compare(
                    e.name(),
                    "dim ker g",
                    (l.dim() - 3).to_string(),
                    g.unwrap_or_else(|err| err.to_string()),
                    lemma::GENERALIZED_HEISENBERG,
                ));
            }
            if l.nilpotency_class() == Ok(2) {
                match hopf::ganea_data(&l) {
                    Ok(g) => {
                        out.push(Record::compare(
                            e.name(),
                            "exactness sum",
                            "0".into(),
                            g.exactness_sum().to_string(),
                            lemma::EXACT_SEQUENCE,
                        ));
                        out.push(Record::compare(
                            e.name(),
                            "K in ker g",
                            "yes".into(),
                            yes_no(g.k_in_kernel()),
                            lemma::EXACT_SEQUENCE,
                        ));
                    }
                    Err(err) => out.push(Record::compare(
                        e.name(),
                        "exactness sum",
                        "0".into(),
                        err.to_string(),
                        lemma::EXACT_SEQUENCE,
                    )),
                }
            }
            if !l.is_abelian() {
                let r = multiplier_report(&l).unwrap();
                out.push(Record::compare(
                    e.name(),
                    "t - s",
                    (l.dim() as i64 - 2).to_string(),
                    (r.t - r.s.unwrap()).to_string(),
                    lemma::S_AND_T,
                ));
            }
            let bounds = bound_checks(&l, Some(noncapable)).unwrap();
            for c in &bounds.checks {
                out.push(Record::compare(
                    e.name(),
                    format!("bound {}", c.name),
                    "holds".into(),
                    if c.holds() {
                        "holds".into()
                    } else {
                        c.to_string()
                    },
                    lemma::MULTIPLIER_BOUNDS,
                ));
            }
            out
        })
        .collect();
    records.extend(analysed.into_iter().flatten());

    for (label, e) in catalogue::main_theorem_list() {
        let s = e
            .algebra()
            .and_then(|l| multiplier::s_invariant(&l))
            .map_or_else(|err| err.to_string(), |s| s.to_string());
        records.push(Record::compare(
            label,
            "s",
            "5".into(),
            s,
            cite::MAIN_THEOREM,
        ));
    }

    VerificationReport { records }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::get;

    #[test]
    fn fingerprints() {
        let h = LieAlgebra::heisenberg(1);
        let fp = fingerprint(&h).unwrap();
        assert_eq!(
            (
                fp.n,
                fp.dim_derived,
                fp.dim_center,
                fp.class,
                fp.dim_m,
                fp.s
            ),
            (3, 1, 1, 2, 2, 0)
        );
        let fp = fingerprint(&get("L_{6,10}").unwrap()).unwrap();
        assert_eq!(fp.to_string(), "(6, 2, 1, 3, 6, 5)");
        assert_eq!(
            fingerprint(&get("37B").unwrap()).unwrap().to_string(),
            "(7, 3, 3, 2, 11, 5)"
        );
        assert_eq!(
            fingerprint(&LieAlgebra::abelian(3)).unwrap_err(),
            Error::AbelianInput
        );
    }

    #[test]
    fn classify_small_cases() {
        assert!(classify_s5(&LieAlgebra::heisenberg(1)).unwrap().is_empty());
        assert_eq!(
            classify_s5(&get("L_{6,10}").unwrap()).unwrap(),
            vec!["L_{6,10}"]
        );
    }

    #[test]
    fn report_formats() {
        let report = VerificationReport {
            records: vec![Record::compare(
                "37B",
                "dim M, s",
                "11, 5".into(),
                "11, 5".into(),
                "Table 4",
            )],
        };
        assert_eq!(
            report.to_tsv(),
            "37B\tdim M, s\t11, 5\t11, 5\tpass\tTable 4\n"
        );
        assert!(report
            .to_text()
            .ends_with("all expectations pass (1 pass, 0 info)\n"));
    }
}
