//! Command-line front end: parse model specifications, dispatch to the
//! library, and emit deterministic JSON reports on standard output.
//!
//! Exit status: 0 on success, 1 on semantic failures (the library error is
//! serialized as JSON on stdout), 2 on parse failures (a diagnostic naming
//! the offending token and position goes to stderr).

mod model;

use clap::{Parser, Subcommand};
use model::{parse_eigenvalues, parse_sigma, ModelSpec};
use parhopf::chevalley::{ChevalleyAlgebra, ChevalleyAxiomReport};
use parhopf::hopf::{
    affine_moduli_dimension, canonical_contracting_sigma, contraction_spectrum, hopf_report,
    poincare_dulac_resonances, ConnectionModuli, ContractionSigma, Eigenvalue, HopfReport,
    PoincareDulac, SpectrumEntry,
};
use parhopf::parabolic::{
    build_parabolic, check_delta_compactness, effectivity_check, DeltaCompactnessReport,
    EffectivityReport, LanglandsDims, ParabolicData,
};
use parhopf::rat::{rat_str, rat_to_f64};
use parhopf::rootsys::{DynkinSpec, Root, RootSystem};
use parhopf::verify::{verify_model, ModelVerification};
use parhopf::Error;
use serde::Serialize;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "parhopf", version, about = "Exact Lie-theoretic reports for parabolic models and Hopf classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a root system with its exact gram matrix
    Roots { spec: String },
    /// Dump the Chevalley structure-constant table and axiom report
    Chevalley { spec: String },
    /// Parabolic partition, delta-weight, dimension split and checks
    Parabolic { model: String },
    /// Contraction spectrum of a Cartan element on the noncompact negatives
    Contract {
        model: String,
        /// Rational coefficient list for sigma, e.g. "1,1/2"; defaults to -delta
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
    },
    /// Resonance relations of a strictly contracting eigenvalue tuple
    Resonances {
        /// JSON [[re,im],...] or exact polar list "1/2∠0,1/4∠90"
        #[arg(long)]
        eigenvalues: String,
    },
    /// Full Hopf classification report for a parabolic model
    Report {
        model: String,
        /// Rational coefficient list for sigma; defaults to -delta
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
    },
    /// Run every invariant suite of every module on each listed model
    Verify {
        #[arg(required = true)]
        models: Vec<String>,
    },
}

#[derive(Serialize)]
struct RootsDoc {
    spec: String,
    rank: usize,
    root_count: usize,
    positive_roots: Vec<Root>,
    roots: Vec<Root>,
    gram: Vec<Vec<String>>,
    cartan_matrix: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct NTableEntry {
    alpha: Root,
    beta: Root,
    n: i64,
}

#[derive(Serialize)]
struct CorootEntry {
    root: Root,
    coords: Vec<i64>,
}

#[derive(Serialize)]
struct ChevalleyDoc {
    spec: String,
    dimension: usize,
    n_table: Vec<NTableEntry>,
    coroots: Vec<CorootEntry>,
    axioms: ChevalleyAxiomReport,
}

#[derive(Serialize)]
struct ParabolicDoc {
    model: String,
    spec: String,
    crossed: Vec<usize>,
    compact_roots: Vec<Root>,
    noncompact_positive: Vec<Root>,
    noncompact_negative: Vec<Root>,
    delta: Vec<String>,
    langlands_dims: LanglandsDims,
    delta_compactness: DeltaCompactnessReport,
    effectivity: EffectivityReport,
}

#[derive(Serialize)]
struct ContractDoc {
    model: String,
    sigma: Vec<[String; 2]>,
    sigma_source: &'static str,
    strictly_contracting: bool,
    spectrum: Vec<SpectrumEntry>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum EigenvalueDoc {
    Polar { modulus: String, turns: String },
    Log { re: String, im: String },
    Float { re: f64, im: f64 },
}

impl From<&Eigenvalue> for EigenvalueDoc {
    fn from(e: &Eigenvalue) -> EigenvalueDoc {
        match e {
            Eigenvalue::ExactPolar { modulus, turns } => {
                EigenvalueDoc::Polar { modulus: rat_str(modulus), turns: rat_str(turns) }
            }
            Eigenvalue::ExactLog { re, im } => {
                EigenvalueDoc::Log { re: rat_str(re), im: rat_str(im) }
            }
            Eigenvalue::Float { re, im } => EigenvalueDoc::Float { re: *re, im: *im },
        }
    }
}

#[derive(Serialize)]
struct ResonancesDoc {
    eigenvalues: Vec<EigenvalueDoc>,
    moduli_count: usize,
    moduli_relations: Vec<ConnectionModuli>,
    poincare_dulac: Vec<PoincareDulac>,
    formally_linearizable: bool,
}

#[derive(Serialize)]
struct VerifyDoc {
    models: Vec<ModelVerification>,
    pass: bool,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: &'static str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDoc {
    error: ErrorBody,
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::InvalidComponent { .. } => "invalid_component",
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::NotARoot(_) => "not_a_root",
        Error::DegenerateRootString => "degenerate_root_string",
        Error::MixedAlgebra { .. } => "mixed_algebra",
        Error::MismatchedRootSystem { .. } => "mismatched_root_system",
        Error::CrossedNodeOutOfRange { .. } => "crossed_node_out_of_range",
        Error::NotAPartition { .. } => "not_a_partition",
        Error::NotASubalgebra { .. } => "not_a_subalgebra",
        Error::NonReductiveSplit { .. } => "non_reductive_split",
        Error::BadTorsionSupport => "bad_torsion_support",
        Error::DegenerateParabolic => "degenerate_parabolic",
        Error::NotEffective { .. } => "not_effective",
        Error::NotContracting { .. } => "not_contracting",
        Error::ZeroEigenvalue { .. } => "zero_eigenvalue",
        Error::MaxTermsTooSmall(_) => "max_terms_too_small",
        Error::Invariant(_) => "invariant",
    }
}

fn build_system(spec: &DynkinSpec) -> parhopf::Result<Arc<RootSystem>> {
    Ok(Arc::new(RootSystem::build(spec.clone())?))
}

fn parabolic_of(model: &ModelSpec) -> parhopf::Result<ParabolicData> {
    let rs = build_system(&model.dynkin)?;
    build_parabolic(rs, model.crossed.as_deref().unwrap_or(&[]))
}

fn sigma_of(pd: &ParabolicData, flag: Option<&str>) -> parhopf::Result<(ContractionSigma, &'static str)> {
    match flag {
        Some(s) => Ok((ContractionSigma::from_rational(parse_sigma(s)?), "given")),
        None => Ok((canonical_contracting_sigma(pd)?, "canonical")),
    }
}

fn run(command: Command) -> parhopf::Result<String> {
    let doc = match command {
        Command::Roots { spec } => {
            let rs = build_system(&DynkinSpec::parse(&spec)?)?;
            let gram = rs
                .gram()
                .iter()
                .map(|row| row.iter().map(rat_str).collect())
                .collect();
            to_json(&RootsDoc {
                spec: rs.fingerprint(),
                rank: rs.rank(),
                root_count: rs.num_roots(),
                positive_roots: rs.positive_roots().to_vec(),
                roots: rs.roots().to_vec(),
                gram,
                cartan_matrix: rs.cartan_matrix().to_vec(),
            })
        }
        Command::Chevalley { spec } => {
            let rs = build_system(&DynkinSpec::parse(&spec)?)?;
            let alg = ChevalleyAlgebra::build(rs.clone());
            let n_table = alg
                .n_table_entries()
                .into_iter()
                .map(|(alpha, beta, n)| NTableEntry { alpha, beta, n })
                .collect();
            let coroots = rs
                .positive_roots()
                .iter()
                .map(|r| {
                    let coords = alg.coroot_coordinates(r).expect("own root").to_vec();
                    CorootEntry { root: r.clone(), coords }
                })
                .collect();
            to_json(&ChevalleyDoc {
                spec: rs.fingerprint(),
                dimension: alg.dim(),
                n_table,
                coroots,
                axioms: alg.verify_axioms(),
            })
        }
        Command::Parabolic { model } => {
            let model = ModelSpec::parse(&model)?;
            let pd = parabolic_of(&model)?;
            let rs = pd.root_system().clone();
            let alg = ChevalleyAlgebra::build(rs.clone());
            let root_list = |idxs: &[usize]| -> Vec<Root> {
                idxs.iter().map(|&i| rs.root(i).clone()).collect()
            };
            to_json(&ParabolicDoc {
                model: pd.fingerprint(),
                spec: rs.fingerprint(),
                crossed: pd.crossed().iter().copied().collect(),
                compact_roots: root_list(pd.compact()),
                noncompact_positive: root_list(pd.noncompact_pos()),
                noncompact_negative: root_list(pd.noncompact_neg()),
                delta: pd.delta().iter().map(rat_str).collect(),
                langlands_dims: pd.langlands_dims(),
                delta_compactness: check_delta_compactness(&pd),
                effectivity: effectivity_check(&alg, &pd)?,
            })
        }
        Command::Contract { model, sigma } => {
            let model = ModelSpec::parse(&model)?;
            let pd = parabolic_of(&model)?;
            let (sigma, sigma_source) = sigma_of(&pd, sigma.as_deref())?;
            let spectrum = contraction_spectrum(&pd, &sigma)?;
            to_json(&ContractDoc {
                model: pd.fingerprint(),
                sigma: sigma
                    .coeffs
                    .iter()
                    .map(|c| [rat_str(&c.re), rat_str(&c.im)])
                    .collect(),
                sigma_source,
                strictly_contracting: spectrum.strictly_contracting(),
                spectrum: spectrum
                    .entries()
                    .iter()
                    .map(|(root, mu)| SpectrumEntry {
                        root: root.clone(),
                        mu: [rat_str(&mu.re), rat_str(&mu.im)],
                        modulus_approx: rat_to_f64(&mu.re).exp(),
                    })
                    .collect(),
            })
        }
        Command::Resonances { eigenvalues } => {
            let eigs = parse_eigenvalues(&eigenvalues)?;
            let (moduli_count, moduli_relations) = affine_moduli_dimension(&eigs)?;
            let poincare_dulac = poincare_dulac_resonances(&eigs)?;
            to_json(&ResonancesDoc {
                eigenvalues: eigs.iter().map(EigenvalueDoc::from).collect(),
                moduli_count,
                moduli_relations,
                formally_linearizable: poincare_dulac.is_empty(),
                poincare_dulac,
            })
        }
        Command::Report { model, sigma } => {
            let model = ModelSpec::parse(&model)?;
            let pd = parabolic_of(&model)?;
            let (sigma, _) = sigma_of(&pd, sigma.as_deref())?;
            let report: HopfReport = hopf_report(&pd, &sigma)?;
            to_json(&report)
        }
        Command::Verify { models } => {
            let mut results = Vec::new();
            for m in &models {
                let model = ModelSpec::parse(m)?;
                results.push(verify_model(&model.dynkin, model.crossed.as_deref())?);
            }
            let pass = results.iter().all(|r| r.pass);
            to_json(&VerifyDoc { models: results, pass })
        }
    };
    Ok(doc)
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("report serialization cannot fail")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(json) => {
            println!("{json}");
            ExitCode::SUCCESS
        }
        Err(e @ Error::Parse { .. }) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
        Err(e) => {
            let doc = ErrorDoc { error: ErrorBody { kind: error_kind(&e), message: e.to_string() } };
            println!("{}", to_json(&doc));
            ExitCode::from(1)
        }
    }
}
