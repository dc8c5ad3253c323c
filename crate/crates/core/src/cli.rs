//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a checked property fails
//! (the report names a witness), 2 for usage and input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{
    build_dorroh_algebra, check_associativity, check_dorroh_pair_algebra,
    check_iterated_algebra_triple, check_module, find_identity, split_algebra_extension,
    unit_commutes_report, unital_ideal_iso, verify_algebra_morphism,
};
use crate::coalgebra::{
    build_dorroh_coalgebra, check_coassociativity, check_comodule, check_dorroh_pair_coalgebra,
    check_iterated_coalgebra_triple, counit_balance_check, counital_split_iso, find_counit,
    split_coalgebra_extension, verify_coalgebra_morphism,
};
use crate::duality::{
    double_dual_iso, dual_actions, dual_algebra_of_coalgebra, dual_coalgebra_of_algebra,
    dualize_algebra_pair, dualize_coalgebra_pair,
};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Scalar};
use crate::findual::{
    decomposition_report, default_depth, dorroh_decompose, minimal_recurrence,
    shift_decomposition, vanishing_check, RecurrentSequence,
};
use crate::format::{emit_document, parse_document, Document, Morphism};
use crate::gallery::{self, Instance, Triple};
use crate::report::Report;
use crate::Verified;

#[derive(Parser, Debug)]
#[command(name = "dorroh", version, about = "Exact checks and constructions for Dorroh extensions")]
struct Cli {
    /// Report form.
    #[arg(long, value_enum, default_value_t = ReportForm::Text, global = true)]
    report: ReportForm,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportForm {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IsoKind {
    #[value(name = "prop1.1", alias = "unital-ideal")]
    UnitalIdeal,
    CounitalSplit,
    Duality,
    Associator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeqCommand {
    Minrec,
    Coproduct,
    Dorroh,
    Vanish,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a document of any kind.
    Check { file: PathBuf },
    /// Build the extension of a pair.
    Build {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Split an algebra or coalgebra along two complementary spans.
    Split {
        file: PathBuf,
        /// Vectors separated by `;`, each `e<i>` or comma-separated scalars.
        #[arg(long = "a-basis")]
        a_basis: String,
        #[arg(long = "i-basis")]
        i_basis: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Dualize a structure, module or pair.
    Dualize {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Construct and verify a comparison isomorphism.
    Iso {
        #[arg(long, value_enum)]
        which: IsoKind,
        file: PathBuf,
    },
    /// Work with recurrent sequences in the finite dual of k[x].
    Findual {
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum)]
        command: SeqCommand,
        /// Order bound for `minrec`.
        #[arg(long = "r-max")]
        r_max: Option<usize>,
        /// Ascending coefficients of a monic polynomial for `vanish`.
        #[arg(long)]
        poly: Option<String>,
    },
    /// List or emit catalog instances, pairs and triples.
    Gallery {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// Outcome of a command before rendering.
enum Outcome {
    Report(Report),
    Document(Document, Option<PathBuf>, Report),
    Text(String),
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    form: ReportForm,
}

impl Io<'_> {
    fn report(&mut self, rep: &Report) {
        let text = match self.form {
            ReportForm::Text => rep.to_string(),
            ReportForm::Json => rep.to_json() + "\n",
        };
        let _ = self.out.write_all(text.as_bytes());
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io {
        out,
        err,
        form: cli.report,
    };
    match execute(cli.command) {
        Ok(Outcome::Report(rep)) => {
            io.report(&rep);
            exit_code(&rep)
        }
        Ok(Outcome::Document(doc, path, rep)) => {
            let text = emit_document(&doc);
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        let _ = writeln!(io.err, "error: cannot write {}: {e}", p.display());
                        return 2;
                    }
                    io.report(&rep);
                }
                None => {
                    let _ = io.out.write_all(text.as_bytes());
                }
            }
            exit_code(&rep)
        }
        Ok(Outcome::Text(t)) => {
            let _ = io.out.write_all(t.as_bytes());
            0
        }
        Err(e) => render_error(&mut io, e),
    }
}

fn exit_code(rep: &Report) -> i32 {
    if rep.is_pass() {
        0
    } else {
        1
    }
}

fn render_error(io: &mut Io<'_>, e: Error) -> i32 {
    let (rep, code) = match e {
        Error::Check(rep) => (*rep, 1),
        Error::NotSubalgebra(ref w) | Error::NotSubcoalgebra(ref w) => {
            let mut r = Report::new();
            r.fail_with("span is closed", w.clone(), e.to_string());
            (r, 1)
        }
        Error::NotIdeal(ref w) | Error::NotCoideal(ref w) => {
            let mut r = Report::new();
            r.fail_with("complement is an ideal", w.clone(), e.to_string());
            (r, 1)
        }
        other => {
            let _ = writeln!(io.err, "error: {other}");
            if io.form == ReportForm::Json {
                let mut r = Report::new();
                r.error("input", other.to_string());
                let _ = writeln!(io.out, "{}", r.to_json());
            }
            return 2;
        }
    };
    io.report(&rep);
    code
}

fn read_document(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| match e {
        Error::Input(m) => Error::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn unsupported(what: &str, doc: &Document) -> Error {
    Error::Input(format!("{what} does not apply to a {} document", doc.kind()))
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Check { file } => Ok(Outcome::Report(check(read_document(&file)?)?)),
        Command::Build { file, output } => {
            let doc = read_document(&file)?;
            let built = match &doc {
                Document::PairAlgebra(p) => Document::Algebra(build_dorroh_algebra(p.validated()?)?),
                Document::PairCoalgebra(p) => Document::Coalgebra(build_dorroh_coalgebra(p.validated()?)?),
                Document::TripleAlgebra(t) => Document::Algebra(t.build_left()?),
                Document::TripleCoalgebra(t) => Document::Coalgebra(t.build_left()?),
                other => return Err(unsupported("build", other)),
            };
            let rep = check(built.clone())?;
            Ok(Outcome::Document(built, output, rep))
        }
        Command::Split {
            file,
            a_basis,
            i_basis,
            output,
        } => {
            let doc = read_document(&file)?;
            let (pair, verified) = match &doc {
                Document::Algebra(b) => {
                    let a = parse_basis(&a_basis, b.field(), b.dim())?;
                    let i = parse_basis(&i_basis, b.field(), b.dim())?;
                    let (p, iso) = split_algebra_extension(b, &a, &i)?;
                    (Document::PairAlgebra(p), iso.verified())
                }
                Document::Coalgebra(d) => {
                    let c = parse_basis(&a_basis, d.field(), d.dim())?;
                    let p = parse_basis(&i_basis, d.field(), d.dim())?;
                    let (pair, iso) = split_coalgebra_extension(d, &c, &p)?;
                    (Document::PairCoalgebra(pair), iso.verified())
                }
                other => return Err(unsupported("split", other)),
            };
            let mut rep = check(pair.clone())?;
            rep.record("extension of the split is isomorphic to the input", iso_witness(verified));
            Ok(Outcome::Document(pair, output, rep))
        }
        Command::Dualize { file, output } => {
            let doc = read_document(&file)?;
            let mut rep = Report::new();
            let dual = match &doc {
                Document::Algebra(a) => Document::Coalgebra(dual_coalgebra_of_algebra(a)),
                Document::Coalgebra(c) => Document::Algebra(dual_algebra_of_coalgebra(c)),
                Document::Module(m) => Document::Comodule(dual_actions(m)),
                Document::PairAlgebra(p) => {
                    let (q, w) = dualize_algebra_pair(p)?;
                    rep.record("(A ⋉ I)* → A* ⋉ I* is a coalgebra isomorphism", iso_witness(w.verified()));
                    Document::PairCoalgebra(q)
                }
                Document::PairCoalgebra(p) => {
                    let (q, w) = dualize_coalgebra_pair(p)?;
                    rep.record("C* ⋉ P* → (C ⋉ P)* is an algebra isomorphism", iso_witness(w.verified()));
                    Document::PairAlgebra(q)
                }
                other => return Err(unsupported("dualize", other)),
            };
            let mut checks = check(dual.clone())?;
            checks.absorb("", rep);
            Ok(Outcome::Document(dual, output, checks))
        }
        Command::Iso { which, file } => Ok(Outcome::Report(iso(which, read_document(&file)?)?)),
        Command::Findual {
            seq,
            depth,
            command,
            r_max,
            poly,
        } => findual(read_document(&seq)?, depth, command, r_max, poly.as_deref()),
        Command::Gallery {
            list,
            emit,
            field,
            output,
        } => {
            let field: FieldSpec = field.parse()?;
            match (list, emit) {
                (true, _) => Ok(Outcome::Text(gallery_listing())),
                (false, Some(name)) => {
                    let doc = gallery_document(&name, field)?;
                    let rep = check(doc.clone())?;
                    Ok(Outcome::Document(doc, output, rep))
                }
                (false, None) => Err(Error::Input("gallery needs --list or --emit <name>".into())),
            }
        }
    }
}

fn iso_witness(v: Verified) -> Option<Vec<usize>> {
    (v != Verified::Iso).then(Vec::new)
}

/// Runs the validator matching the document kind.
pub fn check(doc: Document) -> Result<Report> {
    Ok(match &doc {
        Document::Algebra(a) => {
            let mut rep = check_associativity(a);
            rep.pass(match find_identity(a) {
                Some(_) => "identity element: found",
                None => "identity element: none",
            });
            rep
        }
        Document::Coalgebra(c) => {
            let mut rep = check_coassociativity(c);
            rep.pass(match find_counit(c) {
                Some(_) => "counit: found",
                None => "counit: none",
            });
            rep
        }
        Document::PairAlgebra(p) => check_dorroh_pair_algebra(p),
        Document::PairCoalgebra(p) => check_dorroh_pair_coalgebra(p),
        Document::Module(m) => check_module(m),
        Document::Comodule(m) => check_comodule(m),
        Document::Morphism(Morphism::Algebra(f)) => verify_algebra_morphism(&mut f.clone()),
        Document::Morphism(Morphism::Coalgebra(f)) => verify_coalgebra_morphism(&mut f.clone()),
        Document::Sequence(s) => {
            let dec = shift_decomposition(s)?;
            decomposition_report(s, &dec, default_depth(s))?
        }
        Document::TripleAlgebra(t) => check_iterated_algebra_triple(t)?.0,
        Document::TripleCoalgebra(t) => check_iterated_coalgebra_triple(t)?.0,
    })
}

fn iso(which: IsoKind, doc: Document) -> Result<Report> {
    let mut rep = Report::new();
    match (which, &doc) {
        (IsoKind::UnitalIdeal, Document::PairAlgebra(p)) => {
            let mut f = unital_ideal_iso(p)?;
            rep.absorb("A ⋉ I → A × I", verify_algebra_morphism(&mut f));
            rep.record("A ⋉ I → A × I is bijective", iso_witness(f.verified()));
            let unit = p.i().unit().expect("checked by unital_ideal_iso").to_vec();
            rep.absorb("", unit_commutes_report(p, &unit));
        }
        (IsoKind::CounitalSplit, Document::PairCoalgebra(p)) => {
            let mut z = counital_split_iso(p)?;
            rep.absorb("ζ", verify_coalgebra_morphism(&mut z));
            rep.record("ζ is bijective", iso_witness(z.verified()));
            let eps = p.p().counit().expect("checked by counital_split_iso").to_vec();
            rep.absorb("", counit_balance_check(p, &eps)?);
        }
        (IsoKind::Duality, Document::Algebra(a)) => {
            let f = double_dual_iso(a)?;
            rep.record("A → A** is an algebra isomorphism", iso_witness(f.verified()));
        }
        (IsoKind::Duality, Document::Coalgebra(c)) => {
            let a = dual_algebra_of_coalgebra(c);
            let f = double_dual_iso(&a)?;
            rep.record("C* → C*** is an algebra isomorphism", iso_witness(f.verified()));
            rep.record(
                "C** = C",
                (dual_coalgebra_of_algebra(&a).delta() != c.delta()).then(Vec::new),
            );
        }
        (IsoKind::Duality, Document::PairAlgebra(p)) => {
            let (q, w) = dualize_algebra_pair(p)?;
            rep.record("(A ⋉ I)* → A* ⋉ I* is a coalgebra isomorphism", iso_witness(w.verified()));
            let (back, w2) = dualize_coalgebra_pair(&q)?;
            rep.record("A** ⋉ I** → (A* ⋉ I*)* is an algebra isomorphism", iso_witness(w2.verified()));
            rep.record("double dual of the pair equals the pair", pair_difference(p, &back));
        }
        (IsoKind::Duality, Document::PairCoalgebra(p)) => {
            let (q, w) = dualize_coalgebra_pair(p)?;
            rep.record("C* ⋉ P* → (C ⋉ P)* is an algebra isomorphism", iso_witness(w.verified()));
            let (back, w2) = dualize_algebra_pair(&q)?;
            rep.record("(C* ⋉ P*)* → C** ⋉ P** is a coalgebra isomorphism", iso_witness(w2.verified()));
            let same = back.c().delta() == p.c().delta()
                && back.p().delta() == p.p().delta()
                && back.coaction().rho_l() == p.coaction().rho_l()
                && back.coaction().rho_r() == p.coaction().rho_r();
            rep.record("double dual of the pair equals the pair", (!same).then(Vec::new));
        }
        (IsoKind::Associator, Document::TripleAlgebra(t)) => {
            let (r, _) = check_iterated_algebra_triple(t)?;
            rep = r;
        }
        (IsoKind::Associator, Document::TripleCoalgebra(t)) => {
            let (r, _) = check_iterated_coalgebra_triple(t)?;
            rep = r;
        }
        (_, other) => return Err(unsupported("this isomorphism", other)),
    }
    Ok(rep)
}

fn pair_difference(
    p: &crate::algebra::DorrohPairAlgebra,
    q: &crate::algebra::DorrohPairAlgebra,
) -> Option<Vec<usize>> {
    let same = p.a().mul() == q.a().mul()
        && p.i().mul() == q.i().mul()
        && p.action().left() == q.action().left()
        && p.action().right() == q.action().right();
    (!same).then(Vec::new)
}

fn findual(
    doc: Document,
    depth: Option<usize>,
    command: SeqCommand,
    r_max: Option<usize>,
    poly: Option<&str>,
) -> Result<Outcome> {
    let Document::Sequence(f) = doc else {
        return Err(unsupported("findual", &doc));
    };
    let depth = depth.unwrap_or_else(|| default_depth(&f));
    match command {
        SeqCommand::Minrec => {
            let r_max = r_max.unwrap_or(f.order().max(1) * 2);
            let prefix = f.prefix(depth.max(2 * r_max + 2));
            let mut rep = Report::new();
            match minimal_recurrence(&prefix, r_max)? {
                Some(r) => {
                    rep.pass(format!("minimal recurrence of order {} found", r.order()));
                    let r = r.with_s0(f.s0().cloned());
                    Ok(Outcome::Document(Document::Sequence(r), None, rep))
                }
                None => {
                    rep.fail("recurrent within the order bound", vec![r_max]);
                    Ok(Outcome::Report(rep))
                }
            }
        }
        SeqCommand::Coproduct => {
            let dec = shift_decomposition(&f)?;
            let mut rep = decomposition_report(&f, &dec, depth)?;
            rep.pass(format!("shift space rank {}", dec.rank));
            Ok(Outcome::Report(rep))
        }
        SeqCommand::Dorroh => Ok(Outcome::Report(dorroh_decompose(&f, depth)?)),
        SeqCommand::Vanish => {
            let p = match poly {
                Some(text) => parse_scalars(text, f.field())?,
                None => characteristic_polynomial(&f),
            };
            Ok(Outcome::Report(vanishing_check(&f, &p, depth)?))
        }
    }
}

/// `x^r - Σ c_i x^{r-i}` in ascending coefficients.
fn characteristic_polynomial(f: &RecurrentSequence) -> Vec<Scalar> {
    let r = f.order();
    let mut p: Vec<Scalar> = (0..r).map(|j| -&f.coeffs()[r - 1 - j]).collect();
    p.push(f.field().one());
    p
}

fn parse_scalars(text: &str, field: FieldSpec) -> Result<Vec<Scalar>> {
    text.split(',').map(|s| field.parse(s)).collect()
}

/// Parses `v1;v2;...` where each vector is `e<i>` or comma-separated scalars.
fn parse_basis(spec: &str, field: FieldSpec, dim: usize) -> Result<Vec<Vec<Scalar>>> {
    if spec.trim().is_empty() {
        return Ok(Vec::new());
    }
    spec.split(';')
        .map(|v| {
            let v = v.trim();
            if let Some(i) = v.strip_prefix('e') {
                let i: usize = i
                    .parse()
                    .map_err(|_| Error::Input(format!("bad basis vector {v:?}")))?;
                if i >= dim {
                    return Err(Error::Input(format!("basis index {i} out of range 0..{dim}")));
                }
                Ok(crate::exactlin::basis_vector(field, dim, i))
            } else {
                let x = parse_scalars(v, field)?;
                if x.len() != dim {
                    return Err(Error::Input(format!("vector {v:?} has {} entries, expected {dim}", x.len())));
                }
                Ok(x)
            }
        })
        .collect()
}

fn gallery_listing() -> String {
    let mut s = String::from("instances:\n");
    for e in gallery::CATALOG {
        s.push_str(&format!("  {}\n", e.name));
    }
    s.push_str("algebra pairs:\n");
    for (n, _) in gallery::ALGEBRA_PAIRS {
        s.push_str(&format!("  {n}\n"));
    }
    s.push_str("coalgebra pairs:\n");
    for (n, _) in gallery::COALGEBRA_PAIRS {
        s.push_str(&format!("  {n}\n"));
    }
    s.push_str("triples:\n");
    for n in gallery::TRIPLES {
        s.push_str(&format!("  {n}\n"));
    }
    s
}

/// The document for any gallery name: instance, pair or triple.
pub fn gallery_document(name: &str, field: FieldSpec) -> Result<Document> {
    if gallery::ALGEBRA_PAIRS.iter().any(|(n, _)| *n == name) {
        return Ok(Document::PairAlgebra(gallery::algebra_pair(name, field)?));
    }
    if gallery::COALGEBRA_PAIRS.iter().any(|(n, _)| *n == name) {
        return Ok(Document::PairCoalgebra(gallery::coalgebra_pair(name, field)?));
    }
    if gallery::TRIPLES.contains(&name) {
        return Ok(match gallery::triple(name, field)? {
            Triple::Algebra(t) => Document::TripleAlgebra(t),
            Triple::Coalgebra(t) => Document::TripleCoalgebra(t),
        });
    }
    Ok(match gallery::instance(name, field)? {
        Instance::Algebra(a) => Document::Algebra(a),
        Instance::Coalgebra(c) => Document::Coalgebra(c),
        Instance::Sequence(s) => Document::Sequence(s),
    })
}
