//! The `dorroh/1` exchange format.
//!
//! Documents are JSON objects carrying `format`, `field`, `kind` and a
//! kind-specific payload. Scalars are strings in canonical form, tensors are
//! sparse lists of `[i, j, k, "c"]` entries sorted lexicographically, and
//! object keys are emitted in sorted order, so emitting a parsed document
//! reproduces it byte for byte.

use serde_json::{Map, Value};

use crate::algebra::{
    AlgebraMorphism, AlgebraTriple, Algebra, BimoduleAction, DorrohPairAlgebra, ModuleOverAlgebra,
};
use crate::coalgebra::{
    BicomoduleCoaction, Coalgebra, CoalgebraMorphism, CoalgebraTriple, ComoduleOverCoalgebra,
    DorrohPairCoalgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, SparseTensor3};
use crate::findual::RecurrentSequence;
use crate::Side;

pub const FORMAT: &str = "dorroh/1";

#[derive(Clone, Debug)]
pub enum Morphism {
    Algebra(AlgebraMorphism),
    Coalgebra(CoalgebraMorphism),
}

#[derive(Clone, Debug)]
pub enum Document {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    PairAlgebra(DorrohPairAlgebra),
    PairCoalgebra(DorrohPairCoalgebra),
    Module(ModuleOverAlgebra),
    Comodule(ComoduleOverCoalgebra),
    Morphism(Morphism),
    Sequence(RecurrentSequence),
    TripleAlgebra(AlgebraTriple),
    TripleCoalgebra(CoalgebraTriple),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Coalgebra(_) => "coalgebra",
            Document::PairAlgebra(_) => "pair-algebra",
            Document::PairCoalgebra(_) => "pair-coalgebra",
            Document::Module(_) => "module",
            Document::Comodule(_) => "comodule",
            Document::Morphism(_) => "morphism",
            Document::Sequence(_) => "sequence",
            Document::TripleAlgebra(_) => "triple-algebra",
            Document::TripleCoalgebra(_) => "triple-coalgebra",
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Document::Algebra(a) => a.field(),
            Document::Coalgebra(c) => c.field(),
            Document::PairAlgebra(p) => p.field(),
            Document::PairCoalgebra(p) => p.field(),
            Document::Module(m) => m.algebra().field(),
            Document::Comodule(m) => m.coalgebra().field(),
            Document::Morphism(Morphism::Algebra(m)) => m.source().field(),
            Document::Morphism(Morphism::Coalgebra(m)) => m.source().field(),
            Document::Sequence(s) => s.field(),
            Document::TripleAlgebra(t) => t.a1.field(),
            Document::TripleCoalgebra(t) => t.c1.field(),
        }
    }
}

// ---------------------------------------------------------------- emitting

fn tensor_value(t: &SparseTensor3) -> Value {
    Value::Array(
        t.iter()
            .map(|(idx, c)| {
                let mut e: Vec<Value> = idx.iter().map(|&i| Value::from(i)).collect();
                e.push(Value::String(c.to_string()));
                Value::Array(e)
            })
            .collect(),
    )
}

fn scalars_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn with_labels(mut m: Map<String, Value>, labels: Option<&[String]>) -> Map<String, Value> {
    if let Some(ls) = labels {
        m.insert("labels".into(), Value::Array(ls.iter().cloned().map(Value::String).collect()));
    }
    m
}

fn algebra_value(a: &Algebra) -> Value {
    let mut m = Map::new();
    m.insert("dim".into(), a.dim().into());
    m.insert("mul".into(), tensor_value(a.mul()));
    Value::Object(with_labels(m, a.labels()))
}

fn coalgebra_value(c: &Coalgebra) -> Value {
    let mut m = Map::new();
    m.insert("dim".into(), c.dim().into());
    m.insert("delta".into(), tensor_value(c.delta()));
    Value::Object(with_labels(m, c.labels()))
}

fn action_value(a: &BimoduleAction) -> Value {
    let mut m = Map::new();
    m.insert("left".into(), tensor_value(a.left()));
    m.insert("right".into(), tensor_value(a.right()));
    Value::Object(m)
}

fn coaction_value(a: &BicomoduleCoaction) -> Value {
    let mut m = Map::new();
    m.insert("rho_l".into(), tensor_value(a.rho_l()));
    m.insert("rho_r".into(), tensor_value(a.rho_r()));
    Value::Object(m)
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| scalars_value(m.row(r))).collect())
}

fn payload(doc: &Document) -> Map<String, Value> {
    let mut m = Map::new();
    match doc {
        Document::Algebra(a) => return as_map(algebra_value(a)),
        Document::Coalgebra(c) => return as_map(coalgebra_value(c)),
        Document::PairAlgebra(p) => {
            m.insert("A".into(), algebra_value(p.a()));
            m.insert("I".into(), algebra_value(p.i()));
            m.extend(as_map(action_value(p.action())));
        }
        Document::PairCoalgebra(p) => {
            m.insert("C".into(), coalgebra_value(p.c()));
            m.insert("P".into(), coalgebra_value(p.p()));
            m.extend(as_map(coaction_value(p.coaction())));
        }
        Document::Module(md) => {
            m.insert("algebra".into(), algebra_value(md.algebra()));
            m.insert("dim".into(), md.dim().into());
            m.insert("side".into(), md.side().as_str().into());
            if let Some(t) = md.left() {
                m.insert("left".into(), tensor_value(t));
            }
            if let Some(t) = md.right() {
                m.insert("right".into(), tensor_value(t));
            }
        }
        Document::Comodule(cm) => {
            m.insert("coalgebra".into(), coalgebra_value(cm.coalgebra()));
            m.insert("dim".into(), cm.dim().into());
            m.insert("side".into(), cm.side().as_str().into());
            if let Some(t) = cm.left() {
                m.insert("rho_l".into(), tensor_value(t));
            }
            if let Some(t) = cm.right() {
                m.insert("rho_r".into(), tensor_value(t));
            }
        }
        Document::Morphism(Morphism::Algebra(f)) => {
            m.insert("category".into(), "algebra".into());
            m.insert("source".into(), algebra_value(f.source()));
            m.insert("target".into(), algebra_value(f.target()));
            m.insert("matrix".into(), matrix_value(f.matrix()));
        }
        Document::Morphism(Morphism::Coalgebra(f)) => {
            m.insert("category".into(), "coalgebra".into());
            m.insert("source".into(), coalgebra_value(f.source()));
            m.insert("target".into(), coalgebra_value(f.target()));
            m.insert("matrix".into(), matrix_value(f.matrix()));
        }
        Document::Sequence(s) => {
            if let Some(s0) = s.s0() {
                m.insert("s0".into(), Value::String(s0.to_string()));
            }
            m.insert("initial".into(), scalars_value(s.initial()));
            m.insert("recurrence".into(), scalars_value(s.coeffs()));
        }
        Document::TripleAlgebra(t) => {
            m.insert("A1".into(), algebra_value(&t.a1));
            m.insert("A2".into(), algebra_value(&t.a2));
            m.insert("A3".into(), algebra_value(&t.a3));
            m.insert("A1_on_A2".into(), action_value(&t.a1_on_a2));
            m.insert("A1_on_A3".into(), action_value(&t.a1_on_a3));
            m.insert("A2_on_A3".into(), action_value(&t.a2_on_a3));
        }
        Document::TripleCoalgebra(t) => {
            m.insert("C1".into(), coalgebra_value(&t.c1));
            m.insert("C2".into(), coalgebra_value(&t.c2));
            m.insert("C3".into(), coalgebra_value(&t.c3));
            m.insert("C1_on_C2".into(), coaction_value(&t.c1_on_c2));
            m.insert("C1_on_C3".into(), coaction_value(&t.c1_on_c3));
            m.insert("C2_on_C3".into(), coaction_value(&t.c2_on_c3));
        }
    }
    m
}

fn as_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("payload builders return objects"),
    }
}

/// Canonical text of a document, ending in a newline.
pub fn emit_document(doc: &Document) -> String {
    let mut m = payload(doc);
    m.insert("format".into(), FORMAT.into());
    m.insert("field".into(), doc.field().to_string().into());
    m.insert("kind".into(), doc.kind().into());
    let mut out = String::new();
    write_value(&Value::Object(m), 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &[Value]) -> bool {
    v.iter().all(|x| !x.is_array() && !x.is_object())
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, indent + 1, out);
                if i + 1 < m.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(a) if a.is_empty() || is_flat(a) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                if i + 1 < a.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

// ----------------------------------------------------------------- parsing

struct Reader {
    field: FieldSpec,
}

fn at(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("{path}: {msg}"))
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| at(path, "expected an object"))
}

fn member<'v>(m: &'v Map<String, Value>, key: &str, path: &str) -> Result<&'v Value> {
    m.get(key).ok_or_else(|| at(path, format!("missing key {key:?}")))
}

fn only_keys(m: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    match m.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(at(path, format!("unexpected key {k:?}"))),
        None => Ok(()),
    }
}

fn index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| at(path, "expected a non-negative integer"))
}

fn string<'v>(v: &'v Value, path: &str) -> Result<&'v str> {
    v.as_str().ok_or_else(|| at(path, "expected a string"))
}

impl Reader {
    fn scalar(&self, v: &Value, path: &str) -> Result<Scalar> {
        let s = string(v, path)?;
        self.field.parse(s).map_err(|e| at(path, e))
    }

    fn scalars(&self, v: &Value, path: &str) -> Result<Vec<Scalar>> {
        let a = v.as_array().ok_or_else(|| at(path, "expected an array"))?;
        a.iter()
            .enumerate()
            .map(|(i, x)| self.scalar(x, &format!("{path}[{i}]")))
            .collect()
    }

    fn tensor(&self, v: &Value, dims: [usize; 3], path: &str) -> Result<SparseTensor3> {
        let a = v.as_array().ok_or_else(|| at(path, "expected an array of entries"))?;
        let mut t = SparseTensor3::new(self.field, dims);
        let mut seen = std::collections::BTreeSet::new();
        for (n, e) in a.iter().enumerate() {
            let p = format!("{path}[{n}]");
            let parts = e.as_array().filter(|x| x.len() == 4).ok_or_else(|| {
                at(&p, "expected [i, j, k, \"c\"]")
            })?;
            let mut idx = [0; 3];
            for d in 0..3 {
                idx[d] = index(&parts[d], &p)?;
                if idx[d] >= dims[d] {
                    return Err(at(&p, format!("index {} out of range 0..{}", idx[d], dims[d])));
                }
            }
            if !seen.insert(idx) {
                return Err(at(&p, format!("duplicate entry for {idx:?}")));
            }
            t.set(idx, self.scalar(&parts[3], &p)?);
        }
        Ok(t)
    }

    fn labels(&self, m: &Map<String, Value>, dim: usize, path: &str) -> Result<Option<Vec<String>>> {
        let Some(v) = m.get("labels") else {
            return Ok(None);
        };
        let a = v.as_array().ok_or_else(|| at(path, "labels must be an array"))?;
        if a.len() != dim {
            return Err(at(path, format!("{} labels for dimension {dim}", a.len())));
        }
        a.iter()
            .map(|x| string(x, path).map(str::to_string))
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    fn algebra(&self, v: &Value, path: &str) -> Result<Algebra> {
        let m = object(v, path)?;
        only_keys(m, &["dim", "labels", "mul"], path)?;
        let dim = index(member(m, "dim", path)?, &format!("{path}.dim"))?;
        let mul = self.tensor(member(m, "mul", path)?, [dim; 3], &format!("{path}.mul"))?;
        let a = Algebra::new(self.field, dim, mul)?;
        Ok(match self.labels(m, dim, path)? {
            Some(l) => a.with_labels(l)?,
            None => a,
        })
    }

    fn coalgebra(&self, v: &Value, path: &str) -> Result<Coalgebra> {
        let m = object(v, path)?;
        only_keys(m, &["dim", "labels", "delta"], path)?;
        let dim = index(member(m, "dim", path)?, &format!("{path}.dim"))?;
        let delta = self.tensor(member(m, "delta", path)?, [dim; 3], &format!("{path}.delta"))?;
        let c = Coalgebra::new(self.field, dim, delta)?;
        Ok(match self.labels(m, dim, path)? {
            Some(l) => c.with_labels(l)?,
            None => c,
        })
    }

    fn action(&self, m: &Map<String, Value>, na: usize, ni: usize, path: &str) -> Result<BimoduleAction> {
        let left = self.tensor(member(m, "left", path)?, [na, ni, ni], &format!("{path}.left"))?;
        let right = self.tensor(member(m, "right", path)?, [ni, na, ni], &format!("{path}.right"))?;
        BimoduleAction::new(left, right)
    }

    fn coaction(&self, m: &Map<String, Value>, nc: usize, np: usize, path: &str) -> Result<BicomoduleCoaction> {
        let rho_l = self.tensor(member(m, "rho_l", path)?, [np, nc, np], &format!("{path}.rho_l"))?;
        let rho_r = self.tensor(member(m, "rho_r", path)?, [np, np, nc], &format!("{path}.rho_r"))?;
        BicomoduleCoaction::new(rho_l, rho_r)
    }

    fn matrix(&self, v: &Value, rows: usize, cols: usize, path: &str) -> Result<Matrix> {
        let a = v.as_array().ok_or_else(|| at(path, "expected an array of rows"))?;
        if a.len() != rows {
            return Err(at(path, format!("expected {rows} rows, found {}", a.len())));
        }
        let mut out = Vec::with_capacity(rows);
        for (r, row) in a.iter().enumerate() {
            let p = format!("{path}[{r}]");
            let row = self.scalars(row, &p)?;
            if row.len() != cols {
                return Err(at(&p, format!("expected {cols} entries, found {}", row.len())));
            }
            out.push(row);
        }
        if rows == 0 {
            return Ok(Matrix::zeros(self.field, 0, cols));
        }
        Matrix::from_rows(self.field, out)
    }

    fn side(v: &Value, path: &str) -> Result<Side> {
        string(v, path)?.parse().map_err(|e| at(path, e))
    }

    fn document(&self, kind: &str, m: &Map<String, Value>) -> Result<Document> {
        let header = ["format", "field", "kind"];
        let keys = |extra: &[&str]| {
            let all: Vec<&str> = header.iter().chain(extra).copied().collect();
            only_keys(m, &all, "$")
        };
        Ok(match kind {
            "algebra" => {
                let mut inner = m.clone();
                for h in header {
                    inner.remove(h);
                }
                Document::Algebra(self.algebra(&Value::Object(inner), "$")?)
            }
            "coalgebra" => {
                let mut inner = m.clone();
                for h in header {
                    inner.remove(h);
                }
                Document::Coalgebra(self.coalgebra(&Value::Object(inner), "$")?)
            }
            "pair-algebra" => {
                keys(&["A", "I", "left", "right"])?;
                let a = self.algebra(member(m, "A", "$")?, "$.A")?;
                let i = self.algebra(member(m, "I", "$")?, "$.I")?;
                let act = self.action(m, a.dim(), i.dim(), "$")?;
                Document::PairAlgebra(DorrohPairAlgebra::new(a, i, act)?)
            }
            "pair-coalgebra" => {
                keys(&["C", "P", "rho_l", "rho_r"])?;
                let c = self.coalgebra(member(m, "C", "$")?, "$.C")?;
                let p = self.coalgebra(member(m, "P", "$")?, "$.P")?;
                let co = self.coaction(m, c.dim(), p.dim(), "$")?;
                Document::PairCoalgebra(DorrohPairCoalgebra::new(c, p, co)?)
            }
            "module" => {
                keys(&["algebra", "dim", "side", "left", "right"])?;
                let a = self.algebra(member(m, "algebra", "$")?, "$.algebra")?;
                let d = index(member(m, "dim", "$")?, "$.dim")?;
                let side = Self::side(member(m, "side", "$")?, "$.side")?;
                let n = a.dim();
                let left = m.get("left").map(|v| self.tensor(v, [n, d, d], "$.left")).transpose()?;
                let right = m.get("right").map(|v| self.tensor(v, [d, n, d], "$.right")).transpose()?;
                Document::Module(ModuleOverAlgebra::new(a, d, side, left, right)?)
            }
            "comodule" => {
                keys(&["coalgebra", "dim", "side", "rho_l", "rho_r"])?;
                let c = self.coalgebra(member(m, "coalgebra", "$")?, "$.coalgebra")?;
                let d = index(member(m, "dim", "$")?, "$.dim")?;
                let side = Self::side(member(m, "side", "$")?, "$.side")?;
                let n = c.dim();
                let left = m.get("rho_l").map(|v| self.tensor(v, [d, n, d], "$.rho_l")).transpose()?;
                let right = m.get("rho_r").map(|v| self.tensor(v, [d, d, n], "$.rho_r")).transpose()?;
                Document::Comodule(ComoduleOverCoalgebra::new(c, d, side, left, right)?)
            }
            "morphism" => {
                keys(&["category", "source", "target", "matrix"])?;
                let cat = string(member(m, "category", "$")?, "$.category")?;
                let mv = member(m, "matrix", "$")?;
                match cat {
                    "algebra" => {
                        let s = self.algebra(member(m, "source", "$")?, "$.source")?;
                        let t = self.algebra(member(m, "target", "$")?, "$.target")?;
                        let mat = self.matrix(mv, t.dim(), s.dim(), "$.matrix")?;
                        Document::Morphism(Morphism::Algebra(AlgebraMorphism::new(s, t, mat)?))
                    }
                    "coalgebra" => {
                        let s = self.coalgebra(member(m, "source", "$")?, "$.source")?;
                        let t = self.coalgebra(member(m, "target", "$")?, "$.target")?;
                        let mat = self.matrix(mv, t.dim(), s.dim(), "$.matrix")?;
                        Document::Morphism(Morphism::Coalgebra(CoalgebraMorphism::new(s, t, mat)?))
                    }
                    other => return Err(at("$.category", format!("unknown category {other:?}"))),
                }
            }
            "sequence" => {
                keys(&["s0", "initial", "recurrence"])?;
                let s0 = m.get("s0").map(|v| self.scalar(v, "$.s0")).transpose()?;
                let initial = self.scalars(member(m, "initial", "$")?, "$.initial")?;
                let coeffs = self.scalars(member(m, "recurrence", "$")?, "$.recurrence")?;
                Document::Sequence(
                    RecurrentSequence::new(self.field, s0, initial, coeffs).map_err(|e| at("$", e))?,
                )
            }
            "triple-algebra" => {
                keys(&["A1", "A2", "A3", "A1_on_A2", "A1_on_A3", "A2_on_A3"])?;
                let a: Vec<Algebra> = ["A1", "A2", "A3"]
                    .iter()
                    .map(|k| self.algebra(member(m, k, "$")?, &format!("$.{k}")))
                    .collect::<Result<_>>()?;
                let act = |key: &str, x: usize, y: usize| -> Result<BimoduleAction> {
                    let p = format!("$.{key}");
                    self.action(object(member(m, key, "$")?, &p)?, a[x].dim(), a[y].dim(), &p)
                };
                let (a12, a13, a23) = (act("A1_on_A2", 0, 1)?, act("A1_on_A3", 0, 2)?, act("A2_on_A3", 1, 2)?);
                let [a1, a2, a3]: [Algebra; 3] = a.try_into().expect("three components");
                Document::TripleAlgebra(AlgebraTriple::new([a1, a2, a3], a12, a13, a23)?)
            }
            "triple-coalgebra" => {
                keys(&["C1", "C2", "C3", "C1_on_C2", "C1_on_C3", "C2_on_C3"])?;
                let c: Vec<Coalgebra> = ["C1", "C2", "C3"]
                    .iter()
                    .map(|k| self.coalgebra(member(m, k, "$")?, &format!("$.{k}")))
                    .collect::<Result<_>>()?;
                let co = |key: &str, x: usize, y: usize| -> Result<BicomoduleCoaction> {
                    let p = format!("$.{key}");
                    self.coaction(object(member(m, key, "$")?, &p)?, c[x].dim(), c[y].dim(), &p)
                };
                let (c12, c13, c23) = (co("C1_on_C2", 0, 1)?, co("C1_on_C3", 0, 2)?, co("C2_on_C3", 1, 2)?);
                let [c1, c2, c3]: [Coalgebra; 3] = c.try_into().expect("three components");
                Document::TripleCoalgebra(CoalgebraTriple::new([c1, c2, c3], c12, c13, c23)?)
            }
            other => return Err(at("$.kind", format!("unknown kind {other:?}"))),
        })
    }
}

/// Parses a document. Errors name the JSON path (or line and column for
/// syntax errors) of the offending item.
pub fn parse_document(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| {
        Error::Input(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    let m = object(&v, "$")?;
    let format = string(member(m, "format", "$")?, "$.format")?;
    if format != FORMAT {
        return Err(at("$.format", format!("unsupported format {format:?}, expected {FORMAT:?}")));
    }
    let field: FieldSpec = string(member(m, "field", "$")?, "$.field")?
        .parse()
        .map_err(|e| at("$.field", e))?;
    let kind = string(member(m, "kind", "$")?, "$.kind")?;
    Reader { field }.document(kind, m)
}
