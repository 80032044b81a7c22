//! Building library values from a workspace and writing them back.

use std::collections::BTreeMap;

use homalg::complexes::CochainComplex;
use homalg::{Arrow, InternalHom, Matrix, ModZpk, Mor, Ob, Vect};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::workspace::{BackendKind, MapSpec, MorphismSpec, ObjectSpec, Params, WorkspaceFile};

/// A backend the command line can drive.
pub trait CliBackend: InternalHom {
    const KIND: BackendKind;

    fn from_params(params: &Params) -> Result<Self, CliError>;
    fn build_object(&self, spec: &ObjectSpec) -> Result<Ob<Self>, CliError>;
    fn build_morphism(&self, src: &Ob<Self>, dst: &Ob<Self>, rows: &[Vec<i64>]) -> Result<Mor<Self>, CliError>;
    fn object_spec(&self, a: &Ob<Self>) -> ObjectSpec;
    fn matrix(f: &Mor<Self>) -> &Matrix<u64>;
}

impl CliBackend for Vect {
    const KIND: BackendKind = BackendKind::Vect;

    fn from_params(params: &Params) -> Result<Self, CliError> {
        if params.k.is_some_and(|k| k != 1) {
            return Err(CliError::Input("the vect backend takes no exponent k".into()));
        }
        Vect::new(params.p).map_err(|e| CliError::Input(e.to_string()))
    }

    fn build_object(&self, spec: &ObjectSpec) -> Result<Ob<Self>, CliError> {
        match spec {
            ObjectSpec::Vect { dim } => Ok(self.space(*dim)),
            ObjectSpec::Mod { .. } => Err(CliError::Input("vect objects are given as {\"dim\": n}".into())),
        }
    }

    fn build_morphism(&self, src: &Ob<Self>, dst: &Ob<Self>, rows: &[Vec<i64>]) -> Result<Mor<Self>, CliError> {
        self.morphism_from_rows(src, dst, rows).map_err(|e| CliError::Input(e.to_string()))
    }

    fn object_spec(&self, a: &Ob<Self>) -> ObjectSpec {
        ObjectSpec::Vect { dim: a.dim() }
    }

    fn matrix(f: &Mor<Self>) -> &Matrix<u64> {
        f.matrix()
    }
}

impl CliBackend for ModZpk {
    const KIND: BackendKind = BackendKind::Mod;

    fn from_params(params: &Params) -> Result<Self, CliError> {
        let k = params.k.ok_or_else(|| CliError::Input("the mod backend needs params.k".into()))?;
        ModZpk::new(params.p, k).map_err(|e| CliError::Input(e.to_string()))
    }

    fn build_object(&self, spec: &ObjectSpec) -> Result<Ob<Self>, CliError> {
        match spec {
            ObjectSpec::Mod { exponents } => {
                if exponents.windows(2).any(|w| w[0] > w[1]) {
                    return Err(CliError::Input(format!("exponents {exponents:?} are not in ascending order")));
                }
                self.object(exponents.iter().copied()).map_err(|e| CliError::Input(e.to_string()))
            }
            ObjectSpec::Vect { .. } => {
                Err(CliError::Input("module objects are given as {\"exponents\": [...]}".into()))
            }
        }
    }

    fn build_morphism(&self, src: &Ob<Self>, dst: &Ob<Self>, rows: &[Vec<i64>]) -> Result<Mor<Self>, CliError> {
        self.morphism_from_rows(src, dst, rows).map_err(|e| CliError::Input(e.to_string()))
    }

    fn object_spec(&self, a: &Ob<Self>) -> ObjectSpec {
        ObjectSpec::Mod { exponents: a.exponents().to_vec() }
    }

    fn matrix(f: &Mor<Self>) -> &Matrix<u64> {
        f.matrix()
    }
}

/// A workspace with every reference resolved.
pub struct Loaded<C: CliBackend> {
    pub cat: C,
    pub params: Params,
    pub objects: BTreeMap<String, Ob<C>>,
    pub morphisms: BTreeMap<String, Mor<C>>,
    pub complexes: BTreeMap<String, CochainComplex<C>>,
    pub maps: BTreeMap<String, MapSpec>,
}

fn lookup<'a, V>(table: &'a BTreeMap<String, V>, kind: &str, name: &str) -> Result<&'a V, CliError> {
    table.get(name).ok_or_else(|| CliError::Input(format!("unknown {kind} '{name}'")))
}

impl<C: CliBackend> Loaded<C> {
    pub fn load(file: &WorkspaceFile) -> Result<Self, CliError> {
        if file.backend != C::KIND {
            return Err(CliError::Input("backend does not match the loader".into()));
        }
        let cat = C::from_params(&file.params)?;
        let objects = file
            .objects
            .iter()
            .map(|(name, spec)| {
                let o = cat.build_object(spec).map_err(|e| e.context(&format!("object '{name}'")))?;
                Ok((name.clone(), o))
            })
            .collect::<Result<BTreeMap<_, _>, CliError>>()?;
        let morphisms = file
            .morphisms
            .iter()
            .map(|(name, MorphismSpec { src, dst, matrix })| {
                let (s, t) = (lookup(&objects, "object", src)?, lookup(&objects, "object", dst)?);
                let m = cat.build_morphism(s, t, matrix).map_err(|e| e.context(&format!("morphism '{name}'")))?;
                Ok((name.clone(), m))
            })
            .collect::<Result<BTreeMap<_, _>, CliError>>()?;
        let complexes = file
            .complexes
            .iter()
            .map(|(name, spec)| {
                let objs = spec
                    .objects
                    .iter()
                    .map(|o| lookup(&objects, "object", o).cloned())
                    .collect::<Result<Vec<_>, _>>()?;
                let diffs = spec
                    .differentials
                    .iter()
                    .map(|d| lookup(&morphisms, "morphism", d).cloned())
                    .collect::<Result<Vec<_>, _>>()?;
                let x = CochainComplex::new(spec.lo, objs, diffs)
                    .map_err(|e| CliError::Input(format!("complex '{name}': {e}")))?;
                Ok((name.clone(), x))
            })
            .collect::<Result<BTreeMap<_, _>, CliError>>()?;
        for (name, spec) in &file.maps {
            lookup(&complexes, "complex", &spec.src)?;
            lookup(&complexes, "complex", &spec.dst)?;
            for c in &spec.components {
                lookup(&morphisms, "morphism", c).map_err(|e| e.context(&format!("map '{name}'")))?;
            }
        }
        Ok(Self { cat, params: file.params.clone(), objects, morphisms, complexes, maps: file.maps.clone() })
    }

    pub fn object(&self, name: &str) -> Result<&Ob<C>, CliError> {
        lookup(&self.objects, "object", name)
    }

    pub fn morphism(&self, name: &str) -> Result<&Mor<C>, CliError> {
        lookup(&self.morphisms, "morphism", name)
    }

    pub fn complex(&self, name: &str) -> Result<&CochainComplex<C>, CliError> {
        lookup(&self.complexes, "complex", name)
    }

    /// The workspace in canonical form: morphism entries are the library's
    /// reduced residues.
    pub fn export(&self, file: &WorkspaceFile) -> WorkspaceFile {
        let mut out = file.clone();
        for (name, spec) in out.morphisms.iter_mut() {
            spec.matrix = rows(C::matrix(&self.morphisms[name]));
        }
        for (name, spec) in out.objects.iter_mut() {
            *spec = self.cat.object_spec(&self.objects[name]);
        }
        out
    }
}

pub fn rows(m: &Matrix<u64>) -> Vec<Vec<i64>> {
    m.to_nested().into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect()
}

/// `{"canonical": "Z/2^1", "descriptor": {"exponents": [1]}}`.
pub fn object_json<C: CliBackend>(cat: &C, a: &Ob<C>) -> Value {
    json!({ "canonical": a.to_string(), "descriptor": cat.object_spec(a) })
}

pub fn morphism_json<C: CliBackend>(cat: &C, f: &Mor<C>) -> Value {
    json!({ "src": object_json(cat, f.src()), "dst": object_json(cat, f.dst()), "matrix": rows(C::matrix(f)) })
}
