//! JSON file formats and their conversion into core types.
//!
//! Every format carries a `schema` version field (currently 1, optional on
//! input). Groups, presentations and complexes may be inlined or referenced
//! by path; paths resolve relative to the referring file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use num_rational::Ratio;
use serde::Deserialize;
use serde_json::Value;

use orbitbound_core::bounds::{CoverData, ManifoldDescriptor, MonotonicityClass};
use orbitbound_core::complex::{
    Coefficients, GrTerm, GradedComplex, Grading, GroupRingEntry, GroupRingMatrix,
};
use orbitbound_core::group::{FiniteGroup, GroupOptions};
use orbitbound_core::linalg::PrimeFieldMatrix;
use orbitbound_core::novikov::{GroupRingCoeff, NovikovContext, NovikovSeries};
use orbitbound_core::presentation::Presentation;

pub const SCHEMA_VERSION: u32 = 1;

fn check_schema(schema: Option<u32>, what: &str) -> Result<()> {
    match schema {
        None | Some(SCHEMA_VERSION) => Ok(()),
        Some(v) => bail!("{what}: unsupported schema version {v} (expected {SCHEMA_VERSION})"),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

/// Inline value or `{"path": "..."}` reference.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path { path: String },
    Inline(T),
}

impl<T: serde::de::DeserializeOwned> Ref<T> {
    fn resolve(self, base: &Path) -> Result<(T, PathBuf)> {
        match self {
            Ref::Inline(v) => Ok((v, base.to_path_buf())),
            Ref::Path { path } => {
                let full = base.join(&path);
                let dir = full.parent().unwrap_or(base).to_path_buf();
                Ok((read_json(&full)?, dir))
            }
        }
    }
}

// ---- groups ---------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub schema: Option<u32>,
    #[allow(dead_code)] // accepted and documented, not used by any command yet
    pub name: Option<String>,
    pub permutation_generators: Option<Vec<Vec<usize>>>,
    pub multiplication_table: Option<Vec<Vec<usize>>>,
    pub element_labels: Option<Vec<String>>,
}

pub fn group_from_file(file: GroupFile, opts: GroupOptions) -> Result<Arc<FiniteGroup>> {
    check_schema(file.schema, "group file")?;
    let group = match (file.permutation_generators, file.multiplication_table) {
        (Some(gens), None) => FiniteGroup::from_permutations(&gens, opts)
            .map_err(|e| anyhow!("invalid permutation generators: {e}"))?,
        (None, Some(table)) => FiniteGroup::from_table(&table, file.element_labels, opts)
            .map_err(|e| anyhow!("invalid multiplication table: {e}"))?,
        (Some(_), Some(_)) => {
            bail!("group file has both permutation_generators and multiplication_table")
        }
        (None, None) => {
            bail!("group file needs permutation_generators or a multiplication_table")
        }
    };
    Ok(Arc::new(group))
}

pub fn load_group(path: &Path, opts: GroupOptions) -> Result<Arc<FiniteGroup>> {
    group_from_file(read_json(path)?, opts)
}

// ---- presentations ----------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub schema: Option<u32>,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

pub fn presentation_from_file(file: PresentationFile) -> Result<Presentation> {
    check_schema(file.schema, "presentation file")?;
    let gens: Vec<&str> = file.generators.iter().map(|s| s.as_str()).collect();
    let rels: Vec<&str> = file.relators.iter().map(|s| s.as_str()).collect();
    Presentation::parse(&gens, &rels).map_err(|e| anyhow!("bad relator: {e}"))
}

pub fn load_presentation(path: &Path) -> Result<Presentation> {
    presentation_from_file(read_json(path)?)
}

// ---- representation files ---------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub schema: Option<u32>,
    pub prime: u64,
    pub dim: usize,
    pub generator_images: Vec<Vec<Vec<i64>>>,
}

pub fn rep_matrices_from_file(file: &RepFile) -> Result<Vec<PrimeFieldMatrix>> {
    check_schema(file.schema, "representation file")?;
    if file.prime < 2 {
        bail!("representation file: prime must be at least 2");
    }
    file.generator_images
        .iter()
        .enumerate()
        .map(|(i, rows)| {
            if rows.len() != file.dim || rows.iter().any(|r| r.len() != file.dim) {
                bail!("representation file: image {i} is not {0}x{0}", file.dim);
            }
            let flat: Vec<i64> = rows.iter().flatten().copied().collect();
            Ok(PrimeFieldMatrix::from_signed(
                file.prime, file.dim, file.dim, &flat,
            ))
        })
        .collect()
}

// ---- complexes ----------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub schema: Option<u32>,
    pub grading: GradingSpec,
    pub ranks: BTreeMap<String, usize>,
    #[serde(default)]
    pub differentials: BTreeMap<String, Vec<Vec<Value>>>,
    pub group: Option<Ref<GroupFile>>,
    #[serde(default)]
    pub novikov_rank: usize,
    pub coefficients: Option<CoefficientsSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum GradingSpec {
    Z(String),
    Mod { r#mod: usize },
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CoefficientsSpec {
    Integer(String),
    PrimeField { prime: u64 },
}

fn parse_term(value: &Value, group: &FiniteGroup, novikov_rank: usize) -> Result<Vec<GrTerm>> {
    // a term: [coeff-or-group-ring, [e1..em]]; a bare integer entry is the
    // scalar shorthand
    let arr = value
        .as_array()
        .ok_or_else(|| anyhow!("term must be an array"))?;
    if arr.len() != 2 {
        bail!("term must be [coefficient, exponents]");
    }
    let expo: Vec<i64> = serde_json::from_value(arr[1].clone())
        .map_err(|_| anyhow!("exponent vector must be an integer array"))?;
    if !(expo.is_empty() || expo.len() == novikov_rank) {
        bail!(
            "exponent vector has rank {}, complex declares novikov_rank {novikov_rank}",
            expo.len()
        );
    }
    match &arr[0] {
        Value::Number(n) => {
            let coeff = n
                .as_i64()
                .ok_or_else(|| anyhow!("coefficient must be an integer"))?;
            Ok(vec![GrTerm {
                elem: group.identity(),
                expo,
                coeff,
            }])
        }
        Value::Array(pairs) => {
            let mut out = Vec::new();
            for p in pairs {
                let pair = p
                    .as_array()
                    .ok_or_else(|| anyhow!("group-ring term must be [int, label]"))?;
                if pair.len() != 2 {
                    bail!("group-ring term must be [int, label]");
                }
                let coeff = pair[0]
                    .as_i64()
                    .ok_or_else(|| anyhow!("group-ring coefficient must be an integer"))?;
                let label = pair[1]
                    .as_str()
                    .ok_or_else(|| anyhow!("group element must be a label string"))?;
                let elem = group
                    .element_by_label(label)
                    .ok_or_else(|| anyhow!("unknown group element label '{label}'"))?;
                out.push(GrTerm {
                    elem,
                    expo: expo.clone(),
                    coeff,
                });
            }
            Ok(out)
        }
        _ => bail!("coefficient must be an integer or a group-ring term list"),
    }
}

fn parse_entry(
    value: &Value,
    group: &FiniteGroup,
    novikov_rank: usize,
    coeffs: Coefficients,
) -> Result<GroupRingEntry> {
    // shorthand: a bare integer is the scalar c·1
    if let Value::Number(n) = value {
        let c = n
            .as_i64()
            .ok_or_else(|| anyhow!("entry must be an integer"))?;
        return Ok(GroupRingEntry::from_terms(
            vec![GrTerm {
                elem: group.identity(),
                expo: Vec::new(),
                coeff: c,
            }],
            coeffs,
        ));
    }
    let terms = value
        .as_array()
        .ok_or_else(|| anyhow!("entry must be an integer or a term list"))?;
    // preferred form: a list of [coefficient, exponents] terms; a single
    // term may also stand on its own, which the fallback accepts
    let as_list: Result<Vec<Vec<GrTerm>>> = terms
        .iter()
        .map(|t| parse_term(t, group, novikov_rank))
        .collect();
    match as_list {
        Ok(lists) => Ok(GroupRingEntry::from_terms(lists.concat(), coeffs)),
        Err(list_err) => match parse_term(value, group, novikov_rank) {
            Ok(single) => Ok(GroupRingEntry::from_terms(single, coeffs)),
            Err(_) => Err(list_err),
        },
    }
}

pub fn complex_from_file(
    file: ComplexFile,
    base: &Path,
    opts: GroupOptions,
) -> Result<GradedComplex> {
    check_schema(file.schema, "complex file")?;
    let group = match file.group {
        None => Arc::new(FiniteGroup::trivial()),
        Some(r) => {
            let (gf, _) = r.resolve(base)?;
            group_from_file(gf, opts)?
        }
    };
    let coefficients = match file.coefficients {
        None => Coefficients::Integer,
        Some(CoefficientsSpec::Integer(ref s)) if s == "integer" => Coefficients::Integer,
        Some(CoefficientsSpec::Integer(ref s)) => {
            bail!("unknown coefficient ring '{s}' (use \"integer\" or {{\"prime\": p}})")
        }
        Some(CoefficientsSpec::PrimeField { prime }) => Coefficients::PrimeField(prime),
    };
    let grading = match file.grading {
        GradingSpec::Z(ref s) if s == "Z" => {
            let lo = file
                .ranks
                .keys()
                .map(|k| {
                    k.parse::<i64>()
                        .map_err(|_| anyhow!("bad degree key '{k}'"))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .min()
                .ok_or_else(|| anyhow!("complex has no ranks"))?;
            Grading::Z { lo }
        }
        GradingSpec::Z(ref s) => bail!("unknown grading '{s}' (use \"Z\" or {{\"mod\": k}})"),
        GradingSpec::Mod { r#mod } => Grading::Mod(r#mod),
    };
    let (lo, slots) = match grading {
        Grading::Z { lo } => {
            let hi = file
                .ranks
                .keys()
                .map(|k| k.parse::<i64>().unwrap())
                .max()
                .unwrap();
            (lo, (hi - lo + 1) as usize)
        }
        Grading::Mod(k) => (0, k),
    };
    let mut ranks = vec![0usize; slots];
    for (key, &rank) in &file.ranks {
        let deg: i64 = key.parse().map_err(|_| anyhow!("bad degree key '{key}'"))?;
        let slot = (deg - lo) as usize;
        if slot >= slots {
            bail!("degree {deg} outside the grading");
        }
        ranks[slot] = rank;
    }
    let mut differentials = Vec::with_capacity(slots);
    for j in 0..slots {
        let cols = match grading {
            Grading::Z { .. } => {
                if j == 0 {
                    0
                } else {
                    ranks[j - 1]
                }
            }
            Grading::Mod(k) => ranks[(j + k - 1) % k],
        };
        differentials.push(GroupRingMatrix::zero(ranks[j], cols));
    }
    for (key, rows) in &file.differentials {
        let deg: i64 = key
            .parse()
            .map_err(|_| anyhow!("bad differential key '{key}'"))?;
        let slot = deg - lo;
        if slot < 0 || slot as usize >= slots {
            bail!("differential at degree {deg} outside the grading");
        }
        let slot = slot as usize;
        let m = &mut differentials[slot];
        if rows.len() != m.rows() {
            bail!(
                "differential at degree {deg}: {} rows given, rank is {}",
                rows.len(),
                m.rows()
            );
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != m.cols() {
                bail!(
                    "differential at degree {deg}, row {r}: {} columns given, expected {}",
                    row.len(),
                    m.cols()
                );
            }
            for (c, v) in row.iter().enumerate() {
                let entry = parse_entry(v, &group, file.novikov_rank, coefficients)
                    .with_context(|| format!("differential at degree {deg}, entry ({r},{c})"))?;
                m.set(r, c, entry);
            }
        }
    }
    GradedComplex::new(group, coefficients, grading, ranks, differentials)
        .map_err(|e| anyhow!("invalid complex: {e}"))
}

pub fn load_complex(path: &Path, opts: GroupOptions) -> Result<GradedComplex> {
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    complex_from_file(read_json(path)?, &base, opts)
}

// ---- descriptors ----------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    pub schema: Option<u32>,
    pub name: Option<String>,
    pub half_dim: usize,
    pub minimal_chern: usize,
    pub class: String,
    pub pi1: Option<Ref<PresentationFile>>,
    pub cover: CoverSpec,
    #[serde(default)]
    pub universal_cover: bool,
    pub complex: Option<Ref<ComplexFile>>,
    pub classical_betti: Option<BTreeMap<String, usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CoverSpec {
    Keyword(String),
    Finite {
        group: Ref<GroupFile>,
        generator_images: Option<Vec<usize>>,
    },
}

pub fn descriptor_from_file(
    file: DescriptorFile,
    base: &Path,
    opts: GroupOptions,
) -> Result<ManifoldDescriptor> {
    check_schema(file.schema, "descriptor file")?;
    let class = match file.class.as_str() {
        "spherically-cy" => MonotonicityClass::SphericallyCalabiYau,
        "weakly-monotone" => MonotonicityClass::WeaklyMonotone,
        "general" => MonotonicityClass::General,
        other => bail!("unknown class '{other}' (spherically-cy | weakly-monotone | general)"),
    };
    let pi1 = match file.pi1 {
        None => None,
        Some(r) => {
            let (pf, _) = r.resolve(base)?;
            Some(presentation_from_file(pf)?)
        }
    };
    let cover = match file.cover {
        CoverSpec::Keyword(ref k) if k == "trivial" => CoverData::TrivialPi1,
        CoverSpec::Keyword(ref k) if k == "infinite" => CoverData::InfiniteDeclared,
        CoverSpec::Keyword(ref k) => {
            bail!("unknown cover '{k}' (trivial | infinite | {{\"group\": ...}})")
        }
        CoverSpec::Finite {
            group,
            generator_images,
        } => {
            let (gf, _) = group.resolve(base)?;
            CoverData::Finite {
                group: group_from_file(gf, opts)?,
                hom_images: generator_images,
            }
        }
    };
    let complex = match file.complex {
        None => None,
        Some(r) => {
            let (cf, dir) = r.resolve(base)?;
            Some(complex_from_file(cf, &dir, opts)?)
        }
    };
    let classical_betti = match file.classical_betti {
        None => None,
        Some(map) => {
            let mut out = BTreeMap::new();
            for (k, v) in map {
                let deg: i64 = k.parse().map_err(|_| anyhow!("bad Betti degree '{k}'"))?;
                out.insert(deg, v);
            }
            Some(out)
        }
    };
    Ok(ManifoldDescriptor {
        name: file.name,
        half_dim: file.half_dim,
        minimal_chern: file.minimal_chern,
        class,
        pi1,
        cover,
        universal_cover: file.universal_cover,
        complex,
        classical_betti,
    })
}

pub fn load_descriptor(path: &Path, opts: GroupOptions) -> Result<ManifoldDescriptor> {
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    descriptor_from_file(read_json(path)?, &base, opts)
}

// ---- novikov expression files ------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExprFile {
    pub schema: Option<u32>,
    pub context: ContextSpec,
    pub coefficients: CoeffRingSpec,
    pub op: String,
    pub series: Vec<Vec<Value>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    pub weights: Vec<String>,
    pub cutoff: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CoeffRingSpec {
    Integer(String),
    PrimeField { prime: u64 },
    GroupRing { group: Ref<GroupFile> },
}

pub fn parse_rational(s: &str) -> Result<Ratio<i64>> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().context("bad rational numerator")?;
        let d: i64 = den.trim().parse().context("bad rational denominator")?;
        if d == 0 {
            bail!("rational with zero denominator");
        }
        Ok(Ratio::new(n, d))
    } else {
        Ok(Ratio::from_integer(
            s.parse::<i64>().context("bad integer")?,
        ))
    }
}

pub enum ParsedExpr {
    Integer {
        op: String,
        series: Vec<NovikovSeries<i64>>,
    },
    PrimeField {
        prime: u64,
        op: String,
        series: Vec<NovikovSeries<orbitbound_core::novikov::FpScalar>>,
    },
    GroupRing {
        group: Arc<FiniteGroup>,
        op: String,
        series: Vec<NovikovSeries<GroupRingCoeff>>,
    },
}

pub fn expr_from_file(
    file: ExprFile,
    base: &Path,
    opts: GroupOptions,
    default_depth: i64,
) -> Result<ParsedExpr> {
    check_schema(file.schema, "expression file")?;
    let weights = file
        .context
        .weights
        .iter()
        .map(|w| parse_rational(w))
        .collect::<Result<Vec<_>>>()?;
    let rank = weights.len();
    // raw terms first, so a default cutoff can look at the input levels
    struct RawTerm {
        expo: Vec<i64>,
        coeff: Value,
    }
    let mut raw: Vec<Vec<RawTerm>> = Vec::new();
    for s in &file.series {
        let mut terms = Vec::new();
        for t in s {
            let arr = t
                .as_array()
                .ok_or_else(|| anyhow!("term must be [coeff, exponents]"))?;
            if arr.len() != 2 {
                bail!("term must be [coeff, exponents]");
            }
            let expo: Vec<i64> = serde_json::from_value(arr[1].clone())
                .map_err(|_| anyhow!("exponent vector must be an integer array"))?;
            if expo.len() != rank {
                bail!(
                    "exponent vector has rank {}, context has rank {rank}",
                    expo.len()
                );
            }
            terms.push(RawTerm {
                expo,
                coeff: arr[0].clone(),
            });
        }
        raw.push(terms);
    }
    let cutoff = match file.context.cutoff {
        Some(ref s) => parse_rational(s)?,
        None => {
            // default: `default_depth` levels below the maximal input term
            let probe = NovikovContext::new(weights.clone(), Ratio::from_integer(i64::MIN / 2));
            let max_level = raw
                .iter()
                .flatten()
                .map(|t| probe.level(&t.expo))
                .max()
                .unwrap_or_else(|| Ratio::from_integer(0));
            max_level - Ratio::from_integer(default_depth)
        }
    };
    let ctx = NovikovContext::new(weights, cutoff);
    let int_coeff = |v: &Value| -> Result<i64> {
        v.as_i64()
            .ok_or_else(|| anyhow!("coefficient must be an integer"))
    };
    match file.coefficients {
        CoeffRingSpec::Integer(ref s) if s == "integer" => {
            let mut series = Vec::new();
            for terms in raw {
                let mut s = NovikovSeries::zero(ctx.clone());
                for t in terms {
                    s.add_term(t.expo, int_coeff(&t.coeff)?)
                        .map_err(|e| anyhow!("{e}"))?;
                }
                series.push(s);
            }
            Ok(ParsedExpr::Integer {
                op: file.op,
                series,
            })
        }
        CoeffRingSpec::Integer(ref s) => bail!("unknown coefficient ring '{s}'"),
        CoeffRingSpec::PrimeField { prime } => {
            let mut series = Vec::new();
            for terms in raw {
                let mut s = NovikovSeries::zero(ctx.clone());
                for t in terms {
                    s.add_term(
                        t.expo,
                        orbitbound_core::novikov::FpScalar::new(prime, int_coeff(&t.coeff)?),
                    )
                    .map_err(|e| anyhow!("{e}"))?;
                }
                series.push(s);
            }
            Ok(ParsedExpr::PrimeField {
                prime,
                op: file.op,
                series,
            })
        }
        CoeffRingSpec::GroupRing { group } => {
            let (gf, _) = group.resolve(base)?;
            let group = group_from_file(gf, opts)?;
            let mut series = Vec::new();
            for terms in raw {
                let mut s = NovikovSeries::zero(ctx.clone());
                for t in terms {
                    let pairs = t.coeff.as_array().ok_or_else(|| {
                        anyhow!("group-ring coefficient must be [[int, label], ...]")
                    })?;
                    for p in pairs {
                        let pair = p
                            .as_array()
                            .filter(|a| a.len() == 2)
                            .ok_or_else(|| anyhow!("group-ring term must be [int, label]"))?;
                        let c = pair[0]
                            .as_i64()
                            .ok_or_else(|| anyhow!("group-ring coefficient must be an integer"))?;
                        let label = pair[1]
                            .as_str()
                            .ok_or_else(|| anyhow!("group element must be a label string"))?;
                        let elem = group
                            .element_by_label(label)
                            .ok_or_else(|| anyhow!("unknown group element label '{label}'"))?;
                        s.add_term(
                            t.expo.clone(),
                            GroupRingCoeff::single(group.clone(), elem, c),
                        )
                        .map_err(|e| anyhow!("{e}"))?;
                    }
                }
                series.push(s);
            }
            Ok(ParsedExpr::GroupRing {
                group,
                op: file.op,
                series,
            })
        }
    }
}

pub fn load_expr(path: &Path, opts: GroupOptions, default_depth: i64) -> Result<ParsedExpr> {
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    expr_from_file(read_json(path)?, &base, opts, default_depth)
}
