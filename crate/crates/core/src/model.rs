//! Finite presentation of a triangulated category.
//!
//! A model carries a table of indecomposables with lattice classes, a list of
//! exact triangles stored once per shift orbit, and a table of nonvanishing
//! Hom spaces. Objects are formal direct sums of shifted indecomposables,
//! which is sound for the hereditary Dynkin-type categories these models
//! present. The standard heart is the set of all indecomposables at shift 0.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

/// Class in the rank-n lattice quotient of the Grothendieck group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeClass(pub Vec<i64>);

impl LatticeClass {
    pub fn zero(rank: usize) -> Self {
        LatticeClass(vec![0; rank])
    }

    pub fn add_assign(&mut self, other: &LatticeClass) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
    }

    pub fn negated(&self) -> Self {
        LatticeClass(self.0.iter().map(|x| -x).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticeClass(self.0.iter().map(|x| x * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| *x == 0)
    }
}

impl fmt::Display for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// A shifted indecomposable `base[shift]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndecRef {
    pub base: usize,
    pub shift: i64,
}

impl IndecRef {
    pub fn shifted(&self, k: i64) -> IndecRef {
        IndecRef {
            base: self.base,
            shift: self.shift + k,
        }
    }
}

/// Formal direct sum of shifted indecomposables. The empty sum denotes the
/// zero object; phase and mass operations reject it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ObjectExpr {
    summands: Vec<IndecRef>,
}

impl ObjectExpr {
    pub fn new(mut summands: Vec<IndecRef>) -> Self {
        summands.sort();
        ObjectExpr { summands }
    }

    pub fn single(base: usize, shift: i64) -> Self {
        ObjectExpr {
            summands: vec![IndecRef { base, shift }],
        }
    }

    pub fn zero() -> Self {
        ObjectExpr { summands: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> &[IndecRef] {
        &self.summands
    }

    pub fn shifted(&self, k: i64) -> ObjectExpr {
        ObjectExpr::new(self.summands.iter().map(|r| r.shifted(k)).collect())
    }

    pub fn direct_sum(&self, other: &ObjectExpr) -> ObjectExpr {
        let mut s = self.summands.clone();
        s.extend_from_slice(&other.summands);
        ObjectExpr::new(s)
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.summands.iter().map(|r| r.shift).min()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indecomposable {
    pub id: String,
    pub name: String,
    pub class: LatticeClass,
}

/// Exact triangle `a -> b -> c -> a[1]`, stored with the minimal occurring
/// shift normalized to 0; all shifts and rotations are generated on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub a: ObjectExpr,
    pub b: ObjectExpr,
    pub c: ObjectExpr,
}

impl Triangle {
    fn min_shift(&self) -> i64 {
        [&self.a, &self.b, &self.c]
            .iter()
            .filter_map(|e| e.min_shift())
            .min()
            .unwrap_or(0)
    }

    pub fn shifted(&self, k: i64) -> Triangle {
        Triangle {
            a: self.a.shifted(k),
            b: self.b.shifted(k),
            c: self.c.shifted(k),
        }
    }

    /// The three rotations with the same middle-term reading `sub -> mid -> quot`:
    /// from `a -> b -> c -> a[1]` we also get `c[-1] -> a -> b` and `b -> c -> a[1]`.
    pub fn rotations(&self) -> [Triangle; 3] {
        [
            self.clone(),
            Triangle {
                a: self.c.shifted(-1),
                b: self.a.clone(),
                c: self.b.clone(),
            },
            Triangle {
                a: self.b.clone(),
                b: self.c.clone(),
                c: self.a.shifted(1),
            },
        ]
    }
}

#[derive(Clone, Debug)]
pub struct CategoryModel {
    pub lattice_rank: usize,
    pub indecomposables: Vec<Indecomposable>,
    pub triangles: Vec<Triangle>,
    by_id: HashMap<String, usize>,
    /// (src, dst, k) present means Hom(src, dst[k]) != 0.
    hom: HashSet<(usize, usize, i64)>,
    pub max_hn_length: usize,
}

impl CategoryModel {
    pub fn new(
        lattice_rank: usize,
        indecomposables: Vec<Indecomposable>,
        triangles: Vec<Triangle>,
        hom: HashSet<(usize, usize, i64)>,
        max_hn_length: usize,
    ) -> Result<Self> {
        if lattice_rank == 0 || indecomposables.is_empty() {
            return Err(Error::ModelData(
                "degenerate model: lattice rank and indecomposable table must be nonempty".into(),
            ));
        }
        let mut by_id = HashMap::new();
        for (i, ind) in indecomposables.iter().enumerate() {
            if ind.class.0.len() != lattice_rank {
                return Err(Error::ModelData(format!(
                    "indecomposable {} has class of rank {} in a rank-{} model",
                    ind.id,
                    ind.class.0.len(),
                    lattice_rank
                )));
            }
            if by_id.insert(ind.id.clone(), i).is_some() {
                return Err(Error::ModelData(format!("duplicate indecomposable id {}", ind.id)));
            }
        }
        let triangles = triangles
            .into_iter()
            .map(|t| {
                let m = t.min_shift();
                t.shifted(-m)
            })
            .collect();
        Ok(CategoryModel {
            lattice_rank,
            indecomposables,
            triangles,
            by_id,
            hom,
            max_hn_length,
        })
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.by_id
            .get(id)
            .copied()
            .ok_or_else(|| Error::ModelMismatch(format!("unknown indecomposable id {id}")))
    }

    pub fn class_of_ref(&self, r: &IndecRef) -> Result<LatticeClass> {
        let ind = self
            .indecomposables
            .get(r.base)
            .ok_or_else(|| Error::ModelMismatch(format!("indecomposable index {} out of range", r.base)))?;
        let sign = if r.shift.rem_euclid(2) == 0 { 1 } else { -1 };
        Ok(ind.class.scaled(sign))
    }

    pub fn class_of_expr(&self, e: &ObjectExpr) -> Result<LatticeClass> {
        let mut acc = LatticeClass::zero(self.lattice_rank);
        for r in e.summands() {
            acc.add_assign(&self.class_of_ref(r)?);
        }
        Ok(acc)
    }

    pub fn hom_nonzero(&self, src: usize, dst: usize, k: i64) -> bool {
        self.hom.contains(&(src, dst, k))
    }

    /// Hom between shifted indecomposables, reduced through shift invariance.
    pub fn hom_refs_nonzero(&self, src: &IndecRef, dst: &IndecRef) -> bool {
        self.hom_nonzero(src.base, dst.base, dst.shift - src.shift)
    }

    pub fn hom_entries(&self) -> impl Iterator<Item = &(usize, usize, i64)> {
        self.hom.iter()
    }

    /// All `(sub, quot)` splittings of the single indecomposable `u` arising
    /// from triangle rotations with middle term `u`, in a deterministic order.
    pub fn splits_of(&self, u: &IndecRef) -> Vec<(ObjectExpr, ObjectExpr)> {
        let mut out = Vec::new();
        for t in &self.triangles {
            for rot in t.rotations() {
                let mids = rot.b.summands();
                if mids.len() != 1 {
                    // splitting is only defined against single-summand middles
                    continue;
                }
                if mids[0].base != u.base {
                    continue;
                }
                let k = u.shift - mids[0].shift;
                out.push((rot.a.shifted(k), rot.c.shifted(k)));
            }
        }
        out.sort_by(|x, y| format!("{x:?}").cmp(&format!("{y:?}")));
        out.dedup();
        out
    }

    /// Triangle instances `(a, b, c)` (all rotations) with every summand's
    /// shift within `[lo, hi]`.
    pub fn triangle_instances_within(&self, lo: i64, hi: i64) -> Vec<Triangle> {
        let mut out = Vec::new();
        for t in &self.triangles {
            for rot in t.rotations() {
                let shifts: Vec<i64> = [&rot.a, &rot.b, &rot.c]
                    .iter()
                    .flat_map(|e| e.summands().iter().map(|r| r.shift))
                    .collect();
                let (min, max) = match (shifts.iter().min(), shifts.iter().max()) {
                    (Some(a), Some(b)) => (*a, *b),
                    _ => continue,
                };
                for k in (lo - min)..=(hi - max) {
                    out.push(rot.shifted(k));
                }
            }
        }
        out
    }

    pub fn expr_name(&self, e: &ObjectExpr) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.summands()
            .iter()
            .map(|r| {
                let name = &self.indecomposables[r.base].name;
                if r.shift == 0 {
                    name.clone()
                } else {
                    format!("{name}[{}]", r.shift)
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Parse an object expression: summands separated by `+`, shifts in
    /// brackets, e.g. `S1[1]+X`. Whitespace-insensitive.
    pub fn parse_expr(&self, input: &str) -> Result<ObjectExpr> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(ObjectExpr::zero());
        }
        let mut refs = Vec::new();
        for part in compact.split('+') {
            if part.is_empty() {
                return Err(Error::Parse(format!("empty summand in object expression {input:?}")));
            }
            let (id, shift) = match part.find('[') {
                Some(open) => {
                    if !part.ends_with(']') {
                        return Err(Error::Parse(format!("unclosed shift bracket in {part:?}")));
                    }
                    let id = &part[..open];
                    let k: i64 = part[open + 1..part.len() - 1].parse().map_err(|_| {
                        Error::Parse(format!("bad shift in {part:?}; expected an integer"))
                    })?;
                    (id, k)
                }
                None => (part, 0),
            };
            refs.push(IndecRef {
                base: self.index_of(id)?,
                shift,
            });
        }
        Ok(ObjectExpr::new(refs))
    }

    pub fn ref_of(&self, id: &str, shift: i64) -> Result<IndecRef> {
        Ok(IndecRef {
            base: self.index_of(id)?,
            shift,
        })
    }
}

// --- JSON schema ---

#[derive(Serialize, Deserialize)]
struct IndecFile {
    id: String,
    #[serde(default)]
    name: Option<String>,
    class: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    lattice_rank: usize,
    indecomposables: Vec<IndecFile>,
    #[serde(default)]
    triangles: Vec<[Vec<String>; 3]>,
    #[serde(default)]
    hom: Vec<(String, String, bool)>,
    #[serde(default)]
    max_hn_length: Option<usize>,
}

/// Split `"S1@1"` into id and shift difference.
fn parse_at(token: &str) -> Result<(String, i64)> {
    match token.find('@') {
        Some(pos) => {
            let k: i64 = token[pos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad shift difference in hom key {token:?}")))?;
            Ok((token[..pos].to_string(), k))
        }
        None => Ok((token.to_string(), 0)),
    }
}

impl CategoryModel {
    pub fn from_json(text: &str) -> Result<CategoryModel> {
        let file: ModelFile = serde_json::from_str(text)?;
        let indecs: Vec<Indecomposable> = file
            .indecomposables
            .into_iter()
            .map(|i| Indecomposable {
                name: i.name.unwrap_or_else(|| i.id.clone()),
                id: i.id,
                class: LatticeClass(i.class),
            })
            .collect();
        let mut by_id = HashMap::new();
        for (i, ind) in indecs.iter().enumerate() {
            by_id.insert(ind.id.clone(), i);
        }
        let lookup = |id: &str| -> Result<usize> {
            by_id
                .get(id)
                .copied()
                .ok_or_else(|| Error::Parse(format!("triangle or hom refers to unknown id {id}")))
        };
        let parse_term = |summands: &[String]| -> Result<ObjectExpr> {
            let mut refs = Vec::new();
            for s in summands {
                let (id, shift) = match s.find('[') {
                    Some(open) if s.ends_with(']') => {
                        let k: i64 = s[open + 1..s.len() - 1]
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad shift in {s:?}")))?;
                        (s[..open].to_string(), k)
                    }
                    Some(_) => return Err(Error::Parse(format!("unclosed bracket in {s:?}"))),
                    None => (s.clone(), 0),
                };
                refs.push(IndecRef {
                    base: lookup(&id)?,
                    shift,
                });
            }
            Ok(ObjectExpr::new(refs))
        };
        let mut triangles = Vec::new();
        for [a, b, c] in &file.triangles {
            triangles.push(Triangle {
                a: parse_term(a)?,
                b: parse_term(b)?,
                c: parse_term(c)?,
            });
        }
        let mut hom = HashSet::new();
        for (key, dst, flag) in &file.hom {
            if !flag {
                continue;
            }
            let (src, k) = parse_at(key)?;
            hom.insert((lookup(&src)?, lookup(dst)?, k));
        }
        CategoryModel::new(
            file.lattice_rank,
            indecs,
            triangles,
            hom,
            file.max_hn_length.unwrap_or(crate::tol::DEFAULT_MAX_HN_LENGTH),
        )
    }
}

/// Structural validation of a model: class additivity over triangles,
/// hom/triangle consistency, canonical triangle storage, nonzero classes on
/// heart simples. Report-based; never raises.
pub fn validate_model_structure(model: &CategoryModel) -> crate::report::Report {
    let mut report = crate::report::Report::new("validate-model");
    // class additivity [b] = [a] + [c]
    let mut ok = true;
    let mut witness = None;
    for t in &model.triangles {
        let (ca, cb, cc) = (
            model.class_of_expr(&t.a),
            model.class_of_expr(&t.b),
            model.class_of_expr(&t.c),
        );
        match (ca, cb, cc) {
            (Ok(a), Ok(b), Ok(c)) => {
                let mut sum = a.clone();
                sum.add_assign(&c);
                if sum != b {
                    ok = false;
                    witness = Some(format!(
                        "triangle {} -> {} -> {}: [b]={} but [a]+[c]={}",
                        model.expr_name(&t.a),
                        model.expr_name(&t.b),
                        model.expr_name(&t.c),
                        b,
                        sum
                    ));
                    break;
                }
            }
            _ => {
                ok = false;
                witness = Some("triangle references unknown indecomposable".into());
                break;
            }
        }
    }
    report.push("class-additivity", ok, witness, "[b] = [a] + [c] on every triangle");

    // hom consistency: every triangle a -> b -> c needs Hom(a,b) and Hom(b,c)
    let mut ok = true;
    let mut witness = None;
    'outer: for t in &model.triangles {
        for (src, dst, label) in [(&t.a, &t.b, "Hom(a,b)"), (&t.b, &t.c, "Hom(b,c)")] {
            for s in src.summands() {
                let covered = dst.summands().iter().any(|d| model.hom_refs_nonzero(s, d));
                if src.is_zero() || dst.is_zero() {
                    continue;
                }
                if !covered {
                    ok = false;
                    witness = Some(format!(
                        "{label} not flagged nonvanishing for triangle {} -> {} -> {}",
                        model.expr_name(&t.a),
                        model.expr_name(&t.b),
                        model.expr_name(&t.c)
                    ));
                    break 'outer;
                }
            }
        }
    }
    report.push(
        "hom-triangle-consistency",
        ok,
        witness,
        "triangle maps are flagged nonvanishing in the hom table",
    );

    // canonical storage: min shift normalized to zero (shift closure is then
    // structural, instances being generated by shifting)
    let ok = model.triangles.iter().all(|t| t.min_shift() == 0);
    report.push(
        "shift-canonical-triangles",
        ok,
        None,
        "each stored triangle has minimal shift 0; shift closure is by construction",
    );

    // identity homs

    let mut missing = Vec::new();
    for (i, ind) in model.indecomposables.iter().enumerate() {
        if !model.hom_nonzero(i, i, 0) {
            missing.push(ind.id.clone());
        }
    }
    report.push(
        "identity-homs",
        missing.is_empty(),
        if missing.is_empty() {
            None
        } else {
            Some(format!("missing identity hom for {missing:?}"))
        },
        "Hom(u,u) flagged nonvanishing for every indecomposable",
    );

    report
}

/// Deterministic map base -> shift for sets of refs with unique bases.
pub fn base_shift_map(refs: &[IndecRef]) -> Option<BTreeMap<usize, i64>> {
    let mut map = BTreeMap::new();
    for r in refs {
        if map.insert(r.base, r.shift).is_some() {
            return None;
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a2_parses_and_validates() {
        let m = fixtures::a2_model();
        assert_eq!(m.lattice_rank, 2);
        assert_eq!(m.indecomposables.len(), 3);
        let report = validate_model_structure(&m);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn expr_parser_roundtrip() {
        let m = fixtures::a2_model();
        let e = m.parse_expr(" S1[1] + X ").unwrap();
        assert_eq!(e.summands().len(), 2);
        assert_eq!(m.expr_name(&e), "S1[1]+X");
        assert!(m.parse_expr("S9").is_err());
        assert!(m.parse_expr("S1[x]").is_err());
        assert!(m.parse_expr("0").unwrap().is_zero());
    }

    #[test]
    fn class_arithmetic() {
        let m = fixtures::a2_model();
        let x = m.parse_expr("X").unwrap();
        assert_eq!(m.class_of_expr(&x).unwrap(), LatticeClass(vec![1, 1]));
        let s1_shift = m.parse_expr("S1[1]").unwrap();
        assert_eq!(m.class_of_expr(&s1_shift).unwrap(), LatticeClass(vec![-1, 0]));
        let sum = m.parse_expr("S1+S2").unwrap();
        assert_eq!(m.class_of_expr(&sum).unwrap(), LatticeClass(vec![1, 1]));
    }

    #[test]
    fn splits_cover_rotations() {
        let m = fixtures::a2_model();
        let x = m.ref_of("X", 0).unwrap();
        let splits = m.splits_of(&x);
        // S2 -> X -> S1 is the only splitting of X up to shift
        assert_eq!(splits.len(), 1);
        assert_eq!(m.expr_name(&splits[0].0), "S2");
        assert_eq!(m.expr_name(&splits[0].1), "S1");
        let s1 = m.ref_of("S1", 0).unwrap();
        let splits = m.splits_of(&s1);
        assert_eq!(splits.len(), 1);
        assert_eq!(m.expr_name(&splits[0].0), "X");
        assert_eq!(m.expr_name(&splits[0].1), "S2[1]");
        let s2 = m.ref_of("S2", 0).unwrap();
        let splits = m.splits_of(&s2);
        assert_eq!(m.expr_name(&splits[0].0), "S1[-1]");
        assert_eq!(m.expr_name(&splits[0].1), "X");
    }

    #[test]
    fn degenerate_model_rejected() {
        assert!(CategoryModel::new(0, vec![], vec![], HashSet::new(), 4).is_err());
    }
}
