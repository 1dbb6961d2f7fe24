//! JSON documents for posets, spaces, relations, witnesses and selectors.
//!
//! Sets are written as lists of labels in universe order. A space may be
//! given inline or as a path, resolved against the referencing file's
//! directory.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::approx_rel::ApproximableRelation;
use crate::cf_space::CFSpace;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::fs_space::{TBSelector, WitnessFamily};
use crate::ga_space::GASpace;
use crate::order::FinitePoset;
use crate::subset::Subset;

pub type Pair = (String, String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<Pair>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub universe: Vec<String>,
    pub relation: Vec<Pair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Inline(SpaceDoc),
    Path(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SpaceRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<SpaceRef>,
    pub pairs: Vec<(Vec<String>, Vec<String>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceRef>,
    pub relations: Vec<RelationDoc>,
    pub separators: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelectorEntry {
    #[serde(rename = "K")]
    pub k: Vec<String>,
    #[serde(rename = "M")]
    pub m: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelectorDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceRef>,
    pub entries: Vec<SelectorEntry>,
}

/// Any document, recognised by its distinguishing field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Poset(PosetDoc),
    Space(SpaceDoc),
    Relation(RelationDoc),
    Witness(WitnessDoc),
    Selector(SelectorDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Poset(_) => "poset",
            Document::Space(_) => "space",
            Document::Relation(_) => "relation",
            Document::Witness(_) => "witness",
            Document::Selector(_) => "selector",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(parse_err)?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("document is not an object".into()))?;
        let doc = if obj.contains_key("elements") {
            Document::Poset(serde_json::from_value(v).map_err(parse_err)?)
        } else if obj.contains_key("universe") {
            Document::Space(serde_json::from_value(v).map_err(parse_err)?)
        } else if obj.contains_key("pairs") {
            Document::Relation(serde_json::from_value(v).map_err(parse_err)?)
        } else if obj.contains_key("relations") {
            Document::Witness(serde_json::from_value(v).map_err(parse_err)?)
        } else if obj.contains_key("entries") {
            Document::Selector(serde_json::from_value(v).map_err(parse_err)?)
        } else {
            return Err(Error::Parse("unrecognised document type".into()));
        };
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let r = match self {
            Document::Poset(d) => serde_json::to_string_pretty(d),
            Document::Space(d) => serde_json::to_string_pretty(d),
            Document::Relation(d) => serde_json::to_string_pretty(d),
            Document::Witness(d) => serde_json::to_string_pretty(d),
            Document::Selector(d) => serde_json::to_string_pretty(d),
        };
        r.expect("documents always serialize")
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn as_refs(pairs: &[Pair]) -> Vec<(&str, &str)> {
    pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}

fn pairs_of(labels: &[String], pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<Pair> {
    pairs
        .into_iter()
        .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
        .collect()
}

fn labels_of(labels: &[String], s: Subset) -> Vec<String> {
    s.iter().map(|x| labels[x].clone()).collect()
}

fn set_of(space: &GASpace, labels: &[String]) -> Result<Subset> {
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    space.subset_of(&refs)
}

impl PosetDoc {
    /// `covers` is only honoured when `allow_covers` is set; `leq` must then
    /// be absent.
    pub fn to_poset(&self, allow_covers: bool) -> Result<FinitePoset> {
        let labels: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        match (&self.leq, &self.covers) {
            (Some(leq), None) => FinitePoset::from_labeled(&labels, &as_refs(leq)),
            (None, Some(covers)) if allow_covers => FinitePoset::from_labeled_covers(&labels, &as_refs(covers)),
            (None, Some(_)) => Err(Error::Parse("`covers` needs the --covers flag".into())),
            (Some(_), Some(_)) => Err(Error::Parse("give either `leq` or `covers`, not both".into())),
            (None, None) => Err(Error::Parse("poset document needs `leq`".into())),
        }
    }

    pub fn from_poset(p: &FinitePoset) -> Self {
        PosetDoc {
            elements: p.labels().to_vec(),
            leq: Some(pairs_of(p.labels(), p.leq_pairs())),
            covers: None,
        }
    }
}

impl SpaceDoc {
    pub fn to_ga_space(&self) -> Result<GASpace> {
        let labels: Vec<&str> = self.universe.iter().map(String::as_str).collect();
        GASpace::from_labeled(&labels, &as_refs(&self.relation))
    }

    /// The space, not yet validated.
    pub fn to_cf_space(&self) -> Result<CFSpace> {
        let base = self.to_ga_space()?;
        let family = self
            .family
            .as_ref()
            .ok_or_else(|| Error::Parse("space document needs `family`".into()))?
            .iter()
            .map(|f| set_of(&base, f))
            .collect::<Result<Vec<_>>>()?;
        CFSpace::new(base, family)
    }

    pub fn from_ga_space(g: &GASpace) -> Self {
        SpaceDoc {
            universe: g.labels().to_vec(),
            relation: pairs_of(g.labels(), g.relation_pairs()),
            family: None,
        }
    }

    pub fn from_cf_space(s: &CFSpace) -> Self {
        let labels = s.base().labels();
        SpaceDoc {
            family: Some(s.family().iter().map(|&f| labels_of(labels, f)).collect()),
            ..Self::from_ga_space(s.base())
        }
    }
}

impl RelationDoc {
    /// Pairs only; source and target are left for the caller to attach.
    pub fn from_relation(r: &ApproximableRelation) -> Self {
        let (l1, l2) = (r.source().base().labels(), r.target().base().labels());
        RelationDoc {
            source: None,
            target: None,
            pairs: r
                .pair_sets()
                .into_iter()
                .map(|(f, g)| (labels_of(l1, f), labels_of(l2, g)))
                .collect(),
        }
    }

    pub fn with_spaces(mut self, source: &CFSpace, target: &CFSpace) -> Self {
        self.source = Some(SpaceRef::Inline(SpaceDoc::from_cf_space(source)));
        self.target = Some(SpaceRef::Inline(SpaceDoc::from_cf_space(target)));
        self
    }

    /// The relation between two given spaces, not yet validated.
    pub fn to_relation(&self, source: Arc<CFSpace>, target: Arc<CFSpace>) -> Result<ApproximableRelation> {
        let pairs = self
            .pairs
            .iter()
            .map(|(f, g)| Ok((set_of(source.base(), f)?, set_of(target.base(), g)?)))
            .collect::<Result<Vec<_>>>()?;
        ApproximableRelation::new(source, target, &pairs)
    }
}

impl WitnessDoc {
    pub fn from_witness(w: &WitnessFamily) -> Self {
        let labels = w.space().base().labels();
        WitnessDoc {
            space: None,
            relations: w.relations().iter().map(RelationDoc::from_relation).collect(),
            separators: w
                .separators()
                .iter()
                .map(|ms| ms.iter().map(|&m| labels_of(labels, m)).collect())
                .collect(),
        }
    }

    /// Witness on a validated space; each relation is validated.
    pub fn to_witness(&self, space: &Arc<CFSpace>) -> Result<WitnessFamily> {
        let relations = self
            .relations
            .iter()
            .map(|r| r.to_relation(space.clone(), space.clone())?.validated())
            .collect::<Result<Vec<_>>>()?;
        let separators = self
            .separators
            .iter()
            .map(|ms| ms.iter().map(|m| set_of(space.base(), m)).collect())
            .collect::<Result<Vec<_>>>()?;
        WitnessFamily::new(space.clone(), relations, separators)
    }
}

impl SelectorDoc {
    pub fn from_selector(s: &TBSelector) -> Self {
        let labels = s.space().base().labels();
        SelectorDoc {
            space: None,
            entries: s
                .entries()
                .into_iter()
                .map(|(k, ms)| SelectorEntry {
                    k: labels_of(labels, k),
                    m: ms.iter().map(|&m| labels_of(labels, m)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_selector(&self, space: &Arc<CFSpace>, caps: &Caps) -> Result<TBSelector> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let k = set_of(space.base(), &e.k)?;
                let ms = e.m.iter().map(|m| set_of(space.base(), m)).collect::<Result<Vec<_>>>()?;
                Ok((k, ms))
            })
            .collect::<Result<Vec<_>>>()?;
        TBSelector::from_entries(space.clone(), caps, &entries)
    }
}

/// Reads documents from disk and resolves space references.
#[derive(Debug, Clone)]
pub struct Loader {
    base: PathBuf,
}

impl Loader {
    pub fn new(base: impl Into<PathBuf>) -> Self {
        Loader { base: base.into() }
    }

    /// A loader rooted at the directory containing `path`.
    pub fn beside(path: &Path) -> Self {
        Loader::new(path.parent().map(Path::to_path_buf).unwrap_or_default())
    }

    pub fn read(path: &Path) -> Result<Document> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Document::parse(&text)
    }

    pub fn space_doc(&self, r: &SpaceRef) -> Result<SpaceDoc> {
        match r {
            SpaceRef::Inline(d) => Ok(d.clone()),
            SpaceRef::Path(p) => match Self::read(&self.base.join(p))? {
                Document::Space(d) => Ok(d),
                other => Err(Error::Parse(format!("`{p}` is a {} document, not a space", other.kind()))),
            },
        }
    }

    /// The referenced space, validated.
    pub fn space(&self, r: &SpaceRef) -> Result<Arc<CFSpace>> {
        Ok(Arc::new(self.space_doc(r)?.to_cf_space()?.validated()?))
    }

    /// Source and target of a relation document, falling back to `default`.
    pub fn relation_spaces(
        &self,
        doc: &RelationDoc,
        default: Option<&Arc<CFSpace>>,
    ) -> Result<(Arc<CFSpace>, Arc<CFSpace>)> {
        let get = |r: &Option<SpaceRef>, which: &str| match (r, default) {
            (Some(r), _) => self.space(r),
            (None, Some(d)) => Ok(d.clone()),
            (None, None) => Err(Error::Parse(format!("relation document needs `{which}`"))),
        };
        Ok((get(&doc.source, "source")?, get(&doc.target, "target")?))
    }
}

pub fn write_json(path: &Path, doc: &Document) -> Result<()> {
    fs::write(path, doc.to_json() + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf_space::fixtures::abc_with;

    #[test]
    fn documents_round_trip() {
        let p = FinitePoset::from_labeled_covers(&["⊥", "a", "b"], &[("⊥", "a"), ("⊥", "b")]).unwrap();
        let doc = Document::Poset(PosetDoc::from_poset(&p));
        let back = Document::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        if let Document::Poset(d) = back {
            assert_eq!(d.to_poset(false).unwrap(), p);
        }

        let s = abc_with(&[&["c"]]);
        let doc = Document::Space(SpaceDoc::from_cf_space(&s));
        let back = Document::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        if let Document::Space(d) = back {
            assert_eq!(d.to_cf_space().unwrap(), s);
        }
    }

    #[test]
    fn covers_need_the_flag() {
        let d: PosetDoc = serde_json::from_str(r#"{"elements":["0","1"],"covers":[["0","1"]]}"#).unwrap();
        assert!(matches!(d.to_poset(false), Err(Error::Parse(_))));
        assert_eq!(d.to_poset(true).unwrap(), FinitePoset::chain(2));
    }

    #[test]
    fn malformed_documents_are_parse_errors() {
        for text in ["{\"universe\": [\"a\"", "[1,2]", "{\"what\": 1}", "{\"elements\": [\"a\"], \"bogus\": 0}"] {
            assert!(matches!(Document::parse(text), Err(Error::Parse(_))), "{text}");
        }
    }

    #[test]
    fn empty_list_in_family_is_the_empty_set() {
        let d: SpaceDoc =
            serde_json::from_str(r#"{"universe":["a"],"relation":[["a","a"]],"family":[[],["a"]]}"#).unwrap();
        assert_eq!(d.to_cf_space().unwrap().family(), &[Subset::EMPTY, Subset::singleton(0)]);
    }
}
