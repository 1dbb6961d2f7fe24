use std::fmt;
use std::sync::Arc;

use super::FinitePoset;
use crate::config::Mode;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A total monotone map between finite posets, stored as its graph.
#[derive(Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Arc<FinitePoset>,
    target: Arc<FinitePoset>,
    graph: Vec<usize>,
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (x, &y) in self.graph.iter().enumerate() {
            m.entry(&self.source.label(x), &self.target.label(y));
        }
        m.finish()
    }
}

impl MonotoneMap {
    pub fn new(source: Arc<FinitePoset>, target: Arc<FinitePoset>, graph: Vec<usize>) -> Result<Self> {
        if graph.len() != source.len() {
            return Err(Error::MalformedMap(format!(
                "graph has {} entries for {} source elements",
                graph.len(),
                source.len()
            )));
        }
        if let Some(&bad) = graph.iter().find(|&&y| y >= target.len()) {
            return Err(Error::MalformedMap(format!("image {bad} is not in the target")));
        }
        for (x, y) in source.leq_pairs() {
            if !target.leq(graph[x], graph[y]) {
                return Err(Error::NotMonotone(x, y));
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            graph,
        })
    }

    /// Builds a map from `(source label, target label)` pairs.
    pub fn from_labels(
        source: Arc<FinitePoset>,
        target: Arc<FinitePoset>,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut graph = vec![usize::MAX; source.len()];
        for &(a, b) in pairs {
            let x = source
                .index_of(a)
                .ok_or_else(|| Error::UnknownLabel(a.into()))?;
            let y = target
                .index_of(b)
                .ok_or_else(|| Error::UnknownLabel(b.into()))?;
            if graph[x] != usize::MAX && graph[x] != y {
                return Err(Error::MalformedMap(format!("`{a}` has two images")));
            }
            graph[x] = y;
        }
        if let Some(x) = graph.iter().position(|&y| y == usize::MAX) {
            return Err(Error::MalformedMap(format!(
                "`{}` has no image",
                source.label(x)
            )));
        }
        Self::new(source, target, graph)
    }

    pub fn identity(p: Arc<FinitePoset>) -> Self {
        let graph = (0..p.len()).collect();
        MonotoneMap {
            source: p.clone(),
            target: p,
            graph,
        }
    }

    pub fn constant(source: Arc<FinitePoset>, target: Arc<FinitePoset>, value: usize) -> Result<Self> {
        if value >= target.len() {
            return Err(Error::ElementNotInPoset(value));
        }
        let graph = vec![value; source.len()];
        Ok(MonotoneMap {
            source,
            target,
            graph,
        })
    }

    /// The endo-map sending everything to the least element.
    pub fn constant_bottom(p: Arc<FinitePoset>) -> Result<Self> {
        let b = p
            .bottom()
            .ok_or_else(|| Error::PreconditionViolated("poset has no least element".into()))?;
        Self::constant(p.clone(), p, b)
    }

    pub fn source(&self) -> &Arc<FinitePoset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinitePoset> {
        &self.target
    }

    pub fn graph(&self) -> &[usize] {
        &self.graph
    }

    pub fn apply(&self, x: usize) -> usize {
        self.graph[x]
    }

    pub fn image(&self, s: Subset) -> Subset {
        s.iter().map(|x| self.graph[x]).collect()
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &MonotoneMap) -> Result<MonotoneMap> {
        if first.target != self.source {
            return Err(Error::MapMismatch("middle posets differ".into()));
        }
        Ok(MonotoneMap {
            source: first.source.clone(),
            target: self.target.clone(),
            graph: first.graph.iter().map(|&y| self.graph[y]).collect(),
        })
    }

    /// `self <= other` pointwise.
    pub fn leq_pointwise(&self, other: &MonotoneMap) -> bool {
        self.graph.len() == other.graph.len()
            && self
                .graph
                .iter()
                .zip(&other.graph)
                .all(|(&a, &b)| self.target.leq(a, b))
    }

    /// `Im(f)` as a subset of the target.
    pub fn range(&self) -> Subset {
        self.graph.iter().copied().collect()
    }

    /// `f(sup D) = sup f(D)` for every directed `D` in the source.
    pub fn is_scott_continuous(&self) -> Result<bool> {
        Ok(self
            .source
            .directed_subsets()?
            .iter()
            .all(|&(d, s)| self.target.sup(self.image(d)) == Some(self.graph[s])))
    }

    /// A set `M` with `δ(x) <= m <= x` for some `m in M` at every `x`,
    /// chosen by greedy cover. `None` when some `x` has no candidate.
    pub fn finitely_separating_witness(&self) -> Option<Subset> {
        if !self.is_endo() {
            return None;
        }
        let p = &self.source;
        let candidates: Vec<Subset> = (0..p.len())
            .map(|x| p.up_set(self.graph[x]).intersection(p.down_set(x)))
            .collect();
        if candidates.iter().any(|c| c.is_empty()) {
            return None;
        }
        // covers[m] = the x's that m separates
        let covers: Vec<Subset> = (0..p.len())
            .map(|m| (0..p.len()).filter(|&x| candidates[x].contains(m)).collect())
            .collect();
        let mut uncovered = p.elements();
        let mut chosen = Subset::EMPTY;
        while !uncovered.is_empty() {
            let best = (0..p.len())
                .max_by_key(|&m| (covers[m].intersection(uncovered).len(), std::cmp::Reverse(m)))?;
            chosen = chosen.with(best);
            uncovered = uncovered.difference(covers[best]);
        }
        Some(chosen)
    }

    /// Checks the separating property of a proposed witness.
    pub fn separates_with(&self, m: Subset) -> bool {
        let p = &self.source;
        (0..p.len()).all(|x| p.up_set(self.graph[x]).intersection(p.down_set(x)).intersects(m))
    }

    /// Monotone, deflationary and idempotent.
    pub fn is_kernel_operator(&self) -> bool {
        self.is_endo()
            && (0..self.source.len()).all(|x| {
                let k = self.graph[x];
                self.source.leq(k, x) && self.graph[k] == k
            })
    }

    /// Every monotone map from `source` to `target` in lexicographic graph order.
    pub fn enumerate_all(source: &Arc<FinitePoset>, target: &Arc<FinitePoset>) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut graph = Vec::with_capacity(source.len());
        enumerate_rec(source, target, &mut graph, &mut out);
        out.into_iter()
            .map(|graph| MonotoneMap {
                source: source.clone(),
                target: target.clone(),
                graph,
            })
            .collect()
    }

    /// Every deflationary monotone endo-map.
    pub fn enumerate_deflationary(p: &Arc<FinitePoset>) -> Vec<MonotoneMap> {
        Self::enumerate_all(p, p)
            .into_iter()
            .filter(|m| (0..p.len()).all(|x| p.leq(m.graph[x], x)))
            .collect()
    }
}

fn enumerate_rec(
    source: &FinitePoset,
    target: &FinitePoset,
    graph: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let x = graph.len();
    if x == source.len() {
        out.push(graph.clone());
        return;
    }
    for y in 0..target.len() {
        let ok = (0..x).all(|w| {
            (!source.leq(w, x) || target.leq(graph[w], y)) && (!source.leq(x, w) || target.leq(y, graph[w]))
        });
        if ok {
            graph.push(y);
            enumerate_rec(source, target, graph, out);
            graph.pop();
        }
    }
}

fn check_endo_family(p: &FinitePoset, family: &[MonotoneMap]) -> Result<()> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for m in family {
        if *m.source != *p || *m.target != *p {
            return Err(Error::MapMismatch("family member is not an endo-map on the poset".into()));
        }
    }
    Ok(())
}

/// Directed under the pointwise order, with pointwise supremum `id`.
pub fn is_approximate_identity(p: &FinitePoset, family: &[MonotoneMap]) -> Result<bool> {
    check_endo_family(p, family)?;
    let directed = family.iter().all(|a| {
        family
            .iter()
            .all(|b| family.iter().any(|c| a.leq_pointwise(c) && b.leq_pointwise(c)))
    });
    if !directed {
        return Ok(false);
    }
    Ok((0..p.len()).all(|x| {
        let values: Subset = family.iter().map(|m| m.apply(x)).collect();
        p.sup(values) == Some(x)
    }))
}

/// Approximate identity of finitely separating maps.
pub fn verify_fs_domain_witness(p: &FinitePoset, family: &[MonotoneMap]) -> Result<bool> {
    Ok(is_approximate_identity(p, family)?
        && family.iter().all(|m| m.finitely_separating_witness().is_some()))
}

/// Approximate identity of kernel operators with finite range.
pub fn verify_bf_domain_witness(p: &FinitePoset, family: &[MonotoneMap]) -> Result<bool> {
    Ok(is_approximate_identity(p, family)?
        && family
            .iter()
            .all(|m| m.is_kernel_operator() && m.range().len() <= p.len()))
}

/// The alternative criterion for algebraic domains: an approximate identity
/// of Scott continuous maps with finite range. Members need not be kernel
/// operators.
pub fn verify_bf_domain_witness_finite_range(p: &FinitePoset, family: &[MonotoneMap]) -> Result<bool> {
    if !p.is_algebraic_domain(Mode::Fast)? || !is_approximate_identity(p, family)? {
        return Ok(false);
    }
    for m in family {
        if !m.is_scott_continuous()? || m.range().len() > p.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
