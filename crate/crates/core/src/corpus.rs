//! Test corpora: every poset up to isomorphism, and seeded random spaces.

use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::cf_space::CFSpace;
use crate::error::Result;
use crate::ga_space::GASpace;
use crate::order::{order_isomorphism, FinitePoset, MonotoneMap};
use crate::subset::Subset;

pub use rand::SeedableRng;

/// Seeded generator used by every randomized path.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn down_closed(p: &FinitePoset) -> Vec<Subset> {
    p.elements()
        .subsets()
        .filter(|s| s.iter().all(|x| p.down_set(x).is_subset(*s)))
        .collect()
}

fn signature(p: &FinitePoset) -> Vec<(usize, usize)> {
    let mut sig: Vec<(usize, usize)> = (0..p.len())
        .map(|x| (p.down_set(x).len(), p.up_set(x).len()))
        .collect();
    sig.sort_unstable();
    sig
}

/// All posets on exactly `n` elements, one per isomorphism class, labelled
/// `0..n`. Every such poset arises from one on `n - 1` elements by adding a
/// maximal element above a down-closed set.
pub fn posets_of_size(n: usize) -> Vec<FinitePoset> {
    let mut level = vec![FinitePoset::chain(0)];
    for k in 1..=n {
        let mut next: Vec<(Vec<(usize, usize)>, FinitePoset)> = Vec::new();
        for p in &level {
            for d in down_closed(p) {
                let labels = (0..k).map(|i| i.to_string()).collect();
                let mut down: Vec<Subset> = (0..k - 1).map(|x| p.down_set(x)).collect();
                down.push(d.with(k - 1));
                let q = FinitePoset::from_down_sets(labels, down);
                let sig = signature(&q);
                let dup = next
                    .iter()
                    .any(|(s, r)| *s == sig && order_isomorphism(r, &q).is_some());
                if !dup {
                    next.push((sig, q));
                }
            }
        }
        level = next.into_iter().map(|(_, q)| q).collect();
    }
    level
}

/// All posets with `1..=max` elements up to isomorphism, smallest first.
pub fn posets_up_to(max: usize) -> Vec<Arc<FinitePoset>> {
    (1..=max)
        .flat_map(posets_of_size)
        .map(Arc::new)
        .collect()
}

/// The transitive closure of a relation on `n` points.
fn transitive_closure(n: usize, succ: &mut [Subset]) {
    for k in 0..n {
        for i in 0..n {
            if succ[i].contains(k) {
                succ[i] = succ[i].union(succ[k]);
            }
        }
    }
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// A random GA-space on `1..=max_universe` points with a nonempty relation.
pub fn random_ga_space(rng: &mut impl Rng, max_universe: usize) -> GASpace {
    let n = rng.random_range(1..=max_universe);
    let density: f64 = rng.random_range(0.1..0.6);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if rng.random_bool(density) {
                pairs.push((x, y));
            }
        }
    }
    if pairs.is_empty() {
        let x = rng.random_range(0..n);
        pairs.push((x, rng.random_range(0..n)));
    }
    GASpace::new(labels(n), &pairs).expect("generated space is well formed")
}

/// A random transitive GA-space, reflexive with probability one half.
pub fn random_transitive_space(rng: &mut impl Rng, max_universe: usize) -> GASpace {
    let g = random_ga_space(rng, max_universe);
    let n = g.len();
    let reflexive = rng.random_bool(0.5);
    let mut succ: Vec<Subset> = (0..n)
        .map(|x| {
            let s = g.successors(x).expect("in range");
            if reflexive {
                s.with(x)
            } else {
                s
            }
        })
        .collect();
    transitive_closure(n, &mut succ);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| succ[x].iter().map(move |y| (x, y))).collect();
    GASpace::new(labels(n), &pairs).expect("closure keeps the space well formed")
}

/// A random validated CF-space. Candidates failing the CF condition are
/// discarded; returns `None` if `attempts` candidates all fail.
pub fn random_cf_space(rng: &mut impl Rng, max_universe: usize, attempts: usize) -> Option<CFSpace> {
    for _ in 0..attempts {
        let base = random_transitive_space(rng, max_universe);
        let n = base.len();
        let count = rng.random_range(1..=5);
        let family: Vec<Subset> = (0..count)
            .map(|_| {
                if rng.random_bool(0.05) {
                    Subset::EMPTY
                } else {
                    let size = rng.random_range(1..=n.min(3));
                    let mut s = Subset::EMPTY;
                    while s.len() < size {
                        s = s.with(rng.random_range(0..n));
                    }
                    s
                }
            })
            .collect();
        if let Ok(space) = CFSpace::new(base, family).and_then(CFSpace::validated) {
            return Some(space);
        }
    }
    None
}

/// A random poset on `n` elements: a random relation compatible with the
/// index order, closed under transitivity.
pub fn random_poset(rng: &mut impl Rng, n: usize) -> FinitePoset {
    let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
    for x in 0..n {
        for y in x + 1..n {
            if rng.random_bool(0.35) {
                up[x] = up[x].with(y);
            }
        }
    }
    transitive_closure(n, &mut up);
    let down = (0..n).map(|y| (0..n).filter(|&x| up[x].contains(y)).collect()).collect();
    FinitePoset::from_down_sets((0..n).map(|i| i.to_string()).collect(), down)
}

/// A uniformly chosen monotone map `l1 → l2`.
pub fn random_monotone_map(rng: &mut impl Rng, l1: &Arc<FinitePoset>, l2: &Arc<FinitePoset>) -> Result<MonotoneMap> {
    let all = MonotoneMap::enumerate_all(l1, l2);
    Ok(all.choose(rng).expect("constant maps always exist").clone())
}
