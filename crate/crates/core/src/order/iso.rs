use super::FinitePoset;

/// An order isomorphism `p -> q` as a vector `x -> f(x)`, or `None`.
///
/// Backtracking over elements of `p` in order; a candidate image must match
/// the sizes of the down- and up-sets and agree with every earlier choice in
/// both directions. The returned map is re-verified.
pub fn order_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.leq_pairs().len() != q.leq_pairs().len() {
        return None;
    }
    let sig = |s: &FinitePoset, x: usize| (s.down_set(x).len(), s.up_set(x).len());
    let n = p.len();
    let mut used = vec![false; n];
    let mut f = Vec::with_capacity(n);
    let found = search(p, q, &sig, &mut used, &mut f);
    if !found {
        return None;
    }
    debug_assert!(verify(p, q, &f));
    verify(p, q, &f).then_some(f)
}

fn search(
    p: &FinitePoset,
    q: &FinitePoset,
    sig: &dyn Fn(&FinitePoset, usize) -> (usize, usize),
    used: &mut [bool],
    f: &mut Vec<usize>,
) -> bool {
    let x = f.len();
    if x == p.len() {
        return true;
    }
    let want = sig(p, x);
    for y in 0..q.len() {
        if used[y] || sig(q, y) != want {
            continue;
        }
        let consistent = (0..x).all(|w| p.leq(w, x) == q.leq(f[w], y) && p.leq(x, w) == q.leq(y, f[w]));
        if !consistent {
            continue;
        }
        used[y] = true;
        f.push(y);
        if search(p, q, sig, used, f) {
            return true;
        }
        f.pop();
        used[y] = false;
    }
    false
}

/// Bijective and order-reflecting in both directions.
pub(crate) fn verify(p: &FinitePoset, q: &FinitePoset, f: &[usize]) -> bool {
    if f.len() != p.len() || p.len() != q.len() {
        return false;
    }
    let mut seen = vec![false; q.len()];
    for &y in f {
        if y >= q.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(f[a], f[b])))
}
