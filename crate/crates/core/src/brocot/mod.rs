//! Stern–Brocot sequences and the tree re-levelled by the minimal-remainder
//! sum `S`.
//!
//! Every rational in `(0, 1)` is the mediant of a unique pair of
//! Stern–Brocot neighbours (its ancestors). A node `ξ = x ⊕ y` has children
//! `x ⊕ ξ` and `ξ ⊕ y`, and `S` strictly increases from a node to its
//! children, so the set `𝓩ₙ = {x : S(x) <= n + 1}` is a finite subtree
//! rooted at `1/2` and `𝓧ₙ` is its slice with `S = n + 1`.

mod phi;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cfkit::{minimal_stats, sum_s, Variant};
use crate::error::{Error, Result};
use crate::exactnum::{mediant, Rational};

pub use phi::{phi_inverse, phi_map};

/// Which hierarchy a [`LevelSet`] was taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LevelKind {
    /// Stern–Brocot sequence `𝓕ₙ` (ordinary sum `S⁰ <= n + 1`, endpoints included).
    Farey,
    /// `𝓧ₙ`: `S = n + 1`.
    X,
    /// `𝓩ₙ`: `2 <= S <= n + 1`.
    Z,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelSet {
    pub kind: LevelKind,
    pub n: u32,
    pub elements: Vec<Rational>,
}

impl LevelSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

/// A node of the tree together with the Stern–Brocot neighbours it is the
/// mediant of. `lo < value < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub value: Rational,
    pub lo: Rational,
    pub hi: Rational,
    /// `S(value) - 1`.
    pub level: u64,
}

/// Machine-integer node used by the enumerators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RawNode {
    pub p: u64,
    pub q: u64,
    pub lo: (u64, u64),
    pub hi: (u64, u64),
    pub s: u64,
    pub last: u64,
}

const MAX_FAREY_LEVEL: u32 = 30;

impl RawNode {
    pub(crate) fn new(lo: (u64, u64), hi: (u64, u64)) -> Result<Self> {
        let p = lo.0.checked_add(hi.0).ok_or_else(overflow)?;
        let q = lo.1.checked_add(hi.1).ok_or_else(overflow)?;
        let (s, last) = minimal_stats(p, q);
        Ok(RawNode {
            p,
            q,
            lo,
            hi,
            s,
            last,
        })
    }

    pub(crate) fn root() -> Self {
        RawNode::new((0, 1), (1, 1)).expect("small")
    }

    /// Geometric (left, right) children.
    pub(crate) fn children(&self) -> Result<(RawNode, RawNode)> {
        Ok((
            RawNode::new(self.lo, (self.p, self.q))?,
            RawNode::new((self.p, self.q), self.hi)?,
        ))
    }

    pub(crate) fn value(&self) -> Rational {
        Rational::from_big(self.p.into(), self.q.into())
    }

    fn to_tree_node(self) -> TreeNode {
        let r = |(p, q): (u64, u64)| Rational::from_big(p.into(), q.into());
        TreeNode {
            value: self.value(),
            lo: r(self.lo),
            hi: r(self.hi),
            level: self.s - 1,
        }
    }
}

fn overflow() -> Error {
    Error::Overflow("denominator exceeds u64".into())
}

fn to_u64(v: &BigInt) -> Result<u64> {
    v.to_u64().ok_or_else(|| Error::Overflow(v.to_string()))
}

/// In-order walk of the subtree at `root`, visiting nodes with `S <= max_s`.
pub(crate) fn walk_subtree<F: FnMut(&RawNode)>(
    root: RawNode,
    max_s: u64,
    visit: &mut F,
) -> Result<()> {
    if root.s > max_s {
        return Ok(());
    }
    let (left, right) = root.children()?;
    walk_subtree(left, max_s, visit)?;
    visit(&root);
    walk_subtree(right, max_s, visit)
}

/// Stern–Brocot sequence `𝓕ₙ`: `2ⁿ + 1` fractions from `0/1` to `1/1`.
pub fn farey_level(n: u32) -> Result<LevelSet> {
    if n > MAX_FAREY_LEVEL {
        return Err(Error::OutOfDomain(format!(
            "Stern-Brocot level {n} exceeds {MAX_FAREY_LEVEL}"
        )));
    }
    let mut seq: Vec<(u64, u64)> = vec![(0, 1), (1, 1)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(2 * seq.len() - 1);
        for w in seq.windows(2) {
            next.push(w[0]);
            next.push((w[0].0 + w[1].0, w[0].1 + w[1].1));
        }
        next.push(*seq.last().expect("nonempty"));
        seq = next;
    }
    Ok(LevelSet {
        kind: LevelKind::Farey,
        n,
        elements: seq
            .into_iter()
            .map(|(p, q)| Rational::from_big(p.into(), q.into()))
            .collect(),
    })
}

fn require_level(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfDomain("level index must be >= 1".into()));
    }
    Ok(())
}

pub(crate) fn z_raw(n: u32) -> Result<Vec<RawNode>> {
    require_level(n)?;
    let mut out = Vec::new();
    walk_subtree(RawNode::root(), u64::from(n) + 1, &mut |node| {
        out.push(*node)
    })?;
    Ok(out)
}

/// `𝓧ₙ`, sorted, by growing the tree from `1/2`.
pub fn x_level(n: u32) -> Result<LevelSet> {
    let target = u64::from(n) + 1;
    let elements = z_raw(n)?
        .into_iter()
        .filter(|node| node.s == target)
        .map(|node| node.value())
        .collect();
    Ok(LevelSet {
        kind: LevelKind::X,
        n,
        elements,
    })
}

/// `𝓩ₙ = 𝓧₁ ∪ … ∪ 𝓧ₙ`, sorted. The endpoints 0 and 1 are not included.
pub fn z_level(n: u32) -> Result<LevelSet> {
    let elements = z_raw(n)?.into_iter().map(|node| node.value()).collect();
    Ok(LevelSet {
        kind: LevelKind::Z,
        n,
        elements,
    })
}

/// `𝓧ₙ` by brute force: every reduced `p/q` in `(0, 1)` with `q` up to the
/// largest denominator on the level, filtered by `S = n + 1`.
pub fn x_level_by_filter(n: u32) -> Result<LevelSet> {
    let target = u64::from(n) + 1;
    let max_q = z_raw(n)?
        .iter()
        .filter(|node| node.s == target)
        .map(|node| node.q)
        .max()
        .unwrap_or(1);
    let mut elements = Vec::new();
    for q in 2..=max_q {
        for p in 1..q {
            if num_integer::gcd(p, q) == 1 && minimal_stats(p, q).0 == target {
                elements.push(Rational::from_big(p.into(), q.into()));
            }
        }
    }
    elements.sort();
    Ok(LevelSet {
        kind: LevelKind::X,
        n,
        elements,
    })
}

/// Finds the Stern–Brocot ancestors of `x ∈ (0, 1)` by descent.
pub(crate) fn raw_node_of(x: &Rational) -> Result<RawNode> {
    if x.signum() <= 0 || *x >= 1 {
        return Err(Error::NotATreeNode(x.to_string()));
    }
    let (p, q) = (to_u64(x.numer())?, to_u64(x.denom())?);
    let (mut lo, mut hi) = ((0u64, 1u64), (1u64, 1u64));
    loop {
        let m = (lo.0 + hi.0, lo.1 + hi.1);
        if m == (p, q) {
            return RawNode::new(lo, hi);
        }
        // compare p/q with m.0/m.1
        if u128::from(p) * u128::from(m.1) < u128::from(m.0) * u128::from(q) {
            hi = m;
        } else {
            lo = m;
        }
    }
}

impl TreeNode {
    /// The tree node labelled `x`, for `x ∈ (0, 1)`.
    pub fn of(x: &Rational) -> Result<TreeNode> {
        Ok(raw_node_of(x)?.to_tree_node())
    }

    /// Ancestors ordered by `S`: `(smaller, larger)`.
    pub fn ancestors_by_s(&self) -> (&Rational, &Rational) {
        let s = |r: &Rational| sum_s(r, Variant::Minimal);
        if s(&self.lo) < s(&self.hi) {
            (&self.lo, &self.hi)
        } else {
            (&self.hi, &self.lo)
        }
    }
}

/// Children `(x ⊕ ξ, y ⊕ ξ)` of `ξ = x ⊕ y`, where `x` is the ancestor with
/// the smaller `S`. When the last minimal quotient of `ξ` exceeds 2 both
/// children sit one level below `ξ`; when it is 2 the second child sits two
/// levels below.
pub fn children(node: &TreeNode) -> Result<(TreeNode, TreeNode)> {
    let (x, _) = node.ancestors_by_s();
    let near_lo = x == &node.lo;
    let make = |lo: &Rational, hi: &Rational| -> Result<TreeNode> {
        let value = mediant(lo, hi);
        let level = sum_s(&value, Variant::Minimal)
            .to_u64()
            .ok_or_else(|| Error::Overflow(value.to_string()))?
            - 1;
        Ok(TreeNode {
            value,
            lo: lo.clone(),
            hi: hi.clone(),
            level,
        })
    };
    let left = make(&node.lo, &node.value)?;
    let right = make(&node.value, &node.hi)?;
    Ok(if near_lo {
        (left, right)
    } else {
        (right, left)
    })
}

/// Number of nodes of the subtree rooted at `xi` on relative levels `1..=n`,
/// where a node `x` sits on relative level `S(x) - S(xi) + 1`.
pub fn subtree_count(xi: &Rational, n: u32) -> Result<u64> {
    require_level(n)?;
    let root = raw_node_of(xi)?;
    let max_s = root.s + u64::from(n) - 1;
    let mut count = 0u64;
    walk_subtree(root, max_s, &mut |_| count += 1)?;
    Ok(count)
}

/// Per-relative-level node counts `1..=n` of the subtree at `root`.
fn level_histogram(root: RawNode, n: u32) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n as usize];
    let base = root.s;
    walk_subtree(root, base + u64::from(n) - 1, &mut |node| {
        hist[(node.s - base) as usize] += 1;
    })?;
    Ok(hist)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: u32,
    #[serde(rename = "X")]
    pub x: u64,
    #[serde(rename = "Y")]
    pub y: u64,
    #[serde(rename = "Z")]
    pub z: u64,
}

/// `Xₙ`, `Yₙ = D⁽¹ᐟ³⁾ₙ`, `Zₙ` for `n = 1..=n_max`, all by enumeration.
pub fn counts(n_max: u32) -> Result<Vec<CountRow>> {
    require_level(n_max)?;
    let xs = level_histogram(RawNode::root(), n_max)?;
    let third = raw_node_of(&Rational::from_i64(1, 3).expect("nonzero"))?;
    let ys = level_histogram(third, n_max)?;
    let mut rows = Vec::with_capacity(n_max as usize);
    let (mut z, mut y) = (0u64, 0u64);
    for n in 1..=n_max {
        let i = (n - 1) as usize;
        z += xs[i];
        y += ys[i];
        rows.push(CountRow { n, x: xs[i], y, z });
    }
    Ok(rows)
}

/// Identity checks over a counts table; each failure is a readable message.
pub fn check_count_identities(rows: &[CountRow]) -> Vec<String> {
    let mut failures = Vec::new();
    for w in rows.windows(4) {
        let [a, b, c, d] = [w[0], w[1], w[2], w[3]];
        if d.x != c.x + b.x + a.x {
            failures.push(format!(
                "X_{} = {} != X_{} + X_{} + X_{}",
                d.n, d.x, c.n, b.n, a.n
            ));
        }
        if d.z != c.z + b.z + a.z + 2 {
            failures.push(format!(
                "Z_{} = {} != Z_{} + Z_{} + Z_{} + 2",
                d.n, d.z, c.n, b.n, a.n
            ));
        }
        if d.y != c.y + b.y + a.y + 2 {
            failures.push(format!(
                "Y_{} = {} != Y_{} + Y_{} + Y_{} + 2",
                d.n, d.y, c.n, b.n, a.n
            ));
        }
    }
    for w in rows.windows(3) {
        let [a, b, c] = [w[0], w[1], w[2]];
        if c.z != b.y + a.y + 1 {
            failures.push(format!("Z_{} = {} != Y_{} + Y_{} + 1", c.n, c.z, b.n, a.n));
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_i64(n, d).unwrap()
    }

    fn rs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| r(n, d)).collect()
    }

    #[test]
    fn farey_levels() {
        assert_eq!(farey_level(0).unwrap().elements, rs(&[(0, 1), (1, 1)]));
        assert_eq!(
            farey_level(2).unwrap().elements,
            rs(&[(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)])
        );
        let f3 = farey_level(3).unwrap();
        for x in rs(&[(1, 4), (2, 5), (3, 5), (3, 4)]) {
            assert!(f3.contains(&x));
        }
        for n in 0..12 {
            assert_eq!(farey_level(n).unwrap().len(), (1usize << n) + 1);
        }
        assert!(farey_level(31).is_err());
    }

    #[test]
    fn small_x_levels() {
        assert_eq!(x_level(1).unwrap().elements, rs(&[(1, 2)]));
        assert_eq!(x_level(2).unwrap().elements, rs(&[(1, 3)]));
        assert_eq!(x_level(3).unwrap().elements, rs(&[(1, 4), (2, 5), (2, 3)]));
        assert_eq!(
            x_level(4).unwrap().elements,
            rs(&[(1, 5), (2, 7), (3, 7), (3, 5), (3, 4)])
        );
        assert!(x_level(0).is_err());
    }

    #[test]
    fn z_levels() {
        assert_eq!(
            z_level(3).unwrap().elements,
            rs(&[(1, 4), (1, 3), (2, 5), (1, 2), (2, 3)])
        );
        assert_eq!(z_level(1).unwrap().elements, rs(&[(1, 2)]));
        assert_eq!(z_level(4).unwrap().len(), 10);
    }

    #[test]
    fn tree_growth_matches_filter() {
        for n in 1..=11 {
            assert_eq!(
                x_level(n).unwrap(),
                x_level_by_filter(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn children_examples() {
        let node = TreeNode::of(&r(1, 2)).unwrap();
        assert_eq!((node.lo.clone(), node.hi.clone()), (r(0, 1), r(1, 1)));
        let (a, b) = children(&node).unwrap();
        assert_eq!((a.value.clone(), a.level), (r(1, 3), node.level + 1));
        assert_eq!((b.value.clone(), b.level), (r(2, 3), node.level + 2));

        let node = TreeNode::of(&r(1, 3)).unwrap();
        let (a, b) = children(&node).unwrap();
        assert_eq!((a.value.clone(), a.level), (r(1, 4), node.level + 1));
        assert_eq!((b.value.clone(), b.level), (r(2, 5), node.level + 1));

        let node = TreeNode::of(&r(2, 5)).unwrap();
        assert_eq!(node.ancestors_by_s(), (&r(1, 2), &r(1, 3)));
        let (a, b) = children(&node).unwrap();
        assert_eq!((a.value.clone(), a.level), (r(3, 7), node.level + 1));
        assert_eq!((b.value.clone(), b.level), (r(3, 8), node.level + 2));
    }

    #[test]
    fn level_increments_follow_last_quotient() {
        for x in z_level(9).unwrap().elements {
            let node = TreeNode::of(&x).unwrap();
            let last = crate::cfkit::expand_minimal(&x)
                .last_quotient()
                .unwrap()
                .clone();
            let (a, b) = children(&node).unwrap();
            assert_eq!(a.level, node.level + 1);
            let step = if last == BigInt::from(2) { 2 } else { 1 };
            assert_eq!(b.level, node.level + step, "x = {x}");
        }
    }

    #[test]
    fn subtree_counts() {
        assert_eq!(subtree_count(&r(1, 2), 4).unwrap(), 10);
        assert_eq!(subtree_count(&r(1, 3), 3).unwrap(), 6);
        assert_eq!(subtree_count(&r(2, 5), 3).unwrap(), 5);
        assert_eq!(subtree_count(&r(1, 2), 3).unwrap(), 5);
        assert!(subtree_count(&r(0, 1), 3).is_err());
        assert!(subtree_count(&r(3, 2), 3).is_err());
    }

    #[test]
    fn subtree_count_depends_only_on_last_quotient() {
        for x in z_level(6).unwrap().elements {
            let last = crate::cfkit::expand_minimal(&x)
                .last_quotient()
                .unwrap()
                .clone();
            let reference = if last == BigInt::from(2) {
                r(1, 2)
            } else {
                r(1, 3)
            };
            for n in 1..=7 {
                assert_eq!(
                    subtree_count(&x, n).unwrap(),
                    subtree_count(&reference, n).unwrap(),
                    "x = {x}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn count_table() {
        let rows = counts(6).unwrap();
        let xs: Vec<u64> = rows.iter().map(|r| r.x).collect();
        let ys: Vec<u64> = rows.iter().map(|r| r.y).collect();
        let zs: Vec<u64> = rows.iter().map(|r| r.z).collect();
        assert_eq!(&xs[..4], &[1, 1, 3, 5]);
        assert_eq!(&ys[..4], &[1, 3, 6, 12]);
        assert_eq!(&zs[..5], &[1, 2, 5, 10, 19]);
        assert!(check_count_identities(&rows).is_empty());
    }

    #[test]
    fn identity_checker_reports_breakage() {
        let mut rows = counts(5).unwrap();
        rows[4].x += 1;
        assert!(!check_count_identities(&rows).is_empty());
    }
}
