//! Fixed-capacity vertex sets.
//!
//! Vertices are the 1-based labels `1..=128`; vertex `v` is bit `v - 1` of a
//! `u128`. For two sets of equal size, comparing the raw masks as integers is
//! exactly the colexicographic order, which is the canonical edge order used
//! throughout the crate.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Largest vertex label representable by [`VertexSet`].
pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{v}`. Panics if `v` is not in `1..=128`.
    #[inline]
    pub fn singleton(v: u32) -> Self {
        assert!(v >= 1 && (v as usize) <= MAX_VERTICES, "vertex label {v} out of range");
        VertexSet(1u128 << (v - 1))
    }

    /// The set `{1, ..., n}`.
    #[inline]
    pub fn first_n(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    /// The set `{lo, ..., hi}` (empty when `lo > hi`).
    pub fn interval(lo: u32, hi: u32) -> Self {
        if lo > hi {
            return Self::EMPTY;
        }
        Self::first_n(hi as usize) - Self::first_n(lo as usize - 1)
    }

    /// Builds a set from vertex labels. Panics on labels outside `1..=128`.
    pub fn from_vertices<I: IntoIterator<Item = u32>>(vs: I) -> Self {
        vs.into_iter().fold(Self::EMPTY, |acc, v| acc | Self::singleton(v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: u32) -> bool {
        v >= 1 && (v as usize) <= MAX_VERTICES && self.0 >> (v - 1) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: u32) {
        *self |= Self::singleton(v);
    }

    #[inline]
    pub fn remove(&mut self, v: u32) {
        *self = *self - Self::singleton(v);
    }

    #[inline]
    pub fn with(self, v: u32) -> Self {
        self | Self::singleton(v)
    }

    #[inline]
    pub fn without(self, v: u32) -> Self {
        self - Self::singleton(v)
    }

    #[inline]
    pub const fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn intersection_len(self, other: VertexSet) -> usize {
        (self.0 & other.0).count_ones() as usize
    }

    /// Smallest label in the set.
    #[inline]
    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Largest label in the set.
    #[inline]
    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 128 - self.0.leading_zeros())
    }

    /// The `k` smallest members (all of them if `k >= len`).
    pub fn lowest(self, k: usize) -> Self {
        let mut out = Self::EMPTY;
        for v in self.iter().take(k) {
            out.insert(v);
        }
        out
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Applies a vertex relabeling: `map[v - 1]` is the image of `v`.
    pub fn map(self, map: &[u32]) -> Self {
        self.iter().fold(Self::EMPTY, |acc, v| acc.with(map[v as usize - 1]))
    }

    /// Compares two sets as sorted label sequences, e.g. `{1,5} < {2,3}`.
    pub fn cmp_lex(self, other: VertexSet) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

/// Ascending iterator over the labels of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = u32;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the `k`-subsets of a ground set in colexicographic order.
///
/// Runs Gosper's hack over index masks of the ground set's members.
pub struct Subsets {
    elems: Vec<u32>,
    contiguous: bool,
    state: Option<u128>,
}

/// All `k`-subsets of `ground`, colex order.
pub fn subsets(ground: VertexSet, k: usize) -> Subsets {
    let elems = ground.to_vec();
    let contiguous = ground == VertexSet::first_n(elems.len());
    let state = if k > elems.len() {
        None
    } else if k == 0 {
        Some(0)
    } else if k == 128 {
        Some(u128::MAX)
    } else {
        Some((1u128 << k) - 1)
    };
    Subsets {
        elems,
        contiguous,
        state,
    }
}

/// All `k`-subsets of `{1, ..., n}`, colex order.
pub fn k_subsets(n: usize, k: usize) -> Subsets {
    subsets(VertexSet::first_n(n), k)
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let x = self.state?;
        let len = self.elems.len();
        self.state = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            match x.checked_add(c) {
                None => None,
                Some(r) => {
                    let next = (((r ^ x) >> 2) / c) | r;
                    if len < 128 && next >> len != 0 {
                        None
                    } else {
                        Some(next)
                    }
                }
            }
        };
        if self.contiguous {
            return Some(VertexSet(x));
        }
        let mut out = VertexSet::EMPTY;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out.insert(self.elems[i]);
        }
        Some(out)
    }
}

/// Binomial coefficient as `u128`; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    checked_binomial(n, k).expect("binomial overflow")
}

/// `C(n, k)`, or `None` if it does not fit in a `u128`.
pub fn checked_binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication.
        let num = (n - i) as u128;
        let den = (i + 1) as u128;
        let g = gcd(acc, den);
        let (a, d) = (acc / g, den / g);
        acc = a.checked_mul(num / d)?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
