//! The Weyl group as permutations of the root list.
//!
//! Each element stores the image index of every root, so length and descent
//! statistics are linear scans. Enumeration is a breadth-first closure under
//! right multiplication by simple reflections; the BFS level of an element is
//! its length and the first word found is its lexicographically smallest
//! reduced word.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootsys::{RootSystem, RootVector};

/// Default enumeration cap; rules out E7 and E8.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    perm: Vec<u16>,
    length: usize,
    descent_count: usize,
    word: Vec<usize>,
}

impl WeylElement {
    fn from_perm(rs: &RootSystem, perm: Vec<u16>, word: Vec<usize>) -> Self {
        let n = rs.positive_count();
        let length = perm[..n].iter().filter(|&&k| k as usize >= n).count();
        let descent_count = perm[..rs.rank()]
            .iter()
            .filter(|&&k| k as usize >= n)
            .count();
        WeylElement {
            perm,
            length,
            descent_count,
            word,
        }
    }

    /// `perm[k]` is the index of `w(roots[k])`.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn image_index(&self, k: usize) -> usize {
        self.perm[k] as usize
    }

    /// `l(w)`: positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length
    }

    /// `L(w)`: simple roots sent to negative roots.
    pub fn descent_count(&self) -> usize {
        self.descent_count
    }

    /// One reduced word, as 0-based simple reflection indices. Reduced words
    /// are not unique; this is the lexicographically smallest one.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// True iff `w(α_i)` is a negative root.
    pub fn is_descent(&self, rs: &RootSystem, i: usize) -> bool {
        !rs.is_positive_index(self.image_index(i))
    }

    pub fn act_on_root(&self, rs: &RootSystem, v: &RootVector) -> RootVector {
        let l = rs.rank();
        let mut out = RootVector::zero(l);
        for (i, &c) in v.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = rs.root(self.image_index(i));
            for j in 0..l {
                out.0[j] += c * img.0[j];
            }
        }
        out
    }

    /// Matrix on simple-root coordinates; column `i` is `w(α_i)`.
    pub fn matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let l = rs.rank();
        let mut m = vec![vec![0i64; l]; l];
        for i in 0..l {
            let img = rs.root(self.image_index(i));
            for (r, row) in m.iter_mut().enumerate() {
                row[i] = img.0[r];
            }
        }
        m
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    longest: usize,
    lookup: BTreeMap<Vec<u16>, usize>,
    simple_reflections: Vec<usize>,
}

/// Breadth-first enumeration of `W` in `(length, word)` order.
pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    let l = rs.rank();
    let count = rs.roots().len();
    let generators: Vec<Vec<u16>> = (0..l)
        .map(|i| {
            (0..count)
                .map(|k| {
                    let img = rs.reflect(i, rs.root(k));
                    rs.index_of(&img)
                        .expect("root system closed under reflections") as u16
                })
                .collect()
        })
        .collect();

    let identity: Vec<u16> = (0..count as u16).collect();
    let mut elements = vec![WeylElement::from_perm(rs, identity.clone(), Vec::new())];
    let mut lookup = BTreeMap::new();
    lookup.insert(identity, 0usize);

    let mut level_start = 0;
    while level_start < elements.len() {
        let level_end = elements.len();
        for parent in level_start..level_end {
            for (i, s) in generators.iter().enumerate() {
                // (y s_i)(α) = y(s_i α)
                let p = &elements[parent].perm;
                let perm: Vec<u16> = s.iter().map(|&k| p[k as usize]).collect();
                if lookup.contains_key(&perm) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        cap,
                        partial: elements.len(),
                    });
                }
                let mut word = elements[parent].word.clone();
                word.push(i);
                lookup.insert(perm.clone(), elements.len());
                elements.push(WeylElement::from_perm(rs, perm, word));
            }
        }
        level_start = level_end;
    }

    let n = rs.positive_count();
    let longest: Vec<usize> = elements
        .iter()
        .enumerate()
        .filter(|(_, e)| e.length == n)
        .map(|(k, _)| k)
        .collect();
    if longest.len() != 1 {
        return Err(Error::invariant(
            "weyl.longest",
            alloc::format!("{} elements of length N = {n}", longest.len()),
        ));
    }
    let simple_reflections = (0..l).map(|i| i + 1).collect();
    Ok(WeylGroup {
        elements,
        longest: longest[0],
        lookup,
        simple_reflections,
    })
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    /// Index of the simple reflection `s_i`.
    pub fn simple_reflection(&self, i: usize) -> usize {
        self.simple_reflections[i]
    }

    pub fn index_of_perm(&self, perm: &[u16]) -> Option<usize> {
        self.lookup.get(perm).copied()
    }

    /// Index of `a ∘ b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let pa = &self.elements[a].perm;
        let perm: Vec<u16> = self.elements[b]
            .perm
            .iter()
            .map(|&k| pa[k as usize])
            .collect();
        self.index_of_perm(&perm)
            .expect("group closed under composition")
    }

    pub fn inverse(&self, a: usize) -> usize {
        let p = &self.elements[a].perm;
        let mut inv = vec![0u16; p.len()];
        for (k, &img) in p.iter().enumerate() {
            inv[img as usize] = k as u16;
        }
        self.index_of_perm(&inv)
            .expect("group closed under inverses")
    }

    /// `Σ_w t^{l(w)}`.
    pub fn poincare_polynomial(&self) -> Poly {
        Poly::census(self.elements.iter().map(|e| e.length))
    }
}

/// `Σ_w t^{l(w)}` for an enumerated Weyl group.
pub fn poincare_polynomial_w(w: &WeylGroup) -> Poly {
    w.poincare_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn group(t: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::new(&CartanType::parse(t).unwrap());
        let w = enumerate(&rs, DEFAULT_CAP).unwrap();
        (rs, w)
    }

    /// Closure of the simple reflection matrices under multiplication,
    /// independent of the permutation machinery.
    fn matrix_closure_order(rs: &RootSystem) -> usize {
        let l = rs.rank();
        let gens: Vec<Vec<Vec<i64>>> = (0..l)
            .map(|i| {
                let mut m = vec![vec![0i64; l]; l];
                for j in 0..l {
                    let img = rs.reflect(i, &RootVector::simple(l, j));
                    for r in 0..l {
                        m[r][j] = img.0[r];
                    }
                }
                m
            })
            .collect();
        let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            (0..l)
                .map(|r| {
                    (0..l)
                        .map(|c| (0..l).map(|k| a[r][k] * b[k][c]).sum())
                        .collect()
                })
                .collect()
        };
        let id: Vec<Vec<i64>> = (0..l)
            .map(|r| (0..l).map(|c| (r == c) as i64).collect())
            .collect();
        let mut seen = alloc::collections::BTreeSet::new();
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(m) = stack.pop() {
            for g in &gens {
                let p = mul(&m, g);
                if seen.insert(p.clone()) {
                    stack.push(p);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders_and_longest_lengths() {
        for (t, order, n) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("B2", 8, 4),
            ("B3", 48, 9),
            ("C3", 48, 9),
            ("G2", 12, 6),
            ("D4", 192, 12),
            ("F4", 1152, 24),
            ("A1xA1", 4, 2),
        ] {
            let (rs, w) = group(t);
            assert_eq!(w.order(), order, "{t}");
            assert_eq!(w.order(), matrix_closure_order(&rs), "{t} oracle");
            assert_eq!(w.longest().length(), n, "{t}");
            assert_eq!(w.elements().iter().filter(|e| e.length() == n).count(), 1);
        }
    }

    #[test]
    fn a2_has_one_element_of_length_three() {
        let (_, w) = group("A2");
        assert_eq!(w.elements().iter().filter(|e| e.length() == 3).count(), 1);
    }

    #[test]
    fn action_examples() {
        let (rs, w) = group("A2");
        let a1 = RootVector::simple(2, 0);
        let a2 = RootVector::simple(2, 1);
        assert_eq!(w.identity().act_on_root(&rs, &a1), a1);
        let s1 = w.element(w.simple_reflection(0));
        assert_eq!(s1.word(), [0]);
        assert_eq!(s1.act_on_root(&rs, &a2), RootVector(vec![1, 1]));
        assert_eq!(w.longest().act_on_root(&rs, &a1), RootVector(vec![0, -1]));
    }

    #[test]
    fn poincare_polynomials() {
        assert_eq!(poincare_polynomial_w(&group("A1").1).coeffs(), [1, 1]);
        assert_eq!(poincare_polynomial_w(&group("A2").1).coeffs(), [1, 2, 2, 1]);
        assert_eq!(
            poincare_polynomial_w(&group("B2").1).coeffs(),
            [1, 2, 2, 2, 1]
        );
        for t in ["A3", "B3", "G2", "F4"] {
            let (_, w) = group(t);
            assert_eq!(w.poincare_polynomial().eval_at_one() as usize, w.order());
        }
    }

    #[test]
    fn identity_and_longest_statistics() {
        for t in ["A1", "A3", "B3", "C3", "G2", "D4", "A1xA1", "B3xA1"] {
            let (rs, w) = group(t);
            assert_eq!(
                (w.identity().length(), w.identity().descent_count()),
                (0, 0)
            );
            assert_eq!(w.longest().descent_count(), rs.rank(), "{t}");
            assert_eq!(w.longest().length(), rs.positive_count());
        }
    }

    #[test]
    fn descent_iff_length_drops() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1"] {
            let (rs, w) = group(t);
            for y in 0..w.order() {
                for i in 0..rs.rank() {
                    let ys = w.compose(y, w.simple_reflection(i));
                    assert_eq!(
                        w.element(y).is_descent(&rs, i),
                        w.element(ys).length() < w.element(y).length(),
                        "{t}"
                    );
                }
            }
        }
    }

    #[test]
    fn right_multiplication_by_longest_reverses_length() {
        for t in ["A3", "B3", "G2", "D4"] {
            let (rs, w) = group(t);
            let n = rs.positive_count();
            for y in 0..w.order() {
                let yw0 = w.compose(y, w.longest_index());
                assert_eq!(w.element(y).length() + w.element(yw0).length(), n);
            }
        }
    }

    #[test]
    fn closed_under_inverse_and_words_are_reduced() {
        let (rs, w) = group("B3");
        for y in 0..w.order() {
            let inv = w.inverse(y);
            assert_eq!(w.compose(y, inv), 0);
            let e = w.element(y);
            assert_eq!(e.word().len(), e.length());
            let mut acc = 0;
            for &i in e.word() {
                acc = w.compose(acc, w.simple_reflection(i));
            }
            assert_eq!(acc, y);
            // perm commutes with negation
            for k in 0..rs.roots().len() {
                assert_eq!(
                    e.image_index(rs.negative_index(k)),
                    rs.negative_index(e.image_index(k))
                );
            }
        }
    }

    #[test]
    fn ordering_is_by_length_then_word() {
        let (_, w) = group("A3");
        for pair in w.elements().windows(2) {
            let a = (pair[0].length(), pair[0].word());
            let b = (pair[1].length(), pair[1].word());
            assert!(a < b);
        }
    }

    #[test]
    fn cap_rejection_reports_partial_count() {
        let rs = RootSystem::new(&CartanType::parse("A3").unwrap());
        match enumerate(&rs, 10) {
            Err(Error::CapExceeded { cap: 10, partial }) => assert_eq!(partial, 10),
            other => panic!("{other:?}"),
        }
    }
}
