//! Finite ξ-sets: values that equal several ordinary sets at once.
//!
//! A ξ-set is written `A₁||A₂||…||Aₙ`; its class is the number of distinct
//! sets it equals. Identical components collapse (`A||A = A`), so an ordinary
//! set is a ξ-set of class 1. Binary operations act componentwise over the
//! Cartesian product of the operands' components, which bounds the class of a
//! result by the product of the operand classes.
//!
//! The alternating chains `G ∩ P ∪ G ∩ P ∪ …` that motivate ξ-sets are
//! modelled at finite length by [`eval_chain`]: two bracketings of the same
//! token sequence give different sets, in the same way that the two pairings
//! of `1 − 1 + 1 − …` give 0 and 1. Infinite classes are not representable.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// An ordinary finite set of atoms. `θ` is `FiniteSet::empty()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSet<A: Ord> {
    elements: BTreeSet<A>,
}

impl<A: Ord + Clone> FiniteSet<A> {
    pub fn empty() -> Self {
        Self {
            elements: BTreeSet::new(),
        }
    }

    pub fn contains(&self, atom: &A) -> bool {
        self.elements.contains(atom)
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &A> {
        self.elements.iter()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.elements.union(&other.elements).cloned().collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.elements.intersection(&other.elements).cloned().collect()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.elements.difference(&other.elements).cloned().collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.elements.is_subset(&other.elements)
    }
}

impl<A: Ord + Clone> Default for FiniteSet<A> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<A: Ord> FromIterator<A> for FiniteSet<A> {
    fn from_iter<I: IntoIterator<Item = A>>(iter: I) -> Self {
        Self {
            elements: iter.into_iter().collect(),
        }
    }
}

impl<A: Ord + fmt::Display> fmt::Display for FiniteSet<A> {
    /// `{1,2,3}`; the empty set prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elements.is_empty() {
            return f.write_str("0");
        }
        f.write_str("{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Binary set operations applied componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

impl SetOp {
    pub fn apply<A: Ord + Clone>(self, a: &FiniteSet<A>, b: &FiniteSet<A>) -> FiniteSet<A> {
        match self {
            SetOp::Union => a.union(b),
            SetOp::Intersection => a.intersection(b),
            SetOp::Difference => a.difference(b),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            SetOp::Union => '∪',
            SetOp::Intersection => '∩',
            SetOp::Difference => '\\',
        }
    }
}

/// A non-empty list of distinct components, kept in first-seen order.
///
/// Equality ignores component order.
#[derive(Debug, Clone)]
pub struct XiSet<A: Ord> {
    components: Vec<FiniteSet<A>>,
}

impl<A: Ord + Clone> XiSet<A> {
    /// Deduplicates `components`; fails on an empty list.
    pub fn from_components<I>(components: I) -> Result<Self>
    where
        I: IntoIterator<Item = FiniteSet<A>>,
    {
        let mut unique: Vec<FiniteSet<A>> = Vec::new();
        for c in components {
            if !unique.contains(&c) {
                unique.push(c);
            }
        }
        if unique.is_empty() {
            return Err(Error::InvalidArgument("a ξ-set needs at least one component".into()));
        }
        Ok(Self { components: unique })
    }

    /// Embeds an ordinary set as a class-1 ξ-set.
    pub fn ordinary(set: FiniteSet<A>) -> Self {
        Self { components: vec![set] }
    }

    pub fn components(&self) -> &[FiniteSet<A>] {
        &self.components
    }

    pub fn xi_class(&self) -> usize {
        self.components.len()
    }

    pub fn is_ordinary(&self) -> bool {
        self.components.len() == 1
    }

    /// Componentwise `op` over `self.components × other.components`, outer
    /// loop over `self`.
    pub fn combine(&self, other: &Self, op: SetOp) -> Self {
        let products = self
            .components
            .iter()
            .flat_map(|x| other.components.iter().map(move |y| op.apply(x, y)));
        Self::from_components(products).expect("product of non-empty lists is non-empty")
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, SetOp::Union)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, SetOp::Intersection)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, SetOp::Difference)
    }

    /// Every atom appearing in some component, ascending.
    pub fn atoms(&self) -> BTreeSet<A> {
        self.components.iter().flat_map(|c| c.iter().cloned()).collect()
    }
}

impl<A: Ord + Clone> PartialEq for XiSet<A> {
    fn eq(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self.components.iter().all(|c| other.components.contains(c))
    }
}

impl<A: Ord + Clone> Eq for XiSet<A> {}

impl<A: Ord + Clone> From<FiniteSet<A>> for XiSet<A> {
    fn from(set: FiniteSet<A>) -> Self {
        Self::ordinary(set)
    }
}

impl<A: Ord + fmt::Display> fmt::Display for XiSet<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("||")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `∩(A, B) = A ∩ B ∪ A ∩ B ∪ …`, which equals both `A` and `A ∩ B`.
pub fn xi_cap<A: Ord + Clone>(a: &FiniteSet<A>, b: &FiniteSet<A>) -> XiSet<A> {
    XiSet::from_components([a.clone(), a.intersection(b)]).expect("two components")
}

/// `∪(A, B) = A ∪ B ∩ A ∪ B ∩ …`, which equals both `A ∪ B` and `A`.
pub fn xi_cup<A: Ord + Clone>(a: &FiniteSet<A>, b: &FiniteSet<A>) -> XiSet<A> {
    XiSet::from_components([a.union(b), a.clone()]).expect("two components")
}

pub fn xi_union<A: Ord + Clone>(x: &XiSet<A>, y: &XiSet<A>) -> XiSet<A> {
    x.union(y)
}

pub fn xi_intersection<A: Ord + Clone>(x: &XiSet<A>, y: &XiSet<A>) -> XiSet<A> {
    x.intersection(y)
}

pub fn xi_difference<A: Ord + Clone>(x: &XiSet<A>, y: &XiSet<A>) -> XiSet<A> {
    x.difference(y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MembershipMode {
    /// In every component.
    All,
    /// In some but not all components.
    Some,
    /// In no component: ordinary non-membership.
    None,
}

/// Which components contain an atom. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport<A> {
    pub atom: A,
    pub index_set: BTreeSet<usize>,
    pub mode: MembershipMode,
}

pub fn membership<A: Ord + Clone>(atom: &A, x: &XiSet<A>) -> MembershipReport<A> {
    let index_set: BTreeSet<usize> = x
        .components()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.contains(atom))
        .map(|(i, _)| i + 1)
        .collect();
    let mode = if index_set.is_empty() {
        MembershipMode::None
    } else if index_set.len() == x.xi_class() {
        MembershipMode::All
    } else {
        MembershipMode::Some
    };
    MembershipReport {
        atom: atom.clone(),
        index_set,
        mode,
    }
}

/// Bracketing applied to the token sequence `G ∩ P ∪ G ∩ P ∪ … ∪ G ∩ P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainStrategy {
    /// `(G ∩ P) ∪ (G ∩ P) ∪ …`, consuming every token.
    Aligned,
    /// `G ∩ (P ∪ G) ∩ (P ∪ G) ∩ … ∩ P`, leaving the trailing `P` unconsumed.
    Shifted,
}

/// `length` repetitions of `base ∩ partner`, joined by `∪`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetExprChain<A: Ord> {
    base: FiniteSet<A>,
    partner: FiniteSet<A>,
    length: usize,
    strategy: ChainStrategy,
}

impl<A: Ord + Clone + fmt::Display> SetExprChain<A> {
    pub fn new(base: FiniteSet<A>, partner: FiniteSet<A>, length: usize, strategy: ChainStrategy) -> Result<Self> {
        if length == 0 {
            return Err(Error::InvalidArgument("chain length must be at least 1".into()));
        }
        Ok(Self {
            base,
            partner,
            length,
            strategy,
        })
    }

    pub fn base(&self) -> &FiniteSet<A> {
        &self.base
    }

    pub fn partner(&self) -> &FiniteSet<A> {
        &self.partner
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn strategy(&self) -> ChainStrategy {
        self.strategy
    }

    /// The chain written out with the brackets its strategy implies.
    pub fn bracketed(&self) -> String {
        let (g, p) = (self.base.to_string(), self.partner.to_string());
        match self.strategy {
            ChainStrategy::Aligned => vec![format!("({g} ∩ {p})"); self.length].join(" ∪ "),
            ChainStrategy::Shifted => {
                let mut s = g.clone();
                for _ in 1..self.length {
                    s.push_str(&format!(" ∩ ({p} ∪ {g})"));
                }
                s.push_str(&format!(" ∩ [{p}]"));
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainOutcome<A: Ord> {
    pub value: FiniteSet<A>,
    /// Operand left unconsumed by the bracketing (Shifted only).
    pub dangling: Option<FiniteSet<A>>,
}

pub fn eval_chain<A: Ord + Clone>(chain: &SetExprChain<A>) -> ChainOutcome<A> {
    let (g, p) = (&chain.base, &chain.partner);
    match chain.strategy {
        ChainStrategy::Aligned => {
            let pair = g.intersection(p);
            let value = (1..chain.length).fold(pair.clone(), |acc, _| acc.union(&pair));
            ChainOutcome { value, dangling: None }
        }
        ChainStrategy::Shifted => {
            let absorbed = p.union(g);
            let value = (1..chain.length).fold(g.clone(), |acc, _| acc.intersection(&absorbed));
            ChainOutcome {
                value,
                dangling: Some(p.clone()),
            }
        }
    }
}

/// Partial sums of `Σ (−1)ⁿ` and their Cesàro mean.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrandiDemo {
    pub partial_sums: Vec<i64>,
    pub cesaro_mean: Ratio<u64>,
}

/// First `k` partial sums `1, 0, 1, 0, …` and their exact mean `⌈k/2⌉/k`.
pub fn grandi_demo(k: usize) -> Result<GrandiDemo> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let partial_sums: Vec<i64> = (0..k)
        .scan(0i64, |acc, n| {
            *acc += if n % 2 == 0 { 1 } else { -1 };
            Some(*acc)
        })
        .collect();
    let total: i64 = partial_sums.iter().sum();
    let cesaro_mean = Ratio::new(total as u64, k as u64);
    Ok(GrandiDemo {
        partial_sums,
        cesaro_mean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> FiniteSet<i64> {
        v.iter().copied().collect()
    }

    fn xi(components: &[&[i64]]) -> XiSet<i64> {
        XiSet::from_components(components.iter().map(|c| set(c))).unwrap()
    }

    #[test]
    fn cap_examples() {
        let r = xi_cap(&set(&[1, 2]), &set(&[2, 3]));
        assert_eq!(r.components(), &[set(&[1, 2]), set(&[2])]);
        let r = xi_cap(&set(&[1]), &set(&[1, 2]));
        assert_eq!(r.xi_class(), 1);
        assert_eq!(r.components(), &[set(&[1])]);
        let r = xi_cap(&set(&[1, 2]), &FiniteSet::empty());
        assert_eq!(r.components(), &[set(&[1, 2]), FiniteSet::empty()]);
    }

    #[test]
    fn cup_examples() {
        assert_eq!(xi_cup(&set(&[1]), &set(&[2])).components(), &[set(&[1, 2]), set(&[1])]);
        assert_eq!(xi_cup(&set(&[1, 2]), &set(&[1])).xi_class(), 1);
        assert_eq!(xi_cup(&FiniteSet::empty(), &set(&[5])).components(), &[set(&[5]), FiniteSet::empty()]);
    }

    #[test]
    fn union_of_class_two_sets() {
        let x = xi(&[&[1], &[1, 2]]);
        let y = xi(&[&[3], &[]]);
        let r = xi_union(&x, &y);
        assert_eq!(r.components(), &[set(&[1, 3]), set(&[1]), set(&[1, 2, 3]), set(&[1, 2])]);
        assert_eq!(r.xi_class(), 4);
    }

    #[test]
    fn ordinary_sets_stay_ordinary() {
        let r = xi_union(&XiSet::ordinary(set(&[1])), &XiSet::ordinary(set(&[2])));
        assert!(r.is_ordinary());
        assert_eq!(r.components(), &[set(&[1, 2])]);
    }

    #[test]
    fn intersection_dedups_empty_results() {
        let x = xi(&[&[1], &[2]]);
        let r = xi_intersection(&x, &x);
        assert_eq!(r.components(), &[set(&[1]), FiniteSet::empty(), set(&[2])]);
        assert_eq!(r.xi_class(), 3);
    }

    #[test]
    fn difference_is_componentwise() {
        let r = xi_difference(&xi(&[&[1, 2], &[2, 3]]), &xi(&[&[2]]));
        assert_eq!(r.components(), &[set(&[1]), set(&[3])]);
    }

    #[test]
    fn membership_examples() {
        let x = xi(&[&[1], &[1, 2]]);
        let m = membership(&1, &x);
        assert_eq!(m.mode, MembershipMode::All);
        assert_eq!(m.index_set, BTreeSet::from([1, 2]));
        let m = membership(&2, &x);
        assert_eq!(m.mode, MembershipMode::Some);
        assert_eq!(m.index_set, BTreeSet::from([2]));
        let m = membership(&9, &x);
        assert_eq!(m.mode, MembershipMode::None);
        assert!(m.index_set.is_empty());
    }

    #[test]
    fn chain_examples() {
        let g = set(&[1, 2]);
        let theta = FiniteSet::empty();
        let aligned = SetExprChain::new(g.clone(), theta.clone(), 6, ChainStrategy::Aligned).unwrap();
        let shifted = SetExprChain::new(g.clone(), theta.clone(), 6, ChainStrategy::Shifted).unwrap();
        assert_eq!(eval_chain(&aligned).value, theta);
        assert_eq!(eval_chain(&aligned).dangling, None);
        let out = eval_chain(&shifted);
        assert_eq!(out.value, g);
        assert_eq!(out.dangling, Some(theta.clone()));
        for strategy in [ChainStrategy::Aligned, ChainStrategy::Shifted] {
            for len in 1..5 {
                let c = SetExprChain::new(theta.clone(), theta.clone(), len, strategy).unwrap();
                assert_eq!(eval_chain(&c).value, theta);
            }
        }
        assert!(SetExprChain::new(g, theta, 0, ChainStrategy::Aligned).is_err());
    }

    #[test]
    fn chain_rendering() {
        let c = SetExprChain::new(set(&[1, 2]), FiniteSet::empty(), 3, ChainStrategy::Shifted).unwrap();
        assert_eq!(c.bracketed(), "{1,2} ∩ (0 ∪ {1,2}) ∩ (0 ∪ {1,2}) ∩ [0]");
        let c = SetExprChain::new(set(&[1]), set(&[2]), 2, ChainStrategy::Aligned).unwrap();
        assert_eq!(c.bracketed(), "({1} ∩ {2}) ∪ ({1} ∩ {2})");
    }

    #[test]
    fn grandi_examples() {
        let d = grandi_demo(4).unwrap();
        assert_eq!(d.partial_sums, vec![1, 0, 1, 0]);
        assert_eq!(d.cesaro_mean, Ratio::new(1, 2));
        let d = grandi_demo(1).unwrap();
        assert_eq!(d.partial_sums, vec![1]);
        assert_eq!(d.cesaro_mean, Ratio::from_integer(1));
        let d = grandi_demo(101).unwrap();
        assert_eq!(d.cesaro_mean, Ratio::new(51, 101));
        assert!(grandi_demo(0).is_err());
    }

    #[test]
    fn equality_ignores_component_order() {
        assert_eq!(xi(&[&[1], &[2]]), xi(&[&[2], &[1]]));
        assert_ne!(xi(&[&[1], &[2]]), xi(&[&[1]]));
        assert!(XiSet::<i64>::from_components(vec![]).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(xi(&[&[1, 2], &[]]).to_string(), "{1,2}||0");
    }
}
