use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::element::WeylElt;
use super::perm::{Perm, SignedPerm};
use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem};
use crate::symfun::Partition;

/// Default cap on the number of group elements materialized.
pub const DEFAULT_BOUND: u128 = 10_000_000;

/// Environment variable overriding [`DEFAULT_BOUND`].
pub const BOUND_ENV: &str = "SPRINGER_BOUND";

/// The enumeration bound: `SPRINGER_BOUND` if set and valid, else the default.
pub fn default_bound() -> u128 {
    std::env::var(BOUND_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BOUND)
}

/// An explicit finite group of Weyl elements with an index for lookups.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    elements: Vec<WeylElt>,
    index: HashMap<WeylElt, usize>,
}

impl SubgroupTable {
    /// Wraps a list that is already known to be a group.
    pub fn from_elements(elements: Vec<WeylElt>) -> Self {
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        SubgroupTable { elements, index }
    }

    /// Closure of `gens` under right multiplication, in breadth-first order
    /// starting from `identity`.
    pub fn generate(identity: WeylElt, gens: &[WeylElt], bound: u128) -> Result<Self> {
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let x = elements[i].compose(g);
                if !index.contains_key(&x) {
                    if elements.len() as u128 >= bound {
                        return Err(Error::BoundExceeded {
                            order: elements.len() as u128 + 1,
                            bound,
                        });
                    }
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        Ok(SubgroupTable { elements, index })
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WeylElt) -> bool {
        self.index.contains_key(w)
    }

    pub fn position(&self, w: &WeylElt) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Representatives of the left cosets `x·sub` of `sub` in `self`, each
    /// the first element of its coset in enumeration order.
    pub fn left_coset_reps(&self, sub: &SubgroupTable) -> Vec<WeylElt> {
        let mut seen = vec![false; self.len()];
        let mut reps = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            if seen[i] {
                continue;
            }
            reps.push(x.clone());
            for h in &sub.elements {
                let k = self.index[&x.compose(h)];
                seen[k] = true;
            }
        }
        reps
    }

    /// Verifies closure under products and inverses (quadratic; tests only).
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self.elements.iter().all(|b| self.contains(&a.compose(b)))
        })
    }
}

/// Enumerates the Weyl group of `rs`: permutations, signed permutations
/// (all of them, or those with an even number of sign changes for `D`), or
/// the closure of the simple reflections for the exceptional types.
pub fn enumerate_group(rs: &RootSystem, bound: u128) -> Result<SubgroupTable> {
    let order = rs.weyl_order();
    if order > bound {
        return Err(Error::BoundExceeded { order, bound });
    }
    let n = rs.dim();
    let elements = match rs.family() {
        Family::A => permutations(n).into_iter().map(WeylElt::Perm).collect(),
        Family::B | Family::C | Family::D => {
            let even_only = rs.family() == Family::D;
            let mut out = Vec::with_capacity(order as usize);
            for p in permutations(n) {
                for mask in 0u32..(1 << n) {
                    if even_only && mask.count_ones() % 2 == 1 {
                        continue;
                    }
                    let neg = (0..n).map(|i| mask & (1 << i) != 0).collect();
                    out.push(WeylElt::Signed(SignedPerm::new(p.clone(), neg)));
                }
            }
            out
        }
        _ => {
            let gens: Vec<WeylElt> = (0..rs.rank())
                .map(|i| WeylElt::simple_reflection(rs, i))
                .collect();
            return SubgroupTable::generate(WeylElt::identity_for(rs), &gens, bound);
        }
    };
    Ok(SubgroupTable::from_elements(elements))
}

/// All permutations of `0..n` in lexicographic order of one-line notation.
fn permutations(n: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Perm::from_images(&cur).expect("permutation"));
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Label of a conjugacy class of a Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassLabel {
    /// Cycle type (type `A`).
    Cycle(Partition),
    /// Positive and negative cycle lengths (types `B`, `C`, `D`); `split`
    /// distinguishes the two `D_n` classes sharing a signed cycle type with
    /// only positive cycles of even length.
    Signed {
        pos: Partition,
        neg: Partition,
        split: Option<bool>,
    },
    /// Index of the class in enumeration order (exceptional types).
    Orbit(usize),
}

impl ClassLabel {
    pub fn cycle_type(&self) -> Option<&Partition> {
        match self {
            ClassLabel::Cycle(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Cycle(p) => write!(f, "{p}"),
            ClassLabel::Signed { pos, neg, split } => {
                write!(f, "[{pos};{neg}]")?;
                match split {
                    Some(true) => write!(f, "+"),
                    Some(false) => write!(f, "-"),
                    None => Ok(()),
                }
            }
            ClassLabel::Orbit(i) => write!(f, "c{i}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub label: ClassLabel,
    pub representative: WeylElt,
    pub size: u128,
}

/// A Weyl group with its conjugacy classes.
#[derive(Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    table: SubgroupTable,
    classes: Vec<ClassInfo>,
    by_label: BTreeMap<ClassLabel, usize>,
    // class index of each element, exceptional types only
    orbit_of: Option<Vec<u32>>,
}

impl WeylGroup {
    pub fn new(rs: Arc<RootSystem>, bound: u128) -> Result<Self> {
        let table = enumerate_group(&rs, bound)?;
        let classical = matches!(rs.family(), Family::A | Family::B | Family::C | Family::D);
        let mut g = WeylGroup {
            rs,
            table,
            classes: Vec::new(),
            by_label: BTreeMap::new(),
            orbit_of: None,
        };
        if classical {
            let mut acc: BTreeMap<ClassLabel, (WeylElt, u128)> = BTreeMap::new();
            for w in g.table.elements() {
                let label = g.classical_label(w);
                acc.entry(label).or_insert_with(|| (w.clone(), 0)).1 += 1;
            }
            g.classes = acc
                .into_iter()
                .map(|(label, (representative, size))| ClassInfo {
                    label,
                    representative,
                    size,
                })
                .collect();
        } else {
            g.compute_orbits();
        }
        g.by_label = g
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.label.clone(), i))
            .collect();
        Ok(g)
    }

    fn compute_orbits(&mut self) {
        let gens: Vec<WeylElt> = (0..self.rs.rank())
            .map(|i| WeylElt::simple_reflection(&self.rs, i))
            .collect();
        let n = self.table.len();
        let mut orbit = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if orbit[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            orbit[start] = id;
            let mut queue = VecDeque::from([start]);
            let mut size = 0u128;
            while let Some(i) = queue.pop_front() {
                size += 1;
                for s in &gens {
                    // s is an involution
                    let c = s.compose(&self.table.elements()[i]).compose(s);
                    let k = self.table.position(&c).expect("closed under conjugation");
                    if orbit[k] == u32::MAX {
                        orbit[k] = id;
                        queue.push_back(k);
                    }
                }
            }
            classes.push(ClassInfo {
                label: ClassLabel::Orbit(id as usize),
                representative: self.table.elements()[start].clone(),
                size,
            });
        }
        self.classes = classes;
        self.orbit_of = Some(orbit);
    }

    fn classical_label(&self, w: &WeylElt) -> ClassLabel {
        match w {
            WeylElt::Perm(p) => ClassLabel::Cycle(p.cycle_type()),
            WeylElt::Signed(s) => {
                let (pos, neg) = s.signed_cycle_type();
                let split = (self.rs.family() == Family::D
                    && neg.is_empty()
                    && pos.parts().iter().all(|&k| k % 2 == 0))
                .then(|| d_split_sign(s));
                ClassLabel::Signed { pos, neg, split }
            }
            WeylElt::Matrix(_) => unreachable!("classical groups use (signed) permutations"),
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn table(&self) -> &SubgroupTable {
        &self.table
    }

    pub fn order(&self) -> u128 {
        self.table.len() as u128
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_label(&self, w: &WeylElt) -> ClassLabel {
        match &self.orbit_of {
            Some(orbit) => {
                let i = self.table.position(w).expect("element of the group");
                ClassLabel::Orbit(orbit[i] as usize)
            }
            None => self.classical_label(w),
        }
    }

    pub fn class(&self, label: &ClassLabel) -> Option<&ClassInfo> {
        self.by_label.get(label).map(|&i| &self.classes[i])
    }

    /// `|C_W(w)|` for `w` in the class `label`.
    pub fn centralizer_order(&self, label: &ClassLabel) -> u128 {
        let c = self.class(label).expect("known class");
        self.order() / c.size
    }
}

/// For a signed permutation with only positive cycles of even length:
/// whether it is conjugate to the standard representative
/// `(1 … k_1)(k_1+1 … )…` by an element with an even number of sign changes.
fn d_split_sign(s: &SignedPerm) -> bool {
    let mut cycles = s.perm().cycles();
    cycles.sort_by_key(|c| std::cmp::Reverse(c.len()));
    // the conjugator sends the t-th letter of a standard cycle to ±i_t with
    // sign σ_t, where σ_0 = + and σ_{t+1} = σ_t · (sign of s at i_t)
    let mut negations = 0;
    for c in &cycles {
        let mut sigma = false;
        for &i in c {
            negations += usize::from(sigma);
            sigma ^= s.negations()[i];
        }
    }
    negations % 2 == 0
}

/// Centralizer order from the cycle data alone (classical types).
pub fn centralizer_order_formula(family: Family, label: &ClassLabel) -> Option<u128> {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    match (family, label) {
        (Family::A, ClassLabel::Cycle(p)) => Some(p.z()),
        (Family::B | Family::C | Family::D, ClassLabel::Signed { pos, neg, split }) => {
            let part = |p: &Partition| -> u128 {
                p.multiplicities()
                    .into_iter()
                    .map(|(i, m)| (2 * i as u128).pow(m as u32) * fact(m))
                    .product()
            };
            let b = part(pos) * part(neg);
            if family == Family::D {
                Some(if split.is_some() { b } else { b / 2 })
            } else {
                Some(b)
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: Family, n: usize) -> WeylGroup {
        WeylGroup::new(Arc::new(RootSystem::new(f, n).unwrap()), DEFAULT_BOUND).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(group(Family::A, 3).order(), 24);
        assert_eq!(group(Family::B, 3).order(), 48);
        assert_eq!(group(Family::D, 4).order(), 192);
        assert_eq!(group(Family::G, 2).order(), 12);
        assert_eq!(group(Family::F, 4).order(), 1152);
        let e7 = RootSystem::new(Family::E, 7).unwrap();
        assert!(matches!(
            enumerate_group(&e7, 1000),
            Err(Error::BoundExceeded {
                order: 2_903_040,
                ..
            })
        ));
    }

    #[test]
    fn class_counts() {
        // number of conjugacy classes
        assert_eq!(group(Family::A, 3).classes().len(), 5);
        assert_eq!(group(Family::B, 3).classes().len(), 10);
        assert_eq!(group(Family::D, 4).classes().len(), 13);
        assert_eq!(group(Family::G, 2).classes().len(), 6);
        assert_eq!(group(Family::F, 4).classes().len(), 25);
        let labels: Vec<String> = group(Family::A, 3)
            .classes()
            .iter()
            .map(|c| c.label.to_string())
            .collect();
        assert_eq!(labels, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
    }

    #[test]
    fn labels_are_conjugation_invariant() {
        for (f, n) in [(Family::B, 3), (Family::D, 4), (Family::G, 2)] {
            let g = group(f, n);
            let els = g.table().elements();
            for (k, w) in els.iter().enumerate().step_by(7) {
                let x = &els[(k * 13 + 5) % els.len()];
                assert_eq!(g.class_label(&x.conjugate(w)), g.class_label(w));
            }
        }
    }

    #[test]
    fn split_classes_of_d4() {
        let g = group(Family::D, 4);
        let split: Vec<&ClassInfo> = g
            .classes()
            .iter()
            .filter(|c| matches!(c.label, ClassLabel::Signed { split: Some(_), .. }))
            .collect();
        // (2,2) and (4) with all cycles positive split into two classes each
        assert_eq!(split.len(), 4);
        // the two halves have equal size and are not conjugate in D4
        for pair in split.chunks(2) {
            assert_eq!(pair[0].size, pair[1].size);
            let rep = &pair[0].representative;
            assert!(g
                .table()
                .elements()
                .iter()
                .all(|x| x.conjugate(rep) != pair[1].representative));
        }
    }

    #[test]
    fn centralizer_formulas() {
        for (f, n) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 2),
            (Family::D, 4),
            (Family::D, 5),
        ] {
            let g = group(f, n);
            for c in g.classes() {
                assert_eq!(
                    centralizer_order_formula(f, &c.label),
                    Some(g.centralizer_order(&c.label)),
                    "{}",
                    c.label
                );
            }
        }
    }

    #[test]
    fn cosets_and_closure() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let w = enumerate_group(&rs, DEFAULT_BOUND).unwrap();
        let gens = [
            WeylElt::simple_reflection(&rs, 0),
            WeylElt::simple_reflection(&rs, 2),
        ];
        let h = SubgroupTable::generate(WeylElt::identity_for(&rs), &gens, DEFAULT_BOUND).unwrap();
        assert_eq!(h.len(), 4);
        assert!(h.is_closed());
        assert_eq!(w.left_coset_reps(&h).len(), 6);
        assert!(SubgroupTable::generate(WeylElt::identity_for(&rs), &gens, 2).is_err());
    }
}
