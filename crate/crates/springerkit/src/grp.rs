//! Explicit finite groups given by multiplication tables, with subgroup,
//! coset and quotient combinatorics.
//!
//! Element 0 is always the identity. Groups built from permutation
//! generators order their elements by breadth-first closure over the
//! generator list, so every derived object (coset representatives, quotient
//! labels, report rows) is reproducible.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// Hard cap on group order.
pub const ORDER_CAP: usize = 10_000;

/// Full associativity is verified up to this order; larger tables are
/// spot-checked on a deterministic sample.
const FULL_CHECK_CAP: usize = 512;

#[derive(Debug)]
struct GroupInner {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    /// Indices of the defining generators, in the order they were given.
    gens: Vec<u32>,
    /// For each non-identity element, one decomposition e = parent * gens[g]
    /// discovered by the canonical breadth-first walk.
    words: Vec<Option<(u32, u32)>>,
    /// Underlying permutations when the group was built from them.
    perms: Option<Vec<Vec<u32>>>,
    classes: OnceLock<Vec<Vec<u32>>>,
}

/// A finite group; cheap to clone and share.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupInner>);

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.mul == other.0.mul
    }
}
impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds the group generated by permutations of {0, .., degree-1}.
    ///
    /// Elements are numbered in breadth-first order starting from the
    /// identity, multiplying by the generators on the right in the order
    /// given. The product `a * b` is "a then b".
    pub fn from_permutations(degree: usize, generators: &[Vec<u32>]) -> Result<FiniteGroup> {
        for (gi, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::NotAGroup(format!(
                    "generator {gi} acts on {} points, expected {degree}",
                    g.len()
                )));
            }
            for &img in g {
                if img as usize >= degree || seen[img as usize] {
                    return Err(Error::NotAGroup(format!("generator {gi} is not a bijection")));
                }
                seen[img as usize] = true;
            }
        }
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut elems: Vec<Vec<u32>> = vec![identity.clone()];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut words: Vec<Option<(u32, u32)>> = vec![None];
        let mut head = 0;
        while head < elems.len() {
            let current = elems[head].clone();
            for (gi, g) in generators.iter().enumerate() {
                let product = compose(&current, g);
                if !index.contains_key(&product) {
                    if elems.len() >= ORDER_CAP {
                        return Err(Error::ClosureTooLarge(ORDER_CAP));
                    }
                    index.insert(product.clone(), elems.len() as u32);
                    words.push(Some((head as u32, gi as u32)));
                    elems.push(product);
                }
            }
            head += 1;
        }
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&compose(&elems[i], &elems[j])];
            }
        }
        let gens: Vec<u32> = generators.iter().map(|g| index[g]).collect();
        Self::from_parts(n, mul, gens, Some(elems), Some(words))
    }

    /// Builds a group from an explicit multiplication table. Element 0 must
    /// be the identity.
    pub fn from_table(table: &[Vec<u32>]) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > ORDER_CAP {
            return Err(Error::ClosureTooLarge(ORDER_CAP));
        }
        let mut mul = vec![0u32; n * n];
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if v as usize >= n {
                    return Err(Error::NotAGroup(format!("entry ({i},{j}) = {v} out of range")));
                }
                mul[i * n + j] = v;
            }
        }
        // greedy generating set in element order
        let mut gens: Vec<u32> = Vec::new();
        let mut closure = vec![false; n];
        closure[0] = true;
        let mut closed_count = 1;
        for e in 1..n as u32 {
            if closure[e as usize] {
                continue;
            }
            gens.push(e);
            // re-close
            let mut frontier = vec![0u32];
            let mut seen = vec![false; n];
            seen[0] = true;
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = mul[x as usize * n + g as usize];
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        frontier.push(y);
                    }
                }
            }
            closure = seen;
            closed_count = closure.iter().filter(|&&b| b).count();
            if closed_count == n {
                break;
            }
        }
        if closed_count != n {
            return Err(Error::NotAGroup("table rows do not close over the identity component".into()));
        }
        Self::from_parts(n, mul, gens, None, None)
    }

    /// The one-element group.
    pub fn trivial() -> FiniteGroup {
        Self::from_table(&[vec![0]]).expect("trivial group")
    }

    fn from_parts(
        n: usize,
        mul: Vec<u32>,
        gens: Vec<u32>,
        perms: Option<Vec<Vec<u32>>>,
        words: Option<Vec<Option<(u32, u32)>>>,
    ) -> Result<FiniteGroup> {
        // identity axioms
        for i in 0..n {
            if mul[i * n] != i as u32 || mul[i] != i as u32 {
                return Err(Error::NotAGroup("element 0 is not a two-sided identity".into()));
            }
        }
        // inverses
        let mut inv = vec![u32::MAX; n];
        for i in 0..n {
            let Some(j) = (0..n).find(|&j| mul[i * n + j] == 0) else {
                return Err(Error::NotAGroup(format!("element {i} has no right inverse")));
            };
            if mul[j * n + i] != 0 {
                return Err(Error::NotAGroup(format!("inverse of {i} is one-sided")));
            }
            inv[i] = j as u32;
        }
        // associativity, in full below the cap and sampled above it
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            let ab = mul[a * n + b] as usize;
            let bc = mul[b * n + c] as usize;
            if mul[ab * n + c] != mul[a * n + bc] {
                return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
            }
            Ok(())
        };
        if n <= FULL_CHECK_CAP {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..200_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (state >> 33) as usize % n;
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let b = (state >> 33) as usize % n;
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let c = (state >> 33) as usize % n;
                check(a, b, c)?;
            }
        }
        let words = match words {
            Some(w) => w,
            None => bfs_words(n, &mul, &gens)?,
        };
        Ok(FiniteGroup(Arc::new(GroupInner {
            order: n,
            mul,
            inv,
            gens,
            words,
            perms,
            classes: OnceLock::new(),
        })))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Indices of the defining generators.
    pub fn generators(&self) -> &[u32] {
        &self.0.gens
    }

    /// Breadth-first decomposition: `None` for the identity, otherwise
    /// `(parent, generator position)` with element = parent * gens[position].
    pub fn word(&self, e: usize) -> Option<(usize, usize)> {
        self.0.words[e].map(|(p, g)| (p as usize, g as usize))
    }

    /// The permutation realizing an element, when available.
    pub fn permutation(&self, e: usize) -> Option<&[u32]> {
        self.0.perms.as_ref().map(|ps| ps[e].as_slice())
    }

    pub fn element_order(&self, e: usize) -> usize {
        let mut x = e;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, e);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1u64, |acc, e| lcm(acc, self.element_order(e) as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> &[Vec<u32>] {
        self.0.classes.get_or_init(|| {
            let n = self.order();
            let mut seen = vec![false; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if seen[x] {
                    continue;
                }
                let mut class: Vec<u32> = (0..n).map(|g| self.conjugate(g, x) as u32).collect();
                class.sort_unstable();
                class.dedup();
                for &y in &class {
                    seen[y as usize] = true;
                }
                classes.push(class);
            }
            classes
        })
    }

    /// Generates the subgroup spanned by the given element indices.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        for &g in gens {
            assert!(g < self.order(), "generator index {g} out of range");
        }
        let mut members = vec![false; self.order()];
        members[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !members[y] {
                    members[y] = true;
                    frontier.push(y);
                }
            }
        }
        let member_list: Vec<u32> = (0..self.order() as u32).filter(|&i| members[i as usize]).collect();
        Subgroup::from_closure(self.clone(), member_list, gens.iter().map(|&g| g as u32).collect())
    }

    /// Wraps an already-closed member set as a subgroup, choosing a
    /// deterministic generating set.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Subgroup {
        let mut sorted: Vec<u32> = members.iter().map(|&m| m as u32).collect();
        sorted.sort_unstable();
        sorted.dedup();
        let inside: std::collections::HashSet<u32> = sorted.iter().copied().collect();
        for &a in &sorted {
            assert!(
                inside.contains(&(self.mul(a as usize, self.inv(a as usize) as usize) as u32)),
                "identity missing"
            );
            for &b in &sorted {
                assert!(
                    inside.contains(&(self.mul(a as usize, b as usize) as u32)),
                    "member set is not closed"
                );
            }
        }
        // greedy generators over the sorted members
        let mut gens: Vec<u32> = Vec::new();
        let mut closure = std::collections::HashSet::from([0u32]);
        for &m in &sorted {
            if closure.contains(&m) {
                continue;
            }
            gens.push(m);
            let mut frontier = vec![0u32];
            let mut seen = std::collections::HashSet::from([0u32]);
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.mul(x as usize, g as usize) as u32;
                    if seen.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            closure = seen;
        }
        Subgroup::from_closure(self.clone(), sorted, gens)
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.order()).collect();
        self.subgroup_from_members(&members)
    }

    /// Least-element representatives of the left cosets g*K, ascending.
    pub fn left_coset_reps(&self, k: &Subgroup) -> Vec<usize> {
        assert!(k.parent() == self, "subgroup of a different group");
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut reps = Vec::with_capacity(n / k.order());
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            reps.push(g);
            for &m in k.members() {
                assigned[self.mul(g, m as usize)] = true;
            }
        }
        reps
    }

    /// Least-element representatives of the double cosets K*g*L, ascending.
    pub fn double_coset_reps(&self, k: &Subgroup, l: &Subgroup) -> Vec<usize> {
        assert!(k.parent() == self && l.parent() == self, "subgroup of a different group");
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            reps.push(g);
            for &a in k.members() {
                let ag = self.mul(a as usize, g);
                for &b in l.members() {
                    assigned[self.mul(ag, b as usize)] = true;
                }
            }
        }
        reps
    }

    /// Quotient by a normal subgroup: the quotient group on least-element
    /// coset representatives together with the projection map.
    pub fn quotient(&self, n_sub: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        assert!(n_sub.parent() == self, "subgroup of a different group");
        if !n_sub.is_normal() {
            return Err(Error::NotNormal);
        }
        let reps = self.left_coset_reps(n_sub);
        let mut coset_of = vec![usize::MAX; self.order()];
        for (ri, &r) in reps.iter().enumerate() {
            for &m in n_sub.members() {
                coset_of[self.mul(r, m as usize)] = ri;
            }
        }
        let q = reps.len();
        let table: Vec<Vec<u32>> = (0..q)
            .map(|i| (0..q).map(|j| coset_of[self.mul(reps[i], reps[j])] as u32).collect())
            .collect();
        let group = FiniteGroup::from_table(&table)?;
        Ok((group, coset_of))
    }

    /// Invariant factors of an abelian group, largest first; `None` when the
    /// group is not abelian.
    pub fn abelian_invariants(&self) -> Option<Vec<u64>> {
        if !self.is_abelian() {
            return None;
        }
        let mut out = Vec::new();
        let mut g = self.clone();
        while g.order() > 1 {
            let (x, ord) = (1..g.order())
                .map(|e| (e, g.element_order(e)))
                .max_by_key(|&(e, ord)| (ord, std::cmp::Reverse(e)))
                .expect("nontrivial group");
            out.push(ord as u64);
            let cyclic = g.subgroup(&[x]);
            let (q, _) = g.quotient(&cyclic).expect("abelian subgroups are normal");
            g = q;
        }
        Some(out)
    }

    /// Direct product, elements ordered pairwise-lexicographically.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        if n > ORDER_CAP {
            return Err(Error::ClosureTooLarge(ORDER_CAP));
        }
        let idx = |x: usize, y: usize| x * nb + y;
        let table: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| idx(a.mul(i / nb, j / nb), b.mul(i % nb, j % nb)) as u32)
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&table)
    }
}

fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn bfs_words(n: usize, mul: &[u32], gens: &[u32]) -> Result<Vec<Option<(u32, u32)>>> {
    let mut words = vec![None; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0u32]);
    let mut reached = 1;
    while let Some(x) = queue.pop_front() {
        for (gi, &g) in gens.iter().enumerate() {
            let y = mul[x as usize * n + g as usize];
            if !seen[y as usize] {
                seen[y as usize] = true;
                words[y as usize] = Some((x, gi as u32));
                queue.push_back(y);
                reached += 1;
            }
        }
    }
    if reached != n {
        return Err(Error::NotAGroup("generators do not span the group".into()));
    }
    Ok(words)
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A subgroup of a [`FiniteGroup`], with its member set, normality flag and
/// a materialization of the subgroup as a group in its own right.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<u32>,
    gens: Vec<u32>,
    is_normal: bool,
    group: FiniteGroup,
    position: Vec<u32>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {} in {}, normal: {})",
            self.order(),
            self.parent.order(),
            self.is_normal
        )
    }
}

impl Subgroup {
    fn from_closure(parent: FiniteGroup, members: Vec<u32>, gens: Vec<u32>) -> Subgroup {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut inside = vec![false; parent.order()];
        for &m in &members {
            inside[m as usize] = true;
        }
        let is_normal = (0..parent.order())
            .all(|g| members.iter().all(|&m| inside[parent.conjugate(g, m as usize)]));
        let mut position = vec![u32::MAX; parent.order()];
        for (i, &m) in members.iter().enumerate() {
            position[m as usize] = i as u32;
        }
        let k = members.len();
        let table: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| position[parent.mul(members[i] as usize, members[j] as usize)])
                    .collect()
            })
            .collect();
        let group = FiniteGroup::from_table(&table).expect("closed member set forms a group");
        Subgroup { parent, members, gens, is_normal, group, position }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// Member element indices in the parent, ascending.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn contains(&self, e: usize) -> bool {
        self.position[e] != u32::MAX
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// The subgroup materialized as a group; its elements follow the sorted
    /// member list, so position 0 is the identity.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Parent index of the subgroup element at a given position.
    pub fn to_parent(&self, pos: usize) -> usize {
        self.members[pos] as usize
    }

    /// Position within the subgroup of a parent element, if it belongs.
    pub fn from_parent(&self, e: usize) -> Option<usize> {
        let p = self.position[e];
        (p != u32::MAX).then_some(p as usize)
    }

    /// Defining generators as parent indices.
    pub fn parent_gens(&self) -> &[u32] {
        &self.gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    pub fn quaternion8() -> FiniteGroup {
        // left-regular permutations of i and j on {1,-1,i,-i,j,-j,k,-k}
        FiniteGroup::from_permutations(
            8,
            &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn s3_from_generators() {
        // oracle: brute-force closure of {(0 1), (0 1 2)} has 6 elements
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 3);
    }

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let g = FiniteGroup::from_permutations(3, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn quaternion_structure() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        let center: Vec<usize> = (0..8)
            .filter(|&z| (0..8).all(|g| q8.mul(z, g) == q8.mul(g, z)))
            .collect();
        assert_eq!(center.len(), 2);
        let orders: Vec<usize> = (0..8).map(|e| q8.element_order(e)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn quaternion_table_roundtrip() {
        let q8 = quaternion8();
        let n = q8.order();
        let table: Vec<Vec<u32>> =
            (0..n).map(|i| (0..n).map(|j| q8.mul(i, j) as u32).collect()).collect();
        let rebuilt = FiniteGroup::from_table(&table).unwrap();
        assert_eq!(rebuilt, q8);
    }

    #[test]
    fn bad_tables_rejected() {
        // 0 not an identity
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(FiniteGroup::from_table(&t), Err(Error::NotAGroup(_))));
        // non-associative latin square (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&t), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn subgroup_normality() {
        let g = s3();
        // the 3-cycle generates A3, index 2, hence normal
        let a3 = g.subgroup(&[2]);
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal());
        // a transposition generates an order-2 subgroup that is not normal
        let c2 = g.subgroup(&[1]);
        assert_eq!(c2.order(), 2);
        assert!(!c2.is_normal());
        // the whole group
        let full = g.subgroup(&[1, 2]);
        assert_eq!(full.order(), 6);
        assert!(full.is_normal());
    }

    #[test]
    fn coset_reps_and_lagrange() {
        let g = s3();
        let a3 = g.subgroup(&[2]);
        let reps = g.left_coset_reps(&a3);
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0], 0);
        // Lagrange: cosets tile the group
        assert_eq!(reps.len() * a3.order(), g.order());

        let dreps = g.double_coset_reps(&a3, &a3);
        assert_eq!(dreps.len(), 2);

        let full = g.full_subgroup();
        assert_eq!(g.double_coset_reps(&full, &full), vec![0]);
    }

    #[test]
    fn double_cosets_partition_the_group() {
        let g = s3();
        let k = g.subgroup(&[1]);
        let l = g.subgroup(&[2]);
        let reps = g.double_coset_reps(&k, &l);
        let mut covered = vec![0usize; g.order()];
        for &r in &reps {
            for &a in k.members() {
                for &b in l.members() {
                    covered[g.mul(g.mul(a as usize, r), b as usize)] += 1;
                }
            }
        }
        assert!(covered.iter().all(|&c| c > 0), "double cosets cover the group");
    }

    #[test]
    fn quotient_s3_by_a3() {
        let g = s3();
        let a3 = g.subgroup(&[2]);
        let (q, pi) = g.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        // projection is a homomorphism
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(pi[g.mul(a, b)], q.mul(pi[a], pi[b]));
            }
        }
        // kernel is exactly A3
        let kernel: Vec<usize> = (0..g.order()).filter(|&e| pi[e] == 0).collect();
        assert_eq!(kernel, a3.members().iter().map(|&m| m as usize).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_q8_by_center_is_klein_four() {
        let q8 = quaternion8();
        let z: Vec<usize> = (0..8)
            .filter(|&x| (0..8).all(|g| q8.mul(x, g) == q8.mul(g, x)))
            .collect();
        let center = q8.subgroup_from_members(&z);
        let (q, _) = q8.quotient(&center).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.abelian_invariants(), Some(vec![2, 2]));
    }

    #[test]
    fn quotient_by_trivial_subgroup() {
        let g = s3();
        let triv = g.subgroup(&[]);
        let (q, pi) = g.quotient(&triv).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(pi, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn quotient_requires_normality() {
        let g = s3();
        let c2 = g.subgroup(&[1]);
        assert_eq!(g.quotient(&c2).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn abelian_invariants_of_small_groups() {
        let c6 = FiniteGroup::from_permutations(6, &[vec![1, 2, 3, 4, 5, 0]]).unwrap();
        assert_eq!(c6.abelian_invariants(), Some(vec![6]));
        let v4 =
            FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]]).unwrap();
        assert_eq!(v4.abelian_invariants(), Some(vec![2, 2]));
        assert_eq!(s3().abelian_invariants(), None);
    }

    #[test]
    fn direct_product_orders() {
        let c2 = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let p = FiniteGroup::direct_product(&c2, &s3()).unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.exponent(), 6);
    }

    #[test]
    fn closure_cap_respected() {
        // symmetric group on 8 points has order 40320 > cap
        let gens = vec![vec![1, 0, 2, 3, 4, 5, 6, 7], vec![1, 2, 3, 4, 5, 6, 7, 0]];
        assert!(matches!(
            FiniteGroup::from_permutations(8, &gens),
            Err(Error::ClosureTooLarge(_))
        ));
    }

    #[test]
    fn words_reconstruct_elements() {
        let g = s3();
        for e in 1..g.order() {
            let (parent, gpos) = g.word(e).unwrap();
            assert_eq!(g.mul(parent, g.generators()[gpos] as usize), e);
        }
    }
}
