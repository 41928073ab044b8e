//! Brute-force reference computations on raw permutations. Nothing here
//! touches the multiplication tables or the lattice code of the crate.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub type Perm = Vec<usize>;

/// `a` then `b`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inverse(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// 1-based cycle notation, e.g. `(1 2)(3 4 5)`.
pub fn parse(text: &str, degree: usize) -> Perm {
    let mut p = identity(degree);
    for cycle in text.split(')').map(|c| c.trim().trim_start_matches('(')).filter(|c| !c.is_empty()) {
        let pts: Vec<usize> = cycle.split_whitespace().map(|t| t.parse::<usize>().unwrap() - 1).collect();
        for (i, &x) in pts.iter().enumerate() {
            p[x] = pts[(i + 1) % pts.len()];
        }
    }
    p
}

pub fn closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    seen.insert(identity(degree));
    let mut frontier = vec![identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

pub type Set = BTreeSet<Perm>;

/// All subgroups, as closures of every set of at most three elements.
/// Enough for the small groups the tests use.
pub fn subgroups(group: &Set) -> Vec<Set> {
    let elems: Vec<&Perm> = group.iter().collect();
    let degree = elems[0].len();
    let mut found: HashSet<Set> = HashSet::new();
    found.insert(closure(degree, &[]));
    let mut frontier: Vec<Set> = found.iter().cloned().collect();
    for _ in 0..3 {
        let mut next = Vec::new();
        for h in &frontier {
            for &g in &elems {
                if h.contains(g) {
                    continue;
                }
                let mut gens: Vec<Perm> = h.iter().cloned().collect();
                gens.push(g.clone());
                let k = closure(degree, &gens);
                if found.insert(k.clone()) {
                    next.push(k);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Set> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

pub fn product(a: &Set, b: &Set) -> Set {
    a.iter().flat_map(|x| b.iter().map(move |y| compose(x, y))).collect()
}

pub fn permute(a: &Set, b: &Set) -> bool {
    product(a, b) == product(b, a)
}

pub fn is_normal(h: &Set, group: &Set) -> bool {
    group
        .iter()
        .all(|g| h.iter().all(|x| h.contains(&compose(&compose(&inverse(g), x), g))))
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    out
}

/// Part of `n` built from primes accepted by `inside`.
pub fn part(mut n: usize, inside: &dyn Fn(usize) -> bool) -> usize {
    let mut out = 1;
    for p in prime_factors(n) {
        while n.is_multiple_of(p) {
            n /= p;
            if inside(p) {
                out *= p;
            }
        }
    }
    out
}

/// A partition of the primes dividing `order`, each block a predicate.
pub type Blocks = Vec<Box<dyn Fn(usize) -> bool>>;

pub fn singletons(order: usize) -> Blocks {
    prime_factors(order)
        .into_iter()
        .map(|p| Box::new(move |q: usize| q == p) as Box<dyn Fn(usize) -> bool>)
        .collect()
}

pub fn halls(subs: &[Set], order: usize, block: &dyn Fn(usize) -> bool) -> Vec<Set> {
    let want = part(order, block);
    subs.iter().filter(|s| s.len() == want).cloned().collect()
}

pub fn is_full(subs: &[Set], order: usize, blocks: &Blocks) -> bool {
    blocks.iter().all(|b| !halls(subs, order, b.as_ref()).is_empty())
}

/// Subgroups that permute with every Hall subgroup of every block.
pub fn permutable(subs: &[Set], order: usize, blocks: &Blocks) -> Vec<Set> {
    let hs: Vec<Set> = blocks.iter().flat_map(|b| halls(subs, order, b.as_ref())).collect();
    subs.iter().filter(|a| hs.iter().all(|h| permute(a, h))).cloned().collect()
}

/// Distributivity by triples, with the join taken inside `family`.
pub fn distributive(family: &[Set]) -> bool {
    let meet = |a: &Set, b: &Set| -> Set { a.intersection(b).cloned().collect() };
    let join = |a: &Set, b: &Set| -> Set {
        family
            .iter()
            .filter(|s| a.is_subset(s) && b.is_subset(s))
            .min_by_key(|s| s.len())
            .unwrap()
            .clone()
    };
    family.iter().all(|a| {
        family
            .iter()
            .all(|b| family.iter().all(|c| meet(a, &join(b, c)) == join(&meet(a, b), &meet(a, c))))
    })
}

pub fn center(group: &Set) -> Set {
    group
        .iter()
        .filter(|x| group.iter().all(|g| compose(x, g) == compose(g, x)))
        .cloned()
        .collect()
}

pub fn commutator_subgroup(a: &Set, b: &Set) -> Set {
    let degree = a.iter().next().unwrap().len();
    let gens: Vec<Perm> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| compose(&compose(&inverse(x), &inverse(y)), &compose(x, y))))
        .collect();
    closure(degree, &gens)
}

/// Last term of the lower central series.
pub fn nilpotent_residual(group: &Set) -> Set {
    let mut current = group.clone();
    loop {
        let next = commutator_subgroup(group, &current);
        if next == current {
            return current;
        }
        current = next;
    }
}
