//! Reference implementations used only by the tests. They work on plain
//! boolean matrices and never call the chain or closure code.

#![allow(dead_code)]

use relcat::ualg::FiniteAlgebra;
use relcat::Relation;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(r: &Relation) -> Matrix {
    let n = r.size();
    (0..n).map(|i| (0..n).map(|j| r.contains(i, j)).collect()).collect()
}

pub fn from_matrix(m: &Matrix) -> Relation {
    Relation::from_fn(m.len(), |i, j| m[i][j])
}

pub fn rel(n: usize, pairs: &[(usize, usize)]) -> Relation {
    Relation::from_pairs(n, pairs.iter().copied()).unwrap()
}

pub fn refl(n: usize, pairs: &[(usize, usize)]) -> Relation {
    rel(n, pairs).with_diagonal()
}

/// `S∘R` by scanning every triple.
pub fn path_compose(s: &Relation, r: &Relation) -> Relation {
    let n = r.size();
    Relation::from_fn(n, |x, z| (0..n).any(|y| r.contains(x, y) && s.contains(y, z)))
}

/// Reflexive-transitive closure by Warshall's algorithm.
pub fn warshall(r: &Relation) -> Relation {
    let mut m = matrix(r);
    let n = m.len();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                let via = m[k].clone();
                for (cell, &b) in m[i].iter_mut().zip(&via) {
                    *cell |= b;
                }
            }
        }
    }
    from_matrix(&m)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut y = x;
    while parent[y] != root {
        let next = parent[y];
        parent[y] = root;
        y = next;
    }
    root
}

/// Least equivalence containing `r`, by union-find.
pub fn union_find(r: &Relation) -> Relation {
    let n = r.size();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..n {
            if r.contains(i, j) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    Relation::from_fn(n, |i, j| roots[i] == roots[j])
}

pub fn is_reflexive(m: &Matrix) -> bool {
    (0..m.len()).all(|i| m[i][i])
}

pub fn is_symmetric(m: &Matrix) -> bool {
    (0..m.len()).all(|i| (0..m.len()).all(|j| m[i][j] == m[j][i]))
}

pub fn is_transitive(m: &Matrix) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| !m[i][j] || (0..n).all(|k| !m[j][k] || m[i][k])))
}

/// Every relation on `n` points, by counting through all bit patterns.
pub fn all_relations(n: usize) -> Vec<Relation> {
    let bits = n * n;
    (0u64..1 << bits)
        .map(|mask| Relation::from_fn(n, |i, j| mask >> (i * n + j) & 1 == 1))
        .collect()
}

pub fn brute_preorders(n: usize) -> Vec<Relation> {
    all_relations(n)
        .into_iter()
        .filter(|r| {
            let m = matrix(r);
            is_reflexive(&m) && is_transitive(&m)
        })
        .collect()
}

pub fn brute_equivalences(n: usize) -> Vec<Relation> {
    all_relations(n)
        .into_iter()
        .filter(|r| {
            let m = matrix(r);
            is_reflexive(&m) && is_symmetric(&m) && is_transitive(&m)
        })
        .collect()
}

/// The member of `candidates` containing both arguments and contained in
/// every other such member.
pub fn least_upper_bound(candidates: &[Relation], a: &Relation, b: &Relation) -> Option<Relation> {
    let above: Vec<&Relation> = candidates.iter().filter(|c| a.is_subset(c) && b.is_subset(c)).collect();
    above
        .iter()
        .find(|c| above.iter().all(|d| c.is_subset(d)))
        .map(|c| (*c).clone())
}

/// Compatibility by evaluating every operation on every related tuple.
pub fn compatible(a: &FiniteAlgebra, r: &Relation) -> bool {
    let n = a.size();
    a.operations().iter().all(|op| {
        let k = op.arity;
        let tuples = n.pow(k as u32);
        (0..tuples).all(|x| {
            (0..tuples).all(|y| {
                let digits = |mut v: usize| {
                    let mut d = vec![0; k];
                    for slot in d.iter_mut().rev() {
                        *slot = v % n;
                        v /= n;
                    }
                    d
                };
                let (dx, dy) = (digits(x), digits(y));
                let related = dx.iter().zip(&dy).all(|(&p, &q)| r.contains(p, q));
                !related || r.contains(op.table[x], op.table[y])
            })
        })
    })
}

/// Every equivalence on `n` points, one per set partition, built from
/// block-label sequences.
pub fn partitions(n: usize) -> Vec<Relation> {
    fn go(n: usize, labels: &mut Vec<usize>, out: &mut Vec<Relation>) {
        if labels.len() == n {
            out.push(Relation::from_fn(n, |i, j| labels[i] == labels[j]));
            return;
        }
        let next = labels.iter().max().map_or(0, |m| m + 1);
        for l in 0..=next {
            labels.push(l);
            go(n, labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Intersection of all compatible equivalences containing `t`.
pub fn brute_congruence(a: &FiniteAlgebra, t: &Relation) -> Relation {
    let n = a.size();
    partitions(n)
        .into_iter()
        .filter(|e| t.is_subset(e) && compatible(a, e))
        .fold(Relation::nabla(n), |acc, e| acc.intersect(&e))
}
