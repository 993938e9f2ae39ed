//! Reference computations that avoid the chain machinery entirely.

use crate::relation::Relation;

/// Reflexive-transitive closure by breadth-first search from every node.
pub(crate) fn reach_closure(r: &Relation) -> Relation {
    let n = r.size();
    let mut out = Relation::empty(n);
    for start in 0..n {
        let mut seen = vec![false; n];
        let mut queue = vec![start];
        seen[start] = true;
        while let Some(x) = queue.pop() {
            out.insert(start, x);
            for y in r.successors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
    }
    out
}

/// Least preorder containing both arguments.
pub(crate) fn preorder_join(r: &Relation, s: &Relation) -> Relation {
    reach_closure(&r.union(s))
}
