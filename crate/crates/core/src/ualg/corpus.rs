//! Small algebras used as fixtures and by the harness.

use super::FiniteAlgebra;

fn cyclic(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::binary(n, "add", |a, b| (a + b) % n).expect("valid table")
}

/// Permutations of three points in lexicographic order, composed as maps.
fn symmetric3() -> FiniteAlgebra {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    FiniteAlgebra::binary(6, "mul", |a, b| {
        let p = perms[a];
        let q = perms[b];
        let pq = [p[q[0]], p[q[1]], p[q[2]]];
        perms.iter().position(|&r| r == pq).expect("closed under composition")
    })
    .expect("valid table")
}

/// The bundled algebras, by name.
pub fn corpus() -> Vec<(&'static str, FiniteAlgebra)> {
    vec![
        ("z2", cyclic(2)),
        ("z4", cyclic(4)),
        ("z2xz2", FiniteAlgebra::binary(4, "add", |a, b| a ^ b).expect("valid table")),
        ("z6", cyclic(6)),
        ("s3", symmetric3()),
        ("semilattice2", FiniteAlgebra::binary(2, "meet", usize::min).expect("valid table")),
        ("semilattice3", FiniteAlgebra::binary(3, "meet", usize::min).expect("valid table")),
        ("set3", FiniteAlgebra::bare(3)),
        ("set4", FiniteAlgebra::bare(4)),
        ("set5", FiniteAlgebra::bare(5)),
    ]
}

pub fn named(name: &str) -> Option<FiniteAlgebra> {
    corpus().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_a_nonabelian_group() {
        let s3 = symmetric3();
        let t = &s3.operations()[0].table;
        assert_eq!(t[0..6], [0, 1, 2, 3, 4, 5]);
        assert_ne!(t[6 + 2], t[2 * 6 + 1]);
    }

    #[test]
    fn lookup() {
        assert_eq!(named("z6").unwrap().size(), 6);
        assert!(named("z7").is_none());
    }
}
