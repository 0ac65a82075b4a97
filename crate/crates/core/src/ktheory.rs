//! Integer matrices on the Grothendieck group of a block, in the basis of
//! standard-module classes indexed by Weyl elements. The wall-crossing
//! functor theta acts by column x -> x + x*s_i; shuffles act by theta - id;
//! twists act by the left-multiplication permutation. Exact integer
//! arithmetic throughout.

use crate::weyl::WeylElement;
use serde::Serialize;

/// Square integer matrix indexed by a fixed enumeration of S_n (by length,
/// then lexicographic one-line notation), with a label recording which
/// functor it shadows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMatrix {
    pub n: usize,
    pub label: String,
    pub mat: Vec<Vec<i64>>,
}

impl KMatrix {
    pub fn size(&self) -> usize {
        self.mat.len()
    }

    pub fn identity(n: usize) -> KMatrix {
        let size: usize = (1..=n).product();
        let mut mat = vec![vec![0; size]; size];
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = 1;
        }
        KMatrix { n, label: "ID".to_string(), mat }
    }

    pub fn mul(&self, other: &KMatrix) -> KMatrix {
        assert_eq!(self.n, other.n);
        let s = self.size();
        let mut mat = vec![vec![0i64; s]; s];
        for i in 0..s {
            for k in 0..s {
                if self.mat[i][k] == 0 {
                    continue;
                }
                for j in 0..s {
                    mat[i][j] += self.mat[i][k] * other.mat[k][j];
                }
            }
        }
        KMatrix { n: self.n, label: format!("{}*{}", self.label, other.label), mat }
    }

    pub fn add(&self, other: &KMatrix) -> KMatrix {
        let s = self.size();
        let mut mat = self.mat.clone();
        for i in 0..s {
            for j in 0..s {
                mat[i][j] += other.mat[i][j];
            }
        }
        KMatrix { n: self.n, label: format!("{}+{}", self.label, other.label), mat }
    }

    pub fn scale(&self, c: i64) -> KMatrix {
        let mat = self.mat.iter().map(|r| r.iter().map(|x| c * x).collect()).collect();
        KMatrix { n: self.n, label: format!("{c}*{}", self.label), mat }
    }

    pub fn sub(&self, other: &KMatrix) -> KMatrix {
        self.add(&other.scale(-1))
    }

    pub fn equals(&self, other: &KMatrix) -> bool {
        self.mat == other.mat
    }

    pub fn is_identity(&self) -> bool {
        self.equals(&KMatrix::identity(self.n))
    }

    pub fn transpose(&self) -> KMatrix {
        let s = self.size();
        let mut mat = vec![vec![0i64; s]; s];
        for i in 0..s {
            for j in 0..s {
                mat[j][i] = self.mat[i][j];
            }
        }
        KMatrix { n: self.n, label: format!("{}^t", self.label), mat }
    }

    /// Determinant by integer-preserving fraction elimination (Bareiss).
    pub fn det(&self) -> i64 {
        let s = self.size();
        let mut m: Vec<Vec<i128>> =
            self.mat.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..s {
            if m[k][k] == 0 {
                let swap = (k + 1..s).find(|&i| m[i][k] != 0);
                match swap {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..s {
                for j in k + 1..s {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        (sign * m[s - 1][s - 1]) as i64
    }

    pub fn to_csv(&self) -> String {
        self.mat
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Fixed basis enumeration for S_n.
pub fn basis(n: usize) -> Vec<WeylElement> {
    WeylElement::enumerate(n)
}

fn index_of(all: &[WeylElement], w: &WeylElement) -> usize {
    all.iter().position(|x| x == w).expect("element in enumeration")
}

/// Matrix of theta_i: column at x has entries at x and x*s_i.
pub fn theta_matrix(n: usize, i: usize) -> KMatrix {
    assert!(i >= 1 && i < n, "generator index in 1..n");
    let all = basis(n);
    let size = all.len();
    let mut mat = vec![vec![0i64; size]; size];
    for (col, x) in all.iter().enumerate() {
        let xs = x.mul_simple_right(i);
        mat[col][col] += 1;
        mat[index_of(&all, &xs)][col] += 1;
    }
    KMatrix { n, label: format!("theta_{i}"), mat }
}

/// Shuffle at the level of classes: theta - id.
pub fn shuffle_matrix(n: usize, i: usize) -> KMatrix {
    let mut m = theta_matrix(n, i).sub(&KMatrix::identity(n));
    m.label = format!("shuffle_{i}");
    m
}

/// Coshuffle has the same class-level shadow as shuffle.
pub fn coshuffle_matrix(n: usize, i: usize) -> KMatrix {
    let mut m = shuffle_matrix(n, i);
    m.label = format!("coshuffle_{i}");
    m
}

/// Twist: permutation matrix of left multiplication by s_i.
pub fn twist_matrix(n: usize, i: usize) -> KMatrix {
    assert!(i >= 1 && i < n);
    let all = basis(n);
    let size = all.len();
    let mut mat = vec![vec![0i64; size]; size];
    for (col, x) in all.iter().enumerate() {
        let sx = x.mul_simple_left(i);
        mat[index_of(&all, &sx)][col] = 1;
    }
    KMatrix { n, label: format!("twist_{i}"), mat }
}

/// Completion is the inverse permutation; left multiplication by s_i is an
/// involution, so this equals the twist matrix.
pub fn completion_matrix(n: usize, i: usize) -> KMatrix {
    let mut m = twist_matrix(n, i);
    m.label = format!("completion_{i}");
    m
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationInstance {
    pub relation: String,
    pub instance: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularBraidReport {
    pub n: usize,
    pub instances: Vec<RelationInstance>,
    pub all_pass: bool,
}

/// Check every instance of the singular braid monoid relations under
/// sigma_i -> theta_i - id, sigma_i^-1 -> theta_i - id, tau_i -> theta_i,
/// as exact integer matrix identities.
pub fn check_singular_braid(n: usize) -> SingularBraidReport {
    assert!(n >= 2);
    let gens = n - 1;
    let sig: Vec<KMatrix> = (1..=gens).map(|i| shuffle_matrix(n, i)).collect();
    let sig_inv: Vec<KMatrix> = (1..=gens).map(|i| coshuffle_matrix(n, i)).collect();
    let tau: Vec<KMatrix> = (1..=gens).map(|i| theta_matrix(n, i)).collect();
    let mut instances = Vec::new();
    let mut push = |relation: &str, instance: String, pass: bool| {
        instances.push(RelationInstance { relation: relation.to_string(), instance, pass });
    };
    for i in 0..gens {
        let prod1 = sig[i].mul(&sig_inv[i]);
        let prod2 = sig_inv[i].mul(&sig[i]);
        let pass = prod1.is_identity() && prod2.is_identity();
        push("B1", format!("i={}", i + 1), pass);
    }
    for i in 0..gens.saturating_sub(1) {
        let lhs = sig[i].mul(&sig[i + 1]).mul(&sig[i]);
        let rhs = sig[i + 1].mul(&sig[i]).mul(&sig[i + 1]);
        push("B2", format!("i={}", i + 1), lhs.equals(&rhs));
    }
    for i in 0..gens {
        for j in 0..gens {
            let (gi, gj) = (i + 1, j + 1);
            let d = gi.abs_diff(gj);
            if d > 1 && i < j {
                let pass = sig[i].mul(&sig[j]).equals(&sig[j].mul(&sig[i]));
                push("B3", format!("i={gi}, j={gj}"), pass);
            }
            if d == 1 {
                let lhs = tau[i].mul(&sig[j]).mul(&sig[i]);
                let rhs = sig[j].mul(&sig[i]).mul(&tau[j]);
                push("B4", format!("i={gi}, j={gj}"), lhs.equals(&rhs));
            }
            if d != 1 {
                let pass = sig[i].mul(&tau[j]).equals(&tau[j].mul(&sig[i]));
                push("B6", format!("i={gi}, j={gj}"), pass);
            }
            if d > 1 && i < j {
                let pass = tau[i].mul(&tau[j]).equals(&tau[j].mul(&tau[i]));
                push("B7", format!("i={gi}, j={gj}"), pass);
            }
        }
    }
    let all_pass = instances.iter().all(|x| x.pass);
    SingularBraidReport { n, instances, all_pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_small_cases() {
        let t = theta_matrix(2, 1);
        assert_eq!(t.mat, vec![vec![1, 1], vec![1, 1]]);
        // each column of theta at n=3 has exactly two unit entries, at x
        // and x*s_1
        let t3 = theta_matrix(3, 1);
        for col in 0..6 {
            let ones: Vec<usize> =
                (0..6).filter(|&row| t3.mat[row][col] != 0).collect();
            assert_eq!(ones.len(), 2);
            for row in ones {
                assert_eq!(t3.mat[row][col], 1);
            }
        }
    }

    #[test]
    fn theta_squared_is_twice_theta() {
        for n in 2..=4 {
            for i in 1..n {
                let t = theta_matrix(n, i);
                assert!(t.mul(&t).equals(&t.scale(2)), "n={n}, i={i}");
            }
        }
    }

    #[test]
    fn theta_matrices_are_symmetric() {
        for n in 2..=4 {
            for i in 1..n {
                let t = theta_matrix(n, i);
                assert!(t.equals(&t.transpose()), "n={n}, i={i}");
            }
        }
    }

    #[test]
    fn theta_column_sums_are_two() {
        for n in 2..=4 {
            for i in 1..n {
                let t = theta_matrix(n, i);
                for col in 0..t.size() {
                    let sum: i64 = (0..t.size()).map(|row| t.mat[row][col]).sum();
                    assert_eq!(sum, 2);
                }
            }
        }
    }

    #[test]
    fn shuffle_small_and_involutive() {
        let s = shuffle_matrix(2, 1);
        assert_eq!(s.mat, vec![vec![0, 1], vec![1, 0]]);
        for n in 2..=4 {
            for i in 1..n {
                let sh = shuffle_matrix(n, i);
                let co = coshuffle_matrix(n, i);
                assert!(sh.mul(&co).is_identity(), "shuffle * coshuffle = id");
                assert_eq!(sh.det().abs(), 1);
            }
        }
        // shuffle^4 = shuffle^2 at n=2 (both are the identity)
        let s2 = s.mul(&s);
        let s4 = s2.mul(&s2);
        assert!(s4.equals(&s2));
        assert!(s2.is_identity());
    }

    #[test]
    fn twist_involution_and_braid() {
        let t = twist_matrix(2, 1);
        assert_eq!(t.mat, vec![vec![0, 1], vec![1, 0]]);
        for n in 2..=4 {
            for i in 1..n {
                let tw = twist_matrix(n, i);
                assert!(tw.mul(&tw).is_identity());
                assert!(completion_matrix(n, i).equals(&tw));
            }
        }
        let a = twist_matrix(3, 1);
        let b = twist_matrix(3, 2);
        assert!(a.mul(&b).mul(&a).equals(&b.mul(&a).mul(&b)));
    }

    #[test]
    fn twist_cubed_differs_from_twist_squared() {
        // The underived cube relation is invisible at this level: the twist
        // is an involution, so twist^3 = twist != twist^2 = id.
        for n in 2..=4 {
            for i in 1..n {
                let tw = twist_matrix(n, i);
                let t2 = tw.mul(&tw);
                let t3 = t2.mul(&tw);
                assert!(!t3.equals(&t2), "n={n}, i={i}");
            }
        }
    }

    #[test]
    fn theta_distant_commutation() {
        let a = theta_matrix(4, 1);
        let b = theta_matrix(4, 3);
        assert!(a.mul(&b).equals(&b.mul(&a)));
    }

    #[test]
    fn singular_braid_n2() {
        let report = check_singular_braid(2);
        assert!(report.all_pass);
        let rels: Vec<&str> =
            report.instances.iter().map(|x| x.relation.as_str()).collect();
        assert_eq!(rels, vec!["B1", "B6"]);
    }

    #[test]
    fn singular_braid_n3() {
        let report = check_singular_braid(3);
        assert!(report.all_pass);
        let count = |r: &str| report.instances.iter().filter(|x| x.relation == r).count();
        assert_eq!(count("B1"), 2);
        assert_eq!(count("B2"), 1);
        assert_eq!(count("B3"), 0);
        assert_eq!(count("B4"), 2);
        assert_eq!(count("B6"), 2);
        assert_eq!(count("B7"), 0);
    }

    #[test]
    fn singular_braid_n4_includes_distant_relations() {
        let report = check_singular_braid(4);
        assert!(report.all_pass);
        let count = |r: &str| report.instances.iter().filter(|x| x.relation == r).count();
        assert_eq!(count("B3"), 1);
        assert_eq!(count("B7"), 1);
        assert!(count("B4") == 4);
    }

    #[test]
    fn twist_words_realize_left_multiplication() {
        // products of twist matrices implement left multiplication by the
        // corresponding group element, for every word over the generators
        use crate::weyl::WeylElement;
        let n = 3;
        let all = basis(n);
        let words: Vec<Vec<usize>> = vec![
            vec![],
            vec![1],
            vec![2, 1],
            vec![1, 2, 1],
            vec![1, 1, 2],
            vec![2, 2, 1, 1],
        ];
        for word in words {
            let mut m = KMatrix::identity(n);
            for &i in &word {
                m = m.mul(&twist_matrix(n, i));
            }
            let w = WeylElement::from_word(n, &word).unwrap();
            for (col, x) in all.iter().enumerate() {
                let target = w.mul(x);
                let row = all.iter().position(|y| y == &target).unwrap();
                for (r, line) in m.mat.iter().enumerate() {
                    assert_eq!(line[col], i64::from(r == row), "word {word:?}");
                }
            }
        }
    }

    #[test]
    fn csv_export_shape() {
        let t = theta_matrix(2, 1);
        assert_eq!(t.to_csv(), "1,1\n1,1");
    }
}
