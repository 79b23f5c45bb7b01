//! Finite-group character data over the rationals.
//!
//! Tables are validated on construction: group axioms on the multiplication
//! table, conjugation-closed classes, and row orthogonality under the
//! class-weighted inner product. Only rational character values are
//! supported, which covers the bundled groups (ℤ/2, S₃, ℤ/2×ℤ/2); anything
//! cyclotomic is rejected at load.

use crate::exactalg::{rat, BigInt, BigRational};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArtinError {
    #[error("group: {0}")]
    BadGroup(String),
    #[error("character table: {0}")]
    BadCharacter(String),
    #[error("action: {0}")]
    BadAction(String),
    #[error("subgroup data: {0}")]
    BadSubgroup(String),
    #[error("class function has {got} values but the group has {want} classes")]
    BadClassFunction { got: usize, want: usize },
    #[error("json: {0}")]
    Json(String),
    #[error(transparent)]
    Curve(#[from] crate::curvezeta::CurveError),
    #[error(transparent)]
    Field(#[from] crate::curvezeta::FieldError),
    #[error(transparent)]
    Budget(#[from] crate::budget::BudgetError),
}

/// A finite group with labels, conjugacy classes, and its rational
/// irreducible character table (rows = characters, columns = classes).
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterData {
    labels: Vec<String>,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    mult: Vec<Vec<usize>>,
    table: Vec<Vec<BigRational>>,
    identity: usize,
}

impl CharacterData {
    pub fn new(
        labels: Vec<String>,
        inverse: Vec<usize>,
        classes: Vec<Vec<usize>>,
        mult: Vec<Vec<usize>>,
        table: Vec<Vec<BigRational>>,
    ) -> Result<Self, ArtinError> {
        let n = labels.len();
        if n == 0 {
            return Err(ArtinError::BadGroup("empty group".into()));
        }
        if mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(ArtinError::BadGroup(format!(
                "multiplication table must be {n}x{n}"
            )));
        }
        if mult.iter().flatten().any(|&v| v >= n) {
            return Err(ArtinError::BadGroup("product index out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| mult[e][j] == j && mult[j][e] == j))
            .ok_or_else(|| ArtinError::BadGroup("no identity element".into()))?;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if mult[mult[i][j]][k] != mult[i][mult[j][k]] {
                        return Err(ArtinError::BadGroup(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        if inverse.len() != n
            || (0..n).any(|g| {
                inverse[g] >= n
                    || mult[g][inverse[g]] != identity
                    || mult[inverse[g]][g] != identity
            })
        {
            return Err(ArtinError::BadGroup("inverse map is inconsistent".into()));
        }
        let mut class_of = vec![usize::MAX; n];
        for (c, members) in classes.iter().enumerate() {
            if members.is_empty() {
                return Err(ArtinError::BadGroup("empty conjugacy class".into()));
            }
            for &g in members {
                if g >= n || class_of[g] != usize::MAX {
                    return Err(ArtinError::BadGroup(
                        "classes must partition the elements".into(),
                    ));
                }
                class_of[g] = c;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(ArtinError::BadGroup(
                "classes must partition the elements".into(),
            ));
        }
        for g in 0..n {
            for x in 0..n {
                let conj = mult[mult[x][g]][inverse[x]];
                if class_of[conj] != class_of[g] {
                    return Err(ArtinError::BadGroup(format!(
                        "class of {} is not conjugation-closed",
                        labels[g]
                    )));
                }
            }
        }
        let k = classes.len();
        if table.len() != k || table.iter().any(|row| row.len() != k) {
            return Err(ArtinError::BadCharacter(format!(
                "expected a {k}x{k} table (one row per class)"
            )));
        }
        let mut dim_square_sum = BigRational::from_integer(BigInt::from(0));
        for row in &table {
            let dim = &row[class_of[identity]];
            if !dim.is_integer() || dim <= &rat(0) {
                return Err(ArtinError::BadCharacter(
                    "degrees must be positive integers".into(),
                ));
            }
            dim_square_sum += dim * dim;
        }
        if dim_square_sum != rat(n as i64) {
            return Err(ArtinError::BadCharacter(format!(
                "degree squares sum to {dim_square_sum}, want {n}"
            )));
        }
        let cd = CharacterData {
            labels,
            inverse,
            classes,
            class_of,
            mult,
            table,
            identity,
        };
        for i in 0..k {
            for j in 0..k {
                let want = if i == j { rat(n as i64) } else { rat(0) };
                if cd.inner_product_unnormalized(&cd.table[i], &cd.table[j]) != want {
                    return Err(ArtinError::BadCharacter(format!(
                        "rows {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
        Ok(cd)
    }

    /// Σ_c |c| · f(c) · h(c⁻¹), the class-weighted pairing without the 1/|G|.
    fn inner_product_unnormalized(&self, f: &[BigRational], h: &[BigRational]) -> BigRational {
        let mut acc = rat(0);
        for (c, members) in self.classes.iter().enumerate() {
            let inv_class = self.class_of[self.inverse[members[0]]];
            acc += rat(members.len() as i64) * &f[c] * &h[inv_class];
        }
        acc
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn mult(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    /// Row of the table: the values of the i-th irreducible on each class.
    pub fn irreducible(&self, i: usize) -> &[BigRational] {
        &self.table[i]
    }

    pub fn char_value(&self, row: &[BigRational], g: usize) -> BigRational {
        row[self.class_of[g]].clone()
    }

    pub fn degree(&self, i: usize) -> BigRational {
        self.table[i][self.class_of[self.identity]].clone()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut k = 1;
        while acc != self.identity {
            acc = self.mult[acc][g];
            k += 1;
        }
        k
    }

    /// The regular character as a class function: |G| at the identity, 0
    /// elsewhere.
    pub fn regular_character(&self) -> Vec<BigRational> {
        let mut v = vec![rat(0); self.num_classes()];
        v[self.class_of[self.identity]] = rat(self.order() as i64);
        v
    }

    /// Index of the trivial character's row.
    pub fn trivial_row(&self) -> usize {
        (0..self.table.len())
            .find(|&i| self.table[i].iter().all(|v| *v == rat(1)))
            .expect("a valid table contains the trivial character")
    }
}

pub fn add_class_functions(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A subgroup H ≤ G: `elements[i]` is the index in G of H's element i, and
/// `group` is H's own character data in the same order.
#[derive(Debug, Clone)]
pub struct SubgroupData {
    pub elements: Vec<usize>,
    pub group: CharacterData,
}

pub fn validate_subgroup(parent: &CharacterData, sub: &SubgroupData) -> Result<(), ArtinError> {
    let h = sub.group.order();
    if sub.elements.len() != h {
        return Err(ArtinError::BadSubgroup(format!(
            "{} embedded elements for a group of order {h}",
            sub.elements.len()
        )));
    }
    let mut seen = vec![false; parent.order()];
    for &g in &sub.elements {
        if g >= parent.order() || seen[g] {
            return Err(ArtinError::BadSubgroup(
                "embedded elements must be distinct members of G".into(),
            ));
        }
        seen[g] = true;
    }
    for i in 0..h {
        for j in 0..h {
            if parent.mult(sub.elements[i], sub.elements[j])
                != sub.elements[sub.group.mult(i, j)]
            {
                return Err(ArtinError::BadSubgroup(format!(
                    "embedding is not a homomorphism at ({i},{j})"
                )));
            }
        }
    }
    Ok(())
}

/// Ind_H^G χ as a class function on G:
/// Indχ(g) = (1/|H|) Σ_{x ∈ G, x⁻¹gx ∈ H} χ(x⁻¹gx).
pub fn induced_character(
    parent: &CharacterData,
    sub: &SubgroupData,
    chi_row: usize,
) -> Result<Vec<BigRational>, ArtinError> {
    validate_subgroup(parent, sub)?;
    if chi_row >= sub.group.num_classes() {
        return Err(ArtinError::BadSubgroup(format!(
            "subgroup has no character row {chi_row}"
        )));
    }
    let chi = sub.group.irreducible(chi_row);
    let mut values = Vec::with_capacity(parent.num_classes());
    for c in 0..parent.num_classes() {
        let g = parent.class_rep(c);
        let mut acc = rat(0);
        for x in 0..parent.order() {
            let conj = parent.mult(parent.mult(parent.inverse(x), g), x);
            if let Some(pos) = sub.elements.iter().position(|&e| e == conj) {
                acc += sub.group.char_value(chi, pos);
            }
        }
        values.push(acc / rat(sub.group.order() as i64));
    }
    Ok(values)
}

/// A quotient Q = G/N: `proj[g]` is the index in Q of the coset of g.
#[derive(Debug, Clone)]
pub struct QuotientData {
    pub proj: Vec<usize>,
    pub group: CharacterData,
}

pub fn validate_quotient(parent: &CharacterData, q: &QuotientData) -> Result<(), ArtinError> {
    if q.proj.len() != parent.order() {
        return Err(ArtinError::BadSubgroup(
            "projection must be defined on all of G".into(),
        ));
    }
    let m = q.group.order();
    let mut hit = vec![false; m];
    for &img in &q.proj {
        if img >= m {
            return Err(ArtinError::BadSubgroup(
                "projection image out of range".into(),
            ));
        }
        hit[img] = true;
    }
    if hit.contains(&false) {
        return Err(ArtinError::BadSubgroup("projection is not onto".into()));
    }
    if q.proj[parent.identity()] != q.group.identity() {
        return Err(ArtinError::BadSubgroup(
            "projection must send identity to identity".into(),
        ));
    }
    for g in 0..parent.order() {
        for h in 0..parent.order() {
            if q.group.mult(q.proj[g], q.proj[h]) != q.proj[parent.mult(g, h)] {
                return Err(ArtinError::BadSubgroup(format!(
                    "projection is not a homomorphism at ({g},{h})"
                )));
            }
        }
    }
    Ok(())
}

/// Pullback of a character of Q along the projection, as a class function
/// on G.
pub fn inflated_character(
    parent: &CharacterData,
    q: &QuotientData,
    chi_row: usize,
) -> Result<Vec<BigRational>, ArtinError> {
    validate_quotient(parent, q)?;
    if chi_row >= q.group.num_classes() {
        return Err(ArtinError::BadSubgroup(format!(
            "quotient has no character row {chi_row}"
        )));
    }
    let chi = q.group.irreducible(chi_row);
    Ok((0..parent.num_classes())
        .map(|c| q.group.char_value(chi, q.proj[parent.class_rep(c)]))
        .collect())
}

fn xor_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| i ^ j).collect()).collect()
}

fn rows(vals: &[&[i64]]) -> Vec<Vec<BigRational>> {
    vals.iter()
        .map(|row| row.iter().map(|&v| rat(v)).collect())
        .collect()
}

/// ℤ/2 with its two characters.
pub fn character_table_z2() -> CharacterData {
    CharacterData::new(
        vec!["e".into(), "s".into()],
        vec![0, 1],
        vec![vec![0], vec![1]],
        xor_group_table(2),
        rows(&[&[1, 1], &[1, -1]]),
    )
    .expect("bundled table is valid")
}

/// The trivial group.
pub fn character_table_trivial() -> CharacterData {
    CharacterData::new(
        vec!["e".into()],
        vec![0],
        vec![vec![0]],
        vec![vec![0]],
        rows(&[&[1]]),
    )
    .expect("bundled table is valid")
}

/// ℤ/2 × ℤ/2 with its four characters.
pub fn character_table_v4() -> CharacterData {
    CharacterData::new(
        vec!["e".into(), "a".into(), "b".into(), "ab".into()],
        vec![0, 1, 2, 3],
        vec![vec![0], vec![1], vec![2], vec![3]],
        xor_group_table(4),
        rows(&[
            &[1, 1, 1, 1],
            &[1, 1, -1, -1],
            &[1, -1, 1, -1],
            &[1, -1, -1, 1],
        ]),
    )
    .expect("bundled table is valid")
}

/// S₃ as permutations of three letters; classes are the identity, the
/// 3-cycles, and the transpositions, carrying the trivial, sign, and
/// standard characters.
pub fn character_table_s3() -> CharacterData {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 2, 0], // r
        [2, 0, 1], // r^2
        [0, 2, 1], // swap 1,2
        [2, 1, 0], // swap 0,2
        [1, 0, 2], // swap 0,1
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
    let index_of = |target: [usize; 3]| {
        perms
            .iter()
            .position(|p| *p == target)
            .expect("S3 is closed under composition")
    };
    let mult: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| index_of(compose(p, q))).collect())
        .collect();
    let inverse: Vec<usize> = (0..6)
        .map(|g| (0..6).find(|&h| mult[g][h] == 0).expect("group inverse"))
        .collect();
    CharacterData::new(
        vec![
            "e".into(),
            "r".into(),
            "r2".into(),
            "s".into(),
            "rs".into(),
            "r2s".into(),
        ],
        inverse,
        vec![vec![0], vec![1, 2], vec![3, 4, 5]],
        mult,
        rows(&[&[1, 1, 1], &[1, 1, -1], &[2, -1, 0]]),
    )
    .expect("bundled table is valid")
}

#[derive(Debug, Deserialize)]
pub struct CharacterFile {
    pub labels: Vec<String>,
    pub inverse: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub mult: Vec<Vec<usize>>,
    pub table: Vec<Vec<String>>,
}

impl CharacterData {
    pub fn from_file(file: CharacterFile) -> Result<Self, ArtinError> {
        let mut table = Vec::with_capacity(file.table.len());
        for row in &file.table {
            let mut parsed = Vec::with_capacity(row.len());
            for v in row {
                parsed.push(
                    v.parse::<BigRational>()
                        .map_err(|_| ArtinError::BadCharacter(format!("bad value '{v}'")))?,
                );
            }
            table.push(parsed);
        }
        CharacterData::new(file.labels, file.inverse, file.classes, file.mult, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_tables_validate() {
        let z2 = character_table_z2();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.trivial_row(), 0);
        let s3 = character_table_s3();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.num_classes(), 3);
        assert_eq!(s3.element_order(1), 3);
        assert_eq!(s3.element_order(3), 2);
        assert_eq!(s3.degree(2), rat(2));
        let v4 = character_table_v4();
        assert_eq!(v4.num_classes(), 4);
        assert_eq!(character_table_trivial().order(), 1);
    }

    #[test]
    fn validation_rejects_tampered_data() {
        // broken orthogonality: flip one sign character value
        let bad = CharacterData::new(
            vec!["e".into(), "s".into()],
            vec![0, 1],
            vec![vec![0], vec![1]],
            xor_group_table(2),
            rows(&[&[1, 1], &[1, 1]]),
        );
        assert!(matches!(bad, Err(ArtinError::BadCharacter(_))));
        // degree sum violation
        let bad = CharacterData::new(
            vec!["e".into(), "s".into()],
            vec![0, 1],
            vec![vec![0], vec![1]],
            xor_group_table(2),
            rows(&[&[2, 0], &[1, -1]]),
        );
        assert!(matches!(bad, Err(ArtinError::BadCharacter(_))));
        // non-associative "multiplication"
        let bad = CharacterData::new(
            vec!["e".into(), "x".into(), "y".into()],
            vec![0, 1, 2],
            vec![vec![0], vec![1], vec![2]],
            vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]],
            rows(&[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1]]),
        );
        assert!(matches!(bad, Err(ArtinError::BadGroup(_))));
        // classes not conjugation-closed: split a real class of S3
        let s3 = character_table_s3();
        let bad = CharacterData::new(
            s3.labels().to_vec(),
            (0..6).map(|g| s3.inverse(g)).collect(),
            vec![vec![0], vec![1], vec![2], vec![3, 4, 5]],
            (0..6)
                .map(|i| (0..6).map(|j| s3.mult(i, j)).collect())
                .collect(),
            rows(&[
                &[1, 1, 1, 1],
                &[1, 1, 1, -1],
                &[1, -1, -1, 0],
                &[1, -1, -1, 0],
            ]),
        );
        assert!(matches!(bad, Err(ArtinError::BadGroup(_))));
    }

    #[test]
    fn induction_from_a_transposition_subgroup_of_s3() {
        let s3 = character_table_s3();
        let sub = SubgroupData {
            elements: vec![0, 3],
            group: character_table_z2(),
        };
        // Ind(sign) = sign ⊕ standard: values (3, 0, -1) on (e, cycles, swaps)
        let ind = induced_character(&s3, &sub, 1).unwrap();
        assert_eq!(ind, vec![rat(3), rat(0), rat(-1)]);
        // Ind(triv) = triv ⊕ standard
        let ind = induced_character(&s3, &sub, 0).unwrap();
        assert_eq!(ind, vec![rat(3), rat(0), rat(1)]);
        // embedding that is not a subgroup
        let bad = SubgroupData {
            elements: vec![0, 1],
            group: character_table_z2(),
        };
        assert!(matches!(
            induced_character(&s3, &bad, 1),
            Err(ArtinError::BadSubgroup(_))
        ));
    }

    #[test]
    fn inflation_through_the_sign_quotient_of_s3() {
        let s3 = character_table_s3();
        // G/A3 = Z/2 via the sign of the permutation
        let q = QuotientData {
            proj: vec![0, 0, 0, 1, 1, 1],
            group: character_table_z2(),
        };
        let infl = inflated_character(&s3, &q, 1).unwrap();
        assert_eq!(infl, s3.irreducible(1).to_vec()); // the sign character of S3
        let infl = inflated_character(&s3, &q, 0).unwrap();
        assert_eq!(infl, s3.irreducible(0).to_vec());
        // projection that is not a homomorphism
        let bad = QuotientData {
            proj: vec![0, 1, 0, 1, 0, 1],
            group: character_table_z2(),
        };
        assert!(matches!(
            inflated_character(&s3, &bad, 0),
            Err(ArtinError::BadSubgroup(_))
        ));
    }

    #[test]
    fn regular_character_and_json_loader() {
        let z2 = character_table_z2();
        assert_eq!(z2.regular_character(), vec![rat(2), rat(0)]);
        let j = r#"{ "labels": ["e","s"], "inverse": [0,1], "classes": [[0],[1]],
                     "mult": [[0,1],[1,0]], "table": [["1","1"],["1","-1"]] }"#;
        let file: CharacterFile = serde_json::from_str(j).unwrap();
        assert_eq!(CharacterData::from_file(file).unwrap(), z2);
    }
}
