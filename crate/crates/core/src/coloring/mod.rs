//! Fox `n`-colorings.
//!
//! Colors live on Fox arcs (PD edges joined through over-crossings). At each
//! crossing the two under-arcs sum to twice the over-arc. `Col_n(D)` is the
//! kernel of the coloring matrix over `Z_n`, read off from its Smith form.

mod snf;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

pub use snf::smith_normal_form;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

/// One row per crossing, one column per Fox arc followed by one (zero) column
/// per split circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringMatrix {
    pub rows: Vec<Vec<i64>>,
    pub cols: usize,
}

impl ColoringMatrix {
    pub fn to_bigint(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }
}

/// A finite abelian group `Z_{c1} + ... + Z_{ck}` with `c1 | c2 | ... | ck`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroupStructure {
    pub cyclic_orders: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianGroupStructure {
    pub fn order(&self) -> u128 {
        self.cyclic_orders.iter().map(|&c| c as u128).product()
    }

    /// `Z_n^m`.
    pub fn elementary(n: u64, m: usize) -> Self {
        AbelianGroupStructure {
            cyclic_orders: vec![n; m],
            free_rank: 0,
        }
    }
}

impl std::fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.cyclic_orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.cyclic_orders.iter().map(|c| format!("Z{c}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn coloring_matrix(d: &LinkDiagram) -> ColoringMatrix {
    let (arc_of, arcs) = d.fox_arcs();
    let cols = arcs + d.split_circles();
    let rows = d
        .crossings()
        .iter()
        .map(|c| {
            let mut row = vec![0i64; cols];
            row[arc_of[c[0]]] += 1;
            row[arc_of[c[2]]] += 1;
            row[arc_of[c[1]]] -= 2;
            row
        })
        .collect();
    ColoringMatrix { rows, cols }
}

/// Kernel of an integer matrix reduced mod `n`, as a divisor chain.
pub(crate) fn kernel_mod(rows: &[Vec<BigInt>], cols: usize, n: u64) -> AbelianGroupStructure {
    let factors = smith_normal_form(rows);
    let n_big = BigInt::from(n);
    let mut orders: Vec<u64> = factors
        .iter()
        .map(|d| d.gcd(&n_big).to_u64().expect("gcd with n fits"))
        .filter(|&g| g > 1)
        .collect();
    orders.extend(std::iter::repeat_n(n, cols - factors.len()));
    AbelianGroupStructure {
        cyclic_orders: orders,
        free_rank: 0,
    }
}

/// `Col_n(D)`, trivial colorings included.
pub fn col_group(d: &LinkDiagram, n: u64) -> Result<AbelianGroupStructure> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let m = coloring_matrix(d);
    Ok(kernel_mod(&m.to_bigint(), m.cols, n))
}

/// True iff `|Col_n(D)|` exceeds `n^components`.
pub fn has_nontrivial_colorings(d: &LinkDiagram, n: u64) -> Result<bool> {
    let g = col_group(d, n)?;
    let bound = (n as u128).checked_pow(d.count_components() as u32);
    Ok(bound.is_some_and(|b| g.order() > b))
}

/// Determinant of the link: the product of the invariant factors of the
/// coloring matrix when it has corank one, and 0 otherwise.
pub fn determinant(d: &LinkDiagram) -> BigInt {
    let m = coloring_matrix(d);
    if m.cols == 0 {
        return BigInt::zero();
    }
    let f = smith_normal_form(&m.to_bigint());
    if f.len() + 1 != m.cols {
        return BigInt::zero();
    }
    f.iter().product()
}

/// Counts valid colorings by trying every assignment of colors to Fox arcs.
/// Exponential; meant as an independent check on small diagrams.
pub fn brute_force_count(d: &LinkDiagram, n: u64) -> u128 {
    let (arc_of, arcs) = d.fox_arcs();
    let total = (n as u128).pow(arcs as u32);
    let mut count = 0u128;
    let mut colors = vec![0u64; arcs];
    for code in 0..total {
        let mut c = code;
        for slot in colors.iter_mut() {
            *slot = (c % n as u128) as u64;
            c /= n as u128;
        }
        let ok = d.crossings().iter().all(|x| {
            let (a, b, o) = (colors[arc_of[x[0]]], colors[arc_of[x[2]]], colors[arc_of[x[1]]]);
            (a + b) % n == (2 * o) % n
        });
        if ok {
            count += 1;
        }
    }
    count * (n as u128).pow(d.split_circles() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{corpus, parse_pd, LinkDiagram};

    fn trefoil() -> LinkDiagram {
        parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap()
    }

    #[test]
    fn unknot_matrix_is_empty() {
        let m = coloring_matrix(&LinkDiagram::unlink(1));
        assert!(m.rows.is_empty());
        assert_eq!(m.cols, 1);
    }

    #[test]
    fn trefoil_matrix_rows() {
        let m = coloring_matrix(&trefoil());
        assert_eq!(m.cols, 3);
        for row in &m.rows {
            let mut r = row.clone();
            r.sort();
            assert_eq!(r, vec![-2, 1, 1]);
        }
    }

    #[test]
    fn rows_sum_to_zero() {
        for e in corpus::embedded() {
            for row in coloring_matrix(&e.diagram).rows {
                assert_eq!(row.iter().sum::<i64>(), 0, "{}", e.name);
            }
        }
    }

    #[test]
    fn unlink_groups() {
        for m in 1..4 {
            for n in 2..6 {
                assert_eq!(
                    col_group(&LinkDiagram::unlink(m), n).unwrap(),
                    AbelianGroupStructure::elementary(n, m)
                );
            }
        }
    }

    #[test]
    fn small_examples() {
        let fig8 = corpus::get("4_1").unwrap();
        assert_eq!(col_group(&fig8, 5).unwrap().cyclic_orders, vec![5, 5]);
        assert_eq!(col_group(&trefoil(), 5).unwrap().cyclic_orders, vec![5]);
        assert_eq!(col_group(&trefoil(), 3).unwrap().cyclic_orders, vec![3, 3]);
        assert!(!has_nontrivial_colorings(&trefoil(), 5).unwrap());
        assert!(has_nontrivial_colorings(&fig8, 5).unwrap());
        assert!(!has_nontrivial_colorings(&corpus::get("hopf").unwrap(), 5).unwrap());
    }

    #[test]
    fn invalid_modulus() {
        assert_eq!(col_group(&trefoil(), 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn determinants() {
        let expect = [
            ("3_1", 3),
            ("4_1", 5),
            ("hopf", 2),
            ("8_18", 45),
            ("9_40", 75),
            ("9_49", 25),
            ("9^2_40", 50),
        ];
        for (name, det) in expect {
            assert_eq!(determinant(&corpus::get(name).unwrap()), BigInt::from(det), "{name}");
        }
        assert_eq!(determinant(&LinkDiagram::unlink(2)), BigInt::zero());
    }
}
