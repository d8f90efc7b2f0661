use detideal::combinat::binomial;
use detideal::matrix::{bareiss_determinant, determinant, determinant_laplace, rational_rank, PolyMatrix};
use detideal::multilinear::{
    exterior_power_matrix, generic_matrix, numeric_rank, symmetric_power_matrix,
    tensor_product_matrix, PowerConstants,
};
use detideal::poly::{rat, VarTable};
use detideal::Polynomial;
use num_traits::Pow;
use proptest::prelude::*;

fn int_matrix(n: usize, m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..5, m), n)
}

fn constant(rows: &[Vec<i64>]) -> PolyMatrix {
    let t = VarTable::new(Vec::<String>::new()).unwrap();
    PolyMatrix::from_integers(&t, rows)
}

fn det_of(a: &PolyMatrix) -> num_rational::BigRational {
    determinant(a).unwrap().constant_value().unwrap()
}

proptest! {
    #[test]
    fn determinant_is_multiplicative(a in int_matrix(3, 3), b in int_matrix(3, 3)) {
        let (a, b) = (constant(&a), constant(&b));
        let ab = a.checked_mul(&b).unwrap();
        prop_assert_eq!(det_of(&ab), det_of(&a) * det_of(&b));
    }

    #[test]
    fn determinant_is_alternating(a in int_matrix(4, 4), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let m = constant(&a);
        let mut order: Vec<usize> = (0..4).collect();
        order.swap(i, j);
        let swapped = m.submatrix(&order, &[0, 1, 2, 3]);
        prop_assert_eq!(det_of(&swapped), -det_of(&m));
        let mut repeated = a.clone();
        repeated[j] = repeated[i].clone();
        prop_assert_eq!(det_of(&constant(&repeated)), rat(0));
    }

    #[test]
    fn laplace_and_bareiss_agree(a in int_matrix(4, 4)) {
        let m = constant(&a);
        let laplace = determinant_laplace(&m).unwrap().constant_value().unwrap_or_else(|| rat(0));
        prop_assert_eq!(laplace, bareiss_determinant(&m.to_rationals().unwrap()));
    }

    #[test]
    fn powers_are_functorial(a in int_matrix(2, 3), b in int_matrix(3, 2), d in 1usize..4) {
        let (a, b) = (constant(&a), constant(&b));
        let ab = a.checked_mul(&b).unwrap();
        let sym = symmetric_power_matrix(&a, d).checked_mul(&symmetric_power_matrix(&b, d)).unwrap();
        prop_assert_eq!(symmetric_power_matrix(&ab, d), sym);
        let e = d.min(2);
        let ext = exterior_power_matrix(&a, e).unwrap()
            .checked_mul(&exterior_power_matrix(&b, e).unwrap()).unwrap();
        prop_assert_eq!(exterior_power_matrix(&ab, e).unwrap(), ext);
    }

    #[test]
    fn tensor_is_functorial(
        a in int_matrix(2, 2), b in int_matrix(2, 3), c in int_matrix(2, 2), e in int_matrix(3, 2),
    ) {
        let (a, b, c, e) = (constant(&a), constant(&b), constant(&c), constant(&e));
        let lhs = tensor_product_matrix(&a.checked_mul(&c).unwrap(), &b.checked_mul(&e).unwrap()).unwrap();
        let rhs = tensor_product_matrix(&a, &b).unwrap()
            .checked_mul(&tensor_product_matrix(&c, &e).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_power_determinant(n in 1usize..4, d in 1usize..4, seed in prop::collection::vec(-3i64..4, 16)) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
        let a = constant(&rows);
        let s = PowerConstants::new(n as u64, d as u64, n as u64).s;
        prop_assert_eq!(det_of(&symmetric_power_matrix(&a, d)), det_of(&a).pow(s as i32));
    }

    #[test]
    fn exterior_power_determinant(n in 1usize..5, d in 1usize..4, seed in prop::collection::vec(-3i64..4, 16)) {
        prop_assume!(d <= n);
        let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
        let a = constant(&rows);
        let e = PowerConstants::new(n as u64, d as u64, n as u64).e;
        prop_assert_eq!(det_of(&exterior_power_matrix(&a, d).unwrap()), det_of(&a).pow(e as i32));
    }

    #[test]
    fn tensor_determinant(n in 1usize..4, q in 1usize..4, seed in prop::collection::vec(-3i64..4, 18)) {
        let a: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..(i + 1) * n].to_vec()).collect();
        let b: Vec<Vec<i64>> = (0..q).map(|i| seed[9 + i * q..9 + (i + 1) * q].to_vec()).collect();
        let (a, b) = (constant(&a), constant(&b));
        let lhs = det_of(&tensor_product_matrix(&a, &b).unwrap());
        prop_assert_eq!(lhs, det_of(&a).pow(q as i32) * det_of(&b).pow(n as i32));
    }

    #[test]
    fn symmetric_power_rank_law(
        left in int_matrix(3, 2), right in int_matrix(2, 4), d in 1usize..4,
    ) {
        let a = constant(&left).checked_mul(&constant(&right)).unwrap();
        let r = rational_rank(&a.to_rationals().unwrap()) as u64;
        let expected = binomial(r + d as u64 - 1, d as u64);
        prop_assert_eq!(numeric_rank(&symmetric_power_matrix(&a, d)).unwrap() as u64, expected);
    }
}

#[test]
fn symbolic_determinant_of_generic_square() {
    // The Leibniz expansion of a generic n x n determinant has n! terms.
    for (n, terms) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
        let x = generic_matrix(n, n, "X");
        assert_eq!(determinant(&x).unwrap().num_terms(), terms);
    }
}

#[test]
fn symbolic_symmetric_power_determinant() {
    let x = generic_matrix(2, 2, "X");
    let det = determinant(&x).unwrap();
    for d in 1..4 {
        let s = PowerConstants::new(2, d as u64, 2).s as u32;
        assert_eq!(determinant(&symmetric_power_matrix(&x, d)).unwrap(), det.pow(s));
    }
    let ext = exterior_power_matrix(&generic_matrix(3, 3, "X"), 2).unwrap();
    let d3 = determinant(&generic_matrix(3, 3, "X")).unwrap();
    assert_eq!(determinant(&ext).unwrap(), d3.pow(2));
    assert_eq!(Polynomial::one(x.table()).pow(0), Polynomial::one(x.table()));
}
