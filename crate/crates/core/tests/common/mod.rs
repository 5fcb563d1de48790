//! Fixture operads built from their defining identities.
//!
//! Two-generator fixtures use `e_1 = x_1∘x_2`, `e_2 = x_2∘x_1`, so the `S₂`
//! action swaps them.

#![allow(dead_code)]

use manin_core::operad::{validate_presentation, Monomial};
use manin_core::{OperadPresentation, RatMatrix};

pub const NAMES: [&str; 7] = ["as", "com", "lie", "perm", "prelie", "leib", "zinb"];

fn l(vars: [u8; 3]) -> Monomial {
    Monomial::Left {
        outer: 0,
        inner: 0,
        vars,
    }
}

fn r(vars: [u8; 3]) -> Monomial {
    Monomial::Right {
        outer: 0,
        inner: 0,
        vars,
    }
}

fn build(
    name: &str,
    n: usize,
    action: RatMatrix,
    identities: &[&[(i64, Monomial)]],
) -> OperadPresentation {
    let free = OperadPresentation::free(n, action.clone(), name).unwrap();
    let rows: Vec<_> = identities
        .iter()
        .map(|t| free.identity_vector(t).unwrap())
        .collect();
    validate_presentation(n, action, &rows, name)
        .unwrap()
        .presentation
}

pub fn swap() -> RatMatrix {
    RatMatrix::from_i64s(&[&[0, 1], &[1, 0]]).unwrap()
}

pub fn fixture(name: &str) -> OperadPresentation {
    const A: [u8; 3] = [1, 2, 3];
    const B: [u8; 3] = [2, 1, 3];
    match name {
        "as" => build(name, 2, swap(), &[&[(1, l(A)), (-1, r(A))]]),
        "com" => build(name, 1, RatMatrix::identity(1), &[&[(1, l(A)), (-1, r(A))]]),
        "lie" => build(
            name,
            1,
            RatMatrix::from_i64s(&[&[-1]]).unwrap(),
            &[&[(1, l(A)), (1, l([2, 3, 1])), (1, l([3, 1, 2]))]],
        ),
        // (xy)z = x(yz) = (yx)z
        "perm" => build(
            name,
            2,
            swap(),
            &[&[(1, l(A)), (-1, r(A))], &[(1, l(A)), (-1, l(B))]],
        ),
        // (xy)z − x(yz) = (yx)z − y(xz)
        "prelie" => build(
            name,
            2,
            swap(),
            &[&[(1, l(A)), (-1, r(A)), (-1, l(B)), (1, r(B))]],
        ),
        // x(yz) = (xy)z + y(xz)
        "leib" => build(name, 2, swap(), &[&[(1, r(A)), (-1, l(A)), (-1, r(B))]]),
        // x(yz) = (xy)z + (yx)z
        "zinb" => build(name, 2, swap(), &[&[(1, r(A)), (-1, l(A)), (-1, l(B))]]),
        _ => panic!("unknown fixture {name}"),
    }
}

pub fn all() -> Vec<OperadPresentation> {
    NAMES.iter().map(|n| fixture(n)).collect()
}

pub fn diag_flip() -> RatMatrix {
    RatMatrix::from_i64s(&[&[1, 0], &[0, -1]]).unwrap()
}
