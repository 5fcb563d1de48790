mod common;

use common::{diag_flip, fixture, NAMES};
use manin_core::koszul_dual;

#[test]
fn fixture_dimensions() {
    let expected = [6, 1, 2, 3, 9, 6, 6];
    for (name, dim) in NAMES.iter().zip(expected) {
        assert_eq!(fixture(name).dim_space3(), dim, "{name}");
    }
}

#[test]
fn classical_dual_pairs() {
    assert_eq!(koszul_dual(&fixture("lie")), fixture("com"));
    assert_eq!(koszul_dual(&fixture("com")), fixture("lie"));
    // duals come out in the basis e_2 = −e_1^(12)
    let flip = diag_flip();
    assert_eq!(
        koszul_dual(&fixture("as")).change_basis(&flip).unwrap(),
        fixture("as")
    );
    assert_eq!(
        koszul_dual(&fixture("perm")).change_basis(&flip).unwrap(),
        fixture("prelie")
    );
    assert_eq!(
        koszul_dual(&fixture("prelie")).change_basis(&flip).unwrap(),
        fixture("perm")
    );
    assert_eq!(
        koszul_dual(&fixture("leib")).change_basis(&flip).unwrap(),
        fixture("zinb")
    );
}
