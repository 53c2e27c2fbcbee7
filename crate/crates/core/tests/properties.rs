mod common;

use common::strategies::{codes, supports};
use common::*;
use proptest::prelude::*;

fn holds(r: Result<(), String>) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn complement_is_an_involution(c in codes(6)) {
        holds(check_complement_involution(&c))?;
    }

    #[test]
    fn canonical_form_is_a_minimal_antichain(c in codes(6)) {
        holds(check_canonical_form(&c))?;
    }

    #[test]
    fn decomposition_covers_code_irredundantly(c in codes(6)) {
        holds(check_decomposition(&c))?;
    }

    #[test]
    fn ideal_complex_round_trip((v, sets) in supports()) {
        holds(check_round_trip(v, &sets))?;
    }

    #[test]
    fn false_verdicts_replay(c in codes(5)) {
        holds(check_witnesses(&c))?;
    }
}
