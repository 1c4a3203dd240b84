// SPDX-License-Identifier: Apache-2.0

mod support;

fn check(r: Result<(), String>) {
    if let Err(e) = r {
        panic!("{e}");
    }
}

#[test]
fn ring_axioms_and_degrees() {
    check(support::ring_axioms());
}

#[test]
fn division_reassembles_both_sides() {
    check(support::division_reassembly());
}

#[test]
fn remainder_by_linear_factor() {
    check(support::eval_rem_linear());
}

#[test]
fn rgcd_and_lclm() {
    check(support::rgcd_lclm());
}

#[test]
fn centrality_iff_commutation() {
    check(support::centrality());
}

#[test]
fn key_equation_ledger() {
    check(support::key_equation_ledger());
}

#[test]
fn shift_closure_of_constructed_codes() {
    check(support::shift_closure());
}
