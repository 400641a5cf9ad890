#include <doctest.h>

#include "purefield/periodicity.hpp"

using namespace purefield;

TEST_CASE("period_modulus") {
    CHECK(period_modulus(6) == 36);
    CHECK(period_modulus(9) == 27);
    CHECK(period_modulus(2) == 4);
    CHECK(period_modulus(12) == 72);
    CHECK(period_modulus(8) == 16);
    CHECK_THROWS_AS(period_modulus(1), DomainError);
}

TEST_CASE("transfer passes for congruent squarefree pairs") {
    FieldPtr f = validate_field(6, 37);
    TransferReport rep = transfer_check(f, 73); // 73 - 37 = 36
    CHECK(rep.modulus == 36);
    CHECK(rep.pass);
    CHECK(rep.den_sequence_equal);
    CHECK(rep.min_rs_equal);
    CHECK(rep.products_ok);
    CHECK(rep.products_checked == 21);
    for (const auto& e : rep.elements) {
        CHECK(e.forward);
        CHECK(e.backward);
        CHECK(e.den_equal);
    }

    FieldPtr g = validate_field(9, 26);
    CHECK(transfer_check(g, 53).pass); // 53 - 26 = 27
    CHECK(transfer_check(g, 26).pass); // trivially
}

TEST_CASE("transfer_check is symmetric") {
    FieldPtr f = validate_field(6, 37);
    FieldPtr g = validate_field(6, 73);
    TransferReport r1 = transfer_check(f, 73);
    TransferReport r2 = transfer_check(g, 37);
    CHECK(r1.pass == r2.pass);
    CHECK(r1.denominators_a == r2.denominators_a_prime);
    CHECK(r1.denominators_a_prime == r2.denominators_a);
}

TEST_CASE("hypothesis violations are rejected with distinct codes") {
    FieldPtr f = validate_field(6, 37);
    try {
        transfer_check(f, 38); // squarefree but 38 - 37 = 1
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationCode::NotCongruent);
    }
    try {
        transfer_check(f, 37 + 36 * 7); // 289 = 17^2, congruent but not squarefree
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationCode::NotSquarefree);
    }
    try {
        FieldPtr nsq = validate_field(10, 150); // base radicand not squarefree
        transfer_check(nsq, 250);
        FAIL("expected rejection");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationCode::NotSquarefree);
    }
    // 181 = 37 + 4*36 is prime, so this one goes through
    CHECK(transfer_check(f, 181).pass);
}

TEST_CASE("denominator sequences agree across a congruence class") {
    // n = 6, modulus 36: a = 7, 43, 79 all squarefree and == 7 mod 36
    FieldPtr base = validate_field(6, 7);
    IntegralBasis b0 = integral_basis(base);
    for (long a : {43L, 79L, -29L}) { // -29 == 7 mod 36
        FieldPtr f = validate_field(6, a);
        IntegralBasis b = integral_basis(f);
        for (unsigned long m = 0; m < 6; ++m)
            CHECK(b.records[m].denominator == b0.records[m].denominator);
        CHECK(transfer_check(base, a).pass);
    }
}
