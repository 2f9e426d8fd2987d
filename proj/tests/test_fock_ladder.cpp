#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "tmnlcs/fock_ladder.hpp"

using namespace tmnlcs;
using testutil::cplx;

namespace {

FockLadderState from_amplitudes(long q, std::vector<cplx> amps) {
    FockLadderState s;
    s.charge_q = q;
    s.amplitudes = std::move(amps);
    return s;
}

FockLadderState pair_state(cplx zeta, long q, std::size_t count) {
    return from_amplitudes(q, oracle::pair_coefficients(zeta, q, count));
}

} // namespace

TEST_CASE("apply_lower_both annihilates the vacuum rung") {
    const FockLadderState out =
        apply_lower_both(from_amplitudes(0, {cplx(1.0), cplx(0.0), cplx(0.0)}));
    CHECK(out.charge_q == 0);
    for (const auto& c : out.amplitudes) CHECK(c == cplx(0.0));
}

TEST_CASE("apply_lower_both on a single ket: ab|2,1> = sqrt(2)|1,0>") {
    const FockLadderState out =
        apply_lower_both(from_amplitudes(1, {cplx(0.0), cplx(1.0), cplx(0.0)}));
    CHECK(out.amplitudes[0].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(out.amplitudes[1] == cplx(0.0));
    CHECK(out.charge_q == 1);
}

TEST_CASE("pair coherent state is an ab eigenstate: ab|zeta,q> = zeta|zeta,q>") {
    const cplx zeta(0.5, 0.0);
    const FockLadderState s = pair_state(zeta, 0, 40);
    const FockLadderState lowered = apply_lower_both(s);
    for (std::size_t n = 0; n + 1 < s.amplitudes.size(); ++n)
        CHECK(std::abs(lowered.amplitudes[n] - zeta * s.amplitudes[n]) < 1e-12);
}

TEST_CASE("apply_raise_both basic matrix elements") {
    SUBCASE("|0,0> -> |1,1>") {
        const FockLadderState out = apply_raise_both(basis_ket(0, 0));
        REQUIRE(out.amplitudes.size() == 2);
        CHECK(out.amplitudes[0] == cplx(0.0));
        CHECK(out.amplitudes[1] == cplx(1.0));
    }
    SUBCASE("q=2: |2,0> -> sqrt(3)|3,1>") {
        const FockLadderState out = apply_raise_both(basis_ket(2, 0));
        CHECK(out.amplitudes[1].real() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    }
    SUBCASE("ab a'b' |q,0> = (q+1)|q,0>") {
        for (long q : {0L, 1L, 3L, 7L}) {
            const FockLadderState out = apply_lower_both(apply_raise_both(basis_ket(q, 0)));
            CHECK(out.amplitudes[0].real() ==
                  doctest::Approx(static_cast<double>(q + 1)).epsilon(1e-15));
        }
    }
}

TEST_CASE("apply_diagonal") {
    const FockLadderState s = from_amplitudes(0, {cplx(0.2, 0.1), cplx(-0.3), cplx(0.5)});
    SUBCASE("unity is the identity") {
        const FockLadderState out = apply_diagonal(s, catalog(CatalogFunction::unity));
        for (std::size_t n = 0; n < s.amplitudes.size(); ++n)
            CHECK(out.amplitudes[n] == s.amplitudes[n]);
    }
    SUBCASE("parity flips odd rungs") {
        const FockLadderState out = apply_diagonal(s, catalog(CatalogFunction::parity_b));
        CHECK(out.amplitudes[0] == s.amplitudes[0]);
        CHECK(out.amplitudes[1] == -s.amplitudes[1]);
        CHECK(out.amplitudes[2] == s.amplitudes[2]);
    }
    SUBCASE("1/(N_a+1) on |2,1>") {
        const FockLadderState ket = basis_ket(1, 1); // |2,1>
        const FockLadderState out =
            apply_diagonal(ket, catalog(CatalogFunction::perelomov_reduced));
        CHECK(out.amplitudes[1].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("zero components never evaluate f") {
        const NonlinearFunction poison("poison", [](long na, long nb) -> cplx {
            throw FunctionDomainError("poison", na, nb);
        });
        const FockLadderState zeros = from_amplitudes(0, {cplx(0.0), cplx(0.0)});
        CHECK_NOTHROW(apply_diagonal(zeros, poison));
    }
}

TEST_CASE("apply_raise_mode") {
    SUBCASE("a' on |1,0> gives sqrt(2)|2,0>") {
        const FockLadderState out = apply_raise_mode(basis_ket(1, 0), Mode::a, 1);
        CHECK(out.charge_q == 2);
        CHECK(out.amplitudes[0].real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("b' on |1,0> gives |1,1> at charge 0") {
        const FockLadderState out = apply_raise_mode(basis_ket(1, 0), Mode::b, 1);
        CHECK(out.charge_q == 0);
        REQUIRE(out.amplitudes.size() == 2);
        CHECK(out.amplitudes[0] == cplx(0.0));
        CHECK(out.amplitudes[1] == cplx(1.0));
    }
    SUBCASE("a' then b' matches apply_raise_both") {
        std::mt19937 rng(7);
        const FockLadderState s = testutil::random_state(rng, 2, 12);
        const FockLadderState ab =
            apply_raise_mode(apply_raise_mode(s, Mode::a, 1), Mode::b, 1);
        const FockLadderState both = apply_raise_both(s);
        CHECK(testutil::max_amplitude_distance(ab, both) < 1e-14);
    }
    SUBCASE("raising b below charge zero is rejected") {
        CHECK_THROWS_AS(apply_raise_mode(basis_ket(0, 0), Mode::b, 1),
                        ChargeNegativeError);
    }
}

TEST_CASE("apply_lower_mode") {
    SUBCASE("a on a pair state gives the pair state one charge down") {
        const cplx zeta(0.7, 0.2);
        const FockLadderState s = pair_state(zeta, 2, 40);
        const FockLadderState lowered = normalize(apply_lower_mode(s, Mode::a, 1));
        // ab commutes with a, so the result still satisfies the eigen
        // relation at charge 1; compare against the independent series.
        const FockLadderState expected = pair_state(zeta, 1, 40);
        const cplx overlap = inner_product(expected, lowered);
        CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-11));
    }
    SUBCASE("b annihilates |q,0>") {
        const FockLadderState out = apply_lower_mode(basis_ket(3, 0), Mode::b, 1);
        CHECK(out.charge_q == 4);
        for (const auto& c : out.amplitudes) CHECK(c == cplx(0.0));
    }
    SUBCASE("a'a|q,0> = q|q,0>") {
        for (long q : {1L, 2L, 5L}) {
            const FockLadderState out =
                apply_raise_mode(apply_lower_mode(basis_ket(q, 0), Mode::a, 1), Mode::a, 1);
            CHECK(out.charge_q == q);
            CHECK(out.amplitudes[0].real() ==
                  doctest::Approx(static_cast<double>(q)).epsilon(1e-15));
        }
    }
    SUBCASE("lowering a below charge zero is rejected") {
        CHECK_THROWS_AS(apply_lower_mode(basis_ket(1, 3), Mode::a, 2),
                        ChargeNegativeError);
    }
}

TEST_CASE("inner_product") {
    SUBCASE("normalized state has unit self-overlap") {
        std::mt19937 rng(11);
        const FockLadderState s = testutil::random_state(rng, 1, 20);
        CHECK(std::abs(inner_product(s, s) - cplx(1.0)) < 1e-12);
    }
    SUBCASE("<q,0|q,0> = 1") {
        CHECK(inner_product(basis_ket(4, 0), basis_ket(4, 0)) == cplx(1.0));
    }
    SUBCASE("pair-state overlap <zeta|-zeta> matches the series oracle") {
        // J0(2)/I0(2); frozen from the direct-summation oracle.
        const double expected = 0.09821557408349557;
        const FockLadderState plus = pair_state(cplx(1.0), 0, 40);
        const FockLadderState minus = pair_state(cplx(-1.0), 0, 40);
        CHECK(inner_product(plus, minus).real() ==
              doctest::Approx(expected).epsilon(1e-12));
        CHECK(std::abs(oracle::pair_overlap(cplx(1.0), cplx(-1.0), 0) - expected) <
              1e-14);
    }
    SUBCASE("conjugate symmetry") {
        std::mt19937 rng(13);
        const FockLadderState s1 = testutil::random_state(rng, 2, 16);
        const FockLadderState s2 = testutil::random_state(rng, 2, 9);
        const cplx fwd = inner_product(s1, s2);
        const cplx bwd = inner_product(s2, s1);
        CHECK(std::abs(fwd - std::conj(bwd)) < 1e-14);
    }
    SUBCASE("different charges are an error") {
        CHECK_THROWS_AS(inner_product(basis_ket(0, 0), basis_ket(1, 0)),
                        ChargeMismatchError);
    }
}

TEST_CASE("normalize") {
    SUBCASE("(2, 0) -> (1, 0)") {
        const FockLadderState out = normalize(from_amplitudes(0, {cplx(2.0), cplx(0.0)}));
        CHECK(out.amplitudes[0] == cplx(1.0));
        CHECK(out.amplitudes[1] == cplx(0.0));
    }
    SUBCASE("zero state is rejected") {
        CHECK_THROWS_AS(normalize(from_amplitudes(0, {cplx(0.0), cplx(0.0)})),
                        ZeroStateError);
    }
    SUBCASE("phase gauge: lowest nonzero amplitude becomes real positive") {
        const FockLadderState out = normalize(
            from_amplitudes(0, {cplx(0.0), cplx(0.0, 2.0), cplx(1.0, 1.0)}));
        CHECK(out.amplitudes[1].imag() == 0.0);
        CHECK(out.amplitudes[1].real() > 0.0);
        CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("pair normalization constant at zeta=1, q=0") {
        // 1/sqrt(sum 1/(n!)^2) = 1/sqrt(I0(2)); frozen from the series oracle.
        const double expected = 0.6623264148718883;
        std::vector<cplx> raw(40);
        raw[0] = 1.0;
        for (std::size_t n = 0; n + 1 < raw.size(); ++n)
            raw[n + 1] = raw[n] / std::sqrt(static_cast<double>((n + 1) * (n + 1)));
        const FockLadderState out = normalize(from_amplitudes(0, std::move(raw)));
        CHECK(out.amplitudes[0].real() == doctest::Approx(expected).epsilon(1e-12));
        CHECK(1.0 / std::sqrt(oracle::pair_norm_series(1.0, 0)) ==
              doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("ladder actions report the charge shifts they produce") {
    std::mt19937 rng(17);
    const FockLadderState s = testutil::random_state(rng, 3, 10);
    const LadderOpKind kinds[] = {
        LadderOpKind::lower_both, LadderOpKind::raise_both, LadderOpKind::raise_a,
        LadderOpKind::raise_b,    LadderOpKind::lower_a,    LadderOpKind::lower_b,
        LadderOpKind::number_a,   LadderOpKind::number_b,   LadderOpKind::parity_b};
    for (LadderOpKind kind : kinds) {
        const LadderOperatorAction action = ladder_action(kind);
        const FockLadderState out = apply_elementary(s, kind);
        CHECK(out.charge_q == s.charge_q + action.charge_shift);
    }
}

TEST_CASE("property: charge conservation of diagonal and pair ladder actions") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const long q = trial % 4;
        const FockLadderState s = testutil::random_state(rng, q, 8 + trial);
        CHECK(apply_lower_both(s).charge_q == q);
        CHECK(apply_raise_both(s).charge_q == q);
        CHECK(apply_diagonal(s, catalog(CatalogFunction::parity_b)).charge_q == q);
    }
}

TEST_CASE("property: raise_both and lower_both are adjoint") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const long q = trial % 3;
        const FockLadderState s1 = testutil::random_state(rng, q, 10);
        const FockLadderState s2 = testutil::random_state(rng, q, 12);
        const cplx lhs = inner_product(apply_raise_both(s1), s2);
        const cplx rhs = inner_product(s1, apply_lower_both(s2));
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("property: photon-number difference equals the charge") {
    std::mt19937 rng(29);
    for (long q : {0L, 1L, 2L, 5L}) {
        const FockLadderState s = testutil::random_state(rng, q, 24);
        double mean_na = 0.0, mean_nb = 0.0;
        for (std::size_t n = 0; n < s.amplitudes.size(); ++n) {
            const double w = std::norm(s.amplitudes[n]);
            mean_na += w * static_cast<double>(static_cast<long>(n) + q);
            mean_nb += w * static_cast<double>(n);
        }
        CHECK(std::abs(mean_na - mean_nb - static_cast<double>(q)) < 1e-12);
    }
}

TEST_CASE("property: [ab, a'b'] acts as N_a + N_b + 1 on interior kets") {
    for (long q : {0L, 1L, 2L}) {
        for (long n = 1; n <= 6; ++n) {
            FockLadderState ket = basis_ket(q, n);
            ket.amplitudes.resize(static_cast<std::size_t>(n) + 3, cplx(0.0));
            const FockLadderState forward = apply_lower_both(apply_raise_both(ket));
            const FockLadderState backward = apply_raise_both(apply_lower_both(ket));
            const double expected = static_cast<double>(n + (n + q) + 1);
            for (std::size_t i = 0; i < ket.amplitudes.size(); ++i) {
                const cplx diff =
                    forward.amplitudes[i] - backward.amplitudes[i];
                const cplx want = expected * ket.amplitudes[i];
                CHECK(std::abs(diff - want) < 1e-12);
            }
        }
    }
}
