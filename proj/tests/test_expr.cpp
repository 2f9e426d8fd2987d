#include <doctest.h>

#include "tmnlcs/expr.hpp"
#include "tmnlcs/nlfun.hpp"

using namespace tmnlcs;
using cplx = std::complex<double>;

TEST_CASE("expression grammar basics") {
    CHECK(parse_nonlinear_function("2")(0, 0) == cplx(2.0));
    CHECK(parse_nonlinear_function("na")(5, 1) == cplx(5.0));
    CHECK(parse_nonlinear_function("nb")(5, 1) == cplx(1.0));
    CHECK(parse_nonlinear_function("2+3*4")(0, 0) == cplx(14.0));
    CHECK(parse_nonlinear_function("(2+3)*4")(0, 0) == cplx(20.0));
    CHECK(parse_nonlinear_function("-na")(3, 0) == cplx(-3.0));
    CHECK(parse_nonlinear_function("na*nb - 3")(2, 4) == cplx(5.0));
    CHECK(parse_nonlinear_function("  1 / ( na + 1 ) ")(3, 0).real() ==
          doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("powneg1") {
    const NonlinearFunction f = parse_nonlinear_function("powneg1(nb)");
    CHECK(f(0, 0) == cplx(1.0));
    CHECK(f(0, 1) == cplx(-1.0));
    CHECK(f(0, 2) == cplx(1.0));
    const NonlinearFunction g = parse_nonlinear_function("powneg1(nb)/(na+1)");
    CHECK(g(2, 3).real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(parse_nonlinear_function("powneg1(na/2)")(1, 0),
                    FunctionDomainError);
}

TEST_CASE("expression matches the named catalog entry pointwise") {
    const NonlinearFunction parsed = parse_nonlinear_function("1/(na+1)");
    const NonlinearFunction named = catalog(CatalogFunction::perelomov_reduced);
    for (long na = 0; na <= 32; ++na) CHECK(parsed(na, 2) == named(na, 2));
}

TEST_CASE("division by zero is a deferred domain error") {
    const NonlinearFunction f = parse_nonlinear_function("1/(na-2)");
    CHECK_NOTHROW(f(5, 0));
    CHECK_THROWS_AS(f(2, 0), FunctionDomainError);
}

TEST_CASE("zero_set_guard falls back to evaluation for expressions") {
    const NonlinearFunction f = parse_nonlinear_function("na-2");
    CHECK(f.vanishes_at(2, 0));
    CHECK(!f.vanishes_at(3, 0));
}

TEST_CASE("syntax errors") {
    CHECK_THROWS_AS(parse_nonlinear_function("na +"), ExprParseError);
    CHECK_THROWS_AS(parse_nonlinear_function("foo"), ExprParseError);
    CHECK_THROWS_AS(parse_nonlinear_function("(na"), ExprParseError);
    CHECK_THROWS_AS(parse_nonlinear_function("1 2"), ExprParseError);
    CHECK_THROWS_AS(parse_nonlinear_function("powneg1 nb"), ExprParseError);
    CHECK_THROWS_AS(parse_nonlinear_function(""), ExprParseError);
}

TEST_CASE("the source text becomes the label") {
    CHECK(parse_nonlinear_function("1/(na+1)").label() == "1/(na+1)");
}
