#include <doctest.h>

#include <random>

#include "rieszrep/io.hpp"

using namespace rieszrep;
using rieszrep::io::json;

TEST_CASE("scalars round-trip bit-exactly on the rational path") {
    Scalar exact(Rational(-3, 8));
    json j = io::scalar_to_json(exact);
    Scalar back = io::scalar_from_json(j);
    REQUIRE(back.is_exact());
    CHECK(back.exact() == exact.exact());

    Scalar complex_exact(GaussianRational{Rational(1, 3), Rational(-2, 7)});
    Scalar back2 = io::scalar_from_json(io::scalar_to_json(complex_exact));
    CHECK(back2.exact() == complex_exact.exact());

    Scalar floaty(cplx{0.1234567890123456789, -2.5e-17});
    Scalar back3 = io::scalar_from_json(io::scalar_to_json(floaty));
    CHECK_FALSE(back3.is_exact());
    CHECK(back3.value() == floaty.value()); // bitwise, json prints round-trip doubles

    // plain numbers parse too
    CHECK(io::scalar_from_json(json(0.5)).value() == cplx{0.5, 0.0});
}

TEST_CASE("groups round-trip through their JSON descriptor") {
    auto dinf = Group::dihedral_infinite();
    GroupPtr back = io::group_from_json(io::group_to_json(*dinf));
    CHECK(back->same_group(*dinf));

    IntMatrix id = IntMatrix::identity(1);
    IntMatrix neg = id;
    neg.at(0, 0) = -1;
    auto z4 = Group::semidirect(AbelianGroupSpec::finite({4}), FiniteGroupTable::cyclic(2),
                                ActionSpec{{id, neg}});
    CHECK(io::group_from_json(io::group_to_json(*z4))->same_group(*z4));

    // malformed input names the offending field
    json bad = io::group_to_json(*z4);
    bad["N"]["kind"] = "weird";
    CHECK_THROWS_AS(io::group_from_json(bad), std::exception);
}

TEST_CASE("signals round-trip with mixed exact and floating coefficients") {
    auto dinf = Group::dihedral_infinite();
    GammaSignal f(dinf);
    f.set({{0}, 0}, Scalar(Rational(3, 8)));
    f.set({{-1}, 1}, Scalar(Rational(1, 8)));
    f.set({{5}, 1}, Scalar(cplx{0.25, -1.75}));

    GammaSignal back = io::signal_from_json(io::signal_to_json(f));
    CHECK(back.group()->same_group(*dinf));
    CHECK(back.get({{0}, 0}).exact() == f.get({{0}, 0}).exact());
    CHECK(back.get({{-1}, 1}).exact() == f.get({{-1}, 1}).exact());
    CHECK(back.get({{5}, 1}).value() == f.get({{5}, 1}).value());
    CHECK(back.support_size() == 3);

    // a second round trip is textually identical
    CHECK(io::signal_to_json(back).dump() == io::signal_to_json(f).dump());
}

TEST_CASE("generators round-trip") {
    PiecewisePolynomial::Piece piece{Rational(0), Rational(2),
                                     {Rational(0), Rational(0), Rational(-52), Rational(52),
                                      Rational(51), Rational(-64), Rational(16)}};
    Generator phi = Generator::piecewise(PiecewisePolynomial({piece}));
    Generator back = io::generator_from_json(io::generator_to_json(phi));
    REQUIRE(back.as_piecewise() != nullptr);
    CHECK(*back.eval_exact({Rational(1, 4)}) == Rational(-147, 64));

    Generator tab = Generator::tabulated({{0.0}, {1.0}}, {3}, {0.0, 1.0, 0.0});
    Generator tback = io::generator_from_json(io::generator_to_json(tab));
    CHECK(tback.eval1(0.5) == doctest::Approx(1.0));
    CHECK(tback.eval1(0.25) == doctest::Approx(0.5));
}

TEST_CASE("sample CSV round-trips") {
    SampleMap samples;
    samples[{{0}, 0}] = Scalar(1.25);
    samples[{{-3}, 1}] = Scalar(-0.0625);
    samples[{{12}, 0}] = Scalar(3.0);

    std::string csv = io::samples_to_csv(samples, 1);
    SampleMap back = io::samples_from_csv(csv, 1);
    REQUIRE(back.size() == 3);
    for (const auto& [gamma, v] : samples)
        CHECK(back.at(gamma).value() == v.value());

    CHECK_THROWS_AS(io::samples_from_csv("n,h,value\n0,0\n", 1), std::invalid_argument);
}

TEST_CASE("analysis reports serialize with verdicts and grid metadata") {
    GammaSignal f(Group::dihedral_infinite());
    f.set({{0}, 0}, Scalar(Rational(3, 8)));
    f.set({{-1}, 1}, Scalar(Rational(1, 8)));
    AnalysisReport rep = riesz_analyze(f);
    json j = io::report_to_json(rep);
    CHECK(j.at("verdicts").at("riesz").get<bool>());
    CHECK_FALSE(j.at("verdicts").at("onb").get<bool>());
    CHECK(j.at("A_sing").get<double>() == doctest::Approx(0.25));
    CHECK(j.at("grid").at("history").size() >= 1);
    CHECK(j.at("estimate_note").get<std::string>().find("upper bounds") != std::string::npos);
}

TEST_CASE("rational literals parse exactly and reject junk") {
    CHECK(Rational::parse("3/8") == Rational(3, 8));
    CHECK(Rational::parse("-3/8") == Rational(-3, 8));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-0.125") == Rational(-1, 8));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1e-3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("0.25x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1."), std::invalid_argument);
}
