#include <doctest.h>

#include <random>

#include "rieszrep/dual.hpp"
#include "rieszrep/oracle.hpp"

using namespace rieszrep;

namespace {

GroupPtr z4_negation() {
    IntMatrix id = IntMatrix::identity(1);
    IntMatrix neg = id;
    neg.at(0, 0) = -1;
    return Group::semidirect(AbelianGroupSpec::finite({4}), FiniteGroupTable::cyclic(2),
                             ActionSpec{{id, neg}});
}

GammaSignal dihedral_example() {
    GammaSignal f(Group::dihedral_infinite());
    f.set({{0}, 0}, Scalar(Rational(3, 8)));
    f.set({{-1}, 1}, Scalar(Rational(1, 8)));
    return f;
}

GammaSignal random_signal(const GroupPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    GammaSignal f(g);
    for (const auto& gamma : g->enumerate()) f.set(gamma, Scalar(cplx{gauss(rng), gauss(rng)}));
    return f;
}

} // namespace

TEST_CASE("exact Laurent dual of the worked dihedral pair") {
    GammaSignal f = dihedral_example();
    auto g = dual_exact_laurent(f);
    REQUIRE(g.has_value());
    REQUIRE(g->is_exact());

    // ghat_1 = 3, ghat_{-1} = -z: coefficients {0: 3} and {-1: -1}
    CHECK(g->get({{0}, 0}).exact() == GaussianRational{Rational(3)});
    CHECK(g->get({{-1}, 1}).exact() == GaussianRational{Rational(-1)});
    CHECK(g->support_size() == 2);
}

TEST_CASE("the exact route declines when the determinant is not a monomial") {
    // f1 = 1 + z/2 gives det F = (1 + z/2)(1 + 1/(2z)) with three terms
    GammaSignal f(Group::dihedral_infinite());
    f.set({{0}, 0}, Scalar(Rational(1)));
    f.set({{-1}, 0}, Scalar(Rational(1, 2)));
    CHECK_FALSE(dual_exact_laurent(f).has_value());

    // delta stays delta
    GammaSignal d = GammaSignal::delta(Group::dihedral_infinite());
    auto dd = dual_exact_laurent(d);
    REQUIRE(dd.has_value());
    CHECK(max_abs_diff(*dd, d) == 0.0);
}

TEST_CASE("dual of delta is delta on finite groups") {
    auto g = z4_negation();
    DualResult d = dual_generator(GammaSignal::delta(g));
    CHECK(max_abs_diff(d.generator, GammaSignal::delta(g)) < 1e-12);
}

TEST_CASE("grid dual matches the Gram-inverse dual on finite groups") {
    for (auto g : {z4_negation(), Group::dihedral_finite(6)}) {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 10; ++trial) {
            GammaSignal f = random_signal(g, rng);
            AnalysisReport rep = riesz_analyze(f);
            if (!rep.riesz) continue;
            DualResult d = dual_generator(f);
            GammaSignal brute = oracle::brute_dual(f);
            CHECK(max_abs_diff(d.generator, brute) < 1e-10);
        }
    }
}

TEST_CASE("grid dual and exact dual agree on the dihedral example") {
    GammaSignal f = dihedral_example();
    DualResult d = dual_generator(f); // prefers the exact route
    CHECK(d.exact);

    // force the grid route by dropping exactness of one coefficient
    GammaSignal f2(f.group());
    f2.set({{0}, 0}, Scalar(0.375));
    f2.set({{-1}, 1}, Scalar(0.125));
    DualResult dg = dual_generator(f2);
    CHECK_FALSE(dg.exact);
    CHECK(max_abs_diff(dg.generator, d.generator) < 1e-10);
    CHECK(dg.tail_energy < 1e-20);
}

TEST_CASE("dual generator fails loudly on a non-Riesz signal") {
    // f1 = 1 + z makes det F vanish at z = -1
    GammaSignal f(Group::dihedral_infinite());
    f.set({{0}, 0}, Scalar(Rational(1)));
    f.set({{-1}, 0}, Scalar(Rational(1)));
    CHECK_THROWS_AS(dual_generator(f), singular_transfer);

    // same on a finite group: transform zero at some character
    auto g = z4_negation();
    GammaSignal ff(g);
    ff.set({{0}, 0}, Scalar(Rational(1)));
    ff.set({{1}, 0}, Scalar(Rational(1)));
    ff.set({{2}, 0}, Scalar(Rational(1)));
    ff.set({{3}, 0}, Scalar(Rational(1)));
    CHECK_THROWS_AS(dual_generator(ff), singular_transfer);
    CHECK_THROWS_AS(oracle::brute_dual(ff), std::runtime_error);
}

TEST_CASE("inverse filter convolves to delta") {
    GammaSignal f = dihedral_example();
    GammaSignal h = inverse_filter(f);
    GammaSignal residual = convolve(f, h) - GammaSignal::delta(f.group());
    CHECK(residual.norm_squared() == 0.0); // exact path

    auto g = z4_negation();
    std::mt19937_64 rng(73);
    GammaSignal ff = random_signal(g, rng);
    if (riesz_analyze(ff).riesz) {
        GammaSignal hh = inverse_filter(ff);
        GammaSignal res = convolve(ff, hh) - GammaSignal::delta(g);
        CHECK(std::sqrt(res.norm_squared()) < 1e-10);
    }

    CHECK(max_abs_diff(inverse_filter(GammaSignal::delta(g)), GammaSignal::delta(g)) < 1e-12);
}

TEST_CASE("biorthogonality of the dual pair") {
    GammaSignal f = dihedral_example();
    DualResult d = dual_generator(f);
    BiorthResult res = biorthogonality_check(f, d.generator, 8, 1e-12);
    CHECK(res.pass);
    CHECK(res.worst_error == 0.0); // exact rational pair

    // (delta, delta) passes
    auto g = z4_negation();
    GammaSignal del = GammaSignal::delta(g);
    CHECK(biorthogonality_check(del, del).pass);

    // (f, f) with a non-orthonormal f fails: <f, f> = 9/64 + 1/64 != 1
    BiorthResult bad = biorthogonality_check(f, f, 4, 1e-10);
    CHECK_FALSE(bad.pass);
    CHECK(bad.worst_gamma == f.group()->identity());
}

TEST_CASE("reconstruction identity from the dual pair") {
    // a = sum_gamma <a, L_gamma f> L_gamma g for random finite-support a
    GammaSignal f = dihedral_example();
    DualResult d = dual_generator(f);
    std::mt19937_64 rng(79);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> coord(-5, 5);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        GammaSignal a(f.group());
        for (int i = 0; i < 8; ++i) a.set({{coord(rng)}, flip(rng)}, Scalar(gauss(rng)));
        GammaSignal coeff = correlate(a, f); // gamma -> <a, L_gamma f>
        GammaSignal back = convolve(coeff, d.generator);
        CHECK(max_abs_diff(back, a) < 1e-9);
    }
}

TEST_CASE("duality is an involution and swaps the bounds") {
    auto g = z4_negation();
    std::mt19937_64 rng(83);
    GammaSignal f = random_signal(g, rng);
    if (!riesz_analyze(f).riesz) return;

    DualResult d = dual_generator(f);
    DualResult dd = dual_generator(d.generator);
    CHECK(max_abs_diff(dd.generator, f) < 1e-9);

    AnalysisReport rf = riesz_analyze(f);
    AnalysisReport rg = riesz_analyze(d.generator);
    CHECK(rg.A_eig == doctest::Approx(1.0 / rf.B_eig).epsilon(1e-9));
    CHECK(rg.B_eig == doctest::Approx(1.0 / rf.A_eig).epsilon(1e-9));

    // closed-form case: bounds of the worked dual are 4 and 16
    GammaSignal fd = dihedral_example();
    DualResult gd = dual_generator(fd);
    AnalysisReport rgd = riesz_analyze(gd.generator);
    CHECK(rgd.A_eig == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(rgd.B_eig == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("lattice grid dual truncation reports its tail") {
    // a Riesz but non-monomial-determinant signal: f1 = 1 + z/4
    GammaSignal f(Group::dihedral_infinite());
    f.set({{0}, 0}, Scalar(Rational(1)));
    f.set({{-1}, 0}, Scalar(Rational(1, 4)));
    DualResult d = dual_generator(f);
    CHECK_FALSE(d.exact);
    CHECK(d.kept > 0);
    CHECK(d.tail_energy >= 0.0);
    CHECK(d.tail_energy < 1e-12);

    // the dual really is dual
    BiorthResult res = biorthogonality_check(f, d.generator, 16, 1e-9);
    CHECK(res.pass);
}

TEST_CASE("grid dual on a rank-2 lattice semidirect product") {
    // Z^2 x| {I, -I}; a Riesz generator whose determinant is not a monomial,
    // so the dual comes from the grid route and the tensor inverse FFT
    IntMatrix id = IntMatrix::identity(2);
    IntMatrix neg = id;
    neg.at(0, 0) = -1;
    neg.at(1, 1) = -1;
    auto g2 = Group::semidirect(AbelianGroupSpec::lattice(2), FiniteGroupTable::cyclic(2),
                                ActionSpec{{id, neg}});

    GammaSignal f(g2);
    f.set({{0, 0}, 0}, Scalar(Rational(1)));
    f.set({{1, 0}, 0}, Scalar(Rational(1, 4)));
    f.set({{0, 1}, 1}, Scalar(Rational(1, 8)));

    Tolerances tol;
    tol.grid = 256;
    tol.max_refine = 2;
    AnalysisReport rep = riesz_analyze(f, tol);
    REQUIRE(rep.riesz);

    DualResult d = dual_generator(f, tol);
    CHECK_FALSE(d.exact);
    CHECK(d.kept > 0);

    // biorthogonality over the checked support and a small window
    GammaSignal products = correlate(d.generator, f);
    double worst = 0.0;
    for (std::int64_t n1 = -3; n1 <= 3; ++n1)
        for (std::int64_t n2 = -3; n2 <= 3; ++n2)
            for (int h = 0; h < 2; ++h) {
                GammaElement gamma{{n1, n2}, h};
                double expected = gamma == g2->identity() ? 1.0 : 0.0;
                worst = std::max(worst,
                                 std::abs(products.get(gamma).value() - cplx{expected, 0.0}));
            }
    CHECK(worst < 1e-9);
}

TEST_CASE("verdicts nest: onb implies riesz implies bessel") {
    std::vector<GammaSignal> corpus;
    corpus.push_back(GammaSignal::delta(Group::dihedral_infinite()));
    GammaSignal f(Group::dihedral_infinite());
    f.set({{0}, 0}, Scalar(Rational(3, 8)));
    f.set({{-1}, 1}, Scalar(Rational(1, 8)));
    corpus.push_back(f);
    GammaSignal bad(Group::dihedral_infinite());
    bad.set({{0}, 0}, Scalar(Rational(1)));
    bad.set({{-1}, 0}, Scalar(Rational(1)));
    corpus.push_back(bad);

    for (const auto& s : corpus) {
        AnalysisReport rep = riesz_analyze(s);
        if (rep.onb) CHECK(rep.riesz);
        if (rep.riesz) CHECK(rep.bessel);
    }
}
