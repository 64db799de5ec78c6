#include <doctest.h>

#include <random>

#include "rieszrep/oracle.hpp"
#include "rieszrep/signal.hpp"

using namespace rieszrep;

namespace {

GroupPtr z4_negation() {
    IntMatrix id = IntMatrix::identity(1);
    IntMatrix neg = id;
    neg.at(0, 0) = -1;
    return Group::semidirect(AbelianGroupSpec::finite({4}), FiniteGroupTable::cyclic(2),
                             ActionSpec{{id, neg}});
}

GammaSignal random_signal(const GroupPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    GammaSignal f(g);
    for (const auto& gamma : g->enumerate()) f.set(gamma, Scalar(cplx{gauss(rng), gauss(rng)}));
    return f;
}

GammaSignal random_dihedral(const GroupPtr& g, std::mt19937_64& rng, std::int64_t window) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> coord(-window, window);
    std::uniform_int_distribution<int> flip(0, 1);
    GammaSignal f(g);
    for (int i = 0; i < 10; ++i)
        f.set({{coord(rng)}, flip(rng)}, Scalar(cplx{gauss(rng), gauss(rng)}));
    return f;
}

} // namespace

TEST_CASE("left translation moves deltas and preserves norms") {
    auto dinf = Group::dihedral_infinite();
    GammaSignal d = GammaSignal::delta(dinf);

    GammaElement gamma{{1}, 1};
    GammaSignal moved = left_translate(gamma, d);
    CHECK(Scalar::close(moved.get(gamma), Scalar(Rational(1))));
    CHECK(moved.support_size() == 1);

    // L_gamma delta_eta = delta_{gamma eta}
    GammaElement eta{{4}, 0};
    GammaSignal de(dinf);
    de.set(eta, Scalar(Rational(1)));
    GammaSignal lt = left_translate(gamma, de);
    CHECK(Scalar::close(lt.get(dinf->multiply(gamma, eta)), Scalar(Rational(1))));

    CHECK(left_translate(dinf->identity(), de).get(eta).exact() == de.get(eta).exact());

    std::mt19937_64 rng(3);
    GammaSignal f = random_dihedral(dinf, rng, 50);
    CHECK(left_translate(gamma, f).norm_squared() == doctest::Approx(f.norm_squared()));
}

TEST_CASE("involution is an isometric anti-involution") {
    auto dinf = Group::dihedral_infinite();
    GammaSignal d = GammaSignal::delta(dinf);
    CHECK(Scalar::close(involution(d).get(dinf->identity()), Scalar(Rational(1))));

    // real signal supported at (1, 1_H) moves to (-1, 1_H)
    GammaSignal s(dinf);
    s.set({{1}, 0}, Scalar(Rational(2)));
    GammaSignal si = involution(s);
    CHECK(Scalar::close(si.get({{-1}, 0}), Scalar(Rational(2))));
    CHECK(si.support_size() == 1);

    std::mt19937_64 rng(11);
    GammaSignal f = random_dihedral(dinf, rng, 30);
    CHECK(max_abs_diff(involution(involution(f)), f) < 1e-15);
    CHECK(involution(f).norm_squared() == doctest::Approx(f.norm_squared()));
}

TEST_CASE("blocks specialize to the dihedral reversal pattern") {
    auto dinf = Group::dihedral_infinite();
    std::mt19937_64 rng(5);
    GammaSignal f = random_dihedral(dinf, rng, 10);

    // f_{0,1}(n) = f_1(-n) and f_{1,1}(n) = f_0(-n) for the reflection l
    NSequence b01 = block(f, 0, 1);
    NSequence b11 = block(f, 1, 1);
    for (std::int64_t n = -12; n <= 12; ++n) {
        CHECK(b01.get({n}).value() == f.get({{-n}, 1}).value());
        CHECK(b11.get({n}).value() == f.get({{-n}, 0}).value());
    }
    // l = identity gives the phases themselves
    NSequence b00 = block(f, 0, 0);
    for (std::int64_t n = -12; n <= 12; ++n) CHECK(b00.get({n}).value() == f.get({{n}, 0}).value());
}

TEST_CASE("convolution on N") {
    // {0:1, 1:1} * {0:1, 1:-1} = {0:1, 2:-1} with the middle term cancelling
    NSequence a(AbelianGroupSpec::lattice(1)), b(AbelianGroupSpec::lattice(1));
    a.set({0}, Scalar(Rational(1)));
    a.set({1}, Scalar(Rational(1)));
    b.set({0}, Scalar(Rational(1)));
    b.set({1}, Scalar(Rational(-1)));
    NSequence c = convolve_n(a, b);
    CHECK(c.support_size() == 2);
    CHECK(c.get({0}).exact() == GaussianRational{Rational(1)});
    CHECK(c.get({1}).is_zero());
    CHECK(c.get({2}).exact() == GaussianRational{Rational(-1)});

    // delta is the unit
    NSequence dn(AbelianGroupSpec::lattice(1));
    dn.set({0}, Scalar(Rational(1)));
    NSequence ad = convolve_n(a, dn);
    CHECK(ad.get({0}).exact() == a.get({0}).exact());
    CHECK(ad.get({1}).exact() == a.get({1}).exact());

    // cyclic shift on Z4
    NSequence z(AbelianGroupSpec::finite({4})), shift(AbelianGroupSpec::finite({4}));
    z.set({2}, Scalar(Rational(1)));
    shift.set({1}, Scalar(Rational(1)));
    NSequence zs = convolve_n(z, shift);
    CHECK(zs.get({3}).exact() == GaussianRational{Rational(1)});
    CHECK(zs.support_size() == 1);
}

TEST_CASE("group convolution agrees with the literal double sum") {
    auto g = z4_negation();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        GammaSignal a = random_signal(g, rng);
        GammaSignal f = random_signal(g, rng);
        CHECK(max_abs_diff(convolve(a, f), oracle::brute_convolve(a, f)) < 1e-12);
    }

    auto dinf = Group::dihedral_infinite();
    for (int trial = 0; trial < 25; ++trial) {
        GammaSignal a = random_dihedral(dinf, rng, 8);
        GammaSignal f = random_dihedral(dinf, rng, 8);
        CHECK(max_abs_diff(convolve(a, f), oracle::brute_convolve(a, f)) < 1e-12);
    }
}

TEST_CASE("delta is the convolution unit and deltas translate") {
    auto dinf = Group::dihedral_infinite();
    GammaSignal d = GammaSignal::delta(dinf);
    std::mt19937_64 rng(23);
    GammaSignal f = random_dihedral(dinf, rng, 10);

    CHECK(max_abs_diff(convolve(d, f), f) == 0.0);
    CHECK(max_abs_diff(convolve(convolve(d, d), d), d) == 0.0);

    GammaElement gamma{{2}, 1};
    GammaSignal dg(dinf);
    dg.set(gamma, Scalar(Rational(1)));
    CHECK(max_abs_diff(convolve(dg, f), left_translate(gamma, f)) < 1e-15);
}

TEST_CASE("correlation computes inner products with translates") {
    auto g = z4_negation();
    std::mt19937_64 rng(29);
    GammaSignal a = random_signal(g, rng);
    GammaSignal f = random_signal(g, rng);

    GammaSignal products = correlate(a, f);
    for (const auto& gamma : g->enumerate()) {
        Scalar direct = inner(a, left_translate(gamma, f));
        CHECK(std::abs(products.get(gamma).value() - direct.value()) < 1e-12);
    }

    GammaSignal d = GammaSignal::delta(g);
    CHECK(max_abs_diff(correlate(d, d), d) == 0.0);
}

TEST_CASE("synthesis and analysis are adjoint") {
    auto g = z4_negation();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        GammaSignal a = random_signal(g, rng);
        GammaSignal b = random_signal(g, rng);
        GammaSignal f = random_signal(g, rng);
        // <a * f, b> = <a, b * f^*>
        Scalar lhs = inner(convolve(a, f), b);
        Scalar rhs = inner(a, correlate(b, f));
        CHECK(std::abs(lhs.value() - rhs.value()) < 1e-11);
    }
}

TEST_CASE("involution reverses convolution order") {
    auto dinf = Group::dihedral_infinite();
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        GammaSignal a = random_dihedral(dinf, rng, 6);
        GammaSignal f = random_dihedral(dinf, rng, 6);
        CHECK(max_abs_diff(involution(convolve(a, f)),
                           convolve(involution(f), involution(a))) < 1e-12);
    }
}

TEST_CASE("left translation by (0, l) commutes with synthesis") {
    auto g = z4_negation();
    std::mt19937_64 rng(41);
    GammaSignal a = random_signal(g, rng);
    GammaSignal f = random_signal(g, rng);
    for (int l = 0; l < g->kappa(); ++l) {
        GammaElement shift{{0}, l};
        CHECK(max_abs_diff(left_translate(shift, convolve(a, f)),
                           convolve(left_translate(shift, a), f)) < 1e-12);
    }
}

TEST_CASE("blockwise convolution matches the double sum on a kappa = 3 group") {
    // Z7 x| Z3 by multiplication with 2: H is not involutive, so the l vs
    // l^{-1} orientation of the block decomposition actually matters here
    IntMatrix two;
    two.dim = 1;
    two.data = {2};
    IntMatrix four;
    four.dim = 1;
    four.data = {4};
    auto g = Group::semidirect(AbelianGroupSpec::finite({7}), FiniteGroupTable::cyclic(3),
                               ActionSpec{{IntMatrix::identity(1), two, four}});

    std::mt19937_64 rng(211);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        GammaSignal a(g), f(g);
        for (const auto& gamma : g->enumerate()) {
            a.set(gamma, Scalar(cplx{gauss(rng), gauss(rng)}));
            f.set(gamma, Scalar(cplx{gauss(rng), gauss(rng)}));
        }
        CHECK(max_abs_diff(convolve(a, f), oracle::brute_convolve(a, f)) < 1e-12);

        // correlation really is the inner product with translates
        GammaSignal products = correlate(a, f);
        for (const auto& gamma : g->enumerate())
            CHECK(std::abs(products.get(gamma).value() -
                           inner(a, left_translate(gamma, f)).value()) < 1e-11);
    }
}
