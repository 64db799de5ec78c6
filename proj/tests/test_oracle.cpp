#include <doctest.h>

#include <random>

#include "rieszrep/oracle.hpp"
#include "rieszrep/spectral.hpp"

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

} // namespace

TEST_CASE("brute convolution is associative and unital") {
    auto g = z4_negation();
    std::mt19937_64 rng(97);
    GammaSignal d = GammaSignal::delta(g);
    for (int trial = 0; trial < 10; ++trial) {
        GammaSignal a = random_signal(g, rng);
        GammaSignal f = random_signal(g, rng);
        GammaSignal h = random_signal(g, rng);
        CHECK(max_abs_diff(oracle::brute_convolve(d, f), f) == 0.0);
        CHECK(max_abs_diff(oracle::brute_convolve(oracle::brute_convolve(a, f), h),
                           oracle::brute_convolve(a, oracle::brute_convolve(f, h))) < 1e-12);
    }
}

TEST_CASE("synthesis matrix of delta is the identity") {
    auto g = z4_negation();
    auto m = oracle::brute_synthesis_matrix(GammaSignal::delta(g));
    REQUIRE(m.size() == 8);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) {
            cplx expected = r == c ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            CHECK(std::abs(m[r][c] - expected) < 1e-15);
        }
}

TEST_CASE("dense spectrum equals the transfer-matrix bounds on finite groups") {
    for (auto g : {z4_negation(), Group::dihedral_finite(6)}) {
        std::mt19937_64 rng(103);
        for (int trial = 0; trial < 10; ++trial) {
            GammaSignal f = random_signal(g, rng);
            AnalysisReport rep = riesz_analyze(f);
            auto [lo, hi] = oracle::synthesis_spectrum(f);
            CHECK(std::abs(lo - rep.A_eig) < 1e-10);
            CHECK(std::abs(hi - rep.B_eig) < 1e-10);
        }
    }
}

TEST_CASE("frame probe of delta returns unit ratios") {
    auto g = z4_negation();
    auto [lo, hi] = oracle::frame_probe(GammaSignal::delta(g), 50, 1234);
    CHECK(lo == doctest::Approx(1.0));
    CHECK(hi == doctest::Approx(1.0));
}

TEST_CASE("targeted probes reach the dihedral example bounds") {
    // T_Gamma a = [1, z] and [1, -z] are eigenvector fields of F*F with
    // eigenvalues 1/4 and 1/16, so these finite-support probes attain the
    // optimal bounds exactly.
    GammaSignal f(Group::dihedral_infinite());
    f.set({{0}, 0}, Scalar(Rational(3, 8)));
    f.set({{-1}, 1}, Scalar(Rational(1, 8)));

    GammaSignal top(f.group());
    top.set({{0}, 0}, Scalar(Rational(1)));
    top.set({{-1}, 1}, Scalar(Rational(1)));
    double top_ratio = oracle::brute_convolve(top, f).norm_squared() / top.norm_squared();
    CHECK(top_ratio == doctest::Approx(0.25).epsilon(1e-14));

    GammaSignal bottom(f.group());
    bottom.set({{0}, 0}, Scalar(Rational(1)));
    bottom.set({{-1}, 1}, Scalar(Rational(-1)));
    double bottom_ratio = oracle::brute_convolve(bottom, f).norm_squared() / bottom.norm_squared();
    CHECK(bottom_ratio == doctest::Approx(1.0 / 16).epsilon(1e-14));

    // random probes stay inside
    auto [lo, hi] = oracle::frame_probe(f, 1000, 4321);
    CHECK(lo >= 1.0 / 16 - 1e-12);
    CHECK(hi <= 0.25 + 1e-12);
}
