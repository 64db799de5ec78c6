#include "rieszrep/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rieszrep {

AbelianGroupSpec AbelianGroupSpec::finite(std::vector<std::int64_t> ms) {
    if (ms.empty()) throw std::invalid_argument("finite abelian group needs at least one factor");
    for (auto m : ms)
        if (m < 1) throw std::invalid_argument("invariant factors must be >= 1");
    AbelianGroupSpec s;
    s.kind = Kind::finite;
    s.factors = std::move(ms);
    s.element_count(); // overflow check
    return s;
}

AbelianGroupSpec AbelianGroupSpec::lattice(int d) {
    if (d < 1) throw std::invalid_argument("lattice rank must be >= 1");
    AbelianGroupSpec s;
    s.kind = Kind::lattice;
    s.rank = d;
    return s;
}

std::int64_t AbelianGroupSpec::element_count() const {
    if (!is_finite()) throw std::logic_error("element_count on lattice group");
    std::int64_t total = 1;
    for (auto m : factors) {
        if (total > (std::int64_t{1} << 40) / m)
            throw std::invalid_argument("finite group too large to enumerate");
        total *= m;
    }
    return total;
}

NVec AbelianGroupSpec::reduce(NVec n) const {
    if (n.size() != static_cast<std::size_t>(dimension()))
        throw std::invalid_argument("element has wrong dimension");
    if (is_finite()) {
        for (std::size_t i = 0; i < n.size(); ++i) {
            n[i] %= factors[i];
            if (n[i] < 0) n[i] += factors[i];
        }
    }
    return n;
}

NVec AbelianGroupSpec::add(const NVec& a, const NVec& b) const {
    NVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return reduce(std::move(out));
}

NVec AbelianGroupSpec::negate(const NVec& a) const {
    NVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return reduce(std::move(out));
}

std::int64_t AbelianGroupSpec::index_of(const NVec& n) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + n[i];
    return idx;
}

NVec AbelianGroupSpec::element_at(std::int64_t idx) const {
    NVec n(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        n[i] = idx % factors[i];
        idx /= factors[i];
    }
    return n;
}

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table) {
    kappa_ = static_cast<int>(table.size());
    if (kappa_ < 1) throw std::invalid_argument("empty multiplication table");
    table_.resize(static_cast<std::size_t>(kappa_) * kappa_);
    for (int a = 0; a < kappa_; ++a) {
        if (table[a].size() != static_cast<std::size_t>(kappa_))
            throw std::invalid_argument("multiplication table is not square");
        for (int b = 0; b < kappa_; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= kappa_)
                throw std::invalid_argument("table entry out of range at (" + std::to_string(a) +
                                            "," + std::to_string(b) + ")");
            table_[static_cast<std::size_t>(a) * kappa_ + b] = v;
        }
    }
    // identity must sit at index 0
    for (int a = 0; a < kappa_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::invalid_argument("index 0 is not the identity of H");
    // associativity
    for (int a = 0; a < kappa_; ++a)
        for (int b = 0; b < kappa_; ++b)
            for (int c = 0; c < kappa_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("H table is not associative at (" +
                                                std::to_string(a) + "," + std::to_string(b) + "," +
                                                std::to_string(c) + ")");
    // two-sided inverses
    inverse_.assign(static_cast<std::size_t>(kappa_), -1);
    for (int a = 0; a < kappa_; ++a) {
        for (int b = 0; b < kappa_; ++b) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(a)] < 0)
            throw std::invalid_argument("H element " + std::to_string(a) + " has no inverse");
    }
}

FiniteGroupTable FiniteGroupTable::trivial() {
    return FiniteGroupTable(std::vector<std::vector<int>>{{0}});
}

FiniteGroupTable FiniteGroupTable::cyclic(int k) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k), std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
    return FiniteGroupTable(std::move(t));
}

IntMatrix IntMatrix::identity(int d) {
    IntMatrix m;
    m.dim = d;
    m.data.assign(static_cast<std::size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

NVec IntMatrix::apply(const NVec& v) const {
    NVec out(static_cast<std::size_t>(dim), 0);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out[r] += at(r, c) * v[c];
    return out;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    IntMatrix out;
    out.dim = dim;
    out.data.assign(static_cast<std::size_t>(dim) * dim, 0);
    for (int r = 0; r < dim; ++r)
        for (int k = 0; k < dim; ++k)
            for (int c = 0; c < dim; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
    return out;
}

std::int64_t IntMatrix::determinant() const {
    // Bareiss fraction-free elimination; exact for the small dims used here.
    std::vector<__int128> a(data.begin(), data.end());
    auto at128 = [&](int r, int c) -> __int128& { return a[static_cast<std::size_t>(r) * dim + c]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (at128(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < dim; ++r)
                if (at128(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int c = 0; c < dim; ++c) std::swap(at128(k, c), at128(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < dim; ++r)
            for (int c = k + 1; c < dim; ++c)
                at128(r, c) = (at128(r, c) * at128(k, k) - at128(r, k) * at128(k, c)) / prev;
        prev = at128(k, k);
    }
    return static_cast<std::int64_t>(sign * at128(dim - 1, dim - 1));
}

Group::Group(AbelianGroupSpec n, FiniteGroupTable h, ActionSpec sigma)
    : n_(std::move(n)), h_(std::move(h)), sigma_(std::move(sigma)) {}

std::shared_ptr<const Group> Group::semidirect(AbelianGroupSpec n, FiniteGroupTable h,
                                               ActionSpec sigma) {
    if (sigma.matrices.size() != static_cast<std::size_t>(h.order()))
        throw std::invalid_argument("sigma needs one matrix per H element");
    for (const auto& m : sigma.matrices)
        if (m.dim != n.dimension())
            throw std::invalid_argument("sigma matrix dimension does not match N");
    auto g = std::shared_ptr<Group>(new Group(std::move(n), std::move(h), std::move(sigma)));
    g->validate_action();
    return g;
}

std::shared_ptr<const Group> Group::dihedral_infinite() {
    IntMatrix id = IntMatrix::identity(1);
    IntMatrix neg = id;
    neg.at(0, 0) = -1;
    return semidirect(AbelianGroupSpec::lattice(1), FiniteGroupTable::cyclic(2),
                      ActionSpec{{id, neg}});
}

std::shared_ptr<const Group> Group::dihedral_finite(std::int64_t m) {
    IntMatrix id = IntMatrix::identity(1);
    IntMatrix neg = id;
    neg.at(0, 0) = -1;
    return semidirect(AbelianGroupSpec::finite({m}), FiniteGroupTable::cyclic(2),
                      ActionSpec{{id, neg}});
}

void Group::validate_action() const {
    const int kappa = h_.order();
    const int d = n_.dimension();
    if (n_.is_finite()) {
        // each matrix must descend to prod Z_{m_i}: m_c * A_{rc} = 0 mod m_r
        for (int h = 0; h < kappa; ++h) {
            const IntMatrix& A = sigma_.of(h);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    if ((A.at(r, c) * n_.factors[static_cast<std::size_t>(c)]) %
                            n_.factors[static_cast<std::size_t>(r)] !=
                        0)
                        throw std::invalid_argument(
                            "sigma(" + std::to_string(h) +
                            ") is not well defined modulo the invariant factors");
        }
    } else {
        for (int h = 0; h < kappa; ++h) {
            std::int64_t det = sigma_.of(h).determinant();
            if (det != 1 && det != -1)
                throw std::invalid_argument("sigma(" + std::to_string(h) +
                                            ") has determinant " + std::to_string(det) +
                                            ", not an automorphism of Z^d");
        }
    }
    // sigma(0) = identity; additive maps agree iff they agree on unit vectors
    auto unit = [&](int i) {
        NVec e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return e;
    };
    for (int i = 0; i < d; ++i)
        if (n_.reduce(sigma_.of(0).apply(unit(i))) != n_.reduce(unit(i)))
            throw std::invalid_argument("sigma(identity) is not the identity map");
    for (int a = 0; a < kappa; ++a)
        for (int b = 0; b < kappa; ++b) {
            int ab = h_.mul(a, b);
            for (int i = 0; i < d; ++i) {
                NVec lhs = n_.reduce(sigma_.of(a).apply(n_.reduce(sigma_.of(b).apply(unit(i)))));
                NVec rhs = n_.reduce(sigma_.of(ab).apply(unit(i)));
                if (lhs != rhs)
                    throw std::invalid_argument("sigma is not a homomorphism at pair (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
}

NVec Group::act(int h, const NVec& n) const { return n_.reduce(sigma_.of(h).apply(n)); }

GammaElement Group::multiply(const GammaElement& x, const GammaElement& y) const {
    return {n_.add(x.n, act(x.h, y.n)), h_.mul(x.h, y.h)};
}

GammaElement Group::inverse(const GammaElement& x) const {
    int hinv = h_.inv(x.h);
    return {n_.negate(act(hinv, x.n)), hinv};
}

std::vector<GammaElement> Group::enumerate() const {
    if (!n_.is_finite())
        throw std::logic_error("enumerate is unsupported for lattice N");
    std::vector<GammaElement> out;
    std::int64_t count = n_.element_count();
    out.reserve(static_cast<std::size_t>(count) * kappa());
    for (int h = 0; h < kappa(); ++h)
        for (std::int64_t i = 0; i < count; ++i) out.push_back({n_.element_at(i), h});
    return out;
}

std::int64_t Group::order() const { return n_.element_count() * kappa(); }

std::vector<CharacterPoint> Group::characters() const {
    if (!n_.is_finite()) throw std::logic_error("characters() requires finite N");
    std::vector<CharacterPoint> out;
    std::int64_t count = n_.element_count();
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out.push_back({n_.element_at(i), {}});
    return out;
}

cplx Group::character_value(const CharacterPoint& xi, const NVec& n) const {
    double phase = 0.0;
    if (n_.is_finite()) {
        for (std::size_t i = 0; i < n.size(); ++i)
            phase += 2.0 * std::numbers::pi * static_cast<double>(xi.k[i]) *
                     static_cast<double>(n[i]) / static_cast<double>(n_.factors[i]);
    } else {
        for (std::size_t i = 0; i < n.size(); ++i) phase += xi.w[i] * static_cast<double>(n[i]);
    }
    return {std::cos(phase), std::sin(phase)};
}

bool Group::same_group(const Group& o) const {
    return n_ == o.n_ && h_ == o.h_ && sigma_.matrices == o.sigma_.matrices;
}

} // namespace rieszrep
