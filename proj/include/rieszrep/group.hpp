#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rieszrep/scalar.hpp"

namespace rieszrep {

using NVec = std::vector<std::int64_t>;

/// Discrete abelian group N: either a finite product of cyclic groups given by
/// invariant factors, or the integer lattice Z^d.
struct AbelianGroupSpec {
    enum class Kind { finite, lattice };

    Kind kind = Kind::lattice;
    std::vector<std::int64_t> factors; // finite: cyclic orders m_1..m_d
    int rank = 0;                      // lattice: dimension d

    static AbelianGroupSpec finite(std::vector<std::int64_t> ms);
    static AbelianGroupSpec lattice(int d);

    bool is_finite() const { return kind == Kind::finite; }
    int dimension() const { return is_finite() ? static_cast<int>(factors.size()) : rank; }
    std::int64_t element_count() const; // finite only

    NVec reduce(NVec n) const;
    NVec add(const NVec& a, const NVec& b) const;
    NVec negate(const NVec& a) const;

    // dense index <-> element, lexicographic over components (finite only)
    std::int64_t index_of(const NVec& n) const;
    NVec element_at(std::int64_t idx) const;

    bool operator==(const AbelianGroupSpec& o) const = default;
};

/// Finite group H given by an explicit multiplication table over indices
/// 0..kappa-1 with the identity fixed at index 0. The constructor checks the
/// group axioms.
class FiniteGroupTable {
public:
    explicit FiniteGroupTable(std::vector<std::vector<int>> table);

    int order() const { return kappa_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * kappa_ + b]; }
    int inv(int a) const { return inverse_[a]; }

    static FiniteGroupTable trivial();
    static FiniteGroupTable cyclic(int k);

    bool operator==(const FiniteGroupTable& o) const {
        return kappa_ == o.kappa_ && table_ == o.table_;
    }

private:
    int kappa_ = 1;
    std::vector<int> table_; // row-major kappa x kappa
    std::vector<int> inverse_;
};

/// Square integer matrix, row-major.
struct IntMatrix {
    int dim = 0;
    std::vector<std::int64_t> data;

    static IntMatrix identity(int d);
    std::int64_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * dim + c]; }
    std::int64_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * dim + c]; }
    NVec apply(const NVec& v) const;
    IntMatrix mul(const IntMatrix& o) const;
    std::int64_t determinant() const;
    bool operator==(const IntMatrix& o) const = default;
};

/// The action sigma: one integer matrix per H element. For lattice N the
/// matrices must be unimodular; for finite N they act modulo the invariant
/// factors and must be well defined and invertible there.
struct ActionSpec {
    std::vector<IntMatrix> matrices;

    const IntMatrix& of(int h) const { return matrices[static_cast<std::size_t>(h)]; }
};

struct GammaElement {
    NVec n;
    int h = 0;

    bool operator==(const GammaElement& o) const = default;
    bool operator<(const GammaElement& o) const {
        if (h != o.h) return h < o.h;
        return n < o.n;
    }
};

/// A point of the dual group: character index tuple for finite N, frequency
/// vector w in [-pi, pi)^d for the lattice.
struct CharacterPoint {
    std::vector<std::int64_t> k; // finite
    std::vector<double> w;       // lattice
};

/// Validated, immutable semidirect product N x| H. Construction checks the H
/// table, that every sigma matrix defines an automorphism of N, and that
/// sigma is a homomorphism; a failed check reports the offending pair.
class Group {
public:
    static std::shared_ptr<const Group> semidirect(AbelianGroupSpec n, FiniteGroupTable h,
                                                   ActionSpec sigma);
    /// Z x| Z_2 with the reflection acting by negation.
    static std::shared_ptr<const Group> dihedral_infinite();
    /// Z_m x| Z_2 with negation (m >= 3).
    static std::shared_ptr<const Group> dihedral_finite(std::int64_t m);

    const AbelianGroupSpec& N() const { return n_; }
    const FiniteGroupTable& H() const { return h_; }
    const ActionSpec& sigma() const { return sigma_; }
    int kappa() const { return h_.order(); }
    int dimension() const { return n_.dimension(); }

    GammaElement identity() const { return {NVec(static_cast<std::size_t>(dimension()), 0), 0}; }
    GammaElement multiply(const GammaElement& x, const GammaElement& y) const;
    GammaElement inverse(const GammaElement& x) const;
    NVec act(int h, const NVec& n) const;

    /// All elements of a finite-N group, h-major then lexicographic in n.
    std::vector<GammaElement> enumerate() const;
    std::int64_t order() const; // finite N only: kappa * |N|

    /// The complete character set of a finite N, lexicographic in k.
    std::vector<CharacterPoint> characters() const;
    cplx character_value(const CharacterPoint& xi, const NVec& n) const;

    bool same_group(const Group& o) const;

private:
    Group(AbelianGroupSpec n, FiniteGroupTable h, ActionSpec sigma);
    void validate_action() const;

    AbelianGroupSpec n_;
    FiniteGroupTable h_;
    ActionSpec sigma_;
};

using GroupPtr = std::shared_ptr<const Group>;

} // namespace rieszrep
