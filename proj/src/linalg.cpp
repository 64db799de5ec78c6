#include "rieszrep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rieszrep::linalg {

namespace {

double off_diagonal_norm(const std::vector<cplx>& a, int n) {
    double s = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c) s += std::norm(a[static_cast<std::size_t>(r) * n + c]);
    return std::sqrt(s);
}

} // namespace

std::vector<double> hermitian_eigenvalues(std::span<const cplx> in, int n) {
    std::vector<cplx> a(in.begin(), in.end());
    auto at = [&](int r, int c) -> cplx& { return a[static_cast<std::size_t>(r) * n + c]; };

    double frob = 0.0;
    for (const auto& v : a) frob += std::norm(v);
    frob = std::sqrt(frob);
    const double threshold = 1e-13 * std::max(1.0, frob);

    for (int sweep = 0; sweep < 60 && off_diagonal_norm(a, n) > threshold; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx apq = at(p, q);
                double mag = std::abs(apq);
                if (mag <= threshold / (n * n + 1)) continue;
                // unitary 2x2 rotation annihilating the (p,q) entry
                double app = at(p, p).real();
                double aqq = at(q, q).real();
                cplx phase = apq / mag;
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                cplx sp = s * phase;
                for (int k = 0; k < n; ++k) {
                    cplx akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - std::conj(sp) * akq;
                    at(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    cplx apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - sp * aqk;
                    at(q, k) = std::conj(sp) * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

cplx determinant(std::span<const cplx> in, int n) {
    std::vector<cplx> a(in.begin(), in.end());
    auto at = [&](int r, int c) -> cplx& { return a[static_cast<std::size_t>(r) * n + c]; };
    cplx det{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(at(r, k)) > std::abs(at(pivot, k))) pivot = r;
        if (std::abs(at(pivot, k)) == 0.0) return {0.0, 0.0};
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            det = -det;
        }
        det *= at(k, k);
        for (int r = k + 1; r < n; ++r) {
            cplx factor = at(r, k) / at(k, k);
            for (int c = k; c < n; ++c) at(r, c) -= factor * at(k, c);
        }
    }
    return det;
}

SolveInfo solve(std::vector<cplx> a, int n, std::span<cplx> b) {
    auto at = [&](int r, int c) -> cplx& { return a[static_cast<std::size_t>(r) * n + c]; };
    SolveInfo info;
    info.min_pivot = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(at(r, k)) > std::abs(at(pivot, k))) pivot = r;
        double mag = std::abs(at(pivot, k));
        info.min_pivot = std::min(info.min_pivot, mag);
        if (mag == 0.0) {
            info.singular = true;
            return info;
        }
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(pivot)]);
        }
        for (int r = k + 1; r < n; ++r) {
            cplx factor = at(r, k) / at(k, k);
            for (int c = k; c < n; ++c) at(r, c) -= factor * at(k, c);
            b[static_cast<std::size_t>(r)] -= factor * b[static_cast<std::size_t>(k)];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        cplx acc = b[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c) acc -= at(r, c) * b[static_cast<std::size_t>(c)];
        b[static_cast<std::size_t>(r)] = acc / at(r, r);
    }
    return info;
}

void fft_pow2(std::span<cplx> data, int sign) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        cplx wlen{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = data[i + k];
                cplx v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void fft_nd(std::span<cplx> data, std::span<const std::size_t> shape, int sign) {
    std::size_t total = 1;
    for (auto s : shape) total *= s;
    if (total != data.size()) throw std::invalid_argument("fft_nd: shape mismatch");
    std::size_t stride = 1; // stride of the current axis, row-major from last axis
    for (std::size_t axis = shape.size(); axis-- > 0;) {
        const std::size_t len = shape[axis];
        std::vector<cplx> scratch(len);
        const std::size_t block = stride * len;
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t k = 0; k < len; ++k) scratch[k] = data[base + off + k * stride];
                fft_pow2(scratch, sign);
                for (std::size_t k = 0; k < len; ++k) data[base + off + k * stride] = scratch[k];
            }
        }
        stride *= len;
    }
}

Quadrature gauss_legendre(int q) {
    if (q < 1) throw std::invalid_argument("quadrature order must be >= 1");
    Quadrature rule;
    rule.nodes.resize(static_cast<std::size_t>(q));
    rule.weights.resize(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        // Newton from the Chebyshev estimate of the i-th root of P_q
        double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= q; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            deriv = q * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * deriv * deriv);
    }
    return rule;
}

} // namespace rieszrep::linalg
