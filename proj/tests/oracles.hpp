#pragma once

// Independent oracles for the test suite. Everything here is deliberately
// written against the naive definition (dense elimination, direct DP) and
// shares no code with the library paths it checks.

#include <cstdint>
#include <vector>

#include "vsb/rational.hpp"
#include "vsb/svector.hpp"

namespace oracle {

// Dense Gaussian elimination: is w a rational combination of the given
// vectors inside Q^dim?
inline bool in_span(const std::vector<vsb::SuperVector>& vectors, const vsb::SuperVector& w,
                    int dim) {
    using vsb::Rational;
    // Columns are the spanning vectors, augmented with w; consistency of the
    // linear system is checked by eliminating rows.
    size_t cols = vectors.size();
    std::vector<std::vector<Rational>> m(static_cast<size_t>(dim),
                                         std::vector<Rational>(cols + 1, Rational(0)));
    for (size_t c = 0; c < cols; ++c)
        for (const auto& [idx, v] : vectors[c].entries()) m[static_cast<size_t>(idx)][c] = v;
    for (const auto& [idx, v] : w.entries()) m[static_cast<size_t>(idx)][cols] = v;

    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && vsb::is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || vsb::is_zero(m[r][col])) continue;
            Rational f = m[r][col] / m[row][col];
            for (size_t c2 = col; c2 <= cols; ++c2) m[r][c2] -= f * m[row][c2];
        }
        ++row;
    }
    for (size_t r = 0; r < m.size(); ++r) {
        bool lhs_zero = true;
        for (size_t c = 0; c < cols; ++c)
            if (!vsb::is_zero(m[r][c])) lhs_zero = false;
        if (lhs_zero && !vsb::is_zero(m[r][cols])) return false;
    }
    return true;
}

// Number of integer partitions of n (free even boson graded dimensions).
inline std::vector<long> partition_counts(int max_n) {
    std::vector<long> p(static_cast<size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= max_n; ++part)
        for (int n = part; n <= max_n; ++n) p[static_cast<size_t>(n)] += p[static_cast<size_t>(n - part)];
    return p;
}

// Partitions of n into distinct parts (free fermion graded dimensions).
inline std::vector<long> distinct_partition_counts(int max_n) {
    std::vector<long> q(static_cast<size_t>(max_n) + 1, 0);
    q[0] = 1;
    for (int part = 1; part <= max_n; ++part)
        for (int n = max_n; n >= part; --n) q[static_cast<size_t>(n)] += q[static_cast<size_t>(n - part)];
    return q;
}

// Small deterministic PRNG for property tests (split-mix style).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long next_in(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    vsb::Rational next_rational() {
        long num = next_in(-40, 40);
        long den = next_in(1, 23);
        return vsb::rat(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace oracle
