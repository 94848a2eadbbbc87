#include "sqf/squares.hpp"

#include <algorithm>
#include <vector>

namespace sqf {

namespace {

constexpr int kSeparator = -1;

std::vector<std::size_t> z_function(const std::vector<int>& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) return z;
    z[0] = n;
    std::size_t l = 0, r = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

std::optional<SquareOccurrence> oracle_square(std::span<const Letter> w, std::size_t max_half) {
    const std::size_t n = w.size();
    const std::size_t top = std::min(n / 2, max_half);
    for (std::size_t half = 1; half <= top; ++half) {
        for (std::size_t start = 0; start + 2 * half <= n; ++start) {
            if (std::equal(w.begin() + start, w.begin() + start + half, w.begin() + start + half)) {
                return SquareOccurrence{start, half};
            }
        }
    }
    return std::nullopt;
}

// Main-Lorentz: a square either lies in one half of [lo, hi) or crosses the
// midpoint m. Crossing squares of half length L are detected in O(1) each from
// four Z-arrays; the recursion gives O(n log n) overall.
std::optional<SquareOccurrence> crossing_square(std::span<const Letter> w, std::size_t lo, std::size_t hi,
                                                std::size_t max_half) {
    const std::size_t m = lo + (hi - lo) / 2;
    const std::size_t nu = m - lo;
    const std::size_t nv = hi - m;

    std::vector<int> u_rev, v, buf;
    u_rev.reserve(nu);
    for (std::size_t i = m; i > lo; --i) u_rev.push_back(w[i - 1]);
    v.assign(w.begin() + m, w.begin() + hi);

    // lcs(u, v[0..L)) = lcp(rev(u), rev(v) from nv-L)
    buf = u_rev;
    buf.push_back(kSeparator);
    for (std::size_t i = hi; i > m; --i) buf.push_back(w[i - 1]);
    const auto z_urev_vrev = z_function(buf);

    // lcp(u from nu-L, v)
    buf = v;
    buf.push_back(kSeparator);
    buf.insert(buf.end(), w.begin() + lo, w.begin() + m);
    const auto z_v_u = z_function(buf);

    const auto z_v = z_function(v);
    const auto z_urev = z_function(u_rev);

    // Midpoint m-1 in the first half: pivot pair (m-1, m-1+L).
    for (std::size_t L = 1; L <= std::min(nv, max_half); ++L) {
        const std::size_t back = std::min(z_urev_vrev[nu + 1 + (nv - L)], L);
        if (back == 0) continue;
        const std::size_t fwd = L < nv ? std::min(z_v[L], L) : 0;
        if (back + fwd >= L && m - back + 2 * L <= hi) return SquareOccurrence{m - back, L};
    }
    // Midpoint m in the second half: pivot pair (m-L, m).
    for (std::size_t L = 1; L <= std::min(nu, max_half); ++L) {
        const std::size_t fwd = std::min(z_v_u[nv + 1 + (nu - L)], L);
        if (fwd == 0) continue;
        const std::size_t back = L < nu ? std::min(z_urev[L], L - 1) : 0;
        if (back + fwd >= L) return SquareOccurrence{m - L - back, L};
    }
    return std::nullopt;
}

std::optional<SquareOccurrence> fast_square(std::span<const Letter> w, std::size_t lo, std::size_t hi,
                                            std::size_t max_half) {
    if (hi - lo < 2) return std::nullopt;
    if (auto occ = crossing_square(w, lo, hi, max_half)) return occ;
    const std::size_t m = lo + (hi - lo) / 2;
    if (auto occ = fast_square(w, lo, m, max_half)) return occ;
    return fast_square(w, m, hi, max_half);
}

}  // namespace

std::optional<SquareOccurrence> find_square(std::span<const Letter> w, Detector detector, std::size_t max_half) {
    if (max_half == 0) return std::nullopt;
    if (detector == Detector::Oracle) return oracle_square(w, max_half);
    return fast_square(w, 0, w.size(), max_half);
}

bool is_valid_square(std::span<const Letter> w, const SquareOccurrence& occ) {
    if (occ.half == 0 || occ.start + 2 * occ.half > w.size()) return false;
    return std::equal(w.begin() + occ.start, w.begin() + occ.start + occ.half, w.begin() + occ.start + occ.half);
}

std::optional<SquareOccurrence> square_through(std::span<const Letter> w, std::size_t pos, bool cyclic) {
    const std::size_t n = w.size();
    if (pos >= n) return std::nullopt;
    auto at = [&](std::size_t i) { return w[cyclic ? i % n : i - n]; };
    // Index arithmetic shifted by n so cyclic reads never go negative.
    const std::size_t base = n + pos;

    for (std::size_t L = 1; 2 * L <= n; ++L) {
        // pos in the first half: pivot pair (pos, pos + L).
        if (cyclic || pos + L < n) {
            std::size_t back = 0;
            while (back < L && (cyclic || back <= pos) && at(base - back) == at(base + L - back)) ++back;
            if (back > 0) {
                std::size_t fwd = 0;
                while (back + fwd < L && (cyclic || pos + L + fwd + 1 < n) &&
                       at(base + fwd + 1) == at(base + L + fwd + 1))
                    ++fwd;
                if (back + fwd >= L) return SquareOccurrence{(base - back + 1) % n, L};
            }
        }
        // pos in the second half: pivot pair (pos - L, pos).
        if (cyclic || pos >= L) {
            std::size_t fwd = 0;
            while (fwd < L && (cyclic || pos + fwd < n) && at(base - L + fwd) == at(base + fwd)) ++fwd;
            if (fwd > 0) {
                std::size_t back = 0;
                while (back + fwd < L && back + 1 < L && (cyclic || pos >= L + back + 1) &&
                       at(base - L - back - 1) == at(base - back - 1))
                    ++back;
                if (back + fwd >= L) return SquareOccurrence{(base - L - back) % n, L};
            }
        }
    }
    return std::nullopt;
}

std::optional<SquareOccurrence> suffix_square_from(std::span<const Letter> w, std::size_t bound) {
    const std::size_t n = w.size();
    for (std::size_t L = 1; 2 * L <= n; ++L) {
        const std::size_t start = n - 2 * L;
        if (start > bound) continue;
        if (std::equal(w.begin() + start + L, w.end(), w.begin() + start)) return SquareOccurrence{start, L};
    }
    return std::nullopt;
}

std::optional<SquareOccurrence> suffix_square(std::span<const Letter> w) {
    const std::size_t n = w.size();
    for (std::size_t L = 1; 2 * L <= n; ++L) {
        // Compare from the end: mismatches near the last letter are the common case.
        bool eq = true;
        for (std::size_t t = 1; t <= L; ++t) {
            if (w[n - t] != w[n - L - t]) {
                eq = false;
                break;
            }
        }
        if (eq) return SquareOccurrence{n - 2 * L, L};
    }
    return std::nullopt;
}

}  // namespace sqf
