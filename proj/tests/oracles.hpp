#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Letter type so that agreement means something.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sqf/word.hpp"

namespace oracle {

using sqf::Letter;
using Letters = std::vector<Letter>;

inline Letters letters(const std::string& s) {
    Letters out;
    for (char c : s) out.push_back(static_cast<Letter>(c - 'a'));
    return out;
}

inline std::string text(const Letters& w) {
    std::string s;
    for (Letter l : w) s.push_back(static_cast<char>('a' + l));
    return s;
}

inline bool has_square(const Letters& w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t half = 1; i + 2 * half <= n; ++half) {
            if (std::equal(w.begin() + i, w.begin() + i + half, w.begin() + i + half)) return true;
        }
    }
    return false;
}

inline Letters rotation(const Letters& w, std::size_t k) {
    Letters out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

inline bool has_circular_square(const Letters& w) {
    for (std::size_t k = 0; k < std::max<std::size_t>(w.size(), 1); ++k) {
        if (has_square(rotation(w, k))) return true;
    }
    return false;
}

inline std::vector<Letters> insertions(const Letters& w, int alphabet = 3) {
    std::vector<Letters> out;
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (int a = 0; a < alphabet; ++a) {
            Letters e = w;
            e.insert(e.begin() + pos, static_cast<Letter>(a));
            out.push_back(e);
        }
    }
    return out;
}

inline std::set<Letters> square_free_extensions(const Letters& w) {
    std::set<Letters> out;
    for (const Letters& e : insertions(w)) {
        if (!has_square(e)) out.insert(e);
    }
    return out;
}

inline bool is_extremal(const Letters& w) { return !has_square(w) && square_free_extensions(w).empty(); }

inline bool is_extremal_circular(const Letters& w) {
    if (has_circular_square(w)) return false;
    for (const Letters& e : insertions(w)) {
        if (!has_circular_square(e)) return false;
    }
    return true;
}

inline bool is_nearly_extremal(const Letters& w) {
    if (has_square(w)) return false;
    const auto ext = square_free_extensions(w);
    if (ext.size() != 2) return false;
    bool prepend = false;
    bool append = false;
    for (const Letters& e : ext) {
        if (std::equal(w.begin(), w.end(), e.begin() + 1)) prepend = true;
        if (std::equal(w.begin(), w.end(), e.begin())) append = true;
    }
    return prepend && append;
}

inline Letters least_rotation(const Letters& w) {
    Letters best = w;
    for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, rotation(w, k));
    return best;
}

// Fixed point of a -> abc, b -> ac, c -> b by repeated substitution.
inline Letters thue(std::size_t length) {
    Letters w{0};
    while (w.size() < length) {
        Letters next;
        for (Letter l : w) {
            if (l == 0) next.insert(next.end(), {0, 1, 2});
            if (l == 1) next.insert(next.end(), {0, 2});
            if (l == 2) next.push_back(1);
        }
        w = next;
    }
    w.resize(length);
    return w;
}

inline Letters random_word(std::mt19937_64& rng, std::size_t n, int alphabet = 3) {
    Letters w(n);
    std::uniform_int_distribution<int> d(0, alphabet - 1);
    for (Letter& l : w) l = static_cast<Letter>(d(rng));
    return w;
}

// Random square-free word by greedy extension with backtracking on dead ends.
inline Letters random_square_free(std::mt19937_64& rng, std::size_t n) {
    Letters w;
    std::size_t guard = 0;
    while (w.size() < n && guard++ < 100 * n + 100) {
        Letters order{0, 1, 2};
        std::shuffle(order.begin(), order.end(), rng);
        bool grown = false;
        for (Letter a : order) {
            w.push_back(a);
            bool bad = false;
            for (std::size_t half = 1; 2 * half <= w.size() && !bad; ++half) {
                bad = std::equal(w.end() - half, w.end(), w.end() - 2 * half);
            }
            if (!bad) {
                grown = true;
                break;
            }
            w.pop_back();
        }
        if (!grown) w.resize(w.size() / 2);
    }
    return w;
}

}  // namespace oracle
