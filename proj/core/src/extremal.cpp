#include "sqf/extremal.hpp"

#include <algorithm>

#include "sqf/error.hpp"

namespace sqf {

namespace {

Word insert_letter(const Word& w, std::size_t pos, Letter a) {
    std::vector<Letter> out;
    out.reserve(w.size() + 1);
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    out.push_back(a);
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    return Word(std::move(out), w.alphabet());
}

void sort_unique(std::vector<Word>& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

// Calls visit(buffer, pos) for every insertion of every letter; the buffer
// holds w with the letter placed at pos. Moving the slot right by one is a
// single assignment. Stops early when visit returns false.
template <typename Visit>
bool for_each_insertion(std::span<const Letter> w, int alphabet, Visit&& visit) {
    std::vector<Letter> buf(w.size() + 1);
    std::copy(w.begin(), w.end(), buf.begin() + 1);
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        if (pos > 0) buf[pos - 1] = w[pos - 1];
        for (int a = 0; a < alphabet; ++a) {
            buf[pos] = static_cast<Letter>(a);
            if (!visit(std::span<const Letter>(buf), pos)) return false;
        }
    }
    return true;
}

bool is_right_form(const Word& ext, const Word& w) {
    return std::equal(w.begin(), w.end(), ext.begin());
}

bool is_left_form(const Word& ext, const Word& w) {
    return std::equal(w.begin(), w.end(), ext.begin() + 1);
}

}  // namespace

std::vector<Word> extensions(const Word& w) {
    std::vector<Word> out;
    out.reserve((w.size() + 1) * static_cast<std::size_t>(w.alphabet().size));
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        for (int a = 0; a < w.alphabet().size; ++a) out.push_back(insert_letter(w, pos, static_cast<Letter>(a)));
    }
    sort_unique(out);
    return out;
}

std::vector<Word> square_free_extensions(const Word& w, Detector detector) {
    std::vector<Word> out;
    const bool local = detector == Detector::Fast && is_square_free(w, detector);
    for_each_insertion(w.letters(), w.alphabet().size, [&](std::span<const Letter> u, std::size_t pos) {
        const bool has_square = local ? square_through(u, pos).has_value() : find_square(u, detector).has_value();
        if (!has_square) out.emplace_back(std::vector<Letter>(u.begin(), u.end()), w.alphabet());
        return true;
    });
    sort_unique(out);
    return out;
}

ExtremalReport analyze(const Word& w, Detector detector) {
    ExtremalReport r;
    r.square_free = is_square_free(w, detector);
    r.square_free_extensions = square_free_extensions(w, detector);
    if (!r.square_free) return r;
    const auto& ext = r.square_free_extensions;
    r.extremal = ext.empty();
    r.left_extremal = std::all_of(ext.begin(), ext.end(), [&](const Word& e) { return is_right_form(e, w); });
    r.right_extremal = std::all_of(ext.begin(), ext.end(), [&](const Word& e) { return is_left_form(e, w); });
    if (ext.size() == 2) {
        const bool a = is_left_form(ext[0], w) && is_right_form(ext[1], w);
        const bool b = is_right_form(ext[0], w) && is_left_form(ext[1], w);
        r.nearly_extremal = a || b;
    }
    return r;
}

bool is_extremal(const Word& w, Detector detector) {
    if (!is_square_free(w, detector)) return false;
    return for_each_insertion(w.letters(), w.alphabet().size, [&](std::span<const Letter> u, std::size_t pos) {
        if (detector == Detector::Fast) return square_through(u, pos).has_value();
        return find_square(u, Detector::Oracle).has_value();
    });
}

bool is_nearly_extremal(const Word& w, Detector detector) { return analyze(w, detector).nearly_extremal; }

bool is_directional_extremal(const Word& w, Side side, Detector detector) {
    const ExtremalReport r = analyze(w, detector);
    return side == Side::Left ? r.left_extremal : r.right_extremal;
}

std::vector<CircularWord> circular_extensions(const CircularWord& cw) {
    const Word& w = cw.representative();
    std::vector<CircularWord> out;
    for (const Word& e : extensions(w)) out.emplace_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_extremal_circular(std::span<const Letter> w, int alphabet, Detector detector) {
    if (!is_circular_square_free(w, detector)) return false;
    // Inserting before index 0 and after the last letter give the same
    // circular word, so positions 0..n-1 cover every extension.
    std::vector<Letter> buf(w.size() + 1);
    std::copy(w.begin(), w.end(), buf.begin() + 1);
    const std::size_t slots = std::max<std::size_t>(w.size(), 1);
    for (std::size_t pos = 0; pos < slots; ++pos) {
        if (pos > 0) buf[pos - 1] = w[pos - 1];
        for (int a = 0; a < alphabet; ++a) {
            buf[pos] = static_cast<Letter>(a);
            const bool has_square = detector == Detector::Fast ? square_through(buf, pos, true).has_value()
                                                               : find_circular_square(buf, Detector::Oracle).has_value();
            if (!has_square) return false;
        }
    }
    return true;
}

bool is_extremal_circular(const CircularWord& cw, Detector detector) {
    const Word& w = cw.representative();
    return is_extremal_circular(w.letters(), w.alphabet().size, detector);
}

bool is_irreducibly_square_free(const Word& w) {
    if (w.size() < 3) throw Error(Errc::TooShort, "irreducibility needs at least 3 letters");
    if (!is_square_free(w)) return false;
    std::vector<Letter> buf;
    for (std::size_t drop = 1; drop + 1 < w.size(); ++drop) {
        buf.assign(w.begin(), w.end());
        buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(drop));
        if (is_square_free(buf)) return false;
    }
    return true;
}

Word irreducible_witness(int n) {
    if (n < 4 || n > kMaxAlphabet) throw Error(Errc::BadN, "irreducible witness needs 4 <= n <= 36");
    // Letter id k-1 renders as digit k.
    const Letter one = 0, two = 1;
    std::vector<Letter> out{one, two, one};
    for (int k = 3; k <= n; ++k) {
        const auto kk = static_cast<Letter>(k - 1);
        out.insert(out.end(), {kk, two, kk, one, two, one});
    }
    return Word(std::move(out), Alphabet::digits(n));
}

}  // namespace sqf
