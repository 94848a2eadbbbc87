#include "sqf/circular.hpp"

#include <algorithm>

#include "sqf/error.hpp"

namespace sqf {

std::optional<SquareOccurrence> find_circular_square(std::span<const Letter> w, Detector detector) {
    const std::size_t n = w.size();
    if (n < 2) return std::nullopt;
    if (detector == Detector::Oracle) {
        std::vector<Letter> conj(n);
        for (std::size_t shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < n; ++i) conj[i] = w[(shift + i) % n];
            if (auto occ = find_square(conj, Detector::Oracle)) {
                return SquareOccurrence{(occ->start + shift) % n, occ->half};
            }
        }
        return std::nullopt;
    }
    std::vector<Letter> doubled(w.begin(), w.end());
    doubled.insert(doubled.end(), w.begin(), w.end());
    if (auto occ = find_square(doubled, Detector::Fast, n / 2)) {
        return SquareOccurrence{occ->start % n, occ->half};
    }
    return std::nullopt;
}

std::vector<Word> circumnavigations(const CircularWord& cw) {
    if (cw.empty()) throw Error(Errc::EmptyWord, "circumnavigations of the empty circular word");
    const Word& w = cw.representative();
    std::vector<Word> out;
    out.reserve(w.size());
    for (const Word& conj : conjugates(w)) {
        std::vector<Letter> letters = conj.vec();
        letters.push_back(conj[0]);
        out.emplace_back(std::move(letters), w.alphabet());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sqf
