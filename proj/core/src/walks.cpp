#include "sqf/walks.hpp"

#include <algorithm>
#include <random>

#include "sqf/circular.hpp"
#include "sqf/error.hpp"
#include "sqf/squares.hpp"

namespace sqf {

VDLetter VDLetter::from_id(Letter id) {
    if (id >= kCount) throw Error(Errc::UnknownVertex, "vertex id " + std::to_string(id) + " is not in D");
    return {Perm(id % 6), id >= 6};
}

std::string VDLetter::str() const {
    std::string c = perm.cycle();
    if (mirrored) c.insert(1, "~");
    return c;
}

Letter HatVertex::id() const noexcept {
    const int offset = kind == CapKind::Core ? 0 : kind == CapKind::Prefix ? 12 : 24;
    return static_cast<Letter>(offset + base.id());
}

HatVertex HatVertex::from_id(Letter id) {
    if (id >= kCount) throw Error(Errc::UnknownVertex, "vertex id " + std::to_string(id) + " is not in D-hat");
    const CapKind kind = id < 12 ? CapKind::Core : id < 24 ? CapKind::Prefix : CapKind::Suffix;
    return {kind, VDLetter::from_id(static_cast<Letter>(id % 12))};
}

std::string HatVertex::str() const {
    switch (kind) {
        case CapKind::Core: return base.str();
        case CapKind::Prefix: return "p_" + base.str();
        case CapKind::Suffix: return "s_" + base.str();
    }
    return {};
}

std::vector<Letter> Digraph::successors(Letter v) const {
    std::vector<Letter> out;
    for (int u = 0; u < vertex_count(); ++u) {
        if (has_arc(v, static_cast<Letter>(u))) out.push_back(static_cast<Letter>(u));
    }
    return out;
}

std::vector<std::pair<Letter, Letter>> Digraph::arcs() const {
    std::vector<std::pair<Letter, Letter>> out;
    for (int v = 0; v < vertex_count(); ++v) {
        for (Letter u : successors(static_cast<Letter>(v))) out.emplace_back(static_cast<Letter>(v), u);
    }
    return out;
}

int Digraph::out_degree(Letter v) const { return static_cast<int>(successors(v).size()); }

int Digraph::in_degree(Letter v) const {
    int d = 0;
    for (int u = 0; u < vertex_count(); ++u) d += has_arc(static_cast<Letter>(u), v) ? 1 : 0;
    return d;
}

namespace {

Digraph build_D() {
    Digraph g(VDLetter::kCount);
    // Outer arcs between plain and mirrored letters.
    const std::pair<Letter, Letter> single[] = {{0, 7}, {8, 0}, {1, 6},  {11, 1}, {6, 2}, {2, 10},
                                                {10, 3}, {3, 11}, {4, 8}, {9, 4},  {7, 5}, {5, 9}};
    for (auto [a, b] : single) g.add_arc(a, b);
    // Two-way arcs.
    const std::pair<Letter, Letter> both[] = {{0, 3}, {1, 4}, {2, 5}, {6, 9}, {7, 10}, {8, 11}};
    for (auto [a, b] : both) {
        g.add_arc(a, b);
        g.add_arc(b, a);
    }
    return g;
}

Digraph build_hatD() {
    Digraph g(HatVertex::kCount);
    for (auto [a, b] : digraph_D().arcs()) g.add_arc(a, b);
    for (Letter x = 0; x < VDLetter::kCount; ++x) {
        g.add_arc(static_cast<Letter>(12 + x), x);
        g.add_arc(x, static_cast<Letter>(24 + x));
    }
    return g;
}

void check_vertices(const Digraph& g, std::span<const Letter> w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= g.vertex_count()) throw Error(Errc::UnknownVertex, "letter is not a vertex", i);
    }
}

}  // namespace

const Digraph& digraph_D() {
    static const Digraph g = build_D();
    return g;
}

const Digraph& digraph_hatD() {
    static const Digraph g = build_hatD();
    return g;
}

bool is_walk(const Digraph& g, std::span<const Letter> w) {
    check_vertices(g, w);
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!g.has_arc(w[i - 1], w[i])) return false;
    }
    return true;
}

bool is_circular_walk(const Digraph& g, std::span<const Letter> w) {
    if (!is_walk(g, w)) return false;
    return w.empty() || g.has_arc(w.back(), w.front());
}

std::string format_walk(std::span<const Letter> w, bool hat) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += hat || w[i] >= VDLetter::kCount ? HatVertex::from_id(w[i]).str() : VDLetter::from_id(w[i]).str();
    }
    return out;
}

Word parse_walk(std::string_view text, bool hat) {
    std::vector<Letter> out;
    bool saw_cap = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        CapKind kind = CapKind::Core;
        if (tok.substr(0, 2) == "p_") kind = CapKind::Prefix;
        if (tok.substr(0, 2) == "s_") kind = CapKind::Suffix;
        if (kind != CapKind::Core) {
            tok.remove_prefix(2);
            saw_cap = true;
        }
        bool mirrored = false;
        std::string cycle(tok);
        if (cycle.size() >= 2 && cycle[1] == '~') {
            mirrored = true;
            cycle.erase(1, 1);
        }
        const Perm p = Perm::from_cycle(cycle);
        out.push_back(HatVertex{kind, VDLetter{p, mirrored}}.id());
        pos = end + 1;
    }
    return Word(std::move(out), hat || saw_cap ? hat_alphabet() : vd_alphabet());
}

std::vector<Word> square_free_walks(const Digraph& g, std::size_t max_len) {
    const Alphabet alpha = Alphabet::latin(g.vertex_count());
    std::vector<Word> out;
    std::vector<std::vector<Letter>> layer;
    for (int v = 0; v < g.vertex_count(); ++v) layer.push_back({static_cast<Letter>(v)});
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
        for (const auto& w : layer) out.emplace_back(w, alpha);
        std::vector<std::vector<Letter>> next;
        for (const auto& w : layer) {
            for (Letter u : g.successors(w.back())) {
                auto x = w;
                x.push_back(u);
                if (!suffix_square(x)) next.push_back(std::move(x));
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Word thue_ternary(std::size_t length) {
    std::vector<Letter> w{0};
    while (w.size() < length) {
        std::vector<Letter> next;
        next.reserve(w.size() * 3);
        for (Letter l : w) {
            if (l == 0) next.insert(next.end(), {0, 1, 2});
            else if (l == 1) next.insert(next.end(), {0, 2});
            else next.push_back(1);
        }
        w = std::move(next);
    }
    w.resize(length);
    return Word(std::move(w));
}

const Substitution& h_substitution() {
    static const Substitution h = [] {
        const Alphabet vd = vd_alphabet();
        std::vector<std::vector<Word>> images{
            {Word({0, 7, 5, 2, 10, 3}, vd)},
            {Word({0, 7, 10, 3, 11, 8}, vd)},
            {Word({0, 7, 5, 9, 4, 8}, vd), Word({0, 7, 5, 9, 4, 1, 4, 8}, vd)},
        };
        return Substitution(3, vd, std::move(images));
    }();
    return h;
}

Word square_free_walk(std::size_t length) {
    if (length == 0) return Word({}, vd_alphabet());
    const Word source = thue_ternary(length / 6 + 1);
    const Choices choices(source.size(), 0);
    Word walk = apply(h_substitution(), source, choices).factor(0, length);
    if (!is_walk(digraph_D(), walk.letters()) || !is_square_free(walk)) {
        throw Error(Errc::NoSuchWord, "square-free walk construction failed verification");
    }
    return walk;
}

namespace {

class CircularSearch {
public:
    CircularSearch(std::size_t n, std::mt19937_64* rng, std::uint64_t budget) : n_(n), rng_(rng), budget_(budget) {}

    std::optional<std::vector<Letter>> run() {
        w_.clear();
        if (dfs()) return w_;
        return std::nullopt;
    }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return nodes_ <= budget_; }

private:
    bool dfs() {
        if (++nodes_ > budget_) return false;
        if (w_.size() == n_) return is_circular_square_free(w_);
        Letter order[3] = {0, 1, 2};
        if (rng_) std::shuffle(order, order + 3, *rng_);
        for (Letter c : order) {
            if (w_.empty() && rng_ == nullptr && c != 0) continue;  // rotate/permute: first letter a
            w_.push_back(c);
            if (!suffix_square(w_) && dfs()) return true;
            w_.pop_back();
            if (nodes_ > budget_) return false;
        }
        return false;
    }

    std::size_t n_;
    std::mt19937_64* rng_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Letter> w_;
};

constexpr std::size_t kExhaustiveCircularLimit = 24;

}  // namespace

Word circular_square_free_ternary(std::size_t m, const SearchLimits& limits) {
    if (m == 0) throw Error(Errc::BadN, "circular word length must be positive");
    if (m <= kExhaustiveCircularLimit) {
        CircularSearch search(m, nullptr, limits.budget);
        if (auto w = search.run()) return Word(std::move(*w));
        if (!search.exhausted()) throw Error(Errc::SearchBudgetExceeded, "search budget exhausted");
        throw Error(Errc::NoSuchWord, "no square-free circular ternary word of length " + std::to_string(m));
    }
    // Restarts keep the search from grinding on a bad prefix; each one gets a
    // modest node allowance.
    const std::uint64_t per_restart = 200 * m + 10'000;
    std::uint64_t spent = 0;
    for (std::uint64_t restart = 0; spent < limits.budget; ++restart) {
        std::mt19937_64 rng(limits.seed * 0x9E3779B97F4A7C15ULL + restart);
        CircularSearch search(m, &rng, std::min(per_restart, limits.budget - spent));
        auto w = search.run();
        spent += search.nodes();
        if (w) {
            Word out(std::move(*w));
            if (!is_circular_square_free(out.letters(), Detector::Oracle)) {
                throw Error(Errc::NoSuchWord, "circular search produced an unverified word");
            }
            return out;
        }
    }
    throw Error(Errc::SearchBudgetExceeded, "circular square-free search budget exhausted for m=" + std::to_string(m));
}

std::optional<Word> search_walkable_circular(std::size_t n, std::uint64_t budget) {
    if (n == 0) return std::nullopt;
    const Digraph& g = digraph_D();
    std::vector<Letter> w;
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self) -> bool {
        if (++nodes > budget) return false;
        if (w.size() == n) {
            return g.has_arc(w.back(), w.front()) && is_circular_square_free(w);
        }
        for (Letter u : g.successors(w.back())) {
            w.push_back(u);
            if (!suffix_square(w) && self(self)) return true;
            w.pop_back();
            if (nodes > budget) return false;
        }
        return false;
    };
    for (Letter start = 0; start < VDLetter::kCount; ++start) {
        w.assign(1, start);
        if (dfs(dfs)) return Word(w, vd_alphabet());
        if (nodes > budget) break;
    }
    return std::nullopt;
}

Word even_walkable_circular(std::size_t n, const SearchLimits& limits) {
    if (n < 2 || n % 2 != 0) throw Error(Errc::BadN, "walkable circular length must be even and >= 2");
    Word out;
    if (n >= 108) {
        std::size_t r = 0;
        while ((n - r) % 6 != 0 || (n - r) / 6 < 18) r += 2;
        const std::size_t m = (n - r) / 6;
        const Word u = circular_square_free_ternary(m, limits);
        Choices choices(u.size(), 0);
        std::size_t long_images = r / 2;
        for (std::size_t i = 0; i < u.size() && long_images > 0; ++i) {
            if (u[i] == 2) {
                choices[i] = 1;
                --long_images;
            }
        }
        if (long_images > 0) throw Error(Errc::NoSuchWord, "circular ternary word has too few 2s");
        out = apply(h_substitution(), u, choices);
    } else {
        auto found = search_walkable_circular(n, limits.budget);
        if (!found) throw Error(Errc::SearchBudgetExceeded, "no walkable circular word found for n=" + std::to_string(n));
        out = std::move(*found);
    }
    if (out.size() != n || !is_circular_walk(digraph_D(), out.letters()) || !is_circular_square_free(out.letters())) {
        throw Error(Errc::NoSuchWord, "walkable circular construction failed verification");
    }
    return out;
}

}  // namespace sqf
