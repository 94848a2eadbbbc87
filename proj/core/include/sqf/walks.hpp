#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqf/substitution.hpp"
#include "sqf/word.hpp"

namespace sqf {

/// Vertex of D: a permutation of {a,b,c}, possibly mirrored. Letter ids are
/// perm id for plain vertices and 6 + perm id for mirrored ones.
struct VDLetter {
    Perm perm;
    bool mirrored = false;

    static constexpr int kCount = 12;

    Letter id() const noexcept { return static_cast<Letter>(perm.id() + (mirrored ? 6 : 0)); }
    static VDLetter from_id(Letter id);
    VDLetter mirror() const noexcept { return {perm, !mirrored}; }
    /// Cycle notation with '~' after the opening parenthesis for mirrored letters.
    std::string str() const;

    friend bool operator==(const VDLetter&, const VDLetter&) = default;
};

enum class CapKind : std::uint8_t { Core, Prefix, Suffix };

/// Vertex of D-hat: ids 0..11 core, 12 + x for p_x, 24 + x for s_x.
struct HatVertex {
    CapKind kind = CapKind::Core;
    VDLetter base;

    static constexpr int kCount = 36;

    Letter id() const noexcept;
    static HatVertex from_id(Letter id);
    std::string str() const;
};

inline Alphabet vd_alphabet() { return Alphabet::latin(VDLetter::kCount); }
inline Alphabet hat_alphabet() { return Alphabet::latin(HatVertex::kCount); }

class Digraph {
public:
    explicit Digraph(int vertices) : out_(static_cast<std::size_t>(vertices), 0) {}

    int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
    void add_arc(Letter from, Letter to) { out_.at(from) |= std::uint64_t{1} << to; }
    bool has_arc(Letter from, Letter to) const { return (out_.at(from) >> to) & 1U; }
    std::vector<Letter> successors(Letter v) const;
    std::vector<std::pair<Letter, Letter>> arcs() const;
    int out_degree(Letter v) const;
    int in_degree(Letter v) const;

private:
    std::vector<std::uint64_t> out_;
};

/// The 12-vertex digraph on which square-free walks map to nearly extremal words.
const Digraph& digraph_D();
/// D plus the cap vertices p_x -> x and x -> s_x.
const Digraph& digraph_hatD();

/// Throw UnknownVertex when a letter is not a vertex of `g`.
bool is_walk(const Digraph& g, std::span<const Letter> w);
bool is_circular_walk(const Digraph& g, std::span<const Letter> w);

/// Comma-separated vertex tokens, e.g. "(),(~ab),(acb)"; caps print as p_(ab).
std::string format_walk(std::span<const Letter> w, bool hat = false);
/// Parses the format above; the word is over the D-hat alphabet when any cap
/// token occurs or `hat` is set. Throws UnknownVertex.
Word parse_walk(std::string_view text, bool hat = false);

/// Square-free walks of 1..max_len vertices in `g`, shortlex by vertex id.
std::vector<Word> square_free_walks(const Digraph& g, std::size_t max_len);

/// Prefix of the fixed point of a -> abc, b -> ac, c -> b.
Word thue_ternary(std::size_t length);

/// {0,1,2} -> subsets of V(D)*: two 6-letter images and, for 2, an extra
/// 8-letter one. Every image starts at ().
const Substitution& h_substitution();

/// Square-free walk in D with `length` vertices: h applied to a Thue prefix,
/// truncated. Verified before returning.
Word square_free_walk(std::size_t length);

struct SearchLimits {
    std::uint64_t seed = 0;
    std::uint64_t budget = 200'000'000;  // DFS nodes across all restarts
};

/// Ternary word whose circular word is square-free. Lengths up to 24 are
/// settled by exhaustive search (NoSuchWord for 5, 7, 9, 10, 14, 17); longer
/// ones by seeded randomized backtracking with restarts.
Word circular_square_free_ternary(std::size_t m, const SearchLimits& limits = {});

/// Square-free, circularly walkable word in D of even length n >= 2.
/// n >= 108 goes through h and a circular square-free ternary word; shorter
/// lengths are searched. Throws BadN for odd or too small n.
Word even_walkable_circular(std::size_t n, const SearchLimits& limits = {});

/// Search for a square-free circularly walkable word of any length n >= 1 in D.
std::optional<Word> search_walkable_circular(std::size_t n, std::uint64_t budget = 50'000'000);

}  // namespace sqf
