#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqf/word.hpp"

namespace sqf {

struct PostagePart {
    int length = 0;
    long count = 0;
};

/// Counts per part length. Parts keep the order they were given in.
struct PostagePlan {
    std::vector<PostagePart> parts;
    long total = 0;
    long parity_sum = 0;

    long count(int length) const;
};

/// Nonnegative (a, b) with n = a*p + b*q and b minimal, or none. Throws BadN
/// unless p, q >= 1 and gcd(p, q) = 1.
std::optional<std::pair<long, long>> postage(long n, long p, long q);

/// A plan over `parts` with an even number of parts in total. Among all
/// plans, the count of the largest part is minimized first, then the next
/// largest, and so on. Throws BadN for an empty or non-positive part list.
std::optional<PostagePlan> postage_even(long n, std::span<const int> parts);

/// Same tie-break without the parity condition and with at least `min_count` parts.
std::optional<PostagePlan> postage_any(long n, std::span<const int> parts, long min_count = 0);

/// Membership in the lengths admitting an extremal square-free word.
bool in_linear_spectrum(long n);
/// Membership in the lengths admitting an extremal square-free circular word.
bool in_circular_spectrum(long n);

enum class Method { Pipeline, Search, CatalogSmall };
const char* method_name(Method m);

struct ConstructOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000'000;  // search nodes over all attempts
};

struct ConstructionResult {
    Word word;  // circular results hold the least rotation
    bool circular = false;
    std::size_t length = 0;
    Method method = Method::Search;
    std::optional<PostagePlan> plan;
    std::optional<Word> walk;  // over the D-hat alphabet (linear) or D (circular)
    bool verified = false;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;
};

/// Throws NotInSpectrum, or SearchBudgetExceeded when every search attempt
/// ran out of nodes.
ConstructionResult construct_extremal(long n, const ConstructOptions& options = {});
ConstructionResult construct_extremal_circular(long n, const ConstructOptions& options = {});

struct SearchStats {
    std::uint64_t nodes = 0;
    bool exhaustive = false;  // the search space was covered; a miss proves nonexistence
};

/// Backtracking over square-free words of length n with seeded branch order.
/// Linear mode follows every insertion and cuts a branch as soon as one of
/// them can no longer be hit by a square, so a miss with `exhaustive` set is a
/// proof. Circular mode is exact up to length kCircularExactSearch and
/// heuristic above it.
std::optional<Word> search_extremal(std::size_t n, bool circular, std::uint64_t seed, std::uint64_t budget,
                                    SearchStats* stats = nullptr);

inline constexpr std::size_t kCircularExactSearch = 46;

struct Spectrum {
    long max_n = 0;
    bool circular = false;
    std::vector<long> admissible;
    std::map<long, Word> witnesses;  // first hit of a lexicographic search from ab
    bool exhaustive = false;
};

struct SpectrumOptions {
    bool force = false;
    unsigned jobs = 1;
};

inline constexpr long kLinearSpectrumGuard = 60;
inline constexpr long kCircularSpectrumGuard = 45;

/// Exhaustive decision for every length 0..max_n. Throws BudgetRefused above
/// the guard unless forced.
Spectrum spectrum(long max_n, bool circular, const SpectrumOptions& options = {});

/// Runtime certificate for the linear pipeline widened with Q' and R' blocks:
/// cap products with every core image, PQ'/PR' left and Q'S/R'S right
/// extremal, and the substitution conditions over D-hat. Cached.
struct ExtendedPipelineCheck {
    bool passed = false;
    std::vector<std::string> failures;
};
const ExtendedPipelineCheck& extended_pipeline_check();

}  // namespace sqf
