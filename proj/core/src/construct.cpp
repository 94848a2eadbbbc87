#include "sqf/construct.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "kill_search.hpp"
#include "sqf/catalog.hpp"
#include "sqf/circular.hpp"
#include "sqf/error.hpp"
#include "sqf/extremal.hpp"
#include "sqf/walks.hpp"

namespace sqf {

namespace {

constexpr std::array<int, 2> kLinearParts{41, 52};
constexpr std::array<int, 4> kWideParts{41, 52, 61, 64};
constexpr long kCapLength = 49;
constexpr long kLinearPipelineMin = 2138;
constexpr long kCircularPipelineMin = 470;
constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

// Circular lengths where a free search comes first; longer ones go straight
// to a searched gap between pipeline blocks.
constexpr long kCircularPlainSearchMax = 110;
constexpr std::uint64_t kAttemptBudget = 200'000;
constexpr std::size_t kGapContext = 140;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t attempt) {
    return seed * 0x9E3779B97F4A7C15ULL + attempt;
}

class Clock {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Lexicographically least count vector read from the largest part down. A
// count of part i >= 1 never needs to reach 2 * smallest part: trading that
// many copies for copies of the smallest part keeps the sum, the parity and
// the lower bound on the number of parts.
std::optional<PostagePlan> decompose(long n, std::span<const int> parts, bool even, long min_count) {
    if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](int p) { return p <= 0; })) {
        throw Error(Errc::BadN, "postage parts must be positive");
    }
    if (n < 0) return std::nullopt;
    std::vector<int> sizes(parts.begin(), parts.end());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    const long smallest = sizes.front();
    const long bound = 2 * smallest;
    std::vector<long> counts(sizes.size(), 0);

    auto search = [&](auto&& self, std::size_t i, long rest, long used) -> bool {
        if (i == 0) {
            if (rest % smallest != 0) return false;
            const long c = rest / smallest;
            if (even && (used + c) % 2 != 0) return false;
            if (used + c < min_count) return false;
            counts[0] = c;
            return true;
        }
        for (long c = 0; c < bound && c * sizes[i] <= rest; ++c) {
            counts[i] = c;
            if (self(self, i - 1, rest - c * sizes[i], used + c)) return true;
        }
        return false;
    };
    if (!search(search, sizes.size() - 1, n, 0)) return std::nullopt;

    PostagePlan plan;
    plan.total = n;
    for (int p : parts) {
        if (std::any_of(plan.parts.begin(), plan.parts.end(), [&](const PostagePart& q) { return q.length == p; })) {
            continue;
        }
        const auto it = std::find(sizes.begin(), sizes.end(), p);
        const long c = counts[static_cast<std::size_t>(it - sizes.begin())];
        plan.parts.push_back({p, c});
        plan.parity_sum += c;
    }
    return plan;
}

bool in_set(long n, std::initializer_list<long> small, long tail_from) {
    return n >= tail_from || std::find(small.begin(), small.end(), n) != small.end();
}

// Image index inside a core image list, in plan order Q, R, Q', R'.
Choices positional_choices(const PostagePlan& plan, std::size_t leading, std::size_t trailing) {
    Choices choices(leading, 0);
    for (std::size_t idx = 0; idx < plan.parts.size(); ++idx) {
        choices.insert(choices.end(), static_cast<std::size_t>(plan.parts[idx].count), idx);
    }
    choices.insert(choices.end(), trailing, 0);
    return choices;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

// p_x W s_y over D-hat for a square-free walk W in D.
Word capped_walk(const Word& walk) {
    std::vector<Letter> hat;
    hat.push_back(static_cast<Letter>(12 + walk[0]));
    hat.insert(hat.end(), walk.begin(), walk.end());
    hat.push_back(static_cast<Letter>(24 + walk[walk.size() - 1]));
    return Word(std::move(hat), hat_alphabet());
}

std::optional<ConstructionResult> linear_pipeline(long n, const Substitution& sub, const PostagePlan& plan) {
    const auto blocks = static_cast<std::size_t>(plan.parity_sum);
    if (blocks < 1) return std::nullopt;
    const Word walk = square_free_walk(blocks);
    const Word hat = capped_walk(walk);
    const Choices choices = positional_choices(plan, 1, 1);
    Word word = apply(sub, hat, choices);

    require(static_cast<long>(word.size()) == n, "pipeline length accounting");
    const Word& head = sub.images(hat[0])[0];
    const Word& tail = sub.images(hat[hat.size() - 1])[0];
    require(std::equal(head.begin(), head.end(), word.begin()), "pipeline prefix cap");
    require(std::equal(tail.begin(), tail.end(), word.end() - static_cast<std::ptrdiff_t>(tail.size())),
            "pipeline suffix cap");

    if (!is_extremal(word)) return std::nullopt;
    ConstructionResult r;
    r.word = std::move(word);
    r.length = static_cast<std::size_t>(n);
    r.method = Method::Pipeline;
    r.plan = plan;
    r.walk = hat;
    r.verified = true;
    return r;
}

std::optional<ConstructionResult> circular_pipeline(long n, const PostagePlan& plan, const ConstructOptions& options) {
    const auto blocks = static_cast<std::size_t>(plan.parity_sum);
    if (blocks < 2) return std::nullopt;
    const Word cw = even_walkable_circular(blocks, {options.seed, options.budget});
    const Choices choices = positional_choices(plan, 0, 0);
    const Word word = apply(delta_prime(), cw, choices);
    require(static_cast<long>(word.size()) == n, "circular pipeline length accounting");

    if (!is_extremal_circular(word.letters())) return std::nullopt;
    ConstructionResult r;
    r.word = canonical_rotation(word);
    r.circular = true;
    r.length = static_cast<std::size_t>(n);
    r.method = Method::Pipeline;
    r.plan = plan;
    r.walk = cw;
    r.verified = true;
    return r;
}

std::vector<int> forced_prefix(std::size_t n) {
    std::vector<int> forced(n, -1);
    if (n >= 1) forced[0] = 0;
    if (n >= 2) forced[1] = 1;
    return forced;
}

bool circular_extremal(std::span<const Letter> w) {
    return is_circular_square_free(w) && is_extremal_circular(w);
}

detail::KillSearchResult run_search(std::size_t n, bool circular, bool exact, bool shuffle, std::uint64_t seed,
                                    std::uint64_t budget) {
    detail::KillSearchConfig c;
    c.length = n;
    c.shuffle = shuffle;
    c.seed = seed;
    c.budget = budget;
    // Letter permutations preserve extremality and rotations preserve the
    // circular word, so the first two letters may be fixed to ab.
    c.forced = forced_prefix(n);
    if (!circular) {
        c.track_lo = 0;
        c.track_hi = n;
    } else if (exact) {
        c.track_lo = 1;
        c.track_hi = 0;
        c.accept = circular_extremal;
    } else {
        // Squares that cross the end of the representative are invisible to
        // the linear prune, so only slots away from both ends are followed.
        c.track_lo = 4;
        c.track_hi = n - 4;
        c.accept = circular_extremal;
    }
    return detail::kill_search(c);
}

// A word with one searched gap. Linear frames read head + gap + tail; circular
// frames close head + gap into a circle.
struct Frame {
    Word head;
    Word tail;
    std::size_t gap = 0;
    std::optional<PostagePlan> plan;
    std::optional<Word> walk;
    bool dead = false;  // searched to completion without a hit
};

// Searches the gap inside a window made of the last letters before it, the
// gap and the first letters after it. Insertions are followed inside the gap
// and, when the window reaches an end of a linear word, up to that end. The
// assembled word is verified before it is accepted.
std::optional<Word> fill_frame(Frame& f, bool circular, std::uint64_t seed, std::uint64_t budget,
                               std::uint64_t& nodes) {
    const Word& after = circular ? f.head : f.tail;
    const std::size_t left = circular ? std::min(f.head.size() / 2, kGapContext) : std::min(f.head.size(), kGapContext);
    const std::size_t right = circular ? std::min(f.head.size() - left, kGapContext) : std::min(f.tail.size(), kGapContext);

    detail::KillSearchConfig c;
    c.length = left + f.gap + right;
    c.forced.assign(c.length, -1);
    for (std::size_t i = 0; i < left; ++i) c.forced[i] = f.head[f.head.size() - left + i];
    for (std::size_t i = 0; i < right; ++i) c.forced[left + f.gap + i] = after[i];
    if (!circular && f.head.empty() && c.length >= 2) {
        c.forced[0] = 0;
        c.forced[1] = 1;
    }
    c.track_lo = !circular && left == f.head.size() ? 0 : left;
    c.track_hi = !circular && right == f.tail.size() ? c.length : left + f.gap;
    c.seed = seed;
    c.budget = budget;

    std::optional<Word> result;
    c.accept = [&](std::span<const Letter> window) {
        std::vector<Letter> full(f.head.begin(), f.head.end());
        const auto gap = window.subspan(left, f.gap);
        full.insert(full.end(), gap.begin(), gap.end());
        if (!circular) full.insert(full.end(), f.tail.begin(), f.tail.end());
        if (circular ? !circular_extremal(full) : !is_extremal(Word(full))) return false;
        result = Word(std::move(full));
        return true;
    };
    const detail::KillSearchResult r = detail::kill_search(c);
    nodes += r.nodes;
    f.dead = r.completed;
    return result;
}

Word walk_variant(std::size_t length, std::uint64_t round) {
    return square_free_walk(length + round).factor(round, length);
}

// Frames with pipeline blocks around the gap, for gaps kMinGap..kMaxGap.
constexpr std::size_t kMinGap = 0;
constexpr std::size_t kMaxGap = 80;

std::vector<Frame> linear_frames(long n, std::uint64_t round) {
    const bool wide = extended_pipeline_check().passed;
    const Substitution sub = wide ? delta_extended() : delta();
    const std::span<const int> parts = wide ? std::span<const int>(kWideParts) : std::span<const int>(kLinearParts);
    std::vector<Frame> frames;
    const long inner = n - 2 * kCapLength;
    for (std::size_t gap = kMinGap; inner >= 0 && gap <= kMaxGap && static_cast<long>(gap) <= inner; ++gap) {
        const long rest = inner - static_cast<long>(gap);
        if (rest == 0) {
            // Bare caps: every pair of cap letters.
            for (Letter x = 0; x < VDLetter::kCount; ++x) {
                for (Letter y = 0; y < VDLetter::kCount; ++y) {
                    Frame f;
                    f.head = sub.images(static_cast<Letter>(12 + x))[0];
                    f.tail = sub.images(static_cast<Letter>(24 + y))[0];
                    f.gap = gap;
                    frames.push_back(std::move(f));
                }
            }
            continue;
        }
        const auto plan = postage_any(rest, parts, 1);
        if (!plan) continue;
        const Word hat = capped_walk(walk_variant(static_cast<std::size_t>(plan->parity_sum), round));
        const Choices choices = positional_choices(*plan, 1, 1);
        const std::size_t split = 1 + (hat.size() - 2) / 2;
        Frame f;
        f.head = apply(sub, hat.factor(0, split), std::span(choices).first(split));
        f.tail = apply(sub, hat.factor(split, hat.size() - split), std::span(choices).subspan(split));
        f.gap = gap;
        f.plan = plan;
        f.walk = hat;
        frames.push_back(std::move(f));
    }
    // A prefix cap alone, the rest free.
    const long free_part = n - kCapLength;
    if (free_part > 0 && free_part <= static_cast<long>(kMaxGap)) {
        for (Letter x = 0; x < VDLetter::kCount; ++x) {
            Frame f;
            f.head = delta().images(static_cast<Letter>(12 + x))[0];
            f.gap = static_cast<std::size_t>(free_part);
            frames.push_back(std::move(f));
        }
    }
    Frame plain;
    plain.gap = static_cast<std::size_t>(n);
    frames.push_back(std::move(plain));
    return frames;
}

std::vector<Frame> circular_frames(long n, std::uint64_t round) {
    const Substitution sub = delta_prime();
    std::vector<Frame> frames;
    for (std::size_t gap = kMinGap; gap <= kMaxGap && static_cast<long>(gap) < n; ++gap) {
        const auto plan = postage_any(n - static_cast<long>(gap), kWideParts, 1);
        if (!plan) continue;
        const Word walk = walk_variant(static_cast<std::size_t>(plan->parity_sum), round);
        Frame f;
        f.head = apply(sub, walk, positional_choices(*plan, 0, 0));
        f.gap = gap;
        f.plan = plan;
        f.walk = walk;
        frames.push_back(std::move(f));
    }
    return frames;
}

ConstructionResult search_result(Word word, bool circular, const Frame* frame) {
    ConstructionResult out;
    out.word = circular ? canonical_rotation(word) : std::move(word);
    out.circular = circular;
    out.length = out.word.size();
    out.method = Method::Search;
    if (frame) {
        out.plan = frame->plan;
        out.walk = frame->walk;
    }
    out.verified = circular ? is_extremal_circular(out.word.letters()) : is_extremal(out.word);
    require(out.verified, "search verification");
    return out;
}

// Round-robin over the frames with a fixed node allowance per attempt;
// frames searched to completion drop out. Block frames are rebuilt every
// round with another stretch of the walk.
template <typename MakeFrames>
std::optional<ConstructionResult> frame_search(long n, bool circular, MakeFrames&& make_frames,
                                               const ConstructOptions& options, std::uint64_t& nodes) {
    std::vector<Frame> frames = make_frames(n, 0);
    for (std::uint64_t round = 0; nodes < options.budget; ++round) {
        if (round > 0) {
            std::vector<Frame> fresh = make_frames(n, round);
            for (std::size_t i = 0; i < fresh.size() && i < frames.size(); ++i) {
                if (frames[i].dead && !frames[i].walk) fresh[i].dead = true;
            }
            frames = std::move(fresh);
        }
        bool any = false;
        for (Frame& f : frames) {
            if (f.dead || nodes >= options.budget) continue;
            any = true;
            const std::uint64_t budget = std::min(kAttemptBudget, options.budget - nodes);
            if (auto w = fill_frame(f, circular, mix_seed(options.seed, round), budget, nodes)) {
                return search_result(std::move(*w), circular, &f);
            }
        }
        if (!any) break;
    }
    return std::nullopt;
}

std::optional<ConstructionResult> plain_circular_search(long n, const ConstructOptions& options,
                                                        std::uint64_t& nodes) {
    const bool exact = static_cast<std::size_t>(n) <= kCircularExactSearch;
    for (std::uint64_t attempt = 0; nodes < options.budget; ++attempt) {
        const std::uint64_t budget = exact ? options.budget - nodes : std::min(kAttemptBudget, options.budget - nodes);
        const auto r = run_search(static_cast<std::size_t>(n), true, exact, true, mix_seed(options.seed, attempt), budget);
        nodes += r.nodes;
        if (r.word) return search_result(Word(*r.word), true, nullptr);
        if (r.completed && exact) break;
    }
    return std::nullopt;
}

[[noreturn]] void budget_exceeded(long n, bool circular) {
    throw Error(Errc::SearchBudgetExceeded,
                std::string("search budget exhausted for ") + (circular ? "circular " : "") + "length " +
                    std::to_string(n));
}

ConstructionResult finish(ConstructionResult r, const ConstructOptions& options, const Clock& clock) {
    r.seed = options.seed;
    r.elapsed_ms = clock.elapsed_ms();
    return r;
}

}  // namespace

long PostagePlan::count(int length) const {
    for (const PostagePart& p : parts) {
        if (p.length == length) return p.count;
    }
    return 0;
}

std::optional<std::pair<long, long>> postage(long n, long p, long q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw Error(Errc::BadN, "postage needs coprime positive parts");
    if (n < 0) return std::nullopt;
    for (long b = 0; b < p && b * q <= n; ++b) {
        if ((n - b * q) % p == 0) return std::pair{(n - b * q) / p, b};
    }
    return std::nullopt;
}

std::optional<PostagePlan> postage_even(long n, std::span<const int> parts) { return decompose(n, parts, true, 0); }

std::optional<PostagePlan> postage_any(long n, std::span<const int> parts, long min_count) {
    return decompose(n, parts, false, min_count);
}

bool in_linear_spectrum(long n) { return in_set(n, {25, 41, 48, 50, 63, 71, 72, 77, 79, 81, 83, 84, 85}, 87); }

bool in_circular_spectrum(long n) {
    return in_set(n, {4, 6, 8, 13, 15, 16, 18, 20, 21, 22, 23, 24, 28, 30, 32, 33, 34, 35, 36}, 38);
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Pipeline: return "pipeline";
        case Method::Search: return "search";
        case Method::CatalogSmall: return "catalogSmall";
    }
    return "?";
}

const ExtendedPipelineCheck& extended_pipeline_check() {
    static const ExtendedPipelineCheck check = [] {
        ExtendedPipelineCheck out;
        const Catalog& c = Catalog::pristine();
        using enum CatalogName;
        auto expect = [&](bool ok, std::string what) {
            if (!ok) out.failures.push_back(std::move(what));
        };
        for (CatalogName core : {QPrime, RPrime}) {
            const std::string label(catalog_label(core));
            expect(is_directional_extremal(c[P] + c[core], Side::Left), "P" + label + " left extremal");
            expect(is_directional_extremal(c[core] + c[S], Side::Right), label + "S right extremal");
        }
        const Substitution sub = delta_extended();
        for (Letter id = 0; id < VDLetter::kCount; ++id) {
            const Word& cap_p = sub.images(static_cast<Letter>(12 + id))[0];
            const Word& cap_s = sub.images(static_cast<Letter>(24 + id))[0];
            for (const Word& core : sub.images(id)) {
                expect(is_directional_extremal(cap_p + core, Side::Left), "cap p_x x left extremal");
                expect(is_directional_extremal(core + cap_s, Side::Right), "cap x s_x right extremal");
            }
        }
        const ConditionReport report =
            check_universal(sub, [] { return square_free_walks(digraph_hatD(), 3); });
        expect(report.passed(), "substitution conditions over D-hat");
        out.passed = out.failures.empty();
        return out;
    }();
    return check;
}

ConstructionResult construct_extremal(long n, const ConstructOptions& options) {
    const Clock clock;
    if (!in_linear_spectrum(n)) {
        throw Error(Errc::NotInSpectrum, "no extremal square-free word of length " + std::to_string(n));
    }
    if (n >= kLinearPipelineMin) {
        const auto ab = postage(n - 2 * kCapLength, 41, 52);
        require(ab.has_value(), "postage above the pipeline threshold");
        PostagePlan plan{{{41, ab->first}, {52, ab->second}}, n - 2 * kCapLength, ab->first + ab->second};
        auto r = linear_pipeline(n, delta(), plan);
        require(r.has_value(), "pipeline output failed verification");
        return finish(*r, options, clock);
    }
    if (extended_pipeline_check().passed) {
        if (auto plan = postage_any(n - 2 * kCapLength, kWideParts, 2)) {
            if (auto r = linear_pipeline(n, delta_extended(), *plan)) return finish(*r, options, clock);
        }
    }
    std::uint64_t nodes = 0;
    auto r = frame_search(n, false, linear_frames, options, nodes);
    if (!r) budget_exceeded(n, false);
    return finish(*r, options, clock);
}

ConstructionResult construct_extremal_circular(long n, const ConstructOptions& options) {
    const Clock clock;
    if (!in_circular_spectrum(n)) {
        throw Error(Errc::NotInSpectrum, "no extremal square-free circular word of length " + std::to_string(n));
    }
    if (auto plan = postage_even(n, kWideParts); plan && plan->parity_sum >= 2) {
        auto r = circular_pipeline(n, *plan, options);
        require(r.has_value() || n < kCircularPipelineMin, "circular pipeline output failed verification");
        if (r) return finish(*r, options, clock);
    }
    std::uint64_t nodes = 0;
    std::optional<ConstructionResult> r;
    if (n <= kCircularPlainSearchMax) {
        ConstructOptions first = options;
        first.budget = n <= static_cast<long>(kCircularExactSearch) ? options.budget : options.budget / 4;
        r = plain_circular_search(n, first, nodes);
    }
    if (!r) r = frame_search(n, true, circular_frames, options, nodes);
    if (!r) budget_exceeded(n, true);
    return finish(*r, options, clock);
}

std::optional<Word> search_extremal(std::size_t n, bool circular, std::uint64_t seed, std::uint64_t budget,
                                    SearchStats* stats) {
    const bool exact = n <= kCircularExactSearch;
    const auto r = run_search(n, circular, exact, true, seed, budget);
    if (stats) {
        stats->nodes = r.nodes;
        stats->exhaustive = r.completed && (!circular || n <= kCircularExactSearch);
    }
    if (!r.word) return std::nullopt;
    const Word w(*r.word);
    return circular ? canonical_rotation(w) : w;
}

Spectrum spectrum(long max_n, bool circular, const SpectrumOptions& options) {
    const long guard = circular ? kCircularSpectrumGuard : kLinearSpectrumGuard;
    if (max_n > guard && !options.force) {
        throw Error(Errc::BudgetRefused, "spectrum up to " + std::to_string(max_n) + " exceeds the guard of " +
                                             std::to_string(guard) + "; pass force to run it anyway");
    }
    Spectrum out;
    out.max_n = max_n;
    out.circular = circular;
    out.exhaustive = true;
    if (max_n < 0) return out;

    const auto count = static_cast<std::size_t>(max_n + 1);
    std::vector<std::optional<Word>> found(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t n = next++; n < count; n = next++) {
            // Lexicographic order, so the first hit is the least witness
            // starting with ab.
            const auto r = run_search(n, circular, true, false, 0, kUnlimited);
            if (r.word) found[n] = circular ? canonical_rotation(Word(*r.word)) : Word(*r.word);
        }
    };
    const unsigned jobs = std::max(1U, options.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t n = 0; n < count; ++n) {
        if (!found[n]) continue;
        out.admissible.push_back(static_cast<long>(n));
        out.witnesses.emplace(static_cast<long>(n), *found[n]);
    }
    return out;
}

}  // namespace sqf
