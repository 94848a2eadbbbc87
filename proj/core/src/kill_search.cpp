#include "kill_search.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace sqf::detail {

namespace {

struct Insertion {
    std::uint32_t slot;
    Letter letter;
};

enum class Status { Open, Killed, Hopeless };

constexpr std::size_t kMaxLetters = 36;

class Searcher {
public:
    explicit Searcher(const KillSearchConfig& c) : c_(c), rng_(c.seed), alive_(c.length + 2) {
        prefix_.reserve(c.length);
        if (tracked(0)) {
            for (int a = 0; a < c_.alphabet; ++a) alive_[0].push_back({0, static_cast<Letter>(a)});
        }
    }

    KillSearchResult run() {
        KillSearchResult r;
        const bool found = dfs();
        r.nodes = nodes_;
        r.completed = !found && nodes_ <= c_.budget;
        if (found) r.word = prefix_;
        return r;
    }

private:
    bool tracked(std::size_t slot) const { return c_.track_lo <= slot && slot <= c_.track_hi; }

    // The prefix has k+1 letters once the insertion is counted; u is the
    // prefix with the inserted letter in place and k its last index.
    Status status(const Insertion& in) {
        const auto n = static_cast<long>(c_.length);
        const auto j = static_cast<long>(in.slot);
        const auto k = static_cast<long>(prefix_.size());
        scratch_.assign(prefix_.begin(), prefix_.end());
        scratch_.insert(scratch_.begin() + j, in.letter);
        const Letter* u = scratch_.data();
        bool open = j >= 2 * k + 3 - n;
        // Shorter halves cannot reach back to the slot.
        for (long half = std::max(1L, (k + 1 - j) / 2); 2 * half <= n + 1 && half <= k + 1; ++half) {
            long run = 0;
            for (long t = k - half; t >= 0 && run < half && u[t] == u[t + half]; --t) ++run;
            const long start = k - 2 * half + 1;
            if (run >= half && start >= 0 && start <= j) return Status::Killed;
            if (!open) {
                const long lo = std::max({k - half + 1 - run, k + 2 - 2 * half, 0L});
                const long hi = std::min({j, k + 1 - half, n + 1 - 2 * half});
                if (lo <= hi) open = true;
            }
        }
        return open ? Status::Open : Status::Hopeless;
    }

    bool suffix_square() const {
        const std::size_t k = prefix_.size();
        for (std::size_t half = 1; 2 * half <= k; ++half) {
            if (std::equal(prefix_.end() - static_cast<std::ptrdiff_t>(half), prefix_.end(),
                           prefix_.end() - static_cast<std::ptrdiff_t>(2 * half))) {
                return true;
            }
        }
        return false;
    }

    // Refreshes the insertions after a letter was appended; false when the
    // branch is dead.
    bool advance(std::size_t depth) {
        auto& next = alive_[depth + 1];
        next.clear();
        for (const Insertion& in : alive_[depth]) {
            const Status s = status(in);
            if (s == Status::Hopeless) return false;
            if (s == Status::Open) next.push_back(in);
        }
        if (tracked(depth + 1)) {
            for (int a = 0; a < c_.alphabet; ++a) {
                const Insertion in{static_cast<std::uint32_t>(depth + 1), static_cast<Letter>(a)};
                const Status s = status(in);
                if (s == Status::Hopeless) return false;
                if (s == Status::Open) next.push_back(in);
            }
        }
        return true;
    }

    bool dfs() {
        if (++nodes_ > c_.budget) return false;
        const std::size_t k = prefix_.size();
        if (k == c_.length) return alive_[k].empty() && (!c_.accept || c_.accept(prefix_));

        std::array<Letter, kMaxLetters> order{};
        std::size_t choices = 0;
        const int forced = c_.forced.empty() ? -1 : c_.forced[k];
        if (forced >= 0) {
            order[choices++] = static_cast<Letter>(forced);
        } else {
            for (int a = 0; a < c_.alphabet; ++a) order[choices++] = static_cast<Letter>(a);
            if (c_.shuffle) std::shuffle(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(choices), rng_);
        }
        for (std::size_t i = 0; i < choices; ++i) {
            const Letter a = order[i];
            if (k > 0 && prefix_.back() == a) continue;
            prefix_.push_back(a);
            if (!suffix_square() && advance(k) && dfs()) return true;
            prefix_.pop_back();
            if (nodes_ > c_.budget) return false;
        }
        return false;
    }

    const KillSearchConfig& c_;
    std::mt19937_64 rng_;
    std::uint64_t nodes_ = 0;
    std::vector<Letter> prefix_;
    std::vector<Letter> scratch_;
    std::vector<std::vector<Insertion>> alive_;
};

}  // namespace

KillSearchResult kill_search(const KillSearchConfig& config) { return Searcher(config).run(); }

}  // namespace sqf::detail
