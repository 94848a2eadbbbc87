// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "sqf/catalog.hpp"
#include "sqf/circular.hpp"
#include "sqf/construct.hpp"
#include "sqf/error.hpp"
#include "sqf/extremal.hpp"
#include "sqf/squares.hpp"
#include "sqf/walks.hpp"

using namespace sqf;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) detail = what;
        passed = passed && ok;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s > limit_s) o.require(false, "over the time limit");
    if (!o.passed) ++failures;
    std::printf("%s %2d %s (%.2f s, limit %.0f s)%s%s\n", o.passed ? "PASS" : "FAIL", id, name.c_str(), s, limit_s,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

template <class F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string list(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

bool circular_exists(std::size_t m, oracle::Letters& w) {
    if (w.size() == m) return !oracle::has_circular_square(w);
    for (Letter a = 0; a < 3; ++a) {
        w.push_back(a);
        if (!oracle::has_square(w) && circular_exists(m, w)) return true;
        w.pop_back();
    }
    return false;
}

// Words built from the catalog: the seeds, their twelve localizations, and
// the cap products with every core image.
std::vector<Word> catalog_words() {
    std::vector<Word> out;
    const Substitution d = delta();
    for (CatalogName name : kCatalogNames) {
        for (Letter x = 0; x < VDLetter::kCount; ++x) out.push_back(localized(name, VDLetter::from_id(x)));
    }
    for (Letter x = 0; x < VDLetter::kCount; ++x) {
        for (const Word& core : d.images(x)) {
            out.push_back(d.images(static_cast<Letter>(12 + x))[0] + core);
            out.push_back(core + d.images(static_cast<Letter>(24 + x))[0]);
        }
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "linear spectrum up to 55", 900, [] {
        Outcome o;
        const Spectrum s = spectrum(55, false, {.force = false, .jobs = 4});
        o.require(s.exhaustive, "search not exhaustive");
        o.require(s.admissible == std::vector<long>{25, 41, 48, 50}, "got {" + list(s.admissible) + "}");
        for (const auto& [n, w] : s.witnesses) o.require(oracle::is_extremal(w.vec()), "witness rejected by oracle");
        return o;
    });

    criterion(2, "circular spectrum up to 40", 900, [] {
        Outcome o;
        const Spectrum s = spectrum(40, true, {.force = false, .jobs = 4});
        const std::vector<long> expected{4, 6, 8, 13, 15, 16, 18, 20, 21, 22, 23,
                                         24, 28, 30, 32, 33, 34, 35, 36, 38, 39, 40};
        o.require(s.exhaustive, "search not exhaustive");
        o.require(s.admissible == expected, "got {" + list(s.admissible) + "}");
        for (const auto& [n, w] : s.witnesses) {
            o.require(oracle::is_extremal_circular(w.vec()), "witness rejected by oracle");
        }
        return o;
    });

    criterion(3, "catalog checks", 60, [] {
        Outcome o;
        const CatalogReport r = verify_catalog();
        o.require(r.checks.size() == 79, "expected 79 checks");
        for (const CatalogCheck& c : r.checks) o.require(c.passed, c.name + ": " + c.property);
        for (CatalogName name : {CatalogName::N, CatalogName::Q, CatalogName::R, CatalogName::QPrime,
                                 CatalogName::RPrime}) {
            o.require(oracle::is_nearly_extremal(constant(name).vec()), "oracle disagrees on nearly extremal");
        }
        return o;
    });

    criterion(4, "substitution certificates and mutation sensitivity", 300, [] {
        Outcome o;
        for (const Certificate& c : substitution_certificates()) o.require(c.report.passed(), c.name);
        std::size_t mutants = 0;
        for (CatalogName name : kCatalogNames) {
            const Word original = Catalog::pristine()[name];
            for (std::size_t i = 0; i < original.size(); ++i) {
                for (Letter shift = 1; shift < 3; ++shift) {
                    Catalog c = Catalog::pristine();
                    std::vector<Letter> v = original.vec();
                    v[i] = static_cast<Letter>((v[i] + shift) % 3);
                    c[name] = Word(v);
                    ++mutants;
                    if (!verify_catalog(c).passed()) continue;
                    bool caught = false;
                    for (const Certificate& cert : substitution_certificates(c)) caught = caught || !cert.report.passed();
                    o.require(caught, std::string(catalog_label(name)) + " mutated at " + std::to_string(i) +
                                          " went unnoticed");
                }
            }
        }
        o.require(mutants == 2 * (41 + 49 + 41 + 52 + 49 + 61 + 64), "mutant count");
        return o;
    });

    criterion(5, "linear pipeline at 2138, 2500, 5000, 10007", 240, [] {
        Outcome o;
        for (long n : {2138L, 2500L, 5000L, 10007L}) {
            const std::string tag = std::to_string(n);
            ConstructionResult r;
            const double t = seconds([&] { r = construct_extremal(n); });
            o.require(t <= 60, tag + " took over 60 s");
            o.require(r.method == Method::Pipeline, tag + " not built by the pipeline");
            o.require(r.word.size() == static_cast<std::size_t>(n), tag + " has the wrong length");
            o.require(r.verified && is_extremal(r.word), tag + " not extremal");
            if (n == 2138) {
                o.require(is_extremal(r.word, Detector::Oracle), "oracle detector disagrees at 2138");
                o.require(oracle::is_extremal(r.word.vec()), "brute-force oracle disagrees at 2138");
            }
        }
        return o;
    });

    criterion(6, "circular pipeline at 470, 1001, 4172, 5000", 480, [] {
        Outcome o;
        for (long n : {470L, 1001L, 4172L, 5000L}) {
            const std::string tag = std::to_string(n);
            ConstructionResult r;
            const double t = seconds([&] { r = construct_extremal_circular(n); });
            o.require(t <= 120, tag + " took over 120 s");
            o.require(r.word.size() == static_cast<std::size_t>(n), tag + " has the wrong length");
            o.require(r.verified && is_extremal_circular(r.word.letters()), tag + " not extremal");
        }
        return o;
    });

    criterion(7, "mid-range search for every admissible n in 87..120", 3600, [] {
        Outcome o;
        for (long n = 87; n <= 120; ++n) {
            o.require(in_linear_spectrum(n), std::to_string(n) + " unexpectedly outside the spectrum");
            const ConstructionResult r = construct_extremal(n);
            o.require(r.method == Method::Search, std::to_string(n) + " not built by search");
            o.require(r.word.size() == static_cast<std::size_t>(n) && oracle::is_extremal(r.word.vec()),
                      std::to_string(n) + " rejected by oracle");
        }
        return o;
    });

    criterion(8, "circular square-free ternary words, 18..200 and the gaps", 600, [] {
        Outcome o;
        for (std::size_t m = 18; m <= 200; ++m) {
            const Word w = circular_square_free_ternary(m);
            o.require(w.size() == m && !oracle::has_circular_square(w.vec()), "bad word at " + std::to_string(m));
        }
        for (std::size_t m : {5, 7, 9, 10, 14, 17}) {
            bool refused = false;
            try {
                circular_square_free_ternary(m);
            } catch (const Error& e) {
                refused = e.code() == Errc::NoSuchWord;
            }
            oracle::Letters scratch;
            o.require(refused, "no NoSuchWord at " + std::to_string(m));
            o.require(!circular_exists(m, scratch), "oracle finds a word at " + std::to_string(m));
        }
        return o;
    });

    criterion(9, "detector equivalence and long extremality check", 300, [] {
        Outcome o;
        std::mt19937_64 rng(20240601);
        for (int trial = 0; trial < 100000; ++trial) {
            const std::size_t n = rng() % 501;
            const oracle::Letters w =
                trial % 4 == 0 ? oracle::random_square_free(rng, n) : oracle::random_word(rng, n);
            const bool fast = find_square(w, Detector::Fast).has_value();
            const bool slow = find_square(w, Detector::Oracle).has_value();
            o.require(fast == slow, "detectors disagree on a random word of length " + std::to_string(n));
        }
        for (const Word& w : catalog_words()) {
            const bool fast = find_square(w.letters(), Detector::Fast).has_value();
            o.require(fast == find_square(w.letters(), Detector::Oracle).has_value(), "disagree on " + w.str());
            o.require(fast == oracle::has_square(w.vec()), "brute force disagrees on " + w.str());
        }
        const ConstructionResult big = construct_extremal(10000);
        bool extremal = false;
        const double t = seconds([&] { extremal = is_extremal(big.word); });
        o.require(big.word.size() == 10000 && extremal, "length 10000 word not extremal");
        o.require(t <= 60, "extremality of the length 10000 word took over 60 s");
        return o;
    });

    criterion(10, "postage ranges", 60, [] {
        Outcome o;
        for (long n = 2040; n <= 2200; ++n) {
            const auto ab = postage(n, 41, 52);
            o.require(ab && ab->first >= 0 && ab->second >= 0 && 41 * ab->first + 52 * ab->second == n,
                      "postage fails at " + std::to_string(n));
        }
        o.require(!postage(2039, 41, 52), "2039 should be unreachable");
        bool brute = false;
        for (long a = 0; 41 * a <= 2039 && !brute; ++a) brute = (2039 - 41 * a) % 52 == 0;
        o.require(!brute, "brute force reaches 2039");
        const std::vector<int> parts{41, 52};
        for (long n = 4172; n <= 4300; ++n) {
            const auto p = postage_even(n, parts);
            o.require(p && p->parity_sum % 2 == 0 && 41 * p->count(41) + 52 * p->count(52) == n,
                      "even postage fails at " + std::to_string(n));
        }
        return o;
    });

    criterion(11, "irreducible witnesses for 4..12", 60, [] {
        Outcome o;
        for (int n = 4; n <= 12; ++n) {
            const Word w = irreducible_witness(n);
            o.require(w.size() == static_cast<std::size_t>(3 + 6 * (n - 2)), "length at " + std::to_string(n));
            o.require(is_irreducibly_square_free(w), "rejected at " + std::to_string(n));
            const oracle::Letters v = w.vec();
            bool ok = !oracle::has_square(v);
            for (std::size_t i = 1; i + 1 < v.size() && ok; ++i) {
                oracle::Letters d = v;
                d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
                ok = oracle::has_square(d);
            }
            o.require(ok, "brute force rejects " + std::to_string(n));
        }
        return o;
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
