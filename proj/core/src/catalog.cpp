#include "sqf/catalog.hpp"

#include <algorithm>

#include "sqf/error.hpp"
#include "sqf/extremal.hpp"

namespace sqf {

namespace {

struct Entry {
    CatalogName name;
    std::string_view label;
    std::string_view text;
    std::size_t length;
};

constexpr std::array<Entry, 7> kEntries{{
    {CatalogName::N, "N", "abacbabcabacbcacbabcabacabcbabcabacbcabcb", 41},
    {CatalogName::P, "P", "abacbcabcbacabacbcabcbabcacbcabcbacabacbcabcbacbc", 49},
    {CatalogName::Q, "Q", "abacbabcacbacabacbcacbacabcbabcabacbcabcb", 41},
    {CatalogName::R, "R", "abacabcacbacabcbabcacbacabacbcacbacabcbabcabacbcabcb", 52},
    {CatalogName::S, "S", "acabacbabcacbacabcbacbcabacbabcacbacabcbabcacbaca", 49},
    {CatalogName::QPrime, "Q'", "abacabcacbacabcbabcacbacabacbcacbacabcbacbcabacbabcabacbcabcb", 61},
    {CatalogName::RPrime, "R'", "abacabcacbacabcbabcacbacabacbcacbacabcbabcacbcabacbabcabacbcabcb", 64},
}};

const Entry& entry(CatalogName name) { return kEntries[static_cast<std::size_t>(name)]; }

// "Insert `piece` after the k-th letter", letters counted from 1.
Word insert_after(const Word& w, std::size_t k, std::string_view piece) {
    return w.factor(0, k) + parse_word(piece) + w.factor(k, w.size() - k);
}

std::string yes_no(bool b) { return b ? "" : "property does not hold"; }

}  // namespace

std::string_view catalog_label(CatalogName name) { return entry(name).label; }
std::size_t claimed_length(CatalogName name) { return entry(name).length; }

CatalogName catalog_name(std::string_view label) {
    for (const Entry& e : kEntries) {
        if (e.label == label) return e.name;
    }
    if (label == "Qp") return CatalogName::QPrime;
    if (label == "Rp") return CatalogName::RPrime;
    throw Error(Errc::UnknownName, "unknown catalog word '" + std::string(label) + "'");
}

const Catalog& Catalog::pristine() {
    static const Catalog c = [] {
        Catalog out;
        for (const Entry& e : kEntries) out[e.name] = parse_word(e.text);
        return out;
    }();
    return c;
}

Word constant(CatalogName name) { return Catalog::pristine()[name]; }
Word constant(std::string_view label) { return constant(catalog_name(label)); }

Word localized(const Word& w, VDLetter x) {
    Word out = apply_permutation(w, x.perm);
    return x.mirrored ? reverse(out) : out;
}

Word localized(CatalogName name, VDLetter x) { return localized(constant(name), x); }

namespace {

Substitution hat_substitution(const Catalog& c, std::initializer_list<CatalogName> core) {
    std::vector<std::vector<Word>> images(HatVertex::kCount);
    for (Letter id = 0; id < VDLetter::kCount; ++id) {
        const VDLetter x = VDLetter::from_id(id);
        for (CatalogName n : core) images[id].push_back(localized(c[n], x));
        const Word p = localized(c[CatalogName::P], x);
        const Word s = localized(c[CatalogName::S], x);
        images[12 + id] = {x.mirrored ? s : p};
        images[24 + id] = {x.mirrored ? p : s};
    }
    return Substitution(HatVertex::kCount, Alphabet::ternary(), std::move(images));
}

}  // namespace

Substitution delta(const Catalog& c) { return hat_substitution(c, {CatalogName::Q, CatalogName::R}); }

Substitution delta_extended(const Catalog& c) {
    return hat_substitution(c, {CatalogName::Q, CatalogName::R, CatalogName::QPrime, CatalogName::RPrime});
}

Substitution delta_prime(const Catalog& c) {
    std::vector<std::vector<Word>> images(VDLetter::kCount);
    for (Letter id = 0; id < VDLetter::kCount; ++id) {
        const VDLetter x = VDLetter::from_id(id);
        for (CatalogName n : {CatalogName::Q, CatalogName::R, CatalogName::QPrime, CatalogName::RPrime}) {
            images[id].push_back(localized(c[n], x));
        }
    }
    return Substitution(VDLetter::kCount, Alphabet::ternary(), std::move(images));
}

bool CatalogReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.passed; });
}

std::size_t CatalogReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CatalogCheck& c) { return !c.passed; }));
}

CatalogReport verify_catalog(const Catalog& c) {
    using enum CatalogName;
    CatalogReport report;
    auto add = [&](std::string name, std::string property, bool ok, std::string cex = {}) {
        if (!ok && cex.empty()) cex = yes_no(ok);
        report.checks.push_back({std::move(name), std::move(property), ok, ok ? std::string{} : std::move(cex)});
    };

    for (CatalogName n : kCatalogNames) {
        add(std::string(catalog_label(n)), "length " + std::to_string(claimed_length(n)),
            c[n].size() == claimed_length(n), "actual length " + std::to_string(c[n].size()));
    }

    for (CatalogName n : {N, Q, R, QPrime, RPrime}) {
        const ExtremalReport r = analyze(c[n]);
        std::string cex;
        if (!r.square_free) cex = "contains a square";
        else if (!r.nearly_extremal) {
            cex = std::to_string(r.square_free_extensions.size()) + " square-free extensions";
            if (!r.square_free_extensions.empty()) cex += ", e.g. " + r.square_free_extensions.front().str();
        }
        add(std::string(catalog_label(n)), "nearly extremal", r.nearly_extremal, cex);
    }

    auto directional = [&](CatalogName a, CatalogName b, Side side) {
        const Word w = c[a] + c[b];
        const bool ok = is_directional_extremal(w, side);
        add(std::string(catalog_label(a)) + std::string(catalog_label(b)),
            side == Side::Left ? "left extremal" : "right extremal", ok);
    };
    directional(P, Q, Side::Left);
    directional(P, R, Side::Left);
    directional(Q, S, Side::Right);
    directional(R, S, Side::Right);

    add("R", "Q with abcacbacabc after letter 4", insert_after(c[Q], 4, "abcacbacabc") == c[R]);
    add("Q'", "R with cbcabacba after letter 40", insert_after(c[R], 40, "cbcabacba") == c[QPrime]);
    add("R'", "Q' with bca after letter 40", insert_after(c[QPrime], 40, "bca") == c[RPrime]);

    for (Letter id = 0; id < VDLetter::kCount; ++id) {
        const VDLetter x = VDLetter::from_id(id);
        add("N_" + x.str(), "differs from Q", localized(c[N], x) != c[Q]);
    }

    const Substitution d = delta(c);
    for (Letter id = 0; id < VDLetter::kCount; ++id) {
        const VDLetter x = VDLetter::from_id(id);
        const Word& cap_p = d.images(static_cast<Letter>(12 + id))[0];
        const Word& cap_s = d.images(static_cast<Letter>(24 + id))[0];
        for (std::size_t k = 0; k < d.image_count(id); ++k) {
            const Word& core = d.images(id)[k];
            const std::string img = k == 0 ? "Q" : "R";
            const Word left = cap_p + core;
            add("delta(p_x x) x=" + x.str() + " " + img, "left extremal", is_directional_extremal(left, Side::Left),
                left.str());
            const Word right = core + cap_s;
            add("delta(x s_x) x=" + x.str() + " " + img, "right extremal",
                is_directional_extremal(right, Side::Right), right.str());
        }
    }
    return report;
}

std::vector<Certificate> substitution_certificates(const Catalog& c) {
    std::vector<Certificate> out;
    out.push_back({"delta on walks in D-hat", check_universal(delta(c), [] { return square_free_walks(digraph_hatD(), 3); })});
    out.push_back({"h on ternary words",
                   check_universal(h_substitution(), [] { return square_free_words(Alphabet::ternary(), 3); })});
    out.push_back({"delta' on walks in D", check_universal(delta_prime(c), [] { return square_free_walks(digraph_D(), 3); })});
    return out;
}

}  // namespace sqf
