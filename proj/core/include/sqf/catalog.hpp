#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sqf/substitution.hpp"
#include "sqf/walks.hpp"
#include "sqf/word.hpp"

namespace sqf {

enum class CatalogName { N, P, Q, R, S, QPrime, RPrime };

inline constexpr std::array<CatalogName, 7> kCatalogNames{CatalogName::N, CatalogName::P,      CatalogName::Q,
                                                          CatalogName::R, CatalogName::S,      CatalogName::QPrime,
                                                          CatalogName::RPrime};

std::string_view catalog_label(CatalogName name);
std::size_t claimed_length(CatalogName name);

/// Parses "N", "P", "Q", "R", "S", "Q'", "R'" (also "Qp"/"Rp"). Throws UnknownName.
CatalogName catalog_name(std::string_view label);

/// The seven seed words. `pristine()` holds the published strings; tests
/// mutate copies to show that the checks below notice.
struct Catalog {
    std::array<Word, 7> words;

    static const Catalog& pristine();
    const Word& operator[](CatalogName name) const { return words[static_cast<std::size_t>(name)]; }
    Word& operator[](CatalogName name) { return words[static_cast<std::size_t>(name)]; }
};

Word constant(CatalogName name);
Word constant(std::string_view label);

/// The word permuted by x's permutation, then reversed when x is mirrored.
Word localized(const Word& w, VDLetter x);
Word localized(CatalogName name, VDLetter x);

/// Over the D-hat alphabet: x -> {Q_x, R_x}; p_x -> {P_x}, s_x -> {S_x} for
/// plain x and p_x -> {S_x}, s_x -> {P_x} for mirrored x.
Substitution delta(const Catalog& catalog = Catalog::pristine());
/// Over the D alphabet: x -> {Q_x, R_x, Q'_x, R'_x}.
Substitution delta_prime(const Catalog& catalog = Catalog::pristine());
/// Over the D-hat alphabet: delta with core images widened to {Q, R, Q', R'}.
Substitution delta_extended(const Catalog& catalog = Catalog::pristine());

struct CatalogCheck {
    std::string name;
    std::string property;
    bool passed = false;
    std::string counterexample;
};

struct CatalogReport {
    std::vector<CatalogCheck> checks;

    bool passed() const;
    std::size_t failures() const;
};

/// Lengths, nearly extremality of N, Q, R, Q', R', left/right extremality of
/// PQ, PR, QS, RS, the three insertion identities, N_x != Q, and the cap
/// products delta(p_x x), delta(x s_x) for all twelve x.
CatalogReport verify_catalog(const Catalog& catalog = Catalog::pristine());

struct Certificate {
    std::string name;
    ConditionReport report;
};

/// The substitution conditions for delta over square-free walks in D-hat, h
/// over square-free ternary words and delta' over square-free walks in D.
std::vector<Certificate> substitution_certificates(const Catalog& catalog = Catalog::pristine());

}  // namespace sqf
