#pragma once

#include "qseries/expr.hpp"
#include "qseries/lazy.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qseries {

// a listed representation: DSL text, or a second Eulerian form built in code
struct CatalogRepr {
    std::string text;
    std::function<Lazy()> build;
    Expr expr; // parsed text, null for built forms
};

struct CatalogEntry {
    std::string name;
    std::string order; // "2nd", "3rd", ...
    std::function<Lazy()> eulerian;
    std::vector<CatalogRepr> reprs;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_lookup(const std::string& name); // UnknownCatalogName
// Eulerian form when repr is empty, otherwise representation *repr
Lazy catalog_lazy(const std::string& name, std::optional<long> repr);

// one identity per (entry, representation): Eulerian form = representation
std::vector<IdentityRecord> catalog_identities();
// identities from the paper outside the catalog lists (Hecke forms, evaluations, ...)
const std::string& paper_identity_text();
std::vector<IdentityRecord> paper_identities();
// catalog followed by the paper identities
std::vector<IdentityRecord> builtin_suite();

} // namespace qseries
