#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegeom/catalog.hpp"

namespace liegeom {

struct CheckResult {
    std::string id;
    bool passed = false;
    std::string witness;            ///< empty on pass
    std::string value;              ///< computed value in canonical form
    std::optional<Triple> triple;   ///< basis triple locating a failure, when one exists
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::size_t mobius_samples = 1000;
    std::size_t conjugations = 1000;
    std::size_t family_points = 100;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::string timestamp;  ///< UTC, ISO 8601
    std::uint64_t seed = 0;

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    bool all_passed() const { return fail_count() == 0; }
    const CheckResult* find(const std::string& id) const;
};

/// Independent 64-bit seed for a named fragment.
std::uint64_t fragment_seed(std::uint64_t seed, std::string_view fragment);

std::vector<CheckResult> verify_catalog_entries(const std::vector<CatalogEntry>& catalog);
std::vector<CheckResult> verify_flat_classes(const std::vector<CatalogEntry>& catalog);
std::vector<CheckResult> verify_sl2_sectional(const std::vector<CatalogEntry>& catalog);
std::vector<CheckResult> verify_classification_robustness(const std::vector<CatalogEntry>& catalog, std::uint64_t seed,
                                                          std::size_t conjugations);
std::vector<CheckResult> verify_solvable_models(std::uint64_t seed, std::size_t family_points);
std::vector<CheckResult> verify_isotropy_dimension_bounds();
std::vector<CheckResult> verify_polynomial_identities();
std::vector<CheckResult> verify_mobius(std::uint64_t seed, std::size_t samples, double tol);

/// Every fragment; throws EmptyCatalog for an empty catalog.
VerifyReport verify_all(const std::vector<CatalogEntry>& catalog, const VerifyOptions& options = {});
VerifyReport verify_all(const VerifyOptions& options = {});

std::string report_to_text(const VerifyReport& report);
/// {seed, checks: [{id, status, witness, value}], summary: {pass, fail}};
/// deterministic for a fixed seed (no timestamp).
std::string report_to_json(const VerifyReport& report);

}  // namespace liegeom
