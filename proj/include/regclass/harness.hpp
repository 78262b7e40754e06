#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "regclass/catalog.hpp"
#include "regclass/permgroup.hpp"

namespace regclass {

inline constexpr const char* kToolVersion = "0.4.0";
inline constexpr int kReportSchemaVersion = 1;

enum class CaseStatus { Pass, Fail, Skip, Info };
std::string to_string(CaseStatus s);
CaseStatus parse_case_status(const std::string& s);

// Where an expected value comes from: a published table or statement, or an
// oracle computed independently in this tool.
struct ExpectedValue {
    std::string value;
    std::string source;  // "published" or "oracle"
    bool operator==(const ExpectedValue&) const = default;
};

struct CaseRecord {
    std::string id;
    std::string group;
    std::uint64_t p = 0;
    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    std::optional<ExpectedValue> expected;
    CaseStatus status = CaseStatus::Pass;
    std::string note;
    bool operator==(const CaseRecord&) const = default;
};

struct ReportSummary {
    std::size_t pass = 0, fail = 0, skip = 0, info = 0;
    bool operator==(const ReportSummary&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::string version = kToolVersion;
    std::vector<CaseRecord> cases;
    nlohmann::ordered_json caps = nlohmann::ordered_json::object();
    std::uint64_t duration_ms = 0;

    ReportSummary summary() const;
    // No Fail cases. Skip and Info cases never fail a suite.
    bool passed() const;
    bool operator==(const VerificationReport&) const = default;
};

std::string emit_json(const VerificationReport& r);
VerificationReport parse_report_json(const std::string& text);
std::string emit_text(const VerificationReport& r);

struct SuiteOptions {
    bool extended = false;
    std::uint64_t max_order = 0;  // 0: suite default
    std::vector<std::string> only;  // restrict to these entry ids when non-empty
    std::string cache_dir;          // class-table cache, empty disables
};

// Class table for a built entry, read from and written to the cache when enabled.
ClassTable load_classes(const CatalogEntry& e, const PermGroup& G, const SuiteOptions& opts);
// Cache directory from REGCLASS_CACHE_DIR, or empty.
std::string default_cache_dir();

// One class-sum case. Throws std::invalid_argument when p does not divide |G|.
CaseRecord class_sum_case(const CatalogEntry& e, const ClassTable& T, std::uint64_t p);

VerificationReport verify_class_sum(const SuiteOptions& opts = {});
VerificationReport verify_nonsolvable_floor(const SuiteOptions& opts = {});
VerificationReport verify_character_union(const SuiteOptions& opts = {});
VerificationReport verify_simple_orbits(const SuiteOptions& opts = {});
VerificationReport verify_exception_table(const SuiteOptions& opts = {});
VerificationReport verify_quotient_monotonicity(const SuiteOptions& opts = {});
VerificationReport verify_module_bound(const SuiteOptions& opts = {});
VerificationReport verify_lie_rank_oracle(const SuiteOptions& opts = {});
VerificationReport verify_engine(const SuiteOptions& opts = {});
VerificationReport verify_grid_claims(const std::string& claims_path);

// Suite ids accepted by run_suite.
std::vector<std::string> suite_ids();
VerificationReport run_suite(const std::string& id, const SuiteOptions& opts = {});

struct ExceptionRow {
    std::string group;     // display name
    std::string entry_id;  // catalog id, empty when not constructible
    std::uint64_t p;
    std::uint64_t value;
    bool at_least;  // published as a lower bound
    enum class Tier { Default, Extended, FormulaOnly } tier;
};
const std::vector<ExceptionRow>& exception_rows();

// ----------------------------------------------------------------------------
// Module bound k(H) + n(H, V) - 1 for H acting linearly on V = GF(p)^dim.

using Matrix = std::vector<std::vector<std::uint64_t>>;  // rows over GF(p)

struct ModuleFixture {
    std::string name;
    std::uint64_t p;
    unsigned dim;
    std::vector<Matrix> generators;
};

struct ModuleBoundResult {
    std::uint64_t order_H = 0;
    std::size_t classes_H = 0;
    std::size_t orbits_V = 0;  // including {0}
    std::uint64_t value = 0;   // classes_H + orbits_V - 1
    Cmp vs_threshold = Cmp::Less;
    bool equality_expected = false;  // |V| = p and |H|^2 = p - 1
};

// Throws std::invalid_argument when p divides |H| or V is reducible.
ModuleBoundResult check_module_bound(const ModuleFixture& fx);
std::vector<ModuleFixture> module_fixtures();

}  // namespace regclass
