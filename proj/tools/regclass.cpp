// Command-line front end: catalog listing, class tables, verification suites,
// grid certificates and character counts.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "regclass/autorbits.hpp"
#include "regclass/catalog.hpp"
#include "regclass/chartab.hpp"
#include "regclass/harness.hpp"
#include "regclass/liebounds.hpp"

using namespace regclass;

namespace {

int cmd_catalog_list(bool extended) {
    std::printf("%-24s %-18s %-12s %14s %8s  %s\n", "id", "family", "params", "order", "degree", "outer action");
    for (const auto& e : catalog(extended)) {
        std::string params;
        for (auto v : e.params) params += (params.empty() ? "" : ",") + std::to_string(v);
        std::printf("%-24s %-18s %-12s %14llu %8zu  %s\n", e.id.c_str(), family_name(e.family).c_str(),
                    params.c_str(), static_cast<unsigned long long>(e.order), e.degree, e.out_action.c_str());
    }
    return 0;
}

int cmd_classes(const std::string& id, const std::string& cache, bool extended) {
    const auto e = parse_entry(id);
    auto built = build(e);
    SuiteOptions opts;
    opts.extended = extended;
    opts.cache_dir = cache.empty() ? default_cache_dir() : cache;
    const auto T = load_classes(e, built.group, opts);
    std::printf("%s: order %llu, %zu classes, exponent %llu\n", e.id.c_str(),
                static_cast<unsigned long long>(T.group_order()), T.size(),
                static_cast<unsigned long long>(T.exponent()));
    std::printf("%6s %8s %12s\n", "class", "order", "size");
    for (std::size_t i = 0; i < T.size(); ++i)
        std::printf("%6zu %8llu %12llu\n", i, static_cast<unsigned long long>(T[i].order),
                    static_cast<unsigned long long>(T[i].size));
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const std::string& json_path) {
    const auto report = run_suite(suite, opts);
    std::cout << emit_text(report);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << emit_json(report);
    }
    return report.passed() ? 0 : 1;
}

int cmd_bound(const std::string& claim_id, const std::string& grid, const std::string& claims_path) {
    for (auto claim : load_claims(claims_path)) {
        if (claim.id != claim_id) continue;
        if (!grid.empty()) {
            claim.grid = parse_grid_override(claim.grid, grid);
            claim.expected_exceptions.clear();
        }
        const auto res = grid_certify(claim);
        std::cout << claim.id << ": " << claim.description << "\n";
        for (const auto& c : res.certificates)
            std::printf("  %-28s lhs ~ %-12.6g rhs ~ %-12.6g %s\n", c.point.c_str(), to_double(c.lhs.lo),
                        to_double(c.rhs.lo), to_string(c.verdict).c_str());
        std::cout << "exceptions:";
        for (auto q : res.exceptions) std::cout << " " << q;
        std::cout << "\n";
        if (grid.empty()) {
            std::cout << (res.matches_expected ? "matches" : "differs from") << " the published exception set\n";
            return res.matches_expected ? 0 : 1;
        }
        return 0;
    }
    std::cerr << "unknown claim '" << claim_id << "'\n";
    return 2;
}

int cmd_chartab(const std::string& id, std::uint64_t p, bool extended) {
    const auto e = parse_entry(id);
    auto built = build(e);
    const auto T = conjugacy_classes(built.group, extended ? EnumOptions::extended() : EnumOptions{});
    const auto X = character_table(T);
    std::printf("%s: %zu irreducible characters, degrees", e.id.c_str(), X.size());
    for (auto d : X.degrees) std::printf(" %llu", static_cast<unsigned long long>(d));
    std::printf("\n");
    const auto cr = character_count_report(X, T, p);
    const auto cc = class_counts(T, p);
    std::printf("p = %llu\n", static_cast<unsigned long long>(p));
    std::printf("  p-rational         %zu\n", cr.p_rational);
    std::printf("  p'-rational        %zu\n", cr.p_prime_rational);
    std::printf("  union              %zu  (%s 2 sqrt(p-1))\n", cr.union_count, to_string(cr.union_vs_threshold).c_str());
    std::printf("  rational           %zu\n", cr.rational);
    std::printf("  p-rational or Q_p  %zu  (%s 2 sqrt(p-1))\n", cr.p_rational_or_qp,
                to_string(cr.p_rat_qp_vs_threshold).c_str());
    std::printf("  k_p, k_p'          %zu, %zu\n", cc.k_p, cc.k_p_prime);
    const auto bc = brauer_cross_check(T, X);
    std::printf("  Brauer cross-check %s (%llu Galois elements)\n", bc.ok ? "ok" : bc.failure.c_str(),
                static_cast<unsigned long long>(bc.galois_elements));
    return bc.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjugacy-class and character counts for prime-related bounds"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "Catalog of constructible groups");
    auto* cat_list = cat->add_subcommand("list", "List catalog entries");
    bool cat_extended = false;
    cat_list->add_flag("--extended", cat_extended, "Include the extended entries");
    cat->require_subcommand(1);

    auto* cls = app.add_subcommand("classes", "Conjugacy classes of a catalog entry");
    std::string cls_entry, cls_cache;
    bool cls_extended = false;
    cls->add_option("entry", cls_entry, "Catalog id, e.g. psl2(16)")->required();
    cls->add_option("--cache", cls_cache, "Class-table cache directory");
    cls->add_flag("--extended", cls_extended, "Use the extended enumeration cap");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string suite, json_path;
    SuiteOptions vopts;
    ver->add_option("suite", suite, "Suite id")->required()->check(CLI::IsMember(suite_ids()));
    ver->add_flag("--extended", vopts.extended, "Extended catalog and enumeration cap");
    ver->add_option("--max-order", vopts.max_order, "Largest group order to include");
    ver->add_option("--only", vopts.only, "Restrict to these catalog ids");
    ver->add_option("--cache", vopts.cache_dir, "Class-table cache directory");
    ver->add_option("--json", json_path, "Write the JSON report here");

    auto* bnd = app.add_subcommand("bound", "Certify a grid claim");
    std::string claim_id, grid, claims_path = std::string(REGCLASS_DATA_DIR) + "/claims.json";
    bnd->add_option("claim", claim_id, "Claim id")->required();
    bnd->add_option("--grid", grid, "Override the grid: LO..HI or a,b,c");
    bnd->add_option("--claims", claims_path, "Claims file");

    auto* chr = app.add_subcommand("chartab", "Character counts for a catalog entry");
    std::string chr_entry;
    std::uint64_t chr_p = 0;
    bool chr_extended = false;
    chr->add_option("entry", chr_entry, "Catalog id")->required();
    chr->add_option("--p", chr_p, "Prime dividing the group order")->required();
    chr->add_flag("--extended", chr_extended, "Use the extended enumeration cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat_list->parsed()) return cmd_catalog_list(cat_extended);
        if (cls->parsed()) return cmd_classes(cls_entry, cls_cache, cls_extended);
        if (ver->parsed()) {
            if (vopts.cache_dir.empty()) vopts.cache_dir = default_cache_dir();
            return cmd_verify(suite, vopts, json_path);
        }
        if (bnd->parsed()) return cmd_bound(claim_id, grid, claims_path);
        if (chr->parsed()) return cmd_chartab(chr_entry, chr_p, chr_extended);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
