// Command-line front end: decomposition tables, multiplicity generating
// functions, and identity verification.
//
// Exit codes: 0 success, 1 identity failure or internal error, 2 usage error,
// 3 theta construction requested for an unsupported n without --conjecture.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tensorsq/identities.hpp"
#include "tensorsq/multiplicity.hpp"
#include "tensorsq/render.hpp"

namespace {

using namespace tensorsq;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_unsupported = 3;

struct RunConfig {
    std::string command;
    int n = 0;
    std::vector<int> n_list;
    long order = 30;
    int max_k = 6;
    std::optional<int> i;
    std::string format = "table";
    std::string method = "comb";
    std::string identity = "all";
    bool conjecture = false;
    std::optional<std::size_t> witness_cap;
    long master_order = 120;
};

int cmd_decompose(const RunConfig &cfg)
{
    const auto table = b_table(cfg.n, cfg.max_k);
    if (cfg.format == "json")
        std::cout << table_to_json(table, cfg.witness_cap).dump(2) << '\n';
    else if (cfg.format == "csv")
        std::cout << table_to_csv(table, cfg.witness_cap);
    else
        std::cout << table_to_text(table, cfg.witness_cap);
    return exit_ok;
}

struct BRow {
    int i = 0;
    std::optional<QSeries> comb;
    std::optional<QSeries> theta;
    std::optional<long> first_disagreement;
    bool compared() const { return comb && theta; }
};

// Coefficient if e is below the series' truncation order.
std::optional<Integer> coeff_at(const std::optional<QSeries> &s, long e)
{
    if (!s || e >= s->order())
        return std::nullopt;
    return s->coeff(e);
}

std::string cell(const std::optional<Integer> &c) { return c ? c->get_str() : std::string(); }

std::string diff_cell(const std::optional<Integer> &a, const std::optional<Integer> &b)
{
    return a && b ? Integer(*a - *b).get_str() : std::string();
}

int cmd_bseries(const RunConfig &cfg)
{
    const bool want_comb = cfg.method != "theta";
    const bool want_theta = cfg.method != "comb";
    const ThetaBranch branch = theta_branch(cfg.n);
    const bool conjectural = branch == ThetaBranch::conjectural;
    if (want_theta && conjectural && !cfg.conjecture) {
        std::cerr << "error: the theta construction is not established for n = " << cfg.n
                  << "; pass --conjecture to run it as an experiment\n";
        return exit_unsupported;
    }
    if (cfg.i && (*cfg.i < 0 || *cfg.i > cfg.n / 2)) {
        std::cerr << "error: --i must lie in 0.." << cfg.n / 2 << '\n';
        return exit_usage;
    }

    std::vector<QSeries> theta;
    std::optional<std::string> theta_error;
    if (want_theta) {
        try {
            theta = B_theta_all(cfg.n, cfg.order, cfg.conjecture);
        } catch (const std::exception &e) {
            if (!conjectural)
                throw;
            theta_error = e.what();
        }
    }

    std::vector<BRow> rows;
    bool all_agree = true;
    for (int i = 0; i <= cfg.n / 2; ++i) {
        if (cfg.i && *cfg.i != i)
            continue;
        BRow row{i, {}, {}, {}};
        if (want_comb)
            row.comb = B_comb(i, cfg.n, cfg.order);
        if (!theta.empty())
            row.theta = theta[static_cast<std::size_t>(i)];
        if (row.compared()) {
            row.first_disagreement = first_difference(*row.comb, *row.theta);
            all_agree = all_agree && !row.first_disagreement;
        }
        rows.push_back(std::move(row));
    }

    if (cfg.format == "json") {
        json series = json::array();
        for (const auto &row : rows) {
            json item = {{"i", row.i}};
            if (row.comb)
                item["comb"] = coefficients_json(*row.comb);
            if (row.theta)
                item["theta"] = coefficients_json(*row.theta);
            if (row.compared()) {
                item["agree"] = !row.first_disagreement;
                item["first_disagreement"] = row.first_disagreement ? json(*row.first_disagreement) : json(nullptr);
            }
            series.push_back(std::move(item));
        }
        json out = {{"n", cfg.n},
                    {"order", cfg.order},
                    {"method", cfg.method},
                    {"conjectural", conjectural && want_theta},
                    {"series", std::move(series)}};
        if (theta_error)
            out["theta_error"] = *theta_error;
        std::cout << out.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        std::cout << "i,e" << (want_comb ? ",comb" : "") << (want_theta ? ",theta" : "")
                  << (want_comb && want_theta ? ",diff" : "") << "\r\n";
        for (const auto &row : rows)
            for (long e = 0; e < cfg.order; ++e) {
                const auto c = coeff_at(row.comb, e);
                const auto t = coeff_at(row.theta, e);
                std::cout << row.i << ',' << e;
                if (want_comb)
                    std::cout << ',' << cell(c);
                if (want_theta)
                    std::cout << ',' << cell(t);
                if (want_comb && want_theta)
                    std::cout << ',' << diff_cell(c, t);
                std::cout << "\r\n";
            }
    } else {
        for (const auto &row : rows) {
            std::cout << "B_" << row.i << "(q), n = " << cfg.n
                      << (conjectural && want_theta ? " (conjectural theta construction)" : "") << '\n';
            std::cout << std::setw(5) << "e";
            if (want_comb)
                std::cout << std::setw(14) << "comb";
            if (want_theta)
                std::cout << std::setw(14) << "theta";
            if (want_comb && want_theta)
                std::cout << std::setw(14) << "diff";
            std::cout << '\n';
            for (long e = 0; e < cfg.order; ++e) {
                const auto c = coeff_at(row.comb, e);
                const auto t = coeff_at(row.theta, e);
                std::cout << std::setw(5) << e;
                if (want_comb)
                    std::cout << std::setw(14) << cell(c);
                if (want_theta)
                    std::cout << std::setw(14) << cell(t);
                if (want_comb && want_theta)
                    std::cout << std::setw(14) << diff_cell(c, t);
                std::cout << '\n';
            }
            if (row.compared()) {
                if (row.first_disagreement)
                    std::cout << "disagree, first at q^" << *row.first_disagreement << '\n';
                else
                    std::cout << "agree to order " << std::min(row.comb->order(), row.theta->order()) << '\n';
            }
        }
        if (theta_error)
            std::cout << "theta construction failed: " << *theta_error << '\n';
    }
    if (!conjectural && !all_agree)
        return exit_failure;
    return exit_ok;
}

int cmd_verify(const RunConfig &cfg)
{
    // Canonical suite names, with the numbered identifiers accepted as aliases.
    static const std::map<std::string, std::string> aliases = {
        {"lemma5.1", "sum-forms-n2"}, {"lemma5.2", "d2-product"},       {"lemma5.3", "feingold-forms"},
        {"lemma5.4", "d3-square"},    {"theorem5.1", "mod15-partitions"}, {"sum-forms-n2", "sum-forms-n2"},
        {"d2-product", "d2-product"}, {"feingold-forms", "feingold-forms"}, {"d3-square", "d3-square"},
        {"mod15-partitions", "mod15-partitions"}, {"master", "master"},  {"triple-product", "triple-product"},
        {"all", "all"}};
    const auto found = aliases.find(cfg.identity);
    if (found == aliases.end()) {
        std::cerr << "error: unknown identity '" << cfg.identity << "'\n";
        return exit_usage;
    }
    const std::string &selected = found->second;
    const bool all = selected == "all";
    auto wants = [&](const char *name) { return all || selected == name; };

    std::vector<int> moduli = cfg.n_list;
    if (moduli.empty())
        moduli = {2, 3, 4, 5, 6, 7};

    std::vector<IdentityReport> reports;
    if (wants("sum-forms-n2"))
        reports.push_back(check_sum_forms_n2(cfg.order));
    if (wants("d2-product"))
        reports.push_back(check_d2_product(cfg.order));
    if (wants("feingold-forms"))
        reports.push_back(check_feingold_forms(cfg.order));
    if (wants("d3-square"))
        reports.push_back(check_d3_square(cfg.order));
    if (wants("mod15-partitions"))
        reports.push_back(check_mod15_identities(cfg.max_k));
    if (wants("triple-product"))
        reports.push_back(check_triple_products(cfg.order));
    if (wants("master")) {
        const long order = all ? std::min(cfg.order, cfg.master_order) : cfg.order;
        for (int n : moduli)
            reports.push_back(check_master(n, order));
    }

    bool ok = true;
    json list = json::array();
    for (const auto &r : reports) {
        ok = ok && r.holds();
        list.push_back(report_to_json(r));
    }
    if (cfg.format == "json") {
        std::cout << json{{"reports", list}, {"all_hold", ok}}.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        std::cout << "name,order,holds,where,exponent,lhs,rhs\r\n";
        for (const auto &r : reports) {
            std::cout << csv_field(r.name) << ',' << r.order << ',' << (r.holds() ? "true" : "false");
            if (r.first_discrepancy) {
                const auto &d = *r.first_discrepancy;
                std::cout << ',' << csv_field(d.where) << ',' << d.exponent << ',' << d.lhs.get_str() << ','
                          << d.rhs.get_str();
            } else {
                std::cout << ",,,,";
            }
            std::cout << "\r\n";
        }
    } else {
        for (const auto &r : reports) {
            std::cout << (r.holds() ? "PASS " : "FAIL ") << r.name << " (order " << r.order << ")";
            if (r.first_discrepancy) {
                const auto &d = *r.first_discrepancy;
                std::cout << ": " << d.where << " differs at " << d.exponent << " (" << d.lhs.get_str()
                          << " vs " << d.rhs.get_str() << ")";
            }
            std::cout << '\n';
        }
    }
    return ok ? exit_ok : exit_failure;
}

std::optional<long> env_order()
{
    const char *v = std::getenv("QSERIES_ORDER");
    if (!v || !*v)
        return std::nullopt;
    try {
        std::size_t used = 0;
        long order = std::stol(v, &used);
        if (used != std::string(v).size() || order < 1)
            throw std::invalid_argument(v);
        return order;
    } catch (const std::exception &) {
        throw CLI::ValidationError("QSERIES_ORDER", "must be a positive integer");
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Tensor square of the basic representation of affine sl(n): multiplicities and identities"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::vector<std::string> formats = {"json", "csv", "table"};

    auto *decompose = app.add_subcommand("decompose", "Outer multiplicities b_ik with witness partitions");
    decompose->add_option("--n", cfg.n, "Rank parameter n >= 2")->required()->check(CLI::Range(2, 64));
    decompose->add_option("--max-k", cfg.max_k, "Largest k to tabulate")->check(CLI::Range(0, 1000));
    decompose->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
    decompose->add_option("--witness-cap", cfg.witness_cap, "Show at most this many witnesses per entry");

    auto *bseries = app.add_subcommand("bseries", "Generating functions B_i(q)");
    bseries->add_option("--n", cfg.n)->required()->check(CLI::Range(2, 64));
    bseries->add_option("--i", cfg.i, "Component index (default: all)");
    bseries->add_option("--order", cfg.order, "Truncation order (default: $QSERIES_ORDER or 30)")
        ->check(CLI::PositiveNumber);
    bseries->add_option("--method", cfg.method)->check(CLI::IsMember({"comb", "theta", "both"}));
    bseries->add_flag("--conjecture", cfg.conjecture, "Allow the theta construction outside the proven cases");
    bseries->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

    auto *verify = app.add_subcommand("verify", "Check identities coefficient by coefficient");
    verify->add_option("--identity", cfg.identity,
                       "sum-forms-n2|d2-product|feingold-forms|d3-square|mod15-partitions|master|triple-product|all "
                       "(numbered aliases lemma5.1..lemma5.4, theorem5.1 are accepted)");
    verify->add_option("--order", cfg.order, "Truncation order for series identities")->check(CLI::PositiveNumber);
    verify->add_option("--n", cfg.n_list, "Moduli for the master identity (default: 2..7)")
        ->check(CLI::Range(2, 64));
    verify->add_option("--max-k", cfg.max_k, "Largest k for the mod-15 counting identities")
        ->check(CLI::Range(0, 1000));
    verify->add_option("--master-order", cfg.master_order, "Order cap for the master identity under 'all'")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

    try {
        if (auto order = env_order())
            cfg.order = *order;
        cfg.max_k = 30;
        app.parse(argc, argv);
        if (decompose->parsed() && decompose->count("--max-k") == 0)
            cfg.max_k = 6;
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (decompose->parsed())
            return cmd_decompose(cfg);
        if (bseries->parsed())
            return cmd_bseries(cfg);
        return cmd_verify(cfg);
    } catch (const UnsupportedModulus &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_unsupported;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
}
