#include "tensorsq/render.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tensorsq {

namespace {

std::size_t shown(const MultiplicityEntry &e, std::optional<std::size_t> cap)
{
    return cap ? std::min(*cap, e.count()) : e.count();
}

std::string witness_list(const MultiplicityEntry &e, std::optional<std::size_t> cap)
{
    std::string s;
    const std::size_t visible = shown(e, cap);
    for (std::size_t w = 0; w < visible; ++w) {
        if (w)
            s += ' ';
        s += e.witnesses[w].to_string();
    }
    if (visible < e.count())
        s += (s.empty() ? "+" : " +") + std::to_string(e.count() - visible) + " more";
    return s;
}

} // namespace

nlohmann::json table_to_json(const MultiplicityTable &table, std::optional<std::size_t> witness_cap)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &e : table.entries()) {
        nlohmann::json witnesses = nlohmann::json::array();
        const std::size_t visible = shown(e, witness_cap);
        for (std::size_t w = 0; w < visible; ++w) {
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto &pp : e.witnesses[w].pairs())
                pairs.push_back({pp.part, pp.mult});
            witnesses.push_back(std::move(pairs));
        }
        nlohmann::json entry = {{"i", e.label.i}, {"k", e.label.k}, {"b", e.count()}, {"witnesses", witnesses}};
        if (visible < e.count())
            entry["more"] = e.count() - visible;
        entries.push_back(std::move(entry));
    }
    return {{"n", table.modulus()}, {"max_k", table.max_k()}, {"entries", std::move(entries)}};
}

MultiplicityTable table_from_json(const nlohmann::json &j)
{
    const int n = j.at("n").get<int>();
    std::vector<MultiplicityEntry> entries;
    for (const auto &e : j.at("entries")) {
        if (e.contains("more") && e.at("more").get<std::size_t>() > 0)
            throw std::invalid_argument("table JSON has omitted witnesses");
        MultiplicityEntry entry{{e.at("i").get<int>(), e.at("k").get<int>()}, {}};
        for (const auto &w : e.at("witnesses")) {
            std::vector<PartPair> pairs;
            for (const auto &pp : w)
                pairs.push_back({pp.at(0).get<int>(), pp.at(1).get<int>()});
            Partition p(std::move(pairs));
            if (!in_C_n(p, n) || !(classify_maximal(p, n) == entry.label))
                throw std::invalid_argument("witness " + p.to_string() + " does not belong to its entry");
            entry.witnesses.push_back(std::move(p));
        }
        if (entry.count() != e.at("b").get<std::size_t>())
            throw std::invalid_argument("witness count disagrees with b");
        entries.push_back(std::move(entry));
    }
    return MultiplicityTable(n, j.at("max_k").get<int>(), std::move(entries));
}

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string table_to_csv(const MultiplicityTable &table, std::optional<std::size_t> witness_cap)
{
    std::string out = "i,k,b,witnesses\r\n";
    for (const auto &e : table.entries())
        out += std::to_string(e.label.i) + ',' + std::to_string(e.label.k) + ',' + std::to_string(e.count()) +
               ',' + csv_field(witness_list(e, witness_cap)) + "\r\n";
    return out;
}

std::string table_to_text(const MultiplicityTable &table, std::optional<std::size_t> witness_cap)
{
    std::ostringstream os;
    os << "n = " << table.modulus() << ", k <= " << table.max_k() << '\n';
    os << std::setw(3) << "i" << std::setw(5) << "k" << std::setw(8) << "b" << "  witnesses\n";
    for (const auto &e : table.entries())
        os << std::setw(3) << e.label.i << std::setw(5) << e.label.k << std::setw(8) << e.count() << "  "
           << witness_list(e, witness_cap) << '\n';
    return os.str();
}

nlohmann::json report_to_json(const IdentityReport &r)
{
    nlohmann::json j = {{"name", r.name}, {"order", r.order}, {"holds", r.holds()}};
    if (r.first_discrepancy) {
        const auto &d = *r.first_discrepancy;
        j["first_discrepancy"] = {
            {"where", d.where}, {"exponent", d.exponent}, {"lhs", d.lhs.get_str()}, {"rhs", d.rhs.get_str()}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    return j;
}

nlohmann::json coefficients_json(const QSeries &s)
{
    nlohmann::json out = nlohmann::json::array();
    for (long e = 0; e < s.order(); ++e)
        out.push_back(s.coeff(e).get_str());
    return out;
}

} // namespace tensorsq
