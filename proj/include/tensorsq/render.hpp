#ifndef TENSORSQ_RENDER_HPP
#define TENSORSQ_RENDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tensorsq/identities.hpp"
#include "tensorsq/multiplicity.hpp"

namespace tensorsq {

/*
 * Decomposition tables on the wire:
 *
 *   {"n": 3, "max_k": 7,
 *    "entries": [{"i": 0, "k": 2, "b": 1, "witnesses": [[[4,1],[1,2]]]}, ...]}
 *
 * A witness is a list of [part, multiplicity] pairs; the null partition is [].
 * When a witness cap hides some witnesses, the entry carries "more": m.
 */
nlohmann::json table_to_json(const MultiplicityTable &table, std::optional<std::size_t> witness_cap = {});

// Inverse of table_to_json for uncapped output; throws on malformed input
// or when witnesses were omitted.
MultiplicityTable table_from_json(const nlohmann::json &j);

// Columns i,k,b,witnesses; witnesses space-separated in "(4,1^2)" notation.
std::string table_to_csv(const MultiplicityTable &table, std::optional<std::size_t> witness_cap = {});
std::string table_to_text(const MultiplicityTable &table, std::optional<std::size_t> witness_cap = {});

// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

nlohmann::json report_to_json(const IdentityReport &r);

// Coefficients from exponent 0 to order-1 as decimal strings.
nlohmann::json coefficients_json(const QSeries &s);

} // namespace tensorsq

#endif
