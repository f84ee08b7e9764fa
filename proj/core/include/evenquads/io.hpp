#pragma once

#include "evenquads/cap.hpp"
#include "evenquads/census.hpp"
#include "evenquads/classify.hpp"
#include "evenquads/deck.hpp"
#include "evenquads/enumerate.hpp"
#include "evenquads/structure.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace evenquads {

using Json = nlohmann::json;

/// Cap file: {"n": 6, "points": ["000000", "000001", ...]}. Points may also
/// be integers; order is irrelevant on read and sorted on write.
[[nodiscard]] Cap parse_cap_file(std::string_view text);
[[nodiscard]] std::string write_cap_file(const Cap& cap);

/// {"value": 49, "binary": "110001", "row": 4, "col": 5}
[[nodiscard]] Json point_json(const Point& p);
/// Accepts an integer or a binary/decimal string.
[[nodiscard]] Point point_from_json(const Json& j, int n);

[[nodiscard]] Json exclude_entry_json(const ExcludeEntry& e);
[[nodiscard]] Json class_json(const CapClass& c);
[[nodiscard]] Json structure_json(const StructureReport& r);
/// Counts are emitted as decimal strings to stay exact.
[[nodiscard]] Json census_row_json(const CensusRow& row);
[[nodiscard]] Json probability_json(const std::vector<ProbabilityRow>& rows, int n);
[[nodiscard]] Json enumeration_json(const EnumerationResult& r);
[[nodiscard]] Json card_json(const Card& c);

} // namespace evenquads
