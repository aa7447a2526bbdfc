#pragma once

#include "hookswap/bijections.hpp"
#include "hookswap/qseries.hpp"

#include <json.hpp>

namespace hookswap {

// Partitions and cells are embedded as their text encodings ("5,3,1", "x,y").

[[nodiscard]] nlohmann::ordered_json to_json(const StatTuple& s);
[[nodiscard]] nlohmann::ordered_json to_json(const PointedPartition& pp);
/// {"A","B","C","D","E","a","l","m"}
[[nodiscard]] nlohmann::ordered_json to_json(const Quintuple& q);
/// {"At","B","Ct","D","E","a","l","m"}
[[nodiscard]] nlohmann::ordered_json to_json(const TildeQuintuple& tq);
/// {"max_degree", "coeffs": [...], "series": "c0 + c1*q + ..."}
[[nodiscard]] nlohmann::ordered_json to_json(const QSeries& s);

[[nodiscard]] Quintuple quintuple_from_json(const nlohmann::json& j);
[[nodiscard]] TildeQuintuple tilde_quintuple_from_json(const nlohmann::json& j);

} // namespace hookswap
