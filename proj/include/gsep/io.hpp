#pragma once

#include "gsep/covariance.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace gsep::io {

/// [q, p] = i, vacuum covariance Identity / 2.
inline constexpr std::string_view kConvention = "hbar1-vacuum-half";

std::vector<std::string> ordering_labels(int n_modes);

/// {"convention", "ordering", "mean", "matrix"}.
nlohmann::json state_to_json(const GaussianState &state);

/// Rejects documents without the convention string; "mean" defaults to zeros.
GaussianState state_from_json(const nlohmann::json &doc);

/// Parse failures carry the line/column reported by the JSON parser.
GaussianState read_state(const std::filesystem::path &path);
void write_state(const std::filesystem::path &path, const GaussianState &state);

/// Sorted keys, no whitespace, floats printed with %.17g; non-finite values become null.
std::string canonical_dump(const nlohmann::json &value);

}  // namespace gsep::io
