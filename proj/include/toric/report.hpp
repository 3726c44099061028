#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/families.hpp"
#include "toric/model.hpp"

namespace toric {

struct CommandOptions {
    std::optional<std::size_t> root;        ///< index into the global root list
    std::optional<std::size_t> orientation; ///< l0 as a 0-based ray index
};

/// Every root of the model's divisor, grouped by (sigma, l) in the order of
/// interior_ray_pairs and then by u in descending lexicographic order.
std::vector<Root> all_roots(const Model& model);

const std::vector<std::string>& command_names();

/// Builds the machine-readable report. Throws DomainError on mathematical
/// failures (missing polynomial, non-nef divisor, bad root index, ...).
nlohmann::json run_command(const std::string& command, const Model& model, const CommandOptions& opts);

/// Stable plain-text rendering of a report.
std::string render_text(const nlohmann::json& report);

} // namespace toric
