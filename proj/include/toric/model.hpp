#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polynomial.hpp"
#include "toric/semiample.hpp"

namespace toric {

/// Malformed or invalid model input. `location` is "line N" for syntax
/// errors and a JSON path (e.g. "/cones/3") for semantic ones.
class ModelParseError : public std::runtime_error {
public:
    ModelParseError(std::string location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

struct Model {
    std::string name;
    Fan fan = Fan::from_cones(1, {}, {});
    TorusDivisor divisor;                 ///< defaults to all ones
    std::optional<Polynomial> polynomial;
    std::string canonical_json;           ///< sorted keys, no whitespace
    std::string hash;                     ///< FNV-1a 64 of canonical_json, hex
};

Model parse_model(const std::string& text);
Model load_model(const std::string& path);

std::vector<std::string> preset_names();
/// JSON text of a built-in model.
std::string preset_json(const std::string& name);
Model preset(const std::string& name);

/// Exact rational from "p", "-p" or "p/q".
Rational parse_rational(const std::string& s);

} // namespace toric
