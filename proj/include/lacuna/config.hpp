#pragma once

#include <cstdint>
#include <string>

#include "lacuna/lacunarity.hpp"

namespace lacuna {

struct ProblemOptions {
    std::string condition = "auto";  // auto | l1 | l2 | l3
    double radius = 1.0;
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    double precision = 1e-9;
};

// A parsed problem: curve, diagram and run options. Coefficients arrive
// as exact rationals written "p/q" (real and imaginary part separately).
struct ProblemConfig {
    ParamCurve curve;
    LacunarityDiagram diagram;
    ProblemOptions options;
};

ProblemConfig parse_config(const std::string& json_text);
ProblemConfig load_config(const std::string& path);

// Resolves the option string to a concrete condition check.
ConditionTag resolve_condition(const ProblemConfig& config);

}  // namespace lacuna
