#pragma once

#include <string>
#include <vector>

#include "spincat/squeezing.hpp"

namespace spincat {

enum class GridPreset { Small, Default, Large };

GridPreset parse_grid_preset(const std::string& name);

struct VerifyOptions {
    GridPreset preset = GridPreset::Default;
    double rtol = 1e-9;  // per-sample pass: |dev| <= max(rtol/10, rtol * |oracle|)
};

struct QuantityStats {
    std::string name;
    double max_abs_dev = 0.0;
    double max_rel_dev = 0.0;
    long samples = 0;
    long failures = 0;
};

struct VerifyReport {
    std::vector<QuantityStats> quantities;
    long points = 0;
    bool pass = true;
};

/// Sweeps the closed forms against brute-force matrix expectations over a
/// parameter grid and reports the worst deviation per quantity. Ladder
/// residual rows compare against zero, so they pass on the absolute
/// tolerance alone.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace spincat
