#pragma once

#include <string>
#include <vector>

#include "rossby/model.hpp"

namespace rossby {

struct SweepRow {
    double value = 0.0;  // swept parameter
    double M = 0.0;      // NaN when invalid or under the resonance guard
    double num = 0.0;
    double den = 0.0;
    bool valid = false;     // family constraints satisfied at this value
    bool resonant = false;  // |den| under the resonance tolerance
};

struct SweepResult {
    std::string parameter;
    std::vector<SweepRow> rows;
    std::vector<double> resonances;  // denominator roots refined by bisection
};

// Tabulates M and its denominator while "k_z" or "K_r" sweeps [from, to] in
// `samples` equal steps, and locates every denominator sign change.
// Throws BadParameter on an empty range or samples < 2.
SweepResult sweep_parameter(const FamilySpec& family, const PhysicalParams& phys,
                            const std::string& parameter, double from, double to,
                            int samples);

// CSV with header <parameter>,M,denominator,resonant.
void write_sweep_csv(const SweepResult& result, const std::string& path);

}  // namespace rossby
