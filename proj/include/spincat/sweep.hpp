#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spincat/squeezing.hpp"

namespace spincat::sweep {

enum class EtaScale { Linear, Log };
enum class OutputFormat { Csv, Json };

struct SweepConfig {
    int twice_j = 0;
    std::vector<double> theta_list;
    double eta_min = 0.05;
    double eta_max = 3.0;
    int steps = 120;
    EtaScale eta_scale = EtaScale::Linear;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path = "-";  // "-" means stdout
};

/// Empty string when valid, otherwise a usage-error message.
std::string validate_config(const SweepConfig& config, bool squeezing_mode);

/// The |eta| grid implied by the config (inclusive endpoints).
std::vector<double> eta_grid(const SweepConfig& config);

struct G2Row {
    double eta_abs;
    double theta;
    int twice_j;
    bool defined;
    double g2;
};

struct SqueezeRow {
    double eta_abs;
    double theta;
    int twice_j;
    XiValue xi_x2;
    XiValue xi_y2;
};

std::vector<G2Row> run_g2_sweep(const SweepConfig& config);
std::vector<SqueezeRow> run_squeezing_sweep(const SweepConfig& config);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// "0", "pi", "pi/2", "3pi/4", or plain radians. Throws std::invalid_argument.
double parse_theta(const std::string& token);
std::vector<double> parse_theta_list(const std::string& csv);

/// "r" (real) or "r@phi" (polar, radians). Throws std::invalid_argument.
Complex parse_eta(const std::string& token);

// writers; header_args is the verbatim flag string recorded in the output
void write_g2_csv(std::ostream& os, const std::vector<G2Row>& rows,
                  const std::string& header_args);
void write_g2_json(std::ostream& os, const std::vector<G2Row>& rows, const SweepConfig& config,
                   const std::string& header_args);
void write_squeezing_csv(std::ostream& os, const std::vector<SqueezeRow>& rows,
                         const std::string& header_args);
void write_squeezing_json(std::ostream& os, const std::vector<SqueezeRow>& rows,
                          const SweepConfig& config, const std::string& header_args);

}  // namespace spincat::sweep
