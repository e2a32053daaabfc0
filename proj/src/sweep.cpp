#include "spincat/sweep.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "spincat/errors.hpp"

namespace spincat::sweep {

namespace {

constexpr double kPi = std::numbers::pi;

bool contains(const std::vector<double>& values, double v) {
    for (double x : values)
        if (x == v) return true;
    return false;
}

std::string xi_token(const XiValue& v) {
    switch (v.kind()) {
        case XiValue::Kind::Finite: return format_double(v.value());
        case XiValue::Kind::Infinite: return "inf";
        default: return "degenerate";
    }
}

std::string inv_xi_token(const XiValue& v) {
    switch (v.kind()) {
        case XiValue::Kind::Finite: return format_double(1.0 / v.value());
        case XiValue::Kind::Infinite: return "0";  // a diverging parameter inverts to zero
        default: return "degenerate";
    }
}

nlohmann::json xi_json(const XiValue& v) {
    switch (v.kind()) {
        case XiValue::Kind::Finite: return v.value();
        case XiValue::Kind::Infinite: return "inf";
        default: return "degenerate";
    }
}

double strict_parse_double(const std::string& s) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("malformed number '" + s + "'");
    return v;
}

}  // namespace

std::string validate_config(const SweepConfig& config, bool squeezing_mode) {
    if (config.twice_j < 0 || config.twice_j > kMaxTwiceJ)
        return "twice-j must be in 0.." + std::to_string(kMaxTwiceJ);
    if (config.steps < 2) return "steps must be >= 2";
    if (!(config.eta_min < config.eta_max)) return "eta-min must be < eta-max";
    if (config.theta_list.empty()) return "at least one theta is required";
    if (config.eta_scale == EtaScale::Log && !(config.eta_min > 0.0))
        return "eta-min must be > 0 with log scale";
    if ((contains(config.theta_list, kPi) || contains(config.theta_list, -kPi)) &&
        !(config.eta_min > 0.0))
        return "eta-min must be > 0 when theta = pi (the eta -> 0 superposition is degenerate)";
    if (squeezing_mode) {
        for (double t : config.theta_list)
            if (t != 0.0 && t != kPi)
                return "squeezing sweeps accept theta in {0, pi} only";
    }
    return {};
}

std::vector<double> eta_grid(const SweepConfig& config) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(config.steps));
    const int n = config.steps;
    if (config.eta_scale == EtaScale::Linear) {
        const double step = (config.eta_max - config.eta_min) / (n - 1);
        for (int i = 0; i < n; ++i) grid.push_back(config.eta_min + step * i);
    } else {
        const double ratio = std::log(config.eta_max / config.eta_min) / (n - 1);
        for (int i = 0; i < n; ++i) grid.push_back(config.eta_min * std::exp(ratio * i));
    }
    grid.back() = config.eta_max;
    return grid;
}

std::vector<G2Row> run_g2_sweep(const SweepConfig& config) {
    std::vector<G2Row> rows;
    for (double eta : eta_grid(config)) {
        for (double theta : config.theta_list) {
            G2Row row{eta, theta, config.twice_j, true, 0.0};
            try {
                row.g2 = g2({config.twice_j, Complex(eta, 0.0), theta});
            } catch (const UndefinedCorrelationError&) {
                row.defined = false;
            } catch (const DegenerateSuperpositionError&) {
                row.defined = false;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<SqueezeRow> run_squeezing_sweep(const SweepConfig& config) {
    std::vector<SqueezeRow> rows;
    for (double eta : eta_grid(config)) {
        for (double theta : config.theta_list) {
            try {
                const XiTriple xi =
                    xi_xyz_closedform({config.twice_j, Complex(eta, 0.0), theta});
                rows.push_back({eta, theta, config.twice_j, xi.x, xi.y});
            } catch (const DegenerateSuperpositionError&) {
                rows.push_back({eta, theta, config.twice_j, XiValue::degenerate(),
                                XiValue::degenerate()});
            }
        }
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return {buf, ptr};
}

double parse_theta(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty theta token");
    const auto pos = token.find("pi");
    if (pos == std::string::npos) return strict_parse_double(token);

    double factor = 1.0;
    if (pos > 0) {
        const std::string head = token.substr(0, pos);
        factor = (head == "-") ? -1.0 : strict_parse_double(head);
    }
    double divisor = 1.0;
    if (pos + 2 < token.size()) {
        const std::string tail = token.substr(pos + 2);
        if (tail.size() < 2 || tail[0] != '/')
            throw std::invalid_argument("malformed theta '" + token + "'");
        divisor = strict_parse_double(tail.substr(1));
        if (divisor == 0.0) throw std::invalid_argument("theta divisor is zero");
    }
    const double v = factor * kPi / divisor;
    // keep the exact double for the snapped phases
    if (factor == 1.0 && divisor == 1.0) return kPi;
    if (factor == -1.0 && divisor == 1.0) return -kPi;
    return v;
}

std::vector<double> parse_theta_list(const std::string& csv) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const auto comma = csv.find(',', start);
        const std::string token =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_theta(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Complex parse_eta(const std::string& token) {
    const auto at = token.find('@');
    if (at == std::string::npos) return {strict_parse_double(token), 0.0};
    const double r = strict_parse_double(token.substr(0, at));
    const double phi = strict_parse_double(token.substr(at + 1));
    return std::polar(r, phi);
}

void write_g2_csv(std::ostream& os, const std::vector<G2Row>& rows,
                  const std::string& header_args) {
    os << "# generated-by spincat " << SPINCAT_VERSION << "; args: " << header_args << "\n";
    os << "eta_abs,theta,twice_j,g2\n";
    for (const auto& r : rows) {
        os << format_double(r.eta_abs) << ',' << format_double(r.theta) << ',' << r.twice_j
           << ',' << (r.defined ? format_double(r.g2) : std::string("nan")) << "\n";
    }
}

void write_g2_json(std::ostream& os, const std::vector<G2Row>& rows, const SweepConfig& config,
                   const std::string& header_args) {
    nlohmann::json doc;
    doc["params"] = {{"generated_by", std::string("spincat ") + SPINCAT_VERSION},
                     {"args", header_args},
                     {"twice_j", config.twice_j},
                     {"columns", {"eta_abs", "theta", "twice_j", "g2"}}};
    auto& out_rows = doc["rows"] = nlohmann::json::array();
    auto& markers = doc["markers"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        nlohmann::json cell;
        if (r.defined)
            cell = r.g2;
        else {
            cell = nullptr;
            markers.push_back({{"row", i}, {"column", "g2"}, {"marker", "nan"}});
        }
        out_rows.push_back({r.eta_abs, r.theta, r.twice_j, cell});
    }
    os << doc.dump(2) << "\n";
}

void write_squeezing_csv(std::ostream& os, const std::vector<SqueezeRow>& rows,
                         const std::string& header_args) {
    os << "# generated-by spincat " << SPINCAT_VERSION << "; args: " << header_args << "\n";
    os << "eta_abs,theta,twice_j,xi_x2,xi_y2,inv_xi_x2,inv_xi_y2\n";
    for (const auto& r : rows) {
        os << format_double(r.eta_abs) << ',' << format_double(r.theta) << ',' << r.twice_j
           << ',' << xi_token(r.xi_x2) << ',' << xi_token(r.xi_y2) << ','
           << inv_xi_token(r.xi_x2) << ',' << inv_xi_token(r.xi_y2) << "\n";
    }
}

void write_squeezing_json(std::ostream& os, const std::vector<SqueezeRow>& rows,
                          const SweepConfig& config, const std::string& header_args) {
    nlohmann::json doc;
    doc["params"] = {{"generated_by", std::string("spincat ") + SPINCAT_VERSION},
                     {"args", header_args},
                     {"twice_j", config.twice_j},
                     {"columns",
                      {"eta_abs", "theta", "twice_j", "xi_x2", "xi_y2", "inv_xi_x2",
                       "inv_xi_y2"}}};
    auto& out_rows = doc["rows"] = nlohmann::json::array();
    auto& markers = doc["markers"] = nlohmann::json::array();
    auto emit = [&](std::size_t row, const char* column, const XiValue& v) -> nlohmann::json {
        if (!v.is_finite())
            markers.push_back({{"row", row},
                               {"column", column},
                               {"marker", v.kind() == XiValue::Kind::Infinite ? "inf"
                                                                              : "degenerate"}});
        return xi_json(v);
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        nlohmann::json jx = emit(i, "xi_x2", r.xi_x2);
        nlohmann::json jy = emit(i, "xi_y2", r.xi_y2);
        nlohmann::json ix = r.xi_x2.is_finite() ? nlohmann::json(1.0 / r.xi_x2.value())
                            : r.xi_x2.kind() == XiValue::Kind::Infinite
                                ? nlohmann::json(0.0)
                                : nlohmann::json("degenerate");
        nlohmann::json iy = r.xi_y2.is_finite() ? nlohmann::json(1.0 / r.xi_y2.value())
                            : r.xi_y2.kind() == XiValue::Kind::Infinite
                                ? nlohmann::json(0.0)
                                : nlohmann::json("degenerate");
        out_rows.push_back({r.eta_abs, r.theta, r.twice_j, jx, jy, ix, iy});
    }
    os << doc.dump(2) << "\n";
}

}  // namespace spincat::sweep
