#include <cstdlib>
#include <numbers>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "spincat/sweep.hpp"

using namespace spincat;
using namespace spincat::sweep;

namespace {

constexpr double kPi = std::numbers::pi;

SweepConfig base_config() {
    SweepConfig config;
    config.twice_j = 6;
    config.theta_list = {0.0, kPi / 2, kPi};
    config.eta_min = 0.05;
    config.eta_max = 3.0;
    config.steps = 120;
    return config;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK(validate_config(base_config(), false).empty());

    SweepConfig bad = base_config();
    bad.steps = 1;
    CHECK_FALSE(validate_config(bad, false).empty());

    bad = base_config();
    bad.eta_min = 3.0;
    CHECK_FALSE(validate_config(bad, false).empty());

    bad = base_config();
    bad.eta_min = 0.0;  // theta list contains pi
    CHECK_FALSE(validate_config(bad, false).empty());

    bad = base_config();
    bad.theta_list = {0.0};
    bad.eta_min = 0.0;
    CHECK(validate_config(bad, false).empty());

    bad = base_config();
    bad.theta_list.clear();
    CHECK_FALSE(validate_config(bad, false).empty());

    // squeezing mode restricts theta to {0, pi}
    SweepConfig sq = base_config();
    sq.theta_list = {0.0, kPi};
    CHECK(validate_config(sq, true).empty());
    sq.theta_list = {0.0, kPi / 2};
    CHECK_FALSE(validate_config(sq, true).empty());

    bad = base_config();
    bad.eta_scale = EtaScale::Log;
    bad.theta_list = {0.0};
    bad.eta_min = 0.0;
    CHECK_FALSE(validate_config(bad, false).empty());
}

TEST_CASE("eta grid") {
    SweepConfig config = base_config();
    const auto grid = eta_grid(config);
    REQUIRE(grid.size() == 120);
    CHECK(grid.front() == 0.05);
    CHECK(grid.back() == 3.0);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);

    config.eta_scale = EtaScale::Log;
    config.eta_min = 0.01;
    config.eta_max = 100.0;
    config.steps = 5;
    const auto log_grid = eta_grid(config);
    REQUIRE(log_grid.size() == 5);
    CHECK(log_grid.front() == 0.01);
    CHECK(log_grid.back() == 100.0);
    CHECK(log_grid[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("theta parsing") {
    CHECK(parse_theta("0") == 0.0);
    CHECK(parse_theta("pi") == kPi);
    CHECK(parse_theta("-pi") == -kPi);
    CHECK(parse_theta("pi/2") == kPi / 2);
    CHECK(parse_theta("3pi/4") == 3.0 * kPi / 4.0);
    CHECK(parse_theta("1.25") == 1.25);
    CHECK(parse_theta("2pi") == doctest::Approx(2.0 * kPi));

    CHECK_THROWS_AS(parse_theta(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta("pie"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta("pi/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theta("1.2.3"), std::invalid_argument);

    const auto list = parse_theta_list("0,pi/2,pi");
    REQUIRE(list.size() == 3);
    CHECK(list[0] == 0.0);
    CHECK(list[1] == kPi / 2);
    CHECK(list[2] == kPi);
    CHECK_THROWS_AS(parse_theta_list("0,,pi"), std::invalid_argument);
}

TEST_CASE("eta parsing") {
    CHECK(parse_eta("1") == Complex(1.0, 0.0));
    CHECK(parse_eta("0.5") == Complex(0.5, 0.0));
    const Complex polar = parse_eta("2@1.5707963267948966");
    CHECK(std::abs(polar - Complex(0.0, 2.0)) < 1e-15);
    CHECK_THROWS_AS(parse_eta("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_eta("1@"), std::invalid_argument);
    CHECK_THROWS_AS(parse_eta("@1"), std::invalid_argument);
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.0, 0.05, 1.0 / 3.0, -2.5e-17, 1e300, 3.141592653589793, 123456.789}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("g2 sweep rows") {
    SweepConfig config = base_config();
    config.steps = 10;
    const auto rows = run_g2_sweep(config);
    REQUIRE(rows.size() == 30);  // eta-major, theta within
    CHECK(rows[0].eta_abs == 0.05);
    CHECK(rows[0].theta == 0.0);
    CHECK(rows[1].theta == kPi / 2);
    CHECK(rows[2].theta == kPi);
    for (const auto& r : rows) CHECK(r.defined);

    // eta = 0 with theta = 0 is the vacuum: correlation undefined
    SweepConfig with_zero = base_config();
    with_zero.theta_list = {0.0};
    with_zero.eta_min = 0.0;
    with_zero.eta_max = 1.0;
    with_zero.steps = 3;
    const auto zrows = run_g2_sweep(with_zero);
    CHECK_FALSE(zrows[0].defined);
    CHECK(zrows[1].defined);
}

TEST_CASE("g2 csv output") {
    SweepConfig config = base_config();
    config.theta_list = {0.0};
    config.eta_min = 0.0;
    config.eta_max = 1.0;
    config.steps = 3;
    std::ostringstream os;
    write_g2_csv(os, run_g2_sweep(config), "g2-sweep --test");
    const auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[0].starts_with("# generated-by spincat "));
    CHECK(lines[0].ends_with("args: g2-sweep --test"));
    CHECK(lines[1] == "eta_abs,theta,twice_j,g2");
    CHECK(lines[2] == "0,0,6,nan");
    CHECK(lines[3].starts_with("0.5,0,6,"));
}

TEST_CASE("g2 json output") {
    SweepConfig config = base_config();
    config.theta_list = {0.0};
    config.eta_min = 0.0;
    config.eta_max = 1.0;
    config.steps = 3;
    std::ostringstream os;
    write_g2_json(os, run_g2_sweep(config), config, "g2-sweep --test");
    const auto doc = nlohmann::json::parse(os.str());
    REQUIRE(doc.contains("params"));
    REQUIRE(doc.contains("rows"));
    REQUIRE(doc.contains("markers"));
    CHECK(doc["params"]["twice_j"] == 6);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0][3].is_null());
    REQUIRE(doc["markers"].size() == 1);
    CHECK(doc["markers"][0]["row"] == 0);
    CHECK(doc["markers"][0]["marker"] == "nan");
}

TEST_CASE("squeezing sweep near the j = 1 optimum") {
    SweepConfig config = base_config();
    config.twice_j = 2;
    config.theta_list = {0.0};
    const auto rows = run_squeezing_sweep(config);
    double best_inv = 0.0;
    for (const auto& r : rows) {
        REQUIRE(r.xi_y2.is_finite());  // 1.0 is not a grid point here
        best_inv = std::max(best_inv, 1.0 / r.xi_y2.value());
    }
    CHECK(best_inv == doctest::Approx(2.0).epsilon(5e-3));
}

TEST_CASE("squeezing csv markers") {
    SweepConfig config;
    config.twice_j = 2;
    config.theta_list = {0.0};
    config.eta_min = 0.5;
    config.eta_max = 1.5;
    config.steps = 3;  // grid 0.5, 1.0, 1.5 hits the divergence exactly
    std::ostringstream os;
    write_squeezing_csv(os, run_squeezing_sweep(config), "squeezing-sweep --test");
    const auto lines = split_lines(os.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[1] == "eta_abs,theta,twice_j,xi_x2,xi_y2,inv_xi_x2,inv_xi_y2");
    CHECK(lines[3] == "1,0,2,inf,degenerate,0,degenerate");

    std::ostringstream js;
    write_squeezing_json(js, run_squeezing_sweep(config), config, "squeezing-sweep --test");
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["rows"][1][3] == "inf");
    CHECK(doc["rows"][1][4] == "degenerate");
    CHECK(doc["rows"][1][5] == 0.0);
    bool saw_inf = false, saw_degenerate = false;
    for (const auto& m : doc["markers"]) {
        if (m["marker"] == "inf") saw_inf = true;
        if (m["marker"] == "degenerate") saw_degenerate = true;
    }
    CHECK(saw_inf);
    CHECK(saw_degenerate);
}

TEST_CASE("writers are deterministic") {
    SweepConfig config = base_config();
    config.steps = 25;
    std::ostringstream a, b;
    write_g2_csv(a, run_g2_sweep(config), "same-args");
    write_g2_csv(b, run_g2_sweep(config), "same-args");
    CHECK(a.str() == b.str());
}
