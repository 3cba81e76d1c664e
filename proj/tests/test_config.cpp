#include "wsnsim/config_io.hpp"
#include "wsnsim/experiment.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <string>

using namespace wsnsim;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("wsnsim_cfg_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".cfg");
        std::ofstream out(path);
        out << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("empty config file yields the built-in defaults") {
    TempFile file("");
    const NetworkConfig cfg = load_config(file.path);
    CHECK(cfg.node_count == 100);
    CHECK(cfg.initial_energy == 0.5);
    CHECK(cfg.field_width == 100.0);
    CHECK(cfg.field_height == 100.0);
    CHECK(cfg.bs.static_pos.x == 50.0);
    CHECK(cfg.bs.static_pos.y == 200.0);
    CHECK(cfg.energy.packet_bits == 4000);
    CHECK(cfg.p == 0.05);
    CHECK(cfg.protocol == Protocol::Leach);
    CHECK(cfg.heterogeneity == Heterogeneity::Homogeneous);
}

TEST_CASE("keys parse, comments and overrides work") {
    TempFile file("# comment line\n"
                  "node_count = 60\n"
                  "e_amp = 0.659e-9  # inline comment\n"
                  "protocol = proposed\n"
                  "heterogeneity = half_doubled\n"
                  "bs_mode = orbit\n"
                  "node_count = 80\n");
    const NetworkConfig cfg = load_config(file.path);
    CHECK(cfg.node_count == 80); // later key wins
    CHECK(cfg.energy.e_amp == 0.659e-9);
    CHECK(cfg.protocol == Protocol::Proposed);
    CHECK(cfg.heterogeneity == Heterogeneity::HalfDoubled);
    CHECK(cfg.bs.mode == BsMotion::Mode::Orbit);
}

TEST_CASE("validation error names the key and constraint") {
    TempFile file("p = 1.5\n");
    try {
        load_config(file.path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        const std::string what = err.what();
        CHECK(what.find("p must lie in (0,1)") != std::string::npos);
    }
}

TEST_CASE("unknown keys report the line number") {
    TempFile file("node_count = 50\nbogus_key = 3\n");
    try {
        load_config(file.path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        const std::string what = err.what();
        CHECK(what.find(":2") != std::string::npos);
        CHECK(what.find("bogus_key") != std::string::npos);
    }
}

TEST_CASE("malformed values are rejected") {
    TempFile file("node_count = many\n");
    CHECK_THROWS_AS(load_config(file.path), ConfigError);
    TempFile file2("protocol = dsr\n");
    CHECK_THROWS_AS(load_config(file2.path), ConfigError);
    TempFile file3("no equals sign here\n");
    CHECK_THROWS_AS(load_config(file3.path), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/wsnsim.cfg"), ConfigError);
}

TEST_CASE("apply_setting covers the base-station fields") {
    NetworkConfig cfg;
    apply_setting(cfg, "bs_x", "10");
    apply_setting(cfg, "bs_y", "-20");
    apply_setting(cfg, "orbit_radius", "120");
    apply_setting(cfg, "orbit_revs_per_round", "0.25");
    apply_setting(cfg, "orbit_center_x", "40");
    apply_setting(cfg, "orbit_center_y", "60");
    apply_setting(cfg, "orbit_start_angle", "1.5");
    apply_setting(cfg, "seed", "12345");
    apply_setting(cfg, "max_rounds", "77");
    apply_setting(cfg, "d0", "90");
    apply_setting(cfg, "e_amp_far", "2e-15");
    CHECK(cfg.bs.static_pos.x == 10.0);
    CHECK(cfg.bs.static_pos.y == -20.0);
    CHECK(cfg.bs.orbit_radius == 120.0);
    CHECK(cfg.bs.revs_per_round == 0.25);
    CHECK(cfg.bs.orbit_center.x == 40.0);
    CHECK(cfg.bs.orbit_center.y == 60.0);
    CHECK(cfg.bs.start_angle == 1.5);
    CHECK(cfg.seed == 12345);
    CHECK(cfg.max_rounds == 77);
    CHECK(cfg.energy.d0 == 90.0);
    CHECK(cfg.energy.e_amp_far == 2e-15);
    CHECK_THROWS_AS(apply_setting(cfg, "nope", "1"), ConfigError);
}

TEST_CASE("experiment presets map to the four scenarios") {
    NetworkConfig cfg;
    apply_preset(cfg, 1);
    CHECK(cfg.bs.mode == BsMotion::Mode::Static);
    CHECK(cfg.heterogeneity == Heterogeneity::Homogeneous);
    apply_preset(cfg, 2);
    CHECK(cfg.bs.mode == BsMotion::Mode::Static);
    CHECK(cfg.heterogeneity == Heterogeneity::HalfDoubled);
    apply_preset(cfg, 3);
    CHECK(cfg.bs.mode == BsMotion::Mode::Orbit);
    CHECK(cfg.heterogeneity == Heterogeneity::Homogeneous);
    apply_preset(cfg, 4);
    CHECK(cfg.bs.mode == BsMotion::Mode::Orbit);
    CHECK(cfg.heterogeneity == Heterogeneity::HalfDoubled);
    CHECK_THROWS_AS(apply_preset(cfg, 5), ConfigError);
}

TEST_CASE("protocol names") {
    CHECK(protocol_from_string("leach") == Protocol::Leach);
    CHECK(protocol_from_string("eleach") == Protocol::Eleach);
    CHECK(protocol_from_string("proposed") == Protocol::Proposed);
    try {
        protocol_from_string("aodv");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(std::string(err.what()).find("aodv") != std::string::npos);
    }
}
