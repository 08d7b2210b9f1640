#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run dw_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return std::string(DW_EXAMPLES_DIR) + "/" + name; }

std::vector<nlohmann::json> lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

std::string temp_file(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST_CASE("delta command") {
    auto r = dw_run({"delta", example("delta_cusp.json")});
    REQUIRE(r.code == 0);
    auto js = lines(r.out);
    REQUIRE(js.size() == 1);
    CHECK(js[0]["delta"] == 1);
    CHECK(js[0]["stabilized"] == true);
    CHECK(js[0]["semigroup_gaps"] == 1);

    r = dw_run({"delta", example("delta_catalog.json")});
    REQUIRE(r.code == 0);
    js = lines(r.out);
    std::vector<int> deltas;
    for (const auto& j : js) {
        deltas.push_back(j["delta"].get<int>());
        CHECK(j["additive"] == true);
    }
    CHECK(deltas == std::vector<int>{0, 1, 1, 2, 3});

    r = dw_run({"delta", "--text", example("delta_cusp.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("delta = 1") != std::string::npos);
}

TEST_CASE("exit codes") {
    auto r = dw_run({"delta", example("delta_non_primitive.json")});
    CHECK(r.code == 2);
    CHECK(r.err.find("branch_primitive") != std::string::npos);
    CHECK(r.err.find("singularities[0].branches[0]") != std::string::npos);

    CHECK(dw_run({"curve", example("curve_inconsistent_conic.json")}).code == 2);
    CHECK(dw_run({"model-verify", example("model_negative_rank.json")}).code == 2);
    CHECK(dw_run({"delta", example("does_not_exist.json")}).code == 2);
    CHECK(dw_run({"frobnicate"}).code == 2);
    CHECK(dw_run({"delta", example("ledger_curve.json")}).code == 2);

    auto broken = temp_file("dw_cli_broken.json", "{\"kind\": \"delta\",\n  \"singularities\": [}");
    r = dw_run({"delta", broken});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    auto slow = temp_file("dw_cli_slow.json",
                          R"({"kind": "delta", "singularities": [{"branches": [{"x": [[2, "1"]], "y": [[41, "1"]]}]}]})");
    r = dw_run({"delta", "--truncation", "4", "--max-truncation", "8", slow});
    CHECK(r.code == 3);
    r = dw_run({"delta", slow});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[0]["delta"] == 20);
}

TEST_CASE("curve command") {
    auto r = dw_run({"curve", example("curve_nodal_cubic.json")});
    REQUIRE(r.code == 0);
    auto j = lines(r.out).at(0);
    CHECK(j["p_a"] == 1);
    CHECK(j["g"] == 0);
    CHECK(j["chi"] == 0);

    r = dw_run({"curve", example("curve_three_nodal_quartic.json")});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).at(0)["chi"] == -2);

    r = dw_run({"curve", "--text", example("curve_smooth_conic.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("arithmetic genus") != std::string::npos);
}

TEST_CASE("ledger command") {
    auto r = dw_run({"ledger", example("ledger_surface.json")});
    REQUIRE(r.code == 0);
    auto j = lines(r.out).at(0);
    CHECK(j["chi"] == 2);
    CHECK(j["alternative"]["chi"] == 0);

    r = dw_run({"ledger", example("ledger_curve.json")});
    REQUIRE(r.code == 0);
    CHECK_FALSE(lines(r.out).at(0).contains("alternative"));
}

TEST_CASE("model-verify command") {
    auto r = dw_run({"model-verify", example("model_single.json")});
    REQUIRE(r.code == 0);
    auto js = lines(r.out);
    REQUIRE(js.size() == 1);
    CHECK(js[0]["index"] == 0);
    CHECK(js[0]["pass"] == true);

    auto sweep = temp_file("dw_cli_sweep.json", R"({"kind": "model", "sweep": {"count": 12, "seed": 5}})");
    auto serial = dw_run({"model-verify", sweep});
    auto parallel = dw_run({"model-verify", "--jobs", "3", sweep});
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(lines(serial.out).size() == 12);

    auto text = dw_run({"model-verify", "--text", sweep});
    CHECK(text.out.find("12/12 specs passed") != std::string::npos);

    ::setenv("DW_SEED_OVERRIDE", "12345", 1);
    auto overridden = dw_run({"model-verify", example("model_single.json")});
    ::unsetenv("DW_SEED_OVERRIDE");
    REQUIRE(overridden.code == 0);
    CHECK(lines(overridden.out)[0]["spec"]["seed"] == 12345);

    ::setenv("DW_SEED_OVERRIDE", "not-a-seed", 1);
    CHECK(dw_run({"model-verify", example("model_single.json")}).code == 2);
    ::unsetenv("DW_SEED_OVERRIDE");
}
