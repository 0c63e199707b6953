#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "polder/boundary.hpp"
#include "polder/cli.hpp"
#include "polder/core.hpp"
#include "polder/polarizability.hpp"
#include "polder/three_body.hpp"
#include "polder/two_body.hpp"

using namespace polder;

namespace {

doctest::Approx rel(double want, double tol) {
    return doctest::Approx(want).epsilon(tol).scale(0.0);
}

constexpr const char* kUnitAtom =
    R"({"name":"unit","transitions":[{"k":1.0,"mu2":1.5}]})";

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun result;
    result.code = run_cli(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

struct Csv {
    std::multimap<std::string, std::string> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string meta(const std::string& key) const {
        const auto it = metadata.find(key);
        REQUIRE(it != metadata.end());
        return it->second;
    }
    std::string cell(std::size_t row, const std::string& column) const {
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (columns[c] == column) return rows.at(row).at(c);
        FAIL("no column named ", column);
        return {};
    }
    double num(std::size_t row, const std::string& column) const {
        return std::stod(cell(row, column));
    }
};

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::stringstream stream(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const std::size_t colon = line.find(": ");
            REQUIRE(colon != std::string::npos);
            csv.metadata.emplace(line.substr(2, colon - 2),
                                 line.substr(colon + 2));
        } else if (!header_seen) {
            csv.columns = split_commas(line);
            header_seen = true;
        } else {
            csv.rows.push_back(split_commas(line));
        }
    }
    REQUIRE(header_seen);
    return csv;
}

}  // namespace

TEST_CASE("help and parse failures") {
    const CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("two-body") != std::string::npos);
    CHECK(help.out.find("accelerated") != std::string::npos);
    CHECK(help.err.empty());

    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"atom-wall", "--alpha", "1.0"}).code == 2);  // missing --z
    CHECK(run({"atom-wall", "--alpha", "1.0", "--z", "1.0", "--bogus"}).code ==
          2);
}

TEST_CASE("two-body command") {
    const std::vector<std::string> args{"two-body", "--atom-a", kUnitAtom,
                                        "--atom-b", kUnitAtom, "--r", "0.002"};
    const CliRun first = run(args);
    REQUIRE(first.code == 0);
    const Csv csv = parse_csv(first.out);
    CHECK(csv.meta("artifact") == std::string("polder ") + kVersion);
    CHECK(csv.meta("command") == "two-body");
    CHECK(csv.meta("config-hash").size() == 16);
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.cell(0, "regime") == "near");
    CHECK(csv.cell(0, "scaling") == "r^-6");

    const PolarizabilityModel unit =
        PolarizabilityModel::from_transitions({{1.0, 1.5}});
    const EnergyResult direct = cp_full(
        PairSpec{unit, unit, FieldKind::Electric, FieldKind::Electric, 0.002});
    CHECK(csv.cell(0, "energy") == format_number(direct.value));

    SUBCASE("byte-identical across repeated runs") {
        CHECK(run(args).out == first.out);
        std::vector<std::string> json_args = args;
        json_args.push_back("--format");
        json_args.push_back("json");
        const CliRun j1 = run(json_args);
        REQUIRE(j1.code == 0);
        CHECK(j1.out == run(json_args).out);
        CHECK(j1.out.find("\"config-hash\"") != std::string::npos);
    }

    SUBCASE("config hash tracks semantics, not presentation") {
        const std::string base_hash = csv.meta("config-hash");

        std::vector<std::string> json_args = args;
        json_args.push_back("--format");
        json_args.push_back("json");
        const CliRun as_json = run(json_args);
        CHECK(as_json.out.find(base_hash) != std::string::npos);

        std::vector<std::string> moved = args;
        moved[6] = "0.003";  // different separation
        const CliRun other_r = run(moved);
        CHECK(parse_csv(other_r.out).meta("config-hash") != base_hash);

        std::vector<std::string> tighter = args;
        tighter.push_back("--rel-tol");
        tighter.push_back("1e-12");
        CHECK(parse_csv(run(tighter).out).meta("config-hash") != base_hash);
    }

    SUBCASE("electric-magnetic pair uses the far closed form") {
        const std::string magnetic =
            R"({"name":"m","static":0.5,"kind":"magnetic"})";
        const CliRun em = run({"two-body", "--atom-a", kUnitAtom, "--atom-b",
                               magnetic, "--r", "25.0"});
        REQUIRE(em.code == 0);
        const Csv table = parse_csv(em.out);
        CHECK(table.num(0, "energy") ==
              rel(cp_far_electric_magnetic(1.0, 0.5, 25.0), 1e-15));
        CHECK(table.cell(0, "scaling") == "r^-7");
    }
}

TEST_CASE("output redirection") {
    const std::string path = "cli_test_output.csv";
    std::remove(path.c_str());
    const std::vector<std::string> base{"atom-wall", "--alpha", "1.0",
                                        "--z", "2.0"};
    const CliRun direct = run(base);
    REQUIRE(direct.code == 0);

    std::vector<std::string> redirected = base;
    redirected.push_back("--output");
    redirected.push_back(path);
    const CliRun filed = run(redirected);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());

    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == direct.out);
    // Same semantics -> same hash regardless of destination.
    CHECK(parse_csv(buffer.str()).meta("config-hash") ==
          parse_csv(direct.out).meta("config-hash"));
    std::remove(path.c_str());

    CHECK(run({"atom-wall", "--alpha", "1.0", "--z", "2.0", "--output",
               "no/such/dir/file.csv"})
              .code == 2);
}

TEST_CASE("unit systems rescale the table consistently") {
    auto table_for = [](const char* units) {
        const CliRun r = run({"atom-wall", "--alpha", "1.0", "--z", "2.0",
                              "--units", units});
        REQUIRE(r.code == 0);
        return parse_csv(r.out);
    };
    const Csv natural = table_for("natural");
    const Csv atomic = table_for("atomic");
    const Csv si = table_for("si");

    const UnitSystem au = atomic_units();
    CHECK(natural.num(0, "energy") / atomic.num(0, "energy") ==
          rel(au.factor(QuantityKind::Energy), 1e-12));
    CHECK(natural.num(0, "z") / atomic.num(0, "z") ==
          rel(au.factor(QuantityKind::Length), 1e-12));

    // F = 4 E / z for the z^-4 potential, in any display system.
    for (const Csv* t : {&natural, &atomic, &si}) {
        CHECK(t->num(0, "force") * t->num(0, "z") / t->num(0, "energy") ==
              rel(4.0, 1e-12));
        CHECK(t->cell(0, "character") == "attractive");
    }

    CHECK(run({"atom-wall", "--alpha", "1", "--z", "1", "--units", "cgs"})
              .code == 2);
}

TEST_CASE("pair-near-plate command matches the library") {
    const CliRun r = run({"pair-near-plate", "--alpha-a", "1.2", "--alpha-b",
                          "0.7", "--pos-a", "0,0,1", "--pos-b", "1.5,0,1"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    const PlatePairResult lib =
        pair_near_plate(1.2, 0.7, Vec3{0, 0, 1}, Vec3{1.5, 0, 1});
    CHECK(csv.cell(0, "direct") == format_number(lib.direct));
    CHECK(csv.cell(0, "image") == format_number(lib.image));
    CHECK(csv.cell(0, "cross") == format_number(lib.cross));
    CHECK(csv.cell(0, "total") == format_number(lib.total.value));

    CHECK(run({"pair-near-plate", "--alpha-a", "1", "--alpha-b", "1",
               "--pos-a", "0,0,-1", "--pos-b", "1,0,1"})
              .code == 2);
    CHECK(run({"pair-near-plate", "--alpha-a", "1", "--alpha-b", "1",
               "--pos-a", "0,0,1", "--pos-b", "not-a-triple"})
              .code == 2);
}

TEST_CASE("three-body command") {
    SUBCASE("far mode at the unit equilateral triangle") {
        const CliRun r = run({"three-body", "--atom-a", kUnitAtom, "--atom-b",
                              kUnitAtom, "--atom-c", kUnitAtom, "--pos-a",
                              "0,0,0", "--pos-b", "1,0,0", "--pos-c",
                              "0.5,0.8660254037844386,0", "--far"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.num(0, "energy") == rel(1264.0 / (243.0 * kPi), 1e-6));
        CHECK(csv.cell(0, "regime") == "far");
    }

    SUBCASE("conflicting and missing flags") {
        CHECK(run({"three-body", "--atom-a", kUnitAtom, "--atom-b", kUnitAtom,
                   "--atom-c", kUnitAtom, "--pos-a", "0,0,0", "--pos-b",
                   "1,0,0", "--pos-c", "0,1,0", "--far", "--excited"})
                  .code == 2);
        // --excited without --k0/--dipole-a
        CHECK(run({"three-body", "--atom-b", kUnitAtom, "--atom-c", kUnitAtom,
                   "--pos-a", "0,0,0", "--pos-b", "1,0,0", "--pos-c", "0,1,0",
                   "--excited"})
                  .code == 2);
        // full mode without --atom-a
        CHECK(run({"three-body", "--atom-b", kUnitAtom, "--atom-c", kUnitAtom,
                   "--pos-a", "0,0,0", "--pos-b", "1,0,0", "--pos-c", "0,1,0"})
                  .code == 2);
        // degenerate triangle (two coincident atoms)
        CHECK(run({"three-body", "--atom-a", kUnitAtom, "--atom-b", kUnitAtom,
                   "--atom-c", kUnitAtom, "--pos-a", "0,0,0", "--pos-b",
                   "0,0,0", "--pos-c", "2,0,0", "--far"})
                  .code == 2);
    }
}

TEST_CASE("correlation command cross-checks the direct route") {
    const CliRun r = run({"correlation", "--atom-a", kUnitAtom, "--atom-b",
                          kUnitAtom, "--r", "1.0"});
    REQUIRE(r.code == 0);
    const Csv csv = parse_csv(r.out);
    CHECK(csv.num(0, "deviation") < 1e-6);
    const PolarizabilityModel unit =
        PolarizabilityModel::from_transitions({{1.0, 1.5}});
    const EnergyResult direct = cp_full(
        PairSpec{unit, unit, FieldKind::Electric, FieldKind::Electric, 1.0});
    CHECK(csv.num(0, "energy") == rel(direct.value, 1e-9));
}

TEST_CASE("resonance command") {
    const std::vector<std::string> base{"resonance",  "--k0",       "1.0",
                                        "--dipole-a", "0.6,0,0",    "--dipole-b",
                                        "0.6,0,0",    "--r-vec",    "0,0,0.001"};
    const CliRun sym = run(base);
    REQUIRE(sym.code == 0);
    const Csv csv = parse_csv(sym.out);
    CHECK(csv.num(0, "energy") == rel(0.36 / 1e-9, 1e-4));
    CHECK(csv.cell(0, "parity") == "symmetric");
    CHECK(csv.cell(0, "regime") == "near");

    std::vector<std::string> anti = base;
    anti.push_back("--parity");
    anti.push_back("antisymmetric");
    const CliRun flipped = run(anti);
    REQUIRE(flipped.code == 0);
    CHECK(parse_csv(flipped.out).num(0, "energy") ==
          rel(-csv.num(0, "energy"), 1e-14));

    std::vector<std::string> bad_parity = base;
    bad_parity.push_back("--parity");
    bad_parity.push_back("upside-down");
    CHECK(run(bad_parity).code == 2);
}

TEST_CASE("energy-density command") {
    SUBCASE("plate mode") {
        const CliRun r = run({"energy-density", "--plate", "--z", "1.0"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        const double want = 3.0 / (32.0 * kPi * kPi);
        CHECK(csv.num(0, "electric_density") == rel(want, 1e-15));
        CHECK(csv.num(0, "magnetic_density") == rel(-want, 1e-15));
        CHECK(run({"energy-density", "--plate"}).code == 2);  // z defaults to 0
    }

    SUBCASE("atom mode with the far representation") {
        const CliRun r = run({"energy-density", "--atom", kUnitAtom, "--r",
                              "2.0", "--representation", "far"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.num(0, "electric_density") ==
              rel(23.0 / (16.0 * kPi * kPi * 128.0), 1e-15));
        CHECK(csv.cell(0, "representation") == "far-closed-form");
        CHECK(run({"energy-density", "--atom", kUnitAtom, "--r", "2.0",
                   "--representation", "sideways"})
                  .code == 2);
        CHECK(run({"energy-density"}).code == 2);
    }
}

TEST_CASE("accelerated command") {
    SUBCASE("scalar beyond regime") {
        const CliRun r = run({"accelerated", "--a", "1.0", "--z", "10.0",
                              "--scalar", "--omega0", "1.0"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        const double pi4 = kPi * kPi * kPi * kPi;
        CHECK(csv.num(0, "value") == rel(-1.0 / (512.0 * pi4 * 1e4), 1e-12));
        CHECK(csv.cell(0, "regime") == "accelerated-beyond");
        CHECK(csv.num(0, "t_unruh") == rel(1.0 / (2.0 * kPi), 1e-12));
    }

    SUBCASE("scalar thermal regime reports laws, no value") {
        const CliRun r = run({"accelerated", "--a", "1.0", "--z", "0.05",
                              "--scalar", "--omega0", "1.0"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.cell(0, "value").empty());
        CHECK(csv.cell(0, "regime") == "accelerated-thermal");
        CHECK(csv.metadata.count("scaling") == 4);
    }

    SUBCASE("electromagnetic mode at a cosine node") {
        const double z = std::exp(kPi);
        const CliRun r = run({"accelerated", "--a", "1.0", "--z",
                              format_number(z), "--k0", "1.0", "--dipole-a",
                              "0,0,1", "--dipole-b", "0,0,1"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.num(0, "energy") == rel(2.0 / (z * z), 1e-9));
        CHECK(csv.num(0, "phase") == rel(2.0 * kPi, 1e-12));
    }

    SUBCASE("configuration failures") {
        CHECK(run({"accelerated", "--a", "1.0", "--z", "10.0", "--scalar"})
                  .code == 2);  // missing omega0
        CHECK(run({"accelerated", "--a", "1.0", "--z", "10.0"}).code == 2);
        CHECK(run({"accelerated", "--a", "1.0", "--z", "5.0", "--k0", "1.0",
                   "--dipole-a", "0,0,1", "--dipole-b", "0,0,1"})
                  .code == 2);  // below 10 z_a
    }
}

TEST_CASE("scan command") {
    SUBCASE("atom-wall scan carries exact interior slopes") {
        const CliRun r = run({"scan", "--computation", "atom-wall", "--alpha",
                              "1.0", "--start", "1.0", "--stop", "4.0",
                              "--points", "5"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        REQUIRE(csv.rows.size() == 5);
        CHECK(csv.cell(0, "log_slope").empty());
        CHECK(csv.cell(4, "log_slope").empty());
        for (std::size_t i = 1; i <= 3; ++i) {
            CHECK(csv.num(i, "log_slope") == rel(-4.0, 1e-12));
            CHECK(csv.cell(i, "status") == "ok");
        }
    }

    SUBCASE("starved quadrature marks points failed and exits 3") {
        // Legal-but-unreachable tolerances starve every point numerically;
        // the table is still emitted with all rows marked failed.
        const CliRun r = run({"scan", "--computation", "two-body", "--atom-a",
                              kUnitAtom, "--atom-b", kUnitAtom, "--start",
                              "0.5", "--stop", "2.0", "--points", "3",
                              "--max-subdivisions", "10", "--rel-tol",
                              "1e-300", "--abs-tol", "1e-300"});
        CHECK(r.code == 3);
        const Csv csv = parse_csv(r.out);
        REQUIRE(csv.rows.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(csv.cell(i, "status") == "failed");
            CHECK(csv.cell(i, "value").empty());
        }
    }

    SUBCASE("malformed numerical spec is a configuration error") {
        // A spec that cannot succeed at any point is rejected before the
        // sweep starts instead of producing a table of failed rows.
        CHECK(run({"scan", "--computation", "two-body", "--atom-a", kUnitAtom,
                   "--atom-b", kUnitAtom, "--start", "0.5", "--stop", "2.0",
                   "--points", "3", "--max-subdivisions", "1"})
                  .code == 2);
        CHECK(run({"scan", "--computation", "two-body", "--atom-a", kUnitAtom,
                   "--atom-b", kUnitAtom, "--start", "0.5", "--stop", "2.0",
                   "--points", "3", "--rel-tol", "0.5"})
                  .code == 2);
    }

    SUBCASE("grid validation") {
        CHECK(run({"scan", "--computation", "atom-wall", "--start", "2.0",
                   "--stop", "1.0", "--points", "3"})
                  .code == 2);
        CHECK(run({"scan", "--computation", "atom-wall", "--start", "1.0",
                   "--stop", "2.0", "--points", "1"})
                  .code == 2);
        CHECK(run({"scan", "--computation", "atom-wall", "--start", "0.0",
                   "--stop", "2.0", "--points", "3"})
                  .code == 2);  // log spacing needs start > 0
        CHECK(run({"scan", "--computation", "atom-wall", "--start", "1.0",
                   "--stop", "2.0", "--points", "3", "--spacing", "cubic"})
                  .code == 2);
        CHECK(run({"scan", "--computation", "warp-drive", "--start", "1.0",
                   "--stop", "2.0", "--points", "3"})
                  .code == 2);
    }
}

TEST_CASE("crossover command") {
    SUBCASE("retardation onset for unit atoms") {
        const CliRun r = run({"crossover", "--atom-a", kUnitAtom, "--atom-b",
                              kUnitAtom, "--threshold", "0.1"});
        REQUIRE(r.code == 0);
        const Csv csv = parse_csv(r.out);
        CHECK(csv.num(0, "crossover_r") == rel(0.8165252367845534, 1e-6));
        CHECK(csv.num(0, "lambda_min") == rel(2.0 * kPi, 1e-12));
        CHECK(csv.num(0, "r_over_lambda") ==
              rel(0.8165252367845534 / (2.0 * kPi), 1e-6));

        const CliRun r2 = run({"crossover", "--atom-a", kUnitAtom, "--atom-b",
                               kUnitAtom, "--threshold", "0.2"});
        REQUIRE(r2.code == 0);
        CHECK(parse_csv(r2.out).num(0, "crossover_r") ==
              rel(1.400419336159645, 1e-6));
    }

    SUBCASE("unreachable threshold exits with a configuration error") {
        const CliRun r = run({"crossover", "--atom-a", kUnitAtom, "--atom-b",
                              kUnitAtom, "--threshold", "1.5"});
        CHECK(r.code == 2);
        CHECK(r.err.find("never crossed") != std::string::npos);
    }

    SUBCASE("input validation") {
        CHECK(run({"crossover", "--atom-a", kUnitAtom, "--atom-b", kUnitAtom,
                   "--threshold", "0.0"})
                  .code == 2);
        const std::string static_atom = R"({"name":"s","static":1.0})";
        CHECK(run({"crossover", "--atom-a", static_atom, "--atom-b", kUnitAtom})
                  .code == 2);
    }
}

TEST_CASE("atom descriptions from files and inline text") {
    const std::string path = "cli_test_atom.json";
    {
        std::ofstream file(path);
        file << kUnitAtom;
    }
    const CliRun from_file =
        run({"atom-wall", "--alpha", "1", "--z", "1"});  // no atom needed
    REQUIRE(from_file.code == 0);

    const CliRun by_path = run({"two-body", "--atom-a", path, "--atom-b",
                                kUnitAtom, "--r", "0.002"});
    REQUIRE(by_path.code == 0);
    const CliRun inline_both = run({"two-body", "--atom-a", kUnitAtom,
                                    "--atom-b", kUnitAtom, "--r", "0.002"});
    CHECK(parse_csv(by_path.out).cell(0, "energy") ==
          parse_csv(inline_both.out).cell(0, "energy"));
    std::remove(path.c_str());

    CHECK(run({"two-body", "--atom-a", "missing.json", "--atom-b", kUnitAtom,
               "--r", "1.0"})
              .code == 2);
    CHECK(run({"two-body", "--atom-a", R"({"name":"broken"})", "--atom-b",
               kUnitAtom, "--r", "1.0"})
              .code == 2);
    CHECK(run({"two-body", "--atom-a", R"(not json at all)", "--atom-b",
               kUnitAtom, "--r", "1.0"})
              .code == 2);
}
