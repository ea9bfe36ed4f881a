// End-to-end tests of the installed CLI binary. The binary path arrives as
// argv[1] from CTest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "vnhc/io.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string g_binary;
fs::path g_dir;

const char* kReferenceConfig = R"(
model = "double_pendulum"
seed = 42

[initial]
q = [0.4, 0.0]
qdot = [0.0, 10.0]
solve = [0]

[integrator]
h = 0.1
steps = 100

[derivatives]
mode = "analytic"
)";

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = g_dir / name;
    std::ofstream(p) << content;
    return p;
}

int run(const std::string& args) {
    const std::string cmd = "\"" + g_binary + "\" " + args + " > " +
                            (g_dir / "stdout.txt").string() + " 2> " +
                            (g_dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("simulate writes the full trajectory with the projected initial state") {
    const fs::path cfg = write_file("run.toml", kReferenceConfig);
    const fs::path out = g_dir / "sim_out";
    REQUIRE(run("simulate --config " + cfg.string() + " --out " + out.string()) == 0);

    const vnhc::CsvTable table = vnhc::read_csv((out / "trajectory.csv").string());
    REQUIRE(table.rows.rows() == 101);
    REQUIRE(table.header.size() == 9);
    CHECK(table.header[0] == "t");
    CHECK(table.header[1] == "q1");
    CHECK(table.header[3] == "dq1");
    CHECK(table.header[8] == "inv_residual");

    CHECK(table.rows(0, 0) == 0.0);
    CHECK(table.rows(0, 1) == 0.4);
    CHECK(table.rows(0, 2) == 0.0);
    CHECK(table.rows(0, 3) == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(table.rows(0, 4) == 10.0);
    CHECK(std::abs(table.rows(0, 7)) < 1e-10);  // phi1 after projection

    CHECK(fs::exists(out / "trajectory_summary.json"));
}

TEST_CASE("simulate with zero steps stores only the initial row") {
    std::string cfg_text = kReferenceConfig;
    const auto pos = cfg_text.find("steps = 100");
    cfg_text.replace(pos, 11, "steps = 0");
    const fs::path cfg = write_file("run0.toml", cfg_text);
    const fs::path out = g_dir / "sim_zero";
    REQUIRE(run("simulate --config " + cfg.string() + " --out " + out.string()) == 0);
    CHECK(vnhc::read_csv((out / "trajectory.csv").string()).rows.rows() == 1);
}

TEST_CASE("unconstrained model without --free is a config error") {
    const fs::path cfg = write_file("free.toml",
                                    "model = \"free_particle\"\n"
                                    "[initial]\nq = [0, 0]\nqdot = [1, 0]\n"
                                    "[integrator]\nh = 0.1\nsteps = 5\n");
    CHECK(run("simulate --config " + cfg.string() + " --out " + (g_dir / "f").string()) == 1);
    CHECK(slurp(g_dir / "stderr.txt").find("model has no constraint; use --free") !=
          std::string::npos);
    CHECK(run("simulate --free --config " + cfg.string() + " --out " +
              (g_dir / "f").string()) == 0);
}

TEST_CASE("check passes normally and fails with a corrupted control sign") {
    const fs::path cfg = write_file("run.toml", kReferenceConfig);
    const fs::path out = g_dir / "check_out";
    CHECK(run("check --config " + cfg.string() + " --samples 200 --seed 42 --out " +
              out.string()) == 0);
    CHECK(fs::exists(out / "report.json"));
    CHECK(run("check --corrupt-sign --config " + cfg.string() +
              " --samples 200 --seed 42 --out " + out.string()) == 3);
}

TEST_CASE("a one-point sweep reproduces the plain simulate run") {
    const fs::path cfg = write_file("run.toml", kReferenceConfig);
    const fs::path grid = write_file("grid.toml", "[grid]\ndq2 = [10.0]\n");
    const fs::path sweep_out = g_dir / "sweep_out";
    const fs::path sim_out = g_dir / "sweep_ref";
    REQUIRE(run("sweep --config " + cfg.string() + " --grid " + grid.string() + " --out " +
                sweep_out.string()) == 0);
    REQUIRE(run("simulate --config " + cfg.string() + " --out " + sim_out.string()) == 0);

    const vnhc::CsvTable a = vnhc::read_csv((sweep_out / "point_0.csv").string());
    const vnhc::CsvTable b = vnhc::read_csv((sim_out / "trajectory.csv").string());
    REQUIRE(a.rows.rows() == b.rows.rows());
    CHECK((a.rows - b.rows).cwiseAbs().maxCoeff() == 0.0);
    CHECK(fs::exists(sweep_out / "index.json"));
}

TEST_CASE("an empty sweep grid is a config error") {
    const fs::path cfg = write_file("run.toml", kReferenceConfig);
    const fs::path grid = write_file("empty_grid.toml", "# nothing here\n");
    CHECK(run("sweep --config " + cfg.string() + " --grid " + grid.string() + " --out " +
              (g_dir / "e").string()) == 1);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-cli-binary>\n");
        return 2;
    }
    g_binary = argv[1];
    g_dir = fs::temp_directory_path() / "vnhc_cli_tests";
    fs::create_directories(g_dir);

    doctest::Context context;
    context.applyCommandLine(1, argv);
    return context.run();
}
