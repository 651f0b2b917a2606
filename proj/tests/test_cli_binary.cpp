// End-to-end checks of the verify binary: exit codes and report files.
// argv[1]: path to the binary.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;

int run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kXMapConfig =
    "name = x-map-control\n"
    "curve_a = 0\n"
    "curve_b = -16\n"
    "quad_d = -1\n"
    "pencil_f = x0^2 + x1^2 - x2^2\n"
    "pencil_g = x0^2 - x1^2\n"
    "gamma_num = w2\n"
    "gamma_den = w0 - w2\n";

}  // namespace

TEST_CASE("passing run exits 0, assumptions included") {
    CHECK(run("--builtin wu-example --report /tmp/surfcert_cli_pass.txt") == 0);
    std::string text = slurp("/tmp/surfcert_cli_pass.txt");
    CHECK(text.find("modulo listed assumptions") != std::string::npos);
    CHECK(text.find("[ASSM] mordell_weil_finiteness") != std::string::npos);
}

TEST_CASE("failing run exits 1") {
    write_file("/tmp/surfcert_cli_xmap.cfg", kXMapConfig);
    CHECK(run("--config /tmp/surfcert_cli_xmap.cfg") == 1);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run("") == 2);
    CHECK(run("--builtin nope") == 2);
    write_file("/tmp/surfcert_cli_bad.cfg", "curve_a = 0\n");
    CHECK(run("--config /tmp/surfcert_cli_bad.cfg") == 2);
    CHECK(run("--config /tmp/surfcert_cli_missing_file.cfg") == 2);
    CHECK(run("--builtin wu-example --format yaml") == 2);
}

TEST_CASE("json report parses and differs from text") {
    CHECK(run("--builtin wu-example --format json --report /tmp/surfcert_cli.json") == 0);
    std::string j = slurp("/tmp/surfcert_cli.json");
    CHECK(j.find("\"schema_version\"") != std::string::npos);
    CHECK(j.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("custom config equivalent to the builtin also passes") {
    write_file("/tmp/surfcert_cli_full.cfg",
               "name = custom-run\n"
               "curve_a = 0\n"
               "curve_b = -16\n"
               "quad_d = -1\n"
               "pencil_f = x0^2 + x1^2 - x2^2\n"
               "pencil_g = x0^2 - x1^2\n"
               "gamma_num = w0*w2 + w1^2 + 16*w2^2\n"
               "gamma_den = w0*w1 + w1*w2\n"
               "prime_bound = 20\n"
               "claimed_k_points = (0:1:0)\n"
               "claimed_l_points = (0:1:0), (0:4i:1), (0:-4i:1)\n");
    CHECK(run("--config /tmp/surfcert_cli_full.cfg") == 0);
}

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];
    doctest::Context context;
    context.applyCommandLine(1, argv);
    if (g_binary.empty()) {
        std::printf("usage: test_cli_binary <path-to-verify>\n");
        return 1;
    }
    return context.run();
}
