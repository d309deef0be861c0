#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SVF_CLI_PATH
#error "SVF_CLI_PATH must point at the command line binary"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(SVF_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("svf_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli.eval") {
    TEST_CASE("applies a field to a polynomial") {
        RunResult r = run_cli("eval --sig 1,1 --field 'd(t)' --arg 't^2'");
        CHECK(r.status == 0);
        CHECK(r.output == "2*t\n");
    }

    TEST_CASE("squares of odd variables vanish") {
        RunResult r = run_cli("eval --sig 1,1 --field 'theta1*d(t)' --arg 't*theta1'");
        CHECK(r.status == 0);
        CHECK(r.output == "0\n");
    }

    TEST_CASE("malformed input exits 2 and shows the span") {
        RunResult r = run_cli("eval --sig 1,1 --field 'd(t)' --arg 't^^2'");
        CHECK(r.status == 2);
        CHECK(contains(r.output, "parse error"));
        CHECK(contains(r.output, "bytes"));
    }

    TEST_CASE("unknown variables exit 2") {
        RunResult r = run_cli("eval --sig 1,0 --field 'd(t)' --arg 'theta1'");
        CHECK(r.status == 2);
        CHECK(contains(r.output, "parse error"));
    }

    TEST_CASE("degenerate signatures exit 2") {
        RunResult r = run_cli("eval --sig 0,0 --field '0' --arg '1'");
        CHECK(r.status == 2);
        RunResult bad = run_cli("eval --sig 1:1 --field '0' --arg '1'");
        CHECK(bad.status == 2);
    }
}

TEST_SUITE("cli.bracket") {
    TEST_CASE("coordinate bracket") {
        RunResult r = run_cli("bracket --sig 1,0 'd(t)' 't*d(t)'");
        CHECK(r.status == 0);
        CHECK(r.output == "d(t)\n");
    }

    TEST_CASE("odd Euler bracket") {
        RunResult r = run_cli("bracket --sig 0,1 'theta1*d(theta1)' 'd(theta1)'");
        CHECK(r.status == 0);
        CHECK(r.output == "-d(theta1)\n");
    }

    TEST_CASE("square-zero operator self-bracket") {
        RunResult r = run_cli("bracket --sig 0,1 'd(theta1)' 'd(theta1)'");
        CHECK(r.status == 0);
        CHECK(r.output == "0\n");
    }
}

TEST_SUITE("cli.certify") {
    TEST_CASE("even line produces a verified document") {
        auto doc = temp_file("even.json");
        RunResult r = run_cli("certify --sig 1,0 --eta 't^2*d(t)' --nu 't^5*d(t)' --out '" +
                              doc.string() + "'");
        CHECK(r.status == 0);
        CHECK(contains(r.output, "VERIFIED"));
        CHECK(contains(r.output, "trace:"));
        CHECK(contains(r.output, "prop-lower"));
        CHECK(std::filesystem::exists(doc));

        RunResult v = run_cli("verify '" + doc.string() + "'");
        CHECK(v.status == 0);
        CHECK(v.output == "VERIFIED\n");
        std::filesystem::remove(doc);
    }

    TEST_CASE("mixed signature certificate verifies") {
        auto doc = temp_file("mixed.json");
        RunResult r = run_cli("certify --sig 1,1 --eta 'theta1*d(t)' --nu 'd(theta1)' --out '" +
                              doc.string() + "'");
        CHECK(r.status == 0);
        CHECK(contains(r.output, "VERIFIED"));
        RunResult v = run_cli("verify '" + doc.string() + "'");
        CHECK(v.status == 0);
        std::filesystem::remove(doc);
    }

    TEST_CASE("purely odd signatures are pointed at the scan") {
        RunResult r = run_cli("certify --sig 0,2 --eta 'd(theta1)' --nu 'd(theta2)'");
        CHECK(r.status == 2);
        CHECK(contains(r.output, "scan-wn"));
    }

    TEST_CASE("zero seed exits 2") {
        RunResult r = run_cli("certify --sig 1,0 --eta '0' --nu 'd(t)'");
        CHECK(r.status == 2);
    }

    TEST_CASE("unwritable output path exits 2") {
        RunResult r = run_cli(
            "certify --sig 1,0 --eta 'd(t)' --nu 'd(t)' --out /nonexistent-dir/x.json");
        CHECK(r.status == 2);
        CHECK(contains(r.output, "cannot write"));
    }
}

TEST_SUITE("cli.verify") {
    TEST_CASE("edited coefficient exits 1 with the node path") {
        auto doc = temp_file("tamper.json");
        RunResult r = run_cli("certify --sig 1,0 --eta 't^2*d(t)' --nu 't^5*d(t)' --out '" +
                              doc.string() + "'");
        REQUIRE(r.status == 0);

        std::string text = slurp(doc);
        std::size_t key = text.find("\"coeff\": \"");
        REQUIRE(key != std::string::npos);
        std::size_t begin = key + std::string("\"coeff\": \"").size();
        std::size_t end = text.find('"', begin);
        REQUIRE(end != std::string::npos);
        std::string original = text.substr(begin, end - begin);
        text.replace(begin, end - begin, original == "9/7" ? "8/7" : "9/7");
        spit(doc, text);

        RunResult v = run_cli("verify '" + doc.string() + "'");
        CHECK(v.status == 1);
        CHECK(contains(v.output, "MISMATCH at root"));
        std::filesystem::remove(doc);
    }

    TEST_CASE("truncated document exits 2") {
        auto doc = temp_file("trunc.json");
        RunResult r = run_cli("certify --sig 1,0 --eta 'd(t)' --nu 't*d(t)' --out '" +
                              doc.string() + "'");
        REQUIRE(r.status == 0);
        std::string text = slurp(doc);
        spit(doc, text.substr(0, text.size() / 2));
        RunResult v = run_cli("verify '" + doc.string() + "'");
        CHECK(v.status == 2);
        CHECK(contains(v.output, "document error"));
        std::filesystem::remove(doc);
    }

    TEST_CASE("missing file exits 2") {
        RunResult v = run_cli("verify /nonexistent-dir/missing.json");
        CHECK(v.status == 2);
        CHECK(contains(v.output, "cannot read"));
    }
}

TEST_SUITE("cli.scan") {
    TEST_CASE("one odd variable has a proper ideal") {
        RunResult r = run_cli("scan-wn --s 1 --trials 2 --seed 3");
        CHECK(r.status == 0);
        CHECK(contains(r.output, "proper ideal found: d(theta1)"));
        CHECK(contains(r.output, "seed=3"));
    }

    TEST_CASE("two odd variables scan clean") {
        RunResult r = run_cli("scan-wn --s 2 --trials 5 --seed 7");
        CHECK(r.status == 0);
        CHECK(contains(r.output, "no proper ideal found among tested generators; dim 8"));
    }

    TEST_CASE("fixed seeds give byte-identical reports") {
        RunResult a = run_cli("scan-wn --s 2 --trials 6 --seed 11");
        RunResult b = run_cli("scan-wn --s 2 --trials 6 --seed 11");
        RunResult c = run_cli("scan-wn --s 2 --trials 6 --seed 12");
        CHECK(a.status == 0);
        CHECK(a.output == b.output);
        CHECK(a.output != c.output);
    }

    TEST_CASE("writes the ideal document when asked") {
        auto doc = temp_file("ideal.json");
        RunResult r = run_cli("scan-wn --s 1 --trials 0 --seed 1 --out '" + doc.string() + "'");
        CHECK(r.status == 0);
        CHECK(contains(slurp(doc), "d(theta1)"));
        std::filesystem::remove(doc);
    }

    TEST_CASE("zero odd variables is a usage error") {
        RunResult r = run_cli("scan-wn --s 0");
        CHECK(r.status == 2);
    }
}

TEST_SUITE("cli.usage") {
    TEST_CASE("missing subcommand exits 2") {
        RunResult r = run_cli("");
        CHECK(r.status == 2);
    }

    TEST_CASE("help exits 0") {
        RunResult r = run_cli("--help");
        CHECK(r.status == 0);
        CHECK(contains(r.output, "certify"));
    }
}
