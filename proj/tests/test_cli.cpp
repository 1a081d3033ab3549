#include <sstream>

#include "../tools/cli.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "z2r/io.hpp"
#include "z2r/search.hpp"

using namespace z2r;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string file(const char* name) { return corpus::path(name); }

std::map<std::string, std::string> key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream s(text);
    std::string line;
    while (std::getline(s, line)) {
        const auto eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

}  // namespace

TEST_CASE("check on the non-separable Type II code") {
    const Run r = run({"check", file("sd_4_2_nonsep.code")});
    REQUIRE(r.code == cli::kOk);
    const auto kv = key_values(r.out);
    CHECK(kv.at("self_dual") == "true");
    CHECK(kv.at("type") == "(4,2;2,1;2)");
    CHECK(kv.at("selfdual_type") == "TypeII");
    CHECK(kv.at("separable") == "false");
    CHECK(kv.at("separability_agree") == "true");

    const Run j = run({"check", "--json", file("sd_4_2_nonsep.code")});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["self_dual"] == true);
    CHECK(doc["selfdual_type"] == "TypeII");
}

TEST_CASE("wenum reads files and stdin") {
    const Run r = run({"wenum", file("c1.code")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "[1,0,0,0,14,0,0,0,1]\nX^8 + 14X^4Y^4 + Y^8\n");
    const Run s = run({"wenum"}, "alpha=2 beta=1\n1 1 | 0\n0 0 | u\n");
    CHECK(s.out == "[1,0,2,0,1]\nX^4 + 2X^2Y^2 + Y^4\n");
    const Run e = run({"wenum", file("sd_4_3_nonsep.code")});
    const auto expected = oracle::enumerator(4, 3, oracle::span(corpus::load("sd_4_3_nonsep.code")));
    CHECK(e.out.substr(0, e.out.find('\n')) == nlohmann::json(expected).dump());
}

TEST_CASE("std-form and dual") {
    const Run r = run({"std-form", file("sd_4_3_nonsep.code")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("type=(4,3;3,1;2)") == 0);
    const Run d = run({"dual", file("c1.code")});
    CHECK(oracle::span(parse_code_file(d.out)) == oracle::span(corpus::load("c1.code")));
}

TEST_CASE("macwilliams") {
    CHECK(run({"macwilliams", "--coeffs", "1,0,0,0,14,0,0,0,1"}).out.find("[1,0,0,0,14,0,0,0,1]") == 0);
    CHECK(run({"macwilliams", file("sd_2_1.code")}).out.find("[1,0,2,0,1]") == 0);
    CHECK(run({"macwilliams", "--coeffs", "1,1,1", "--size", "3"}).code == cli::kDomainError);
}

TEST_CASE("classify-two-weight") {
    const Run r = run({"classify-two-weight", "--n", "8"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("classes=1\n") == 0);
    const GenMatrix g = parse_code_file(r.out.substr(r.out.find("alpha=")));
    CHECK(canonical_form(span(g)) == canonical_form(span(corpus::load("two_weight_n8.code"))));
    CHECK(run({"classify-two-weight", "--n", "6"}).code == cli::kDomainError);
    CHECK(run({"classify-two-weight", "--n", "12"}).out == "classes=0\n");
}

TEST_CASE("construct") {
    const Run b = run({"construct", "buildup1", "--x", "10", "--y", "0", file("sd_2_1.code")});
    REQUIRE(b.code == cli::kOk);
    CHECK(oracle::self_dual(4, 1, oracle::span(parse_code_file(b.out))));
    const Run ds = run({"construct", "direct-sum", file("binary_8_4.code"), file("ring_0_4.code")});
    CHECK(is_self_dual(parse_code_file(ds.out)));
    const Run t = run({"construct", "theta", file("sd_2_1.code")});
    CHECK(t.out == "alpha=2 beta=1\n1 1 | 0\n0 0 | 2\n");
    const Run ti = run({"construct", "theta-inv"}, t.out);
    CHECK(ti.out == "alpha=2 beta=1\n1 1 | 0\n0 0 | u\n");
    CHECK(run({"construct", "theta", file("c1.code")}).code == cli::kDomainError);
    CHECK(run({"construct", "buildup1", "--x", "00", "--y", "0", file("sd_2_1.code")}).code ==
          cli::kDomainError);
}

TEST_CASE("search output is stable across runs and thread counts") {
    const Run a = run({"search", "--alpha", "4", "--beta", "3"});
    const Run b = run({"search", "--alpha", "4", "--beta", "3", "--threads", "3"});
    REQUIRE(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.out == run({"search", "--alpha", "4", "--beta", "3"}).out);
    std::istringstream lines(a.out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        CHECK(nlohmann::json::parse(line)["alpha"] == 4);
        ++n;
    }
    CHECK(n == enumerate_self_dual({4, 3}).size());
    const Run tw = run({"search", "--alpha", "4", "--beta", "2", "--two-weight"});
    CHECK(std::count(tw.out.begin(), tw.out.end(), '\n') == 1);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"bogus"}).code == cli::kUsageError);
    CHECK(run({"wenum", "/nonexistent/file.code"}).code == cli::kUsageError);
    const Run p = run({"wenum"}, "alpha=2 beta=1\n1 1 0\n");
    CHECK(p.code == cli::kUsageError);
    CHECK(p.err.find("line 2") != std::string::npos);
    CHECK(run({"search", "--alpha", "4", "--beta", "5"}).code == cli::kDomainError);
    CHECK(run({"--help"}).code == cli::kOk);
    const Run lim = run({"span", "--limit", "2", file("c1.code")});
    CHECK(lim.code == cli::kDomainError);
    CHECK(std::count(lim.err.begin(), lim.err.end(), '\n') == 1);
}
