#include <cstdio>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include "stirling/stirling.hpp"
#include "support/run_cli.hpp"

using nlohmann::json;
using namespace stirling;

namespace {
BigRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}
}

TEST_CASE("poly evaluation through the command line", "[cli]") {
    const auto r = clitest::run_cli("poly --shape 1,3,1,4 --eval 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"B\": \"27\"") != std::string::npos);
    const json doc = json::parse(r.out);
    CHECK(doc.at("command") == "poly");
    CHECK(doc.at("degree") == 9);
    CHECK(doc.at("b") == "0");
}

TEST_CASE("eulerian table as CSV", "[cli]") {
    const auto r = clitest::run_cli("eulerian --shape 2,2,2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "descents,count\n1,1\n2,8\n3,6\n");
}

TEST_CASE("enumerate agrees with the word count", "[cli]") {
    const auto r = clitest::run_cli("enumerate --shape 2,2 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("count") == to_decimal(sp_count(MultisetShape::parse("2,2"))));
    CHECK(doc.at("words").size() == 3);
    CHECK(doc.at("words")[0] == "2,2,1,1");
}

TEST_CASE("coefficients round-trip through the JSON output", "[cli]") {
    const auto r = clitest::run_cli("poly --shape 2,2 --coeffs --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    const StirlingPolyPair pair = to_polynomial(MultisetShape::parse("2,2"));
    const auto& bc = doc.at("B_coefficients");
    REQUIRE(static_cast<int>(bc.size()) == pair.B.degree() + 1);
    for (int i = 0; i <= pair.B.degree(); ++i)
        CHECK(parse_rational(bc[static_cast<size_t>(i)].get<std::string>()) ==
              pair.B.coefficient(i));
    const auto& sc = doc.at("b_coefficients");
    REQUIRE(static_cast<int>(sc.size()) == pair.b.degree() + 1);
    for (int i = 0; i <= pair.b.degree(); ++i)
        CHECK(parse_rational(sc[static_cast<size_t>(i)].get<std::string>()) ==
              pair.b.coefficient(i));
}

TEST_CASE("order polynomial values through the command line", "[cli]") {
    const auto weak = clitest::run_cli("order-poly --shape 2,2 --m 3 --format json");
    REQUIRE(weak.exit_code == 0);
    CHECK(json::parse(weak.out).at("value") ==
          to_decimal(B_rec(MultisetShape::parse("2,2"), 3)));
    const auto strict = clitest::run_cli("order-poly --shape 2,2 --m 4 --strict --format json");
    REQUIRE(strict.exit_code == 0);
    CHECK(json::parse(strict.out).at("value") ==
          to_decimal(b_rec(MultisetShape::parse("2,2"), 4)));
}

TEST_CASE("output bytes are deterministic", "[cli]") {
    const std::string cmd = "verify --max-K 4 --max-m 3 --format json";
    const auto first = clitest::run_cli(cmd);
    const auto second = clitest::run_cli(cmd);
    REQUIRE(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(json::parse(first.out).at("overall") == true);
}

TEST_CASE("single verify family and plain format", "[cli]") {
    const auto r = clitest::run_cli("verify --max-K 4 --max-m 3 --only reciprocity --format plain");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("reciprocity: pass (cases=", 0) == 0);
    CHECK(r.out.find("overall: pass\n") != std::string::npos);
}

TEST_CASE("seed shapes are read from a file", "[cli]") {
    const std::string path = "cli_seed_shapes.txt";
    {
        std::ofstream out(path);
        out << "2,2\n# comment line\n\n1,3\n";
    }
    const auto r = clitest::run_cli("verify --max-K 3 --max-m 2 --seed-shapes " + path +
                                    " --format json");
    std::remove(path.c_str());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("overall") == true);
}

TEST_CASE("failure exit codes", "[cli]") {
    CHECK(clitest::run_cli("enumerate --shape 2,2,2,2,2,2,2,2").exit_code == 2);
    CHECK(clitest::run_cli("enumerate --shape 0,2").exit_code == 1);
    CHECK(clitest::run_cli("poly --shape 2 --nonsense").exit_code == 1);
    CHECK(clitest::run_cli("no-such-command").exit_code == 1);
    CHECK(clitest::run_cli("verify --only nonsense").exit_code == 1);
}
