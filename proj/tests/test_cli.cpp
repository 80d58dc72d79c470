// End-to-end tests run the installed binary through /bin/sh and compare
// captured stdout byte for byte. COINSTACK_CLI_PATH is injected by the build.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = {}) {
    const std::string cmd = env_prefix + "\"" COINSTACK_CLI_PATH "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace

TEST_CASE("series text output") {
    const auto r = run("series --denoms 2,5 --n 7 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "0 1\n"
          "1 0\n"
          "2 1\n"
          "3 0\n"
          "4 1\n"
          "5 1\n"
          "6 1\n"
          "7 2\n");
}

TEST_CASE("series csv output") {
    auto r = run("series --denoms 1 --n 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,1\n1,1\n2,1\n3,1\n");

    r = run("series --denoms 2,5 --n 7 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,1\n1,0\n2,1\n3,0\n4,1\n5,1\n6,1\n7,2\n");
}

TEST_CASE("series json envelope is stable byte for byte") {
    const auto first = run("series --denoms 2,5 --n 7 --format json");
    const auto second = run("series --denoms 2,5 --n 7 --format json");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == R"json({
  "command": "series",
  "denominations": "2,5",
  "result": {
    "n": "7",
    "terms": [
      "1",
      "0",
      "1",
      "0",
      "1",
      "1",
      "1",
      "2"
    ]
  }
})json" "\n");
    // re-serializing the parsed document reproduces the exact bytes
    const auto doc = nlohmann::json::parse(first.out);
    CHECK(doc.dump(2) + "\n" == first.out);
}

TEST_CASE("series json lists fibonacci-pattern terms") {
    const auto r = run("series --denoms 1,2 --n 5 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["terms"] == nlohmann::json({"1", "1", "2", "3", "5", "8"}));
}

TEST_CASE("decide reports the count and sets the exit code") {
    auto r = run("decide --denoms 2,5 --target 7 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "representable, count 2\n");

    r = run("decide --denoms 2,5 --target 0 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "representable, count 1\n");  // the empty stack

    r = run("decide --denoms 2,5 --target 3 --format text");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "not-representable\n");

    r = run("decide --denoms 2,5 --target 7 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7,representable,2\n");

    r = run("decide --denoms 2,5 --target 3 --format csv");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "3,not-representable,0\n");

    r = run("decide --denoms 2,5 --target 7 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == R"json({
  "command": "decide",
  "denominations": "2,5",
  "result": {
    "e_value": "2",
    "representable": true,
    "target": "7"
  }
})json" "\n");
}

TEST_CASE("frobenius text outputs and exit codes") {
    auto r = run("frobenius --denoms 2,5 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "finite 3\ncertificate 4..5\n");

    r = run("frobenius --denoms 4,6 --format text");
    CHECK(r.exit_code == 4);
    CHECK(r.out == "infinite_gap\n");

    r = run("frobenius --denoms 1,7 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "all_representable none (all amounts representable)\ncertificate 0..0\n");
}

TEST_CASE("frobenius json carries the certificate") {
    const auto r = run("frobenius --denoms 6,9,20 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["kind"] == "finite");
    CHECK(doc["result"]["value"] == "43");
    CHECK(doc["result"]["certificate"]["first"] == "44");
    CHECK(doc["result"]["certificate"]["length"] == "6");
}

TEST_CASE("genfunc text output") {
    const std::string expected =
        "P: -1\n"
        "Q: -1 + x^2 + x^5\n"
        "G: 1 / (1 - x^2 - x^5)\n";
    auto r = run("genfunc --denoms 2,5 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == expected);

    // the literal numerator collapses, so both forms print the same thing
    r = run("genfunc --denoms 2,5 --form literal --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == expected);

    r = run("genfunc --denoms 1 --form literal --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "P: -1\nQ: -1 + x\nG: 1 / (1 - x)\n");

    r = run("genfunc --denoms 1,2 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "P: -1\nQ: -1 + x + x^2\nG: 1 / (1 - x - x^2)\n");
}

TEST_CASE("genfunc csv and json outputs") {
    auto r = run("genfunc --denoms 2,5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "P,0,-1\nQ,0,-1\nQ,2,1\nQ,5,1\n");

    r = run("genfunc --denoms 2,5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == R"json({
  "command": "genfunc",
  "denominations": "2,5",
  "result": {
    "P": [
      "-1"
    ],
    "Q": [
      "-1",
      "0",
      "1",
      "0",
      "0",
      "1"
    ],
    "form": "simplified",
    "normalized": "1 / (1 - x^2 - x^5)"
  }
})json" "\n");
}

TEST_CASE("bad input exits with 2") {
    CHECK(run("series --denoms 0,5 --n 3").exit_code == 2);
    CHECK(run("series --denoms '' --n 3").exit_code == 2);
    CHECK(run("series --denoms 2,x5 --n 3").exit_code == 2);
    CHECK(run("series --denoms 2,5 --n 3 --format yaml").exit_code == 2);
    CHECK(run("series --denoms 2,5").exit_code == 2);  // --n is required
    CHECK(run("").exit_code == 2);                     // a subcommand is required
    CHECK(run("nonsense --denoms 2,5").exit_code == 2);
}

TEST_CASE("work limits exit with 3") {
    const auto r = run("series --denoms 2,5 --n 100 --format text", "COINSTACK_MAX_WORK=10 ");
    CHECK(r.exit_code == 3);
    CHECK(r.out.empty());
}

TEST_CASE("a malformed work limit exits with 2") {
    CHECK(run("series --denoms 2,5 --n 3", "COINSTACK_MAX_WORK=banana ").exit_code == 2);
    CHECK(run("series --denoms 2,5 --n 3", "COINSTACK_MAX_WORK=0 ").exit_code == 2);
}

TEST_CASE("bench with a single strategy reports its value") {
    const auto r = run("bench --denoms 1 --n 10 --strategy dp --repeats 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value 1\n") != std::string::npos);
    CHECK(r.out.find("equal") == std::string::npos);  // nothing to compare
}

TEST_CASE("bench cross-checks both strategies") {
    auto r = run("bench --denoms 2,5 --n 7 --repeats 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 12) == "n 7\nrepeats ");
    CHECK(r.out.find("equal true\n") != std::string::npos);
    CHECK(r.out.find("value 2\n") != std::string::npos);

    r = run("bench --denoms 1,2 --n 100000 --repeats 1 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["equal"] == true);
    CHECK(doc["result"]["digits"] == "20899");  // too big to print in full
    CHECK_FALSE(doc["result"].contains("value"));
    CHECK(doc["result"].contains("dp_median_ms"));
    CHECK(doc["result"].contains("fast_median_ms"));
}
