#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "fruit/cli.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::ostringstream out, err;
    int status = fruit::run_cli(std::vector<std::string>(args.begin(), args.end()), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("obstruct json matches the documented keys") {
    auto r = run({"obstruct", "--field", "17", "--a", "1,0", "--b", "1,0", "--r", "1", "--d", "3",
                  "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["field"] == "17");
    CHECK(j["a"] == "1,0");
    CHECK(j["b"] == "1,0");
    CHECK(j["r"] == "1");
    CHECK(j["d"] == "3");
    CHECK(j["c"] == "5,0");
    CHECK(j["tk_nonempty"] == true);
    CHECK(j["c_mod4"] == "1");
    CHECK(j["locally_obstructed"] == true);
    CHECK(j["hypotheses"]["statement_satisfied"] == false);
    CHECK(j["hypotheses"]["proof_effective"] == true);
    CHECK(j["verdict"] == "NoSolutionWithEvenX");
    // the statement/proof mismatch is surfaced as a diagnostic
    CHECK(r.err.find("warning:") != std::string::npos);
}

TEST_CASE("obstruct human mode prints the hypothesis warning only on mismatch") {
    auto mismatch = run({"obstruct", "--field", "17", "--a", "1,0", "--b", "1,0", "--r", "1",
                         "--d", "3"});
    CHECK(mismatch.status == 0);
    CHECK(mismatch.out.find("warning:") != std::string::npos);
    CHECK(mismatch.out.find("verdict: NoSolutionWithEvenX") != std::string::npos);

    auto agree = run({"obstruct", "--field", "17", "--a", "1,0", "--b", "1,0", "--r", "3",
                      "--d", "3"});
    CHECK(agree.status == 0);
    CHECK(agree.out.find("warning:") == std::string::npos);
}

TEST_CASE("field json for inert and split fields") {
    auto inert = run({"field", "--t", "5", "--json"});
    REQUIRE(inert.status == 0);
    json j = json::parse(inert.out);
    CHECK(j["split_type"] == "Inert");
    CHECK(j["tk_nonempty"] == false);
    CHECK(j["canonical_root"].is_null());

    auto split = run({"field", "--t", "17", "--json"});
    json s = json::parse(split.out);
    CHECK(s["split_type"] == "Split");
    CHECK(s["tk_nonempty"] == true);
    CHECK(s["basis_kind"] == "OmegaIsHalfOnePlusSqrt");
    CHECK(s["field_discriminant"] == "17");
    CHECK(s["canonical_root"].is_string());

    auto rational = run({"field", "--t", "Q", "--json"});
    json q = json::parse(rational.out);
    CHECK(q["split_type"] == "Rational");
    CHECK(q["tk_nonempty"] == true);
    CHECK(q["basis_kind"].is_null());
}

TEST_CASE("density json") {
    auto r = run({"density", "--residue", "1", "--modulus", "8", "--limit", "100", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["r"] == "1");
    CHECK(j["N"] == "8");
    CHECK(j["X"] == "100");
    CHECK(j["count_class"] == "8");
    CHECK(j["count_squarefree"] == "60");
    CHECK(j["rel_predicted"] == "1/6");
    CHECK(j["abs_predicted_times_pi2"] == "1");
}

TEST_CASE("search json and witness lines") {
    auto r = run({"search", "--field", "Q", "--a", "2,0", "--c", "1,0", "--d", "3", "--bound",
                  "2", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 6);
    CHECK(j[0]["x"] == "1,0");
    CHECK(j[0]["y"] == "-1,0");
    CHECK(j[0]["z"] == "-1,0");
    CHECK(j[0]["even_x"] == false);

    auto human = run({"search", "--field", "Q", "--a", "2,0", "--c", "1,0", "--d", "3", "--bound",
                      "2"});
    CHECK(human.status == 0);
    CHECK(human.out.find("x=(1,0) y=(-1,0) z=(-1,0)") == 0);
    CHECK(human.out.find("x=(1,0) y=(1,0) z=(1,0)") != std::string::npos);

    auto derived = run({"search", "--field", "Q", "--a", "1,0", "--b", "1,0", "--r", "1", "--d",
                        "3", "--bound", "12", "--even-x", "--json"});
    REQUIRE(derived.status == 0);
    CHECK(json::parse(derived.out).empty());
}

TEST_CASE("curve json audit fields") {
    auto r = run({"curve", "--field", "Q", "--alpha", "0,0", "--bound", "20", "--even-x",
                  "--torsion", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["a1"] == "0,0");
    CHECK(j["a6"] == "-5,0");
    CHECK(j["delta"] == "-10800,0");
    CHECK(j["paper_poly_at_alpha"] == "-15552,0");
    CHECK(j["paper_poly_matches_delta"] == false);
    CHECK(j["is_elliptic"] == true);
    CHECK(j["points"].empty());
    CHECK(j["torsion_candidates"].empty());

    auto quad = run({"curve", "--field", "17", "--alpha", "0,1", "--json"});
    json w = json::parse(quad.out);
    CHECK(w["a6"] == "-9,-1");
    CHECK(w["delta"] == "-35416,-7442");
}

TEST_CASE("json output is deterministic and round-trips") {
    const char* cmd[] = {"obstruct", "--field", "33", "--a", "2,1", "--b", "1,2", "--r", "3",
                         "--d", "5", "--json"};
    auto first = run({cmd[0], cmd[1], cmd[2], cmd[3], cmd[4], cmd[5], cmd[6], cmd[7], cmd[8],
                      cmd[9], cmd[10], cmd[11]});
    auto second = run({cmd[0], cmd[1], cmd[2], cmd[3], cmd[4], cmd[5], cmd[6], cmd[7], cmd[8],
                       cmd[9], cmd[10], cmd[11]});
    CHECK(first.status == 0);
    CHECK(first.out == second.out);  // byte-identical
    // parse -> dump -> parse is idempotent
    json parsed = json::parse(first.out);
    CHECK(json::parse(parsed.dump(2)) == parsed);
    CHECK(parsed.dump(2) + "\n" == first.out);
}

TEST_CASE("usage errors exit with status 1") {
    CHECK(run({"frobnicate"}).status == 1);
    CHECK(run({}).status == 1);
    CHECK(run({"search", "--field", "Q"}).status == 1);  // missing required flags
    CHECK(run({"obstruct", "--bogus"}).status == 1);
}

TEST_CASE("domain errors exit with status 2") {
    CHECK(run({"field", "--t", "12", "--json"}).status == 2);   // not square-free
    CHECK(run({"field", "--t", "1"}).status == 2);
    CHECK(run({"obstruct", "--field", "Q", "--a", "1,1", "--b", "1,0", "--r", "1", "--d", "3"})
              .status == 2);  // v != 0 over Q
    CHECK(run({"obstruct", "--field", "17", "--a", "0,0", "--b", "1,0", "--r", "1", "--d", "3"})
              .status == 2);  // a = 0
    CHECK(run({"search", "--field", "Q", "--a", "1,0", "--d", "3", "--bound", "5"}).status ==
          2);  // neither --c nor --b/--r
    CHECK(run({"search", "--field", "Q", "--a", "1,0", "--c", "5,0", "--b", "1,0", "--r", "1",
               "--d", "3", "--bound", "5"})
              .status == 2);  // both given
    CHECK(run({"density", "--residue", "9", "--modulus", "8", "--limit", "100"}).status == 2);
    CHECK(run({"density", "--residue", "0", "--modulus", "4", "--limit", "100", "--json"})
              .status == 2);  // gcd(0,4) = 4 not square-free
}

TEST_CASE("cost-cap refusals exit with status 3") {
    auto r = run({"search", "--field", "17", "--a", "1,0", "--c", "5,0", "--d", "3", "--bound",
                  "100"});
    CHECK(r.status == 3);
    CHECK(r.err.find("cost cap") != std::string::npos);
}

TEST_CASE("FRUIT_COST_CAP environment override") {
    setenv("FRUIT_COST_CAP", "20000", 1);
    auto refused = run({"search", "--field", "17", "--a", "1,0", "--c", "5,0", "--d", "3",
                        "--bound", "2"});  // 5^6 = 15625 < 20000 passes
    CHECK(refused.status == 0);
    setenv("FRUIT_COST_CAP", "15000", 1);
    auto blocked = run({"search", "--field", "17", "--a", "1,0", "--c", "5,0", "--d", "3",
                        "--bound", "2"});
    CHECK(blocked.status == 3);
    setenv("FRUIT_COST_CAP", "50", 1);  // below the 10^4 floor
    CHECK(run({"search", "--field", "Q", "--a", "1,0", "--c", "5,0", "--d", "3", "--bound", "2"})
              .status == 2);
    setenv("FRUIT_COST_CAP", "not-a-number", 1);
    CHECK(run({"field", "--t", "17"}).status == 2);
    unsetenv("FRUIT_COST_CAP");
}

TEST_CASE("help exits cleanly") {
    auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("field") != std::string::npos);
    CHECK(r.out.find("obstruct") != std::string::npos);
}
