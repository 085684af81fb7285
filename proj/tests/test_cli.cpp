#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oja/catalog.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = oja::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(OJA_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("basic commands") {
    CHECK(run({"milnor", "x1^8+x2^3+x3^2"}).out == "14\n");
    CHECK(run({"milnor", "x^4+y^3+x*z^2"}).out == "10\n");
    Result s = run({"symmetry", "x1^4+x2^3+x3^3", "--sl"});
    CHECK(s.code == 0);
    CHECK(s.out == "G^SL order 3\ngenerators: (0,2/3,1/3)\n");
    CHECK(run({"transpose", "x1^4+x2^3+x1*x3^2"}).out == "x1^4*x3 + x2^3 + x3^2\n");
    CHECK(run({"transpose", "x^4*y+y^2+z^3", "--vars", "a,b,c"}).out == "a^4 + a*b^2 + c^3\n");
    Result j = run({"jacobian", "x1^4+x2^3+x1*x3^2", "--trace"});
    CHECK(j.out.find("lambda([hess]) = 10") != std::string::npos);
    Result o = run({"orbifold", "x1^8+x2^3+x3^2", "--group", "1/2,0,1/2"});
    CHECK(o.out.rfind("Jac(x1^8 + x2^3 + x3^2, <(1/2,0,1/2)>) dim 10\n", 0) == 0);
    Result p = run({"orbifold", "x1^8+x2^3+x3^2", "--group", "1/2,0,1/2", "--pairing"});
    CHECK(p.out.find("eta(v_id, [x1^6*x2]v_id) = 1/24\n") != std::string::npos);
    Result st = run({"orbifold", "x1^8+x2^3+x3^2", "--group", "1/2,0,1/2", "--structure"});
    CHECK(st.out.find("v_g o v_g = 16*[x1^6]v_id\n") != std::string::npos);
  }

  TEST_CASE("exit codes for bad input") {
    CHECK(run({"milnor", "x1^2+"}).code == 2);
    CHECK(run({"milnor", "x1^2*x2^2+x3^2"}).code == 2);
    CHECK(run({"symmetry", "x1^2+x2^2+x1*x2"}).code == 2);
    CHECK(run({"orbifold", "x1^8+x2^3+x3^2", "--group", "1/2,1/2,0"}).code == 2);
    CHECK(run({"orbifold", "x1^8+x2^3+x3^2", "--group", "1/2,1/2"}).code == 2);
    CHECK(run({"transpose", "x1^3+x2^3", "--vars", "a"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "--row", "99"}).code == 2);
    CHECK(run({"verify", "--all", "--catalog", "/nonexistent.json"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("verification exit codes") {
    Result r = run({"verify", "--row", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("row 2: PASS witness dim 10\n", 0) == 0);
    Result six = run({"verify", "--row", "6"});
    CHECK(six.code == 0);
    CHECK(six.out.find("stored witness fails") != std::string::npos);

    auto doc = nlohmann::ordered_json::parse(oja::embedded_catalog_text());
    doc["rows"][1]["group"] = nlohmann::ordered_json::array();
    doc["rows"][1]["witness"] = nullptr;
    std::string path = "broken_catalog_test.json";
    {
      std::ofstream out(path);
      out << doc.dump(2) << "\n";
    }
    Result bad = run({"verify", "--row", "2", "--catalog", path});
    CHECK(bad.code == 1);
    CHECK(bad.out.rfind("row 2: FAIL", 0) == 0);
    std::remove(path.c_str());
  }

  TEST_CASE("json output") {
    auto m = nlohmann::json::parse(run({"--json", "milnor", "x1^5+x2^4+x3^2"}).out);
    CHECK(m["milnor"] == 12);
    auto o = nlohmann::json::parse(run({"orbifold", "x1^4+x2^3+x3^3", "--group", "0,2/3,1/3", "--json"}).out);
    CHECK(o["dim"] == 12);
    CHECK(o["sectors"].size() == 3);
    auto v = nlohmann::json::parse(run({"verify", "--row", "18", "--json"}).out);
    CHECK(v["rows"][0]["passed"] == true);
    CHECK(v["rows"][0]["method"] == "witness");
    auto c = run({"catalog", "--json"});
    CHECK(c.out == oja::embedded_catalog_text());
  }

  TEST_CASE("golden outputs") {
    CHECK(run({"--json", "symmetry", "x1^4+x2^3+x3^3", "--sl"}).out == golden("symmetry_u12_sl.json"));
    CHECK(run({"--json", "jacobian", "x1^4+x2^3+x1*x3^2"}).out == golden("jacobian_q10.json"));
    CHECK(run({"--json", "orbifold", "x1^8+x2^3+x3^2", "--group", "1/2,0,1/2"}).out == golden("orbifold_e14_z2.json"));
    CHECK(run({"--json", "verify", "--row", "2"}).out == golden("verify_row2.json"));
    CHECK(run({"verify", "--all"}).out == golden("verify_all.txt"));
    CHECK(run({"graph", "--dot"}).out == golden("graph.dot"));
  }

  TEST_CASE("verify --all is independent of the thread count") {
    setenv("OJA_THREADS", "1", 1);
    std::string one = run({"--json", "verify", "--all"}).out;
    setenv("OJA_THREADS", "4", 1);
    std::string four = run({"--json", "verify", "--all"}).out;
    unsetenv("OJA_THREADS");
    CHECK(one == four);
  }
}
