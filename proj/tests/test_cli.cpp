#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "racahlab/cli.hpp"
#include "racahlab/errors.hpp"

using namespace racahlab;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "racahlab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("eval") {
  Result r = call({"eval", "--wilson", "--n", "0", "--abgd", "1.1,0.9,0.7,1.3", "--t", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "1.0\n");
  r = call({"eval", "--wilson", "--n", "2", "--abgd", "1.1,0.9,0.7,1.3", "--t", "0.5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"quantity\": \"phi\"") != std::string::npos);
  r = call({"eval", "--psi", "--k", "0.5,0.8,1.2", "--N", "2", "--n", "1", "--x", "0.1", "--y", "0.2"});
  CHECK(r.code == 0);
  r = call({"eval", "--psi", "--k", "0.5,0.8,1.2", "--N", "2", "--n", "3", "--x", "0.1", "--y", "0.2"});
  CHECK(r.code == 2);
}

TEST_CASE("verify-algebra") {
  Result r = call({"verify-algebra", "--N", "4", "--k", "0.7,1.1,0.4", "--format", "json", "--no-metadata"});
  CHECK(r.code == 0);
  CHECK(r.out.find("algebra.casimir") != std::string::npos);
  CHECK(r.out.find("algebra.closure.cyclic_3") != std::string::npos);
  CHECK(r.out.find("\"status\": \"FAIL\"") == std::string::npos);
}

TEST_CASE("expand emits the coefficient table") {
  Result r = call({"expand", "--N", "3", "--k", "0.5,0.8,1.2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 17);
  CHECK(r.out.rfind("N,n,q,k1,k2,k3,value,closed_form,rel_error\n", 0) == 0);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(call({"verify-algebra", "--N", "4", "--k", "0.7,-1.1,0.4"}).code == 2);
  CHECK(call({"verify-algebra", "--N", "4", "--k", "0.7,1.1"}).code == 2);
  CHECK(call({"verify-algebra", "--k", "0.7,1.1,0.3"}).code == 2);
  CHECK(call({"expand", "--N", "3"}).code == 2);
  CHECK(call({"wilson", "--abgd", "1,1,1,1"}).code == 2);
  CHECK(call({"wilsonfn", "--n", "1.3", "--abgd", "0.9,1.3,0.7,1.2", "--t", "0.37"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"eval", "--wilson", "--n", "1", "--abgd", "1,1,1,1", "--t", "0.3", "--format", "xml"}).code == 2);
}

TEST_CASE("grid order precedence") {
  CHECK(resolve_grid_order(std::nullopt, nullptr) == 48);
  CHECK(resolve_grid_order(std::nullopt, "32") == 32);
  CHECK(resolve_grid_order(20, "32") == 20);
  CHECK_THROWS_AS(resolve_grid_order(std::nullopt, "abc"), ConfigError);
  CHECK_THROWS_AS(resolve_grid_order(1, nullptr), ConfigError);
}

TEST_CASE("number lists") {
  auto v = parse_list("0.5,1e-1,2", 3);
  CHECK(v[1] == 0.1);
  CHECK_THROWS_AS(parse_list("0.5,,2", 3), ConfigError);
  CHECK_THROWS_AS(parse_list("0.5,2,", 2), ConfigError);
  CHECK_THROWS_AS(parse_list("0,5", 1), ConfigError);
}

TEST_CASE("wilson and wilsonfn single configurations") {
  Result r = call({"wilson", "--abgd", "0.6,0.2,-11.1,-10.85", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS wilson.orthogonality") != std::string::npos);
  r = call({"wilsonfn", "--n", "1.3", "--abgd", "0.9,0.3,0.7,1.2", "--t", "0.37", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("wilsonfn.eigenvalue,PASS") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  Result a = call({"verify-orthogonality", "--seed", "17", "--grid-order", "32", "--no-metadata"});
  Result b = call({"verify-orthogonality", "--seed", "17", "--grid-order", "32", "--no-metadata"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Result c = call({"verify-orthogonality", "--seed", "18", "--grid-order", "32", "--no-metadata"});
  CHECK(c.out != a.out);
}
