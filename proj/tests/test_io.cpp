#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/io.hpp"

using namespace kmforge;
using testing::boolean4;

namespace {

std::string data(const std::string& name) { return std::string(KMFORGE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("loading algebras") {
  Algebra b = load_algebra(data("antichain2.json"));
  CHECK(is_isomorphic(b, boolean4()));
  Algebra c = load_algebra(data("chain3.json"));
  CHECK(c == chain(3));
  CHECK(c.names() == chain(3).names());
  CHECK_THROWS_AS(load_algebra(data("m3.json")), ValidationError);
  CHECK_THROWS_AS(load_algebra(data("bad.json")), FormatError);
  CHECK_THROWS_AS(load_algebra(data("missing.json")), IoError);
  CHECK_THROWS_AS(algebra_from_json(json{{"elements", {"0"}}}), FormatError);
}

TEST_CASE("JSON round trip") {
  for (Algebra h : {chain(4), boolean4()}) {
    json j = algebra_to_json(h);
    CHECK(algebra_from_json(j) == h);
    CHECK(algebra_from_json(json::parse(j.dump())) == h);
  }
}

TEST_CASE("reports are deterministic") {
  Algebra h = chain(3);
  json a = report("one-step");
  a["result"] = one_step_to_json(one_step(h, 0));
  json b = report("one-step");
  b["result"] = one_step_to_json(one_step(h, 0));
  CHECK(a.dump() == b.dump());
  CHECK(a["version"] == kSchemaVersion);
  CHECK(a["result"]["classes"].size() == 3);
  CHECK(a["result"]["delta_class"] == a["result"]["embedding"]["m"]);
  CHECK(delta_to_json(km_from_heyting(h)).dump() == R"({"0":"m","m":"1","1":"1"})");
}

TEST_CASE("DOT export") {
  Algebra b = boolean4();
  std::string dot = to_dot(b, {"", "Δ of x", "", ""});
  CHECK(dot.find("digraph") == 0);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  CHECK(edges == b.covers().size());
  CHECK(edges == 4);
  CHECK(dot.find("\\nΔ of x") != std::string::npos);
}
