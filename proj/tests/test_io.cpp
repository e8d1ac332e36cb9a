#include "colorlie/error.hpp"
#include "colorlie/io.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace colorlie;

namespace {

std::string data_path(const std::string &name) { return std::string(COLORLIE_DATA_DIR) + "/" + name; }

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t parse_position(const std::string &text) {
  try {
    parse_json_text(text);
  } catch (const ParseError &e) {
    return e.position();
  }
  FAIL("expected a parse error");
  return 0;
}

} // namespace

TEST_CASE("scalars and groups") {
  for (const char *s : {"0", "1/2", "0-3/7*i", "1+1*i", "2/3-5/4*i"}) {
    const auto x = Scalar::parse(s);
    CHECK(scalar_from_json(to_json(x)) == x);
    CHECK(to_json(x).get<std::string>() == s);
  }
  CHECK(scalar_from_json(json(4)) == Scalar(4));
  CHECK_THROWS_AS(scalar_from_json(json("1/0")), AlgebraError);
  CHECK_THROWS_AS(scalar_from_json(json(true)), AlgebraError);

  const FiniteAbelianGroup G({2, 3});
  CHECK(group_from_json(to_json(G)) == G);
}

TEST_CASE("tables, bicharacters and cocycles") {
  const auto eps = example_epsilon();
  const auto K = eps.group();
  CHECK(table_from_json(K, table_to_json(eps.table())) == eps.table());
  CHECK(table_to_json(eps.table()).size() == 16);

  const auto e2 = bicharacter_from_json(to_json(eps));
  CHECK(e2 == eps);
  const auto c = example_cocycle();
  const auto c2 = cocycle_from_json(to_json(c));
  CHECK(c2 == c);

  // exponent forms survive a round trip
  const ExponentForm f{{{0, 2}, {0, 0}}, 4};
  const auto ci = cocycle_from_exponents(K, f);
  const auto j = to_json(ci);
  CHECK(j["values"].contains("exponent_matrix"));
  const auto back = cocycle_from_json(j);
  CHECK(back.exponent_form() == f);
  CHECK(back == ci);

  // a table that is not a bicharacter is rejected by validation
  auto bad = to_json(eps);
  bad["values"] = table_to_json(GroupTable(K, std::vector<Scalar>(16, Scalar(2))));
  CHECK_THROWS_AS(bicharacter_from_json(bad), AlgebraError);
}

TEST_CASE("algebras, triples and representations") {
  for (const char *name : {"sl2c", "sl2_graded", "sl2"}) {
    const auto L = builtin_algebra(name);
    CHECK(algebra_from_json(to_json(L)) == L);
  }
  const auto t = example_triple();
  const auto t2 = triple_from_json(to_json(t));
  CHECK(t2.c == t.c);
  CHECK(t2.phi.table() == t.phi.table());
  CHECK(t2.eps_prime == t.eps_prime);
  CHECK(kind_of(to_json(t)) == "twist_triple");
  CHECK(kind_of(json::object()) == "");

  const auto A = twisted_group_ring(example_cocycle());
  CHECK(assoc_from_json(to_json(A)) == A);

  const auto r = make_V(3, 1, -1);
  const auto r2 = representation_from_json(to_json(r, "sl2c"));
  CHECK(r2.dim == 3);
  CHECK(r2.matrices == r.matrices);
  CHECK(r2.algebra == r.algebra);
  const auto r3 = representation_from_json(to_json(r));
  CHECK(r3.matrices == r.matrices);
}

TEST_CASE("fixture files are canonical") {
  for (const char *name : {"sl2c.json", "sl2_graded.json", "example_triple.json",
                           "bad_cocycle.json", "incompatible_triple.json"}) {
    CAPTURE(name);
    const auto text = slurp(data_path(name));
    CHECK(dump_canonical(parse_json_text(text)) == text);
  }
  CHECK(dump_canonical(to_json(builtin_algebra("sl2c"))) == slurp(data_path("sl2c.json")));
  CHECK(dump_canonical(to_json(builtin_algebra("sl2_graded"))) ==
        slurp(data_path("sl2_graded.json")));
  CHECK(dump_canonical(to_json(example_triple())) == slurp(data_path("example_triple.json")));
  CHECK(algebra_from_json(read_json_file(data_path("sl2c.json"))) == builtin_algebra("sl2c"));
}

TEST_CASE("malformed input") {
  CHECK(parse_position("{\"a\": }") == 6);
  CHECK(parse_position("[1, 2") == 5);
  CHECK_THROWS_WITH_AS(read_json_file(data_path("missing.json")), doctest::Contains("cannot read"),
                       AlgebraError);
  auto j = to_json(builtin_algebra("sl2c"));
  j.erase("basis");
  CHECK_THROWS_AS(algebra_from_json(j), AlgebraError);
  // a broken cocycle file parses but fails validation
  CHECK_THROWS_AS(cocycle_from_json(read_json_file(data_path("bad_cocycle.json"))), AlgebraError);
}
