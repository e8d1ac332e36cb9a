// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "colorlie/verify.hpp"

#include "word_oracle.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>

using namespace colorlie;
using namespace colorlie::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;
};

Outcome from_section(const std::string &slug, int n_max = 6) {
  VerifyOptions options;
  options.n_max = n_max;
  const auto s = run_section(slug, options);
  Outcome o{s.report.passed, std::to_string(s.report.cases) + " cases"};
  if (!s.report.passed)
    o.note = s.report.code + " " + s.report.witness;
  return o;
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome out;
  for (const auto &p : parts) {
    if (!p.passed) {
      out.passed = false;
      out.note = p.note;
      return out;
    }
    if (!out.note.empty())
      out.note += ", ";
    out.note += p.note;
  }
  return out;
}

Outcome twist_criterion() {
  const auto graded = builtin_algebra("sl2_graded");
  const auto t = example_triple();
  const auto L = cocycle_twist(graded, t);
  // <a1,a2> = a3, <a2,a3> = a1, <a3,a1> = a2 and their color-symmetric partners
  for (auto [x, y, z] : std::array<std::array<int, 3>, 3>{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}) {
    for (int k = 0; k < 3; ++k) {
      if (L.structure(x, y, k) != (k == z ? Scalar(1) : Scalar(0)))
        return {false, "bracket (" + std::to_string(x) + "," + std::to_string(y) + ")"};
      if (L.structure(y, x, k) != (k == z ? Scalar(1) : Scalar(0)))
        return {false, "bracket (" + std::to_string(y) + "," + std::to_string(x) + ")"};
    }
  }
  for (int x = 0; x < 3; ++x)
    for (int k = 0; k < 3; ++k)
      if (!L.structure(x, x, k).is_zero())
        return {false, "nonzero square"};
  const auto &G = graded.group();
  const TwistTriple back{t.c.inverse(), GroupMorphism::identity(G), graded.eps()};
  if (!(cocycle_twist(L, back) == graded))
    return {false, "untwisting does not recover the graded table"};
  return all_of({{true, "bracket table exact"}, from_section("twist")});
}

Outcome pbw_criterion() {
  UniversalEnvelope U(builtin_algebra("sl2c"));
  std::size_t words = 0;
  for (bool leftmost : {true, false}) {
    WordOracle oracle(U.algebra(), leftmost);
    for (const auto &w : all_words(3, 3)) {
      if (w.size() != 3)
        continue;
      ++words;
      if (!(U.word(w).terms() == oracle.to_pbw(oracle.reduce(w))))
        return {false, "oracle mismatch on a length-3 word"};
    }
  }
  if (U.basis(4).size() != 35)
    return {false, "|basis(4)| = " + std::to_string(U.basis(4).size())};

  const FiniteAbelianGroup Z2({2});
  auto eps = validate_bicharacter(GroupTable(Z2, {1, 1, 1, -1}));
  UniversalEnvelope V(validate_color_lie(ColorLieData::abelian(Z2, eps, {{"x", 1}})));
  for (int d = 1; d <= 6; ++d) {
    const auto b = V.basis(d);
    if (b.size() != 2 || total_degree(b[0]) != 0 || total_degree(b[1]) != 1)
      return {false, "odd generator basis at degree " + std::to_string(d)};
  }
  return all_of({{true, std::to_string(words / 2) + " words x 2 orders, |basis(4)| = 35"},
                 from_section("pbw")});
}

std::string run_command(const std::string &cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe)
    return out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get()))
    out.append(buf.data(), n);
  return out;
}

Outcome end_to_end() {
  const auto out = run_command(std::string("\"") + COLORLIE_CLI + "\" verify-paper --nmax 6 --json");
  try {
    const auto r = command_report_from_json(parse_json_text(out));
    if (r.status != "pass")
      return {false, "status " + r.status};
    return {true, std::to_string(r.checks.size()) + " sections"};
  } catch (const std::exception &e) {
    return {false, e.what()};
  }
}

struct Criterion {
  int number;
  const char *title;
  double limit_seconds; // 0 = no limit
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "axioms of the example triple", 1, [] { return from_section("axioms"); }},
      {2, "cocycle identities", 1, [] { return from_section("cocycle-identities"); }},
      {3, "twist to sl2c and back", 0, twist_criterion},
      {4, "PBW normal forms and bases", 0, pbw_criterion},
      {5, "Theta multiplicative to degree 4", 10, [] { return from_section("theta"); }},
      {6, "Hopf axioms of the augmented envelope", 0, [] { return from_section("hopf"); }},
      {7, "Phi multiplicative", 0, [] { return from_section("phi"); }},
      {8, "Psi and F", 0, [] { return from_section("psi-f"); }},
      {9, "averaging projector", 0, [] { return from_section("projector"); }},
      {10, "Gamma relations and substitution", 0, [] { return from_section("gamma"); }},
      {11, "catalog modules", 0, [] { return from_section("catalog"); }},
      {12, "decompositions of K^2 (x) V(m)", 0, [] { return from_section("decompositions"); }},
      {13, "counts of simple catalog modules", 0, [] { return from_section("counts"); }},
      {14, "verify-paper --nmax 6 end to end", 60, end_to_end},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.passed = false;
      o.note = "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    if (!o.passed)
      ++failed;
    std::printf("%s %2d %-40s %7.3fs  %s\n", o.passed ? "PASS" : "FAIL", c.number, c.title, secs,
                o.note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
