#include "colorlie/verify.hpp"

#include "colorlie/augmented.hpp"
#include "colorlie/crossed.hpp"
#include "colorlie/enveloping.hpp"
#include "colorlie/error.hpp"
#include "colorlie/rep_theory.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

namespace colorlie {

namespace {

struct Fixtures {
  ColorLieAlgebra graded;
  ColorLieAlgebra twisted;
  TwistTriple triple;
};

Fixtures load_fixtures(const VerifyOptions &options) {
  if (options.fixtures_dir.empty())
    return {builtin_algebra("sl2_graded"), builtin_algebra("sl2c"), example_triple()};
  const std::string dir = options.fixtures_dir + "/";
  return {algebra_from_json(read_json_file(dir + "sl2_graded.json")),
          algebra_from_json(read_json_file(dir + "sl2c.json")),
          triple_from_json(read_json_file(dir + "example_triple.json"))};
}

void absorb(CheckReport &into, const CheckReport &part) {
  into.cases += part.cases;
  if (!part.passed)
    into.fail(part.code, part.name + ": " + part.witness);
}

CheckReport axioms(const VerifyOptions &options) {
  CheckReport r("axioms");
  auto fx = load_fixtures(options);
  const auto &G = fx.triple.c.group();
  const std::size_t n = static_cast<std::size_t>(G.order());
  validate_bicharacter(fx.triple.eps_prime.table());
  r.cases += n * n + 2 * n * n * n;
  validate_cocycle(fx.triple.c.table());
  r.cases += n * n * n;
  check_compatible(fx.graded.eps(), fx.triple);
  r.cases += n * n;
  for (int g = 0; g < G.order(); ++g) {
    ++r.cases;
    const Scalar &d = fx.triple.eps_prime(g, g);
    if (!(d * d).is_one())
      r.fail("E_ANTISYM", "eps'(g,g)^2 != 1 at " + G.name(g));
  }
  return r;
}

CheckReport cocycle_identities(const VerifyOptions &options) {
  CheckReport r("cocycle identities");
  absorb(r, check_cocycle_identities(load_fixtures(options).triple.c));
  const FiniteAbelianGroup G({2, 2, 2});
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int sample = 0; sample < 10; ++sample) {
    ExponentForm form{std::vector<std::vector<int>>(3, std::vector<int>(3)), 2};
    for (auto &row : form.matrix)
      for (auto &e : row)
        e = bit(rng);
    absorb(r, check_cocycle_identities(cocycle_from_exponents(G, form)));
  }
  return r;
}

CheckReport twist(const VerifyOptions &options) {
  CheckReport r("twist");
  auto fx = load_fixtures(options);
  auto L = cocycle_twist(fx.graded, fx.triple);
  ++r.cases;
  if (!(L == fx.twisted))
    r.fail("E_TWIST", "twisted sl2 differs from the sl2^c definition");
  auto id = GroupMorphism::identity(fx.graded.group());
  auto back = cocycle_twist(L, TwistTriple{fx.triple.c.inverse(), id, fx.graded.eps()});
  ++r.cases;
  if (!(back == fx.graded))
    r.fail("E_TWIST", "twisting back by c^-1 does not recover sl2");
  return r;
}

CheckReport pbw(const VerifyOptions &) {
  CheckReport r("PBW");
  UniversalEnvelope U(builtin_algebra("sl2c"));
  const auto &L = U.algebra();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      ++r.cases;
      auto lhs = U.generator(i) * U.generator(j) - U.generator(j) * U.generator(i) * L.eps_basis(i, j);
      auto rhs = U.zero();
      for (std::size_t k = 0; k < L.dim(); ++k)
        rhs += U.generator(k) * L.structure(i, j, k);
      if (!(lhs == rhs))
        r.fail("E_PBW", "defining relation fails for (" + L.basis()[i].name + "," +
                            L.basis()[j].name + ")");
    }
  ++r.cases;
  if (U.basis(4).size() != 35)
    r.fail("E_PBW", "expected 35 PBW monomials of degree <= 4, got " +
                        std::to_string(U.basis(4).size()));
  return r;
}

CheckReport theta(const VerifyOptions &options) {
  auto fx = load_fixtures(options);
  return theta_check(fx.graded, fx.triple, 4);
}

CheckReport hopf(const VerifyOptions &) {
  AugmentedEnvelope A(UniversalEnvelope(builtin_algebra("sl2c")));
  return A.hopf_axiom_check(A.standard_spanning_set());
}

CheckReport phi(const VerifyOptions &) { return phi_check(builtin_algebra("sl2c"), 2); }

CheckReport psi_f(const VerifyOptions &) {
  CheckReport r("Psi and F");
  const auto c = example_cocycle();
  const auto KG = group_algebra(c.group());
  absorb(r, psi_iso(KG, c).report);
  absorb(r, f_iso().report);
  absorb(r, eps_tensor(KG, KG, example_epsilon()).report);
  return r;
}

CheckReport projector(const VerifyOptions &options) {
  CheckReport r("averaging projector");
  auto fx = klein_module_fixture();
  for (std::uint64_t k = 0; k < 5; ++k) {
    ++r.cases;
    Matrix p = averaging_projector(fx.algebra, fx.module, fx.V,
                                   random_nonequivariant_projection(options.seed + k));
    bool ok = p * p == p && p * fx.V == fx.V;
    for (const auto &m : fx.module.base_generators)
      ok = ok && m * p == p * m;
    for (const auto &m : fx.module.group_generators)
      ok = ok && m * p == p * m;
    if (!ok)
      r.fail("E_NOT_EQUIV", "projector " + std::to_string(k) + " is not an equivariant projection");
  }
  return r;
}

CheckReport gamma(const VerifyOptions &) { return gamma_check(4); }

CheckReport catalog_section(const VerifyOptions &) {
  CheckReport r("catalog");
  for (int n = 1; n <= 10; ++n)
    for (auto [a1, a2] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
      absorb(r, check_representation(make_V(n, a1, a2)));
  for (int n = 1; n <= 9; n += 2)
    absorb(r, check_representation(make_W(n)));
  return r;
}

CheckReport decompositions(const VerifyOptions &options) {
  CheckReport r("decompositions");
  auto compare = [&](const std::string &what, const std::map<std::string, int> &general,
                     const std::map<std::string, int> &explicit_part,
                     const std::map<std::string, int> &expected) {
    ++r.cases;
    if (general != expected)
      r.fail("E_DECOMPOSE", what + ": decomposer disagrees with the expected factors");
    if (explicit_part != expected)
      r.fail("E_INTERTWINER", what + ": explicit intertwiners disagree with the expected factors");
  };
  for (int n = 1; n <= 9; n += 2) {
    auto ex = explicit_decomposition(n);
    absorb(r, ex.report);
    auto d = decompose(make_K2_tensor(n - 1), options.seed);
    compare("K^2 (x) V(" + std::to_string(n - 1) + ")", d.multiplicities, ex.odd_part,
            {{catalog_label("W", n), 2}});
  }
  for (int n = 1; n <= 5; ++n) {
    auto ex = explicit_decomposition(n);
    absorb(r, ex.report);
    auto d = decompose(make_K2_tensor(2 * n - 1), options.seed);
    std::map<std::string, int> four;
    for (auto [a1, a2] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
      four[catalog_label("V", n, a1, a2)] = 1;
    compare("K^2 (x) V(" + std::to_string(2 * n - 1) + ")", d.multiplicities, ex.even_part, four);
  }
  return r;
}

CheckReport counts(const VerifyOptions &options) { return catalog_counts(options.n_max); }

struct SectionDef {
  const char *slug;
  const char *title;
  std::function<CheckReport(const VerifyOptions &)> run;
};

const std::vector<SectionDef> &section_table() {
  static const std::vector<SectionDef> table{
      {"axioms", "bicharacter, cocycle and compatibility axioms", axioms},
      {"cocycle-identities", "cocycle identities, example and seeded cocycles", cocycle_identities},
      {"twist", "cocycle twist of sl2 and its inverse", twist},
      {"pbw", "PBW relations and basis count", pbw},
      {"theta", "U(L)^c vs U(L^c) up to degree 4", theta},
      {"hopf", "Hopf axioms of the augmented envelope", hopf},
      {"phi", "augmented envelope as a crossed product", phi},
      {"psi-f", "Psi, F and the eps-tensor product", psi_f},
      {"projector", "averaging projector on K^2 (+) K^2", projector},
      {"gamma", "Gamma into 2x2 matrices over U(sl2)", gamma},
      {"catalog", "catalog modules satisfy the bracket relations", catalog_section},
      {"decompositions", "K^2 (x) V(m): decomposer vs explicit intertwiners", decompositions},
      {"counts", "absolutely simple catalog modules per dimension", counts},
  };
  return table;
}

} // namespace

bool CommandReport::passed() const {
  for (const auto &s : checks)
    if (!s.report.passed)
      return false;
  return true;
}

void CommandReport::settle() { status = passed() ? "pass" : "fail"; }

json to_json(const CommandReport &r) {
  json checks = json::array();
  for (const auto &s : r.checks)
    checks.push_back(json{{"name", s.slug},
                          {"title", s.title},
                          {"passed", s.report.passed},
                          {"cases", s.report.cases},
                          {"code", s.report.code},
                          {"witness", s.report.witness},
                          {"seconds", s.seconds}});
  return json{{"schema", report_schema},
              {"command", r.command},
              {"status", r.status},
              {"checks", checks},
              {"data", r.data}};
}

CommandReport command_report_from_json(const json &j) {
  try {
    if (j.at("schema").get<std::string>() != report_schema)
      throw AlgebraError(ErrorCode::Parse, "unknown report schema");
    CommandReport r;
    r.command = j.at("command").get<std::string>();
    r.status = j.at("status").get<std::string>();
    if (r.status != "pass" && r.status != "fail" && r.status != "error")
      throw AlgebraError(ErrorCode::Parse, "unknown status '" + r.status + "'");
    for (const auto &c : j.at("checks")) {
      SectionResult s;
      s.slug = c.at("name").get<std::string>();
      s.title = c.value("title", "");
      s.report.name = s.slug;
      s.report.passed = c.at("passed").get<bool>();
      s.report.cases = c.at("cases").get<std::size_t>();
      s.report.code = c.value("code", "");
      s.report.witness = c.value("witness", "");
      s.seconds = c.value("seconds", 0.0);
      r.checks.push_back(std::move(s));
    }
    r.data = j.value("data", json::object());
    return r;
  } catch (const json::exception &e) {
    throw AlgebraError(ErrorCode::Parse, std::string("report: ") + e.what());
  }
}

std::vector<std::string> verify_sections() {
  std::vector<std::string> out;
  for (const auto &s : section_table())
    out.emplace_back(s.slug);
  return out;
}

SectionResult run_section(const std::string &slug, const VerifyOptions &options) {
  for (const auto &def : section_table()) {
    if (slug != def.slug)
      continue;
    SectionResult out{def.slug, def.title, CheckReport(def.slug), 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      out.report = def.run(options);
      out.report.name = def.slug;
    } catch (const AlgebraError &e) {
      out.report.fail(error_code_name(e.code()), e.detail());
    } catch (const std::exception &e) {
      out.report.fail("E_INTERNAL", e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }
  throw AlgebraError(ErrorCode::Invalid, "unknown section '" + slug + "'");
}

CommandReport verify_paper(const VerifyOptions &options) {
  CommandReport r;
  r.command = "verify-paper";
  for (const auto &slug : verify_sections())
    r.checks.push_back(run_section(slug, options));
  r.settle();
  r.data = json{{"nmax", options.n_max}, {"seed", options.seed}};
  return r;
}

std::string scoreboard(const CommandReport &r) {
  std::string out;
  std::size_t passed = 0;
  char line[256];
  for (const auto &s : r.checks) {
    passed += s.report.passed ? 1 : 0;
    std::snprintf(line, sizeof line, "[%s] %-20s %-52s %8zu cases %7.2f s\n",
                  s.report.passed ? "PASS" : "FAIL", s.slug.c_str(), s.title.c_str(),
                  s.report.cases, s.seconds);
    out += line;
    if (!s.report.passed)
      out += "       " + s.report.code + ": " + s.report.witness + "\n";
  }
  out += r.command + ": " + std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
         " passed, status " + r.status + "\n";
  return out;
}

} // namespace colorlie
