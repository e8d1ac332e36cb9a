#include "colorlie/cli.hpp"

#include "colorlie/error.hpp"
#include "colorlie/expression.hpp"
#include "colorlie/io.hpp"
#include "colorlie/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <regex>

namespace colorlie {

namespace {

struct Options {
  bool json = false;
  std::string out;
  std::uint64_t seed = 0;
  int n_max = 6;
  std::string fixtures;
  std::string file;
  std::string second;
  std::vector<std::string> targets;
};

/// Command output: the report plus human-readable text printed before the
/// per-check lines.
struct Outcome {
  CommandReport report;
  std::string text;
};

bool is_builtin_name(const std::string &name) {
  return name == "sl2" || name == "sl2_graded" || name == "sl2c";
}

ColorLieAlgebra load_algebra(const std::string &source) {
  if (is_builtin_name(source))
    return builtin_algebra(source);
  return algebra_from_json(read_json_file(source));
}

/// Runs one step; domain errors become a failed check, parse errors propagate.
SectionResult step(const std::string &name, const std::function<CheckReport()> &body) {
  SectionResult s{name, "", CheckReport(name), 0};
  try {
    s.report = body();
    s.report.name = name;
  } catch (const AlgebraError &e) {
    if (e.code() == ErrorCode::Parse)
      throw;
    s.report.fail(error_code_name(e.code()), e.detail());
  }
  return s;
}

CheckReport counted(std::size_t cases) {
  CheckReport r;
  r.cases = cases;
  return r;
}

std::string bracket_table(const ColorLieAlgebra &L) {
  std::string text;
  const auto &B = L.basis();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      std::string rhs;
      for (std::size_t k = 0; k < L.dim(); ++k) {
        const Scalar &v = L.structure(i, j, k);
        if (v.is_zero())
          continue;
        if (!rhs.empty())
          rhs += " + ";
        rhs += v.is_one() ? B[k].name : v.to_string() + "*" + B[k].name;
      }
      if (!rhs.empty())
        text += "<" + B[i].name + "," + B[j].name + "> = " + rhs + "\n";
    }
  return text;
}

// ---------------------------------------------------------------- check

Outcome cmd_check(const Options &o) {
  Outcome res;
  res.report.command = "check";
  auto &checks = res.report.checks;
  const json j = read_json_file(o.file);
  const std::string kind = kind_of(j);
  res.report.data = json{{"kind", kind}};

  if (kind == "bicharacter") {
    checks.push_back(step("bicharacter", [&] {
      auto eps = bicharacter_from_json(j);
      const std::size_t n = eps.group().order();
      return counted(n * n + 2 * n * n * n);
    }));
  } else if (kind == "cocycle") {
    std::optional<Cocycle> c;
    checks.push_back(step("cocycle identity", [&] {
      c = cocycle_from_json(j);
      const std::size_t n = c->group().order();
      return counted(n * n * n);
    }));
    if (c)
      checks.push_back(step("cocycle identities", [&] { return check_cocycle_identities(*c); }));
  } else if (kind == "color_lie") {
    std::optional<ColorLieData> data;
    checks.push_back(step("epsilon", [&] {
      data = algebra_data_from_json(j);
      const std::size_t n = data->group.order();
      return counted(n * n + 2 * n * n * n);
    }));
    if (data) {
      const std::size_t n = data->dim();
      std::size_t fail_at = 3;
      std::string code, witness;
      try {
        validate_color_lie(*data);
      } catch (const AlgebraError &e) {
        fail_at = e.code() == ErrorCode::ColorSym ? 1 : e.code() == ErrorCode::Jacobi ? 2 : 0;
        code = error_code_name(e.code());
        witness = e.detail();
      }
      const char *axioms[] = {"gradation", "color symmetry", "color Jacobi"};
      const std::size_t cases[] = {n * n * n, n * n, n * n * n};
      for (std::size_t a = 0; a < 3 && a <= fail_at; ++a) {
        SectionResult s{axioms[a], "", CheckReport(axioms[a]), 0};
        s.report.cases = cases[a];
        if (a == fail_at)
          s.report.fail(code, witness);
        checks.push_back(std::move(s));
      }
    }
  } else if (kind == "twist_triple") {
    checks.push_back(step("twist triple", [&] {
      auto t = triple_from_json(j);
      const std::size_t n = t.c.group().order();
      return counted(n * n * n);
    }));
  } else if (kind == "assoc_algebra") {
    std::optional<AssocAlgebra> A;
    checks.push_back(step("definition", [&] {
      A = assoc_from_json(j);
      return counted(1);
    }));
    if (A)
      checks.push_back(step("associative algebra", [&] { return check_assoc_algebra(*A); }));
  } else if (kind == "representation") {
    std::optional<Representation> r;
    checks.push_back(step("definition", [&] {
      r = representation_from_json(j);
      return counted(1);
    }));
    if (r)
      checks.push_back(step("representation", [&] { return check_representation(*r); }));
  } else {
    throw AlgebraError(ErrorCode::Parse, "unknown kind '" + kind + "'");
  }
  return res;
}

// ---------------------------------------------------------------- twist

Outcome cmd_twist(const Options &o) {
  Outcome res;
  res.report.command = "twist";
  const auto L = load_algebra(o.file);
  const auto t = triple_from_json(read_json_file(o.second));
  std::optional<ColorLieAlgebra> twisted;
  res.report.checks.push_back(step("compatibility", [&] {
    check_compatible(L.eps(), t);
    const std::size_t n = L.group().order();
    return counted(n * n);
  }));
  if (res.report.checks.back().report.passed)
    res.report.checks.push_back(step("twisted axioms", [&] {
      twisted = cocycle_twist(L, t);
      return counted(1);
    }));
  if (twisted) {
    res.text = bracket_table(*twisted);
    res.report.data = json{{"algebra", to_json(*twisted)}};
    if (!o.out.empty())
      write_text_file(o.out, dump_canonical(to_json(*twisted)));
  }
  return res;
}

// ---------------------------------------------------------------- pbw

Outcome cmd_pbw(const Options &o) {
  Outcome res;
  res.report.command = "pbw";
  UniversalEnvelope U(load_algebra(o.file));
  const auto x = parse_expression(U, o.second);
  const auto &G = U.algebra().group();
  res.text = x.to_string() + "\n";
  json components = json::object();
  for (const auto &[g, part] : x.homogeneous_components()) {
    components[G.name(g)] = part.to_string();
    res.text += "  degree " + G.name(g) + ": " + part.to_string() + "\n";
  }
  res.report.data = json{{"normal_form", x.to_string()}, {"components", components}};
  return res;
}

// ---------------------------------------------------------------- rep

Representation resolve_rep(const std::string &target) {
  static const std::regex v_re(R"(V:(\d+):\((-?1),(-?1)\))");
  static const std::regex w_re(R"(W:(\d+))");
  static const std::regex k_re(R"(K2V:(\d+))");
  static const std::regex s_re(R"(sl2:(\d+))");
  std::smatch m;
  auto num = [&](std::size_t i) {
    const std::string s = m[i].str();
    if (s.size() > 4)
      throw AlgebraError(ErrorCode::Parse, "dimension too large in '" + target + "'");
    return std::stoi(s);
  };
  if (std::regex_match(target, m, v_re))
    return make_V(num(1), num(2), num(3));
  if (std::regex_match(target, m, w_re))
    return make_W(num(1));
  if (std::regex_match(target, m, k_re))
    return make_K2_tensor(num(1));
  if (std::regex_match(target, m, s_re))
    return make_sl2_simple(num(1));
  if (target.find(':') != std::string::npos)
    throw AlgebraError(ErrorCode::Parse, "malformed catalog name '" + target + "'");
  return representation_from_json(read_json_file(target));
}

json rows_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(m(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

Outcome cmd_rep(const std::string &sub, const Options &o) {
  Outcome res;
  res.report.command = "rep " + sub;
  const std::size_t want = sub == "iso" ? 2 : 1;
  if (o.targets.size() != want)
    throw AlgebraError(ErrorCode::Parse, "rep " + sub + " takes " + std::to_string(want) +
                                             " module argument(s)");
  std::optional<Representation> r;
  res.report.checks.push_back(step("representation", [&] {
    r = resolve_rep(o.targets[0]);
    return check_representation(*r);
  }));
  if (!res.report.checks.back().report.passed)
    return res;

  if (sub == "show") {
    const auto &B = r->algebra.basis();
    for (std::size_t i = 0; i < r->matrices.size(); ++i)
      res.text += B[i].name + " =\n" + r->matrices[i].to_string() + "\n";
    res.report.data = json{{"representation", to_json(*r)}};
    if (!o.out.empty())
      write_text_file(o.out, dump_canonical(to_json(*r)));
  } else if (sub == "verify") {
    res.text = "dimension " + std::to_string(r->dim) + "\n";
    res.report.data = json{{"dim", r->dim}};
  } else if (sub == "decompose") {
    std::optional<DecompositionReport> d;
    res.report.checks.push_back(step("decomposition", [&] {
      d = decompose(*r, o.seed);
      return counted(d->factors.size());
    }));
    if (d) {
      res.text = d->summary() + "\n";
      json factors = json::array();
      for (const auto &f : d->factors) {
        res.text += "  " + f.label + " basis\n" + f.basis.to_string() + "\n";
        factors.push_back(json{{"label", f.label}, {"basis", rows_json(f.basis)}});
      }
      res.report.data = json{{"summary", d->summary()},
                             {"multiplicities", d->multiplicities},
                             {"factors", factors}};
    }
  } else if (sub == "iso") {
    std::optional<Representation> s;
    res.report.checks.push_back(step("second representation", [&] {
      s = resolve_rep(o.targets[1]);
      return check_representation(*s);
    }));
    if (s) {
      const auto dim = intertwiner_space(*r, *s).size();
      res.text = "dimension " + std::to_string(dim) + "\n";
      res.report.data = json{{"intertwiner_dim", dim}};
    }
  }
  return res;
}

// ---------------------------------------------------------------- builtin

Outcome cmd_builtin(const Options &o) {
  Outcome res;
  res.report.command = "builtin";
  json j;
  if (is_builtin_name(o.file))
    j = to_json(builtin_algebra(o.file));
  else if (o.file == "example_triple")
    j = to_json(example_triple());
  else if (o.file == "example_cocycle")
    j = to_json(example_cocycle());
  else if (o.file == "example_epsilon")
    j = to_json(example_epsilon());
  else
    throw AlgebraError(ErrorCode::Parse, "unknown builtin '" + o.file + "'");
  const std::string text = dump_canonical(j);
  if (!o.out.empty())
    write_text_file(o.out, text);
  else
    res.text = text;
  res.report.data = j;
  return res;
}

Outcome cmd_verify(const Options &o) {
  VerifyOptions v;
  v.n_max = o.n_max;
  v.seed = o.seed;
  v.fixtures_dir = o.fixtures;
  return {verify_paper(v), ""};
}

void print_outcome(Outcome &res, const Options &o, std::ostream &out) {
  res.report.settle();
  if (o.json) {
    out << dump_canonical(to_json(res.report));
    return;
  }
  if (res.report.command == "verify-paper") {
    out << scoreboard(res.report);
    return;
  }
  out << res.text;
  for (const auto &s : res.report.checks) {
    out << "[" << (s.report.passed ? "PASS" : "FAIL") << "] " << s.slug;
    if (s.report.cases)
      out << " (" << s.report.cases << " cases)";
    out << "\n";
    if (!s.report.passed)
      out << "       " << s.report.code << ": " << s.report.witness << "\n";
  }
  out << res.report.command << ": " << res.report.status << "\n";
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact computations with color Lie algebras, their enveloping algebras, "
               "crossed products and the sl2^c representation catalog"};
  app.name("colorlie");
  app.require_subcommand(1);
  Options o;
  std::string rep_sub;
  app.add_flag("--json", o.json, "Print a JSON report");

  auto *check = app.add_subcommand("check", "Validate a definition file");
  check->add_option("file", o.file, "JSON definition")->required();

  auto *twist = app.add_subcommand("twist", "Twist an algebra by a cocycle triple");
  twist->add_option("algebra", o.file, "Algebra file or builtin name")->required();
  twist->add_option("triple", o.second, "Twist triple file")->required();
  twist->add_option("--out", o.out, "Write the twisted algebra here");

  auto *pbw = app.add_subcommand("pbw", "PBW normal form of an expression");
  pbw->add_option("algebra", o.file, "Algebra file or builtin name")->required();
  pbw->add_option("expression", o.second, "Expression")->required();

  auto *rep = app.add_subcommand("rep", "Representation tools");
  rep->add_option("action", rep_sub, "show | verify | decompose | iso")
      ->required()
      ->check(CLI::IsMember({"show", "verify", "decompose", "iso"}));
  rep->add_option("modules", o.targets, "V:n:(a,b), W:n, K2V:n, sl2:n or a file")->required();
  rep->add_option("--out", o.out, "Write the module here (show)");
  rep->add_option("--seed", o.seed, "Seed for decompose");

  auto *verify = app.add_subcommand("verify-paper", "Run every verification section");
  verify->add_option("--nmax", o.n_max, "Largest dimension for the catalog counts")
      ->check(CLI::Range(1, 64));
  verify->add_option("--seed", o.seed, "Seed for randomized checks");
  verify->add_option("--fixtures", o.fixtures, "Directory with fixture definitions");

  auto *builtin = app.add_subcommand("builtin", "Emit a built-in definition");
  builtin->add_option("name", o.file,
                      "sl2, sl2_graded, sl2c, example_triple, example_cocycle, example_epsilon")
      ->required();
  builtin->add_option("--out", o.out, "Write here instead of stdout");

  for (auto *sub : {check, twist, pbw, rep, verify, builtin})
    sub->add_flag("--json", o.json, "Print a JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitPass : ExitUsage;
  }

  Outcome res;
  try {
    if (*check)
      res = cmd_check(o);
    else if (*twist)
      res = cmd_twist(o);
    else if (*pbw)
      res = cmd_pbw(o);
    else if (*rep)
      res = cmd_rep(rep_sub, o);
    else if (*verify)
      res = cmd_verify(o);
    else
      res = cmd_builtin(o);
  } catch (const AlgebraError &e) {
    // Parse and usage problems, plus domain errors outside any check.
    const bool usage = e.code() == ErrorCode::Parse || e.code() == ErrorCode::Invalid;
    if (o.json) {
      CommandReport r;
      r.command = app.get_subcommands().front()->get_name();
      r.status = usage ? "error" : "fail";
      r.data = json{{"code", error_code_name(e.code())}, {"message", e.detail()}};
      out << dump_canonical(to_json(r));
    }
    err << "error: " << e.what() << "\n";
    return usage ? ExitUsage : ExitFail;
  }
  print_outcome(res, o, out);
  return res.report.passed() ? ExitPass : ExitFail;
}

} // namespace colorlie
