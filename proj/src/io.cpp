#include "colorlie/io.hpp"

#include "colorlie/error.hpp"

#include <fstream>
#include <sstream>

namespace colorlie {

namespace {

[[noreturn]] void schema_error(const std::string &what) {
  throw AlgebraError(ErrorCode::Parse, what);
}

const json &field(const json &j, const char *name) {
  if (!j.is_object() || !j.contains(name))
    schema_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

template <typename F> auto guarded(const char *what, F &&f) {
  try {
    return f();
  } catch (const json::exception &e) {
    schema_error(std::string(what) + ": " + e.what());
  }
}

int element_index(const FiniteAbelianGroup &G, const std::string &text) {
  try {
    return G.index(GroupElement::parse(text));
  } catch (const AlgebraError &e) {
    schema_error("bad group element '" + text + "': " + e.detail());
  }
}

json sparse_constants(const std::vector<Scalar> &values, std::size_t n) {
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &v = values[(i * n + j) * n + k];
        if (!v.is_zero())
          out.push_back(json::array({i, j, k, v.to_string()}));
      }
  return out;
}

std::vector<Scalar> dense_constants(const json &list, std::size_t n) {
  std::vector<Scalar> out(n * n * n);
  for (const auto &entry : list) {
    if (!entry.is_array() || entry.size() != 4)
      schema_error("structure constants are [i, j, k, value] entries");
    const auto i = entry[0].get<std::size_t>(), j = entry[1].get<std::size_t>(),
               k = entry[2].get<std::size_t>();
    if (i >= n || j >= n || k >= n)
      schema_error("structure constant index out of range");
    out[(i * n + j) * n + k] += scalar_from_json(entry[3]);
  }
  return out;
}

json matrix_rows(const Matrix &m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_rows(const json &rows, std::size_t dim) {
  if (!rows.is_array() || rows.size() != dim)
    schema_error("matrix must have dim rows");
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim)
      schema_error("matrix rows must have dim entries");
    for (std::size_t c = 0; c < dim; ++c)
      m(r, c) = scalar_from_json(rows[r][c]);
  }
  return m;
}

} // namespace

std::string dump_canonical(const json &j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw AlgebraError(ErrorCode::Invalid, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out || !(out << text))
    throw AlgebraError(ErrorCode::Invalid, "cannot write '" + path + "'");
}

std::string kind_of(const json &j) {
  if (j.is_object() && j.contains("kind") && j["kind"].is_string())
    return j["kind"].get<std::string>();
  return "";
}

json to_json(const Scalar &s) { return s.to_string(); }

Scalar scalar_from_json(const json &j) {
  if (j.is_number_integer())
    return Scalar(j.get<long>());
  if (!j.is_string())
    schema_error("scalar must be a string such as \"1/2\" or \"1+1*i\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const AlgebraError &e) {
    schema_error("bad scalar '" + j.get<std::string>() + "': " + e.detail());
  }
}

json to_json(const FiniteAbelianGroup &G) { return G.cyclic_orders(); }

FiniteAbelianGroup group_from_json(const json &j) {
  return guarded("group", [&] {
    if (!j.is_array())
      schema_error("group must be a list of cyclic orders");
    return FiniteAbelianGroup(j.get<std::vector<int>>());
  });
}

json table_to_json(const GroupTable &t) {
  const auto &G = t.group();
  json out = json::object();
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      out[G.name(g) + "|" + G.name(h)] = t(g, h).to_string();
  return out;
}

GroupTable table_from_json(const FiniteAbelianGroup &G, const json &j,
                           std::optional<ExponentForm> *form) {
  return guarded("value table", [&] {
    if (!j.is_object())
      schema_error("value table must be an object");
    if (j.contains("exponent_matrix")) {
      ExponentForm f{field(j, "exponent_matrix").get<std::vector<std::vector<int>>>(),
                     j.value("root_order", 2)};
      if (form)
        *form = f;
      return table_from_exponents(G, f);
    }
    const std::size_t n = static_cast<std::size_t>(G.order());
    std::vector<Scalar> values(n * n);
    std::vector<bool> seen(n * n, false);
    for (const auto &[key, value] : j.items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos)
        schema_error("table keys look like \"(a,b)|(c,d)\", got '" + key + "'");
      const auto idx = static_cast<std::size_t>(element_index(G, key.substr(0, bar))) * n +
                       element_index(G, key.substr(bar + 1));
      values[idx] = scalar_from_json(value);
      seen[idx] = true;
    }
    for (std::size_t k = 0; k < n * n; ++k)
      if (!seen[k])
        schema_error("table is missing the pair " + G.name(static_cast<int>(k / n)) + "|" +
                     G.name(static_cast<int>(k % n)));
    return GroupTable(G, std::move(values));
  });
}

json values_to_json(const GroupTable &t, const std::optional<ExponentForm> &form) {
  if (form)
    return json{{"exponent_matrix", form->matrix}, {"root_order", form->root_order}};
  return table_to_json(t);
}

json to_json(const Bicharacter &eps) {
  return json{{"kind", "bicharacter"},
              {"group", to_json(eps.group())},
              {"values", values_to_json(eps.table(), eps.exponent_form())}};
}

Bicharacter bicharacter_from_json(const json &j) {
  auto G = group_from_json(field(j, "group"));
  std::optional<ExponentForm> form;
  auto table = table_from_json(G, field(j, "values"), &form);
  return validate_bicharacter(std::move(table), form);
}

json to_json(const Cocycle &c) {
  return json{{"kind", "cocycle"},
              {"group", to_json(c.group())},
              {"values", values_to_json(c.table(), c.exponent_form())}};
}

Cocycle cocycle_from_json(const json &j) {
  auto G = group_from_json(field(j, "group"));
  std::optional<ExponentForm> form;
  auto table = table_from_json(G, field(j, "values"), &form);
  return validate_cocycle(std::move(table), form);
}

json to_json(const ColorLieAlgebra &L) {
  const auto &G = L.group();
  json basis = json::array();
  for (const auto &b : L.basis())
    basis.push_back(json{{"name", b.name}, {"degree", G.name(b.degree)}});
  return json{{"kind", "color_lie"},
              {"group", to_json(G)},
              {"epsilon", values_to_json(L.eps().table(), L.eps().exponent_form())},
              {"basis", basis},
              {"brackets", sparse_constants(L.data().gamma, L.dim())}};
}

ColorLieData algebra_data_from_json(const json &j) {
  return guarded("color Lie algebra", [&] {
    auto G = group_from_json(field(j, "group"));
    std::optional<ExponentForm> form;
    auto table = table_from_json(G, field(j, "epsilon"), &form);
    auto eps = validate_bicharacter(std::move(table), form);
    std::vector<BasisElement> basis;
    for (const auto &b : field(j, "basis"))
      basis.push_back({field(b, "name").get<std::string>(),
                       element_index(G, field(b, "degree").get<std::string>())});
    auto data = ColorLieData::abelian(G, eps, std::move(basis));
    data.gamma = dense_constants(field(j, "brackets"), data.dim());
    return data;
  });
}

ColorLieAlgebra algebra_from_json(const json &j) {
  if (j.is_string())
    return builtin_algebra(j.get<std::string>());
  return validate_color_lie(algebra_data_from_json(j));
}

json to_json(const TwistTriple &t) {
  json phi;
  if (t.phi.source() == t.phi.target() && t.phi.is_identity()) {
    phi = "identity";
  } else {
    phi = json::object();
    for (int g = 0; g < t.phi.source().order(); ++g)
      phi[t.phi.source().name(g)] = t.phi.target().name(t.phi(g));
  }
  return json{{"kind", "twist_triple"},
              {"source_group", to_json(t.phi.source())},
              {"target_group", to_json(t.phi.target())},
              {"cocycle", values_to_json(t.c.table(), t.c.exponent_form())},
              {"phi", phi},
              {"eps_prime", values_to_json(t.eps_prime.table(), t.eps_prime.exponent_form())}};
}

TwistTriple triple_from_json(const json &j) {
  return guarded("twist triple", [&] {
    auto G = group_from_json(field(j, "source_group"));
    auto H = j.contains("target_group") ? group_from_json(j["target_group"]) : G;
    std::optional<ExponentForm> cform, eform;
    auto ctable = table_from_json(G, field(j, "cocycle"), &cform);
    auto c = validate_cocycle(std::move(ctable), cform);
    auto etable = table_from_json(H, field(j, "eps_prime"), &eform);
    auto eps = validate_bicharacter(std::move(etable), eform);
    const json &p = field(j, "phi");
    std::vector<int> table(static_cast<std::size_t>(G.order()), -1);
    if (p.is_string() && p.get<std::string>() == "identity") {
      if (!(G == H))
        schema_error("phi = identity needs equal source and target groups");
      for (int g = 0; g < G.order(); ++g)
        table[g] = g;
    } else {
      if (!p.is_object())
        schema_error("phi must be \"identity\" or an element table");
      for (const auto &[key, value] : p.items())
        table[element_index(G, key)] = element_index(H, value.get<std::string>());
      for (int g = 0; g < G.order(); ++g)
        if (table[g] < 0)
          schema_error("phi is missing " + G.name(g));
    }
    return TwistTriple{c, GroupMorphism(G, H, table), eps};
  });
}

json to_json(const AssocAlgebra &A) {
  json basis = json::array();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    json b{{"name", A.names[i]}};
    if (A.grading)
      b["degree"] = A.grading->group.name(A.grading->degrees[i]);
    basis.push_back(std::move(b));
  }
  json unit = json::array();
  for (const auto &u : A.unit)
    unit.push_back(u.to_string());
  json out{{"kind", "assoc_algebra"},
           {"basis", basis},
           {"unit", unit},
           {"products", sparse_constants(A.mult, A.dim())}};
  if (A.grading)
    out["group"] = to_json(A.grading->group);
  return out;
}

AssocAlgebra assoc_from_json(const json &j) {
  return guarded("associative algebra", [&] {
    AssocAlgebra A;
    std::optional<FiniteAbelianGroup> G;
    if (j.contains("group"))
      G = group_from_json(j["group"]);
    std::vector<int> degrees;
    for (const auto &b : field(j, "basis")) {
      A.names.push_back(field(b, "name").get<std::string>());
      if (G)
        degrees.push_back(element_index(*G, field(b, "degree").get<std::string>()));
    }
    for (const auto &u : field(j, "unit"))
      A.unit.push_back(scalar_from_json(u));
    if (A.unit.size() != A.dim())
      schema_error("unit needs one coordinate per basis element");
    A.mult = dense_constants(field(j, "products"), A.dim());
    if (G)
      A.grading = Grading{*G, std::move(degrees)};
    return A;
  });
}

json to_json(const Representation &r, const std::string &algebra_name) {
  json mats = json::array();
  for (const auto &m : r.matrices)
    mats.push_back(matrix_rows(m));
  return json{{"kind", "representation"},
              {"algebra", algebra_name.empty() ? to_json(r.algebra) : json(algebra_name)},
              {"dim", r.dim},
              {"matrices", mats}};
}

Representation representation_from_json(const json &j) {
  return guarded("representation", [&] {
    Representation r{algebra_from_json(field(j, "algebra")), field(j, "dim").get<std::size_t>(),
                     {}};
    const json &mats = field(j, "matrices");
    if (!mats.is_array() || mats.size() != r.algebra.dim())
      schema_error("one matrix per basis element is required");
    for (const auto &m : mats)
      r.matrices.push_back(matrix_from_rows(m, r.dim));
    return r;
  });
}

} // namespace colorlie
