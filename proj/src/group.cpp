#include "colorlie/group.hpp"

#include "colorlie/error.hpp"

#include <cctype>
#include <sstream>

namespace colorlie {

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < residues.size(); ++j) {
    if (j)
      out += ',';
    out += std::to_string(residues[j]);
  }
  return out + ")";
}

GroupElement GroupElement::parse(std::string_view text) {
  std::size_t pos = 0;
  if (text.empty() || text[0] != '(')
    throw ParseError(0, "group element must start with '('");
  ++pos;
  GroupElement g;
  if (pos < text.size() && text[pos] == ')') {
    if (pos + 1 != text.size())
      throw ParseError(pos + 1, "trailing characters");
    return g;
  }
  while (true) {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-')
      ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-'))
      throw ParseError(pos, "expected integer residue");
    g.residues.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    if (pos >= text.size())
      throw ParseError(pos, "unterminated group element");
    if (text[pos] == ')') {
      if (pos + 1 != text.size())
        throw ParseError(pos + 1, "trailing characters");
      return g;
    }
    if (text[pos] != ',')
      throw ParseError(pos, "expected ',' or ')'");
    ++pos;
  }
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  order_ = 1;
  for (int n : orders_) {
    if (n < 1)
      throw AlgebraError(ErrorCode::Invalid, "cyclic order must be >= 1");
    order_ *= n;
  }
  table_.resize(static_cast<std::size_t>(order_) * order_);
  inverse_.resize(order_);
  std::vector<GroupElement> elems;
  elems.reserve(order_);
  for (int g = 0; g < order_; ++g)
    elems.push_back(element(g));
  for (int g = 0; g < order_; ++g) {
    GroupElement inv = elems[g];
    for (std::size_t j = 0; j < orders_.size(); ++j)
      inv.residues[j] = (orders_[j] - inv.residues[j]) % orders_[j];
    inverse_[g] = index(inv);
    for (int h = 0; h < order_; ++h) {
      GroupElement s = elems[g];
      for (std::size_t j = 0; j < orders_.size(); ++j)
        s.residues[j] = (s.residues[j] + elems[h].residues[j]) % orders_[j];
      table_[static_cast<std::size_t>(g) * order_ + h] = index(s);
    }
  }
}

FiniteAbelianGroup FiniteAbelianGroup::product(const FiniteAbelianGroup &g,
                                               const FiniteAbelianGroup &h) {
  std::vector<int> orders = g.orders_;
  orders.insert(orders.end(), h.orders_.begin(), h.orders_.end());
  return FiniteAbelianGroup(std::move(orders));
}

GroupElement FiniteAbelianGroup::element(int index) const {
  if (index < 0 || index >= order_)
    throw AlgebraError(ErrorCode::GroupMismatch, "group index out of range");
  GroupElement g;
  g.residues.resize(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    g.residues[j] = index % orders_[j];
    index /= orders_[j];
  }
  return g;
}

int FiniteAbelianGroup::index(const GroupElement &g) const {
  if (g.residues.size() != orders_.size())
    throw AlgebraError(ErrorCode::GroupMismatch,
                       "element " + g.to_string() + " has wrong number of components");
  int idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    int r = g.residues[j];
    if (r < 0 || r >= orders_[j])
      throw AlgebraError(ErrorCode::GroupMismatch,
                         "element " + g.to_string() + " is not reduced");
    idx = idx * orders_[j] + r;
  }
  return idx;
}

GroupElement FiniteAbelianGroup::op(const GroupElement &g, const GroupElement &h) const {
  return element(mul(index(g), index(h)));
}

GroupTable::GroupTable(FiniteAbelianGroup group, std::vector<Scalar> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(group_.order()) * group_.order())
    throw AlgebraError(ErrorCode::Invalid, "table size does not match |G|^2");
}

GroupTable GroupTable::constant(const FiniteAbelianGroup &group, const Scalar &value) {
  return GroupTable(group, std::vector<Scalar>(
                               static_cast<std::size_t>(group.order()) * group.order(), value));
}

GroupTable table_from_exponents(const FiniteAbelianGroup &group, const ExponentForm &form) {
  const auto &orders = group.cyclic_orders();
  const std::size_t k = orders.size();
  if (form.root_order != 1 && form.root_order != 2 && form.root_order != 4)
    throw AlgebraError(ErrorCode::Unrepresentable,
                       "root of unity of order " + std::to_string(form.root_order) +
                           " is not in Q(i)");
  if (form.matrix.size() != k)
    throw AlgebraError(ErrorCode::Invalid, "exponent matrix must be k x k");
  for (std::size_t a = 0; a < k; ++a) {
    if (form.matrix[a].size() != k)
      throw AlgebraError(ErrorCode::Invalid, "exponent matrix must be k x k");
    for (std::size_t b = 0; b < k; ++b) {
      long m = form.matrix[a][b];
      if ((m * orders[a]) % form.root_order != 0 || (m * orders[b]) % form.root_order != 0)
        throw AlgebraError(ErrorCode::Invalid,
                           "exponent entry (" + std::to_string(a) + "," + std::to_string(b) +
                               ") is not well defined on the residues");
    }
  }
  const Scalar powers[4] = {Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
  const int step = 4 / form.root_order;
  const int n = group.order();
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    auto ga = group.element(g);
    for (int h = 0; h < n; ++h) {
      auto hb = group.element(h);
      long e = 0;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          e += static_cast<long>(form.matrix[a][b]) * ga.residues[a] * hb.residues[b];
      long r = ((e % form.root_order) + form.root_order) % form.root_order;
      values.push_back(powers[(r * step) % 4]);
    }
  }
  return GroupTable(group, std::move(values));
}

Bicharacter Bicharacter::trivial(const FiniteAbelianGroup &group) {
  return validate_bicharacter(GroupTable::constant(group, Scalar(1)));
}

Bicharacter validate_bicharacter(GroupTable table, std::optional<ExponentForm> form) {
  const auto &G = table.group();
  const int n = G.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (table(g, h).is_zero())
        throw AlgebraError(ErrorCode::ZeroValue,
                           "eps" + G.name(g) + G.name(h) + " = 0");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!(table(g, h) * table(h, g)).is_one())
        throw AlgebraError(ErrorCode::Antisym, "(g,h) = (" + G.name(g) + "," + G.name(h) +
                                                   "): eps(g,h)eps(h,g) = " +
                                                   (table(g, h) * table(h, g)).to_string());
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        bool left = table(g, G.mul(h, k)) == table(g, h) * table(g, k);
        bool right = table(G.mul(g, h), k) == table(g, k) * table(h, k);
        if (!left || !right)
          throw AlgebraError(ErrorCode::Bilinear, "(g,h,k) = (" + G.name(g) + "," + G.name(h) +
                                                      "," + G.name(k) + ")");
      }
  Bicharacter b;
  b.table_ = std::move(table);
  b.form_ = std::move(form);
  return b;
}

Bicharacter bicharacter_from_exponents(const FiniteAbelianGroup &group,
                                       const ExponentForm &form) {
  return validate_bicharacter(table_from_exponents(group, form), form);
}

Cocycle Cocycle::trivial(const FiniteAbelianGroup &group) {
  return validate_cocycle(GroupTable::constant(group, Scalar(1)));
}

Cocycle Cocycle::inverse() const {
  std::vector<Scalar> values;
  values.reserve(table_.values().size());
  for (const auto &v : table_.values())
    values.push_back(v.inverse());
  return validate_cocycle(GroupTable(group(), std::move(values)));
}

Cocycle Cocycle::times(const Cocycle &other) const {
  if (!(group() == other.group()))
    throw AlgebraError(ErrorCode::GroupMismatch, "cocycles live on different groups");
  std::vector<Scalar> values;
  values.reserve(table_.values().size());
  for (std::size_t i = 0; i < table_.values().size(); ++i)
    values.push_back(table_.values()[i] * other.table_.values()[i]);
  return validate_cocycle(GroupTable(group(), std::move(values)));
}

Cocycle Cocycle::unchecked(GroupTable table) {
  Cocycle c;
  c.table_ = std::move(table);
  return c;
}

Cocycle validate_cocycle(GroupTable table, std::optional<ExponentForm> form) {
  const auto &G = table.group();
  const int n = G.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (table(g, h).is_zero())
        throw AlgebraError(ErrorCode::ZeroValue, "c" + G.name(g) + G.name(h) + " = 0");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        Scalar lhs = table(g, h) * table(G.mul(g, h), k);
        Scalar rhs = table(h, k) * table(g, G.mul(h, k));
        if (lhs != rhs)
          throw AlgebraError(ErrorCode::Cocycle,
                             "(g,h,k) = (" + G.name(g) + "," + G.name(h) + "," + G.name(k) +
                                 "): c(g,h)c(gh,k) = " + lhs.to_string() +
                                 ", c(h,k)c(g,hk) = " + rhs.to_string());
      }
  Cocycle c;
  c.scale_ = table(0, 0).inverse();
  if (!c.scale_.is_one()) {
    std::vector<Scalar> values;
    values.reserve(table.values().size());
    for (const auto &v : table.values())
      values.push_back(v * c.scale_);
    table = GroupTable(G, std::move(values));
    form.reset();
  }
  c.table_ = std::move(table);
  c.form_ = std::move(form);
  return c;
}

Cocycle cocycle_from_exponents(const FiniteAbelianGroup &group, const ExponentForm &form) {
  return validate_cocycle(table_from_exponents(group, form), form);
}

GroupTable bc_form(const Cocycle &c) {
  const auto &G = c.group();
  const int n = G.order();
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      values.push_back(c(g, h) / c(h, g));
  GroupTable b(G, std::move(values));
  for (int g = 0; g < n; ++g) {
    if (!b(g, g).is_one())
      throw AlgebraError(ErrorCode::Bilinear, "B_c(g,g) != 1 at g = " + G.name(g));
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (b(g, G.mul(h, k)) != b(g, h) * b(g, k) || b(G.mul(g, h), k) != b(g, k) * b(h, k))
          throw AlgebraError(ErrorCode::Bilinear, "B_c fails bilinearity at (" + G.name(g) +
                                                      "," + G.name(h) + "," + G.name(k) + ")");
  }
  return b;
}

CheckReport check_cocycle_identities(const Cocycle &c) {
  CheckReport report{"cocycle identities"};
  const auto &G = c.group();
  const int n = G.order();
  const int e = G.identity();
  for (int g = 0; g < n; ++g) {
    ++report.cases;
    if (c(g, e) != c(e, e) || c(e, g) != c(e, e))
      report.fail("E_IDENTITY", "edge values c(g,e)=c(e,h)=c(e,e) at g = " + G.name(g));
    ++report.cases;
    if (c(g, G.inv(g)) != c(G.inv(g), g))
      report.fail("E_IDENTITY", "c(h,h^-1)=c(h^-1,h) at h = " + G.name(g));
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      ++report.cases;
      const int gi = G.inv(g), hi = G.inv(h);
      const int hig = G.mul(hi, g), gih = G.mul(gi, h);
      Scalar lhs = c(gi, h) / (c(g, gi) * c(h, hig));
      Scalar rhs = c(hig, gih).inverse();
      if (lhs != rhs)
        report.fail("E_IDENTITY", "inverse-pair identity at (g,h) = (" + G.name(g) + "," + G.name(h) + ")");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
          ++report.cases;
          Scalar lhs = c(g, b) * c(g, h) * c(a, b) * c(G.mul(a, b), G.mul(g, h));
          Scalar rhs = c(b, g) * c(a, g) * c(b, h) * c(G.mul(a, g), G.mul(b, h));
          if (lhs != rhs)
            report.fail("E_IDENTITY", "product identity at (|a|,|b|,g,h) = (" + G.name(a) + "," +
                                          G.name(b) + "," + G.name(g) + "," + G.name(h) + ")");
        }
  return report;
}

Cocycle example_cocycle() {
  return cocycle_from_exponents(FiniteAbelianGroup::klein(), ExponentForm{{{0, 1}, {0, 0}}, 2});
}

Bicharacter example_epsilon() {
  return bicharacter_from_exponents(FiniteAbelianGroup::klein(),
                                    ExponentForm{{{0, 1}, {-1, 0}}, 2});
}

} // namespace colorlie
