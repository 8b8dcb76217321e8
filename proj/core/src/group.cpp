#include "grouplet/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace grouplet {

namespace {

constexpr int kMaxOrder = 128;
constexpr int kExhaustiveAssocLimit = 64;

std::string element_name(int i) { return "g" + std::to_string(i + 1); }

}  // namespace

FiniteGroup FiniteGroup::build(int n, std::vector<int> table, std::string label) {
  auto data = std::make_shared<Data>();
  data->n = n;
  data->table = std::move(table);
  data->label = std::move(label);
  validate(*data);
  data->inv.resize(static_cast<std::size_t>(n));
  auto op = [&](int i, int j) { return data->table[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (op(i, j) == 0) {
        data->inv[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
  }
  // Two-sided consistency; cannot fail once associativity has been verified.
  for (int i = 0; i < n; ++i) {
    if (op(data->inv[static_cast<std::size_t>(i)], i) != 0) {
      throw ValidationError("inverse of " + element_name(i) + " is not two-sided");
    }
  }
  return FiniteGroup(std::move(data));
}

void FiniteGroup::validate(const Data& data) {
  const int n_ = data.n;
  auto op = [&](int i, int j) { return data.table[static_cast<std::size_t>(i) * n_ + j]; };
  if (n_ < 1) throw ValidationError("group order must be positive");
  if (n_ > kMaxOrder) {
    throw CapacityError("group order " + std::to_string(n_) + " exceeds the supported bound " +
                        std::to_string(kMaxOrder));
  }
  if (data.table.size() != static_cast<std::size_t>(n_) * n_) {
    throw ValidationError("Cayley table size does not match the group order");
  }
  for (std::size_t k = 0; k < data.table.size(); ++k) {
    if (data.table[k] < 0 || data.table[k] >= n_) {
      throw ValidationError("Cayley table entry out of range at row " +
                            std::to_string(k / n_ + 1) + ", column " +
                            std::to_string(k % n_ + 1));
    }
  }

  // Identity-first convention: g_1 = 1.
  for (int j = 0; j < n_; ++j) {
    if (op(0, j) != j || op(j, 0) != j) {
      // Offer a reorder hint when some other index acts as identity.
      for (int e = 1; e < n_; ++e) {
        bool two_sided = true;
        for (int k = 0; k < n_ && two_sided; ++k) {
          two_sided = op(e, k) == k && op(k, e) == k;
        }
        if (two_sided) {
          throw ValidationError("identity element found at index " + std::to_string(e + 1) +
                                "; reorder the table so the identity comes first");
        }
      }
      throw ValidationError("index 1 is not a two-sided identity and no identity exists");
    }
  }

  // Latin-square property.
  std::vector<bool> seen(n_);
  for (int i = 0; i < n_; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n_; ++j) {
      if (seen[op(i, j)]) {
        throw ValidationError("row " + std::to_string(i + 1) +
                              " of the Cayley table is not a permutation");
      }
      seen[op(i, j)] = true;
    }
  }
  for (int j = 0; j < n_; ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (int i = 0; i < n_; ++i) {
      if (seen[op(i, j)]) {
        throw ValidationError("column " + std::to_string(j + 1) +
                              " of the Cayley table is not a permutation");
      }
      seen[op(i, j)] = true;
    }
  }

  auto check_triple = [&](int i, int j, int k) {
    if (op(op(i, j), k) != op(i, op(j, k))) {
      throw ValidationError("associativity fails on the triple (" + element_name(i) + ", " +
                            element_name(j) + ", " + element_name(k) + ")");
    }
  };

  if (n_ <= kExhaustiveAssocLimit) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) check_triple(i, j, k);
    return;
  }

  // Light's test: associativity on (x, s, y) for s in a generating set
  // implies associativity everywhere. Build the set greedily by closure.
  std::vector<int> generators;
  std::vector<bool> closed(n_, false);
  closed[0] = true;
  int closed_count = 1;
  while (closed_count < n_) {
    int fresh = 0;
    while (closed[fresh]) ++fresh;
    generators.push_back(fresh);
    closed[fresh] = true;
    ++closed_count;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n_; ++a) {
        if (!closed[a]) continue;
        for (int b = 0; b < n_; ++b) {
          if (!closed[b]) continue;
          int c = op(a, b);
          if (!closed[c]) {
            closed[c] = true;
            ++closed_count;
            grew = true;
          }
        }
      }
    }
  }
  for (int s : generators)
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) check_triple(x, s, y);
}

int FiniteGroup::inverse_index(int i) const {
  if (i < 0 || i >= data_->n) {
    throw ValidationError("element index " + std::to_string(i) + " out of range");
  }
  return data_->inv[static_cast<std::size_t>(i)];
}

bool FiniteGroup::same_structure(const FiniteGroup& other) const {
  if (data_ == other.data_) return true;
  return data_->n == other.data_->n && data_->table == other.data_->table;
}

FiniteGroup FiniteGroup::from_table(int n, const std::vector<std::vector<int>>& table,
                                    std::string label) {
  if (n < 1) throw ValidationError("group order must be positive");
  if (static_cast<int>(table.size()) != n) {
    throw ValidationError("Cayley table has " + std::to_string(table.size()) +
                          " rows, expected " + std::to_string(n));
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw ValidationError("row " + std::to_string(i + 1) + " of the Cayley table has " +
                            std::to_string(table[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  return build(n, std::move(flat), std::move(label));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  if (n > kMaxOrder) {
    throw CapacityError("cyclic group order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxOrder));
  }
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return build(n, std::move(flat), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int m) {
  if (m < 1) throw ValidationError("dihedral parameter must be positive");
  int n = 2 * m;
  if (n > kMaxOrder) {
    throw CapacityError("dihedral group order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxOrder));
  }
  // Index a < m is the rotation r^a, index m + a the reflection s*r^a,
  // with the relations s^2 = 1 and r^a s = s r^{-a}.
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> int& { return flat[static_cast<std::size_t>(i) * n + j]; };
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      at(a, b) = (a + b) % m;              // r^a r^b
      at(a, m + b) = m + ((b - a) % m + m) % m;  // r^a (s r^b) = s r^{b-a}
      at(m + a, b) = m + (a + b) % m;      // (s r^a) r^b
      at(m + a, m + b) = ((b - a) % m + m) % m;  // (s r^a)(s r^b) = r^{b-a}
    }
  }
  return build(n, std::move(flat), "D" + std::to_string(m));
}

FiniteGroup FiniteGroup::symmetric(int m) {
  if (m < 1) throw ValidationError("symmetric group parameter must be positive");
  if (m > 5) {
    throw CapacityError("symmetric group S" + std::to_string(m) +
                        " exceeds the supported bound (m <= 5)");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < perms.size(); ++i) index_of[perms[i]] = static_cast<int>(i);

  int n = static_cast<int>(perms.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  std::vector<int> prod(m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < m; ++x) prod[x] = perms[i][perms[j][x]];
      flat[static_cast<std::size_t>(i) * n + j] = index_of.at(prod);
    }
  }
  return build(n, std::move(flat), "S" + std::to_string(m));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements coded as (sign, basis) with basis 0..3 = 1, i, j, k and
  // index = 4*sign + basis, giving the ordering 1, i, j, k, -1, -i, -j, -k.
  struct Signed {
    int sign;  // 0 = +, 1 = -
    int basis;
  };
  auto basis_mul = [](int a, int b) -> Signed {
    if (a == 0) return {0, b};
    if (b == 0) return {0, a};
    if (a == b) return {1, 0};  // i*i = j*j = k*k = -1
    // i*j = k, j*k = i, k*i = j; reversed order flips the sign.
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    return {forward ? 0 : 1, third[a][b]};
  };
  std::vector<int> flat(64);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Signed r = basis_mul(i % 4, j % 4);
      int sign = (i / 4) ^ (j / 4) ^ r.sign;
      flat[static_cast<std::size_t>(i) * 8 + j] = 4 * sign + r.basis;
    }
  }
  return build(8, std::move(flat), "Q8");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  long long order = static_cast<long long>(g.order()) * h.order();
  if (order > kMaxOrder) {
    throw CapacityError("direct product order " + std::to_string(order) + " exceeds " +
                        std::to_string(kMaxOrder));
  }
  int gn = g.order(), hn = h.order();
  int n = gn * hn;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i1 = 0; i1 < gn; ++i1)
    for (int j1 = 0; j1 < hn; ++j1)
      for (int i2 = 0; i2 < gn; ++i2)
        for (int j2 = 0; j2 < hn; ++j2) {
          int a = i1 * hn + j1;
          int b = i2 * hn + j2;
          flat[static_cast<std::size_t>(a) * n + b] = g.op(i1, i2) * hn + h.op(j1, j2);
        }
  return build(n, std::move(flat), g.label() + "x" + h.label());
}

namespace {

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("group file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("table")) {
    throw ValidationError("group file '" + path + "' must be an object with n, label, table");
  }
  if (!doc["n"].is_number_integer()) {
    throw ValidationError("group file '" + path + "': n must be an integer");
  }
  int n = doc["n"].get<int>();
  std::string label = doc.value("label", "G" + std::to_string(n));
  if (!doc["table"].is_array()) {
    throw ValidationError("group file '" + path + "': table must be an array of arrays");
  }
  std::vector<std::vector<int>> table;
  for (const auto& row : doc["table"]) {
    if (!row.is_array()) {
      throw ValidationError("group file '" + path + "': table must be an array of arrays");
    }
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) {
        throw ValidationError("group file '" + path + "': table entries must be integers");
      }
      r.push_back(cell.get<int>());
    }
    table.push_back(std::move(r));
  }
  return FiniteGroup::from_table(n, table, label);
}

FiniteGroup parse_group_atom(const std::string& atom) {
  auto numeric_tail = [&](std::size_t from) -> int {
    if (from >= atom.size()) {
      throw ValidationError("invalid group spec '" + atom + "': missing order");
    }
    int value = 0;
    for (std::size_t i = from; i < atom.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(atom[i]))) {
        throw ValidationError("invalid group spec '" + atom + "'");
      }
      value = value * 10 + (atom[i] - '0');
      if (value > 1000) throw CapacityError("group spec '" + atom + "' is too large");
    }
    return value;
  };
  if (atom == "Q8") return FiniteGroup::quaternion8();
  if (!atom.empty() && atom[0] == 'C') return FiniteGroup::cyclic(numeric_tail(1));
  if (!atom.empty() && atom[0] == 'D') return FiniteGroup::dihedral(numeric_tail(1));
  if (!atom.empty() && atom[0] == 'S') return FiniteGroup::symmetric(numeric_tail(1));
  throw ValidationError("invalid group spec '" + atom +
                        "' (expected C<n>, D<m>, S<m>, Q8, or a product like C2xC2)");
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& text) {
  if (text.empty()) throw ValidationError("empty group spec");
  if (text[0] == '@') return load_group_file(text.substr(1));

  std::vector<std::string> atoms;
  std::string current;
  for (char c : text) {
    if (c == 'x') {
      atoms.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  atoms.push_back(current);

  FiniteGroup result = parse_group_atom(atoms[0]);
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    result = FiniteGroup::direct_product(result, parse_group_atom(atoms[i]));
  }
  return result;
}

std::vector<FiniteGroup> catalog_groups(int max_order) {
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 12; ++n) out.push_back(FiniteGroup::cyclic(n));
  for (int m = 3; m <= 6; ++m) out.push_back(FiniteGroup::dihedral(m));
  out.push_back(FiniteGroup::symmetric(3));
  out.push_back(FiniteGroup::quaternion8());
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
  out.push_back(FiniteGroup::direct_product(
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
      FiniteGroup::cyclic(2)));
  out.push_back(FiniteGroup::symmetric(4));

  std::erase_if(out, [&](const FiniteGroup& g) { return g.order() > max_order; });
  std::stable_sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.label() < b.label();
  });
  return out;
}

}  // namespace grouplet
