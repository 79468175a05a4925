#include "burnloop/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "burnloop/config.hpp"
#include "burnloop/errors.hpp"

namespace burnloop {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xFF;
    h *= 1099511628211ULL;
  }
  return h;
}

void check_order_bound(size_t n, const std::string& name) {
  if ((int)n > config::max_group_order())
    throw ResourceError("group '" + name + "' of order " + std::to_string(n) +
                        " exceeds the configured bound " + std::to_string(config::max_group_order()));
}

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // "a then b": (a*b)(x) = b(a(x))
  std::vector<int> r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

}  // namespace

Elt Group::power(Elt a, long k) const {
  int d = element_order(a);
  k %= d;
  if (k < 0) k += d;
  Elt r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Elt Group::compose_parts(std::span<const Elt> parts) const {
  if ((int)parts.size() != factor_count()) throw std::invalid_argument("compose_parts: arity mismatch");
  long idx = 0;
  for (int i = 0; i < factor_count(); ++i) idx += (long)parts[i] * radix_[i];
  return (Elt)idx;
}

Elt Group::part(Elt g, int i) const { return (Elt)((g / radix_[i]) % factors_[i]->order()); }

std::vector<Elt> Group::parts(Elt g) const {
  std::vector<Elt> r(factor_count());
  for (int i = 0; i < factor_count(); ++i) r[i] = part(g, i);
  return r;
}

void Group::finalize() {
  // identity at 0
  for (Elt a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw ParseError("group '" + name_ + "': index 0 is not the identity");
  // Latin square
  for (Elt a = 0; a < n_; ++a) {
    std::vector<bool> row(n_, false), col(n_, false);
    for (Elt b = 0; b < n_; ++b) {
      Elt r = mul(a, b), c = mul(b, a);
      if (r >= n_ || c >= n_) throw ParseError("group '" + name_ + "': entry out of range");
      if (row[r] || col[c]) throw ParseError("group '" + name_ + "': table is not a Latin square");
      row[r] = col[c] = true;
    }
  }
  // associativity: exhaustive up to 64, sampled above
  if (n_ <= 64) {
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b)
        for (Elt c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw ParseError("group '" + name_ + "': multiplication not associative");
  } else {
    std::mt19937_64 rng(0xb15e7u ^ n_);
    for (int t = 0; t < 20000; ++t) {
      Elt a = (Elt)(rng() % n_), b = (Elt)(rng() % n_), c = (Elt)(rng() % n_);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw ParseError("group '" + name_ + "': multiplication not associative");
    }
  }
  inv_.assign(n_, kNoElt);
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  for (Elt a = 0; a < n_; ++a)
    if (inv_[a] == kNoElt || mul(inv_[a], a) != 0) throw ParseError("group '" + name_ + "': missing inverse");

  elt_order_.assign(n_, 0);
  for (Elt a = 0; a < n_; ++a) {
    int d = 1;
    Elt x = a;
    while (x != 0) {
      x = mul(x, a);
      ++d;
    }
    elt_order_[a] = d;
    if (n_ % d != 0) throw InternalError("group '" + name_ + "': element order does not divide group order");
  }

  class_of_.assign(n_, -1);
  for (Elt a = 0; a < n_; ++a) {
    if (class_of_[a] >= 0) continue;
    int id = (int)class_reps_.size();
    class_reps_.push_back(a);
    for (Elt g = 0; g < n_; ++g) class_of_[conj(a, g)] = id;
  }

  std::uint64_t h = 1469598103934665603ULL;
  h = fnv1a(h, (std::uint64_t)n_);
  for (Elt v : table_) h = fnv1a(h, v);
  digest_ = h;
}

GroupPtr Group::from_table(std::string name, const std::vector<std::vector<int>>& table) {
  check_order_bound(table.size(), name);
  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->n_ = (int)table.size();
  if (g->n_ == 0) throw ParseError("group table is empty");
  g->table_.resize((size_t)g->n_ * g->n_);
  for (int a = 0; a < g->n_; ++a) {
    if ((int)table[a].size() != g->n_) throw ParseError("group '" + g->name_ + "': table is not square");
    for (int b = 0; b < g->n_; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= g->n_) throw ParseError("group '" + g->name_ + "': table entry out of range");
      g->table_[(size_t)a * g->n_ + b] = (Elt)v;
    }
  }
  g->finalize();
  return g;
}

GroupPtr Group::from_permutations(std::string name, int points,
                                  const std::vector<std::vector<int>>& generator_images) {
  std::vector<int> identity(points);
  for (int i = 0; i < points; ++i) identity[i] = i;
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> queue{identity};
  for (const auto& gen : generator_images) {
    if ((int)gen.size() != points) throw ParseError("permutation generator has wrong length");
    std::vector<bool> hit(points, false);
    for (int v : gen) {
      if (v < 0 || v >= points || hit[v]) throw ParseError("generator is not a permutation");
      hit[v] = true;
    }
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& gen : generator_images) {
      auto p = compose_perm(queue[i], gen);
      if (seen.insert(p).second) {
        check_order_bound(seen.size(), name);
        queue.push_back(std::move(p));
      }
    }
  }
  std::vector<std::vector<int>> elems(seen.begin(), seen.end());
  std::sort(elems.begin(), elems.end());
  // identity is the lexicographic minimum among permutations
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose_perm(elems[a], elems[b]));
  return from_table(std::move(name), table);
}

GroupPtr make_product_group(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) throw std::invalid_argument("product of zero groups");
  long n = 1;
  std::string name;
  for (size_t i = 0; i < factors.size(); ++i) {
    n *= factors[i]->order();
    if (i) name += "x";
    name += factors[i]->name();
  }
  check_order_bound((size_t)n, name);
  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = name;
  g->n_ = (int)n;
  g->factors_ = factors;
  g->radix_.assign(factors.size(), 1);
  for (int i = (int)factors.size() - 2; i >= 0; --i)
    g->radix_[i] = g->radix_[i + 1] * factors[i + 1]->order();
  g->table_.resize((size_t)n * n);
  std::vector<Elt> pa(factors.size()), pb(factors.size()), pc(factors.size());
  for (Elt a = 0; a < n; ++a) {
    for (size_t i = 0; i < factors.size(); ++i) pa[i] = (Elt)((a / g->radix_[i]) % factors[i]->order());
    for (Elt b = 0; b < n; ++b) {
      long idx = 0;
      for (size_t i = 0; i < factors.size(); ++i) {
        pb[i] = (Elt)((b / g->radix_[i]) % factors[i]->order());
        idx += (long)factors[i]->mul(pa[i], pb[i]) * g->radix_[i];
      }
      g->table_[(size_t)a * n + b] = (Elt)idx;
    }
  }
  g->finalize();
  return g;
}

namespace groups {

namespace {

GroupPtr build_cyclic(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return Group::from_table("C" + std::to_string(m), t);
}

GroupPtr build_dihedral(int order) {
  int n = order / 2;
  if (n == 1) return build_cyclic(2);
  if (n == 2) {
    // order 4: the Klein group as <(0 1),(2 3)>
    return Group::from_permutations("D4", 4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  }
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return Group::from_permutations("D" + std::to_string(order), n, {rot, refl});
}

GroupPtr build_q8() {
  // elements: 1,-1,i,-i,j,-j,k,-k
  auto basemul = [](int a, int b) -> int {
    // index/2: 0=unit,1=i,2=j,3=k ; bit 0 is the sign
    // i*i=-1, i*j=k, i*k=-j, j*i=-k, j*j=-1, j*k=i, k*i=j, k*j=-i, k*k=-1
    int sa = a & 1, sb = b & 1, ua = a >> 1, ub = b >> 1;
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int r = prod[ua][ub] << 1;
    int s = sa ^ sb ^ sign[ua][ub];
    return r | s;
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = basemul(a, b);
  return Group::from_table("Q8", t);
}

GroupPtr build_symmetric(int n) {
  std::vector<int> tr(n), cyc(n);
  for (int i = 0; i < n; ++i) {
    tr[i] = i;
    cyc[i] = (i + 1) % n;
  }
  if (n >= 2) std::swap(tr[0], tr[1]);
  return Group::from_permutations("S" + std::to_string(n), n, {tr, cyc});
}

GroupPtr build_alternating(int n) {
  // generated by 3-cycles (0 1 i)
  std::vector<std::vector<int>> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> g(n);
    for (int j = 0; j < n; ++j) g[j] = j;
    g[0] = 1;
    g[1] = i;
    g[i] = 0;
    gens.push_back(g);
  }
  if (gens.empty()) gens.push_back({0});  // A1/A2 are trivial; not in catalog anyway
  return Group::from_permutations("A" + std::to_string(n), n, gens);
}

GroupPtr build_sl23() {
  // 2x2 matrices over F3 with det 1; identity forced to index 0
  struct M {
    int a, b, c, d;
  };
  std::vector<M> elems;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, d});
  auto key = [](const M& m) { return std::array<int, 4>{m.a, m.b, m.c, m.d}; };
  std::sort(elems.begin(), elems.end(), [&](const M& x, const M& y) { return key(x) < key(y); });
  auto it = std::find_if(elems.begin(), elems.end(),
                         [](const M& m) { return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1; });
  std::iter_swap(elems.begin(), it);
  std::map<std::array<int, 4>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[key(elems[i])] = (int)i;
  auto mul = [&](const M& x, const M& y) {
    return M{(x.a * y.a + x.b * y.c) % 3, (x.a * y.b + x.b * y.d) % 3, (x.c * y.a + x.d * y.c) % 3,
             (x.c * y.b + x.d * y.d) % 3};
  };
  std::vector<std::vector<int>> t(24, std::vector<int>(24));
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) t[i][j] = index.at(key(mul(elems[i], elems[j])));
  return Group::from_table("SL(2,3)", t);
}

std::mutex reg_mutex;
std::map<std::string, GroupPtr>& name_registry() {
  static std::map<std::string, GroupPtr> r;
  return r;
}
std::map<std::vector<const Group*>, GroupPtr>& product_registry() {
  static std::map<std::vector<const Group*>, GroupPtr> r;
  return r;
}

GroupPtr build_catalog(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'C') {
    int m = std::stoi(name.substr(1));
    if (m >= 1 && m <= 16) return build_cyclic(m);
  }
  if (name == "V4") return Group::from_permutations("V4", 4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  if (name.size() >= 2 && name[0] == 'D') {
    int m = std::stoi(name.substr(1));
    if (m >= 4 && m <= 16 && m % 2 == 0) return build_dihedral(m);
  }
  if (name == "Q8") return build_q8();
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '2' && name[1] <= '5')
    return build_symmetric(name[1] - '0');
  if (name.size() == 2 && name[0] == 'A' && name[1] >= '3' && name[1] <= '5')
    return build_alternating(name[1] - '0');
  if (name == "SL(2,3)" || name == "SL23") return build_sl23();
  throw ParseError("unknown catalog group '" + name + "'");
}

}  // namespace

GroupPtr catalog(const std::string& name) {
  {
    std::lock_guard<std::mutex> lk(reg_mutex);
    auto it = name_registry().find(name);
    if (it != name_registry().end()) return it->second;
  }
  GroupPtr g;
  if (name.find('x') != std::string::npos) {
    std::vector<GroupPtr> factors;
    size_t pos = 0;
    while (pos <= name.size()) {
      size_t nx = name.find('x', pos);
      std::string tok = name.substr(pos, nx == std::string::npos ? std::string::npos : nx - pos);
      factors.push_back(catalog(tok));
      if (nx == std::string::npos) break;
      pos = nx + 1;
    }
    g = product(factors);
  } else {
    g = build_catalog(name);
  }
  std::lock_guard<std::mutex> lk(reg_mutex);
  name_registry().emplace(name, g);
  return g;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int m = 1; m <= 16; ++m) names.push_back("C" + std::to_string(m));
  names.push_back("V4");
  for (int m = 4; m <= 16; m += 2) names.push_back("D" + std::to_string(m));
  names.push_back("Q8");
  for (int n = 2; n <= 5; ++n) names.push_back("S" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) names.push_back("A" + std::to_string(n));
  names.push_back("SL(2,3)");
  return names;
}

GroupPtr cyclic(int m) {
  if (m <= 16) return catalog("C" + std::to_string(m));
  std::string name = "C" + std::to_string(m);
  std::lock_guard<std::mutex> lk(reg_mutex);
  auto it = name_registry().find(name);
  if (it != name_registry().end()) return it->second;
  auto g = build_cyclic(m);
  name_registry().emplace(name, g);
  return g;
}

GroupPtr product(const std::vector<GroupPtr>& factors) {
  if (factors.size() == 1) return factors[0];
  std::vector<const Group*> key;
  for (const auto& f : factors) key.push_back(f.get());
  {
    std::lock_guard<std::mutex> lk(reg_mutex);
    auto it = product_registry().find(key);
    if (it != product_registry().end()) return it->second;
  }
  auto g = make_product_group(factors);
  std::lock_guard<std::mutex> lk(reg_mutex);
  product_registry().emplace(std::move(key), g);
  return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) { return product({a, b}); }

GroupPtr power(const GroupPtr& a, int n) {
  if (n <= 0) throw std::invalid_argument("power: exponent must be positive");
  return product(std::vector<GroupPtr>((size_t)n, a));
}

GroupPtr cyclic_power(int p, int e) {
  long m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  if (m > config::max_group_order()) throw ResourceError("cyclic group of order " + std::to_string(m) + " exceeds bound");
  return cyclic((int)m);
}

}  // namespace groups

}  // namespace burnloop
