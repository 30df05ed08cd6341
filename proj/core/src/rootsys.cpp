#include "arthur/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace arthur {

TypeId TypeId::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("unknown type-id: " + std::string(s));
  char fam = static_cast<char>(std::toupper(s[0]));
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(s[i])) throw std::invalid_argument("unknown type-id: " + std::string(s));
    rank = rank * 10 + (s[i] - '0');
  }
  TypeId t{static_cast<Family>(fam), rank};
  switch (t.family) {
    case Family::A: if (rank >= 1) return t; break;
    case Family::B: if (rank >= 2) return t; break;
    case Family::C: if (rank >= 2) return t; break;
    case Family::D: if (rank >= 3) return t; break;
    case Family::E: if (rank >= 6 && rank <= 8) return t; break;
    case Family::F: if (rank == 4) return t; break;
    case Family::G: if (rank == 2) return t; break;
  }
  throw std::invalid_argument("unknown type-id: " + std::string(s));
}

std::string TypeId::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool TypeId::is_exceptional() const {
  return family == Family::E || family == Family::F || family == Family::G;
}

namespace {

std::vector<std::pair<int, int>> simply_laced_edges(TypeId t) {
  std::vector<std::pair<int, int>> e;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < t.rank; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < t.rank - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(t.rank - 3, t.rank - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to 4.
      e = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      if (t.rank >= 7) e.emplace_back(5, 6);
      if (t.rank == 8) e.emplace_back(6, 7);
      break;
    default:
      break;
  }
  return e;
}

}  // namespace

void RootSystem::build_cartan() {
  int r = rank_;
  cartan_.assign(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  auto bond = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };

  switch (type_.family) {
    case Family::A:
    case Family::D:
    case Family::E:
      for (auto [i, j] : simply_laced_edges(type_)) bond(i, j);
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
      cartan_[r - 2][r - 1] = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
      cartan_[r - 1][r - 2] = -2;  // alpha_n long
      break;
    case Family::F:
      bond(0, 1); bond(1, 2); bond(2, 3);
      cartan_[1][2] = -2;  // <alpha_2, alpha_3^vee>, alpha_3 short
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long (Bourbaki plate IX).
      cartan_[0][1] = -1;
      cartan_[1][0] = -3;
      break;
  }

  // Symmetrizer from the Cartan asymmetry: d_i/d_j = cartan(j,i)/cartan(i,j).
  sym_.assign(r, Rat(0));
  sym_[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back(); todo.pop_back();
    for (int j = 0; j < r; ++j) {
      if (i == j || cartan_[i][j] == 0 || sym_[j] != 0) continue;
      sym_[j] = sym_[i] * Rat(cartan_[j][i]) / Rat(cartan_[i][j]);
      todo.push_back(j);
    }
  }
  Rat mx = *std::max_element(sym_.begin(), sym_.end());
  for (auto& d : sym_) d /= mx;  // long roots have (alpha,alpha) = 2
}

void RootSystem::generate_roots() {
  int r = rank_;
  std::map<IntVec, int> seen;
  std::vector<IntVec> all;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(all.size()));
    all.push_back(e);
  }
  // Closure under simple reflections.
  for (size_t k = 0; k < all.size(); ++k) {
    for (int i = 0; i < r; ++i) {
      IntVec v = all[k];
      int64_t p = 0;
      for (int j = 0; j < r; ++j) p += v[j] * cartan_[j][i];
      v[i] -= p;
      if (!seen.count(v)) {
        seen.emplace(v, static_cast<int>(all.size()));
        all.push_back(v);
      }
    }
  }

  for (const auto& v : all) {
    bool pos = std::all_of(v.begin(), v.end(), [](int64_t c) { return c >= 0; });
    if (!pos) continue;
    RootData rd;
    rd.coords = v;
    rd.height = 0;
    for (auto c : v) rd.height += c;
    rd.fund.assign(r, 0);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) rd.fund[j] += v[i] * cartan_[i][j];
    // (alpha, alpha)/2 via the symmetrizer: (alpha_i, alpha_j) = d_j * cartan(i,j).
    Rat half_norm = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        half_norm += Rat(v[i]) * Rat(v[j]) * sym_[j] * Rat(cartan_[i][j]);
    half_norm /= 2;
    rd.is_long = (half_norm == 1);
    rd.coroot.assign(r, 0);
    rd.coheight = 0;
    for (int i = 0; i < r; ++i) {
      Rat c = Rat(v[i]) * sym_[i] / half_norm;
      if (denominator(c) != 1) throw std::logic_error("non-integral coroot");
      rd.coroot[i] = static_cast<int64_t>(numerator(c));
      rd.coheight += rd.coroot[i];
    }
    roots_.push_back(std::move(rd));
  }

  auto first_nonzero = [](const IntVec& v) {
    size_t i = 0;
    while (i < v.size() && v[i] == 0) ++i;
    return i;
  };
  std::sort(roots_.begin(), roots_.end(), [&](const RootData& a, const RootData& b) {
    if (a.height != b.height) return a.height < b.height;
    size_t fa = first_nonzero(a.coords), fb = first_nonzero(b.coords);
    if (fa != fb) return fa < fb;
    return a.coords < b.coords;
  });
  // simple roots occupy indices 0..r-1 in Bourbaki order

  for (int idx = 0; idx < static_cast<int>(roots_.size()); ++idx)
    root_lookup_.emplace_back(roots_[idx].coords, idx);
  std::sort(root_lookup_.begin(), root_lookup_.end());

  highest_ = 0;
  dual_highest_ = 0;
  for (int idx = 1; idx < static_cast<int>(roots_.size()); ++idx) {
    if (roots_[idx].height > roots_[highest_].height) highest_ = idx;
    if (roots_[idx].coheight > roots_[dual_highest_].coheight) dual_highest_ = idx;
  }
}

void RootSystem::build_tables() {
  int r = rank_;
  int n = num_positive();
  srefl_.assign(r, std::vector<int>(2 * n, kNoRoot));
  for (int i = 0; i < r; ++i) {
    for (int idx = 0; idx < n; ++idx) {
      IntVec v = roots_[idx].coords;
      int64_t p = roots_[idx].fund[i];
      v[i] -= p;
      int img = find_signed_root(v);
      srefl_[i][idx] = img;
      srefl_[i][idx + n] = img < n ? img + n : img - n;
    }
  }

  // Inverse of the fundamental-from-root coordinate map f = C^T c.
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(2 * r, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = Rat(cartan_[j][i]);  // transpose: fund = C^T root
    m[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rat d = m[col][col];
    for (auto& x : m[col]) x /= d;
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int j = 0; j < 2 * r; ++j) m[row][j] -= f * m[col][j];
    }
  }
  inv_cartan_.assign(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) inv_cartan_[i][j] = m[i][r + j];

  dual_node_perm_.resize(r);
  for (int i = 0; i < r; ++i) dual_node_perm_[i] = i;
}

RootSystem::RootSystem(TypeId type) : type_(type), rank_(type.rank) {
  build_cartan();
  generate_roots();
  build_tables();

  static const std::map<std::string, int> expected = {
      {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  auto it = expected.find(type_.str());
  if (it != expected.end() && num_positive() != it->second)
    throw std::logic_error("positive root count mismatch for " + type_.str());
}

const RootSystem& RootSystem::get(TypeId type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[type.str()];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

const RootSystem& RootSystem::get(std::string_view type) {
  return get(TypeId::parse(type));
}

int RootSystem::find_root(const IntVec& coords) const {
  auto it = std::lower_bound(root_lookup_.begin(), root_lookup_.end(),
                             std::make_pair(coords, 0));
  if (it != root_lookup_.end() && it->first == coords) return it->second;
  return kNoRoot;
}

int RootSystem::find_signed_root(const IntVec& coords) const {
  int idx = find_root(coords);
  if (idx != kNoRoot) return idx;
  IntVec neg(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  idx = find_root(neg);
  if (idx != kNoRoot) return idx + num_positive();
  return kNoRoot;
}

Weight RootSystem::rho() const { return Weight(rank_, Rat(1)); }

Weight RootSystem::fundamental_weight(int i) const {
  Weight w(rank_, Rat(0));
  w[i] = 1;
  return w;
}

std::vector<Rat> RootSystem::to_root_coords(const Weight& f) const {
  std::vector<Rat> c(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i] += inv_cartan_[i][j] * f[j];
  return c;
}

Weight RootSystem::from_root_coords(const std::vector<Rat>& c) const {
  Weight f(rank_, Rat(0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i) f[j] += c[i] * Rat(cartan_[i][j]);
  return f;
}

bool RootSystem::is_dominant(const Weight& f) const {
  return std::all_of(f.begin(), f.end(), [](const Rat& x) { return x >= 0; });
}

bool RootSystem::is_integral(const Weight& f) const {
  return std::all_of(f.begin(), f.end(), [](const Rat& x) { return denominator(x) == 1; });
}

Rat RootSystem::pair(const Weight& lambda, int t) const {
  if (static_cast<int>(lambda.size()) != rank_)
    throw std::invalid_argument("weight/root system rank mismatch");
  int n = num_positive();
  const IntVec& cc = roots_[t % n].coroot;
  Rat p = 0;
  for (int i = 0; i < rank_; ++i) p += lambda[i] * Rat(cc[i]);
  return t < n ? p : -p;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  // (a, b) = sum_i d_i * <a, alpha_i^vee> * c_i(b)
  auto cb = to_root_coords(b);
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) s += sym_[i] * a[i] * cb[i];
  return s;
}

int RootSystem::parity_pair(const ParityWeight& delta, int t) const {
  const IntVec& cc = roots_[t % num_positive()].coroot;
  int64_t p = 0;
  for (int i = 0; i < rank_; ++i) p += delta[i] * cc[i];
  return static_cast<int>(p & 1);
}

uint64_t RootSystem::weyl_order() const {
  auto fact = [](int n) { uint64_t f = 1; for (int i = 2; i <= n; ++i) f *= i; return f; };
  int r = rank_;
  switch (type_.family) {
    case Family::A: return fact(r + 1);
    case Family::B:
    case Family::C: return fact(r) << r;
    case Family::D: return fact(r) << (r - 1);
    case Family::G: return 12;
    case Family::F: return 1152;
    case Family::E:
      if (r == 6) return 51840;
      if (r == 7) return 2903040;
      return 696729600;
  }
  return 0;
}

Rat pair_weight_coroot(const RootSystem& rs, const Weight& lambda, int t) {
  return rs.pair(lambda, t);
}

WeightCoordinates weight_coordinates(const RootSystem& rs, const Weight& lambda) {
  WeightCoordinates wc;
  wc.fundamental = lambda;
  wc.simple_root = rs.to_root_coords(lambda);
  wc.dominant = rs.is_dominant(lambda);
  return wc;
}

Weight weight_from_ints(const IntVec& v) {
  Weight w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i];
  return w;
}

IntVec weight_to_ints(const Weight& w) {
  IntVec v(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (denominator(w[i]) != 1) throw std::invalid_argument("weight not integral");
    v[i] = static_cast<int64_t>(numerator(w[i]));
  }
  return v;
}

std::string weight_str(const Weight& w) {
  bool digits = true;
  for (const auto& x : w)
    if (denominator(x) != 1 || x < 0 || x > 9) digits = false;
  std::ostringstream os;
  if (digits) {
    for (const auto& x : w) os << x;
  } else {
    os << "[";
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "]";
  }
  return os.str();
}

std::string parity_str(const ParityWeight& p) {
  std::string s;
  for (auto b : p) s += static_cast<char>('0' + (b & 1));
  return s;
}

ParityWeight parity_from_weight(const Weight& w) {
  ParityWeight p(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (denominator(w[i]) != 1) throw std::invalid_argument("parity weight not integral");
    p[i] = static_cast<uint8_t>(static_cast<int64_t>(numerator(w[i]) % 2 + 2) % 2);
  }
  return p;
}

}  // namespace arthur
