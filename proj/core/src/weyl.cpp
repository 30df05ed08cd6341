#include "arthur/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace arthur {

WeylElement WeylElement::identity(const RootSystem& rs) {
  return from_rho_image(IntVec(rs.rank(), 1));
}

WeylElement WeylElement::simple(const RootSystem& rs, int i) {
  IntVec img(rs.rank(), 1);
  simple_reflect(rs, img, i);
  return from_rho_image(std::move(img));
}

WeylElement WeylElement::from_rho_image(IntVec img) {
  WeylElement w;
  w.img_ = std::move(img);
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  IntVec img(rs.rank(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) simple_reflect(rs, img, *it);
  return from_rho_image(std::move(img));
}

WeylElement WeylElement::reflection(const RootSystem& rs, int idx) {
  // s_gamma(rho) = rho - <rho, gamma^vee> gamma
  IntVec img(rs.rank(), 1);
  int64_t ch = rs.coheight(idx);
  const IntVec& f = rs.root_fund(idx);
  for (int j = 0; j < rs.rank(); ++j) img[j] -= ch * f[j];
  return from_rho_image(std::move(img));
}

bool WeylElement::is_identity() const {
  return std::all_of(img_.begin(), img_.end(), [](int64_t v) { return v == 1; });
}

std::vector<int> WeylElement::word(const RootSystem& rs) const {
  std::vector<int> w;
  IntVec x = img_;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && x[i] > 0) ++i;
    if (i == rs.rank()) break;
    w.push_back(i);
    simple_reflect(rs, x, i);
  }
  return w;
}

int WeylElement::length(const RootSystem& rs) const {
  return static_cast<int>(word(rs).size());
}

WeylElement WeylElement::inverse(const RootSystem& rs) const {
  auto w = word(rs);
  std::reverse(w.begin(), w.end());
  return from_word(rs, w);
}

WeylElement WeylElement::mul(const RootSystem& rs, const WeylElement& other) const {
  auto w = word(rs);
  IntVec img = other.img_;
  for (auto it = w.rbegin(); it != w.rend(); ++it) simple_reflect(rs, img, *it);
  return from_rho_image(std::move(img));
}

Weight apply_weyl(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw std::invalid_argument("weight/root system rank mismatch");
  auto word = w.word(rs);
  Weight x = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Rat c = x[*it];
    if (c == 0) continue;
    for (int j = 0; j < rs.rank(); ++j) x[j] -= c * Rat(rs.cartan(*it, j));
  }
  return x;
}

ParityWeight parity_action(const RootSystem& rs, const WeylElement& w, const ParityWeight& delta) {
  auto word = w.word(rs);
  ParityWeight x = delta;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    if (!(x[i] & 1)) continue;  // s_i delta = delta - <delta,alpha_i^vee> alpha_i
    for (int j = 0; j < rs.rank(); ++j)
      x[j] = static_cast<uint8_t>((x[j] + rs.cartan(i, j)) & 1);
  }
  return x;
}

int apply_weyl_root(const RootSystem& rs, const WeylElement& w, int t) {
  auto word = w.word(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = rs.reflect(*it, t);
  return t;
}

std::pair<Weight, WeylElement> dominantize(const RootSystem& rs, const Weight& lambda) {
  Weight x = lambda;
  std::vector<int> steps;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && x[i] >= 0) ++i;
    if (i == rs.rank()) break;
    Rat c = x[i];
    for (int j = 0; j < rs.rank(); ++j) x[j] -= c * Rat(rs.cartan(i, j));
    steps.push_back(i);
  }
  // lambda_dom = s_{ik} ... s_{i1} lambda, so the witness is w = s_{i1} ... s_{ik}.
  return {x, WeylElement::from_word(rs, steps)};
}

WordInversions reduced_word_and_inversions(const RootSystem& rs, const WeylElement& w) {
  WordInversions wi;
  wi.word = w.word(rs);
  int l = static_cast<int>(wi.word.size());
  wi.inversions.resize(l);
  for (int i = 0; i < l; ++i) {
    int t = wi.word[i];
    for (int j = l - 1; j > i; --j) t = rs.reflect(wi.word[j], t);
    if (t >= rs.num_positive()) throw std::logic_error("word not reduced");
    wi.inversions[i] = t;
  }
  return wi;
}

WeylElement longest_element(const RootSystem& rs) {
  Weight neg(rs.rank(), Rat(-1));
  auto [dom, w] = dominantize(rs, neg);
  (void)dom;
  return w;  // -rho = w(rho)
}

std::vector<WeylElement> enumerate_parabolic(const RootSystem& rs, const std::vector<int>& simples) {
  std::unordered_set<WeylElement, WeylElement::Hash> seen;
  std::vector<WeylElement> out;
  out.push_back(WeylElement::identity(rs));
  seen.insert(out[0]);
  for (size_t k = 0; k < out.size(); ++k) {
    for (int i : simples) {
      IntVec img = out[k].rho_image();
      simple_reflect(rs, img, i);
      WeylElement next = WeylElement::from_rho_image(std::move(img));
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> weight_orbit(const RootSystem& rs, const Weight& lambda, size_t limit) {
  std::set<std::vector<Rat>> seen;
  std::vector<Weight> out{lambda};
  seen.insert(lambda);
  for (size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      Weight x = out[k];
      Rat c = x[i];
      if (c == 0) continue;
      for (int j = 0; j < rs.rank(); ++j) x[j] -= c * Rat(rs.cartan(i, j));
      if (seen.insert(x).second) {
        out.push_back(std::move(x));
        if (out.size() > limit) throw std::runtime_error("weight orbit exceeds limit");
      }
    }
  }
  return out;
}

}  // namespace arthur
