#pragma once

#include <functional>
#include <optional>
#include <unordered_set>

#include "arthur/rootsys.hpp"

namespace arthur {

// A Weyl group element in canonical form: the image w(rho) in fundamental
// coordinates.  rho has trivial stabilizer, so this determines w; equality and
// hashing are on the vector.  Reduced words are reconstructed on demand by the
// descent algorithm.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple(const RootSystem& rs, int i);
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
  static WeylElement from_rho_image(IntVec img);
  // s_gamma for the (positive) root with index idx.
  static WeylElement reflection(const RootSystem& rs, int idx);

  const IntVec& rho_image() const { return img_; }
  bool is_identity() const;
  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return img_ < o.img_; }

  // Reduced word by greedy left descent (always strip the smallest simple
  // index with negative pairing); the word lists simple indices left to right.
  std::vector<int> word(const RootSystem& rs) const;
  int length(const RootSystem& rs) const;

  WeylElement inverse(const RootSystem& rs) const;
  WeylElement mul(const RootSystem& rs, const WeylElement& other) const;  // this * other

  struct Hash {
    size_t operator()(const WeylElement& w) const {
      size_t h = 1469598103934665603ull;
      for (auto v : w.img_) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
      return h;
    }
  };

 private:
  IntVec img_;
};

Weight apply_weyl(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
ParityWeight parity_action(const RootSystem& rs, const WeylElement& w, const ParityWeight& delta);
// Image of a signed root under w.
int apply_weyl_root(const RootSystem& rs, const WeylElement& w, int t);

// In-place simple reflection on integer fundamental coordinates.
inline void simple_reflect(const RootSystem& rs, IntVec& f, int i) {
  int64_t c = f[i];
  if (c == 0) return;
  for (int j = 0; j < rs.rank(); ++j) f[j] -= c * rs.cartan(i, j);
}

// lambda = w * lambda_dom with lambda_dom dominant; w is the witness produced
// by greedy descent on the smallest negative coordinate.
std::pair<Weight, WeylElement> dominantize(const RootSystem& rs, const Weight& lambda);

struct WordInversions {
  std::vector<int> word;        // simple indices beta_1 ... beta_l
  std::vector<int> inversions;  // gamma_i = s_{beta_l} ... s_{beta_{i+1}} beta_i, positive root indices
};
// The inversions are the positive roots (equivalently coroots) whose sign w flips.
WordInversions reduced_word_and_inversions(const RootSystem& rs, const WeylElement& w);

WeylElement longest_element(const RootSystem& rs);

// All elements of the reflection subgroup generated by the given simple
// indices (orbit closure on canonical vectors).  Intended for small parabolics.
std::vector<WeylElement> enumerate_parabolic(const RootSystem& rs, const std::vector<int>& simples);

// Full orbit of a weight under W (breadth-first closure); for tests and small ranks.
std::vector<Weight> weight_orbit(const RootSystem& rs, const Weight& lambda, size_t limit = 2000000);

}  // namespace arthur
