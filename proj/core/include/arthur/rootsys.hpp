#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arthur {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Weights are stored in fundamental-weight coordinates: f[i] = <lambda, alpha_i^vee>.
using Weight = std::vector<Rat>;
// Parity weights are classes in the weight lattice mod 2; p[i] = <delta, alpha_i^vee> mod 2.
using ParityWeight = std::vector<uint8_t>;
using IntVec = std::vector<int64_t>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeId {
  Family family;
  int rank;

  static TypeId parse(std::string_view s);  // "E8", "G2", "A1", ...
  std::string str() const;
  bool is_exceptional() const;
  bool operator==(const TypeId&) const = default;
};

// Signed root indices: t in [0, 2N) with t < N the positive root of index t and
// t >= N the negative of root t - N.
inline constexpr int kNoRoot = -1;

class RootSystem {
 public:
  explicit RootSystem(TypeId type);

  // Shared immutable instance per type.
  static const RootSystem& get(TypeId type);
  static const RootSystem& get(std::string_view type);

  TypeId type() const { return type_; }
  int rank() const { return rank_; }
  int num_positive() const { return static_cast<int>(roots_.size()); }

  // cartan(i, j) = <alpha_i, alpha_j^vee>.
  int64_t cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<IntVec>& cartan_matrix() const { return cartan_; }
  // d_i = (alpha_i, alpha_i)/2, normalized so long roots have d = 1.
  const std::vector<Rat>& symmetrizer() const { return sym_; }

  const IntVec& root_coords(int idx) const { return roots_[idx].coords; }     // simple-root basis
  const IntVec& coroot_coords(int idx) const { return roots_[idx].coroot; }   // simple-coroot basis
  const IntVec& root_fund(int idx) const { return roots_[idx].fund; }         // <alpha, alpha_j^vee>
  int64_t height(int idx) const { return roots_[idx].height; }
  int64_t coheight(int idx) const { return roots_[idx].coheight; }            // <rho, alpha^vee>
  bool is_long(int idx) const { return roots_[idx].is_long; }

  int highest_root() const { return highest_; }
  // Root whose coroot is the highest root of the dual system.
  int dual_highest_root() const { return dual_highest_; }
  const IntVec& marks() const { return roots_[highest_].coords; }
  const IntVec& dual_marks() const { return roots_[dual_highest_].coroot; }

  // Index of a root given simple-root coordinates; kNoRoot if absent.
  int find_root(const IntVec& coords) const;        // positive roots only
  int find_signed_root(const IntVec& coords) const; // either sign

  // Signed-root reflection table: image of signed root t under s_i.
  int reflect(int i, int t) const { return srefl_[i][t]; }

  Weight rho() const;
  Weight fundamental_weight(int i) const;
  // Simple-root coordinates of a weight (exact; inverse Cartan matrix).
  std::vector<Rat> to_root_coords(const Weight& f) const;
  Weight from_root_coords(const std::vector<Rat>& c) const;
  bool is_dominant(const Weight& f) const;
  bool is_integral(const Weight& f) const;

  // <lambda, alpha^vee> for the (signed) root with index t.
  Rat pair(const Weight& lambda, int t) const;
  // Inner product on the weight space, normalized with long roots of squared length 2.
  Rat inner(const Weight& a, const Weight& b) const;

  // Parity of <delta, alpha^vee> for signed root t.
  int parity_pair(const ParityWeight& delta, int t) const;

  // Order of the full Weyl group.
  uint64_t weyl_order() const;

  // Permutation translating node labels of the dual diagram into simple-root
  // indices of this system.  Validated against the involution/parameter tables
  // rather than fixed a priori; identity for all five exceptional types.
  const std::vector<int>& dual_node_perm() const { return dual_node_perm_; }

 private:
  struct RootData {
    IntVec coords;    // simple-root basis
    IntVec coroot;    // simple-coroot basis of alpha^vee
    IntVec fund;      // fundamental-weight basis
    int64_t height = 0;
    int64_t coheight = 0;
    bool is_long = false;
  };

  void build_cartan();
  void generate_roots();
  void build_tables();

  TypeId type_;
  int rank_;
  std::vector<IntVec> cartan_;
  std::vector<Rat> sym_;
  std::vector<RootData> roots_;
  std::vector<std::vector<int>> srefl_;
  std::vector<std::vector<Rat>> inv_cartan_;  // inverse of f = C^T c
  int highest_ = kNoRoot;
  int dual_highest_ = kNoRoot;
  std::vector<int> dual_node_perm_;

  // hash of coords -> positive root index
  std::vector<std::pair<IntVec, int>> root_lookup_;
};

// <lambda, alpha^vee>, bilinear and exact.  Coroot given as a signed root index
// of `rs`; throws on rank mismatch.
Rat pair_weight_coroot(const RootSystem& rs, const Weight& lambda, int t);

struct WeightCoordinates {
  Weight fundamental;
  std::vector<Rat> simple_root;
  bool dominant;
};
WeightCoordinates weight_coordinates(const RootSystem& rs, const Weight& lambda);

Weight weight_from_ints(const IntVec& v);
IntVec weight_to_ints(const Weight& w);  // throws if not integral
std::string weight_str(const Weight& w);
std::string parity_str(const ParityWeight& p);
ParityWeight parity_from_weight(const Weight& w);

}  // namespace arthur
