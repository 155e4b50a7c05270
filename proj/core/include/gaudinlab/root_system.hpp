#ifndef GAUDINLAB_ROOT_SYSTEM_HPP
#define GAUDINLAB_ROOT_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "gaudinlab/rational.hpp"

namespace gaudinlab {

// Root coordinates in the simple-root basis.
using RootVec = std::vector<long>;

// Finite-type root system. Positive roots are sorted by (height, lex);
// the first `rank` entries are the simple roots. Cartan matrix convention:
// cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j).
class RootSystem {
 public:
  char type_letter() const { return type_; }
  std::size_t rank() const { return rank_; }
  long cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  const std::vector<RootVec>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }

  /// Index into positive_roots, or -1 if neither v nor -v is positive.
  /// Sign is +1 / -1 for v positive / negative.
  struct Lookup {
    long index = -1;
    int sign = 0;
  };
  Lookup lookup(const RootVec& v) const;
  bool is_root(const RootVec& v) const { return lookup(v).index >= 0; }

  long height(const RootVec& v) const;

  /// (alpha, beta) under the standard W-invariant form with short roots of
  /// squared length 2. Only ratios of root lengths are ever used downstream.
  Rat bilinear(const RootVec& a, const RootVec& b) const;

  /// <beta, alpha_i^vee> for any integral beta in root coordinates.
  long pairing(const RootVec& beta, std::size_t i) const;

  /// Half squared length of simple root i (1 for short roots).
  long d(std::size_t i) const { return d_[i]; }

  /// Largest k >= 0 with beta - k*alpha a root (alpha, beta roots).
  long string_down(const RootVec& beta, const RootVec& alpha) const;

  std::string name() const;  // e.g. "A2", "G2"

  friend RootSystem build_root_system(char type_letter, std::size_t rank);

 private:
  char type_ = '?';
  std::size_t rank_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<long> d_;
  std::vector<RootVec> positive_;
  std::map<RootVec, std::size_t> index_;  // positive roots only
};

/// Valid types: A r>=1, B r>=2, C r>=2, D r>=4, E 6..8, F 4, G 2.
/// Throws std::invalid_argument with a diagnostic otherwise.
RootSystem build_root_system(char type_letter, std::size_t rank);

}  // namespace gaudinlab

#endif
