#pragma once

#include <string>
#include <vector>

#include "greenfn/qpoly.hpp"
#include "greenfn/root_datum.hpp"

namespace greenfn {

using Partition = std::vector<int>;

/// "21", "111"; parts of size >= 10 are separated by dots.
std::string partition_label(const Partition& p);
Partition parse_partition(const std::string& s);
/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
Partition conjugate_partition(const Partition& p);
/// n(lambda) = sum (i-1) lambda_i.
long partition_n(const Partition& p);
/// Murnaghan-Nakayama: chi_lambda at cycle type rho.
Integer symmetric_character(const Partition& lambda, const Partition& rho);

/// Permutation of the points e_0..e_m of a type A chain of simple roots
/// under a root permutation stabilizing the span of the chain.
std::vector<int> chain_point_permutation(const RootDatumF& G, const std::vector<int>& chain, const Perm& w);
Partition cycle_type(const std::vector<int>& p);

/// Class function on a twisted coset: one value per class.
using ClassFunction = std::vector<RatFunc>;

/// Irreducible characters of a twisted coset H*sigma (values per class).
struct CharacterTable {
  std::vector<std::string> labels;
  std::vector<std::vector<CycQ>> values;  // [character][class]
  std::vector<std::string> class_labels;
  std::string convention;

  int size() const { return static_cast<int>(labels.size()); }
  /// Index of a label, or -1.
  int find(const std::string& label) const;
  ClassFunction as_class_function(int chi) const;
};

/// Supported: the trivial group; H = W_K' with K' of type A (any twist that
/// permutes components preserving their orientation, extended diagonally);
/// H = W_K' dihedral with sigma centralizing H; H cyclic with sigma
/// centralizing H. Anything else throws DataError ("data pack required").
CharacterTable character_table(const RootDatumF& G, const TwistedCoset& C);

/// <f, g> = |H|^-1 sum_{h} f(h sigma) conj(g(h sigma)).
RatFunc inner_product(const TwistedCoset& C, const ClassFunction& f, const ClassFunction& g);
/// |H|^-1 sum weight * f * conj(g).
RatFunc weighted_pairing(const TwistedCoset& C, const ClassFunction& f, const ClassFunction& g,
                         const ClassFunction& weight);

/// Class of the big coset containing each class representative of small.
/// Throws DataError if small is not a subcoset of big.
std::vector<int> class_fusion(const TwistedCoset& small, const TwistedCoset& big);
ClassFunction restrict_function(const TwistedCoset& big, const TwistedCoset& small,
                                const ClassFunction& f);
ClassFunction induce_function(const TwistedCoset& small, const TwistedCoset& big,
                              const ClassFunction& f);

}  // namespace greenfn
