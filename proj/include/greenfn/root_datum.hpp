#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenfn/qpoly.hpp"

namespace greenfn {

/// Weyl group elements and twisted elements w*phi are permutations of the
/// full root set; p[r] is the index of the image of root r.
using Perm = std::vector<int>;
using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;

/// (a*b)[r] = a[b[r]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

/// Based root datum X = Z^rank with a lattice automorphism phi permuting the
/// simple roots.
struct RootDatumF {
  std::string name;
  int rank = 0;
  int ss_rank = 0;
  /// cartan[i][j] = <alpha_j, alpha_i^vee>.
  IntMat cartan;
  IntMat simple_roots;    // in X coordinates
  IntMat simple_coroots;  // in Y = Hom(X, Z) coordinates
  IntMat phi_x;           // x -> phi_x * x on X
  std::vector<int> phi_simple;
  /// Roots in simple-root coordinates. Indices [0, N) are positive with the
  /// simple roots first; root i + N is the negative of root i.
  std::vector<IntVec> roots;
  int num_positive = 0;
  std::vector<Perm> reflections;
  Perm phi;
  /// Assumed congruence q = residue (mod residue_modulus); modulus 0 means none.
  long residue_modulus = 0;
  long residue = 1;

  int num_roots() const { return 2 * num_positive; }
  bool is_positive(int r) const { return r < num_positive; }
  int negative(int r) const { return r < num_positive ? r + num_positive : r - num_positive; }
  int root_index(const IntVec& coords) const;
  Perm identity() const;
  int length(const Perm& w) const;
  Perm from_word(const std::vector<int>& word) const;
  /// Reduced word of an element of W (not of a twisted element).
  std::vector<int> reduced_word(const Perm& w) const;
  /// Image of simple root i as a simple-root index, or -1 if not simple.
  int simple_image(const Perm& w, int i) const;
  /// True if w maps the simple roots in J onto the simple roots in target.
  bool maps_onto(const Perm& w, const std::vector<int>& J, const std::vector<int>& target) const;
  /// Matrix of a root permutation on the root lattice in simple-root
  /// coordinates; column j is the image of alpha_j.
  IntMat simple_matrix(const Perm& w) const;
  /// Connected components of the Dynkin subdiagram on K, each ordered along
  /// the diagram for type A chains.
  std::vector<std::vector<int>> components(const std::vector<int>& K) const;
  std::vector<int> all_simple() const;

 private:
  std::map<IntVec, int> index_;
  friend RootDatumF build_root_datum(std::string, IntMat, IntMat, IntMat, IntMat);
};

/// Builds the datum and its root system; validates the Cartan pairing and
/// that phi permutes the simple roots.
RootDatumF build_root_datum(std::string name, IntMat cartan, IntMat simple_roots,
                            IntMat simple_coroots, IntMat phi_x);

/// "GL3", "GU2", "SL2", "PGL3", "A2", "2A2sc", "B2", "G2", "2E6sc", "3D4ad", ...
/// Bare Cartan types default to the adjoint lattice.
RootDatumF make_root_datum(const std::string& descriptor);

/// Parses "q=-1mod3" / "q=1mod3" and records it on the datum.
void set_residue(RootDatumF& G, const std::string& text);

std::vector<Perm> generate_group(const std::vector<Perm>& gens, const Perm& identity);

/// Left coset H*sigma of a finite group H of root permutations, with its
/// classes under twisted conjugation x -> h x h^-1 (h in H).
struct TwistedCoset {
  std::vector<Perm> elements;  // H, elements[0] is the identity
  Perm sigma;
  std::vector<Perm> generators;
  std::vector<int> class_of;   // class of elements[i]*sigma
  std::vector<int> class_rep;  // index into elements
  std::vector<long> class_size;

  long order() const { return static_cast<long>(elements.size()); }
  int num_classes() const { return static_cast<int>(class_rep.size()); }
  Perm coset_element(int i) const { return compose(elements[i], sigma); }
  Perm representative(int c) const { return coset_element(class_rep[c]); }
  long centralizer_order(int c) const { return order() / class_size[c]; }
  /// Index of h in H, or -1.
  int find(const Perm& h) const;
  /// Class of a coset element pi = h*sigma; throws if pi is not in the coset.
  int classify(const Perm& pi) const;
  bool contains(const Perm& pi) const;

  std::map<Perm, int> index;
};

TwistedCoset make_coset(std::vector<Perm> group, const Perm& sigma);

/// F-stable Levi subgroup L_K with Frobenius acting on W_K as sigma = v*phi.
struct LeviDatum {
  std::vector<int> K;
  Perm v;
  Perm sigma;
  std::string name;
};

LeviDatum whole_group(const RootDatumF& G);
LeviDatum make_levi(const RootDatumF& G, std::vector<int> K, const Perm& v);
/// "G", "T", "T[1,2]" (twist by s1 s2), "{1,3}", "{1}[2,1]"; for GL types
/// also products "GL2xGL1" and "GL1(q^2)xGL1".
LeviDatum parse_levi(const RootDatumF& G, const std::string& text);
/// Representatives of the G^F-classes of F-stable Levi subgroups.
std::vector<LeviDatum> all_levis(const RootDatumF& G);

/// The relative Weyl group {w in W_K : w(J) = J} with its twisted coset
/// {w in W_K : w(J) = J} * x*sigma for some x in W_K with x*sigma(J) = J.
/// Throws DataError if no such x exists.
TwistedCoset relative_coset(const RootDatumF& G, const std::vector<int>& K, const Perm& sigma,
                            const std::vector<int>& J);

/// det(q*M - 1) for an integer matrix, normalized to leading coefficient +1.
QPoly normalized_charpoly(const IntMat& M);

/// |Z0(L_J)^{pi F}| for a twisted element pi with pi(J) = J.
QPoly torus_order(const RootDatumF& G, const std::vector<int>& J, const Perm& pi);
QPoly group_order(const RootDatumF& G);
QPoly levi_order(const RootDatumF& G, const LeviDatum& L);

struct CenterInfo {
  long component_order = 1;   // |Z(L)/Z0(L)|
  long fixed_components = 1;  // |(Z(L)/Z0(L))^F| = |H^1(F, Z(L))|
  int dim = 0;                // dim Z(L)
  QPoly connected_order;      // |Z0(L)^F|
};

/// Centre data of L_K with Frobenius sigma, using the residue assumption on q.
CenterInfo levi_center(const RootDatumF& G, const std::vector<int>& K, const Perm& sigma);

}  // namespace greenfn
