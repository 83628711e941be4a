#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "greenfn/characters.hpp"
#include "greenfn/root_datum.hpp"

namespace greenfn {

/// Geometric unipotent class with its F-classes u_a, indexed by the twisted
/// classes a of A(u).
struct UnipotentClass {
  std::string label;
  int dim = 0;
  std::vector<int> below;  // classes strictly contained in the closure
  long a_order = 1;        // |A(u)|
  std::vector<std::string> a_classes;
  std::vector<long> a_class_sizes;
  std::vector<QPoly> c0_order;  // |C0(u_a)^F| per F-class
  /// F-stable irreducible characters of A(u), extended to A(u).F.
  std::vector<std::string> a_irr;
  std::vector<std::vector<CycQ>> a_values;  // [character][F-class]

  int num_f_classes() const { return static_cast<int>(a_classes.size()); }
  int find_irr(const std::string& label) const;
};

/// Marks a c-value to be filled in from the class and block data.
inline constexpr int kUnsetC = -1000000;

struct LocalSystem {
  int cls = 0;
  std::string chi;  // character of A(u)
  int chi_index = -1;
  bool f_stable = true;
  int block = 0;
  int c = kUnsetC;  // (codim C - dim Z(L0)) / 2
  std::string w_char;  // character of the block's relative Weyl group
  int w_index = -1;

  std::string label(const std::vector<UnipotentClass>& classes) const;
};

struct Block {
  std::string name;
  LeviDatum cuspidal_levi;  // L0 with its Frobenius
  std::string cuspidal;     // label of the cuspidal pair on L0
  std::string assumption;   // nonempty when results depend on an unproved normalization
  int dim_center = 0;       // dim Z(L0)
  TwistedCoset relative;    // W_L(L0) with its twist
  CharacterTable characters;
  std::vector<int> systems;  // F-stable systems in solver order

  bool conditional() const { return !assumption.empty(); }
};

/// Generalized Springer data of a reductive group given as a Levi subgroup
/// of an ambient root datum (the whole group for G itself).
struct SpringerTable {
  RootDatumF group;
  LeviDatum levi;
  std::vector<UnipotentClass> classes;
  std::vector<LocalSystem> systems;
  std::vector<Block> blocks;
  /// Levi name -> (class of L -> class of this group), where known.
  std::map<std::string, std::map<std::string, std::string>> induced;
  std::string provenance;
  std::string residue;  // declared congruence on q, e.g. "q=-1mod3"

  int dim() const;
  QPoly order() const;
  int find_class(const std::string& label) const;
  int find_block(const std::string& name) const;
  int regular_class() const;
  /// True if class a lies in the closure of class b.
  bool in_closure(int a, int b) const;
  /// |C(u_a)^F| = |C0(u_a)^F| * |A(u)| / |class of a|.
  QPoly centralizer_order(int cls, int a) const;
  RatFunc class_size(int cls, int a) const;
  /// Y_iota(u_a) = chi(a) on the support, 0 elsewhere.
  CycQ y_value(int system, int cls, int a) const;
  /// Notes carried into every output computed from this table.
  std::vector<std::string> assumptions() const;
};

/// Orders the systems of each block (decreasing class dimension, then label;
/// reversed label order when reverse_ties), attaches relative Weyl groups and
/// character tables, and checks every load-time invariant. Throws DataError
/// naming the failing item.
void finalize_table(SpringerTable& T, bool reverse_ties = false);

/// Built-in tables: maximal tori of any group, and Levi subgroups of GL_n
/// (products of GL_m(q^d)). Other Levis throw DataError.
SpringerTable levi_springer(const RootDatumF& G, const LeviDatum& L);
SpringerTable gl_springer(int n);

/// Pack documents (JSON, schema "greenfn-pack/1").
SpringerTable load_pack(const std::string& json_text);
SpringerTable load_pack_file(const std::string& path);
std::string export_pack(const SpringerTable& T);

/// Class of G induced from class cls of L, or nullopt when unknown.
std::optional<int> induced_class(const SpringerTable& G, const SpringerTable& L, int cls);

/// G-class containing class cls of L, or nullopt when unknown.
std::optional<int> saturated_class(const SpringerTable& G, const SpringerTable& L, int cls);

/// Block of G with the same cuspidal datum as block b of L.
int matching_block(const SpringerTable& G, const SpringerTable& L, int b);

/// I_{iota,gamma} = <Ind phi_gamma, phi_iota> between block b of L and its
/// matching block of G (rows: G systems, columns: L systems, solver order).
std::vector<std::vector<RatFunc>> induction_pairing(const SpringerTable& G, const SpringerTable& L, int b);

/// Checks c_iota >= c_gamma wherever the induction pairing is nonzero.
void check_induction_degrees(const SpringerTable& G, const SpringerTable& L);

}  // namespace greenfn
