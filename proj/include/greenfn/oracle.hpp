#pragma once

#include <map>
#include <string>
#include <vector>

#include "greenfn/characters.hpp"
#include "greenfn/cycq.hpp"
#include "greenfn/qpoly.hpp"

namespace greenfn {

/// GL_n(F_q) by explicit enumeration, q prime.
class FiniteGL {
 public:
  using Mat = std::vector<int>;  // row-major n x n, entries in [0, q)

  /// Throws DataError unless q is prime and n * n * log(q) is small enough to enumerate.
  FiniteGL(int n, int q);

  int n() const { return n_; }
  int q() const { return q_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Mat>& elements() const { return elements_; }

  Mat identity() const;
  Mat mul(const Mat& a, const Mat& b) const;
  Mat inverse(const Mat& a) const;
  int rank(Mat a) const;
  bool is_unipotent(const Mat& a) const;
  /// Jordan type of a unipotent element (sizes of Jordan blocks, decreasing).
  Partition jordan_type(const Mat& u) const;
  /// Block-diagonal upper Jordan element with the given partition per diagonal block.
  Mat jordan_element(const std::vector<int>& composition, const std::vector<Partition>& parts) const;
  /// Conjugacy classes as lists of element indices.
  std::vector<std::vector<int>> conjugacy_classes() const;
  int index_of(const Mat& a) const;

 private:
  long encode(const Mat& a) const;

  int n_, q_;
  std::vector<Mat> elements_;
  std::vector<int> index_;  // code -> element index, -1 if singular
};

/// Block-upper-triangular parabolic P = L U for a composition of n.
struct ParabolicData {
  std::vector<int> composition;
  long levi_order = 0;
  long radical_order = 0;
  /// Unipotent classes of L^F by label ("2", "11", "21,2", "1" for a torus).
  std::map<std::string, long> class_sizes;
  std::map<std::string, FiniteGL::Mat> representatives;
};

ParabolicData parabolic_data(const FiniteGL& G, const std::vector<int>& composition);
/// L-class label of an element of L: per-block Jordan types of blocks of size >= 2.
std::string levi_label(const FiniteGL& G, const std::vector<int>& composition, const FiniteGL::Mat& v);

/// (|L^F| |U^F|)^-1 #{x in G^F : x^-1 u x in v U^F}.
Rational hc_two_var(const FiniteGL& G, const std::vector<int>& composition, const FiniteGL::Mat& u,
                    const FiniteGL::Mat& v);

/// Q(u, v_C) for every unipotent class C of L^F, certified against
/// Harish-Chandra induction: for each class indicator psi = 1_C,
/// |L^F| <psi, Q(u, .)> = R_L^G(psi)(u) = |P^F|^-1 #{x : x^-1 u x in P, L-part in C}.
struct HcRow {
  std::map<std::string, Rational> values;
  bool certified = false;
  std::string detail;
};
HcRow hc_two_var_row(const FiniteGL& G, const std::vector<int>& composition, const FiniteGL::Mat& u);

/// chi^nu(rho) from the Frobenius formula: coefficient of x^{nu + delta} in a_delta p_rho.
Integer frobenius_character(const Partition& nu, const Partition& rho);
/// Kostka-Foulkes polynomial K_{nu, mu}(t) by the charge statistic.
QPoly kostka_foulkes(const Partition& nu, const Partition& mu);
/// Green polynomial Q^lambda_rho(q) = sum_nu chi^nu(rho) q^{n(lambda)} K_{nu, lambda}(q^-1):
/// value of the Green function of a torus of type rho on the unipotent class lambda.
QPoly green_polynomial(const Partition& lambda, const Partition& rho);

/// <Gamma, Gamma> for the Gelfand-Graev character of GL_n(F_q), induced from
/// the regular character u -> zeta_q^{sum u_{i,i+1}} of the upper unitriangular group.
Rational gelfand_graev_norm(const FiniteGL& G);

}  // namespace greenfn
