#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qdilog/partitions.hpp"
#include "qdilog/qseries.hpp"
#include "qdilog/root_order.hpp"

namespace qdilog {

/// Truncation context for the quantum algebra of a quiver.
///
/// Elements are stored in the normal-ordered basis
///   y^g = y_{e_{p1}}^{g(p1)} ... y_{e_{pn}}^{g(pn)}
/// where p1, ..., pn is the head-before-tail vertex order (input order if the
/// quiver has cycles). The symbol y_g of the defining relations is
///   y_g = (-1)^{|g|-1} v^{-S(g)} y^g,
/// S(g) = sum over basis positions i < j of g(pi) g(pj) lambda(e_pi, e_pj).
/// Dimension vectors with some coordinate above `bound` span the truncation
/// ideal and are dropped.
class QuantumAlgebra {
 public:
  QuantumAlgebra(Quiver q, DimVector bound, int v_max);

  const Quiver& quiver() const { return quiver_; }
  const DimVector& bound() const { return bound_; }
  int v_max() const { return v_max_; }
  const VertexOrder& basis_order() const { return basis_; }

  /// Number of dimension vectors <= bound.
  std::size_t size() const { return keys_.size(); }
  bool within(const DimVector& g) const;
  /// Dense index of g; throws BoundExceeded.
  std::size_t index(const DimVector& g) const;
  const DimVector& key(std::size_t k) const { return keys_[k]; }

  /// y^a y^b = v^{twist(a, b)} y^{a+b}.
  long twist(const DimVector& a, const DimVector& b) const;
  /// S(g) as above.
  long symbol_shift(const DimVector& g) const;

  friend bool operator==(const QuantumAlgebra& a, const QuantumAlgebra& b);

 private:
  Quiver quiver_;
  DimVector bound_;
  int v_max_;
  VertexOrder basis_;
  IntMatrix twist_;
  IntMatrix shift_;
  std::vector<std::size_t> stride_;
  std::vector<DimVector> keys_;
};

using AlgebraPtr = std::shared_ptr<const QuantumAlgebra>;

AlgebraPtr make_algebra(const Quiver& q, const DimVector& bound, int v_max = kDefaultVMax);

/// Truncated element: one series per dimension vector <= bound, keyed by the
/// normal-ordered basis.
class QuantumElement {
 public:
  explicit QuantumElement(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  /// Coefficient of y^g; throws BoundExceeded.
  const VSeries& coefficient(const DimVector& g) const;
  void add_term(const DimVector& g, const VSeries& c);
  bool is_zero() const;
  /// Nonzero terms in DimVector order.
  std::vector<std::pair<DimVector, VSeries>> terms() const;

  QuantumElement& operator+=(const QuantumElement& o);
  QuantumElement& operator-=(const QuantumElement& o);
  QuantumElement& operator*=(const VSeries& c);
  friend QuantumElement operator+(QuantumElement a, const QuantumElement& b) { return a += b; }
  friend QuantumElement operator-(QuantumElement a, const QuantumElement& b) { return a -= b; }
  friend QuantumElement operator*(QuantumElement a, const VSeries& c) { return a *= c; }
  friend QuantumElement operator*(const QuantumElement& a, const QuantumElement& b);
  friend bool operator==(const QuantumElement& a, const QuantumElement& b);

 private:
  void check_compatible(const QuantumElement& o) const;

  AlgebraPtr algebra_;
  std::vector<VSeries> coeffs_;
};

/// Rendered as "coeff · y^g" terms joined by " + ", in DimVector order.
std::string to_string(const QuantumElement& x);

/// c · y^g. Throws BoundExceeded.
QuantumElement monomial(const AlgebraPtr& a, const DimVector& g, const VSeries& c);
QuantumElement identity(const AlgebraPtr& a);
/// The symbol y_g. Throws BoundExceeded.
QuantumElement symbol(const AlgebraPtr& a, const DimVector& g);

QuantumElement qt_multiply(const QuantumElement& x, const QuantumElement& y);
QuantumElement power(const QuantumElement& x, int k);

/// E(y_g) = sum_k (-1)^k q^{k^2/2} P_k (y_g)^k, stopping once k g leaves the
/// bound. Throws InvalidArgument for g = 0.
QuantumElement dilog(const AlgebraPtr& a, const DimVector& g);

/// E(y_{e_p1}) ... E(y_{e_pn}) over the head-before-tail order. Throws
/// CyclicQuiver.
QuantumElement trivial_dt(const AlgebraPtr& a);

/// E(y_{g1}) ... E(y_{gr}), no validation.
QuantumElement ordered_dilog_product(const AlgebraPtr& a, const std::vector<DimVector>& roots);

/// Product of dilogarithms along `order`, which must be valid for p. Throws
/// InvalidOrder.
QuantumElement factorization_product(const AlgebraPtr& a, const SubquiverPartition& p,
                                     const RootOrder& order);

struct Discrepancy {
  DimVector gamma;
  VSeries expected;  ///< trivial factorization
  VSeries actual;    ///< partition factorization

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct VerificationReport {
  std::string partition;
  DimVector bound;
  int v_max = 0;
  std::vector<DimVector> order;
  std::size_t checked = 0;  ///< dimension vectors compared
  std::vector<Discrepancy> discrepancies;

  bool passed() const { return discrepancies.empty(); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Compares trivial_dt with the factorization over admissible_total_order,
/// coefficient by coefficient for every g <= bound. Throws NotAdmissible.
VerificationReport verify_factorization(const Quiver& q, const SubquiverPartition& p,
                                        const DimVector& bound, int v_max = kDefaultVMax);

}  // namespace qdilog
