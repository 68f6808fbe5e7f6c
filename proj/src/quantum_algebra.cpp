#include "qdilog/quantum_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace qdilog {

namespace {

VertexOrder basis_for(const Quiver& q) {
  if (is_acyclic(q)) return topological_vertex_order(q);
  VertexOrder order;
  order.sequence.resize(q.num_vertices());
  std::iota(order.sequence.begin(), order.sequence.end(), 0);
  return order;
}

}  // namespace

QuantumAlgebra::QuantumAlgebra(Quiver q, DimVector bound, int v_max)
    : quiver_(std::move(q)), bound_(std::move(bound)), v_max_(v_max) {
  const auto n = quiver_.num_vertices();
  if (bound_.size() != n) {
    throw Error(ErrorKind::KeyMismatch, "bound not keyed by the quiver's vertices");
  }
  if (!bound_.is_nonnegative()) throw Error(ErrorKind::InvalidArgument, "bound must be >= 0");
  if (v_max_ < 0) throw Error(ErrorKind::InvalidArgument, "truncation order must be >= 0");

  basis_ = basis_for(quiver_);
  const auto pos = basis_.positions();
  const IntMatrix lam = lambda_matrix(quiver_);
  const auto ni = static_cast<Eigen::Index>(n);
  twist_ = IntMatrix::Zero(ni, ni);
  shift_ = IntMatrix::Zero(ni, ni);
  for (Eigen::Index u = 0; u < ni; ++u) {
    for (Eigen::Index w = 0; w < ni; ++w) {
      const auto pu = pos[static_cast<std::size_t>(u)];
      const auto pw = pos[static_cast<std::size_t>(w)];
      if (pu > pw) twist_(u, w) = 2 * lam(u, w);
      if (pu < pw) shift_(u, w) = lam(u, w);
    }
  }

  stride_.assign(n, 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    stride_[i] = total;
    total *= static_cast<std::size_t>(bound_[i]) + 1;
  }
  keys_.reserve(total);
  for (std::size_t k = 0; k < total; ++k) {
    DimVector g(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = static_cast<int>((k / stride_[i]) % (static_cast<std::size_t>(bound_[i]) + 1));
    }
    keys_.push_back(std::move(g));
  }
}

bool QuantumAlgebra::within(const DimVector& g) const {
  return g.size() == bound_.size() && g.is_nonnegative() && g.leq(bound_);
}

std::size_t QuantumAlgebra::index(const DimVector& g) const {
  if (g.size() != bound_.size()) {
    throw Error(ErrorKind::KeyMismatch, "dimension vector not keyed by the quiver's vertices");
  }
  if (!within(g)) {
    throw Error(ErrorKind::BoundExceeded,
                to_string(g) + " exceeds the bound " + to_string(bound_));
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.size(); ++i) k += static_cast<std::size_t>(g[i]) * stride_[i];
  return k;
}

long QuantumAlgebra::twist(const DimVector& a, const DimVector& b) const {
  return bilinear(twist_, a, b);
}

long QuantumAlgebra::symbol_shift(const DimVector& g) const { return bilinear(shift_, g, g); }

bool operator==(const QuantumAlgebra& a, const QuantumAlgebra& b) {
  return a.quiver_ == b.quiver_ && a.bound_ == b.bound_ && a.v_max_ == b.v_max_;
}

AlgebraPtr make_algebra(const Quiver& q, const DimVector& bound, int v_max) {
  return std::make_shared<const QuantumAlgebra>(q, bound, v_max);
}

QuantumElement::QuantumElement(AlgebraPtr algebra)
    : algebra_(std::move(algebra)), coeffs_(algebra_->size(), VSeries(algebra_->v_max())) {}

const VSeries& QuantumElement::coefficient(const DimVector& g) const {
  return coeffs_[algebra_->index(g)];
}

void QuantumElement::add_term(const DimVector& g, const VSeries& c) {
  coeffs_[algebra_->index(g)] += c;
}

bool QuantumElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<std::pair<DimVector, VSeries>> QuantumElement::terms() const {
  std::vector<std::pair<DimVector, VSeries>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.emplace_back(algebra_->key(k), coeffs_[k]);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

void QuantumElement::check_compatible(const QuantumElement& o) const {
  if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_)) {
    throw Error(ErrorKind::TruncationMismatch,
                "elements belong to different quivers or truncations");
  }
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

QuantumElement& QuantumElement::operator-=(const QuantumElement& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

QuantumElement& QuantumElement::operator*=(const VSeries& c) {
  for (auto& x : coeffs_) {
    if (!x.is_zero()) x = x * c;
  }
  return *this;
}

QuantumElement operator*(const QuantumElement& a, const QuantumElement& b) {
  a.check_compatible(b);
  const auto& alg = *a.algebra_;
  QuantumElement out(a.algebra_);
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (!b.coeffs_[j].is_zero()) nz_b.push_back(j);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    const DimVector& ga = alg.key(i);
    for (auto j : nz_b) {
      const DimVector sum = ga + alg.key(j);
      if (!sum.leq(alg.bound())) continue;
      const auto t = static_cast<int>(alg.twist(ga, alg.key(j)));
      out.coeffs_[alg.index(sum)] += (a.coeffs_[i] * b.coeffs_[j]).shifted(t);
    }
  }
  return out;
}

bool operator==(const QuantumElement& a, const QuantumElement& b) {
  a.check_compatible(b);
  return a.coeffs_ == b.coeffs_;
}

std::string to_string(const QuantumElement& x) {
  const auto t = x.terms();
  if (t.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += " + ";
    s += "(" + to_string(t[k].second) + ") · y^" + to_string(t[k].first);
  }
  return s;
}

QuantumElement monomial(const AlgebraPtr& a, const DimVector& g, const VSeries& c) {
  QuantumElement x(a);
  x.add_term(g, c);
  return x;
}

QuantumElement identity(const AlgebraPtr& a) {
  return monomial(a, a->quiver().zero(), VSeries::one(a->v_max()));
}

QuantumElement symbol(const AlgebraPtr& a, const DimVector& g) {
  Integer sign = (g.height() - 1) % 2 == 0 ? 1 : -1;
  const auto e = static_cast<int>(-a->symbol_shift(g));
  return monomial(a, g, VSeries::monomial(sign, e, a->v_max()));
}

QuantumElement qt_multiply(const QuantumElement& x, const QuantumElement& y) { return x * y; }

QuantumElement power(const QuantumElement& x, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  QuantumElement out = identity(x.algebra());
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

QuantumElement dilog(const AlgebraPtr& a, const DimVector& g) {
  if (g.is_zero() || !g.is_nonnegative()) {
    throw Error(ErrorKind::InvalidArgument, "dilogarithm needs a nonzero dimension vector");
  }
  const int v_max = a->v_max();
  QuantumElement out = identity(a);
  if (!a->within(g)) return out;
  const QuantumElement y = symbol(a, g);
  QuantumElement y_k = identity(a);
  for (int k = 1; a->within(k * g); ++k) {
    y_k = y_k * y;
    for (const auto& [key, c] : y_k.terms()) {
      if (c.min_exp() < 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "negative power of q in " + to_string(key) + " would lose truncated terms");
      }
    }
    const Integer sign = k % 2 == 0 ? 1 : -1;
    out += y_k * (VSeries::monomial(sign, k * k, v_max) * poincare_P(k, v_max));
  }
  return out;
}

QuantumElement trivial_dt(const AlgebraPtr& a) {
  const auto order = topological_vertex_order(a->quiver());
  std::vector<DimVector> roots;
  for (auto i : order.sequence) roots.push_back(a->quiver().unit(i));
  return ordered_dilog_product(a, roots);
}

QuantumElement ordered_dilog_product(const AlgebraPtr& a, const std::vector<DimVector>& roots) {
  QuantumElement out = identity(a);
  for (const auto& g : roots) out = out * dilog(a, g);
  return out;
}

QuantumElement factorization_product(const AlgebraPtr& a, const SubquiverPartition& p,
                                     const RootOrder& order) {
  const auto verdict = validate_order(a->quiver(), p, order);
  if (!verdict.valid) {
    const auto& bad = *verdict.violation;
    throw Error(ErrorKind::InvalidOrder,
                "order violates the root ordering rules at " +
                    to_string(order.entries[bad.first].root) + " before " +
                    to_string(order.entries[bad.second].root) + ": " + bad.rule);
  }
  return ordered_dilog_product(a, order.roots());
}

VerificationReport verify_factorization(const Quiver& q, const SubquiverPartition& p,
                                        const DimVector& bound, int v_max) {
  const RootOrder order = admissible_total_order(q, p);
  const AlgebraPtr a = make_algebra(q, bound, v_max);
  const QuantumElement expected = trivial_dt(a);
  const QuantumElement actual = factorization_product(a, p, order);

  VerificationReport report;
  report.partition = to_string(q, p);
  report.bound = bound;
  report.v_max = v_max;
  report.order = order.roots();
  report.checked = a->size();
  for (std::size_t k = 0; k < a->size(); ++k) {
    const auto& g = a->key(k);
    const auto& x = expected.coefficient(g);
    const auto& y = actual.coefficient(g);
    if (!(x == y)) report.discrepancies.push_back({g, x, y});
  }
  return report;
}

}  // namespace qdilog
