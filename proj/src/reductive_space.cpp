#include "gospace/reductive_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gospace {

Tag &Tags::by_name(std::string_view name) {
  if (name == "symmetric") return symmetric;
  if (name == "weakly_symmetric") return weakly_symmetric;
  if (name == "naturally_reductive") return naturally_reductive;
  if (name == "geodesic_orbit") return geodesic_orbit;
  if (name == "commutative") return commutative;
  if (name == "datri") return datri;
  throw std::invalid_argument("unknown tag '" + std::string(name) + "'");
}

const Tag &Tags::by_name(std::string_view name) const {
  return const_cast<Tags *>(this)->by_name(name);
}

ReductiveSpace::ReductiveSpace(std::string name, Field field, std::vector<std::string> labels,
                               const std::vector<BracketEntry> &brackets,
                               std::vector<std::size_t> isotropy, Matrix metric, Tags tags)
    : name_(std::move(name)),
      field_(field),
      labels_(std::move(labels)),
      isotropy_(std::move(isotropy)),
      metric_(std::move(metric)),
      tags_(std::move(tags)) {
  const std::size_t n = dim();
  tensor_.assign(n * n * n, Scalar());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto &entry : brackets) {
    if (entry.i >= entry.j) throw std::invalid_argument("bracket entries need i < j");
    if (entry.j >= n) throw DimensionMismatch("bracket index out of range");
    if (!seen.emplace(entry.i, entry.j).second)
      throw std::invalid_argument("duplicate bracket entry (" + std::to_string(entry.i) + ", " +
                                  std::to_string(entry.j) + ")");
    for (const auto &[k, v] : entry.coeffs) {
      if (k >= n) throw DimensionMismatch("bracket coefficient index out of range");
      tensor_[(entry.i * n + entry.j) * n + k] = v;
      tensor_[(entry.j * n + entry.i) * n + k] = -v;
    }
  }
  index_split();
}

ReductiveSpace ReductiveSpace::from_tensor(std::string name, Field field,
                                           std::vector<std::string> labels,
                                           std::vector<Scalar> tensor,
                                           std::vector<std::size_t> isotropy, Matrix metric,
                                           Tags tags) {
  const std::size_t n = labels.size();
  if (tensor.size() != n * n * n) throw DimensionMismatch("structure tensor size");
  ReductiveSpace s;
  s.name_ = std::move(name);
  s.field_ = field;
  s.labels_ = std::move(labels);
  s.tensor_ = std::move(tensor);
  s.isotropy_ = std::move(isotropy);
  s.metric_ = std::move(metric);
  s.tags_ = std::move(tags);
  s.index_split();
  return s;
}

void ReductiveSpace::index_split() {
  const std::size_t n = dim();
  std::vector<bool> in_h(n, false);
  for (auto i : isotropy_) {
    if (i >= n) throw DimensionMismatch("isotropy index out of range");
    if (in_h[i]) throw std::invalid_argument("duplicate isotropy index");
    in_h[i] = true;
  }
  complement_.clear();
  for (std::size_t i = 0; i < n; ++i)
    if (!in_h[i]) complement_.push_back(i);
  if (metric_.rows() != complement_.size() || metric_.cols() != complement_.size())
    throw DimensionMismatch("metric must be square over the complement basis");
}

std::vector<ReductiveSpace::BracketEntry> ReductiveSpace::bracket_entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      BracketEntry e{i, j, {}};
      for (std::size_t k = 0; k < dim(); ++k)
        if (!structure(i, j, k).is_zero()) e.coeffs.emplace(k, structure(i, j, k));
      if (!e.coeffs.empty()) out.push_back(std::move(e));
    }
  return out;
}

Vector ReductiveSpace::bracket(const Vector &x, const Vector &y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length != dim g");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &c = structure(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

Vector ReductiveSpace::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = structure(i, j, k);
  return out;
}

MVector ReductiveSpace::to_m(const Vector &x) const {
  if (x.size() != dim()) throw DimensionMismatch("to_m: vector length != dim g");
  MVector v{Vector(dim_m())};
  for (std::size_t a = 0; a < dim_m(); ++a) v.coords[a] = x[complement_[a]];
  return v;
}

HVector ReductiveSpace::to_h(const Vector &x) const {
  if (x.size() != dim()) throw DimensionMismatch("to_h: vector length != dim g");
  HVector v{Vector(dim_h())};
  for (std::size_t r = 0; r < dim_h(); ++r) v.coords[r] = x[isotropy_[r]];
  return v;
}

Vector ReductiveSpace::embed(const MVector &xi) const {
  if (xi.coords.size() != dim_m()) throw DimensionMismatch("m-vector length != dim m");
  Vector x(dim());
  for (std::size_t a = 0; a < dim_m(); ++a) x[complement_[a]] = xi.coords[a];
  return x;
}

Vector ReductiveSpace::embed(const HVector &alpha) const {
  if (alpha.coords.size() != dim_h()) throw DimensionMismatch("h-vector length != dim h");
  Vector x(dim());
  for (std::size_t r = 0; r < dim_h(); ++r) x[isotropy_[r]] = alpha.coords[r];
  return x;
}

Scalar ReductiveSpace::metric_eval(const MVector &xi, const MVector &zeta) const {
  if (xi.coords.size() != dim_m() || zeta.coords.size() != dim_m())
    throw DimensionMismatch("metric_eval: m-vector length");
  Scalar s;
  for (std::size_t a = 0; a < dim_m(); ++a) {
    if (xi.coords[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim_m(); ++b)
      if (!zeta.coords[b].is_zero()) s += xi.coords[a] * metric_(a, b) * zeta.coords[b];
  }
  return s;
}

ReductiveSpace ReductiveSpace::with_name(std::string name) const {
  ReductiveSpace s = *this;
  s.name_ = std::move(name);
  return s;
}

ReductiveSpace ReductiveSpace::with_field(Field field) const {
  ReductiveSpace s = *this;
  s.field_ = field;
  return s;
}

ReductiveSpace ReductiveSpace::with_tags(Tags tags) const {
  ReductiveSpace s = *this;
  s.tags_ = std::move(tags);
  return s;
}

ValidationReport validate(const ReductiveSpace &space) {
  ValidationReport report;
  auto fail = [&](std::string check, std::vector<std::size_t> witness, std::string detail = {}) {
    report.failures.push_back({std::move(check), std::move(witness), std::move(detail)});
  };
  const std::size_t n = space.dim();
  const auto &h = space.isotropy();
  const auto &m = space.complement();
  std::vector<bool> in_h(n, false);
  for (auto i : h) in_h[i] = true;

  if (space.field() == Field::rational) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!space.structure(i, j, k).is_real()) fail("field", {i, j, k}, "non-real structure constant");
    for (std::size_t a = 0; a < space.dim_m(); ++a)
      for (std::size_t b = 0; b < space.dim_m(); ++b)
        if (!space.metric()(a, b).is_real()) fail("field", {m[a], m[b]}, "non-real metric entry");
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (space.structure(i, j, k) != -space.structure(j, i, k)) fail("antisymmetry", {i, j, k});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Vector sum = space.bracket(space.bracket(ei, ej), ek) +
                           space.bracket(space.bracket(ej, ek), ei) +
                           space.bracket(space.bracket(ek, ei), ej);
        if (!is_zero(sum)) fail("jacobi", {i, j, k});
      }

  for (auto i : h)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (space.structure(i, j, k).is_zero()) continue;
        if (in_h[j] && !in_h[k]) fail("reductive_hh", {i, j, k}, "[h,h] has a component in m");
        if (!in_h[j] && in_h[k]) fail("reductive_hm", {i, j, k}, "[h,m] has a component in h");
      }

  const Matrix &q = space.metric();
  bool symmetric = true;
  for (std::size_t a = 0; a < space.dim_m(); ++a)
    for (std::size_t b = a + 1; b < space.dim_m(); ++b)
      if (q(a, b) != q(b, a)) {
        fail("metric_symmetric", {m[a], m[b]});
        symmetric = false;
      }
  if (symmetric && determinant(q).is_zero()) fail("metric_nondegenerate", {}, "det Q = 0");

  // <[alpha, xi]_m, zeta> + <xi, [alpha, zeta]_m> = 0
  for (std::size_t r = 0; r < space.dim_h(); ++r)
    for (std::size_t a = 0; a < space.dim_m(); ++a)
      for (std::size_t b = 0; b < space.dim_m(); ++b) {
        const MVector xi{unit_vector(space.dim_m(), a)};
        const MVector zeta{unit_vector(space.dim_m(), b)};
        const MVector ad_xi = space.to_m(space.bracket_basis(h[r], m[a]));
        const MVector ad_zeta = space.to_m(space.bracket_basis(h[r], m[b]));
        const Scalar v = space.metric_eval(ad_xi, zeta) + space.metric_eval(xi, ad_zeta);
        if (!v.is_zero()) fail("metric_invariance", {h[r], m[a], m[b]}, "value " + v.to_string());
      }
  return report;
}

Signature signature(const ReductiveSpace &space) {
  const std::size_t n = space.dim_m();
  if (determinant(space.metric()).is_zero()) throw std::domain_error("degenerate metric");
  if (space.field() == Field::gaussian) return {n, n};

  Matrix a = space.metric();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal
      // entry onto the diagonal by the congruence e_i -> e_i + e_j.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n && !off; ++j)
          if (!a(i, j).is_zero()) off = std::make_pair(i, j);
      if (!off) throw std::domain_error("degenerate metric");
      const auto [i, j] = *off;
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      p = i;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k));
    }
    const Scalar d = a(k, k);
    if (sgn(d.re()) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(i, k).is_zero() && !a(k, j).is_zero()) a(i, j) -= a(i, k) * a(k, j) / d;
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
  }
  return sig;
}

SymmetricPairResult is_symmetric_pair(const ReductiveSpace &space) {
  const auto &m = space.complement();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (!is_zero(space.to_m(space.bracket_basis(m[a], m[b])).coords)) return {false, std::make_pair(a, b)};
  return {};
}

}  // namespace gospace
