#ifndef GOSPACE_REDUCTIVE_SPACE_HPP
#define GOSPACE_REDUCTIVE_SPACE_HPP

#include "gospace/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gospace {

/// Coordinates over the complement basis (the tangent space at the base point).
struct MVector {
  Vector coords;
  friend bool operator==(const MVector &, const MVector &) = default;
};

/// Coordinates over the isotropy basis.
struct HVector {
  Vector coords;
  friend bool operator==(const HVector &, const HVector &) = default;
};

enum class TagValue { yes, no, unknown };

struct Tag {
  TagValue value = TagValue::unknown;
  std::string source;
};

/// Literature-sourced metadata; these properties are audited, never decided.
struct Tags {
  Tag symmetric;
  Tag weakly_symmetric;
  Tag naturally_reductive;
  Tag geodesic_orbit;
  Tag commutative;
  Tag datri;

  static constexpr std::array<const char *, 6> names = {
      "symmetric", "weakly_symmetric", "naturally_reductive", "geodesic_orbit", "commutative", "datri"};
  Tag &by_name(std::string_view name);
  const Tag &by_name(std::string_view name) const;
};

/// One failed identity found by validate().
struct ValidationFailure {
  std::string check;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// A homogeneous space G/H at the Lie-algebra level: structure constants of g,
/// a reductive splitting g = h + m by index sets, and a metric Q on m.
class ReductiveSpace {
public:
  /// One structure-constant entry [e_i, e_j] = sum_k coeffs[k] e_k with i < j.
  struct BracketEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::map<std::size_t, Scalar> coeffs;
  };

  ReductiveSpace() = default;

  /// Builds the dense antisymmetric tensor from upper-triangle entries.
  /// Throws DimensionMismatch / std::invalid_argument on malformed shapes;
  /// mathematical identities are left to validate().
  ReductiveSpace(std::string name, Field field, std::vector<std::string> labels,
                 const std::vector<BracketEntry> &brackets, std::vector<std::size_t> isotropy,
                 Matrix metric, Tags tags = {});

  /// Builds from a full tensor c[i][j][k] (no antisymmetry assumed).
  static ReductiveSpace from_tensor(std::string name, Field field, std::vector<std::string> labels,
                                    std::vector<Scalar> tensor, std::vector<std::size_t> isotropy,
                                    Matrix metric, Tags tags = {});

  const std::string &name() const { return name_; }
  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::vector<std::size_t> &isotropy() const { return isotropy_; }
  const std::vector<std::size_t> &complement() const { return complement_; }
  std::size_t dim_h() const { return isotropy_.size(); }
  std::size_t dim_m() const { return complement_.size(); }
  const Matrix &metric() const { return metric_; }
  const Tags &tags() const { return tags_; }

  /// c(i, j, k): coefficient of e_k in [e_i, e_j].
  const Scalar &structure(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim() + j) * dim() + k];
  }
  /// Upper-triangle entries with nonzero coefficients, in (i, j) order.
  std::vector<BracketEntry> bracket_entries() const;

  /// Exact bilinear bracket on g-coordinates.
  Vector bracket(const Vector &x, const Vector &y) const;
  /// [e_i, e_j] as a g-vector.
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  MVector to_m(const Vector &x) const;
  HVector to_h(const Vector &x) const;
  Vector embed(const MVector &xi) const;
  Vector embed(const HVector &alpha) const;
  /// g-vector of the a-th complement basis element.
  Vector m_basis(std::size_t a) const { return unit_vector(dim(), complement_.at(a)); }
  Vector h_basis(std::size_t r) const { return unit_vector(dim(), isotropy_.at(r)); }

  /// xi^T Q zeta (complex bilinear over Q(i)).
  Scalar metric_eval(const MVector &xi, const MVector &zeta) const;

  ReductiveSpace with_name(std::string name) const;
  ReductiveSpace with_field(Field field) const;
  ReductiveSpace with_tags(Tags tags) const;

private:
  void index_split();

  std::string name_;
  Field field_ = Field::rational;
  std::vector<std::string> labels_;
  std::vector<Scalar> tensor_;
  std::vector<std::size_t> isotropy_;
  std::vector<std::size_t> complement_;
  Matrix metric_;
  Tags tags_;
};

/// Exact check of antisymmetry, Jacobi, reductivity, metric symmetry,
/// nondegeneracy and infinitesimal invariance. Never throws on bad math.
ValidationReport validate(const ReductiveSpace &space);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature &, const Signature &) = default;
};

/// Sylvester signature of Q for rational spaces; (n, n) with n = dim m for
/// gaussian spaces. Throws std::domain_error if Q is degenerate.
Signature signature(const ReductiveSpace &space);

struct SymmetricPairResult {
  bool symmetric = true;
  /// First complement index pair (a, b), a < b, with [e_a, e_b]_m != 0.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Whether [m, m] lies in h.
SymmetricPairResult is_symmetric_pair(const ReductiveSpace &space);

}  // namespace gospace

#endif
