#ifndef GOSPACE_FAMILY_HPP
#define GOSPACE_FAMILY_HPP

#include "gospace/crown.hpp"
#include "gospace/geodesic.hpp"
#include "gospace/natred.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gospace {

/// Anti-linear map sigma(v) = matrix * conj(v) on the crown's g-basis.
struct Conjugation {
  Matrix matrix;
};

struct ConjugationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks involutivity, the automorphism property on basis pairs, stability
/// of the isotropy/complement blocks, and sigma-compatibility of the metric.
ConjugationReport validate_conjugation(const ReductiveSpace &crown, const Conjugation &sigma);

struct RealForm {
  ReductiveSpace space;
  /// Columns are the member's basis vectors in crown coordinates.
  Matrix basis;
};

/// Fixed-point real form of the crown under sigma, with rational structure
/// constants and the bilinear restriction of the metric.
/// Throws std::invalid_argument if sigma is not a valid conjugation or its
/// fixed set does not have full real dimension.
RealForm extract_real_form(const ReductiveSpace &crown, const Conjugation &sigma, const std::string &name);
ReductiveSpace real_form(const ReductiveSpace &crown, const Conjugation &sigma, const std::string &name);

struct FamilyMember {
  std::string name;
  std::optional<Conjugation> conjugation;
  std::optional<ReductiveSpace> space;  // directly specified member
};

struct Family {
  std::string name;
  ReductiveSpace crown;  // gaussian
  std::vector<FamilyMember> members;
};

/// Family document: {name, crown: space | "relative/path.json", members: [...]}.
Family load_family(const std::filesystem::path &path);

struct FamilyOptions {
  GoOptions go;
  unsigned degree_cap = 4;
};

struct FamilyEntry {
  std::string name;
  bool is_crown = false;
  bool ok = true;  // member constructed and validated
  std::string error;
  std::optional<ReductiveSpace> space;
  Signature signature;
  GoSideStatus go;
  NatredResult natred;
  std::vector<std::size_t> dims;
  std::size_t commutator_refutations = 0;
};

struct FamilyReport {
  std::string family;
  std::vector<FamilyEntry> entries;  // crown first, then members in order
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

FamilyReport family_verify(const Family &family, const FamilyOptions &options = {});

struct AuditReport {
  std::string space;
  std::string go_status;  // certified_linear | refuted | not_refuted
  bool natred = false;
  bool symmetric_pair = false;
  std::vector<std::string> catalog_errors;
  bool ok() const { return catalog_errors.empty(); }
};

/// Consistency of literature tags with computed verdicts along the
/// inclusions weakly symmetric / naturally reductive => GO => D'Atri.
AuditReport inclusion_audit(const ReductiveSpace &space, const FamilyOptions &options = {});

}  // namespace gospace

#endif
