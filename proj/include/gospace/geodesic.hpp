#ifndef GOSPACE_GEODESIC_HPP
#define GOSPACE_GEODESIC_HPP

#include "gospace/reductive_space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gospace {

/// A point (xi, alpha) with constant c, to be tested against the moduli
/// variety. c may be nonzero only when xi is null.
class ModuliPoint {
public:
  /// Throws std::invalid_argument if c != 0 while <xi, xi> != 0, and
  /// DimensionMismatch on wrong coordinate lengths.
  static ModuliPoint make(const ReductiveSpace &space, MVector xi, HVector alpha, Scalar c = 0);

  const MVector &xi() const { return xi_; }
  const HVector &alpha() const { return alpha_; }
  const Scalar &c() const { return c_; }

private:
  ModuliPoint(MVector xi, HVector alpha, Scalar c)
      : xi_(std::move(xi)), alpha_(std::move(alpha)), c_(std::move(c)) {}

  MVector xi_;
  HVector alpha_;
  Scalar c_;
};

/// phi(xi, alpha, zeta) = <[xi + alpha, zeta]_m, xi> - c <xi, zeta>.
Scalar phi(const ReductiveSpace &space, const ModuliPoint &point, const MVector &zeta);

/// Whether phi(point, zeta_j) = 0 for every complement basis vector.
bool omega_member(const ReductiveSpace &space, const ModuliPoint &point);

/// Linear system whose solutions (alpha, [c]) make xi + alpha geodesic.
/// Columns are the isotropy coordinates, followed by c iff xi is null.
struct GeodesicSystem {
  Matrix a;
  Vector b;
  bool has_c = false;
};

/// Throws std::invalid_argument for xi = 0.
GeodesicSystem geodesic_system(const ReductiveSpace &space, const MVector &xi);

/// Solves the geodesic system (free unknowns set to zero).
std::optional<ModuliPoint> solve_geodesic_vector(const ReductiveSpace &space, const MVector &xi);

struct GoOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  long bound = 10;
};

struct RankData {
  std::size_t coefficient = 0;  // rank(A)
  std::size_t augmented = 0;    // rank([A|b])
};

struct SampleStats {
  std::size_t enumerated = 0;    // deterministic prefix vectors tested
  std::size_t tested = 0;        // seeded samples tested
  std::size_t failed = 0;
  std::size_t null_samples = 0;  // constructed null xi (gaussian field)
  bool null_skipped = false;     // no null pair available in the prefix
  std::uint64_t seed = 0;
};

struct GoVerdict {
  enum class Mode { refuted, sampled_consistent, certified_linear, inconclusive };

  std::string space;
  Mode mode = Mode::inconclusive;
  std::optional<MVector> witness;
  std::optional<RankData> ranks;
  SampleStats samples;
  std::optional<Matrix> graph_map;  // L : m -> h, |h| x |m|
  std::vector<std::string> notes;
};

std::string to_string(GoVerdict::Mode mode);

/// Basis vectors, then e_a + e_b and e_a - e_b for a < b.
std::vector<MVector> enumeration_prefix(std::size_t dim_m);

/// First xi (prefix, then seeded integer vectors in [-B, B]^m) whose geodesic
/// system is inconsistent; nullopt if every tested xi admits a solution.
std::optional<GoVerdict> refute_go(const ReductiveSpace &space, const GoOptions &options = {});

/// Linear map L : m -> h with phi(xi, L xi, zeta_j) = 0 identically (c = 0).
/// nullopt means inconclusive, not refuted.
std::optional<GoVerdict> certify_go_linear(const ReductiveSpace &space);

/// Prefix, then options.samples seeded samples: Gaussian-integer coordinates
/// and constructed null vectors when the space is gaussian.
GoVerdict sample_go(const ReductiveSpace &space, const GoOptions &options = {});

/// certify, else refute, else sample.
GoVerdict go_auto(const ReductiveSpace &space, const GoOptions &options = {});

/// Number of xi with omega_member(xi, L xi, 0) false among `count` seeded
/// samples. Used to re-verify linear certificates.
std::size_t certificate_violations(const ReductiveSpace &space, const Matrix &graph_map, std::size_t count,
                                   std::uint64_t seed, long bound = 10);

struct OmegaRealformReport {
  std::string space;
  std::size_t samples = 0;
  std::size_t members = 0;
  std::size_t discrepancies = 0;
  std::uint64_t seed = 0;
};

/// Compares Omega membership of real points over Q with membership of the
/// same points in the crown. Rational spaces only.
OmegaRealformReport check_omega_realform(const ReductiveSpace &space, const GoOptions &options = {});

struct GoSideStatus {
  bool certified = false;
  bool refuted = false;  // refute_go or sample_go found a witness
  GoVerdict verdict;     // the go_auto verdict for this side
};

/// Runs certify, refute and sample on one space.
GoSideStatus go_side_status(const ReductiveSpace &space, const GoOptions &options = {});

struct CrownGoReport {
  std::string space;
  GoSideStatus real;
  GoSideStatus crown;
  bool violation = false;        // one side certified while the other is refuted
  bool sampling_escape = false;  // refuted on one side only, neither certified
};

CrownGoReport check_crown_go_consistency(const ReductiveSpace &space, const GoOptions &options = {});

}  // namespace gospace

#endif
