#ifndef GOSPACE_NATRED_HPP
#define GOSPACE_NATRED_HPP

#include "gospace/reductive_space.hpp"

#include <array>
#include <optional>
#include <string>

namespace gospace {

struct NatTriple {
  MVector xi;
  MVector eta;
  MVector zeta;
};

/// psi(xi, eta, zeta) = <[xi, eta]_m, zeta> + <eta, [xi, zeta]_m>.
Scalar psi(const ReductiveSpace &space, const NatTriple &t);

struct NatredResult {
  bool natred = true;
  /// Lexicographically first complement-basis triple with psi != 0.
  std::optional<std::array<std::size_t, 3>> witness;
  Scalar value;
};

/// Exact decision: psi is trilinear, so vanishing on the |m|^3 basis triples
/// is equivalent to vanishing everywhere.
NatredResult is_naturally_reductive(const ReductiveSpace &space);

struct CrownNatredReport {
  std::string space;
  NatredResult real;
  NatredResult crown;
  bool consistent = true;
};

CrownNatredReport check_crown_natred(const ReductiveSpace &space);

struct NatredGoAudit {
  bool natred = false;
  bool certificate_found = false;
  bool graph_map_zero = false;
  bool passed = true;  // vacuous when natred is false
};

/// Naturally reductive implies a linear GO certificate with L = 0.
NatredGoAudit natred_implies_go_audit(const ReductiveSpace &space);

}  // namespace gospace

#endif
