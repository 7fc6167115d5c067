#include "gospace/natred.hpp"

#include "gospace/crown.hpp"
#include "gospace/geodesic.hpp"
#include "gospace/parallel.hpp"

#include <vector>

namespace gospace {

Scalar psi(const ReductiveSpace &space, const NatTriple &t) {
  const Vector x = space.embed(t.xi);
  const MVector xe = space.to_m(space.bracket(x, space.embed(t.eta)));
  const MVector xz = space.to_m(space.bracket(x, space.embed(t.zeta)));
  return space.metric_eval(xe, t.zeta) + space.metric_eval(t.eta, xz);
}

NatredResult is_naturally_reductive(const ReductiveSpace &space) {
  const std::size_t n = space.dim_m();
  // One slice per first index; the witness is chosen by index order afterwards.
  std::vector<NatredResult> slices(n);
  parallel_for(n, [&](std::size_t i, std::size_t) {
    const MVector xi{unit_vector(n, i)};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v = psi(space, {xi, MVector{unit_vector(n, j)}, MVector{unit_vector(n, k)}});
        if (!v.is_zero()) {
          slices[i] = {false, std::array<std::size_t, 3>{i, j, k}, std::move(v)};
          return;
        }
      }
  });
  for (auto &s : slices)
    if (!s.natred) return s;
  return {};
}

CrownNatredReport check_crown_natred(const ReductiveSpace &space) {
  CrownNatredReport r;
  r.space = space.name();
  r.real = is_naturally_reductive(space);
  r.crown = is_naturally_reductive(complexify(space));
  r.consistent = r.real.natred == r.crown.natred && r.real.witness == r.crown.witness;
  return r;
}

NatredGoAudit natred_implies_go_audit(const ReductiveSpace &space) {
  NatredGoAudit a;
  a.natred = is_naturally_reductive(space).natred;
  if (!a.natred) return a;
  const auto cert = certify_go_linear(space);
  a.certificate_found = cert.has_value();
  a.graph_map_zero = cert && cert->graph_map->is_zero();
  a.passed = a.certificate_found && a.graph_map_zero;
  return a;
}

}  // namespace gospace
