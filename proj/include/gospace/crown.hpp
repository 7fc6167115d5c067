#ifndef GOSPACE_CROWN_HPP
#define GOSPACE_CROWN_HPP

#include "gospace/reductive_space.hpp"

namespace gospace {

/// The crown: same structure constants and metric read over Q(i).
/// Throws std::invalid_argument if the space is already gaussian.
ReductiveSpace complexify(const ReductiveSpace &space);

}  // namespace gospace

#endif
