#include "bergmod/common.hpp"

namespace bergmod {

void require_interior(const Point& z, std::string_view what) {
  if (!(1.0 - z.squaredNorm() >= kInteriorTol))
    throw PreconditionError(std::string(what) + ": point is not strictly inside the ball");
}

}  // namespace bergmod
