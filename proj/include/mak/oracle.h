#ifndef MAK_ORACLE_H_
#define MAK_ORACLE_H_

#include "mak/caps.h"
#include "mak/instance.h"
#include "mak/solution.h"

namespace mak {

// Exhaustive search over all 2^m bundles. Among optimal feasible bundles the
// lexicographically smallest item-index set is returned, so the witness is
// deterministic. Throws SizeError when m > caps.oracle_max_items.
Solution BruteForceSolve(const Instance& instance,
                         const Caps& caps = DefaultCaps());

}  // namespace mak

#endif  // MAK_ORACLE_H_
