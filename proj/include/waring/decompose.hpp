#ifndef WARING_DECOMPOSE_HPP
#define WARING_DECOMPOSE_HPP

#include "waring/certificate.hpp"
#include "waring/rank_rules.hpp"

namespace waring {

/// Verified certificate whose summand count equals classify(inst).upper.
///
/// Pipeline: reduce the exponents mod k, build a certificate for the reduced
/// monomial with the construction behind the decisive upper-bound rule, then
/// multiply every form by the cofactor N (M = N^k [M]). The provenance is the
/// classification trace.
Certificate decompose(const KInstance& inst);

}  // namespace waring

#endif  // WARING_DECOMPOSE_HPP
