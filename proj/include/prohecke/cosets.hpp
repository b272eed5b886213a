#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "prohecke/propweyl.hpp"

namespace prohecke {

/// Double cosets I w~ I, one per element of W~.
using CosetSupport = std::set<ProPElt>;

/// g_w(alpha) for every root alpha, indexed like the root list.
struct GProfile {
  std::vector<int> values;
};

class CosetCalculus {
 public:
  explicit CosetCalculus(std::shared_ptr<const ProPWeylGroup> group) : group_(std::move(group)) {}

  const ProPWeylGroup& group() const { return *group_; }

  /// The classes making up I v I . I w I, via the canonical reduced word of v.
  CosetSupport support_mul(const ProPElt& v, const ProPElt& w,
                           WordPolicy policy = WordPolicy::kSmallestDescent) const;
  /// q^l(w) as an exact integer; throws std::overflow_error if it does not fit.
  std::uint64_t index(const ProPElt& w) const;
  GProfile g_profile(const ExtAffWeylElt& w) const;

 private:
  std::shared_ptr<const ProPWeylGroup> group_;
};

}  // namespace prohecke
