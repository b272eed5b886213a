#pragma once

#include <gtest/gtest.h>

#include <algorithm>

#include "prohecke/verify.hpp"

namespace prohecke::testing {

inline Context make(const std::string& preset, int p, int f = 1, int m = 1) { return build_context(preset, p, f, m); }

inline FieldElt k(const Context& ctx, long long n) { return ctx.field->from_int(n); }

inline ProPElt elt(const Context& ctx, std::vector<int> t, const ExtAffWeylElt& w) {
  return ProPElt{ctx.group->reduce(make_coord(t)), w};
}

inline ProPElt torus(const Context& ctx, std::vector<int> t) { return elt(ctx, std::move(t), ctx.weyl->identity()); }

inline ExtAffWeylElt s(const Context& ctx, int i) { return ctx.weyl->simple_reflection(i); }

/// Expect a suite report without failures; prints the first messages otherwise.
inline void expect_clean(const SuiteReport& r) {
  EXPECT_GT(r.cases, 0) << r.suite;
  EXPECT_EQ(r.failure_count, 0) << r.suite << ": " << (r.failures.empty() ? "" : r.failures.front());
}

}  // namespace prohecke::testing
