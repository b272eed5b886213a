#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "prohecke/cosets.hpp"
#include "prohecke/topmod.hpp"

namespace prohecke {

inline constexpr const char* kVersion = "0.1.0";

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  nlohmann::json group;  // {"preset": ...} or explicit datum
  FieldSpec field;
  std::uint64_t seed = 20240601;
  int max_len = 3;
  int samples = 0;  // 0 = exhaustive where a suite supports it
};

/// Every structure built from one configuration.
struct Context {
  RunConfig config;
  std::shared_ptr<const GaloisField> field;
  std::shared_ptr<const AffineWeylGroup> weyl;
  std::shared_ptr<const ProPWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const TopModule> top;
  std::shared_ptr<const CosetCalculus> cosets;
};

RunConfig parse_config(const nlohmann::json& j);
RootDatum parse_group(const nlohmann::json& j);
FieldSpec parse_field(const nlohmann::json& j);
Context build_context(const RunConfig& config);
/// Convenience for tests and tools: preset name with k = GF(p^m), q = p^f.
Context build_context(const std::string& preset, int p, int f = 1, int m = 1);

nlohmann::json config_json(const RunConfig& c);
nlohmann::json to_json(const FieldElt& x);
nlohmann::json to_json(const Context& ctx, const ExtAffWeylElt& w);
nlohmann::json to_json(const Context& ctx, const ProPElt& x);
nlohmann::json to_json(const Context& ctx, const HeckeElt& h);
nlohmann::json to_json(const Context& ctx, const TopElt& x);

FieldElt field_elt_from_json(const Context& ctx, const nlohmann::json& j);
ExtAffWeylElt weyl_elt_from_json(const Context& ctx, const nlohmann::json& j);
ProPElt prop_elt_from_json(const Context& ctx, const nlohmann::json& j);
/// Accepts {"terms": [...]} or a bare ProPElt (read as tau_x).
HeckeElt hecke_elt_from_json(const Context& ctx, const nlohmann::json& j);
TopElt top_elt_from_json(const Context& ctx, const nlohmann::json& j);

/// Throws ParseError if the element carries a "context" that differs from ctx.
void check_context(const Context& ctx, const nlohmann::json& element);

}  // namespace prohecke
