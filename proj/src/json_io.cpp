#include "prohecke/json_io.hpp"

namespace prohecke {

using nlohmann::json;

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

Coord coord_from_json(const json& j, int rank, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  auto v = j.get<std::vector<int>>();
  if (rank >= 0 && static_cast<int>(v.size()) != rank) {
    throw ParseError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(rank));
  }
  if (static_cast<int>(v.size()) > kMaxRank) throw ParseError(std::string(what) + " exceeds the supported rank");
  return make_coord(v);
}

json field_spec_json(const FieldSpec& s) {
  json j{{"p", s.p}, {"f", s.f}, {"m", s.m}};
  if (s.reduction_poly) j["poly"] = *s.reduction_poly;
  return j;
}

}  // namespace

RootDatum parse_group(const json& j) {
  return guarded("group", [&] {
    if (j.is_string()) return RootDatum::preset(j.get<std::string>());
    if (j.contains("preset")) return RootDatum::preset(j.at("preset").get<std::string>());
    const int rank = j.at("rank").get<int>();
    std::vector<Coord> roots, coroots;
    for (const auto& r : j.at("roots")) roots.push_back(coord_from_json(r, rank, "root"));
    for (const auto& c : j.at("coroots")) coroots.push_back(coord_from_json(c, rank, "coroot"));
    return RootDatum::from_explicit(rank, roots, coroots, j.at("simple").get<std::vector<int>>());
  });
}

FieldSpec parse_field(const json& j) {
  return guarded("field", [&] {
    FieldSpec s;
    s.p = j.at("p").get<int>();
    s.f = j.value("f", 1);
    s.m = j.value("m", 1);
    if (j.contains("poly")) s.reduction_poly = j.at("poly").get<std::vector<int>>();
    return s;
  });
}

RunConfig parse_config(const json& j) {
  return guarded("config", [&] {
    RunConfig c;
    c.group = j.at("group");
    c.field = parse_field(j.at("field"));
    c.seed = j.value("seed", c.seed);
    c.max_len = j.value("max_len", c.max_len);
    c.samples = j.value("samples", c.samples);
    if (c.max_len < 0 || c.samples < 0) throw ParseError("max_len and samples must be nonnegative");
    return c;
  });
}

Context build_context(const RunConfig& config) {
  Context ctx;
  ctx.config = config;
  ctx.field = GaloisField::make(config.field);
  ctx.weyl = std::make_shared<const AffineWeylGroup>(parse_group(config.group));
  ctx.group = std::make_shared<const ProPWeylGroup>(ctx.weyl, static_cast<int>(ctx.field->q()));
  ctx.hecke = std::make_shared<const HeckeAlgebra>(ctx.group, ctx.field);
  ctx.top = std::make_shared<const TopModule>(ctx.hecke);
  ctx.cosets = std::make_shared<const CosetCalculus>(ctx.group);
  return ctx;
}

Context build_context(const std::string& preset, int p, int f, int m) {
  RunConfig c;
  c.group = json{{"preset", preset}};
  c.field.p = p;
  c.field.f = f;
  c.field.m = m;
  return build_context(c);
}

json config_json(const RunConfig& c) {
  return json{{"group", c.group},
              {"field", field_spec_json(c.field)},
              {"seed", c.seed},
              {"max_len", c.max_len},
              {"samples", c.samples}};
}

json to_json(const FieldElt& x) { return x.coeffs(); }

json to_json(const Context& ctx, const ExtAffWeylElt& w) {
  return json{{"w0_word", ctx.weyl->finite().word(w.w0)}, {"mu", to_vector(w.mu)}};
}

json to_json(const Context& ctx, const ProPElt& x) {
  return json{{"torus", to_vector(x.t)}, {"w", to_json(ctx, x.w)}};
}

json to_json(const Context& ctx, const HeckeElt& h) {
  json terms = json::array();
  for (const auto& [x, c] : h.terms()) terms.push_back(json{{"coeff", to_json(c)}, {"elt", to_json(ctx, x)}});
  return json{{"terms", terms}};
}

json to_json(const Context& ctx, const TopElt& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back(json{{"coeff", to_json(c)}, {"elt", to_json(ctx, w)}});
  return json{{"basis", "phi"}, {"terms", terms}};
}

FieldElt field_elt_from_json(const Context& ctx, const json& j) {
  return guarded("coefficient", [&] {
    if (j.is_number_integer()) return ctx.field->from_int(j.get<long long>());
    const auto v = j.get<std::vector<int>>();
    if (static_cast<int>(v.size()) != ctx.field->degree()) throw ParseError("coefficient has the wrong length");
    for (int c : v) {
      if (c < 0 || c >= ctx.field->characteristic()) throw ParseError("coefficient entry out of range");
    }
    return ctx.field->from_coeffs(v);
  });
}

ExtAffWeylElt weyl_elt_from_json(const Context& ctx, const json& j) {
  return guarded("Weyl element", [&] {
    const auto word = j.value("w0_word", std::vector<int>{});
    int w0 = 0;
    try {
      w0 = ctx.weyl->finite().from_word(word);
    } catch (const RootDataError& e) {
      throw ParseError(e.what());
    }
    Coord mu = j.contains("mu") ? coord_from_json(j.at("mu"), ctx.weyl->rank(), "mu") : Coord::Zero(ctx.weyl->rank());
    return ExtAffWeylElt{w0, mu};
  });
}

ProPElt prop_elt_from_json(const Context& ctx, const json& j) {
  return guarded("pro-p element", [&] {
    const int r = ctx.group->rank();
    if (!j.is_object()) throw ParseError("expected an object");
    // a bare Weyl element {"w0_word", "mu"} stands for (0, w)
    if (!j.contains("torus") && !j.contains("w")) {
      if (!j.contains("w0_word") && !j.contains("mu")) throw ParseError("expected \"torus\"/\"w\" or \"w0_word\"/\"mu\"");
      return ProPElt{TorusElt::Zero(r), weyl_elt_from_json(ctx, j)};
    }
    TorusElt t = j.contains("torus") ? coord_from_json(j.at("torus"), r, "torus") : TorusElt::Zero(r);
    ExtAffWeylElt w = j.contains("w") ? weyl_elt_from_json(ctx, j.at("w")) : ctx.weyl->identity();
    return ProPElt{ctx.group->reduce(t), w};
  });
}

HeckeElt hecke_elt_from_json(const Context& ctx, const json& j) {
  return guarded("Hecke element", [&] {
    if (!j.contains("terms")) return ctx.hecke->tau(prop_elt_from_json(ctx, j));
    if (j.value("basis", "tau") != std::string("tau")) throw ParseError("expected a tau-basis element");
    HeckeElt h = ctx.hecke->zero();
    for (const auto& term : j.at("terms")) {
      h.add_term(prop_elt_from_json(ctx, term.at("elt")), field_elt_from_json(ctx, term.at("coeff")));
    }
    return h;
  });
}

TopElt top_elt_from_json(const Context& ctx, const json& j) {
  return guarded("top element", [&] {
    if (!j.contains("terms")) return ctx.top->phi(prop_elt_from_json(ctx, j));
    if (j.value("basis", "phi") != std::string("phi")) throw ParseError("expected a phi-basis element");
    TopElt x = ctx.top->zero();
    for (const auto& term : j.at("terms")) {
      x.add_term(prop_elt_from_json(ctx, term.at("elt")), field_elt_from_json(ctx, term.at("coeff")));
    }
    return x;
  });
}

void check_context(const Context& ctx, const json& element) {
  if (!element.is_object() || !element.contains("context")) return;
  const json& c = element.at("context");
  if (c.contains("group") && c.at("group") != ctx.config.group) {
    throw ParseError("element belongs to a different group");
  }
  if (c.contains("field")) {
    const FieldSpec f = parse_field(c.at("field"));
    const FieldSpec& g = ctx.config.field;
    const bool poly_differs = f.reduction_poly && g.reduction_poly && *f.reduction_poly != *g.reduction_poly;
    if (f.p != g.p || f.f != g.f || f.m != g.m || poly_differs) {
      throw ParseError("element belongs to a different coefficient field");
    }
  }
}

}  // namespace prohecke
