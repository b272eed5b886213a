#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "prohecke/verify.hpp"

using nlohmann::json;
using namespace prohecke;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr const char* kSeedEnv = "PROHECKE_SEED";

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_len;
  std::optional<int> samples;
  std::string out_path;
  bool json_output = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// Config file values, then the env seed, then flags.
RunConfig load_config(const Options& o, std::string& seed_source) {
  if (o.config_path.empty()) throw ParseError("--config is required");
  const json raw = read_json_file(o.config_path);
  RunConfig c = parse_config(raw);
  seed_source = raw.contains("seed") ? "config" : "default";
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      c.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string(kSeedEnv) + " is not an integer");
    }
    seed_source = "env";
  }
  if (o.seed) {
    c.seed = *o.seed;
    seed_source = "flag";
  }
  if (o.max_len) c.max_len = *o.max_len;
  if (o.samples) c.samples = *o.samples;
  if (c.max_len < 0 || c.samples < 0) throw ParseError("max_len and samples must be nonnegative");
  return c;
}

json envelope(const Context& ctx, const std::string& command) {
  return json{{"version", kVersion}, {"command", command}, {"config", config_json(ctx.config)}};
}

void emit(const Options& o, const json& doc, const std::string& text = "") {
  std::string body = doc.dump(2) + "\n";
  if (!o.json_output && !text.empty()) body = text;
  if (o.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(o.out_path);
  if (!out) throw ParseError("cannot write " + o.out_path);
  out << body;
  if (!out) throw ParseError("write to " + o.out_path + " failed");
}

json load_element(const Context& ctx, const std::string& path) {
  json j = read_json_file(path);
  check_context(ctx, j);
  return j;
}

// ------------------------------------------------------------- commands ----

int cmd_mul(const Options& o, const std::string& a_path, const std::string& b_path, const std::string& algebra) {
  std::string seed_source;
  const Context ctx = build_context(load_config(o, seed_source));
  const json a = load_element(ctx, a_path), b = load_element(ctx, b_path);
  json doc = envelope(ctx, "mul");
  doc["algebra"] = algebra;
  if (algebra == "propweyl") {
    doc["product"] = to_json(ctx, ctx.group->mul(prop_elt_from_json(ctx, a), prop_elt_from_json(ctx, b)));
  } else {
    doc["product"] = to_json(ctx, ctx.hecke->mul(hecke_elt_from_json(ctx, a), hecke_elt_from_json(ctx, b)));
  }
  emit(o, doc);
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& suite) {
  std::string seed_source;
  const RunConfig config = load_config(o, seed_source);
  const Context ctx = build_context(config);
  VerifyOptions vo;
  vo.max_len = config.max_len;
  vo.samples = config.samples;
  vo.seed = config.seed;
  const SuiteReport rep = run_suite(ctx, suite, vo);
  json doc = envelope(ctx, "verify");
  doc["report"] = report_json(rep);
  doc["seed_source"] = seed_source;
  std::ostringstream text;
  text << suite << ": " << rep.cases << " cases, " << rep.failure_count << " failures (seed " << rep.seed << ")\n";
  for (const auto& f : rep.failures) text << "  " << f << "\n";
  emit(o, doc, text.str());
  return rep.ok() ? kExitOk : kExitFailures;
}

json export_hecke_table(const Context& ctx, int max_len) {
  const auto basis = basis_elements(ctx, max_len);
  json rows = json::array();
  for (const auto& v : basis) {
    for (const auto& w : basis) {
      rows.push_back(json{{"v", to_json(ctx, v)},
                          {"w", to_json(ctx, w)},
                          {"product", to_json(ctx, ctx.hecke->mul_basis(v, w))["terms"]}});
    }
  }
  return rows;
}

json export_topmod_table(const Context& ctx, int max_len) {
  json rows = json::array();
  for (const auto& g : algebra_generators(ctx)) {
    const HeckeElt tg = ctx.hecke->tau(g);
    for (const auto& w : basis_elements(ctx, max_len)) {
      const TopElt phi = ctx.top->phi(w);
      rows.push_back(json{{"tau", to_json(ctx, g)},
                          {"phi", to_json(ctx, w)},
                          {"left", to_json(ctx, ctx.top->act(tg, phi, Side::kLeft))["terms"]},
                          {"right", to_json(ctx, ctx.top->act(tg, phi, Side::kRight))["terms"]}});
    }
  }
  return rows;
}

json export_omega(const Context& ctx) {
  const OmegaGroup om = ctx.weyl->omega_group();
  json gens = json::array(), elts = json::array();
  for (const auto& g : om.generators) gens.push_back(to_json(ctx, g));
  for (const auto& e : om.elements) elts.push_back(to_json(ctx, e));
  return json{{"finite", om.finite},
              {"torsion", om.torsion},
              {"free_rank", om.free_rank},
              {"generators", gens},
              {"classes", elts},
              {"window_radius", om.finite ? json(nullptr) : json(1)}};
}

json export_characters(const Context& ctx) {
  const auto& H = *ctx.hecke;
  const int n = ctx.weyl->num_simple_affine();
  json rows = json::array();
  for (const auto& lambda : H.torus_characters()) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      AffineCharacter c{lambda, std::vector<int>(n, 0)};
      bool valid = true;
      for (int s = 0; s < n; ++s) {
        if (!(mask >> s & 1)) continue;
        c.eps[s] = -1;
        if (!H.trivial_on_coroot_image(lambda, ctx.weyl->pi_aff()[s].root)) valid = false;
      }
      if (!valid) continue;
      const CharacterVerdict v = H.classify_character(c);
      rows.push_back(json{{"lambda", to_vector(lambda)},
                          {"eps", c.eps},
                          {"twisted_sign", v.twisted_sign},
                          {"twisted_trivial", v.twisted_trivial},
                          {"supersingular", v.is_supersingular}});
    }
  }
  return rows;
}

int cmd_export(const Options& o, const std::string& what) {
  std::string seed_source;
  const Context ctx = build_context(load_config(o, seed_source));
  json doc = envelope(ctx, "export");
  doc["table"] = what;
  if (what == "hecke_table") {
    doc["rows"] = export_hecke_table(ctx, ctx.config.max_len);
  } else if (what == "topmod_table") {
    doc["rows"] = export_topmod_table(ctx, ctx.config.max_len);
  } else if (what == "omega") {
    doc["omega"] = export_omega(ctx);
  } else {
    doc["rows"] = export_characters(ctx);
  }
  if (doc.contains("rows")) doc["row_count"] = doc["rows"].size();
  emit(o, doc);
  return kExitOk;
}

int cmd_coset_support(const Options& o, const std::string& v_path, const std::string& w_path) {
  std::string seed_source;
  const Context ctx = build_context(load_config(o, seed_source));
  const ProPElt v = prop_elt_from_json(ctx, load_element(ctx, v_path));
  const ProPElt w = prop_elt_from_json(ctx, load_element(ctx, w_path));
  json classes = json::array();
  for (const auto& u : ctx.cosets->support_mul(v, w)) classes.push_back(to_json(ctx, u));
  json doc = envelope(ctx, "coset support");
  doc["classes"] = classes;
  emit(o, doc);
  return kExitOk;
}

int cmd_coset_profile(const Options& o, const std::string& w_path) {
  std::string seed_source;
  const Context ctx = build_context(load_config(o, seed_source));
  const json j = load_element(ctx, w_path);
  // accept a Weyl element or a pro-p element, whose torus part is irrelevant here
  const ExtAffWeylElt w = j.contains("w") ? prop_elt_from_json(ctx, j).w : weyl_elt_from_json(ctx, j);
  const auto& rd = ctx.weyl->roots();
  const GProfile g = ctx.cosets->g_profile(w);
  const GProfile gid = ctx.cosets->g_profile(ctx.weyl->identity());
  json values = json::object(), roots = json::object();
  long long sum = 0;
  for (int a = 0; a < rd.num_roots(); ++a) {
    values[std::to_string(a)] = g.values[a];
    roots[std::to_string(a)] = to_vector(rd.coroot(a));
    sum += g.values[a] - gid.values[a];
  }
  json doc = envelope(ctx, "coset profile");
  doc["w"] = to_json(ctx, w);
  doc["length"] = ctx.weyl->length(w);
  doc["g"] = values;
  doc["coroots"] = roots;
  doc["sum_check"] = sum == ctx.weyl->length(w);
  emit(o, doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pro-p Iwahori-Hecke algebra calculator"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "JSON run configuration (group, field, seed, max_len, samples)");
    sub->add_option("--seed", o.seed, "PRNG seed for randomized suites");
    sub->add_option("--max-len", o.max_len, "length bound for enumerations");
    sub->add_option("--samples", o.samples, "random cases per check; 0 runs exhaustively");
    sub->add_option("--out", o.out_path, "write output to this file");
    sub->add_flag("--json", o.json_output, "machine-readable output");
  };

  std::string a_path, b_path, algebra = "hecke";
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  add_common(mul);
  mul->add_option("a", a_path)->required();
  mul->add_option("b", b_path)->required();
  mul->add_option("--algebra", algebra)->check(CLI::IsMember({"hecke", "propweyl"}));

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));

  std::string what;
  auto* exp = app.add_subcommand("export", "export a table");
  add_common(exp);
  exp->add_option("what", what)->required()->check(
      CLI::IsMember({"hecke_table", "topmod_table", "omega", "characters"}));

  auto* coset = app.add_subcommand("coset", "double coset calculus");
  coset->require_subcommand(1);
  std::string v_path, w_path;
  auto* support = coset->add_subcommand("support", "classes in IvI.IwI");
  add_common(support);
  support->add_option("v", v_path)->required();
  support->add_option("w", w_path)->required();
  auto* profile = coset->add_subcommand("profile", "g-profile of w");
  add_common(profile);
  profile->add_option("w", w_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mul) return cmd_mul(o, a_path, b_path, algebra);
    if (*verify) return cmd_verify(o, suite);
    if (*exp) return cmd_export(o, what);
    if (*support) return cmd_coset_support(o, v_path, w_path);
    if (*profile) return cmd_coset_profile(o, w_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitFailures;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
