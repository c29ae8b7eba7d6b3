#include "coarsekit/cli/run.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace coarsekit::cli {

CoarseQuasiAction make_action(const std::string& id, Distance group_cap, Distance x_window,
                              const std::string& ptr) {
  if (id == "z-on-z" || id == "z2-on-z" || id == "z3-on-z") {
    int d = id[1] == '-' ? 1 : id[1] - '0';
    return lattice_projection_action(d, group_cap, x_window);
  }
  if (id == "lamplighter-on-z") {
    return lamplighter_action(group_cap, x_window);
  }
  if (id == "z*z-on-z") {
    return free_product_action(make_group("z*z", group_cap, ptr), x_window);
  }
  if (id == "even-extension") {
    return even_extension_action(x_window);
  }
  throw InputError(ptr, "unknown action '" + id + "'");
}

std::vector<std::string> action_ids() {
  return {"z-on-z", "z2-on-z", "z3-on-z", "lamplighter-on-z", "z*z-on-z", "even-extension"};
}

std::string default_action(const std::string& group_id, const std::string& ptr) {
  if (group_id == "z" || group_id == "z1") {
    return "z-on-z";
  }
  if (group_id == "z2" || group_id == "z3") {
    return group_id + "-on-z";
  }
  if (group_id == "lamplighter") {
    return "lamplighter-on-z";
  }
  if (group_id == "z*z") {
    return "z*z-on-z";
  }
  throw InputError(ptr, "no shipped action for group '" + group_id + "'");
}

namespace {

struct Context {
  const RunOptions& options;
  std::string ptr;

  [[nodiscard]] std::int64_t window(const Json& s, std::int64_t fallback) const {
    auto w = options.window ? *options.window : get_int_or(s, "window", fallback, ptr);
    limit(w, ptr + "/window");
    return w;
  }
  void limit(std::int64_t value, const std::string& where) const {
    if (value < 0) {
      throw InputError(where, "must be nonnegative");
    }
    if (value > options.cap) {
      throw InputError(where, std::to_string(value) + " exceeds the cap " +
                                  std::to_string(options.cap));
    }
  }
};

Scale scale_or(const Json& s, const std::string& key, const Scale& fallback,
               const std::string& ptr) {
  return s.contains(key) ? decode_scale(s[key], ptr + "/" + key) : fallback;
}

Json verdict(bool pass) { return pass ? "pass" : "fail"; }

MetricSpace group_encoder(const GroupPtr& group) { return cayley_space(group, 0); }

// verify-action

Json run_verify_action(const Json& s, const Context& ctx) {
  auto id = get_string(s, "action", ctx.ptr);
  auto g_radius = get_int_or(s, "g_radius", 2, ctx.ptr);
  ctx.limit(g_radius, ctx.ptr + "/g_radius");
  auto x_window = ctx.window(s, 50);
  auto action = make_action(id, std::max<Distance>(g_radius, 1), x_window, ctx.ptr + "/action");
  auto report = verify_action(action, g_radius, action.space().window(), action.space().window_id());
  auto enc = group_encoder(action.group());
  const auto& X = action.space();
  auto deviation = [&](const std::optional<PairDeviation>& d) -> Json {
    if (!d) {
      return nullptr;
    }
    return Json{{"g", encode_point(enc, d->g)},
                {"h", encode_point(enc, d->h)},
                {"x", encode_point(X, d->x)},
                {"deviation", d->deviation},
                {"bound", encode_scale(d->bound)}};
  };
  Json control_break = nullptr;
  if (report.control_violation) {
    const auto& v = report.control_violation->violation;
    control_break = Json{{"g", encode_point(enc, report.control_violation->g)},
                         {"x", encode_point(X, v.x)},
                         {"y", encode_point(X, v.y)},
                         {"pair_distance", v.pair_distance},
                         {"image_distance", v.image_distance},
                         {"bound", encode_scale(v.bound)}};
  }
  return Json{
      {"action", action.name()},
      {"g_radius", g_radius},
      {"x_window_id", report.x_window_id},
      {"group_elements", report.group_elements},
      {"window_points", report.window_points},
      {"uniform", report.uniform},
      {"control", action.uniform() ? Json(action.control().describe()) : Json(nullptr)},
      {"claimed_A", encode_scale(report.claimed_A)},
      {"measured_A", report.measured_A},
      {"identity_ok", report.identity_ok},
      {"claimed_B", report.claimed_B ? encode_scale(*report.claimed_B) : Json(nullptr)},
      {"pair_bound_rule", report.pair_bound_rule},
      {"measured_B", report.measured_B},
      {"largest_deviation", deviation(report.largest_deviation)},
      {"composition_violations", report.composition_violations},
      {"worst_violation", deviation(report.worst_violation)},
      {"composition_ok", report.composition_ok},
      {"inverse_closeness", report.inverse_closeness},
      {"inverse_ok", report.inverse_ok},
      {"control_ok", report.control_ok},
      {"control_violation", control_break},
      {"max_affine_offset", report.max_affine_offset},
      {"least_uniform_element", report.least_uniform_element
                                    ? encode_point(enc, *report.least_uniform_element)
                                    : Json(nullptr)},
      {"notes", action.notes},
      {"verdict", verdict(report.pass())}};
}

// stabilizer

Json run_stabilizer(const Json& s, const Context& ctx) {
  std::string id;
  if (s.contains("action")) {
    id = get_string(s, "action", ctx.ptr);
  } else {
    id = default_action(get_string(s, "group", ctx.ptr), ctx.ptr + "/group");
  }
  auto radius = get_int(s, "search_radius", ctx.ptr);
  ctx.limit(radius, ctx.ptr + "/search_radius");
  auto R = decode_scale(field(s, "R", ctx.ptr), ctx.ptr + "/R");
  auto action = make_action(id, std::max<Distance>(radius, 1), ctx.window(s, 50),
                            ctx.ptr + "/action");
  StabilizerSet set;
  if (s.contains("x")) {
    auto x = decode_point(action.space(), s["x"], ctx.ptr + "/x");
    set = fibred_quasi_stabilizer(action, x, R, radius);
  } else {
    set = quasi_stabilizer(action, R, radius);
  }
  auto enc = group_encoder(action.group());
  Json elements = Json::array();
  for (const auto& g : set.elements) {
    elements.push_back(encode_point(enc, g));
  }
  return Json{{"action", action.name()},
              {"center", encode_point(action.space(), set.center)},
              {"R", encode_scale(set.R)},
              {"search_radius", set.search_radius},
              {"elements", elements},
              {"count", set.elements.size()},
              {"window_relative", set.window_relative},
              {"verdict", "pass"}};
}

// witness

std::vector<SubsetFamily> generated_families(const Json& g, const MetricSpace& space,
                                             const std::string& ptr) {
  auto kind = get_string(g, "kind", ptr);
  auto phase = get_int_or(g, "phase", 0, ptr);
  auto axis = get_int_or(g, "axis", 0, ptr);
  if (axis < 0 || axis >= std::max(space.dimension(), 1)) {
    throw InputError(ptr + "/axis", "axis out of range");
  }
  try {
    if (kind == "interval") {
      auto fams = interval_cover_generator(space, get_int(g, "L", ptr), phase,
                                           static_cast<std::size_t>(axis));
      return {fams[0], fams[1]};
    }
    if (kind == "two-scale") {
      auto fams = two_scale_interval_cover(space.window(), get_int(g, "L0", ptr),
                                           get_int(g, "L1", ptr), phase,
                                           static_cast<std::size_t>(axis));
      return {fams[0], fams[1]};
    }
  } catch (const PreconditionError& e) {
    throw InputError(ptr, e.what());
  }
  throw InputError(ptr + "/kind", "unknown generator '" + kind + "'");
}

Json run_witness(const Json& s, const Context& ctx) {
  Json descriptor = field(s, "space", ctx.ptr);
  if (ctx.options.window && descriptor.is_object()) {
    auto w = *ctx.options.window;
    if (descriptor.contains("radius")) {
      descriptor["radius"] = w;
    } else if (descriptor.contains("lo")) {
      descriptor["lo"] = -w;
      descriptor["hi"] = w;
    }
  }
  auto space = build_space(descriptor, ctx.options.cap, ctx.ptr + "/space");
  std::vector<SubsetFamily> families;
  if (s.contains("families")) {
    families = decode_families(space, s["families"], ctx.ptr + "/families");
  } else {
    families = generated_families(field(s, "generator", ctx.ptr), space, ctx.ptr + "/generator");
  }
  auto property = get_string(s, "property", ctx.ptr);
  Json out{{"space", descriptor}, {"property", property}};
  WitnessReport report;
  try {
    if (property == "fad") {
      auto r = decode_scale(field(s, "r", ctx.ptr), ctx.ptr + "/r");
      report = verify_fad_witness(space, families, r);
      out["r"] = encode_scale(r);
    } else if (property == "apc") {
      auto r_seq = decode_scales(field(s, "r_seq", ctx.ptr), ctx.ptr + "/r_seq");
      report = verify_apc_witness(space, families, r_seq);
      out["r_seq"] = encode_scales(r_seq);
    } else {
      throw InputError(ctx.ptr + "/property", "expected \"fad\" or \"apc\"");
    }
  } catch (const PreconditionError& e) {
    throw InputError(ctx.ptr, e.what());
  }
  out["families"] = encode_families(space, families);
  out["report"] = encode_witness_report(space, report);
  out["verdict"] = verdict(report.pass());
  return out;
}

// extend

Json run_extend(const Json& s, const Context& ctx) {
  auto mode = get_string(s, "mode", ctx.ptr);
  if (mode != "fad" && mode != "apc") {
    throw InputError(ctx.ptr + "/mode", "expected \"fad\" or \"apc\"");
  }
  auto id = s.value("action", std::string("z2-on-z"));
  if (id != "z2-on-z") {
    throw InputError(ctx.ptr + "/action", "generated covers are available for z2-on-z only");
  }
  auto N = ctx.window(s, 20);
  ctx.limit(2 * N, ctx.ptr + "/window");
  auto action = make_action(id, std::max<Distance>(2 * N, 1), 2 * N, ctx.ptr + "/action");
  Json descriptor{{"kind", "cayley"}, {"group", "z2"}, {"radius", N}};
  auto group_space = cayley_space(action.group(), N);

  Json xg = s.contains("x_cover") ? s["x_cover"]
            : mode == "fad"       ? Json{{"kind", "interval"}, {"L", 8}}
                                  : Json{{"kind", "two-scale"}, {"L0", 13}, {"L1", 5}};
  auto x = generated_families(xg, action.space(), ctx.ptr + "/x_cover");
  std::int64_t longest = xg.value("L", std::max(xg.value("L0", 1), xg.value("L1", 1)));
  Scale T = scale_or(s, "T", Scale(longest - 1), ctx.ptr);
  for (auto& f : x) {
    f.claimed_bound = T;
  }
  Scale rho;
  try {
    rho = stabilizer_radius(action, T);
  } catch (const PreconditionError& e) {
    throw InputError(ctx.ptr + "/action", e.what());
  }
  auto w_length = get_int_or(s.value("w_cover", Json::object()), "L", longest, ctx.ptr + "/w_cover");
  if (w_length < 1) {
    throw InputError(ctx.ptr + "/w_cover/L", "must be positive");
  }
  auto w_pts = quasi_stabilizer(action, rho, 2 * N).elements;
  auto w = interval_cover(w_pts, w_length, 0, 1);
  Scale K = scale_or(s, "K", 2 * rho + Scale(w_length - 1), ctx.ptr);

  ExtensionInput input{action, group_space, {x[0], x[1]}, {w[0], w[1]}, T, K};
  Json out{{"space", descriptor},    {"mode", mode},
           {"action", action.name()}, {"T", encode_scale(T)},
           {"K", encode_scale(K)},   {"stabilizer_radius", encode_scale(rho)}};
  std::optional<ConstructedCover> cover;
  try {
    if (mode == "fad") {
      auto r = scale_or(s, "r", Scale(2), ctx.ptr);
      out["r"] = encode_scale(r);
      cover = build_fad_cover(input, r);
    } else {
      auto r_seq = s.contains("r_seq")
                       ? decode_scales(s["r_seq"], ctx.ptr + "/r_seq")
                       : std::vector<Scale>{2, 3, 5, 8, 13, 21, 34, 55};
      out["r_seq"] = encode_scales(r_seq);
      cover = build_apc_cover(input, r_seq);
    }
  } catch (const ConstructionError& e) {
    out["error"] = Json{{"axiom", e.axiom()},
                        {"detail", e.what()},
                        {"witness", e.witness() ? encode_violation(group_space, *e.witness())
                                                : Json(nullptr)}};
    out["verdict"] = "fail";
    return out;
  } catch (const PreconditionError& e) {
    throw InputError(ctx.ptr, e.what());
  }
  Json index = Json::array();
  for (const auto& c : cover->index) {
    index.push_back(Json{{"i", c.i}, {"j", c.j}, {"k", c.k}});
  }
  Json sections = Json::array();
  for (const auto& sec : cover->sections) {
    sections.push_back(Json{{"family", sec.family},
                            {"member", sec.member},
                            {"element", encode_point(group_space, sec.element)}});
  }
  out["lipschitz"] = encode_scale(cover->lipschitz);
  out["x_families"] = input.x_covers.size();
  out["w_families"] = input.w_covers.size();
  out["families"] = encode_families(group_space, cover->families);
  out["index"] = index;
  out["sections"] = sections;
  out["claimed_dimension_bound"] = cover->claimed_dimension_bound;
  out["core_shrink"] = cover->core_shrink;
  out["notices"] = cover->notices;
  out["report"] = encode_witness_report(group_space, cover->report);
  out["verdict"] = verdict(cover->report.pass());
  return out;
}

// game

Adversary decode_adversary(const Json& a, const std::string& ptr, std::vector<Scale>* listed) {
  if (a.is_array()) {
    auto radii = decode_scales(a, ptr);
    if (listed) {
      *listed = radii;
    }
    return Adversary::sequence(std::move(radii));
  }
  auto rule = get_string(a, "rule", ptr);
  if (rule == "random") {
    // Sequences drawn outside the engine; the seed makes them reproducible.
    std::mt19937_64 rng(static_cast<std::uint64_t>(get_int(a, "seed", ptr)));
    auto rounds = get_int(a, "rounds", ptr);
    auto max = get_int(a, "max", ptr);
    if (rounds < 1 || max < 1) {
      throw InputError(ptr, "rounds and max must be positive");
    }
    std::uniform_int_distribution<std::int64_t> pick(1, max);
    std::vector<Scale> radii;
    for (std::int64_t i = 0; i < rounds; ++i) {
      radii.emplace_back(pick(rng));
    }
    if (a.value("sorted", false)) {
      std::sort(radii.begin(), radii.end());
    }
    if (listed) {
      *listed = radii;
    }
    return Adversary::sequence(std::move(radii));
  }
  auto values = decode_scales(field(a, "values", ptr), ptr + "/values");
  auto need = [&](std::size_t n) {
    if (values.size() != n) {
      throw InputError(ptr + "/values", "rule " + rule + " takes " + std::to_string(n) +
                                            " value(s)");
    }
  };
  if (rule == "constant") {
    need(1);
    return Adversary::constant(values[0]);
  }
  if (rule == "doubling") {
    need(1);
    return Adversary::doubling(values[0]);
  }
  if (rule == "fibonacci") {
    need(2);
    return Adversary::fibonacci(values[0], values[1]);
  }
  throw InputError(ptr + "/rule", "unknown adversary rule '" + rule + "'");
}

Json run_game(const Json& s, const Context& ctx) {
  auto kind = get_string(s, "strategy", ctx.ptr);
  bool lifted = kind == "lifted";
  auto N = ctx.window(s, lifted ? 20 : 40);
  Json descriptor;
  const auto& ambient_json = lifted ? Json("z2") : field(s, "ambient", ctx.ptr);
  if (lifted) {
    descriptor = Json{{"kind", "cayley"}, {"group", "z2"}, {"radius", N}};
  } else if (ambient_json.is_string()) {
    auto a = ambient_json.get<std::string>();
    if (a == "z") {
      descriptor = Json{{"kind", "line"}, {"lo", -N}, {"hi", N}};
    } else if (a == "z2" || a == "z3") {
      descriptor = Json{{"kind", "grid-box"}, {"dimension", a[1] - '0'}, {"lo", -N}, {"hi", N}};
    } else {
      throw InputError(ctx.ptr + "/ambient", "unknown ambient '" + a + "'");
    }
  } else {
    descriptor = ambient_json;
  }
  auto space = build_space(descriptor, ctx.options.cap, ctx.ptr + "/ambient");

  StrategyPtr strategy;
  try {
    if (lifted) {
      auto id = s.value("action", std::string("z2-on-z"));
      if (id != "z2-on-z") {
        throw InputError(ctx.ptr + "/action", "the lifted strategy ships for z2-on-z only");
      }
      auto action = make_action(id, std::max<Distance>(N, 1), 2 * N, ctx.ptr + "/action");
      space = cayley_space(action.group(), N);
      strategy = lifted_strategy(action, space, interval_strategy(), strip_interval_factory(1));
    } else {
      strategy = builtin_strategy(kind, space);
    }
  } catch (const PreconditionError& e) {
    throw InputError(ctx.ptr + "/strategy", e.what());
  }

  auto mode = s.value("mode", std::string("fdc"));
  auto round_cap = get_int_or(s, "round_cap", 8, ctx.ptr);
  if (round_cap < 1) {
    throw InputError(ctx.ptr + "/round_cap", "must be positive");
  }
  std::vector<Scale> listed;
  auto adversary = decode_adversary(field(s, "adversary", ctx.ptr), ctx.ptr + "/adversary",
                                    &listed);
  GameTranscript t;
  if (mode == "fdc") {
    t = play_fdc(space, *strategy, adversary, static_cast<std::size_t>(round_cap));
  } else if (mode == "sfdc") {
    if (listed.empty()) {
      throw InputError(ctx.ptr + "/adversary", "the strong game needs an explicit sequence");
    }
    try {
      t = run_sfdc(space, *strategy, listed);
    } catch (const PreconditionError& e) {
      throw InputError(ctx.ptr + "/adversary", e.what());
    }
  } else {
    throw InputError(ctx.ptr + "/mode", "expected \"fdc\" or \"sfdc\"");
  }
  return Json{{"space", descriptor},
              {"transcript", encode_transcript(space, t)},
              {"outcome", to_string(t.outcome)},
              {"won_round", t.won_round ? Json(*t.won_round) : Json(nullptr)},
              {"final_bound", t.final_bound ? encode_scale(*t.final_bound) : Json(nullptr)},
              {"verdict", verdict(t.outcome == GameOutcome::Won)}};
}

}  // namespace

Json run_scenario(const Json& scenario, const RunOptions& options, const std::string& ptr) {
  Context ctx{options, ptr};
  auto kind = get_string(scenario, "kind", ptr);
  Json body;
  try {
    if (kind == "verify-action") {
      body = run_verify_action(scenario, ctx);
    } else if (kind == "stabilizer") {
      body = run_stabilizer(scenario, ctx);
    } else if (kind == "witness") {
      body = run_witness(scenario, ctx);
    } else if (kind == "extend") {
      body = run_extend(scenario, ctx);
    } else if (kind == "game") {
      body = run_game(scenario, ctx);
    } else {
      throw InputError(ptr + "/kind", "unknown scenario kind '" + kind + "'");
    }
  } catch (const CapExceeded& e) {
    throw InputError(ptr, e.what());
  }
  body["kind"] = kind;
  body["scenario"] = scenario;
  return body;
}

Json run_document(const Json& document, const RunOptions& options) {
  Json out{{"schema", kSchema}, {"tool_version", kToolVersion}};
  if (!document.is_array()) {
    out["report"] = run_scenario(document, options, "");
    return out;
  }
  std::vector<std::future<Json>> jobs;
  for (std::size_t i = 0; i < document.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&document, &options, i] {
      return run_scenario(document[i], options, "/" + std::to_string(i));
    }));
  }
  Json reports = Json::array();
  for (auto& j : jobs) {
    reports.push_back(j.get());
  }
  out["reports"] = reports;
  return out;
}

bool document_passes(const Json& report) {
  if (report.contains("report")) {
    return report["report"].value("verdict", "") == "pass";
  }
  for (const auto& r : report.value("reports", Json::array())) {
    if (r.value("verdict", "") != "pass") {
      return false;
    }
  }
  return true;
}

Json list_models() {
  return Json{{"schema", kSchema},
              {"groups", group_ids()},
              {"actions", action_ids()},
              {"spaces", {"line", "grid-box", "grid-ball", "cayley", "table"}},
              {"strategies", {"interval", "slab", "bounded", "lifted"}},
              {"adversaries", {"sequence", "constant", "doubling", "fibonacci", "random"}},
              {"scenarios", {"verify-action", "stabilizer", "witness", "extend", "game"}}};
}

}  // namespace coarsekit::cli
