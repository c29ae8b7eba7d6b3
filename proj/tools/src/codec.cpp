#include "coarsekit/cli/codec.hpp"

#include <algorithm>

namespace coarsekit::cli {

const Json& field(const Json& object, const std::string& key, const std::string& ptr) {
  if (!object.is_object()) {
    throw InputError(ptr, "expected an object");
  }
  auto it = object.find(key);
  if (it == object.end()) {
    throw InputError(ptr + "/" + key, "missing field");
  }
  return *it;
}

std::int64_t get_int(const Json& object, const std::string& key, const std::string& ptr) {
  const auto& v = field(object, key, ptr);
  if (!v.is_number_integer()) {
    throw InputError(ptr + "/" + key, "expected an integer");
  }
  return v.get<std::int64_t>();
}

std::int64_t get_int_or(const Json& object, const std::string& key, std::int64_t fallback,
                        const std::string& ptr) {
  if (!object.contains(key)) {
    return fallback;
  }
  return get_int(object, key, ptr);
}

std::string get_string(const Json& object, const std::string& key, const std::string& ptr) {
  const auto& v = field(object, key, ptr);
  if (!v.is_string()) {
    throw InputError(ptr + "/" + key, "expected a string");
  }
  return v.get<std::string>();
}

Json encode_scale(const Scale& value) {
  if (value.denominator() == 1) {
    return value.numerator();
  }
  return to_string(value);
}

Scale decode_scale(const Json& value, const std::string& ptr) {
  if (value.is_number_integer()) {
    return Scale(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    try {
      return parse_scale(value.get<std::string>());
    } catch (const PreconditionError& e) {
      throw InputError(ptr, e.what());
    }
  }
  throw InputError(ptr, "expected an integer or a \"p/q\" string");
}

Json encode_scales(const std::vector<Scale>& values) {
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(encode_scale(v));
  }
  return out;
}

std::vector<Scale> decode_scales(const Json& value, const std::string& ptr) {
  if (!value.is_array()) {
    throw InputError(ptr, "expected an array of scales");
  }
  std::vector<Scale> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(decode_scale(value[i], ptr + "/" + std::to_string(i)));
  }
  return out;
}

GroupPtr make_group(const std::string& id, Distance cap, const std::string& ptr) {
  if (id == "z") {
    return make_lattice(1, cap);
  }
  if (id.size() == 2 && id[0] == 'z' && id[1] >= '1' && id[1] <= '4') {
    return make_lattice(id[1] - '0', cap);
  }
  if (id == "f2" || id == "f3") {
    return make_free_group(id[1] - '0', cap);
  }
  if (id == "z*z") {
    return make_free_product(make_lattice(1), make_lattice(1), cap);
  }
  if (id == "lamplighter") {
    return make_lamplighter(cap);
  }
  throw InputError(ptr, "unknown group '" + id + "'");
}

std::vector<std::string> group_ids() {
  return {"z", "z2", "z3", "z4", "f2", "f3", "z*z", "lamplighter"};
}

namespace {

void check_cap(std::int64_t value, Distance cap, const std::string& ptr) {
  if (value < 0) {
    throw InputError(ptr, "must be nonnegative");
  }
  if (value > cap) {
    throw InputError(ptr, std::to_string(value) + " exceeds the cap " + std::to_string(cap));
  }
}

}  // namespace

MetricSpace build_space(const Json& d, Distance cap, const std::string& ptr) {
  auto kind = get_string(d, "kind", ptr);
  if (kind == "line") {
    auto lo = get_int(d, "lo", ptr);
    auto hi = get_int(d, "hi", ptr);
    if (lo > hi) {
      throw InputError(ptr + "/hi", "empty interval");
    }
    check_cap(std::max(std::abs(lo), std::abs(hi)), cap, ptr + "/hi");
    return MetricSpace::integer_line(lo, hi);
  }
  if (kind == "grid-box" || kind == "grid-ball") {
    auto dim = get_int(d, "dimension", ptr);
    if (dim < 1 || dim > 4) {
      throw InputError(ptr + "/dimension", "dimension must be 1..4");
    }
    if (kind == "grid-ball") {
      auto r = get_int(d, "radius", ptr);
      check_cap(r, cap, ptr + "/radius");
      return MetricSpace::integer_grid_ball(static_cast<int>(dim), r);
    }
    auto lo = get_int(d, "lo", ptr);
    auto hi = get_int(d, "hi", ptr);
    if (lo > hi) {
      throw InputError(ptr + "/hi", "empty box");
    }
    check_cap(std::max(std::abs(lo), std::abs(hi)), cap, ptr + "/hi");
    return MetricSpace::integer_grid_box(static_cast<int>(dim), lo, hi);
  }
  if (kind == "cayley") {
    auto r = get_int(d, "radius", ptr);
    check_cap(r, cap, ptr + "/radius");
    auto group = make_group(get_string(d, "group", ptr), std::max<Distance>(r, 1), ptr + "/group");
    return cayley_space(group, r);
  }
  if (kind == "table") {
    const auto& m = field(d, "matrix", ptr);
    try {
      return MetricSpace::table(m.get<std::vector<std::vector<Distance>>>());
    } catch (const Json::exception& e) {
      throw InputError(ptr + "/matrix", "expected a square integer matrix");
    } catch (const PreconditionError& e) {
      throw InputError(ptr + "/matrix", e.what());
    }
  }
  throw InputError(ptr + "/kind", "unknown space kind '" + kind + "'");
}

Json encode_point(const MetricSpace& space, const Point& p) {
  const auto& group = space.group();
  if (group && group->kind() == GroupKind::Lamplighter) {
    auto c = lamp_configuration(p);
    Json lamps = Json::object();
    for (auto [x, n] : c.lamps) {
      lamps[std::to_string(x)] = n;
    }
    return Json{{"lamps", lamps}, {"shift", c.shift}};
  }
  if (group && (group->kind() == GroupKind::FreeGroup || group->kind() == GroupKind::FreeProduct)) {
    return group->word(p);
  }
  Json out = Json::array();
  for (auto c : p.coords()) {
    out.push_back(c);
  }
  return out;
}

Point decode_point(const MetricSpace& space, const Json& value, const std::string& ptr) {
  const auto& group = space.group();
  try {
    if (group && group->kind() == GroupKind::Lamplighter) {
      LampConfiguration c;
      c.shift = get_int(value, "shift", ptr);
      const auto& lamps = field(value, "lamps", ptr);
      if (!lamps.is_object()) {
        throw InputError(ptr + "/lamps", "expected an object");
      }
      for (const auto& [key, n] : lamps.items()) {
        std::size_t used = 0;
        std::int64_t x = 0;
        try {
          x = std::stoll(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || !n.is_number_integer()) {
          throw InputError(ptr + "/lamps/" + key, "expected integer position and value");
        }
        c.lamps.emplace_back(x, n.get<std::int64_t>());
      }
      std::sort(c.lamps.begin(), c.lamps.end());
      return lamplighter_element(c);
    }
    if (group && (group->kind() == GroupKind::FreeGroup ||
                  group->kind() == GroupKind::FreeProduct)) {
      if (!value.is_string()) {
        throw InputError(ptr, "expected a word");
      }
      return group->evaluate(value.get<std::string>());
    }
    if (!value.is_array()) {
      throw InputError(ptr, "expected an integer array");
    }
    Point::Storage coords;
    for (const auto& c : value) {
      if (!c.is_number_integer()) {
        throw InputError(ptr, "expected an integer array");
      }
      coords.push_back(c.get<std::int64_t>());
    }
    Point p(std::move(coords));
    if (!space.in_universe(p)) {
      throw InputError(ptr, "point is not in the universe " + space.universe_id());
    }
    return p;
  } catch (const PreconditionError& e) {
    throw InputError(ptr, e.what());
  }
}

Json encode_subset(const MetricSpace& space, const Subset& s) {
  Json out = Json::array();
  for (const auto& p : s.points()) {
    out.push_back(encode_point(space, p));
  }
  return out;
}

Subset decode_subset(const MetricSpace& space, const Json& value, const std::string& ptr) {
  if (!value.is_array()) {
    throw InputError(ptr, "expected an array of points");
  }
  std::vector<Point> pts;
  for (std::size_t i = 0; i < value.size(); ++i) {
    pts.push_back(decode_point(space, value[i], ptr + "/" + std::to_string(i)));
  }
  try {
    return Subset(std::move(pts));
  } catch (const PreconditionError& e) {
    throw InputError(ptr, e.what());
  }
}

Json encode_family(const MetricSpace& space, const SubsetFamily& family) {
  Json members = Json::array();
  for (const auto& m : family.members) {
    members.push_back(encode_subset(space, m));
  }
  return Json{{"members", members},
              {"claimed_disjointness", encode_scale(family.claimed_disjointness)},
              {"claimed_bound",
               family.claimed_bound ? encode_scale(*family.claimed_bound) : Json(nullptr)}};
}

SubsetFamily decode_family(const MetricSpace& space, const Json& value, const std::string& ptr) {
  SubsetFamily out;
  const auto& members = field(value, "members", ptr);
  if (!members.is_array()) {
    throw InputError(ptr + "/members", "expected an array");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.members.push_back(
        decode_subset(space, members[i], ptr + "/members/" + std::to_string(i)));
  }
  if (value.contains("claimed_disjointness")) {
    out.claimed_disjointness =
        decode_scale(value["claimed_disjointness"], ptr + "/claimed_disjointness");
  }
  if (value.contains("claimed_bound") && !value["claimed_bound"].is_null()) {
    out.claimed_bound = decode_scale(value["claimed_bound"], ptr + "/claimed_bound");
  }
  return out;
}

Json encode_families(const MetricSpace& space, const std::vector<SubsetFamily>& families) {
  Json out = Json::array();
  for (const auto& f : families) {
    out.push_back(encode_family(space, f));
  }
  return out;
}

std::vector<SubsetFamily> decode_families(const MetricSpace& space, const Json& value,
                                          const std::string& ptr) {
  if (!value.is_array()) {
    throw InputError(ptr, "expected an array of families");
  }
  std::vector<SubsetFamily> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(decode_family(space, value[i], ptr + "/" + std::to_string(i)));
  }
  return out;
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json encode_violation(const MetricSpace& space, const Violation& v) {
  Json pts = Json::array();
  for (const auto& p : v.points) {
    pts.push_back(encode_point(space, p));
  }
  return Json{{"kind", to_string(v.kind)},
              {"family", v.family},
              {"collection", optional_json(v.collection)},
              {"member_a", optional_json(v.member_a)},
              {"member_b", optional_json(v.member_b)},
              {"points", pts},
              {"measured", optional_json(v.measured)},
              {"detail", v.detail}};
}

Json encode_witness_report(const MetricSpace& space, const WitnessReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(encode_violation(space, v));
  }
  return Json{{"property", to_string(report.property)},
              {"scales", encode_scales(report.scales)},
              {"window_id", report.window_id},
              {"family_count", report.family_count},
              {"dimension_bound", optional_json(report.dimension_bound)},
              {"measured_bound", report.measured_bound},
              {"window_relative", report.window_relative},
              {"violations", violations},
              {"verdict", report.pass() ? "pass" : "fail"}};
}

Json encode_assignment(const DecompositionAssignment& assignment) {
  Json out = Json::array();
  for (const auto& pair : assignment) {
    out.push_back(Json::array({pair[0], pair[1]}));
  }
  return out;
}

DecompositionAssignment decode_assignment(const Json& value, const std::string& ptr) {
  if (!value.is_array()) {
    throw InputError(ptr, "expected an array of collection pairs");
  }
  DecompositionAssignment out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto& pair = value[i];
    std::string p = ptr + "/" + std::to_string(i);
    if (!pair.is_array() || pair.size() != 2) {
      throw InputError(p, "expected two collections");
    }
    CollectionPair cp;
    for (std::size_t side = 0; side < 2; ++side) {
      try {
        cp[side] = pair[side].get<std::vector<std::size_t>>();
      } catch (const Json::exception&) {
        throw InputError(p + "/" + std::to_string(side), "expected member indices");
      }
    }
    out.push_back(std::move(cp));
  }
  return out;
}

namespace {

Json encode_members(const MetricSpace& space, const std::vector<Subset>& members) {
  Json out = Json::array();
  for (const auto& m : members) {
    out.push_back(encode_subset(space, m));
  }
  return out;
}

std::vector<Subset> decode_members(const MetricSpace& space, const Json& value,
                                   const std::string& ptr) {
  if (!value.is_array()) {
    throw InputError(ptr, "expected an array of members");
  }
  std::vector<Subset> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(decode_subset(space, value[i], ptr + "/" + std::to_string(i)));
  }
  return out;
}

GameOutcome decode_outcome(const std::string& text, const std::string& ptr) {
  for (auto o : {GameOutcome::Won, GameOutcome::Lost, GameOutcome::CapHit}) {
    if (to_string(o) == text) {
      return o;
    }
  }
  throw InputError(ptr, "unknown outcome '" + text + "'");
}

}  // namespace

Json encode_transcript(const MetricSpace& space, const GameTranscript& t) {
  Json rounds = Json::array();
  for (const auto& r : t.rounds) {
    rounds.push_back(Json{
        {"round", r.round},
        {"R", encode_scale(r.R)},
        {"phase", r.phase},
        {"family", encode_members(space, r.family)},
        {"assignment", encode_assignment(r.assignment)},
        {"declared_bound", r.declared_bound ? encode_scale(*r.declared_bound) : Json(nullptr)},
        {"member_count", r.member_count},
        {"max_diameter", r.max_diameter},
        {"verdict", encode_witness_report(space, r.verdict)},
        {"failure", r.failure}});
  }
  return Json{{"mode", t.mode},
              {"strategy", t.strategy},
              {"adversary", t.adversary},
              {"window_id", t.window_id},
              {"initial_family", encode_members(space, t.initial_family)},
              {"rounds", rounds},
              {"outcome", to_string(t.outcome)},
              {"won_round", optional_json(t.won_round)},
              {"final_bound", t.final_bound ? encode_scale(*t.final_bound) : Json(nullptr)},
              {"detail", t.detail}};
}

GameTranscript decode_transcript(const MetricSpace& space, const Json& value,
                                 const std::string& ptr) {
  GameTranscript t;
  t.mode = get_string(value, "mode", ptr);
  t.strategy = get_string(value, "strategy", ptr);
  t.adversary = get_string(value, "adversary", ptr);
  t.window_id = get_string(value, "window_id", ptr);
  t.initial_family = decode_members(space, field(value, "initial_family", ptr),
                                    ptr + "/initial_family");
  const auto& rounds = field(value, "rounds", ptr);
  if (!rounds.is_array()) {
    throw InputError(ptr + "/rounds", "expected an array");
  }
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    std::string p = ptr + "/rounds/" + std::to_string(i);
    const auto& r = rounds[i];
    RoundRecord rec;
    rec.round = static_cast<std::size_t>(get_int(r, "round", p));
    rec.R = decode_scale(field(r, "R", p), p + "/R");
    rec.phase = get_string(r, "phase", p);
    rec.family = decode_members(space, field(r, "family", p), p + "/family");
    rec.assignment = decode_assignment(field(r, "assignment", p), p + "/assignment");
    if (r.contains("declared_bound") && !r["declared_bound"].is_null()) {
      rec.declared_bound = decode_scale(r["declared_bound"], p + "/declared_bound");
    }
    rec.member_count = static_cast<std::size_t>(get_int(r, "member_count", p));
    rec.max_diameter = get_int(r, "max_diameter", p);
    rec.failure = r.value("failure", "");
    t.rounds.push_back(std::move(rec));
  }
  t.outcome = decode_outcome(get_string(value, "outcome", ptr), ptr + "/outcome");
  if (value.contains("won_round") && !value["won_round"].is_null()) {
    t.won_round = static_cast<std::size_t>(get_int(value, "won_round", ptr));
  }
  if (value.contains("final_bound") && !value["final_bound"].is_null()) {
    t.final_bound = decode_scale(value["final_bound"], ptr + "/final_bound");
  }
  t.detail = value.value("detail", "");
  return t;
}

}  // namespace coarsekit::cli
