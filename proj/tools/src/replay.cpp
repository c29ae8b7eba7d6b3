#include <set>

#include "coarsekit/cli/run.hpp"

namespace coarsekit::cli {
namespace {

struct ItemResult {
  bool pass = true;
  std::string mismatch;
  Json witness = nullptr;
};

ItemResult mismatch(std::string text, const MetricSpace& space,
                    const std::optional<Violation>& v = std::nullopt) {
  ItemResult out;
  out.pass = false;
  out.mismatch = std::move(text);
  if (v) {
    out.witness = encode_violation(space, *v);
  }
  return out;
}

ItemResult compare_witness(const MetricSpace& space, const WitnessReport& fresh,
                           const Json& recorded, const std::string& ptr) {
  auto recorded_pass = get_string(recorded, "verdict", ptr) == "pass";
  std::optional<Violation> first;
  if (!fresh.violations.empty()) {
    first = fresh.violations.front();
  }
  if (fresh.pass() != recorded_pass) {
    return mismatch(ptr + ": recorded " + (recorded_pass ? "pass" : "fail") +
                        ", referee says " + (fresh.pass() ? "pass" : "fail") +
                        (first ? " (" + first->detail + ")" : ""),
                    space, first);
  }
  if (recorded.contains("report")) {
    auto measured = get_int(recorded["report"], "measured_bound", ptr + "/report");
    if (measured != fresh.measured_bound) {
      return mismatch(ptr + ": recorded bound " + std::to_string(measured) + ", measured " +
                          std::to_string(fresh.measured_bound),
                      space);
    }
  }
  return {};
}

WitnessReport referee(const MetricSpace& space, const std::vector<SubsetFamily>& families,
                      const Json& item, const std::string& ptr) {
  try {
    if (item.contains("r")) {
      return verify_fad_witness(space, families, decode_scale(item["r"], ptr + "/r"));
    }
    auto r_seq = decode_scales(field(item, "r_seq", ptr), ptr + "/r_seq");
    return verify_apc_witness(space, families, r_seq);
  } catch (const PreconditionError& e) {
    throw InputError(ptr, e.what());
  }
}

ItemResult replay_witness(const Json& item, Distance cap, const std::string& ptr) {
  auto space = build_space(field(item, "space", ptr), cap, ptr + "/space");
  auto families = decode_families(space, field(item, "families", ptr), ptr + "/families");
  return compare_witness(space, referee(space, families, item, ptr), item, ptr);
}

ItemResult replay_extend(const Json& item, Distance cap, const std::string& ptr) {
  auto space = build_space(field(item, "space", ptr), cap, ptr + "/space");
  if (item.contains("error")) {
    // A rejected construction has no families; its verdict must be fail.
    if (get_string(item, "verdict", ptr) != "fail") {
      return mismatch(ptr + ": construction error recorded with a passing verdict", space);
    }
    return {};
  }
  auto families = decode_families(space, field(item, "families", ptr), ptr + "/families");
  auto nx = static_cast<std::size_t>(get_int(item, "x_families", ptr));
  auto nw = static_cast<std::size_t>(get_int(item, "w_families", ptr));
  const auto& index = field(item, "index", ptr);
  if (families.size() != nx * nw || index.size() != nx * nw) {
    return mismatch(ptr + ": expected " + std::to_string(nx * nw) + " families", space);
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::set<std::size_t> ks;
  for (std::size_t n = 0; n < index.size(); ++n) {
    std::string p = ptr + "/index/" + std::to_string(n);
    auto i = static_cast<std::size_t>(get_int(index[n], "i", p));
    auto j = static_cast<std::size_t>(get_int(index[n], "j", p));
    auto k = static_cast<std::size_t>(get_int(index[n], "k", p));
    if (i >= nx || j >= nw || k != i * nw + j) {
      return mismatch(p + ": index entry breaks k = i*(n+1)+j", space);
    }
    pairs.emplace(i, j);
    ks.insert(k);
  }
  if (pairs.size() != nx * nw || ks.size() != nx * nw) {
    return mismatch(ptr + "/index: not a bijection", space);
  }
  return compare_witness(space, referee(space, families, item, ptr), item, ptr);
}

ItemResult replay_game(const Json& item, Distance cap, const std::string& ptr) {
  auto space = build_space(field(item, "space", ptr), cap, ptr + "/space");
  auto t = decode_transcript(space, field(item, "transcript", ptr), ptr + "/transcript");
  auto r = replay_transcript(space, t);
  if (!r.pass) {
    return mismatch(ptr + ": " + r.first_mismatch, space, r.witness);
  }
  auto recorded_pass = get_string(item, "verdict", ptr) == "pass";
  if (recorded_pass != (t.outcome == GameOutcome::Won)) {
    return mismatch(ptr + ": verdict does not follow from the outcome", space);
  }
  return {};
}

ItemResult replay_item(const Json& item, Distance cap, const std::string& ptr) {
  auto kind = get_string(item, "kind", ptr);
  if (kind == "witness") {
    return replay_witness(item, cap, ptr);
  }
  if (kind == "extend") {
    return replay_extend(item, cap, ptr);
  }
  if (kind == "game") {
    return replay_game(item, cap, ptr);
  }
  throw InputError(ptr + "/kind", "reports of kind '" + kind + "' carry nothing to replay");
}

}  // namespace

ReplayOutcome replay_document(const Json& report, Distance cap) {
  if (!report.is_object() || report.value("schema", "") != kSchema) {
    throw InputError("/schema", std::string("expected \"") + kSchema + "\"");
  }
  std::vector<std::pair<const Json*, std::string>> items;
  if (report.contains("report")) {
    items.emplace_back(&report["report"], "/report");
  } else {
    const auto& reports = field(report, "reports", "");
    if (!reports.is_array()) {
      throw InputError("/reports", "expected an array");
    }
    for (std::size_t i = 0; i < reports.size(); ++i) {
      items.emplace_back(&reports[i], "/reports/" + std::to_string(i));
    }
  }
  ReplayOutcome out;
  Json checked = Json::array();
  for (const auto& [item, ptr] : items) {
    auto r = replay_item(*item, cap, ptr);
    checked.push_back(Json{{"item", ptr}, {"pass", r.pass}});
    if (!r.pass && out.pass) {
      out.pass = false;
      out.first_mismatch = r.mismatch;
      out.witness = r.witness;
    }
  }
  out.summary = Json{{"schema", kSchema},
                     {"checked", checked},
                     {"verdict", out.pass ? "pass" : "fail"},
                     {"first_mismatch", out.pass ? Json(nullptr) : Json(out.first_mismatch)},
                     {"witness", out.witness}};
  return out;
}

}  // namespace coarsekit::cli
