#include "coarsekit/witness.hpp"

#include <algorithm>
#include <unordered_set>

namespace coarsekit {

std::string to_string(WitnessProperty property) {
  switch (property) {
    case WitnessProperty::Fad:
      return "FAD";
    case WitnessProperty::Apc:
      return "APC";
    case WitnessProperty::Decomposition:
      return "decomposition";
  }
  return "unknown";
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotDisjoint:
      return "not-disjoint";
    case ViolationKind::ExceedsBound:
      return "exceeds-bound";
    case ViolationKind::Uncovered:
      return "uncovered";
    case ViolationKind::NotContained:
      return "not-contained";
    case ViolationKind::OutsideUniverse:
      return "outside-universe";
  }
  return "unknown";
}

namespace {

Violation separation_violation(std::size_t family, const SeparationWitness& w, const Scale& r) {
  Violation v;
  v.kind = ViolationKind::NotDisjoint;
  v.family = family;
  v.member_a = w.member_a;
  v.member_b = w.member_b;
  v.points = {w.point_a, w.point_b};
  v.measured = w.distance;
  v.detail = "members " + std::to_string(w.member_a) + " and " + std::to_string(w.member_b) +
             " are at distance " + std::to_string(w.distance) + " <= " + to_string(r);
  return v;
}

Violation uncovered_violation(std::size_t family, std::vector<Point> missing) {
  Violation v;
  v.kind = ViolationKind::Uncovered;
  v.family = family;
  v.detail = std::to_string(missing.size()) + " point(s) uncovered, first " +
             debug_string(missing.front());
  if (missing.size() > kMaxListedPoints) {
    missing.resize(kMaxListedPoints);
  }
  v.points = std::move(missing);
  return v;
}

void check_universe(const MetricSpace& space, std::span<const SubsetFamily> families,
                    WitnessReport& report) {
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (std::size_t m = 0; m < families[f].members.size(); ++m) {
      for (const auto& p : families[f].members[m].points()) {
        if (!space.in_universe(p)) {
          Violation v;
          v.kind = ViolationKind::OutsideUniverse;
          v.family = f;
          v.member_a = m;
          v.points = {p};
          v.detail = "point " + debug_string(p) + " is not in " + space.universe_id();
          report.violations.push_back(std::move(v));
          return;
        }
      }
    }
  }
}

// Shared body of the FAD and APC referees: family f must be scales[f]-disjoint.
WitnessReport verify_cover_witness(WitnessProperty property, const MetricSpace& space,
                                   std::span<const SubsetFamily> families,
                                   std::span<const Scale> per_family,
                                   std::span<const Point> window, std::string window_id) {
  WitnessReport report;
  report.property = property;
  report.window_id = std::move(window_id);
  report.family_count = families.size();
  report.window_relative = !space.finite_universe();
  check_universe(space, families, report);
  if (!report.pass()) {
    return report;
  }
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& fam = families[f];
    const Scale& r = per_family[f];
    if (auto w = find_separation_violation(space, fam.members, r)) {
      report.violations.push_back(separation_violation(f, *w, r));
    }
    Distance diameter = family_diameter(space, fam).value;
    report.measured_bound = std::max(report.measured_bound, diameter);
    if (fam.claimed_bound && !within(diameter, *fam.claimed_bound)) {
      Violation v;
      v.kind = ViolationKind::ExceedsBound;
      v.family = f;
      v.measured = diameter;
      v.detail = "family diameter " + std::to_string(diameter) + " exceeds claimed bound " +
                 to_string(*fam.claimed_bound);
      report.violations.push_back(std::move(v));
    }
  }
  auto cover = is_cover(families, window);
  if (!cover.covered) {
    report.violations.push_back(uncovered_violation(families.size(), std::move(cover.uncovered)));
  }
  return report;
}

}  // namespace

WitnessReport verify_fad_witness(const MetricSpace& space, std::span<const SubsetFamily> families,
                                 const Scale& r) {
  return verify_fad_witness(space, families, r, space.window(), space.window_id());
}

WitnessReport verify_fad_witness(const MetricSpace& space, std::span<const SubsetFamily> families,
                                 const Scale& r, std::span<const Point> window,
                                 std::string window_id) {
  if (families.empty()) {
    throw PreconditionError("a FAD witness needs at least one family");
  }
  std::vector<Scale> per_family(families.size(), r);
  auto report = verify_cover_witness(WitnessProperty::Fad, space, families, per_family, window,
                                     std::move(window_id));
  report.scales = {r};
  report.dimension_bound = families.size() - 1;
  return report;
}

WitnessReport verify_apc_witness(const MetricSpace& space, std::span<const SubsetFamily> families,
                                 std::span<const Scale> r_seq) {
  return verify_apc_witness(space, families, r_seq, space.window(), space.window_id());
}

WitnessReport verify_apc_witness(const MetricSpace& space, std::span<const SubsetFamily> families,
                                 std::span<const Scale> r_seq, std::span<const Point> window,
                                 std::string window_id) {
  for (std::size_t i = 0; i < r_seq.size(); ++i) {
    if (r_seq[i] <= 0) {
      throw PreconditionError("APC radii must be positive");
    }
    if (i > 0 && r_seq[i] < r_seq[i - 1]) {
      throw PreconditionError("APC radii must be nondecreasing (index " + std::to_string(i) + ")");
    }
  }
  if (families.size() > r_seq.size()) {
    throw PreconditionError("APC witness has more families than radii");
  }
  auto report = verify_cover_witness(WitnessProperty::Apc, space, families,
                                     r_seq.subspan(0, families.size()), window,
                                     std::move(window_id));
  report.scales.assign(r_seq.begin(), r_seq.end());
  return report;
}

DecompositionAssignment trivial_assignment(std::size_t member_count) {
  DecompositionAssignment out(member_count);
  for (std::size_t i = 0; i < member_count; ++i) {
    out[i][0] = {i};
  }
  return out;
}

WitnessReport verify_decomposition(const MetricSpace& space, const SubsetFamily& parent,
                                   const SubsetFamily& child, const Scale& r,
                                   const DecompositionAssignment& assignment) {
  if (assignment.size() != parent.members.size()) {
    throw PreconditionError("assignment covers " + std::to_string(assignment.size()) +
                            " parent members, family has " +
                            std::to_string(parent.members.size()));
  }
  for (std::size_t p = 0; p < assignment.size(); ++p) {
    for (const auto& collection : assignment[p]) {
      for (auto idx : collection) {
        if (idx >= child.members.size()) {
          throw PreconditionError("parent member " + std::to_string(p) +
                                  " references missing child " + std::to_string(idx));
        }
      }
    }
  }

  WitnessReport report;
  report.property = WitnessProperty::Decomposition;
  report.scales = {r};
  report.window_id = space.window_id();
  report.family_count = child.members.size();
  report.window_relative = !space.finite_universe();
  std::vector<SubsetFamily> as_list{child};
  check_universe(space, as_list, report);
  if (!report.pass()) {
    return report;
  }

  for (std::size_t p = 0; p < parent.members.size(); ++p) {
    const Subset& whole = parent.members[p];
    std::unordered_set<Point, PointHash> pieces;
    for (std::size_t c = 0; c < 2; ++c) {
      std::vector<Subset> collection;
      for (auto idx : assignment[p][c]) {
        const Subset& piece = child.members[idx];
        if (!piece.empty()) {
          collection.push_back(piece);
        }
        for (const auto& x : piece.points()) {
          pieces.insert(x);
          if (!whole.contains(x)) {
            Violation v;
            v.kind = ViolationKind::NotContained;
            v.family = p;
            v.collection = c;
            v.member_a = idx;
            v.points = {x};
            v.detail = "child " + std::to_string(idx) + " point " + debug_string(x) +
                       " lies outside parent member " + std::to_string(p);
            report.violations.push_back(std::move(v));
            break;
          }
        }
      }
      if (auto w = find_separation_violation(space, collection, r)) {
        auto v = separation_violation(p, *w, r);
        v.collection = c;
        v.member_a = assignment[p][c][w->member_a];
        v.member_b = assignment[p][c][w->member_b];
        v.detail = "collection " + std::to_string(c) + " of parent member " + std::to_string(p) +
                   ": children " + std::to_string(*v.member_a) + " and " +
                   std::to_string(*v.member_b) + " at distance " + std::to_string(w->distance) +
                   " <= " + to_string(r);
        report.violations.push_back(std::move(v));
      }
    }
    std::vector<Point> missing;
    for (const auto& x : whole.points()) {
      if (!pieces.contains(x)) {
        missing.push_back(x);
      }
    }
    if (!missing.empty()) {
      report.violations.push_back(uncovered_violation(p, std::move(missing)));
    }
  }
  // Empty children carry no diameter; the caller rejects them separately.
  for (const auto& m : child.members) {
    if (!m.empty()) {
      report.measured_bound = std::max(report.measured_bound, subset_diameter(space, m));
    }
  }
  return report;
}

}  // namespace coarsekit
