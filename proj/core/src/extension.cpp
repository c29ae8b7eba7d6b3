#include "coarsekit/extension.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace coarsekit {

ConstructionError::ConstructionError(std::string axiom, const std::string& detail,
                                     std::optional<Violation> witness)
    : Error(axiom + ": " + detail), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

namespace {

using ImageIndex = std::unordered_map<Point, std::vector<std::size_t>, PointHash>;

ImageIndex index_images(const CoarseMap& pi, std::span<const Point> g_window) {
  ImageIndex out;
  for (std::size_t i = 0; i < g_window.size(); ++i) {
    out[pi(g_window[i])].push_back(i);
  }
  return out;
}

std::vector<GroupElement> preimage(const ImageIndex& images, const Subset& F,
                                   std::span<const Point> g_window) {
  std::vector<GroupElement> out;
  for (const auto& x : F.points()) {
    auto it = images.find(x);
    if (it == images.end()) {
      continue;
    }
    for (auto i : it->second) {
      out.push_back(g_window[i]);
    }
  }
  return out;
}

const GroupModel& model_of(const CoarseMap& pi) {
  const auto& group = pi.source().group();
  if (!group) {
    throw PreconditionError("orbit map must start at a Cayley space");
  }
  return *group;
}

void require_stamped(const CoarseMap& pi) {
  if (!pi.stamped()) {
    throw PreconditionError("orbit map " + pi.name() + " is not stamped");
  }
}

}  // namespace

SubsetFamily pullback_family(const CoarseMap& pi, const SubsetFamily& family,
                             std::span<const Point> g_window) {
  require_stamped(pi);
  auto images = index_images(pi, g_window);
  SubsetFamily out;
  out.claimed_disjointness = family.claimed_disjointness;
  for (const auto& F : family.members) {
    auto pre = preimage(images, F, g_window);
    if (!pre.empty()) {
      out.members.emplace_back(std::move(pre));
    }
  }
  return out;
}

GroupElement choose_section(const CoarseMap& pi, const Subset& F,
                            std::span<const Point> g_window) {
  const auto& model = model_of(pi);
  std::optional<GroupElement> best;
  for (const auto& g : g_window) {
    if (F.contains(pi(g)) && (!best || canonical_less(model, g, *best))) {
      best = g;
    }
  }
  if (!best) {
    throw PreconditionError("F not hit in window");
  }
  return *best;
}

Scale stabilizer_radius(const CoarseQuasiAction& action, const Scale& T) {
  if (!action.uniform() || action.constants().pair_bound) {
    throw PreconditionError("stabilizer radius needs a uniform quasi-action");
  }
  const auto& c = action.constants();
  return c.A + 2 * c.B + action.control()(T);
}

CoarseMap stamped_orbit_map(const CoarseQuasiAction& action, const MetricSpace& cayley) {
  const auto& group = action.group();
  auto neighbours = [&group](const Point& g) {
    std::vector<Point> out;
    for (const auto& s : group->generators()) {
      out.push_back(group->multiply(g, s.element));
    }
    return out;
  };
  return stamp_lipschitz_on_edges(orbit_map(action, cayley), cayley.window(), neighbours);
}

namespace {

void check_family(const MetricSpace& space, const SubsetFamily& fam, const Scale& r,
                  const Scale& bound, const std::string& label) {
  if (auto w = find_separation_violation(space, fam.members, r)) {
    Violation v;
    v.kind = ViolationKind::NotDisjoint;
    v.member_a = w->member_a;
    v.member_b = w->member_b;
    v.points = {w->point_a, w->point_b};
    v.measured = w->distance;
    throw ConstructionError(label + " disjointness",
                            "members " + std::to_string(w->member_a) + " and " +
                                std::to_string(w->member_b) + " are at distance " +
                                std::to_string(w->distance) + " <= " + to_string(r),
                            v);
  }
  Distance diameter = family_diameter(space, fam).value;
  if (!within(diameter, bound)) {
    Violation v;
    v.kind = ViolationKind::ExceedsBound;
    v.measured = diameter;
    throw ConstructionError(label + " bound", "diameter " + std::to_string(diameter) +
                                                  " exceeds " + to_string(bound),
                            v);
  }
}

// Shared combination step: x_scales[i] is the disjointness demanded of the
// pullback of X family i, w_scale that of every W family, out_scales[k] the
// scale of output family k.
ConstructedCover combine(const ExtensionInput& in, const std::string& mode,
                         const std::vector<Scale>& x_scales, const Scale& w_scale,
                         const std::vector<Scale>& out_scales) {
  const auto& action = in.action;
  if (!action.uniform()) {
    throw ConstructionError("uniform control", "action " + action.name() + " is nonuniform");
  }
  if (in.x_covers.empty() || in.w_covers.empty()) {
    throw ConstructionError("input covers", "need at least one X family and one W family");
  }
  const auto& G = *action.group();
  const auto& X = action.space();
  const auto& Gs = in.group_space;
  const Point& x0 = action.base_point();

  ConstructedCover out;
  out.mode = mode;
  out.lipschitz = orbit_lipschitz(action);
  out.stabilizer_radius = stabilizer_radius(action, in.T);
  const Scale rho = out.stabilizer_radius;

  for (std::size_t i = 0; i < in.x_covers.size(); ++i) {
    check_family(X, in.x_covers[i], out.lipschitz * x_scales[i], in.T,
                 "X family " + std::to_string(i));
  }
  for (std::size_t j = 0; j < in.w_covers.size(); ++j) {
    const auto& fam = in.w_covers[j];
    check_family(Gs, fam, w_scale, in.K, "W family " + std::to_string(j));
    for (const auto& A : fam.members) {
      for (const auto& a : A.points()) {
        if (!within(X.distance(action.apply(a, x0), x0), rho)) {
          throw ConstructionError("W family " + std::to_string(j) + " support",
                                  "element " + G.word(a) + " is outside the quasi-stabilizer");
        }
      }
    }
  }

  CoarseMap pi = stamped_orbit_map(action, Gs);
  auto window = Gs.window();
  auto images = index_images(pi, window);

  std::vector<std::unordered_map<Point, std::size_t, PointHash>> w_index(in.w_covers.size());
  for (std::size_t j = 0; j < in.w_covers.size(); ++j) {
    const auto& members = in.w_covers[j].members;
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (const auto& a : members[m].points()) {
        w_index[j].emplace(a, m);
      }
    }
  }

  const std::size_t nw = in.w_covers.size();
  const std::size_t total = in.x_covers.size() * nw;
  out.families.resize(total);
  for (std::size_t i = 0; i < in.x_covers.size(); ++i) {
    for (std::size_t j = 0; j < nw; ++j) {
      std::size_t k = i * nw + j;
      out.index.push_back({i, j, k});
      out.families[k].claimed_disjointness = out_scales[k];
      out.families[k].claimed_bound = in.K;
    }
  }

  for (std::size_t i = 0; i < in.x_covers.size(); ++i) {
    const auto& members = in.x_covers[i].members;
    for (std::size_t f = 0; f < members.size(); ++f) {
      auto pre = preimage(images, members[f], window);
      if (pre.empty()) {
        out.notices.push_back("X family " + std::to_string(i) + " member " + std::to_string(f) +
                              " misses the orbit window; dropped");
        continue;
      }
      canonical_sort(G, pre);
      const GroupElement& gF = pre.front();
      out.sections.push_back({i, f, gF});
      GroupElement gF_inv = G.inverse(gF);
      std::vector<std::map<std::size_t, std::vector<Point>>> pieces(nw);
      for (const auto& p : pre) {
        GroupElement q = G.multiply(gF_inv, p);
        Distance moved = X.distance(action.apply(q, x0), x0);
        if (!within(moved, rho)) {
          Violation v;
          v.kind = ViolationKind::NotContained;
          v.family = i;
          v.member_a = f;
          v.points = {p};
          v.measured = moved;
          throw ConstructionError("containment",
                                  "X family " + std::to_string(i) + " member " +
                                      std::to_string(f) + ": g_F^-1 " + G.word(p) + " moves x0 by " +
                                      std::to_string(moved) + " > " + to_string(rho),
                                  v);
        }
        for (std::size_t j = 0; j < nw; ++j) {
          auto it = w_index[j].find(q);
          if (it != w_index[j].end()) {
            pieces[j][it->second].push_back(p);
          }
        }
      }
      for (std::size_t j = 0; j < nw; ++j) {
        for (auto& [m, pts] : pieces[j]) {
          out.families[i * nw + j].members.emplace_back(std::move(pts));
        }
      }
    }
  }
  out.claimed_dimension_bound = total - 1;
  return out;
}

void require_pass(const ConstructedCover& cover) {
  if (!cover.report.pass()) {
    const auto& v = cover.report.violations.front();
    throw ConstructionError("output referee", v.detail, v);
  }
}

}  // namespace

ConstructedCover build_fad_cover(const ExtensionInput& input, const Scale& r) {
  std::vector<Scale> x_scales(input.x_covers.size(), r);
  std::vector<Scale> out_scales(input.x_covers.size() * input.w_covers.size(), r);
  auto cover = combine(input, "fad", x_scales, r, out_scales);
  cover.report = verify_fad_witness(input.group_space, cover.families, r);
  require_pass(cover);
  return cover;
}

ConstructedCover build_apc_cover(const ExtensionInput& input, std::span<const Scale> r_seq) {
  const std::size_t nw = input.w_covers.size();
  const std::size_t nx = input.x_covers.size();
  if (r_seq.size() <= nx * nw) {
    throw PreconditionError("radius sequence too short: need index " + std::to_string(nx * nw));
  }
  for (std::size_t i = 1; i < r_seq.size(); ++i) {
    if (r_seq[i] < r_seq[i - 1]) {
      throw PreconditionError("radius sequence must be nondecreasing");
    }
  }
  std::vector<Scale> x_scales;
  for (std::size_t i = 0; i < nx; ++i) {
    x_scales.push_back(r_seq[(i + 1) * nw]);
  }
  std::vector<Scale> out_scales(r_seq.begin(), r_seq.begin() + static_cast<std::ptrdiff_t>(nx * nw));
  auto cover = combine(input, "apc", x_scales, r_seq[nx * nw], out_scales);
  cover.report = verify_apc_witness(input.group_space, cover.families, r_seq);
  require_pass(cover);
  return cover;
}

}  // namespace coarsekit
