#include <map>

#include "coarsekit/extension.hpp"

namespace coarsekit {
namespace {

std::array<SubsetFamily, 2> to_families(std::map<std::int64_t, std::vector<Point>>& blocks,
                                        const std::array<Scale, 2>& disjointness,
                                        std::int64_t period) {
  std::array<SubsetFamily, 2> out;
  for (auto& [block, pts] : blocks) {
    auto f = static_cast<std::size_t>(((block % period) + period) % period);
    out[f].members.emplace_back(std::move(pts));
  }
  out[0].claimed_disjointness = disjointness[0];
  out[1].claimed_disjointness = disjointness[1];
  return out;
}

}  // namespace

std::array<SubsetFamily, 2> interval_cover(std::span<const Point> points, std::int64_t L,
                                           std::int64_t phase, std::size_t axis) {
  if (L < 1) {
    throw PreconditionError("interval length must be at least 1");
  }
  std::map<std::int64_t, std::vector<Point>> blocks;
  for (const auto& p : points) {
    blocks[floor_div(p[axis] - phase, L)].push_back(p);
  }
  return to_families(blocks, {Scale(L), Scale(L)}, 2);
}

std::array<SubsetFamily, 2> interval_cover_generator(const MetricSpace& space, std::int64_t L,
                                                     std::int64_t phase, std::size_t axis) {
  auto out = interval_cover(space.window(), L, phase, axis);
  if (space.dimension() == 1) {
    out[0].claimed_bound = Scale(L - 1);
    out[1].claimed_bound = Scale(L - 1);
  }
  return out;
}

std::array<SubsetFamily, 2> two_scale_interval_cover(std::span<const Point> points,
                                                     std::int64_t L0, std::int64_t L1,
                                                     std::int64_t phase, std::size_t axis) {
  if (L0 < 1 || L1 < 1) {
    throw PreconditionError("interval lengths must be at least 1");
  }
  const std::int64_t period = L0 + L1;
  std::map<std::int64_t, std::vector<Point>> blocks;
  for (const auto& p : points) {
    std::int64_t shifted = p[axis] - phase;
    std::int64_t cycle = floor_div(shifted, period);
    std::int64_t offset = shifted - cycle * period;
    blocks[2 * cycle + (offset < L0 ? 0 : 1)].push_back(p);
  }
  auto out = to_families(blocks, {Scale(L1), Scale(L0)}, 2);
  return out;
}

}  // namespace coarsekit
