#include "coarsekit/group.hpp"

namespace coarsekit {
namespace {

MetricSpace::Definition cayley_definition(const GroupPtr& model) {
  if (!model) {
    throw PreconditionError("cayley space needs a group model");
  }
  MetricSpace::Definition def;
  def.kind = SpaceKind::Cayley;
  def.universe_id = model->name() + "<" + model->alphabet() + ">";
  def.group = model;
  const GroupModel* g = model.get();
  def.distance = [g](const Point& a, const Point& b) { return g->distance(a, b); };
  def.contains = [g](const Point& p) { return g->is_element(p); };
  return def;
}

}  // namespace

MetricSpace cayley_space(const GroupPtr& model, Distance radius) {
  auto entries = ball(*model, radius);
  std::vector<GroupElement> window;
  window.reserve(entries.size());
  for (auto& e : entries) {
    window.push_back(std::move(e.element));
  }
  return MetricSpace(cayley_definition(model), std::move(window),
                     "ball(" + std::to_string(radius) + ")",
                     WindowBall{model->identity(), radius});
}

MetricSpace cayley_space(const GroupPtr& model, std::vector<GroupElement> window,
                         std::string window_id) {
  return MetricSpace(cayley_definition(model), std::move(window), std::move(window_id));
}

}  // namespace coarsekit
