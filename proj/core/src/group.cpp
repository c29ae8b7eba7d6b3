#include "coarsekit/group.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace coarsekit {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Lattice:
      return "lattice";
    case GroupKind::FreeGroup:
      return "free-group";
    case GroupKind::FreeProduct:
      return "free-product";
    case GroupKind::Lamplighter:
      return "lamplighter";
  }
  return "unknown";
}

Distance GroupModel::norm(const GroupElement&) const {
  throw PreconditionError("norm undefined");
}

void GroupModel::require_element(const GroupElement& g) const {
  if (!is_element(g)) {
    throw ModelMismatch(debug_string(g) + " is not a normal form of " + name());
  }
}

GroupElement GroupModel::multiply(const GroupElement& g, const GroupElement& h) const {
  require_element(g);
  require_element(h);
  return do_multiply(g, h);
}

GroupElement GroupModel::inverse(const GroupElement& g) const {
  require_element(g);
  return do_inverse(g);
}

Distance GroupModel::distance(const GroupElement& g, const GroupElement& h) const {
  return geodesic_length(do_multiply(do_inverse(g), h));
}

GroupElement GroupModel::evaluate(std::string_view word) const {
  GroupElement out = identity();
  for (char c : word) {
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [c](const Generator& s) { return s.letter == c; });
    if (it == generators_.end()) {
      throw PreconditionError(std::string("letter '") + c + "' is not a generator of " + name());
    }
    out = do_multiply(out, it->element);
  }
  return out;
}

std::string GroupModel::alphabet() const {
  std::string out;
  for (const auto& s : generators_) {
    if (std::islower(static_cast<unsigned char>(s.letter))) {
      out += s.letter;
    }
  }
  return out;
}

void GroupModel::add_generator(char letter, const GroupElement& element) {
  generators_.push_back({letter, element});
  generators_.push_back(
      {static_cast<char>(std::toupper(static_cast<unsigned char>(letter))), do_inverse(element)});
}

std::vector<BallEntry> ball(const GroupModel& model, Distance radius) {
  if (radius > model.cap()) {
    throw CapExceeded("ball radius " + std::to_string(radius) + " exceeds cap " +
                      std::to_string(model.cap()) + " for " + model.name());
  }
  std::vector<BallEntry> out;
  if (radius < 0) {
    return out;
  }
  std::unordered_set<GroupElement, PointHash> seen;
  std::vector<GroupElement> frontier{model.identity()};
  seen.insert(frontier.front());
  out.push_back({frontier.front(), 0});
  for (Distance depth = 1; depth <= radius; ++depth) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : model.generators()) {
        auto h = model.multiply(g, s.element);
        if (seen.insert(h).second) {
          out.push_back({h, depth});
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const BallEntry& a, const BallEntry& b) {
    return a.length != b.length ? a.length < b.length : a.element < b.element;
  });
  return out;
}

std::optional<Distance> word_length(const GroupModel& model, const GroupElement& g,
                                    Distance cap) {
  model.require_element(g);
  std::unordered_set<GroupElement, PointHash> seen;
  std::vector<GroupElement> frontier{model.identity()};
  seen.insert(frontier.front());
  for (Distance depth = 0;; ++depth) {
    for (const auto& x : frontier) {
      if (x == g) {
        return depth;
      }
    }
    if (depth == cap || frontier.empty()) {
      return std::nullopt;
    }
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : model.generators()) {
        auto h = model.multiply(x, s.element);
        if (seen.insert(h).second) {
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
}

bool canonical_less(const GroupModel& model, const GroupElement& a, const GroupElement& b) {
  Distance la = model.geodesic_length(a);
  Distance lb = model.geodesic_length(b);
  return la != lb ? la < lb : a < b;
}

void canonical_sort(const GroupModel& model, std::vector<GroupElement>& elements) {
  std::vector<std::pair<Distance, GroupElement>> keyed;
  keyed.reserve(elements.size());
  for (auto& g : elements) {
    keyed.emplace_back(model.geodesic_length(g), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end());
  elements.clear();
  for (auto& [len, g] : keyed) {
    elements.push_back(std::move(g));
  }
}

}  // namespace coarsekit
