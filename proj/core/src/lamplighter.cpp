#include <algorithm>
#include <cstdlib>
#include <map>

#include "coarsekit/group.hpp"

namespace coarsekit {

GroupElement lamplighter_element(const LampConfiguration& config) {
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& [pos, value] : config.lamps) {
    merged[pos] += value;
  }
  Point::Storage out{config.shift};
  for (const auto& [pos, value] : merged) {
    if (value != 0) {
      out.push_back(pos);
      out.push_back(value);
    }
  }
  return Point(std::move(out));
}

LampConfiguration lamp_configuration(const GroupElement& g) {
  LampConfiguration out;
  if (g.size() % 2 != 1) {
    throw ModelMismatch(debug_string(g) + " is not a lamplighter payload");
  }
  out.shift = g[0];
  for (std::size_t i = 1; i + 1 < g.size(); i += 2) {
    out.lamps.emplace_back(g[i], g[i + 1]);
  }
  return out;
}

namespace {

struct Tour {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool left_first = true;
  Distance length = 0;
};

// Shortest walk of the lamplighter from 0 that visits every lit lamp and stops
// at the shift k.
Tour best_tour(const GroupElement& g) {
  std::int64_t k = g[0];
  Tour t;
  t.lo = std::min<std::int64_t>(0, k);
  t.hi = std::max<std::int64_t>(0, k);
  if (g.size() > 1) {
    t.lo = std::min(t.lo, g[1]);
    t.hi = std::max(t.hi, g[g.size() - 2]);
  }
  Distance left = -t.lo + (t.hi - t.lo) + (t.hi - k);
  Distance right = t.hi + (t.hi - t.lo) + (k - t.lo);
  t.left_first = left <= right;
  t.length = std::min(left, right);
  return t;
}

class Lamplighter final : public GroupModel {
 public:
  explicit Lamplighter(Distance cap) : GroupModel(cap) {
    add_generator('a', Point{0, 0, 1});
    add_generator('t', Point{1});
  }

  GroupKind kind() const override { return GroupKind::Lamplighter; }
  std::string name() const override { return "Z wr Z"; }
  GroupElement identity() const override { return Point{0}; }
  bool is_element(const GroupElement& g) const override {
    if (g.size() % 2 != 1) {
      return false;
    }
    for (std::size_t i = 1; i + 1 < g.size(); i += 2) {
      if (g[i + 1] == 0 || (i > 1 && g[i] <= g[i - 2])) {
        return false;
      }
    }
    return true;
  }
  Distance geodesic_length(const GroupElement& g) const override {
    return lamp_mass(g) + best_tour(g).length;
  }
  Distance norm(const GroupElement& g) const override {
    require_element(g);
    return std::abs(g[0]) + lamp_mass(g);
  }
  std::string word(const GroupElement& g) const override {
    require_element(g);
    auto config = lamp_configuration(g);
    std::map<std::int64_t, std::int64_t> lamps(config.lamps.begin(), config.lamps.end());
    Tour t = best_tour(g);
    std::string out;
    std::int64_t cursor = 0;
    auto light = [&]() {
      auto it = lamps.find(cursor);
      if (it != lamps.end()) {
        out.append(static_cast<std::size_t>(std::abs(it->second)), it->second > 0 ? 'a' : 'A');
        lamps.erase(it);
      }
    };
    auto walk_to = [&](std::int64_t target) {
      light();
      while (cursor != target) {
        bool up = target > cursor;
        out += up ? 't' : 'T';
        cursor += up ? 1 : -1;
        light();
      }
    };
    if (t.left_first) {
      walk_to(t.lo);
      walk_to(t.hi);
    } else {
      walk_to(t.hi);
      walk_to(t.lo);
    }
    walk_to(config.shift);
    return out;
  }

 protected:
  // (n, k)(m, l) = (n + m(. - k), k + l)
  GroupElement do_multiply(const GroupElement& g, const GroupElement& h) const override {
    Point::Storage out{g[0] + h[0]};
    std::size_t i = 1;
    std::size_t j = 1;
    while (i + 1 < g.size() || j + 1 < h.size()) {
      bool take_g = j + 1 >= h.size() || (i + 1 < g.size() && g[i] < h[j] + g[0]);
      bool take_h = i + 1 >= g.size() || (j + 1 < h.size() && h[j] + g[0] < g[i]);
      if (take_g) {
        out.push_back(g[i]);
        out.push_back(g[i + 1]);
        i += 2;
      } else if (take_h) {
        out.push_back(h[j] + g[0]);
        out.push_back(h[j + 1]);
        j += 2;
      } else {
        auto value = g[i + 1] + h[j + 1];
        if (value != 0) {
          out.push_back(g[i]);
          out.push_back(value);
        }
        i += 2;
        j += 2;
      }
    }
    return Point(std::move(out));
  }
  GroupElement do_inverse(const GroupElement& g) const override {
    Point::Storage out{-g[0]};
    for (std::size_t i = 1; i + 1 < g.size(); i += 2) {
      out.push_back(g[i] - g[0]);
      out.push_back(-g[i + 1]);
    }
    return Point(std::move(out));
  }

 private:
  static Distance lamp_mass(const GroupElement& g) {
    Distance total = 0;
    for (std::size_t i = 2; i < g.size(); i += 2) {
      total += std::abs(g[i]);
    }
    return total;
  }
};

}  // namespace

GroupPtr make_lamplighter(Distance cap) { return std::make_shared<const Lamplighter>(cap); }

}  // namespace coarsekit
