#include <cstdlib>

#include "coarsekit/group.hpp"

namespace coarsekit {
namespace {

class FreeGroup final : public GroupModel {
 public:
  FreeGroup(int rank, Distance cap) : GroupModel(cap), rank_(rank) {
    for (int i = 0; i < rank_; ++i) {
      add_generator(static_cast<char>('a' + i), Point{i + 1});
    }
  }

  GroupKind kind() const override { return GroupKind::FreeGroup; }
  std::string name() const override { return "F" + std::to_string(rank_); }
  GroupElement identity() const override { return Point{}; }
  bool is_element(const GroupElement& g) const override {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0 || std::abs(g[i]) > rank_) {
        return false;
      }
      if (i > 0 && g[i] == -g[i - 1]) {
        return false;
      }
    }
    return true;
  }
  Distance geodesic_length(const GroupElement& g) const override {
    return static_cast<Distance>(g.size());
  }
  std::string word(const GroupElement& g) const override {
    std::string out;
    for (auto c : g.coords()) {
      out += static_cast<char>((c < 0 ? 'A' : 'a') + std::abs(c) - 1);
    }
    return out;
  }

 protected:
  GroupElement do_multiply(const GroupElement& g, const GroupElement& h) const override {
    Point::Storage out(g.coords());
    for (auto c : h.coords()) {
      if (!out.empty() && out.back() == -c) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    return Point(std::move(out));
  }
  GroupElement do_inverse(const GroupElement& g) const override {
    Point::Storage out;
    for (auto it = g.coords().rbegin(); it != g.coords().rend(); ++it) {
      out.push_back(-*it);
    }
    return Point(std::move(out));
  }

 private:
  int rank_;
};

}  // namespace

GroupPtr make_free_group(int rank, Distance cap) {
  if (rank < 1 || rank > 26) {
    throw PreconditionError("free group rank must be in 1..26");
  }
  return std::make_shared<const FreeGroup>(rank, cap);
}

}  // namespace coarsekit
