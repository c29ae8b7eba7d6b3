#include <cstdlib>

#include "coarsekit/group.hpp"

namespace coarsekit {
namespace {

class Lattice final : public GroupModel {
 public:
  Lattice(int dimension, Distance cap) : GroupModel(cap), dim_(dimension) {
    for (int i = 0; i < dim_; ++i) {
      Point::Storage e(static_cast<std::size_t>(dim_), 0);
      e[static_cast<std::size_t>(i)] = 1;
      add_generator(static_cast<char>('a' + i), Point(e));
    }
  }

  GroupKind kind() const override { return GroupKind::Lattice; }
  std::string name() const override { return dim_ == 1 ? "Z" : "Z^" + std::to_string(dim_); }
  GroupElement identity() const override {
    return Point(Point::Storage(static_cast<std::size_t>(dim_), 0));
  }
  bool is_element(const GroupElement& g) const override {
    return g.size() == static_cast<std::size_t>(dim_);
  }
  Distance geodesic_length(const GroupElement& g) const override {
    Distance total = 0;
    for (auto c : g.coords()) {
      total += std::abs(c);
    }
    return total;
  }
  std::string word(const GroupElement& g) const override {
    std::string out;
    for (int i = 0; i < dim_; ++i) {
      auto c = g[static_cast<std::size_t>(i)];
      out.append(static_cast<std::size_t>(std::abs(c)), static_cast<char>((c < 0 ? 'A' : 'a') + i));
    }
    return out;
  }

 protected:
  GroupElement do_multiply(const GroupElement& g, const GroupElement& h) const override {
    Point::Storage out(g.coords());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += h[i];
    }
    return Point(std::move(out));
  }
  GroupElement do_inverse(const GroupElement& g) const override {
    Point::Storage out(g.coords());
    for (auto& c : out) {
      c = -c;
    }
    return Point(std::move(out));
  }

 private:
  int dim_;
};

}  // namespace

GroupPtr make_lattice(int dimension, Distance cap) {
  if (dimension < 1 || dimension > 26) {
    throw PreconditionError("lattice dimension must be in 1..26");
  }
  return std::make_shared<const Lattice>(dimension, cap);
}

}  // namespace coarsekit
