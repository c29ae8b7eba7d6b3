#include <array>
#include <cctype>
#include <map>

#include "coarsekit/group.hpp"

namespace coarsekit {

std::vector<Syllable> syllables(const GroupElement& g) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < g.size()) {
    if (i + 1 >= g.size() || g[i + 1] < 0 || i + 2 + static_cast<std::size_t>(g[i + 1]) > g.size()) {
      throw ModelMismatch(debug_string(g) + " is not a free product payload");
    }
    auto len = static_cast<std::size_t>(g[i + 1]);
    Point::Storage part(g.coords().begin() + static_cast<std::ptrdiff_t>(i + 2),
                        g.coords().begin() + static_cast<std::ptrdiff_t>(i + 2 + len));
    out.push_back({static_cast<int>(g[i]), Point(std::move(part))});
    i += 2 + len;
  }
  return out;
}

GroupElement from_syllables(const std::vector<Syllable>& parts) {
  Point::Storage out;
  for (const auto& s : parts) {
    out.push_back(s.factor);
    out.push_back(static_cast<std::int64_t>(s.element.size()));
    out.insert(out.end(), s.element.coords().begin(), s.element.coords().end());
  }
  return Point(std::move(out));
}

namespace {

class FreeProduct final : public GroupModel {
 public:
  FreeProduct(GroupPtr left, GroupPtr right, Distance cap)
      : GroupModel(cap), factors_{std::move(left), std::move(right)} {
    char next = 'a';
    for (int f = 0; f < 2; ++f) {
      for (char c : factors_[static_cast<std::size_t>(f)]->alphabet()) {
        if (next > 'z') {
          throw PreconditionError("free product has more than 26 generators");
        }
        rename_[static_cast<std::size_t>(f)][c] = next;
        auto element = factors_[static_cast<std::size_t>(f)]->evaluate(std::string(1, c));
        pending_.push_back({next, from_syllables({{f, element}})});
        ++next;
      }
    }
    for (const auto& s : pending_) {
      add_generator(s.letter, s.element);
    }
  }

  const std::array<GroupPtr, 2>& factors() const { return factors_; }

  GroupKind kind() const override { return GroupKind::FreeProduct; }
  std::string name() const override {
    return wrap(factors_[0]->name()) + "*" + wrap(factors_[1]->name());
  }
  GroupElement identity() const override { return Point{}; }
  bool is_element(const GroupElement& g) const override {
    std::vector<Syllable> parts;
    try {
      parts = syllables(g);
    } catch (const ModelMismatch&) {
      return false;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& s = parts[i];
      if (s.factor < 0 || s.factor > 1) {
        return false;
      }
      const auto& model = *factors_[static_cast<std::size_t>(s.factor)];
      if (!model.is_element(s.element) || s.element == model.identity()) {
        return false;
      }
      if (i > 0 && parts[i - 1].factor == s.factor) {
        return false;
      }
    }
    return true;
  }
  Distance geodesic_length(const GroupElement& g) const override {
    Distance total = 0;
    for (const auto& s : syllables(g)) {
      total += factors_[static_cast<std::size_t>(s.factor)]->geodesic_length(s.element);
    }
    return total;
  }
  std::string word(const GroupElement& g) const override {
    std::string out;
    for (const auto& s : syllables(g)) {
      const auto& table = rename_[static_cast<std::size_t>(s.factor)];
      for (char c : factors_[static_cast<std::size_t>(s.factor)]->word(s.element)) {
        auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        char mapped = table.at(lower);
        out += c == lower ? mapped : static_cast<char>(std::toupper(static_cast<unsigned char>(mapped)));
      }
    }
    return out;
  }

 protected:
  GroupElement do_multiply(const GroupElement& g, const GroupElement& h) const override {
    auto out = syllables(g);
    for (auto& s : syllables(h)) {
      if (!out.empty() && out.back().factor == s.factor) {
        const auto& model = *factors_[static_cast<std::size_t>(s.factor)];
        auto merged = model.multiply(out.back().element, s.element);
        if (merged == model.identity()) {
          out.pop_back();
        } else {
          out.back().element = std::move(merged);
        }
      } else {
        out.push_back(std::move(s));
      }
    }
    return from_syllables(out);
  }
  GroupElement do_inverse(const GroupElement& g) const override {
    auto parts = syllables(g);
    std::vector<Syllable> out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      out.push_back({it->factor, factors_[static_cast<std::size_t>(it->factor)]->inverse(it->element)});
    }
    return from_syllables(out);
  }

 private:
  static std::string wrap(const std::string& n) {
    return n.find_first_of(" *") == std::string::npos ? n : "(" + n + ")";
  }

  std::array<GroupPtr, 2> factors_;
  std::array<std::map<char, char>, 2> rename_;
  std::vector<Generator> pending_;
};

}  // namespace

GroupPtr make_free_product(GroupPtr left, GroupPtr right, Distance cap) {
  if (!left || !right) {
    throw PreconditionError("free product needs two factor models");
  }
  return std::make_shared<const FreeProduct>(std::move(left), std::move(right), cap);
}

std::pair<GroupPtr, GroupPtr> free_product_factors(const GroupModel& model) {
  const auto* fp = dynamic_cast<const FreeProduct*>(&model);
  if (fp == nullptr) {
    throw ModelMismatch(model.name() + " is not a free product");
  }
  return {fp->factors()[0], fp->factors()[1]};
}

}  // namespace coarsekit
