#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coarsekit/scalar.hpp"

namespace coarsekit {

/// A nondecreasing, nonnegative control function ℓ.
///
/// Affine controls collapse under composition; tables interpolate linearly
/// between breakpoints, stay constant below the first one, and extend the last
/// segment's slope beyond the last one.
class ControlFunction {
 public:
  struct Breakpoint {
    Scale r;
    Scale value;
  };

  ControlFunction();

  static ControlFunction affine(Scale slope, Scale offset);
  static ControlFunction identity();
  static ControlFunction table(std::vector<Breakpoint> breakpoints);
  /// outer ∘ inner.
  static ControlFunction compose(const ControlFunction& outer, const ControlFunction& inner);

  [[nodiscard]] Scale operator()(const Scale& r) const;

  [[nodiscard]] bool is_affine() const;
  [[nodiscard]] bool is_table() const;
  [[nodiscard]] bool is_composite() const;
  /// Only meaningful for affine controls.
  [[nodiscard]] const Scale& slope() const;
  [[nodiscard]] const Scale& offset() const;
  [[nodiscard]] const std::vector<Breakpoint>& breakpoints() const;
  [[nodiscard]] const ControlFunction& outer() const;
  [[nodiscard]] const ControlFunction& inner() const;

  [[nodiscard]] std::string describe() const;

 private:
  enum class Form { Affine, Table, Composite };
  Form form_ = Form::Affine;
  Scale slope_{1};
  Scale offset_{0};
  std::vector<Breakpoint> breakpoints_;
  std::shared_ptr<const std::pair<ControlFunction, ControlFunction>> parts_;
};

}  // namespace coarsekit
