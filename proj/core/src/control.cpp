#include "coarsekit/control.hpp"

namespace coarsekit {

ControlFunction::ControlFunction() = default;

ControlFunction ControlFunction::affine(Scale slope, Scale offset) {
  if (slope < 0 || offset < 0) {
    throw PreconditionError("affine control needs nonnegative slope and offset");
  }
  ControlFunction f;
  f.slope_ = slope;
  f.offset_ = offset;
  return f;
}

ControlFunction ControlFunction::identity() { return affine(1, 0); }

ControlFunction ControlFunction::table(std::vector<Breakpoint> breakpoints) {
  if (breakpoints.empty()) {
    throw PreconditionError("control table needs a breakpoint");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i].r < 0 || breakpoints[i].value < 0) {
      throw PreconditionError("control table entries must be nonnegative");
    }
    if (i > 0 && breakpoints[i].r <= breakpoints[i - 1].r) {
      throw PreconditionError("control table radii must increase");
    }
    if (i > 0 && breakpoints[i].value < breakpoints[i - 1].value) {
      throw PreconditionError("control table values must not decrease");
    }
  }
  ControlFunction f;
  f.form_ = Form::Table;
  f.breakpoints_ = std::move(breakpoints);
  return f;
}

ControlFunction ControlFunction::compose(const ControlFunction& outer,
                                         const ControlFunction& inner) {
  if (outer.is_affine() && inner.is_affine()) {
    return affine(outer.slope_ * inner.slope_, outer.slope_ * inner.offset_ + outer.offset_);
  }
  ControlFunction f;
  f.form_ = Form::Composite;
  f.parts_ = std::make_shared<const std::pair<ControlFunction, ControlFunction>>(outer, inner);
  return f;
}

Scale ControlFunction::operator()(const Scale& r) const {
  switch (form_) {
    case Form::Affine:
      return slope_ * r + offset_;
    case Form::Composite:
      return parts_->first(parts_->second(r));
    case Form::Table:
      break;
  }
  const auto& b = breakpoints_;
  if (r <= b.front().r) {
    return b.front().value;
  }
  std::size_t hi = 1;
  while (hi < b.size() && b[hi].r < r) {
    ++hi;
  }
  if (hi == b.size()) {
    if (b.size() == 1) {
      return b.front().value;
    }
    hi = b.size() - 1;
  }
  const auto& p = b[hi - 1];
  const auto& q = b[hi];
  return p.value + (q.value - p.value) * (r - p.r) / (q.r - p.r);
}

bool ControlFunction::is_affine() const { return form_ == Form::Affine; }
bool ControlFunction::is_table() const { return form_ == Form::Table; }
bool ControlFunction::is_composite() const { return form_ == Form::Composite; }
const Scale& ControlFunction::slope() const { return slope_; }
const Scale& ControlFunction::offset() const { return offset_; }
const std::vector<ControlFunction::Breakpoint>& ControlFunction::breakpoints() const {
  return breakpoints_;
}
const ControlFunction& ControlFunction::outer() const { return parts_->first; }
const ControlFunction& ControlFunction::inner() const { return parts_->second; }

std::string ControlFunction::describe() const {
  switch (form_) {
    case Form::Affine:
      return to_string(slope_) + "*r+" + to_string(offset_);
    case Form::Composite:
      return "(" + outer().describe() + ")o(" + inner().describe() + ")";
    case Form::Table:
      break;
  }
  std::string out = "table[";
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += to_string(breakpoints_[i].r) + ":" + to_string(breakpoints_[i].value);
  }
  return out + "]";
}

}  // namespace coarsekit
