#include "cusco/analysis.hpp"

namespace cusco {

namespace {

std::string limit_set_str(const std::optional<ExtReal>& l, const std::optional<ExtReal>& r) {
  std::string s = "{";
  if (l) s += l->str();
  if (l && r) s += ", ";
  if (r) s += r->str();
  return s + "}";
}

}  // namespace

Verdict is_quasicontinuous(const PWFun& f) {
  Verdict v;
  const auto& breaks = f.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    const auto& val = f.bp_values()[i];
    if (!val) continue;  // outside dom f: no condition in the induced topology
    auto [l, r] = f.one_sided_limits(breaks[i]);
    ExtReal fv{*val};
    bool ok = (l && l->is_finite() && *l == fv) || (r && r->is_finite() && *r == fv);
    if (!ok)
      v.fail({breaks[i],
              "value " + val->str() + " not among one-sided limits " + limit_set_str(l, r),
              std::nullopt});
  }
  return v;
}

Verdict is_subcontinuous(const PWFun& f) {
  Verdict v;
  const auto& breaks = f.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    auto [l, r] = f.one_sided_limits(breaks[i]);
    if (l && !l->is_finite())
      v.fail({breaks[i], "left limit " + l->str(), std::nullopt});
    if (r && !r->is_finite())
      v.fail({breaks[i], "right limit " + r->str(), std::nullopt});
  }
  return v;
}

Verdict is_hyperplane_minimal(const PWFun& f) {
  Verdict v;
  const auto& breaks = f.breakpoints();
  for (size_t i = 0; i < breaks.size(); ++i) {
    const auto& val = f.bp_values()[i];
    if (!val) continue;
    auto [l, r] = f.one_sided_limits(breaks[i]);
    ExtReal fv{*val};
    if (l && r) {
      ExtReal lo = min(*l, *r), hi = max(*l, *r);
      if (fv < lo) {
        // nearby values stay above; a down ray between them separates
        Rat lambda = lo.is_finite() ? (*val + lo.finite()) / Rat(2) : *val + Rat(1);
        v.fail({breaks[i],
                "value " + val->str() + " below both one-sided limits " + limit_set_str(l, r),
                Ray{Ray::Down, lambda}});
      } else if (fv > hi) {
        Rat lambda = hi.is_finite() ? (*val + hi.finite()) / Rat(2) : *val - Rat(1);
        v.fail({breaks[i],
                "value " + val->str() + " above both one-sided limits " + limit_set_str(l, r),
                Ray{Ray::Up, lambda}});
      }
    } else {
      const ExtReal& lim = l ? *l : *r;
      if (lim.is_finite() && lim == fv) continue;
      std::optional<Ray> ray;
      if (lim.is_plus_inf())
        ray = Ray{Ray::Down, *val + Rat(1)};
      else if (lim.is_minus_inf())
        ray = Ray{Ray::Up, *val - Rat(1)};
      else if (lim > fv)
        ray = Ray{Ray::Down, (*val + lim.finite()) / Rat(2)};
      else
        ray = Ray{Ray::Up, (*val + lim.finite()) / Rat(2)};
      v.fail({breaks[i],
              "endpoint value " + val->str() + " differs from one-sided limit " + lim.str(),
              ray});
    }
  }
  return v;
}

}  // namespace cusco
