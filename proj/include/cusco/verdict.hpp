#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cusco/rat.hpp"

namespace cusco {

// Open half-space of the real line: Up = (threshold, +inf),
// Down = (-inf, threshold).
struct Ray {
  enum Dir { Up, Down };
  Dir dir;
  Rat threshold;

  std::string str() const {
    return dir == Up ? "(" + threshold.str() + ", +inf)"
                     : "(-inf, " + threshold.str() + ")";
  }
  friend bool operator==(const Ray&, const Ray&) = default;
};

struct Witness {
  Rat point;
  std::string detail;
  std::optional<Ray> ray;
};

// Structured check result. A false verdict always carries at least one
// witness point failing the defining condition.
struct Verdict {
  bool holds = true;
  std::vector<Witness> witnesses;

  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return {false, {std::move(w)}}; }

  void fail(Witness w) {
    holds = false;
    witnesses.push_back(std::move(w));
  }
  void absorb(const Verdict& other) {
    if (!other.holds) {
      holds = false;
      witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    }
  }
  explicit operator bool() const { return holds; }

  std::string summary() const {
    if (holds) return "holds";
    std::string s = "fails:";
    for (const auto& w : witnesses) {
      s += " [at " + w.point.str() + ": " + w.detail;
      if (w.ray) s += "; ray " + w.ray->str();
      s += "]";
    }
    return s;
  }
};

// Operation rejected because a stated precondition does not hold;
// carries the failing verdict with its witnesses.
struct precondition_error : std::runtime_error {
  Verdict verdict;
  precondition_error(const std::string& what, Verdict v)
      : std::runtime_error(what + ": " + v.summary()), verdict(std::move(v)) {}
};

}  // namespace cusco
