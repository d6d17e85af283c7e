#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cusco/convex2d.hpp"
#include "cusco/pwfun.hpp"
#include "cusco/subdiff.hpp"
#include "cusco/svmap.hpp"

namespace cusco {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_in, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_in) + ": " + msg), line(line_in) {}
};

// Single band between two totally defined piecewise functions; the
// common refinement of their grids becomes the map grid.
MultiMap band_between(const PWFun& lower, const PWFun& upper);

// Parsed collection of named entities from a plain-text spec file.
// Blocks: function/map/curve/convex <name> ... end. Rationals are
// always "p" or "p/q"; no floating point anywhere.
struct SpecDoc {
  std::vector<std::pair<std::string, PWFun>> functions;
  std::vector<std::pair<std::string, MultiMap>> maps;
  std::vector<std::pair<std::string, Curve2>> curves;
  std::vector<std::pair<std::string, ConvexPWAffine>> convexes;

  const PWFun* find_function(const std::string& name) const;
  const MultiMap* find_map(const std::string& name) const;
  const Curve2* find_curve(const std::string& name) const;
  const ConvexPWAffine* find_convex(const std::string& name) const;
  bool has(const std::string& name) const;
};

SpecDoc parse_spec(std::string_view text);

std::string serialize_function(const std::string& name, const PWFun& f);
std::string serialize_map(const std::string& name, const MultiMap& m);
std::string serialize_map(const std::string& name, const GraphMap& g);
std::string serialize_curve(const std::string& name, const Curve2& c);
std::string serialize_convex(const std::string& name, const ConvexPWAffine& g);
std::string serialize(const SpecDoc& doc);

}  // namespace cusco
