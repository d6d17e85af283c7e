#include "cusco/specdoc.hpp"

#include <algorithm>
#include <sstream>

namespace cusco {

MultiMap band_between(const PWFun& lower, const PWFun& upper) {
  if (lower.domain_lo() != upper.domain_lo() || lower.domain_hi() != upper.domain_hi())
    throw std::invalid_argument("envelope functions have different domains");
  PWFun lo = lower.refined(upper.breakpoints());
  PWFun hi = upper.refined(lower.breakpoints());
  std::vector<std::vector<Band>> bands;
  for (size_t i = 0; i < lo.piece_count(); ++i)
    bands.push_back({Band{lo.pieces()[i], hi.pieces()[i]}});
  std::vector<std::vector<IntervalValue>> values;
  for (size_t i = 0; i < lo.breakpoints().size(); ++i) {
    if (!lo.bp_values()[i] || !hi.bp_values()[i])
      throw std::invalid_argument("envelope functions must be totally defined");
    values.push_back({IntervalValue{*lo.bp_values()[i], *hi.bp_values()[i]}});
  }
  return MultiMap(lo.breakpoints(), std::move(bands), std::move(values));
}

const PWFun* SpecDoc::find_function(const std::string& name) const {
  for (const auto& [n, f] : functions)
    if (n == name) return &f;
  return nullptr;
}
const MultiMap* SpecDoc::find_map(const std::string& name) const {
  for (const auto& [n, m] : maps)
    if (n == name) return &m;
  return nullptr;
}
const Curve2* SpecDoc::find_curve(const std::string& name) const {
  for (const auto& [n, c] : curves)
    if (n == name) return &c;
  return nullptr;
}
const ConvexPWAffine* SpecDoc::find_convex(const std::string& name) const {
  for (const auto& [n, g] : convexes)
    if (n == name) return &g;
  return nullptr;
}
bool SpecDoc::has(const std::string& name) const {
  return find_function(name) || find_map(name) || find_curve(name) || find_convex(name);
}

namespace {

struct Line {
  int number;
  std::vector<std::string> toks;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::string spaced;
    for (char ch : raw) {
      if (ch == '#') break;
      if (std::string_view("[](){},;=").find(ch) != std::string_view::npos) {
        spaced += ' ';
        spaced += ch;
        spaced += ' ';
      } else {
        spaced += ch;
      }
    }
    std::istringstream iss(spaced);
    Line line{number, {}};
    for (std::string t; iss >> t;) line.toks.push_back(t);
    if (!line.toks.empty()) out.push_back(std::move(line));
  }
  return out;
}

struct Cursor {
  const Line* line;
  size_t i = 0;

  bool done() const { return i >= line->toks.size(); }
  const std::string& peek() const {
    if (done()) throw parse_error(line->number, "unexpected end of line");
    return line->toks[i];
  }
  std::string take() {
    std::string t = peek();
    ++i;
    return t;
  }
  void expect(const std::string& t) {
    if (take() != t) throw parse_error(line->number, "expected '" + t + "'");
  }
  Rat rat() {
    std::string t = take();
    try {
      return Rat::parse(t);
    } catch (const std::invalid_argument&) {
      throw parse_error(line->number, "expected a rational, got '" + t + "'");
    }
  }
  void end() {
    if (!done()) throw parse_error(line->number, "trailing tokens: '" + peek() + "'");
  }
};

Point2 parse_point(Cursor& c) {
  c.expect("(");
  Rat x = c.rat();
  c.expect(",");
  Rat y = c.rat();
  c.expect(")");
  return {x, y};
}

PieceExpr parse_expr(Cursor& c) {
  std::string kind = c.take();
  if (kind == "affine") {
    Rat s = c.rat(), b = c.rat();
    return AffineExpr{s, b};
  }
  if (kind == "recip") {
    Rat p = c.rat(), s = c.rat(), o = c.rat();
    return RecipExpr{p, s, o};
  }
  throw parse_error(c.line->number, "expected 'affine' or 'recip', got '" + kind + "'");
}

std::vector<Rat> parse_rat_list(Cursor& c) {
  c.expect("[");
  std::vector<Rat> out;
  while (c.peek() != "]") {
    if (!out.empty()) c.expect(",");
    out.push_back(c.rat());
  }
  c.expect("]");
  return out;
}

struct Block {
  std::string kind, name;
  int line;
  std::vector<Line> body;
};

std::vector<Block> split_blocks(const std::vector<Line>& lines) {
  std::vector<Block> blocks;
  size_t i = 0;
  while (i < lines.size()) {
    Cursor c{&lines[i]};
    std::string kind = c.take();
    if (kind != "function" && kind != "map" && kind != "curve" && kind != "convex")
      throw parse_error(lines[i].number, "expected a block header, got '" + kind + "'");
    Block b{kind, c.take(), lines[i].number, {}};
    c.end();
    if (b.name == "end")
      throw parse_error(lines[i].number, "missing block name");
    ++i;
    bool closed = false;
    while (i < lines.size()) {
      if (lines[i].toks.size() == 1 && lines[i].toks[0] == "end") {
        closed = true;
        ++i;
        break;
      }
      b.body.push_back(lines[i]);
      ++i;
    }
    if (!closed) throw parse_error(lines.back().number, "block '" + b.name + "' not closed by 'end'");
    blocks.push_back(std::move(b));
  }
  return blocks;
}

template <typename T>
void check_breakpoint_order(const std::vector<Rat>& breaks, const T& line) {
  if (breaks.size() >= 2 && !(breaks[breaks.size() - 2] < breaks.back()))
    throw parse_error(line.number, "breakpoints not strictly increasing");
}

PWFun parse_function_block(const Block& b) {
  std::vector<Rat> breaks;
  std::vector<PieceExpr> pieces;
  std::vector<std::optional<Rat>> values;
  bool expect_at = true;
  for (const Line& line : b.body) {
    Cursor c{&line};
    std::string head = c.peek();
    if (head == "at") {
      if (!expect_at) throw parse_error(line.number, "two breakpoint lines without a piece between");
      c.take();
      breaks.push_back(c.rat());
      check_breakpoint_order(breaks, line);
      if (c.peek() == "undefined") {
        c.take();
        values.push_back(std::nullopt);
      } else {
        c.expect("=");
        values.push_back(c.rat());
      }
      c.end();
      expect_at = false;
    } else {
      if (expect_at) throw parse_error(line.number, "piece line before the first breakpoint");
      pieces.push_back(parse_expr(c));
      c.end();
      expect_at = true;
    }
  }
  if (breaks.empty() || expect_at)
    throw parse_error(b.line, "function block must end with a breakpoint line");
  try {
    return PWFun(std::move(breaks), std::move(pieces), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw parse_error(b.line, std::string("invalid function '") + b.name + "': " + e.what());
  }
}

MultiMap parse_map_block(const Block& b, const std::vector<std::pair<std::string, PWFun>>& fns) {
  if (b.body.empty()) throw parse_error(b.line, "empty map block");
  if (b.body.front().toks[0] == "lower" || b.body.front().toks[0] == "upper") {
    const PWFun *lo = nullptr, *hi = nullptr;
    for (const Line& line : b.body) {
      Cursor c{&line};
      std::string which = c.take();
      c.expect("=");
      std::string name = c.take();
      c.end();
      const PWFun* f = nullptr;
      for (const auto& [n, fn] : fns)
        if (n == name) f = &fn;
      if (!f) throw parse_error(line.number, "unknown function '" + name + "'");
      if (which == "lower")
        lo = f;
      else if (which == "upper")
        hi = f;
      else
        throw parse_error(line.number, "expected 'lower' or 'upper'");
    }
    if (!lo || !hi) throw parse_error(b.line, "map block needs both lower= and upper=");
    try {
      return band_between(*lo, *hi);
    } catch (const std::invalid_argument& e) {
      throw parse_error(b.line, std::string("invalid map '") + b.name + "': " + e.what());
    }
  }

  std::vector<Rat> breaks;
  std::vector<std::vector<Band>> piece_bands;
  std::vector<std::vector<IntervalValue>> values;
  std::vector<Band> current;
  bool seen_at = false;
  for (const Line& line : b.body) {
    Cursor c{&line};
    std::string head = c.take();
    if (head == "at") {
      if (seen_at) {
        if (current.empty()) throw parse_error(line.number, "no band lines for the piece");
        piece_bands.push_back(std::move(current));
        current.clear();
      }
      breaks.push_back(c.rat());
      check_breakpoint_order(breaks, line);
      c.expect("{");
      std::vector<IntervalValue> vs;
      while (c.peek() != "}") {
        c.expect("[");
        Rat lo = c.rat();
        c.expect(",");
        Rat hi = c.rat();
        c.expect("]");
        vs.push_back({lo, hi});
      }
      c.expect("}");
      c.end();
      values.push_back(std::move(vs));
      seen_at = true;
    } else if (head == "band") {
      if (!seen_at) throw parse_error(line.number, "band line before the first breakpoint");
      PieceExpr lo = parse_expr(c);
      c.expect(";");
      PieceExpr hi = parse_expr(c);
      c.end();
      current.push_back(Band{lo, hi});
    } else {
      throw parse_error(line.number, "expected 'at' or 'band', got '" + head + "'");
    }
  }
  if (!current.empty())
    throw parse_error(b.line, "map block must end with a breakpoint line");
  try {
    return MultiMap(std::move(breaks), std::move(piece_bands), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw parse_error(b.line, std::string("invalid map '") + b.name + "': " + e.what());
  } catch (const representability_error& e) {
    throw parse_error(b.line, std::string("invalid map '") + b.name + "': " + e.what());
  }
}

Curve2 parse_curve_block(const Block& b) {
  std::vector<Rat> breaks;
  std::vector<Curve2::Piece> pieces;
  std::vector<std::optional<Point2>> values;
  bool expect_at = true;
  for (const Line& line : b.body) {
    Cursor c{&line};
    std::string head = c.take();
    if (head == "at") {
      if (!expect_at) throw parse_error(line.number, "two breakpoint lines without a piece between");
      breaks.push_back(c.rat());
      check_breakpoint_order(breaks, line);
      if (c.peek() == "undefined") {
        c.take();
        values.push_back(std::nullopt);
      } else {
        c.expect("=");
        values.push_back(parse_point(c));
      }
      c.end();
      expect_at = false;
    } else if (head == "linear") {
      if (expect_at) throw parse_error(line.number, "piece line before the first breakpoint");
      Point2 base = parse_point(c);
      Point2 dir = parse_point(c);
      c.end();
      pieces.push_back({base, dir});
      expect_at = true;
    } else {
      throw parse_error(line.number, "expected 'at' or 'linear', got '" + head + "'");
    }
  }
  if (breaks.empty() || expect_at)
    throw parse_error(b.line, "curve block must end with a breakpoint line");
  try {
    return Curve2(std::move(breaks), std::move(pieces), std::move(values));
  } catch (const std::invalid_argument& e) {
    throw parse_error(b.line, std::string("invalid curve '") + b.name + "': " + e.what());
  }
}

ConvexPWAffine parse_convex_block(const Block& b) {
  std::optional<std::vector<Rat>> breaks, slopes;
  std::optional<Rat> anchor;
  for (const Line& line : b.body) {
    Cursor c{&line};
    std::string head = c.take();
    c.expect("=");
    if (head == "breaks")
      breaks = parse_rat_list(c);
    else if (head == "slopes")
      slopes = parse_rat_list(c);
    else if (head == "anchor")
      anchor = c.rat();
    else
      throw parse_error(line.number, "expected breaks/slopes/anchor, got '" + head + "'");
    c.end();
  }
  if (!breaks || !slopes || !anchor)
    throw parse_error(b.line, "convex block needs breaks, slopes and anchor");
  try {
    return ConvexPWAffine(std::move(*breaks), std::move(*slopes), std::move(*anchor));
  } catch (const std::invalid_argument& e) {
    throw parse_error(b.line, std::string("invalid convex function '") + b.name + "': " + e.what());
  }
}

}  // namespace

SpecDoc parse_spec(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, "no entities");
  SpecDoc doc;
  std::vector<Block> blocks = split_blocks(lines);
  for (const Block& b : blocks)
    if (std::count_if(blocks.begin(), blocks.end(),
                      [&](const Block& o) { return o.name == b.name; }) > 1)
      throw parse_error(b.line, "duplicate entity name '" + b.name + "'");
  // Functions first so that map blocks can reference them in any order.
  for (const Block& b : blocks)
    if (b.kind == "function") doc.functions.emplace_back(b.name, parse_function_block(b));
  for (const Block& b : blocks) {
    if (b.kind == "map") doc.maps.emplace_back(b.name, parse_map_block(b, doc.functions));
    if (b.kind == "curve") doc.curves.emplace_back(b.name, parse_curve_block(b));
    if (b.kind == "convex") doc.convexes.emplace_back(b.name, parse_convex_block(b));
  }
  return doc;
}

namespace {

std::string interval_list_str(const std::vector<IntervalValue>& vs) {
  std::string s = "{";
  for (const auto& iv : vs) s += " [" + iv.lo.str() + ", " + iv.hi.str() + "]";
  return s + " }";
}

}  // namespace

std::string serialize_function(const std::string& name, const PWFun& f) {
  std::string s = "function " + name + "\n";
  for (size_t i = 0; i < f.breakpoints().size(); ++i) {
    const auto& v = f.bp_values()[i];
    s += "  at " + f.breakpoints()[i].str() + (v ? " = " + v->str() : " undefined") + "\n";
    if (i < f.piece_count()) s += "  " + expr_str(f.pieces()[i]) + "\n";
  }
  return s + "end\n";
}

std::string serialize_map(const std::string& name, const MultiMap& m) {
  std::string s = "map " + name + "\n";
  for (size_t i = 0; i < m.breakpoints().size(); ++i) {
    s += "  at " + m.breakpoints()[i].str() + " " + interval_list_str(m.bp_values()[i]) + "\n";
    if (i < m.piece_count())
      for (const Band& b : m.piece_bands()[i])
        s += "  band " + expr_str(b.lower) + " ; " + expr_str(b.upper) + "\n";
  }
  return s + "end\n";
}

std::string serialize_map(const std::string& name, const GraphMap& g) {
  return serialize_map(name, g.as_multimap());
}

std::string serialize_curve(const std::string& name, const Curve2& c) {
  std::string s = "curve " + name + "\n";
  for (size_t i = 0; i < c.breakpoints().size(); ++i) {
    const auto& v = c.bp_values()[i];
    s += "  at " + c.breakpoints()[i].str() + (v ? " = " + v->str() : " undefined") + "\n";
    if (i < c.pieces().size())
      s += "  linear " + c.pieces()[i].base.str() + " " + c.pieces()[i].dir.str() + "\n";
  }
  return s + "end\n";
}

std::string serialize_convex(const std::string& name, const ConvexPWAffine& g) {
  auto list = [](const std::vector<Rat>& xs) {
    std::string s = "[";
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
    return s + "]";
  };
  return "convex " + name + "\n  breaks = " + list(g.breaks) +
         "\n  slopes = " + list(g.slopes) + "\n  anchor = " + g.anchor.str() + "\nend\n";
}

std::string serialize(const SpecDoc& doc) {
  std::string s;
  for (const auto& [n, f] : doc.functions) s += serialize_function(n, f) + "\n";
  for (const auto& [n, m] : doc.maps) s += serialize_map(n, m) + "\n";
  for (const auto& [n, c] : doc.curves) s += serialize_curve(n, c) + "\n";
  for (const auto& [n, g] : doc.convexes) s += serialize_convex(n, g) + "\n";
  return s;
}

}  // namespace cusco
