#include "cusco/commands.hpp"

#include "cusco/oracle.hpp"

namespace cusco {

namespace {

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j{{"point", w.point.str()}, {"detail", w.detail}};
  if (w.ray)
    j["ray"] = {{"dir", w.ray->dir == Ray::Up ? "up" : "down"},
                {"threshold", w.ray->threshold.str()}};
  return j;
}

Report verdict_report(const std::string& command, const std::string& entity,
                      const std::string& label, const Verdict& v, const std::string& theorem) {
  Report r;
  r.exit_code = v.holds ? 0 : 1;
  r.text = label + ": " + (v.holds ? "true" : "false") + "\n";
  for (const Witness& w : v.witnesses) {
    r.text += "  witness at " + w.point.str() + ": " + w.detail;
    if (w.ray) r.text += "; separating half-space " + w.ray->str();
    r.text += "\n";
  }
  r.data = {{"command", command},
            {"entity", entity},
            {"verdict", v.holds},
            {"theorem", theorem},
            {"witnesses", nlohmann::json::array()}};
  for (const Witness& w : v.witnesses) r.data["witnesses"].push_back(witness_json(w));
  return r;
}

Report construction_report(const std::string& command, const std::string& entity,
                           std::string serialized, const std::string& theorem) {
  Report r;
  r.text = std::move(serialized);
  r.data = {{"command", command}, {"entity", entity}, {"constructed", true},
            {"theorem", theorem}, {"result", r.text}};
  return r;
}

Report rejection_report(const std::string& command, const std::string& entity,
                        const precondition_error& e, const std::string& theorem) {
  Report r;
  r.exit_code = 1;
  r.text = std::string("rejected: ") + e.what() + "\n";
  r.data = {{"command", command}, {"entity", entity}, {"constructed", false},
            {"theorem", theorem}, {"rejected", e.what()},
            {"witnesses", nlohmann::json::array()}};
  for (const Witness& w : e.verdict.witnesses) r.data["witnesses"].push_back(witness_json(w));
  return r;
}

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const PWFun& need_function(const SpecDoc& doc, const std::string& name) {
  if (const PWFun* f = doc.find_function(name)) return *f;
  throw input_error("no function named '" + name + "'");
}
const MultiMap& need_map(const SpecDoc& doc, const std::string& name) {
  if (const MultiMap* m = doc.find_map(name)) return *m;
  throw input_error("no map named '" + name + "'");
}
const ConvexPWAffine& need_convex(const SpecDoc& doc, const std::string& name) {
  if (const ConvexPWAffine* g = doc.find_convex(name)) return *g;
  throw input_error("no convex function named '" + name + "'");
}

Report run_sample(const SpecDoc& doc, const CommandOptions& opt) {
  if (!opt.step || opt.step->sign() <= 0)
    throw input_error("sample needs a positive --step p/q");
  Report r;
  auto grid = [&](const Rat& lo, const Rat& hi) {
    std::vector<Rat> xs;
    for (Rat x = lo; x <= hi; x += *opt.step) xs.push_back(x);
    return xs;
  };
  r.data = {{"command", "sample"}, {"entity", opt.entity}, {"rows", nlohmann::json::array()}};
  if (const PWFun* f = doc.find_function(opt.entity)) {
    for (const Rat& x : grid(f->domain_lo(), f->domain_hi())) {
      auto y = f->eval(x);
      if (!y) continue;  // undefined breakpoint: no row
      r.text += x.str() + "," + y->str() + "\n";
      r.data["rows"].push_back({x.str(), y->str()});
    }
    return r;
  }
  const MultiMap& m = need_map(doc, opt.entity);
  for (const Rat& x : grid(m.domain_lo(), m.domain_hi())) {
    auto vs = m.value_at(x);
    r.text += x.str() + "," + vs.front().lo.str() + "," + vs.back().hi.str() + "\n";
    r.data["rows"].push_back({x.str(), vs.front().lo.str(), vs.back().hi.str()});
  }
  return r;
}

Report run_oracle_agree(const SpecDoc& doc, const CommandOptions& opt) {
  Report r;
  bool all = true;
  auto add = [&](const std::string& what, const Verdict& closed, const Verdict& orc) {
    bool agree = closed.holds == orc.holds;
    all = all && agree;
    r.text += what + ": closed form " + (closed.holds ? "true" : "false") + ", oracle " +
              (orc.holds ? "true" : "false") + (agree ? " (agree)" : " (DISAGREE)") + "\n";
    r.data["checks"].push_back({{"check", what},
                                {"closed_form", closed.holds},
                                {"oracle", orc.holds},
                                {"agree", agree}});
  };
  r.data = {{"command", "oracle-agree"}, {"entity", opt.entity},
            {"depth", opt.depth}, {"checks", nlohmann::json::array()}};
  if (const PWFun* f = doc.find_function(opt.entity)) {
    add("quasicontinuous", is_quasicontinuous(*f), oracle_quasicontinuous(*f, opt.depth));
    add("hyperplane minimal", is_hyperplane_minimal(*f), oracle_hyperplane_minimal(*f, opt.depth));
  } else if (const MultiMap* m = doc.find_map(opt.entity)) {
    Verdict usc = is_usco(*m);
    add("usco", usc, oracle_usc(*m, opt.depth));
    if (usc.holds) add("minimal usco", is_minimal_usco(*m), submap_search(*m));
  } else if (const Curve2* c = doc.find_curve(opt.entity)) {
    add("hyperplane minimal (planar)", is_planar_hyperplane_minimal(*c),
        oracle_planar_hyperplane_minimal(*c));
  } else {
    throw input_error("no function, map or curve named '" + opt.entity + "'");
  }
  r.exit_code = all ? 0 : 1;
  r.data["agree"] = all;
  return r;
}

Report dispatch(const std::string& command, const SpecDoc& doc, const CommandOptions& opt) {
  const std::string& e = opt.entity;
  if (command == "check-qc") {
    if (const Curve2* c = doc.find_curve(e))
      return verdict_report(command, e, "quasicontinuous", is_planar_quasicontinuous(*c),
                            "QC def (planar)");
    return verdict_report(command, e, "quasicontinuous", is_quasicontinuous(need_function(doc, e)),
                          "QC def");
  }
  if (command == "check-subcont")
    return verdict_report(command, e, "subcontinuous", is_subcontinuous(need_function(doc, e)),
                          "SC def");
  if (command == "check-hpmin") {
    if (const Curve2* c = doc.find_curve(e))
      return verdict_report(command, e, "hyperplane minimal", is_planar_hyperplane_minimal(*c),
                            "HM def (planar)");
    const PWFun& f = need_function(doc, e);
    Report r = verdict_report(command, e, "hyperplane minimal", is_hyperplane_minimal(f), "HM def");
    Verdict qc = is_quasicontinuous(f);
    r.text += "quasicontinuous: " + std::string(qc.holds ? "true" : "false") + "\n";
    r.data["quasicontinuous"] = qc.holds;
    return r;
  }
  if (command == "check-usco")
    return verdict_report(command, e, "usco", is_usco(need_map(doc, e)), "usco def");
  if (command == "check-cusco")
    return verdict_report(command, e, "cusco", is_cusco(need_map(doc, e)), "cusco def");
  if (command == "check-min-usco")
    return verdict_report(command, e, "minimal usco", is_minimal_usco(need_map(doc, e)),
                          "Thm 2.1 (2)");
  if (command == "check-min-cusco")
    return verdict_report(command, e, "minimal cusco", is_minimal_cusco(need_map(doc, e)),
                          "Thm 3.3 (2)");
  if (command == "csc") {
    const PWFun& f = need_function(doc, e);
    if (!opt.at) throw input_error("csc needs --at <point>");
    ExtInterval v = csc_at(f, *opt.at);
    Report r;
    r.text = v.str() + "\n";
    r.data = {{"command", command}, {"entity", e}, {"at", opt.at->str()},
              {"value", v.str()}, {"theorem", "CSC def"}};
    return r;
  }
  if (command == "construct-min-cusco") {
    const PWFun& f = need_function(doc, e);
    std::string tag = f.is_total() ? "Thm 2.3 (2)" : "Thm 2.5 (2)";
    try {
      return construction_report(command, e, serialize_map(e + "_min_cusco", minimal_cusco_from(f)),
                                 tag);
    } catch (const precondition_error& err) {
      return rejection_report(command, e, err, tag);
    }
  }
  if (command == "extract-min-usco") {
    try {
      return construction_report(command, e,
                                 serialize_map(e + "_min_usco", unique_minimal_usco(need_map(doc, e))),
                                 "Thm 4.1");
    } catch (const precondition_error& err) {
      return rejection_report(command, e, err, "Thm 4.1");
    }
  }
  if (command == "within-min-usco") {
    try {
      return construction_report(
          command, e, serialize_map(e + "_within_min_usco", minimal_usco_within(need_map(doc, e), opt.variant)),
          "Rem 2.2");
    } catch (const precondition_error& err) {
      return rejection_report(command, e, err, "Rem 2.2");
    }
  }
  if (command == "within-min-cusco") {
    try {
      return construction_report(
          command, e,
          serialize_map(e + "_within_min_cusco", minimal_cusco_within(need_map(doc, e), opt.variant)),
          "Rem 2.3");
    } catch (const precondition_error& err) {
      return rejection_report(command, e, err, "Rem 2.3");
    }
  }
  if (command == "subdiff") {
    const ConvexPWAffine& g = need_convex(doc, e);
    MultiMap d = subdifferential(g);
    Report r = construction_report(command, e, serialize_map(e + "_subdiff", d), "Thm 2.2 appl");
    CofiniteSet pts = differentiability_points(g);
    std::string ex = "{";
    for (size_t i = 0; i < pts.excluded.size(); ++i)
      ex += (i ? ", " : "") + pts.excluded[i].str();
    ex += "}";
    r.text += "non-differentiability points: " + ex + "\n";
    r.data["non_differentiability_points"] = ex;
    return r;
  }
  if (command == "oracle-agree") return run_oracle_agree(doc, opt);
  if (command == "sample") return run_sample(doc, opt);
  throw input_error("unknown command '" + command + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "check-qc",       "check-subcont",    "check-hpmin",     "check-usco",
      "check-cusco",    "check-min-usco",   "check-min-cusco", "csc",
      "construct-min-cusco", "extract-min-usco", "within-min-usco", "within-min-cusco",
      "subdiff",        "oracle-agree",     "sample"};
  return names;
}

Report run_command(const std::string& command, const SpecDoc& doc, const CommandOptions& opt) {
  auto error_report = [&](const char* what) {
    Report r;
    r.exit_code = 2;
    r.text = std::string("error: ") + what + "\n";
    r.data = {{"command", command}, {"entity", opt.entity}, {"error", what}};
    return r;
  };
  try {
    return dispatch(command, doc, opt);
  } catch (const input_error& err) {
    return error_report(err.what());
  } catch (const std::domain_error& err) {
    return error_report(err.what());
  } catch (const std::invalid_argument& err) {
    return error_report(err.what());
  } catch (const representability_error& err) {
    return error_report(err.what());
  }
}

}  // namespace cusco
