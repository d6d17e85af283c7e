#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cusco/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks and constructions for minimal usco/cusco maps on an interval"};
  app.require_subcommand(1);

  std::string file, entity, at_str, step_str, variant_str = "inf";
  int depth = 6;
  bool json = false;

  for (const std::string& name : cusco::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", file, "spec file")->required();
    sub->add_option("entity", entity, "entity name")->required();
    sub->add_flag("--json", json, "machine-readable report");
    if (name == "csc") sub->add_option("--at", at_str, "evaluation point (p/q)")->required();
    if (name == "sample") sub->add_option("--step", step_str, "grid step (p/q)")->required();
    if (name == "within-min-usco" || name == "within-min-cusco")
      sub->add_option("--variant", variant_str, "inf|sup")->check(CLI::IsMember({"inf", "sup"}));
    if (name == "oracle-agree") sub->add_option("--depth", depth, "basis halving depth");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  cusco::SpecDoc doc;
  cusco::CommandOptions opt;
  try {
    doc = cusco::parse_spec(read_file(file));
    opt.entity = entity;
    if (!at_str.empty()) opt.at = cusco::Rat::parse(at_str);
    if (!step_str.empty()) opt.step = cusco::Rat::parse(step_str);
    opt.variant = variant_str == "sup" ? cusco::EnvelopeVariant::Sup : cusco::EnvelopeVariant::Inf;
    opt.depth = depth;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  cusco::Report report = cusco::run_command(command, doc, opt);
  if (report.exit_code == 2) {
    std::cerr << report.text;
    return 2;
  }
  if (json)
    std::cout << report.data.dump(2) << "\n";
  else
    std::cout << report.text;
  return report.exit_code;
}
