#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cusco/minimal.hpp"
#include "cusco/specdoc.hpp"

namespace cusco {

struct CommandOptions {
  std::string entity;
  std::optional<Rat> at;                           // csc
  std::optional<Rat> step;                         // sample
  EnvelopeVariant variant = EnvelopeVariant::Inf;  // within-min-usco/-cusco
  int depth = 6;                                   // oracle-agree
};

// Exit code contract: 0 = verdict true / construction succeeded,
// 1 = verdict false / precondition rejected, 2 = input error.
struct Report {
  int exit_code = 0;
  std::string text;
  nlohmann::json data;
};

const std::vector<std::string>& command_names();

Report run_command(const std::string& command, const SpecDoc& doc, const CommandOptions& opt);

}  // namespace cusco
