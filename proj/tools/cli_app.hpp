#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qbb/cartan.hpp"
#include "qbb/error.hpp"
#include "qbb/lform.hpp"

namespace qbb::cli {

struct EngineConfig {
  CartanDatum datum;
  NuParams nu;
  int max_ht = 6;
  std::string format = "json";
};

// Parses and validates a JSON config. Throws Error(ParseError) on malformed JSON and
// ValidationFailure listing every problem found otherwise.
EngineConfig parse_config(std::string_view text);

// 0 on success, 1 on a failed verification, 2 on a usage or config error.
int exit_code(ErrorCode code);

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbb::cli
