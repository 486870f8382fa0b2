#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pursuit/expansion_controllers.hpp"
#include "pursuit/game.hpp"
#include "pursuit/params.hpp"
#include "pursuit/reduction.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/trim.hpp"
#include "pursuit/validators.hpp"

namespace pursuit {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

struct Manifest {
  std::string command;
  std::vector<std::string> argv;               // arguments that reproduce the run, output path excluded
  std::map<std::string, std::string> inputs;   // file name -> FNV-1a 64 digest of its bytes
  std::uint64_t seed = 0;
  std::optional<double> wall_clock_seconds;    // only with --record-time
};

Json manifest_json(const Manifest& m);
Manifest manifest_from_json(const Json& j);

/// {"kind", "manifest", "result"}; dump() is the byte form written to files.
Json make_document(const std::string& kind, const Manifest& m, Json result);
std::string dump(const Json& doc);

Json to_json(const Graph& g);
Json to_json(const SolveResult& r);
Json to_json(const TrimCertificate& c);
Json to_json(const Trace& t);
Json to_json(const ReductionInstance& inst, const ReductionSolution& sol);
Json to_json(const ExpansionParams& p);
Json to_json(const ValidatorReport& r);
Json to_json(const BudgetReport& b);

} // namespace pursuit
