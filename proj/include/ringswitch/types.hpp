#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringswitch {

/// Raised for any parameter that violates a model precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when reading or writing an input/output file fails.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Phase { kReduceScatter, kAllGather };

enum class Collective { kReduceScatter, kAllGather, kAllReduce };

// Static-phase shape used by the analytical AllGather cost.
//  kFullMessage: static step i has path length 2^i and congestion 2^(L-i).
//  kReverseOfReduceScatter: static step i mirrors reduce-scatter step L-1-i.
enum class AllGatherModel { kFullMessage, kReverseOfReduceScatter };

enum class SelectionRule { kSmallestSatisfying, kArgmin };

std::string_view to_string(Phase phase);
std::string_view to_string(Collective collective);
std::string_view to_string(AllGatherModel model);
std::string_view to_string(SelectionRule rule);

// Parsers accept the CLI spellings ("reduce-scatter", "full-message", "argmin", ...).
Collective parse_collective(std::string_view text);
AllGatherModel parse_allgather_model(std::string_view text);
SelectionRule parse_selection_rule(std::string_view text);

bool involves(Collective collective, Phase phase);

}  // namespace ringswitch
