#include "ringswitch/types.hpp"

#include <string>

namespace ringswitch {

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kReduceScatter: return "reduce-scatter";
    case Phase::kAllGather: return "allgather";
  }
  return "?";
}

std::string_view to_string(Collective collective) {
  switch (collective) {
    case Collective::kReduceScatter: return "reduce-scatter";
    case Collective::kAllGather: return "allgather";
    case Collective::kAllReduce: return "allreduce";
  }
  return "?";
}

std::string_view to_string(AllGatherModel model) {
  switch (model) {
    case AllGatherModel::kFullMessage: return "full-message";
    case AllGatherModel::kReverseOfReduceScatter: return "reverse";
  }
  return "?";
}

std::string_view to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kSmallestSatisfying: return "smallest";
    case SelectionRule::kArgmin: return "argmin";
  }
  return "?";
}

Collective parse_collective(std::string_view text) {
  if (text == "reduce-scatter") return Collective::kReduceScatter;
  if (text == "allgather") return Collective::kAllGather;
  if (text == "allreduce") return Collective::kAllReduce;
  throw ParameterError("unknown collective '" + std::string(text) + "'");
}

AllGatherModel parse_allgather_model(std::string_view text) {
  if (text == "full-message") return AllGatherModel::kFullMessage;
  if (text == "reverse") return AllGatherModel::kReverseOfReduceScatter;
  throw ParameterError("unknown allgather model '" + std::string(text) + "'");
}

SelectionRule parse_selection_rule(std::string_view text) {
  if (text == "smallest") return SelectionRule::kSmallestSatisfying;
  if (text == "argmin") return SelectionRule::kArgmin;
  throw ParameterError("unknown selection rule '" + std::string(text) + "'");
}

bool involves(Collective collective, Phase phase) {
  switch (collective) {
    case Collective::kReduceScatter: return phase == Phase::kReduceScatter;
    case Collective::kAllGather: return phase == Phase::kAllGather;
    case Collective::kAllReduce: return true;
  }
  return false;
}

}  // namespace ringswitch
