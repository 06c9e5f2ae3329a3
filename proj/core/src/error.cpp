#include "frechet/error.hpp"

namespace frechet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::AllWeightsZero: return "AllWeightsZero";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::OrderBelowOne: return "OrderBelowOne";
    case ErrorCode::WeightBelowOne: return "WeightBelowOne";
    case ErrorCode::WeightSumZero: return "WeightSumZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidUtf8: return "InvalidUtf8";
  }
  return "Unknown";
}

}  // namespace frechet
