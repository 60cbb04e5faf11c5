#pragma once

#include <string>

#include "mms/bagfill.hpp"

namespace mms {

/// Machine-readable pipeline trace: normalization summary, reduction steps
/// with pattern tags and good ids, classification, branch, matching,
/// per-bag fill events and the final allocation.
std::string trace_to_json(const PipelineTrace& trace);

void save_trace(const PipelineTrace& trace, const std::string& path);

}  // namespace mms
