#pragma once

namespace shannon1d::detail {

extern const char* const reference_values_json;

}  // namespace shannon1d::detail
