#pragma once

#include <string>

#include "json.hpp"

namespace hf {

/// Objects are opened one key per line down to depth 2, arrays of containers
/// one element per line; anything deeper is written compactly.
std::string write_json(const nlohmann::ordered_json& v);

}  // namespace hf
