#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cybug/parse.hpp"

namespace cybug::sim {

// The reference scripts: ghazu_corpus (the historical listing, needs the
// lenient parser), ghazu_spec (the same strategy written cleanly), idle,
// wanderer.
std::vector<std::string_view> builtin_bot_names();

// Script source, or nullopt for an unknown name.
std::optional<std::string_view> builtin_source(std::string_view name);

// Parsed program, lenient mode. nullopt for an unknown name.
std::optional<caicl::Program> builtin_bot(std::string_view name);

}  // namespace cybug::sim
