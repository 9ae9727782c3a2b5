#pragma once

#include <filesystem>

#include <json.hpp>

#include "scg/setcolor.hpp"

namespace scg {

using nlohmann::json;

/// {"builtin": name} | {"product": [A, B]} | {"elements": [...], "le": [[x, y], ...]}
json poset_to_json(const PosetRef& p);
PosetRef poset_from_json(const json& j);

/// {"poset": ..., "cells": [...], "payoff": expr}. Malformed input throws invalid_board.
json board_to_json(const SetColoringGame& s);
SetColoringGame board_from_json(const json& j);

SetColoringGame read_board(const std::filesystem::path& path);
void write_board(const std::filesystem::path& path, const SetColoringGame& s);

/// Reads a JSON document; throws syntax_error with the parser's message.
json read_json(const std::filesystem::path& path);

}  // namespace scg
