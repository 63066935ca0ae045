#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dreamgen {

// Shortest decimal string that round-trips a 64-bit float.
std::string format_double(double v);

// Strict parse of a full token; rejects trailing garbage and empty input.
// Accepts inf/nan spellings (callers that require finite values check).
bool parse_double(std::string_view tok, double& out);

// Strict non-negative integer parse of a full token.
bool parse_uint(std::string_view tok, std::uint64_t& out);

// 64-bit FNV-1a over a byte string.
std::uint64_t fnv1a64(std::string_view s);

// Digest of a label set: labels sorted, each followed by '\n', hashed as one
// FNV-1a stream.
std::uint64_t label_set_digest(std::vector<std::string> labels);

std::string to_hex16(std::uint64_t v);
bool from_hex16(std::string_view s, std::uint64_t& out);

// Whitespace tokenizer (space/tab runs as separators, no empty tokens).
std::vector<std::string_view> split_ws(std::string_view line);

} // namespace dreamgen
