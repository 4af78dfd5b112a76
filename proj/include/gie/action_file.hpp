#ifndef GIE_ACTION_FILE_HPP
#define GIE_ACTION_FILE_HPP

#include <gie/action.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace gie {

using Json = nlohmann::ordered_json;

// "p/q" strings; JSON integers are accepted on input. Throws ParseError.
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);

// Plain string for rationals, {"rational", "logs": [{"ln", "coeff"}]} otherwise.
Json grand_constant_to_json(const GrandConstant& c);
GrandConstant grand_constant_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// "12,13" for rows {0,1}, cols {0,2}.
std::string index_key(const std::vector<int>& rows, const std::vector<int>& cols);
// Parses a key for k-subsets of {1..n}; returns 0-based subsets. Throws ParseError.
std::pair<std::vector<int>, std::vector<int>> parse_index_key(const std::string& key, int n, int k);

// Block k >= 2 as a sparse object of nonzero entries.
Json block_to_json(const RatMatrix& block, int n, int k);

// Fields n, A0, A2, then A4, A6, ... Higher blocks that vanish are omitted;
// a nonzero 1x1 block of order 8 or more is written as a bare string.
Json action_to_json(const ActionSpec& spec);
// Ignores unknown fields. Throws ParseError, BadShape.
ActionSpec action_from_json(const Json& j);

std::string print_action_file(const ActionSpec& spec);
ActionSpec parse_action_file(const std::string& text);

Json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace gie

#endif
