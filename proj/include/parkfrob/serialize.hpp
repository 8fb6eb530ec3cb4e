#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "parkfrob/affine.hpp"
#include "parkfrob/laurent.hpp"
#include "parkfrob/parking.hpp"
#include "parkfrob/stacked.hpp"
#include "parkfrob/symfunc.hpp"

namespace parkfrob {

using Json = nlohmann::ordered_json;

/// [[q_exp, t_exp], "coeff"] pairs sorted by exponent.
Json to_json(const LaurentQT& f);
LaurentQT laurent_from_json(const Json& j);

/// {"degree", "basis", "terms": [{"partition", "coeff"}]}.
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const AffinePermutation& w);
Json to_json(const StackedPF& spf);
Json to_json(const Stack& s);
Json pairs_to_json(const std::vector<IndexPair>& pairs);

/// Space separated integers, for CSV cells.
std::string join_ints(const std::vector<int>& v, char sep = ' ');
/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace parkfrob
