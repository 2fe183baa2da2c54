#pragma once

#include "cobsec/cobordism_algebra.hpp"
#include "cobsec/obstruction.hpp"
#include "cobsec/spectra_ranks.hpp"
#include "cobsec/symmetric_functions.hpp"

#include <nlohmann/json.hpp>

namespace cobsec {

// Report shapes used by the CLI and job files. Object keys are emitted in
// canonical partition order; exact rationals are strings "p/q".

using Json = nlohmann::ordered_json;

/// Integer as a JSON number when it fits in 64 bits, otherwise as a decimal string.
Json integer_json(const Integer& n);

/// {"[2]": -2, "[1,1]": 1}
Json to_json(const ChernPolynomial& p);
/// {"d": 2, "class": "4*CP2 - 3*CP1^2", "coords": {"[2]": "4", "[1,1]": "-3"}}
Json to_json(const CobordismClass& x);
/// {"[2]": "12", "[1,1]": "0"}
Json to_json(const RationalPartitionMap& values);
/// {"d":3, "r":1, "entries":[{"omega":"[1,1,1]","value":"0"}], "vanishes":true, "witness":null}
Json to_json(const ObstructionReport& report);
Json to_json(const GeneratorCheck& check);
Json to_json(const RankTable& table);
Json to_json(const SplittingCheck& check);
Json to_json(const SMatrix& s);

}  // namespace cobsec
