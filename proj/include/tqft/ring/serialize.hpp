#pragma once

#include <json.hpp>

#include "tqft/ring/cyclotomic.hpp"
#include "tqft/ring/laurent.hpp"
#include "tqft/ring/loc_laurent.hpp"

namespace tqft::ring {

// JSON layout shared by all exact scalars:
//   {"var": "A", "coeffs": {"<exp>": "<int>", ...}, "den": "<int>", "p": <int>}
// IntLaurent uses var "A" and no "p". A CycNum lists power-basis coordinates of
// zeta_n; var is "A" when n = 2p (zeta_n = A) and "zeta_4p" when n = 4p.
// A LocLaurent adds "one_plus_A_power": k.

nlohmann::json to_json(const IntLaurent& f);
IntLaurent laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CycNum& x);
CycNum cycnum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LocLaurent& x);
LocLaurent loc_laurent_from_json(const nlohmann::json& j);

}  // namespace tqft::ring
