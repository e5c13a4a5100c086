#ifndef GES_JSON_IO_HPP
#define GES_JSON_IO_HPP

#include <json.hpp>

#include "ges/certify.hpp"
#include "ges/channels.hpp"
#include "ges/constructions.hpp"
#include "ges/measures.hpp"

namespace ges {

using Json = nlohmann::json;

// Complex entries serialize as {"re": x, "im": y}; doubles round-trip at full
// precision through nlohmann's shortest-representation output.

Json to_json(const PureState& psi);
PureState pure_state_from_json(const Json& j);

Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

Json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

Json to_json(const Subspace& w);
Subspace subspace_from_json(const Json& j);

Json to_json(const ExactSubspace& w);  // amplitudes as ["re","im"] strings
ExactSubspace exact_subspace_from_json(const Json& j);

Json to_json(const Certificate& c);
Json to_json(const std::vector<Certificate>& cs);
Json to_json(const SubspaceEntanglement& se);
Json to_json(const BoundReport& r);

}  // namespace ges

#endif
