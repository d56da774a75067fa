#pragma once

#include "nwb/decide.hpp"
#include "nwb/enumerate.hpp"
#include "nwb/neighborhood.hpp"
#include "nwb/prover.hpp"
#include "nwb/sandbox.hpp"
#include "nwb/verify.hpp"

#include <json.hpp>

#include <stdexcept>

namespace nwb
{

using json = nlohmann::json;

// Malformed JSON document (structure, not syntax).
class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] json to_json( const WorldSet& s );
[[nodiscard]] json to_json( const Frame& fr );
[[nodiscard]] json to_json( const Model& m );
[[nodiscard]] json to_json( const Verdict& v );
[[nodiscard]] json to_json( const Catalog& cat );
[[nodiscard]] json to_json( const Scenario& sc );
[[nodiscard]] json to_json( const GTrace& t );
[[nodiscard]] json to_json( const CheckReport& r );
[[nodiscard]] json to_json( const FrameCheck& c );
[[nodiscard]] json to_json( const DerivationCheck& c );
[[nodiscard]] json stage_to_json( const Stage& s );

// Readers accept exactly what the writers produce; `frame_from_json` also
// accepts a full model document and ignores its valuation.
[[nodiscard]] Frame frame_from_json( const json& j );
[[nodiscard]] Model model_from_json( const json& j );
[[nodiscard]] Verdict verdict_from_json( const json& j );
[[nodiscard]] Catalog catalog_from_json( const json& j, Logic l );
[[nodiscard]] Derivation derivation_from_json( const json& j, Logic l );
[[nodiscard]] Scenario scenario_from_json( const json& j );
[[nodiscard]] Stage stage_from_json( const json& j );

} // namespace nwb
