#pragma once

#include <json.hpp>

#include "lefkit/gr.hpp"
#include "lefkit/jordan.hpp"
#include "lefkit/lefschetz.hpp"
#include "lefkit/parse.hpp"

namespace lefkit {

/// Reports use insertion-ordered JSON so identical inputs and seed produce
/// byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const HilbertSeries& h);
Json to_json(const LinearForm& g, const VariableSet& vars);
Json to_json(const LefschetzStats& s);
Json to_json(const LefschetzVerdict& v, const VariableSet& vars);
Json to_json(const JordanProfile& p);
Json to_json(const CSMDecomposition& d, const VariableSet& vars);
Json to_json(const CsmStructureReport& r, const VariableSet& vars);
Json to_json(const CsmSlpTransferReport& r, const VariableSet& vars);
Json to_json(const PrincipalCsmReport& r, const VariableSet& vars);
Json to_json(const JordanInvarianceReport& r);
Json to_json(const LefschetzTransferReport& r, const VariableSet& vars);
Json to_json(const HilbertTripleReport& r);
Json to_json(const TensorWlpReport& r, const VariableSet& vars);

}  // namespace lefkit
