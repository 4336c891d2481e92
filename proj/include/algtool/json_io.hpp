#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "algtool/clifford.hpp"
#include "algtool/graded.hpp"
#include "algtool/heisenberg.hpp"
#include "algtool/shioda5.hpp"
#include "algtool/sklyanin2.hpp"

namespace algtool {

// nlohmann::json keeps object keys in std::map order, so every dump is key-sorted,
// and it prints doubles in shortest round-trip form.
using Json = nlohmann::json;

Json to_json(const Rational& q);  // "n/d" or "n"
Json to_json(const Cyclotomic& c);  // {"coeffs": [["n","d"], …], "p": p}
Json to_json(const ComplexF& z);  // [re, im]
Json to_json(const std::vector<Cyclotomic>& v);
Json to_json(const std::vector<ComplexF>& v);
Json to_json(const RankProfile& r);
Json to_json(const CharacterTable& t);
Json to_json(const NumericRank& r);
Json to_json(const SpanComparison& s);

Json to_json(const Elimination& e);
Json to_json(const CurvePoint& c);
Json to_json(const PointModuleReport& r);
Json to_json(const Stratification& s);
Json to_json(const MinorIdealReport& r);
Json to_json(const SecantReport& r);

Json to_json(const OrbitReport& r);
Json to_json(const TwoTorsionReport& r);
Json to_json(const SingularReport& r);
Json to_json(const FiberReport& r);

Json error_json(const std::string& code, const std::string& message);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace algtool
