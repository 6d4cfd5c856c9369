#pragma once

// JSON (exact), text and CSV renderings of the library's value types.

#include <string>
#include <vector>

#include <json.hpp>

#include "cellmod/basedring.hpp"
#include "cellmod/center.hpp"
#include "cellmod/coxeter.hpp"
#include "cellmod/cyclo.hpp"
#include "cellmod/fourier.hpp"
#include "cellmod/matrix.hpp"
#include "cellmod/verify.hpp"

namespace cellmod::io {

using Json = nlohmann::ordered_json;

Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json matrix_to_json(const CycMatrix& m, const std::vector<std::string>& labels = {});
CycMatrix matrix_from_json(const Json& j, std::vector<std::string>* labels = nullptr);

Json to_json(const BasedRing& r);
BasedRing ring_from_json(const Json& j);

Json to_json(const CoxeterSystem& sys, const CellDatum& cell);
CellDatum cell_from_json(const Json& j, std::vector<std::string>* labels = nullptr);

Json to_json(const CenterData& cd);
CenterData center_from_json(const Json& j);

Json to_json(const MatchReport& rep);
MatchReport report_from_json(const Json& j);

// decimal CSV with a warning header; digits of the approximation are fixed
std::string matrix_to_csv(const CycMatrix& m, const std::vector<std::string>& labels = {});
// aligned symbolic text
std::string matrix_to_text(const CycMatrix& m, const std::vector<std::string>& labels = {});

}  // namespace cellmod::io
