#pragma once

#include "json.hpp"

#include "degsim/constructions.hpp"
#include "degsim/graph.hpp"
#include "degsim/search.hpp"
#include "degsim/similarity.hpp"
#include "degsim/snf.hpp"
#include "degsim/spectra.hpp"
#include "degsim/srg.hpp"

namespace degsim {

using Json = nlohmann::ordered_json;

// Exact numbers are strings ("-3", "7/2"); integer counts are JSON numbers.
Json to_json(const Rational& r);
Json to_json(const UniPoly& p);      // {"coeffs": [c0, c1, ...], "text"}
Json to_json(const BiPoly& p, const std::string& second = "mu");  // {"coeffs": [[c_00, c_01, ...], ...] indexed [t][mu], "text"}
Json to_json(const TPoly& p);        // primitive integer form, as BiPoly
Json to_json(const RatMatrix& m);    // row-major arrays of strings
Json to_json(const SNFResult& s);
Json to_json(const SpectralProfile& p);
Json to_json(const InvariantsReport& r);
Json to_json(const DsDecision& d);
Json to_json(const SweepReport& r);
Json to_json(const SrgParams& p);
Json to_json(const ValidationReport& r);
Json to_json(const ImplicationAudit& a);
Json to_json(const SearchReport& r);
Json to_json(const FamilyInstance& i);
Json to_json(const FamilyDsReport& r);

}  // namespace degsim
